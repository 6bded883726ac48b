use crate::blocked::ColouredPointSet;
use crate::error::{Error, Result};
use crate::geom::PointConfig;

struct Entry {
    name: &'static str,
    points: &'static [[i64; 2]],
    colours: &'static [usize],
}

// K222, K4222, K3333 and K3333B were found by grid search and frozen here.
const REGISTRY: &[Entry] = &[
    Entry {
        name: "K11",
        points: &[[0, 0], [1, 0]],
        colours: &[0, 1],
    },
    Entry {
        name: "K12",
        points: &[[0, 0], [1, 0], [2, 0]],
        colours: &[0, 1, 0],
    },
    Entry {
        name: "K111",
        points: &[[0, 0], [1, 0], [0, 1]],
        colours: &[0, 1, 2],
    },
    Entry {
        name: "K112",
        points: &[[0, 0], [1, 0], [2, 0], [1, 1]],
        colours: &[0, 1, 0, 2],
    },
    Entry {
        name: "K122",
        points: &[[0, 0], [0, 2], [1, 1], [2, 0], [2, 2]],
        colours: &[0, 1, 2, 1, 0],
    },
    Entry {
        name: "K222",
        points: &[[0, 0], [1, 1], [1, 2], [1, 3], [2, 2], [3, 2]],
        colours: &[0, 1, 2, 1, 0, 2],
    },
    Entry {
        name: "K4221",
        points: &[
            [0, 0],
            [0, 1],
            [0, 2],
            [1, 0],
            [1, 1],
            [1, 2],
            [2, 0],
            [2, 1],
            [2, 2],
        ],
        colours: &[0, 1, 0, 2, 3, 2, 0, 1, 0],
    },
    Entry {
        name: "K4222",
        points: &[
            [0, 0],
            [0, 1],
            [0, 6],
            [1, 1],
            [1, 4],
            [1, 5],
            [2, 2],
            [4, 1],
            [5, 0],
            [6, 0],
        ],
        colours: &[0, 1, 0, 2, 3, 2, 0, 1, 3, 0],
    },
    Entry {
        name: "K3333",
        points: &[
            [0, 1],
            [1, 2],
            [1, 5],
            [2, 2],
            [2, 3],
            [2, 4],
            [3, 1],
            [3, 2],
            [3, 3],
            [4, 0],
            [4, 3],
            [5, 4],
        ],
        colours: &[0, 1, 2, 3, 0, 3, 2, 1, 2, 3, 0, 1],
    },
    Entry {
        name: "K3333B",
        points: &[
            [0, 0],
            [1, 2],
            [1, 3],
            [1, 6],
            [2, 3],
            [2, 4],
            [2, 5],
            [3, 3],
            [3, 4],
            [3, 5],
            [4, 4],
            [6, 5],
        ],
        colours: &[0, 1, 2, 1, 3, 0, 3, 2, 1, 2, 0, 3],
    },
];

/// Names accepted by [`canonical`], in registry order.
pub fn canonical_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

/// A stored blocked configuration with fixed integer coordinates.
pub fn canonical(name: &str) -> Result<ColouredPointSet> {
    let entry = REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    ColouredPointSet::new(
        PointConfig::from_ints(entry.points)?,
        entry.colours.to_vec(),
    )
}
