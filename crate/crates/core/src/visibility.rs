//! Visibility graphs and blocking relations, plus projection of higher
//! dimensional configurations into the plane without changing who blocks whom.

use std::fmt;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{is_between, IntegerFrame, PointConfig, Rational, RationalPoint};

/// Symmetric, irreflexive adjacency over point indices.
#[derive(Clone, PartialEq, Eq)]
pub struct VisibilityGraph {
    n: usize,
    adj: Vec<bool>,
}

impl VisibilityGraph {
    pub fn empty(n: usize) -> Self {
        VisibilityGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn set_adjacent(&mut self, i: usize, j: usize, value: bool) {
        assert_ne!(i, j, "visibility graphs have no loops");
        self.adj[i * self.n + j] = value;
        self.adj[j * self.n + i] = value;
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.adjacent(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    /// The graph relabelled so that vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> VisibilityGraph {
        let mut out = VisibilityGraph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    out.set_adjacent(perm[i], perm[j], true);
                }
            }
        }
        out
    }
}

impl fmt::Debug for VisibilityGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .collect();
        f.debug_struct("VisibilityGraph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Indices of all points strictly between points `i` and `j`.
pub fn blockers(config: &PointConfig, i: usize, j: usize) -> Result<Vec<usize>> {
    config.check_index(i)?;
    config.check_index(j)?;
    if i == j {
        return Err(Error::SamePair(i));
    }
    let mut out = Vec::new();
    for k in 0..config.len() {
        if k != i && k != j && is_between(&config[k], &config[i], &config[j])? {
            out.push(k);
        }
    }
    Ok(out)
}

/// Direct cubic construction over the rescaled integer frame.
pub fn visibility_graph(config: &PointConfig) -> VisibilityGraph {
    let frame = IntegerFrame::new(config);
    visibility_from_frame(&frame)
}

pub(crate) fn visibility_from_frame(frame: &IntegerFrame) -> VisibilityGraph {
    let n = frame.len();
    let mut graph = VisibilityGraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let blocked = (0..n).any(|k| k != i && k != j && frame.between(k, i, j));
            if !blocked {
                graph.set_adjacent(i, j, true);
            }
        }
    }
    graph
}

/// True iff every pair of points of `points` is blocked by some point of
/// `points ∪ blockers_set`.
pub fn is_blocking_set(points: &PointConfig, blockers_set: &PointConfig) -> Result<bool> {
    if points.dim() != blockers_set.dim() {
        return Err(Error::DimensionMismatch {
            expected: points.dim(),
            found: blockers_set.dim(),
        });
    }
    if let Some(shared) = blockers_set.iter().find(|b| points.contains(b)) {
        return Err(Error::NotDisjoint(format!("{shared}")));
    }
    let mut all = points.points().to_vec();
    all.extend(blockers_set.iter().cloned());
    let union = PointConfig::new(points.dim(), all)?;
    let frame = IntegerFrame::new(&union);
    let n = points.len();
    Ok((0..n).all(|i| {
        (i + 1..n).all(|j| (0..union.len()).any(|k| k != i && k != j && frame.between(k, i, j)))
    }))
}

pub const PROJECTION_ATTEMPTS: usize = 64;
const ENTRY_SCALE: i64 = 1 << 31;

/// A planar image of a configuration together with the map that produced it.
/// Point `k` of the source maps to point `k` of `config`.
#[derive(Clone, Debug)]
pub struct Projection {
    pub config: PointConfig,
    pub matrix: Vec<Vec<Rational>>,
    pub attempts: usize,
}

/// Projects a configuration in `R^d` (`d >= 3`) to the plane with a random
/// rational linear map, retrying until the images are distinct and the
/// strict-betweenness relation is exactly preserved.
///
/// Entries are `a / 2^31` with `a` in `[-2^31, 2^31]`. Each entry consumes
/// one `next_u64` from ChaCha8 seeded via `seed_from_u64(seed)`, reduced as
/// `a = (u mod (2^32 + 1)) - 2^31`; entries are drawn row by row, two rows
/// per attempt, so the output is a pure function of the seed.
pub fn occlusion_free_projection(config: &PointConfig, seed: u64) -> Result<Projection> {
    let d = config.dim();
    if d < 3 {
        return Err(Error::OutOfRange(format!(
            "projection expects dimension >= 3, found {d}"
        )));
    }
    if config.is_empty() {
        return Err(Error::TooFewPoints {
            needed: 1,
            found: 0,
        });
    }
    let source = IntegerFrame::new(config);
    let source_between = betweenness_relation(&source);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom = BigInt::from(ENTRY_SCALE);
    let modulus = (1u64 << 32) + 1;

    for attempt in 1..=PROJECTION_ATTEMPTS {
        let matrix: Vec<Vec<Rational>> = (0..2)
            .map(|_| {
                (0..d)
                    .map(|_| {
                        let a = (rng.next_u64() % modulus) as i64 - ENTRY_SCALE;
                        Rational::new(BigInt::from(a), denom.clone())
                    })
                    .collect()
            })
            .collect();
        let images: Vec<RationalPoint> = config
            .iter()
            .map(|p| {
                RationalPoint::new(
                    matrix
                        .iter()
                        .map(|row| {
                            row.iter()
                                .zip(p.coords())
                                .fold(Rational::from_integer(BigInt::from(0)), |acc, (a, x)| {
                                    acc + a * x
                                })
                        })
                        .collect(),
                )
            })
            .collect();
        let Ok(image) = PointConfig::new(2, images) else {
            continue;
        };
        if betweenness_relation(&IntegerFrame::new(&image)) == source_between {
            return Ok(Projection {
                config: image,
                matrix,
                attempts: attempt,
            });
        }
    }
    Err(Error::ProjectionBudgetExhausted(PROJECTION_ATTEMPTS))
}

/// Triples `(k, i, j)` with `i < j` and point `k` strictly inside `ij`,
/// in lexicographic order.
pub fn betweenness_relation(frame: &IntegerFrame) -> Vec<(usize, usize, usize)> {
    let n = frame.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if k != i && k != j && frame.between(k, i, j) {
                    out.push((k, i, j));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid3() -> PointConfig {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push([x, y]);
            }
        }
        PointConfig::from_ints(&pts).unwrap()
    }

    #[test]
    fn blockers_examples() {
        let g = grid3();
        // index = 3x + y
        assert_eq!(blockers(&g, 0, 6).unwrap(), vec![3]);
        assert_eq!(blockers(&g, 0, 4).unwrap(), Vec::<usize>::new());
        let line = PointConfig::from_ints(&[[0, 0], [1, 0], [2, 0], [3, 0]]).unwrap();
        assert_eq!(blockers(&line, 0, 3).unwrap(), vec![1, 2]);
        assert_eq!(blockers(&line, 1, 1), Err(Error::SamePair(1)));
        assert!(blockers(&line, 0, 9).is_err());
    }

    #[test]
    fn collinear_points_form_a_path() {
        let line = PointConfig::from_ints(&[[0, 0], [1, 0], [2, 0]]).unwrap();
        let g = visibility_graph(&line);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 2));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn grid_graph_is_complete_multipartite() {
        let g = visibility_graph(&grid3());
        // corners 0,2,6,8; centre 4; edge midpoints 1,7 (x-middle) and 3,5
        let class = |i: usize| match i {
            0 | 2 | 6 | 8 => 0,
            4 => 1,
            1 | 7 => 2,
            _ => 3,
        };
        for i in 0..9 {
            for j in i + 1..9 {
                assert_eq!(g.adjacent(i, j), class(i) != class(j), "{i} {j}");
            }
        }
    }

    #[test]
    fn blocking_set_examples() {
        let grid = grid3();
        let corners = PointConfig::from_ints(&[[0, 0], [0, 2], [2, 0], [2, 2]]).unwrap();
        let rest = PointConfig::new(
            2,
            grid.iter()
                .filter(|p| !corners.contains(p))
                .cloned()
                .collect(),
        )
        .unwrap();
        assert!(is_blocking_set(&corners, &rest).unwrap());
        let pair = PointConfig::from_ints(&[[0, 0], [2, 0]]).unwrap();
        assert!(is_blocking_set(&pair, &PointConfig::from_ints(&[[1, 0]]).unwrap()).unwrap());
        assert!(!is_blocking_set(&pair, &PointConfig::from_ints(&[[0, 1]]).unwrap()).unwrap());
        assert!(matches!(
            is_blocking_set(&pair, &PointConfig::from_ints(&[[2, 0]]).unwrap()),
            Err(Error::NotDisjoint(_))
        ));
    }

    #[test]
    fn projection_is_deterministic_and_faithful() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push([x, y, z]);
                }
            }
        }
        let cube = PointConfig::from_ints(&pts).unwrap();
        let a = occlusion_free_projection(&cube, 7).unwrap();
        let b = occlusion_free_projection(&cube, 7).unwrap();
        assert_eq!(a.config, b.config);
        assert_eq!(a.config.len(), 27);
        assert_eq!(visibility_graph(&a.config), visibility_graph(&cube));
        let c = occlusion_free_projection(&cube, 8).unwrap();
        assert_ne!(a.matrix, c.matrix);
    }

    #[test]
    fn projection_of_single_point() {
        let one = PointConfig::from_ints(&[[1, 2, 3, 4]]).unwrap();
        let p = occlusion_free_projection(&one, 0).unwrap();
        assert_eq!(p.config.len(), 1);
        assert_eq!(p.attempts, 1);
        assert!(occlusion_free_projection(&grid3(), 0).is_err());
    }
}
