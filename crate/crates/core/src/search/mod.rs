//! Exhaustive search for blocked configurations on small integer grids.
//!
//! Points are placed in lexicographic `(x, y)` order. Every blocker of a pair
//! lies lexicographically between the pair, so once a point is placed the
//! visibility among all placed points is final. A prefix therefore has to be
//! complete multipartite itself, and a new point must either see everything
//! (new colour) or be blocked from exactly one existing colour class. That
//! single test subsumes the "blocked bichromatic pair" and "visible
//! monochromatic pair" prunes; four collinear points are rejected explicitly
//! as well.

mod canonical;
mod kernel;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::blocked::{verify_blocked, ColouredPointSet, KSetSignature};
use crate::error::{Error, Result};
use crate::geom::{is_between, PointConfig};
use crate::visibility::VisibilityGraph;

pub use canonical::{canonical_form, GridPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    /// Inclusive bounds: points range over `{0..=x_max} x {0..=y_max}`.
    pub grid: (i64, i64),
    pub max_points: usize,
    pub target: Option<KSetSignature>,
    pub require_midpoint_blocked: bool,
    /// Only explore configurations whose leftmost point has `x = 0`.
    /// Every configuration has such a translate in the grid.
    pub symmetry_reduction: bool,
    pub node_budget: u64,
    pub parallel_width: usize,
    /// Points every configuration must contain (the grid-level form of
    /// incidence seeding). Disables translation reduction.
    pub required_points: Vec<GridPoint>,
}

impl SearchSpec {
    pub fn new(x_max: i64, y_max: i64, max_points: usize) -> Self {
        SearchSpec {
            grid: (x_max, y_max),
            max_points,
            target: None,
            require_midpoint_blocked: false,
            symmetry_reduction: true,
            node_budget: u64::MAX,
            parallel_width: 1,
            required_points: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (x, y) = self.grid;
        if x < 1 || y < 1 {
            return Err(Error::Precondition(format!(
                "grid bounds must be >= 1, got ({x},{y})"
            )));
        }
        if x > 1000 || y > 1000 {
            return Err(Error::OutOfRange(format!("grid ({x},{y}) is too large")));
        }
        if self.max_points < 1 {
            return Err(Error::Precondition("max_points must be >= 1".into()));
        }
        if self.node_budget < 1 {
            return Err(Error::Precondition("node_budget must be >= 1".into()));
        }
        if self.parallel_width < 1 {
            return Err(Error::Precondition("parallel_width must be >= 1".into()));
        }
        for &(px, py) in &self.required_points {
            if px < 0 || py < 0 || px > x || py > y {
                return Err(Error::Precondition(format!(
                    "required point ({px},{py}) outside grid"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Found => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witnesses: Vec<ColouredPointSet>,
    pub nodes_explored: u64,
    pub signatures_found: BTreeSet<KSetSignature>,
}

impl SearchOutcome {
    /// Exhausted with no witness: grid-bounded evidence that the target
    /// signature does not occur in the searched space. Not a proof.
    pub fn certifies_absence(&self) -> bool {
        self.status == SearchStatus::Exhausted && self.witnesses.is_empty()
    }

    /// Signatures with exactly `k` colour classes.
    pub fn signatures_with_k(&self, k: usize) -> BTreeSet<KSetSignature> {
        self.signatures_found
            .iter()
            .filter(|s| s.k() == k)
            .cloned()
            .collect()
    }
}

/// Explores every blocked configuration of the grid with at most
/// `max_points` points (restricted to those fitting `spec.target`, when set)
/// and records their signatures, keeping one canonical witness per signature.
pub fn enumerate_blocked(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let raw = kernel::run(spec, kernel::Mode::Enumerate);
    finish(raw, false)
}

/// Looks for one configuration with exactly the `target` signature.
pub fn find_blocked(target: &KSetSignature, spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    if target.total() > spec.max_points {
        return Err(Error::Precondition(format!(
            "target {target} needs {} points but max_points is {}",
            target.total(),
            spec.max_points
        )));
    }
    let mut spec = spec.clone();
    spec.target = Some(target.clone());
    let raw = kernel::run(&spec, kernel::Mode::Find);
    finish(raw, true)
}

/// Runs [`find_blocked`]; an `Exhausted` outcome with no witnesses is
/// grid-bounded evidence that `target` is not representable.
pub fn certify_absent(target: &KSetSignature, spec: &SearchSpec) -> Result<SearchOutcome> {
    find_blocked(target, spec)
}

fn finish(raw: kernel::RawOutcome, find: bool) -> Result<SearchOutcome> {
    let mut witnesses = BTreeMap::new();
    for (points, classes) in raw.witnesses {
        let (canon_points, canon_colours) = canonical_form(&points, &classes);
        let config = PointConfig::from_ints(
            &canon_points
                .iter()
                .map(|&(x, y)| [x, y])
                .collect::<Vec<_>>(),
        )?;
        let set = ColouredPointSet::new(config, canon_colours)?;
        let report = verify_blocked(&set);
        assert!(
            report.ok,
            "search produced an unblocked witness: {:?}",
            report.violations
        );
        witnesses
            .entry((set.signature(), canon_points))
            .or_insert(set);
    }
    let status = if raw.budget_exceeded {
        SearchStatus::BudgetExceeded
    } else if find && !witnesses.is_empty() {
        SearchStatus::Found
    } else {
        SearchStatus::Exhausted
    };
    Ok(SearchOutcome {
        status,
        witnesses: witnesses.into_values().collect(),
        nodes_explored: raw.nodes,
        signatures_found: raw.signatures,
    })
}

/// Literal definition of the visibility graph with rational betweenness:
/// `i` and `j` are adjacent iff no third point lies strictly between them.
/// Used as an independent check of the visibility module.
pub fn brute_force_visibility(config: &PointConfig) -> VisibilityGraph {
    let n = config.len();
    let mut graph = VisibilityGraph::empty(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut blocked = false;
            for k in 0..n {
                if k != i
                    && k != j
                    && is_between(&config[k], &config[i], &config[j]).expect("distinct points")
                {
                    blocked = true;
                }
            }
            if !blocked {
                graph.set_adjacent(i, j, true);
            }
        }
    }
    graph
}

#[cfg(test)]
mod tests;
