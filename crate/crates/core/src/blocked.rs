//! Coloured point sets and the checks that decide whether a colouring is
//! exactly the "blocked by another point" relation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{in_closed_triangle, is_general_position, max_collinear, midpoint, PointConfig};
use crate::visibility::{visibility_graph, VisibilityGraph};

/// Points with a dense colour id (`0..k`) per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredPointSet {
    config: PointConfig,
    colours: Vec<usize>,
}

impl ColouredPointSet {
    pub fn new(config: PointConfig, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != config.len() {
            return Err(Error::ColourCountMismatch {
                colours: colours.len(),
                points: config.len(),
            });
        }
        let k = colours.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &colours {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::SparseColours(missing));
        }
        Ok(ColouredPointSet { config, colours })
    }

    /// Builds a set from arbitrary labels, renumbering them densely in order
    /// of first occurrence.
    pub fn from_labels<L: PartialEq>(config: PointConfig, labels: &[L]) -> Result<Self> {
        let mut seen: Vec<&L> = Vec::new();
        let colours = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(c) => c,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        ColouredPointSet::new(config, colours)
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, i: usize) -> usize {
        self.colours[i]
    }

    pub fn len(&self) -> usize {
        self.config.len()
    }

    pub fn is_empty(&self) -> bool {
        self.config.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn num_colours(&self) -> usize {
        self.colours.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Point indices of each colour class, indexed by colour id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colours()];
        for (i, &c) in self.colours.iter().enumerate() {
            classes[c].push(i);
        }
        classes
    }

    pub fn signature(&self) -> KSetSignature {
        signature(self)
    }

    /// Keeps the points whose index satisfies `keep`, renumbering colours.
    pub fn retain(&self, keep: impl Fn(usize) -> bool) -> Result<ColouredPointSet> {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        let config = PointConfig::new(
            self.dim(),
            idx.iter().map(|&i| self.config[i].clone()).collect(),
        )?;
        let labels: Vec<usize> = idx.iter().map(|&i| self.colours[i]).collect();
        ColouredPointSet::from_labels(config, &labels)
    }

    /// Same colouring on a different configuration of equal size.
    pub fn with_config(&self, config: PointConfig) -> Result<ColouredPointSet> {
        ColouredPointSet::new(config, self.colours.clone())
    }
}

/// Sorted (descending) multiset of colour-class sizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSetSignature(Vec<usize>);

impl KSetSignature {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        KSetSignature(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of colour classes.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiset union with one more class.
    pub fn with(&self, size: usize) -> KSetSignature {
        let mut sizes = self.0.clone();
        sizes.push(size);
        KSetSignature::new(sizes)
    }

    /// Every pairwise product `a * b`.
    pub fn product(&self, other: &KSetSignature) -> KSetSignature {
        KSetSignature::new(
            self.0
                .iter()
                .flat_map(|a| other.0.iter().map(move |b| a * b))
                .collect(),
        )
    }

    /// Whether the classes can be matched injectively into `bound`'s classes
    /// with no class larger than its match.
    pub fn fits_within(&self, bound: &KSetSignature) -> bool {
        self.k() <= bound.k() && self.0.iter().zip(&bound.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for KSetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for KSetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for KSetSignature {
    type Err = Error;

    /// Accepts `4,2,2,1` with or without surrounding braces.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let sizes = inner
            .split(',')
            .map(|part| match part.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KSetSignature::new(sizes))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    VisibleMonochromatic,
    BlockedBichromatic,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::VisibleMonochromatic => "visible-monochromatic",
            ViolationKind::BlockedBichromatic => "blocked-bichromatic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockedReport {
    pub ok: bool,
    pub signature: Option<KSetSignature>,
    pub violations: Vec<Violation>,
}

pub fn signature(set: &ColouredPointSet) -> KSetSignature {
    KSetSignature::new(set.classes().iter().map(Vec::len).collect())
}

/// Checks every pair: equal colours must be blocked, different colours must
/// see each other. All violations are reported.
pub fn verify_blocked(set: &ColouredPointSet) -> BlockedReport {
    let graph = visibility_graph(set.config());
    verify_against(set, &graph)
}

pub(crate) fn verify_against(set: &ColouredPointSet, graph: &VisibilityGraph) -> BlockedReport {
    let n = set.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let same = set.colour(i) == set.colour(j);
            let visible = graph.adjacent(i, j);
            if same && visible {
                violations.push(Violation {
                    i,
                    j,
                    kind: ViolationKind::VisibleMonochromatic,
                });
            } else if !same && !visible {
                violations.push(Violation {
                    i,
                    j,
                    kind: ViolationKind::BlockedBichromatic,
                });
            }
        }
    }
    let ok = violations.is_empty();
    BlockedReport {
        ok,
        signature: ok.then(|| signature(set)),
        violations,
    }
}

/// Colours a configuration by the classes of "equal or mutually blocked",
/// which succeeds exactly when the visibility graph is complete multipartite.
pub fn infer_colouring(config: &PointConfig) -> Result<ColouredPointSet> {
    let graph = visibility_graph(config);
    let colours = multipartite_classes(&graph)?;
    ColouredPointSet::new(config.clone(), colours)
}

/// Dense class ids (in order of first occurrence) of a complete multipartite
/// graph, or a witness `i ~ j ~ k` with `i` and `k` adjacent.
pub fn multipartite_classes(graph: &VisibilityGraph) -> Result<Vec<usize>> {
    let n = graph.len();
    let mut colour = vec![usize::MAX; n];
    let mut next = 0;
    for i in 0..n {
        if colour[i] != usize::MAX {
            continue;
        }
        colour[i] = next;
        for j in i + 1..n {
            if !graph.adjacent(i, j) {
                if colour[j] != usize::MAX {
                    // j already belongs to an earlier class whose root r is
                    // adjacent to i.
                    let r = colour.iter().position(|&c| c == colour[j]).unwrap();
                    return Err(Error::NotMultipartite { i, j, k: r });
                }
                colour[j] = next;
            }
        }
        next += 1;
    }
    // Adjacency must hold exactly between different classes.
    for i in 0..n {
        for j in i + 1..n {
            if (colour[i] == colour[j]) == graph.adjacent(i, j) {
                let (i, j, k) = non_transitive_triple(graph)
                    .expect("classes disagree with a transitive relation");
                return Err(Error::NotMultipartite { i, j, k });
            }
        }
    }
    Ok(colour)
}

/// Distinct `i ~ j ~ k` (non-adjacent pairs) with `i` and `k` adjacent.
fn non_transitive_triple(graph: &VisibilityGraph) -> Option<(usize, usize, usize)> {
    let n = graph.len();
    for j in 0..n {
        for i in 0..n {
            for k in i + 1..n {
                if i != j
                    && k != j
                    && !graph.adjacent(i, j)
                    && !graph.adjacent(j, k)
                    && graph.adjacent(i, k)
                {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointReport {
    pub ok: bool,
    pub failing_pair: Option<(usize, usize)>,
}

/// Whether every monochromatic pair has its exact midpoint in the set.
/// The input must already be blocked.
pub fn verify_midpoint_blocked(set: &ColouredPointSet) -> Result<MidpointReport> {
    let report = verify_blocked(set);
    if !report.ok {
        return Err(Error::NotBlocked(report.violations.len()));
    }
    Ok(midpoint_check(set))
}

pub(crate) fn midpoint_check(set: &ColouredPointSet) -> MidpointReport {
    let present: HashSet<_> = set.config().iter().collect();
    for class in set.classes() {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                let m = midpoint(&set.config()[i], &set.config()[j]).expect("shared dimension");
                if !present.contains(&m) {
                    return MidpointReport {
                        ok: false,
                        failing_pair: Some((i, j)),
                    };
                }
            }
        }
    }
    MidpointReport {
        ok: true,
        failing_pair: None,
    }
}

/// Structural facts every blocked set satisfies. The last three only apply
/// to 4-blocked sets and are `None` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub max_collinear: usize,
    pub at_most_three_collinear: bool,
    pub classes_in_general_position: bool,
    pub classes_at_most_four: Option<bool>,
    pub at_most_twelve_points: Option<bool>,
    pub triangles_see_every_colour: Option<bool>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.at_most_three_collinear
            && self.classes_in_general_position
            && self.classes_at_most_four != Some(false)
            && self.at_most_twelve_points != Some(false)
            && self.triangles_see_every_colour != Some(false)
    }
}

pub fn audit_lemmas(set: &ColouredPointSet) -> Result<AuditReport> {
    let report = verify_blocked(set);
    if !report.ok {
        return Err(Error::NotBlocked(report.violations.len()));
    }
    let classes = set.classes();
    let class_configs = classes
        .iter()
        .map(|class| {
            PointConfig::new(
                set.dim(),
                class.iter().map(|&i| set.config()[i].clone()).collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let max_col = max_collinear(set.config());
    let classes_in_general_position = class_configs.iter().all(|c| match c.dim() {
        2 => is_general_position(c).unwrap_or(false),
        _ => max_collinear(c) <= 2,
    });

    let four = set.num_colours() == 4;
    let (classes_at_most_four, at_most_twelve_points, triangles_see_every_colour) = if four {
        (
            Some(classes.iter().all(|c| c.len() <= 4)),
            Some(set.len() <= 12),
            Some(set.dim() == 2 && triangles_see_every_colour(set, &classes)),
        )
    } else {
        (None, None, None)
    };

    Ok(AuditReport {
        max_collinear: max_col,
        at_most_three_collinear: max_col <= 3,
        classes_in_general_position,
        classes_at_most_four,
        at_most_twelve_points,
        triangles_see_every_colour,
    })
}

/// For each monochromatic triple, the closed triangle it spans holds a point
/// of every colour.
fn triangles_see_every_colour(set: &ColouredPointSet, classes: &[Vec<usize>]) -> bool {
    let pts = set.config().points();
    let k = classes.len();
    classes.iter().all(|class| {
        let m = class.len();
        (0..m).all(|a| {
            (a + 1..m).all(|b| {
                (b + 1..m).all(|c| {
                    let (pa, pb, pc) = (&pts[class[a]], &pts[class[b]], &pts[class[c]]);
                    let mut seen = vec![false; k];
                    for (i, p) in pts.iter().enumerate() {
                        if in_closed_triangle(p, pa, pb, pc) {
                            seen[set.colour(i)] = true;
                        }
                    }
                    seen.iter().all(|&s| s)
                })
            })
        })
    })
}
