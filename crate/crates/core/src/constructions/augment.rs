use num_traits::{One, Signed, Zero};

use crate::blocked::{verify_blocked, ColouredPointSet};
use crate::error::{Error, Result};
use crate::geom::{
    collinear, in_closed_triangle, orientation, ratio, PointConfig, Rational, RationalPoint,
};

/// Candidate positions for the first new point tried before giving up.
pub const PLACEMENT_BUDGET: usize = 2000;

/// Levels of grid refinement in the candidate sweep.
const LEVELS: u32 = 6;

/// Ray parameters tried for the second and third new points.
const RAY_STEPS: [(i64, i64); 9] = [
    (1, 1),
    (2, 1),
    (1, 2),
    (3, 1),
    (1, 3),
    (3, 2),
    (2, 3),
    (4, 1),
    (1, 4),
];

/// Adds a new colour class of `m` points, each visible from every old point.
///
/// `m = 1`: one point off every line through two old points.
/// `m = 2`: `p` as above and `q` beyond an old point `v` on the ray from `p`
/// through `v`, so only `v` separates them.
/// `m = 3`: `p` outside the triangle of three non-collinear old points
/// `u, v, w` with segment `pw` crossing `uv`; `q` beyond `u` from `p`, `r`
/// beyond `v` from `p`, chosen so that `w` lies between `q` and `r`.
pub fn augment(set: &ColouredPointSet, m: usize) -> Result<ColouredPointSet> {
    if !(1..=3).contains(&m) {
        return Err(Error::OutOfRange(format!(
            "class size must be 1, 2 or 3, got {m}"
        )));
    }
    if set.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: set.dim(),
        });
    }
    let report = verify_blocked(set);
    if !report.ok {
        return Err(Error::NotBlocked(report.violations.len()));
    }
    if m >= 2 && set.is_empty() {
        return Err(Error::Precondition(format!(
            "adding {m} points needs a nonempty set"
        )));
    }
    let pts = set.config().points();
    let triple = if m == 3 {
        Some(non_collinear_triple(pts).ok_or_else(|| {
            Error::Precondition("adding 3 points needs a set that is not collinear".into())
        })?)
    } else {
        None
    };

    for p in candidates(pts).take(PLACEMENT_BUDGET) {
        if !off_lines(pts, &p) {
            continue;
        }
        let found = match (m, triple) {
            (1, _) => try_extend(set, vec![p]),
            (2, _) => RAY_STEPS.iter().find_map(|&(a, b)| {
                let q = beyond(&pts[0], &p, &ratio(a, b));
                off_lines(pts, &q)
                    .then(|| try_extend(set, vec![p.clone(), q]))
                    .flatten()
            }),
            (_, Some([u, v, w])) => place_three(set, &p, u, v, w),
            _ => unreachable!(),
        };
        if let Some(out) = found {
            return Ok(out);
        }
    }
    Err(Error::PlacementBudgetExhausted(PLACEMENT_BUDGET))
}

fn place_three(
    set: &ColouredPointSet,
    p: &RationalPoint,
    a: usize,
    b: usize,
    c: usize,
) -> Option<ColouredPointSet> {
    let pts = set.config().points();
    if in_closed_triangle(p, &pts[a], &pts[b], &pts[c]) {
        return None;
    }
    for [u, v, w] in [[a, b, c], [b, c, a], [c, a, b]] {
        let (u, v, w) = (&pts[u], &pts[v], &pts[w]);
        if !segments_meet(u, v, p, w) {
            continue;
        }
        for &(num, den) in &RAY_STEPS {
            let q = beyond(u, p, &ratio(num, den));
            let Some(r) = through_onto_ray(&q, w, v, p) else {
                continue;
            };
            if off_lines(pts, &q) && off_lines(pts, &r) {
                if let Some(out) = try_extend(set, vec![p.clone(), q, r]) {
                    return Some(out);
                }
            }
        }
    }
    None
}

/// `v + s (v - p)`: the point past `v` on the ray from `p` through `v`.
fn beyond(v: &RationalPoint, p: &RationalPoint, s: &Rational) -> RationalPoint {
    RationalPoint::new((0..2).map(|k| &v[k] + s * (&v[k] - &p[k])).collect())
}

/// Where the line from `q` through `w` meets the ray `v + t (v - p)`,
/// `t > 0`, provided `w` lies strictly between `q` and that point.
fn through_onto_ray(
    q: &RationalPoint,
    w: &RationalPoint,
    v: &RationalPoint,
    p: &RationalPoint,
) -> Option<RationalPoint> {
    // Solve q + mu (w - q) = v + t (v - p).
    let d1 = [&w[0] - &q[0], &w[1] - &q[1]];
    let d2 = [&v[0] - &p[0], &v[1] - &p[1]];
    let rhs = [&v[0] - &q[0], &v[1] - &q[1]];
    let det = &d1[1] * &d2[0] - &d1[0] * &d2[1];
    if det.is_zero() {
        return None;
    }
    let mu = (&rhs[1] * &d2[0] - &rhs[0] * &d2[1]) / &det;
    let t = (&d1[0] * &rhs[1] - &d1[1] * &rhs[0]) / &det;
    (t.is_positive() && mu > Rational::one()).then(|| beyond(v, p, &t))
}

fn segments_meet(
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
    d: &RationalPoint,
) -> bool {
    let o = |x, y, z| orientation(x, y, z).expect("planar points");
    o(a, b, c) * o(a, b, d) <= 0 && o(c, d, a) * o(c, d, b) <= 0
}

fn try_extend(set: &ColouredPointSet, new: Vec<RationalPoint>) -> Option<ColouredPointSet> {
    let colour = set.num_colours();
    let mut points = set.config().points().to_vec();
    let mut colours = set.colours().to_vec();
    colours.extend(std::iter::repeat_n(colour, new.len()));
    points.extend(new);
    let config = PointConfig::new(2, points).ok()?;
    let out = ColouredPointSet::new(config, colours).ok()?;
    verify_blocked(&out).ok.then_some(out)
}

/// Not equal to any old point and not on a line through two of them.
fn off_lines(pts: &[RationalPoint], p: &RationalPoint) -> bool {
    if pts.contains(p) {
        return false;
    }
    (0..pts.len()).all(|i| {
        (i + 1..pts.len()).all(|j| !collinear(p, &pts[i], &pts[j]).expect("planar points"))
    })
}

fn non_collinear_triple(pts: &[RationalPoint]) -> Option<[usize; 3]> {
    let n = pts.len();
    (0..n).find_map(|i| {
        (i + 1..n).find_map(|j| {
            (j + 1..n).find_map(|k| {
                (!collinear(&pts[i], &pts[j], &pts[k]).expect("planar points")).then_some([i, j, k])
            })
        })
    })
}

/// Grid points of spacing `2^-level` over the bounding box grown by one,
/// each point listed once, coarser levels first.
fn candidates(pts: &[RationalPoint]) -> impl Iterator<Item = RationalPoint> {
    let lo = |k: usize| {
        pts.iter()
            .map(|p| p[k].clone())
            .min()
            .unwrap_or_else(Rational::zero)
            - Rational::one()
    };
    let hi = |k: usize| {
        pts.iter()
            .map(|p| p[k].clone())
            .max()
            .unwrap_or_else(Rational::zero)
            + Rational::one()
    };
    let origin = [lo(0), lo(1)];
    let span = [
        (hi(0) - &origin[0]).ceil().to_integer(),
        (hi(1) - &origin[1]).ceil().to_integer(),
    ];
    (0..=LEVELS).flat_map(move |level| {
        let steps = 1i64 << level;
        let cols: i64 = (&span[0] * steps).try_into().expect("small bounding box");
        let rows: i64 = (&span[1] * steps).try_into().expect("small bounding box");
        let origin = origin.clone();
        (0..=cols).flat_map(move |a| {
            let origin = origin.clone();
            (0..=rows).filter_map(move |b| {
                if level > 0 && a % 2 == 0 && b % 2 == 0 {
                    return None;
                }
                Some(RationalPoint::new(vec![
                    &origin[0] + ratio(a, steps),
                    &origin[1] + ratio(b, steps),
                ]))
            })
        })
    })
}
