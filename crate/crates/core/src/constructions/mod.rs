//! Constructions of blocked sets: a registry of small stored examples, the
//! `{0,1,2}^d` family, augmentation by a new colour class, products and
//! powers, and the Turán line covers.

mod augment;
mod registry;
mod turan;

use crate::blocked::{verify_midpoint_blocked, ColouredPointSet};
use crate::error::{Error, Result};
use crate::geom::{PointConfig, RationalPoint};

pub use augment::{augment, PLACEMENT_BUDGET};
pub use registry::{canonical, canonical_names};
pub use turan::{turan_lines, verify_line_cover, LineCover, LineCoverReport};

pub const MAX_GRID_DIM: usize = 8;

/// The points `{0,1,2}^d`, coloured by the set of coordinates equal to 1.
pub fn grid_3d(d: usize) -> Result<ColouredPointSet> {
    if !(1..=MAX_GRID_DIM).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "dimension must be in 1..={MAX_GRID_DIM}, got {d}"
        )));
    }
    let total = 3usize.pow(d as u32);
    let mut points = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    for index in 0..total {
        let digits: Vec<i64> = (0..d)
            .rev()
            .map(|k| (index / 3usize.pow(k as u32) % 3) as i64)
            .collect();
        labels.push(digits.iter().map(|&c| c == 1).collect::<Vec<_>>());
        points.push(RationalPoint::from_ints(&digits));
    }
    ColouredPointSet::from_labels(PointConfig::new(d, points)?, &labels)
}

fn require_midpoint_blocked(set: &ColouredPointSet) -> Result<()> {
    match verify_midpoint_blocked(set)?.failing_pair {
        Some((i, j)) => Err(Error::NotMidpointBlocked(i, j)),
        None => Ok(()),
    }
}

/// The cartesian product: `(v, w)` sits at the concatenated coordinates and
/// gets colour `colour(v) * l + colour(w)`, where `l` is the number of
/// colours of `b`.
pub fn product(a: &ColouredPointSet, b: &ColouredPointSet) -> Result<ColouredPointSet> {
    require_midpoint_blocked(a)?;
    require_midpoint_blocked(b)?;
    Ok(product_unchecked(a, b))
}

fn product_unchecked(a: &ColouredPointSet, b: &ColouredPointSet) -> ColouredPointSet {
    let l = b.num_colours();
    let mut points = Vec::with_capacity(a.len() * b.len());
    let mut colours = Vec::with_capacity(a.len() * b.len());
    for (i, v) in a.config().iter().enumerate() {
        for (j, w) in b.config().iter().enumerate() {
            points.push(v.concat(w));
            colours.push(a.colour(i) * l + b.colour(j));
        }
    }
    let config = PointConfig::new(a.dim() + b.dim(), points)
        .expect("products of distinct points are distinct");
    ColouredPointSet::new(config, colours).expect("every colour pair occurs")
}

/// The `i`-fold product of `set` with itself.
pub fn power(set: &ColouredPointSet, i: usize) -> Result<ColouredPointSet> {
    if i < 1 {
        return Err(Error::OutOfRange("power must be >= 1".into()));
    }
    require_midpoint_blocked(set)?;
    let mut out = set.clone();
    for _ in 1..i {
        out = product_unchecked(&out, set);
    }
    Ok(out)
}
