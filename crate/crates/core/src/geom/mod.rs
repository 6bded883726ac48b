//! Exact rational points and the geometric predicates built on them.
//!
//! Coordinates are [`BigRational`]s, which are always kept in lowest terms
//! with a positive denominator, so two points are equal exactly when their
//! coordinate vectors are structurally equal.

mod frame;
mod hull;

use std::collections::HashSet;
use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use frame::IntegerFrame;
pub use hull::{convex_hull, find_empty_convex_polygon, in_closed_triangle};

pub type Rational = BigRational;

/// Builds an exact rational from a numerator and a nonzero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "points need at least one coordinate");
        RationalPoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// Nearest floating point coordinates, for display only.
    pub fn to_f64(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Concatenation of the coordinates of `self` and `other`.
    pub fn concat(&self, other: &RationalPoint) -> RationalPoint {
        let mut coords = self.0.clone();
        coords.extend(other.0.iter().cloned());
        RationalPoint(coords)
    }

    fn check_dim(&self, other: &RationalPoint) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for RationalPoint {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An ordered list of pairwise distinct points sharing one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<RationalPoint>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<RationalPoint>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::OutOfRange("dimension must be at least 1".into()));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let mut seen = std::collections::HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointConfig { dim, points })
    }

    /// Convenience constructor for integer coordinates; the dimension is taken
    /// from the first point (2 when empty).
    pub fn from_ints<const D: usize>(points: &[[i64; D]]) -> Result<Self> {
        PointConfig::new(
            D,
            points.iter().map(|p| RationalPoint::from_ints(p)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RationalPoint> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<RationalPoint> {
        self.points
    }

    pub fn position(&self, p: &RationalPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.position(p).is_some()
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_planar(&self) -> Result<()> {
        if self.dim != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: self.dim,
            });
        }
        Ok(())
    }

    /// Image of the configuration under `x -> matrix * x + offset`.
    ///
    /// The map must be injective on the points; the caller is responsible for
    /// that (an invertible square matrix always is).
    pub fn map_affine(&self, matrix: &[Vec<Rational>], offset: &[Rational]) -> Result<Self> {
        let out_dim = matrix.len();
        let points = self
            .points
            .iter()
            .map(|p| {
                let coords = (0..out_dim)
                    .map(|r| {
                        let row = &matrix[r];
                        row.iter()
                            .zip(p.coords())
                            .fold(offset[r].clone(), |acc, (a, x)| acc + a * x)
                    })
                    .collect();
                RationalPoint::new(coords)
            })
            .collect();
        PointConfig::new(out_dim, points)
    }
}

impl Index<usize> for PointConfig {
    type Output = RationalPoint;

    fn index(&self, index: usize) -> &RationalPoint {
        &self.points[index]
    }
}

impl<'a> IntoIterator for &'a PointConfig {
    type Item = &'a RationalPoint;
    type IntoIter = std::slice::Iter<'a, RationalPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` for a counterclockwise
/// turn, `-1` for clockwise, `0` when the three points are collinear.
pub fn orientation(p: &RationalPoint, q: &RationalPoint, r: &RationalPoint) -> Result<i8> {
    for pt in [p, q, r] {
        if pt.dim() != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: pt.dim(),
            });
        }
    }
    Ok(orient_unchecked(p, q, r))
}

pub(crate) fn orient_unchecked(p: &RationalPoint, q: &RationalPoint, r: &RationalPoint) -> i8 {
    let cross = (&q[0] - &p[0]) * (&r[1] - &p[1]) - (&q[1] - &p[1]) * (&r[0] - &p[0]);
    if cross.is_positive() {
        1
    } else if cross.is_negative() {
        -1
    } else {
        0
    }
}

/// True iff `x` lies strictly inside the segment from `v` to `w`, in any
/// dimension.
pub fn is_between(x: &RationalPoint, v: &RationalPoint, w: &RationalPoint) -> Result<bool> {
    v.check_dim(w)?;
    v.check_dim(x)?;
    if v == w {
        return Err(Error::DegenerateSegment);
    }
    Ok(segment_parameter(x, v, w).is_some_and(|t| t.is_positive() && t < Rational::one()))
}

/// If `x = v + t (w - v)` for some rational `t`, returns that `t`.
/// Requires `v != w`.
fn segment_parameter(x: &RationalPoint, v: &RationalPoint, w: &RationalPoint) -> Option<Rational> {
    let mut t: Option<Rational> = None;
    for c in 0..v.dim() {
        let dw = &w[c] - &v[c];
        let dx = &x[c] - &v[c];
        if dw.is_zero() {
            if !dx.is_zero() {
                return None;
            }
            continue;
        }
        let tc = dx / dw;
        match &t {
            None => t = Some(tc),
            Some(t0) if *t0 != tc => return None,
            Some(_) => {}
        }
    }
    t
}

/// True iff the three points lie on a common line (any dimension).
pub fn collinear(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Result<bool> {
    a.check_dim(b)?;
    a.check_dim(c)?;
    if a == b {
        return Ok(true);
    }
    Ok(segment_parameter(c, a, b).is_some())
}

/// Largest number of points of `config` on a common line.
pub fn max_collinear(config: &PointConfig) -> usize {
    let n = config.len();
    if n <= 2 {
        return n;
    }
    let frame = IntegerFrame::new(config);
    let mut best = 2;
    for i in 0..n {
        for j in i + 1..n {
            // Each line is counted from its lowest-index pair.
            if (0..i).any(|k| frame.collinear(i, j, k)) {
                continue;
            }
            let count = 2
                + (i + 1..n)
                    .filter(|&k| k != j && frame.collinear(i, j, k))
                    .count();
            best = best.max(count);
        }
    }
    best
}

/// Some collinear triple of `config`, if one exists.
pub fn collinear_triple(config: &PointConfig) -> Option<[usize; 3]> {
    let n = config.len();
    let frame = IntegerFrame::new(config);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if frame.collinear(i, j, k) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// No three points collinear. Only meaningful in the plane.
pub fn is_general_position(config: &PointConfig) -> Result<bool> {
    config.require_planar()?;
    Ok(collinear_triple(config).is_none())
}

pub fn midpoint(v: &RationalPoint, w: &RationalPoint) -> Result<RationalPoint> {
    v.check_dim(w)?;
    let half = ratio(1, 2);
    Ok(RationalPoint(
        v.0.iter().zip(&w.0).map(|(a, b)| (a + b) * &half).collect(),
    ))
}

/// Number of distinct midpoints over unordered pairs of distinct points.
pub fn count_midpoints(config: &PointConfig) -> Result<usize> {
    let n = config.len();
    if n < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: n,
        });
    }
    let mut seen = HashSet::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            seen.insert(midpoint(&config[i], &config[j])?);
        }
    }
    Ok(seen.len())
}
