use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::PointConfig;

/// Coordinates above this magnitude fall back to big integers, so that
/// differences stay below 2^63 and their products fit in an `i128`.
const SMALL_LIMIT: i128 = 1 << 62;

#[derive(Clone, Debug)]
enum Coords {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// A configuration rescaled by the common denominator of all coordinates.
///
/// Scaling by a positive constant preserves betweenness and collinearity, so
/// predicates evaluated here agree exactly with the rational ones while
/// running on machine integers whenever the magnitudes allow it.
#[derive(Clone, Debug)]
pub struct IntegerFrame {
    dim: usize,
    coords: Coords,
}

impl IntegerFrame {
    pub fn new(config: &PointConfig) -> Self {
        let dim = config.dim();
        let lcm = config
            .iter()
            .flat_map(|p| p.coords())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = config
            .iter()
            .flat_map(|p| p.coords())
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let small = scaled
            .iter()
            .map(|v| v.to_i128().filter(|x| x.abs() < SMALL_LIMIT))
            .collect::<Option<Vec<i128>>>();
        let coords = match small {
            Some(v) => Coords::Small(v),
            None => Coords::Big(scaled),
        };
        IntegerFrame { dim, coords }
    }

    pub fn len(&self) -> usize {
        let total = match &self.coords {
            Coords::Small(v) => v.len(),
            Coords::Big(v) => v.len(),
        };
        total / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_small(&self) -> bool {
        matches!(self.coords, Coords::Small(_))
    }

    /// Point `x` strictly inside segment `v w` (indices into the frame).
    pub fn between(&self, x: usize, v: usize, w: usize) -> bool {
        match &self.coords {
            Coords::Small(c) => between(self.slice(c, x), self.slice(c, v), self.slice(c, w)),
            Coords::Big(c) => between(self.slice(c, x), self.slice(c, v), self.slice(c, w)),
        }
    }

    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        match &self.coords {
            Coords::Small(s) => collinear(self.slice(s, a), self.slice(s, b), self.slice(s, c)),
            Coords::Big(s) => collinear(self.slice(s, a), self.slice(s, b), self.slice(s, c)),
        }
    }

    fn slice<'a, T>(&self, v: &'a [T], i: usize) -> &'a [T] {
        &v[i * self.dim..(i + 1) * self.dim]
    }
}

trait Num: Clone + Signed + Ord {}
impl<T: Clone + Signed + Ord> Num for T {}

fn pivot<T: Num>(v: &[T], w: &[T]) -> Option<usize> {
    v.iter().zip(w).position(|(a, b)| a != b)
}

/// `c` is a multiple of `b - a` away from `a`, compared through the pivot
/// coordinate `p` where `b - a` is nonzero.
fn proportional<T: Num>(a: &[T], b: &[T], c: &[T], p: usize) -> bool {
    let dp = b[p].clone() - a[p].clone();
    let cp = c[p].clone() - a[p].clone();
    (0..a.len()).all(|k| {
        k == p || {
            let dk = b[k].clone() - a[k].clone();
            let ck = c[k].clone() - a[k].clone();
            cp.clone() * dk == ck * dp.clone()
        }
    })
}

fn between<T: Num>(x: &[T], v: &[T], w: &[T]) -> bool {
    let Some(p) = pivot(v, w) else {
        return false;
    };
    let dw = w[p].clone() - v[p].clone();
    let dx = x[p].clone() - v[p].clone();
    if dx.is_zero() || dx.signum() != dw.signum() || dx.abs() >= dw.abs() {
        return false;
    }
    proportional(v, w, x, p)
}

fn collinear<T: Num>(a: &[T], b: &[T], c: &[T]) -> bool {
    match pivot(a, b) {
        None => true,
        Some(p) => proportional(a, b, c, p),
    }
}
