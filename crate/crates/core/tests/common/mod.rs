#![allow(dead_code)]

use blockset::geom::{collinear, in_closed_triangle, orientation, PointConfig, RationalPoint};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` distinct integer points in `[0, size)^2`, no three collinear.
pub fn random_general_position(seed: u64, n: usize, size: u64) -> PointConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<RationalPoint> = Vec::new();
    while pts.len() < n {
        let p = RationalPoint::from_ints(&[
            (rng.next_u64() % size) as i64,
            (rng.next_u64() % size) as i64,
        ]);
        if pts.contains(&p) {
            continue;
        }
        let ok = (0..pts.len())
            .all(|i| (i + 1..pts.len()).all(|j| !collinear(&p, &pts[i], &pts[j]).unwrap()));
        if ok {
            pts.push(p);
        }
    }
    PointConfig::new(2, pts).unwrap()
}

/// `n` distinct integer points in `[0, size)^2` with no further restriction.
pub fn random_points(seed: u64, n: usize, size: u64) -> PointConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<RationalPoint> = Vec::new();
    while pts.len() < n {
        let p = RationalPoint::from_ints(&[
            (rng.next_u64() % size) as i64,
            (rng.next_u64() % size) as i64,
        ]);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfig::new(2, pts).unwrap()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    if n < r {
        return vec![];
    }
    let mut out = subsets(n - 1, r);
    for mut s in subsets(n - 1, r - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// In general position: no member inside a triangle of three others, and no
/// other point inside a triangle of three members.
pub fn is_empty_convex(config: &PointConfig, subset: &[usize]) -> bool {
    let pts = config.points();
    let triangles = subsets(subset.len(), 3);
    for t in &triangles {
        let (a, b, c) = (&pts[subset[t[0]]], &pts[subset[t[1]]], &pts[subset[t[2]]]);
        for (i, x) in pts.iter().enumerate() {
            let member_of_t = t.iter().any(|&s| subset[s] == i);
            if !member_of_t && in_closed_triangle(x, a, b, c) {
                return false;
            }
        }
    }
    true
}

/// Whether any `r`-subset is an empty convex polygon, by trying all of them.
pub fn brute_force_empty_polygon(config: &PointConfig, r: usize) -> bool {
    subsets(config.len(), r)
        .iter()
        .any(|s| is_empty_convex(config, s))
}

/// Consecutive vertices turn left all the way round.
pub fn is_ccw_cycle(config: &PointConfig, cycle: &[usize]) -> bool {
    let n = cycle.len();
    (0..n).all(|i| {
        let (a, b, c) = (
            &config[cycle[i]],
            &config[cycle[(i + 1) % n]],
            &config[cycle[(i + 2) % n]],
        );
        orientation(a, b, c).unwrap() > 0
    })
}
