use std::cmp::Ordering;

use super::{collinear_triple, orient_unchecked, PointConfig, RationalPoint};
use crate::error::{Error, Result};

/// Strict convex hull vertices, counterclockwise, starting from the
/// lexicographically smallest point. Points in the relative interior of a hull
/// edge are not reported.
pub fn convex_hull(config: &PointConfig) -> Result<Vec<usize>> {
    config.require_planar()?;
    let n = config.len();
    if n == 0 {
        return Err(Error::TooFewPoints {
            needed: 1,
            found: 0,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| config[a].cmp(&config[b]));
    if n <= 2 {
        return Ok(order);
    }

    let pts = config.points();
    let mut lower: Vec<usize> = Vec::with_capacity(n);
    for &i in &order {
        while lower.len() >= 2
            && orient_unchecked(
                &pts[lower[lower.len() - 2]],
                &pts[lower[lower.len() - 1]],
                &pts[i],
            ) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(n);
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && orient_unchecked(
                &pts[upper[upper.len() - 2]],
                &pts[upper[upper.len() - 1]],
                &pts[i],
            ) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    Ok(lower)
}

/// Closed triangle membership; degenerate triangles act as their closed
/// hull (a segment or a point).
pub fn in_closed_triangle(
    x: &RationalPoint,
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
) -> bool {
    let o1 = orient_unchecked(a, b, x);
    let o2 = orient_unchecked(b, c, x);
    let o3 = orient_unchecked(c, a, x);
    if orient_unchecked(a, b, c) != 0 {
        let has_pos = o1 > 0 || o2 > 0 || o3 > 0;
        let has_neg = o1 < 0 || o2 < 0 || o3 < 0;
        return !(has_pos && has_neg);
    }
    // Collinear: x must be on the line and inside the bounding box.
    if o1 != 0 || o2 != 0 || o3 != 0 {
        return false;
    }
    (0..2).all(|k| {
        let lo = [&a[k], &b[k], &c[k]].into_iter().min().unwrap();
        let hi = [&a[k], &b[k], &c[k]].into_iter().max().unwrap();
        lo <= &x[k] && &x[k] <= hi
    })
}

fn in_open_triangle(
    x: &RationalPoint,
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
) -> bool {
    let s = orient_unchecked(a, b, c);
    s != 0
        && orient_unchecked(a, b, x) == s
        && orient_unchecked(b, c, x) == s
        && orient_unchecked(c, a, x) == s
}

/// Finds `r` points (`r` in {4, 5}) in convex position whose hull contains no
/// other point of the set. Returns the indices counterclockwise, or `None`
/// when no such subset exists.
///
/// Each candidate polygon is grown as a fan around its lowest vertex: the
/// remaining vertices are visited in angular order, every turn must be left,
/// and every fan triangle must have an empty interior. In general position
/// nothing can sit on a fan edge, so this is exactly emptiness of the polygon.
pub fn find_empty_convex_polygon(config: &PointConfig, r: usize) -> Result<Option<Vec<usize>>> {
    config.require_planar()?;
    if !(4..=5).contains(&r) {
        return Err(Error::UnsupportedPolygonSize(r));
    }
    if let Some(t) = collinear_triple(config) {
        return Err(Error::NotGeneralPosition(t));
    }
    let pts = config.points();
    let n = pts.len();
    let below = |a: usize, b: usize| -> Ordering {
        (&pts[a][1], &pts[a][0]).cmp(&(&pts[b][1], &pts[b][0]))
    };

    for anchor in 0..n {
        let mut fan: Vec<usize> = (0..n)
            .filter(|&i| below(anchor, i) == Ordering::Less)
            .collect();
        if fan.len() < r - 1 {
            continue;
        }
        // All candidates lie in the half-plane above the anchor, so the
        // orientation test is a strict total order by angle.
        fan.sort_by(
            |&a, &b| match orient_unchecked(&pts[anchor], &pts[a], &pts[b]) {
                1 => Ordering::Less,
                -1 => Ordering::Greater,
                _ => Ordering::Equal,
            },
        );
        let empty_fan = |a: usize, b: usize| {
            (0..n).all(|k| {
                k == anchor
                    || k == a
                    || k == b
                    || !in_open_triangle(&pts[k], &pts[anchor], &pts[a], &pts[b])
            })
        };
        let mut chain = vec![anchor];
        if grow_fan(pts, &fan, 0, r, &mut chain, &empty_fan) {
            return Ok(Some(chain));
        }
    }
    Ok(None)
}

fn grow_fan(
    pts: &[RationalPoint],
    fan: &[usize],
    start: usize,
    r: usize,
    chain: &mut Vec<usize>,
    empty_fan: &dyn Fn(usize, usize) -> bool,
) -> bool {
    let anchor = chain[0];
    if chain.len() == r {
        let last = chain[r - 1];
        return orient_unchecked(&pts[chain[r - 2]], &pts[last], &pts[anchor]) > 0;
    }
    for pos in start..fan.len() {
        let next = fan[pos];
        if chain.len() >= 2 {
            let prev = chain[chain.len() - 1];
            let before = chain[chain.len() - 2];
            if orient_unchecked(&pts[before], &pts[prev], &pts[next]) <= 0 {
                continue;
            }
            if !empty_fan(prev, next) {
                continue;
            }
        }
        chain.push(next);
        if grow_fan(pts, fan, pos + 1, r, chain, empty_fan) {
            return true;
        }
        chain.pop();
    }
    false
}
