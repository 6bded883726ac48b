use std::collections::HashMap;

use crate::error::{Error, Result};

/// A family of 2- and 3-vertex "lines" over the vertices of the complete
/// multipartite graph with `k` classes of `n` vertices. Vertex `(i, p)` has
/// index `i * n + p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCover {
    pub k: usize,
    pub n: usize,
    pub lines: Vec<Vec<usize>>,
}

impl LineCover {
    pub fn vertex(&self, class: usize, p: usize) -> usize {
        class * self.n + p
    }

    pub fn num_vertices(&self) -> usize {
        self.k * self.n
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        a / self.n != b / self.n
    }
}

/// The line cover of the Turán graph `T(kn, k)`:
/// triples `{(i,p), (i+1,p+q), (i,q)}` for `p != q`, pairs
/// `{(i,p), (i+1,2p)}`, and every pair between non-consecutive classes.
pub fn turan_lines(k: usize, n: usize) -> Result<LineCover> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("k must be >= 3, got {k}")));
    }
    if n < 2 {
        return Err(Error::OutOfRange(format!("n must be >= 2, got {n}")));
    }
    let v = |i: usize, p: usize| (i % k) * n + p % n;
    let mut lines = Vec::new();
    for i in 0..k {
        for p in 0..n {
            for q in p + 1..n {
                lines.push(vec![v(i, p), v(i + 1, p + q), v(i, q)]);
            }
        }
    }
    for i in 0..k {
        for p in 0..n {
            lines.push(vec![v(i, p), v(i + 1, 2 * p)]);
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if j == i + 1 || (i + k - 1) % k == j {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    lines.push(vec![v(i, p), v(j, q)]);
                }
            }
        }
    }
    Ok(LineCover { k, n, lines })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCoverReport {
    /// Each line is an edge or an induced path on three vertices.
    pub lines_are_edges_or_paths: bool,
    /// Every vertex pair lies in exactly one line.
    pub every_pair_exactly_once: bool,
    /// A pair covered zero or several times, when the previous check fails.
    pub witness_pair: Option<(usize, usize)>,
    /// Every line has a vertex adjacent to all of its vertices.
    pub lines_have_common_neighbour: bool,
    /// Every vertex lies on some line.
    pub every_vertex_covered: bool,
    /// Number of distinct vertex pairs covered.
    pub pairs_covered: usize,
}

impl LineCoverReport {
    pub fn all_pass(&self) -> bool {
        self.lines_are_edges_or_paths
            && self.every_pair_exactly_once
            && self.lines_have_common_neighbour
            && self.every_vertex_covered
    }
}

pub fn verify_line_cover(cover: &LineCover) -> Result<LineCoverReport> {
    let total = cover.num_vertices();
    for (index, line) in cover.lines.iter().enumerate() {
        if line.len() != 2 && line.len() != 3 {
            return Err(Error::MalformedLine {
                index,
                reason: format!("length {}", line.len()),
            });
        }
        if let Some(&bad) = line.iter().find(|&&x| x >= total) {
            return Err(Error::MalformedLine {
                index,
                reason: format!("vertex {bad} out of range for {total} vertices"),
            });
        }
        for a in 0..line.len() {
            if line[a + 1..].contains(&line[a]) {
                return Err(Error::MalformedLine {
                    index,
                    reason: format!("vertex {} repeated", line[a]),
                });
            }
        }
    }

    let mut shape_ok = true;
    let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
    let mut covered = vec![false; total];
    for line in &cover.lines {
        let mut edges = 0;
        for a in 0..line.len() {
            covered[line[a]] = true;
            for b in a + 1..line.len() {
                let (x, y) = (line[a].min(line[b]), line[a].max(line[b]));
                *counts.entry((x, y)).or_default() += 1;
                if cover.adjacent(x, y) {
                    edges += 1;
                }
            }
        }
        // A pair must be an edge; a triple must span exactly two edges.
        shape_ok &= edges == line.len() - 1;
    }

    let mut witness_pair = None;
    'outer: for x in 0..total {
        for y in x + 1..total {
            if counts.get(&(x, y)).copied().unwrap_or(0) != 1 {
                witness_pair = Some((x, y));
                break 'outer;
            }
        }
    }

    let common = cover
        .lines
        .iter()
        .all(|line| (0..total).any(|z| line.iter().all(|&x| cover.adjacent(x, z))));

    Ok(LineCoverReport {
        lines_are_edges_or_paths: shape_ok,
        every_pair_exactly_once: witness_pair.is_none(),
        witness_pair,
        lines_have_common_neighbour: common,
        every_vertex_covered: covered.iter().all(|&c| c),
        pairs_covered: counts.len(),
    })
}
