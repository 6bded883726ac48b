pub type GridPoint = (i64, i64);

const SYMMETRIES: [fn(GridPoint) -> GridPoint; 8] = [
    |(x, y)| (x, y),
    |(x, y)| (-y, x),
    |(x, y)| (-x, -y),
    |(x, y)| (y, -x),
    |(x, y)| (-x, y),
    |(x, y)| (x, -y),
    |(x, y)| (y, x),
    |(x, y)| (-y, -x),
];

/// Lexicographically least image of a coloured grid configuration under the
/// eight symmetries of the square followed by translation to the origin.
/// Points come back sorted; colours are relabelled by first occurrence.
pub fn canonical_form(points: &[GridPoint], colours: &[usize]) -> (Vec<GridPoint>, Vec<usize>) {
    assert_eq!(points.len(), colours.len());
    let mut best: Option<(Vec<GridPoint>, Vec<usize>)> = None;
    for sym in SYMMETRIES {
        let moved: Vec<GridPoint> = points.iter().map(|&p| sym(p)).collect();
        let min_x = moved.iter().map(|p| p.0).min().unwrap_or(0);
        let min_y = moved.iter().map(|p| p.1).min().unwrap_or(0);
        let mut pairs: Vec<(GridPoint, usize)> = moved
            .iter()
            .zip(colours)
            .map(|(&(x, y), &c)| ((x - min_x, y - min_y), c))
            .collect();
        pairs.sort_unstable();
        let mut relabel: Vec<usize> = Vec::new();
        let canon_colours = pairs
            .iter()
            .map(|&(_, c)| match relabel.iter().position(|&r| r == c) {
                Some(i) => i,
                None => {
                    relabel.push(c);
                    relabel.len() - 1
                }
            })
            .collect();
        let candidate = (pairs.into_iter().map(|(p, _)| p).collect(), canon_colours);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.expect("at least one symmetry")
}
