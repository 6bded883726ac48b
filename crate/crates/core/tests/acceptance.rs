mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use blockset::blocked::{
    audit_lemmas, infer_colouring, verify_blocked, verify_midpoint_blocked, ColouredPointSet,
    KSetSignature,
};
use blockset::constructions::{
    augment, canonical, canonical_names, grid_3d, power, product, turan_lines, verify_line_cover,
};
use blockset::geom::find_empty_convex_polygon;
use blockset::search::{brute_force_visibility, certify_absent, enumerate_blocked, SearchSpec};
use blockset::visibility::{occlusion_free_projection, visibility_graph};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn sig(s: &str) -> KSetSignature {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sigs(list: &[&str]) -> std::collections::BTreeSet<KSetSignature> {
    list.iter().map(|s| sig(s)).collect()
}

fn midpoint_blocked(set: &ColouredPointSet) -> bool {
    verify_midpoint_blocked(set).map(|r| r.ok).unwrap_or(false)
}

fn grid_family() -> Check {
    let projected = {
        let g = grid_3d(3).unwrap();
        let flat = occlusion_free_projection(g.config(), 0).map_err(|e| e.to_string())?;
        g.with_config(flat.config).unwrap()
    };
    let cases = [
        (grid_3d(1).unwrap(), "2,1"),
        (grid_3d(2).unwrap(), "4,2,2,1"),
        (projected, "8,4,4,4,2,2,2,1"),
    ];
    for (set, expected) in cases {
        let report = verify_blocked(&set);
        ensure(report.ok, || {
            format!("{expected}: {} violations", report.violations.len())
        })?;
        ensure(report.signature == Some(sig(expected)), || {
            format!("{expected}: got {:?}", report.signature)
        })?;
        ensure(midpoint_blocked(&set), || {
            format!("{expected}: not midpoint-blocked")
        })?;
    }
    Ok(())
}

fn two_and_three_sets() -> Check {
    let out = enumerate_blocked(&SearchSpec::new(4, 4, 6)).map_err(|e| e.to_string())?;
    ensure(out.status.to_string() == "exhausted", || {
        format!("status {}", out.status)
    })?;
    let k2 = out.signatures_with_k(2);
    let k3 = out.signatures_with_k(3);
    ensure(k2 == sigs(&["1,1", "2,1"]), || format!("k=2: {k2:?}"))?;
    ensure(k3 == sigs(&["1,1,1", "2,1,1", "2,2,1", "2,2,2"]), || {
        format!("k=3: {k3:?}")
    })
}

fn no_3331() -> Check {
    let target = sig("3,3,3,1");
    let out = certify_absent(&target, &SearchSpec::new(4, 4, target.total()))
        .map_err(|e| e.to_string())?;
    ensure(out.certifies_absence(), || {
        format!(
            "status {} with {} witnesses",
            out.status,
            out.witnesses.len()
        )
    })
}

fn four_blocked_sets() -> Vec<(String, ColouredPointSet)> {
    let mut out = Vec::new();
    for name in canonical_names() {
        let set = canonical(name).unwrap();
        if set.num_colours() == 4 {
            out.push((name.to_string(), set.clone()));
        }
        if set.num_colours() == 3 {
            for m in 1..=3 {
                if let Ok(bigger) = augment(&set, m) {
                    out.push((format!("augment({name},{m})"), bigger));
                }
            }
        }
    }
    out
}

fn audit() -> Check {
    let sets = four_blocked_sets();
    ensure(sets.len() >= 4 + 12, || {
        format!("only {} four-colour sets", sets.len())
    })?;
    for (name, set) in sets {
        let report = audit_lemmas(&set).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.all_pass(), || format!("{name}: {report:?}"))?;
        ensure(report.classes_at_most_four == Some(true), || {
            format!("{name}: class bound not evaluated")
        })?;
    }
    Ok(())
}

fn witnesses() -> Check {
    let k3333 = canonical("K3333").unwrap();
    ensure(
        k3333.len() == 12 && k3333.signature() == sig("3,3,3,3"),
        || "K3333 shape".into(),
    )?;
    ensure(
        verify_blocked(&k3333).ok && midpoint_blocked(&k3333),
        || "K3333 not midpoint-blocked".into(),
    )?;
    ensure(audit_lemmas(&k3333).unwrap().all_pass(), || {
        "K3333 audit".into()
    })?;
    for (name, n, s) in [
        ("K4222", 10, "4,2,2,2"),
        ("K4221", 9, "4,2,2,1"),
        ("K3333B", 12, "3,3,3,3"),
    ] {
        let set = canonical(name).unwrap();
        ensure(set.len() == n && set.signature() == sig(s), || {
            format!("{name} shape")
        })?;
        ensure(verify_blocked(&set).ok, || format!("{name} not blocked"))?;
    }
    Ok(())
}

fn product_law() -> Check {
    let mut stored: Vec<(String, ColouredPointSet)> = canonical_names()
        .into_iter()
        .map(|n| (n.to_string(), canonical(n).unwrap()))
        .filter(|(_, s)| midpoint_blocked(s))
        .collect();
    for d in 1..=3 {
        stored.push((format!("grid3d({d})"), grid_3d(d).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10 {
        let (na, a) = &stored[(rng.next_u64() % stored.len() as u64) as usize];
        let (nb, b) = &stored[(rng.next_u64() % stored.len() as u64) as usize];
        let p = product(a, b).map_err(|e| format!("{na} x {nb}: {e}"))?;
        let expected = a.signature().product(&b.signature());
        ensure(p.signature() == expected, || {
            format!("{na} x {nb}: {} != {expected}", p.signature())
        })?;
        ensure(p.len() == a.len() * b.len(), || {
            format!("{na} x {nb}: size")
        })?;
    }
    let g2 = grid_3d(2).unwrap();
    let p = product(&g2, &g2).unwrap();
    let expected = sig("16,8,8,8,8,4,4,4,4,4,4,2,2,2,2,1");
    ensure(p.len() == 81 && p.signature() == expected, || {
        format!("[3]^2 x [3]^2: {}", p.signature())
    })?;
    ensure(verify_blocked(&p).ok && midpoint_blocked(&p), || {
        "[3]^2 x [3]^2 not midpoint-blocked".into()
    })?;
    let sq = power(&canonical("K3333").unwrap(), 2).unwrap();
    ensure(sq.len() == 144 && sq.num_colours() == 16, || {
        format!("K3333^2: {} points, {} classes", sq.len(), sq.num_colours())
    })
}

fn line_covers() -> Check {
    for k in 3..=6 {
        for n in 2..=5 {
            let report =
                verify_line_cover(&turan_lines(k, n).unwrap()).map_err(|e| e.to_string())?;
            ensure(report.all_pass(), || format!("({k},{n}): {report:?}"))?;
            let pairs = k * n * (k * n - 1) / 2;
            ensure(report.pairs_covered == pairs, || {
                format!("({k},{n}): {} pairs", report.pairs_covered)
            })?;
        }
    }
    Ok(())
}

fn empty_polygons() -> Check {
    for (r, n) in [(5, 10), (4, 5)] {
        for seed in 0..50 {
            let c = common::random_general_position(seed, n, 100);
            let found = find_empty_convex_polygon(&c, r).map_err(|e| e.to_string())?;
            let poly = found.ok_or_else(|| format!("r={r} seed {seed}: none"))?;
            ensure(
                poly.len() == r
                    && common::is_empty_convex(&c, &poly)
                    && common::is_ccw_cycle(&c, &poly),
                || format!("r={r} seed {seed}: {poly:?} rejected by oracle"),
            )?;
            ensure(common::brute_force_empty_polygon(&c, r), || {
                format!("r={r} seed {seed}: oracle disagrees")
            })?;
        }
    }
    Ok(())
}

fn augmentation() -> Check {
    for name in canonical_names() {
        let set = canonical(name).unwrap();
        for m in 1..=3 {
            let collinear = blockset::geom::max_collinear(set.config()) == set.len();
            if m == 3 && collinear {
                continue;
            }
            let out = augment(&set, m).map_err(|e| format!("{name}, {m}: {e}"))?;
            ensure(verify_blocked(&out).ok, || {
                format!("{name}, {m}: not blocked")
            })?;
            ensure(out.signature() == set.signature().with(m), || {
                format!("{name}, {m}: {}", out.signature())
            })?;
        }
    }
    for (name, row) in [("K222", "2,2,2"), ("K111", "1,1,1")] {
        for m in 1..=3 {
            let out = augment(&canonical(name).unwrap(), m).unwrap();
            let expected = sig(row).with(m);
            ensure(out.signature() == expected, || {
                format!("row {expected}: got {}", out.signature())
            })?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut stored: Vec<ColouredPointSet> = canonical_names()
        .into_iter()
        .map(|n| canonical(n).unwrap())
        .collect();
    for d in 1..=3 {
        stored.push(grid_3d(d).unwrap());
    }
    for set in &stored {
        ensure(
            visibility_graph(set.config()) == brute_force_visibility(set.config()),
            || format!("stored set with {} points", set.len()),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut multipartite = 0;
    for seed in 0..200 {
        let n = 1 + (rng.next_u64() % 15) as usize;
        let c = common::random_points(seed, n, 6);
        ensure(visibility_graph(&c) == brute_force_visibility(&c), || {
            format!("random set {seed}")
        })?;
        if let Ok(set) = infer_colouring(&c) {
            multipartite += 1;
            ensure(verify_blocked(&set).ok, || {
                format!("random set {seed}: inferred colouring fails")
            })?;
        }
    }
    ensure(multipartite > 0, || "no multipartite random sets".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("grid family signatures and midpoint blocking", grid_family),
        ("2-sets and 3-sets on the 5x5 grid", two_and_three_sets),
        ("no {3,3,3,1} on the 5x5 grid", no_3331),
        ("4-blocked sets pass the structural audit", audit),
        ("stored 12-, 10- and 9-point witnesses", witnesses),
        ("product signatures and powers", product_law),
        ("Turan line covers", line_covers),
        ("empty pentagons and quadrilaterals", empty_polygons),
        ("augmentation by 1, 2 or 3 points", augmentation),
        ("visibility and colouring oracles agree", oracle_equivalence),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed: Duration = start.elapsed();
        let line = match &result {
            Ok(()) => format!("criterion {:>2}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!(
                    "criterion {:>2}: FAIL  {name} ({elapsed:.2?}): {why}",
                    i + 1
                )
            }
        };
        writeln!(std::io::stderr(), "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
