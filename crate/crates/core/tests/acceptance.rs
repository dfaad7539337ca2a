//! Exit criteria. Runs every criterion in order and prints one PASS/FAIL line each.
//!
//! `cargo test -p quartic-iso --test acceptance`

use std::time::{Duration, Instant};

use quartic_iso::deciders::{self, AccBranch, Regime};
use quartic_iso::graph::{self, AccordionParams, CirculantParams, Graph};
use quartic_iso::oracle::Oracle;
use quartic_iso::witness::{self, verify_witness};
use quartic_iso::modarith;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, u64, fn(&Oracle) -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn acc(n: u64, k: u64) -> Graph {
    graph::accordion(AccordionParams::new(n, k).unwrap())
}

fn ci(n: u64, a: u64, b: u64) -> Graph {
    graph::circulant(CirculantParams::new(n, a as i64, b as i64).unwrap())
}

fn oracle_iso(o: &Oracle, g: &Graph, h: &Graph) -> Result<bool, String> {
    match o.are_isomorphic(g, h).map_err(|e| e.to_string())? {
        Some(m) => {
            ensure(verify_witness(g, h, &m).unwrap(), || "oracle returned a bad map".into())?;
            Ok(true)
        }
        None => Ok(false),
    }
}

fn ac1(o: &Oracle) -> Check {
    let v = deciders::circulant_iso_accordion(4, 1, 3, 2).map_err(|e| e.to_string())?;
    ensure(v.isomorphic && v.regime == Regime::Bipartite, || format!("decider: {v:?}"))?;
    let (c, a) = (ci(4, 1, 3), acc(4, 2));
    ensure(oracle_iso(o, &c, &a)?, || "oracle found no map".into())?;
    let w = witness::circulant_accordion_witness(4, 1, 3, 2).map_err(|e| e.to_string())?;
    ensure(verify_witness(&c, &a, &w).unwrap(), || "witness rejected".into())
}

fn ac2(o: &Oracle) -> Check {
    let v = deciders::circulant_iso_accordion(3, 1, 2, 1).map_err(|e| e.to_string())?;
    ensure(v.isomorphic && v.regime == Regime::NonBipartite, || format!("decider: {v:?}"))?;
    ensure(v.gcd_a == 1 && v.gcd_nk == 1 && v.lambda == Some(1), || format!("conditions: {v:?}"))?;
    ensure(modarith::cong_pm(2, 2, 6), || "2 ≢ ±2 mod 6".into())?;
    let (c, a) = (ci(3, 1, 2), acc(3, 1));
    ensure(oracle_iso(o, &c, &a)?, || "oracle found no map".into())?;
    let w = witness::circulant_accordion_witness(3, 1, 2, 1).map_err(|e| e.to_string())?;
    ensure(verify_witness(&c, &a, &w).unwrap(), || "phi witness rejected".into())
}

fn ac3(o: &Oracle) -> Check {
    for n in (4..=12).step_by(2) {
        let v = deciders::circulant_iso_accordion(n, 1, n as i64 - 1, 2).map_err(|e| e.to_string())?;
        ensure(v.isomorphic, || format!("decider false for n={n}"))?;
        ensure(oracle_iso(o, &acc(n, 2), &ci(n, 1, n - 1))?, || format!("oracle false for n={n}"))?;
    }
    Ok(())
}

fn ac4(o: &Oracle) -> Check {
    let mut pairs = 0;
    for n in 3..=14u64 {
        for k1 in 1..=n / 2 {
            for k2 in k1..=n / 2 {
                let d = deciders::accordions_isomorphic(n, k1, k2).unwrap().isomorphic;
                let t = oracle_iso(o, &acc(n, k1), &acc(n, k2))?;
                ensure(d == t, || format!("A[{n},{k1}] vs A[{n},{k2}]: decider {d}, oracle {t}"))?;
                pairs += 1;
            }
        }
    }
    ensure(pairs > 100, || format!("only {pairs} pairs"))?;
    ensure(deciders::accordions_isomorphic(14, 4, 6).unwrap().isomorphic, || "A[14,4] ≇ A[14,6]".into())?;
    ensure(oracle_iso(o, &acc(14, 4), &acc(14, 6))?, || "oracle: A[14,4] ≇ A[14,6]".into())?;
    ensure(!deciders::accordions_isomorphic(10, 2, 4).unwrap().isomorphic, || "A[10,2] ≅ A[10,4]".into())?;
    ensure(!oracle_iso(o, &acc(10, 2), &acc(10, 4))?, || "oracle: A[10,2] ≅ A[10,4]".into())
}

fn ac5(o: &Oracle) -> Check {
    for n in 3..=10u64 {
        for a in 1..n {
            for b in a + 1..n {
                let c = ci(n, a, b);
                for k in 1..=n / 2 {
                    let d = match deciders::circulant_iso_accordion(n, a as i64, b as i64, k) {
                        Ok(v) => v.isomorphic,
                        Err(quartic_iso::Error::NotApplicable(_)) => false,
                        Err(e) => return Err(e.to_string()),
                    };
                    let t = oracle_iso(o, &c, &acc(n, k))?;
                    ensure(d == t, || format!("Ci[{},{{{a},{b}}}] vs A[{n},{k}]: decider {d}, oracle {t}", 2 * n))?;
                }
            }
        }
    }
    Ok(())
}

fn ac6(o: &Oracle) -> Check {
    let mut positives = 0;
    for nprime in 9..=36u64 {
        let max_len = (nprime - 1) / 2;
        for n1 in 3..=nprime / 3 {
            if nprime % n1 != 0 {
                continue;
            }
            let n2 = nprime / n1;
            let torus = graph::cartesian_product(
                &graph::cycle_graph(n1 as usize).unwrap(),
                &graph::cycle_graph(n2 as usize).unwrap(),
            )
            .unwrap();
            for a1 in 1..=max_len {
                for a2 in a1 + 1..=max_len {
                    let (a1i, a2i) = (a1 as i64, a2 as i64);
                    let d = deciders::circulant_iso_torus(nprime, a1i, a2i, n1, n2).unwrap();
                    ensure(d == deciders::circulant_iso_torus(nprime, a2i, a1i, n1, n2).unwrap(), || {
                        format!("decider not symmetric in lengths at {nprime},{a1},{a2}")
                    })?;
                    if n1 > n2 {
                        continue;
                    }
                    let c = graph::circulant_of_order(nprime as usize, a1i, a2i).unwrap();
                    let t = oracle_iso(o, &c, &torus)?;
                    ensure(d == t, || {
                        format!("Ci[{nprime},{{{a1},{a2}}}] vs C{n1}□C{n2}: decider {d}, oracle {t}")
                    })?;
                    positives += usize::from(t);
                }
            }
        }
    }
    ensure(positives > 0, || "no isomorphic torus found".into())?;
    ensure(deciders::circulant_iso_torus(12, 3, 4, 3, 4).unwrap(), || "Ci[12,{3,4}] ≇ C3□C4".into())
}

fn ac7(o: &Oracle) -> Check {
    for n in 3..=12u64 {
        for k in 1..=n / 2 {
            let q = modarith::gcd(n, k).unwrap();
            let (built, map) = witness::cylinder_construction(2 * n / q, q, k).map_err(|e| e.to_string())?;
            let a = acc(n, k);
            ensure(verify_witness(&built, &a, &map).unwrap(), || format!("map rejected for A[{n},{k}]"))?;
            ensure(oracle_iso(o, &built, &a)?, || format!("construction ≇ A[{n},{k}]"))?;
            let cylinder = graph::cartesian_product(
                &graph::cycle_graph((2 * n / q) as usize).unwrap(),
                &graph::path_graph(q as usize).unwrap(),
            )
            .unwrap();
            let stripped = a.without_edges(&witness::cylinder_deleted_edges(n, k).unwrap()).unwrap();
            ensure(oracle_iso(o, &stripped, &cylinder)?, || format!("A[{n},{k}] minus edges ≇ cylinder"))?;
        }
    }
    let added = witness::cylinder_chords(4, 5, 5).unwrap();
    let (l, r) = (|i| witness::cylinder_left(4, 5, i), |i| witness::cylinder_right(4, 5, i));
    let expected = vec![(r(1), l(3)), (r(2), l(4)), (r(3), l(1)), (r(4), l(2))];
    ensure(added == expected, || format!("A[10,5] chords {added:?}, expected {expected:?}"))
}

fn ac8(o: &Oracle) -> Check {
    // natural automorphism
    for n in 3..=14u64 {
        for k in 1..=n / 2 {
            let psi = witness::natural_automorphism(n, k).map_err(|e| e.to_string())?;
            let g = acc(n, k);
            ensure(verify_witness(&g, &g, &psi).unwrap(), || format!("psi not an automorphism of A[{n},{k}]"))?;
            ensure(psi.then(&psi).unwrap().is_identity(), || format!("psi not involutive for A[{n},{k}]"))?;
        }
    }
    // every constructed witness
    for n in 3..=14u64 {
        for k1 in 1..=n / 2 {
            for k2 in 1..=n / 2 {
                let v = deciders::accordions_isomorphic(n, k1, k2).unwrap();
                if v.isomorphic {
                    let m = witness::accordion_iso_witness(n, k1, k2).map_err(|e| e.to_string())?;
                    ensure(verify_witness(&acc(n, k2), &acc(n, k1), &m).unwrap(), || {
                        format!("accordion witness {n},{k1},{k2}")
                    })?;
                    ensure(
                        matches!(v.branch, AccBranch::EqualK | AccBranch::CaseMinus | AccBranch::CasePlus),
                        || "branch".into(),
                    )?;
                }
            }
        }
    }
    for n in 3..=10u64 {
        for a in 1..n {
            for b in a + 1..n {
                for k in 1..=n / 2 {
                    if let Ok(v) = deciders::circulant_iso_accordion(n, a as i64, b as i64, k) {
                        if v.isomorphic {
                            let m = witness::circulant_accordion_witness(n, a as i64, b as i64, k)
                                .map_err(|e| e.to_string())?;
                            ensure(verify_witness(&ci(n, a, b), &acc(n, k), &m).unwrap(), || {
                                format!("circulant witness {n},{a},{b},{k}")
                            })?;
                        }
                    }
                }
                if a % 2 == 1 && b % 2 == 1 && a + b == n && modarith::gcd(2 * n, a).unwrap() == 1 {
                    let m = witness::mu_map(n, a as i64, b as i64).map_err(|e| e.to_string())?;
                    ensure(verify_witness(&ci(n, 1, n - 1), &ci(n, a, b), &m).unwrap(), || {
                        format!("mu map {n},{a},{b}")
                    })?;
                }
            }
        }
    }
    // partner uniqueness, arithmetic only
    for n in 3..=60u64 {
        for k in 1..=n / 2 {
            deciders::unique_partner(n, k).map_err(|e| e.to_string())?;
        }
    }
    // predicates against structure
    for n in 3..=14u64 {
        for k in 1..=n / 2 {
            let g = acc(n, k);
            ensure(deciders::accordion_is_bipartite(n, k).unwrap() == graph::is_bipartite(&g), || {
                format!("bipartite A[{n},{k}]")
            })?;
            ensure(graph::is_connected(&g) && graph::is_regular(&g, 4), || format!("shape of A[{n},{k}]"))?;
        }
    }
    for n in 3..=10u64 {
        let circulants: Vec<Graph> =
            (1..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| ci(n, a, b)).collect();
        for a in 1..n {
            for b in a + 1..n {
                let g = ci(n, a, b);
                let (ai, bi) = (a as i64, b as i64);
                ensure(deciders::circulant_is_bipartite(n, ai, bi).unwrap() == graph::is_bipartite(&g), || {
                    format!("bipartite Ci[{},{{{a},{b}}}]", 2 * n)
                })?;
                ensure(deciders::circulant_is_connected(n, ai, bi).unwrap() == graph::is_connected(&g), || {
                    format!("connected Ci[{},{{{a},{b}}}]", 2 * n)
                })?;
            }
        }
        for k in 1..=n / 2 {
            let g = acc(n, k);
            let mut structural = false;
            for c in &circulants {
                if oracle_iso(o, &g, c)? {
                    structural = true;
                    break;
                }
            }
            ensure(deciders::accordion_is_circulant(n, k).unwrap() == structural, || {
                format!("circulance of A[{n},{k}]: oracle {structural}")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let oracle = Oracle::default();
    let criteria: [Criterion; 8] = [
        ("AC1 Ci[8,{1,3}] ≅ A[4,2]", 1, ac1),
        ("AC2 A[3,1] ≅ Ci[6,{1,2}]", 1, ac2),
        ("AC3 A[n,2] ≅ Ci[2n,{1,n-1}], even n in [4,12]", 30, ac3),
        ("AC4 accordion pairs vs oracle, n in [3,14]", 300, ac4),
        ("AC5 circulant-accordion vs oracle, n in [3,10]", 600, ac5),
        ("AC6 circulant-torus vs oracle, orders [9,36]", 600, ac6),
        ("AC7 edge-addition construction, n <= 12", 60, ac7),
        ("AC8 property suites", 120, ac8),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check(&oracle);
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed < Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit}s"))
        });
        match result {
            Ok(()) => println!("PASS  {name}  ({:.3}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}  ({:.3}s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
