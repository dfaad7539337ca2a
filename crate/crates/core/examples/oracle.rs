//! The brute-force oracle: pairwise search, canonical keys and the node budget.
//!
//! cargo run --example oracle

use std::collections::BTreeMap;

use quartic_iso::graph::{self, AccordionParams, CirculantParams};
use quartic_iso::oracle::{self, Oracle};

fn main() -> quartic_iso::Result<()> {
    let c3 = graph::cycle_graph(3)?;
    let c6 = graph::cycle_graph(6)?;
    // 2-regular on six vertices, same refinement colours, not isomorphic
    println!("C6 vs 2xC3: {:?}", oracle::are_isomorphic(&c6, &c3.disjoint_union(&c3))?);

    let acc = graph::accordion(AccordionParams::new(4, 2)?);
    let ci = graph::circulant(CirculantParams::new(4, 1, 3)?);
    let m = oracle::are_isomorphic(&ci, &acc)?.expect("isomorphic");
    println!("Ci[8,{{1,3}}] -> A[4,2]: {:?}", m.mapping());

    // group every quartic graph on 12 vertices from both families by canonical key
    let mut classes: BTreeMap<Vec<u8>, Vec<String>> = BTreeMap::new();
    for k in 1..=3 {
        let g = graph::accordion(AccordionParams::new(6, k)?);
        classes.entry(oracle::canonical_key(&g)?).or_default().push(format!("A[6,{k}]"));
    }
    for a in 1..6 {
        for b in a + 1..6 {
            let g = graph::circulant(CirculantParams::new(6, a, b)?);
            classes.entry(oracle::canonical_key(&g)?).or_default().push(format!("Ci[12,{{{a},{b}}}]"));
        }
    }
    for names in classes.values() {
        println!("{}", names.join(" = "));
    }

    // isomorphic but with large automorphism groups: a tiny budget runs out
    let g = graph::accordion(AccordionParams::new(14, 4)?);
    let h = graph::accordion(AccordionParams::new(14, 6)?);
    for budget in [2, 1_000] {
        match Oracle::with_budget(budget).are_isomorphic(&g, &h) {
            Ok(r) => println!("A[14,4] vs A[14,6], budget {budget}: isomorphic={}", r.is_some()),
            Err(e) => println!("A[14,4] vs A[14,6], budget {budget}: {e}"),
        }
    }
    Ok(())
}
