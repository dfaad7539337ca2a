//! Circulants of order n' that are tori C_{n1} x C_{n2}.
//!
//! cargo run --example torus -- 36

use quartic_iso::deciders;
use quartic_iso::graph;
use quartic_iso::oracle;
use quartic_iso::witness::verify_witness;

fn main() -> quartic_iso::Result<()> {
    let max_order: u64 = std::env::args().nth(1).map_or(36, |s| s.parse().expect("integer argument"));

    for nprime in 9..=max_order {
        let half = (nprime as i64 - 1) / 2;
        for a1 in 1..=half {
            for a2 in a1 + 1..=half {
                let Some((n1, n2)) = deciders::circulant_torus_factors(nprime, a1, a2)? else { continue };
                let ci = graph::circulant_of_order(nprime as usize, a1, a2)?;
                let torus = graph::cartesian_product(&graph::cycle_graph(n1 as usize)?, &graph::cycle_graph(n2 as usize)?)?;
                // no closed-form map here; the oracle supplies one
                let m = oracle::are_isomorphic(&ci, &torus)?.expect("decider and oracle agree");
                println!(
                    "Ci[{nprime},{{{a1},{a2}}}] = C{n1} x C{n2}  verified={}",
                    verify_witness(&ci, &torus, &m)?
                );
            }
        }
    }
    Ok(())
}
