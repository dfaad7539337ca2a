//! Which accordions on the same number of rungs coincide, with explicit maps.
//!
//! cargo run --example accordion_isomorphisms -- 30

use quartic_iso::deciders::{self, AccBranch};
use quartic_iso::graph::{self, AccordionParams};
use quartic_iso::witness::{self, verify_witness};

fn main() -> quartic_iso::Result<()> {
    let max_n: u64 = std::env::args().nth(1).map_or(30, |s| s.parse().expect("integer argument"));

    for n in 3..=max_n {
        for k1 in 1..=n / 2 {
            let Some(k2) = deciders::unique_partner(n, k1)? else { continue };
            if k2 < k1 {
                continue;
            }
            let v = deciders::accordions_isomorphic(n, k1, k2)?;
            let m = witness::accordion_iso_witness(n, k1, k2)?;
            let g2 = graph::accordion(AccordionParams::new(n, k2)?);
            let g1 = graph::accordion(AccordionParams::new(n, k1)?);
            let sign = match v.branch {
                AccBranch::CaseMinus => "-2",
                AccBranch::CasePlus => "+2",
                _ => unreachable!(),
            };
            println!(
                "A[{n},{k2}] -> A[{n},{k1}]  k1*k2/2 = {sign} mod {n}  verified={}",
                verify_witness(&g2, &g1, &m)?
            );
        }
    }

    // the automorphism u_i <-> v_{2-i}
    let psi = witness::natural_automorphism(10, 3)?;
    let g = graph::accordion(AccordionParams::new(10, 3)?);
    println!("psi on A[10,3]: {:?} verified={}", psi.mapping(), verify_witness(&g, &g, &psi)?);
    Ok(())
}
