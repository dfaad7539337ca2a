//! Quartic circulants Ci[2n,{a,b}] that are accordions, in both parity regimes.
//!
//! cargo run --example circulant_accordion -- 12

use quartic_iso::deciders::{self, Regime};
use quartic_iso::graph::{self, AccordionParams, CirculantParams};
use quartic_iso::modarith::gcd;
use quartic_iso::witness::{self, verify_witness};

fn main() -> quartic_iso::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(12, |s| s.parse().expect("integer argument"));

    for a in 1..n as i64 {
        for b in a + 1..n as i64 {
            if a % 2 == 0 && b % 2 == 0 {
                continue;
            }
            let Some(k) = deciders::find_accordion_param(n, a, b)? else { continue };
            let v = deciders::circulant_iso_accordion(n, a, b, k)?;
            let m = witness::circulant_accordion_witness(n, a, b, k)?;
            let ci = graph::circulant(CirculantParams::new(n, a, b)?);
            let acc = graph::accordion(AccordionParams::new(n, k)?);
            let detail = match v.regime {
                Regime::Bipartite => "both lengths odd, a+b=n".to_owned(),
                Regime::NonBipartite => format!(
                    "gcd(2n,a)={} lambda={} sign={:+}",
                    v.gcd_a,
                    v.lambda.unwrap(),
                    v.sign.unwrap()
                ),
            };
            println!(
                "Ci[{},{{{a},{b}}}] = A[{n},{k}]  {detail}  verified={}",
                2 * n,
                verify_witness(&ci, &acc, &m)?
            );
        }
    }

    // x_i -> x_{ia} carries Ci[2n,{1,n-1}] onto Ci[2n,{a,n-a}]
    if n.is_multiple_of(2) {
        let a = (3..n as i64).step_by(2).find(|&a| gcd(2 * n, a as u64).unwrap() == 1).unwrap_or(1);
        let mu = witness::mu_map(n, a, n as i64 - a)?;
        println!("mu for a={a}: {:?}", mu.mapping());
    }
    Ok(())
}
