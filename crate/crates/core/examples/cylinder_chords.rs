//! A[n,k] minus 2n/q rungs is the cylinder C_{2n/q} x P_q, q = gcd(n,k), and
//! adding chords to that cylinder rebuilds the accordion.
//!
//! cargo run --example cylinder_chords -- 12 4

use quartic_iso::graph::{self, AccordionParams};
use quartic_iso::modarith::{gcd, lambda_min};
use quartic_iso::oracle;
use quartic_iso::witness;

fn main() -> quartic_iso::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (12, 4),
    };
    let q = gcd(n, k)?;
    let (n1, n2) = (2 * n / q, q);

    let acc = graph::accordion(AccordionParams::new(n, k)?);
    let deleted = witness::cylinder_deleted_edges(n, k)?;
    let cut = acc.without_edges(&deleted)?;
    let cyl = graph::cartesian_product(&graph::cycle_graph(n1 as usize)?, &graph::path_graph(n2 as usize)?)?;
    println!("A[{n},{k}] minus {} edges = C{n1} x P{n2}: {}", deleted.len(), oracle::are_isomorphic(&cut, &cyl)?.is_some());

    let gamma = lambda_min(n, k)?.lambda;
    let chords = witness::cylinder_chords(n1, n2, k)?;
    println!("gamma = {gamma}, chords r_i l_(i+2gamma): {chords:?}");
    let (built, m) = witness::cylinder_construction(n1, n2, k)?;
    println!("C{n1} x P{n2} plus chords -> A[{n},{k}]: {:?}", m.mapping());
    assert_eq!(built.size(), acc.size());
    Ok(())
}
