//! Run every decider against the oracle and summarise.
//!
//! cargo run --release --example census -- 14

use std::collections::BTreeMap;

use quartic_iso::census::{self, CensusCase};
use quartic_iso::oracle::Oracle;

fn main() -> quartic_iso::Result<()> {
    let max_n: u64 = std::env::args().nth(1).map_or(10, |s| s.parse().expect("integer argument"));
    let report = census::run_census(max_n, &Oracle::from_env())?;

    let mut per_family: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for row in &report.rows {
        let family = match row.case {
            CensusCase::AccAcc { .. } => "acc-acc",
            CensusCase::CiAcc { .. } => "ci-acc",
            CensusCase::CiTorus { .. } => "ci-torus",
        };
        let e = per_family.entry(family).or_default();
        e.0 += 1;
        e.1 += row.oracle_result as usize;
        e.2 += !row.ok() as usize;
    }
    for (family, (rows, iso, bad)) in per_family {
        println!("{family:9} rows={rows:5} isomorphic={iso:4} failures={bad}");
    }
    let slowest = report.rows.iter().max_by(|a, b| a.elapsed_ms.total_cmp(&b.elapsed_ms)).unwrap();
    println!("slowest row: {:?} in {:.2} ms", slowest.case, slowest.elapsed_ms);
    println!("{:?}", report.summary);
    Ok(())
}
