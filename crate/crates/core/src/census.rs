//! Decider-versus-oracle cross validation over parameter grids.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::deciders;
use crate::error::{invalid, Error, Result};
use crate::graph::{self, AccordionParams, CirculantParams};
use crate::oracle::Oracle;
use crate::witness::{self, verify_witness};

/// Largest `n` for circulant-accordion rows.
pub const CI_ACC_MAX_N: u64 = 10;
/// Torus rows cover circulant orders `9..=TORUS_MAX_ORDER`.
pub const TORUS_MAX_ORDER: u64 = 36;

/// One pair of graphs compared by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CensusCase {
    /// `A[n,k1]` vs `A[n,k2]`, `k1 <= k2`.
    AccAcc { n: u64, k1: u64, k2: u64 },
    /// `Ci[2n,{a,b}]` vs `A[n,k]`, `a < b` normalized.
    CiAcc { n: u64, a: u64, b: u64, k: u64 },
    /// `Ci[n',{a1,a2}]` vs `C_{n1} □ C_{n2}`, `n1 <= n2`, `n1·n2 = n'`.
    CiTorus { nprime: u64, a1: u64, a2: u64, n1: u64, n2: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusVerdict {
    pub case: CensusCase,
    pub decider_result: bool,
    pub oracle_result: bool,
    pub agree: bool,
    /// Present exactly when the decider said "isomorphic".
    pub witness_verified: Option<bool>,
    pub elapsed_ms: f64,
}

impl CensusVerdict {
    pub fn ok(&self) -> bool {
        self.agree && self.witness_verified != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub rows: usize,
    pub isomorphic: usize,
    pub disagreements: usize,
    pub witness_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub max_n: u64,
    pub rows: Vec<CensusVerdict>,
    pub summary: CensusSummary,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(CensusVerdict::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CensusVerdict> {
        self.rows.iter().filter(|r| !r.ok())
    }
}

pub fn acc_acc_cases(max_n: u64) -> Vec<CensusCase> {
    (3..=max_n)
        .flat_map(|n| {
            (1..=n / 2).flat_map(move |k1| (k1..=n / 2).map(move |k2| CensusCase::AccAcc { n, k1, k2 }))
        })
        .collect()
}

pub fn ci_acc_cases(max_n: u64) -> Vec<CensusCase> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for a in 1..n {
            for b in a + 1..n {
                out.extend((1..=n / 2).map(|k| CensusCase::CiAcc { n, a, b, k }));
            }
        }
    }
    out
}

/// Torus rows for circulant orders `min_order..=max_order`.
pub fn torus_cases(min_order: u64, max_order: u64) -> Vec<CensusCase> {
    let mut out = Vec::new();
    for nprime in min_order.max(9)..=max_order {
        let max_len = (nprime - 1) / 2;
        for n1 in (3..=nprime).take_while(|n1| n1 * n1 <= nprime) {
            if nprime % n1 != 0 {
                continue;
            }
            let n2 = nprime / n1;
            for a1 in 1..=max_len {
                for a2 in a1 + 1..=max_len {
                    out.push(CensusCase::CiTorus { nprime, a1, a2, n1, n2 });
                }
            }
        }
    }
    out
}

/// The full grid: accordion pairs to `max_n`, circulant-accordion pairs to
/// `min(max_n, 10)`, torus pairs for orders `9..=36`.
pub fn census_cases(max_n: u64) -> Vec<CensusCase> {
    let mut cases = acc_acc_cases(max_n);
    cases.extend(ci_acc_cases(max_n.min(CI_ACC_MAX_N)));
    cases.extend(torus_cases(9, TORUS_MAX_ORDER));
    cases
}

/// Runs the decider, the oracle and (when the decider says yes) the witness
/// check for one case.
pub fn evaluate(case: CensusCase, oracle: &Oracle) -> Result<CensusVerdict> {
    let start = Instant::now();
    let (decider_result, oracle_map, witness_verified) = match case {
        CensusCase::AccAcc { n, k1, k2 } => {
            let decided = deciders::accordions_isomorphic(n, k1, k2)?.isomorphic;
            let g1 = graph::accordion(AccordionParams::new(n, k1)?);
            let g2 = graph::accordion(AccordionParams::new(n, k2)?);
            let found = oracle.are_isomorphic(&g2, &g1)?;
            let witness = decided.then(|| {
                witness::accordion_iso_witness(n, k1, k2)
                    .and_then(|m| verify_witness(&g2, &g1, &m))
                    .unwrap_or(false)
            });
            (decided, found, witness)
        }
        CensusCase::CiAcc { n, a, b, k } => {
            let decided = match deciders::circulant_iso_accordion(n, a as i64, b as i64, k) {
                Ok(v) => v.isomorphic,
                Err(Error::NotApplicable(_)) => false,
                Err(e) => return Err(e),
            };
            let ci = graph::circulant(CirculantParams::new(n, a as i64, b as i64)?);
            let acc = graph::accordion(AccordionParams::new(n, k)?);
            let found = oracle.are_isomorphic(&ci, &acc)?;
            let witness = decided.then(|| {
                witness::circulant_accordion_witness(n, a as i64, b as i64, k)
                    .and_then(|m| verify_witness(&ci, &acc, &m))
                    .unwrap_or(false)
            });
            (decided, found, witness)
        }
        CensusCase::CiTorus { nprime, a1, a2, n1, n2 } => {
            let decided = deciders::circulant_iso_torus(nprime, a1 as i64, a2 as i64, n1, n2)?;
            let ci = graph::circulant_of_order(nprime as usize, a1 as i64, a2 as i64)?;
            let torus = graph::cartesian_product(
                &graph::cycle_graph(n1 as usize)?,
                &graph::cycle_graph(n2 as usize)?,
            )?;
            let found = oracle.are_isomorphic(&ci, &torus)?;
            // no explicit construction for tori; the oracle's map is the certificate
            let witness = decided.then(|| {
                found.as_ref().is_some_and(|m| verify_witness(&ci, &torus, m).unwrap_or(false))
            });
            (decided, found, witness)
        }
    };
    let oracle_result = oracle_map.is_some();
    Ok(CensusVerdict {
        case,
        decider_result,
        oracle_result,
        agree: decider_result == oracle_result,
        witness_verified,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Evaluates `cases` in parallel; rows come back sorted by case.
pub fn run_cases(cases: &[CensusCase], oracle: &Oracle) -> Result<Vec<CensusVerdict>> {
    let mut rows = cases.par_iter().map(|&c| evaluate(c, oracle)).collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.case);
    Ok(rows)
}

pub fn run_census(max_n: u64, oracle: &Oracle) -> Result<CensusReport> {
    if max_n < 3 {
        return Err(invalid(format!("census needs max n >= 3, got {max_n}")));
    }
    let rows = run_cases(&census_cases(max_n), oracle)?;
    let summary = CensusSummary {
        rows: rows.len(),
        isomorphic: rows.iter().filter(|r| r.oracle_result).count(),
        disagreements: rows.iter().filter(|r| !r.agree).count(),
        witness_failures: rows.iter().filter(|r| r.witness_verified == Some(false)).count(),
    };
    Ok(CensusReport { max_n, rows, summary })
}
