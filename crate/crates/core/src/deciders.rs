//! Arithmetic isomorphism criteria between accordion graphs, quartic
//! circulants and tori `C_{n1} □ C_{n2}`.
//!
//! Every predicate here is `O(1)` or a short scan over `k`; none of them builds
//! a graph. The census and the acceptance tests check them against the oracle.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{fold_length, AccordionParams, CirculantParams};
use crate::modarith::{self, gcd_raw, sign_of_congruence, MAX_PARAM};

/// Which clause settled `A[n,k1]` versus `A[n,k2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AccBranch {
    EqualK,
    /// `k1·k2/2 ≡ -2 (mod n)`
    CaseMinus,
    /// `k1·k2/2 ≡ +2 (mod n)`
    CasePlus,
    NotIsomorphic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AccAccVerdict {
    pub isomorphic: bool,
    pub branch: AccBranch,
    pub gcd1: u64,
    pub gcd2: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Both lengths odd.
    Bipartite,
    /// One odd length, one even length.
    NonBipartite,
}

/// Outcome of `Ci[2n,{a,b}]` versus `A[n,k]`.
///
/// `a` and `b` are the normalized lengths after orientation: in the
/// non-bipartite regime `a` is the odd one, and `swapped` records whether the
/// caller's order was reversed to get there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CiAccVerdict {
    pub isomorphic: bool,
    pub regime: Regime,
    pub matched_k: u64,
    pub a: u64,
    pub b: u64,
    pub swapped: bool,
    /// `gcd(2n, a)`
    pub gcd_a: u64,
    /// `gcd(n, k)`
    pub gcd_nk: u64,
    /// `λ` for `(n, k)`; only computed in the non-bipartite regime.
    pub lambda: Option<u64>,
    /// `+1` / `-1` when `b·gcd(n,k) ≡ ±2λa (mod 2n)` holds, non-bipartite regime only.
    pub sign: Option<i8>,
}

pub fn accordion_is_bipartite(n: u64, k: u64) -> Result<bool> {
    let p = AccordionParams::new(n, k)?;
    Ok(p.n() % 2 == 0 && p.k() % 2 == 0)
}

/// Whether `A[n,k]` is isomorphic to some quartic circulant.
pub fn accordion_is_circulant(n: u64, k: u64) -> Result<bool> {
    let p = AccordionParams::new(n, k)?;
    let (n, k) = (p.n(), p.k());
    Ok(k % 2 == 1 || n % 2 == 1 || k == 2)
}

/// Bipartiteness of `Ci[2n,{a,b}]`.
///
/// A connected circulant is bipartite iff `a` and `b` are both odd. In general
/// the graph is `d = gcd(2n,a,b)` copies of `Ci[2n/d,{a/d,b/d}]`, so the test is
/// applied to the reduced lengths, and the reduced order must be even.
pub fn circulant_is_bipartite(n: u64, a: i64, b: i64) -> Result<bool> {
    let p = CirculantParams::new(n, a, b)?;
    let d = gcd_raw(gcd_raw(2 * p.n(), p.a()), p.b());
    Ok((p.a() / d) % 2 == 1 && (p.b() / d) % 2 == 1 && (2 * p.n() / d).is_multiple_of(2))
}

/// `gcd(2n, a, b) = 1`.
pub fn circulant_is_connected(n: u64, a: i64, b: i64) -> Result<bool> {
    let p = CirculantParams::new(n, a, b)?;
    Ok(gcd_raw(gcd_raw(2 * p.n(), p.a()), p.b()) == 1)
}

/// Decides `A[n,k1] ≅ A[n,k2]`.
///
/// Distinct parameters are isomorphic exactly when `gcd(n,k1) = gcd(n,k2) = 2`
/// and `k1·k2/2 ≡ ±2 (mod n)`.
pub fn accordions_isomorphic(n: u64, k1: u64, k2: u64) -> Result<AccAccVerdict> {
    let p1 = AccordionParams::new(n, k1)?;
    let p2 = AccordionParams::new(n, k2)?;
    let (gcd1, gcd2) = (gcd_raw(n, p1.k()), gcd_raw(n, p2.k()));
    let branch = if k1 == k2 {
        AccBranch::EqualK
    } else if gcd1 == 2 && gcd2 == 2 {
        // both even, so the halving is exact
        let half = (k1 * k2 / 2) as i64;
        match sign_of_congruence(half, 2, n) {
            Some(-1) => AccBranch::CaseMinus,
            Some(_) => AccBranch::CasePlus,
            None => AccBranch::NotIsomorphic,
        }
    } else {
        AccBranch::NotIsomorphic
    };
    Ok(AccAccVerdict { isomorphic: branch != AccBranch::NotIsomorphic, branch, gcd1, gcd2 })
}

/// The unique `k2 != k1` with `A[n,k1] ≅ A[n,k2]`, if one exists.
///
/// Finding two such values means the decider contradicts partner uniqueness
/// and is reported as [`Error::InvariantViolation`].
pub fn unique_partner(n: u64, k1: u64) -> Result<Option<u64>> {
    AccordionParams::new(n, k1)?;
    let mut found = None;
    for k2 in 1..=n / 2 {
        if k2 == k1 || !accordions_isomorphic(n, k1, k2)?.isomorphic {
            continue;
        }
        if let Some(prev) = found {
            return Err(Error::InvariantViolation(format!(
                "A[{n},{k1}] has two partners: k={prev} and k={k2}"
            )));
        }
        found = Some(k2);
    }
    Ok(found)
}

fn torus_lengths(nprime: u64, a1: i64, a2: i64) -> Result<(u64, u64)> {
    if !(5..=MAX_PARAM).contains(&nprime) {
        return Err(invalid(format!("circulant order {nprime} outside [5, {MAX_PARAM}]")));
    }
    let (l1, l2) = (fold_length(a1, nprime), fold_length(a2, nprime));
    if l1 == 0 || l2 == 0 || 2 * l1 >= nprime || 2 * l2 >= nprime || l1 == l2 {
        return Err(invalid(format!(
            "lengths {{{l1},{l2}}} do not give a quartic circulant of order {nprime}"
        )));
    }
    Ok((l1, l2))
}

/// Decides `Ci[n',{a1,a2}] ≅ C_{n1} □ C_{n2}` for a given factor pair.
///
/// Requires `n' = n1·n2`, `{gcd(n',a1), gcd(n',a2)} = {n1, n2}` under one of
/// the two pairings, and `gcd(n1, n2) = 1`. All three are enforced.
pub fn circulant_iso_torus(nprime: u64, a1: i64, a2: i64, n1: u64, n2: u64) -> Result<bool> {
    if n1 < 3 || n2 < 3 {
        return Err(invalid(format!("cycle lengths must be >= 3, got {n1} and {n2}")));
    }
    let (l1, l2) = torus_lengths(nprime, a1, a2)?;
    if n1.checked_mul(n2) != Some(nprime) {
        return Ok(false);
    }
    let (g1, g2) = (gcd_raw(nprime, l1), gcd_raw(nprime, l2));
    let paired = (g1 == n1 && g2 == n2) || (g1 == n2 && g2 == n1);
    Ok(paired && gcd_raw(n1, n2) == 1)
}

/// Exists-form of [`circulant_iso_torus`]: the factor pair `(n1, n2)`,
/// `n1 <= n2`, for which the circulant is a torus, if any.
pub fn circulant_torus_factors(nprime: u64, a1: i64, a2: i64) -> Result<Option<(u64, u64)>> {
    torus_lengths(nprime, a1, a2)?;
    for n1 in 3..=nprime {
        if n1 * n1 > nprime {
            break;
        }
        if nprime.is_multiple_of(n1) && circulant_iso_torus(nprime, a1, a2, n1, nprime / n1)? {
            return Ok(Some((n1, nprime / n1)));
        }
    }
    Ok(None)
}

/// Decides `Ci[2n,{a,b}] ≅ A[n,k]`.
///
/// Both lengths odd: true iff `n` even, `k = 2`, `gcd(2n,a) = gcd(2n,b) = 1`
/// and `a + b = n`. One odd (`a`) and one even (`b`): true iff `k` is odd
/// whenever `n` is even, `gcd(2n,a,b) = 1`, `gcd(2n,a) = gcd(n,k)` and
/// `b·gcd(n,k) ≡ ±2λa (mod 2n)`. Two even lengths give a disconnected
/// circulant and are reported as [`Error::NotApplicable`].
pub fn circulant_iso_accordion(n: u64, a: i64, b: i64, k: u64) -> Result<CiAccVerdict> {
    let cp = CirculantParams::new(n, a, b)?;
    let ap = AccordionParams::new(n, k)?;
    let (n, k) = (cp.n(), ap.k());
    let (mut a, mut b) = (cp.a(), cp.b());
    let gcd_nk = gcd_raw(n, k);
    match (a % 2, b % 2) {
        (0, 0) => Err(Error::NotApplicable(format!(
            "Ci[{},{{{a},{b}}}] has two even lengths, is disconnected and so is not isomorphic to any accordion",
            2 * n
        ))),
        (1, 1) => {
            let gcd_a = gcd_raw(2 * n, a);
            let isomorphic = n % 2 == 0 && k == 2 && gcd_a == 1 && gcd_raw(2 * n, b) == 1 && a + b == n;
            Ok(CiAccVerdict {
                isomorphic,
                regime: Regime::Bipartite,
                matched_k: k,
                a,
                b,
                swapped: false,
                gcd_a,
                gcd_nk,
                lambda: None,
                sign: None,
            })
        }
        _ => {
            let swapped = a % 2 == 0;
            if swapped {
                std::mem::swap(&mut a, &mut b);
            }
            let gcd_a = gcd_raw(2 * n, a);
            let lambda = modarith::lambda_min(n, k)?.lambda;
            let sign = sign_of_congruence((b * gcd_nk) as i64, (2 * lambda * a) as i64, 2 * n);
            let parity_ok = n % 2 == 1 || k % 2 == 1;
            // a shared factor of 2n, a and b splits the circulant while A[n,k] is connected
            let connected = gcd_raw(gcd_a, b) == 1;
            let isomorphic = connected && parity_ok && gcd_a == gcd_nk && sign.is_some();
            Ok(CiAccVerdict {
                isomorphic,
                regime: Regime::NonBipartite,
                matched_k: k,
                a,
                b,
                swapped,
                gcd_a,
                gcd_nk,
                lambda: Some(lambda),
                sign,
            })
        }
    }
}

/// Smallest `k` in `[1, n/2]` with `Ci[2n,{a,b}] ≅ A[n,k]`; `None` when there
/// is none, including the disconnected two-even-lengths case.
pub fn find_accordion_param(n: u64, a: i64, b: i64) -> Result<Option<u64>> {
    CirculantParams::new(n, a, b)?;
    for k in 1..=n / 2 {
        match circulant_iso_accordion(n, a, b, k) {
            Ok(v) if v.isomorphic => return Ok(Some(k)),
            Ok(_) => {}
            Err(Error::NotApplicable(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
