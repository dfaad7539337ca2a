//! Number theory used by the deciders: gcd, signed congruences and the
//! least multiplier `λ` with `λ·k ≡ gcd(n,k) (mod n)`.

use serde::Serialize;

use crate::error::{invalid, Result};

/// Largest accepted family parameter. Keeps every product of two parameters
/// (and small multiples of it) inside `u64`/`i64`.
pub const MAX_PARAM: u64 = 1 << 30;

/// Greatest common divisor; `gcd(x, 0) = x`. Both zero is rejected.
pub fn gcd(x: u64, y: u64) -> Result<u64> {
    if x == 0 && y == 0 {
        return Err(invalid("gcd(0, 0) is undefined"));
    }
    Ok(gcd_raw(x, y))
}

pub(crate) fn gcd_raw(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// `gcd(gcd(x, y), z)`.
pub fn gcd3(x: u64, y: u64, z: u64) -> Result<u64> {
    if x == 0 && y == 0 && z == 0 {
        return Err(invalid("gcd(0, 0, 0) is undefined"));
    }
    Ok(gcd_raw(gcd_raw(x, y), z))
}

/// Canonical residue of `x` modulo `m`, in `[0, m)`.
pub fn residue(x: i64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    x.rem_euclid(m as i64) as u64
}

/// `x ≡ y (mod m)` or `x ≡ -y (mod m)`.
pub fn cong_pm(x: i64, y: i64, m: u64) -> bool {
    sign_of_congruence(x, y, m).is_some()
}

/// `Some(-1)` when `x ≡ -y`, `Some(1)` when `x ≡ y`, preferring `-1` when both hold.
pub fn sign_of_congruence(x: i64, y: i64, m: u64) -> Option<i8> {
    let rx = residue(x, m);
    if rx == residue(-y, m) {
        Some(-1)
    } else if rx == residue(y, m) {
        Some(1)
    } else {
        None
    }
}

/// The least positive `λ` with `λ·k ≡ gcd(n,k) (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaResult {
    pub lambda: u64,
}

/// Linear scan for the least `λ >= 1` with `λ·k ≡ gcd(n,k) (mod n)`.
///
/// Such a `λ` always exists and is at most `n / gcd(n,k)`, because `gcd(n,k)`
/// generates the subgroup `<k>` of `Z_n`.
pub fn lambda_min(n: u64, k: u64) -> Result<LambdaResult> {
    if !(3..=MAX_PARAM).contains(&n) {
        return Err(invalid(format!("n={n} outside [3, {MAX_PARAM}]")));
    }
    if k < 1 || k > n / 2 {
        return Err(invalid(format!("k={k} outside [1, {}]", n / 2)));
    }
    let target = gcd_raw(n, k) % n;
    let mut acc = 0;
    for lambda in 1..=n {
        acc = (acc + k) % n;
        if acc == target {
            return Ok(LambdaResult { lambda });
        }
    }
    unreachable!("gcd(n,k) lies in the cyclic subgroup generated by k")
}
