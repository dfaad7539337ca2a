//! Explicit isomorphisms between the graph families, and a checker for any
//! claimed vertex map.
//!
//! Every constructor verifies its own output with [`verify_witness`] before
//! returning it, and reports a failed self-check as
//! [`Error::InvariantViolation`].
//!
//! Directions are fixed per constructor and stated on each function. Invert
//! with [`VertexMap::inverse`] when the other direction is needed.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::deciders::{self, AccBranch, Regime};
use crate::error::{invalid, Error, Result};
use crate::graph::{self, AccordionParams, CirculantParams, Graph};
use crate::modarith::{self, gcd_raw};
use crate::oracle;

/// A bijection between the vertex sets of two graphs of equal order;
/// `mapping[i]` is the image of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexMap {
    source_order: usize,
    target_order: usize,
    mapping: Vec<usize>,
}

impl VertexMap {
    pub fn new(source_order: usize, target_order: usize, mapping: Vec<usize>) -> Result<Self> {
        if source_order != target_order {
            return Err(invalid(format!("orders differ: {source_order} vs {target_order}")));
        }
        if mapping.len() != source_order {
            return Err(invalid(format!(
                "mapping has {} entries for order {source_order}",
                mapping.len()
            )));
        }
        let mut hit = vec![false; target_order];
        for &m in &mapping {
            if m >= target_order || std::mem::replace(&mut hit[m], true) {
                return Err(invalid("mapping is not a bijection"));
            }
        }
        Ok(Self { source_order, target_order, mapping })
    }

    pub fn identity(order: usize) -> Self {
        Self { source_order: order, target_order: order, mapping: (0..order).collect() }
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn inverse(&self) -> VertexMap {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        VertexMap { source_order: self.target_order, target_order: self.source_order, mapping: inv }
    }

    /// `x ↦ then(self(x))`.
    pub fn then(&self, then: &VertexMap) -> Result<VertexMap> {
        if self.target_order != then.source_order {
            return Err(invalid("composed maps have mismatched orders"));
        }
        Ok(VertexMap {
            source_order: self.source_order,
            target_order: then.target_order,
            mapping: self.mapping.iter().map(|&m| then.mapping[m]).collect(),
        })
    }
}

/// True iff `m` is a bijection `V(g) -> V(h)` with `{x,y} ∈ E(g) ⇔ {m(x),m(y)} ∈ E(h)`.
pub fn verify_witness(g: &Graph, h: &Graph, m: &VertexMap) -> Result<bool> {
    if g.order() != m.source_order() || h.order() != m.target_order() {
        return Err(invalid(format!(
            "map {}->{} does not fit graphs of order {} and {}",
            m.source_order(),
            m.target_order(),
            g.order(),
            h.order()
        )));
    }
    // VertexMap is a bijection by construction; equal edge counts turn the
    // forward inclusion into an equivalence.
    Ok(g.size() == h.size() && g.edges().iter().all(|&(x, y)| h.has_edge(m.apply(x), m.apply(y))))
}

fn checked(g: &Graph, h: &Graph, m: VertexMap, what: &str) -> Result<VertexMap> {
    if verify_witness(g, h, &m)? {
        Ok(m)
    } else {
        Err(Error::InvariantViolation(format!("{what} failed verification")))
    }
}

/// A witness document: both graphs and the map from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub source: Graph,
    pub target: Graph,
    pub mapping: Vec<usize>,
}

impl WitnessDoc {
    pub fn new(source: &Graph, target: &Graph, map: &VertexMap) -> Self {
        Self { source: source.clone(), target: target.clone(), mapping: map.mapping().to_vec() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("witness serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-checks the stored map against the stored graphs.
    pub fn verify(&self) -> Result<bool> {
        let map = VertexMap::new(self.source.order(), self.target.order(), self.mapping.clone())?;
        verify_witness(&self.source, &self.target, &map)
    }
}

/// The automorphism `ψ` of `A[n,k]` swapping the two cycles:
/// `u_i ↦ v_{2-i}` and `v_i ↦ u_{2-i}` (so `u_1 ↔ v_1`). It is an involution.
pub fn natural_automorphism(n: u64, k: u64) -> Result<VertexMap> {
    let p = AccordionParams::new(n, k)?;
    let mut mapping = vec![0; 2 * n as usize];
    for i in 1..=n as i64 {
        mapping[p.u(i)] = p.v(2 - i);
        mapping[p.v(i)] = p.u(2 - i);
    }
    let g = graph::accordion(p);
    checked(&g, &g, VertexMap::new(g.order(), g.order(), mapping)?, "natural automorphism")
}

/// An isomorphism `A[n,k2] -> A[n,k1]`.
///
/// When `gcd(n,k1) = 2` the spokes of `A[n,k1]` form two disjoint `n`-cycles
/// `C1 = (v_1, u_1, v_{1+k1}, u_{1+k1}, ...)` and `C2 = (v_2, u_2, ...)`. They
/// become the outer and inner cycles of `A[n,k2]`: traversed forwards when
/// `k1·k2/2 ≡ -2 (mod n)` and backwards from the first vertex when it is `+2`.
pub fn accordion_iso_witness(n: u64, k1: u64, k2: u64) -> Result<VertexMap> {
    let verdict = deciders::accordions_isomorphic(n, k1, k2)?;
    let order = 2 * n as usize;
    let reverse = match verdict.branch {
        AccBranch::EqualK => return Ok(VertexMap::identity(order)),
        AccBranch::NotIsomorphic => {
            return Err(Error::NotIsomorphic(format!("A[{n},{k1}] and A[{n},{k2}]")));
        }
        AccBranch::CaseMinus => false,
        AccBranch::CasePlus => true,
    };
    let p1 = AccordionParams::new(n, k1)?;
    let p2 = AccordionParams::new(n, k2)?;
    let spoke_cycle = |start: i64| -> Vec<usize> {
        (0..n as i64 / 2)
            .flat_map(|t| {
                let i = start + t * k1 as i64;
                [p1.v(i), p1.u(i)]
            })
            .collect()
    };
    let (c1, c2) = (spoke_cycle(1), spoke_cycle(2));
    let n_us = n as usize;
    let mut mapping = vec![0; order];
    for i in 1..=n_us {
        let pos = if reverse { (n_us + 1 - i) % n_us } else { i - 1 };
        mapping[p2.u(i as i64)] = c1[pos];
        mapping[p2.v(i as i64)] = c2[pos];
    }
    checked(
        &graph::accordion(p2),
        &graph::accordion(p1),
        VertexMap::new(order, order, mapping)?,
        "accordion isomorphism",
    )
}

/// `μ : x_i ↦ x_{i·a}`, an isomorphism `Ci[2n,{1,n-1}] -> Ci[2n,{a,b}]`.
///
/// Requires `a`, `b` odd, `gcd(2n,a) = gcd(2n,b) = 1` and `a + b = n`, taken
/// after length normalization.
pub fn mu_map(n: u64, a: i64, b: i64) -> Result<VertexMap> {
    let target = CirculantParams::new(n, a, b)?;
    let (a, b) = (target.a(), target.b());
    let m = 2 * n;
    if a % 2 == 0 || b % 2 == 0 || gcd_raw(m, a) != 1 || gcd_raw(m, b) != 1 || a + b != n {
        return Err(invalid(format!(
            "mu map needs odd lengths coprime to {m} summing to {n}, got {{{a},{b}}}"
        )));
    }
    let source = CirculantParams::new(n, 1, n as i64 - 1)?;
    let mut by_source = vec![0; m as usize];
    for i in 1..=m as i64 {
        by_source[source.x(i)] = target.x(i * a as i64);
    }
    checked(
        &graph::circulant(source),
        &graph::circulant(target),
        VertexMap::new(m as usize, m as usize, by_source)?,
        "mu map",
    )
}

fn base_cache() -> &'static RwLock<HashMap<u64, VertexMap>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, VertexMap>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// An isomorphism `Ci[2n,{1,n-1}] -> A[n,2]` for even `n >= 4`, found once by
/// the oracle and memoised per `n`.
pub fn bipartite_base_witness(n: u64) -> Result<VertexMap> {
    if n < 4 || n % 2 == 1 {
        return Err(invalid(format!("base witness needs even n >= 4, got {n}")));
    }
    if let Some(m) = base_cache().read().unwrap().get(&n) {
        return Ok(m.clone());
    }
    let ci = graph::circulant(CirculantParams::new(n, 1, n as i64 - 1)?);
    let acc = graph::accordion(AccordionParams::new(n, 2)?);
    let map = oracle::are_isomorphic(&ci, &acc)?.ok_or_else(|| {
        Error::InvariantViolation(format!("oracle found Ci[{},{{1,{}}}] and A[{n},2] non-isomorphic", 2 * n, n - 1))
    })?;
    let map = checked(&ci, &acc, map, "bipartite base witness")?;
    base_cache().write().unwrap().entry(n).or_insert_with(|| map.clone());
    Ok(map)
}

/// An isomorphism `Ci[2n,{a,b}] -> A[n,2]` for both lengths odd, coprime to
/// `2n` and summing to `n`: the base witness composed with `μ⁻¹`.
pub fn bipartite_accordion_witness(n: u64, a: i64, b: i64) -> Result<VertexMap> {
    let mu = mu_map(n, a, b)?;
    let base = bipartite_base_witness(n)?;
    let map = mu.inverse().then(&base)?;
    let p = CirculantParams::new(n, a, b)?;
    checked(
        &graph::circulant(p),
        &graph::accordion(AccordionParams::new(n, 2)?),
        map,
        "bipartite circulant witness",
    )
}

/// An isomorphism `Ci[2n,{a,b}] -> A[n,k]`.
///
/// In the non-bipartite regime (`a` odd, `b` even after orientation) with
/// `q = gcd(n,k)`, `p = 2n/q`: for each `i` in `1..=q` the `p`-cycle of
/// length-`a` edges through `x_{a+ib}` is laid onto
/// `W_i = (v_i, u_i, v_{i+k}, u_{i+k}, ...)`. When `b·q ≡ 2λa (mod 2n)` the
/// cycle is walked as `x_{a+ib}, x_{2a+ib}, ...`; when `b·q ≡ -2λa` it is
/// walked as `x_{a+ib}, x_{ib}, x_{-a+ib}, ...`. The bipartite regime is
/// delegated to [`bipartite_accordion_witness`].
pub fn circulant_accordion_witness(n: u64, a: i64, b: i64, k: u64) -> Result<VertexMap> {
    let verdict = deciders::circulant_iso_accordion(n, a, b, k)?;
    if !verdict.isomorphic {
        return Err(Error::NotIsomorphic(format!("Ci[{},{{{a},{b}}}] and A[{n},{k}]", 2 * n)));
    }
    if verdict.regime == Regime::Bipartite {
        return bipartite_accordion_witness(n, a, b);
    }
    let cp = CirculantParams::new(n, a, b)?;
    let ap = AccordionParams::new(n, k)?;
    let (a, b) = (verdict.a as i64, verdict.b as i64);
    let q = verdict.gcd_nk as i64;
    let p = 2 * n as i64 / q;
    let step = match verdict.sign {
        Some(1) => 1,
        Some(_) => -1,
        None => unreachable!("isomorphic verdict carries a sign"),
    };
    let order = 2 * n as usize;
    let mut mapping = vec![usize::MAX; order];
    for i in 1..=q {
        for j in 0..p {
            // j-th vertex of the i-th cycle, counting from x_{a+ib}
            let x = cp.x(a + step * j * a + i * b);
            let t = j / 2;
            let w = if j % 2 == 0 { ap.v(i + t * k as i64) } else { ap.u(i + t * k as i64) };
            if mapping[x] != usize::MAX {
                return Err(Error::InvariantViolation(format!("x index {x} assigned twice")));
            }
            mapping[x] = w;
        }
    }
    checked(
        &graph::circulant(cp),
        &graph::accordion(ap),
        VertexMap::new(order, order, mapping)?,
        "circulant-accordion witness",
    )
}

/// Edges removed from `A[n,k]` to expose `C_{2n/q} □ P_q`, `q = gcd(n,k)`:
/// `u_{tq}u_{tq+1}` and `v_{tq}v_{tq+1}` for `t = 1..n/q`.
pub fn cylinder_deleted_edges(n: u64, k: u64) -> Result<Vec<(usize, usize)>> {
    let p = AccordionParams::new(n, k)?;
    let q = gcd_raw(n, k) as i64;
    Ok((1..=n as i64 / q)
        .flat_map(|t| [(p.u(t * q), p.u(t * q + 1)), (p.v(t * q), p.v(t * q + 1))])
        .collect())
}

/// Vertex `ℓ_i` (first end of the `i`-th path copy) of `C_{n1} □ P_{n2}`.
pub fn cylinder_left(n1: u64, n2: u64, i: i64) -> usize {
    modarith::residue(i - 1, n1) as usize * n2 as usize
}

/// Vertex `r_i` (last end of the `i`-th path copy) of `C_{n1} □ P_{n2}`.
pub fn cylinder_right(n1: u64, n2: u64, i: i64) -> usize {
    cylinder_left(n1, n2, i) + n2 as usize - 1
}

/// The chords `r_i ℓ_{i+2γ}` that turn `C_{n1} □ P_{n2}` into `A[n,k]`,
/// where `n = n1·n2/2` and `γ` is the least positive integer with
/// `γk ≡ n2 (mod n)`. For `n2 = 1` these are the chords `w_i w_{i+2γ}`.
pub fn cylinder_chords(n1: u64, n2: u64, k: u64) -> Result<Vec<(usize, usize)>> {
    let n = cylinder_check(n1, n2, k)?;
    let gamma = modarith::lambda_min(n, k)?.lambda as i64;
    Ok((1..=n1 as i64)
        .map(|i| (cylinder_right(n1, n2, i), cylinder_left(n1, n2, i + 2 * gamma)))
        .collect())
}

fn cylinder_check(n1: u64, n2: u64, k: u64) -> Result<u64> {
    if n1 < 4 || n1 % 2 == 1 {
        return Err(invalid(format!("n1 must be even and >= 4, got {n1}")));
    }
    if n2 < 1 {
        return Err(invalid("n2 must be >= 1"));
    }
    let n = n1
        .checked_mul(n2)
        .map(|x| x / 2)
        .ok_or_else(|| invalid("n1*n2 overflows"))?;
    AccordionParams::new(n, k)?;
    if gcd_raw(n, k) != n2 {
        return Err(invalid(format!("gcd({n},{k}) = {} differs from n2 = {n2}", gcd_raw(n, k))));
    }
    Ok(n)
}

/// `C_{n1} □ P_{n2}` plus the chords of [`cylinder_chords`], together with
/// an oracle-found isomorphism from it to `A[n1·n2/2, k]`.
pub fn cylinder_construction(n1: u64, n2: u64, k: u64) -> Result<(Graph, VertexMap)> {
    let n = cylinder_check(n1, n2, k)?;
    let cylinder = graph::cartesian_product(
        &graph::cycle_graph(n1 as usize)?,
        &graph::path_graph(n2 as usize)?,
    )?;
    let built = cylinder.with_edges(&cylinder_chords(n1, n2, k)?)?;
    let target = graph::accordion(AccordionParams::new(n, k)?);
    let map = oracle::are_isomorphic(&built, &target)?.ok_or_else(|| {
        Error::InvariantViolation(format!("C{n1}□P{n2} plus chords is not A[{n},{k}]"))
    })?;
    let map = checked(&built, &target, map, "cylinder construction")?;
    Ok((built, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_map_validation() {
        assert!(VertexMap::new(3, 3, vec![0, 0, 1]).is_err());
        assert!(VertexMap::new(3, 3, vec![0, 1]).is_err());
        assert!(VertexMap::new(3, 4, vec![0, 1, 2]).is_err());
        let m = VertexMap::new(3, 3, vec![2, 0, 1]).unwrap();
        assert!(m.then(&m.inverse()).unwrap().is_identity());
    }

    #[test]
    fn psi_values() {
        let p = AccordionParams::new(7, 3).unwrap();
        let psi = natural_automorphism(7, 3).unwrap();
        assert_eq!(psi.apply(p.u(1)), p.v(1));
        assert_eq!(psi.apply(p.u(2)), p.v(7));
        assert!(psi.then(&psi).unwrap().is_identity());
    }

    #[test]
    fn verify_rejects_bad_maps() {
        let p5 = graph::path_graph(5).unwrap();
        let swap = VertexMap::new(5, 5, vec![1, 0, 2, 3, 4]).unwrap();
        assert!(!verify_witness(&p5, &p5, &swap).unwrap());
        assert!(verify_witness(&p5, &p5, &VertexMap::identity(5)).unwrap());
        assert!(verify_witness(&p5, &p5, &VertexMap::identity(4)).is_err());
    }

    #[test]
    fn accordion_witnesses() {
        let m = accordion_iso_witness(14, 4, 6).unwrap();
        assert_eq!(m.source_order(), 28);
        assert!(accordion_iso_witness(9, 4, 4).unwrap().is_identity());
        assert!(matches!(accordion_iso_witness(10, 2, 4), Err(Error::NotIsomorphic(_))));
    }

    #[test]
    fn mu_examples() {
        assert!(mu_map(6, 1, 5).unwrap().is_identity());
        let m = mu_map(6, 5, 1).unwrap();
        let p = CirculantParams::new(6, 5, 1).unwrap();
        assert_eq!(m.apply(0), p.x(5));
        mu_map(8, 3, 5).unwrap();
        assert!(mu_map(8, 1, 5).is_err());
        assert!(mu_map(9, 3, 6).is_err());
    }

    #[test]
    fn circulant_witness_examples() {
        circulant_accordion_witness(3, 1, 2, 1).unwrap();
        circulant_accordion_witness(5, 1, 2, 1).unwrap();
        circulant_accordion_witness(4, 1, 3, 2).unwrap();
        assert!(matches!(circulant_accordion_witness(4, 1, 3, 1), Err(Error::NotIsomorphic(_))));
    }

    #[test]
    fn bipartite_witness_examples() {
        for (n, a, b) in [(4, 1, 3), (6, 1, 5), (8, 3, 5)] {
            let m = bipartite_accordion_witness(n, a, b).unwrap();
            assert_eq!(m.source_order(), 2 * n as usize);
        }
        assert!(bipartite_accordion_witness(6, 1, 3).is_err());
    }

    #[test]
    fn chords_for_a10_5() {
        let added = cylinder_chords(4, 5, 5).unwrap();
        let l = |i| cylinder_left(4, 5, i);
        let r = |i| cylinder_right(4, 5, i);
        assert_eq!(added, vec![(r(1), l(3)), (r(2), l(4)), (r(3), l(1)), (r(4), l(2))]);
        cylinder_construction(4, 5, 5).unwrap();
        cylinder_construction(6, 1, 1).unwrap();
        assert!(cylinder_construction(4, 5, 4).is_err());
        assert!(cylinder_construction(5, 2, 1).is_err());
    }

    #[test]
    fn witness_doc_roundtrip() {
        let g = graph::accordion(AccordionParams::new(5, 2).unwrap());
        let psi = natural_automorphism(5, 2).unwrap();
        let doc = WitnessDoc::new(&g, &g, &psi);
        let back = WitnessDoc::from_json(&doc.to_json()).unwrap();
        assert!(back.verify().unwrap());
        let mut bad = back.clone();
        bad.mapping.swap(0, 1);
        assert!(!bad.verify().unwrap());
    }
}
