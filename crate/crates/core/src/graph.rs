//! Simple undirected graphs and the families built on them: cycles, paths,
//! Cartesian products, accordion graphs and quartic circulants.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::modarith::{self, MAX_PARAM};

/// An immutable simple undirected graph on vertices `0..order`.
///
/// Edges are stored as `(min, max)` pairs in lexicographic order, so two equal
/// graphs compare and serialize identically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (x, y) in edges {
            if x == y {
                return Err(invalid(format!("self-loop at vertex {x}")));
            }
            if x >= order || y >= order {
                return Err(invalid(format!("edge ({x},{y}) out of range for order {order}")));
            }
            list.push((x.min(y), x.max(y)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate edge ({},{})", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); order];
        for &(x, y) in &list {
            adj[x].push(y);
            adj[y].push(x);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Self { order, edges: list, adj })
    }

    /// The graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        Self { order, edges: Vec::new(), adj: vec![Vec::new(); order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.order && y < self.order && self.adj[x].binary_search(&y).is_ok()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// A copy of this graph with the given edges removed. Every edge must exist.
    pub fn without_edges(&self, remove: &[(usize, usize)]) -> Result<Graph> {
        let mut drop: Vec<(usize, usize)> = remove.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        drop.sort_unstable();
        drop.dedup();
        for e in &drop {
            if self.edges.binary_search(e).is_err() {
                return Err(invalid(format!("edge ({},{}) is not in the graph", e.0, e.1)));
            }
        }
        Graph::new(
            self.order,
            self.edges.iter().copied().filter(|e| drop.binary_search(e).is_err()),
        )
    }

    /// A copy of this graph with extra edges. Adding an existing edge is an error.
    pub fn with_edges(&self, add: &[(usize, usize)]) -> Result<Graph> {
        Graph::new(self.order, self.edges.iter().copied().chain(add.iter().copied()))
    }

    /// Relabels vertex `i` as `perm[i]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(invalid("permutation length differs from graph order"));
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("relabeling is not a permutation"));
            }
        }
        Graph::new(self.order, self.edges.iter().map(|&(x, y)| (perm[x], perm[y])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        Graph::new(
            self.order + other.order,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(x, y)| (x + shift, y + shift))),
        )
        .expect("union of simple graphs is simple")
    }

    /// Graph document: `{"order":N,"edges":[[i,j],...]}` followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Undirected DOT with node ids `"0"`..`"order-1"`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.order {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for &(x, y) in &self.edges {
            let _ = writeln!(s, "  \"{x}\" -- \"{y}\";");
        }
        s.push_str("}\n");
        s
    }

    /// One `"i j"` line per edge, in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for &(x, y) in &self.edges {
            let _ = writeln!(s, "{x} {y}");
        }
        s
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc { order: self.order, edges: self.edges.iter().map(|&(x, y)| [x, y]).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = GraphDoc::deserialize(deserializer)?;
        Graph::new(doc.order, doc.edges.into_iter().map(|[x, y]| (x, y))).map_err(serde::de::Error::custom)
    }
}

/// Validated parameters of the accordion graph `A[n,k]`: `n >= 3`, `1 <= k <= n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AccordionParams {
    n: u64,
    k: u64,
}

impl AccordionParams {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("accordion needs n >= 3, got n={n}")));
        }
        if n > MAX_PARAM {
            return Err(invalid(format!("n={n} exceeds the supported maximum {MAX_PARAM}")));
        }
        if k < 1 || k > n / 2 {
            return Err(invalid(format!("accordion needs 1 <= k <= {}, got k={k}", n / 2)));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Index of `u_i`, with `i` read modulo `n` in the residue system `{1..n}`.
    pub fn u(&self, i: i64) -> usize {
        modarith::residue(i - 1, self.n) as usize
    }

    /// Index of `v_i`, with `i` read modulo `n` in the residue system `{1..n}`.
    pub fn v(&self, i: i64) -> usize {
        self.n as usize + modarith::residue(i - 1, self.n) as usize
    }
}

/// Validated parameters of the quartic circulant `Ci[2n,{a,b}]`.
///
/// Lengths are reduced modulo `2n` and folded to `min(r, 2n-r)`; the folded
/// values must be distinct and lie in `[1, n-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CirculantParams {
    n: u64,
    a: u64,
    b: u64,
}

impl CirculantParams {
    pub fn new(n: u64, a: i64, b: i64) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("circulant needs n >= 3, got n={n}")));
        }
        if n > MAX_PARAM {
            return Err(invalid(format!("n={n} exceeds the supported maximum {MAX_PARAM}")));
        }
        let a = fold_length(a, 2 * n);
        let b = fold_length(b, 2 * n);
        for len in [a, b] {
            if len == 0 || len >= n {
                return Err(invalid(format!(
                    "normalized length {len} outside [1, {}] for order {}",
                    n - 1,
                    2 * n
                )));
            }
        }
        if a == b {
            return Err(invalid(format!("lengths coincide after normalization (both {a})")));
        }
        Ok(Self { n, a, b })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Number of vertices, `2n`.
    pub fn order(&self) -> u64 {
        2 * self.n
    }

    /// Index of `x_i`, with `i` read modulo `2n` in the residue system `{1..2n}`.
    pub fn x(&self, i: i64) -> usize {
        modarith::residue(i - 1, 2 * self.n) as usize
    }
}

/// `min(r, m-r)` where `r = len mod m`.
pub fn fold_length(len: i64, m: u64) -> u64 {
    let r = modarith::residue(len, m);
    r.min(m - r)
}

/// Which structural family an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClass {
    /// `u_i u_{i+1}`
    OuterCycle,
    /// `v_i v_{i+1}`
    InnerCycle,
    /// `u_i v_i`
    VerticalSpoke,
    /// `u_i v_{i+k}`
    DiagonalSpoke,
    /// A circulant edge of the given length.
    Length(u64),
}

/// The cycle `C_t`, `t >= 3`.
pub fn cycle_graph(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(invalid(format!("cycle needs t >= 3, got {t}")));
    }
    Graph::new(t, (0..t).map(|i| (i, (i + 1) % t)))
}

/// The path `P_t` on `t >= 1` vertices.
pub fn path_graph(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(invalid("path needs at least one vertex"));
    }
    Graph::new(t, (1..t).map(|i| (i - 1, i)))
}

/// `G □ H`, with vertex `(g, h)` at index `g * |V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(invalid("cartesian product of an empty graph"));
    }
    let m = h.order();
    let idx = |x: usize, y: usize| x * m + y;
    let mut edges = Vec::with_capacity(g.order() * h.size() + m * g.size());
    for x in 0..g.order() {
        edges.extend(h.edges().iter().map(|&(y1, y2)| (idx(x, y1), idx(x, y2))));
    }
    for &(x1, x2) in g.edges() {
        edges.extend((0..m).map(|y| (idx(x1, y), idx(x2, y))));
    }
    Graph::new(g.order() * m, edges)
}

/// Tagged edges of `A[n,k]`, `n` of each class, in the order
/// outer cycle, inner cycle, vertical spokes, diagonal spokes.
pub fn accordion_edges(p: AccordionParams) -> Vec<((usize, usize), EdgeClass)> {
    let n = p.n() as i64;
    let k = p.k() as i64;
    let norm = |(x, y): (usize, usize)| (x.min(y), x.max(y));
    let mut out = Vec::with_capacity(4 * n as usize);
    out.extend((1..=n).map(|i| (norm((p.u(i), p.u(i + 1))), EdgeClass::OuterCycle)));
    out.extend((1..=n).map(|i| (norm((p.v(i), p.v(i + 1))), EdgeClass::InnerCycle)));
    out.extend((1..=n).map(|i| (norm((p.u(i), p.v(i))), EdgeClass::VerticalSpoke)));
    out.extend((1..=n).map(|i| (norm((p.u(i), p.v(i + k))), EdgeClass::DiagonalSpoke)));
    out
}

/// The accordion graph `A[n,k]` (order `2n`, `4n` edges, 4-regular).
pub fn accordion(p: AccordionParams) -> Graph {
    Graph::new(2 * p.n() as usize, accordion_edges(p).into_iter().map(|(e, _)| e))
        .expect("accordion edges are distinct")
}

/// Class of an edge of `A[n,k]`, or `None` if it is not an edge.
pub fn accordion_edge_class(p: AccordionParams, x: usize, y: usize) -> Option<EdgeClass> {
    let e = (x.min(y), x.max(y));
    accordion_edges(p).into_iter().find(|(f, _)| *f == e).map(|(_, c)| c)
}

/// The quartic circulant `Ci[2n,{a,b}]`.
pub fn circulant(p: CirculantParams) -> Graph {
    circulant_of_order(p.order() as usize, p.a() as i64, p.b() as i64)
        .expect("validated circulant parameters")
}

/// A 4-regular circulant on `m` vertices (odd or even) with connection lengths
/// `a`, `b`. Folded lengths must be distinct, nonzero and strictly below `m/2`.
pub fn circulant_of_order(m: usize, a: i64, b: i64) -> Result<Graph> {
    if m < 5 {
        return Err(invalid(format!("a quartic circulant needs at least 5 vertices, got {m}")));
    }
    let a = fold_length(a, m as u64) as usize;
    let b = fold_length(b, m as u64) as usize;
    if a == 0 || b == 0 || 2 * a >= m || 2 * b >= m || a == b {
        return Err(invalid(format!("lengths {{{a},{b}}} do not give a quartic circulant of order {m}")));
    }
    Graph::new(m, (0..m).flat_map(|i| [(i, (i + a) % m), (i, (i + b) % m)]))
}

/// Length of the circulant edge `{x, y}` in a circulant of order `m`.
pub fn circulant_edge_length(m: usize, x: usize, y: usize) -> u64 {
    fold_length(x as i64 - y as i64, m as u64)
}

/// Number of connected components.
pub fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

/// BFS 2-colouring; true iff the graph has no odd cycle.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for s in 0..g.order() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn is_regular(g: &Graph, d: usize) -> bool {
    (0..g.order()).all(|v| g.degree(v) == d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn acc(n: u64, k: u64) -> Graph {
        accordion(AccordionParams::new(n, k).unwrap())
    }

    fn ci(n: u64, a: i64, b: i64) -> Graph {
        circulant(CirculantParams::new(n, a, b).unwrap())
    }

    #[test]
    fn cycles() {
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(c3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(is_regular(&c5, 2) && is_connected(&c5));
        assert!(is_bipartite(&cycle_graph(4).unwrap()));
        assert!(!is_bipartite(&c3));
        assert!(matches!(cycle_graph(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn paths() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        assert_eq!(path_graph(2).unwrap().edges(), &[(0, 1)]);
        let p5 = path_graph(5).unwrap();
        assert_eq!((p5.order(), p5.size()), (5, 4));
        assert_eq!(p5.degree_sequence(), vec![2, 2, 2, 1, 1]);
        assert!(path_graph(0).is_err());
        assert!(!is_regular(&p5, 4));
    }

    #[test]
    fn products() {
        let c4 = cycle_graph(4).unwrap();
        let c5 = cycle_graph(5).unwrap();
        let p5 = path_graph(5).unwrap();
        let torus = cartesian_product(&c4, &c5).unwrap();
        assert_eq!((torus.order(), torus.size()), (20, 40));
        assert!(is_regular(&torus, 4));

        let cyl = cartesian_product(&c4, &p5).unwrap();
        assert_eq!((cyl.order(), cyl.size()), (20, 36));
        let ds = cyl.degree_sequence();
        assert_eq!(ds.iter().filter(|&&d| d == 4).count(), 12);
        assert_eq!(ds.iter().filter(|&&d| d == 3).count(), 8);

        let p1 = path_graph(1).unwrap();
        assert_eq!(cartesian_product(&p1, &c5).unwrap(), c5);
        assert_eq!(cartesian_product(&c5, &p1).unwrap(), c5);
        assert!(cartesian_product(&Graph::empty(0), &c5).is_err());
    }

    #[test]
    fn accordion_shape() {
        let g = acc(3, 1);
        assert_eq!((g.order(), g.size()), (6, 12));
        assert!(is_regular(&g, 4));
        assert!(is_bipartite(&acc(4, 2)));
        assert!(is_bipartite(&acc(6, 2)));
        assert!(!is_bipartite(&acc(5, 2)));

        let p = AccordionParams::new(10, 5).unwrap();
        assert_eq!(p.u(1), 0);
        assert_eq!(p.u(11), 0);
        assert_eq!(p.v(0), 19);
        assert!(g.has_edge(0, 3 + 1)); // u_1 v_2 in A[3,1]

        let mut counts = std::collections::BTreeMap::new();
        for (_, c) in accordion_edges(AccordionParams::new(7, 3).unwrap()) {
            *counts.entry(c).or_insert(0) += 1;
        }
        assert_eq!(counts.values().copied().collect::<Vec<_>>(), vec![7, 7, 7, 7]);
    }

    #[test]
    fn accordion_params_bounds() {
        assert!(AccordionParams::new(2, 1).is_err());
        assert!(AccordionParams::new(5, 0).is_err());
        assert!(AccordionParams::new(5, 3).is_err());
        assert!(AccordionParams::new(6, 3).is_ok());
    }

    #[test]
    fn circulant_shape() {
        let g = ci(4, 1, 3);
        assert_eq!((g.order(), g.size()), (8, 16));
        assert!(is_regular(&g, 4));

        let g = ci(3, 1, 2);
        assert!(is_connected(&g) && !is_bipartite(&g));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));

        assert!(!is_connected(&ci(6, 2, 4)));
        assert_eq!(component_count(&ci(6, 2, 4)), 2);
    }

    #[test]
    fn circulant_normalization() {
        let p = CirculantParams::new(6, 11, -3).unwrap();
        assert_eq!((p.a(), p.b()), (1, 3));
        assert!(CirculantParams::new(6, 1, 11).is_err());
        assert!(CirculantParams::new(6, 6, 1).is_err());
        assert!(CirculantParams::new(6, 12, 1).is_err());
        assert!(CirculantParams::new(2, 1, 3).is_err());
    }

    #[test]
    fn general_order_circulant() {
        let g = circulant_of_order(9, 1, 3).unwrap();
        assert!(is_regular(&g, 4));
        assert!(circulant_of_order(12, 6, 1).is_err());
        assert_eq!(circulant_edge_length(12, 1, 11), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn two_triangles_disconnected() {
        let c3 = cycle_graph(3).unwrap();
        assert!(!is_connected(&c3.disjoint_union(&c3)));
    }

    #[test]
    fn documents() {
        let g = cycle_graph(3).unwrap();
        assert_eq!(g.to_json(), "{\"order\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n");
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(g.to_edge_list(), "0 1\n0 2\n1 2\n");
        assert!(g.to_dot().contains("\"0\" -- \"2\";"));
        assert!(Graph::from_json("{\"order\":2,\"edges\":[[0,0]]}").is_err());
        assert!(Graph::from_json("not json").is_err());
    }

    #[test]
    fn edge_surgery() {
        let c4 = cycle_graph(4).unwrap();
        let p4 = c4.without_edges(&[(3, 0)]).unwrap();
        assert_eq!(p4, path_graph(4).unwrap());
        assert!(c4.without_edges(&[(0, 2)]).is_err());
        assert_eq!(p4.with_edges(&[(0, 3)]).unwrap(), c4);
        assert!(c4.with_edges(&[(0, 1)]).is_err());
    }
}
