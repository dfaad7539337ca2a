//! Brute-force isomorphism ground truth.
//!
//! Colour refinement to a stable partition, then individualisation of one
//! vertex at a time from the smallest non-singleton cell, refining again after
//! each choice. The search is complete; a node budget turns pathological inputs
//! into [`Error::ResourceExhausted`] instead of a wrong answer.
//!
//! Colour ids are ranks of sorted refinement keys, so they depend only on
//! structure and never on vertex labels. That is what makes the leaf labelings
//! usable for [`canonical_key`].

use std::cell::Cell;

use crate::error::{invalid, Error, Result};
use crate::graph::{self, Graph};
use crate::witness::{verify_witness, VertexMap};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding the node budget.
pub const BUDGET_ENV: &str = "QUARTIC_ISO_ORACLE_BUDGET";

/// Default order limit for [`canonical_key`].
pub const DEFAULT_CANONICAL_LIMIT: usize = 30;

/// Stable colour of each vertex after refinement from the uniform colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementSignature {
    pub colors: Vec<u32>,
}

impl RefinementSignature {
    /// Sorted colour multiset; equal for isomorphic graphs.
    pub fn multiset(&self) -> Vec<u32> {
        let mut m = self.colors.clone();
        m.sort_unstable();
        m
    }
}

pub fn refinement_signature(g: &Graph) -> RefinementSignature {
    let mut colors = vec![vec![0u32; g.order()]];
    refine(&[g], &mut colors);
    RefinementSignature { colors: colors.pop().unwrap() }
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    budget: u64,
    canonical_limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, canonical_limit: DEFAULT_CANONICAL_LIMIT }
    }
}

impl Oracle {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget, ..Self::default() }
    }

    /// Default settings, with the budget taken from [`BUDGET_ENV`] when set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self::with_budget(budget)
    }

    pub fn canonical_limit(mut self, limit: usize) -> Self {
        self.canonical_limit = limit;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// An isomorphism `g -> h`, or `None` if the graphs are not isomorphic.
    pub fn are_isomorphic(&self, g: &Graph, h: &Graph) -> Result<Option<VertexMap>> {
        if g.order() != h.order()
            || g.size() != h.size()
            || g.degree_sequence() != h.degree_sequence()
            || graph::is_bipartite(g) != graph::is_bipartite(h)
            || graph::component_count(g) != graph::component_count(h)
        {
            return Ok(None);
        }
        let n = g.order();
        let mut colors = vec![vec![0u32; n], vec![0u32; n]];
        if !refine(&[g, h], &mut colors) {
            return Ok(None);
        }
        let h_colors = colors.pop().unwrap();
        let g_colors = colors.pop().unwrap();
        let mut search = Search { budget: self.budget, nodes: Cell::new(0) };
        search.pair(g, h, g_colors, h_colors)
    }

    /// A byte string equal for two graphs exactly when they are isomorphic.
    ///
    /// Minimises the relabelled edge list over every leaf of the
    /// individualisation tree, so it is only offered up to the configured order.
    pub fn canonical_key(&self, g: &Graph) -> Result<Vec<u8>> {
        if g.order() > self.canonical_limit {
            return Err(invalid(format!(
                "canonical_key limited to {} vertices, got {}",
                self.canonical_limit,
                g.order()
            )));
        }
        let mut colors = vec![vec![0u32; g.order()]];
        refine(&[g], &mut colors);
        let search = Search { budget: self.budget, nodes: Cell::new(0) };
        let mut best: Option<Vec<u8>> = None;
        search.canon(g, colors.pop().unwrap(), &mut best)?;
        Ok(best.unwrap_or_else(|| encode(0, &[])))
    }
}

/// [`Oracle::are_isomorphic`] with [`Oracle::from_env`] settings.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<VertexMap>> {
    Oracle::from_env().are_isomorphic(g, h)
}

/// [`Oracle::canonical_key`] with [`Oracle::from_env`] settings.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>> {
    Oracle::from_env().canonical_key(g)
}

struct Search {
    budget: u64,
    nodes: Cell<u64>,
}

impl Search {
    fn tick(&self) -> Result<()> {
        let n = self.nodes.get() + 1;
        if n > self.budget {
            return Err(Error::ResourceExhausted { budget: self.budget });
        }
        self.nodes.set(n);
        Ok(())
    }

    /// Both colourings are already jointly refined and consistent.
    fn pair(&mut self, g: &Graph, h: &Graph, gc: Vec<u32>, hc: Vec<u32>) -> Result<Option<VertexMap>> {
        self.tick()?;
        let Some(cell) = target_cell(&gc) else {
            let mut by_color = vec![0usize; gc.len()];
            for (w, &c) in hc.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let mapping: Vec<usize> = gc.iter().map(|&c| by_color[c as usize]).collect();
            let map = VertexMap::new(g.order(), h.order(), mapping)?;
            return Ok(verify_witness(g, h, &map)?.then_some(map));
        };
        let v = gc.iter().position(|&c| c == cell).unwrap();
        let fresh = *gc.iter().max().unwrap() + 1;
        for w in (0..hc.len()).filter(|&w| hc[w] == cell) {
            let mut colors = vec![gc.clone(), hc.clone()];
            colors[0][v] = fresh;
            colors[1][w] = fresh;
            if !refine(&[g, h], &mut colors) {
                continue;
            }
            let hc2 = colors.pop().unwrap();
            let gc2 = colors.pop().unwrap();
            if let Some(map) = self.pair(g, h, gc2, hc2)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }

    fn canon(&self, g: &Graph, gc: Vec<u32>, best: &mut Option<Vec<u8>>) -> Result<()> {
        self.tick()?;
        let Some(cell) = target_cell(&gc) else {
            let relabeled: Vec<(usize, usize)> = {
                let mut e: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(x, y)| {
                        let (cx, cy) = (gc[x] as usize, gc[y] as usize);
                        (cx.min(cy), cx.max(cy))
                    })
                    .collect();
                e.sort_unstable();
                e
            };
            let key = encode(g.order(), &relabeled);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return Ok(());
        };
        let fresh = *gc.iter().max().unwrap() + 1;
        for v in (0..gc.len()).filter(|&v| gc[v] == cell) {
            let mut colors = vec![gc.clone()];
            colors[0][v] = fresh;
            refine(&[g], &mut colors);
            self.canon(g, colors.pop().unwrap(), best)?;
        }
        Ok(())
    }
}

fn encode(order: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + 8 * edges.len());
    out.extend_from_slice(&(order as u32).to_be_bytes());
    out.extend_from_slice(&(edges.len() as u32).to_be_bytes());
    for &(x, y) in edges {
        out.extend_from_slice(&(x as u32).to_be_bytes());
        out.extend_from_slice(&(y as u32).to_be_bytes());
    }
    out
}

/// Smallest non-singleton cell, ties broken by smaller colour id.
fn target_cell(colors: &[u32]) -> Option<u32> {
    let mut counts = vec![0usize; colors.len() + 1];
    for &c in colors {
        counts[c as usize] += 1;
    }
    counts
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(c, &s)| (s, c))
        .map(|(c, _)| c as u32)
}

/// Refines the colourings of all graphs jointly to a stable partition.
///
/// Colours on entry must be ids in `0..count` shared across the graphs. On exit
/// they are again contiguous ranks. Returns false as soon as the colour
/// histograms of the graphs differ, which rules out any colour-preserving
/// isomorphism between them.
fn refine(graphs: &[&Graph], colors: &mut [Vec<u32>]) -> bool {
    let mut count = distinct(colors);
    loop {
        let keys: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(colors.iter())
            .map(|(g, c)| {
                (0..g.order())
                    .map(|v| {
                        let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut table: Vec<&(u32, Vec<u32>)> = keys.iter().flatten().collect();
        table.sort_unstable();
        table.dedup();
        for (c, ks) in colors.iter_mut().zip(&keys) {
            for (slot, key) in c.iter_mut().zip(ks) {
                *slot = table.binary_search(&key).unwrap() as u32;
            }
        }
        if colors.len() > 1 {
            let hist = |c: &Vec<u32>| {
                let mut h = vec![0u32; table.len()];
                for &x in c {
                    h[x as usize] += 1;
                }
                h
            };
            let first = hist(&colors[0]);
            if colors[1..].iter().any(|c| hist(c) != first) {
                return false;
            }
        }
        if table.len() == count {
            return true;
        }
        count = table.len();
    }
}

fn distinct(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
