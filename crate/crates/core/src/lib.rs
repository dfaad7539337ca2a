//! Accordion graphs `A[n,k]`, quartic circulants `Ci[2n,{a,b}]` and Cartesian
//! products of cycles and paths, together with:
//!
//! * [`deciders`]: arithmetic isomorphism criteria between these families,
//! * [`witness`]: explicit, machine-checked isomorphism maps built from the
//!   constructive side of those criteria,
//! * [`oracle`]: a brute-force isomorphism search (colour refinement plus
//!   individualisation) used as independent ground truth,
//! * [`census`]: a decider-versus-oracle cross validation over parameter grids.
//!
//! Vertices are 0-based throughout. In `A[n,k]` the outer vertex `u_i` is index
//! `i-1` and the inner vertex `v_i` is index `n+i-1`; in a circulant `x_i` is `i-1`.
//!
//! ```
//! use quartic_iso::{deciders, graph, oracle, witness};
//!
//! // Ci[8,{1,3}] is the accordion A[4,2].
//! let verdict = deciders::circulant_iso_accordion(4, 1, 3, 2).unwrap();
//! assert!(verdict.isomorphic);
//!
//! let ci = graph::circulant(graph::CirculantParams::new(4, 1, 3).unwrap());
//! let acc = graph::accordion(graph::AccordionParams::new(4, 2).unwrap());
//! let map = oracle::are_isomorphic(&ci, &acc).unwrap().expect("isomorphic");
//! assert!(witness::verify_witness(&ci, &acc, &map).unwrap());
//! ```

pub mod census;
pub mod cli;
pub mod deciders;
mod error;
pub mod graph;
pub mod modarith;
pub mod oracle;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{AccordionParams, CirculantParams, EdgeClass, Graph};
pub use witness::VertexMap;
