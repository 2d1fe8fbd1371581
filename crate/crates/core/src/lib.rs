//! Distance-k domination with built-in approximation certificates.
//!
//! For a graph given with a vertex ordering whose weak m-reach sets are
//! small (size below some `c`), this crate finds a k-dominating set `D`
//! together with an m-independent set `A` such that `|D| <= c^2 |A|`.
//! Whenever `m >= 2k`, any m-independent set is a lower bound on the
//! k-domination number, so the pair `(D, A)` certifies that `D` is within a
//! factor `c^2` of optimal. The crate also contains the ordering machinery
//! the guarantee rests on (degeneracy, weak reachability, admissibility) and
//! exact brute-force oracles that validate every bound at small scale.
//!
//! ```
//! use domcert::generators;
//! use domcert::orderings::degeneracy_ordering;
//! use domcert::domination::dominating_set;
//! use domcert::oracles::verify_certificate;
//!
//! let g = generators::grid(10, 10);
//! let (ord, _) = degeneracy_ordering(&g);
//! let cert = dominating_set(&g, &ord, 1, 2).unwrap();
//! assert!(verify_certificate(&g, &cert).unwrap().all_ok());
//! assert!(cert.dominating.len() as u128 <= cert.certified_bound());
//! ```

// adjacency structures are indexed by dense vertex ids; index loops are the
// house style
#![allow(clippy::needless_range_loop)]

pub mod domination;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod orderings;

pub use domination::{dominating_set, DominationCertificate};
pub use graph::{Graph, Vertex};
pub use orderings::VertexOrdering;
