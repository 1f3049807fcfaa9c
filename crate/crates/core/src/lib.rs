//! Distance magic and S-magic graph labelings.
//!
//! A labeling `f: V(G) → S` is *S-magic* when every vertex sees the same sum
//! of labels on its open neighborhood. With `S = {1, ..., |V|}` it is a
//! distance magic labeling. The *distance magic index* `θ(G)` is the least
//! `max(S) − |V|` over all label sets that work.
//!
//! The crate provides
//!
//! * [`graph`]: simple graphs, the complete multipartite / lexicographic
//!   blow-up / disjoint-union families, edge-list and JSON I/O;
//! * [`rectangles`]: balanced label rectangles, including the deleted-label
//!   constructions for `H(n,p)` with `n` odd and `p` even;
//! * [`labeling`]: the verifier and the counting identities for regular
//!   graphs;
//! * [`families`]: closed-form `θ` with verified witnesses, plus tournament
//!   scheduling;
//! * [`search`]: exact search, the independent oracle for small graphs.
//!
//! Numeric types are generic over [`Label`]; the `*64` aliases below fix the
//! common `i64` choice.
//!
//! ```
//! use magiclab::{families, labeling, graph, index::Theta};
//!
//! let r = families::theta_hnp::<i64>(5, 6).unwrap();
//! assert_eq!(r.theta, Theta::Finite(1));
//! let g = graph::build_multipartite(5, 6).unwrap();
//! let report = labeling::verify_s_magic(&g, r.witness.unwrap().assignment());
//! assert_eq!(report.constant, Some(390));
//! ```

pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod labeling;
pub mod rectangles;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::Label;

pub type Rectangle64 = rectangles::Rectangle<i64>;
pub type Rectangle128 = rectangles::Rectangle<i128>;
pub type LabelSet64 = labeling::LabelSet<i64>;
pub type Labeling64 = labeling::Labeling<i64>;
pub type VerificationReport64 = labeling::VerificationReport<i64>;
pub type IndexResult64 = index::IndexResult<i64>;
pub type Schedule64 = families::Schedule<i64>;
