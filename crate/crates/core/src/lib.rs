//! Simultaneous conjugacy of permutation tuples.
//!
//! Given `a = (a_1, .., a_d)` and `b = (b_1, .., b_d)` in `S_n`, decide whether some
//! `τ` satisfies `b_j = τ⁻¹ a_j τ` for every `j`, and produce such a `τ`.
//! Permutations act on the right and compose left to right: `i^(gh) = (i^g)^h`.
//!
//! The tuple `a` is viewed as an arc-coloured digraph on `{0, .., n-1}` with an
//! arc `i -> a_j(i)` of colour `j`. Conjugators are exactly the colour-preserving
//! isomorphisms between the two digraphs. The crate decomposes each digraph
//! into connected components, computes a canonical label for each component by
//! minimising breadth-first relabelings over all start vertices, and matches
//! components by label (or by direct propagation for large components).
//!
//! Internally all vertices are 0-based. Conversion to the 1-based notation used
//! in instance files happens in the I/O layer.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(any(test, feature = "parallel"))]
extern crate std;

pub mod canonical;
pub mod digraph;
mod error;
pub mod oracle;
pub mod perm;
pub mod radix;
pub mod solver;

pub use canonical::{
    canonical_label_connected, canonical_label_graph, code, extract_conjugator, relabel, Code,
    ConnectedLabel, GraphLabel, LabelPart, RelabelResult,
};
pub use digraph::{decompose, is_transitive, size_multiset, Arc, ComponentDecomposition};
pub use error::{Error, Result};
pub use perm::{conjugate_tuple, verify_conjugacy, PermTuple, Permutation};
pub use solver::{
    match_components, pairwise_iso, solve, ClassStats, LabeledComponent, ScpResult, Strategy,
    StrategyConfig, StrategyMode, Threshold,
};
