//! Bipolar fuzzy graphs with exact fixed-point memberships.
//!
//! The crate covers construction with edge-domination checks ([`graph`]),
//! degree and size metrics ([`metrics`]), regularity and irregularity
//! predicates ([`classify`]), complement and cycle-pattern transforms
//! ([`transform`]), theorem checkers with counterexample search ([`verify`]),
//! and seeded generators plus reference fixtures ([`gen`]).
//!
//! All values are immutable once built and every operation is a pure
//! function, so graphs can be shared across threads freely.

pub mod bipolar;
pub mod classify;
pub mod error;
pub mod gen;
pub mod graph;
pub mod metrics;
pub mod scalar;
pub mod transform;
pub mod verify;

pub use bipolar::Bipolar;
pub use error::{Component, Error, Result};
pub use graph::{build_graph, BipolarFuzzyGraph, CrispGraph, EdgeKey, GraphBuilder, VertexId};
pub use metrics::{Degree, SignedSum, TotalDegree};
pub use scalar::Scalar;
