//! Constructive extraction of large induced expander subgraphs.
//!
//! The crate works on multigraphs (loops and parallel edges allowed) and
//! measures expansion with exact rationals throughout. The main entry points
//! are:
//!
//! * [`multigraph`]: the [`MultiGraph`] type, degrees, volumes, cuts and the
//!   exact Cheeger constant.
//! * [`coloring`]: vertex- and edge-coloured graphs and their `red()`
//!   reductions, blue paths and the lifting construction.
//! * [`extraction`]: the three deletion procedures (bad-set trimming,
//!   long-blue-path pruning and the heavy-vertex / two-case induced core).
//! * [`pipeline`]: topological-minor witnesses and the composed reductions
//!   from a topological-minor expander to an induced-subgraph expander.
//! * [`oracle`]: brute-force verification and seeded instance generators.

pub mod coloring;
pub mod error;
pub mod extraction;
pub mod io;
pub mod multigraph;
pub mod oracle;
pub mod pipeline;
pub mod rational;

pub use error::{Error, Result};
pub use multigraph::{ExpansionCertificate, MultiGraph, VertexId, VertexSubset};
pub use rational::Rational;
