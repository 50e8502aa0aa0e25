//! Independent verification: an all-subsets Cheeger constant, seeded
//! instance generators and a report checker. Nothing here calls the
//! optimized metrics of [`crate::multigraph`].

mod brute;
mod generate;
pub mod instances;
mod verify;

pub use brute::{brute_force_cheeger, brute_force_expansion, DEFAULT_CAP, MAX_CAP};
pub use generate::{
    complete_graph, generate_verified_expander, rng_for, subdivide_with_lengths, GeneratorKind, InstanceSpec,
    VerifiedExpander, MAX_ATTEMPTS,
};
pub use verify::{verify_report, Clause, Verdict};
