//! Checks of the Hanna Neumann family of inequalities on subgroup pairs.
//!
//! [`analyze_pair`] evaluates HNC, SHNC, IEHNC and Guzman's conjecture for
//! one pair; [`examples`] builds the known counterexample families; and
//! [`experiment`] measures counterexample frequencies over random pairs.

pub mod examples;
pub mod experiment;
mod report;

pub use examples::{example_guzman, example_iehnc, guzman_presentations, iehnc_presentations};
pub use experiment::{
    run_experiment, sample_reports, write_csv, Distribution, ExperimentRow, PairSource,
    CSV_HEADER,
};
pub use report::{analyze_pair, ConjectureReport};
