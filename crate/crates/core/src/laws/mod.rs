//! Executable checks of the structural laws: the interchange counterexamples
//! in finite sets and in the two-element Boolean algebra, and randomized
//! suites for interchange, adhesivity, and coherence in graphs.

mod bool_algebra;
mod counterexample;
pub mod generate;
mod suites;
mod universal;

pub use bool_algebra::{bool_counterexample, BoolArrow, BoolCounterexample, BoolInstance, BoolObj};
pub use counterexample::{
    all_set_choices, set_cells, set_counterexample, set_interchange, SetCounterexample, SetSizes,
};
pub use suites::{
    adhesive_suite, coherence_suite, random_interchange_suite, CaseFailure, CheckTally, SuiteConfig,
    SuiteReport,
};
pub use universal::is_pullback_by_enumeration;
