//! Exact q-expansions, span elimination, integrality certificates and
//! spectral checks for the moonshine groups Γ₀(N)⁺ at square-free level.
//!
//! The pipeline for one level runs
//! [`forms::level_context`] → [`span::build_span`] → [`exactla::rref`] →
//! [`fieldgen::run_generator_search`] → [`fieldgen::kappa_bound`] →
//! [`fieldgen::extend_generators`] → [`fieldgen::verify_integrality`] →
//! [`relations::find_relation`].

pub mod error;
pub mod exactla;
pub mod fieldgen;
pub mod forms;
pub mod ntheory;
pub mod par;
pub mod qseries;
pub mod relations;
pub mod span;
pub mod spectral;

pub use error::{Error, Result};
pub use qseries::RationalSeries;
