//! Executable laws for hesitant fuzzy soft covering spaces: a seeded
//! instance generator, a registry of quantified laws and strictness
//! witnesses, a shrinking runner, and the worked reference fixtures.

pub mod fixtures;
pub mod gen;
pub mod instance;
pub mod law;
pub mod laws;
pub mod runner;
pub mod tables;

pub use fixtures::{reference_fixtures, run_fixtures, Fixture, FixtureOutcome, FixtureReport};
pub use gen::{Bounds, Gen};
pub use instance::{Instance, SoftRows};
pub use law::{Expectation, Law, Verdict};
pub use laws::{coverage, registry};
pub use runner::{run_laws, LawResult, Report, Status};
