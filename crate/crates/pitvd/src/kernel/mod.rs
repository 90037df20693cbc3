//! Reduction rules and the fixpoint driver.

pub mod audit;
pub mod base_set;
mod driver;
pub mod instance;
pub mod modulator;
pub mod pig_side;
pub mod preprocess;
pub mod tree_side;

pub use base_set::{compute_base_set, BaseSet};
pub use driver::{kernelize, KernelConfig, KernelOutcome, Kernelizer, RuleMask, Step};
pub use instance::{apply_edits, replay, BaseSetRecord, Edit, KernelInstance, Replayed, ReplayError, RuleApplication, RuleId};
pub use modulator::Modulator;

/// Number of reduction rules.
pub const RULE_COUNT: u8 = 14;
