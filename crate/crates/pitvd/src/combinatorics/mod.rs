//! Sunflowers, flowers through a vertex, and q-expansions.

pub mod expansion;
pub mod flower;
pub mod matching;
pub mod sunflower;

pub use expansion::{q_expansion_classic, q_expansion_new, validate_expansion, BipartiteExpansion, BipartiteGraph, ExpansionError};
pub use flower::{v_flower_or_hitting_set, validate_flower_result, FlowerResult};
pub use sunflower::{sunflower_bound, sunflower_reduce, SetFamily};
