//! The modulator `S` that scaffolds rules 8-14.

use crate::combinatorics::{sunflower_bound, sunflower_reduce, SetFamily};
use crate::exact::{bootstrap_modulator, greedy_modulator, Bootstrap, SolverConfig};
use crate::graph::{MultiGraph, VertexSet};
use crate::recognition::{enumerate_small_obstructions, is_pitg};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSet {
    Modulator { set: VertexSet, exact: bool },
    DecidedNo,
}

/// Bootstrap solution plus every vertex of the sunflower-reduced family of small
/// obstructions. `force_greedy` skips the exact bootstrap.
pub fn compute_base_set(g: &MultiGraph, k: usize, cfg: &SolverConfig, force_greedy: bool) -> BaseSet {
    let (mut set, exact) = if force_greedy {
        (greedy_modulator(g), false)
    } else {
        match bootstrap_modulator(g, k, cfg) {
            Bootstrap::Modulator { set, exact } => (set, exact),
            Bootstrap::DecidedNo => return BaseSet::DecidedNo,
        }
    };
    let family = SetFamily::new(enumerate_small_obstructions(g));
    let reduced = sunflower_reduce(&family, k);
    debug_assert!(reduced.is_empty() || reduced.len() as u128 <= sunflower_bound(reduced.max_size(), k));
    for s in &reduced.sets {
        set.extend(s.iter().copied());
    }
    debug_assert!(is_pitg(&g.delete_vertices(&set).expect("subset of V")).is_ok());
    BaseSet::Modulator { set, exact }
}
