//! Exact decision procedure used as modulator bootstrap and as the test oracle.
//!
//! Every solution must contain a vertex of any obstruction witness (for a
//! claw-triangle pair: of the claw, the triangle or the connecting path, since
//! otherwise all three survive in one component). Branching over the witness
//! vertices is therefore exhaustive.

use thiserror::Error;

use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::recognition::{classify_component, is_pitg, Obstruction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Graphs up to this order are always accepted.
    pub max_n: usize,
    /// Larger graphs are accepted when `k <= max_k` and `C(n, k) <= subset_budget`.
    pub max_k: usize,
    pub subset_budget: u128,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_n: 20, max_k: 6, subset_budget: 20_000_000 }
    }
}

impl SolverConfig {
    pub fn admits(&self, n: usize, k: usize) -> bool {
        n <= self.max_n || (k <= self.max_k && binomial(n, k) <= self.subset_budget)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(VertexSet),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("instance with n = {n}, k = {k} exceeds the configured scale guard")]
    ScaleExceeded { n: usize, k: usize },
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Drops components that are already trees or proper interval graphs.
fn strip_clean(g: &MultiGraph) -> MultiGraph {
    let mut dirty = VertexSet::new();
    for comp in g.connected_components() {
        if !classify_component(g, &comp).is_clean() {
            dirty.extend(comp);
        }
    }
    g.induced(&dirty)
}

fn branch(g: &MultiGraph, k: usize) -> Option<Vec<VertexId>> {
    let g = strip_clean(g);
    let obstruction = match is_pitg(&g) {
        Ok(()) => return Some(Vec::new()),
        Err(o) => o,
    };
    if k == 0 {
        return None;
    }
    for v in branch_set(&obstruction) {
        let mut h = g.clone();
        h.remove_vertex(v).expect("witness vertices are present");
        if let Some(mut sol) = branch(&h, k - 1) {
            sol.push(v);
            return Some(sol);
        }
    }
    None
}

fn branch_set(o: &Obstruction) -> Vec<VertexId> {
    match o {
        // Cycle order keeps the search deterministic and visits the hole in sequence.
        Obstruction::Hole(c) => c.clone(),
        _ => o.vertices().into_iter().collect(),
    }
}

/// Is there a set of at most `k` vertices whose deletion leaves a (prop-int, tree)-graph?
pub fn decide(g: &MultiGraph, k: usize, cfg: &SolverConfig) -> Result<Decision, SolverError> {
    let n = g.vertex_count();
    if !cfg.admits(n, k) {
        return Err(SolverError::ScaleExceeded { n, k });
    }
    Ok(match branch(g, k.min(n)) {
        Some(sol) => Decision::Yes(sol.into_iter().collect()),
        None => Decision::No,
    })
}

/// Plain enumeration of all vertex subsets of size at most `k`.
pub fn decide_by_enumeration(g: &MultiGraph, k: usize) -> Decision {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    for size in 0..=k.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let z: VertexSet = idx.iter().map(|&i| ids[i]).collect();
            if is_pitg(&g.delete_vertices(&z).expect("subset of V")).is_ok() {
                return Decision::Yes(z);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Decision::No
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A minimum solution, found by increasing the budget.
pub fn minimum_deletion(g: &MultiGraph, cfg: &SolverConfig) -> Result<VertexSet, SolverError> {
    let n = g.vertex_count();
    for k in 0..=n {
        if let Decision::Yes(sol) = decide(g, k, cfg)? {
            return Ok(sol);
        }
    }
    Ok(g.vertex_set())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bootstrap {
    /// `exact` is false when the scale guard forced the greedy fallback.
    Modulator { set: VertexSet, exact: bool },
    DecidedNo,
}

/// Modulator of size at most `k`, or a certificate-backed `DecidedNo`. Falls back to
/// greedy obstruction deletion when the instance exceeds the scale guard.
pub fn bootstrap_modulator(g: &MultiGraph, k: usize, cfg: &SolverConfig) -> Bootstrap {
    match decide(g, k, cfg) {
        Ok(Decision::Yes(set)) => Bootstrap::Modulator { set, exact: true },
        Ok(Decision::No) => Bootstrap::DecidedNo,
        Err(SolverError::ScaleExceeded { .. }) => Bootstrap::Modulator { set: greedy_modulator(g), exact: false },
    }
}

/// Deletes whole small obstructions, one vertex of a long hole, or the claw centre
/// of a claw-triangle pair, until the rest is a (prop-int, tree)-graph.
pub fn greedy_modulator(g: &MultiGraph) -> VertexSet {
    let mut h = g.clone();
    let mut out = VertexSet::new();
    while let Err(o) = is_pitg(&h) {
        let victims: VertexSet = match &o {
            o if o.is_small() => o.vertices(),
            Obstruction::Hole(c) => VertexSet::from([c[0]]),
            Obstruction::ClawTrianglePair { claw, .. } => VertexSet::from([claw.center]),
            other => other.vertices(),
        };
        h.remove_vertices(&victims).expect("witness vertices are present");
        out.extend(victims);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> MultiGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        MultiGraph::from_edges(n as usize, &e).unwrap()
    }

    fn net() -> MultiGraph {
        MultiGraph::from_edges(6, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (1, 4, 1), (2, 5, 1)]).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn c7_needs_one() {
        let g = cycle(7);
        match decide(&g, 1, &cfg()).unwrap() {
            Decision::Yes(s) => assert_eq!(s.len(), 1),
            Decision::No => panic!("C7 is solvable with one deletion"),
        }
        assert_eq!(decide(&g, 0, &cfg()).unwrap(), Decision::No);
    }

    #[test]
    fn net_with_zero_budget() {
        assert_eq!(decide(&net(), 0, &cfg()).unwrap(), Decision::No);
    }

    #[test]
    fn triangle_and_claw_in_one_component() {
        // triangle 0,1,2 joined by the edge 2-3 to a claw centred at 3.
        let g = MultiGraph::from_edges(7, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1), (3, 6, 1)]).unwrap();
        assert!(decide(&g, 1, &cfg()).unwrap().is_yes());
        assert_eq!(decide(&g, 1, &cfg()).unwrap().is_yes(), decide_by_enumeration(&g, 1).is_yes());
    }

    #[test]
    fn minimum_examples() {
        assert!(minimum_deletion(&cycle(3), &cfg()).unwrap().is_empty());
        let mut two = net();
        let off = two.id_bound();
        for _ in 0..6 {
            two.add_vertex();
        }
        for (a, b) in [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)] {
            two.add_edge(VertexId(off + a), VertexId(off + b), 1).unwrap();
        }
        assert_eq!(minimum_deletion(&two, &cfg()).unwrap().len(), 2);
        let mut k5 = MultiGraph::with_vertices(5);
        for a in 0..5 {
            for b in a + 1..5 {
                k5.add_edge(VertexId(a), VertexId(b), 1).unwrap();
            }
        }
        assert!(minimum_deletion(&k5, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn enumeration_on_empty_and_trivial() {
        assert!(decide_by_enumeration(&MultiGraph::new(), 0).is_yes());
        assert!(decide_by_enumeration(&cycle(4), 1).is_yes());
        assert!(!decide_by_enumeration(&cycle(4), 0).is_yes());
    }

    #[test]
    fn scale_guard_refuses() {
        let g = MultiGraph::with_vertices(200);
        let tight = SolverConfig { max_n: 20, max_k: 2, subset_budget: 10 };
        assert!(matches!(decide(&g, 2, &tight), Err(SolverError::ScaleExceeded { .. })));
        match bootstrap_modulator(&g, 2, &tight) {
            Bootstrap::Modulator { set, exact } => {
                assert!(set.is_empty());
                assert!(!exact);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 4), 487_635);
    }
}
