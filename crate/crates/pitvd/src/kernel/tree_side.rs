//! Rules 8-10: the tree components of `G - S`.

use std::collections::BTreeMap;

use crate::combinatorics::{q_expansion_new, v_flower_or_hitting_set, BipartiteGraph, FlowerResult};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::kernel::instance::{Edit, RuleApplication};
use crate::kernel::modulator::Modulator;

/// Rule 8: delete the hangers of a bad hook.
pub fn rule8(m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    let target = if mutated { m.hooks.first()? } else { m.bad_hooks().next()? };
    Some(RuleApplication::delete(8, target.hangers.iter().flatten().copied(), 0))
}

/// Flower order that forces `v` into every solution.
pub fn flower_budget(k: usize) -> usize {
    4 * k + 2
}

/// Rule 9: a large flower through `v` into the tree side.
pub fn rule9(g: &MultiGraph, k: usize, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    let budget = if mutated { k } else { flower_budget(k) };
    for &v in &m.s {
        if let FlowerResult::Flower(_) = v_flower_or_hitting_set(&m.tree_side_with(g, v), v, budget) {
            return Some(RuleApplication::delete(9, [v], 1));
        }
    }
    None
}

/// Vertices meeting every cycle through `v` in `G[{v} + V2]`; `None` if a large flower exists.
pub fn flower_hitting_set(g: &MultiGraph, k: usize, m: &Modulator, v: VertexId) -> Option<VertexSet> {
    match v_flower_or_hitting_set(&m.tree_side_with(g, v), v, flower_budget(k)) {
        FlowerResult::HittingSet(z) => Some(z),
        FlowerResult::Flower(_) => None,
    }
}

/// Degree of `v` into `V2`, counting multiplicity.
pub fn tree_side_degree(g: &MultiGraph, m: &Modulator, v: VertexId) -> u64 {
    g.neighbors(v).filter(|(u, _)| m.v2.contains(u)).map(|(_, k)| k as u64).sum()
}

pub fn rule10_threshold(s: usize, z: usize) -> u64 {
    7 * (s + z) as u64 + 5
}

/// Auxiliary bipartite graph of rule 10: `Z_v + S - v` against the components of
/// `G[V2 - Z_v]` adjacent to `v`.
pub struct Auxiliary {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexSet>,
    pub graph: BipartiteGraph,
}

pub fn auxiliary(g: &MultiGraph, m: &Modulator, v: VertexId, z: &VertexSet) -> Auxiliary {
    let left: Vec<VertexId> = z.iter().chain(m.s.iter().filter(|&&u| u != v)).copied().collect();
    let rest: VertexSet = m.v2.difference(z).copied().collect();
    let forest = g.induced(&rest);
    let right: Vec<VertexSet> =
        forest.connected_components().into_iter().filter(|c| c.iter().any(|&u| g.adjacent(u, v))).collect();
    let mut graph = BipartiteGraph::new(left.len(), right.len());
    for (a, &x) in left.iter().enumerate() {
        for (b, comp) in right.iter().enumerate() {
            if comp.iter().any(|&u| g.adjacent(u, x)) {
                graph.add_edge(a, b);
            }
        }
    }
    Auxiliary { left, right, graph }
}

/// Rule 10: detach `v` from components saturated by a 5-expansion and double its
/// edges to the expanded side.
pub fn rule10(g: &MultiGraph, k: usize, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    for &v in &m.s {
        let Some(z) = flower_hitting_set(g, k, m, v) else { continue };
        let threshold = if mutated { (m.s.len() + z.len()) as u64 + 1 } else { rule10_threshold(m.s.len(), z.len()) };
        if tree_side_degree(g, m, v) < threshold {
            continue;
        }
        let aux = auxiliary(g, m, v, &z);
        let exp = q_expansion_new(&aux.graph, 5).unwrap_or_else(|e| panic!("rule 10 at {v}: expansion failed: {e}"));
        let saturated = exp.saturated();
        let unsaturated = exp.b_hat.len() - saturated.len();
        let radj = aux.graph.right_adj();
        let closed = exp.b_hat.iter().all(|&b| radj[b].iter().all(|a| exp.a_hat.contains(a)));
        assert!(
            unsaturated >= 5 && closed && !exp.a_hat.is_empty(),
            "rule 10 at {v}: expansion postconditions fail (unsaturated {unsaturated}, closed {closed}, |A| {}, |C| {}, |Z_v| {})",
            exp.a_hat.len(),
            aux.right.len(),
            z.len(),
        );
        let detach: Vec<usize> = saturated.into_iter().collect();
        let mut edits: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
        for b in detach {
            for &u in aux.right[b].iter().filter(|&&u| g.adjacent(u, v)) {
                edits.insert((v, u), 0);
            }
        }
        for &a in &exp.a_hat {
            edits.insert((v, aux.left[a]), 2);
        }
        let edits = edits.into_iter().map(|((a, b), mult)| Edit::SetMultiplicity(a, b, mult)).collect();
        return Some(RuleApplication::new(10, edits, 0));
    }
    None
}
