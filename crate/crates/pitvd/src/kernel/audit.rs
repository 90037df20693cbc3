//! Postconditions that hold when no rule applies.

use crate::combinatorics::{v_flower_or_hitting_set, FlowerResult};
use crate::graph::{MultiGraph, PathKind, VertexId, VertexSet};
use crate::kernel::modulator::Modulator;
use crate::kernel::pig_side::{cliques_touched, component_graph, eta, find_block, free_cliques};
use crate::kernel::preprocess::all_pendant_trees;
use crate::kernel::tree_side::{flower_budget, rule10_threshold, tree_side_degree};

/// Violated postconditions of a fixpoint `(g, k)` with modulator `s`; empty when clean.
pub fn audit(g: &MultiGraph, k: usize, s: &VertexSet) -> Vec<String> {
    let mut out = Vec::new();
    if let Some((u, v, m)) = g.edges().find(|e| e.2 > 2) {
        out.push(format!("edge {u}-{v} has multiplicity {m}"));
    }
    for v in g.vertices() {
        let doubles = g.neighbors(v).filter(|&(_, m)| m >= 2).count();
        if doubles > k {
            out.push(format!("{v} has {doubles} double-edge neighbours"));
        }
    }
    for p in g.find_degree2_paths() {
        let limit = if p.kind == PathKind::Tail { 2 } else { 4 };
        if p.len() > limit {
            out.push(format!("{:?} degree-2 path of {} vertices", p.kind, p.len()));
        }
    }
    let trees = all_pendant_trees(g);
    for x in g.vertices() {
        let at_x = trees.iter().filter(|t| t.anchor == x).count();
        if at_x > 3 {
            out.push(format!("{x} carries {at_x} pendant trees"));
        }
    }
    for t in &trees {
        let branching = t.vertices.iter().any(|&u| g.degree(u) >= 3);
        if branching && t.vertices.len() > 5 {
            out.push(format!("pendant tree at {} keeps {} vertices", t.anchor, t.vertices.len()));
        }
    }
    let m = match Modulator::build(g, s) {
        Ok(m) => m,
        Err(o) => {
            out.push(format!("G - S is not a (prop-int, tree)-graph: {}", o.name()));
            return out;
        }
    };
    if let Some(h) = m.bad_hooks().find(|h| !h.hangers.is_empty()) {
        out.push(format!("bad hook {} has a hanger", h.vertex));
    }
    for &v in &m.s {
        match v_flower_or_hitting_set(&m.tree_side_with(g, v), v, flower_budget(k)) {
            FlowerResult::Flower(p) => out.push(format!("{v} has a flower of order {} into V2", p.len())),
            FlowerResult::HittingSet(z) => {
                let deg = tree_side_degree(g, &m, v);
                if deg >= rule10_threshold(m.s.len(), z.len()) {
                    out.push(format!("{v} has degree {deg} into V2 with |Z_v| = {}", z.len()));
                }
            }
        }
    }
    let f1 = m.f1.len();
    if (f1 == 0 && !m.v2.is_empty()) || (f1 > 0 && m.v2.len() > 108 * f1 - 54) {
        out.push(format!("|V2| = {} with |F1| = {f1}", m.v2.len()));
    }
    let (_, h) = component_graph(g, &m);
    if h.left > 0 && h.right >= 3 * h.left {
        out.push(format!("{} cyclic components against |S| = {}", h.right, h.left));
    }
    let bound = eta(k, m.s.len());
    for c in &m.v1 {
        for &v in &m.s {
            let n = cliques_touched(g, c, v);
            if n >= 6 * k + 5 {
                out.push(format!("{v} touches {n} cliques of one component"));
            }
        }
        if let Some(i) = find_block(&free_cliques(g, &m.s, &c.partition), k) {
            out.push(format!("N(S)-free block around clique {i}"));
        }
        for clique in &c.partition.cliques {
            if clique.len() as u128 > bound {
                out.push(format!("clique of size {} exceeds eta = {bound}", clique.len()));
            }
        }
    }
    out
}

/// Number of vertex-disjoint triangles in `g[set]`, maximised by exhaustive search
/// but capped at `cap`: the search stops as soon as `cap` triangles are packed.
pub fn triangle_packing(g: &MultiGraph, set: &VertexSet, cap: usize) -> usize {
    let ids: Vec<VertexId> = set.iter().copied().collect();
    let mut triangles = Vec::new();
    for (a, &x) in ids.iter().enumerate() {
        for (b, &y) in ids.iter().enumerate().skip(a + 1) {
            if !g.adjacent(x, y) {
                continue;
            }
            for &z in &ids[b + 1..] {
                if g.adjacent(x, z) && g.adjacent(y, z) {
                    triangles.push([x, y, z]);
                }
            }
        }
    }
    fn search(tris: &[[VertexId; 3]], used: &mut VertexSet, taken: usize, best: &mut usize, cap: usize, free: usize) {
        *best = (*best).max(taken);
        if *best >= cap || taken + free / 3 <= *best {
            return;
        }
        for (i, t) in tris.iter().enumerate() {
            if t.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(t.iter().copied());
            search(&tris[i + 1..], used, taken + 1, best, cap, free - 3);
            for v in t {
                used.remove(v);
            }
            if *best >= cap {
                return;
            }
        }
    }
    let mut best = 0;
    search(&triangles, &mut VertexSet::new(), 0, &mut best, cap, ids.len());
    best
}
