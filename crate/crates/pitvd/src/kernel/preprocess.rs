//! Rules 1-7: clean components, multiplicities, double-edge stars, degree-2 paths
//! and pendant trees.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{MultiGraph, PathKind, VertexId, VertexSet};
use crate::kernel::instance::{Edit, RuleApplication};
use crate::recognition::classify_component;

/// A tree component `C` of `G - x` such that `C + x` is a simple tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantTree {
    pub anchor: VertexId,
    pub vertices: VertexSet,
}

impl PendantTree {
    pub fn min_id(&self) -> VertexId {
        *self.vertices.iter().next().expect("pendant trees are non-empty")
    }
}

/// Pendant trees attached at `x`, ordered by minimum vertex id.
pub fn pendant_trees_at(g: &MultiGraph, x: VertexId) -> Vec<PendantTree> {
    let blocked = VertexSet::from([x]);
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for u in g.neighbor_ids(x) {
        if seen.contains(&u) {
            continue;
        }
        let comp = g.reach(u, &blocked);
        seen.extend(comp.iter().copied());
        let degree_sum: u64 = comp.iter().map(|&c| g.degree(c) as u64).sum();
        let to_x: u64 = comp.iter().map(|&c| g.multiplicity(x, c) as u64).sum();
        // Edges inside C + x, counted with multiplicity.
        let edges = (degree_sum + to_x) / 2;
        if edges == comp.len() as u64 {
            out.push(PendantTree { anchor: x, vertices: comp });
        }
    }
    out.sort_by_key(PendantTree::min_id);
    out
}

pub fn all_pendant_trees(g: &MultiGraph) -> Vec<PendantTree> {
    g.vertices().flat_map(|x| pendant_trees_at(g, x)).collect()
}

/// Rule 1: delete every component that is a tree or a simple proper interval graph.
pub fn rule1(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    let comps = g.connected_components();
    let clean: Vec<&VertexSet> = comps.iter().filter(|c| classify_component(g, c).is_clean()).collect();
    if clean.is_empty() {
        return None;
    }
    let z: Vec<VertexId> = if mutated {
        g.vertices().collect()
    } else {
        clean.into_iter().flatten().copied().collect()
    };
    Some(RuleApplication::delete(1, z, 0))
}

/// Rule 2: cap every multiplicity at two.
pub fn rule2(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    let target = if mutated { 1 } else { 2 };
    let edits: Vec<Edit> =
        g.edges().filter(|&(_, _, m)| m > 2).map(|(u, v, _)| Edit::SetMultiplicity(u, v, target)).collect();
    (!edits.is_empty()).then(|| RuleApplication::new(2, edits, 0))
}

/// Rule 3: a vertex with `k + 1` double-edge neighbours belongs to every solution.
pub fn rule3(g: &MultiGraph, k: usize, mutated: bool) -> Option<RuleApplication> {
    let v = g.vertices().find(|&v| g.neighbors(v).filter(|&(_, m)| m >= 2).count() > k)?;
    Some(RuleApplication::delete(3, [v], if mutated { 0 } else { 1 }))
}

/// Rule 4: shorten a degree-2-tail to two vertices.
pub fn rule4(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    let tail = g.find_degree2_paths().into_iter().find(|p| p.kind == PathKind::Tail && p.len() >= 3)?;
    let from = if mutated { 1 } else { 2 };
    Some(RuleApplication::delete(4, tail.vertices[from..].iter().copied(), 0))
}

/// Rule 5: shrink a non-tail degree-2-path to four vertices.
pub fn rule5(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    let path = g.find_degree2_paths().into_iter().find(|p| p.kind != PathKind::Tail && p.len() >= 5)?;
    let p = &path.vertices;
    let l = p.len();
    let app = if mutated {
        let m = g.multiplicity(p[0], p[l - 1]).max(1);
        vec![Edit::DeleteVertices(p[1..l - 1].to_vec()), Edit::SetMultiplicity(p[0], p[l - 1], m)]
    } else {
        vec![Edit::DeleteVertices(p[2..l - 2].to_vec()), Edit::SetMultiplicity(p[1], p[l - 2], 1)]
    };
    Some(RuleApplication::new(5, app, 0))
}

/// Vertices of `tree` kept by Rule 6: the path from the anchor to the nearest vertex
/// of degree at least three, plus two of its further neighbours.
fn rule6_keep(g: &MultiGraph, tree: &PendantTree, mutated: bool) -> Option<VertexSet> {
    let x = tree.anchor;
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for u in g.neighbor_ids(x).filter(|u| tree.vertices.contains(u)) {
        parent.insert(u, x);
        queue.push_back(u);
    }
    let mut branch = None;
    while let Some(u) = queue.pop_front() {
        if g.degree(u) >= 3 {
            branch = Some(u);
            break;
        }
        for w in g.neighbor_ids(u) {
            if w != x && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    let v = branch?;
    let mut keep = VertexSet::new();
    let mut cur = v;
    while cur != x {
        keep.insert(cur);
        cur = parent[&cur];
    }
    if !mutated {
        let up = parent[&v];
        keep.extend(g.neighbor_ids(v).filter(|&w| w != up).take(2));
    }
    Some(keep)
}

/// Rule 6: prune a pendant tree that contains a vertex of degree at least three.
pub fn rule6(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    for x in g.vertices() {
        for tree in pendant_trees_at(g, x) {
            let Some(keep) = rule6_keep(g, &tree, mutated) else { continue };
            let z: Vec<VertexId> = tree.vertices.difference(&keep).copied().collect();
            if !z.is_empty() {
                return Some(RuleApplication::delete(6, z, 0));
            }
        }
    }
    None
}

/// Rule 7: keep three pendant trees per attachment vertex.
pub fn rule7(g: &MultiGraph, mutated: bool) -> Option<RuleApplication> {
    let keep = if mutated { 1 } else { 3 };
    for x in g.vertices() {
        let trees = pendant_trees_at(g, x);
        if trees.len() > keep {
            let z: Vec<VertexId> = trees[keep..].iter().flat_map(|t| t.vertices.iter().copied()).collect();
            return Some(RuleApplication::delete(7, z, 0));
        }
    }
    None
}
