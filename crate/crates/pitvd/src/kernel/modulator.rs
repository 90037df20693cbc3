//! Structure of `G - S`: cyclic proper interval components on one side, trees on the
//! other, and the connecting skeleton of the tree side.

use std::collections::{BTreeMap, VecDeque};

use crate::clique_partition::{build_clique_partition, CliquePartition};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::recognition::{classify_component, ComponentClass, Obstruction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PigComponent {
    pub vertices: VertexSet,
    pub partition: CliquePartition,
}

/// Maximal path of the skeleton whose interior has skeleton degree two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub ends: (VertexId, VertexId),
    pub interior: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hook {
    pub vertex: VertexId,
    /// Pendant trees off the skeleton, ordered by minimum id.
    pub hangers: Vec<VertexSet>,
    pub good: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulator {
    pub s: VertexSet,
    /// Components of `G - S` that contain a cycle.
    pub v1: Vec<PigComponent>,
    /// Union of the tree components of `G - S`.
    pub v2: VertexSet,
    /// `N(S)` inside the tree side.
    pub f1: VertexSet,
    /// Non-`F1` vertices on a tree path between two `F1` vertices.
    pub f3: VertexSet,
    /// `F3` vertices of degree at least three in `G[F1 + F3]`.
    pub f3_critical: VertexSet,
    pub segments: Vec<Segment>,
    pub hooks: Vec<Hook>,
}

impl Modulator {
    /// Fails with an obstruction when `G - S` is not a (prop-int, tree)-graph.
    pub fn build(g: &MultiGraph, s: &VertexSet) -> Result<Self, Obstruction> {
        let rest = g.delete_vertices(s).expect("S is a subset of V");
        if let Some((u, v, _)) = rest.edges().find(|e| e.2 > 1) {
            return Err(Obstruction::DoubleEdge(u, v));
        }
        let mut v1 = Vec::new();
        let mut v2 = VertexSet::new();
        for comp in rest.connected_components() {
            let edges: usize = comp.iter().map(|&v| rest.distinct_degree(v)).sum::<usize>() / 2;
            if edges + 1 == comp.len() {
                v2.extend(comp);
                continue;
            }
            match classify_component(&rest, &comp) {
                ComponentClass::ProperInterval(ord) => {
                    let partition = build_clique_partition(&rest, &ord).expect("recognised ordering is valid");
                    v1.push(PigComponent { vertices: comp, partition });
                }
                ComponentClass::Tree => unreachable!("edge count rules out a tree"),
                ComponentClass::Neither(o) => return Err(o),
            }
        }
        let f1: VertexSet = v2.iter().copied().filter(|&u| g.neighbor_ids(u).any(|w| s.contains(&w))).collect();
        let skeleton = prune_to_skeleton(g, &v2, &f1);
        let f3: VertexSet = skeleton.keys().copied().filter(|u| !f1.contains(u)).collect();
        let f3_critical: VertexSet = f3.iter().copied().filter(|u| skeleton[u].len() >= 3).collect();
        let segments = segments(&skeleton, &f1, &f3_critical);
        let mut hooks = Vec::new();
        for seg in &segments {
            let mut on_seg: Vec<Hook> = seg
                .interior
                .iter()
                .filter_map(|&w| {
                    let blocked = VertexSet::from([w]);
                    let mut hangers: Vec<VertexSet> = g
                        .neighbor_ids(w)
                        .filter(|u| !skeleton.contains_key(u))
                        .map(|u| g.reach(u, &blocked))
                        .collect();
                    hangers.sort();
                    (!hangers.is_empty()).then_some(Hook { vertex: w, hangers, good: false })
                })
                .collect();
            let last = on_seg.len().saturating_sub(1);
            for (i, h) in on_seg.iter_mut().enumerate() {
                h.good = i == 0 || i == last;
            }
            hooks.extend(on_seg);
        }
        Ok(Modulator { s: s.clone(), v1, v2, f1, f3, f3_critical, segments, hooks })
    }

    pub fn f2(&self) -> VertexSet {
        self.v2.difference(&self.f1).copied().collect()
    }

    pub fn v1_vertices(&self) -> VertexSet {
        self.v1.iter().flat_map(|c| c.vertices.iter().copied()).collect()
    }

    pub fn bad_hooks(&self) -> impl Iterator<Item = &Hook> {
        self.hooks.iter().filter(|h| !h.good)
    }

    /// `G[{v} + V2]`.
    pub fn tree_side_with(&self, g: &MultiGraph, v: VertexId) -> MultiGraph {
        let mut keep = self.v2.clone();
        keep.insert(v);
        g.induced(&keep)
    }
}

/// Minimal subforest of `G[V2]` spanning `F1`, as adjacency lists.
fn prune_to_skeleton(g: &MultiGraph, v2: &VertexSet, f1: &VertexSet) -> BTreeMap<VertexId, Vec<VertexId>> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
        v2.iter().map(|&u| (u, g.neighbor_ids(u).filter(|w| v2.contains(w)).collect())).collect();
    let mut queue: VecDeque<VertexId> = adj.iter().filter(|(u, nb)| nb.len() <= 1 && !f1.contains(u)).map(|(&u, _)| u).collect();
    while let Some(u) = queue.pop_front() {
        let Some(nb) = adj.remove(&u) else { continue };
        for w in nb {
            if let Some(list) = adj.get_mut(&w) {
                list.retain(|&x| x != u);
                if list.len() <= 1 && !f1.contains(&w) {
                    queue.push_back(w);
                }
            }
        }
    }
    adj
}

fn segments(
    skeleton: &BTreeMap<VertexId, Vec<VertexId>>,
    f1: &VertexSet,
    critical: &VertexSet,
) -> Vec<Segment> {
    let is_end = |u: &VertexId| f1.contains(u) || critical.contains(u);
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for (&a, nb) in skeleton.iter().filter(|(u, _)| is_end(u)) {
        for &first in nb {
            if is_end(&first) || seen.contains(&first) {
                continue;
            }
            let mut interior = vec![first];
            let (mut prev, mut cur) = (a, first);
            loop {
                let next = *skeleton[&cur].iter().find(|&&w| w != prev).expect("interior vertices have two skeleton neighbours");
                if is_end(&next) {
                    seen.extend(interior.iter().copied());
                    out.push(Segment { ends: (a, next), interior });
                    break;
                }
                interior.push(next);
                prev = cur;
                cur = next;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[u32]) -> VertexSet {
        v.iter().map(|&i| VertexId(i)).collect()
    }

    /// `s = 0` is adjacent to both ends of the path 1-2-3-4-5-6-7; vertices 3, 4
    /// and 5 each carry one leaf (8, 9, 10).
    fn three_hooks() -> MultiGraph {
        let mut e: Vec<(u32, u32, u32)> = (1..7).map(|i| (i, i + 1, 1)).collect();
        e.extend([(0, 1, 1), (0, 7, 1), (3, 8, 1), (4, 9, 1), (5, 10, 1)]);
        MultiGraph::from_edges(11, &e).unwrap()
    }

    #[test]
    fn middle_hook_is_bad() {
        let g = three_hooks();
        let m = Modulator::build(&g, &ids(&[0])).unwrap();
        assert!(m.v1.is_empty());
        assert_eq!(m.f1, ids(&[1, 7]));
        assert_eq!(m.f3, ids(&[2, 3, 4, 5, 6]));
        assert!(m.f3_critical.is_empty());
        assert_eq!(m.segments.len(), 1);
        let good: Vec<(u32, bool)> = m.hooks.iter().map(|h| (h.vertex.0, h.good)).collect();
        assert_eq!(good, vec![(3, true), (4, false), (5, true)]);
        assert_eq!(m.bad_hooks().next().unwrap().hangers, vec![ids(&[9])]);
    }

    #[test]
    fn lone_hanger_is_good_and_plain_path_has_none() {
        let mut e: Vec<(u32, u32, u32)> = (1..5).map(|i| (i, i + 1, 1)).collect();
        e.extend([(0, 1, 1), (0, 5, 1)]);
        let plain = MultiGraph::from_edges(6, &e).unwrap();
        assert!(Modulator::build(&plain, &ids(&[0])).unwrap().hooks.is_empty());
        e.push((3, 6, 1));
        let one = MultiGraph::from_edges(7, &e).unwrap();
        let m = Modulator::build(&one, &ids(&[0])).unwrap();
        assert_eq!(m.hooks.len(), 1);
        assert!(m.hooks[0].good);
    }

    #[test]
    fn cyclic_component_goes_to_v1() {
        // s = 0 attached to a triangle 1,2,3 and to a leaf 4.
        let g = MultiGraph::from_edges(5, &[(1, 2, 1), (2, 3, 1), (1, 3, 1), (0, 1, 1), (0, 4, 1)]).unwrap();
        let m = Modulator::build(&g, &ids(&[0])).unwrap();
        assert_eq!(m.v1.len(), 1);
        assert_eq!(m.v1[0].vertices, ids(&[1, 2, 3]));
        assert_eq!(m.v2, ids(&[4]));
        let c4 = MultiGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert!(Modulator::build(&c4, &VertexSet::new()).is_err());
        assert!(Modulator::build(&c4, &ids(&[0])).is_ok());
    }

    #[test]
    fn critical_vertex_splits_segments() {
        // s = 0 adjacent to leaves 1, 2, 3 of a spider centred at 4 with legs of length 2.
        let e = [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 5, 1), (5, 4, 1), (2, 6, 1), (6, 4, 1), (3, 7, 1), (7, 4, 1)];
        let g = MultiGraph::from_edges(8, &e).unwrap();
        let m = Modulator::build(&g, &ids(&[0])).unwrap();
        assert_eq!(m.f3_critical, ids(&[4]));
        assert_eq!(m.segments.len(), 3);
        assert!(m.segments.iter().all(|s| s.interior.len() == 1));
    }
}
