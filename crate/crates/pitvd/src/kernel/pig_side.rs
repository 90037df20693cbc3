//! Rules 11-14: the cyclic proper interval components of `G - S`.

use crate::clique_partition::{bypass, CliquePartition};
use crate::combinatorics::{q_expansion_classic, BipartiteGraph};
use crate::exact::binomial;
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::kernel::instance::{Edit, RuleApplication};
use crate::kernel::modulator::{Modulator, PigComponent};
use crate::separator::minimum_vertex_separator;

/// Components of `V1` adjacent to `S`, as a bipartite graph with `S` on the left.
pub fn component_graph(g: &MultiGraph, m: &Modulator) -> (Vec<VertexId>, BipartiteGraph) {
    let left: Vec<VertexId> = m.s.iter().copied().collect();
    let right: Vec<&PigComponent> =
        m.v1.iter().filter(|c| c.vertices.iter().any(|&u| g.neighbor_ids(u).any(|w| m.s.contains(&w)))).collect();
    let mut h = BipartiteGraph::new(left.len(), right.len());
    for (a, &x) in left.iter().enumerate() {
        for (b, c) in right.iter().enumerate() {
            if g.neighbor_ids(x).any(|u| c.vertices.contains(&u)) {
                h.add_edge(a, b);
            }
        }
    }
    (left, h)
}

/// Rule 11: a 3-expansion of part of `S` into cyclic components.
pub fn rule11(g: &MultiGraph, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    let q = if mutated { 1 } else { 3 };
    let (left, h) = component_graph(g, m);
    if left.is_empty() || h.right < q * h.left {
        return None;
    }
    let exp = q_expansion_classic(&h, q).ok()?;
    let hat: Vec<VertexId> = exp.a_hat.iter().map(|&a| left[a]).collect();
    let k_delta = hat.len();
    Some(RuleApplication::delete(11, hat, k_delta))
}

/// Number of cliques of `c` containing a neighbour of `v`.
pub fn cliques_touched(g: &MultiGraph, c: &PigComponent, v: VertexId) -> usize {
    let p = &c.partition;
    let mut hit = vec![false; p.len()];
    for u in g.neighbor_ids(v) {
        if let Some(i) = p.clique_of(u) {
            hit[i] = true;
        }
    }
    hit.into_iter().filter(|&h| h).count()
}

/// Rule 12: a vertex of `S` seeing `6k + 5` cliques of one component.
pub fn rule12(g: &MultiGraph, k: usize, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    let threshold = if mutated { 1 } else { 6 * k + 5 };
    let v = m.s.iter().copied().find(|&v| m.v1.iter().any(|c| cliques_touched(g, c, v) >= threshold))?;
    Some(RuleApplication::delete(12, [v], 1))
}

/// Length of the `N(S)`-free block rule 13 looks for.
pub fn block_length(k: usize) -> usize {
    14 * k + 5
}

/// Cliques of `p` disjoint from `N(S)`.
pub fn free_cliques(g: &MultiGraph, s: &VertexSet, p: &CliquePartition) -> Vec<bool> {
    p.cliques.iter().map(|c| c.iter().all(|&u| g.neighbor_ids(u).all(|w| !s.contains(&w)))).collect()
}

/// Index `i` of the first block `i - 7k ..= i + 7k + 4` of free cliques with `K_{i+5}` present.
pub fn find_block(free: &[bool], k: usize) -> Option<usize> {
    let len = block_length(k);
    let mut run = 0;
    for (j, &f) in free.iter().enumerate() {
        run = if f { run + 1 } else { 0 };
        if run >= len {
            let i = j + 1 - len + 7 * k;
            if i + 5 < free.len() {
                return Some(i);
            }
        }
    }
    None
}

/// Rule 13: bypass a clique in the middle of a long `N(S)`-free block.
pub fn rule13(g: &MultiGraph, k: usize, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    for c in &m.v1 {
        let p = &c.partition;
        let Some(i) = find_block(&free_cliques(g, &m.s, p), if mutated { 0 } else { k }) else { continue };
        let (x, y) = (p.first_vertex(i), p.first_vertex(i + 5));
        let sep = minimum_vertex_separator(g, x, y, &m.s).expect("heads of cliques five apart are not adjacent");
        let l = (i + 1..=i + 3)
            .find(|&l| p.cliques[l].iter().all(|u| !sep.contains(u)))
            .unwrap_or_else(|| panic!("separator {sep:?} meets cliques {}..={}", i + 1, i + 3));
        let mut h = g.clone();
        let added = bypass(&mut h, p, l).expect("interior clique of a connected component");
        let mut edits = vec![Edit::DeleteVertices(p.cliques[l].clone())];
        edits.extend(added.into_iter().map(|(a, b)| Edit::SetMultiplicity(a, b, 1)));
        return Some(RuleApplication::new(13, edits, 0));
    }
    None
}

/// Upper bound on the number of vertices marked in one clique.
pub fn eta(k: usize, s: usize) -> u128 {
    let k = k as u128;
    let sum: u128 = (1..=3u32).map(|i| (1u128 << i) * binomial(s, i as usize)).sum();
    2 * (k + 3) * sum + 6 * s as u128 * (k + 1) * (k + 3)
}

fn mark_first(marked: &mut VertexSet, it: impl Iterator<Item = VertexId>, n: usize) {
    marked.extend(it.take(n));
}

fn mark_last<'a>(marked: &mut VertexSet, it: impl DoubleEndedIterator<Item = &'a VertexId>, n: usize) {
    marked.extend(it.rev().take(n).copied());
}

/// Marked vertices of clique `j` of `c`. `mutated` keeps only the first vertex.
pub fn mark_clique(g: &MultiGraph, k: usize, s: &VertexSet, c: &PigComponent, j: usize, mutated: bool) -> VertexSet {
    let p = &c.partition;
    let clique = &p.cliques[j];
    let mut marked = VertexSet::new();
    if mutated {
        marked.insert(clique[0]);
        return marked;
    }
    let adj = |a: VertexId, b: VertexId| g.adjacent(a, b);
    // Signatures over subsets of S of size at most three. Members of S that miss K
    // only duplicate the classes of smaller subsets.
    let touching: Vec<VertexId> = s.iter().copied().filter(|&x| clique.iter().any(|&u| adj(x, u))).collect();
    let mut subsets: Vec<Vec<VertexId>> = vec![Vec::new()];
    for (a, &x) in touching.iter().enumerate() {
        subsets.push(vec![x]);
        for (b, &y) in touching.iter().enumerate().skip(a + 1) {
            subsets.push(vec![x, y]);
            for &z in &touching[b + 1..] {
                subsets.push(vec![x, y, z]);
            }
        }
    }
    for z in &subsets {
        let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); 1 << z.len()];
        for &u in clique {
            let f = z.iter().enumerate().fold(0usize, |acc, (i, &x)| acc | (usize::from(adj(u, x)) << i));
            classes[f].push(u);
        }
        for class in &classes {
            mark_first(&mut marked, class.iter().copied(), k + 3);
            mark_last(&mut marked, class.iter(), k + 3);
        }
    }
    let pv = j.checked_sub(1).map(|i| &p.cliques[i]);
    let nt = p.cliques.get(j + 1);
    for &x in s {
        if let Some(pv) = pv {
            let non: Vec<VertexId> = pv.iter().copied().filter(|&y| !adj(x, y)).collect();
            for &y in non.iter().rev().take(k + 1) {
                let common: Vec<VertexId> = clique.iter().copied().filter(|&u| adj(u, x) && adj(u, y)).collect();
                mark_last(&mut marked, common.iter(), k + 3);
            }
            let nbr: Vec<VertexId> = pv.iter().copied().filter(|&y| adj(x, y)).collect();
            for &y in nbr.iter().rev().take(k + 1) {
                let only_y: Vec<VertexId> = clique.iter().copied().filter(|&u| adj(u, y) && !adj(u, x)).collect();
                mark_last(&mut marked, only_y.iter(), k + 3);
            }
            for &y in nbr.iter().take(k + 1) {
                mark_first(&mut marked, clique.iter().copied().filter(|&u| adj(u, x) && !adj(u, y)), k + 1);
            }
        }
        if let Some(nt) = nt {
            let non: Vec<VertexId> = nt.iter().copied().filter(|&z| !adj(x, z)).collect();
            for &z in non.iter().take(k + 1) {
                mark_first(&mut marked, clique.iter().copied().filter(|&u| adj(u, x) && adj(u, z)), k + 3);
            }
            let nbr: Vec<VertexId> = nt.iter().copied().filter(|&z| adj(x, z)).collect();
            for &z in nbr.iter().take(k + 3) {
                mark_first(&mut marked, clique.iter().copied().filter(|&u| adj(u, z) && !adj(u, x)), k + 3);
            }
            for &z in nbr.iter().rev().take(k + 1) {
                let only_x: Vec<VertexId> = clique.iter().copied().filter(|&u| adj(u, x) && !adj(u, z)).collect();
                mark_last(&mut marked, only_x.iter(), k + 3);
            }
        }
    }
    marked
}

/// Rule 14: delete one unmarked clique vertex, the first in clique and ordering order.
pub fn rule14(g: &MultiGraph, k: usize, m: &Modulator, mutated: bool) -> Option<RuleApplication> {
    for c in &m.v1 {
        for j in 0..c.partition.len() {
            let marked = mark_clique(g, k, &m.s, c, j, mutated);
            if let Some(&v) = c.partition.cliques[j].iter().find(|u| !marked.contains(u)) {
                return Some(RuleApplication::delete(14, [v], 0));
            }
        }
    }
    None
}
