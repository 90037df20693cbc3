//! Cycles through a fixed vertex: a large flower or a small hitting set.
//!
//! Cycles through `v` correspond to paths in `G - v` between two distinct neighbours
//! of `v` (plus double edges at `v`). Disjoint such paths are counted by Gallai's
//! reduction to a maximum matching: every non-terminal vertex is split into two
//! adjacent twins, and the number of disjoint paths is `nu(H) - |U|`. The hitting set
//! is read off the Gallai–Edmonds decomposition of `H`.

use std::collections::BTreeMap;

use crate::combinatorics::matching::GeneralMatching;
use crate::graph::{MultiGraph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowerResult {
    /// Cycles through `v` (listed starting at `v`), pairwise meeting only in `v`.
    Flower(Vec<Vec<VertexId>>),
    /// Vertices other than `v` meeting every cycle through `v`.
    HittingSet(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Terminal(VertexId),
    /// Pendant twin of a terminal joined to `v` by a double edge.
    Dummy(VertexId),
    Copy(VertexId, u8),
}

struct Reduction {
    nodes: Vec<Node>,
    adj: Vec<Vec<usize>>,
    index: BTreeMap<(VertexId, u8), usize>,
    inner: usize,
}

// Tags in `index`: 0 terminal, 1/2 copies, 3 dummy.
fn build(g: &MultiGraph, v: VertexId) -> Reduction {
    let terminals: VertexSet = g.neighbor_ids(v).collect();
    let reach: VertexSet = {
        let blocked = VertexSet::from([v]);
        let mut r = VertexSet::new();
        for &t in &terminals {
            if !r.contains(&t) {
                r.extend(g.reach(t, &blocked));
            }
        }
        r.remove(&v);
        r
    };
    let mut nodes = Vec::new();
    let mut index = BTreeMap::new();
    let mut inner = 0;
    for &u in &reach {
        if terminals.contains(&u) {
            index.insert((u, 0), nodes.len());
            nodes.push(Node::Terminal(u));
            if g.multiplicity(v, u) >= 2 {
                index.insert((u, 3), nodes.len());
                nodes.push(Node::Dummy(u));
            }
        } else {
            inner += 1;
            for c in 1..=2 {
                index.insert((u, c), nodes.len());
                nodes.push(Node::Copy(u, c));
            }
        }
    }
    let mut adj = vec![Vec::new(); nodes.len()];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    let copies = |x: VertexId, index: &BTreeMap<(VertexId, u8), usize>| -> Vec<usize> {
        match index.get(&(x, 0)) {
            Some(&t) => vec![t],
            None => vec![index[&(x, 1)], index[&(x, 2)]],
        }
    };
    for &u in &reach {
        if let (Some(&a), Some(&b)) = (index.get(&(u, 1)), index.get(&(u, 2))) {
            link(a, b, &mut adj);
        }
        if let (Some(&t), Some(&d)) = (index.get(&(u, 0)), index.get(&(u, 3))) {
            link(t, d, &mut adj);
        }
        for w in g.neighbor_ids(u) {
            if w <= u || w == v {
                continue;
            }
            for &a in &copies(u, &index) {
                for &b in &copies(w, &index) {
                    link(a, b, &mut adj);
                }
            }
        }
    }
    Reduction { nodes, adj, index, inner }
}

fn twin(r: &Reduction, i: usize) -> Option<usize> {
    match r.nodes[i] {
        Node::Copy(u, c) => Some(r.index[&(u, 3 - c)]),
        _ => None,
    }
}

fn vertex(n: Node) -> VertexId {
    match n {
        Node::Terminal(u) | Node::Dummy(u) | Node::Copy(u, _) => u,
    }
}

/// Maximum number of cycles through `v` pairwise meeting only at `v`, with a witness.
pub fn max_flower(g: &MultiGraph, v: VertexId) -> Vec<Vec<VertexId>> {
    let r = build(g, v);
    let mut m = GeneralMatching::new(&r.adj);
    m.solve();
    extract_petals(g, v, &r, &mut m.mate)
}

fn extract_petals(_g: &MultiGraph, v: VertexId, r: &Reduction, mate: &mut [usize]) -> Vec<Vec<VertexId>> {
    const NIL: usize = usize::MAX;
    // Re-pair split vertices that have exactly one copy matched outside.
    loop {
        let mut changed = false;
        for i in 0..r.nodes.len() {
            let Some(j) = twin(r, i) else { continue };
            if mate[i] != NIL && mate[i] != j && mate[j] == NIL {
                let x = mate[i];
                mate[x] = NIL;
                mate[i] = j;
                mate[j] = i;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut used = vec![false; r.nodes.len()];
    let mut petals = Vec::new();
    for start in 0..r.nodes.len() {
        if used[start] || mate[start] == NIL || matches!(r.nodes[start], Node::Copy(..)) {
            continue;
        }
        let mut walk = vec![start];
        used[start] = true;
        let mut cur = mate[start];
        loop {
            used[cur] = true;
            walk.push(cur);
            match twin(r, cur) {
                None => break,
                Some(tw) => {
                    used[tw] = true;
                    cur = mate[tw];
                }
            }
        }
        let mut cycle = vec![v];
        for &i in &walk {
            let node = r.nodes[i];
            if matches!(node, Node::Dummy(_)) {
                continue;
            }
            let x = vertex(node);
            if cycle.last() != Some(&x) {
                cycle.push(x);
            }
        }
        petals.push(cycle);
    }
    petals
}

/// Either more than `k` cycles through `v` pairwise meeting only at `v`, or a set of
/// at most `2k` other vertices meeting every cycle through `v`.
pub fn v_flower_or_hitting_set(g: &MultiGraph, v: VertexId, k: usize) -> FlowerResult {
    let r = build(g, v);
    let mut m = GeneralMatching::new(&r.adj);
    let nu = m.solve();
    let order = nu - r.inner;
    if order > k {
        let mut mate = m.mate.clone();
        return FlowerResult::Flower(extract_petals(g, v, &r, &mut mate));
    }
    let d = m.gallai_edmonds_d();
    let n = r.nodes.len();
    let a: Vec<bool> = (0..n).map(|x| !d[x] && r.adj[x].iter().any(|&y| d[y])).collect();
    let mut z = VertexSet::new();
    for (node, _) in r.nodes.iter().zip(&a).filter(|&(_, &ax)| ax) {
        let (Node::Terminal(u) | Node::Dummy(u) | Node::Copy(u, _)) = *node;
        z.insert(u);
    }
    // Components of H - A: keep one terminal each.
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] || a[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut tnodes = Vec::new();
        while let Some(x) = stack.pop() {
            if matches!(r.nodes[x], Node::Terminal(_) | Node::Dummy(_)) {
                tnodes.push(x);
            }
            for &y in &r.adj[x] {
                if !seen[y] && !a[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        // All terminal nodes but one; leaving out a dummy still covers its terminal.
        if tnodes.len() >= 2 {
            tnodes.sort_unstable();
            let skip = tnodes.iter().position(|&x| matches!(r.nodes[x], Node::Dummy(_))).unwrap_or(0);
            for (i, &x) in tnodes.iter().enumerate() {
                if i != skip {
                    z.insert(vertex(r.nodes[x]));
                }
            }
        }
    }
    debug_assert!(z.len() <= 2 * order, "hitting set {} exceeds twice the flower order {}", z.len(), order);
    FlowerResult::HittingSet(z)
}

/// Whether some cycle of `g` passes through `v` (double edges count).
pub fn has_cycle_through(g: &MultiGraph, v: VertexId) -> bool {
    if g.neighbors(v).any(|(_, m)| m >= 2) {
        return true;
    }
    let blocked = VertexSet::from([v]);
    let mut seen = VertexSet::new();
    for t in g.neighbor_ids(v) {
        if seen.contains(&t) {
            return true;
        }
        seen.extend(g.reach(t, &blocked));
    }
    false
}

/// Structural check of a flower result.
pub fn validate_flower_result(g: &MultiGraph, v: VertexId, k: usize, res: &FlowerResult) -> Result<(), String> {
    match res {
        FlowerResult::Flower(petals) => {
            if petals.len() <= k {
                return Err(format!("only {} petals for budget {k}", petals.len()));
            }
            let mut used = VertexSet::new();
            for p in petals {
                if p.first() != Some(&v) || p.len() < 2 {
                    return Err(format!("petal {p:?} does not start at {v}"));
                }
                let inner: VertexSet = p[1..].iter().copied().collect();
                if inner.len() != p.len() - 1 || inner.contains(&v) {
                    return Err(format!("petal {p:?} repeats a vertex"));
                }
                if !used.is_disjoint(&inner) {
                    return Err(format!("petal {p:?} overlaps another"));
                }
                used.extend(inner);
                if p.len() == 2 {
                    if g.multiplicity(v, p[1]) < 2 {
                        return Err(format!("two-vertex petal {p:?} without a double edge"));
                    }
                } else {
                    let closed = p.windows(2).all(|w| g.adjacent(w[0], w[1])) && g.adjacent(*p.last().unwrap(), v);
                    if !closed {
                        return Err(format!("petal {p:?} is not a cycle"));
                    }
                }
            }
            Ok(())
        }
        FlowerResult::HittingSet(z) => {
            if z.len() > 2 * k {
                return Err(format!("hitting set of size {} exceeds {}", z.len(), 2 * k));
            }
            if z.contains(&v) {
                return Err("hitting set contains the centre".into());
            }
            let rest = g.delete_vertices(z).map_err(|e| e.to_string())?;
            if has_cycle_through(&rest, v) {
                return Err("a cycle through the centre survives".into());
            }
            Ok(())
        }
    }
}
