//! Recognition of proper interval graphs, trees and (proper interval, tree)-graphs,
//! with certified obstructions.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::local::LocalGraph;

/// Linear order of one component satisfying the umbrella property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperIntervalOrdering(pub Vec<VertexId>);

impl ProperIntervalOrdering {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Checks that for every edge `v_i v_j` with `i < j`, `v_i..v_j` is a clique,
    /// and that the order covers exactly `comp`.
    pub fn is_valid_for(&self, g: &MultiGraph, comp: &VertexSet) -> bool {
        let set: VertexSet = self.0.iter().copied().collect();
        if set.len() != self.0.len() || &set != comp {
            return false;
        }
        let local = LocalGraph::new(g, comp);
        let order: Vec<usize> = self.0.iter().map(|v| local.index[v]).collect();
        umbrella_holds(&local, &order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claw {
    pub center: VertexId,
    pub leaves: [VertexId; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    DoubleEdge(VertexId, VertexId),
    /// Induced cycle, listed in cyclic order.
    Hole(Vec<VertexId>),
    /// `pendants[i]` hangs from `triangle[i]`.
    Net { triangle: [VertexId; 3], pendants: [VertexId; 3] },
    /// `outer[i]` is adjacent to `triangle[i]` and `triangle[(i + 1) % 3]`.
    Tent { triangle: [VertexId; 3], outer: [VertexId; 3] },
    /// Only produced by [`proper_interval_ordering`]; a claw alone is allowed in a tree.
    Claw(Claw),
    /// `path` runs from a claw vertex to a triangle vertex; empty when the two meet.
    ClawTrianglePair { claw: Claw, triangle: [VertexId; 3], path: Vec<VertexId> },
}

impl Obstruction {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Obstruction::DoubleEdge(u, v) => VertexSet::from([*u, *v]),
            Obstruction::Hole(c) => c.iter().copied().collect(),
            Obstruction::Net { triangle, pendants } => triangle.iter().chain(pendants).copied().collect(),
            Obstruction::Tent { triangle, outer } => triangle.iter().chain(outer).copied().collect(),
            Obstruction::Claw(c) => claw_vertices(c),
            Obstruction::ClawTrianglePair { claw, triangle, path } => {
                let mut s = claw_vertices(claw);
                s.extend(triangle.iter().copied());
                s.extend(path.iter().copied());
                s
            }
        }
    }

    /// At most six vertices and of a kind listed in the small-obstruction family.
    pub fn is_small(&self) -> bool {
        match self {
            Obstruction::DoubleEdge(..) | Obstruction::Net { .. } | Obstruction::Tent { .. } => true,
            Obstruction::Hole(c) => c.len() <= 6,
            _ => false,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Obstruction::DoubleEdge(..) => "double-edge",
            Obstruction::Hole(_) => "hole",
            Obstruction::Net { .. } => "net",
            Obstruction::Tent { .. } => "tent",
            Obstruction::Claw(_) => "claw",
            Obstruction::ClawTrianglePair { .. } => "claw-triangle-pair",
        }
    }

    /// Re-checks the witness against `g`.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        let vs = self.vertices();
        if !vs.iter().all(|&v| g.has_vertex(v)) {
            return false;
        }
        let adj = |a: VertexId, b: VertexId| g.multiplicity(a, b) == 1;
        match self {
            Obstruction::DoubleEdge(u, v) => g.multiplicity(*u, *v) >= 2,
            Obstruction::Hole(c) => {
                let n = c.len();
                if n < 4 || vs.len() != n {
                    return false;
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                        let m = g.multiplicity(c[i], c[j]);
                        if consecutive && m != 1 || !consecutive && m != 0 {
                            return false;
                        }
                    }
                }
                true
            }
            Obstruction::Net { triangle: t, pendants: p } => {
                if vs.len() != 6 {
                    return false;
                }
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j && (!adj(t[i], t[j]) || g.adjacent(p[i], p[j]) || g.adjacent(p[i], t[j])) {
                            return false;
                        }
                    }
                    if !adj(p[i], t[i]) {
                        return false;
                    }
                }
                true
            }
            Obstruction::Tent { triangle: t, outer: o } => {
                if vs.len() != 6 {
                    return false;
                }
                for i in 0..3 {
                    let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
                    if !adj(a, b) || !adj(o[i], a) || !adj(o[i], b) || g.adjacent(o[i], c) {
                        return false;
                    }
                    if g.adjacent(o[i], o[(i + 1) % 3]) {
                        return false;
                    }
                }
                true
            }
            Obstruction::Claw(c) => claw_ok(g, c),
            Obstruction::ClawTrianglePair { claw, triangle: t, path } => {
                if !claw_ok(g, claw) {
                    return false;
                }
                if !(adj(t[0], t[1]) && adj(t[1], t[2]) && adj(t[0], t[2])) {
                    return false;
                }
                let cv = claw_vertices(claw);
                let tv: VertexSet = t.iter().copied().collect();
                if path.is_empty() {
                    return cv.intersection(&tv).next().is_some();
                }
                let simple_path = path.windows(2).all(|w| adj(w[0], w[1]));
                simple_path && cv.contains(&path[0]) && tv.contains(path.last().unwrap())
            }
        }
    }
}

fn claw_vertices(c: &Claw) -> VertexSet {
    let mut s: VertexSet = c.leaves.iter().copied().collect();
    s.insert(c.center);
    s
}

fn claw_ok(g: &MultiGraph, c: &Claw) -> bool {
    let l = c.leaves;
    claw_vertices(c).len() == 4
        && l.iter().all(|&x| g.multiplicity(c.center, x) == 1)
        && !g.adjacent(l[0], l[1])
        && !g.adjacent(l[0], l[2])
        && !g.adjacent(l[1], l[2])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentClass {
    Tree,
    ProperInterval(ProperIntervalOrdering),
    Neither(Obstruction),
}

impl ComponentClass {
    pub fn is_clean(&self) -> bool {
        !matches!(self, ComponentClass::Neither(_))
    }
}

/// Either an ordering or a certified obstruction of a connected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PigResult {
    Ordering(ProperIntervalOrdering),
    Obstruction(Obstruction),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("edge {0}-{1} has multiplicity {2}")]
    NotSimple(VertexId, VertexId, u32),
    #[error("vertex set is not connected")]
    Disconnected,
}

fn umbrella_holds(g: &LocalGraph, order: &[usize]) -> bool {
    let n = order.len();
    let mut pos = vec![0; g.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut prev_reach = 0;
    for (p, &v) in order.iter().enumerate() {
        let reach = g.adj[v].iter().map(|&u| pos[u]).filter(|&q| q > p).max().unwrap_or(p);
        let right = g.adj[v].iter().filter(|&&u| pos[u] > p).count();
        if right != reach - p || reach < prev_reach || reach >= n {
            return false;
        }
        prev_reach = reach;
    }
    true
}

/// Lexicographic BFS; ties go to the vertex placed last in `prev` (LBFS+), or to
/// the smallest index when `prev` is `None`.
fn lbfs(g: &LocalGraph, prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.len();
    let mut rank = vec![0usize; n];
    if let Some(p) = prev {
        for (i, &v) in p.iter().enumerate() {
            rank[v] = i + 1;
        }
    } else {
        for (v, r) in rank.iter_mut().enumerate() {
            *r = n - v;
        }
    }
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if done[v] {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => match label[v].cmp(&label[b]) {
                    Ordering::Greater => Some(v),
                    Ordering::Equal if rank[v] > rank[b] => Some(v),
                    _ => Some(b),
                },
            };
        }
        let v = best.unwrap();
        done[v] = true;
        out.push(v);
        for &u in &g.adj[v] {
            if !done[u] {
                label[u].push(n - step);
            }
        }
    }
    out
}

fn three_sweep(g: &LocalGraph) -> Option<Vec<usize>> {
    let s1 = lbfs(g, None);
    let s2 = lbfs(g, Some(&s1));
    let s3 = lbfs(g, Some(&s2));
    if umbrella_holds(g, &s3) {
        return Some(s3);
    }
    let s4 = lbfs(g, Some(&s3));
    umbrella_holds(g, &s4).then_some(s4)
}

fn is_chordal(g: &LocalGraph) -> bool {
    // Maximum cardinality search, then a perfect-elimination check on its reverse.
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], usize::MAX - v)).unwrap();
        done[v] = true;
        order.push(v);
        for &u in &g.adj[v] {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Eliminate in reverse MCS order: earlier-visited neighbours must form a clique
    // via the latest-visited among them.
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = g.adj[v].iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&u| pos[u]) {
            if earlier.iter().any(|&u| u != p && !g.has(u, p)) {
                return false;
            }
        }
    }
    true
}

/// Shortest induced cycle of length at least four, if any.
fn shortest_hole(g: &LocalGraph) -> Option<Vec<usize>> {
    let n = g.len();
    let mut best: Option<Vec<usize>> = None;
    let mut blocked = vec![false; n];
    let mut sink = vec![false; n];
    for v in 0..n {
        if g.adj[v].len() < 2 {
            continue;
        }
        blocked[v] = true;
        for &u in &g.adj[v] {
            sink[u] = true;
        }
        for &a in &g.adj[v] {
            let parent = g.bfs(a, &blocked, &sink);
            for &b in &g.adj[v] {
                if b <= a || g.has(a, b) || parent[b] == usize::MAX {
                    continue;
                }
                let path = LocalGraph::path_from_parents(&parent, b);
                if best.as_ref().is_none_or(|h| path.len() + 1 < h.len()) {
                    let mut cyc = vec![v];
                    cyc.extend(path);
                    best = Some(cyc);
                }
            }
        }
        blocked[v] = false;
        for &u in &g.adj[v] {
            sink[u] = false;
        }
        if best.as_ref().is_some_and(|h| h.len() == 4) {
            break;
        }
    }
    best
}

fn find_claw_at(g: &LocalGraph, c: usize) -> Option<[usize; 3]> {
    let nb = &g.adj[c];
    for (i, &a) in nb.iter().enumerate() {
        for (j, &b) in nb.iter().enumerate().skip(i + 1) {
            if g.has(a, b) {
                continue;
            }
            for &d in &nb[j + 1..] {
                if !g.has(a, d) && !g.has(b, d) {
                    return Some([a, b, d]);
                }
            }
        }
    }
    None
}

fn find_claw(g: &LocalGraph) -> Option<(usize, [usize; 3])> {
    (0..g.len()).find_map(|c| find_claw_at(g, c).map(|l| (c, l)))
}

fn triangles(g: &LocalGraph) -> impl Iterator<Item = [usize; 3]> + '_ {
    (0..g.len()).flat_map(move |a| {
        g.adj[a].iter().filter(move |&&b| b > a).flat_map(move |&b| {
            g.adj[b].iter().filter(move |&&c| c > b && g.has(a, c)).map(move |&c| [a, b, c])
        })
    })
}

fn independent_triple(g: &LocalGraph, xs: &[usize], ys: &[usize], zs: &[usize]) -> Option<[usize; 3]> {
    for &x in xs {
        for &y in ys {
            if g.has(x, y) {
                continue;
            }
            for &z in zs {
                if !g.has(x, z) && !g.has(y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

fn find_net(g: &LocalGraph) -> Option<([usize; 3], [usize; 3])> {
    for t in triangles(g) {
        let only = |i: usize| -> Vec<usize> {
            g.adj[t[i]]
                .iter()
                .copied()
                .filter(|&x| !t.contains(&x) && (0..3).all(|j| j == i || !g.has(x, t[j])))
                .collect()
        };
        let (xa, xb, xc) = (only(0), only(1), only(2));
        if let Some(p) = independent_triple(g, &xa, &xb, &xc) {
            return Some((t, p));
        }
    }
    None
}

fn find_tent(g: &LocalGraph) -> Option<([usize; 3], [usize; 3])> {
    for t in triangles(g) {
        let pair = |i: usize| -> Vec<usize> {
            let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            g.adj[a].iter().copied().filter(|&x| x != b && x != c && g.has(x, b) && !g.has(x, c)).collect()
        };
        let (oa, ob, oc) = (pair(0), pair(1), pair(2));
        if let Some(o) = independent_triple(g, &oa, &ob, &oc) {
            return Some((t, o));
        }
    }
    None
}

fn arr(g: &LocalGraph, a: [usize; 3]) -> [VertexId; 3] {
    [g.ids[a[0]], g.ids[a[1]], g.ids[a[2]]]
}

/// Best obstruction among holes, nets and tents: a hole of length at most six wins,
/// then a net, then a tent, then a longer hole.
fn small_or_hole(g: &LocalGraph) -> Option<Obstruction> {
    let hole = if is_chordal(g) { None } else { shortest_hole(g) };
    if let Some(h) = &hole {
        if h.len() <= 6 {
            return Some(Obstruction::Hole(g.to_ids(h)));
        }
    }
    if let Some((t, p)) = find_net(g) {
        return Some(Obstruction::Net { triangle: arr(g, t), pendants: arr(g, p) });
    }
    if let Some((t, o)) = find_tent(g) {
        return Some(Obstruction::Tent { triangle: arr(g, t), outer: arr(g, o) });
    }
    hole.map(|h| Obstruction::Hole(g.to_ids(&h)))
}

fn connected(g: &LocalGraph) -> bool {
    if g.len() == 0 {
        return true;
    }
    let parent = g.bfs(0, &vec![false; g.len()], &vec![false; g.len()]);
    parent.iter().all(|&p| p != usize::MAX)
}

fn check_simple(g: &MultiGraph, comp: &VertexSet) -> Result<(), RecognitionError> {
    for &v in comp {
        for (u, m) in g.neighbors(v) {
            if m > 1 && comp.contains(&u) {
                return Err(RecognitionError::NotSimple(v.min(u), v.max(u), m));
            }
        }
    }
    Ok(())
}

/// Proper interval ordering of the connected simple subgraph induced by `comp`,
/// or a claw, net, tent or hole.
pub fn proper_interval_ordering(g: &MultiGraph, comp: &VertexSet) -> Result<PigResult, RecognitionError> {
    check_simple(g, comp)?;
    let local = LocalGraph::new(g, comp);
    if !connected(&local) {
        return Err(RecognitionError::Disconnected);
    }
    Ok(pig_local(&local))
}

fn pig_local(local: &LocalGraph) -> PigResult {
    if let Some(order) = three_sweep(local) {
        return PigResult::Ordering(ProperIntervalOrdering(local.to_ids(&order)));
    }
    if let Some((c, l)) = find_claw(local) {
        return PigResult::Obstruction(Obstruction::Claw(Claw { center: local.ids[c], leaves: arr(local, l) }));
    }
    match small_or_hole(local) {
        Some(o) => PigResult::Obstruction(o),
        None => panic!("recognition invariant violated: no ordering and no obstruction on {:?}", local.ids),
    }
}

/// Classifies one connected vertex set of `g`.
pub fn classify_component(g: &MultiGraph, comp: &VertexSet) -> ComponentClass {
    for &v in comp {
        for (u, m) in g.neighbors(v) {
            if m > 1 && comp.contains(&u) {
                return ComponentClass::Neither(Obstruction::DoubleEdge(v.min(u), v.max(u)));
            }
        }
    }
    let local = LocalGraph::new(g, comp);
    if local.edge_count() + 1 == local.len() {
        return ComponentClass::Tree;
    }
    match three_sweep(&local) {
        Some(order) => ComponentClass::ProperInterval(ProperIntervalOrdering(local.to_ids(&order))),
        None => ComponentClass::Neither(component_obstruction(&local).0),
    }
}

/// Preference rank used when several components are obstructed.
fn rank(o: &Obstruction) -> u8 {
    match o {
        Obstruction::DoubleEdge(..) => 0,
        Obstruction::Hole(c) if c.len() <= 6 => 1,
        Obstruction::Net { .. } | Obstruction::Tent { .. } => 1,
        Obstruction::Hole(_) => 2,
        _ => 3,
    }
}

/// Obstruction of a connected, simple, non-tree component that is not a PIG.
fn component_obstruction(local: &LocalGraph) -> (Obstruction, u8) {
    if let Some(o) = small_or_hole(local) {
        let r = rank(&o);
        return (o, r);
    }
    match claw_triangle_local(local) {
        Some(o) => (o, 3),
        None => panic!("recognition invariant violated: component {:?} is neither PIG nor obstructed", local.ids),
    }
}

fn claw_triangle_local(g: &LocalGraph) -> Option<Obstruction> {
    let n = g.len();
    let mut in_tri = vec![false; n];
    let mut tri_of = vec![None; n];
    for t in triangles(g) {
        for &x in &t {
            in_tri[x] = true;
            tri_of[x].get_or_insert(t);
        }
    }
    if !in_tri.iter().any(|&b| b) {
        return None;
    }
    // Multi-source BFS from triangle vertices.
    let mut dist = vec![usize::MAX; n];
    let mut toward = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        if in_tri[v] {
            dist[v] = 0;
            toward[v] = v;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &u in &g.adj[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                toward[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut best: Option<(usize, usize, [usize; 3], usize)> = None;
    for c in 0..n {
        let nb = &g.adj[c];
        if nb.len() < 3 {
            continue;
        }
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if g.has(a, d) || g.has(b, d) {
                        continue;
                    }
                    let (near, dd) = [c, a, b, d].into_iter().map(|x| (x, dist[x])).min_by_key(|p| p.1).unwrap();
                    if best.as_ref().is_none_or(|bst| dd < bst.0) {
                        best = Some((dd, c, [a, b, d], near));
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            break;
        }
    }
    let (d, c, leaves, near) = best?;
    let mut path = vec![near];
    let mut cur = near;
    while dist[cur] > 0 {
        cur = toward[cur];
        path.push(cur);
    }
    let tri = tri_of[cur].unwrap();
    let path = if d == 0 { Vec::new() } else { g.to_ids(&path) };
    Some(Obstruction::ClawTrianglePair {
        claw: Claw { center: g.ids[c], leaves: arr(g, leaves) },
        triangle: arr(g, tri),
        path,
    })
}

/// A claw and a triangle in `comp` joined by a shortest path, if both exist.
pub fn find_claw_triangle_pair(g: &MultiGraph, comp: &VertexSet) -> Option<Obstruction> {
    claw_triangle_local(&LocalGraph::new(g, comp))
}

/// `Ok` iff `g` is simple and every component is a proper interval graph or a tree.
pub fn is_pitg(g: &MultiGraph) -> Result<(), Obstruction> {
    if let Some((u, v, _)) = g.edges().find(|e| e.2 > 1) {
        return Err(Obstruction::DoubleEdge(u, v));
    }
    let mut best: Option<(Obstruction, u8)> = None;
    for comp in g.connected_components() {
        let local = LocalGraph::new(g, &comp);
        if local.edge_count() + 1 == local.len() || three_sweep(&local).is_some() {
            continue;
        }
        let (o, r) = component_obstruction(&local);
        if best.as_ref().is_none_or(|b| r < b.1) {
            let done = r == 1;
            best = Some((o, r));
            if done {
                break;
            }
        }
    }
    match best {
        Some((o, _)) => Err(o),
        None => Ok(()),
    }
}

/// Every induced net, tent, C4, C5 and C6, as sorted vertex sets.
pub fn enumerate_small_obstructions(g: &MultiGraph) -> Vec<VertexSet> {
    let local = LocalGraph::whole(g);
    let n = local.len();
    let mut out = Vec::new();
    let mut sub = Vec::with_capacity(6);
    for v in 0..n {
        let ext: Vec<usize> = local.adj[v].iter().copied().filter(|&u| u > v).collect();
        sub.push(v);
        esu(&local, &mut sub, ext, v, &mut out);
        sub.pop();
    }
    let mut sets: Vec<VertexSet> = out.into_iter().map(|s| local.to_ids(&s).into_iter().collect()).collect();
    sets.sort();
    sets
}

fn esu(g: &LocalGraph, sub: &mut Vec<usize>, mut ext: Vec<usize>, root: usize, out: &mut Vec<Vec<usize>>) {
    if sub.len() >= 4 && is_small_obstruction(g, sub) {
        out.push(sub.clone());
    }
    if sub.len() == 6 {
        return;
    }
    while let Some(w) = ext.pop() {
        if !hereditary_ok(g, sub, w) {
            continue;
        }
        let mut next = ext.clone();
        for &u in &g.adj[w] {
            if u > root && !sub.contains(&u) && !next.contains(&u) && u != w && !sub.iter().any(|&s| g.has(s, u)) {
                next.push(u);
            }
        }
        sub.push(w);
        esu(g, sub, next, root, out);
        sub.pop();
    }
}

/// Properties shared by every induced subgraph of a small obstruction: no K4 and
/// maximum degree at most four.
fn hereditary_ok(g: &LocalGraph, sub: &[usize], w: usize) -> bool {
    let nw: Vec<usize> = sub.iter().copied().filter(|&s| g.has(s, w)).collect();
    if nw.len() > 4 {
        return false;
    }
    for &s in &nw {
        let ds = sub.iter().filter(|&&t| g.has(s, t)).count() + 1;
        if ds > 4 {
            return false;
        }
    }
    for (i, &a) in nw.iter().enumerate() {
        for (j, &b) in nw.iter().enumerate().skip(i + 1) {
            if !g.has(a, b) {
                continue;
            }
            if nw[j + 1..].iter().any(|&c| g.has(a, c) && g.has(b, c)) {
                return false;
            }
        }
    }
    true
}

fn is_small_obstruction(g: &LocalGraph, s: &[usize]) -> bool {
    let deg: Vec<usize> = s.iter().map(|&a| s.iter().filter(|&&b| g.has(a, b)).count()).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    // Sets produced by the enumeration are connected, so 2-regular means a cycle.
    if deg.iter().all(|&d| d == 2) {
        return true;
    }
    if s.len() != 6 {
        return false;
    }
    let high: Vec<usize> = (0..6).filter(|&i| deg[i] >= 3).map(|i| s[i]).collect();
    let low: Vec<usize> = (0..6).filter(|&i| deg[i] < 3).map(|i| s[i]).collect();
    if high.len() != 3 || !(g.has(high[0], high[1]) && g.has(high[1], high[2]) && g.has(high[0], high[2])) {
        return false;
    }
    let low_independent = !g.has(low[0], low[1]) && !g.has(low[0], low[2]) && !g.has(low[1], low[2]);
    let mut sorted = deg.clone();
    sorted.sort_unstable();
    (edges == 6 && sorted == [1, 1, 1, 3, 3, 3] && low_independent)
        || (edges == 9 && sorted == [2, 2, 2, 4, 4, 4] && low_independent)
}
