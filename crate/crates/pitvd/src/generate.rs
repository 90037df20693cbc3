//! Seeded random multigraphs and (prop-int, tree)-graphs.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{MultiGraph, VertexId};

/// Each pair becomes an edge with probability `density`; an edge is doubled with
/// probability `double_rate`, taking multiplicity 2 or 3.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, density: f64, double_rate: f64) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(density) {
                let m = if rng.gen_bool(double_rate) { rng.gen_range(2..=3) } else { 1 };
                g.add_edge(VertexId(u), VertexId(v), m).expect("fresh vertices");
            }
        }
    }
    g
}

/// Unit interval graph on `n` vertices with left ends drawn from `[0, span)`. Vertices
/// are numbered in interval order, which is a proper interval ordering.
pub fn random_unit_interval<R: Rng>(rng: &mut R, n: usize, span: f64) -> MultiGraph {
    let mut starts: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..span.max(f64::MIN_POSITIVE))).collect();
    starts.sort_by(f64::total_cmp);
    let mut g = MultiGraph::with_vertices(n);
    for i in 0..n {
        for j in i + 1..n {
            if starts[j] - starts[i] > 1.0 {
                break;
            }
            g.add_edge(VertexId(i as u32), VertexId(j as u32), 1).expect("fresh vertices");
        }
    }
    g
}

/// Uniform random recursive tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    for v in 1..n as u32 {
        let p = rng.gen_range(0..v);
        g.add_edge(VertexId(p), VertexId(v), 1).expect("fresh vertices");
    }
    g
}

/// Disjoint union of `parts` random unit interval graphs and trees with at most
/// `max_part` vertices each.
pub fn random_pitg<R: Rng>(rng: &mut R, parts: usize, max_part: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for _ in 0..parts {
        let n = rng.gen_range(1..=max_part.max(1));
        let part = if rng.gen_bool(0.5) { random_tree(rng, n) } else { random_unit_interval(rng, n, n as f64 / 2.5) };
        let base = g.id_bound();
        for _ in 0..n {
            g.add_vertex();
        }
        for (u, v, m) in part.edges() {
            g.add_edge(VertexId(base + u.0), VertexId(base + v.0), m).expect("fresh vertices");
        }
    }
    g
}

pub fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
