//! Seeded generators for K5-minor-free graphs and boundary instances.
//!
//! All randomness comes from ChaCha8 seeded with the 64-bit seed through
//! `SeedableRng::seed_from_u64`, so a seed reproduces the same output on
//! every platform.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boundary::{Color, ColorSet, Instance, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Apollonian network on vertices `0..n`: start from a triangle and
/// repeatedly put a new vertex inside a random current face, joined to its
/// three corners. The result is a planar triangulation with `3n - 6` edges.
pub fn apollonian(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "apollonian network needs n >= 3, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut g = Graph::complete(3);
    // the triangle bounds two faces, inside and outside
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n as Vertex {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        g.add_vertex(v);
        for u in [a, b, c] {
            g.add_edge(u, v)?;
        }
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Ok(g)
}

/// Lexicographically smallest `k`-clique (as a sorted vertex list).
pub fn smallest_clique(g: &Graph, k: usize) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, k: usize, chosen: &mut Vec<Vertex>, candidates: &[Vertex]) -> bool {
        if chosen.len() == k {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let rest: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| g.has_edge(u, v))
                .collect();
            chosen.push(v);
            if extend(g, k, chosen, &rest) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let all: Vec<Vertex> = g.vertices().collect();
    let mut chosen = Vec::new();
    extend(g, k, &mut chosen, &all).then_some(chosen)
}

/// Glues `g2` onto `g1` along a `k`-clique of each (the smallest, matched in
/// ascending order). `g2`'s other vertices get fresh ids above `g1`'s.
pub fn clique_sum(g1: &Graph, g2: &Graph, k: usize) -> Result<Graph> {
    if k > 3 {
        return Err(Error::InvalidArgument(format!(
            "clique-sum order {k} exceeds 3"
        )));
    }
    let c1 = smallest_clique(g1, k).ok_or(Error::NoClique(k))?;
    let c2 = smallest_clique(g2, k).ok_or(Error::NoClique(k))?;
    let base = g1.max_vertex().map_or(0, |m| m + 1);
    let mut fresh = base;
    let mapped = g2.relabel(|v| match c2.iter().position(|&c| c == v) {
        Some(i) => c1[i],
        None => {
            fresh += 1;
            fresh - 1
        }
    });
    Ok(g1.union(&mapped))
}

/// Same graph with ids permuted at random.
pub fn shuffle_ids(g: &Graph, seed: u64) -> Graph {
    let mut ids: Vec<Vertex> = g.vertices().collect();
    ids.shuffle(&mut rng(seed));
    let old: Vec<Vertex> = g.vertices().collect();
    g.relabel(|v| ids[old.binary_search(&v).unwrap()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryMode {
    /// `A = B = ∅`, 5-lists everywhere.
    Empty,
    /// Delete a random vertex `u` and use its neighborhood as `B`, with
    /// 3-lists on `B` and 5-lists elsewhere.
    VertexNeighborhood,
}

fn random_list(rng: &mut ChaCha8Rng, palette: Color, size: usize) -> ColorSet {
    (1..=palette)
        .choose_multiple(rng, size)
        .into_iter()
        .collect()
}

/// A random instance on `g` meeting the list-size rules of an [`Instance`],
/// with colors drawn from `1..=palette`.
///
/// In vertex-neighborhood mode the instance graph is `g - u`. Its plus graph
/// on `B = N(u)` is `g` itself, so `B` is a boundary whenever `g` is
/// K5-minor-free.
pub fn random_instance(
    g: &Graph,
    mode: BoundaryMode,
    palette: Color,
    seed: u64,
) -> Result<Instance> {
    if palette < 5 {
        return Err(Error::InvalidArgument(format!(
            "palette {palette} has fewer than 5 colors"
        )));
    }
    let mut rng = rng(seed);
    let (graph, boundary) = match mode {
        BoundaryMode::Empty => (g.clone(), VertexSet::new()),
        BoundaryMode::VertexNeighborhood => {
            let u = g
                .vertices()
                .choose(&mut rng)
                .ok_or_else(|| Error::InvalidArgument("empty graph".into()))?;
            (g.without_vertex(u), g.neighbor_set(u))
        }
    };
    let lists: ListAssignment = graph
        .vertices()
        .map(|v| {
            let size = if boundary.contains(&v) { 3 } else { 5 };
            (v, random_list(&mut rng, palette, size))
        })
        .collect();
    Ok(Instance::new(graph, VertexSet::new(), boundary, lists))
}

/// Random 5-lists from `1..=palette` for every vertex.
pub fn random_lists(g: &Graph, palette: Color, seed: u64) -> Result<ListAssignment> {
    Ok(random_instance(g, BoundaryMode::Empty, palette, seed)?.lists)
}

/// Uniform random graph `G(n, p)` on `0..n`, for tests and fuzzing.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut g = Graph::empty(0..n as Vertex);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
