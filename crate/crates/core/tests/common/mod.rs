#![allow(dead_code)]

use k5list::{components, Graph, Vertex, VertexSet};

/// Every labeled graph on `0..n`, one per subset of the possible edges.
pub fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_parts(0..n, edges).unwrap()
    })
}

pub fn triples(g: &Graph) -> Vec<[Vertex; 3]> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                out.push([vs[i], vs[j], vs[k]]);
            }
        }
    }
    out
}

pub fn component_count(g: &Graph) -> usize {
    components(g).len()
}

/// Whether deleting `cut` leaves two vertices of `targets \ cut` in
/// different components, by flood fill from scratch.
pub fn splits(g: &Graph, targets: &VertexSet, cut: &VertexSet) -> bool {
    let rest = g.without(cut);
    let left: Vec<Vertex> = targets.difference(cut).copied().collect();
    let Some(&start) = left.first() else {
        return false;
    };
    let mut seen = VertexSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in rest.neighbors(v) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    left.iter().any(|t| !seen.contains(t))
}

/// K5 model by enumerating label strings over {0..4, unused}, with branch
/// labels introduced in increasing order to skip relabelings.
pub fn naive_k5_minor(g: &Graph) -> bool {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut labels = vec![5u8; vs.len()];
    fn rec(g: &Graph, vs: &[Vertex], labels: &mut Vec<u8>, i: usize, used: u8) -> bool {
        if i == vs.len() {
            return used == 5 && is_model(g, vs, labels);
        }
        if 5 - used as usize > vs.len() - i {
            return false;
        }
        for l in 0..=used.min(4) {
            labels[i] = l;
            let next = if l == used { used + 1 } else { used };
            if rec(g, vs, labels, i + 1, next) {
                return true;
            }
        }
        labels[i] = 5;
        rec(g, vs, labels, i + 1, used)
    }
    rec(g, &vs, &mut labels, 0, 0)
}

fn is_model(g: &Graph, vs: &[Vertex], labels: &[u8]) -> bool {
    let sets: Vec<VertexSet> = (0..5u8)
        .map(|l| {
            vs.iter()
                .zip(labels)
                .filter(|(_, &x)| x == l)
                .map(|(&v, _)| v)
                .collect()
        })
        .collect();
    if sets.iter().any(|s| component_count(&g.induced(s)) != 1) {
        return false;
    }
    (0..5).all(|i| {
        (i + 1..5).all(|j| {
            sets[i]
                .iter()
                .any(|&u| g.neighbors(u).any(|w| sets[j].contains(&w)))
        })
    })
}
