//! Property checks runnable from the command line: exhaustive over all
//! labeled graphs up to a given order, and randomized over generated
//! K5-minor-free instances.

use std::fmt;

use k5list::generate::{apollonian, clique_sum, random_instance, rng, shuffle_ids, BoundaryMode};
use k5list::minor::brute_force_rooted_k3;
use k5list::{
    articulation_vertices, brute_force_list_color, color_with, components, extract_rooted_k3,
    find_contractible_edge, five_choose, has_rooted_k3, is_connected, is_two_connected,
    verify_coloring, ColorOptions, Graph, Vertex, VertexSet,
};
use rand::Rng;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.failed == 0 { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {}: {} passed, {} failed",
            self.name, self.passed, self.failed
        )
    }
}

fn suite(name: &'static str, outcomes: impl Iterator<Item = bool>) -> SuiteResult {
    let (mut passed, mut failed) = (0, 0);
    for ok in outcomes {
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    SuiteResult {
        name,
        passed,
        failed,
    }
}

/// Every labeled graph on `0..n`.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let chosen = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
        Graph::from_parts(0..n as Vertex, chosen.map(|(_, &e)| e)).unwrap()
    })
}

fn upto(max_n: usize, from: usize) -> impl Iterator<Item = Graph> {
    (from..=max_n).flat_map(all_graphs)
}

fn triples(g: &Graph) -> Vec<[Vertex; 3]> {
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

fn small_minor_free(r: &mut impl Rng, max_n: usize) -> Graph {
    let g = if r.gen_bool(0.5) || max_n < 7 {
        apollonian(r.gen_range(3..=max_n), r.gen()).unwrap()
    } else {
        let a = apollonian(r.gen_range(3..=max_n / 2 + 1), r.gen()).unwrap();
        let b = apollonian(r.gen_range(3..=max_n / 2 + 1), r.gen()).unwrap();
        clique_sum(&a, &b, r.gen_range(1..=3)).unwrap()
    };
    shuffle_ids(&g, r.gen())
}

pub fn run(max_n: usize, samples: usize, seed: u64) -> Vec<SuiteResult> {
    let mut out = Vec::new();

    out.push(suite(
        "articulation vertices",
        upto(max_n, 1).map(|g| {
            let base = components(&g).len();
            let brute: VertexSet = g
                .vertices()
                .filter(|&v| components(&g.without_vertex(v)).len() > base)
                .collect();
            articulation_vertices(&g) == brute
        }),
    ));

    out.push(suite(
        "rooted K3 decision and witness",
        upto(max_n, 3).flat_map(|g| {
            triples(&g)
                .into_iter()
                .map(|t| {
                    let yes = has_rooted_k3(&g, t).unwrap();
                    let witness = extract_rooted_k3(&g, t).unwrap();
                    yes == brute_force_rooted_k3(&g, t).is_some()
                        && witness.map_or(!yes, |w| yes && w.is_valid_for(&g))
                })
                .collect::<Vec<_>>()
        }),
    ));

    out.push(suite(
        "all rooted K3 iff 2-connected",
        upto(max_n, 3).filter(is_connected).map(|g| {
            let all = triples(&g)
                .into_iter()
                .all(|t| has_rooted_k3(&g, t).unwrap());
            all == is_two_connected(&g)
        }),
    ));

    out.push(suite(
        "contractible edges",
        upto(max_n, 3).filter(is_two_connected).flat_map(|g| {
            g.vertices()
                .map(|v| match find_contractible_edge(&g, v) {
                    Ok((a, b)) => {
                        let h = g.contract_edge(a, b).unwrap();
                        is_two_connected(&h) || (g.order() == 3 && h.size() == 1)
                    }
                    Err(_) => false,
                })
                .collect::<Vec<_>>()
        }),
    ));

    let mut r = rng(seed);
    out.push(suite(
        "five-choosability",
        (0..samples).map(|_| {
            let g = small_minor_free(&mut r, 12);
            let inst = random_instance(&g, BoundaryMode::Empty, 8, r.gen()).unwrap();
            five_choose(&g, &inst.lists).is_ok_and(|c| verify_coloring(&g, &inst.lists, &c))
        }),
    ));

    let deep = ColorOptions {
        deep_validate: true,
        ..ColorOptions::default()
    };
    out.push(suite(
        "boundary instances",
        (0..samples).map(|_| {
            let g = small_minor_free(&mut r, 12);
            let inst = random_instance(&g, BoundaryMode::VertexNeighborhood, 8, r.gen()).unwrap();
            color_with(&inst, &deep).is_ok_and(|(c, t)| {
                verify_coloring(&inst.graph, &inst.lists, &c) && t.measure_always_decreases()
            })
        }),
    ));

    out.push(suite(
        "brute-force agreement",
        (0..samples).map(|_| {
            let g = small_minor_free(&mut r, 9);
            let mode = if r.gen_bool(0.5) {
                BoundaryMode::Empty
            } else {
                BoundaryMode::VertexNeighborhood
            };
            let inst = random_instance(&g, mode, r.gen_range(5..=8), r.gen()).unwrap();
            let ours = color_with(&inst, &ColorOptions::default())
                .is_ok_and(|(c, _)| verify_coloring(&inst.graph, &inst.lists, &c));
            let theirs = brute_force_list_color(&inst.graph, &inst.lists)
                .is_ok_and(|c| c.is_some_and(|c| verify_coloring(&inst.graph, &inst.lists, &c)));
            ours && theirs
        }),
    ));

    out
}
