//! Exhaustive K5-minor search for small graphs, the plus-construction, and
//! boundary checks for the class of K5-minor-free graphs.
//!
//! These are verification tools. They are exponential and guarded by a
//! vertex limit; the coloring algorithm itself never needs them.

use std::collections::HashSet;

use crate::connectivity::{components, is_connected};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rooted::{RootedK3Witness, Roots};

pub const DEFAULT_ORACLE_LIMIT: usize = 14;

// Bitmask representation caps the search at 63 vertices regardless of the
// configured limit.
const HARD_LIMIT: usize = 63;

/// Five disjoint connected vertex sets, pairwise joined by an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchModel {
    pub sets: [VertexSet; 5],
}

impl BranchModel {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let all: Vec<Vertex> = self.sets.iter().flatten().copied().collect();
        let distinct: VertexSet = all.iter().copied().collect();
        if distinct.len() != all.len() || !all.iter().all(|&v| g.contains(v)) {
            return false;
        }
        if !self
            .sets
            .iter()
            .all(|s| !s.is_empty() && is_connected(&g.induced(s)))
        {
            return false;
        }
        (0..5).all(|i| {
            (i + 1..5).all(|j| {
                self.sets[i]
                    .iter()
                    .any(|&u| g.neighbors(u).any(|w| self.sets[j].contains(&w)))
            })
        })
    }
}

/// `G` plus a new vertex adjacent to exactly the vertices of `b`. The new
/// vertex gets id `max + 1` (or 0 for the empty graph).
pub fn plus(g: &Graph, b: &VertexSet) -> Result<Graph> {
    g.require_all(b)?;
    let alpha = apex_id(g);
    let mut h = g.clone();
    h.add_vertex(alpha);
    for &v in b {
        h.add_edge(alpha, v)?;
    }
    Ok(h)
}

/// Id [`plus`] assigns to the new vertex.
pub fn apex_id(g: &Graph) -> Vertex {
    g.max_vertex().map_or(0, |m| m + 1)
}

/// Size-guarded K5-minor oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorOracle {
    pub max_order: usize,
}

impl Default for MinorOracle {
    fn default() -> Self {
        MinorOracle {
            max_order: DEFAULT_ORACLE_LIMIT,
        }
    }
}

impl MinorOracle {
    pub fn new(max_order: usize) -> Self {
        MinorOracle { max_order }
    }

    fn guard(&self, g: &Graph) -> Result<()> {
        let limit = self.max_order.min(HARD_LIMIT);
        if g.order() > limit {
            return Err(Error::OracleScaleExceeded {
                order: g.order(),
                limit,
            });
        }
        Ok(())
    }

    pub fn has_k5_minor(&self, g: &Graph) -> Result<bool> {
        Ok(self.find_k5_model(g)?.is_some())
    }

    pub fn find_k5_model(&self, g: &Graph) -> Result<Option<BranchModel>> {
        self.guard(g)?;
        for comp in components(g) {
            if comp.len() < 5 {
                continue;
            }
            let h = g.induced(&comp);
            if h.size() < 10 {
                continue;
            }
            if let Some(model) = ContractionSearch::new(&h).run() {
                return Ok(Some(model));
            }
        }
        Ok(None)
    }

    /// Whether `b` is a boundary of `g`: `plus(g, b)` has no K5 minor. The
    /// size guard applies to the plus graph.
    pub fn is_boundary(&self, g: &Graph, b: &VertexSet) -> Result<bool> {
        Ok(!self.has_k5_minor(&plus(g, b)?)?)
    }
}

pub fn has_k5_minor(g: &Graph) -> Result<bool> {
    MinorOracle::default().has_k5_minor(g)
}

pub fn find_k5_model(g: &Graph) -> Result<Option<BranchModel>> {
    MinorOracle::default().find_k5_model(g)
}

pub fn is_boundary(g: &Graph, b: &VertexSet) -> Result<bool> {
    MinorOracle::default().is_boundary(g, b)
}

/// Search for a partition of a connected graph into five connected, pairwise
/// adjacent parts. In a connected graph any K5 model can be grown until it
/// covers every vertex, so it suffices to repeatedly either merge a part
/// into a neighboring part or freeze it as a final branch set.
struct ContractionSearch {
    ids: Vec<Vertex>,
    adj: Vec<u64>,
    dead: HashSet<Vec<u64>>,
}

#[derive(Clone, Copy, Debug)]
struct Part {
    members: u64,
    frozen: bool,
}

impl ContractionSearch {
    fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index = |v: Vertex| ids.binary_search(&v).unwrap();
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).fold(0u64, |m, u| m | 1 << index(u)))
            .collect();
        ContractionSearch {
            ids,
            adj,
            dead: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<BranchModel> {
        let parts = (0..self.ids.len())
            .map(|i| Part {
                members: 1 << i,
                frozen: false,
            })
            .collect();
        let found = self.search(parts)?;
        let sets = found.map(|m| {
            (0..self.ids.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| self.ids[i])
                .collect()
        });
        Some(BranchModel { sets })
    }

    // Quotient adjacency: bit j of entry i is set when parts i and j touch.
    fn quotient(&self, parts: &[Part]) -> Vec<u64> {
        let reach: Vec<u64> = parts
            .iter()
            .map(|p| {
                let mut m = 0;
                let mut rest = p.members;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    m |= self.adj[i];
                    rest &= rest - 1;
                }
                m & !p.members
            })
            .collect();
        reach
            .iter()
            .map(|&r| {
                parts
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| r & q.members != 0)
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }

    fn search(&mut self, parts: Vec<Part>) -> Option<[u64; 5]> {
        let k = parts.len();
        if k < 5 {
            return None;
        }
        let q = self.quotient(&parts);
        let deg = |i: usize| q[i].count_ones() as usize;
        let edges: usize = (0..k).map(deg).sum::<usize>() / 2;
        if edges < 10 {
            return None;
        }
        if k == 5 {
            return (edges == 10).then(|| [0, 1, 2, 3, 4].map(|i| parts[i].members));
        }

        // With more than five parts left, five frozen ones can never absorb
        // the rest.
        let frozen: Vec<usize> = (0..k).filter(|&i| parts[i].frozen).collect();
        if frozen.len() >= 5 || frozen.iter().any(|&i| deg(i) < 4) {
            return None;
        }
        // Frozen parts never change, so a missing edge between two of them is
        // permanent.
        for (a, &i) in frozen.iter().enumerate() {
            if frozen[a + 1..].iter().any(|&j| q[i] >> j & 1 == 0) {
                return None;
            }
        }

        // Parts are kept sorted by lowest member, which is then a canonical
        // label for the part.
        let key: Vec<u64> = (0..k)
            .map(|i| {
                let nbr_labels = (0..k).filter(|&j| q[i] >> j & 1 == 1).fold(0u64, |m, j| {
                    m | parts[j].members & parts[j].members.wrapping_neg()
                });
                nbr_labels.rotate_left(1) | parts[i].frozen as u64
            })
            .chain(parts.iter().map(|p| p.members.trailing_zeros() as u64))
            .collect();
        if self.dead.contains(&key) {
            return None;
        }

        let pick = (0..k)
            .filter(|&i| !parts[i].frozen)
            .min_by_key(|&i| (deg(i), i));
        let Some(p) = pick else {
            self.dead.insert(key);
            return None;
        };
        let open_nbrs: Vec<usize> = (0..k)
            .filter(|&j| q[p] >> j & 1 == 1 && !parts[j].frozen)
            .collect();

        // Merging a degree-2 part into either neighbor yields the same
        // quotient graph, so one branch covers both.
        let merge_targets: &[usize] = if deg(p) <= 2 && open_nbrs.len() == 2 {
            &open_nbrs[..1]
        } else {
            &open_nbrs
        };
        for &j in merge_targets {
            let mut next = parts.clone();
            let (lo, hi) = if p < j { (p, j) } else { (j, p) };
            next[lo].members |= next[hi].members;
            next.remove(hi);
            if let Some(found) = self.search(next) {
                return Some(found);
            }
        }
        if deg(p) >= 4 {
            let mut next = parts;
            next[p].frozen = true;
            if let Some(found) = self.search(next) {
                return Some(found);
            }
        }
        self.dead.insert(key);
        None
    }
}

/// Rooted K3-minor by exhaustive assignment of the non-root vertices to one
/// of the three branch sets or to none. Independent of the good-vertex
/// characterization; intended for small graphs only.
pub fn brute_force_rooted_k3(g: &Graph, roots: Roots) -> Option<RootedK3Witness> {
    let others: Vec<Vertex> = g.vertices().filter(|v| !roots.contains(v)).collect();
    let total = 4usize.checked_pow(others.len() as u32)?;
    for code in 0..total {
        let mut sets = roots.map(|r| VertexSet::from([r]));
        let mut c = code;
        for &v in &others {
            let label = c % 4;
            c /= 4;
            if label < 3 {
                sets[label].insert(v);
            }
        }
        let w = RootedK3Witness { roots, sets };
        if w.is_valid_for(g) {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(edges).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges((0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn small_cliques() {
        let m = find_k5_model(&Graph::complete(5)).unwrap().unwrap();
        assert!(m.is_valid_for(&Graph::complete(5)));
        assert!(!has_k5_minor(&Graph::complete(4)).unwrap());
        assert!(has_k5_minor(&Graph::complete(7)).unwrap());
    }

    #[test]
    fn petersen_has_k5_minor() {
        let g = petersen();
        let m = find_k5_model(&g).unwrap().unwrap();
        assert!(m.is_valid_for(&g));
        // contracting the spokes gives K5 directly
        let mut h = g.clone();
        for i in 0..5 {
            h = h.contract_edge(i, i + 5).unwrap();
        }
        assert_eq!(h, Graph::complete(5));
    }

    #[test]
    fn k33_and_octahedron_are_free() {
        assert!(!has_k5_minor(&k33()).unwrap());
        let octahedron = Graph::from_edges((0..6).flat_map(|a| {
            (a + 1..6)
                .filter(move |&b| b != a + 3 || a >= 3)
                .map(move |b| (a, b))
        }))
        .unwrap();
        assert_eq!(octahedron.size(), 12);
        assert!(!has_k5_minor(&octahedron).unwrap());
    }

    #[test]
    fn k5_minus_edge_is_free() {
        let mut g = Graph::complete(5);
        g.remove_vertex(4);
        g.add_vertex(4);
        for v in 0..3 {
            g.add_edge(v, 4).unwrap();
        }
        assert!(!has_k5_minor(&g).unwrap());
    }

    #[test]
    fn plus_examples() {
        let single = Graph::empty([3]);
        let h = plus(&single, &VertexSet::from([3])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(3, 4)]);

        let c4 = Graph::cycle(4);
        let wheel = plus(&c4, &c4.vertex_set()).unwrap();
        assert_eq!(wheel.size(), 8);
        assert_eq!(wheel.degree(4), 4);

        let h = plus(&c4, &VertexSet::new()).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.degree(4), 0);

        assert_eq!(
            plus(&c4, &VertexSet::from([9])),
            Err(Error::MissingVertex(9))
        );
        assert_eq!(
            plus(&Graph::new(), &VertexSet::new()).unwrap(),
            Graph::empty([0])
        );
    }

    #[test]
    fn boundary_examples() {
        let k4 = Graph::complete(4);
        assert!(!is_boundary(&k4, &k4.vertex_set()).unwrap());
        assert!(is_boundary(&k4, &VertexSet::new()).unwrap());
        let c4 = Graph::cycle(4);
        assert!(is_boundary(&c4, &c4.vertex_set()).unwrap());
    }

    #[test]
    fn size_guard() {
        let g = Graph::cycle(15);
        assert_eq!(
            has_k5_minor(&g),
            Err(Error::OracleScaleExceeded {
                order: 15,
                limit: 14
            })
        );
        assert_eq!(MinorOracle::new(20).has_k5_minor(&g), Ok(false));
    }

    #[test]
    fn rooted_brute_force_examples() {
        assert!(brute_force_rooted_k3(&Graph::complete(3), [0, 1, 2]).is_some());
        assert!(brute_force_rooted_k3(&Graph::path(3), [0, 1, 2]).is_none());
        let w = brute_force_rooted_k3(&Graph::cycle(4), [0, 1, 2]).unwrap();
        assert!(w.is_valid_for(&Graph::cycle(4)));
    }
}
