//! Instances `(G, A, B, L)` of the boundary coloring problem and their
//! validation.
//!
//! `A` is a precolored clique, `B ⊇ A` is a boundary (adding one vertex
//! adjacent to all of `B` keeps the graph K5-minor-free), vertices of `A`
//! carry distinct singleton lists, the rest of `B` has lists of at least
//! three colors and every other vertex at least five.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::minor::MinorOracle;

pub type Color = u32;
pub type ColorSet = BTreeSet<Color>;
pub type ListAssignment = BTreeMap<Vertex, ColorSet>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub precolored: VertexSet,
    pub boundary: VertexSet,
    pub lists: ListAssignment,
}

impl Instance {
    pub fn new(
        graph: Graph,
        precolored: VertexSet,
        boundary: VertexSet,
        lists: ListAssignment,
    ) -> Self {
        Instance {
            graph,
            precolored,
            boundary,
            lists,
        }
    }

    /// Instance with empty `A` and `B`.
    pub fn unbounded(graph: Graph, lists: ListAssignment) -> Self {
        Instance::new(graph, VertexSet::new(), VertexSet::new(), lists)
    }

    pub fn list(&self, v: Vertex) -> &ColorSet {
        static EMPTY: ColorSet = ColorSet::new();
        self.lists.get(&v).unwrap_or(&EMPTY)
    }

    /// Cheap structural checks: containments, the clique, list sizes.
    pub fn check_shallow(&self) -> Report {
        let g = &self.graph;
        let mut out = Vec::new();
        for &v in &self.precolored {
            if !self.boundary.contains(&v) {
                out.push(Violation::PrecoloredOutsideBoundary(v));
            }
        }
        for &v in &self.boundary {
            if !g.contains(v) {
                out.push(Violation::BoundaryOutsideGraph(v));
            }
        }
        if !g.is_clique(&self.precolored) {
            out.push(Violation::PrecoloredNotClique);
        }
        for &v in self.lists.keys() {
            if !g.contains(v) {
                out.push(Violation::ListForUnknownVertex(v));
            }
        }
        for v in g.vertices() {
            let size = match self.lists.get(&v) {
                Some(l) => l.len(),
                None => {
                    out.push(Violation::MissingList(v));
                    continue;
                }
            };
            let (needed, exact) = if self.precolored.contains(&v) {
                (1, true)
            } else if self.boundary.contains(&v) {
                (3, false)
            } else {
                (5, false)
            };
            if size < needed || (exact && size != needed) {
                out.push(Violation::ListSize {
                    vertex: v,
                    size,
                    needed,
                    exact,
                });
            }
        }
        let mut seen: BTreeMap<&ColorSet, Vertex> = BTreeMap::new();
        for &v in &self.precolored {
            if let Some(l) = self.lists.get(&v).filter(|l| l.len() == 1) {
                if let Some(&u) = seen.get(l) {
                    out.push(Violation::PrecoloredClash(u, v));
                } else {
                    seen.insert(l, v);
                }
            }
        }
        Report { violations: out }
    }
}

/// Validates an instance. With `deep` the graph must be K5-minor-free and
/// `B` a boundary, checked by exhaustive search within the oracle's size
/// guard.
pub fn check_instance(inst: &Instance, deep: bool, oracle: &MinorOracle) -> Result<Report> {
    let mut report = inst.check_shallow();
    if deep {
        if oracle.has_k5_minor(&inst.graph)? {
            report.violations.push(Violation::HasK5Minor);
        } else if inst.boundary.iter().all(|&v| inst.graph.contains(v))
            && !oracle.is_boundary(&inst.graph, &inst.boundary)?
        {
            report.violations.push(Violation::NotABoundary);
        }
    }
    Ok(report)
}

/// Boundary of `G - v` induced by a boundary `b` of `G`: drop `v`, add its
/// neighbors.
pub fn boundary_after_delete(b: &VertexSet, v: Vertex, neighbors: &VertexSet) -> Result<VertexSet> {
    if !b.contains(&v) {
        return Err(Error::InvalidArgument(format!(
            "{v} is not in the boundary"
        )));
    }
    let mut out = b.clone();
    out.remove(&v);
    out.extend(neighbors.iter().copied().filter(|&u| u != v));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    PrecoloredOutsideBoundary(Vertex),
    BoundaryOutsideGraph(Vertex),
    PrecoloredNotClique,
    PrecoloredClash(Vertex, Vertex),
    MissingList(Vertex),
    ListForUnknownVertex(Vertex),
    ListSize {
        vertex: Vertex,
        size: usize,
        needed: usize,
        exact: bool,
    },
    HasK5Minor,
    NotABoundary,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PrecoloredOutsideBoundary(v) => write!(f, "A ⊆ B: {v} is in A but not in B"),
            Violation::BoundaryOutsideGraph(v) => write!(f, "B ⊆ V(G): {v} is not a vertex"),
            Violation::PrecoloredNotClique => write!(f, "A is a clique: it is not"),
            Violation::PrecoloredClash(u, v) => {
                write!(f, "L(x) ≠ L(y) on A: {u} and {v} share a color")
            }
            Violation::MissingList(v) => write!(f, "vertex {v} has no list"),
            Violation::ListForUnknownVertex(v) => write!(f, "list given for unknown vertex {v}"),
            Violation::ListSize {
                vertex,
                size,
                needed,
                exact: true,
            } => write!(f, "|L(x)| = {needed}: vertex {vertex} has {size}"),
            Violation::ListSize {
                vertex,
                size,
                needed,
                ..
            } => write!(f, "|L(x)| ≥ {needed}: vertex {vertex} has {size}"),
            Violation::HasK5Minor => write!(f, "G has a K5 minor"),
            Violation::NotABoundary => write!(f, "B is not a boundary of G"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(entries: &[(Vertex, &[Color])]) -> ListAssignment {
        entries
            .iter()
            .map(|(v, l)| (*v, l.iter().copied().collect()))
            .collect()
    }

    #[test]
    fn triangle_instance_is_valid() {
        let inst = Instance::new(
            Graph::complete(3),
            VertexSet::from([0]),
            VertexSet::from([0]),
            lists(&[(0, &[1]), (1, &[1, 2, 3, 4, 5]), (2, &[1, 2, 3, 4, 5])]),
        );
        assert!(inst.check_shallow().is_valid());
        assert!(check_instance(&inst, true, &MinorOracle::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn non_clique_precolored_set() {
        let inst = Instance::new(
            Graph::path(3),
            VertexSet::from([0, 2]),
            VertexSet::from([0, 2]),
            lists(&[(0, &[1]), (1, &[1, 2, 3, 4, 5]), (2, &[2])]),
        );
        let r = inst.check_shallow();
        assert_eq!(r.violations, vec![Violation::PrecoloredNotClique]);
        assert!(r.to_string().contains("A is a clique"));
    }

    #[test]
    fn short_boundary_list() {
        let inst = Instance::new(
            Graph::complete(2),
            VertexSet::new(),
            VertexSet::from([0]),
            lists(&[(0, &[1, 2]), (1, &[1, 2, 3, 4, 5])]),
        );
        let r = inst.check_shallow();
        assert_eq!(r.violations.len(), 1);
        assert!(r.to_string().contains("|L(x)| ≥ 3"));
    }

    #[test]
    fn clashing_precolors() {
        let inst = Instance::new(
            Graph::complete(2),
            VertexSet::from([0, 1]),
            VertexSet::from([0, 1]),
            lists(&[(0, &[4]), (1, &[4])]),
        );
        assert_eq!(
            inst.check_shallow().violations,
            vec![Violation::PrecoloredClash(0, 1)]
        );
    }

    #[test]
    fn deep_flags_bad_boundary() {
        let k4 = Graph::complete(4);
        let all: ListAssignment = (0..4).map(|v| (v, (1..=5).collect())).collect();
        let inst = Instance::new(k4.clone(), VertexSet::new(), k4.vertex_set(), all);
        assert!(inst.check_shallow().is_valid());
        let r = check_instance(&inst, true, &MinorOracle::default()).unwrap();
        assert_eq!(r.violations, vec![Violation::NotABoundary]);
    }

    #[test]
    fn delete_updates_boundary() {
        let b = VertexSet::from([0]);
        assert_eq!(
            boundary_after_delete(&b, 0, &VertexSet::from([1, 2])).unwrap(),
            VertexSet::from([1, 2])
        );
        let b = VertexSet::from([0, 1]);
        assert_eq!(
            boundary_after_delete(&b, 0, &VertexSet::from([1, 3])).unwrap(),
            VertexSet::from([1, 3])
        );
        let b = VertexSet::from([0, 1, 2]);
        assert_eq!(
            boundary_after_delete(&b, 0, &VertexSet::from([1, 2])).unwrap(),
            VertexSet::from([1, 2])
        );
        assert!(boundary_after_delete(&b, 5, &VertexSet::new()).is_err());
    }
}
