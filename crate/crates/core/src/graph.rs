//! Simple undirected graphs with stable vertex identifiers.
//!
//! Vertex ids are never renumbered: deleting a vertex leaves a gap, and
//! contracting an edge keeps the smaller endpoint's id. Colorings and minor
//! witnesses computed on derived graphs therefore lift back to the parent
//! graph without translation tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on `vertices` with no edges.
    pub fn empty<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Graph {
            adj: vertices
                .into_iter()
                .map(|v| (v, VertexSet::new()))
                .collect(),
        }
    }

    /// Builds a graph from explicit vertex and edge lists. Duplicate edges are
    /// merged; loops and edges to unknown vertices are rejected.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(vertices);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; the vertex set is the set of endpoints.
    pub fn from_edges<E>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_vertex(u);
            g.add_vertex(v);
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: u32) -> Self {
        let mut g = Graph::empty(0..n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: u32) -> Self {
        let mut g = Graph::empty(0..n);
        for u in 0..n {
            g.insert_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: u32) -> Self {
        let mut g = Graph::empty(0..n);
        for u in 1..n {
            g.insert_edge(u - 1, u);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, VertexSet::new());
        true
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.require(u)?;
        self.require(v)?;
        Ok(self.insert_edge(u, v))
    }

    // Both endpoints must already exist and differ.
    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        debug_assert!(u != v);
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        fresh
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for u in nbrs {
                    self.adj.get_mut(&u).unwrap().remove(&v);
                }
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub(crate) fn require(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::MissingVertex(v))
        }
    }

    pub(crate) fn require_all<'a, I>(&self, vs: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        vs.into_iter().try_for_each(|&v| self.require(v))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Neighbors of `v`; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        self.adj.get(&v).cloned().unwrap_or_default()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |n| n.len())
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Number of unordered non-adjacent vertex pairs.
    pub fn non_edges(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1) / 2 - self.size()
    }

    pub fn is_clique<'a, I>(&self, vs: I) -> bool
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let vs: Vec<Vertex> = vs.into_iter().copied().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with the given vertices deleted.
    pub fn without<'a, I>(&self, removed: I) -> Graph
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut g = self.clone();
        for &v in removed {
            g.remove_vertex(v);
        }
        g
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        self.without(&[v])
    }

    /// Subgraph induced by `keep` (ids not in the graph are ignored).
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        Graph {
            adj: self
                .adj
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
                .collect(),
        }
    }

    /// `G/uv`: merges `u` and `v` into the vertex `min(u, v)`; loops and
    /// parallel edges disappear.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let moved = g.adj.remove(&gone).unwrap();
        for w in moved {
            g.adj.get_mut(&w).unwrap().remove(&gone);
            if w != keep {
                g.insert_edge(keep, w);
            }
        }
        Ok(g)
    }

    /// Union of two graphs; vertices with equal ids are identified.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for (&v, nbrs) in &other.adj {
            g.adj.entry(v).or_default().extend(nbrs.iter().copied());
        }
        g
    }

    /// Same graph with every id passed through `f`, which must be injective.
    pub fn relabel(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Graph {
        let map: BTreeMap<Vertex, Vertex> = self.vertices().map(|v| (v, f(v))).collect();
        Graph {
            adj: self
                .adj
                .iter()
                .map(|(v, nbrs)| (map[v], nbrs.iter().map(|u| map[u]).collect()))
                .collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ V: {:?}, E: ", self.vertex_set())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, " }}")
    }
}
