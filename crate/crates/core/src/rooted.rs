//! K3-minors rooted at three prescribed vertices, and contractible edges of
//! 2-connected graphs.
//!
//! A vertex `v` is *good* for roots `x, y, z` when at least two of the roots
//! other than `v` share a component of `G - v`. A rooted K3-minor exists iff
//! every vertex is good; [`extract_rooted_k3`] builds the witness by the
//! induction that proves this, contracting an edge at each step and lifting
//! the branch sets back.

use crate::connectivity::{articulation_vertices, components, is_connected, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub type Roots = [Vertex; 3];

/// Three disjoint, connected, pairwise adjacent vertex sets, the i-th
/// containing the i-th root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedK3Witness {
    pub roots: Roots,
    pub sets: [VertexSet; 3],
}

impl RootedK3Witness {
    /// Checks every witness invariant against the host graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let [x, y, z] = &self.sets;
        let disjoint = x.is_disjoint(y) && y.is_disjoint(z) && x.is_disjoint(z);
        let rooted = self
            .sets
            .iter()
            .zip(self.roots)
            .all(|(s, r)| s.contains(&r));
        let inside = self.sets.iter().flatten().all(|&v| g.contains(v));
        let connected = self
            .sets
            .iter()
            .all(|s| !s.is_empty() && is_connected(&g.induced(s)));
        let touching = |a: &VertexSet, b: &VertexSet| {
            a.iter().any(|&u| g.neighbors(u).any(|w| b.contains(&w)))
        };
        disjoint
            && rooted
            && inside
            && connected
            && touching(x, y)
            && touching(y, z)
            && touching(x, z)
    }
}

fn check_roots(g: &Graph, roots: Roots) -> Result<()> {
    let [x, y, z] = roots;
    if x == y || y == z || x == z || !roots.iter().all(|&r| g.contains(r)) {
        return Err(Error::BadRoots(roots));
    }
    Ok(())
}

pub fn is_good(g: &Graph, v: Vertex, roots: Roots) -> Result<bool> {
    check_roots(g, roots)?;
    g.require(v)?;
    Ok(good_unchecked(g, v, roots))
}

fn good_unchecked(g: &Graph, v: Vertex, roots: Roots) -> bool {
    let comps = components(&g.without_vertex(v));
    let mut owner: Vec<usize> = roots
        .iter()
        .filter(|&&r| r != v)
        .map(|r| comps.iter().position(|c| c.contains(r)).unwrap())
        .collect();
    owner.sort_unstable();
    owner.windows(2).any(|w| w[0] == w[1])
}

/// Smallest vertex that is bad for `roots`, if any.
pub fn find_bad_vertex(g: &Graph, roots: Roots) -> Result<Option<Vertex>> {
    check_roots(g, roots)?;
    Ok(g.vertices().find(|&v| !good_unchecked(g, v, roots)))
}

pub fn has_rooted_k3(g: &Graph, roots: Roots) -> Result<bool> {
    Ok(find_bad_vertex(g, roots)?.is_none())
}

/// Builds a K3-minor rooted at `roots`, or `None` if some vertex is bad.
pub fn extract_rooted_k3(g: &Graph, roots: Roots) -> Result<Option<RootedK3Witness>> {
    if find_bad_vertex(g, roots)?.is_some() {
        return Ok(None);
    }
    let sets = build(g, roots)?;
    Ok(Some(RootedK3Witness { roots, sets }))
}

// Every vertex of `g` is good for `roots`.
fn build(g: &Graph, roots: Roots) -> Result<[VertexSet; 3]> {
    if g.order() == 3 {
        if g.size() != 3 {
            return Err(Error::contradiction(
                "three-vertex graph with all vertices good is not a triangle",
            ));
        }
        return Ok(roots.map(|r| VertexSet::from([r])));
    }

    let comps = components(g);
    if comps.len() > 1 {
        let home = comps
            .iter()
            .find(|c| roots.iter().all(|r| c.contains(r)))
            .ok_or_else(|| Error::contradiction("roots split across components"))?;
        return build(&g.induced(home), roots);
    }

    let (v, w) = match articulation_vertices(g).into_iter().next() {
        Some(v) => (v, cut_vertex_partner(g, v, roots)?),
        None => {
            let v = g
                .vertices()
                .find(|v| !roots.contains(v))
                .expect("at least four vertices");
            find_contractible_edge(g, v)?
        }
    };
    let merged = v.min(w);
    let contracted = g.contract_edge(v, w)?;
    let inner_roots = roots.map(|r| if r == v || r == w { merged } else { r });
    let mut sets = build(&contracted, inner_roots)?;
    for s in sets.iter_mut() {
        if s.contains(&merged) {
            s.insert(v);
            s.insert(w);
        }
    }
    Ok(sets)
}

// Neighbor of the cut vertex `v` inside a component of G - v that holds none
// of the (at least two) roots sharing a component.
fn cut_vertex_partner(g: &Graph, v: Vertex, roots: Roots) -> Result<Vertex> {
    let comps = components(&g.without_vertex(v));
    let shared = comps
        .iter()
        .position(|c| roots.iter().filter(|&&r| r != v && c.contains(&r)).count() >= 2)
        .ok_or_else(|| Error::contradiction(format!("cut vertex {v} is bad")))?;
    comps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != shared)
        .find_map(|(_, c)| g.neighbors(v).find(|u| c.contains(u)))
        .ok_or_else(|| Error::contradiction(format!("{v} is not a cut vertex")))
}

/// An edge `vw` such that `G/vw` is still 2-connected; tries neighbors in
/// ascending order. A triangle contracts to `K2`, which is accepted.
pub fn find_contractible_edge(g: &Graph, v: Vertex) -> Result<(Vertex, Vertex)> {
    g.require(v)?;
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    for w in g.neighbors(v) {
        let h = g.contract_edge(v, w)?;
        if is_two_connected(&h) || (h.order() == 2 && h.size() == 1) {
            return Ok((v, w));
        }
    }
    Err(Error::contradiction(format!(
        "no contractible edge at {v} in a 2-connected graph"
    )))
}
