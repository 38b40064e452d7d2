//! Components, cut vertices and small vertex cuts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Connected components, ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = VertexSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if comp.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.extend(comp.iter().copied());
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Vertices whose deletion increases the number of components
/// (lowpoint DFS).
pub fn articulation_vertices(g: &Graph) -> VertexSet {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: BTreeMap<Vertex, usize>,
        low: BTreeMap<Vertex, usize>,
        cut: VertexSet,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
            let t = self.disc.len();
            self.disc.insert(v, t);
            self.low.insert(v, t);
            let mut children = 0;
            for u in self.g.neighbors(v) {
                if Some(u) == parent {
                    continue;
                }
                if let Some(&du) = self.disc.get(&u) {
                    let lv = self.low[&v].min(du);
                    self.low.insert(v, lv);
                    continue;
                }
                children += 1;
                self.visit(u, Some(v));
                let lu = self.low[&u];
                let lv = self.low[&v].min(lu);
                self.low.insert(v, lv);
                if parent.is_some() && lu >= self.disc[&v] {
                    self.cut.insert(v);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut.insert(v);
            }
        }
    }

    let mut dfs = Dfs {
        g,
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        cut: VertexSet::new(),
    };
    for v in g.vertices() {
        if !dfs.disc.contains_key(&v) {
            dfs.visit(v, None);
        }
    }
    dfs.cut
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && is_connected(g) && articulation_vertices(g).is_empty()
}

/// A cover of a graph by two vertex sets whose private parts are nonempty and
/// not joined by any edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Separation {
    pub fn separator(&self) -> VertexSet {
        self.left.intersection(&self.right).copied().collect()
    }

    pub fn order(&self) -> usize {
        self.left.intersection(&self.right).count()
    }

    pub fn left_private(&self) -> VertexSet {
        self.left.difference(&self.right).copied().collect()
    }

    pub fn right_private(&self) -> VertexSet {
        self.right.difference(&self.left).copied().collect()
    }

    /// Checks the separation conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let union: VertexSet = self.left.union(&self.right).copied().collect();
        let lp = self.left_private();
        let rp = self.right_private();
        union == g.vertex_set()
            && !lp.is_empty()
            && !rp.is_empty()
            && lp.iter().all(|&v| g.neighbors(v).all(|u| !rp.contains(&u)))
    }
}

/// Components of `g - cut`, ordered by smallest vertex.
pub fn components_without(g: &Graph, cut: &VertexSet) -> Vec<VertexSet> {
    components(&g.without(cut))
}

/// Smallest vertex cut of order at most `max_order` that puts two vertices of
/// `targets` (outside the cut) into different components.
///
/// Cuts are tried by size, then lexicographically. When `require_member_of`
/// is given the cut must meet it. The returned separation has the cut plus
/// the component holding the smallest separated target on the left and the
/// cut plus every other component on the right.
pub fn find_small_cut_separating(
    g: &Graph,
    targets: &VertexSet,
    max_order: usize,
    require_member_of: Option<&VertexSet>,
) -> Result<Option<(VertexSet, Separation)>> {
    g.require_all(targets)?;
    if max_order > 2 {
        return Err(Error::InvalidArgument(format!(
            "cut order {max_order} not supported (at most 2)"
        )));
    }
    let allowed = |cut: &VertexSet| require_member_of.is_none_or(|r| !cut.is_disjoint(r));

    if max_order >= 1 {
        for v in articulation_vertices(g) {
            let cut = VertexSet::from([v]);
            if allowed(&cut) {
                if let Some(sep) = separation_for_cut(g, targets, &cut) {
                    return Ok(Some((cut, sep)));
                }
            }
        }
    }
    if max_order >= 2 {
        let cut_vertices = articulation_vertices(g);
        for v in g.vertices() {
            let rest = g.without_vertex(v);
            // A pair {v, w} can only split a connected graph if v is already a
            // cut vertex or w is one in G - v.
            let candidates: Vec<Vertex> = if cut_vertices.contains(&v) {
                rest.vertices().filter(|&w| w > v).collect()
            } else {
                articulation_vertices(&rest)
                    .into_iter()
                    .filter(|&w| w > v)
                    .collect()
            };
            for w in candidates {
                let cut = VertexSet::from([v, w]);
                if allowed(&cut) {
                    if let Some(sep) = separation_for_cut(g, targets, &cut) {
                        return Ok(Some((cut, sep)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// If deleting `cut` separates two vertices of `targets \ cut`, the
/// separation described in [`find_small_cut_separating`].
pub fn separation_for_cut(g: &Graph, targets: &VertexSet, cut: &VertexSet) -> Option<Separation> {
    let comps = components_without(g, cut);
    let hit: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_disjoint(targets))
        .map(|(i, _)| i)
        .collect();
    if hit.len() < 2 {
        return None;
    }
    let first = targets
        .iter()
        .find(|t| !cut.contains(t))
        .and_then(|t| comps.iter().position(|c| c.contains(t)))?;
    let mut left = cut.clone();
    let mut right = cut.clone();
    for (i, c) in comps.iter().enumerate() {
        if i == first {
            left.extend(c);
        } else {
            right.extend(c);
        }
    }
    Some(Separation { left, right })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(vs: [Vertex; N]) -> VertexSet {
        VertexSet::from(vs)
    }

    fn two_triangles() -> Graph {
        Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn components_examples() {
        let g = Graph::from_edges([(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&g), vec![set([0, 1]), set([2, 3])]);
        assert_eq!(components(&Graph::complete(3)), vec![set([0, 1, 2])]);
        assert_eq!(
            components(&Graph::empty([4, 5, 6])),
            vec![set([4]), set([5]), set([6])]
        );
        assert!(components(&Graph::new()).is_empty());
    }

    #[test]
    fn articulation_examples() {
        assert_eq!(articulation_vertices(&Graph::path(3)), set([1]));
        assert!(articulation_vertices(&Graph::complete(3)).is_empty());
        assert_eq!(articulation_vertices(&two_triangles()), set([2]));
    }

    #[test]
    fn two_connected_examples() {
        assert!(is_two_connected(&Graph::complete(3)));
        assert!(!is_two_connected(&Graph::path(3)));
        assert!(is_two_connected(&Graph::cycle(4)));
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(!is_two_connected(&two_triangles()));
    }

    #[test]
    fn cut_on_path() {
        let (cut, sep) = find_small_cut_separating(&Graph::path(3), &set([0, 2]), 1, None)
            .unwrap()
            .unwrap();
        assert_eq!(cut, set([1]));
        assert_eq!(sep.separator(), set([1]));
        assert!(sep.is_valid_for(&Graph::path(3)));
    }

    #[test]
    fn cut_on_square() {
        let g = Graph::cycle(4);
        let (cut, sep) = find_small_cut_separating(&g, &set([0, 2]), 2, None)
            .unwrap()
            .unwrap();
        assert_eq!(cut, set([1, 3]));
        assert_eq!(sep.order(), 2);
        assert!(sep.is_valid_for(&g));
        assert!(find_small_cut_separating(&g, &set([0, 2]), 1, None)
            .unwrap()
            .is_none());
    }

    #[test]
    fn k4_has_no_small_cut() {
        let g = Graph::complete(4);
        for (u, v) in g.edges() {
            assert!(find_small_cut_separating(&g, &set([u, v]), 2, None)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn required_member_filters_cuts() {
        // 0-1-2-3-4 path: {1} is the first cut separating 0 from 4
        let g = Graph::path(5);
        let (cut, _) = find_small_cut_separating(&g, &set([0, 4]), 2, Some(&set([3])))
            .unwrap()
            .unwrap();
        assert_eq!(cut, set([3]));
        // a cut through a target leaves a single target behind
        assert!(
            find_small_cut_separating(&g, &set([0, 4]), 2, Some(&set([0, 4])))
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn rejects_unknown_targets() {
        assert_eq!(
            find_small_cut_separating(&Graph::path(2), &set([7]), 1, None),
            Err(Error::MissingVertex(7))
        );
    }
}
