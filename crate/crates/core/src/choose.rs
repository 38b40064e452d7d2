//! Recursive list coloring of K5-minor-free graphs from boundary instances.
//!
//! [`color`] runs the minimal-counterexample induction forwards: each call
//! inspects the instance, applies the first matching reduction, and colors
//! the smaller instances it produces. The reductions, in the order tried:
//!
//! 1. `B` empty: pin the smallest vertex to its smallest color and make it
//!    the boundary.
//! 2. `A` empty: pin the smallest boundary vertex.
//! 3. `G` disconnected: color the component holding `A`, then the rest.
//! 4. a cut vertex in `B`: color the side holding `A`, then the other side
//!    with the cut vertex pinned.
//! 5. a cut vertex separating two boundary vertices: as 4, and the cut
//!    vertex joins the boundary of the far side.
//! 6. a 2-cut `{v, w}` with `v ∈ B` separating two boundary vertices: add
//!    the edge `vw` if missing and start over; otherwise color the side
//!    holding `A`, then the far side with `v, w` pinned and `w` on its
//!    boundary.
//! 7. a boundary vertex with three boundary neighbors `x, y, z`: `G - v` has
//!    no K3-minor rooted at `x, y, z`, so a bad vertex `w` exists and `{v, w}`
//!    is a cut handled as in 5 or 6.
//! 8. `A` is a whole component of `G[B]`: delete a precolored vertex, strip
//!    its color from the lists of its neighbors outside `B`, recurse.
//! 9. otherwise some `v ∈ B \ A` touches `p ∈ A`: reserve two colors of
//!    `L(v) \ L(p)`, strip them from `v`'s neighbors outside `B`, delete `v`,
//!    recurse, and give `v` whichever reserved color its remaining boundary
//!    neighbor did not take.
//!
//! Every choice breaks ties by smallest vertex id or smallest color, so the
//! result is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::boundary::{boundary_after_delete, check_instance, Color, Instance, ListAssignment};
use crate::connectivity::{
    articulation_vertices, components, components_without, find_small_cut_separating,
    separation_for_cut,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::minor::MinorOracle;
use crate::rooted::{extract_rooted_k3, find_bad_vertex};

pub type Coloring = BTreeMap<Vertex, Color>;

#[derive(Clone, Copy, Debug, Default)]
pub struct ColorOptions {
    /// Check K5-minor-freeness and the boundary at the top level, and the
    /// boundary again after every edge added by the 2-cut reduction.
    pub deep_validate: bool,
    pub oracle: MinorOracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    EmptyBoundary = 1,
    EmptyPrecolored = 2,
    Disconnected = 3,
    BoundaryCutVertex = 4,
    SeparatingCutVertex = 5,
    SeparatingPair = 6,
    BoundaryDegreeThree = 7,
    PrecoloredComponent = 8,
    ExtendFromPrecolored = 9,
}

impl Case {
    pub fn number(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

/// Termination measure; compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure {
    pub order: usize,
    pub non_edges: usize,
    pub unpinned: usize,
}

impl Measure {
    pub fn of(inst: &Instance) -> Self {
        Measure {
            order: inst.graph.order(),
            non_edges: inst.graph.non_edges(),
            unpinned: inst.graph.order() - inst.precolored.len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeAddition {
    pub v: Vertex,
    pub w: Vertex,
    /// Deep-validation result for the enlarged graph, if it ran.
    pub boundary_preserved: Option<bool>,
}

/// What a run did: every case applied, every measure transition from an
/// instance to a derived one, and every edge added by the 2-cut reduction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub cases: BTreeMap<Case, usize>,
    pub transitions: Vec<(Measure, Measure)>,
    pub edge_additions: Vec<EdgeAddition>,
}

impl Trace {
    pub fn measure_always_decreases(&self) -> bool {
        self.transitions.iter().all(|(from, to)| to < from)
    }
}

/// Colors a boundary instance. Rejects instances failing the shallow checks.
pub fn color(inst: &Instance) -> Result<Coloring> {
    color_with(inst, &ColorOptions::default()).map(|(c, _)| c)
}

pub fn color_with(inst: &Instance, opts: &ColorOptions) -> Result<(Coloring, Trace)> {
    let report = check_instance(inst, opts.deep_validate, &opts.oracle)?;
    if !report.is_valid() {
        return Err(Error::InvalidInstance(report));
    }
    let mut solver = Solver {
        opts: *opts,
        trace: Trace::default(),
    };
    let coloring = solver.solve(inst.clone())?;
    if !verify_coloring(&inst.graph, &inst.lists, &coloring) {
        return Err(Error::contradiction(
            "reductions produced an improper coloring",
        ));
    }
    Ok((coloring, solver.trace))
}

/// Colors `g` from lists of at least five colors each.
pub fn five_choose(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    color(&Instance::unbounded(g.clone(), lists.clone()))
}

/// Total, proper, and list-respecting.
pub fn verify_coloring(g: &Graph, lists: &ListAssignment, col: &Coloring) -> bool {
    g.vertices().all(|v| {
        col.get(&v)
            .is_some_and(|c| lists.get(&v).is_some_and(|l| l.contains(c)))
    }) && g.edges().all(|(u, v)| col[&u] != col[&v])
}

struct Solver {
    opts: ColorOptions,
    trace: Trace,
}

enum Step {
    Done(Coloring),
    Restart(Instance),
}

impl Solver {
    fn solve(&mut self, inst: Instance) -> Result<Coloring> {
        let mut inst = inst;
        loop {
            match self.step(inst)? {
                Step::Done(c) => return Ok(c),
                Step::Restart(next) => inst = next,
            }
        }
    }

    fn recurse(&mut self, parent: &Instance, child: Instance) -> Result<Coloring> {
        self.trace
            .transitions
            .push((Measure::of(parent), Measure::of(&child)));
        self.solve(child)
    }

    fn apply(&mut self, case: Case) {
        *self.trace.cases.entry(case).or_default() += 1;
    }

    fn step(&mut self, inst: Instance) -> Result<Step> {
        let report = inst.check_shallow();
        if !report.is_valid() {
            return Err(Error::contradiction(format!(
                "derived instance is invalid: {report}"
            )));
        }
        let g = &inst.graph;
        let Some(first) = g.vertices().next() else {
            return Ok(Step::Done(Coloring::new()));
        };

        if inst.boundary.is_empty() {
            self.apply(Case::EmptyBoundary);
            let pinned = self.pin(&inst, first, VertexSet::from([first]))?;
            return self.recurse(&inst, pinned).map(Step::Done);
        }
        if inst.precolored.is_empty() {
            self.apply(Case::EmptyPrecolored);
            let v = *inst.boundary.first().unwrap();
            let pinned = self.pin(&inst, v, inst.boundary.clone())?;
            return self.recurse(&inst, pinned).map(Step::Done);
        }

        let comps = components(g);
        if comps.len() > 1 {
            self.apply(Case::Disconnected);
            return self
                .split(&inst, &VertexSet::new(), Case::Disconnected)
                .map(Step::Done);
        }

        let cut_vertices = articulation_vertices(g);
        if let Some(&v) = cut_vertices.iter().find(|v| inst.boundary.contains(v)) {
            self.apply(Case::BoundaryCutVertex);
            return self
                .split(&inst, &VertexSet::from([v]), Case::BoundaryCutVertex)
                .map(Step::Done);
        }

        if let Some((cut, _)) = find_small_cut_separating(g, &inst.boundary, 1, None)? {
            self.apply(Case::SeparatingCutVertex);
            return self
                .split(&inst, &cut, Case::SeparatingCutVertex)
                .map(Step::Done);
        }

        if let Some((cut, _)) =
            find_small_cut_separating(g, &inst.boundary, 2, Some(&inst.boundary))?
        {
            self.apply(Case::SeparatingPair);
            return self.separating_pair(inst, cut);
        }

        if let Some(v) = inst
            .boundary
            .iter()
            .copied()
            .find(|&v| boundary_degree(&inst, v) >= 3)
        {
            self.apply(Case::BoundaryDegreeThree);
            let cut = self.cut_from_boundary_vertex(&inst, v)?;
            if cut.len() == 1 {
                return self
                    .split(&inst, &cut, Case::SeparatingCutVertex)
                    .map(Step::Done);
            }
            return self.separating_pair(inst, cut);
        }

        let reaches_out = inst.precolored.iter().any(|&a| {
            g.neighbors(a)
                .any(|u| inst.boundary.contains(&u) && !inst.precolored.contains(&u))
        });
        if !reaches_out {
            self.apply(Case::PrecoloredComponent);
            return self.delete_precolored(&inst).map(Step::Done);
        }
        self.apply(Case::ExtendFromPrecolored);
        self.extend_from_precolored(&inst).map(Step::Done)
    }

    // Cases 1 and 2: pin `v` to its smallest color and make it the whole of A.
    fn pin(&self, inst: &Instance, v: Vertex, boundary: VertexSet) -> Result<Instance> {
        let c = *inst
            .list(v)
            .first()
            .ok_or_else(|| Error::contradiction(format!("empty list at {v}")))?;
        let mut lists = inst.lists.clone();
        lists.insert(v, [c].into());
        Ok(Instance::new(
            inst.graph.clone(),
            VertexSet::from([v]),
            boundary,
            lists,
        ))
    }

    // Case 6 proper: make the cut a clique, then split on it.
    fn separating_pair(&mut self, inst: Instance, cut: VertexSet) -> Result<Step> {
        let mut it = cut.iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        if !inst.graph.has_edge(a, b) {
            let graph = inst.graph.with_edge(a, b)?;
            let boundary_preserved = if self.opts.deep_validate {
                Some(self.opts.oracle.is_boundary(&graph, &inst.boundary)?)
            } else {
                None
            };
            self.trace.edge_additions.push(EdgeAddition {
                v: a,
                w: b,
                boundary_preserved,
            });
            if boundary_preserved == Some(false) {
                return Err(Error::contradiction(format!(
                    "adding {a}{b} destroyed the boundary"
                )));
            }
            let next = Instance {
                graph,
                ..inst.clone()
            };
            self.trace
                .transitions
                .push((Measure::of(&inst), Measure::of(&next)));
            return Ok(Step::Restart(next));
        }
        self.split(&inst, &cut, Case::SeparatingPair)
            .map(Step::Done)
    }

    // Case 7: the bad vertex for three boundary neighbors of `v` in G - v.
    fn cut_from_boundary_vertex(&self, inst: &Instance, v: Vertex) -> Result<VertexSet> {
        cut_from_boundary_vertex(&inst.graph, &inst.boundary, v)
    }

    /// Colors `G1` (the side holding `A`) and then `G2` with the cut vertices
    /// pinned to their `G1` colors.
    fn split(&mut self, inst: &Instance, cut: &VertexSet, case: Case) -> Result<Coloring> {
        let (left, right) = split_sides(inst, cut, case)?;
        let g = &inst.graph;

        let left_inst = Instance::new(
            g.induced(&left),
            inst.precolored.clone(),
            inst.boundary.intersection(&left).copied().collect(),
            restrict(&inst.lists, &left),
        );
        let left_colors = self.recurse(inst, left_inst)?;

        let mut right_lists = restrict(&inst.lists, &right);
        for &c in cut {
            right_lists.insert(c, [left_colors[&c]].into());
        }
        let mut right_boundary: VertexSet = inst.boundary.intersection(&right).copied().collect();
        let right_precolored = match case {
            Case::Disconnected => VertexSet::new(),
            Case::BoundaryCutVertex => cut.clone(),
            // Contracting the near side onto the cut keeps the apex attached,
            // so the cut joins the far boundary. In the pair case one cut
            // vertex is already in B.
            Case::SeparatingCutVertex | Case::SeparatingPair => {
                right_boundary.extend(cut.iter().copied());
                cut.clone()
            }
            _ => unreachable!("split used for {case}"),
        };
        let right_inst = Instance::new(
            g.induced(&right),
            right_precolored,
            right_boundary,
            right_lists,
        );
        let right_colors = self.recurse(inst, right_inst)?;

        let mut out = left_colors;
        for (v, c) in right_colors {
            if let Some(&prev) = out.get(&v) {
                if prev != c {
                    return Err(Error::contradiction(format!(
                        "separator vertex {v} recolored"
                    )));
                }
            }
            out.insert(v, c);
        }
        Ok(out)
    }

    // Case 8.
    fn delete_precolored(&mut self, inst: &Instance) -> Result<Coloring> {
        let v = *inst.precolored.first().unwrap();
        let c = *inst.list(v).first().unwrap();
        let g = &inst.graph;
        let nbrs = g.neighbor_set(v);
        let mut lists = inst.lists.clone();
        lists.remove(&v);
        for &u in nbrs.iter().filter(|u| !inst.boundary.contains(u)) {
            lists.get_mut(&u).unwrap().remove(&c);
        }
        let mut precolored = inst.precolored.clone();
        precolored.remove(&v);
        let next = Instance::new(
            g.without_vertex(v),
            precolored,
            boundary_after_delete(&inst.boundary, v, &nbrs)?,
            lists,
        );
        let mut out = self.recurse(inst, next)?;
        out.insert(v, c);
        Ok(out)
    }

    // Case 9.
    fn extend_from_precolored(&mut self, inst: &Instance) -> Result<Coloring> {
        let g = &inst.graph;
        let (v, p) = inst
            .boundary
            .iter()
            .filter(|v| !inst.precolored.contains(v))
            .find_map(|&v| {
                g.neighbors(v)
                    .find(|u| inst.precolored.contains(u))
                    .map(|p| (v, p))
            })
            .ok_or_else(|| {
                Error::contradiction("no boundary vertex next to the precolored clique")
            })?;
        let others: Vec<Vertex> = g
            .neighbors(v)
            .filter(|&u| u != p && inst.boundary.contains(&u))
            .collect();
        if others.len() > 1 {
            return Err(Error::contradiction(format!(
                "{v} has boundary degree above 2"
            )));
        }
        let w = others.first().copied();
        let spare: Vec<Color> = inst
            .list(v)
            .difference(inst.list(p))
            .copied()
            .take(2)
            .collect();
        let &[c, d] = spare.as_slice() else {
            return Err(Error::contradiction(format!(
                "fewer than two colors at {v} outside L({p})"
            )));
        };

        let nbrs = g.neighbor_set(v);
        let mut lists = inst.lists.clone();
        lists.remove(&v);
        for &u in nbrs.iter().filter(|u| !inst.boundary.contains(u)) {
            let l = lists.get_mut(&u).unwrap();
            l.remove(&c);
            l.remove(&d);
        }
        let next = Instance::new(
            g.without_vertex(v),
            inst.precolored.clone(),
            boundary_after_delete(&inst.boundary, v, &nbrs)?,
            lists,
        );
        let mut out = self.recurse(inst, next)?;
        let pick = match w {
            Some(w) if out[&w] == c => d,
            _ => c,
        };
        out.insert(v, pick);
        Ok(out)
    }
}

fn boundary_degree(inst: &Instance, v: Vertex) -> usize {
    inst.graph
        .neighbors(v)
        .filter(|u| inst.boundary.contains(u))
        .count()
}

fn restrict(lists: &ListAssignment, keep: &VertexSet) -> ListAssignment {
    lists
        .iter()
        .filter(|(v, _)| keep.contains(v))
        .map(|(&v, l)| (v, l.clone()))
        .collect()
}

/// Vertex sets of the two sides of the split on `cut`: the near side is the
/// cut plus the component of `G - cut` holding `A`. If `A` lies inside the
/// cut, the near component is the one holding the smallest boundary vertex
/// when both sides need boundary vertices, and the smallest component
/// otherwise.
fn split_sides(inst: &Instance, cut: &VertexSet, case: Case) -> Result<(VertexSet, VertexSet)> {
    let comps = components_without(&inst.graph, cut);
    let outside_a: Vec<Vertex> = inst.precolored.difference(cut).copied().collect();
    let near = if let Some(a) = outside_a.first() {
        let i = comps.iter().position(|c| c.contains(a)).unwrap();
        if !outside_a.iter().all(|x| comps[i].contains(x)) {
            return Err(Error::contradiction(
                "precolored clique straddles a separation",
            ));
        }
        i
    } else if matches!(case, Case::SeparatingCutVertex | Case::SeparatingPair) {
        let b = inst
            .boundary
            .difference(cut)
            .next()
            .ok_or_else(|| Error::contradiction("cut swallows the boundary"))?;
        comps.iter().position(|c| c.contains(b)).unwrap()
    } else {
        0
    };
    let mut left = cut.clone();
    let mut right = cut.clone();
    for (i, c) in comps.iter().enumerate() {
        if i == near {
            left.extend(c);
        } else {
            right.extend(c);
        }
    }
    if right.len() == cut.len() {
        return Err(Error::contradiction("separation has an empty side"));
    }
    if matches!(case, Case::SeparatingCutVertex | Case::SeparatingPair)
        && (left.difference(cut).all(|v| !inst.boundary.contains(v))
            || right.difference(cut).all(|v| !inst.boundary.contains(v)))
    {
        return Err(Error::contradiction(
            "cut does not separate boundary vertices",
        ));
    }
    Ok((left, right))
}

/// For a boundary vertex `v` with at least three boundary neighbors, the cut
/// that the missing rooted K3-minor yields: `{w}` if the bad vertex `w` alone
/// separates two boundary vertices, else `{v, w}`.
///
/// Fails with an internal contradiction when `G - v` does have a K3-minor
/// rooted at the three smallest boundary neighbors, since together with `v`
/// and the apex that would form a K5 minor.
pub fn cut_from_boundary_vertex(g: &Graph, boundary: &VertexSet, v: Vertex) -> Result<VertexSet> {
    let roots: Vec<Vertex> = g
        .neighbors(v)
        .filter(|u| boundary.contains(u))
        .take(3)
        .collect();
    let &[x, y, z] = roots.as_slice() else {
        return Err(Error::InvalidArgument(format!(
            "{v} has fewer than three boundary neighbors"
        )));
    };
    let rest = g.without_vertex(v);
    let Some(w) = find_bad_vertex(&rest, [x, y, z])? else {
        let witness = extract_rooted_k3(&rest, [x, y, z])?;
        return Err(Error::contradiction(format!(
            "G - {v} has a K3-minor rooted at {x}, {y}, {z} ({:?}); B is not a boundary",
            witness.map(|w| w.sets)
        )));
    };
    let single = VertexSet::from([w]);
    if separation_for_cut(g, boundary, &single).is_some() {
        return Ok(single);
    }
    let pair = VertexSet::from([v, w]);
    if separation_for_cut(g, boundary, &pair).is_none() {
        return Err(Error::contradiction(format!(
            "{{{v}, {w}}} does not separate the boundary"
        )));
    }
    Ok(pair)
}
