//! Exhaustive list coloring by plain backtracking, used as ground truth.

use crate::boundary::ListAssignment;
use crate::choose::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_COLOR_ORACLE_LIMIT: usize = 12;

/// Some proper list coloring of `g`, or `None` if none exists.
pub fn brute_force_list_color(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    brute_force_list_color_limited(g, lists, DEFAULT_COLOR_ORACLE_LIMIT)
}

pub fn brute_force_list_color_limited(
    g: &Graph,
    lists: &ListAssignment,
    limit: usize,
) -> Result<Option<Coloring>> {
    if g.order() > limit {
        return Err(Error::OracleScaleExceeded {
            order: g.order(),
            limit,
        });
    }
    let mut col = Coloring::new();
    Ok(backtrack(g, lists, &mut col).then_some(col))
}

fn available(g: &Graph, lists: &ListAssignment, col: &Coloring, v: Vertex) -> Vec<u32> {
    lists
        .get(&v)
        .into_iter()
        .flatten()
        .copied()
        .filter(|c| g.neighbors(v).all(|u| col.get(&u) != Some(c)))
        .collect()
}

// Colors the uncolored vertex with the fewest available colors next.
fn backtrack(g: &Graph, lists: &ListAssignment, col: &mut Coloring) -> bool {
    let next = g
        .vertices()
        .filter(|v| !col.contains_key(v))
        .map(|v| (available(g, lists, col, v), v))
        .min_by_key(|(choices, v)| (choices.len(), *v));
    let Some((choices, v)) = next else {
        return true;
    };
    for c in choices {
        col.insert(v, c);
        if backtrack(g, lists, col) {
            return true;
        }
        col.remove(&v);
    }
    false
}
