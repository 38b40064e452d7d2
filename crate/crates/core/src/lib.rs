//! List coloring of K5-minor-free graphs.
//!
//! Every K5-minor-free graph can be colored from lists of five colors. This
//! crate turns the inductive argument behind that fact into a recursive
//! algorithm ([`choose::color`], [`choose::five_choose`]) that never needs a
//! structure theorem or a planar embedding: it only looks at cut vertices,
//! 2-cuts, and K3-minors rooted at three boundary vertices.
//!
//! Exponential brute-force oracles for K5 minors, rooted K3-minors and list
//! colorings live alongside for verification at small sizes.

pub mod boundary;
pub mod brute;
pub mod choose;
pub mod connectivity;
pub mod error;
pub mod generate;
pub mod graph;
pub mod minor;
pub mod rooted;

pub use boundary::{
    boundary_after_delete, check_instance, Color, ColorSet, Instance, ListAssignment, Report,
    Violation,
};
pub use brute::brute_force_list_color;
pub use choose::{color, color_with, five_choose, verify_coloring, ColorOptions, Coloring, Trace};
pub use connectivity::{
    articulation_vertices, components, find_small_cut_separating, is_connected, is_two_connected,
    Separation,
};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use minor::{has_k5_minor, is_boundary, plus, BranchModel, MinorOracle};
pub use rooted::{
    extract_rooted_k3, find_contractible_edge, has_rooted_k3, is_good, RootedK3Witness, Roots,
};
