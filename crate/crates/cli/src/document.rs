//! JSON documents for instances and colorings.
//!
//! ```json
//! {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]],
//!  "lists": {"0": [1, 2, 3, 4, 5], "1": [1, 2, 3, 4, 5], "2": [1, 2, 3, 4, 5]},
//!  "A": [], "B": []}
//! ```
//!
//! Ids are explicit and never compacted. `lists`, `A` and `B` may be omitted.

use std::collections::BTreeMap;
use std::fmt;

use k5list::{Color, Coloring, Graph, Instance, ListAssignment, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default)]
    pub lists: BTreeMap<Vertex, Vec<Color>>,
    #[serde(rename = "A", default, skip_serializing_if = "Vec::is_empty")]
    pub precolored: Vec<Vertex>,
    #[serde(rename = "B", default, skip_serializing_if = "Vec::is_empty")]
    pub boundary: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub coloring: Coloring,
}

#[derive(Debug)]
pub enum ParseError {
    /// Syntax or shape error, with 1-based line and column.
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed document describing an impossible graph.
    Graph(k5list::Error),
    /// Malformed `vertex:color` line.
    Line { line: usize, message: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Json {
                line,
                column,
                message,
            } => write!(f, "{line}:{column}: {message}"),
            ParseError::Graph(e) => write!(f, "{e}"),
            ParseError::Line { line, message } => write!(f, "{line}: {message}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; the position is reported separately
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        ParseError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn graph(&self) -> Result<Graph, ParseError> {
        Graph::from_parts(
            self.vertices.iter().copied(),
            self.edges.iter().map(|&[u, v]| (u, v)),
        )
        .map_err(ParseError::Graph)
    }

    /// The instance described by the document. Shallow validity is not
    /// checked here; the solver does that.
    pub fn instance(&self) -> Result<Instance, ParseError> {
        let lists: ListAssignment = self
            .lists
            .iter()
            .map(|(&v, l)| (v, l.iter().copied().collect()))
            .collect();
        Ok(Instance::new(
            self.graph()?,
            self.precolored.iter().copied().collect(),
            self.boundary.iter().copied().collect(),
            lists,
        ))
    }

    /// Canonical document for an instance: sorted ids, edges as `u < v`.
    pub fn from_instance(inst: &Instance) -> Self {
        let sorted = |s: &VertexSet| s.iter().copied().collect();
        InstanceDocument {
            vertices: inst.graph.vertices().collect(),
            edges: inst.graph.edges().map(|(u, v)| [u, v]).collect(),
            lists: inst
                .lists
                .iter()
                .map(|(&v, l)| (v, l.iter().copied().collect()))
                .collect(),
            precolored: sorted(&inst.precolored),
            boundary: sorted(&inst.boundary),
        }
    }
}

impl ColoringDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

/// `vertex:color` pairs separated by whitespace, one or more per line.
pub fn format_coloring_lines(col: &Coloring) -> String {
    col.iter().map(|(v, c)| format!("{v}:{c}\n")).collect()
}

/// Reads a coloring given either as a [`ColoringDocument`] or as
/// `vertex:color` pairs.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    if text.trim_start().starts_with('{') {
        let doc: ColoringDocument = serde_json::from_str(text)?;
        return Ok(doc.coloring);
    }
    let mut col = Coloring::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            let bad = |message: String| ParseError::Line {
                line: i + 1,
                message,
            };
            let (v, c) = token
                .split_once(':')
                .ok_or_else(|| bad(format!("expected vertex:color, found {token:?}")))?;
            let v: Vertex = v.parse().map_err(|_| bad(format!("bad vertex id {v:?}")))?;
            let c: Color = c.parse().map_err(|_| bad(format!("bad color {c:?}")))?;
            if col.insert(v, c).is_some() {
                return Err(bad(format!("vertex {v} colored twice")));
            }
        }
    }
    Ok(col)
}
