//! Validated graph-group pairs: connected, vertex-transitive, valency at most `d`.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;
use crate::group::PermGroup;

#[derive(Clone, Debug)]
pub struct VTPair {
    pub graph: Graph,
    pub group: PermGroup,
    pub d: usize,
}

/// Reason a graph-group pair fails validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnosis {
    DegreeMismatch { graph_vertices: usize, group_degree: usize },
    Directed,
    NotConnected { components: usize },
    NotInvariant { generator: String },
    NotTransitive { orbits: usize },
    ValencyExceeds { valency: usize, d: usize },
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnosis::DegreeMismatch { graph_vertices, group_degree } => write!(
                f,
                "graph has {graph_vertices} vertices but group degree is {group_degree}"
            ),
            Diagnosis::Directed => write!(f, "graph is directed"),
            Diagnosis::NotConnected { components } => write!(f, "graph is disconnected ({components} components)"),
            Diagnosis::NotInvariant { generator } => write!(f, "generator {generator} is not an automorphism"),
            Diagnosis::NotTransitive { orbits } => write!(f, "group is intransitive ({orbits} orbits)"),
            Diagnosis::ValencyExceeds { valency, d } => write!(f, "valency {valency} exceeds d = {d}"),
        }
    }
}

impl From<Diagnosis> for Error {
    fn from(d: Diagnosis) -> Self {
        Error::InvalidInput(d.to_string())
    }
}

/// Checks the pair, reporting the first failing condition.
pub fn validate_pair(graph: Graph, group: PermGroup, d: usize) -> Result<VTPair, Diagnosis> {
    if graph.order() != group.degree() {
        return Err(Diagnosis::DegreeMismatch {
            graph_vertices: graph.order(),
            group_degree: group.degree(),
        });
    }
    if graph.is_directed() {
        return Err(Diagnosis::Directed);
    }
    let components = graph.components().len();
    if components != 1 {
        return Err(Diagnosis::NotConnected { components });
    }
    if let Some(g) = group.generators().iter().find(|g| !graph.is_automorphism(g)) {
        return Err(Diagnosis::NotInvariant { generator: g.to_string() });
    }
    let orbits = group.orbits().len();
    if orbits != 1 {
        return Err(Diagnosis::NotTransitive { orbits });
    }
    let valency = graph.max_valency();
    if valency > d {
        return Err(Diagnosis::ValencyExceeds { valency, d });
    }
    Ok(VTPair { graph, group, d })
}

impl VTPair {
    pub fn valency(&self) -> usize {
        self.graph.max_valency()
    }
}
