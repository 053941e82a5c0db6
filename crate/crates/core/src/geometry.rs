//! Geometry files and the builtin geometry library.
//!
//! Graphs are serialized as JSON documents with explicit vertex slot
//! triples (counterclockwise order — this is input data, see
//! [`FtcyGraph::vertex_slots`]), oriented edges with their degree
//! assignments, branes with framings, and the homology projection. Edge and
//! vertex ids must be contiguous from 0 so the canonical form is stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::openclosed::{BraneSpec, ToricFan};
use crate::vertex::{Brane, Edge, EdgeEnd, FtcyGraph, GraphError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeometryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branes: Vec<BraneDoc>,
    pub homology: HomologyDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    /// Incident edge ids in counterclockwise order.
    pub slots: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: usize,
    pub from: EndDoc,
    pub to: EndDoc,
    pub compact: bool,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndDoc {
    Vertex { vertex: usize },
    Marker(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraneDoc {
    pub edge: usize,
    pub framing: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomologyDoc {
    pub rank: usize,
    /// Projection vector per interior compact edge, keyed by edge id.
    pub projections: BTreeMap<String, Vec<i64>>,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("/vertices/{index}/id: expected {expected}, found {found} (ids must be contiguous from 0)")]
    VertexIdOrder {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("/edges/{index}/id: expected {expected}, found {found} (ids must be contiguous from 0)")]
    EdgeIdOrder {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("/vertices/{index}/slots: expected exactly 3 slots, found {found}")]
    SlotCount { index: usize, found: usize },
    #[error("/edges/{index}/{side}: unknown endpoint marker {marker:?} (use \"open\" or \"brane\")")]
    BadMarker {
        index: usize,
        side: &'static str,
        marker: String,
    },
    #[error("/homology/projections/{key}: key is not an edge id")]
    BadProjectionKey { key: String },
    #[error("graph validation: {0}")]
    Graph(#[from] GraphError),
    #[error("unknown builtin geometry {name:?}; available: {catalog}")]
    UnknownBuiltin { name: String, catalog: String },
    #[error("builtin {0:?} takes no framing argument")]
    NoFraming(String),
}

fn end_from_doc(
    d: &EndDoc,
    index: usize,
    side: &'static str,
) -> Result<EdgeEnd, GeometryError> {
    match d {
        EndDoc::Vertex { vertex } => Ok(EdgeEnd::Vertex(*vertex)),
        EndDoc::Marker(m) => match m.as_str() {
            "open" => Ok(EdgeEnd::Open),
            "brane" => Ok(EdgeEnd::Brane),
            _ => Err(GeometryError::BadMarker {
                index,
                side,
                marker: m.clone(),
            }),
        },
    }
}

fn end_to_doc(e: &EdgeEnd) -> EndDoc {
    match e {
        EdgeEnd::Vertex(v) => EndDoc::Vertex { vertex: *v },
        EdgeEnd::Open => EndDoc::Marker("open".into()),
        EdgeEnd::Brane => EndDoc::Marker("brane".into()),
    }
}

/// Parse a geometry document into a validated graph.
pub fn parse_geometry(json: &str) -> Result<FtcyGraph, GeometryError> {
    let doc: GeometryDoc = serde_json::from_str(json)?;
    graph_from_doc(&doc)
}

pub fn graph_from_doc(doc: &GeometryDoc) -> Result<FtcyGraph, GeometryError> {
    let mut vertex_slots = Vec::with_capacity(doc.vertices.len());
    for (i, v) in doc.vertices.iter().enumerate() {
        if v.id != i {
            return Err(GeometryError::VertexIdOrder {
                index: i,
                expected: i,
                found: v.id,
            });
        }
        if v.slots.len() != 3 {
            return Err(GeometryError::SlotCount {
                index: i,
                found: v.slots.len(),
            });
        }
        vertex_slots.push([v.slots[0], v.slots[1], v.slots[2]]);
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.iter().enumerate() {
        if e.id != i {
            return Err(GeometryError::EdgeIdOrder {
                index: i,
                expected: i,
                found: e.id,
            });
        }
        edges.push(Edge {
            from: end_from_doc(&e.from, i, "from")?,
            to: end_from_doc(&e.to, i, "to")?,
            compact: e.compact,
            n: e.n,
        });
    }
    let branes = doc
        .branes
        .iter()
        .map(|b| Brane {
            edge: b.edge,
            framing: b.framing,
        })
        .collect();
    let mut projections = BTreeMap::new();
    for (k, v) in &doc.homology.projections {
        let id: usize = k
            .parse()
            .map_err(|_| GeometryError::BadProjectionKey { key: k.clone() })?;
        projections.insert(id, v.clone());
    }
    let g = FtcyGraph {
        name: doc.name.clone().unwrap_or_default(),
        vertex_slots,
        edges,
        branes,
        homology_rank: doc.homology.rank,
        projections,
    };
    g.validate()?;
    Ok(g)
}

pub fn doc_from_graph(g: &FtcyGraph) -> GeometryDoc {
    GeometryDoc {
        name: if g.name.is_empty() {
            None
        } else {
            Some(g.name.clone())
        },
        vertices: g
            .vertex_slots
            .iter()
            .enumerate()
            .map(|(id, s)| VertexDoc {
                id,
                slots: s.to_vec(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| EdgeDoc {
                id,
                from: end_to_doc(&e.from),
                to: end_to_doc(&e.to),
                compact: e.compact,
                n: e.n,
            })
            .collect(),
        branes: g
            .branes
            .iter()
            .map(|b| BraneDoc {
                edge: b.edge,
                framing: b.framing,
            })
            .collect(),
        homology: HomologyDoc {
            rank: g.homology_rank,
            projections: g
                .projections
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        },
    }
}

/// Canonical serialized form: pretty JSON with ids ascending.
pub fn emit_geometry(g: &FtcyGraph) -> String {
    let mut s = serde_json::to_string_pretty(&doc_from_graph(g)).expect("serializable");
    s.push('\n');
    s
}

pub const BUILTIN_CATALOG: &[&str] = &[
    "c3-brane(f)",
    "conifold",
    "conifold-brane(f)",
    "strip-2(f)",
    "local-p2",
];

fn open_end(v: usize) -> Edge {
    Edge {
        from: EdgeEnd::Vertex(v),
        to: EdgeEnd::Open,
        compact: false,
        n: 0,
    }
}

/// One trivalent vertex with a framed brane on the `(1,1)` leg; the other
/// two legs stay open. No interior curve classes.
fn c3_brane(f: i64) -> FtcyGraph {
    FtcyGraph {
        name: format!("c3-brane({f})"),
        vertex_slots: vec![[0, 1, 2]],
        edges: vec![
            Edge {
                from: EdgeEnd::Vertex(0),
                to: EdgeEnd::Brane,
                compact: true,
                n: f,
            },
            open_end(0),
            open_end(0),
        ],
        branes: vec![Brane { edge: 0, framing: f }],
        homology_rank: 0,
        projections: BTreeMap::new(),
    }
}

/// Two trivalent vertices joined by the `(-1,-1)`-curve: the interior edge
/// carries `n = 0` in both orientations.
fn conifold() -> FtcyGraph {
    FtcyGraph {
        name: "conifold".into(),
        vertex_slots: vec![[0, 1, 2], [3, 4, 0]],
        edges: vec![
            Edge {
                from: EdgeEnd::Vertex(0),
                to: EdgeEnd::Vertex(1),
                compact: true,
                n: 0,
            },
            open_end(0),
            open_end(0),
            open_end(1),
            open_end(1),
        ],
        branes: vec![],
        homology_rank: 1,
        projections: BTreeMap::from([(0, vec![1])]),
    }
}

/// The conifold with a framed brane on one outer leg of the second vertex.
fn conifold_brane(f: i64) -> FtcyGraph {
    FtcyGraph {
        name: format!("conifold-brane({f})"),
        vertex_slots: vec![[0, 1, 2], [3, 4, 0]],
        edges: vec![
            Edge {
                from: EdgeEnd::Vertex(0),
                to: EdgeEnd::Vertex(1),
                compact: true,
                n: 0,
            },
            open_end(0),
            open_end(0),
            Edge {
                from: EdgeEnd::Vertex(1),
                to: EdgeEnd::Brane,
                compact: true,
                n: f,
            },
            open_end(1),
        ],
        branes: vec![Brane { edge: 3, framing: f }],
        homology_rank: 1,
        projections: BTreeMap::from([(0, vec![1])]),
    }
}

/// Two-vertex chain over the `(0,-2)`-curve (interior `n = ±1`) with one
/// framed brane on the second vertex.
fn strip_2(f: i64) -> FtcyGraph {
    FtcyGraph {
        name: format!("strip-2({f})"),
        vertex_slots: vec![[1, 0, 2], [0, 3, 4]],
        edges: vec![
            Edge {
                from: EdgeEnd::Vertex(0),
                to: EdgeEnd::Vertex(1),
                compact: true,
                n: -1,
            },
            open_end(0),
            open_end(0),
            Edge {
                from: EdgeEnd::Vertex(1),
                to: EdgeEnd::Brane,
                compact: true,
                n: f,
            },
            open_end(1),
        ],
        branes: vec![Brane { edge: 3, framing: f }],
        homology_rank: 1,
        projections: BTreeMap::from([(0, vec![1])]),
    }
}

/// Three vertices in a triangle; every interior edge carries `n = 2` in the
/// cyclic orientation and all three project to the hyperplane class.
fn local_p2() -> FtcyGraph {
    FtcyGraph {
        name: "local-p2".into(),
        vertex_slots: vec![[3, 0, 2], [0, 4, 1], [2, 1, 5]],
        edges: vec![
            Edge {
                from: EdgeEnd::Vertex(0),
                to: EdgeEnd::Vertex(1),
                compact: true,
                n: 2,
            },
            Edge {
                from: EdgeEnd::Vertex(1),
                to: EdgeEnd::Vertex(2),
                compact: true,
                n: 2,
            },
            Edge {
                from: EdgeEnd::Vertex(2),
                to: EdgeEnd::Vertex(0),
                compact: true,
                n: 2,
            },
            open_end(0),
            open_end(1),
            open_end(2),
        ],
        branes: vec![],
        homology_rank: 1,
        projections: BTreeMap::from([(0, vec![1]), (1, vec![1]), (2, vec![1])]),
    }
}

fn parse_builtin_name(name: &str) -> Option<(&str, Option<i64>)> {
    if let Some(open) = name.find('(') {
        let close = name.rfind(')')?;
        if close != name.len() - 1 {
            return None;
        }
        let f: i64 = name[open + 1..close].trim().parse().ok()?;
        Some((&name[..open], Some(f)))
    } else {
        Some((name, None))
    }
}

/// Look up a builtin geometry by name, e.g. `"c3-brane(-2)"` or
/// `"conifold"`. A framing override replaces the framing in the name.
pub fn builtin_graph_with_framing(
    name: &str,
    framing_override: Option<i64>,
) -> Result<FtcyGraph, GeometryError> {
    let unknown = || GeometryError::UnknownBuiltin {
        name: name.to_string(),
        catalog: BUILTIN_CATALOG.join(", "),
    };
    let (base, f) = parse_builtin_name(name.trim()).ok_or_else(unknown)?;
    let f = framing_override.or(f);
    let g = match (base, f) {
        ("c3-brane", Some(f)) => c3_brane(f),
        ("c3-brane", None) => c3_brane(0),
        ("conifold", None) => conifold(),
        ("conifold", Some(_)) => return Err(GeometryError::NoFraming(base.into())),
        ("conifold-brane", Some(f)) => conifold_brane(f),
        ("conifold-brane", None) => conifold_brane(0),
        ("strip-2", Some(f)) => strip_2(f),
        ("strip-2", None) => strip_2(0),
        ("local-p2", None) => local_p2(),
        ("local-p2", Some(_)) => return Err(GeometryError::NoFraming(base.into())),
        _ => return Err(unknown()),
    };
    debug_assert!(g.validate().is_ok());
    Ok(g)
}

pub fn builtin_graph(name: &str) -> Result<FtcyGraph, GeometryError> {
    builtin_graph_with_framing(name, None)
}

/// The toric data behind the single-brane builtins, for the open/closed
/// constructions: the 3-fold fan and the brane cone labels.
pub fn builtin_open_geometry(name: &str) -> Option<(FtcyGraph, ToricFan, BraneSpec)> {
    let (base, f) = parse_builtin_name(name.trim())?;
    let f = f.unwrap_or(0);
    match base {
        "c3-brane" => {
            let fan = ToricFan {
                rank: 3,
                u3: vec![0, 0, 1],
                rays: vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]],
                top_cones: vec![vec![0, 1, 2]],
            };
            let brane = BraneSpec {
                b1: 0,
                b2: 1,
                b3: 2,
                framing: f,
                outer_assumption_asserted: true,
            };
            Some((c3_brane(f), fan, brane))
        }
        "conifold-brane" => {
            let fan = ToricFan {
                rank: 3,
                u3: vec![0, 0, 1],
                rays: vec![
                    vec![0, 0, 1],
                    vec![1, 0, 1],
                    vec![0, 1, 1],
                    vec![1, 1, 1],
                ],
                top_cones: vec![vec![0, 1, 2], vec![1, 2, 3]],
            };
            let brane = BraneSpec {
                b1: 2,
                b2: 1,
                b3: 3,
                framing: f,
                outer_assumption_asserted: true,
            };
            Some((conifold_brane(f), fan, brane))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_parses_and_validates() {
        for name in [
            "c3-brane(0)",
            "c3-brane(-2)",
            "conifold",
            "conifold-brane(1)",
            "strip-2(0)",
            "local-p2",
        ] {
            let g = builtin_graph(name).unwrap();
            assert!(g.validate().is_ok(), "{name}");
        }
        assert!(matches!(
            builtin_graph("banana"),
            Err(GeometryError::UnknownBuiltin { .. })
        ));
        assert!(builtin_graph("local-p2(3)").is_err());
    }

    #[test]
    fn builtin_shapes() {
        let g = builtin_graph("conifold").unwrap();
        assert_eq!(g.interior_edges().len(), 1);
        assert_eq!(g.brane_count(), 0);
        let g = builtin_graph("c3-brane(1)").unwrap();
        assert_eq!(g.vertex_slots.len(), 1);
        assert_eq!(g.brane_count(), 1);
        assert_eq!(g.edges.iter().filter(|e| !e.compact).count(), 2);
        assert_eq!(g.branes[0].framing, 1);
    }

    #[test]
    fn framing_override() {
        let g = builtin_graph_with_framing("c3-brane(0)", Some(-2)).unwrap();
        assert_eq!(g.branes[0].framing, -2);
        assert_eq!(g.edges[0].n, -2);
    }

    #[test]
    fn emit_parse_round_trip() {
        for name in [
            "c3-brane(-1)",
            "conifold",
            "conifold-brane(2)",
            "strip-2(1)",
            "local-p2",
        ] {
            let g = builtin_graph(name).unwrap();
            let text = emit_geometry(&g);
            let back = parse_geometry(&text).unwrap();
            assert_eq!(back, g, "{name}");
            assert_eq!(emit_geometry(&back), text, "{name} canonical form");
        }
    }

    #[test]
    fn parse_reports_semantic_errors() {
        let g = builtin_graph("conifold").unwrap();
        let mut doc = doc_from_graph(&g);
        doc.vertices[1].slots.pop();
        let err = graph_from_doc(&doc).unwrap_err();
        assert!(err.to_string().contains("/vertices/1/slots"), "{err}");

        let mut doc2 = doc_from_graph(&g);
        doc2.edges[0].to = EndDoc::Marker("nowhere".into());
        let err2 = graph_from_doc(&doc2).unwrap_err();
        assert!(err2.to_string().contains("/edges/0/to"), "{err2}");
    }
}
