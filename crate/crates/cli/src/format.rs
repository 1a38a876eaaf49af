//! Canonical JSON documents for every object kind.
//!
//! Emitting sorts every array, so `emit(parse(emit(x))) == emit(x)`.

use std::collections::BTreeMap;

use catgraph_core::finset::{FinMap, FinSet};
use catgraph_core::graphs::{Digraph, IncHypergraph, Quiver, SSHypergraph, SetSystem};
use catgraph_core::Error;
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverEdge {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperEdge {
    pub id: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Incidence {
    pub id: String,
    pub vertex: String,
    pub edge: String,
}

/// A morphism given by its component maps; absent components are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edges: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub incidences: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Doc {
    Quiver {
        vertices: Vec<String>,
        edges: Vec<QuiverEdge>,
    },
    Hypergraph {
        vertices: Vec<String>,
        edges: Vec<HyperEdge>,
    },
    Incidence {
        vertices: Vec<String>,
        edges: Vec<String>,
        incidences: Vec<Incidence>,
    },
    Digraph {
        vertices: Vec<String>,
        arcs: Vec<[String; 2]>,
    },
    Setsystem {
        vertices: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Graph {
        vertices: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Topology {
        vertices: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Sigma {
        vertices: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Parallel {
        source: Box<Doc>,
        target: Box<Doc>,
        first: MapDoc,
        second: MapDoc,
    },
}

impl Doc {
    pub fn kind(&self) -> &'static str {
        match self {
            Doc::Quiver { .. } => "quiver",
            Doc::Hypergraph { .. } => "hypergraph",
            Doc::Incidence { .. } => "incidence",
            Doc::Digraph { .. } => "digraph",
            Doc::Setsystem { .. } => "setsystem",
            Doc::Graph { .. } => "graph",
            Doc::Topology { .. } => "topology",
            Doc::Sigma { .. } => "sigma",
            Doc::Parallel { .. } => "parallel",
        }
    }
}

pub fn parse(text: &str, path: &str) -> Result<Doc, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("{path}:{}:{}: {e}", e.line(), e.column())))
}

pub fn emit(doc: &Doc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Wraps a construction error with the document field it came from.
fn at<T>(field: &str, r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Parse(format!("{field}: {e}")))
}

fn set(field: &str, labels: &[String]) -> Result<FinSet, Failure> {
    at(field, FinSet::new(labels.iter().map(String::as_str)))
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

pub fn quiver_from(vertices: &[String], edges: &[QuiverEdge]) -> Result<Quiver, Failure> {
    let v = set("vertices", vertices)?;
    let e = at("edges", FinSet::new(edges.iter().map(|x| x.id.as_str())))?;
    let src = at("edges[].src", FinMap::new(e.clone(), v.clone(), edges.iter().map(|x| (&x.id, &x.src))))?;
    let tgt = at("edges[].tgt", FinMap::new(e.clone(), v.clone(), edges.iter().map(|x| (&x.id, &x.tgt))))?;
    at("quiver", Quiver::new(v, e, src, tgt))
}

pub fn quiver_doc(q: &Quiver) -> Doc {
    Doc::Quiver {
        vertices: q.vertices.labels().to_vec(),
        edges: sorted(
            q.edges
                .iter()
                .map(|e| QuiverEdge {
                    id: e.to_string(),
                    src: q.src.apply(e).unwrap_or_default().to_string(),
                    tgt: q.tgt.apply(e).unwrap_or_default().to_string(),
                })
                .collect(),
        ),
    }
}

pub fn hypergraph_from(vertices: &[String], edges: &[HyperEdge]) -> Result<SSHypergraph, Failure> {
    let members: Vec<Vec<&str>> = edges.iter().map(|e| e.members.iter().map(String::as_str).collect()).collect();
    let spec: Vec<(&str, &[&str])> = edges.iter().zip(&members).map(|(e, m)| (e.id.as_str(), m.as_slice())).collect();
    let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    at("hypergraph", SSHypergraph::build(&vs, &spec))
}

pub fn hypergraph_doc(h: &SSHypergraph) -> Doc {
    Doc::Hypergraph {
        vertices: h.vertices.labels().to_vec(),
        edges: sorted(
            h.edges
                .iter()
                .map(|e| HyperEdge {
                    id: e.to_string(),
                    members: h.member_set(e).into_iter().collect(),
                })
                .collect(),
        ),
    }
}

pub fn incidence_from(vertices: &[String], edges: &[String], incidences: &[Incidence]) -> Result<IncHypergraph, Failure> {
    let v = set("vertices", vertices)?;
    let e = set("edges", edges)?;
    let i = at("incidences", FinSet::new(incidences.iter().map(|x| x.id.as_str())))?;
    let av = at("incidences[].vertex", FinMap::new(i.clone(), v.clone(), incidences.iter().map(|x| (&x.id, &x.vertex))))?;
    let ae = at("incidences[].edge", FinMap::new(i.clone(), e.clone(), incidences.iter().map(|x| (&x.id, &x.edge))))?;
    at("incidence", IncHypergraph::new(v, e, i, av, ae))
}

pub fn incidence_doc(g: &IncHypergraph) -> Doc {
    Doc::Incidence {
        vertices: g.vertices.labels().to_vec(),
        edges: g.edges.labels().to_vec(),
        incidences: sorted(
            g.incidences
                .iter()
                .map(|i| Incidence {
                    id: i.to_string(),
                    vertex: g.att_v.apply(i).unwrap_or_default().to_string(),
                    edge: g.att_e.apply(i).unwrap_or_default().to_string(),
                })
                .collect(),
        ),
    }
}

pub fn digraph_from(vertices: &[String], arcs: &[[String; 2]]) -> Result<Digraph, Failure> {
    let v = set("vertices", vertices)?;
    at("arcs", Digraph::new(v, arcs.iter().map(|[a, b]| (a.clone(), b.clone()))))
}

pub fn digraph_doc(d: &Digraph) -> Doc {
    Doc::Digraph {
        vertices: d.vertices.labels().to_vec(),
        arcs: d.arcs.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
    }
}

pub fn set_system_from(vertices: &[String], sets: &[Vec<String>]) -> Result<SetSystem, Failure> {
    let v = set("vertices", vertices)?;
    at("sets", SetSystem::new(v, sets.iter().map(|s| s.iter().cloned())))
}

fn sets_of(s: &SetSystem) -> (Vec<String>, Vec<Vec<String>>) {
    (
        s.vertices.labels().to_vec(),
        s.sets.iter().map(|m| m.iter().cloned().collect()).collect(),
    )
}

pub fn setsystem_doc(s: &SetSystem) -> Doc {
    let (vertices, sets) = sets_of(s);
    Doc::Setsystem { vertices, sets }
}

pub fn graph_doc(s: &SetSystem) -> Doc {
    let (vertices, sets) = sets_of(s);
    Doc::Graph { vertices, sets }
}

pub fn topology_doc(s: &SetSystem) -> Doc {
    let (vertices, sets) = sets_of(s);
    Doc::Topology { vertices, sets }
}

pub fn sigma_doc(s: &SetSystem) -> Doc {
    let (vertices, sets) = sets_of(s);
    Doc::Sigma { vertices, sets }
}

/// Builds a component map between two carriers from a label table.
pub fn map_from(field: &str, table: &BTreeMap<String, String>, dom: &FinSet, cod: &FinSet) -> Result<FinMap, Failure> {
    at(field, FinMap::new(dom.clone(), cod.clone(), table.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_documents_round_trip() {
        let text = r#"{"kind":"quiver","vertices":["b","a"],"edges":[{"id":"y","src":"b","tgt":"a"},{"id":"x","src":"a","tgt":"a"}]}"#;
        let Doc::Quiver { vertices, edges } = parse(text, "t").unwrap() else { panic!("quiver expected") };
        let q = quiver_from(&vertices, &edges).unwrap();
        let doc = quiver_doc(&q);
        let Doc::Quiver { vertices, edges } = &doc else { unreachable!() };
        assert_eq!(vertices, &["a", "b"]);
        assert_eq!(edges[0].id, "x");
        assert_eq!(parse(&emit(&doc), "t").unwrap(), doc);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(matches!(parse(r#"{"kind":"digraph","vertices":[],"arcs":[],"x":1}"#, "t"), Err(Failure::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"multigraph"}"#, "t"), Err(Failure::Parse(_))));
    }

    #[test]
    fn set_systems_sort_members() {
        let s = set_system_from(&["b".into(), "a".into()], &[vec!["b".into(), "a".into()], vec![]]).unwrap();
        let Doc::Setsystem { sets, .. } = setsystem_doc(&s) else { unreachable!() };
        assert_eq!(sets, vec![Vec::<String>::new(), vec!["a".to_string(), "b".to_string()]]);
    }
}
