//! DOT and JSON serialization of Hasse graphs and endomorphism tables.

use crate::complex::GVector;
use crate::endo::EndoPresentation;
use crate::error::{Error, Result};
use crate::hasse::{HasseGraph, HasseStatus, SelfSimilarityCertificate};
use serde::Serialize;

#[derive(Serialize)]
pub struct MetaJson {
    pub engine: String,
    pub field: String,
    pub algebra: Option<String>,
    pub max_steps: usize,
}

impl MetaJson {
    pub fn new(algebra: Option<String>, max_steps: usize) -> Self {
        MetaJson {
            engine: format!("tausilt {}", crate::cache::ENGINE_VERSION),
            field: "exact rationals".into(),
            algebra,
            max_steps,
        }
    }
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub order_start: usize,
    pub base_index: usize,
    pub period: usize,
    pub matrix: [[i64; 2]; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_algebra: Option<String>,
    pub gvectors: Vec<Vec<Vec<i64>>>,
}

impl From<&SelfSimilarityCertificate> for CertificateJson {
    fn from(c: &SelfSimilarityCertificate) -> Self {
        CertificateJson {
            order_start: c.order_start,
            base_index: c.base_index,
            period: c.period,
            matrix: c.matrix,
            end_algebra: c.end_algebra.clone(),
            gvectors: c
                .gvector_record
                .iter()
                .map(|pair| pair.iter().map(|g| g.0.clone()).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct NodeJson {
    pub g1: Vec<i64>,
    pub g2: Vec<i64>,
}

#[derive(Serialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub index: usize,
}

#[derive(Serialize)]
pub struct HasseJson {
    pub meta: MetaJson,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
}

pub fn hasse_json(graph: &HasseGraph, meta: MetaJson) -> HasseJson {
    let (status, certificate) = match &graph.status {
        HasseStatus::Finite => ("Finite".to_string(), None),
        HasseStatus::CertifiedInfinite(c) => {
            ("CertifiedInfinite".to_string(), Some(CertificateJson::from(c)))
        }
        HasseStatus::Inconclusive { step_cap } => {
            (format!("Inconclusive(step cap {step_cap})"), None)
        }
    };
    HasseJson {
        meta,
        status,
        certificate,
        nodes: graph
            .nodes
            .iter()
            .map(|n| NodeJson { g1: n.g[0].0.clone(), g2: n.g[1].0.clone() })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| EdgeJson { from: e.from, to: e.to, index: e.index })
            .collect(),
    }
}

pub fn hasse_json_string(graph: &HasseGraph, meta: MetaJson) -> String {
    let mut s = serde_json::to_string_pretty(&hasse_json(graph, meta)).expect("serializable");
    s.push('\n');
    s
}

fn node_label(g: &[GVector]) -> String {
    format!("{}|{}", g[0], g[1])
}

/// Graphviz form: nodes labeled by their g-vector pairs, edges by the
/// mutated vertex index.
pub fn hasse_dot(graph: &HasseGraph) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "digraph hasse {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, n) in graph.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", node_label(&n.g)).unwrap();
    }
    for e in &graph.edges {
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.index).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Minimal DOT reader for round-trip checks: returns node labels in id
/// order and edges as (from, to, index).
pub fn parse_dot(s: &str) -> Result<(Vec<String>, Vec<(usize, usize, usize)>)> {
    let mut nodes: Vec<(usize, String)> = Vec::new();
    let mut edges = Vec::new();
    for line in s.lines() {
        let line = line.trim().trim_end_matches(';');
        if let Some((lhs, rest)) = line.split_once("[label=\"") {
            let label = rest
                .split_once('"')
                .ok_or_else(|| Error::Parse("unterminated label".into()))?
                .0
                .to_string();
            let lhs = lhs.trim();
            if let Some((from, to)) = lhs.split_once("->") {
                let parse_id = |t: &str| -> Result<usize> {
                    t.trim()
                        .strip_prefix('n')
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad node id {t:?}")))
                };
                let index: usize =
                    label.parse().map_err(|_| Error::Parse("bad edge label".into()))?;
                edges.push((parse_id(from)?, parse_id(to)?, index));
            } else if let Some(id) = lhs.strip_prefix('n') {
                if let Ok(id) = id.trim().parse::<usize>() {
                    nodes.push((id, label));
                }
            }
        }
    }
    nodes.sort_by_key(|&(id, _)| id);
    Ok((nodes.into_iter().map(|(_, l)| l).collect(), edges))
}

#[derive(Serialize)]
pub struct EndoBasisJson {
    pub label: String,
    pub pair: (usize, usize),
}

#[derive(Serialize)]
pub struct EndoProductJson {
    pub left: usize,
    pub right: usize,
    pub value: Vec<(usize, String)>,
}

#[derive(Serialize)]
pub struct EndoJson {
    pub meta: MetaJson,
    pub dimension: usize,
    pub idempotents: Vec<usize>,
    pub basis: Vec<EndoBasisJson>,
    /// nonzero products only
    pub table: Vec<EndoProductJson>,
    pub arrow_counts: Vec<Vec<usize>>,
    pub radical_layers: Vec<usize>,
    pub hom_dims: Vec<Vec<usize>>,
}

pub fn endo_json(e: &EndoPresentation, meta: MetaJson) -> EndoJson {
    let t = &e.table;
    let mut table = Vec::new();
    for i in 0..t.dim {
        for j in 0..t.dim {
            let p = t.product(i, j);
            if !p.is_empty() {
                table.push(EndoProductJson {
                    left: i,
                    right: j,
                    value: p.iter().map(|&(k, c)| (k as usize, c.to_string())).collect(),
                });
            }
        }
    }
    EndoJson {
        meta,
        dimension: e.dimension,
        idempotents: t.idem.clone(),
        basis: (0..t.dim)
            .map(|i| EndoBasisJson { label: t.labels[i].clone(), pair: t.pair[i] })
            .collect(),
        table,
        arrow_counts: e.arrow_counts.clone(),
        radical_layers: e.radical_layers.clone(),
        hom_dims: e.hom_dims.clone(),
    }
}

pub fn endo_json_string(e: &EndoPresentation, meta: MetaJson) -> String {
    let mut s = serde_json::to_string_pretty(&endo_json(e, meta)).expect("serializable");
    s.push('\n');
    s
}
