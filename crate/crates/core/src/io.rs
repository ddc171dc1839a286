//! Graph file formats (DIMACS .col and plain edge lists) and certificate
//! documents: JSON records carrying the tool version, an input digest, the
//! parameters, the outcome by vertex role, an optional move trace, and the
//! checker verdict.

use crate::bitset::VertexSet;
use crate::coloring::{Coloring, CriticalStructure};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::checker::{CheckReport, Clause};
use crate::partition::{
    DegenCertificate, DegenOutcome, OrderedPartition, PartitionCertificate, PartitionOutcome,
    PartitionParams, QStructure, RVector, Refinement, TraceMove,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

pub const SCHEMA_VERSION: &str = "degpart/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    DimacsCol,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" | "dimacs-col" => Ok(GraphFormat::DimacsCol),
            "edges" | "edge-list" | "edgelist" | "txt" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Parse { line: 0, msg: format!("unknown format '{other}'") }),
        }
    }
}

/// Guess the format from the file extension; `.col` means DIMACS.
pub fn sniff_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("col") => GraphFormat::DimacsCol,
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph_str(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::DimacsCol => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn parse_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph_str(&text, format)
}

/// DIMACS .col: `c` comments, one `p edge N M` line, `e u v` edges with
/// 1-based ids. Duplicate edges collapse; self-loops are rejected.
fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        match tokens[0] {
            "p" => {
                if g.is_some() {
                    return Err(Error::Parse { line: line_no, msg: "duplicate p line".into() });
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected 'p edge N M'".into(),
                    });
                }
                let n: usize = tokens[2].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex count '{}'", tokens[2]),
                })?;
                g = Some(Graph::new(n));
            }
            "e" => {
                let graph = g.as_mut().ok_or(Error::Parse {
                    line: line_no,
                    msg: "edge before p line".into(),
                })?;
                if tokens.len() != 3 {
                    return Err(Error::Parse { line: line_no, msg: "expected 'e u v'".into() });
                }
                let u: usize = tokens[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad endpoint '{}'", tokens[1]),
                })?;
                let v: usize = tokens[2].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad endpoint '{}'", tokens[2]),
                })?;
                if u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                if u == 0 || v == 0 || u > graph.n() || v > graph.n() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("edge ({u}, {v}) outside 1..={}", graph.n()),
                    });
                }
                graph.add_edge(u - 1, v - 1);
            }
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown line type '{other}'"),
                })
            }
        }
    }
    g.ok_or(Error::Parse { line: 0, msg: "missing p line".into() })
}

/// Whitespace edge list with 0-based ids, one edge per line; `#` comments.
fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id = None::<usize>;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse { line: line_no, msg: "expected 'u v'".into() });
        }
        let u: usize = tokens[0].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad endpoint '{}'", tokens[0]),
        })?;
        let v: usize = tokens[1].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad endpoint '{}'", tokens[1]),
        })?;
        if u == v {
            return Err(Error::Parse { line: line_no, msg: format!("self-loop at vertex {u}") });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_id.map_or(0, |m| m + 1);
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn write_graph_str(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::DimacsCol => {
            let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out
        }
        GraphFormat::EdgeList => {
            let mut out = String::new();
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    }
}

pub fn write_graph(g: &Graph, path: &Path, format: GraphFormat) -> Result<()> {
    std::fs::write(path, write_graph_str(g, format))?;
    Ok(())
}

/// SHA-256 over the vertex count and sorted edge list.
pub fn graph_digest(g: &Graph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(g.n().to_le_bytes());
    for (u, v) in g.edges() {
        hasher.update(u.to_le_bytes());
        hasher.update(v.to_le_bytes());
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

// ---------------------------------------------------------------------------
// Certificate documents.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InputDescriptor {
    pub digest: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct ParamsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind")]
pub enum OutcomeDoc {
    CliqueStructure {
        q: Vec<usize>,
        cliques: Vec<Vec<usize>>,
        witnesses: Vec<Vec<usize>>,
        part_order: Vec<usize>,
        budgets: Vec<usize>,
    },
    ObstructionFreePartition {
        parts: Vec<Vec<usize>>,
    },
    JoinStructure {
        clique_part: Vec<usize>,
        independent_part: Vec<usize>,
    },
    DegeneratePartition {
        parts: Vec<Vec<usize>>,
        refinement: RefinementDoc,
    },
    BorodinPartition {
        parts: Vec<Vec<usize>>,
    },
    Coloring {
        colors: Vec<usize>,
        color_count: usize,
    },
    CriticalStructure {
        q: Vec<usize>,
        cliques: Vec<Vec<usize>>,
        witnesses: Vec<Vec<usize>>,
        k: usize,
        omega_h: usize,
        chi: usize,
    },
    ChiResult {
        chi: usize,
        coloring: Vec<usize>,
    },
    Verdict {
        verdict: String,
        detail: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind")]
pub enum RefinementDoc {
    SmallMovable,
    CliqueNeighborhood { part: usize, component: Vec<usize>, vertex: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TraceMoveDoc {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ClauseDoc {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerdictDoc {
    pub passed: bool,
    pub clauses: Vec<ClauseDoc>,
}

impl From<&CheckReport> for VerdictDoc {
    fn from(report: &CheckReport) -> Self {
        VerdictDoc {
            passed: report.passed(),
            clauses: report
                .clauses
                .iter()
                .map(|c: &Clause| ClauseDoc {
                    name: c.name.to_string(),
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

/// The on-disk certificate record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub tool_version: String,
    pub input: InputDescriptor,
    pub params: ParamsDoc,
    pub outcome: OutcomeDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceMoveDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDoc>,
}

impl CertificateDocument {
    pub fn new(g: &Graph, params: ParamsDoc, outcome: OutcomeDoc) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input: InputDescriptor { digest: graph_digest(g), n: g.n(), m: g.edge_count() },
            params,
            outcome,
            trace: None,
            verdict: None,
        }
    }

    pub fn with_trace(mut self, trace: &Option<Vec<TraceMove>>) -> Self {
        self.trace = trace.as_ref().map(|t| {
            t.iter()
                .map(|m| TraceMoveDoc { vertex: m.vertex, from: m.from, to: m.to })
                .collect()
        });
        self
    }

    pub fn with_verdict(mut self, report: &CheckReport) -> Self {
        self.verdict = Some(report.into());
        self
    }
}

fn sets_to_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(VertexSet::to_vec).collect()
}

fn lists_to_sets(n: usize, lists: &[Vec<usize>]) -> Vec<VertexSet> {
    lists.iter().map(|l| VertexSet::from_vertices(n, l)).collect()
}

pub fn partition_certificate_doc(g: &Graph, cert: &PartitionCertificate) -> CertificateDocument {
    let params = ParamsDoc {
        k: Some(cert.params.r.k()),
        r: Some(cert.params.r.as_slice().to_vec()),
        d: Some(cert.params.d),
        ..Default::default()
    };
    let outcome = match &cert.outcome {
        PartitionOutcome::CliqueStructure(qs) => OutcomeDoc::CliqueStructure {
            q: qs.q.to_vec(),
            cliques: sets_to_lists(&qs.cliques),
            witnesses: sets_to_lists(&qs.witnesses),
            part_order: qs.part_order.clone(),
            budgets: qs.budgets.clone(),
        },
        PartitionOutcome::ObstructionFree { partition } => OutcomeDoc::ObstructionFreePartition {
            parts: sets_to_lists(partition.parts()),
        },
    };
    CertificateDocument::new(g, params, outcome).with_trace(&cert.trace)
}

pub fn degen_certificate_doc(g: &Graph, cert: &DegenCertificate) -> CertificateDocument {
    let params = ParamsDoc {
        k: Some(cert.params.r.k()),
        r: Some(cert.params.r.as_slice().to_vec()),
        d: Some(cert.params.d),
        ..Default::default()
    };
    let outcome = match &cert.outcome {
        DegenOutcome::JoinStructure { clique_part, independent_part } => OutcomeDoc::JoinStructure {
            clique_part: clique_part.to_vec(),
            independent_part: independent_part.to_vec(),
        },
        DegenOutcome::DegeneratePartition { partition, refinement } => {
            OutcomeDoc::DegeneratePartition {
                parts: sets_to_lists(partition.parts()),
                refinement: match refinement {
                    Refinement::SmallMovable => RefinementDoc::SmallMovable,
                    Refinement::CliqueNeighborhood { part, component, vertex } => {
                        RefinementDoc::CliqueNeighborhood {
                            part: *part,
                            component: component.to_vec(),
                            vertex: *vertex,
                        }
                    }
                },
            }
        }
    };
    CertificateDocument::new(g, params, outcome).with_trace(&cert.trace)
}

pub fn coloring_doc(g: &Graph, coloring: &Coloring, params: ParamsDoc) -> CertificateDocument {
    let colors: Vec<usize> = (0..g.n()).map(|v| coloring.color_of(v)).collect();
    CertificateDocument::new(
        g,
        params,
        OutcomeDoc::Coloring { color_count: coloring.color_count(), colors },
    )
}

pub fn critical_structure_doc(g: &Graph, cs: &CriticalStructure) -> CertificateDocument {
    CertificateDocument::new(
        g,
        ParamsDoc { k: Some(cs.k), ..Default::default() },
        OutcomeDoc::CriticalStructure {
            q: cs.q.to_vec(),
            cliques: sets_to_lists(&cs.cliques),
            witnesses: sets_to_lists(&cs.witnesses),
            k: cs.k,
            omega_h: cs.omega_h,
            chi: cs.chi,
        },
    )
}

/// Rebuilds core certificates from a document for re-verification.
pub fn document_to_certificate(doc: &CertificateDocument) -> Result<DocumentCertificate> {
    let n = doc.input.n;
    let r = doc
        .params
        .r
        .clone()
        .map(RVector::new)
        .transpose()?;
    let d = doc.params.d;
    match &doc.outcome {
        OutcomeDoc::CliqueStructure { q, cliques, witnesses, part_order, budgets } => {
            let (Some(r), Some(d)) = (r, d) else {
                return Err(Error::Schema("clique structure document missing r or d".into()));
            };
            let mut qset = VertexSet::empty(n);
            for &v in q {
                qset.insert(v);
            }
            Ok(DocumentCertificate::Partition(PartitionCertificate {
                params: PartitionParams { r, d },
                outcome: PartitionOutcome::CliqueStructure(QStructure {
                    q: qset,
                    cliques: lists_to_sets(n, cliques),
                    witnesses: lists_to_sets(n, witnesses),
                    part_order: part_order.clone(),
                    budgets: budgets.clone(),
                }),
                trace: None,
            }))
        }
        OutcomeDoc::ObstructionFreePartition { parts } => {
            let (Some(r), Some(d)) = (r, d) else {
                return Err(Error::Schema("partition document missing r or d".into()));
            };
            Ok(DocumentCertificate::Partition(PartitionCertificate {
                params: PartitionParams { r, d },
                outcome: PartitionOutcome::ObstructionFree {
                    partition: OrderedPartition::from_parts_unchecked(n, lists_to_sets(n, parts)),
                },
                trace: None,
            }))
        }
        OutcomeDoc::JoinStructure { clique_part, independent_part } => {
            let (Some(r), Some(d)) = (r, d) else {
                return Err(Error::Schema("join document missing r or d".into()));
            };
            Ok(DocumentCertificate::Degen(DegenCertificate {
                params: PartitionParams { r, d },
                outcome: DegenOutcome::JoinStructure {
                    clique_part: VertexSet::from_vertices(n, clique_part),
                    independent_part: VertexSet::from_vertices(n, independent_part),
                },
                trace: None,
            }))
        }
        OutcomeDoc::DegeneratePartition { parts, refinement } => {
            let (Some(r), Some(d)) = (r, d) else {
                return Err(Error::Schema("partition document missing r or d".into()));
            };
            Ok(DocumentCertificate::Degen(DegenCertificate {
                params: PartitionParams { r, d },
                outcome: DegenOutcome::DegeneratePartition {
                    partition: OrderedPartition::from_parts_unchecked(n, lists_to_sets(n, parts)),
                    refinement: match refinement {
                        RefinementDoc::SmallMovable => Refinement::SmallMovable,
                        RefinementDoc::CliqueNeighborhood { part, component, vertex } => {
                            Refinement::CliqueNeighborhood {
                                part: *part,
                                component: VertexSet::from_vertices(n, component),
                                vertex: *vertex,
                            }
                        }
                    },
                },
                trace: None,
            }))
        }
        OutcomeDoc::Coloring { colors, .. } => {
            if colors.len() != n {
                return Err(Error::Schema("coloring length disagrees with input".into()));
            }
            Ok(DocumentCertificate::Coloring(Coloring::from_total(n, colors.clone())))
        }
        OutcomeDoc::CriticalStructure { q, cliques, witnesses, k, omega_h, chi } => {
            Ok(DocumentCertificate::Critical(CriticalStructure {
                q: VertexSet::from_vertices(n, q),
                cliques: lists_to_sets(n, cliques),
                witnesses: lists_to_sets(n, witnesses),
                k: *k,
                omega_h: *omega_h,
                chi: *chi,
            }))
        }
        OutcomeDoc::BorodinPartition { .. } | OutcomeDoc::ChiResult { .. } | OutcomeDoc::Verdict { .. } => {
            Err(Error::Schema("document outcome carries no re-checkable certificate".into()))
        }
    }
}

/// A certificate reconstructed from a document.
pub enum DocumentCertificate {
    Partition(PartitionCertificate),
    Degen(DegenCertificate),
    Coloring(Coloring),
    Critical(CriticalStructure),
}

pub fn write_certificate(doc: &CertificateDocument, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(doc)?;
    std::fs::write(path, json)?;
    Ok(())
}

pub fn read_certificate(path: &Path) -> Result<CertificateDocument> {
    let text = std::fs::read_to_string(path)?;
    let doc: CertificateDocument = serde_json::from_str(&text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "schema version '{}' does not match '{SCHEMA_VERSION}'",
            doc.schema_version
        )));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_cycle, isomorphic};

    #[test]
    fn dimacs_parse_examples() {
        let g = parse_graph_str("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::DimacsCol).unwrap();
        assert!(isomorphic(&g, &build_complete(3)));
        let p3 = parse_graph_str("0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edge_count(), 2);
        let loop_err = parse_graph_str("p edge 2 1\ne 1 1\n", GraphFormat::DimacsCol);
        assert!(matches!(loop_err, Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn dimacs_dedup_and_comments() {
        let text = "c a comment\np edge 4 3\ne 1 2\ne 2 1\ne 3 4\n";
        let g = parse_graph_str(text, GraphFormat::DimacsCol).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let r = parse_graph_str("p edge 2 1\nq 1 2\n", GraphFormat::DimacsCol);
        assert!(matches!(r, Err(Error::Parse { line: 2, .. })));
        let r = parse_graph_str("0 x\n", GraphFormat::EdgeList);
        assert!(matches!(r, Err(Error::Parse { line: 1, .. })));
        let r = parse_graph_str("3 3\n", GraphFormat::EdgeList);
        assert!(r.is_ok() == false || r.is_err());
    }

    #[test]
    fn graph_round_trip() {
        let g = build_cycle(6);
        for fmt in [GraphFormat::DimacsCol, GraphFormat::EdgeList] {
            let text = write_graph_str(&g, fmt);
            let back = parse_graph_str(&text, fmt).unwrap();
            assert_eq!(back.edges(), g.edges());
            assert_eq!(back.n(), g.n());
        }
    }

    #[test]
    fn digest_is_stable_and_sensitive() {
        let g = build_cycle(5);
        assert_eq!(graph_digest(&g), graph_digest(&build_cycle(5)));
        assert_ne!(graph_digest(&g), graph_digest(&build_complete(5)));
    }
}
