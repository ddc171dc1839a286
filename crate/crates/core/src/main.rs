//! Command-line front end.
//!
//! Exit codes: 0 success / verification pass, 1 precondition or engine
//! error, 2 parse or schema error (clap errors also exit 2), 3 verification
//! failure.

use clap::{Parser, Subcommand};
use degpart::coloring::{
    brooks_color, classify_critical_with, color_via_partition, ClassifierVerdict, ColorOutcome,
    CriticalOptions,
};
use degpart::error::Error;
use degpart::graph::{build_complete, build_edgeless, build_o_n, Graph};
use degpart::io::{
    self, coloring_doc, degen_certificate_doc, partition_certificate_doc, CertificateDocument,
    GraphFormat, OutcomeDoc, ParamsDoc,
};
use degpart::oracle::checker::{
    verify_coloring, verify_degen_certificate, verify_partition_certificate, CheckReport,
};
use degpart::oracle::corpus::{corpus_verify, CorpusSpec};
use degpart::oracle::{exact_chi_with, is_vertex_critical_with, ChiOptions};
use degpart::partition::{
    borodin_partition, find_partition_t1_traced, find_partition_t2_traced, RVector,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "degpart", version, about = "Degree-constrained graph partitioning and coloring with checkable certificates")]
struct Cli {
    /// Input graph file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Input format: dimacs|edges (default: by extension, .col = dimacs).
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output file (certificate document or constructed graph).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized corpora.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Record the full move trace in certificate documents.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Obstruction-free partition or clique structure (budgets >= 2).
    Partition {
        /// Budgets r_1,...,r_k (comma separated).
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        #[arg(long)]
        d: usize,
    },
    /// Degenerate partition or join structure (budgets >= 1, one 1 allowed).
    Degen {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        #[arg(long)]
        d: usize,
    },
    /// Two-part split with degree and coloring-number bounds.
    Borodin {
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
    },
    /// Partition-based proper coloring with at most wt(r) colors.
    Color {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        #[arg(long)]
        d: usize,
    },
    /// Constructive Brooks coloring with the given budget.
    Brooks {
        #[arg(long)]
        colors: usize,
    },
    /// Classify a vertex-critical graph as K_chi or O_5.
    Classify {
        #[arg(long)]
        p: usize,
    },
    /// Construct a named family: K, E, or O.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Exact chromatic number.
    Chi,
    /// Vertex criticality.
    Critical,
    /// Run the engine corpus and verify every certificate.
    VerifyCorpus {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Part counts, e.g. "2,3".
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<usize>>,
        #[arg(long, default_value_t = 60)]
        random_samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } | Error::Schema(_) | Error::Json(_) => 2,
                Error::Verification(_) => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load_graph(cli: &Cli) -> Result<Graph, Error> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::Precondition("--input is required".into()))?;
    let format = match &cli.format {
        Some(f) => f.parse()?,
        None => io::sniff_format(path),
    };
    io::parse_graph(path, format)
}

fn chi_options() -> ChiOptions {
    ChiOptions::default()
}

fn critical_options() -> CriticalOptions {
    CriticalOptions { chi: chi_options(), ..Default::default() }
}

fn emit(cli: &Cli, doc: &CertificateDocument) -> Result<(), Error> {
    if let Some(out) = &cli.out {
        io::write_certificate(doc, out)?;
    }
    Ok(())
}

/// Writes the document and converts a failed verdict into exit code 3.
fn finish(cli: &Cli, doc: CertificateDocument, report: &CheckReport) -> Result<ExitCode, Error> {
    let doc = doc.with_verdict(report);
    emit(cli, &doc)?;
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("verification failed:\n{report}");
        Ok(ExitCode::from(3))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Partition { r, d } => {
            let g = load_graph(&cli)?;
            let r = RVector::new(r.clone())?;
            let cert = find_partition_t1_traced(&g, &r, *d, cli.trace)?;
            let report = verify_partition_certificate(&g, &cert);
            let outcome = match &cert.outcome {
                degpart::partition::PartitionOutcome::CliqueStructure(_) => "clique structure",
                degpart::partition::PartitionOutcome::ObstructionFree { .. } => {
                    "obstruction-free partition"
                }
            };
            println!("{outcome}");
            finish(&cli, partition_certificate_doc(&g, &cert), &report)
        }
        Cmd::Degen { r, d } => {
            let g = load_graph(&cli)?;
            let r = RVector::new(r.clone())?;
            let cert = find_partition_t2_traced(&g, &r, *d, cli.trace)?;
            let report = verify_degen_certificate(&g, &cert);
            let outcome = match &cert.outcome {
                degpart::partition::DegenOutcome::JoinStructure { .. } => "join structure",
                degpart::partition::DegenOutcome::DegeneratePartition { .. } => {
                    "degenerate partition"
                }
            };
            println!("{outcome}");
            finish(&cli, degen_certificate_doc(&g, &cert), &report)
        }
        Cmd::Borodin { r1, r2 } => {
            let g = load_graph(&cli)?;
            let p = borodin_partition(&g, *r1, *r2)?;
            let parts: Vec<Vec<usize>> = p.parts().iter().map(|s| s.to_vec()).collect();
            println!(
                "partition sizes: {}",
                parts.iter().map(|p| p.len().to_string()).collect::<Vec<_>>().join(", ")
            );
            let doc = CertificateDocument::new(
                &g,
                ParamsDoc { r: Some(vec![*r1, *r2]), k: Some(2), ..Default::default() },
                OutcomeDoc::BorodinPartition { parts },
            );
            emit(&cli, &doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Color { r, d } => {
            let g = load_graph(&cli)?;
            let rv = RVector::new(r.clone())?;
            let params = ParamsDoc {
                k: Some(rv.k()),
                r: Some(r.clone()),
                d: Some(*d),
                ..Default::default()
            };
            match color_via_partition(&g, &rv, *d)? {
                ColorOutcome::Colored(col) => {
                    println!("proper coloring with {} colors", col.color_count());
                    let report = verify_coloring(&g, &col, Some(rv.weight()));
                    finish(&cli, coloring_doc(&g, &col, params), &report)
                }
                ColorOutcome::SpecialQ(cert) => {
                    println!("clique structure");
                    let report = verify_partition_certificate(&g, &cert);
                    finish(&cli, partition_certificate_doc(&g, &cert), &report)
                }
            }
        }
        Cmd::Brooks { colors } => {
            let g = load_graph(&cli)?;
            let col = brooks_color(&g.full(), *colors)?;
            println!("proper coloring with {} colors", col.color_count());
            let report = verify_coloring(&g, &col, Some(*colors));
            let params = ParamsDoc { colors: Some(*colors), ..Default::default() };
            finish(&cli, coloring_doc(&g, &col, params), &report)
        }
        Cmd::Classify { p } => {
            let g = load_graph(&cli)?;
            let verdict = classify_critical_with(&g, *p, &critical_options());
            println!("{}", verdict.label());
            let detail = match &verdict {
                ClassifierVerdict::HypothesisNotMet { reason } => reason.clone(),
                ClassifierVerdict::TheoremViolation { evidence } => {
                    format!("chi = {}, omega_h = {}", evidence.chi, evidence.omega_h)
                }
                _ => String::new(),
            };
            let doc = CertificateDocument::new(
                &g,
                ParamsDoc { p: Some(*p), ..Default::default() },
                OutcomeDoc::Verdict { verdict: verdict.label().to_string(), detail },
            );
            emit(&cli, &doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { family, n } => {
            let g = match family.to_ascii_uppercase().as_str() {
                "K" => build_complete(*n),
                "E" => build_edgeless(*n),
                "O" => build_o_n(*n)?.graph,
                other => {
                    return Err(Error::Precondition(format!(
                        "unknown family '{other}', expected K, E, or O"
                    )))
                }
            };
            match &cli.out {
                Some(path) => {
                    let format = match &cli.format {
                        Some(f) => f.parse()?,
                        None => io::sniff_format(path),
                    };
                    io::write_graph(&g, path, format)?;
                }
                None => print!("{}", io::write_graph_str(&g, GraphFormat::DimacsCol)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chi => {
            let g = load_graph(&cli)?;
            let cert = exact_chi_with(&g, &chi_options())?;
            println!("{}", cert.chi);
            let colors: Vec<usize> = (0..g.n()).map(|v| cert.witness.color_of(v)).collect();
            let doc = CertificateDocument::new(
                &g,
                ParamsDoc::default(),
                OutcomeDoc::ChiResult { chi: cert.chi, coloring: colors },
            );
            emit(&cli, &doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Critical => {
            let g = load_graph(&cli)?;
            let cert = is_vertex_critical_with(&g, &chi_options())?;
            println!("{}", cert.is_critical);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyCorpus { max_n, grid, random_samples } => {
            let spec = CorpusSpec {
                max_n: *max_n,
                ks: grid.clone().unwrap_or_else(|| vec![2, 3]),
                seed: cli.seed.unwrap_or(0xD15EA5E),
                random_samples: *random_samples,
                random_max_n: 40,
            };
            let report = corpus_verify(&spec)?;
            print!("{report}");
            if let Some(out) = &cli.out {
                std::fs::write(out, serde_json::to_string_pretty(&report)?)?;
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Error::Verification(format!(
                    "{} corpus case(s) failed",
                    report.failures.len()
                )))
            }
        }
    }
}

