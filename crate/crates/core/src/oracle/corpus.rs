//! Corpus harness: runs the engines across enumerated graphs, constructed
//! families and seeded G(n, p) samples, verifies every certificate with the
//! independent checker, and merges a deterministic report.

use crate::coloring::{brooks_color, color_via_partition, ColorOutcome};
use crate::error::Result;
use crate::graph::{build_complete, build_o_n, Graph};
use crate::oracle::checker::{
    verify_coloring, verify_degen_certificate, verify_partition_certificate,
};
use crate::oracle::enumerate_graphs;
use crate::partition::{
    borodin_partition, find_partition_t1, find_partition_t2, local_search_f, RVector,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Seeded G(n, p): every pair independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// What the corpus run covers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Exhaustive enumeration up to this order (capped at 7 here; the
    /// acceptance suite pushes further).
    pub max_n: usize,
    /// Part counts for the budget grids.
    pub ks: Vec<usize>,
    pub seed: u64,
    /// Number of random G(n, p) samples.
    pub random_samples: usize,
    /// Largest random-sample order.
    pub random_max_n: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { max_n: 6, ks: vec![2, 3], seed: 0xD15EA5E, random_samples: 60, random_max_n: 40 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseFailure {
    pub graph: String,
    pub op: String,
    pub params: String,
    pub message: String,
}

/// Aggregated corpus outcome; deterministic under a fixed spec.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CorpusReport {
    pub cases: usize,
    pub passed: usize,
    pub per_op: BTreeMap<String, (usize, usize)>,
    pub failures: Vec<CaseFailure>,
    pub elapsed_ms: u128,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.cases == self.passed
    }

    fn absorb(&mut self, records: Vec<CaseRecord>, graph: &str) {
        for rec in records {
            self.cases += 1;
            let entry = self.per_op.entry(rec.op.to_string()).or_insert((0, 0));
            entry.0 += 1;
            if rec.ok {
                self.passed += 1;
                entry.1 += 1;
            } else {
                self.failures.push(CaseFailure {
                    graph: graph.to_string(),
                    op: rec.op.to_string(),
                    params: rec.params,
                    message: rec.message,
                });
            }
        }
    }
}

impl std::fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "corpus: {}/{} cases passed in {} ms", self.passed, self.cases, self.elapsed_ms)?;
        for (op, (run, passed)) in &self.per_op {
            writeln!(f, "  {op}: {passed}/{run}")?;
        }
        for fail in self.failures.iter().take(20) {
            writeln!(f, "  FAIL {} {} [{}]: {}", fail.graph, fail.op, fail.params, fail.message)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

struct CaseRecord {
    op: &'static str,
    params: String,
    ok: bool,
    message: String,
}

fn record(op: &'static str, params: String, ok: bool, message: impl Into<String>) -> CaseRecord {
    CaseRecord { op, params, ok, message: message.into() }
}

/// Budget grids with entries from `lo..=hi` of length `k`.
fn budget_grid(k: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |r| {
                    let mut next = prefix.clone();
                    next.push(r);
                    next
                })
            })
            .collect();
    }
    out
}

/// Interesting d values for a budget weight: the wrap-forcing `wt` itself,
/// one below, and zero.
fn d_choices(wt: usize) -> Vec<usize> {
    let mut ds = vec![wt, wt.saturating_sub(1), 0];
    ds.sort_unstable();
    ds.dedup();
    ds
}

fn run_graph_cases(g: &Graph, ks: &[usize]) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    let delta = g.max_degree();

    for &k in ks {
        if g.n() == 0 && k > 2 {
            continue;
        }
        // First-theorem grid: budgets in 2..=3.
        for entries in budget_grid(k, 2, 3) {
            let r = RVector::new(entries).expect("k >= 2");
            let wt = r.weight();
            if wt + k < delta + 1 {
                continue;
            }
            for d in d_choices(wt) {
                let params = format!("r={r} d={d}");
                match find_partition_t1(g, &r, d) {
                    Ok(cert) => {
                        let rep = verify_partition_certificate(g, &cert);
                        let wt_ok = match &cert.outcome {
                            crate::partition::PartitionOutcome::CliqueStructure(_) => wt == d,
                            _ => true,
                        };
                        out.push(record(
                            "find_partition_t1",
                            params,
                            rep.passed() && wt_ok,
                            rep.failure_summary(),
                        ));
                    }
                    Err(e) => out.push(record("find_partition_t1", params, false, e.to_string())),
                }
            }
        }
        // Degeneracy-theorem grid: budgets in 1..=3, at most one 1.
        for entries in budget_grid(k, 1, 3) {
            if entries.iter().filter(|&&r| r == 1).count() > 1 {
                continue;
            }
            let r = RVector::new(entries).expect("k >= 2");
            let wt = r.weight();
            if wt + k < delta + 1 {
                continue;
            }
            for d in d_choices(wt) {
                let params = format!("r={r} d={d}");
                match find_partition_t2(g, &r, d) {
                    Ok(cert) => {
                        let rep = verify_degen_certificate(g, &cert);
                        out.push(record(
                            "find_partition_t2",
                            params,
                            rep.passed(),
                            rep.failure_summary(),
                        ));
                    }
                    Err(e) => out.push(record("find_partition_t2", params, false, e.to_string())),
                }
            }
        }
        // Lovász bound after plain local search, wt = Δ + 1 - k exactly.
        if delta + 1 >= k {
            let wt = delta + 1 - k;
            let mut entries = vec![wt / k; k];
            entries[0] += wt % k;
            let r = RVector::new(entries).expect("k >= 2");
            match local_search_f(g, &r, None) {
                Ok(p) => {
                    let ok = (0..k).all(|i| g.induced(p.part(i).clone()).max_degree() <= r.get(i));
                    out.push(record(
                        "local_search_f",
                        format!("r={r}"),
                        ok,
                        if ok { String::new() } else { "degree bound violated".into() },
                    ));
                }
                Err(e) => out.push(record("local_search_f", format!("r={r}"), false, e.to_string())),
            }
        }
    }

    // Borodin splits on eligible graphs.
    if delta >= 3 && g.full().max_clique_size() <= delta {
        for (r1, r2) in [(1, delta - 1), (delta / 2, delta - delta / 2), (delta - 1, 1)] {
            if r1 == 0 || r2 == 0 || (r1 == 1 && r2 == 1) {
                continue;
            }
            let params = format!("r1={r1} r2={r2}");
            match borodin_partition(g, r1, r2) {
                Ok(p) => {
                    let ok = [r1, r2].iter().enumerate().all(|(i, &ri)| {
                        let sub = g.induced(p.part(i).clone());
                        sub.max_degree() <= ri && sub.degeneracy() + 1 <= ri
                    });
                    out.push(record(
                        "borodin_partition",
                        params,
                        ok,
                        if ok { String::new() } else { "degree or degeneracy bound violated".into() },
                    ));
                }
                Err(e) => out.push(record("borodin_partition", params, false, e.to_string())),
            }
        }
    }

    // Partition-based coloring where the omega_d precondition allows it.
    for &k in ks {
        for entries in budget_grid(k, 2, 3) {
            let r = RVector::new(entries).expect("k >= 2");
            let wt = r.weight();
            if wt + k < delta + 1 {
                continue;
            }
            for d in d_choices(wt) {
                let omega = crate::coloring::omega_d(g, d);
                if r.as_slice().iter().any(|&ri| ri < omega + 1) {
                    continue;
                }
                let params = format!("r={r} d={d}");
                match color_via_partition(g, &r, d) {
                    Ok(ColorOutcome::Colored(col)) => {
                        let rep = verify_coloring(g, &col, Some(wt));
                        out.push(record("color_via_partition", params, rep.passed(), rep.failure_summary()));
                    }
                    Ok(ColorOutcome::SpecialQ(cert)) => {
                        let rep = verify_partition_certificate(g, &cert);
                        out.push(record("color_via_partition", params, rep.passed(), rep.failure_summary()));
                    }
                    Err(e) => out.push(record("color_via_partition", params, false, e.to_string())),
                }
            }
        }
    }

    // Brooks on connected, non-complete, non-odd-cycle graphs.
    if g.n() >= 2 && g.is_connected() {
        let f = g.full();
        let complete = g.n() == delta + 1 && f.is_complete();
        let odd_cycle = delta == 2 && f.is_odd_cycle();
        if !complete && !odd_cycle && delta >= 1 {
            match brooks_color(&f, delta) {
                Ok(col) => {
                    let rep = verify_coloring(g, &col, Some(delta));
                    out.push(record("brooks_color", format!("r={delta}"), rep.passed(), rep.failure_summary()));
                }
                Err(e) => out.push(record("brooks_color", format!("r={delta}"), false, e.to_string())),
            }
        }
    }

    out
}

/// Runs the corpus and merges per-graph records in graph order regardless of
/// evaluation order.
pub fn corpus_verify(spec: &CorpusSpec) -> Result<CorpusReport> {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 1..=spec.max_n.min(7) {
        for (i, g) in enumerate_graphs(n, false)?.into_iter().enumerate() {
            graphs.push((format!("enum-n{n}-{i}"), g));
        }
    }
    for t in 2..=6 {
        graphs.push((format!("K{t}"), build_complete(t)));
    }
    for n in 3..=5 {
        graphs.push((format!("O{n}"), build_o_n(n)?.graph));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for i in 0..spec.random_samples {
        let n = 5 + (rng.random::<u64>() as usize) % spec.random_max_n.saturating_sub(4).max(1);
        let p = [0.2, 0.5, 0.8][i % 3];
        let sample_seed = rng.random::<u64>();
        graphs.push((format!("gnp-n{n}-p{p}-{i}"), gnp(n, p, sample_seed)));
    }

    let ks = spec.ks.clone();
    let results: Vec<(usize, Vec<CaseRecord>)> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, (_, g))| (idx, run_graph_cases(g, &ks)))
        .collect();
    let mut ordered = results;
    ordered.sort_by_key(|&(idx, _)| idx);

    let mut report = CorpusReport::default();
    for (idx, records) in ordered {
        report.absorb(records, &graphs[idx].0);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(12, 0.5, 7);
        let b = gnp(12, 0.5, 7);
        assert_eq!(a.edges(), b.edges());
        let c = gnp(12, 0.5, 8);
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn empty_corpus_report() {
        let spec = CorpusSpec { max_n: 0, ks: vec![], seed: 1, random_samples: 0, random_max_n: 0 };
        let report = corpus_verify(&spec).unwrap();
        // Only the constructed families remain; they run zero grid cases
        // with an empty k list but borodin/brooks still fire.
        assert!(report.failures.is_empty(), "{report}");
    }

    #[test]
    fn small_corpus_passes() {
        let spec = CorpusSpec { max_n: 4, ks: vec![2], seed: 3, random_samples: 6, random_max_n: 10 };
        let report = corpus_verify(&spec).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.cases > 100);
    }
}
