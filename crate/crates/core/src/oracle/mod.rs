//! Independent ground truth: exact chromatic number via saturation-ordered
//! branch and bound, vertex-criticality certificates, critical-subgraph
//! extraction, small-graph enumeration, the clause-by-clause certificate
//! checker and the corpus harness.

pub mod checker;
pub mod corpus;
mod enumerate;

pub use enumerate::enumerate_graphs;

use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::time::{Duration, Instant};

/// Environment variable overriding the default exact-search size bound.
pub const ORACLE_SIZE_ENV: &str = "DEGPART_ORACLE_MAX_N";

/// Controls for the exact chromatic search.
#[derive(Clone, Debug)]
pub struct ChiOptions {
    /// Largest n accepted without a time budget.
    pub size_limit: usize,
    /// Optional wall-clock budget; also lifts the size limit.
    pub time_budget: Option<Duration>,
}

impl Default for ChiOptions {
    fn default() -> Self {
        let size_limit = std::env::var(ORACLE_SIZE_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(16);
        ChiOptions { size_limit, time_budget: None }
    }
}

/// Why the chromatic lower bound holds.
#[derive(Clone, Debug)]
pub enum LowerBoundWitness {
    /// A clique of size chi was found.
    Clique(VertexSet),
    /// Exhaustive branch and bound ruled out chi - 1 colors.
    Exhaustion,
}

/// Exact chromatic number together with a proper witness coloring.
#[derive(Clone, Debug)]
pub struct ChiCertificate {
    pub chi: usize,
    pub witness: Coloring,
    pub lower_bound: LowerBoundWitness,
}

/// Vertex-criticality: `is_critical` iff deleting any vertex drops chi.
#[derive(Clone, Debug)]
pub struct CriticalityCertificate {
    pub chi: usize,
    pub is_critical: bool,
    /// chi(G - v) for each vertex v.
    pub deleted_chi: Vec<usize>,
}

pub fn exact_chi(g: &Graph) -> Result<ChiCertificate> {
    exact_chi_with(g, &ChiOptions::default())
}

/// Exact chi by DSATUR-style branch and bound, clique-seeded.
pub fn exact_chi_with(g: &Graph, opts: &ChiOptions) -> Result<ChiCertificate> {
    let n = g.n();
    if n > opts.size_limit && opts.time_budget.is_none() {
        return Err(Error::TooLarge { n, limit: opts.size_limit });
    }
    if n == 0 {
        return Ok(ChiCertificate {
            chi: 0,
            witness: Coloring::empty(0),
            lower_bound: LowerBoundWitness::Exhaustion,
        });
    }
    let deadline = opts.time_budget.map(|b| (Instant::now(), b));

    // Greedy maximal clique, largest-degree-first: the seed and lower bound.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lb = clique.len();

    // DSATUR greedy upper bound.
    let greedy = dsatur_greedy(g);
    let mut best_colors = greedy.max_color_count();
    let mut best = greedy;

    if lb < best_colors {
        let mut colors: Vec<Option<usize>> = vec![None; n];
        for (i, &v) in clique.iter().enumerate() {
            colors[v] = Some(i);
        }
        let mut nodes = 0u64;
        branch(g, &mut colors, lb, clique.len(), &mut best_colors, &mut best, deadline, &mut nodes)?;
    }

    let chi = best_colors;
    let lower_bound = if lb == chi {
        LowerBoundWitness::Clique(VertexSet::from_vertices(n, &clique))
    } else {
        LowerBoundWitness::Exhaustion
    };
    debug_assert!(best.is_proper(g));
    Ok(ChiCertificate { chi, witness: best, lower_bound })
}

fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        // Most saturated uncolored vertex, ties by degree then id.
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| {
                let sat = saturation(g, &colors, v);
                (sat, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("uncolored vertex remains");
        let mut c = 0;
        while g.neighbors(v).iter().any(|w| colors[w] == Some(c)) {
            c += 1;
        }
        colors[v] = Some(c);
    }
    Coloring::from_total(n, colors.into_iter().map(Option::unwrap).collect())
}

fn saturation(g: &Graph, colors: &[Option<usize>], v: usize) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for w in g.neighbors(v).iter() {
        if let Some(c) = colors[w] {
            seen.insert(c);
        }
    }
    seen.len()
}

#[allow(clippy::too_many_arguments)]
fn branch(
    g: &Graph,
    colors: &mut Vec<Option<usize>>,
    used: usize,
    assigned: usize,
    best_colors: &mut usize,
    best: &mut Coloring,
    deadline: Option<(Instant, Duration)>,
    nodes: &mut u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes % 1024 == 0 {
        if let Some((start, budget)) = deadline {
            if start.elapsed() > budget {
                return Err(Error::Timeout { elapsed_ms: start.elapsed().as_millis() });
            }
        }
    }
    if used >= *best_colors {
        return Ok(());
    }
    if assigned == g.n() {
        *best_colors = used;
        *best = Coloring::from_total(
            g.n(),
            colors.iter().map(|c| c.expect("total")).collect(),
        );
        return Ok(());
    }
    let v = (0..g.n())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v), std::cmp::Reverse(v)))
        .expect("uncolored vertex remains");
    let cap = (used + 1).min(*best_colors - 1);
    for c in 0..cap {
        if g.neighbors(v).iter().all(|w| colors[w] != Some(c)) {
            colors[v] = Some(c);
            branch(g, colors, used.max(c + 1), assigned + 1, best_colors, best, deadline, nodes)?;
            colors[v] = None;
        }
    }
    Ok(())
}

pub fn is_vertex_critical(g: &Graph) -> Result<CriticalityCertificate> {
    is_vertex_critical_with(g, &ChiOptions::default())
}

/// Certifies whether chi drops under every single-vertex deletion.
pub fn is_vertex_critical_with(g: &Graph, opts: &ChiOptions) -> Result<CriticalityCertificate> {
    let chi = exact_chi_with(g, opts)?.chi;
    let mut deleted_chi = Vec::with_capacity(g.n());
    let mut is_critical = g.n() > 0;
    for v in 0..g.n() {
        let sub_chi = exact_chi_with(&g.delete_vertex(v), opts)?.chi;
        if sub_chi >= chi {
            is_critical = false;
        }
        deleted_chi.push(sub_chi);
    }
    Ok(CriticalityCertificate { chi, is_critical, deleted_chi })
}

pub fn extract_critical_subgraph(g: &Graph) -> Result<Graph> {
    extract_critical_subgraph_with(g, &ChiOptions::default())
}

/// Repeatedly deletes the lowest-id vertex whose removal preserves chi; the
/// result is vertex critical with the same chromatic number.
pub fn extract_critical_subgraph_with(g: &Graph, opts: &ChiOptions) -> Result<Graph> {
    let chi = exact_chi_with(g, opts)?.chi;
    let mut cur = g.clone();
    'outer: loop {
        for v in 0..cur.n() {
            let smaller = cur.delete_vertex(v);
            if exact_chi_with(&smaller, opts)?.chi == chi {
                cur = smaller;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}
