//! Clause-by-clause certificate verification.
//!
//! The checker re-evaluates every outcome condition from scratch and shares
//! only graph primitives with the engines: connectivity, obstruction,
//! regularity and movable-vertex predicates are re-implemented here (over
//! union-find rather than the engines' search structures) so a shared bug
//! cannot certify itself.

use crate::bitset::VertexSet;
use crate::coloring::{Coloring, CriticalStructure};
use crate::graph::Graph;
use crate::partition::{
    DegenCertificate, DegenOutcome, OrderedPartition, PartitionCertificate, PartitionOutcome,
    Refinement,
};

/// One verified clause.
#[derive(Clone, Debug)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Verification report: all clauses with pass/fail and a short detail.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub clauses: Vec<Clause>,
}

impl CheckReport {
    fn push(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        self.clauses.push(Clause { name, pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn failed_names(&self) -> Vec<&'static str> {
        self.clauses.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }

    pub fn failure_summary(&self) -> String {
        let fails: Vec<String> = self
            .clauses
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        if fails.is_empty() {
            "all clauses passed".into()
        } else {
            fails.join("; ")
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.clauses {
            writeln!(
                f,
                "  [{}] {}{}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }
            )?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Checker-local structural predicates (union-find based).
// ---------------------------------------------------------------------------

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn chk_connected(g: &Graph, set: &VertexSet) -> bool {
    let members: Vec<usize> = set.to_vec();
    if members.len() <= 1 {
        return true;
    }
    let mut dsu = Dsu::new(g.n());
    for &u in &members {
        for &v in &members {
            if u < v && g.has_edge(u, v) {
                dsu.union(u, v);
            }
        }
    }
    let root = dsu.find(members[0]);
    members.iter().all(|&v| dsu.find(v) == root)
}

fn chk_components(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let members: Vec<usize> = set.to_vec();
    let mut dsu = Dsu::new(g.n());
    for &u in &members {
        for &v in &members {
            if u < v && g.has_edge(u, v) {
                dsu.union(u, v);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, VertexSet> = Default::default();
    for &v in &members {
        let root = dsu.find(v);
        groups
            .entry(root)
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    groups.into_values().collect()
}

fn chk_complete(g: &Graph, set: &VertexSet) -> bool {
    let members: Vec<usize> = set.to_vec();
    members
        .iter()
        .all(|&u| members.iter().all(|&v| u == v || g.has_edge(u, v)))
}

fn chk_induced_degree(g: &Graph, set: &VertexSet, v: usize) -> usize {
    set.iter().filter(|&u| u != v && g.has_edge(u, v)).count()
}

fn chk_odd_cycle(g: &Graph, set: &VertexSet) -> bool {
    let n = set.len();
    n >= 3
        && n % 2 == 1
        && set.iter().all(|v| chk_induced_degree(g, set, v) == 2)
        && chk_connected(g, set)
}

fn chk_obstruction(g: &Graph, set: &VertexSet, t: usize) -> bool {
    if t == 2 {
        chk_odd_cycle(g, set)
    } else if t >= 3 {
        set.len() == t + 1 && chk_complete(g, set)
    } else {
        false
    }
}

fn chk_regular(g: &Graph, set: &VertexSet, r: usize) -> bool {
    !set.is_empty() && set.iter().all(|v| chk_induced_degree(g, set, v) == r)
}

/// Movable vertices of a connected vertex set: host degree exactly `d` and
/// removal keeps the set connected (singleton: degree test alone).
fn chk_movable(g: &Graph, set: &VertexSet, d: usize) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in set.iter() {
        if g.degree(v) != d {
            continue;
        }
        if set.len() == 1 || chk_connected(g, &set.without(v)) {
            out.insert(v);
        }
    }
    out
}

fn chk_is_clique_slice(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)))
}

// ---------------------------------------------------------------------------
// Certificate verification.
// ---------------------------------------------------------------------------

fn check_partition_shape(rep: &mut CheckReport, g: &Graph, p: &OrderedPartition, k: usize) -> bool {
    let ok = p.k() == k && p.host_n() == g.n() && p.is_valid();
    rep.push(
        "parts-disjoint-cover",
        ok,
        format!("{} parts over {} vertices", p.k(), p.host_n()),
    );
    ok
}

fn check_max_degrees(rep: &mut CheckReport, g: &Graph, p: &OrderedPartition, r: &[usize]) {
    let mut worst = None;
    for (i, part) in p.parts().iter().enumerate() {
        for v in part.iter() {
            let deg = chk_induced_degree(g, part, v);
            if deg > r[i] {
                worst = Some((i, v, deg));
            }
        }
    }
    rep.push(
        "part-max-degree",
        worst.is_none(),
        match worst {
            None => "Δ(G[V_i]) <= r_i for all parts".into(),
            Some((i, v, deg)) => format!("vertex {v} has degree {deg} > r_{} in its part", i + 1),
        },
    );
}

/// Verifies a first-theorem certificate clause by clause.
pub fn verify_partition_certificate(g: &Graph, cert: &PartitionCertificate) -> CheckReport {
    let mut rep = CheckReport::default();
    let r = cert.params.r.as_slice();
    let d = cert.params.d;
    let k = r.len();
    match &cert.outcome {
        PartitionOutcome::CliqueStructure(qs) => {
            let wt: usize = r.iter().sum();
            rep.push("weight-equals-d", wt == d, format!("wt(r) = {wt}, d = {d}"));

            let mut order_ok = qs.part_order.len() == k && qs.budgets.len() == k;
            if order_ok {
                let mut seen = vec![false; k];
                for (slot, &part) in qs.part_order.iter().enumerate() {
                    if part >= k || seen[part] || qs.budgets[slot] != r[part] {
                        order_ok = false;
                        break;
                    }
                    seen[part] = true;
                }
            }
            rep.push(
                "budgets-permutation",
                order_ok,
                "slot budgets must be r reordered by a part permutation",
            );

            rep.push(
                "q-size",
                qs.q.len() == d + 1,
                format!("|Q| = {}, expected {}", qs.q.len(), d + 1),
            );

            let mut union = VertexSet::empty(g.n());
            let mut disjoint = qs.cliques.len() == k;
            for c in &qs.cliques {
                if !union.is_disjoint(c) {
                    disjoint = false;
                }
                union.union_with(c);
            }
            rep.push(
                "cliques-partition-q",
                disjoint && union == qs.q,
                "cliques must partition Q",
            );

            let sizes_ok = qs.cliques.len() == k
                && qs.cliques.iter().enumerate().all(|(slot, c)| {
                    let want = if slot == 0 { qs.budgets[0] + 1 } else { qs.budgets[slot] };
                    c.len() == want
                });
            rep.push(
                "clique-sizes",
                sizes_ok,
                "slot 0 holds r+1 vertices, later slots hold r",
            );

            rep.push(
                "cliques-complete",
                qs.cliques.iter().all(|c| chk_complete(g, c)),
                "every slot must induce a clique",
            );

            let witnesses_ok = qs.witnesses.len() == qs.cliques.len()
                && qs
                    .witnesses
                    .iter()
                    .zip(&qs.cliques)
                    .all(|(w, c)| *w == chk_movable(g, c, d));
            rep.push(
                "witnesses-match",
                witnesses_ok,
                "recorded witnesses must equal the recomputed movable vertices",
            );

            let counts_ok = qs
                .witnesses
                .iter()
                .enumerate()
                .all(|(slot, w)| w.len() >= if slot == 0 { 2 } else { 1 });
            rep.push("witness-counts", counts_ok, "slot 0 needs 2 witnesses, others 1");

            let universal_ok = qs.witnesses.iter().all(|w| {
                w.iter().all(|v| {
                    qs.q.iter().all(|u| u == v || g.has_edge(u, v))
                })
            });
            rep.push("witness-universal", universal_ok, "every witness adjacent to all of Q");
        }
        PartitionOutcome::ObstructionFree { partition } => {
            if !check_partition_shape(&mut rep, g, partition, k) {
                return rep;
            }
            check_max_degrees(&mut rep, g, partition, r);
            let mut host_deg_ok = true;
            let mut movable_ok = true;
            let mut detail_host = String::new();
            let mut detail_mov = String::new();
            for (i, part) in partition.parts().iter().enumerate() {
                for comp in chk_components(g, part) {
                    if !chk_obstruction(g, &comp, r[i]) {
                        continue;
                    }
                    if comp.iter().any(|v| g.degree(v) < d) {
                        host_deg_ok = false;
                        detail_host = format!("obstruction in part {} has host degree < d", i + 1);
                    }
                    let mov = chk_movable(g, &comp, d);
                    let has_edge = mov
                        .iter()
                        .any(|v| mov.iter().any(|u| u != v && g.has_edge(u, v)));
                    if has_edge {
                        movable_ok = false;
                        detail_mov =
                            format!("obstruction in part {} has an edge in its movable set", i + 1);
                    }
                }
            }
            rep.push("obstruction-host-degree", host_deg_ok, detail_host);
            rep.push("obstruction-movable-edgeless", movable_ok, detail_mov);
        }
    }
    rep
}

/// Verifies a degeneracy-theorem certificate clause by clause.
pub fn verify_degen_certificate(g: &Graph, cert: &DegenCertificate) -> CheckReport {
    let mut rep = CheckReport::default();
    let r = cert.params.r.as_slice();
    let d = cert.params.d;
    let k = r.len();
    match &cert.outcome {
        DegenOutcome::JoinStructure { clique_part, independent_part } => {
            let wt: usize = r.iter().sum();
            rep.push("weight-equals-d", wt == d, format!("wt(r) = {wt}, d = {d}"));
            let t = clique_part.len();
            rep.push(
                "join-size",
                clique_part.is_disjoint(independent_part)
                    && t + independent_part.len() == d + 1,
                format!("t = {t}, independent side = {}", independent_part.len()),
            );
            rep.push(
                "clique-part-size",
                t + k >= d + 1,
                format!("t = {t} must be at least d + 1 - k = {}", (d + 1).saturating_sub(k)),
            );
            rep.push("clique-part-clique", chk_complete(g, clique_part), "K_t side must be a clique");
            let joined = clique_part
                .iter()
                .all(|u| independent_part.iter().all(|v| g.has_edge(u, v)));
            rep.push("join-edges", joined, "K_t side must be joined to the other side");
            rep.push(
                "clique-part-degree",
                clique_part.iter().all(|v| g.degree(v) == d),
                "K_t side host degrees must equal d",
            );
            rep.push(
                "independent-part-degree",
                independent_part.iter().all(|v| g.degree(v) > d),
                "other side host degrees must exceed d",
            );
        }
        DegenOutcome::DegeneratePartition { partition, refinement } => {
            if !check_partition_shape(&mut rep, g, partition, k) {
                return rep;
            }
            check_max_degrees(&mut rep, g, partition, r);
            let mut host_deg_ok = true;
            let mut witness_ok = true;
            let mut all_small = true;
            for (i, part) in partition.parts().iter().enumerate() {
                for comp in chk_components(g, part) {
                    if !chk_regular(g, &comp, r[i]) {
                        continue;
                    }
                    if comp.iter().any(|v| g.degree(v) < d) {
                        host_deg_ok = false;
                    }
                    let mov = chk_movable(g, &comp, d);
                    let high = mov
                        .iter()
                        .filter(|&x| {
                            let deg_mov =
                                mov.iter().filter(|&y| y != x && g.has_edge(x, y)).count();
                            deg_mov + 1 >= r[i]
                        })
                        .count();
                    if high > 1 {
                        witness_ok = false;
                    }
                    if mov.len() > 1 {
                        all_small = false;
                    }
                }
            }
            rep.push(
                "regular-host-degree",
                host_deg_ok,
                "regular components need host min degree >= d",
            );
            rep.push(
                "regular-witness-bound",
                witness_ok,
                "at most one high-movable-degree vertex per regular component",
            );
            let refinement_ok = match refinement {
                Refinement::SmallMovable => all_small,
                Refinement::CliqueNeighborhood { part, component, vertex } => {
                    let valid = *part < k
                        && component.is_subset(partition.part(*part))
                        && chk_components(g, partition.part(*part))
                            .iter()
                            .any(|c| c == component)
                        && chk_regular(g, component, r[*part])
                        && chk_movable(g, component, d).contains(*vertex)
                        && {
                            let nb: Vec<usize> = component
                                .iter()
                                .filter(|&y| y != *vertex && g.has_edge(y, *vertex) && g.degree(y) == d)
                                .collect();
                            chk_is_clique_slice(g, &nb)
                        };
                    valid
                }
            };
            rep.push(
                "refinement-disjunction",
                refinement_ok,
                match refinement {
                    Refinement::SmallMovable => "every regular component has at most one movable vertex",
                    Refinement::CliqueNeighborhood { .. } => {
                        "named witness must expose a clique degree-d neighborhood"
                    }
                },
            );
        }
    }
    rep
}

/// Verifies a coloring: total on the graph, proper, and within the bound.
pub fn verify_coloring(g: &Graph, coloring: &Coloring, max_colors: Option<usize>) -> CheckReport {
    let mut rep = CheckReport::default();
    let total = coloring.domain() == &g.vertex_set();
    rep.push("coloring-total", total, "every vertex must be colored");
    let mut mono = None;
    for (u, v) in g.edges() {
        if coloring.domain().contains(u)
            && coloring.domain().contains(v)
            && coloring.color_of(u) == coloring.color_of(v)
        {
            mono = Some((u, v));
        }
    }
    rep.push(
        "coloring-proper",
        mono.is_none(),
        match mono {
            None => "no monochromatic edge".into(),
            Some((u, v)) => format!("edge ({u}, {v}) is monochromatic"),
        },
    );
    if let Some(bound) = max_colors {
        let used = coloring.color_count();
        rep.push(
            "coloring-bound",
            used <= bound,
            format!("{used} colors used, bound {bound}"),
        );
    }
    rep
}

/// Verifies the critical-structure certificate clause by clause.
pub fn verify_critical_structure(g: &Graph, cs: &CriticalStructure) -> CheckReport {
    let mut rep = CheckReport::default();
    let chi = cs.chi;
    let omega = cs.omega_h;
    let k = cs.k;
    rep.push(
        "q-size-chi",
        cs.q.len() == chi,
        format!("|Q| = {}, expected chi = {chi}", cs.q.len()),
    );
    let mut union = VertexSet::empty(g.n());
    let mut disjoint = cs.cliques.len() == k;
    for c in &cs.cliques {
        if !union.is_disjoint(c) {
            disjoint = false;
        }
        union.union_with(c);
    }
    rep.push("cliques-partition-q", disjoint && union == cs.q, "cliques must partition Q");
    let sizes_ok = cs.cliques.len() == k
        && cs.cliques.iter().enumerate().all(|(slot, c)| {
            let want = if slot == 0 {
                chi - (k - 1) * (omega + 1)
            } else {
                omega + 1
            };
            c.len() == want
        });
    rep.push(
        "clique-sizes-critical",
        sizes_ok,
        "slot 0 holds chi - (k-1)(omega+1) vertices, later slots omega + 1",
    );
    rep.push(
        "cliques-complete",
        cs.cliques.iter().all(|c| chk_complete(g, c)),
        "every slot must induce a clique",
    );
    let low_ok = cs.witnesses.len() == cs.cliques.len()
        && cs.witnesses.iter().zip(&cs.cliques).all(|(w, c)| {
            w.is_subset(c) && w.iter().all(|v| g.degree(v) == chi - 1)
        });
    rep.push(
        "witness-low",
        low_ok,
        "witnesses must lie in their cliques with degree chi - 1",
    );
    let universal_ok = cs
        .witnesses
        .iter()
        .all(|w| w.iter().all(|v| cs.q.iter().all(|u| u == v || g.has_edge(u, v))));
    rep.push("witness-universal", universal_ok, "every witness adjacent to all of Q");
    let counts_ok = cs
        .witnesses
        .iter()
        .zip(&cs.cliques)
        .all(|(w, c)| w.len() + omega >= c.len());
    rep.push(
        "witness-counts-critical",
        counts_ok,
        "each slot needs |F_i| - omega low universal witnesses",
    );
    rep
}

/// A certificate of any kind, for uniform verification entry points.
pub enum CertificateRef<'a> {
    Partition(&'a PartitionCertificate),
    Degen(&'a DegenCertificate),
    Coloring { coloring: &'a Coloring, max_colors: Option<usize> },
    Critical(&'a CriticalStructure),
}

/// Dispatches to the matching clause checker.
pub fn verify_certificate(g: &Graph, cert: CertificateRef<'_>) -> CheckReport {
    match cert {
        CertificateRef::Partition(c) => verify_partition_certificate(g, c),
        CertificateRef::Degen(c) => verify_degen_certificate(g, c),
        CertificateRef::Coloring { coloring, max_colors } => {
            verify_coloring(g, coloring, max_colors)
        }
        CertificateRef::Critical(c) => verify_critical_structure(g, c),
    }
}
