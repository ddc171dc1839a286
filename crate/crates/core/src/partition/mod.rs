//! Degree-budgeted vertex partitions.
//!
//! The central objects: a budget vector `r = (r_1, ..., r_k)`, ordered
//! partitions `(V_1, ..., V_k)` scored by the potential
//! `f(P) = Σ_i (|E(G[V_i])| - r_i · |V_i|)`, movable subgraphs, obstruction
//! predicates, and the move-chain procedures that either produce an
//! obstruction-free partition or assemble the special clique structure the
//! theory guarantees. Every outcome is packaged as a certificate that an
//! independent checker re-validates.

mod chain;
mod search;
mod theorems;

pub use chain::{run_move_chain, ChainRun, ChainRunOutcome};
pub use theorems::{
    borodin_partition, find_partition_t1, find_partition_t1_traced, find_partition_t2,
    find_partition_t2_traced, local_search_f,
};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Per-part degree budgets `r = (r_1, ..., r_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RVector {
    entries: Vec<usize>,
}

impl RVector {
    /// Requires at least two parts.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::Precondition(format!(
                "budget vector needs k >= 2 parts, got {}",
                entries.len()
            )));
        }
        Ok(RVector { entries })
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// `wt(r) = Σ r_i`.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn get(&self, i: usize) -> usize {
        self.entries[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.entries
    }

    /// All entries at least 2 (first-theorem regime).
    pub fn validate_min_two(&self) -> Result<()> {
        if let Some(i) = self.entries.iter().position(|&r| r < 2) {
            return Err(Error::Precondition(format!(
                "budget r_{} = {} but every entry must be >= 2",
                i + 1,
                self.entries[i]
            )));
        }
        Ok(())
    }

    /// All entries at least 1 with at most one entry equal to 1
    /// (degeneracy-theorem regime).
    pub fn validate_min_one_single_unit(&self) -> Result<()> {
        if let Some(i) = self.entries.iter().position(|&r| r < 1) {
            return Err(Error::Precondition(format!(
                "budget r_{} = {} but every entry must be >= 1",
                i + 1,
                self.entries[i]
            )));
        }
        let ones = self.entries.iter().filter(|&&r| r == 1).count();
        if ones > 1 {
            return Err(Error::Precondition(format!(
                "at most one budget entry may equal 1, found {ones}"
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for RVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// An ordered partition `(V_1, ..., V_k)` of `0..host_n`; parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    host_n: usize,
    parts: Vec<VertexSet>,
}

impl OrderedPartition {
    /// Round-robin seed: vertex `v` lands in part `v mod k`.
    pub fn round_robin(host_n: usize, k: usize) -> Self {
        let mut parts = vec![VertexSet::empty(host_n); k];
        for v in 0..host_n {
            parts[v % k].insert(v);
        }
        OrderedPartition { host_n, parts }
    }

    /// Validates disjointness and coverage.
    pub fn from_parts(host_n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let p = OrderedPartition { host_n, parts };
        if !p.is_valid() {
            return Err(Error::Precondition(
                "parts must be disjoint and cover every vertex".into(),
            ));
        }
        Ok(p)
    }

    /// No validation; used to express deliberately broken inputs in tests and
    /// when reloading documents for re-verification.
    pub fn from_parts_unchecked(host_n: usize, parts: Vec<VertexSet>) -> Self {
        OrderedPartition { host_n, parts }
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = VertexSet::empty(self.host_n);
        let mut total = 0;
        for part in &self.parts {
            if part.universe() != self.host_n || !seen.is_disjoint(part) {
                return false;
            }
            total += part.len();
            seen.union_with(part);
        }
        total == self.host_n && seen == VertexSet::full(self.host_n)
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }
}

/// `f(P) = Σ_i (|E(G[V_i])| - r_i |V_i|)`; may be negative.
pub fn cost_f(g: &Graph, p: &OrderedPartition, r: &RVector) -> Result<i64> {
    if p.k() != r.k() || p.host_n() != g.n() || !p.is_valid() {
        return Err(Error::Precondition(
            "partition and budget vector must agree with the graph".into(),
        ));
    }
    let mut f = 0i64;
    for (i, part) in p.parts().iter().enumerate() {
        let edges = g.induced(part.clone()).size() as i64;
        f += edges - (r.get(i) * part.len()) as i64;
    }
    Ok(f)
}

/// The `d`-movable subgraph of a connected `h` with respect to its host:
/// vertices of host degree exactly `d` whose removal keeps `h` connected
/// (a single vertex qualifies iff its host degree is `d`).
pub fn movable_subgraph<'g>(h: &Subgraph<'g>, d: usize) -> Result<Subgraph<'g>> {
    if h.order() == 0 || !h.is_connected() {
        return Err(Error::Precondition(
            "movable subgraph requires a nonempty connected subgraph".into(),
        ));
    }
    Ok(h.restrict(movable_set(h.host(), h.support(), d)))
}

/// Set version of [`movable_subgraph`] used internally on component sets that
/// are connected by construction.
pub(crate) fn movable_set(g: &Graph, comp: &VertexSet, d: usize) -> VertexSet {
    let mut out = VertexSet::empty(comp.universe());
    let sub = g.induced(comp.clone());
    if comp.len() == 1 {
        let v = comp.first().unwrap();
        if g.degree(v) == d {
            out.insert(v);
        }
        return out;
    }
    let non_cut = match sub.non_cut_vertices() {
        Ok(s) => s,
        Err(_) => return out,
    };
    for v in non_cut.iter() {
        if g.degree(v) == d {
            out.insert(v);
        }
    }
    out
}

/// A `t`-obstruction: an odd cycle when `t = 2`, a `K_{t+1}` when `t >= 3`.
pub fn is_obstruction(c: &Subgraph<'_>, t: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::Precondition(format!(
            "obstructions are defined for t >= 2, got {t}"
        )));
    }
    Ok(if t == 2 {
        c.is_odd_cycle()
    } else {
        c.order() == t + 1 && c.is_complete()
    })
}

pub(crate) fn comp_is_obstruction(g: &Graph, comp: &VertexSet, t: usize) -> bool {
    is_obstruction(&g.induced(comp.clone()), t).unwrap_or(false)
}

pub(crate) fn comp_is_regular(g: &Graph, comp: &VertexSet, r: usize) -> bool {
    !comp.is_empty() && comp.iter().all(|v| g.degree_in(v, comp) == r)
}

/// First-theorem badness: an `r_i`-obstruction whose movable subgraph has an
/// edge.
pub(crate) fn comp_is_bad_t1(g: &Graph, comp: &VertexSet, r_i: usize, d: usize) -> bool {
    if r_i < 2 || !comp_is_obstruction(g, comp, r_i) {
        return false;
    }
    let mov = movable_set(g, comp, d);
    mov.iter().any(|v| !g.neighbors(v).is_disjoint(&mov))
}

/// Degeneracy-theorem badness: an `r_i`-regular component with at least two
/// movable vertices of movable-degree `>= r_i - 1`.
pub(crate) fn comp_is_bad_t2(g: &Graph, comp: &VertexSet, r_i: usize, d: usize) -> bool {
    if !comp_is_regular(g, comp, r_i) {
        return false;
    }
    let mov = movable_set(g, comp, d);
    mov.iter()
        .filter(|&v| g.neighbors(v).intersection_len(&mov) + 1 >= r_i)
        .count()
        >= 2
}

/// An `r_i`-regular component with at least two movable vertices.
pub(crate) fn comp_is_ugly(g: &Graph, comp: &VertexSet, r_i: usize, d: usize) -> bool {
    comp_is_regular(g, comp, r_i) && movable_set(g, comp, d).len() >= 2
}

/// Selects which badness notion a count refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BadnessMode {
    /// Obstruction components whose movable subgraph has an edge.
    Obstruction,
    /// Regular components with two high-movable-degree vertices.
    Regular,
}

/// `b(P)`: number of bad components under the chosen mode.
pub fn badness_b(g: &Graph, p: &OrderedPartition, r: &RVector, d: usize, mode: BadnessMode) -> usize {
    let mut count = 0;
    for (i, part) in p.parts().iter().enumerate() {
        for comp in g.induced(part.clone()).components() {
            let bad = match mode {
                BadnessMode::Obstruction => comp_is_bad_t1(g, comp.support(), r.get(i), d),
                BadnessMode::Regular => comp_is_bad_t2(g, comp.support(), r.get(i), d),
            };
            if bad {
                count += 1;
            }
        }
    }
    count
}

/// `c(P) = Σ_i c(G[V_i])`: total component count over the parts.
pub fn count_c(g: &Graph, p: &OrderedPartition) -> usize {
    p.parts()
        .iter()
        .map(|part| g.induced(part.clone()).components().len())
        .sum()
}

/// `u(P)`: number of regular components with two or more movable vertices.
pub fn ugliness_u(g: &Graph, p: &OrderedPartition, r: &RVector, d: usize) -> usize {
    let mut count = 0;
    for (i, part) in p.parts().iter().enumerate() {
        for comp in g.induced(part.clone()).components() {
            if comp_is_ugly(g, comp.support(), r.get(i), d) {
                count += 1;
            }
        }
    }
    count
}

/// One executed vertex move, for diagnostics and certificate trace logs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceMove {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
}

/// One step of a move chain: the vertex moved out of `component`, leaving
/// `leftover` behind for wrap detection.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub component: VertexSet,
    pub leftover: VertexSet,
}

/// History of a chain run.
#[derive(Clone, Debug, Default)]
pub struct MoveChain {
    pub steps: Vec<ChainStep>,
}

/// Parameters a partition certificate was produced under.
#[derive(Clone, Debug)]
pub struct PartitionParams {
    pub r: RVector,
    pub d: usize,
}

/// The special structure of the first theorem's structured outcome: an
/// induced `Q` on `d + 1` vertices split into cliques with universal
/// degree-`d` witnesses.
///
/// Slot 0 holds the clique of size `budgets[0] + 1`; slot `i >= 1` holds a
/// clique of size `budgets[i]`. `budgets` is `r` reordered by `part_order`
/// (the part that hosted the wrapping component leads).
#[derive(Clone, Debug)]
pub struct QStructure {
    pub q: VertexSet,
    pub cliques: Vec<VertexSet>,
    pub witnesses: Vec<VertexSet>,
    pub part_order: Vec<usize>,
    pub budgets: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum PartitionOutcome {
    /// The graph contains the guaranteed clique structure (forces `wt(r) = d`).
    CliqueStructure(QStructure),
    /// A partition in which every `r_i`-obstruction component has host
    /// min-degree `>= d` and an edgeless movable subgraph.
    ObstructionFree { partition: OrderedPartition },
}

#[derive(Clone, Debug)]
pub struct PartitionCertificate {
    pub params: PartitionParams,
    pub outcome: PartitionOutcome,
    pub trace: Option<Vec<TraceMove>>,
}

/// Which disjunct of the degeneracy theorem's partition refinement holds.
#[derive(Clone, Debug)]
pub enum Refinement {
    /// Every regular component has at most one movable vertex.
    SmallMovable,
    /// Some regular component has a movable vertex whose degree-`d`
    /// component-neighborhood is a clique.
    CliqueNeighborhood {
        part: usize,
        component: VertexSet,
        vertex: usize,
    },
}

#[derive(Clone, Debug)]
pub enum DegenOutcome {
    /// A `K_t ∨ E_{d+1-t}` witness: `clique_part` vertices have host degree
    /// exactly `d`, `independent_part` vertices more than `d`.
    JoinStructure {
        clique_part: VertexSet,
        independent_part: VertexSet,
    },
    /// A partition in which every `r_i`-regular component has host
    /// min-degree `>= d` and at most one high-movable-degree vertex.
    DegeneratePartition {
        partition: OrderedPartition,
        refinement: Refinement,
    },
}

#[derive(Clone, Debug)]
pub struct DegenCertificate {
    pub params: PartitionParams,
    pub outcome: DegenOutcome,
    pub trace: Option<Vec<TraceMove>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_cycle, build_edgeless, build_path, Graph};

    /// Brute-force evaluation of f over explicit edge counting, used as the
    /// independent oracle for `cost_f`.
    fn cost_brute(g: &Graph, p: &OrderedPartition, r: &RVector) -> i64 {
        let mut f = 0i64;
        for (i, part) in p.parts().iter().enumerate() {
            let mut edges = 0i64;
            for (u, v) in g.edges() {
                if part.contains(u) && part.contains(v) {
                    edges += 1;
                }
            }
            f += edges - (r.get(i) * part.len()) as i64;
        }
        f
    }

    #[test]
    fn cost_f_k3_example() {
        // K_3 with r = (1,1) and P = ({a,b},{c}): (1 - 2) + (0 - 1) = -2,
        // cross-checked against every one of the 2^3 ordered bipartitions.
        let g = build_complete(3);
        let r = RVector::new(vec![1, 1]).unwrap();
        let p = OrderedPartition::from_parts(
            3,
            vec![
                VertexSet::from_vertices(3, &[0, 1]),
                VertexSet::from_vertices(3, &[2]),
            ],
        )
        .unwrap();
        assert_eq!(cost_f(&g, &p, &r).unwrap(), -2);
        for mask in 0..8u32 {
            let mut a = VertexSet::empty(3);
            let mut b = VertexSet::empty(3);
            for v in 0..3 {
                if mask >> v & 1 == 1 {
                    a.insert(v);
                } else {
                    b.insert(v);
                }
            }
            let q = OrderedPartition::from_parts(3, vec![a, b]).unwrap();
            assert_eq!(cost_f(&g, &q, &r).unwrap(), cost_brute(&g, &q, &r));
        }
    }

    #[test]
    fn cost_f_collapsed_and_edgeless() {
        let g = build_cycle(5);
        let r = RVector::new(vec![2, 3]).unwrap();
        let p = OrderedPartition::from_parts(
            5,
            vec![VertexSet::full(5), VertexSet::empty(5)],
        )
        .unwrap();
        // Everything in one part: |E| - r_1 * n.
        assert_eq!(cost_f(&g, &p, &r).unwrap(), 5 - 2 * 5);

        let e4 = build_edgeless(4);
        let r2 = RVector::new(vec![1, 2]).unwrap();
        let q = OrderedPartition::from_parts(
            4,
            vec![
                VertexSet::from_vertices(4, &[0, 2]),
                VertexSet::from_vertices(4, &[1, 3]),
            ],
        )
        .unwrap();
        assert_eq!(cost_f(&e4, &q, &r2).unwrap(), -(1 * 2 + 2 * 2) as i64);
    }

    #[test]
    fn cost_f_size_mismatch() {
        let g = build_complete(3);
        let r = RVector::new(vec![1, 1, 1]).unwrap();
        let p = OrderedPartition::round_robin(3, 2);
        assert!(cost_f(&g, &p, &r).is_err());
    }

    #[test]
    fn movable_subgraph_cases() {
        // K_4 inside K_5 \ one vertex ... simplest: K_4 standalone, d = 3.
        let k4 = build_complete(4);
        let m = movable_subgraph(&k4.full(), 3).unwrap();
        assert_eq!(m.order(), 4);

        // Path a-b-c with all host degrees matching d: interior is a cut vertex.
        let p3 = build_path(3);
        let m = movable_subgraph(&p3.full(), 1).unwrap();
        assert_eq!(m.support().to_vec(), vec![0, 2]);

        // C_5 with d = 3: no vertex has host degree 3.
        let c5 = build_cycle(5);
        let m = movable_subgraph(&c5.full(), 3).unwrap();
        assert_eq!(m.order(), 0);

        // Disconnected input rejected.
        let e2 = build_edgeless(2);
        assert!(movable_subgraph(&e2.full(), 0).is_err());
    }

    #[test]
    fn obstruction_predicate() {
        let c7 = build_cycle(7);
        assert!(is_obstruction(&c7.full(), 2).unwrap());
        let k4 = build_complete(4);
        assert!(is_obstruction(&k4.full(), 3).unwrap());
        assert!(!is_obstruction(&k4.full(), 2).unwrap());
        assert!(is_obstruction(&k4.full(), 1).is_err());
    }

    #[test]
    fn badness_counts() {
        // Two triangles in one part with r_1 = 2 and all host degrees 2:
        // both are bad obstructions at d = 2.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let r = RVector::new(vec![2, 2]).unwrap();
        let p = OrderedPartition::from_parts(
            6,
            vec![VertexSet::full(6), VertexSet::empty(6)],
        )
        .unwrap();
        assert_eq!(badness_b(&g, &p, &r, 2, BadnessMode::Obstruction), 2);
        assert_eq!(badness_b(&g, &p, &r, 2, BadnessMode::Regular), 2);
        assert_eq!(count_c(&g, &p), 2);
        assert_eq!(ugliness_u(&g, &p, &r, 2), 2);

        // No regular component: path in one part.
        let path = build_path(4);
        let q = OrderedPartition::from_parts(
            4,
            vec![VertexSet::full(4), VertexSet::empty(4)],
        )
        .unwrap();
        let r14 = RVector::new(vec![2, 2]).unwrap();
        assert_eq!(badness_b(&path, &q, &r14, 1, BadnessMode::Regular), 0);
        assert_eq!(ugliness_u(&path, &q, &r14, 1), 0);

        // E_5 in one part contributes 5 components.
        let e5 = build_edgeless(5);
        let p5 = OrderedPartition::from_parts(
            5,
            vec![VertexSet::full(5), VertexSet::empty(5)],
        )
        .unwrap();
        assert_eq!(count_c(&e5, &p5), 5);
    }

    #[test]
    fn rvector_validation() {
        assert!(RVector::new(vec![2]).is_err());
        let r = RVector::new(vec![2, 3]).unwrap();
        assert_eq!(r.weight(), 5);
        r.validate_min_two().unwrap();
        let r1 = RVector::new(vec![1, 2]).unwrap();
        assert!(r1.validate_min_two().is_err());
        r1.validate_min_one_single_unit().unwrap();
        let r11 = RVector::new(vec![1, 1]).unwrap();
        assert!(r11.validate_min_one_single_unit().is_err());
    }
}
