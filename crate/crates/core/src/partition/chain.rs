//! Move chains: f-preserving single-vertex relocations that bounce between
//! two parts until either a counting measure drops or the chain wraps onto a
//! leftover component, at which point the guaranteed structure is assembled
//! and checked clause by clause.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::search::SearchState;
use crate::partition::{
    comp_is_bad_t1, comp_is_bad_t2, comp_is_obstruction, comp_is_regular, comp_is_ugly,
    movable_set, BadnessMode, ChainStep, MoveChain, OrderedPartition, QStructure, RVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ChainMode {
    /// Obstruction chains (first theorem).
    T1Bad,
    /// Regular-component chains (degeneracy theorem, badness phase).
    T2Bad,
    /// Refinement chains over ugly components (degeneracy theorem).
    T2Ugly,
}

pub(crate) enum ChainEnd {
    /// Some measure strictly dropped; the state holds the improved partition.
    Progress,
    /// Wrap assembled the clique structure (first theorem).
    Clique(QStructure),
    /// Wrap assembled the join structure (degeneracy theorem).
    Join {
        clique_part: VertexSet,
        independent_part: VertexSet,
    },
    /// The state sits at a partition exposing a clique-neighborhood witness.
    BWitness {
        part: usize,
        component: VertexSet,
        vertex: usize,
    },
    /// A wrap without usable structure: no measure change; the caller marks
    /// the chain start futile and diversifies.
    Futile { msg: String },
}

pub(crate) struct ChainAbort {
    pub msg: String,
}

fn abort<T>(msg: impl Into<String>) -> std::result::Result<T, ChainAbort> {
    Err(ChainAbort { msg: msg.into() })
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), ChainAbort> {
    if cond {
        Ok(())
    } else {
        Err(ChainAbort { msg: msg.into() })
    }
}

pub(crate) fn state_badness(st: &SearchState<'_>, mode: BadnessMode) -> usize {
    let mut count = 0;
    for j in 0..st.k {
        for comp in st.part_components(j) {
            let bad = match mode {
                BadnessMode::Obstruction => comp_is_bad_t1(st.g, &comp, st.r[j], st.d),
                BadnessMode::Regular => comp_is_bad_t2(st.g, &comp, st.r[j], st.d),
            };
            if bad {
                count += 1;
            }
        }
    }
    count
}

pub(crate) fn state_ugliness(st: &SearchState<'_>) -> usize {
    let mut count = 0;
    for j in 0..st.k {
        for comp in st.part_components(j) {
            if comp_is_ugly(st.g, &comp, st.r[j], st.d) {
                count += 1;
            }
        }
    }
    count
}

/// Bad components in deterministic order (part index, then minimum id).
pub(crate) fn bad_components(st: &SearchState<'_>, mode: BadnessMode) -> Vec<(usize, VertexSet)> {
    let mut out = Vec::new();
    for j in 0..st.k {
        for comp in st.part_components(j) {
            let bad = match mode {
                BadnessMode::Obstruction => comp_is_bad_t1(st.g, &comp, st.r[j], st.d),
                BadnessMode::Regular => comp_is_bad_t2(st.g, &comp, st.r[j], st.d),
            };
            if bad {
                out.push((j, comp));
            }
        }
    }
    out
}

pub(crate) fn first_bad_component(
    st: &SearchState<'_>,
    mode: BadnessMode,
) -> Option<(usize, VertexSet)> {
    bad_components(st, mode).into_iter().next()
}

fn part_badness(st: &SearchState<'_>, j: usize, mode: BadnessMode) -> usize {
    st.part_components(j)
        .iter()
        .filter(|comp| match mode {
            BadnessMode::Obstruction => comp_is_bad_t1(st.g, comp, st.r[j], st.d),
            BadnessMode::Regular => comp_is_bad_t2(st.g, comp, st.r[j], st.d),
        })
        .count()
}

/// One f-preserving (optionally also c-preserving) single move that strictly
/// decreases badness, mirroring the minimization of b over the f-plateau.
fn descend_b_once(st: &mut SearchState<'_>, mode: BadnessMode, preserve_c: bool) -> bool {
    for v in 0..st.g.n() {
        let from = st.assign[v];
        for to in 0..st.k {
            if to == from || st.delta_f(v, to) != 0 {
                continue;
            }
            if preserve_c && st.delta_c(v, to) != 0 {
                continue;
            }
            let before = part_badness(st, from, mode) + part_badness(st, to, mode);
            st.apply(v, to);
            let after = part_badness(st, from, mode) + part_badness(st, to, mode);
            if after < before {
                return true;
            }
            st.apply(v, from);
        }
    }
    false
}

/// Lexicographic descent for the obstruction theorem: f, then badness.
pub(crate) fn descend_t1(st: &mut SearchState<'_>) {
    loop {
        st.descend_f();
        if !descend_b_once(st, BadnessMode::Obstruction, false) {
            break;
        }
    }
}

/// Lexicographic descent for the degeneracy theorem: f, then component
/// count, then badness.
pub(crate) fn descend_t2(st: &mut SearchState<'_>) {
    loop {
        st.descend_f();
        if st.descend_c_once() {
            continue;
        }
        if descend_b_once(st, BadnessMode::Regular, true) {
            continue;
        }
        break;
    }
}

/// Plateau escape: one f-preserving move followed by strict f-descent.
/// Covers two-move improvements single-move search cannot see (a free
/// vertex's arrival can hand a neighbor a strictly improving move).
pub(crate) fn descend_compound_once(st: &mut SearchState<'_>) -> bool {
    for x in 0..st.g.n() {
        let from = st.assign[x];
        for l in 0..st.k {
            if l == from || st.delta_f(x, l) != 0 {
                continue;
            }
            st.apply(x, l);
            if st.descend_f() {
                return true;
            }
            st.apply(x, from);
        }
    }
    false
}

pub(crate) fn ugly_components(st: &SearchState<'_>) -> Vec<(usize, VertexSet)> {
    let mut out = Vec::new();
    for j in 0..st.k {
        for comp in st.part_components(j) {
            if comp_is_ugly(st.g, &comp, st.r[j], st.d) {
                out.push((j, comp));
            }
        }
    }
    out
}

/// Ordered candidate vertices for moving out of `comp`.
pub(crate) fn chain_candidates(
    st: &SearchState<'_>,
    mode: ChainMode,
    comp: &VertexSet,
    part: usize,
    exclude: Option<usize>,
) -> Vec<usize> {
    let mov = movable_set(st.g, comp, st.d);
    let ri = st.r[part];
    let witness = |v: usize| st.g.neighbors(v).intersection_len(&mov) + 1 >= ri;
    let has_mov_neighbor = |v: usize| !st.g.neighbors(v).is_disjoint(&mov);
    mov.iter()
        .filter(|&v| Some(v) != exclude)
        .filter(|&v| match mode {
            ChainMode::T1Bad => has_mov_neighbor(v),
            ChainMode::T2Bad => witness(v),
            ChainMode::T2Ugly => {
                if comp_is_bad_t2(st.g, comp, ri, st.d) {
                    witness(v)
                } else {
                    true
                }
            }
        })
        .collect()
}

/// Runs one chain starting from `comp0` in `part0`. `forced_first` overrides
/// the first vertex selection (used to route around futile wraps).
pub(crate) fn run_chain(
    st: &mut SearchState<'_>,
    mode: ChainMode,
    comp0: VertexSet,
    part0: usize,
    forced_first: Option<usize>,
) -> std::result::Result<(ChainEnd, Vec<ChainStep>), ChainAbort> {
    let k = st.k;
    let other0 = (0..k).find(|&l| l != part0).expect("k >= 2");
    let flavor = match mode {
        ChainMode::T1Bad => BadnessMode::Obstruction,
        _ => BadnessMode::Regular,
    };
    let b0 = state_badness(st, flavor);
    let u0 = state_ugliness(st);
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut cur_comp = comp0;
    let mut cur_part = part0;
    let mut prev: Option<usize> = None;
    let bound = st.g.n() * k + 8;

    for iter in 0..bound {
        let x = {
            let cands = chain_candidates(st, mode, &cur_comp, cur_part, prev);
            let pick = if iter == 0 {
                forced_first.filter(|f| cands.contains(f)).or_else(|| cands.first().copied())
            } else {
                cands.first().copied()
            };
            match pick {
                Some(x) => x,
                None => return abort("no selectable vertex in chain component"),
            }
        };
        // A strictly f-improving move ends the chain with progress.
        if let Some(l) = (0..k).find(|&l| l != cur_part && st.delta_f(x, l) < 0) {
            st.apply(x, l);
            return Ok((ChainEnd::Progress, steps));
        }
        let target = if cur_part == part0 { other0 } else { part0 };
        if st.delta_f(x, target) != 0 {
            return abort(format!("move of {x} to part {target} would not preserve f"));
        }
        // Attaching to two components merges them: component count drops.
        if mode != ChainMode::T1Bad && st.attach_count(x, target) >= 2 {
            st.apply(x, target);
            return Ok((ChainEnd::Progress, steps));
        }
        st.apply(x, target);
        steps.push(ChainStep {
            vertex: x,
            from: cur_part,
            to: target,
            component: cur_comp.clone(),
            leftover: cur_comp.without(x),
        });
        let new_comp = st.comp_of_in(x, &st.parts[target]);
        // Strict measure drops take precedence over wrap analysis.
        match mode {
            ChainMode::T1Bad | ChainMode::T2Bad => {
                let b = state_badness(st, flavor);
                if b < b0 {
                    return Ok((ChainEnd::Progress, steps));
                }
                if b > b0 {
                    return abort("badness increased during chain");
                }
            }
            ChainMode::T2Ugly => {
                if state_badness(st, BadnessMode::Regular) > 1 {
                    return abort("more than one bad component during refinement chain");
                }
                let u = state_ugliness(st);
                if u < u0 {
                    return Ok((ChainEnd::Progress, steps));
                }
                if u > u0 {
                    return abort("ugliness increased during chain");
                }
            }
        }
        let arrived = new_comp.without(x);
        let t_idx = steps.len() - 1;
        if let Some(s) = steps[..t_idx].iter().position(|sr| sr.leftover == arrived) {
            let end = extract_wrap(st, mode, &steps, s)?;
            return Ok((end, steps));
        }
        // The measure is unchanged, so the landing component carries it on.
        match mode {
            ChainMode::T1Bad | ChainMode::T2Bad => {
                let still_bad = match flavor {
                    BadnessMode::Obstruction => comp_is_bad_t1(st.g, &new_comp, st.r[target], st.d),
                    BadnessMode::Regular => comp_is_bad_t2(st.g, &new_comp, st.r[target], st.d),
                };
                if !still_bad {
                    return abort("badness unchanged but landing component not bad");
                }
            }
            ChainMode::T2Ugly => {
                if !comp_is_ugly(st.g, &new_comp, st.r[target], st.d) {
                    return abort("ugliness unchanged but landing component not ugly");
                }
            }
        }
        prev = Some(x);
        cur_comp = new_comp;
        cur_part = target;
    }
    abort("chain iteration bound exceeded")
}

fn redo(st: &mut SearchState<'_>, steps: &[ChainStep]) {
    for sr in steps.iter() {
        st.apply(sr.vertex, sr.to);
    }
}

fn rewind(st: &mut SearchState<'_>, steps: &[ChainStep]) {
    for sr in steps.iter().rev() {
        st.apply(sr.vertex, sr.from);
    }
}

/// Wrap analysis. Failed structure extraction restores the wrapped state and
/// reports a futile end; the caller diversifies instead of aborting, since
/// local search does not enjoy the global minimality the full rigidity
/// argument assumes.
fn extract_wrap(
    st: &mut SearchState<'_>,
    mode: ChainMode,
    steps: &[ChainStep],
    s: usize,
) -> std::result::Result<ChainEnd, ChainAbort> {
    match mode {
        ChainMode::T1Bad => {
            rewind(st, &steps[s..]);
            match extract_clique(st, &steps[s]) {
                Ok(qs) => Ok(ChainEnd::Clique(qs)),
                Err(e) => {
                    redo(st, &steps[s..]);
                    Ok(ChainEnd::Futile { msg: e.msg })
                }
            }
        }
        ChainMode::T2Bad => {
            rewind(st, &steps[s..]);
            match extract_join(st, &steps[s]) {
                Ok((clique_part, independent_part)) => {
                    Ok(ChainEnd::Join { clique_part, independent_part })
                }
                Err(e) => {
                    redo(st, &steps[s..]);
                    Ok(ChainEnd::Futile { msg: e.msg })
                }
            }
        }
        ChainMode::T2Ugly => {
            let t_idx = steps.len() - 1;
            let s_rec = &steps[s];
            let t_rec = &steps[t_idx];
            let s_bad = comp_is_bad_t2(st.g, &s_rec.component, st.r[s_rec.from], st.d);
            let t_bad = comp_is_bad_t2(st.g, &t_rec.component, st.r[t_rec.from], st.d);
            if s_bad && t_bad {
                rewind(st, &steps[s..]);
                match extract_join(st, &steps[s]) {
                    Ok((clique_part, independent_part)) => {
                        Ok(ChainEnd::Join { clique_part, independent_part })
                    }
                    Err(e) => {
                        redo(st, &steps[s..]);
                        Ok(ChainEnd::Futile { msg: e.msg })
                    }
                }
            } else if s_bad {
                rewind(st, &steps[t_idx..]);
                Ok(b_witness_or_swap(st, steps, s, t_idx))
            } else {
                Ok(ChainEnd::Futile { msg: "wrap onto a merely ugly component".into() })
            }
        }
    }
}

/// Assembles the first theorem's structured outcome at the rewound state.
///
/// The wrapping component leads the slot order; for every other part the
/// pivot vertex is (virtually) moved there and the component it forms must be
/// a complete, bad obstruction. Universality of the degree-d witnesses over
/// the union is what makes `|Q| = d + 1` forced.
fn extract_clique(
    st: &SearchState<'_>,
    s_rec: &ChainStep,
) -> std::result::Result<QStructure, ChainAbort> {
    let g = st.g;
    let d = st.d;
    let x1 = s_rec.vertex;
    let j0 = s_rec.from;
    let a1 = &s_rec.component;
    ensure(
        st.comp_of_in(x1, &st.parts[j0]) == *a1,
        "rewound state does not reproduce the wrap component",
    )?;
    ensure(
        comp_is_bad_t1(g, a1, st.r[j0], d),
        "wrap component is not a bad obstruction",
    )?;
    ensure(
        st.r[j0] >= 3 || a1.len() == 3,
        "odd-cycle wrap component is not a triangle",
    )?;
    let mut part_order = vec![j0];
    part_order.extend((0..st.k).filter(|&l| l != j0));
    let mut cliques = vec![a1.clone()];
    for &l in &part_order[1..] {
        let ext = st.parts[l].with(x1);
        let b = st.comp_of_in(x1, &ext);
        ensure(
            comp_is_obstruction(g, &b, st.r[l]),
            format!("pivot move into part {l} creates no obstruction"),
        )?;
        ensure(
            comp_is_bad_t1(g, &b, st.r[l], d),
            format!("pivot obstruction in part {l} is not bad"),
        )?;
        ensure(
            st.r[l] >= 3 || b.len() == 3,
            format!("pivot odd-cycle obstruction in part {l} is not a triangle"),
        )?;
        cliques.push(b.without(x1));
    }
    let budgets: Vec<usize> = part_order.iter().map(|&l| st.r[l]).collect();
    let mut q = VertexSet::empty(g.n());
    for c in &cliques {
        ensure(q.is_disjoint(c), "assembled cliques overlap")?;
        q.union_with(c);
    }
    ensure(
        q.len() == d + 1,
        format!("assembled Q has {} vertices, expected {}", q.len(), d + 1),
    )?;
    let mut witnesses = Vec::new();
    for (slot, c) in cliques.iter().enumerate() {
        ensure(
            g.induced(c.clone()).is_complete(),
            format!("assembled slot {slot} is not a clique"),
        )?;
        let expected = if slot == 0 { budgets[slot] + 1 } else { budgets[slot] };
        ensure(
            c.len() == expected,
            format!("slot {slot} has {} vertices, expected {expected}", c.len()),
        )?;
        let mut w = VertexSet::empty(g.n());
        for v in c.iter() {
            if g.degree(v) == d {
                w.insert(v);
            }
        }
        ensure(
            w.len() >= if slot == 0 { 2 } else { 1 },
            format!("slot {slot} witness count below bound"),
        )?;
        for v in w.iter() {
            ensure(
                g.neighbors(v).intersection_len(&q) == q.len() - 1,
                format!("witness {v} is not universal in Q"),
            )?;
        }
        witnesses.push(w);
    }
    Ok(QStructure { q, cliques, witnesses, part_order, budgets })
}

/// Assembles the degeneracy theorem's join witness at the rewound state.
fn extract_join(
    st: &SearchState<'_>,
    s_rec: &ChainStep,
) -> std::result::Result<(VertexSet, VertexSet), ChainAbort> {
    let g = st.g;
    let d = st.d;
    let k = st.k;
    let x1 = s_rec.vertex;
    let j0 = s_rec.from;
    let a1 = &s_rec.component;
    ensure(
        st.comp_of_in(x1, &st.parts[j0]) == *a1,
        "rewound state does not reproduce the wrap component",
    )?;
    ensure(
        comp_is_bad_t2(g, a1, st.r[j0], d),
        "wrap component is not a bad regular component",
    )?;
    ensure(
        g.induced(a1.clone()).is_complete(),
        "wrap component is not complete",
    )?;
    let mut q = a1.clone();
    for l in (0..k).filter(|&l| l != j0) {
        let ext = st.parts[l].with(x1);
        let b = st.comp_of_in(x1, &ext);
        ensure(
            comp_is_regular(g, &b, st.r[l]),
            format!("pivot move into part {l} creates no regular component"),
        )?;
        ensure(
            comp_is_bad_t2(g, &b, st.r[l], d),
            format!("pivot component in part {l} is not bad"),
        )?;
        ensure(
            g.induced(b.clone()).is_complete(),
            format!("pivot component in part {l} is not complete"),
        )?;
        let rest = b.without(x1);
        ensure(q.is_disjoint(&rest), "assembled components overlap")?;
        q.union_with(&rest);
    }
    ensure(
        q.len() == d + 1,
        format!("assembled join has {} vertices, expected {}", q.len(), d + 1),
    )?;
    let mut clique_part = VertexSet::empty(g.n());
    let mut independent_part = VertexSet::empty(g.n());
    for v in q.iter() {
        ensure(g.degree(v) >= d, format!("vertex {v} in join has host degree < d"))?;
        if g.degree(v) == d {
            clique_part.insert(v);
        } else {
            independent_part.insert(v);
        }
    }
    ensure(
        clique_part.len() + k >= d + 1,
        format!("degree-d part has {} vertices, below d + 1 - k", clique_part.len()),
    )?;
    for v in clique_part.iter() {
        ensure(
            g.neighbors(v).intersection_len(&q) == q.len() - 1,
            format!("degree-d vertex {v} is not universal in the join"),
        )?;
    }
    Ok((clique_part, independent_part))
}

/// At a wrap whose source component is bad but whose final component is not,
/// the final component either exposes a clique-neighborhood witness or the
/// two-for-one exchange strictly improves f.
fn b_witness_or_swap(
    st: &mut SearchState<'_>,
    steps: &[ChainStep],
    s: usize,
    t_idx: usize,
) -> ChainEnd {
    let g = st.g;
    let d = st.d;
    let t_rec = &steps[t_idx];
    let d_t = t_rec.component.clone();
    let part_t = t_rec.from;
    let futile = |msg: &str| ChainEnd::Futile { msg: msg.to_string() };
    if st.comp_of_in(t_rec.vertex, &st.parts[part_t]) != d_t {
        return futile("rewound state does not reproduce the final component");
    }
    // The vertex whose arrival formed the final component.
    let probe = if t_idx >= 1 {
        steps[t_idx - 1].vertex
    } else {
        return futile("wrap after the first move");
    };
    if !d_t.contains(probe) {
        return futile("arriving vertex left its component");
    }
    let mov_t = movable_set(g, &d_t, d);
    let t_nb: Vec<usize> = g
        .neighbors(probe)
        .intersection(&d_t)
        .iter()
        .filter(|&y| g.degree(y) == d)
        .collect();
    let is_clique = t_nb
        .iter()
        .all(|&a| t_nb.iter().all(|&b| a == b || g.has_edge(a, b)));
    if mov_t.contains(probe) && is_clique {
        return ChainEnd::BWitness { part: part_t, component: d_t, vertex: probe };
    }
    // Two-for-one exchange: bring a movable neighbor z of the source pivot
    // over and send a nonadjacent degree-d pair back.
    let s_rec = &steps[s];
    let mov_s = movable_set(g, &s_rec.component, d);
    let z_cands: Vec<usize> = g.neighbors(s_rec.vertex).intersection(&mov_s).to_vec();
    let mut pairs = Vec::new();
    for (i, &a) in t_nb.iter().enumerate() {
        for &b in &t_nb[i + 1..] {
            if !g.has_edge(a, b) {
                pairs.push((a, b));
            }
        }
    }
    for &z in &z_cands {
        let pz = st.assign[z];
        if pz == part_t {
            continue;
        }
        for &(w1, w2) in &pairs {
            if st.assign[w1] != part_t || st.assign[w2] != part_t || w1 == z || w2 == z {
                continue;
            }
            let f0 = st.f;
            st.apply(z, part_t);
            st.apply(w1, pz);
            st.apply(w2, pz);
            if st.f < f0 {
                return ChainEnd::Progress;
            }
            st.apply(w2, part_t);
            st.apply(w1, part_t);
            st.apply(z, pz);
        }
    }
    futile("no clique-neighborhood witness and no improving exchange")
}

/// Outcome of a single public chain run.
#[derive(Debug)]
pub enum ChainRunOutcome {
    /// No bad component: nothing to do, input partition returned unchanged.
    Unchanged,
    /// A measure strictly improved (badness, component count, or f).
    Improved,
    /// The chain wrapped and assembled the clique structure.
    WrappedClique(QStructure),
    /// The chain wrapped and assembled the join structure.
    WrappedJoin {
        clique_part: VertexSet,
        independent_part: VertexSet,
    },
}

/// Result of [`run_move_chain`]: the partition after the run plus the chain log.
#[derive(Debug)]
pub struct ChainRun {
    pub partition: OrderedPartition,
    pub outcome: ChainRunOutcome,
    pub chain: MoveChain,
}

/// Runs a single move chain on the first bad component of `p`, if any.
///
/// This is the inner engine step exposed for inspection; the theorem-level
/// searches iterate it together with descent.
pub fn run_move_chain(
    g: &Graph,
    p: &OrderedPartition,
    r: &RVector,
    d: usize,
    mode: BadnessMode,
) -> Result<ChainRun> {
    if p.k() != r.k() || p.host_n() != g.n() || !p.is_valid() {
        return Err(Error::Precondition(
            "partition and budget vector must agree with the graph".into(),
        ));
    }
    let mut st = SearchState::from_partition(g, r, d, p, true);
    let Some((part, comp)) = first_bad_component(&st, mode) else {
        return Ok(ChainRun {
            partition: p.clone(),
            outcome: ChainRunOutcome::Unchanged,
            chain: MoveChain::default(),
        });
    };
    let cmode = match mode {
        BadnessMode::Obstruction => ChainMode::T1Bad,
        BadnessMode::Regular => ChainMode::T2Bad,
    };
    match run_chain(&mut st, cmode, comp, part, None) {
        Ok((end, steps)) => {
            let outcome = match end {
                ChainEnd::Progress => ChainRunOutcome::Improved,
                ChainEnd::Clique(qs) => ChainRunOutcome::WrappedClique(qs),
                ChainEnd::Join { clique_part, independent_part } => {
                    ChainRunOutcome::WrappedJoin { clique_part, independent_part }
                }
                ChainEnd::BWitness { .. } | ChainEnd::Futile { .. } => ChainRunOutcome::Improved,
            };
            Ok(ChainRun {
                partition: st.partition(),
                outcome,
                chain: MoveChain { steps },
            })
        }
        Err(abort) => Err(Error::Engine {
            msg: abort.msg,
            trace: std::mem::take(&mut st.trace),
        }),
    }
}
