//! Simple undirected graphs with bitset adjacency, the named constructions
//! (`K_t`, `E_t`, joins, `O_n`), and the structural queries the partition and
//! coloring engines consume: components, cut vertices, cliques, cycles,
//! degeneracy, isomorphism and host-degree restrictions.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph on dense vertex ids `0..n`.
///
/// Adjacency is stored as one bitset per vertex; there are no self-loops and
/// the relation is kept symmetric by construction. Graphs are immutable after
/// they are built and cheap to share.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds an undirected edge. Panics on loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighborhood `N(v)` as a bitset.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `d_D(v) = |N(v) ∩ D|`.
    pub fn degree_in(&self, v: usize, within: &VertexSet) -> usize {
        self.adj[v].intersection_len(within)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The whole graph as an induced subgraph of itself.
    pub fn full(&self) -> Subgraph<'_> {
        Subgraph { host: self, support: VertexSet::full(self.n) }
    }

    /// `G[support]` as a view that keeps the host reachable for host-degree
    /// queries.
    pub fn induced(&self, support: VertexSet) -> Subgraph<'_> {
        debug_assert_eq!(support.universe(), self.n);
        Subgraph { host: self, support }
    }

    pub fn is_connected(&self) -> bool {
        self.full().is_connected()
    }

    /// A new graph with vertex `v` removed and higher ids shifted down.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let map = |u: usize| if u < v { u } else { u - 1 };
        let mut g = Graph::new(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b));
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

/// The complete graph `K_t`.
pub fn build_complete(t: usize) -> Graph {
    let mut g = Graph::new(t);
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v);
        }
    }
    g
}

/// The edgeless graph `E_t`.
pub fn build_edgeless(t: usize) -> Graph {
    Graph::new(t)
}

/// The cycle `C_t` (`t >= 3`); smaller `t` degenerate to a path/point.
pub fn build_cycle(t: usize) -> Graph {
    let mut g = Graph::new(t);
    if t >= 3 {
        for v in 0..t {
            g.add_edge(v, (v + 1) % t);
        }
    } else if t == 2 {
        g.add_edge(0, 1);
    }
    g
}

/// The path `P_t` on `t` vertices.
pub fn build_path(t: usize) -> Graph {
    let mut g = Graph::new(t);
    for v in 1..t {
        g.add_edge(v - 1, v);
    }
    g
}

/// Join of `a` and `b`: disjoint union plus all edges between the two sides.
/// `a`'s vertices keep their ids, `b`'s are shifted by `|V(a)|`.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let na = a.n();
    let mut g = Graph::new(na + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v);
    }
    for u in 0..na {
        for v in 0..b.n() {
            g.add_edge(u, na + v);
        }
    }
    g
}

/// `O_n` with its labeled vertex roles.
///
/// Layout: `x = 0`, `y = 1`, the shared `K_{n-2}` core on `2..n`, the
/// disjoint `K_{n-1}` on `n..2n-1` whose first `⌊(n-1)/2⌋` vertices are
/// joined to `x` and the rest to `y`.
pub struct OnGraph {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    /// Vertices of `K_n - xy` other than `x`, `y`.
    pub core: VertexSet,
    /// The disjoint `K_{n-1}`.
    pub handle: VertexSet,
    /// Handle vertices joined to `x`.
    pub x_side: VertexSet,
    /// Handle vertices joined to `y`.
    pub y_side: VertexSet,
}

/// Builds `O_n`: `K_n` minus an edge `xy`, a disjoint `K_{n-1}`, with the
/// halves of the `K_{n-1}` joined to `x` and `y` respectively.
pub fn build_o_n(n: usize) -> Result<OnGraph> {
    if n < 3 {
        return Err(Error::Precondition(format!("O_n requires n >= 3, got {n}")));
    }
    let total = 2 * n - 1;
    let mut g = Graph::new(total);
    let (x, y) = (0, 1);
    // K_n on {x, y, core} minus the edge xy.
    for u in 0..n {
        for v in u + 1..n {
            if !(u == x && v == y) {
                g.add_edge(u, v);
            }
        }
    }
    // Disjoint K_{n-1} on n..2n-1.
    for u in n..total {
        for v in u + 1..total {
            g.add_edge(u, v);
        }
    }
    let lower = (n - 1) / 2;
    for (i, h) in (n..total).enumerate() {
        if i < lower {
            g.add_edge(x, h);
        } else {
            g.add_edge(y, h);
        }
    }
    let core = VertexSet::from_vertices(total, &(2..n).collect::<Vec<_>>());
    let handle = VertexSet::from_vertices(total, &(n..total).collect::<Vec<_>>());
    let x_side = VertexSet::from_vertices(total, &(n..n + lower).collect::<Vec<_>>());
    let y_side = handle.difference(&x_side);
    Ok(OnGraph { graph: g, x, y, core, handle, x_side, y_side })
}

/// An induced subgraph `G[support]` that retains its host, so host degrees
/// `d_G(v)` stay queryable alongside the induced structure.
#[derive(Clone)]
pub struct Subgraph<'g> {
    host: &'g Graph,
    support: VertexSet,
}

impl<'g> Subgraph<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn order(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.support.contains(v)
    }

    /// Number of induced edges.
    pub fn size(&self) -> usize {
        self.support
            .iter()
            .map(|v| self.host.adj[v].intersection_len(&self.support))
            .sum::<usize>()
            / 2
    }

    /// Degree of `v` inside the subgraph.
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(self.support.contains(v));
        self.host.adj[v].intersection_len(&self.support)
    }

    /// Induced neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.host.adj[v].intersection(&self.support)
    }

    pub fn max_degree(&self) -> usize {
        self.support.iter().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `δ_G(H)`: minimum host degree over the support. Rejects empty support.
    pub fn min_degree_in_host(&self) -> Result<usize> {
        self.support
            .iter()
            .map(|v| self.host.degree(v))
            .min()
            .ok_or_else(|| Error::Precondition("min_degree_in_host on empty subgraph".into()))
    }

    /// Restrict to a smaller support.
    pub fn restrict(&self, support: VertexSet) -> Subgraph<'g> {
        debug_assert!(support.is_subset(&self.support));
        Subgraph { host: self.host, support }
    }

    /// Connected components, each as an induced subgraph of the same host.
    pub fn components(&self) -> Vec<Subgraph<'g>> {
        let mut remaining = self.support.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.component_of(start);
            remaining.subtract_with(&comp);
            out.push(Subgraph { host: self.host, support: comp });
        }
        out
    }

    /// Support of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        debug_assert!(self.support.contains(v));
        let mut comp = VertexSet::singleton(self.support.universe(), v);
        let mut frontier = vec![v];
        while let Some(u) = frontier.pop() {
            let mut next = self.host.adj[u].intersection(&self.support);
            next.subtract_with(&comp);
            for w in next.iter() {
                comp.insert(w);
                frontier.push(w);
            }
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        match self.support.first() {
            None => true,
            Some(v) => self.component_of(v) == self.support,
        }
    }

    /// Vertices `v` such that `H - v` stays connected (for a single vertex,
    /// the vertex itself). Rejects disconnected input.
    pub fn non_cut_vertices(&self) -> Result<VertexSet> {
        let n = self.order();
        if n == 0 || !self.is_connected() {
            return Err(Error::Precondition(
                "non_cut_vertices requires a nonempty connected subgraph".into(),
            ));
        }
        if n == 1 {
            return Ok(self.support.clone());
        }
        let cuts = self.articulation_points();
        Ok(self.support.difference(&cuts))
    }

    /// Articulation points via iterative Tarjan lowlink.
    fn articulation_points(&self) -> VertexSet {
        let universe = self.support.universe();
        let mut cuts = VertexSet::empty(universe);
        let mut num = vec![usize::MAX; universe];
        let mut low = vec![0usize; universe];
        let mut counter = 0usize;

        for root in self.support.iter() {
            if num[root] != usize::MAX {
                continue;
            }
            // Explicit DFS stack: (vertex, parent, iterator state).
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            num[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push((root, usize::MAX, self.neighbors(root).to_vec(), 0));
            let mut root_children = 0usize;

            while !stack.is_empty() {
                let top = stack.len() - 1;
                let v = stack[top].0;
                if stack[top].3 < stack[top].2.len() {
                    let w = stack[top].2[stack[top].3];
                    stack[top].3 += 1;
                    let parent = stack[top].1;
                    if num[w] == usize::MAX {
                        if v == root {
                            root_children += 1;
                        }
                        num[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        let nb = self.neighbors(w).to_vec();
                        stack.push((w, v, nb, 0));
                    } else if w != parent {
                        low[v] = low[v].min(num[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(pv, _, _, _)) = stack.last() {
                        low[pv] = low[pv].min(low[v]);
                        if pv != root && low[v] >= num[pv] {
                            cuts.insert(pv);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cuts.insert(root);
            }
        }
        cuts
    }

    /// Exact clique number via branch and bound with a greedy coloring bound.
    pub fn max_clique_size(&self) -> usize {
        let (g, _) = self.to_graph();
        max_clique_exact(&g)
    }

    pub fn is_odd_cycle(&self) -> bool {
        let n = self.order();
        n >= 3 && n % 2 == 1 && self.support.iter().all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Degeneracy via repeated minimum-degree peeling.
    pub fn degeneracy(&self) -> usize {
        let mut remaining = self.support.clone();
        let mut deg: Vec<usize> = (0..self.support.universe())
            .map(|v| if remaining.contains(v) { self.degree(v) } else { 0 })
            .collect();
        let mut best = 0;
        while let Some(_) = remaining.first() {
            let v = remaining
                .iter()
                .min_by_key(|&v| (deg[v], v))
                .expect("nonempty");
            best = best.max(deg[v]);
            remaining.remove(v);
            for w in self.host.adj[v].intersection(&remaining).iter() {
                deg[w] -= 1;
            }
        }
        best
    }

    /// Compacts into a standalone graph; returns the local-to-host id map.
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = self.support.iter().collect();
        let mut inv = vec![usize::MAX; self.support.universe()];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.host.adj[v].intersection(&self.support).iter() {
                if inv[w] > i {
                    g.add_edge(i, inv[w]);
                }
            }
        }
        (g, map)
    }
}

/// Exact maximum clique on a compact graph: candidates kept as bitsets,
/// greedy coloring as the branch bound.
fn max_clique_exact(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let all = VertexSet::full(n);
    let mut best = 0;
    expand_clique(g, 0, all, &mut best);
    best
}

fn expand_clique(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // Greedy color classes over the candidates; class index bounds the clique
    // that can still be formed.
    let verts: Vec<usize> = cand.iter().collect();
    let mut color = vec![0usize; verts.len()];
    let mut classes: Vec<VertexSet> = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        let mut c = 0;
        while c < classes.len() && !g.neighbors(v).is_disjoint(&classes[c]) {
            c += 1;
        }
        if c == classes.len() {
            classes.push(VertexSet::empty(g.n()));
        }
        classes[c].insert(v);
        color[i] = c;
    }
    // Process candidates in descending color order.
    let mut order: Vec<usize> = (0..verts.len()).collect();
    order.sort_by_key(|&i| color[i]);
    let mut cand = cand;
    for &i in order.iter().rev() {
        let v = verts[i];
        if size + color[i] + 1 <= *best {
            return;
        }
        let next = cand.intersection(g.neighbors(v));
        expand_clique(g, size + 1, next, best);
        cand.remove(v);
    }
}

/// Exact isomorphism test via degree-refined backtracking; intended for
/// small graphs (classifier-scale, |V| up to ~16).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    // Order a's vertices by descending degree for early pruning.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    match_next(a, b, &order, 0, &mut map, &mut used)
}

fn match_next(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    idx: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let u = order[idx];
    'cand: for w in 0..b.n() {
        if used[w] || a.degree(u) != b.degree(w) {
            continue;
        }
        for &p in &order[..idx] {
            if a.has_edge(u, p) != b.has_edge(w, map[p]) {
                continue 'cand;
            }
        }
        map[u] = w;
        used[w] = true;
        if match_next(a, b, order, idx + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(build_complete(0).edge_count(), 0);
        assert_eq!(build_complete(1).edge_count(), 0);
        assert_eq!(build_complete(5).edge_count(), 10);
        assert_eq!(build_complete(5).n(), 5);
    }

    #[test]
    fn edgeless_graph() {
        assert_eq!(build_edgeless(3).n(), 3);
        assert_eq!(build_edgeless(3).edge_count(), 0);
        assert_eq!(build_edgeless(0).n(), 0);
        assert_eq!(build_edgeless(7).max_degree(), 0);
    }

    #[test]
    fn join_counts() {
        let k3 = join(&build_complete(2), &build_edgeless(1));
        assert!(isomorphic(&k3, &build_complete(3)));
        let g = join(&build_complete(3), &build_edgeless(3));
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 3 + 0 + 9);
        let h = join(&build_edgeless(0), &build_cycle(5));
        assert!(isomorphic(&h, &build_cycle(5)));
    }

    #[test]
    fn o5_construction() {
        let o5 = build_o_n(5).unwrap();
        let g = &o5.graph;
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 19);
        assert_eq!(g.degree(o5.x), 5);
        assert_eq!(g.degree(o5.y), 5);
        assert!(!g.has_edge(o5.x, o5.y));
        for v in o5.core.iter().chain(o5.handle.iter()) {
            assert_eq!(g.degree(v), 4);
        }
        assert_eq!(o5.x_side.len(), 2);
        assert_eq!(o5.y_side.len(), 2);
        assert!(build_o_n(2).is_err());
    }

    #[test]
    fn o_n_vertex_and_degree_pattern() {
        for n in 3..=7 {
            let on = build_o_n(n).unwrap();
            let g = &on.graph;
            assert_eq!(g.n(), 2 * n - 1);
            // x and y carry the joined halves on top of the K_n - xy part.
            assert_eq!(g.degree(on.x), n - 2 + (n - 1) / 2);
            assert_eq!(g.degree(on.y), n - 2 + n / 2);
            // Handshake.
            let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn components_examples() {
        let mut g = Graph::new(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        assert_eq!(g.full().components().len(), 2);
        assert_eq!(build_cycle(6).full().components().len(), 1);
        assert_eq!(build_edgeless(4).full().components().len(), 4);
    }

    #[test]
    fn non_cut_vertices_examples() {
        let path = build_path(3);
        assert_eq!(path.full().non_cut_vertices().unwrap().to_vec(), vec![0, 2]);
        let k4 = build_complete(4);
        assert_eq!(k4.full().non_cut_vertices().unwrap().len(), 4);
        let c5 = build_cycle(5);
        assert_eq!(c5.full().non_cut_vertices().unwrap().len(), 5);
        let two = build_edgeless(2);
        assert!(two.full().non_cut_vertices().is_err());
    }

    /// Brute-force cut check: v is non-cut iff H - v has at most one component.
    fn non_cut_brute(h: &Subgraph<'_>) -> VertexSet {
        let mut out = VertexSet::empty(h.support().universe());
        for v in h.support().iter() {
            let rest = h.support().without(v);
            let sub = h.host().induced(rest);
            if sub.components().len() <= 1 {
                out.insert(v);
            }
        }
        out
    }

    #[test]
    fn non_cut_matches_brute_force_small() {
        // Every connected isomorphism class with n <= 8.
        for n in 2..=8usize {
            for g in crate::oracle::enumerate_graphs(n, true).unwrap() {
                let f = g.full();
                assert_eq!(
                    f.non_cut_vertices().unwrap(),
                    non_cut_brute(&f),
                    "edges {:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(build_complete(6).full().max_clique_size(), 6);
        assert_eq!(build_cycle(5).full().max_clique_size(), 2);
        let o5 = build_o_n(5).unwrap();
        assert_eq!(o5.graph.full().max_clique_size(), 4);
    }

    /// Exhaustive clique search for cross-checking.
    fn clique_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0..(1u32 << n) {
            let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if vs
                .iter()
                .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
            {
                best = best.max(vs.len());
            }
        }
        best
    }

    /// Degeneracy as the max over all induced subgraphs of the minimum
    /// degree, by subset enumeration.
    fn degeneracy_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let vs = VertexSet::from_vertices(n, &(0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>());
            let sub = g.induced(vs.clone());
            let min_deg = vs.iter().map(|v| sub.degree(v)).min().unwrap();
            best = best.max(min_deg);
        }
        best
    }

    #[test]
    fn clique_and_degeneracy_match_brute_force() {
        // Every isomorphism class with n <= 7.
        let mut cases = 0;
        for n in 1..=7usize {
            for g in crate::oracle::enumerate_graphs(n, false).unwrap() {
                assert_eq!(g.full().max_clique_size(), clique_brute(&g), "{:?}", g.edges());
                assert_eq!(g.full().degeneracy(), degeneracy_brute(&g), "{:?}", g.edges());
                cases += 1;
            }
        }
        assert_eq!(cases, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    }

    #[test]
    fn cycle_predicates() {
        assert!(build_cycle(5).full().is_odd_cycle());
        assert!(!build_cycle(5).full().is_complete());
        assert!(build_complete(3).full().is_odd_cycle());
        assert!(build_complete(3).full().is_complete());
        let p4 = build_path(4);
        assert!(!p4.full().is_odd_cycle());
        assert!(!p4.full().is_complete());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(build_complete(5).full().degeneracy(), 4);
        assert_eq!(build_path(6).full().degeneracy(), 1);
        assert_eq!(build_cycle(6).full().degeneracy(), 2);
    }

    #[test]
    fn min_degree_in_host() {
        let c5 = build_cycle(5);
        assert_eq!(c5.full().min_degree_in_host().unwrap(), 2);
        let o5 = build_o_n(5).unwrap();
        let core0 = o5.core.first().unwrap();
        let h = o5
            .graph
            .induced(VertexSet::from_vertices(9, &[o5.x, core0]));
        assert_eq!(h.min_degree_in_host().unwrap(), 4);
        let empty = c5.induced(VertexSet::empty(5));
        assert!(empty.min_degree_in_host().is_err());
    }

    #[test]
    fn isomorphism_examples() {
        // K_4 against a label permutation of itself.
        let k4 = build_complete(4);
        let perm = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 0), (2, 3), (2, 0), (3, 0)]).unwrap();
        assert!(isomorphic(&k4, &perm));
        // C_6 vs 2 K_3: same degree sequence, different component counts.
        let c6 = build_cycle(6);
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&c6, &two_k3));
        // O_5 vs K_9 minus a perfect matching on 8 vertices: degree sequences differ.
        let o5 = build_o_n(5).unwrap().graph;
        let mut k9m = build_complete(9);
        let mut k9m2 = Graph::new(9);
        for (u, v) in k9m.edges() {
            let matched = [(0, 1), (2, 3), (4, 5), (6, 7)].contains(&(u, v));
            if !matched {
                k9m2.add_edge(u, v);
            }
        }
        k9m = k9m2;
        assert!(!isomorphic(&o5, &k9m));
    }

    proptest! {
        /// Handshake identity on arbitrary graphs.
        #[test]
        fn handshake(n in 0usize..12, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut s = seed;
            for u in 0..n {
                for v in u + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 33 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let sum: usize = (0..n).map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.edge_count());
        }

        /// Isomorphic graphs have equal degree multisets; isomorphism is reflexive
        /// and symmetric on random pairs.
        #[test]
        fn iso_degree_multiset(n in 1usize..7, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut s = seed;
            for u in 0..n {
                for v in u + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 33 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert!(isomorphic(&g, &g));
            // Relabel by rotation.
            let rel: Vec<_> = edges.iter().map(|&(u, v)| ((u + 1) % n, (v + 1) % n)).collect();
            let h = Graph::from_edges(n, &rel).unwrap();
            prop_assert!(isomorphic(&g, &h));
            prop_assert!(isomorphic(&h, &g));
            // Transitivity along a second rotation.
            let rel2: Vec<_> = rel.iter().map(|&(u, v)| ((u + 2) % n, (v + 2) % n)).collect();
            let j = Graph::from_edges(n, &rel2).unwrap();
            prop_assert!(isomorphic(&h, &j) && isomorphic(&g, &j));
            let mut dg: Vec<_> = (0..n).map(|v| g.degree(v)).collect();
            let mut dh: Vec<_> = (0..n).map(|v| h.degree(v)).collect();
            dg.sort_unstable();
            dh.sort_unstable();
            prop_assert_eq!(dg, dh);
        }
    }
}
