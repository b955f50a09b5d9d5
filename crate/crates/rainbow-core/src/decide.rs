//! Total decision procedures for edge-disjoint families: monochromatic cut
//! versus rainbow cycle, the exact cut oracle, and the star/cycle
//! decomposition used by the odd-cycle characterization.

use crate::graph::{self, CycleFamily, Edge, EdgeSet, Vertex, VertexSet};
use crate::search::{self, RainbowCycleCert, RainbowSet};
use crate::Error;
use std::collections::VecDeque;
use std::ops::ControlFlow;

/// Largest vertex set [`find_monochromatic_cut`] will enumerate bipartitions
/// of.
pub const CUT_ORACLE_VERTEX_CAP: usize = 20;

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Partition of the family's vertices crossed by edges of exactly one color.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoCutCert {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub crossing_color: usize,
}

impl MonoCutCert {
    fn crosses(&self, e: Edge) -> bool {
        self.side_a.contains(e.u()) != self.side_a.contains(e.v())
    }

    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return Err("cut sides must be nonempty".into());
        }
        if !self.side_a.is_disjoint(&self.side_b) {
            return Err("cut sides overlap".into());
        }
        if self.side_a.union(&self.side_b) != family.union().vertices() {
            return Err("cut sides must partition the union's vertices".into());
        }
        let mut cross = 0usize;
        for (i, m) in family.members().iter().enumerate() {
            if m.iter().any(|e| self.crosses(e)) {
                if i != self.crossing_color {
                    return Err(format!("member {i} also crosses the cut"));
                }
                cross += 1;
            }
        }
        if cross == 0 {
            return Err("crossing color has no crossing edge".into());
        }
        Ok(())
    }
}

/// Either branch of the total procedure.
#[derive(Clone, Debug)]
pub enum CutOrCycle {
    Cut(MonoCutCert),
    Cycle(RainbowCycleCert),
}

// ---------------------------------------------------------------------------
// Reconnection digraph
// ---------------------------------------------------------------------------

/// Digraph on color indices: an arc `i -> j` (for `j != i`) records that some
/// edge of member `j` reconnects the spanning tree with `e_i` removed, i.e.
/// crosses the fundamental cut of `e_i`.
///
/// When the family has no monochromatic cut, every node has out-degree at
/// least one, so a directed circuit exists.
#[derive(Clone, Debug)]
pub struct ReconnectionDigraph {
    arcs: Vec<Vec<usize>>,
}

impl ReconnectionDigraph {
    /// Builds the digraph for tree edges `e_i` (one per member) whose
    /// fundamental cuts are described by `cut_side[i]` (the component of
    /// `T - e_i` as a vertex set).
    fn build(family: &CycleFamily, cut_side: &[VertexSet]) -> Self {
        let n = family.len();
        let mut arcs = vec![Vec::new(); n];
        for (i, side) in cut_side.iter().enumerate() {
            for (j, member) in family.members().iter().enumerate() {
                if j != i && member.iter().any(|f| crosses(side, f)) {
                    arcs[i].push(j);
                }
            }
        }
        ReconnectionDigraph { arcs }
    }

    #[cfg(test)]
    fn from_arcs(arcs: Vec<Vec<usize>>) -> Self {
        ReconnectionDigraph { arcs }
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs_from(&self, i: usize) -> &[usize] {
        &self.arcs[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arcs[i].len()
    }

    /// Shortest directed circuit, lexicographically smallest among the
    /// shortest ones; `None` on an acyclic digraph.
    ///
    /// A shortest circuit is necessarily simple, and minimality guarantees
    /// it has no chords among its nodes — the property the symmetric
    /// difference step of [`cut_or_rainbow_cycle`] relies on.
    pub fn min_circuit(&self) -> Option<Vec<usize>> {
        let n = self.arcs.len();
        // dist_to[s][x] = length of the shortest x -> s path.
        let dist_to: Vec<Vec<usize>> = (0..n).map(|s| self.distances_to(s)).collect();
        let girth = (0..n)
            .filter_map(|s| {
                self.arcs[s]
                    .iter()
                    .map(|&y| dist_to[s][y].saturating_add(1))
                    .min()
            })
            .min()
            .filter(|&g| g < usize::MAX)?;
        let start = (0..n)
            .find(|&s| {
                self.arcs[s]
                    .iter()
                    .any(|&y| dist_to[s][y].saturating_add(1) == girth)
            })
            .expect("some node realizes the girth");
        // Greedy lexicographic walk: each step picks the smallest successor
        // that still closes the circuit in exactly the remaining number of
        // arcs. Minimality makes every such walk simple.
        let mut circuit = vec![start];
        let mut cur = start;
        for remaining in (1..girth).rev() {
            cur = *self.arcs[cur]
                .iter()
                .find(|&&y| dist_to[start][y] == remaining)
                .expect("girth walk cannot get stuck");
            debug_assert!(!circuit.contains(&cur));
            circuit.push(cur);
        }
        debug_assert!(self.arcs[cur].contains(&start));
        Some(circuit)
    }

    /// BFS distances to `s` along reversed arcs.
    fn distances_to(&self, s: usize) -> Vec<usize> {
        let n = self.arcs.len();
        let mut rev = vec![Vec::new(); n];
        for (x, outs) in self.arcs.iter().enumerate() {
            for &y in outs {
                rev[y].push(x);
            }
        }
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &p in &rev[x] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[x] + 1;
                    queue.push_back(p);
                }
            }
        }
        dist
    }
}

fn crosses(side: &VertexSet, e: Edge) -> bool {
    side.contains(e.u()) != side.contains(e.v())
}

// ---------------------------------------------------------------------------
// Cut or rainbow cycle
// ---------------------------------------------------------------------------

/// Total procedure: every edge-disjoint family of `n` nonempty subgraphs on
/// an ambient of at most `n + 1` vertices yields a monochromatic cut or a
/// rainbow cycle.
///
/// The steps, fully deterministic:
/// 1. Take the canonically smallest edge `e_i` of each member. If the
///    transversal `T` contains a cycle, that cycle is rainbow.
/// 2. Otherwise `T` is a rainbow spanning tree. Build the
///    [`ReconnectionDigraph`]; a node of out-degree zero certifies that its
///    fundamental cut is monochromatic (smallest such node wins).
/// 3. Otherwise walk a minimum circuit `c_0 -> .. -> c_{k-1} -> c_0`. Each
///    `f_i` is the smallest edge of member `c_i` crossing the fundamental
///    cut of `e_{c_{i-1}}`, and `O_i` is its fundamental cycle. If some
///    `O_i` misses `e_{c_i}`, it is itself rainbow. Otherwise circuit
///    minimality makes the tree edges `e_{c_i}` cancel in
///    `O = O_0 xor .. xor O_{k-1}`, leaving a nonempty Eulerian rainbow
///    edge set whose first cycle is returned.
pub fn cut_or_rainbow_cycle(family: &CycleFamily) -> Result<CutOrCycle, Error> {
    let n = family.len();
    assert!(n >= 1, "the procedure needs at least one member");
    check_edge_disjoint(family)?;
    if family.n() > n + 1 {
        return Err(Error::AmbientTooLarge {
            found: family.n(),
            max: n + 1,
        });
    }

    // Branch 1: transversal of smallest edges.
    let picks: Vec<Edge> = family
        .members()
        .iter()
        .map(|m| m.iter().next().expect("members are nonempty"))
        .collect();
    let tree = EdgeSet::from_edges(family.n(), picks.iter().copied());
    let color_of_pick = |e: Edge| picks.iter().position(|&p| p == e).unwrap();
    if graph::has_cycle(&tree) {
        let mut found = None;
        let _ = search::for_each_cycle_in(&tree, graph::ParityFilter::Any, n, &mut |seq| {
            found = Some(seq.to_vec());
            ControlFlow::Break(())
        });
        let seq = found.expect("a cyclic edge set contains a simple cycle");
        let mut r = RainbowSet::empty(family.n());
        for i in 0..seq.len() {
            let e = Edge::new(seq[i], seq[(i + 1) % seq.len()]);
            r.insert(e, color_of_pick(e));
        }
        return Ok(CutOrCycle::Cycle(certify(r, family)));
    }

    // An acyclic transversal has n edges, hence touches n + 1 distinct
    // vertices; that forces the ambient to be exactly n + 1, spanned by T.
    debug_assert_eq!(family.n(), n + 1);
    debug_assert_eq!(tree.vertices().len(), n + 1);

    // Fundamental cut of e_i: one component of T - e_i, as a vertex set.
    let cut_side: Vec<VertexSet> = picks.iter().map(|&e| fundamental_side(&tree, e)).collect();

    // Branch 2: out-degree-0 node => monochromatic cut.
    let digraph = ReconnectionDigraph::build(family, &cut_side);
    if let Some(i) = (0..n).find(|&i| digraph.out_degree(i) == 0) {
        let all = tree.vertices();
        let side = cut_side[i];
        let (side_a, side_b) = if side.contains(all.min().unwrap()) {
            (side, all.difference(&side))
        } else {
            (all.difference(&side), side)
        };
        return Ok(CutOrCycle::Cut(MonoCutCert {
            side_a,
            side_b,
            crossing_color: i,
        }));
    }

    // Branch 3: minimum circuit and symmetric difference.
    let circuit = digraph
        .min_circuit()
        .expect("minimum out-degree >= 1 forces a circuit");
    let k = circuit.len();
    let mut fs: Vec<Edge> = Vec::with_capacity(k);
    let mut fundamentals: Vec<EdgeSet> = Vec::with_capacity(k);
    for i in 0..k {
        let color = circuit[i];
        let prev = circuit[(i + k - 1) % k];
        let f = family
            .member(color)
            .iter()
            .find(|&f| crosses(&cut_side[prev], f))
            .expect("the circuit arc promises a crossing edge");
        let mut o = EdgeSet::from_edges(family.n(), tree_path(&tree, f.u(), f.v()));
        o.insert(f);
        if !o.contains(picks[color]) {
            // The fundamental cycle avoids its own color's tree edge, so
            // every edge carries a distinct color already.
            let mut r = RainbowSet::empty(family.n());
            for e in o.iter() {
                r.insert(e, if e == f { color } else { color_of_pick(e) });
            }
            return Ok(CutOrCycle::Cycle(certify(r, family)));
        }
        fs.push(f);
        fundamentals.push(o);
    }
    let o = graph::symmetric_difference(&fundamentals);
    // Inclusion chain from circuit minimality: every f_i survives, every
    // circuit tree edge cancels.
    for (i, &f) in fs.iter().enumerate() {
        assert!(o.contains(f), "f_{i} must survive the symmetric difference");
    }
    for e in o.iter() {
        assert!(
            fs.contains(&e) || (tree.contains(e) && !circuit.contains(&color_of_pick(e))),
            "edge {e} violates the inclusion chain"
        );
    }
    let cycles = graph::eulerian_cycle_decomposition(&o)
        .expect("a symmetric difference of cycles has even degrees");
    let first = &cycles[0];
    let mut r = RainbowSet::empty(family.n());
    for e in first.iter() {
        let color = match fs.iter().position(|&f| f == e) {
            Some(pos) => circuit[pos],
            None => color_of_pick(e),
        };
        r.insert(e, color);
    }
    Ok(CutOrCycle::Cycle(certify(r, family)))
}

fn certify(r: RainbowSet, family: &CycleFamily) -> RainbowCycleCert {
    let cert = RainbowCycleCert::from_rainbow(r);
    debug_assert_eq!(cert.validate(family), Ok(()));
    cert
}

/// The component of `tree - e` containing `e.u()`, as a vertex set.
fn fundamental_side(tree: &EdgeSet, e: Edge) -> VertexSet {
    let mut side = VertexSet::singleton(e.u());
    let mut stack = vec![e.u()];
    while let Some(x) = stack.pop() {
        for w in tree.neighbors(x) {
            if Edge::new(x, w) != e && !side.contains(w) {
                side.insert(w);
                stack.push(w);
            }
        }
    }
    side
}

/// Edges of the unique `u`-`v` path in a tree.
fn tree_path(tree: &EdgeSet, u: Vertex, v: Vertex) -> Vec<Edge> {
    let mut parent: Vec<Option<Vertex>> = vec![None; tree.n()];
    let mut queue = VecDeque::from([u]);
    let mut seen = VertexSet::singleton(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for w in tree.neighbors(x) {
            if !seen.contains(w) {
                seen.insert(w);
                parent[w] = Some(x);
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = v;
    while cur != u {
        let p = parent[cur].expect("tree connects u and v");
        path.push(Edge::new(cur, p));
        cur = p;
    }
    path
}

fn check_edge_disjoint(family: &CycleFamily) -> Result<(), Error> {
    for (i, m) in family.members().iter().enumerate() {
        if m.is_empty() {
            return Err(Error::EmptyMember(i));
        }
    }
    if let Some((i, j, edge)) = family.find_shared_edge() {
        return Err(Error::SharedEdge { i, j, edge });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Exact cut oracle
// ---------------------------------------------------------------------------

/// Exhaustive monochromatic-cut search over all bipartitions of the union's
/// vertices (at most [`CUT_ORACLE_VERTEX_CAP`] of them).
///
/// Returns the first witness in deterministic order: the side containing the
/// smallest vertex is enumerated by ascending bit pattern of its remaining
/// members.
pub fn find_monochromatic_cut(family: &CycleFamily) -> Result<Option<MonoCutCert>, Error> {
    check_edge_disjoint(family)?;
    let verts = family.union().vertices();
    let count = verts.len();
    if count > CUT_ORACLE_VERTEX_CAP {
        return Err(Error::VertexBudgetExceeded {
            count,
            cap: CUT_ORACLE_VERTEX_CAP,
        });
    }
    if count < 2 {
        return Ok(None);
    }
    let vs = verts.to_vec();
    let (anchor, rest) = vs.split_first().unwrap();
    for mask in 0..(1u64 << rest.len()) - 1 {
        let mut side_a = VertexSet::singleton(*anchor);
        for (b, &v) in rest.iter().enumerate() {
            if mask >> b & 1 == 1 {
                side_a.insert(v);
            }
        }
        let side_b = verts.difference(&side_a);
        let mut crossing = None;
        let mut ok = true;
        for (i, m) in family.members().iter().enumerate() {
            if m.iter().any(|e| crosses(&side_a, e)) {
                if crossing.is_some() {
                    ok = false;
                    break;
                }
                crossing = Some(i);
            }
        }
        if ok {
            if let Some(crossing_color) = crossing {
                let cert = MonoCutCert {
                    side_a,
                    side_b,
                    crossing_color,
                };
                debug_assert_eq!(cert.validate(family), Ok(()));
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Star/cycle decomposition
// ---------------------------------------------------------------------------

/// Result of [`star_cycle_decompose`]: member indices of the `l` cycles
/// avoiding the pivot, and the vertex set of their union together with the
/// first star — at most `l + 2` vertices.
#[derive(Clone, Debug)]
pub struct StarCycleDecomposition {
    pub cycles: Vec<usize>,
    pub witness_vertices: VertexSet,
}

/// For a rainbow-cycle-free family of stars at `v` and cycles on an ambient
/// of `m + 1` vertices whose first member is a star, finds `l` cycles
/// avoiding `v` (`0 < l < m`) whose union with the first member spans at
/// most `l + 2` vertices.
///
/// Construction: grow a maximal rainbow tree through `v` over the members
/// beyond the first (lowest color, then smallest edge). Absence of rainbow
/// cycles forces every unrepresented member to be a cycle vertex-disjoint
/// from the tree, and those cycles — squeezed, along with the star's
/// leaves, into the vertices the tree missed plus `v` — are the answer.
pub fn star_cycle_decompose(
    family: &CycleFamily,
    v: Vertex,
) -> Result<StarCycleDecomposition, Error> {
    let m = family.len();
    assert!(m >= 2, "the decomposition needs at least two members");
    assert_eq!(family.n(), m + 1, "ambient must have m + 1 vertices");

    let is_star = |e: &EdgeSet| e.len() >= 2 && e.iter().all(|f| f.touches(v));
    if !is_star(family.member(0)) {
        return Err(Error::NotAStar(0));
    }
    for (i, member) in family.members().iter().enumerate() {
        if !is_star(member) && graph::is_cycle(member).is_none() {
            return Err(Error::NotStarOrCycle(i));
        }
    }
    for (i, member) in family.members().iter().enumerate() {
        if !is_star(member) {
            continue;
        }
        for (j, other) in family.members().iter().enumerate() {
            if i == j {
                continue;
            }
            let shared = member.intersection(other);
            let first = shared.iter().next();
            if let Some(edge) = first {
                let (i, j) = (i.min(j), i.max(j));
                return Err(Error::SharedEdge { i, j, edge });
            }
        }
    }
    if search::exhaustive_rainbow_cycle(family, graph::ParityFilter::Any).is_some() {
        return Err(Error::RainbowCyclePresent);
    }

    // Maximal rainbow tree through v over members 1..m.
    let mut tree_vertices = VertexSet::singleton(v);
    let mut represented = vec![false; m];
    represented[0] = true; // the star never joins the tree
    'grow: loop {
        for i in 1..m {
            if represented[i] {
                continue;
            }
            for e in family.member(i).iter() {
                if tree_vertices.contains(e.u()) != tree_vertices.contains(e.v()) {
                    tree_vertices.insert(e.u());
                    tree_vertices.insert(e.v());
                    represented[i] = true;
                    continue 'grow;
                }
            }
        }
        break;
    }

    let cycles: Vec<usize> = (1..m).filter(|&i| !represented[i]).collect();
    let l = cycles.len();
    assert_eq!(l, m - tree_vertices.len(), "tree edges each add one vertex");
    let mut witness = family.member(0).vertices();
    for &i in &cycles {
        let member = family.member(i);
        assert!(
            graph::is_cycle(member).is_some()
                && member.vertices().is_disjoint(&tree_vertices),
            "a rainbow-cycle-free family leaves only tree-disjoint cycles unrepresented"
        );
        witness = witness.union(&member.vertices());
    }
    assert!(0 < l && l < m, "the cycle count must be strictly between 0 and m");
    assert!(
        witness.len() <= l + 2,
        "witness spans {} vertices, over the {} allowed",
        witness.len(),
        l + 2
    );
    Ok(StarCycleDecomposition {
        cycles,
        witness_vertices: witness,
    })
}

// ---------------------------------------------------------------------------
