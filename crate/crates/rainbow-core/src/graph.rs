//! Graph primitives over a fixed ambient complete graph `K_n`.
//!
//! Vertices are plain `usize` ids in `[0, n)` with `n <= 64`, so a vertex
//! set packs into one `u64` ([`VertexSet`]) and an edge set into the
//! `C(n,2)` triangular bit slots of [`EdgeSet`]. Edges are unordered pairs
//! stored canonically (smaller endpoint first), and every iteration order in
//! this module is deterministic: edges ascend by triangular index, cycle
//! traversals start at the smallest vertex and move toward its smaller
//! neighbor.
//!
//! A [`CycleFamily`] is an ordered list of edge sets over one ambient `n`;
//! the position of a member is its *color*.

use crate::Error;
use itertools::Itertools;

/// Vertex id in `[0, n)` of the ambient `K_n`.
pub type Vertex = usize;

/// Largest supported ambient vertex count.
pub const MAX_VERTICES: usize = 64;

// ---------------------------------------------------------------------------
// Edge
// ---------------------------------------------------------------------------

/// Unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Canonical edge between two distinct vertices.
    ///
    /// Panics if `a == b`; loops are never representable.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    /// Given one endpoint, returns the other.
    pub fn other(&self, x: Vertex) -> Vertex {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// Triangular slot index: `v(v-1)/2 + u`. Independent of the ambient `n`.
    fn slot(&self) -> usize {
        self.v * (self.v - 1) / 2 + self.u
    }

    pub fn from_slot(slot: usize) -> Self {
        let mut v = 1usize;
        while (v + 1) * v / 2 <= slot {
            v += 1;
        }
        Edge {
            u: slot - v * (v - 1) / 2,
            v,
        }
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// Subset of `[0, 64)` packed into a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    // By-value receiver so this wins resolution against `Ord::min`.
    pub fn min(self) -> Option<Vertex> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let bits = self.0;
        (0..64).filter(move |v| bits >> v & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            assert!(v < MAX_VERTICES);
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// Parity
// ---------------------------------------------------------------------------

/// Parity of a cycle length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(len: usize) -> Self {
        if len % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Parity constraint accepted by searches and enumerators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ParityFilter {
    Odd,
    Even,
    Any,
}

impl ParityFilter {
    pub fn admits(&self, p: Parity) -> bool {
        match self {
            ParityFilter::Odd => p == Parity::Odd,
            ParityFilter::Even => p == Parity::Even,
            ParityFilter::Any => true,
        }
    }

    pub fn admits_len(&self, len: usize) -> bool {
        self.admits(Parity::of(len))
    }
}

// ---------------------------------------------------------------------------
// EdgeSet
// ---------------------------------------------------------------------------

/// Bit-packed subset of the edges of `K_n`.
///
/// The ambient `n` travels with the set; operations combining two sets
/// require equal ambients. Comparison and hashing are by `(n, bits)`, which
/// gives every deterministic ordering used elsewhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet {
    n: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "ambient vertex count {n} exceeds 64");
        let slots = n * n.saturating_sub(1) / 2;
        EdgeSet {
            n,
            words: vec![0; slots.div_ceil(64)],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let mut s = EdgeSet::new(n);
        for e in edges {
            s.insert(e);
        }
        s
    }

    /// Cycle through the given vertex sequence (closing last back to first).
    ///
    /// Convenience for tests and generators; panics unless the sequence has
    /// at least three distinct vertices.
    pub fn cycle(n: usize, vs: &[Vertex]) -> Self {
        assert!(vs.len() >= 3, "a cycle needs at least three vertices");
        let mut s = EdgeSet::new(n);
        for i in 0..vs.len() {
            let fresh = s.insert(Edge::new(vs[i], vs[(i + 1) % vs.len()]));
            assert!(fresh, "cycle sequence revisits an edge");
        }
        assert_eq!(s.vertices().len(), vs.len(), "cycle sequence repeats a vertex");
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inserts an edge, returning `true` if it was absent.
    pub fn insert(&mut self, e: Edge) -> bool {
        assert!(e.v < self.n, "edge {e} out of ambient K_{}", self.n);
        let slot = e.slot();
        let had = self.words[slot / 64] >> (slot % 64) & 1 == 1;
        self.words[slot / 64] |= 1 << (slot % 64);
        !had
    }

    /// Removes an edge, returning `true` if it was present.
    pub fn remove(&mut self, e: Edge) -> bool {
        if e.v >= self.n {
            return false;
        }
        let slot = e.slot();
        let had = self.words[slot / 64] >> (slot % 64) & 1 == 1;
        self.words[slot / 64] &= !(1 << (slot % 64));
        had
    }

    pub fn contains(&self, e: Edge) -> bool {
        if e.v >= self.n {
            return false;
        }
        let slot = e.slot();
        self.words[slot / 64] >> (slot % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Edges in ascending triangular-slot order.
    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| Edge::from_slot(wi * 64 + b))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        let mut vs = VertexSet::EMPTY;
        for e in self.iter() {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        vs
    }

    pub fn degree(&self, v: Vertex) -> usize {
        (0..self.n)
            .filter(|&w| w != v && self.contains(Edge::new(v, w)))
            .count()
    }

    /// Ascending neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&w| w != v && self.contains(Edge::new(v, w)))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn xor(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a ^ b)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_ambient(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_ambient(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.same_ambient(other);
        EdgeSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn same_ambient(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "edge sets over different ambients (K_{} vs K_{})",
            self.n, other.n
        );
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "E{}", self.n)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// CycleFamily
// ---------------------------------------------------------------------------

/// Ordered family of edge sets over one ambient `K_n`; index = color.
///
/// Construction does not force members to be cycles — several operations
/// accept arbitrary nonempty subgraphs — but each operation validates what
/// its own contract needs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleFamily {
    n: usize,
    members: Vec<EdgeSet>,
}

impl CycleFamily {
    pub fn new(n: usize, members: Vec<EdgeSet>) -> Self {
        for (i, m) in members.iter().enumerate() {
            assert_eq!(m.n(), n, "member {i} has ambient K_{}, family has K_{n}", m.n());
        }
        CycleFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &EdgeSet {
        &self.members[i]
    }

    pub fn union(&self) -> EdgeSet {
        let mut u = EdgeSet::new(self.n);
        for m in &self.members {
            u = u.union(m);
        }
        u
    }

    /// First shared edge between two members, if any.
    pub fn find_shared_edge(&self) -> Option<(usize, usize, Edge)> {
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                let both = self.members[i].intersection(&self.members[j]);
                let first = both.iter().next();
                if let Some(e) = first {
                    return Some((i, j, e));
                }
            }
        }
        None
    }

    /// Colors whose member contains `e`, ascending.
    pub fn colors_of(&self, e: Edge) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(move |(_, m)| m.contains(e))
            .map(|(i, _)| i)
    }
}

// ---------------------------------------------------------------------------
// Cycle predicates and decompositions
// ---------------------------------------------------------------------------

/// Tests whether `e` is a single simple cycle and reports its parity.
///
/// Accepts exactly the connected 2-regular edge sets with at least three
/// edges; anything else (paths, unions of cycles, empty sets, digon-free by
/// construction) yields `None`.
pub fn is_cycle(e: &EdgeSet) -> Option<Parity> {
    let len = e.len();
    if len < 3 {
        return None;
    }
    let vs = e.vertices();
    if vs.len() != len {
        return None;
    }
    for v in vs.iter() {
        if e.degree(v) != 2 {
            return None;
        }
    }
    if component_count(e) != 1 {
        return None;
    }
    Some(Parity::of(len))
}

/// Vertex sequence of a cycle in canonical traversal order: smallest vertex
/// first, moving toward its smaller neighbor.
pub fn cycle_vertices(e: &EdgeSet) -> Option<Vec<Vertex>> {
    is_cycle(e)?;
    let start = e.vertices().min().unwrap();
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = e.neighbors(start).next().unwrap();
    while cur != start {
        seq.push(cur);
        let next = e.neighbors(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    Some(seq)
}

/// Number of connected components induced by the edges (isolated ambient
/// vertices do not count).
pub fn component_count(e: &EdgeSet) -> usize {
    let mut dsu = Dsu::new(e.n());
    let mut verts = VertexSet::EMPTY;
    for ed in e.iter() {
        dsu.union(ed.u, ed.v);
        verts.insert(ed.u);
        verts.insert(ed.v);
    }
    verts.iter().filter(|&v| dsu.find(v) == v).count()
}

/// Whether the edge set is nonempty and spans a single component.
pub fn is_connected(e: &EdgeSet) -> bool {
    !e.is_empty() && component_count(e) == 1
}

/// Whether the edge set contains any cycle.
pub fn has_cycle(e: &EdgeSet) -> bool {
    let mut dsu = Dsu::new(e.n());
    for ed in e.iter() {
        if !dsu.union(ed.u, ed.v) {
            return true;
        }
    }
    false
}

/// Whether the edge set contains an even cycle.
///
/// Uses the block characterization: a graph is even-cycle-free exactly when
/// every block is a single edge or an odd cycle.
pub fn has_even_cycle(e: &EdgeSet) -> bool {
    blocks(e).iter().any(|b| {
        let edges = b.len();
        if edges < 2 {
            return false;
        }
        let verts = b.vertices().len();
        edges != verts || edges % 2 == 0
    })
}

/// Proper 2-coloring of every component, or `None` when some component is
/// non-bipartite. Component roots (smallest vertex) go to the first side.
pub fn bipartition(e: &EdgeSet) -> Option<(VertexSet, VertexSet)> {
    let mut side = vec![None::<bool>; e.n()];
    let verts = e.vertices();
    for root in verts.iter() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for w in e.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    for v in verts.iter() {
        if side[v] == Some(false) {
            a.insert(v);
        } else {
            b.insert(v);
        }
    }
    Some((a, b))
}

/// Contracts the vertex set `s` of `e` to a single vertex and compacts the
/// ambient labels downward.
///
/// The image vertex takes the rank of the smallest id in `s`; edges internal
/// to `s` disappear and parallel images collapse (sets cannot hold
/// multiplicities). The result lives in `K_{n - |s| + 1}`.
pub fn contract(e: &EdgeSet, s: &VertexSet) -> Result<EdgeSet, Error> {
    if s.is_empty() {
        return Err(Error::EmptyContractionSet);
    }
    let n = e.n();
    assert!(
        s.is_subset(&VertexSet::full(n)),
        "contraction set {s:?} outside ambient K_{n}"
    );
    let pivot = (*s).min().unwrap();
    // Survivors in ascending order: everything outside s, plus the pivot
    // standing in for the merged vertex.
    let survivors: Vec<Vertex> = (0..n).filter(|&v| v == pivot || !s.contains(v)).collect();
    let rank = |v: Vertex| -> usize {
        let repr = if s.contains(v) { pivot } else { v };
        survivors.binary_search(&repr).unwrap()
    };
    let mut out = EdgeSet::new(n - s.len() + 1);
    for ed in e.iter() {
        let (a, b) = (rank(ed.u), rank(ed.v));
        if a != b {
            out.insert(Edge::new(a, b));
        }
    }
    Ok(out)
}

/// Symmetric difference of one or more edge sets sharing an ambient.
pub fn symmetric_difference(sets: &[EdgeSet]) -> EdgeSet {
    let first = sets.first().expect("symmetric difference of nothing");
    sets[1..].iter().fold(first.clone(), |acc, s| acc.xor(s))
}

/// Splits an all-even-degrees edge set into edge-disjoint simple cycles.
///
/// Walks from the smallest positive-degree vertex toward the smallest
/// available neighbor, extracting a cycle whenever the walk revisits a vertex
/// of the current path; the union of the returned cycles is exactly `e`.
///
/// # Errors
///
/// [`Error::OddDegreeVertex`] if some vertex has odd degree.
pub fn eulerian_cycle_decomposition(e: &EdgeSet) -> Result<Vec<EdgeSet>, Error> {
    for v in e.vertices().iter() {
        if e.degree(v) % 2 != 0 {
            return Err(Error::OddDegreeVertex(v));
        }
    }
    let n = e.n();
    let mut remaining = e.clone();
    let mut cycles = Vec::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = VertexSet::EMPTY;
    let mut path_edges = EdgeSet::new(n);
    while !remaining.is_empty() {
        if path.is_empty() {
            let start = remaining.vertices().min().unwrap();
            path.push(start);
            on_path.insert(start);
        }
        let cur = *path.last().unwrap();
        let step = remaining
            .neighbors(cur)
            .find(|&w| !path_edges.contains(Edge::new(cur, w)));
        let Some(next) = step else {
            // Only a bare restart vertex can go stale: an entered vertex
            // always has odd remaining incidence outside the path.
            debug_assert_eq!(path.len(), 1);
            on_path.remove(path.pop().unwrap());
            continue;
        };
        if on_path.contains(next) {
            let pos = path.iter().position(|&x| x == next).unwrap();
            let mut cyc = EdgeSet::new(n);
            for t in pos..path.len() - 1 {
                let ed = Edge::new(path[t], path[t + 1]);
                cyc.insert(ed);
                path_edges.remove(ed);
                remaining.remove(ed);
            }
            let closing = Edge::new(cur, next);
            cyc.insert(closing);
            remaining.remove(closing);
            for &dropped in &path[pos + 1..] {
                on_path.remove(dropped);
            }
            path.truncate(pos + 1);
            cycles.push(cyc);
        } else {
            path_edges.insert(Edge::new(cur, next));
            path.push(next);
            on_path.insert(next);
        }
    }
    Ok(cycles)
}

// ---------------------------------------------------------------------------
// Arcs
// ---------------------------------------------------------------------------

/// Contiguous piece of a cycle: a vertex path whose consecutive pairs are
/// edges. A closed arc (first vertex repeated at the end) is the whole cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arc {
    path: Vec<Vertex>,
}

impl Arc {
    fn new(path: Vec<Vertex>) -> Self {
        debug_assert!(path.len() >= 2);
        debug_assert!(path.windows(2).all(|w| w[0] != w[1]));
        Arc { path }
    }

    /// Vertex sequence; for a closed arc the first vertex reappears last.
    pub fn path(&self) -> &[Vertex] {
        &self.path
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.len())
    }

    pub fn is_closed(&self) -> bool {
        self.path.first() == self.path.last()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.path.windows(2).map(|w| Edge::new(w[0], w[1]))
    }
}

/// Cuts the cycle `o` at the vertices of `at`, returning the maximal arcs
/// whose endpoints lie in `at` and whose interior avoids it.
///
/// Arcs come back in canonical traversal order starting from the first
/// hit vertex. If `at` misses the cycle entirely the whole cycle is returned
/// as one closed arc; if it hits exactly one vertex the single arc loops from
/// that vertex around to itself. Concatenating the arcs always reproduces the
/// cycle, so the arc lengths sum to `|o|`.
///
/// Panics unless `o` is a cycle.
pub fn arcs_by_vertex_set(o: &EdgeSet, at: &VertexSet) -> Vec<Arc> {
    let seq = cycle_vertices(o).expect("arcs_by_vertex_set needs a cycle");
    let l = seq.len();
    let hits: Vec<usize> = (0..l).filter(|&i| at.contains(seq[i])).collect();
    if hits.is_empty() {
        let mut path = seq.clone();
        path.push(seq[0]);
        return vec![Arc::new(path)];
    }
    let mut arcs = Vec::with_capacity(hits.len());
    for (idx, &from) in hits.iter().enumerate() {
        let to = hits[(idx + 1) % hits.len()];
        let mut path = Vec::new();
        let mut i = from;
        loop {
            path.push(seq[i]);
            if i == to && path.len() > 1 {
                break;
            }
            i = (i + 1) % l;
            if path.len() > l + 1 {
                unreachable!("arc walk failed to close");
            }
        }
        arcs.push(Arc::new(path));
    }
    arcs
}

// ---------------------------------------------------------------------------
// Cycle enumeration over K_n
// ---------------------------------------------------------------------------

/// Enumerates every vertex-subset cycle of `K_n` matching the parity filter
/// (and optional length cap) exactly once.
///
/// Order is deterministic: ascending length, then lexicographic vertex
/// subset, then lexicographic canonical traversal (smallest vertex first,
/// smaller neighbor second).
pub fn enumerate_cycles(
    n: usize,
    parity: ParityFilter,
    max_len: Option<usize>,
) -> impl Iterator<Item = EdgeSet> {
    assert!(n <= MAX_VERTICES);
    let cap = max_len.unwrap_or(n).min(n);
    (3..=cap)
        .filter(move |&k| parity.admits_len(k))
        .flat_map(move |k| {
            (0..n).combinations(k).flat_map(move |vs| {
                let head = vs[0];
                vs[1..]
                    .to_vec()
                    .into_iter()
                    .permutations(k - 1)
                    .filter(move |p| p[0] < p[k - 2])
                    .map(move |p| {
                        let mut seq = Vec::with_capacity(k);
                        seq.push(head);
                        seq.extend(p);
                        EdgeSet::cycle(n, &seq)
                    })
            })
        })
}

/// Closed-form count of the cycles of `K_n`: sum over `k` of
/// `C(n,k) * (k-1)! / 2`.
pub fn cycle_count(n: usize, parity: ParityFilter, max_len: Option<usize>) -> u64 {
    let cap = max_len.unwrap_or(n).min(n);
    (3..=cap)
        .filter(|&k| parity.admits_len(k))
        .map(|k| {
            let choose = (0..k).map(|i| (n - i) as u64).product::<u64>()
                / (1..=k).map(|i| i as u64).product::<u64>();
            let arrangements = (1..k as u64).product::<u64>() / 2;
            choose * arrangements
        })
        .sum()
}

// ---------------------------------------------------------------------------
// Blocks (biconnected components)
// ---------------------------------------------------------------------------

/// Biconnected components of the edge set, bridges included as single-edge
/// blocks. Deterministic order (sorted by edge bits).
pub fn blocks(e: &EdgeSet) -> Vec<EdgeSet> {
    const UNSEEN: usize = usize::MAX;
    struct Dfs<'a> {
        e: &'a EdgeSet,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<Edge>,
        out: Vec<EdgeSet>,
    }
    impl Dfs<'_> {
        fn run(&mut self, u: Vertex, parent_edge: Option<Edge>) {
            self.disc[u] = self.timer;
            self.low[u] = self.timer;
            self.timer += 1;
            let neighbors: Vec<Vertex> = self.e.neighbors(u).collect();
            for w in neighbors {
                let ed = Edge::new(u, w);
                if Some(ed) == parent_edge {
                    continue;
                }
                if self.disc[w] == UNSEEN {
                    self.stack.push(ed);
                    self.run(w, Some(ed));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = EdgeSet::new(self.e.n());
                        loop {
                            let top = self.stack.pop().unwrap();
                            block.insert(top);
                            if top == ed {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if self.disc[w] < self.disc[u] {
                    self.stack.push(ed);
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        e,
        disc: vec![UNSEEN; e.n()],
        low: vec![0; e.n()],
        timer: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in e.vertices().iter() {
        if dfs.disc[v] == UNSEEN {
            dfs.run(v, None);
        }
    }
    dfs.out.sort();
    dfs.out
}

// ---------------------------------------------------------------------------
// Union-find
// ---------------------------------------------------------------------------

/// Plain union-find over `[0, n)`.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns `false` when both ends were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Smaller root wins, keeping component representatives canonical.
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

// ---------------------------------------------------------------------------
