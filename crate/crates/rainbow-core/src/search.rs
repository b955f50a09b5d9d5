//! Rainbow-set search: greedy augmentation, constructive odd/any cycle
//! search, an exact exhaustive oracle, parity-constrained rainbow paths, and
//! maximum rainbow stars.
//!
//! All searches break ties the same way — lowest unrepresented color first,
//! then canonically smallest edge — so certificates are reproducible.

use crate::graph::{
    self, CycleFamily, Dsu, Edge, EdgeSet, Parity, ParityFilter, Vertex, VertexSet,
};
use std::collections::BTreeMap;
use std::ops::ControlFlow;

// ---------------------------------------------------------------------------
// Rainbow sets and certificates
// ---------------------------------------------------------------------------

/// Set of edges with an injective color assignment (`edge -> member index`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RainbowSet {
    n: usize,
    sigma: BTreeMap<Edge, usize>,
}

impl RainbowSet {
    pub fn empty(n: usize) -> Self {
        RainbowSet {
            n,
            sigma: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// Adds `e` with color `color`; panics if either is already used.
    pub fn insert(&mut self, e: Edge, color: usize) {
        assert!(
            !self.uses_color(color),
            "color {color} already represented"
        );
        let prev = self.sigma.insert(e, color);
        assert!(prev.is_none(), "edge {e} already present");
    }

    pub fn color_of(&self, e: Edge) -> Option<usize> {
        self.sigma.get(&e).copied()
    }

    pub fn uses_color(&self, color: usize) -> bool {
        self.sigma.values().any(|&c| c == color)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.sigma.contains_key(&e)
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::from_edges(self.n, self.sigma.keys().copied())
    }

    /// `(edge, color)` pairs in canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.sigma.iter().map(|(&e, &c)| (e, c))
    }

    /// Keeps only the edges present in `keep`, preserving their colors.
    pub fn restricted_to(&self, keep: &EdgeSet) -> RainbowSet {
        RainbowSet {
            n: self.n,
            sigma: self
                .sigma
                .iter()
                .filter(|(e, _)| keep.contains(**e))
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    /// Checks the rainbow invariants against the family that produced this
    /// set: colors pairwise distinct and each edge a member of its color.
    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        let mut seen = vec![false; family.len()];
        for (e, c) in self.iter() {
            if c >= family.len() {
                return Err(format!("edge {e} assigned out-of-range color {c}"));
            }
            if seen[c] {
                return Err(format!("color {c} used twice"));
            }
            seen[c] = true;
            if !family.member(c).contains(e) {
                return Err(format!("edge {e} is not in member {c}"));
            }
        }
        Ok(())
    }
}

/// Rainbow set whose edges form a single cycle of the recorded parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RainbowCycleCert {
    pub rainbow: RainbowSet,
    pub parity: Parity,
}

impl RainbowCycleCert {
    /// Panics unless the edges form a single cycle.
    pub(crate) fn from_rainbow(rainbow: RainbowSet) -> Self {
        let parity = graph::is_cycle(&rainbow.edges()).expect("certificate edges must be a cycle");
        RainbowCycleCert { rainbow, parity }
    }

    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        self.rainbow.validate(family)?;
        match graph::is_cycle(&self.rainbow.edges()) {
            Some(p) if p == self.parity => Ok(()),
            Some(_) => Err("certificate parity mismatch".into()),
            None => Err("certificate edges are not a cycle".into()),
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy augmentation
// ---------------------------------------------------------------------------

/// Outcome of [`greedy_rainbow`]; `satisfied` is false when augmentation
/// stalled, which signals a violated precondition.
#[derive(Clone, Debug)]
pub struct GreedyRainbow {
    pub rainbow: RainbowSet,
    pub satisfied: bool,
}

/// Maximal-counterexample augmentation for an upward-closed property.
///
/// Grows a rainbow set that *avoids* the property for as long as possible
/// (lowest unrepresented color, smallest eligible edge). Once no extension
/// stays outside the property, one more edge from an unrepresented member
/// lands the set inside it. With the caller-guaranteed preconditions —
/// property upward-closed, `∅` rejected, every member accepted, and more
/// members than the largest property-free set — the flip edge always exists.
pub fn greedy_rainbow(
    family: &CycleFamily,
    in_property: impl Fn(&EdgeSet) -> bool,
) -> GreedyRainbow {
    let mut r = RainbowSet::empty(family.n());
    let mut edges = EdgeSet::new(family.n());
    debug_assert!(!in_property(&edges), "property must reject the empty set");
    loop {
        if in_property(&edges) {
            return GreedyRainbow {
                rainbow: r,
                satisfied: true,
            };
        }
        // Preferred step: extend while staying outside the property.
        let mut flip: Option<(Edge, usize)> = None;
        let mut grew = false;
        'colors: for i in 0..family.len() {
            if r.uses_color(i) {
                continue;
            }
            for e in family.member(i).iter() {
                if r.contains(e) {
                    continue;
                }
                let mut trial = edges.clone();
                trial.insert(e);
                if !in_property(&trial) {
                    r.insert(e, i);
                    edges = trial;
                    grew = true;
                    break 'colors;
                }
                if flip.is_none() {
                    flip = Some((e, i));
                }
            }
        }
        if grew {
            continue;
        }
        match flip {
            Some((e, i)) => {
                // Maximality reached: this single augmentation necessarily
                // satisfies the property.
                r.insert(e, i);
                return GreedyRainbow {
                    rainbow: r,
                    satisfied: true,
                };
            }
            None => {
                return GreedyRainbow {
                    rainbow: r,
                    satisfied: false,
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Constructive searches
// ---------------------------------------------------------------------------

/// Finds a rainbow odd cycle.
///
/// Every member must be an odd cycle. For families with at least `n` members
/// the search is constructive and always succeeds: grow a maximal rainbow
/// forest, locate an unrepresented member inside one tree, and close an odd
/// cycle through an edge joining two same-side vertices of that tree's
/// bipartition. Smaller families fall back to the exact oracle, so `None`
/// genuinely means no rainbow odd cycle exists.
pub fn find_rainbow_odd_cycle(family: &CycleFamily) -> Option<RainbowCycleCert> {
    for (i, m) in family.members().iter().enumerate() {
        assert_eq!(
            graph::is_cycle(m),
            Some(Parity::Odd),
            "member {i} is not an odd cycle"
        );
    }
    if family.len() < family.n() {
        return exhaustive_rainbow_cycle(family, ParityFilter::Odd);
    }

    let n = family.n();
    let mut forest = RainbowSet::empty(n);
    let mut dsu = Dsu::new(n);
    'grow: loop {
        for i in 0..family.len() {
            if forest.uses_color(i) {
                continue;
            }
            for e in family.member(i).iter() {
                if !dsu.same(e.u(), e.v()) {
                    dsu.union(e.u(), e.v());
                    forest.insert(e, i);
                    continue 'grow;
                }
            }
        }
        break;
    }

    // A forest has at most n-1 edges, so some color is unrepresented.
    let j = (0..family.len())
        .find(|&i| !forest.uses_color(i))
        .expect("maximal rainbow forest cannot represent every color");
    let o = family.member(j);
    let forest_edges = forest.edges();
    let (side_a, _) =
        graph::bipartition(&forest_edges).expect("forests are bipartite");
    // Maximality confines o to one tree; an odd cycle must have an edge with
    // both ends on the same side of that tree's 2-coloring.
    let chord = o
        .iter()
        .find(|e| side_a.contains(e.u()) == side_a.contains(e.v()))
        .expect("odd member cycle must break the tree bipartition");

    let path = tree_path(&forest_edges, chord.u(), chord.v());
    debug_assert_eq!(path.len() % 2, 0, "same-side tree path must be even");
    let mut cycle = RainbowSet::empty(n);
    for e in &path {
        cycle.insert(*e, forest.color_of(*e).unwrap());
    }
    cycle.insert(chord, j);
    let cert = RainbowCycleCert::from_rainbow(cycle);
    debug_assert_eq!(cert.parity, Parity::Odd);
    Some(cert)
}

/// Finds a rainbow cycle of either parity.
///
/// Members must be cycles. Families with at least `n` members go through
/// [`greedy_rainbow`] with the "contains a cycle" property, and the unique
/// cycle closed by the flip edge is returned; smaller families use the exact
/// oracle.
pub fn find_rainbow_cycle(family: &CycleFamily) -> Option<RainbowCycleCert> {
    for (i, m) in family.members().iter().enumerate() {
        assert!(graph::is_cycle(m).is_some(), "member {i} is not a cycle");
    }
    if family.len() < family.n() {
        return exhaustive_rainbow_cycle(family, ParityFilter::Any);
    }
    let grown = greedy_rainbow(family, graph::has_cycle);
    assert!(
        grown.satisfied,
        "greedy augmentation stalled on a family of {} cycles in K_{}",
        family.len(),
        family.n()
    );
    // The pre-flip set was a forest, so exactly one cycle exists: peel
    // degree-1 vertices until only the cycle remains.
    let mut core = grown.rainbow.edges();
    loop {
        let leaves: Vec<Edge> = core
            .vertices()
            .iter()
            .filter(|&v| core.degree(v) == 1)
            .flat_map(|v| core.neighbors(v).map(move |w| Edge::new(v, w)))
            .collect();
        if leaves.is_empty() {
            break;
        }
        for e in leaves {
            core.remove(e);
        }
    }
    Some(RainbowCycleCert::from_rainbow(grown.rainbow.restricted_to(&core)))
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

/// Exact decision: does the family admit a rainbow cycle of the given
/// parity?
///
/// Enumerates the simple cycles of `∪family` no longer than the family (a
/// rainbow set cannot exceed one edge per color), in deterministic DFS order
/// from the smallest vertex, and tests each for a system of distinct
/// representatives by bipartite matching. Exponential in the union size;
/// desk scale only.
pub fn exhaustive_rainbow_cycle(
    family: &CycleFamily,
    parity: ParityFilter,
) -> Option<RainbowCycleCert> {
    if family.len() < 3 {
        return None;
    }
    let union = family.union();
    let mut found = None;
    let _ = for_each_cycle_in(&union, parity, family.len(), &mut |seq| {
        let edges: Vec<Edge> = (0..seq.len())
            .map(|i| Edge::new(seq[i], seq[(i + 1) % seq.len()]))
            .collect();
        match sdr_colors(family, &edges) {
            Some(assignment) => {
                let mut r = RainbowSet::empty(family.n());
                for (e, c) in edges.iter().zip(assignment) {
                    r.insert(*e, c);
                }
                found = Some(RainbowCycleCert::from_rainbow(r));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

/// Visits every simple cycle of `g` with `3 <= len <= max_len` matching the
/// parity filter, as a vertex sequence, in deterministic order: roots ascend,
/// and each root explores lexicographically smallest paths first. Each cycle
/// appears exactly once (root = smallest vertex, second < last).
pub(crate) fn for_each_cycle_in(
    g: &EdgeSet,
    parity: ParityFilter,
    max_len: usize,
    visit: &mut impl FnMut(&[Vertex]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn dfs(
        g: &EdgeSet,
        root: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut VertexSet,
        parity: ParityFilter,
        max_len: usize,
        visit: &mut impl FnMut(&[Vertex]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let cur = *path.last().unwrap();
        for w in g.neighbors(cur) {
            if w == root && path.len() >= 3 && path[1] < cur && parity.admits_len(path.len()) {
                visit(path)?;
            }
            if w > root && !on_path.contains(w) && path.len() < max_len {
                path.push(w);
                on_path.insert(w);
                dfs(g, root, path, on_path, parity, max_len, visit)?;
                on_path.remove(w);
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    if max_len < 3 {
        return ControlFlow::Continue(());
    }
    for root in g.vertices().iter() {
        let mut path = vec![root];
        let mut on_path = VertexSet::singleton(root);
        dfs(g, root, &mut path, &mut on_path, parity, max_len, visit)?;
    }
    ControlFlow::Continue(())
}

/// System of distinct representatives: one distinct color per listed edge,
/// or `None`. Colors are assigned by augmenting-path matching with ascending
/// preference, so the result is deterministic.
fn sdr_colors(family: &CycleFamily, edges: &[Edge]) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = edges
        .iter()
        .map(|&e| family.colors_of(e).collect())
        .collect();
    let matching = bipartite_match(&adj, family.len());
    if matching.iter().all(Option::is_some) {
        Some(matching.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Kuhn's augmenting-path maximum matching. `adj[l]` lists the right nodes
/// available to left node `l`; returns the right match of each left node.
pub(crate) fn bipartite_match(adj: &[Vec<usize>], right_size: usize) -> Vec<Option<usize>> {
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            if owner[r].is_none() || augment(owner[r].unwrap(), adj, owner, visited) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }

    let mut owner: Vec<Option<usize>> = vec![None; right_size];
    for l in 0..adj.len() {
        let mut visited = vec![false; right_size];
        augment(l, adj, &mut owner, &mut visited);
    }
    let mut out = vec![None; adj.len()];
    for (r, &l) in owner.iter().enumerate() {
        if let Some(l) = l {
            out[l] = Some(r);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Rainbow paths and stars
// ---------------------------------------------------------------------------

/// Exact search for a simple rainbow `u`–`v` path.
///
/// The path must stay inside `within`, use each selected color at most once
/// (an edge may represent color `i` only if it belongs to member `i`), match
/// the parity filter, and have at least `min_len` edges. Backtracking over
/// both the next vertex and the color choice; first witness in canonical
/// order is returned.
pub fn find_rainbow_path(
    family: &CycleFamily,
    colors: &[usize],
    within: &EdgeSet,
    u: Vertex,
    v: Vertex,
    parity: ParityFilter,
    min_len: usize,
) -> Option<RainbowSet> {
    assert_ne!(u, v, "path endpoints must differ");
    struct Search<'a> {
        family: &'a CycleFamily,
        colors: &'a [usize],
        within: &'a EdgeSet,
        target: Vertex,
        parity: ParityFilter,
        min_len: usize,
        used: Vec<bool>,
        visited: VertexSet,
        assignment: Vec<(Edge, usize)>,
    }
    impl Search<'_> {
        fn dfs(&mut self, cur: Vertex) -> bool {
            for w in self.within.neighbors(cur) {
                if self.visited.contains(w) {
                    continue;
                }
                let e = Edge::new(cur, w);
                let done = w == self.target;
                if done
                    && !(self.parity.admits_len(self.assignment.len() + 1)
                        && self.assignment.len() + 1 >= self.min_len)
                {
                    continue;
                }
                for (ci, &c) in self.colors.iter().enumerate() {
                    if self.used[ci] || !self.family.member(c).contains(e) {
                        continue;
                    }
                    self.assignment.push((e, c));
                    if done {
                        return true;
                    }
                    self.used[ci] = true;
                    self.visited.insert(w);
                    if self.dfs(w) {
                        return true;
                    }
                    self.visited.remove(w);
                    self.used[ci] = false;
                    self.assignment.pop();
                    // Only the color choice varies after a dead end; trying
                    // the same edge under another color is still worthwhile.
                }
            }
            false
        }
    }
    let mut s = Search {
        family,
        colors,
        within,
        target: v,
        parity,
        min_len,
        used: vec![false; colors.len()],
        visited: VertexSet::singleton(u),
        assignment: Vec::new(),
    };
    if s.dfs(u) {
        let mut r = RainbowSet::empty(family.n());
        for (e, c) in s.assignment {
            r.insert(e, c);
        }
        Some(r)
    } else {
        None
    }
}

/// Rainbow star (at least two edges through one center) of maximum size.
#[derive(Clone, Debug)]
pub struct RainbowStar {
    pub center: Vertex,
    pub rainbow: RainbowSet,
}

/// Maximum rainbow star over all centers, `None` when no center reaches
/// size 2. Per-center bipartite matching between incident union edges and
/// colors; ties go to the smallest center.
pub fn max_rainbow_star(family: &CycleFamily) -> Option<RainbowStar> {
    let union = family.union();
    let mut best: Option<(usize, Vertex)> = None;
    for center in 0..family.n() {
        let size = star_matching(family, &union, center)
            .iter()
            .filter(|m| m.is_some())
            .count();
        if best.map_or(true, |(s, _)| size > s) {
            best = Some((size, center));
        }
    }
    let (size, center) = best?;
    if size < 2 {
        return None;
    }
    let edges: Vec<Edge> = union
        .neighbors(center)
        .map(|w| Edge::new(center, w))
        .collect();
    let mut rainbow = RainbowSet::empty(family.n());
    for (e, m) in edges.iter().zip(star_matching(family, &union, center)) {
        if let Some(color) = m {
            rainbow.insert(*e, color);
        }
    }
    Some(RainbowStar { center, rainbow })
}

fn star_matching(family: &CycleFamily, union: &EdgeSet, center: Vertex) -> Vec<Option<usize>> {
    let adj: Vec<Vec<usize>> = union
        .neighbors(center)
        .map(|w| family.colors_of(Edge::new(center, w)).collect())
        .collect();
    bipartite_match(&adj, family.len())
}

/// Finds the unique path between `u` and `v` in a forest, as edges.
fn tree_path(forest: &EdgeSet, u: Vertex, v: Vertex) -> Vec<Edge> {
    let mut parent: Vec<Option<Vertex>> = vec![None; forest.n()];
    let mut queue = std::collections::VecDeque::from([u]);
    let mut seen = VertexSet::singleton(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for w in forest.neighbors(x) {
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
        let p = parent[cur].expect("endpoints lie in the same tree");
        path.push(Edge::new(cur, p));
        cur = p;
    }
    path
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, members: Vec<EdgeSet>) -> CycleFamily {
        CycleFamily::new(n, members)
    }

    fn tri(n: usize, a: Vertex, b: Vertex, c: Vertex) -> EdgeSet {
        EdgeSet::cycle(n, &[a, b, c])
    }

    #[test]
    fn greedy_four_triangles_reaches_a_cycle() {
        let f = fam(
            4,
            vec![tri(4, 0, 1, 2), tri(4, 0, 1, 3), tri(4, 0, 2, 3), tri(4, 1, 2, 3)],
        );
        let got = greedy_rainbow(&f, graph::has_cycle);
        assert!(got.satisfied);
        assert!(graph::has_cycle(&got.rainbow.edges()));
        got.rainbow.validate(&f).unwrap();
    }

    #[test]
    fn greedy_stalls_on_three_hamiltonian_squares() {
        // Sharpness: a Hamiltonian cycle repeated n-1 times has no rainbow
        // cycle, and the greedy run flags the stall.
        let sq = EdgeSet::cycle(4, &[0, 1, 2, 3]);
        let f = fam(4, vec![sq.clone(), sq.clone(), sq]);
        let got = greedy_rainbow(&f, graph::has_cycle);
        assert!(!got.satisfied);
        assert!(!graph::has_cycle(&got.rainbow.edges()));
    }

    #[test]
    fn greedy_even_cycle_bound_for_k4() {
        // floor(3*3/2)+1 = 5 even cycles in K_4 always yield a rainbow even
        // cycle; check every 5-multiset of the 3 squares.
        use itertools::Itertools;
        let squares: Vec<EdgeSet> =
            graph::enumerate_cycles(4, ParityFilter::Even, None).collect();
        assert_eq!(squares.len(), 3);
        for pick in (0..3).combinations_with_replacement(5) {
            let f = fam(4, pick.iter().map(|&i| squares[i].clone()).collect());
            let got = greedy_rainbow(&f, graph::has_even_cycle);
            assert!(got.satisfied, "stalled on {pick:?}");
            assert!(graph::has_even_cycle(&got.rainbow.edges()));
            got.rainbow.validate(&f).unwrap();
        }
    }

    #[test]
    fn odd_cycle_three_triangles_on_shared_vertices() {
        let t = tri(3, 0, 1, 2);
        let f = fam(3, vec![t.clone(), t.clone(), t]);
        let cert = find_rainbow_odd_cycle(&f).unwrap();
        cert.validate(&f).unwrap();
        assert_eq!(cert.parity, Parity::Odd);
        assert_eq!(cert.rainbow.len(), 3); // sigma is a bijection here
    }

    #[test]
    fn odd_cycle_absent_for_four_pentagons() {
        let p = EdgeSet::cycle(5, &[0, 1, 2, 3, 4]);
        let f = fam(5, vec![p.clone(), p.clone(), p.clone(), p]);
        assert!(find_rainbow_odd_cycle(&f).is_none());
    }

    #[test]
    fn odd_cycle_present_for_three_k4_triangles() {
        let f = fam(4, vec![tri(4, 0, 1, 2), tri(4, 0, 1, 3), tri(4, 0, 2, 3)]);
        let cert = find_rainbow_odd_cycle(&f).unwrap();
        cert.validate(&f).unwrap();
    }

    #[test]
    fn odd_cycle_constructive_matches_oracle_on_k5() {
        // |family| = n exercises the forest construction; cross-check a few
        // deterministic samples against the oracle.
        let odd: Vec<EdgeSet> = graph::enumerate_cycles(5, ParityFilter::Odd, None).collect();
        for shift in 0..40 {
            let members: Vec<EdgeSet> =
                (0..5).map(|i| odd[(i * 7 + shift) % odd.len()].clone()).collect();
            let f = fam(5, members);
            let cert = find_rainbow_odd_cycle(&f).expect("n odd cycles in K_n");
            cert.validate(&f).unwrap();
            assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Odd).is_some());
        }
    }

    #[test]
    fn any_cycle_present_for_four_distinct_triangles() {
        let f = fam(
            4,
            vec![tri(4, 0, 1, 2), tri(4, 0, 1, 3), tri(4, 0, 2, 3), tri(4, 1, 2, 3)],
        );
        let cert = find_rainbow_cycle(&f).unwrap();
        cert.validate(&f).unwrap();
    }

    #[test]
    fn any_cycle_absent_for_small_pruned_cactus() {
        let f = fam(
            5,
            vec![tri(5, 0, 1, 2), tri(5, 0, 1, 2), tri(5, 0, 3, 4), tri(5, 0, 3, 4)],
        );
        assert!(find_rainbow_cycle(&f).is_none());
    }

    #[test]
    fn any_cycle_absent_for_small_saguaro() {
        let f = fam(
            6,
            vec![
                tri(6, 0, 1, 2),
                tri(6, 0, 1, 2),
                EdgeSet::cycle(6, &[0, 3, 1, 4]),
                tri(6, 3, 4, 5),
                tri(6, 3, 4, 5),
            ],
        );
        assert!(find_rainbow_cycle(&f).is_none());
    }

    fn glued_squares(n: usize) -> CycleFamily {
        let green = EdgeSet::cycle(n, &[0, 3, 1, 2]);
        let red = EdgeSet::cycle(n, &[2, 3, 4, 5]);
        fam(
            n,
            vec![
                green.clone(),
                green.clone(),
                green,
                red.clone(),
                red.clone(),
                red,
            ],
        )
    }

    #[test]
    fn oracle_glued_squares_have_no_even_but_an_odd_cycle() {
        let f = glued_squares(6);
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Even).is_none());
        let odd = exhaustive_rainbow_cycle(&f, ParityFilter::Odd).unwrap();
        odd.validate(&f).unwrap();
        assert_eq!(odd.parity, Parity::Odd);
    }

    #[test]
    fn oracle_rejects_tiny_families() {
        let f = fam(4, vec![tri(4, 0, 1, 2), tri(4, 0, 1, 3)]);
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Any).is_none());
    }

    #[test]
    fn rainbow_path_parities_on_the_pentagon() {
        let p = EdgeSet::cycle(5, &[0, 1, 2, 3, 4]);
        let f = fam(5, vec![p.clone(), p.clone(), p.clone(), p.clone()]);
        let colors = [0, 1, 2, 3];
        let even =
            find_rainbow_path(&f, &colors, &p, 0, 2, ParityFilter::Even, 0).unwrap();
        assert_eq!(even.len(), 2); // 0-1-2
        even.validate(&f).unwrap();
        let odd = find_rainbow_path(&f, &colors, &p, 0, 2, ParityFilter::Odd, 0).unwrap();
        assert_eq!(odd.len(), 3); // 0-4-3-2
        odd.validate(&f).unwrap();
    }

    #[test]
    fn rainbow_path_absent_across_disconnected_triangles() {
        let a = tri(6, 0, 1, 2);
        let b = tri(6, 3, 4, 5);
        let f = fam(6, vec![a.clone(), b.clone()]);
        let within = a.union(&b);
        assert!(
            find_rainbow_path(&f, &[0, 1], &within, 0, 3, ParityFilter::Any, 0).is_none()
        );
    }

    #[test]
    fn rainbow_path_minimum_length_two() {
        // A direct edge exists but length >= 2 forces the long way round.
        let t = tri(3, 0, 1, 2);
        let f = fam(3, vec![t.clone(), t.clone()]);
        let direct = find_rainbow_path(&f, &[0, 1], &t, 0, 1, ParityFilter::Any, 0).unwrap();
        assert_eq!(direct.len(), 1);
        let long = find_rainbow_path(&f, &[0, 1], &t, 0, 1, ParityFilter::Any, 2).unwrap();
        assert_eq!(long.len(), 2);
    }

    #[test]
    fn star_of_three_triangles_through_zero() {
        let f = fam(4, vec![tri(4, 0, 1, 2), tri(4, 0, 1, 3), tri(4, 0, 2, 3)]);
        let star = max_rainbow_star(&f).unwrap();
        assert_eq!(star.center, 0);
        assert_eq!(star.rainbow.len(), 3);
        star.rainbow.validate(&f).unwrap();
        assert!(star
            .rainbow
            .iter()
            .all(|(e, _)| e.touches(star.center)));
    }

    #[test]
    fn star_of_doubled_triangle_has_size_two() {
        let t = tri(3, 0, 1, 2);
        let f = fam(3, vec![t.clone(), t]);
        let star = max_rainbow_star(&f).unwrap();
        assert_eq!(star.rainbow.len(), 2);
    }

    #[test]
    fn star_needs_two_edges() {
        let single = EdgeSet::from_edges(2, [Edge::new(0, 1)]);
        let f = fam(2, vec![single]);
        assert!(max_rainbow_star(&f).is_none());
    }
}
