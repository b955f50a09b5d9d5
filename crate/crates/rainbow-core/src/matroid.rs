//! Graphic-matroid rank and the Hall-type feasibility condition for rainbow
//! spanning trees, plus the GF(2) binary-matroid rainbow-spanning algorithm
//! together with the encoding that reduces odd-cycle search to a span check.

use crate::graph::{self, CycleFamily, Dsu, Edge, EdgeSet, VertexSet};
use crate::search::RainbowSet;
use crate::Error;
use std::collections::BTreeMap;

/// Largest family size for which the exhaustive subset check in
/// [`rado_condition`] is allowed to run.
pub const RADO_SUBSET_CAP: usize = 24;

// ---------------------------------------------------------------------------
// GF(2) linear algebra
// ---------------------------------------------------------------------------

/// Incremental row-reduced basis over GF(2), rows packed into `u64`.
///
/// The rows keep pairwise-distinct leading bits and are stored with leading
/// bits descending, so reduction is a single forward sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Gf2Basis {
    rows: Vec<u64>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    fn leading_bit(row: u64) -> u64 {
        debug_assert_ne!(row, 0);
        1u64 << (63 - row.leading_zeros())
    }

    /// Residue of `v` after elimination by the basis; zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            if v & Self::leading_bit(r) != 0 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v` if independent of the current rows; returns whether the
    /// rank grew.
    pub fn insert(&mut self, v: u64) -> bool {
        let w = self.reduce(v);
        if w == 0 {
            return false;
        }
        let lead = Self::leading_bit(w);
        let pos = self
            .rows
            .iter()
            .position(|&r| Self::leading_bit(r) < lead)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, w);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A binary matroid: a list of GF(2) vectors of uniform dimension (at most
/// 64), with the rank cached at construction. Instances are immutable and
/// safe to share.
#[derive(Clone, Debug)]
pub struct BinaryMatroid {
    dim: usize,
    ground: Vec<u64>,
    basis: Gf2Basis,
}

impl BinaryMatroid {
    pub fn new(dim: usize, ground: Vec<u64>) -> Result<Self, Error> {
        assert!(dim <= 64, "vector dimension is capped at 64 bits");
        for &v in &ground {
            check_dimension(dim, v)?;
        }
        let mut basis = Gf2Basis::new();
        for &v in &ground {
            basis.insert(v);
        }
        Ok(Self { dim, ground, basis })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ground(&self) -> &[u64] {
        &self.ground
    }

    pub fn vector(&self, i: usize) -> u64 {
        self.ground[i]
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }
}

fn check_dimension(dim: usize, v: u64) -> Result<(), Error> {
    if dim < 64 && v >> dim != 0 {
        return Err(Error::DimensionMismatch { dim, vector: v });
    }
    Ok(())
}

/// True iff `e` lies in the GF(2) span of the ground vectors selected by
/// `chosen` (indices into the matroid's ground list).
pub fn binary_closure_contains(
    matroid: &BinaryMatroid,
    chosen: &[usize],
    e: u64,
) -> Result<bool, Error> {
    check_dimension(matroid.dim(), e)?;
    let mut basis = Gf2Basis::new();
    for &i in chosen {
        basis.insert(matroid.vector(i));
    }
    Ok(basis.contains(e))
}

// ---------------------------------------------------------------------------
// Graphic matroid and the rainbow-spanning-tree condition
// ---------------------------------------------------------------------------

/// Rank of an edge set in the graphic matroid: touched vertices minus
/// connected components of the edge-induced subgraph (isolated ambient
/// vertices do not count).
pub fn graphic_rank(edges: &EdgeSet) -> usize {
    let touched = edges.vertices();
    if touched.is_empty() {
        return 0;
    }
    let mut dsu = Dsu::new(edges.n());
    for e in edges.iter() {
        dsu.union(e.u(), e.v());
    }
    let mut roots = VertexSet::EMPTY;
    for v in touched.iter() {
        roots = roots.union(&VertexSet::singleton(dsu.find(v)));
    }
    touched.len() - roots.len()
}

/// Outcome of the exhaustive Hall-type feasibility check: either every
/// index set `I` spans at least `|I| + 1` vertices, or a witness violating
/// set is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadoReport {
    pub satisfied: bool,
    pub violating_index_set: Option<Vec<usize>>,
}

/// Checks, for every nonempty index set `I`, that the members indexed by
/// `I` touch at least `|I| + 1` vertices. For connected members on an
/// ambient of `m + 1` vertices this is exactly the feasibility condition
/// for a rainbow spanning tree.
///
/// Exhaustive over all `2^m - 1` subsets; capped at `m <= 24`. The first
/// violating set in ascending bitmask order is reported.
pub fn rado_condition(family: &CycleFamily) -> Result<RadoReport, Error> {
    check_tree_preconditions(family)?;
    let m = family.len();
    if m > RADO_SUBSET_CAP {
        return Err(Error::SubsetCapExceeded {
            count: m,
            cap: RADO_SUBSET_CAP,
        });
    }
    for mask in 1u64..(1u64 << m) {
        let mut touched = VertexSet::EMPTY;
        for i in 0..m {
            if mask & (1 << i) != 0 {
                touched = touched.union(&family.member(i).vertices());
            }
        }
        let size = mask.count_ones() as usize;
        if touched.len() < size + 1 {
            let violating: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            return Ok(RadoReport {
                satisfied: false,
                violating_index_set: Some(violating),
            });
        }
    }
    Ok(RadoReport {
        satisfied: true,
        violating_index_set: None,
    })
}

fn check_tree_preconditions(family: &CycleFamily) -> Result<(), Error> {
    for (i, member) in family.members().iter().enumerate() {
        if member.is_empty() {
            return Err(Error::EmptyMember(i));
        }
        if !graph::is_connected(member) {
            return Err(Error::DisconnectedMember(i));
        }
    }
    if family.n() != family.len() + 1 {
        return Err(Error::MemberCountMismatch {
            expected: family.n().saturating_sub(1),
            found: family.len(),
        });
    }
    Ok(())
}

/// Finds a spanning tree using exactly one edge of each member, or `None`
/// when no such tree exists (equivalently, when [`rado_condition`] fails).
///
/// Runs matroid intersection between the partition matroid (one edge per
/// color) and the graphic matroid over the multiset of (color, edge) pairs,
/// augmenting along shortest exchange paths.
pub fn rainbow_spanning_tree(family: &CycleFamily) -> Result<Option<RainbowSet>, Error> {
    check_tree_preconditions(family)?;
    let m = family.len();
    // Ground of the intersection: every (color, edge) pair.
    let mut pairs: Vec<(usize, Edge)> = Vec::new();
    for (color, member) in family.members().iter().enumerate() {
        for e in member.iter() {
            pairs.push((color, e));
        }
    }
    let mut chosen: Vec<bool> = vec![false; pairs.len()];
    let mut size = 0usize;
    while size < m {
        let Some(path) = augmenting_path(family.n(), &pairs, &chosen) else {
            return Ok(None);
        };
        for idx in path {
            chosen[idx] = !chosen[idx];
        }
        size += 1;
    }
    let mut rainbow = RainbowSet::empty(family.n());
    for (idx, &on) in chosen.iter().enumerate() {
        if on {
            let (color, edge) = pairs[idx];
            rainbow.insert(edge, color);
        }
    }
    debug_assert_eq!(rainbow.validate(family), Ok(()));
    debug_assert!(graph::is_connected(&rainbow.edges()));
    Ok(Some(rainbow))
}

/// Independence in the partition matroid after the swap `S - x + y`:
/// `y`'s color must be unused, or used only by the removed element.
fn partition_ok(pairs: &[(usize, Edge)], chosen: &[bool], remove: Option<usize>, add: usize) -> bool {
    let color = pairs[add].0;
    chosen
        .iter()
        .enumerate()
        .all(|(i, &on)| !on || Some(i) == remove || pairs[i].0 != color)
}

/// Independence in the graphic matroid after the swap `S - x + y`: the
/// selected edges (with `y`'s edge added) must stay a forest.
fn graphic_ok(
    n: usize,
    pairs: &[(usize, Edge)],
    chosen: &[bool],
    remove: Option<usize>,
    add: usize,
) -> bool {
    let mut dsu = Dsu::new(n);
    for (i, &on) in chosen.iter().enumerate() {
        if on && Some(i) != remove {
            let (_, e) = pairs[i];
            if !dsu.union(e.u(), e.v()) {
                return false;
            }
        }
    }
    let (_, e) = pairs[add];
    dsu.union(e.u(), e.v())
}

/// Shortest augmenting path in the exchange digraph of the two matroids:
/// nodes are ground indices; sources are elements addable to the partition
/// side, sinks are elements addable to the graphic side; arcs encode the
/// legal swaps. Returns the node sequence to toggle.
fn augmenting_path(n: usize, pairs: &[(usize, Edge)], chosen: &[bool]) -> Option<Vec<usize>> {
    let total = pairs.len();
    let mut parent: Vec<Option<usize>> = vec![None; total];
    let mut seen = vec![false; total];
    let mut queue = std::collections::VecDeque::new();
    for y in 0..total {
        if !chosen[y] && partition_ok(pairs, chosen, None, y) {
            seen[y] = true;
            queue.push_back(y);
        }
    }
    while let Some(cur) = queue.pop_front() {
        if !chosen[cur] && graphic_ok(n, pairs, chosen, None, cur) {
            // Reached a sink: unwind the alternating walk.
            let mut path = vec![cur];
            let mut at = cur;
            while let Some(p) = parent[at] {
                path.push(p);
                at = p;
            }
            return Some(path);
        }
        if chosen[cur] {
            // Swap-out arcs: x -> y when S - x + y stays partition-independent.
            for y in 0..total {
                if !chosen[y] && !seen[y] && partition_ok(pairs, chosen, Some(cur), y) {
                    seen[y] = true;
                    parent[y] = Some(cur);
                    queue.push_back(y);
                }
            }
        } else {
            // Swap-in arcs: y -> x when S - x + y stays graphic-independent.
            for x in 0..total {
                if chosen[x] && !seen[x] && graphic_ok(n, pairs, chosen, Some(x), cur) {
                    seen[x] = true;
                    parent[x] = Some(cur);
                    queue.push_back(x);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Binary rainbow span
// ---------------------------------------------------------------------------

/// A rainbow selection of ground elements: an injection from chosen ground
/// indices to the colors they represent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroundRainbowSet {
    assignment: BTreeMap<usize, usize>,
}

impl GroundRainbowSet {
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Pairs `(ground index, color)` in ascending ground order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().map(|(&g, &c)| (g, c))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.assignment.keys().copied().collect()
    }

    pub fn color_of(&self, ground_index: usize) -> Option<usize> {
        self.assignment.get(&ground_index).copied()
    }

    fn insert(&mut self, ground_index: usize, color: usize) {
        let dup_color = self.assignment.values().any(|&c| c == color);
        assert!(!dup_color, "color {color} already represented");
        let prev = self.assignment.insert(ground_index, color);
        assert!(prev.is_none(), "ground element {ground_index} already chosen");
    }

    /// Checks injectivity, membership of each chosen element in its color's
    /// subset, and that `e` lies in the span of the chosen vectors.
    pub fn validate(
        &self,
        matroid: &BinaryMatroid,
        family: &[Vec<usize>],
        e: u64,
    ) -> Result<(), String> {
        for (g, c) in self.iter() {
            if c >= family.len() {
                return Err(format!("color {c} out of range"));
            }
            if !family[c].contains(&g) {
                return Err(format!("ground element {g} is not in subset {c}"));
            }
        }
        let chosen = self.elements();
        match binary_closure_contains(matroid, &chosen, e) {
            Ok(true) => Ok(()),
            Ok(false) => Err("target vector is outside the span".into()),
            Err(err) => Err(err.to_string()),
        }
    }
}

/// Builds a rainbow set of ground elements whose span contains `e`.
///
/// Requires `rank(matroid) == family.len()` and that every subset already
/// spans `e`. Grows a maximal rainbow set `R` keeping `R + e` independent
/// (colors in ascending order, elements in subset order); by the rank
/// bound some color `i` must end up unrepresented, and either `e` is
/// already spanned by `R`, or any element of subset `i` outside the span
/// of `R` closes `e` in one augmentation.
pub fn matroid_rainbow_span(
    matroid: &BinaryMatroid,
    e: u64,
    family: &[Vec<usize>],
) -> Result<GroundRainbowSet, Error> {
    check_dimension(matroid.dim(), e)?;
    let n = family.len();
    if matroid.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: matroid.rank(),
        });
    }
    for (i, subset) in family.iter().enumerate() {
        let ok = binary_closure_contains(matroid, subset, e)?;
        if !ok {
            return Err(Error::ClosureMissingTarget(i));
        }
    }
    let mut rainbow = GroundRainbowSet::default();
    let mut span_r = Gf2Basis::new();
    let mut span_r_e = Gf2Basis::new();
    span_r_e.insert(e);
    for (color, subset) in family.iter().enumerate() {
        for &g in subset {
            if span_r_e.insert(matroid.vector(g)) {
                rainbow.insert(g, color);
                span_r.insert(matroid.vector(g));
                break;
            }
        }
    }
    let unrepresented = (0..n).find(|&i| rainbow.iter().all(|(_, c)| c != i));
    let Some(color) = unrepresented else {
        unreachable!("a fully represented rainbow set plus the target would exceed the rank");
    };
    if !span_r.contains(e) {
        let g = family[color]
            .iter()
            .copied()
            .find(|&g| span_r.reduce(matroid.vector(g)) != 0)
            .expect("a subset inside the span would already span the target");
        span_r.insert(matroid.vector(g));
        rainbow.insert(g, color);
    }
    assert!(span_r.contains(e), "augmentation must close the target into the span");
    assert_eq!(rainbow.validate(matroid, family, e), Ok(()));
    Ok(rainbow)
}

// ---------------------------------------------------------------------------
// Odd-cycle encoding
// ---------------------------------------------------------------------------

/// Encodes an odd-cycle search over `K_n` as a binary-matroid span problem.
///
/// Vectors have dimension `n + 1`: bit 0 is the marker coordinate `e0` and
/// bit `v + 1` stands for vertex `v`. An edge `uv` becomes
/// `e0 + e_{u+1} + e_{v+1}`, so a sum of edge vectors equals `e0` exactly
/// when the edges form an odd closed walk — hence a member's edge set
/// contains an odd cycle iff `e0` lies in the span of its encoding.
///
/// The returned matroid's ground lists `e0` first, then `n - 1` adjacent
/// vertex pairs (filling the even-weight subspace so the rank is exactly
/// `n`), then each member's encoded vectors; the encoded family holds each
/// member's ground indices.
pub fn encode_odd_cycle_instance(
    family: &CycleFamily,
) -> (BinaryMatroid, u64, Vec<Vec<usize>>) {
    let n = family.n();
    assert!(n + 1 <= 64, "encoding needs n + 1 bits");
    let e0 = 1u64;
    let vertex_bit = |v: usize| 1u64 << (v + 1);
    let mut ground = vec![e0];
    for v in 0..n.saturating_sub(1) {
        ground.push(vertex_bit(v) | vertex_bit(v + 1));
    }
    let mut encoded = Vec::with_capacity(family.len());
    for member in family.members() {
        let mut indices = Vec::with_capacity(member.len());
        for e in member.iter() {
            ground.push(e0 | vertex_bit(e.u()) | vertex_bit(e.v()));
            indices.push(ground.len() - 1);
        }
        encoded.push(indices);
    }
    let matroid = BinaryMatroid::new(n + 1, ground).expect("encoded vectors fit the dimension");
    debug_assert_eq!(matroid.rank(), n);
    (matroid, e0, encoded)
}

/// True iff `e0` lies in the span of the encoding of a single edge set —
/// by the encoding correspondence, iff the edge set contains an odd cycle.
pub fn encoded_span_contains_marker(edges: &EdgeSet) -> bool {
    let family = CycleFamily::new(edges.n(), vec![edges.clone()]);
    let (matroid, e0, encoded) = encode_odd_cycle_instance(&family);
    binary_closure_contains(&matroid, &encoded[0], e0).expect("dimensions agree by construction")
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ParityFilter;
    use crate::search::{exhaustive_rainbow_cycle, find_rainbow_odd_cycle};
    use crate::structures::{gen_pruned_cactus, CactusBlock, CactusScript};
    use itertools::Itertools;

    fn fam(n: usize, members: Vec<EdgeSet>) -> CycleFamily {
        CycleFamily::new(n, members)
    }

    fn tri(n: usize, a: usize, b: usize, c: usize) -> EdgeSet {
        EdgeSet::cycle(n, &[a, b, c])
    }

    fn edges(n: usize, list: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_edges(n, list.iter().map(|&(u, v)| Edge::new(u, v)))
    }

    fn complete(n: usize) -> EdgeSet {
        EdgeSet::from_edges(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))),
        )
    }

    #[test]
    fn graphic_rank_examples() {
        assert_eq!(graphic_rank(&tri(3, 0, 1, 2)), 2);
        assert_eq!(graphic_rank(&edges(4, &[(0, 1), (2, 3)])), 2);
        assert_eq!(graphic_rank(&edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])), 4);
        assert_eq!(graphic_rank(&EdgeSet::new(4)), 0);
    }

    #[test]
    fn doubled_edge_family_violates_the_condition() {
        let e = edges(3, &[(0, 1)]);
        let f = fam(3, vec![e.clone(), e]);
        let report = rado_condition(&f).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.violating_index_set, Some(vec![0, 1]));
    }

    #[test]
    fn spanning_path_family_satisfies_the_condition() {
        let f = fam(3, vec![edges(3, &[(0, 1)]), edges(3, &[(1, 2)])]);
        let report = rado_condition(&f).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.violating_index_set, None);
    }

    #[test]
    fn generated_cacti_satisfy_the_condition() {
        let script = CactusScript {
            blocks: vec![
                CactusBlock { len: 3, glue: None },
                CactusBlock { len: 4, glue: Some(2) },
            ],
        };
        let f = gen_pruned_cactus(&script, false).unwrap();
        assert_eq!(f.n(), f.len() + 1);
        assert!(rado_condition(&f).unwrap().satisfied);
    }

    #[test]
    fn condition_rejects_bad_inputs() {
        let f = fam(4, vec![edges(4, &[(0, 1), (2, 3)]), edges(4, &[(1, 2)]), edges(4, &[(0, 2)])]);
        assert!(matches!(rado_condition(&f), Err(Error::DisconnectedMember(0))));
        let g = fam(3, vec![edges(3, &[(0, 1)])]);
        assert!(matches!(
            rado_condition(&g),
            Err(Error::MemberCountMismatch { expected: 2, found: 1 })
        ));
        let h = fam(2, vec![EdgeSet::new(2)]);
        assert!(matches!(rado_condition(&h), Err(Error::EmptyMember(0))));
    }

    #[test]
    fn spanning_tree_of_a_path_family_is_the_path() {
        let f = fam(4, vec![edges(4, &[(0, 1)]), edges(4, &[(1, 2)]), edges(4, &[(2, 3)])]);
        let tree = rainbow_spanning_tree(&f).unwrap().unwrap();
        tree.validate(&f).unwrap();
        assert_eq!(tree.len(), 3);
        assert_eq!(tree.color_of(Edge::new(0, 1)), Some(0));
        assert_eq!(tree.color_of(Edge::new(1, 2)), Some(1));
        assert_eq!(tree.color_of(Edge::new(2, 3)), Some(2));
    }

    #[test]
    fn spanning_tree_absent_for_the_doubled_edge() {
        let e = edges(3, &[(0, 1)]);
        let f = fam(3, vec![e.clone(), e]);
        assert!(rainbow_spanning_tree(&f).unwrap().is_none());
    }

    #[test]
    fn doubled_triangles_have_a_rainbow_spanning_tree() {
        let f = fam(
            5,
            vec![tri(5, 0, 1, 2), tri(5, 0, 1, 2), tri(5, 0, 3, 4), tri(5, 0, 3, 4)],
        );
        let tree = rainbow_spanning_tree(&f).unwrap().expect("tree must exist");
        tree.validate(&f).unwrap();
        let union = tree.edges();
        assert_eq!(union.len(), 4);
        assert!(graph::is_connected(&union));
        assert!(!graph::has_cycle(&union));

        // Brute-force oracle: some choice of one edge per member forms a
        // spanning tree.
        let mut witnessed = false;
        for choice in f
            .members()
            .iter()
            .map(|m| m.iter().collect::<Vec<_>>())
            .multi_cartesian_product()
        {
            let picked = EdgeSet::from_edges(5, choice.iter().copied());
            if picked.len() == 4 && graph::is_connected(&picked) && !graph::has_cycle(&picked) {
                witnessed = true;
                break;
            }
        }
        assert!(witnessed);
    }

    #[test]
    fn tree_presence_matches_the_condition_on_small_families() {
        // Sweep all families of three single-edge members in K_4.
        let all_edges: Vec<Edge> = complete(4).iter().collect();
        for combo in (0..all_edges.len()).combinations_with_replacement(3) {
            let members: Vec<EdgeSet> = combo
                .iter()
                .map(|&i| EdgeSet::from_edges(4, [all_edges[i]]))
                .collect();
            let f = fam(4, members);
            let report = rado_condition(&f).unwrap();
            let tree = rainbow_spanning_tree(&f).unwrap();
            assert_eq!(report.satisfied, tree.is_some());
            if let Some(t) = tree {
                t.validate(&f).unwrap();
            }
        }
    }

    #[test]
    fn closure_examples() {
        let m = BinaryMatroid::new(4, vec![0b0111, 0b1101, 0b1011]).unwrap();
        assert!(binary_closure_contains(&m, &[0, 1, 2], 0b0001).unwrap());
        assert!(!binary_closure_contains(&m, &[], 0b0001).unwrap());
        let single = BinaryMatroid::new(1, vec![1]).unwrap();
        assert!(binary_closure_contains(&single, &[0], 1).unwrap());
        assert!(matches!(
            binary_closure_contains(&m, &[0], 1 << 10),
            Err(Error::DimensionMismatch { dim: 4, .. })
        ));
    }

    #[test]
    fn basis_rank_and_reduction() {
        let mut b = Gf2Basis::new();
        assert!(b.insert(0b110));
        assert!(b.insert(0b011));
        assert!(!b.insert(0b101)); // sum of the first two
        assert_eq!(b.rank(), 2);
        assert!(b.contains(0b101));
        assert!(!b.contains(0b001));
        assert!(!b.insert(0));
    }

    #[test]
    fn triangle_encoding_spans_the_marker() {
        let f = fam(3, vec![tri(3, 0, 1, 2)]);
        let (m, e0, encoded) = encode_odd_cycle_instance(&f);
        assert_eq!(m.dim(), 4);
        assert_eq!(m.rank(), 3);
        let vectors: Vec<u64> = encoded[0].iter().map(|&i| m.vector(i)).collect();
        let mut expected = vec![0b0111u64, 0b1101, 0b1011];
        let mut got = vectors.clone();
        expected.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, expected);
        assert!(binary_closure_contains(&m, &encoded[0], e0).unwrap());
    }

    #[test]
    fn even_cycles_do_not_span_the_marker() {
        for seq in [[0usize, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]] {
            let square = EdgeSet::cycle(4, &seq);
            assert!(!encoded_span_contains_marker(&square));
        }
        assert!(encoded_span_contains_marker(&tri(4, 0, 1, 2)));
        let empty_fam = fam(3, vec![]);
        let (_, _, encoded) = encode_odd_cycle_instance(&empty_fam);
        assert!(encoded.is_empty());
    }

    #[test]
    fn rainbow_span_on_the_triangle_instance() {
        let f = fam(3, vec![tri(3, 0, 1, 2); 3]);
        let (m, e0, encoded) = encode_odd_cycle_instance(&f);
        let r = matroid_rainbow_span(&m, e0, &encoded).unwrap();
        r.validate(&m, &encoded, e0).unwrap();
        assert_eq!(r.len(), 3); // all three colors contribute
    }

    #[test]
    fn rainbow_span_matches_odd_cycle_search_on_hamiltonian_copies() {
        let c5 = EdgeSet::cycle(5, &[0, 1, 2, 3, 4]);
        let f = fam(5, vec![c5; 5]);
        let (m, e0, encoded) = encode_odd_cycle_instance(&f);
        let r = matroid_rainbow_span(&m, e0, &encoded).unwrap();
        r.validate(&m, &encoded, e0).unwrap();
        assert!(find_rainbow_odd_cycle(&f).is_some());
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Odd).is_some());
    }

    #[test]
    fn rainbow_span_with_identical_singleton_subsets() {
        // Ground: marker plus a full standard basis; every subset is {e}.
        let mut ground = vec![0b1u64];
        for i in 1..4 {
            ground.push(1 << i);
        }
        let m = BinaryMatroid::new(4, ground).unwrap();
        let e = 0b1u64; // a ground element, already independent on its own
        let family: Vec<Vec<usize>> = vec![vec![0]; 4];
        let r = matroid_rainbow_span(&m, e, &family).unwrap();
        r.validate(&m, &family, e).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.color_of(0), Some(0));
    }

    #[test]
    fn rainbow_span_rejects_bad_instances() {
        let m = BinaryMatroid::new(3, vec![0b001, 0b010]).unwrap();
        assert!(matches!(
            matroid_rainbow_span(&m, 0b001, &[vec![0]]),
            Err(Error::RankMismatch { expected: 1, found: 2 })
        ));
        let family = vec![vec![0], vec![1]];
        assert!(matches!(
            matroid_rainbow_span(&m, 0b1000, &family),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            matroid_rainbow_span(&m, 0b010, &family),
            Err(Error::ClosureMissingTarget(0))
        ));
    }

    #[test]
    fn encoding_agrees_with_direct_odd_cycle_search_on_fixed_sets() {
        let samples = [
            edges(5, &[(0, 1), (1, 2), (2, 3)]),
            edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
            EdgeSet::cycle(6, &[0, 1, 2, 3, 4, 5]),
            EdgeSet::cycle(5, &[0, 1, 2, 3, 4]),
            complete(4),
            edges(6, &[(0, 1), (2, 3), (4, 5)]),
        ];
        for s in &samples {
            // An edge set has an odd cycle exactly when it is non-bipartite.
            let direct = graph::bipartition(s).is_none();
            assert_eq!(encoded_span_contains_marker(s), direct, "mismatch on {s:?}");
        }
    }
}
