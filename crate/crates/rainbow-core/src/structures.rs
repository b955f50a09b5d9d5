//! Recognizers and generators for the three rainbow-cycle-free extremal
//! structures: pruned cacti (odd-cycle families), saguaros (general cycle
//! families), and linkleaves (edge-disjoint families of arbitrary nonempty
//! graphs), plus the glued-squares construction showing that even cycles
//! admit no analogous characterization.

use crate::decide::{self, CutOrCycle};
use crate::graph::{self, CycleFamily, Dsu, Edge, EdgeSet, Parity, Vertex, VertexSet};
use crate::Error;
use std::collections::HashMap;

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Recursive witness that a family is a pruned cactus: either all members
/// are one cycle repeated `|cycle| - 1` times, or two pruned cacti sharing
/// exactly one vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrunedCactusCert {
    Leaf {
        cycle: EdgeSet,
        multiplicity: usize,
    },
    Split {
        left: Box<PrunedCactusCert>,
        right: Box<PrunedCactusCert>,
        shared_vertex: Vertex,
    },
}

impl PrunedCactusCert {
    pub fn vertices(&self) -> VertexSet {
        match self {
            PrunedCactusCert::Leaf { cycle, .. } => cycle.vertices(),
            PrunedCactusCert::Split { left, right, .. } => {
                left.vertices().union(&right.vertices())
            }
        }
    }

    /// Covered members, with multiplicity.
    pub fn members(&self) -> Vec<EdgeSet> {
        match self {
            PrunedCactusCert::Leaf { cycle, multiplicity } => {
                vec![cycle.clone(); *multiplicity]
            }
            PrunedCactusCert::Split { left, right, .. } => {
                let mut m = left.members();
                m.extend(right.members());
                m
            }
        }
    }

    fn check_node(&self) -> Result<(), String> {
        match self {
            PrunedCactusCert::Leaf { cycle, multiplicity } => {
                if graph::is_cycle(cycle).is_none() {
                    return Err("leaf edges are not a cycle".into());
                }
                if *multiplicity != cycle.len() - 1 {
                    return Err(format!(
                        "leaf multiplicity {} differs from |cycle| - 1 = {}",
                        multiplicity,
                        cycle.len() - 1
                    ));
                }
                Ok(())
            }
            PrunedCactusCert::Split {
                left,
                right,
                shared_vertex,
            } => {
                let overlap = left.vertices().intersection(&right.vertices());
                if overlap != VertexSet::singleton(*shared_vertex) {
                    return Err(format!(
                        "split sides share {overlap:?} instead of exactly the declared vertex"
                    ));
                }
                left.check_node()?;
                right.check_node()
            }
        }
    }

    /// Full check: node invariants plus coverage of the family's members.
    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        self.check_node()?;
        if !multiset_eq(self.members(), family.members()) {
            return Err("certificate does not cover the family's members".into());
        }
        Ok(())
    }
}

/// Recursive witness that a family is a saguaro: a pruned cactus, or two
/// vertex-disjoint saguaros bridged by an even cycle whose vertices
/// alternate between the sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SaguaroCert {
    Cactus(PrunedCactusCert),
    Bridge {
        left: Box<SaguaroCert>,
        separator: EdgeSet,
        right: Box<SaguaroCert>,
    },
}

impl SaguaroCert {
    pub fn vertices(&self) -> VertexSet {
        match self {
            SaguaroCert::Cactus(c) => c.vertices(),
            SaguaroCert::Bridge { left, right, .. } => left.vertices().union(&right.vertices()),
        }
    }

    pub fn members(&self) -> Vec<EdgeSet> {
        match self {
            SaguaroCert::Cactus(c) => c.members(),
            SaguaroCert::Bridge {
                left,
                separator,
                right,
            } => {
                let mut m = left.members();
                m.push(separator.clone());
                m.extend(right.members());
                m
            }
        }
    }

    fn check_node(&self) -> Result<(), String> {
        match self {
            SaguaroCert::Cactus(c) => c.check_node(),
            SaguaroCert::Bridge {
                left,
                separator,
                right,
            } => {
                if graph::is_cycle(separator) != Some(Parity::Even) {
                    return Err("separator is not an even cycle".into());
                }
                let (lv, rv) = (left.vertices(), right.vertices());
                if !lv.is_disjoint(&rv) {
                    return Err("bridge sides share vertices".into());
                }
                let seq = graph::cycle_vertices(separator).expect("checked to be a cycle");
                let head_left = lv.contains(seq[0]);
                if !head_left && !rv.contains(seq[0]) {
                    return Err("separator vertex misses both sides".into());
                }
                for (i, &w) in seq.iter().enumerate() {
                    let want_left = head_left == (i % 2 == 0);
                    let side = if want_left { &lv } else { &rv };
                    if !side.contains(w) {
                        return Err(format!("separator vertex {w} breaks the alternation"));
                    }
                }
                left.check_node()?;
                right.check_node()
            }
        }
    }

    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        self.check_node()?;
        if !multiset_eq(self.members(), family.members()) {
            return Err("certificate does not cover the family's members".into());
        }
        Ok(())
    }
}

/// Recursive witness that an edge-disjoint family is a linkleaf: a single
/// ground vertex with no members, or two vertex-disjoint linkleaves joined
/// by one member that is bipartite across their grounds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinkleafCert {
    Empty {
        ground_vertex: Vertex,
    },
    Link {
        left: Box<LinkleafCert>,
        bridge: EdgeSet,
        right: Box<LinkleafCert>,
    },
}

impl LinkleafCert {
    /// Ground vertices covered by this node (always one more than the
    /// number of covered members).
    pub fn ground(&self) -> VertexSet {
        match self {
            LinkleafCert::Empty { ground_vertex } => VertexSet::singleton(*ground_vertex),
            LinkleafCert::Link { left, right, .. } => left.ground().union(&right.ground()),
        }
    }

    pub fn members(&self) -> Vec<EdgeSet> {
        match self {
            LinkleafCert::Empty { .. } => Vec::new(),
            LinkleafCert::Link {
                left,
                bridge,
                right,
            } => {
                let mut m = left.members();
                m.push(bridge.clone());
                m.extend(right.members());
                m
            }
        }
    }

    fn check_node(&self) -> Result<(), String> {
        match self {
            LinkleafCert::Empty { .. } => Ok(()),
            LinkleafCert::Link {
                left,
                bridge,
                right,
            } => {
                let (lg, rg) = (left.ground(), right.ground());
                if !lg.is_disjoint(&rg) {
                    return Err("link sides share ground vertices".into());
                }
                if bridge.is_empty() {
                    return Err("bridge member is empty".into());
                }
                for e in bridge.iter() {
                    if lg.contains(e.u()) == lg.contains(e.v()) {
                        return Err(format!("bridge edge {e} does not cross the ground split"));
                    }
                    if !lg.union(&rg).contains(e.u()) || !lg.union(&rg).contains(e.v()) {
                        return Err(format!("bridge edge {e} leaves the ground"));
                    }
                }
                left.check_node()?;
                right.check_node()
            }
        }
    }

    pub fn validate(&self, family: &CycleFamily) -> Result<(), String> {
        self.check_node()?;
        if self.ground() != VertexSet::full(family.n()) {
            return Err("certificate ground must be the full ambient vertex set".into());
        }
        if !multiset_eq(self.members(), family.members()) {
            return Err("certificate does not cover the family's members".into());
        }
        Ok(())
    }
}

fn multiset_eq(mut a: Vec<EdgeSet>, b: &[EdgeSet]) -> bool {
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

// ---------------------------------------------------------------------------
// Recognizers
// ---------------------------------------------------------------------------

/// Recognizes pruned cacti by block decomposition: accepted iff the union is
/// connected, every block is a cycle, and every block of length `l` appears
/// exactly `l - 1` times as a member (and nothing else does).
///
/// The emitted certificate peels leaf blocks of the block-cut tree;
/// children are ordered with the lexicographically smaller vertex set first.
pub fn is_pruned_cactus(family: &CycleFamily) -> Option<PrunedCactusCert> {
    for (i, m) in family.members().iter().enumerate() {
        assert!(graph::is_cycle(m).is_some(), "member {i} is not a cycle");
    }
    if family.is_empty() {
        return None;
    }
    let union = family.union();
    if !graph::is_connected(&union) {
        return None;
    }
    let blocks = graph::blocks(&union);
    for b in &blocks {
        graph::is_cycle(b)?;
        let copies = family.members().iter().filter(|m| *m == b).count();
        if copies != b.len() - 1 {
            return None;
        }
    }
    if family
        .members()
        .iter()
        .any(|m| !blocks.contains(m))
    {
        return None;
    }
    let cert = peel_blocks(blocks);
    debug_assert_eq!(cert.validate(family), Ok(()));
    Some(cert)
}

/// Builds the certificate tree by repeatedly splitting off a leaf block of
/// the block-cut tree (one that meets the rest in a single vertex).
fn peel_blocks(mut blocks: Vec<EdgeSet>) -> PrunedCactusCert {
    if blocks.len() == 1 {
        let cycle = blocks.pop().unwrap();
        let multiplicity = cycle.len() - 1;
        return PrunedCactusCert::Leaf { cycle, multiplicity };
    }
    let pick = (0..blocks.len())
        .filter(|&i| {
            let mine = blocks[i].vertices();
            let shared: Vec<Vertex> = mine
                .iter()
                .filter(|&v| {
                    blocks
                        .iter()
                        .enumerate()
                        .any(|(j, b)| j != i && b.vertices().contains(v))
                })
                .collect();
            shared.len() == 1
        })
        .min_by_key(|&i| blocks[i].vertices().bits())
        .expect("a block-cut tree always has a leaf block");
    let leaf = blocks.swap_remove(pick);
    let rest_vertices = blocks
        .iter()
        .fold(VertexSet::EMPTY, |acc, b| acc.union(&b.vertices()));
    let shared_vertex = leaf
        .vertices()
        .intersection(&rest_vertices)
        .min()
        .expect("leaf block touches the rest");
    let multiplicity = leaf.len() - 1;
    let leaf_vertices = leaf.vertices();
    let leaf_cert = PrunedCactusCert::Leaf {
        cycle: leaf,
        multiplicity,
    };
    let rest_cert = peel_blocks(blocks);
    let (left, right) = if leaf_vertices.bits() <= rest_vertices.bits() {
        (leaf_cert, rest_cert)
    } else {
        (rest_cert, leaf_cert)
    };
    PrunedCactusCert::Split {
        left: Box::new(left),
        right: Box::new(right),
        shared_vertex,
    }
}

/// Recognizes saguaros by exact recursive search: a pruned cactus, or some
/// even-cycle member acting as a separator whose alternation splits the
/// remaining members into two vertex-disjoint saguaros. Memoized on the
/// sorted member-index key; exponential in the worst case, intended for
/// families of at most a dozen members.
pub fn is_saguaro(family: &CycleFamily) -> Option<SaguaroCert> {
    for (i, m) in family.members().iter().enumerate() {
        assert!(graph::is_cycle(m).is_some(), "member {i} is not a cycle");
    }
    if family.is_empty() {
        return None;
    }
    let all: Vec<usize> = (0..family.len()).collect();
    let mut memo = HashMap::new();
    let cert = saguaro_search(family, &all, &mut memo)?;
    debug_assert_eq!(cert.validate(family), Ok(()));
    Some(cert)
}

fn saguaro_search(
    family: &CycleFamily,
    indices: &[usize],
    memo: &mut HashMap<Vec<usize>, Option<SaguaroCert>>,
) -> Option<SaguaroCert> {
    if let Some(hit) = memo.get(indices) {
        return hit.clone();
    }
    let sub = CycleFamily::new(
        family.n(),
        indices.iter().map(|&i| family.member(i).clone()).collect(),
    );
    let mut result = is_pruned_cactus(&sub).map(SaguaroCert::Cactus);
    if result.is_none() {
        'candidates: for (pos, &sep_idx) in indices.iter().enumerate() {
            let separator = family.member(sep_idx);
            if graph::is_cycle(separator) != Some(Parity::Even) {
                continue;
            }
            let rest: Vec<usize> = indices
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .map(|(_, &i)| i)
                .collect();
            if rest.is_empty() {
                continue;
            }
            let Some((left, right)) = split_by_separator(family, separator, &rest) else {
                continue;
            };
            let left_cert = saguaro_search(family, &left, memo);
            let right_cert = saguaro_search(family, &right, memo);
            if let (Some(lc), Some(rc)) = (left_cert, right_cert) {
                let (a, b) = if lc.vertices().bits() <= rc.vertices().bits() {
                    (lc, rc)
                } else {
                    (rc, lc)
                };
                result = Some(SaguaroCert::Bridge {
                    left: Box::new(a),
                    separator: separator.clone(),
                    right: Box::new(b),
                });
                break 'candidates;
            }
        }
    }
    memo.insert(indices.to_vec(), result.clone());
    result
}

/// Assigns the non-separator members to the two sides forced by the
/// separator's alternation, or `None` when no consistent assignment exists.
/// Every connected component of the remaining union must meet the separator
/// on exactly one side, and the separator's vertices must all be covered.
fn split_by_separator(
    family: &CycleFamily,
    separator: &EdgeSet,
    rest: &[usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = family.n();
    let mut dsu = Dsu::new(n);
    let mut rest_vertices = VertexSet::EMPTY;
    for &i in rest {
        for e in family.member(i).iter() {
            dsu.union(e.u(), e.v());
        }
        rest_vertices = rest_vertices.union(&family.member(i).vertices());
    }
    let seq = graph::cycle_vertices(separator).expect("separator is a cycle");
    if !separator.vertices().is_subset(&rest_vertices) {
        return None;
    }
    // Each separator vertex is anchored to the side given by its position
    // parity; a whole component must be anchored consistently.
    for flip in [false, true] {
        let mut side_of_root: HashMap<Vertex, bool> = HashMap::new();
        let mut ok = true;
        for (i, &w) in seq.iter().enumerate() {
            let side = (i % 2 == 0) != flip;
            let root = dsu.find(w);
            match side_of_root.get(&root) {
                Some(&s) if s != side => {
                    ok = false;
                    break;
                }
                _ => {
                    side_of_root.insert(root, side);
                }
            }
        }
        if !ok {
            continue;
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut stranded = false;
        for &i in rest {
            let anchor = family.member(i).vertices().min().unwrap();
            match side_of_root.get(&dsu.find(anchor)) {
                Some(true) => left.push(i),
                Some(false) => right.push(i),
                // A component the separator never touches cannot sit on
                // either side of the alternation.
                None => {
                    stranded = true;
                    break;
                }
            }
        }
        if stranded || left.is_empty() || right.is_empty() {
            continue;
        }
        return Some((left, right));
    }
    None
}

/// Recognizes linkleaves over the full ambient ground.
///
/// The search is polynomial: each level runs the total cut-or-cycle
/// procedure on the (relabeled) sub-instance. A rainbow cycle refutes the
/// decomposition outright; a monochromatic cut, when the family truly has
/// no rainbow cycle, always satisfies the link conditions — one member
/// fully crossing, the rest confined to sides whose sizes exceed their
/// member counts by exactly one — so a single candidate cut per level
/// suffices.
///
/// Returns an error on empty or edge-sharing members; returns `None`
/// whenever the ambient vertex count differs from `|family| + 1`, since a
/// linkleaf's ground is always one larger than its family.
pub fn is_linkleaf(family: &CycleFamily) -> Result<Option<LinkleafCert>, Error> {
    for (i, m) in family.members().iter().enumerate() {
        if m.is_empty() {
            return Err(Error::EmptyMember(i));
        }
    }
    if let Some((i, j, edge)) = family.find_shared_edge() {
        return Err(Error::SharedEdge { i, j, edge });
    }
    if family.n() != family.len() + 1 {
        return Ok(None);
    }
    let all: Vec<usize> = (0..family.len()).collect();
    let cert = linkleaf_search(family, &all, VertexSet::full(family.n()));
    if let Some(c) = &cert {
        debug_assert_eq!(c.validate(family), Ok(()));
    }
    Ok(cert)
}

fn linkleaf_search(
    family: &CycleFamily,
    indices: &[usize],
    ground: VertexSet,
) -> Option<LinkleafCert> {
    debug_assert_eq!(ground.len(), indices.len() + 1);
    if indices.is_empty() {
        return Some(LinkleafCert::Empty {
            ground_vertex: ground.min().unwrap(),
        });
    }
    // Relabel the sub-instance onto a compact ambient for the cut search.
    let labels = ground.to_vec();
    let rank = |v: Vertex| labels.binary_search(&v).unwrap();
    let compact_members: Vec<EdgeSet> = indices
        .iter()
        .map(|&i| {
            EdgeSet::from_edges(
                labels.len(),
                family
                    .member(i)
                    .iter()
                    .map(|e| Edge::new(rank(e.u()), rank(e.v()))),
            )
        })
        .collect();
    let sub = CycleFamily::new(labels.len(), compact_members);
    let cut = match decide::cut_or_rainbow_cycle(&sub).expect("sub-instance is edge-disjoint") {
        CutOrCycle::Cycle(_) => return None,
        CutOrCycle::Cut(cut) => cut,
    };
    let side_a: VertexSet = cut.side_a.iter().map(|v| labels[v]).collect();
    let side_b: VertexSet = cut.side_b.iter().map(|v| labels[v]).collect();
    let bridge = indices[cut.crossing_color];
    // The bridge must cross fully, and each other member must settle on one
    // side; failure means the sub-family has a rainbow cycle after all, so
    // the whole decomposition is impossible.
    if !family
        .member(bridge)
        .iter()
        .all(|e| side_a.contains(e.u()) != side_a.contains(e.v()))
    {
        return None;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &i in indices {
        if i == bridge {
            continue;
        }
        let vs = family.member(i).vertices();
        if vs.is_subset(&side_a) {
            left.push(i);
        } else if vs.is_subset(&side_b) {
            right.push(i);
        } else {
            return None;
        }
    }
    if left.len() + 1 != side_a.len() || right.len() + 1 != side_b.len() {
        return None;
    }
    let left_cert = linkleaf_search(family, &left, side_a)?;
    let right_cert = linkleaf_search(family, &right, side_b)?;
    let (a, b) = if side_a.bits() <= side_b.bits() {
        (left_cert, right_cert)
    } else {
        (right_cert, left_cert)
    };
    Some(LinkleafCert::Link {
        left: Box::new(a),
        bridge: family.member(bridge).clone(),
        right: Box::new(b),
    })
}

// ---------------------------------------------------------------------------
// Generator scripts
// ---------------------------------------------------------------------------

/// Build plan for a pruned cactus: cycle blocks attached to already-built
/// vertices.
#[derive(Clone, Debug)]
pub struct CactusScript {
    pub blocks: Vec<CactusBlock>,
}

/// One block: a cycle of `len` fresh vertices, except that `glue` (required
/// for every block after the first, forbidden on the first) reuses an
/// existing vertex as the attachment point.
#[derive(Clone, Debug)]
pub struct CactusBlock {
    pub len: usize,
    pub glue: Option<Vertex>,
}

/// Side selector for bridge/separator endpoints in recursive scripts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A vertex of one side of a recursive script, by local index.
#[derive(Clone, Copy, Debug)]
pub struct SideVertex {
    pub side: Side,
    pub index: usize,
}

/// Build plan for a saguaro: a cactus, or two saguaros joined by an even
/// separator cycle listed as alternating side references.
#[derive(Clone, Debug)]
pub enum SaguaroScript {
    Cactus(CactusScript),
    Bridge {
        left: Box<SaguaroScript>,
        separator: Vec<SideVertex>,
        right: Box<SaguaroScript>,
    },
}

/// Build plan for a linkleaf: a single ground vertex, or two linkleaves
/// joined by a bridge member whose edges must each connect the two sides.
#[derive(Clone, Debug)]
pub enum LinkleafScript {
    Empty,
    Link {
        left: Box<LinkleafScript>,
        bridge: Vec<(SideVertex, SideVertex)>,
        right: Box<LinkleafScript>,
    },
}

/// Materializes a pruned-cactus script: each block of length `l` contributes
/// `l - 1` copies of its cycle. With `odd_only`, every block length must be
/// odd (and the resulting family size is then even).
pub fn gen_pruned_cactus(script: &CactusScript, odd_only: bool) -> Result<CycleFamily, Error> {
    if script.blocks.is_empty() {
        return Err(Error::script("a cactus script needs at least one block"));
    }
    let mut members = Vec::new();
    let mut next_vertex = 0usize;
    for (t, block) in script.blocks.iter().enumerate() {
        if block.len < 3 {
            return Err(Error::script(format!(
                "block {t} has length {}, below the minimum 3",
                block.len
            )));
        }
        if odd_only && block.len % 2 == 0 {
            return Err(Error::script(format!(
                "block {t} has even length {} in an odd-only script",
                block.len
            )));
        }
        let mut seq = Vec::with_capacity(block.len);
        match (t, block.glue) {
            (0, None) => {}
            (0, Some(_)) => {
                return Err(Error::script("the first block cannot be glued"));
            }
            (_, None) => {
                return Err(Error::script(format!("block {t} needs a glue vertex")));
            }
            (_, Some(g)) => {
                if g >= next_vertex {
                    return Err(Error::script(format!(
                        "block {t} glues to vertex {g}, but only {next_vertex} vertices exist"
                    )));
                }
                seq.push(g);
            }
        }
        while seq.len() < block.len {
            seq.push(next_vertex);
            next_vertex += 1;
        }
        members.push(seq);
    }
    let family = CycleFamily::new(
        next_vertex,
        members
            .iter()
            .flat_map(|seq| std::iter::repeat_n(EdgeSet::cycle(next_vertex, seq), seq.len() - 1))
            .collect(),
    );
    Ok(family)
}

/// Materializes a saguaro script. The right side's vertices are shifted past
/// the left side's; the separator references are validated to alternate
/// strictly between the sides.
pub fn gen_saguaro(script: &SaguaroScript) -> Result<CycleFamily, Error> {
    match script {
        SaguaroScript::Cactus(c) => gen_pruned_cactus(c, false),
        SaguaroScript::Bridge {
            left,
            separator,
            right,
        } => {
            let lf = gen_saguaro(left)?;
            let rf = gen_saguaro(right)?;
            let n = lf.n() + rf.n();
            if separator.len() < 4 || separator.len() % 2 != 0 {
                return Err(Error::script(
                    "separator must be an even cycle of length at least 4",
                ));
            }
            for (i, w) in separator.iter().enumerate() {
                let next = separator[(i + 1) % separator.len()];
                if w.side == next.side {
                    return Err(Error::script(
                        "separator endpoints must alternate between the two sides",
                    ));
                }
            }
            let mut seq = Vec::with_capacity(separator.len());
            for w in separator {
                let (limit, offset) = match w.side {
                    Side::Left => (lf.n(), 0),
                    Side::Right => (rf.n(), lf.n()),
                };
                if w.index >= limit {
                    return Err(Error::script(format!(
                        "separator references vertex {} of a {limit}-vertex side",
                        w.index
                    )));
                }
                seq.push(offset + w.index);
            }
            let mut dedup = seq.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != seq.len() {
                return Err(Error::script("separator repeats a vertex"));
            }
            let mut members: Vec<EdgeSet> = lf
                .members()
                .iter()
                .map(|m| shift_edges(m, 0, n))
                .collect();
            members.push(EdgeSet::cycle(n, &seq));
            members.extend(rf.members().iter().map(|m| shift_edges(m, lf.n(), n)));
            Ok(CycleFamily::new(n, members))
        }
    }
}

/// Materializes a linkleaf script; ground sizes compose as
/// `|left| + |right|`, and every bridge edge must join the two sides.
pub fn gen_linkleaf(script: &LinkleafScript) -> Result<CycleFamily, Error> {
    match script {
        LinkleafScript::Empty => Ok(CycleFamily::new(1, Vec::new())),
        LinkleafScript::Link {
            left,
            bridge,
            right,
        } => {
            let lf = gen_linkleaf(left)?;
            let rf = gen_linkleaf(right)?;
            let n = lf.n() + rf.n();
            if bridge.is_empty() {
                return Err(Error::script("bridge member must have at least one edge"));
            }
            let mut edges = Vec::with_capacity(bridge.len());
            for (a, b) in bridge {
                if a.side == b.side {
                    return Err(Error::script(
                        "bridge edges must join the two sides, not stay within one",
                    ));
                }
                let resolve = |w: &SideVertex| -> Result<Vertex, Error> {
                    let (limit, offset) = match w.side {
                        Side::Left => (lf.n(), 0),
                        Side::Right => (rf.n(), lf.n()),
                    };
                    if w.index >= limit {
                        return Err(Error::script(format!(
                            "bridge references vertex {} of a {limit}-vertex side",
                            w.index
                        )));
                    }
                    Ok(offset + w.index)
                };
                edges.push(Edge::new(resolve(a)?, resolve(b)?));
            }
            let mut dedup = edges.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != edges.len() {
                return Err(Error::script("bridge repeats an edge"));
            }
            let mut members: Vec<EdgeSet> = lf
                .members()
                .iter()
                .map(|m| shift_edges(m, 0, n))
                .collect();
            members.push(EdgeSet::from_edges(n, edges));
            members.extend(rf.members().iter().map(|m| shift_edges(m, lf.n(), n)));
            Ok(CycleFamily::new(n, members))
        }
    }
}

fn shift_edges(m: &EdgeSet, offset: usize, n: usize) -> EdgeSet {
    EdgeSet::from_edges(n, m.iter().map(|e| Edge::new(e.u() + offset, e.v() + offset)))
}

/// The glued-squares construction: `copies` relabeled copies of the
/// six-squares-on-six-vertices family, each sharing exactly one vertex with
/// the union of the previous ones. Yields `6 * copies` squares on
/// `5 * copies + 1` vertices with no rainbow even cycle.
pub fn gen_glued_squares(copies: usize) -> CycleFamily {
    assert!(copies >= 1, "at least one copy is required");
    let n = 5 * copies + 1;
    let mut members = Vec::with_capacity(6 * copies);
    for j in 0..copies {
        let relabel = |local: Vertex| -> Vertex {
            if local == 0 {
                5 * j
            } else {
                5 * j + local
            }
        };
        for local in [[0, 3, 1, 2], [2, 3, 4, 5]] {
            let seq: Vec<Vertex> = local.iter().map(|&v| relabel(v)).collect();
            for _ in 0..3 {
                members.push(EdgeSet::cycle(n, &seq));
            }
        }
    }
    CycleFamily::new(n, members)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ParityFilter;
    use crate::search::exhaustive_rainbow_cycle;

    fn fam(n: usize, members: Vec<EdgeSet>) -> CycleFamily {
        CycleFamily::new(n, members)
    }

    fn tri(n: usize, a: Vertex, b: Vertex, c: Vertex) -> EdgeSet {
        EdgeSet::cycle(n, &[a, b, c])
    }

    #[test]
    fn single_repeated_pentagon_is_a_leaf() {
        let p = EdgeSet::cycle(5, &[0, 1, 2, 3, 4]);
        let f = fam(5, vec![p.clone(); 4]);
        match is_pruned_cactus(&f).unwrap() {
            PrunedCactusCert::Leaf { cycle, multiplicity } => {
                assert_eq!(cycle, p);
                assert_eq!(multiplicity, 4);
            }
            other => panic!("expected a leaf, got {other:?}"),
        }
    }

    #[test]
    fn two_glued_triangles_split_at_the_shared_vertex() {
        let f = fam(
            5,
            vec![tri(5, 0, 1, 2), tri(5, 0, 1, 2), tri(5, 0, 3, 4), tri(5, 0, 3, 4)],
        );
        let cert = is_pruned_cactus(&f).unwrap();
        match &cert {
            PrunedCactusCert::Split {
                left,
                right,
                shared_vertex,
            } => {
                assert_eq!(*shared_vertex, 0);
                assert!(matches!(**left, PrunedCactusCert::Leaf { .. }));
                assert!(matches!(**right, PrunedCactusCert::Leaf { .. }));
                assert_eq!(left.vertices().to_vec(), vec![0, 1, 2]);
            }
            other => panic!("expected a split, got {other:?}"),
        }
        cert.validate(&f).unwrap();
    }

    #[test]
    fn wrong_multiplicities_are_rejected() {
        let f = fam(5, vec![tri(5, 0, 1, 2), tri(5, 0, 3, 4)]);
        assert!(is_pruned_cactus(&f).is_none());
    }

    #[test]
    fn accepted_families_satisfy_the_counting_identity() {
        let scripts = [
            CactusScript {
                blocks: vec![CactusBlock { len: 5, glue: None }],
            },
            CactusScript {
                blocks: vec![
                    CactusBlock { len: 3, glue: None },
                    CactusBlock { len: 4, glue: Some(1) },
                    CactusBlock { len: 3, glue: Some(4) },
                ],
            },
        ];
        for script in &scripts {
            let f = gen_pruned_cactus(script, false).unwrap();
            let cert = is_pruned_cactus(&f).expect("generated cactus must be accepted");
            cert.validate(&f).unwrap();
            assert_eq!(f.union().vertices().len(), f.len() + 1);
            assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Any).is_none());
        }
    }

    #[test]
    fn generator_matches_the_simple_scripts() {
        let pentagon = gen_pruned_cactus(
            &CactusScript {
                blocks: vec![CactusBlock { len: 5, glue: None }],
            },
            true,
        )
        .unwrap();
        assert_eq!(pentagon.len(), 4);
        assert_eq!(pentagon.n(), 5);
        assert!(pentagon
            .members()
            .iter()
            .all(|m| *m == EdgeSet::cycle(5, &[0, 1, 2, 3, 4])));

        let glued = gen_pruned_cactus(
            &CactusScript {
                blocks: vec![
                    CactusBlock { len: 3, glue: None },
                    CactusBlock { len: 3, glue: Some(0) },
                ],
            },
            true,
        )
        .unwrap();
        assert_eq!(glued.n(), 5);
        assert_eq!(
            glued.members().to_vec(),
            vec![
                tri(5, 0, 1, 2),
                tri(5, 0, 1, 2),
                tri(5, 0, 3, 4),
                tri(5, 0, 3, 4)
            ]
        );
    }

    /// Six odd blocks — a 7-cycle carrying a 9-cycle and a triangle, the
    /// triangle carrying a pentagon, the 9-cycle carrying a triangle that
    /// carries a pentagon — totalling 26 members on 27 vertices.
    fn six_block_odd_script() -> CactusScript {
        CactusScript {
            blocks: vec![
                CactusBlock { len: 7, glue: None },
                CactusBlock { len: 9, glue: Some(3) },
                CactusBlock { len: 3, glue: Some(3) },
                CactusBlock { len: 5, glue: Some(16) },
                CactusBlock { len: 3, glue: Some(14) },
                CactusBlock { len: 5, glue: Some(21) },
            ],
        }
    }

    #[test]
    fn the_large_odd_script_builds_26_members_on_27_vertices() {
        let f = gen_pruned_cactus(&six_block_odd_script(), true).unwrap();
        assert_eq!(f.len(), 26);
        assert_eq!(f.n(), 27);
        assert_eq!(f.len() % 2, 0); // odd-only cacti have even cardinality
        let cert = is_pruned_cactus(&f).unwrap();
        cert.validate(&f).unwrap();
    }

    #[test]
    fn cactus_scripts_reject_bad_glue_and_lengths() {
        let bad_glue = CactusScript {
            blocks: vec![
                CactusBlock { len: 3, glue: None },
                CactusBlock { len: 3, glue: Some(9) },
            ],
        };
        assert!(matches!(
            gen_pruned_cactus(&bad_glue, false),
            Err(Error::Script(_))
        ));
        let too_short = CactusScript {
            blocks: vec![CactusBlock { len: 2, glue: None }],
        };
        assert!(matches!(
            gen_pruned_cactus(&too_short, false),
            Err(Error::Script(_))
        ));
        let even_in_odd = CactusScript {
            blocks: vec![CactusBlock { len: 4, glue: None }],
        };
        assert!(matches!(
            gen_pruned_cactus(&even_in_odd, true),
            Err(Error::Script(_))
        ));
    }

    fn bridge_example() -> CycleFamily {
        fam(
            6,
            vec![
                tri(6, 0, 1, 2),
                tri(6, 0, 1, 2),
                EdgeSet::cycle(6, &[0, 3, 1, 4]),
                tri(6, 3, 4, 5),
                tri(6, 3, 4, 5),
            ],
        )
    }

    #[test]
    fn every_pruned_cactus_is_a_saguaro() {
        let f = gen_pruned_cactus(
            &CactusScript {
                blocks: vec![
                    CactusBlock { len: 3, glue: None },
                    CactusBlock { len: 3, glue: Some(0) },
                ],
            },
            false,
        )
        .unwrap();
        assert!(matches!(is_saguaro(&f), Some(SaguaroCert::Cactus(_))));
    }

    #[test]
    fn the_bridged_triangles_form_a_saguaro() {
        let f = bridge_example();
        let cert = is_saguaro(&f).unwrap();
        cert.validate(&f).unwrap();
        match &cert {
            SaguaroCert::Bridge { separator, .. } => {
                assert_eq!(*separator, EdgeSet::cycle(6, &[0, 3, 1, 4]));
            }
            other => panic!("expected a bridge, got {other:?}"),
        }
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Any).is_none());
    }

    #[test]
    fn a_lone_square_is_not_a_saguaro() {
        let f = fam(4, vec![EdgeSet::cycle(4, &[0, 1, 2, 3])]);
        assert!(is_saguaro(&f).is_none());
    }

    #[test]
    fn saguaro_script_roundtrip_and_rejection() {
        let cactus = |len| {
            Box::new(SaguaroScript::Cactus(CactusScript {
                blocks: vec![CactusBlock { len, glue: None }],
            }))
        };
        let lr = |l, r| {
            [
                SideVertex { side: Side::Left, index: l },
                SideVertex { side: Side::Right, index: r },
            ]
        };
        let script = SaguaroScript::Bridge {
            left: cactus(3),
            separator: lr(0, 0).into_iter().chain(lr(1, 1)).collect(),
            right: cactus(3),
        };
        let f = gen_saguaro(&script).unwrap();
        assert_eq!(f.len(), 5);
        assert_eq!(f.n(), 6);
        let cert = is_saguaro(&f).expect("generated saguaro must be accepted");
        cert.validate(&f).unwrap();

        let broken = SaguaroScript::Bridge {
            left: cactus(3),
            separator: vec![
                SideVertex { side: Side::Left, index: 0 },
                SideVertex { side: Side::Left, index: 1 },
                SideVertex { side: Side::Right, index: 0 },
                SideVertex { side: Side::Right, index: 1 },
            ],
            right: cactus(3),
        };
        assert!(matches!(gen_saguaro(&broken), Err(Error::Script(_))));
    }

    #[test]
    fn path_of_singleton_edges_is_a_linkleaf() {
        let f = fam(
            4,
            vec![
                EdgeSet::from_edges(4, [Edge::new(0, 1)]),
                EdgeSet::from_edges(4, [Edge::new(1, 2)]),
                EdgeSet::from_edges(4, [Edge::new(2, 3)]),
            ],
        );
        let cert = is_linkleaf(&f).unwrap().expect("a spanning path splits link by link");
        cert.validate(&f).unwrap();
    }

    #[test]
    fn the_two_member_linkleaf_example_is_accepted() {
        let f = fam(
            3,
            vec![
                EdgeSet::from_edges(3, [Edge::new(0, 1)]),
                EdgeSet::from_edges(3, [Edge::new(0, 2), Edge::new(1, 2)]),
            ],
        );
        let cert = is_linkleaf(&f).unwrap().unwrap();
        cert.validate(&f).unwrap();
        match &cert {
            LinkleafCert::Link { bridge, .. } => {
                assert_eq!(bridge.len(), 2); // the {02, 12} member crosses
            }
            other => panic!("expected a link, got {other:?}"),
        }
    }

    #[test]
    fn triangle_edges_are_not_a_linkleaf() {
        let f = fam(
            3,
            vec![
                EdgeSet::from_edges(3, [Edge::new(0, 1)]),
                EdgeSet::from_edges(3, [Edge::new(1, 2)]),
                EdgeSet::from_edges(3, [Edge::new(0, 2)]),
            ],
        );
        assert!(is_linkleaf(&f).unwrap().is_none());
    }

    #[test]
    fn linkleaf_rejects_shared_edges() {
        let e = EdgeSet::from_edges(3, [Edge::new(0, 1)]);
        let f = fam(3, vec![e.clone(), e]);
        assert!(matches!(
            is_linkleaf(&f),
            Err(Error::SharedEdge { i: 0, j: 1, .. })
        ));
    }

    #[test]
    fn linkleaf_script_star_is_accepted_and_bad_bridges_rejected() {
        // A spanning star: each link attaches one fresh vertex to vertex 0.
        let mut script = LinkleafScript::Empty;
        for _ in 0..3 {
            script = LinkleafScript::Link {
                left: Box::new(script),
                bridge: vec![(
                    SideVertex { side: Side::Left, index: 0 },
                    SideVertex { side: Side::Right, index: 0 },
                )],
                right: Box::new(LinkleafScript::Empty),
            };
        }
        let f = gen_linkleaf(&script).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.n(), 4);
        let cert = is_linkleaf(&f).unwrap().expect("generated linkleaf must be accepted");
        cert.validate(&f).unwrap();
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Any).is_none());

        let bad = LinkleafScript::Link {
            left: Box::new(LinkleafScript::Link {
                left: Box::new(LinkleafScript::Empty),
                bridge: vec![(
                    SideVertex { side: Side::Left, index: 0 },
                    SideVertex { side: Side::Left, index: 0 },
                )],
                right: Box::new(LinkleafScript::Empty),
            }),
            bridge: vec![(
                SideVertex { side: Side::Left, index: 0 },
                SideVertex { side: Side::Right, index: 0 },
            )],
            right: Box::new(LinkleafScript::Empty),
        };
        assert!(matches!(gen_linkleaf(&bad), Err(Error::Script(_))));
    }

    #[test]
    fn glued_squares_match_the_base_construction() {
        let f = gen_glued_squares(1);
        assert_eq!(f.n(), 6);
        assert_eq!(f.len(), 6);
        let green = EdgeSet::cycle(6, &[0, 3, 1, 2]);
        let red = EdgeSet::cycle(6, &[2, 3, 4, 5]);
        assert_eq!(
            f.members().to_vec(),
            vec![green.clone(), green.clone(), green, red.clone(), red.clone(), red]
        );
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Even).is_none());
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Odd).is_some());
    }

    #[test]
    fn glued_squares_scale_by_five_vertices_per_copy() {
        let f = gen_glued_squares(2);
        assert_eq!(f.n(), 11);
        assert_eq!(f.len(), 12);
        assert!(exhaustive_rainbow_cycle(&f, ParityFilter::Even).is_none());
        for k in 1..=4 {
            let g = gen_glued_squares(k);
            assert_eq!((g.n(), g.len()), (5 * k + 1, 6 * k));
        }
    }

    #[test]
    fn generated_saguaros_keep_a_common_cycle_at_every_vertex() {
        // A cycle of length l is "common" when repeated exactly l - 1
        // times; every vertex of a saguaro's union lies on one.
        let scripts = [
            SaguaroScript::Cactus(CactusScript {
                blocks: vec![
                    CactusBlock { len: 3, glue: None },
                    CactusBlock { len: 5, glue: Some(2) },
                ],
            }),
            SaguaroScript::Bridge {
                left: Box::new(SaguaroScript::Cactus(CactusScript {
                    blocks: vec![CactusBlock { len: 3, glue: None }],
                })),
                separator: vec![
                    SideVertex { side: Side::Left, index: 0 },
                    SideVertex { side: Side::Right, index: 0 },
                    SideVertex { side: Side::Left, index: 1 },
                    SideVertex { side: Side::Right, index: 1 },
                ],
                right: Box::new(SaguaroScript::Cactus(CactusScript {
                    blocks: vec![CactusBlock { len: 3, glue: None }],
                })),
            },
        ];
        for script in &scripts {
            let f = gen_saguaro(script).unwrap();
            assert!(is_saguaro(&f).is_some());
            for v in f.union().vertices().iter() {
                let covered = f.members().iter().any(|m| {
                    m.vertices().contains(v)
                        && f.members().iter().filter(|o| *o == m).count() == m.len() - 1
                });
                assert!(covered, "vertex {v} lies on no common cycle");
            }
        }
    }
}
