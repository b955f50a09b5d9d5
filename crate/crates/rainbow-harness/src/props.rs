//! Randomized property suites behind the acceptance gate.
//!
//! Each suite runs a stated number of seeded cases and returns the number
//! of cases checked, or a description of the first failing case. They are
//! deliberately independent re-statements of the invariants (including a
//! verbatim recursive pruned-cactus definition), so the constructive code
//! is judged against naive formulations rather than against itself.

use rainbow_core::decide::{cut_or_rainbow_cycle, CutOrCycle};
use rainbow_core::graph::{
    self, CycleFamily, Edge, EdgeSet, Parity, ParityFilter, VertexSet,
};
use rainbow_core::matroid::{rado_condition, rainbow_spanning_tree};
use rainbow_core::search::{exhaustive_rainbow_cycle, find_rainbow_cycle, find_rainbow_odd_cycle};
use rainbow_core::structures::{
    gen_pruned_cactus, is_pruned_cactus, is_saguaro, CactusBlock, CactusScript,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::verify::clique_edges;

type Cases = Result<u64, String>;

fn complete(n: usize) -> EdgeSet {
    EdgeSet::from_edges(n, clique_edges(n))
}

fn random_subset(rng: &mut StdRng, n: usize, max_edges: usize) -> EdgeSet {
    let all = clique_edges(n);
    let target = rng.random_range(0..=max_edges.min(all.len()));
    let mut set = EdgeSet::new(n);
    for _ in 0..target {
        set.insert(all[rng.random_range(0..all.len())]);
    }
    set
}

fn random_family_from_pool(
    rng: &mut StdRng,
    ambient: usize,
    pool: &[EdgeSet],
    size: usize,
) -> CycleFamily {
    CycleFamily::new(
        ambient,
        (0..size)
            .map(|_| pool[rng.random_range(0..pool.len())].clone())
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// 1. Certificate soundness
// ---------------------------------------------------------------------------

/// Every certificate any recognizer or search emits must re-validate
/// against the family it was produced from.
pub fn certificate_soundness(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    let pools: Vec<(usize, Vec<EdgeSet>)> = (4..=6)
        .map(|n| (n, graph::enumerate_cycles(n, ParityFilter::Any, None).collect()))
        .collect();
    for case in 0..cases {
        let (ambient, pool) = &pools[rng.random_range(0..pools.len())];
        let size = rng.random_range(1..=6);
        let family = random_family_from_pool(&mut rng, *ambient, pool, size);
        if let Some(cert) = is_pruned_cactus(&family) {
            cert.validate(&family)
                .map_err(|e| format!("case {case}: cactus certificate invalid: {e}"))?;
        }
        if let Some(cert) = is_saguaro(&family) {
            cert.validate(&family)
                .map_err(|e| format!("case {case}: saguaro certificate invalid: {e}"))?;
        }
        // The odd-cycle search requires all-odd members.
        if family
            .members()
            .iter()
            .all(|m| graph::is_cycle(m) == Some(Parity::Odd))
        {
            if let Some(cert) = find_rainbow_odd_cycle(&family) {
                if cert.parity != Parity::Odd {
                    return Err(format!("case {case}: odd search returned an even cycle"));
                }
                cert.validate(&family)
                    .map_err(|e| format!("case {case}: odd-cycle certificate invalid: {e}"))?;
            }
        }
        if let Some(cert) = find_rainbow_cycle(&family) {
            cert.validate(&family)
                .map_err(|e| format!("case {case}: cycle certificate invalid: {e}"))?;
        }
        if let Some(cert) = exhaustive_rainbow_cycle(&family, ParityFilter::Any) {
            cert.validate(&family)
                .map_err(|e| format!("case {case}: oracle certificate invalid: {e}"))?;
        }
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// 2. Oracle agreement
// ---------------------------------------------------------------------------

/// The constructive searches find a rainbow (odd) cycle exactly when the
/// exhaustive oracle does.
pub fn oracle_agreement(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    let any_pools: Vec<(usize, Vec<EdgeSet>)> = (3..=6)
        .map(|n| (n, graph::enumerate_cycles(n, ParityFilter::Any, None).collect()))
        .collect();
    let odd_pools: Vec<(usize, Vec<EdgeSet>)> = (3..=6)
        .map(|n| (n, graph::enumerate_cycles(n, ParityFilter::Odd, None).collect()))
        .collect();
    for case in 0..cases {
        // Alternate between arbitrary cycle families (any-parity search)
        // and all-odd families, where the odd search also applies.
        let odd_members = rng.random_bool(0.5);
        let pools = if odd_members { &odd_pools } else { &any_pools };
        let (ambient, pool) = &pools[rng.random_range(0..pools.len())];
        let size = rng.random_range(1..=5);
        let family = random_family_from_pool(&mut rng, *ambient, pool, size);
        let any_constructive = find_rainbow_cycle(&family).is_some();
        let any_oracle = exhaustive_rainbow_cycle(&family, ParityFilter::Any).is_some();
        if any_constructive != any_oracle {
            return Err(format!(
                "case {case}: any-parity search {any_constructive} vs oracle {any_oracle} on {family:?}"
            ));
        }
        if odd_members {
            let odd_constructive = find_rainbow_odd_cycle(&family).is_some();
            let odd_oracle = exhaustive_rainbow_cycle(&family, ParityFilter::Odd).is_some();
            if odd_constructive != odd_oracle {
                return Err(format!(
                    "case {case}: odd search {odd_constructive} vs oracle {odd_oracle} on {family:?}"
                ));
            }
        }
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// 3. Contraction vertex-count identity
// ---------------------------------------------------------------------------

/// Contracting a nonempty proper vertex set `S` of the complete graph
/// leaves an ambient (and touched-vertex count) of exactly `n − |S| + 1`.
pub fn contraction_identity(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    for case in 0..cases {
        let n = rng.random_range(3..=8);
        let g = complete(n);
        // Nonempty proper subset of the vertices.
        let mut s = VertexSet::EMPTY;
        let keep = rng.random_range(0..n);
        for v in 0..n {
            if v != keep && rng.random_bool(0.5) {
                s.insert(v);
            }
        }
        if s.is_empty() {
            s.insert(if keep == 0 { 1 } else { 0 });
        }
        let contracted = graph::contract(&g, &s)
            .map_err(|e| format!("case {case}: contraction failed: {e}"))?;
        let expected = n - s.len() + 1;
        if contracted.n() != expected || contracted.vertices().len() != expected {
            return Err(format!(
                "case {case}: contracting |S|={} of K_{n} gave ambient {} with {} touched vertices, expected {expected}",
                s.len(),
                contracted.n(),
                contracted.vertices().len()
            ));
        }
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// 4. Symmetric-difference algebra
// ---------------------------------------------------------------------------

/// Commutativity, associativity, self-inverse, and cancellation of the
/// edge-set symmetric difference.
pub fn symmetric_difference_algebra(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    for case in 0..cases {
        let n = rng.random_range(3..=8);
        let a = random_subset(&mut rng, n, 12);
        let b = random_subset(&mut rng, n, 12);
        let c = random_subset(&mut rng, n, 12);
        if a.xor(&b) != b.xor(&a) {
            return Err(format!("case {case}: xor is not commutative"));
        }
        if a.xor(&b).xor(&c) != a.xor(&b.xor(&c)) {
            return Err(format!("case {case}: xor is not associative"));
        }
        if !a.xor(&a).is_empty() {
            return Err(format!("case {case}: xor is not self-inverse"));
        }
        if a.xor(&b).xor(&b) != a {
            return Err(format!("case {case}: xor does not cancel"));
        }
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// 5. Pruned-cactus recognizer vs the recursive definition
// ---------------------------------------------------------------------------

/// Verbatim recursive definition: all members are one cycle of length
/// `|family| + 1`, or the members split into two pruned cacti whose unions
/// share exactly one vertex. Exponential, used as ground truth.
fn naive_pruned_cactus(members: &[EdgeSet]) -> bool {
    if members.is_empty() {
        return false;
    }
    if members.windows(2).all(|w| w[0] == w[1])
        && graph::is_cycle(&members[0]).is_some()
        && members[0].len() == members.len() + 1
    {
        return true;
    }
    if members.len() < 2 {
        return false;
    }
    let union_vertices = |part: &[&EdgeSet]| {
        part.iter().fold(VertexSet::EMPTY, |acc, m| acc.union(&m.vertices()))
    };
    let full = (1u32 << members.len()) - 1;
    // Fix member 0 on the left to halve the split space.
    for mask in (1..full).filter(|m| m & 1 == 1) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, m) in members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(m);
            } else {
                right.push(m);
            }
        }
        if union_vertices(&left).intersection(&union_vertices(&right)).len() == 1
            && naive_pruned_cactus(&left.iter().map(|m| (*m).clone()).collect::<Vec<_>>())
            && naive_pruned_cactus(&right.iter().map(|m| (*m).clone()).collect::<Vec<_>>())
        {
            return true;
        }
    }
    false
}

fn random_cactus_script(rng: &mut StdRng) -> CactusScript {
    let block_count = rng.random_range(1..=3);
    let mut blocks = Vec::new();
    let mut vertices = 0usize;
    for i in 0..block_count {
        let len = [3, 4, 5][rng.random_range(0..3)];
        let glue = if i == 0 {
            None
        } else {
            Some(rng.random_range(0..vertices))
        };
        vertices += if i == 0 { len } else { len - 1 };
        blocks.push(CactusBlock { len, glue });
    }
    CactusScript { blocks }
}

fn reanchor(family: &CycleFamily, ambient: usize) -> CycleFamily {
    CycleFamily::new(
        ambient,
        family
            .members()
            .iter()
            .map(|m| EdgeSet::from_edges(ambient, m.iter()))
            .collect(),
    )
}

/// The block-decomposition recognizer agrees with the recursive
/// definition on random families, generated cacti, and perturbed cacti.
pub fn cactus_block_equivalence(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    let pool6: Vec<EdgeSet> = graph::enumerate_cycles(6, ParityFilter::Any, None).collect();
    let pool5: Vec<EdgeSet> = graph::enumerate_cycles(5, ParityFilter::Any, None).collect();
    let mut accepted = 0u64;
    let mut rejected = 0u64;
    for case in 0..cases {
        let family = match rng.random_range(0..3) {
            0 => {
                let (ambient, pool) = if rng.random_bool(0.5) {
                    (5, &pool5)
                } else {
                    (6, &pool6)
                };
                let size = rng.random_range(1..=5);
                random_family_from_pool(&mut rng, ambient, pool, size)
            }
            1 => {
                let script = random_cactus_script(&mut rng);
                gen_pruned_cactus(&script, false)
                    .map_err(|e| format!("case {case}: generator rejected its own script: {e}"))?
            }
            _ => {
                let script = random_cactus_script(&mut rng);
                let base = gen_pruned_cactus(&script, false)
                    .map_err(|e| format!("case {case}: generator rejected its own script: {e}"))?;
                let ambient = base.n().max(6);
                let base = reanchor(&base, ambient);
                let mut members: Vec<EdgeSet> = base.members().to_vec();
                match rng.random_range(0..3) {
                    0 if members.len() > 1 => {
                        let victim = rng.random_range(0..members.len());
                        members.remove(victim);
                    }
                    1 => {
                        let copied = members[rng.random_range(0..members.len())].clone();
                        members.push(copied);
                    }
                    _ => {
                        let slot = rng.random_range(0..members.len());
                        let replacement = &pool6[rng.random_range(0..pool6.len())];
                        members[slot] = EdgeSet::from_edges(ambient, replacement.iter());
                    }
                }
                CycleFamily::new(ambient, members)
            }
        };
        let block = is_pruned_cactus(&family);
        let naive = naive_pruned_cactus(family.members());
        if block.is_some() != naive {
            return Err(format!(
                "case {case}: block recognizer {} vs recursive definition {naive} on {family:?}",
                block.is_some()
            ));
        }
        if let Some(cert) = block {
            cert.validate(&family)
                .map_err(|e| format!("case {case}: accepted certificate invalid: {e}"))?;
            accepted += 1;
        } else {
            rejected += 1;
        }
    }
    if cases >= 100 && (accepted == 0 || rejected == 0) {
        return Err(format!(
            "degenerate mix: {accepted} accepted / {rejected} rejected"
        ));
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// Cut-or-cycle totality
// ---------------------------------------------------------------------------

fn random_edge_disjoint_family(rng: &mut StdRng, ambient: usize, colors: usize) -> CycleFamily {
    let edges = clique_edges(ambient);
    loop {
        let mut masks = vec![0u64; colors];
        for (pos, _) in edges.iter().enumerate() {
            let d = rng.random_range(0..=colors);
            if d < colors {
                masks[d] |= 1 << pos;
            }
        }
        if masks.iter().all(|&m| m != 0) {
            let members = masks
                .iter()
                .map(|&m| {
                    EdgeSet::from_edges(
                        ambient,
                        edges
                            .iter()
                            .enumerate()
                            .filter(|&(pos, _)| m >> pos & 1 == 1)
                            .map(|(_, &e)| e),
                    )
                })
                .collect();
            return CycleFamily::new(ambient, members);
        }
    }
}

fn check_cut_total(family: &CycleFamily, label: &str) -> Result<(), String> {
    match cut_or_rainbow_cycle(family) {
        Ok(CutOrCycle::Cut(cert)) => cert
            .validate(family)
            .map_err(|e| format!("{label}: cut certificate invalid: {e}")),
        Ok(CutOrCycle::Cycle(cert)) => cert
            .validate(family)
            .map_err(|e| format!("{label}: cycle certificate invalid: {e}")),
        Err(e) => Err(format!("{label}: procedure refused a valid family: {e}")),
    }
}

/// Totality on sampled valid inputs: ambient 5–7 vertices, `ambient` or
/// `ambient − 1` colors, every call must return a validating certificate.
pub fn cut_totality_sampled(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    for case in 0..cases {
        let ambient = rng.random_range(5..=7);
        let colors = ambient - rng.random_range(0..=1);
        let family = random_edge_disjoint_family(&mut rng, ambient, colors);
        check_cut_total(&family, &format!("case {case}"))?;
    }
    Ok(cases)
}

/// Totality on every valid edge-disjoint family with at most 4 ambient
/// vertices (colors = ambient or ambient − 1); returns the family count.
pub fn cut_totality_exhaustive_small() -> Cases {
    let mut checked = 0u64;
    for ambient in 3..=4usize {
        let edges = clique_edges(ambient);
        for colors in [ambient - 1, ambient] {
            let base = (colors + 1) as u64;
            let total = base.pow(edges.len() as u32);
            for code in 0..total {
                let mut masks = vec![0u64; colors];
                let mut x = code;
                for pos in 0..edges.len() {
                    let d = (x % base) as usize;
                    x /= base;
                    if d < colors {
                        masks[d] |= 1 << pos;
                    }
                }
                if masks.iter().any(|&m| m == 0) {
                    continue;
                }
                let members = masks
                    .iter()
                    .map(|&m| {
                        EdgeSet::from_edges(
                            ambient,
                            edges
                                .iter()
                                .enumerate()
                                .filter(|&(pos, _)| m >> pos & 1 == 1)
                                .map(|(_, &e)| e),
                        )
                    })
                    .collect();
                let family = CycleFamily::new(ambient, members);
                check_cut_total(
                    &family,
                    &format!("ambient {ambient}, {colors} colors, code {code}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

// ---------------------------------------------------------------------------
// Rado equivalence
// ---------------------------------------------------------------------------

fn random_connected_member(rng: &mut StdRng, n: usize, max_edges: usize) -> EdgeSet {
    let target = rng.random_range(1..=max_edges.min(n * (n - 1) / 2));
    let mut set = EdgeSet::new(n);
    let mut touched = vec![rng.random_range(0..n)];
    while set.len() < target {
        let u = touched[rng.random_range(0..touched.len())];
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        if set.insert(Edge::new(u, v)) && !touched.contains(&v) {
            touched.push(v);
        }
    }
    set
}

fn spanning_tree_shape_ok(tree_edges: &EdgeSet, n: usize) -> bool {
    if tree_edges.len() != n - 1 || tree_edges.vertices().len() != n {
        return false;
    }
    // n − 1 edges touching all n vertices form a tree exactly when they
    // are connected: breadth-first reach from vertex 0.
    let mut seen = vec![false; n];
    let mut queue = vec![0usize];
    seen[0] = true;
    while let Some(u) = queue.pop() {
        for v in tree_edges.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A rainbow spanning tree exists exactly when every index set `I` spans
/// at least `|I| + 1` vertices; found trees must be spanning, acyclic,
/// and properly colored.
pub fn rado_equivalence(cases: u64, seed: u64) -> Cases {
    let mut rng = StdRng::seed_from_u64(seed);
    for case in 0..cases {
        let m = rng.random_range(1..=5);
        let n = m + 1;
        let members: Vec<EdgeSet> = (0..m)
            .map(|_| random_connected_member(&mut rng, n, 4))
            .collect();
        let family = CycleFamily::new(n, members);
        let report = rado_condition(&family)
            .map_err(|e| format!("case {case}: rado check refused the family: {e}"))?;
        let tree = rainbow_spanning_tree(&family)
            .map_err(|e| format!("case {case}: tree search refused the family: {e}"))?;
        match tree {
            Some(t) => {
                if !report.satisfied {
                    return Err(format!(
                        "case {case}: tree found although the span condition fails ({:?})",
                        report.violating_index_set
                    ));
                }
                t.validate(&family)
                    .map_err(|e| format!("case {case}: tree coloring invalid: {e}"))?;
                if !spanning_tree_shape_ok(&t.edges(), n) {
                    return Err(format!("case {case}: result is not a spanning tree"));
                }
            }
            None => {
                if report.satisfied {
                    return Err(format!(
                        "case {case}: span condition holds but no tree was found on {family:?}"
                    ));
                }
            }
        }
    }
    Ok(cases)
}
