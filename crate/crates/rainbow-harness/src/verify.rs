//! Exhaustive and sampled theorem sweeps.
//!
//! Each theorem id names a family space and a per-family check. Exhaustive
//! mode enumerates the space completely inside a documented envelope;
//! sample mode draws seeded, reproducible families from the same space.
//! Both modes shard the index space and merge per-shard tallies in order,
//! so reports are identical across thread counts.
//!
//! Family spaces come in two shapes:
//!
//! * **multisets of cycles** — `t`-multisets over the deterministic
//!   [`graph::enumerate_cycles`] order, indexed by rank in the
//!   combinatorial number system (no isomorphism reduction);
//! * **edge colorings** — assignments of the ambient clique's edges to
//!   `colors` classes plus "unused", keeping assignments whose classes are
//!   all nonempty; exhaustive mode keeps one canonical representative per
//!   unordered family (classes in ascending bitmask order).

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rainbow_core::decide::{cut_or_rainbow_cycle, CutOrCycle};
use rainbow_core::graph::{self, CycleFamily, Edge, EdgeSet, Parity, ParityFilter};
use rainbow_core::matroid::{encode_odd_cycle_instance, matroid_rainbow_span};
use rainbow_core::search::{exhaustive_rainbow_cycle, find_rainbow_cycle, find_rainbow_odd_cycle};
use rainbow_core::structures::{is_linkleaf, is_pruned_cactus, is_saguaro};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::FamilyDto;
use crate::par::{run_sharded, Parallelism};
use crate::report::{ReportMode, Tally, VerificationReport};
use crate::threshold::even_cycle_bound;
use crate::Error;

// ---------------------------------------------------------------------------
// Theorem ids and modes
// ---------------------------------------------------------------------------

/// The statements the harness can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Every family of `2⌈n/2⌉−1` odd cycles in `K_n` has a rainbow odd cycle.
    OddCycles,
    /// Weaker count: every family of `n` odd cycles in `K_n` has one.
    Woc,
    /// Families of `n` odd cycles in `K_{n+1}`: no rainbow odd cycle ⇔
    /// the family is a pruned cactus.
    OddChar,
    /// Every family of `n` cycles in `K_n` has a rainbow cycle.
    Rgc,
    /// Families of `n` cycles in `K_{n+1}`: no rainbow cycle ⇔ saguaro.
    CyclesChar,
    /// `n` edge-disjoint nonempty subgraphs of `K_n` always yield the
    /// rainbow-cycle branch of the cut-or-cycle procedure.
    EdgeDisjoint,
    /// `n` edge-disjoint nonempty subgraphs of `K_{n+1}`: no rainbow
    /// cycle ⇔ linkleaf.
    Linkleaf,
    /// Every family of `⌊3(n−1)/2⌋+1` even cycles in `K_n` has a rainbow
    /// even cycle.
    EvenCyclesBound,
    /// The binary-matroid reduction: on families of `n` odd cycles in
    /// `K_n`, the greedy span procedure and the direct search agree.
    MatroidSpan,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::OddCycles,
        TheoremId::Woc,
        TheoremId::OddChar,
        TheoremId::Rgc,
        TheoremId::CyclesChar,
        TheoremId::EdgeDisjoint,
        TheoremId::Linkleaf,
        TheoremId::EvenCyclesBound,
        TheoremId::MatroidSpan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::OddCycles => "odd-cycles",
            TheoremId::Woc => "woc",
            TheoremId::OddChar => "odd-char",
            TheoremId::Rgc => "rgc",
            TheoremId::CyclesChar => "cycles-char",
            TheoremId::EdgeDisjoint => "edge-disjoint",
            TheoremId::Linkleaf => "linkleaf",
            TheoremId::EvenCyclesBound => "even-cycles-bound",
            TheoremId::MatroidSpan => "matroid-span",
        }
    }

    /// Largest `n` the exhaustive mode accepts (raw multiset counts stay
    /// in the hundreds of thousands, colorings under `5^10`).
    pub fn exhaustive_max(self) -> usize {
        match self {
            TheoremId::OddCycles | TheoremId::Woc | TheoremId::Rgc | TheoremId::MatroidSpan => 5,
            TheoremId::OddChar
            | TheoremId::CyclesChar
            | TheoremId::EdgeDisjoint
            | TheoremId::Linkleaf
            | TheoremId::EvenCyclesBound => 4,
        }
    }

    /// Largest `n` the sampled mode accepts (per-family checks stay
    /// tractable; oracle cost grows with the ambient clique).
    pub fn sample_max(self) -> usize {
        match self {
            TheoremId::OddCycles
            | TheoremId::Woc
            | TheoremId::Rgc
            | TheoremId::MatroidSpan
            | TheoremId::EdgeDisjoint => 7,
            TheoremId::OddChar
            | TheoremId::CyclesChar
            | TheoremId::Linkleaf
            | TheoremId::EvenCyclesBound => 6,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Sweep strategy: full enumeration or seeded sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

// ---------------------------------------------------------------------------
// Multiset ranking (combinatorial number system, lexicographic)
// ---------------------------------------------------------------------------

/// Exact binomial coefficient; callers keep `a ≤ ~4000`, `b ≤ 16`, which
/// fits `u128` comfortably.
pub fn binomial_u128(a: u128, b: u128) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for i in 1..=b {
        r = r * (a - b + i) / i;
    }
    r
}

/// Number of `t`-multisets over `c` items: `C(c+t−1, t)` (and 1 when
/// `t = 0`, including the degenerate `c = 0` case).
pub fn multiset_count(c: usize, t: usize) -> u128 {
    if t == 0 {
        return 1;
    }
    binomial_u128((c + t - 1) as u128, t as u128)
}

/// `idx`-th (0-based) nondecreasing index multiset of size `t` over
/// `0..c`, in lexicographic order.
pub fn unrank_multiset(c: usize, t: usize, mut idx: u128) -> Vec<usize> {
    debug_assert!(idx < multiset_count(c, t));
    let mut out = Vec::with_capacity(t);
    let mut min = 0usize;
    for slot in 0..t {
        let remaining = t - slot - 1;
        for v in min..c {
            let cnt = multiset_count(c - v, remaining);
            if idx < cnt {
                out.push(v);
                min = v;
                break;
            }
            idx -= cnt;
        }
    }
    debug_assert_eq!(out.len(), t);
    out
}

/// Advances to the lexicographic successor; `false` at the end.
pub fn next_multiset(indices: &mut [usize], c: usize) -> bool {
    for p in (0..indices.len()).rev() {
        if indices[p] + 1 < c {
            let v = indices[p] + 1;
            for q in p..indices.len() {
                indices[q] = v;
            }
            return true;
        }
    }
    false
}

/// Per-sample deterministic generator: shard- and order-independent, so a
/// seed fully determines sample `i` no matter how the sweep is split.
pub fn sample_rng(seed: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

// ---------------------------------------------------------------------------
// Per-theorem checks
// ---------------------------------------------------------------------------

fn check_rainbow_odd(f: &CycleFamily) -> bool {
    match find_rainbow_odd_cycle(f) {
        Some(cert) => cert.parity == Parity::Odd && cert.validate(f).is_ok(),
        None => false,
    }
}

fn check_rgc(f: &CycleFamily) -> bool {
    match find_rainbow_cycle(f) {
        Some(cert) => cert.validate(f).is_ok(),
        None => false,
    }
}

fn check_odd_char(f: &CycleFamily) -> bool {
    let rainbow = exhaustive_rainbow_cycle(f, ParityFilter::Odd);
    match is_pruned_cactus(f) {
        Some(cert) => rainbow.is_none() && cert.validate(f).is_ok(),
        None => matches!(&rainbow, Some(c) if c.parity == Parity::Odd && c.validate(f).is_ok()),
    }
}

fn check_cycles_char(f: &CycleFamily) -> bool {
    let rainbow = exhaustive_rainbow_cycle(f, ParityFilter::Any);
    match is_saguaro(f) {
        Some(cert) => rainbow.is_none() && cert.validate(f).is_ok(),
        None => matches!(&rainbow, Some(c) if c.validate(f).is_ok()),
    }
}

fn check_edge_disjoint(f: &CycleFamily) -> bool {
    match cut_or_rainbow_cycle(f) {
        Ok(CutOrCycle::Cycle(cert)) => cert.validate(f).is_ok(),
        _ => false,
    }
}

fn check_linkleaf_char(f: &CycleFamily) -> bool {
    let rainbow = exhaustive_rainbow_cycle(f, ParityFilter::Any);
    match is_linkleaf(f) {
        Ok(Some(cert)) => rainbow.is_none() && cert.validate(f).is_ok(),
        Ok(None) => matches!(&rainbow, Some(c) if c.validate(f).is_ok()),
        Err(_) => false,
    }
}

fn check_even_bound(f: &CycleFamily) -> bool {
    match exhaustive_rainbow_cycle(f, ParityFilter::Even) {
        Some(cert) => cert.parity == Parity::Even && cert.validate(f).is_ok(),
        None => false,
    }
}

fn check_matroid_span(f: &CycleFamily) -> bool {
    let Some(direct) = find_rainbow_odd_cycle(f) else {
        return false;
    };
    if direct.parity != Parity::Odd || direct.validate(f).is_err() {
        return false;
    }
    let (matroid, marker, classes) = encode_odd_cycle_instance(f);
    match matroid_rainbow_span(&matroid, marker, &classes) {
        Ok(span) => span.validate(&matroid, &classes, marker).is_ok(),
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------------
// Family spaces
// ---------------------------------------------------------------------------

enum Space {
    /// `t`-multisets of the cycles of `K_ambient` matching `parity`.
    CycleMultiset {
        ambient: usize,
        parity: ParityFilter,
        t: usize,
    },
    /// Assignments of `K_ambient`'s edges to `colors` classes + "unused",
    /// all classes nonempty.
    EdgeColoring { ambient: usize, colors: usize },
}

fn space_and_check(id: TheoremId, n: usize) -> (Space, fn(&CycleFamily) -> bool) {
    match id {
        TheoremId::OddCycles => (
            Space::CycleMultiset {
                ambient: n,
                parity: ParityFilter::Odd,
                t: 2 * n.div_ceil(2) - 1,
            },
            check_rainbow_odd,
        ),
        TheoremId::Woc => (
            Space::CycleMultiset {
                ambient: n,
                parity: ParityFilter::Odd,
                t: n,
            },
            check_rainbow_odd,
        ),
        TheoremId::OddChar => (
            Space::CycleMultiset {
                ambient: n + 1,
                parity: ParityFilter::Odd,
                t: n,
            },
            check_odd_char,
        ),
        TheoremId::Rgc => (
            Space::CycleMultiset {
                ambient: n,
                parity: ParityFilter::Any,
                t: n,
            },
            check_rgc,
        ),
        TheoremId::CyclesChar => (
            Space::CycleMultiset {
                ambient: n + 1,
                parity: ParityFilter::Any,
                t: n,
            },
            check_cycles_char,
        ),
        TheoremId::EdgeDisjoint => (
            Space::EdgeColoring {
                ambient: n,
                colors: n,
            },
            check_edge_disjoint,
        ),
        TheoremId::Linkleaf => (
            Space::EdgeColoring {
                ambient: n + 1,
                colors: n,
            },
            check_linkleaf_char,
        ),
        TheoremId::EvenCyclesBound => (
            Space::CycleMultiset {
                ambient: n,
                parity: ParityFilter::Even,
                t: even_cycle_bound(n),
            },
            check_even_bound,
        ),
        TheoremId::MatroidSpan => (
            Space::CycleMultiset {
                ambient: n,
                parity: ParityFilter::Odd,
                t: n,
            },
            check_matroid_span,
        ),
    }
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Runs one theorem sweep and reports every counterexample found.
pub fn verify_theorem(
    id: TheoremId,
    n: usize,
    mode: VerifyMode,
    par: Parallelism,
) -> Result<VerificationReport, Error> {
    if n < 3 {
        return Err(Error::Invalid(format!(
            "theorem sweeps need n >= 3, got {n}"
        )));
    }
    match mode {
        VerifyMode::Exhaustive => {
            if n > id.exhaustive_max() {
                return Err(Error::EnvelopeExceeded);
            }
        }
        VerifyMode::Sample { .. } => {
            if n > id.sample_max() {
                return Err(Error::SampleEnvelope {
                    what: id.as_str(),
                    n,
                    max: id.sample_max(),
                });
            }
        }
    }

    let start = Instant::now();
    let (space, check) = space_and_check(id, n);
    let tally = match (&space, mode) {
        (&Space::CycleMultiset { ambient, parity, t }, VerifyMode::Exhaustive) => {
            sweep_multisets_exhaustive(ambient, parity, t, check, par)
        }
        (&Space::CycleMultiset { ambient, parity, t }, VerifyMode::Sample { count, seed }) => {
            sweep_multisets_sampled(ambient, parity, t, check, par, count, seed)
        }
        (&Space::EdgeColoring { ambient, colors }, VerifyMode::Exhaustive) => {
            sweep_colorings_exhaustive(ambient, colors, check, par)
        }
        (&Space::EdgeColoring { ambient, colors }, VerifyMode::Sample { count, seed }) => {
            sweep_colorings_sampled(ambient, colors, check, par, count, seed)
        }
    };
    let report_mode = match mode {
        VerifyMode::Exhaustive => ReportMode::Exhaustive,
        VerifyMode::Sample { .. } => ReportMode::Sample,
    };
    Ok(tally.into_report(
        id.to_string(),
        n,
        report_mode,
        start.elapsed().as_secs_f64(),
    ))
}

fn family_from_indices(ambient: usize, pool: &[EdgeSet], indices: &[usize]) -> CycleFamily {
    CycleFamily::new(ambient, indices.iter().map(|&i| pool[i].clone()).collect())
}

fn check_into(tally: &mut Tally, check: fn(&CycleFamily) -> bool, family: &CycleFamily) {
    if check(family) {
        tally.record_pass();
    } else {
        tally.record_failure(FamilyDto::from_family(family));
    }
}

fn sweep_multisets_exhaustive(
    ambient: usize,
    parity: ParityFilter,
    t: usize,
    check: fn(&CycleFamily) -> bool,
    par: Parallelism,
) -> Tally {
    let pool: Vec<EdgeSet> = graph::enumerate_cycles(ambient, parity, None).collect();
    let total = multiset_count(pool.len(), t);
    assert!(total <= u64::MAX as u128, "exhaustive envelope too large");
    run_sharded(
        par,
        total as u64,
        1024,
        Tally::default(),
        |range| {
            let mut tally = Tally::default();
            let mut indices = unrank_multiset(pool.len(), t, range.start as u128);
            let mut live = true;
            for _ in range {
                debug_assert!(live);
                let family = family_from_indices(ambient, &pool, &indices);
                check_into(&mut tally, check, &family);
                live = next_multiset(&mut indices, pool.len());
            }
            tally
        },
        Tally::merge,
    )
}

fn sweep_multisets_sampled(
    ambient: usize,
    parity: ParityFilter,
    t: usize,
    check: fn(&CycleFamily) -> bool,
    par: Parallelism,
    count: u64,
    seed: u64,
) -> Tally {
    let pool: Vec<EdgeSet> = graph::enumerate_cycles(ambient, parity, None).collect();
    let total = multiset_count(pool.len(), t);
    run_sharded(
        par,
        count,
        256,
        Tally::default(),
        |range| {
            let mut tally = Tally::default();
            for i in range {
                let mut rng = sample_rng(seed, i);
                let idx = rng.random_range(0..total);
                let indices = unrank_multiset(pool.len(), t, idx);
                let family = family_from_indices(ambient, &pool, &indices);
                check_into(&mut tally, check, &family);
            }
            tally
        },
        Tally::merge,
    )
}

pub(crate) fn clique_edges(ambient: usize) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(ambient * (ambient - 1) / 2);
    for u in 0..ambient {
        for v in (u + 1)..ambient {
            edges.push(Edge::new(u, v));
        }
    }
    edges
}

fn family_from_masks(ambient: usize, edges: &[Edge], masks: &[u64]) -> CycleFamily {
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
    CycleFamily::new(ambient, members)
}

fn sweep_colorings_exhaustive(
    ambient: usize,
    colors: usize,
    check: fn(&CycleFamily) -> bool,
    par: Parallelism,
) -> Tally {
    let edges = clique_edges(ambient);
    let base = (colors + 1) as u64;
    let total = base.checked_pow(edges.len() as u32).expect("space too big");
    let edges = &edges;
    run_sharded(
        par,
        total,
        1 << 16,
        Tally::default(),
        move |range| {
            let mut tally = Tally::default();
            let mut masks = [0u64; 8];
            for code in range {
                masks[..colors].fill(0);
                let mut x = code;
                for pos in 0..edges.len() {
                    let d = (x % base) as usize;
                    x /= base;
                    if d < colors {
                        masks[d] |= 1 << pos;
                    }
                }
                // Keep the one canonical representative of each unordered
                // family: all classes nonempty, strictly ascending.
                if masks[..colors].iter().any(|&m| m == 0)
                    || !masks[..colors].windows(2).all(|w| w[0] < w[1])
                {
                    continue;
                }
                let family = family_from_masks(ambient, edges, &masks[..colors]);
                check_into(&mut tally, check, &family);
            }
            tally
        },
        Tally::merge,
    )
}

fn sweep_colorings_sampled(
    ambient: usize,
    colors: usize,
    check: fn(&CycleFamily) -> bool,
    par: Parallelism,
    count: u64,
    seed: u64,
) -> Tally {
    let edges = clique_edges(ambient);
    let edges = &edges;
    run_sharded(
        par,
        count,
        256,
        Tally::default(),
        move |range| {
            let mut tally = Tally::default();
            for i in range {
                let mut rng = sample_rng(seed, i);
                let mut masks = [0u64; 8];
                loop {
                    masks[..colors].fill(0);
                    for pos in 0..edges.len() {
                        let d = rng.random_range(0..=colors);
                        if d < colors {
                            masks[d] |= 1 << pos;
                        }
                    }
                    if masks[..colors].iter().all(|&m| m != 0) {
                        break;
                    }
                }
                let family = family_from_masks(ambient, edges, &masks[..colors]);
                check_into(&mut tally, check, &family);
            }
            tally
        },
        Tally::merge,
    )
}
