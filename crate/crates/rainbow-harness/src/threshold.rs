//! Even-cycle threshold search and the even-cycle edge bound.
//!
//! `f(n)` is the least `t` such that **every** family of `t` even cycles in
//! `K_n` has a rainbow even cycle. [`search_even_threshold`] computes it by
//! backtracking over multisets of even cycles, pruning any family that
//! already has a rainbow even cycle: adding members never destroys one
//! (the same edge-to-color injection stays valid), so no extension of a
//! pruned node can be rainbow-even-free.
//!
//! The search terminates unconditionally: once any length-`ℓ` member
//! accumulates `ℓ` copies, those copies alone admit a rainbow even cycle,
//! so chains of free families have bounded length.

use std::time::{Duration, Instant};

use rainbow_core::graph::{self, CycleFamily, EdgeSet, Parity, ParityFilter};
use rainbow_core::search::exhaustive_rainbow_cycle;
use serde::{Deserialize, Serialize};

use crate::io::FamilyDto;
use crate::par::{run_sharded, Parallelism};
use crate::verify::clique_edges;
use crate::Error;

/// At most this many extremal families are retained in a result.
pub const EXTREMAL_CAP: usize = 100;

/// `⌊3(n−1)/2⌋ + 1`: this many even cycles in `K_n` always contain a
/// rainbow even cycle, so it is an upper bound for `f(n)`.
pub fn even_cycle_bound(n: usize) -> usize {
    assert!(n >= 3, "the bound needs n >= 3");
    3 * (n - 1) / 2 + 1
}

/// Outcome of the threshold search for one `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ThresholdResult {
    pub n: usize,
    /// Least `t` forcing a rainbow even cycle (a lower bound when
    /// `lowerBoundOnly` is set).
    pub f_of_n: usize,
    /// Largest rainbow-even-cycle-free families found, capped at
    /// [`EXTREMAL_CAP`]; each re-checks as free via the oracle.
    pub extremal_families: Vec<FamilyDto>,
    /// Set when the budget ran out before the space was exhausted.
    pub lower_bound_only: bool,
    /// Known upper bound `⌊3(n−1)/2⌋+1` for cross-checking.
    pub even_cycle_bound: usize,
    /// Backtracking nodes visited.
    pub families_explored: u64,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

struct SearchState {
    pool: Vec<EdgeSet>,
    ambient: usize,
    best: usize,
    extremal: Vec<Vec<usize>>,
    explored: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl SearchState {
    fn family(&self, indices: &[usize]) -> CycleFamily {
        CycleFamily::new(
            self.ambient,
            indices.iter().map(|&i| self.pool[i].clone()).collect(),
        )
    }

    fn dfs(&mut self, indices: &mut Vec<usize>, start: usize) {
        if self.timed_out {
            return;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out = true;
                return;
            }
        }
        self.explored += 1;
        let family = self.family(indices);
        if exhaustive_rainbow_cycle(&family, ParityFilter::Even).is_some() {
            // Monotone pruning: every extension keeps this rainbow even
            // cycle, so nothing below this node is free.
            return;
        }
        if indices.len() > self.best {
            self.best = indices.len();
            self.extremal.clear();
        }
        if indices.len() == self.best && self.extremal.len() < EXTREMAL_CAP {
            self.extremal.push(indices.clone());
        }
        for v in start..self.pool.len() {
            indices.push(v);
            self.dfs(indices, v);
            indices.pop();
        }
    }
}

/// Backtracking search for `f(n)`; exact within `4 ≤ n ≤ 6`, best-effort
/// beyond that when a budget is supplied. A budget may also cut the exact
/// range short, in which case the result is flagged `lowerBoundOnly`.
pub fn search_even_threshold(
    n: usize,
    budget: Option<Duration>,
) -> Result<ThresholdResult, Error> {
    if n < 4 {
        return Err(Error::Invalid(format!(
            "threshold search needs n >= 4, got {n}"
        )));
    }
    if n > 6 && budget.is_none() {
        return Err(Error::Invalid(format!(
            "threshold search beyond n = 6 is best-effort only; supply a budget (got n = {n})"
        )));
    }
    let start = Instant::now();
    let mut state = SearchState {
        pool: graph::enumerate_cycles(n, ParityFilter::Even, None).collect(),
        ambient: n,
        best: 0,
        extremal: Vec::new(),
        explored: 0,
        deadline: budget.map(|b| start + b),
        timed_out: false,
    };
    let mut indices = Vec::new();
    state.dfs(&mut indices, 0);
    let extremal_families = state
        .extremal
        .iter()
        .map(|ix| FamilyDto::from_family(&state.family(ix)))
        .collect();
    Ok(ThresholdResult {
        n,
        f_of_n: state.best + 1,
        extremal_families,
        lower_bound_only: state.timed_out,
        even_cycle_bound: even_cycle_bound(n),
        families_explored: state.explored,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// Edge bound companion
// ---------------------------------------------------------------------------

/// Whether a graph contains an even cycle, decided blockwise: a graph has
/// no even cycle exactly when every block is a single edge or an odd
/// cycle (any 2-connected block that is not a cycle contains a theta
/// subgraph, and two of a theta's three cycles share a parity sum that
/// makes one of them even).
pub fn has_even_cycle(g: &EdgeSet) -> bool {
    graph::blocks(g)
        .iter()
        .any(|b| b.len() > 1 && !matches!(graph::is_cycle(b), Some(Parity::Odd)))
}

/// Outcome of the exhaustive edge-bound check for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeBoundReport {
    pub n: usize,
    /// Graphs with more than `⌊3(n−1)/2⌋` edges.
    pub graphs_checked: u64,
    /// Among those, graphs without an even cycle (the claim says none).
    pub violations: u64,
}

/// Checks that every graph on `n ≤ 7` labeled vertices with more than
/// `⌊3(n−1)/2⌋` edges contains an even cycle, exhaustively over all
/// `2^C(n,2)` edge subsets.
pub fn check_even_cycle_edge_bound(n: usize, par: Parallelism) -> Result<EdgeBoundReport, Error> {
    if !(3..=7).contains(&n) {
        return Err(Error::Invalid(format!(
            "edge bound check supports 3 <= n <= 7, got {n}"
        )));
    }
    let edges = clique_edges(n);
    let floor = even_cycle_bound(n) - 1;
    let total = 1u64 << edges.len();
    let edges = &edges;
    let (graphs_checked, violations) = run_sharded(
        par,
        total,
        1 << 16,
        (0u64, 0u64),
        move |range| {
            let mut checked = 0u64;
            let mut bad = 0u64;
            for mask in range {
                if (mask.count_ones() as usize) <= floor {
                    continue;
                }
                checked += 1;
                let g = EdgeSet::from_edges(
                    n,
                    edges
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| mask >> pos & 1 == 1)
                        .map(|(_, &e)| e),
                );
                if !has_even_cycle(&g) {
                    bad += 1;
                }
            }
            (checked, bad)
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    Ok(EdgeBoundReport {
        n,
        graphs_checked,
        violations,
    })
}
