//! Data-parallel sharding with a sequential fallback.
//!
//! Sweeps split an index space `0..total` into fixed-size shards. Workers
//! process disjoint shards with no shared mutable state, and partial results
//! merge **in shard order**, so the outcome is bit-identical between the
//! sequential and parallel paths and independent of thread count.
//!
//! The `parallel` cargo feature (on by default) pulls in rayon; without it
//! the [`Parallelism::Rayon`] variant still exists but degrades to the
//! sequential path. The `RAINBOW_THREADS` environment variable caps the
//! worker count (`RAINBOW_THREADS=1` forces sequential execution).

use std::ops::Range;

/// Execution strategy for a sharded sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    /// One worker, shards processed in order.
    Sequential,
    /// Rayon worker pool (requires the `parallel` feature; otherwise this
    /// falls back to sequential execution).
    Rayon,
}

impl Parallelism {
    /// Default strategy: rayon when compiled in and not disabled via
    /// `RAINBOW_THREADS=1`.
    pub fn auto() -> Self {
        match configured_threads() {
            Some(1) => Parallelism::Sequential,
            _ => {
                if cfg!(feature = "parallel") {
                    Parallelism::Rayon
                } else {
                    Parallelism::Sequential
                }
            }
        }
    }
}

/// Worker count requested via `RAINBOW_THREADS`, if any.
pub fn configured_threads() -> Option<usize> {
    std::env::var("RAINBOW_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
}

#[cfg(feature = "parallel")]
fn install_thread_cap() {
    use std::sync::Once;
    static POOL: Once = Once::new();
    POOL.call_once(|| {
        if let Some(k) = configured_threads() {
            // Ignore failure: the global pool may already exist (e.g. when
            // the test harness raced us); rayon then keeps its size.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    });
}

/// Splits `0..total` into shards of at most `shard_size`, applies `work` to
/// each, and folds the results in shard order with `merge`. `empty` seeds
/// the fold so a zero-length space still yields a value.
pub fn run_sharded<R, W, M>(
    par: Parallelism,
    total: u64,
    shard_size: u64,
    empty: R,
    work: W,
    merge: M,
) -> R
where
    R: Send,
    W: Fn(Range<u64>) -> R + Sync,
    M: Fn(R, R) -> R,
{
    let shard_size = shard_size.max(1);
    let shards: Vec<Range<u64>> = (0..total)
        .step_by(shard_size.min(u64::from(u32::MAX)) as usize)
        .map(|lo| lo..(lo + shard_size).min(total))
        .collect();
    match par {
        Parallelism::Sequential => shards.into_iter().map(work).fold(empty, merge),
        Parallelism::Rayon => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                install_thread_cap();
                let work = &work;
                let parts: Vec<R> = shards.into_par_iter().map(|r| work(r)).collect();
                parts.into_iter().fold(empty, merge)
            }
            #[cfg(not(feature = "parallel"))]
            {
                shards.into_iter().map(work).fold(empty, merge)
            }
        }
    }
}
