//! Verification harness around `rainbow-core`: JSON/DOT serialization, a
//! command-line front end, exhaustive and sampled theorem sweeps, randomized
//! property suites, and the even-cycle threshold search.
//!
//! Sweeps shard the family index space across workers ([`par::run_sharded`]);
//! workers share nothing and reports merge deterministically, so a given
//! seed always produces an identical report regardless of thread count.

#![forbid(unsafe_code)]

pub mod io;
pub mod par;
pub mod props;
pub mod report;
pub mod threshold;
pub mod verify;

mod error;

pub use error::Error;
