//! Short explorations of always-connected temporal graphs.
//!
//! A temporal graph is a sequence of snapshots on a fixed vertex set; an
//! agent moves along at most one edge of the current snapshot per step.
//! When every snapshot is connected, [`explorer::explore`] visits all `n`
//! vertices in `O(n^{3/2} sqrt(D log n))` steps, where `D` is the average
//! over vertices of their maximum degree across snapshots.

pub mod cli_io;
pub mod explorer;
pub mod generators;
pub mod lemmas;
pub mod oracle;
pub mod reachability;
pub mod tempgraph;
pub mod validator;
