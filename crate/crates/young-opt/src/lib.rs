//! Exact minimization of `f(λ) + f*(λ*)` over all Young diagrams `λ` with
//! `n` cells, where `λ*` is the conjugate (transposed) diagram and `f`, `f*`
//! are arbitrary integer-valued functions given by tables over `1..=n`.
//!
//! The search space has sub-exponentially many diagrams, but the optimum is
//! found in polynomial time: a diagram whose distinct part values number `k`
//! (its *type*) is a staircase of `k` blocks, `k` stays below `sqrt(2n)`,
//! and for fixed `k` the best staircase is a shortest path in a layered
//! DAG ([`solver`]). An exhaustive [`oracle`] provides ground truth for
//! small `n`.
//!
//! ```
//! use young_opt::{funcspec, solver};
//!
//! let f = funcspec::table_from_spec("square", 6).unwrap();
//! let best = solver::solve(6, &f, &f).unwrap();
//! assert_eq!(best.partition.parts(), &[3, 2, 1]);
//! assert_eq!(best.value, 28);
//! ```

#![forbid(unsafe_code)]

mod error;
pub mod funcspec;
pub mod functable;
pub mod oracle;
mod output;
mod partition;
pub mod solver;
mod typed;

pub use error::{Error, Result};
pub use functable::{objective, FuncTable, VALUE_BOUND};
pub use output::OutputRecord;
pub use partition::{max_type, Partition};
pub use solver::{solve, solve_for_type, SolveResult};
pub use typed::TypedDiagram;
