//! Exact decision and construction of r-equitable k-colorings of complete
//! multipartite graphs `K_{n_1,...,n_t}`.
//!
//! A proper k-coloring is *r-equitable* when any two of its k color classes,
//! empty ones included, differ in size by at most `r`. Because every
//! independent set of a complete multipartite graph lies inside one part, the
//! whole question reduces to integer arithmetic on the part sizes.
//!
//! * [`feasibility`] answers "is there an r-equitable k-coloring?" with a
//!   checkable [`FeasibilityWitness`], and computes the r-equitable chromatic
//!   number and threshold in closed form.
//! * [`construct`] turns a witness into an explicit coloring and verifies
//!   arbitrary colorings against the definition.
//! * [`oracle`] decides small instances by exhaustive enumeration, sharing no
//!   formula with [`feasibility`].
//! * [`classic`] transcribes the older r = 1 and balanced-graph formulas used
//!   as cross-checks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod classic;
pub mod construct;
mod error;
pub mod feasibility;
mod instance;
pub mod oracle;

pub use construct::{
    build_coloring, plan_coloring, split_part, verify_coloring, ColoringPlan, Verdict,
    VertexColoring, Violation,
};
pub use error::Error;
pub use feasibility::{
    chromatic_number, chromatic_threshold, feasible, feasible_full, feasible_missing, iso_feasible,
    FeasibilityWitness,
};
pub use instance::{EquityQuery, PartiteSizes, MAX_QUANTITY};
