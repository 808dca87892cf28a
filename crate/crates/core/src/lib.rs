//! Exact combinatorial upper bounds for the Gromov width of smooth complete
//! toric manifolds, plus the supporting toric invariants: primitive
//! collections and relations, Fano detection, minimal rational curve
//! families, momentum polytopes, lattice width, ampleness and Seshadri
//! upper bounds.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! every operation is a pure function over immutable values and is safe to
//! call concurrently.

// in-place row arithmetic touches two rows of one buffer, which needs indices
#![allow(clippy::needless_range_loop)]

pub mod divisor;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod polytope;
pub mod primcoll;
pub mod rat;
pub mod relations;
pub mod report;
pub mod seshadri;

pub use error::{Error, ErrorKind, Result};
pub use fan::{Fan, FanReport, Wall};
pub use relations::Relation;
