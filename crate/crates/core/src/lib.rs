//! Exact classification of incidence scrolls: ruled surfaces swept by the
//! lines of `P^n` meeting a fixed collection of linear subspaces.
//!
//! * [`schubert`]: the cohomology ring of `G(l, n)` through Pieri's rule,
//!   generic over the coefficient ring.
//! * [`base`]: bases of incidence scrolls and the join / separate /
//!   restriction transforms between them.
//! * [`scroll`]: degree, genus, directrices and speciality, with
//!   degeneration witnesses.
//! * [`closed_forms`] and [`tables`]: the closed-form families and the
//!   published tables they reproduce.

pub mod base;
pub mod cache;
pub mod closed_forms;
pub mod error;
pub mod scalar;
pub mod schubert;
pub mod scroll;
pub mod tables;

pub use base::{
    canonicalize, conditions_count, enumerate_bases, is_nondegenerate, join, restrict_to_span,
    satisfies_is, separate, EnumerationFilter, IncidenceBase, JoinResult,
};
pub use closed_forms::{p1s, p2s, p3s, ClosedFormRecord, Family};
pub use error::{Result, ScrollError};
pub use scalar::Coefficient;
pub use schubert::{
    codimension, coefficient_of, intersection_number, multiply_sum, pieri_multiply,
    product_of_specials, GrassmannSpec, SchubertIndex,
};
pub use scroll::{
    degree, directrix_degree, kappa, speciality, Action, DegenerationNode, DirectrixEntry, Engine,
    ScrollReport,
};

/// Arbitrary-precision integers, the coefficient ring used by the engine.
pub type Integer = num_bigint::BigInt;

/// Integral cycle sum, the default instance of [`schubert::CycleSum`].
pub type CycleSum = schubert::CycleSum<Integer>;

/// Cycle sum over machine integers; fine for small Grassmannians.
pub type CycleSumI64 = schubert::CycleSum<i64>;
