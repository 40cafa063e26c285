//! Finite-dimensional representations of the orbit algebras: classification, construction as
//! Verma quotients, relation checks, spectral projectors and their traces.

mod irrep;
mod verify;
mod weight;

#[cfg(test)]
mod tests;

pub use irrep::{build_irrep, build_irrep_capped, BasisLabel, FiniteDimRep, Quotient, DEFAULT_DIM_CAP};
pub use verify::{
    commutation_failures, connes_trace_check, operator_powers, projector_identities, projectors, verify_rep,
    CommutatorFailure, ConnesValue, OperatorArray, ProjectorReport, RepReport,
};
pub use weight::{classify, classify_all, weyl_dim, Classification, DominantWeight};
