//! Quantized orbit algebras: parameter maps, defining ideals and the checks that tie them to
//! generalized Verma modules.

mod cayley;
mod ideal;
mod minpoly;
mod params;


pub use cayley::{cayley_hamilton, cayley_hamilton_capped, kn_redundancy, CayleyHamilton, Redundancy, TraceTerm, DEFAULT_CH_CAP};
pub use ideal::{
    ad_invariance_check, annihilation_against, ideal_generators, labelled_generators, matrix_relation,
    trace_values_with, verify_orbit_annihilator, verify_orbit_annihilator_with, AdFailure, AdInvariance,
    AnnihilatorReport, PowerTable, RelationLabel, RelationVerdict, TraceValue,
};
pub use minpoly::{solve_minimal_poly, MonicPolynomial};
pub use params::{
    a_vector, central_roots, chi_values, chi_values_of_character, harish_chandra_roots, iso_check, jacobian_det,
    lambda_to_mu, lambda_to_nu, mu_to_lambda, mu_to_nu, standard_form, CentralCharacter, IsoWitness, JacobianCheck,
    OrbitParams, RootMultiset,
};
