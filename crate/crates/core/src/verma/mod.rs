//! Generalized Verma modules over `U(gl(n)_t)`.

mod module;
mod shape;

pub use module::{Annihilation, VermaElement, VermaModule};
pub use shape::{apply_perm, pairwise_distinct, permutations, BlockShape, ParabolicCharacter, Weight};

use crate::error::Result;
use crate::pbw::AlgebraElement;
use crate::scalar::GaussRational;

/// `u·v₀` in the module of `chi` over the algebra of `u`.
pub fn act_on_hwv(u: &AlgebraElement, chi: &ParabolicCharacter) -> Result<VermaElement> {
    VermaModule::over(chi.clone(), u.ctx())?.act_on_hwv(u)
}

/// Checks that every listed element kills `v₀`.
pub fn annihilates_hwv(gens: &[AlgebraElement], chi: &ParabolicCharacter) -> Result<Annihilation> {
    match gens.first() {
        None => Ok(Annihilation { first_failure: None }),
        Some(g) => VermaModule::over(chi.clone(), g.ctx())?.annihilates_hwv(gens),
    }
}

/// The scalar by which a central `u` acts in the module of `chi`.
pub fn central_value(u: &AlgebraElement, chi: &ParabolicCharacter) -> Result<GaussRational> {
    VermaModule::over(chi.clone(), u.ctx())?.central_value(u)
}

#[cfg(test)]
mod tests;
