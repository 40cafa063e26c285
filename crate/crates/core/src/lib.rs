//! Exact computation in `U(gl(n)_t)`, its generalized Verma modules, and the quantized
//! coadjoint-orbit algebras of `GL(n)` built from them.

pub mod error;
pub mod linalg;
pub mod orbits;
pub mod pbw;
pub mod reps;
pub mod sampling;
pub mod scalar;
pub mod starforms;
pub mod suite;
pub mod theta;
pub mod verma;

pub use error::{Error, Result};
pub use pbw::{AlgebraContext, AlgebraElement, GeneratorIndex, ScalarMatrix, SquareMatrixOverAlgebra, Variant};
pub use scalar::GaussRational;
pub use verma::{BlockShape, ParabolicCharacter, VermaElement, VermaModule};
