use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{chi_values_of_character, mu_to_lambda, CentralCharacter, OrbitParams};
use crate::pbw::Variant;
use crate::scalar::GaussRational;
use crate::verma::{apply_perm, permutations, BlockShape, ParabolicCharacter};

/// `λ̃ ∈ C^n` with every `λ̃_i − λ̃_{i+1}` a non-negative integer.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct DominantWeight(Vec<GaussRational>);

impl DominantWeight {
    pub fn new(values: Vec<GaussRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParams("weight must have at least one coordinate".into()));
        }
        for (i, pair) in values.windows(2).enumerate() {
            let gap = &pair[0] - &pair[1];
            if gap.to_integer().is_none_or(|g| g.is_negative()) {
                return Err(Error::InvalidParams(format!(
                    "weight is not dominant integral: λ{} − λ{} = {gap}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(DominantWeight(values))
    }

    pub fn values(&self) -> &[GaussRational] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `λ̃_i − λ̃_n` as integers.
    pub(crate) fn integer_profile(&self) -> Vec<i64> {
        let last = self.0.last().expect("non-empty");
        self.0.iter().map(|x| (x - last).to_i64().expect("checked integral")).collect()
    }

    /// The full-flag character with these values.
    pub fn character(&self) -> ParabolicCharacter {
        ParabolicCharacter::new(BlockShape::full_flag(self.n()), self.0.clone()).expect("lengths match")
    }
}

/// `Π_{i<j} (λ̃_i − λ̃_j + j − i)/(j − i)`.
pub fn weyl_dim(weight: &DominantWeight) -> Result<u64> {
    let v = weight.integer_profile();
    let n = v.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(v[i] - v[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = (&num / &den, &num % &den);
    if !r.is_zero() {
        return Err(Error::VerificationFailed(format!("non-integral dimension {num}/{den}")));
    }
    q.to_u64().ok_or_else(|| Error::ResourceCap(format!("dimension {q} does not fit in 64 bits")))
}

/// A successful classification: the permutation, the normalized weight and the dimension.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Classification {
    pub tau: Vec<usize>,
    pub shape: BlockShape,
    pub mu: Vec<GaussRational>,
    pub lambda: DominantWeight,
    pub dim: u64,
}

impl Classification {
    /// Central character of the normalized weight at `t = 1`.
    pub fn character_values(&self) -> CentralCharacter {
        chi_values_of_character(&self.lambda.character(), &GaussRational::one())
    }
}

fn check_classifiable(p: &OrbitParams) -> Result<()> {
    if p.variant != Variant::Standard {
        return Err(Error::InvalidParams("classification is stated for the standard variant".into()));
    }
    if p.t.is_zero() {
        return Err(Error::InvalidParams("classification needs t != 0".into()));
    }
    if !p.is_regular() {
        return Err(Error::NonRegular("eigenvalues are not pairwise distinct".into()));
    }
    Ok(())
}

/// All `τ ∈ S_k` with `(μ′_i − μ′_{i+1})/t − m′_i` a non-negative integer for `i < k`.
pub fn classify_all(p: &OrbitParams) -> Result<Vec<Classification>> {
    check_classifiable(p)?;
    let inv_t = p.t.inv().expect("non-zero");
    let mut out = Vec::new();
    for tau in permutations(p.k()) {
        let shape = p.shape.permuted(&tau);
        let mu = apply_perm(&tau, &p.mu);
        let admissible = (0..p.k().saturating_sub(1)).all(|i| {
            let gap = &(&(&mu[i] - &mu[i + 1]) * &inv_t) - &GaussRational::from(shape.parts()[i]);
            gap.to_integer().is_some_and(|g| !g.is_negative())
        });
        if !admissible {
            continue;
        }
        let normalized = OrbitParams::new(shape.clone(), mu.iter().map(|x| x * &inv_t).collect(), GaussRational::one(), Variant::Standard)?;
        let lambda = DominantWeight::new(mu_to_lambda(&normalized).embedded())?;
        let dim = weyl_dim(&lambda)?;
        out.push(Classification { tau, shape, mu, lambda, dim });
    }
    Ok(out)
}

/// The first admissible permutation, if any.
pub fn classify(p: &OrbitParams) -> Result<Option<Classification>> {
    Ok(classify_all(p)?.into_iter().next())
}
