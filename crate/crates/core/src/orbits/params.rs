use serde::Serialize;

use crate::error::{Error, Result};
use crate::pbw::{elem_sym_all, Variant};
use crate::scalar::GaussRational;
use crate::verma::{apply_perm, pairwise_distinct, permutations, BlockShape, ParabolicCharacter};

/// Parameters `(m, μ, t)` of `A_{m,μ,t}` or of its opposite-variant sibling.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitParams {
    pub shape: BlockShape,
    pub mu: Vec<GaussRational>,
    pub t: GaussRational,
    pub variant: Variant,
}

impl OrbitParams {
    pub fn new(shape: BlockShape, mu: Vec<GaussRational>, t: GaussRational, variant: Variant) -> Result<Self> {
        if mu.len() != shape.k() {
            return Err(Error::InvalidParams(format!(
                "shape {shape} has {} blocks but {} eigenvalues were given",
                shape.k(),
                mu.len()
            )));
        }
        Ok(OrbitParams { shape, mu, t, variant })
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn k(&self) -> usize {
        self.shape.k()
    }

    pub fn is_regular(&self) -> bool {
        pairwise_distinct(&self.mu)
    }

    pub(crate) fn require_regular(&self) -> Result<()> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::NonRegular(format!("eigenvalues ({}) are not pairwise distinct", join(&self.mu))))
        }
    }

    /// `(cμ, ct)`.
    pub fn rescaled(&self, c: &GaussRational) -> Self {
        OrbitParams {
            shape: self.shape.clone(),
            mu: self.mu.iter().map(|x| x * c).collect(),
            t: &self.t * c,
            variant: self.variant,
        }
    }
}

pub(crate) fn join(values: &[GaussRational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn tail_sums(shape: &BlockShape) -> Vec<usize> {
    let n = shape.n();
    shape.offsets().iter().zip(shape.parts()).map(|(&a, &m)| n - a - m).collect()
}

fn shift(values: &[GaussRational], steps: &[usize], t: &GaussRational, sign: i64) -> Vec<GaussRational> {
    values.iter().zip(steps).map(|(v, &s)| v + &(t * &GaussRational::from_int(sign * s as i64))).collect()
}

/// `a_j = Σ_{α<j} m_α`.
pub fn a_vector(shape: &BlockShape) -> Vec<usize> {
    shape.offsets()
}

/// `μ_i = λ_i − (Σ_{α<i} m_α)·t`.
pub fn lambda_to_mu(chi: &ParabolicCharacter, t: &GaussRational) -> OrbitParams {
    let mu = shift(chi.lambda(), &chi.shape().offsets(), t, -1);
    OrbitParams { shape: chi.shape().clone(), mu, t: t.clone(), variant: Variant::Standard }
}

/// `ν_i = λ_i + (Σ_{α>i} m_α)·t`.
pub fn lambda_to_nu(chi: &ParabolicCharacter, t: &GaussRational) -> OrbitParams {
    let nu = shift(chi.lambda(), &tail_sums(chi.shape()), t, 1);
    OrbitParams { shape: chi.shape().clone(), mu: nu, t: t.clone(), variant: Variant::Opposite }
}

/// `ν_i = μ_i + (n − m_i)·t` for standard input; the inverse shift for opposite input.
pub fn mu_to_nu(p: &OrbitParams) -> OrbitParams {
    let n = p.n();
    let steps: Vec<usize> = p.shape.parts().iter().map(|&m| n - m).collect();
    let sign = match p.variant {
        Variant::Standard => 1,
        Variant::Opposite => -1,
    };
    OrbitParams { shape: p.shape.clone(), mu: shift(&p.mu, &steps, &p.t, sign), t: p.t.clone(), variant: p.variant.flipped() }
}

/// The Verma character whose module realizes `p`, inverting the variant's parameter map.
pub fn mu_to_lambda(p: &OrbitParams) -> ParabolicCharacter {
    let lambda = match p.variant {
        Variant::Standard => shift(&p.mu, &p.shape.offsets(), &p.t, 1),
        Variant::Opposite => shift(&p.mu, &tail_sums(&p.shape), &p.t, -1),
    };
    ParabolicCharacter::new(p.shape.clone(), lambda).expect("lengths match")
}

/// The standard-variant parameters with the same central character.
pub fn standard_form(p: &OrbitParams) -> OrbitParams {
    match p.variant {
        Variant::Standard => p.clone(),
        Variant::Opposite => mu_to_nu(p),
    }
}

/// A multiset of scalars in canonical order (real part, then imaginary part).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct RootMultiset(Vec<GaussRational>);

impl RootMultiset {
    pub fn new(mut values: Vec<GaussRational>) -> Self {
        values.sort_by_cached_key(|v| (v.re().clone(), v.im().clone()));
        RootMultiset(values)
    }

    pub fn values(&self) -> &[GaussRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `∪_i {μ_i, μ_i − t, …, μ_i − (m_i − 1)t}` of the standard form of `p`.
pub fn central_roots(p: &OrbitParams) -> RootMultiset {
    let p = standard_form(p);
    let mut roots = Vec::with_capacity(p.n());
    for (&m, mu) in p.shape.parts().iter().zip(&p.mu) {
        for s in 0..m {
            roots.push(mu - &(&p.t * &GaussRational::from(s)));
        }
    }
    RootMultiset::new(roots)
}

/// Values `χ(c_1), …, χ(c_n)` of a central character.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct CentralCharacter(pub Vec<GaussRational>);

impl CentralCharacter {
    fn from_roots(roots: &[GaussRational]) -> Self {
        CentralCharacter(elem_sym_all(roots).into_iter().skip(1).collect())
    }
}

/// `χ_{m,μ}(c_i) = σ_i(central roots)`.
pub fn chi_values(p: &OrbitParams) -> CentralCharacter {
    CentralCharacter::from_roots(central_roots(p).values())
}

/// `χ_λ̃(c_i) = σ_i({λ̃_j − (j−1)t})`.
pub fn chi_values_of_character(chi: &ParabolicCharacter, t: &GaussRational) -> CentralCharacter {
    CentralCharacter::from_roots(&harish_chandra_roots(&chi.embedded(), t))
}

/// `λ_j − (j−1)t` for `n` coordinates.
pub fn harish_chandra_roots(lambda: &[GaussRational], t: &GaussRational) -> Vec<GaussRational> {
    lambda.iter().enumerate().map(|(j, l)| l - &(t * &GaussRational::from(j))).collect()
}

/// Witness that two parameter sets give isomorphic algebras.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IsoWitness {
    pub tau: Vec<usize>,
    pub shift: GaussRational,
}

/// Searches `τ ∈ S_k` and `b` with `m₂ = τ(m₁)` and `μ₂ = τ(μ₁) + b·(1, …, 1)`.
pub fn iso_check(p1: &OrbitParams, p2: &OrbitParams) -> Result<Option<IsoWitness>> {
    if p1.n() != p2.n() || p1.k() != p2.k() || p1.t != p2.t || p1.variant != p2.variant {
        return Err(Error::InvalidParams("iso_check needs equal n, k, t and variant".into()));
    }
    for tau in permutations(p1.k()) {
        if p1.shape.permuted(&tau) != p2.shape {
            continue;
        }
        let moved = apply_perm(&tau, &p1.mu);
        let shift = &p2.mu[0] - &moved[0];
        if moved.iter().zip(&p2.mu).all(|(a, b)| b - a == shift) {
            return Ok(Some(IsoWitness { tau, shift }));
        }
    }
    Ok(None)
}

/// Result of the Jacobian lemma check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct JacobianCheck {
    pub determinant: GaussRational,
    pub vandermonde: GaussRational,
}

impl JacobianCheck {
    pub fn holds(&self) -> bool {
        self.determinant == self.vandermonde
    }
}

/// `det(∂σ_i/∂λ_j)` against `Π_{i<j} (λ_i − λ_j)`.
pub fn jacobian_det(lambda: &[GaussRational]) -> JacobianCheck {
    let n = lambda.len();
    let columns: Vec<Vec<GaussRational>> = (0..n)
        .map(|j| {
            let rest: Vec<GaussRational> =
                lambda.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, v)| v.clone()).collect();
            elem_sym_all(&rest)
        })
        .collect();
    let d: Vec<Vec<GaussRational>> = (0..n).map(|i| (0..n).map(|j| columns[j][i].clone()).collect()).collect();
    let mut vandermonde = GaussRational::from(1usize);
    for i in 0..n {
        for j in i + 1..n {
            vandermonde *= &(&lambda[i] - &lambda[j]);
        }
    }
    let determinant = if n == 0 { GaussRational::from(1usize) } else { crate::linalg::determinant(&d) };
    JacobianCheck { determinant, vandermonde }
}

