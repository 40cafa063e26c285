use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{OrbitParams, RelationLabel, RelationVerdict};
use crate::pbw::{bracket, monic_coefficients, GeneratorIndex, ScalarMatrix};
use crate::scalar::GaussRational;
use crate::theta::{connes_classical, theta_classical};

use super::irrep::FiniteDimRep;
use super::weight::classify_all;

/// An `n × n` array of `dim × dim` operators, indexed from 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorArray {
    n: usize,
    dim: usize,
    entries: Vec<ScalarMatrix>,
}

impl OperatorArray {
    pub fn from_fn(n: usize, dim: usize, mut f: impl FnMut(usize, usize) -> ScalarMatrix) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        OperatorArray { n, dim, entries }
    }

    /// `E[i,j] = ρ(E[i+1,j+1])`.
    pub fn generators(rep: &FiniteDimRep) -> Self {
        Self::from_fn(rep.n(), rep.dim, |r, c| rep.action(GeneratorIndex::new(r + 1, c + 1)).clone())
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        Self::from_fn(n, dim, |r, c| if r == c { ScalarMatrix::identity(dim) } else { ScalarMatrix::zero(dim) })
    }

    pub fn get(&self, r: usize, c: usize) -> &ScalarMatrix {
        &self.entries[r * self.n + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ScalarMatrix::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.dim, |r, c| self.get(r, c).add(other.get(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.dim, |r, c| self.get(r, c).sub(other.get(r, c)))
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        Self::from_fn(self.n, self.dim, |r, c| self.get(r, c).scale(s))
    }

    /// `(A ⋆ B)[i,j] = Σ_α B[α,j]·A[i,α]`.
    pub fn standard_product(&self, other: &Self) -> Self {
        Self::from_fn(self.n, self.dim, |i, j| {
            let mut acc = ScalarMatrix::zero(self.dim);
            for a in 0..self.n {
                acc = acc.add(&other.get(a, j).mul(self.get(i, a)));
            }
            acc
        })
    }

    /// `Σ_i A[i,i]`.
    pub fn trace(&self) -> ScalarMatrix {
        (0..self.n).fold(ScalarMatrix::zero(self.dim), |acc, i| acc.add(self.get(i, i)))
    }
}

/// Powers `E^0, …, E^max` of an operator array in the standard convention.
pub fn operator_powers(e: &OperatorArray, max: usize) -> Vec<OperatorArray> {
    let mut out = vec![OperatorArray::identity(e.n, e.dim)];
    for _ in 0..max {
        let next = out.last().expect("non-empty").standard_product(e);
        out.push(next);
    }
    out
}

fn polynomial(powers: &[OperatorArray], coeffs: &[GaussRational]) -> OperatorArray {
    let base = &powers[0];
    coeffs.iter().zip(powers).fold(OperatorArray::from_fn(base.n, base.dim, |_, _| ScalarMatrix::zero(base.dim)), |acc, (c, p)| {
        if c.is_zero() {
            acc
        } else {
            acc.add(&p.scale(c))
        }
    })
}

/// `c·Id` if `m` is scalar.
fn scalar_value(m: &ScalarMatrix) -> Option<GaussRational> {
    let c = if m.n() == 0 { GaussRational::zero() } else { m.get(0, 0).clone() };
    (*m == ScalarMatrix::identity(m.n()).scale(&c)).then_some(c)
}

/// A failing commutator, reported by generator pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CommutatorFailure {
    pub left: String,
    pub right: String,
}

/// Checks `[ρ(E_ij), ρ(E_ml)] = t(δ_mj ρ(E_il) − δ_il ρ(E_mj))` for every pair.
pub fn commutation_failures(rep: &FiniteDimRep) -> Vec<CommutatorFailure> {
    let n = rep.n();
    let mut failures = Vec::new();
    for g in GeneratorIndex::all(n) {
        for h in GeneratorIndex::all(n) {
            let (a, b) = (rep.action(g), rep.action(h));
            let lhs = a.mul(b).sub(&b.mul(a));
            let mut rhs = ScalarMatrix::zero(rep.dim);
            for (x, c) in bracket(&rep.t, g, h) {
                rhs = rhs.add(&rep.action(x).scale(&c));
            }
            if lhs != rhs {
                failures.push(CommutatorFailure { left: g.to_string(), right: h.to_string() });
            }
        }
    }
    failures
}

/// Verdicts of the defining relations in a finite-dimensional representation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RepReport {
    pub dim: usize,
    pub commutation_failures: Vec<CommutatorFailure>,
    pub relations: Vec<RelationVerdict>,
    /// Every admissible permutation yields the same dimension and central character.
    pub unique: bool,
}

impl RepReport {
    pub fn passes(&self) -> bool {
        self.commutation_failures.is_empty() && self.relations.iter().all(|r| r.holds) && self.unique
    }
}

fn check_params(p: &OrbitParams, rep: &FiniteDimRep) -> Result<()> {
    if p.n() != rep.n() || p.t != rep.t {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// Evaluates `Π(E − μ_i) = 0` and `Tr E^ℓ = ϑ_ℓ·Id` for `ℓ = 1..n` in the representation.
pub fn verify_rep(p: &OrbitParams, rep: &FiniteDimRep) -> Result<RepReport> {
    check_params(p, rep)?;
    let n = p.n();
    let e = OperatorArray::generators(rep);
    let powers = operator_powers(&e, n.max(p.k()));
    let mut relations = Vec::new();
    let poly = polynomial(&powers, &monic_coefficients(&p.mu));
    for r in 0..n {
        for c in 0..n {
            let entry = poly.get(r, c);
            relations.push(RelationVerdict {
                relation: RelationLabel::Matrix { row: r + 1, col: c + 1 },
                holds: entry.is_zero(),
                witness: (!entry.is_zero()).then(|| entry.to_string()),
            });
        }
    }
    for ell in 1..=n {
        let theta = theta_classical(ell, &p.shape, &p.mu, &p.t)?;
        let tr = powers[ell].trace();
        let holds = tr == ScalarMatrix::identity(rep.dim).scale(&theta);
        relations.push(RelationVerdict {
            relation: RelationLabel::Trace { ell },
            holds,
            witness: (!holds).then(|| format!("trace {tr}, expected {theta}")),
        });
    }
    let all = classify_all(p)?;
    let unique = all.windows(2).all(|w| w[0].dim == w[1].dim && w[0].character_values() == w[1].character_values())
        && all.first().is_none_or(|c| c.dim as usize == rep.dim);
    Ok(RepReport { dim: rep.dim, commutation_failures: commutation_failures(rep), relations, unique })
}

/// Spectral projectors `π_j = Π_{i≠j} (E − μ_i)/(μ_j − μ_i)` in the representation.
pub fn projectors(p: &OrbitParams, rep: &FiniteDimRep) -> Result<Vec<OperatorArray>> {
    check_params(p, rep)?;
    p.is_regular().then_some(()).ok_or(Error::CoincidentEigenvalues)?;
    let e = OperatorArray::generators(rep);
    let powers = operator_powers(&e, p.k());
    (0..p.k())
        .map(|j| {
            let others: Vec<GaussRational> = (0..p.k()).filter(|&i| i != j).map(|i| p.mu[i].clone()).collect();
            let denom: GaussRational = others.iter().map(|m| &p.mu[j] - m).product();
            let inv = denom.inv().ok_or(Error::CoincidentEigenvalues)?;
            Ok(polynomial(&powers, &monic_coefficients(&others)).scale(&inv))
        })
        .collect()
}

/// Identities satisfied by the projectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProjectorReport {
    pub orthogonal_idempotents: bool,
    pub complete: bool,
    pub spectral: bool,
}

impl ProjectorReport {
    pub fn passes(&self) -> bool {
        self.orthogonal_idempotents && self.complete && self.spectral
    }
}

/// `π_i ⋆ π_j = δ_ij π_i`, `Σ π_j = Id` and `Σ μ_j π_j = E`.
pub fn projector_identities(p: &OrbitParams, rep: &FiniteDimRep, pis: &[OperatorArray]) -> ProjectorReport {
    let n = rep.n();
    let dim = rep.dim;
    let zero = OperatorArray::from_fn(n, dim, |_, _| ScalarMatrix::zero(dim));
    let mut orthogonal_idempotents = true;
    for (i, a) in pis.iter().enumerate() {
        for (j, b) in pis.iter().enumerate() {
            let prod = a.standard_product(b);
            orthogonal_idempotents &= if i == j { prod == *a } else { prod.is_zero() };
        }
    }
    let sum = pis.iter().fold(zero.clone(), |acc, x| acc.add(x));
    let spectral = pis.iter().zip(&p.mu).fold(zero, |acc, (x, m)| acc.add(&x.scale(m)));
    ProjectorReport {
        orthogonal_idempotents,
        complete: sum == OperatorArray::identity(n, dim),
        spectral: spectral == OperatorArray::generators(rep),
    }
}

/// `Σ_i π_j[i,i]` against `C_j(m, μ, t)·Id`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConnesValue {
    pub j: usize,
    /// The scalar the trace equals, if it is scalar.
    pub trace: Option<GaussRational>,
    pub expected: GaussRational,
    pub holds: bool,
}

pub fn connes_trace_check(p: &OrbitParams, rep: &FiniteDimRep) -> Result<Vec<ConnesValue>> {
    let pis = projectors(p, rep)?;
    pis.iter()
        .enumerate()
        .map(|(j, pi)| {
            let expected = connes_classical(j, &p.shape, &p.mu, &p.t)?;
            let trace = scalar_value(&pi.trace());
            let holds = trace.as_ref() == Some(&expected);
            Ok(ConnesValue { j: j + 1, trace, expected, holds })
        })
        .collect()
}
