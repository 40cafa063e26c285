//! Trace functions `ϑ_ℓ` and Connes coefficients `C_j` of quantized orbits, together with
//! their one-parameter deformations in `ω = 1 − q⁻²`.

mod poly;

pub use poly::{RationalFunction, UniPolynomial};

use itertools::Itertools;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussRational;
use crate::verma::{pairwise_distinct, BlockShape};

/// Lower bound on the parts of a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartBound {
    /// Parts `d_i ≥ 1`.
    Positive,
    /// Parts `d_i ≥ 0`.
    NonNegative,
}

/// An ordered tuple of integers with a fixed sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    /// All compositions of `total` into `parts` parts obeying `bound`.
    pub fn all(total: usize, parts: usize, bound: PartBound) -> Vec<Composition> {
        fn rec(left: usize, slots: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if slots == 0 {
                if left == 0 {
                    out.push(Composition(prefix.clone()));
                }
                return;
            }
            if left < min * slots {
                return;
            }
            for d in min..=left - min * (slots - 1) {
                prefix.push(d);
                rec(left - d, slots - 1, min, prefix, out);
                prefix.pop();
            }
        }
        let min = match bound {
            PartBound::Positive => 1,
            PartBound::NonNegative => 0,
        };
        let mut out = Vec::new();
        rec(total, parts, min, &mut Vec::new(), &mut out);
        out
    }
}

fn check_lengths(a: &[GaussRational], b: &[GaussRational]) -> Result<()> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::InvalidParams(format!("expected equal non-empty lengths, got {} and {}", a.len(), b.len())));
    }
    Ok(())
}

fn require_distinct(mu: &[GaussRational]) -> Result<()> {
    if pairwise_distinct(mu) {
        Ok(())
    } else {
        Err(Error::CoincidentEigenvalues)
    }
}

fn shape_weights(m: &BlockShape) -> Vec<GaussRational> {
    m.parts().iter().map(|&x| GaussRational::from(x)).collect()
}

/// `Σ_{s} x^{s−1} Σ_{j1<…<js} w_{j1}…w_{js} Σ_{d ∈ comp(total(s), s)} μ_{j1}^{d1}…μ_{js}^{ds}`.
fn subset_composition_sum(
    weights: &[GaussRational],
    mu: &[GaussRational],
    x: &GaussRational,
    total: impl Fn(usize) -> Option<usize>,
    bound: PartBound,
) -> GaussRational {
    let k = weights.len();
    let mut acc = GaussRational::zero();
    for s in 1..=k {
        let Some(tot) = total(s) else { continue };
        let comps = Composition::all(tot, s, bound);
        if comps.is_empty() {
            continue;
        }
        let xs = x.pow(s as u32 - 1);
        for subset in (0..k).combinations(s) {
            let w: GaussRational = subset.iter().map(|&j| &weights[j]).product();
            if w.is_zero() {
                continue;
            }
            let mut inner = GaussRational::zero();
            for d in &comps {
                inner += subset.iter().zip(&d.0).map(|(&j, &dj)| mu[j].pow(dj as u32)).product::<GaussRational>();
            }
            acc += &(&(&xs * &w) * &inner);
        }
    }
    acc
}

/// `ϑ̃_ℓ(ν, μ, ω)`, with compositions into parts `≥ 1`; `ℓ = 0` gives `ν_ω`.
pub fn theta_tilde(ell: usize, nu: &[GaussRational], mu: &[GaussRational], omega: &GaussRational) -> Result<GaussRational> {
    check_lengths(nu, mu)?;
    if ell == 0 {
        return Ok(nu_omega(nu, omega));
    }
    Ok(subset_composition_sum(nu, mu, omega, |_| Some(ell), PartBound::Positive))
}

/// `ϑ̃_ℓ` through the recurrence that strips the last coordinate.
pub fn theta_tilde_rec(ell: usize, nu: &[GaussRational], mu: &[GaussRational], omega: &GaussRational) -> Result<GaussRational> {
    check_lengths(nu, mu)?;
    if ell == 0 {
        return Err(Error::InvalidParams("the recurrence starts at ℓ = 1".into()));
    }
    fn rec(ell: usize, nu: &[GaussRational], mu: &[GaussRational], omega: &GaussRational) -> GaussRational {
        let k = nu.len();
        if k == 0 {
            return GaussRational::zero();
        }
        let (nu_p, mu_p) = (&nu[..k - 1], &mu[..k - 1]);
        let (nk, mk) = (&nu[k - 1], &mu[k - 1]);
        let mut mid = GaussRational::zero();
        for i in 1..ell {
            mid += &(&rec(ell - i, nu_p, mu_p, omega) * &mk.pow(i as u32));
        }
        &(&rec(ell, nu_p, mu_p, omega) + &(&(nk * omega) * &mid)) + &(nk * &mk.pow(ell as u32))
    }
    Ok(rec(ell, nu, mu, omega))
}

/// `C̃_j(ν, μ, ω) = ν_j + ν_j Σ_ℓ ω^ℓ Σ_{i1<…<iℓ, ≠ j} Π ν_i μ_i / (μ_j − μ_i)`, `j` 0-based.
pub fn c_tilde(j: usize, nu: &[GaussRational], mu: &[GaussRational], omega: &GaussRational) -> Result<GaussRational> {
    check_lengths(nu, mu)?;
    require_distinct(mu)?;
    if j >= nu.len() {
        return Err(Error::OutOfRange(format!("index {j} for k={}", nu.len())));
    }
    let factors: Vec<GaussRational> = (0..nu.len())
        .filter(|&i| i != j)
        .map(|i| (&nu[i] * &mu[i]).checked_div(&(&mu[j] - &mu[i])).expect("distinct μ"))
        .collect();
    Ok(&nu[j] * &subset_product_sum(&factors, omega))
}

/// `Σ_{S} x^{|S|} Π_{i∈S} f_i` over all subsets `S`.
fn subset_product_sum(factors: &[GaussRational], x: &GaussRational) -> GaussRational {
    let mut acc = GaussRational::zero();
    for size in 0..=factors.len() {
        let xs = x.pow(size as u32);
        for subset in factors.iter().combinations(size) {
            acc += &(&xs * &subset.into_iter().product::<GaussRational>());
        }
    }
    acc
}

/// `ν_ω` defined by `1 − ω ν_ω = Π (1 − ω ν_i)`; at `ω = 0` the limit `Σ ν_i`.
pub fn nu_omega(nu: &[GaussRational], omega: &GaussRational) -> GaussRational {
    if omega.is_zero() {
        return nu.iter().sum();
    }
    let prod: GaussRational = nu.iter().map(|v| &GaussRational::one() - &(omega * v)).product();
    (&GaussRational::one() - &prod).checked_div(omega).expect("ω ≠ 0")
}

/// `ϑ_ℓ(m, μ, t)`, with compositions of `ℓ + 1 − s` into parts `≥ 0`.
pub fn theta_classical(ell: usize, m: &BlockShape, mu: &[GaussRational], t: &GaussRational) -> Result<GaussRational> {
    let w = shape_weights(m);
    check_lengths(&w, mu)?;
    Ok(subset_composition_sum(&w, mu, t, |s| (ell + 1).checked_sub(s), PartBound::NonNegative))
}

/// `C_j(m, μ, t) = m_j Σ_{S ∌ j} Π_{i∈S} t m_i / (μ_j − μ_i)`, `j` 0-based.
pub fn connes_classical(j: usize, m: &BlockShape, mu: &[GaussRational], t: &GaussRational) -> Result<GaussRational> {
    let w = shape_weights(m);
    check_lengths(&w, mu)?;
    require_distinct(mu)?;
    if j >= w.len() {
        return Err(Error::OutOfRange(format!("index {j} for k={}", w.len())));
    }
    let factors: Vec<GaussRational> = (0..w.len())
        .filter(|&i| i != j)
        .map(|i| (t * &w[i]).checked_div(&(&mu[j] - &mu[i])).expect("distinct μ"))
        .collect();
    Ok(&w[j] * &subset_product_sum(&factors, &GaussRational::one()))
}

/// The q-integer `m̂ = (1 − (1 − ω)^m) / ω` as a polynomial in `ω`.
pub fn q_int(m: usize) -> Result<UniPolynomial> {
    if m == 0 {
        return Err(Error::InvalidParams("q-integers are defined for m ≥ 1".into()));
    }
    let one_minus = UniPolynomial::linear(GaussRational::one(), -GaussRational::one());
    let numerator = UniPolynomial::constant(GaussRational::one()).sub(&one_minus.pow(m as u32));
    let (quot, rem) = numerator.div_rem(&UniPolynomial::x())?;
    debug_assert!(rem.is_zero());
    Ok(quot)
}

fn q_weights(m: &BlockShape, omega: &GaussRational) -> Result<Vec<GaussRational>> {
    m.parts().iter().map(|&x| Ok(q_int(x)?.eval(omega))).collect()
}

/// `C_j(m̂, μ, ω, t) = m̂_j Σ_{S ∌ j} Π_{i∈S} m̂_i (ω μ_i + t) / (μ_j − μ_i)`, `j` 0-based.
pub fn connes_q(j: usize, m: &BlockShape, mu: &[GaussRational], omega: &GaussRational, t: &GaussRational) -> Result<GaussRational> {
    let w = q_weights(m, omega)?;
    check_lengths(&w, mu)?;
    require_distinct(mu)?;
    if j >= w.len() {
        return Err(Error::OutOfRange(format!("index {j} for k={}", w.len())));
    }
    let factors: Vec<GaussRational> = (0..w.len())
        .filter(|&i| i != j)
        .map(|i| (&w[i] * &(&(omega * &mu[i]) + t)).checked_div(&(&mu[j] - &mu[i])).expect("distinct μ"))
        .collect();
    Ok(&w[j] * &subset_product_sum(&factors, &GaussRational::one()))
}

/// `ϑ_ℓ(m̂, μ, ω, t) = Σ_j μ_j^ℓ C_j(m̂, μ, ω, t)`.
pub fn theta_q(ell: usize, m: &BlockShape, mu: &[GaussRational], omega: &GaussRational, t: &GaussRational) -> Result<GaussRational> {
    let mut acc = GaussRational::zero();
    for (j, mj) in mu.iter().enumerate() {
        acc += &(&mj.pow(ell as u32) * &connes_q(j, m, mu, omega, t)?);
    }
    Ok(acc)
}

/// `C̃_j(m̂(ω), μ + t/ω, ω)` assembled literally as a rational function of `ω`.
pub fn connes_q_symbolic(j: usize, m: &BlockShape, mu: &[GaussRational], t: &GaussRational) -> Result<RationalFunction> {
    let k = m.k();
    check_lengths(&shape_weights(m), mu)?;
    require_distinct(mu)?;
    if j >= k {
        return Err(Error::OutOfRange(format!("index {j} for k={k}")));
    }
    let omega = UniPolynomial::x();
    let nu: Vec<RationalFunction> = m.parts().iter().map(|&x| Ok(RationalFunction::from_poly(q_int(x)?))).collect::<Result<_>>()?;
    // μ_i + t/ω = (μ_i ω + t) / ω
    let shifted: Vec<RationalFunction> = mu
        .iter()
        .map(|x| RationalFunction::new(UniPolynomial::linear(t.clone(), x.clone()), omega.clone()))
        .collect::<Result<_>>()?;
    let factors: Vec<RationalFunction> = (0..k)
        .filter(|&i| i != j)
        .map(|i| {
            Ok(nu[i].mul(&shifted[i]).mul(&shifted[j].sub(&shifted[i]).inv()?))
        })
        .collect::<Result<_>>()?;
    let mut acc = RationalFunction::constant(GaussRational::zero());
    for size in 0..k {
        let wpow = RationalFunction::from_poly(UniPolynomial::x().pow(size as u32));
        for subset in factors.iter().combinations(size) {
            let term = subset.into_iter().fold(wpow.clone(), |a, f| a.mul(f));
            acc = acc.add(&term);
        }
    }
    Ok(nu[j].mul(&acc))
}

/// Evaluates the unshifted `C̃_j(m̂(ω), μ + t/ω, ω)` at the non-zero sample points, interpolates a
/// polynomial of degree `< samples.len()` through the values and returns its value at `ω = 0`.
pub fn connes_limit_by_interpolation(
    j: usize,
    m: &BlockShape,
    mu: &[GaussRational],
    t: &GaussRational,
    samples: &[GaussRational],
) -> Result<GaussRational> {
    if samples.iter().any(Zero::is_zero) || !pairwise_distinct(samples) {
        return Err(Error::InvalidParams("interpolation nodes must be distinct and non-zero".into()));
    }
    let values = samples
        .iter()
        .map(|w| {
            let nu = q_weights(m, w)?;
            let inv_w = w.inv().expect("ω ≠ 0");
            let shifted: Vec<GaussRational> = mu.iter().map(|x| x + &(t * &inv_w)).collect();
            c_tilde(j, &nu, &shifted, w)
        })
        .collect::<Result<Vec<_>>>()?;
    // Lagrange form evaluated at 0.
    let mut acc = GaussRational::zero();
    for (a, (xa, ya)) in samples.iter().zip(&values).enumerate() {
        let mut basis = GaussRational::one();
        for (b, xb) in samples.iter().enumerate() {
            if a != b {
                basis *= &(-xb).checked_div(&(xa - xb)).expect("distinct nodes");
            }
        }
        acc += &(&basis * ya);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
