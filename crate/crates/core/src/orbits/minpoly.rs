use std::collections::BTreeMap;

use num::complex::Complex64;
use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::pbw::{elem_sym_all, matrix_powers, AlgebraContext, Variant};
use crate::scalar::GaussRational;
use crate::verma::{ParabolicCharacter, VermaModule};

use super::params::RootMultiset;

/// A monic polynomial `x^k − σ₁x^{k−1} + … + (−1)^k σ_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MonicPolynomial {
    /// `σ_1, …, σ_k`.
    pub sigma: Vec<GaussRational>,
}

impl MonicPolynomial {
    pub fn from_roots(roots: &[GaussRational]) -> Self {
        MonicPolynomial { sigma: elem_sym_all(roots).into_iter().skip(1).collect() }
    }

    /// From coefficients of `x^0, …, x^{k−1}` (the leading 1 omitted).
    pub fn from_lower_coefficients(coeffs: &[GaussRational]) -> Self {
        let k = coeffs.len();
        let sigma = (1..=k)
            .map(|i| {
                let c = coeffs[k - i].clone();
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        MonicPolynomial { sigma }
    }

    pub fn degree(&self) -> usize {
        self.sigma.len()
    }

    /// Coefficients lowest degree first, including the leading 1.
    pub fn coefficients(&self) -> Vec<GaussRational> {
        let k = self.degree();
        let mut out: Vec<GaussRational> = (0..k)
            .map(|s| {
                let v = self.sigma[k - s - 1].clone();
                if (k - s) % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        out.push(GaussRational::one());
        out
    }

    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        self.coefficients().iter().rev().fold(GaussRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Exact roots, found by a floating-point seed followed by rational reconstruction and an
    /// exact check; `None` when the reconstruction does not reproduce the polynomial.
    pub fn roots(&self) -> Option<RootMultiset> {
        if self.degree() == 0 {
            return Some(RootMultiset::new(Vec::new()));
        }
        let approx = durand_kerner(&self.coefficients());
        let roots: Vec<GaussRational> = approx
            .iter()
            .map(|z| Some(GaussRational::new(rationalize(z.re)?, rationalize(z.im)?)))
            .collect::<Option<_>>()?;
        (Self::from_roots(&roots) == *self).then(|| RootMultiset::new(roots))
    }
}

fn durand_kerner(coeffs: &[GaussRational]) -> Vec<Complex64> {
    let k = coeffs.len() - 1;
    let c: Vec<Complex64> = coeffs
        .iter()
        .map(|x| {
            let (re, im) = x.to_f64_pair();
            Complex64::new(re, im)
        })
        .collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, a| acc * z + a);
    let radius = 1.0 + c[..k].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..k).map(|i| seed.powu(i as u32) * radius).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..k {
            let mut den = Complex64::one();
            for j in 0..k {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Best rational approximation with a bounded denominator.
fn rationalize(x: f64) -> Option<num::BigRational> {
    if !x.is_finite() {
        return None;
    }
    const MAX_DEN: i64 = 1_000_000;
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e12 {
            return None;
        }
        let a = a as i64;
        let (h2, k2) = (a.checked_mul(h1)?.checked_add(h0)?, a.checked_mul(k1)?.checked_add(k0)?);
        if k2 > MAX_DEN {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a as f64;
        if frac.abs() < 1e-9 || ((h1 as f64) / (k1 as f64) - x).abs() < 1e-10 * x.abs().max(1.0) {
            break;
        }
        r = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(num::BigRational::new(h1.into(), k1.into()))
}

/// Solves for the monic degree-`k` polynomial `p` with `p(E)[i,j]·v₀ = 0` for all `i, j`.
pub fn solve_minimal_poly(chi: &ParabolicCharacter, t: &GaussRational) -> Result<MonicPolynomial> {
    if !chi.is_regular() {
        return Err(Error::NonRegular(format!("character values ({}) are not pairwise distinct", super::params::join(chi.lambda()))));
    }
    let k = chi.shape().k();
    let n = chi.shape().n();
    let ctx = AlgebraContext::new(n, t.clone())?;
    let module = VermaModule::over(chi.clone(), &ctx)?;
    let powers = matrix_powers(&ctx, Variant::Standard, k)?;
    // One equation per (entry, Verma monomial); unknowns are the coefficients of x^0..x^{k−1}.
    let mut rows: BTreeMap<(usize, usize, String), (Vec<GaussRational>, GaussRational)> = BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            for s in 0..=k {
                let image = module.act_on_hwv(powers[s].get(r, c))?;
                for (word, coeff) in image.terms() {
                    let key = (r, c, word.iter().map(ToString::to_string).collect::<Vec<_>>().join("*"));
                    let row = rows.entry(key).or_insert_with(|| (vec![GaussRational::zero(); k], GaussRational::zero()));
                    if s < k {
                        row.0[s] += coeff;
                    } else {
                        row.1 -= coeff;
                    }
                }
            }
        }
    }
    let (a, b): (Vec<Vec<GaussRational>>, Vec<GaussRational>) = rows.into_values().unzip();
    let lower = if a.is_empty() {
        if k == 0 {
            Vec::new()
        } else {
            return Err(Error::NonUniqueSolution { rank: 0, unknowns: k });
        }
    } else {
        solve_unique(&a, &b)?
    };
    Ok(MonicPolynomial::from_lower_coefficients(&lower))
}
