use std::sync::Arc;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::pbw::{AlgebraContext, AlgebraElement, SquareMatrixOverAlgebra, Variant};
use crate::sampling;
use crate::scalar::GaussRational;
use crate::verma::{BlockShape, ParabolicCharacter, VermaModule};

use super::ideal::{matrix_relation, PowerTable};
use super::params::{central_roots, harish_chandra_roots, mu_to_lambda, OrbitParams};

/// Largest `n` accepted by [`cayley_hamilton`] unless raised explicitly.
pub const DEFAULT_CH_CAP: usize = 3;

/// A product `Π Tr E^{ℓ_r}` with its coefficient in some `c_i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceTerm {
    pub traces: Vec<usize>,
    pub coefficient: GaussRational,
}

/// Reconstructed central coefficients of the Cayley–Hamilton identity.
#[derive(Clone, Debug)]
pub struct CayleyHamilton {
    pub n: usize,
    pub t: GaussRational,
    /// `c_1, …, c_n` as polynomials in traces of powers.
    pub expansions: Vec<Vec<TraceTerm>>,
    /// `c_1, …, c_n` in PBW normal form.
    pub coefficients: Vec<AlgebraElement>,
    /// `E^n − c₁E^{n−1} + … + (−1)^n c_n`, entrywise.
    pub residual: SquareMatrixOverAlgebra,
    table: Arc<PowerTable>,
}

impl CayleyHamilton {
    pub fn verified(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        self.table.ctx()
    }

    pub fn powers(&self) -> &PowerTable {
        &self.table
    }

    /// `χ_λ(c_i)` on the full-flag Verma module.
    pub fn character_values(&self, lambda: &[GaussRational]) -> Result<Vec<GaussRational>> {
        let module = full_flag_module(lambda, self.ctx())?;
        self.coefficients.iter().map(|c| module.central_value(c)).collect()
    }
}

fn full_flag_module(lambda: &[GaussRational], ctx: &AlgebraContext) -> Result<Arc<VermaModule>> {
    let chi = ParabolicCharacter::new(BlockShape::full_flag(lambda.len()), lambda.to_vec())?;
    VermaModule::over(chi, ctx)
}

/// Partitions of every size `d ≤ i`, parts in non-increasing order.
fn ansatz(i: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=i {
        rec(d, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Reconstructs `c_1, …, c_n` from their characters on sampled `λ` and checks the identity
/// in normal form.
pub fn cayley_hamilton(n: usize, t: &GaussRational, seed: u64) -> Result<CayleyHamilton> {
    cayley_hamilton_capped(n, t, seed, DEFAULT_CH_CAP)
}

pub fn cayley_hamilton_capped(n: usize, t: &GaussRational, seed: u64, cap: usize) -> Result<CayleyHamilton> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if n > cap {
        return Err(Error::ResourceCap(format!("Cayley-Hamilton reconstruction limited to n <= {cap}")));
    }
    let ctx = AlgebraContext::new(n, t.clone())?;
    let table = Arc::new(PowerTable::new(&ctx, n)?);
    let traces: Vec<AlgebraElement> = table.powers(Variant::Standard).iter().map(|p| p.trace()).collect();
    let mut rng = sampling::rng(seed);

    let mut expansions = Vec::with_capacity(n);
    let mut coefficients = Vec::with_capacity(n);
    for i in 1..=n {
        let basis = ansatz(i);
        let mut samples = basis.len() + 2;
        let solution = loop {
            let mut rows = Vec::with_capacity(samples);
            let mut rhs = Vec::with_capacity(samples);
            for _ in 0..samples {
                let lambda: Vec<GaussRational> = (0..n).map(|_| sampling::rational(&mut rng)).collect();
                let module = full_flag_module(&lambda, &ctx)?;
                let chi_tr: Vec<GaussRational> = (0..=i)
                    .map(|l| if l == 0 { Ok(GaussRational::from(n)) } else { module.central_value(&traces[l]) })
                    .collect::<Result<_>>()?;
                rows.push(basis.iter().map(|parts| parts.iter().map(|&l| &chi_tr[l]).product()).collect());
                rhs.push(crate::pbw::elem_sym(i, &harish_chandra_roots(&lambda, t))?);
            }
            match solve_unique(&rows, &rhs) {
                Ok(x) => break x,
                Err(Error::NonUniqueSolution { .. }) if samples < 8 * basis.len() => samples *= 2,
                Err(e) => return Err(e),
            }
        };
        let mut element = AlgebraElement::zero(&ctx);
        let mut terms = Vec::new();
        for (parts, coeff) in basis.iter().zip(solution) {
            if coeff.is_zero() {
                continue;
            }
            let mut product = AlgebraElement::one(&ctx);
            for &l in parts {
                product = product.multiply(&traces[l])?;
            }
            element = &element + &product.scale(&coeff);
            terms.push(TraceTerm { traces: parts.clone(), coefficient: coeff });
        }
        expansions.push(terms);
        coefficients.push(element);
    }

    let powers = table.powers(Variant::Standard);
    let mut residual = powers[n].clone();
    for (i, c) in coefficients.iter().enumerate() {
        let i = i + 1;
        let term = powers[n - i].try_map(|x| c.multiply(x))?;
        residual = if i % 2 == 1 { residual.sub(&term) } else { residual.add(&term) };
    }
    Ok(CayleyHamilton { n, t: t.clone(), expansions, coefficients, residual, table })
}

/// Outcome of the maximal-rank redundancy check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Redundancy {
    /// `σ_i(μ) = χ_{m,μ}(c_i)` for every `i`.
    pub coefficients_match: bool,
    /// `Π(E − μ_i) = Σ_i (−1)^i (χ(c_i) − c_i) E^{n−i}` in normal form.
    pub identity_holds: bool,
    /// Every `c_i − χ(c_i)` kills `v₀`.
    pub kernel_annihilates: bool,
}

impl Redundancy {
    pub fn holds(&self) -> bool {
        self.coefficients_match && self.identity_holds && self.kernel_annihilates
    }
}

/// For `m = (1, …, 1)`, checks that the matrix relation is the Cayley–Hamilton identity with
/// `c_i` replaced by its character value, so it follows from the central relations.
pub fn kn_redundancy(p: &OrbitParams, ch: &CayleyHamilton) -> Result<Redundancy> {
    if p.variant != Variant::Standard || p.k() != p.n() {
        return Err(Error::InvalidParams("redundancy check needs a standard full-flag parameter set".into()));
    }
    if ch.n != p.n() || ch.t != p.t {
        return Err(Error::ContextMismatch);
    }
    let ctx = ch.ctx();
    let module = VermaModule::over(mu_to_lambda(p), ctx)?;
    let chi: Vec<GaussRational> = ch.coefficients.iter().map(|c| module.central_value(c)).collect::<Result<_>>()?;
    let sigma = crate::pbw::elem_sym_all(central_roots(p).values());
    let coefficients_match = chi.iter().zip(&sigma[1..]).all(|(a, b)| a == b);

    let n = p.n();
    let powers = ch.powers().powers(Variant::Standard);
    let mut rhs = SquareMatrixOverAlgebra::zero(ctx);
    let mut kernel_annihilates = true;
    for (i, c) in ch.coefficients.iter().enumerate() {
        let i = i + 1;
        let kernel = &AlgebraElement::scalar(ctx, chi[i - 1].clone()) - c;
        kernel_annihilates &= module.act_on_hwv(&kernel)?.is_zero();
        let term = powers[n - i].try_map(|x| kernel.multiply(x))?;
        let sign = if i % 2 == 1 { -GaussRational::one() } else { GaussRational::one() };
        rhs = rhs.add(&term.scale(&sign));
    }
    let identity_holds = matrix_relation(p, ch.powers())? == rhs;
    Ok(Redundancy { coefficients_match, identity_holds, kernel_annihilates })
}
