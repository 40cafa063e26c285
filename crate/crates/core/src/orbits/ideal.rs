use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_any;
use crate::pbw::{
    adjoint_action, combine_powers, matrix_powers, monic_coefficients, AlgebraContext, AlgebraElement,
    GeneratorIndex, PbwMonomial, SquareMatrixOverAlgebra, Variant,
};
use crate::scalar::GaussRational;
use crate::theta::theta_classical;
use crate::verma::{ParabolicCharacter, VermaModule};

use super::params::{mu_to_lambda, OrbitParams};

/// Powers of the generator matrix in both conventions, shared between checks on one algebra.
#[derive(Debug)]
pub struct PowerTable {
    ctx: Arc<AlgebraContext>,
    standard: Vec<SquareMatrixOverAlgebra>,
    opposite: Vec<SquareMatrixOverAlgebra>,
}

impl PowerTable {
    pub fn new(ctx: &Arc<AlgebraContext>, max: usize) -> Result<Self> {
        Ok(PowerTable {
            ctx: ctx.clone(),
            standard: matrix_powers(ctx, Variant::Standard, max)?,
            opposite: matrix_powers(ctx, Variant::Opposite, max)?,
        })
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn max(&self) -> usize {
        self.standard.len() - 1
    }

    pub fn powers(&self, variant: Variant) -> &[SquareMatrixOverAlgebra] {
        match variant {
            Variant::Standard => &self.standard,
            Variant::Opposite => &self.opposite,
        }
    }

    fn require(&self, p: &OrbitParams, degree: usize) -> Result<()> {
        if self.ctx.n() != p.n() || self.ctx.t() != &p.t {
            return Err(Error::ContextMismatch);
        }
        if degree > self.max() {
            return Err(Error::OutOfRange(format!("power {degree} not in table of size {}", self.max())));
        }
        Ok(())
    }
}

/// Which defining relation an ideal generator comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RelationLabel {
    /// Entry `(row, col)`, 1-based, of the matrix polynomial.
    Matrix { row: usize, col: usize },
    /// `Tr E^ℓ − ϑ_ℓ`.
    Trace { ell: usize },
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationLabel::Matrix { row, col } => write!(f, "P[{row},{col}]"),
            RelationLabel::Trace { ell } => write!(f, "Tr E^{ell} - theta_{ell}"),
        }
    }
}

/// The deformation parameter entering the trace values of a variant.
pub(crate) fn theta_t(p: &OrbitParams) -> GaussRational {
    match p.variant {
        Variant::Standard => p.t.clone(),
        Variant::Opposite => -&p.t,
    }
}

/// Matrix relation `Π(E − μ_i)` in the variant's power convention.
pub fn matrix_relation(p: &OrbitParams, table: &PowerTable) -> Result<SquareMatrixOverAlgebra> {
    table.require(p, p.k())?;
    Ok(combine_powers(&table.ctx, &monic_coefficients(&p.mu), table.powers(p.variant)))
}

/// The labelled generators of the defining ideal: the `n²` matrix-polynomial entries followed
/// by `Tr E^ℓ − ϑ_ℓ` for `ℓ = 1..k−1`.
pub fn labelled_generators(p: &OrbitParams, table: &PowerTable) -> Result<Vec<(RelationLabel, AlgebraElement)>> {
    let poly = matrix_relation(p, table)?;
    let n = p.n();
    let mut out = Vec::with_capacity(n * n + p.k());
    for r in 0..n {
        for c in 0..n {
            out.push((RelationLabel::Matrix { row: r + 1, col: c + 1 }, poly.get(r, c).clone()));
        }
    }
    let tt = theta_t(p);
    for ell in 1..p.k() {
        let theta = theta_classical(ell, &p.shape, &p.mu, &tt)?;
        let rel = &table.powers(p.variant)[ell].trace() - &AlgebraElement::scalar(&table.ctx, theta);
        out.push((RelationLabel::Trace { ell }, rel));
    }
    Ok(out)
}

pub fn ideal_generators(p: &OrbitParams) -> Result<Vec<AlgebraElement>> {
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let table = PowerTable::new(&ctx, p.k())?;
    Ok(labelled_generators(p, &table)?.into_iter().map(|(_, g)| g).collect())
}

/// Outcome of one relation check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationVerdict {
    pub relation: RelationLabel,
    pub holds: bool,
    /// The offending image, in text form, when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Per-generator annihilation verdicts for one parameter set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AnnihilatorReport {
    pub params: OrbitParams,
    pub shape: crate::verma::BlockShape,
    pub lambda: Vec<GaussRational>,
    pub verdicts: Vec<RelationVerdict>,
}

impl AnnihilatorReport {
    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}

/// Checks that every ideal generator kills `v₀` in the Verma module matched to `p`.
pub fn verify_orbit_annihilator(p: &OrbitParams) -> Result<AnnihilatorReport> {
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let table = PowerTable::new(&ctx, p.k())?;
    verify_orbit_annihilator_with(p, &table)
}

pub fn verify_orbit_annihilator_with(p: &OrbitParams, table: &PowerTable) -> Result<AnnihilatorReport> {
    p.require_regular()?;
    let chi = mu_to_lambda(p);
    let module = VermaModule::over(chi.clone(), &table.ctx)?;
    let verdicts = annihilation_verdicts(&module, &labelled_generators(p, table)?)?;
    Ok(AnnihilatorReport { params: p.clone(), shape: chi.shape().clone(), lambda: chi.lambda().to_vec(), verdicts })
}

pub(crate) fn annihilation_verdicts(
    module: &VermaModule,
    gens: &[(RelationLabel, AlgebraElement)],
) -> Result<Vec<RelationVerdict>> {
    gens.iter()
        .map(|(label, g)| {
            let image = module.act_on_hwv(g)?;
            Ok(RelationVerdict {
                relation: *label,
                holds: image.is_zero(),
                witness: (!image.is_zero()).then(|| image.to_string()),
            })
        })
        .collect()
}

/// One trace-value comparison.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceValue {
    pub ell: usize,
    pub central_value: GaussRational,
    pub theta: GaussRational,
}

/// `χ(Tr E^ℓ)` on the matched Verma module against `ϑ_ℓ(m, μ, ±t)` for `ℓ = 1..=max`.
pub fn trace_values_with(p: &OrbitParams, table: &PowerTable, max: usize) -> Result<Vec<TraceValue>> {
    table.require(p, max)?;
    let chi = mu_to_lambda(p);
    let module = VermaModule::over(chi, &table.ctx)?;
    let tt = theta_t(p);
    (1..=max)
        .map(|ell| {
            Ok(TraceValue {
                ell,
                central_value: module.central_value(&table.powers(p.variant)[ell].trace())?,
                theta: theta_classical(ell, &p.shape, &p.mu, &tt)?,
            })
        })
        .collect()
}

/// The matrix-polynomial entries evaluated through a Verma module for an arbitrary character,
/// used as a negative control when the character does not match `p`.
pub fn annihilation_against(p: &OrbitParams, chi: &ParabolicCharacter) -> Result<Vec<RelationVerdict>> {
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let table = PowerTable::new(&ctx, p.k())?;
    let module = VermaModule::over(chi.clone(), &ctx)?;
    annihilation_verdicts(&module, &labelled_generators(p, &table)?)
}

/// A failed ad-closure instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdFailure {
    pub generator: String,
    pub entry: RelationLabel,
}

/// Verdict of the ad-invariance check on the span of matrix-polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdInvariance {
    pub checked: usize,
    pub failures: Vec<AdFailure>,
}

impl AdInvariance {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `ad_x` of every entry of `Π(E − μ_i)` lies in the span of the entries.
pub fn ad_invariance_check(p: &OrbitParams) -> Result<AdInvariance> {
    if num::Zero::is_zero(&p.t) {
        return Err(Error::AdjointUnavailable);
    }
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let table = PowerTable::new(&ctx, p.k())?;
    let poly = matrix_relation(p, &table)?;
    let n = p.n();
    let entries: Vec<&AlgebraElement> = poly.entries().collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for x in GeneratorIndex::all(n) {
        for (idx, entry) in entries.iter().enumerate() {
            let image = adjoint_action(x, entry)?;
            checked += 1;
            if !in_span(&image, &entries) {
                failures.push(AdFailure {
                    generator: x.to_string(),
                    entry: RelationLabel::Matrix { row: idx / n + 1, col: idx % n + 1 },
                });
            }
        }
    }
    Ok(AdInvariance { checked, failures })
}

/// Whether `target` is a linear combination of `basis`.
pub(crate) fn in_span(target: &AlgebraElement, basis: &[&AlgebraElement]) -> bool {
    if target.is_zero() {
        return true;
    }
    let mut index: BTreeMap<&PbwMonomial, usize> = BTreeMap::new();
    for e in basis.iter().copied().chain(std::iter::once(target)) {
        for (m, _) in e.terms() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let zero = GaussRational::default();
    let mut a = vec![vec![zero.clone(); basis.len()]; index.len()];
    let mut b = vec![zero; index.len()];
    for (col, e) in basis.iter().enumerate() {
        for (m, c) in e.terms() {
            a[index[m]][col] = c.clone();
        }
    }
    for (m, c) in target.terms() {
        b[index[m]] = c.clone();
    }
    solve_any(&a, &b).is_ok()
}
