//! Star structures on `U(g_t)` attached to the real forms of `gl(n, C)`, the conditions under
//! which they descend to the orbit algebras, and exact checks of their matrix identities.

#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::orbits::{labelled_generators, mu_to_lambda, OrbitParams, PowerTable, RelationVerdict};
use crate::pbw::{matrix_powers, AlgebraContext, AlgebraElement, GeneratorIndex, ScalarMatrix, SquareMatrixOverAlgebra, Variant};
use crate::scalar::GaussRational;
use crate::verma::{apply_perm, BlockShape, VermaModule};

/// A real form of `gl(n, C)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InvolutionKind {
    GlReal,
    /// `u(r, s)` with `r + s = n`, `r ≥ s ≥ 0`.
    U { r: usize, s: usize },
    /// `u*(2m)`, `n = 2m`.
    UStar,
}

impl InvolutionKind {
    pub fn validate(self, n: usize) -> Result<()> {
        match self {
            InvolutionKind::GlReal => Ok(()),
            InvolutionKind::U { r, s } if r + s == n && r >= s => Ok(()),
            InvolutionKind::U { r, s } => Err(Error::InvalidParams(format!("u({r},{s}) needs r+s = {n} and r >= s"))),
            InvolutionKind::UStar if n.is_multiple_of(2) && n > 0 => Ok(()),
            InvolutionKind::UStar => Err(Error::InvalidParams(format!("u* needs even n, got {n}"))),
        }
    }

    /// All kinds valid for `n`.
    pub fn all(n: usize) -> Vec<InvolutionKind> {
        let mut out = vec![InvolutionKind::GlReal];
        out.extend((0..=n / 2).map(|s| InvolutionKind::U { r: n - s, s }));
        if n.is_multiple_of(2) {
            out.push(InvolutionKind::UStar);
        }
        out
    }

    /// Whether the generator map involves a transpose.
    fn is_unitary(self) -> bool {
        matches!(self, InvolutionKind::U { .. })
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionKind::GlReal => write!(f, "gl-real"),
            InvolutionKind::U { r, s } => write!(f, "u:{r},{s}"),
            InvolutionKind::UStar => write!(f, "u-star"),
        }
    }
}

impl FromStr for InvolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "gl-real" => Ok(InvolutionKind::GlReal),
            "u-star" => Ok(InvolutionKind::UStar),
            other => {
                let rest = other.strip_prefix("u:").ok_or_else(|| Error::Parse(format!("unknown real form {other:?}")))?;
                let (r, s) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected u:r,s, got {other:?}")))?;
                let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad signature {other:?}")));
                Ok(InvolutionKind::U { r: parse(r)?, s: parse(s)? })
            }
        }
    }
}

/// `J_{(r,s)}`, `J_m` or the identity.
pub fn j_matrix(kind: InvolutionKind, n: usize) -> Result<ScalarMatrix> {
    kind.validate(n)?;
    Ok(match kind {
        InvolutionKind::GlReal => ScalarMatrix::identity(n),
        InvolutionKind::U { r, .. } => ScalarMatrix::from_fn(n, |a, b| match (a == b, a < r) {
            (false, _) => GaussRational::zero(),
            (true, true) => GaussRational::one(),
            (true, false) => -GaussRational::one(),
        }),
        InvolutionKind::UStar => {
            let m = n / 2;
            let mut j = ScalarMatrix::zero(n);
            for i in 0..m {
                j.set(i, i + m, GaussRational::one());
                j.set(i + m, i, -GaussRational::one());
            }
            j
        }
    })
}

/// An anti-linear anti-automorphism of `U(g_t)` given on generators.
#[derive(Clone, Debug)]
pub struct StarMap {
    kind: InvolutionKind,
    j: ScalarMatrix,
    /// `images.get(i, j) = (E[i+1, j+1])*`.
    images: SquareMatrixOverAlgebra,
}

impl StarMap {
    /// Requires a real deformation value.
    pub fn new(kind: InvolutionKind, ctx: &Arc<AlgebraContext>) -> Result<Self> {
        if !ctx.t().is_real() {
            return Err(Error::InvalidParams("star structures need a real t".into()));
        }
        let n = ctx.n();
        let j = j_matrix(kind, n)?;
        let j_inv = j.inverse()?;
        let e = SquareMatrixOverAlgebra::generators(ctx);
        let images = if kind.is_unitary() {
            e.sandwich(&j, &j_inv).transpose()
        } else {
            e.sandwich(&j, &j_inv).scale(&-GaussRational::one())
        };
        Ok(StarMap { kind, j, images })
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn j(&self) -> &ScalarMatrix {
        &self.j
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        self.images.ctx()
    }

    pub fn image(&self, g: GeneratorIndex) -> &AlgebraElement {
        self.images.get(g.row() - 1, g.col() - 1)
    }

    /// Reverses each monomial, substitutes generator images and conjugates coefficients.
    pub fn apply(&self, u: &AlgebraElement) -> Result<AlgebraElement> {
        if !u.ctx().same_algebra(self.ctx()) {
            return Err(Error::ContextMismatch);
        }
        let ctx = u.ctx();
        let mut acc = AlgebraElement::zero(ctx);
        for (m, c) in u.terms() {
            let mut prod = AlgebraElement::scalar(ctx, c.conj());
            for g in m.factors(ctx).into_iter().rev() {
                prod = prod.multiply(&self.image(g).to_context(ctx)?)?;
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    pub fn apply_matrix(&self, m: &SquareMatrixOverAlgebra) -> Result<SquareMatrixOverAlgebra> {
        m.try_map(|x| self.apply(x))
    }
}

/// `τ` in the stabilizer of `m` with `conj(μ) = τ(μ)`.
pub fn condition_u(m: &BlockShape, mu: &[GaussRational]) -> Option<Vec<usize>> {
    let target: Vec<GaussRational> = mu.iter().map(GaussRational::conj).collect();
    m.stabilizer().into_iter().find(|tau| apply_perm(tau, mu) == target)
}

/// `τ` in the stabilizer of `m` with `−conj(μ) = τ(μ − t·m) + t·n·(1, …, 1)`.
pub fn condition_gl_ustar(m: &BlockShape, mu: &[GaussRational], t: &GaussRational, n: usize) -> Option<Vec<usize>> {
    let target: Vec<GaussRational> = mu.iter().map(|x| -x.conj()).collect();
    let shifted: Vec<GaussRational> =
        mu.iter().zip(m.parts()).map(|(x, &mi)| x - &(t * &GaussRational::from(mi))).collect();
    let tn = t * &GaussRational::from(n);
    m.stabilizer().into_iter().find(|tau| apply_perm(tau, &shifted).iter().map(|x| x + &tn).collect::<Vec<_>>() == target)
}

/// The condition matching the kind.
pub fn condition(kind: InvolutionKind, p: &OrbitParams) -> Option<Vec<usize>> {
    match kind {
        InvolutionKind::U { .. } => condition_u(&p.shape, &p.mu),
        InvolutionKind::GlReal | InvolutionKind::UStar => condition_gl_ustar(&p.shape, &p.mu, &p.t, p.n()),
    }
}

/// Compares `(E^ℓ)*` with `(J E^ℓ J)′` (unitary kinds) or `(−1)^ℓ J E^{∘ℓ} J⁻¹` (others).
pub fn verify_power_transform(star: &StarMap, ell: usize) -> Result<bool> {
    let ctx = star.ctx();
    let standard = matrix_powers(ctx, Variant::Standard, ell)?.pop().expect("non-empty");
    let lhs = star.apply_matrix(&standard)?;
    let j_inv = star.j.inverse()?;
    let rhs = if star.kind.is_unitary() {
        standard.sandwich(&star.j, &star.j).transpose()
    } else {
        let opposite = matrix_powers(ctx, Variant::Opposite, ell)?.pop().expect("non-empty");
        let sign = if ell.is_multiple_of(2) { GaussRational::one() } else { -GaussRational::one() };
        opposite.sandwich(&star.j, &j_inv).scale(&sign)
    };
    Ok(lhs == rhs)
}

/// `(Tr E^ℓ)* = Tr E^ℓ` for unitary kinds, `(−1)^ℓ Tr E^{∘ℓ}` otherwise.
pub fn verify_trace_transform(star: &StarMap, ell: usize) -> Result<bool> {
    let ctx = star.ctx();
    let lhs = star.apply(&matrix_powers(ctx, Variant::Standard, ell)?[ell].trace())?;
    let rhs = if star.kind.is_unitary() {
        matrix_powers(ctx, Variant::Standard, ell)?[ell].trace()
    } else {
        let sign = if ell.is_multiple_of(2) { GaussRational::one() } else { -GaussRational::one() };
        matrix_powers(ctx, Variant::Opposite, ell)?[ell].trace().scale(&sign)
    };
    Ok(lhs == rhs)
}

/// Real dimension of `{u ∈ span(E[i,j]) : u* = −u}`.
pub fn anti_fixed_real_dimension(star: &StarMap) -> usize {
    let n = star.ctx().n();
    let gens: Vec<GeneratorIndex> = GeneratorIndex::all(n).collect();
    let dim = gens.len();
    // Real coordinates: (Re c_g, Im c_g) for each generator g; columns of star + id.
    let mut columns: Vec<Vec<GaussRational>> = Vec::with_capacity(2 * dim);
    for unit in [GaussRational::one(), GaussRational::i()] {
        for &g in &gens {
            let u = AlgebraElement::generator(star.ctx(), g).scale(&unit);
            let image = &star.apply(&u).expect("same algebra") + &u;
            let mut col = Vec::with_capacity(2 * dim);
            let coeffs: Vec<GaussRational> = gens.iter().map(|&h| image.coefficient(&[h])).collect();
            col.extend(coeffs.iter().map(|c| GaussRational::from_rational(c.re().clone())));
            col.extend(coeffs.iter().map(|c| GaussRational::from_rational(c.im().clone())));
            columns.push(col);
        }
    }
    2 * dim - rank(&columns)
}

/// Result of applying a star map to the defining relations of an orbit algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StarReport {
    pub kind: InvolutionKind,
    pub tau: Vec<usize>,
    pub lambda: Vec<GaussRational>,
    pub verdicts: Vec<RelationVerdict>,
}

impl StarReport {
    pub fn verified(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

/// Applies the star to every ideal generator of `p` and checks that the images kill `v₀` in the
/// Verma module realizing `p`.
pub fn verify_star_on_orbit(p: &OrbitParams, kind: InvolutionKind) -> Result<StarReport> {
    if p.variant != Variant::Standard {
        return Err(Error::InvalidParams("real forms are checked on the standard variant".into()));
    }
    kind.validate(p.n())?;
    let tau = condition(kind, p)
        .ok_or_else(|| Error::ConditionFailed(format!("no admissible permutation for {kind} at mu=({})", join(&p.mu))))?;
    p.is_regular().then_some(()).ok_or_else(|| Error::NonRegular("eigenvalues are not pairwise distinct".into()))?;
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let star = StarMap::new(kind, &ctx)?;
    let table = PowerTable::new(&ctx, p.k())?;
    let chi = mu_to_lambda(p);
    let module = VermaModule::over(chi.clone(), &ctx)?;
    let verdicts = labelled_generators(p, &table)?
        .into_iter()
        .map(|(label, g)| {
            let image = module.act_on_hwv(&star.apply(&g)?)?;
            Ok(RelationVerdict { relation: label, holds: image.is_zero(), witness: (!image.is_zero()).then(|| image.to_string()) })
        })
        .collect::<Result<_>>()?;
    Ok(StarReport { kind, tau, lambda: chi.lambda().to_vec(), verdicts })
}

fn join(values: &[GaussRational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
