use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::context::{AlgebraContext, GeneratorIndex};
use super::element::AlgebraElement;
use super::rewrite::Rewriter;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::GaussRational;

/// Which matrix-power convention a relation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `E^ℓ`, entries `Σ E[α1,j] E[α2,α1] … E[i,α_{ℓ−1}]`.
    Standard,
    /// `E^{∘ℓ}`, entries `Σ E[i,α1] E[α1,α2] … E[α_{ℓ−1},j]`.
    Opposite,
}

impl Variant {
    pub fn flipped(self) -> Self {
        match self {
            Variant::Standard => Variant::Opposite,
            Variant::Opposite => Variant::Standard,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::Opposite => "opposite",
        })
    }
}

/// A square matrix of scalars, indexed from 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMatrix {
    n: usize,
    data: Vec<GaussRational>,
}

impl ScalarMatrix {
    pub fn zero(n: usize) -> Self {
        ScalarMatrix { n, data: vec![GaussRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { GaussRational::one() } else { GaussRational::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> GaussRational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        ScalarMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParams("matrix rows must form a square".into()));
        }
        Ok(ScalarMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    /// The matrix unit with a single 1 at `(r, c)`.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(r, c, GaussRational::one());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRational {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussRational) {
        self.data[r * self.n + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<GaussRational>> {
        self.data.chunks(self.n.max(1)).map(<[GaussRational]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> GaussRational {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        ScalarMatrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &ScalarMatrix) -> Self {
        ScalarMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ScalarMatrix) -> Self {
        ScalarMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for a in 0..n {
                let x = self.get(r, a);
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let y = other.get(a, c);
                    if !y.is_zero() {
                        out.data[r * n + c] += &(x * y);
                    }
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let a = self.rows();
        let mut cols = Vec::with_capacity(n);
        for c in 0..n {
            let b: Vec<GaussRational> =
                (0..n).map(|r| if r == c { GaussRational::one() } else { GaussRational::zero() }).collect();
            cols.push(linalg::solve_unique(&a, &b).map_err(|_| Error::InvalidParams("singular matrix".into()))?);
        }
        Ok(Self::from_fn(n, |r, c| cols[c][r].clone()))
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[[{}]]", rows.join("], ["))
    }
}

/// An `n × n` array of algebra elements sharing one context, indexed from 0.
#[derive(Clone)]
pub struct SquareMatrixOverAlgebra {
    ctx: Arc<AlgebraContext>,
    entries: Vec<AlgebraElement>,
}

impl SquareMatrixOverAlgebra {
    pub fn from_fn(ctx: &Arc<AlgebraContext>, mut f: impl FnMut(usize, usize) -> AlgebraElement) -> Self {
        let n = ctx.n();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        SquareMatrixOverAlgebra { ctx: Arc::clone(ctx), entries }
    }

    pub fn zero(ctx: &Arc<AlgebraContext>) -> Self {
        Self::from_fn(ctx, |_, _| AlgebraElement::zero(ctx))
    }

    pub fn identity(ctx: &Arc<AlgebraContext>) -> Self {
        Self::from_fn(ctx, |r, c| if r == c { AlgebraElement::one(ctx) } else { AlgebraElement::zero(ctx) })
    }

    /// The generator matrix with entry `(r, c)` equal to `E[r+1, c+1]`.
    pub fn generators(ctx: &Arc<AlgebraContext>) -> Self {
        Self::from_fn(ctx, |r, c| AlgebraElement::generator(ctx, GeneratorIndex::new(r + 1, c + 1)))
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.entries[r * self.n() + c]
    }

    pub fn entries(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.entries.iter()
    }

    pub fn into_entries(self) -> Vec<AlgebraElement> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn trace(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(&self.ctx);
        for i in 0..self.n() {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(&self.ctx, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(&self.ctx, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        Self::from_fn(&self.ctx, |r, c| self.get(r, c).scale(s))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, |r, c| self.get(c, r).clone())
    }

    /// The ordinary matrix product `A · M · B` with scalar outer factors.
    pub fn sandwich(&self, a: &ScalarMatrix, b: &ScalarMatrix) -> Self {
        let n = self.n();
        Self::from_fn(&self.ctx, |r, c| {
            let mut acc = AlgebraElement::zero(&self.ctx);
            for x in 0..n {
                if a.get(r, x).is_zero() {
                    continue;
                }
                for y in 0..n {
                    let coeff = a.get(r, x) * b.get(y, c);
                    if !coeff.is_zero() {
                        acc = &acc + &self.get(x, y).scale(&coeff);
                    }
                }
            }
            acc
        })
    }

    pub fn map(&self, mut f: impl FnMut(&AlgebraElement) -> AlgebraElement) -> Self {
        Self::from_fn(&self.ctx, |r, c| f(self.get(r, c)))
    }

    pub fn try_map(&self, mut f: impl FnMut(&AlgebraElement) -> Result<AlgebraElement>) -> Result<Self> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrixOverAlgebra { ctx: Arc::clone(&self.ctx), entries })
    }

    /// Product in the standard convention: `(A ⋆ B)[i,j] = Σ_α B[α,j] · A[i,α]`, so that `E^ℓ = E^{ℓ−1} ⋆ E`.
    pub fn standard_product(&self, other: &Self) -> Result<Self> {
        self.product(other, Variant::Standard)
    }

    /// Product in the opposite convention: the ordinary `(A B)[i,j] = Σ_α A[i,α] · B[α,j]`.
    pub fn opposite_product(&self, other: &Self) -> Result<Self> {
        self.product(other, Variant::Opposite)
    }

    fn product(&self, other: &Self, variant: Variant) -> Result<Self> {
        if !self.ctx.is_compatible(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let n = self.n();
        let left_deg = self.entries.iter().map(AlgebraElement::degree).max().unwrap_or(0);
        let right_deg = other.entries.iter().map(AlgebraElement::degree).max().unwrap_or(0);
        self.ctx.check_degree(left_deg + right_deg)?;
        let mut rw = Rewriter::new(&self.ctx);
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = AlgebraElement::zero(&self.ctx);
                for a in 0..n {
                    let (x, y) = match variant {
                        Variant::Standard => (other.get(a, c), self.get(r, a)),
                        Variant::Opposite => (self.get(r, a), other.get(a, c)),
                    };
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = &acc + &x.multiply_with(&mut rw, y);
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrixOverAlgebra { ctx: Arc::clone(&self.ctx), entries })
    }
}

impl PartialEq for SquareMatrixOverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for SquareMatrixOverAlgebra {}

impl fmt::Debug for SquareMatrixOverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut list = f.debug_list();
        for r in 0..n {
            let row: Vec<String> = (0..n).map(|c| self.get(r, c).to_string()).collect();
            list.entry(&row);
        }
        list.finish()
    }
}

/// Powers `E^0, …, E^max` in the chosen convention.
///
/// Each step is a left multiplication by a single generator, so intermediate degrees
/// never exceed `max`.
pub fn matrix_powers(ctx: &Arc<AlgebraContext>, variant: Variant, max: usize) -> Result<Vec<SquareMatrixOverAlgebra>> {
    ctx.check_degree(max)?;
    let n = ctx.n();
    let mut rw = Rewriter::new(ctx);
    let mut out = vec![SquareMatrixOverAlgebra::identity(ctx)];
    for _ in 0..max {
        let prev = out.last().expect("non-empty");
        let next = SquareMatrixOverAlgebra::from_fn(ctx, |i, j| {
            let mut acc = AlgebraElement::zero(ctx);
            for a in 0..n {
                let (g, inner) = match variant {
                    Variant::Standard => (GeneratorIndex::new(a + 1, j + 1), prev.get(i, a)),
                    Variant::Opposite => (GeneratorIndex::new(i + 1, a + 1), prev.get(a, j)),
                };
                if !inner.is_zero() {
                    acc = &acc + &inner.left_mul_generator_with(&mut rw, g);
                }
            }
            acc
        });
        out.push(next);
    }
    Ok(out)
}

/// `E^ℓ` with entries `Σ E[α1,j] E[α2,α1] … E[i,α_{ℓ−1}]`.
pub fn matrix_power(ell: usize, ctx: &Arc<AlgebraContext>) -> Result<SquareMatrixOverAlgebra> {
    Ok(matrix_powers(ctx, Variant::Standard, ell)?.pop().expect("non-empty"))
}

/// `E^{∘ℓ}` with entries `Σ E[i,α1] E[α1,α2] … E[α_{ℓ−1},j]`.
pub fn matrix_power_opposite(ell: usize, ctx: &Arc<AlgebraContext>) -> Result<SquareMatrixOverAlgebra> {
    Ok(matrix_powers(ctx, Variant::Opposite, ell)?.pop().expect("non-empty"))
}

/// `Σ_s coeffs[s] · powers[s]`.
pub fn combine_powers(
    ctx: &Arc<AlgebraContext>,
    coeffs: &[GaussRational],
    powers: &[SquareMatrixOverAlgebra],
) -> SquareMatrixOverAlgebra {
    let mut acc = SquareMatrixOverAlgebra::zero(ctx);
    for (c, p) in coeffs.iter().zip(powers) {
        if !c.is_zero() {
            acc = acc.add(&p.scale(c));
        }
    }
    acc
}

/// `Π (E − μ_i)` expanded as `Σ_s (−1)^{k−s} σ_{k−s}(roots) E^s` in the chosen convention.
pub fn matrix_poly_from_roots(
    roots: &[GaussRational],
    variant: Variant,
    ctx: &Arc<AlgebraContext>,
) -> Result<SquareMatrixOverAlgebra> {
    let powers = matrix_powers(ctx, variant, roots.len())?;
    Ok(combine_powers(ctx, &monic_coefficients(roots), &powers))
}

/// Coefficients, lowest degree first, of the monic polynomial `Π (x − r)`.
pub fn monic_coefficients(roots: &[GaussRational]) -> Vec<GaussRational> {
    let k = roots.len();
    let sigma = elem_sym_all(roots);
    (0..=k)
        .map(|s| {
            let v = sigma[k - s].clone();
            if (k - s) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// All elementary symmetric polynomials `σ_0, …, σ_k` of the inputs.
pub fn elem_sym_all(values: &[GaussRational]) -> Vec<GaussRational> {
    let mut sigma = vec![GaussRational::zero(); values.len() + 1];
    sigma[0] = GaussRational::one();
    for (idx, v) in values.iter().enumerate() {
        for j in (1..=idx + 1).rev() {
            let add = &sigma[j - 1] * v;
            sigma[j] += &add;
        }
    }
    sigma
}

pub fn elem_sym(j: usize, values: &[GaussRational]) -> Result<GaussRational> {
    if j > values.len() {
        return Err(Error::OutOfRange(format!("σ_{j} of {} values", values.len())));
    }
    Ok(elem_sym_all(values).swap_remove(j))
}

/// `ad_x(u) = (E[x] u − u E[x]) / t`.
pub fn adjoint_action(x: GeneratorIndex, u: &AlgebraElement) -> Result<AlgebraElement> {
    let ctx = u.ctx();
    let inv_t = ctx.t().inv().ok_or(Error::AdjointUnavailable)?;
    let g = AlgebraElement::generator(ctx, x);
    let left = g.multiply(u)?;
    let right = u.multiply(&g)?;
    Ok((&left - &right).scale(&inv_t))
}

/// Coefficient-wise complex conjugation.
pub fn conjugate_element(u: &AlgebraElement) -> AlgebraElement {
    u.conj()
}
