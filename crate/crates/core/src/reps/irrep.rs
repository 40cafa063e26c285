use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::independent_rows;
use crate::pbw::{AlgebraContext, AlgebraElement, GeneratorIndex, ScalarMatrix};
use crate::scalar::GaussRational;
use crate::verma::{VermaElement, VermaModule};

use super::weight::{weyl_dim, DominantWeight};

/// Largest dimension [`build_irrep`] constructs unless raised explicitly.
pub const DEFAULT_DIM_CAP: u64 = 200;

const OFFSET_CAP: usize = 1_000_000;

/// One weight space of the quotient.
#[derive(Debug)]
struct WeightBlock {
    /// Index of the first basis vector of this block in the representation basis.
    start: usize,
    /// PBW basis of the Verma weight space.
    full: Vec<VermaElement>,
    /// Positions in `full` of the chosen representatives.
    reps: Vec<usize>,
    /// Inverse of the Shapovalov matrix restricted to the representatives.
    gram_inv: ScalarMatrix,
}

/// The irreducible quotient of a full-flag Verma module at `t = 1`, weight space by weight
/// space.
#[derive(Debug)]
pub struct Quotient {
    module: Arc<VermaModule>,
    blocks: BTreeMap<Vec<i64>, WeightBlock>,
}

impl Quotient {
    pub fn module(&self) -> &Arc<VermaModule> {
        &self.module
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: &VermaElement, dim: usize) -> Result<Vec<GaussRational>> {
        let n = self.module.n();
        let mut parts: BTreeMap<Vec<i64>, VermaElement> = BTreeMap::new();
        for (factors, c) in v.terms() {
            let mut offset = vec![0i64; n];
            for g in &factors {
                offset.iter_mut().zip(g.weight(n)).for_each(|(o, w)| *o += w);
            }
            let term = self.module.vector(&factors)?.scale(c);
            let slot = parts.entry(offset).or_insert_with(|| self.module.zero_vector());
            *slot = slot.checked_add(&term)?;
        }
        let mut out = vec![GaussRational::zero(); dim];
        for (offset, w) in parts {
            if let Some(block) = self.blocks.get(&offset) {
                for (i, x) in self.coordinates(block, &w)?.into_iter().enumerate() {
                    out[block.start + i] = x;
                }
            }
        }
        Ok(out)
    }

    fn coordinates(&self, block: &WeightBlock, w: &VermaElement) -> Result<Vec<GaussRational>> {
        let pairing: Vec<GaussRational> =
            block.reps.iter().map(|&r| self.module.shapovalov(&block.full[r], w)).collect::<Result<_>>()?;
        let r = block.reps.len();
        Ok((0..r).map(|i| (0..r).map(|j| block.gram_inv.get(i, j) * &pairing[j]).sum()).collect())
    }
}

/// Label of a basis vector: its weight offset from `λ̃` and its Verma representative.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BasisLabel {
    pub offset: Vec<i64>,
    pub vector: String,
}

/// Generator matrices of an irreducible finite-dimensional module of `U(g_t)`.
///
/// Built at `t = 1` with highest weight `λ̃`, then rescaled `E ↦ tE`; the highest weight of the
/// result is `t·λ̃`.
#[derive(Debug, Clone)]
pub struct FiniteDimRep {
    pub weight: DominantWeight,
    pub t: GaussRational,
    pub dim: usize,
    pub basis: Vec<BasisLabel>,
    /// Row-major over generators: `action[(i−1)n + (j−1)]` represents `E[i,j]`.
    action: Vec<ScalarMatrix>,
    quotient: Arc<Quotient>,
}

impl FiniteDimRep {
    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn action(&self, g: GeneratorIndex) -> &ScalarMatrix {
        &self.action[(g.row() - 1) * self.n() + g.col() - 1]
    }

    /// The matrix of `u` with generators replaced by their action matrices.
    pub fn matrix_of(&self, u: &AlgebraElement) -> Result<ScalarMatrix> {
        if u.ctx().n() != self.n() || u.ctx().t() != &self.t {
            return Err(Error::ContextMismatch);
        }
        let mut acc = ScalarMatrix::zero(self.dim);
        for (m, c) in u.terms() {
            let mut prod = ScalarMatrix::identity(self.dim);
            for g in m.factors(u.ctx()) {
                prod = prod.mul(self.action(g));
            }
            acc = acc.add(&prod.scale(c));
        }
        Ok(acc)
    }

    /// The quotient map from the `t = 1` Verma module.
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// Same matrices viewed at another non-zero deformation value.
    pub fn rescaled_to(&self, t: &GaussRational) -> Result<Self> {
        let ratio = t.checked_div(&self.t).filter(|r| !r.is_zero()).ok_or_else(|| Error::InvalidParams("t must be non-zero".into()))?;
        Ok(FiniteDimRep {
            weight: self.weight.clone(),
            t: t.clone(),
            dim: self.dim,
            basis: self.basis.clone(),
            action: self.action.iter().map(|m| m.scale(&ratio)).collect(),
            quotient: self.quotient.clone(),
        })
    }
}

/// `λ̃_i − λ̃_n + offset_i` sorted decreasingly is dominated by the profile of `λ̃`.
fn in_dominant_hull(profile: &[i64], offset: &[i64]) -> bool {
    let mut nu: Vec<i64> = profile.iter().zip(offset).map(|(a, b)| a + b).collect();
    nu.sort_unstable_by(|a, b| b.cmp(a));
    let mut partial = 0;
    for (a, b) in profile.iter().zip(&nu) {
        partial += a - b;
        if partial < 0 {
            return false;
        }
    }
    partial == 0
}

/// Offsets `−Σ c_i α_i` with `0 ≤ c_i ≤ bound` that pass the hull test, highest first.
fn candidate_offsets(profile: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = profile.len();
    let bound: i64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| profile[i] - profile[j]).sum();
    let count = (bound as usize + 1).checked_pow((n - 1) as u32).unwrap_or(usize::MAX);
    if count > OFFSET_CAP {
        return Err(Error::ResourceCap(format!("{count} candidate weights")));
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; n.saturating_sub(1)];
    loop {
        let offset: Vec<i64> = (0..n)
            .map(|j| (if j > 0 { c[j - 1] } else { 0 }) - (if j + 1 < n { c[j] } else { 0 }))
            .collect();
        if in_dominant_hull(profile, &offset) {
            out.push((c.iter().sum::<i64>(), offset));
        }
        let Some(pos) = c.iter().position(|&x| x < bound) else { break };
        c[pos] += 1;
        c[..pos].iter_mut().for_each(|x| *x = 0);
    }
    out.sort();
    Ok(out.into_iter().map(|(_, o)| o).collect())
}

pub fn build_irrep(weight: &DominantWeight, t: &GaussRational) -> Result<FiniteDimRep> {
    build_irrep_capped(weight, t, DEFAULT_DIM_CAP)
}

/// Irreducible module with highest weight `λ̃` at `t = 1`, rescaled to `t`.
pub fn build_irrep_capped(weight: &DominantWeight, t: &GaussRational, cap: u64) -> Result<FiniteDimRep> {
    if t.is_zero() {
        return Err(Error::InvalidParams("t must be non-zero".into()));
    }
    let predicted = weyl_dim(weight)?;
    if predicted > cap {
        return Err(Error::ResourceCap(format!("dimension {predicted} exceeds cap {cap}")));
    }
    let n = weight.n();
    let one = GaussRational::one();
    let ctx = AlgebraContext::new(n, one.clone())?;
    let module = VermaModule::over(weight.character(), &ctx)?;
    let profile = weight.integer_profile();

    let mut blocks = BTreeMap::new();
    let mut basis = Vec::new();
    for offset in candidate_offsets(&profile)? {
        let full = module.basis_of_offset(&offset);
        if full.is_empty() {
            continue;
        }
        let gram: Vec<Vec<GaussRational>> = full
            .iter()
            .map(|a| full.iter().map(|b| module.shapovalov(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let reps = independent_rows(&gram);
        if reps.is_empty() {
            continue;
        }
        let sub = ScalarMatrix::from_fn(reps.len(), |i, j| gram[reps[i]][reps[j]].clone());
        let gram_inv = sub.inverse()?;
        let start = basis.len();
        for &r in &reps {
            basis.push(BasisLabel { offset: offset.clone(), vector: full[r].to_string() });
        }
        blocks.insert(offset, WeightBlock { start, full, reps, gram_inv });
    }
    let dim = basis.len();
    if dim as u64 != predicted {
        return Err(Error::VerificationFailed(format!("quotient has dimension {dim}, expected {predicted}")));
    }
    let quotient = Quotient { module: module.clone(), blocks };

    let mut action = Vec::with_capacity(n * n);
    for g in GeneratorIndex::all(n) {
        let x = AlgebraElement::generator(&ctx, g);
        let mut m = ScalarMatrix::zero(dim);
        for block in quotient.blocks.values() {
            for (i, &r) in block.reps.iter().enumerate() {
                let image = module.act(&x, &block.full[r])?;
                for (row, v) in quotient.project(&image, dim)?.into_iter().enumerate() {
                    if !v.is_zero() {
                        m.set(row, block.start + i, v);
                    }
                }
            }
        }
        action.push(m);
    }
    let rep = FiniteDimRep { weight: weight.clone(), t: one, dim, basis, action, quotient: Arc::new(quotient) };
    if t.is_one() {
        Ok(rep)
    } else {
        rep.rescaled_to(t)
    }
}
