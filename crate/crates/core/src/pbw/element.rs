use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use super::context::{AlgebraContext, GeneratorIndex};
use super::rewrite::{accumulate, Rewriter, Terms, Word};
use crate::error::{Error, Result};
use crate::scalar::GaussRational;

/// A PBW monomial: generator ranks sorted non-decreasingly under the context order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PbwMonomial(pub(crate) Word);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Word::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self, ctx: &AlgebraContext) -> Vec<GeneratorIndex> {
        self.0.iter().map(|&r| ctx.generator(r)).collect()
    }

    /// Weight `Σ (ε_i − ε_j)` over the factors.
    pub fn weight(&self, ctx: &AlgebraContext) -> Vec<i64> {
        let mut w = vec![0; ctx.n()];
        for g in self.factors(ctx) {
            w[g.row() - 1] += 1;
            w[g.col() - 1] -= 1;
        }
        w
    }
}

/// An element of `U(gl(n)_t)` in PBW normal form.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: Arc<AlgebraContext>,
    terms: BTreeMap<PbwMonomial, GaussRational>,
}

impl AlgebraElement {
    pub fn zero(ctx: &Arc<AlgebraContext>) -> Self {
        AlgebraElement { ctx: Arc::clone(ctx), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<AlgebraContext>) -> Self {
        Self::scalar(ctx, GaussRational::one())
    }

    pub fn scalar(ctx: &Arc<AlgebraContext>, c: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(PbwMonomial::one(), c);
        }
        AlgebraElement { ctx: Arc::clone(ctx), terms }
    }

    pub fn generator(ctx: &Arc<AlgebraContext>, g: GeneratorIndex) -> Self {
        assert!(g.row() <= ctx.n() && g.col() <= ctx.n(), "{g} out of range for n={}", ctx.n());
        let mut terms = BTreeMap::new();
        let mut w = Word::new();
        w.push(ctx.rank(g));
        terms.insert(PbwMonomial(w), GaussRational::one());
        AlgebraElement { ctx: Arc::clone(ctx), terms }
    }

    /// Normal form of the ordered product of `factors`.
    pub fn word(ctx: &Arc<AlgebraContext>, factors: &[GeneratorIndex]) -> Result<Self> {
        for g in factors {
            if g.row() > ctx.n() || g.col() > ctx.n() {
                return Err(Error::OutOfRange(format!("{g} for n={}", ctx.n())));
            }
        }
        ctx.check_degree(factors.len())?;
        let ranks: Word = factors.iter().map(|&g| ctx.rank(g)).collect();
        let terms = Rewriter::new(ctx).normalize_word(&ranks);
        Ok(Self::from_terms(ctx, terms))
    }

    pub(crate) fn from_terms(ctx: &Arc<AlgebraContext>, terms: Terms) -> Self {
        let mut out = Self::zero(ctx);
        for (w, c) in terms {
            out.add_term(PbwMonomial(w), c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (&Word, &GaussRational)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest monomial degree; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of the normal monomial with the given factors, which may be listed in any order.
    pub fn coefficient(&self, factors: &[GeneratorIndex]) -> GaussRational {
        let mut w: Word = factors.iter().map(|&g| self.ctx.rank(g)).collect();
        w.sort_unstable();
        self.terms.get(&PbwMonomial(w)).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn constant_term(&self) -> GaussRational {
        self.coefficient(&[])
    }

    fn check_ctx(&self, other: &AlgebraElement) -> Result<()> {
        if self.ctx.is_compatible(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &AlgebraElement) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        AlgebraElement {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        AlgebraElement {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.conj())).collect(),
        }
    }

    /// PBW normal form of `self · other`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<Self> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        self.ctx.check_degree(self.degree() + other.degree())?;
        let mut rw = Rewriter::new(&self.ctx);
        Ok(self.multiply_with(&mut rw, other))
    }

    pub(crate) fn multiply_with(&self, rw: &mut Rewriter<'_>, other: &AlgebraElement) -> Self {
        let right: Terms = other.raw_terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        for (w, c) in self.raw_terms() {
            for (w2, c2) in rw.mul_word_terms(w, &right) {
                accumulate(&mut acc, &w2, c * &c2);
            }
        }
        Self::from_terms(&self.ctx, acc.into_iter().collect())
    }

    /// Normal form of `E[g] · self`.
    pub fn left_mul_generator(&self, g: GeneratorIndex) -> Result<Self> {
        self.ctx.check_degree(self.degree() + 1)?;
        let mut rw = Rewriter::new(&self.ctx);
        Ok(self.left_mul_generator_with(&mut rw, g))
    }

    pub(crate) fn left_mul_generator_with(&self, rw: &mut Rewriter<'_>, g: GeneratorIndex) -> Self {
        let terms: Terms = self.raw_terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        Self::from_terms(&self.ctx, rw.left_mul_terms(rw.ctx().rank(g), &terms))
    }

    /// Re-expresses this element in the normal form of another order on the same algebra.
    pub fn to_context(&self, target: &Arc<AlgebraContext>) -> Result<Self> {
        if !self.ctx.same_algebra(target) {
            return Err(Error::ContextMismatch);
        }
        if self.ctx.is_compatible(target) {
            return Ok(AlgebraElement { ctx: Arc::clone(target), terms: self.terms.clone() });
        }
        let mut rw = Rewriter::new(target);
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        for (m, c) in &self.terms {
            let ranks: Word = m.factors(&self.ctx).iter().map(|&g| target.rank(g)).collect();
            for (w, c2) in rw.normalize_word(&ranks) {
                accumulate(&mut acc, &w, c * &c2);
            }
        }
        Ok(Self::from_terms(target, acc.into_iter().collect()))
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.is_compatible(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("context mismatch in addition")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("context mismatch in subtraction")
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-GaussRational::one())
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let factors = m.factors(&self.ctx);
            if factors.is_empty() {
                write!(f, "({c})")?;
            } else {
                let body: Vec<String> = factors.iter().map(ToString::to_string).collect();
                if c.is_one() {
                    write!(f, "{}", body.join("*"))?;
                } else {
                    write!(f, "({c})*{}", body.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
