use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use num::{One, Zero};

use super::shape::ParabolicCharacter;
use crate::error::{Error, Result};
use crate::pbw::rewrite::{accumulate, drain_nonzero, Rewriter, Terms, Word};
use crate::pbw::{bracket, AlgebraContext, AlgebraElement, GeneratorIndex};
use crate::scalar::GaussRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum GenKind {
    FreeLower,
    InBlockLower,
    Diagonal(usize),
    Upper,
}

/// A vector `x·v₀` of a generalized Verma module, `x` a combination of free-lower monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct VermaElement {
    inner: AlgebraElement,
}

impl VermaElement {
    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Coefficient of `v₀`.
    pub fn hwv_coefficient(&self) -> GaussRational {
        self.inner.constant_term()
    }

    /// True when the vector is a (possibly zero) multiple of `v₀`.
    pub fn is_hwv_multiple(&self) -> bool {
        self.inner.terms().all(|(m, _)| m.is_one())
    }

    /// The free-lower element `x` with `self = x·v₀`, in the module's shape-adapted order.
    pub fn as_algebra_element(&self) -> &AlgebraElement {
        &self.inner
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<GeneratorIndex>, &GaussRational)> {
        let ctx = Arc::clone(self.inner.ctx());
        self.inner.terms().map(move |(m, c)| (m.factors(&ctx), c))
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        VermaElement { inner: self.inner.scale(c) }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(VermaElement { inner: self.inner.checked_add(&other.inner)? })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        Ok(VermaElement { inner: self.inner.checked_sub(&other.inner)? })
    }

    /// Integer weight offsets (relative to `λ̃`) of the monomials present.
    pub fn weight_offsets(&self) -> BTreeSet<Vec<i64>> {
        self.inner.terms().map(|(m, _)| m.weight(self.inner.ctx())).collect()
    }
}

impl fmt::Display for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(factors, c)| {
                let body: String = factors.iter().map(|g| format!("{g}*")).collect();
                if c.is_one() {
                    format!("{body}v0")
                } else {
                    format!("({c})*{body}v0")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of checking that elements kill `v₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilation {
    /// Index and image of the first element that does not kill `v₀`.
    pub first_failure: Option<(usize, VermaElement)>,
}

impl Annihilation {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// The generalized Verma module `U(g_t) ⊗_{U(p_t)} C` for a parabolic character.
///
/// Vectors are produced on demand; nothing beyond the inputs is enumerated.
#[derive(Debug)]
pub struct VermaModule {
    ctx: Arc<AlgebraContext>,
    character: ParabolicCharacter,
    lambda_tilde: Vec<GaussRational>,
    kinds: Vec<GenKind>,
}

impl VermaModule {
    pub fn new(character: ParabolicCharacter, t: GaussRational) -> Result<Arc<Self>> {
        let base = AlgebraContext::new(character.shape().n(), t)?;
        Self::over(character, &base)
    }

    /// A module over the algebra of `base`, keeping its deformation value and degree cap.
    pub fn over(character: ParabolicCharacter, base: &AlgebraContext) -> Result<Arc<Self>> {
        let shape = character.shape().clone();
        let n = shape.n();
        if n != base.n() {
            return Err(Error::InvalidParams(format!("shape {shape} has size {n}, algebra has n={}", base.n())));
        }
        let kind_of = |g: GeneratorIndex| {
            if g.is_diagonal() {
                GenKind::Diagonal(g.row() - 1)
            } else if g.is_upper() {
                GenKind::Upper
            } else if shape.block_of(g.row()) > shape.block_of(g.col()) {
                GenKind::FreeLower
            } else {
                GenKind::InBlockLower
            }
        };
        let mut order: Vec<GeneratorIndex> = GeneratorIndex::all(n).collect();
        order.sort_by_key(|&g| {
            let class = match kind_of(g) {
                GenKind::FreeLower => 0,
                GenKind::InBlockLower => 1,
                GenKind::Diagonal(_) => 2,
                GenKind::Upper => 3,
            };
            (class, g.row(), g.col())
        });
        let ctx = AlgebraContext::with_order(n, base.t().clone(), &order)?.with_degree_cap(base.degree_cap());
        let kinds = order.iter().map(|&g| kind_of(g)).collect();
        let lambda_tilde = character.embedded();
        Ok(Arc::new(VermaModule { ctx, character, lambda_tilde, kinds }))
    }

    /// The algebra context with the shape-adapted order.
    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn character(&self) -> &ParabolicCharacter {
        &self.character
    }

    pub fn lambda_tilde(&self) -> &[GaussRational] {
        &self.lambda_tilde
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn t(&self) -> &GaussRational {
        self.ctx.t()
    }

    pub fn hwv(&self) -> VermaElement {
        VermaElement { inner: AlgebraElement::one(&self.ctx) }
    }

    pub fn zero_vector(&self) -> VermaElement {
        VermaElement { inner: AlgebraElement::zero(&self.ctx) }
    }

    /// Generators `E[i,j]` with `block(i) > block(j)`, in the shape-adapted order.
    pub fn free_lower_generators(&self) -> Vec<GeneratorIndex> {
        self.ranks_of(GenKind::FreeLower).map(|r| self.ctx.generator(r)).collect()
    }

    fn ranks_of(&self, kind: GenKind) -> impl Iterator<Item = u16> + '_ {
        self.kinds.iter().enumerate().filter(move |(_, &k)| k == kind).map(|(r, _)| r as u16)
    }

    fn wrap(&self, terms: Terms) -> VermaElement {
        VermaElement { inner: AlgebraElement::from_terms(&self.ctx, terms) }
    }

    fn check_algebra(&self, u: &AlgebraElement) -> Result<()> {
        if u.ctx().same_algebra(&self.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn check_vector(&self, v: &VermaElement) -> Result<()> {
        if v.inner.ctx().is_compatible(&self.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `x·v₀` for a product of free-lower generators listed in any order.
    pub fn vector(&self, factors: &[GeneratorIndex]) -> Result<VermaElement> {
        for g in factors {
            if g.row() > self.n() || g.col() > self.n() || self.kinds[self.ctx.rank(*g) as usize] != GenKind::FreeLower {
                return Err(Error::InvalidParams(format!("{g} is not a free-lower generator")));
            }
        }
        let x = AlgebraElement::word(&self.ctx, factors)?;
        Ok(VermaElement { inner: x })
    }

    /// All vectors `y·v₀` for sorted free-lower monomials `y` of the given degree.
    pub fn basis_of_degree(&self, degree: usize) -> Vec<VermaElement> {
        let free: Vec<u16> = self.ranks_of(GenKind::FreeLower).collect();
        let mut out = Vec::new();
        let mut word = Word::new();
        fn rec(free: &[u16], start: usize, left: usize, word: &mut Word, out: &mut Vec<Word>) {
            if left == 0 {
                out.push(word.clone());
                return;
            }
            for idx in start..free.len() {
                word.push(free[idx]);
                rec(free, idx, left - 1, word, out);
                word.pop();
            }
        }
        let mut words = Vec::new();
        rec(&free, 0, degree, &mut word, &mut words);
        for w in words {
            out.push(self.wrap(vec![(w, GaussRational::one())]));
        }
        out
    }

    /// All vectors `y·v₀`, `y` a sorted free-lower monomial whose weight is `λ̃ + offset`.
    pub fn basis_of_offset(&self, offset: &[i64]) -> Vec<VermaElement> {
        if offset.len() != self.n() || offset.iter().sum::<i64>() != 0 {
            return Vec::new();
        }
        // Simple-root coordinates: offset = −Σ c_i α_i.
        let mut depth: Vec<i64> = Vec::with_capacity(self.n() - 1);
        let mut partial = 0;
        for &o in &offset[..self.n() - 1] {
            partial += o;
            depth.push(-partial);
        }
        if depth.iter().any(|&c| c < 0) {
            return Vec::new();
        }
        let free: Vec<(u16, GeneratorIndex)> =
            self.ranks_of(GenKind::FreeLower).map(|r| (r, self.ctx.generator(r))).collect();
        fn rec(free: &[(u16, GeneratorIndex)], start: usize, depth: &mut [i64], word: &mut Word, out: &mut Vec<Word>) {
            if depth.iter().all(|&x| x == 0) {
                out.push(word.clone());
                return;
            }
            for idx in start..free.len() {
                // E[i,j] with i > j has weight −(α_j + … + α_{i−1}).
                let span = free[idx].1.col() - 1..free[idx].1.row() - 1;
                if depth[span.clone()].contains(&0) {
                    continue;
                }
                depth[span.clone()].iter_mut().for_each(|x| *x -= 1);
                word.push(free[idx].0);
                rec(free, idx, depth, word, out);
                word.pop();
                depth[span].iter_mut().for_each(|x| *x += 1);
            }
        }
        let mut words = Vec::new();
        rec(&free, 0, &mut depth, &mut Word::new(), &mut words);
        words.into_iter().map(|w| self.wrap(vec![(w, GaussRational::one())])).collect()
    }

    /// `u·v₀`, evaluated by acting with the factors of each monomial from right to left.
    pub fn act_on_hwv(&self, u: &AlgebraElement) -> Result<VermaElement> {
        self.act(u, &self.hwv())
    }

    /// `u·v`.
    pub fn act(&self, u: &AlgebraElement, v: &VermaElement) -> Result<VermaElement> {
        self.check_algebra(u)?;
        self.check_vector(v)?;
        if u.is_zero() || v.is_zero() {
            return Ok(self.zero_vector());
        }
        self.ctx.check_degree(u.degree() + v.inner.degree())?;
        let start: Terms = v.inner.raw_terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut action = Action::new(self);
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        for (m, c) in u.terms() {
            let ranks: Vec<u16> = m.factors(u.ctx()).iter().map(|&g| self.ctx.rank(g)).collect();
            for (w, c2) in action.apply_word(&ranks, &start) {
                accumulate(&mut acc, &w, c * &c2);
            }
        }
        Ok(self.wrap(drain_nonzero(acc)))
    }

    /// `u·v₀` computed by re-normalizing `u` in the shape-adapted order and evaluating each
    /// normal monomial directly.
    pub fn act_on_hwv_reordered(&self, u: &AlgebraElement) -> Result<VermaElement> {
        self.check_algebra(u)?;
        let local = u.to_context(&self.ctx)?;
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        'terms: for (w, c) in local.raw_terms() {
            let mut coeff = c.clone();
            let mut free = Word::new();
            for &r in w.iter() {
                match self.kinds[r as usize] {
                    GenKind::FreeLower => free.push(r),
                    GenKind::Diagonal(i) => coeff *= &self.lambda_tilde[i],
                    GenKind::InBlockLower | GenKind::Upper => continue 'terms,
                }
            }
            accumulate(&mut acc, &free, coeff);
        }
        Ok(self.wrap(drain_nonzero(acc)))
    }

    /// Checks `g·v₀ = 0` for every listed element and reports the first failure.
    pub fn annihilates_hwv(&self, gens: &[AlgebraElement]) -> Result<Annihilation> {
        for (idx, g) in gens.iter().enumerate() {
            let image = self.act_on_hwv(g)?;
            if !image.is_zero() {
                return Ok(Annihilation { first_failure: Some((idx, image)) });
            }
        }
        Ok(Annihilation { first_failure: None })
    }

    /// The scalar by which `u` acts on `v₀`, with a centrality spot-check on degree-1 vectors.
    pub fn central_value(&self, u: &AlgebraElement) -> Result<GaussRational> {
        let image = self.act_on_hwv(u)?;
        if !image.is_hwv_multiple() {
            return Err(Error::NotScalarOnHwv(format!("{u} maps v0 to {image}")));
        }
        let c = image.hwv_coefficient();
        for w in self.basis_of_degree(1) {
            let got = self.act(u, &w)?;
            if got != w.scale(&c) {
                return Err(Error::NotCentral(format!("{u} maps {w} to {got}")));
            }
        }
        Ok(c)
    }

    /// The contravariant pairing `⟨x·v₀, y·v₀⟩`: the `v₀` coefficient of `ω(x)·y·v₀`, with `ω`
    /// the transpose anti-automorphism.
    pub fn shapovalov(&self, v: &VermaElement, w: &VermaElement) -> Result<GaussRational> {
        self.check_vector(v)?;
        self.check_vector(w)?;
        if v.is_zero() || w.is_zero() {
            return Ok(GaussRational::zero());
        }
        self.ctx.check_degree(v.inner.degree() + w.inner.degree())?;
        let start: Terms = w.inner.raw_terms().map(|(x, c)| (x.clone(), c.clone())).collect();
        let mut action = Action::new(self);
        let mut total = GaussRational::zero();
        for (x, c) in v.inner.raw_terms() {
            // ω(x1 … xd) = ω(xd) … ω(x1): ω(x1) acts first.
            let transposed: Vec<u16> =
                x.iter().rev().map(|&r| self.ctx.rank(self.ctx.generator(r).transpose())).collect();
            for (y, c2) in action.apply_word(&transposed, &start) {
                if y.is_empty() {
                    total += &(c * &c2);
                }
            }
        }
        Ok(total)
    }
}

/// Per-call evaluation state for the module action.
struct Action<'m> {
    module: &'m VermaModule,
    rw: Rewriter<'m>,
    memo: HashMap<(u16, Word), Rc<Terms>>,
}

impl<'m> Action<'m> {
    fn new(module: &'m VermaModule) -> Self {
        Action { module, rw: Rewriter::new(&module.ctx), memo: HashMap::new() }
    }

    /// `word · Σ c·(y v₀)` with `word` an arbitrary rank sequence.
    fn apply_word(&mut self, word: &[u16], start: &[(Word, GaussRational)]) -> Terms {
        let mut cur: Terms = start.to_vec();
        for &g in word.iter().rev() {
            if cur.is_empty() {
                break;
            }
            let mut acc: HashMap<Word, GaussRational> = HashMap::new();
            for (y, c) in &cur {
                let image = self.apply_gen(g, y);
                for (w, c2) in image.iter() {
                    accumulate(&mut acc, w, c * c2);
                }
            }
            cur = drain_nonzero(acc);
        }
        cur
    }

    /// `E[g] · (y v₀)` for a sorted free-lower word `y`.
    fn apply_gen(&mut self, g: u16, y: &[u16]) -> Rc<Terms> {
        let kind = self.module.kinds[g as usize];
        if kind == GenKind::FreeLower {
            return self.rw.left_mul_gen(g, y);
        }
        if y.is_empty() {
            let terms = match kind {
                GenKind::Diagonal(i) if !self.module.lambda_tilde[i].is_zero() => {
                    vec![(Word::new(), self.module.lambda_tilde[i].clone())]
                }
                _ => Vec::new(),
            };
            return Rc::new(terms);
        }
        let key = (g, Word::from_slice(y));
        if let Some(hit) = self.memo.get(&key) {
            return Rc::clone(hit);
        }
        // x·y1·Y' = y1·(x·Y') + [x, y1]·Y'
        let ctx = &self.module.ctx;
        let head = y[0];
        let rest = &y[1..];
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        let inner = self.apply_gen(g, rest);
        for (w, c) in inner.iter() {
            let moved = self.rw.left_mul_gen(head, w);
            for (w2, c2) in moved.iter() {
                accumulate(&mut acc, w2, c * c2);
            }
        }
        for (h, c) in bracket(ctx.t(), ctx.generator(g), ctx.generator(head)) {
            let image = self.apply_gen(ctx.rank(h), rest);
            for (w2, c2) in image.iter() {
                accumulate(&mut acc, w2, &c * c2);
            }
        }
        let terms = Rc::new(drain_nonzero(acc));
        self.memo.insert(key, Rc::clone(&terms));
        terms
    }
}
