//! Adjacent-transposition normal ordering.
//!
//! A product `g · m` of a generator with a sorted monomial is sorted by moving `g`
//! rightwards: `g h w = h (g w) + [g, h] w`. Every correction has strictly lower
//! degree, so the recursion terminates. Results of `g · m` are memoized for the
//! lifetime of one `Rewriter`; nothing is shared between rewriters.

use std::collections::HashMap;
use std::rc::Rc;

use num::{One, Zero};
use smallvec::SmallVec;

use super::context::{bracket, AlgebraContext};
use crate::scalar::GaussRational;

/// A monomial as a sequence of generator ranks.
pub(crate) type Word = SmallVec<[u16; 8]>;
pub(crate) type Terms = Vec<(Word, GaussRational)>;

pub(crate) fn accumulate(acc: &mut HashMap<Word, GaussRational>, word: &Word, coeff: GaussRational) {
    if coeff.is_zero() {
        return;
    }
    match acc.get_mut(word) {
        Some(c) => *c += &coeff,
        None => {
            acc.insert(word.clone(), coeff);
        }
    }
}

pub(crate) fn drain_nonzero(acc: HashMap<Word, GaussRational>) -> Terms {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) struct Rewriter<'c> {
    ctx: &'c AlgebraContext,
    memo: HashMap<(u16, Word), Rc<Terms>>,
}

impl<'c> Rewriter<'c> {
    pub(crate) fn new(ctx: &'c AlgebraContext) -> Self {
        Rewriter { ctx, memo: HashMap::new() }
    }

    pub(crate) fn ctx(&self) -> &'c AlgebraContext {
        self.ctx
    }

    /// `[gen(a), gen(b)]` expressed through ranks.
    fn bracket_ranks(&self, a: u16, b: u16) -> SmallVec<[(u16, GaussRational); 2]> {
        bracket(self.ctx.t(), self.ctx.generator(a), self.ctx.generator(b))
            .into_iter()
            .map(|(g, c)| (self.ctx.rank(g), c))
            .collect()
    }

    /// Normal form of `gen(g) · m` for a sorted word `m`.
    pub(crate) fn left_mul_gen(&mut self, g: u16, m: &[u16]) -> Rc<Terms> {
        if m.first().is_none_or(|&h| g <= h) {
            let mut w = Word::with_capacity(m.len() + 1);
            w.push(g);
            w.extend_from_slice(m);
            return Rc::new(vec![(w, GaussRational::one())]);
        }
        let key = (g, Word::from_slice(m));
        if let Some(hit) = self.memo.get(&key) {
            return Rc::clone(hit);
        }
        let head = m[0];
        let rest = &m[1..];
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        let moved = self.left_mul_gen(g, rest);
        for (w, c) in moved.iter() {
            let r = self.left_mul_gen(head, w);
            for (w2, c2) in r.iter() {
                accumulate(&mut acc, w2, c * c2);
            }
        }
        for (h, c) in self.bracket_ranks(g, head) {
            let r = self.left_mul_gen(h, rest);
            for (w2, c2) in r.iter() {
                accumulate(&mut acc, w2, &c * c2);
            }
        }
        let terms = Rc::new(drain_nonzero(acc));
        self.memo.insert(key, Rc::clone(&terms));
        terms
    }

    /// Left-multiplies a combination of sorted words by `gen(g)`.
    pub(crate) fn left_mul_terms(&mut self, g: u16, terms: &[(Word, GaussRational)]) -> Terms {
        let mut acc: HashMap<Word, GaussRational> = HashMap::new();
        for (w, c) in terms {
            let r = self.left_mul_gen(g, w);
            for (w2, c2) in r.iter() {
                accumulate(&mut acc, w2, c * c2);
            }
        }
        drain_nonzero(acc)
    }

    /// Normal form of `word · terms` where `word` is an arbitrary (unsorted) rank sequence.
    pub(crate) fn mul_word_terms(&mut self, word: &[u16], terms: &[(Word, GaussRational)]) -> Terms {
        let mut cur: Terms = terms.to_vec();
        for &g in word.iter().rev() {
            if cur.is_empty() {
                break;
            }
            cur = self.left_mul_terms(g, &cur);
        }
        cur
    }

    /// Normal form of an arbitrary word.
    pub(crate) fn normalize_word(&mut self, word: &[u16]) -> Terms {
        self.mul_word_terms(word, &[(Word::new(), GaussRational::one())])
    }
}
