use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::GaussRational;

/// Default bound on the degree of any intermediate product.
pub const DEFAULT_DEGREE_CAP: usize = 12;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);

/// Sets the degree cap of every context created afterwards.
pub fn set_default_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub fn default_degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// The generator `E[row, col]` of `U(gl(n)_t)`, with 1-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GeneratorIndex {
    row: usize,
    col: usize,
}

/// Shorthand for `GeneratorIndex::new(row, col)`.
pub fn e(row: usize, col: usize) -> GeneratorIndex {
    GeneratorIndex::new(row, col)
}

impl GeneratorIndex {
    /// Panics if either index is zero.
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "generator indices are 1-based");
        GeneratorIndex { row, col }
    }

    pub fn row(self) -> usize {
        self.row
    }

    pub fn col(self) -> usize {
        self.col
    }

    pub fn transpose(self) -> Self {
        GeneratorIndex { row: self.col, col: self.row }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    pub fn is_lower(self) -> bool {
        self.row > self.col
    }

    pub fn is_upper(self) -> bool {
        self.row < self.col
    }

    pub(crate) fn id(self, n: usize) -> u16 {
        ((self.row - 1) * n + (self.col - 1)) as u16
    }

    pub(crate) fn from_id(id: u16, n: usize) -> Self {
        let id = id as usize;
        GeneratorIndex { row: id / n + 1, col: id % n + 1 }
    }

    /// Weight `ε_row − ε_col` as integer coordinates.
    pub fn weight(self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        w[self.row - 1] += 1;
        w[self.col - 1] -= 1;
        w
    }

    /// All `n²` generators in row-major order.
    pub fn all(n: usize) -> impl Iterator<Item = GeneratorIndex> {
        (1..=n).flat_map(move |i| (1..=n).map(move |j| GeneratorIndex { row: i, col: j }))
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.row, self.col)
    }
}

/// The commutator `[E[i,j], E[m,l]] = t(δ(m,j) E[i,l] − δ(i,l) E[m,j])`.
pub fn bracket(
    t: &GaussRational,
    g: GeneratorIndex,
    h: GeneratorIndex,
) -> SmallVec<[(GeneratorIndex, GaussRational); 2]> {
    let mut out: SmallVec<[(GeneratorIndex, GaussRational); 2]> = SmallVec::new();
    if t.is_zero() {
        return out;
    }
    if h.row == g.col {
        out.push((GeneratorIndex { row: g.row, col: h.col }, t.clone()));
    }
    if g.row == h.col {
        let target = GeneratorIndex { row: h.row, col: g.col };
        match out.iter().position(|(x, _)| *x == target) {
            Some(pos) => {
                out[pos].1 -= t;
                if out[pos].1.is_zero() {
                    out.remove(pos);
                }
            }
            None => out.push((target, -t)),
        }
    }
    out
}

/// An algebra `U(gl(n)_t)` at a concrete deformation value `t`, together with the
/// total order on generators that defines its PBW normal form.
#[derive(Clone)]
pub struct AlgebraContext {
    n: usize,
    t: GaussRational,
    rank_of: Vec<u16>,
    gen_of: Vec<u16>,
    degree_cap: usize,
}

impl AlgebraContext {
    /// The algebra with the triangular order (lower, then diagonal, then upper).
    pub fn new(n: usize, t: GaussRational) -> Result<Arc<Self>> {
        Self::with_order(n, t, &Self::triangular_order(n))
    }

    pub fn with_order(n: usize, t: GaussRational, order: &[GeneratorIndex]) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParams("matrix size n must be at least 1".into()));
        }
        if n > 255 {
            return Err(Error::InvalidParams("matrix size n is too large".into()));
        }
        if order.len() != n * n {
            return Err(Error::InvalidParams(format!("order lists {} generators, expected {}", order.len(), n * n)));
        }
        let mut rank_of = vec![u16::MAX; n * n];
        let mut gen_of = Vec::with_capacity(n * n);
        for (rank, g) in order.iter().enumerate() {
            if g.row > n || g.col > n {
                return Err(Error::InvalidParams(format!("{g} out of range for n={n}")));
            }
            let id = g.id(n) as usize;
            if rank_of[id] != u16::MAX {
                return Err(Error::InvalidParams(format!("{g} repeated in order")));
            }
            rank_of[id] = rank as u16;
            gen_of.push(id as u16);
        }
        Ok(Arc::new(AlgebraContext { n, t, rank_of, gen_of, degree_cap: default_degree_cap() }))
    }

    /// Strictly-lower generators first, then the diagonal, then strictly-upper;
    /// lexicographic within each class.
    pub fn triangular_order(n: usize) -> Vec<GeneratorIndex> {
        let mut all: Vec<GeneratorIndex> = GeneratorIndex::all(n).collect();
        all.sort_by_key(|g| {
            let class = if g.is_lower() {
                0
            } else if g.is_diagonal() {
                1
            } else {
                2
            };
            (class, g.row, g.col)
        });
        all
    }

    /// A copy of this context with a different degree cap.
    pub fn with_degree_cap(&self, cap: usize) -> Arc<Self> {
        let mut copy = self.clone();
        copy.degree_cap = cap;
        Arc::new(copy)
    }

    /// A copy with the same order and cap but a different deformation value.
    pub fn with_t(&self, t: GaussRational) -> Arc<Self> {
        let mut copy = self.clone();
        copy.t = t;
        Arc::new(copy)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> &GaussRational {
        &self.t
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn order(&self) -> Vec<GeneratorIndex> {
        self.gen_of.iter().map(|&id| GeneratorIndex::from_id(id, self.n)).collect()
    }

    /// Same `n`, `t` and generator order: elements of the two contexts are interchangeable.
    pub fn is_compatible(&self, other: &AlgebraContext) -> bool {
        std::ptr::eq(self, other) || (self.n == other.n && self.t == other.t && self.gen_of == other.gen_of)
    }

    /// Same `n` and `t`, possibly with different orders.
    pub fn same_algebra(&self, other: &AlgebraContext) -> bool {
        self.n == other.n && self.t == other.t
    }

    pub(crate) fn rank(&self, g: GeneratorIndex) -> u16 {
        self.rank_of[g.id(self.n) as usize]
    }

    pub(crate) fn generator(&self, rank: u16) -> GeneratorIndex {
        GeneratorIndex::from_id(self.gen_of[rank as usize], self.n)
    }

    pub(crate) fn check_degree(&self, requested: usize) -> Result<()> {
        if requested > self.degree_cap {
            Err(Error::DegreeCap { cap: self.degree_cap, requested })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("n", &self.n)
            .field("t", &self.t)
            .field("degree_cap", &self.degree_cap)
            .finish()
    }
}
