use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussRational;

/// Block sizes `(m_1, …, m_k)` of a parabolic subalgebra, all positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BlockShape(Vec<usize>);

impl BlockShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParams("block shape must have at least one block".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParams("block sizes must be positive".into()));
        }
        Ok(BlockShape(parts))
    }

    /// `(1, …, 1)`.
    pub fn full_flag(n: usize) -> Self {
        BlockShape(vec![1; n])
    }

    /// All compositions of `n` into positive parts, in lexicographic order.
    pub fn all_shapes(n: usize) -> Vec<BlockShape> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<BlockShape>) {
            if rest == 0 {
                out.push(BlockShape(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// 1-based block containing the 1-based row index `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut end = 0;
        for (b, &m) in self.0.iter().enumerate() {
            end += m;
            if i <= end {
                return b + 1;
            }
        }
        panic!("row {i} outside a shape of size {}", self.n());
    }

    /// Partial sums `Σ_{α<j} m_α` for `j = 1..k`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|&m| {
                let s = acc;
                acc += m;
                s
            })
            .collect()
    }

    /// Permutations `τ` (0-based, `τ[i]` is the source index of slot `i`) with `m[τ[i]] = m[i]`.
    pub fn stabilizer(&self) -> Vec<Vec<usize>> {
        permutations(self.k()).into_iter().filter(|tau| tau.iter().enumerate().all(|(i, &j)| self.0[j] == self.0[i])).collect()
    }

    /// The shape with blocks rearranged as `m'[i] = m[τ[i]]`.
    pub fn permuted(&self, tau: &[usize]) -> BlockShape {
        BlockShape(apply_perm(tau, &self.0))
    }
}

/// All permutations of `0..k` in lexicographic order; the identity comes first.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

/// `out[i] = v[τ[i]]`.
pub fn apply_perm<T: Clone>(tau: &[usize], v: &[T]) -> Vec<T> {
    tau.iter().map(|&j| v[j].clone()).collect()
}

impl TryFrom<Vec<usize>> for BlockShape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        BlockShape::new(v)
    }
}

impl From<BlockShape> for Vec<usize> {
    fn from(s: BlockShape) -> Self {
        s.0
    }
}

impl FromStr for BlockShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("block size `{}`", p.trim()))))
            .collect::<Result<Vec<_>>>()?;
        BlockShape::new(parts)
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// A one-dimensional character of the parabolic: one value per Levi block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicCharacter {
    shape: BlockShape,
    lambda: Vec<GaussRational>,
}

impl ParabolicCharacter {
    pub fn new(shape: BlockShape, lambda: Vec<GaussRational>) -> Result<Self> {
        if lambda.len() != shape.k() {
            return Err(Error::InvalidParams(format!(
                "shape {shape} has {} blocks but {} character values were given",
                shape.k(),
                lambda.len()
            )));
        }
        Ok(ParabolicCharacter { shape, lambda })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn lambda(&self) -> &[GaussRational] {
        &self.lambda
    }

    /// `λ̃_i = λ_{block(i)}` in `n` coordinates.
    pub fn embedded(&self) -> Vec<GaussRational> {
        self.shape.parts().iter().zip(&self.lambda).flat_map(|(&m, l)| std::iter::repeat_n(l.clone(), m)).collect()
    }

    /// Pairwise distinct components.
    pub fn is_regular(&self) -> bool {
        pairwise_distinct(&self.lambda)
    }
}

pub fn pairwise_distinct(values: &[GaussRational]) -> bool {
    values.iter().enumerate().all(|(i, a)| values[i + 1..].iter().all(|b| a != b))
}

/// A weight in `ε` coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight(pub Vec<GaussRational>);

impl Weight {
    /// `base + offset` where `offset` has integer coordinates.
    pub fn shifted(base: &[GaussRational], offset: &[i64]) -> Self {
        Weight(base.iter().zip(offset).map(|(b, &o)| b + &GaussRational::from_int(o)).collect())
    }
}
