//! Dense exact linear algebra over Gaussian rationals.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussRational;

pub type DenseMatrix = Vec<Vec<GaussRational>>;

/// Reduced row echelon form of an augmented or plain matrix.
struct Echelon {
    rows: DenseMatrix,
    /// `pivots[r]` is the pivot column of row `r`.
    pivots: Vec<usize>,
}

fn reduce(mut rows: DenseMatrix, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("non-zero pivot");
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

pub fn rank(mat: &[Vec<GaussRational>]) -> usize {
    let cols = mat.first().map_or(0, Vec::len);
    reduce(mat.to_vec(), cols).pivots.len()
}

/// Indices of a maximal linearly independent set of rows, chosen greedily in order.
pub fn independent_rows(mat: &[Vec<GaussRational>]) -> Vec<usize> {
    let cols = mat.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<GaussRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in mat.iter().enumerate() {
        let mut v = row.clone();
        for (b, &pc) in basis.iter().zip(&pivots) {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &(&f * y);
                }
            }
        }
        if let Some(pc) = (0..cols).find(|&c| !v[c].is_zero()) {
            let inv = v[pc].inv().expect("non-zero pivot");
            for x in v.iter_mut() {
                *x *= &inv;
            }
            basis.push(v);
            pivots.push(pc);
            chosen.push(idx);
        }
    }
    chosen
}

/// Solves `a x = b`, requiring consistency; free variables are set to zero.
/// Returns the solution together with the rank of `a`.
pub fn solve_any(a: &[Vec<GaussRational>], b: &[GaussRational]) -> Result<(Vec<GaussRational>, usize)> {
    let unknowns = a.first().map_or(0, Vec::len);
    if a.len() != b.len() {
        return Err(Error::InvalidParams("row count mismatch in linear solve".into()));
    }
    let augmented: DenseMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = reduce(augmented, unknowns + 1);
    if ech.pivots.last() == Some(&unknowns) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![GaussRational::zero(); unknowns];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        x[pc] = row[unknowns].clone();
    }
    Ok((x, ech.pivots.len()))
}

/// Solves `a x = b`, requiring a unique solution.
pub fn solve_unique(a: &[Vec<GaussRational>], b: &[GaussRational]) -> Result<Vec<GaussRational>> {
    let unknowns = a.first().map_or(0, Vec::len);
    let (x, rank) = solve_any(a, b)?;
    if rank < unknowns {
        return Err(Error::NonUniqueSolution { rank, unknowns });
    }
    Ok(x)
}

pub fn determinant(mat: &[Vec<GaussRational>]) -> GaussRational {
    let n = mat.len();
    let mut rows = mat.to_vec();
    let mut det = GaussRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return GaussRational::zero();
        };
        if p != c {
            rows.swap(p, c);
            det = -det;
        }
        det *= &rows[c][c];
        let inv = rows[c][c].inv().expect("non-zero pivot");
        for i in c + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] * &inv;
            let (top, bottom) = rows.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[c]).skip(c) {
                *x -= &(&f * y);
            }
        }
    }
    det
}
