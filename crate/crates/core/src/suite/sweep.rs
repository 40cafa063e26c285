use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Result;
use crate::orbits::{lambda_to_mu, lambda_to_nu, OrbitParams, PowerTable};
use crate::pbw::AlgebraContext;
use crate::sampling;
use crate::scalar::GaussRational;
use crate::verma::{BlockShape, ParabolicCharacter};

/// Deformation values of the sweep, as `(numerator, denominator)`.
pub const SWEEP_T: [(i64, i64); 3] = [(1, 1), (-1, 1), (2, 3)];

pub(crate) fn sweep_t() -> Vec<GaussRational> {
    SWEEP_T.iter().map(|&(a, b)| GaussRational::ratio(a, b)).collect()
}

/// A sampled character, regular for every sweep `t` in both variants.
#[derive(Clone, Debug)]
pub(crate) struct SweepSample {
    pub index: usize,
    pub character: ParabolicCharacter,
}

pub(crate) fn sweep_samples(seed: u64, ns: &[usize], per_shape: usize) -> Vec<SweepSample> {
    let ts = sweep_t();
    let mut rng = sampling::rng(seed);
    let mut out = Vec::new();
    for &n in ns {
        for shape in BlockShape::all_shapes(n) {
            for index in 0..per_shape {
                let lambda = sampling::distinct_with(&mut rng, shape.k(), sampling::gaussian, |l| {
                    let c = ParabolicCharacter::new(shape.clone(), l.to_vec()).expect("lengths match");
                    ts.iter().all(|t| lambda_to_mu(&c, t).is_regular() && lambda_to_nu(&c, t).is_regular())
                });
                let character = ParabolicCharacter::new(shape.clone(), lambda).expect("lengths match");
                out.push(SweepSample { index, character });
            }
        }
    }
    out
}

/// One cell of the annihilator sweep, keyed by `(n, shape, sample, t, variant)`.
#[derive(Clone, Debug)]
pub struct SweepCell {
    pub sample: usize,
    pub character: ParabolicCharacter,
    pub params: OrbitParams,
}

impl SweepCell {
    pub fn key(&self) -> String {
        let p = &self.params;
        format!("n={} m=({}) sample={} t={} {}", p.n(), p.shape, self.sample, p.t, p.variant)
    }
}

/// `n ∈ {2, 3, 4}`, every shape, three characters, every sweep `t`, both variants.
pub fn sweep_cells(seed: u64) -> Vec<SweepCell> {
    let ts = sweep_t();
    let mut cells = Vec::new();
    for s in sweep_samples(seed, &[2, 3, 4], 3) {
        for t in &ts {
            for params in [lambda_to_mu(&s.character, t), lambda_to_nu(&s.character, t)] {
                cells.push(SweepCell { sample: s.index, character: s.character.clone(), params });
            }
        }
    }
    cells
}

pub(crate) type TableKey = (usize, GaussRational);

/// Power tables up to `max(n)` for every `(n, t)` occurring in `cells`, built in parallel.
pub(crate) fn power_tables(
    cells: &[SweepCell],
    max: impl Fn(usize) -> usize + Sync,
) -> Result<BTreeMap<String, Arc<PowerTable>>> {
    let mut keys: Vec<TableKey> = cells.iter().map(|c| (c.params.n(), c.params.t.clone())).collect();
    keys.sort_by_key(table_name);
    keys.dedup();
    let built: Vec<(String, Arc<PowerTable>)> = keys
        .par_iter()
        .map(|(n, t)| {
            let ctx = AlgebraContext::new(*n, t.clone())?;
            Ok((table_name(&(*n, t.clone())), Arc::new(PowerTable::new(&ctx, max(*n))?)))
        })
        .collect::<Result<_>>()?;
    Ok(built.into_iter().collect())
}

pub(crate) fn table_name(key: &TableKey) -> String {
    format!("{}:{}", key.0, key.1)
}
