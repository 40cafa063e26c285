//! Seeded random scalars for sweeps.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::GaussRational;
use crate::verma::pairwise_distinct;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/b` with `|a| ≤ 9`, `1 ≤ b ≤ 5`.
pub fn rational<R: Rng>(rng: &mut R) -> GaussRational {
    GaussRational::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// `(a + b·i)/d` with small integer parts.
pub fn gaussian<R: Rng>(rng: &mut R) -> GaussRational {
    let d = rng.gen_range(1..=4);
    &GaussRational::ratio(rng.gen_range(-9..=9), d) + &(&GaussRational::i() * &GaussRational::ratio(rng.gen_range(-4..=4), d))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> GaussRational {
    loop {
        let x = rational(rng);
        if !num::Zero::is_zero(&x) {
            return x;
        }
    }
}

/// `k` values drawn by `draw` until they are pairwise distinct and `accept` holds.
pub fn distinct_with<R: Rng>(
    rng: &mut R,
    k: usize,
    mut draw: impl FnMut(&mut R) -> GaussRational,
    mut accept: impl FnMut(&[GaussRational]) -> bool,
) -> Vec<GaussRational> {
    loop {
        let v: Vec<GaussRational> = (0..k).map(|_| draw(rng)).collect();
        if pairwise_distinct(&v) && accept(&v) {
            return v;
        }
    }
}
