use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::sampling;
use crate::scalar::GaussRational;
use crate::theta::{
    c_tilde, connes_classical, connes_limit_by_interpolation, connes_q, nu_omega, q_int, theta_classical, theta_q,
    theta_tilde, theta_tilde_rec,
};
use crate::verma::{apply_perm, BlockShape};

use super::Check;

const SAMPLES: usize = 24;
const MAX_ELL: usize = 6;

/// `ν_j Π_{i≠j} (1 + ω ν_i μ_i / (μ_j − μ_i))`.
fn c_tilde_product(j: usize, nu: &[GaussRational], mu: &[GaussRational], w: &GaussRational) -> GaussRational {
    let mut acc = nu[j].clone();
    for i in (0..nu.len()).filter(|&i| i != j) {
        let ratio = (&(w * &nu[i]) * &mu[i]).checked_div(&(&mu[j] - &mu[i])).expect("distinct");
        acc *= &(&GaussRational::one() + &ratio);
    }
    acc
}

/// `(1 − (1 − ω)^m) / ω` evaluated directly.
fn q_int_direct(m: usize, w: &GaussRational) -> GaussRational {
    (&GaussRational::one() - &(&GaussRational::one() - w).pow(m as u32)).checked_div(w).expect("ω ≠ 0")
}

/// First failing sample of one identity, or a pass.
struct Tally {
    label: String,
    witness: Option<String>,
}

impl Tally {
    fn new(label: String) -> Self {
        Tally { label, witness: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> Check {
        Check { passed: self.witness.is_none(), label: self.label, witness: self.witness }
    }
}

pub(super) fn run(seed: u64) -> Result<Vec<Check>> {
    let mut rng = sampling::rng(seed.wrapping_add(3));
    let mut checks = Vec::new();
    for k in 1..=4usize {
        let names = [
            "thetas",
            "recurrence",
            "product form",
            "closure",
            "omega-zero connes",
            "omega-zero theta",
            "shifted limit",
            "q-integer",
            "homogeneity",
            "pair permutation",
            "connes sum",
            "connes moments",
        ];
        let mut t: Vec<Tally> = names.iter().map(|s| Tally::new(format!("{s} k={k} samples={SAMPLES}"))).collect();
        for sample in 0..SAMPLES {
            let nu: Vec<GaussRational> = (0..k).map(|_| sampling::rational(&mut rng)).collect();
            let mu = sampling::distinct_with(&mut rng, k, sampling::rational, |_| true);
            let w = sampling::nonzero_rational(&mut rng);
            let parts: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
            let m = BlockShape::new(parts)?;
            let tt = sampling::rational(&mut rng);
            let c = sampling::nonzero_rational(&mut rng);
            let mut tau: Vec<usize> = (0..k).collect();
            tau.shuffle(&mut rng);
            let at = |ell: usize| format!("sample={sample} ell={ell}");

            for ell in 0..=MAX_ELL {
                let mut rhs = GaussRational::zero();
                for j in 0..k {
                    rhs += &(&mu[j].pow(ell as u32) * &c_tilde(j, &nu, &mu, &w)?);
                }
                let lhs = theta_tilde(ell, &nu, &mu, &w)?;
                t[0].check(lhs == rhs, || format!("{} {lhs} vs {rhs}", at(ell)));
            }
            for ell in 1..=MAX_ELL {
                let (a, b) = (theta_tilde_rec(ell, &nu, &mu, &w)?, theta_tilde(ell, &nu, &mu, &w)?);
                t[1].check(a == b, || format!("{} {a} vs {b}", at(ell)));
            }
            let mut total = GaussRational::zero();
            for j in 0..k {
                let (a, b) = (c_tilde(j, &nu, &mu, &w)?, c_tilde_product(j, &nu, &mu, &w));
                t[2].check(a == b, || format!("sample={sample} j={j} {a} vs {b}"));
                total += &a;
            }
            let closed = nu_omega(&nu, &w);
            t[3].check(total == closed, || format!("sample={sample} {total} vs {closed}"));

            let zero = GaussRational::zero();
            let classical: Vec<GaussRational> = (0..k).map(|j| connes_classical(j, &m, &mu, &tt)).collect::<Result<_>>()?;
            for (j, cj) in classical.iter().enumerate() {
                let a = connes_q(j, &m, &mu, &zero, &tt)?;
                t[4].check(&a == cj, || format!("sample={sample} j={j} {a} vs {cj}"));
            }
            for ell in 0..=MAX_ELL {
                let (a, b) = (theta_q(ell, &m, &mu, &zero, &tt)?, theta_classical(ell, &m, &mu, &tt)?);
                t[5].check(a == b, || format!("{} {a} vs {b}", at(ell)));
            }
            let nodes: Vec<GaussRational> = (1..=3 * k as i64 + 1).map(|i| GaussRational::ratio(1, i + 1)).collect();
            for (j, cj) in classical.iter().enumerate() {
                let a = connes_limit_by_interpolation(j, &m, &mu, &tt, &nodes)?;
                t[6].check(&a == cj, || format!("sample={sample} j={j} {a} vs {cj}"));
            }
            for &mi in m.parts() {
                let poly = q_int(mi)?;
                let (at_zero, at_w) = (poly.eval(&zero), poly.eval(&w));
                t[7].check(at_zero == GaussRational::from(mi) && at_w == q_int_direct(mi, &w), || {
                    format!("m={mi} value at 0 {at_zero}, at {w} {at_w}")
                });
            }
            let scaled: Vec<GaussRational> = mu.iter().map(|x| x * &c).collect();
            let (pm, pmu) = (m.permuted(&tau), apply_perm(&tau, &mu));
            for ell in 1..=MAX_ELL {
                let base = theta_classical(ell, &m, &mu, &tt)?;
                let a = theta_classical(ell, &m, &scaled, &(&tt * &c))?;
                let expected = &c.pow(ell as u32) * &base;
                t[8].check(a == expected, || format!("{} c={c} {a} vs {expected}", at(ell)));
                let b = theta_classical(ell, &pm, &pmu, &tt)?;
                t[9].check(b == base, || format!("{} tau={tau:?} {b} vs {base}", at(ell)));
            }
            let sum: GaussRational = classical.iter().sum();
            t[10].check(sum == GaussRational::from(m.n()), || format!("sample={sample} sum {sum}, n={}", m.n()));
            for ell in 0..=MAX_ELL {
                let moment: GaussRational = classical.iter().zip(&mu).map(|(cj, x)| cj * &x.pow(ell as u32)).sum();
                let theta = theta_classical(ell, &m, &mu, &tt)?;
                t[11].check(moment == theta, || format!("{} {moment} vs {theta}", at(ell)));
            }
        }
        checks.extend(t.into_iter().map(Tally::finish));
    }
    Ok(checks)
}
