use proptest::prelude::*;

use super::*;
use crate::scalar::q;

fn v(xs: &[&str]) -> Vec<GaussRational> {
    xs.iter().map(|s| q(s)).collect()
}

fn shape(parts: &[usize]) -> BlockShape {
    BlockShape::new(parts.to_vec()).unwrap()
}

#[test]
fn compositions() {
    assert_eq!(Composition::all(3, 2, PartBound::Positive).len(), 2);
    assert_eq!(Composition::all(3, 2, PartBound::NonNegative).len(), 4);
    assert_eq!(Composition::all(1, 2, PartBound::Positive).len(), 0);
    assert_eq!(Composition::all(0, 3, PartBound::NonNegative), vec![Composition(vec![0, 0, 0])]);
    // C(ℓ−1, s−1) and C(ℓ+s−1, s−1)
    assert_eq!(Composition::all(6, 3, PartBound::Positive).len(), 10);
    assert_eq!(Composition::all(6, 3, PartBound::NonNegative).len(), 28);
}

#[test]
fn theta_tilde_examples() {
    let w = q("2/3");
    let (nu, mu) = (v(&["3", "-1/2"]), v(&["5/4", "2"]));
    for ell in 1..5 {
        assert_eq!(theta_tilde(ell, &nu[..1], &mu[..1], &w).unwrap(), &nu[0] * &mu[0].pow(ell as u32));
    }
    let expected2 = &(&(&nu[0] * &mu[0].pow(2)) + &(&nu[1] * &mu[1].pow(2))) + &(&(&(&w * &nu[0]) * &nu[1]) * &(&mu[0] * &mu[1]));
    assert_eq!(theta_tilde(2, &nu, &mu, &w).unwrap(), expected2);
    assert_eq!(theta_tilde(1, &nu, &mu, &w).unwrap(), &(&nu[0] * &mu[0]) + &(&nu[1] * &mu[1]));
    assert_eq!(theta_tilde(0, &nu, &mu, &w).unwrap(), nu_omega(&nu, &w));
}

#[test]
fn recurrence_examples() {
    let w = q("-3");
    let (nu, mu) = (v(&["1/2", "4"]), v(&["1", "-2/5"]));
    assert_eq!(theta_tilde_rec(3, &nu[..1], &mu[..1], &w).unwrap(), &nu[0] * &mu[0].pow(3));
    assert_eq!(theta_tilde_rec(2, &nu, &mu, &w).unwrap(), theta_tilde(2, &nu, &mu, &w).unwrap());
    assert!(theta_tilde_rec(0, &nu, &mu, &w).is_err());
}

#[test]
fn c_tilde_examples() {
    let w = q("1/7");
    let (nu, mu) = (v(&["2", "3"]), v(&["1", "4"]));
    assert_eq!(c_tilde(0, &nu[..1], &mu[..1], &w).unwrap(), q("2"));
    let expected = &nu[0] + &(&(&(&w * &nu[0]) * &nu[1]) * &mu[1].checked_div(&(&mu[0] - &mu[1])).unwrap());
    assert_eq!(c_tilde(0, &nu, &mu, &w).unwrap(), expected);
    assert_eq!(c_tilde(0, &nu, &v(&["1", "1"]), &w), Err(Error::CoincidentEigenvalues));
}

#[test]
fn nu_omega_examples() {
    let (a, b, w) = (q("3/2"), q("-5"), q("2/9"));
    assert_eq!(nu_omega(std::slice::from_ref(&a), &w), a);
    assert_eq!(nu_omega(&[a.clone(), b.clone()], &w), &(&a + &b) - &(&(&w * &a) * &b));
    assert_eq!(nu_omega(&[a.clone(), b.clone()], &q("0")), &a + &b);
}

#[test]
fn theta_classical_examples() {
    let t = q("5/3");
    let (m1, m2) = (q("7"), q("-1/2"));
    let mu = vec![m1.clone(), m2.clone()];
    assert_eq!(theta_classical(3, &shape(&[4]), &[q("2")], &t).unwrap(), q("32"));
    assert_eq!(theta_classical(1, &shape(&[1, 1]), &mu, &t).unwrap(), &(&m1 + &m2) + &t);
    assert_eq!(
        theta_classical(2, &shape(&[1, 1]), &mu, &t).unwrap(),
        &(&(&m1 * &m1) + &(&m2 * &m2)) + &(&t * &(&m1 + &m2))
    );
    // m = (2,1), μ = (5,−1), t = 1: ϑ1 = 2·5 + (−1) + 1·2·1 = 11
    assert_eq!(theta_classical(1, &shape(&[2, 1]), &v(&["5", "-1"]), &q("1")).unwrap(), q("11"));
    assert_eq!(theta_classical(0, &shape(&[2, 1]), &v(&["5", "-1"]), &q("1")).unwrap(), q("3"));
}

#[test]
fn connes_classical_examples() {
    let t = q("1");
    assert_eq!(connes_classical(0, &shape(&[3]), &v(&["9/2"]), &t).unwrap(), q("3"));
    assert_eq!(connes_classical(0, &shape(&[1, 1]), &v(&["1", "0"]), &t).unwrap(), q("2"));
    assert_eq!(connes_classical(1, &shape(&[1, 1]), &v(&["1", "0"]), &t).unwrap(), q("0"));
    assert_eq!(connes_classical(0, &shape(&[1, 1]), &v(&["3", "1"]), &t).unwrap(), q("3/2"));
    assert_eq!(connes_classical(1, &shape(&[1, 1]), &v(&["3", "1"]), &t).unwrap(), q("1/2"));
    assert_eq!(connes_classical(0, &shape(&[2, 1]), &v(&["2", "0"]), &t).unwrap(), q("3"));
    assert_eq!(connes_classical(1, &shape(&[2, 1]), &v(&["2", "0"]), &t).unwrap(), q("0"));
    let (m1, m2, tt) = (q("2"), q("5"), q("1/3"));
    let mu = vec![q("4"), q("-1")];
    let closed = &m1 * &(&q("1") + &(&tt * &m2).checked_div(&(&mu[0] - &mu[1])).unwrap());
    assert_eq!(connes_classical(0, &shape(&[2, 5]), &mu, &tt).unwrap(), closed);
    assert_eq!(connes_classical(0, &shape(&[1, 1]), &v(&["2", "2"]), &t), Err(Error::CoincidentEigenvalues));
}

#[test]
fn q_int_examples() {
    assert_eq!(q_int(1).unwrap(), UniPolynomial::constant(q("1")));
    assert_eq!(q_int(2).unwrap(), UniPolynomial::linear(q("2"), q("-1")));
    for m in 1..=6 {
        let p = q_int(m).unwrap();
        assert_eq!(p.degree(), Some(m - 1));
        assert_eq!(p.eval(&q("0")), GaussRational::from(m));
    }
    // m̂ = 1 + q⁻² + … + q^{−2(m−1)} with q⁻² = 1 − ω
    let w = q("1/3");
    let x = &q("1") - &w;
    let direct: GaussRational = (0..4).map(|i| x.pow(i)).sum();
    assert_eq!(q_int(4).unwrap().eval(&w), direct);
    assert!(q_int(0).is_err());
}

#[test]
fn q_specializations() {
    let m = shape(&[2, 1, 3]);
    let mu = v(&["1/2", "-2", "3"]);
    let t = q("2/5");
    for j in 0..3 {
        assert_eq!(connes_q(j, &m, &mu, &q("0"), &t).unwrap(), connes_classical(j, &m, &mu, &t).unwrap());
    }
    for ell in 0..5 {
        assert_eq!(theta_q(ell, &m, &mu, &q("0"), &t).unwrap(), theta_classical(ell, &m, &mu, &t).unwrap());
        let single = theta_q(ell, &shape(&[3]), &mu[..1], &q("1/4"), &t).unwrap();
        assert_eq!(single, &q_int(3).unwrap().eval(&q("1/4")) * &mu[0].pow(ell as u32));
        let undeformed: GaussRational =
            m.parts().iter().zip(&mu).map(|(&mj, x)| &GaussRational::from(mj) * &x.pow(ell as u32)).sum();
        assert_eq!(theta_q(ell, &m, &mu, &q("0"), &q("0")).unwrap(), undeformed);
    }
}

#[test]
fn shifted_limit_is_polynomial_and_matches_closed_form() {
    let m = shape(&[2, 1, 3]);
    let mu = v(&["1/2", "-2", "3"]);
    let t = q("2/5");
    let nodes: Vec<GaussRational> = (1..=8).map(|i| GaussRational::ratio(1, i + 1)).collect();
    for j in 0..3 {
        let symbolic = connes_q_symbolic(j, &m, &mu, &t).unwrap();
        let poly = symbolic.as_polynomial().expect("pole-free").clone();
        for w in &nodes {
            assert_eq!(poly.eval(w), connes_q(j, &m, &mu, w, &t).unwrap());
        }
        assert_eq!(poly.eval(&q("0")), connes_classical(j, &m, &mu, &t).unwrap());
        assert_eq!(connes_limit_by_interpolation(j, &m, &mu, &t, &nodes).unwrap(), connes_classical(j, &m, &mu, &t).unwrap());
    }
}

/// `ν_j Π_{i≠j} (1 + ω ν_i μ_i / (μ_j − μ_i))`.
fn c_tilde_product(j: usize, nu: &[GaussRational], mu: &[GaussRational], w: &GaussRational) -> GaussRational {
    let mut acc = nu[j].clone();
    for i in 0..nu.len() {
        if i != j {
            acc *= &(&q("1") + &(&(w * &nu[i]) * &mu[i]).checked_div(&(&mu[j] - &mu[i])).unwrap());
        }
    }
    acc
}

fn rational() -> impl Strategy<Value = GaussRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| GaussRational::ratio(a, b))
}

fn distinct(k: usize) -> impl Strategy<Value = Vec<GaussRational>> {
    prop::collection::vec(rational(), k).prop_filter("distinct", |v| pairwise_distinct(v))
}

fn sample() -> impl Strategy<Value = (Vec<GaussRational>, Vec<GaussRational>, GaussRational)> {
    (1usize..=4).prop_flat_map(|k| (prop::collection::vec(rational(), k), distinct(k), rational()))
}

fn shaped_sample() -> impl Strategy<Value = (BlockShape, Vec<GaussRational>, GaussRational)> {
    (1usize..=4).prop_flat_map(|k| {
        (prop::collection::vec(1usize..=3, k).prop_map(|p| BlockShape::new(p).unwrap()), distinct(k), rational())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn thetas_identity((nu, mu, w) in sample()) {
        for ell in 0..=6 {
            let mut rhs = GaussRational::zero();
            for j in 0..nu.len() {
                rhs += &(&mu[j].pow(ell as u32) * &c_tilde(j, &nu, &mu, &w).unwrap());
            }
            prop_assert_eq!(theta_tilde(ell, &nu, &mu, &w).unwrap(), rhs);
        }
    }

    #[test]
    fn recurrence_agrees((nu, mu, w) in sample()) {
        for ell in 1..=6 {
            prop_assert_eq!(theta_tilde_rec(ell, &nu, &mu, &w).unwrap(), theta_tilde(ell, &nu, &mu, &w).unwrap());
        }
    }

    #[test]
    fn c_tilde_product_form_and_closure((nu, mu, w) in sample()) {
        let mut total = GaussRational::zero();
        for j in 0..nu.len() {
            let c = c_tilde(j, &nu, &mu, &w).unwrap();
            prop_assert_eq!(&c, &c_tilde_product(j, &nu, &mu, &w));
            total += &c;
        }
        prop_assert_eq!(total, nu_omega(&nu, &w));
    }

    #[test]
    fn classical_moments((m, mu, t) in shaped_sample()) {
        let n = GaussRational::from(m.n());
        let cs: Vec<GaussRational> = (0..m.k()).map(|j| connes_classical(j, &m, &mu, &t).unwrap()).collect();
        prop_assert_eq!(cs.iter().sum::<GaussRational>(), n);
        for ell in 0..=6 {
            let moment: GaussRational = cs.iter().zip(&mu).map(|(c, x)| c * &x.pow(ell as u32)).sum();
            prop_assert_eq!(moment, theta_classical(ell, &m, &mu, &t).unwrap());
        }
    }

    #[test]
    fn classical_homogeneity_symmetry_and_t_zero((m, mu, t) in shaped_sample(), c in rational(), rot in 0usize..4) {
        prop_assume!(!c.is_zero());
        let k = m.k();
        let scaled: Vec<GaussRational> = mu.iter().map(|x| x * &c).collect();
        let tau: Vec<usize> = (0..k).map(|i| (i + rot) % k).collect();
        let (pm, pmu) = (m.permuted(&tau), crate::verma::apply_perm(&tau, &mu));
        for ell in 1..=6 {
            let base = theta_classical(ell, &m, &mu, &t).unwrap();
            prop_assert_eq!(theta_classical(ell, &m, &scaled, &(&t * &c)).unwrap(), &c.pow(ell as u32) * &base);
            prop_assert_eq!(theta_classical(ell, &pm, &pmu, &t).unwrap(), base);
            let moments: GaussRational = m.parts().iter().zip(&mu).map(|(&mj, x)| &GaussRational::from(mj) * &x.pow(ell as u32)).sum();
            prop_assert_eq!(theta_classical(ell, &m, &mu, &GaussRational::zero()).unwrap(), moments);
        }
    }

    #[test]
    fn q_side_reduces_at_zero((m, mu, t) in shaped_sample()) {
        let zero = GaussRational::zero();
        for j in 0..m.k() {
            prop_assert_eq!(connes_q(j, &m, &mu, &zero, &t).unwrap(), connes_classical(j, &m, &mu, &t).unwrap());
        }
        for ell in 0..=6 {
            prop_assert_eq!(theta_q(ell, &m, &mu, &zero, &t).unwrap(), theta_classical(ell, &m, &mu, &t).unwrap());
        }
    }

    #[test]
    fn q_side_matches_unshifted_definition((m, mu, t) in shaped_sample(), w in rational()) {
        prop_assume!(!w.is_zero());
        let nu: Vec<GaussRational> = m.parts().iter().map(|&x| q_int(x).unwrap().eval(&w)).collect();
        let shifted: Vec<GaussRational> = mu.iter().map(|x| x + &t.checked_div(&w).unwrap()).collect();
        for j in 0..m.k() {
            prop_assert_eq!(connes_q(j, &m, &mu, &w, &t).unwrap(), c_tilde(j, &nu, &shifted, &w).unwrap());
        }
    }
}
