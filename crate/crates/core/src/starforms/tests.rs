use rand::Rng;

use super::*;
use crate::pbw::{e, matrix_powers};
use crate::sampling;
use crate::scalar::q;

fn v(xs: &[&str]) -> Vec<GaussRational> {
    xs.iter().map(|s| q(s)).collect()
}

fn shape(parts: &[usize]) -> BlockShape {
    BlockShape::new(parts.to_vec()).unwrap()
}

fn params(parts: &[usize], mu: Vec<GaussRational>, t: &str) -> OrbitParams {
    OrbitParams::new(shape(parts), mu, q(t), Variant::Standard).unwrap()
}

fn random_element<R: Rng>(rng: &mut R, ctx: &Arc<AlgebraContext>) -> AlgebraElement {
    let gens: Vec<GeneratorIndex> = GeneratorIndex::all(ctx.n()).collect();
    let mut acc = AlgebraElement::zero(ctx);
    for _ in 0..3 {
        let degree = rng.gen_range(0..=3);
        let word: Vec<GeneratorIndex> = (0..degree).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        acc = &acc + &AlgebraElement::word(ctx, &word).unwrap().scale(&sampling::gaussian(rng));
    }
    acc
}

#[test]
fn j_matrices() {
    assert_eq!(j_matrix(InvolutionKind::U { r: 1, s: 1 }, 2).unwrap(), ScalarMatrix::from_rows(vec![v(&["1", "0"]), v(&["0", "-1"])]).unwrap());
    assert_eq!(j_matrix(InvolutionKind::UStar, 2).unwrap(), ScalarMatrix::from_rows(vec![v(&["0", "1"]), v(&["-1", "0"])]).unwrap());
    assert_eq!(j_matrix(InvolutionKind::GlReal, 3).unwrap(), ScalarMatrix::identity(3));
    let j = j_matrix(InvolutionKind::UStar, 4).unwrap();
    assert_eq!(j.mul(&j), ScalarMatrix::identity(4).scale(&q("-1")));
    let j = j_matrix(InvolutionKind::U { r: 2, s: 1 }, 3).unwrap();
    assert_eq!(j.mul(&j), ScalarMatrix::identity(3));
    assert!(j_matrix(InvolutionKind::UStar, 3).is_err());
    assert!(j_matrix(InvolutionKind::U { r: 1, s: 2 }, 3).is_err());
    assert!(j_matrix(InvolutionKind::U { r: 2, s: 2 }, 3).is_err());
}

#[test]
fn kinds_parse_and_enumerate() {
    for kind in InvolutionKind::all(4) {
        assert_eq!(kind.to_string().parse::<InvolutionKind>().unwrap(), kind);
    }
    assert_eq!(InvolutionKind::all(3).len(), 3);
    assert!("u:3".parse::<InvolutionKind>().is_err());
    assert!("sp".parse::<InvolutionKind>().is_err());
}

#[test]
fn generator_images() {
    let ctx = AlgebraContext::new(2, q("1")).unwrap();
    let g = |i, j| AlgebraElement::generator(&ctx, e(i, j));
    let star = StarMap::new(InvolutionKind::U { r: 2, s: 0 }, &ctx).unwrap();
    for x in GeneratorIndex::all(2) {
        assert_eq!(star.apply(&g(x.row(), x.col())).unwrap(), g(x.col(), x.row()));
    }
    let star = StarMap::new(InvolutionKind::U { r: 1, s: 1 }, &ctx).unwrap();
    assert_eq!(star.apply(&g(1, 2)).unwrap(), -&g(2, 1));
    assert_eq!(star.apply(&g(2, 2)).unwrap(), g(2, 2));
    let star = StarMap::new(InvolutionKind::GlReal, &ctx).unwrap();
    assert_eq!(star.apply(&g(1, 2)).unwrap(), -&g(1, 2));
    let u = g(1, 2).multiply(&g(2, 1)).unwrap();
    assert_eq!(star.apply(&u).unwrap(), star.apply(&g(2, 1)).unwrap().multiply(&star.apply(&g(1, 2)).unwrap()).unwrap());
    assert!(StarMap::new(InvolutionKind::GlReal, &AlgebraContext::new(2, GaussRational::i()).unwrap()).is_err());
}

#[test]
fn star_laws() {
    let mut rng = sampling::rng(21);
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, q("2/3")).unwrap();
        for kind in InvolutionKind::all(n) {
            let star = StarMap::new(kind, &ctx).unwrap();
            for _ in 0..30 {
                let (a, b) = (random_element(&mut rng, &ctx), random_element(&mut rng, &ctx));
                let alpha = sampling::gaussian(&mut rng);
                let (sa, sb) = (star.apply(&a).unwrap(), star.apply(&b).unwrap());
                assert_eq!(star.apply(&a.multiply(&b).unwrap()).unwrap(), sb.multiply(&sa).unwrap(), "{kind}");
                assert_eq!(star.apply(&sa).unwrap(), a, "{kind}");
                assert_eq!(star.apply(&a.scale(&alpha)).unwrap(), sa.scale(&alpha.conj()), "{kind}");
            }
        }
    }
}

#[test]
fn power_and_trace_transforms() {
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, q("-3/2")).unwrap();
        for kind in InvolutionKind::all(n) {
            let star = StarMap::new(kind, &ctx).unwrap();
            for ell in 1..=3 {
                assert!(verify_power_transform(&star, ell).unwrap(), "{kind} n={n} ell={ell}");
                assert!(verify_trace_transform(&star, ell).unwrap(), "{kind} n={n} ell={ell}");
            }
        }
    }
}

#[test]
fn identity_generator_map_is_rejected() {
    // The anti-multiplicative extension of E ↦ E, with J the identity.
    let ctx = AlgebraContext::new(2, q("1")).unwrap();
    let reverse = |u: &AlgebraElement| {
        let mut acc = AlgebraElement::zero(&ctx);
        for (m, c) in u.terms() {
            let mut factors = m.factors(&ctx);
            factors.reverse();
            acc = &acc + &AlgebraElement::word(&ctx, &factors).unwrap().scale(&c.conj());
        }
        acc
    };
    let powers = matrix_powers(&ctx, Variant::Standard, 3).unwrap();
    let opposite = matrix_powers(&ctx, Variant::Opposite, 3).unwrap();
    let holds = |ell: usize| {
        let sign = if ell.is_multiple_of(2) { q("1") } else { q("-1") };
        powers[ell].map(|x| reverse(x)) == opposite[ell].scale(&sign)
    };
    assert!(!holds(1));
    assert!(!holds(3));
    // It does not respect the commutation relation either.
    let g = |i, j| AlgebraElement::generator(&ctx, e(i, j));
    let relation = &(&g(1, 2).multiply(&g(2, 1)).unwrap() - &g(2, 1).multiply(&g(1, 2)).unwrap()) - &(&g(1, 1) - &g(2, 2));
    assert!(relation.is_zero());
    let reversed = &(&AlgebraElement::word(&ctx, &[e(2, 1), e(1, 2)]).unwrap()
        - &AlgebraElement::word(&ctx, &[e(1, 2), e(2, 1)]).unwrap())
        - &(&g(1, 1) - &g(2, 2));
    assert!(!reversed.is_zero());
}

#[test]
fn anti_fixed_dimension() {
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, q("1")).unwrap();
        for kind in InvolutionKind::all(n) {
            let star = StarMap::new(kind, &ctx).unwrap();
            assert_eq!(anti_fixed_real_dimension(&star), n * n, "{kind}");
        }
    }
}

#[test]
fn condition_examples() {
    let conj_pair = vec![GaussRational::gaussian(2, 1), GaussRational::gaussian(2, -1)];
    assert_eq!(condition_u(&shape(&[1, 1]), &conj_pair), Some(vec![1, 0]));
    assert_eq!(condition_u(&shape(&[2, 1, 1]), &v(&["1", "2", "3"])), Some(vec![0, 1, 2]));
    assert_eq!(condition_u(&shape(&[1, 2]), &[GaussRational::i(), q("0")]), None);

    assert_eq!(condition_gl_ustar(&shape(&[1, 1]), &v(&["0", "-1"]), &q("1"), 2), Some(vec![1, 0]));
    assert_eq!(condition_gl_ustar(&shape(&[1, 1]), &v(&["1", "0"]), &q("1"), 2), None);
    assert_eq!(condition_gl_ustar(&shape(&[1, 1]), &v(&["2", "-2"]), &q("0"), 2), Some(vec![1, 0]));
    assert_eq!(condition_gl_ustar(&shape(&[1, 1]), &v(&["2", "-1"]), &q("0"), 2), None);
}

#[test]
fn star_on_orbit_examples() {
    let report = verify_star_on_orbit(&params(&[1, 1], v(&["3", "1"]), "1"), InvolutionKind::U { r: 2, s: 0 }).unwrap();
    assert!(report.verified());
    assert_eq!(report.lambda, v(&["3", "2"]));
    let conj_pair = vec![GaussRational::gaussian(2, 1), GaussRational::gaussian(2, -1)];
    assert!(verify_star_on_orbit(&params(&[1, 1], conj_pair, "1"), InvolutionKind::U { r: 1, s: 1 }).unwrap().verified());
    let p = params(&[1, 1], v(&["0", "-1"]), "1");
    assert!(verify_star_on_orbit(&p, InvolutionKind::GlReal).unwrap().verified());
    assert!(verify_star_on_orbit(&p, InvolutionKind::UStar).unwrap().verified());
    let refused = verify_star_on_orbit(&params(&[1, 1], vec![GaussRational::gaussian(1, 1), q("0")], "1"), InvolutionKind::U { r: 2, s: 0 });
    assert!(matches!(refused, Err(Error::ConditionFailed(_))));
    assert!(matches!(verify_star_on_orbit(&params(&[1, 1], v(&["1", "0"]), "1"), InvolutionKind::GlReal), Err(Error::ConditionFailed(_))));
}

#[test]
fn compatibility_whenever_condition_holds() {
    let values = [q("0"), q("1"), q("-1"), q("3"), GaussRational::gaussian(1, 1), GaussRational::gaussian(1, -1)];
    let mut checked = 0;
    for t in [q("1"), q("2/3")] {
        for n in 1..=3usize {
            for s in BlockShape::all_shapes(n) {
                let k = s.k();
                for code in 0..values.len().pow(k as u32) {
                    let mu: Vec<GaussRational> = (0..k).map(|i| values[(code / values.len().pow(i as u32)) % values.len()].clone()).collect();
                    let p = OrbitParams::new(s.clone(), mu, t.clone(), Variant::Standard).unwrap();
                    if !p.is_regular() {
                        continue;
                    }
                    for kind in InvolutionKind::all(n) {
                        if condition(kind, &p).is_some() {
                            assert!(verify_star_on_orbit(&p, kind).unwrap().verified(), "{kind} {p:?}");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 20);
}
