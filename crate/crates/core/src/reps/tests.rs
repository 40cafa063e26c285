use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::orbits::OrbitParams;
use crate::pbw::{e, AlgebraContext, AlgebraElement, GeneratorIndex, ScalarMatrix, Variant};
use crate::scalar::{q, GaussRational};
use crate::verma::BlockShape;

fn v(xs: &[&str]) -> Vec<GaussRational> {
    xs.iter().map(|s| q(s)).collect()
}

fn weight(xs: &[&str]) -> DominantWeight {
    DominantWeight::new(v(xs)).unwrap()
}

fn params(parts: &[usize], mu: &[&str], t: &str) -> OrbitParams {
    OrbitParams::new(BlockShape::new(parts.to_vec()).unwrap(), v(mu), q(t), Variant::Standard).unwrap()
}

#[test]
fn dominant_weights() {
    assert!(DominantWeight::new(v(&["1", "2"])).is_err());
    assert!(DominantWeight::new(v(&["3/2", "1"])).is_err());
    assert!(DominantWeight::new(vec![GaussRational::gaussian(3, 1), GaussRational::gaussian(1, 1)]).is_ok());
    assert_eq!(weyl_dim(&weight(&["1", "0"])).unwrap(), 2);
    assert_eq!(weyl_dim(&weight(&["5/2", "5/2", "5/2"])).unwrap(), 1);
    assert_eq!(weyl_dim(&weight(&["3", "2"])).unwrap(), 2);
    assert_eq!(weyl_dim(&weight(&["2", "1", "0"])).unwrap(), 8);
    assert_eq!(weyl_dim(&weight(&["3", "0", "0"])).unwrap(), 10);
}

#[test]
fn classification_examples() {
    let c = classify(&params(&[1, 1], &["3", "1"], "1")).unwrap().unwrap();
    assert_eq!((c.tau.clone(), c.lambda.values().to_vec(), c.dim), (vec![0, 1], v(&["3", "2"]), 2));
    assert_eq!(classify(&params(&[1, 1], &["1/2", "0"], "1")).unwrap(), None);
    let c = classify(&params(&[2, 1], &["2", "0"], "1")).unwrap().unwrap();
    assert_eq!((c.lambda.values().to_vec(), c.dim), (v(&["2", "2", "2"]), 1));
    let c = classify(&params(&[1, 1], &["1", "3"], "1")).unwrap().unwrap();
    assert_eq!(c.tau, vec![1, 0]);
    assert!(classify(&params(&[1, 1], &["3", "1"], "0")).is_err());
    assert!(matches!(classify(&params(&[1, 1], &["3", "3"], "1")), Err(Error::NonRegular(_))));
}

#[test]
fn irreps_examples() {
    let rep = build_irrep(&weight(&["1", "1"]), &q("1")).unwrap();
    assert_eq!(rep.dim, 1);
    for g in GeneratorIndex::all(2) {
        let expected = if g.is_diagonal() { ScalarMatrix::identity(1) } else { ScalarMatrix::zero(1) };
        assert_eq!(rep.action(g), &expected);
    }
    let rep = build_irrep(&weight(&["1", "0"]), &q("1")).unwrap();
    assert_eq!(rep.dim, 2);
    for g in GeneratorIndex::all(2) {
        assert_eq!(rep.action(g), &ScalarMatrix::unit(2, g.row() - 1, g.col() - 1), "{g}");
    }
    let rep = build_irrep(&weight(&["3", "2"]), &q("1")).unwrap();
    for g in GeneratorIndex::all(2) {
        let mut expected = ScalarMatrix::unit(2, g.row() - 1, g.col() - 1);
        if g.is_diagonal() {
            expected = expected.add(&ScalarMatrix::identity(2).scale(&q("2")));
        }
        assert_eq!(rep.action(g), &expected, "{g}");
    }
}

#[test]
fn built_dimensions_match_weyl() {
    for w in [&["2", "1", "0"][..], &["3", "0", "0"], &["1", "1", "0"], &["2", "2", "0"], &["2", "0"], &["4", "1"]] {
        let w = weight(w);
        let rep = build_irrep(&w, &q("1")).unwrap();
        assert_eq!(rep.dim as u64, weyl_dim(&w).unwrap());
        assert!(commutation_failures(&rep).is_empty());
    }
    let rep = build_irrep(&weight(&["1", "0", "-1"]), &q("2/3")).unwrap();
    assert!(commutation_failures(&rep).is_empty());
    assert!(matches!(build_irrep_capped(&weight(&["9", "0", "0"]), &q("1"), 20), Err(Error::ResourceCap(_))));
    assert!(build_irrep(&weight(&["1", "0"]), &q("0")).is_err());
}

#[test]
fn factorization_through_verma() {
    let rep = build_irrep(&weight(&["2", "1", "0"]), &q("1")).unwrap();
    let module = rep.quotient().module().clone();
    let ctx = AlgebraContext::new(3, q("1")).unwrap();
    let gens: Vec<GeneratorIndex> = GeneratorIndex::all(3).collect();
    let mut words: Vec<Vec<GeneratorIndex>> = gens.iter().map(|&g| vec![g]).collect();
    for &a in &gens {
        for &b in &gens {
            words.push(vec![a, b]);
        }
    }
    for w in words {
        let u = AlgebraElement::word(&ctx, &w).unwrap();
        let column: Vec<GaussRational> = (0..rep.dim).map(|r| rep.matrix_of(&u).unwrap().get(r, 0).clone()).collect();
        let image = module.act_on_hwv(&u).unwrap();
        assert_eq!(rep.quotient().project(&image, rep.dim).unwrap(), column, "{u}");
    }
}

#[test]
fn verify_rep_examples() {
    let p = params(&[1, 1], &["1", "0"], "1");
    let c = classify(&p).unwrap().unwrap();
    assert_eq!(c.lambda.values(), &v(&["1", "1"])[..]);
    let rep = build_irrep(&c.lambda, &p.t).unwrap();
    let report = verify_rep(&p, &rep).unwrap();
    assert!(report.passes(), "{report:?}");

    let p = params(&[2, 1], &["2", "0"], "1");
    let rep = build_irrep(&classify(&p).unwrap().unwrap().lambda, &p.t).unwrap();
    assert!(verify_rep(&p, &rep).unwrap().passes());
    let e_arr = OperatorArray::generators(&rep);
    let tr2 = operator_powers(&e_arr, 2)[2].trace();
    assert_eq!(tr2, ScalarMatrix::identity(1).scale(&q("12")));

    let wrong = params(&[2, 1], &["3", "0"], "1");
    let report = verify_rep(&wrong, &rep).unwrap();
    assert!(!report.passes());
    assert!(report.relations.iter().any(|r| !r.holds && r.witness.is_some()));
}

#[test]
fn projector_examples() {
    let p = params(&[1, 1], &["1", "0"], "1");
    let rep = build_irrep(&classify(&p).unwrap().unwrap().lambda, &p.t).unwrap();
    let pis = projectors(&p, &rep).unwrap();
    assert_eq!(pis[0], OperatorArray::identity(2, 1));
    assert!(pis[1].is_zero());
    assert!(projector_identities(&p, &rep, &pis).passes());
    let traces: Vec<_> = connes_trace_check(&p, &rep).unwrap().into_iter().map(|c| (c.trace, c.holds)).collect();
    assert_eq!(traces, vec![(Some(q("2")), true), (Some(q("0")), true)]);

    let p = params(&[2, 1], &["2", "0"], "1");
    let rep = build_irrep(&classify(&p).unwrap().unwrap().lambda, &p.t).unwrap();
    let values = connes_trace_check(&p, &rep).unwrap();
    assert_eq!(values.iter().map(|c| c.expected.clone()).collect::<Vec<_>>(), v(&["3", "0"]));
    assert!(values.iter().all(|c| c.holds));

    let p = params(&[2], &["5/2"], "1");
    let rep = build_irrep(&classify(&p).unwrap().unwrap().lambda, &p.t).unwrap();
    let pis = projectors(&p, &rep).unwrap();
    assert_eq!(pis, vec![OperatorArray::identity(2, rep.dim)]);
    assert_eq!(connes_trace_check(&p, &rep).unwrap()[0].trace, Some(q("2")));
}

#[test]
fn classify_successes_verify() {
    let mut checked = 0;
    for n in 1..=3usize {
        for s in BlockShape::all_shapes(n) {
            for mu in small_mu(s.k()) {
                let p = OrbitParams::new(s.clone(), mu, q("1"), Variant::Standard).unwrap();
                if !p.is_regular() {
                    continue;
                }
                let Some(c) = classify(&p).unwrap() else { continue };
                if c.dim > 20 {
                    continue;
                }
                let rep = build_irrep(&c.lambda, &p.t).unwrap();
                assert!(verify_rep(&p, &rep).unwrap().passes(), "{p:?}");
                let pis = projectors(&p, &rep).unwrap();
                assert!(projector_identities(&p, &rep, &pis).passes());
                assert!(connes_trace_check(&p, &rep).unwrap().iter().all(|x| x.holds));
                checked += 1;
            }
        }
    }
    assert!(checked > 10);
}

fn small_mu(k: usize) -> Vec<Vec<GaussRational>> {
    let values = [-1i64, 0, 1, 3];
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<GaussRational>| {
                values.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(GaussRational::from_int(x));
                    p
                })
            })
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn classification_is_rescaling_invariant(
        parts in prop::sample::select(vec![vec![1usize, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1]]),
        raw in prop::collection::vec(-4i64..=4, 3),
        num in 1i64..=5,
        den in 1i64..=3,
        neg in any::<bool>(),
    ) {
        let s = BlockShape::new(parts).unwrap();
        let mu: Vec<GaussRational> = raw[..s.k()].iter().map(|&x| GaussRational::from_int(x)).collect();
        let p = OrbitParams::new(s, mu, q("1"), Variant::Standard).unwrap();
        prop_assume!(p.is_regular());
        let c = GaussRational::ratio(if neg { -num } else { num }, den);
        let a = classify(&p).unwrap().map(|x| (x.tau, x.dim));
        let b = classify(&p.rescaled(&c)).unwrap().map(|x| (x.tau, x.dim));
        prop_assert_eq!(a, b);
    }
}

#[test]
fn rescaled_rep_verifies_at_original_t() {
    let base = params(&[1, 1], &["3", "1"], "1");
    let c = q("2/3");
    let p = base.rescaled(&c);
    let cls = classify(&p).unwrap().unwrap();
    let rep = build_irrep(&cls.lambda, &p.t).unwrap();
    assert_eq!(rep.action(e(1, 1)), &ScalarMatrix::from_rows(vec![v(&["2", "0"]), v(&["0", "4/3"])]).unwrap());
    assert!(verify_rep(&p, &rep).unwrap().passes());
    assert!(connes_trace_check(&p, &rep).unwrap().iter().all(|x| x.holds));
}
