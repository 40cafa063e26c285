use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::pbw::{e, matrix_power, matrix_poly_from_roots, AlgebraContext, GeneratorIndex, Variant};
use crate::scalar::{q, GaussRational};

fn full_flag(lambda: &[&str]) -> ParabolicCharacter {
    ParabolicCharacter::new(BlockShape::full_flag(lambda.len()), lambda.iter().map(|s| q(s)).collect()).unwrap()
}

fn module(chi: &ParabolicCharacter, t: &str) -> Arc<VermaModule> {
    VermaModule::new(chi.clone(), q(t)).unwrap()
}

fn gen(m: &VermaModule, i: usize, j: usize) -> AlgebraElement {
    AlgebraElement::generator(m.ctx(), e(i, j))
}

#[test]
fn hwv_examples() {
    let chi = full_flag(&["7/2", "-1"]);
    let m = module(&chi, "2/3");
    assert!(m.act_on_hwv(&gen(&m, 1, 2)).unwrap().is_zero());
    assert_eq!(m.act_on_hwv(&gen(&m, 1, 1)).unwrap(), m.hwv().scale(&q("7/2")));
    assert_eq!(m.act_on_hwv(&gen(&m, 2, 2)).unwrap(), m.hwv().scale(&q("-1")));
    let u = gen(&m, 1, 2).multiply(&gen(&m, 2, 1)).unwrap();
    // t(λ1 − λ2) = 2/3 · 9/2
    assert_eq!(m.act_on_hwv(&u).unwrap(), m.hwv().scale(&q("3")));

    let shaped = ParabolicCharacter::new(BlockShape::new(vec![2, 1]).unwrap(), vec![q("5"), q("1")]).unwrap();
    let m3 = module(&shaped, "1");
    for (i, j) in [(1, 2), (2, 1), (1, 3), (2, 3)] {
        assert!(m3.act_on_hwv(&gen(&m3, i, j)).unwrap().is_zero(), "E[{i},{j}]");
    }
}

#[test]
fn act_examples() {
    let chi = full_flag(&["4", "1/3"]);
    let m = module(&chi, "-2");
    let v = m.vector(&[e(2, 1)]).unwrap();
    assert_eq!(m.act(&gen(&m, 2, 1), &m.hwv()).unwrap(), v);
    // t(λ1 − λ2) = −2 · 11/3
    assert_eq!(m.act(&gen(&m, 1, 2), &v).unwrap(), m.hwv().scale(&q("-22/3")));
    // E[1,1]E[2,1] = E[2,1]E[1,1] − t·E[2,1], so the eigenvalue is λ1 − t
    assert_eq!(m.act(&gen(&m, 1, 1), &v).unwrap(), v.scale(&q("6")));
    assert_eq!(m.act(&gen(&m, 2, 2), &v).unwrap(), v.scale(&q("-5/3")));
}

#[test]
fn annihilation_examples() {
    let chi = full_flag(&["3", "-1/2"]);
    let m = module(&chi, "1");
    assert!(m.annihilates_hwv(&[gen(&m, 1, 2)]).unwrap().holds());

    // (E − λ1)(E − λ2 + t)
    let base = AlgebraContext::new(2, q("1")).unwrap();
    let p = matrix_poly_from_roots(&[q("3"), q("-3/2")], Variant::Standard, &base).unwrap();
    let entries: Vec<AlgebraElement> = p.into_entries();
    assert!(annihilates_hwv(&entries, &chi).unwrap().holds());

    let verdict = m.annihilates_hwv(&[gen(&m, 1, 2), gen(&m, 2, 1)]).unwrap();
    let (idx, witness) = verdict.first_failure.unwrap();
    assert_eq!(idx, 1);
    assert_eq!(witness, m.vector(&[e(2, 1)]).unwrap());
}

#[test]
fn central_value_examples() {
    let chi = full_flag(&["5/3", "2"]);
    let t = q("3/4");
    let base = AlgebraContext::new(2, t.clone()).unwrap();
    let tr1 = matrix_power(1, &base).unwrap().trace();
    let tr2 = matrix_power(2, &base).unwrap().trace();
    let (l1, l2) = (q("5/3"), q("2"));
    assert_eq!(central_value(&tr1, &chi).unwrap(), &l1 + &l2);
    assert_eq!(central_value(&tr2, &chi).unwrap(), &(&(&l1 * &l1) + &(&l2 * &l2)) + &(&t * &(&l1 - &l2)));
    let low = AlgebraElement::generator(&base, e(2, 1));
    assert!(matches!(central_value(&low, &chi), Err(crate::Error::NotScalarOnHwv(_))));
    // Scalar on v0 but not central.
    let diag = AlgebraElement::generator(&base, e(1, 1));
    assert!(matches!(central_value(&diag, &chi), Err(crate::Error::NotCentral(_))));
}

#[test]
fn shapovalov_examples() {
    let chi = full_flag(&["1/2", "-3"]);
    let m = module(&chi, "5");
    assert_eq!(m.shapovalov(&m.hwv(), &m.hwv()).unwrap(), q("1"));
    let v = m.vector(&[e(2, 1)]).unwrap();
    assert_eq!(m.shapovalov(&v, &v).unwrap(), q("35/2"));
    assert_eq!(m.shapovalov(&v, &m.hwv()).unwrap(), q("0"));
}

#[test]
fn weight_space_enumeration() {
    let chi = full_flag(&["0", "0", "0"]);
    let m = module(&chi, "1");
    // −α1 − α2 = ε3 − ε1: E[3,1] or E[3,2]E[2,1]
    assert_eq!(m.basis_of_offset(&[-1, 0, 1]).len(), 2);
    assert_eq!(m.basis_of_offset(&[0, 0, 0]).len(), 1);
    assert_eq!(m.basis_of_offset(&[1, 0, -1]).len(), 0);
    // −2α1 − α2: E[2,1]E[3,1], E[2,1]²E[3,2]
    assert_eq!(m.basis_of_offset(&[-2, 1, 1]).len(), 2);
    let shaped = ParabolicCharacter::new(BlockShape::new(vec![1, 2]).unwrap(), vec![q("0"), q("1")]).unwrap();
    let ms = module(&shaped, "1");
    assert_eq!(ms.basis_of_offset(&[-1, 0, 1]).len(), 1);
    assert_eq!(ms.basis_of_degree(1).len(), 2);
    for v in ms.basis_of_offset(&[-2, 1, 1]) {
        assert_eq!(v.weight_offsets().into_iter().collect::<Vec<_>>(), vec![vec![-2, 1, 1]]);
    }
}

#[test]
fn vector_rejects_non_free_generators() {
    let shaped = ParabolicCharacter::new(BlockShape::new(vec![2, 1]).unwrap(), vec![q("0"), q("1")]).unwrap();
    let m = module(&shaped, "1");
    assert!(m.vector(&[e(2, 1)]).is_err());
    assert!(m.vector(&[e(3, 1), e(3, 2)]).is_ok());
}

#[test]
fn central_action_on_low_degree_vectors() {
    for n in 2..=3 {
        for shape in BlockShape::all_shapes(n) {
            let lambda: Vec<GaussRational> = (0..shape.k()).map(|i| q(&format!("{}/3", 2 * i as i64 - 1))).collect();
            let chi = ParabolicCharacter::new(shape.clone(), lambda).unwrap();
            let m = module(&chi, "-3/2");
            let base = AlgebraContext::new(n, q("-3/2")).unwrap();
            for ell in 1..=3 {
                let z = matrix_power(ell, &base).unwrap().trace();
                let c = m.central_value(&z).unwrap();
                for d in 0..=2 {
                    for w in m.basis_of_degree(d) {
                        assert_eq!(m.act(&z, &w).unwrap(), w.scale(&c), "shape {shape} ℓ={ell} {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn parabolic_generators_kill_hwv() {
    for n in 1..=4 {
        for shape in BlockShape::all_shapes(n) {
            let lambda: Vec<GaussRational> = (0..shape.k()).map(|i| GaussRational::gaussian(i as i64, 1 - i as i64)).collect();
            let chi = ParabolicCharacter::new(shape.clone(), lambda).unwrap();
            let m = module(&chi, "2");
            let lt = chi.embedded();
            for g in GeneratorIndex::all(n) {
                let x = gen(&m, g.row(), g.col());
                let image = m.act_on_hwv(&x).unwrap();
                if g.is_diagonal() {
                    assert_eq!(image, m.hwv().scale(&lt[g.row() - 1]));
                } else if shape.block_of(g.row()) <= shape.block_of(g.col()) {
                    assert!(image.is_zero(), "{g} in shape {shape}");
                } else {
                    assert_eq!(image, m.vector(&[g]).unwrap());
                }
            }
        }
    }
}

fn arb_setup() -> impl Strategy<Value = (usize, usize, Vec<(i64, i64)>, (i64, i64))> {
    (2usize..=3, 0usize..4, prop::collection::vec((-6i64..=6, 1i64..=3), 3), (1i64..=3, 1i64..=2))
}

fn make(setup: &(usize, usize, Vec<(i64, i64)>, (i64, i64))) -> Arc<VermaModule> {
    let (n, shape_idx, lam, (tn, td)) = setup;
    let shapes = BlockShape::all_shapes(*n);
    let shape = shapes[shape_idx % shapes.len()].clone();
    let lambda = lam.iter().take(shape.k()).map(|&(a, b)| GaussRational::ratio(a, b)).collect();
    let chi = ParabolicCharacter::new(shape, lambda).unwrap();
    VermaModule::new(chi, GaussRational::ratio(*tn, *td)).unwrap()
}

fn element(m: &VermaModule, raw: &[(i64, Vec<(usize, usize)>)]) -> AlgebraElement {
    let n = m.n();
    let base = AlgebraContext::new(n, m.t().clone()).unwrap();
    let mut acc = AlgebraElement::zero(&base);
    for (c, word) in raw {
        let f: Vec<GeneratorIndex> = word.iter().map(|&(i, j)| e(i % n + 1, j % n + 1)).collect();
        acc = &acc + &AlgebraElement::word(&base, &f).unwrap().scale(&GaussRational::from_int(*c));
    }
    acc
}

fn raw(max: usize) -> impl Strategy<Value = Vec<(i64, Vec<(usize, usize)>)>> {
    prop::collection::vec((-2i64..=2, prop::collection::vec((0usize..3, 0usize..3), 0..=max)), 1..=3)
}

fn vector(m: &VermaModule, picks: &[(i64, Vec<usize>)]) -> VermaElement {
    let free = m.free_lower_generators();
    let mut acc = m.zero_vector();
    if free.is_empty() {
        return m.hwv();
    }
    for (c, word) in picks {
        let f: Vec<GeneratorIndex> = word.iter().map(|&i| free[i % free.len()]).collect();
        acc = acc.checked_add(&m.vector(&f).unwrap().scale(&GaussRational::from_int(*c))).unwrap();
    }
    acc
}

fn raw_vec() -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-2i64..=2, prop::collection::vec(0usize..3, 0..=2)), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn action_is_a_module_structure(setup in arb_setup(), ru in raw(2), rv in raw(2), rw in raw_vec()) {
        let m = make(&setup);
        let (u, v, w) = (element(&m, &ru), element(&m, &rv), vector(&m, &rw));
        let lhs = m.act(&u.multiply(&v).unwrap(), &w).unwrap();
        let rhs = m.act(&u, &m.act(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hwv_routes_agree(setup in arb_setup(), ru in raw(4)) {
        let m = make(&setup);
        let u = element(&m, &ru);
        prop_assert_eq!(m.act_on_hwv(&u).unwrap(), m.act_on_hwv_reordered(&u).unwrap());
    }

    #[test]
    fn generators_shift_weights(setup in arb_setup(), gi in (0usize..3, 0usize..3), rw in raw_vec()) {
        let m = make(&setup);
        let n = m.n();
        let g = e(gi.0 % n + 1, gi.1 % n + 1);
        for (c, word) in &rw {
            let w = vector(&m, &[(*c, word.clone())]);
            let Some(src) = w.weight_offsets().into_iter().next() else { continue };
            let image = m.act(&AlgebraElement::generator(m.ctx(), g), &w).unwrap();
            let mut expected = src.clone();
            expected[g.row() - 1] += 1;
            expected[g.col() - 1] -= 1;
            for off in image.weight_offsets() {
                prop_assert_eq!(&off, &expected);
            }
        }
    }

    #[test]
    fn shapovalov_symmetric_and_weight_orthogonal(setup in arb_setup(), ra in raw_vec(), rb in raw_vec()) {
        let m = make(&setup);
        let (v, w) = (vector(&m, &ra), vector(&m, &rb));
        prop_assert_eq!(m.shapovalov(&v, &w).unwrap(), m.shapovalov(&w, &v).unwrap());
        for (ca, wa) in &ra {
            for (cb, wb) in &rb {
                let x = vector(&m, &[(*ca, wa.clone())]);
                let y = vector(&m, &[(*cb, wb.clone())]);
                if x.is_zero() || y.is_zero() || x.weight_offsets() == y.weight_offsets() {
                    continue;
                }
                prop_assert_eq!(m.shapovalov(&x, &y).unwrap(), GaussRational::from_int(0));
            }
        }
    }
}
