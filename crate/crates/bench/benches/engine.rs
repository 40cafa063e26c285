use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use orbitforge::orbits::{cayley_hamilton, verify_orbit_annihilator_with, OrbitParams, PowerTable};
use orbitforge::reps::{build_irrep, DominantWeight};
use orbitforge::{AlgebraContext, AlgebraElement, BlockShape, GaussRational, GeneratorIndex, Variant};

fn ints(xs: &[i64]) -> Vec<GaussRational> {
    xs.iter().map(|&x| GaussRational::from_int(x)).collect()
}

fn pbw_multiply(c: &mut Criterion) {
    let ctx = AlgebraContext::new(3, GaussRational::ratio(2, 3)).unwrap();
    let gens: Vec<GeneratorIndex> = GeneratorIndex::all(3).collect();
    let a = AlgebraElement::word(&ctx, &[gens[8], gens[1], gens[4]]).unwrap();
    let b = AlgebraElement::word(&ctx, &[gens[2], gens[6], gens[5]]).unwrap();
    c.bench_function("pbw multiply n=3 degree 3x3", |bench| bench.iter(|| black_box(a.multiply(&b).unwrap())));
}

fn annihilator(c: &mut Criterion) {
    for (parts, mu) in [(vec![2, 1], vec![5, -1]), (vec![2, 1, 1], vec![5, -1, 3])] {
        let shape = BlockShape::new(parts).unwrap();
        let n = shape.n();
        let t = GaussRational::ratio(2, 3);
        let params = OrbitParams::new(shape.clone(), ints(&mu), t.clone(), Variant::Standard).unwrap();
        let ctx: Arc<AlgebraContext> = AlgebraContext::new(n, t).unwrap();
        let table = PowerTable::new(&ctx, shape.k()).unwrap();
        c.bench_function(&format!("annihilator m=({shape})"), |bench| {
            bench.iter(|| black_box(verify_orbit_annihilator_with(&params, &table).unwrap()))
        });
    }
}

fn irrep(c: &mut Criterion) {
    let weight = DominantWeight::new(ints(&[3, 1, 0])).unwrap();
    let one = GaussRational::from_int(1);
    c.bench_function("build irrep (3,1,0)", |bench| bench.iter(|| black_box(build_irrep(&weight, &one).unwrap())));
}

fn cayley(c: &mut Criterion) {
    let t = GaussRational::ratio(2, 3);
    c.bench_function("cayley-hamilton n=3", |bench| bench.iter(|| black_box(cayley_hamilton(3, &t, 1).unwrap())));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = pbw_multiply, annihilator, irrep, cayley
}
criterion_main!(benches);
