use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::orbits::OrbitParams;
use crate::pbw::{AlgebraContext, AlgebraElement, GeneratorIndex, ScalarMatrix, Variant};
use crate::sampling;
use crate::scalar::GaussRational;
use crate::starforms::{
    anti_fixed_real_dimension, condition, condition_gl_ustar, condition_u, j_matrix, verify_power_transform,
    verify_star_on_orbit, verify_trace_transform, InvolutionKind, StarMap,
};
use crate::verma::BlockShape;

use super::Check;

fn random_element<R: Rng>(rng: &mut R, ctx: &Arc<AlgebraContext>) -> Result<AlgebraElement> {
    let gens: Vec<GeneratorIndex> = GeneratorIndex::all(ctx.n()).collect();
    let mut acc = AlgebraElement::zero(ctx);
    for _ in 0..3 {
        let degree = rng.gen_range(0..=3);
        let word: Vec<GeneratorIndex> = (0..degree).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        acc = &acc + &AlgebraElement::word(ctx, &word)?.scale(&sampling::gaussian(rng));
    }
    Ok(acc)
}

fn laws(seed: u64, n: usize, kind: InvolutionKind) -> Result<Check> {
    let ctx = AlgebraContext::new(n, GaussRational::ratio(2, 3))?;
    let star = StarMap::new(kind, &ctx)?;
    let mut rng = sampling::rng(seed ^ ((n as u64) << 16) ^ kind.to_string().len() as u64);
    let mut failure = None;
    for i in 0..30 {
        let (a, b) = (random_element(&mut rng, &ctx)?, random_element(&mut rng, &ctx)?);
        let alpha = sampling::gaussian(&mut rng);
        let (sa, sb) = (star.apply(&a)?, star.apply(&b)?);
        let anti_mult = star.apply(&a.multiply(&b)?)? == sb.multiply(&sa)?;
        let involutive = star.apply(&sa)? == a;
        let anti_linear = star.apply(&a.scale(&alpha))? == sa.scale(&alpha.conj());
        if failure.is_none() && !(anti_mult && involutive && anti_linear) {
            failure = Some(format!("sample {i}: anti-multiplicative {anti_mult}, involutive {involutive}, anti-linear {anti_linear}"));
        }
    }
    Ok(Check { label: format!("star laws n={n} {kind} samples=30"), passed: failure.is_none(), witness: failure })
}

fn transforms(n: usize, kind: InvolutionKind, t: &GaussRational) -> Result<Vec<Check>> {
    let ctx = AlgebraContext::new(n, t.clone())?;
    let star = StarMap::new(kind, &ctx)?;
    let mut out = Vec::new();
    for ell in 1..=3 {
        out.push(Check::new(format!("power transform n={n} {kind} t={t} ell={ell}"), verify_power_transform(&star, ell)?));
        out.push(Check::new(format!("trace transform n={n} {kind} t={t} ell={ell}"), verify_trace_transform(&star, ell)?));
    }
    let dim = anti_fixed_real_dimension(&star);
    out.push(Check::equal(format!("anti-fixed real dimension n={n} {kind} t={t}"), &dim, &(n * n)));
    Ok(out)
}

fn shape(parts: &[usize]) -> Result<BlockShape> {
    BlockShape::new(parts.to_vec())
}

fn ints(xs: &[i64]) -> Vec<GaussRational> {
    xs.iter().map(|&x| GaussRational::from_int(x)).collect()
}

fn worked_examples() -> Result<Vec<Check>> {
    let one = GaussRational::from_int(1);
    let pair = vec![GaussRational::gaussian(2, 1), GaussRational::gaussian(2, -1)];
    let mut out = vec![
        Check::equal("j u(1,1) n=2", &j_matrix(InvolutionKind::U { r: 1, s: 1 }, 2)?, &ScalarMatrix::from_rows(vec![ints(&[1, 0]), ints(&[0, -1])])?),
        Check::equal("j u-star n=2", &j_matrix(InvolutionKind::UStar, 2)?, &ScalarMatrix::from_rows(vec![ints(&[0, 1]), ints(&[-1, 0])])?),
        Check::equal("j gl-real n=3", &j_matrix(InvolutionKind::GlReal, 3)?, &ScalarMatrix::identity(3)),
        Check::equal("u condition m=(1,1) mu=(2+i,2-i)", &condition_u(&shape(&[1, 1])?, &pair), &Some(vec![1, 0])),
        Check::equal("u condition m=(2,1,1) real mu", &condition_u(&shape(&[2, 1, 1])?, &ints(&[1, 2, 3])), &Some(vec![0, 1, 2])),
        Check::equal("u condition m=(1,2) mu=(i,0)", &condition_u(&shape(&[1, 2])?, &[GaussRational::i(), GaussRational::from_int(0)]), &None),
        Check::equal("gl condition m=(1,1) mu=(0,-1) t=1", &condition_gl_ustar(&shape(&[1, 1])?, &ints(&[0, -1]), &one, 2), &Some(vec![1, 0])),
        Check::equal("gl condition m=(1,1) mu=(1,0) t=1", &condition_gl_ustar(&shape(&[1, 1])?, &ints(&[1, 0]), &one, 2), &None),
        Check::equal("gl condition m=(1,1) mu=(2,-2) t=0", &condition_gl_ustar(&shape(&[1, 1])?, &ints(&[2, -2]), &GaussRational::from_int(0), 2), &Some(vec![1, 0])),
    ];
    let params = |parts: &[usize], mu: Vec<GaussRational>| OrbitParams::new(shape(parts)?, mu, one.clone(), Variant::Standard);
    let report = verify_star_on_orbit(&params(&[1, 1], ints(&[3, 1]))?, InvolutionKind::U { r: 2, s: 0 })?;
    out.push(Check::witnessed("u(2) m=(1,1) mu=(3,1) t=1 at lambda=(3,2)", report.verified() && report.lambda == ints(&[3, 2]), || format!("{report:?}")));
    let report = verify_star_on_orbit(&params(&[1, 1], ints(&[0, -1]))?, InvolutionKind::GlReal)?;
    out.push(Check::witnessed("gl-real m=(1,1) mu=(0,-1) t=1", report.verified(), || format!("{report:?}")));
    let refused = verify_star_on_orbit(&params(&[1, 1], vec![GaussRational::gaussian(1, 1), GaussRational::from_int(0)])?, InvolutionKind::U { r: 2, s: 0 });
    out.push(Check::witnessed("u(2) m=(1,1) mu=(1+i,0) refused", matches!(refused, Err(crate::Error::ConditionFailed(_))), || format!("{refused:?}")));
    Ok(out)
}

fn compatibility_cases() -> Result<Vec<(OrbitParams, InvolutionKind)>> {
    let values = [
        GaussRational::from_int(0),
        GaussRational::from_int(1),
        GaussRational::from_int(-1),
        GaussRational::from_int(3),
        GaussRational::gaussian(1, 1),
        GaussRational::gaussian(1, -1),
    ];
    let mut out = Vec::new();
    for t in [GaussRational::from_int(1), GaussRational::ratio(2, 3)] {
        for n in 1..=3usize {
            for s in BlockShape::all_shapes(n) {
                let k = s.k();
                for code in 0..values.len().pow(k as u32) {
                    let mu: Vec<GaussRational> = (0..k).map(|i| values[(code / values.len().pow(i as u32)) % values.len()].clone()).collect();
                    let p = OrbitParams::new(s.clone(), mu, t.clone(), Variant::Standard)?;
                    if !p.is_regular() {
                        continue;
                    }
                    for kind in InvolutionKind::all(n) {
                        if condition(kind, &p).is_some() {
                            out.push((p.clone(), kind));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn run(seed: u64) -> Result<Vec<Check>> {
    let mut checks = worked_examples()?;
    let mut kinds = Vec::new();
    for n in 1..=3usize {
        kinds.extend(InvolutionKind::all(n).into_iter().map(|k| (n, k)));
    }
    checks.extend(kinds.par_iter().map(|&(n, k)| laws(seed, n, k)).collect::<Result<Vec<_>>>()?);
    for t in [GaussRational::from_int(1), GaussRational::ratio(-3, 2)] {
        let per: Vec<Vec<Check>> = kinds.par_iter().map(|&(n, k)| transforms(n, k, &t)).collect::<Result<_>>()?;
        checks.extend(per.into_iter().flatten());
    }
    let cases = compatibility_cases()?;
    let compat: Vec<Check> = cases
        .par_iter()
        .map(|(p, kind)| {
            let report = verify_star_on_orbit(p, *kind)?;
            let mu = p.mu.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            Ok(Check::witnessed(format!("compatibility {kind} m=({}) mu=({mu}) t={}", p.shape, p.t), report.verified(), || {
                format!("{:?}", report.verdicts.iter().filter(|v| !v.holds).collect::<Vec<_>>())
            }))
        })
        .collect::<Result<_>>()?;
    checks.extend(compat);
    Ok(checks)
}
