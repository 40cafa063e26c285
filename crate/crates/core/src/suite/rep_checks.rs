use rayon::prelude::*;

use crate::error::Result;
use crate::orbits::OrbitParams;
use crate::pbw::Variant;
use crate::reps::{build_irrep, classify, connes_trace_check, projector_identities, projectors, verify_rep};
use crate::scalar::GaussRational;
use crate::verma::BlockShape;

use super::Check;

/// `(shape, μ, expected dimension, expected Tr π_j)` at `t = 1`.
#[allow(clippy::type_complexity)]
const EXAMPLES: [(&[usize], &[i64], u64, &[(i64, i64)]); 3] = [
    (&[1, 1], &[1, 0], 1, &[(2, 1), (0, 1)]),
    (&[1, 1], &[3, 1], 2, &[(3, 2), (1, 2)]),
    (&[2, 1], &[2, 0], 1, &[(3, 1), (0, 1)]),
];

fn params(parts: &[usize], mu: Vec<GaussRational>, t: GaussRational) -> Result<OrbitParams> {
    OrbitParams::new(BlockShape::new(parts.to_vec())?, mu, t, Variant::Standard)
}

fn example(i: usize) -> Result<OrbitParams> {
    let (parts, mu, _, _) = EXAMPLES[i];
    params(parts, mu.iter().map(|&x| GaussRational::from_int(x)).collect(), GaussRational::from_int(1))
}

fn tag(p: &OrbitParams) -> String {
    format!("m=({}) mu=({}) t={}", p.shape, p.mu.iter().map(ToString::to_string).collect::<Vec<_>>().join(","), p.t)
}

/// Classifies, builds and verifies; `None` when no finite-dimensional module exists.
fn build_and_verify(p: &OrbitParams) -> Result<Option<(u64, Check)>> {
    let Some(c) = classify(p)? else { return Ok(None) };
    let rep = build_irrep(&c.lambda, &p.t)?;
    let report = verify_rep(p, &rep)?;
    let check = Check::witnessed(format!("{} dim={}", tag(p), rep.dim), report.passes() && rep.dim as u64 == c.dim, || {
        format!("{report:?}")
    });
    Ok(Some((c.dim, check)))
}

const SCALES: [(i64, i64); 4] = [(2, 1), (-1, 1), (2, 3), (-5, 2)];

pub(super) fn representations() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (i, (_, _, dim, _)) in EXAMPLES.iter().enumerate() {
        let p = example(i)?;
        match build_and_verify(&p)? {
            Some((d, check)) => {
                checks.push(Check::equal(format!("{} classified dimension", tag(&p)), &d, dim));
                checks.push(check);
            }
            None => checks.push(Check::witnessed(format!("{} classified", tag(&p)), false, || "no admissible permutation".into())),
        }
        let base = classify(&p)?.map(|c| (c.tau, c.dim));
        for (a, b) in SCALES {
            let q = p.rescaled(&GaussRational::ratio(a, b));
            checks.push(Check::equal(format!("{} rescaling classification", tag(&q)), &classify(&q)?.map(|c| (c.tau, c.dim)), &base));
            if let Some((_, check)) = build_and_verify(&q)? {
                checks.push(check);
            }
        }
    }
    let rejected = params(&[1, 1], vec![GaussRational::ratio(1, 2), GaussRational::from_int(0)], GaussRational::from_int(1))?;
    checks.push(Check::witnessed(format!("{} rejected", tag(&rejected)), classify(&rejected)?.is_none(), || "classified".into()));
    Ok(checks)
}

fn projector_checks(p: &OrbitParams) -> Result<Vec<Check>> {
    let Some(c) = classify(p)? else { return Ok(Vec::new()) };
    let rep = build_irrep(&c.lambda, &p.t)?;
    let pis = projectors(p, &rep)?;
    let ids = projector_identities(p, &rep, &pis);
    let connes = connes_trace_check(p, &rep)?;
    Ok(vec![
        Check::witnessed(format!("{} projector identities", tag(p)), ids.passes(), || format!("{ids:?}")),
        Check::witnessed(format!("{} traces equal C_j", tag(p)), connes.iter().all(|x| x.holds), || format!("{connes:?}")),
    ])
}

fn small_weights(k: usize) -> Vec<Vec<GaussRational>> {
    let values = [-1i64, 0, 1, 3];
    (0..values.len().pow(k as u32))
        .map(|code| (0..k).map(|i| GaussRational::from_int(values[(code / values.len().pow(i as u32)) % values.len()])).collect())
        .collect()
}

pub(super) fn projectors_and_connes() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (i, (_, _, _, traces)) in EXAMPLES.iter().enumerate() {
        let p = example(i)?;
        if let Some(c) = classify(&p)? {
            let rep = build_irrep(&c.lambda, &p.t)?;
            let got: Vec<Option<GaussRational>> = connes_trace_check(&p, &rep)?.into_iter().map(|x| x.trace).collect();
            let expected: Vec<Option<GaussRational>> = traces.iter().map(|&(a, b)| Some(GaussRational::ratio(a, b))).collect();
            checks.push(Check::equal(format!("{} projector traces", tag(&p)), &got, &expected));
        }
    }
    let mut cases = Vec::new();
    for n in 1..=3usize {
        for s in BlockShape::all_shapes(n) {
            for mu in small_weights(s.k()) {
                let p = OrbitParams::new(s.clone(), mu, GaussRational::from_int(1), Variant::Standard)?;
                if p.is_regular() && classify(&p)?.is_some_and(|c| c.dim <= 20) {
                    cases.push(p);
                }
            }
        }
    }
    for (i, (a, b)) in SCALES.iter().enumerate() {
        cases.push(example(i % EXAMPLES.len())?.rescaled(&GaussRational::ratio(*a, *b)));
    }
    let swept: Vec<Vec<Check>> = cases.par_iter().map(projector_checks).collect::<Result<_>>()?;
    checks.extend(swept.into_iter().flatten());
    Ok(checks)
}
