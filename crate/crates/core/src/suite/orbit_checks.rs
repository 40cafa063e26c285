use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::orbits::{
    ad_invariance_check, cayley_hamilton, central_roots, chi_values, chi_values_of_character, jacobian_det,
    kn_redundancy, lambda_to_mu, lambda_to_nu, mu_to_lambda, mu_to_nu, solve_minimal_poly, trace_values_with,
    verify_orbit_annihilator_with, CayleyHamilton, MonicPolynomial, OrbitParams, RootMultiset,
};
use crate::pbw::{e, AlgebraElement, Variant};
use crate::sampling;
use crate::scalar::GaussRational;
use crate::verma::{BlockShape, ParabolicCharacter};

use super::sweep::{power_tables, sweep_cells, sweep_samples, sweep_t, table_name};
use super::Check;

pub(super) fn annihilator_sweep(seed: u64) -> Result<Vec<Check>> {
    let cells = sweep_cells(seed);
    let tables = power_tables(&cells, |n| n)?;
    cells
        .par_iter()
        .map(|cell| {
            let p = &cell.params;
            let report = verify_orbit_annihilator_with(p, &tables[&table_name(&(p.n(), p.t.clone()))])?;
            Ok(Check::witnessed(cell.key(), report.passes(), || {
                report.failures().map(|f| format!("{}: {}", f.relation, f.witness.as_deref().unwrap_or(""))).collect::<Vec<_>>().join("; ")
            }))
        })
        .collect()
}

pub(super) fn trace_identities(seed: u64) -> Result<Vec<Check>> {
    let cells = sweep_cells(seed);
    let tables = power_tables(&cells, |n| n + 1)?;
    cells
        .par_iter()
        .map(|cell| {
            let p = &cell.params;
            let values = trace_values_with(p, &tables[&table_name(&(p.n(), p.t.clone()))], p.n() + 1)?;
            let bad: Vec<String> = values
                .iter()
                .filter(|v| v.central_value != v.theta)
                .map(|v| format!("ell={}: {} vs {}", v.ell, v.central_value, v.theta))
                .collect();
            Ok(Check::witnessed(format!("{} ell=1..{}", cell.key(), p.n() + 1), bad.is_empty(), || bad.join("; ")))
        })
        .collect()
}

fn full_flag(lambda: Vec<GaussRational>) -> ParabolicCharacter {
    ParabolicCharacter::new(BlockShape::full_flag(lambda.len()), lambda).expect("lengths match")
}

pub(super) fn cayley_hamilton_checks(seed: u64) -> Result<Vec<Check>> {
    let cases: Vec<(usize, GaussRational)> =
        [2usize, 3].iter().flat_map(|&n| [GaussRational::from_int(1), GaussRational::ratio(2, 3)].map(|t| (n, t))).collect();
    let per_case: Vec<Vec<Check>> = cases
        .par_iter()
        .map(|(n, t)| {
            let ch = cayley_hamilton(*n, t, seed)?;
            let tag = format!("n={n} t={t}");
            let mut checks = vec![Check::witnessed(format!("{tag} identity vanishes in normal form"), ch.verified(), || {
                ch.residual.entries().map(ToString::to_string).collect::<Vec<_>>().join("; ")
            })];
            if *n == 2 {
                let ctx = ch.ctx();
                let trace = &AlgebraElement::generator(ctx, e(1, 1)) + &AlgebraElement::generator(ctx, e(2, 2));
                let c1 = &trace - &AlgebraElement::scalar(ctx, t.clone());
                checks.push(Check::equal(format!("{tag} c1 = Tr E - t"), &ch.coefficients[0], &c1));
            }
            let mut rng = sampling::rng(seed ^ ((*n as u64) << 8));
            for i in 0..5 {
                let lambda = sampling::distinct_with(&mut rng, *n, sampling::gaussian, |_| true);
                let values = ch.character_values(&lambda)?;
                let expected = chi_values_of_character(&full_flag(lambda), t).0;
                checks.push(Check::equal(format!("{tag} sample={i} character is elem_sym of shifted roots"), &values, &expected));
            }
            Ok(checks)
        })
        .collect::<Result<_>>()?;
    Ok(per_case.into_iter().flatten().collect())
}

fn cayley_tables(seed: u64, ns: &[usize]) -> Result<BTreeMap<String, CayleyHamilton>> {
    let keys: Vec<(usize, GaussRational)> = ns.iter().flat_map(|&n| sweep_t().into_iter().map(move |t| (n, t))).collect();
    keys.par_iter().map(|(n, t)| Ok((table_name(&(*n, t.clone())), cayley_hamilton(*n, t, seed)?))).collect()
}

pub(super) fn root_coherence(seed: u64) -> Result<Vec<Check>> {
    let ch = cayley_tables(seed, &[1, 2, 3])?;
    let samples = sweep_samples(seed.wrapping_add(5), &[1, 2, 3, 4], 1);
    let mut jobs = Vec::new();
    for s in &samples {
        for t in sweep_t() {
            for p in [lambda_to_mu(&s.character, &t), lambda_to_nu(&s.character, &t)] {
                jobs.push((s.character.clone(), p));
            }
        }
    }
    let mut checks: Vec<Check> = jobs
        .par_iter()
        .map(|(c, p)| {
            let tag = format!("n={} m=({}) t={} {}", p.n(), p.shape, p.t, p.variant);
            let sigma = chi_values(p).0;
            let mut out = vec![Check::equal(format!("{tag} roots match shifted weight"), &sigma, &chi_values_of_character(c, &p.t).0)];
            if let Some(ch) = ch.get(&table_name(&(p.n(), p.t.clone()))) {
                out.push(Check::equal(format!("{tag} roots match central character"), &sigma, &ch.character_values(&c.embedded())?));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut rng = sampling::rng(seed.wrapping_add(6));
    let mut redundancy = Vec::new();
    for n in 1..=3usize {
        for t in sweep_t() {
            for _ in 0..2 {
                let mu = sampling::distinct_with(&mut rng, n, sampling::gaussian, |_| true);
                redundancy.push(OrbitParams::new(BlockShape::full_flag(n), mu, t.clone(), Variant::Standard)?);
            }
        }
    }
    let verdicts: Vec<Check> = redundancy
        .par_iter()
        .map(|p| {
            let r = kn_redundancy(p, &ch[&table_name(&(p.n(), p.t.clone()))])?;
            Ok(Check::witnessed(format!("k=n redundancy n={} t={} mu=({})", p.n(), p.t, join(&p.mu)), r.holds(), || format!("{r:?}")))
        })
        .collect::<Result<_>>()?;
    checks.extend(verdicts);
    Ok(checks)
}

fn join(values: &[GaussRational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub(super) fn lemmas(seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut rng = sampling::rng(seed.wrapping_add(9));
    for n in 1..=5usize {
        for i in 0..4 {
            let lambda: Vec<GaussRational> =
                (0..n).map(|_| if i % 2 == 0 { sampling::rational(&mut rng) } else { sampling::gaussian(&mut rng) }).collect();
            let j = jacobian_det(&lambda);
            checks.push(Check::witnessed(format!("jacobian n={n} sample={i}"), j.holds(), || format!("{} vs {}", j.determinant, j.vandermonde)));
        }
    }

    let samples = sweep_samples(seed, &[2, 3, 4], 3);
    let mut jobs = Vec::new();
    for s in &samples {
        for t in sweep_t() {
            jobs.push((s, t));
        }
    }
    let solved: Vec<Vec<Check>> = jobs
        .par_iter()
        .map(|(s, t)| {
            let c = &s.character;
            let tag = format!("n={} m=({}) sample={} t={}", c.shape().n(), c.shape(), s.index, t);
            let p = lambda_to_mu(c, t);
            let poly = solve_minimal_poly(c, t)?;
            let nu = lambda_to_nu(c, t);
            Ok(vec![
                Check::equal(format!("{tag} minimal polynomial"), &poly, &MonicPolynomial::from_roots(&p.mu)),
                Check::equal(format!("{tag} minimal polynomial roots"), &poly.roots(), &Some(RootMultiset::new(p.mu.clone()))),
                Check::equal(format!("{tag} link"), &mu_to_nu(&p), &nu),
                Check::equal(format!("{tag} link inverse"), &mu_to_nu(&nu), &p),
                Check::equal(format!("{tag} standard inverse"), &mu_to_lambda(&p), c),
                Check::equal(format!("{tag} opposite inverse"), &mu_to_lambda(&nu), c),
                Check::equal(format!("{tag} variants share roots"), &central_roots(&p), &central_roots(&nu)),
            ])
        })
        .collect::<Result<_>>()?;
    checks.extend(solved.into_iter().flatten());

    let ad_samples = sweep_samples(seed.wrapping_add(10), &[1, 2, 3], 1);
    let mut ad_jobs = Vec::new();
    for s in &ad_samples {
        for t in [GaussRational::from_int(1), GaussRational::ratio(2, 3)] {
            ad_jobs.push(lambda_to_mu(&s.character, &t));
            ad_jobs.push(lambda_to_nu(&s.character, &t));
        }
    }
    let ad: Vec<Check> = ad_jobs
        .par_iter()
        .map(|p| {
            let r = ad_invariance_check(p)?;
            Ok(Check::witnessed(format!("ad-invariance n={} m=({}) t={} {}", p.n(), p.shape, p.t, p.variant), r.holds(), || format!("{:?}", r.failures)))
        })
        .collect::<Result<_>>()?;
    checks.extend(ad);
    Ok(checks)
}
