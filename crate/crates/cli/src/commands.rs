use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use orbitforge::orbits::{
    annihilation_against, cayley_hamilton, central_roots, chi_values, iso_check, jacobian_det, lambda_to_mu,
    lambda_to_nu, mu_to_lambda, mu_to_nu, solve_minimal_poly, trace_values_with, verify_orbit_annihilator_with,
    MonicPolynomial, OrbitParams, PowerTable, RelationVerdict,
};
use orbitforge::reps::{
    build_irrep_capped, classify, connes_trace_check, projector_identities, projectors, verify_rep,
};
use orbitforge::starforms::{condition, verify_star_on_orbit};
use orbitforge::suite::{run_all, run_criterion, CriterionReport, SuiteConfig};
use orbitforge::theta::{connes_classical, connes_q, theta_classical, theta_q};
use orbitforge::verma::pairwise_distinct;
use orbitforge::{AlgebraContext, GaussRational, GeneratorIndex, ParabolicCharacter, Variant};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::UsageError;

/// Result of one command: its JSON payload and whether every check in it passed.
pub struct Outcome {
    pub payload: Value,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl Outcome {
    fn pass(payload: Value) -> Self {
        Outcome { payload, passed: true, witnesses: Vec::new() }
    }

    fn checked(payload: Value, witnesses: Vec<String>) -> Self {
        Outcome { payload, passed: witnesses.is_empty(), witnesses }
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn verdict_witnesses(verdicts: &[RelationVerdict]) -> Vec<String> {
    verdicts
        .iter()
        .filter(|v| !v.holds)
        .map(|v| format!("{}: {}", v.relation, v.witness.as_deref().unwrap_or("")))
        .collect()
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Theta(a) => theta(a),
        Command::ParamMap(a) => param_map(a),
        Command::CentralRoots(a) => central(a),
        Command::Verify(a) => verify(a),
        Command::MinimalPoly(a) => minimal_poly(a),
        Command::CayleyHamilton(a) => cayley(a),
        Command::IsoCheck(a) => iso(a),
        Command::Jacobian(a) => jacobian(a),
        Command::Classify(a) => classify_cmd(a),
        Command::BuildRep(a) => build_rep(a),
        Command::Connes(a) => connes(a),
        Command::RealForm(a) => real_form(a),
        Command::Sweep(a) => sweep(a),
        Command::RunJob(_) => Err(UsageError("run-job cannot be nested inside a job".into()).into()),
    }
}

fn theta(a: &ThetaArgs) -> Result<Outcome> {
    let mu = &a.mu.0;
    let mut thetas = BTreeMap::new();
    for ell in a.ell.clone() {
        let v = match &a.omega {
            Some(w) => theta_q(ell, &a.m, mu, w, &a.t)?,
            None => theta_classical(ell, &a.m, mu, &a.t)?,
        };
        thetas.insert(ell.to_string(), v);
    }
    let mut payload = json!({ "theta": thetas });
    if pairwise_distinct(mu) {
        let mut connes = BTreeMap::new();
        for j in 0..mu.len() {
            let v = match &a.omega {
                Some(w) => connes_q(j, &a.m, mu, w, &a.t)?,
                None => connes_classical(j, &a.m, mu, &a.t)?,
            };
            connes.insert((j + 1).to_string(), v);
        }
        payload["connes"] = to_json(&connes);
    }
    Ok(Outcome::pass(payload))
}

fn require<'a>(value: &'a Option<Scalars>, flag: &str) -> Result<&'a [GaussRational]> {
    value.as_ref().map(|s| s.0.as_slice()).ok_or_else(|| UsageError(format!("--{flag} is required for this direction")).into())
}

fn param_map(a: &ParamMapArgs) -> Result<Outcome> {
    let character = || -> Result<ParabolicCharacter> { Ok(ParabolicCharacter::new(a.blocks.clone(), require(&a.lambda, "lambda")?.to_vec())?) };
    let params = || -> Result<OrbitParams> {
        let variant = if a.opposite { Variant::Opposite } else { Variant::Standard };
        Ok(OrbitParams::new(a.blocks.clone(), require(&a.mu, "mu")?.to_vec(), a.t.clone(), variant)?)
    };
    let payload = match a.direction {
        Direction::LambdaToMu => json!({ "mu": lambda_to_mu(&character()?, &a.t).mu }),
        Direction::LambdaToNu => json!({ "nu": lambda_to_nu(&character()?, &a.t).mu }),
        Direction::MuToNu => {
            let image = mu_to_nu(&params()?);
            match image.variant {
                Variant::Opposite => json!({ "nu": image.mu }),
                Variant::Standard => json!({ "mu": image.mu }),
            }
        }
        Direction::MuToLambda => json!({ "lambda": mu_to_lambda(&params()?).lambda() }),
    };
    Ok(Outcome::pass(payload))
}

fn central(a: &OrbitArgs) -> Result<Outcome> {
    let p = a.params()?;
    Ok(Outcome::pass(json!({ "roots": central_roots(&p), "chi": chi_values(&p) })))
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let c = &a.character;
    let chi = ParabolicCharacter::new(c.blocks.clone(), c.lambda.0.clone())?;
    let matched = if a.opposite { lambda_to_nu(&chi, &c.t) } else { lambda_to_mu(&chi, &c.t) };
    let p = match &a.mu {
        Some(mu) => OrbitParams::new(c.blocks.clone(), mu.0.clone(), c.t.clone(), matched.variant)?,
        None => matched,
    };
    let ctx = AlgebraContext::new(p.n(), p.t.clone())?;
    let max = if a.traces { p.n() + 1 } else { p.k() };
    let table = PowerTable::new(&ctx, max)?;
    let verdicts = if a.mu.is_some() {
        annihilation_against(&p, &chi)?
    } else {
        verify_orbit_annihilator_with(&p, &table)?.verdicts
    };
    let mut witnesses = verdict_witnesses(&verdicts);
    let mut payload = json!({ "params": p, "lambda": chi.lambda(), "verdicts": verdicts });
    if a.traces {
        let values = trace_values_with(&p, &table, p.n() + 1)?;
        witnesses.extend(
            values.iter().filter(|v| v.central_value != v.theta).map(|v| format!("Tr E^{}: {} vs {}", v.ell, v.central_value, v.theta)),
        );
        payload["traces"] = to_json(&values);
    }
    payload["passed"] = json!(witnesses.is_empty());
    Ok(Outcome::checked(payload, witnesses))
}

fn minimal_poly(a: &CharacterArgs) -> Result<Outcome> {
    let chi = ParabolicCharacter::new(a.blocks.clone(), a.lambda.0.clone())?;
    let poly = solve_minimal_poly(&chi, &a.t)?;
    let expected = lambda_to_mu(&chi, &a.t).mu;
    let matches = poly == MonicPolynomial::from_roots(&expected);
    let witnesses = if matches { Vec::new() } else { vec![format!("roots {:?} differ from ({})", poly.roots(), join(&expected))] };
    let payload = json!({
        "coefficients": poly.coefficients(),
        "roots": poly.roots(),
        "mu": expected,
        "matches": matches,
    });
    Ok(Outcome::checked(payload, witnesses))
}

fn join(values: &[GaussRational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cayley(a: &CayleyArgs) -> Result<Outcome> {
    let ch = cayley_hamilton(a.n, &a.t, a.seed)?;
    let witnesses = if ch.verified() { Vec::new() } else { ch.residual.entries().map(ToString::to_string).collect() };
    let payload = json!({
        "n": a.n,
        "t": a.t,
        "coefficients": ch.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "expansions": ch.expansions,
        "verified": ch.verified(),
    });
    Ok(Outcome::checked(payload, witnesses))
}

fn iso(a: &IsoArgs) -> Result<Outcome> {
    let variant = if a.opposite { Variant::Opposite } else { Variant::Standard };
    let p1 = OrbitParams::new(a.blocks_a.clone(), a.mu_a.0.clone(), a.t.clone(), variant)?;
    let p2 = OrbitParams::new(a.blocks_b.clone(), a.mu_b.0.clone(), a.t.clone(), variant)?;
    let witness = iso_check(&p1, &p2)?;
    Ok(Outcome::pass(json!({ "isomorphic": witness.is_some(), "witness": witness })))
}

fn jacobian(a: &JacobianArgs) -> Result<Outcome> {
    let check = jacobian_det(&a.lambda.0);
    let witnesses = if check.holds() { Vec::new() } else { vec![format!("{} != {}", check.determinant, check.vandermonde)] };
    let payload = json!({ "determinant": check.determinant, "vandermonde": check.vandermonde, "holds": check.holds() });
    Ok(Outcome::checked(payload, witnesses))
}

fn classify_cmd(a: &OrbitArgs) -> Result<Outcome> {
    let payload = match classify(&a.params()?)? {
        None => json!({ "exists": false }),
        Some(c) => json!({ "exists": true, "tau": c.tau, "lambda": c.lambda, "dim": c.dim }),
    };
    Ok(Outcome::pass(payload))
}

fn existing_rep(p: &OrbitParams, cap: u64) -> Result<(orbitforge::reps::Classification, orbitforge::reps::FiniteDimRep)> {
    let c = classify(p)?.ok_or_else(|| UsageError("no finite-dimensional representation exists for these parameters".into()))?;
    let rep = build_irrep_capped(&c.lambda, &p.t, cap)?;
    Ok((c, rep))
}

fn build_rep(a: &BuildRepArgs) -> Result<Outcome> {
    let p = a.orbit.params()?;
    let (c, rep) = existing_rep(&p, a.dim_cap)?;
    let mut payload = json!({ "dim": rep.dim, "tau": c.tau, "lambda": c.lambda, "basis": rep.basis });
    let mut witnesses = Vec::new();
    if a.verify {
        let report = verify_rep(&p, &rep)?;
        witnesses.extend(report.commutation_failures.iter().map(|f| format!("[{}, {}]", f.left, f.right)));
        witnesses.extend(verdict_witnesses(&report.relations));
        if !report.unique {
            witnesses.push("admissible permutations disagree".into());
        }
        payload["report"] = to_json(&report);
    }
    if a.dump {
        let matrices: BTreeMap<String, Vec<Vec<GaussRational>>> =
            GeneratorIndex::all(p.n()).map(|g| (g.to_string(), rep.action(g).rows())).collect();
        payload["matrices"] = to_json(&matrices);
    }
    Ok(Outcome::checked(payload, witnesses))
}

fn connes(a: &OrbitArgs) -> Result<Outcome> {
    let p = a.params()?;
    let (_, rep) = existing_rep(&p, orbitforge::reps::DEFAULT_DIM_CAP)?;
    let pis = projectors(&p, &rep)?;
    let identities = projector_identities(&p, &rep, &pis);
    let values = connes_trace_check(&p, &rep)?;
    let mut witnesses = Vec::new();
    if !identities.passes() {
        witnesses.push(format!("{identities:?}"));
    }
    witnesses.extend(values.iter().filter(|v| !v.holds).map(|v| format!("j={}: trace {:?}, expected {}", v.j, v.trace, v.expected)));
    Ok(Outcome::checked(json!({ "projectors": identities, "connes": values }), witnesses))
}

fn real_form(a: &RealFormArgs) -> Result<Outcome> {
    let p = a.orbit.params()?;
    a.kind.validate(p.n())?;
    if p.variant != Variant::Standard {
        bail!(UsageError("real forms are checked on the standard variant".into()));
    }
    let Some(tau) = condition(a.kind, &p) else {
        return Ok(Outcome::pass(json!({ "condition": null, "verified": false, "failures": [] })));
    };
    let report = verify_star_on_orbit(&p, a.kind)?;
    let failures: Vec<&RelationVerdict> = report.verdicts.iter().filter(|v| !v.holds).collect();
    let witnesses = verdict_witnesses(&report.verdicts);
    Ok(Outcome::checked(json!({ "condition": tau, "verified": report.verified(), "failures": failures }), witnesses))
}

fn criterion_witnesses(r: &CriterionReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("criterion {}: {}: {}", r.criterion, c.label, c.witness.as_deref().unwrap_or("")))
        .collect()
}

fn sweep(a: &SweepArgs) -> Result<Outcome> {
    let cfg = SuiteConfig { seed: a.seed };
    match a.criterion {
        Some(id) => {
            if !(1..=9).contains(&id) {
                bail!(UsageError(format!("criterion {id} is not in 1..=9")));
            }
            let report = run_criterion(id, &cfg).with_context(|| format!("criterion {id}"))?;
            let mut witnesses = criterion_witnesses(&report);
            if !report.passed && witnesses.is_empty() {
                witnesses.push(format!("criterion {id} ran no checks"));
            }
            Ok(Outcome::checked(to_json(&report), witnesses))
        }
        None => {
            let reports = run_all(&cfg)?;
            let witnesses = reports.iter().flat_map(criterion_witnesses).collect();
            Ok(Outcome::checked(json!({ "criteria": reports }), witnesses))
        }
    }
}
