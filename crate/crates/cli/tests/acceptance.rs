//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use orbitforge::suite::{run_criterion, SuiteConfig, CRITERIA};
use serde_json::Value;

fn budget(criterion: u8) -> Duration {
    let secs = match criterion {
        3 | 6 => 60,
        8 => 120,
        _ => 300,
    };
    Duration::from_secs(secs)
}

fn job_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../paper-verification.job")
}

fn run_job() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitforge"))
        .arg("run-job")
        .arg(job_path())
        .output()
        .map_err(|e| format!("spawn failed: {e}"))?;
    if out.status.code() != Some(0) {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn criterion_ten() -> Result<String, String> {
    let first = run_job()?;
    let second = run_job()?;
    if first != second {
        return Err("stdout differs between two runs".into());
    }
    let report: Value = serde_json::from_slice(&first).map_err(|e| format!("report is not JSON: {e}"))?;
    let tasks = report["tasks"].as_array().ok_or("report has no task list")?;
    let mut sweeps = Vec::new();
    for task in tasks {
        if task["status"] != "pass" {
            return Err(format!("task {} has status {}", task["id"], task["status"]));
        }
        if task["command"] == "sweep" {
            sweeps.push(task["payload"]["criterion"].as_u64().unwrap_or(0));
        }
    }
    sweeps.sort_unstable();
    if sweeps != (1..=9).collect::<Vec<u64>>() {
        return Err(format!("job sweeps criteria {sweeps:?}"));
    }
    Ok(format!("{} tasks, byte-identical output", tasks.len()))
}

fn main() -> ExitCode {
    let config = SuiteConfig::default();
    let mut ok = true;
    for (id, title) in CRITERIA {
        let start = Instant::now();
        let result = run_criterion(id, &config);
        let elapsed = start.elapsed();
        match result {
            Ok(report) => {
                let in_time = elapsed <= budget(id);
                let pass = report.passed && in_time;
                ok &= pass;
                println!(
                    "criterion {id}: {} {title} ({}/{} checks, {:.1}s of {}s)",
                    if pass { "PASS" } else { "FAIL" },
                    report.total - report.failed,
                    report.total,
                    elapsed.as_secs_f64(),
                    budget(id).as_secs()
                );
                for check in report.checks.iter().filter(|c| !c.passed) {
                    println!("    {}: {}", check.label, check.witness.as_deref().unwrap_or("-"));
                }
            }
            Err(e) => {
                ok = false;
                println!("criterion {id}: FAIL {title} ({e})");
            }
        }
    }
    match criterion_ten() {
        Ok(detail) => println!("criterion 10: PASS verification job ({detail})"),
        Err(e) => {
            ok = false;
            println!("criterion 10: FAIL verification job ({e})");
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
