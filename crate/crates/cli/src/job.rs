use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::Parser;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Cli;
use crate::{commands, exit_code, UsageError};

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub tasks: Vec<Task>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub id: Option<String>,
    pub command: String,
    /// Flag name to value; `true` stands for a bare flag.
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default)]
    pub expect: Expect,
}

#[derive(Deserialize, Serialize, Debug, Clone, Copy, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    #[default]
    Pass,
    Fail,
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize, Debug)]
pub struct TaskReport {
    pub id: String,
    pub command: String,
    pub expect: Expect,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub exit: i32,
}

#[derive(Serialize, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Serialize, Debug)]
pub struct JobReport {
    pub tasks: Vec<TaskReport>,
    pub summary: Summary,
}

impl JobReport {
    /// 0 when every task met its expectation, otherwise the code of the first error or 1.
    pub fn exit_code(&self) -> i32 {
        if let Some(t) = self.tasks.iter().find(|t| t.status == Status::Error) {
            return t.exit;
        }
        if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }
}

pub fn load(path: &Path) -> Result<JobSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())).into())
}

fn argv(task: &Task) -> Result<Vec<String>> {
    let mut out = vec!["orbitforge".to_string(), task.command.clone()];
    for (key, value) in &task.params {
        match value {
            Value::Bool(true) => out.push(format!("--{key}")),
            Value::Bool(false) => {}
            Value::String(s) => out.push(format!("--{key}={s}")),
            Value::Number(n) => out.push(format!("--{key}={n}")),
            other => return Err(UsageError(format!("parameter `{key}` has unsupported value {other}")).into()),
        }
    }
    Ok(out)
}

fn run_task(index: usize, task: &Task) -> TaskReport {
    let id = task.id.clone().unwrap_or_else(|| format!("task-{}", index + 1));
    let result = argv(task)
        .and_then(|args| Cli::try_parse_from(args).map_err(|e| UsageError(e.to_string().trim().to_string()).into()))
        .and_then(|cli| commands::run(&cli.command));
    match result {
        Ok(outcome) => {
            let met = outcome.passed == (task.expect == Expect::Pass);
            TaskReport {
                id,
                command: task.command.clone(),
                expect: task.expect,
                status: if met { Status::Pass } else { Status::Fail },
                payload: outcome.payload,
                witnesses: outcome.witnesses,
                error: None,
                exit: 0,
            }
        }
        Err(e) => TaskReport {
            id,
            command: task.command.clone(),
            expect: task.expect,
            status: Status::Error,
            payload: Value::Null,
            witnesses: Vec::new(),
            error: Some(format!("{e:#}")),
            exit: exit_code(&e),
        },
    }
}

/// Runs the tasks concurrently and assembles the reports in input order.
pub fn run(spec: &JobSpec) -> JobReport {
    let timed: Vec<(TaskReport, u128)> = spec
        .tasks
        .par_iter()
        .enumerate()
        .map(|(i, task)| {
            let start = Instant::now();
            let report = run_task(i, task);
            (report, start.elapsed().as_millis())
        })
        .collect();
    let mut summary = Summary { total: timed.len(), ..Summary::default() };
    let mut tasks = Vec::with_capacity(timed.len());
    for (report, ms) in timed {
        eprintln!("{} {} {:?} {ms} ms", report.id, report.command, report.status);
        match report.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Error => summary.errors += 1,
        }
        tasks.push(report);
    }
    JobReport { tasks, summary }
}
