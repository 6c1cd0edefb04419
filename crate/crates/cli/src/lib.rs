//! Front end: JSON jobs in, deterministic reports out.

pub mod commands;
pub mod error;
pub mod gap;
pub mod job;
pub mod presets;
pub mod report;

use std::thread;

pub use commands::run;
pub use error::CliError;
pub use job::JobSpec;
pub use report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Checks the seed policy, then runs.
pub fn execute(job: &JobSpec, format: Format) -> Result<Report, CliError> {
    if format == Format::Machine && job.options.seed.is_none() {
        return Err(CliError::Usage("machine output needs an explicit seed (--seed or options.seed)".into()));
    }
    run(job)
}

fn error_report(job: &JobSpec, e: &CliError) -> Report {
    let mut r = Report::new(job.command.as_deref().unwrap_or("?"), job.clone());
    r.status = Status::Error;
    r.primary = serde_json::Value::String(e.to_string());
    r
}

/// Runs jobs on a few threads; results keep the input order.
pub fn run_batch(jobs: &[JobSpec], format: Format) -> Vec<Report> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let mut out: Vec<Option<Report>> = vec![None; jobs.len()];
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    (w..jobs.len())
                        .step_by(workers)
                        .map(|i| (i, execute(&jobs[i], format).unwrap_or_else(|e| error_report(&jobs[i], &e))))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                out[i] = Some(r);
            }
        }
    });
    out.into_iter().map(|r| r.unwrap()).collect()
}

pub fn batch_status(reports: &[Report]) -> Status {
    if reports.iter().any(|r| r.status == Status::Error) {
        Status::Error
    } else if reports.iter().any(|r| r.status == Status::Mismatch) {
        Status::Mismatch
    } else {
        Status::Ok
    }
}
