//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use superdim::selftest::{run_criterion, Config, CRITERIA};
use superdim::Exec;

const SEED: u64 = 0;
const PER_CHECK_LIMIT: Duration = Duration::from_secs(10);

fn line(id: u8, title: &str, passed: bool, summary: &str, elapsed: Duration) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {id:>2} [{verdict}] {title}: {summary} ({:.2}s)",
        elapsed.as_secs_f64()
    );
}

fn selftest_json() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_superdim"))
        .args(["selftest", "--json", "--seed", &SEED.to_string()])
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    if !out.status.success() {
        return Err(format!("selftest exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> (bool, String) {
    match (selftest_json(), selftest_json()) {
        (Ok(a), Ok(b)) if a == b => (true, format!("two runs, {} identical bytes", a.len())),
        (Ok(a), Ok(b)) => (
            false,
            format!("outputs differ ({} vs {} bytes)", a.len(), b.len()),
        ),
        (Err(e), _) | (_, Err(e)) => (false, e),
    }
}

fn main() -> ExitCode {
    let cfg = Config {
        seed: SEED,
        exec: Exec::Parallel,
    };
    let mut all = true;
    for &(id, title) in CRITERIA {
        let start = Instant::now();
        let r = run_criterion(id, &cfg);
        let elapsed = start.elapsed();
        let passed = r.passed && elapsed < PER_CHECK_LIMIT;
        let summary = match r.failures.first() {
            Some(f) => format!(
                "{} of {} checks failed, first: {f}",
                r.failures.len(),
                r.checks
            ),
            None if !passed => format!("{} checks, over the time limit", r.checks),
            None => format!("{} checks", r.checks),
        };
        line(id, title, passed, &summary, elapsed);
        all &= passed;
    }
    let start = Instant::now();
    let (passed, summary) = determinism();
    line(
        10,
        "selftest --json is byte-identical across runs",
        passed,
        &summary,
        start.elapsed(),
    );
    all &= passed;
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
