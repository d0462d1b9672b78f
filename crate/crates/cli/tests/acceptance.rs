//! Runs every acceptance criterion and prints one line per criterion.
//! A criterion passes when its checks hold and it finishes within its time budget.

use std::process::ExitCode;

use lefschetz_cli::suite::{run_all, SuiteOptions};

fn main() -> ExitCode {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let opts = SuiteOptions { seed: 1, jobs };
    let mut failed = 0;
    let outcomes = run_all(&opts, |o| {
        let ok = o.passed && o.within_budget();
        let budget = if o.within_budget() {
            String::new()
        } else {
            format!(" (over budget of {} s)", o.criterion.budget.as_secs())
        };
        println!(
            "{} criterion {:>2} [{}] {:.2}s{budget}: {}",
            if ok { "PASS" } else { "FAIL" },
            o.criterion.id,
            o.criterion.key,
            o.elapsed.as_secs_f64(),
            o.criterion.title
        );
        for d in &o.details {
            if !ok || !d.starts_with("ok:") {
                println!("       {}", d.replace('\n', "\n       "));
            }
        }
    });
    for o in &outcomes {
        failed += usize::from(!(o.passed && o.within_budget()));
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
