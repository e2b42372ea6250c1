use std::process::ExitCode;

fn main() -> ExitCode {
    let outcomes = malcev_verify::run_all();
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", o.line());
        if !o.passed() {
            failed += 1;
            if !o.in_time() {
                println!("    over the time limit");
            }
            for d in o.result.details.iter().filter(|d| d.starts_with("unexpected")) {
                println!("    {d}");
            }
        }
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
