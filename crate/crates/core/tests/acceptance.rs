use std::process::ExitCode;

use evenpoint::verify::{self, CriterionResult};

fn main() -> ExitCode {
    let criteria: [fn() -> CriterionResult; 14] = [
        verify::a1,
        verify::a2,
        verify::a3,
        verify::a4,
        verify::a5,
        verify::a6,
        verify::a7,
        verify::a8,
        verify::a9,
        verify::a10,
        verify::a11,
        verify::a12,
        verify::a13,
        verify::a14,
    ];
    let mut failed = Vec::new();
    for run in criteria {
        let r = run();
        println!("{}", r.line());
        for n in &r.notes {
            println!("      {n}");
        }
        if !r.passed {
            failed.push(r.id);
        }
    }
    println!();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {} of {} failed: {}",
            failed.len(),
            criteria.len(),
            failed.join(", ")
        );
        ExitCode::FAILURE
    }
}
