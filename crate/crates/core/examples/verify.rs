//! Runs the full verification suite. Takes a while in debug builds.

fn main() {
    let results = evenpoint::verify::run_all();
    for r in &results {
        println!("{}", r.line());
        for n in &r.notes {
            println!("      {n}");
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} of {} passed", results.len() - failed, results.len());
}
