// Running a verification suite from code and reading its report.
//
// ```bash
// cargo run --example suite_report
// ```

use prymcheck::report::Parameters;
use prymcheck::suites::{run_suite, Suite};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = Parameters { genus: 3, trials: 10, seed: 7, ..Parameters::default() };
    let (report, _) = run_suite(Suite::Cover, &params, false)?;
    print!("{}", report.to_text());
    println!("input digest {}", report.input_digest);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
