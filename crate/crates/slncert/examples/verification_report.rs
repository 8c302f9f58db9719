//! Running the full suite programmatically and rendering the
//! deterministic line-delimited report.

use slncert::suite::{run_suite, CheckKind, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        n: 2,
        l: 3,
        p: Some(3),
        checks: CheckKind::ALL.to_vec(),
        seed: 7,
        workers: None,
        output_path: None,
    };
    let report = run_suite(&config).unwrap();
    print!("{}", report.render());
}
