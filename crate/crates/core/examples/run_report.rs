//! A suite run as the CLI performs it, printed as a JSON report.
//!
//! Usage: cargo run --example run_report [suite m n l D]

use rectw::cli::{run_suite, SuiteConfig};

fn main() {
    let a: Vec<String> = std::env::args().skip(1).collect();
    let num = |k: usize, d: usize| a.get(k).and_then(|s| s.parse().ok()).unwrap_or(d);
    let suite = a.first().map(String::as_str).unwrap_or("gen").parse().expect("known suite");
    let cfg = SuiteConfig { suite, m: num(1, 2), n: num(2, 1), l: num(3, 2), cutoff: num(4, 1) as u32, c_zero: false, jobs: None, mutate: None };
    match run_suite(&cfg, None) {
        Ok(r) => println!("{}", serde_json::to_string_pretty(&r).unwrap()),
        Err(e) => eprintln!("config error: {e}"),
    }
}
