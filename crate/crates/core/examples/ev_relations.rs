//! The evaluation map into the completed enveloping algebra of 𝔤𝔩̂(m|n),
//! checked symbolically (ħ = −1) and at (ε₁, ε₂) = (1, 1).
//!
//! Usage: cargo run --release --example ev_relations [m n D]

use rectw::yangian::ev_suite;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, d) = if a.len() == 3 { (a[0], a[1], a[2] as u32) } else { (3, 2, 1) };
    match ev_suite(m, n, d, None) {
        Ok(checks) => {
            let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
            println!("(m,n) = ({m},{n}), weight ≤ {d}: {}/{} checks hold", checks.len() - failed.len(), checks.len());
            for c in failed {
                println!("  fails: {}", c.id);
            }
        }
        Err(e) => println!("rejected: {e}"),
    }
}
