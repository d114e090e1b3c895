//! The map Φ from the affine (super) Yangian to the universal enveloping
//! algebra of W at c = 0, checked relation by relation on the vacuum module.
//!
//! Usage: cargo run --release --example phi_relations [m n l D]

use rectw::yangian::phi_suite_fresh;
use rectw::Instance;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, l, d) = if a.len() == 4 { (a[0], a[1], a[2], a[3] as u32) } else { (3, 0, 2, 1) };
    let inst = Instance::new(m, n, l).expect("valid instance");
    match phi_suite_fresh(inst, d, None) {
        Ok(checks) => {
            let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
            println!("{inst}, weight ≤ {d}: {}/{} relations hold", checks.len() - failed.len(), checks.len());
            for c in failed {
                println!("  fails: {}", c.id);
            }
        }
        Err(e) => println!("{inst} rejected: {e}"),
    }
}
