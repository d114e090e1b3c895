//! Leading-term identities behind generation by W^(1) and W^(2): exact zero
//! products of grade −1 and grade 0 sums, and leading parts of nested products.
//!
//! Usage: cargo run --release --example appendix [m n l]

use rectw::appendix_suite::{appendix_suite, leading_component, AppendixReading};
use rectw::w_construct::Ambient;
use rectw::Instance;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, l) = if a.len() == 3 { (a[0], a[1], a[2]) } else { (2, 1, 2) };
    let inst = Instance::new(m, n, l).expect("valid instance");
    let amb = Ambient::new(inst);
    let w = amb.build_w();
    let x = amb.vx.nth_product(w.w2(1, 1), 0, w.w1(2, 1));
    println!("(W2_11)_(0) W1_21 has {} terms; leading part {}", x.len(), amb.vx.display(&leading_component(&amb.vx.alg, &x)));
    for (name, reading) in [("printed", AppendixReading::PRINTED), ("adopted", AppendixReading::ADOPTED)] {
        let checks = appendix_suite(inst, reading, None);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
        println!("{name} α coefficient: {}/{} identities hold {failed:?}", checks.len() - failed.len(), checks.len());
    }
}
