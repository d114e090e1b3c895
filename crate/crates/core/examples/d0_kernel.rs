//! The BRST differential d₀ and the kernel property of every W-generator.
//!
//! Usage: cargo run --example d0_kernel [m n l]

use rectw::suites::d0_suite;
use rectw::w_construct::{Ambient, D0Reading, D0};
use rectw::Instance;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, l) = if a.len() == 3 { (a[0], a[1], a[2]) } else { (2, 1, 2) };
    let amb = Ambient::new(Instance::new(m, n, l).expect("valid instance"));
    let d0 = D0::new(&amb, D0Reading::ADOPTED);
    let x = amb.cur(m + n + 1, 1, 1).unwrap();
    println!("d0({}) = {}", amb.vx.display(&x), amb.vx.display(&d0.apply(&x).unwrap()));
    let printed = D0::new(&amb, D0Reading::PRINTED);
    let w = amb.build_w();
    let r = printed.apply(w.w2(1, 1)).unwrap();
    println!("literal d0 on W2_11 leaves {} terms", r.len());
    let checks = d0_suite(&amb, &w, None);
    let ok = checks.iter().filter(|c| c.passed()).count();
    println!("d0(W^(r)_ij) = 0: {ok}/{} generators", checks.len());
}
