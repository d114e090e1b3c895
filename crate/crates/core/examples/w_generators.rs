//! W-generators from the column determinant of the Miura-type matrix, compared
//! with the closed forms for r = 1, 2.
//!
//! Usage: cargo run --example w_generators [m n l]

use rectw::w_construct::Ambient;
use rectw::Instance;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, l) = if a.len() == 3 { (a[0], a[1], a[2]) } else { (2, 1, 2) };
    let amb = Ambient::new(Instance::new(m, n, l).expect("valid instance"));
    let w = amb.build_w();
    println!("{} generators W^(r)_ij for r = 0..={l}", w.gens.len());
    println!("W1_11 = {}", amb.vx.display(w.w1(1, 1)));
    if l >= 2 {
        println!("W2_11 = {}", amb.vx.display(w.w2(1, 1)));
    }
    let nn = m + n;
    let mut agree = 0;
    for i in 1..=nn {
        for j in 1..=nn {
            agree += usize::from(*w.w1(i, j) == amb.w1_closed(i, j));
            if l >= 2 {
                agree += usize::from(*w.w2(i, j) == amb.w2_closed(i, j));
            }
        }
    }
    println!("closed forms reproduced: {agree}/{}", nn * nn * l.min(2));
}
