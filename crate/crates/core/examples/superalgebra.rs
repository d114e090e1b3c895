//! The Lie superalgebra behind the BRST complex: currents of the block lower
//! triangular subalgebra, odd ghosts, grades, brackets and the level form.
//!
//! Usage: cargo run --example superalgebra [m n l]

use rectw::superalgebra::{kappa_b, Algebra, Kind};
use rectw::Instance;

fn main() {
    let a: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, l) = if a.len() == 3 { (a[0], a[1], a[2]) } else { (2, 1, 2) };
    let inst = Instance::new(m, n, l).expect("valid instance");
    let alg = Algebra::a_mn(inst);
    let currents = alg.gens().iter().filter(|g| g.kind == Kind::Current).count();
    println!("{inst}: {} generators, {currents} currents, {} ghosts", alg.len(), alg.len() - currents);

    let j12 = alg.id(Kind::Current, 1, 2).unwrap();
    let n1 = inst.big_n() + 1;
    let psi = alg.id(Kind::Ghost, n1, 1).unwrap();
    let show = |t: &[(u16, i64)]| t.iter().map(|&(g, k)| format!("{k:+} {}", alg.label(g))).collect::<Vec<_>>().join(" ");
    println!("[{}, {}] = {}", alg.label(j12), alg.label(psi), show(alg.bracket(j12, psi)));
    println!("grade({}) = {}", alg.label(psi), alg.gen(psi).grade);
    println!("κ(e_{{{n1},1}}, e_{{1,{n1}}}) = {}", kappa_b(&inst, n1, 1, 1, n1));
    println!("κ(e_{{1,1}}, e_{{1,1}}) = {}", kappa_b(&inst, 1, 1, 1, 1));
}
