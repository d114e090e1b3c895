//! n-th products, normal ordering and translation in the universal affine
//! vertex superalgebra, with the engine's identity checks.

use rectw::foundation::Scalar;
use rectw::superalgebra::Kind;
use rectw::vertex::props::{engine_suite, quasi_symmetry};
use rectw::w_construct::Ambient;
use rectw::Instance;

fn main() {
    let amb = Ambient::new(Instance::new(2, 1, 2).unwrap());
    let vx = &amb.vx;
    let e = |a, b, d| amb.cur(a, b, d).unwrap();
    let u = vx.nop(&e(1, 1, 1), &e(2, 2, 1));
    let v = e(2, 1, 1);
    println!("u = {}", vx.display(&u));
    println!("v = {}", vx.display(&v));
    for n in 0..=2 {
        println!("u_({n}) v = {}", vx.display(&vx.nth_product(&u, n, &v)));
    }
    println!("∂u = {}", vx.display(&vx.translate(&u)));
    println!("quasi-symmetry residual: {}", vx.display(&quasi_symmetry(vx, &u, 0, &v)));
    let e11 = vx.alg.id(Kind::Current, 1, 1).unwrap();
    println!("e11[1] e11[-1]|0> = {}", vx.display(&vx.mode_act(e11, 1, &e(1, 1, 1))));
    let psi = amb.ghost(4, 1, 1).unwrap();
    println!("ψ ψ = {}", vx.display(&vx.nop(&psi, &psi.scale(&Scalar::one()))));
    let checks = engine_suite(vx, 2);
    let ok = checks.iter().filter(|c| c.passed()).count();
    println!("engine identities up to weight 2: {ok}/{} pass", checks.len());
}
