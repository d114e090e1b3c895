//! Exact scalars in ℚ[α, c]: arithmetic, specialization and evaluation.

use rectw::foundation::{Scalar, Q};

fn main() {
    let a = Scalar::alpha();
    let c = Scalar::c();
    let x = a.add(&c.scale_int(-2)).add(&Scalar::one());
    let y = a.pow(2).sub(&Scalar::frac(1, 2));
    println!("x = {x}");
    println!("y = {y}");
    println!("x·y = {}", x.mul(&y));
    println!("x·y at c = 0: {}", x.mul(&y).specialize_c0());
    println!("x·y at α = 3, c = −2: {}", x.mul(&y).eval(&Q::int(3), &Q::int(-2)));
    println!("(α²·x)/α² = {:?}", a.pow(2).mul(&x).div_alpha_pow(2).map(|s| s.to_string()));
}
