//! Operator products among W^(1) and W^(2) with the level c symbolic, and the
//! mode commutator they induce.

use rectw::ope_suite::{ope_suite, OpeCtx};
use rectw::w_construct::Ambient;
use rectw::Instance;

fn main() {
    let amb = Ambient::new(Instance::new(2, 1, 2).unwrap());
    let w = amb.build_w();
    let vx = &amb.vx;
    println!("(W1_11)_(1) W2_11 = {}", vx.display(&vx.nth_product(w.w1(1, 1), 1, w.w2(1, 1))));
    println!("(W1_11)_(2) W2_11 = {}", vx.display(&vx.nth_product(w.w1(1, 1), 2, w.w2(1, 1))));
    for (s, t) in vx.mode_commutator(w.w1(1, 2), 1, w.w2(2, 1), -1) {
        println!("[W1_12 t^1, W2_21 t^-1] ∋ ({}) t^{t}", vx.display(&s));
    }
    let checks = ope_suite(&OpeCtx { amb: &amb, w: &w }, None);
    let ok = checks.iter().filter(|c| c.passed()).count();
    println!("OPE identities: {ok}/{} pass", checks.len());
}
