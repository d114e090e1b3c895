//! Worked values stated with the construction: forms, brackets, modes,
//! generators, product coefficients, Cartan data and the images of Φ and ev.

use rectw::appendix_suite::leading_component;
use rectw::foundation::Scalar;
use rectw::ope_suite::OpeCtx;
use rectw::superalgebra::{kappa_b, Algebra, Kind};
use rectw::vertex::basis::words_up_to;
use rectw::vertex::{State, Vertex};
use rectw::w_construct::{Ambient, D0Reading, D0};
use rectw::yangian::{ev_images, phi_images, psi_translate, CartanData, EvReading, ModeExpr, PhiReading, PsiReading, RelExpr, YGen, YParams};
use rectw::Instance;

fn i212() -> Instance {
    Instance::new(2, 1, 2).unwrap()
}

fn alpha() -> Scalar {
    Scalar::alpha()
}

fn c() -> Scalar {
    Scalar::c()
}

/// Two mode expressions agree on every basis word up to `d`.
fn same_action(vx: &Vertex, a: &ModeExpr, b: &ModeExpr, d: u32) {
    for w in words_up_to(&vx.alg, d) {
        let v = State::word(w, Scalar::one());
        assert_eq!(a.apply(vx, &v), b.apply(vx, &v));
    }
}

#[test]
fn grade_of_block_lower_unit() {
    let alg = Algebra::a_mn(i212());
    assert_eq!(alg.gen(alg.id(Kind::Current, 4, 1).unwrap()).grade, -1);
    assert_eq!(alg.gen(alg.id(Kind::Current, 1, 1).unwrap()).grade, 0);
}

#[test]
fn kappa_values() {
    let inst = i212();
    assert_eq!(kappa_b(&inst, 4, 1, 1, 4), alpha());
    assert_eq!(kappa_b(&inst, 1, 1, 1, 1), alpha().sub(&c()).add(&Scalar::one()));
    let alg = Algebra::a_mn(inst);
    let psi = alg.id(Kind::Ghost, 4, 1).unwrap();
    for j in 0..alg.len() as u16 {
        if alg.gen(j).kind == Kind::Current {
            assert!(alg.form(j, psi).is_zero());
        }
    }
}

#[test]
fn ghost_brackets() {
    let alg = Algebra::a_mn(i212());
    let ghosts: Vec<u16> = (0..alg.len() as u16).filter(|&g| alg.gen(g).kind == Kind::Ghost).collect();
    for &a in &ghosts {
        for &b in &ghosts {
            assert!(alg.bracket(a, b).is_empty());
        }
    }
    let j12 = alg.id(Kind::Current, 1, 2).unwrap();
    let p41 = alg.id(Kind::Ghost, 4, 1).unwrap();
    assert_eq!(alg.bracket(j12, p41), &[(alg.id(Kind::Ghost, 4, 2).unwrap(), -1)]);
}

#[test]
fn mode_actions_on_currents() {
    let amb = Ambient::new(i212());
    let vx = &amb.vx;
    let e11 = vx.alg.id(Kind::Current, 1, 1).unwrap();
    let got = vx.mode_act(e11, 1, &amb.cur(1, 1, 1).unwrap());
    assert_eq!(got, State::vacuum().scale(&alpha().sub(&c()).add(&Scalar::one())));
    let psi = amb.ghost(4, 1, 1).unwrap();
    assert!(vx.nop(&psi, &psi).is_zero());
    for (a, b) in [((4, 1), (1, 1)), ((2, 2), (5, 5)), ((3, 3), (3, 3))] {
        let (u, v) = (amb.cur(a.0, a.1, 1).unwrap(), amb.cur(b.0, b.1, 1).unwrap());
        let (ga, gb) = (vx.alg.id(Kind::Current, a.0, a.1).unwrap(), vx.alg.id(Kind::Current, b.0, b.1).unwrap());
        assert_eq!(vx.nth_product(&u, 1, &v), State::vacuum().scale(vx.alg.form(ga, gb)));
    }
}

#[test]
fn first_generators_and_cache_size() {
    let amb = Ambient::new(i212());
    let w = amb.build_w();
    assert_eq!(w.gens.len(), 27);
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(w.w1(i, j), &amb.w1_closed(i, j));
            assert_eq!(w.w2(i, j), &amb.w2_closed(i, j));
            assert_eq!(leading_component(&amb.vx.alg, w.w1(i, j)), *w.w1(i, j));
            let lead = amb.cur(3 + j, i, 1).unwrap();
            assert_eq!(leading_component(&amb.vx.alg, w.w2(i, j)), lead);
        }
    }
    let one = Ambient::new(Instance::new(2, 1, 1).unwrap());
    let w1 = one.build_w();
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(w1.w1(i, j), &one.cur(j, i, 1).unwrap());
        }
    }
}

#[test]
fn d0_kills_vacuum_and_generators() {
    let amb = Ambient::new(i212());
    let d0 = D0::new(&amb, D0Reading::ADOPTED);
    assert!(d0.apply(&State::vacuum()).unwrap().is_zero());
    let w = amb.build_w();
    for s in w.gens.values() {
        assert!(d0.apply(s).unwrap().is_zero());
    }
}

#[test]
fn product_formula_examples() {
    let amb = Ambient::new(i212());
    let w = amb.build_w();
    let ctx = OpeCtx { amb: &amb, w: &w };
    let vx = &amb.vx;
    assert!(ctx.w1_0_w2_rhs(1, 1, 1, 1).is_zero());
    assert!(vx.nth_product(w.w1(1, 1), 0, w.w2(1, 1)).is_zero());
    let lhs = vx.nth_product(w.w1(1, 2), 0, w.w2(3, 1));
    assert_eq!(lhs, ctx.w1_0_w2_rhs(1, 2, 3, 1));
    assert_eq!(&lhs, w.w2(3, 2));
    let k = alpha().sub(&c().scale_int(2).sub(&Scalar::one()));
    assert_eq!(vx.nth_product(w.w1(1, 1), 1, w.w2(1, 1)), w.w1(1, 1).scale(&k));
    assert_eq!(ctx.w1_1_w2_rhs(1, 1, 1, 1), w.w1(1, 1).scale(&k));
    for s in 3..=5 {
        assert!(vx.nth_product(w.w1(1, 2), s, w.w2(2, 1)).is_zero());
    }
    let level = alpha().scale_int(2).sub(&c().scale_int(4)).add(&Scalar::int(2));
    assert_eq!(vx.nth_product(w.w1(1, 1), 1, w.w1(1, 1)), State::vacuum().scale(&level));
}

#[test]
fn leading_part_of_iterated_product() {
    let amb = Ambient::new(Instance::new(2, 1, 3).unwrap());
    let w = amb.build_w();
    let x = amb.vx.nth_product(w.w2(1, 1), 0, w.w1(2, 1));
    let want = amb.cur(4, 2, 1).unwrap().add(&amb.cur(7, 5, 1).unwrap());
    assert_eq!(leading_component(&amb.vx.alg, &x), want);
}

#[test]
fn cartan_values() {
    let cd = CartanData::new(&Instance::new(3, 2, 1).unwrap());
    assert_eq!(cd.a[3][3], 0);
    assert_eq!(cd.a[0][4], 1);
    assert_eq!(cd.mmat[4][0], 1);
    let cd = CartanData::new(&Instance::new(3, 0, 1).unwrap());
    assert_eq!(cd.a[1][1], 2);
    assert_eq!(cd.a[0][2], -1);
}

#[test]
fn psi_translate_examples() {
    let inst = Instance::new(3, 2, 1).unwrap();
    let p = YParams::phi(&inst);
    let t = |g| psi_translate(&inst, &p, PsiReading::ADOPTED, g);
    assert!(matches!(t(YGen::h(0, 1)), RelExpr::Gen(g) if g == YGen::h(0, 1)));
    assert!(matches!(t(YGen::x(1, 2, 0)), RelExpr::Gen(g) if g == YGen::x(1, 2, 0)));
    let RelExpr::Lin(terms) = t(YGen::h(4, 1)) else { panic!("h_4,1 is a combination") };
    assert!(matches!(terms[1].1, RelExpr::Gen(g) if g == YGen::h(4, 0)));
    assert_eq!(terms[1].0, p.eps1.sub(&p.eps2).neg());
}

#[test]
fn phi_image_examples() {
    let inst = Instance::new(3, 0, 2).unwrap();
    let amb = Ambient::new_c0(inst);
    let w = amb.build_w().specialize_c0();
    let im = phi_images(&w, PhiReading::ADOPTED, None).unwrap();
    let vx = &amb.vx;
    for i in 1..3 {
        same_action(vx, im.get(&YGen::x(-1, i, 0)), &ModeExpr::mode(w.w1(i, i + 1), 0), 2);
    }
    let h00 = ModeExpr::mode(w.w1(3, 3), 0)
        .plus(ModeExpr::mode(w.w1(1, 1), 0), &Scalar::int(-1))
        .add(ModeExpr::scalar(alpha().scale_int(2)));
    same_action(vx, im.get(&YGen::h(0, 0)), &h00, 2);
    same_action(vx, im.get(&YGen::x(1, 0, 0)), &ModeExpr::mode(w.w1(1, 3), 1), 2);
    assert!(ModeExpr::mode(w.w1(1, 2), 0).apply(vx, &State::vacuum()).is_zero());
    let v = amb.cur(1, 1, 1).unwrap();
    assert_eq!(ModeExpr::scalar(alpha().scale_int(2)).apply(vx, &v), v.scale(&alpha().scale_int(2)));
}

#[test]
fn ev_image_examples() {
    let inst = Instance::new(3, 2, 1).unwrap();
    let p = YParams::phi(&inst);
    let vx = Vertex::new(Algebra::gl_str(3, 2, Scalar::alpha()));
    let im = ev_images(&vx, &inst, &p, EvReading::ADOPTED, None).unwrap();
    let st = |i, j| vx.gen_state(vx.alg.id(Kind::Current, i, j).unwrap());
    for i in 1..5 {
        same_action(&vx, im.get(&YGen::x(1, i, 0)), &ModeExpr::mode(&st(i, i + 1), 0), 1);
    }
    same_action(&vx, im.get(&YGen::x(1, 0, 0)), &ModeExpr::mode(&st(5, 1), 1), 1);
    let printed = ev_images(&vx, &inst, &p, EvReading::PRINTED, None).unwrap();
    same_action(&vx, im.get(&YGen::h(0, 1)), printed.get(&YGen::h(0, 1)), 1);
}
