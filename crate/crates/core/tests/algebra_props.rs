mod common;

use common::{context, element, homogeneous, linear_map};
use fmcalc::exterior::AlgebraElement;
use fmcalc::ledger::{FGAbelianGroup, GroupElement, LineBundleOnCurve, SplitSurfaceBundleLedger};
use proptest::prelude::*;

type Terms = Vec<(u32, i64, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0u32..64, -5i64..=5, 1i64..=3), 0..5)
}

fn cases() -> ProptestConfig {
    ProptestConfig::with_cases(512)
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn wedge_is_associative(a in terms(), b in terms(), c in terms()) {
        let ctx = context("x", 6);
        let (a, b, c) = (element(&ctx, &a), element(&ctx, &b), element(&ctx, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn wedge_distributes(a in terms(), b in terms(), c in terms()) {
        let ctx = context("x", 5);
        let (a, b, c) = (element(&ctx, &a), element(&ctx, &b), element(&ctx, &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn graded_commutativity(p in 0usize..=3, q in 0usize..=3,
                            a in prop::collection::vec((0u32..20, -4i64..=4), 1..4),
                            b in prop::collection::vec((0u32..20, -4i64..=4), 1..4)) {
        let ctx = context("x", 6);
        let x = homogeneous(&ctx, p, &a);
        let y = homogeneous(&ctx, q, &b);
        let sign = if (p * q) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(&x * &y, (&y * &x).scale_int(sign));
    }

    #[test]
    fn pullback_is_functorial(f in prop::collection::vec(-2i64..=2, 16), g in prop::collection::vec(-2i64..=2, 16),
                              a in terms()) {
        let (x, y, z) = (context("x", 3), context("y", 4), context("z", 4));
        // f: X → Y, g: Y → Z
        let fm = linear_map(&x, &y, &f);
        let gm = linear_map(&y, &z, &g);
        let a = element(&z, &a);
        let two_step = a.pullback(&gm).unwrap().pullback(&fm).unwrap();
        prop_assert_eq!(a.pullback(&fm.then(&gm).unwrap()).unwrap(), two_step);
    }

    #[test]
    fn pullback_is_a_ring_map(f in prop::collection::vec(-3i64..=3, 20), a in terms(), b in terms()) {
        let (x, y) = (context("x", 5), context("y", 4));
        let fm = linear_map(&x, &y, &f);
        let (a, b) = (element(&y, &a), element(&y, &b));
        prop_assert_eq!((&a * &b).pullback(&fm).unwrap(), &a.pullback(&fm).unwrap() * &b.pullback(&fm).unwrap());
    }

    #[test]
    fn pushforward_adjunction(f in prop::collection::vec(-3i64..=3, 24), a in terms(), b in terms()) {
        let (x, y) = (context("x", 6), context("y", 4));
        let fm = linear_map(&x, &y, &f);
        let a = element(&x, &a);
        let b = element(&y, &b);
        let lhs = (&a.pushforward_along(&fm).unwrap() * &b).integrate();
        let rhs = (&a * &b.pullback(&fm).unwrap()).integrate();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_formula(f in prop::collection::vec(-3i64..=3, 24), a in terms(), b in terms()) {
        let (x, y) = (context("x", 6), context("y", 4));
        let fm = linear_map(&x, &y, &f);
        let a = element(&x, &a);
        let b = element(&y, &b);
        let lhs = (&a * &b.pullback(&fm).unwrap()).pushforward_along(&fm).unwrap();
        let rhs = &a.pushforward_along(&fm).unwrap() * &b;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fiber_integration_is_pushforward(a in terms()) {
        let x = context("x", 6);
        let a = element(&x, &a);
        let kept = fmcalc::exterior::GeneratorSet::new(["x0", "x1", "x2", "x3"]).unwrap();
        let proj = fmcalc::exterior::LinearMap::from_index_map(&x, &kept, &[0, 1, 2, 3]).unwrap();
        let direct = a.fiber_integrate(&[4, 5]).unwrap().reinterpret(&kept).unwrap();
        prop_assert_eq!(direct, a.pushforward_along(&proj).unwrap());
    }

    #[test]
    fn exp_is_a_homomorphism(a in prop::collection::vec((0u32..20, -3i64..=3), 0..4),
                             b in prop::collection::vec((0u32..20, -3i64..=3), 0..4)) {
        let ctx = context("x", 6);
        let x = homogeneous(&ctx, 2, &a);
        let y = homogeneous(&ctx, 2, &b);
        prop_assert_eq!((&x + &y).exp().unwrap(), &x.exp().unwrap() * &y.exp().unwrap());
    }

    #[test]
    fn ledger_tensor_laws(d1 in -6i64..=6, d2 in -6i64..=6, d3 in -6i64..=6,
                          s in prop::collection::vec(-5i64..=5, 6), k in -4i64..=4) {
        let g = FGAbelianGroup::free(["p", "q"]);
        let el = |i: usize| GroupElement::generator(&g, 0).scale(s[i]).add(&GroupElement::generator(&g, 1).scale(s[i + 3]));
        let line = |deg: i64, i: usize| LineBundleOnCurve { degree: deg, sum: el(i) };
        let (a, b, c) = (line(d1, 0), line(d2, 1), line(d3, 2));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert!(a.tensor(&a.dual()).is_trivial());
        prop_assert_eq!(a.tensor(&b).pow(k), a.pow(k).tensor(&b.pow(k)));
        let x = el(1);
        prop_assert_eq!(a.tensor(&b).translate(&x), a.translate(&x).tensor(&b.translate(&x)));
        let sa = SplitSurfaceBundleLedger::new(a.clone(), b.clone());
        let sb = SplitSurfaceBundleLedger::new(c.clone(), a.clone());
        prop_assert_eq!(sa.tensor(&sb).ns(), (sa.ns().0 + sb.ns().0, sa.ns().1 + sb.ns().1));
        prop_assert_eq!(sa.tensor(&sb).dual(), sa.dual().tensor(&sb.dual()));
    }
}

#[test]
fn top_degree_integration() {
    let ctx = context("x", 4);
    let top = AlgebraElement::top(&ctx);
    assert_eq!(top.integrate(), fmcalc::exterior::rat(1));
    let e = element(&ctx, &[(0b0111, 2, 1)]);
    assert_eq!(e.integrate(), fmcalc::exterior::rat(0));
}
