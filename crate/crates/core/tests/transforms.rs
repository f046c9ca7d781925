use fmcalc::exterior::{rat, AlgebraElement};
use fmcalc::fm_engine::{
    canonical_ab, phi_action, phi_minus_det_chain, fixed_det_numerics, fixed_det_suite, rs_kernel, rsdagger_kernel,
    transform, transform_traced, u_fiber_kernel, v_kernel_checks, DecorationRule, KernelSpec, SplitPoint,
    TransformResult,
};
use fmcalc::ledger::{fixed_det_chains, fixed_det_symbol_group, FGAbelianGroup, GroupElement, SolutionSet};
use fmcalc::mukai::{product_chi, MukaiVector, Side};
use fmcalc::varieties::SurfaceContext;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn euler_form(v: &MukaiVector, w: &MukaiVector) -> AlgebraElement {
    &v.ch().dual().unwrap() * &w.ch()
}

#[test]
fn relative_transform_of_fiber_and_point() {
    // a fiber b×F carries the class of 1 on F, which goes to −pt; a point goes to the fiber
    let s = SurfaceContext::abelian();
    let f = MukaiVector::from_ch(&s, s.fiber()).unwrap();
    let omega = MukaiVector::from_ch(&s, &s.omega()).unwrap();
    let tf = transform(&f, rsdagger_kernel()).unwrap();
    assert_eq!(tf.ch(), -&s.omega());
    let tw = transform(&omega, rsdagger_kernel()).unwrap();
    assert_eq!(tw.ch(), *s.fiber());
}

#[test]
fn transforms_preserve_the_euler_form() {
    let s = SurfaceContext::abelian();
    let vs = [
        MukaiVector::abelian(3, 1, 3, -1),
        MukaiVector::abelian(2, -1, 4, 0),
        MukaiVector::abelian(0, 2, 1, 5),
        MukaiVector::abelian(1, 0, 0, 0),
        MukaiVector::from_ch(&s, &s.omega()).unwrap(),
    ];
    for k in [rs_kernel(), rsdagger_kernel()] {
        for v in &vs {
            for w in &vs {
                let before = euler_form(v, w).integrate();
                let after = euler_form(&transform(v, k).unwrap(), &transform(w, k).unwrap()).integrate();
                assert_eq!(before, after, "{} on {v}, {w}", k.name());
            }
        }
    }
}

#[test]
fn cli_style_examples() {
    // O(σ+5f) itself has χ = 5; with χ = −1 six points each add −f
    let t = transform(&"1:(1σ+5f):5".parse().unwrap(), rsdagger_kernel()).unwrap();
    assert_eq!(t.rank(), 1);
    assert_eq!(t.split_c1(), Some((-1, 5)));
    let t = transform(&"1:(1σ+5f):-1".parse().unwrap(), rsdagger_kernel()).unwrap();
    assert_eq!(t.rank(), 1);
    assert_eq!(t.split_c1(), Some((-1, -1)));
    let t = transform(&"0:(0):1".parse().unwrap(), rs_kernel()).unwrap();
    assert_eq!(t, MukaiVector::abelian(1, 0, 0, 0));
}

#[test]
fn semihomogeneous_kernels() {
    for r in 2..=7i64 {
        for d in 1..=7i64 {
            if r.gcd(&d) != 1 {
                continue;
            }
            let (a, b) = canonical_ab(r, d).unwrap();
            assert_eq!(a * d + b * r, 1);
            assert!(0 < a && a < r);
            let u = u_fiber_kernel(a, b, r, d).unwrap();
            let ch = u.class();
            assert_eq!(ch.integrate(), rat(-d));
            let c1 = ch.homogeneous_part(2);
            let expected = c1.scale(&fmcalc::exterior::ratio(1, a)).exp().unwrap().scale_int(a);
            assert_eq!(*ch, expected);
            assert!(ch.terms().values().all(|q| q.is_integer()));
        }
    }
}

#[test]
fn fixed_determinant_sweep() {
    for (r, d, m, chi) in [(2, 1, 2, -1), (3, 2, 5, -1), (4, 3, 1, -2), (5, 2, 3, 0), (5, 3, 0, -1)] {
        let rep = fixed_det_suite(r, d, m, chi).unwrap();
        assert!(rep.pass(), "{r},{d},{m},{chi}: {:#?}", rep.checks);
        assert!(v_kernel_checks(rep.a, rep.b, r, d).unwrap().pass());
        let p = fixed_det_numerics(r, d, m, chi).unwrap();
        let g = fixed_det_symbol_group(p.d_v as usize);
        let z: Vec<_> = (0..p.d_v as usize)
            .map(|i| (GroupElement::generator(&g, 2 * i), GroupElement::generator(&g, 2 * i + 1)))
            .collect();
        let mu = GroupElement::generator(&g, g.rank() - 1);
        let chains = fixed_det_chains(&p, &z, &mu).unwrap();
        match &chains.solution {
            SolutionSet::Unique(x) => assert!(x.iter().all(GroupElement::is_zero)),
            other => panic!("expected the zero solution, got {other:?}"),
        }
    }
}

fn random_point(g: &std::sync::Arc<FGAbelianGroup>, rng: &mut StdRng) -> SplitPoint {
    let el = |rng: &mut StdRng| {
        (0..g.rank()).fold(GroupElement::zero(g), |acc, i| {
            acc.add(&GroupElement::generator(g, i).scale(rng.gen_range(-9..=9)))
        })
    };
    SplitPoint::new(el(rng), el(rng))
}

#[test]
fn decoration_rules_are_additive() {
    let g = FGAbelianGroup::free(["p", "q", "s"]);
    let mut rng = StdRng::seed_from_u64(7);
    let rules = [
        DecorationRule::Rsdagger,
        DecorationRule::Rs,
        DecorationRule::U { a: 2, b: -1, r: 3, d: 2 },
        DecorationRule::U { a: 3, b: -2, r: 5, d: 2 },
    ];
    for case in 0..100 {
        let rule = rules[case % rules.len()];
        let (t1, y1, t2, y2) = (
            random_point(&g, &mut rng),
            random_point(&g, &mut rng),
            random_point(&g, &mut rng),
            random_point(&g, &mut rng),
        );
        let (a1, b1) = rule.apply(&t1, &y1);
        let (a2, b2) = rule.apply(&t2, &y2);
        let (a, b) = rule.apply(&t1.add(&t2), &y1.add(&y2));
        assert_eq!(a, a1.add(&a2));
        assert_eq!(b, b1.add(&b2));
    }
}

#[test]
fn phi_shifts_are_linear_in_the_point() {
    let g = FGAbelianGroup::free(["p_B", "p_F"]);
    let mut rng = StdRng::seed_from_u64(3);
    for (v, side) in [
        (MukaiVector::abelian(3, 1, 3, -1), Side::Plus),
        (MukaiVector::abelian(3, 1, 3, -1), Side::Minus),
        (MukaiVector::abelian(3, 2, 5, -1), Side::Minus),
    ] {
        let x = random_point(&g, &mut rng);
        let y = random_point(&g, &mut rng);
        let ox = phi_action(&v, side, &x).unwrap();
        let oy = phi_action(&v, side, &y).unwrap();
        let oxy = phi_action(&v, side, &x.add(&y)).unwrap();
        assert_eq!(oxy.z_shift, ox.z_shift.add(&oy.z_shift));
        assert_eq!(oxy.twist, ox.twist.add(&oy.twist));
    }
}

#[test]
fn phi_minus_determinant_closes() {
    for (r, m, chi) in [(3, 3, -1), (2, 0, 1), (4, -2, 3)] {
        let v = MukaiVector::abelian(r, 1, m, chi);
        let states = phi_minus_det_chain(&v, &fmcalc::fm_engine::generic_point()).unwrap();
        let last = &states.last().unwrap().1;
        assert_eq!(last.ns(), (-m, -1));
        assert!(last.base.sum.is_zero() && last.fiber.sum.is_zero(), "{last}");
    }
}

#[test]
fn traces_replay() {
    let v = MukaiVector::abelian(3, 1, 3, -1);
    for spec in ["rs", "rsdagger", "rs-inverse", "u:2,-1,3,2", "udual:1,0,3,1"] {
        let k: KernelSpec = spec.parse().unwrap();
        let out = transform_traced(&v, k).unwrap();
        assert_eq!(out.replay().unwrap().output, out.output);
        let json = serde_json::to_string(&out.trace).unwrap();
        let steps: Vec<fmcalc::fm_engine::TraceStep> = serde_json::from_str(&json).unwrap();
        let again = steps
            .into_iter()
            .try_fold(TransformResult::start(out.input.clone()), |acc, s| acc.apply(s))
            .unwrap();
        assert_eq!(again.output, out.output);
    }
}

#[test]
fn orthogonality_is_symmetric() {
    for m in -3..=6 {
        let v = MukaiVector::abelian(3, 1, m, -1);
        let w = MukaiVector::abelian(4, 1, 7 - m, -1);
        assert_eq!(product_chi(&v, &w).unwrap(), 0);
        assert_eq!(product_chi(&w, &v).unwrap(), 0);
    }
}
