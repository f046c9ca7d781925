use fmcalc::ledger::{FGAbelianGroup, GroupElement};
use fmcalc::mukai::{binomial, chi_l_equals_ell, verlinde_count, MukaiVector, Side};
use fmcalc::theta_calc::{
    jacobian_chain, chain_symbols, genus_g_sections, pb_match, alpha_family, pull_mult_theta, section_decomposition,
    theta_minus_delta, CheckStatus, ThetaSymbolClass,
};
use fmcalc::varieties::SurfaceContext;
use num_bigint::BigInt;

#[test]
fn multiplication_pullback_is_functorial() {
    let (g, kappa, q) = chain_symbols();
    let c = ThetaSymbolClass {
        theta: 2,
        theta_minus: -1,
        point: kappa.add(&q.scale(3)),
        genus: 2,
    };
    for m in -5..=5 {
        for n in -5..=5 {
            assert_eq!(pull_mult_theta(m, &pull_mult_theta(n, &c)), pull_mult_theta(m * n, &c));
            assert_eq!(pull_mult_theta(n, &c).polarization(), n * n * c.polarization());
        }
    }
    assert_eq!(pull_mult_theta(1, &c), c);
    assert!(pull_mult_theta(0, &c).point.is_zero());
    let _ = g;
}

#[test]
fn chain_for_all_ranks_and_genera() {
    let (_, kappa, q) = chain_symbols();
    let delta = theta_minus_delta(&kappa);
    for g in 1..=3 {
        for r in 1..=6 {
            let c = jacobian_chain(r, &q, &delta, g).unwrap();
            assert_eq!(c.point, c.alpha.scale(r));
            assert!(c.shadow_a.is_zero());
            assert!(c.shadow_pair.is_zero());
        }
    }
}

#[test]
fn pb_match_sweep() {
    let mut seen = 0;
    for r in 1..=4i64 {
        for s in 1..=4i64 {
            for chi in -3..=1i64 {
                for chi_p in -3..=1i64 {
                    for m in -4..=8i64 {
                        let n = -r * chi_p - s * chi - m;
                        let v = MukaiVector::abelian(r, 1, m, chi);
                        let w = MukaiVector::abelian(s, 1, n, chi_p);
                        let out = pb_match(&v, &w).unwrap();
                        assert!(out.pass, "{v} {w}: {out:?}");
                        assert_eq!((out.lhs, out.rhs), fmcalc::mukai::pb_sides(&v, &w).unwrap());
                        seen += 1;
                    }
                }
            }
        }
    }
    assert!(seen > 1000);
}

#[test]
fn alpha_family_is_independent_of_c() {
    let g = FGAbelianGroup::free(["c", "e"]);
    let c = GroupElement::generator(&g, 0);
    for r in 1..=5 {
        for s in 1..=5 {
            for chi in -3..=2 {
                let out = alpha_family(r, s, chi, -1, &c).unwrap();
                assert!(out.pass);
                assert_eq!(out.c_exponent, BigInt::from(0));
                assert_eq!(out.chain.total.fiber.degree, r + s);
            }
        }
    }
}

#[test]
fn verlinde_consistency() {
    for r in 3..=5 {
        for chi in -3..=-1 {
            let v = MukaiVector::abelian(r, 1, -r * chi, chi);
            let ell = 2 * v.d_v().unwrap();
            let plus = verlinde_count(&v, &v, Side::Plus).unwrap();
            assert_eq!(plus.chi_l, r * r * ell);
            assert!(chi_l_equals_ell(&v, &v).unwrap().pass);
            assert_eq!(plus.count, BigInt::from(r * r) * binomial(ell, ell / 2));
            let dec = section_decomposition(&v, &v).unwrap();
            assert!(dec.pass(), "{dec:?}");
            let minus = verlinde_count(&v, &v, Side::Minus).unwrap();
            // the transformed pair has rank |χ|
            assert_eq!(minus.count, BigInt::from(chi * chi) * binomial(ell, ell / 2));
        }
    }
    let v = MukaiVector::abelian(3, 1, 3, -1);
    assert_eq!(verlinde_count(&v, &v, Side::Plus).unwrap().count, BigInt::from(8316));
}

#[test]
fn genus_g_reports() {
    for g in 2..=4 {
        let s = SurfaceContext::with_genus(g).unwrap();
        let r = 3;
        // orthogonality on C×F: m_v + m_w = −r(χ_v + χ_w)
        let v = MukaiVector::split(&s, r, 1, 4, -2);
        let w = MukaiVector::split(&s, r, 1, 8, -2);
        let rep = genus_g_sections(&v, &w).unwrap();
        assert_eq!(rep.base_case_chi, -1);
        assert_eq!(rep.torsion, BigInt::from(r).pow(2 * g as u32));
        assert_eq!(rep.d_v + rep.d_w, rep.stated_sum);
        assert_eq!(rep.status, CheckStatus::Unresolved);
    }
}
