mod common;

use common::{abelian_groups, solver_agrees, Scrambled};
use fmcalc::ledger::{int_matrix, smith, solve_in_group, torsion_count, FGAbelianGroup, GroupElement};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn group_census() {
    let groups = abelian_groups(200);
    // number of abelian groups of order 8, 16, 200 up to isomorphism
    let count = |n: i64| groups.iter().filter(|g| g.iter().product::<i64>() == n).count();
    assert_eq!(count(8), 3);
    assert_eq!(count(16), 5);
    assert_eq!(count(200), 6);
    assert_eq!(count(1), 1);
}

#[test]
fn one_unknown_against_brute_force() {
    let mut rng = StdRng::seed_from_u64(11);
    for factors in abelian_groups(200) {
        let g = Scrambled::new(&factors, &mut rng);
        assert_eq!(g.group.order(), Some(BigInt::from(g.order())));
        for _ in 0..3 {
            solver_agrees(&g, 1, &mut rng).unwrap();
        }
    }
}

#[test]
fn two_unknowns_against_brute_force() {
    let mut rng = StdRng::seed_from_u64(29);
    for factors in abelian_groups(60) {
        let g = Scrambled::new(&factors, &mut rng);
        solver_agrees(&g, 2, &mut rng).unwrap();
    }
}

#[test]
fn torsion_counts() {
    for g in 1..=3 {
        for r in 1..=5i64 {
            assert_eq!(torsion_count(g, r).unwrap(), BigInt::from(r).pow(2 * g as u32));
        }
    }
}

#[test]
fn smith_reconstructs() {
    let m = int_matrix(&[vec![4, 6, 2], vec![8, -2, 0], vec![3, 3, 9]]);
    let s = smith(&m).unwrap();
    let lhs = fmcalc::ledger::matmul(&fmcalc::ledger::matmul(&s.u, &m), &s.v);
    assert_eq!(lhs, s.d);
    assert_eq!(fmcalc::ledger::determinant(&s.d).abs(), fmcalc::ledger::determinant(&m).abs());
}

#[test]
fn free_part_is_reported_infinite() {
    let g = FGAbelianGroup::free(["e"]);
    let sol = solve_in_group(&g, &int_matrix(&[vec![0]]), &[GroupElement::zero(&g)]).unwrap();
    assert_eq!(sol.count(), None);
    let sol = solve_in_group(&g, &int_matrix(&[vec![2]]), &[GroupElement::generator(&g, 0)]).unwrap();
    assert_eq!(sol.count(), Some(BigInt::from(0)));
}
