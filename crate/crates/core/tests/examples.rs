mod common;

use common::*;
use dorroh::algebra::{build_dorroh_algebra, find_identity};
use dorroh::coalgebra::{build_dorroh_coalgebra, check_iterated_coalgebra_triple, find_counit, BicomoduleCoaction, CoalgebraTriple};
use dorroh::duality::{
    double_dual_iso, dual_algebra_of_coalgebra, dual_coalgebra_of_algebra, dualize_algebra_pair,
    dualize_coalgebra_pair,
};
use dorroh::findual::{coproduct_decompose, dorroh_decompose, vanishing_check};
use dorroh::gallery;
use dorroh::{FieldSpec, Verified};

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn dual_of_grouplikes_has_orthogonal_idempotents() {
    let a = dual_algebra_of_coalgebra(&gallery::grouplikes(Q, 2));
    let d = dense(a.mul());
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let want = if i == j && j == k { 1 } else { 0 };
                assert_eq!(d[i][j][k], Q.from_i64(want));
            }
        }
    }
    assert_eq!(find_identity(&a).unwrap(), ints(Q, &[1, 1]));
}

#[test]
fn dual_of_divided_powers_is_dual_numbers() {
    let a = dual_algebra_of_coalgebra(&gallery::divided_power(Q, 1));
    assert_eq!(a.mul(), gallery::dual_numbers(Q).mul());
    let c = dual_coalgebra_of_algebra(&gallery::dual_numbers(Q));
    assert_eq!(find_counit(&c).unwrap(), ints(Q, &[1, 0]));
    assert_eq!(c.delta(), gallery::divided_power(Q, 1).delta());
}

#[test]
fn double_duals_of_small_algebras() {
    for f in [Q, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
        for a in [gallery::dual_numbers(f), gallery::k_z2(f), gallery::m2(f)] {
            let iso = double_dual_iso(&a).unwrap();
            assert_eq!(iso.verified(), Verified::Iso);
            assert!(iso.matrix().is_identity());
        }
    }
}

#[test]
fn grouplike_pair_dual_products() {
    let p = gallery::grouplike_pair(Q).unwrap();
    let (q, w) = dualize_coalgebra_pair(&p).unwrap();
    assert_eq!(w.verified(), Verified::Iso);
    // basis G*, Q*: G*G* = G*, and every product involving Q* is Q*
    let d = dense(build_dorroh_algebra(&q).unwrap().mul());
    let expect = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                assert_eq!(d[i][j][k], Q.from_i64(expect[i][j][k]), "({i},{j},{k})");
            }
        }
    }
}

#[test]
fn matrix_multiplication_pair_dualizes_to_eight_dimensions() {
    let p = gallery::algebra_pair("regular(M2)", Q).unwrap();
    let (q, w) = dualize_algebra_pair(&p).unwrap();
    assert_eq!(w.verified(), Verified::Iso);
    let d = build_dorroh_coalgebra(&q).unwrap();
    assert_eq!(d.dim(), 8);
    assert!(coassociative(d.delta()));
    let b = build_dorroh_algebra(&p).unwrap();
    let db = dense(b.mul());
    let dd = dense(d.delta());
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                assert_eq!(dd[k][i][j], db[i][j][k]);
            }
        }
    }
}

#[test]
fn scaled_coaction_fails_pair_laws_not_mixed_identities() {
    let t = gallery::grouplike_cotriple(Q);
    let mut rho_l = t.c2_on_c3.rho_l().clone();
    let (idx, v) = rho_l.iter().next().map(|(i, v)| (*i, v.clone())).unwrap();
    rho_l.set(idx, &v + &v);
    let broken = CoalgebraTriple::new(
        [t.c1.clone(), t.c2.clone(), t.c3.clone()],
        t.c1_on_c2.clone(),
        t.c1_on_c3.clone(),
        BicomoduleCoaction::new(rho_l, t.c2_on_c3.rho_r().clone()).unwrap(),
    )
    .unwrap();
    let (rep, iso) = check_iterated_coalgebra_triple(&broken).unwrap();
    assert!(iso.is_none());
    // both sides of every mixed identity are linear in each coaction, so a scaling cannot separate them
    assert_eq!(
        rep.failed_names(),
        vec!["(C2,C3): (Δ_C⊗1)ρ_l = (1⊗ρ_l)ρ_l", "(C2,C3): (ρ_r⊗1)Δ_P = (1⊗ρ_l)Δ_P"]
    );
}

#[test]
fn finite_dual_examples() {
    let fib = gallery::fibonacci(Q);
    assert_eq!(coproduct_decompose(&fib, 20).unwrap().rank, 2);
    let pass = |f, p: &[i64]| vanishing_check(f, &ints(Q, p), 30).unwrap().is_pass();
    assert!(pass(&fib, &[-1, -1, 1]));
    let rep = vanishing_check(&fib, &ints(Q, &[-2, 1]), 30).unwrap();
    let failed = rep.checks().iter().find(|c| c.status == dorroh::Status::Fail).unwrap();
    assert_eq!(failed.witness.as_deref(), Some(&[0usize][..]));
    // f(x - 2) = s_1 - 2 s_0 = 1 for Fibonacci
    let v = values(&fib, 1);
    assert_ne!(&v[1] - &(&v[0] + &v[0]), Q.zero());

    let g = gallery::geometric(Q.from_i64(2));
    assert!(pass(&g, &[-2, 1]));
    assert!(dorroh_decompose(&g, 20).unwrap().is_pass());
    assert!(dorroh_decompose(&fib, 20).unwrap().is_pass());
    let eps = dorroh::findual::RecurrentSequence::from_i64(Q, Some(1), &[0], &[0]);
    let dec = coproduct_decompose(&eps, 10).unwrap();
    assert_eq!(dec.rank, 1);
    assert!(dorroh_decompose(&eps, 20).unwrap().is_pass());
}
