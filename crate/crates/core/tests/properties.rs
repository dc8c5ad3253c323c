mod common;

use common::*;
use dorroh::algebra::{build_dorroh_algebra, split_algebra_extension};
use dorroh::coalgebra::{build_dorroh_coalgebra, split_coalgebra_extension};
use dorroh::duality::{dualize_algebra_pair, dualize_coalgebra_pair};
use dorroh::exactlin::basis_vector;
use dorroh::findual::{coproduct_decompose, dorroh_decompose, minimal_recurrence, RecurrentSequence};
use dorroh::format::{emit_document, parse_document, Document};
use dorroh::gallery::{self, PairSampler};
use dorroh::{FieldSpec, Verified};
use proptest::prelude::*;

const F7: FieldSpec = FieldSpec::Prime(7);
const F5: FieldSpec = FieldSpec::Prime(5);

fn sequence(max_order: usize) -> impl Strategy<Value = RecurrentSequence> {
    (1..=max_order)
        .prop_flat_map(|r| {
            (
                0i64..7,
                prop::collection::vec(0i64..7, r),
                prop::collection::vec(0i64..7, r),
            )
        })
        .prop_map(|(s0, init, coeffs)| RecurrentSequence::from_i64(F7, Some(s0), &init, &coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn minimal_recurrence_matches_berlekamp_massey(f in sequence(3)) {
        let prefix = f.prefix(10);
        let found = minimal_recurrence(&prefix, 4).unwrap().expect("order at most 3");
        prop_assert_eq!(found.order(), linear_complexity(&prefix, F7));
        prop_assert_eq!(found.prefix(10), prefix.clone());
        let again = minimal_recurrence(&found.prefix(10), 4).unwrap().unwrap();
        prop_assert_eq!(again, found);
    }

    #[test]
    fn coproduct_reproduces_shifted_values(f in sequence(3)) {
        let dec = coproduct_decompose(&f, 16).unwrap();
        let vals = values(&f, 16);
        let lv: Vec<_> = dec.left.iter().map(|s| values(s, 16)).collect();
        let rv: Vec<_> = dec.right.iter().map(|s| values(s, 16)).collect();
        for i in 0..=16 {
            for j in 0..=16 - i {
                let mut sum = F7.zero();
                for k in 0..dec.rank {
                    sum += &(&lv[k][i] * &rv[k][j]);
                }
                prop_assert_eq!(&sum, &vals[i + j]);
            }
        }
        prop_assert!(dec.rank <= f.order() + 1);
    }

    #[test]
    fn counit_law_on_decompositions(f in sequence(3)) {
        let dec = coproduct_decompose(&f, 16).unwrap();
        let vals = values(&f, 12);
        let lv: Vec<_> = dec.left.iter().map(|s| values(s, 12)).collect();
        let rv: Vec<_> = dec.right.iter().map(|s| values(s, 12)).collect();
        for n in 0..=12 {
            let mut left = F7.zero();
            let mut right = F7.zero();
            for k in 0..dec.rank {
                left += &(&lv[k][0] * &rv[k][n]);
                right += &(&lv[k][n] * &rv[k][0]);
            }
            prop_assert_eq!(&left, &vals[n]);
            prop_assert_eq!(&right, &vals[n]);
        }
    }

    #[test]
    fn coproduct_is_bilinear(f in sequence(3), g in sequence(3), alpha in 0i64..7, beta in 0i64..7) {
        let (a, b) = (F7.from_i64(alpha), F7.from_i64(beta));
        let (vf, vg) = (values(&f, 16), values(&g, 16));
        let vh: Vec<_> = vf.iter().zip(&vg).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
        let h = minimal_recurrence(&vh[1..15], 6).unwrap().expect("order at most 6");
        let h = h.with_s0(Some(vh[0].clone()));
        prop_assert_eq!(values(&h, 16), vh);
        let table = |s: &RecurrentSequence| coproduct_decompose(s, 16).unwrap().table(0, 16, F7);
        let (tf, tg, th) = (table(&f), table(&g), table(&h));
        for i in 0..=16 {
            for j in 0..=16 - i {
                prop_assert_eq!(&th[i][j], &(&(&a * &tf[i][j]) + &(&b * &tg[i][j])));
            }
        }
    }

    #[test]
    fn dorroh_decomposition_holds(f in sequence(3)) {
        prop_assert!(dorroh_decompose(&f, 20).unwrap().is_pass());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sampled_extensions_satisfy_oracles(seed in any::<u64>()) {
        let mut s = PairSampler::new(seed, F5, 8);
        let p = s.algebra_pair();
        let b = build_dorroh_algebra(&p).unwrap();
        prop_assert!(associative(b.mul()));
        let q = s.coalgebra_pair();
        let d = build_dorroh_coalgebra(&q).unwrap();
        prop_assert!(coassociative(d.delta()));
    }

    #[test]
    fn grading_is_respected(seed in any::<u64>()) {
        let mut s = PairSampler::new(seed, F5, 8);
        let p = s.algebra_pair();
        let na = p.a().dim();
        let m = dense(build_dorroh_algebra(&p).unwrap().mul());
        for (i, row) in m.iter().enumerate() {
            for (j, out) in row.iter().enumerate() {
                for (k, v) in out.iter().enumerate() {
                    let in_a = i < na && j < na;
                    prop_assert!(v.is_zero() || in_a == (k < na));
                }
            }
        }
        let q = s.coalgebra_pair();
        let nc = q.c().dim();
        let d = dense(build_dorroh_coalgebra(&q).unwrap().delta());
        for (k, row) in d.iter().enumerate() {
            for (i, out) in row.iter().enumerate() {
                for (j, v) in out.iter().enumerate() {
                    let both_c = i < nc && j < nc;
                    prop_assert!(v.is_zero() || (k < nc) == both_c);
                }
            }
        }
    }

    #[test]
    fn split_inverts_build(seed in any::<u64>()) {
        let mut s = PairSampler::new(seed, F5, 8);
        let p = s.algebra_pair();
        let b = build_dorroh_algebra(&p).unwrap();
        let n = b.dim();
        let na = p.a().dim();
        let basis: Vec<_> = (0..n).map(|i| basis_vector(F5, n, i)).collect();
        let (back, iso) = split_algebra_extension(&b, &basis[..na], &basis[na..]).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(iso.verified(), Verified::Iso);

        let q = s.coalgebra_pair();
        let d = build_dorroh_coalgebra(&q).unwrap();
        let n = d.dim();
        let nc = q.c().dim();
        let basis: Vec<_> = (0..n).map(|i| basis_vector(F5, n, i)).collect();
        let (back, iso) = split_coalgebra_extension(&d, &basis[..nc], &basis[nc..]).unwrap();
        prop_assert_eq!(back, q);
        prop_assert_eq!(iso.verified(), Verified::Iso);
    }

    #[test]
    fn duality_is_an_isomorphism(seed in any::<u64>()) {
        let mut s = PairSampler::new(seed, F5, 8);
        let (_, w) = dualize_algebra_pair(&s.algebra_pair()).unwrap();
        prop_assert_eq!(w.verified(), Verified::Iso);
        let (_, w) = dualize_coalgebra_pair(&s.coalgebra_pair()).unwrap();
        prop_assert_eq!(w.verified(), Verified::Iso);
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut s = PairSampler::new(seed, F5, 8);
        for doc in [Document::PairAlgebra(s.algebra_pair()), Document::PairCoalgebra(s.coalgebra_pair())] {
            let text = emit_document(&doc);
            let back = parse_document(&text).unwrap();
            prop_assert_eq!(emit_document(&back), text);
        }
    }

    #[test]
    fn truncated_polynomials_are_unitizations(n in 1usize..6) {
        for f in gallery::FIELDS {
            let u = build_dorroh_algebra(&gallery::unitization(&gallery::trunc_ideal(f, n)).unwrap()).unwrap();
            let t = gallery::trunc_poly(f, n);
            let id: Vec<_> = (0..=n).map(|i| basis_vector(f, n + 1, i)).collect();
            prop_assert!(multiplicative(u.mul(), t.mul(), &id));
            prop_assert_eq!(u.mul(), t.mul());
        }
    }
}

#[test]
fn counting_sequence_is_primitive() {
    for f in gallery::FIELDS {
        // s_n = n, with e the constant sequence 1 (evaluation at x = 1)
        let s = RecurrentSequence::from_i64(f, Some(0), &[1, 2], &[2, -1]);
        let dec = coproduct_decompose(&s, 20).unwrap();
        assert_eq!(dec.rank, 2);
        let vals = values(&s, 20);
        let one = f.one();
        for i in 0..=10 {
            for j in 0..=10 {
                let primitive = &(&vals[i] * &one) + &(&one * &vals[j]);
                assert_eq!(vals[i + j], primitive);
                assert_eq!(dec.table(0, 20, f)[i][j], primitive);
            }
        }
    }
}

#[test]
fn geometric_sequence_is_grouplike() {
    for f in [FieldSpec::Rationals, F5, F7] {
        let g = gallery::geometric(f.from_i64(2));
        let dec = coproduct_decompose(&g, 20).unwrap();
        assert_eq!(dec.rank, 1);
        let v = values(&g, 20);
        let (l, r) = (values(&dec.left[0], 20), values(&dec.right[0], 20));
        for i in 0..=20 {
            // f_0 ⊗ g_0 = g ⊗ g up to a scalar that cancels
            assert_eq!(&l[i] * &r[0], v[i]);
            assert_eq!(&l[0] * &r[i], v[i]);
            for j in 0..=20 - i {
                assert_eq!(&v[i] * &v[j], v[i + j]);
            }
        }
    }
}
