//! Generic basis-wise checks of multilinear identities.
//!
//! Every axiom in this crate is one of two shapes:
//!
//! * bilinear: `(x·y)·z = x·(y·z)` where each `·` may be a different
//!   bilinear map (multiplication, left action, right action);
//! * cobilinear: `(S⊗1)T = (1⊗S')T'` (or any mix of legs) where `S, T, ...`
//!   are comultiplications or coactions.
//!
//! Both checks scan the basis in lexicographic order and return the first
//! witness.

use std::collections::BTreeMap;

use crate::exactlin::tensor::SourceIndex;
use crate::exactlin::{Scalar, SparseTensor3};

/// Compares `outer_l(inner_l(e_i, e_j), e_k)` with
/// `outer_r(e_i, inner_r(e_j, e_k))` on all basis triples. Returns the first
/// failing `[i, j, k]`.
pub fn bracketing_witness(
    outer_l: &SparseTensor3,
    inner_l: &SparseTensor3,
    outer_r: &SparseTensor3,
    inner_r: &SparseTensor3,
) -> Option<Vec<usize>> {
    let [d0, d1, _] = inner_l.dims();
    let d2 = outer_l.dims()[1];
    debug_assert_eq!(inner_l.dims()[2], outer_l.dims()[0]);
    debug_assert_eq!(inner_r.dims()[..2], [d1, d2]);
    debug_assert_eq!(outer_r.dims()[..2], [d0, inner_r.dims()[2]]);
    debug_assert_eq!(outer_l.dims()[2], outer_r.dims()[2]);
    let ol = outer_l.pair_index();
    let il = inner_l.pair_index();
    let or = outer_r.pair_index();
    let ir = inner_r.pair_index();
    for i in 0..d0 {
        for j in 0..d1 {
            let left_inner = il.get(i, j);
            for k in 0..d2 {
                let lhs = ol.apply_left_sparse(left_inner, k);
                let rhs = or.apply_right_sparse(i, ir.get(j, k));
                if lhs != rhs {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

/// Which tensor leg the inner map is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    First,
    Second,
}

/// One side of a cobilinear identity: `outer` followed by `inner` on `leg`.
#[derive(Clone, Copy)]
pub struct CoSide<'a> {
    pub outer: &'a SparseTensor3,
    pub inner: &'a SparseTensor3,
    pub leg: Leg,
}

impl<'a> CoSide<'a> {
    /// `(inner ⊗ 1) ∘ outer`
    pub fn first(inner: &'a SparseTensor3, outer: &'a SparseTensor3) -> Self {
        CoSide { outer, inner, leg: Leg::First }
    }

    /// `(1 ⊗ inner) ∘ outer`
    pub fn second(inner: &'a SparseTensor3, outer: &'a SparseTensor3) -> Self {
        CoSide { outer, inner, leg: Leg::Second }
    }
}

type Tensor3Vec = BTreeMap<[usize; 3], Scalar>;

fn expand(side: &CoSide<'_>, outer: &SourceIndex, inner: &SourceIndex, k: usize) -> Tensor3Vec {
    let mut acc = Tensor3Vec::new();
    for (i, j, c) in outer.get(k) {
        let (src, keep) = match side.leg {
            Leg::First => (*i, *j),
            Leg::Second => (*j, *i),
        };
        for (a, b, d) in inner.get(src) {
            let idx = match side.leg {
                Leg::First => [*a, *b, keep],
                Leg::Second => [keep, *a, *b],
            };
            let v = c * d;
            let e = acc.entry(idx).or_insert_with(|| v.field().zero());
            *e += &v;
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

/// Compares two composites `V -> W1 ⊗ W2 ⊗ W3` on every source basis vector.
/// The witness is `[k, a, b, c]`: the source index and the first triple on
/// which the two expansions differ.
pub fn coidentity_witness(lhs: CoSide<'_>, rhs: CoSide<'_>) -> Option<Vec<usize>> {
    let n = lhs.outer.dims()[0];
    debug_assert_eq!(n, rhs.outer.dims()[0]);
    let (lo, li) = (lhs.outer.source_index(), lhs.inner.source_index());
    let (ro, ri) = (rhs.outer.source_index(), rhs.inner.source_index());
    for k in 0..n {
        let l = expand(&lhs, &lo, &li, k);
        let r = expand(&rhs, &ro, &ri, k);
        if l != r {
            let diff = l
                .keys()
                .chain(r.keys())
                .filter(|idx| l.get(*idx) != r.get(*idx))
                .min()
                .expect("maps differ somewhere");
            return Some(vec![k, diff[0], diff[1], diff[2]]);
        }
    }
    None
}
