//! Duality between finite-dimensional algebras and coalgebras.
//!
//! Dual bases are always the Kronecker duals of the stored bases, so every
//! comparison map produced here has the identity matrix and its verification
//! tests the structure constants alone.

use crate::algebra::{
    build_dorroh_algebra, verify_algebra_morphism, Algebra, AlgebraMorphism, BimoduleAction,
    DorrohPairAlgebra, ModuleOverAlgebra,
};
use crate::coalgebra::{
    build_dorroh_coalgebra, verify_coalgebra_morphism, BicomoduleCoaction, Coalgebra,
    CoalgebraMorphism, ComoduleOverCoalgebra, DorrohPairCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseTensor3};
use crate::Verified;

/// The comparison map certifying a duality statement.
#[derive(Clone, Debug)]
pub enum DualityWitness {
    Algebra(AlgebraMorphism),
    Coalgebra(CoalgebraMorphism),
}

impl DualityWitness {
    pub fn verified(&self) -> Verified {
        match self {
            DualityWitness::Algebra(m) => m.verified(),
            DualityWitness::Coalgebra(m) => m.verified(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        match self {
            DualityWitness::Algebra(m) => m.matrix(),
            DualityWitness::Coalgebra(m) => m.matrix(),
        }
    }
}

fn permute(t: &SparseTensor3, perm: impl Fn([usize; 3]) -> [usize; 3]) -> SparseTensor3 {
    let d = perm(t.dims());
    let mut out = SparseTensor3::new(t.field(), d);
    for (idx, v) in t.iter() {
        out.set(perm(*idx), v.clone());
    }
    out
}

fn dual_labels(labels: Option<&[String]>) -> Option<Vec<String>> {
    labels.map(|ls| ls.iter().map(|l| format!("{l}*")).collect())
}

/// The convolution algebra `C*`: `mul(i, j, k) = delta(k, i, j)`.
pub fn dual_algebra_of_coalgebra(c: &Coalgebra) -> Algebra {
    let mul = permute(c.delta(), |[k, i, j]| [i, j, k]);
    let a = Algebra::new(c.field(), c.dim(), mul).expect("square tensor");
    match dual_labels(c.labels()) {
        Some(l) => a.with_labels(l).expect("label count"),
        None => a,
    }
}

/// The dual coalgebra `A*`: `delta(k, i, j) = mul(i, j, k)`.
pub fn dual_coalgebra_of_algebra(a: &Algebra) -> Coalgebra {
    let delta = permute(a.mul(), |[i, j, k]| [k, i, j]);
    let c = Coalgebra::new(a.field(), a.dim(), delta).expect("square tensor");
    match dual_labels(a.labels()) {
        Some(l) => c.with_labels(l).expect("label count"),
        None => c,
    }
}

/// The dual of a module as a comodule over the dual coalgebra, on the same
/// side: `f(m·a)` defines the right coaction and `f(a·m)` the left one.
pub fn dual_actions(m: &ModuleOverAlgebra) -> ComoduleOverCoalgebra {
    let left = m.left().map(|t| permute(t, |[a, x, y]| [y, a, x]));
    let right = m.right().map(|t| permute(t, |[x, a, y]| [y, x, a]));
    let c = dual_coalgebra_of_algebra(m.algebra());
    ComoduleOverCoalgebra::new(c, m.dim(), m.side(), left, right).expect("dual dims")
}

/// The algebra pair `(C*, P*)` with `(fη)(p) = Σ f(p_(-1))η(p_(0))` and
/// `(ηf)(p) = Σ η(p_(0))f(p_(1))`, together with the verified isomorphism
/// `C* ⋉ P* → (C ⋉ P)*`.
pub fn dualize_coalgebra_pair(p: &DorrohPairCoalgebra) -> Result<(DorrohPairAlgebra, DualityWitness)> {
    p.validated()?;
    let left = permute(p.coaction().rho_l(), |[y, c, x]| [c, x, y]);
    let right = permute(p.coaction().rho_r(), |[y, x, c]| [x, c, y]);
    let pair = DorrohPairAlgebra::new(
        dual_algebra_of_coalgebra(p.c()),
        dual_algebra_of_coalgebra(p.p()),
        BimoduleAction::new(left, right)?,
    )?;
    pair.validated()?;
    let source = build_dorroh_algebra(&pair)?;
    let target = dual_algebra_of_coalgebra(&build_dorroh_coalgebra(p)?);
    let n = source.dim();
    let mut f = AlgebraMorphism::new(source, target, Matrix::identity(p.field(), n))?;
    let rep = verify_algebra_morphism(&mut f);
    if f.verified() != Verified::Iso {
        return Err(Error::Internal(format!("duality map: {}", rep.headline())));
    }
    Ok((pair, DualityWitness::Algebra(f)))
}

/// The coalgebra pair `(A*, I*)` with coactions dual to the actions, together
/// with the verified isomorphism `(A ⋉ I)* → A* ⋉ I*`.
pub fn dualize_algebra_pair(p: &DorrohPairAlgebra) -> Result<(DorrohPairCoalgebra, DualityWitness)> {
    p.validated()?;
    let rho_l = permute(p.action().left(), |[a, x, y]| [y, a, x]);
    let rho_r = permute(p.action().right(), |[x, a, y]| [y, x, a]);
    let pair = DorrohPairCoalgebra::new(
        dual_coalgebra_of_algebra(p.a()),
        dual_coalgebra_of_algebra(p.i()),
        BicomoduleCoaction::new(rho_l, rho_r)?,
    )?;
    pair.validated()?;
    let source = dual_coalgebra_of_algebra(&build_dorroh_algebra(p)?);
    let target = build_dorroh_coalgebra(&pair)?;
    let n = source.dim();
    let mut f = CoalgebraMorphism::new(source, target, Matrix::identity(p.field(), n))?;
    let rep = verify_coalgebra_morphism(&mut f);
    if f.verified() != Verified::Iso {
        return Err(Error::Internal(format!("duality map: {}", rep.headline())));
    }
    Ok((pair, DualityWitness::Coalgebra(f)))
}

/// The evaluation map `A → A**`, verified as an algebra isomorphism.
pub fn double_dual_iso(a: &Algebra) -> Result<AlgebraMorphism> {
    let dd = dual_algebra_of_coalgebra(&dual_coalgebra_of_algebra(a));
    let mut f = AlgebraMorphism::new(a.clone(), dd, Matrix::identity(a.field(), a.dim()))?;
    let rep = verify_algebra_morphism(&mut f);
    if f.verified() != Verified::Iso {
        return Err(Error::Internal(format!("evaluation map: {}", rep.headline())));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_associativity, find_identity};
    use crate::coalgebra::{check_comodule, check_coassociativity, find_counit};
    use crate::exactlin::FieldSpec;
    use crate::Side;

    #[test]
    fn dual_numbers_and_divided_powers() {
        let q = FieldSpec::Rationals;
        let dual = Algebra::from_table(q, 2, &[([0, 0, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)]);
        let c = dual_coalgebra_of_algebra(&dual);
        let div = Coalgebra::from_table(q, 2, &[([0, 0, 0], 1), ([1, 0, 1], 1), ([1, 1, 0], 1)]);
        assert_eq!(c, div);
        assert!(check_coassociativity(&c).is_pass());
        assert_eq!(find_counit(&c), find_identity(&dual));
        assert_eq!(dual_algebra_of_coalgebra(&c), dual);
        assert!(check_associativity(&dual_algebra_of_coalgebra(&div)).is_pass());
    }

    #[test]
    fn regular_bimodule_dualizes_to_bicomodule() {
        let q = FieldSpec::Rationals;
        let dual = Algebra::from_table(q, 2, &[([0, 0, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)]);
        let m = ModuleOverAlgebra::regular(&dual, Side::Bi);
        let cm = dual_actions(&m);
        assert!(check_comodule(&cm).is_pass());
        assert_eq!(cm, ComoduleOverCoalgebra::regular(&dual_coalgebra_of_algebra(&dual), Side::Bi));
    }

    #[test]
    fn grouplike_pair_dualizes() {
        let q = FieldSpec::Rationals;
        let one = Coalgebra::from_table(q, 1, &[([0, 0, 0], 1)]);
        let t = SparseTensor3::from_i64(q, [1, 1, 1], &[([0, 0, 0], 1)]);
        let p = DorrohPairCoalgebra::new(one.clone(), one, BicomoduleCoaction::new(t.clone(), t).unwrap())
            .unwrap();
        let (ap, w) = dualize_coalgebra_pair(&p).unwrap();
        assert_eq!(w.verified(), Verified::Iso);
        let ext = build_dorroh_algebra(&ap).unwrap();
        let expected = Algebra::from_table(
            q,
            2,
            &[([0, 0, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1), ([1, 1, 1], 1)],
        );
        assert_eq!(ext, expected);
        let (cp, w2) = dualize_algebra_pair(&ap).unwrap();
        assert_eq!(cp, p);
        assert_eq!(w2.verified(), Verified::Iso);
    }
}
