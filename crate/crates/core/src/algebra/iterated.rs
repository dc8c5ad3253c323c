use super::{
    build_dorroh_algebra, certify_algebra_iso, check_dorroh_pair_algebra, Algebra,
    AlgebraMorphism, BimoduleAction, DorrohPairAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseTensor3};
use crate::laws::bracketing_witness;
use crate::report::Report;

/// Three algebras with `A1` acting on `A2` and `A3`, and `A2` acting on `A3`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraTriple {
    pub a1: Algebra,
    pub a2: Algebra,
    pub a3: Algebra,
    pub a1_on_a2: BimoduleAction,
    pub a1_on_a3: BimoduleAction,
    pub a2_on_a3: BimoduleAction,
}

impl AlgebraTriple {
    pub fn new(
        [a1, a2, a3]: [Algebra; 3],
        a1_on_a2: BimoduleAction,
        a1_on_a3: BimoduleAction,
        a2_on_a3: BimoduleAction,
    ) -> Result<Self> {
        let fits = |act: &BimoduleAction, x: &Algebra, y: &Algebra| {
            act.acting_dim() == x.dim() && act.carrier_dim() == y.dim()
        };
        if !fits(&a1_on_a2, &a1, &a2) || !fits(&a1_on_a3, &a1, &a3) || !fits(&a2_on_a3, &a2, &a3) {
            return Err(Error::Dimension("triple actions do not fit the algebras".into()));
        }
        if a1.field() != a2.field() || a2.field() != a3.field() {
            return Err(Error::Input("triple components over different fields".into()));
        }
        Ok(AlgebraTriple {
            a1,
            a2,
            a3,
            a1_on_a2,
            a1_on_a3,
            a2_on_a3,
        })
    }

    /// All actions zero.
    pub fn direct(a1: Algebra, a2: Algebra, a3: Algebra) -> Self {
        let f = a1.field();
        let z = |x: &Algebra, y: &Algebra| BimoduleAction::zero(f, x.dim(), y.dim());
        let (z12, z13, z23) = (z(&a1, &a2), z(&a1, &a3), z(&a2, &a3));
        Self::new([a1, a2, a3], z12, z13, z23).expect("zero actions fit")
    }

    fn pair(x: &Algebra, y: &Algebra, act: &BimoduleAction) -> Result<DorrohPairAlgebra> {
        DorrohPairAlgebra::new(x.clone(), y.clone(), act.clone())
    }

    /// `(A1 ⋉ A2) ⋉ A3`
    pub fn build_left(&self) -> Result<Algebra> {
        let b12 = build_dorroh_algebra(&Self::pair(&self.a1, &self.a2, &self.a1_on_a2)?)?;
        let (n1, n3) = (self.a1.dim(), self.a3.dim());
        let n12 = b12.dim();
        let f = b12.field();
        let mut left = SparseTensor3::new(f, [n12, n3, n3]);
        self.a1_on_a3.left().embed_into(&mut left, [0, 0, 0]);
        self.a2_on_a3.left().embed_into(&mut left, [n1, 0, 0]);
        let mut right = SparseTensor3::new(f, [n3, n12, n3]);
        self.a1_on_a3.right().embed_into(&mut right, [0, 0, 0]);
        self.a2_on_a3.right().embed_into(&mut right, [0, n1, 0]);
        let outer = DorrohPairAlgebra::new(b12, self.a3.clone(), BimoduleAction::new(left, right)?)?;
        build_dorroh_algebra(&outer)
    }

    /// `A1 ⋉ (A2 ⋉ A3)`
    pub fn build_right(&self) -> Result<Algebra> {
        let b23 = build_dorroh_algebra(&Self::pair(&self.a2, &self.a3, &self.a2_on_a3)?)?;
        let (n1, n2) = (self.a1.dim(), self.a2.dim());
        let n23 = b23.dim();
        let f = b23.field();
        let mut left = SparseTensor3::new(f, [n1, n23, n23]);
        self.a1_on_a2.left().embed_into(&mut left, [0, 0, 0]);
        self.a1_on_a3.left().embed_into(&mut left, [0, n2, n2]);
        let mut right = SparseTensor3::new(f, [n23, n1, n23]);
        self.a1_on_a2.right().embed_into(&mut right, [0, 0, 0]);
        self.a1_on_a3.right().embed_into(&mut right, [n2, 0, n2]);
        let outer = DorrohPairAlgebra::new(self.a1.clone(), b23, BimoduleAction::new(left, right)?)?;
        build_dorroh_algebra(&outer)
    }
}

/// Report names of the six mixed identities, in check order.
pub const MIXED_IDENTITIES: [&str; 6] = [
    "(a1a3)a2 = a1(a3a2)",
    "(a2a3)a1 = a2(a3a1)",
    "(a1a2)a3 = a1(a2a3)",
    "(a2a1)a3 = a2(a1a3)",
    "(a3a2)a1 = a3(a2a1)",
    "(a3a1)a2 = a3(a1a2)",
];

/// Checks the conditions under which both bracketings of an iterated
/// extension exist, and on success returns the verified associator
/// `((a1, a2), a3) ↦ (a1, (a2, a3))`.
pub fn check_iterated_algebra_triple(t: &AlgebraTriple) -> Result<(Report, Option<AlgebraMorphism>)> {
    let mut rep = Report::new();
    for (name, x, y, act) in [
        ("(A1,A2)", &t.a1, &t.a2, &t.a1_on_a2),
        ("(A1,A3)", &t.a1, &t.a3, &t.a1_on_a3),
        ("(A2,A3)", &t.a2, &t.a3, &t.a2_on_a3),
    ] {
        let p = AlgebraTriple::pair(x, y, act)?;
        rep.absorb(name, check_dorroh_pair_algebra(&p));
    }
    let (l12, r12) = (t.a1_on_a2.left(), t.a1_on_a2.right());
    let (l13, r13) = (t.a1_on_a3.left(), t.a1_on_a3.right());
    let (l23, r23) = (t.a2_on_a3.left(), t.a2_on_a3.right());
    rep.record(MIXED_IDENTITIES[0], bracketing_witness(r23, l13, l13, r23));
    rep.record(MIXED_IDENTITIES[1], bracketing_witness(r13, l23, l23, r13));
    rep.record(MIXED_IDENTITIES[2], bracketing_witness(l23, l12, l13, l23));
    rep.record(MIXED_IDENTITIES[3], bracketing_witness(l23, r12, l23, l13));
    rep.record(MIXED_IDENTITIES[4], bracketing_witness(r13, r23, r23, r12));
    rep.record(MIXED_IDENTITIES[5], bracketing_witness(r23, r13, r23, l12));
    if !rep.is_pass() {
        return Ok((rep, None));
    }
    let left = t.build_left()?;
    let right = t.build_right()?;
    let n = left.dim();
    let mut assoc = AlgebraMorphism::new(left, right, Matrix::identity(t.a1.field(), n))?;
    certify_algebra_iso(&mut assoc, "associator")?;
    rep.pass("associator is an algebra isomorphism");
    Ok((rep, Some(assoc)))
}
