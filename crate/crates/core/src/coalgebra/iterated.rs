use super::{
    build_dorroh_coalgebra, certify_coalgebra_iso, check_dorroh_pair_coalgebra,
    BicomoduleCoaction, Coalgebra, CoalgebraMorphism, DorrohPairCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseTensor3};
use crate::laws::{coidentity_witness, CoSide};
use crate::report::Report;

/// Three coalgebras with `C1` coacting on `C2` and `C3`, and `C2` coacting
/// on `C3`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraTriple {
    pub c1: Coalgebra,
    pub c2: Coalgebra,
    pub c3: Coalgebra,
    pub c1_on_c2: BicomoduleCoaction,
    pub c1_on_c3: BicomoduleCoaction,
    pub c2_on_c3: BicomoduleCoaction,
}

/// Report names of the four mixed identities, in check order.
pub const MIXED_IDENTITIES: [&str; 4] = [
    "(1⊗ρl13)ρl23 = (ρr12⊗1)ρl23",
    "(1⊗ρl23)ρl13 = (ρl12⊗1)ρl23",
    "(ρr13⊗1)ρr23 = (1⊗ρl12)ρr23",
    "(ρr23⊗1)ρr13 = (1⊗ρr12)ρr23",
];

impl CoalgebraTriple {
    pub fn new(
        [c1, c2, c3]: [Coalgebra; 3],
        c1_on_c2: BicomoduleCoaction,
        c1_on_c3: BicomoduleCoaction,
        c2_on_c3: BicomoduleCoaction,
    ) -> Result<Self> {
        let fits = |co: &BicomoduleCoaction, x: &Coalgebra, y: &Coalgebra| {
            co.coacting_dim() == x.dim() && co.carrier_dim() == y.dim()
        };
        if !fits(&c1_on_c2, &c1, &c2) || !fits(&c1_on_c3, &c1, &c3) || !fits(&c2_on_c3, &c2, &c3) {
            return Err(Error::Dimension("triple coactions do not fit the coalgebras".into()));
        }
        if c1.field() != c2.field() || c2.field() != c3.field() {
            return Err(Error::Input("triple components over different fields".into()));
        }
        Ok(CoalgebraTriple {
            c1,
            c2,
            c3,
            c1_on_c2,
            c1_on_c3,
            c2_on_c3,
        })
    }

    /// All coactions zero.
    pub fn direct(c1: Coalgebra, c2: Coalgebra, c3: Coalgebra) -> Self {
        let f = c1.field();
        let z = |x: &Coalgebra, y: &Coalgebra| BicomoduleCoaction::zero(f, x.dim(), y.dim());
        let (z12, z13, z23) = (z(&c1, &c2), z(&c1, &c3), z(&c2, &c3));
        Self::new([c1, c2, c3], z12, z13, z23).expect("zero coactions fit")
    }

    fn pair(x: &Coalgebra, y: &Coalgebra, co: &BicomoduleCoaction) -> Result<DorrohPairCoalgebra> {
        DorrohPairCoalgebra::new(x.clone(), y.clone(), co.clone())
    }

    /// `(C1 ⋉ C2) ⋉ C3`
    pub fn build_left(&self) -> Result<Coalgebra> {
        let b12 = build_dorroh_coalgebra(&Self::pair(&self.c1, &self.c2, &self.c1_on_c2)?)?;
        let (n1, n3) = (self.c1.dim(), self.c3.dim());
        let n12 = b12.dim();
        let f = b12.field();
        let mut rho_l = SparseTensor3::new(f, [n3, n12, n3]);
        self.c1_on_c3.rho_l().embed_into(&mut rho_l, [0, 0, 0]);
        self.c2_on_c3.rho_l().embed_into(&mut rho_l, [0, n1, 0]);
        let mut rho_r = SparseTensor3::new(f, [n3, n3, n12]);
        self.c1_on_c3.rho_r().embed_into(&mut rho_r, [0, 0, 0]);
        self.c2_on_c3.rho_r().embed_into(&mut rho_r, [0, 0, n1]);
        let outer = DorrohPairCoalgebra::new(
            b12,
            self.c3.clone(),
            BicomoduleCoaction::new(rho_l, rho_r)?,
        )?;
        build_dorroh_coalgebra(&outer)
    }

    /// `C1 ⋉ (C2 ⋉ C3)`
    pub fn build_right(&self) -> Result<Coalgebra> {
        let b23 = build_dorroh_coalgebra(&Self::pair(&self.c2, &self.c3, &self.c2_on_c3)?)?;
        let (n1, n2) = (self.c1.dim(), self.c2.dim());
        let n23 = b23.dim();
        let f = b23.field();
        let mut rho_l = SparseTensor3::new(f, [n23, n1, n23]);
        self.c1_on_c2.rho_l().embed_into(&mut rho_l, [0, 0, 0]);
        self.c1_on_c3.rho_l().embed_into(&mut rho_l, [n2, 0, n2]);
        let mut rho_r = SparseTensor3::new(f, [n23, n23, n1]);
        self.c1_on_c2.rho_r().embed_into(&mut rho_r, [0, 0, 0]);
        self.c1_on_c3.rho_r().embed_into(&mut rho_r, [n2, n2, 0]);
        let outer = DorrohPairCoalgebra::new(
            self.c1.clone(),
            b23,
            BicomoduleCoaction::new(rho_l, rho_r)?,
        )?;
        build_dorroh_coalgebra(&outer)
    }
}

/// Checks the conditions under which both bracketings of an iterated
/// coextension exist, and on success returns the verified coassociator
/// `((c, d), e) ↦ (c, (d, e))`.
pub fn check_iterated_coalgebra_triple(
    t: &CoalgebraTriple,
) -> Result<(Report, Option<CoalgebraMorphism>)> {
    let mut rep = Report::new();
    for (name, x, y, co) in [
        ("(C1,C2)", &t.c1, &t.c2, &t.c1_on_c2),
        ("(C1,C3)", &t.c1, &t.c3, &t.c1_on_c3),
        ("(C2,C3)", &t.c2, &t.c3, &t.c2_on_c3),
    ] {
        rep.absorb(name, check_dorroh_pair_coalgebra(&CoalgebraTriple::pair(x, y, co)?));
    }
    let (l12, r12) = (t.c1_on_c2.rho_l(), t.c1_on_c2.rho_r());
    let (l13, r13) = (t.c1_on_c3.rho_l(), t.c1_on_c3.rho_r());
    let (l23, r23) = (t.c2_on_c3.rho_l(), t.c2_on_c3.rho_r());
    let first = CoSide::first;
    let second = CoSide::second;
    rep.record("(ρl13⊗1)ρr23 = (1⊗ρr23)ρl13", coidentity_witness(first(l13, r23), second(r23, l13)));
    rep.record("(ρl23⊗1)ρr13 = (1⊗ρr13)ρl23", coidentity_witness(first(l23, r13), second(r13, l23)));
    rep.record(MIXED_IDENTITIES[0], coidentity_witness(second(l13, l23), first(r12, l23)));
    rep.record(MIXED_IDENTITIES[1], coidentity_witness(second(l23, l13), first(l12, l23)));
    rep.record(MIXED_IDENTITIES[2], coidentity_witness(first(r13, r23), second(l12, r23)));
    rep.record(MIXED_IDENTITIES[3], coidentity_witness(first(r23, r13), second(r12, r23)));
    if !rep.is_pass() {
        return Ok((rep, None));
    }
    let left = t.build_left()?;
    let right = t.build_right()?;
    let n = left.dim();
    let mut assoc = CoalgebraMorphism::new(left, right, Matrix::identity(t.c1.field(), n))?;
    certify_coalgebra_iso(&mut assoc, "coassociator")?;
    rep.pass("coassociator is a coalgebra isomorphism");
    Ok((rep, Some(assoc)))
}
