use super::{build_dorroh_coalgebra, Coalgebra, DorrohPairCoalgebra};
use crate::error::{Error, Result};
use crate::exactlin::SparseTensor3;
use crate::laws::{coidentity_witness, CoSide};
use crate::report::Report;
use crate::Side;

/// A left, right or bi-comodule. `left` has dims `[dim, n_C, dim]` and
/// `right` has dims `[dim, dim, n_C]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleOverCoalgebra {
    coalgebra: Coalgebra,
    dim: usize,
    side: Side,
    left: Option<SparseTensor3>,
    right: Option<SparseTensor3>,
}

impl ComoduleOverCoalgebra {
    pub fn new(
        coalgebra: Coalgebra,
        dim: usize,
        side: Side,
        left: Option<SparseTensor3>,
        right: Option<SparseTensor3>,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        if side.has_left() != left.is_some() || side.has_right() != right.is_some() {
            return Err(Error::Input(format!(
                "a {} comodule needs exactly the matching coaction tensors",
                side.as_str()
            )));
        }
        if let Some(l) = &left {
            if l.dims() != [dim, n, dim] {
                return Err(Error::Dimension(format!("left coaction has dims {:?}", l.dims())));
            }
        }
        if let Some(r) = &right {
            if r.dims() != [dim, dim, n] {
                return Err(Error::Dimension(format!("right coaction has dims {:?}", r.dims())));
            }
        }
        Ok(ComoduleOverCoalgebra {
            coalgebra,
            dim,
            side,
            left,
            right,
        })
    }

    /// The coalgebra coacting on itself by its comultiplication.
    pub fn regular(c: &Coalgebra, side: Side) -> Self {
        let d = c.delta().clone();
        let left = side.has_left().then(|| d.clone());
        let right = side.has_right().then_some(d);
        Self::new(c.clone(), c.dim(), side, left, right).expect("regular dims")
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn left(&self) -> Option<&SparseTensor3> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&SparseTensor3> {
        self.right.as_ref()
    }
}

pub fn check_comodule(m: &ComoduleOverCoalgebra) -> Report {
    let d = m.coalgebra.delta();
    let mut rep = Report::new();
    if let Some(l) = &m.left {
        rep.record(
            "(Δ⊗1)ρ_l = (1⊗ρ_l)ρ_l",
            coidentity_witness(CoSide::first(d, l), CoSide::second(l, l)),
        );
    }
    if let Some(r) = &m.right {
        rep.record(
            "(ρ_r⊗1)ρ_r = (1⊗Δ)ρ_r",
            coidentity_witness(CoSide::first(r, r), CoSide::second(d, r)),
        );
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        rep.record(
            "(ρ_l⊗1)ρ_r = (1⊗ρ_r)ρ_l",
            coidentity_witness(CoSide::first(l, r), CoSide::second(r, l)),
        );
    }
    rep
}

/// Combines a `C`-comodule and a `P`-comodule on one carrier into a
/// `C ⋉ P`-comodule, after checking the compatibility identities.
pub fn assemble_comodule(
    p: &DorrohPairCoalgebra,
    m_c: &ComoduleOverCoalgebra,
    m_p: &ComoduleOverCoalgebra,
    side: Side,
) -> Result<ComoduleOverCoalgebra> {
    if m_c.coalgebra != *p.c() || m_p.coalgebra != *p.p() {
        return Err(Error::Input("comodules are not over the pair's coalgebras".into()));
    }
    if m_c.dim != m_p.dim {
        return Err(Error::Dimension(format!(
            "carriers of dimension {} and {}",
            m_c.dim, m_p.dim
        )));
    }
    let covers = |m: &ComoduleOverCoalgebra| {
        (!side.has_left() || m.side.has_left()) && (!side.has_right() || m.side.has_right())
    };
    if !covers(m_c) || !covers(m_p) {
        return Err(Error::Input(format!("comodules do not carry a {} structure", side.as_str())));
    }
    let ext = build_dorroh_coalgebra(p)?;
    let (dc, dp) = (p.c().delta(), p.p().delta());
    let (rl, rr) = (p.coaction().rho_l(), p.coaction().rho_r());
    let first = CoSide::first;
    let second = CoSide::second;
    let mut rep = Report::new();
    if side.has_left() {
        let (lc, lp) = (m_c.left.as_ref().unwrap(), m_p.left.as_ref().unwrap());
        rep.record("C: (Δ⊗1)σ_l = (1⊗σ_l)σ_l", coidentity_witness(first(dc, lc), second(lc, lc)));
        rep.record("P: (Δ⊗1)σ_l = (1⊗σ_l)σ_l", coidentity_witness(first(dp, lp), second(lp, lp)));
        rep.record("(1⊗σ_l^C)σ_l^P = (ρ_r⊗1)σ_l^P", coidentity_witness(second(lc, lp), first(rr, lp)));
        rep.record("(1⊗σ_l^P)σ_l^C = (ρ_l⊗1)σ_l^P", coidentity_witness(second(lp, lc), first(rl, lp)));
    }
    if side.has_right() {
        let (rc, rp) = (m_c.right.as_ref().unwrap(), m_p.right.as_ref().unwrap());
        rep.record("C: (σ_r⊗1)σ_r = (1⊗Δ)σ_r", coidentity_witness(first(rc, rc), second(dc, rc)));
        rep.record("P: (σ_r⊗1)σ_r = (1⊗Δ)σ_r", coidentity_witness(first(rp, rp), second(dp, rp)));
        rep.record("(σ_r^C⊗1)σ_r^P = (1⊗ρ_l)σ_r^P", coidentity_witness(first(rc, rp), second(rl, rp)));
        rep.record("(σ_r^P⊗1)σ_r^C = (1⊗ρ_r)σ_r^P", coidentity_witness(first(rp, rc), second(rr, rp)));
    }
    if side == Side::Bi {
        let (lc, lp) = (m_c.left.as_ref().unwrap(), m_p.left.as_ref().unwrap());
        let (rc, rp) = (m_c.right.as_ref().unwrap(), m_p.right.as_ref().unwrap());
        rep.record("(σ_l^C⊗1)σ_r^C = (1⊗σ_r^C)σ_l^C", coidentity_witness(first(lc, rc), second(rc, lc)));
        rep.record("(σ_l^P⊗1)σ_r^P = (1⊗σ_r^P)σ_l^P", coidentity_witness(first(lp, rp), second(rp, lp)));
        rep.record("(σ_l^C⊗1)σ_r^P = (1⊗σ_r^P)σ_l^C", coidentity_witness(first(lc, rp), second(rp, lc)));
        rep.record("(σ_l^P⊗1)σ_r^C = (1⊗σ_r^C)σ_l^P", coidentity_witness(first(lp, rc), second(rc, lp)));
    }
    if !rep.is_pass() {
        return Err(Error::check(rep));
    }
    let (nc, n, d) = (p.c().dim(), ext.dim(), m_c.dim);
    let f = p.field();
    let left = side.has_left().then(|| {
        let mut t = SparseTensor3::new(f, [d, n, d]);
        m_c.left.as_ref().unwrap().embed_into(&mut t, [0, 0, 0]);
        m_p.left.as_ref().unwrap().embed_into(&mut t, [0, nc, 0]);
        t
    });
    let right = side.has_right().then(|| {
        let mut t = SparseTensor3::new(f, [d, d, n]);
        m_c.right.as_ref().unwrap().embed_into(&mut t, [0, 0, 0]);
        m_p.right.as_ref().unwrap().embed_into(&mut t, [0, 0, nc]);
        t
    });
    let m = ComoduleOverCoalgebra::new(ext, d, side, left, right)?;
    let check = check_comodule(&m);
    if !check.is_pass() {
        return Err(Error::Internal(format!("assembled comodule: {}", check.headline())));
    }
    Ok(m)
}

/// Restricts a `C ⋉ P`-comodule along the projections to `C` and `P`.
pub fn restrict_comodule(
    p: &DorrohPairCoalgebra,
    m: &ComoduleOverCoalgebra,
) -> Result<(ComoduleOverCoalgebra, ComoduleOverCoalgebra)> {
    let ext = build_dorroh_coalgebra(p)?;
    if m.coalgebra != ext {
        return Err(Error::Input("comodule is not over the pair's extension".into()));
    }
    let (nc, np, d) = (p.c().dim(), p.p().dim(), m.dim);
    let part = |start: usize, len: usize, c: &Coalgebra| {
        let left = m.left.as_ref().map(|t| t.block([0, start, 0], [d, len, d]));
        let right = m.right.as_ref().map(|t| t.block([0, 0, start], [d, d, len]));
        ComoduleOverCoalgebra::new(c.clone(), d, m.side, left, right)
    };
    Ok((part(0, nc, p.c())?, part(nc, np, p.p())?))
}
