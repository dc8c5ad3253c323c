use super::{build_dorroh_algebra, Algebra, DorrohPairAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::SparseTensor3;
use crate::laws::bracketing_witness;
use crate::report::Report;
use crate::Side;

/// A left, right or bi-module over an algebra. `left` has dims
/// `[n_A, dim, dim]` and `right` has dims `[dim, n_A, dim]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleOverAlgebra {
    algebra: Algebra,
    dim: usize,
    side: Side,
    left: Option<SparseTensor3>,
    right: Option<SparseTensor3>,
}

impl ModuleOverAlgebra {
    pub fn new(
        algebra: Algebra,
        dim: usize,
        side: Side,
        left: Option<SparseTensor3>,
        right: Option<SparseTensor3>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if side.has_left() != left.is_some() || side.has_right() != right.is_some() {
            return Err(Error::Input(format!(
                "a {} module needs exactly the matching action tensors",
                side.as_str()
            )));
        }
        if let Some(l) = &left {
            if l.dims() != [n, dim, dim] {
                return Err(Error::Dimension(format!("left action has dims {:?}", l.dims())));
            }
        }
        if let Some(r) = &right {
            if r.dims() != [dim, n, dim] {
                return Err(Error::Dimension(format!("right action has dims {:?}", r.dims())));
            }
        }
        Ok(ModuleOverAlgebra {
            algebra,
            dim,
            side,
            left,
            right,
        })
    }

    /// The algebra acting on itself by multiplication.
    pub fn regular(algebra: &Algebra, side: Side) -> Self {
        let mul = algebra.mul().clone();
        let left = side.has_left().then(|| mul.clone());
        let right = side.has_right().then_some(mul);
        Self::new(algebra.clone(), algebra.dim(), side, left, right).expect("regular dims")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
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

pub fn check_module(m: &ModuleOverAlgebra) -> Report {
    let mul = m.algebra.mul();
    let mut rep = Report::new();
    if let Some(l) = &m.left {
        rep.record("(ab)m = a(bm)", bracketing_witness(l, mul, l, l));
    }
    if let Some(r) = &m.right {
        rep.record("(ma)b = m(ab)", bracketing_witness(r, r, r, mul));
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        rep.record("(am)b = a(mb)", bracketing_witness(r, l, l, r));
    }
    rep
}

/// Combines an `A`-module and an `I`-module on one carrier into an
/// `A ⋉ I`-module, after checking the compatibility identities.
pub fn assemble_module(
    p: &DorrohPairAlgebra,
    m_a: &ModuleOverAlgebra,
    m_i: &ModuleOverAlgebra,
    side: Side,
) -> Result<ModuleOverAlgebra> {
    if m_a.algebra != *p.a() || m_i.algebra != *p.i() {
        return Err(Error::Input("modules are not over the pair's algebras".into()));
    }
    if m_a.dim != m_i.dim {
        return Err(Error::Dimension(format!(
            "carriers of dimension {} and {}",
            m_a.dim, m_i.dim
        )));
    }
    let covers = |m: &ModuleOverAlgebra| {
        (!side.has_left() || m.side.has_left()) && (!side.has_right() || m.side.has_right())
    };
    if !covers(m_a) || !covers(m_i) {
        return Err(Error::Input(format!("modules do not carry a {} structure", side.as_str())));
    }
    let ext = build_dorroh_algebra(p)?;
    let (la, ra) = (m_a.left.as_ref(), m_a.right.as_ref());
    let (li, ri) = (m_i.left.as_ref(), m_i.right.as_ref());
    let (al, ar) = (p.action().left(), p.action().right());
    let mut rep = Report::new();
    if side.has_left() {
        let (la, li) = (la.unwrap(), li.unwrap());
        rep.record("A: (ab)m = a(bm)", bracketing_witness(la, p.a().mul(), la, la));
        rep.record("I: (xy)m = x(ym)", bracketing_witness(li, p.i().mul(), li, li));
        rep.record("(ax)m = a(xm)", bracketing_witness(li, al, la, li));
        rep.record("(xa)m = x(am)", bracketing_witness(li, ar, li, la));
    }
    if side.has_right() {
        let (ra, ri) = (ra.unwrap(), ri.unwrap());
        rep.record("A: (ma)b = m(ab)", bracketing_witness(ra, ra, ra, p.a().mul()));
        rep.record("I: (mx)y = m(xy)", bracketing_witness(ri, ri, ri, p.i().mul()));
        rep.record("(ma)x = m(ax)", bracketing_witness(ri, ra, ri, al));
        rep.record("(mx)a = m(xa)", bracketing_witness(ra, ri, ri, ar));
    }
    if side == Side::Bi {
        let (la, li, ra, ri) = (la.unwrap(), li.unwrap(), ra.unwrap(), ri.unwrap());
        rep.record("(am)b = a(mb)", bracketing_witness(ra, la, la, ra));
        rep.record("(xm)y = x(my)", bracketing_witness(ri, li, li, ri));
        rep.record("(am)x = a(mx)", bracketing_witness(ri, la, la, ri));
        rep.record("(xm)a = x(ma)", bracketing_witness(ra, li, li, ra));
    }
    if !rep.is_pass() {
        return Err(Error::check(rep));
    }
    let (na, n, d) = (p.a().dim(), ext.dim(), m_a.dim);
    let f = p.field();
    let left = side.has_left().then(|| {
        let mut t = SparseTensor3::new(f, [n, d, d]);
        la.unwrap().embed_into(&mut t, [0, 0, 0]);
        li.unwrap().embed_into(&mut t, [na, 0, 0]);
        t
    });
    let right = side.has_right().then(|| {
        let mut t = SparseTensor3::new(f, [d, n, d]);
        ra.unwrap().embed_into(&mut t, [0, 0, 0]);
        ri.unwrap().embed_into(&mut t, [0, na, 0]);
        t
    });
    let m = ModuleOverAlgebra::new(ext, d, side, left, right)?;
    let check = check_module(&m);
    if !check.is_pass() {
        return Err(Error::Internal(format!("assembled module: {}", check.headline())));
    }
    Ok(m)
}

/// Restricts an `A ⋉ I`-module to its `A`- and `I`-parts.
pub fn restrict_module(
    p: &DorrohPairAlgebra,
    m: &ModuleOverAlgebra,
) -> Result<(ModuleOverAlgebra, ModuleOverAlgebra)> {
    let ext = build_dorroh_algebra(p)?;
    if m.algebra != ext {
        return Err(Error::Input("module is not over the pair's extension".into()));
    }
    let (na, ni, d) = (p.a().dim(), p.i().dim(), m.dim);
    let part = |start: usize, len: usize, alg: &Algebra| {
        let left = m.left.as_ref().map(|t| t.block([start, 0, 0], [len, d, d]));
        let right = m.right.as_ref().map(|t| t.block([0, start, 0], [d, len, d]));
        ModuleOverAlgebra::new(alg.clone(), d, m.side, left, right)
    };
    Ok((part(0, na, p.a())?, part(na, ni, p.i())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BimoduleAction;
    use crate::exactlin::FieldSpec;

    fn dual_pair(f: FieldSpec) -> DorrohPairAlgebra {
        let k = Algebra::from_table(f, 1, &[([0, 0, 0], 1)]);
        let act = BimoduleAction::new(
            SparseTensor3::from_i64(f, [1, 1, 1], &[([0, 0, 0], 1)]),
            SparseTensor3::from_i64(f, [1, 1, 1], &[([0, 0, 0], 1)]),
        )
        .unwrap();
        DorrohPairAlgebra::new(k, Algebra::zero(f, 1), act).unwrap()
    }

    #[test]
    fn regular_module_round_trips() {
        let q = FieldSpec::Rationals;
        let p = dual_pair(q);
        let ext = build_dorroh_algebra(&p).unwrap();
        for side in [Side::Left, Side::Right, Side::Bi] {
            let reg = ModuleOverAlgebra::regular(&ext, side);
            let (ma, mi) = restrict_module(&p, &reg).unwrap();
            assert_eq!(assemble_module(&p, &ma, &mi, side).unwrap(), reg);
        }
    }

    #[test]
    fn incompatible_scalar_action_is_rejected() {
        let f2 = FieldSpec::Prime(2);
        let p = dual_pair(f2);
        // A = k acts by the identity, I acts on k by scalar 1 (not nilpotent)
        let ma = ModuleOverAlgebra::new(
            p.a().clone(),
            1,
            Side::Left,
            Some(SparseTensor3::from_i64(f2, [1, 1, 1], &[([0, 0, 0], 1)])),
            None,
        )
        .unwrap();
        let mi = ModuleOverAlgebra::new(
            p.i().clone(),
            1,
            Side::Left,
            Some(SparseTensor3::from_i64(f2, [1, 1, 1], &[([0, 0, 0], 1)])),
            None,
        )
        .unwrap();
        let err = assemble_module(&p, &ma, &mi, Side::Left).unwrap_err();
        assert_eq!(err.witness(), Some(vec![0, 0, 0]));
    }
}
