use super::{
    certify_algebra_iso, verify_algebra_morphism, Algebra, AlgebraMorphism, BimoduleAction,
    DorrohPairAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{basis_vector, invert, FieldSpec, Matrix, Scalar, SparseTensor3};
use crate::report::Report;
use crate::Verified;

/// The algebra `A ⋉ I` on the basis `A`-block then `I`-block, with
/// `(a, x)(b, y) = (ab, ay + xb + xy)`.
pub fn build_dorroh_algebra(p: &DorrohPairAlgebra) -> Result<Algebra> {
    p.validated()?;
    let (na, ni) = (p.a.dim, p.i.dim);
    let n = na + ni;
    let mut mul = SparseTensor3::new(p.field(), [n; 3]);
    p.a.mul.embed_into(&mut mul, [0, 0, 0]);
    p.action.left.embed_into(&mut mul, [0, na, na]);
    p.action.right.embed_into(&mut mul, [na, 0, na]);
    p.i.mul.embed_into(&mut mul, [na, na, na]);
    let ext = Algebra::new(p.field(), n, mul)?;
    match (p.a.labels(), p.i.labels()) {
        (Some(la), Some(li)) => ext.with_labels(la.iter().chain(li).cloned().collect()),
        _ => Ok(ext),
    }
}

/// The embeddings `τ_A: A → A⋉I` and `τ_I: I → A⋉I`, verified.
pub fn embeddings(p: &DorrohPairAlgebra) -> Result<(AlgebraMorphism, AlgebraMorphism)> {
    let ext = build_dorroh_algebra(p)?;
    let (na, ni) = (p.a.dim, p.i.dim);
    let f = p.field();
    let mut ta = Matrix::zeros(f, na + ni, na);
    for k in 0..na {
        ta.set(k, k, f.one());
    }
    let mut ti = Matrix::zeros(f, na + ni, ni);
    for k in 0..ni {
        ti.set(na + k, k, f.one());
    }
    let mut ta = AlgebraMorphism::new(p.a.clone(), ext.clone(), ta)?;
    let mut ti = AlgebraMorphism::new(p.i.clone(), ext, ti)?;
    for (m, name) in [(&mut ta, "τ_A"), (&mut ti, "τ_I")] {
        let rep = verify_algebra_morphism(m);
        if !rep.is_pass() {
            return Err(Error::Internal(format!("{name}: {}", rep.headline())));
        }
    }
    Ok((ta, ti))
}

pub(crate) fn direct_sum_basis(
    field: FieldSpec,
    dim: usize,
    first: &[Vec<Scalar>],
    second: &[Vec<Scalar>],
) -> Result<(Matrix, Matrix)> {
    if let Some(v) = first.iter().chain(second).find(|v| v.len() != dim) {
        return Err(Error::Dimension(format!(
            "basis vector of length {} in a {dim}-dimensional space",
            v.len()
        )));
    }
    if first.len() + second.len() != dim {
        return Err(Error::NotDirectSum);
    }
    let cols: Vec<Vec<Scalar>> = first.iter().chain(second).cloned().collect();
    if cols.iter().flatten().any(|s| !field.owns(s)) {
        return Err(Error::Input(format!("basis vector entry outside {field}")));
    }
    let s = Matrix::from_columns(field, dim, &cols)?;
    let s_inv = invert(&s)?.ok_or(Error::NotDirectSum)?;
    Ok((s, s_inv))
}

/// Recovers the pair `(A, I)` from an algebra `B = A ⊕ I` with `A` a
/// subalgebra and `I` an ideal. The returned isomorphism maps `A ⋉ I` onto
/// `B` by `(a, x) ↦ a + x`.
pub fn split_algebra_extension(
    b: &Algebra,
    a_basis: &[Vec<Scalar>],
    i_basis: &[Vec<Scalar>],
) -> Result<(DorrohPairAlgebra, AlgebraMorphism)> {
    let (s, s_inv) = direct_sum_basis(b.field, b.dim, a_basis, i_basis)?;
    let na = a_basis.len();
    let ni = i_basis.len();
    let t = b.mul.rebase_bilinear(&s, &s, &s_inv);
    if let Some((idx, _)) = t.iter().find(|(k, _)| k[0] < na && k[1] < na && k[2] >= na) {
        return Err(Error::NotSubalgebra(vec![idx[0], idx[1]]));
    }
    if let Some((idx, _)) = t.iter().find(|(k, _)| (k[0] >= na || k[1] >= na) && k[2] < na) {
        return Err(Error::NotIdeal(vec![idx[0], idx[1]]));
    }
    let f = b.field;
    let a = Algebra::new(f, na, t.block([0, 0, 0], [na; 3]))?;
    let i = Algebra::new(f, ni, t.block([na, na, na], [ni; 3]))?;
    let action = BimoduleAction::new(
        t.block([0, na, na], [na, ni, ni]),
        t.block([na, 0, na], [ni, na, ni]),
    )?;
    let pair = DorrohPairAlgebra::new(a, i, action)?;
    pair.validated()?;
    let ext = build_dorroh_algebra(&pair)?;
    let mut iso = AlgebraMorphism::new(ext, b.clone(), s)?;
    certify_algebra_iso(&mut iso, "split isomorphism")?;
    Ok((pair, iso))
}

/// Checks `a·1_I = 1_I·a` for every basis element `a` of `A`.
pub fn unit_commutes_report(p: &DorrohPairAlgebra, unit_i: &[Scalar]) -> Report {
    let f = p.field();
    let mut rep = Report::new();
    let witness = (0..p.a.dim).find(|&a| {
        let e = basis_vector(f, p.a.dim, a);
        p.action.left.apply(&e, unit_i) != p.action.right.apply(unit_i, &e)
    });
    rep.record("a·1_I = 1_I·a", witness.map(|a| vec![a]));
    rep
}

/// `η(a, x) = (a, x + a·1_I)` from `A ⋉ I` onto the direct product `A × I`,
/// verified as an algebra isomorphism.
pub fn unital_ideal_iso(p: &DorrohPairAlgebra) -> Result<AlgebraMorphism> {
    p.validated()?;
    let unit_i = p
        .i
        .unit()
        .ok_or_else(|| Error::Precondition("I has no identity".into()))?
        .to_vec();
    let commutes = unit_commutes_report(p, &unit_i);
    if !commutes.is_pass() {
        return Err(Error::Internal(format!("unit of I is not central: {}", commutes.headline())));
    }
    let f = p.field();
    let (na, ni) = (p.a.dim, p.i.dim);
    let source = build_dorroh_algebra(p)?;
    let target = build_dorroh_algebra(&DorrohPairAlgebra::direct_product(p.a.clone(), p.i.clone()))?;
    let mut m = Matrix::identity(f, na + ni);
    for a in 0..na {
        let shift = p.action.left.apply(&basis_vector(f, na, a), &unit_i);
        for (x, v) in shift.into_iter().enumerate() {
            m.set(na + x, a, v);
        }
    }
    let mut eta = AlgebraMorphism::new(source, target, m)?;
    certify_algebra_iso(&mut eta, "η")?;
    Ok(eta)
}

/// The unique algebra map `η(a, x) = φ(a) + f(x)` from `A ⋉ I` to `B`
/// extending a Dorroh homomorphism `(φ, f)`.
pub fn universal_map_algebra(
    p: &DorrohPairAlgebra,
    b: &Algebra,
    phi: &AlgebraMorphism,
    f: &AlgebraMorphism,
) -> Result<AlgebraMorphism> {
    p.validated()?;
    if phi.source != p.a || f.source != p.i || phi.target != *b || f.target != *b {
        return Err(Error::Dimension(
            "φ must map A to B and f must map I to B".into(),
        ));
    }
    for (m, name) in [(phi, "φ"), (f, "f")] {
        let mut m = m.clone();
        let rep = verify_algebra_morphism(&mut m);
        if !rep.is_pass() {
            return Err(Error::Precondition(format!(
                "{name} is not an algebra homomorphism: {}",
                rep.headline()
            )));
        }
    }
    let field = p.field();
    let (na, ni) = (p.a.dim, p.i.dim);
    let phi_cols: Vec<_> = (0..na).map(|a| phi.matrix.column(a)).collect();
    let f_cols: Vec<_> = (0..ni).map(|x| f.matrix.column(x)).collect();
    let left = p.action.left.pair_index();
    let right = p.action.right.pair_index();
    let image = |terms: &[(usize, Scalar)]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); b.dim];
        for (y, c) in terms {
            for (t, v) in f_cols[*y].iter().enumerate() {
                out[t] += &(c * v);
            }
        }
        out
    };
    let mut rep = Report::new();
    let mut wl = None;
    let mut wr = None;
    for a in 0..na {
        for x in 0..ni {
            if wl.is_none() && image(left.get(a, x)) != b.product(&phi_cols[a], &f_cols[x]) {
                wl = Some(vec![a, x]);
            }
        }
    }
    for x in 0..ni {
        for a in 0..na {
            if wr.is_none() && image(right.get(x, a)) != b.product(&f_cols[x], &phi_cols[a]) {
                wr = Some(vec![x, a]);
            }
        }
    }
    rep.record("f(ax) = φ(a)f(x)", wl);
    rep.record("f(xa) = f(x)φ(a)", wr);
    if !rep.is_pass() {
        return Err(Error::check(rep));
    }
    let cols: Vec<Vec<Scalar>> = phi_cols.into_iter().chain(f_cols).collect();
    let m = Matrix::from_columns(field, b.dim, &cols)?;
    let mut eta = AlgebraMorphism::new(build_dorroh_algebra(p)?, b.clone(), m)?;
    let rep = verify_algebra_morphism(&mut eta);
    if eta.verified < Verified::Hom {
        return Err(Error::Internal(format!("η is not multiplicative: {}", rep.headline())));
    }
    Ok(eta)
}
