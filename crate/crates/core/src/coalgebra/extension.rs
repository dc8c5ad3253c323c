use super::{
    certify_coalgebra_iso, coapply, push_forward, source_terms, verify_coalgebra_morphism,
    BicomoduleCoaction, Coalgebra, CoalgebraMorphism, DorrohPairCoalgebra,
};
use crate::algebra::direct_sum_basis;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, SparseTensor3};
use crate::report::Report;
use crate::Verified;

/// The coalgebra `C ⋉ P` on the basis `C`-block then `P`-block, with
/// `Δ(c, p) = Δ_C(c) + ρ_l(p) + ρ_r(p) + Δ_P(p)` placed blockwise.
pub fn build_dorroh_coalgebra(p: &DorrohPairCoalgebra) -> Result<Coalgebra> {
    p.validated()?;
    let (nc, np) = (p.c.dim, p.p.dim);
    let n = nc + np;
    let mut delta = SparseTensor3::new(p.field(), [n; 3]);
    p.c.delta.embed_into(&mut delta, [0, 0, 0]);
    p.coaction.rho_l.embed_into(&mut delta, [nc, 0, nc]);
    p.coaction.rho_r.embed_into(&mut delta, [nc, nc, 0]);
    p.p.delta.embed_into(&mut delta, [nc, nc, nc]);
    let ext = Coalgebra::new(p.field(), n, delta)?;
    match (p.c.labels(), p.p.labels()) {
        (Some(lc), Some(lp)) => ext.with_labels(lc.iter().chain(lp).cloned().collect()),
        _ => Ok(ext),
    }
}

/// The projections `π_C: C⋉P → C` and `π_P: C⋉P → P`, verified.
pub fn projections(p: &DorrohPairCoalgebra) -> Result<(CoalgebraMorphism, CoalgebraMorphism)> {
    let ext = build_dorroh_coalgebra(p)?;
    let (nc, np) = (p.c.dim, p.p.dim);
    let f = p.field();
    let mut pc = Matrix::zeros(f, nc, nc + np);
    for k in 0..nc {
        pc.set(k, k, f.one());
    }
    let mut pp = Matrix::zeros(f, np, nc + np);
    for k in 0..np {
        pp.set(k, nc + k, f.one());
    }
    let mut pc = CoalgebraMorphism::new(ext.clone(), p.c.clone(), pc)?;
    let mut pp = CoalgebraMorphism::new(ext, p.p.clone(), pp)?;
    for (m, name) in [(&mut pc, "π_C"), (&mut pp, "π_P")] {
        let rep = verify_coalgebra_morphism(m);
        if !rep.is_pass() {
            return Err(Error::Internal(format!("{name}: {}", rep.headline())));
        }
    }
    Ok((pc, pp))
}

/// Recovers `(C, P)` from a coalgebra `D = C ⊕ P` with `C` a subcoalgebra and
/// `P` a coideal. The returned isomorphism maps `C ⋉ P` onto `D` by
/// `(c, p) ↦ c + p`.
pub fn split_coalgebra_extension(
    d: &Coalgebra,
    c_basis: &[Vec<Scalar>],
    p_basis: &[Vec<Scalar>],
) -> Result<(DorrohPairCoalgebra, CoalgebraMorphism)> {
    let (s, s_inv) = direct_sum_basis(d.field, d.dim, c_basis, p_basis)?;
    let (nc, np) = (c_basis.len(), p_basis.len());
    let t = d.delta.rebase_cobilinear(&s, &s_inv, &s_inv);
    if let Some((idx, _)) = t.iter().find(|(k, _)| k[0] < nc && (k[1] >= nc || k[2] >= nc)) {
        return Err(Error::NotSubcoalgebra(vec![idx[0]]));
    }
    if let Some((idx, _)) = t.iter().find(|(k, _)| k[0] >= nc && k[1] < nc && k[2] < nc) {
        return Err(Error::NotCoideal(vec![idx[0]]));
    }
    let f = d.field;
    let c = Coalgebra::new(f, nc, t.block([0, 0, 0], [nc; 3]))?;
    let pp = Coalgebra::new(f, np, t.block([nc, nc, nc], [np; 3]))?;
    let co = BicomoduleCoaction::new(
        t.block([nc, 0, nc], [np, nc, np]),
        t.block([nc, nc, 0], [np, np, nc]),
    )?;
    let pair = DorrohPairCoalgebra::new(c, pp, co)?;
    pair.validated()?;
    let ext = build_dorroh_coalgebra(&pair)?;
    let mut iso = CoalgebraMorphism::new(ext, d.clone(), s)?;
    certify_coalgebra_iso(&mut iso, "split isomorphism")?;
    Ok((pair, iso))
}

fn is_counit(delta: &SparseTensor3, eps: &[Scalar]) -> bool {
    let n = delta.dims()[0];
    if eps.len() != n {
        return false;
    }
    let f = delta.field();
    (0..n).all(|k| {
        let mut left = vec![f.zero(); n];
        let mut right = vec![f.zero(); n];
        for (&[s, i, j], c) in delta.iter() {
            if s == k {
                left[j] += &(&eps[i] * c);
                right[i] += &(&eps[j] * c);
            }
        }
        let e = crate::exactlin::basis_vector(f, n, k);
        left == e && right == e
    })
}

/// `Σ p_(-1) ε_P(p_(0))` for every basis element of `P`, as columns.
fn left_contraction(p: &DorrohPairCoalgebra, eps: &[Scalar]) -> Vec<Vec<Scalar>> {
    let f = p.field();
    let mut cols = vec![vec![f.zero(); p.c.dim]; p.p.dim];
    for (&[x, c, y], a) in p.coaction.rho_l.iter() {
        cols[x][c] += &(a * &eps[y]);
    }
    cols
}

fn right_contraction(p: &DorrohPairCoalgebra, eps: &[Scalar]) -> Vec<Vec<Scalar>> {
    let f = p.field();
    let mut cols = vec![vec![f.zero(); p.c.dim]; p.p.dim];
    for (&[x, y, c], a) in p.coaction.rho_r.iter() {
        cols[x][c] += &(a * &eps[y]);
    }
    cols
}

/// Checks `Σ p_(-1) ε_P(p_(0)) = Σ ε_P(p_(0)) p_(1)` on every basis element.
pub fn counit_balance_check(p: &DorrohPairCoalgebra, eps_p: &[Scalar]) -> Result<Report> {
    if !is_counit(&p.p.delta, eps_p) {
        return Err(Error::Precondition("ε_P is not a counit of P".into()));
    }
    let l = left_contraction(p, eps_p);
    let r = right_contraction(p, eps_p);
    let mut rep = Report::new();
    let witness = (0..p.p.dim).find(|&x| l[x] != r[x]);
    rep.record("Σ p(-1)ε(p(0)) = Σ ε(p(0))p(1)", witness.map(|x| vec![x]));
    Ok(rep)
}

/// `ζ(c, p) = (c, p) − (Σ p_(-1) ε_P(p_(0)), 0)` from `C ⋉ P` onto the
/// direct product `C × P`, verified as a coalgebra isomorphism.
pub fn counital_split_iso(p: &DorrohPairCoalgebra) -> Result<CoalgebraMorphism> {
    p.validated()?;
    let eps = p
        .p
        .counit()
        .ok_or_else(|| Error::Precondition("P has no counit".into()))?
        .to_vec();
    let f = p.field();
    let nc = p.c.dim;
    let n = nc + p.p.dim;
    let mut m = Matrix::identity(f, n);
    for (x, col) in left_contraction(p, &eps).into_iter().enumerate() {
        for (c, v) in col.into_iter().enumerate() {
            m.set(c, nc + x, -v);
        }
    }
    let source = build_dorroh_coalgebra(p)?;
    let target = build_dorroh_coalgebra(&DorrohPairCoalgebra::direct_product(p.c.clone(), p.p.clone()))?;
    let mut zeta = CoalgebraMorphism::new(source, target, m)?;
    certify_coalgebra_iso(&mut zeta, "ζ")?;
    Ok(zeta)
}

/// The unique coalgebra map `η(d) = (φ(d), f(d))` from `D` to `C ⋉ P`.
pub fn universal_map_coalgebra(
    p: &DorrohPairCoalgebra,
    d: &Coalgebra,
    phi: &CoalgebraMorphism,
    f: &CoalgebraMorphism,
) -> Result<CoalgebraMorphism> {
    p.validated()?;
    if phi.source != *d || f.source != *d || phi.target != p.c || f.target != p.p {
        return Err(Error::Dimension("φ must map D to C and f must map D to P".into()));
    }
    for (m, name) in [(phi, "φ"), (f, "f")] {
        let mut m = m.clone();
        let rep = verify_coalgebra_morphism(&mut m);
        if !rep.is_pass() {
            return Err(Error::Precondition(format!(
                "{name} is not a coalgebra homomorphism: {}",
                rep.headline()
            )));
        }
    }
    let phi_cols: Vec<_> = (0..d.dim).map(|k| phi.matrix.column(k)).collect();
    let f_cols: Vec<_> = (0..d.dim).map(|k| f.matrix.column(k)).collect();
    let mut wl = None;
    let mut wr = None;
    for k in 0..d.dim {
        let dk = source_terms(&d.delta, k);
        if wl.is_none() && coapply(&p.coaction.rho_l, &f_cols[k]) != push_forward(&dk, &phi_cols, &f_cols) {
            wl = Some(vec![k]);
        }
        if wr.is_none() && coapply(&p.coaction.rho_r, &f_cols[k]) != push_forward(&dk, &f_cols, &phi_cols) {
            wr = Some(vec![k]);
        }
    }
    let mut rep = Report::new();
    rep.record("ρ_l f = (φ⊗f)Δ_D", wl);
    rep.record("ρ_r f = (f⊗φ)Δ_D", wr);
    if !rep.is_pass() {
        return Err(Error::check(rep));
    }
    let field = p.field();
    let (nc, n) = (p.c.dim, p.c.dim + p.p.dim);
    let mut m = Matrix::zeros(field, n, d.dim);
    for k in 0..d.dim {
        for (r, v) in phi_cols[k].iter().enumerate() {
            m.set(r, k, v.clone());
        }
        for (r, v) in f_cols[k].iter().enumerate() {
            m.set(nc + r, k, v.clone());
        }
    }
    let mut eta = CoalgebraMorphism::new(d.clone(), build_dorroh_coalgebra(p)?, m)?;
    let rep = verify_coalgebra_morphism(&mut eta);
    if eta.verified < Verified::Hom {
        return Err(Error::Internal(format!("η does not intertwine Δ: {}", rep.headline())));
    }
    Ok(eta)
}

/// Transports the coactions along a coalgebra map `f: C → D`, giving the pair
/// `(D, P)` with `ρ_l^D = (f⊗1)ρ_l` and `ρ_r^D = (1⊗f)ρ_r`.
pub fn pushforward_pair(p: &DorrohPairCoalgebra, f: &CoalgebraMorphism) -> Result<DorrohPairCoalgebra> {
    p.validated()?;
    if f.source != p.c {
        return Err(Error::Dimension("f must start at C".into()));
    }
    let mut g = f.clone();
    let rep = verify_coalgebra_morphism(&mut g);
    if !rep.is_pass() {
        return Err(Error::Precondition(format!(
            "f is not a coalgebra homomorphism: {}",
            rep.headline()
        )));
    }
    let (np, nd) = (p.p.dim, f.target.dim);
    let field = p.field();
    let mut rho_l = SparseTensor3::new(field, [np, nd, np]);
    for (&[x, c, y], a) in p.coaction.rho_l.iter() {
        for t in 0..nd {
            rho_l.add([x, t, y], &(a * f.matrix.get(t, c)));
        }
    }
    let mut rho_r = SparseTensor3::new(field, [np, np, nd]);
    for (&[x, y, c], a) in p.coaction.rho_r.iter() {
        for t in 0..nd {
            rho_r.add([x, y, t], &(a * f.matrix.get(t, c)));
        }
    }
    let out = DorrohPairCoalgebra::new(
        f.target.clone(),
        p.p.clone(),
        BicomoduleCoaction::new(rho_l, rho_r)?,
    )?;
    let check = super::check_dorroh_pair_coalgebra(&out);
    if !check.is_pass() {
        return Err(Error::Internal(format!("pushed-forward pair: {}", check.headline())));
    }
    Ok(out)
}
