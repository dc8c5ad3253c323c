//! Coassociative coalgebras given by structure constants, bicomodule
//! coactions and Dorroh pairs of coalgebras.

mod comodule;
mod extension;
mod iterated;

use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use comodule::{assemble_comodule, check_comodule, restrict_comodule, ComoduleOverCoalgebra};
pub use extension::{
    build_dorroh_coalgebra, counit_balance_check, counital_split_iso, projections,
    pushforward_pair, split_coalgebra_extension, universal_map_coalgebra,
};
pub use iterated::{check_iterated_coalgebra_triple, CoalgebraTriple, MIXED_IDENTITIES};

use crate::error::{Error, Result};
use crate::exactlin::{invert, solve_linear, FieldSpec, Matrix, Scalar, SparseTensor3};
use crate::laws::{coidentity_witness, CoSide};
use crate::report::Report;
use crate::Verified;

#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: FieldSpec,
    dim: usize,
    labels: Option<Vec<String>>,
    delta: SparseTensor3,
    counit: OnceLock<Option<Vec<Scalar>>>,
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.delta == other.delta
    }
}

impl Coalgebra {
    pub fn new(field: FieldSpec, dim: usize, delta: SparseTensor3) -> Result<Self> {
        if delta.dims() != [dim, dim, dim] {
            return Err(Error::Dimension(format!(
                "comultiplication tensor has dims {:?}, expected [{dim}, {dim}, {dim}]",
                delta.dims()
            )));
        }
        if delta.field() != field {
            return Err(Error::Input(format!("comultiplication tensor is over {}", delta.field())));
        }
        Ok(Coalgebra {
            field,
            dim,
            labels: None,
            delta,
            counit: OnceLock::new(),
        })
    }

    /// Integer table constructor; panics on malformed input.
    pub fn from_table(field: FieldSpec, dim: usize, table: &[([usize; 3], i64)]) -> Self {
        Self::new(field, dim, SparseTensor3::from_i64(field, [dim; 3], table)).expect("valid table")
    }

    /// The coalgebra with zero comultiplication.
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self::new(field, dim, SparseTensor3::new(field, [dim; 3])).expect("valid dims")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Dimension(format!(
                "{} labels for a {}-dimensional coalgebra",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn delta(&self) -> &SparseTensor3 {
        &self.delta
    }

    /// The counit, computed on first use.
    pub fn counit(&self) -> Option<&[Scalar]> {
        self.counit.get_or_init(|| compute_counit(self)).as_deref()
    }
}

pub fn check_coassociativity(c: &Coalgebra) -> Report {
    let d = &c.delta;
    let mut r = Report::new();
    r.record(
        "(Δ⊗1)Δ = (1⊗Δ)Δ",
        coidentity_witness(CoSide::first(d, d), CoSide::second(d, d)),
    );
    r
}

pub fn find_counit(c: &Coalgebra) -> Option<Vec<Scalar>> {
    c.counit().map(<[Scalar]>::to_vec)
}

fn compute_counit(c: &Coalgebra) -> Option<Vec<Scalar>> {
    counit_of(&c.delta)
}

/// Solves `(ε⊗1)Δ = id = (1⊗ε)Δ` for a comultiplication tensor.
pub(crate) fn counit_of(delta: &SparseTensor3) -> Option<Vec<Scalar>> {
    let n = delta.dims()[0];
    if n == 0 {
        return None;
    }
    let f = delta.field();
    let mut m = Matrix::zeros(f, 2 * n * n, n);
    let mut rhs = vec![f.zero(); 2 * n * n];
    for (&[k, i, j], c) in delta.iter() {
        // (ε⊗1): coefficient of e_j in the image of e_k picks up ε_i
        let r1 = k * n + j;
        m.set(r1, i, m.get(r1, i) + c);
        let r2 = n * n + k * n + i;
        m.set(r2, j, m.get(r2, j) + c);
    }
    for k in 0..n {
        rhs[k * n + k] = f.one();
        rhs[n * n + k * n + k] = f.one();
    }
    solve_linear(&m, &rhs).expect("consistent dimensions")
}

/// Left and right coactions of `C` on `P`. `rho_l` has dims
/// `[n_P, n_C, n_P]`, `rho_r` has dims `[n_P, n_P, n_C]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BicomoduleCoaction {
    coacting_dim: usize,
    carrier_dim: usize,
    rho_l: SparseTensor3,
    rho_r: SparseTensor3,
}

impl BicomoduleCoaction {
    pub fn new(rho_l: SparseTensor3, rho_r: SparseTensor3) -> Result<Self> {
        let [np, nc, np2] = rho_l.dims();
        if np != np2 || rho_r.dims() != [np, np, nc] {
            return Err(Error::Dimension(format!(
                "coaction tensors with dims {:?} and {:?} do not fit one carrier",
                rho_l.dims(),
                rho_r.dims()
            )));
        }
        if rho_l.field() != rho_r.field() {
            return Err(Error::Input("coaction tensors over different fields".into()));
        }
        Ok(BicomoduleCoaction {
            coacting_dim: nc,
            carrier_dim: np,
            rho_l,
            rho_r,
        })
    }

    pub fn zero(field: FieldSpec, coacting_dim: usize, carrier_dim: usize) -> Self {
        BicomoduleCoaction {
            coacting_dim,
            carrier_dim,
            rho_l: SparseTensor3::new(field, [carrier_dim, coacting_dim, carrier_dim]),
            rho_r: SparseTensor3::new(field, [carrier_dim, carrier_dim, coacting_dim]),
        }
    }

    pub fn coacting_dim(&self) -> usize {
        self.coacting_dim
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn rho_l(&self) -> &SparseTensor3 {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &SparseTensor3 {
        &self.rho_r
    }
}

/// A pair `(C, P)` with `P` a `C`-bicomodule coalgebra. Validation runs
/// once and is cached.
#[derive(Clone, Debug)]
pub struct DorrohPairCoalgebra {
    c: Coalgebra,
    p: Coalgebra,
    coaction: BicomoduleCoaction,
    report: OnceLock<Report>,
}

impl PartialEq for DorrohPairCoalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.p == other.p && self.coaction == other.coaction
    }
}

impl DorrohPairCoalgebra {
    pub fn new(c: Coalgebra, p: Coalgebra, coaction: BicomoduleCoaction) -> Result<Self> {
        if coaction.coacting_dim != c.dim || coaction.carrier_dim != p.dim {
            return Err(Error::Dimension(format!(
                "coactions are {}x{}, carriers are {}x{}",
                coaction.coacting_dim, coaction.carrier_dim, c.dim, p.dim
            )));
        }
        if c.field != p.field || coaction.rho_l.field() != c.field {
            return Err(Error::Input("pair components over different fields".into()));
        }
        Ok(DorrohPairCoalgebra {
            c,
            p,
            coaction,
            report: OnceLock::new(),
        })
    }

    /// Zero coactions: the extension is the direct product.
    pub fn direct_product(c: Coalgebra, p: Coalgebra) -> Self {
        let co = BicomoduleCoaction::zero(c.field, c.dim, p.dim);
        Self::new(c, p, co).expect("matching dims")
    }

    pub fn c(&self) -> &Coalgebra {
        &self.c
    }

    pub fn p(&self) -> &Coalgebra {
        &self.p
    }

    pub fn coaction(&self) -> &BicomoduleCoaction {
        &self.coaction
    }

    pub fn field(&self) -> FieldSpec {
        self.c.field
    }

    pub fn validated(&self) -> Result<&Self> {
        let rep = check_dorroh_pair_coalgebra(self);
        if rep.is_pass() {
            Ok(self)
        } else {
            Err(Error::check(rep))
        }
    }
}

pub fn check_dorroh_pair_coalgebra(p: &DorrohPairCoalgebra) -> Report {
    p.report.get_or_init(|| pair_report(p)).clone()
}

fn pair_report(p: &DorrohPairCoalgebra) -> Report {
    let (dc, dp) = (&p.c.delta, &p.p.delta);
    let (l, r) = (&p.coaction.rho_l, &p.coaction.rho_r);
    let mut rep = Report::new();
    let first = CoSide::first;
    let second = CoSide::second;
    rep.record("C: (Δ⊗1)Δ = (1⊗Δ)Δ", coidentity_witness(first(dc, dc), second(dc, dc)));
    rep.record("P: (Δ⊗1)Δ = (1⊗Δ)Δ", coidentity_witness(first(dp, dp), second(dp, dp)));
    rep.record("(Δ_C⊗1)ρ_l = (1⊗ρ_l)ρ_l", coidentity_witness(first(dc, l), second(l, l)));
    rep.record("(ρ_r⊗1)ρ_r = (1⊗Δ_C)ρ_r", coidentity_witness(first(r, r), second(dc, r)));
    rep.record("(ρ_l⊗1)ρ_r = (1⊗ρ_r)ρ_l", coidentity_witness(first(l, r), second(r, l)));
    rep.record("(1⊗ρ_r)Δ_P = (Δ_P⊗1)ρ_r", coidentity_witness(second(r, dp), first(dp, r)));
    rep.record("(ρ_l⊗1)Δ_P = (1⊗Δ_P)ρ_l", coidentity_witness(first(l, dp), second(dp, l)));
    rep.record("(ρ_r⊗1)Δ_P = (1⊗ρ_l)Δ_P", coidentity_witness(first(r, dp), second(l, dp)));
    rep
}

#[derive(Clone, Debug)]
pub struct CoalgebraMorphism {
    source: Coalgebra,
    target: Coalgebra,
    matrix: Matrix,
    verified: Verified,
}

impl CoalgebraMorphism {
    /// `matrix` is `target.dim × source.dim`; column `i` is the image of `e_i`.
    pub fn new(source: Coalgebra, target: Coalgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map from dim {} to dim {}",
                matrix.rows(),
                matrix.cols(),
                source.dim,
                target.dim
            )));
        }
        Ok(CoalgebraMorphism {
            source,
            target,
            matrix,
            verified: Verified::Unchecked,
        })
    }

    pub fn identity(c: &Coalgebra) -> Self {
        Self::new(c.clone(), c.clone(), Matrix::identity(c.field, c.dim)).expect("square")
    }

    pub fn zero(source: &Coalgebra, target: &Coalgebra) -> Self {
        let m = Matrix::zeros(source.field, target.dim, source.dim);
        Self::new(source.clone(), target.clone(), m).expect("dims match")
    }

    pub fn source(&self) -> &Coalgebra {
        &self.source
    }

    pub fn target(&self) -> &Coalgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn verified(&self) -> Verified {
        self.verified
    }
}

pub(crate) type Tensor2 = BTreeMap<[usize; 2], Scalar>;

pub(crate) fn add_to(acc: &mut Tensor2, idx: [usize; 2], v: Scalar) {
    if v.is_zero() {
        return;
    }
    let e = acc.entry(idx).or_insert_with(|| v.field().zero());
    *e += &v;
    if e.is_zero() {
        acc.remove(&idx);
    }
}

/// `Σ_t v_t T(e_t)` for a cobilinear tensor `T`.
pub(crate) fn coapply(t: &SparseTensor3, v: &[Scalar]) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&[k, i, j], c) in t.iter() {
        if !v[k].is_zero() {
            add_to(&mut out, [i, j], &v[k] * c);
        }
    }
    out
}

/// `(F ⊗ G)(Σ c e_i ⊗ e_j)` where `F`, `G` are given by their columns.
pub(crate) fn push_forward(terms: &Tensor2, f: &[Vec<Scalar>], g: &[Vec<Scalar>]) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&[i, j], c) in terms {
        for (a, x) in f[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = c * x;
            for (b, y) in g[j].iter().enumerate() {
                if !y.is_zero() {
                    add_to(&mut out, [a, b], &cx * y);
                }
            }
        }
    }
    out
}

pub(crate) fn source_terms(t: &SparseTensor3, k: usize) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&[s, i, j], c) in t.iter() {
        if s == k {
            add_to(&mut out, [i, j], c.clone());
        }
    }
    out
}

pub fn verify_coalgebra_morphism(f: &mut CoalgebraMorphism) -> Report {
    let mut rep = Report::new();
    let cols: Vec<Vec<Scalar>> = (0..f.source.dim).map(|i| f.matrix.column(i)).collect();
    let witness = (0..f.source.dim).find(|&k| {
        let lhs = coapply(&f.target.delta, &cols[k]);
        let rhs = push_forward(&source_terms(&f.source.delta, k), &cols, &cols);
        lhs != rhs
    });
    let hom = rep.record("ΔF = (F⊗F)Δ", witness.map(|k| vec![k]));
    f.verified = if !hom {
        Verified::Unchecked
    } else if f.matrix.is_square() && invert(&f.matrix).expect("square").is_some() {
        Verified::Iso
    } else {
        Verified::Hom
    };
    rep
}

pub(crate) fn certify_coalgebra_iso(f: &mut CoalgebraMorphism, what: &str) -> Result<()> {
    let rep = verify_coalgebra_morphism(f);
    if !rep.is_pass() {
        return Err(Error::Internal(format!("{what} does not intertwine Δ: {}", rep.headline())));
    }
    if f.verified != Verified::Iso {
        return Err(Error::Internal(format!("{what} is not bijective")));
    }
    Ok(())
}
