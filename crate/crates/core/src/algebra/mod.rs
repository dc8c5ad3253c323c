//! Associative algebras given by structure constants, bimodule actions and
//! Dorroh pairs of algebras.

mod extension;
mod iterated;
mod module;

use std::sync::OnceLock;

pub use extension::{
    build_dorroh_algebra, embeddings, split_algebra_extension, unit_commutes_report,
    unital_ideal_iso, universal_map_algebra,
};
pub(crate) use extension::direct_sum_basis;
pub use iterated::{check_iterated_algebra_triple, AlgebraTriple, MIXED_IDENTITIES};
pub use module::{assemble_module, check_module, restrict_module, ModuleOverAlgebra};

use crate::error::{Error, Result};
use crate::exactlin::{invert, solve_linear, FieldSpec, Matrix, Scalar, SparseTensor3};
use crate::laws::bracketing_witness;
use crate::report::Report;
use crate::Verified;

#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    labels: Option<Vec<String>>,
    mul: SparseTensor3,
    unit: OnceLock<Option<Vec<Scalar>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mul == other.mul
    }
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, mul: SparseTensor3) -> Result<Self> {
        if mul.dims() != [dim, dim, dim] {
            return Err(Error::Dimension(format!(
                "multiplication tensor has dims {:?}, expected [{dim}, {dim}, {dim}]",
                mul.dims()
            )));
        }
        if mul.field() != field {
            return Err(Error::Input(format!("multiplication tensor is over {}", mul.field())));
        }
        Ok(Algebra {
            field,
            dim,
            labels: None,
            mul,
            unit: OnceLock::new(),
        })
    }

    /// Integer table constructor; panics on malformed input.
    pub fn from_table(field: FieldSpec, dim: usize, table: &[([usize; 3], i64)]) -> Self {
        Self::new(field, dim, SparseTensor3::from_i64(field, [dim; 3], table)).expect("valid table")
    }

    /// The algebra with zero multiplication.
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self::new(field, dim, SparseTensor3::new(field, [dim; 3])).expect("valid dims")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Dimension(format!(
                "{} labels for a {}-dimensional algebra",
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

    pub fn mul(&self) -> &SparseTensor3 {
        &self.mul
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mul.apply(x, y)
    }

    /// The unit, computed on first use.
    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.get_or_init(|| compute_identity(self)).as_deref()
    }
}

pub fn check_associativity(a: &Algebra) -> Report {
    let mut r = Report::new();
    r.record("(xy)z = x(yz)", bracketing_witness(&a.mul, &a.mul, &a.mul, &a.mul));
    r
}

/// The two-sided identity of `a` in coordinates, if one exists.
pub fn find_identity(a: &Algebra) -> Option<Vec<Scalar>> {
    a.unit().map(<[Scalar]>::to_vec)
}

fn compute_identity(a: &Algebra) -> Option<Vec<Scalar>> {
    let n = a.dim;
    if n == 0 {
        return None;
    }
    let f = a.field;
    // unknown u: rows (side, i, k) encode u·e_i = e_i and e_i·u = e_i
    let mut m = Matrix::zeros(f, 2 * n * n, n);
    let mut rhs = vec![f.zero(); 2 * n * n];
    for ([x, y, k], c) in a.mul.iter().map(|(i, c)| (*i, c)) {
        // e_x e_y contains c e_k: as u·e_i take x free, i = y
        let r1 = y * n + k;
        m.set(r1, x, m.get(r1, x) + c);
        let r2 = n * n + x * n + k;
        m.set(r2, y, m.get(r2, y) + c);
    }
    for i in 0..n {
        rhs[i * n + i] = f.one();
        rhs[n * n + i * n + i] = f.one();
    }
    solve_linear(&m, &rhs).expect("consistent dimensions")
}

#[derive(Clone, Debug, PartialEq)]
pub struct BimoduleAction {
    acting_dim: usize,
    carrier_dim: usize,
    left: SparseTensor3,
    right: SparseTensor3,
}

impl BimoduleAction {
    /// `left` has dims `[n_A, n_I, n_I]`, `right` has dims `[n_I, n_A, n_I]`.
    pub fn new(left: SparseTensor3, right: SparseTensor3) -> Result<Self> {
        let [na, ni, ni2] = left.dims();
        if ni != ni2 || right.dims() != [ni, na, ni] {
            return Err(Error::Dimension(format!(
                "action tensors with dims {:?} and {:?} do not fit one carrier",
                left.dims(),
                right.dims()
            )));
        }
        if left.field() != right.field() {
            return Err(Error::Input("action tensors over different fields".into()));
        }
        Ok(BimoduleAction {
            acting_dim: na,
            carrier_dim: ni,
            left,
            right,
        })
    }

    pub fn zero(field: FieldSpec, acting_dim: usize, carrier_dim: usize) -> Self {
        BimoduleAction {
            acting_dim,
            carrier_dim,
            left: SparseTensor3::new(field, [acting_dim, carrier_dim, carrier_dim]),
            right: SparseTensor3::new(field, [carrier_dim, acting_dim, carrier_dim]),
        }
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn left(&self) -> &SparseTensor3 {
        &self.left
    }

    pub fn right(&self) -> &SparseTensor3 {
        &self.right
    }
}

/// A pair `(A, I)` with `I` an `A`-bimodule algebra. Validation runs once
/// and is cached.
#[derive(Clone, Debug)]
pub struct DorrohPairAlgebra {
    a: Algebra,
    i: Algebra,
    action: BimoduleAction,
    report: OnceLock<Report>,
}

impl PartialEq for DorrohPairAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.i == other.i && self.action == other.action
    }
}

impl DorrohPairAlgebra {
    pub fn new(a: Algebra, i: Algebra, action: BimoduleAction) -> Result<Self> {
        if action.acting_dim != a.dim || action.carrier_dim != i.dim {
            return Err(Error::Dimension(format!(
                "actions are {}x{}, carriers are {}x{}",
                action.acting_dim, action.carrier_dim, a.dim, i.dim
            )));
        }
        if a.field != i.field || action.left.field() != a.field {
            return Err(Error::Input("pair components over different fields".into()));
        }
        Ok(DorrohPairAlgebra {
            a,
            i,
            action,
            report: OnceLock::new(),
        })
    }

    /// Zero actions: the extension is the direct product.
    pub fn direct_product(a: Algebra, i: Algebra) -> Self {
        let action = BimoduleAction::zero(a.field, a.dim, i.dim);
        Self::new(a, i, action).expect("matching dims")
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn i(&self) -> &Algebra {
        &self.i
    }

    pub fn action(&self) -> &BimoduleAction {
        &self.action
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field
    }

    /// Returns the cached validation report, or an error carrying it.
    pub fn validated(&self) -> Result<&Self> {
        if check_dorroh_pair_algebra(self).is_pass() {
            Ok(self)
        } else {
            Err(Error::check(check_dorroh_pair_algebra(self)))
        }
    }
}

pub fn check_dorroh_pair_algebra(p: &DorrohPairAlgebra) -> Report {
    p.report.get_or_init(|| pair_report(p)).clone()
}

fn pair_report(p: &DorrohPairAlgebra) -> Report {
    let (ma, mi) = (&p.a.mul, &p.i.mul);
    let (l, r) = (&p.action.left, &p.action.right);
    let mut rep = Report::new();
    rep.record("A: (ab)c = a(bc)", bracketing_witness(ma, ma, ma, ma));
    rep.record("I: (xy)z = x(yz)", bracketing_witness(mi, mi, mi, mi));
    rep.record("(ab)x = a(bx)", bracketing_witness(l, ma, l, l));
    rep.record("(xa)b = x(ab)", bracketing_witness(r, r, r, ma));
    rep.record("(ax)b = a(xb)", bracketing_witness(r, l, l, r));
    rep.record("(ax)y = a(xy)", bracketing_witness(mi, l, l, mi));
    rep.record("(xa)y = x(ay)", bracketing_witness(mi, r, mi, l));
    rep.record("(xy)a = x(ya)", bracketing_witness(r, mi, mi, r));
    rep
}

#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
    verified: Verified,
}

impl AlgebraMorphism {
    /// `matrix` is `target.dim × source.dim`; column `i` is the image of `e_i`.
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map from dim {} to dim {}",
                matrix.rows(),
                matrix.cols(),
                source.dim,
                target.dim
            )));
        }
        Ok(AlgebraMorphism {
            source,
            target,
            matrix,
            verified: Verified::Unchecked,
        })
    }

    pub fn identity(a: &Algebra) -> Self {
        Self::new(a.clone(), a.clone(), Matrix::identity(a.field, a.dim)).expect("square")
    }

    pub fn zero(source: &Algebra, target: &Algebra) -> Self {
        let m = Matrix::zeros(source.field, target.dim, source.dim);
        Self::new(source.clone(), target.clone(), m).expect("dims match")
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn verified(&self) -> Verified {
        self.verified
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }
}

/// Checks multiplicativity on all basis pairs and upgrades the flag to `Hom`,
/// or to `Iso` when the matrix is also invertible.
pub fn verify_algebra_morphism(f: &mut AlgebraMorphism) -> Report {
    let mut rep = Report::new();
    let witness = multiplicativity_witness(f);
    let hom = rep.record("F(xy) = F(x)F(y)", witness);
    f.verified = if !hom {
        Verified::Unchecked
    } else if f.matrix.is_square() && invert(&f.matrix).expect("square").is_some() {
        Verified::Iso
    } else {
        Verified::Hom
    };
    rep
}

fn multiplicativity_witness(f: &AlgebraMorphism) -> Option<Vec<usize>> {
    let n = f.source.dim;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| f.matrix.column(i)).collect();
    let src = f.source.mul.pair_index();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![f.source.field.zero(); f.target.dim];
            for (k, c) in src.get(i, j) {
                for (t, v) in cols[*k].iter().enumerate() {
                    lhs[t] += &(c * v);
                }
            }
            if lhs != f.target.mul.apply(&cols[i], &cols[j]) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// Verifies a morphism and requires it to be an isomorphism.
pub(crate) fn certify_algebra_iso(f: &mut AlgebraMorphism, what: &str) -> Result<()> {
    let rep = verify_algebra_morphism(f);
    if !rep.is_pass() {
        return Err(Error::Internal(format!("{what} is not multiplicative: {}", rep.headline())));
    }
    if f.verified != Verified::Iso {
        return Err(Error::Internal(format!("{what} is not bijective")));
    }
    Ok(())
}
