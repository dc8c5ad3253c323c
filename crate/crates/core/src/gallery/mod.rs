//! Named instances and pair constructors.
//!
//! Every constructor validates its output, so anything obtained from this
//! module is ready to be built, split or dualized.

mod random;

pub use random::PairSampler;

use crate::algebra::{
    build_dorroh_algebra, certify_algebra_iso, find_identity, Algebra, AlgebraMorphism,
    AlgebraTriple, BimoduleAction, DorrohPairAlgebra, ModuleOverAlgebra,
};
use crate::coalgebra::{
    find_counit, BicomoduleCoaction, Coalgebra, CoalgebraTriple, ComoduleOverCoalgebra,
    DorrohPairCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, SparseTensor3};
use crate::findual::RecurrentSequence;
use crate::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Algebra,
    Coalgebra,
    Sequence,
}

/// A catalog name with the properties its instances are checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: InstanceKind,
    /// `(co)unital?`; `None` for sequences.
    pub unital: Option<bool>,
}

pub const CATALOG: &[CatalogEntry] = &[
    entry("k", InstanceKind::Algebra, Some(true)),
    entry("dual_numbers", InstanceKind::Algebra, Some(true)),
    entry("M2", InstanceKind::Algebra, Some(true)),
    entry("kZ2", InstanceKind::Algebra, Some(true)),
    entry("nilpotent1", InstanceKind::Algebra, Some(false)),
    entry("trunc_poly(n)", InstanceKind::Algebra, Some(true)),
    entry("trunc_ideal(n)", InstanceKind::Algebra, Some(false)),
    entry("Mc2", InstanceKind::Coalgebra, Some(true)),
    entry("grouplikes(n)", InstanceKind::Coalgebra, Some(true)),
    entry("divided_power(n)", InstanceKind::Coalgebra, Some(true)),
    entry("zero_coalgebra(n)", InstanceKind::Coalgebra, Some(false)),
    entry("fibonacci", InstanceKind::Sequence, None),
    entry("geometric(q)", InstanceKind::Sequence, None),
];

const fn entry(name: &'static str, kind: InstanceKind, unital: Option<bool>) -> CatalogEntry {
    CatalogEntry { name, kind, unital }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Sequence(RecurrentSequence),
}

fn labelled_algebra(a: Algebra, labels: &[&str]) -> Algebra {
    a.with_labels(labels.iter().map(|s| s.to_string()).collect())
        .expect("label count")
}

fn labelled_coalgebra(c: Coalgebra, labels: Vec<String>) -> Coalgebra {
    c.with_labels(labels).expect("label count")
}

pub fn k(f: FieldSpec) -> Algebra {
    labelled_algebra(Algebra::from_table(f, 1, &[([0, 0, 0], 1)]), &["1"])
}

pub fn dual_numbers(f: FieldSpec) -> Algebra {
    trunc_poly(f, 1)
}

/// `e_ij` at index `2i + j`.
pub fn m2(f: FieldSpec) -> Algebra {
    let mut table = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                table.push(([2 * i + j, 2 * j + l, 2 * i + l], 1));
            }
        }
    }
    labelled_algebra(Algebra::from_table(f, 4, &table), &["e11", "e12", "e21", "e22"])
}

pub fn k_z2(f: FieldSpec) -> Algebra {
    let table = [([0, 0, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1), ([1, 1, 0], 1)];
    labelled_algebra(Algebra::from_table(f, 2, &table), &["1", "g"])
}

pub fn nilpotent1(f: FieldSpec) -> Algebra {
    labelled_algebra(Algebra::zero(f, 1), &["x"])
}

/// `k[x]/(x^{n+1})` on `1, x, ..., x^n`.
pub fn trunc_poly(f: FieldSpec, n: usize) -> Algebra {
    let mut table = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            table.push(([a, b, a + b], 1));
        }
    }
    let labels: Vec<String> = (0..=n).map(power_label).collect();
    Algebra::from_table(f, n + 1, &table)
        .with_labels(labels)
        .expect("label count")
}

/// The ideal `span{x, ..., x^n}` of `k[x]/(x^{n+1})`.
pub fn trunc_ideal(f: FieldSpec, n: usize) -> Algebra {
    let mut table = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a + b <= n {
                table.push(([a - 1, b - 1, a + b - 1], 1));
            }
        }
    }
    let labels: Vec<String> = (1..=n).map(power_label).collect();
    Algebra::from_table(f, n, &table)
        .with_labels(labels)
        .expect("label count")
}

fn power_label(e: usize) -> String {
    match e {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x^{e}"),
    }
}

/// Matrix coalgebra: `Δ(e_ij) = Σ_l e_il ⊗ e_lj`.
pub fn mc2(f: FieldSpec) -> Coalgebra {
    let mut table = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                table.push(([2 * i + j, 2 * i + l, 2 * l + j], 1));
            }
        }
    }
    let labels = ["e11", "e12", "e21", "e22"].map(String::from).to_vec();
    labelled_coalgebra(Coalgebra::from_table(f, 4, &table), labels)
}

pub fn grouplikes(f: FieldSpec, n: usize) -> Coalgebra {
    let table: Vec<_> = (0..n).map(|i| ([i, i, i], 1)).collect();
    let labels = (1..=n).map(|i| format!("g{i}")).collect();
    labelled_coalgebra(Coalgebra::from_table(f, n, &table), labels)
}

/// `Δ(d_m) = Σ_{i+j=m} d_i ⊗ d_j` on `d_0, ..., d_n`.
pub fn divided_power(f: FieldSpec, n: usize) -> Coalgebra {
    let mut table = Vec::new();
    for m in 0..=n {
        for i in 0..=m {
            table.push(([m, i, m - i], 1));
        }
    }
    let labels = (0..=n).map(|i| format!("d{i}")).collect();
    labelled_coalgebra(Coalgebra::from_table(f, n + 1, &table), labels)
}

pub fn zero_coalgebra(f: FieldSpec, n: usize) -> Coalgebra {
    let labels = (1..=n).map(|i| format!("p{i}")).collect();
    labelled_coalgebra(Coalgebra::zero(f, n), labels)
}

/// `s_0 = 0, s_1 = s_2 = 1, s_n = s_{n-1} + s_{n-2}`.
pub fn fibonacci(f: FieldSpec) -> RecurrentSequence {
    RecurrentSequence::from_i64(f, Some(0), &[1, 1], &[1, 1])
}

/// `s_n = q^n` with `s_0 = 1`.
pub fn geometric(q: Scalar) -> RecurrentSequence {
    let f = q.field();
    RecurrentSequence::new(f, Some(f.one()), vec![q.clone()], vec![q]).expect("order 1")
}

fn parse_call(name: &str) -> Result<(&str, Vec<&str>)> {
    let name = name.trim();
    match name.find('(') {
        None => Ok((name, Vec::new())),
        Some(open) => {
            let inner = name[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Input(format!("unbalanced parentheses in {name:?}")))?;
            Ok((&name[..open], inner.split(',').map(str::trim).collect()))
        }
    }
}

fn one_count(name: &str, args: &[&str]) -> Result<usize> {
    match args {
        [n] => n
            .parse()
            .map_err(|_| Error::Input(format!("{name}: expected a count, got {n:?}"))),
        _ => Err(Error::Input(format!("{name} takes exactly one argument"))),
    }
}

/// Looks up a catalog instance, for example `M2`, `trunc_poly(3)` or
/// `geometric(2)`, and checks its expected properties.
pub fn instance(name: &str, f: FieldSpec) -> Result<Instance> {
    let (head, args) = parse_call(name)?;
    let no_args = |x: Instance| {
        if args.is_empty() {
            Ok(x)
        } else {
            Err(Error::Input(format!("{head} takes no arguments")))
        }
    };
    let positive = |n: usize| {
        if n == 0 {
            Err(Error::Input(format!("{head} needs a positive parameter")))
        } else {
            Ok(n)
        }
    };
    let inst = match head {
        "k" => no_args(Instance::Algebra(k(f)))?,
        "dual_numbers" => no_args(Instance::Algebra(dual_numbers(f)))?,
        "M2" => no_args(Instance::Algebra(m2(f)))?,
        "kZ2" => no_args(Instance::Algebra(k_z2(f)))?,
        "nilpotent1" => no_args(Instance::Algebra(nilpotent1(f)))?,
        "trunc_poly" => Instance::Algebra(trunc_poly(f, one_count(head, &args)?)),
        "trunc_ideal" => Instance::Algebra(trunc_ideal(f, positive(one_count(head, &args)?)?)),
        "Mc2" => no_args(Instance::Coalgebra(mc2(f)))?,
        "grouplikes" => Instance::Coalgebra(grouplikes(f, positive(one_count(head, &args)?)?)),
        "divided_power" => Instance::Coalgebra(divided_power(f, one_count(head, &args)?)),
        "zero_coalgebra" => Instance::Coalgebra(zero_coalgebra(f, positive(one_count(head, &args)?)?)),
        "fibonacci" => no_args(Instance::Sequence(fibonacci(f)))?,
        "geometric" => match args.as_slice() {
            [q] => Instance::Sequence(geometric(f.parse(q)?)),
            _ => return Err(Error::Input("geometric takes exactly one argument".into())),
        },
        _ => return Err(Error::Input(format!("unknown gallery instance {name:?}"))),
    };
    let expected = CATALOG
        .iter()
        .find(|e| e.name.split('(').next() == Some(head))
        .expect("every constructed head is catalogued");
    match &inst {
        Instance::Algebra(a) => {
            let a = validated_algebra(a)?;
            if Some(find_identity(a).is_some()) != expected.unital {
                return Err(Error::Internal(format!("{name}: unexpected unitality")));
            }
        }
        Instance::Coalgebra(c) => {
            let c = validated_coalgebra(c)?;
            if Some(find_counit(c).is_some()) != expected.unital {
                return Err(Error::Internal(format!("{name}: unexpected counitality")));
            }
        }
        Instance::Sequence(_) => {}
    }
    Ok(inst)
}

fn validated_algebra(a: &Algebra) -> Result<&Algebra> {
    let rep = crate::algebra::check_associativity(a);
    if rep.is_pass() {
        Ok(a)
    } else {
        Err(Error::check(rep))
    }
}

fn validated_coalgebra(c: &Coalgebra) -> Result<&Coalgebra> {
    let rep = crate::coalgebra::check_coassociativity(c);
    if rep.is_pass() {
        Ok(c)
    } else {
        Err(Error::check(rep))
    }
}

fn checked_algebra_pair(p: DorrohPairAlgebra) -> Result<DorrohPairAlgebra> {
    p.validated()?;
    Ok(p)
}

fn checked_coalgebra_pair(p: DorrohPairCoalgebra) -> Result<DorrohPairCoalgebra> {
    p.validated()?;
    Ok(p)
}

/// `(A, M)` with `M² = 0`.
pub fn trivial_extension(a: &Algebra, m: &ModuleOverAlgebra) -> Result<DorrohPairAlgebra> {
    if m.side() != Side::Bi || m.algebra() != a {
        return Err(Error::Input("trivial extension needs an A-bimodule".into()));
    }
    let action = BimoduleAction::new(m.left().unwrap().clone(), m.right().unwrap().clone())?;
    checked_algebra_pair(DorrohPairAlgebra::new(a.clone(), Algebra::zero(a.field(), m.dim()), action)?)
}

pub fn direct_product_algebras(a: &Algebra, i: &Algebra) -> Result<DorrohPairAlgebra> {
    checked_algebra_pair(DorrohPairAlgebra::direct_product(a.clone(), i.clone()))
}

/// `(A, A)` acting on itself by multiplication.
pub fn regular_algebra_pair(a: &Algebra) -> Result<DorrohPairAlgebra> {
    let action = BimoduleAction::new(a.mul().clone(), a.mul().clone())?;
    checked_algebra_pair(DorrohPairAlgebra::new(a.clone(), a.clone(), action)?)
}

/// `(k, I)` with `k` acting by scalars.
pub fn unitization(i: &Algebra) -> Result<DorrohPairAlgebra> {
    let f = i.field();
    let n = i.dim();
    let left = SparseTensor3::from_i64(f, [1, n, n], &(0..n).map(|x| ([0, x, x], 1)).collect::<Vec<_>>());
    let right = SparseTensor3::from_i64(f, [n, 1, n], &(0..n).map(|x| ([x, 0, x], 1)).collect::<Vec<_>>());
    checked_algebra_pair(DorrohPairAlgebra::new(k(f), i.clone(), BimoduleAction::new(left, right)?)?)
}

fn product_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let mut mul = SparseTensor3::new(f, [na + nb; 3]);
    a.mul().embed_into(&mut mul, [0, 0, 0]);
    b.mul().embed_into(&mut mul, [na, na, na]);
    Algebra::new(f, na + nb, mul).expect("square tensor")
}

/// A triangular pair together with its block-matrix algebra and the
/// verified isomorphism from the extension onto it.
#[derive(Clone, Debug)]
pub struct TriangularAlgebra {
    pub pair: DorrohPairAlgebra,
    pub block_matrix: Algebra,
    pub iso: AlgebraMorphism,
}

/// The pair `(A × B, M)` for an `A`-`B`-bimodule `M` with `M² = 0`.
/// `left` has dims `[n_A, d, d]` and `right` has dims `[d, n_B, d]`.
pub fn triangular_algebra(
    a: &Algebra,
    b: &Algebra,
    left: &SparseTensor3,
    right: &SparseTensor3,
) -> Result<TriangularAlgebra> {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let d = left.dims()[1];
    if left.dims() != [na, d, d] || right.dims() != [d, nb, d] {
        return Err(Error::Dimension("bimodule tensors do not fit A and B".into()));
    }
    let mut l = SparseTensor3::new(f, [na + nb, d, d]);
    left.embed_into(&mut l, [0, 0, 0]);
    let mut r = SparseTensor3::new(f, [d, na + nb, d]);
    right.embed_into(&mut r, [0, na, 0]);
    let pair = checked_algebra_pair(DorrohPairAlgebra::new(
        product_algebra(a, b),
        Algebra::zero(f, d),
        BimoduleAction::new(l, r)?,
    )?)?;
    // block matrices [[a, m], [0, b]] on the basis (A, M, B)
    let n = na + d + nb;
    let mut mul = SparseTensor3::new(f, [n; 3]);
    a.mul().embed_into(&mut mul, [0, 0, 0]);
    left.embed_into(&mut mul, [0, na, na]);
    right.embed_into(&mut mul, [na, na + d, na]);
    b.mul().embed_into(&mut mul, [na + d, na + d, na + d]);
    let block_matrix = Algebra::new(f, n, mul)?;
    let mut perm = Matrix::zeros(f, n, n);
    for x in 0..na {
        perm.set(x, x, f.one());
    }
    for y in 0..nb {
        perm.set(na + d + y, na + y, f.one());
    }
    for m in 0..d {
        perm.set(na + m, na + nb + m, f.one());
    }
    let mut iso = AlgebraMorphism::new(build_dorroh_algebra(&pair)?, block_matrix.clone(), perm)?;
    certify_algebra_iso(&mut iso, "block-matrix comparison")?;
    Ok(TriangularAlgebra {
        pair,
        block_matrix,
        iso,
    })
}

/// The one-point extension `[[A, M], [0, k]]` of a left `A`-module.
pub fn one_point(a: &Algebra, m: &ModuleOverAlgebra) -> Result<TriangularAlgebra> {
    let left = m
        .left()
        .filter(|_| m.algebra() == a)
        .ok_or_else(|| Error::Input("one-point extension needs a left A-module".into()))?;
    let f = a.field();
    let d = m.dim();
    let right = SparseTensor3::from_i64(f, [d, 1, d], &(0..d).map(|x| ([x, 0, x], 1)).collect::<Vec<_>>());
    triangular_algebra(a, &k(f), left, &right)
}

/// Column vectors `k²` as a left `M2`-module.
pub fn column_module(f: FieldSpec) -> ModuleOverAlgebra {
    let mut left = SparseTensor3::new(f, [4, 2, 2]);
    for i in 0..2 {
        for j in 0..2 {
            left.set([2 * i + j, j, i], f.one());
        }
    }
    ModuleOverAlgebra::new(m2(f), 2, Side::Left, Some(left), None).expect("module dims")
}

/// `(C, N)` with `Δ_N = 0`.
pub fn trivial_coextension(c: &Coalgebra, n: &ComoduleOverCoalgebra) -> Result<DorrohPairCoalgebra> {
    if n.side() != Side::Bi || n.coalgebra() != c {
        return Err(Error::Input("trivial coextension needs a C-bicomodule".into()));
    }
    let co = BicomoduleCoaction::new(n.left().unwrap().clone(), n.right().unwrap().clone())?;
    checked_coalgebra_pair(DorrohPairCoalgebra::new(c.clone(), Coalgebra::zero(c.field(), n.dim()), co)?)
}

pub fn direct_product_coalgebras(c: &Coalgebra, p: &Coalgebra) -> Result<DorrohPairCoalgebra> {
    checked_coalgebra_pair(DorrohPairCoalgebra::direct_product(c.clone(), p.clone()))
}

/// `(C, C)` coacting on itself by comultiplication.
pub fn regular_coalgebra_pair(c: &Coalgebra) -> Result<DorrohPairCoalgebra> {
    let co = BicomoduleCoaction::new(c.delta().clone(), c.delta().clone())?;
    checked_coalgebra_pair(DorrohPairCoalgebra::new(c.clone(), c.clone(), co)?)
}

/// `(k, P)` with `ρ_l(p) = 1 ⊗ p` and `ρ_r(p) = p ⊗ 1`.
pub fn counital_hull(p: &Coalgebra) -> Result<DorrohPairCoalgebra> {
    let f = p.field();
    let n = p.dim();
    let rho_l = SparseTensor3::from_i64(f, [n, 1, n], &(0..n).map(|x| ([x, 0, x], 1)).collect::<Vec<_>>());
    let rho_r = SparseTensor3::from_i64(f, [n, n, 1], &(0..n).map(|x| ([x, x, 0], 1)).collect::<Vec<_>>());
    let one = labelled_coalgebra(Coalgebra::from_table(f, 1, &[([0, 0, 0], 1)]), vec!["1".into()]);
    checked_coalgebra_pair(DorrohPairCoalgebra::new(one, p.clone(), BicomoduleCoaction::new(rho_l, rho_r)?)?)
}

/// `(k{g}, k{p})` with `g`, `p` group-like and `ρ_l(p) = g ⊗ p`, `ρ_r(p) = p ⊗ g`.
pub fn grouplike_pair(f: FieldSpec) -> Result<DorrohPairCoalgebra> {
    let t = SparseTensor3::from_i64(f, [1, 1, 1], &[([0, 0, 0], 1)]);
    let g = labelled_coalgebra(Coalgebra::from_table(f, 1, &[([0, 0, 0], 1)]), vec!["g".into()]);
    let p = labelled_coalgebra(Coalgebra::from_table(f, 1, &[([0, 0, 0], 1)]), vec!["p".into()]);
    checked_coalgebra_pair(DorrohPairCoalgebra::new(g, p, BicomoduleCoaction::new(t.clone(), t)?)?)
}

fn product_coalgebra(c: &Coalgebra, d: &Coalgebra) -> Coalgebra {
    let f = c.field();
    let (nc, nd) = (c.dim(), d.dim());
    let mut delta = SparseTensor3::new(f, [nc + nd; 3]);
    c.delta().embed_into(&mut delta, [0, 0, 0]);
    d.delta().embed_into(&mut delta, [nc, nc, nc]);
    Coalgebra::new(f, nc + nd, delta).expect("square tensor")
}

/// The triangular copair `(C × D, N)` for a left `C`-comodule and right
/// `D`-comodule `N`. `rho_l` has dims `[n, n_C, n]`, `rho_r` has dims
/// `[n, n, n_D]`.
pub fn triangular_coalgebra(
    c: &Coalgebra,
    d: &Coalgebra,
    rho_l: &SparseTensor3,
    rho_r: &SparseTensor3,
) -> Result<DorrohPairCoalgebra> {
    let f = c.field();
    let (nc, nd) = (c.dim(), d.dim());
    let n = rho_l.dims()[0];
    if rho_l.dims() != [n, nc, n] || rho_r.dims() != [n, n, nd] {
        return Err(Error::Dimension("comodule tensors do not fit C and D".into()));
    }
    let mut l = SparseTensor3::new(f, [n, nc + nd, n]);
    rho_l.embed_into(&mut l, [0, 0, 0]);
    let mut r = SparseTensor3::new(f, [n, n, nc + nd]);
    rho_r.embed_into(&mut r, [0, 0, nc]);
    checked_coalgebra_pair(DorrohPairCoalgebra::new(
        product_coalgebra(c, d),
        Coalgebra::zero(f, n),
        BicomoduleCoaction::new(l, r)?,
    )?)
}

fn scalar_comodule(f: FieldSpec) -> (SparseTensor3, SparseTensor3) {
    let t = SparseTensor3::from_i64(f, [1, 1, 1], &[([0, 0, 0], 1)]);
    (t.clone(), t)
}

type AlgebraPairBuilder = fn(FieldSpec) -> Result<DorrohPairAlgebra>;
type CoalgebraPairBuilder = fn(FieldSpec) -> Result<DorrohPairCoalgebra>;

/// Frozen names of the catalog algebra pairs.
pub const ALGEBRA_PAIRS: &[(&str, AlgebraPairBuilder)] = &[
    ("trivial_extension(M2)", |f| trivial_extension(&m2(f), &ModuleOverAlgebra::regular(&m2(f), Side::Bi))),
    ("trivial_extension(dual_numbers)", |f| {
        trivial_extension(&dual_numbers(f), &ModuleOverAlgebra::regular(&dual_numbers(f), Side::Bi))
    }),
    ("trivial_extension(k)", |f| trivial_extension(&k(f), &ModuleOverAlgebra::regular(&k(f), Side::Bi))),
    ("direct_product(M2,kZ2)", |f| direct_product_algebras(&m2(f), &k_z2(f))),
    ("direct_product(k,nilpotent1)", |f| direct_product_algebras(&k(f), &nilpotent1(f))),
    ("triangular(k,k,k)", |f| {
        let (l, r) = scalar_comodule(f);
        Ok(triangular_algebra(&k(f), &k(f), &l, &r)?.pair)
    }),
    ("triangular(dual_numbers,k,dual_numbers)", |f| {
        Ok(one_point(&dual_numbers(f), &ModuleOverAlgebra::regular(&dual_numbers(f), Side::Left))?.pair)
    }),
    ("one_point(M2,k2)", |f| Ok(one_point(&m2(f), &column_module(f))?.pair)),
    ("one_point(kZ2,kZ2)", |f| Ok(one_point(&k_z2(f), &ModuleOverAlgebra::regular(&k_z2(f), Side::Left))?.pair)),
    ("regular(k)", |f| regular_algebra_pair(&k(f))),
    ("regular(kZ2)", |f| regular_algebra_pair(&k_z2(f))),
    ("regular(M2)", |f| regular_algebra_pair(&m2(f))),
    ("regular(nilpotent1)", |f| regular_algebra_pair(&nilpotent1(f))),
    ("unitization(nilpotent1)", |f| unitization(&nilpotent1(f))),
    ("unitization(trunc_ideal(3))", |f| unitization(&trunc_ideal(f, 3))),
    ("unitization(M2)", |f| unitization(&m2(f))),
];

/// Frozen names of the catalog coalgebra pairs.
pub const COALGEBRA_PAIRS: &[(&str, CoalgebraPairBuilder)] = &[
    ("trivial_coextension(Mc2)", |f| {
        trivial_coextension(&mc2(f), &ComoduleOverCoalgebra::regular(&mc2(f), Side::Bi))
    }),
    ("trivial_coextension(divided_power(2))", |f| {
        let c = divided_power(f, 2);
        trivial_coextension(&c, &ComoduleOverCoalgebra::regular(&c, Side::Bi))
    }),
    ("direct_product(Mc2,grouplikes(2))", |f| direct_product_coalgebras(&mc2(f), &grouplikes(f, 2))),
    ("direct_product(grouplikes(1),divided_power(1))", |f| {
        direct_product_coalgebras(&grouplikes(f, 1), &divided_power(f, 1))
    }),
    ("triangular(grouplikes(1),grouplikes(1),k)", |f| {
        let (l, r) = scalar_comodule(f);
        triangular_coalgebra(&grouplikes(f, 1), &grouplikes(f, 1), &l, &r)
    }),
    ("counital_hull(zero_coalgebra(1))", |f| counital_hull(&zero_coalgebra(f, 1))),
    ("counital_hull(divided_power(2))", |f| counital_hull(&divided_power(f, 2))),
    ("counital_hull(grouplikes(2))", |f| counital_hull(&grouplikes(f, 2))),
    ("grouplike", grouplike_pair),
    ("regular(grouplikes(2))", |f| regular_coalgebra_pair(&grouplikes(f, 2))),
    ("regular(Mc2)", |f| regular_coalgebra_pair(&mc2(f))),
    ("regular(divided_power(2))", |f| regular_coalgebra_pair(&divided_power(f, 2))),
];

pub fn algebra_pair(name: &str, f: FieldSpec) -> Result<DorrohPairAlgebra> {
    let (_, build) = ALGEBRA_PAIRS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Input(format!("unknown algebra pair {name:?}")))?;
    build(f)
}

pub fn coalgebra_pair(name: &str, f: FieldSpec) -> Result<DorrohPairCoalgebra> {
    let (_, build) = COALGEBRA_PAIRS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Input(format!("unknown coalgebra pair {name:?}")))?;
    build(f)
}

pub fn all_algebra_pairs(f: FieldSpec) -> Vec<(&'static str, DorrohPairAlgebra)> {
    ALGEBRA_PAIRS
        .iter()
        .map(|(n, b)| (*n, b(f).expect("catalog pairs are valid")))
        .collect()
}

pub fn all_coalgebra_pairs(f: FieldSpec) -> Vec<(&'static str, DorrohPairCoalgebra)> {
    COALGEBRA_PAIRS
        .iter()
        .map(|(n, b)| (*n, b(f).expect("catalog pairs are valid")))
        .collect()
}

/// `(k, k, k)` with every action given by multiplication.
pub fn all_k_triple(f: FieldSpec) -> AlgebraTriple {
    let (l, r) = scalar_comodule(f);
    let act = || BimoduleAction::new(l.clone(), r.clone()).expect("1-dim action");
    AlgebraTriple::new([k(f), k(f), k(f)], act(), act(), act()).expect("dims fit")
}

/// `(k{g}, k{g}, k{g})` with every coaction given by `Δ`.
pub fn grouplike_cotriple(f: FieldSpec) -> CoalgebraTriple {
    let (l, r) = scalar_comodule(f);
    let co = || BicomoduleCoaction::new(l.clone(), r.clone()).expect("1-dim coaction");
    let g = || grouplikes(f, 1);
    CoalgebraTriple::new([g(), g(), g()], co(), co(), co()).expect("dims fit")
}

#[derive(Clone, Debug)]
pub enum Triple {
    Algebra(AlgebraTriple),
    Coalgebra(CoalgebraTriple),
}

pub const TRIPLES: &[&str] = &[
    "all_k_triple",
    "zero_action_triple(M2,dual_numbers,k)",
    "grouplike_cotriple",
    "zero_coaction_cotriple(Mc2,divided_power(1),grouplikes(1))",
];

pub fn triple(name: &str, f: FieldSpec) -> Result<Triple> {
    Ok(match name {
        "all_k_triple" => Triple::Algebra(all_k_triple(f)),
        "zero_action_triple(M2,dual_numbers,k)" => {
            Triple::Algebra(AlgebraTriple::direct(m2(f), dual_numbers(f), k(f)))
        }
        "grouplike_cotriple" => Triple::Coalgebra(grouplike_cotriple(f)),
        "zero_coaction_cotriple(Mc2,divided_power(1),grouplikes(1))" => {
            Triple::Coalgebra(CoalgebraTriple::direct(mc2(f), divided_power(f, 1), grouplikes(f, 1)))
        }
        _ => return Err(Error::Input(format!("unknown triple {name:?}"))),
    })
}

/// The parameterless instances and one representative of each
/// parameterized family.
pub const DEFAULT_INSTANCES: &[&str] = &[
    "k",
    "dual_numbers",
    "M2",
    "kZ2",
    "nilpotent1",
    "trunc_poly(3)",
    "trunc_ideal(3)",
    "Mc2",
    "grouplikes(2)",
    "divided_power(3)",
    "zero_coalgebra(1)",
    "fibonacci",
    "geometric(2)",
];

pub const FIELDS: [FieldSpec; 4] = [
    FieldSpec::Rationals,
    FieldSpec::Prime(2),
    FieldSpec::Prime(5),
    FieldSpec::Prime(7),
];
