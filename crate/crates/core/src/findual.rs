//! The finite dual of `k[x]` and of `x·k[x]` as linearly recurrent
//! sequences.
//!
//! A functional `f` on `k[x]` is stored through its values `s_n = f(x^n)`.
//! When `s0` is absent the functional lives on `x·k[x]` and is indexed from
//! `n = 1`. The recurrence `s_n = Σ c_i s_{n-i}` applies for `n > r` and
//! never involves `s_0`.

use crate::error::{Error, Result};
use crate::exactlin::{invert, solve_linear, FieldSpec, Matrix, Scalar};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrentSequence {
    field: FieldSpec,
    s0: Option<Scalar>,
    initial: Vec<Scalar>,
    coeffs: Vec<Scalar>,
}

impl RecurrentSequence {
    pub fn new(
        field: FieldSpec,
        s0: Option<Scalar>,
        initial: Vec<Scalar>,
        coeffs: Vec<Scalar>,
    ) -> Result<Self> {
        if initial.len() != coeffs.len() {
            return Err(Error::Input(format!(
                "{} initial values for a recurrence of order {}",
                initial.len(),
                coeffs.len()
            )));
        }
        if s0.iter().chain(&initial).chain(&coeffs).any(|s| !field.owns(s)) {
            return Err(Error::Input(format!("sequence data outside {field}")));
        }
        Ok(RecurrentSequence {
            field,
            s0,
            initial,
            coeffs,
        })
    }

    /// Integer convenience constructor; panics on malformed input.
    pub fn from_i64(field: FieldSpec, s0: Option<i64>, initial: &[i64], coeffs: &[i64]) -> Self {
        let conv = |v: &[i64]| v.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, s0.map(|x| field.from_i64(x)), conv(initial), conv(coeffs))
            .expect("well-formed sequence")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn s0(&self) -> Option<&Scalar> {
        self.s0.as_ref()
    }

    pub fn initial(&self) -> &[Scalar] {
        &self.initial
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn with_s0(mut self, s0: Option<Scalar>) -> Self {
        self.s0 = s0;
        self
    }

    /// First index at which the functional is defined.
    pub fn start(&self) -> usize {
        usize::from(self.s0.is_none())
    }

    /// `s_1, ..., s_m`.
    pub fn prefix(&self, m: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.initial.iter().take(m).cloned().collect();
        while out.len() < m {
            let n = out.len();
            let mut v = self.field.zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                v += &(c * &out[n - 1 - i]);
            }
            out.push(v);
        }
        out
    }

    /// `s_0, ..., s_m`, with zero standing in for an absent `s_0`.
    pub fn values(&self, m: usize) -> Vec<Scalar> {
        let mut out = vec![self.s0.clone().unwrap_or_else(|| self.field.zero())];
        out.extend(self.prefix(m));
        out
    }

    fn shifted_combination(&self, weights: &[(usize, Scalar)]) -> RecurrentSequence {
        let r = self.order();
        let top = weights.iter().map(|(p, _)| *p).max().unwrap_or(0);
        let vals = self.values(top + r);
        let combo = |n: usize| {
            let mut v = self.field.zero();
            for (p, w) in weights {
                v += &(w * &vals[p + n]);
            }
            v
        };
        RecurrentSequence {
            field: self.field,
            s0: self.s0.as_ref().map(|_| combo(0)),
            initial: (1..=r).map(combo).collect(),
            coeffs: self.coeffs.clone(),
        }
    }
}

pub fn eval_sequence(f: &RecurrentSequence, n: usize) -> Result<Scalar> {
    if n == 0 {
        return f
            .s0
            .clone()
            .ok_or_else(|| Error::Input("s_0 requested from a sequence on x·k[x]".into()));
    }
    Ok(f.prefix(n).pop().expect("n >= 1"))
}

/// The lowest-order recurrence (order at most `r_max`) that the prefix
/// `s_1, ..., s_m` satisfies.
pub fn minimal_recurrence(prefix: &[Scalar], r_max: usize) -> Result<Option<RecurrentSequence>> {
    let m = prefix.len();
    if m < 2 * r_max + 2 {
        return Err(Error::Input(format!(
            "a prefix of length {m} cannot certify recurrences up to order {r_max}; need {}",
            2 * r_max + 2
        )));
    }
    let field = prefix[0].field();
    if prefix.iter().any(|s| s.field() != field) {
        return Err(Error::Input("prefix mixes fields".into()));
    }
    for r in 0..=r_max {
        // rows: s_t = Σ_i c_i s_{t-i} for t = r+1..m (1-based)
        let rows: Vec<Vec<Scalar>> = (r..m)
            .map(|t| (1..=r).map(|i| prefix[t - i].clone()).collect())
            .collect();
        let rhs: Vec<Scalar> = (r..m).map(|t| prefix[t].clone()).collect();
        let solution = if r == 0 {
            rhs.iter().all(Scalar::is_zero).then(Vec::new)
        } else {
            solve_linear(&Matrix::from_rows(field, rows)?, &rhs)?
        };
        if let Some(c) = solution {
            return Ok(Some(RecurrentSequence::new(field, None, prefix[..r].to_vec(), c)?));
        }
    }
    Ok(None)
}

/// `m*(f) = Σ_k f_k ⊗ g_k` with the `f_k` a basis of the shift space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductDecomposition {
    pub rank: usize,
    pub left: Vec<RecurrentSequence>,
    pub right: Vec<RecurrentSequence>,
}

impl CoproductDecomposition {
    /// `Σ_k f_k(x^i) g_k(x^j)` for `start ≤ i, j ≤ upto`.
    pub fn table(&self, start: usize, upto: usize, field: FieldSpec) -> Vec<Vec<Scalar>> {
        let lv: Vec<_> = self.left.iter().map(|s| s.values(upto)).collect();
        let rv: Vec<_> = self.right.iter().map(|s| s.values(upto)).collect();
        let mut out = vec![vec![field.zero(); upto + 1]; upto + 1];
        for i in start..=upto {
            for j in start..=upto - i.min(upto) {
                if i + j > upto {
                    continue;
                }
                for k in 0..self.rank {
                    out[i][j] += &(&lv[k][i] * &rv[k][j]);
                }
            }
        }
        out
    }
}

pub fn default_depth(f: &RecurrentSequence) -> usize {
    2 * f.order() + 16
}

/// `m*(f) = Σ f_k ⊗ g_k` from the leftmost independent Hankel rows, without
/// verification.
pub fn shift_decomposition(f: &RecurrentSequence) -> Result<CoproductDecomposition> {
    let r = f.order();
    let n0 = f.start();
    let w = r + 2;
    let vals = f.values(2 * (n0 + w));
    let field = f.field;
    let row = |m: usize| -> Vec<Scalar> { (n0..n0 + w).map(|n| vals[m + n].clone()).collect() };
    let mut basis_rows: Vec<usize> = Vec::new();
    let mut rank = 0;
    for m in n0..n0 + w {
        let mut trial: Vec<Vec<Scalar>> = basis_rows.iter().map(|&b| row(b)).collect();
        trial.push(row(m));
        let rk = Matrix::from_rows(field, trial)?.rank();
        if rk > rank {
            rank = rk;
            basis_rows.push(m);
        }
    }
    let rows: Vec<Vec<Scalar>> = basis_rows.iter().map(|&b| row(b)).collect();
    if rank == 0 {
        return Ok(CoproductDecomposition {
            rank: 0,
            left: Vec::new(),
            right: Vec::new(),
        });
    }
    let h = Matrix::from_rows(field, rows)?;
    let (_, pivots) = h.rref();
    let pivot_idx: Vec<usize> = pivots.iter().map(|&c| c + n0).collect();
    let mut s = Matrix::zeros(field, rank, rank);
    for (k, &mk) in basis_rows.iter().enumerate() {
        for (l, &pl) in pivot_idx.iter().enumerate() {
            s.set(k, l, vals[mk + pl].clone());
        }
    }
    let alpha = invert(&s.transpose())?
        .ok_or_else(|| Error::Internal("pivot block of the Hankel rows is singular".into()))?;
    let left = basis_rows
        .iter()
        .map(|&m| f.shifted_combination(&[(m, field.one())]))
        .collect();
    let right = (0..rank)
        .map(|k| {
            let weights: Vec<(usize, Scalar)> = pivot_idx
                .iter()
                .enumerate()
                .map(|(l, &p)| (p, alpha.get(k, l).clone()))
                .collect();
            f.shifted_combination(&weights)
        })
        .collect();
    Ok(CoproductDecomposition { rank, left, right })
}

/// Coproduct identity `f(x^{i+j}) = Σ_k f_k(x^i) g_k(x^j)` for `i + j ≤ depth`.
pub fn coproduct_witness(
    f: &RecurrentSequence,
    dec: &CoproductDecomposition,
    depth: usize,
) -> Option<Vec<usize>> {
    let n0 = f.start();
    let vals = f.values(depth);
    let table = dec.table(n0, depth, f.field);
    for total in 2 * n0..=depth {
        for i in n0..=total - n0 {
            let j = total - i;
            if table[i][j] != vals[total] {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// `(Δ⊗1)Δ(f) = (1⊗Δ)Δ(f)` on all `x^a ⊗ x^b ⊗ x^c` with `a + b + c ≤ depth`,
/// computed from the decompositions of the `f_k` and `g_k`.
pub fn coassociativity_witness(
    f: &RecurrentSequence,
    dec: &CoproductDecomposition,
    depth: usize,
) -> Result<Option<Vec<usize>>> {
    let n0 = f.start();
    let field = f.field;
    let lv: Vec<_> = dec.left.iter().map(|s| s.values(depth)).collect();
    let rv: Vec<_> = dec.right.iter().map(|s| s.values(depth)).collect();
    let mut lt = Vec::new();
    let mut rt = Vec::new();
    for k in 0..dec.rank {
        lt.push(shift_decomposition(&dec.left[k])?.table(n0, depth, field));
        rt.push(shift_decomposition(&dec.right[k])?.table(n0, depth, field));
    }
    for total in 3 * n0..=depth {
        for a in n0..=total - 2 * n0 {
            for b in n0..=total - a - n0 {
                let c = total - a - b;
                let mut lhs = field.zero();
                let mut rhs = field.zero();
                for k in 0..dec.rank {
                    lhs += &(&lt[k][a][b] * &rv[k][c]);
                    rhs += &(&lv[k][a] * &rt[k][b][c]);
                }
                if lhs != rhs {
                    return Ok(Some(vec![a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// Counit law `Σ_k f_k(1) g_k(x^j) = f(x^j) = Σ_k f_k(x^j) g_k(1)`.
pub fn counit_witness(
    f: &RecurrentSequence,
    dec: &CoproductDecomposition,
    depth: usize,
) -> Option<Vec<usize>> {
    f.s0.as_ref()?;
    let vals = f.values(depth);
    let table = dec.table(0, depth, f.field);
    (0..=depth)
        .find(|&j| table[0][j] != vals[j] || table[j][0] != vals[j])
        .map(|j| vec![j])
}

/// Records the coproduct identity, coassociativity and (for `k[x]`) the
/// counit law of a decomposition up to `depth`.
pub fn decomposition_report(
    f: &RecurrentSequence,
    dec: &CoproductDecomposition,
    depth: usize,
) -> Result<Report> {
    let mut rep = Report::new();
    rep.record("f(x^(i+j)) = Σ f_k(x^i) g_k(x^j)", coproduct_witness(f, dec, depth));
    rep.record("(Δ⊗1)Δ(f) = (1⊗Δ)Δ(f)", coassociativity_witness(f, dec, depth)?);
    if f.s0.is_some() {
        rep.record("Σ f_k(1) g_k = f = Σ f_k g_k(1)", counit_witness(f, dec, depth));
    }
    Ok(rep)
}

/// Decomposes `m*(f)` through a basis of the shift space and verifies the
/// result up to `depth`.
pub fn coproduct_decompose(f: &RecurrentSequence, depth: usize) -> Result<CoproductDecomposition> {
    let dec = shift_decomposition(f)?;
    let rep = decomposition_report(f, &dec, depth)?;
    if !rep.is_pass() {
        return Err(Error::Internal(format!("coproduct decomposition: {}", rep.headline())));
    }
    Ok(dec)
}

/// Splits `f = φ_A + φ_I` along `k[x] = k ⋉ x·k[x]` and checks that `Δ(f)`
/// agrees with the blockwise assembly `Δ(φ_A) + ρ_l(φ_I) + ρ_r(φ_I) + Δ(φ_I)`
/// on every `x^i ⊗ x^j` with `i + j ≤ depth`.
pub fn dorroh_decompose(f: &RecurrentSequence, depth: usize) -> Result<Report> {
    let s0 = f
        .s0
        .clone()
        .ok_or_else(|| Error::Input("dorroh decomposition needs s_0".into()))?;
    let field = f.field;
    let phi_i = f.clone().with_s0(None);
    let whole = coproduct_decompose(f, depth)?.table(0, depth, field);
    let inner = coproduct_decompose(&phi_i, depth)?.table(1, depth, field);
    let vals = phi_i.values(depth);
    let mut witness = None;
    'outer: for total in 0..=depth {
        for i in 0..=total {
            let j = total - i;
            let assembled = match (i, j) {
                (0, 0) => s0.clone(),
                (0, _) => vals[j].clone(),
                (_, 0) => vals[i].clone(),
                _ => inner[i][j].clone(),
            };
            if assembled != whole[i][j] {
                witness = Some(vec![i, j]);
                break 'outer;
            }
        }
    }
    let mut rep = Report::new();
    rep.record("Δ(f) = Δ(φ_A) + ρ_l(φ_I) + ρ_r(φ_I) + Δ(φ_I)", witness);
    Ok(rep)
}

/// Checks `f(x^n p(x)) = 0` for all `n` from the first defined index up to
/// `depth`. `p` lists coefficients in ascending degree and must be monic.
pub fn vanishing_check(f: &RecurrentSequence, p: &[Scalar], depth: usize) -> Result<Report> {
    let Some(lead) = p.last() else {
        return Err(Error::Input("empty polynomial".into()));
    };
    if p.len() < 2 || !lead.is_one() {
        return Err(Error::Input("polynomial must be monic of degree at least 1".into()));
    }
    if p.iter().any(|c| !f.field.owns(c)) {
        return Err(Error::Input(format!("polynomial coefficients outside {}", f.field)));
    }
    let deg = p.len() - 1;
    let vals = f.values(depth + deg);
    let witness = (f.start()..=depth).find(|&n| {
        let mut v = f.field.zero();
        for (k, c) in p.iter().enumerate() {
            v += &(c * &vals[n + k]);
        }
        !v.is_zero()
    });
    let mut rep = Report::new();
    rep.record("f(x^n p(x)) = 0", witness.map(|n| vec![n]));
    Ok(rep)
}
