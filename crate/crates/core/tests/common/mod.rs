//! Dense brute-force oracles shared by the integration tests. They work on
//! raw structure constants and share no code with the library's checkers.

#![allow(dead_code)]

use dorroh::findual::RecurrentSequence;
use dorroh::{FieldSpec, Scalar, SparseTensor3};

pub type Dense = Vec<Vec<Vec<Scalar>>>;

pub fn dense(t: &SparseTensor3) -> Dense {
    let [a, b, c] = t.dims();
    (0..a)
        .map(|i| (0..b).map(|j| (0..c).map(|k| t.get([i, j, k])).collect()).collect())
        .collect()
}

/// `(e_i e_j) e_k = e_i (e_j e_k)` for all basis triples.
pub fn associative(mul: &SparseTensor3) -> bool {
    let m = dense(mul);
    let n = m.len();
    let f = mul.field();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let mut lhs = f.zero();
                    let mut rhs = f.zero();
                    for l in 0..n {
                        lhs += &(&m[i][j][l] * &m[l][k][out]);
                        rhs += &(&m[j][k][l] * &m[i][l][out]);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(Δ⊗1)Δ(e_k) = (1⊗Δ)Δ(e_k)` for all basis vectors.
pub fn coassociative(delta: &SparseTensor3) -> bool {
    let d = dense(delta);
    let n = d.len();
    let f = delta.field();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut lhs = f.zero();
                    let mut rhs = f.zero();
                    for m in 0..n {
                        lhs += &(&d[k][m][c] * &d[m][a][b]);
                        rhs += &(&d[k][a][m] * &d[m][b][c]);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Two-sided identity of a multiplication table, by exhaustive check of the
/// candidate against every basis vector.
pub fn is_identity(mul: &SparseTensor3, u: &[Scalar]) -> bool {
    let m = dense(mul);
    let n = m.len();
    let f = mul.field();
    for j in 0..n {
        for out in 0..n {
            let mut left = f.zero();
            let mut right = f.zero();
            for i in 0..n {
                left += &(&u[i] * &m[i][j][out]);
                right += &(&u[i] * &m[j][i][out]);
            }
            let want = if out == j { f.one() } else { f.zero() };
            if left != want || right != want {
                return false;
            }
        }
    }
    true
}

/// Image of `e_i e_j` under a matrix compared with the product of images.
pub fn multiplicative(src: &SparseTensor3, dst: &SparseTensor3, cols: &[Vec<Scalar>]) -> bool {
    let s = dense(src);
    let d = dense(dst);
    let (n, m) = (s.len(), d.len());
    let f = src.field();
    for i in 0..n {
        for j in 0..n {
            for out in 0..m {
                let mut lhs = f.zero();
                for l in 0..n {
                    lhs += &(&s[i][j][l] * &cols[l][out]);
                }
                let mut rhs = f.zero();
                for a in 0..m {
                    for b in 0..m {
                        rhs += &(&(&cols[i][a] * &cols[j][b]) * &d[a][b][out]);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Values `s_0..=s_m` by direct iteration; `s_0` is zero when absent.
pub fn values(f: &RecurrentSequence, m: usize) -> Vec<Scalar> {
    let field = f.field();
    let r = f.order();
    let mut v = vec![f.s0().cloned().unwrap_or_else(|| field.zero())];
    for n in 1..=m {
        let x = if n <= r {
            f.initial()[n - 1].clone()
        } else {
            let mut acc = field.zero();
            for i in 1..=r {
                acc += &(&f.coeffs()[i - 1] * &v[n - i]);
            }
            acc
        };
        v.push(x);
    }
    v
}

/// Linear complexity of a sequence by Berlekamp–Massey.
pub fn linear_complexity(s: &[Scalar], field: FieldSpec) -> usize {
    let mut c = vec![field.one()];
    let mut b = vec![field.one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = field.one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l {
            d += &(&c[i] * &s[n - i]);
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d * &bd.inv().unwrap();
        let t = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, field.zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &(&coef * bi);
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = t;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    l
}

pub fn ints(f: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.from_i64(x)).collect()
}
