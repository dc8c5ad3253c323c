//! Dense matrices over a [`FieldSpec`] with exact Gaussian elimination.
//!
//! Elimination always pivots on the leftmost column that still has a nonzero
//! entry, taking the first such row. The outputs of [`solve_linear`],
//! [`kernel_basis`] and [`invert`] are therefore deterministic.

use std::fmt;

use super::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|s| !field.owns(s)) {
            return Err(Error::Input(format!("matrix entry outside {field}")));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Small-integer convenience constructor.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rectangular integer matrix")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_row_multiple(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let s = self.get(source, c);
            if !s.is_zero() {
                let v = self.get(target, c) - &(s * factor);
                self.set(target, c, v);
            }
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `a·x = b`, returning `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "system has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let field = a.field();
    let mut aug = Matrix::zeros(field, a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); a.cols()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.get(row, a.cols()).clone();
    }
    Ok(Some(x))
}

/// Basis of the null space, one vector per free column in increasing order,
/// each scaled so its first nonzero coordinate is 1.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let field = a.field();
    let (r, pivots) = a.rref();
    let mut basis = Vec::new();
    for free in (0..a.cols()).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); a.cols()];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free);
        }
        let lead = v.iter().find(|s| !s.is_zero()).expect("free coordinate is 1").clone();
        let inv = lead.inv().expect("nonzero");
        basis.push(v.iter().map(|s| s * &inv).collect());
    }
    basis
}

/// Two-sided inverse, or `None` when singular.
pub fn invert(a: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "cannot invert a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let field = a.field();
    let mut aug = Matrix::zeros(field, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, field.one());
    }
    let (r, pivots) = aug.rref();
    if pivots.len() < n || (0..n).any(|i| pivots[i] != i) {
        return Ok(None);
    }
    let mut inv = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Ok(Some(inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn vec_i(f: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(q(), 2);
        let x = solve_linear(&a, &vec_i(q(), &[3, 4])).unwrap().unwrap();
        assert_eq!(x, vec_i(q(), &[3, 4]));
    }

    #[test]
    fn solve_over_f5() {
        let f5 = FieldSpec::Prime(5);
        let a = Matrix::from_i64(f5, &[&[2]]);
        let x = solve_linear(&a, &vec_i(f5, &[3])).unwrap().unwrap();
        assert_eq!(x, vec_i(f5, &[4]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]);
        assert!(solve_linear(&a, &vec_i(q(), &[1, 0])).unwrap().is_none());
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::identity(q(), 2);
        assert!(matches!(
            solve_linear(&a, &vec_i(q(), &[1])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        let a = Matrix::from_i64(q(), &[&[1, 1]]);
        assert_eq!(kernel_basis(&a), vec![vec_i(q(), &[1, -1])]);
        assert!(kernel_basis(&Matrix::identity(q(), 3)).is_empty());
        let z = Matrix::zeros(q(), 2, 2);
        assert_eq!(kernel_basis(&z), vec![vec_i(q(), &[1, 0]), vec_i(q(), &[0, 1])]);
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(invert(&id).unwrap().unwrap(), id);
        let u = Matrix::from_i64(q(), &[&[1, 1], &[0, 1]]);
        assert_eq!(
            invert(&u).unwrap().unwrap(),
            Matrix::from_i64(q(), &[&[1, -1], &[0, 1]])
        );
        let s = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]);
        assert!(invert(&s).unwrap().is_none());
        let rect = Matrix::zeros(q(), 2, 3);
        assert!(invert(&rect).is_err());
    }

    #[test]
    fn empty_matrix_inverts() {
        let e = Matrix::zeros(q(), 0, 0);
        assert_eq!(invert(&e).unwrap().unwrap(), e);
    }

    #[test]
    fn rational_entries_reduced_after_elimination() {
        let a = Matrix::from_i64(q(), &[&[2, 4], &[6, 9]]);
        let inv = invert(&a).unwrap().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = inv.get(i, j).to_string();
                assert_eq!(q().parse(&s).unwrap().to_string(), s);
            }
        }
        assert!(a.mul(&inv).unwrap().is_identity());
    }
}
