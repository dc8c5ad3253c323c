//! Sparse order-3 tensors holding structure constants.
//!
//! The same container stores bilinear maps (`(i, j, k) -> c` meaning
//! `x_i * y_j` contains `c * z_k`) and cobilinear maps (`(k, i, j) -> c`
//! meaning the image of `e_k` contains `c * e_i ⊗ e_j`). Which reading applies
//! is decided by the caller.

use std::collections::BTreeMap;

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor3 {
    field: FieldSpec,
    dims: [usize; 3],
    entries: BTreeMap<[usize; 3], Scalar>,
}

impl SparseTensor3 {
    pub fn new(field: FieldSpec, dims: [usize; 3]) -> Self {
        SparseTensor3 {
            field,
            dims,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a tensor from explicit entries, rejecting out-of-range indices,
    /// repeated index triples and foreign scalars. Zero values are dropped.
    pub fn from_entries<I>(field: FieldSpec, dims: [usize; 3], entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([usize; 3], Scalar)>,
    {
        let mut t = Self::new(field, dims);
        let mut seen = std::collections::BTreeSet::new();
        for (n, (idx, v)) in entries.into_iter().enumerate() {
            t.check_index(idx)
                .map_err(|e| Error::Input(format!("entry {n}: {e}")))?;
            if !field.owns(&v) {
                return Err(Error::Input(format!("entry {n}: scalar outside {field}")));
            }
            if !seen.insert(idx) {
                return Err(Error::Input(format!("entry {n}: repeated index {idx:?}")));
            }
            t.set(idx, v);
        }
        Ok(t)
    }

    /// Integer convenience constructor; panics on malformed input.
    pub fn from_i64(field: FieldSpec, dims: [usize; 3], entries: &[([usize; 3], i64)]) -> Self {
        Self::from_entries(field, dims, entries.iter().map(|&(i, v)| (i, field.from_i64(v))))
            .expect("well-formed integer tensor")
    }

    fn check_index(&self, idx: [usize; 3]) -> Result<()> {
        for a in 0..3 {
            if idx[a] >= self.dims[a] {
                return Err(Error::Input(format!(
                    "index {idx:?} out of range for dims {:?}",
                    self.dims
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, idx: [usize; 3]) -> Scalar {
        self.entries.get(&idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Overwrites an entry; storing zero removes it.
    pub fn set(&mut self, idx: [usize; 3], v: Scalar) {
        debug_assert!(self.check_index(idx).is_ok());
        if v.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, v);
        }
    }

    pub fn add(&mut self, idx: [usize; 3], v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(idx);
        self.set(idx, &cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scaled(&self, s: &Scalar) -> SparseTensor3 {
        let mut out = Self::new(self.field, self.dims);
        for (idx, v) in self.iter() {
            out.set(*idx, v * s);
        }
        out
    }

    /// Copies every entry into `target` with each index shifted by `offset`.
    pub fn embed_into(&self, target: &mut SparseTensor3, offset: [usize; 3]) {
        for (idx, v) in self.iter() {
            target.add([idx[0] + offset[0], idx[1] + offset[1], idx[2] + offset[2]], v);
        }
    }

    /// The sub-block with index `a` in `start[a]..start[a] + dims[a]`,
    /// re-indexed from zero.
    pub fn block(&self, start: [usize; 3], dims: [usize; 3]) -> SparseTensor3 {
        let mut out = Self::new(self.field, dims);
        for (idx, v) in self.iter() {
            if (0..3).all(|a| idx[a] >= start[a] && idx[a] < start[a] + dims[a]) {
                out.set([idx[0] - start[0], idx[1] - start[1], idx[2] - start[2]], v.clone());
            }
        }
        out
    }

    /// Index from the first two coordinates to the list of `(k, c)`.
    pub fn pair_index(&self) -> PairIndex {
        let mut slots = vec![Vec::new(); self.dims[0] * self.dims[1]];
        for (idx, v) in self.iter() {
            slots[idx[0] * self.dims[1] + idx[1]].push((idx[2], v.clone()));
        }
        PairIndex {
            d1: self.dims[1],
            out_dim: self.dims[2],
            field: self.field,
            slots,
        }
    }

    /// Index from the first coordinate to the list of `(i, j, c)`.
    pub fn source_index(&self) -> SourceIndex {
        let mut slots = vec![Vec::new(); self.dims[0]];
        for (idx, v) in self.iter() {
            slots[idx[0]].push((idx[1], idx[2], v.clone()));
        }
        SourceIndex { dims: self.dims, slots }
    }

    /// Bilinear evaluation `T(x, y)` reading entries as `(i, j) -> k`.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dims[0]);
        assert_eq!(y.len(), self.dims[1]);
        let mut out = vec![self.field.zero(); self.dims[2]];
        for (idx, c) in self.iter() {
            let (a, b) = (&x[idx[0]], &y[idx[1]]);
            if !a.is_zero() && !b.is_zero() {
                out[idx[2]] += &(&(a * b) * c);
            }
        }
        out
    }

    /// Re-expresses a bilinear map `V1 × V2 -> V3` in new bases. Columns of
    /// `g1`, `g2` are the new basis vectors of the inputs; `g3_inv` converts
    /// output coordinates into the new output basis.
    pub fn rebase_bilinear(&self, g1: &Matrix, g2: &Matrix, g3_inv: &Matrix) -> SparseTensor3 {
        let dims = [g1.cols(), g2.cols(), g3_inv.rows()];
        let mut out = Self::new(self.field, dims);
        let cols1: Vec<_> = (0..g1.cols()).map(|p| g1.column(p)).collect();
        let cols2: Vec<_> = (0..g2.cols()).map(|q| g2.column(q)).collect();
        for (p, u) in cols1.iter().enumerate() {
            for (q, v) in cols2.iter().enumerate() {
                let w = g3_inv.mul_vec(&self.apply(u, v));
                for (k, c) in w.into_iter().enumerate() {
                    out.set([p, q, k], c);
                }
            }
        }
        out
    }

    /// Re-expresses a cobilinear map `V1 -> V2 ⊗ V3` in new bases: `g1`
    /// holds the new source basis as columns, `g2_inv` and `g3_inv` convert
    /// target coordinates.
    pub fn rebase_cobilinear(&self, g1: &Matrix, g2_inv: &Matrix, g3_inv: &Matrix) -> SparseTensor3 {
        let dims = [g1.cols(), g2_inv.rows(), g3_inv.rows()];
        let src = self.source_index();
        let mut out = Self::new(self.field, dims);
        for k in 0..g1.cols() {
            // image of the new basis vector in old coordinates
            let mut old = BTreeMap::<(usize, usize), Scalar>::new();
            for m in 0..g1.rows() {
                let g = g1.get(m, k);
                if g.is_zero() {
                    continue;
                }
                for (i, j, c) in src.get(m) {
                    let e = old.entry((*i, *j)).or_insert_with(|| self.field.zero());
                    *e += &(g * c);
                }
            }
            for ((i, j), c) in old {
                if c.is_zero() {
                    continue;
                }
                for a in 0..dims[1] {
                    let x = g2_inv.get(a, i);
                    if x.is_zero() {
                        continue;
                    }
                    let xc = x * &c;
                    for b in 0..dims[2] {
                        let y = g3_inv.get(b, j);
                        if !y.is_zero() {
                            out.add([k, a, b], &(&xc * y));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Lookup of a bilinear tensor by its two input indices.
pub struct PairIndex {
    d1: usize,
    out_dim: usize,
    field: FieldSpec,
    slots: Vec<Vec<(usize, Scalar)>>,
}

impl PairIndex {
    pub fn get(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.slots[i * self.d1 + j]
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    /// `T(v, e_j)` for a sparse left argument.
    pub fn apply_left_sparse(&self, v: &[(usize, Scalar)], j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.out_dim];
        for (m, c) in v {
            for (k, d) in self.get(*m, j) {
                out[*k] += &(c * d);
            }
        }
        out
    }

    /// `T(e_i, v)` for a sparse right argument.
    pub fn apply_right_sparse(&self, i: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.out_dim];
        for (m, c) in v {
            for (k, d) in self.get(i, *m) {
                out[*k] += &(c * d);
            }
        }
        out
    }
}

/// Lookup of a cobilinear tensor by its source index.
pub struct SourceIndex {
    dims: [usize; 3],
    slots: Vec<Vec<(usize, usize, Scalar)>>,
}

impl SourceIndex {
    pub fn get(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.slots[k]
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }
}
