//! Exact linear algebra over ℚ and 𝔽_p.

pub mod field;
pub mod matrix;
pub mod tensor;

pub use field::{FieldSpec, Scalar};
pub use matrix::{invert, kernel_basis, solve_linear, Matrix};
pub use tensor::SparseTensor3;

/// The `i`-th standard basis vector of length `n`.
pub fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Sparse view of a dense vector.
pub fn nonzeros(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}
