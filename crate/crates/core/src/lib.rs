//! Exact computations with Dorroh extensions of algebras and coalgebras.
//!
//! Finite-dimensional algebras and coalgebras are stored by structure
//! constants over ℚ or a prime field. The crate builds and splits Dorroh
//! extensions `A ⋉ I` and `C ⋉ P`, certifies the standard isomorphisms between
//! them, dualizes in both directions, and models the finite dual of `k[x]` by
//! linearly recurrent sequences.

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod duality;
pub mod error;
pub mod exactlin;
pub mod findual;
pub mod format;
pub mod gallery;
pub mod laws;
pub mod report;

pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Matrix, Scalar, SparseTensor3};
pub use report::{Report, Status};

/// Verification level of a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verified {
    Unchecked,
    Hom,
    Iso,
}

/// One- or two-sided (co)module structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Bi,
}

impl Side {
    pub fn has_left(self) -> bool {
        matches!(self, Side::Left | Side::Bi)
    }

    pub fn has_right(self) -> bool {
        matches!(self, Side::Right | Side::Bi)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Bi => "bi",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "bi" => Ok(Side::Bi),
            _ => Err(Error::Input(format!("unknown side {s:?}"))),
        }
    }
}
