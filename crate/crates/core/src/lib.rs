pub mod error;
pub mod field;
pub mod groups;
pub mod hochschild;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod modules;
pub mod bar;
pub mod cli;
pub mod cochain;
pub mod ops;
pub mod resolution;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, RationalField};
pub use hopf::{group_algebra, HopfAlgebra, ValidationReport};
pub use linalg::{Matrix, SparseMatrix, SparseVec, Subspace};
pub use modules::{Bimodule, LeftModule};
