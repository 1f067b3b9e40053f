//! Exact Grassmann and Clifford algebras over arbitrary bilinear forms.

pub mod bform;
pub mod cli;
pub mod dotted;
pub mod error;
pub mod linalg;
pub mod multivector;
pub mod product;
pub mod scalar;
pub mod special;
pub mod structure;

pub use bform::{BilinearForm, FormSplit};
pub use error::{AlgebraError, Result};
pub use multivector::{Blade, Multivector};
pub use product::{cmul, lc, rc, ProductAlgorithm};
pub use scalar::Scalar;
