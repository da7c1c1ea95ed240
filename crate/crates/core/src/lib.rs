//! Exact computations with Rota-Baxter coalgebras over the rationals.
//!
//! Structures are finite-dimensional and given by structure constants in a
//! fixed basis. Every identity check is evaluated exactly on basis elements and
//! reports the first counterexample it finds.

pub mod binomial;
pub mod coalgebra;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod report;
pub mod rota_baxter;

pub use coalgebra::{Coalgebra, LinearOperator, Nesting};
pub use duality::{Algebra, GradedAlgebraTruncation, RbAlgebra};
pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use linear::{Matrix, Scalar, Subspace, Tensor, Vector};
pub use report::{Counterexample, Report};
pub use rota_baxter::RbCoalgebra;
