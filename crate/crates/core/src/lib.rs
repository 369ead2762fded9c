//! Exact computations with finite-dimensional Lie superalgebras.
//!
//! Everything is built on exact linear algebra over ℚ or 𝔽ₚ (p odd): the
//! non-abelian tensor and exterior products, Chevalley–Eilenberg and cyclic
//! homology, universal central extensions, the Hopf formula and the six-term
//! exact sequences relating them. Results are dimensions and certificates,
//! each obtained by rank computations that can be checked independently.

pub mod cyclic;
pub mod error;
pub mod exactla;
pub mod freelie;
pub mod homology;
pub mod liesuper;
pub mod nat;
pub mod superspace;
pub mod verify;

pub use error::{Error, Result};
pub use exactla::{EchelonAccumulator, FieldSpec, Matrix, Rational, Scalar, Subquotient, Subspace};
pub use liesuper::{Action, AssocSuperAlgebra, Certificate, CrossedModule, LieSuperAlgebra};
pub use superspace::{GradedMap, Parity, SuperSpace};
