//! Exact computations in the universal enveloping algebra of the Lie algebra
//! of polynomial vector fields on the line.

pub mod annihilator;
pub mod arith;
pub mod checks;
pub mod error;
pub mod linalg;
pub mod par;
pub mod report;
pub mod slices;
pub mod uea;
pub mod weyl;
pub mod witt;

pub use arith::{Coeff, Poly, Rat, Var};
pub use annihilator::ModuleSpec;
pub use error::Error;
pub use report::{CheckReport, Cutoffs, Status};
pub use uea::{Mono, Named, Uea, UeaElt};
pub use weyl::{LambdaSpec, Weyl};
pub use witt::{GenIndex, LieElt, SubalgebraId};
