//! Inverse semigroups `S(G)` attached to finite groups, with partial actions, partial
//! representations, the algebra `C[S(G)]` and its grading.
//!
//! The numerical parts are generic over the scalar type; the aliases below fix the common
//! choices.
//!
//! ```
//! use invsg::{FiniteGroup, Sg, StructureAlgebra, WedderburnOptions};
//!
//! let g = FiniteGroup::klein4();
//! assert_eq!(Sg::new(&g).enumerate().unwrap().len(), 20);
//!
//! let alg = StructureAlgebra::build(&g).unwrap();
//! let d = alg.wedderburn::<f64>(0, &WedderburnOptions::default()).unwrap();
//! assert_eq!(d.blocks, vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3]);
//! ```

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod eigen;
pub mod graded;
pub mod group;
pub mod matrix;
pub mod partial_action;
pub mod partial_rep;
pub mod scalar;
pub mod sg;
pub mod subset;
pub mod universal;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraError, BlockDecomposition, StructureAlgebra, WedderburnOptions};
pub use group::{FiniteGroup, GroupElement, GroupError};
pub use matrix::Matrix;
pub use partial_action::{ActionError, InverseAction, PartialAction, PartialBijection};
pub use partial_rep::{PartialRep, RepError, SgRepresentation};
pub use scalar::{Real, Scalar};
pub use sg::{Sg, SgElement, SgError};
pub use subset::GroupSet;

use num_complex::Complex64;
use num_rational::Rational64;

pub type ComplexMatrix = Matrix<Complex64>;
pub type RealMatrix = Matrix<f64>;
pub type ExactMatrix = Matrix<i64>;
pub type RationalMatrix = Matrix<Rational64>;

pub type ComplexPartialRep = PartialRep<Complex64>;
pub type ExactPartialRep = PartialRep<i64>;

pub type ComplexAlgebraElement = AlgebraElement<Complex64>;
pub type RealAlgebraElement = AlgebraElement<f64>;
pub type RationalAlgebraElement = AlgebraElement<Rational64>;
