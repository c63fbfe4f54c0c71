//! Exact computer algebra around Clifford algebras of possibly degenerate
//! quadratic forms.
//!
//! * [`clifford`]: rings, blades, multivectors and the Clifford product.
//! * [`lie`]: the Lie algebra of even elements of filtration degree ≤ 2, its
//!   structure constants and the recovery of the form from them.
//! * [`spinor`]: spinor and half-spin modules of split forms.
//! * [`lipschitz`]: the Clifford–Lipschitz monoid and its infinitesimal theory.
//! * [`degeneration`]: one-parameter families of even Clifford algebras and
//!   their special fibres.
//! * [`plethysm`]: root systems, weight multisets and half-spin restrictions.
//! * [`local_models`]: tuples of matrices up to simultaneous conjugation.

pub mod clifford;
pub mod degeneration;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod lipschitz;
pub mod local_models;
pub mod plethysm;
pub mod ring;
pub mod selftest;
pub mod spinor;
pub mod tensor;
pub mod weight;

pub use error::{Error, Result};
