//! Clifford algebras of arbitrary symmetric forms over exact rings.
//!
//! Elements are sparse [`Multivector`]s in the canonical blade basis. The
//! product of a [`QuadraticSpace`] rewrites words of generators using only
//! `e_i² = q(e_i)` and `e_i e_j + e_j e_i = b_q(e_i, e_j)`, so degenerate and
//! parametric forms are handled exactly like nondegenerate ones.

mod blade;
mod multivector;
mod space;

pub use blade::{Blade, MAX_GENERATORS};
pub use multivector::Multivector;
pub use space::QuadraticSpace;
