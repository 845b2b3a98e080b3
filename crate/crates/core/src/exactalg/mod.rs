//! Exact arithmetic: rationals, univariate polynomials, binary, ternary and
//! bihomogeneous forms.

pub mod biform;
pub mod binary;
pub mod modp;
pub mod rational;
pub mod roots;
pub mod ternary;
pub mod univariate;

pub use biform::BiForm;
pub use binary::{BinaryForm, P1Point};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use roots::rational_roots;
pub use ternary::{Exponent, TernaryForm};
pub use univariate::UniPoly;
