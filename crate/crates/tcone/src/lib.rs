//! Tangent cones of numerical semigroup rings.
//!
//! For `G = <n_1, ..., n_d>` the crate computes the defining toric ideal `I`,
//! a minimal standard basis of `I` under a local order, the initial form
//! ideal `I*`, the Cohen-Macaulay / Buchsbaum / Gorenstein status of the
//! tangent cone `k[x]/I*`, and reduction-theoretic invariants such as the
//! reduction number and Goto numbers.

pub mod almost_monomial;
pub mod analysis;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod polyring;
pub mod ring_invariants;
pub mod search;
pub mod semigroup;
pub mod standard_basis;
pub mod tangent_cone;
pub mod toric;

pub use error::{Error, Result};
pub use polyring::{Binomial, Element, Monomial, MonomialOrder, OrderKind, Polynomial};
pub use semigroup::{AperySet, Factorization, NumericalSemigroup};
pub use standard_basis::{InitialFormIdeal, StandardBasis};
pub use toric::{defining_ideal, BresinskyClass, Classification, DefiningIdeal, HerzogClass};
