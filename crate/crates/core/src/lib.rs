//! Kasami codes of type 2 and their generalizations, built by concatenating
//! a cyclic MDS code over F_q with a simplex code over F_p, together with the
//! exhaustive machinery to check their weight distributions, cyclicity,
//! coset graphs, complete regularity and automorphisms.

pub mod aut;
pub mod cli;
pub mod concat;
pub mod cyclic;
pub mod error;
pub mod gf2e;
pub mod gfc;
pub mod graphs;
pub mod kasami;
pub mod linear;
pub mod poly;
pub mod union;

pub use error::{Error, Result};
pub use gf2e::{Elem, FieldCtx, Subfield};
pub use linear::{LinearCode, WeightDistribution};
pub use poly::Poly;
