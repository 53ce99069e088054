//! Exact computer algebra for free metabelian Lie algebras over GF(p).

pub mod axioms;
pub mod equations;
pub mod error;
pub mod expr;
pub mod extension;
pub mod field;
pub mod fmla;
pub mod geometry;
pub mod gflin;
pub mod io;
pub mod groebner;
pub mod modvec;
pub mod poly;
pub mod polymat;
pub mod presentation;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use modvec::FreeModuleVector;
pub use poly::{MonomialOrder, Polynomial};
