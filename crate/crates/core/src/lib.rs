#![no_std]
extern crate alloc;

pub mod catalog;
pub mod constructors;
pub mod cyclo;
pub mod diagonal;
pub mod error;
pub mod field;
pub mod geom;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod modular;
pub mod molien;
pub mod poly;
pub mod semi;
mod poly_gcd;

pub use cyclo::Cyclo;
pub use error::{Error, Result};
pub use field::FieldElement;
pub use linalg::Matrix;
pub use poly::{Monomial, Polynomial};
