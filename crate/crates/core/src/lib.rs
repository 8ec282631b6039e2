//! Exact computations in finitely generated supercommutative superalgebras:
//! Gröbner bases over `k[x | y]`, Krull super-dimension, Harish-Chandra pair
//! groups in normal form, and orbits of odd unipotent actions.

pub mod corpus;
pub mod dsl;
pub mod error;
pub mod exec;
pub mod field;
pub mod groebner;
pub mod hcgroup;
pub mod linalg;
pub mod oracle;
pub mod orbits;
pub mod poly;
pub mod sdim;
pub mod selftest;

pub use error::{AlgebraError, Result};
pub use exec::Exec;
pub use field::{Field, Scalar};
pub use groebner::{SuperAlgebra, SuperIdeal};
pub use poly::{Mono, Parity, Ring, SuperPoly};
