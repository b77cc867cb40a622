//! Exact algebra for physical scales.
//!
//! * [`exactla`]: rationals, matrices and exact elimination.
//! * [`semivec`]: semi-vector spaces over the positive reals and their maps.
//! * [`tensor`]: sesqui-tensor products, the universal vector extension and
//!   semi-tensor products.
//! * [`posspace`]: one-dimensional positive spaces and their rational powers.
//! * [`scales`]: scales over a `(T, L, M)` basis, change of basis and
//!   dimensionless groups.
//! * [`unitlang`]: a small language and the `unitc` command built on it.

pub mod error;
pub mod exactla;
pub mod semivec;
pub mod tensor;
pub mod posspace;
pub mod scales;
pub mod unitlang;
