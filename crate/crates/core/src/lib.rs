//! Exact classical and degenerate Eulerian-family numbers and polynomials,
//! with an executable catalog of the identities that connect them.
//!
//! Every value is exact: scalars are arbitrary-precision rationals,
//! polynomials live in the fixed variable universe `(x, t, λ, u, q)` and
//! generating functions are truncated power series with rational-function
//! coefficients.

pub mod algebra;
pub mod classical;
pub mod degenerate;
pub mod identities;
mod error;
pub mod oracles;
pub mod render;
pub mod tables;

pub use error::SequenceError;
pub use tables::Tables;
