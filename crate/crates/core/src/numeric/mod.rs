//! Scalar numerics: adaptive quadrature and bracketed root finding.

mod quadrature;
mod rootfind;

pub use quadrature::{integrate, Integral, MAX_INTERVALS};
pub use rootfind::{brent, log_grid_bracket, RootOptions};
