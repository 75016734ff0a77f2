//! Ihara zeta function of a finite multigraph.
//!
//! Three independent routes to the same integer series:
//!
//! * [`zeta_euler_truncated`] expands `prod 1/(1 - u^l(C))` over the
//!   primitive classes returned by [`enumerate_cycles`];
//! * [`zeta_series`] counts closed non-backtracking tail-less walks `N_n` and
//!   exponentiates `sum N_n u^n / n`;
//! * [`zeta_reciprocal`] computes `det(I - uT)` for the non-backtracking arc
//!   operator `T`, whose formal reciprocal is `Z(u)`.

mod cycles;
mod det;
mod format;
mod poles;
mod series;

pub use cycles::{enumerate_cycles, enumerate_cycles_with_cap, CycleClass, DEFAULT_CLASS_CAP};
pub use det::{
    zeta_reciprocal, zeta_reciprocal_interpolated, zeta_reciprocal_modular, ZetaReciprocal, INTERPOLATION_LIMIT,
};
pub use format::{format_poles, format_poly, format_series, parse_poly};
pub use poles::{zeta_poles, Pole};
pub use series::{
    arc_matrix, exp_series, reciprocal_series, trace_counts, zeta_euler_checked, zeta_euler_truncated, zeta_series,
    ZetaSeries,
};

use crate::error::{Error, Result};
use crate::graph::{validate, Multigraph};

pub(crate) fn require_md2(g: &Multigraph) -> Result<()> {
    let r = validate(g);
    if !r.md2 {
        return Err(Error::NotMd2);
    }
    if !r.connected {
        return Err(Error::NotConnected);
    }
    Ok(())
}
