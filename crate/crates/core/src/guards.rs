//! Enumeration limits.
//!
//! Every brute-force enumeration checks its cell count against a fixed
//! default. Setting `SYMGEN_MAX_CELLS` lowers (never raises) that default.

use crate::error::{Error, Result};

pub const MAX_CELLS_ENV: &str = "SYMGEN_MAX_CELLS";

/// Effective limit: the smaller of `default` and `SYMGEN_MAX_CELLS`.
pub fn cell_limit(default: u128) -> u128 {
    std::env::var(MAX_CELLS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .map_or(default, |env| env.min(default))
}

/// Fails with [`Error::Guard`] when `cells` exceeds the effective limit.
pub fn check_cells(what: &'static str, cells: u128, default: u128) -> Result<()> {
    let limit = cell_limit(default);
    if cells > limit {
        Err(Error::guard(what, cells, limit))
    } else {
        Ok(())
    }
}

/// Fails when `value > limit`; not affected by the environment.
pub fn check_bound(what: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::guard(what, value, limit))
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub fn saturating_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
