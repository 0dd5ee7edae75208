//! Exact integer helpers. Nothing in this crate touches floating point.

/// `⌈a / b⌉` computed as `(a + b - 1) / b`.
///
/// Callers keep `a + b` within `u64`; every public entry point enforces
/// [`MAX_QUANTITY`](crate::MAX_QUANTITY) so this holds.
#[inline]
#[allow(clippy::manual_div_ceil)]
pub const fn ceil_div(a: u64, b: u64) -> u64 {
    debug_assert!(b >= 1);
    (a + b - 1) / b
}

/// `⌊a / b⌋`.
#[inline]
pub const fn floor_div(a: u64, b: u64) -> u64 {
    debug_assert!(b >= 1);
    a / b
}
