//! Float helpers that work both with and without `std`.

#[cfg(feature = "std")]
pub(crate) fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(not(feature = "std"))]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
pub(crate) fn floor(x: f64) -> f64 {
    x.floor()
}

#[cfg(not(feature = "std"))]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

/// 10^d, exact in f64 for d <= 22.
pub(crate) fn pow10(d: u32) -> f64 {
    let mut p = 1.0;
    for _ in 0..d {
        p *= 10.0;
    }
    p
}
