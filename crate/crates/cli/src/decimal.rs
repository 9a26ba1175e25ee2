//! Decimal rendering for reports and CSV output: at most six significant
//! decimal digits, plain notation (no exponents) for the unit interval.

/// Round to at most `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits as i32 - 1 - magnitude);
    (x * scale).round() / scale
}

/// Round to the six significant decimals used everywhere in output.
pub fn round_sig6(x: f64) -> f64 {
    round_sig(x, 6)
}

/// Format with up to six significant decimals. Rust's float `Display`
/// never switches to exponent notation, so values in [0, 1] stay plain.
pub fn format_decimal(x: f64) -> String {
    let rounded = round_sig6(x);
    if rounded == 0.0 {
        return "0".to_string();
    }
    format!("{rounded}")
}
