//! Deterministic number formatting for CSV emission.

/// Format a float with the given number of significant digits, decimal point '.',
/// no exponent notation, and the shortest decimal expansion that round-trips the
/// rounded value. `0` (including `-0.0`) formats as `"0"`.
pub fn format_significant(x: f64, digits: u32) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits as i32 - 1 - magnitude);
    let rounded = (x * scale).round() / scale;
    format!("{rounded}")
}

/// Format an optional value; missing values become the empty CSV field.
pub fn format_opt_significant(x: Option<f64>, digits: u32) -> String {
    x.map_or_else(String::new, |v| format_significant(v, digits))
}
