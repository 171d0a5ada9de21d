//! Fixed float formatting: ten significant digits, scientific notation below
//! `1e-4` in magnitude.

pub const SIGNIFICANT_DIGITS: usize = 10;

pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    if x.abs() < 1e-4 {
        return sci;
    }
    // Exponent after rounding, so that 9.99999999996 becomes 10.00000000.
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if exp >= SIGNIFICANT_DIGITS as i32 {
        return sci;
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// The same text as a JSON number.
pub fn json_f64(x: f64) -> serde_json::Value {
    match fmt_f64(x).parse::<serde_json::Number>() {
        Ok(n) => serde_json::Value::Number(n),
        Err(_) => serde_json::Value::Null,
    }
}
