//! Number rendering shared by the text formats.

/// Renders `x` with 17 significant digits in `%g` style, trailing zeros
/// trimmed. Round-trips every finite `f64`.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.16e}", x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mant.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}

/// Fixed-precision rendering with negative zero and sub-`eps` noise snapped
/// to `0`, so reports stay byte-stable.
pub fn fixed(x: f64, decimals: usize) -> String {
    let snap = 0.5 * 10f64.powi(-(decimals as i32));
    let v = if x.abs() < snap { 0.0 } else { x };
    format!("{:.*}", decimals, v)
}
