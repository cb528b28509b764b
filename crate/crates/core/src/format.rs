//! Deterministic decimal rendering.

/// Render `v` rounded to `sig` significant digits (half to even on the exact
/// binary value), trailing zeros trimmed. Magnitudes in `[1e-4, 1e15)` are
/// written positionally, everything else as `d.ddde±x`.
pub fn format_sig(v: f64, sig: usize) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sig = sig.clamp(1, 17);
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if negative { "-" } else { "" };

    if !(-4..15).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        return if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        };
    }
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positional() {
        assert_eq!(format_sig(41.79712908801273, 10), "41.79712909");
        assert_eq!(format_sig(0.0, 10), "0");
        assert_eq!(format_sig(1.0, 10), "1");
        assert_eq!(format_sig(100000.0, 10), "100000");
        assert_eq!(format_sig(77507507.0, 4), "77510000");
        assert_eq!(format_sig(-2.25, 10), "-2.25");
        assert_eq!(format_sig(0.000123456, 3), "0.000123");
        assert_eq!(format_sig(3.16227766016838, 12), "3.16227766017");
    }

    #[test]
    fn exponent_form() {
        assert_eq!(format_sig(0.00001234, 3), "1.23e-5");
        assert_eq!(format_sig(1e15, 10), "1e15");
        assert_eq!(format_sig(-6.02e23, 3), "-6.02e23");
        assert_eq!(format_sig(999999999999999.9, 10), "1e15");
        assert_eq!(format_sig(f64::INFINITY, 3), "inf");
    }

    #[test]
    fn half_even_on_exact_ties() {
        assert_eq!(format_sig(2.5, 1), "2");
        assert_eq!(format_sig(3.5, 1), "4");
        assert_eq!(format_sig(0.125, 2), "0.12");
        assert_eq!(format_sig(0.375, 2), "0.38");
    }
}
