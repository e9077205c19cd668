//! Deterministic decimal formatting: 10 significant digits, no exponent,
//! trailing zeros trimmed, and no negative zero.

pub const SIG_DIGITS: usize = 10;

pub fn sig(v: f64) -> String {
    sig_digits(v, SIG_DIGITS)
}

pub fn sig_digits(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let last = exp - (digits as i32 - 1);
    let s = if last >= 0 {
        let scale = 10f64.powi(last);
        format!("{:.0}", (v / scale).round() * scale)
    } else {
        format!("{:.*}", (-last) as usize, v)
    };
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// `v` rounded to 10 significant digits, for JSON emission.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    sig(v).parse().unwrap_or(v)
}

pub(crate) fn serialize_sig<S: serde::Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*v))
}
