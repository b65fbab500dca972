//! Output helpers: every float written by the crate goes through
//! [`round_sig`] so reports are byte-stable.

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits. Non-finite values pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Text form of [`round_sig`]`(x)`, as it appears in JSON output.
pub fn format_float(x: f64) -> String {
    match serde_json::Number::from_f64(round_sig(x)) {
        Some(n) => n.to_string(),
        None => x.to_string(),
    }
}

/// Rounds every number in a JSON tree that is not an integer.
pub fn round_value(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().expect("f64 number"));
            if let Some(r) = serde_json::Number::from_f64(x) {
                *num = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Serializes `x` to a JSON value with rounded floats.
pub fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    let mut v = serde_json::to_value(x)?;
    round_value(&mut v);
    Ok(v)
}

/// Compact single-line JSON with rounded floats.
pub fn to_json_line<T: Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string(&to_value(x)?)?)
}

/// Indented JSON with rounded floats.
pub fn to_json_pretty<T: Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&to_value(x)?)?)
}
