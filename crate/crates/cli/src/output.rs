//! Number formatting shared by the report writers.

use incmax::{Rational, RatioValue, Scalar};
use serde_json::Value;

/// `x` rounded to 9 significant digits, printed in shortest form.
pub fn sig9(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.is_nan() {
        return "nan".into();
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    rounded.to_string()
}

/// JSON form of a value: exact `"p/q"` strings for rationals, numbers for floats.
pub trait JsonScalar: Scalar {
    fn json(&self) -> Value;
}

impl JsonScalar for f64 {
    fn json(&self) -> Value {
        serde_json::json!(self)
    }
}

impl JsonScalar for Rational {
    fn json(&self) -> Value {
        Value::String(self.to_exact_string())
    }
}

pub fn ratio_json<V: JsonScalar>(r: &RatioValue<V>) -> Value {
    match r.finite() {
        Some(v) => v.json(),
        None => Value::String("inf".into()),
    }
}

pub fn optional<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}
