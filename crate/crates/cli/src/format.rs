use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::Value;

use puiseux_core::{ExponentVector, QSeries};

/// Writes `ζ` so that [`crate::parse_series`] reads back the same series,
/// including the variable count and the (unreduced) denominator.
pub fn format_series(zeta: &QSeries) -> String {
    if zeta.is_zero() {
        return "0".into();
    }
    let m = zeta.denominator();
    let mut out = String::new();
    for (i, (e, c)) in zeta.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&monomial(e, m, zeta.nvars()));
    }
    out
}

fn monomial(e: &ExponentVector, m: &BigUint, nvars: usize) -> String {
    e.entries()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let var = if nvars == 1 { "T".to_string() } else { format!("X{}", k + 1) };
            format!("{var}^({x}/{m})")
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub fn json_uint(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn json_vector(e: &ExponentVector) -> Value {
    Value::Array(e.entries().iter().map(json_uint).collect())
}
