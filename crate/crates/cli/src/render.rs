use std::fmt::Write;

use fqhg::{Matrix, Scalar};
use num_traits::{One, Zero};
use serde_json::Value;

/// `c x` with the coefficient dropped when it is ±1.
fn term(c: &Scalar, x: &str) -> String {
    if c.is_one() {
        x.to_string()
    } else if *c == -Scalar::one() {
        format!("-{x}")
    } else if !c.re().is_zero() && !c.im().is_zero() {
        format!("({c}) {x}")
    } else {
        format!("{c} {x}")
    }
}

/// `Σ c_i x_i` over the nonzero coefficients, or `0`.
pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, x) in terms {
        if c.is_zero() {
            continue;
        }
        let t = term(c, &x);
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(out, " - {rest}").unwrap();
        } else {
            write!(out, " + {t}").unwrap();
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn element(v: &[Scalar], labels: &[String]) -> String {
    linear_combination(v.iter().zip(labels.iter().cloned()))
}

/// `Δ(e_j)` as a sum of elementary tensors.
pub fn coproduct_column(delta: &Matrix, j: usize, labels: &[String]) -> String {
    let d = labels.len();
    let col = delta.column(j);
    linear_combination(col.iter().enumerate().map(|(r, c)| (c, format!("{}⊗{}", labels[r / d], labels[r % d]))))
}

/// `key: value` lines for every leaf of a JSON object.
pub fn flat_lines(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flat_lines(v, &key, out);
            }
        }
        Value::Null => {}
        Value::String(s) => writeln!(out, "{prefix}: {s}").unwrap(),
        other => writeln!(out, "{prefix}: {other}").unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_sums() {
        let labels = vec!["u".to_string(), "v".to_string()];
        let mut delta = Matrix::zeros(4, 1);
        delta.set(0, 0, Scalar::one());
        delta.set(3, 0, Scalar::ratio(1, 2));
        assert_eq!(coproduct_column(&delta, 0, &labels), "u⊗u + 1/2 v⊗v");
        delta.set(1, 0, Scalar::from_int(-1));
        delta.set(2, 0, Scalar::gaussian(1, 1));
        assert_eq!(coproduct_column(&delta, 0, &labels), "u⊗u - u⊗v + (1+i) v⊗u + 1/2 v⊗v");
        assert_eq!(element(&[Scalar::zero(), Scalar::ratio(-3, 2)], &labels), "-3/2 v");
        assert_eq!(element(&[Scalar::zero(), Scalar::zero()], &labels), "0");
    }
}
