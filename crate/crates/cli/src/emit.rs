//! Output rendering: LaTeX for polynomials and deterministic JSON documents.

use invariant_ring::{Monomial, Polynomial, Rational};
use num_traits::{One, Signed};
use serde_json::Value;

pub fn latex_monomial(m: &Monomial) -> String {
    if *m == Monomial::ONE {
        return "1".to_string();
    }
    let mut out = String::new();
    for (name, e) in [("\\alpha", m.a), ("\\beta", m.b), ("\\gamma", m.c)] {
        match e {
            0 => {}
            1 => out.push_str(name),
            _ => out.push_str(&format!("{name}^{{{e}}}")),
        }
    }
    out
}

fn latex_magnitude(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Terms in descending monomial order, e.g. `-\frac{1}{2}\alpha^{3}\gamma + \beta`.
pub fn latex_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let unit = c.abs().is_one();
        if *m == Monomial::ONE {
            out.push_str(&latex_magnitude(c));
        } else if unit {
            out.push_str(&latex_monomial(m));
        } else {
            out.push_str(&latex_magnitude(c));
            out.push_str(&latex_monomial(m));
        }
    }
    out
}

/// Rationals travel as strings, "n" or "n/d".
pub fn rational_string(c: &Rational) -> String {
    c.to_string()
}

/// Pretty JSON with object keys sorted and a trailing newline.
pub fn json_document(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built from strings and integers");
    s.push('\n');
    s
}

/// u128 counts as JSON numbers when they fit in u64, as strings otherwise.
pub fn json_count(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use invariant_ring::parse::parse_poly;
    use serde_json::json;

    #[test]
    fn latex_rendering() {
        let p = |s| latex_poly(&parse_poly(s).unwrap());
        assert_eq!(p("a^2 + b"), "\\alpha^{2} + \\beta");
        assert_eq!(p("-1/2*a^3*c + 3"), "-\\frac{1}{2}\\alpha^{3}\\gamma + 3");
        assert_eq!(p("a*b*c - 1"), "\\alpha\\beta\\gamma - 1");
        assert_eq!(p("0"), "0");
        assert_eq!(p("-c^12"), "-\\gamma^{12}");
    }

    #[test]
    fn json_keys_are_sorted() {
        let v = json!({"zeta": 1, "alpha": "x", "mid": [1, 2]});
        let s = json_document(&v);
        let a = s.find("alpha").unwrap();
        let m = s.find("mid").unwrap();
        let z = s.find("zeta").unwrap();
        assert!(a < m && m < z);
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn large_counts_become_strings() {
        assert_eq!(json_count(7), json!(7));
        assert_eq!(
            json_count(u128::from(u64::MAX) + 1),
            json!("18446744073709551616")
        );
    }
}
