//! Text form of affine weights: `a0*L0 + a1*L1 + ... + b*delta`.
//!
//! Coefficients are integers or fractions `p/q`; `d` is accepted for `delta`;
//! a bare basis symbol has coefficient 1; terms may repeat and are summed.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rat, Scalar};
use crate::{Rat, RootData, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    L(usize),
    Delta,
}

pub fn parse_weight(data: &RootData, s: &str) -> Result<Weight> {
    let err = |msg: &str| Error::Parse(format!("{msg} in weight `{s}`"));
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(err("empty input"));
    }
    if text == "0" {
        return Ok(Weight::zero(data.rank()));
    }
    let mut acc = Weight::zero(data.rank());
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = Rat::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if !first {
            return Err(err("expected `+` or `-`"));
        }
        first = false;
        let end = text[pos..].find(['+', '-']).map_or(text.len(), |k| pos + k);
        let term = &text[pos..end];
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let (coef, basis) = match term.split_once('*') {
            Some((c, b)) => (parse_coeff(c).ok_or_else(|| err("bad coefficient"))?, b),
            None => (Rat::one(), term),
        };
        let basis = parse_basis(basis).ok_or_else(|| err("unknown basis symbol"))?;
        let v = match basis {
            Basis::L(i) if i <= data.rank() => data.fundamental_weight(i),
            Basis::L(i) => return Err(err(&format!("index L{i} exceeds the rank"))),
            Basis::Delta => data.delta(),
        };
        acc = acc.add(&v.scale(&(sign * coef)));
        pos = end;
    }
    Ok(acc)
}

fn parse_coeff(c: &str) -> Option<Rat> {
    let (n, d) = match c.split_once('/') {
        Some((n, d)) => (n, d),
        None => (c, "1"),
    };
    let n: i64 = n.parse().ok()?;
    let d: i64 = d.parse().ok()?;
    if d <= 0 || n < 0 {
        return None;
    }
    Some(Rat::from_frac(n, d))
}

fn parse_basis(b: &str) -> Option<Basis> {
    match b {
        "delta" | "d" => Some(Basis::Delta),
        _ => {
            let idx = b.strip_prefix('L')?;
            if idx.is_empty() || !idx.bytes().all(|c| c.is_ascii_digit()) {
                return None;
            }
            idx.parse().ok().map(Basis::L)
        }
    }
}

/// Canonical text: nonzero terms in the order `L0..Ll, delta`.
pub fn format_weight(data: &RootData, w: &Weight) -> String {
    let mut coeffs: Vec<(String, Rat)> =
        data.coroot_values(w).into_iter().enumerate().map(|(i, c)| (format!("L{i}"), c)).collect();
    coeffs.push(("delta".to_string(), w.delta.clone()));
    let mut out = String::new();
    for (sym, c) in coeffs.into_iter().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if a.is_one() {
            out.push_str(&sym);
        } else {
            out.push_str(&format!("{}*{sym}", fmt_rat(&a)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    #[test]
    fn round_trip() {
        let d = RootData::new(CartanType::A(2));
        for s in ["L0", "2*L0 + L1 - 3*delta", "1/2*L1 + 1/2*L2", "0", "-delta", "L0 + L1 + L2 + 4*delta"] {
            let w = parse_weight(&d, s).unwrap();
            assert_eq!(format_weight(&d, &w), s);
        }
        let a = parse_weight(&d, "L0+L0 - 2 * d").unwrap();
        assert_eq!(format_weight(&d, &a), "2*L0 - 2*delta");
    }

    #[test]
    fn rejects_garbage() {
        let d = RootData::new(CartanType::A(1));
        for s in ["", "L2", "2*", "x", "L0 +", "1/0*L0", "L0 L1", "3"] {
            assert!(parse_weight(&d, s).is_err(), "{s}");
        }
    }
}
