use std::fmt;
use std::str::FromStr;

use super::poly::modp;
use crate::error::{Error, Result};

/// Parsed field or split étale algebra descriptor, e.g. `gf(3^2;u^2+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rationals,
    Prime(u64),
    /// `GF(p)[u]/(modulus)`, monic modulus from the constant term upward.
    Extension {
        p: u64,
        modulus: Vec<u64>,
    },
    /// `base^copies` as a split étale algebra.
    Split {
        base: Box<FieldDesc>,
        copies: usize,
    },
}

impl FieldDesc {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::Rationals => 0,
            FieldDesc::Prime(p) | FieldDesc::Extension { p, .. } => *p,
            FieldDesc::Split { base, .. } => base.characteristic(),
        }
    }

    /// Degree over the prime field (or over ℚ).
    pub fn rank(&self) -> usize {
        match self {
            FieldDesc::Rationals | FieldDesc::Prime(_) => 1,
            FieldDesc::Extension { modulus, .. } => modulus.len() - 1,
            FieldDesc::Split { base, copies } => base.rank() * copies,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, FieldDesc::Split { .. })
    }

    /// Number of elements when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDesc::Rationals => None,
            FieldDesc::Prime(p) => Some(*p),
            FieldDesc::Extension { p, modulus } => Some(p.pow(modulus.len() as u32 - 1)),
            FieldDesc::Split { base, copies } => base.order().map(|q| q.pow(*copies as u32)),
        }
    }
}

fn parse_poly(s: &str, p: u64) -> Result<Vec<u64>> {
    let bad = |m: &str| Error::InvalidField(format!("polynomial '{s}': {m}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<i128> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1i128, rest),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, exp) = match body.find('u') {
            None => (body.parse::<i128>().map_err(|_| bad("bad constant"))?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let coef = if c.is_empty() { 1 } else { c.parse::<i128>().map_err(|_| bad("bad coefficient"))? };
                let rest = &body[pos + 1..];
                let exp = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(|| bad("expected '^'"))?.parse::<usize>().map_err(|_| bad("bad exponent"))?
                };
                (coef, exp)
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += sign * coef;
    }
    let mut out: Vec<u64> = coeffs.iter().map(|c| c.rem_euclid(p as i128) as u64).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

fn strip_call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')
}

impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldDesc::Rationals);
        }
        if let Some(inner) = strip_call(s, "split") {
            let (base, n) = inner.rsplit_once(',').ok_or_else(|| Error::InvalidField(format!("'{s}': expected split(base,n)")))?;
            let base: FieldDesc = base.parse()?;
            if !base.is_field() {
                return Err(Error::InvalidField(format!("'{s}': nested split")));
            }
            let copies = n.trim().parse::<usize>().map_err(|_| Error::InvalidField(format!("'{s}': bad copy count")))?;
            if copies == 0 {
                return Err(Error::InvalidField(format!("'{s}': rank must be at least 1")));
            }
            return Ok(FieldDesc::Split { base: Box::new(base), copies });
        }
        if let Some(inner) = strip_call(s, "gf") {
            let (order, modulus) = match inner.split_once(';') {
                Some((o, m)) => (o.trim(), Some(m.trim())),
                None => (inner.trim(), None),
            };
            let (p, k) = match order.split_once('^') {
                Some((p, k)) => (
                    p.trim().parse::<u64>().map_err(|_| Error::InvalidField(format!("'{s}': bad prime")))?,
                    k.trim().parse::<usize>().map_err(|_| Error::InvalidField(format!("'{s}': bad exponent")))?,
                ),
                None => (order.parse::<u64>().map_err(|_| Error::InvalidField(format!("'{s}': bad order")))?, 1),
            };
            if !modp::is_prime(p) {
                return Err(Error::InvalidField(format!("'{s}': {p} is not prime")));
            }
            if k == 0 {
                return Err(Error::InvalidField(format!("'{s}': exponent must be positive")));
            }
            return match modulus {
                None if k == 1 => Ok(FieldDesc::Prime(p)),
                None => Err(Error::InvalidField(format!("'{s}': extension needs a modulus"))),
                Some(m) => {
                    let poly = parse_poly(m, p)?;
                    if poly.len() != k + 1 || poly[k] != 1 {
                        return Err(Error::InvalidField(format!("'{s}': modulus must be monic of degree {k}")));
                    }
                    if !modp::is_irreducible(&poly, p) {
                        return Err(Error::InvalidField(format!("'{s}': modulus is reducible over gf({p})")));
                    }
                    if k == 1 {
                        Ok(FieldDesc::Prime(p))
                    } else {
                        Ok(FieldDesc::Extension { p, modulus: poly })
                    }
                }
            };
        }
        Err(Error::InvalidField(format!("unrecognized descriptor '{s}'")))
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::Prime(p) => write!(f, "gf({p})"),
            FieldDesc::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let mut terms = Vec::new();
                for (i, &c) in modulus.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                    terms.push(match i {
                        0 => c.to_string(),
                        1 => format!("{coef}u"),
                        _ => format!("{coef}u^{i}"),
                    });
                }
                write!(f, "gf({p}^{k};{})", terms.join("+"))
            }
            FieldDesc::Split { base, copies } => write!(f, "split({base},{copies})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_forms() {
        assert_eq!("Q".parse::<FieldDesc>().unwrap(), FieldDesc::Rationals);
        assert_eq!("gf(7)".parse::<FieldDesc>().unwrap(), FieldDesc::Prime(7));
        assert_eq!("gf(3^2;u^2+1)".parse::<FieldDesc>().unwrap(), FieldDesc::Extension { p: 3, modulus: vec![1, 0, 1] });
        let s: FieldDesc = "split(gf(5),3)".parse().unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.order(), Some(125));
    }

    #[test]
    fn negative_coefficients_reduce_mod_p() {
        let d: FieldDesc = "gf(5^2;u^2-2)".parse().unwrap();
        assert_eq!(d, FieldDesc::Extension { p: 5, modulus: vec![3, 0, 1] });
    }

    #[test]
    fn rejects_bad_descriptors() {
        for bad in ["gf(9)", "gf(4)", "gf(3^2;u^2+2u+1)", "gf(5^2;u^2+1)", "split(Q,0)", "R"] {
            assert!(bad.parse::<FieldDesc>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["Q", "gf(7)", "gf(3^2;u^2+1)", "split(gf(5),3)", "gf(2^2;u^2+u+1)"] {
            let d: FieldDesc = s.parse().unwrap();
            assert_eq!(d.to_string().parse::<FieldDesc>().unwrap(), d);
        }
    }
}
