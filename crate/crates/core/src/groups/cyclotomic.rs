use num_complex::Complex64;

use crate::error::{Error, Result};

/// Evaluates an integer combination of roots of unity such as
/// `"z8^3 - z8"`, `"-1"`, `"2*z3 + 1"`; `zn` is `exp(2πi/n)`.
pub fn parse_cyclotomic(s: &str) -> Result<Complex64> {
    let bad = |m: &str| Error::Parse(format!("cyclotomic value '{s}': {m}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > start && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for t in terms {
        let (sign, body) = match t.as_bytes().first() {
            Some(b'-') => (-1.0, &t[1..]),
            Some(b'+') => (1.0, &t[1..]),
            _ => (1.0, t),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (coef, atom) = match body.find('z') {
            Some(0) => (1.0, Some(body)),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                (c.parse::<f64>().map_err(|_| bad("bad coefficient"))?, Some(&body[pos..]))
            }
            None => (body.parse::<f64>().map_err(|_| bad("bad integer"))?, None),
        };
        let value = match atom {
            None => Complex64::new(1.0, 0.0),
            Some(a) => {
                let a = &a[1..];
                let (n, k) = match a.split_once('^') {
                    Some((n, k)) => (n, k.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                    None => (a, 1),
                };
                let n: u64 = n.parse().map_err(|_| bad("bad root order"))?;
                if n == 0 {
                    return Err(bad("root order must be positive"));
                }
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64)
            }
        };
        total += value * (sign * coef);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn parses_roots_and_integers() {
        assert!(close(parse_cyclotomic("-1").unwrap(), Complex64::new(-1.0, 0.0)));
        assert!(close(parse_cyclotomic("z4").unwrap(), Complex64::new(0.0, 1.0)));
        assert!(close(parse_cyclotomic("z3 + z3^2").unwrap(), Complex64::new(-1.0, 0.0)));
        let r2 = std::f64::consts::SQRT_2;
        assert!(close(parse_cyclotomic("z8 - z8^3").unwrap(), Complex64::new(r2, 0.0)));
        assert!(close(parse_cyclotomic("2*z4 - 3").unwrap(), Complex64::new(-3.0, 2.0)));
        assert!(parse_cyclotomic("z0").is_err());
        assert!(parse_cyclotomic("").is_err());
    }
}
