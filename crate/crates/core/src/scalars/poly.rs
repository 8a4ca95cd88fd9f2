//! Dense univariate polynomials, coefficients from the constant term upward.

use super::Scalar;

pub fn trim<S: Scalar>(mut p: Vec<S>) -> Vec<S> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree<S: Scalar>(p: &[S]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(S::zero);
        let y = b.get(i).cloned().unwrap_or_else(S::zero);
        out.push(x - y);
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem<S: Scalar>(a: &[S], m: &[S]) -> Vec<S> {
    let dm = degree(m).expect("modulus is nonzero");
    let lead_inv = m[dm].try_inv().expect("leading coefficient is nonzero");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let f = r[dr].clone() * lead_inv.clone();
        for i in 0..=dm {
            r[dr - dm + i] = r[dr - dm + i].clone() - f.clone() * m[i].clone();
        }
        r = trim(r);
    }
    r
}

pub fn gcd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = x[d].try_inv().expect("nonzero leading coefficient");
        x = x.into_iter().map(|c| c * inv.clone()).collect();
    }
    x
}

pub fn mulmod<S: Scalar>(a: &[S], b: &[S], m: &[S]) -> Vec<S> {
    rem(&mul(a, b), m)
}

pub fn powmod<S: Scalar>(a: &[S], mut e: u64, m: &[S]) -> Vec<S> {
    let mut base = rem(a, m);
    let mut acc = rem(&[S::one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m);
        }
        base = mulmod(&base, &base, m);
        e >>= 1;
    }
    acc
}

/// `x^(q^k) mod m` by repeated q-th powering.
fn frobenius_power<S: Scalar>(q: u64, k: usize, m: &[S]) -> Vec<S> {
    let mut x = vec![S::zero(), S::one()];
    for _ in 0..k {
        x = powmod(&x, q, m);
    }
    x
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test over a finite field of order `q`.
pub fn is_irreducible_finite<S: Scalar>(f: &[S], q: u64) -> bool {
    let Some(n) = degree(f) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![S::zero(), S::one()];
    for r in prime_factors(n) {
        let h = sub(&frobenius_power(q, n / r, f), &x);
        if degree(&gcd(f, &h)).unwrap_or(0) != 0 || h.is_empty() {
            return false;
        }
    }
    let top = sub(&frobenius_power(q, n, f), &x);
    rem(&top, f).is_empty()
}

/// Evaluates `p` at `x` by Horner's rule.
pub fn eval<S: Scalar>(p: &[S], x: &S) -> S {
    p.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Runtime arithmetic over GF(p) for descriptor validation.
pub mod modp {
    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut r = 1u128;
        let mut b = a as u128 % p as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        r as u64
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let dm = m.len() - 1;
        let li = inv(m[dm], p);
        let mut r = trim(a.to_vec());
        while r.len() > dm {
            let dr = r.len() - 1;
            let f = (r[dr] as u128 * li as u128 % p as u128) as u64;
            for i in 0..=dm {
                let sub = (f as u128 * m[i] as u128 % p as u128) as u64;
                r[dr - dm + i] = (r[dr - dm + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
            }
        }
        rem(&out, m, p)
    }

    fn gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x.len().saturating_sub(1)
    }

    fn x_power_frobenius(q: u64, k: usize, m: &[u64], p: u64) -> Vec<u64> {
        let mut x = rem(&[0, 1], m, p);
        for _ in 0..k {
            let mut acc = rem(&[1], m, p);
            let mut base = x.clone();
            let mut e = q;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, m, p);
                }
                base = mulmod(&base, &base, m, p);
                e >>= 1;
            }
            x = acc;
        }
        x
    }

    fn minus_x(v: &[u64], p: u64) -> Vec<u64> {
        let mut h = v.to_vec();
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        trim(h)
    }

    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    /// Rabin's test for a polynomial with coefficients already reduced mod `p`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let n = f.len() - 1;
        if n == 1 {
            return true;
        }
        for r in super::prime_factors(n) {
            let h = minus_x(&x_power_frobenius(p, n / r, &f, p), p);
            if h.is_empty() || gcd_degree(&f, &h, p) != 0 {
                return false;
            }
        }
        minus_x(&x_power_frobenius(p, n, &f, p), p).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;
    use num_traits::{One, Zero};

    type F3 = Fp<3>;

    #[test]
    fn rabin_matches_root_search_for_quadratics_over_gf3() {
        for a in 0..3 {
            for b in 0..3 {
                let f = vec![F3::new(b), F3::new(a), F3::one()];
                let has_root = (0..3).any(|x| eval(&f, &F3::new(x)).is_zero());
                assert_eq!(is_irreducible_finite(&f, 3), !has_root, "u^2+{a}u+{b}");
                assert_eq!(modp::is_irreducible(&[b, a, 1], 3), !has_root);
            }
        }
    }

    #[test]
    fn quartic_with_no_roots_can_still_be_reducible() {
        // (u^2+1)^2 over GF(3) has no roots but is reducible.
        let f = [1, 0, 2, 0, 1];
        assert!(!modp::is_irreducible(&f, 3));
        // u^4+u+2 over GF(3) is irreducible.
        assert!(modp::is_irreducible(&[2, 1, 0, 0, 1], 3));
    }
}
