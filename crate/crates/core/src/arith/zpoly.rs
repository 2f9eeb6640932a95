//! Integer-coefficient polynomials as bare coefficient vectors. Used inside
//! the polynomial-matrix eliminations, where working over Z with explicit
//! content removal is much cheaper than carrying rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, UniPoly};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &ZPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn max_bits(p: &ZPoly) -> u64 {
    p.iter().map(|c| c.bits()).max().unwrap_or(0)
}

pub(crate) fn linear(a: BigInt, b: BigInt) -> ZPoly {
    let mut p = vec![a, b];
    trim(&mut p);
    p
}

pub(crate) fn scale(p: &ZPoly, c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

pub(crate) fn sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `a*x - b*y` for polynomial multipliers.
pub(crate) fn mul_sub(a: &ZPoly, x: &ZPoly, b: &ZPoly, y: &ZPoly) -> ZPoly {
    sub(&mul(a, x), &mul(b, y))
}

/// Exact division of every coefficient by `c`.
pub(crate) fn div_exact(p: &mut ZPoly, c: &BigInt) {
    if c.is_one() {
        return;
    }
    for x in p.iter_mut() {
        *x = &*x / c;
    }
}

/// Pseudo-division: returns `(s, q, r)` with `s * a = q * b + r`, `deg r < deg b`
/// and `s = lc(b)^k` a nonzero integer.
pub(crate) fn pseudo_div_rem(a: &ZPoly, b: &ZPoly) -> (BigInt, ZPoly, ZPoly) {
    let db = degree(b).expect("nonzero divisor");
    let lc = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut s = BigInt::one();
    let mut q: ZPoly = Vec::new();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let shift = dr - db;
        let t = r.last().unwrap().clone();
        // Single-step reduction stays exact when lc | t.
        let (mult, coef) = if t.is_multiple_of(&lc) {
            (BigInt::one(), &t / &lc)
        } else {
            let g = t.gcd(&lc);
            (&lc / &g, &t / &g)
        };
        if !mult.is_one() {
            r = scale(&r, &mult);
            q = scale(&q, &mult);
            s *= &mult;
        }
        if q.len() <= shift {
            q.resize(shift + 1, BigInt::zero());
        }
        q[shift] += &coef;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &coef * c;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (s, q, r)
}

pub(crate) fn to_unipoly(p: &ZPoly) -> UniPoly {
    UniPoly::new(p.iter().cloned().map(Rational::from_integer).collect())
}

pub(crate) fn exact_quotient(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let (s, q, r) = pseudo_div_rem(a, b);
    if !r.is_empty() {
        return None;
    }
    if s.is_one() {
        return Some(q);
    }
    if q.iter().all(|c| c.is_multiple_of(&s)) {
        Some(q.iter().map(|c| c / &s).collect())
    } else {
        None
    }
}

pub(crate) fn is_negative_leading(p: &ZPoly) -> bool {
    p.last().is_some_and(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        let mut p: ZPoly = c.iter().map(|&x| BigInt::from(x)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn pseudo_division_identity() {
        let a = z(&[1, 3, 0, 5]);
        let b = z(&[2, 3]);
        let (s, q, r) = pseudo_div_rem(&a, &b);
        let lhs = scale(&a, &s);
        let mut rhs = mul(&q, &b);
        rhs = sub(&rhs, &scale(&r, &BigInt::from(-1)));
        assert_eq!(lhs, rhs);
        assert!(degree(&r).unwrap_or(0) < 1);
    }

    #[test]
    fn exact_quotients() {
        let a = mul(&z(&[1, 2]), &z(&[-3, 0, 4]));
        assert_eq!(exact_quotient(&a, &z(&[1, 2])), Some(z(&[-3, 0, 4])));
        assert_eq!(exact_quotient(&z(&[1, 1]), &z(&[0, 2])), None);
        assert_eq!(exact_quotient(&z(&[2, 2]), &z(&[2])), Some(z(&[1, 1])));
    }
}
