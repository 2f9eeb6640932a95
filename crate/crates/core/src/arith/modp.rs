use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{ArithError, Rational};

/// Largest prime below 2^64.
pub const DEFAULT_PRIME: u64 = 18_446_744_073_709_551_557;

/// Context for arithmetic in `Z/pZ`. Primality is checked once here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    value: u64,
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> PrimeFieldElem {
        PrimeFieldElem { value: v % self.p, p: self.p }
    }

    pub fn zero(&self) -> PrimeFieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> PrimeFieldElem {
        self.elem(1)
    }

    pub fn from_bigint(&self, n: &BigInt) -> PrimeFieldElem {
        let r = n.modpow(&BigInt::from(1), &BigInt::from(self.p));
        let r = if r.sign() == num_bigint::Sign::Minus { r + self.p } else { r };
        self.elem(r.to_u64().expect("reduced below p"))
    }

    /// Image of `r` in the field, or `None` when p divides the denominator.
    pub fn from_rational(&self, r: &Rational) -> Option<PrimeFieldElem> {
        let den = self.from_bigint(r.denom());
        let inv = den.inv()?;
        Some(self.from_bigint(r.numer()) * inv)
    }
}

impl PrimeFieldElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = PrimeFieldElem { value: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

impl Add for PrimeFieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = (self.value as u128 + rhs.value as u128) % self.p as u128;
        PrimeFieldElem { value: s as u64, p: self.p }
    }
}

impl Sub for PrimeFieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PrimeFieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        let v = if self.value == 0 { 0 } else { self.p - self.value };
        PrimeFieldElem { value: v, p: self.p }
    }
}

impl Mul for PrimeFieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let m = (self.value as u128 * rhs.value as u128) % self.p as u128;
        PrimeFieldElem { value: m as u64, p: self.p }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rank over `Z/pZ` of a matrix given by rows of rationals. Rows whose
/// denominators vanish mod p make the reduction undefined; `None` then.
pub fn rank_mod_p(field: &PrimeField, rows: &[Vec<Rational>]) -> Option<usize> {
    let mut m: Vec<Vec<PrimeFieldElem>> = Vec::with_capacity(rows.len());
    for row in rows {
        let r: Option<Vec<_>> = row.iter().map(|x| field.from_rational(x)).collect();
        m.push(r?);
    }
    Some(rank_fp(m))
}

pub(crate) fn rank_fp(mut m: Vec<Vec<PrimeFieldElem>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        let prow: Vec<PrimeFieldElem> = m[rank].iter().map(|&x| x * inv).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                row[j] = row[j] - f * prow[j];
            }
        }
        rank += 1;
    }
    rank
}
