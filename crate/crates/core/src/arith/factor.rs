use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::poly_gcd;
use super::rational::denominator_lcm;
use super::{ArithError, Rational, UniPoly};

/// Splits `f = c * p` where `p` has coprime integer coefficients and a
/// positive leading coefficient.
pub fn content_primitive(f: &UniPoly) -> Result<(Rational, UniPoly), ArithError> {
    let lc = f.leading().ok_or(ArithError::ZeroPolynomial)?;
    let l = denominator_lcm(f.coeffs());
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if lc.is_negative() {
        g = -g;
    }
    let prim = UniPoly::new(ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect());
    let c = Rational::new(g, l)?;
    Ok((c, prim))
}

/// `f = unit * prod(factor_i ^ exponent_i)` with pairwise coprime monic
/// squarefree factors and strictly increasing exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> UniPoly {
        self.factors.iter().fold(UniPoly::constant(self.unit.clone()), |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Yun's algorithm over the rationals.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<SquarefreeDecomposition, ArithError> {
    let unit = f.leading().cloned().ok_or(ArithError::ZeroPolynomial)?;
    let f = f.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree() != Some(0) {
        let a = poly_gcd(&b, &d);
        let b_next = b.exact_div(&a).expect("gcd divides b");
        let c_next = d.exact_div(&a).expect("gcd divides d");
        if a.degree().unwrap_or(0) > 0 {
            factors.push((a, i));
        }
        d = &c_next - &b_next.derivative();
        b = b_next;
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Product of the distinct monic squarefree factors of `f`.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let g = poly_gcd(f, &f.derivative());
    Ok(f.exact_div(&g).expect("gcd divides f").monic())
}

/// Pairwise coprime, squarefree, monic polynomials such that every input is
/// (up to a constant) a product of powers of them. Each basis element divides
/// at least one input. Constant inputs contribute nothing. Output is sorted.
pub fn gcd_free_basis(fs: &[UniPoly]) -> Result<Vec<UniPoly>, ArithError> {
    // Start from the squarefree components, so roots of one input with
    // different multiplicities begin in different pieces.
    let mut basis: Vec<UniPoly> = Vec::new();
    for f in fs {
        basis.extend(squarefree_decomposition(f)?.factors.into_iter().map(|(g, _)| g));
    }
    // Split any pair sharing a factor g into (a/g, g, b/g) until coprime. The
    // total degree shrinks with every split, so this terminates.
    'outer: loop {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = poly_gcd(&basis[i], &basis[j]);
                if g.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let b = basis.swap_remove(j);
                let a = basis.swap_remove(i);
                for piece in [a.exact_div(&g), b.exact_div(&g)].into_iter().flatten() {
                    if piece.degree().unwrap_or(0) > 0 {
                        basis.push(piece.monic());
                    }
                }
                basis.push(g);
                continue 'outer;
            }
        }
        break;
    }
    basis.sort();
    Ok(basis)
}

/// Largest `e` with `b^e | f`.
pub fn exponent_of(f: &UniPoly, b: &UniPoly) -> Result<u32, ArithError> {
    if b.degree().unwrap_or(0) == 0 {
        return Err(ArithError::ConstantBase);
    }
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let mut e = 0;
    let mut cur = f.clone();
    while let Some(q) = cur.exact_div(b) {
        cur = q;
        e += 1;
    }
    Ok(e)
}

/// Content of a list of integers, positive unless all are zero.
pub(crate) fn int_content<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    g
}
