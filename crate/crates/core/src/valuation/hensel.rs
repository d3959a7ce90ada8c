use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::padic::{mod_inverse, PadicField, PadicNumber};
use super::place::valuation_rational;
use crate::arith::{Poly, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

/// Lift a simple residue root of a rational polynomial to `Q_p`.
///
/// Substitutes `x = p^shift * y`, divides out the content so that the
/// polynomial `h(y)` is primitive and integral, and Newton-lifts the simple
/// root `y0 = initial mod p` of `h mod p` to precision `p^precision`.
/// Returns `x* = p^shift * y*` with `h(y*) = 0 mod p^precision`.
pub fn hensel_root(
    g: &Poly<BigRational>,
    p: u64,
    shift: i64,
    initial: u64,
    precision: u32,
) -> Result<PadicNumber> {
    let y = hensel_lift_scaled(g, p, shift, initial, precision)?;
    let field = PadicField::new(p, precision as i64)?;
    Ok(field.from_integer_with_precision(&y, shift, shift + precision as i64))
}

/// The lifted root `y*` of the scaled primitive polynomial, modulo `p^precision`.
fn hensel_lift_scaled(
    g: &Poly<BigRational>,
    p: u64,
    shift: i64,
    initial: u64,
    precision: u32,
) -> Result<BigInt> {
    if g.degree().unwrap_or(0) == 0 {
        return Err(Error::Hensel("polynomial must have positive degree".into()));
    }
    let pb = BigInt::from(p);
    let scaled: Vec<BigRational> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * pow_signed(&pb, shift * i as i64))
        .collect();
    let content = scaled
        .iter()
        .filter_map(|c| valuation_rational(c, p))
        .min()
        .expect("nonzero polynomial");
    let modulus = pb.pow(precision);
    let h: Vec<BigInt> = scaled
        .iter()
        .map(|c| {
            let c = c * pow_signed(&pb, -content);
            let den_inv = mod_inverse(c.denom(), &modulus).expect("denominator is a p-unit");
            (c.numer() * den_inv).mod_floor(&modulus)
        })
        .collect();

    let fp = PrimeField::new(p)?;
    let ring = PolyRing::new(fp);
    let hbar = ring.from_coeffs(h.iter().map(|c| fp.from_bigint(c)).collect());
    let y0 = initial % p;
    if !fp.is_zero(&ring.eval(&hbar, &y0)) {
        return Err(Error::Hensel(format!("{y0} is not a root mod {p}")));
    }
    if fp.is_zero(&ring.eval(&ring.derivative(&hbar), &y0)) {
        return Err(Error::Hensel(format!("{y0} is a multiple root mod {p}")));
    }

    let dh: Vec<BigInt> = h
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let eval = |coeffs: &[BigInt], y: &BigInt, m: &BigInt| {
        coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * y + c).mod_floor(m))
    };
    let mut y = BigInt::from(y0);
    let mut k = 1u32;
    while k < precision {
        k = (2 * k).min(precision);
        let m = pb.pow(k);
        let fy = eval(&h, &y, &m);
        let dfy = eval(&dh, &y, &m);
        let inv = mod_inverse(&dfy, &m).expect("simple root keeps the derivative a unit");
        y = (&y - fy * inv).mod_floor(&m);
    }
    debug_assert!(eval(&h, &y, &modulus).is_zero());
    Ok(y)
}

fn pow_signed(p: &BigInt, e: i64) -> BigRational {
    let m = p.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(m)
    } else {
        BigRational::new(BigInt::one(), m)
    }
}

/// `v_p(g(x))` for a truncated p-adic `x`; used to re-check lifted roots.
/// A zero result reports its absolute precision.
pub fn residual_valuation(g: &Poly<BigRational>, x: &PadicNumber, field: &PadicField) -> i64 {
    let value = g.coeffs().iter().rev().fold(field.zero(), |acc, c| {
        field.add(&field.mul(&acc, x), &field.from_rational_exact(c))
    });
    value.valuation().unwrap_or(value.absolute_precision())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;

    fn qpoly(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(Rationals).from_ints(c)
    }

    #[test]
    fn sqrt_two_mod_49() {
        let r = hensel_root(&qpoly(&[-2, 0, 1]), 7, 0, 3, 2).unwrap();
        assert_eq!(r.valuation(), Some(0));
        assert_eq!(r.unit(), &BigInt::from(10));
        assert_eq!(r.absolute_precision(), 2);
    }

    #[test]
    fn linear_root_is_exact() {
        let r = hensel_root(&qpoly(&[-5, 1]), 7, 0, 5, 20).unwrap();
        assert_eq!(r.unit(), &BigInt::from(5));
    }

    #[test]
    fn hypothesis_failures() {
        assert!(matches!(
            hensel_root(&qpoly(&[-2, 0, 1]), 7, 0, 2, 4),
            Err(Error::Hensel(_))
        ));
        // (x-1)^2 has a double root mod every p.
        assert!(matches!(
            hensel_root(&qpoly(&[1, -2, 1]), 5, 0, 1, 4),
            Err(Error::Hensel(_))
        ));
    }

    #[test]
    fn residual_is_small() {
        let g = qpoly(&[-2, 0, 1]);
        let x = hensel_root(&g, 7, 0, 3, 30).unwrap();
        let field = PadicField::new(7, 30).unwrap();
        assert!(residual_valuation(&g, &x, &field) >= 30);
    }
}
