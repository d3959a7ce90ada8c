use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{Field, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list. Build values through [`PolyRing`], which trims.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Univariate polynomials over a field `F`, in the variable `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F> {
    base: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(base: F) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The variable `t`.
    pub fn var(&self) -> Poly<F::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: F::Elem, deg: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.base.zero(); deg];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn leading_or_zero(&self, a: &Poly<F::Elem>) -> F::Elem {
        a.leading().cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_constant(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.len() <= 1
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.leading().is_some_and(|c| self.base.is_one(c))
    }

    pub fn scalar_mul(&self, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(c, x)).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial maps to itself.
    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => a.clone(),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("leading coefficient is nonzero");
                self.scalar_mul(&inv, a)
            }
        }
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, x), c)
        })
    }

    /// `a(b(t))`.
    pub fn compose(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        a.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, b), &self.constant(c.clone()))
        })
    }

    /// Euclidean division: `a = q*b + r` with `deg r < deg b`.
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = self
            .base
            .inv(b.leading().expect("nonzero"))
            .ok_or(Error::DivisionByZero)?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.base.mul(&rem[i + db], &lc_inv);
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&c, bj);
                rem[i + j] = self.base.sub(&rem[i + j], &t);
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.div_rem(a, b)?.1)
    }

    /// Exact quotient; errors unless `b` divides `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.div_rem(a, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidInput("inexact polynomial division".into()))
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// Returns `(g, u, v)` with `g = u*a + v*b` and `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1)?;
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = self.base.inv(r0.leading().expect("nonzero")).expect("unit");
        Ok((
            self.scalar_mul(&lc_inv, &r0),
            self.scalar_mul(&lc_inv, &s0),
            self.scalar_mul(&lc_inv, &t0),
        ))
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        self.rem(&self.mul(a, b), m)
    }

    /// `a^e mod m` by square-and-multiply.
    pub fn pow_mod(
        &self,
        a: &Poly<F::Elem>,
        e: &BigUint,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let base = self.rem(a, m)?;
        let mut result = self.rem(&self.one(), m)?;
        if e.is_zero() {
            return Ok(result);
        }
        for i in (0..e.bits()).rev() {
            result = self.mul_mod(&result, &result, m)?;
            if e.bit(i) {
                result = self.mul_mod(&result, &base, m)?;
            }
        }
        Ok(result)
    }

    /// Format with an explicit variable name.
    pub fn format_var(&self, a: &Poly<F::Elem>, var: &str) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in a.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let cs = self.base.format(c);
            let negative = cs.starts_with('-') && !cs[1..].contains(['+', '-']);
            let mut body = if negative { cs[1..].to_string() } else { cs };
            if body.contains(['+', '-']) || (i > 0 && body.contains('/')) {
                body = format!("({body})");
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.base.add(c, s);
        }
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.base.sub(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.base.add(&coeffs[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.coeffs.len() == b.coeffs.len()
            && a.coeffs
                .iter()
                .zip(&b.coeffs)
                .all(|(x, y)| self.base.equal(x, y))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.format_var(a, "t")
    }

    fn weight(&self, a: &Self::Elem) -> usize {
        a.coeffs.len() + a.coeffs.iter().map(|c| self.base.weight(c)).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, PrimeField, Rationals};

    fn fp(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap())
    }

    #[test]
    fn divmod_square_over_f5() {
        let r = fp(5);
        let a = r.from_ints(&[4, 4, 1]);
        let b = r.from_ints(&[2, 1]);
        let (q, rem) = r.div_rem(&a, &b).unwrap();
        assert_eq!(q, r.from_ints(&[2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_cube_over_f7() {
        let r = fp(7);
        let a = r.from_ints(&[1, 5, 6, 1]);
        let (q, rem) = r.div_rem(&a, &r.from_ints(&[2, 1])).unwrap();
        assert_eq!(q, r.from_ints(&[4, 4, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_by_unit_and_zero() {
        let r = fp(7);
        let a = r.from_ints(&[3, 0, 2, 5]);
        assert_eq!(r.div_rem(&a, &r.one()).unwrap(), (a.clone(), r.zero()));
        assert_eq!(r.div_rem(&a, &r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_cases() {
        let r = fp(5);
        let a = r.from_ints(&[4, 4, 1]);
        assert_eq!(
            r.gcd(&a, &r.from_ints(&[2, 1])).unwrap(),
            r.from_ints(&[2, 1])
        );
        let b = r.from_ints(&[1, 3]);
        assert_eq!(r.gcd(&b, &r.zero()).unwrap(), r.monic(&b));
        assert_eq!(r.gcd(&r.var(), &r.from_ints(&[1, 1])).unwrap(), r.one());
        assert_eq!(
            r.gcd(&r.zero(), &r.zero()),
            Err(Error::ZeroPolynomial("gcd"))
        );
    }

    #[test]
    fn ext_gcd_bezout_over_q() {
        let r = PolyRing::new(Rationals);
        let a = r.from_ints(&[-1, -1, 2, 1]);
        let b = r.from_ints(&[3, 0, 1]);
        let (g, u, v) = r.ext_gcd(&a, &b).unwrap();
        assert_eq!(g, r.one());
        assert_eq!(r.add(&r.mul(&u, &a), &r.mul(&v, &b)), g);
    }

    #[test]
    fn formatting() {
        let r = fp(5);
        assert_eq!(r.format(&r.from_ints(&[4, 4, 1])), "t^2+4*t+4");
        let q = PolyRing::new(Rationals);
        let p = q.from_coeffs(vec![rational(-1, 1), rational(0, 1), rational(1, 2)]);
        assert_eq!(q.format(&p), "(1/2)*t^2-1");
    }
}
