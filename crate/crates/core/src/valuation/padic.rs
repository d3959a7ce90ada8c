//! Truncated p-adic numbers with tracked valuation and absolute precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::place::valuation_int;
use crate::arith::{Field, PrimeField, Ring};
use crate::error::{Error, Result};

/// `p^valuation * unit + O(p^abs_prec)`.
///
/// For a nonzero value the unit is known modulo `p^(abs_prec - valuation)` and
/// is coprime to `p`. A value with `valuation == None` is only known to be
/// divisible by `p^abs_prec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicNumber {
    valuation: Option<i64>,
    unit: BigInt,
    abs_prec: i64,
}

impl PadicNumber {
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    pub fn absolute_precision(&self) -> i64 {
        self.abs_prec
    }

    /// Number of known unit digits; 0 for an indistinguishable-from-zero value.
    pub fn relative_precision(&self) -> i64 {
        match self.valuation {
            Some(v) => self.abs_prec - v,
            None => 0,
        }
    }
}

/// `Q_p` truncated to a working relative precision: exact inputs are
/// represented with `prec` significant digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicField {
    p: u64,
    prec: i64,
    residue: PrimeField,
}

impl PadicField {
    pub fn new(p: u64, prec: i64) -> Result<Self> {
        let residue = PrimeField::new(p)?;
        if prec < 1 {
            return Err(Error::InvalidInput(
                "p-adic precision must be positive".into(),
            ));
        }
        Ok(Self { p, prec, residue })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    fn pk(&self, k: i64) -> BigInt {
        BigInt::from(self.p).pow(k.max(0) as u32)
    }

    /// `p^k` exactly (to working precision).
    pub fn p_power(&self, k: i64) -> PadicNumber {
        PadicNumber {
            valuation: Some(k),
            unit: BigInt::one(),
            abs_prec: k + self.prec,
        }
    }

    /// A value known to be `0 mod p^abs_prec`.
    pub fn zero_to(&self, abs_prec: i64) -> PadicNumber {
        PadicNumber {
            valuation: None,
            unit: BigInt::zero(),
            abs_prec,
        }
    }

    /// Build `p^shift * n + O(p^abs_prec)` from an integer.
    pub fn from_integer_with_precision(
        &self,
        n: &BigInt,
        shift: i64,
        abs_prec: i64,
    ) -> PadicNumber {
        let rel_cap = abs_prec - shift;
        match valuation_int(n, self.p) {
            None => self.zero_to(abs_prec),
            Some(v) if v >= rel_cap => self.zero_to(abs_prec),
            Some(v) => {
                let rel = rel_cap - v;
                let unit = (n / self.pk(v)).mod_floor(&self.pk(rel));
                PadicNumber {
                    valuation: Some(shift + v),
                    unit,
                    abs_prec,
                }
            }
        }
    }

    /// Embed a rational number at working precision.
    pub fn from_rational_exact(&self, q: &BigRational) -> PadicNumber {
        let Some(v) = super::place::valuation_rational(q, self.p) else {
            return self.zero_to(i64::MAX / 4);
        };
        let vn = valuation_int(q.numer(), self.p).expect("nonzero");
        let vd = valuation_int(q.denom(), self.p).expect("nonzero");
        let modulus = self.pk(self.prec);
        let n = q.numer() / self.pk(vn);
        let d = q.denom() / self.pk(vd);
        let dinv = mod_inverse(&d, &modulus).expect("denominator unit is invertible");
        PadicNumber {
            valuation: Some(v),
            unit: (n * dinv).mod_floor(&modulus),
            abs_prec: v + self.prec,
        }
    }

    /// Residue of a value with nonnegative valuation.
    pub fn residue(&self, x: &PadicNumber) -> Result<u64> {
        match x.valuation {
            None if x.abs_prec >= 1 => Ok(0),
            None => Err(Error::Precision("residue of an undetermined value".into())),
            Some(v) if v < 0 => Err(Error::NotIntegral(v)),
            Some(v) if v > 0 => Ok(0),
            Some(_) => Ok(self.residue.from_bigint(&x.unit)),
        }
    }

    /// Square root; requires even valuation and a square unit residue (`p` odd).
    pub fn sqrt(&self, x: &PadicNumber) -> Result<PadicNumber> {
        if self.p == 2 {
            return Err(Error::UnsupportedCharacteristic(2));
        }
        let v = x
            .valuation
            .ok_or_else(|| Error::Precision("square root of an undetermined value".into()))?;
        if v % 2 != 0 {
            return Err(Error::NotSquare);
        }
        let rel = x.relative_precision();
        let u0 = self.residue.from_bigint(&x.unit);
        let r0 = self.residue.sqrt(u0).ok_or(Error::NotSquare)?;
        // Newton iteration for y^2 = u on the unit part.
        let mut y = BigInt::from(r0);
        let mut k = 1i64;
        while k < rel {
            k = (2 * k).min(rel);
            let m = self.pk(k);
            let fy = (&y * &y - &x.unit).mod_floor(&m);
            let dinv = mod_inverse(&(BigInt::from(2) * &y), &m).expect("unit derivative");
            y = (&y - fy * dinv).mod_floor(&m);
        }
        Ok(PadicNumber {
            valuation: Some(v / 2),
            unit: y,
            abs_prec: v / 2 + rel,
        })
    }

    fn normalize(&self, val: i64, n: BigInt, abs_prec: i64) -> PadicNumber {
        if val >= abs_prec {
            return self.zero_to(abs_prec);
        }
        let n = n.mod_floor(&self.pk(abs_prec - val));
        self.from_integer_with_precision(&n, val, abs_prec)
    }
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(m))
    } else if (-&g.gcd).is_one() {
        Some((-g.x).mod_floor(m))
    } else {
        None
    }
}

impl Ring for PadicField {
    type Elem = PadicNumber;

    fn zero(&self) -> PadicNumber {
        self.zero_to(i64::MAX / 4)
    }

    fn one(&self) -> PadicNumber {
        self.p_power(0)
    }

    fn from_bigint(&self, n: &BigInt) -> PadicNumber {
        self.from_rational_exact(&BigRational::from_integer(n.clone()))
    }

    fn add(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        let abs = a.abs_prec.min(b.abs_prec);
        let (va, vb) = match (a.valuation, b.valuation) {
            (None, None) => return self.zero_to(abs),
            (None, Some(_)) => return self.truncate(b, abs),
            (Some(_), None) => return self.truncate(a, abs),
            (Some(va), Some(vb)) => (va, vb),
        };
        let vmin = va.min(vb);
        if vmin >= abs {
            return self.zero_to(abs);
        }
        let sum = &a.unit * self.pk(va - vmin) + &b.unit * self.pk(vb - vmin);
        self.normalize(vmin, sum, abs)
    }

    fn neg(&self, a: &PadicNumber) -> PadicNumber {
        match a.valuation {
            None => a.clone(),
            Some(v) => PadicNumber {
                valuation: Some(v),
                unit: (-&a.unit).mod_floor(&self.pk(a.abs_prec - v)),
                abs_prec: a.abs_prec,
            },
        }
    }

    fn mul(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        match (a.valuation, b.valuation) {
            (None, None) => self.zero_to(a.abs_prec.saturating_add(b.abs_prec)),
            (None, Some(vb)) => self.zero_to(a.abs_prec.saturating_add(vb)),
            (Some(va), None) => self.zero_to(b.abs_prec.saturating_add(va)),
            (Some(va), Some(vb)) => {
                let rel = a.relative_precision().min(b.relative_precision());
                let v = va + vb;
                PadicNumber {
                    valuation: Some(v),
                    unit: (&a.unit * &b.unit).mod_floor(&self.pk(rel)),
                    abs_prec: v + rel,
                }
            }
        }
    }

    fn is_zero(&self, a: &PadicNumber) -> bool {
        a.valuation.is_none()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn format(&self, a: &PadicNumber) -> String {
        a.to_string_with(self.p)
    }

    fn weight(&self, a: &PadicNumber) -> usize {
        a.unit.bits() as usize
    }
}

impl PadicField {
    fn truncate(&self, a: &PadicNumber, abs: i64) -> PadicNumber {
        match a.valuation {
            Some(v) if v < abs => {
                let unit = a.unit.mod_floor(&self.pk(abs - v));
                PadicNumber {
                    valuation: Some(v),
                    unit,
                    abs_prec: abs,
                }
            }
            _ => self.zero_to(abs),
        }
    }
}

impl Field for PadicField {
    fn inv(&self, a: &PadicNumber) -> Option<PadicNumber> {
        let v = a.valuation?;
        let rel = a.relative_precision();
        let unit = mod_inverse(&a.unit, &self.pk(rel))?;
        Some(PadicNumber {
            valuation: Some(-v),
            unit,
            abs_prec: rel - v,
        })
    }

    fn from_rational(&self, q: &BigRational) -> Option<PadicNumber> {
        Some(self.from_rational_exact(q))
    }
}

impl PadicNumber {
    fn to_string_with(&self, p: u64) -> String {
        match self.valuation {
            None => format!("O({p}^{})", self.abs_prec),
            Some(v) => format!("{p}^{v}*{} + O({p}^{})", self.unit, self.abs_prec),
        }
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "O(p^{})", self.abs_prec),
            Some(v) => write!(f, "p^{v}*{} + O(p^{})", self.unit, self.abs_prec),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    #[test]
    fn sqrt_two_in_q7() {
        let k = PadicField::new(7, 2).unwrap();
        let two = k.from_int(2);
        let r = k.sqrt(&two).unwrap();
        assert_eq!(r.valuation(), Some(0));
        assert!(r.unit() == &BigInt::from(10) || r.unit() == &BigInt::from(39));
        assert_eq!(k.sqrt(&k.from_int(7)), Err(Error::NotSquare));
        assert_eq!(k.sqrt(&k.from_int(3)), Err(Error::NotSquare));
    }

    #[test]
    fn valuations_add_under_multiplication() {
        let k = PadicField::new(5, 10).unwrap();
        let x = k.from_rational_exact(&rational(50, 3));
        let y = k.from_rational_exact(&rational(7, 125));
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(y.valuation(), Some(-3));
        assert_eq!(k.mul(&x, &y).valuation(), Some(-1));
        let xi = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &xi), k.one());
        assert_eq!(k.inv(&k.zero()), None);
    }

    #[test]
    fn cancellation_loses_precision() {
        let k = PadicField::new(5, 6).unwrap();
        let a = k.from_int(1);
        let b = k.from_int(1 + 5i64.pow(4));
        let d = k.sub(&b, &a);
        assert_eq!(d.valuation(), Some(4));
        assert_eq!(d.relative_precision(), 2);
        let z = k.sub(&a, &a);
        assert_eq!(z.valuation(), None);
        assert_eq!(z.absolute_precision(), 6);
    }
}
