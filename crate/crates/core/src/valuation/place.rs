use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{is_irreducible_fp, Field, Poly, PolyRing, PrimeField, RatFunc, Ring};
use crate::error::{Error, Result};

/// A non-archimedean place of `Q` or of `F_p(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// The `p`-adic place of `Q`.
    Prime(u64),
    /// The place of `F_p(t)` attached to a monic irreducible polynomial.
    Finite { p: u64, poly: Poly<u64> },
    /// The degree place of `F_p(t)`, with uniformizer `1/t`.
    Infinity { p: u64 },
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p)?;
        Ok(Place::Prime(p))
    }

    /// Place of `F_p(t)` at a monic irreducible polynomial.
    pub fn finite(p: u64, poly: Poly<u64>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let ring = PolyRing::new(field);
        if !ring.is_monic(&poly) || !is_irreducible_fp(&field, &poly)? {
            return Err(Error::InvalidInput(format!(
                "{} is not monic irreducible over F_{p}",
                ring.format(&poly)
            )));
        }
        Ok(Place::Finite { p, poly })
    }

    pub fn infinity(p: u64) -> Result<Self> {
        PrimeField::new(p)?;
        Ok(Place::Infinity { p })
    }

    /// Residue degree over the prime field.
    pub fn degree(&self) -> usize {
        match self {
            Place::Prime(_) | Place::Infinity { .. } => 1,
            Place::Finite { poly, .. } => poly.degree().expect("nonconstant"),
        }
    }

    pub fn residue_characteristic(&self) -> u64 {
        match self {
            Place::Prime(p) | Place::Finite { p, .. } | Place::Infinity { p } => *p,
        }
    }

    pub fn is_function_field_place(&self) -> bool {
        !matches!(self, Place::Prime(_))
    }

    /// Normalized valuation of a rational number; `None` is `+infinity`.
    pub fn valuation_rational(&self, x: &BigRational) -> Result<Option<i64>> {
        match self {
            Place::Prime(p) => Ok(valuation_rational(x, *p)),
            _ => Err(Error::PlaceMismatch(format!(
                "rational number at function field place {self}"
            ))),
        }
    }

    /// Normalized valuation of an element of `F_p(t)`; `None` is `+infinity`.
    pub fn valuation_ratfunc(&self, x: &RatFunc<u64>) -> Result<Option<i64>> {
        match self {
            Place::Prime(_) => Err(Error::PlaceMismatch(format!(
                "rational function at place {self} of Q"
            ))),
            Place::Infinity { .. } => Ok(x.degree_gap()),
            Place::Finite { p, poly } => {
                if x.num().is_zero() {
                    return Ok(None);
                }
                let ring = PolyRing::new(PrimeField::new(*p)?);
                let vn = poly_valuation(&ring, x.num(), poly);
                let vd = poly_valuation(&ring, x.den(), poly);
                Ok(Some(vn - vd))
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity { .. } => write!(f, "inf"),
            Place::Finite { p, poly } => {
                let ring = PolyRing::new(PrimeField::new(*p).map_err(|_| fmt::Error)?);
                write!(f, "{}", ring.format(poly))
            }
        }
    }
}

/// `v_p(n)` for a nonzero integer.
pub fn valuation_int(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

pub fn valuation_rational(x: &BigRational, p: u64) -> Option<i64> {
    let vn = valuation_int(x.numer(), p)?;
    let vd = valuation_int(x.denom(), p).expect("nonzero denominator");
    Some(vn - vd)
}

/// Multiplicity of `pi` in the nonzero polynomial `f`.
pub(crate) fn poly_valuation<F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    pi: &Poly<F::Elem>,
) -> i64 {
    let mut f = f.clone();
    let mut v = 0;
    loop {
        let (q, r) = ring.div_rem(&f, pi).expect("nonzero place polynomial");
        if !r.is_zero() {
            return v;
        }
        f = q;
        v += 1;
    }
}
