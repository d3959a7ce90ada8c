use num_rational::BigRational;

use super::padic::{PadicField, PadicNumber};
use super::place::{valuation_rational, Place};
use crate::arith::{
    Field, Poly, PolyRing, PrimeField, QuotientField, RatFunc, RationalFunctionField, Rationals,
    Ring,
};
use crate::error::{Error, Result};

/// Residue fields are always presented as `F_p[x]/(m)`; a prime residue
/// field uses `m = x`.
pub type ResidueField = QuotientField<PrimeField>;

/// Digits of relative precision a truncated p-adic value must carry before a
/// valuation decision is made from it.
pub const DECISION_MARGIN: i64 = 5;

/// A field together with one of its discrete valuations: uniformizer,
/// normalized valuation and reduction to the residue field.
pub trait LocalContext {
    type F: Field;

    fn field(&self) -> &Self::F;

    fn place_label(&self) -> String;

    /// Normalized valuation, `None` for zero. Errors when the value cannot be
    /// decided (truncated inputs).
    fn valuation(&self, x: &<Self::F as crate::arith::Ring>::Elem) -> Result<Option<i64>>;

    fn uniformizer(&self) -> <Self::F as crate::arith::Ring>::Elem;

    fn residue_field(&self) -> &ResidueField;

    /// Image in the residue field; errors on negative valuation.
    fn residue(&self, x: &<Self::F as crate::arith::Ring>::Elem) -> Result<Poly<u64>>;

    fn residue_characteristic(&self) -> u64 {
        self.residue_field().characteristic()
    }

    /// `pi^k` for any integer `k`.
    fn uniformizer_pow(&self, k: i64) -> <Self::F as crate::arith::Ring>::Elem {
        self.field()
            .pow_signed(&self.uniformizer(), k)
            .expect("uniformizer is nonzero")
    }
}

/// `Q` at a prime `p`.
#[derive(Debug, Clone)]
pub struct RationalPrime {
    p: u64,
    residue: ResidueField,
}

impl RationalPrime {
    pub fn new(p: u64) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        Ok(Self {
            p,
            residue: QuotientField::prime(fp),
        })
    }

    pub fn for_place(place: &Place) -> Result<Self> {
        match place {
            Place::Prime(p) => Self::new(*p),
            other => Err(Error::PlaceMismatch(format!(
                "place {other} is not a place of Q"
            ))),
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }
}

impl LocalContext for RationalPrime {
    type F = Rationals;

    fn field(&self) -> &Rationals {
        &Rationals
    }

    fn place_label(&self) -> String {
        self.p.to_string()
    }

    fn valuation(&self, x: &BigRational) -> Result<Option<i64>> {
        Ok(valuation_rational(x, self.p))
    }

    fn uniformizer(&self) -> BigRational {
        BigRational::from_integer(self.p.into())
    }

    fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    fn residue(&self, x: &BigRational) -> Result<Poly<u64>> {
        match valuation_rational(x, self.p) {
            None => Ok(Poly::zero()),
            Some(v) if v < 0 => Err(Error::NotIntegral(v)),
            Some(v) if v > 0 => Ok(Poly::zero()),
            Some(_) => {
                let fp = *self.residue.base();
                let n = fp.from_bigint(x.numer());
                let d = fp.from_bigint(x.denom());
                let r = fp.mul(&n, &fp.inv(&d).expect("unit denominator"));
                Ok(self.residue.embed(r))
            }
        }
    }
}

/// `F_p(t)` at a finite place or at infinity.
#[derive(Debug, Clone)]
pub struct FunctionFieldPlace {
    field: RationalFunctionField<PrimeField>,
    place: Place,
    residue: ResidueField,
    uniformizer: RatFunc<u64>,
}

impl FunctionFieldPlace {
    pub fn new(field: RationalFunctionField<PrimeField>, place: Place) -> Result<Self> {
        let fp = *field.base();
        let p = fp.modulus();
        let ring = PolyRing::new(fp);
        let (residue, uniformizer) = match &place {
            Place::Prime(_) => {
                return Err(Error::PlaceMismatch(format!(
                    "place {place} of Q used with F_{p}(t)"
                )))
            }
            Place::Finite { p: q, .. } | Place::Infinity { p: q } if *q != p => {
                return Err(Error::PlaceMismatch(format!(
                    "place over F_{q} used with F_{p}(t)"
                )))
            }
            Place::Finite { poly, .. } => (
                QuotientField::new_unchecked(fp, poly.clone())?,
                field.from_poly(poly.clone()),
            ),
            Place::Infinity { .. } => (
                QuotientField::prime(fp),
                field.normalize(&ring.one(), &ring.var())?,
            ),
        };
        Ok(Self {
            field,
            place,
            residue,
            uniformizer,
        })
    }

    pub fn place(&self) -> &Place {
        &self.place
    }
}

impl LocalContext for FunctionFieldPlace {
    type F = RationalFunctionField<PrimeField>;

    fn field(&self) -> &Self::F {
        &self.field
    }

    fn place_label(&self) -> String {
        self.place.to_string()
    }

    fn valuation(&self, x: &RatFunc<u64>) -> Result<Option<i64>> {
        self.place.valuation_ratfunc(x)
    }

    fn uniformizer(&self) -> RatFunc<u64> {
        self.uniformizer.clone()
    }

    fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    fn residue(&self, x: &RatFunc<u64>) -> Result<Poly<u64>> {
        match self.valuation(x)? {
            None => return Ok(Poly::zero()),
            Some(v) if v < 0 => return Err(Error::NotIntegral(v)),
            Some(v) if v > 0 => return Ok(Poly::zero()),
            Some(_) => {}
        }
        match &self.place {
            Place::Infinity { .. } => {
                // deg num == deg den and den is monic.
                let lc = *x.num().leading().expect("nonzero");
                Ok(self.residue.embed(lc))
            }
            _ => {
                let n = self.residue.reduce(x.num());
                let d = self.residue.reduce(x.den());
                Ok(self.residue.mul(&n, &self.residue.inverse(&d)?))
            }
        }
    }
}

/// Truncated `Q_p`. Valuation decisions require [`DECISION_MARGIN`] digits of
/// relative precision; anything less is reported as a precision error.
#[derive(Debug, Clone)]
pub struct PadicContext {
    field: PadicField,
    residue: ResidueField,
}

impl PadicContext {
    pub fn new(field: PadicField) -> Result<Self> {
        let fp = PrimeField::new(field.prime())?;
        Ok(Self {
            field,
            residue: QuotientField::prime(fp),
        })
    }
}

/// Absolute precision at or above which a zero value counts as exact.
const EXACT_ZERO: i64 = i64::MAX / 16;

impl LocalContext for PadicContext {
    type F = PadicField;

    fn field(&self) -> &PadicField {
        &self.field
    }

    fn place_label(&self) -> String {
        self.field.prime().to_string()
    }

    fn valuation(&self, x: &PadicNumber) -> Result<Option<i64>> {
        match x.valuation() {
            None if x.absolute_precision() >= EXACT_ZERO => Ok(None),
            None => Err(Error::Precision(format!(
                "value is zero modulo p^{} and cannot be decided",
                x.absolute_precision()
            ))),
            Some(_) if x.relative_precision() < DECISION_MARGIN => Err(Error::Precision(format!(
                "only {} significant digits (need {DECISION_MARGIN})",
                x.relative_precision()
            ))),
            Some(v) => Ok(Some(v)),
        }
    }

    fn uniformizer(&self) -> PadicNumber {
        self.field.p_power(1)
    }

    fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    fn residue(&self, x: &PadicNumber) -> Result<Poly<u64>> {
        self.valuation(x)?;
        Ok(self.residue.embed(self.field.residue(x)?))
    }
}
