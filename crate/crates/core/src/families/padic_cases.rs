//! Points of `F11 = 0` over truncated `Q_p` realizing each sign pattern of
//! `(v(r), v(s))`, found by Newton polygons and Hensel lifting.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::raw11::{f11_eval, RawForm11Point};
use crate::arith::{Poly, PolyRing, Rationals, Ring};
use crate::error::{Error, Result};
use crate::valuation::{
    hensel_root, newton_polygon, valuation_rational, NewtonPolygon, PadicField, PadicNumber,
};

/// Sign patterns of `(v(r), v(s))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValuationCase {
    /// `v(r) > 0`, `v(s) < 0`.
    A,
    /// `v(r) > 0`, `v(s) >= 0`.
    B,
    /// `v(r) < 0`, `v(s) < 0`.
    C,
    /// `v(r) < 0`, `v(s) >= 0`.
    D,
}

impl ValuationCase {
    pub const ALL: [ValuationCase; 4] = [Self::A, Self::B, Self::C, Self::D];
}

impl fmt::Display for ValuationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
        };
        f.write_str(c)
    }
}

/// A lifted point with the exact `s` it was built from.
#[derive(Debug, Clone)]
pub struct PadicPoint {
    pub field: PadicField,
    pub point: RawForm11Point<PadicNumber>,
    pub s_exact: BigRational,
    /// `v(F11(r, s))` as computed at working precision.
    pub residual: i64,
}

/// Why no root `r` with `v(r) < 0` exists: the Newton polygon of `F11` as a
/// polynomial in `r` has no segment of positive slope.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibilityCertificate {
    pub s_exact: BigRational,
    pub points: Vec<(u64, Option<i64>)>,
    pub polygon: NewtonPolygon,
}

#[derive(Debug, Clone)]
pub enum Realization {
    Point(Box<PadicPoint>),
    Infeasible(InfeasibilityCertificate),
}

/// Working precision for pole order `m`: enough for the `11m` discriminant
/// digits plus margin.
pub fn working_precision(m: u32) -> u32 {
    11 * m + 30
}

/// `F11` as a polynomial in `r` with `s` fixed: `r^2 + (-s^3 + 3s^2 - 4s) r + s`.
fn f11_in_r(s: &BigRational) -> Poly<BigRational> {
    let q = Rationals;
    let lin = q.sum(&[
        q.neg(&q.pow(s, 3)),
        q.scale(3, &q.square(s)),
        q.scale(-4, s),
    ]);
    PolyRing::new(q).from_coeffs(vec![s.clone(), lin, q.one()])
}

fn p_power(p: u64, e: i64) -> BigRational {
    let m = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(m)
    } else {
        BigRational::new(BigInt::one(), m)
    }
}

fn newton_of(g: &Poly<BigRational>, p: u64) -> Result<(Vec<(u64, Option<i64>)>, NewtonPolygon)> {
    let points: Vec<(u64, Option<i64>)> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| (i as u64, valuation_rational(c, p)))
        .collect();
    let polygon = newton_polygon(&points)?;
    Ok((points, polygon))
}

/// Realize a case at prime `p >= 5` with pole/zero order `m >= 1`.
///
/// Cases A and C use `s = p^{-m}`, whose roots have valuations `2m` and
/// `-3m`; case B uses `s = -p^{2m}`, with both roots of valuation `m`; case
/// D returns the Newton polygon certificate for `s = p^m`.
pub fn realize_padic_case(case: ValuationCase, p: u64, m: u32) -> Result<Realization> {
    if p < 5 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if m == 0 {
        return Err(Error::InvalidInput("order m must be positive".into()));
    }
    let mi = i64::from(m);
    let (s_exact, shift) = match case {
        ValuationCase::A => (p_power(p, -mi), 2 * mi),
        ValuationCase::C => (p_power(p, -mi), -3 * mi),
        ValuationCase::B => (-p_power(p, 2 * mi), mi),
        ValuationCase::D => {
            let s_exact = p_power(p, mi);
            let (points, polygon) = newton_of(&f11_in_r(&s_exact), p)?;
            let negative = polygon
                .root_valuations()
                .iter()
                .any(|(v, _)| *v < num_rational::Ratio::from(0));
            if negative {
                return Err(Error::Degenerate(
                    "case D admits a root with v(r) < 0".into(),
                ));
            }
            return Ok(Realization::Infeasible(InfeasibilityCertificate {
                s_exact,
                points,
                polygon,
            }));
        }
    };
    let g = f11_in_r(&s_exact);
    let (_, polygon) = newton_of(&g, p)?;
    let expected = num_rational::Ratio::from(shift);
    if !polygon
        .root_valuations()
        .iter()
        .any(|(v, _)| *v == expected)
    {
        return Err(Error::Degenerate(format!(
            "no root of valuation {shift} for case {case}"
        )));
    }
    let precision = working_precision(m);
    let r = hensel_root(&g, p, shift, 1, precision)?;
    let field = PadicField::new(p, i64::from(precision))?;
    let s = field.from_rational_exact(&s_exact);
    let residual_value = f11_eval(&field, &r, &s);
    let residual = residual_value
        .valuation()
        .unwrap_or(residual_value.absolute_precision());
    Ok(Realization::Point(Box::new(PadicPoint {
        field,
        point: RawForm11Point { r, s },
        s_exact,
        residual,
    })))
}
