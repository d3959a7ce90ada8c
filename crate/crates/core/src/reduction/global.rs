use num_bigint::BigUint;
use num_traits::One;

use super::local::{tate_reduce, ReductionResult};
use crate::arith::{factor_fp, Poly, PrimeField, RationalFunctionField};
use crate::error::{Error, Result};
use crate::valuation::{FunctionFieldPlace, Place};
use crate::weierstrass::WeierstrassModel;

type FunctionField = RationalFunctionField<PrimeField>;

/// Reduction data at one bad place.
#[derive(Debug, Clone)]
pub struct PlaceReduction {
    pub place: Place,
    pub result: ReductionResult<FunctionField>,
}

/// `c(E/F_p(t))` with its per-place factors.
#[derive(Debug, Clone)]
pub struct GlobalTamagawa {
    pub c: BigUint,
    pub places: Vec<PlaceReduction>,
}

/// Finite places dividing a discriminant numerator or denominator or a
/// coefficient denominator, followed by the infinite place.
fn candidate_places(model: &WeierstrassModel<FunctionField>) -> Result<Vec<Place>> {
    let field = *model.ring().base();
    let p = field.modulus();
    let disc = model.discriminant();
    let mut polys: Vec<Poly<u64>> = Vec::new();
    let sources = [disc.num(), disc.den()]
        .into_iter()
        .chain(model.coeffs().iter().map(|a| a.den()));
    for poly in sources {
        if poly.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (factor, _) in factor_fp(&field, poly)?.factors {
            if !polys.contains(&factor) {
                polys.push(factor);
            }
        }
    }
    polys.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    let mut places = polys
        .into_iter()
        .map(|poly| Place::Finite { p, poly })
        .collect::<Vec<_>>();
    places.push(Place::Infinity { p });
    Ok(places)
}

fn reduce_candidates(model: &WeierstrassModel<FunctionField>) -> Result<Vec<PlaceReduction>> {
    if model.is_singular() {
        return Err(Error::Singular);
    }
    let mut out = Vec::new();
    for place in candidate_places(model)? {
        let ctx = FunctionFieldPlace::new(model.ring().clone(), place.clone())?;
        let result = tate_reduce(model, &ctx)?;
        if result.vdisc_min > 0 {
            out.push(PlaceReduction { place, result });
        }
    }
    Ok(out)
}

/// Every place of `F_p(t)` where the minimal model has `v(Δ_min) > 0`.
pub fn bad_places(model: &WeierstrassModel<FunctionField>) -> Result<Vec<Place>> {
    Ok(reduce_candidates(model)?
        .into_iter()
        .map(|r| r.place)
        .collect())
}

/// Product of the local Tamagawa numbers over all places of `F_p(t)`.
pub fn global_tamagawa(model: &WeierstrassModel<FunctionField>) -> Result<GlobalTamagawa> {
    let places = reduce_candidates(model)?;
    let c = places
        .iter()
        .fold(BigUint::one(), |acc, r| acc * r.result.tamagawa);
    Ok(GlobalTamagawa { c, places })
}
