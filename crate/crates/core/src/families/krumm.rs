//! Fixture curves over cubic and quartic number fields with a rational
//! point `(0, 0)` of order 13 and 17.

use num_rational::BigRational;

use crate::arith::{Poly, QuotientField, Rationals, Ring};
use crate::error::{Error, Result};
use crate::weierstrass::{CurvePoint, WeierstrassModel};

pub type NumberField = QuotientField<Rationals>;

pub const FIXTURE_LABELS: [&str; 2] = ["krumm-13-cubic", "krumm-17-quartic"];

#[derive(Debug, Clone)]
pub struct FixtureCurve {
    pub label: &'static str,
    pub field: NumberField,
    pub model: WeierstrassModel<NumberField>,
    pub point: CurvePoint<Poly<BigRational>>,
    pub expected_order: u64,
}

struct FixtureData {
    label: &'static str,
    /// Coefficients in increasing degree.
    modulus: &'static [i64],
    a1: &'static [i64],
    a2: &'static [i64],
    a3: &'static [i64],
    expected_order: u64,
}

const FIXTURES: [FixtureData; 2] = [
    // y^2 + (-2t^2+2)xy + (-9t^2+2t+4)y = x^3 + (-9t^2+2t+4)x^2 over
    // Q[t]/(t^3+2t^2-t-1).
    FixtureData {
        label: "krumm-13-cubic",
        modulus: &[-1, -1, 2, 1],
        a1: &[2, 0, -2],
        a2: &[4, 2, -9],
        a3: &[4, 2, -9],
        expected_order: 13,
    },
    // y^2 + (-6t^3-7t^2+4t+4)xy + (-155t^3-170t^2+109t+74)y
    //   = x^3 + (-155t^3-170t^2+109t+74)x^2 over Q[t]/(t^4-t^3-3t^2+t+1).
    FixtureData {
        label: "krumm-17-quartic",
        modulus: &[1, 1, -3, -1, 1],
        a1: &[4, 4, -7, -6],
        a2: &[74, 109, -170, -155],
        a3: &[74, 109, -170, -155],
        expected_order: 17,
    },
];

pub fn krumm_fixture(label: &str) -> Result<FixtureCurve> {
    let data = FIXTURES
        .iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::UnknownFixture(label.to_string()))?;
    let base = crate::arith::PolyRing::new(Rationals);
    let field = QuotientField::number_field(base.from_ints(data.modulus))?;
    let elem = |c: &[i64]| field.reduce(&base.from_ints(c));
    let model = WeierstrassModel::new(
        field.clone(),
        [
            elem(data.a1),
            elem(data.a2),
            elem(data.a3),
            field.zero(),
            field.zero(),
        ],
    )?;
    let point = model.point(field.zero(), field.zero())?;
    Ok(FixtureCurve {
        label: data.label,
        field,
        model,
        point,
        expected_order: data.expected_order,
    })
}
