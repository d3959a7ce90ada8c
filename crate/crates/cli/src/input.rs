//! Curve JSON, place literals and point literals.

use serde::Deserialize;
use tamagawa::arith::{Field, Poly, PrimeField, QuotientField, RationalFunctionField, Rationals};
use tamagawa::families::{FunctionField, NumberField};
use tamagawa::literal::{parse_element, LiteralField};
use tamagawa::valuation::Place;
use tamagawa::weierstrass::{CurvePoint, WeierstrassModel};

use crate::error::CliError;

/// Upper bound on curve JSON input size.
pub const MAX_JSON_LEN: usize = 1 << 16;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSpec {
    field: FieldSpec,
    a: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp_t")]
    FunctionField { p: u64 },
    #[serde(rename = "number_field")]
    NumberField { modulus: String },
}

/// A parsed curve over one of the supported base fields.
#[derive(Debug, Clone)]
pub enum Curve {
    Rationals(WeierstrassModel<Rationals>),
    FunctionField(WeierstrassModel<FunctionField>),
    NumberField(WeierstrassModel<NumberField>),
}

fn model_from<F: LiteralField>(field: F, a: &[String]) -> Result<WeierstrassModel<F>, CliError> {
    if a.len() != 5 {
        return Err(CliError::Usage(format!(
            "expected 5 coefficients [a1, a2, a3, a4, a6], got {}",
            a.len()
        )));
    }
    let mut coeffs = Vec::with_capacity(5);
    for text in a {
        coeffs.push(parse_element(&field, text)?);
    }
    let coeffs: [F::Elem; 5] = coeffs.try_into().expect("five coefficients");
    Ok(WeierstrassModel::new(field, coeffs)?)
}

/// Parse a polynomial literal in `t` over `field`.
pub fn parse_polynomial<F: Field>(field: F, text: &str) -> Result<Poly<F::Elem>, CliError> {
    let k = RationalFunctionField::new(field);
    let x = parse_element(&k, text)?;
    if x.den().degree() != Some(0) {
        return Err(CliError::Usage(format!("{text} is not a polynomial")));
    }
    Ok(x.num().clone())
}

/// Parse `{"field": {...}, "a": [a1, a2, a3, a4, a6]}`.
pub fn parse_curve_json(text: &str) -> Result<Curve, CliError> {
    if text.len() > MAX_JSON_LEN {
        return Err(CliError::Usage("curve JSON too long".into()));
    }
    let spec: CurveSpec = serde_json::from_str(text)?;
    match spec.field {
        FieldSpec::Rationals => Ok(Curve::Rationals(model_from(Rationals, &spec.a)?)),
        FieldSpec::FunctionField { p } => {
            let k = RationalFunctionField::new(PrimeField::new(p)?);
            Ok(Curve::FunctionField(model_from(k, &spec.a)?))
        }
        FieldSpec::NumberField { modulus } => {
            let m = parse_polynomial(Rationals, &modulus)?;
            let field = QuotientField::number_field(m)?;
            Ok(Curve::NumberField(model_from(field, &spec.a)?))
        }
    }
}

/// Parse a place of the curve's base field: a prime for `Q`, `inf` or a
/// monic irreducible polynomial for `F_p(t)`.
pub fn parse_place(curve: &Curve, text: &str) -> Result<Place, CliError> {
    let text = text.trim();
    match curve {
        Curve::Rationals(_) => {
            let p: u64 = text
                .parse()
                .map_err(|_| CliError::Usage(format!("place {text:?} is not a prime number")))?;
            Ok(Place::prime(p)?)
        }
        Curve::FunctionField(model) => {
            let field = *model.ring().base();
            let p = field.modulus();
            if text == "inf" {
                return Ok(Place::infinity(p)?);
            }
            let poly = parse_polynomial(field, text)?;
            Ok(Place::finite(p, poly)?)
        }
        Curve::NumberField(_) => Err(CliError::Usage(
            "places of number fields are not supported".into(),
        )),
    }
}

/// Split `text` at commas outside parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Parse `x,y` (or `inf`) as a point of `model`.
pub fn parse_point<F: LiteralField>(
    model: &WeierstrassModel<F>,
    text: &str,
) -> Result<CurvePoint<F::Elem>, CliError> {
    if text.trim() == "inf" {
        return Ok(CurvePoint::Infinity);
    }
    let parts = split_top_level(text);
    let [x, y] = parts.as_slice() else {
        return Err(CliError::Usage(format!(
            "point {text:?} is not of the form x,y"
        )));
    };
    let field = model.ring();
    let x = parse_element(field, x)?;
    let y = parse_element(field, y)?;
    Ok(model.point(x, y)?)
}
