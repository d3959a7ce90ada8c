//! Entry points shared by the fuzz targets and the corpus replay test. Each
//! accepts arbitrary bytes and panics only when a parser invariant fails.

use tamagawa::arith::{PrimeField, QuotientField, RationalFunctionField, Rationals, Ring};
use tamagawa::literal::{parse_element, LiteralField};
use tamagawa::reduction::tate_reduce;
use tamagawa::valuation::{FunctionFieldPlace, RationalPrime};
use tamagawa::weierstrass::{CurvePoint, WeierstrassModel};

use crate::input::{parse_curve_json, parse_place, parse_point, parse_polynomial, Curve};

/// Modulus of the number field used for element literals.
const NUMBER_FIELD_MODULUS: &str = "t^3+2t^2-t-1";

fn round_trip<F: LiteralField>(field: &F, text: &str) {
    if let Ok(x) = parse_element(field, text) {
        let printed = field.format(&x);
        let again = parse_element(field, &printed)
            .unwrap_or_else(|e| panic!("printed form {printed:?} does not parse: {e}"));
        assert!(
            field.equal(&x, &again),
            "{text:?} -> {printed:?} changed value"
        );
    }
}

/// First byte picks the field, the rest is the literal.
pub fn element_literal(data: &[u8]) {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    match selector % 5 {
        0 => round_trip(&Rationals, text),
        1 => round_trip(&PrimeField::new(5).unwrap(), text),
        2 => round_trip(
            &RationalFunctionField::new(PrimeField::new(7).unwrap()),
            text,
        ),
        3 => round_trip(
            &RationalFunctionField::new(PrimeField::new(11).unwrap()),
            text,
        ),
        _ => {
            let m = parse_polynomial(Rationals, NUMBER_FIELD_MODULUS).unwrap();
            round_trip(&QuotientField::number_field(m).unwrap(), text);
        }
    }
}

fn check_nonsingular<F: Ring>(model: &WeierstrassModel<F>) {
    assert!(!model.is_singular());
    assert!(!model.ring().is_zero(&model.discriminant()));
}

pub fn curve_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_curve_json(text) {
        Ok(Curve::Rationals(m)) => check_nonsingular(&m),
        Ok(Curve::FunctionField(m)) => check_nonsingular(&m),
        Ok(Curve::NumberField(m)) => check_nonsingular(&m),
        Err(_) => {}
    }
}

fn split_input(data: &[u8]) -> Option<(&str, &str)> {
    std::str::from_utf8(data).ok()?.split_once('\n')
}

/// Curve JSON, a newline, then a place literal. Parsed places are fed to the
/// reduction algorithm, which may fail but must not panic.
pub fn place_literal(data: &[u8]) {
    let Some((curve, place)) = split_input(data) else {
        return;
    };
    let Ok(curve) = parse_curve_json(curve) else {
        return;
    };
    let Ok(place) = parse_place(&curve, place) else {
        return;
    };
    match &curve {
        Curve::Rationals(m) => {
            let ctx = RationalPrime::for_place(&place).expect("place of Q");
            let _ = tate_reduce(m, &ctx);
        }
        Curve::FunctionField(m) => {
            let ctx = FunctionFieldPlace::new(m.ring().clone(), place).expect("place of F_p(t)");
            let _ = tate_reduce(m, &ctx);
        }
        Curve::NumberField(_) => panic!("number field places are not parsed"),
    }
}

fn check_point<F: LiteralField>(model: &WeierstrassModel<F>, text: &str) {
    if let Ok(CurvePoint::Affine(x, y)) = parse_point(model, text) {
        assert!(model.contains(&x, &y));
    }
}

/// Curve JSON, a newline, then a point literal `x,y`.
pub fn point_literal(data: &[u8]) {
    let Some((curve, point)) = split_input(data) else {
        return;
    };
    match parse_curve_json(curve) {
        Ok(Curve::Rationals(m)) => check_point(&m, point),
        Ok(Curve::FunctionField(m)) => check_point(&m, point),
        Ok(Curve::NumberField(m)) => check_point(&m, point),
        Err(_) => {}
    }
}
