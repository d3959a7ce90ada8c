//! The raw form of `X_1(11)` and the curves `E(r, s)` it parametrizes.

use crate::arith::{BivarPoly, BivariateRing, Field, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::weierstrass::WeierstrassModel;

/// A pair `(r, s)` on `F11(r, s) = 0` away from the degenerate locus.
#[derive(Debug, Clone, PartialEq)]
pub struct RawForm11Point<E> {
    pub r: E,
    pub s: E,
}

/// `F11(r, s) = r^2 - r s^3 + 3 r s^2 - 4 r s + s`.
pub fn f11_eval<R: Ring>(ring: &R, r: &R::Elem, s: &R::Elem) -> R::Elem {
    let rs = ring.mul(r, s);
    ring.sum(&[
        ring.square(r),
        ring.neg(&ring.mul(&rs, &ring.square(s))),
        ring.scale(3, &ring.mul(&rs, s)),
        ring.scale(-4, &rs),
        s.clone(),
    ])
}

/// The factor `f(r, s)` of the discriminant of `E(r, s)`.
pub fn f_rs_eval<R: Ring>(ring: &R, r: &R::Elem, s: &R::Elem) -> R::Elem {
    let r2 = ring.square(r);
    let s2 = ring.square(s);
    let s3 = ring.mul(&s2, s);
    let rs = ring.mul(r, s);
    ring.sum(&[
        ring.mul(&r2, &s3),
        ring.scale(-8, &ring.mul(&r2, &s2)),
        ring.scale(-2, &ring.mul(r, &s3)),
        ring.scale(16, &ring.mul(&r2, s)),
        ring.scale(5, &ring.mul(r, &s2)),
        s3.clone(),
        ring.scale(-20, &rs),
        ring.scale(3, &s2),
        ring.scale(3, s),
        ring.one(),
    ])
}

/// `f(r, s)` as an element of `Q[r, s]`.
pub fn f_rs() -> BivarPoly {
    let ring = BivariateRing;
    f_rs_eval(&ring, &ring.r(), &ring.s())
}

/// Tate normal form `y^2 + (1 - c) xy - b y = x^3 - b x^2`; `(0, 0)` lies on it.
pub fn tate_normal_form<R: Ring>(ring: &R, b: &R::Elem, c: &R::Elem) -> WeierstrassModel<R> {
    WeierstrassModel::possibly_singular(
        ring.clone(),
        [
            ring.sub(&ring.one(), c),
            ring.neg(b),
            ring.neg(b),
            ring.zero(),
            ring.zero(),
        ],
    )
}

/// `b = r s (r - 1)` and `c = s (r - 1)`.
pub fn e_rs_parameters<R: Ring>(ring: &R, r: &R::Elem, s: &R::Elem) -> (R::Elem, R::Elem) {
    let c = ring.mul(s, &ring.sub(r, &ring.one()));
    (ring.mul(r, &c), c)
}

/// `E(r, s)` without any check, over any ring (used symbolically).
pub fn e_rs_model<R: Ring>(ring: &R, r: &R::Elem, s: &R::Elem) -> WeierstrassModel<R> {
    let (b, c) = e_rs_parameters(ring, r, s);
    tate_normal_form(ring, &b, &c)
}

/// `E(r, s)` for a point on `F11 = 0`; rejects off-curve and degenerate
/// parameters.
pub fn build_e_rs<F: Field>(
    field: &F,
    point: &RawForm11Point<F::Elem>,
) -> Result<WeierstrassModel<F>> {
    let RawForm11Point { r, s } = point;
    if !field.is_zero(&f11_eval(field, r, s)) {
        return Err(Error::InvalidInput(format!(
            "({}, {}) is not on F11 = 0",
            field.format(r),
            field.format(s)
        )));
    }
    let model = e_rs_model(field, r, s);
    if model.is_singular() {
        return Err(Error::Degenerate(format!(
            "E(r, s) is singular at r = {}, s = {}",
            field.format(r),
            field.format(s)
        )));
    }
    Ok(model)
}

/// All non-degenerate points of `F11 = 0` over a prime field, in
/// lexicographic order.
pub fn search_raw11_points(field: &PrimeField) -> Vec<RawForm11Point<u64>> {
    let mut out = Vec::new();
    for r in field.elements() {
        for s in field.elements() {
            if !field.is_zero(&f11_eval(field, &r, &s)) {
                continue;
            }
            let point = RawForm11Point { r, s };
            if build_e_rs(field, &point).is_ok() {
                out.push(point);
            }
        }
    }
    out
}
