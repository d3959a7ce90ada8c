use crate::arith::{Field, Ring};
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over a ring `R`.
///
/// Models may be singular (`Δ = 0`); such carriers are accepted by
/// [`WeierstrassModel::possibly_singular`] for reduction analysis, but the
/// group law rejects them.
#[derive(Debug, Clone)]
pub struct WeierstrassModel<R: Ring> {
    ring: R,
    a: [R::Elem; 5],
    singular: bool,
}

/// The `b`, `c` and discriminant invariants of a model.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardInvariants<E> {
    pub b2: E,
    pub b4: E,
    pub b6: E,
    pub b8: E,
    pub c4: E,
    pub c6: E,
    pub disc: E,
}

/// A change of variables `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Transform<E> {
    pub u: E,
    pub r: E,
    pub s: E,
    pub t: E,
}

impl<E: Clone> Transform<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R) -> Self {
        Self {
            u: ring.one(),
            r: ring.zero(),
            s: ring.zero(),
            t: ring.zero(),
        }
    }

    /// The transform equal to applying `self` and then `next`.
    pub fn then<R: Ring<Elem = E>>(&self, ring: &R, next: &Transform<E>) -> Self {
        let u2 = ring.square(&self.u);
        let u3 = ring.mul(&u2, &self.u);
        let t = ring.add(
            &ring.add(&self.t, &ring.mul(&ring.mul(&u2, &self.s), &next.r)),
            &ring.mul(&u3, &next.t),
        );
        Self {
            u: ring.mul(&self.u, &next.u),
            r: ring.add(&self.r, &ring.mul(&u2, &next.r)),
            s: ring.add(&self.s, &ring.mul(&self.u, &next.s)),
            t,
        }
    }

    /// Pure scaling by `u`.
    pub fn scaling<R: Ring<Elem = E>>(ring: &R, u: E) -> Self {
        Self {
            u,
            r: ring.zero(),
            s: ring.zero(),
            t: ring.zero(),
        }
    }
}

impl<R: Ring> WeierstrassModel<R> {
    /// A nonsingular model; errors with [`Error::Singular`] when `Δ = 0`.
    pub fn new(ring: R, a: [R::Elem; 5]) -> Result<Self> {
        let model = Self::possibly_singular(ring, a);
        if model.singular {
            return Err(Error::Singular);
        }
        Ok(model)
    }

    pub fn possibly_singular(ring: R, a: [R::Elem; 5]) -> Self {
        let mut model = Self {
            ring,
            a,
            singular: false,
        };
        model.singular = model.ring.is_zero(&model.invariants().disc);
        model
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coeffs(&self) -> &[R::Elem; 5] {
        &self.a
    }

    pub fn a1(&self) -> &R::Elem {
        &self.a[0]
    }

    pub fn a2(&self) -> &R::Elem {
        &self.a[1]
    }

    pub fn a3(&self) -> &R::Elem {
        &self.a[2]
    }

    pub fn a4(&self) -> &R::Elem {
        &self.a[3]
    }

    pub fn a6(&self) -> &R::Elem {
        &self.a[4]
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn invariants(&self) -> StandardInvariants<R::Elem> {
        let k = &self.ring;
        let [a1, a2, a3, a4, a6] = &self.a;
        let m = |x: &R::Elem, y: &R::Elem| k.mul(x, y);
        let a1a1 = k.square(a1);
        let b2 = k.add(&a1a1, &k.scale(4, a2));
        let b4 = k.add(&k.scale(2, a4), &m(a1, a3));
        let b6 = k.add(&k.square(a3), &k.scale(4, a6));
        let b8 = k.sum(&[
            m(&a1a1, a6),
            k.scale(4, &m(a2, a6)),
            k.neg(&m(&m(a1, a3), a4)),
            m(a2, &k.square(a3)),
            k.neg(&k.square(a4)),
        ]);
        let c4 = k.sub(&k.square(&b2), &k.scale(24, &b4));
        let c6 = k.sum(&[
            k.neg(&k.pow(&b2, 3)),
            k.scale(36, &m(&b2, &b4)),
            k.scale(-216, &b6),
        ]);
        let disc = k.sum(&[
            k.neg(&m(&k.square(&b2), &b8)),
            k.scale(-8, &k.pow(&b4, 3)),
            k.scale(-27, &k.square(&b6)),
            k.scale(9, &m(&m(&b2, &b4), &b6)),
        ]);
        debug_assert!(k.equal(&k.scale(4, &b8), &k.sub(&m(&b2, &b6), &k.square(&b4))));
        debug_assert!(k.equal(
            &k.scale(1728, &disc),
            &k.sub(&k.pow(&c4, 3), &k.square(&c6))
        ));
        StandardInvariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        }
    }

    pub fn discriminant(&self) -> R::Elem {
        self.invariants().disc
    }

    /// Apply a change of variables given `u^{-1}` instead of `u`, so that it
    /// is available over rings without division.
    pub fn transform_with_inverse(
        &self,
        u_inv: &R::Elem,
        r: &R::Elem,
        s: &R::Elem,
        t: &R::Elem,
    ) -> Self {
        let k = &self.ring;
        let [a1, a2, a3, a4, a6] = &self.a;
        let m = |x: &R::Elem, y: &R::Elem| k.mul(x, y);
        let rs = m(r, s);
        let n1 = k.add(a1, &k.scale(2, s));
        let n2 = k.sum(&[
            a2.clone(),
            k.neg(&m(s, a1)),
            k.scale(3, r),
            k.neg(&k.square(s)),
        ]);
        let n3 = k.sum(&[a3.clone(), m(r, a1), k.scale(2, t)]);
        let n4 = k.sum(&[
            a4.clone(),
            k.neg(&m(s, a3)),
            k.scale(2, &m(r, a2)),
            k.neg(&m(&k.add(t, &rs), a1)),
            k.scale(3, &k.square(r)),
            k.scale(-2, &m(s, t)),
        ]);
        let n6 = k.sum(&[
            a6.clone(),
            m(r, a4),
            m(&k.square(r), a2),
            k.pow(r, 3),
            k.neg(&m(t, a3)),
            k.neg(&k.square(t)),
            k.neg(&m(&m(r, t), a1)),
        ]);
        let ui2 = k.square(u_inv);
        let ui3 = m(&ui2, u_inv);
        let ui4 = k.square(&ui2);
        let ui6 = k.square(&ui3);
        Self {
            ring: k.clone(),
            a: [
                m(u_inv, &n1),
                m(&ui2, &n2),
                m(&ui3, &n3),
                m(&ui4, &n4),
                m(&ui6, &n6),
            ],
            singular: self.singular,
        }
    }

    /// Whether `(x, y)` satisfies the equation.
    pub fn contains(&self, x: &R::Elem, y: &R::Elem) -> bool {
        let k = &self.ring;
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs = k.sum(&[k.square(y), k.mul(&k.mul(a1, x), y), k.mul(a3, y)]);
        let rhs = k.sum(&[
            k.pow(x, 3),
            k.mul(a2, &k.square(x)),
            k.mul(a4, x),
            a6.clone(),
        ]);
        k.equal(&lhs, &rhs)
    }

    pub fn format(&self) -> String {
        let names = ["a1", "a2", "a3", "a4", "a6"];
        let parts: Vec<String> = names
            .iter()
            .zip(&self.a)
            .map(|(n, c)| format!("{n}={}", self.ring.format(c)))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

impl<F: Field> WeierstrassModel<F> {
    /// `j = c4^3 / Δ`.
    pub fn j_invariant(&self) -> Result<F::Elem> {
        let inv = self.invariants();
        let k = &self.ring;
        k.div(&k.pow(&inv.c4, 3), &inv.disc).ok_or(Error::Singular)
    }

    /// Standard change of variables; `u` must be nonzero.
    pub fn transform(&self, tr: &Transform<F::Elem>) -> Result<Self> {
        let u_inv = self.ring.inv(&tr.u).ok_or(Error::DivisionByZero)?;
        Ok(self.transform_with_inverse(&u_inv, &tr.r, &tr.s, &tr.t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, PrimeField, RationalFunctionField, Rationals};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        rational(n, 1)
    }

    fn qmodel(a: [i64; 5]) -> WeierstrassModel<Rationals> {
        WeierstrassModel::possibly_singular(Rationals, a.map(q))
    }

    #[test]
    fn invariants_of_x3_plus_1() {
        let e = qmodel([0, 0, 0, 0, 1]);
        let inv = e.invariants();
        assert_eq!(
            (
                inv.b2.clone(),
                inv.b4.clone(),
                inv.b6.clone(),
                inv.b8.clone()
            ),
            (q(0), q(0), q(4), q(0))
        );
        assert_eq!(inv.disc, q(-432));
        assert_eq!(inv.c4, q(0));
        assert_eq!(e.j_invariant().unwrap(), q(0));
    }

    #[test]
    fn cuspidal_tate_normal_form_is_singular() {
        let e = qmodel([1, 0, 0, 0, 0]);
        assert!(e.is_singular());
        assert_eq!(e.j_invariant(), Err(Error::Singular));
        assert!(WeierstrassModel::new(Rationals, [0, 0, 0, 0, 0].map(q)).is_err());
    }

    #[test]
    fn p5_family_discriminant_at_t() {
        let k = RationalFunctionField::new(PrimeField::new(5).unwrap());
        let t = k.var();
        let e = WeierstrassModel::new(
            k.clone(),
            [
                k.sub(&k.one(), &t),
                k.neg(&t),
                k.neg(&t),
                k.zero(),
                k.zero(),
            ],
        )
        .unwrap();
        let r = k.poly_ring();
        let expected = r.mul(&r.pow(&r.var(), 5), &r.from_ints(&[4, 4, 1]));
        assert_eq!(e.discriminant(), k.from_poly(expected));
    }

    #[test]
    fn transforms_scale_invariants() {
        let e = qmodel([1, -1, 3, 2, 7]);
        assert_eq!(
            e.transform(&Transform::identity(&Rationals))
                .unwrap()
                .coeffs(),
            e.coeffs()
        );
        let tr = Transform {
            u: rational(3, 2),
            r: q(2),
            s: rational(-1, 3),
            t: q(5),
        };
        let e2 = e.transform(&tr).unwrap();
        let (i1, i2) = (e.invariants(), e2.invariants());
        let u = &tr.u;
        assert_eq!(&i2.disc * u.pow(12), i1.disc);
        assert_eq!(&i2.c4 * u.pow(4), i1.c4);
        assert_eq!(&i2.c6 * u.pow(6), i1.c6);
        assert_eq!(e2.j_invariant().unwrap(), e.j_invariant().unwrap());
        let zero_u = Transform { u: q(0), ..tr };
        assert_eq!(e.transform(&zero_u).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn composition_matches_sequential_application() {
        let e = qmodel([1, -1, 3, 2, 7]);
        let t1 = Transform {
            u: q(2),
            r: q(1),
            s: q(-3),
            t: rational(1, 2),
        };
        let t2 = Transform {
            u: rational(1, 3),
            r: q(-4),
            s: q(5),
            t: q(2),
        };
        let seq = e.transform(&t1).unwrap().transform(&t2).unwrap();
        let once = e.transform(&t1.then(&Rationals, &t2)).unwrap();
        assert_eq!(seq.coeffs(), once.coeffs());
    }
}
