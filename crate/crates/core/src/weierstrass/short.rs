use super::model::{Transform, WeierstrassModel};
use crate::arith::{Field, Ring};
use crate::error::{Error, Result};

impl<F: Field> WeierstrassModel<F> {
    /// `y^2 = x^3 + A x + B` with `A = -27 c4`, `B = -54 c6`, together with
    /// the transform that produces it. Its discriminant is `6^12 Δ`.
    pub fn to_short_form(&self) -> Result<(Self, Transform<F::Elem>)> {
        let k = self.ring();
        let ch = k.characteristic();
        if ch == 2 || ch == 3 {
            return Err(Error::UnsupportedCharacteristic(ch));
        }
        let inv = self.invariants();
        let half = k.inv(&k.from_int(2)).expect("char is not 2");
        let r = k.neg(&k.mul(&inv.b2, &k.inv(&k.from_int(12)).expect("char is not 2, 3")));
        let s = k.neg(&k.mul(self.a1(), &half));
        let t = k.neg(&k.mul(&k.add(self.a3(), &k.mul(&r, self.a1())), &half));
        let tr = Transform {
            u: k.inv(&k.from_int(6)).expect("char is not 2, 3"),
            r,
            s,
            t,
        };
        let short = self.transform(&tr)?;
        debug_assert!(short.coeffs()[..3].iter().all(|c| k.is_zero(c)));
        Ok((short, tr))
    }

    pub fn is_short_form(&self) -> bool {
        let k = self.ring();
        k.is_zero(self.a1()) && k.is_zero(self.a2()) && k.is_zero(self.a3())
    }
}

/// Coefficient of `x^{p-1}` in `(x^3 + A x + B)^{(p-1)/2}` for a short model
/// in characteristic `p >= 5`.
pub fn hasse_invariant<R: Ring>(model: &WeierstrassModel<R>) -> Result<R::Elem> {
    let k = model.ring();
    let p = k.characteristic();
    if p < 5 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if !(k.is_zero(model.a1()) && k.is_zero(model.a2()) && k.is_zero(model.a3())) {
        return Err(Error::InvalidInput(
            "Hasse invariant needs a model y^2 = x^3 + Ax + B".into(),
        ));
    }
    let p = usize::try_from(p).map_err(|_| Error::UnsupportedCharacteristic(p))?;
    // Only coefficients up to x^{p-1} matter.
    let cubic = [model.a6().clone(), model.a4().clone(), k.zero(), k.one()];
    let mut acc = vec![k.one()];
    for _ in 0..(p - 1) / 2 {
        let mut next = vec![k.zero(); (acc.len() + 3).min(p)];
        for (i, a) in acc.iter().enumerate() {
            for (j, c) in cubic.iter().enumerate() {
                if i + j < p && !k.is_zero(c) {
                    next[i + j] = k.add(&next[i + j], &k.mul(a, c));
                }
            }
        }
        acc = next;
    }
    Ok(acc.get(p - 1).cloned().unwrap_or_else(|| k.zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, PrimeField, RationalFunctionField, Rationals};

    #[test]
    fn hasse_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let m = |k: PrimeField, a4: u64, a6: u64| {
            WeierstrassModel::possibly_singular(k, [0, 0, 0, a4, a6])
        };
        assert_eq!(hasse_invariant(&m(f5, 1, 0)).unwrap(), 2);
        assert_eq!(hasse_invariant(&m(f5, 0, 1)).unwrap(), 0);
        assert_eq!(hasse_invariant(&m(f7, 0, 1)).unwrap(), 3);
        let long = WeierstrassModel::possibly_singular(f5, [1, 0, 0, 0, 1]);
        assert!(matches!(
            hasse_invariant(&long),
            Err(Error::InvalidInput(_))
        ));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            hasse_invariant(&m(f3, 1, 1)),
            Err(Error::UnsupportedCharacteristic(3))
        );
    }

    #[test]
    fn short_form_of_x3_plus_1() {
        let e = WeierstrassModel::new(Rationals, [0, 0, 0, 0, 1].map(|n| rational(n, 1))).unwrap();
        let (s, tr) = e.to_short_form().unwrap();
        let inv = e.invariants();
        assert_eq!(s.a4(), &(&inv.c4 * rational(-27, 1)));
        assert_eq!(s.a6(), &(&inv.c6 * rational(-54, 1)));
        assert_eq!(s.j_invariant().unwrap(), rational(0, 1));
        assert_eq!(e.transform(&tr).unwrap().coeffs(), s.coeffs());
        assert_eq!(s.discriminant(), inv.disc * rational(6, 1).pow(12));
    }

    #[test]
    fn short_form_preserves_j_over_function_field() {
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
        let (s, _) = e.to_short_form().unwrap();
        assert!(s.is_short_form());
        assert_eq!(s.j_invariant().unwrap(), e.j_invariant().unwrap());
        let f2 = PrimeField::new(2).unwrap();
        let e2 = WeierstrassModel::possibly_singular(f2, [1, 0, 0, 0, 1]);
        assert_eq!(
            e2.to_short_form().unwrap_err(),
            Error::UnsupportedCharacteristic(2)
        );
    }
}
