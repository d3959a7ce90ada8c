use super::model::WeierstrassModel;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Default search bound for [`WeierstrassModel::point_order`].
pub const DEFAULT_ORDER_BOUND: u64 = 200;

#[derive(Debug, Clone, PartialEq)]
pub enum CurvePoint<E> {
    Infinity,
    Affine(E, E),
}

impl<E> CurvePoint<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl<F: Field> WeierstrassModel<F> {
    /// An affine point, checked against the equation.
    pub fn point(&self, x: F::Elem, y: F::Elem) -> Result<CurvePoint<F::Elem>> {
        if !self.contains(&x, &y) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(CurvePoint::Affine(x, y))
    }

    pub fn is_on_curve(&self, p: &CurvePoint<F::Elem>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => self.contains(x, y),
        }
    }

    fn check_group(&self, points: &[&CurvePoint<F::Elem>]) -> Result<()> {
        if self.is_singular() {
            return Err(Error::Singular);
        }
        if points.iter().any(|p| !self.is_on_curve(p)) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(())
    }

    pub fn neg_point(&self, p: &CurvePoint<F::Elem>) -> Result<CurvePoint<F::Elem>> {
        self.check_group(&[p])?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &CurvePoint<F::Elem>) -> CurvePoint<F::Elem> {
        let k = self.ring();
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let y2 = k.neg(&k.sum(&[y.clone(), k.mul(self.a1(), x), self.a3().clone()]));
                CurvePoint::Affine(x.clone(), y2)
            }
        }
    }

    /// Chord-tangent addition on the long Weierstrass form.
    pub fn add_points(
        &self,
        p: &CurvePoint<F::Elem>,
        q: &CurvePoint<F::Elem>,
    ) -> Result<CurvePoint<F::Elem>> {
        self.check_group(&[p, q])?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(
        &self,
        p: &CurvePoint<F::Elem>,
        q: &CurvePoint<F::Elem>,
    ) -> CurvePoint<F::Elem> {
        let k = self.ring();
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = self.coeffs();
        let (lambda, nu) = if k.equal(x1, x2) {
            let denom = k.sum(&[k.scale(2, y1), k.mul(a1, x1), a3.clone()]);
            if !k.equal(y1, y2) || k.is_zero(&denom) {
                return CurvePoint::Infinity;
            }
            let inv = k.inv(&denom).expect("nonzero");
            let lnum = k.sum(&[
                k.scale(3, &k.square(x1)),
                k.scale(2, &k.mul(a2, x1)),
                a4.clone(),
                k.neg(&k.mul(a1, y1)),
            ]);
            let nnum = k.sum(&[
                k.neg(&k.pow(x1, 3)),
                k.mul(a4, x1),
                k.scale(2, a6),
                k.neg(&k.mul(a3, y1)),
            ]);
            (k.mul(&lnum, &inv), k.mul(&nnum, &inv))
        } else {
            let inv = k.inv(&k.sub(x2, x1)).expect("distinct x");
            let lambda = k.mul(&k.sub(y2, y1), &inv);
            let nu = k.mul(&k.sub(&k.mul(y1, x2), &k.mul(y2, x1)), &inv);
            (lambda, nu)
        };
        let x3 = k.sum(&[
            k.square(&lambda),
            k.mul(a1, &lambda),
            k.neg(a2),
            k.neg(x1),
            k.neg(x2),
        ]);
        let y3 = k.neg(&k.sum(&[k.mul(&k.add(&lambda, a1), &x3), nu, a3.clone()]));
        CurvePoint::Affine(x3, y3)
    }

    /// `n * P` by double-and-add; negative `n` uses `-P`.
    pub fn mul_point(&self, n: i64, p: &CurvePoint<F::Elem>) -> Result<CurvePoint<F::Elem>> {
        self.check_group(&[p])?;
        let mut base = if n < 0 {
            self.neg_unchecked(p)
        } else {
            p.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Least `n >= 1` with `nP = O`, by repeated addition; errors past `bound`.
    pub fn point_order(&self, p: &CurvePoint<F::Elem>, bound: u64) -> Result<u64> {
        self.check_group(&[p])?;
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_infinity() {
                return Ok(n);
            }
            acc = self.add_unchecked(&acc, p);
        }
        Err(Error::OrderBoundExceeded(bound))
    }
}
