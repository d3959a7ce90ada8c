use num_bigint::BigInt;

use super::{Field, Poly, PolyRing, Ring};
use crate::error::{Error, Result};

/// A reduced fraction of polynomials: `gcd(num, den) = 1`, `den` monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E> RatFunc<E> {
    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }

    /// `deg(den) - deg(num)`, the valuation at the infinite place. `None` for zero.
    pub fn degree_gap(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(self.den.degree().expect("denominator is nonzero") as i64 - dn)
    }
}

/// The rational function field `F(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionField<F> {
    ring: PolyRing<F>,
}

impl<F: Field> RationalFunctionField<F> {
    pub fn new(base: F) -> Self {
        Self {
            ring: PolyRing::new(base),
        }
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    /// Reduce `num/den` to canonical form.
    pub fn normalize(&self, num: &Poly<F::Elem>, den: &Poly<F::Elem>) -> Result<RatFunc<F::Elem>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = self.ring.gcd(num, den)?;
        let (mut n, mut d) = if self.ring.is_one(&g) {
            (num.clone(), den.clone())
        } else {
            (self.ring.div_exact(num, &g)?, self.ring.div_exact(den, &g)?)
        };
        let lc = d.leading().expect("nonzero").clone();
        if !self.base().is_one(&lc) {
            let inv = self.base().inv(&lc).expect("nonzero");
            n = self.ring.scalar_mul(&inv, &n);
            d = self.ring.scalar_mul(&inv, &d);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(&self, p: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc {
            num: p,
            den: self.ring.one(),
        }
    }

    /// The generator `t`.
    pub fn var(&self) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.var())
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.constant(c))
    }

    pub fn is_constant(&self, a: &RatFunc<F::Elem>) -> bool {
        self.ring.is_constant(&a.num) && self.ring.is_constant(&a.den)
    }

    /// Substitute `g` for `t` in `a`.
    pub fn compose(&self, a: &RatFunc<F::Elem>, g: &RatFunc<F::Elem>) -> Result<RatFunc<F::Elem>> {
        let eval = |p: &Poly<F::Elem>| {
            p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
                self.add(&self.mul(&acc, g), &self.constant(c.clone()))
            })
        };
        self.div(&eval(&a.num), &eval(&a.den))
            .ok_or(Error::DivisionByZero)
    }
}

impl<F: Field> Ring for RationalFunctionField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc {
            num: Poly::zero(),
            den: self.ring.one(),
        }
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.ring.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.from_poly(self.ring.from_bigint(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = self.ring.add(&a.num, &b.num);
            return self.normalize(&num, &a.den).expect("nonzero denominator");
        }
        let num = self.ring.add(
            &self.ring.mul(&a.num, &b.den),
            &self.ring.mul(&b.num, &a.den),
        );
        let den = self.ring.mul(&a.den, &b.den);
        self.normalize(&num, &den).expect("nonzero denominator")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        // Cross-cancel before multiplying to keep the gcds small.
        let g1 = self.ring.gcd(&a.num, &b.den).expect("nonzero");
        let g2 = self.ring.gcd(&b.num, &a.den).expect("nonzero");
        let an = self.ring.div_exact(&a.num, &g1).expect("divides");
        let bd = self.ring.div_exact(&b.den, &g1).expect("divides");
        let bn = self.ring.div_exact(&b.num, &g2).expect("divides");
        let ad = self.ring.div_exact(&a.den, &g2).expect("divides");
        let num = self.ring.mul(&an, &bn);
        let den = self.ring.mul(&ad, &bd);
        let lc = den.leading().expect("nonzero").clone();
        if self.base().is_one(&lc) {
            RatFunc { num, den }
        } else {
            let inv = self.base().inv(&lc).expect("nonzero");
            RatFunc {
                num: self.ring.scalar_mul(&inv, &num),
                den: self.ring.scalar_mul(&inv, &den),
            }
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    fn format(&self, a: &Self::Elem) -> String {
        let n = self.ring.format(&a.num);
        if self.ring.is_one(&a.den) {
            return n;
        }
        let d = self.ring.format(&a.den);
        let wrap = |s: String| {
            if s.contains(['+', '-', '*', '/']) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n), wrap(d))
    }

    fn weight(&self, a: &Self::Elem) -> usize {
        self.ring.weight(&a.num) + self.ring.weight(&a.den)
    }
}

impl<F: Field> Field for RationalFunctionField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.normalize(&a.den, &a.num).expect("nonzero"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    #[test]
    fn normalize_examples() {
        let k = RationalFunctionField::new(PrimeField::new(5).unwrap());
        let r = k.poly_ring();
        let t = r.var();
        let t2 = r.mul(&t, &t);
        assert_eq!(k.normalize(&t2, &t).unwrap(), k.var());

        let a = r.from_ints(&[1, 1]);
        let b = r.from_ints(&[2, 1]);
        let f = k.normalize(&r.mul(&a, &b), &b).unwrap();
        assert_eq!(f, k.from_poly(a));

        assert_eq!(k.normalize(&t, &r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn constant_scaling_moves_into_numerator() {
        let k = RationalFunctionField::new(Rationals);
        let r = k.poly_ring();
        let f = k
            .normalize(&r.from_ints(&[0, 2]), &r.from_ints(&[2]))
            .unwrap();
        assert_eq!(f, k.var());
        let g = k
            .normalize(&r.from_ints(&[1]), &r.from_ints(&[0, 3]))
            .unwrap();
        assert!(r.is_monic(g.den()));
        assert_eq!(k.format(&g), "(1/3)/t");
    }

    #[test]
    fn degree_gap_is_infinite_valuation() {
        let k = RationalFunctionField::new(PrimeField::new(7).unwrap());
        let r = k.poly_ring();
        let f = k.normalize(&r.from_ints(&[1, 0, 1]), &r.var()).unwrap();
        assert_eq!(f.degree_gap(), Some(-1));
        assert_eq!(k.zero().degree_gap(), None);
    }
}
