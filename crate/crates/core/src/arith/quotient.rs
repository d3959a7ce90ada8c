use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{factor_fp, Field, Poly, PolyRing, PrimeField, Rationals, Ring};
use crate::error::{Error, Result};

/// `F[t]/(m)` for a monic irreducible `m`: number fields `Q[t]/(m)` and
/// finite fields `F_p[t]/(m)`. Elements are remainders of degree `< deg m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientField<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
}

impl<F: Field> QuotientField<F> {
    /// Accept `modulus` as irreducible without any check. The modulus is made monic.
    pub fn new_unchecked(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base);
        match modulus.degree() {
            None | Some(0) => Err(Error::ReducibleModulus(
                "modulus must have positive degree".into(),
            )),
            Some(_) => {
                let modulus = ring.monic(&modulus);
                Ok(Self { ring, modulus })
            }
        }
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("positive degree")
    }

    pub fn reduce(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.rem(a, &self.modulus).expect("nonzero modulus")
    }

    /// The class of `t`.
    pub fn generator(&self) -> Poly<F::Elem> {
        self.reduce(&self.ring.var())
    }

    pub fn embed(&self, c: F::Elem) -> Poly<F::Elem> {
        self.ring.constant(c)
    }

    /// Inverse by the extended Euclidean algorithm.
    ///
    /// A nontrivial gcd with the modulus means the modulus is reducible.
    pub fn inverse(&self, x: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, u, _) = self.ring.ext_gcd(x, &self.modulus)?;
        if !self.ring.is_one(&g) {
            return Err(Error::ReducibleModulus(format!(
                "gcd with modulus is {}",
                self.ring.format(&g)
            )));
        }
        Ok(self.reduce(&u))
    }
}

impl QuotientField<Rationals> {
    /// Number field `Q[t]/(m)`. Rejects moduli with a rational root (the
    /// screen is complete for degree <= 3).
    pub fn number_field(modulus: Poly<BigRational>) -> Result<Self> {
        let field = Self::new_unchecked(Rationals, modulus)?;
        if let Some(root) = rational_root(&field.ring, &field.modulus) {
            return Err(Error::ReducibleModulus(format!(
                "{} has the rational root {}",
                field.ring.format(&field.modulus),
                Rationals.format(&root)
            )));
        }
        Ok(field)
    }
}

impl QuotientField<PrimeField> {
    /// Finite field `F_p[t]/(m)`; the modulus is factored to confirm irreducibility.
    pub fn finite_field(base: PrimeField, modulus: Poly<u64>) -> Result<Self> {
        let field = Self::new_unchecked(base, modulus)?;
        let fac = factor_fp(&base, &field.modulus)?;
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(Error::ReducibleModulus(field.ring.format(&field.modulus)));
        }
        Ok(field)
    }

    /// The residue field of a prime place with characteristic `p`: `F_p[t]/(t)`.
    pub fn prime(base: PrimeField) -> Self {
        let ring = PolyRing::new(base);
        Self::new_unchecked(base, ring.var()).expect("degree one")
    }

    /// Number of elements `p^d`.
    pub fn order(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::from(self.base().modulus()).pow(self.degree() as u32)
    }

    /// Quadratic character: `true` iff `a` is a nonzero square.
    pub fn is_square(&self, a: &Poly<u64>) -> bool {
        if a.is_zero() {
            return false;
        }
        if self.base().modulus() == 2 {
            return true;
        }
        let e = (self.order() - 1u32) / 2u32;
        self.is_one(&self.pow_biguint(a, &e))
    }

    /// Number of distinct roots in this field of a nonzero polynomial over it.
    pub fn count_roots(&self, f: &Poly<Poly<u64>>) -> Result<usize> {
        let ring = PolyRing::new(self.clone());
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("count_roots"));
        }
        if f.degree() == Some(0) {
            return Ok(0);
        }
        let x = ring.var();
        let xq = ring.pow_mod(&x, &self.order(), f)?;
        let g = ring.gcd(&ring.sub(&xq, &x), f)?;
        Ok(g.degree().unwrap_or(0))
    }
}

/// Search for a rational root of a monic polynomial over `Q` by the
/// rational-root theorem. Skipped (returns `None`) when the cleared
/// coefficients are too large to enumerate divisors.
fn rational_root(ring: &PolyRing<Rationals>, m: &Poly<BigRational>) -> Option<BigRational> {
    let lcm = m
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = m
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints.last()?.abs();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        return Some(BigRational::zero());
    }
    let constant = ints[0].abs();
    let nums = small_divisors(&constant)?;
    let dens = small_divisors(&lead)?;
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let q = BigRational::new(BigInt::from(*n * sign), BigInt::from(*d));
                if ring.eval(m, &q).is_zero() {
                    return Some(q);
                }
            }
        }
    }
    None
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.to_i64().filter(|&n| n > 0 && n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

impl<F: Field> Ring for QuotientField<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.ring.one()
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.ring.from_bigint(n)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.sub(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&self.ring.mul(a, b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.ring.equal(a, b)
    }

    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.ring.format(a)
    }

    fn weight(&self, a: &Self::Elem) -> usize {
        self.ring.weight(a)
    }
}

impl<F: Field> Field for QuotientField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.inverse(a).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_and_generator_over_f5() {
        let fp = PrimeField::new(5).unwrap();
        let ring = PolyRing::new(fp);
        let k = QuotientField::finite_field(fp, ring.from_ints(&[2, 0, 1])).unwrap();
        assert_eq!(k.inverse(&k.one()).unwrap(), k.one());
        let t = k.generator();
        let y = k.inverse(&t).unwrap();
        assert_eq!(k.mul(&t, &y), k.one());
        // t^2 = -2 so t^{-1} = -t/2 = 2t in F_5.
        assert_eq!(y, ring.from_ints(&[0, 2]));
    }

    #[test]
    fn inverse_in_cubic_number_field() {
        let ring = PolyRing::new(Rationals);
        let k = QuotientField::number_field(ring.from_ints(&[-1, -1, 2, 1])).unwrap();
        let t = k.generator();
        let y = k.inverse(&t).unwrap();
        assert_eq!(k.mul(&t, &y), k.one());
        assert_eq!(k.inverse(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn reducible_moduli_rejected() {
        let ring = PolyRing::new(Rationals);
        assert!(matches!(
            QuotientField::number_field(ring.from_ints(&[-2, 1, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        let fp = PrimeField::new(5).unwrap();
        let fring = PolyRing::new(fp);
        assert!(QuotientField::finite_field(fp, fring.from_ints(&[4, 4, 1])).is_err());
        // Unchecked construction surfaces reducibility on inversion.
        let k = QuotientField::new_unchecked(Rationals, ring.from_ints(&[-1, 0, 1])).unwrap();
        assert!(matches!(
            k.inverse(&ring.from_ints(&[1, 1])),
            Err(Error::ReducibleModulus(_))
        ));
    }

    #[test]
    fn squares_and_roots_in_f25() {
        let fp = PrimeField::new(5).unwrap();
        let ring = PolyRing::new(fp);
        let k = QuotientField::finite_field(fp, ring.from_ints(&[2, 0, 1])).unwrap();
        // Every element of F_5 is a square in F_25.
        for a in 1..5 {
            assert!(k.is_square(&k.embed(a)));
        }
        let squares = (0..25)
            .map(|i| ring.from_ints(&[i % 5, i / 5]))
            .filter(|a| k.is_square(a))
            .count();
        assert_eq!(squares, 12);
        let pr = PolyRing::new(k.clone());
        // x^2 - 3 has two roots in F_25, none in F_5.
        let f = pr.from_coeffs(vec![k.from_int(-3), k.zero(), k.one()]);
        assert_eq!(k.count_roots(&f).unwrap(), 2);
        let f5 = QuotientField::prime(fp);
        let pr5 = PolyRing::new(f5.clone());
        let g = pr5.from_coeffs(vec![f5.from_int(-3), f5.zero(), f5.one()]);
        assert_eq!(f5.count_roots(&g).unwrap(), 0);
    }
}
