//! Exact arithmetic substrate.
//!
//! Rings and fields are runtime context objects (a prime field carries its
//! modulus, a quotient field carries its defining polynomial); elements are
//! plain values interpreted through their context. Every element type keeps a
//! canonical form so that `==` on elements is structural equality.

mod bivar;
mod factor;
mod poly;
mod prime_field;
mod quotient;
mod ratfunc;
mod rational;

pub use bivar::{f11, reduce_mod_f11, BivarPoly, BivariateRing};
pub use factor::{factor_fp, factor_fp_seeded, is_irreducible_fp, Factorization};
pub use poly::{Poly, PolyRing};
pub use prime_field::{is_prime, PrimeField};
pub use quotient::QuotientField;
pub use ratfunc::{RatFunc, RationalFunctionField};
pub use rational::{rational, Rationals};

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// A commutative ring with identity, given as a context object.
pub trait Ring: Clone + Debug {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn format(&self, a: &Self::Elem) -> String;

    /// Rough size of an element (bits, degree), used to bound literal evaluation.
    fn weight(&self, _a: &Self::Elem) -> usize {
        1
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.equal(a, &self.one())
    }

    fn scale(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(n), a)
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        result
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A commutative ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a^e` for an integer exponent; negative exponents need `a != 0`.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow(&ai, e.unsigned_abs()))
        }
    }

    fn pow_biguint(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut result = self.one();
        if e.is_zero() {
            return result;
        }
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.square(&result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    fn from_rational(&self, q: &num_rational::BigRational) -> Option<Self::Elem> {
        let num = self.from_bigint(q.numer());
        if q.denom().is_one() {
            return Some(num);
        }
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
    }
}
