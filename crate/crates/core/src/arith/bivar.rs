use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Ring};

/// Sparse polynomial in `Q[r, s]`, keyed by `(deg_r, deg_s)`. No zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivarPoly {
    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn degree_r(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    fn insert_add(&mut self, key: (u32, u32), c: BigRational) {
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Evaluate at `(r, s)` in any field.
    pub fn eval<F: Field>(&self, field: &F, r: &F::Elem, s: &F::Elem) -> Option<F::Elem> {
        let mut acc = field.zero();
        for (&(i, j), c) in &self.terms {
            let c = field.from_rational(c)?;
            let m = field.mul(&field.pow(r, i as u64), &field.pow(s, j as u64));
            acc = field.add(&acc, &field.mul(&c, &m));
        }
        Some(acc)
    }
}

/// The ring `Q[r, s]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BivariateRing;

impl BivariateRing {
    pub fn r(&self) -> BivarPoly {
        self.monomial(BigRational::one(), 1, 0)
    }

    pub fn s(&self) -> BivarPoly {
        self.monomial(BigRational::one(), 0, 1)
    }

    pub fn monomial(&self, c: BigRational, dr: u32, ds: u32) -> BivarPoly {
        let mut p = BivarPoly::default();
        p.insert_add((dr, ds), c);
        p
    }

    /// Build from integer terms `(coefficient, deg_r, deg_s)`.
    pub fn from_terms(&self, terms: &[(i64, u32, u32)]) -> BivarPoly {
        let mut p = BivarPoly::default();
        for &(c, i, j) in terms {
            p.insert_add((i, j), BigRational::from_integer(c.into()));
        }
        p
    }
}

impl Ring for BivariateRing {
    type Elem = BivarPoly;

    fn zero(&self) -> BivarPoly {
        BivarPoly::default()
    }

    fn one(&self) -> BivarPoly {
        self.monomial(BigRational::one(), 0, 0)
    }

    fn from_bigint(&self, n: &BigInt) -> BivarPoly {
        self.monomial(BigRational::from_integer(n.clone()), 0, 0)
    }

    fn add(&self, a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
        let mut out = a.clone();
        for (k, c) in &b.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    fn neg(&self, a: &BivarPoly) -> BivarPoly {
        BivarPoly {
            terms: a.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    fn mul(&self, a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::default();
        for (&(i1, j1), c1) in &a.terms {
            for (&(i2, j2), c2) in &b.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    fn is_zero(&self, a: &BivarPoly) -> bool {
        a.terms.is_empty()
    }

    fn equal(&self, a: &BivarPoly, b: &BivarPoly) -> bool {
        a == b
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn format(&self, a: &BivarPoly) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&(i, j), c) in a.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(if abs.denom().is_one() {
                    abs.numer().to_string()
                } else {
                    format!("({}/{})", abs.numer(), abs.denom())
                });
            }
            for (var, e) in [("r", i), ("s", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// The raw-form relation of the modular curve `X_1(11)`:
/// `r^2 - r s^3 + 3 r s^2 - 4 r s + s`.
pub fn f11() -> BivarPoly {
    BivariateRing.from_terms(&[(1, 2, 0), (-1, 1, 3), (3, 1, 2), (-4, 1, 1), (1, 0, 1)])
}

/// Canonical representative of `g` modulo the ideal `(F11)`: repeatedly
/// rewrite `r^2 = r (s^3 - 3 s^2 + 4 s) - s` until `deg_r <= 1`.
pub fn reduce_mod_f11(g: &BivarPoly) -> BivarPoly {
    let ring = BivariateRing;
    // r^2 == r*(s^3 - 3s^2 + 4s) - s
    let rewrite = ring.from_terms(&[(1, 1, 3), (-3, 1, 2), (4, 1, 1), (-1, 0, 1)]);
    let mut cur = g.clone();
    loop {
        let Some(&(i, j)) = cur.terms.keys().filter(|k| k.0 >= 2).max() else {
            return cur;
        };
        let c = cur.terms.remove(&(i, j)).expect("present");
        let shifted = ring.mul(&ring.monomial(c, i - 2, j), &rewrite);
        cur = ring.add(&cur, &shifted);
    }
}
