//! Factorization over prime fields: squarefree decomposition, distinct-degree
//! splitting, then randomized equal-degree splitting (Cantor-Zassenhaus).

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

/// `unit * prod(f_i^{e_i})` with monic irreducible `f_i`, sorted by
/// (degree, coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(Poly<u64>, u32)>,
}

impl Factorization {
    pub fn expand(&self, field: &PrimeField) -> Poly<u64> {
        let ring = PolyRing::new(*field);
        self.factors
            .iter()
            .fold(ring.constant(self.unit), |acc, (f, e)| {
                ring.mul(&acc, &ring.pow(f, *e as u64))
            })
    }
}

pub fn factor_fp(field: &PrimeField, a: &Poly<u64>) -> Result<Factorization> {
    factor_fp_seeded(field, a, 0)
}

pub fn factor_fp_seeded(field: &PrimeField, a: &Poly<u64>, seed: u64) -> Result<Factorization> {
    let ring = PolyRing::new(*field);
    let unit = *a.leading().ok_or(Error::ZeroPolynomial("factor"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree(&ring, &ring.monic(a))? {
        for (block, d) in distinct_degree(&ring, &sqf)? {
            for f in equal_degree(&ring, &block, d, &mut rng)? {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|(f, e), (g, h)| {
        f.degree()
            .cmp(&g.degree())
            .then_with(|| f.coeffs().iter().rev().cmp(g.coeffs().iter().rev()))
            .then(e.cmp(h))
    });
    Ok(Factorization { unit, factors })
}

/// True iff `a` has positive degree and no nontrivial factorization.
pub fn is_irreducible_fp(field: &PrimeField, a: &Poly<u64>) -> Result<bool> {
    if a.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let fac = factor_fp(field, a)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Squarefree parts with multiplicities of a monic polynomial.
fn squarefree(ring: &PolyRing<PrimeField>, f: &Poly<u64>) -> Result<Vec<(Poly<u64>, u32)>> {
    let p = ring.base().modulus();
    let mut out = Vec::new();
    if ring.is_constant(f) {
        return Ok(out);
    }
    let df = ring.derivative(f);
    if df.is_zero() {
        // f is a p-th power.
        for (g, e) in squarefree(ring, &pth_root(ring, f))? {
            out.push((g, e * p as u32));
        }
        return Ok(out);
    }
    let mut c = ring.gcd(f, &df)?;
    let mut w = ring.div_exact(f, &c)?;
    let mut i = 1u32;
    while !ring.is_one(&w) {
        let y = ring.gcd(&w, &c)?;
        let z = ring.div_exact(&w, &y)?;
        if !ring.is_one(&z) {
            out.push((z, i));
        }
        w = y;
        c = ring.div_exact(&c, &w)?;
        i += 1;
    }
    if !ring.is_one(&c) {
        for (g, e) in squarefree(ring, &pth_root(ring, &c))? {
            out.push((g, e * p as u32));
        }
    }
    Ok(out)
}

/// For `f = g(t^p)` over F_p, `g` (Frobenius is the identity on F_p).
fn pth_root(ring: &PolyRing<PrimeField>, f: &Poly<u64>) -> Poly<u64> {
    let p = ring.base().modulus() as usize;
    ring.from_coeffs(f.coeffs().iter().step_by(p).copied().collect())
}

/// Blocks `(g, d)` where `g` is the product of all degree-`d` irreducible
/// factors of the squarefree monic `f`.
fn distinct_degree(ring: &PolyRing<PrimeField>, f: &Poly<u64>) -> Result<Vec<(Poly<u64>, usize)>> {
    let p = BigUint::from(ring.base().modulus());
    let x = ring.var();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = ring.pow_mod(&h, &p, &rest)?;
        let g = ring.gcd(&ring.sub(&h, &x), &rest)?;
        if !ring.is_one(&g) {
            rest = ring.div_exact(&rest, &g)?;
            h = ring.rem(&h, &rest)?;
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Split a product of distinct monic irreducibles of degree `d`.
fn equal_degree(
    ring: &PolyRing<PrimeField>,
    f: &Poly<u64>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly<u64>>> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = ring.base().modulus();
    loop {
        let a = ring.from_coeffs((0..n).map(|_| rng.gen_range(0..p)).collect());
        if ring.is_constant(&a) {
            continue;
        }
        let b = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            let mut acc = a.clone();
            let mut term = a.clone();
            for _ in 1..d {
                term = ring.mul_mod(&term, &term, f)?;
                acc = ring.add(&acc, &term);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            ring.sub(&ring.pow_mod(&a, &e, f)?, &ring.one())
        };
        let g = ring.gcd(&b, f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = ring.div_exact(f, &g)?;
            let mut out = equal_degree(ring, &g, d, rng)?;
            out.extend(equal_degree(ring, &h, d, rng)?);
            return Ok(out);
        }
    }
}
