//! Curves with a point of order `p` over `F_p(t)` for `p = 5, 7, 11`, their
//! closed-form discriminants, and the `j`/Hasse power conditions.

use rand::Rng;

use super::raw11::tate_normal_form;
use crate::arith::{factor_fp, PolyRing, PrimeField, RatFunc, RationalFunctionField, Ring};
use crate::error::{Error, Result};
use crate::weierstrass::{hasse_invariant, WeierstrassModel};

pub type FunctionField = RationalFunctionField<PrimeField>;

pub const FAMILY_PRIMES: [u64; 3] = [5, 7, 11];

/// A family member `y^2 + (1 - c) xy - b y = x^3 - b x^2` over `F_p(t)`.
#[derive(Debug, Clone)]
pub struct FamilyCurve {
    pub p: u64,
    pub f: RatFunc<u64>,
    pub b: RatFunc<u64>,
    pub c: RatFunc<u64>,
    pub model: WeierstrassModel<FunctionField>,
}

pub fn function_field(p: u64) -> Result<FunctionField> {
    Ok(RationalFunctionField::new(PrimeField::new(p)?))
}

fn check_family_input(p: u64, f: &RatFunc<u64>) -> Result<FunctionField> {
    if !FAMILY_PRIMES.contains(&p) {
        return Err(Error::InvalidInput(format!(
            "families exist for p in {{5, 7, 11}}, not {p}"
        )));
    }
    let k = function_field(p)?;
    if f.num()
        .coeffs()
        .iter()
        .chain(f.den().coeffs())
        .any(|&c| c >= p)
    {
        return Err(Error::InvalidInput(format!(
            "parameter is not an element of F_{p}(t)"
        )));
    }
    if k.is_constant(f) {
        return Err(Error::InvalidInput(format!(
            "parameter {} is constant",
            k.format(f)
        )));
    }
    Ok(k)
}

fn shift(k: &FunctionField, f: &RatFunc<u64>, c: i64) -> RatFunc<u64> {
    k.add(f, &k.from_int(c))
}

fn quotient(k: &FunctionField, num: &RatFunc<u64>, den: &RatFunc<u64>) -> Result<RatFunc<u64>> {
    crate::arith::Field::div(k, num, den).ok_or(Error::DivisionByZero)
}

/// The Tate normal form parameters `(b, c)` for the family at `p`.
fn family_parameters(
    k: &FunctionField,
    p: u64,
    f: &RatFunc<u64>,
) -> Result<(RatFunc<u64>, RatFunc<u64>)> {
    match p {
        5 => Ok((f.clone(), f.clone())),
        7 => {
            let f2 = k.square(f);
            let a = k.sub(&f2, f);
            let b = k.sub(&k.mul(&f2, f), &f2);
            Ok((b, a))
        }
        11 => {
            // 1/3 = 4 and 1/2 = 6 in F_11.
            let (f1, f3, f4, f5, f9) = (
                shift(k, f, 1),
                shift(k, f, 3),
                shift(k, f, 4),
                shift(k, f, 5),
                shift(k, f, 9),
            );
            let a_num = k.scale(4, &k.mul(&f3, &k.mul(&k.square(&f5), &k.square(&f9))));
            let a = quotient(k, &a_num, &k.mul(&f1, &k.pow(&f4, 4)))?;
            let b_num = k.scale(6, &k.mul(&a, &k.mul(&k.square(&f1), &f9)));
            let b = quotient(k, &b_num, &k.pow(&f4, 3))?;
            Ok((b, a))
        }
        _ => unreachable!("checked by check_family_input"),
    }
}

pub fn build_ff_family(p: u64, f: &RatFunc<u64>) -> Result<FamilyCurve> {
    let k = check_family_input(p, f)?;
    let (b, c) = family_parameters(&k, p, f)?;
    let model = tate_normal_form(&k, &b, &c);
    if model.is_singular() {
        return Err(Error::Singular);
    }
    Ok(FamilyCurve {
        p,
        f: f.clone(),
        b,
        c,
        model,
    })
}

/// The closed-form discriminant of the family at `p`, evaluated at `f`.
pub fn family_discriminant_formula(p: u64, f: &RatFunc<u64>) -> Result<RatFunc<u64>> {
    let k = check_family_input(p, f)?;
    let poly = |coeffs: &[i64]| {
        coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, &c| k.add(&k.mul(&acc, f), &k.from_int(c)))
    };
    match p {
        5 => Ok(k.mul(&k.pow(f, 5), &poly(&[-1, -11, 1]))),
        7 => {
            let fm1 = shift(&k, f, -1);
            Ok(k.mul(&k.mul(&k.pow(f, 7), &k.pow(&fm1, 7)), &poly(&[1, 5, -8, 1])))
        }
        11 => {
            let num = k.mul(
                &k.scale(2, &k.square(f)),
                &k.pow(
                    &k.mul(&shift(&k, f, 3), &k.mul(&shift(&k, f, 5), &shift(&k, f, 9))),
                    11,
                ),
            );
            let den = k.mul(&k.pow(&shift(&k, f, 4), 37), &shift(&k, f, 1));
            quotient(&k, &num, &den)
        }
        _ => unreachable!("checked by check_family_input"),
    }
}

/// A random nonconstant `num/den` with both degrees at most `max_degree`.
pub fn random_parameter<R: Rng>(p: u64, rng: &mut R, max_degree: usize) -> Result<RatFunc<u64>> {
    let k = function_field(p)?;
    let ring = k.poly_ring();
    loop {
        let mut draw = |monic: bool| {
            let deg = rng.gen_range(0..=max_degree);
            let mut coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
            if monic {
                coeffs[deg] = 1;
            }
            ring.from_coeffs(coeffs)
        };
        let num = draw(false);
        let den = draw(true);
        let f = k.normalize(&num, &den)?;
        if !k.is_constant(&f) {
            return Ok(f);
        }
    }
}

fn nonzero(k: &FunctionField, x: &RatFunc<u64>) -> Result<()> {
    if k.is_zero(x) {
        return Err(Error::InvalidInput(
            "zero has no power decomposition".into(),
        ));
    }
    Ok(())
}

/// Every irreducible multiplicity of `num` and `den` is divisible by `n`.
fn exponents_divisible(k: &FunctionField, x: &RatFunc<u64>, n: u32) -> Result<bool> {
    let field = k.base();
    for poly in [x.num(), x.den()] {
        if poly.degree().unwrap_or(0) == 0 {
            continue;
        }
        if factor_fp(field, poly)?
            .factors
            .iter()
            .any(|(_, e)| e % n != 0)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `x` lies in `K^p` for `K = F_p(t)`.
pub fn is_pth_power(k: &FunctionField, x: &RatFunc<u64>) -> Result<bool> {
    nonzero(k, x)?;
    exponents_divisible(k, x, k.characteristic() as u32)
}

/// Whether `x` lies in `(K^×)^{p-1}`: exponents divisible by `p - 1` and
/// leading constant 1, since `(F_p^×)^{p-1} = {1}`.
pub fn is_pminus1_power(k: &FunctionField, x: &RatFunc<u64>) -> Result<bool> {
    nonzero(k, x)?;
    let lc = *x.num().leading().expect("nonzero");
    Ok(lc == 1 && exponents_divisible(k, x, k.characteristic() as u32 - 1)?)
}

/// Both power conditions for a model over `F_p(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerConditions {
    pub j_nonconstant: bool,
    pub j_is_pth_power: bool,
    pub hasse_is_pminus1_power: bool,
}

impl PowerConditions {
    pub fn both(&self) -> bool {
        self.j_is_pth_power && self.hasse_is_pminus1_power
    }
}

pub fn power_conditions(model: &WeierstrassModel<FunctionField>) -> Result<PowerConditions> {
    let k = model.ring();
    let j = model.j_invariant()?;
    let (short, _) = model.to_short_form()?;
    let hasse = hasse_invariant(&short)?;
    Ok(PowerConditions {
        j_nonconstant: !k.is_constant(&j),
        j_is_pth_power: !k.is_zero(&j) && is_pth_power(k, &j)?,
        hasse_is_pminus1_power: !k.is_zero(&hasse) && is_pminus1_power(k, &hasse)?,
    })
}

/// `t` as a parameter over `F_p`.
pub fn parameter_t(p: u64) -> Result<RatFunc<u64>> {
    Ok(function_field(p)?.var())
}

/// Polynomial ring over `F_p` for building parameters.
pub fn parameter_ring(p: u64) -> Result<PolyRing<PrimeField>> {
    Ok(PolyRing::new(PrimeField::new(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn inverses_in_f11() {
        assert_eq!(3 * 4 % 11, 1);
        assert_eq!(2 * 6 % 11, 1);
    }

    #[test]
    fn p5_at_t() {
        let t = parameter_t(5).unwrap();
        let fam = build_ff_family(5, &t).unwrap();
        let k = fam.model.ring();
        assert_eq!(fam.model.a1(), &k.sub(&k.one(), &t));
        assert_eq!(fam.model.a2(), &k.neg(&t));
        assert_eq!(fam.model.a3(), &k.neg(&t));
        let r = parameter_ring(5).unwrap();
        let expected = k.from_poly(r.mul(&r.pow(&r.var(), 5), &r.from_ints(&[4, 4, 1])));
        assert_eq!(family_discriminant_formula(5, &t).unwrap(), expected);
        assert_eq!(fam.model.discriminant(), expected);
    }

    #[test]
    fn p7_at_t() {
        let t = parameter_t(7).unwrap();
        let fam = build_ff_family(7, &t).unwrap();
        let r = parameter_ring(7).unwrap();
        let k = fam.model.ring();
        assert_eq!(fam.b, k.from_poly(r.from_ints(&[0, 0, -1, 1])));
        assert_eq!(fam.c, k.from_poly(r.from_ints(&[0, -1, 1])));
        let tm1 = r.from_ints(&[-1, 1]);
        let expected = r.mul(
            &r.mul(&r.pow(&r.var(), 7), &r.pow(&tm1, 7)),
            &r.from_ints(&[1, 5, 6, 1]),
        );
        assert_eq!(
            family_discriminant_formula(7, &t).unwrap(),
            k.from_poly(expected)
        );
        assert_eq!(
            fam.model.discriminant(),
            family_discriminant_formula(7, &t).unwrap()
        );
    }

    #[test]
    fn formulas_match_random_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in FAMILY_PRIMES {
            for _ in 0..5 {
                let f = random_parameter(p, &mut rng, 4).unwrap();
                let fam = build_ff_family(p, &f).unwrap();
                assert_eq!(
                    fam.model.discriminant(),
                    family_discriminant_formula(p, &f).unwrap()
                );
            }
        }
    }

    #[test]
    fn power_tests() {
        let k = function_field(5).unwrap();
        let t = k.var();
        assert!(is_pth_power(&k, &k.pow(&t, 5)).unwrap());
        assert!(!is_pth_power(&k, &t).unwrap());
        assert!(is_pminus1_power(&k, &k.pow(&t, 4)).unwrap());
        assert!(!is_pminus1_power(&k, &k.scale(2, &k.pow(&t, 4))).unwrap());
        assert!(is_pth_power(&k, &k.zero()).is_err());
        let fam = build_ff_family(5, &t).unwrap();
        let cond = power_conditions(&fam.model).unwrap();
        assert!(cond.j_nonconstant);
        assert!(cond.both(), "{cond:?}");
    }

    #[test]
    fn bad_inputs() {
        let k = function_field(5).unwrap();
        assert!(build_ff_family(5, &k.one()).is_err());
        assert!(build_ff_family(13, &parameter_t(13).unwrap()).is_err());
    }
}
