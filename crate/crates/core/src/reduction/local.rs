use super::kodaira::KodairaType;
use crate::arith::{Field, Poly, PolyRing, Ring};
use crate::error::{Error, Result};
use crate::valuation::LocalContext;
use crate::weierstrass::{Transform, WeierstrassModel};

const WEIGHTS: [i64; 5] = [1, 2, 3, 4, 6];

/// A minimal model at a place together with the transform reaching it.
///
/// `scaling` is the net number of uniformizer scalings removed: the minimal
/// discriminant is `π^{-12 scaling}` times the input discriminant, so a
/// negative value means the input had to be made integral first.
#[derive(Debug, Clone)]
pub struct MinimalModel<F: Field> {
    pub model: WeierstrassModel<F>,
    pub transform: Transform<F::Elem>,
    pub scaling: i64,
}

/// Local reduction data at one place.
#[derive(Debug, Clone)]
pub struct ReductionResult<F: Field> {
    pub kodaira: KodairaType,
    pub tamagawa: u64,
    pub vdisc_min: i64,
    pub minimal: WeierstrassModel<F>,
    pub transform: Transform<F::Elem>,
}

impl<F: Field> ReductionResult<F> {
    /// The isomorphism-invariant part: type, `c_v` and `v(Δ_min)`.
    pub fn summary(&self) -> (KodairaType, u64, i64) {
        (self.kodaira, self.tamagawa, self.vdisc_min)
    }
}

fn check_characteristic<C: LocalContext>(ctx: &C) -> Result<()> {
    let p = ctx.residue_characteristic();
    if p < 5 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    Ok(())
}

fn coefficient_valuations<C: LocalContext>(
    model: &WeierstrassModel<C::F>,
    ctx: &C,
) -> Result<Vec<Option<i64>>> {
    model.coeffs().iter().map(|a| ctx.valuation(a)).collect()
}

fn disc_valuation<C: LocalContext>(ctx: &C, disc: &<C::F as Ring>::Elem) -> Result<i64> {
    ctx.valuation(disc)?.ok_or(Error::Singular)
}

/// `⌊v/w⌋` with `None` read as `+∞`.
fn floor_div(v: Option<i64>, w: i64) -> i64 {
    v.map_or(i64::MAX, |v| v.div_euclid(w))
}

/// Minimal model at a place of residue characteristic at least 5.
pub fn minimal_model_at<C: LocalContext>(
    model: &WeierstrassModel<C::F>,
    ctx: &C,
) -> Result<MinimalModel<C::F>> {
    check_characteristic(ctx)?;
    let k = ctx.field();
    let vals = coefficient_valuations(model, ctx)?;
    let k0 = vals
        .iter()
        .zip(WEIGHTS)
        .filter_map(|(v, w)| v.map(|v| (-v).div_euclid(w) + i64::from((-v).rem_euclid(w) != 0)))
        .max()
        .unwrap_or(0)
        .max(0);
    let mut transform = Transform::identity(k);
    let mut current = model.clone();
    if k0 > 0 {
        let step = Transform::scaling(k, ctx.uniformizer_pow(-k0));
        current = current.transform(&step)?;
        transform = transform.then(k, &step);
    }

    let inv = current.invariants();
    let vd = disc_valuation(ctx, &inv.disc)?;
    let kd = floor_div(ctx.valuation(&inv.c4)?, 4)
        .min(floor_div(ctx.valuation(&inv.c6)?, 6))
        .min(vd / 12);
    if kd > 0 {
        let vals = coefficient_valuations(&current, ctx)?;
        let pure = vals
            .iter()
            .zip(WEIGHTS)
            .all(|(v, w)| floor_div(*v, w) >= kd);
        let step = if pure {
            Transform::scaling(k, ctx.uniformizer_pow(kd))
        } else {
            let half = k.inv(&k.from_int(2)).expect("residue characteristic >= 5");
            let twelfth = k.inv(&k.from_int(12)).expect("residue characteristic >= 5");
            let r = k.neg(&k.mul(&inv.b2, &twelfth));
            let s = k.neg(&k.mul(current.a1(), &half));
            let t = k.neg(&k.mul(&k.add(current.a3(), &k.mul(&r, current.a1())), &half));
            Transform {
                u: ctx.uniformizer_pow(kd),
                r,
                s,
                t,
            }
        };
        current = current.transform(&step)?;
        transform = transform.then(k, &step);
    }
    debug_assert!(coefficient_valuations(&current, ctx)
        .map(|vs| vs.iter().all(|v| v.is_none_or(|v| v >= 0)))
        .unwrap_or(true));
    Ok(MinimalModel {
        model: current,
        transform,
        scaling: kd.max(0) - k0,
    })
}

/// Split multiplicative reduction read off from coefficient valuations:
/// `v(a1) = 0` and `a2, a3, a4, a6` all vanish at the place. Returns `None`
/// when the pattern does not match.
pub fn observation_fastpath<C: LocalContext>(
    model: &WeierstrassModel<C::F>,
    ctx: &C,
) -> Result<Option<ReductionResult<C::F>>> {
    let vals = coefficient_valuations(model, ctx)?;
    if let Some(v) = vals.iter().flatten().find(|v| **v < 0) {
        return Err(Error::NotIntegral(*v));
    }
    let matches = vals[0] == Some(0) && vals[1..].iter().all(|v| v.is_none_or(|v| v > 0));
    if !matches {
        return Ok(None);
    }
    let n = disc_valuation(ctx, &model.discriminant())?;
    Ok(Some(ReductionResult {
        kodaira: KodairaType::In {
            n: n as u32,
            split: true,
        },
        tamagawa: n as u64,
        vdisc_min: n,
        minimal: model.clone(),
        transform: Transform::identity(ctx.field()),
    }))
}

/// Kodaira type and Tamagawa number at a place of residue characteristic at
/// least 5, from the valuations of `c4`, `c6` and `Δ` of a minimal model.
pub fn tate_reduce<C: LocalContext>(
    model: &WeierstrassModel<C::F>,
    ctx: &C,
) -> Result<ReductionResult<C::F>> {
    let MinimalModel {
        model: minimal,
        transform,
        ..
    } = minimal_model_at(model, ctx)?;
    let k = ctx.field();
    let rf = ctx.residue_field();
    let inv = minimal.invariants();
    let vd = disc_valuation(ctx, &inv.disc)?;
    let vc4 = ctx.valuation(&inv.c4)?;
    let scaled_residue =
        |x: &<C::F as Ring>::Elem, e: i64| ctx.residue(&k.mul(x, &ctx.uniformizer_pow(-e)));
    let chi = |x: &Poly<u64>| -> i64 {
        if rf.is_square(x) {
            1
        } else {
            -1
        }
    };

    let (kodaira, tamagawa) = if vd == 0 {
        (KodairaType::I0, 1)
    } else if vc4 == Some(0) {
        // The node's tangent slopes are rational iff -c6 is a square.
        let split = rf.is_square(&ctx.residue(&k.neg(&inv.c6))?);
        let n = vd as u64;
        let c = if split { n } else { 2 - n % 2 };
        (
            KodairaType::In {
                n: vd as u32,
                split,
            },
            c,
        )
    } else {
        let vc4 = vc4.unwrap_or(i64::MAX);
        match vd {
            2 => (KodairaType::II, 1),
            3 => (KodairaType::III, 2),
            4 => {
                let x = scaled_residue(&k.scale(-6, &inv.c6), 2)?;
                (KodairaType::IV, if rf.is_square(&x) { 3 } else { 1 })
            }
            6 => {
                let r4 = scaled_residue(&inv.c4, 2)?;
                let r6 = scaled_residue(&inv.c6, 3)?;
                let ring = PolyRing::new(rf.clone());
                let cubic = ring.from_coeffs(vec![
                    rf.scale(-2, &r6),
                    rf.scale(-3, &r4),
                    rf.zero(),
                    rf.one(),
                ]);
                (KodairaType::I0Star, 1 + rf.count_roots(&cubic)? as u64)
            }
            _ if vc4 == 2 && vd > 6 => {
                let n = vd - 6;
                let x = if n % 2 == 1 {
                    scaled_residue(&k.mul(&inv.c6, &inv.disc), 9 + n)?
                } else {
                    scaled_residue(&inv.disc, 6 + n)?
                };
                (KodairaType::InStar(n as u32), (3 + chi(&x)) as u64)
            }
            8 => {
                let x = scaled_residue(&k.scale(-6, &inv.c6), 4)?;
                (KodairaType::IVStar, if rf.is_square(&x) { 3 } else { 1 })
            }
            9 => (KodairaType::IIIStar, 2),
            10 => (KodairaType::IIStar, 1),
            _ => {
                return Err(Error::Degenerate(format!(
                    "valuations v(c4)={vc4}, v(disc)={vd} fit no reduction type"
                )))
            }
        }
    };
    Ok(ReductionResult {
        kodaira,
        tamagawa,
        vdisc_min: vd,
        minimal,
        transform,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, PrimeField, RationalFunctionField, Rationals};
    use crate::valuation::{FunctionFieldPlace, Place, RationalPrime};

    fn qmodel(a: [i64; 5]) -> WeierstrassModel<Rationals> {
        WeierstrassModel::new(Rationals, a.map(|n| rational(n, 1))).unwrap()
    }

    fn at(p: u64) -> RationalPrime {
        RationalPrime::new(p).unwrap()
    }

    #[test]
    fn type_two_at_five() {
        let r = tate_reduce(&qmodel([0, 0, 0, 0, 5]), &at(5)).unwrap();
        assert_eq!(r.summary(), (KodairaType::II, 1, 2));
    }

    #[test]
    fn nonsplit_i1_at_five() {
        let e = qmodel([0, 3, 0, 0, 5]);
        let inv = e.invariants();
        assert_eq!(inv.c4, rational(144, 1));
        assert_eq!(inv.c6, rational(-6048, 1));
        assert_eq!(inv.disc, rational(-19440, 1));
        let r = tate_reduce(&e, &at(5)).unwrap();
        assert_eq!(r.summary(), (KodairaType::In { n: 1, split: false }, 1, 1));
        assert_eq!(
            observation_fastpath(&e, &at(5))
                .unwrap()
                .map(|r| r.summary()),
            None
        );
    }

    #[test]
    fn scaled_models_return_to_minimal() {
        let e = qmodel([0, 3, 0, 0, 5]);
        let ctx = at(5);
        let u = Transform::scaling(&Rationals, rational(1, 25));
        let big = e.transform(&u).unwrap();
        let m = minimal_model_at(&big, &ctx).unwrap();
        assert_eq!(m.scaling, 2);
        assert_eq!(m.model.coeffs(), e.coeffs());
        let small = e
            .transform(&Transform::scaling(&Rationals, rational(5, 1)))
            .unwrap();
        let m = minimal_model_at(&small, &ctx).unwrap();
        assert_eq!(m.scaling, -1);
        assert_eq!(m.model.coeffs(), e.coeffs());
        assert_eq!(
            tate_reduce(&small, &ctx).unwrap().summary(),
            tate_reduce(&e, &ctx).unwrap().summary()
        );
    }

    #[test]
    fn residue_characteristic_three_is_rejected() {
        assert_eq!(
            tate_reduce(&qmodel([0, 0, 0, 0, 5]), &at(3)).unwrap_err(),
            Error::UnsupportedCharacteristic(3)
        );
    }

    #[test]
    fn fastpath_on_p5_family() {
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
        let place = Place::finite(5, k.poly_ring().var()).unwrap();
        let ctx = FunctionFieldPlace::new(k, place).unwrap();
        let fast = observation_fastpath(&e, &ctx).unwrap().unwrap();
        let full = tate_reduce(&e, &ctx).unwrap();
        assert_eq!(
            fast.summary(),
            (KodairaType::In { n: 5, split: true }, 5, 5)
        );
        assert_eq!(full.summary(), fast.summary());
        let m = minimal_model_at(&e, &ctx).unwrap();
        assert_eq!(m.scaling, 0);
        assert_eq!(m.model.coeffs(), e.coeffs());
    }

    #[test]
    fn fastpath_mismatch_and_nonintegral() {
        assert!(observation_fastpath(&qmodel([0, 0, 0, 0, 5]), &at(5))
            .unwrap()
            .is_none());
        let e = WeierstrassModel::new(
            Rationals,
            [
                rational(1, 5),
                rational(0, 1),
                rational(0, 1),
                rational(0, 1),
                rational(1, 1),
            ],
        )
        .unwrap();
        assert_eq!(
            observation_fastpath(&e, &at(5)).unwrap_err(),
            Error::NotIntegral(-1)
        );
    }

    /// For additive reduction at an odd place, `E_0(K_v)` has no 2-torsion,
    /// so when the component group is 2-elementary `c_v` counts the rational
    /// 2-torsion points: one plus the number of roots of the cubic.
    fn two_torsion_count(a4: i64, a6: i64, p: u64) -> u64 {
        let fp = PrimeField::new(p).unwrap();
        // Roots in Q_p of x^3 + a4 x + a6 with v(a4) >= 2, v(a6) >= 3 are p
        // times roots of x^3 + (a4/p^2) x + a6/p^3; count them mod p when the
        // scaled cubic is squarefree mod p.
        let pp = p as i64;
        let b4 = fp.elem(a4 / (pp * pp));
        let b6 = fp.elem(a6 / (pp * pp * pp));
        1 + fp
            .elements()
            .filter(|x| fp.is_zero(&fp.sum(&[fp.pow(x, 3), fp.mul(&b4, x), b6])))
            .count() as u64
    }

    #[test]
    fn i0_star_matches_two_torsion() {
        for (a4, a6) in [(-25, 0), (25, 125), (0, 250), (-25, 125), (50, 0)] {
            let e = qmodel([0, 0, 0, a4, a6]);
            let r = tate_reduce(&e, &at(5)).unwrap();
            assert_eq!(r.kodaira, KodairaType::I0Star, "a4={a4} a6={a6}");
            assert_eq!(r.tamagawa, two_torsion_count(a4, a6, 5), "a4={a4} a6={a6}");
        }
    }

    #[test]
    fn additive_types_by_discriminant_valuation() {
        let ctx = at(7);
        let cases: [([i64; 5], KodairaType); 5] = [
            ([0, 0, 0, 7, 0], KodairaType::III),
            ([0, 0, 0, 0, 49], KodairaType::IV),
            ([0, 0, 0, 0, 7 * 7 * 7 * 7], KodairaType::IVStar),
            ([0, 0, 0, 343, 0], KodairaType::IIIStar),
            ([0, 0, 0, 0, 7 * 7 * 7 * 7 * 7], KodairaType::IIStar),
        ];
        for (a, ty) in cases {
            let r = tate_reduce(&qmodel(a), &ctx).unwrap();
            assert_eq!(r.kodaira, ty, "{a:?}");
        }
    }

    #[test]
    fn twist_of_multiplicative_curve_is_in_star() {
        // Quadratic twist by 5 of y^2 = x^3 + 3x^2 + 5, which is I1 at 5.
        let e = qmodel([0, 15, 0, 0, 625]);
        let r = tate_reduce(&e, &at(5)).unwrap();
        assert_eq!(r.kodaira, KodairaType::InStar(1));
        assert!(r.tamagawa == 2 || r.tamagawa == 4);
    }
}
