//! The verification commands. Each returns its printable output and an
//! overall pass flag; input problems are returned as [`CliError`].

use num_bigint::BigUint;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use tamagawa::arith::{Field, PrimeField, Ring};
use tamagawa::families::{
    build_e_rs, build_ff_family, check_delta_identity_11, check_rescaling,
    family_discriminant_formula, function_field, krumm_fixture, power_conditions, random_parameter,
    realize_padic_case, Realization, Rescaling, ValuationCase, FAMILY_PRIMES,
};
use tamagawa::literal::parse_element;
use tamagawa::reduction::{
    global_tamagawa, observation_fastpath, tate_reduce, KodairaType, ReductionResult,
};
use tamagawa::valuation::{FunctionFieldPlace, LocalContext, PadicContext, RationalPrime};
use tamagawa::weierstrass::DEFAULT_ORDER_BOUND;

use crate::error::CliError;
use crate::input::{parse_curve_json, parse_place, parse_point, Curve};

/// Largest pole order accepted by `check11-padic`.
pub const MAX_POLE_ORDER: u32 = 20;
/// Largest corpus accepted by `check-ff`.
pub const MAX_COUNT: usize = 10_000;
/// Degree bound for random family parameters.
pub const PARAMETER_DEGREE: usize = 4;

/// Column order of the `check-ff` table.
pub const TSV_HEADER: &str = "p\tf\tplace\tdegree\ttype\tsplit\tvdelta_min\tc_v";

#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub pass: bool,
}

/// Output of `check-ff`: the per-place table and the JSON report.
#[derive(Debug, Clone)]
pub struct FfOutcome {
    pub tsv: String,
    pub report: Value,
    pub pass: bool,
}

fn to_json_line(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn summary(cases: &[Value]) -> (Value, bool) {
    let passed = cases.iter().filter(|c| c["pass"] == json!(true)).count();
    let failed = cases.len() - passed;
    (json!({"passed": passed, "failed": failed}), failed == 0)
}

/// JSON form of a local reduction: `type`, `split` (multiplicative only),
/// `c` and `vdelta`.
pub fn reduction_json<F: Field>(r: &ReductionResult<F>) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), json!(r.kodaira.to_string()));
    if let Some(split) = r.kodaira.split() {
        m.insert("split".into(), json!(split));
    }
    m.insert("c".into(), json!(r.tamagawa));
    m.insert("vdelta".into(), json!(r.vdisc_min));
    Value::Object(m)
}

pub fn check11_symbolic(perturb: bool) -> Outcome {
    let delta = check_delta_identity_11(perturb);
    let mut pass = delta.holds_mod_f11;
    let rescalings: Vec<Value> = [Rescaling::ByS, Rescaling::BySRm1]
        .into_iter()
        .map(|r| {
            let rep = check_rescaling(r, perturb);
            pass &= rep.rescaling_exact && rep.closed_form_holds;
            json!({
                "transform": rep.rescaling.label(),
                "rescaling_exact": rep.rescaling_exact,
                "closed_form_remainder": rep.closed_form_remainder,
                "closed_form_holds": rep.closed_form_holds,
                "coefficients": rep.coefficients,
                "differs_from_printed_model": rep.printed_mismatches,
                "pass": rep.rescaling_exact && rep.closed_form_holds,
            })
        })
        .collect();
    let report = json!({
        "command": "check11-symbolic",
        "perturb": perturb,
        "delta_identity": {
            "remainder": delta.remainder,
            "holds_mod_f11": delta.holds_mod_f11,
            "holds_identically": delta.holds_identically,
            "pass": delta.holds_mod_f11,
        },
        "rescalings": rescalings,
        "pass": pass,
    });
    Outcome {
        stdout: to_json_line(&report),
        pass,
    }
}

fn padic_case(case: ValuationCase, p: u64, m: u32) -> Value {
    let mut row = Map::new();
    row.insert("p".into(), json!(p));
    row.insert("m".into(), json!(m));
    row.insert("case".into(), json!(case.to_string()));
    let result = (|| -> tamagawa::Result<bool> {
        match realize_padic_case(case, p, m)? {
            Realization::Infeasible(cert) => {
                let slopes: Vec<String> = cert
                    .polygon
                    .segments
                    .iter()
                    .map(|s| s.slope.to_string())
                    .collect();
                let min = cert.polygon.min_root_valuation().expect("nonempty polygon");
                row.insert("infeasible".into(), json!(true));
                row.insert("newton_slopes".into(), json!(slopes));
                row.insert("min_root_valuation".into(), json!(min.to_string()));
                Ok(case == ValuationCase::D && *min.numer() >= 0)
            }
            Realization::Point(pt) => {
                let vr = pt.point.r.valuation().unwrap_or(i64::MAX);
                let vs = pt.point.s.valuation().unwrap_or(i64::MAX);
                let e = build_e_rs(&pt.field, &pt.point)?;
                let ctx = PadicContext::new(pt.field.clone())?;
                let red = tate_reduce(&e, &ctx)?;
                let n = 11 * i64::from(m);
                row.insert("v_r".into(), json!(vr));
                row.insert("v_s".into(), json!(vs));
                row.insert("precision".into(), json!(pt.field.precision()));
                row.insert("reduction".into(), reduction_json(&red));
                let valuations_ok = match case {
                    ValuationCase::A => vr == -2 * vs && vs < 0,
                    ValuationCase::B => vr == i64::from(m) && vs == 2 * vr,
                    ValuationCase::C => vr == 3 * vs && vs < 0,
                    ValuationCase::D => false,
                };
                let reduction_ok = red.kodaira
                    == KodairaType::In {
                        n: n as u32,
                        split: true,
                    }
                    && red.vdisc_min == n
                    && red.tamagawa == n as u64
                    && red.tamagawa % 11 == 0;
                Ok(valuations_ok && reduction_ok)
            }
        }
    })();
    let pass = match result {
        Ok(pass) => pass,
        Err(e) => {
            row.insert("error".into(), json!(e.to_string()));
            false
        }
    };
    row.insert("pass".into(), json!(pass));
    Value::Object(row)
}

pub fn check11_padic(primes: &[u64], orders: &[u32]) -> Result<Outcome, CliError> {
    for &p in primes {
        if p < 5 || PrimeField::new(p).is_err() {
            return Err(CliError::Usage(format!("{p} is not a prime >= 5")));
        }
    }
    if let Some(m) = orders.iter().find(|&&m| m == 0 || m > MAX_POLE_ORDER) {
        return Err(CliError::Usage(format!(
            "pole order {m} outside 1..={MAX_POLE_ORDER}"
        )));
    }
    if primes.is_empty() || orders.is_empty() {
        return Err(CliError::Usage(
            "need at least one prime and one pole order".into(),
        ));
    }
    let mut cases = Vec::new();
    for &p in primes {
        for &m in orders {
            for case in ValuationCase::ALL {
                cases.push(padic_case(case, p, m));
            }
        }
    }
    let (summary, pass) = summary(&cases);
    let report = json!({
        "command": "check11-padic",
        "primes": primes,
        "pole_orders": orders,
        "cases": cases,
        "summary": summary,
        "pass": pass,
    });
    Ok(Outcome {
        stdout: to_json_line(&report),
        pass,
    })
}

fn ff_row(p: u64, index: usize, f: &tamagawa::arith::RatFunc<u64>, tsv: &mut String) -> Value {
    let k = function_field(p).expect("family prime");
    let f_text = k.format(f);
    let mut row = Map::new();
    row.insert("index".into(), json!(index));
    row.insert("f".into(), json!(f_text));
    let result = (|| -> tamagawa::Result<bool> {
        let fam = build_ff_family(p, f)?;
        let model = &fam.model;
        let formula_ok = family_discriminant_formula(p, f)? == model.discriminant();
        let g = global_tamagawa(model)?;
        let pb = BigUint::from(p);
        let p_divides = (&g.c % &pb).is_zero();
        let cube_ok = p != 11 || (&g.c % pb.pow(3)).is_zero();
        let cond = power_conditions(model)?;
        let zero = k.zero();
        let origin = model.point(zero.clone(), zero)?;
        let order = model.point_order(&origin, DEFAULT_ORDER_BOUND)?;
        let mut fast_applicable = 0usize;
        let mut fast_agree = true;
        let mut split_divisible = true;
        for place in &g.places {
            let res = &place.result;
            let ctx = FunctionFieldPlace::new(k.clone(), place.place.clone())?;
            if let Some(fast) = observation_fastpath(model, &ctx).ok().flatten() {
                fast_applicable += 1;
                fast_agree &= fast.summary() == res.summary();
            }
            if res.kodaira.split() == Some(true) {
                split_divisible &= res.vdisc_min % p as i64 == 0 && res.tamagawa % p == 0;
            }
            let split = res
                .kodaira
                .split()
                .map_or("-".to_string(), |s| s.to_string());
            tsv.push_str(&format!(
                "{p}\t{f_text}\t{}\t{}\t{}\t{split}\t{}\t{}\n",
                place.place,
                place.place.degree(),
                res.kodaira,
                res.vdisc_min,
                res.tamagawa
            ));
        }
        row.insert("c".into(), json!(g.c.to_string()));
        row.insert("bad_places".into(), json!(g.places.len()));
        row.insert(
            "assertions".into(),
            json!({
                "p_divides_c": p_divides,
                "p_cubed_divides_c": if p == 11 { json!(cube_ok) } else { Value::Null },
                "delta_formula": formula_ok,
                "j_nonconstant": cond.j_nonconstant,
                "j_is_pth_power": cond.j_is_pth_power,
                "hasse_is_pminus1_power": cond.hasse_is_pminus1_power,
                "origin_order": order,
                "fastpath_places": fast_applicable,
                "fastpath_agrees": fast_agree,
                "split_places_divisible": split_divisible,
            }),
        );
        Ok(p_divides
            && cube_ok
            && formula_ok
            && cond.j_nonconstant
            && cond.both()
            && order == p
            && fast_agree
            && split_divisible)
    })();
    let pass = match result {
        Ok(pass) => pass,
        Err(e) => {
            row.insert("error".into(), json!(e.to_string()));
            false
        }
    };
    row.insert("pass".into(), json!(pass));
    Value::Object(row)
}

/// Family parameters for `check-ff`: the literal if given, else `count`
/// seeded random nonconstant rational functions.
pub fn ff_parameters(
    p: u64,
    count: usize,
    seed: u64,
    literal: Option<&str>,
) -> Result<Vec<tamagawa::arith::RatFunc<u64>>, CliError> {
    if !FAMILY_PRIMES.contains(&p) {
        return Err(CliError::Usage(format!(
            "p must be one of 5, 7, 11, not {p}"
        )));
    }
    let k = function_field(p)?;
    if let Some(text) = literal {
        let f = parse_element(&k, text)?;
        if k.is_constant(&f) {
            return Err(CliError::Usage(format!("parameter {text:?} is constant")));
        }
        return Ok(vec![f]);
    }
    if count > MAX_COUNT {
        return Err(CliError::Usage(format!("count exceeds {MAX_COUNT}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Ok(random_parameter(p, &mut rng, PARAMETER_DEGREE)?))
        .collect()
}

pub fn check_ff(
    p: u64,
    count: usize,
    seed: u64,
    literal: Option<&str>,
) -> Result<FfOutcome, CliError> {
    let params = ff_parameters(p, count, seed, literal)?;
    let mut tsv = String::from(TSV_HEADER);
    tsv.push('\n');
    let cases: Vec<Value> = params
        .iter()
        .enumerate()
        .map(|(i, f)| ff_row(p, i, f, &mut tsv))
        .collect();
    let (summary, pass) = summary(&cases);
    let report = json!({
        "command": "check-ff",
        "p": p,
        "seed": seed,
        "count": params.len(),
        "cases": cases,
        "summary": summary,
        "pass": pass,
    });
    Ok(FfOutcome { tsv, report, pass })
}

fn reduce_with<C: LocalContext>(
    model: &tamagawa::weierstrass::WeierstrassModel<C::F>,
    ctx: &C,
) -> Result<Value, CliError> {
    Ok(reduction_json(&tate_reduce(model, ctx)?))
}

pub fn tamagawa_at(curve_json: &str, place_text: &str) -> Result<Outcome, CliError> {
    let curve = parse_curve_json(curve_json)?;
    let place = parse_place(&curve, place_text)?;
    let value = match &curve {
        Curve::Rationals(model) => reduce_with(model, &RationalPrime::for_place(&place)?)?,
        Curve::FunctionField(model) => {
            let ctx = FunctionFieldPlace::new(model.ring().clone(), place)?;
            reduce_with(model, &ctx)?
        }
        Curve::NumberField(_) => unreachable!("parse_place rejects number field places"),
    };
    let mut stdout = serde_json::to_string(&value)?;
    stdout.push('\n');
    Ok(Outcome { stdout, pass: true })
}

pub fn torsion_order_fixture(label: &str) -> Result<Outcome, CliError> {
    let fx = krumm_fixture(label)?;
    let n = fx.model.point_order(&fx.point, DEFAULT_ORDER_BOUND)?;
    Ok(Outcome {
        stdout: format!("{n}\n"),
        pass: n == fx.expected_order,
    })
}

pub fn torsion_order_curve(curve_json: &str, point: &str) -> Result<Outcome, CliError> {
    let curve = parse_curve_json(curve_json)?;
    let n = match &curve {
        Curve::Rationals(m) => m.point_order(&parse_point(m, point)?, DEFAULT_ORDER_BOUND)?,
        Curve::FunctionField(m) => m.point_order(&parse_point(m, point)?, DEFAULT_ORDER_BOUND)?,
        Curve::NumberField(m) => m.point_order(&parse_point(m, point)?, DEFAULT_ORDER_BOUND)?,
    };
    Ok(Outcome {
        stdout: format!("{n}\n"),
        pass: true,
    })
}
