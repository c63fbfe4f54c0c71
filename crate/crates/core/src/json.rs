//! JSON encodings shared by the library and the command-line front end.
//!
//! Rationals are strings `"p/q"` (plain integers are also accepted on input),
//! polynomials are arrays of rationals by ascending degree.

use serde_json::{json, Map, Value};

use crate::clifford::{Blade, Multivector, QuadraticSpace};
use crate::degeneration::SpecializationWitness;
use crate::error::{Error, Result};
use crate::lipschitz::{LipschitzReport, Verdict};
use crate::local_models::{MatrixTuple, TraceFingerprint};
use crate::linalg::Matrix;
use crate::plethysm::{Constituent, PlethysmReport};
use crate::ring::{format_rational, parse_rational, Coefficient, Poly, RatFunc, Rational};
use crate::tensor::AlgebraTensor;
use crate::weight::{Weight, WeightMultiset};

/// Parses text into a JSON value, reporting line and column on failure.
pub fn parse(text: &str) -> Result<Value> {
    // serde_json's message already ends with "at line L column C".
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {msg}"))
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(path, format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn usize_of(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| err(path, "expected a nonnegative integer"))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| err(path, e)),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_int(n.as_i64().unwrap())),
        _ => Err(err(path, "expected a rational string \"p/q\" or an integer")),
    }
}

pub fn weight_to_json(w: &[Rational]) -> Value {
    Value::Array(w.iter().map(rational_to_json).collect())
}

pub fn weight_from_json(v: &Value, path: &str) -> Result<Weight> {
    array(v, path)?.iter().enumerate().map(|(i, x)| rational_from_json(x, &format!("{path}[{i}]"))).collect()
}

pub fn poly_to_json(p: &Poly) -> Value {
    weight_to_json(p.coeffs())
}

pub fn poly_from_json(v: &Value, path: &str) -> Result<Poly> {
    Ok(Poly::new(weight_from_json(v, path)?))
}

/// A polynomial array, a constant, or `{"num": [...], "den": [...]}`.
pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    if f.is_polynomial() {
        poly_to_json(f.num())
    } else {
        json!({ "num": poly_to_json(f.num()), "den": poly_to_json(f.den()) })
    }
}

pub fn ratfunc_from_json(v: &Value, path: &str) -> Result<RatFunc> {
    match v {
        Value::Array(_) => Ok(RatFunc::from_poly(poly_from_json(v, path)?)),
        Value::Object(_) => {
            let num = poly_from_json(field(v, "num", path)?, &format!("{path}.num"))?;
            let den = poly_from_json(field(v, "den", path)?, &format!("{path}.den"))?;
            if den.is_zero() {
                return Err(err(path, "zero denominator"));
            }
            Ok(RatFunc::new(num, den))
        }
        _ => Ok(RatFunc::from_poly(Poly::constant(rational_from_json(v, path)?))),
    }
}

fn matrix_entries<C>(v: &Value, path: &str, parse: impl Fn(&Value, &str) -> Result<C>) -> Result<Vec<Vec<C>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            array(row, &p)?.iter().enumerate().map(|(j, x)| parse(x, &format!("{p}[{j}]"))).collect()
        })
        .collect()
}

fn space_from_json_with<C: Coefficient>(
    v: &Value,
    parse: impl Fn(&Value, &str) -> Result<C>,
) -> Result<QuadraticSpace<C>> {
    let m = usize_of(field(v, "m", "$")?, "$.m")?;
    let gram = matrix_entries(field(v, "Q", "$")?, "$.Q", parse)?;
    if gram.len() != m || gram.iter().any(|r| r.len() != m) {
        return Err(err("$.Q", format!("expected a {m}×{m} matrix")));
    }
    QuadraticSpace::new(gram)
}

/// `{"m": m, "Q": [[...]]}` with rational entries.
pub fn space_from_json(v: &Value) -> Result<QuadraticSpace<Rational>> {
    space_from_json_with(v, rational_from_json)
}

/// `{"m": m, "Q": [[...]]}` with entries in `ℚ(t)`.
pub fn family_from_json(v: &Value) -> Result<QuadraticSpace<RatFunc>> {
    space_from_json_with(v, ratfunc_from_json)
}

pub fn space_to_json(q: &QuadraticSpace<Rational>) -> Value {
    json!({
        "m": q.dim(),
        "Q": q.gram().iter().map(|r| weight_to_json(r)).collect::<Vec<_>>(),
    })
}

pub fn family_to_json(q: &QuadraticSpace<RatFunc>) -> Value {
    json!({
        "m": q.dim(),
        "Q": q.gram().iter().map(|r| r.iter().map(ratfunc_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn blade_key(b: Blade) -> String {
    let idx: Vec<String> = b.indices().iter().map(|i| i.to_string()).collect();
    format!("[{}]", idx.join(","))
}

/// `{"[1,3]": "2", "[]": "1/2"}`.
pub fn multivector_to_json(x: &Multivector<Rational>) -> Value {
    let mut map = Map::new();
    for (b, c) in x.terms() {
        map.insert(blade_key(*b), rational_to_json(c));
    }
    Value::Object(map)
}

pub fn multivector_from_json(v: &Value) -> Result<Multivector<Rational>> {
    let obj = v.as_object().ok_or_else(|| err("$", "expected an object of blade → coefficient"))?;
    let mut x = Multivector::zero();
    for (key, c) in obj {
        let path = format!("$[{key:?}]");
        let idx: Vec<usize> = serde_json::from_str(key).map_err(|_| err(&path, "blade key must look like [1,3]"))?;
        let blade = Some(&idx)
            .filter(|idx| idx.windows(2).all(|w| w[0] < w[1]))
            .and_then(|idx| Blade::from_indices(idx))
            .ok_or_else(|| err(&path, "blade indices must be strictly increasing and at least 1"))?;
        x.add_term(blade, rational_from_json(c, &path)?);
    }
    Ok(x)
}

pub fn tensor_to_json(t: &AlgebraTensor<Rational>) -> Value {
    tensor_to_json_with(t, rational_to_json)
}

/// Same layout with a caller-chosen coefficient encoding.
pub fn tensor_to_json_with<C: Coefficient>(t: &AlgebraTensor<C>, enc: impl Fn(&C) -> Value) -> Value {
    let c: Vec<Value> = t.entries().map(|(i, j, k, c)| json!([i, j, k, enc(c)])).collect();
    json!({ "dim": t.dim(), "identity": t.identity(), "c": c })
}

pub fn tensor_from_json(v: &Value) -> Result<AlgebraTensor<Rational>> {
    let dim = usize_of(field(v, "dim", "$")?, "$.dim")?;
    let identity = usize_of(field(v, "identity", "$")?, "$.identity")?;
    let mut entries = Vec::new();
    for (n, e) in array(field(v, "c", "$")?, "$.c")?.iter().enumerate() {
        let path = format!("$.c[{n}]");
        let e = array(e, &path)?;
        if e.len() != 4 {
            return Err(err(&path, "expected [i, j, k, coefficient]"));
        }
        entries.push((
            usize_of(&e[0], &path)?,
            usize_of(&e[1], &path)?,
            usize_of(&e[2], &path)?,
            rational_from_json(&e[3], &path)?,
        ));
    }
    AlgebraTensor::from_entries(dim, identity, entries)
}

pub fn matrix_to_json(m: &Matrix<Rational>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| weight_to_json(r)).collect())
}

pub fn matrix_from_json(v: &Value, path: &str) -> Result<Matrix<Rational>> {
    let rows = matrix_entries(v, path, rational_from_json)?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(err(path, "expected a nonempty rectangular matrix"));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn tuple_to_json(t: &MatrixTuple) -> Value {
    json!({
        "g": t.g(),
        "n": t.n(),
        "X": t.matrices().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn tuple_from_json(v: &Value, path: &str) -> Result<MatrixTuple> {
    let g = usize_of(field(v, "g", path)?, &format!("{path}.g"))?;
    let n = usize_of(field(v, "n", path)?, &format!("{path}.n"))?;
    let xs = array(field(v, "X", path)?, &format!("{path}.X"))?;
    if xs.len() != g {
        return Err(err(path, format!("g = {g} but {} matrices given", xs.len())));
    }
    let mats = xs
        .iter()
        .enumerate()
        .map(|(i, x)| matrix_from_json(x, &format!("{path}.X[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    MatrixTuple::new(n, mats).map_err(|e| err(path, e))
}

pub fn weights_to_json(w: &WeightMultiset) -> Value {
    Value::Array(
        w.iter()
            .map(|(wt, k)| json!({ "weight": weight_to_json(wt), "multiplicity": k }))
            .collect(),
    )
}

pub fn fingerprint_to_json(f: &TraceFingerprint) -> Value {
    json!({
        "L": f.max_len,
        "traces": f.traces.iter().map(|(w, c)| json!({ "word": w, "trace": rational_to_json(c) })).collect::<Vec<_>>(),
    })
}

pub fn lipschitz_to_json(r: &LipschitzReport<Rational>, verdict: Verdict) -> Value {
    json!({
        "homogeneous": r.homogeneous,
        "cl0_member": r.cl0_member,
        "norm_scalar": r.norm_scalar.as_ref().map(rational_to_json),
        "verdict": verdict.as_str(),
    })
}

pub fn witness_to_json(w: &SpecializationWitness) -> Value {
    json!({
        "det": ratfunc_to_json(&w.det),
        "special_fiber": tensor_to_json(&w.special_fiber),
        "radical_dim": w.radical.dim,
        "radical_basis": w.radical.basis.iter().map(|v| weight_to_json(v)).collect::<Vec<_>>(),
        "radical_nilpotency_index": w.radical.nilpotency_index,
        "generic_point": rational_to_json(&w.generic_point),
    })
}

fn constituents_to_json(cs: &[Constituent]) -> Value {
    Value::Array(
        cs.iter()
            .map(|c| {
                json!({
                    "highest_weight": weight_to_json(&c.highest_weight),
                    "dim": c.dim.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::String(c.dim.to_string())),
                    "multiplicity": c.multiplicity,
                })
            })
            .collect(),
    )
}

/// The report for one half-spin choice, plus the comparison with the other.
pub fn plethysm_to_json(r: &PlethysmReport, plus: bool) -> Value {
    json!({
        "case": r.case.name(),
        "spin_rank": r.spin_rank,
        "halfspin": if plus { "+" } else { "-" },
        "defining_highest_weight": weight_to_json(&r.defining_highest_weight),
        "constituents": constituents_to_json(if plus { &r.plus } else { &r.minus }),
        "other_halfspin_constituents": constituents_to_json(if plus { &r.minus } else { &r.plus }),
        "halfspin_agree": r.halfspin_agree,
        "representative_invariant": r.representative_invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn parse_errors_carry_position() {
        let e = parse("{\"m\": 3,\n \"Q\": [1, }").unwrap_err();
        assert!(e.to_string().contains("line 2 column"), "{e}");
    }

    #[test]
    fn space_round_trip() {
        let q = QuadraticSpace::new(vec![vec![rat(1, 2), rat(-3, 1)], vec![rat(-3, 1), rat(0, 1)]]).unwrap();
        let v = space_to_json(&q);
        assert_eq!(v["Q"][0][0], "1/2");
        assert_eq!(space_from_json(&v).unwrap(), q);
        let bad = parse(r#"{"m": 2, "Q": [[1, 2], [3, 4]]}"#).unwrap();
        assert!(matches!(space_from_json(&bad), Err(Error::NotSymmetric { .. })));
        let bad = parse(r#"{"m": 2, "Q": [[1, "x"], [3, 4]]}"#).unwrap();
        assert!(space_from_json(&bad).unwrap_err().to_string().contains("$.Q[0][1]"));
    }

    #[test]
    fn family_entries() {
        let v = parse(r#"{"m": 2, "Q": [["1", [0, 1]], [[0, 1], {"num": ["1"], "den": ["1", "1"]}]]}"#).unwrap();
        let f = family_from_json(&v).unwrap();
        assert_eq!(f.gram()[0][1], RatFunc::t());
        assert!(!f.gram()[1][1].is_polynomial());
        assert_eq!(family_from_json(&family_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn multivector_round_trip() {
        let v = parse(r#"{"[1,3]": "2", "[]": "-1/2"}"#).unwrap();
        let x = multivector_from_json(&v).unwrap();
        assert_eq!(x.coeff(Blade::from_indices(&[1, 3]).unwrap()), rat(2, 1));
        assert_eq!(x.scalar_part(), rat(-1, 2));
        assert_eq!(multivector_from_json(&multivector_to_json(&x)).unwrap(), x);
        assert!(multivector_from_json(&parse(r#"{"[3,1]": 1}"#).unwrap()).is_err());
    }

    #[test]
    fn tensor_round_trip() {
        let t = AlgebraTensor::full_matrix_algebra_unital(2);
        assert_eq!(tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn tuple_round_trip() {
        let v = parse(r#"{"g": 1, "n": 2, "X": [[["0", "1"], ["0", "0"]]]}"#).unwrap();
        let t = tuple_from_json(&v, "$").unwrap();
        assert_eq!(tuple_to_json(&t), v);
        let bad = parse(r#"{"g": 2, "n": 2, "X": [[["0", "1"], ["0", "0"]]]}"#).unwrap();
        assert!(tuple_from_json(&bad, "$").is_err());
    }
}
