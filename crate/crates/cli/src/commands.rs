use std::time::Instant;

use cliffdeg::clifford::QuadraticSpace;
use cliffdeg::degeneration::certify_specialization;
use cliffdeg::json::{
    family_from_json, family_to_json, fingerprint_to_json, lipschitz_to_json, matrix_from_json, multivector_from_json,
    plethysm_to_json, rational_to_json, ratfunc_to_json, space_from_json, space_to_json, tensor_from_json,
    tensor_to_json, tensor_to_json_with, tuple_from_json, weight_from_json, weights_to_json, witness_to_json,
};
use cliffdeg::lie::{reconstruct_form, reconstruct_from_tensor, structure_constants, theta_tensor};
use cliffdeg::lipschitz::{classify, infinitesimal_lipschitz, DoubledAlgebra};
use cliffdeg::local_models::{
    algebra_span, centralizer_dim, is_cyclic_vector, s_equivalent, sl2_basis, trace_fingerprint, MatrixTuple,
};
use cliffdeg::plethysm::{verify_plethysm, PlethysmCase};
use cliffdeg::ring::{RatFunc, Rational, Specialize};
use cliffdeg::selftest::{self, random};
use cliffdeg::spinor::{
    central_involution_check, even_algebra_isomorphism_check, restrict_even_to_odd, spin_weights, SpinPart,
    WittDecomposition,
};
use cliffdeg::Error;
use serde_json::{json, Value};

use crate::input::{read_json, read_point};
use crate::{
    Command, DegenerateCommand, FormCommand, FormType, LipschitzCommand, LocalModelCommand, PlethysmCommand,
    SelftestArgs, SpinorCommand,
};

/// Outcome of a subcommand that ran to completion.
#[derive(Debug)]
pub struct Report {
    pub passed: bool,
    pub payload: Value,
}

impl Report {
    fn new(passed: bool, payload: Value) -> Self {
        Report { passed, payload }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self, subcommand: &str) -> Value {
        json!({
            "subcommand": subcommand,
            "verdict": if self.passed { "pass" } else { "fail" },
            "payload": self.payload,
        })
    }
}

type CmdResult = Result<Report, String>;

/// Input problems are usage errors; anything else means the check ran and failed.
fn triage(e: Error) -> CmdResult {
    match e {
        Error::Parse(_)
        | Error::DimensionMismatch(_)
        | Error::NotSymmetric { .. }
        | Error::IndexOutOfRange { .. }
        | Error::NotInSpan(_) => Err(e.to_string()),
        other => Ok(Report::new(false, json!({ "error": other.to_string() }))),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return triage(e),
        }
    };
}

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Form { action: FormCommand::Reconstruct { .. } } => "form reconstruct",
        Command::Form { action: FormCommand::Tensor { .. } } => "form tensor",
        Command::Spinor { action: SpinorCommand::Check { .. } } => "spinor check",
        Command::Spinor { action: SpinorCommand::Weights { .. } } => "spinor weights",
        Command::Lipschitz { action: LipschitzCommand::Test { .. } } => "lipschitz test",
        Command::Degenerate { action: DegenerateCommand::Analyze { .. } } => "degenerate analyze",
        Command::Plethysm { action: PlethysmCommand::Verify { .. } } => "plethysm verify",
        Command::Localmodel { action: LocalModelCommand::Simple { .. } } => "localmodel simple",
        Command::Localmodel { action: LocalModelCommand::Sequiv { .. } } => "localmodel sequiv",
        Command::Localmodel { action: LocalModelCommand::Centralizer { .. } } => "localmodel centralizer",
        Command::Selftest(_) => "selftest",
    }
}

pub fn dispatch(c: Command) -> CmdResult {
    let start = Instant::now();
    let label = name(&c);
    let out = match c {
        Command::Form { action: FormCommand::Reconstruct { input, m, random, seed, trials } } => {
            if random {
                reconstruct_random(m.unwrap_or(3), seed.unwrap_or(selftest::DEFAULT_SEED), trials)
            } else {
                reconstruct_input(&read_json(&input)?)
            }
        }
        Command::Form { action: FormCommand::Tensor { input, at } } => form_tensor(&read_json(&input)?, at.as_deref()),
        Command::Spinor { action: SpinorCommand::Check { l, ty } } => spinor_check(l, ty),
        Command::Spinor { action: SpinorCommand::Weights { l, ty, halfspin } } => {
            spinor_weights(l, ty, halfspin.as_deref())
        }
        Command::Lipschitz { action: LipschitzCommand::Test { input, infinitesimal } } => {
            lipschitz_test(&read_json(&input)?, infinitesimal)
        }
        Command::Degenerate { action: DegenerateCommand::Analyze { input, at } } => {
            degenerate(&read_json(&input)?, at.as_deref())
        }
        Command::Plethysm { action: PlethysmCommand::Verify { case, halfspin } } => plethysm(&case, halfspin == "+"),
        Command::Localmodel { action: LocalModelCommand::Simple { input } } => simple(&read_json(&input)?),
        Command::Localmodel { action: LocalModelCommand::Sequiv { input, max_len, fingerprints } } => {
            sequiv(&read_json(&input)?, max_len, fingerprints)
        }
        Command::Localmodel { action: LocalModelCommand::Centralizer { input } } => centralizer(&read_json(&input)?),
        Command::Selftest(args) => run_selftest(&args),
    };
    eprintln!("{label}: finished in {:.3}s", start.elapsed().as_secs_f64());
    out
}

fn reconstruct_random(m: usize, seed: u64, trials: usize) -> CmdResult {
    if m < 3 {
        return Err(format!("--m must be at least 3 for reconstruction, got {m}"));
    }
    eprintln!("form reconstruct: seed {seed}, {trials} random form(s) of dimension {m}");
    let mut rng = random::rng(seed);
    let mut results = Vec::new();
    let mut counterexample = Value::Null;
    for _ in 0..trials {
        let q = random::symmetric_form(&mut rng, m);
        let back = tri!(structure_constants(&q).and_then(|l| reconstruct_form(&l)));
        let ok = back == q;
        let entry = json!({ "form": space_to_json(&q), "recovered": space_to_json(&back), "match": ok });
        if !ok && counterexample.is_null() {
            counterexample = entry.clone();
        }
        results.push(entry);
    }
    let passed = counterexample.is_null();
    Ok(Report::new(passed, json!({ "seed": seed, "m": m, "results": results, "counterexample": counterexample })))
}

/// A form (round trip through the bracket table) or a multiplication tensor.
fn reconstruct_input(v: &Value) -> CmdResult {
    if v.get("c").is_some() {
        let t = tri!(tensor_from_json(v));
        let q = tri!(reconstruct_from_tensor(&t));
        let again = tri!(theta_tensor(&q));
        let ok = again == t;
        return Ok(Report::new(ok, json!({ "source": "tensor", "recovered": space_to_json(&q), "tensor_reproduced": ok })));
    }
    let q = tri!(space_from_json(v));
    let back = tri!(structure_constants(&q).and_then(|l| reconstruct_form(&l)));
    let ok = back == q;
    Ok(Report::new(ok, json!({ "source": "form", "form": space_to_json(&q), "recovered": space_to_json(&back), "match": ok })))
}

fn form_tensor(v: &Value, at: Option<&str>) -> CmdResult {
    let family = tri!(family_from_json(v));
    let constant = family.gram().iter().flatten().all(|f| f.is_polynomial() && f.num().is_constant());
    if at.is_some() || constant {
        let c = read_point(at)?;
        let q = tri!(family.specialize(&c));
        let t = tri!(theta_tensor(&q));
        let ok = t.check_unital().is_ok() && t.associativity_defect().is_none();
        let mut payload = json!({ "form": space_to_json(&q), "tensor": tensor_to_json(&t), "associative_unital": ok });
        if at.is_some() {
            payload["at"] = rational_to_json(&c);
        }
        return Ok(Report::new(ok, payload));
    }
    let t = tri!(theta_tensor(&family));
    Ok(Report::new(true, json!({ "form": family_to_json(&family), "tensor": tensor_to_json_with(&t, ratfunc_to_json) })))
}

fn witt(l: usize, ty: FormType) -> Result<WittDecomposition, String> {
    if l == 0 {
        return Err("--l must be positive".into());
    }
    Ok(match ty {
        FormType::B => WittDecomposition::odd(l),
        FormType::D => WittDecomposition::even(l),
    })
}

fn spinor_check(l: usize, ty: FormType) -> CmdResult {
    let w = witt(l, ty)?;
    if w.m() > 12 {
        return Err(format!("dimension {} is beyond the supported range (at most 12)", w.m()));
    }
    let r = even_algebra_isomorphism_check(w);
    let mut passed = r.passed() && r.bijective();
    let mut payload = json!({
        "l": l,
        "type": if w.is_odd() { "B" } else { "D" },
        "algebra_dim": r.algebra_dim,
        "module_dims": r.module_dims,
        "target_dim": r.target_dim,
        "image_rank": r.image_rank,
        "relations_hold": r.relations_hold,
        "homomorphism_holds": r.homomorphism_holds,
        "blocks_respected": r.blocks_respected,
        "bijective": r.bijective(),
        "first_failure": r.first_failure,
    });
    if !w.is_odd() {
        let c = central_involution_check(l);
        passed &= c.passed();
        payload["central_involution"] = json!({
            "squares_to_one": c.squares_to_one,
            "anticommutes_with_vectors": c.anticommutes_with_vectors,
            "plus_scalar": c.plus_scalar.as_ref().map(rational_to_json),
        });
        if l >= 2 {
            let ok = tri!(restrict_even_to_odd(l)).passed();
            passed &= ok;
            payload["restriction_to_odd"] = json!(ok);
        }
    }
    Ok(Report::new(passed, payload))
}

fn spinor_weights(l: usize, ty: FormType, halfspin: Option<&str>) -> CmdResult {
    let w = witt(l, ty)?;
    if l > 16 {
        return Err(format!("--l {l} is beyond the supported range (at most 16)"));
    }
    let part = match halfspin {
        None => SpinPart::Full,
        Some("+") => SpinPart::Plus,
        Some(_) => SpinPart::Minus,
    };
    let weights = spin_weights(w.is_odd(), l, part);
    let expected = if part == SpinPart::Full { 1u64 << l } else { 1u64 << (l - 1) };
    let passed = weights.total() == expected && weights.rank() == Some(l);
    Ok(Report::new(
        passed,
        json!({
            "l": l,
            "type": if w.is_odd() { "B" } else { "D" },
            "part": match part { SpinPart::Full => "full", SpinPart::Plus => "+", SpinPart::Minus => "-" },
            "dim": weights.total(),
            "weights": weights_to_json(&weights),
            "tsv": weights.to_tsv(),
        }),
    ))
}

fn lipschitz_test(v: &Value, infinitesimal: bool) -> CmdResult {
    let q = tri!(space_from_json(v));
    let x = tri!(multivector_from_json(v.get("x").ok_or("missing field \"x\"")?));
    if x.max_index() > q.dim() {
        return Err(format!("x uses generator {} but m = {}", x.max_index(), q.dim()));
    }
    let d = DoubledAlgebra::new(&q);
    let r = tri!(classify(&x, &d));
    let mut payload = lipschitz_to_json(&r, r.verdict(x.is_zero()));
    payload["even"] = json!(r.even);
    let mut passed = true;
    if infinitesimal {
        let inf = tri!(infinitesimal_lipschitz(&q));
        let expected = q.dim() * q.dim().saturating_sub(1) / 2;
        passed = inf.equals_degree_two && inf.spin_dim == expected && !inf.e0_in_spin;
        payload["infinitesimal"] = json!({
            "solution_dim": inf.solutions.len(),
            "equals_degree_two": inf.equals_degree_two,
            "spin_dim": inf.spin_dim,
            "expected_spin_dim": expected,
        });
    }
    Ok(Report::new(passed, payload))
}

fn degenerate(v: &Value, at: Option<&str>) -> CmdResult {
    let family = tri!(family_from_json(v));
    let c = read_point(at)?;
    let shifted: QuadraticSpace<RatFunc> = family.map_coeffs(|f| f.shift(&c));
    if !shifted.gram().iter().flatten().all(|f| f.is_regular_at(&Rational::from_integer(0.into()))) {
        return Ok(Report::new(false, json!({ "at": rational_to_json(&c), "error": "the family has a pole at the special point" })));
    }
    let w = tri!(certify_specialization(&shifted));
    let mut payload = witness_to_json(&w);
    payload["at"] = rational_to_json(&c);
    payload["fiber_dim"] = json!(w.fiber_dim);
    Ok(Report::new(true, payload))
}

fn plethysm(case: &str, plus: bool) -> CmdResult {
    let case: PlethysmCase = case.parse().map_err(|e: Error| e.to_string())?;
    let r = tri!(verify_plethysm(case));
    let passed = r.irreducible() && r.halfspin_agree && r.representative_invariant;
    Ok(Report::new(passed, plethysm_to_json(&r, plus)))
}

fn simple(v: &Value) -> CmdResult {
    let t = tri!(tuple_from_json(v, "$"));
    let span = algebra_span(&t);
    let n2 = t.n() * t.n();
    let mut passed = span.dim == n2;
    let mut payload = json!({
        "n": t.n(),
        "g": t.g(),
        "span_dim": span.dim,
        "rounds": span.rounds,
        "generates_full_algebra": span.dim == n2,
        "cyclic_vector": Value::Null,
    });
    if let Some(vec) = v.get("v") {
        let vec = tri!(weight_from_json(vec, "$.v"));
        let cyclic = tri!(is_cyclic_vector(&t, &vec));
        passed &= cyclic;
        payload["cyclic_vector"] = json!(cyclic);
    }
    Ok(Report::new(passed, payload))
}

fn sequiv(v: &Value, max_len: Option<usize>, fingerprints: bool) -> CmdResult {
    let a = tri!(tuple_from_json(v.get("T1").ok_or("missing field \"T1\"")?, "$.T1"));
    let b = tri!(tuple_from_json(v.get("T2").ok_or("missing field \"T2\"")?, "$.T2"));
    let r = tri!(s_equivalent(&a, &b, max_len));
    let counterexample = match &r.counterexample {
        None => Value::Null,
        Some(word) => {
            let trace = |t: &MatrixTuple| {
                let prod = word.iter().fold(cliffdeg::linalg::Matrix::identity(t.n()), |acc, &i| &acc * &t.matrices()[i - 1]);
                rational_to_json(&prod.trace())
            };
            json!({ "word": word, "trace_T1": trace(&a), "trace_T2": trace(&b) })
        }
    };
    let mut payload = json!({ "L": r.max_len, "equivalent": r.equivalent, "counterexample": counterexample });
    if fingerprints {
        payload["fingerprint_T1"] = fingerprint_to_json(&trace_fingerprint(&a, r.max_len));
        payload["fingerprint_T2"] = fingerprint_to_json(&trace_fingerprint(&b, r.max_len));
    }
    Ok(Report::new(r.equivalent, payload))
}

fn centralizer(v: &Value) -> CmdResult {
    let t = tri!(tuple_from_json(v, "$"));
    let h = match v.get("h") {
        None => return Err("missing field \"h\" (a list of matrices, or \"sl2\")".into()),
        Some(Value::String(s)) if s == "sl2" => sl2_basis(),
        Some(Value::Array(ms)) => {
            tri!(ms.iter().enumerate().map(|(i, m)| matrix_from_json(m, &format!("$.h[{i}]"))).collect::<Result<Vec<_>, _>>())
        }
        Some(_) => return Err("at $.h: expected a list of matrices or \"sl2\"".into()),
    };
    let dim = tri!(centralizer_dim(&t, &h));
    Ok(Report::new(dim == 0, json!({ "centralizer_dim": dim, "h_size": h.len(), "free": dim == 0 })))
}

fn run_selftest(args: &SelftestArgs) -> CmdResult {
    let seed = args.seed.unwrap_or(selftest::DEFAULT_SEED);
    eprintln!("selftest: seed {seed}");
    let ids: Vec<u8> = if args.criteria.is_empty() { selftest::criterion_ids().collect() } else { args.criteria.clone() };
    let mut rows = Vec::new();
    let mut all = true;
    for id in ids {
        let r = selftest::run_criterion(id, seed).ok_or_else(|| format!("unknown criterion {id}"))?;
        eprintln!("{r}");
        all &= r.passed();
        rows.push(json!({
            "id": r.id,
            "title": r.title,
            "passed": r.passed(),
            "correct": r.correct,
            "within_budget": r.within_budget(),
            "budget_secs": r.budget.map(|b| b.as_secs()),
            "detail": r.detail,
            "notes": r.notes,
        }));
    }
    Ok(Report::new(all, json!({ "seed": seed, "criteria": rows })))
}
