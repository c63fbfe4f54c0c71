use std::io::Read;

use cliffdeg::json::parse;
use cliffdeg::ring::{parse_rational, Rational};
use serde_json::Value;

use crate::InputArgs;

/// Reads and parses the JSON input; errors are usage errors.
pub fn read_json(args: &InputArgs) -> Result<Value, String> {
    let text = match (&args.input, &args.json) {
        (_, Some(inline)) => inline.clone(),
        (Some(path), None) if path == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
            s
        }
        (Some(path), None) => std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?,
        (None, None) => return Err("no input: pass --input FILE|- or --json TEXT".into()),
    };
    parse(&text).map_err(|e| e.to_string())
}

pub fn read_point(at: Option<&str>) -> Result<Rational, String> {
    match at {
        None => Ok(Rational::from_integer(0.into())),
        Some(s) => parse_rational(s).map_err(|e| format!("--at: {e}")),
    }
}
