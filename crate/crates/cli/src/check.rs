//! `--check`: validates JSON and CSV files written by the other subcommands.

use std::fs;
use std::path::Path;

use fareyzc_core::sim::{CSV_HEADER, STREAMS_CSV_HEADER};
use fareyzc_core::{Fraction, Scheme};
use serde_json::Value;

use crate::commands::{CONSTELLATION_HEADER, SCHEMA};
use crate::CliError;

fn invalid(path: &Path, msg: impl std::fmt::Display) -> CliError {
    CliError::Runtime(format!("{}: {msg}", path.display()))
}

pub fn run(path: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(path).map_err(|e| invalid(path, e))?;
    let summary = if text.trim_start().starts_with('{') {
        check_json(&text)
    } else {
        check_csv(&text)
    }
    .map_err(|m| invalid(path, m))?;
    println!("ok: {summary}");
    Ok(())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

fn number(v: &Value, key: &str) -> Result<f64, String> {
    field(v, key)?
        .as_f64()
        .ok_or_else(|| format!("field {key:?} is not a number"))
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, String> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| format!("field {key:?} is not an array"))
}

fn fraction(v: &Value) -> Result<Fraction, String> {
    v.as_str()
        .ok_or("fraction is not a string")?
        .parse()
        .map_err(|e| format!("{e}"))
}

fn intervals(list: &[Value]) -> Result<(), String> {
    for iv in list {
        let lo = fraction(field(iv, "lo")?)?;
        let hi = fraction(field(iv, "hi")?)?;
        if lo >= hi {
            return Err(format!("interval {lo}..{hi} is not increasing"));
        }
    }
    Ok(())
}

fn check_json(text: &str) -> Result<String, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let schema = field(&v, "schema")?.as_u64();
    if schema != Some(SCHEMA) {
        return Err(format!("unsupported schema {schema:?}"));
    }
    let kind = field(&v, "kind")?
        .as_str()
        .ok_or("field \"kind\" is not a string")?;
    match kind {
        "solve" | "mindist" | "oracle" => {
            let comps = array(&v, "components")?;
            if comps.is_empty() || comps.len() > 2 {
                return Err(format!("expected 1 or 2 components, found {}", comps.len()));
            }
            for c in comps {
                let inst = field(c, "instance")?;
                for key in ["g11", "g21", "g22", "p1", "p2", "M"] {
                    number(inst, key)?;
                }
                match kind {
                    "solve" => {
                        for key in ["w1", "w2", "objective"] {
                            number(c, key)?;
                        }
                        field(c, "branch")?
                            .as_str()
                            .ok_or("branch is not a string")?
                            .parse::<fareyzc_core::Branch>()
                            .map_err(|e| e.to_string())?;
                        field(c, "scenario")?;
                    }
                    "mindist" => {
                        for route in ["bruteforce", "farey"] {
                            let r = field(c, route)?;
                            for key in ["d1_min", "d2_min", "objective"] {
                                number(r, key)?;
                            }
                        }
                    }
                    _ => {
                        number(field(c, "closed_form")?, "objective")?;
                        number(field(c, "oracle")?, "objective")?;
                        number(c, "gap")?;
                    }
                }
            }
            Ok(format!("{kind} JSON, {} component(s)", comps.len()))
        }
        "farey" => {
            let seq = array(&v, "sequence")?;
            let fracs = seq.iter().map(fraction).collect::<Result<Vec<_>, _>>()?;
            if fracs.windows(2).any(|w| w[0] >= w[1]) {
                return Err("sequence is not strictly ascending".into());
            }
            Ok(format!("farey JSON, {} terms", fracs.len()))
        }
        "farey_intervals" => {
            let list = array(&v, "intervals")?;
            intervals(list)?;
            Ok(format!("farey_intervals JSON, {} intervals", list.len()))
        }
        "farey_partition" => {
            let (u, w) = (array(&v, "u_set")?, array(&v, "v_set")?);
            intervals(u)?;
            intervals(w)?;
            Ok(format!(
                "farey_partition JSON, {} + {} intervals",
                u.len(),
                w.len()
            ))
        }
        other => Err(format!("unknown kind {other:?}")),
    }
}

fn check_csv(text: &str) -> Result<String, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| format!("invalid CSV: {e}"))?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    let kind = match header.as_str() {
        h if h == CSV_HEADER => "ber",
        h if h == STREAMS_CSV_HEADER => "ber_streams",
        h if h == CONSTELLATION_HEADER => "constellation",
        other => return Err(format!("unrecognised CSV header {other:?}")),
    };
    let mut rows = 0;
    for record in reader.records() {
        let r = record.map_err(|e| format!("invalid CSV: {e}"))?;
        let line = rows + 2;
        let num = |i: usize| -> Result<f64, String> {
            r.get(i)
                .and_then(|s| s.parse::<f64>().ok())
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("line {line}: column {} is not a finite number", i + 1))
        };
        let count = |i: usize| -> Result<u64, String> {
            r.get(i)
                .and_then(|s| s.parse::<u64>().ok())
                .ok_or_else(|| format!("line {line}: column {} is not a count", i + 1))
        };
        match kind {
            "constellation" => {
                num(0)?;
                num(1)?;
            }
            _ => {
                r.get(0)
                    .unwrap_or_default()
                    .parse::<Scheme>()
                    .map_err(|e| format!("line {line}: {e}"))?;
                if !(num(1)? > 0.0) {
                    return Err(format!("line {line}: rho must be positive"));
                }
                num(2)?;
                let (ber_col, bits_col, err_col) =
                    if kind == "ber" { (3, 4, 5) } else { (4, 5, 6) };
                let (ber, bits, errors) = (num(ber_col)?, count(bits_col)?, count(err_col)?);
                if bits == 0 || errors > bits {
                    return Err(format!(
                        "line {line}: need 0 <= errors <= bits and bits > 0"
                    ));
                }
                if (ber - errors as f64 / bits as f64).abs() > 1e-12 {
                    return Err(format!("line {line}: ber does not equal errors / bits"));
                }
                if kind == "ber_streams" {
                    let stream = r.get(3).unwrap_or_default();
                    if !["d1_s1", "d1_s2", "d2_s2"].contains(&stream) {
                        return Err(format!("line {line}: unknown stream {stream:?}"));
                    }
                    if count(8)? > count(7)? {
                        return Err(format!("line {line}: symbol errors exceed symbols"));
                    }
                }
            }
        }
        rows += 1;
    }
    if rows == 0 {
        return Err("no data rows".into());
    }
    Ok(format!("{kind} CSV, {rows} rows"))
}
