use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use fareyzc_core::{
    decompose, extended_farey_sequence, farey_intervals, farey_sequence, min_distance_bruteforce,
    min_distance_farey, oracle_solve, partition_intervals, run_ber, solve, sum_constellation,
    ComplexZcChannel, FadingSpec, NoiseModel, RealZcInstance, Scheme, SimConfig,
};
use serde_json::{json, Value};

use crate::{
    BerArgs, ChannelArgs, CliError, ConstellationArgs, FareyArgs, MindistArgs, OracleArgs,
    SolveArgs,
};

pub const SCHEMA: u64 = 1;
pub const CONSTELLATION_HEADER: &str = "in_phase,quadrature";

enum Target {
    Real(RealZcInstance),
    Complex(ComplexZcChannel),
}

impl Target {
    fn components(&self) -> Result<Vec<(&'static str, RealZcInstance)>, CliError> {
        Ok(match self {
            Target::Real(inst) => vec![("real", *inst)],
            Target::Complex(ch) => {
                let (i, q) = decompose(ch)?;
                vec![("in_phase", i), ("quadrature", q)]
            }
        })
    }

    fn channel_json(&self) -> Value {
        match self {
            Target::Real(_) => Value::Null,
            Target::Complex(ch) => serde_json::to_value(ch).expect("channel serializes"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn resolve(c: ChannelArgs) -> Result<Target, CliError> {
    if let Some(path) = c.channel {
        let text = fs::read_to_string(&path)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
        let ch: ComplexZcChannel = serde_json::from_str(&text)
            .map_err(|e| usage(format!("{}: invalid channel JSON: {e}", path.display())))?;
        ch.validate()?;
        return Ok(Target::Complex(ch));
    }
    let (Some(h11), Some(h21), Some(h22)) = (c.h11, c.h21, c.h22) else {
        return Err(usage(
            "--h11, --h21 and --h22 are required (or --channel FILE)",
        ));
    };
    let m = c.m.ok_or_else(|| usage("--M is required"))?;
    match (c.p1, c.p2) {
        (Some(p1), Some(p2)) => Ok(Target::Real(RealZcInstance::new(
            h11.norm(),
            h21.norm(),
            h22.norm(),
            p1,
            p2,
            m,
        )?)),
        _ => {
            let ch = ComplexZcChannel {
                h11,
                h21,
                h22,
                p1: c.total_p1.unwrap_or(1.0),
                p2: c.total_p2.unwrap_or(1.0),
                m,
                mp: c.mp.unwrap_or(m),
            };
            ch.validate()?;
            Ok(Target::Complex(ch))
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json(out: Option<PathBuf>, value: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    emit(out.as_deref(), &text)
}

fn instance_json(inst: &RealZcInstance) -> Value {
    serde_json::to_value(inst).expect("instance serializes")
}

pub fn solve_cmd(args: SolveArgs) -> Result<(), CliError> {
    let target = resolve(args.channel)?;
    let mut components = Vec::new();
    for (name, inst) in target.components()? {
        let sol = solve(&inst)?;
        let mut v = serde_json::to_value(&sol).expect("solution serializes");
        let obj = v.as_object_mut().expect("solution is an object");
        if !args.trace {
            obj.remove("trace");
        }
        obj.insert("component".into(), json!(name));
        obj.insert("instance".into(), instance_json(&inst));
        components.push(v);
    }
    emit_json(
        args.out,
        &json!({
            "schema": SCHEMA,
            "kind": "solve",
            "channel": target.channel_json(),
            "components": components,
        }),
    )
}

pub fn farey(args: FareyArgs) -> Result<(), CliError> {
    let k = args.k;
    let value = if let Some(l) = args.l {
        let p = partition_intervals(k, l)?;
        json!({"schema": SCHEMA, "kind": "farey_partition", "K": k, "L": l, "u_set": p.u_set, "v_set": p.v_set})
    } else if args.intervals {
        json!({"schema": SCHEMA, "kind": "farey_intervals", "K": k, "intervals": farey_intervals(k)?})
    } else {
        let seq = if args.extended {
            extended_farey_sequence(k)?
        } else {
            farey_sequence(k)?
        };
        json!({"schema": SCHEMA, "kind": "farey", "K": k, "extended": args.extended, "sequence": seq})
    };
    emit_json(args.out, &value)
}

fn check_scalings(w1: f64, w2: f64) -> Result<(), CliError> {
    if !(w1.is_finite() && w1 > 0.0 && w2.is_finite() && w2 > 0.0) {
        return Err(usage("--w1 and --w2 must be finite and positive"));
    }
    Ok(())
}

pub fn mindist(args: MindistArgs) -> Result<(), CliError> {
    check_scalings(args.w1, args.w2)?;
    let target = resolve(args.channel)?;
    let mut components = Vec::new();
    for (name, inst) in target.components()? {
        components.push(json!({
            "component": name,
            "instance": instance_json(&inst),
            "bruteforce": min_distance_bruteforce(&inst, args.w1, args.w2),
            "farey": min_distance_farey(&inst, args.w1, args.w2),
        }));
    }
    emit_json(
        args.out,
        &json!({
            "schema": SCHEMA,
            "kind": "mindist",
            "w1": args.w1,
            "w2": args.w2,
            "channel": target.channel_json(),
            "components": components,
        }),
    )
}

pub fn oracle(args: OracleArgs) -> Result<(), CliError> {
    if args.grid == 0 {
        return Err(usage("--grid must be positive"));
    }
    let target = resolve(args.channel)?;
    let mut components = Vec::new();
    for (name, inst) in target.components()? {
        let sol = solve(&inst)?;
        let reference = oracle_solve(&inst, args.grid);
        components.push(json!({
            "component": name,
            "instance": instance_json(&inst),
            "closed_form": {
                "w1": sol.w1, "w2": sol.w2, "objective": sol.objective, "branch": sol.branch,
            },
            "oracle": {"w1": reference.w1, "w2": reference.w2, "objective": reference.objective},
            "gap": sol.objective - reference.objective,
        }));
    }
    emit_json(
        args.out,
        &json!({
            "schema": SCHEMA,
            "kind": "oracle",
            "grid": args.grid,
            "channel": target.channel_json(),
            "components": components,
        }),
    )
}

pub fn ber(args: BerArgs) -> Result<(), CliError> {
    let scheme: Scheme = args.scheme.parse()?;
    let fading = match (args.vars, args.h11, args.h21, args.h22) {
        (Some([var11, var21, var22]), ..) => FadingSpec::Rayleigh {
            var11,
            var21,
            var22,
        },
        (None, Some(h11), Some(h21), Some(h22)) => FadingSpec::Fixed { h11, h21, h22 },
        _ => {
            return Err(usage(
                "give --vars v11,v21,v22 or a fixed channel --h11 --h21 --h22",
            ))
        }
    };
    let rho = args
        .snr
        .0
        .iter()
        .map(|&db| NoiseModel::from_snr_db(db).rho)
        .collect();
    let mut cfg = SimConfig::new(
        scheme,
        args.m,
        args.mp.unwrap_or(args.m),
        rho,
        args.trials,
        args.symbols,
        args.seed,
    );
    cfg.p1 = args.total_p1;
    cfg.p2 = args.total_p2;
    cfg.validate()?;

    let curve = match args.threads {
        Some(0) => return Err(usage("--threads must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Runtime(e.to_string()))?
            .install(|| run_ber(&cfg, &fading))?,
        None => run_ber(&cfg, &fading)?,
    };

    let mut csv = Vec::new();
    curve.write_csv(&mut csv)?;
    emit(
        args.out.as_deref(),
        std::str::from_utf8(&csv).expect("CSV is ASCII"),
    )?;
    if let Some(path) = &args.streams_out {
        let mut buf = Vec::new();
        curve.write_streams_csv(&mut buf)?;
        emit(Some(path), std::str::from_utf8(&buf).expect("CSV is ASCII"))?;
    }

    // keep stdout clean when it carries the CSV
    let mut log: Box<dyn Write> = if args.out.is_some() {
        Box::new(io::stdout())
    } else {
        Box::new(io::stderr())
    };
    writeln!(
        log,
        "# {scheme}: ber = bit-weighted mean over streams d1_s1, d1_s2, d2_s2"
    )?;
    for (db, row) in args.snr.0.iter().zip(&curve.rows) {
        writeln!(
            log,
            "{scheme} snr_db={db} ber={:.4e} bits={} errors={}",
            row.ber, row.bits, row.errors
        )?;
    }
    Ok(())
}

pub fn constellation(args: ConstellationArgs) -> Result<(), CliError> {
    let target = resolve(args.channel)?;
    let comps = target.components()?;
    // a real channel is dumped as a square QAM with identical rails
    let (rail_i, rail_q) = match comps.as_slice() {
        [(_, inst)] => (*inst, *inst),
        [(_, i), (_, q)] => (*i, *q),
        _ => unreachable!("one or two components"),
    };
    let points = |inst: &RealZcInstance| -> Result<Vec<f64>, CliError> {
        let sol = solve(inst)?;
        let sc = sum_constellation(inst, sol.w1, sol.w2);
        Ok(if args.receiver == 1 {
            sc.receiver1
        } else {
            sc.receiver2
        })
    };
    let (xs, ys) = (points(&rail_i)?, points(&rail_q)?);
    let mut text = String::from(CONSTELLATION_HEADER);
    text.push('\n');
    for x in &xs {
        for y in &ys {
            text.push_str(&format!("{x},{y}\n"));
        }
    }
    emit(args.out.as_deref(), &text)
}
