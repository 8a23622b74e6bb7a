use std::fmt::Write;
use std::time::{Duration, Instant};

use fibcube_core::size_formulas::Sizes;
use fibcube_core::{BigNat, Method};
use serde_json::json;

use crate::args::{BenchArgs, Format};
use crate::{deliver, require_format, resolve_budget, to_json_text, validate_family, CliError, CliResult, Output};

struct Timing {
    method: Method,
    min: Duration,
    median: Duration,
}

pub fn run(args: &BenchArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Plain, Format::Json], "bench")?;
    let family = validate_family(args.family.family())?;
    let budget = resolve_budget(args.budget)?;
    let n = args.n;
    let mut methods = args.methods.clone();
    methods.dedup();
    if methods.is_empty() {
        return Err(CliError::Usage("--methods must name at least one method".into()));
    }
    for m in &methods {
        if !m.in_domain(family, n) {
            return Err(CliError::Usage(format!(
                "{m}: n = {n} is out of range: requires n >= {}",
                m.domain_start(family)
            )));
        }
    }

    // correctness gate before any timing
    let mut value: Option<(Method, BigNat)> = None;
    for &m in &methods {
        let v = Sizes::new(family)?.evaluate(m, n, budget)?;
        match &value {
            None => value = Some((m, v)),
            Some((ref_m, ref_v)) if *ref_v != v => {
                return Err(CliError::Failure(format!(
                    "{m} gives {v} but {ref_m} gives {ref_v} for {family} at n = {n}"
                )));
            }
            Some(_) => {}
        }
    }
    let (_, value) = value.expect("at least one method");

    let mut timings = Vec::new();
    for &m in &methods {
        let mut samples = Vec::with_capacity(args.reps as usize);
        for _ in 0..args.reps {
            let start = Instant::now();
            let mut sizes = Sizes::new(family)?;
            let v = sizes.evaluate(m, n, budget)?;
            samples.push(start.elapsed());
            debug_assert_eq!(v, value);
        }
        samples.sort();
        timings.push(Timing {
            method: m,
            min: samples[0],
            median: samples[samples.len() / 2],
        });
    }

    let text = match args.format {
        Format::Json => {
            let rows: Vec<_> = timings
                .iter()
                .map(|t| {
                    json!({
                        "method": t.method.name(),
                        "min_ns": t.min.as_nanos() as u64,
                        "median_ns": t.median.as_nanos() as u64,
                    })
                })
                .collect();
            to_json_text(&json!({
                "family": family.kind(),
                "k_or_p": family.parameter(),
                "n": n,
                "value": value.to_string(),
                "reps": args.reps,
                "timings": rows,
            }))
        }
        _ => {
            let mut s = format!("value {value}\n");
            writeln!(s, "{:<8}{:>14}{:>14}", "method", "min", "median").unwrap();
            for t in &timings {
                writeln!(
                    s,
                    "{:<8}{:>14}{:>14}",
                    t.method.name(),
                    format!("{:.3?}", t.min),
                    format!("{:.3?}", t.median)
                )
                .unwrap();
            }
            s
        }
    };
    deliver(Output::text(text), args.out.output.as_deref())
}
