use std::collections::BTreeMap;
use std::fmt::Write;

use fibcube_core::size_formulas::Sizes;
use fibcube_core::{BigNat, Method};
use serde_json::json;

use crate::args::{Format, MethodArg, SizeArgs};
use crate::{deliver, require_format, resolve_budget, to_json_text, validate_family, CliError, CliResult, Output};

enum Row {
    Value(BigNat),
    Skipped(String),
}

pub fn run(args: &SizeArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Plain, Format::Csv, Format::Json], "size")?;
    let family = validate_family(args.family.family())?;
    let budget = resolve_budget(args.budget)?;
    let n = args.n;
    let all = args.method == MethodArg::All;

    let mut sizes = Sizes::new(family)?;
    let mut rows: BTreeMap<Method, Row> = BTreeMap::new();
    for method in args.method.methods() {
        if all && !method.in_domain(family, n) {
            rows.insert(
                method,
                Row::Skipped(format!("requires n >= {}", method.domain_start(family))),
            );
            continue;
        }
        if all && method == Method::Brute && !budget.admits(n) {
            rows.insert(method, Row::Skipped("exceeds the enumeration budget".into()));
            continue;
        }
        let value = sizes.evaluate(method, n, budget).map_err(|e| {
            let e = CliError::from(e);
            match e {
                CliError::Usage(m) => CliError::Usage(format!("{method}: {m}")),
                other => other,
            }
        })?;
        rows.insert(method, Row::Value(value));
    }

    let computed: Vec<&BigNat> = rows
        .values()
        .filter_map(|r| match r {
            Row::Value(v) => Some(v),
            Row::Skipped(_) => None,
        })
        .collect();
    let agree = computed.windows(2).all(|w| w[0] == w[1]);

    let text = match args.format {
        Format::Json => {
            let values: BTreeMap<&str, Option<String>> = rows
                .iter()
                .map(|(m, r)| {
                    let v = match r {
                        Row::Value(v) => Some(v.to_string()),
                        Row::Skipped(_) => None,
                    };
                    (m.name(), v)
                })
                .collect();
            to_json_text(&json!({
                "family": family.kind(),
                "k_or_p": family.parameter(),
                "n": n,
                "values": values,
                "agreement": agree,
            }))
        }
        Format::Csv => {
            let mut s = String::from("method,value\n");
            for (m, r) in &rows {
                match r {
                    Row::Value(v) => writeln!(s, "{m},{v}").unwrap(),
                    Row::Skipped(_) => writeln!(s, "{m},").unwrap(),
                }
            }
            s
        }
        _ if !all => match rows.values().next() {
            Some(Row::Value(v)) => format!("{v}\n"),
            _ => unreachable!("single explicit method always yields a value"),
        },
        _ => {
            let mut s = String::new();
            for (m, r) in &rows {
                match r {
                    Row::Value(v) => writeln!(s, "{:<7}{v}", m.name()).unwrap(),
                    Row::Skipped(why) => writeln!(s, "{:<7}skipped ({why})", m.name()).unwrap(),
                }
            }
            s.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
            s
        }
    };

    let out = deliver(Output::text(text), args.out.output.as_deref())?;
    if !agree {
        return Err(CliError::Failure(format!(
            "methods disagree for {family} at n = {n}\n{}",
            out.stdout
        )));
    }
    Ok(out)
}
