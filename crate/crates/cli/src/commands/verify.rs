use std::fmt::Write;

use fibcube_core::cube_graphs::{check_decomposition, construct};
use fibcube_core::identities::{sweep, SweepRanges};
use fibcube_core::size_formulas::cross_check;
use fibcube_core::{golden, BigNat, Budget, Family, Method};
use serde::Serialize;
use serde_json::json;

use crate::args::{Format, VerifyArgs};
use crate::{deliver, require_format, resolve_budget, to_json_text, CliError, CliResult, Output};

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn run(args: &VerifyArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Plain, Format::Json], "verify")?;
    let budget = resolve_budget(args.budget)?;
    let (k_max, p_max) = match (args.k_max, args.p_max) {
        (None, None) => (Some(5), Some(4)),
        other => other,
    };
    if let Some(k) = k_max.filter(|&k| k < 2) {
        return Err(CliError::Usage(format!("--k-max {k} is out of range: requires k >= 2")));
    }
    if let Some(p) = p_max.filter(|&p| p < 1) {
        return Err(CliError::Usage(format!("--p-max {p} is out of range: requires p >= 1")));
    }
    let n_max = args.n_max;
    let mut checks = Vec::new();

    if let Some(k_max) = k_max {
        for k in 2..=k_max {
            checks.push(equivalence(Family::KOrder(k), n_max, args.with_brute, budget)?);
            if args.with_brute {
                checks.push(orders(Family::KOrder(k), n_max, budget)?);
                for n in k..=n_max {
                    let report = check_decomposition(k, n, budget)?;
                    let detail = match report.failures.first() {
                        None => format!(
                            "block sizes {:?}",
                            report.blocks.iter().map(|b| b.size).collect::<Vec<_>>()
                        ),
                        Some(first) => first.clone(),
                    };
                    checks.push(Check::new(format!("decomposition k={k} n={n}"), report.passed(), detail));
                }
            }
            if golden::K_RANGE.contains(&k) {
                checks.push(golden_check(k, n_max, budget)?);
            }
        }
    }

    if let Some(p_max) = p_max {
        for p in 1..=p_max {
            checks.push(equivalence(Family::PCube(p), n_max, args.with_brute, budget)?);
            if args.with_brute {
                checks.push(orders(Family::PCube(p), n_max, budget)?);
            }
        }
        let p1 = cross_check(Family::PCube(1), 0, n_max, &[Method::Iterative], false, budget)?;
        let k2 = cross_check(Family::KOrder(2), 0, n_max, &[Method::Iterative], false, budget)?;
        let same = p1.methods[&Method::Iterative] == k2.methods[&Method::Iterative];
        checks.push(Check::new(
            format!("coincidence p=1 vs k=2 n=0..{n_max}"),
            same,
            "p-cube and k-order edge counts for the classic Fibonacci cube",
        ));
    }

    let identities = match k_max {
        Some(k_max) => {
            let s = sweep(&SweepRanges::bounded(k_max, n_max))?;
            let detail = match s.first_failure() {
                None => format!("{} of {} hold", s.held(), s.total()),
                Some(r) => format!("fails at {r}"),
            };
            checks.push(Check::new(format!("identities k<={k_max} n<={n_max}"), s.all_hold(), detail));
            Some(s)
        }
        None => None,
    };

    let passed = checks.iter().all(|c| c.passed);
    let text = match args.format {
        Format::Json => to_json_text(&json!({
            "checks": checks,
            "identities": identities.map(|s| s.to_json()),
            "passed": passed,
        })),
        _ => {
            let mut s = String::new();
            for c in &checks {
                writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if passed {
                writeln!(s, "all {} checks passed", checks.len()).unwrap();
            } else {
                writeln!(s, "{failed} of {} checks failed", checks.len()).unwrap();
            }
            s
        }
    };
    let out = deliver(Output::text(text), args.out.output.as_deref())?;
    if let Some(first) = checks.iter().find(|c| !c.passed) {
        return Err(CliError::Failure(format!(
            "{}first failure: {}: {}",
            out.stdout, first.name, first.detail
        )));
    }
    Ok(out)
}

fn equivalence(family: Family, n_max: usize, with_brute: bool, budget: Budget) -> CliResult<Check> {
    let report = cross_check(family, 0, n_max, &Method::FORMULAS, with_brute, budget)?;
    let methods: Vec<&str> = report.methods.keys().map(|m| m.name()).collect();
    let detail = match &report.first_discrepancy {
        None => format!("methods {} agree", methods.join(",")),
        Some(d) => format!(
            "n={}: {} gives {} but {} gives {}",
            d.n, d.method, d.value, d.reference_method, d.reference_value
        ),
    };
    Ok(Check::new(format!("sizes {family} n=0..{n_max}"), report.agreement, detail))
}

/// Vertex counts and per-vertex structure of the constructed graphs.
fn orders(family: Family, n_max: usize, budget: Budget) -> CliResult<Check> {
    for n in 0..=n_max {
        let graph = construct(family.into(), n, budget)?;
        let expected = family.order(n)?;
        if BigNat::from(graph.order()) != expected {
            return Ok(Check::new(
                format!("orders {family} n=0..{n_max}"),
                false,
                format!("n={n}: {} vertices, expected {expected}", graph.order()),
            ));
        }
        if let Some(d) = graph.degrees().into_iter().find(|&d| d > n) {
            return Ok(Check::new(
                format!("orders {family} n=0..{n_max}"),
                false,
                format!("n={n}: vertex degree {d} exceeds n"),
            ));
        }
    }
    Ok(Check::new(
        format!("orders {family} n=0..{n_max}"),
        true,
        "vertex counts match the sequence",
    ))
}

fn golden_check(k: usize, n_max: usize, budget: Budget) -> CliResult<Check> {
    let sizes_to = n_max.min(golden::SIZES_N_MAX);
    let report = cross_check(Family::KOrder(k), 0, sizes_to, &Method::FORMULAS, false, budget)?;
    for n in 0..=sizes_to {
        let expected = BigNat::from(golden::edge_count(k, n).expect("in range"));
        for m in Method::FORMULAS {
            if let Some(v) = report.value(m, n) {
                if *v != expected {
                    return Ok(Check::new(
                        format!("reference k={k}"),
                        false,
                        format!("e_{n} by {m} is {v}, reference {expected}"),
                    ));
                }
            }
        }
    }
    let numbers_to = (n_max + 2).min(golden::NUMBERS_N_MAX);
    let fib = fibcube_core::kstep_fib_range(k, numbers_to)?;
    for (n, v) in fib.iter().enumerate() {
        let expected = BigNat::from(golden::kstep_number(k, n).expect("in range"));
        if *v != expected {
            return Ok(Check::new(
                format!("reference k={k}"),
                false,
                format!("F_{n} is {v}, reference {expected}"),
            ));
        }
    }
    Ok(Check::new(
        format!("reference k={k}"),
        true,
        format!("sizes n<={sizes_to} and numbers n<={numbers_to} match"),
    ))
}
