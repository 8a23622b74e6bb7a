use std::fmt::Write;

use fibcube_core::size_formulas::KSizes;
use fibcube_core::{golden, BigNat, KStepSequence};
use serde_json::json;

use crate::args::{Format, TableArgs, Which};
use crate::{deliver, require_format, to_json_text, CliError, CliResult, Output};

struct Cell {
    k: usize,
    n: usize,
    expected: u64,
    /// `(method name, value)`; methods undefined at `n` are absent.
    computed: Vec<(&'static str, BigNat)>,
}

impl Cell {
    fn passed(&self) -> bool {
        let expected = BigNat::from(self.expected);
        self.computed.iter().all(|(_, v)| *v == expected)
    }
}

pub fn run(args: &TableArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Plain, Format::Csv, Format::Json], "table")?;
    let default_n_max = match args.which {
        Which::Numbers => golden::NUMBERS_N_MAX,
        Which::Sizes => golden::SIZES_N_MAX,
    };
    let n_max = args.n_max.unwrap_or(default_n_max);
    if args.k_list.is_empty() {
        return Err(CliError::Usage("--k-list must name at least one k".into()));
    }
    for &k in &args.k_list {
        if k < 2 {
            return Err(CliError::Usage(format!("k = {k} is out of range: requires k >= 2")));
        }
    }

    let text = if args.golden {
        for &k in &args.k_list {
            if !golden::K_RANGE.contains(&k) {
                return Err(CliError::Usage(format!(
                    "no reference values for k = {k} (available: 2..=5)"
                )));
            }
        }
        if n_max > default_n_max {
            return Err(CliError::Usage(format!(
                "reference values stop at n = {default_n_max}"
            )));
        }
        let cells = golden_cells(args.which, &args.k_list, n_max);
        let text = render_golden(args.which, args.format, &cells);
        let failed = cells.iter().filter(|c| !c.passed()).count();
        let out = deliver(Output::text(text), args.out.output.as_deref())?;
        if failed > 0 {
            return Err(CliError::Failure(format!(
                "{}{failed} of {} cells differ from the reference values",
                out.stdout,
                cells.len()
            )));
        }
        return Ok(out);
    } else {
        let rows: Vec<(usize, Vec<BigNat>)> = args
            .k_list
            .iter()
            .map(|&k| (k, grid_row(args.which, k, n_max)))
            .collect();
        render_grid(args.which, args.format, n_max, &rows)
    };
    deliver(Output::text(text), args.out.output.as_deref())
}

fn grid_row(which: Which, k: usize, n_max: usize) -> Vec<BigNat> {
    match which {
        Which::Numbers => KStepSequence::new(k).expect("k validated").prefix(n_max).to_vec(),
        Which::Sizes => {
            let mut s = KSizes::new(k).expect("k validated");
            (0..=n_max).map(|n| s.iterative(n)).collect()
        }
    }
}

fn golden_cells(which: Which, k_list: &[usize], n_max: usize) -> Vec<Cell> {
    let mut cells = Vec::new();
    for &k in k_list {
        match which {
            Which::Numbers => {
                let mut seq = KStepSequence::new(k).expect("k validated");
                for n in 0..=n_max {
                    cells.push(Cell {
                        k,
                        n,
                        expected: golden::kstep_number(k, n).expect("range checked"),
                        computed: vec![("value", seq.term(n).clone())],
                    });
                }
            }
            Which::Sizes => {
                // each method from its own evaluator so no cache is shared
                let mut iter = KSizes::new(k).expect("k validated");
                let mut conv = KSizes::new(k).expect("k validated");
                let mut linear = KSizes::new(k).expect("k validated");
                for n in 0..=n_max {
                    let mut computed = vec![("iter", iter.iterative(n)), ("conv", conv.convolution(n))];
                    if n >= k {
                        computed.push(("linear", linear.linear(n).expect("n >= k")));
                    }
                    cells.push(Cell {
                        k,
                        n,
                        expected: golden::edge_count(k, n).expect("range checked"),
                        computed,
                    });
                }
            }
        }
    }
    cells
}

fn render_golden(which: Which, format: Format, cells: &[Cell]) -> String {
    let failed = cells.iter().filter(|c| !c.passed()).count();
    let status = |c: &Cell| if c.passed() { "PASS" } else { "FAIL" };
    if format == Format::Json {
        let rows: Vec<_> = cells
            .iter()
            .map(|c| {
                let computed: serde_json::Map<String, serde_json::Value> = c
                    .computed
                    .iter()
                    .map(|(m, v)| (m.to_string(), json!(v.to_string())))
                    .collect();
                json!({
                    "k": c.k,
                    "n": c.n,
                    "expected": c.expected.to_string(),
                    "computed": computed,
                    "status": status(c),
                })
            })
            .collect();
        return to_json_text(&json!({
            "which": which_name(which),
            "cells": rows,
            "cells_checked": cells.len(),
            "passed": failed == 0,
        }));
    }

    let mut s = String::new();
    match which {
        Which::Numbers => s.push_str("k,n,expected,value,status\n"),
        Which::Sizes => s.push_str("k,n,expected,iter,conv,linear,status\n"),
    }
    for c in cells {
        write!(s, "{},{},{}", c.k, c.n, c.expected).unwrap();
        match which {
            Which::Numbers => write!(s, ",{}", c.computed[0].1).unwrap(),
            Which::Sizes => {
                for method in ["iter", "conv", "linear"] {
                    match c.computed.iter().find(|(m, _)| *m == method) {
                        Some((_, v)) => write!(s, ",{v}").unwrap(),
                        None => s.push(','),
                    }
                }
            }
        }
        writeln!(s, ",{}", status(c)).unwrap();
    }
    if failed == 0 {
        writeln!(s, "PASS {} cells", cells.len()).unwrap();
    } else {
        writeln!(s, "FAIL {failed} of {} cells", cells.len()).unwrap();
    }
    s
}

fn render_grid(which: Which, format: Format, n_max: usize, rows: &[(usize, Vec<BigNat>)]) -> String {
    if format == Format::Json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(k, values)| json!({ "k": k, "values": crate::decimal(values) }))
            .collect();
        return to_json_text(&json!({
            "which": which_name(which),
            "n_range": [0, n_max],
            "rows": rows,
        }));
    }
    let mut s = String::from("k");
    for n in 0..=n_max {
        write!(s, ",{n}").unwrap();
    }
    s.push('\n');
    for (k, values) in rows {
        write!(s, "{k}").unwrap();
        for v in values {
            write!(s, ",{v}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn which_name(which: Which) -> &'static str {
    match which {
        Which::Numbers => "numbers",
        Which::Sizes => "sizes",
    }
}
