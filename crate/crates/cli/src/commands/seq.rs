use std::fmt::Write;

use fibcube_core::{Family, KStepSequence, PStepSequence};
use serde_json::json;

use crate::args::{Format, SeqArgs};
use crate::{decimal, deliver, require_format, to_json_text, validate_family, CliError, CliResult, Output};

pub fn run(args: &SeqArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Plain, Format::Csv, Format::Json], "seq")?;
    let family = validate_family(args.family.family())?;
    if args.n_min > args.n_max {
        return Err(CliError::Usage(format!(
            "--n-min {} exceeds --n-max {}",
            args.n_min, args.n_max
        )));
    }

    let terms = match family {
        Family::KOrder(k) => KStepSequence::new(k)?.prefix(args.n_max).to_vec(),
        Family::PCube(p) => PStepSequence::new(p)?.prefix(args.n_max).to_vec(),
    };
    let values = decimal(&terms[args.n_min..]);

    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("n,F\n");
            for (n, v) in (args.n_min..).zip(&values) {
                writeln!(s, "{n},{v}").unwrap();
            }
            s
        }
        Format::Json => to_json_text(&json!({
            "family": family.kind(),
            "k_or_p": family.parameter(),
            "n_range": [args.n_min, args.n_max],
            "values": values,
        })),
        _ => format!("{}\n", values.join(",")),
    };
    deliver(Output::text(text), args.out.output.as_deref())
}
