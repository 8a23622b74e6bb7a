use fibcube_core::cube_graphs::construct;

use crate::args::{Format, GraphArgs};
use crate::{deliver, require_format, resolve_budget, validate_family, CliResult, Output};

pub fn run(args: &GraphArgs) -> CliResult<Output> {
    require_format(args.format, &[Format::Edgelist, Format::Dot], "graph")?;
    let family = validate_family(args.family.family())?;
    let budget = resolve_budget(args.budget)?;
    let graph = construct(family.into(), args.n, budget)?;

    let text = match args.format {
        Format::Dot => graph.to_dot(),
        _ => graph.to_edge_list(),
    };
    let mut out = deliver(Output::text(text), args.out.output.as_deref())?;
    out.stderr = format!("|V|={} |E|={}\n", graph.order(), graph.size());
    Ok(out)
}
