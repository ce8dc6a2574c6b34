use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use sumgraph::checks::{
    check_cauchy_davenport, check_prop16, check_thm14, check_thm15, check_thm15_with, conj18_stat, epsilon_star,
    EpsilonBracket, Verdict,
};
use sumgraph::constructions::{circulant, clique_path, complete, cycle, diameter_extremal, gdm, path, Family};
use sumgraph::diagnostics::{all_decompositions, default_eps1, geodesic_cut, vertex_decomposition, Decomposition, GeodesicCut};
use sumgraph::search::{extremal_scan, Objective, ScanConfig, Source, CSV_HEADER};
use sumgraph::sumset::parse_list;
use sumgraph::{edge_growth, parse_edge_list, power_graph, serialize_edge_list, Graph, ResidueSet};

use crate::{
    CheckArgs, Command, ConstructArgs, DiagnoseArgs, EpsilonArgs, Format, ObjectiveArg, PowerArgs, SearchArgs,
    SetArgs,
};

/// Runs one subcommand. `Ok(false)` means some check did not hold.
pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Construct(args) => construct(args),
        Command::Power(args) => power(args),
        Command::Check(args) => check(args),
        Command::CheckCd(args) => check_set(args, check_cauchy_davenport),
        Command::CheckThm14(args) => check_set(args, check_thm14),
        Command::Diagnose(args) => diagnose(args),
        Command::Search(args) => search(args),
        Command::Epsilon(args) => epsilon(args),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn print_json<T: Serialize + ?Sized>(value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_output(None, &text)
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--family {} requires --{flag}", family.name()))
}

fn construct(args: ConstructArgs) -> Result<bool> {
    let family: Family = args.family.parse()?;
    let g = match family {
        Family::Gdm => gdm(need(args.d, "d", family)?, need(args.m, "m", family)?)?,
        Family::DiamExtremal => diameter_extremal(need(args.d, "d", family)?, need(args.k, "k", family)?)?,
        Family::Circulant => {
            let n = need(args.n, "n", family)?;
            let list = args.gens.as_deref().ok_or_else(|| anyhow!("--family circulant requires --gens"))?;
            let requested = ResidueSet::new(n, parse_list(list)?)?;
            let c = circulant(n, &requested.iter().collect::<Vec<_>>())?;
            if c.generators != requested {
                eprintln!("note: generators closed under negation mod {n}: {{{}}}", c.generators);
            }
            c.graph
        }
        Family::CliquePath => clique_path(need(args.n, "n", family)?)?,
        Family::Cycle => cycle(need(args.n, "n", family)?)?,
        Family::Complete => complete(need(args.n, "n", family)?)?,
        Family::Path => path(need(args.n, "n", family)?)?,
    };
    write_output(args.out.as_deref(), &serialize_edge_list(&g))?;
    Ok(true)
}

fn power(args: PowerArgs) -> Result<bool> {
    if args.h.is_none() && args.profile.is_none() {
        bail!("power needs --h, --profile, or both");
    }
    if args.h.is_some() && args.out.is_none() && args.profile.is_some() {
        bail!("--h with --profile needs --out for the graph; the profile goes to stdout");
    }
    let g = read_graph(&args.input)?;
    if let Some(h) = args.h {
        write_output(args.out.as_deref(), &serialize_edge_list(&power_graph(&g, h)?))?;
    }
    if let Some(hmax) = args.profile {
        print_json(&edge_growth(&g, hmax)?)?;
    }
    Ok(true)
}

fn check(args: CheckArgs) -> Result<bool> {
    let g = read_graph(&args.input)?;
    if !g.is_connected() {
        bail!("graph is disconnected (infinite diameter)");
    }
    let all = !(args.thm15 || args.prop16 || args.conj18);
    let regular = g.regular_degree().is_some();
    let mut verdicts: Vec<Verdict> = Vec::new();
    if all || args.thm15 {
        verdicts.push(if regular {
            match args.eps {
                Some(e) if !(e.is_finite() && e >= 0.0) => bail!("--eps must be a finite non-negative number"),
                Some(e) => check_thm15_with(&g, &EpsilonBracket { lo: e, hi: e })?,
                None => check_thm15(&g)?,
            }
        } else {
            Verdict::not_applicable("thm15-cube-growth", "graph is not regular")
        });
    }
    if all || args.prop16 {
        verdicts.push(check_prop16(&g)?);
    }
    if all || args.conj18 {
        verdicts.push(if regular {
            conj18_stat(&g)?.verdict()
        } else {
            Verdict::not_applicable("conj18-excess2", "graph is not regular")
        });
    }
    print_json(&verdicts)?;
    Ok(verdicts.iter().all(|v| v.holds))
}

fn check_set(args: SetArgs, f: fn(usize, &ResidueSet, usize) -> sumgraph::Result<Vec<Verdict>>) -> Result<bool> {
    let set = ResidueSet::new(args.p, parse_list(&args.set)?)?;
    let verdicts = f(args.p, &set, args.hmax)?;
    print_json(&verdicts)?;
    Ok(verdicts.iter().all(|v| v.holds))
}

#[derive(Serialize)]
struct Diagnosis {
    #[serde(skip_serializing_if = "Option::is_none")]
    decompositions: Option<Vec<Decomposition>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cut: Option<GeodesicCut>,
}

fn diagnose(args: DiagnoseArgs) -> Result<bool> {
    let g = read_graph(&args.input)?;
    let eps1 = args.eps1.unwrap_or_else(default_eps1);
    let decompositions = match args.vertex {
        Some(v) => Some(vec![vertex_decomposition(&g, v, eps1)?]),
        None if !args.cut => Some(all_decompositions(&g, eps1)?),
        None => None,
    };
    let cut = if args.cut { Some(geodesic_cut(&g)?) } else { None };
    let holds = cut.as_ref().is_none_or(|c| c.bounds_hold());
    print_json(&Diagnosis { decompositions, cut })?;
    Ok(holds)
}

fn search(args: SearchArgs) -> Result<bool> {
    let source = match (args.exhaustive, args.random, args.seed) {
        (true, None, None) => Source::Exhaustive { n: args.n, d: args.d, dedup: args.dedup },
        (false, Some(count), Some(seed)) => Source::Random { n: args.n, d: args.d, count, seed },
        _ => bail!("give either --exhaustive or --random COUNT --seed S"),
    };
    let objective = match args.objective {
        ObjectiveArg::Min3Ratio => Objective::Min3Ratio,
        ObjectiveArg::Min2Excess => Objective::Min2Excess,
    };
    let config = ScanConfig { top_k: args.top, jobs: args.jobs as usize };
    let records = extremal_scan(&source, objective, &config)?;
    let mut text = String::new();
    match args.format {
        Format::Jsonl => {
            for rec in &records {
                text.push_str(&serde_json::to_string(rec)?);
                text.push('\n');
            }
        }
        Format::Csv => {
            text.push_str(CSV_HEADER);
            text.push('\n');
            for rec in &records {
                text.push_str(&rec.csv_row());
                text.push('\n');
            }
        }
    }
    write_output(args.out.as_deref(), &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct EpsilonReport {
    lo: f64,
    hi: f64,
    mid: f64,
    eps1: f64,
}

fn epsilon(args: EpsilonArgs) -> Result<bool> {
    let b = epsilon_star(args.tol)?;
    print_json(&EpsilonReport { lo: b.lo, hi: b.hi, mid: b.mid(), eps1: b.eps1() })?;
    Ok(true)
}
