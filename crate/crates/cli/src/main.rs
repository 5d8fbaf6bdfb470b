use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cdlat_core::catalog::{parse_catalog, Catalog};
use cdlat_core::graph::HasseDiagram;
use cdlat_core::sweep::{analyze, sweep_order, venn_cells, write_report};
use cdlat_core::verify::{verify, Theorem, UpParams};
use cdlat_core::{Error, FamilySpec, Group, Limits};
use clap::{Parser, Subcommand, ValueEnum};

/// Chermak-Delgado lattices of finite groups.
#[derive(Parser)]
#[command(name = "cdlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroup count, maximal measure, CD lattice size and delta of one group.
    Measure {
        /// Family spec such as `q 8 x c 3`, or `sg <order> <id>` with --catalog.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        catalog: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// One row per group spec.
    DeltaTable {
        /// Group specs; with --range, `{n}` is replaced by each value.
        #[arg(required = true)]
        specs: Vec<String>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        catalog: Vec<PathBuf>,
    },
    /// Runs the three p-group conditions on every catalog group of one order.
    SweepConditions {
        #[arg(long)]
        order: usize,
        #[arg(long, required = true)]
        catalog: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Checks a classification statement on every catalog group in scope.
    Verify {
        theorem: TheoremArg,
        #[arg(long, required = true)]
        catalog: Vec<PathBuf>,
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        /// Prime for `up`.
        #[arg(long, default_value_t = 2)]
        prime: usize,
        /// Exponent for `up`: groups of order p^(k+1) are examined.
        #[arg(long, default_value_t = 5)]
        k: u32,
        /// Also write the verdict as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hasse diagram of the subgroup lattice in DOT format.
    Graph {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        catalog: Vec<PathBuf>,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Nil,
    S3,
    Lt5,
    #[value(alias = "up_check")]
    Up,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Nil => Theorem::Nil,
            TheoremArg::S3 => Theorem::S3,
            TheoremArg::Lt5 => Theorem::Lt5,
            TheoremArg::Up => Theorem::UpCheck,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(2)
        }
    }
}

fn limits() -> Result<Limits, Error> {
    let mut l = Limits::default();
    if let Ok(v) = std::env::var("CDLAT_MAX_ORDER") {
        l.max_order = v.trim().parse().map_err(|_| Error::BadSpec {
            spec: v.clone(),
            reason: "CDLAT_MAX_ORDER must be a positive integer".into(),
        })?;
    }
    Ok(l)
}

fn load_catalogs(paths: &[PathBuf], limits: &Limits) -> Result<Catalog, Error> {
    let mut catalog = Catalog::default();
    for path in paths {
        let file = File::open(path)?;
        catalog.merge(parse_catalog(BufReader::new(file), limits)?);
    }
    Ok(catalog)
}

fn resolve(spec: &str, catalog: &Catalog, limits: &Limits) -> Result<Group, Error> {
    let words: Vec<&str> = spec.split_whitespace().collect();
    if let ["sg", order, id] = words.as_slice() {
        let bad = || Error::BadSpec {
            spec: spec.into(),
            reason: "expected `sg <order> <id>`".into(),
        };
        let order: usize = order.parse().map_err(|_| bad())?;
        let id: usize = id.parse().map_err(|_| bad())?;
        let entry = catalog.find(order, id).ok_or_else(|| Error::BadSpec {
            spec: spec.into(),
            reason: "not in the loaded catalogs (pass --catalog)".into(),
        })?;
        let g = entry.build(limits)?;
        let name = match &entry.name {
            Some(n) => format!("sg {order} {id} ({n})"),
            None => format!("sg {order} {id}"),
        };
        return Ok(g.with_name(name));
    }
    spec.parse::<FamilySpec>()?.build(limits)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let limits = limits()?;
    match cli.command {
        Command::Measure {
            spec,
            catalog,
            json,
        } => {
            let catalog = load_catalogs(&catalog, &limits)?;
            let g = resolve(&spec.join(" "), &catalog, &limits)?;
            let a = analyze(&g, &limits)?;
            let r = &a.report;
            let mut out = io::stdout().lock();
            if json {
                let value = serde_json::json!({
                    "group": g.name(),
                    "order": g.order(),
                    "total_subgroups": r.total_subgroups,
                    "m_star": r.m_star,
                    "cd_size": r.cd_size(),
                    "cd_orders": r.members.iter().map(|h| h.order()).collect::<Vec<_>>(),
                    "delta": r.delta,
                    "nilpotent": a.nilpotent,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            } else {
                let orders: Vec<String> = r.members.iter().map(|h| h.order().to_string()).collect();
                writeln!(out, "group:           {}", g.name().unwrap_or("?"))?;
                writeln!(out, "order:           {}", g.order())?;
                writeln!(out, "subgroups:       {}", r.total_subgroups)?;
                writeln!(out, "m*:              {}", r.m_star)?;
                writeln!(out, "|CD|:            {}", r.cd_size())?;
                writeln!(out, "CD member orders: {}", orders.join(" "))?;
                writeln!(out, "delta:           {}", r.delta)?;
                writeln!(out, "nilpotent:       {}", a.nilpotent)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DeltaTable {
            specs,
            range,
            catalog,
        } => {
            let catalog = load_catalogs(&catalog, &limits)?;
            let specs = expand(&specs, range.as_deref())?;
            let mut out = io::stdout().lock();
            writeln!(
                out,
                "{:<24} {:>6} {:>10} {:>14} {:>6}",
                "group", "order", "subgroups", "m*", "delta"
            )?;
            let mut failed = false;
            for spec in &specs {
                let row = resolve(spec, &catalog, &limits)
                    .and_then(|g| analyze(&g, &limits).map(|a| (g.order(), a.report)));
                match row {
                    Ok((order, r)) => writeln!(
                        out,
                        "{:<24} {:>6} {:>10} {:>14} {:>6}",
                        spec, order, r.total_subgroups, r.m_star, r.delta
                    )?,
                    Err(e) => {
                        failed = true;
                        writeln!(out, "{spec:<24} failed: {e}")?;
                    }
                }
            }
            Ok(if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::SweepConditions {
            order,
            catalog,
            out,
        } => {
            let catalog = load_catalogs(&catalog, &limits)?;
            let rows = sweep_order(&catalog, order, &limits)?;
            write_file(&out, |w| write_report(&rows, w))?;
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "order {order}: {} groups", rows.len())?;
            for ((c1, c2, c3), n) in venn_cells(&rows) {
                let flag = |b: bool| if b { 'T' } else { 'F' };
                writeln!(
                    stdout,
                    "  cond1={} cond2={} cond3={}: {n}",
                    flag(c1),
                    flag(c2),
                    flag(c3)
                )?;
            }
            let errors = rows.iter().filter(|r| r.error.is_some()).count();
            if errors > 0 {
                writeln!(stdout, "  {errors} entries failed (see report)")?;
            }
            for r in rows.iter().filter(|r| r.passes_all()) {
                writeln!(
                    stdout,
                    "  passes all: id {} {} ~ {}",
                    r.id,
                    r.name.as_deref().unwrap_or("?"),
                    r.iso_name.as_deref().unwrap_or("unnamed")
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            catalog,
            max_order,
            prime,
            k,
            out,
        } => {
            let catalog = load_catalogs(&catalog, &limits)?;
            let v = verify(
                theorem.into(),
                &catalog,
                max_order,
                UpParams { p: prime, k },
                &limits,
            )?;
            let mut stdout = io::stdout().lock();
            let scope = match (v.scope.first(), v.scope.last()) {
                (Some(a), Some(b)) if a != b => format!("orders {a}..={b}"),
                (Some(a), _) => format!("order {a}"),
                _ => "no orders".into(),
            };
            writeln!(stdout, "theorem:  {}", v.theorem)?;
            writeln!(stdout, "scope:    {scope} ({} groups)", v.groups_examined)?;
            for i in &v.instances {
                let delta = i.delta.map(|d| format!(" delta={d}")).unwrap_or_default();
                let matched = i
                    .matched
                    .as_deref()
                    .map(|m| format!(" ~ {m}"))
                    .unwrap_or_default();
                writeln!(stdout, "  {}#{}{delta}{matched}", i.order, i.id)?;
            }
            for n in &v.notes {
                writeln!(stdout, "note:     {n}")?;
            }
            let cx: Vec<String> = v
                .counterexamples
                .iter()
                .map(|(o, i)| format!("{o}#{i}"))
                .collect();
            writeln!(
                stdout,
                "counterexamples: {}",
                if cx.is_empty() {
                    "none".into()
                } else {
                    cx.join(" ")
                }
            )?;
            writeln!(stdout, "holds:    {}", v.holds)?;
            if let Some(path) = out {
                write_file(&path, |w| {
                    serde_json::to_writer_pretty(&mut *w, &v)?;
                    w.write_all(b"\n")?;
                    Ok(())
                })?;
            }
            Ok(if v.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Graph { spec, catalog, out } => {
            let catalog = load_catalogs(&catalog, &limits)?;
            let g = resolve(&spec.join(" "), &catalog, &limits)?;
            let a = analyze(&g, &limits)?;
            let d = HasseDiagram::new(&a.lattice, &a.report);
            let dot = d.to_dot();
            match out {
                Some(path) => {
                    write_file(&path, |w| Ok(w.write_all(dot.as_bytes())?))?;
                    eprintln!(
                        "{} nodes, {} edges, {} marked",
                        d.nodes.len(),
                        d.edges.len(),
                        d.marked()
                    );
                }
                None => io::stdout().lock().write_all(dot.as_bytes())?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<File>) -> Result<(), Error>,
) -> Result<(), Error> {
    let mut w = BufWriter::new(File::create(path)?);
    body(&mut w)?;
    w.flush()?;
    Ok(())
}

fn expand(specs: &[String], range: Option<&str>) -> Result<Vec<String>, Error> {
    let Some(range) = range else {
        return Ok(specs.to_vec());
    };
    let bad = || Error::BadSpec {
        spec: range.into(),
        reason: "expected an inclusive range `a..b`".into(),
    };
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
    Ok((a..=b)
        .flat_map(|n| specs.iter().map(move |s| s.replace("{n}", &n.to_string())))
        .collect())
}
