//! Command-line front end: geometry loading, run orchestration, and exact
//! report emission for the vertex/BPS pipeline.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use openbps_core::bps::{
    closed_bps_table, disk_specialize, open_bps_table, open_f_table, BpsTable, OpenClass,
};
use openbps_core::geometry::{
    builtin_graph_with_framing, builtin_open_geometry, emit_geometry, parse_geometry,
    BUILTIN_CATALOG,
};
use openbps_core::openclosed::{
    build_fourfold, build_relative_y, kp_rows, transfer_bps, validate_cy_fan, BraneSpec,
    Correspondence, ToricFan,
};
use openbps_core::partition::Partition;
use openbps_core::report;
use openbps_core::symfunc::{CharKey, SymCache};
use openbps_core::verify::{acceptance_battery, verify_graph};
use openbps_core::vertex::{connected_f, FtcyGraph, WCache};
use openbps_core::Int;

#[derive(Parser)]
#[command(
    name = "openbps",
    about = "Topological-vertex engine: open Gromov-Witten series, BPS integrality verdicts, and the open/closed correspondence on toric fans",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Builtin geometry name (e.g. "c3-brane(-2)") or path to a geometry
    /// JSON file.
    #[arg(long)]
    geometry: String,
    /// Override the framing of the brane in a builtin geometry.
    #[arg(long, allow_negative_numbers = true)]
    framing: Option<i64>,
    /// Total edge-degree cutoff (at least 1).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    /// Keep only classes whose vector matches, e.g. "1,2" or "1,2:[2]".
    #[arg(long)]
    class: Option<String>,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Worker threads for the per-class sums (at least 1).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Disable the vertex-weight and specialization caches.
    #[arg(long)]
    no_cache: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Open Gromov-Witten generating functions per effective class.
    Gw(RunArgs),
    /// Open BPS invariants with integrality/finiteness verdicts.
    Bps(RunArgs),
    /// Closed-string Gopakumar-Vafa invariants (no branes).
    ClosedBps(RunArgs),
    /// Build the divisor and fourfold fans, transfer the disk BPS table,
    /// and emit the resummed form.
    Openclosed(OpenClosedArgs),
    /// Character of the symmetric group: `char [2,1] [1,1,1]`.
    Char { irrep: String, class: String },
    /// Vertex weight of a partition triple: `vertex-w [1] [] []`.
    VertexW {
        lambda1: String,
        lambda2: String,
        lambda3: String,
    },
    /// Run the invariant battery: the full acceptance suite, or a
    /// geometry-scoped battery with --geometry.
    Verify(VerifyArgs),
    /// Print the canonical JSON form of a geometry.
    Emit {
        #[arg(long)]
        geometry: String,
        #[arg(long, allow_negative_numbers = true)]
        framing: Option<i64>,
    },
}

#[derive(Args, Clone)]
struct OpenClosedArgs {
    /// Single-brane builtin ("c3-brane(f)" or "conifold-brane(f)") for the
    /// full pipeline with BPS transfer.
    #[arg(long)]
    geometry: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    framing: Option<i64>,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    /// Construction-only mode: path to a fan JSON file
    /// ({"rank":3,"u3":[...],"rays":[[...]],"cones":[[...]]}).
    #[arg(long)]
    fan_file: Option<String>,
    /// Brane ray indices b1,b2,b3 for --fan-file mode.
    #[arg(long)]
    brane: Option<String>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    output: Option<String>,
    /// Rejected: the semi-projective compactification needs equivariant
    /// insertions and is out of scope.
    #[arg(long)]
    semi_projective: bool,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    #[arg(long)]
    geometry: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    framing: Option<i64>,
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_geometry(name: &str, framing: Option<i64>) -> Result<FtcyGraph, String> {
    if Path::new(name).exists() {
        let text = std::fs::read_to_string(name).map_err(|e| format!("{name}: {e}"))?;
        let g = parse_geometry(&text).map_err(|e| format!("{name}: {e}"))?;
        if framing.is_some() {
            return Err("--framing applies to builtin geometries only".into());
        }
        return Ok(g);
    }
    builtin_graph_with_framing(name, framing).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn class_matches(class: &OpenClass, filter: &str) -> bool {
    let (beta_part, windings_part) = match filter.split_once(':') {
        Some((b, w)) => (b, Some(w)),
        None => (filter, None),
    };
    let beta: Vec<String> = class.beta.iter().map(|v| v.to_string()).collect();
    if beta.join(",") != beta_part.trim() {
        return false;
    }
    match windings_part {
        None => true,
        Some(w) => {
            let rendered = class
                .windings
                .entries()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("|");
            rendered == w.trim()
        }
    }
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{p}: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cache_for(no_cache: bool) -> WCache {
    if no_cache {
        WCache::uncached()
    } else {
        WCache::new()
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gw(args) => {
            let g = load_geometry(&args.geometry, args.framing)?;
            let cache = cache_for(args.no_cache);
            let ftable = connected_f(&g, args.max_degree, &cache, args.workers as usize)
                .map_err(|e| e.to_string())?;
            let fmap = open_f_table(&g, &ftable).map_err(|e| e.to_string())?;
            let mut rows: Vec<_> = fmap.into_iter().collect();
            if let Some(filter) = &args.class {
                rows.retain(|(c, _)| class_matches(c, filter));
            }
            let content = match args.format.as_str() {
                "csv" => report::gw_report_csv(&rows),
                _ => report::to_pretty(&report::gw_report_json(&g.name, &rows)),
            };
            write_out(&args.output, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bps(args) => {
            let g = load_geometry(&args.geometry, args.framing)?;
            if g.brane_count() == 0 {
                return Err("geometry has no branes; use closed-bps".into());
            }
            let cache = cache_for(args.no_cache);
            let mut table = open_bps_table(&g, args.max_degree, &cache, args.workers as usize)
                .map_err(|e| e.to_string())?;
            emit_bps(&mut table, &args, "open")
        }
        Command::ClosedBps(args) => {
            let g = load_geometry(&args.geometry, args.framing)?;
            if g.brane_count() != 0 {
                return Err("geometry has branes; use bps".into());
            }
            let cache = cache_for(args.no_cache);
            let mut table = closed_bps_table(&g, args.max_degree, &cache, args.workers as usize)
                .map_err(|e| e.to_string())?;
            emit_bps(&mut table, &args, "closed")
        }
        Command::Openclosed(args) => run_openclosed(args),
        Command::Char { irrep, class } => {
            let sym = SymCache::new();
            let key = CharKey {
                irrep: parse_partition(&irrep)?,
                class: parse_partition(&class)?,
            };
            let v = sym.character(&key).map_err(|e| e.to_string())?;
            println!("{v}");
            Ok(ExitCode::SUCCESS)
        }
        Command::VertexW {
            lambda1,
            lambda2,
            lambda3,
        } => {
            let cache = WCache::new();
            let w = cache.w(
                &parse_partition(&lambda1)?,
                &parse_partition(&lambda2)?,
                &parse_partition(&lambda3)?,
            );
            println!("{w}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let results = match &args.geometry {
                Some(name) => {
                    let g = load_geometry(name, args.framing)?;
                    verify_graph(&g, args.max_degree, args.workers as usize)?
                }
                None => acceptance_battery(args.workers as usize),
            };
            let mut all = true;
            for r in &results {
                println!("{}", r.line());
                all &= r.pass;
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Emit { geometry, framing } => {
            let g = load_geometry(&geometry, framing)?;
            print!("{}", emit_geometry(&g));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_bps(table: &mut BpsTable, args: &RunArgs, mode: &str) -> Result<ExitCode, String> {
    if let Some(filter) = &args.class {
        table.rows.retain(|c, _| class_matches(c, filter));
    }
    let content = match args.format.as_str() {
        "csv" => report::bps_report_csv(table),
        _ => report::to_pretty(&report::bps_report_json(table, mode)),
    };
    write_out(&args.output, &content)?;
    Ok(if table.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_openclosed(args: OpenClosedArgs) -> Result<ExitCode, String> {
    if args.semi_projective {
        return Err(
            "the semi-projective compactification may acquire an extra fixed point on the \
             insertion divisors and needs equivariant insertions; this engine only builds \
             the uncompactified fourfold"
                .into(),
        );
    }
    // Construction-only mode from a fan file.
    if let Some(path) = &args.fan_file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let fan: ToricFan = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
        let brane_arg = args
            .brane
            .as_ref()
            .ok_or("--fan-file mode needs --brane i1,i2,i3")?;
        let idx: Vec<usize> = brane_arg
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| format!("bad ray index {s}")))
            .collect::<Result<_, _>>()?;
        if idx.len() != 3 {
            return Err("--brane expects exactly three ray indices".into());
        }
        let brane = BraneSpec {
            b1: idx[0],
            b2: idx[1],
            b3: idx[2],
            framing: args.framing.unwrap_or(0),
            outer_assumption_asserted: false,
        };
        let pair = build_relative_y(&fan, &brane).map_err(|e| e.to_string())?;
        let fourfold = build_fourfold(&pair).map_err(|e| e.to_string())?;
        let verdict = validate_cy_fan(&fourfold);
        let corr = Correspondence::identity(
            path,
            fan.top_cones.len().max(1),
            (fourfold.rays.len() - 2, brane.b2),
        );
        let out = report::to_pretty(&report::openclosed_report_json(
            path, &pair, &fourfold, &corr, &[], &[], verdict.pass(),
        ));
        write_out(&args.output, &out)?;
        return Ok(ExitCode::SUCCESS);
    }

    let name = args.geometry.as_ref().ok_or_else(|| {
        format!(
            "openclosed needs --geometry or --fan-file; builtins: {}",
            BUILTIN_CATALOG.join(", ")
        )
    })?;
    let name = match args.framing {
        Some(f) => {
            let base = name.split('(').next().unwrap_or(name);
            format!("{base}({f})")
        }
        None => name.clone(),
    };
    let (g, fan3, brane) = builtin_open_geometry(&name).ok_or_else(|| {
        format!("{name} has no fan data; openclosed supports c3-brane(f) and conifold-brane(f)")
    })?;
    let pair = build_relative_y(&fan3, &brane).map_err(|e| e.to_string())?;
    let fourfold = build_fourfold(&pair).map_err(|e| e.to_string())?;

    let cache = WCache::new();
    let table =
        open_bps_table(&g, args.max_degree, &cache, args.workers as usize).map_err(|e| e.to_string())?;
    let mut open_rows: BTreeMap<Vec<i64>, Int> = BTreeMap::new();
    let mut windings = BTreeMap::new();
    let mut disk_n = Vec::new();
    for (class, row) in &table.rows {
        if class.windings.entry(0).len() != 1 {
            continue;
        }
        let n0 = row
            .records
            .iter()
            .find(|r| r.genus == 0)
            .map(|r| r.value.clone())
            .unwrap_or_else(|| Int::from(0));
        open_rows.insert(class.beta.clone(), n0);
        windings.insert(class.beta.clone(), class.windings.clone());
        let (n, _) = disk_specialize(&table, class).map_err(|e| e.to_string())?;
        disk_n.push((class.beta.clone(), n));
    }
    let closed = transfer_bps(&open_rows, &windings).map_err(|e| e.to_string())?;
    let kp = kp_rows(&closed).map_err(|e| e.to_string())?;
    let identity_holds = kp.iter().all(|(beta, _, resummed)| {
        disk_n
            .iter()
            .find(|(b, _)| b == beta)
            .map(|(_, n)| n == resummed)
            .unwrap_or(false)
    });
    let corr = Correspondence::identity(
        &g.name,
        g.class_rank(),
        (fourfold.rays.len() - 2, brane.b2),
    );
    let out = report::to_pretty(&report::openclosed_report_json(
        &g.name,
        &pair,
        &fourfold,
        &corr,
        &kp,
        &disk_n,
        identity_holds,
    ));
    write_out(&args.output, &out)?;
    Ok(if identity_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
