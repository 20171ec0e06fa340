//! Command-line front end: parse surfaces and words, run traces, brackets,
//! flips and mutations, and execute the verification suites.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use shearq::brackets::check_homogeneous;
use shearq::holonomy::Mode;
use shearq::moves::{flip_inner, flip_loop, mutate_lambda, tropical_inner, tropical_loop};
use shearq::numeric::{random_values, rng};
use shearq::registry::{builtin, builtin_names};
use shearq::suites::{run_suite, suite_names, OracleConfig};
use shearq::text::{parse_surface, parse_word, render, render_lines, render_surface};

#[derive(Parser)]
#[command(
    name = "shearq",
    about = "Exact shear-coordinate algebra on cusped fat graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Classical or quantum mode for traces and products.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Classical)]
    mode: ModeArg,
    /// RNG seed for the numeric oracles.
    #[arg(long, global = true, default_value_t = 42)]
    rng_seed: u64,
    /// Number of random points per numeric oracle.
    #[arg(long, global = true, default_value_t = 10)]
    points: usize,
    /// Relative tolerance for numeric oracles.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Output format: pretty (default) or lines (one term per line).
    #[arg(long, global = true, default_value = "pretty")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Quantum,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Classical => Mode::Classical,
            ModeArg::Quantum => Mode::Quantum,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a surface file or built-in surface.
    Validate {
        #[arg(long)]
        surface: String,
    },
    /// Trace a holonomy word on a surface.
    Trace {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        word: String,
    },
    /// Poisson bracket of the traces of two words (classical).
    Bracket {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        word1: String,
        #[arg(long)]
        word2: String,
    },
    /// Check homogeneous q-commutation of the surface's seed, one line per pair.
    Commute {
        #[arg(long)]
        surface: String,
    },
    /// Flip edges in sequence and report the numeric substitution at random points.
    Flip {
        #[arg(long)]
        surface: String,
        /// Comma separated edge names, applied in order.
        #[arg(long)]
        edges: String,
    },
    /// Mutate a seed arc and print the exchanged lambda.
    Mutate {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        arc: String,
    },
    /// Tropical mutation: max-plus exchange of integer lengths.
    Tropical {
        /// inner: a,b,c,d,e  or  loop: a,b,e
        #[arg(long)]
        lengths: String,
        #[arg(long, default_value = "inner")]
        kind: String,
    },
    /// Run a verification suite (quad014, s111, tri023, matrix, rmatrix,
    /// collision, tropical, all).
    Suite { name: String },
    /// List the built-in surfaces.
    Builtins,
}

fn load_surface(spec: &str) -> Result<shearq::FatGraph, String> {
    if let Some(b) = builtin(spec) {
        return Ok(b.graph);
    }
    let text = fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
    parse_surface(&text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    let emit = |v: &shearq::QLaurent| -> String {
        if cli.format == "lines" {
            render_lines(v)
        } else {
            render(v)
        }
    };
    match &cli.command {
        Command::Validate { surface } => {
            let graph = load_surface(surface)?;
            let report = graph.validate();
            if report.is_valid() {
                println!("valid: {}", graph.name);
                println!("{}", render_surface(&graph).trim_end());
                Ok(true)
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                Err(format!("{} structural violations", report.violations.len()))
            }
        }
        Command::Trace { surface, word } => {
            let graph = load_surface(surface)?;
            let basis = graph.epsilon_basis();
            let pw = parse_word(word, &basis).map_err(|e| e.to_string())?;
            let t = shearq::holonomy::trace(&pw, &basis, cli.mode.into(), graph.orientation)
                .map_err(|e| e.to_string())?;
            println!("{}", emit(&t));
            Ok(true)
        }
        Command::Bracket {
            surface,
            word1,
            word2,
        } => {
            let graph = load_surface(surface)?;
            let basis = graph.epsilon_basis();
            let w1 = parse_word(word1, &basis).map_err(|e| e.to_string())?;
            let w2 = parse_word(word2, &basis).map_err(|e| e.to_string())?;
            let t1 = shearq::holonomy::trace(&w1, &basis, Mode::Classical, graph.orientation)
                .map_err(|e| e.to_string())?;
            let t2 = shearq::holonomy::trace(&w2, &basis, Mode::Classical, graph.orientation)
                .map_err(|e| e.to_string())?;
            let br = t1.poisson(&t2).map_err(|e| e.to_string())?;
            println!("{}", emit(&br));
            Ok(true)
        }
        Command::Commute { surface } => {
            let b = builtin(surface).ok_or("commute needs a built-in surface with a seed")?;
            let seed = b.seed()?;
            let report = check_homogeneous(&seed);
            for line in &report.lines {
                println!("{line}");
            }
            Ok(report.all_pass)
        }
        Command::Flip { surface, edges } => {
            let graph = load_surface(surface)?;
            let mut current = graph.clone();
            let mut r = rng(cli.rng_seed);
            let n = graph.edges.len();
            let vals = random_values(&mut r, n, -2.0, 2.0);
            let mut m: BTreeMap<usize, f64> = (0..n).map(|i| (i, vals[i])).collect();
            let wv = 2.0 * (0.9f64 / 2.0).cosh();
            for edge in edges.split(',') {
                let edge = edge.trim();
                let idx = current
                    .edge_index(edge)
                    .ok_or(format!("no edge named {edge}"))?;
                let loop_adjacent = current.edges[idx].ends.iter().any(|ep| {
                    current.vertices[ep.vertex]
                        .slots
                        .iter()
                        .any(|&(e, _)| current.edges[e].kind == shearq::surface::EdgeKind::Loop)
                });
                let ev = if loop_adjacent {
                    flip_loop(&current, edge).map_err(|e| e.to_string())?
                } else {
                    flip_inner(&current, edge).map_err(|e| e.to_string())?
                };
                ev.apply_numeric(&mut m, wv);
                println!("flip {edge} ({:?})", ev.kind);
                for (name, num, den) in ev.substitution() {
                    println!("  e^{name} -> ({}) / ({})", render(&num), render(&den));
                }
                current = ev.after;
            }
            println!("shear values after transcript (seed {}):", cli.rng_seed);
            for i in 0..n {
                println!("  {} = {}", current.edges[i].name, m[&i]);
            }
            Ok(true)
        }
        Command::Mutate { surface, arc } => {
            let b = builtin(surface).ok_or("mutate needs a built-in surface with a seed")?;
            let seed = b.seed()?;
            let slot = seed.lookup(arc).ok_or(format!("no arc named {arc}"))?;
            let ev = mutate_lambda(&seed, &b.graph, slot, &format!("{arc}'"))
                .map_err(|e| e.to_string())?;
            println!("mutated {arc}:");
            println!("  in the seed torus: {}", emit(&ev.expression));
            let in_shear = seed
                .data
                .lambda_to_shear
                .apply(&ev.expression)
                .map_err(|e| e.to_string())?;
            println!("  in shear coordinates: {}", emit(&in_shear));
            Ok(true)
        }
        Command::Tropical { lengths, kind } => {
            let parts: Vec<i64> = lengths
                .split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let f = match (kind.as_str(), parts.as_slice()) {
                ("inner", [a, b, c, d, e]) => tropical_inner(*a, *b, *c, *d, *e),
                ("loop", [a, b, e]) => tropical_loop(*a, *b, *e),
                _ => return Err("expected --kind inner with 5 lengths or loop with 3".into()),
            };
            println!("{f}");
            Ok(true)
        }
        Command::Suite { name } => {
            let cfg = OracleConfig {
                rng_seed: cli.rng_seed,
                points: cli.points,
                tol: cli.tol,
            };
            let Some(items) = run_suite(name, cfg) else {
                return Err(format!(
                    "unknown suite {name}; available: {}",
                    suite_names().join(", ")
                ));
            };
            let mut all = true;
            for item in &items {
                println!(
                    "[{}] {}{}",
                    if item.passed { "PASS" } else { "FAIL" },
                    item.name,
                    if item.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" - {}", item.detail)
                    }
                );
                all &= item.passed;
            }
            Ok(all)
        }
        Command::Builtins => {
            for name in builtin_names() {
                let b = builtin(name).unwrap();
                let basis = b.graph.epsilon_basis();
                let gens: Vec<&str> = basis.ids().map(|g| basis.name(g)).collect::<Vec<_>>();
                println!("{name}: generators {{{}}}", gens.join(", "));
            }
            Ok(true)
        }
    }
}
