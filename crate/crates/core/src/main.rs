use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mu_sat::apt::formula_to_apt;
use mu_sat::formula::{check_guarded, classify_fragment, closure, make_clean, parse, Formula};
use mu_sat::game::{ArenaMode, StrategyArena, TrackingAutomaton};
use mu_sat::kripke::KripkeStructure;
use mu_sat::pipeline::{decide_sat, model_check, Method, PipelineReport, SatOptions, Verdict};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mu-sat", version, about = "Satisfiability and model checking for the modal mu-calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide satisfiability; exit 0 if satisfiable, 1 if not.
    Sat {
        /// Formula file, or `-` for standard input.
        file: String,
        #[arg(long, value_enum, default_value_t = FragmentArg::Auto)]
        fragment: FragmentArg,
        /// Where to write the verified witness model (Kripke JSON).
        /// Defaults to `<file>.witness.json`, or `witness.json` for stdin.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum)]
        stats: Option<StatsFormat>,
        /// Write apt.dot, arena.dot and game.dot into this directory.
        #[arg(long)]
        dump_dot: Option<PathBuf>,
        /// Let ◇ pick letters explicitly instead of reading them off atoms.
        #[arg(long)]
        literal: bool,
    },
    /// Print the most specific fragment of a formula.
    Classify { file: String },
    /// Model check; exit 0 if the structure satisfies the formula, 1 if not.
    Mc { formula: String, structure: PathBuf },
    /// Print an intermediate object as DOT.
    Dump {
        #[arg(value_enum)]
        what: DumpWhat,
        file: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FragmentArg {
    Auto,
    Circle,
    Mh,
    Focus,
    Perm,
}

impl FragmentArg {
    fn method(self) -> Option<Method> {
        match self {
            FragmentArg::Auto => None,
            FragmentArg::Circle => Some(Method::Circle),
            FragmentArg::Mh => Some(Method::MiyanoHayashi),
            FragmentArg::Focus => Some(Method::Focus),
            FragmentArg::Perm => Some(Method::Permutation),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpWhat {
    Apt,
    Tracking,
    Arena,
    Game,
}

fn read_formula(file: &str) -> Result<Formula> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(file).with_context(|| format!("reading {file}"))?
    };
    parse(&text).with_context(|| format!("parsing {file}"))
}

fn print_table(r: &PipelineReport) {
    let s = &r.sizes;
    let rows: Vec<(&str, String)> = vec![
        ("fragment", r.fragment.best_fragment.to_string()),
        ("method", r.method.to_string()),
        ("alternation depth", r.fragment.ad.to_string()),
        ("|FL|", s.closure.to_string()),
        ("automaton states", s.apt_states.to_string()),
        ("automaton priorities", s.apt_priorities.to_string()),
        ("tracking states", s.tracking_states.to_string()),
        ("H states", format!("{} (bound {})", s.h_states, s.h_bound)),
        ("arena nodes", format!("{} (bound {})", s.arena_nodes, s.arena_bound)),
        ("game nodes", s.game_nodes.to_string()),
        ("game edges", s.game_edges.to_string()),
        ("game priorities", s.game_priorities.to_string()),
    ];
    for (k, v) in rows {
        println!("{k:<22}{v}");
    }
    for t in &r.timings {
        println!("{:<22}{:.3} ms", format!("time {}", t.stage), t.millis);
    }
}

fn sat(file: &str, fragment: FragmentArg, witness: Option<&Path>, stats: Option<StatsFormat>, dump_dot: Option<&Path>, literal: bool) -> Result<bool> {
    let f = read_formula(file)?;
    let opts = SatOptions {
        method: fragment.method(),
        arena: if literal { ArenaMode::Literal } else { ArenaMode::Sat },
        witness: true,
        dot: dump_dot.is_some(),
    };
    let report = decide_sat(&f, &opts)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let sat = report.verdict == Verdict::Sat;
    println!("{}", if sat { "sat" } else { "unsat" });
    if let Some(k) = &report.witness {
        let path = match witness {
            Some(p) => p.to_path_buf(),
            None if file == "-" => PathBuf::from("witness.json"),
            None => Path::new(file).with_extension("witness.json"),
        };
        std::fs::write(&path, k.to_json()).with_context(|| format!("writing {}", path.display()))?;
        println!("witness: {} ({} worlds)", path.display(), k.len());
    }
    if let Some(dir) = dump_dot {
        std::fs::create_dir_all(dir)?;
        for (name, dot) in &report.dot {
            std::fs::write(dir.join(format!("{name}.dot")), dot)?;
        }
    }
    match stats {
        Some(StatsFormat::Json) => println!("{}", serde_json::to_string_pretty(&report)?),
        Some(StatsFormat::Table) => print_table(&report),
        None => {}
    }
    Ok(sat)
}

fn dump(what: DumpWhat, file: &str) -> Result<()> {
    let f = read_formula(file)?;
    let (clean, _) = make_clean(&f);
    if !check_guarded(&clean) {
        bail!("formula is not guarded");
    }
    let apt = formula_to_apt(&clean, &closure(&clean))?;
    let dot = match what {
        DumpWhat::Apt => apt.to_dot(),
        DumpWhat::Tracking => TrackingAutomaton::new(&apt, ArenaMode::Sat).to_dot(),
        DumpWhat::Arena => StrategyArena::build(&apt, ArenaMode::Sat).to_dot(),
        DumpWhat::Game => {
            let opts = SatOptions {
                witness: false,
                dot: true,
                ..SatOptions::default()
            };
            let report = decide_sat(&f, &opts)?;
            report.dot.into_iter().find(|(n, _)| *n == "game").map(|(_, d)| d).unwrap_or_default()
        }
    };
    print!("{dot}");
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Sat {
            file,
            fragment,
            witness,
            stats,
            dump_dot,
            literal,
        } => sat(&file, fragment, witness.as_deref(), stats, dump_dot.as_deref(), literal),
        Command::Classify { file } => {
            let f = read_formula(&file)?;
            let (clean, _) = make_clean(&f);
            let r = classify_fragment(&clean);
            println!("{}", r.best_fragment);
            println!("alternation depth: {}", r.ad);
            println!("|FL|: {}", closure(&clean).len());
            println!("guarded: {}", check_guarded(&clean));
            Ok(true)
        }
        Command::Mc { formula, structure } => {
            let f = read_formula(&formula)?;
            let text = std::fs::read_to_string(&structure).with_context(|| format!("reading {}", structure.display()))?;
            let k = KripkeStructure::from_json(&text).with_context(|| format!("loading {}", structure.display()))?;
            let holds = model_check(&f, &k)?;
            println!("{holds}");
            Ok(holds)
        }
        Command::Dump { what, file } => dump(what, &file).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
