//! Command-line surface: argument types, dispatch, rendering, and the
//! exit-code contract (0 success, 1 internal failure, 2 input error,
//! 3 negative answer).

use std::io::Read as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use chromatic_monoid::{
    catalogue3, enumerate_q, is_thread_realizable, kappa, q_poset, submonoid_closure, thread_set,
    ChromaticError, UpSet, DEFAULT_CLOSURE_BUDGET, N_STAR_CAP,
};
use poset_core::{MonotoneMap, Poset, PosetError, PosetJson, Subdivision};
use poset_homotopy::{
    core_reduction, is_homotopy_cofinal, is_homotopy_final, CofinalityReport, HomotopyError,
};

use crate::expr::parse_and_eval;
use crate::verify::{all_records, check_property};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

/// Explorer for level-support families and finite-poset homotopy.
#[derive(Parser)]
#[command(name = "chromalat", version, about)]
pub struct Cli {
    /// Height: level sets draw from {0, …, n−1}
    #[arg(long = "n", global = true, default_value_t = 3, value_name = "HEIGHT")]
    pub n: u8,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Emit DOT where the command has a graph rendering
    #[arg(long, global = true)]
    pub dot: bool,

    /// Seed for sampled sweeps
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Sweep this many random cases instead of running exhaustively
    #[arg(long, global = true, conflicts_with = "exhaustive", value_name = "COUNT")]
    pub samples: Option<u64>,

    /// Force the exhaustive sweep (the default where one is feasible)
    #[arg(long, global = true)]
    pub exhaustive: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// List every upward-closed family at the current height
    #[command(name = "enum")]
    Enumerate {
        /// Attach catalogue names (height 3 only)
        #[arg(long)]
        names: bool,
    },
    /// Evaluate an expression and print the resulting family
    Eval { expr: String },
    /// Close the given families under the product
    Closure {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Find a thread list realizing the family, if any (exit 3 when none)
    Realize { expr: String },
    /// Print the level support of the family
    Kappa { expr: String },
    /// Run one invariant sweep (exit 3 when it finds a counterexample)
    Check { property: String },
    /// Run every built-in verification sweep (exit 0 iff all pass)
    VerifyPaper,
    /// Operate on explicit posets given as JSON (inline, file, or "-")
    Poset {
        #[command(subcommand)]
        op: PosetOp,
    },
    /// Print a DOT Hasse diagram of the element poset, or of a family's members
    Hasse { expr: Option<String> },
}

#[derive(Subcommand)]
pub enum PosetOp {
    /// Strip beat points down to the core (exit 3 when it is not a point)
    Core { input: String },
    /// Decide homotopy cofinality of a monotone map into the poset
    Cofinal { dom: String, map: String },
    /// Decide homotopy finality of a monotone map into the poset
    Final { dom: String, map: String },
    /// Barycentric subdivision with the greatest-member projection
    Subdivide { input: String },
    /// Count connected components
    Pi0 { input: String },
}

/// Monotone map serialisation: an assignment into an explicit codomain.
#[derive(Deserialize)]
struct MapJson {
    assignment: Vec<usize>,
    cod: PosetJson,
}

enum Outcome {
    Ok,
    Negative,
}

enum CmdError {
    Input(String),
    Internal(String),
}

type CmdResult = Result<Outcome, CmdError>;

/// Parses arguments from the process environment, runs the command, and
/// returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Negative) => EXIT_NEGATIVE,
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(CmdError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    if cli.n > N_STAR_CAP {
        return Err(CmdError::Input(format!(
            "--n {} exceeds the height cap of {N_STAR_CAP}",
            cli.n
        )));
    }
    match &cli.command {
        Command::Enumerate { names } => cmd_enum(cli, *names),
        Command::Eval { expr } => cmd_eval(cli, expr),
        Command::Closure { exprs } => cmd_closure(cli, exprs),
        Command::Realize { expr } => cmd_realize(cli, expr),
        Command::Kappa { expr } => cmd_kappa(cli, expr),
        Command::Check { property } => cmd_check(cli, property),
        Command::VerifyPaper => cmd_verify_paper(cli),
        Command::Poset { op } => cmd_poset(cli, op),
        Command::Hasse { expr } => cmd_hasse(cli, expr.as_deref()),
    }
}

/// Witness-validation failures are internal (a claimed certificate did not
/// certify); everything else a library rejects is bad input.
fn chroma_err(e: ChromaticError) -> CmdError {
    match &e {
        ChromaticError::Homotopy(HomotopyError::WitnessFailure { .. }) => {
            CmdError::Internal(e.to_string())
        }
        ChromaticError::ClosureBudget { .. } => CmdError::Input(format!(
            "{e}; raise CHROMALAT_BUDGET to allow more work"
        )),
        ChromaticError::Poset(PosetError::BudgetExceeded { .. }) => CmdError::Input(format!(
            "{e}; raise CHROMALAT_BUDGET to allow more work"
        )),
        _ => CmdError::Input(e.to_string()),
    }
}

fn poset_err(e: PosetError) -> CmdError {
    match &e {
        PosetError::BudgetExceeded { .. } => CmdError::Input(format!(
            "{e}; raise CHROMALAT_BUDGET to allow more work"
        )),
        _ => CmdError::Input(e.to_string()),
    }
}

fn budget() -> Result<u64, CmdError> {
    match std::env::var("CHROMALAT_BUDGET") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            CmdError::Input(format!(
                "CHROMALAT_BUDGET must be an unsigned integer, got \"{s}\""
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CLOSURE_BUDGET),
        Err(e) => Err(CmdError::Input(format!("CHROMALAT_BUDGET: {e}"))),
    }
}

fn parse_value(text: &str, n: u8) -> Result<UpSet, CmdError> {
    parse_and_eval(text, n).map_err(|e| CmdError::Input(e.to_string()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serialises")
}

/// `"-"` reads stdin; an existing path reads the file; anything else is
/// taken as inline JSON.
fn read_input(source: &str) -> Result<String, CmdError> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CmdError::Input(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    let path = std::path::Path::new(source);
    if path.exists() {
        return std::fs::read_to_string(path)
            .map_err(|e| CmdError::Input(format!("reading {source}: {e}")));
    }
    Ok(source.to_string())
}

fn load_poset(source: &str) -> Result<Arc<Poset>, CmdError> {
    let text = read_input(source)?;
    let pj: PosetJson = serde_json::from_str(&text)
        .map_err(|e| CmdError::Input(format!("poset JSON: {e}")))?;
    Ok(Arc::new(Poset::from_json(&pj).map_err(poset_err)?))
}

fn cmd_enum(cli: &Cli, names: bool) -> CmdResult {
    if names && cli.n != 3 {
        return Err(CmdError::Input(
            "--names requires --n 3 (the catalogue height)".into(),
        ));
    }
    if cli.dot {
        let qp = q_poset(cli.n).map_err(chroma_err)?;
        print!("{}", qp.poset().to_dot());
        return Ok(Outcome::Ok);
    }
    let elements = enumerate_q(cli.n).map_err(chroma_err)?;
    let catalogue: Vec<(&str, UpSet)> = if names { catalogue3() } else { Vec::new() };
    let name_of = |u: &UpSet| {
        catalogue
            .iter()
            .find(|(_, c)| c == u)
            .map(|(s, _)| s.to_string())
    };
    if cli.json {
        let items: Vec<Value> = elements
            .iter()
            .enumerate()
            .map(|(i, u)| {
                let mut v = json!({
                    "index": i,
                    "render": u.render(),
                    "family": u.family(),
                });
                if let Some(name) = name_of(u) {
                    v["name"] = json!(name);
                }
                v
            })
            .collect();
        println!(
            "{}",
            pretty(&json!({
                "n": cli.n,
                "count": elements.len(),
                "elements": items,
            }))
        );
        return Ok(Outcome::Ok);
    }
    println!("|Q| = {}", elements.len());
    for (i, u) in elements.iter().enumerate() {
        match name_of(u) {
            Some(name) => println!("{i:>5}  {name:<5} {}", u.render()),
            None => println!("{i:>5}  {}", u.render()),
        }
    }
    Ok(Outcome::Ok)
}

fn cmd_eval(cli: &Cli, text: &str) -> CmdResult {
    let value = parse_value(text, cli.n)?;
    if cli.json {
        let minimal: Vec<String> = value.minimal_members().iter().map(|m| m.render()).collect();
        println!(
            "{}",
            pretty(&json!({
                "n": cli.n,
                "render": value.render(),
                "family": value.family(),
                "minimal": minimal,
            }))
        );
    } else {
        println!("{}", value.render());
    }
    Ok(Outcome::Ok)
}

fn word(witness: &[usize]) -> String {
    if witness.is_empty() {
        "(identity)".into()
    } else {
        witness
            .iter()
            .map(|g| format!("g{g}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn cmd_closure(cli: &Cli, exprs: &[String]) -> CmdResult {
    let generators: Vec<UpSet> = exprs
        .iter()
        .map(|t| parse_value(t, cli.n))
        .collect::<Result<_, _>>()?;
    let closure = submonoid_closure(cli.n, &generators, budget()?).map_err(chroma_err)?;
    if cli.json {
        let elements: Vec<Value> = closure
            .elements
            .iter()
            .enumerate()
            .map(|(i, u)| {
                json!({
                    "index": i,
                    "word": word(&closure.witnesses[i]),
                    "witness": closure.witnesses[i],
                    "render": u.render(),
                    "family": u.family(),
                })
            })
            .collect();
        println!(
            "{}",
            pretty(&json!({
                "n": cli.n,
                "count": closure.len(),
                "generators": exprs,
                "elements": elements,
                "cayley": closure.cayley,
            }))
        );
        return Ok(Outcome::Ok);
    }
    println!("|closure| = {}", closure.len());
    for (i, u) in closure.elements.iter().enumerate() {
        println!("{i:>5}  {:<18} {}", word(&closure.witnesses[i]), u.render());
    }
    Ok(Outcome::Ok)
}

fn cmd_realize(cli: &Cli, text: &str) -> CmdResult {
    let value = parse_value(text, cli.n)?;
    match is_thread_realizable(&value).map_err(chroma_err)? {
        Some(t) => {
            let check = thread_set(&t);
            if check != value {
                return Err(CmdError::Internal(format!(
                    "the witness {t} re-evaluates to {check}, not {value}"
                )));
            }
            if cli.json {
                println!(
                    "{}",
                    pretty(&json!({
                        "n": cli.n,
                        "realizable": true,
                        "witness": t.render(),
                        "value": value.render(),
                    }))
                );
            } else {
                println!("{}", t.render());
            }
            Ok(Outcome::Ok)
        }
        None => {
            if cli.json {
                println!(
                    "{}",
                    pretty(&json!({
                        "n": cli.n,
                        "realizable": false,
                        "value": value.render(),
                    }))
                );
            } else {
                println!("not realizable");
            }
            Ok(Outcome::Negative)
        }
    }
}

fn cmd_kappa(cli: &Cli, text: &str) -> CmdResult {
    let value = parse_value(text, cli.n)?;
    let support = kappa(&value);
    if cli.json {
        println!(
            "{}",
            pretty(&json!({
                "n": cli.n,
                "value": value.render(),
                "kappa": support.render(),
                "levels": support.levels(),
            }))
        );
    } else {
        println!("{}", support.render());
    }
    Ok(Outcome::Ok)
}

fn cmd_check(cli: &Cli, property: &str) -> CmdResult {
    let sample = cli.samples.map(|k| (k, cli.seed));
    let record = check_property(property, cli.n, sample, cli.seed).map_err(CmdError::Input)?;
    if cli.json {
        println!("{}", pretty(&record.to_json()));
    } else {
        println!("{}", record.render_line());
    }
    if record.passed {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Negative)
    }
}

fn cmd_verify_paper(cli: &Cli) -> CmdResult {
    let records = all_records();
    let passed = records.iter().filter(|r| r.passed).count();
    if cli.json {
        let arr: Vec<Value> = records.iter().map(|r| r.to_json()).collect();
        println!("{}", pretty(&Value::Array(arr)));
    } else {
        for r in &records {
            println!("{}", r.render_line());
        }
        println!("{passed}/{} checks passed", records.len());
    }
    if passed == records.len() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Negative)
    }
}

fn cmd_poset(cli: &Cli, op: &PosetOp) -> CmdResult {
    match op {
        PosetOp::Core { input } => {
            let p = load_poset(input)?;
            let red = core_reduction(&p);
            let contractible = !p.is_empty() && red.core.size() == 1;
            if cli.dot {
                print!("{}", red.core.to_dot());
            } else if cli.json {
                println!(
                    "{}",
                    pretty(&json!({
                        "size": p.size(),
                        "core_size": red.core.size(),
                        "kept": red.kept,
                        "contractible": contractible,
                        "core": serde_json::to_value(red.core.to_json())
                            .expect("poset JSON serialises"),
                    }))
                );
            } else {
                println!(
                    "core keeps {} of {} points: {:?}",
                    red.core.size(),
                    p.size(),
                    red.kept
                );
                println!(
                    "{}",
                    if contractible {
                        "strongly contractible"
                    } else {
                        "not strongly contractible"
                    }
                );
            }
            if contractible {
                Ok(Outcome::Ok)
            } else {
                Ok(Outcome::Negative)
            }
        }
        PosetOp::Cofinal { dom, map } => poset_direction(cli, dom, map, true),
        PosetOp::Final { dom, map } => poset_direction(cli, dom, map, false),
        PosetOp::Subdivide { input } => {
            let p = load_poset(input)?;
            let sd = Subdivision::with_cap(&p, budget()?).map_err(poset_err)?;
            let max_dim = (0..sd.len()).map(|i| sd.chain(i).dim()).max();
            let mut by_dimension = vec![0usize; max_dim.map_or(0, |d| d + 1)];
            for i in 0..sd.len() {
                by_dimension[sd.chain(i).dim()] += 1;
            }
            if cli.dot {
                print!("{}", sd.poset.to_dot());
            } else if cli.json {
                println!(
                    "{}",
                    pretty(&json!({
                        "size": p.size(),
                        "chains": sd.len(),
                        "by_dimension": by_dimension,
                        "poset": serde_json::to_value(sd.poset.to_json())
                            .expect("poset JSON serialises"),
                        "max_assignment": sd.max_map.assignment(),
                    }))
                );
            } else {
                println!("{} chains over {} points", sd.len(), p.size());
                for (d, k) in by_dimension.iter().enumerate() {
                    println!("  dimension {d}: {k}");
                }
            }
            Ok(Outcome::Ok)
        }
        PosetOp::Pi0 { input } => {
            let p = load_poset(input)?;
            let classes = p.pi0();
            if cli.json {
                println!(
                    "{}",
                    pretty(&json!({
                        "size": p.size(),
                        "count": classes.len(),
                        "classes": classes,
                    }))
                );
            } else {
                println!("{} connected components", classes.len());
                for (i, class) in classes.iter().enumerate() {
                    let labels: Vec<&str> = class.iter().map(|&x| p.label(x)).collect();
                    println!("  {i}: {}", labels.join(", "));
                }
            }
            Ok(Outcome::Ok)
        }
    }
}

fn render_report(cli: &Cli, report: &CofinalityReport, cod: &Poset) {
    if cli.json {
        println!("{}", pretty(&report.to_json()));
        return;
    }
    println!("verdict: {}", report.verdict.as_str());
    for e in &report.evidence {
        println!(
            "  at {}: comma of size {} — {}",
            cod.label(e.element),
            e.comma_size,
            if e.contractible {
                "contractible"
            } else {
                "not contractible"
            }
        );
    }
}

fn poset_direction(cli: &Cli, dom: &str, map: &str, cofinal: bool) -> CmdResult {
    let p = load_poset(dom)?;
    let text = read_input(map)?;
    let mj: MapJson =
        serde_json::from_str(&text).map_err(|e| CmdError::Input(format!("map JSON: {e}")))?;
    let cod = Arc::new(Poset::from_json(&mj.cod).map_err(poset_err)?);
    let f = MonotoneMap::new(p, cod.clone(), mj.assignment).map_err(poset_err)?;
    let report = if cofinal {
        is_homotopy_cofinal(&f)
    } else {
        is_homotopy_final(&f)
    };
    render_report(cli, &report, &cod);
    if report.holds() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Negative)
    }
}

fn cmd_hasse(cli: &Cli, expr: Option<&str>) -> CmdResult {
    match expr {
        None => {
            let qp = q_poset(cli.n).map_err(chroma_err)?;
            print!("{}", qp.poset().to_dot());
        }
        Some(text) => {
            let value = parse_value(text, cli.n)?;
            let members = value.members();
            let labels: Vec<String> = members.iter().map(|m| m.render()).collect();
            let mut pairs = Vec::new();
            for (i, a) in members.iter().enumerate() {
                for (j, b) in members.iter().enumerate() {
                    if i != j && a.is_subset(b) {
                        pairs.push((i, j));
                    }
                }
            }
            let p = Poset::build(labels, &pairs).map_err(poset_err)?;
            print!("{}", p.to_dot());
        }
    }
    Ok(Outcome::Ok)
}
