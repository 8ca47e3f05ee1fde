//! `ybe`: batch analysis of finite cycle sets and left braces.
//!
//! Exit codes: 0 success, 1 invalid input, 2 usage error, 3 internal
//! consistency violation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ybe::characterize::{analyze, classify_cycle_set, theorem_characterization, Classification};
use ybe::cycleset::enumerate_cycle_sets;
use ybe::io::{self, Format};
use ybe::{gbrace, CycleSet, Error, LeftBrace};

#[derive(Parser, Debug)]
#[command(
    name = "ybe",
    version,
    about = "Cycle sets, Yang-Baxter solutions and left braces"
)]
struct Cli {
    /// Emit reports and errors as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a cycle set, solution or brace file.
    Validate { file: PathBuf },
    /// Validity, decomposability, retraction tower and oracle simplicity.
    Analyze(Input),
    /// The left brace on the permutation group: order, socle, ideals.
    Brace(Input),
    /// The three ideal conditions on the embedded cycle base.
    Theorem(Input),
    /// Simplicity by size, prime and brace branches, checked against the oracle.
    Classify(Input),
    /// List all cycle sets of size n.
    Enumerate {
        n: usize,
        #[arg(long)]
        simple_only: bool,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Embedded examples.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Rewrite a cycle set as a solution or back.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Args, Debug)]
struct Input {
    #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
    file: Option<PathBuf>,
    #[arg(long, value_name = "ID")]
    catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { id: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Solution,
    Cycleset,
}

/// A failure together with its exit code.
enum Failure {
    Usage(String),
    Lib(Error),
    /// Input was read but fails validation; the report is already printed.
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invalid(_) => 1,
            Failure::Lib(Error::Inconsistency(_)) => 3,
            Failure::Lib(Error::SizeGuard { .. }) => 2,
            Failure::Lib(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Invalid(_) => "invalid_input",
            Failure::Lib(e) => match e {
                Error::Inconsistency(_) => "inconsistency",
                Error::SizeGuard { .. } => "size_guard",
                Error::Parse(_) => "parse",
                Error::Precondition(_) => "precondition",
                _ => "invalid_input",
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if cli.json {
                let v = json!({"error": {"kind": f.kind(), "message": f.message(), "exit_code": f.code()}});
                eprintln!("{v}");
            } else {
                eprintln!("error[{}]: {}", f.kind(), f.message());
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => validate(file, json),
        Command::Analyze(input) => {
            let x = load(input)?;
            let fmt = if json { Format::Json } else { Format::Text };
            Ok(io::emit_report(&analyze(&x)?, fmt))
        }
        Command::Brace(input) => brace(input, json),
        Command::Theorem(input) => {
            let x = load(input)?;
            let g = gbrace(&x)?;
            let report = theorem_characterization(&g.brace, &g.base())?;
            if report.equivalent == Some(false) {
                return Err(Error::Inconsistency(format!(
                    "theorem conditions disagree: cond1 = {}, cond2 = {}, cond3 = {}",
                    report.cond1, report.cond2, report.cond3
                ))
                .into());
            }
            if json {
                return Ok(pretty(
                    &serde_json::to_value(&report).expect("report serializes"),
                ));
            }
            let p = &report.preconditions;
            let mut out = String::new();
            let _ = writeln!(out, "brace order:      {}", g.brace.order());
            let _ = writeln!(out, "socle trivial:    {}", yes_no(p.soc_trivial));
            let _ = writeln!(out, "base transitive:  {}", yes_no(p.base_transitive));
            let _ = writeln!(out, "order > 1:        {}", yes_no(p.order_gt_1));
            let _ = writeln!(out, "cond1:            {}", report.cond1);
            let _ = writeln!(out, "cond2:            {}", report.cond2);
            let _ = writeln!(out, "cond3:            {}", report.cond3);
            let minimal: Vec<usize> = report.minimal_ideals.iter().map(Vec::len).collect();
            let _ = writeln!(out, "minimal ideals:   {}", list(&minimal));
            let eq = report.equivalent.map_or("n/a (preconditions fail)", yes_no);
            let _ = writeln!(out, "equivalent:       {eq}");
            let _ = writeln!(out, "action:           {}", report.action);
            Ok(out)
        }
        Command::Classify(input) => {
            let c = classify_cycle_set(&load(input)?)?;
            if json {
                return Ok(pretty(
                    &serde_json::to_value(&c).expect("classification serializes"),
                ));
            }
            Ok(classification_text(&c))
        }
        Command::Enumerate {
            n,
            simple_only,
            up_to_iso,
        } => enumerate(*n, *simple_only, *up_to_iso, json),
        Command::Catalog { action } => catalog(action.as_ref(), json),
        Command::Convert { file, to } => {
            let text = read(file)?;
            let x = cycle_set_from_text(&text)?;
            Ok(match to {
                Target::Solution => io::render_solution(&x.to_solution()),
                Target::Cycleset => io::render_cycle_set(&x),
            })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    v.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

fn read(file: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))
}

fn cycle_set_from_text(text: &str) -> Result<CycleSet, Failure> {
    match io::detect_format(text) {
        Some("solution") => Ok(CycleSet::from_solution(&io::parse_solution(text)?)?),
        Some("brace") => Err(Failure::Invalid(
            "expected a cycle set or solution, found a brace".into(),
        )),
        _ => Ok(io::parse_cycle_set(text)?),
    }
}

fn catalog_cycle_set(id: &str) -> Result<CycleSet, Failure> {
    if !io::catalog_ids().contains(&id) {
        return Err(Failure::Usage(format!(
            "unknown catalog id '{id}' (known: {})",
            io::catalog_ids().join(", ")
        )));
    }
    Ok(io::catalog_entry(id)?.cycle_set)
}

fn load(input: &Input) -> Result<CycleSet, Failure> {
    match (&input.file, &input.catalog) {
        (Some(file), None) => cycle_set_from_text(&read(file)?),
        (None, Some(id)) => catalog_cycle_set(id),
        _ => Err(Failure::Usage(
            "give exactly one of <FILE> or --catalog ID".into(),
        )),
    }
}

fn validate(file: &PathBuf, json: bool) -> Outcome {
    let text = read(file)?;
    let format = io::detect_format(&text).unwrap_or("cycleset");
    let (size, result) = match format {
        "brace" => match io::parse_brace(&text) {
            Ok(b) => (Some(b.order()), Ok(())),
            Err(e) => (None, Err(e)),
        },
        _ => match cycle_set_from_text(&text) {
            Ok(x) => (Some(x.size()), Ok(())),
            Err(Failure::Lib(e)) => (None, Err(e)),
            Err(f) => return Err(f),
        },
    };
    if let Err(e @ Error::Parse(_)) = result {
        return Err(e.into());
    }
    let violation = result.as_ref().err().map(ToString::to_string);
    let out = if json {
        pretty(&json!({
            "format": format,
            "valid": violation.is_none(),
            "size": size,
            "violation": violation,
        }))
    } else {
        let mut out = format!(
            "format: {format}\nvalid:  {}\n",
            yes_no(violation.is_none())
        );
        if let Some(n) = size {
            let _ = writeln!(out, "size:   {n}");
        }
        if let Some(v) = &violation {
            let _ = writeln!(out, "violation: {v}");
        }
        out
    };
    match violation {
        None => Ok(out),
        Some(v) => {
            print!("{out}");
            Err(Failure::Invalid(v))
        }
    }
}

fn brace(input: &Input, json: bool) -> Outcome {
    let x = load(input)?;
    let g = gbrace(&x)?;
    let b: &LeftBrace = &g.brace;
    let socle = b.socle()?;
    let lattice = b.all_ideals()?;
    let minimal: Vec<Vec<usize>> = lattice
        .minimal()
        .iter()
        .map(|i| i.elements().to_vec())
        .collect();
    let simple = lattice.len() == 2;
    if json {
        return Ok(pretty(&json!({
            "order": b.order(),
            "socle": socle.elements(),
            "socle_size": socle.len(),
            "ideal_sizes": lattice.sizes(),
            "minimal_ideals": minimal,
            "simple_brace": simple,
            "trivial_brace": b.is_trivial_brace(),
            "cyclic_additive": b.is_cyclic_additive(),
            "base": g.base(),
        })));
    }
    let minimal_sizes: Vec<usize> = minimal.iter().map(Vec::len).collect();
    let mut out = String::new();
    let _ = writeln!(out, "order:               {}", b.order());
    let _ = writeln!(out, "socle size:          {}", socle.len());
    let _ = writeln!(out, "ideal sizes:         {}", list(&lattice.sizes()));
    let _ = writeln!(out, "minimal ideal sizes: {}", list(&minimal_sizes));
    let _ = writeln!(out, "simple brace:        {}", yes_no(simple));
    let _ = writeln!(out, "trivial brace:       {}", yes_no(b.is_trivial_brace()));
    let _ = writeln!(
        out,
        "cyclic additive:     {}",
        yes_no(b.is_cyclic_additive())
    );
    Ok(out)
}

fn classification_text(c: &Classification) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "size:           {}", c.size);
    let _ = writeln!(out, "branch:         {}", c.branch.as_str());
    let _ = writeln!(out, "simple:         {}", yes_no(c.simple));
    let _ = writeln!(out, "indecomposable: {}", yes_no(c.indecomposable));
    let _ = writeln!(out, "irretractable:  {}", yes_no(c.irretractable));
    let _ = writeln!(out, "oracle agrees:  {}", yes_no(c.oracle_agrees));
    out
}

fn one_based(x: &CycleSet) -> Vec<Vec<usize>> {
    x.table()
        .iter()
        .map(|r| r.iter().map(|v| v + 1).collect())
        .collect()
}

fn enumerate(n: usize, simple_only: bool, up_to_iso: bool, json: bool) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let all = enumerate_cycle_sets(n, up_to_iso, ybe::cycleset::DEFAULT_ENUMERATION_LIMIT)?;
    let mut rows = Vec::new();
    for x in &all {
        let c = classify_cycle_set(x)?;
        if simple_only && !c.simple {
            continue;
        }
        rows.push((x, c));
    }
    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(x, c)| {
                json!({
                    "table": one_based(x),
                    "simple": c.simple,
                    "branch": c.branch.as_str(),
                })
            })
            .collect();
        return Ok(pretty(&json!({
            "n": n,
            "up_to_iso": up_to_iso,
            "simple_only": simple_only,
            "count": items.len(),
            "cycle_sets": items,
        })));
    }
    let mut out = String::new();
    for (i, (x, c)) in rows.iter().enumerate() {
        let _ = writeln!(
            out,
            "# {} simple={} branch={}",
            i + 1,
            yes_no(c.simple),
            c.branch.as_str()
        );
        out.push_str(&io::render_cycle_set(x));
        out.push('\n');
    }
    let _ = writeln!(out, "# total {}", rows.len());
    Ok(out)
}

fn catalog(action: Option<&CatalogAction>, json: bool) -> Outcome {
    match action {
        None | Some(CatalogAction::List) => {
            let entries = io::catalog();
            if json {
                let items: Vec<Value> = entries
                    .iter()
                    .map(|e| {
                        json!({
                            "id": e.id,
                            "size": e.cycle_set.size(),
                            "description": e.description,
                            "provenance": e.provenance,
                        })
                    })
                    .collect();
                return Ok(pretty(&Value::Array(items)));
            }
            let mut out = String::new();
            for e in &entries {
                let _ = writeln!(
                    out,
                    "{:<5} size {:>2}  {}",
                    e.id,
                    e.cycle_set.size(),
                    e.description
                );
            }
            Ok(out)
        }
        Some(CatalogAction::Show { id }) => {
            catalog_cycle_set(id)?;
            let e = io::catalog_entry(id)?;
            if json {
                return Ok(pretty(&json!({
                    "id": e.id,
                    "description": e.description,
                    "provenance": e.provenance,
                    "size": e.cycle_set.size(),
                    "table": one_based(&e.cycle_set),
                    "expected": {
                        "group_order": e.expected.group_order,
                        "ideal_sizes": e.expected.ideal_sizes,
                        "simple": e.expected.simple,
                        "brace_simple": e.expected.brace_simple,
                        "irretractable": e.expected.irretractable,
                    },
                })));
            }
            Ok(e.source.to_string())
        }
    }
}
