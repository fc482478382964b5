//! `tanglekit`: link invariants for rational-move equivalence from the command line.
//!
//! Every command builds one JSON report; `--text` renders that same value.
//! The exit code is 0 iff every assertion in the report passed, 1 if one
//! failed, and 2 if the command could not run.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tanglekit::braid::{self, conjugacy_census, shared_quotient, verify_braid_identities};
use tanglekit::coloring::{col_group, has_nontrivial_colorings};
use tanglekit::diagram::corpus::{self, CorpusEntry};
use tanglekit::diagram::{braid_closure, parse_pd};
use tanglekit::jones::{five_move_obstruction, in_t, jones};
use tanglekit::kei::{burnside_kei, core_group_presentation, enumerate, fundamental_kei, kei_isomorphic};
use tanglekit::suite::{self, Family, SuiteConfig};
use tanglekit::tangle::{apply_rational_move, embedding_obstruction, Closure};
use tanglekit::{BraidWord, Error, FiniteKei, KeiPresentation, LaurentPoly, LinkDiagram, Result, TangleExpr};

use report::{error_json, render_text, Report};

#[derive(Parser)]
#[command(name = "tanglekit", version, about = "Link invariants for rational-move equivalence")]
struct Cli {
    /// Print an indented text rendering instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 2005)]
    seed: u64,
    /// Include wall time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    /// Element cap for Kei enumeration.
    #[arg(long, global = true, env = "TANGLEKIT_CAP", default_value_t = tanglekit::DEFAULT_KEI_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

/// A diagram argument: a corpus name, a PD file, or `braid:<word>`.
#[derive(Args)]
struct DiagramArg {
    diagram: String,
}

#[derive(Subcommand)]
enum Command {
    /// The group of Fox n-colorings.
    Color {
        diagram: String,
        #[arg(long)]
        n: u64,
    },
    #[command(subcommand)]
    Kei(KeiCommand),
    #[command(subcommand)]
    Braid(BraidCommand),
    #[command(subcommand)]
    Tangle(TangleCommand),
    /// The Jones polynomial in t^(1/2).
    Jones(DiagramArg),
    /// The Jones polynomial evaluated at t = exp(i pi/5) and its 5-move verdict.
    Jones5(DiagramArg),
    #[command(subcommand)]
    Corpus(CorpusCommand),
    /// Components, Col3, Col5, BQ5 size and the Jones verdict.
    Invariants {
        diagram: String,
        /// Cap for the BQ5 enumeration; the global cap still bounds it.
        #[arg(long, default_value_t = 2000)]
        bq_cap: usize,
    },
}

#[derive(Subcommand)]
enum KeiCommand {
    /// Checks the Kei axioms on a table file.
    Check { file: PathBuf },
    /// Searches for an isomorphism between two table files.
    Iso { first: PathBuf, second: PathBuf },
    /// Enumerates a finitely presented Kei from a presentation file.
    Enum {
        file: PathBuf,
        /// Include the multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// Enumerates the n-th Burnside quotient of a diagram's fundamental Kei.
    Burnside {
        diagram: String,
        #[arg(long, default_value_t = 5)]
        n: u32,
    },
    /// Exports the fundamental Kei and core group presentations.
    Present(DiagramArg),
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Burau matrix and quotient image of a 3-strand braid word.
    Image {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Order, center and full-twist order of B3/<<s1^5>>.
    QuotientOrder,
    /// Conjugacy classes of B3/<<s1^5>> with shortest representatives.
    Census,
    /// Verifies each displayed braid identity.
    #[command(name = "verify-prop27")]
    VerifyProp27,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Num,
    Den,
}

#[derive(Subcommand)]
enum TangleCommand {
    /// The numerator or denominator closure of a tangle.
    Closure {
        expr: String,
        #[arg(long, value_enum, default_value_t = Kind::Num)]
        kind: Kind,
    },
    /// Replaces the zero tangle at a site by the rational tangle n/q.
    Move {
        expr: String,
        #[arg(long)]
        site: String,
        #[arg(long, default_value_t = 5)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        q: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i8,
    },
    /// Can the tangle sit inside a diagram n-move equivalent to the target?
    Obstruct {
        expr: String,
        target: String,
        #[arg(long, default_value_t = 5)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Runs the acceptance checks.
    Verify {
        /// Corpus file to use instead of the embedded one.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Restrict to check families (braid, kei, coloring, tangle, jones).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Instances per randomized family.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
    /// Lists the diagrams of a corpus.
    List {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))
}

fn load_diagram(spec: &str) -> Result<LinkDiagram> {
    if let Some(word) = spec.strip_prefix("braid:") {
        return Ok(braid_closure(&BraidWord::parse_auto(word)?));
    }
    let path = Path::new(spec);
    if path.is_file() {
        let text = read(path)?;
        return if text.contains("name:") {
            corpus::parse_corpus(&text)?
                .into_iter()
                .next()
                .map(|e| e.diagram)
                .ok_or_else(|| Error::Corpus(format!("{spec}: no records")))
        } else {
            parse_pd(&text)
        };
    }
    corpus::get(spec)
        .ok_or_else(|| Error::Corpus(format!("{spec:?} is neither a file, a braid:<word>, nor a corpus name")))
}

fn load_corpus(path: Option<&Path>) -> Result<Vec<CorpusEntry>> {
    match path {
        Some(p) => corpus::load_file(p),
        None => Ok(corpus::embedded()),
    }
}

fn color(diagram: &str, n: u64) -> Result<Report> {
    let d = load_diagram(diagram)?;
    let g = col_group(&d, n)?;
    let results = json!({
        "group": g.cyclic_orders,
        "order": g.order().to_string(),
        "nontrivial": has_nontrivial_colorings(&d, n)?,
    });
    Ok(Report::new("color", json!({"diagram": diagram, "n": n}), results))
}

fn kei(cmd: &KeiCommand, cap: usize) -> Result<Report> {
    Ok(match cmd {
        KeiCommand::Check { file } => {
            let k = FiniteKei::parse_text(&read(file)?)?;
            let violations = k.check_axioms();
            let results = json!({
                "size": k.size(),
                "commutative": k.is_commutative(),
                "violations": violations.iter().take(10).collect::<Vec<_>>(),
                "violation_count": violations.len(),
            });
            Report::new("kei check", json!({"file": file}), results).assert("kei axioms", violations.is_empty(), None)
        }
        KeiCommand::Iso { first, second } => {
            let a = FiniteKei::parse_text(&read(first)?)?;
            let b = FiniteKei::parse_text(&read(second)?)?;
            let map = kei_isomorphic(&a, &b);
            let results = json!({"isomorphic": map.is_some(), "map": map});
            Report::new("kei iso", json!({"first": first, "second": second}), results)
        }
        KeiCommand::Enum { file, table } => {
            let p = KeiPresentation::parse_text(&read(file)?)?;
            let r = enumerate(&p, cap);
            let mut results = serde_json::to_value(r.summary()).expect("summary serializes");
            if *table {
                results["table"] = json!(r.kei().map(FiniteKei::rows));
            }
            Report::new("kei enum", json!({"file": file, "cap": cap}), results)
        }
        KeiCommand::Burnside { diagram, n } => {
            let r = burnside_kei(&load_diagram(diagram)?, *n, cap);
            Report::new(
                "kei burnside",
                json!({"diagram": diagram, "n": n, "cap": cap}),
                r.summary(),
            )
        }
        KeiCommand::Present(DiagramArg { diagram }) => {
            let d = load_diagram(diagram)?;
            let results = json!({
                "kei": fundamental_kei(&d).to_text(),
                "core_group": core_group_presentation(&d).to_text(),
            });
            Report::new("kei present", json!({"diagram": diagram}), results)
        }
    })
}

fn braid_cmd(cmd: &BraidCommand) -> Result<Report> {
    let q = shared_quotient();
    Ok(match cmd {
        BraidCommand::Image { word } => {
            let w = BraidWord::parse(3, word)?;
            let e = q.image(&w)?;
            let results = json!({
                "burau": braid::burau_image(&w)?,
                "quotient_element": e,
                "quotient_normal_form": q.word(e).to_string(),
                "element_order": q.element_order(e),
                "central": q.is_central(e),
            });
            Report::new("braid image", json!({"word": word}), results)
        }
        BraidCommand::QuotientOrder => {
            let twist = q.image(&BraidWord::new(3, vec![1, 2])?.pow(3))?;
            let center = (0..q.order()).filter(|&e| q.is_central(e)).count();
            let results = json!({
                "order": q.order(),
                "center_order": center,
                "full_twist_order": q.element_order(twist),
                "full_twist_central": q.is_central(twist),
            });
            Report::new("braid quotient-order", json!({}), results).assert("order 600", q.order() == 600, None)
        }
        BraidCommand::Census => {
            let c = conjugacy_census(q);
            let short = c.count_with_length_at_most(8);
            let mut results = serde_json::to_value(&c).expect("census serializes");
            results["class_count"] = json!(c.class_count());
            results["classes_with_length_at_most_8"] = json!(short);
            Report::new("braid census", json!({}), results)
                .assert("45 classes", c.class_count() == 45, None)
                .assert("at least 36 classes of length <= 8", short >= 36, None)
        }
        BraidCommand::VerifyProp27 => {
            let r = verify_braid_identities();
            let mut report = Report::new("braid verify-prop27", json!({}), &r);
            for s in &r.steps {
                report = report.assert(format!("({}) {} ~ {}", s.part, s.lhs, s.rhs), s.passed, None);
            }
            report
        }
    })
}

fn tangle(cmd: &TangleCommand) -> Result<Report> {
    Ok(match cmd {
        TangleCommand::Closure { expr, kind } => {
            let t = TangleExpr::parse(expr)?;
            let (closure, label) = match kind {
                Kind::Num => (Closure::Numerator, "num"),
                Kind::Den => (Closure::Denominator, "den"),
            };
            let d = t.closure(closure);
            let results = json!({
                "diagram": d.summary(label),
                "pd": d.to_pd_string(),
                "fraction": t.fraction(),
            });
            Report::new("tangle closure", json!({"expr": expr, "kind": label}), results)
        }
        TangleCommand::Move { expr, site, n, q, sign } => {
            let t = TangleExpr::parse(expr)?;
            let moved = apply_rational_move(&t, site, *n, *q, *sign)?;
            let results = json!({
                "result": moved.to_string(),
                "crossings": moved.crossing_count(),
                "zero_sites": moved.zero_sites(),
            });
            let inputs = json!({"expr": expr, "site": site, "n": n, "q": q, "sign": sign});
            Report::new("tangle move", inputs, results)
        }
        TangleCommand::Obstruct { expr, target, n } => {
            let t = TangleExpr::parse(expr)?;
            let r = embedding_obstruction(&t, &load_diagram(target)?, *n)?;
            Report::new("tangle obstruct", json!({"expr": expr, "target": target, "n": n}), r)
        }
    })
}

fn jones_cmd(diagram: &str) -> Result<Report> {
    let v = jones(&load_diagram(diagram)?, &[])?;
    let results = json!({
        "polynomial": half_powers(&v),
        "in_t": in_t(&v).map(|p| p.format_in("t")),
    });
    Ok(Report::new("jones", json!({"diagram": diagram}), results))
}

/// Renders a polynomial in `s = t^(1/2)` with exponents halved, highest first.
fn half_powers(v: &LaurentPoly) -> String {
    let mut terms: Vec<(i64, String)> = v.terms().map(|(e, c)| (e, c.to_string())).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let power = match (e % 2 == 0, e / 2) {
            (true, 0) => String::new(),
            (true, 1) => "t".to_string(),
            (true, k) => format!("t^{k}"),
            (false, _) => format!("t^({e}/2)"),
        };
        match (mag, power.is_empty()) {
            (m, true) => out.push_str(m),
            ("1", false) => out.push_str(&power),
            (m, false) => out.push_str(&format!("{m}{power}")),
        }
    }
    out
}

fn corpus_cmd(cmd: &CorpusCommand, seed: u64, cap: usize) -> Result<Report> {
    Ok(match cmd {
        CorpusCommand::Verify {
            corpus,
            only,
            instances,
        } => {
            let families = if only.is_empty() {
                None
            } else {
                Some(only.iter().map(|s| s.parse::<Family>()).collect::<Result<Vec<_>>>()?)
            };
            let config = SuiteConfig {
                corpus: load_corpus(corpus.as_deref())?,
                seed,
                only: families,
                cap,
                instances: *instances,
            };
            let checks = suite::run(&config)?;
            let inputs = json!({"corpus": corpus, "only": only, "seed": seed, "cap": cap, "instances": instances});
            let mut report = Report::new("corpus verify", inputs, json!({"checks": checks.len()}));
            for c in checks {
                report = report.assert(format!("{} {}", c.id, c.title), c.passed, Some(c.detail));
            }
            report
        }
        CorpusCommand::List { corpus } => {
            let entries = load_corpus(corpus.as_deref())?;
            let list: Vec<_> = entries.iter().map(|e| e.diagram.summary(&e.name)).collect();
            Report::new("corpus list", json!({"corpus": corpus}), list)
        }
    })
}

fn invariants(diagram: &str, cap: usize) -> Result<Report> {
    let d = load_diagram(diagram)?;
    let col3 = col_group(&d, 3)?;
    let col5 = col_group(&d, 5)?;
    let results = json!({
        "components": d.count_components(),
        "col3": col3.cyclic_orders,
        "col5": col5.cyclic_orders,
        "bq5": burnside_kei(&d, 5, cap).summary(),
        "jones5": five_move_obstruction(&d)?,
    });
    Ok(Report::new(
        "invariants",
        json!({"diagram": diagram, "cap": cap}),
        results,
    ))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Color { diagram, n } => color(diagram, *n),
        Command::Kei(cmd) => kei(cmd, cli.cap),
        Command::Braid(cmd) => braid_cmd(cmd),
        Command::Tangle(cmd) => tangle(cmd),
        Command::Jones(DiagramArg { diagram }) => jones_cmd(diagram),
        Command::Jones5(DiagramArg { diagram }) => Ok(Report::new(
            "jones5",
            json!({"diagram": diagram}),
            five_move_obstruction(&load_diagram(diagram)?)?,
        )),
        Command::Corpus(cmd) => corpus_cmd(cmd, cli.seed, cli.cap),
        Command::Invariants { diagram, bq_cap } => invariants(diagram, cli.cap.min(*bq_cap)),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Color { .. } => "color",
        Command::Kei(_) => "kei",
        Command::Braid(_) => "braid",
        Command::Tangle(_) => "tangle",
        Command::Jones(_) => "jones",
        Command::Jones5(_) => "jones5",
        Command::Corpus(_) => "corpus",
        Command::Invariants { .. } => "invariants",
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::MalformedDiagram(_) => "malformed-diagram",
        Error::InvalidModulus(_) => "invalid-modulus",
        Error::NotAGroup(_) => "not-a-group",
        Error::UnsupportedStrandCount(_) => "unsupported-strand-count",
        Error::EnumerationFailure(_) => "enumeration-failure",
        Error::InvalidMoveSite(_) => "invalid-move-site",
        Error::TooLarge { .. } => "too-large",
        Error::Corpus(_) => "corpus",
    }
}

fn emit(cli: &Cli, v: &Value) {
    if cli.text {
        print!("{}", render_text(v));
    } else {
        println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let wall = cli.timing.then(|| start.elapsed());
            emit(&cli, &report.to_json(wall));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(
                &cli,
                &error_json(command_name(&cli.command), error_kind(&e), &e.to_string()),
            );
            ExitCode::from(2)
        }
    }
}
