//! `sdtool`: command-line front end for the selfdistributivity solvers.
//!
//! Exit codes: 0 answered, 1 negative verdict, 2 usage or input error,
//! 3 budget or step cap exceeded.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use selfdist::braid::{self, BraidWord};
use selfdist::ld::{derive_power, expand_seq};
use selfdist::rack;
use selfdist::shelf::{self, Assignment, Law, ShelfTable};
use selfdist::wp::{self, NormalOptions, PolishVerdict};
use selfdist::{parse_infix, parse_polish, Address, Error, SearchLimits, Term};

#[derive(Parser)]
#[command(
    name = "sdtool",
    version,
    about = "Word problems for selfdistributive laws"
)]
struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Syntactic,
    Semantic,
    Polish,
    Normal,
}

#[derive(Subcommand)]
enum Command {
    /// Decide T ≡LD T'.
    Wp {
        t: String,
        u: String,
        /// Defaults to semantic for one variable, polish then syntactic otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Step cap for the Polish algorithm.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Term budget for the syntactic search.
        #[arg(long, default_value_t = 2_000_000)]
        max_terms: usize,
        /// Print the Polish snapshots.
        #[arg(long)]
        trace: bool,
    },
    /// Decide equivalence under the rack laws.
    WpRack { t: String, u: String },
    /// Decide equivalence under the quandle laws.
    WpQuandle { t: String, u: String },
    /// The rack (or quandle) normal term of T.
    RackNf {
        t: String,
        #[arg(long)]
        quandle: bool,
    },
    /// The LD normal term of a one-variable term.
    NormalForm {
        t: String,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Normal terms below x^[n] up to a degree.
    EnumNormal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate a one-variable term in the braid shelf.
    BraidEval { t: String },
    /// Decide equality of two braid words, e.g. "1 2 -1".
    BraidEquiv { w: String, v: String },
    /// Compare two one-variable terms in the left-divisibility order.
    Compare { t: String, u: String },
    /// Apply LD expansions at the given addresses, in order.
    Expand {
        t: String,
        /// Comma separated addresses, `e` for the root.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        at: Vec<String>,
    },
    /// The derived term ∂^p T.
    Derive {
        t: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Print the Laver table A_k.
    Laver { k: u32 },
    /// Check laws of a table file.
    CheckTable {
        file: PathBuf,
        /// Comma separated: ld, rd, idem, rack, left-bij, right-bij.
        #[arg(long, value_delimiter = ',', default_value = "ld")]
        laws: Vec<String>,
        /// Also check the comparison property for this generator.
        #[arg(long)]
        comparison: Option<usize>,
    },
    /// Check an equation `lhs=rhs` in a table file.
    CheckEq {
        file: PathBuf,
        equation: String,
        /// Assignment such as `x=2,y=3,z=2`; all assignments when absent.
        #[arg(long)]
        assign: Option<String>,
    },
}

/// The machine-readable result of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Record {
    command: String,
    /// Boolean answer, when the command has one.
    verdict: Option<bool>,
    result: Value,
}

struct Outcome {
    record: Record,
    text: String,
}

impl Outcome {
    fn new(command: &str, verdict: Option<bool>, result: Value, text: String) -> Outcome {
        Outcome {
            record: Record {
                command: command.into(),
                verdict,
                result,
            },
            text,
        }
    }
}

fn term(s: &str) -> anyhow::Result<Term> {
    match parse_infix(s) {
        Ok(t) => Ok(t),
        Err(e) => parse_polish(s)
            .map_err(|_| anyhow!(e))
            .with_context(|| format!("cannot parse term `{s}`")),
    }
}

fn verdict_text(b: bool) -> &'static str {
    if b {
        "equivalent"
    } else {
        "not equivalent"
    }
}

fn run_wp(
    t: &Term,
    u: &Term,
    method: Option<Method>,
    cap: usize,
    max_terms: usize,
    trace: bool,
) -> anyhow::Result<Outcome> {
    let one_var = t.is_fwd_only() && u.is_fwd_only() && {
        let mut v = t.variables();
        v.extend(u.variables());
        v.sort_unstable();
        v.dedup();
        v.len() == 1
    };
    let limits = SearchLimits::with_max_terms(max_terms);
    // The Polish cap falls back to the syntactic search only when no method
    // was requested; an explicit `--method polish` reports the cap.
    let fallback = method.is_none();
    let method = method.unwrap_or(if one_var && !trace {
        Method::Semantic
    } else {
        Method::Polish
    });
    let mut text = String::new();
    let (eq, detail) = match method {
        Method::Semantic => {
            let eq = braid::wp_ld_semantic(t, u)?;
            let (a, b) = (braid::eval_term(t)?, braid::eval_term(u)?);
            text.push_str(&format!(
                "EVAL(T)  = {}\nEVAL(T') = {}\n",
                a.pretty(),
                b.pretty()
            ));
            (
                eq,
                json!({"method": "semantic", "eval": [a.to_string(), b.to_string()]}),
            )
        }
        Method::Normal => {
            if !one_var {
                return Err(Error::MultiVariable.into());
            }
            let opts = NormalOptions::default();
            let (a, b) = (wp::normal_form(t, &opts)?, wp::normal_form(u, &opts)?);
            text.push_str(&format!("NF(T)  = {}\nNF(T') = {}\n", a.term, b.term));
            (
                a.spelling == b.spelling,
                json!({"method": "normal", "normal_forms": [a, b]}),
            )
        }
        Method::Syntactic => {
            let out = wp::wp_ld_syntactic(t, u, &limits)?;
            (out.equivalent, syntactic_json(&out))
        }
        Method::Polish => {
            let out = wp::wp_polish(t, u, cap, trace)?;
            if trace {
                for step in &out.trace {
                    text.push_str(&format!("{step}\n"));
                }
                let (a, b) = out.final_snapshot();
                text.push_str(&format!("  {a}\n  {b}\n"));
            }
            let polish = json!({
                "method": "polish",
                "steps": out.steps,
                "exit": out.exit,
                "trace": out.trace,
            });
            match out.verdict {
                PolishVerdict::Equivalent => (true, polish),
                PolishVerdict::NotEquivalent => (false, polish),
                PolishVerdict::CapExceeded if fallback => {
                    let syn = wp::wp_ld_syntactic(t, u, &limits)?;
                    text.push_str(&format!(
                        "polish cap {cap} reached, used the syntactic search\n"
                    ));
                    (
                        syn.equivalent,
                        json!({"method": "syntactic", "polish": polish, "syntactic": syntactic_json(&syn)}),
                    )
                }
                PolishVerdict::CapExceeded => {
                    return Err(anyhow::Error::new(Error::BudgetExceeded)
                        .context(format!("polish cap {cap} reached")))
                }
            }
        }
    };
    text.push_str(verdict_text(eq));
    Ok(Outcome::new("wp", Some(eq), detail, text))
}

fn syntactic_json(out: &wp::SyntacticOutcome) -> Value {
    json!({
        "method": "syntactic",
        "reason": out.reason,
        "stage": out.stage,
        "left": out.left.iter().map(Address::to_string).collect::<Vec<_>>(),
        "right": out.right.iter().map(Address::to_string).collect::<Vec<_>>(),
    })
}

fn read_table(path: &PathBuf) -> anyhow::Result<ShelfTable> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(text.parse::<ShelfTable>()?)
}

fn report_text(r: &shelf::LawReport) -> String {
    match &r.counterexample {
        None => format!("{}: holds", r.law),
        Some(vals) => {
            let at: Vec<String> = r
                .variables
                .iter()
                .zip(vals)
                .map(|(v, a)| format!("{v}={a}"))
                .collect();
            format!("{}: fails at {}", r.law, at.join(", "))
        }
    }
}

fn parse_assignment(s: &str) -> anyhow::Result<BTreeMap<u32, usize>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| anyhow!("expected name=value, got `{pair}`"))?;
            let var = term(name.trim())?
                .as_var()
                .ok_or_else(|| anyhow!("`{name}` is not a variable"))?;
            let value: usize = value
                .trim()
                .parse()
                .with_context(|| format!("bad value in `{pair}`"))?;
            Ok((var, value))
        })
        .collect()
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    Ok(match cmd {
        Command::Wp {
            t,
            u,
            method,
            cap,
            max_terms,
            trace,
        } => run_wp(&term(&t)?, &term(&u)?, method, cap, max_terms, trace)?,
        Command::WpRack { t, u } => {
            let (t, u) = (term(&t)?, term(&u)?);
            let (a, b) = (rack::eval_rack(&t), rack::eval_rack(&u));
            let eq = a == b;
            Outcome::new(
                "wp-rack",
                Some(eq),
                json!({"eval": [a.to_string(), b.to_string()]}),
                format!("{a}\n{b}\n{}", verdict_text(eq)),
            )
        }
        Command::WpQuandle { t, u } => {
            let (t, u) = (term(&t)?, term(&u)?);
            let (a, b) = (rack::eval_quandle(&t), rack::eval_quandle(&u));
            let eq = a == b;
            Outcome::new(
                "wp-quandle",
                Some(eq),
                json!({"eval": [a.to_string(), b.to_string()]}),
                format!("{a}\n{b}\n{}", verdict_text(eq)),
            )
        }
        Command::RackNf { t, quandle } => {
            let t = term(&t)?;
            let nf = if quandle {
                rack::quandle_normal_term(&t)
            } else {
                rack::rack_normal_term(&t)
            };
            Outcome::new(
                "rack-nf",
                None,
                json!({"normal": nf.to_string()}),
                nf.to_string(),
            )
        }
        Command::NormalForm { t, max_degree } => {
            let t = term(&t)?;
            let opts = NormalOptions {
                max_degree,
                ..NormalOptions::default()
            };
            let nf = wp::normal_form(&t, &opts)?;
            let text = format!(
                "{}\ndegree {}, below x^[{}], spelling {}",
                nf.term,
                nf.degree,
                nf.n,
                wp::abridged(&nf.spelling)
            );
            Outcome::new("normal-form", None, serde_json::to_value(&nf)?, text)
        }
        Command::EnumNormal { n, degree } => {
            let list = wp::enumerate_normal(n, degree)?;
            let text = list
                .iter()
                .map(|nt| format!("{}\t{}\t{}", nt.degree, wp::abridged(&nt.spelling), nt.term))
                .collect::<Vec<_>>()
                .join("\n");
            let abridged: Vec<Value> = list
                .iter()
                .map(|nt| json!({"degree": nt.degree, "abridged": wp::abridged(&nt.spelling), "term": nt.term.to_string()}))
                .collect();
            Outcome::new("enum-normal", None, Value::Array(abridged), text)
        }
        Command::BraidEval { t } => {
            let w = braid::eval_term(&term(&t)?)?;
            Outcome::new(
                "braid-eval",
                None,
                json!({"braid": w.to_string(), "pretty": w.pretty()}),
                w.pretty(),
            )
        }
        Command::BraidEquiv { w, v } => {
            let (w, v): (BraidWord, BraidWord) = (w.parse()?, v.parse()?);
            let eq = braid::braid_equiv(&w, &v);
            Outcome::new("braid-equiv", Some(eq), json!({}), verdict_text(eq).into())
        }
        Command::Compare { t, u } => {
            let ord = braid::compare_ld(&term(&t)?, &term(&u)?)?;
            let sym = match ord {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            Outcome::new(
                "compare",
                None,
                json!({"order": sym}),
                format!("T {sym} T'"),
            )
        }
        Command::Expand { t, at } => {
            let seq = at
                .iter()
                .map(|a| a.trim().parse::<Address>())
                .collect::<Result<Vec<_>, _>>()?;
            let r = expand_seq(&term(&t)?, &seq)?;
            Outcome::new(
                "expand",
                None,
                json!({"term": r.to_string()}),
                r.to_string(),
            )
        }
        Command::Derive { t, power } => {
            let r = derive_power(&term(&t)?, power)?;
            Outcome::new(
                "derive",
                None,
                json!({"term": r.to_string(), "size": r.size()}),
                r.to_string(),
            )
        }
        Command::Laver { k } => {
            let table = shelf::laver_table(k)?;
            Outcome::new(
                "laver",
                None,
                serde_json::to_value(&table)?,
                table.to_string().trim_end().into(),
            )
        }
        Command::CheckTable {
            file,
            laws,
            comparison,
        } => {
            let table = read_table(&file)?;
            let laws = laws
                .iter()
                .map(|l| l.parse::<Law>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut reports: Vec<shelf::LawReport> =
                laws.iter().map(|&l| shelf::check_law(&table, l)).collect();
            if let Some(g) = comparison {
                reports.push(shelf::check_comparison(&table, g)?);
            }
            let all = reports.iter().all(|r| r.holds);
            let text = reports
                .iter()
                .map(report_text)
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(
                "check-table",
                Some(all),
                serde_json::to_value(&reports)?,
                text,
            )
        }
        Command::CheckEq {
            file,
            equation,
            assign,
        } => {
            let table = read_table(&file)?;
            let (l, r) = equation
                .split_once('=')
                .ok_or_else(|| anyhow!("equation must have the form lhs=rhs"))?;
            let (l, r) = (term(l.trim())?, term(r.trim())?);
            let mode = match assign {
                None => Assignment::All,
                Some(s) => Assignment::Fixed(parse_assignment(&s)?),
            };
            let report = shelf::check_equation(&table, &l, &r, &mode)?;
            Outcome::new(
                "check-eq",
                Some(report.holds),
                serde_json::to_value(&report)?,
                report_text(&report),
            )
        }
    })
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded | Error::CapExceeded { .. } | Error::Cancelled) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.command) {
        Ok(out) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&out.record).expect("serializable record")
                );
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.record.verdict == Some(false) {
                1
            } else {
                0
            })
        }
        Err(err) => {
            let code = exit_code_for(&err);
            if json {
                println!("{}", json!({"error": format!("{err:#}"), "exit": code}));
            }
            eprintln!("sdtool: {err:#}");
            ExitCode::from(code)
        }
    }
}
