//! Command definitions and dispatch. Output goes to any writer so the
//! commands can be driven from tests.

use std::io::{self, Write};
use std::path::PathBuf;

use bvgroup::braid::Flavor;
use bvgroup::forest::{Address, ForestWord};
use bvgroup::fraction::{Fraction, LeafAddr};
use bvgroup::hedge::Hedge;
use bvgroup::rewrite::{ConfluenceReport, Letter, RewriteSystem};
use bvgroup::subgroup::{is_member, verify_presentation, Membership};
use bvgroup::zappa::{check_axioms, check_co_actions};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::grammar::{parse_element, ParseError};
use crate::render::DiagramSpec;

#[derive(Parser, Debug)]
#[command(name = "bv", version, about = "Calculator for the braided Thompson groups BV ⊂ B̂V and V ⊂ V̂")]
pub struct Cli {
    /// B for braids, S for permutations.
    #[arg(long, global = true, default_value = "B", value_parser = parse_flavor)]
    pub flavor: Flavor,
    /// Seed for the sampling checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Step budget for joining critical pairs.
    #[arg(long, global = true)]
    pub fuel: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced form of an element.
    Nf { element: String },
    /// Whether two elements are equal (exit 1 if not).
    Eq { left: String, right: String },
    /// Product of one or more elements, left to right.
    Mul {
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Inverse of an element.
    Inv { element: String },
    /// Membership in BV (or V); exit 1 if not a member.
    Member { element: String },
    /// Image in V̂.
    Project { element: String },
    /// The element as a prefix substitution on addresses `i.v`.
    Eval {
        element: String,
        /// Addresses to map, like `0.01` or `3`.
        #[arg(long = "at")]
        at: Vec<String>,
    },
    /// Check the defining relations, the action axioms or confluence.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Draw the tree–braid–tree diagram.
    Render {
        element: String,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        /// Reduce the element before drawing.
        #[arg(long)]
        normal_form: bool,
        /// Keep the braid word exactly as written.
        #[arg(long)]
        raw: bool,
        /// Write here instead of standard output.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Every defining relation with indices up to the bound.
    Presentation {
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// The mutual-action identities on random instances, and the
    /// co-action identities exhaustively.
    Axioms {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_index: usize,
    },
    /// Critical pairs of the forest and hedge rewriting systems.
    Confluence {
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse `{input}`: {}", .error.annotate(.input))]
    Parse { input: String, error: ParseError },
    #[error("cannot read JSON element: {0}")]
    Json(#[from] serde_json::Error),
    #[error("elements of different flavors: {0} and {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("bad address `{0}` (expected `i` or `i.bits`)")]
    Address(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Exit status of a successful run: 0, or 1 for a false verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn code(self) -> i32 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
        }
    }

    fn of(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

/// Reads an element written in the grammar, or as a JSON triple.
pub fn read_element(text: &str, flavor: Flavor) -> Result<Fraction, CliError> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    parse_element(text, flavor).map_err(|error| CliError::Parse {
        input: text.to_string(),
        error,
    })
}

fn same_flavor(a: &Fraction, b: &Fraction) -> Result<(), CliError> {
    if a.flavor() == b.flavor() {
        Ok(())
    } else {
        Err(CliError::FlavorMismatch(a.flavor(), b.flavor()))
    }
}

fn parse_addr(text: &str) -> Result<LeafAddr, CliError> {
    let bad = || CliError::Address(text.to_string());
    let (copy, path) = text.split_once('.').unwrap_or((text, ""));
    let copy = copy.parse().map_err(|_| bad())?;
    let path = Address::parse(path).ok_or_else(bad)?;
    Ok(LeafAddr::new(copy, path))
}

fn group_name(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Braided => "BV",
        Flavor::Symmetric => "V",
    }
}

fn emit_element(out: &mut dyn Write, x: &Fraction, as_json: bool) -> io::Result<()> {
    if as_json {
        writeln!(out, "{}", serde_json::to_string(x).expect("fractions serialize"))
    } else {
        writeln!(out, "{x}")
    }
}

fn confluence_lines<L: Letter>(
    sys: &RewriteSystem<L>,
    report: &ConfluenceReport<L>,
    lines: &mut Vec<(bool, String)>,
) {
    let failures: Vec<_> = report.checks.iter().filter(|c| !c.joined()).collect();
    lines.push((
        failures.is_empty(),
        format!(
            "{} bound {}: {} critical pairs, {} unjoined",
            sys.name(),
            report.bound,
            report.checks.len(),
            failures.len()
        ),
    ));
    for f in failures {
        lines.push((false, format!("  {}", sys.describe(f))));
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let flavor = cli.flavor;
    let read = |s: &str| read_element(s, flavor);
    match &cli.command {
        Command::Nf { element } => {
            emit_element(out, &read(element)?.reduce(), cli.json)?;
            Ok(Verdict::Yes)
        }
        Command::Eq { left, right } => {
            let (a, b) = (read(left)?, read(right)?);
            same_flavor(&a, &b)?;
            let equal = a.equals(&b);
            if cli.json {
                writeln!(out, "{}", json!({ "equal": equal }))?;
            } else {
                writeln!(out, "{equal}")?;
            }
            Ok(Verdict::of(equal))
        }
        Command::Mul { elements } => {
            let mut acc: Option<Fraction> = None;
            for e in elements {
                let x = read(e)?;
                acc = Some(match acc {
                    None => x.reduce(),
                    Some(a) => {
                        same_flavor(&a, &x)?;
                        a.mul(&x)
                    }
                });
            }
            emit_element(out, &acc.expect("clap requires one element"), cli.json)?;
            Ok(Verdict::Yes)
        }
        Command::Inv { element } => {
            emit_element(out, &read(element)?.inverse().reduce(), cli.json)?;
            Ok(Verdict::Yes)
        }
        Command::Member { element } => {
            let x = read(element)?;
            let verdict = is_member(&x);
            let group = group_name(x.flavor());
            if cli.json {
                let type_k = match verdict {
                    Membership::Member { type_k } => Some(type_k),
                    Membership::NotMember => None,
                };
                writeln!(
                    out,
                    "{}",
                    json!({ "member": verdict.is_member(), "group": group, "type": type_k })
                )?;
            } else {
                match verdict {
                    Membership::Member { type_k } => writeln!(out, "member of {group}, type {type_k}")?,
                    Membership::NotMember => writeln!(out, "not a member of {group}")?,
                }
            }
            Ok(Verdict::of(verdict.is_member()))
        }
        Command::Project { element } => {
            emit_element(out, &read(element)?.project(), cli.json)?;
            Ok(Verdict::Yes)
        }
        Command::Eval { element, at } => {
            let map = read(element)?.project().as_prefix_map();
            if !at.is_empty() {
                let mut rows = Vec::new();
                for a in at {
                    let addr = parse_addr(a)?;
                    rows.push((addr.to_string(), map.image(&addr).map(|i| i.to_string())));
                }
                if cli.json {
                    let obj: serde_json::Map<_, _> =
                        rows.into_iter().map(|(k, v)| (k, json!(v))).collect();
                    writeln!(out, "{}", serde_json::Value::Object(obj))?;
                } else {
                    for (k, v) in rows {
                        match v {
                            Some(v) => writeln!(out, "{k} ↦ {v}")?,
                            None => writeln!(out, "{k} ↦ (not a single address: {k} is split by the map)")?,
                        }
                    }
                }
                return Ok(Verdict::Yes);
            }
            if cli.json {
                let pairs: Vec<_> = map
                    .pairs()
                    .iter()
                    .map(|(s, t)| json!([s.to_string(), t.to_string()]))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "pairs": pairs, "tail": map.tail(), "shift": map.shift() })
                )?;
            } else {
                for (s, t) in map.pairs() {
                    writeln!(out, "{s} ↦ {t}")?;
                }
                writeln!(out, "c ↦ c{:+} for every copy c ≥ {}", map.shift(), map.tail())?;
            }
            Ok(Verdict::Yes)
        }
        Command::Verify { what } => {
            let mut lines: Vec<(bool, String)> = Vec::new();
            match what {
                Verify::Presentation { bound } => {
                    let report = verify_presentation(*bound, flavor);
                    for c in &report.checks {
                        lines.push((c.ok, c.to_string()));
                    }
                }
                Verify::Axioms {
                    samples,
                    max_len,
                    max_index,
                } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let report = check_axioms(&mut rng, flavor, *samples, *max_len, *max_index);
                    let label = format!("axioms (a)-(h) {flavor}: {samples} samples, seed {}", cli.seed);
                    if report.passed() {
                        lines.push((true, format!("OK   {label}")));
                    } else {
                        lines.push((false, format!("FAIL {label}")));
                        lines.extend(report.failures.iter().map(|f| (false, format!("  {f}"))));
                    }
                    let co = check_co_actions(8, flavor);
                    if co.is_empty() {
                        lines.push((true, format!("OK   co-actions {flavor}: q, m ≤ 8")));
                    } else {
                        lines.push((false, format!("FAIL co-actions {flavor}: {co:?}")));
                    }
                }
                Verify::Confluence { bound } => {
                    let mut raw = Vec::new();
                    for b in 2..=*bound {
                        let forest = ForestWord::rules();
                        confluence_lines(&forest, &forest.check_local_confluence(b, cli.fuel), &mut raw);
                        let hedge = Hedge::rules();
                        confluence_lines(&hedge, &hedge.check_local_confluence(b, cli.fuel), &mut raw);
                        let inverse = Hedge::inverse_rules();
                        confluence_lines(&inverse, &inverse.check_local_confluence(b, cli.fuel), &mut raw);
                    }
                    for (ok, text) in raw {
                        let tagged = if text.starts_with("  ") {
                            text
                        } else if ok {
                            format!("OK   {text}")
                        } else {
                            format!("FAIL {text}")
                        };
                        lines.push((ok, tagged));
                    }
                }
            }
            let passed = lines.iter().all(|(ok, _)| *ok);
            if cli.json {
                let items: Vec<_> = lines.iter().map(|(ok, t)| json!({ "ok": ok, "line": t })).collect();
                writeln!(out, "{}", json!({ "passed": passed, "checks": items }))?;
            } else {
                for (_, t) in &lines {
                    writeln!(out, "{t}")?;
                }
            }
            Ok(Verdict::of(passed))
        }
        Command::Render {
            element,
            format,
            normal_form,
            raw,
            out: path,
        } => {
            let mut x = read(element)?;
            if *normal_form {
                x = x.reduce();
            }
            let spec = DiagramSpec::new(&x, *raw);
            let text = match format {
                Format::Svg => spec.to_svg(),
                Format::Ascii => spec.to_ascii(),
            };
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(Verdict::Yes)
        }
    }
}
