use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cofinite::random::{rng_from_seed, sample_element, Profile};
use cofinite::topology::separation_witness;
use cofinite::{
    bicyclic, green, solver, BasicNbhd, BicyclicWord, FiniteSet, Kind, PartialBijection,
};
use cofinite_cli::{eval_expr, run_selftest};
use serde_json::{json, Value};

const RAND_HELP: &str = "\
Samples random elements. With tail start N and shift d, N is uniform on \
1..=positions+1 and d uniform on -shift..=shift, redrawn until N+d also \
lies in 1..=positions+1. A count k of mapped points below N is then drawn \
uniformly from 0..=min(exceptions, N-1, N+d-1); the k keys are drawn without \
replacement from 1..N and their images without replacement from 1..N+d. \
The result is canonicalized. The same seed always gives the same output.";

/// Arithmetic on co-finite, almost monotone partial bijections of the
/// positive integers.
///
/// Elements are written `{k->v,...|N=>+d}`: the listed pairs below N, then
/// n -> n+d for every n >= N. Wherever an element is expected, an
/// expression may be given instead: `I`, `p`, `q`, literals, `*`
/// (left-to-right composition), postfix `^-1` and parentheses.
#[derive(Debug, Parser)]
#[command(name = "cofinite", version)]
struct Cli {
    /// Print results as JSON; elements become
    /// {"exceptions":[[k,v],...],"tail":N,"shift":d}.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for `rand` and `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Iterations per self-test suite, or number of samples for `rand`.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    iters: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluates an expression.
    Eval { expr: String },
    /// Green's relations, the natural order and related witnesses.
    Green {
        #[arg(value_enum, ignore_case = true)]
        relation: Relation,
        a: String,
        b: String,
    },
    /// Solves a·χ = b (right) or χ·a = b (left).
    Solve {
        #[arg(value_enum)]
        side: Side,
        a: String,
        b: String,
    },
    /// The bicyclic monoid and its copy generated by p and q.
    Bicyclic {
        #[command(subcommand)]
        op: BicyclicOp,
    },
    /// Fixed sets giving disjoint neighbourhoods of two distinct elements.
    Sep {
        #[arg(value_parser = parse_kind)]
        kind: Kind,
        a: String,
        b: String,
    },
    /// Tests membership of `candidate` in the basic neighbourhood of `center`.
    Member {
        #[arg(value_parser = parse_kind)]
        kind: Kind,
        center: String,
        /// Comma-separated fixed points.
        #[arg(long, value_parser = parse_set, default_value = "")]
        fix: FiniteSet,
        candidate: String,
    },
    /// Decides whether two basic neighbourhoods are disjoint, printing a
    /// common member otherwise.
    MeetEmpty {
        #[arg(value_parser = parse_kind)]
        kind: Kind,
        a: String,
        b: String,
        /// Fixed points of the neighbourhood of `a`.
        #[arg(long, value_parser = parse_set, default_value = "")]
        fix_a: FiniteSet,
        /// Fixed points of the neighbourhood of `b`.
        #[arg(long, value_parser = parse_set, default_value = "")]
        fix_b: FiniteSet,
    },
    #[command(about = "Samples random elements (see --help for the distribution)", long_about = RAND_HELP)]
    Rand {
        /// Keys, exception values and holes lie in 1..=positions.
        #[arg(long, default_value_t = 8)]
        positions: u64,
        /// Largest absolute shift.
        #[arg(long, default_value_t = 3)]
        shift: i64,
        /// Largest number of mapped points below the tail start.
        #[arg(long)]
        exceptions: Option<usize>,
    },
    /// Runs the property suites; exits with status 2 on any failure.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Relation {
    R,
    L,
    H,
    D,
    Leq,
    Meet,
    Witness,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
enum BicyclicOp {
    /// Multiplies q^a p^b by q^c p^d.
    Mul { a: u64, b: u64, c: u64, d: u64 },
    /// The element representing q^a p^b.
    Embed { a: u64, b: u64 },
    /// The word represented by an element, if any.
    Recognize { element: String },
    /// An idempotent whose products with the element are both bicyclic.
    Project { element: String },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
        .map_err(|_| format!("expected F or WF, got `{s}`"))
}

fn parse_set(s: &str) -> Result<FiniteSet, String> {
    let points = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteSet::new(points).map_err(|e| e.to_string())
}

enum Failure {
    Error(cofinite::Error),
    SelftestFailed,
}

impl From<cofinite::Error> for Failure {
    fn from(e: cofinite::Error) -> Self {
        Failure::Error(e)
    }
}

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, text: impl std::fmt::Display, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }

    fn element(&self, a: &PartialBijection) {
        self.emit(a, element_json(a));
    }

    fn boolean(&self, b: bool) {
        self.emit(b, json!(b));
    }
}

fn element_json(a: &PartialBijection) -> Value {
    serde_json::to_value(a).expect("elements serialize")
}

fn word_json(w: BicyclicWord) -> Value {
    json!({ "a": w.a, "b": w.b })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Eval { expr } => out.element(&eval_expr(&expr)?),
        Command::Green { relation, a, b } => {
            let (a, b) = (eval_expr(&a)?, eval_expr(&b)?);
            match relation {
                Relation::R => out.boolean(green::is_r(&a, &b)),
                Relation::L => out.boolean(green::is_l(&a, &b)),
                Relation::H => out.boolean(green::is_h(&a, &b)),
                Relation::D => {
                    let w = green::d_witness(&a, &b);
                    out.emit(
                        format!("true {w}"),
                        json!({ "related": true, "witness": element_json(&w) }),
                    );
                }
                Relation::Leq => out.boolean(green::nat_leq(&a, &b)?),
                Relation::Meet => out.element(&green::meet(&a, &b)?),
                Relation::Witness => {
                    let (g, d) = green::simplicity_witness(&a, &b);
                    out.emit(
                        format!("{g}\n{d}"),
                        json!({ "left": element_json(&g), "right": element_json(&d) }),
                    );
                }
            }
        }
        Command::Solve { side, a, b } => {
            let (a, b) = (eval_expr(&a)?, eval_expr(&b)?);
            let set = match side {
                Side::Right => solver::solve_right(&a, &b),
                Side::Left => solver::solve_left(&a, &b),
            };
            if out.json {
                let all: Vec<Value> = set.solutions.iter().map(element_json).collect();
                println!("{}", Value::Array(all));
            } else {
                for x in &set.solutions {
                    println!("{x}");
                }
            }
        }
        Command::Bicyclic { op } => match op {
            BicyclicOp::Mul { a, b, c, d } => {
                let w = BicyclicWord::new(a, b) * BicyclicWord::new(c, d);
                out.emit(w, word_json(w));
            }
            BicyclicOp::Embed { a, b } => out.element(&bicyclic::embed(BicyclicWord::new(a, b))),
            BicyclicOp::Recognize { element } => {
                let w = bicyclic::recognize(&eval_expr(&element)?);
                match w {
                    Some(w) => out.emit(w, word_json(w)),
                    None => out.emit("none", Value::Null),
                }
            }
            BicyclicOp::Project { element } => {
                out.element(&bicyclic::projection_idempotent(&eval_expr(&element)?))
            }
        },
        Command::Sep { kind, a, b } => {
            let (fa, fb) = separation_witness(kind, &eval_expr(&a)?, &eval_expr(&b)?)?;
            out.emit(
                format!("{fa} {fb}"),
                json!({ "left": fa.elems(), "right": fb.elems() }),
            );
        }
        Command::Member {
            kind,
            center,
            fix,
            candidate,
        } => {
            let u = BasicNbhd::new(kind, eval_expr(&center)?, fix)?;
            out.boolean(u.contains(&eval_expr(&candidate)?));
        }
        Command::MeetEmpty {
            kind,
            a,
            b,
            fix_a,
            fix_b,
        } => {
            let u = BasicNbhd::new(kind, eval_expr(&a)?, fix_a)?;
            let v = BasicNbhd::new(kind, eval_expr(&b)?, fix_b)?;
            match u.intersection_witness(&v)? {
                None => out.emit("empty", json!({ "empty": true, "witness": null })),
                Some(w) => out.emit(
                    format!("nonempty {w}"),
                    json!({ "empty": false, "witness": element_json(&w) }),
                ),
            }
        }
        Command::Rand {
            positions,
            shift,
            exceptions,
        } => {
            let mut profile = Profile::bounded(positions, shift.abs());
            if let Some(k) = exceptions {
                profile.max_exceptions = k;
            }
            let mut rng = rng_from_seed(cli.seed);
            for _ in 0..cli.iters {
                out.element(&sample_element(&mut rng, &profile));
            }
        }
        Command::Selftest => {
            let started = Instant::now();
            let report = run_selftest(cli.seed, cli.iters as usize);
            if out.json {
                let suites: Vec<Value> = report
                    .suites
                    .iter()
                    .map(|s| {
                        json!({
                            "name": s.name,
                            "passed": s.passed(),
                            "checks": s.checks,
                            "failures": s.failures,
                            "first_failure": s.first_failure,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "seed": report.seed,
                        "iterations": report.iterations,
                        "passed": report.passed(),
                        "suites": suites,
                    })
                );
            } else {
                println!("{report}");
            }
            eprintln!("elapsed: {:.2?}", started.elapsed());
            if !report.passed() {
                return Err(Failure::SelftestFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::SelftestFailed) => ExitCode::from(2),
    }
}
