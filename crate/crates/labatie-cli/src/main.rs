//! Command-line front end: parse a pair of polynomials, run the elimination
//! pipeline, and print human-readable or JSON reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or precondition
//! errors (the message names the violated contract, e.g. NotCoprime).

mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use labatie::elimination::{
    normalize_pair, triangular_systems, verify_identities, EliminationTrace, NormalizedPair,
};
use labatie::error::Error;
use labatie::field::{FieldElement, FieldSpec};
use labatie::oracle::{brute_force_zeros, oracle_multiplicity};
use labatie::parser::{format_poly, format_unipoly, parse_poly, parse_scalar, PolySource};
use labatie::sample;
use labatie::solver::{point_contributions, point_multiplicity, solve_in_field};

#[derive(Parser)]
#[command(
    name = "labatie",
    about = "Exact solver for systems of two polynomial equations in two unknowns",
    long_about = "Replaces {V1(x,y) = 0, V2(x,y) = 0} over Q or GF(p) by an equivalent \
                  collection of triangular systems via a Euclidean remainder sequence, \
                  lists the solutions in the ground field with their intersection \
                  multiplicities, and counts solutions over the algebraic closure. \
                  All arithmetic is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full elimination trace and the triangular systems.
    Decompose(CommonArgs),
    /// Solve in the ground field: points, multiplicities, closure count.
    Solve(CommonArgs),
    /// Intersection multiplicity at one point, with per-system breakdown.
    Multiplicity {
        #[command(flatten)]
        common: CommonArgs,
        /// The query point as "a,b" in the scalar literal syntax.
        #[arg(long)]
        point: String,
        /// Also compute the independent local-algebra oracle value.
        #[arg(long)]
        oracle: bool,
    },
    /// Number of solutions in the algebraic closure, with multiplicity.
    Count(CommonArgs),
    /// Check every identity of the construction on the given pair, then run
    /// randomized trials cross-checked against the oracle.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of randomized trials over small prime fields.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Seed for the trials; fresh entropy (printed) when omitted.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Ground field: "q" or "gf:P" for a prime P.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    /// Report format on standard output.
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Also write the JSON document to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// First polynomial in x and y.
    poly1: String,
    /// Second polynomial in x and y.
    poly2: String,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Output {
    Text,
    Json,
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    if text == "q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = text.strip_prefix("gf:") {
        let modulus: u64 = p.parse().map_err(|_| format!("invalid modulus {p:?}"))?;
        return FieldSpec::prime_field(modulus).map_err(|e| e.to_string());
    }
    Err(format!("expected \"q\" or \"gf:P\", got {text:?}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(failures) => {
            if failures {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parses the input pair and runs the full elimination pipeline.
fn prepare(common: &CommonArgs) -> Result<(NormalizedPair, EliminationTrace), Error> {
    let spec = common.field;
    let a = parse_poly(&PolySource::new(&common.poly1, spec))?;
    let b = parse_poly(&PolySource::new(&common.poly2, spec))?;
    let pair = normalize_pair(&a, &b)?;
    for (content, which) in [
        (&pair.stripped_contents.0, &common.poly1),
        (&pair.stripped_contents.1, &common.poly2),
    ] {
        if !content.is_constant() {
            eprintln!(
                "warning: removed y-content {content} from {which:?}; its roots x = a give \
                 vertical lines of common zeros not covered by the triangular systems"
            );
        }
    }
    let trace = EliminationTrace::compute(&pair.first, &pair.second)?;
    Ok((pair, trace))
}

fn emit(common: &CommonArgs, doc: &Map<String, Value>, text: String) -> Result<(), Error> {
    match common.output {
        Output::Text => println!("{text}"),
        Output::Json => println!("{}", serde_json::to_string_pretty(doc).unwrap()),
    }
    if let Some(path) = &common.out {
        std::fs::write(path, serde_json::to_string_pretty(doc).unwrap())
            .unwrap_or_else(|e| panic!("cannot write {}: {e}", path.display()));
    }
    Ok(())
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Decompose(common) => {
            let (_, trace) = prepare(&common)?;
            let mut doc = schema::document("decompose", common.field, (&common.poly1, &common.poly2));
            doc.insert("trace".into(), schema::trace(&trace));
            let systems = triangular_systems(&trace);
            doc.insert("systems".into(), schema::systems(&systems));

            let mut text = String::new();
            text += &format!("elimination finished in {} steps\n", trace.steps);
            for (i, v) in trace.remainders.iter().enumerate() {
                text += &format!("  V_{} = {}\n", i + 1, format_poly(v));
            }
            for i in 1..=trace.steps {
                text += &format!(
                    "  step {i}: u = {}, Q = {}, v = {}, d = {}, w = {}\n",
                    format_unipoly(trace.multiplier(i)),
                    format_poly(trace.quotient(i)),
                    format_unipoly(trace.content(i)),
                    format_unipoly(trace.step_gcd(i)),
                    format_unipoly(trace.reduced_multiplier(i)),
                );
            }
            text += "triangular systems:\n";
            for s in &systems {
                text += &format!(
                    "  [{}] {} = 0, {} = 0{}\n",
                    s.index,
                    format_poly(&s.bivariate),
                    format_unipoly(&s.univariate),
                    if s.is_empty() { "  (no solutions)" } else { "" },
                );
            }
            emit(&common, &doc, text.trim_end().to_string())?;
            Ok(false)
        }

        Command::Solve(common) => {
            let (_, trace) = prepare(&common)?;
            let report = solve_in_field(&trace);
            let mut doc = schema::document("solve", common.field, (&common.poly1, &common.poly2));
            doc.insert("systems".into(), schema::systems(&report.systems));
            doc.insert("points".into(), schema::points(&report));
            doc.insert("closure_count".into(), json!(report.closure_count));

            let mut text = String::new();
            if report.points.is_empty() {
                text += "no solutions in the ground field\n";
            }
            for p in &report.points {
                let parts: Vec<String> = p
                    .contributions
                    .iter()
                    .map(|(i, m)| format!("system {i}: {m}"))
                    .collect();
                text += &format!(
                    "({}, {})  multiplicity {}  [{}]\n",
                    p.x,
                    p.y,
                    p.multiplicity,
                    parts.join(", ")
                );
            }
            text += &format!(
                "solutions in the algebraic closure, with multiplicity: {}",
                report.closure_count
            );
            emit(&common, &doc, text)?;
            Ok(false)
        }

        Command::Multiplicity {
            common,
            point,
            oracle,
        } => {
            let (a, b) = parse_point(&point, common.field)?;
            let (pair, trace) = prepare(&common)?;
            let contributions = point_contributions(&trace, &a, &b);
            let total: usize = contributions.iter().map(|&(_, m)| m).sum();
            let mut doc =
                schema::document("multiplicity", common.field, (&common.poly1, &common.poly2));
            doc.insert(
                "points".into(),
                json!([{
                    "a": schema::scalar(&a),
                    "b": schema::scalar(&b),
                    "multiplicity": total,
                    "contributions": contributions,
                }]),
            );

            let mut text = format!("multiplicity of ({a}, {b}): {total}");
            for (i, m) in &contributions {
                text += &format!("\n  from system {i}: {m}");
            }
            if oracle {
                let truth = oracle_multiplicity(&pair.first, &pair.second, &a, &b)?;
                doc.insert("oracle_multiplicity".into(), json!(truth));
                text += &format!("\noracle (local-algebra dimension): {truth}");
            }
            emit(&common, &doc, text)?;
            Ok(false)
        }

        Command::Count(common) => {
            let (_, trace) = prepare(&common)?;
            let count = labatie::closure_count(&trace);
            let mut doc = schema::document("count", common.field, (&common.poly1, &common.poly2));
            doc.insert("closure_count".into(), json!(count));
            emit(&common, &doc, format!("{count}"))?;
            Ok(false)
        }

        Command::Verify {
            common,
            trials,
            seed,
        } => {
            let (_, trace) = prepare(&common)?;
            let report = verify_identities(&trace);
            let seed = seed.unwrap_or_else(sample::entropy_seed);
            let trial_failures = run_trials(trials, seed);

            let mut doc = schema::document("verify", common.field, (&common.poly1, &common.poly2));
            let mut verification = schema::verification(&report);
            verification["trials"] = json!({
                "count": trials,
                "seed": seed,
                "failures": trial_failures.len(),
                "failed": trial_failures,
            });
            doc.insert("verification".into(), verification);

            let mut text = String::new();
            for c in &report.checks {
                text += &format!(
                    "  {} {}\n",
                    if c.passed { "pass" } else { "FAIL" },
                    c.label
                );
            }
            text += &format!(
                "identities on input pair: {}\n",
                if report.all_passed() { "all pass" } else { "FAILED" }
            );
            text += &format!(
                "randomized trials: {} run, {} failed (seed {seed})",
                trials,
                trial_failures.len()
            );
            emit(&common, &doc, text)?;
            Ok(!report.all_passed() || !trial_failures.is_empty())
        }
    }
}

fn parse_point(text: &str, spec: FieldSpec) -> Result<(FieldElement, FieldElement), Error> {
    let Some((a, b)) = text.split_once(',') else {
        return Err(Error::SyntaxError {
            position: text.len(),
            expected: "a point \"a,b\"".to_string(),
        });
    };
    Ok((parse_scalar(a.trim(), spec)?, parse_scalar(b.trim(), spec)?))
}

/// Randomized trials over small prime fields: every identity must hold, the
/// solution set must equal the exhaustive scan, and every multiplicity must
/// equal the oracle. Returns descriptions of failed trials.
fn run_trials(trials: usize, seed: u64) -> Vec<String> {
    const PRIMES: [u64; 4] = [5, 7, 11, 13];
    let mut rng = sample::rng(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let spec = FieldSpec::prime_field(PRIMES[t % PRIMES.len()]).unwrap();
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 4, 3);
        let label = || format!("trial {t}: ({}, {})", format_poly(&v1), format_poly(&v2));
        let trace = match EliminationTrace::compute(&v1, &v2) {
            Ok(trace) => trace,
            Err(e) => {
                failures.push(format!("{}: {e}", label()));
                continue;
            }
        };
        let report = verify_identities(&trace);
        if !report.all_passed() {
            let labels: Vec<_> = report.failures().map(|c| c.label.clone()).collect();
            failures.push(format!("{}: identities {labels:?}", label()));
            continue;
        }
        let solved = solve_in_field(&trace);
        let found: Vec<_> = solved
            .points
            .iter()
            .map(|p| (p.x.clone(), p.y.clone()))
            .collect();
        let expected = brute_force_zeros(&v1, &v2).unwrap();
        if found != expected {
            failures.push(format!("{}: solution sets differ", label()));
            continue;
        }
        for (a, b) in expected {
            let engine = point_multiplicity(&trace, &a, &b);
            match oracle_multiplicity(&v1, &v2, &a, &b) {
                Ok(truth) if truth == engine => {}
                Ok(truth) => {
                    failures.push(format!(
                        "{}: multiplicity {engine} != oracle {truth} at ({a}, {b})",
                        label()
                    ));
                }
                Err(e) => failures.push(format!("{}: oracle failed: {e}", label())),
            }
        }
    }
    failures
}
