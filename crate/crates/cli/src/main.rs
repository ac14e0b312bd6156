//! `ringcover`: build finite rings, compute covering numbers, inspect
//! radical structure, and run the verification suites.
//!
//! Exit codes: 0 success, 1 input error, 2 bound or timeout exceeded.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ringcover_core::catalog::{named_rings, random_rings, DEFAULT_CATALOG_SEED, NAMED};
use ringcover_core::construct::construct;
use ringcover_core::cover::{sigma_exact_with, CoverOptions};
use ringcover_core::lattice::{all_subrings, maximal_subrings, DEFAULT_LATTICE_BOUND};
use ringcover_core::radical::{jacobson_radical, wedderburn_complements};
use ringcover_core::report::{format_set, Report};
use ringcover_core::ring::{make_ring, FiniteRing};
use ringcover_core::RingError;

use ringcover_core::verify::{self, suite_by_id, Outcome, VerifyContext, REGISTRY};

#[derive(Parser)]
#[command(name = "ringcover", version, about = "exact covering numbers of finite unital rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct RingInput {
    /// ring construction expression, e.g. "T3(F(2))" or "M(2,F(3))"
    #[arg(long)]
    ring: Option<String>,
    /// path to a JSON ring presentation (generator orders + structure
    /// constants + unity)
    #[arg(long)]
    spec: Option<String>,
}

impl RingInput {
    fn build(&self) -> Result<FiniteRing, String> {
        match (&self.ring, &self.spec) {
            (Some(dsl), None) => construct(dsl).map_err(|e| e.to_string()),
            (None, Some(path)) => {
                let data = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
                let spec = serde_json::from_str(&data).map_err(|e| e.to_string())?;
                make_ring(spec).map_err(|e| e.to_string())
            }
            _ => Err("provide exactly one of --ring or --spec".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the covering number of a ring
    Sigma {
        #[command(flatten)]
        input: RingInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// solver budget in seconds
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        /// subring-lattice enumeration bound (ring order)
        #[arg(long)]
        max_order: Option<usize>,
        /// raise the default bounds for long runs
        #[arg(long)]
        extended: bool,
    },
    /// Run a verification suite (or all of them)
    Verify {
        /// registered id such as "thm-4.4", or "all"
        id: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// catalog order cap
        #[arg(long, default_value_t = 256)]
        max_order: usize,
        /// seed for the randomized catalog rings
        #[arg(long, default_value_t = DEFAULT_CATALOG_SEED)]
        seed: u64,
        /// lift the per-suite order caps
        #[arg(long)]
        extended: bool,
    },
    /// Print structural data for one ring
    RingInfo {
        #[command(flatten)]
        input: RingInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List or dump the built-in catalog
    Catalog {
        /// "list" or "dump"
        action: String,
        #[arg(long, default_value_t = 256)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_CATALOG_SEED)]
        seed: u64,
    },
    /// Jacobson radical and complement data
    Radical {
        #[command(flatten)]
        input: RingInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate the subring lattice
    Subrings {
        #[command(flatten)]
        input: RingInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// only the maximal proper subrings
        #[arg(long)]
        maximal: bool,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.text()),
        Format::Machine => print!("{}", report.machine()),
    }
}

fn bound_exit(e: &RingError) -> Option<ExitCode> {
    match e {
        RingError::LatticeBoundExceeded { .. } | RingError::SearchBoundExceeded { .. } => {
            Some(ExitCode::from(2))
        }
        _ => None,
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Sigma { input, format, timeout, max_order, extended } => {
            let ring = input.build()?;
            let opts = CoverOptions {
                timeout: Duration::from_secs(timeout),
                lattice_bound: max_order
                    .unwrap_or(if extended { 4096 } else { DEFAULT_LATTICE_BOUND }),
            };
            let rep = match sigma_exact_with(&ring, opts) {
                Ok(r) => r,
                Err(e) => {
                    if let Some(code) = bound_exit(&e) {
                        eprintln!("error: {e}");
                        return Ok(code);
                    }
                    return Err(e.to_string());
                }
            };
            let mut report = Report::new();
            report
                .push("ring", ring.name())
                .push("order", ring.order())
                .push("characteristic", ring.characteristic())
                .push("coverable", rep.coverable);
            match rep.sigma {
                Some(s) => report.push("sigma", s),
                None => report.push("sigma", "none"),
            };
            if let Some(w) = rep.witness_generator {
                report.push("witness_generator", w);
            }
            for (i, c) in rep.cover.iter().enumerate() {
                report.push(&format!("cover.{i}"), format_set(c));
            }
            report
                .push("universe_size", rep.universe_size)
                .push("candidates", rep.candidate_count)
                .push(
                    "lower_bound_trace",
                    rep.lower_bound_trace
                        .iter()
                        .map(|b| b.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                )
                .push("exact", rep.exact);
            emit(&report, format);
            Ok(if rep.exact { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Verify { id, format, max_order, seed, extended } => {
            let suites: Vec<&verify::Suite> = if id == "all" {
                REGISTRY.iter().collect()
            } else {
                vec![suite_by_id(&id).ok_or_else(|| {
                    RingError::UnknownTheoremId(id.clone()).to_string()
                })?]
            };
            let ctx = VerifyContext::new(max_order, seed, extended);
            let mut report = Report::new();
            report.push("seed", seed).push("max_order", max_order);
            let mut failures = 0usize;
            for suite in suites {
                report.push(&format!("describe.{}", suite.id), suite.description);
                let results = (suite.run)(&ctx);
                let mut npass = 0;
                let mut nskip = 0;
                for case in &results {
                    let tag = match case.outcome {
                        Outcome::Pass => {
                            npass += 1;
                            "pass"
                        }
                        Outcome::Fail => {
                            failures += 1;
                            "FAIL"
                        }
                        Outcome::Skipped => {
                            nskip += 1;
                            "skip"
                        }
                    };
                    report.push(
                        &format!("case.{}.{}", suite.id, sanitize(&case.case)),
                        format!("{tag} {}", case.detail),
                    );
                }
                report.push(
                    &format!("suite.{}", suite.id),
                    format!(
                        "{} ({} pass, {} skip, {} fail)",
                        if failures == 0 { "ok" } else { "failed" },
                        npass,
                        nskip,
                        results.len() - npass - nskip
                    ),
                );
            }
            report.push("failures", failures);
            emit(&report, format);
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::RingInfo { input, format } => {
            let ring = input.build()?;
            let rad = jacobson_radical(&ring);
            let mut report = Report::new();
            report
                .push("ring", ring.name())
                .push("order", ring.order())
                .push("characteristic", ring.characteristic())
                .push("commutative", ring.is_commutative())
                .push("units", ring.unit_set().len())
                .push("radical_order", rad.j_order)
                .push("nilpotency_index", rad.nilpotency_index)
                .push("semisimple_quotient_order", rad.quotient.ring.order());
            match wedderburn_complements(&ring, &rad) {
                Ok(comps) => {
                    report.push("complements", comps.len());
                }
                Err(e) => {
                    report.push("complements", format!("n/a ({e})"));
                }
            }
            if ring.order() <= DEFAULT_LATTICE_BOUND {
                match maximal_subrings(&ring, DEFAULT_LATTICE_BOUND) {
                    Ok(m) => {
                        report.push("maximal_subrings", m.len());
                    }
                    Err(e) => {
                        report.push("maximal_subrings", format!("n/a ({e})"));
                    }
                }
            }
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action, max_order, seed } => match action.as_str() {
            "list" => {
                let mut report = Report::new();
                for (i, dsl) in NAMED.iter().enumerate() {
                    report.push(&format!("named.{i}"), dsl);
                }
                report.push("count", NAMED.len());
                emit(&report, Format::Text);
                Ok(ExitCode::SUCCESS)
            }
            "dump" => {
                let mut report = Report::new();
                for r in named_rings(max_order) {
                    report.push(
                        &format!("ring.{}", sanitize(r.name())),
                        format!(
                            "order={} char={} commutative={}",
                            r.order(),
                            r.characteristic(),
                            r.is_commutative()
                        ),
                    );
                }
                for r in random_rings(seed, 10, 64) {
                    report.push(
                        &format!("random.{}", sanitize(r.name())),
                        format!("order={} char={}", r.order(), r.characteristic()),
                    );
                }
                report.push("seed", seed);
                emit(&report, Format::Text);
                Ok(ExitCode::SUCCESS)
            }
            other => Err(format!("unknown catalog action: {other}")),
        },
        Command::Radical { input, format } => {
            let ring = input.build()?;
            let rad = jacobson_radical(&ring);
            let mut report = Report::new();
            report
                .push("ring", ring.name())
                .push("order", ring.order())
                .push("radical_order", rad.j_order)
                .push("nilpotency_index", rad.nilpotency_index)
                .push_set("radical", &rad.j.set)
                .push("quotient_order", rad.quotient.ring.order());
            match wedderburn_complements(&ring, &rad) {
                Ok(comps) => {
                    report.push("complements", comps.len());
                    for (i, c) in comps.iter().enumerate() {
                        report.push_set(&format!("complement.{i}"), &c.set);
                    }
                }
                Err(e) => {
                    report.push("complements", format!("n/a ({e})"));
                }
            }
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Subrings { input, format, maximal, max_order } => {
            let ring = input.build()?;
            let bound = max_order.unwrap_or(DEFAULT_LATTICE_BOUND);
            let subs = if maximal {
                maximal_subrings(&ring, bound)
            } else {
                all_subrings(&ring, bound)
            };
            let subs = match subs {
                Ok(s) => s,
                Err(e) => {
                    if let Some(code) = bound_exit(&e) {
                        eprintln!("error: {e}");
                        return Ok(code);
                    }
                    return Err(e.to_string());
                }
            };
            let mut report = Report::new();
            report.push("ring", ring.name()).push("count", subs.len());
            for (i, s) in subs.iter().enumerate() {
                report.push(
                    &format!("subring.{i}"),
                    format!(
                        "card={} unital={} ideal={} {}",
                        s.card(),
                        s.contains_unity,
                        s.is_two_sided_ideal(),
                        format_set(&s.set)
                    ),
                );
            }
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Report keys are dotted identifiers; ring names contain punctuation.
fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}
