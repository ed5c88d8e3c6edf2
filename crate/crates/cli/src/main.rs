//! Command-line frontend over the enumeration library. Every subcommand is a
//! thin adapter: results are identical to the corresponding library calls.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 resource ceiling exceeded.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use rgflab_core::bijections::{self, BijObject};
use rgflab_core::closed_forms::{self, FormulaArgs};
use rgflab_core::error::Error;
use rgflab_core::patterns::{avoiders_with_limit, count_avoiders_with_limit, PatternSet};
use rgflab_core::statistics::{gen_poly_par, gen_poly_with_limit, stat_letter, stat_total, Stat};
use rgflab_core::words::{enumerate_rgfs_with_limit, Word, DEFAULT_MAX_N};
use rgflab_core::{verify, MultiPoly, Rgf};

#[derive(Parser)]
#[command(
    name = "rgflab",
    version,
    about = "Exact enumeration of restricted growth functions: pattern avoidance, statistics, generating polynomials, bijections, and claim verification"
)]
struct Cli {
    /// Worker threads for subtree-parallel walks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Generation ceiling; precedence is this flag, then RGFLAB_MAX_N, then 15.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every RGF of length n in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Stream or count the avoidance class R_n(V).
    Avoid {
        #[arg(long)]
        n: usize,
        /// Comma-separated pattern words, e.g. 111,1212.
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Letterwise and total statistics of one word.
    Stats {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Generating polynomial of a class by enumeration, or a registry formula.
    Genpoly {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        patterns: Option<String>,
        /// One of lb, ls, rb, rs, all (default all: the full 4-variable polynomial).
        #[arg(long)]
        stat: Option<String>,
        /// Formula id from the registry (see --list-formulas).
        #[arg(long)]
        formula: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Inner pattern argument for the recursion machines.
        #[arg(long)]
        pattern: Option<String>,
        /// Cross-verify the formula against brute-force enumeration; exits
        /// nonzero on mismatch.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        list_formulas: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply a registered bijection (see --list).
    Bijection {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        show_stats: bool,
        #[arg(long)]
        list: bool,
    },
    /// Run the claim-verification harness against brute-force oracles.
    Verify {
        /// Comma-separated check ids (default: all; see --list).
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Wall-clock budget per check in milliseconds; sizes beyond the
        /// budget are reported as skipped.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Include per-record timings in JSON output (off by default so the
        /// report is byte-stable).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exploratory data reports; nothing is asserted.
    Explore {
        /// Report name; available: rb1221 (coefficient table of RB_n(1221)).
        #[arg(long)]
        report: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code_for(&e))
}

fn ceiling(cli: &Cli) -> usize {
    cli.max_n
        .or_else(|| {
            std::env::var("RGFLAB_MAX_N")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_N)
}

fn parse_pattern_set(s: &str) -> Result<PatternSet, Error> {
    let set = PatternSet::parse_list(s)?;
    for warning in set.warnings() {
        eprintln!("warning: {warning}");
    }
    Ok(set)
}

fn print_word(w: &Rgf, format: Format) {
    match format {
        Format::Text => println!("{w}"),
        Format::Json => println!("{}", w.to_json_value()),
    }
}

fn run_enumerate(n: usize, format: Format, limit: usize) -> Result<(), Error> {
    for w in enumerate_rgfs_with_limit(n, limit)? {
        print_word(&w, format);
    }
    Ok(())
}

fn run_avoid(
    n: usize,
    patterns: &str,
    count_only: bool,
    format: Format,
    limit: usize,
) -> Result<(), Error> {
    let set = parse_pattern_set(patterns)?;
    if count_only {
        let (count, visits) = count_avoiders_with_limit(n, &set, limit)?;
        match format {
            Format::Text => println!("{count}"),
            Format::Json => println!(
                "{}",
                serde_json::json!({ "count": count, "nodes_visited": visits })
            ),
        }
    } else {
        for w in avoiders_with_limit(n, &set, limit)? {
            print_word(&w, format);
        }
    }
    Ok(())
}

fn run_stats(word: &str, format: Format) -> Result<(), Error> {
    let w: Word = word.parse()?;
    match format {
        Format::Text => {
            println!("word: {w}");
            for st in Stat::ALL {
                let letters: Vec<String> = (1..=w.len())
                    .map(|j| stat_letter(&w, j, st).to_string())
                    .collect();
                println!(
                    "{}: {} | total {}",
                    st.name(),
                    letters.join(" "),
                    stat_total(&w, st)
                );
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("word".into(), w.to_json_value());
            for st in Stat::ALL {
                let letters: Vec<usize> = (1..=w.len()).map(|j| stat_letter(&w, j, st)).collect();
                obj.insert(
                    st.name().into(),
                    serde_json::json!({ "letterwise": letters, "total": stat_total(&w, st) }),
                );
            }
            println!("{}", serde_json::Value::Object(obj));
        }
    }
    Ok(())
}

fn print_poly(p: &MultiPoly, format: Format) {
    match format {
        Format::Text => println!("{}", p.to_text()),
        Format::Json => println!("{}", p.to_json_value()),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_genpoly(
    n: usize,
    patterns: Option<&str>,
    stat: Option<&str>,
    formula: Option<&str>,
    k: Option<usize>,
    m: Option<usize>,
    inner: Option<&str>,
    check: bool,
    format: Format,
    limit: usize,
) -> Result<bool, Error> {
    let stat = match stat {
        None | Some("all") => None,
        Some(name) => Some(
            Stat::parse(name)
                .ok_or_else(|| Error::Invalid(format!("unknown statistic {name:?}")))?,
        ),
    };
    let brute = |n: usize| -> Result<MultiPoly, Error> {
        let set = parse_pattern_set(patterns.unwrap_or_default())?;
        match stat {
            Some(st) => {
                let full = gen_poly_with_limit(n, &set, limit)?;
                Ok(rgflab_core::statistics::specialize_stat(&full, st))
            }
            None => gen_poly_par(n, &set, limit),
        }
    };

    if let Some(id) = formula {
        let pattern = inner.map(|p| p.parse::<Rgf>()).transpose()?;
        let args = FormulaArgs { n, k, m, pattern };
        let value = closed_forms::evaluate(id, &args)?;
        match (&value, format) {
            (closed_forms::FormulaValue::Poly(p), _) => print_poly(p, format),
            (_, Format::Json) => println!("{}", serde_json::json!(value.render())),
            (_, Format::Text) => println!("{}", value.render()),
        }
        if check {
            if patterns.is_none() {
                return Err(Error::Invalid(
                    "--check with --formula needs --patterns (and --stat) to compare against"
                        .into(),
                ));
            }
            let target = brute(n)?;
            let formula_poly = value.into_poly()?;
            if formula_poly != target {
                eprintln!(
                    "check failed: formula {id} gives {} but enumeration gives {}",
                    formula_poly.to_text(),
                    target.to_text()
                );
                return Ok(false);
            }
            eprintln!("check passed: formula matches enumeration at n={n}");
        }
        return Ok(true);
    }

    if patterns.is_none() {
        return Err(Error::Invalid(
            "genpoly needs --patterns, --formula, or --list-formulas".into(),
        ));
    }
    let computed = brute(n)?;
    print_poly(&computed, format);
    if check {
        let Some(inst) = closed_forms::find_claiming(patterns.unwrap(), stat) else {
            return Err(Error::Invalid(format!(
                "no registered formula claims {} over R_n({})",
                stat.map_or("the full polynomial", |s| s.name()),
                patterns.unwrap()
            )));
        };
        let value = closed_forms::evaluate(inst.base, &inst.args(n))?.into_poly()?;
        if value != computed {
            eprintln!(
                "check failed: {} gives {} but enumeration gives {}",
                inst.label,
                value.to_text(),
                computed.to_text()
            );
            return Ok(false);
        }
        eprintln!("check passed: matches {} at n={n}", inst.label);
    }
    Ok(true)
}

fn run_bijection(
    name: Option<&str>,
    input: Option<&str>,
    inverse: bool,
    show_stats: bool,
) -> Result<(), Error> {
    let Some(name) = name else {
        return Err(Error::Invalid("--name is required (or use --list)".into()));
    };
    let Some(input) = input else {
        return Err(Error::Invalid("--input is required".into()));
    };
    let info = bijections::info(name)?;
    let kind = if inverse { info.output } else { info.input };
    let parsed = kind.parse(input)?;
    let result = if inverse {
        bijections::apply_inverse(name, &parsed)?
    } else {
        bijections::apply(name, &parsed)?
    };
    println!("{result}");
    if show_stats {
        for (sx, sy) in info.transports {
            let (from, to) = if inverse { (sy, sx) } else { (sx, sy) };
            let a = parsed.stat(from);
            let b = result.stat(to);
            if let (Some(a), Some(b)) = (a, b) {
                println!("  {from} = {a} -> {to} = {b}");
            }
        }
        if let (BijObject::Word(w), true) = (&parsed, info.transports.is_empty()) {
            // Maps without declared transports still show the word statistics.
            for st in Stat::ALL {
                println!("  {} = {}", st.name(), stat_total(w, st));
            }
        }
    }
    Ok(())
}

fn list_bijections() {
    for b in bijections::registry() {
        println!("{:12} {}", b.id, b.summary);
        println!(
            "{:12}   input: {}, output: {}",
            "",
            b.input.describe(),
            b.output.describe()
        );
    }
}

fn run_verify(
    ids: Option<Vec<String>>,
    n_max: Option<usize>,
    budget_ms: Option<u64>,
    timings: bool,
    format: Format,
) -> Result<bool, Error> {
    let report = verify::run(ids.as_deref(), n_max, budget_ms.map(Duration::from_millis))?;
    match format {
        Format::Text => print!("{}", report.render_table()),
        Format::Json => println!("{}", report.to_json(timings)),
    }
    Ok(!report.has_failures())
}

fn run_explore(report: &str, n_max: usize, limit: usize) -> Result<(), Error> {
    match report {
        "rb1221" => {
            // Coefficient table of RB_n(1221), printed for inspection only;
            // per-column stabilization is an open question, never asserted.
            println!("coefficients of q^k in RB_n(1221)");
            let set = PatternSet::parse_list("1221")?;
            let mut rows = Vec::new();
            let mut width = 0usize;
            for n in 0..=n_max {
                let full = gen_poly_with_limit(n, &set, limit)?;
                let rb = rgflab_core::statistics::specialize_stat(&full, Stat::Rb);
                let deg = rb.degree_in(rgflab_core::polynomials::Q) as usize;
                width = width.max(deg + 1);
                let coeffs: Vec<i64> = (0..=deg as u32).map(|e| rb.coeff(&[e, 0, 0, 0])).collect();
                rows.push((n, coeffs));
            }
            print!("{:>4}", "n\\k");
            for k in 0..width {
                print!("{k:>7}");
            }
            println!();
            for (n, coeffs) in rows {
                print!("{n:>4}");
                for k in 0..width {
                    match coeffs.get(k) {
                        Some(c) => print!("{c:>7}"),
                        None => print!("{:>7}", ""),
                    }
                }
                println!();
            }
            Ok(())
        }
        other => Err(Error::UnknownId(format!("report {other:?}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let limit = ceiling(&cli);

    let outcome = match &cli.command {
        Command::Enumerate { n, format } => run_enumerate(*n, *format, limit).map(|()| true),
        Command::Avoid {
            n,
            patterns,
            count_only,
            format,
        } => run_avoid(*n, patterns, *count_only, *format, limit).map(|()| true),
        Command::Stats { word, format } => run_stats(word, *format).map(|()| true),
        Command::Genpoly {
            n,
            patterns,
            stat,
            formula,
            k,
            m,
            pattern,
            check,
            list_formulas,
            format,
        } => {
            if *list_formulas {
                for info in closed_forms::formula_infos() {
                    println!("{:14} ({:12}) {}", info.id, info.params, info.describes);
                }
                Ok(true)
            } else {
                run_genpoly(
                    *n,
                    patterns.as_deref(),
                    stat.as_deref(),
                    formula.as_deref(),
                    *k,
                    *m,
                    pattern.as_deref(),
                    *check,
                    *format,
                    limit,
                )
            }
        }
        Command::Bijection {
            name,
            input,
            inverse,
            show_stats,
            list,
        } => {
            if *list {
                list_bijections();
                Ok(true)
            } else {
                run_bijection(name.as_deref(), input.as_deref(), *inverse, *show_stats)
                    .map(|()| true)
            }
        }
        Command::Verify {
            ids,
            n_max,
            budget_ms,
            timings,
            list,
            format,
        } => {
            if *list {
                for id in verify::check_ids() {
                    println!("{id}");
                }
                Ok(true)
            } else {
                run_verify(ids.clone(), *n_max, *budget_ms, *timings, *format)
            }
        }
        Command::Explore { report, n_max } => run_explore(report, *n_max, limit).map(|()| true),
    };

    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => fail(e),
    }
}
