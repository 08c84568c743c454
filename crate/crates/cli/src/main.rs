use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plethy_core::constructions::{beta_rank, delta, delta_part, hodge_part, sigma, tau, u, vh, whitney};
use plethy_core::lie_family::{conj, ell, lie, lie2};
use plethy_core::registry::{self, lookup, verify_many, Tier};
use plethy_core::schur::{to_schur, Positivity};
use plethy_core::tables::table;
use plethy_core::wire::{report_line, report_to_json, schur_to_json, symfunc_from_str, symfunc_to_json};
use plethy_core::{Error, SymFunc};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "plethy", version, about = "Exact symmetric functions, plethysm and Lie-type modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    P,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Lie,
    Conj,
    Lie2,
    Ell,
    Delta,
    DeltaPart,
    HodgePart,
    Sigma,
    Tau,
    Whitney,
    Vh,
    U,
    Beta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conjecture {
    Whitehouse,
    UPos,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a named symmetric function of degree n.
    Compute {
        object: Object,
        n: usize,
        /// Second parameter: r for ell, k for whitney/vh/u/beta/delta-part/hodge-part.
        extra: Option<usize>,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
        /// Print the human form, e.g. (3,1)+(2,1^2), instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Expand a power-sum JSON symmetric function in Schur functions.
    Schur {
        /// File holding p-basis JSON; standard input when omitted or "-".
        file: Option<String>,
        #[arg(long)]
        text: bool,
    },
    /// Check identities from the registry degree by degree.
    Verify {
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
        /// List identity ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Reproduce the published tables.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: Option<u8>,
        #[arg(long)]
        json: bool,
    },
    /// Scan a positivity conjecture up to a bound.
    Conjecture {
        #[arg(long, value_enum)]
        which: Conjecture,
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Time the main workloads.
    Bench {
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            object,
            n,
            extra,
            basis,
            text,
        } => match compute(object, n, extra) {
            Ok(f) => emit(&f, basis, text),
            Err(e) => usage(e),
        },
        Command::Schur { file, text } => schur_cmd(file, text),
        Command::Verify {
            ids,
            all,
            cap,
            jobs,
            json,
            list,
        } => verify_cmd(ids, all, cap, jobs, json, list),
        Command::Tables { which, json } => tables_cmd(which, json),
        Command::Conjecture { which, max, json } => conjecture_cmd(which, max, json),
        Command::Bench { cap } => bench(cap),
    }
}

fn compute(object: Object, n: usize, extra: Option<usize>) -> Result<SymFunc, Error> {
    let k = || extra.ok_or_else(|| Error::InvalidArgument("this object needs a second parameter".into()));
    let no_extra = || match extra {
        Some(_) => Err(Error::InvalidArgument("this object takes one parameter".into())),
        None => Ok(()),
    };
    let below_n = |k: usize| {
        if k < n {
            Ok(k)
        } else {
            Err(Error::InvalidArgument(format!("k = {k} must be below n = {n}")))
        }
    };
    match object {
        Object::Lie => no_extra().map(|_| lie(n)),
        Object::Conj => no_extra().map(|_| conj(n)),
        Object::Lie2 => no_extra().map(|_| lie2(n)),
        Object::Delta => no_extra().map(|_| delta(n)),
        Object::Sigma => no_extra().and_then(|_| sigma(n)),
        Object::Tau => no_extra().and_then(|_| tau(n)),
        Object::Ell => {
            let r = k()?;
            if r == 0 {
                return Err(Error::InvalidArgument("r must be positive".into()));
            }
            Ok(ell(n, r))
        }
        Object::Whitney => whitney(n, below_n(k()?)?),
        Object::Vh => vh(n, below_n(k()?)?),
        Object::U => u(n, below_n(k()?)?),
        Object::Beta => beta_rank(n, below_n(k()?)?),
        Object::DeltaPart => delta_part(n, k()?),
        Object::HodgePart => hodge_part(n, k()?),
    }
}

fn emit(f: &SymFunc, basis: Basis, text: bool) -> ExitCode {
    match basis {
        Basis::P => {
            if text {
                println!("{f}");
            } else {
                println!("{}", symfunc_to_json(f));
            }
        }
        Basis::S => match to_schur(f) {
            Ok(s) if text => println!("{}", s.render()),
            Ok(s) => println!("{}", schur_to_json(&s)),
            Err(e) => return usage(e),
        },
    }
    ExitCode::SUCCESS
}

fn schur_cmd(file: Option<String>, text: bool) -> ExitCode {
    let input = match file.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map(|_| buf)
        }
        Some(path) => std::fs::read_to_string(path),
    };
    let input = match input {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    match symfunc_from_str(&input) {
        Ok(f) => emit(&f, Basis::S, text),
        Err(e) => usage(e),
    }
}

fn verify_cmd(ids: Vec<String>, all: bool, cap: usize, jobs: Option<usize>, json: bool, list: bool) -> ExitCode {
    if list {
        for i in registry::registry() {
            println!("{:<16} {:<10} n>={:<2} {}", i.id, i.tier.as_str(), i.min_degree, i.summary);
        }
        return ExitCode::SUCCESS;
    }
    if cap < 2 {
        return usage("--cap must be at least 2");
    }
    if jobs == Some(0) {
        return usage("--jobs must be positive");
    }
    if all == !ids.is_empty() {
        return usage("give either --all or one or more --id");
    }
    let selected: Vec<_> = if all {
        registry::registry().iter().collect()
    } else {
        let mut out = Vec::new();
        for id in &ids {
            match lookup(id) {
                Some(i) => out.push(i),
                None => return usage(format!("unknown identity {id}; see --list")),
            }
        }
        out
    };
    let reports = verify_many(selected, cap, jobs);
    let mut failed = false;
    for r in &reports {
        if json {
            println!("{}", report_to_json(r));
        } else {
            println!("{}", report_line(r));
        }
        if !r.passed() && (r.tier == Tier::Theorem || !all) {
            failed = true;
        }
    }
    if failed {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn tables_cmd(which: Option<u8>, json: bool) -> ExitCode {
    let list: Vec<u8> = which.map(|w| vec![w]).unwrap_or_else(|| vec![1, 2, 3, 4]);
    for (i, w) in list.iter().enumerate() {
        let t = match table(*w) {
            Ok(t) => t,
            Err(e) => return usage(e),
        };
        if json {
            println!("{}", t.to_json());
        } else {
            if i > 0 {
                println!();
            }
            print!("Table {w}: {}", t.render());
        }
    }
    ExitCode::SUCCESS
}

fn positivity_json(p: &Positivity) -> Value {
    match p {
        Positivity::Positive => json!({"positive": true}),
        Positivity::NotPositive { witness, coeff } => json!({
            "positive": false,
            "witness": {"partition": witness.parts(), "coeff": coeff.to_string()},
        }),
    }
}

fn positivity_text(p: &Positivity) -> String {
    match p {
        Positivity::Positive => "positive".into(),
        Positivity::NotPositive { witness, coeff } => format!("not positive (s{witness} has coefficient {coeff})"),
    }
}

fn conjecture_cmd(which: Conjecture, max: usize, json: bool) -> ExitCode {
    let start = Instant::now();
    let mut violated = false;
    match which {
        Conjecture::Whitehouse => {
            if max < 2 {
                return usage("--max must be at least 2");
            }
            let scan = match registry::whitehouse_scan(max) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            for (n, p) in &scan {
                let expected = n.is_power_of_two();
                let agrees = if *n >= 3 { p.is_positive() != expected } else { true };
                violated |= !agrees;
                if json {
                    let mut v = positivity_json(p);
                    v["n"] = json!(n);
                    v["as_predicted"] = json!(agrees);
                    println!("{v}");
                } else {
                    let note = if *n < 3 { "  (outside the conjectured range)" } else if agrees { "" } else { "  VIOLATION" };
                    println!("n={n:<3} {}{note}", positivity_text(p));
                }
            }
            if !json {
                let negative: Vec<String> = scan
                    .iter()
                    .filter(|(n, p)| *n >= 3 && !p.is_positive())
                    .map(|(n, _)| n.to_string())
                    .collect();
                println!("not positive at n in {{{}}}", negative.join(","));
            }
        }
        Conjecture::UPos => {
            let scan = match registry::u_pos_scan(max) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            for (n, k, p) in &scan {
                violated |= !p.is_positive();
                if json {
                    let mut v = positivity_json(p);
                    v["n"] = json!(n);
                    v["k"] = json!(k);
                    println!("{v}");
                } else if !p.is_positive() {
                    println!("U_{k}({n}) {}", positivity_text(p));
                }
            }
            if !json {
                println!(
                    "{} of {} truncated sums U_k(n), n <= {max}, are Schur-positive",
                    scan.iter().filter(|(_, _, p)| p.is_positive()).count(),
                    scan.len()
                );
            }
        }
    }
    eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    if violated {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn timed<T>(label: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    println!("{label:<40} {:>8.2}s", start.elapsed().as_secs_f64());
    out
}

fn bench(cap: usize) -> ExitCode {
    timed("tables 1-4", || (1..=4).for_each(|w| drop(table(w))));
    let all: Vec<_> = registry::registry().iter().collect();
    timed(&format!("verify --all --cap {cap} --jobs 1"), || verify_many(all.clone(), cap, Some(1)));
    timed(&format!("verify --all --cap {cap} (parallel)"), || verify_many(all.clone(), cap, None));
    let _ = timed(&format!("lie2({cap}) to Schur"), || to_schur(&lie2(cap)));
    ExitCode::SUCCESS
}
