//! Command-line front end: tables, the verification grid, bijection
//! suites, triangle transforms, chromatic queries, diagonal sums, the
//! Stephan conjecture checker, and OEIS comparison.
//!
//! Conventions: data goes to stdout, diagnostics to stderr.  All big
//! integers are serialized as decimal strings in JSON (values overflow
//! doubles long before the grids get interesting).  Exit codes: 0 success,
//! 1 verification mismatch, 2 usage error, 3 enumeration budget exceeded.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use polybern::bijections::check_all;
use polybern::chromatic::chr_bipartite;
use polybern::diagonal::{check_stephan, diagonal_sum};
use polybern::exact::{Int, Rat};
use polybern::oeis::{compare_sequence, local_reference, Client, DEFAULT_BASE_URL};
use polybern::sequences::{value, SequenceId};
use polybern::transforms::{
    at_step, bernoulli_seed, bt_step, power_plus_seed, power_seed, TriangleRow,
};

use verify::{parse_families, Family};

#[derive(Parser)]
#[command(
    name = "polybern",
    version,
    about = "Exact poly-Bernoulli family computations with cross-validation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a value table for one of the arrays B, C, D
    Table {
        /// Sequence: B, C or D
        #[arg(long)]
        seq: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        kmax: usize,
        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Cross-check the combinatorial families against the closed formulas;
    /// exits 1 on any mismatch, 3 if an enumeration budget is exceeded
    Verify {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        kmax: usize,
        /// Comma-separated subset of:
        /// lonesum,gamma,p,q,band,excedance,callan,orientation
        #[arg(long)]
        families: Option<String>,
        /// Worker threads for the grid (the report does not depend on this)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include the enumerated members of the permutation families
        #[arg(long)]
        emit: bool,
    },
    /// Run every bijection round-trip and image suite
    Bijections {
        /// Required; runs the checks
        #[arg(long)]
        check: bool,
    },
    /// Emit a triangle transform of a seed sequence
    Transform {
        /// Rule: at (Akiyama-Tanigawa) or bt (Chen)
        #[arg(long)]
        rule: String,
        /// Seed: bernoulli, pow:K or powplus:K
        #[arg(long)]
        seed: String,
        /// Depth: the triangle runs from the seed row down to row n
        #[arg(long)]
        n: usize,
    },
    /// Chromatic polynomial of the complete bipartite graph K_{n,k}
    #[command(group(ArgGroup::new("query").args(["eval", "coeff", "derive_at"])))]
    Chromatic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Evaluate at an integer point
        #[arg(long)]
        eval: Option<i64>,
        /// Report one monomial coefficient
        #[arg(long)]
        coeff: Option<usize>,
        /// Evaluate the derivative at an integer point
        #[arg(long = "derive-at")]
        derive_at: Option<i64>,
    },
    /// Diagonal sums of B or C
    Diagonal {
        /// Sequence: B or C
        #[arg(long)]
        seq: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Stephan conjecture evidence: diagonal sums of B against 3*P_N
    Conjecture {
        #[arg(long)]
        nmax: usize,
    },
    /// Fetch an OEIS b-file and compare it against the local computation
    Oeis {
        /// A-number: A099594, A098830 or A136127
        #[arg(long)]
        seq: String,
        /// Never touch the network; use the cache or bundled fixtures
        #[arg(long)]
        offline: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn budget(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn int_str(v: &Int) -> String {
    v.to_string()
}

fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_seq(s: &str) -> Result<SequenceId, Failure> {
    SequenceId::from_str(s).map_err(Failure::usage)
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Table {
            seq,
            nmax,
            kmax,
            format,
        } => table(&seq, nmax, kmax, &format),
        Command::Verify {
            nmax,
            kmax,
            families,
            jobs,
            emit,
        } => run_verify(nmax, kmax, families.as_deref(), jobs, emit),
        Command::Bijections { check } => bijections(check),
        Command::Transform { rule, seed, n } => transform(&rule, &seed, n),
        Command::Chromatic {
            n,
            k,
            eval,
            coeff,
            derive_at,
        } => chromatic(n, k, eval, coeff, derive_at),
        Command::Diagonal { seq, nmax } => diagonal(&seq, nmax),
        Command::Conjecture { nmax } => conjecture(nmax),
        Command::Oeis { seq, offline } => oeis(&seq, offline),
    }
}

fn table(seq: &str, nmax: usize, kmax: usize, format: &str) -> Result<u8, Failure> {
    let seq = parse_seq(seq)?;
    let rows: Vec<Vec<Int>> = (0..=nmax)
        .map(|n| (0..=kmax).map(|k| value(seq, n, k)).collect())
        .collect();
    match format {
        "csv" => {
            let header: Vec<String> = std::iter::once("n/k".to_string())
                .chain((0..=kmax).map(|k| k.to_string()))
                .collect();
            println!("{}", header.join(","));
            for (n, row) in rows.iter().enumerate() {
                let line: Vec<String> = std::iter::once(n.to_string())
                    .chain(row.iter().map(int_str))
                    .collect();
                println!("{}", line.join(","));
            }
        }
        "json" => {
            let values: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(int_str).collect())
                .collect();
            let out = json!({
                "seq": seq.to_string(),
                "nmax": nmax,
                "kmax": kmax,
                "values": values,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown format {other:?} (csv or json)"
            )))
        }
    }
    Ok(0)
}

fn run_verify(
    nmax: usize,
    kmax: usize,
    families: Option<&str>,
    jobs: usize,
    emit: bool,
) -> Result<u8, Failure> {
    let families: Vec<Family> = match families {
        Some(spec) => parse_families(spec).map_err(Failure::usage)?,
        None => Family::ALL.to_vec(),
    };
    let outcomes = verify::run_grid(nmax, kmax, &families, jobs, emit)
        .map_err(|hit| Failure::budget(hit.0))?;
    let mismatches: Vec<Value> = outcomes
        .iter()
        .filter(|c| !c.ok())
        .map(|c| {
            json!({
                "family": c.family,
                "route": c.route,
                "seq": c.seq.to_string(),
                "n": c.n,
                "k": c.k,
                "expected": int_str(&c.expected),
                "found": int_str(&c.found),
            })
        })
        .collect();
    let listings: Vec<Value> = if emit {
        outcomes
            .iter()
            .filter_map(|c| {
                c.members.as_ref().map(|m| {
                    json!({
                        "family": c.family,
                        "route": c.route,
                        "n": c.n,
                        "k": c.k,
                        "members": m,
                    })
                })
            })
            .collect()
    } else {
        Vec::new()
    };
    let ok = mismatches.is_empty();
    let mut out = json!({
        "nmax": nmax,
        "kmax": kmax,
        "jobs": jobs,
        "families": families.iter().map(|f| f.name()).collect::<Vec<_>>(),
        "checked": outcomes.len(),
        "mismatches": mismatches,
        "ok": ok,
    });
    if emit {
        out["listings"] = Value::Array(listings);
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(if ok { 0 } else { 1 })
}

fn bijections(check: bool) -> Result<u8, Failure> {
    if !check {
        return Err(Failure::usage("nothing to do; pass --check"));
    }
    let suites = check_all();
    let all_passed = suites.iter().all(|s| s.passed());
    let out = json!({
        "suites": suites
            .iter()
            .map(|s| {
                json!({
                    "name": s.name,
                    "cases": s.cases,
                    "passed": s.passed(),
                    "failures": s.failures,
                })
            })
            .collect::<Vec<_>>(),
        "all_passed": all_passed,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(if all_passed { 0 } else { 1 })
}

fn transform(rule: &str, seed: &str, n: usize) -> Result<u8, Failure> {
    type Step = fn(&TriangleRow) -> Result<TriangleRow, polybern::transforms::TransformError>;
    let step: Step = match rule {
        "at" => at_step,
        "bt" => bt_step,
        other => return Err(Failure::usage(format!("unknown rule {other:?} (at or bt)"))),
    };
    let entries = match seed.split_once(':') {
        None if seed == "bernoulli" => bernoulli_seed(n + 1),
        Some(("pow", k)) => {
            let k: usize = k
                .parse()
                .map_err(|_| Failure::usage("bad pow:K exponent"))?;
            power_seed(k, n + 1)
        }
        Some(("powplus", k)) => {
            let k: usize = k
                .parse()
                .map_err(|_| Failure::usage("bad powplus:K exponent"))?;
            power_plus_seed(k, n + 1)
        }
        _ => {
            return Err(Failure::usage(format!(
                "unknown seed {seed:?} (bernoulli, pow:K or powplus:K)"
            )))
        }
    };
    let mut rows = vec![TriangleRow::seed(entries)];
    for _ in 0..n {
        let next =
            step(rows.last().expect("nonempty")).map_err(|e| Failure::runtime(e.to_string()))?;
        rows.push(next);
    }
    let triangle: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.entries.iter().map(rat_str).collect())
        .collect();
    let out = json!({
        "rule": rule,
        "seed": seed,
        "n": n,
        "triangle": triangle,
        "leading": rat_str(rows.last().expect("nonempty").leading()),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(0)
}

fn chromatic(
    n: usize,
    k: usize,
    eval: Option<i64>,
    coeff: Option<usize>,
    derive_at: Option<i64>,
) -> Result<u8, Failure> {
    let chr = chr_bipartite(n, k);
    let mut out = json!({
        "n": n,
        "k": k,
        "polynomial": {
            "coefficients": chr.poly.coefficients().iter().map(int_str).collect::<Vec<_>>(),
            "display": chr.poly.to_string(),
        },
    });
    if let Some(q) = eval {
        out["eval"] = json!({ "at": q, "value": int_str(&chr.poly.eval(&Int::from(q))) });
    }
    if let Some(d) = coeff {
        out["coefficient"] = json!({ "degree": d, "value": int_str(&chr.poly.coefficient(d)) });
    }
    if let Some(q) = derive_at {
        out["derivative"] =
            json!({ "at": q, "value": int_str(&chr.poly.derivative().eval(&Int::from(q))) });
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(0)
}

fn diagonal(seq: &str, nmax: usize) -> Result<u8, Failure> {
    let seq = parse_seq(seq)?;
    let start = match seq {
        SequenceId::B => 0usize,
        SequenceId::C => 1,
        SequenceId::D => {
            return Err(Failure::usage("diagonal supports B or C"));
        }
    };
    let sums: Vec<Value> = (start..=nmax)
        .map(|n| json!({ "n": n, "value": int_str(&diagonal_sum(seq, n)) }))
        .collect();
    let out = json!({ "seq": seq.to_string(), "sums": sums });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(0)
}

fn conjecture(nmax: usize) -> Result<u8, Failure> {
    let reports: Vec<Value> = check_stephan(nmax)
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "diagonal_sum": int_str(&r.diag_sum),
                "three_p_n": rat_str(&r.three_p_n),
                "equal": r.equal,
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&Value::Array(reports)).expect("json")
    );
    Ok(0)
}

fn oeis(anum: &str, offline: bool) -> Result<u8, Failure> {
    let base = std::env::var("OEIS_BASE_URL").unwrap_or_else(|_| DEFAULT_BASE_URL.to_string());
    let cache: PathBuf = std::env::var_os("OEIS_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("polybern-oeis-cache"));
    let bfile = if offline {
        Client::offline(cache).fetch(anum)
    } else {
        Client::http(base, cache).fetch(anum)
    }
    .map_err(|e| Failure::runtime(e.to_string()))?;
    let (local, first_index) = local_reference(anum, bfile.terms.len()).ok_or_else(|| {
        Failure::usage(format!(
            "no local reference for {anum}; known: A099594, A098830, A136127"
        ))
    })?;
    let report = compare_sequence(&bfile, &local, first_index);
    let out = json!({
        "anum": report.anum,
        "offline": offline,
        "terms": bfile.terms.len(),
        "checked": report.checked,
        "all_match": report.all_match(),
        "mismatches": report
            .mismatches
            .iter()
            .map(|m| {
                json!({
                    "index": m.index,
                    "published": int_str(&m.published),
                    "computed": int_str(&m.computed),
                })
            })
            .collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(if report.all_match() { 0 } else { 1 })
}
