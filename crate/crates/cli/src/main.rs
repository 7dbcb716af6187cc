//! `snchar` — exact character computations for the symmetric group:
//! single characters with a cross-checking oracle, restricted power sums,
//! certified closed forms, catalogs, and recurrence guessing.

mod catalog;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use snchar_core::charsums::{phi2, power_sum, psi2, SumFamily, SumRequest};
use snchar_core::oracle::mn_character;
use snchar_core::partitions::f_lambda;
use snchar_core::polyengine::character_ct;
use snchar_core::recurrence::{guess_recurrence, verify_recurrence};
use snchar_core::{Error, Partition};

use catalog::{bigint_json, coeff_array, partition_json, CatalogEntry, Kind};

#[derive(Parser)]
#[command(
    name = "snchar",
    about = "Symmetric-group character sums: exact values, closed forms, recurrences",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// constant-term extraction
    Ct,
    /// rim-hook recursion
    Mn,
    /// run both and fail on mismatch
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    RowsBounded,
    Hook,
    TwoRow,
    MetaHook,
    AllShapes,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Phi2,
    Psi2,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Phi2 => Kind::Phi2,
            KindArg::Psi2 => Kind::Psi2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Character value chi^lambda(mu) for partitions in comma form
    Char {
        /// shape, e.g. 3,1
        lambda: String,
        /// cycle type, e.g. 1,1,1,1 or frequency form "2^1 1^2"
        mu: String,
        #[arg(long, value_enum, default_value_t = Engine::Ct)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of standard Young tableaux of a shape
    F {
        lambda: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Restricted power sums over a range of n, one line per n
    Sum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// row bound for family rows_bounded
        #[arg(long)]
        r: Option<usize>,
        /// meta-hook row count for family meta_hook
        #[arg(long)]
        k: Option<usize>,
        /// meta-hook column count for family meta_hook
        #[arg(long)]
        l: Option<u32>,
        /// power each character is raised to
        #[arg(long, alias = "power", default_value_t = 1)]
        s: u32,
        /// class prefix (parts >= 2), empty for the identity class
        #[arg(long, default_value = "")]
        mu0: String,
        /// single n or inclusive range lo..hi
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Hook square sums over a range of n
    Phi2 {
        #[arg(long, default_value = "")]
        mu0: String,
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Two-row square sums over a range of n
    Psi2 {
        #[arg(long, default_value = "")]
        mu0: String,
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Derive and print the certified closed form for a class prefix
    Closedform {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, default_value = "")]
        mu0: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Certified closed forms for every class prefix up to a weight bound
    Catalog {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 8)]
        max_weight: u64,
        /// output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Guess a linear recurrence with polynomial coefficients from
    /// brute-force terms of a restricted power sum
    Guess {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, alias = "power", default_value_t = 1)]
        s: u32,
        #[arg(long, default_value = "")]
        mu0: String,
        /// range of n for the computed terms
        #[arg(long, default_value = "1..40")]
        n: String,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Failure {
            code,
            msg: msg.into(),
        }
    }
}

// 2 input validation, 3 certification failure, 4 guessing failure,
// 5 internal inconsistency
impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::CertificationFailed { .. } => 3,
            Error::SingularPoint { .. } | Error::InexactDivision { .. } => 5,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(f) = run(cli.command) {
        eprintln!("error: {}", f.msg);
        std::process::exit(f.code);
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Partition::parse(text).map_err(Failure::from)
}

/// `lo..hi` (inclusive) or a single integer.
fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::new(2, format!("cannot parse n range `{text}`"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let n: u64 = text.trim().parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

fn build_family(
    family: FamilyArg,
    r: Option<usize>,
    k: Option<usize>,
    l: Option<u32>,
) -> Result<SumFamily, Failure> {
    let extraneous = |flag: &str, fam: &str| {
        Failure::new(2, format!("--{flag} does not apply to family {fam}"))
    };
    match family {
        FamilyArg::RowsBounded => {
            if k.is_some() || l.is_some() {
                return Err(extraneous("k/--l", "rows_bounded"));
            }
            let max_rows =
                r.ok_or_else(|| Failure::new(2, "family rows_bounded needs --r"))?;
            Ok(SumFamily::RowsBounded { max_rows })
        }
        FamilyArg::MetaHook => {
            if r.is_some() {
                return Err(extraneous("r", "meta_hook"));
            }
            let rows = k.ok_or_else(|| Failure::new(2, "family meta_hook needs --k"))?;
            let cols = l.ok_or_else(|| Failure::new(2, "family meta_hook needs --l"))?;
            Ok(SumFamily::MetaHook { rows, cols })
        }
        other => {
            let name = match other {
                FamilyArg::Hook => "hook",
                FamilyArg::TwoRow => "two_row",
                FamilyArg::AllShapes => "all_shapes",
                _ => unreachable!(),
            };
            if r.is_some() || k.is_some() || l.is_some() {
                return Err(extraneous("r/--k/--l", name));
            }
            Ok(match other {
                FamilyArg::Hook => SumFamily::Hook,
                FamilyArg::TwoRow => SumFamily::TwoRow,
                FamilyArg::AllShapes => SumFamily::AllShapes,
                _ => unreachable!(),
            })
        }
    }
}

fn family_name(f: SumFamily) -> String {
    match f {
        SumFamily::RowsBounded { max_rows } => format!("rows_bounded(r={max_rows})"),
        SumFamily::Hook => "hook".into(),
        SumFamily::TwoRow => "two_row".into(),
        SumFamily::MetaHook { rows, cols } => format!("meta_hook(k={rows},l={cols})"),
        SumFamily::AllShapes => "all_shapes".into(),
    }
}

fn print_value_table(
    label: &str,
    mu0: &Partition,
    power: u32,
    values: &[(u64, BigInt)],
    format: Format,
) {
    match format {
        Format::Text => {
            for (n, v) in values {
                println!("{n}\t{v}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = values
                .iter()
                .map(|(n, v)| json!({"n": n, "value": bigint_json(v)}))
                .collect();
            let doc = json!({
                "family": label,
                "power": power,
                "mu0": partition_json(mu0),
                "values": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Char {
            lambda,
            mu,
            engine,
            format,
        } => {
            let lambda = parse_partition(&lambda)?;
            let mu = parse_partition(&mu)?;
            let ct = || character_ct(&lambda, &mu).map_err(Failure::from);
            let mn = || mn_character(&lambda, &mu).map_err(Failure::from);
            let (ct_val, mn_val) = match engine {
                Engine::Ct => (Some(ct()?), None),
                Engine::Mn => (None, Some(mn()?)),
                Engine::Both => (Some(ct()?), Some(mn()?)),
            };
            if let (Some(a), Some(b)) = (&ct_val, &mn_val) {
                if a != b {
                    return Err(Failure::new(
                        5,
                        format!("engine mismatch for chi^({lambda})({mu}): ct={a}, mn={b}"),
                    ));
                }
            }
            match format {
                Format::Text => {
                    if let Some(a) = &ct_val {
                        match engine {
                            Engine::Both => println!("ct {a}"),
                            _ => println!("{a}"),
                        }
                    }
                    if let Some(b) = &mn_val {
                        match engine {
                            Engine::Both => println!("mn {b}"),
                            _ => println!("{b}"),
                        }
                    }
                }
                Format::Json => {
                    let mut doc = serde_json::Map::new();
                    doc.insert("lambda".into(), partition_json(&lambda));
                    doc.insert("mu".into(), partition_json(&mu));
                    if let Some(a) = &ct_val {
                        doc.insert("ct".into(), bigint_json(a));
                    }
                    if let Some(b) = &mn_val {
                        doc.insert("mn".into(), bigint_json(b));
                    }
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(())
        }

        Command::F { lambda, format } => {
            let lambda = parse_partition(&lambda)?;
            let f = f_lambda(&lambda);
            match format {
                Format::Text => println!("{f}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "lambda": partition_json(&lambda),
                        "f": bigint_json(&f),
                    }))
                    .unwrap()
                ),
            }
            Ok(())
        }

        Command::Sum {
            family,
            r,
            k,
            l,
            s,
            mu0,
            n,
            format,
        } => {
            let fam = build_family(family, r, k, l)?;
            let mu0 = parse_partition(&mu0)?;
            let (lo, hi) = parse_range(&n)?;
            let mut values = Vec::new();
            for n in lo..=hi {
                let req = SumRequest {
                    family: fam,
                    power: s,
                    mu0: mu0.clone(),
                    n,
                };
                values.push((n, power_sum(&req)?));
            }
            print_value_table(&family_name(fam), &mu0, s, &values, format);
            Ok(())
        }

        Command::Phi2 { mu0, n, format } => {
            let mu0 = parse_partition(&mu0)?;
            let (lo, hi) = parse_range(&n)?;
            let mut values = Vec::new();
            for n in lo..=hi {
                values.push((n, phi2(&mu0, n)?));
            }
            print_value_table("hook", &mu0, 2, &values, format);
            Ok(())
        }

        Command::Psi2 { mu0, n, format } => {
            let mu0 = parse_partition(&mu0)?;
            let (lo, hi) = parse_range(&n)?;
            let mut values = Vec::new();
            for n in lo..=hi {
                values.push((n, psi2(&mu0, n)?));
            }
            print_value_table("two_row", &mu0, 2, &values, format);
            Ok(())
        }

        Command::Closedform { kind, mu0, format } => {
            let mu0 = parse_partition(&mu0)?;
            let entry = CatalogEntry::derive(kind.into(), mu0)?;
            match format {
                Format::Text => println!("{}", entry.closed_form),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&entry.json_value()).unwrap())
                }
            }
            Ok(())
        }

        Command::Catalog {
            kind,
            max_weight,
            out,
            format,
        } => {
            let entries = catalog::generate(kind.into(), max_weight)?;
            let rendered = match format {
                Format::Text => catalog::render_text(&entries),
                Format::Json => catalog::render_json(&entries),
            };
            match out {
                Some(path) => std::fs::write(&path, rendered)
                    .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            Ok(())
        }

        Command::Guess {
            family,
            r,
            k,
            l,
            s,
            mu0,
            n,
            max_order,
            max_degree,
            format,
        } => {
            let fam = build_family(family, r, k, l)?;
            let mu0 = parse_partition(&mu0)?;
            let (lo, hi) = parse_range(&n)?;
            let mut terms = Vec::new();
            for n in lo..=hi {
                let req = SumRequest {
                    family: fam,
                    power: s,
                    mu0: mu0.clone(),
                    n,
                };
                terms.push((n as i64, power_sum(&req)?));
            }
            let Some(rec) = guess_recurrence(&terms, max_order, max_degree)? else {
                return Err(Failure::new(
                    4,
                    format!(
                        "no recurrence found within order <= {max_order}, degree <= {max_degree}"
                    ),
                ));
            };
            debug_assert!(verify_recurrence(&rec, &terms));
            let holdout = (rec.order() + rec.degree() + 5).max(8);
            let fit_hi = terms[terms.len() - holdout - 1].0;
            let hold_lo = terms[terms.len() - holdout].0;
            match format {
                Format::Text => {
                    println!("{rec}");
                    println!(
                        "order = {}; degree = {}; empirically certified: fitted on n = {}..{}, holdout n = {}..{} verified",
                        rec.order(),
                        rec.degree(),
                        terms[0].0,
                        fit_hi,
                        hold_lo,
                        terms[terms.len() - 1].0
                    );
                }
                Format::Json => {
                    let coeffs: Vec<serde_json::Value> = rec
                        .coeffs()
                        .iter()
                        .map(|p| coeff_array(p.coeffs()))
                        .collect();
                    let doc = json!({
                        "order": rec.order(),
                        "degree": rec.degree(),
                        "coeffs": coeffs,
                        "fit_range": [terms[0].0, fit_hi],
                        "holdout_range": [hold_lo, terms[terms.len() - 1].0],
                        "verified": true,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(())
        }
    }
}
