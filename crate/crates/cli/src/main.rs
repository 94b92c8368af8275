use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diamon::monoid::{self, ExtCase};
use diamon::query::{self, Source};
use diamon::rep::{self, Estimate, GapReport};
use diamon::{acceptance, families, Error, Family};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "diamon", version, about = "Exact computations for diagram monoids")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// worker cap; every computation currently runs on one thread
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Clone)]
struct MonoidArgs {
    /// tl, motzkin, brauer, prook, rook, rookbrauer, ppartition, partition,
    /// sym, transformation or cyclic
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// period of the cyclic monoid (its index is --n)
    #[arg(long, default_value_t = 1)]
    period: usize,
    /// read a multiplication table instead (unit on the first line)
    #[arg(long, conflicts_with = "family")]
    table: Option<std::path::PathBuf>,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the diagrams of a family
    Enumerate(FamilyArgs),
    /// Green's cells, bottom (units) first
    Cells(MonoidArgs),
    /// Simple and semisimple dimensions for all n up to --n
    Dims {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
    },
    /// Semisimple dimensions for each width at --n
    Ssdims(FamilyArgs),
    /// Gram matrix of the width-k cell and its rank
    Gram {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        k: usize,
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
    },
    /// Exact representation gap, optionally of a truncation
    Gap {
        #[command(flatten)]
        fam: FamilyArgs,
        /// keep widths up to k
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
    },
    /// Closed-form lower bounds and ratios to the square root of the size
    Bounds {
        #[command(flatten)]
        fam: FamilyArgs,
        /// truncation width: k ≤ 2√n, or 2√n ≤ k ≤ n−√n for n ≥ 8
        #[arg(long)]
        k: usize,
    },
    /// Gap and faithfulness of a cyclic group
    Cyclic {
        #[arg(long)]
        n: u64,
        /// field size, 0 for the rationals
        #[arg(long, default_value_t = 0)]
        q: u64,
    },
    /// Roundedness predicates
    Rounded(MonoidArgs),
    /// Dimension of additive characters
    H1 {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
    },
    /// Extensions between the trivial representations
    Ext {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long = "char", default_value_t = 0)]
        p: u64,
        /// tt, bt, tb or bb; all four when omitted
        #[arg(long)]
        case: Option<String>,
    },
    /// Index, period and containing H-cell of elements
    Period {
        #[command(flatten)]
        m: MonoidArgs,
        /// element labels; all elements when omitted
        #[arg(long)]
        element: Vec<String>,
    },
    /// Cell subquotient: widths up to --low plus a unit, widths below --high collapsed
    Truncate {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        low: Option<usize>,
        #[arg(long)]
        high: Option<usize>,
    },
    /// Run a key exchange and print the transcript
    Protocol {
        #[arg(value_enum)]
        kind: Exchange,
        #[command(flatten)]
        fam: FamilyArgs,
        /// draw public elements from widths up to k
        #[arg(long)]
        truncate_low: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// length of the private words (su)
        #[arg(long, default_value_t = 8)]
        word_len: usize,
        /// Alice's generator indices, e.g. 1,2 (su)
        #[arg(long, value_delimiter = ',')]
        alice: Vec<usize>,
        /// Bob's generator indices (su)
        #[arg(long, value_delimiter = ',')]
        bob: Vec<usize>,
        /// largest private exponent (stickel)
        #[arg(long, default_value_t = 1 << 16)]
        max_exp: u64,
    },
    /// Run the acceptance suite
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Exchange {
    Su,
    Stickel,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = Result<T, Failure>;

fn family(name: &str) -> Res<Family> {
    Family::parse(name).ok_or_else(|| Failure::Usage(format!("unknown family {name:?}")))
}

fn source(a: &MonoidArgs) -> Res<Source> {
    if let Some(path) = &a.table {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        return Ok(Source::Table(text));
    }
    let name = a.family.as_deref().ok_or_else(|| Failure::Usage("need --family or --table".into()))?;
    let n = a.n.ok_or_else(|| Failure::Usage("need --n".into()))?;
    Ok(match name.to_ascii_lowercase().as_str() {
        "transformation" | "t" => Source::Transformation(n),
        "cyclic" => Source::Cyclic { index: n, period: a.period },
        other => Source::Family(family(other)?, n),
    })
}

/// Exact fraction followed by six significant digits.
fn show_rational(q: &BigRational) -> String {
    if q.is_integer() {
        return q.to_integer().to_string();
    }
    format!("{q} ≈ {}", sig6(q.to_f64().unwrap_or(f64::NAN)))
}

fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    // round first so that 0.9999996 counts as magnitude 0
    let x: f64 = format!("{x:.5e}").parse().expect("formatted float parses");
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        return format!("{x:.5e}");
    }
    format!("{x:.*}", (5 - mag).max(0) as usize)
}

fn show_estimate(e: &Estimate) -> String {
    match &e.value {
        Some(v) => format!("{} [{}; {}]", show_rational(v), e.status, e.source),
        None => format!("? [{}; {}]", e.status, e.source),
    }
}

fn estimate_json(e: &Estimate) -> Value {
    json!({
        "value": e.value.as_ref().map(|v| v.to_string()),
        "decimal": e.value.as_ref().and_then(|v| v.to_f64()).map(sig6),
        "status": e.status.to_string(),
        "source": e.source,
    })
}

fn with_schema(mut v: Value) -> Value {
    v.as_object_mut().expect("reports are objects").insert("schema_version".into(), json!(SCHEMA_VERSION));
    v
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = format!("# schema_version={SCHEMA_VERSION}\n{header}\n");
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

fn json_text(v: Value) -> String {
    serde_json::to_string_pretty(&with_schema(v)).expect("json values serialize") + "\n"
}

fn char_name(p: u64) -> String {
    if p == 0 {
        "0".into()
    } else {
        p.to_string()
    }
}

fn run(cli: &Cli) -> Res<String> {
    let fmt = cli.format;
    Ok(match &cli.cmd {
        Cmd::Enumerate(a) => {
            let f = family(&a.family)?;
            let ds = families::enumerate(f, a.n)?;
            match fmt {
                Format::Text => {
                    let mut s = format!("{}_{} has {} elements\n", f.short_name(), a.n, ds.len());
                    for d in &ds {
                        writeln!(s, "{d}").unwrap();
                    }
                    s
                }
                Format::Csv => csv("index,diagram,width", ds.iter().enumerate().map(|(i, d)| format!("{i},\"{d}\",{}", d.width()))),
                Format::Json => json_text(json!({
                    "family": f.short_name(), "n": a.n, "count": ds.len(),
                    "elements": ds.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                })),
            }
        }
        Cmd::Cells(a) => {
            let src = source(a)?;
            let r = query::cell_report(&src.name(), &src.build()?);
            match fmt {
                Format::Text => {
                    let mut s = format!("{}: {} elements, {} J-cells\n", r.monoid, r.size, r.cells.len());
                    writeln!(s, "{:>4} {:>8} {:>6} {:>6} {:>6} {:>6}  idempotent", "J", "size", "#L", "#R", "|H|", "width").unwrap();
                    for c in &r.cells {
                        let w = c.width.map_or("-".into(), |w| w.to_string());
                        let e = c.idempotent.as_deref().unwrap_or("-");
                        writeln!(s, "{:>4} {:>8} {:>6} {:>6} {:>6} {:>6}  {e}", c.j, c.size, c.l_classes, c.r_classes, c.h_size, w).unwrap();
                    }
                    writeln!(s, "total order: {}; cl = {}; admissible (l, r, J): {}, {}, {}; trivial+faithful possible: {}",
                        r.total_order, r.cl, r.admissible.left, r.admissible.right, r.admissible.two_sided, r.trivial_faithful_possible).unwrap();
                    s
                }
                Format::Csv => csv(
                    "j,size,l_classes,r_classes,h_size,width,idempotent",
                    r.cells.iter().map(|c| {
                        format!("{},{},{},{},{},{},\"{}\"", c.j, c.size, c.l_classes, c.r_classes, c.h_size,
                            c.width.map_or(String::new(), |w| w.to_string()), c.idempotent.as_deref().unwrap_or(""))
                    }),
                ),
                Format::Json => json_text(serde_json::to_value(&r).expect("serializable")),
            }
        }
        Cmd::Dims { fam, p } => {
            let f = family(&fam.family)?;
            let rows = query::dims_table(f, fam.n, *p)?;
            match fmt {
                Format::Text => {
                    let mut s = format!("simple dimensions of {} in characteristic {}, k = n mod 2, n mod 2 + 2, ...\n", f.short_name(), char_name(*p));
                    for n in 0..=fam.n {
                        let dims: Vec<&str> = rows.iter().filter(|r| r.n == n).map(|r| r.dim.as_str()).collect();
                        writeln!(s, "{n:>3} | {}", dims.join(" ")).unwrap();
                    }
                    s
                }
                Format::Csv => csv(
                    "family,n,k,char,dim,ssdim,source",
                    rows.iter().map(|r| format!("{},{},{},{},{},{},{}", f.short_name(), r.n, r.k, p, r.dim, r.ssdim, r.source)),
                ),
                Format::Json => json_text(json!({
                    "family": f.short_name(), "char": p, "rows": serde_json::to_value(&rows).expect("serializable"),
                })),
            }
        }
        Cmd::Ssdims(a) => {
            let f = family(&a.family)?;
            let row = query::ssdim_row(f, a.n)?;
            match fmt {
                Format::Text => {
                    let vals: Vec<String> = row.iter().map(|(_, d)| d.to_string()).collect();
                    format!("ssdims of {}_{} (k = {}): {}\n", f.short_name(), a.n,
                        row.iter().map(|(k, _)| k.to_string()).collect::<Vec<_>>().join(","), vals.join(" "))
                }
                Format::Csv => csv("family,n,k,ssdim", row.iter().map(|(k, d)| format!("{},{},{k},{d}", f.short_name(), a.n))),
                Format::Json => json_text(json!({
                    "family": f.short_name(), "n": a.n,
                    "ssdims": row.iter().map(|(k, d)| json!({"k": k, "ssdim": d.to_string()})).collect::<Vec<_>>(),
                })),
            }
        }
        Cmd::Gram { fam, k, p } => {
            let f = family(&fam.family)?;
            let r = query::gram_report(f, fam.n, *k, *p)?;
            match fmt {
                Format::Text => {
                    let mut s = format!("Gram matrix of {}_{} at width {} ({}x{}), rank {} over {}\n",
                        f.short_name(), r.n, r.k, r.rows.len(), r.rows.first().map_or(0, Vec::len), r.rank, r.field);
                    for row in &r.rows {
                        let line: String = row.iter().map(|&x| if x == 0 { '.' } else { '1' }).collect();
                        writeln!(s, "{line}").unwrap();
                    }
                    s
                }
                Format::Csv => csv("row,entries", r.rows.iter().enumerate().map(|(i, row)| {
                    format!("{i},{}", row.iter().map(|x| x.to_string()).collect::<String>())
                })),
                Format::Json => json_text(serde_json::to_value(&r).expect("serializable")),
            }
        }
        Cmd::Gap { fam, k, p } => {
            let f = family(&fam.family)?;
            let k = k.unwrap_or(fam.n);
            let e = query::gap_exact(f, fam.n, k, *p)?;
            let name = if k < fam.n { format!("{}_{},>={k}", f.short_name(), fam.n) } else { format!("{}_{}", f.short_name(), fam.n) };
            match fmt {
                Format::Text => format!("gap of {name} in characteristic {}: {}\n", char_name(*p), show_estimate(&e)),
                Format::Csv => csv("monoid,char,gap,status,source", [format!(
                    "{name},{p},{},{},\"{}\"", e.value.as_ref().map_or(String::new(), |v| v.to_string()), e.status, e.source)]),
                Format::Json => json_text(json!({"monoid": name, "char": p, "gap": estimate_json(&e)})),
            }
        }
        Cmd::Bounds { fam, k } => {
            let f = family(&fam.family)?;
            let r = rep::gap_bounds(f, fam.n, *k)?;
            bounds_output(fmt, &r)
        }
        Cmd::Cyclic { n, q } => {
            let gap = rep::cyclic_gap(*n, *q)?;
            let faith = if *q == 0 { Some(rep::cyclic_faith(*n)?) } else { None };
            let field = if *q == 0 { "Q".to_string() } else { format!("F_{q}") };
            match fmt {
                Format::Text => {
                    let mut s = format!("Z/{n} over {field}: gap {gap}");
                    if let Some(fa) = faith {
                        write!(s, ", faithfulness {fa}").unwrap();
                    }
                    s + "\n"
                }
                Format::Csv => csv("n,q,gap,faith", [format!("{n},{q},{gap},{}", faith.map_or(String::new(), |v| v.to_string()))]),
                Format::Json => json_text(json!({"n": n, "q": q, "gap": gap, "faith": faith})),
            }
        }
        Cmd::Rounded(a) => {
            let src = source(a)?;
            let r = monoid::roundedness(&src.build()?);
            match fmt {
                Format::Text => format!(
                    "{}: left {}, right {}, null {}, well {}; ≈_l classes {}, ≈_r classes {}\n",
                    src.name(), r.left, r.right, r.null, r.well, r.left_classes, r.right_classes
                ),
                Format::Csv => csv("monoid,left,right,null,well,left_classes,right_classes", [format!(
                    "{},{},{},{},{},{},{}", src.name(), r.left, r.right, r.null, r.well, r.left_classes, r.right_classes)]),
                Format::Json => json_text(json!({"monoid": src.name(), "roundedness": serde_json::to_value(&r).expect("serializable")})),
            }
        }
        Cmd::H1 { m, p } | Cmd::Ext { m, p, .. } => {
            let src = source(m)?;
            let cases: Vec<ExtCase> = match &cli.cmd {
                Cmd::Ext { case: Some(c), .. } => {
                    vec![ExtCase::parse(c).ok_or_else(|| Failure::Usage(format!("unknown case {c:?}")))?]
                }
                Cmd::Ext { .. } => ExtCase::ALL.to_vec(),
                _ => Vec::new(),
            };
            let r = query::ext_report(&src.name(), &src.build()?, *p, &cases)?;
            match fmt {
                Format::Text => {
                    let mut s = format!("{} over {}: additive characters {}\n", r.monoid, r.field, r.additive_hom_dim);
                    for (c, d) in &r.ext {
                        writeln!(s, "ext {c}: {d}").unwrap();
                    }
                    s
                }
                Format::Csv => {
                    let mut rows = vec![format!("{},{},h1,{}", r.monoid, r.field, r.additive_hom_dim)];
                    rows.extend(r.ext.iter().map(|(c, d)| format!("{},{},{c},{d}", r.monoid, r.field)));
                    csv("monoid,field,quantity,dim", rows)
                }
                Format::Json => json_text(serde_json::to_value(&r).expect("serializable")),
            }
        }
        Cmd::Period { m, element } => {
            let src = source(m)?;
            let rs = query::periods(&src.build()?, element)?;
            match fmt {
                Format::Text => {
                    let mut s = String::new();
                    for r in &rs {
                        writeln!(s, "{}: index {}, period {}, H-cell order {}, largest prime of period {}",
                            r.element, r.index, r.period, r.h_order, r.largest_prime_of_period.map_or("-".into(), |p| p.to_string())).unwrap();
                    }
                    s
                }
                Format::Csv => csv("element,index,period,largest_prime,h_order,divides", rs.iter().map(|r| {
                    format!("\"{}\",{},{},{},{},{}", r.element, r.index, r.period,
                        r.largest_prime_of_period.map_or(String::new(), |p| p.to_string()), r.h_order, r.divides)
                })),
                Format::Json => json_text(json!({"monoid": src.name(), "elements": serde_json::to_value(&rs).expect("serializable")})),
            }
        }
        Cmd::Truncate { fam, low, high } => {
            let f = family(&fam.family)?;
            let (_, _, t) = query::truncate_widths(f, fam.n, *low, *high)?;
            let name = format!("{}_{} truncated", f.short_name(), fam.n);
            let r = query::cell_report(&name, &t.monoid);
            match fmt {
                Format::Text => {
                    let sizes: Vec<String> = r.cells.iter().map(|c| c.size.to_string()).collect();
                    format!("{name}: {} elements, J-cell sizes {} (fresh unit {}, zero {})\n",
                        r.size, sizes.join(" + "), t.fresh_unit.is_some(), t.zero.is_some())
                }
                Format::Csv => csv("j,size,l_classes,r_classes,h_size", r.cells.iter().map(|c| {
                    format!("{},{},{},{},{}", c.j, c.size, c.l_classes, c.r_classes, c.h_size)
                })),
                Format::Json => json_text(json!({
                    "fresh_unit": t.fresh_unit.is_some(), "zero": t.zero.is_some(),
                    "cells": serde_json::to_value(&r).expect("serializable"),
                })),
            }
        }
        Cmd::Protocol { kind, fam, truncate_low, seed, word_len, alice, bob, max_exp } => {
            let f = family(&fam.family)?;
            let t = match kind {
                Exchange::Su => {
                    let split = match (alice.is_empty(), bob.is_empty()) {
                        (true, true) => None,
                        (false, false) => Some((alice.clone(), bob.clone())),
                        _ => return Err(Failure::Usage("give both --alice and --bob or neither".into())),
                    };
                    query::su_exchange(f, fam.n, *truncate_low, split, *word_len, *seed)?
                }
                Exchange::Stickel => query::stickel_exchange(f, fam.n, *truncate_low, *max_exp, *seed)?,
            };
            match fmt {
                Format::Text => format!(
                    "{} on {} (seed {})\npublic: {}\nAlice sends: {}\nBob sends: {}\nAlice's secret: {}\nBob's secret: {}\nequal: {}\n",
                    t.protocol, t.monoid, t.seed, t.public.join(", "), t.messages[0], t.messages[1], t.secret_alice, t.secret_bob, t.equal
                ),
                Format::Csv => csv("protocol,monoid,seed,equal,secret", [format!(
                    "{},{},{},{},\"{}\"", t.protocol, t.monoid, t.seed, t.equal, t.secret_alice)]),
                Format::Json => json_text(serde_json::to_value(&t).expect("serializable")),
            }
        }
        Cmd::Selftest => {
            let outcomes = acceptance::run_all();
            let unexpected = outcomes.iter().any(|o| o.unexpected());
            let text = match fmt {
                Format::Json => json_text(json!({"criteria": outcomes.iter().map(|o| json!({
                    "id": o.id, "name": o.name, "passed": o.passed,
                    "known_failure": !o.passed && !o.unexpected(),
                    "seconds": o.elapsed.as_secs_f64(), "budget_seconds": o.budget.as_secs(), "detail": o.detail,
                })).collect::<Vec<_>>()})),
                Format::Csv => csv("id,name,passed,seconds,budget_seconds", outcomes.iter().map(|o| {
                    format!("{},{},{},{:.2},{}", o.id, o.name, o.passed, o.elapsed.as_secs_f64(), o.budget.as_secs())
                })),
                Format::Text => {
                    let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
                    let passed = outcomes.iter().filter(|o| o.passed).count();
                    writeln!(s, "{passed}/{} passed", outcomes.len()).unwrap();
                    s
                }
            };
            print!("{text}");
            if unexpected {
                return Err(Failure::Selftest);
            }
            String::new()
        }
    })
}

fn bounds_output(fmt: Format, r: &GapReport) -> String {
    let ratios = r.ratios();
    let sqrt = format!("sqrt({})", r.size);
    let ratio_text = |e: &Estimate, d: Option<f64>| match (&e.value, d) {
        (Some(v), Some(d)) if v.is_integer() => format!("{v}/{sqrt} ≈ {}", sig6(d)),
        (Some(v), Some(d)) => format!("({v})/{sqrt} ≈ {}", sig6(d)),
        _ => "?".into(),
    };
    match fmt {
        Format::Text => {
            let mut s = format!("{} ({}), size {}\n", r.monoid, r.field, r.size);
            writeln!(s, "gap   ≥ {}", show_estimate(&r.gap)).unwrap();
            writeln!(s, "ssgap ≥ {}", show_estimate(&r.ssgap)).unwrap();
            writeln!(s, "faith ≥ {}", show_estimate(&r.faith)).unwrap();
            for (what, e) in &r.asymptotic {
                writeln!(s, "{what} ≈ {} (large n)", show_estimate(e)).unwrap();
            }
            writeln!(s, "gratio  = {}", ratio_text(&r.gap, ratios.gratio)).unwrap();
            writeln!(s, "fratio  = {}", ratio_text(&r.faith, ratios.fratio)).unwrap();
            writeln!(s, "ssratio = {}", ratio_text(&r.ssgap, ratios.ssratio)).unwrap();
            s
        }
        Format::Csv => csv(
            "monoid,size,quantity,value,decimal,status,ratio",
            [("gap", &r.gap, ratios.gratio), ("ssgap", &r.ssgap, ratios.ssratio), ("faith", &r.faith, ratios.fratio)]
                .into_iter()
                .map(|(q, e, d)| {
                    format!("{},{},{q},{},{},{},{}", r.monoid, r.size,
                        e.value.as_ref().map_or(String::new(), |v| v.to_string()),
                        e.value.as_ref().and_then(|v| v.to_f64()).map_or(String::new(), sig6),
                        e.status, d.map_or(String::new(), sig6))
                }),
        ),
        Format::Json => json_text(json!({
            "monoid": r.monoid, "field": r.field, "size": r.size.to_string(),
            "gap": estimate_json(&r.gap), "ssgap": estimate_json(&r.ssgap), "faith": estimate_json(&r.faith),
            "asymptotic": r.asymptotic.iter().map(|(w, e)| json!({"quantity": w, "estimate": estimate_json(e)})).collect::<Vec<_>>(),
            "ratios": {
                "gratio": ratios.gratio.map(sig6), "fratio": ratios.fratio.map(sig6), "ssratio": ratios.ssratio.map(sig6),
            },
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Selftest) => ExitCode::from(4),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Guard(_)) { 3 } else { 2 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.15625), "0.156250");
        assert_eq!(sig6(2.0 / 3.0), "0.666667");
        assert_eq!(sig6(112633.5), "112634");
        assert_eq!(sig6(1234567.0), "1.23457e6");
        assert_eq!(sig6(0.99999996), "1.00000");
    }

    #[test]
    fn fractions_keep_exact_part() {
        let q = BigRational::new(BigInt::from(676039), BigInt::from(6));
        assert_eq!(show_rational(&q), "676039/6 ≈ 112673");
    }
}
