use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use moonshine_core::exactla::{rref_with, Elimination, RrefOptions};
use moonshine_core::fieldgen::{
    extend_generators, kappa_bound, run_generator_search, run_level, SearchOptions, T0Policy,
};
use moonshine_core::forms::{
    eisenstein_plus, eta_core, eta_product_delta, level_context_with_genus, LevelContext, GENUS_TABLE,
};
use moonshine_core::qseries::RationalSeries;
use moonshine_core::relations::{relation_for_generators, relation_precision};
use moonshine_core::span::{SpanBuilder, SpanCache};
use moonshine_core::{par, spectral, Error, Result};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "moonshine", version, about = "Modular function fields of the groups Γ0(N)+")]
struct Cli {
    /// Directory for cached span expansions.
    #[arg(long, env = "MOONSHINE_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the artifact here instead of standard output.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Levels {
    /// Square-free level N.
    #[arg(long, conflicts_with = "all_genus")]
    level: Option<u64>,
    /// Run every tabulated level of this genus.
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=3))]
    all_genus: Option<u32>,
    /// Genus for levels outside the built-in table.
    #[arg(long)]
    genus: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct Search {
    #[arg(long, default_value_t = 12)]
    max_iter: u32,
    #[arg(long, value_enum, default_value_t = T0Arg::Compact)]
    t0: T0Arg,
    #[arg(long, value_enum, default_value_t = ElimArg::Multimodular)]
    elimination: ElimArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum T0Arg {
    Compact,
    SpanSize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ElimArg {
    Multimodular,
    Primitive,
    FractionFree,
}

impl From<ElimArg> for Elimination {
    fn from(e: ElimArg) -> Self {
        match e {
            ElimArg::Multimodular => Elimination::Multimodular,
            ElimArg::Primitive => Elimination::Primitive,
            ElimArg::FractionFree => Elimination::FractionFree,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesKind {
    Eta,
    Eisenstein,
    Delta,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Level constants: ℓ_N, k_N, genus, κ and volume.
    Tables(Levels),
    /// q-expansion of an eta product, Eisenstein series or Δ_N.
    Series {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long, value_enum)]
        kind: SeriesKind,
        /// Eisenstein weight.
        #[arg(long, default_value_t = 4)]
        weight: u32,
        /// Last exponent computed.
        #[arg(long, default_value_t = 20)]
        trunc: i64,
    },
    /// Generators of the function field, extended through q^κ.
    Gens {
        #[command(flatten)]
        levels: Levels,
        #[command(flatten)]
        search: Search,
    },
    /// Polynomial relation between the generators.
    Relation {
        #[command(flatten)]
        levels: Levels,
        #[command(flatten)]
        search: Search,
    },
    /// Integrality bound κ with its audit trail.
    Kappa {
        #[command(flatten)]
        levels: Levels,
        #[arg(long, requires = "a2")]
        a1: Option<u64>,
        #[arg(long, requires = "a1")]
        a2: Option<u64>,
        /// Include every (m, gcd1, gcd2) row.
        #[arg(long)]
        trace: bool,
    },
    /// Check that the generators are integral through q^κ.
    Verify {
        #[command(flatten)]
        levels: Levels,
        #[command(flatten)]
        search: Search,
    },
    /// CSV of the Fourier coefficients φ_N(m, s).
    Spectral {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        genus: Option<u32>,
        /// Coefficient indices, e.g. `1..10` or `1,2,5`.
        #[arg(long, default_value = "1..10")]
        m: String,
        /// Points `re` or `re,im`; repeatable.
        #[arg(long = "s", default_values_t = vec!["2".to_string()])]
        s: Vec<String>,
    },
    /// Numeric check of the Kronecker limit formula.
    KroneckerCheck {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        genus: Option<u32>,
        /// Point `re,im` in the upper half plane.
        #[arg(long, default_value = "0,1")]
        z: String,
        #[arg(long, default_value_t = 60)]
        terms: u64,
    },
    /// Time the elimination strategies on one span.
    BenchRref {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        genus: Option<u32>,
        /// Span index M.
        #[arg(long)]
        m: u32,
    },
}

fn contexts(l: &Levels) -> Result<Vec<LevelContext>> {
    match (l.level, l.all_genus) {
        (Some(n), _) => Ok(vec![level_context_with_genus(n, l.genus)?]),
        (None, Some(g)) => GENUS_TABLE[g as usize]
            .iter()
            .map(|&n| level_context_with_genus(n, None))
            .collect(),
        (None, None) => Err(Error::Parse("supply --level or --all-genus".into())),
    }
}

fn search_options(s: &Search, cache: &Option<SpanCache>) -> SearchOptions {
    SearchOptions {
        max_iter: s.max_iter,
        t0: match s.t0 {
            T0Arg::Compact => T0Policy::Compact,
            T0Arg::SpanSize => T0Policy::SpanSize,
        },
        elimination: s.elimination.into(),
        cache: cache.clone(),
    }
}

fn series_json(f: &RationalSeries) -> Value {
    json!({ "series": f, "text": f.display_terms(16) })
}

/// `(a1, a2)` when the genus alone determines them.
fn default_poles(ctx: &LevelContext) -> Option<(u64, u64)> {
    match ctx.genus {
        0 => Some((1, 1)),
        1 => Some((2, 3)),
        _ => None,
    }
}

fn volume_text(ctx: &LevelContext) -> String {
    format!("π·{}/{}", ctx.sigma_n, 3u64 << ctx.r)
}

fn tables_entry(ctx: &LevelContext) -> Value {
    let kappa = default_poles(ctx).map(|(a1, a2)| kappa_bound(ctx, a1, a2).kappa);
    json!({
        "level": ctx.n,
        "genus": ctx.genus,
        "r": ctx.r,
        "sigma": ctx.sigma_n,
        "ell": ctx.ell_n,
        "k": ctx.k_n,
        "d": ctx.d_n,
        "kappa": kappa,
        "volume": ctx.volume,
        "volume_text": volume_text(ctx),
    })
}

fn kappa_entry(ctx: &LevelContext, poles: Option<(u64, u64)>, trace: bool) -> Result<Value> {
    let (a1, a2) = poles
        .or_else(|| default_poles(ctx))
        .ok_or_else(|| Error::Domain(format!("level {} has genus {}; supply --a1 and --a2", ctx.n, ctx.genus)))?;
    if a1 == 0 || a1 > a2 {
        return Err(Error::Domain("need 1 <= a1 <= a2".into()));
    }
    Ok(kappa_bound(ctx, a1, a2).to_json(trace))
}

fn gens_entry(ctx: &LevelContext, opts: &SearchOptions) -> Result<Value> {
    let run = run_level(ctx, opts, 0)?;
    let s = &run.search;
    let gp = &run.extended;
    let mut v = json!({
        "level": ctx.n,
        "genus": ctx.genus,
        "a1": gp.a1,
        "a2": gp.a2,
        "gaps": s.gaps,
        "weierstrass": s.weierstrass,
        "kappa": run.certificate.kappa,
        "x": series_json(&gp.x),
        "y": series_json(&gp.y),
        "certificate": run.certificate.to_json(false),
        "integrality": run.integrality.to_json(),
        "basis_ref": gp.basis_ref.to_json(),
        "search": {
            "iterations": s.m,
            "span_size": s.span_ids.len(),
            "rank": s.basis.rank(),
            "t0": s.t0,
        },
    });
    if let Some((bv, bw)) = &run.integrality.base_change {
        v["base_change"] = json!({ "v": series_json(bv), "w": series_json(bw) });
    }
    Ok(v)
}

fn relation_entry(ctx: &LevelContext, opts: &SearchOptions) -> Result<Value> {
    let res = run_generator_search(ctx, opts)?;
    let gp = &res.generators;
    let t = relation_precision(gp.a1, gp.a2);
    let ext = extend_generators(ctx, gp, t, opts.cache.as_ref())?;
    let rel = relation_for_generators(&ext)?;
    let mut v = rel.to_json();
    v["level"] = json!(ctx.n);
    v["genus"] = json!(ctx.genus);
    Ok(v)
}

fn verify_entry(ctx: &LevelContext, opts: &SearchOptions) -> Result<Value> {
    let run = run_level(ctx, opts, 0)?;
    let mut v = run.integrality.to_json();
    v["level"] = json!(ctx.n);
    v["kappa"] = json!(run.certificate.kappa);
    v["a1"] = json!(run.extended.a1);
    v["a2"] = json!(run.extended.a2);
    Ok(v)
}

/// One entry for `--level`, an ordered list with per-level errors otherwise.
fn per_level(levels: &Levels, f: impl Fn(&LevelContext) -> Result<Value>) -> Result<Value> {
    let ctxs = contexts(levels)?;
    if levels.level.is_some() {
        let mut v = f(&ctxs[0])?;
        v["schema"] = json!(SCHEMA);
        return Ok(v);
    }
    let results: Vec<Value> = ctxs
        .iter()
        .map(|c| f(c).unwrap_or_else(|e| json!({ "level": c.n, "error": e.to_string() })))
        .collect();
    Ok(json!({ "schema": SCHEMA, "genus": levels.all_genus, "results": results }))
}

fn parse_ms(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Parse(format!("bad --m value {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("bad complex number {s:?}; use re or re,im"));
    let mut it = s.split(',').map(|t| t.trim().parse::<f64>());
    let re = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match it.next() {
        Some(v) => v.map_err(|_| bad())?,
        None => 0.0,
    };
    if it.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

enum Output {
    Json(Value),
    Text(String),
}

fn run(cli: &Cli) -> Result<Output> {
    let cache = cli.cache_dir.as_ref().map(SpanCache::new);
    let out = match &cli.command {
        Command::Tables(levels) => Output::Json(per_level(levels, |c| Ok(tables_entry(c)))?),
        Command::Kappa { levels, a1, a2, trace } => {
            let poles = a1.zip(*a2);
            Output::Json(per_level(levels, |c| kappa_entry(c, poles, *trace))?)
        }
        Command::Gens { levels, search } => {
            let opts = search_options(search, &cache);
            Output::Json(per_level(levels, |c| gens_entry(c, &opts))?)
        }
        Command::Relation { levels, search } => {
            let opts = search_options(search, &cache);
            Output::Json(per_level(levels, |c| relation_entry(c, &opts))?)
        }
        Command::Verify { levels, search } => {
            let opts = search_options(search, &cache);
            Output::Json(per_level(levels, |c| verify_entry(c, &opts))?)
        }
        Command::Series {
            level,
            genus,
            kind,
            weight,
            trunc,
        } => {
            let ctx = level_context_with_genus(*level, *genus)?;
            let (name, f, shift) = match kind {
                SeriesKind::Delta => ("delta", eta_product_delta(&ctx, (*trunc).max(ctx.d_n as i64)), None),
                SeriesKind::Eisenstein => ("eisenstein", eisenstein_plus(&ctx, *weight, *trunc)?, None),
                SeriesKind::Eta => {
                    let len = (*trunc).max(0) as usize + 1;
                    let core = eta_core(&ctx, len);
                    (
                        "eta",
                        RationalSeries::from_bigints(0, len as i64 - 1, core),
                        Some(format!("{}/24", ctx.sigma_n)),
                    )
                }
            };
            let mut v = json!({ "schema": SCHEMA, "level": ctx.n, "kind": name, "expansion": series_json(&f) });
            if matches!(kind, SeriesKind::Eisenstein) {
                v["weight"] = json!(weight);
            }
            if let Some(s) = shift {
                // ∏_{v|N} η(vz) is q^{σ(N)/24} times the expansion above.
                v["q_shift"] = json!(s);
            }
            Output::Json(v)
        }
        Command::Spectral { level, genus, m, s } => {
            let ctx = level_context_with_genus(*level, *genus)?;
            let ms = parse_ms(m)?;
            let ss: Vec<Complex64> = s.iter().map(|t| parse_complex(t)).collect::<Result<_>>()?;
            Output::Text(spectral::phi_csv(&ctx, &ms, &ss)?)
        }
        Command::KroneckerCheck { level, genus, z, terms } => {
            let ctx = level_context_with_genus(*level, *genus)?;
            let z = parse_complex(z)?;
            let r = spectral::kronecker_limit_check(&ctx, z, *terms)?;
            Output::Json(json!({
                "schema": SCHEMA,
                "level": ctx.n,
                "z": [z.re, z.im],
                "terms": terms,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "diff": r.diff,
            }))
        }
        Command::BenchRref { level, genus, m } => {
            let ctx = level_context_with_genus(*level, *genus)?;
            let t0 = 2 * ctx.genus as i64 + 2;
            let mut b = SpanBuilder::new(&ctx, t0, cache.as_ref());
            let mut rows = Vec::new();
            for k in 0..=*m {
                rows.extend(b.level_functions(k)?.into_iter().map(|f| f.series));
            }
            let lo = -(*m as i64 * ctx.d_n as i64);
            let mut timings = Vec::new();
            let mut bases = Vec::new();
            for e in [
                Elimination::Multimodular,
                Elimination::Primitive,
                Elimination::FractionFree,
            ] {
                let start = Instant::now();
                let basis = rref_with(
                    &rows,
                    lo,
                    t0,
                    RrefOptions {
                        elimination: e,
                        skip_prepass: false,
                    },
                )?;
                timings.push(json!({ "elimination": format!("{e:?}"), "seconds": start.elapsed().as_secs_f64() }));
                bases.push(basis);
            }
            if bases.iter().any(|b| b.rows != bases[0].rows) {
                return Err(Error::Exactness("elimination strategies disagree".into()));
            }
            Output::Json(json!({
                "schema": SCHEMA,
                "level": ctx.n,
                "m": m,
                "span_size": rows.len(),
                "rank": bases[0].rank(),
                "timings": timings,
            }))
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(t) => par::with_workers(t, || run(&cli)),
        None => run(&cli),
    };
    let text = match result {
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Ok(Output::Text(t)) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
