//! Generator search: grow the span until the reduced basis shows the
//! expected gap structure, pick the generators, bound the number of
//! coefficients that must be checked for integrality, and check them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{pivots_mod_p, rref_with, EchelonBasis, Elimination, RrefOptions, ScaledVec};
use crate::forms::LevelContext;
use crate::ntheory::{fmt_rational, gcd};
use crate::qseries::RationalSeries;
use crate::span::{SpanBuilder, SpanCache, SpanFunction};

/// How many columns beyond `q^0` the first elimination uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum T0Policy {
    /// `2g + 2`. Any window reaching `q^0` already separates the span, since
    /// a combination vanishing on `[-Md, 0]` is identically zero.
    #[default]
    Compact,
    /// `max(0, |S| - M·d_N + 2g + 2)`, enough columns to hold every row.
    SpanSize,
    Fixed(i64),
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub max_iter: u32,
    pub t0: T0Policy,
    pub elimination: Elimination,
    pub cache: Option<SpanCache>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_iter: 12,
            t0: T0Policy::Compact,
            elimination: Elimination::Multimodular,
            cache: None,
        }
    }
}

/// Exact linear combinations of span functions giving `x` and `y`, each
/// as integer coefficients over one denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisRef {
    pub ids: Vec<String>,
    pub x: ScaledVec,
    pub y: ScaledVec,
}

fn scaled_to_json(v: &ScaledVec) -> Value {
    json!({
        "den": v.den.to_string(),
        "num": v.num.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn scaled_from_json(v: Option<&Value>) -> Result<ScaledVec> {
    let bad = || Error::Parse("malformed basis reference".into());
    let v = v.ok_or_else(bad)?;
    let int = |x: &Value| -> Result<BigInt> { x.as_str().and_then(|s| s.parse().ok()).ok_or_else(bad) };
    let den = int(v.get("den").ok_or_else(bad)?)?;
    if den <= BigInt::zero() {
        return Err(bad());
    }
    let num = v
        .get("num")
        .and_then(Value::as_array)
        .ok_or_else(bad)?
        .iter()
        .map(int)
        .collect::<Result<_>>()?;
    Ok(ScaledVec::new(num, den))
}

impl BasisRef {
    pub fn to_json(&self) -> Value {
        json!({ "ids": self.ids, "x": scaled_to_json(&self.x), "y": scaled_to_json(&self.y) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("malformed basis reference".into());
        let ids = v
            .get("ids")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        let x = scaled_from_json(v.get("x"))?;
        let y = scaled_from_json(v.get("y"))?;
        if x.len() != ids.len() || y.len() != ids.len() {
            return Err(bad());
        }
        Ok(BasisRef { ids, x, y })
    }
}

/// The two function-field generators. For genus zero both are the
/// Hauptmodul and `a1 = a2 = 1`.
#[derive(Clone, Debug)]
pub struct GeneratorPair {
    pub level: u64,
    pub a1: u64,
    pub a2: u64,
    pub x: RationalSeries,
    pub y: RationalSeries,
    pub basis_ref: BasisRef,
}

impl GeneratorPair {
    pub fn is_hauptmodul(&self) -> bool {
        self.a1 == 1 && self.a2 == 1
    }
}

#[derive(Clone, Debug)]
pub struct IterationSummary {
    pub m: u32,
    pub span_size: usize,
    pub rank: usize,
    /// Whether the exact elimination ran; otherwise only the modular pivots.
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub ctx: LevelContext,
    pub m: u32,
    pub t0: i64,
    pub span_ids: Vec<String>,
    pub basis: EchelonBasis,
    pub iterations: Vec<IterationSummary>,
    pub gaps: Vec<u64>,
    pub weierstrass: bool,
    pub generators: GeneratorPair,
}

/// Gaps in `{1..2g}` and whether they differ from `{1..g}`.
pub fn gap_sequence(basis: &EchelonBasis, g: u32) -> (Vec<u64>, bool) {
    gaps_from_poles(&basis.pole_orders(), g)
}

pub fn gaps_from_poles(poles: &[u64], g: u32) -> (Vec<u64>, bool) {
    let g = g as u64;
    let gaps: Vec<u64> = (1..=2 * g).filter(|k| !poles.contains(k)).collect();
    let weierstrass = gaps != (1..=g).collect::<Vec<_>>();
    (gaps, weierstrass)
}

/// `Some((a1, a2))` once the attained pole orders satisfy the stopping rule.
pub fn stopping_poles(poles: &[u64], g: u32) -> Option<(u64, u64)> {
    if g == 0 {
        return poles.contains(&1).then_some((1, 1));
    }
    let (gaps, _) = gaps_from_poles(poles, g);
    if gaps.len() != g as usize {
        return None;
    }
    let mut nongaps = (1u64..).filter(|k| !gaps.contains(k));
    let a1 = nongaps.next().expect("infinite");
    let a2 = nongaps.next().expect("infinite");
    (poles.contains(&a1) && poles.contains(&a2)).then_some((a1, a2))
}

/// Merge the `x` and `y` transform rows over the ids either one uses.
fn basis_ref(basis: &EchelonBasis, xr: usize, yr: usize, ids: &[String]) -> BasisRef {
    let t = &basis.transform;
    let (xs, ys) = (&t.rows[xr], &t.rows[yr]);
    let used: Vec<usize> = (0..t.sources.len())
        .filter(|&s| !xs.num[s].is_zero() || !ys.num[s].is_zero())
        .collect();
    let pick = |v: &ScaledVec| ScaledVec {
        num: used.iter().map(|&s| v.num[s].clone()).collect(),
        den: v.den.clone(),
    };
    BasisRef {
        ids: used.iter().map(|&s| ids[t.sources[s]].clone()).collect(),
        x: pick(xs),
        y: pick(ys),
    }
}

/// `Σ_s num_s·f_s / den` for rational series known through a common
/// truncation.
fn combine_scaled(v: &ScaledVec, funcs: &[&RationalSeries]) -> RationalSeries {
    let trunc = funcs.iter().map(|f| f.trunc()).min().unwrap_or(0);
    let terms: Vec<(&BigInt, &RationalSeries)> = v
        .num
        .iter()
        .zip(funcs.iter().copied())
        .filter(|(c, _)| !c.is_zero())
        .collect();
    let lo = terms.iter().map(|(_, f)| f.min_exp()).min().unwrap_or(trunc + 1);
    if lo > trunc {
        return RationalSeries::zero(trunc);
    }
    let parts: Vec<(&BigInt, Vec<BigInt>, BigInt)> = terms
        .iter()
        .map(|(c, f)| {
            let w = f.window(lo, trunc);
            let den = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let num = w.iter().map(|x| x.numer() * (&den / x.denom())).collect();
            (*c, num, den)
        })
        .collect();
    let d = parts.iter().fold(BigInt::one(), |acc, (_, _, den)| acc.lcm(den));
    let total = &v.den * &d;
    let coeffs = (0..(trunc - lo + 1) as usize)
        .map(|i| {
            let mut acc = BigInt::zero();
            for (c, num, den) in &parts {
                if !num[i].is_zero() {
                    acc += *c * &num[i] * (&d / den);
                }
            }
            // Generators have integral expansions, so try exact division
            // before a full gcd.
            let (q, rem) = acc.div_rem(&total);
            if rem.is_zero() {
                BigRational::from_integer(q)
            } else {
                BigRational::new(acc, total.clone())
            }
        })
        .collect();
    RationalSeries::new(lo, trunc, coeffs).normalized()
}

/// Grow `S = S_0 ∪ … ∪ S_M` for `M = 1, 2, …`, reduce, and stop at the
/// first `M` whose attained pole orders meet the gap criterion.
pub fn run_generator_search(ctx: &LevelContext, opts: &SearchOptions) -> Result<SearchResult> {
    let g = ctx.genus;
    let mut iterations = Vec::new();
    let compact_t0 = match opts.t0 {
        T0Policy::Fixed(t) => t.max(0),
        _ => 2 * g as i64 + 2,
    };
    let cache = opts.cache.as_ref();
    let mut builder = SpanBuilder::new(ctx, compact_t0, cache);
    let mut span: Vec<SpanFunction> = builder.level_functions(0)?;
    for m in 1..=opts.max_iter {
        let lo = -(m as i64 * ctx.d_n as i64);
        let (rows, t0) = match opts.t0 {
            T0Policy::SpanSize => {
                let size: usize = (0..=m)
                    .map(|k| crate::span::partition_count(k as u64 * ctx.k_n) as usize)
                    .sum();
                let t0 = (size as i64 + lo + 2 * g as i64 + 2).max(0);
                let mut b = SpanBuilder::new(ctx, t0, cache);
                let mut s = Vec::new();
                for k in 0..=m {
                    s.extend(b.level_functions(k)?);
                }
                span = s;
                (span.iter().map(|f| f.series.clone()).collect::<Vec<_>>(), t0)
            }
            _ => {
                span.extend(builder.level_functions(m)?);
                (span.iter().map(|f| f.series.clone()).collect(), compact_t0)
            }
        };
        // The modular pivots decide whether this iteration is worth an exact
        // pass; the exact pass has the final word.
        let modular = pivots_mod_p(&rows, lo, t0)?;
        let modular_poles: Vec<u64> = modular.iter().filter(|&&e| e < 0).map(|&e| (-e) as u64).collect();
        if stopping_poles(&modular_poles, g).is_none() {
            iterations.push(IterationSummary {
                m,
                span_size: rows.len(),
                rank: modular.len(),
                exact: false,
            });
            continue;
        }
        let basis = rref_with(
            &rows,
            lo,
            t0,
            RrefOptions {
                elimination: opts.elimination,
                skip_prepass: false,
            },
        )?;
        iterations.push(IterationSummary {
            m,
            span_size: rows.len(),
            rank: basis.rank(),
            exact: true,
        });
        let poles = basis.pole_orders();
        if let Some((a1, a2)) = stopping_poles(&poles, g) {
            let ids: Vec<String> = span.iter().map(|f| f.id.clone()).collect();
            let xr = basis.row_with_pivot(-(a1 as i64)).expect("attained");
            let yr = basis.row_with_pivot(-(a2 as i64)).expect("attained");
            let (gaps, weierstrass) = gap_sequence(&basis, g);
            let generators = GeneratorPair {
                level: ctx.n,
                a1,
                a2,
                x: basis.rows[xr].clone(),
                y: basis.rows[yr].clone(),
                basis_ref: basis_ref(&basis, xr, yr, &ids),
            };
            return Ok(SearchResult {
                ctx: ctx.clone(),
                m,
                t0,
                span_ids: ids,
                basis,
                iterations,
                gaps,
                weierstrass,
                generators,
            });
        }
    }
    Err(Error::SpanInsufficient(opts.max_iter as usize))
}

/// Rebuild the referenced span functions through `q^t` and apply the
/// stored combinations. The result must agree with `prior` where both are
/// known.
pub fn extend_generators(
    ctx: &LevelContext,
    prior: &GeneratorPair,
    t: i64,
    cache: Option<&SpanCache>,
) -> Result<GeneratorPair> {
    let r = &prior.basis_ref;
    let mut builder = SpanBuilder::new(ctx, t.max(0), cache);
    let funcs = builder.functions_by_id(&r.ids)?;
    let series: Vec<&RationalSeries> = funcs.iter().map(|f| &f.series).collect();
    let x = combine_scaled(&r.x, &series);
    let y = combine_scaled(&r.y, &series);
    for (name, old, new) in [("x", &prior.x, &x), ("y", &prior.y, &y)] {
        let top = old.trunc().min(new.trunc());
        let lo = old.min_exp().min(new.min_exp());
        for e in lo..=top {
            if old.get(e) != new.get(e) {
                return Err(Error::Exactness(format!(
                    "extended {name} disagrees with the search result at q^{e}"
                )));
            }
        }
    }
    Ok(GeneratorPair { x, y, ..prior.clone() })
}

/// Audit trail of the κ descent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaCertificate {
    pub level: u64,
    pub a1: u64,
    pub a2: u64,
    pub p1: u64,
    pub p2: u64,
    pub m_init: u64,
    pub kappa: u64,
    /// `(m, gcd R_{m,1}, gcd R_{m,2})` from `m_init` down to `kappa`; an
    /// empty set has gcd 0.
    pub trace: Vec<(u64, u64, u64)>,
}

impl KappaCertificate {
    pub fn to_json(&self, with_trace: bool) -> Value {
        let mut v = json!({
            "level": self.level,
            "a1": self.a1,
            "a2": self.a2,
            "p1": self.p1,
            "p2": self.p2,
            "m_init": self.m_init,
            "kappa": self.kappa,
            "trace_len": self.trace.len(),
        });
        if with_trace {
            v["trace"] = json!(self.trace);
        }
        v
    }
}

fn primes_below(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n.max(2)];
    sieve[0] = false;
    if n > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            let mut j = i * i;
            while j < n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut nt) = (0i128, 1i128);
    let (mut r, mut nr) = (p as i128, (a % p) as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

/// gcd of `R_{m,l}`: all `R·p` with `R = r + jp`, `a(R(p+1) - 1) < m`,
/// where `r ∈ [1, p]` solves `m - (r-1)a ≡ 0 (mod p)`. Stops early once the
/// gcd reaches 1.
fn r_set_gcd(m: u64, a: u64, primes: &[u64]) -> u64 {
    let mut g = 0u64;
    for &p in primes {
        if p >= m {
            break;
        }
        // R = 1 is the smallest candidate, and it needs a·p < m.
        if a * p >= m {
            break;
        }
        let r = (m % p) * inv_mod(a % p, p) % p + 1;
        let mut big_r = r;
        while a * (big_r * (p + 1) - 1) < m {
            g = gcd(g, big_r * p);
            if g == 1 {
                return 1;
            }
            big_r += p;
        }
    }
    g
}

/// Integrality bound κ by the descending search, starting from
/// `⌈a2·p2/(p2-1)·(p1p2)²⌉` with `p1 < p2` the two smallest primes coprime to
/// `a1·a2·N`.
pub fn kappa_bound(ctx: &LevelContext, a1: u64, a2: u64) -> KappaCertificate {
    assert!(a1 >= 1 && a1 <= a2, "need 1 <= a1 <= a2");
    let modulus = a1 * a2 * ctx.n;
    let mut small = (2u64..).filter(|&p| crate::ntheory::is_prime(p) && gcd(p, modulus) == 1);
    let p1 = small.next().expect("infinitely many primes");
    let p2 = small.next().expect("infinitely many primes");
    let num = a2 * p2 * (p1 * p2).pow(2);
    let m_init = num.div_ceil(p2 - 1);
    let primes: Vec<u64> = primes_below(m_init + 1)
        .into_iter()
        .filter(|&p| gcd(p, modulus) == 1)
        .collect();
    let mut trace = Vec::new();
    let mut m = m_init;
    loop {
        let g1 = r_set_gcd(m, a1, &primes);
        let g2 = r_set_gcd(m, a2, &primes);
        trace.push((m, g1, g2));
        if g1 != 1 || g2 != 1 || m == 1 {
            break;
        }
        m -= 1;
    }
    KappaCertificate {
        level: ctx.n,
        a1,
        a2,
        p1,
        p2,
        m_init,
        kappa: m,
        trace,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralityStatus {
    Pass,
    PassAfterBaseChange,
    Fail {
        series: String,
        exponent: i64,
        value: String,
    },
}

impl IntegralityStatus {
    pub fn label(&self) -> &'static str {
        match self {
            IntegralityStatus::Pass => "PASS",
            IntegralityStatus::PassAfterBaseChange => "PASS-after-base-change",
            IntegralityStatus::Fail { .. } => "FAIL",
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntegralityReport {
    pub status: IntegralityStatus,
    pub checked_through: i64,
    /// `(v, w) = (y + x, y - x)` when the base change was needed.
    pub base_change: Option<(RationalSeries, RationalSeries)>,
}

impl IntegralityReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "status": self.status.label(),
            "checked_through": self.checked_through,
        });
        if let IntegralityStatus::Fail {
            series,
            exponent,
            value,
        } = &self.status
        {
            v["first_failure"] = json!({ "series": series, "exponent": exponent, "value": value });
        }
        v
    }
}

fn first_non_integral(name: &str, f: &RationalSeries, top: i64) -> Option<(String, i64, BigRational)> {
    (f.min_exp()..=top.min(f.trunc()))
        .map(|e| (e, f.coeff(e)))
        .find(|(_, c)| !c.denom().is_one())
        .map(|(e, c)| (name.to_string(), e, c))
}

/// Every coefficient through `q^κ` must be an integer. Half-integers trigger
/// the base change `v = y + x`, `w = y - x`, which is then checked instead.
pub fn verify_integrality(gp: &GeneratorPair, cert: &KappaCertificate) -> IntegralityReport {
    let top = cert.kappa as i64;
    let known = gp.x.trunc().min(gp.y.trunc());
    if known < top {
        return IntegralityReport {
            status: IntegralityStatus::Fail {
                series: "x,y".into(),
                exponent: known + 1,
                value: "unknown (expansion too short)".into(),
            },
            checked_through: known,
            base_change: None,
        };
    }
    let scan = |pairs: [(&str, &RationalSeries); 2]| {
        pairs
            .iter()
            .filter_map(|(n, f)| first_non_integral(n, f, top))
            .min_by_key(|(_, e, _)| *e)
    };
    let Some((name, e, c)) = scan([("x", &gp.x), ("y", &gp.y)]) else {
        return IntegralityReport {
            status: IntegralityStatus::Pass,
            checked_through: top,
            base_change: None,
        };
    };
    let two = BigInt::from(2);
    let only_halves = [&gp.x, &gp.y].iter().all(|f| {
        (f.min_exp()..=top).all(|k| {
            let d = f.coeff(k);
            d.denom().is_one() || *d.denom() == two
        })
    });
    if only_halves {
        let v = gp.y.truncate(top).add(&gp.x.truncate(top));
        let w = gp.y.truncate(top).sub(&gp.x.truncate(top));
        let status = match scan([("v", &v), ("w", &w)]) {
            None => IntegralityStatus::PassAfterBaseChange,
            Some((n, k, c)) => IntegralityStatus::Fail {
                series: n,
                exponent: k,
                value: fmt_rational(&c),
            },
        };
        return IntegralityReport {
            status,
            checked_through: top,
            base_change: Some((v, w)),
        };
    }
    IntegralityReport {
        status: IntegralityStatus::Fail {
            series: name,
            exponent: e,
            value: fmt_rational(&c),
        },
        checked_through: top,
        base_change: None,
    }
}

/// Full pipeline for one level: search, κ, extension through `q^κ`, check.
#[derive(Clone, Debug)]
pub struct LevelRun {
    pub search: SearchResult,
    pub certificate: KappaCertificate,
    pub extended: GeneratorPair,
    pub integrality: IntegralityReport,
}

/// The pair the κ bound is computed for: the generators themselves, or the
/// base-changed pair when only that pair is integral (both then have pole
/// order `a2`).
pub fn run_level(ctx: &LevelContext, opts: &SearchOptions, extra: i64) -> Result<LevelRun> {
    let search = run_generator_search(ctx, opts)?;
    let gp = &search.generators;
    let mut cert = kappa_bound(ctx, gp.a1, gp.a2);
    let extended = extend_generators(ctx, gp, cert.kappa as i64 + extra.max(0), opts.cache.as_ref())?;
    let mut integrality = verify_integrality(&extended, &cert);
    if integrality.status == IntegralityStatus::PassAfterBaseChange {
        let bc = kappa_bound(ctx, gp.a2, gp.a2);
        if bc.kappa > cert.kappa {
            let longer = extend_generators(ctx, gp, bc.kappa as i64 + extra.max(0), opts.cache.as_ref())?;
            integrality = verify_integrality(&longer, &bc);
            cert = bc;
            return Ok(LevelRun {
                search,
                certificate: cert,
                extended: longer,
                integrality,
            });
        }
        cert = bc;
    }
    Ok(LevelRun {
        search,
        certificate: cert,
        extended,
        integrality,
    })
}
