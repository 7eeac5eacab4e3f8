//! The candidate sets `S_M` of weight-zero functions
//! `F_b = ∏ E_{m_ν}^{(N)} / Δ_N^M` and their q-expansions.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::forms::{eisenstein_plus, eta_core, power_unit_series, LevelContext};
use crate::par;
use crate::qseries::{convolve, RationalSeries};

#[derive(Clone, Debug)]
pub struct SpanFunction {
    pub level: u64,
    pub m: u32,
    pub partition: Vec<u32>,
    pub series: RationalSeries,
    pub id: String,
}

/// Multisets of even parts `>= 4` summing to `w`, parts descending, listed
/// in descending lexicographic order.
pub fn weight_partitions(w: u64) -> Result<Vec<Vec<u32>>> {
    if w % 2 == 1 {
        return Err(Error::Domain(format!("weight {w} is odd")));
    }
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let mut p = max.min(rem);
        p -= p % 2;
        while p >= 4 {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
            p -= 2;
        }
    }
    let mut out = Vec::new();
    rec(w as u32, w as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of partitions of `w` into even parts `>= 4`, without listing them.
pub fn partition_count(w: u64) -> u128 {
    if w % 2 == 1 {
        return 0;
    }
    let h = (w / 2) as usize;
    let mut ways = vec![0u128; h + 1];
    ways[0] = 1;
    for part in 2..=h {
        for s in part..=h {
            ways[s] += ways[s - part];
        }
    }
    ways[h]
}

/// Canonical identifier, e.g. `F(8,4)/D^2`; the constant is `1`.
pub fn span_id(partition: &[u32], m: u32) -> String {
    if m == 0 {
        return "1".to_string();
    }
    let parts: Vec<String> = partition.iter().map(u32::to_string).collect();
    if m == 1 {
        format!("F({})/D", parts.join(","))
    } else {
        format!("F({})/D^{m}", parts.join(","))
    }
}

pub fn parse_span_id(id: &str) -> Result<(Vec<u32>, u32)> {
    if id == "1" {
        return Ok((Vec::new(), 0));
    }
    let bad = || Error::Parse(format!("bad span id {id:?}"));
    let rest = id.strip_prefix("F(").ok_or_else(bad)?;
    let (parts, tail) = rest.split_once(")/D").ok_or_else(bad)?;
    let m = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
    };
    let partition = parts
        .split(',')
        .map(|p| p.parse::<u32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((partition, m))
}

/// On-disk store of span series keyed by `(N, id, T)`. Entries are written
/// once and re-parsed on every read.
#[derive(Clone, Debug)]
pub struct SpanCache {
    root: PathBuf,
}

impl SpanCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        SpanCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, level: u64, id: &str, t: i64) -> PathBuf {
        let name: String = id
            .chars()
            .map(|c| match c {
                '(' | ')' | ',' | '/' | '^' => '_',
                c => c,
            })
            .collect();
        self.root
            .join(format!("N{level}"))
            .join(format!("T{t}"))
            .join(format!("{name}.json"))
    }

    pub fn load(&self, level: u64, id: &str, t: i64) -> Result<Option<RationalSeries>> {
        let p = self.path(level, id, t);
        if !p.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&p)?;
        let s: RationalSeries = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("corrupt cache entry {}: {e}", p.display())))?;
        if s.trunc() != t {
            return Err(Error::Parse(format!(
                "corrupt cache entry {}: truncation {} != {t}",
                p.display(),
                s.trunc()
            )));
        }
        Ok(Some(s))
    }

    pub fn store(&self, level: u64, id: &str, t: i64, s: &RationalSeries) -> Result<()> {
        let p = self.path(level, id, t);
        if p.exists() {
            return Ok(());
        }
        let dir = p.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(
            ".{}.tmp{}",
            p.file_name().unwrap().to_string_lossy(),
            std::process::id()
        ));
        fs::write(&tmp, serde_json::to_string(s)?)?;
        fs::rename(&tmp, &p)?;
        Ok(())
    }
}

/// Builds span functions for one level at a fixed truncation `T`, caching
/// the integer-scaled Eisenstein series and powers of the eta core.
pub struct SpanBuilder<'a> {
    ctx: LevelContext,
    t: i64,
    cache: Option<&'a SpanCache>,
    len: usize,
    eis: BTreeMap<u32, (Vec<BigInt>, BigInt)>,
    core: Vec<BigInt>,
}

impl<'a> SpanBuilder<'a> {
    pub fn new(ctx: &LevelContext, t: i64, cache: Option<&'a SpanCache>) -> Self {
        assert!(t >= 0, "span truncation must be non-negative");
        SpanBuilder {
            ctx: ctx.clone(),
            t,
            cache,
            len: 0,
            eis: BTreeMap::new(),
            core: Vec::new(),
        }
    }

    pub fn trunc(&self) -> i64 {
        self.t
    }

    /// Make sure every factor for `S_M` is available to the needed length.
    fn prepare(&mut self, m: u32) -> Result<()> {
        let len = (self.t + m as i64 * self.ctx.d_n as i64 + 1) as usize;
        let wmax = m as u64 * self.ctx.k_n;
        if len > self.len {
            self.eis.clear();
            self.core = eta_core(&self.ctx, len);
            self.len = len;
        }
        let missing: Vec<u32> = (4..=wmax as u32)
            .step_by(2)
            .filter(|k| !self.eis.contains_key(k))
            .collect();
        let ctx = &self.ctx;
        let top = self.len as i64 - 1;
        let built = par::map(&missing, |&k| {
            eisenstein_plus(ctx, k, top).map(|e| (k, e.integer_parts()))
        });
        for b in built {
            let (k, parts) = b?;
            self.eis.insert(k, parts);
        }
        Ok(())
    }

    /// `S_M` in canonical order.
    pub fn level_functions(&mut self, m: u32) -> Result<Vec<SpanFunction>> {
        let parts = weight_partitions(m as u64 * self.ctx.k_n)?;
        self.functions_for(m, &parts)
    }

    /// The span functions with the given ids, in the order given.
    pub fn functions_by_id(&mut self, ids: &[String]) -> Result<Vec<SpanFunction>> {
        let mut by_m: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
        for id in ids {
            let (p, m) = parse_span_id(id)?;
            if p.iter().sum::<u32>() as u64 != m as u64 * self.ctx.k_n {
                return Err(Error::Domain(format!("{id} does not have weight M*k_N")));
            }
            by_m.entry(m).or_default().push(p);
        }
        let mut found: BTreeMap<String, SpanFunction> = BTreeMap::new();
        for (m, mut parts) in by_m {
            parts.sort_by(|a, b| b.cmp(a));
            parts.dedup();
            for f in self.functions_for(m, &parts)? {
                found.insert(f.id.clone(), f);
            }
        }
        Ok(ids.iter().map(|id| found[id].clone()).collect())
    }

    fn functions_for(&mut self, m: u32, parts: &[Vec<u32>]) -> Result<Vec<SpanFunction>> {
        let level = self.ctx.n;
        let t = self.t;
        if m == 0 {
            return Ok(vec![SpanFunction {
                level,
                m: 0,
                partition: Vec::new(),
                series: RationalSeries::one(t),
                id: span_id(&[], 0),
            }]);
        }
        if let Some(cache) = self.cache {
            let mut loaded = Vec::with_capacity(parts.len());
            for p in parts {
                let id = span_id(p, m);
                match cache.load(level, &id, t)? {
                    Some(series) => loaded.push(SpanFunction {
                        level,
                        m,
                        partition: p.clone(),
                        series,
                        id,
                    }),
                    None => break,
                }
            }
            if loaded.len() == parts.len() {
                return Ok(loaded);
            }
        }
        self.prepare(m)?;
        let d = m as i64 * self.ctx.d_n as i64;
        let len = (t + d + 1) as usize;
        let inv = power_unit_series(&self.core, -(self.ctx.ell_n as i64) * m as i64, len);
        let numerators = self.numerators(parts, len);
        let out: Vec<SpanFunction> = par::map(&numerators, |(p, (num, den))| {
            let f = convolve(num, &inv, len);
            SpanFunction {
                level,
                m,
                partition: p.clone(),
                series: RationalSeries::from_scaled(-d, t, f, den),
                id: span_id(p, m),
            }
        });
        if let Some(cache) = self.cache {
            for f in &out {
                cache.store(level, &f.id, t, &f.series)?;
            }
        }
        Ok(out)
    }

    /// Integer-scaled products `∏ E_{m_ν}` for the requested partitions,
    /// sharing prefixes along a depth-first walk.
    fn numerators(&self, parts: &[Vec<u32>], len: usize) -> Vec<(Vec<u32>, (Vec<BigInt>, BigInt))> {
        let wanted: HashSet<&[u32]> = parts.iter().map(Vec::as_slice).collect();
        let prefixes: HashSet<&[u32]> = parts.iter().flat_map(|p| (1..=p.len()).map(move |i| &p[..i])).collect();
        let firsts: Vec<u32> = {
            let mut f: Vec<u32> = parts.iter().map(|p| p[0]).collect();
            f.sort_by(|a, b| b.cmp(a));
            f.dedup();
            f
        };
        let total: u32 = parts.first().map(|p| p.iter().sum()).unwrap_or(0);
        let branches = par::map(&firsts, |&first| {
            let mut out = Vec::new();
            let (e, s) = &self.eis[&first];
            let start = (e[..len].to_vec(), s.clone());
            let mut cur = vec![first];
            self.walk(&mut cur, start, total - first, &wanted, &prefixes, len, &mut out);
            out
        });
        let mut all: Vec<(Vec<u32>, (Vec<BigInt>, BigInt))> = branches.into_iter().flatten().collect();
        let order: BTreeMap<&[u32], usize> = parts.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        all.sort_by_key(|(p, _)| order[p.as_slice()]);
        all
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        cur: &mut Vec<u32>,
        prod: (Vec<BigInt>, BigInt),
        rem: u32,
        wanted: &HashSet<&[u32]>,
        prefixes: &HashSet<&[u32]>,
        len: usize,
        out: &mut Vec<(Vec<u32>, (Vec<BigInt>, BigInt))>,
    ) {
        if rem == 0 {
            if wanted.contains(cur.as_slice()) {
                out.push((cur.clone(), prod));
            }
            return;
        }
        let last = *cur.last().expect("non-empty prefix");
        let mut p = last.min(rem);
        p -= p % 2;
        while p >= 4 {
            cur.push(p);
            if prefixes.contains(cur.as_slice()) {
                let (e, s) = &self.eis[&p];
                let next = (convolve(&prod.0, e, len), &prod.1 * s);
                self.walk(cur, next, rem - p, wanted, prefixes, len, out);
            }
            cur.pop();
            p -= 2;
        }
    }
}

/// `S_0 ∪ … ∪ S_{M_max}` truncated at `T`, ascending in `M` and canonical
/// within each `S_M`.
pub fn build_span(ctx: &LevelContext, m_max: u32, t: i64) -> Result<Vec<SpanFunction>> {
    let mut b = SpanBuilder::new(ctx, t, None);
    let mut out = Vec::new();
    for m in 0..=m_max {
        out.extend(b.level_functions(m)?);
    }
    Ok(out)
}

/// Scale factor check used in tests: every span series is monic.
pub fn is_monic_at(f: &SpanFunction, d_n: u64) -> bool {
    matches!(
        f.series.leading(),
        Some((e, c)) if e == -(f.m as i64 * d_n as i64) && c.is_one()
    )
}
