//! Polynomial relations `P(x, y) = 0` between two generators, found as the
//! kernel of the monomial expansions `x^i y^j` with bounded pole order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactla::kernel;
use crate::fieldgen::GeneratorPair;
use crate::ntheory::{binomial, fmt_rational, lcm, parse_rational};
use crate::qseries::{linear_combine, series_mul, RationalSeries};

/// `Σ c_{ij} x^i y^j` with `x` of pole order `a1` and `y` of pole order `a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRelation {
    pub a1: u64,
    pub a2: u64,
    /// Largest admitted pole order `i·a1 + j·a2`.
    pub degree_bound: u64,
    /// Keyed by `(i, j)`; zero coefficients are never stored.
    pub terms: BTreeMap<(u32, u32), BigRational>,
    pub names: (String, String),
}

impl PolyRelation {
    pub fn new(a1: u64, a2: u64, degree_bound: u64) -> Self {
        PolyRelation {
            a1,
            a2,
            degree_bound,
            terms: BTreeMap::new(),
            names: ("x".into(), "y".into()),
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn pole_order(&self, i: u32, j: u32) -> u64 {
        i as u64 * self.a1 + j as u64 * self.a2
    }

    /// Terms in descending pole order; ties put the higher `y` power first.
    pub fn ordered_terms(&self) -> Vec<((u32, u32), &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by(|((i1, j1), _), ((i2, j2), _)| {
            self.pole_order(*i2, *j2)
                .cmp(&self.pole_order(*i1, *j1))
                .then(j2.cmp(j1))
        });
        v
    }

    fn monomial_name(&self, i: u32, j: u32) -> String {
        let pow = |name: &str, e: u32| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        let s = pow(&self.names.1, j) + &pow(&self.names.0, i);
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    pub fn to_json(&self) -> Value {
        let mut terms = Map::new();
        for ((i, j), c) in self.ordered_terms() {
            terms.insert(self.monomial_name(i, j), Value::String(fmt_rational(c)));
        }
        json!({
            "vars": [self.names.0, self.names.1],
            "a1": self.a1,
            "a2": self.a2,
            "degree_bound": self.degree_bound,
            "terms": terms,
            "text": self.to_string(),
        })
    }

    /// Parse `"y^2 - x^3 + 6xy - 6x^2 + 41y + 49x + 300 = 0"`-style text.
    /// Coefficients may be rationals written `p/q`.
    pub fn parse(text: &str, names: (&str, &str), a1: u64, a2: u64) -> Result<Self> {
        let lhs = text.split('=').next().unwrap_or("").trim();
        let (xn, yn) = (names.0.chars().next(), names.1.chars().next());
        let bad = |m: &str| Error::Parse(format!("relation {text:?}: {m}"));
        let mut rel = PolyRelation::new(a1, a2, 0);
        rel.names = (names.0.into(), names.1.into());
        let chars: Vec<char> = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        while pos < chars.len() {
            let mut sign = BigRational::one();
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                pos += 1;
            }
            let num: String = chars[start..pos].iter().collect();
            let c = if num.is_empty() {
                BigRational::one()
            } else {
                parse_rational(&num)?
            };
            let (mut i, mut j) = (0u32, 0u32);
            while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
                let v = Some(chars[pos]);
                pos += 1;
                let mut e = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let digits: String = chars[s..pos].iter().collect();
                    e = digits.parse().map_err(|_| bad("bad exponent"))?;
                }
                if v == xn {
                    i += e;
                } else if v == yn {
                    j += e;
                } else {
                    return Err(bad("unknown variable"));
                }
            }
            if start == pos {
                return Err(bad("empty term"));
            }
            let total = rel.coeff(i, j) + sign * c;
            rel.set(i, j, total);
        }
        rel.degree_bound = rel.terms.keys().map(|&(i, j)| rel.pole_order(i, j)).max().unwrap_or(0);
        Ok(rel)
    }
}

impl fmt::Display for PolyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return write!(f, "0 = 0");
        }
        for (k, ((i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.monomial_name(i, j);
            if mono == "1" {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}{mono}", fmt_rational(&a))?;
            }
        }
        write!(f, " = 0")
    }
}

/// Monomials `(i, j)` with `i·a1 + j·a2 <= d`, in a fixed order.
pub fn monomials(a1: u64, a2: u64, d: u64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for j in 0..=(d / a2) as u32 {
        for i in 0..=((d - j as u64 * a2) / a1) as u32 {
            out.push((i, j));
        }
    }
    out
}

fn powers(f: &RationalSeries, n: u32) -> Vec<RationalSeries> {
    let mut out = vec![RationalSeries::one(f.trunc() - f.min_exp())];
    for k in 1..=n as usize {
        let next = if k == 1 { f.clone() } else { series_mul(&out[k - 1], f) };
        out.push(next);
    }
    out
}

fn monomial_series(x: &RationalSeries, y: &RationalSeries, mons: &[(u32, u32)]) -> Vec<RationalSeries> {
    let imax = mons.iter().map(|m| m.0).max().unwrap_or(0);
    let jmax = mons.iter().map(|m| m.1).max().unwrap_or(0);
    let xp = powers(x, imax);
    let yp = powers(y, jmax);
    crate::par::map(mons, |&(i, j)| match (i, j) {
        (0, _) => yp[j as usize].clone(),
        (_, 0) => xp[i as usize].clone(),
        _ => series_mul(&xp[i as usize], &yp[j as usize]),
    })
}

/// Kernel of the monomial expansions over `[-D, T]`, starting from
/// `D = lcm(a1, a2)` and allowing up to three increments when the kernel is
/// empty. The result is normalized to `+1` on `y^{a1}`.
pub fn find_relation(x: &RationalSeries, y: &RationalSeries, a1: u64, a2: u64) -> Result<PolyRelation> {
    if a1 == 0 || a2 == 0 {
        return Err(Error::Domain("pole orders must be positive".into()));
    }
    let d0 = lcm(a1, a2);
    for d in d0..=d0 + 3 {
        let mons = monomials(a1, a2, d);
        let series = monomial_series(x, y, &mons);
        let hi = series.iter().map(RationalSeries::trunc).min().unwrap_or(0);
        let needed = mons.len() as i64 + 2;
        if hi < needed {
            return Err(Error::InsufficientPrecision((needed - hi) as usize));
        }
        let ker = kernel(&series, -(d as i64), hi)?;
        match ker.len() {
            0 => continue,
            1 => {}
            _ => return Err(Error::InsufficientPrecision(ker.len())),
        }
        let v = &ker[0];
        let lead = mons
            .iter()
            .position(|&(i, j)| i == 0 && j as u64 == a1)
            .map(|p| v[p].clone())
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain(format!("relation at bound {d} has no y^{a1} term")))?;
        let mut rel = PolyRelation::new(a1, a2, d);
        for (k, &(i, j)) in mons.iter().enumerate() {
            rel.set(i, j, &v[k] / &lead);
        }
        return Ok(rel);
    }
    Err(Error::NoRelation(d0 + 3))
}

/// `Σ c_{ij} x^i y^j`, truncated where the products are known.
pub fn evaluate_relation(rel: &PolyRelation, x: &RationalSeries, y: &RationalSeries) -> RationalSeries {
    let mons: Vec<(u32, u32)> = rel.terms.keys().copied().collect();
    if mons.is_empty() {
        return RationalSeries::zero(x.trunc().min(y.trunc()));
    }
    let series = monomial_series(x, y, &mons);
    let terms: Vec<(BigRational, &RationalSeries)> = mons
        .iter()
        .zip(&series)
        .map(|(m, s)| (rel.terms[m].clone(), s))
        .collect();
    linear_combine(&terms)
}

/// Rewrite a relation in `v = y + x`, `w = y - x`, i.e. `P((v-w)/2, (v+w)/2)`,
/// scaled to a primitive integer polynomial with positive `w^n` coefficient
/// for the largest `n` present. Both new variables have pole order `a2`.
pub fn sum_difference_relation(rel: &PolyRelation) -> Result<PolyRelation> {
    let mut out: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (&(i, j), c) in &rel.terms {
        // x^i = ((v - w)/2)^i, y^j = ((v + w)/2)^j; keys are (v power, w power).
        let scale = c * num_traits::pow(half.clone(), (i + j) as usize);
        for a in 0..=i {
            let ca = binomial(i as u64, a as u64) * if (i - a) % 2 == 1 { -1 } else { 1 };
            for b in 0..=j {
                let cb = binomial(j as u64, b as u64);
                let key = (a + b, (i - a) + (j - b));
                let add = &scale * BigRational::from_integer(&ca * &cb);
                let e = out.entry(key).or_insert_with(BigRational::zero);
                *e += add;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    let lead_key = out
        .keys()
        .max_by_key(|&&(v, w)| (v + w, w))
        .copied()
        .ok_or_else(|| Error::Domain("empty relation".into()))?;
    let den = out.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num_gcd = out
        .values()
        .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den / c.denom()))));
    let mut factor = BigRational::new(den, num_gcd);
    if out[&lead_key].is_negative() {
        factor = -factor;
    }
    let mut res = PolyRelation::new(rel.a2, rel.a2, 0);
    res.names = ("v".into(), "w".into());
    for (k, c) in out {
        res.set(k.0, k.1, c * &factor);
    }
    res.degree_bound = res.terms.keys().map(|&(i, j)| res.pole_order(i, j)).max().unwrap_or(0);
    Ok(res)
}

/// Truncation that leaves `find_relation` enough columns at every bound it
/// may try for pole orders `(a1, a2)`.
pub fn relation_precision(a1: u64, a2: u64) -> i64 {
    let d = lcm(a1, a2) + 3;
    2 * d as i64 + monomials(a1, a2, d).len() as i64 + 4
}

/// The relation between a level's generators, and the `(v, w)` form when
/// the generators themselves are not integral.
#[derive(Clone, Debug)]
pub struct LevelRelation {
    pub relation: PolyRelation,
    pub base_changed: Option<PolyRelation>,
}

impl LevelRelation {
    pub fn to_json(&self) -> Value {
        json!({
            "relation": self.relation.to_json(),
            "base_changed": self.base_changed.as_ref().map(PolyRelation::to_json),
        })
    }
}

/// `gp` must be known through `relation_precision(gp.a1, gp.a2)`.
pub fn relation_for_generators(gp: &GeneratorPair) -> Result<LevelRelation> {
    if gp.is_hauptmodul() {
        return Err(Error::Domain(format!(
            "level {} has genus zero; its Hauptmodul satisfies no relation",
            gp.level
        )));
    }
    let relation = find_relation(&gp.x, &gp.y, gp.a1, gp.a2)?;
    let base_changed = if gp.x.all_integral() && gp.y.all_integral() {
        None
    } else {
        Some(sum_difference_relation(&relation)?)
    };
    Ok(LevelRelation { relation, base_changed })
}
