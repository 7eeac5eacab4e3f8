//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A [`RationalSeries`] stores the dense coefficient block for exponents
//! `min_exp ..= trunc`. Everything above `trunc` is unknown, and products
//! shrink the known range instead of inventing coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ntheory::{fmt_rational, parse_rational};

#[derive(Clone, Debug)]
pub struct RationalSeries {
    min_exp: i64,
    trunc: i64,
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Build from a coefficient block. Panics if the length does not match
    /// `trunc - min_exp + 1`.
    pub fn new(min_exp: i64, trunc: i64, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(
            coeffs.len() as i64,
            (trunc - min_exp + 1).max(0),
            "coefficient block does not match [{min_exp}, {trunc}]"
        );
        let min_exp = if coeffs.is_empty() { trunc + 1 } else { min_exp };
        RationalSeries { min_exp, trunc, coeffs }
    }

    pub fn from_ints(min_exp: i64, trunc: i64, coeffs: &[i64]) -> Self {
        Self::new(
            min_exp,
            trunc,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn from_bigints(min_exp: i64, trunc: i64, coeffs: Vec<BigInt>) -> Self {
        Self::new(
            min_exp,
            trunc,
            coeffs.into_iter().map(BigRational::from_integer).collect(),
        )
    }

    /// Integer coefficient block divided by a common denominator.
    pub fn from_scaled(min_exp: i64, trunc: i64, numer: Vec<BigInt>, denom: &BigInt) -> Self {
        let coeffs = if denom.is_one() {
            numer.into_iter().map(BigRational::from_integer).collect()
        } else {
            numer.into_iter().map(|c| BigRational::new(c, denom.clone())).collect()
        };
        Self::new(min_exp, trunc, coeffs)
    }

    pub fn zero(trunc: i64) -> Self {
        RationalSeries {
            min_exp: trunc + 1,
            trunc,
            coeffs: Vec::new(),
        }
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(BigRational::one(), 0, trunc)
    }

    /// `c·q^e` known through `trunc`.
    pub fn monomial(c: BigRational, e: i64, trunc: i64) -> Self {
        if e > trunc {
            return Self::zero(trunc);
        }
        let mut coeffs = vec![BigRational::zero(); (trunc - e + 1) as usize];
        coeffs[0] = c;
        RationalSeries {
            min_exp: e,
            trunc,
            coeffs,
        }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^e`. Exponents below `min_exp` read as zero; those
    /// above `trunc` are unknown and return `None`.
    pub fn get(&self, e: i64) -> Option<BigRational> {
        if e > self.trunc {
            None
        } else if e < self.min_exp {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[(e - self.min_exp) as usize].clone())
        }
    }

    /// Like [`get`](Self::get) but panics beyond the truncation.
    pub fn coeff(&self, e: i64) -> BigRational {
        self.get(e)
            .unwrap_or_else(|| panic!("coefficient q^{e} beyond truncation {}", self.trunc))
    }

    pub fn coeff_ref(&self, e: i64) -> Option<&BigRational> {
        if e < self.min_exp || e > self.trunc {
            None
        } else {
            Some(&self.coeffs[(e - self.min_exp) as usize])
        }
    }

    /// Coefficients for exponents `lo ..= hi`; panics if `hi > trunc`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<BigRational> {
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }

    /// Lowest exponent with a nonzero coefficient and that coefficient.
    pub fn leading(&self) -> Option<(i64, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drop stored leading zeros.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => Self::zero(self.trunc),
            Some((e, _)) => RationalSeries {
                min_exp: e,
                trunc: self.trunc,
                coeffs: self.coeffs[(e - self.min_exp) as usize..].to_vec(),
            },
        }
    }

    /// Reduce the known range to `trunc` (no-op if already shorter).
    pub fn truncate(&self, trunc: i64) -> Self {
        if trunc >= self.trunc {
            return self.clone();
        }
        if trunc < self.min_exp {
            return Self::zero(trunc);
        }
        RationalSeries {
            min_exp: self.min_exp,
            trunc,
            coeffs: self.coeffs[..(trunc - self.min_exp + 1) as usize].to_vec(),
        }
    }

    /// Integer numerators over one common denominator.
    pub fn integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (num, den)
    }

    pub fn all_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        linear_combine(&[(BigRational::one(), self), (BigRational::one(), other)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        linear_combine(&[(BigRational::one(), self), (-BigRational::one(), other)])
    }

    pub fn mul(&self, other: &Self) -> Self {
        series_mul(self, other)
    }

    /// Textual form such as `q^-1 + 7q + 14q^2 + O(q^3)`.
    pub fn display_terms(&self, max_terms: usize) -> String {
        let mut out = String::new();
        let mut shown = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if shown == max_terms {
                break;
            }
            let e = self.min_exp + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if shown == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                let s = fmt_rational(&mag);
                if mag.denom().is_one() || e == 0 {
                    out.push_str(&s);
                } else {
                    out.push('(');
                    out.push_str(&s);
                    out.push(')');
                }
            }
            match e {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{e}")),
            }
            shown += 1;
        }
        if shown == 0 {
            out.push('0');
        }
        out.push_str(&format!(" + O(q^{})", self.trunc + 1));
        out
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.trunc != other.trunc {
            return false;
        }
        let lo = self.min_exp.min(other.min_exp);
        (lo..=self.trunc).all(|e| self.get(e) == other.get(e))
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_terms(usize::MAX))
    }
}

/// Integer convolution `a * b` keeping the first `len` coefficients.
pub(crate) fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Product truncated at `min(f.trunc + g.min_exp, g.trunc + f.min_exp)`.
pub fn series_mul(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    let trunc = (f.trunc + g.min_exp).min(g.trunc + f.min_exp);
    let min_exp = f.min_exp + g.min_exp;
    if trunc < min_exp {
        return RationalSeries::zero(trunc);
    }
    let len = (trunc - min_exp + 1) as usize;
    let (fa, da) = f.integer_parts();
    let (gb, db) = g.integer_parts();
    let prod = convolve(&fa, &gb, len);
    RationalSeries::from_scaled(min_exp, trunc, prod, &(da * db))
}

/// Multiplicative inverse. The result starts at `-v` where `q^v` is the
/// leading term of `f`, and carries the same relative precision.
pub fn series_invert(f: &RationalSeries) -> Result<RationalSeries> {
    let f = f.normalized();
    let (v, _) = f.leading().ok_or(Error::NonInvertible)?;
    let n = f.coeffs.len();
    let (num, den) = f.integer_parts();
    // With F = num and a = num[0], write 1/F = Σ H_k q^k / a^(k+1); then
    // H_0 = 1 and H_k = -Σ_{i=1..k} F_i a^(i-1) H_(k-i).
    let a = num[0].clone();
    let mut apow = Vec::with_capacity(n);
    apow.push(BigInt::one());
    for i in 1..n {
        let next = &apow[i - 1] * &a;
        apow.push(next);
    }
    let mut h: Vec<BigInt> = Vec::with_capacity(n);
    h.push(BigInt::one());
    for k in 1..n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            if !num[i].is_zero() && !h[k - i].is_zero() {
                acc += &num[i] * &apow[i - 1] * &h[k - i];
            }
        }
        h.push(-acc);
    }
    let coeffs = h
        .into_iter()
        .enumerate()
        .map(|(k, hk)| BigRational::new(hk * &den, &apow[k] * &a))
        .collect();
    Ok(RationalSeries::new(-v, -v + n as i64 - 1, coeffs))
}

/// `f^e` by repeated squaring; negative exponents invert first.
pub fn series_pow(f: &RationalSeries, e: i64) -> Result<RationalSeries> {
    let base = if e < 0 { series_invert(f)? } else { f.normalized() };
    let mut k = e.unsigned_abs();
    if k == 0 {
        let rel = match base.leading() {
            Some((v, _)) => base.trunc - v,
            None => base.trunc,
        };
        return Ok(RationalSeries::one(rel));
    }
    let mut acc: Option<RationalSeries> = None;
    let mut sq = base;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => sq.clone(),
                Some(a) => series_mul(&a, &sq),
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        sq = series_mul(&sq, &sq);
    }
    Ok(acc.expect("k >= 1"))
}

/// Substitute `q -> q^v`.
pub fn series_dilate(f: &RationalSeries, v: u64) -> RationalSeries {
    assert!(v >= 1, "dilation factor must be positive");
    let v = v as i64;
    if v == 1 {
        return f.clone();
    }
    if f.coeffs.is_empty() {
        return RationalSeries::zero(f.trunc * v);
    }
    let min_exp = f.min_exp * v;
    let trunc = f.trunc * v;
    let mut coeffs = vec![BigRational::zero(); (trunc - min_exp + 1) as usize];
    for (i, c) in f.coeffs.iter().enumerate() {
        coeffs[i * v as usize] = c.clone();
    }
    RationalSeries::new(min_exp, trunc, coeffs)
}

/// Exact `Σ c_i f_i`, known through the smallest input truncation.
pub fn linear_combine(terms: &[(BigRational, &RationalSeries)]) -> RationalSeries {
    assert!(!terms.is_empty(), "linear_combine needs at least one term");
    let trunc = terms.iter().map(|(_, f)| f.trunc).min().expect("non-empty");
    let min_exp = terms
        .iter()
        .map(|(_, f)| f.min_exp)
        .min()
        .expect("non-empty")
        .min(trunc + 1);
    let mut coeffs = vec![BigRational::zero(); (trunc - min_exp + 1).max(0) as usize];
    for (c, f) in terms {
        if c.is_zero() {
            continue;
        }
        for (i, x) in f.coeffs.iter().enumerate() {
            let e = f.min_exp + i as i64;
            if e > trunc {
                break;
            }
            if !x.is_zero() {
                coeffs[(e - min_exp) as usize] += c * x;
            }
        }
    }
    RationalSeries::new(min_exp, trunc, coeffs)
}

/// `Σ c_k e^{2πikz}` over the stored range in double precision.
pub fn series_eval_numeric(f: &RationalSeries, z: Complex64) -> Complex64 {
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    f.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let e = (f.min_exp + i as i64) as f64;
            (two_pi_i * z * e).exp() * c.to_f64().unwrap_or(f64::NAN)
        })
        .sum()
}

#[derive(Serialize, Deserialize)]
struct SeriesRecord {
    min_exp: i64,
    trunc: i64,
    coeffs: Vec<String>,
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRecord {
            min_exp: self.min_exp,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(fmt_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = SeriesRecord::deserialize(d)?;
        let coeffs = rec
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if coeffs.len() as i64 != (rec.trunc - rec.min_exp + 1).max(0) {
            return Err(D::Error::custom("coefficient count does not match exponent range"));
        }
        Ok(RationalSeries::new(rec.min_exp, rec.trunc, coeffs))
    }
}
