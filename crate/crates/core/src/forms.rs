//! Level constants and q-expansions of the basic modular objects on
//! Γ₀(N)⁺: the eta product Δ_N, holomorphic Eisenstein series, and the
//! unscaled Hecke operator.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntheory::{self, bernoulli, factorize, gcd, lcm};
use crate::qseries::{series_dilate, RationalSeries};

/// Square-free levels with known genus of Γ₀(N)⁺, grouped by genus.
pub const GENUS_TABLE: [&[u64]; 4] = [
    &[
        1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 33, 34, 35, 38, 39, 41, 42, 46, 47,
        51, 55, 59, 62, 66, 69, 70, 71, 78, 87, 94, 95, 105, 110, 119,
    ],
    &[
        37, 43, 53, 57, 58, 61, 65, 74, 77, 79, 82, 83, 86, 89, 91, 101, 102, 111, 114, 118, 123, 130, 131, 138, 141,
        142, 143, 145, 155, 159, 174, 182, 190, 195, 210, 222, 231, 238,
    ],
    &[
        67, 73, 85, 93, 103, 106, 107, 115, 122, 129, 133, 134, 146, 154, 158, 161, 165, 166, 167, 170, 177, 186, 191,
        205, 206, 209, 213, 215, 221, 230, 255, 266, 285, 286, 287, 299, 330, 357, 390,
    ],
    &[
        97, 109, 113, 127, 139, 149, 151, 178, 179, 183, 185, 187, 194, 203, 217, 239, 246, 249, 258, 282, 290, 295,
        303, 310, 318, 329, 429, 430, 455, 462, 510,
    ],
];

/// Genus from the embedded table, if the level is listed.
pub fn table_genus(n: u64) -> Option<u32> {
    GENUS_TABLE
        .iter()
        .position(|levels| levels.contains(&n))
        .map(|g| g as u32)
}

/// Per-level constants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelContext {
    pub n: u64,
    pub primes: Vec<u64>,
    pub r: u32,
    pub sigma_n: u64,
    pub ell_n: u64,
    pub k_n: u64,
    pub d_n: u64,
    pub genus: u32,
    pub volume: f64,
}

impl LevelContext {
    pub fn divisors(&self) -> Vec<u64> {
        ntheory::divisors(self.n)
    }
}

/// `ℓ_N = 2^{1-r} lcm(4, 2^{r-1}·24/(24, σ(N)))`, rewritten as
/// `lcm(8, 2^r·24/(24, σ)) / 2^r` so that `r = 0` stays in integers.
pub fn ell(r: u32, sigma_n: u64) -> u64 {
    let two_r = 1u64 << r;
    let l = lcm(8, two_r * 24 / gcd(24, sigma_n));
    debug_assert_eq!(l % two_r, 0);
    l / two_r
}

/// Constants for a level in the embedded genus table.
pub fn level_context(n: u64) -> Result<LevelContext> {
    level_context_with_genus(n, None)
}

/// Like [`level_context`], with an explicit genus for levels outside the
/// table. An override that disagrees with the table is rejected.
pub fn level_context_with_genus(n: u64, genus: Option<u32>) -> Result<LevelContext> {
    let f = factorize(n)?;
    if !f.is_square_free() {
        return Err(Error::NotSquareFree(n));
    }
    let genus = match (table_genus(n), genus) {
        (Some(t), Some(g)) if t != g => {
            return Err(Error::Domain(format!("level {n} has genus {t}, not the supplied {g}")))
        }
        (Some(t), _) => t,
        (None, Some(g)) => g,
        (None, None) => return Err(Error::GenusUnknown(n)),
    };
    let primes = f.primes();
    let r = primes.len() as u32;
    let sigma_n: u64 = f.divisors().iter().sum();
    let ell_n = ell(r, sigma_n);
    if (ell_n * sigma_n) % 24 != 0 {
        return Err(Error::Domain(format!("24 does not divide ell*sigma at level {n}")));
    }
    let k_n = (ell_n << r) / 2;
    let d_n = ell_n * sigma_n / 24;
    let volume = PI * sigma_n as f64 / (3.0 * (1u64 << r) as f64);
    Ok(LevelContext {
        n,
        primes,
        r,
        sigma_n,
        ell_n,
        k_n,
        d_n,
        genus,
        volume,
    })
}

/// Coefficients of `∏_{n≥1}(1 - q^n)` through `q^len-1` via Euler's
/// pentagonal number theorem.
pub fn euler_product(len: usize) -> Vec<i64> {
    let mut out = vec![0i64; len];
    if len == 0 {
        return out;
    }
    out[0] = 1;
    let mut k: i64 = 1;
    loop {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let a = (k * (3 * k - 1) / 2) as usize;
        let b = (k * (3 * k + 1) / 2) as usize;
        if a >= len {
            break;
        }
        out[a] += sign;
        if b < len {
            out[b] += sign;
        }
        k += 1;
    }
    out
}

/// `P^e` for an integer series with `P[0] = 1`, first `len` terms, by the
/// recurrence `n·A_n = Σ_{k=1}^{n} ((e+1)k - n) P_k A_{n-k}`.
pub fn power_unit_series(p: &[BigInt], e: i64, len: usize) -> Vec<BigInt> {
    assert!(p.first().is_some_and(One::is_one), "series must start with 1");
    let mut a = Vec::with_capacity(len);
    if len == 0 {
        return a;
    }
    a.push(BigInt::one());
    for n in 1..len {
        let mut acc = BigInt::zero();
        for k in 1..=n.min(p.len() - 1) {
            if p[k].is_zero() || a[n - k].is_zero() {
                continue;
            }
            let w = (e + 1) * k as i64 - n as i64;
            if w != 0 {
                acc += &p[k] * &a[n - k] * w;
            }
        }
        a.push(acc / BigInt::from(n));
    }
    a
}

/// `∏_{v|N} ∏_{n≥1} (1 - q^{vn})` through `q^len-1`.
pub fn eta_core(ctx: &LevelContext, len: usize) -> Vec<BigInt> {
    let base = euler_product(len);
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); len];
    if len > 0 {
        acc[0] = BigInt::one();
    }
    for v in ctx.divisors() {
        let mut dil = vec![BigInt::zero(); len];
        for (i, &c) in base.iter().enumerate() {
            let j = i * v as usize;
            if j >= len {
                break;
            }
            dil[j] = BigInt::from(c);
        }
        acc = crate::qseries::convolve(&acc, &dil, len);
    }
    acc
}

/// `Δ_N = q^{d_N} ∏_{v|N} ∏_{n≥1} (1 - q^{vn})^{ℓ_N}`, known through `q^T`.
pub fn eta_product_delta(ctx: &LevelContext, t: i64) -> RationalSeries {
    let d = ctx.d_n as i64;
    assert!(t >= d, "truncation {t} below the vanishing order {d}");
    let len = (t - d + 1) as usize;
    let core = eta_core(ctx, len);
    let pow = power_unit_series(&core, ctx.ell_n as i64, len);
    RationalSeries::from_bigints(d, t, pow)
}

/// `σ_{k-1}(n)` for `n = 0..len` (the `n = 0` slot is zero).
fn divisor_powers(k1: u32, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for d in 1..len {
        let dp = num_traits::pow(BigInt::from(d), k1 as usize);
        let mut m = d;
        while m < len {
            out[m] += &dp;
            m += d;
        }
    }
    out
}

/// The normalizing factor `-2k/B_k` in the level-one Eisenstein series.
pub fn eisenstein_factor(k: u32) -> Result<BigRational> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::Domain(format!("Eisenstein weight {k} must be even and >= 4")));
    }
    let b = bernoulli(k)?;
    Ok(-BigRational::from_integer(BigInt::from(2 * k)) / b)
}

/// `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) q^n` through `q^T`.
pub fn eisenstein_level1(k: u32, t: i64) -> Result<RationalSeries> {
    let c = eisenstein_factor(k)?;
    let t = t.max(0);
    let sig = divisor_powers(k - 1, t as usize + 1);
    let mut coeffs: Vec<BigRational> = sig.into_iter().map(|s| BigRational::from_integer(s) * &c).collect();
    coeffs[0] = BigRational::one();
    Ok(RationalSeries::new(0, t, coeffs))
}

/// `E_k^{(N)} = σ_{k/2}(N)^{-1} Σ_{v|N} v^{k/2} E_k(vz)` through `q^T`.
pub fn eisenstein_plus(ctx: &LevelContext, k: u32, t: i64) -> Result<RationalSeries> {
    let base = eisenstein_level1(k, t)?;
    let half = k / 2;
    let sig = BigRational::from_integer(ntheory::sigma_int(half, ctx.n));
    let terms: Vec<(BigRational, RationalSeries)> = ctx
        .divisors()
        .into_iter()
        .map(|v| {
            let w = BigRational::from_integer(num_traits::pow(BigInt::from(v), half as usize));
            (w / &sig, series_dilate(&base, v).truncate(t))
        })
        .collect();
    let refs: Vec<(BigRational, &RationalSeries)> = terms.iter().map(|(c, f)| (c.clone(), f)).collect();
    Ok(crate::qseries::linear_combine(&refs))
}

/// Unscaled Hecke operator: `(T_p f)[m] = f[m/p]·[p | m] + p·f[mp]`, known
/// through `floor(T/p)`.
pub fn hecke_tp(f: &RationalSeries, p: u64) -> RationalSeries {
    let p = p as i64;
    let t = f.trunc().div_euclid(p);
    let lo = (p * f.min_exp()).min(-(-f.min_exp()).div_euclid(p)).min(t + 1);
    let pr = BigRational::from_integer(p.into());
    let coeffs = (lo..=t)
        .map(|m| {
            let mut c = f.coeff(m * p) * &pr;
            if m.rem_euclid(p) == 0 {
                c += f.coeff(m / p);
            }
            c
        })
        .collect();
    RationalSeries::new(lo, t, coeffs)
}
