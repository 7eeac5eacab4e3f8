//! Double-precision evaluation of the Fourier data of the non-holomorphic
//! Eisenstein series: the coefficients `φ_N(m, s)`, the scattering term
//! `φ_N(s)`, the Laurent constants at `s = 1`, and a numeric check of the
//! Kronecker limit formula.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::forms::LevelContext;
use crate::ntheory::{bernoulli_table, divisors, gcd, valuation};

/// `ζ'(-1) = 1/12 - ln A` with `A` the Glaisher–Kinkelin constant.
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165_421_143_700_450_92;
/// Glaisher–Kinkelin constant `A`.
pub const GLAISHER: f64 = 1.282_427_129_100_622_6;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `Γ(z)` by the Lanczos approximation, with reflection for `Re z < 1/2`.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        return c(PI) / ((c(PI) * z).sin() * gamma(c(1.0) - z));
    }
    let z = z - 1.0;
    let mut x = c(LANCZOS[0]);
    for (i, &l) in LANCZOS.iter().enumerate().skip(1) {
        x += c(l) / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ((z + 0.5) * t.ln() - t).exp() * x * (2.0 * PI).sqrt()
}

/// `ζ(s)` by Euler–Maclaurin summation; reflected for `Re s < 0`.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(Error::Pole("zeta", "s = 1".into()));
    }
    if s.re < 0.0 {
        let one_minus = c(1.0) - s;
        let f = c(2.0).powc(s) * c(PI).powc(s - 1.0) * (c(PI / 2.0) * s).sin() * gamma(one_minus);
        return Ok(f * zeta(one_minus)?);
    }
    const K: usize = 15;
    let n = 20usize.max(s.norm().ceil() as usize + 10);
    let big_n = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * big_n.ln()).exp();
    sum += n_pow * big_n / (s - 1.0) + n_pow * 0.5;
    let b = bernoulli_table(2 * K);
    // term_k = B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut npow = n_pow / big_n;
    for k in 1..=K {
        let b2k = b[2 * k].to_f64().expect("finite");
        sum += rising * npow * (b2k / fact);
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
        npow /= big_n * big_n;
    }
    Ok(sum)
}

/// `ξ(s) = ½ s(s-1) π^{-s/2} Γ(s/2) ζ(s)`, entire.
pub fn xi(s: Complex64) -> Complex64 {
    if s == c(1.0) || s == c(0.0) {
        return c(0.5);
    }
    let z = zeta(s).expect("s != 1");
    s * (s - 1.0) * 0.5 * c(PI).powc(-s / 2.0) * gamma(s / 2.0) * z
}

fn pow_c(base: f64, s: Complex64) -> Complex64 {
    (s * base.ln()).exp()
}

/// `σ_a(p^α) = Σ_{i≤α} p^{i a}`.
fn sigma_prime_power(p: u64, alpha: u32, a: Complex64) -> Complex64 {
    (0..=alpha).map(|i| pow_c(p as f64, a * i as f64)).sum()
}

/// `σ_a(m)` for complex `a`.
pub fn sigma_complex(a: Complex64, m: u64) -> Complex64 {
    divisors(m).into_iter().map(|d| pow_c(d as f64, a)).sum()
}

/// `D_p(m, s) = 1 - (p^s/(p^s+1)) / σ_{1-2s}(p^{α_p})`.
fn dn_prime(p: u64, m: u64, s: Complex64) -> Complex64 {
    let alpha = valuation(m, p);
    let ps = pow_c(p as f64, s);
    c(1.0) - ps / (ps + 1.0) / sigma_prime_power(p, alpha, c(1.0) - s * 2.0)
}

/// `D_N(m, s) = ∏_{p|N} D_p(m, s)`.
pub fn dn_factor(ctx: &LevelContext, m: u64, s: Complex64) -> Complex64 {
    assert!(m >= 1, "m must be positive");
    ctx.primes.iter().map(|&p| dn_prime(p, m, s)).product()
}

/// `φ_N(m, s) = π^s m^{s-1}/Γ(s) · σ_{1-2s}(m)/ζ(2s) · D_N(m, s)`, with
/// `φ_N(-m, s) = φ_N(m, s)`.
pub fn phi_coefficient(ctx: &LevelContext, m: i64, s: Complex64) -> Result<Complex64> {
    let m = m.unsigned_abs();
    if m == 0 {
        return Err(Error::Domain("m must be nonzero".into()));
    }
    let z = zeta(s * 2.0)?;
    if z.norm() == 0.0 || !z.is_finite() {
        return Err(Error::Pole("phi_coefficient", format!("zeta(2s) at s = {s}")));
    }
    let v = pow_c(PI, s) * pow_c(m as f64, s - 1.0) / gamma(s) * sigma_complex(c(1.0) - s * 2.0, m) / z
        * dn_factor(ctx, m, s);
    if !v.is_finite() {
        return Err(Error::Pole("phi_coefficient", format!("s = {s}")));
    }
    Ok(v)
}

/// Möbius and Euler φ on `0..=n` by a linear sieve.
fn mobius_phi_table(n: usize) -> (Vec<i8>, Vec<u64>) {
    let mut mu = vec![0i8; n + 1];
    let mut phi = vec![0u64; n + 1];
    let mut primes = Vec::new();
    let mut composite = vec![false; n + 1];
    if n >= 1 {
        mu[1] = 1;
        phi[1] = 1;
    }
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
            phi[i] = i as u64 - 1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                phi[ip] = phi[i] * p as u64;
                break;
            }
            mu[ip] = -mu[i];
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    (mu, phi)
}

/// `a_m(n) = μ(n/(m,n)) φ(n)/φ(n/(m,n))`, the Ramanujan sum `c_n(m)`.
pub fn ramanujan_a(m: u64, n: u64) -> i64 {
    let (mu, phi) = mobius_phi_table(n as usize);
    let g = gcd(m, n);
    let q = (n / g) as usize;
    mu[q] as i64 * (phi[n as usize] / phi[q]) as i64
}

/// Dirichlet-series form of `φ_N(m, s)`, truncated at `n ≤ n_max`:
/// `π^s m^{s-1}/Γ(s) Σ_{v|N} v^s N^{-2s} Σ_{(v,n)=1} a_m((N/v) n)/n^{2s}`.
pub fn phi_coefficient_oracle(ctx: &LevelContext, m: i64, s: Complex64, n_max: u64) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(Error::Domain("the Dirichlet series needs Re s > 1".into()));
    }
    let m = m.unsigned_abs();
    let big_n = ctx.n;
    let limit = (big_n * n_max) as usize;
    let (mu, phi) = mobius_phi_table(limit);
    let a = |k: u64| -> f64 {
        let g = gcd(m, k);
        let q = (k / g) as usize;
        mu[q] as f64 * (phi[k as usize] / phi[q]) as f64
    };
    let two_s = s * 2.0;
    let mut total = Complex64::new(0.0, 0.0);
    for v in divisors(big_n) {
        let mut inner = Complex64::new(0.0, 0.0);
        // Summing from the tail keeps the small terms from being absorbed.
        for n in (1..=n_max).rev() {
            if gcd(v, n) != 1 {
                continue;
            }
            let av = a((big_n / v) * n);
            if av != 0.0 {
                inner += pow_c(n as f64, -two_s) * av;
            }
        }
        total += pow_c(v as f64, s) * pow_c(big_n as f64, -two_s) * inner;
    }
    Ok(pow_c(PI, s) * pow_c(m as f64, s - 1.0) / gamma(s) * total)
}

/// `D_N(s) = ∏_{p|N} (p^{1-s} + 1)/(p^s + 1)`.
pub fn scattering_level_factor(ctx: &LevelContext, s: Complex64) -> Complex64 {
    ctx.primes
        .iter()
        .map(|&p| (pow_c(p as f64, c(1.0) - s) + 1.0) / (pow_c(p as f64, s) + 1.0))
        .product()
}

/// `φ_N(s) = (s/(s-1)) ξ(2s-1)/ξ(2s) D_N(s)`.
pub fn phi_scattering(ctx: &LevelContext, s: Complex64) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(Error::Pole("phi_scattering", "s = 1".into()));
    }
    let den = xi(s * 2.0);
    if den.norm() == 0.0 {
        return Err(Error::Pole("phi_scattering", format!("xi(2s) = 0 at s = {s}")));
    }
    let v = s / (s - 1.0) * xi(s * 2.0 - 1.0) / den * scattering_level_factor(ctx, s);
    if !v.is_finite() {
        return Err(Error::Pole("phi_scattering", format!("s = {s}")));
    }
    Ok(v)
}

/// Laurent constants of the Eisenstein series at `s = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitConstants {
    pub c_minus1: f64,
    pub c_0: f64,
    pub volume: f64,
}

impl LimitConstants {
    pub fn c_1(&self) -> f64 {
        -self.c_minus1
    }
}

pub fn limit_constants(ctx: &LevelContext) -> LimitConstants {
    let sigma = ctx.sigma_n as f64;
    let two_r = (1u64 << ctx.r) as f64;
    let c_minus1 = 3.0 * two_r / (PI * sigma);
    let sum: f64 = ctx
        .primes
        .iter()
        .map(|&p| {
            let p = p as f64;
            (1.0 + 3.0 * p) / (1.0 + p) * p.ln()
        })
        .sum();
    let c_0 = c_minus1 * (-0.5 * sum + 2.0 - 24.0 * ZETA_PRIME_MINUS_ONE - 2.0 * (4.0 * PI).ln());
    LimitConstants {
        c_minus1,
        c_0,
        volume: PI * sigma / (3.0 * two_r),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KroneckerCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub diff: f64,
}

/// `log|η(z)|` from the product, `terms` factors.
fn log_abs_eta(z: Complex64, terms: u64) -> f64 {
    let q = (Complex64::i() * 2.0 * PI * z).exp();
    let mut acc = -2.0 * PI * z.im / 24.0;
    let mut qn = q;
    for _ in 0..terms {
        acc += (c(1.0) - qn).norm().ln();
        qn *= q;
    }
    acc
}

/// Compares the non-singular part of the Laurent expansion at `s = 1`
/// (less `C_0`) with `-(1/vol) log((∏_{v|N} |η(vz)|^4)^{1/2^r} Im z)`.
pub fn kronecker_limit_check(ctx: &LevelContext, z: Complex64, terms: u64) -> Result<KroneckerCheck> {
    if z.im <= 0.0 {
        return Err(Error::Domain("z must lie in the upper half plane".into()));
    }
    if terms == 0 {
        return Err(Error::Domain("terms must be positive".into()));
    }
    let lc = limit_constants(ctx);
    let y = z.im;
    let q = (Complex64::i() * 2.0 * PI * z).exp();
    let mut series = 0.0;
    let mut qm = q;
    for m in 1..=terms {
        let s1 = sigma_complex(c(-1.0), m).re;
        let d = dn_factor(ctx, m, c(1.0)).re;
        series += s1 * d * 2.0 * qm.re;
        qm *= q;
    }
    let lhs = lc.c_1() * y.ln() + y + 6.0 / PI * series;
    let two_r = (1u64 << ctx.r) as f64;
    let log_prod: f64 = ctx
        .divisors()
        .iter()
        .map(|&v| 4.0 * log_abs_eta(z * v as f64, terms))
        .sum();
    let rhs = -(1.0 / lc.volume) * (log_prod / two_r + y.ln());
    Ok(KroneckerCheck {
        lhs,
        rhs,
        diff: (lhs - rhs).abs(),
    })
}

/// CSV rows `m,re_s,im_s,re_value,im_value` of `φ_N(m, s)` over a grid.
pub fn phi_csv(ctx: &LevelContext, ms: &[i64], ss: &[Complex64]) -> Result<String> {
    let mut out = String::from("m,re_s,im_s,re_value,im_value\n");
    for &m in ms {
        for &s in ss {
            let v = phi_coefficient(ctx, m, s)?;
            out.push_str(&format!("{m},{:e},{:e},{:e},{:e}\n", s.re, s.im, v.re, v.im));
        }
    }
    Ok(out)
}
