//! Elementary arithmetic functions over exact integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime factorization `value = ∏ p^e` with primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Factor `n` by trial division. Inputs are small (well below 10^12).
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { value: n, factors })
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    match factorize(n) {
        Ok(f) => f.divisors(),
        Err(_) => Vec::new(),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Rational power `d^a` for a positive base and any integer exponent.
pub fn rational_pow(d: u64, a: i64) -> BigRational {
    let base = BigInt::from(d);
    let mag = num_traits::pow(base, a.unsigned_abs() as usize);
    if a >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Generalized divisor sum `σ_a(n) = Σ_{d|n} d^a`, exact.
pub fn sigma(a: i64, n: u64) -> BigRational {
    assert!(n >= 1, "sigma requires n >= 1");
    divisors(n)
        .into_iter()
        .fold(BigRational::zero(), |acc, d| acc + rational_pow(d, a))
}

/// `σ_a(n)` for `a >= 0` as an integer.
pub fn sigma_int(a: u32, n: u64) -> BigInt {
    divisors(n).into_iter().fold(BigInt::zero(), |acc, d| {
        acc + num_traits::pow(BigInt::from(d), a as usize)
    })
}

pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "moebius requires n >= 1");
    let f = factorize(n).expect("n >= 1");
    if !f.is_square_free() {
        return 0;
    }
    if f.factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let f = factorize(n).expect("n >= 1");
    f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0 .. B_kmax` with `B_1 = -1/2`, from the recurrence
/// `Σ_{j=0}^{k} C(k+1, j) B_j = 0`.
pub fn bernoulli_table(kmax: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(kmax + 1);
    b.push(BigRational::one());
    for k in 1..=kmax {
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(k as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
    }
    b
}

/// `B_k` for even `k` (and `k = 1`); odd `k > 1` is rejected.
pub fn bernoulli(k: u32) -> Result<BigRational> {
    if k > 1 && k % 2 == 1 {
        return Err(Error::Domain(format!("bernoulli index {k} is odd")));
    }
    Ok(bernoulli_table(k as usize).pop().expect("non-empty table"))
}

/// Exact `p`-adic valuation of `m`.
pub fn valuation(mut m: u64, p: u64) -> u32 {
    let mut e = 0;
    while m > 0 && m % p == 0 {
        m /= p;
        e += 1;
    }
    e
}

/// Format a rational as `num/den` or `num` when integral.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `num/den` or `num`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Denominator-free test for a rational.
pub fn is_integral(q: &BigRational) -> bool {
    q.denom().is_one()
}
