//! Word-size prime arithmetic for the multimodular elimination: Montgomery
//! multiplication, a prime supply below `2^62`, Gauss–Jordan modulo one
//! prime, Chinese remaindering and rational reconstruction.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arithmetic modulo an odd `p < 2^63` in Montgomery form (`R = 2^64`).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Mont {
    pub p: u64,
    /// `-p^{-1} mod 2^64`.
    neg_inv: u64,
    /// `R^2 mod p`.
    r2: u64,
}

impl Mont {
    pub fn new(p: u64) -> Self {
        debug_assert!(p % 2 == 1 && p < 1 << 63);
        let mut inv = p;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Mont {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    /// `a·b·R^{-1} mod p`.
    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let t = a as u128 * b as u128;
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub fn from_mont(&self, a: u64) -> u64 {
        self.mul(a, 1)
    }

    /// Power of a Montgomery-form base, in Montgomery form.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut r = self.to_mont(1);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Residue (Montgomery form) of an integer given by its sign and
    /// little-endian base-2^64 digits.
    pub fn reduce(&self, sign: Sign, digits: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            // acc·2^64 + d, still in standard form.
            acc = self.mul(acc, self.r2);
            let d = d % self.p;
            acc = if acc >= self.p - d { acc - (self.p - d) } else { acc + d };
        }
        let m = self.to_mont(acc);
        if sign == Sign::Minus && m != 0 {
            self.p - m
        } else {
            m
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n % p == 0 {
            return n == p;
        }
    }
    let m = Mont::new(n);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let one = m.to_mont(1);
    let minus_one = m.to_mont(n - 1);
    // These bases are deterministic for all 64-bit inputs.
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = m.pow(m.to_mont(a), d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// The first `count` primes below `2^62`, descending.
pub(crate) fn primes(count: usize) -> Vec<u64> {
    let mut list = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    let mut c = list.last().copied().unwrap_or((1 << 62) + 1);
    while list.len() < count {
        c -= 2;
        if is_prime_u64(c) {
            list.push(c);
        }
    }
    list[..count].to_vec()
}

/// In-place Gauss–Jordan on Montgomery-form rows. Pivots are taken in
/// column order from the first eligible row; pivot rows are scaled to 1.
/// Returns the pivot columns and the determinant factor
/// `±∏ pivot values` (Montgomery form).
pub(crate) fn rref_mod(m: &Mont, rows: &mut [Vec<u64>]) -> (Vec<usize>, u64) {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    let mut done = 0;
    let mut det = m.to_mont(1);
    let mut pivots = Vec::new();
    for c in 0..width {
        if done == rows.len() {
            break;
        }
        let Some(off) = rows[done..].iter().position(|r| r[c] != 0) else {
            continue;
        };
        if off != 0 {
            rows.swap(done, done + off);
            det = m.sub(0, det);
        }
        let pv = rows[done][c];
        det = m.mul(det, pv);
        let inv = m.inv(pv);
        for x in rows[done][c..].iter_mut() {
            *x = m.mul(*x, inv);
        }
        let (head, tail) = rows.split_at_mut(done);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for r in head.iter_mut().chain(tail.iter_mut()) {
            let f = r[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in r[c..].iter_mut().zip(&prow[c..]) {
                if y != 0 {
                    *x = m.sub(*x, m.mul(f, y));
                }
            }
        }
        pivots.push(c);
        done += 1;
    }
    (pivots, det)
}

/// Chinese remaindering for many residue vectors over one prime set.
pub(crate) struct Crt {
    /// Product tree, leaves first.
    levels: Vec<Vec<BigUint>>,
    /// `w_i = (M/p_i)^{-1} mod p_i`.
    weights: Vec<u64>,
    primes: Vec<u64>,
}

impl Crt {
    pub fn new(primes: &[u64]) -> Self {
        let weights = primes
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let m = Mont::new(p);
                let mut acc = m.to_mont(1);
                for (j, &q) in primes.iter().enumerate() {
                    if j != i {
                        acc = m.mul(acc, m.to_mont(q));
                    }
                }
                m.from_mont(m.inv(acc))
            })
            .collect();
        let mut levels = vec![primes.iter().map(|&p| BigUint::from(p)).collect::<Vec<_>>()];
        while levels.last().expect("leaves").len() > 1 {
            let prev = levels.last().expect("level");
            let next = prev
                .chunks(2)
                .map(|c| if c.len() == 2 { &c[0] * &c[1] } else { c[0].clone() })
                .collect();
            levels.push(next);
        }
        Crt {
            levels,
            weights,
            primes: primes.to_vec(),
        }
    }

    pub fn modulus(&self) -> &BigUint {
        &self.levels.last().expect("root")[0]
    }

    /// The integer in `(-M/2, M/2]` with the given standard-form residues.
    pub fn combine(&self, residues: &[u64]) -> BigInt {
        // S = Σ c_i·(M/p_i) built bottom-up as S_L·M_R + S_R·M_L.
        let mut vals: Vec<BigUint> = residues
            .iter()
            .zip(&self.weights)
            .zip(&self.primes)
            .map(|((&r, &w), &p)| BigUint::from(((r as u128 * w as u128) % p as u128) as u64))
            .collect();
        for level in &self.levels[..self.levels.len() - 1] {
            vals = vals
                .chunks(2)
                .zip(level.chunks(2))
                .map(|(v, m)| {
                    if v.len() == 2 {
                        &v[0] * &m[1] + &v[1] * &m[0]
                    } else {
                        v[0].clone()
                    }
                })
                .collect();
        }
        let modulus = self.modulus();
        let x = vals.pop().unwrap_or_default() % modulus;
        if &x + &x > *modulus {
            BigInt::from_biguint(Sign::Minus, modulus - x)
        } else {
            BigInt::from(x)
        }
    }
}

/// `n/d` with `|n|, d <= sqrt(M/2)` and `n ≡ u·d (mod M)`, if one exists.
pub(crate) fn rational_reconstruct(u: &BigInt, modulus: &BigInt) -> Option<(BigInt, BigInt)> {
    let u = u.mod_floor(modulus);
    if u.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let bound = (modulus >> 1usize).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), u);
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    if s1.is_negative() {
        Some((-r1, -s1))
    } else {
        Some((r1, s1))
    }
}
