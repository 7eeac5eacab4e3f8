//! Exact row reduction of q-expansion matrices.
//!
//! Rows are held as primitive integer vectors (content divided out), which
//! keeps every entry an integer while staying proportional to the rational
//! row. A word-size modular pass picks a maximal independent subset of the
//! input rows in id order; only those rows are reduced, and every other row
//! is then checked exactly against the resulting basis. A row that fails the
//! check is promoted and the pass is repeated, so the result never depends
//! on the modulus.
//!
//! The default reduction is multimodular: the reduced rows are recovered by
//! rational reconstruction and accepted only after every selected input is
//! shown, exactly, to lie in their span; the transform is the inverse of the
//! pivot block, recovered as adjugate and determinant by Chinese
//! remaindering. The two integer eliminations are kept as alternatives.

mod modular;

use num_bigint::{BigInt, Sign};

use modular::{primes, rational_reconstruct, rref_mod, Crt, Mont};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::qseries::RationalSeries;

/// Modulus for the rank pass, `2^61 - 1`.
const MODULUS: u64 = (1 << 61) - 1;

/// How the reduction is carried out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Elimination {
    /// Reduce modulo many word-size primes and reconstruct.
    #[default]
    Multimodular,
    /// Integer Gauss–Jordan, dividing every updated row by its content.
    Primitive,
    /// Fraction-free Gauss–Jordan: exact division by the previous pivot.
    FractionFree,
}

/// A rational vector `num / den` with `den > 0` and no common factor
/// between `den` and all of `num`. Transform entries share a denominator of
/// thousands of digits, so they are kept in this form rather than reduced
/// one by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledVec {
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

/// `gcd(g, x)`, reducing `x` first when it is much longer than `g`.
fn content_gcd(g: &BigInt, x: &BigInt) -> BigInt {
    if x.bits() > g.bits() + 64 {
        g.gcd(&(x % g))
    } else {
        g.gcd(x)
    }
}

impl ScaledVec {
    pub fn new(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|x| *x = -&*x);
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = content_gcd(&g, x);
            }
        }
        if !g.is_one() {
            num.iter_mut().filter(|x| !x.is_zero()).for_each(|x| *x = &*x / &g);
            den /= &g;
        }
        ScaledVec { num, den }
    }

    pub fn from_rationals(v: &[BigRational]) -> Self {
        let (num, den) = integer_window(v);
        ScaledVec::new(num, den)
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn get(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Transform {
    /// Input indices the reduced rows are expressed over, increasing.
    pub sources: Vec<usize>,
    /// Entry `s` of row `i` multiplies input `sources[s]` in reduced row `i`.
    pub rows: Vec<ScaledVec>,
}

impl Transform {
    pub fn coeff(&self, i: usize, s: usize) -> BigRational {
        self.rows[i].get(s)
    }

    /// Row `i` as a dense vector over all `n` inputs.
    pub fn dense_row(&self, i: usize, n: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); n];
        for (s, &j) in self.sources.iter().enumerate() {
            out[j] = self.coeff(i, s);
        }
        out
    }
}

/// Fold the per-input scales of [`integerize`] into transform rows given
/// over the integer rows: returns the row `num[s]·scale_s / den`.
fn scaled_transform_row(num: &[BigInt], den: &BigInt, scales: &[&BigRational]) -> ScaledVec {
    let l = scales.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let out = num
        .iter()
        .zip(scales)
        .map(|(x, c)| x * c.numer() * (&l / c.denom()))
        .collect();
    ScaledVec::new(out, den * &l)
}

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    pub col_lo: i64,
    pub col_hi: i64,
    pub rows: Vec<RationalSeries>,
    pub pivot_exponents: Vec<i64>,
    pub transform: Transform,
    pub input_count: usize,
    pub zero_rows: usize,
    /// For each input outside `transform.sources`: its index and its
    /// coefficients on the reduced rows.
    pub dependencies: Vec<(usize, Vec<BigRational>)>,
    /// Combinations of inputs found to vanish during elimination itself
    /// (only when rows are eliminated without pre-selection).
    pub null_combinations: Vec<Vec<BigRational>>,
}

impl EchelonBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The reduced row whose pivot sits at exponent `e`.
    pub fn row_with_pivot(&self, e: i64) -> Option<usize> {
        self.pivot_exponents.iter().position(|&p| p == e)
    }

    /// Pole orders attained, i.e. `-e` for every negative pivot exponent.
    pub fn pole_orders(&self) -> Vec<u64> {
        self.pivot_exponents
            .iter()
            .filter(|&&e| e < 0)
            .map(|&e| (-e) as u64)
            .collect()
    }
}

/// A row of the working matrix: integer data and transform parts sharing one
/// implicit scale.
#[derive(Clone)]
struct WorkRow {
    data: Vec<BigInt>,
    aug: Vec<BigInt>,
}

impl WorkRow {
    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for x in self.data.iter().chain(self.aug.iter()) {
            if !x.is_zero() {
                g = g.gcd(x);
                if g.is_one() {
                    return;
                }
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for x in self.data.iter_mut().chain(self.aug.iter_mut()) {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

/// Primitive integer form of one input row over the column window, with the
/// rational factor `scale` such that `int_row = scale · row`.
fn integerize(row: &[BigRational]) -> (Vec<BigInt>, BigRational) {
    let (mut ints, den) = integer_window(row);
    let content = ints
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return (ints, BigRational::one());
    }
    if !content.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
    }
    (ints, BigRational::new(den, content))
}

fn mod_p(x: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    x.mod_floor(&m).to_u64().expect("reduced residue fits in u64")
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Greedy maximal independent subset (mod p) of the rows, in input order.
fn select_rows_mod_p(rows: &[Vec<BigInt>]) -> Vec<usize> {
    mod_p_basis(rows).0
}

/// Greedy independent rows (in input order) and their pivot columns mod p.
fn mod_p_basis(rows: &[Vec<BigInt>]) -> (Vec<usize>, Vec<usize>) {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut picked = Vec::new();
    let reduced = par::map(rows, |r| r.iter().map(mod_p).collect::<Vec<u64>>());
    for (i, mut v) in reduced.into_iter().enumerate() {
        for (c, b) in &basis {
            let f = v[*c];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    if *y != 0 {
                        *x = (*x + MODULUS - mul_mod(f, *y)) % MODULUS;
                    }
                }
            }
        }
        if let Some(c) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[c], MODULUS - 2);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            // Keep earlier basis rows clear at the new pivot.
            for (_, b) in basis.iter_mut() {
                let f = b[c];
                if f != 0 {
                    for (x, y) in b.iter_mut().zip(&v) {
                        if *y != 0 {
                            *x = (*x + MODULUS - mul_mod(f, *y)) % MODULUS;
                        }
                    }
                }
            }
            basis.push((c, v));
            picked.push(i);
        }
    }
    let pivots = basis.iter().map(|(c, _)| *c).collect();
    (picked, pivots)
}

/// Pivot exponents of the reduced form computed modulo a 61-bit prime,
/// sorted ascending. Agrees with the exact pivots unless the prime divides
/// one of the relevant minors; callers confirm with an exact pass.
pub fn pivots_mod_p(rows: &[RationalSeries], col_lo: i64, col_hi: i64) -> Result<Vec<i64>> {
    if let Some(r) = rows.iter().find(|r| r.trunc() < col_hi) {
        return Err(Error::InsufficientPrecision((col_hi - r.trunc()) as usize));
    }
    let ints = par::map(rows, |r| integerize(&r.window(col_lo, col_hi)).0);
    let mut piv: Vec<i64> = mod_p_basis(&ints).1.into_iter().map(|c| col_lo + c as i64).collect();
    piv.sort_unstable();
    Ok(piv)
}

/// Gauss–Jordan on the chosen rows. Returns the pivot rows in column order
/// with their pivot column, plus the number of rows that reduced to zero.
fn eliminate(mut work: Vec<WorkRow>, mode: Elimination) -> (Vec<(usize, WorkRow)>, Vec<WorkRow>) {
    let cols = work.first().map(|w| w.data.len()).unwrap_or(0);
    let mut done = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    for c in 0..cols {
        // Candidates are the not-yet-pivoted rows, kept in id order.
        let Some(off) = work[done..].iter().position(|w| !w.data[c].is_zero()) else {
            continue;
        };
        let pick = work.remove(done + off);
        work.insert(done, pick);
        let prow = work[done].clone();
        let pv = prow.data[c].clone();
        let skip = done;
        let prev_ref = &prev;
        let mut rest: Vec<(usize, &mut WorkRow)> = work.iter_mut().enumerate().collect();
        let update = |(i, w): &mut (usize, &mut WorkRow)| {
            if *i == skip {
                return;
            }
            let f = w.data[c].clone();
            if f.is_zero() && mode == Elimination::Primitive {
                return;
            }
            let apply = |x: &mut BigInt, y: &BigInt| {
                let mut v = &pv * &*x;
                if !f.is_zero() && !y.is_zero() {
                    v -= &f * y;
                }
                if mode == Elimination::FractionFree && !prev_ref.is_one() {
                    v /= prev_ref;
                }
                *x = v;
            };
            for (x, y) in w.data.iter_mut().zip(&prow.data) {
                apply(x, y);
            }
            for (x, y) in w.aug.iter_mut().zip(&prow.aug) {
                apply(x, y);
            }
            if mode == Elimination::Primitive {
                w.make_primitive();
            }
        };
        par::map_mut(&mut rest, update);
        if mode == Elimination::FractionFree {
            prev = pv;
        }
        pivots.push(c);
        done += 1;
    }
    let zero = work.split_off(done);
    let out = pivots.into_iter().zip(work).collect();
    (out, zero)
}

/// Options for [`rref_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct RrefOptions {
    pub elimination: Elimination,
    /// Eliminate every input row exactly instead of pre-selecting an
    /// independent subset modulo a word-size prime.
    pub skip_prepass: bool,
}

/// Reduced row echelon form over exponents `col_lo ..= col_hi`, columns
/// ordered from most negative exponent.
pub fn rref(rows: &[RationalSeries], col_lo: i64, col_hi: i64) -> Result<EchelonBasis> {
    rref_with(rows, col_lo, col_hi, RrefOptions::default())
}

pub fn rref_with(rows: &[RationalSeries], col_lo: i64, col_hi: i64, opts: RrefOptions) -> Result<EchelonBasis> {
    let n = rows.len();
    for (i, r) in rows.iter().enumerate() {
        if r.trunc() < col_hi {
            return Err(Error::Domain(format!(
                "row {i} is known only through q^{} but the window ends at q^{col_hi}",
                r.trunc()
            )));
        }
    }
    let ints: Vec<(Vec<BigInt>, BigRational)> = par::map(rows, |r| integerize(&r.window(col_lo, col_hi)));
    let data: Vec<Vec<BigInt>> = ints.iter().map(|(v, _)| v.clone()).collect();
    let scales: Vec<BigRational> = ints.into_iter().map(|(_, s)| s).collect();

    let mut selected: Vec<usize> = if opts.skip_prepass {
        (0..n).collect()
    } else {
        select_rows_mod_p(&data)
    };

    loop {
        let (basis, failures) = if opts.elimination == Elimination::Multimodular && !opts.skip_prepass {
            multimodular_pass(&data, &scales, &selected, col_lo, col_hi)?
        } else {
            exact_pass(&data, &scales, &selected, col_lo, col_hi, opts)?
        };
        if failures.is_empty() {
            verify_spot(rows, &basis)?;
            return Ok(basis);
        }
        selected.extend(failures);
        selected.sort_unstable();
    }
}

fn exact_pass(
    data: &[Vec<BigInt>],
    scales: &[BigRational],
    selected: &[usize],
    col_lo: i64,
    col_hi: i64,
    opts: RrefOptions,
) -> Result<(EchelonBasis, Vec<usize>)> {
    let n = data.len();
    let r = selected.len();
    let work: Vec<WorkRow> = selected
        .iter()
        .enumerate()
        .map(|(s, &j)| {
            let mut aug = vec![BigInt::zero(); r];
            aug[s] = BigInt::one();
            WorkRow {
                data: data[j].clone(),
                aug,
            }
        })
        .collect();
    let mode = match opts.elimination {
        Elimination::Multimodular => Elimination::Primitive,
        m => m,
    };
    let (pivots, vanished) = eliminate(work, mode);
    let rank = pivots.len();
    let mut rows_out = Vec::with_capacity(rank);
    let mut pivot_exponents = Vec::with_capacity(rank);
    let mut coeffs = Vec::with_capacity(rank);
    let mut numer_rows: Vec<(usize, Vec<BigInt>, BigInt)> = Vec::with_capacity(rank);
    for (c, w) in &pivots {
        let mut pv = w.data[*c].clone();
        let mut data = w.data.clone();
        let mut aug = w.aug.clone();
        if pv.sign() == Sign::Minus {
            pv = -pv;
            data.iter_mut().for_each(|x| *x = -&*x);
            aug.iter_mut().for_each(|x| *x = -&*x);
        }
        rows_out.push(RationalSeries::from_scaled(col_lo, col_hi, data.clone(), &pv));
        pivot_exponents.push(col_lo + *c as i64);
        let sc: Vec<&BigRational> = selected.iter().map(|&j| &scales[j]).collect();
        coeffs.push(scaled_transform_row(&aug, &pv, &sc));
        numer_rows.push((*c, data, pv));
    }

    let in_sel: std::collections::HashSet<usize> = selected.iter().copied().collect();
    let others: Vec<usize> = (0..n).filter(|j| !in_sel.contains(j)).collect();
    let failures = outside_span(data, &others, &numer_rows);

    let dependencies = dependency_coeffs(data, scales, &others, &numer_rows);

    let null_combinations = vanished
        .iter()
        .map(|w| {
            let mut v = vec![BigRational::zero(); n];
            for (a, &j) in w.aug.iter().zip(selected) {
                v[j] = BigRational::from_integer(a.clone()) * &scales[j];
            }
            normalize_last_nonzero(&mut v);
            v
        })
        .collect();
    let basis = EchelonBasis {
        col_lo,
        col_hi,
        rows: rows_out,
        pivot_exponents,
        transform: Transform {
            sources: selected.to_vec(),
            rows: coeffs,
        },
        input_count: n,
        zero_rows: n - rank,
        dependencies,
        null_combinations,
    };
    Ok((basis, failures))
}

/// A reduced row as `(pivot column, numerators, denominator)`.
type NumerRow = (usize, Vec<BigInt>, BigInt);

/// Indices among `candidates` whose rows do not equal `Σ_k v[c_k]·B_k`.
/// At pivot columns the identity holds by construction, so only the free
/// columns are compared.
fn outside_span(data: &[Vec<BigInt>], candidates: &[usize], rows: &[NumerRow]) -> Vec<usize> {
    let lcm = rows.iter().fold(BigInt::one(), |acc, (_, _, d)| acc.lcm(d));
    let scaled: Vec<(usize, Vec<BigInt>)> = rows
        .iter()
        .map(|(c, v, d)| {
            let f = &lcm / d;
            (*c, v.iter().map(|x| x * &f).collect())
        })
        .collect();
    let cols = data.first().map(Vec::len).unwrap_or(0);
    let pivot_cols: std::collections::HashSet<usize> = rows.iter().map(|(c, _, _)| *c).collect();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let checks = par::map(candidates, |&j| {
        let v = &data[j];
        let ok = free_cols.iter().all(|&col| {
            let mut acc = BigInt::zero();
            for (c, b) in &scaled {
                if !v[*c].is_zero() && !b[col].is_zero() {
                    acc += &v[*c] * &b[col];
                }
            }
            acc == &v[col] * &lcm
        });
        (j, ok)
    });
    checks.into_iter().filter(|(_, ok)| !ok).map(|(j, _)| j).collect()
}

/// Coefficients of each listed input on the reduced rows.
fn dependency_coeffs(
    data: &[Vec<BigInt>],
    scales: &[BigRational],
    others: &[usize],
    rows: &[NumerRow],
) -> Vec<(usize, Vec<BigRational>)> {
    others
        .iter()
        .map(|&j| {
            let c = rows
                .iter()
                .map(|(col, _, _)| BigRational::from_integer(data[j][*col].clone()) / &scales[j])
                .collect();
            (j, c)
        })
        .collect()
}

/// Upper limit on the number of primes before reconstruction gives up.
const MAX_PRIMES: usize = 1 << 14;

type Digits = (Sign, Vec<u64>);

fn residues(m: &Mont, row: &[Digits]) -> Vec<u64> {
    row.iter().map(|(s, d)| m.reduce(*s, d)).collect()
}

/// Reduced rows from residues modulo `primes`, or `None` if some entry has
/// no small enough rational preimage yet.
fn reconstruct_rows(primes: &[u64], res: &[Vec<Vec<u64>>], pivots: &[usize], cols: usize) -> Option<Vec<NumerRow>> {
    let crt = Crt::new(primes);
    let modulus = BigInt::from(crt.modulus().clone());
    let is_pivot: Vec<bool> = (0..cols).map(|c| pivots.contains(&c)).collect();
    let rows = par::map(&(0..pivots.len()).collect::<Vec<_>>(), |&k| {
        let c = pivots[k];
        let mut entries = vec![BigRational::zero(); cols];
        entries[c] = BigRational::one();
        for col in c + 1..cols {
            if is_pivot[col] {
                continue;
            }
            let u: Vec<u64> = res.iter().map(|m| m[k][col]).collect();
            let (num, den) = rational_reconstruct(&crt.combine(&u), &modulus)?;
            entries[col] = BigRational::new(num, den);
        }
        let (num, den) = integer_window(&entries);
        Some((c, num, den))
    });
    rows.into_iter().collect()
}

fn multimodular_pass(
    data: &[Vec<BigInt>],
    scales: &[BigRational],
    selected: &[usize],
    col_lo: i64,
    col_hi: i64,
) -> Result<(EchelonBasis, Vec<usize>)> {
    let n = data.len();
    let r = selected.len();
    let cols = data.first().map(Vec::len).unwrap_or(0);
    let digits: Vec<Vec<Digits>> = selected
        .iter()
        .map(|&j| data[j].iter().map(|x| x.to_u64_digits()).collect())
        .collect();
    let stall = || Error::Exactness("multimodular reconstruction did not converge".into());

    // Reduced rows: reconstruct from a growing prime set until every
    // selected input lies exactly in their span. A prime whose pivots come
    // later than another's divides some minor and is dropped.
    let mut pivots: Option<Vec<usize>> = None;
    let mut used: Vec<u64> = Vec::new();
    let mut res: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut cursor = 0;
    let mut want = 2;
    let reduced: Vec<NumerRow> = loop {
        if r == 0 {
            break Vec::new();
        }
        let batch = primes(cursor + want)[cursor..].to_vec();
        cursor += want;
        let results = par::map(&batch, |&p| {
            let m = Mont::new(p);
            let mut rows: Vec<Vec<u64>> = digits.iter().map(|row| residues(&m, row)).collect();
            let (piv, _) = rref_mod(&m, &mut rows);
            rows.iter_mut()
                .for_each(|row| row.iter_mut().for_each(|x| *x = m.from_mont(*x)));
            (p, piv, rows)
        });
        for (p, piv, rows) in results {
            if piv.len() < r {
                continue;
            }
            match pivots.as_ref().map(|q| piv.cmp(q)) {
                Some(std::cmp::Ordering::Greater) => continue,
                Some(std::cmp::Ordering::Equal) => {}
                _ => {
                    pivots = Some(piv);
                    used.clear();
                    res.clear();
                }
            }
            used.push(p);
            res.push(rows);
        }
        if let Some(piv) = &pivots {
            if let Some(rows) = reconstruct_rows(&used, &res, piv, cols) {
                if outside_span(data, selected, &rows).is_empty() {
                    break rows;
                }
            }
        }
        if cursor >= MAX_PRIMES {
            return Err(stall());
        }
        want = used.len().max(2);
    };
    drop(res);

    // Transform: the inverse of the pivot block, as adjugate over
    // determinant. Accepted once two further primes agree with it.
    let block: Vec<Vec<Digits>> = digits
        .iter()
        .map(|row| reduced.iter().map(|(c, _, _)| row[*c].clone()).collect())
        .collect();
    let inverse_mod = |p: u64| -> Option<(Vec<u64>, u64)> {
        let m = Mont::new(p);
        let one = m.to_mont(1);
        let mut rows: Vec<Vec<u64>> = block
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut v = residues(&m, row);
                v.resize(2 * r, 0);
                v[r + i] = one;
                v
            })
            .collect();
        let (piv, det) = rref_mod(&m, &mut rows);
        if piv.len() < r || piv[r - 1] >= r {
            return None;
        }
        let adj = rows
            .iter()
            .flat_map(|row| row[r..].iter().map(|&x| m.from_mont(m.mul(x, det))))
            .collect();
        Some((adj, m.from_mont(det)))
    };
    let residue = |x: &BigInt, q: u64| {
        let m = Mont::new(q);
        let (sign, dg) = x.to_u64_digits();
        m.from_mont(m.reduce(sign, &dg))
    };
    let mut good: Vec<(u64, Vec<u64>, u64)> = Vec::new();
    let mut cursor = 0;
    // Grow the prime set by an eighth at a time until the determinant is
    // stable, then reconstruct the adjugate with a small margin, growing
    // again if two further primes disagree.
    let mut target = 16;
    let mut det_stable = false;
    let (mut adj, mut det) = loop {
        if r == 0 {
            break (Vec::new(), BigInt::one());
        }
        while good.len() < target {
            if cursor >= MAX_PRIMES {
                return Err(stall());
            }
            let batch = primes(cursor + target - good.len())[cursor..].to_vec();
            cursor += batch.len();
            good.extend(
                par::map(&batch, |&p| inverse_mod(p).map(|(a, d)| (p, a, d)))
                    .into_iter()
                    .flatten(),
            );
        }
        let batch = primes(cursor + 2)[cursor..].to_vec();
        cursor += 2;
        let checks: Vec<(u64, Vec<u64>, u64)> = par::map(&batch, |&p| inverse_mod(p).map(|(a, d)| (p, a, d)))
            .into_iter()
            .flatten()
            .collect();
        let ps: Vec<u64> = good.iter().map(|g| g.0).collect();
        let crt = Crt::new(&ps);
        let det = crt.combine(&good.iter().map(|g| g.2).collect::<Vec<_>>());
        let det_ok = !checks.is_empty() && checks.iter().all(|(q, _, d)| residue(&det, *q) == *d);
        if !det_stable {
            if det_ok {
                det_stable = true;
                target = good.len() + good.len() / 16 + 4;
            } else {
                target = good.len() + good.len() / 8 + 2;
            }
            good.extend(checks);
            continue;
        }
        let adj: Vec<BigInt> = par::map(&(0..r * r).collect::<Vec<_>>(), |&e| {
            crt.combine(&good.iter().map(|g| g.1[e]).collect::<Vec<_>>())
        });
        let agrees = |(q, a, d): &(u64, Vec<u64>, u64)| {
            residue(&det, *q) == *d && adj.iter().zip(a).all(|(x, &y)| residue(x, *q) == y)
        };
        if det_ok && checks.iter().all(agrees) {
            break (adj, det);
        }
        good.extend(checks);
        target = good.len() + good.len() / 4;
    };
    if det.is_negative() {
        det = -det;
        adj.iter_mut().for_each(|x| *x = -&*x);
    }
    let sc: Vec<&BigRational> = selected.iter().map(|&j| &scales[j]).collect();
    let chunk = r.max(1);
    let transform_rows = par::map(&adj.chunks(chunk).collect::<Vec<_>>(), |row| {
        scaled_transform_row(row, &det, &sc)
    });

    let in_sel: std::collections::HashSet<usize> = selected.iter().copied().collect();
    let others: Vec<usize> = (0..n).filter(|j| !in_sel.contains(j)).collect();
    let failures = outside_span(data, &others, &reduced);
    let dependencies = dependency_coeffs(data, scales, &others, &reduced);
    let basis = EchelonBasis {
        col_lo,
        col_hi,
        rows: reduced
            .iter()
            .map(|(_, num, den)| RationalSeries::from_scaled(col_lo, col_hi, num.clone(), den))
            .collect(),
        pivot_exponents: reduced.iter().map(|(c, _, _)| col_lo + *c as i64).collect(),
        transform: Transform {
            sources: selected.to_vec(),
            rows: transform_rows,
        },
        input_count: n,
        zero_rows: n - r,
        dependencies,
        null_combinations: Vec::new(),
    };
    Ok((basis, failures))
}

/// Deterministic pseudo-random indices for spot checks.
fn spot_indices(count: usize, picks: usize, seed: u64) -> Vec<usize> {
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    let mut out = Vec::new();
    for _ in 0..picks.min(count) {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        out.push(((state >> 33) as usize) % count);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Check `transform · A = B` exactly on a few reduced rows.
pub fn verify_spot(inputs: &[RationalSeries], basis: &EchelonBasis) -> Result<()> {
    let picks = spot_indices(basis.rows.len(), 5, basis.rows.len() as u64 * 31 + inputs.len() as u64);
    for i in picks {
        check_row(inputs, basis, i)?;
    }
    Ok(())
}

/// Check `transform · A = B` exactly on every reduced row.
pub fn verify_full(inputs: &[RationalSeries], basis: &EchelonBasis) -> Result<()> {
    for i in 0..basis.rows.len() {
        check_row(inputs, basis, i)?;
    }
    Ok(())
}

fn check_row(inputs: &[RationalSeries], basis: &EchelonBasis, i: usize) -> Result<()> {
    let (lo, hi) = (basis.col_lo, basis.col_hi);
    let t = &basis.transform.rows[i];
    // With inputs a_s = num_s / d_s and D = lcm d_s, the row must satisfy
    // Σ_s t_s·num_s·(D/d_s) = t.den·D·B_i.
    let terms: Vec<(&BigInt, Vec<BigInt>, BigInt)> = basis
        .transform
        .sources
        .iter()
        .zip(&t.num)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&j, c)| {
            let (num, den) = integer_window(&inputs[j].window(lo, hi));
            (c, num, den)
        })
        .collect();
    let d = terms.iter().fold(BigInt::one(), |acc, (_, _, den)| acc.lcm(den));
    let scale = &t.den * &d;
    let target = basis.rows[i].window(lo, hi);
    for (col, want) in target.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (ts, num, den) in &terms {
            if !num[col].is_zero() {
                acc += *ts * &num[col] * (&d / den);
            }
        }
        if acc * want.denom() != want.numer() * &scale {
            return Err(Error::Exactness(format!(
                "transform row {i} disagrees with the reduced row at q^{}",
                lo + col as i64
            )));
        }
    }
    Ok(())
}

fn integer_window(w: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = w.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = w.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (num, den)
}

/// Basis of `{c : Σ c_i f_i = 0 on [col_lo, col_hi]}`.
pub fn kernel(columns: &[RationalSeries], col_lo: i64, col_hi: i64) -> Result<Vec<Vec<BigRational>>> {
    let basis = rref(columns, col_lo, col_hi)?;
    Ok(kernel_from_basis(&basis))
}

fn normalize_last_nonzero(v: &mut [BigRational]) {
    if let Some(last) = v.iter().rev().find(|x| !x.is_zero()).cloned() {
        v.iter_mut().for_each(|x| *x = &*x / &last);
    }
}

/// Kernel vectors implied by the dependencies recorded in a basis. Each
/// vector has coefficient 1 on its last nonzero input.
pub fn kernel_from_basis(basis: &EchelonBasis) -> Vec<Vec<BigRational>> {
    let n = basis.input_count;
    let mut out: Vec<Vec<BigRational>> = basis
        .dependencies
        .iter()
        .map(|(j, c)| {
            let mut v = vec![BigRational::zero(); n];
            v[*j] = BigRational::one();
            for (k, ck) in c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                let row = &basis.transform.rows[k];
                for (s, &src) in basis.transform.sources.iter().enumerate() {
                    if !row.num[s].is_zero() {
                        v[src] -= ck * row.get(s);
                    }
                }
            }
            v
        })
        .collect();
    out.extend(basis.null_combinations.iter().cloned());
    out
}

/// Largest bit length among the reduced rows and the transform (numerators
/// and denominators alike).
pub fn max_bits(basis: &EchelonBasis) -> u64 {
    let rows = basis
        .rows
        .iter()
        .flat_map(|r| r.coeffs().iter())
        .map(|q| q.numer().bits().max(q.denom().bits()))
        .max()
        .unwrap_or(0);
    let tr = basis
        .transform
        .rows
        .iter()
        .flat_map(|t| t.num.iter().map(|x| x.bits()).chain(std::iter::once(t.den.bits())))
        .max()
        .unwrap_or(0);
    rows.max(tr)
}
