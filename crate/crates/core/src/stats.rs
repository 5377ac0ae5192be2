//! Rank, crank and `j`-rank statistics and their moments.
//!
//! Counting tables `N_j(m, n)` are produced from the single-`m` generating
//! functions by default; enumeration over partitions is kept as an
//! independent source for cross-checks. For `j = 1` the counts are those of
//! the crank generating function, which differ from the combinatorial crank
//! only at `n = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{generalized_binomial, BiSeries, LaurentPoly};
use crate::partitions::{durfee_sides, for_each_partition, Partition};
use crate::series::{self, exact_div, TruncSeries};

/// Largest part minus number of parts.
pub fn rank(p: &Partition) -> Result<i64> {
    rank_of(p.parts())
}

fn rank_of(parts: &[u32]) -> Result<i64> {
    let first = parts.first().ok_or(Error::EmptyPartition)?;
    Ok(*first as i64 - parts.len() as i64)
}

/// Largest part if there are no ones; otherwise the number of parts larger
/// than the number of ones, minus the number of ones.
pub fn crank(p: &Partition) -> Result<i64> {
    crank_of(p.parts())
}

fn crank_of(parts: &[u32]) -> Result<i64> {
    let first = parts.first().ok_or(Error::EmptyPartition)?;
    let ones = parts.iter().filter(|&&x| x == 1).count() as i64;
    if ones == 0 {
        return Ok(*first as i64);
    }
    let larger = parts.iter().filter(|&&x| x as i64 > ones).count() as i64;
    Ok(larger - ones)
}

/// The `j`-rank for `j >= 2`, or `None` when the partition has fewer than
/// `j - 1` successive Durfee squares.
///
/// Counts the columns right of the first Durfee square whose length is at
/// most `n_{j-1}`, minus the parts below the `(j-1)`st Durfee square.
pub fn jrank(p: &Partition, j: usize) -> Result<Option<i64>> {
    if j < 2 {
        return Err(Error::InvalidParameter("the j-rank needs j >= 2".into()));
    }
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(jrank_of(p.parts(), j))
}

fn jrank_of(parts: &[u32], j: usize) -> Option<i64> {
    let sides = durfee_sides(parts);
    if sides.len() < j - 1 {
        return None;
    }
    let first = sides[0] as i64;
    let last = sides[j - 2] as usize;
    let rows: usize = sides[..j - 1].iter().map(|&d| d as usize).sum();
    let below = (parts.len() - rows) as i64;
    // Column c has length <= last iff c exceeds the part in row last + 1.
    let cutoff = parts.get(last).copied().unwrap_or(0) as i64;
    let columns = parts[0] as i64 - first.max(cutoff);
    Some(columns - below)
}

/// Generating function of `N_j(m, n)` in `n`:
/// `(1/(q)_inf) sum_{n>=1} (-1)^{n-1} q^{n((2j-1)n-1)/2 + |m|n} (1 - q^n)`.
/// For `j = 1` this is the crank count `M(m, n)`, for `j = 2` the rank count.
pub fn gf_njm(j: usize, m: i64, order: usize) -> Result<TruncSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let a = 2 * j - 1;
    let am = m.unsigned_abs() as usize;
    let mut num = TruncSeries::zero(order);
    for n in 1.. {
        let e = n * (a * n - 1) / 2 + am * n;
        if e > order {
            break;
        }
        let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        num.add_assign_ref(&TruncSeries::monomial(sign, e, order).mul_one_minus_q_pow(n));
    }
    Ok(num.mul(&series::partition_series(order)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Combinatorial,
    GeneratingFunction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentKind {
    /// `N_j(m, n)`.
    Count { m: i64 },
    /// `sum_m m^t N_j(m, n)`.
    Moment { t: u32 },
    /// `sum_m binom(m + floor((k-1)/2), k) N_j(m, n)`.
    Symmetrized { k: u32 },
}

/// One column of values indexed by `n = 0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable {
    pub j: usize,
    pub kind: MomentKind,
    pub source: Source,
    pub values: Vec<BigInt>,
}

/// All counts `N_j(m, n)` for `n <= order`, stored as `sum N_j(m,n) z^m q^n`.
#[derive(Debug, Clone)]
pub struct CountTable {
    j: usize,
    source: Source,
    counts: BiSeries,
}

impl CountTable {
    /// Counts from the generating functions, `|m| <= order`.
    pub fn from_gf(j: usize, order: usize) -> Result<Self> {
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for m in 0..=order as i64 {
            let g = gf_njm(j, m, order)?;
            for (n, c) in g.coeffs().iter().enumerate() {
                coeffs[n].add_term(m, c.clone());
                if m != 0 {
                    coeffs[n].add_term(-m, c.clone());
                }
            }
        }
        Ok(Self {
            j,
            source: Source::GeneratingFunction,
            counts: BiSeries::from_coeffs(coeffs),
        })
    }

    /// Counts by enumerating partitions: the crank for `j = 1`, otherwise the
    /// `j`-rank over partitions with at least `j - 1` Durfee squares. The
    /// empty partition is not counted.
    pub fn from_partitions(j: usize, order: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidParameter("j must be at least 1".into()));
        }
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for (n, row) in coeffs.iter_mut().enumerate().skip(1) {
            for_each_partition(n as u32, |parts| {
                let stat = if j == 1 {
                    crank_of(parts).ok()
                } else {
                    jrank_of(parts, j)
                };
                if let Some(m) = stat {
                    row.add_term(m, BigInt::one());
                }
            });
        }
        Ok(Self {
            j,
            source: Source::Combinatorial,
            counts: BiSeries::from_coeffs(coeffs),
        })
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn order(&self) -> usize {
        self.counts.order()
    }

    pub fn as_bi_series(&self) -> &BiSeries {
        &self.counts
    }

    pub fn count(&self, m: i64, n: usize) -> BigInt {
        self.counts.coeffs()[n].coefficient(m)
    }

    /// `sum_m m^t N_j(m, n)`, summed over every `m`. Odd moments vanish for
    /// the generating-function counts by symmetry; the combinatorial crank
    /// breaks that symmetry at `n = 1`.
    pub fn moment(&self, t: u32, n: usize) -> BigInt {
        self.counts.coeffs()[n].weighted_sum(|m| BigInt::from(m).pow(t))
    }

    /// `sum_m binom(m + floor((k-1)/2), k) N_j(m, n)`.
    pub fn sym_mu(&self, k: u32, n: usize) -> BigInt {
        assert!(k >= 1, "symmetrized moments need k >= 1");
        let shift = ((k - 1) / 2) as i64;
        self.counts.coeffs()[n].weighted_sum(|m| generalized_binomial(m + shift, k))
    }

    pub fn table(&self, kind: MomentKind) -> MomentTable {
        let values = (0..=self.order())
            .map(|n| match kind {
                MomentKind::Count { m } => self.count(m, n),
                MomentKind::Moment { t } => self.moment(t, n),
                MomentKind::Symmetrized { k } => self.sym_mu(k, n),
            })
            .collect();
        MomentTable {
            j: self.j,
            kind,
            source: self.source,
            values,
        }
    }

    /// `_jN_{2k}(n)` through symmetrized moments:
    /// `sum_{t=1}^{k} (2t)! S*(k, t) _jmu_{2t}(n)`.
    pub fn moment_via_sym(&self, k: u32, n: usize, sstar: &StirlingStarTable) -> BigInt {
        assert!(k >= 1 && k as usize <= sstar.max(), "S*({k}, .) not tabulated");
        (1..=k)
            .map(|t| factorial(2 * t) * sstar.get(k as usize, t as usize) * self.sym_mu(2 * t, n))
            .sum()
    }
}

/// `_jN_t(n)` from the generating-function counts.
pub fn moment(j: usize, t: u32, n: usize) -> Result<BigInt> {
    Ok(CountTable::from_gf(j, n)?.moment(t, n))
}

/// `_jmu_k(n)` from the generating-function counts.
pub fn sym_mu(j: usize, k: u32, n: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(CountTable::from_gf(j, n)?.sym_mu(k, n))
}

/// Closed form of `sum_n _jmu_{2k}(n) q^n`. The bilateral sum is folded onto
/// `n >= 1`, so each term reads
/// `(-1)^{n-1} (q^{n((2j-1)n+1)/2 + kn} + q^{n((2j-1)n-1)/2 + kn}) / (1-q^n)^{2k}`.
pub fn gf_sym_mu_closed(j: usize, k: u32, order: usize) -> Result<TruncSeries> {
    if j == 0 || k == 0 {
        return Err(Error::InvalidParameter("j and k must be at least 1".into()));
    }
    let a = 2 * j - 1;
    let k = k as usize;
    let mut sum = TruncSeries::zero(order);
    for n in 1..=order {
        let low = n * (a * n - 1) / 2 + k * n;
        if low > order {
            break;
        }
        let high = low + n;
        let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let mut term = TruncSeries::monomial(sign.clone(), low, order);
        if high <= order {
            term.add_assign_ref(&TruncSeries::monomial(sign, high, order));
        }
        for _ in 0..2 * k {
            term = term.div_one_minus_q_pow(n);
        }
        sum.add_assign_ref(&term);
    }
    Ok(sum.mul(&series::partition_series(order)))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// Coefficients (by power of `x`) of `g_k(x) = prod_{i=0}^{k-1} (x^2 - i^2)`.
pub fn g_poly(k: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for i in 0..k {
        let sq = BigInt::from((i * i) as u64);
        let mut next = vec![BigInt::zero(); poly.len() + 2];
        for (e, c) in poly.iter().enumerate() {
            next[e + 2] += c;
            next[e] -= c * &sq;
        }
        poly = next;
    }
    poly
}

fn eval_poly(poly: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// `S*(n, k)` for `1 <= k <= n <= max`, defined by
/// `x^{2n} = sum_k S*(n, k) g_k(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingStarTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingStarTable {
    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

/// Solves the triangular change of basis by back-substitution. Every `g_k`
/// is monic of degree `2k`, so each step reads off one coefficient.
pub fn stirling_star(max: usize) -> Result<StirlingStarTable> {
    let basis: Vec<Vec<BigInt>> = (0..=max).map(g_poly).collect();
    let mut rows = vec![Vec::new()];
    for n in 1..=max {
        let mut rem = vec![BigInt::zero(); 2 * n + 1];
        rem[2 * n] = BigInt::one();
        let mut row = vec![BigInt::zero(); n + 1];
        for k in (1..=n).rev() {
            let c = exact_div(&rem[2 * k], &BigInt::one())?;
            for (e, g) in basis[k].iter().enumerate() {
                rem[e] -= &c * g;
            }
            row[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision {
                value: format!("x^{}", 2 * n),
                divisor: "g-basis".into(),
            });
        }
        if row[1..].iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "S*({n}, .) has a non-positive entry"
            )));
        }
        rows.push(row);
    }
    Ok(StirlingStarTable { rows })
}

/// `_jmu_{2k}(n)` written as `(1/(2k)!) sum_m g_k(m) N_j(m, n)`.
pub fn sym_mu_via_g(table: &CountTable, k: u32, n: usize) -> Result<BigInt> {
    let g = g_poly(k as usize);
    let total = table.as_bi_series().coeffs()[n].weighted_sum(|m| eval_poly(&g, m));
    exact_div(&total, &factorial(2 * k))
}
