//! The spt families `spt`, `spt_k`, `Spt_j` and `jspt_k`.
//!
//! Each family is available by generating function, by summing a
//! combinatorial weight over partitions, and by rank/crank moments. The
//! generating functions are nested sums; they share the kernel
//! `G_k(a) = sum_{n_k >= ... >= n_2 >= a} q^{a + n_2 + ... + n_k} / prod (1 - q^{n_i})^2`,
//! which is built once per `(k, order)` from suffix sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chains::for_each_square_chain;
use crate::error::{Error, Result};
use crate::laurent::generalized_binomial;
use crate::partitions::{for_each_partition, increasing_marks, lower_durfee_sides, Partition};
use crate::series::{self, exact_div, GaussTable, TruncSeries};
use crate::stats::CountTable;

/// Number of occurrences of the smallest part, summed over partitions of `n`.
pub fn spt_weight(n: u32) -> BigInt {
    let mut total = 0u64;
    for_each_partition(n, |parts| {
        if let Some(&s) = parts.last() {
            total += parts.iter().rev().take_while(|&&p| p == s).count() as u64;
        }
    });
    BigInt::from(total)
}

/// Series shared by the nested sums at one truncation order.
struct Kernels {
    order: usize,
    /// `1 / (q^{n+1}; q)_inf`.
    tails: Vec<TruncSeries>,
    /// `1 / (q)_n`.
    inv_poch: Vec<TruncSeries>,
}

impl Kernels {
    fn new(order: usize) -> Self {
        let mut tails = vec![TruncSeries::one(order); order + 1];
        for n in (0..order).rev() {
            tails[n] = tails[n + 1].div_one_minus_q_pow(n + 1);
        }
        let mut inv_poch = Vec::with_capacity(order + 1);
        inv_poch.push(TruncSeries::one(order));
        for n in 1..=order {
            let next = inv_poch[n - 1].div_one_minus_q_pow(n);
            inv_poch.push(next);
        }
        Self {
            order,
            tails,
            inv_poch,
        }
    }

    fn poch(&self, n: usize) -> TruncSeries {
        series::pochhammer_finite(1, n, self.order)
    }
}

/// `G_k(a)` for `a = 0..=order`; entry 0 is zero.
fn garvan_chain(k: usize, order: usize) -> Vec<TruncSeries> {
    let level = |inner: &TruncSeries, a: usize| {
        inner.shift(a).div_one_minus_q_pow(a).div_one_minus_q_pow(a)
    };
    let one = TruncSeries::one(order);
    let mut g: Vec<TruncSeries> = (0..=order)
        .map(|a| if a == 0 { TruncSeries::zero(order) } else { level(&one, a) })
        .collect();
    for _ in 1..k {
        let mut next = vec![TruncSeries::zero(order); order + 1];
        let mut suffix = TruncSeries::zero(order);
        for a in (1..=order).rev() {
            suffix.add_assign_ref(&g[a]);
            next[a] = level(&suffix, a);
        }
        g = next;
    }
    g
}

/// `sum q^{a_1^2 + ... + a_len^2} / ((q)_{a_1} (q)_{a_2 - a_1} ... (q)_{top - a_len})`
/// over `lo <= a_1 <= ... <= a_len <= top` with `sum a_i^2 <= budget`.
/// With `len = 0` this is `1 / (q)_top`.
fn pochhammer_chain(len: usize, lo: usize, top: usize, budget: usize, kern: &Kernels) -> TruncSeries {
    let mut sum = TruncSeries::zero(kern.order);
    for_each_square_chain(len, lo, top, budget, &mut |chain, cost| {
        let first = chain.first().copied().unwrap_or(top);
        let mut term = kern.inv_poch[first].shift(cost);
        for w in chain.windows(2) {
            term = term.mul(&kern.inv_poch[w[1] - w[0]]);
        }
        if let Some(&last) = chain.last() {
            term = term.mul(&kern.inv_poch[top - last]);
        }
        sum.add_assign_ref(&term);
    });
    sum
}

/// `L_r(m) = sum_{lo <= a <= m} [m, a] q^{a^2} L_{r-1}(a)` with `L_0 = 1`,
/// for `r <= depth` and `m <= order`.
fn gaussian_chain(depth: usize, lo: usize, order: usize) -> Vec<Vec<TruncSeries>> {
    let amax = order.isqrt();
    let gauss = GaussTable::new(order, amax, order);
    let mut levels = vec![vec![TruncSeries::one(order); order + 1]];
    for r in 1..=depth {
        let prev = &levels[r - 1];
        let row = (0..=order)
            .map(|m| {
                let mut s = TruncSeries::zero(order);
                for a in lo..=m.min(amax) {
                    s.add_assign_ref(&gauss.get(m, a).shift(a * a).mul(&prev[a]));
                }
                s
            })
            .collect();
        levels.push(row);
    }
    levels
}

/// `sum_{m>=1} q^m / ((1 - q^m)^2 (q^{m+1}; q)_inf)`.
pub fn gf_spt(order: usize) -> TruncSeries {
    gf_sptk(1, order).expect("k = 1 is valid")
}

/// `sum_{n_k >= ... >= n_1 >= 1} q^{n_1 + ... + n_k} / ((1-q^{n_1})^2 ... (1-q^{n_k})^2 (q^{n_1+1}; q)_inf)`.
pub fn gf_sptk(k: u32, order: usize) -> Result<TruncSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let kern = Kernels::new(order);
    let g = garvan_chain(k as usize, order);
    let mut sum = TruncSeries::zero(order);
    for n1 in 1..=order / k as usize {
        sum.add_assign_ref(&g[n1].mul(&kern.tails[n1]));
    }
    Ok(sum)
}

/// `Spt_0, Spt_1, ..., Spt_{j_max}` as series, from
/// `sum_{n_j >= 1} q^{n_j} / ((1-q^{n_j})^2 (q^{n_j+1})_inf) * L_{j-1}(n_j)`
/// where `L` is the Gaussian-binomial chain with indices `>= 0`.
pub fn gf_spt_j_all(j_max: usize, order: usize) -> Vec<TruncSeries> {
    let kern = Kernels::new(order);
    let g1 = garvan_chain(1, order);
    let outer: Vec<TruncSeries> = (0..=order).map(|n| g1[n].mul(&kern.tails[n])).collect();
    let levels = gaussian_chain(j_max.saturating_sub(1), 0, order);
    let mut out = vec![TruncSeries::zero(order)];
    for j in 1..=j_max {
        let mut s = TruncSeries::zero(order);
        for n in 1..=order {
            s.add_assign_ref(&outer[n].mul(&levels[j - 1][n]));
        }
        out.push(s);
    }
    out
}

pub fn gf_spt_j(j: usize, order: usize) -> Result<TruncSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    Ok(gf_spt_j_all(j, order).pop().expect("j >= 1"))
}

/// Left side with Pochhammer denominators:
/// `sum q^{n_1^2 + ... + n_{j-1}^2 + n_j} (q)_{n_j} / ((q)_{n_1} (q)_{n_2-n_1} ... (q)_{n_j-n_{j-1}} (1-q^{n_j})^2 (q^{n_j+1})_inf)`.
pub fn gf_genn1_lhs(j: usize, order: usize) -> Result<TruncSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let kern = Kernels::new(order);
    let g1 = garvan_chain(1, order);
    let mut sum = TruncSeries::zero(order);
    for nj in 1..=order {
        let inner = pochhammer_chain(j - 1, 0, nj, order - nj, &kern);
        let outer = kern.poch(nj).mul(&g1[nj]).mul(&kern.tails[nj]);
        sum.add_assign_ref(&outer.mul(&inner));
    }
    Ok(sum)
}

/// `sum_n n q^n / (1 - q^n)`, the divisor-sum series.
fn sigma_series(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for n in 1..=order {
        s.add_assign_ref(&TruncSeries::monomial(BigInt::from(n), n, order).div_one_minus_q_pow(n));
    }
    s
}

/// `(1/(q)_inf) [sum n q^n/(1-q^n) + sum (-1)^n q^{n((2j+1)n+1)/2} (1+q^n)/(1-q^n)^2]`.
pub fn gf_genn1_rhs(j: usize, order: usize) -> Result<TruncSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let a = 2 * j + 1;
    let mut s = sigma_series(order);
    for n in 1..=order {
        let e = n * (a * n + 1) / 2;
        if e > order {
            break;
        }
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let term = TruncSeries::monomial(sign, e, order)
            .mul_one_plus_q_pow(n)
            .div_one_minus_q_pow(n)
            .div_one_minus_q_pow(n);
        s.add_assign_ref(&term);
    }
    Ok(s.mul(&series::partition_series(order)))
}

/// `sum_n n p(n) q^n`.
pub fn np_series(order: usize) -> TruncSeries {
    let p = series::partition_series(order);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * BigInt::from(n))
        .collect();
    TruncSeries::from_coeffs(coeffs)
}

/// Generating function of `jspt_k` with Pochhammer denominators:
/// `sum q^{n_1+...+n_k + m_1^2+...+m_{j-1}^2} (q)_{n_1} / (prod (1-q^{n_i})^2 (q^{n_1+1})_inf (q)_{n_1-m_1} ... (q)_{m_{j-1}})`
/// over `n_k >= ... >= n_1 >= m_1 >= ... >= m_{j-1} >= 1`.
pub fn gf_jsptk(j: usize, k: u32, order: usize) -> Result<TruncSeries> {
    check_jk(j, k)?;
    let kern = Kernels::new(order);
    let k = k as usize;
    let g = garvan_chain(k, order);
    let mut sum = TruncSeries::zero(order);
    for n1 in 1..=order / k {
        let inner = pochhammer_chain(j - 1, 1, n1, order - k * n1, &kern);
        if inner.is_zero() {
            continue;
        }
        let outer = kern.poch(n1).mul(&kern.tails[n1]).mul(&g[n1]);
        sum.add_assign_ref(&outer.mul(&inner));
    }
    Ok(sum)
}

/// The same generating function with Gaussian binomials:
/// `sum q^{n_{k+j-1}+...+n_j} / (prod (1-q^{n_i})^2 (q^{n_j+1})_inf) [n_j, n_{j-1}] ... [n_2, n_1] q^{n_{j-1}^2+...+n_1^2}`
/// over `n_{k+j-1} >= ... >= n_1 >= 1`.
pub fn gf_jsptk_gaussian(j: usize, k: u32, order: usize) -> Result<TruncSeries> {
    check_jk(j, k)?;
    let kern = Kernels::new(order);
    let k = k as usize;
    let g = garvan_chain(k, order);
    let levels = gaussian_chain(j - 1, 1, order);
    let inner = &levels[j - 1];
    let mut sum = TruncSeries::zero(order);
    for nj in 1..=order / k {
        sum.add_assign_ref(&g[nj].mul(&kern.tails[nj]).mul(&inner[nj]));
    }
    Ok(sum)
}

fn check_jk(j: usize, k: u32) -> Result<()> {
    if j == 0 || k == 0 {
        return Err(Error::InvalidParameter("j and k must be at least 1".into()));
    }
    Ok(())
}

/// Both sides of the Bailey-pair identity with parameters `r, k`:
///
/// left: `sum_{n_k >= ... >= n_1 >= 1} (q)_{n_1}^2 q^{n_1+...+n_k} / prod (1-q^{n_i})^2 * beta_{n_1}`,
/// `beta_n = sum_{n >= m_1 >= ... >= m_{r-1} >= 0} q^{m_1^2+...+m_{r-1}^2} / ((q)_{n-m_1} ... (q)_{m_{r-1}})`;
///
/// right: `sum q^{n_1+...+n_k} / prod (1-q^{n_i})^2 + sum_{n>=1} (-1)^n q^{n(n-1)/2 + r n^2 + kn} (1+q^n) / (1-q^n)^{2k}`.
pub fn appbp_sides(r: usize, k: u32, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidParameter("r and k must be at least 1".into()));
    }
    let kern = Kernels::new(order);
    let k = k as usize;
    let g = garvan_chain(k, order);
    let mut lhs = TruncSeries::zero(order);
    let mut rhs = TruncSeries::zero(order);
    for n1 in 1..=order / k {
        let beta = pochhammer_chain(r - 1, 0, n1, order - k * n1, &kern);
        let p = kern.poch(n1);
        lhs.add_assign_ref(&p.mul(&p).mul(&beta).mul(&g[n1]));
        rhs.add_assign_ref(&g[n1]);
    }
    for n in 1..=order {
        let e = n * (n - 1) / 2 + r * n * n + k * n;
        if e > order {
            break;
        }
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let mut term = TruncSeries::monomial(sign, e, order).mul_one_plus_q_pow(n);
        for _ in 0..2 * k {
            term = term.div_one_minus_q_pow(n);
        }
        rhs.add_assign_ref(&term);
    }
    Ok((lhs, rhs))
}

pub fn verify_appbp(r: usize, k: u32, order: usize) -> Result<bool> {
    let (lhs, rhs) = appbp_sides(r, k, order)?;
    Ok(lhs == rhs)
}

/// Sum of the marks of the parts that can start the non-Rogers-Ramanujan
/// tail: the bottom `d + 1` parts in increasing order, where `d` is the
/// total side of the first `j - 1` lower-Durfee squares. If there are fewer
/// squares, every part counts.
pub fn w_weight(p: &Partition, j: usize) -> Result<u64> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    Ok(w_weight_of(p.parts(), j))
}

fn w_weight_of(parts: &[u32], j: usize) -> u64 {
    let sides = lower_durfee_sides(parts);
    let d: usize = sides.iter().take(j - 1).map(|&s| s as usize).sum();
    increasing_marks(parts)
        .iter()
        .take(d + 1)
        .map(|&(_, mark)| mark as u64)
        .sum()
}

/// Where the smallest part of the weighted tail may sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SplitRule {
    /// Right above each part of the `(j-1)`st lower-Durfee square.
    AboveLastSquare,
    /// Any of the bottom `d + 1` parts, as in `w_weight`.
    #[cfg_attr(not(test), allow(dead_code))]
    BottomRun,
}

/// Positions (in increasing order, 0-based) of the admissible `t_1`.
fn split_points(parts: &[u32], j: usize, rule: SplitRule) -> Vec<usize> {
    let len = parts.len();
    if j == 1 {
        return vec![0];
    }
    let sides = lower_durfee_sides(parts);
    match rule {
        SplitRule::AboveLastSquare => {
            if sides.len() < j - 1 {
                return Vec::new();
            }
            let before: usize = sides[..j - 2].iter().map(|&s| s as usize).sum();
            let through = before + sides[j - 2] as usize;
            (before + 1..=through).filter(|&i| i < len).collect()
        }
        SplitRule::BottomRun => {
            let d: usize = sides.iter().take(j - 1).map(|&s| s as usize).sum();
            (0..=d.min(len - 1)).collect()
        }
    }
}

/// Garvan's weight: compositions `m_1 + ... + m_r = k`, chains
/// `t_1 < ... < t_r` of distinct parts with `t_1` the smallest part, weight
/// `binom(f_{t_1}+m_1-1, 2m_1-1) prod_{i>=2} binom(f_{t_i}+m_i, 2m_i)`.
pub fn w_k_weight(p: &Partition, k: u32) -> Result<BigInt> {
    jw_k_weight(p, 1, k)
}

/// `w_k` summed over the admissible split points, with the mark of `t_1`
/// standing in for its frequency.
pub fn jw_k_weight(p: &Partition, j: usize, k: u32) -> Result<BigInt> {
    check_jk(j, k)?;
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(jw_k_weight_of(p.parts(), j, k, SplitRule::AboveLastSquare))
}

fn jw_k_weight_of(parts: &[u32], j: usize, k: u32, rule: SplitRule) -> BigInt {
    let inc = increasing_marks(parts);
    let mut total = BigInt::zero();
    for s in split_points(parts, j, rule) {
        let (t1, mark) = inc[s];
        total += chain_weight(&inc, t1, mark, k);
    }
    total
}

/// The middle and inner sums of `w_k` for a fixed `t_1`. `inc` lists
/// `(part, mark)` in increasing order; the largest mark of a value is its
/// frequency.
fn chain_weight(inc: &[(u32, u32)], t1: u32, mark: u32, k: u32) -> BigInt {
    let k = k as usize;
    // h[c]: weighted count of chains above t_1 using total m = c.
    let mut h = vec![BigInt::zero(); k];
    h[0] = BigInt::one();
    let mut i = 0;
    while i < inc.len() {
        let v = inc[i].0;
        let mut f = 0;
        while i < inc.len() && inc[i].0 == v {
            f = f.max(inc[i].1);
            i += 1;
        }
        if v <= t1 {
            continue;
        }
        for c in (0..k).rev() {
            if h[c].is_zero() {
                continue;
            }
            for m in 1..k - c {
                let b = generalized_binomial(f as i64 + m as i64, 2 * m as u32);
                let add = &h[c] * b;
                h[c + m] += add;
            }
        }
    }
    (1..=k)
        .map(|m1| generalized_binomial(mark as i64 + m1 as i64 - 1, 2 * m1 as u32 - 1) * &h[k - m1])
        .sum()
}

/// Values of a family by route, indexed by `n = 0..=n_max` (entry 0 is 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Spt,
    SptK,
    SptJ,
    JsptK,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Spt => "spt",
            Family::SptK => "spt_k",
            Family::SptJ => "Spt_j",
            Family::JsptK => "jspt_k",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spt" => Ok(Family::Spt),
            "spt_k" => Ok(Family::SptK),
            "Spt_j" => Ok(Family::SptJ),
            "jspt_k" => Ok(Family::JsptK),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Gf,
    Weight,
    Moments,
    /// Every route, checked for agreement; the gf values are returned.
    All,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf" => Ok(Route::Gf),
            "weight" => Ok(Route::Weight),
            "moments" => Ok(Route::Moments),
            "all" => Ok(Route::All),
            other => Err(Error::InvalidParameter(format!("unknown route {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SptRequest {
    family: Family,
    j: Option<usize>,
    k: Option<u32>,
    n_max: usize,
    route: Route,
}

impl SptRequest {
    pub fn new(family: Family, j: Option<usize>, k: Option<u32>, n_max: usize, route: Route) -> Result<Self> {
        let (needs_j, needs_k) = match family {
            Family::Spt => (false, false),
            Family::SptK => (false, true),
            Family::SptJ => (true, false),
            Family::JsptK => (true, true),
        };
        let check = |name: &str, given: bool, needed: bool| match (given, needed) {
            (true, false) => Err(Error::InvalidParameter(format!("{family} takes no {name}"))),
            (false, true) => Err(Error::InvalidParameter(format!("{family} needs {name}"))),
            _ => Ok(()),
        };
        check("j", j.is_some(), needs_j)?;
        check("k", k.is_some(), needs_k)?;
        if j == Some(0) || k == Some(0) {
            return Err(Error::InvalidParameter("j and k must be at least 1".into()));
        }
        Ok(Self {
            family,
            j,
            k,
            n_max,
            route,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn j(&self) -> Option<usize> {
        self.j
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Family parameters with the defaults the formulas reduce to:
    /// `spt = Spt_1 = 1spt_1`, `spt_k = 1spt_k`.
    fn jk(&self) -> (usize, u32) {
        (self.j.unwrap_or(1), self.k.unwrap_or(1))
    }

    fn by_route(&self, route: Route) -> Result<Vec<BigInt>> {
        let n_max = self.n_max;
        let (j, k) = self.jk();
        match route {
            Route::Gf => {
                let s = match self.family {
                    Family::Spt => gf_spt(n_max),
                    Family::SptK => gf_sptk(k, n_max)?,
                    Family::SptJ => gf_spt_j(j, n_max)?,
                    Family::JsptK => gf_jsptk(j, k, n_max)?,
                };
                Ok(s.into_coeffs())
            }
            Route::Weight => {
                let one = |n: usize| -> BigInt {
                    let mut total = BigInt::zero();
                    for_each_partition(n as u32, |parts| {
                        if parts.is_empty() {
                            return;
                        }
                        total += match self.family {
                            Family::Spt => BigInt::from(w_weight_of(parts, 1)),
                            Family::SptJ => BigInt::from(w_weight_of(parts, j)),
                            Family::SptK | Family::JsptK => {
                                jw_k_weight_of(parts, j, k, SplitRule::AboveLastSquare)
                            }
                        };
                    });
                    total
                };
                Ok((0..=n_max).map(one).collect())
            }
            Route::Moments => match self.family {
                Family::Spt | Family::SptJ => spt_j_by_moments(j, n_max),
                Family::SptK | Family::JsptK => jsptk_by_moments(j, k, n_max),
            },
            Route::All => {
                let gf = self.by_route(Route::Gf)?;
                let mut others = vec![self.by_route(Route::Weight)?, self.by_route(Route::Moments)?];
                if self.family == Family::JsptK {
                    others.push(gf_jsptk_gaussian(j, k, n_max)?.into_coeffs());
                }
                for other in &others {
                    if let Some(n) = (0..=n_max).find(|&n| gf[n] != other[n]) {
                        return Err(Error::RouteMismatch {
                            n,
                            detail: format!("{} vs {}", gf[n], other[n]),
                        });
                    }
                }
                Ok(gf)
            }
        }
    }
}

/// Values for `n = 0..=n_max` along the requested route.
pub fn compute(req: &SptRequest) -> Result<Vec<BigInt>> {
    req.by_route(req.route)
}

/// `Spt_j(n) = n p(n) - (1/2) _{j+1}N_2(n)` for `n = 0..=n_max`.
pub fn spt_j_by_moments(j: usize, n_max: usize) -> Result<Vec<BigInt>> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let table = CountTable::from_gf(j + 1, n_max)?;
    let np = np_series(n_max);
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                return Ok(BigInt::zero());
            }
            let half = exact_div(&table.moment(2, n), &BigInt::from(2))?;
            Ok(&np.coeffs()[n] - half)
        })
        .collect()
}

/// `jspt_k(n) = _jmu_{2k}(n) - _{j+1}mu_{2k}(n)` for `n = 0..=n_max`.
pub fn jsptk_by_moments(j: usize, k: u32, n_max: usize) -> Result<Vec<BigInt>> {
    check_jk(j, k)?;
    let lower = CountTable::from_gf(j, n_max)?;
    let upper = CountTable::from_gf(j + 1, n_max)?;
    Ok((0..=n_max)
        .map(|n| {
            if n == 0 {
                BigInt::zero()
            } else {
                lower.sym_mu(2 * k, n) - upper.sym_mu(2 * k, n)
            }
        })
        .collect())
}

/// `Spt_j(n)` checked three ways: the generating function, the telescoped
/// sum `sum_{l<=j} lspt_1(n)`, and `_1mu_2(n) - _{j+1}mu_2(n)`.
pub fn relation_sum(j: usize, n: usize) -> Result<BigInt> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let gf = gf_spt_j(j, n)?.coeffs()[n].clone();
    let tables = (1..=j + 1)
        .map(|l| CountTable::from_gf(l, n))
        .collect::<Result<Vec<_>>>()?;
    let mu2 = |l: usize| tables[l - 1].sym_mu(2, n);
    let telescoped: BigInt = (1..=j).map(|l| mu2(l) - mu2(l + 1)).sum();
    let direct = mu2(1) - mu2(j + 1);
    if n >= 1 && (gf != telescoped || gf != direct) {
        return Err(Error::RouteMismatch {
            n,
            detail: format!("gf {gf}, telescoped {telescoped}, direct {direct}"),
        });
    }
    Ok(gf)
}
