//! Laurent polynomials in `z` and bivariate series in `(z, q)`.
//!
//! [`BiSeries`] is a truncated series in `q` whose coefficients are
//! [`LaurentPoly`] values. It carries the crank generating function
//! `C(z,q)`, the rank generating function `R(z,q)` and the `j`-rank
//! generating functions `R_j(z,q)`, together with the extraction maps that
//! turn them into moment generating functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chains::for_each_square_chain;
use crate::error::{Error, Result};
use crate::series::{self, exact_div, TruncSeries};
use crate::stats;

/// Finite Laurent polynomial `sum c_m z^m` with no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    /// Adds `c z^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest and largest exponent present.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `z -> 1/z`.
    pub fn reflect(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `sum c_m w(m)`.
    pub fn weighted_sum<F: Fn(i64) -> BigInt>(&self, w: F) -> BigInt {
        self.terms.iter().map(|(e, c)| c * w(*e)).sum()
    }

    /// If `self = ±z^m`, returns its inverse `±z^{-m}`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        (c.abs() == BigInt::one()).then(|| Self::monomial(c.clone(), -e))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `z^-1 - 1 + z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}z^{e}")?,
            }
        }
        Ok(())
    }
}

/// Falling factorial `x (x-1) ... (x-t+1)`; equals 1 for `t = 0`.
pub fn falling_factorial(x: i64, t: u32) -> BigInt {
    (0..t as i64).map(|i| BigInt::from(x - i)).product()
}

/// Binomial coefficient extended to all integers `x` via the falling
/// factorial: `binom(x, k) = x (x-1) ... (x-k+1) / k!`.
pub fn generalized_binomial(x: i64, k: u32) -> BigInt {
    let num = falling_factorial(x, k);
    let den: BigInt = (1..=k as i64).map(BigInt::from).product();
    exact_div(&num, &den).expect("falling factorial is divisible by k!")
}

/// Truncated series in `q` with Laurent-polynomial coefficients in `z`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<LaurentPoly>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_series(&TruncSeries::one(order))
    }

    /// `c z^zexp q^qexp`.
    pub fn monomial(c: BigInt, zexp: i64, qexp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if qexp <= order {
            s.coeffs[qexp] = LaurentPoly::monomial(c, zexp);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    /// Embeds a series in `q` as the `z^0` part.
    pub fn from_series(s: &TruncSeries) -> Self {
        Self {
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| LaurentPoly::monomial(c.clone(), 0))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&LaurentPoly> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderPromotion {
                from: self.order(),
                to: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn bi_add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect(),
        }
    }

    pub fn bi_sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|i| self.coeffs[i].sub(&other.coeffs[i])).collect(),
        }
    }

    pub fn bi_neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(LaurentPoly::neg).collect(),
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        assert!(other.order() >= self.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
    }

    pub fn bi_mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !other.coeffs[j].is_zero() {
                    let t = self.coeffs[i].mul(&other.coeffs[j]);
                    out.coeffs[i + j].add_assign_ref(&t);
                }
            }
        }
        out
    }

    /// Inverse of a series whose `q^0` coefficient is `±z^m`.
    pub fn bi_inv_unit(&self) -> Result<Self> {
        let u0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonInvertibleLeading(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = u0.clone();
        for k in 1..=n {
            let mut acc = LaurentPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out.coeffs[k - i].is_zero() {
                    acc.add_assign_ref(&self.coeffs[i].mul(&out.coeffs[k - i]));
                }
            }
            out.coeffs[k] = acc.mul(&u0).neg();
        }
        Ok(out)
    }

    /// Multiplies by a series in `q` alone.
    pub fn mul_series(&self, s: &TruncSeries) -> Self {
        let n = self.order().min(s.order());
        let mut out = Self::zero(n);
        for (i, c) in s.coeffs().iter().enumerate().take(n + 1) {
            if c.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !self.coeffs[j].is_zero() {
                    out.coeffs[i + j].add_assign_ref(&self.coeffs[j].scale(c));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift_q(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in e..=n {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Multiplies by `(1 - z^zexp q^qexp)`.
    pub fn mul_one_minus(&self, zexp: i64, qexp: usize) -> Self {
        let mut out = self.clone();
        for i in qexp..=self.order() {
            let t = self.coeffs[i - qexp].shift(zexp);
            out.coeffs[i] = out.coeffs[i].sub(&t);
        }
        out
    }

    /// Divides by `(1 - z^zexp q^qexp)` for `qexp >= 1`.
    pub fn div_one_minus(&self, zexp: i64, qexp: usize) -> Self {
        assert!(qexp >= 1, "factor must vanish at q = 0");
        let mut out = self.clone();
        for i in qexp..=self.order() {
            let t = out.coeffs[i - qexp].shift(zexp);
            out.coeffs[i].add_assign_ref(&t);
        }
        out
    }

    /// Coefficient of `z^m` as a series in `q`.
    pub fn z_coefficient(&self, m: i64) -> TruncSeries {
        TruncSeries::from_coeffs(self.coeffs.iter().map(|p| p.coefficient(m)).collect())
    }

    /// Substitutes `z -> 1/z`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(LaurentPoly::reflect).collect(),
        }
    }

    pub fn is_z_symmetric(&self) -> bool {
        self.coeffs.iter().all(|p| *p == p.reflect())
    }

    /// Applies `sum c_m z^m -> sum c_m w(m)` to every coefficient.
    pub fn collapse<F: Fn(i64) -> BigInt>(&self, w: F) -> TruncSeries {
        TruncSeries::from_coeffs(self.coeffs.iter().map(|p| p.weighted_sum(&w)).collect())
    }

    /// `t`-th derivative in `z`, evaluated at `z = 1`.
    pub fn dz_at_1(&self, t: u32) -> TruncSeries {
        self.collapse(|m| falling_factorial(m, t))
    }

    /// `(1/(2k)!) (d/dz)^{2k} z^{k-1} F(z,q)` at `z = 1`, computed
    /// coefficientwise as `sum_m c_m binom(m + k - 1, 2k)`.
    pub fn symmetrized_extract(&self, k: u32) -> TruncSeries {
        assert!(k >= 1, "symmetrized extraction needs k >= 1");
        self.collapse(|m| generalized_binomial(m + k as i64 - 1, 2 * k))
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries[")?;
        for (i, p) in self.coeffs.iter().enumerate() {
            if !p.is_zero() {
                write!(f, " ({p})q^{i}")?;
            }
        }
        write!(f, " ; O(q^{})]", self.order() + 1)
    }
}

/// `(zq; q)_n (z^{-1}q; q)_n` inverted: `1 / ((zq)_n (z^{-1}q)_n)`.
fn inv_zq_pair(n: usize, order: usize) -> BiSeries {
    let mut s = BiSeries::one(order);
    for i in 1..=n.min(order) {
        s = s.div_one_minus(1, i).div_one_minus(-1, i);
    }
    s
}

/// `(z; q)_n (z^{-1}; q)_n` for `n = 0..=n_max`.
pub fn z_pochhammer_pairs(n_max: usize, order: usize) -> Vec<BiSeries> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut cur = BiSeries::one(order);
    out.push(cur.clone());
    for i in 0..n_max {
        cur = cur.mul_one_minus(1, i).mul_one_minus(-1, i);
        out.push(cur.clone());
    }
    out
}

/// Crank generating function `(q)_inf / ((zq)_inf (z^{-1}q)_inf)`.
pub fn build_crank_gf(order: usize) -> BiSeries {
    let mut s = BiSeries::from_series(&series::pochhammer_inf(1, order).expect("valid base"));
    for i in 1..=order {
        s = s.div_one_minus(1, i).div_one_minus(-1, i);
    }
    s
}

/// Rank generating function `1 + sum_{n>=1} q^{n^2} / ((zq)_n (z^{-1}q)_n)`.
///
/// The constant term 1 is the empty partition. Terms with `n^2 > order`
/// cannot contribute.
pub fn build_rank_gf(order: usize) -> BiSeries {
    let mut s = BiSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        s.add_assign_ref(&inv_zq_pair(n, order).shift_q(n * n));
        n += 1;
    }
    s
}

/// `R_j(z, q)`, the generating function of `N_j(m, n)` for `n >= 1`.
///
/// For `j >= 2` this is the nested-sum form and has no constant term. For
/// `j = 1` it is the crank generating function, whose constant term is 1.
pub fn build_jrank_gf(j: usize, order: usize) -> Result<BiSeries> {
    match j {
        0 => Err(Error::InvalidParameter("j must be at least 1".into())),
        1 => Ok(build_crank_gf(order)),
        _ => jrank_gf_nested(j, order),
    }
}

/// Nested-sum form of `R_j` for `j >= 2`:
/// sum over `n_{j-1} >= ... >= n_1 >= 1` of
/// `q^{n_1^2+...+n_{j-1}^2} / ((q)_{n_{j-1}-n_{j-2}} ... (q)_{n_2-n_1} (zq)_{n_1} (z^{-1}q)_{n_1})`.
/// A tuple contributes nothing below `q^{sum n_i^2}`.
pub fn jrank_gf_nested(j: usize, order: usize) -> Result<BiSeries> {
    if j < 2 {
        return Err(Error::InvalidParameter(
            "the nested form of R_j needs j >= 2".into(),
        ));
    }
    let inv_poch: Vec<TruncSeries> = (0..=order)
        .map(|m| series::inv_pochhammer_finite(m, order))
        .collect();
    // Group tuples by n_1, the only index that touches z.
    let mut by_n1: BTreeMap<usize, TruncSeries> = BTreeMap::new();
    for_each_square_chain(j - 1, 1, order, order, &mut |chain, cost| {
        let mut term = TruncSeries::monomial(BigInt::one(), cost, order);
        for w in chain.windows(2) {
            term = term.mul(&inv_poch[w[1] - w[0]]);
        }
        by_n1
            .entry(chain[0])
            .or_insert_with(|| TruncSeries::zero(order))
            .add_assign_ref(&term);
    });
    let mut out = BiSeries::zero(order);
    for (n1, uni) in by_n1 {
        out.add_assign_ref(&inv_zq_pair(n1, order).mul_series(&uni));
    }
    Ok(out)
}

/// Bilateral form of `R_j` for `j >= 1`:
/// `(z/(q)_inf) sum_{n != 0} (-1)^{n-1} q^{n((2j-1)n+1)/2} (1-q^n)/(1-zq^n)`.
///
/// The `n = -m` terms are rewritten with nonnegative powers of `q`:
/// `z (1-q^{-m})/(1-zq^{-m}) = (1-q^m)/(1-z^{-1}q^m)`, and the exponent
/// becomes `m((2j-1)m-1)/2`.
pub fn jrank_gf_bilateral(j: usize, order: usize) -> Result<BiSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let a = 2 * j - 1;
    let mut inner = BiSeries::zero(order);
    for n in 1..=order.max(1) {
        let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let e_pos = n * (a * n + 1) / 2;
        let e_neg = n * (a * n - 1) / 2;
        if e_neg > order {
            break;
        }
        if e_pos <= order {
            let t = BiSeries::monomial(sign.clone(), 1, e_pos, order)
                .mul_one_minus(0, n)
                .div_one_minus(1, n);
            inner.add_assign_ref(&t);
        }
        let t = BiSeries::monomial(sign, 0, e_neg, order)
            .mul_one_minus(0, n)
            .div_one_minus(-1, n);
        inner.add_assign_ref(&t);
    }
    Ok(inner.mul_series(&series::partition_series(order)))
}

/// `R_j` assembled from the single-`m` generating functions of `N_j(m, n)`:
/// `sum_m z^m sum_n N_j(m, n) q^n`, with `|m| <= order`.
pub fn jrank_gf_from_counts(j: usize, order: usize) -> Result<BiSeries> {
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    for m in -(order as i64)..=(order as i64) {
        let g = stats::gf_njm(j, m, order)?;
        for (n, c) in g.coeffs().iter().enumerate() {
            coeffs[n].add_term(m, c.clone());
        }
    }
    Ok(BiSeries::from_coeffs(coeffs))
}

/// Both sides of the `z`-deformed summation identity
///
/// `sum_{n_j >= ... >= n_1 >= 0} (z)_{n_j} (z^{-1})_{n_j} q^{n_1^2+...+n_{j-1}^2+n_j}
///   / ((q)_{n_1} (q)_{n_2-n_1} ... (q)_{n_j-n_{j-1}})`
///
/// `= (zq)_inf (z^{-1}q)_inf / (q)_inf^2 * (1 + sum_{n>=1} (-1)^n q^{n((2j+1)n+1)/2}
///   (1+q^n) (z)_n (z^{-1})_n / ((zq)_n (z^{-1}q)_n))`.
///
/// On the left a tuple contributes nothing below `q^{n_1^2+...+n_{j-1}^2+n_j}`.
pub fn build_kn1_sides(j: usize, order: usize) -> Result<(BiSeries, BiSeries)> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let pairs = z_pochhammer_pairs(order, order);
    let inv_poch: Vec<TruncSeries> = (0..=order)
        .map(|m| series::inv_pochhammer_finite(m, order))
        .collect();

    let mut lhs = BiSeries::zero(order);
    for top in 0..=order {
        let mut uni = TruncSeries::zero(order);
        for_each_square_chain(j - 1, 0, top, order - top, &mut |chain, cost| {
            let mut term = TruncSeries::monomial(BigInt::one(), cost + top, order);
            let mut prev = 0;
            for &a in chain.iter().chain(std::iter::once(&top)) {
                term = term.mul(&inv_poch[a - prev]);
                prev = a;
            }
            uni.add_assign_ref(&term);
        });
        if !uni.is_zero() {
            lhs.add_assign_ref(&pairs[top].mul_series(&uni));
        }
    }

    let mut bracket = BiSeries::one(order);
    let b = 2 * j + 1;
    for n in 1.. {
        let e = n * (b * n + 1) / 2;
        if e > order {
            break;
        }
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let mut t = pairs[n].shift_q(e).scale(&sign);
        for i in 1..=n {
            t = t.div_one_minus(1, i).div_one_minus(-1, i);
        }
        // (1 + q^n) in q only.
        let t = t.bi_add(&t.shift_q(n));
        bracket.add_assign_ref(&t);
    }
    let p = series::partition_series(order);
    let mut prefactor = BiSeries::from_series(&p.mul(&p));
    for i in 1..=order {
        prefactor = prefactor.mul_one_minus(1, i).mul_one_minus(-1, i);
    }
    let rhs = prefactor.bi_mul(&bracket);
    Ok((lhs, rhs))
}
