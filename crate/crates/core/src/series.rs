//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `q^0..=q^N`.
//! Binary operations truncate to the smaller of the two orders; no operation
//! ever raises an order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c q^exp`, or zero if `exp` lies beyond the order.
    pub fn monomial(c: BigInt, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always has at least a constant term.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    /// Small-integer convenience constructor; missing coefficients are zero.
    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(values) {
            *c = BigInt::from(*v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lowers the truncation order. Raising it is refused.
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

    fn shared_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.shared_order(other);
        Self {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.shared_order(other);
        Self {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// In-place `self += other`, truncating `other` to `self`'s order.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert!(
            other.order() >= self.order(),
            "accumulator order {} exceeds summand order {}",
            self.order(),
            other.order()
        );
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.shared_order(other);
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing unless each division is exact.
    pub fn exact_div(&self, d: &BigInt) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| exact_div(c, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in e..=n {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Multiplies by `(1 - q^e)`.
    pub fn mul_one_minus_q_pow(&self, e: usize) -> Self {
        let mut out = self.clone();
        if e == 0 {
            return Self::zero(self.order());
        }
        for i in (e..=self.order()).rev() {
            let t = out.coeffs[i - e].clone();
            out.coeffs[i] -= t;
        }
        out
    }

    /// Multiplies by `(1 + q^e)`.
    pub fn mul_one_plus_q_pow(&self, e: usize) -> Self {
        let mut out = self.clone();
        if e == 0 {
            return self.scale(&BigInt::from(2));
        }
        for i in (e..=self.order()).rev() {
            let t = out.coeffs[i - e].clone();
            out.coeffs[i] += t;
        }
        out
    }

    /// Divides by `(1 - q^e)` for `e >= 1`.
    pub fn div_one_minus_q_pow(&self, e: usize) -> Self {
        assert!(e >= 1, "1 - q^0 is not invertible");
        let mut out = self.clone();
        for i in e..=self.order() {
            let t = out.coeffs[i - e].clone();
            out.coeffs[i] += t;
        }
        out
    }

    /// Inverse of a series whose constant term is `+1` or `-1`.
    pub fn inv_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            // c0 = ±1, so dividing by c0 is multiplying by it.
            out[k] = -(acc * c0);
        }
        Ok(Self { coeffs: out })
    }
}

pub(crate) fn exact_div(value: &BigInt, divisor: &BigInt) -> Result<BigInt> {
    if divisor.is_zero() {
        return Err(Error::InexactDivision {
            value: value.to_string(),
            divisor: "0".into(),
        });
    }
    let (q, r) = value.div_rem(divisor);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            value: value.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok(q)
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{}; O(q^{})]", self, self.order() + 1)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: Self) -> TruncSeries {
        TruncSeries::add(self, rhs)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: Self) -> TruncSeries {
        TruncSeries::sub(self, rhs)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: Self) -> TruncSeries {
        TruncSeries::mul(self, rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::neg(self)
    }
}

/// `(q^a; q)_n = (1 - q^a)(1 - q^{a+1}) ... (1 - q^{a+n-1})`.
pub fn pochhammer_finite(a_exp: usize, n: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for i in 0..n {
        let e = a_exp + i;
        if e == 0 {
            return TruncSeries::zero(order);
        }
        if e <= order {
            s = s.mul_one_minus_q_pow(e);
        }
    }
    s
}

/// `(q^a; q)_inf` for `a >= 1`. Factors `1 - q^e` with `e > order` are the
/// identity at this truncation and are skipped.
pub fn pochhammer_inf(a_exp: usize, order: usize) -> Result<TruncSeries> {
    if a_exp == 0 {
        return Err(Error::InvalidParameter(
            "(1;q)_inf vanishes; the base exponent must be at least 1".into(),
        ));
    }
    let mut s = TruncSeries::one(order);
    for e in a_exp..=order {
        s = s.mul_one_minus_q_pow(e);
    }
    Ok(s)
}

/// `1 / (q^a; q)_inf` for `a >= 1`, built factor by factor.
pub fn inv_pochhammer_inf(a_exp: usize, order: usize) -> Result<TruncSeries> {
    if a_exp == 0 {
        return Err(Error::InvalidParameter(
            "(1;q)_inf is not invertible".into(),
        ));
    }
    let mut s = TruncSeries::one(order);
    for e in a_exp..=order {
        s = s.div_one_minus_q_pow(e);
    }
    Ok(s)
}

/// `1 / (q; q)_n`.
pub fn inv_pochhammer_finite(n: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for e in 1..=n.min(order) {
        s = s.div_one_minus_q_pow(e);
    }
    s
}

/// `1 / (q; q)_inf`, the partition generating function.
pub fn partition_series(order: usize) -> TruncSeries {
    inv_pochhammer_inf(1, order).expect("base exponent 1 is valid")
}

/// Gaussian binomial `[n choose m]_q` by the q-Pascal rule
/// `[n, m] = [n-1, m-1] + q^m [n-1, m]`; zero unless `0 <= m <= n`.
pub fn gauss_binomial(n: usize, m: i64, order: usize) -> TruncSeries {
    if m < 0 || m as usize > n {
        return TruncSeries::zero(order);
    }
    let m = m as usize;
    // row[i] holds [r, i] for the current r.
    let mut row = vec![TruncSeries::one(order)];
    for r in 1..=n {
        let hi = m.min(r);
        let mut next = Vec::with_capacity(hi + 1);
        for i in 0..=hi {
            let mut v = if i < row.len() { row[i].shift(i) } else { TruncSeries::zero(order) };
            if i >= 1 {
                v.add_assign_ref(&row[i - 1]);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// Memoized Gaussian binomials `[n, m]` for `n <= n_max`, `m <= m_max`.
#[derive(Debug, Clone)]
pub struct GaussTable {
    rows: Vec<Vec<TruncSeries>>,
    zero: TruncSeries,
}

impl GaussTable {
    pub fn new(n_max: usize, m_max: usize, order: usize) -> Self {
        let mut rows: Vec<Vec<TruncSeries>> = vec![vec![TruncSeries::one(order)]];
        for r in 1..=n_max {
            let hi = m_max.min(r);
            let prev = &rows[r - 1];
            let mut row = Vec::with_capacity(hi + 1);
            for i in 0..=hi {
                let mut v = if i < prev.len() { prev[i].shift(i) } else { TruncSeries::zero(order) };
                if i >= 1 {
                    v.add_assign_ref(&prev[i - 1]);
                }
                row.push(v);
            }
            rows.push(row);
        }
        Self {
            rows,
            zero: TruncSeries::zero(order),
        }
    }

    /// `[n, m]`; zero outside `0 <= m <= n`. Panics if `n` or `m` exceed the
    /// table bounds while `m <= n`.
    pub fn get(&self, n: usize, m: usize) -> &TruncSeries {
        if m > n {
            return &self.zero;
        }
        &self.rows[n][m]
    }
}
