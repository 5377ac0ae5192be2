//! Checks of the identities, inequalities and congruences, one report each.
//!
//! Every check expands or enumerates both sides up to `order` and compares
//! them exactly. Rows carry the two sides as decimal (or Laurent) strings so
//! bivariate identities fit the same shape.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{self, BiSeries};
use crate::partitions::{durfee_sides, for_each_partition, lower_durfee_sides, Partition};
use crate::series::{self, exact_div};
use crate::spt;
use crate::stats::{self, CountTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Genn1,
    Sptpn,
    Sptpng,
    Kn1,
    Genjmu2k,
    Appbp,
    Gtjsptk,
    Relos,
    Fdyson,
    Sptdiff,
    Jgn,
    RkForms,
    Lemma31,
    Lemma32,
    Genineq,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::Genn1,
        Identity::Sptpn,
        Identity::Sptpng,
        Identity::Kn1,
        Identity::Genjmu2k,
        Identity::Appbp,
        Identity::Gtjsptk,
        Identity::Relos,
        Identity::Fdyson,
        Identity::Sptdiff,
        Identity::Jgn,
        Identity::RkForms,
        Identity::Lemma31,
        Identity::Lemma32,
        Identity::Genineq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Genn1 => "genn1",
            Identity::Sptpn => "sptpn",
            Identity::Sptpng => "sptpng",
            Identity::Kn1 => "kn1",
            Identity::Genjmu2k => "genjmu2k",
            Identity::Appbp => "appbp",
            Identity::Gtjsptk => "gtjsptk",
            Identity::Relos => "relos",
            Identity::Fdyson => "fdyson",
            Identity::Sptdiff => "sptdiff",
            Identity::Jgn => "jgn",
            Identity::RkForms => "Rk-forms",
            Identity::Lemma31 => "lemma31",
            Identity::Lemma32 => "lemma32",
            Identity::Genineq => "genineq",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity {s:?}")))
    }
}

/// Parameters; each identity reads the ones it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub j: usize,
    pub k: u32,
    pub r: usize,
    pub order: usize,
}

impl Params {
    pub fn new(order: usize) -> Self {
        Self {
            j: 1,
            k: 1,
            r: 1,
            order,
        }
    }

    pub fn j(self, j: usize) -> Self {
        Self { j, ..self }
    }

    pub fn k(self, k: u32) -> Self {
        Self { k, ..self }
    }

    pub fn r(self, r: usize) -> Self {
        Self { r, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

impl Row {
    fn new(n: usize, lhs: impl ToString, rhs: impl ToString, ok: bool) -> Self {
        Self {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            ok,
        }
    }

    fn eq<T: ToString + PartialEq>(n: usize, lhs: T, rhs: T) -> Self {
        let ok = lhs == rhs;
        Self::new(n, lhs, rhs, ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub identity: Identity,
    pub params: Params,
    pub rows: Vec<Row>,
    /// Findings that are not row comparisons, such as thresholds.
    pub notes: Vec<String>,
    pub pass: bool,
}

impl Report {
    fn from_rows(identity: Identity, params: Params, rows: Vec<Row>) -> Self {
        let pass = rows.iter().all(|r| r.ok);
        Self {
            identity,
            params,
            rows,
            notes: Vec::new(),
            pass,
        }
    }

    pub fn first_failure(&self) -> Option<&Row> {
        self.rows.iter().find(|r| !r.ok)
    }
}

fn series_rows(from: usize, lhs: &[BigInt], rhs: &[BigInt]) -> Vec<Row> {
    (from..lhs.len().min(rhs.len()))
        .map(|n| Row::eq(n, &lhs[n], &rhs[n]))
        .collect()
}

fn bi_rows(from: usize, lhs: &BiSeries, rhs: &BiSeries) -> Vec<Row> {
    (from..=lhs.order().min(rhs.order()))
        .map(|n| Row::eq(n, &lhs.coeffs()[n], &rhs.coeffs()[n]))
        .collect()
}

pub fn run(identity: Identity, params: Params) -> Result<Report> {
    let Params { j, k, r, order } = params;
    let rows_only = |rows| Ok(Report::from_rows(identity, params, rows));
    match identity {
        Identity::Genn1 => {
            let lhs = spt::gf_genn1_lhs(j, order)?;
            let rhs = spt::gf_genn1_rhs(j, order)?;
            let sptj = spt::gf_spt_j(j, order)?;
            let mut rows = series_rows(0, lhs.coeffs(), rhs.coeffs());
            for row in rows.iter_mut() {
                row.ok &= sptj.coeffs()[row.n].to_string() == row.lhs;
            }
            rows_only(rows)
        }
        Identity::Sptpn => {
            let gf = spt::gf_spt(order);
            let moments = spt::spt_j_by_moments(1, order)?;
            let rows = (1..=order)
                .map(|n| {
                    let comb = spt::spt_weight(n as u32);
                    let ok = comb == moments[n] && comb == gf.coeffs()[n];
                    Row::new(n, &comb, &moments[n], ok)
                })
                .collect();
            rows_only(rows)
        }
        Identity::Sptpng => {
            let gf = spt::gf_spt_j(j, order)?;
            let moments = spt::spt_j_by_moments(j, order)?;
            rows_only(series_rows(1, gf.coeffs(), &moments))
        }
        Identity::Kn1 => {
            let (lhs, rhs) = laurent::build_kn1_sides(j, order)?;
            rows_only(bi_rows(0, &lhs, &rhs))
        }
        Identity::Genjmu2k => {
            let extract = laurent::build_jrank_gf(j, order)?.symmetrized_extract(k);
            let closed = stats::gf_sym_mu_closed(j, k, order)?;
            let table = CountTable::from_gf(j, order)?;
            let rows = (1..=order)
                .map(|n| {
                    let tab = table.sym_mu(2 * k, n);
                    let ok = extract.coeffs()[n] == closed.coeffs()[n] && tab == closed.coeffs()[n];
                    Row::new(n, &extract.coeffs()[n], &closed.coeffs()[n], ok)
                })
                .collect();
            rows_only(rows)
        }
        Identity::Appbp => {
            let (lhs, rhs) = spt::appbp_sides(r, k, order)?;
            rows_only(series_rows(0, lhs.coeffs(), rhs.coeffs()))
        }
        Identity::Gtjsptk => {
            let gf = spt::gf_jsptk(j, k, order)?;
            let gauss = spt::gf_jsptk_gaussian(j, k, order)?;
            let moments = spt::jsptk_by_moments(j, k, order)?;
            let mut rows = series_rows(1, gf.coeffs(), &moments);
            for row in rows.iter_mut() {
                row.ok &= gauss.coeffs()[row.n] == moments[row.n];
            }
            rows_only(rows)
        }
        Identity::Relos => {
            let table = CountTable::from_gf(j, order)?;
            let sstar = stats::stirling_star(k as usize)?;
            let rows = (1..=order)
                .map(|n| {
                    let direct = table.moment(2 * k, n);
                    let via = table.moment_via_sym(k, n, &sstar);
                    let g_form = stats::sym_mu_via_g(&table, k, n);
                    let ok = direct == via && g_form.as_ref() == Ok(&table.sym_mu(2 * k, n));
                    Row::new(n, direct, via, ok)
                })
                .collect();
            rows_only(rows)
        }
        Identity::Fdyson => fdyson(params),
        Identity::Sptdiff => {
            if j == 0 {
                return Err(Error::InvalidParameter("j must be at least 1".into()));
            }
            let all = spt::gf_spt_j_all(j, order);
            let lower = CountTable::from_gf(j, order)?;
            let upper = CountTable::from_gf(j + 1, order)?;
            let rows = (1..=order)
                .map(|n| {
                    let lhs = &all[j].coeffs()[n] - &all[j - 1].coeffs()[n];
                    let diff = lower.moment(2, n) - upper.moment(2, n);
                    match exact_div(&diff, &BigInt::from(2)) {
                        Ok(rhs) => Row::eq(n, lhs, rhs),
                        Err(_) => Row::new(n, lhs, format!("{diff}/2"), false),
                    }
                })
                .collect();
            rows_only(rows)
        }
        Identity::Jgn => {
            // Spt_{n+1}(n) = n p(n), plus Spt_j(n) <= Spt_{j+1}(n) <= n p(n).
            let all = spt::gf_spt_j_all(order + 1, order);
            let np = spt::np_series(order);
            let rows = (1..=order)
                .map(|n| {
                    let top = &all[n + 1].coeffs()[n];
                    let chain_ok = (1..=n).all(|jj| all[jj].coeffs()[n] <= all[jj + 1].coeffs()[n]);
                    Row::new(n, top, &np.coeffs()[n], top == &np.coeffs()[n] && chain_ok)
                })
                .collect();
            rows_only(rows)
        }
        Identity::RkForms => {
            let bilateral = laurent::jrank_gf_bilateral(j, order)?;
            let counts = laurent::jrank_gf_from_counts(j, order)?;
            let nested = laurent::build_jrank_gf(j, order)?;
            let mut rows = bi_rows(0, &nested, &bilateral);
            for row in rows.iter_mut() {
                row.ok &= counts.coeffs()[row.n] == bilateral.coeffs()[row.n];
            }
            rows_only(rows)
        }
        Identity::Lemma31 => rows_only(lemma_rows(order, true)),
        Identity::Lemma32 => rows_only(lemma_rows(order, false)),
        Identity::Genineq => genineq(params),
    }
}

/// `n p(n) = M_2(n) / 2` for `n >= 2`. The row at `n = 1` is reported but
/// not required; the notes record how each crank source behaves there.
fn fdyson(params: Params) -> Result<Report> {
    let order = params.order;
    let gf = CountTable::from_gf(1, order)?;
    let np = spt::np_series(order);
    let half = |m2: BigInt| exact_div(&m2, &BigInt::from(2)).ok();
    let mut rows = Vec::new();
    for n in 1..=order {
        let m2 = gf.moment(2, n);
        let rhs = half(m2.clone());
        let ok = rhs.as_ref() == Some(&np.coeffs()[n]);
        let shown = rhs.map_or_else(|| format!("{m2}/2"), |v| v.to_string());
        rows.push(Row::new(n, &np.coeffs()[n], shown, ok || n == 1));
    }
    let mut report = Report::from_rows(Identity::Fdyson, params, rows);
    if order >= 1 {
        let comb = CountTable::from_partitions(1, 1)?;
        let comb_m2 = comb.moment(2, 1);
        let comb_holds = half(comb_m2.clone()).as_ref() == Some(&BigInt::from(1));
        let gf_holds = half(gf.moment(2, 1)).as_ref() == Some(&BigInt::from(1));
        report.notes.push(format!(
            "n = 1: generating-function crank counts give M_2(1) = {} ({}); combinatorial crank gives M_2(1) = {} ({})",
            gf.moment(2, 1),
            if gf_holds { "holds" } else { "fails" },
            comb_m2,
            if comb_holds { "holds" } else { "fails" },
        ));
    }
    Ok(report)
}

/// `_jN_{2k}(n) >= _{j+1}N_{2k}(n)` on every row; the notes give the first
/// `n` from which the inequality is strict through `order`.
fn genineq(params: Params) -> Result<Report> {
    let Params { j, k, order, .. } = params;
    if j == 0 || k == 0 {
        return Err(Error::InvalidParameter("j and k must be at least 1".into()));
    }
    let lower = CountTable::from_gf(j, order)?;
    let upper = CountTable::from_gf(j + 1, order)?;
    let mut rows = Vec::new();
    for n in 1..=order {
        let a = lower.moment(2 * k, n);
        let b = upper.moment(2 * k, n);
        let ok = a >= b;
        rows.push(Row::new(n, a, b, ok));
    }
    let threshold = strict_threshold(&rows);
    let mut report = Report::from_rows(Identity::Genineq, params, rows);
    match threshold {
        Some(t) => report.notes.push(format!("strict for {t} <= n <= {order}")),
        None => {
            report.notes.push("no strict tail".into());
            report.pass = false;
        }
    }
    Ok(report)
}

/// Smallest `n` such that every row from `n` on is strict.
pub fn strict_threshold(rows: &[Row]) -> Option<usize> {
    let strict = |r: &Row| {
        let a: BigInt = r.lhs.parse().expect("decimal");
        let b: BigInt = r.rhs.parse().expect("decimal");
        a > b
    };
    let mut t = None;
    for r in rows.iter().rev() {
        if strict(r) {
            t = Some(r.n);
        } else {
            break;
        }
    }
    t
}

/// Per `n`: how many partitions the lemma applies to, and how many satisfy it.
///
/// With `rr = true`: Rogers-Ramanujan partitions with `s` lower-Durfee
/// squares have the same squares as successive Durfee squares. Otherwise:
/// the numbers of lower-Durfee and Durfee squares agree.
fn lemma_rows(order: usize, rr: bool) -> Vec<Row> {
    (1..=order)
        .map(|n| {
            let (mut applies, mut holds) = (0u64, 0u64);
            for_each_partition(n as u32, |parts| {
                let lower = lower_durfee_sides(parts);
                let upper = durfee_sides(parts);
                if rr {
                    let p = Partition::new(parts.to_vec()).expect("valid partition");
                    if p.is_rogers_ramanujan(lower.len()) == Ok(true) {
                        applies += 1;
                        if upper.iter().rev().eq(lower.iter()) {
                            holds += 1;
                        }
                    }
                } else {
                    applies += 1;
                    if upper.len() == lower.len() {
                        holds += 1;
                    }
                }
            });
            Row::eq(n, applies, holds)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCase {
    pub modulus: u32,
    pub residue: u32,
    /// `modulus * n + residue`.
    pub argument: usize,
    /// `None` for the partition function itself.
    pub j: Option<usize>,
    pub value: BigInt,
    pub ok: bool,
}

/// `p(ln+m) = 0 (mod l)` and `Spt_j(ln+m) = 0 (mod l)` for
/// `(l, m) in {(5,4), (7,5), (11,6)}`, `ln+m <= n_max` and
/// `ln+m < j <= j_max`.
pub fn congruences(n_max: usize, j_max: usize) -> Vec<CongruenceCase> {
    let all = spt::gf_spt_j_all(j_max, n_max);
    let p = series::partition_series(n_max);
    let mut out = Vec::new();
    for (l, m) in [(5u32, 4u32), (7, 5), (11, 6)] {
        let modulus = BigInt::from(l);
        let mut arg = m as usize;
        while arg <= n_max {
            let mut push = |j: Option<usize>, value: &BigInt| {
                out.push(CongruenceCase {
                    modulus: l,
                    residue: m,
                    argument: arg,
                    j,
                    value: value.clone(),
                    ok: value.mod_floor(&modulus).is_zero(),
                });
            };
            push(None, &p.coeffs()[arg]);
            for j in arg + 1..=j_max {
                push(Some(j), &all[j].coeffs()[arg]);
            }
            arg += l as usize;
        }
    }
    out
}

/// First `n` at which `values` is negative, if any.
pub fn first_negative(values: &[BigInt]) -> Option<usize> {
    values.iter().position(|v| v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().is_err());
    }

    #[test]
    fn every_identity_passes_small() {
        for id in Identity::ALL {
            let params = Params::new(10).j(2).k(2).r(2);
            let report = run(id, params).unwrap();
            assert!(report.pass, "{id}: {:?} {:?}", report.first_failure(), report.notes);
        }
    }

    #[test]
    fn genineq_threshold_is_j() {
        for j in 1..=3 {
            for k in 1..=2 {
                let report = run(Identity::Genineq, Params::new(12).j(j).k(k)).unwrap();
                assert!(report.pass);
                assert_eq!(report.notes, vec![format!("strict for {j} <= n <= 12")]);
            }
        }
    }

    #[test]
    fn fdyson_notes_both_sources() {
        let report = run(Identity::Fdyson, Params::new(8)).unwrap();
        assert!(report.pass);
        assert!(report.notes[0].contains("M_2(1) = 2 (holds)"));
        assert!(report.notes[0].contains("M_2(1) = 1 (fails)"));
    }

    #[test]
    fn congruence_witnesses() {
        let cases = congruences(30, 31);
        assert!(cases.iter().all(|c| c.ok));
        let p9 = cases.iter().find(|c| c.j.is_none() && c.argument == 9).unwrap();
        assert_eq!(p9.value, BigInt::from(30));
        let s54 = cases.iter().find(|c| c.j == Some(5) && c.argument == 4).unwrap();
        assert_eq!(s54.value, BigInt::from(20));
        let p6 = cases.iter().find(|c| c.j.is_none() && c.argument == 6).unwrap();
        assert_eq!(p6.value, BigInt::from(11));
    }
}
