//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use spt_core::partitions::for_each_partition;
use spt_core::series::partition_series;
use spt_core::spt::{self, jw_k_weight, w_weight};
use spt_core::verify::{self, Identity, Params, Report};
use spt_core::Partition;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Runs `id` over every parameter set; fails on the first failing report.
fn all_pass(id: Identity, params: impl IntoIterator<Item = Params>) -> Result<Vec<Report>, String> {
    let mut out = Vec::new();
    for p in params {
        let report = verify::run(id, p).map_err(|e| format!("{id} {p:?}: {e}"))?;
        if !report.pass {
            let row = report.first_failure();
            return Err(format!("{id} j={} k={} r={}: first discrepancy {row:?} {:?}", p.j, p.k, p.r, report.notes));
        }
        out.push(report);
    }
    Ok(out)
}

fn grid(order: usize, js: &[usize], ks: &[u32]) -> Vec<Params> {
    js.iter()
        .flat_map(|&j| ks.iter().map(move |&k| Params::new(order).j(j).k(k)))
        .collect()
}

fn c1() -> Outcome {
    let start = Instant::now();
    let report = verify::run(Identity::Sptpn, Params::new(60)).expect("sptpn runs");
    let secs = start.elapsed().as_secs_f64();
    let pass = report.pass && secs < 10.0;
    outcome(pass, format!("n <= 60, three-way equality, {secs:.2} s"))
}

fn c2() -> Outcome {
    match all_pass(Identity::Genn1, grid(40, &[1, 2, 3], &[1])) {
        Ok(_) => {
            let same = spt::gf_genn1_lhs(1, 40).expect("j = 1") == spt::gf_spt(40);
            outcome(same, "order 40, j = 1..3; j = 1 matches the spt series")
        }
        Err(e) => outcome(false, e),
    }
}

fn c3() -> Outcome {
    let fig = Partition::new(vec![9, 8, 8, 8, 8, 6, 6, 5, 4, 4, 3]).unwrap();
    let worked = [
        w_weight(&fig, 3).unwrap(),
        w_weight(&Partition::new(vec![4, 4, 3, 3, 2]).unwrap(), 3).unwrap(),
        w_weight(&Partition::new(vec![4, 4]).unwrap(), 3).unwrap(),
    ];
    if worked != [17, 7, 3] {
        return outcome(false, format!("worked weights {worked:?}"));
    }
    let gf = spt::gf_spt_j_all(4, 25);
    for j in 1..=4 {
        for n in 1..=25u32 {
            let mut total = 0u64;
            for_each_partition(n, |parts| {
                total += w_weight(&Partition::new(parts.to_vec()).unwrap(), j).unwrap();
            });
            if BigInt::from(total) != gf[j].coeffs()[n as usize] {
                return outcome(false, format!("j = {j}, n = {n}: {total} vs {}", gf[j].coeffs()[n as usize]));
            }
        }
    }
    outcome(true, "n <= 25, j = 1..4, worked weights 17, 7, 3")
}

fn c4() -> Outcome {
    if let Err(e) = all_pass(Identity::Sptpng, grid(40, &[1, 2, 3, 4, 5], &[1])) {
        return outcome(false, e);
    }
    let all = spt::gf_spt_j_all(41, 40);
    let p = partition_series(40);
    let mut boundary = Vec::new();
    for n in 1..=40usize {
        let np = &p.coeffs()[n] * BigInt::from(n);
        for j in n + 1..=41 {
            if all[j].coeffs()[n] != np {
                return outcome(false, format!("Spt_{j}({n}) != n p(n)"));
            }
        }
        // Where equality actually starts, for the record.
        let first = (1..=41).find(|&j| all[j].coeffs()[n] == np).unwrap();
        boundary.push(first == n);
    }
    let note = if boundary.iter().all(|&b| b) {
        "equality already holds at j = n"
    } else {
        "equality boundary differs from j = n somewhere"
    };
    outcome(true, format!("n <= 40, j <= 5; Spt_j(n) = n p(n) for all j > n ({note})"))
}

fn c5() -> Outcome {
    let cases = verify::congruences(30, 31);
    match cases.iter().find(|c| !c.ok) {
        Some(c) => outcome(false, format!("witness {c:?}")),
        None => outcome(true, format!("{} cases, ln+m <= 30, j up to 31", cases.len())),
    }
}

fn c6() -> Outcome {
    match all_pass(Identity::Kn1, grid(30, &[1, 2, 3], &[1])) {
        Ok(_) => outcome(true, "order 30, j = 1..3 (j = 1 is the Watson special case)"),
        Err(e) => outcome(false, e),
    }
}

fn c7() -> Outcome {
    match all_pass(Identity::Genjmu2k, grid(30, &[1, 2, 3], &[1, 2, 3])) {
        Ok(_) => outcome(true, "n <= 30, j, k <= 3, extract = closed form = table"),
        Err(e) => outcome(false, e),
    }
}

fn c8() -> Outcome {
    let params = (1..=3).flat_map(|r| (1..=2).map(move |k| Params::new(25).r(r).k(k)));
    match all_pass(Identity::Appbp, params) {
        Ok(_) => outcome(true, "order 25, r <= 3, k <= 2"),
        Err(e) => outcome(false, e),
    }
}

fn c9() -> Outcome {
    if let Err(e) = all_pass(Identity::Gtjsptk, grid(20, &[1, 2, 3], &[1, 2, 3])) {
        return outcome(false, e);
    }
    for j in 1..=3usize {
        for k in 1..=3u32 {
            let gf = spt::gf_jsptk(j, k, 20).unwrap();
            for n in 1..=20u32 {
                let mut total = BigInt::zero();
                for_each_partition(n, |parts| {
                    total += jw_k_weight(&Partition::new(parts.to_vec()).unwrap(), j, k).unwrap();
                });
                if total != gf.coeffs()[n as usize] {
                    return outcome(false, format!("weights j={j} k={k} n={n}"));
                }
            }
        }
    }
    outcome(true, "n <= 20, j, k <= 3, both gf forms = weights = moments")
}

fn c10() -> Outcome {
    if let Err(e) = all_pass(Identity::Relos, grid(30, &[1, 2, 3], &[1, 2, 3])) {
        return outcome(false, e);
    }
    match all_pass(Identity::Genineq, grid(30, &[1, 2, 3], &[1, 2, 3])) {
        Ok(reports) => {
            let thresholds: Vec<String> = reports
                .iter()
                .map(|r| {
                    let t = verify::strict_threshold(&r.rows).unwrap_or(0);
                    format!("(j={},k={}):{t}", r.params.j, r.params.k)
                })
                .collect();
            outcome(true, format!("n <= 30, j, k <= 3; strict from n = {}", thresholds.join(" ")))
        }
        Err(e) => outcome(false, e),
    }
}

fn c11() -> Outcome {
    match all_pass(Identity::Lemma31, [Params::new(25)]).and_then(|_| all_pass(Identity::Lemma32, [Params::new(25)])) {
        Ok(reports) => {
            let total: u64 = reports[0].rows.iter().map(|r| r.lhs.parse::<u64>().unwrap()).sum();
            outcome(true, format!("all {total} partitions of n <= 25"))
        }
        Err(e) => outcome(false, e),
    }
}

fn c12() -> Outcome {
    if let Err(e) = all_pass(Identity::RkForms, grid(25, &[2, 3, 4], &[1])) {
        return outcome(false, e);
    }
    let report = verify::run(Identity::Fdyson, Params::new(40)).unwrap();
    let tail_ok = report.rows.iter().filter(|r| r.n >= 2).all(|r| r.ok);
    let n1_reported = report.notes.iter().any(|n| n.contains("fails"));
    let note = report.notes.join("; ");
    outcome(tail_ok && n1_reported, format!("three forms at order 25, j = 2..4; n p(n) = M_2(n)/2 for 2 <= n <= 40; {note}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("spt(n) = n p(n) - N_2(n)/2", c1),
        ("generalized spt generating function identity", c2),
        ("Spt_j(n) as a sum of lower-Durfee weights", c3),
        ("Spt_j(n) = n p(n) - _{j+1}N_2(n)/2", c4),
        ("Spt_j congruences mod 5, 7, 11", c5),
        ("bivariate summation identity", c6),
        ("symmetrized j-rank moment generating function", c7),
        ("Bailey-pair instantiation", c8),
        ("jspt_k by two gfs, weights and moments", c9),
        ("moment relation and j-rank moment inequality", c10),
        ("lower-Durfee versus Durfee squares", c11),
        ("forms of R_j and n p(n) = M_2(n)/2", c12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{:>2}] {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
