use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use spt_core::partitions::enumerate;
use spt_core::series::{gauss_binomial, partition_series, TruncSeries};
use spt_core::spt::{self, jw_k_weight, w_k_weight, w_weight};
use spt_core::stats::{crank, jrank, rank, CountTable};
use spt_core::Partition;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 1..14).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn conjugate(p: &Partition) -> Partition {
    let parts = p.parts();
    let cols = (1..=parts[0])
        .map(|c| parts.iter().filter(|&&x| x >= c).count() as u32)
        .collect();
    Partition::new(cols).unwrap()
}

proptest! {
    #[test]
    fn chain_counts_agree(p in partition()) {
        let lower = p.successive_lower_durfee();
        let upper = p.successive_durfee();
        prop_assert_eq!(lower.len(), upper.len());
        prop_assert_eq!(lower.rows_covered(lower.len()), p.len());
        prop_assert_eq!(upper.rows_covered(upper.len()), p.len());
    }

    #[test]
    fn rank_flips_under_conjugation(p in partition()) {
        prop_assert_eq!(rank(&conjugate(&p)).unwrap(), -rank(&p).unwrap());
        prop_assert_eq!(jrank(&p, 2).unwrap(), Some(rank(&p).unwrap()));
    }

    #[test]
    fn crank_is_bounded(p in partition()) {
        let c = crank(&p).unwrap();
        prop_assert!(c.unsigned_abs() as u32 <= p.n());
    }

    #[test]
    fn marks_and_weights(p in partition(), j in 1usize..6) {
        let all_marks: u64 = p.increasing_marks().iter().map(|&(_, m)| m as u64).sum();
        let w = w_weight(&p, j).unwrap();
        prop_assert!(w <= w_weight(&p, j + 1).unwrap());
        prop_assert!(w <= all_marks);
        prop_assert_eq!(w_weight(&p, p.len() + 1).unwrap(), all_marks);
        // W_j telescopes into the per-level weights with k = 1.
        let levels: BigInt = (1..=j).map(|l| jw_k_weight(&p, l, 1).unwrap()).sum();
        prop_assert_eq!(levels, BigInt::from(w));
    }

    #[test]
    fn first_level_is_garvan_weight(p in partition(), k in 1u32..4) {
        prop_assert_eq!(jw_k_weight(&p, 1, k).unwrap(), w_k_weight(&p, k).unwrap());
        let smallest = p.smallest().unwrap();
        prop_assert_eq!(w_k_weight(&p, 1).unwrap(), BigInt::from(p.frequency(smallest)));
    }

    #[test]
    fn gaussian_symmetry(n in 0usize..14, m in 0i64..14) {
        prop_assume!(m as usize <= n);
        // Degree m(n-m) stays below the truncation.
        let order = 60;
        prop_assert_eq!(gauss_binomial(n, m, order), gauss_binomial(n, n as i64 - m, order));
        let at_one: BigInt = gauss_binomial(n, m, order).coeffs().iter().sum();
        let binom: BigInt = (0..m).fold(BigInt::from(1), |acc, i| acc * (n as i64 - i) / (i + 1));
        prop_assert_eq!(at_one, binom);
    }

    #[test]
    fn series_product_is_commutative(a in prop::collection::vec(-5i64..5, 9), b in prop::collection::vec(-5i64..5, 9)) {
        let x = TruncSeries::from_i64s(&a, 8);
        let y = TruncSeries::from_i64s(&b, 8);
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }
}

#[test]
fn spt_j_monotone_and_bounded() {
    let order = 30;
    let all = spt::gf_spt_j_all(order + 1, order);
    let np = spt::np_series(order);
    for n in 1..=order {
        for j in 1..=order {
            let (a, b) = (&all[j].coeffs()[n], &all[j + 1].coeffs()[n]);
            assert!(a > &BigInt::zero() && a <= b && b <= &np.coeffs()[n], "j={j} n={n}");
        }
    }
}

#[test]
fn spt_j_differences_are_half_moment_gaps() {
    let order = 30;
    let all = spt::gf_spt_j_all(4, order);
    let tables: Vec<CountTable> = (1..=5).map(|j| CountTable::from_gf(j, order).unwrap()).collect();
    for j in 1..=4 {
        for n in 1..=order {
            let lhs = &all[j].coeffs()[n] - &all[j - 1].coeffs()[n];
            let gap = tables[j - 1].moment(2, n) - tables[j].moment(2, n);
            assert_eq!(lhs * 2, gap, "j={j} n={n}");
        }
    }
}

#[test]
fn three_routes_for_spt_j() {
    let order = 25;
    let gf = spt::gf_spt_j_all(4, 50);
    for j in 1..=4 {
        let moments = spt::spt_j_by_moments(j, 50).unwrap();
        assert_eq!(gf[j].coeffs(), &moments[..], "j={j}");
        for n in 1..=order as u32 {
            let weights: u64 = enumerate(n).map(|q| w_weight(&q, j).unwrap()).sum();
            assert_eq!(BigInt::from(weights), gf[j].coeffs()[n as usize], "j={j} n={n}");
        }
    }
}

#[test]
fn spt_families_are_nonnegative() {
    let order = 20;
    for j in 1..=3 {
        for k in 1..=3 {
            let s = spt::gf_jsptk(j, k, order).unwrap();
            assert!(s.coeffs().iter().all(|c| c >= &BigInt::zero()), "j={j} k={k}");
        }
    }
    let p = partition_series(order);
    assert!(p.coeffs().iter().all(|c| c > &BigInt::zero()));
}
