//! Integer partitions and their Ferrers-diagram structure.
//!
//! Parts are stored in weakly decreasing order, matching a Ferrers diagram
//! drawn with the largest part on top. Successive Durfee squares are peeled
//! from the top-left corner; successive lower-Durfee squares are stacked
//! from the bottom-left corner upwards.
//!
//! Marks follow the left-to-right convention of the decreasing listing:
//! `5+5+4+3+3+3` is marked `5_1 + 5_2 + 4_1 + 3_1 + 3_2 + 3_3`. Read in
//! increasing order, the mark of a part is the number of equal parts at or
//! above it.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Parts in increasing order.
    pub fn increasing(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    /// Multiplicity of the part `t`.
    pub fn frequency(&self, t: u32) -> u32 {
        frequency(&self.parts, t)
    }

    /// `(part, mark)` pairs in the decreasing listing.
    pub fn marks(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut run = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == p { run + 1 } else { 1 };
            out.push((p, run));
        }
        out
    }

    /// `(part, mark)` pairs in increasing order of parts.
    pub fn increasing_marks(&self) -> Vec<(u32, u32)> {
        increasing_marks(&self.parts)
    }

    pub fn successive_durfee(&self) -> DurfeeChain {
        DurfeeChain {
            kind: ChainKind::Upper,
            sides: durfee_sides(&self.parts),
        }
    }

    pub fn successive_lower_durfee(&self) -> DurfeeChain {
        DurfeeChain {
            kind: ChainKind::Lower,
            sides: lower_durfee_sides(&self.parts),
        }
    }

    /// Whether this is a Rogers-Ramanujan partition with `s` successive
    /// lower-Durfee squares: it has exactly `s` of them, and every part below
    /// the `s`-th (topmost) square is at most its side `d_s`.
    ///
    /// Fails if the partition is empty or has fewer than `s` squares.
    pub fn is_rogers_ramanujan(&self, s: usize) -> Result<bool> {
        if self.parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let sides = lower_durfee_sides(&self.parts);
        if s == 0 || sides.len() < s {
            return Err(Error::TooFewSquares {
                found: sides.len(),
                needed: s.max(1),
            });
        }
        if sides.len() > s {
            return Ok(false);
        }
        let below: usize = sides[..s - 1].iter().map(|&d| d as usize).sum();
        let top = sides[s - 1];
        let inc = self.increasing();
        Ok(inc[..below].iter().all(|&p| p <= top))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    /// Successive Durfee squares, listed first (top) to last.
    Upper,
    /// Successive lower-Durfee squares, listed bottom to top.
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DurfeeChain {
    pub kind: ChainKind,
    pub sides: Vec<u32>,
}

impl DurfeeChain {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    /// Number of parts covered by the first `count` squares.
    pub fn rows_covered(&self, count: usize) -> usize {
        self.sides.iter().take(count).map(|&d| d as usize).sum()
    }
}

pub(crate) fn frequency(parts: &[u32], t: u32) -> u32 {
    parts.iter().filter(|&&p| p == t).count() as u32
}

/// Marks in increasing order, for a decreasing slice.
pub(crate) fn increasing_marks(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(parts.len());
    // Walking the decreasing listing from the right, the mark of a part is
    // how many equal parts remain to its left, itself included.
    for (i, &p) in parts.iter().enumerate().rev() {
        let mut mark = 1;
        let mut k = i;
        while k > 0 && parts[k - 1] == p {
            mark += 1;
            k -= 1;
        }
        out.push((p, mark));
    }
    out
}

/// Sides of the successive Durfee squares of a decreasing slice.
pub(crate) fn durfee_sides(parts: &[u32]) -> Vec<u32> {
    let mut sides = Vec::new();
    let mut rest = parts;
    while !rest.is_empty() {
        let d = rest
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count();
        sides.push(d as u32);
        rest = &rest[d..];
    }
    sides
}

/// Sides of the successive lower-Durfee squares of a decreasing slice,
/// bottom to top. Each square is limited by the smallest remaining part and
/// by the number of remaining parts.
pub(crate) fn lower_durfee_sides(parts: &[u32]) -> Vec<u32> {
    let mut sides = Vec::new();
    let mut remaining = parts.len();
    while remaining > 0 {
        // parts[remaining - 1] is the smallest part not yet covered.
        let d = (parts[remaining - 1] as usize).min(remaining);
        sides.push(d as u32);
        remaining -= d;
    }
    sides
}

/// Partitions of `n` in reverse lexicographic order, starting from `(n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

pub fn enumerate(n: u32) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

/// Steps `parts` to its reverse-lexicographic successor; false at `1^n`.
fn advance(parts: &mut Vec<u32>) -> bool {
    let mut ones = 0u32;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let Some(last) = parts.last_mut() else {
        return false;
    };
    *last -= 1;
    let v = *last;
    let mut rem = ones + 1;
    while rem >= v {
        parts.push(v);
        rem -= v;
    }
    if rem > 0 {
        parts.push(rem);
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(Partition { parts: cur })
    }
}

/// Visits every partition of `n` as a decreasing slice without allocating
/// per partition. Same order as [`enumerate`].
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut f: F) {
    let mut parts = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        f(&parts);
        if !advance(&mut parts) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::partition_series;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn figure_one() -> Partition {
        p(&[9, 8, 8, 8, 8, 6, 6, 5, 4, 4, 3])
    }

    /// Largest `d` such that a `d x d` block of cells sits in the diagram with
    /// its corner at (row0, 0), checked cell by cell.
    fn max_square_at(parts: &[u32], row0: usize) -> usize {
        let mut d = 0;
        while row0 + d < parts.len() && (row0..=row0 + d).all(|r| parts[r] as usize > d) {
            d += 1;
        }
        d
    }

    #[test]
    fn enumerate_small() {
        let all: Vec<Vec<u32>> = enumerate(4).map(|q| q.parts().to_vec()).collect();
        assert_eq!(
            all,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        let zero: Vec<Partition> = enumerate(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(enumerate(9).count(), 30);
    }

    #[test]
    fn enumerate_counts_match_series() {
        let pn = partition_series(60);
        for n in 0..=60u32 {
            let mut count = 0u64;
            for_each_partition(n, |_| count += 1);
            assert_eq!(BigInt::from(count), pn.coeffs()[n as usize], "n = {n}");
        }
        assert_eq!(enumerate(12).count(), 77);
    }

    #[test]
    fn enumeration_is_strictly_decreasing_lexicographically() {
        let all: Vec<Partition> = enumerate(10).collect();
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
            assert_eq!(w[1].n(), 10);
        }
        let mut visited = Vec::new();
        for_each_partition(10, |s| visited.push(s.to_vec()));
        let iter: Vec<Vec<u32>> = all.iter().map(|q| q.parts().to_vec()).collect();
        assert_eq!(visited, iter);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn durfee_chains() {
        assert_eq!(figure_one().successive_durfee().sides, vec![6, 4, 1]);
        assert_eq!(p(&[1]).successive_durfee().sides, vec![1]);
        assert_eq!(p(&[2, 2]).successive_durfee().sides, vec![2]);
        assert!(Partition::empty().successive_durfee().is_empty());
    }

    #[test]
    fn lower_durfee_chains() {
        let lower = figure_one().successive_lower_durfee();
        assert_eq!(lower.kind, ChainKind::Lower);
        assert_eq!(lower.sides, vec![3, 5, 3]);
        assert_eq!(p(&[1]).successive_lower_durfee().sides, vec![1]);
        assert_eq!(p(&[4, 4, 3, 3, 2]).successive_lower_durfee().sides, vec![2, 3]);
        assert_eq!(p(&[4, 4]).successive_lower_durfee().sides, vec![2]);
        assert!(Partition::empty().successive_lower_durfee().is_empty());
    }

    #[test]
    fn durfee_matches_cell_scan() {
        for n in 1..=14 {
            for q in enumerate(n) {
                let mut row = 0;
                let mut sides = Vec::new();
                while row < q.len() {
                    let d = max_square_at(&q.parts()[row..], 0);
                    sides.push(d as u32);
                    row += d;
                }
                assert_eq!(q.successive_durfee().sides, sides, "{q}");
            }
        }
    }

    #[test]
    fn lower_durfee_matches_cell_scan() {
        // Scan from the bottom: the square occupies the bottom rows of the
        // remaining diagram and is as large as fits.
        for n in 1..=14 {
            for q in enumerate(n) {
                let mut top = q.len();
                let mut sides = Vec::new();
                while top > 0 {
                    let mut d = 0;
                    while d < top && (top - d - 1..top).all(|r| q.parts()[r] as usize > d) {
                        d += 1;
                    }
                    sides.push(d as u32);
                    top -= d;
                }
                assert_eq!(q.successive_lower_durfee().sides, sides, "{q}");
            }
        }
    }

    #[test]
    fn rogers_ramanujan_predicate() {
        assert!(!p(&[2, 2, 1]).is_rogers_ramanujan(1).unwrap());
        assert!(p(&[3, 3, 3]).is_rogers_ramanujan(1).unwrap());
        assert!(p(&[5, 5]).is_rogers_ramanujan(1).unwrap());
        // (3,2,2,1): lower chain (1,2,1); parts below the top square are 1,2,2 > 1.
        assert!(!p(&[3, 2, 2, 1]).is_rogers_ramanujan(3).unwrap());
        // (2,2,1): lower chain (1,2); the part below the top square is 1 <= 2.
        assert!(p(&[2, 2, 1]).is_rogers_ramanujan(2).unwrap());
        assert!(!figure_one().is_rogers_ramanujan(3).unwrap());
        assert!(matches!(
            p(&[3]).is_rogers_ramanujan(2),
            Err(Error::TooFewSquares { found: 1, needed: 2 })
        ));
        assert_eq!(
            Partition::empty().is_rogers_ramanujan(1),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn marks_and_frequency() {
        let q = p(&[5, 5, 4, 3, 3, 3]);
        assert_eq!(q.marks(), vec![(5, 1), (5, 2), (4, 1), (3, 1), (3, 2), (3, 3)]);
        assert_eq!(
            q.increasing_marks(),
            vec![(3, 3), (3, 2), (3, 1), (4, 1), (5, 2), (5, 1)]
        );
        assert!(p(&[7, 4, 2]).marks().iter().all(|&(_, m)| m == 1));
        assert_eq!(
            p(&[1, 1, 1, 1]).marks().iter().map(|x| x.1).collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        let r = p(&[3, 3, 2]);
        assert_eq!(r.frequency(3), 2);
        assert_eq!(r.frequency(5), 0);
    }

    #[test]
    fn lower_chain_monotone_except_last() {
        for n in 1..=25 {
            for_each_partition(n, |s| {
                let sides = lower_durfee_sides(s);
                if sides.len() >= 2 {
                    for i in 0..sides.len() - 2 {
                        assert!(sides[i] <= sides[i + 1], "{s:?}");
                    }
                }
            });
        }
    }

    #[test]
    fn upper_chain_square_sum_bound() {
        for n in 1..=18 {
            for q in enumerate(n) {
                let c = q.successive_durfee();
                assert!(c.sides.windows(2).all(|w| w[0] >= w[1]));
                let sq: u32 = c.sides.iter().map(|d| d * d).sum();
                assert!(sq <= n);
                let stack_of_squares = c
                    .sides
                    .iter()
                    .flat_map(|&d| std::iter::repeat(d).take(d as usize))
                    .collect::<Vec<_>>()
                    == q.parts();
                assert_eq!(sq == n, stack_of_squares, "{q}");
            }
        }
    }

    proptest! {
        #[test]
        fn frequencies_conserve_n(raw in proptest::collection::vec(1u32..12, 0..15)) {
            let q = Partition::from_unsorted(raw).unwrap();
            let mut distinct = q.parts().to_vec();
            distinct.dedup();
            let total: u32 = distinct.iter().map(|&t| t * q.frequency(t)).sum();
            prop_assert_eq!(total, q.n());
            let marks = q.marks();
            for &t in &distinct {
                let max_mark = marks.iter().filter(|m| m.0 == t).map(|m| m.1).max().unwrap();
                prop_assert_eq!(max_mark, q.frequency(t));
            }
        }
    }
}
