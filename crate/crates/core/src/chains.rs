//! Enumeration of the index tuples that drive the nested q-series sums.
//!
//! The nested sums run over weakly monotone tuples of nonnegative integers
//! whose terms start at `q^{sum a_i^2}`, so the enumeration stops as soon as a
//! partial cost exceeds the truncation order.

/// Visits every weakly increasing tuple `lo <= a[0] <= ... <= a[len-1] <= hi`
/// with `sum a[i]^2 <= budget`. The callback receives the tuple and its cost.
pub(crate) fn for_each_square_chain<F>(len: usize, lo: usize, hi: usize, budget: usize, f: &mut F)
where
    F: FnMut(&[usize], usize),
{
    let mut buf = Vec::with_capacity(len);
    square_rec(len, lo, hi, budget, 0, &mut buf, f);
}

fn square_rec<F>(
    len: usize,
    lo: usize,
    hi: usize,
    budget: usize,
    cost: usize,
    buf: &mut Vec<usize>,
    f: &mut F,
) where
    F: FnMut(&[usize], usize),
{
    if buf.len() == len {
        f(buf, cost);
        return;
    }
    let remaining = len - buf.len();
    let mut a = lo;
    while a <= hi {
        // All later entries are >= a, so the cheapest completion costs
        // remaining * a^2.
        let add = remaining * a * a;
        if cost + add > budget {
            break;
        }
        buf.push(a);
        square_rec(len, a, hi, budget, cost + a * a, buf, f);
        buf.pop();
        a += 1;
    }
}
