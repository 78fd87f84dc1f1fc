//! Data-parallel sweeps with sequential fallback.
//!
//! Every hot loop in the crate (the displacement sup over a theta grid, the
//! quotient-metric lambda grids, the oracle batteries) reduces with max/min,
//! so results are independent of evaluation order. With the `parallel`
//! feature the dispatching functions run on rayon; without it they alias the
//! sequential versions. The `_seq` variants are always available so the bench
//! suite can compare both in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maximum of `f` over `0..n`, sequential.
pub fn sup_f64_seq(n: usize, f: impl Fn(usize) -> f64) -> f64 {
    (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(feature = "parallel")]
pub fn sup_f64_par(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> f64 {
    (0..n)
        .into_par_iter()
        .map(f)
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

pub fn sup_f64(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> f64 {
    #[cfg(feature = "parallel")]
    {
        sup_f64_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sup_f64_seq(n, f)
    }
}

/// Index and value of the minimum of `f` over `0..n`; ties resolve to the
/// lowest index so the result does not depend on the schedule.
pub fn argmin_f64_seq(n: usize, f: impl Fn(usize) -> f64) -> (usize, f64) {
    let mut best = (usize::MAX, f64::INFINITY);
    for i in 0..n {
        let v = f(i);
        if v < best.1 || (v == best.1 && i < best.0) {
            best = (i, v);
        }
    }
    best
}

#[cfg(feature = "parallel")]
pub fn argmin_f64_par(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> (usize, f64) {
    (0..n)
        .into_par_iter()
        .map(|i| (i, f(i)))
        .reduce(
            || (usize::MAX, f64::INFINITY),
            |a, b| {
                if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) {
                    b
                } else {
                    a
                }
            },
        )
}

pub fn argmin_f64(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> (usize, f64) {
    #[cfg(feature = "parallel")]
    {
        argmin_f64_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        argmin_f64_seq(n, f)
    }
}

/// First failure (lowest index) of a batched check, if any.
pub fn first_failure_seq<T: Send>(n: usize, f: impl Fn(usize) -> Option<T>) -> Option<(usize, T)> {
    (0..n).find_map(|i| f(i).map(|t| (i, t)))
}

#[cfg(feature = "parallel")]
pub fn first_failure_par<T: Send>(
    n: usize,
    f: impl Fn(usize) -> Option<T> + Sync + Send,
) -> Option<(usize, T)> {
    (0..n)
        .into_par_iter()
        .filter_map(|i| f(i).map(|t| (i, t)))
        .min_by_key(|(i, _)| *i)
}

pub fn first_failure<T: Send>(
    n: usize,
    f: impl Fn(usize) -> Option<T> + Sync + Send,
) -> Option<(usize, T)> {
    #[cfg(feature = "parallel")]
    {
        first_failure_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_failure_seq(n, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seq_and_dispatch_agree() {
        let f = |i: usize| ((i as f64) * 0.37).sin();
        assert_eq!(sup_f64_seq(1000, f), sup_f64(1000, f));
        assert_eq!(argmin_f64_seq(1000, f), argmin_f64(1000, f));
    }

    #[test]
    fn first_failure_picks_lowest_index() {
        let f = |i: usize| if i >= 17 && i % 2 == 1 { Some(i) } else { None };
        assert_eq!(first_failure(100, f), Some((17, 17)));
        assert_eq!(first_failure(10, f), None);
    }
}
