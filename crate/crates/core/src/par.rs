//! Data-parallel helpers.
//!
//! With the `parallel` feature the scans below run on the rayon pool; without
//! it they fall back to plain iterators. [`set_parallel`] switches the
//! parallel path off at runtime so both paths can be compared in one build.
//! Every helper returns results in index order, so output never depends on
//! scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Minimum amount of work items before a scan is handed to rayon.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 2048;

pub fn set_parallel(on: bool) {
    ENABLED.store(on, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::Relaxed)
}

#[cfg(feature = "parallel")]
fn go_parallel(n: usize) -> bool {
    n >= PAR_THRESHOLD && parallel_enabled()
}

/// Indices `i < n` with `pred(i)`, ascending.
pub fn filter_indices<F>(n: usize, pred: F) -> Vec<u32>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(n) {
        return (0..n)
            .into_par_iter()
            .filter(|&i| pred(i))
            .map(|i| i as u32)
            .collect();
    }
    (0..n).filter(|&i| pred(i)).map(|i| i as u32).collect()
}

/// `f(i)` for every `i < n`, in order.
pub fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(n) {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Map over a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Least index `i < n` with `pred(i)`.
pub fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(n) {
        return (0..n).into_par_iter().find_first(|&i| pred(i));
    }
    (0..n).find(|&i| pred(i))
}

/// Per-chunk accumulation followed by an ordered merge.
pub fn fold_chunks<A, F, M>(n: usize, init: impl Fn() -> A + Sync + Send, f: F, merge: M) -> A
where
    A: Send,
    F: Fn(&mut A, usize) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(not(feature = "parallel"))]
    let _ = merge;
    #[cfg(feature = "parallel")]
    if go_parallel(n) {
        let chunk = (n / (rayon::current_num_threads() * 4)).max(256);
        let starts: Vec<usize> = (0..n).step_by(chunk).collect();
        let parts: Vec<A> = starts
            .par_iter()
            .map(|&s| {
                let mut acc = init();
                for i in s..(s + chunk).min(n) {
                    f(&mut acc, i);
                }
                acc
            })
            .collect();
        let mut it = parts.into_iter();
        let first = it.next().unwrap_or_else(&init);
        return it.fold(first, &merge);
    }
    let mut acc = init();
    for i in 0..n {
        f(&mut acc, i);
    }
    acc
}
