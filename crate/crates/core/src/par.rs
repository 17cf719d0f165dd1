//! Parallel/sequential execution of independent work items.
//!
//! With the `parallel` feature the data-parallel kernels fan out over the
//! current rayon pool; a pool of one thread (or building without the
//! feature) takes the hand-written sequential path, so results never depend
//! on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over items, parallel when a multi-thread pool is active.
/// Output order always matches input order.
pub(crate) fn maybe_par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if rayon::current_num_threads() > 1 {
            return items.par_iter().map(&f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Maps `f` over a range of indices; same contract as [`maybe_par_map`].
pub(crate) fn maybe_par_map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if rayon::current_num_threads() > 1 {
            return (0..n).into_par_iter().map(&f).collect();
        }
    }
    (0..n).map(f).collect()
}

/// True when the crate was built without the rayon backend.
pub fn sequential_build() -> bool {
    cfg!(not(feature = "parallel"))
}
