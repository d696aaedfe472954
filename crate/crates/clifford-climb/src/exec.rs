//! Sweep execution: rayon data-parallel when built with the `parallel`
//! feature and enabled in the budget, plain sequential loops otherwise.
//!
//! Sweeps must be order-deterministic, so the parallel path uses
//! `find_map_first`: the reported witness is always the earliest one.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` produced by `f` over `items`, in item order.
pub fn find_map_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().find_map_first(f);
        }
    }
    let _ = parallel;
    items.iter().find_map(f)
}

/// Whether this build can actually run sweeps in parallel.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
