//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (default) `Execution::Parallel` fans work out
//! over the rayon pool; without it, both variants run sequentially. Every
//! caller reduces with an associative, order-insensitive combiner, so
//! results never depend on scheduling.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Maps every index of `range` and folds the results with `reduce`.
    pub fn map_reduce<T, M, R, I>(self, range: Range<u64>, identity: I, map: M, reduce: R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        M: Fn(u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().map(map).reduce(identity, reduce)
            }
            _ => range.map(map).fold(identity(), reduce),
        }
    }

    /// Maps every item, preserving input order.
    pub fn map_collect<A, T, M>(self, items: &[A], map: M) -> Vec<T>
    where
        A: Sync,
        T: Send,
        M: Fn(&A) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(map).collect()
            }
            _ => items.iter().map(map).collect(),
        }
    }
}
