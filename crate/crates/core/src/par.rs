//! Execution policy for the exhaustive sweeps.
//!
//! Every sweep in the crate is expressed as an ordered map over independent
//! work items followed by an in-order merge, so the result never depends on
//! how many threads ran it. With the `parallel` feature disabled the same
//! code runs sequentially.

use serde::{Deserialize, Serialize};

/// How many worker threads a sweep may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Parallelism {
    Sequential,
    /// Use the global rayon pool.
    #[default]
    Auto,
    Threads(usize),
}

impl Parallelism {
    /// Maps a worker count from the command line: 1 is sequential, 0 lets the pool decide.
    pub fn from_workers(workers: usize) -> Self {
        match workers {
            0 => Parallelism::Auto,
            1 => Parallelism::Sequential,
            n => Parallelism::Threads(n),
        }
    }

    pub fn is_sequential(self) -> bool {
        !cfg!(feature = "parallel") || matches!(self, Parallelism::Sequential | Parallelism::Threads(0 | 1))
    }
}

/// Applies `f` to every item and returns the results in input order.
pub fn map_ordered<T, R, F>(items: Vec<T>, par: Parallelism, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if par.is_sequential() || items.len() < 2 {
        return items.into_iter().map(f).collect();
    }
    parallel::map_ordered(items, par, f)
}

#[cfg(feature = "parallel")]
mod parallel {
    use super::Parallelism;
    use rayon::prelude::*;

    pub(super) fn map_ordered<T, R, F>(items: Vec<T>, par: Parallelism, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match par {
            Parallelism::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| items.into_par_iter().map(&f).collect()),
                Err(_) => items.into_par_iter().map(f).collect(),
            },
            _ => items.into_par_iter().map(f).collect(),
        }
    }
}

#[cfg(not(feature = "parallel"))]
mod parallel {
    use super::Parallelism;

    pub(super) fn map_ordered<T, R, F>(items: Vec<T>, _par: Parallelism, f: F) -> Vec<R>
    where
        F: Fn(T) -> R,
    {
        items.into_iter().map(f).collect()
    }
}
