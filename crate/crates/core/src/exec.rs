//! Sequential or data-parallel evaluation of independent work items.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on
//! rayon; without it both variants run sequentially. Results always come
//! back in input order. `MESC_THREADS` caps the number of worker threads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "MESC_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this build can actually run in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `items.iter().map(f).collect()`, possibly in parallel.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return install(|| items.par_iter().map(f).collect());
        }
        items.iter().map(f).collect()
    }
}

#[cfg(feature = "parallel")]
fn install<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    use std::sync::OnceLock;
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    let pool = POOL.get_or_init(|| {
        let threads = std::env::var(THREADS_ENV)
            .ok()?
            .trim()
            .parse::<usize>()
            .ok()?;
        if threads == 0 {
            return None;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .ok()
    });
    match pool {
        Some(pool) => pool.install(op),
        None => op(),
    }
}
