//! Thread-pool executor for trial maps.

use std::sync::Arc;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use rfh_core::rng::derive_seed;
use rfh_core::verify::{Executor, Sequential};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "RFH_WORKERS";

/// Runs trials on a dedicated rayon pool. Output order is trial order, so
/// reports are identical to [`Sequential`] ones.
#[derive(Clone)]
pub struct Parallel {
    pool: Arc<ThreadPool>,
    threads: usize,
}

impl Parallel {
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let threads = threads.max(1);
        let pool = ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(Self {
            pool: Arc::new(pool),
            threads,
        })
    }

    pub fn threads(&self) -> usize {
        self.threads
    }
}

impl std::fmt::Debug for Parallel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Parallel").field("threads", &self.threads).finish()
    }
}

impl Executor for Parallel {
    fn map_trials<T, F>(&self, trials: usize, master_seed: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, u64) -> T + Sync + Send,
    {
        self.pool.install(|| {
            (0..trials)
                .into_par_iter()
                .map(|k| f(k, derive_seed(master_seed, k as u64)))
                .collect()
        })
    }
}

/// Either executor, picked at run time from a worker count.
#[derive(Debug, Clone)]
pub enum Workers {
    Sequential(Sequential),
    Parallel(Parallel),
}

impl Workers {
    /// One worker runs on the calling thread; more use a pool.
    pub fn new(count: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        if count <= 1 {
            Ok(Self::Sequential(Sequential))
        } else {
            Parallel::new(count).map(Self::Parallel)
        }
    }

    pub fn count(&self) -> usize {
        match self {
            Self::Sequential(_) => 1,
            Self::Parallel(p) => p.threads(),
        }
    }
}

impl Executor for Workers {
    fn map_trials<T, F>(&self, trials: usize, master_seed: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, u64) -> T + Sync + Send,
    {
        match self {
            Self::Sequential(s) => s.map_trials(trials, master_seed, f),
            Self::Parallel(p) => p.map_trials(trials, master_seed, f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_keeps_trial_order() {
        let seq = Sequential.map_trials(500, 7, |k, s| (k, s));
        let par = Parallel::new(3).unwrap().map_trials(500, 7, |k, s| (k, s));
        assert_eq!(seq, par);
    }

    #[test]
    fn worker_selection() {
        assert_eq!(Workers::new(0).unwrap().count(), 1);
        assert_eq!(Workers::new(1).unwrap().count(), 1);
        assert_eq!(Workers::new(4).unwrap().count(), 4);
    }
}
