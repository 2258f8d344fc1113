//! Worker pool sizing for sampling loops.

use rayon::prelude::*;

/// Environment variable capping the number of sampling workers.
pub const THREADS_ENV: &str = "HYPERCONE_THREADS";

/// `(0..n).map(f)` evaluated in parallel, results in index order.
///
/// Runs on a dedicated pool when `HYPERCONE_THREADS` is set to a positive integer.
pub fn par_map<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    let run = || (0..n).into_par_iter().map(&f).collect();
    match std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(k) if k > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        _ => run(),
    }
}
