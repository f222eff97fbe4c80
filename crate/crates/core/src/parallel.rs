//! Ordered fan-out over independent jobs.
//!
//! Results always come back in job order, so any reduction done by the caller sees the same
//! sequence of operands whatever the worker count.

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "RAMYIP_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// `None` lets the pool pick its default size.
    Parallel(Option<usize>),
}

impl Exec {
    /// Reads [`WORKERS_ENV`]; `1` means sequential.
    pub fn from_env() -> Self {
        match std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(0) | None => Exec::Parallel(None),
            Some(1) => Exec::Sequential,
            Some(k) => Exec::Parallel(Some(k)),
        }
    }

    pub fn with_workers(k: usize) -> Self {
        if k <= 1 {
            Exec::Sequential
        } else {
            Exec::Parallel(Some(k))
        }
    }

    /// `f(0), …, f(n−1)` in index order.
    pub fn map_ordered<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).collect(),
            Exec::Parallel(workers) => par_map(*workers, n, f),
        }
    }
}

impl Default for Exec {
    fn default() -> Self {
        Exec::Parallel(None)
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(workers: Option<usize>, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let run = || (0..n).into_par_iter().map(&f).collect();
    match workers {
        None => run(),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(run),
            Err(_) => (0..n).map(&f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(_workers: Option<usize>, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = Exec::Sequential.map_ordered(100, |i| i * i);
        let par = Exec::Parallel(Some(4)).map_ordered(100, |i| i * i);
        assert_eq!(seq, par);
    }
}
