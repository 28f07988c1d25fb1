//! Data-parallel helpers with a sequential fallback when the `parallel`
//! feature is off.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len`, preserving order.
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// Smallest `i` in `0..len` with `f(i) = Some(_)`.
pub(crate) fn find_first<T, F>(len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).find_map(f)
    }
}

/// Number of worker threads available to the parallel helpers.
pub fn current_num_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Runs `f` on a pool of `threads` workers (`None` keeps the global pool).
/// Without the `parallel` feature this just calls `f`.
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> crate::Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t.max(1))
                    .build()
                    .map_err(|e| crate::Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(f))
            }
            None => Ok(f()),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(f())
    }
}
