//! Thread control for the parallel coset sums.

use crate::error::{Error, Result};

/// Runs `f` on a pool of `threads` workers, or on the global pool when `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InvalidInput(alloc::format!("cannot start {} threads: {}", k, e)))?;
            Ok(pool.install(f))
        }
    }
}
