//! Rayon versions of the two long computations. Both split the work the
//! same way as the sequential code and combine in a fixed order, so results
//! do not depend on the number of threads.

use casimir_core::contributions::{b1_chunk_sum, b1_chunks, b1_combine};
use casimir_core::triangle::{
    classify_word, finish_enumeration, lyndon_representatives, Enumeration,
};
use casimir_core::Error;
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "CASIMIR_THREADS";

/// Runs `f` on a pool sized by `CASIMIR_THREADS`, or on the global pool.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
                CliError::Usage(format!(
                    "{THREADS_ENV} must be a positive integer, found `{v}`"
                ))
            })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

pub fn tail_b1_parallel(j_lo: u64, j_hi: u64) -> casimir_core::Result<f64> {
    if j_lo < 3 || j_hi < j_lo {
        return Err(Error::Domain("B1 needs 3 <= j_lo <= j_hi"));
    }
    let sums: Vec<f64> = b1_chunks(j_lo, j_hi)
        .into_par_iter()
        .map(|(a, b)| b1_chunk_sum(a, b))
        .collect();
    Ok(b1_combine(&sums))
}

pub fn enumerate_parallel(max_letters: usize) -> casimir_core::Result<Enumeration> {
    let words = lyndon_representatives(max_letters)?;
    let classified = words
        .par_iter()
        .map(classify_word)
        .collect::<casimir_core::Result<Vec<_>>>()?;
    let excluded = classified.iter().filter(|c| c.is_none()).count();
    Ok(finish_enumeration(
        classified.into_iter().flatten().collect(),
        excluded,
    ))
}
