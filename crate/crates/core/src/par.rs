//! Execution mode switch for the data-parallel sweeps.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! pool; without it every mode runs sequentially. Aggregations are
//! order-normalized, so results never depend on the mode or thread count.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this mode actually fans out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<I, T, F>(exec: Exec, items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Folds `f` over `0..len` in fixed-size blocks and merges the block results
/// with the associative, commutative `combine`.
pub fn fold_range<T, F, C>(exec: Exec, len: u64, identity: T, f: F, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(T, u64) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    const BLOCK: u64 = 256;
    let blocks = len.div_ceil(BLOCK);
    let run_block = |b: u64| {
        let lo = b * BLOCK;
        let hi = (lo + BLOCK).min(len);
        (lo..hi).fold(identity.clone(), &f)
    };
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..blocks).into_par_iter().map(run_block).reduce(|| identity.clone(), &combine);
    }
    let _ = exec;
    (0..blocks).map(run_block).fold(identity.clone(), combine)
}

/// Whether any item satisfies `pred`.
pub fn any<I, F>(exec: Exec, items: Vec<I>, pred: F) -> bool
where
    I: Send,
    F: Fn(I) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().any(pred);
    }
    let _ = exec;
    items.into_iter().any(pred)
}

/// Sizes the global worker pool; a no-op without the `parallel` feature.
pub fn set_threads(threads: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    return rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string());
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let s = fold_range(exec, 10_000, 0u64, |a, x| a + x, |a, b| a + b);
            assert_eq!(s, 10_000 * 9_999 / 2);
            assert_eq!(map(exec, (0..50).collect(), |x: i32| x * 2)[49], 98);
            assert!(any(exec, (0..50).collect(), |x: i32| x == 37));
        }
    }
}
