//! Execution mode for the data-parallel sweeps (verifier rows, range checks,
//! per-edge criticality tests). With the `parallel` feature off every mode
//! runs sequentially; results never depend on the mode.

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(mode: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

/// True iff `pred` holds for every item.
pub fn all<T, F>(mode: Execution, items: Vec<T>, pred: F) -> bool
where
    T: Send,
    F: Fn(T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().all(pred);
    }
    let _ = mode;
    items.into_iter().all(pred)
}
