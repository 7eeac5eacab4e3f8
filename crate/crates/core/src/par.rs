//! Order-preserving parallel map that falls back to a serial loop when the
//! `parallel` feature is off (e.g. for wasm builds).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    items.par_iter_mut().for_each(f)
}

#[cfg(not(feature = "parallel"))]
pub fn map_mut<T, F>(items: &mut [T], f: F)
where
    F: Fn(&mut T),
{
    items.iter_mut().for_each(f)
}

/// Run `f` on a dedicated pool of `threads` workers. Without the `parallel`
/// feature this just calls `f`.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R>(_threads: usize, f: impl FnOnce() -> R) -> R {
    f()
}
