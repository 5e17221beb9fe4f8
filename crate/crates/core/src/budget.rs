//! Process-wide resource limits for Gröbner computations.

use std::cell::Cell;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_SPAIRS: usize = 1_000_000;
pub const DEFAULT_MAX_PD: usize = 12;
pub const DEFAULT_MAX_BETTI: usize = 100_000;

static MAX_SPAIRS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SPAIRS);
static MAX_PD: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_PD);
static MAX_BETTI: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_BETTI);
static DEADLINE: Mutex<Option<Instant>> = Mutex::new(None);

thread_local! {
    static LOCAL_MAX_SPAIRS: Cell<Option<usize>> = const { Cell::new(None) };
}

/// Maximum number of S-pairs a single Buchberger run may process.
pub fn max_spairs() -> usize {
    LOCAL_MAX_SPAIRS.with(|c| c.get()).unwrap_or_else(|| MAX_SPAIRS.load(Ordering::Relaxed))
}

/// Run `f` with a different S-pair limit on the current thread only.
pub fn with_max_spairs<T>(n: usize, f: impl FnOnce() -> T) -> T {
    let old = LOCAL_MAX_SPAIRS.with(|c| c.replace(Some(n.max(1))));
    let out = f();
    LOCAL_MAX_SPAIRS.with(|c| c.set(old));
    out
}

pub fn set_max_spairs(n: usize) {
    MAX_SPAIRS.store(n.max(1), Ordering::Relaxed);
}

/// Longest resolution and largest total frame rank a resolution may reach.
pub fn resolution_limits() -> (usize, usize) {
    (MAX_PD.load(Ordering::Relaxed), MAX_BETTI.load(Ordering::Relaxed))
}

pub fn set_resolution_limits(max_pd: usize, max_betti: usize) {
    MAX_PD.store(max_pd, Ordering::Relaxed);
    MAX_BETTI.store(max_betti.max(1), Ordering::Relaxed);
}

/// Wall-clock deadline shared by every computation in the process.
pub fn set_deadline(at: Option<Instant>) {
    *DEADLINE.lock().unwrap() = at;
}

pub(crate) fn check_deadline(pairs: usize) -> Result<()> {
    if let Some(at) = *DEADLINE.lock().unwrap() {
        if Instant::now() >= at {
            return Err(Error::TimeLimit { pairs });
        }
    }
    Ok(())
}
