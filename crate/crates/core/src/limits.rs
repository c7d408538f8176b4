//! Degree guard for constructions whose size grows like `n!`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default largest degree accepted by module constructors.
pub const DEFAULT_MAX_DEGREE: usize = 12;

/// Tabloids are packed four bits per symbol into a `u64`.
pub const HARD_MAX_DEGREE: usize = 16;

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);
static FROM_ENV: OnceLock<usize> = OnceLock::new();

fn env_limit() -> usize {
    *FROM_ENV.get_or_init(|| {
        std::env::var("SPECHT_MAX_N")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(|n| n.min(HARD_MAX_DEGREE))
            .unwrap_or(DEFAULT_MAX_DEGREE)
    })
}

/// Current degree limit: an explicit override, else `SPECHT_MAX_N`, else 12.
pub fn max_degree() -> usize {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => env_limit(),
        n => n,
    }
}

/// Raise (or lower) the degree limit for the whole process. Values above
/// [`HARD_MAX_DEGREE`] are clamped.
pub fn set_max_degree(n: usize) {
    OVERRIDE.store(n.clamp(1, HARD_MAX_DEGREE), Ordering::Relaxed);
}

pub fn check_degree(n: usize) -> Result<()> {
    let limit = max_degree();
    if n > limit {
        Err(Error::DegreeTooLarge { n, limit })
    } else {
        Ok(())
    }
}
