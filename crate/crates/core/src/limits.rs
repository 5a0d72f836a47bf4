//! Process-wide size guards.
//!
//! Structures are stored explicitly and can be exponential in the carrier
//! size, so every operation that materializes a family or enumerates maps
//! checks these bounds and fails with an explicit error instead.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier whose subsets may be enumerated or materialized.
    pub max_carrier: usize,
    /// Largest number of members a generated family may reach.
    pub max_family: usize,
    /// Largest number of candidate maps `|Y|^|X|` for hom-set enumeration.
    pub max_hom: u64,
    /// Largest number of candidate functions for exhaustive searches.
    pub max_search: u64,
    /// Largest carrier for permutation searches (isomorphism, canonical form).
    pub max_permutation_carrier: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_carrier: 20,
        max_family: 1 << 20,
        max_hom: 1 << 16,
        max_search: 1 << 20,
        max_permutation_carrier: 10,
    };

    /// The limits currently in force.
    pub fn current() -> Limits {
        Limits {
            max_carrier: MAX_CARRIER.load(Ordering::Relaxed),
            max_family: MAX_FAMILY.load(Ordering::Relaxed),
            max_hom: MAX_HOM.load(Ordering::Relaxed),
            max_search: MAX_SEARCH.load(Ordering::Relaxed),
            max_permutation_carrier: MAX_PERM.load(Ordering::Relaxed),
        }
    }

    /// Installs `self` as the process-wide limits.
    pub fn install(self) {
        MAX_CARRIER.store(self.max_carrier.min(crate::subset::MAX_POINTS), Ordering::Relaxed);
        MAX_FAMILY.store(self.max_family, Ordering::Relaxed);
        MAX_HOM.store(self.max_hom, Ordering::Relaxed);
        MAX_SEARCH.store(self.max_search, Ordering::Relaxed);
        MAX_PERM.store(self.max_permutation_carrier, Ordering::Relaxed);
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

static MAX_CARRIER: AtomicUsize = AtomicUsize::new(Limits::DEFAULT.max_carrier);
static MAX_FAMILY: AtomicUsize = AtomicUsize::new(Limits::DEFAULT.max_family);
static MAX_HOM: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_hom);
static MAX_SEARCH: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_search);
static MAX_PERM: AtomicUsize = AtomicUsize::new(Limits::DEFAULT.max_permutation_carrier);

pub(crate) fn check_carrier(what: &'static str, size: usize) -> Result<()> {
    let limit = Limits::current().max_carrier;
    if size > limit {
        return Err(Error::SizeLimitExceeded {
            what,
            size: size as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// Carrier bound for operations that only need bitmask addressing.
pub(crate) fn check_addressable(what: &'static str, size: usize) -> Result<()> {
    if size > crate::subset::MAX_POINTS {
        return Err(Error::SizeLimitExceeded {
            what,
            size: size as u128,
            limit: crate::subset::MAX_POINTS as u128,
        });
    }
    Ok(())
}

pub(crate) fn check_permutation(size: usize) -> Result<()> {
    let limit = Limits::current().max_permutation_carrier;
    if size > limit {
        return Err(Error::SizeLimitExceeded {
            what: "permutation search carrier",
            size: size as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn power(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
