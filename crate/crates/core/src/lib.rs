//! Finite group computations centred on the Chermak-Delgado lattice.
//!
//! Groups are stored as full multiplication tables over element indices
//! `0..n`, with the identity fixed at index 0. Subgroups are bitsets over
//! those indices. On top of the subgroup lattice the crate computes
//! Chermak-Delgado measures, the lattice of subgroups attaining the maximal
//! measure, and the number of subgroups outside it.

pub mod bitset;
pub mod catalog;
pub mod cd;
mod error;
pub mod graph;
pub mod group;
pub mod subgroup;
pub mod sweep;
pub mod verify;

pub use bitset::Bitset;
pub use cd::{CdReport, ConditionsReport};
pub use error::{Error, Result};
pub use group::{FamilySpec, Group};
pub use subgroup::{Subgroup, SubgroupLattice};

/// Size caps applied while building groups and enumerating lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 2048;
    pub const DEFAULT_MAX_SUBGROUPS: usize = 100_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_subgroups: Self::DEFAULT_MAX_SUBGROUPS,
        }
    }
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Returns `(p, k)` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}
