//! Size caps guarding the combinatorial explosions.

use std::env;

/// Upper bounds applied by the public operations.
///
/// Defaults are desk-scale; every cap can be raised through
/// [`Caps::from_env`] or directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for which `partitions_of(n)` is materialized.
    pub partition_n: usize,
    /// Largest `k` for the Bell-number recursion of `x_R`.
    pub bell_k: usize,
    /// Largest `n` tried while waiting for a Kronecker plateau.
    pub stab_max: usize,
    /// Largest arity for partial pairing enumeration.
    pub pairing_arity: usize,
    /// Largest number of matrix entries materialized by `evaluate_at`.
    pub eval_entries: usize,
    /// Largest `n` (the `S_n` side) of a Delta complex.
    pub complex_n: usize,
    /// Largest `N` (the `S_N` side) of a Delta complex.
    pub complex_big_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            partition_n: 40,
            bell_k: 7,
            stab_max: 24,
            pairing_arity: 8,
            eval_entries: 1_000_000,
            complex_n: 4,
            complex_big_n: 7,
        }
    }
}

impl Caps {
    /// Defaults overridden by the `DK_*` environment variables.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |key: &str| {
            env::var(key)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
        };
        for (key, slot) in [
            ("DK_CAP_N", &mut caps.partition_n),
            ("DK_CAP_BELL", &mut caps.bell_k),
            ("DK_STAB_MAX", &mut caps.stab_max),
            ("DK_CAP_PAIRING", &mut caps.pairing_arity),
            ("DK_CAP_EVAL", &mut caps.eval_entries),
            ("DK_CAP_COMPLEX_N", &mut caps.complex_n),
            ("DK_CAP_COMPLEX_BIG_N", &mut caps.complex_big_n),
        ] {
            if let Some(v) = read(key) {
                *slot = v;
            }
        }
        caps
    }
}
