//! Size caps for the exhaustive searches.

use std::env;

pub const MAX_N_VAR: &str = "GMK_MAX_N";

/// Upper bounds on the size parameter of each exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// chord count for [`crate::gauss::enumerate_codes`]
    pub enumerate_codes: usize,
    /// chord count for the rotation-system oracle
    pub oracle: usize,
    /// crossing count N for the direct meander search
    pub meander_oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumerate_codes: 8,
            oracle: 10,
            meander_oracle: 12,
        }
    }
}

impl Limits {
    /// Defaults, with every cap replaced by `GMK_MAX_N` when that variable
    /// holds a number.
    pub fn from_env() -> Self {
        match env::var(MAX_N_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(n) => Self::uniform(n),
            None => Self::default(),
        }
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            enumerate_codes: n,
            oracle: n,
            meander_oracle: n,
        }
    }
}
