//! Size limits for the exhaustive enumerations.
//!
//! Every routine that enumerates a super-exponential family takes a
//! [`Guards`] value; exceeding a limit is reported as
//! [`Error::GuardExceeded`](crate::Error::GuardExceeded) rather than
//! silently truncating the output.

use crate::error::{Error, Result};

/// Largest degree `n` for which all of `S_n` may be enumerated.
pub const DEFAULT_MAX_DEGREE: usize = 8;
/// Largest `p + q` for which all `(p,q)`-clans may be enumerated.
pub const DEFAULT_MAX_CLAN_SIZE: usize = 12;
/// Longest element whose reduced words may all be listed.
pub const DEFAULT_MAX_WORD_LENGTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub max_degree: usize,
    pub max_clan_size: usize,
    pub max_word_length: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_degree: DEFAULT_MAX_DEGREE,
            max_clan_size: DEFAULT_MAX_CLAN_SIZE,
            max_word_length: DEFAULT_MAX_WORD_LENGTH,
        }
    }
}

impl Guards {
    pub(crate) fn check_degree(&self, n: usize) -> Result<()> {
        check("degree", n, self.max_degree)
    }

    pub(crate) fn check_clan_size(&self, n: usize) -> Result<()> {
        check("clan size", n, self.max_clan_size)
    }

    pub(crate) fn check_word_length(&self, len: usize) -> Result<()> {
        check("reduced word length", len, self.max_word_length)
    }
}

fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::GuardExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
