//! Generalized Davenport-Schinzel toolkit: l-regularity, up(l,t) and
//! up-down-up(l) pattern detection, extremal length bounds, and the
//! inverse Ackermann scale.

mod ackermann;
mod patterns;
mod random;

pub use ackermann::{
    ackermann_capped, inverse_ackermann, klazar_bound, AckermannScale, AlphaExponent,
};
pub use patterns::{
    contains_up, contains_up_down_up, is_l_regular, longest_l_regular_subsequence, up_down_up_word,
    up_word, DetectLimits, Mode, PatternKind, PatternOccurrence, RegularLimits,
};
pub use random::random_avoiding_sequence;

use serde::{Deserialize, Serialize};

/// A finite sequence over an integer alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sequence {
    pub symbols: Vec<u32>,
}

impl Sequence {
    pub fn new(symbols: Vec<u32>) -> Self {
        Sequence { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Distinct symbols, sorted ascending.
    pub fn alphabet(&self) -> Vec<u32> {
        let mut a: Vec<u32> = self.symbols.clone();
        a.sort_unstable();
        a.dedup();
        a
    }
}

impl From<Vec<u32>> for Sequence {
    fn from(symbols: Vec<u32>) -> Self {
        Sequence { symbols }
    }
}

/// Errors from the sequence toolkit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DsError {
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("retry budget exhausted after {attempts} attempts")]
    BudgetExhausted { attempts: usize },
}
