use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {what} needs {needed} items, cap is {cap}")]
    Resource { what: String, needed: u128, cap: u64 },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("type mismatch: {0}")]
    Mismatch(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration guard shared by every exhaustive routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: 1_000_000 }
    }
}

impl Limits {
    pub fn new(cap: u64) -> Self {
        Limits { cap }
    }

    pub fn check(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.cap as u128 {
            Err(Error::Resource { what: what.to_string(), needed, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` without overflow; saturates at `u128::MAX`.
pub fn pow_sat(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
