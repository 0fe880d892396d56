use crate::error::{Error, Result};

/// Resource caps checked before any enumeration or series allocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of candidate tuples an enumeration may visit or return.
    pub max_items: u128,
    /// Largest truncation order for power series.
    pub max_series_order: usize,
}

impl Budget {
    pub const DEFAULT_MAX_ITEMS: u128 = 5_000_000;
    pub const DEFAULT_MAX_SERIES_ORDER: usize = 24;

    pub fn new(max_items: u128, max_series_order: usize) -> Self {
        Budget {
            max_items,
            max_series_order,
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u128::MAX, usize::MAX)
    }

    pub(crate) fn check_items(&self, what: &'static str, required: u128) -> Result<()> {
        if required > self.max_items {
            return Err(Error::Budget {
                what,
                required,
                limit: self.max_items,
            });
        }
        Ok(())
    }

    pub(crate) fn check_order(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_series_order {
            return Err(Error::Budget {
                what,
                required: order as u128,
                limit: self.max_series_order as u128,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_ITEMS, Self::DEFAULT_MAX_SERIES_ORDER)
    }
}
