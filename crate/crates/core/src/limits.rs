use crate::error::{Error, Result};

pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;
pub const DEFAULT_MAX_ENUM: u64 = 10_000_000;

/// Caps on table rectangles and enumeration output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cells: u64,
    pub max_enum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cells: DEFAULT_MAX_CELLS,
            max_enum: DEFAULT_MAX_ENUM,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_cells: u64::MAX,
            max_enum: u64::MAX,
        }
    }

    pub(crate) fn check_cells(&self, max_size: usize, max_free: usize) -> Result<()> {
        let cells = (max_size as u128 + 1) * (max_free as u128 + 1);
        if cells > self.max_cells as u128 {
            return Err(Error::ResourceLimit {
                limit: "max-cells",
                requested: format!("{cells} cells"),
                allowed: self.max_cells,
            });
        }
        Ok(())
    }
}
