//! Tabulated objective functions and the objective value of a partition.
//!
//! A function enters the optimization only through its values on `1..=n`,
//! so it is stored as a table. Values are bounded in magnitude by `2^31` so
//! that any sum of at most `2n` terms stays far inside i64 range.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest allowed magnitude for a tabulated value (inclusive).
pub const VALUE_BOUND: i64 = 1 << 31;

/// Values of a function on `1..=n`, indexed 1-based through [`FuncTable::get`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncTable {
    values: Vec<i64>,
}

impl FuncTable {
    /// Validates and builds a table for `n = values.len()`. Every value must
    /// satisfy `|v| <= 2^31`.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Table("table must cover at least argument 1".into()));
        }
        for (i, &v) in values.iter().enumerate() {
            if v.abs() > VALUE_BOUND {
                return Err(Error::Magnitude {
                    arg: (i + 1) as u32,
                    value: i128::from(v),
                });
            }
        }
        Ok(FuncTable { values })
    }

    /// Number of tabulated arguments.
    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    /// Value at argument `j`, 1-based. Panics if `j` is out of range.
    pub fn get(&self, j: u32) -> i64 {
        self.values[(j - 1) as usize]
    }

    /// The raw values, index 0 holding the value at argument 1.
    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// The quantity being minimized: `sum_i f(lambda_i) + sum_j fstar(lambda*_j)`
/// where `lambda*` is the conjugate of `lambda`.
///
/// Both tables must cover `1..=n` for `n = p.n()` exactly. All parts of a
/// partition of `n` (and of its conjugate) are at most `n`, so the tables are
/// never indexed out of range.
pub fn objective(p: &Partition, f: &FuncTable, fstar: &FuncTable) -> Result<i64> {
    for t in [f, fstar] {
        if t.n() != p.n() {
            return Err(Error::LengthMismatch {
                len: t.n(),
                n: p.n(),
            });
        }
    }
    let mut total = 0i64;
    for &part in p.parts() {
        total = total
            .checked_add(f.get(part))
            .ok_or_else(|| Error::Overflow("summing row terms of the objective".into()))?;
    }
    for &part in p.conjugate().parts() {
        total = total
            .checked_add(fstar.get(part))
            .ok_or_else(|| Error::Overflow("summing column terms of the objective".into()))?;
    }
    Ok(total)
}
