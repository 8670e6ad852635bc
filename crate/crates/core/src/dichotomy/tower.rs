use serde::{Deserialize, Serialize};

use super::GrsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerValue {
    Exact(u64),
    /// Does not fit in 64 bits.
    Overflow,
}

/// `t_1(x) = x`, `t_h(x) = 2^{t_{h-1}(x)}`. Height must be at least 1.
pub fn tower(height: u32, x: u64) -> TowerValue {
    assert!(height >= 1, "tower height starts at 1");
    let mut value = x;
    for _ in 1..height {
        if value >= 64 {
            return TowerValue::Overflow;
        }
        value = 1u64 << value;
    }
    TowerValue::Exact(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerBound {
    pub n: usize,
    pub c: u32,
    /// `c * ceil(log2 n)`.
    pub height: u32,
    /// `t_height(2)`.
    pub value: TowerValue,
}

/// The tower-type upper bound `m(n) <= t_{c ceil(log2 n)}(2)`.
pub fn tower_bound(n: usize, c: u32) -> Result<TowerBound, GrsError> {
    if n < 2 || c == 0 {
        return Err(GrsError::InvalidParameter(format!("tower bound needs n >= 2 and c >= 1, got n = {n}, c = {c}")));
    }
    let log = (n - 1).ilog2() + 1;
    let height = c * log;
    Ok(TowerBound { n, c, height, value: tower(height, 2) })
}
