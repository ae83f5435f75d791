//! Integer partitions, Dyson's rank and its census `N(m, n)`.

use std::fmt;

use super::CombinatError;

/// Weakly decreasing sequence of positive parts. The empty partition is the
/// sole partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatError> {
        if parts.contains(&0) {
            return Err(CombinatError::InvalidPartition(
                "parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Self(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, CombinatError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Partition read off the columns of the Ferrers diagram.
    pub fn conjugate(&self) -> Self {
        let Some(largest) = self.largest() else {
            return Self::empty();
        };
        Self(
            (1..=largest)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// All partitions of `n` in lexicographically descending order
/// (`4; 3+1; 2+2; 2+1+1; 1+1+1+1` for `n = 4`).
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    partitions_with_max(n, n)
        .into_iter()
        .map(Partition)
        .collect()
}

/// Part lists of all partitions of `n` with every part at most `max`,
/// lexicographically descending.
pub(crate) fn partitions_with_max(n: u32, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, max, &mut cur, &mut out);
    out
}

fn fill_partitions(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Largest part minus number of parts. Undefined for the empty partition.
pub fn dyson_rank(p: &Partition) -> Result<i64, CombinatError> {
    let largest = p.largest().ok_or(CombinatError::EmptyPartition)?;
    Ok(largest as i64 - p.len() as i64)
}

/// `N(m, n)`: partitions of `n` with rank `m`, with `N(m, 0) = [m = 0]`.
pub fn count_n(m: i64, n: u32) -> u64 {
    if n == 0 {
        return u64::from(m == 0);
    }
    enumerate_partitions(n)
        .iter()
        .filter(|p| dyson_rank(p).ok() == Some(m))
        .count() as u64
}
