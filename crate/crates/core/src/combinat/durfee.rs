//! Durfee symbols: the Durfee square side together with the column lengths
//! to its right (top row) and the row lengths below it (bottom row).

use std::fmt;

use super::{CombinatError, Partition};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DurfeeSymbol {
    side: u32,
    top: Partition,
    bottom: Partition,
}

impl DurfeeSymbol {
    pub fn new(top: Partition, bottom: Partition, side: u32) -> Result<Self, CombinatError> {
        if side == 0 {
            return Err(CombinatError::InvalidSymbol(
                "Durfee side must be positive".into(),
            ));
        }
        let too_big = |p: &Partition| p.largest().is_some_and(|l| l > side);
        if too_big(&top) || too_big(&bottom) {
            return Err(CombinatError::InvalidSymbol(format!(
                "every part must be at most the side {side}"
            )));
        }
        Ok(Self { side, top, bottom })
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn bottom(&self) -> &Partition {
        &self.bottom
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    /// `d^2 + |top| + |bottom|`.
    pub fn size(&self) -> u32 {
        self.side * self.side + self.top.size() + self.bottom.size()
    }

    /// `len(top) - len(bottom)`, which equals the Dyson rank of the partition.
    pub fn rank(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Rebuilds the partition the symbol encodes.
    pub fn to_partition(&self) -> Partition {
        let d = self.side;
        let mut parts: Vec<u32> = (1..=d)
            .map(|i| d + self.top.parts().iter().filter(|&&a| a >= i).count() as u32)
            .collect();
        parts.extend_from_slice(self.bottom.parts());
        Partition::new(parts).expect("Durfee reconstruction is weakly decreasing")
    }
}

impl fmt::Display for DurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |p: &Partition| {
            p.parts()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "({} / {})_{}",
            row(&self.top),
            row(&self.bottom),
            self.side
        )
    }
}

/// Durfee symbol of a nonempty partition.
pub fn durfee_decompose(p: &Partition) -> Result<DurfeeSymbol, CombinatError> {
    if p.is_empty() {
        return Err(CombinatError::NoDurfeeSquare);
    }
    let parts = p.parts();
    let side = parts
        .iter()
        .enumerate()
        .take_while(|(i, &v)| v as usize > *i)
        .count() as u32;
    let largest = parts[0];
    let top: Vec<u32> = (side + 1..=largest)
        .map(|c| parts.iter().take_while(|&&v| v >= c).count() as u32)
        .collect();
    let bottom = parts[side as usize..].to_vec();
    DurfeeSymbol::new(Partition::new(top)?, Partition::new(bottom)?, side)
}
