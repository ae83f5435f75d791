//! Self-conjugate strongly unimodal symbols (top row equal to bottom row) and
//! their correspondence with partitions into odd parts in which every odd
//! value up to the largest part occurs.
//!
//! The diagram of a self-conjugate sequence with peak `M` has `M` horizontal
//! rows; the row at height `h` has length `1 + 2 * #{a in top : a >= h}`.
//! Those row lengths, read as parts, give the odd partition.

use super::marked::{monotone_markings, KMarkedSuSymbol, MarkedPart};
use super::unimodal::{distinct_parts_in, SuSymbol};
use super::{enumerate_partitions, CombinatError, Partition};

/// Self-conjugate unmarked symbols of size `n`, ordered by (peak, row).
pub fn enumerate_self_conjugate(n: u32) -> Vec<SuSymbol> {
    let mut out = Vec::new();
    for peak in 1..=n {
        let rest = n - peak;
        if !rest.is_multiple_of(2) {
            continue;
        }
        for row in distinct_parts_in(1, peak - 1, rest / 2) {
            out.push(SuSymbol::new(row.clone(), row, peak).expect("valid by construction"));
        }
    }
    out.sort();
    out
}

/// Number of self-conjugate k-marked strongly unimodal symbols of size `n`:
/// every marking of a self-conjugate row that passes validation.
pub fn count_scuk(n: u32, k: u32) -> Result<u64, CombinatError> {
    if k == 0 {
        return Err(CombinatError::InvalidK(0));
    }
    let mut count = 0;
    for sym in enumerate_self_conjugate(n) {
        for marks in monotone_markings(sym.top().len(), k) {
            let row: Vec<MarkedPart> = sym
                .top()
                .iter()
                .zip(&marks)
                .map(|(&v, &m)| MarkedPart::new(v, m))
                .collect();
            if KMarkedSuSymbol::new(row.clone(), row, sym.peak(), k).is_ok() {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// True when every part is odd and every odd value below the largest occurs.
pub fn is_complete_odd_partition(p: &Partition) -> bool {
    let parts = p.parts();
    if parts.iter().any(|v| v % 2 == 0) {
        return false;
    }
    let largest = parts.first().copied().unwrap_or(0);
    (1..=largest).step_by(2).all(|v| parts.contains(&v))
}

/// Partitions of `n` into odd parts with all smaller odd values present.
pub fn enumerate_complete_odd_partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(is_complete_odd_partition)
        .collect()
}

pub fn selfconj_to_odd_partition(s: &SuSymbol) -> Result<Partition, CombinatError> {
    if !s.is_self_conjugate() {
        return Err(CombinatError::Precondition(
            "symbol is not self-conjugate (top row differs from bottom row)".into(),
        ));
    }
    let rows = (1..=s.peak())
        .map(|h| 1 + 2 * s.top().iter().filter(|&&a| a >= h).count() as u32)
        .collect();
    Partition::new(rows)
}

pub fn odd_partition_to_selfconj(p: &Partition) -> Result<SuSymbol, CombinatError> {
    if p.is_empty() {
        return Err(CombinatError::Precondition("partition is empty".into()));
    }
    if p.parts().iter().any(|v| v % 2 == 0) {
        return Err(CombinatError::Precondition(
            "partition has an even part".into(),
        ));
    }
    if !is_complete_odd_partition(p) {
        return Err(CombinatError::Precondition(
            "some odd value below the largest part is missing".into(),
        ));
    }
    // c_h = (p_h - 1) / 2 counts row parts >= h, so h is a part iff c_h > c_{h+1}
    let counts: Vec<u32> = p.parts().iter().map(|v| (v - 1) / 2).collect();
    let peak = counts.len() as u32;
    let row: Vec<u32> = (1..=peak)
        .rev()
        .filter(|&h| {
            let here = counts[h as usize - 1];
            let above = counts.get(h as usize).copied().unwrap_or(0);
            here > above
        })
        .collect();
    SuSymbol::new(row.clone(), row, peak)
}
