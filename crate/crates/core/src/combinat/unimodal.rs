//! Strongly unimodal sequences and their two-row symbols.
//!
//! The symbol of a sequence lists the parts to the right of the peak in its
//! top row and the parts to the left of the peak in its bottom row, both in
//! decreasing order, subscripted by the peak. For `1, 3` the symbol is
//! `( / 1)_3`.

use std::fmt;

use super::CombinatError;

/// `a_1 < ... < a_p > ... > a_s` with a unique maximum at `peak_index`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuSequence {
    parts: Vec<u32>,
    peak_index: usize,
}

impl SuSequence {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatError> {
        if parts.is_empty() {
            return Err(CombinatError::InvalidSequence("empty sequence".into()));
        }
        if parts.contains(&0) {
            return Err(CombinatError::InvalidSequence(
                "parts must be positive".into(),
            ));
        }
        let peak_index = parts
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let rising = parts[..=peak_index].windows(2).all(|w| w[0] < w[1]);
        let falling = parts[peak_index..].windows(2).all(|w| w[0] > w[1]);
        if !rising || !falling {
            return Err(CombinatError::InvalidSequence(
                "not strictly increasing to a unique peak then strictly decreasing".into(),
            ));
        }
        Ok(Self { parts, peak_index })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn peak_index(&self) -> usize {
        self.peak_index
    }

    pub fn peak(&self) -> u32 {
        self.parts[self.peak_index]
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for SuSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Number of parts right of the peak minus number of parts left of it.
pub fn su_rank(s: &SuSequence) -> i64 {
    (s.parts.len() - 1 - s.peak_index) as i64 - s.peak_index as i64
}

/// Strongly unimodal symbol `(top / bottom)_peak`; rows strictly decreasing,
/// all parts below the peak.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuSymbol {
    peak: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl SuSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, peak: u32) -> Result<Self, CombinatError> {
        if peak == 0 {
            return Err(CombinatError::InvalidSymbol("peak must be positive".into()));
        }
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(CombinatError::InvalidSymbol(
                    "rows must be strictly decreasing".into(),
                ));
            }
            if row.iter().any(|&p| p == 0 || p >= peak) {
                return Err(CombinatError::InvalidSymbol(format!(
                    "parts must lie in [1, {}]",
                    peak - 1
                )));
            }
        }
        Ok(Self { peak, top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn peak(&self) -> u32 {
        self.peak
    }

    pub fn size(&self) -> u32 {
        self.peak + self.top.iter().sum::<u32>() + self.bottom.iter().sum::<u32>()
    }

    pub fn rank(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Top row equals bottom row.
    pub fn is_self_conjugate(&self) -> bool {
        self.top == self.bottom
    }
}

impl fmt::Display for SuSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "({} / {})_{}",
            row(&self.top),
            row(&self.bottom),
            self.peak
        )
    }
}

pub fn su_symbol(s: &SuSequence) -> SuSymbol {
    let bottom: Vec<u32> = s.parts[..s.peak_index].iter().rev().copied().collect();
    let top = s.parts[s.peak_index + 1..].to_vec();
    SuSymbol {
        peak: s.peak(),
        top,
        bottom,
    }
}

pub fn su_unsymbol(sym: &SuSymbol) -> SuSequence {
    let mut parts: Vec<u32> = sym.bottom.iter().rev().copied().collect();
    let peak_index = parts.len();
    parts.push(sym.peak);
    parts.extend_from_slice(&sym.top);
    SuSequence { parts, peak_index }
}

/// Strictly decreasing part lists with every part in `[lo, hi]` summing to `sum`.
pub(crate) fn distinct_parts_in(lo: u32, hi: u32, sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_distinct(lo, hi, sum, &mut cur, &mut out);
    out
}

fn fill_distinct(lo: u32, hi: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if lo == 0 {
        return fill_distinct(1, hi, rest, cur, out);
    }
    let mut p = hi.min(rest);
    while p >= lo {
        cur.push(p);
        fill_distinct(lo, p - 1, rest - p, cur, out);
        cur.pop();
        p -= 1;
    }
}

/// All strongly unimodal symbols of size `n`, ordered by (peak, top, bottom).
pub fn enumerate_su_symbols(n: u32) -> Vec<SuSymbol> {
    let mut out = Vec::new();
    for peak in 1..=n {
        let rest = n - peak;
        for top_sum in 0..=rest {
            let tops = distinct_parts_in(1, peak - 1, top_sum);
            if tops.is_empty() {
                continue;
            }
            let bottoms = distinct_parts_in(1, peak - 1, rest - top_sum);
            for top in &tops {
                for bottom in &bottoms {
                    out.push(SuSymbol {
                        peak,
                        top: top.clone(),
                        bottom: bottom.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// All strongly unimodal sequences of size `n`, in the order of their symbols.
pub fn enumerate_su_sequences(n: u32) -> Vec<SuSequence> {
    enumerate_su_symbols(n).iter().map(su_unsymbol).collect()
}

/// `u(m, n)`.
pub fn count_u(m: i64, n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    enumerate_su_sequences(n)
        .iter()
        .filter(|s| su_rank(s) == m)
        .count() as u64
}

/// `u(n)`.
pub fn count_u_total(n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    enumerate_su_sequences(n).len() as u64
}
