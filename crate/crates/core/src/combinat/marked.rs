//! k-marked Durfee symbols and k-marked strongly unimodal symbols.
//!
//! Every part carries a mark in `1..=k`. For `k >= 2` both kinds of symbol
//! require marks to be nonincreasing along each row and every mark
//! `1..k-1` to occur in the top row. Writing `M_j` for the largest top-row
//! part with mark `j` and `M_k` for the side (Durfee) or peak (unimodal),
//! the bottom row is confined to:
//!
//! | mark      | Durfee               | strongly unimodal          |
//! |-----------|----------------------|----------------------------|
//! | `1`       | `[1, M_1]`           | `[1, M_1]`                 |
//! | `2..k-1`  | `[M_{j-1}, M_j]`     | `[M_{j-1} + 1, M_j]`       |
//! | `k`       | `[M_{k-1}, M_k]`     | `[M_{k-1} + 1, M_k - 1]`   |
//!
//! The `j`-th rank is `len(top_j) - len(bottom_j) - 1` for `j < k` and
//! `len(top_k) - len(bottom_k)` for `j = k`.

use std::collections::BTreeMap;
use std::fmt;

use super::unimodal::{distinct_parts_in, enumerate_su_symbols};
use super::{durfee_decompose, enumerate_partitions, CombinatError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPart {
    pub value: u32,
    pub mark: u32,
}

impl MarkedPart {
    pub fn new(value: u32, mark: u32) -> Self {
        Self { value, mark }
    }
}

impl fmt::Display for MarkedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.mark)
    }
}

/// The `k` rank statistics of a marked symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankVector(pub Vec<i64>);

impl RankVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent vector for series lookups.
    pub fn to_exponents(&self) -> Vec<i32> {
        self.0.iter().map(|&m| m as i32).collect()
    }
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Enumeration strategy for k-marked strongly unimodal symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Mark every strongly unimodal symbol in all ways and keep the valid ones.
    Filter,
    /// Build symbols directly from the intervals fixed by `M_1 < ... < M_k`.
    Constructive,
}

fn check_marks(row: &[MarkedPart], k: u32) -> Result<(), CombinatError> {
    if let Some(p) = row.iter().find(|p| p.mark == 0 || p.mark > k) {
        return Err(CombinatError::InvalidSymbol(format!(
            "mark of {p} outside 1..={k}"
        )));
    }
    if let Some(p) = row.iter().find(|p| p.value == 0) {
        return Err(CombinatError::InvalidSymbol(format!(
            "part {p} is not positive"
        )));
    }
    if row.windows(2).any(|w| w[0].mark < w[1].mark) {
        return Err(CombinatError::InvalidSymbol(
            "marks must be nonincreasing".into(),
        ));
    }
    Ok(())
}

/// `M_1, ..., M_{k-1}` from the top row; errors if a mark is missing.
fn top_maxima(top: &[MarkedPart], k: u32) -> Result<Vec<u32>, CombinatError> {
    (1..k)
        .map(|j| {
            top.iter()
                .filter(|p| p.mark == j)
                .map(|p| p.value)
                .max()
                .ok_or_else(|| {
                    CombinatError::InvalidSymbol(format!("mark {j} missing from the top row"))
                })
        })
        .collect()
}

fn ranks(top: &[MarkedPart], bottom: &[MarkedPart], k: u32) -> RankVector {
    RankVector(
        (1..=k)
            .map(|j| {
                let a = top.iter().filter(|p| p.mark == j).count() as i64;
                let b = bottom.iter().filter(|p| p.mark == j).count() as i64;
                if j < k {
                    a - b - 1
                } else {
                    a - b
                }
            })
            .collect(),
    )
}

fn render(top: &[MarkedPart], bottom: &[MarkedPart], sub: u32) -> String {
    let row = |r: &[MarkedPart]| {
        r.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("({} / {})_{}", row(top), row(bottom), sub)
}

fn check_interval(p: &MarkedPart, lo: u32, hi: u32, row: &str) -> Result<(), CombinatError> {
    if p.value < lo || p.value > hi {
        return Err(CombinatError::InvalidSymbol(format!(
            "{row} part {p} outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KMarkedDurfeeSymbol {
    side: u32,
    top: Vec<MarkedPart>,
    bottom: Vec<MarkedPart>,
    k: u32,
}

impl KMarkedDurfeeSymbol {
    pub fn new(
        top: Vec<MarkedPart>,
        bottom: Vec<MarkedPart>,
        side: u32,
        k: u32,
    ) -> Result<Self, CombinatError> {
        let s = Self {
            side,
            top,
            bottom,
            k,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn top(&self) -> &[MarkedPart] {
        &self.top
    }

    pub fn bottom(&self) -> &[MarkedPart] {
        &self.bottom
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.side * self.side
            + self
                .top
                .iter()
                .chain(&self.bottom)
                .map(|p| p.value)
                .sum::<u32>()
    }

    pub fn validate(&self) -> Result<(), CombinatError> {
        let k = self.k;
        if k == 0 {
            return Err(CombinatError::InvalidK(0));
        }
        if self.side == 0 {
            return Err(CombinatError::InvalidSymbol("side must be positive".into()));
        }
        for row in [&self.top, &self.bottom] {
            check_marks(row, k)?;
            if row.windows(2).any(|w| w[0].value < w[1].value) {
                return Err(CombinatError::InvalidSymbol(
                    "parts must be weakly decreasing".into(),
                ));
            }
            if let Some(p) = row.iter().find(|p| p.value > self.side) {
                return Err(CombinatError::InvalidSymbol(format!(
                    "part {p} exceeds the side {}",
                    self.side
                )));
            }
        }
        if k == 1 {
            return Ok(());
        }
        let mut bounds = top_maxima(&self.top, k)?;
        bounds.push(self.side);
        for p in &self.bottom {
            let j = p.mark as usize;
            let lo = if j == 1 { 1 } else { bounds[j - 2] };
            check_interval(p, lo, bounds[j - 1], "bottom")?;
        }
        Ok(())
    }

    pub fn ranks(&self) -> RankVector {
        ranks(&self.top, &self.bottom, self.k)
    }
}

impl fmt::Display for KMarkedDurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.top, &self.bottom, self.side))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KMarkedSuSymbol {
    peak: u32,
    top: Vec<MarkedPart>,
    bottom: Vec<MarkedPart>,
    k: u32,
}

impl KMarkedSuSymbol {
    pub fn new(
        top: Vec<MarkedPart>,
        bottom: Vec<MarkedPart>,
        peak: u32,
        k: u32,
    ) -> Result<Self, CombinatError> {
        let s = Self {
            peak,
            top,
            bottom,
            k,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn top(&self) -> &[MarkedPart] {
        &self.top
    }

    pub fn bottom(&self) -> &[MarkedPart] {
        &self.bottom
    }

    pub fn peak(&self) -> u32 {
        self.peak
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.peak
            + self
                .top
                .iter()
                .chain(&self.bottom)
                .map(|p| p.value)
                .sum::<u32>()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.top == self.bottom
    }

    pub fn validate(&self) -> Result<(), CombinatError> {
        let k = self.k;
        if k == 0 {
            return Err(CombinatError::InvalidK(0));
        }
        if self.peak == 0 {
            return Err(CombinatError::InvalidSymbol("peak must be positive".into()));
        }
        for row in [&self.top, &self.bottom] {
            check_marks(row, k)?;
            if row.windows(2).any(|w| w[0].value <= w[1].value) {
                return Err(CombinatError::InvalidSymbol(
                    "parts must be strictly decreasing".into(),
                ));
            }
            if let Some(p) = row.iter().find(|p| p.value >= self.peak) {
                return Err(CombinatError::InvalidSymbol(format!(
                    "part {p} is not below the peak {}",
                    self.peak
                )));
            }
        }
        if k == 1 {
            return Ok(());
        }
        // bounds[j] = M_j for j = 0..=k, with M_0 = 0
        let mut bounds = vec![0];
        bounds.extend(top_maxima(&self.top, k)?);
        bounds.push(self.peak);
        let hi = |j: usize| {
            if j == k as usize {
                bounds[j] - 1
            } else {
                bounds[j]
            }
        };
        for p in &self.bottom {
            let j = p.mark as usize;
            check_interval(p, bounds[j - 1] + 1, hi(j), "bottom")?;
        }
        debug_assert!(self.top.iter().all(|p| {
            let j = p.mark as usize;
            p.value > bounds[j - 1] && p.value <= hi(j)
        }));
        Ok(())
    }

    pub fn ranks(&self) -> RankVector {
        ranks(&self.top, &self.bottom, self.k)
    }
}

impl fmt::Display for KMarkedSuSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.top, &self.bottom, self.peak))
    }
}

/// Rank vector of a k-marked Durfee symbol, validating it first.
pub fn ranks_durfee(sym: &KMarkedDurfeeSymbol) -> Result<RankVector, CombinatError> {
    sym.validate()?;
    Ok(sym.ranks())
}

/// Rank vector of a k-marked strongly unimodal symbol, validating it first.
pub fn ranks_su(sym: &KMarkedSuSymbol) -> Result<RankVector, CombinatError> {
    sym.validate()?;
    Ok(sym.ranks())
}

/// Nonincreasing mark sequences of length `len` over `1..=k`. Any other
/// marking violates the row ordering rule outright.
pub(crate) fn monotone_markings(len: usize, k: u32) -> Vec<Vec<u32>> {
    fn fill(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for m in 1..=max {
            cur.push(m);
            fill(len, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(len, k, &mut Vec::with_capacity(len), &mut out);
    out
}

fn apply_marks(values: &[u32], marks: &[u32]) -> Vec<MarkedPart> {
    values
        .iter()
        .zip(marks)
        .map(|(&value, &mark)| MarkedPart { value, mark })
        .collect()
}

/// All k-marked Durfee symbols of `n`: every marking of every Durfee symbol
/// that passes validation, in (side, top, bottom) order.
pub fn enumerate_kmarked_durfee(n: u32, k: u32) -> Result<Vec<KMarkedDurfeeSymbol>, CombinatError> {
    if k == 0 {
        return Err(CombinatError::InvalidK(0));
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    for p in enumerate_partitions(n) {
        let d = durfee_decompose(&p)?;
        let top = d.top().parts();
        let bottom = d.bottom().parts();
        let bottom_marks = monotone_markings(bottom.len(), k);
        for tm in monotone_markings(top.len(), k) {
            for bm in &bottom_marks {
                let sym = KMarkedDurfeeSymbol {
                    side: d.side(),
                    top: apply_marks(top, &tm),
                    bottom: apply_marks(bottom, bm),
                    k,
                };
                if sym.validate().is_ok() {
                    out.push(sym);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All k-marked strongly unimodal symbols of size `n`, in (peak, top, bottom) order.
pub fn enumerate_kmarked_su(
    n: u32,
    k: u32,
    strategy: Strategy,
) -> Result<Vec<KMarkedSuSymbol>, CombinatError> {
    if k == 0 {
        return Err(CombinatError::InvalidK(0));
    }
    let mut out = match strategy {
        Strategy::Filter => filter_su(n, k),
        Strategy::Constructive => {
            let mut out = Vec::new();
            let mut builder = Builder {
                n,
                k,
                top: Vec::new(),
                bottom: Vec::new(),
                out: &mut out,
            };
            builder.step(1, 0, 0);
            out
        }
    };
    out.sort();
    Ok(out)
}

fn filter_su(n: u32, k: u32) -> Vec<KMarkedSuSymbol> {
    let mut out = Vec::new();
    for s in enumerate_su_symbols(n) {
        let bottom_marks = monotone_markings(s.bottom().len(), k);
        for tm in monotone_markings(s.top().len(), k) {
            for bm in &bottom_marks {
                let sym = KMarkedSuSymbol {
                    peak: s.peak(),
                    top: apply_marks(s.top(), &tm),
                    bottom: apply_marks(s.bottom(), bm),
                    k,
                };
                if sym.validate().is_ok() {
                    out.push(sym);
                }
            }
        }
    }
    out
}

/// Interval construction: pick `M_j > M_{j-1}` one mark at a time, then the
/// top and bottom parts of that mark inside `[M_{j-1} + 1, M_j]`.
struct Builder<'a> {
    n: u32,
    k: u32,
    /// Per-mark rows, index `j - 1`.
    top: Vec<Vec<u32>>,
    bottom: Vec<Vec<u32>>,
    out: &'a mut Vec<KMarkedSuSymbol>,
}

impl Builder<'_> {
    fn step(&mut self, j: u32, prev_max: u32, used: u32) {
        let lo = prev_max + 1;
        if j == self.k {
            // peak M_k; top_k and bottom_k free in [M_{k-1} + 1, M_k - 1]
            for peak in lo..=self.n.saturating_sub(used) {
                let rest = self.n - used - peak;
                for top_sum in 0..=rest {
                    let tops = distinct_parts_in(lo, peak - 1, top_sum);
                    if tops.is_empty() {
                        continue;
                    }
                    let bottoms = distinct_parts_in(lo, peak - 1, rest - top_sum);
                    for t in &tops {
                        for b in &bottoms {
                            self.top.push(t.clone());
                            self.bottom.push(b.clone());
                            self.emit(peak);
                            self.top.pop();
                            self.bottom.pop();
                        }
                    }
                }
            }
            return;
        }
        // remaining marks j+1..k each need a top maximum above M_j
        let later = self.k - j;
        for max in lo.. {
            let floor: u32 = (1..=later).map(|i| max + i).sum();
            if used + max + floor > self.n {
                break;
            }
            let room = self.n - used - max - floor;
            for top_sum in 0..=room {
                let extras = distinct_parts_in(lo, max - 1, top_sum);
                if extras.is_empty() {
                    continue;
                }
                for bottom_sum in 0..=(room - top_sum) {
                    let bottoms = distinct_parts_in(lo, max, bottom_sum);
                    for e in &extras {
                        for b in &bottoms {
                            let mut t = vec![max];
                            t.extend_from_slice(e);
                            self.top.push(t);
                            self.bottom.push(b.clone());
                            self.step(j + 1, max, used + max + top_sum + bottom_sum);
                            self.top.pop();
                            self.bottom.pop();
                        }
                    }
                }
            }
        }
    }

    fn emit(&mut self, peak: u32) {
        let row = |rows: &[Vec<u32>]| -> Vec<MarkedPart> {
            rows.iter()
                .enumerate()
                .rev()
                .flat_map(|(i, r)| {
                    r.iter()
                        .map(move |&value| MarkedPart::new(value, i as u32 + 1))
                })
                .collect()
        };
        let sym = KMarkedSuSymbol {
            peak,
            top: row(&self.top),
            bottom: row(&self.bottom),
            k: self.k,
        };
        debug_assert_eq!(sym.size(), self.n);
        debug_assert!(sym.validate().is_ok(), "{sym}");
        self.out.push(sym);
    }
}

/// Rank-vector census of k-marked strongly unimodal symbols of size `n`
/// (filter enumeration).
pub fn census_uk(n: u32, k: u32) -> Result<BTreeMap<RankVector, u64>, CombinatError> {
    let mut census = BTreeMap::new();
    for s in enumerate_kmarked_su(n, k, Strategy::Filter)? {
        *census.entry(s.ranks()).or_insert(0) += 1;
    }
    Ok(census)
}

/// `U_k(m; n)`.
pub fn count_uk(m: &[i64], n: u32, k: u32) -> Result<u64, CombinatError> {
    check_rank_len(m, k)?;
    Ok(census_uk(n, k)?
        .get(&RankVector(m.to_vec()))
        .copied()
        .unwrap_or(0))
}

/// Rank-vector census of k-marked Durfee symbols of `n`.
pub fn census_dk(n: u32, k: u32) -> Result<BTreeMap<RankVector, u64>, CombinatError> {
    let mut census = BTreeMap::new();
    for s in enumerate_kmarked_durfee(n, k)? {
        *census.entry(s.ranks()).or_insert(0) += 1;
    }
    Ok(census)
}

/// `D_k(m; n)`.
pub fn count_dk(m: &[i64], n: u32, k: u32) -> Result<u64, CombinatError> {
    check_rank_len(m, k)?;
    Ok(census_dk(n, k)?
        .get(&RankVector(m.to_vec()))
        .copied()
        .unwrap_or(0))
}

fn check_rank_len(m: &[i64], k: u32) -> Result<(), CombinatError> {
    if m.len() != k as usize {
        return Err(CombinatError::InvalidSymbol(format!(
            "rank vector has length {}, expected {k}",
            m.len()
        )));
    }
    Ok(())
}
