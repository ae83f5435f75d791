//! Brute-force oracles written straight from the definitions, plus random
//! series generators. Kept independent of the library's enumerators.
#![allow(dead_code)]

use std::collections::BTreeMap;

use kmarked::series::{FactorSpec, TruncatedSeries, VarPower};
use num_bigint::BigInt;
use proptest::prelude::*;

/// All compositions of `n` (ordered sums of positive integers).
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    compositions(n)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

/// `(side, top, bottom)`: columns right of the Durfee square and rows below it.
pub fn durfee(p: &[u32]) -> (u32, Vec<u32>, Vec<u32>) {
    let side = p
        .iter()
        .enumerate()
        .filter(|&(i, &x)| x as usize > i)
        .count() as u32;
    let largest = p.first().copied().unwrap_or(0);
    let top = (side + 1..=largest)
        .map(|c| p.iter().filter(|&&x| x >= c).count() as u32)
        .collect();
    let bottom = p[side as usize..].to_vec();
    (side, top, bottom)
}

/// `(peak, top, bottom)` for each strongly unimodal sequence of `n`:
/// top lists the parts after the peak, bottom the parts before it, both decreasing.
pub fn su_sequences(n: u32) -> Vec<(u32, Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for c in compositions(n) {
        let Some(peak_at) = (0..c.len()).max_by_key(|&i| c[i]) else {
            continue;
        };
        let up = c[..=peak_at].windows(2).all(|w| w[0] < w[1]);
        let down = c[peak_at..].windows(2).all(|w| w[0] > w[1]);
        if up && down {
            let top = c[peak_at + 1..].to_vec();
            let bottom = c[..peak_at].iter().rev().copied().collect();
            out.push((c[peak_at], top, bottom));
        }
    }
    out
}

/// Nonincreasing sequences of length `len` over `1..=k`.
pub fn nonincreasing_marks(len: usize, k: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for m in 1..=max {
            cur.push(m);
            go(len, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, k, &mut Vec::new(), &mut out);
    out
}

fn ranks(k: u32, top: &[u32], bottom: &[u32]) -> Vec<i64> {
    (1..=k)
        .map(|j| {
            let a = top.iter().filter(|&&m| m == j).count() as i64;
            let b = bottom.iter().filter(|&&m| m == j).count() as i64;
            a - b - i64::from(j < k)
        })
        .collect()
}

/// Largest top part with subscript `j`, for `j = 1..k-1`; `None` if a subscript is missing.
fn top_maxima(k: u32, top: &[u32], top_marks: &[u32]) -> Option<Vec<u32>> {
    (1..k)
        .map(|j| {
            top.iter()
                .zip(top_marks)
                .filter(|&(_, &m)| m == j)
                .map(|(&v, _)| v)
                .max()
        })
        .collect()
}

/// A marked strongly unimodal symbol as `(peak, [(value, mark)] top, bottom)`.
pub type MarkedSu = (u32, Vec<(u32, u32)>, Vec<(u32, u32)>);

/// Every k-marked strongly unimodal symbol of `n`, checked rule by rule.
pub fn kmarked_su(n: u32, k: u32) -> Vec<MarkedSu> {
    let mut out = Vec::new();
    for (peak, top, bottom) in su_sequences(n) {
        for tm in nonincreasing_marks(top.len(), k) {
            let Some(maxima) = top_maxima(k, &top, &tm) else {
                continue;
            };
            let mut bounds = vec![0];
            bounds.extend(maxima);
            bounds.push(peak);
            for bm in nonincreasing_marks(bottom.len(), k) {
                let ok = bottom.iter().zip(&bm).all(|(&v, &m)| {
                    let j = m as usize;
                    let hi = if m == k { peak - 1 } else { bounds[j] };
                    bounds[j - 1] < v && v <= hi
                });
                if k == 1 || ok {
                    let t = top.iter().copied().zip(tm.iter().copied()).collect();
                    let b = bottom.iter().copied().zip(bm.iter().copied()).collect();
                    out.push((peak, t, b));
                }
            }
        }
    }
    out
}

fn marks_of(row: &[(u32, u32)]) -> Vec<u32> {
    row.iter().map(|&(_, m)| m).collect()
}

pub fn su_census(n: u32, k: u32) -> BTreeMap<Vec<i64>, u64> {
    let mut census = BTreeMap::new();
    for (_, top, bottom) in kmarked_su(n, k) {
        *census
            .entry(ranks(k, &marks_of(&top), &marks_of(&bottom)))
            .or_insert(0) += 1;
    }
    census
}

/// Self-conjugate symbols: identical marked rows.
pub fn scu_count(n: u32, k: u32) -> u64 {
    kmarked_su(n, k).iter().filter(|(_, t, b)| t == b).count() as u64
}

/// Rank census of k-marked Durfee symbols of `n >= 1`, checked rule by rule.
pub fn durfee_census(n: u32, k: u32) -> BTreeMap<Vec<i64>, u64> {
    let mut census = BTreeMap::new();
    for p in partitions(n) {
        let (side, top, bottom) = durfee(&p);
        for tm in nonincreasing_marks(top.len(), k) {
            let Some(maxima) = top_maxima(k, &top, &tm) else {
                continue;
            };
            for bm in nonincreasing_marks(bottom.len(), k) {
                let ok = bottom.iter().zip(&bm).all(|(&v, &m)| {
                    let j = m as usize;
                    let lo = if j == 1 { 1 } else { maxima[j - 2] };
                    let hi = if m == k { side } else { maxima[j - 1] };
                    lo <= v && v <= hi
                });
                if k == 1 || ok {
                    *census.entry(ranks(k, &tm, &bm)).or_insert(0) += 1;
                }
            }
        }
    }
    census
}

/// `(omega_k(n), epsilon_k(n))` read off every partition of `n`.
pub fn omega_epsilon(n: u32, k: u32) -> (u64, u64) {
    let (mut omega, mut epsilon) = (0, 0);
    for p in partitions(n) {
        let odd: Vec<u32> = p.iter().copied().filter(|x| x % 2 == 1).collect();
        let even: Vec<u32> = p.iter().copied().filter(|x| x % 2 == 0).collect();
        if odd.len() < k as usize {
            continue;
        }
        let largest = odd[0];
        if !(1..largest).step_by(2).all(|v| odd.contains(&v)) {
            continue;
        }
        let mut values = even.clone();
        values.dedup();
        if values.len() != k as usize - 1 {
            continue;
        }
        if even.iter().any(|&e| e as usize >= 2 * odd.len()) {
            continue;
        }
        if even.len() % 2 == 1 {
            omega += 1;
        } else {
            epsilon += 1;
        }
    }
    (omega, epsilon)
}

/// Sum of up to seven random monomials at q-powers `>= min_power`, exponents in `-3..=3`.
pub fn series(order: usize, k: usize, min_power: usize) -> impl Strategy<Value = TruncatedSeries> {
    let power = if min_power > order {
        0..=0
    } else {
        min_power..=order
    };
    let empty = min_power > order;
    prop::collection::vec(
        (power, prop::collection::vec(-3i32..=3, k), -20i64..=20),
        0..8,
    )
    .prop_map(move |terms| {
        let mut s = TruncatedSeries::zero(order, k);
        if empty {
            return s;
        }
        for (n, e, c) in terms {
            let m = TruncatedSeries::monomial(BigInt::from(c), &e, n, order).unwrap();
            s.add_assign(&m).unwrap();
        }
        s
    })
}

/// Series with constant term exactly 1.
pub fn unit_series(order: usize, k: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(order, k, 1).prop_map(move |mut s| {
        s.add_assign(&TruncatedSeries::one(order, k)).unwrap();
        s
    })
}

pub fn factor(k: usize) -> impl Strategy<Value = FactorSpec> {
    let var = if k == 0 {
        Just(None).boxed()
    } else {
        prop::option::of((0..k, -2i32..=2).prop_map(|(i, e)| VarPower::new(i, e))).boxed()
    };
    (prop::bool::ANY, var, 0usize..=3, 1usize..=3).prop_map(|(neg, var, q_offset, q_step)| {
        FactorSpec {
            sign: if neg { -1 } else { 1 },
            var,
            q_offset,
            q_step,
        }
    })
}

pub fn shape() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=10, 0usize..=2)
}
