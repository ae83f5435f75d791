//! Checks each generating function against brute-force enumeration, one
//! `(check, k, n)` cell at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::{
    census_dk, census_uk, count_omega_epsilon, count_scuk, durfee_decompose,
    enumerate_complete_odd_partitions, enumerate_partitions, enumerate_self_conjugate,
    enumerate_su_sequences, odd_partition_to_selfconj, selfconj_to_odd_partition, su_symbol,
    su_unsymbol, RankVector,
};
use crate::genfun::{build_psi, build_rk, build_scuk, build_uk, GenFnError, PsiForm, ScuForm};
use crate::series::{LaurentCoefficient, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// k-marked strongly unimodal rank generating function vs enumeration.
    UnimodalRanks,
    /// k-marked Durfee rank generating function vs enumeration.
    DurfeeRanks,
    /// Self-conjugate counts, both series forms and the omega/epsilon difference.
    SelfConjugate,
    /// Three forms of psi(q) and the odd-partition count.
    Psi,
    Bijections,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::UnimodalRanks => "unimodal",
            Suite::DurfeeRanks => "durfee",
            Suite::SelfConjugate => "self-conjugate",
            Suite::Psi => "psi",
            Suite::Bijections => "bijections",
            Suite::All => "all",
        }
    }

    fn parts(&self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::UnimodalRanks,
                Suite::DurfeeRanks,
                Suite::SelfConjugate,
                Suite::Psi,
                Suite::Bijections,
            ],
            other => vec![*other],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    /// Also accepts the short aliases `thm-1-2`, `thm-1-1` and `thm-1-5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "unimodal" | "thm-1-2" => Suite::UnimodalRanks,
            "durfee" | "thm-1-1" => Suite::DurfeeRanks,
            "self-conjugate" | "thm-1-5" => Suite::SelfConjugate,
            "psi" => Suite::Psi,
            "bijections" => Suite::Bijections,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub suite: Suite,
    pub k: Option<u32>,
    pub n: u32,
    /// First counterexample, `None` when the cell passes.
    pub failure: Option<String>,
}

impl Cell {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.suite)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, " n={} ", self.n)?;
        match &self.failure {
            None => write!(f, "PASS"),
            Some(why) => write!(f, "FAIL {why}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub cells: Vec<Cell>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.cells.iter().all(Cell::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.passed())
    }
}

/// Compares a Laurent coefficient with a rank census in both directions.
pub fn compare_census(
    coeff: &LaurentCoefficient,
    census: &BTreeMap<RankVector, u64>,
) -> Option<String> {
    for (ranks, &count) in census {
        let got = coeff.get(&ranks.to_exponents()).ok()?;
        if got != BigInt::from(count) {
            return Some(format!("ranks {ranks}: series {got}, enumeration {count}"));
        }
    }
    for (e, v) in coeff.terms() {
        let ranks = RankVector(e.iter().map(|&x| i64::from(x)).collect());
        if !census.contains_key(&ranks) {
            return Some(format!("ranks {ranks}: series {v}, enumeration 0"));
        }
    }
    None
}

fn coefficient(s: &TruncatedSeries, n: u32) -> &LaurentCoefficient {
    s.coeff(n as usize).expect("n within the built order")
}

fn int_coefficient(s: &TruncatedSeries, n: u32) -> BigInt {
    coefficient(s, n)
        .as_constant()
        .expect("no marking variables")
}

pub fn run_suite(suite: Suite, n_max: u32, k_max: u32) -> Result<Report, GenFnError> {
    let mut report = Report::default();
    for part in suite.parts() {
        let cells = match part {
            Suite::UnimodalRanks => unimodal_cells(n_max, k_max)?,
            Suite::DurfeeRanks => durfee_cells(n_max, k_max)?,
            Suite::SelfConjugate => self_conjugate_cells(n_max, k_max)?,
            Suite::Psi => psi_cells(n_max)?,
            Suite::Bijections => bijection_cells(n_max),
            Suite::All => unreachable!("expanded above"),
        };
        report.cells.extend(cells);
    }
    Ok(report)
}

fn unimodal_cells(n_max: u32, k_max: u32) -> Result<Vec<Cell>, GenFnError> {
    let mut cells = Vec::new();
    for k in 1..=k_max {
        let series = build_uk(k, n_max as usize)?;
        let mut batch = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                let census = census_uk(n, k)?;
                Ok(Cell {
                    suite: Suite::UnimodalRanks,
                    k: Some(k),
                    n,
                    failure: compare_census(coefficient(&series, n), &census),
                })
            })
            .collect::<Result<Vec<_>, GenFnError>>()?;
        cells.append(&mut batch);
    }
    Ok(cells)
}

fn durfee_cells(n_max: u32, k_max: u32) -> Result<Vec<Cell>, GenFnError> {
    let mut cells = Vec::new();
    for k in 1..=k_max {
        let series = build_rk(k, n_max as usize)?;
        let mut batch = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                let census = if n == 0 {
                    // N(m, 0) = [m = 0]; no marked symbols of 0 for k >= 2
                    let mut c = BTreeMap::new();
                    if k == 1 {
                        c.insert(RankVector(vec![0]), 1);
                    }
                    c
                } else {
                    census_dk(n, k)?
                };
                Ok(Cell {
                    suite: Suite::DurfeeRanks,
                    k: Some(k),
                    n,
                    failure: compare_census(coefficient(&series, n), &census),
                })
            })
            .collect::<Result<Vec<_>, GenFnError>>()?;
        cells.append(&mut batch);
    }
    Ok(cells)
}

fn self_conjugate_cells(n_max: u32, k_max: u32) -> Result<Vec<Cell>, GenFnError> {
    let mut cells = Vec::new();
    for k in 2..=k_max {
        let raw = build_scuk(k, n_max as usize, ScuForm::Raw)?;
        let simplified = build_scuk(k, n_max as usize, ScuForm::Simplified)?;
        let mut batch = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                let count = BigInt::from(count_scuk(n, k)?);
                let (omega, epsilon) = count_omega_epsilon(n, k)?;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let diff = BigInt::from(sign) * (BigInt::from(omega) - BigInt::from(epsilon));
                let raw_c = int_coefficient(&raw, n);
                let simp_c = int_coefficient(&simplified, n);
                let failure = (count != diff || count != raw_c || count != simp_c).then(|| {
                    format!(
                        "symbols {count}, omega-epsilon {diff}, raw {raw_c}, simplified {simp_c}"
                    )
                });
                Ok(Cell {
                    suite: Suite::SelfConjugate,
                    k: Some(k),
                    n,
                    failure,
                })
            })
            .collect::<Result<Vec<_>, GenFnError>>()?;
        cells.append(&mut batch);
    }
    Ok(cells)
}

fn psi_cells(n_max: u32) -> Result<Vec<Cell>, GenFnError> {
    let order = n_max as usize;
    let theta = build_psi(order, PsiForm::Theta)?;
    let poch = build_psi(order, PsiForm::Pochhammer)?;
    let enumerative = build_psi(order, PsiForm::Enumerative)?;
    Ok((0..=n_max)
        .into_par_iter()
        .map(|n| {
            let t = int_coefficient(&theta, n);
            let p = int_coefficient(&poch, n);
            let e = int_coefficient(&enumerative, n);
            let odd = BigInt::from(if n == 0 {
                0
            } else {
                enumerate_complete_odd_partitions(n).len()
            });
            let failure = (t != p || t != e || t != odd).then(|| {
                format!("theta {t}, pochhammer {p}, enumerative {e}, odd partitions {odd}")
            });
            Cell {
                suite: Suite::Psi,
                k: None,
                n,
                failure,
            }
        })
        .collect())
}

fn bijection_failure(n: u32) -> Option<String> {
    for p in enumerate_partitions(n)
        .into_iter()
        .filter(|p| !p.is_empty())
    {
        match durfee_decompose(&p) {
            Ok(d) if d.to_partition() == p && d.size() == n => {}
            _ => return Some(format!("Durfee round trip fails on {p}")),
        }
    }
    for s in enumerate_su_sequences(n) {
        if su_unsymbol(&su_symbol(&s)) != s {
            return Some(format!("symbol round trip fails on {s}"));
        }
    }
    for s in enumerate_self_conjugate(n) {
        let back = selfconj_to_odd_partition(&s).and_then(|p| odd_partition_to_selfconj(&p));
        if back.as_ref() != Ok(&s) {
            return Some(format!("self-conjugate round trip fails on {s}"));
        }
    }
    for p in enumerate_complete_odd_partitions(n)
        .into_iter()
        .filter(|p| !p.is_empty())
    {
        let back = odd_partition_to_selfconj(&p).and_then(|s| selfconj_to_odd_partition(&s));
        if back.as_ref() != Ok(&p) {
            return Some(format!("odd partition round trip fails on {p}"));
        }
    }
    None
}

fn bijection_cells(n_max: u32) -> Vec<Cell> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| Cell {
            suite: Suite::Bijections,
            k: None,
            n,
            failure: bijection_failure(n),
        })
        .collect()
}

/// Counts `p(n)` and `u(n)` for `n <= n_max` as floats, for budgeting.
fn object_counts(n_max: u32) -> (Vec<f64>, Vec<f64>) {
    let n = n_max as usize;
    let mut p = vec![0.0; n + 1];
    p[0] = 1.0;
    for part in 1..=n {
        for s in part..=n {
            p[s] += p[s - part];
        }
    }
    // distinct[m][s]: partitions of s into distinct parts < m, built up in m
    let mut u = vec![0.0; n + 1];
    let mut distinct = vec![0.0; n + 1];
    distinct[0] = 1.0;
    for peak in 1..=n {
        for (s, slot) in u.iter_mut().enumerate().skip(peak) {
            let rest = s - peak;
            *slot += (0..=rest)
                .map(|a| distinct[a] * distinct[rest - a])
                .sum::<f64>();
        }
        for s in (peak..=n).rev() {
            distinct[s] += distinct[s - peak];
        }
    }
    (p, u)
}

fn binomial(n: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i as f64) / (i as f64 + 1.0))
}

/// Longest strictly decreasing row with sum at most `n`.
fn max_distinct_len(n: u32) -> f64 {
    let mut len = 0u32;
    while (len + 1) * (len + 2) / 2 <= n {
        len += 1;
    }
    len as f64
}

/// Upper estimate of the objects an enumeration touches.
pub fn estimate_objects(suite: Suite, n_max: u32, k_max: u32) -> f64 {
    let (p, u) = object_counts(n_max);
    let k = k_max.max(1);
    let markings = |len: f64| binomial(len + k as f64 - 1.0, k - 1);
    suite
        .parts()
        .iter()
        .map(|part| {
            (0..=n_max)
                .map(|n| {
                    let (pn, un) = (p[n as usize], u[n as usize]);
                    let l = max_distinct_len(n);
                    match part {
                        Suite::UnimodalRanks => k as f64 * un * markings(l).powi(2),
                        Suite::DurfeeRanks => k as f64 * pn * markings(n as f64).powi(2),
                        Suite::SelfConjugate => {
                            let half = p[n as usize / 2];
                            k as f64 * (n as f64 + 1.0) * (pn + half * half)
                        }
                        Suite::Psi | Suite::Bijections => 2.0 * pn + un,
                        Suite::All => 0.0,
                    }
                })
                .sum::<f64>()
        })
        .sum()
}
