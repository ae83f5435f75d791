//! Evaluation of the marking variables at roots of unity.
//!
//! Fourth roots of unity (`1, i, -1, -i`) are handled exactly over the
//! Gaussian integers. Any other rational angle goes through `f64` with a
//! per-coefficient error bound.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecializeError {
    #[error("angle {num}/{den} is not in lowest terms with 0 <= num < den")]
    InvalidAngle { num: u64, den: u64 },
    #[error("cannot parse root of unity {0:?}")]
    Parse(String),
    #[error("{got} roots given for a series in {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("angle {num}/{den} is not a fourth root of unity; use specialize_numeric")]
    NotFourthRoot { num: u64, den: u64 },
}

/// `e^{2 pi i num/den}` with `0 <= num < den` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootAngle {
    num: u64,
    den: u64,
}

impl RootAngle {
    pub fn new(num: u64, den: u64) -> Result<Self, SpecializeError> {
        if den == 0 || num >= den || num.gcd(&den) != 1 {
            return Err(SpecializeError::InvalidAngle { num, den });
        }
        Ok(Self { num, den })
    }

    /// Reduces `num/den` modulo 1 and to lowest terms.
    pub fn reduced(num: i64, den: u64) -> Result<Self, SpecializeError> {
        if den == 0 {
            return Err(SpecializeError::InvalidAngle { num: 0, den });
        }
        let r = num.rem_euclid(den as i64) as u64;
        let g = r.gcd(&den);
        Self::new(r / g, den / g)
    }

    pub fn one() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Quarter turns when the root is a fourth root of unity.
    fn quarter_turns(&self) -> Option<u64> {
        (4 % self.den == 0).then(|| self.num * (4 / self.den))
    }
}

impl fmt::Display for RootAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RootAngle {
    type Err = SpecializeError;

    /// Accepts `a/b` (reduced modulo 1) or one of `1`, `-1`, `i`, `-i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "1" => return Ok(Self::one()),
            "-1" => return Self::new(1, 2),
            "i" => return Self::new(1, 4),
            "-i" => return Self::new(3, 4),
            _ => {}
        }
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| SpecializeError::Parse(s.to_string()))?;
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|_| SpecializeError::Parse(s.to_string()))?;
        let b: u64 = b
            .trim()
            .parse()
            .map_err(|_| SpecializeError::Parse(s.to_string()))?;
        Self::reduced(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOfUnityVector(pub Vec<RootAngle>);

impl RootOfUnityVector {
    pub fn ones(len: usize) -> Self {
        Self(vec![RootAngle::one(); len])
    }

    pub fn is_fourth_roots(&self) -> bool {
        self.0.iter().all(|r| r.quarter_turns().is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `self += value * i^turns`.
    fn add_rotated(&mut self, value: &BigInt, turns: u64) {
        match turns % 4 {
            0 => self.re += value,
            1 => self.im += value,
            2 => self.re -= value,
            _ => self.im -= value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianSeries {
    pub coeffs: Vec<GaussianInt>,
}

impl GaussianSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSeries {
    pub coeffs: Vec<Complex64>,
    /// Bound on `|computed - exact|` for each coefficient.
    pub error_bounds: Vec<f64>,
}

impl ComplexSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

fn check_len(s: &TruncatedSeries, v: &RootOfUnityVector) -> Result<(), SpecializeError> {
    if s.var_count() != v.0.len() {
        return Err(SpecializeError::LengthMismatch {
            expected: s.var_count(),
            got: v.0.len(),
        });
    }
    Ok(())
}

/// Exact evaluation at a vector of fourth roots of unity.
pub fn specialize_exact(
    s: &TruncatedSeries,
    v: &RootOfUnityVector,
) -> Result<GaussianSeries, SpecializeError> {
    check_len(s, v)?;
    let turns: Vec<u64> =
        v.0.iter()
            .map(|r| {
                r.quarter_turns().ok_or(SpecializeError::NotFourthRoot {
                    num: r.num,
                    den: r.den,
                })
            })
            .collect::<Result<_, _>>()?;
    let coeffs = s
        .coeffs()
        .iter()
        .map(|c| {
            let mut g = GaussianInt::default();
            for (e, value) in c.terms() {
                let t: i64 = e
                    .iter()
                    .zip(&turns)
                    .map(|(&p, &t)| p as i64 * t as i64)
                    .sum();
                g.add_rotated(value, t.rem_euclid(4) as u64);
            }
            g
        })
        .collect();
    Ok(GaussianSeries { coeffs })
}

/// Integer series obtained by setting every variable to 1.
pub fn specialize_ones(s: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::from_integers(s.coeffs().iter().map(|c| c.value_at_ones()))
}

/// Floating-point evaluation at arbitrary rational roots of unity.
///
/// Each monomial's phase is reduced exactly to an angle in `[0, 1)` before
/// taking `cos`/`sin`. The recorded bound per coefficient is
/// `2 (T + 4) eps sum |c|` for `T` monomials with integer values `c`.
pub fn specialize_numeric(
    s: &TruncatedSeries,
    v: &RootOfUnityVector,
) -> Result<ComplexSeries, SpecializeError> {
    check_len(s, v)?;
    let common = v.0.iter().fold(1u64, |acc, r| acc.lcm(&r.den));
    let scaled: Vec<i128> =
        v.0.iter()
            .map(|r| (r.num * (common / r.den)) as i128)
            .collect();
    let mut coeffs = Vec::with_capacity(s.order() + 1);
    let mut error_bounds = Vec::with_capacity(s.order() + 1);
    for c in s.coeffs() {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0f64;
        for (e, value) in c.terms() {
            let t: i128 = e.iter().zip(&scaled).map(|(&p, &a)| p as i128 * a).sum();
            let frac = t.rem_euclid(common as i128) as f64 / common as f64;
            let phase = Complex64::from_polar(1.0, std::f64::consts::TAU * frac);
            let x = value.to_f64().unwrap_or(f64::INFINITY);
            acc += phase * x;
            magnitude += value.abs().to_f64().unwrap_or(f64::INFINITY);
        }
        let terms = c.len() as f64;
        coeffs.push(acc);
        error_bounds.push(2.0 * (terms + 4.0) * f64::EPSILON * magnitude);
    }
    Ok(ComplexSeries {
        coeffs,
        error_bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{build_partition_genfn, build_r1, build_u1, build_uk};

    fn angles(s: &[&str]) -> RootOfUnityVector {
        RootOfUnityVector(s.iter().map(|a| a.parse().unwrap()).collect())
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "1/2".parse::<RootAngle>().unwrap(),
            RootAngle::new(1, 2).unwrap()
        );
        assert_eq!(
            "-1".parse::<RootAngle>().unwrap(),
            RootAngle::new(1, 2).unwrap()
        );
        assert_eq!(
            "2/4".parse::<RootAngle>().unwrap(),
            RootAngle::new(1, 2).unwrap()
        );
        assert_eq!(
            "-1/4".parse::<RootAngle>().unwrap(),
            RootAngle::new(3, 4).unwrap()
        );
        assert!("x".parse::<RootAngle>().is_err());
        assert!("1/0".parse::<RootAngle>().is_err());
        assert!(RootAngle::new(2, 4).is_err());
    }

    #[test]
    fn r1_at_one_is_partition_series() {
        let s = specialize_exact(&build_r1(20), &angles(&["1"])).unwrap();
        let p = build_partition_genfn(20).integer_coeffs().unwrap();
        for (g, p) in s.coeffs.iter().zip(p) {
            assert_eq!(g, &GaussianInt::new(p, BigInt::zero()));
        }
    }

    #[test]
    fn u1_at_minus_one() {
        let s = specialize_exact(&build_u1(6), &angles(&["-1"])).unwrap();
        assert!(s.coeffs[4].is_zero());
    }

    #[test]
    fn constants_are_fixed() {
        let c = TruncatedSeries::monomial(BigInt::from(7), &[0, 0], 0, 3).unwrap();
        let g = specialize_exact(&c, &angles(&["i", "-1"])).unwrap();
        assert_eq!(
            g.coeffs[0],
            GaussianInt::new(BigInt::from(7), BigInt::zero())
        );
        let z = specialize_numeric(&c, &angles(&["1/3", "2/5"])).unwrap();
        assert_eq!(z.coeffs[0], Complex64::new(7.0, 0.0));
    }

    #[test]
    fn errors() {
        let u = build_u1(4);
        assert!(matches!(
            specialize_exact(&u, &angles(&["1/3"])),
            Err(SpecializeError::NotFourthRoot { .. })
        ));
        assert!(matches!(
            specialize_exact(&u, &angles(&["1", "1"])),
            Err(SpecializeError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn numeric_agrees_with_exact() {
        let u = build_u1(30);
        for v in [["-1"], ["i"], ["-i"], ["1"]] {
            let v = angles(&v);
            let exact = specialize_exact(&u, &v).unwrap();
            let approx = specialize_numeric(&u, &v).unwrap();
            for ((g, z), bound) in exact
                .coeffs
                .iter()
                .zip(&approx.coeffs)
                .zip(&approx.error_bounds)
            {
                let diff =
                    Complex64::new(z.re - g.re.to_f64().unwrap(), z.im - g.im.to_f64().unwrap());
                assert!(diff.norm() <= *bound, "diff {diff} bound {bound}");
                assert!(diff.norm() <= 1e-12 * (1.0 + g.re.to_f64().unwrap().abs()));
            }
        }
    }

    #[test]
    fn numeric_smoke_at_cube_roots() {
        let u = build_uk(2, 30).unwrap();
        let z = specialize_numeric(&u, &angles(&["1/3", "1/3"])).unwrap();
        assert_eq!(z.coeffs.len(), 31);
        assert!(z
            .coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite()));
        assert!(z.error_bounds.iter().all(|b| b.is_finite() && *b >= 0.0));
    }

    #[test]
    fn ones_matches_value_sums() {
        let u = build_uk(2, 12).unwrap();
        let ones = specialize_ones(&u).integer_coeffs().unwrap();
        let exact = specialize_exact(&u, &RootOfUnityVector::ones(2)).unwrap();
        for (a, g) in ones.iter().zip(&exact.coeffs) {
            assert_eq!(g, &GaussianInt::new(a.clone(), BigInt::zero()));
        }
    }
}
