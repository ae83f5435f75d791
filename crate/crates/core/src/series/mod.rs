//! Truncated formal power series in `q` whose coefficients are Laurent
//! polynomials in `x_1, ..., x_k` over the integers.
//!
//! A `TruncatedSeries` of order `N` is exact modulo `q^{N+1}`: it stores the
//! coefficients of `q^0, ..., q^N` densely. Binary operations on series of
//! different orders truncate to the smaller order.

mod laurent;
mod pochhammer;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::{Exponent, LaurentCoefficient};
pub use pochhammer::{pochhammer, FactorSpec, PochhammerLength, VarPower};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("exponent beyond truncation: q^{power} with order {order}")]
    ExponentBeyondTruncation { power: usize, order: usize },
    #[error("coefficient of q^{n} requested beyond truncation order {order}")]
    BeyondTruncation { n: usize, order: usize },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("variable index {index} out of range for {var_count} variables")]
    VarIndex { index: usize, var_count: usize },
    #[error("non-unit constant term")]
    NonUnitConstant,
    #[error("divergent product")]
    DivergentProduct,
}

/// Constructor selector for [`TruncatedSeries::make`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Zero,
    One,
    Monomial {
        coeff: BigInt,
        exponents: Vec<i32>,
        q_power: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    order: usize,
    var_count: usize,
    coeffs: Vec<LaurentCoefficient>,
}

impl TruncatedSeries {
    pub fn zero(order: usize, var_count: usize) -> Self {
        Self {
            order,
            var_count,
            coeffs: vec![LaurentCoefficient::zero(var_count); order + 1],
        }
    }

    pub fn one(order: usize, var_count: usize) -> Self {
        let mut s = Self::zero(order, var_count);
        s.coeffs[0] = LaurentCoefficient::one(var_count);
        s
    }

    /// `coeff * x^exponents * q^q_power`.
    pub fn monomial(
        coeff: BigInt,
        exponents: &[i32],
        q_power: usize,
        order: usize,
    ) -> Result<Self, SeriesError> {
        if q_power > order {
            return Err(SeriesError::ExponentBeyondTruncation {
                power: q_power,
                order,
            });
        }
        let mut s = Self::zero(order, exponents.len());
        s.coeffs[q_power] = LaurentCoefficient::monomial(coeff, exponents);
        Ok(s)
    }

    pub fn make(kind: SeriesKind, order: usize, var_count: usize) -> Result<Self, SeriesError> {
        match kind {
            SeriesKind::Zero => Ok(Self::zero(order, var_count)),
            SeriesKind::One => Ok(Self::one(order, var_count)),
            SeriesKind::Monomial {
                coeff,
                exponents,
                q_power,
            } => {
                if exponents.len() != var_count {
                    return Err(SeriesError::ExponentLength {
                        expected: var_count,
                        got: exponents.len(),
                    });
                }
                Self::monomial(coeff, &exponents, q_power, order)
            }
        }
    }

    /// Builds a series without variables from integer coefficients `c_0, ..., c_N`.
    pub fn from_integers<I>(values: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let coeffs: Vec<_> = values
            .into_iter()
            .map(|v| LaurentCoefficient::constant(0, v))
            .collect();
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        Self {
            order: coeffs.len() - 1,
            var_count: 0,
            coeffs,
        }
    }

    /// Truncation order `N`; the series is exact modulo `q^{N+1}`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn coeffs(&self) -> &[LaurentCoefficient] {
        &self.coeffs
    }

    /// Full Laurent coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> Result<&LaurentCoefficient, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::BeyondTruncation {
            n,
            order: self.order,
        })
    }

    /// Integer attached to `x^exponents q^n`.
    pub fn coeff_at(&self, n: usize, exponents: &[i32]) -> Result<BigInt, SeriesError> {
        self.coeff(n)?.get(exponents)
    }

    /// Integer coefficients, valid only for series with no variables or
    /// constant Laurent coefficients.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.as_constant()).collect()
    }

    /// Same series viewed at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            var_count: self.var_count,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_well_formed(&self) -> bool {
        self.coeffs.len() == self.order + 1
            && self
                .coeffs
                .iter()
                .all(|c| c.var_count() == self.var_count && c.is_well_formed())
    }

    /// True when every exponent appearing at `q^n` has absolute value at most `n`.
    pub fn exponents_within_q_order(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, c)| c.max_abs_exponent() as usize <= n)
    }

    fn check_vars(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var_count != other.var_count {
            return Err(SeriesError::VarCountMismatch {
                left: self.var_count,
                right: other.var_count,
            });
        }
        Ok(())
    }

    fn check_var(&self, var: Option<VarPower>) -> Result<Option<(usize, i32)>, SeriesError> {
        match var {
            None => Ok(None),
            Some(v) if v.index < self.var_count => Ok(Some((v.index, v.exponent))),
            Some(v) => Err(SeriesError::VarIndex {
                index: v.index,
                var_count: self.var_count,
            }),
        }
    }

    /// Multiplies in place by `q^shift`.
    pub fn shift_q(&mut self, shift: usize) {
        if shift == 0 {
            return;
        }
        let zero = LaurentCoefficient::zero(self.var_count);
        for n in (0..=self.order).rev() {
            self.coeffs[n] = if n >= shift {
                std::mem::replace(&mut self.coeffs[n - shift], zero.clone())
            } else {
                zero.clone()
            };
        }
    }

    /// Multiplies in place by `1 + sign * x^var * q^q_power`.
    pub fn mul_binomial(
        &mut self,
        sign: i8,
        var: Option<VarPower>,
        q_power: usize,
    ) -> Result<(), SeriesError> {
        let var = self.check_var(var)?;
        if q_power > self.order {
            return Ok(());
        }
        if q_power == 0 {
            for c in &mut self.coeffs {
                let old = c.clone();
                c.add_shifted(&old, sign, var);
            }
            return Ok(());
        }
        for n in (q_power..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - q_power], sign, var);
        }
        Ok(())
    }

    /// Divides in place by `1 + sign * x^var * q^q_power`, `q_power >= 1`.
    pub fn div_binomial(
        &mut self,
        sign: i8,
        var: Option<VarPower>,
        q_power: usize,
    ) -> Result<(), SeriesError> {
        let var = self.check_var(var)?;
        if q_power == 0 {
            return Err(SeriesError::NonUnitConstant);
        }
        for n in q_power..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - q_power], -sign, var);
        }
        Ok(())
    }

    /// Multiplies every coefficient by `x^var` (no q shift).
    pub fn mul_var(&mut self, var: VarPower) -> Result<(), SeriesError> {
        let var = self.check_var(Some(var))?;
        for c in &mut self.coeffs {
            let mut out = LaurentCoefficient::zero(self.var_count);
            out.add_shifted(c, 1, var);
            *c = out;
        }
        Ok(())
    }
}

/// Coefficient-wise sum at order `min(N_a, N_b)`.
pub fn add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.check_vars(b)?;
    let order = a.order.min(b.order);
    let mut out = a.truncate(order);
    for (c, d) in out.coeffs.iter_mut().zip(&b.coeffs) {
        c.add_assign(d)?;
    }
    Ok(out)
}

pub fn neg(a: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries {
        order: a.order,
        var_count: a.var_count,
        coeffs: a.coeffs.iter().map(|c| c.neg()).collect(),
    }
}

pub fn sub(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    add(a, &neg(b))
}

/// Truncated Cauchy product at order `min(N_a, N_b)`.
pub fn mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.check_vars(b)?;
    let order = a.order.min(b.order);
    let mut out = TruncatedSeries::zero(order, a.var_count);
    for i in 0..=order {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=(order - i) {
            if b.coeffs[j].is_zero() {
                continue;
            }
            let p = a.coeffs[i].mul(&b.coeffs[j])?;
            out.coeffs[i + j].add_assign(&p)?;
        }
    }
    Ok(out)
}

/// Multiplicative inverse of a series whose constant term is the integer 1.
pub fn inverse(a: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    match a.coeffs[0].as_constant() {
        Some(c) if c.is_one() => {}
        _ => return Err(SeriesError::NonUnitConstant),
    }
    // b_0 = 1, b_n = -sum_{i=1}^{n} a_i b_{n-i}
    let mut out = TruncatedSeries::one(a.order, a.var_count);
    for n in 1..=a.order {
        let mut acc = LaurentCoefficient::zero(a.var_count);
        for i in 1..=n {
            if a.coeffs[i].is_zero() || out.coeffs[n - i].is_zero() {
                continue;
            }
            acc.add_assign(&a.coeffs[i].mul(&out.coeffs[n - i])?)?;
        }
        out.coeffs[n] = acc.neg();
    }
    Ok(out)
}

impl TruncatedSeries {
    /// `self += other`, truncating `self` to the smaller order.
    pub fn add_assign(&mut self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        self.check_vars(other)?;
        if other.order < self.order {
            *self = self.truncate(other.order);
        }
        for (c, d) in self.coeffs.iter_mut().zip(&other.coeffs) {
            c.add_assign(d)?;
        }
        Ok(())
    }

    /// Scales every coefficient by an integer.
    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.order, self.var_count);
        if factor.is_zero() {
            return out;
        }
        for (o, c) in out.coeffs.iter_mut().zip(&self.coeffs) {
            for (e, v) in c.terms() {
                o.add_term(e.clone(), v * factor);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().map(|&x| BigInt::from(x)))
    }

    fn x(exp: i32) -> Option<VarPower> {
        Some(VarPower {
            index: 0,
            exponent: exp,
        })
    }

    #[test]
    fn make_kinds() {
        let one = TruncatedSeries::make(SeriesKind::One, 3, 1).unwrap();
        assert_eq!(one.coeff_at(0, &[0]).unwrap(), BigInt::one());
        assert!((1..=3).all(|n| one.coeff(n).unwrap().is_zero()));

        let m = TruncatedSeries::make(
            SeriesKind::Monomial {
                coeff: BigInt::one(),
                exponents: vec![-1],
                q_power: 4,
            },
            5,
            1,
        )
        .unwrap();
        assert_eq!(m.coeff_at(4, &[-1]).unwrap(), BigInt::one());
        assert_eq!(m.coeff(4).unwrap().len(), 1);

        let c = TruncatedSeries::make(
            SeriesKind::Monomial {
                coeff: BigInt::from(2),
                exponents: vec![0, 0],
                q_power: 0,
            },
            2,
            2,
        )
        .unwrap();
        assert_eq!(c.coeff_at(0, &[0, 0]).unwrap(), BigInt::from(2));

        let err = TruncatedSeries::make(
            SeriesKind::Monomial {
                coeff: BigInt::one(),
                exponents: vec![0],
                q_power: 6,
            },
            5,
            1,
        );
        assert_eq!(
            err,
            Err(SeriesError::ExponentBeyondTruncation { power: 6, order: 5 })
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(&ints(&[1, 1]), &ints(&[1, -1])).unwrap(), ints(&[2, 0]));
        let s = ints(&[3, -1, 4]);
        assert_eq!(add(&s, &TruncatedSeries::zero(2, 0)).unwrap(), s);

        let xq = TruncatedSeries::monomial(BigInt::one(), &[1], 1, 2).unwrap();
        let xinvq = TruncatedSeries::monomial(BigInt::one(), &[-1], 1, 2).unwrap();
        let sum = add(&xq, &xinvq).unwrap();
        assert_eq!(sum.coeff(1).unwrap().len(), 2);
        assert_eq!(sum.coeff_at(1, &[1]).unwrap(), BigInt::one());
        assert_eq!(sum.coeff_at(1, &[-1]).unwrap(), BigInt::one());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[1, 1]);
        assert_eq!(add(&a, &b).unwrap().order(), 1);
        assert_eq!(mul(&a, &b).unwrap(), ints(&[1, 3]));
    }

    #[test]
    fn var_mismatch() {
        let a = TruncatedSeries::one(2, 1);
        let b = TruncatedSeries::one(2, 2);
        assert!(matches!(
            add(&a, &b),
            Err(SeriesError::VarCountMismatch { .. })
        ));
        assert!(matches!(
            mul(&a, &b),
            Err(SeriesError::VarCountMismatch { .. })
        ));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            mul(&ints(&[1, 1, 0]), &ints(&[1, -1, 0])).unwrap(),
            ints(&[1, 0, -1])
        );
        let s = ints(&[2, 0, -7]);
        assert_eq!(mul(&s, &TruncatedSeries::one(2, 0)).unwrap(), s);

        // (1 + x q)(1 + x^-1 q) = 1 + (x + 1/x) q + q^2
        let mut a = TruncatedSeries::one(2, 1);
        a.mul_binomial(1, x(1), 1).unwrap();
        let mut b = TruncatedSeries::one(2, 1);
        b.mul_binomial(1, x(-1), 1).unwrap();
        let p = mul(&a, &b).unwrap();
        assert_eq!(p.coeff_at(0, &[0]).unwrap(), BigInt::one());
        assert_eq!(p.coeff(1).unwrap().len(), 2);
        assert_eq!(p.coeff_at(1, &[1]).unwrap(), BigInt::one());
        assert_eq!(p.coeff_at(1, &[-1]).unwrap(), BigInt::one());
        assert_eq!(p.coeff(2).unwrap(), &LaurentCoefficient::one(1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            inverse(&ints(&[1, -1, 0, 0, 0])).unwrap(),
            ints(&[1, 1, 1, 1, 1])
        );
        let one = TruncatedSeries::one(4, 2);
        assert_eq!(inverse(&one).unwrap(), one);
        // partitions into parts from {1, 2}: brute-force count
        let brute: Vec<i64> = (0..=4i64)
            .map(|n| (0..=n / 2).filter(|twos| n - 2 * twos >= 0).count() as i64)
            .collect();
        assert_eq!(brute, vec![1, 1, 2, 2, 3]);
        let d = mul(&ints(&[1, -1, 0, 0, 0]), &ints(&[1, 0, -1, 0, 0])).unwrap();
        assert_eq!(inverse(&d).unwrap(), ints(&brute));
    }

    #[test]
    fn inverse_rejects_non_unit() {
        assert_eq!(inverse(&ints(&[2, 1])), Err(SeriesError::NonUnitConstant));
        assert_eq!(inverse(&ints(&[0, 1])), Err(SeriesError::NonUnitConstant));
        let xc = TruncatedSeries::monomial(BigInt::one(), &[1], 0, 3).unwrap();
        assert_eq!(inverse(&xc), Err(SeriesError::NonUnitConstant));
    }

    #[test]
    fn coeff_beyond_truncation() {
        let s = TruncatedSeries::one(3, 0);
        assert_eq!(s.coeff_at(0, &[]).unwrap(), BigInt::one());
        assert_eq!(
            s.coeff(4).unwrap_err(),
            SeriesError::BeyondTruncation { n: 4, order: 3 }
        );
        let t = TruncatedSeries::one(3, 1);
        assert!(matches!(
            t.coeff_at(0, &[0, 0]),
            Err(SeriesError::ExponentLength { .. })
        ));
    }

    #[test]
    fn binomial_division_undoes_multiplication() {
        let mut s = ints(&[1, 2, 0, -3, 5, 1]);
        let orig = s.clone();
        s.mul_binomial(-1, None, 2).unwrap();
        s.div_binomial(-1, None, 2).unwrap();
        assert_eq!(s, orig);
    }

    #[test]
    fn shift() {
        let mut s = ints(&[1, 2, 3]);
        s.shift_q(1);
        assert_eq!(s, ints(&[0, 1, 2]));
        s.shift_q(5);
        assert!(s.is_zero());
    }
}
