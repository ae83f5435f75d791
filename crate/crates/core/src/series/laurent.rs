//! Sparse Laurent polynomials in `x_1, ..., x_k` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::SeriesError;

/// Exponent vector of a Laurent monomial; entry `i` is the power of `x_{i+1}`.
pub type Exponent = SmallVec<[i32; 4]>;

/// A Laurent polynomial in `var_count` variables.
///
/// Invariants:
/// - no stored term is zero
/// - every exponent vector has length `var_count`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentCoefficient {
    var_count: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentCoefficient {
    pub fn zero(var_count: usize) -> Self {
        Self {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(var_count: usize, value: BigInt) -> Self {
        let mut c = Self::zero(var_count);
        c.add_term(Exponent::from_elem(0, var_count), value);
        c
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, BigInt::one())
    }

    /// `value * x^exponents`.
    pub fn monomial(value: BigInt, exponents: &[i32]) -> Self {
        let mut c = Self::zero(exponents.len());
        c.add_term(Exponent::from_slice(exponents), value);
        c
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Integer attached to `x^exponents`, zero when absent.
    pub fn get(&self, exponents: &[i32]) -> Result<BigInt, SeriesError> {
        if exponents.len() != self.var_count {
            return Err(SeriesError::ExponentLength {
                expected: self.var_count,
                got: exponents.len(),
            });
        }
        Ok(self
            .terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero))
    }

    /// The integer value if this is a constant (only the zero exponent, or nothing).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, v) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| v.clone())
            }
            _ => None,
        }
    }

    /// Sum of all term values, i.e. the value at `x = (1, ..., 1)`.
    pub fn value_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Largest `|exponent|` over all entries of all terms.
    pub fn max_abs_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|x| x.unsigned_abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Exponent, value: BigInt) {
        assert_eq!(exponents.len(), self.var_count, "exponent vector length");
        if value.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
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

    pub fn add_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        self.check_vars(other)?;
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v.clone());
        }
        Ok(())
    }

    /// `self += sign * x_var^power * other`, with `var = None` meaning no variable factor.
    pub(crate) fn add_shifted(&mut self, other: &Self, sign: i8, var: Option<(usize, i32)>) {
        debug_assert_eq!(self.var_count, other.var_count);
        for (e, v) in &other.terms {
            let mut e = e.clone();
            if let Some((i, p)) = var {
                e[i] += p;
            }
            let v = if sign < 0 { -v } else { v.clone() };
            self.add_term(e, v);
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.var_count);
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, va * vb);
            }
        }
        Ok(out)
    }

    /// Checks the no-zero-term and exponent-length invariants.
    pub fn is_well_formed(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, v)| e.len() == self.var_count && !v.is_zero())
    }
}

impl fmt::Display for LaurentCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, v)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, "{}", if v.is_negative() { " - " } else { " + " })?;
            } else if v.is_negative() {
                write!(f, "-")?;
            }
            let abs = v.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
