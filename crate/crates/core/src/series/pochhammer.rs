//! q-Pochhammer products `(a; q^s)_n = prod_{j=1}^{n} (1 - a q^{s(j-1)})`
//! with `a = sign * x_i^e * q^offset`.

use super::{SeriesError, TruncatedSeries};

/// `x_{index+1}^exponent`; `index` is zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarPower {
    pub index: usize,
    pub exponent: i32,
}

impl VarPower {
    pub fn new(index: usize, exponent: i32) -> Self {
        Self { index, exponent }
    }
}

/// The base argument `a = sign * x^var * q^q_offset` and the step `s` of `(a; q^s)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    /// `+1` or `-1`.
    pub sign: i8,
    pub var: Option<VarPower>,
    pub q_offset: usize,
    pub q_step: usize,
}

impl FactorSpec {
    /// `(sign * q^offset; q^step)`, no variable.
    pub fn pure(sign: i8, q_offset: usize, q_step: usize) -> Self {
        Self {
            sign,
            var: None,
            q_offset,
            q_step,
        }
    }

    pub fn with_var(sign: i8, var: VarPower, q_offset: usize, q_step: usize) -> Self {
        Self {
            sign,
            var: Some(var),
            q_offset,
            q_step,
        }
    }

    /// The same product started `steps` factors later.
    pub fn shifted(&self, steps: usize) -> Self {
        Self {
            q_offset: self.q_offset + steps * self.q_step,
            ..*self
        }
    }

    /// q-exponent of factor `j` (zero-based).
    fn factor_power(&self, j: usize) -> usize {
        self.q_offset + self.q_step * j
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerLength {
    Finite(usize),
    Infinite,
}

impl PochhammerLength {
    /// Number of factors that can differ from 1 modulo `q^{order+1}`.
    fn effective(self, spec: &FactorSpec, order: usize) -> Result<usize, SeriesError> {
        match self {
            PochhammerLength::Finite(n) => {
                if spec.q_step == 0 {
                    return Ok(if spec.q_offset > order { 0 } else { n });
                }
                let live = if spec.q_offset > order {
                    0
                } else {
                    (order - spec.q_offset) / spec.q_step + 1
                };
                Ok(n.min(live))
            }
            PochhammerLength::Infinite => {
                if spec.q_step == 0 {
                    return Err(SeriesError::DivergentProduct);
                }
                Ok(if spec.q_offset > order {
                    0
                } else {
                    (order - spec.q_offset) / spec.q_step + 1
                })
            }
        }
    }
}

impl TruncatedSeries {
    /// Multiplies in place by `(a; q^s)_n`.
    pub fn mul_pochhammer(
        &mut self,
        spec: &FactorSpec,
        length: PochhammerLength,
    ) -> Result<(), SeriesError> {
        debug_assert!(spec.sign == 1 || spec.sign == -1);
        let n = length.effective(spec, self.order())?;
        for j in 0..n {
            self.mul_binomial(-spec.sign, spec.var, spec.factor_power(j))?;
        }
        Ok(())
    }

    /// Divides in place by `(a; q^s)_n`; every factor must have a positive q-power.
    pub fn div_pochhammer(
        &mut self,
        spec: &FactorSpec,
        length: PochhammerLength,
    ) -> Result<(), SeriesError> {
        debug_assert!(spec.sign == 1 || spec.sign == -1);
        let n = length.effective(spec, self.order())?;
        if n > 0 && spec.q_offset == 0 {
            return Err(SeriesError::NonUnitConstant);
        }
        for j in 0..n {
            self.div_binomial(-spec.sign, spec.var, spec.factor_power(j))?;
        }
        Ok(())
    }
}

/// `(a; q^s)_n` truncated at `order`, in `var_count` variables.
pub fn pochhammer(
    spec: &FactorSpec,
    length: PochhammerLength,
    order: usize,
    var_count: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let mut s = TruncatedSeries::one(order, var_count);
    s.mul_pochhammer(spec, length)?;
    Ok(s)
}
