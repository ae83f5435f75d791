//! Rank generating functions as truncated series.
//!
//! Each multi-sum is cut off using the smallest q-power any of its terms can
//! contribute: terms whose leading power exceeds `N` vanish modulo `q^{N+1}`.
//!
//! | builder      | index region                                   |
//! |--------------|------------------------------------------------|
//! | `build_r1`   | `n^2 <= N`                                     |
//! | `build_rk`   | `M_k^2 + M_1 + ... + M_{k-1} <= N`             |
//! | `build_u1`   | `n + 1 <= N`                                   |
//! | `build_uk`   | `M_1 + ... + M_k <= N`                         |
//! | `build_scuk` | `2(M_1 + ... + M_{k-1}) + M_k <= N`            |
//!
//! with `M_j = m_1 + ... + m_j`.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::combinat::{count_omega_epsilon, count_scuk, CombinatError};
use crate::series::{
    inverse, mul, pochhammer, FactorSpec, PochhammerLength, SeriesError, TruncatedSeries, VarPower,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenFnError {
    #[error("k = {k} is out of range, need k >= {min}")]
    InvalidK { k: u32, min: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// Which of the two equal expressions for the self-conjugate generating function to sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScuForm {
    /// Product of Pochhammer factors in base `q^2`, one per mark.
    Raw,
    /// `q^{M_k} (-q^2;q^2)_{M_k - 1}` times the inner sum of `q^{2M_j} / (1 + q^{2M_j})`.
    Simplified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiForm {
    /// `sum q^{n^2} / (q;q^2)_n`.
    Theta,
    /// `sum q^n (-q^2;q^2)_{n-1}`.
    Pochhammer,
    /// Self-conjugate symbol counts.
    Enumerative,
}

fn check_k(k: u32, min: u32) -> Result<(), GenFnError> {
    if k < min {
        return Err(GenFnError::InvalidK { k, min });
    }
    Ok(())
}

fn x(index: usize, exponent: i32) -> VarPower {
    VarPower::new(index, exponent)
}

fn finite(n: usize) -> PochhammerLength {
    PochhammerLength::Finite(n)
}

fn debug_check(s: &TruncatedSeries) {
    debug_assert!(s.is_well_formed());
    debug_assert!(s.exponents_within_q_order());
}

/// `1 / (q;q)_inf`: the partition numbers `p(0), ..., p(N)`.
pub fn build_partition_genfn(order: usize) -> TruncatedSeries {
    let euler = pochhammer(
        &FactorSpec::pure(1, 1, 1),
        PochhammerLength::Infinite,
        order,
        0,
    )
    .expect("(q;q)_inf is a convergent product");
    inverse(&euler).expect("(q;q)_inf has constant term 1")
}

/// `R_1(x;q) = sum_{n >= 0} q^{n^2} / ((xq;q)_n (q/x;q)_n)`.
pub fn build_r1(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order, 1);
    let mut n = 0usize;
    while n * n <= order {
        let mut term = TruncatedSeries::monomial(BigInt::one(), &[0], n * n, order)
            .expect("n^2 is within the order");
        term.div_pochhammer(&FactorSpec::with_var(1, x(0, 1), 1, 1), finite(n))
            .expect("unit factors");
        term.div_pochhammer(&FactorSpec::with_var(1, x(0, -1), 1, 1), finite(n))
            .expect("unit factors");
        total.add_assign(&term).expect("same shape");
        n += 1;
    }
    debug_check(&total);
    total
}

/// Rank generating function of k-marked Durfee symbols; `k = 1` is [`build_r1`].
pub fn build_rk(k: u32, order: usize) -> Result<TruncatedSeries, GenFnError> {
    check_k(k, 1)?;
    if k == 1 {
        return Ok(build_r1(order));
    }
    let k = k as usize;
    let mut total = TruncatedSeries::zero(order, k);
    let mut partial_sums = Vec::with_capacity(k);
    rk_terms(k, order, &mut partial_sums, &mut total)?;
    debug_check(&total);
    Ok(total)
}

/// Walks `m_1 >= 1, m_2.. >= 0`, keeping `M_1, ..., M_j` in `sums`.
fn rk_terms(
    k: usize,
    order: usize,
    sums: &mut Vec<usize>,
    total: &mut TruncatedSeries,
) -> Result<(), SeriesError> {
    let j = sums.len();
    if j == k {
        return rk_add_term(k, order, sums, total);
    }
    let prev = sums.last().copied().unwrap_or(0);
    let start = if j == 0 { 1 } else { 0 };
    for m in start.. {
        let cur = prev + m;
        // M_k >= cur and the remaining M_{j+1..k-1} >= cur
        let fixed: usize = sums.iter().sum::<usize>() + if j < k - 1 { cur } else { 0 };
        let rest = (k - 1).saturating_sub(j + 1) * cur;
        if cur * cur + fixed + rest > order {
            break;
        }
        sums.push(cur);
        rk_terms(k, order, sums, total)?;
        sums.pop();
    }
    Ok(())
}

fn rk_add_term(
    k: usize,
    order: usize,
    sums: &[usize],
    total: &mut TruncatedSeries,
) -> Result<(), SeriesError> {
    let side = sums[k - 1];
    let power = side * side + sums[..k - 1].iter().sum::<usize>();
    debug_assert!(power <= order);
    let mut term = TruncatedSeries::monomial(BigInt::one(), &vec![0; k], power, order)?;
    term.div_pochhammer(&FactorSpec::with_var(1, x(0, 1), 1, 1), finite(sums[0]))?;
    term.div_pochhammer(&FactorSpec::with_var(1, x(0, -1), 1, 1), finite(sums[0]))?;
    for j in 1..k {
        let lo = sums[j - 1];
        let len = sums[j] - sums[j - 1] + 1;
        term.div_pochhammer(&FactorSpec::with_var(1, x(j, 1), lo, 1), finite(len))?;
        term.div_pochhammer(&FactorSpec::with_var(1, x(j, -1), lo, 1), finite(len))?;
    }
    total.add_assign(&term)
}

/// `U(x;q) = sum_{n >= 0} q^{n+1} (-xq;q)_n (-q/x;q)_n`.
pub fn build_u1(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order, 1);
    for n in 0..order {
        let mut term = TruncatedSeries::monomial(BigInt::one(), &[0], n + 1, order)
            .expect("n + 1 is within the order");
        term.mul_pochhammer(&FactorSpec::with_var(-1, x(0, 1), 1, 1), finite(n))
            .expect("valid factor");
        term.mul_pochhammer(&FactorSpec::with_var(-1, x(0, -1), 1, 1), finite(n))
            .expect("valid factor");
        total.add_assign(&term).expect("same shape");
    }
    debug_check(&total);
    total
}

/// Rank generating function of k-marked strongly unimodal symbols.
pub fn build_uk(k: u32, order: usize) -> Result<TruncatedSeries, GenFnError> {
    check_k(k, 1)?;
    let k = k as usize;
    let mut total = TruncatedSeries::zero(order, k);
    let start = TruncatedSeries::one(order, k);
    uk_terms(k, order, 1, 0, 0, &start, &mut total)?;
    debug_check(&total);
    Ok(total)
}

/// Chooses `M_j > M_{j-1} = prev`; `partial` already holds the factors for marks `< j`.
fn uk_terms(
    k: usize,
    order: usize,
    j: usize,
    prev: usize,
    used: usize,
    partial: &TruncatedSeries,
    total: &mut TruncatedSeries,
) -> Result<(), SeriesError> {
    let idx = j - 1;
    for cur in prev + 1.. {
        // M_{j+1..k} >= cur + 1, cur + 2, ...
        let floor: usize = (1..=k - j).map(|i| cur + i).sum();
        if used + cur + floor > order {
            break;
        }
        let m = cur - prev;
        let mut term = partial.clone();
        term.shift_q(cur);
        if j < k {
            term.mul_binomial(1, Some(x(idx, -1)), cur)?;
        }
        term.mul_pochhammer(
            &FactorSpec::with_var(-1, x(idx, 1), prev + 1, 1),
            finite(m - 1),
        )?;
        term.mul_pochhammer(
            &FactorSpec::with_var(-1, x(idx, -1), prev + 1, 1),
            finite(m - 1),
        )?;
        if j == k {
            total.add_assign(&term)?;
        } else {
            uk_terms(k, order, j + 1, cur, used + cur, &term, total)?;
        }
    }
    Ok(())
}

/// Generating function of self-conjugate k-marked strongly unimodal symbols.
pub fn build_scuk(k: u32, order: usize, form: ScuForm) -> Result<TruncatedSeries, GenFnError> {
    check_k(k, 1)?;
    let k = k as usize;
    let total = match form {
        ScuForm::Raw => {
            let mut total = TruncatedSeries::zero(order, 0);
            scu_raw_terms(
                k,
                order,
                1,
                0,
                0,
                &TruncatedSeries::one(order, 0),
                &mut total,
            )?;
            total
        }
        ScuForm::Simplified => scu_simplified(k, order)?,
    };
    debug_check(&total);
    Ok(total)
}

/// Smallest q-power the marks after `j` can add when `M_j = cur`.
fn scu_floor(k: usize, j: usize, cur: usize) -> usize {
    if j == k {
        return 0;
    }
    let middle: usize = (1..k - j).map(|i| 2 * (cur + i)).sum();
    middle + cur + (k - j)
}

fn scu_raw_terms(
    k: usize,
    order: usize,
    j: usize,
    prev: usize,
    used: usize,
    partial: &TruncatedSeries,
    total: &mut TruncatedSeries,
) -> Result<(), SeriesError> {
    for cur in prev + 1.. {
        let weight = if j < k { 2 * cur } else { cur };
        if used + weight + scu_floor(k, j, cur) > order {
            break;
        }
        let mut term = partial.clone();
        term.shift_q(weight);
        term.mul_pochhammer(
            &FactorSpec::pure(-1, 2 * (prev + 1), 2),
            finite(cur - prev - 1),
        )?;
        if j == k {
            total.add_assign(&term)?;
        } else {
            scu_raw_terms(k, order, j + 1, cur, used + weight, &term, total)?;
        }
    }
    Ok(())
}

fn scu_simplified(k: usize, order: usize) -> Result<TruncatedSeries, SeriesError> {
    // q^{2M} / (1 + q^{2M}) for each admissible M
    let fractions: Vec<TruncatedSeries> = (0..=order / 2)
        .map(|m| {
            if m == 0 {
                return Ok(TruncatedSeries::zero(order, 0));
            }
            let mut denom = TruncatedSeries::one(order, 0);
            denom.mul_binomial(1, None, 2 * m)?;
            let mut f = inverse(&denom)?;
            f.shift_q(2 * m);
            Ok(f)
        })
        .collect::<Result<_, SeriesError>>()?;

    let mut total = TruncatedSeries::zero(order, 0);
    for peak in k..=order {
        let mut outer = TruncatedSeries::monomial(BigInt::one(), &[], peak, order)?;
        outer.mul_pochhammer(&FactorSpec::pure(-1, 2, 2), finite(peak - 1))?;
        let mut inner = TruncatedSeries::zero(order, 0);
        let budget = order - peak;
        scu_inner(
            k - 1,
            peak,
            budget,
            0,
            &TruncatedSeries::one(order, 0),
            &fractions,
            &mut inner,
        )?;
        total.add_assign(&mul(&outer, &inner)?)?;
    }
    Ok(total)
}

/// Sums `prod q^{2M_j}/(1+q^{2M_j})` over `prev < M_1 < ... < M_left < peak`
/// with `2 * sum(M) <= budget`.
fn scu_inner(
    left: usize,
    peak: usize,
    budget: usize,
    prev: usize,
    partial: &TruncatedSeries,
    fractions: &[TruncatedSeries],
    inner: &mut TruncatedSeries,
) -> Result<(), SeriesError> {
    if left == 0 {
        return inner.add_assign(partial);
    }
    for cur in prev + 1..peak {
        let floor: usize = (0..left).map(|i| 2 * (cur + i)).sum();
        if floor > budget {
            break;
        }
        let next = mul(partial, &fractions[cur])?;
        scu_inner(
            left - 1,
            peak,
            budget - 2 * cur,
            cur,
            &next,
            fractions,
            inner,
        )?;
    }
    Ok(())
}

/// Ramanujan's third-order mock theta function `psi(q)` in one of three forms.
pub fn build_psi(order: usize, form: PsiForm) -> Result<TruncatedSeries, GenFnError> {
    match form {
        PsiForm::Theta => {
            let mut total = TruncatedSeries::zero(order, 0);
            let mut n = 1usize;
            while n * n <= order {
                let denom = pochhammer(&FactorSpec::pure(1, 1, 2), finite(n), order, 0)?;
                let mut term = inverse(&denom)?;
                term.shift_q(n * n);
                total.add_assign(&term)?;
                n += 1;
            }
            Ok(total)
        }
        PsiForm::Pochhammer => build_scuk(1, order, ScuForm::Raw),
        PsiForm::Enumerative => {
            let counts = (0..=order as u32)
                .map(|n| count_scuk(n, 1).map(BigInt::from))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(TruncatedSeries::from_integers(counts))
        }
    }
}

/// `sum (-1)^k (omega_k(n) - epsilon_k(n)) q^n` from the brute-force counts.
pub fn build_omega_epsilon_diff(k: u32, order: usize) -> Result<TruncatedSeries, GenFnError> {
    if k < 2 {
        return Err(CombinatError::KTooSmall(k).into());
    }
    let sign = if k.is_multiple_of(2) { 1i64 } else { -1 };
    let coeffs = (0..=order as u32)
        .map(|n| {
            let (omega, epsilon) = count_omega_epsilon(n, k)?;
            Ok(BigInt::from(sign) * (BigInt::from(omega) - BigInt::from(epsilon)))
        })
        .collect::<Result<Vec<_>, CombinatError>>()?;
    Ok(TruncatedSeries::from_integers(coeffs))
}
