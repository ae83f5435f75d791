//! The counts `omega_k(n)` and `epsilon_k(n)`.
//!
//! A configuration of size `n` is a partition into at least `k` unmarked odd
//! parts with every odd value below the largest present, together with even
//! parts taking exactly `k - 1` distinct values, each value repeatable and
//! each below twice the number of odd parts. The `j`-th smallest even value
//! carries mark `j`, so each multiset of even parts is one configuration.
//! `omega` counts configurations with an odd number of even parts, `epsilon`
//! those with an even number.

use super::partition::partitions_with_max;
use super::selfconj::enumerate_complete_odd_partitions;
use super::CombinatError;

/// `(omega_k(n), epsilon_k(n))`, defined for `k >= 2`.
pub fn count_omega_epsilon(n: u32, k: u32) -> Result<(u64, u64), CombinatError> {
    if k < 2 {
        return Err(CombinatError::KTooSmall(k));
    }
    let (mut omega, mut epsilon) = (0u64, 0u64);
    for odd_total in 0..=n {
        let even_total = n - odd_total;
        if !even_total.is_multiple_of(2) {
            continue;
        }
        for odd in enumerate_complete_odd_partitions(odd_total) {
            let odd_parts = odd.len() as u32;
            if odd_parts < k {
                continue;
            }
            // halves of the even parts: a partition of even_total / 2 with
            // parts < odd_parts and exactly k - 1 distinct values
            for halves in partitions_with_max(even_total / 2, odd_parts - 1) {
                let mut distinct = halves.clone();
                distinct.dedup();
                if distinct.len() as u32 != k - 1 {
                    continue;
                }
                if halves.len() % 2 == 1 {
                    omega += 1;
                } else {
                    epsilon += 1;
                }
            }
        }
    }
    Ok((omega, epsilon))
}
