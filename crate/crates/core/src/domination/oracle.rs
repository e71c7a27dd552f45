//! Exhaustive domination number, kept deliberately naive: it shares no code
//! with the branch-and-bound solver so the two can check each other.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

// masks are u64
const HARD_LIMIT: usize = 63;

/// Smallest dominating cardinality, found by scanning subsets in order of
/// increasing size.
pub fn gamma_bruteforce(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::OracleLimitExceeded { n, limit });
    }
    let closed: Vec<u64> = (0..n)
        .map(|u| {
            g.neighbor_list(u)
                .iter()
                .fold(1u64 << u, |m, &v| m | (1u64 << v))
        })
        .collect();
    let all = (1u64 << n) - 1;
    for k in 1..=n {
        // Gosper's hack: every k-subset of 0..n
        let mut subset = (1u64 << k) - 1;
        while subset <= all {
            let mut covered = 0u64;
            let mut rest = subset;
            while rest != 0 {
                covered |= closed[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if covered == all {
                return Ok(k);
            }
            let low = subset & subset.wrapping_neg();
            let ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    unreachable!("the full vertex set dominates")
}
