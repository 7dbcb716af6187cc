//! Independent character computation by the rim-hook (border-strip)
//! recursion. Exists as a cross-check for the constant-term engine, not
//! for speed — although the beta-set representation below keeps it fast
//! enough to brute-force every sum the test suite needs.
//!
//! A partition with at most `m` rows is encoded as the set of beta numbers
//! `{lambda_i + m - i}` stored in a `u128` bitmask. Removing a rim hook of
//! length `p` is moving one set bit from `b` to `b - p`; the height of the
//! hook is the number of set bits strictly between the two positions, and
//! the sign of the move is `(-1)` to that count.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

fn beta_mask(shape: &Partition, rows: usize) -> u128 {
    let mut mask = 0u128;
    for i in 0..rows {
        let b = shape.part(i) + (rows - 1 - i) as u32;
        debug_assert!(b < 128, "beta number out of range");
        mask |= 1u128 << b;
    }
    mask
}

/// Bits strictly between positions `lo` and `hi` (lo < hi).
fn bits_between(mask: u128, lo: u32, hi: u32) -> u32 {
    if hi - lo <= 1 {
        return 0;
    }
    let width = hi - lo - 1;
    let window = if width >= 127 {
        mask >> (lo + 1)
    } else {
        (mask >> (lo + 1)) & ((1u128 << width) - 1)
    };
    window.count_ones()
}

struct MnContext<'a> {
    /// class parts, consumed largest first
    parts: &'a [u32],
    memo: HashMap<(u128, usize), BigInt>,
}

impl MnContext<'_> {
    fn eval(&mut self, mask: u128, idx: usize) -> BigInt {
        if idx == self.parts.len() {
            // all class weight consumed; the remaining shape is empty
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(&(mask, idx)) {
            return v.clone();
        }
        let p = self.parts[idx];
        let mut total = BigInt::zero();
        let mut rest = mask;
        while rest != 0 {
            let b = 127 - rest.leading_zeros();
            rest &= !(1u128 << b);
            if b < p {
                break; // remaining beads are lower still
            }
            let dest = b - p;
            if mask & (1u128 << dest) != 0 {
                continue;
            }
            let moved = (mask & !(1u128 << b)) | (1u128 << dest);
            let sub = self.eval(moved, idx + 1);
            if bits_between(mask, dest, b).is_multiple_of(2) {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert((mask, idx), total.clone());
        total
    }
}

/// Character value by the rim-hook recursion; the independent oracle for
/// the constant-term engine. Memoized per top-level call.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            lambda: lambda.weight(),
            mu: mu.weight(),
        });
    }
    if lambda.is_empty() {
        return Ok(BigInt::one());
    }
    let mut ctx = MnContext {
        parts: mu.parts(),
        memo: HashMap::new(),
    };
    let mask = beta_mask(lambda, lambda.len());
    Ok(ctx.eval(mask, 0))
}

/// Reference value for the restricted power sums: the s-th powers of
/// rim-hook characters summed over all shapes of weight |mu| with at most
/// `max_rows` rows.
pub fn sum_powers_brute(max_rows: usize, power: u32, mu: &Partition) -> BigInt {
    let n = mu.weight();
    let mut total = BigInt::zero();
    for shape in partitions_of(n, Some(max_rows)) {
        let chi = mn_character(&shape, mu).expect("equal weights by construction");
        total += chi.pow(power);
    }
    total
}
