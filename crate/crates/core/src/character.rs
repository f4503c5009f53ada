//! Irreducible characters of the symmetric group.
//!
//! [`CharacterCache`] evaluates `χ_λ(ρ)` for arbitrary shapes by the
//! Murnaghan–Nakayama border-strip recursion on beta-sets. [`two_row_char`]
//! is a dedicated recursion for shapes `(n-k, k)` at involution classes
//! `2^j 1^(n-2j)`, the only values the two-row immanant needs.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::CharError;
use crate::partition::{CycleType, Partition};

/// Memoized Murnaghan–Nakayama evaluator. Not shared between threads; create
/// one per worker.
#[derive(Default)]
pub struct CharacterCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_λ(ρ)`.
    pub fn character(&mut self, shape: &Partition, cycles: &CycleType) -> Result<BigInt, CharError> {
        if shape.size() != cycles.size() {
            return Err(CharError::SizeMismatch {
                shape: shape.size(),
                cycles: cycles.size(),
            });
        }
        Ok(self.eval(shape.parts().to_vec(), cycles.0.parts()))
    }

    /// `rho` is consumed front to back; callers pass it in decreasing order.
    fn eval(&mut self, shape: Vec<usize>, rho: &[usize]) -> BigInt {
        let Some((&r, rest)) = rho.split_first() else {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        let key = (shape, rho.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let shape = &key.0;
        let m = shape.len();
        let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + m - 1 - i).collect();
        let mut total = BigInt::zero();
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let crossed = beta.iter().filter(|&&g| g > target && g < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(i, &g)| g - (m - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let value = self.eval(smaller, rest);
            if crossed % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ_λ(ρ)` with a fresh cache.
pub fn mn_character(shape: &Partition, cycles: &CycleType) -> Result<BigInt, CharError> {
    CharacterCache::new().character(shape, cycles)
}

/// Character of `(n-k, k)` at cycle type `2^j 1^(n-2j)`.
pub fn two_row_char(n: usize, k: usize, j: usize) -> Result<BigInt, CharError> {
    if 2 * k > n || 2 * j > n {
        return Err(CharError::OutOfRange(format!(
            "need 0 <= k, j <= n/2, got n = {n}, k = {k}, j = {j}"
        )));
    }
    let mut memo = HashMap::new();
    Ok(two_row_rec(n, k, j, &mut memo))
}

fn two_row_rec(n: usize, k: usize, j: usize, memo: &mut HashMap<(usize, usize, usize), BigInt>) -> BigInt {
    if 2 * k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(n, k, j)) {
        return v.clone();
    }
    let value = if n > 2 * j {
        // Remove a fixed point: one box from either row.
        let mut v = two_row_rec(n - 1, k, j, memo);
        if k >= 1 {
            v += two_row_rec(n - 1, k - 1, j, memo);
        }
        v
    } else {
        // Only 2-cycles left: remove a domino.
        let mut v = BigInt::zero();
        if n - k >= k + 2 {
            v += two_row_rec(n - 2, k, j - 1, memo);
        }
        if k >= 2 {
            v += two_row_rec(n - 2, k - 2, j - 1, memo);
        }
        if n - k == k {
            v -= two_row_rec(n - 2, k - 1, j - 1, memo);
        }
        v
    };
    memo.insert((n, k, j), value.clone());
    value
}
