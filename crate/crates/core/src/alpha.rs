//! The integers `α_{n,λ,i} = 2^{-i} Σ_j C(i,j) χ_λ(2^j 1^{n-2j})` and the
//! trinomial-difference tables built from them.
//!
//! Tables for two-row shapes are indexed `[i][k]` with `0 <= i, k <= n/2`;
//! out-of-range entries read as zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::character::{two_row_char, CharacterCache};
use crate::error::CharError;
use crate::partition::{CycleType, Partition};
use crate::poly::RatPoly;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Integer coefficients of `base^exponent`, where `base` has integer coefficients.
pub fn int_power_coeffs(base: &[i64], exponent: u32) -> Vec<BigInt> {
    RatPoly::from_ints(base)
        .pow(exponent)
        .integer_coeffs()
        .expect("integer polynomial powers stay integral")
}

/// Coefficients of `(1 + x + x^2)^l`.
pub fn trinomial_row(l: usize) -> Vec<BigInt> {
    int_power_coeffs(&[1, 1, 1], l as u32)
}

/// `Σ_j C(i,j) · chi(j)`, divided exactly by `2^i`.
fn binomial_average(i: usize, mut chi: impl FnMut(usize) -> Result<BigInt, CharError>) -> Result<BigInt, CharError> {
    let mut sum = BigInt::zero();
    for j in 0..=i {
        sum += binomial(i as i64, j as i64) * chi(j)?;
    }
    let pow = BigInt::one() << i;
    let (q, r) = sum.div_rem(&pow);
    if !r.is_zero() {
        return Err(CharError::NonIntegral { sum: sum.to_string(), i });
    }
    Ok(q)
}

/// `α_{n,λ,i}` for any shape `λ ⊢ n`.
pub fn alpha(n: usize, shape: &Partition, i: usize) -> Result<BigInt, CharError> {
    alpha_with(&mut CharacterCache::new(), n, shape, i)
}

pub fn alpha_with(cache: &mut CharacterCache, n: usize, shape: &Partition, i: usize) -> Result<BigInt, CharError> {
    if shape.size() != n {
        return Err(CharError::SizeMismatch { shape: shape.size(), cycles: n });
    }
    if 2 * i > n {
        return Err(CharError::OutOfRange(format!("i = {i} exceeds n/2 for n = {n}")));
    }
    binomial_average(i, |j| {
        let rho = CycleType::involution(n, j).expect("j <= i <= n/2");
        cache.character(shape, &rho)
    })
}

/// `α_{n,k,i}` for the shape `(n-k, k)`, straight from the definition.
pub fn alpha_two_row_direct(n: usize, k: usize, i: usize) -> Result<BigInt, CharError> {
    if 2 * i > n || 2 * k > n {
        return Err(CharError::OutOfRange(format!("k = {k}, i = {i} must be <= n/2 for n = {n}")));
    }
    binomial_average(i, |j| two_row_char(n, k, j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    n: usize,
    /// `rows[i][k]`
    rows: Vec<Vec<BigInt>>,
}

impl AlphaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `α_{n,k,i}`, zero when `k` or `i` lies outside `0..=n/2`.
    pub fn get(&self, k: i64, i: i64) -> BigInt {
        if k < 0 || i < 0 {
            return BigInt::zero();
        }
        self.rows
            .get(i as usize)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Rows are `i`, columns are `k`; header `i,k=0,k=1,...`.
    pub fn to_csv(&self) -> String {
        let width = self.n / 2 + 1;
        let mut s = String::from("i");
        for k in 0..width {
            s.push_str(&format!(",k={k}"));
        }
        s.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            s.push_str(&i.to_string());
            for v in row {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
        }
        s
    }

    /// `{"n": .., "rows": [["1","7",..], ..]}` with decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "rows": self.rows.iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Alpha tables for every `n` in `0..=n_max`, built recursively: each row
/// `i <= (n-1)/2` is the sum of columns `k` and `k-1` of the previous table,
/// and the extra row `i = n/2` for even `n` is a trinomial difference.
pub fn alpha_tables(n_max: usize) -> Vec<AlphaTable> {
    let mut tables = vec![AlphaTable { n: 0, rows: vec![vec![BigInt::one()]] }];
    for n in 1..=n_max {
        let prev = &tables[n - 1];
        let half = n / 2;
        let mut rows = Vec::with_capacity(half + 1);
        for i in 0..=(n - 1) / 2 {
            rows.push(
                (0..=half as i64)
                    .map(|k| prev.get(k, i as i64) + prev.get(k - 1, i as i64))
                    .collect(),
            );
        }
        if n % 2 == 0 {
            rows.push(last_row(half));
        }
        tables.push(AlphaTable { n, rows });
    }
    tables
}

pub fn alpha_table(n: usize) -> AlphaTable {
    alpha_tables(n).pop().expect("at least the n = 0 table")
}

/// The same table computed entry by entry from characters.
pub fn alpha_table_direct(n: usize) -> Result<AlphaTable, CharError> {
    let half = n / 2;
    let rows = (0..=half)
        .map(|i| (0..=half).map(|k| alpha_two_row_direct(n, k, i)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaTable { n, rows })
}

/// `p_{l,k} - p_{l,k-1}` for `k = 0..=l`.
fn last_row(l: usize) -> Vec<BigInt> {
    let p = trinomial_row(l);
    (0..=l)
        .map(|k| if k == 0 { p[0].clone() } else { &p[k] - &p[k - 1] })
        .collect()
}

/// `last_{l,k} = α_{2l,k,l}` for `0 <= k <= l <= l_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LastTable {
    rows: Vec<Vec<BigInt>>,
}

impl LastTable {
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn l_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside `0 <= k <= l`.
    pub fn get(&self, l: i64, k: i64) -> BigInt {
        if l < 0 || k < 0 || k > l {
            return BigInt::zero();
        }
        self.rows
            .get(l as usize)
            .map(|r| r[k as usize].clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Rows are `l`, columns are `k`; blank cells above the diagonal.
    pub fn to_csv(&self) -> String {
        let width = self.rows.len();
        let mut s = String::from("l");
        for k in 0..width {
            s.push_str(&format!(",k={k}"));
        }
        s.push('\n');
        for (l, row) in self.rows.iter().enumerate() {
            s.push_str(&l.to_string());
            for k in 0..width {
                s.push(',');
                if let Some(v) = row.get(k) {
                    s.push_str(&v.to_string());
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "l_max": self.l_max(),
            "rows": self.rows.iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Successive differences of trinomial coefficients.
pub fn last_table(l_max: usize) -> LastTable {
    LastTable { rows: (0..=l_max).map(last_row).collect() }
}

/// `last_{l,k} = last_{l-1,k} + last_{l-1,k-1} + last_{l-1,k-2}` from
/// `last_{0,0} = 1`.
///
/// The recursion reads one entry past the diagonal, `last_{l-1,l}`. That
/// entry is not zero: it is the antisymmetric continuation
/// `p_{l-1,l} - p_{l-1,l-1} = -last_{l-1,l-1}` (the trinomial row is
/// palindromic). Entries two or more past the diagonal are never read.
pub fn last_table_recursive(l_max: usize) -> LastTable {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for l in 1..=l_max {
        let prev = &rows[l - 1];
        let read = |k: i64| -> BigInt {
            let m = (l - 1) as i64;
            if k < 0 {
                BigInt::zero()
            } else if k <= m {
                prev[k as usize].clone()
            } else if k == m + 1 {
                -prev[m as usize].clone()
            } else {
                unreachable!("recursion only reaches one past the diagonal")
            }
        };
        let row = (0..=l as i64).map(|k| read(k) + read(k - 1) + read(k - 2)).collect();
        rows.push(row);
    }
    LastTable { rows }
}

/// Coefficients of `(1+x)^(n-2i) (1+x+x^2)^i`.
pub fn mixed_power_coeffs(n: usize, i: usize) -> Vec<BigInt> {
    assert!(2 * i <= n, "need i <= n/2");
    let a = RatPoly::from_ints(&[1, 1]).pow((n - 2 * i) as u32);
    let b = RatPoly::from_ints(&[1, 1, 1]).pow(i as u32);
    (&a * &b).integer_coeffs().expect("integral")
}

/// `c[k] - c[k-1]` for `k = 0..count`, with `c[-1] = 0`.
pub fn successive_differences(coeffs: &[BigInt], count: usize) -> Vec<BigInt> {
    let at = |k: usize| coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
    (0..count)
        .map(|k| if k == 0 { at(0) } else { at(k) - at(k - 1) })
        .collect()
}

/// True if every entry of the table is nonnegative.
pub fn all_nonnegative(table: &AlphaTable) -> bool {
    table.rows.iter().flatten().all(|v| !v.is_negative())
}
