//! Immanants of q-Laplacians of trees.
//!
//! Two independent routes: [`immanant_bruteforce`] sums over every
//! permutation of an arbitrary polynomial matrix, and [`immanant_tree`] uses
//! the fact that on a tree matrix only involutions built from matchings have
//! nonzero entry products. The first is the oracle, the second the production
//! path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::alpha::{binomial, AlphaTable};
use crate::character::CharacterCache;
use crate::error::ImmanantError;
use crate::partition::{CycleType, Partition};
use crate::poly::{RatPoly, Rational};
use crate::tree::{matching_weights, PolyMatrix, Tree};

/// Largest dimension accepted by the permutation-sum oracle.
pub const BRUTE_FORCE_MAX_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Bruteforce,
    Matching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImmanantReport {
    pub tree: String,
    pub partition: Partition,
    pub normalized: RatPoly,
    pub algorithm: Algorithm,
}

/// `Σ_π Π_i M[i, π(i)]` grouped by the cycle type of `π`. Permutations whose
/// entry product is zero are pruned while they are built, which leaves the
/// sum unchanged.
pub fn cycle_class_sums(matrix: &PolyMatrix) -> Result<BTreeMap<CycleType, RatPoly>, ImmanantError> {
    let n = matrix.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(ImmanantError::BruteForceCap { n, cap: BRUTE_FORCE_MAX_N });
    }
    let mut sums = BTreeMap::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(matrix, 0, RatPoly::one(), &mut image, &mut used, &mut sums);
    Ok(sums)
}

fn extend(
    m: &PolyMatrix,
    row: usize,
    product: RatPoly,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    sums: &mut BTreeMap<CycleType, RatPoly>,
) {
    let n = m.n();
    if row == n {
        *sums.entry(cycle_type(image)).or_insert_with(RatPoly::zero) += &product;
        return;
    }
    for col in 0..n {
        if used[col] || m.get(row, col).is_zero() {
            continue;
        }
        used[col] = true;
        image[row] = col;
        extend(m, row + 1, &product * m.get(row, col), image, used, sums);
        used[col] = false;
    }
}

fn cycle_type(perm: &[usize]) -> CycleType {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        lengths.push(len);
    }
    CycleType(Partition::from_unsorted(lengths).expect("cycle lengths are positive"))
}

/// Raw immanant `Σ_π χ_λ(π) Π_i M[i, π(i)]`.
pub fn immanant_bruteforce(matrix: &PolyMatrix, shape: &Partition) -> Result<RatPoly, ImmanantError> {
    let sums = cycle_class_sums(matrix)?;
    immanant_from_class_sums(&sums, shape, matrix.n(), &mut CharacterCache::new())
}

pub fn immanant_from_class_sums(
    sums: &BTreeMap<CycleType, RatPoly>,
    shape: &Partition,
    n: usize,
    cache: &mut CharacterCache,
) -> Result<RatPoly, ImmanantError> {
    if shape.size() != n {
        return Err(ImmanantError::Dimension { shape: shape.size(), n });
    }
    let mut total = RatPoly::zero();
    for (rho, s) in sums {
        let chi = cache.character(shape, rho)?;
        total += &s.scale(&Rational::from_integer(chi));
    }
    Ok(total)
}

/// Raw immanant of the q-Laplacian of `tree`, `Σ_j χ_λ(2^j 1^(n-2j)) c_j(q)`.
pub fn immanant_tree(tree: &Tree, shape: &Partition) -> Result<RatPoly, ImmanantError> {
    immanant_from_weights(&matching_weights(tree), shape, tree.n(), &mut CharacterCache::new())
}

pub fn immanant_from_weights(
    weights: &[RatPoly],
    shape: &Partition,
    n: usize,
    cache: &mut CharacterCache,
) -> Result<RatPoly, ImmanantError> {
    if shape.size() != n {
        return Err(ImmanantError::Dimension { shape: shape.size(), n });
    }
    let mut total = RatPoly::zero();
    for (j, c) in weights.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let rho = CycleType::involution(n, j).expect("weights stop at n/2");
        let chi = cache.character(shape, &rho)?;
        total += &c.scale(&Rational::from_integer(chi));
    }
    Ok(total)
}

/// Divides by `χ_λ(id)`.
pub fn normalize(raw: &RatPoly, shape: &Partition) -> RatPoly {
    let dim = shape.hook_length_dimension();
    raw.scale(&Rational::new(BigInt::one(), dim))
}

pub fn normalized_immanant_tree(tree: &Tree, shape: &Partition) -> Result<RatPoly, ImmanantError> {
    immanant_tree(tree, shape).map(|raw| normalize(&raw, shape))
}

pub fn report(tree: &Tree, shape: &Partition, algorithm: Algorithm) -> Result<ImmanantReport, ImmanantError> {
    let raw = match algorithm {
        Algorithm::Matching => immanant_tree(tree, shape)?,
        Algorithm::Bruteforce => immanant_bruteforce(&crate::tree::q_laplacian(tree), shape)?,
    };
    Ok(ImmanantReport {
        tree: tree.to_string(),
        partition: shape.clone(),
        normalized: normalize(&raw, shape),
        algorithm,
    })
}

/// Normalized two-row immanants `k = 0..=n/2` from one set of matching weights.
pub fn two_row_immanants(tree: &Tree) -> Vec<RatPoly> {
    let n = tree.n();
    let weights = matching_weights(tree);
    let mut cache = CharacterCache::new();
    (0..=n / 2)
        .map(|k| {
            let shape = Partition::two_row(n, k).expect("k <= n/2");
            let raw = immanant_from_weights(&weights, &shape, n, &mut cache).expect("sizes agree");
            normalize(&raw, &shape)
        })
        .collect()
}

/// Normalized hook immanants, index `k - 1` holding shape `(k, 1^(n-k))`.
pub fn hook_immanants(tree: &Tree) -> Vec<RatPoly> {
    let n = tree.n();
    let weights = matching_weights(tree);
    let mut cache = CharacterCache::new();
    (1..=n)
        .map(|k| {
            let shape = Partition::hook(n, k).expect("1 <= k <= n");
            let raw = immanant_from_weights(&weights, &shape, n, &mut cache).expect("sizes agree");
            normalize(&raw, &shape)
        })
        .collect()
}

/// `a_i = Σ_{j>=i} (-1)^(j-i) C(j,i) c_j`, inverting `c_j = Σ_{i>=j} C(i,j) a_i`.
pub fn a_coeffs_from_weights(weights: &[RatPoly]) -> Vec<RatPoly> {
    (0..weights.len())
        .map(|i| {
            let mut a = RatPoly::zero();
            for (j, c) in weights.iter().enumerate().skip(i) {
                let mut b = binomial(j as i64, i as i64);
                if (j - i) % 2 == 1 {
                    b = -b;
                }
                a += &c.scale(&Rational::from_integer(b));
            }
            a
        })
        .collect()
}

pub fn extract_a_coeffs(tree: &Tree) -> Vec<RatPoly> {
    a_coeffs_from_weights(&matching_weights(tree))
}

/// `Σ_i a_i 2^i α_{n,k,i} / α_{n,k,0}`.
pub fn two_row_from_a_coeffs(a: &[RatPoly], table: &AlphaTable, k: usize) -> RatPoly {
    let dim = table.get(k as i64, 0);
    assert!(!dim.is_zero(), "k must be at most n/2");
    let mut total = RatPoly::zero();
    for (i, ai) in a.iter().enumerate() {
        let w = table.get(k as i64, i as i64) << i;
        total += &ai.scale(&Rational::new(w, dim.clone()));
    }
    total
}
