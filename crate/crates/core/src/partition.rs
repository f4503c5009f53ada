//! Integer partitions, used both as irreducible-character labels and as
//! cycle types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ParseError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(ParseError::Partition(format!("{parts:?}")))
        }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, ParseError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// `(n - k, k)`; the second row is dropped when `k == 0`.
    pub fn two_row(n: usize, k: usize) -> Option<Self> {
        if 2 * k > n {
            return None;
        }
        let parts = if k == 0 { vec![n] } else { vec![n - k, k] };
        Some(Partition { parts: parts.into_iter().filter(|&p| p > 0).collect() })
    }

    /// `(k, 1^(n-k))` for `1 <= k <= n`.
    pub fn hook(n: usize, k: usize) -> Option<Self> {
        if k == 0 || k > n {
            return None;
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take(n - k));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn hook_length_dimension(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        use num_traits::One;
        let n = self.size();
        let mut num: BigInt = (1..=n).map(BigInt::from).product();
        let mut den = BigInt::one();
        let conj = self.conjugate();
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                let hook = (row - c - 1) + (conj[c] - r - 1) + 1;
                den *= hook;
            }
        }
        num /= den;
        num
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect()
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            go(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ParseError;
    fn try_from(parts: Vec<usize>) -> Result<Self, ParseError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    /// Comma-separated parts, e.g. `3,1`; `2^2,1` repeats a part.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Partition(s.to_string());
        let mut parts = Vec::new();
        for tok in s.split(',').map(str::trim) {
            let (part, mult) = match tok.split_once('^') {
                Some((p, m)) => (p, m.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let part: usize = part.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat(part).take(mult));
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// A partition read as the multiset of cycle lengths of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    /// `2^j 1^(n-2j)`.
    pub fn involution(n: usize, j: usize) -> Option<Self> {
        if 2 * j > n {
            return None;
        }
        let mut parts = vec![2; j];
        parts.extend(std::iter::repeat(1).take(n - 2 * j));
        Some(CycleType(Partition { parts }))
    }

    pub fn identity(n: usize) -> Self {
        CycleType(Partition { parts: vec![1; n] })
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn centralizer_order(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        use num_traits::One;
        let mut z = BigInt::one();
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let p = parts[i];
            let m = parts[i..].iter().take_while(|&&x| x == p).count();
            for t in 1..=m {
                z *= BigInt::from(p) * BigInt::from(t);
            }
            i += m;
        }
        z
    }
}

impl FromStr for CycleType {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.parse().map(CycleType)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parsing() {
        assert_eq!("3,1".parse::<Partition>().unwrap().parts(), &[3, 1]);
        assert_eq!("2^2,1".parse::<Partition>().unwrap().parts(), &[2, 2, 1]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn constructors() {
        assert_eq!(Partition::two_row(6, 2).unwrap().parts(), &[4, 2]);
        assert_eq!(Partition::two_row(6, 0).unwrap().parts(), &[6]);
        assert!(Partition::two_row(6, 4).is_none());
        assert_eq!(Partition::hook(4, 2).unwrap().parts(), &[2, 1, 1]);
        assert_eq!(CycleType::involution(5, 2).unwrap().0.parts(), &[2, 2, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(Partition::two_row(6, 2).unwrap().hook_length_dimension(), BigInt::from(9));
        assert_eq!("3,2,1".parse::<Partition>().unwrap().hook_length_dimension(), BigInt::from(16));
    }

    #[test]
    fn centralizers() {
        assert_eq!("2,2".parse::<CycleType>().unwrap().centralizer_order(), BigInt::from(8));
        assert_eq!(CycleType::identity(4).centralizer_order(), BigInt::from(24));
        assert_eq!("3,1".parse::<CycleType>().unwrap().centralizer_order(), BigInt::from(3));
    }
}
