//! Standard Young tableaux of two-row shape `(n-k, k)` and their lattice
//! path encoding: step `i` is `U` when `i` sits in the first row.

use serde::{Deserialize, Serialize};

use crate::error::PathError;
use crate::paths::{LatticePath, Step};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSyt", into = "RawSyt")]
pub struct TwoRowSyt {
    row1: Vec<usize>,
    row2: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSyt {
    row1: Vec<usize>,
    row2: Vec<usize>,
}

impl TryFrom<RawSyt> for TwoRowSyt {
    type Error = PathError;
    fn try_from(raw: RawSyt) -> Result<Self, PathError> {
        TwoRowSyt::new(raw.row1, raw.row2)
    }
}

impl From<TwoRowSyt> for RawSyt {
    fn from(t: TwoRowSyt) -> RawSyt {
        RawSyt { row1: t.row1, row2: t.row2 }
    }
}

impl TwoRowSyt {
    pub fn new(row1: Vec<usize>, row2: Vec<usize>) -> Result<Self, PathError> {
        let n = row1.len() + row2.len();
        let bad = |why: &str| Err(PathError::Tableau(format!("{row1:?} | {row2:?}: {why}")));
        if row2.len() > row1.len() {
            return bad("second row longer than the first");
        }
        let mut seen = vec![false; n + 1];
        for &v in row1.iter().chain(&row2) {
            if v == 0 || v > n || seen[v] {
                return bad("entries must be 1..n, each once");
            }
            seen[v] = true;
        }
        if row1.windows(2).any(|w| w[0] >= w[1]) || row2.windows(2).any(|w| w[0] >= w[1]) {
            return bad("rows must increase");
        }
        if row2.iter().zip(&row1).any(|(b, a)| b <= a) {
            return bad("columns must increase");
        }
        Ok(TwoRowSyt { row1, row2 })
    }

    pub fn row1(&self) -> &[usize] {
        &self.row1
    }

    pub fn row2(&self) -> &[usize] {
        &self.row2
    }

    pub fn n(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn to_path(&self) -> LatticePath {
        let mut steps = vec![Step::D; self.n()];
        for &v in &self.row1 {
            steps[v - 1] = Step::U;
        }
        LatticePath::new(steps)
    }

    /// Inverse of [`TwoRowSyt::to_path`]; the path must be a nonnegative UD path.
    pub fn from_path(path: &LatticePath) -> Result<Self, PathError> {
        if !path.is_ud() || !path.is_nonnegative() {
            return Err(PathError::Domain {
                path: path.to_string(),
                reason: "expected a nonnegative UD path".into(),
            });
        }
        let (mut row1, mut row2) = (Vec::new(), Vec::new());
        for (t, s) in path.steps().iter().enumerate() {
            match s {
                Step::U => row1.push(t + 1),
                _ => row2.push(t + 1),
            }
        }
        TwoRowSyt::new(row1, row2)
    }

    fn in_row1(&self, v: usize) -> bool {
        self.row1.binary_search(&v).is_ok()
    }

    /// `i` with `i` in the first row and `i + 1` in the second.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.in_row1(i) && !self.in_row1(i + 1)).collect()
    }

    /// First-row minus second-row size of the restriction to `1..=i`.
    pub fn row_diff(&self, i: usize) -> i64 {
        let a = self.row1.iter().filter(|&&v| v <= i).count() as i64;
        let b = self.row2.iter().filter(|&&v| v <= i).count() as i64;
        a - b
    }

    /// Descents whose row difference is odd.
    pub fn odd_descents(&self) -> Vec<usize> {
        self.descents().into_iter().filter(|&i| self.row_diff(i) % 2 != 0).collect()
    }
}

/// All tableaux of shape `(n-k, k)`, by choosing the second row among all
/// `k`-subsets of `1..=n` and keeping the valid ones.
pub fn enumerate_syt(n: usize, k: usize) -> Vec<TwoRowSyt> {
    let mut out = Vec::new();
    if 2 * k > n {
        return out;
    }
    let mut chosen = Vec::with_capacity(k);
    subsets(1, n, k, &mut chosen, &mut |row2| {
        let row1: Vec<usize> = (1..=n).filter(|v| !row2.contains(v)).collect();
        if let Ok(t) = TwoRowSyt::new(row1, row2.to_vec()) {
            out.push(t);
        }
    });
    out
}

fn subsets(from: usize, n: usize, k: usize, chosen: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for v in from..=n {
        if n - v + 1 < k - chosen.len() {
            break;
        }
        chosen.push(v);
        subsets(v + 1, n, k, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{ballot, peak_profile};
    use num_bigint::BigInt;

    #[test]
    fn codec_examples() {
        let t = TwoRowSyt::new(vec![1, 2], vec![3, 4]).unwrap();
        assert_eq!(t.to_path().to_string(), "UUDD");
        let t = TwoRowSyt::new(vec![1, 3], vec![2, 4]).unwrap();
        assert_eq!(t.to_path().to_string(), "UDUD");
        assert_eq!(t.descents(), vec![1, 3]);
        assert!(TwoRowSyt::new(vec![2, 3], vec![1, 4]).is_err());
        assert!(TwoRowSyt::from_path(&"DU".parse().unwrap()).is_err());
    }

    #[test]
    fn shape_42_count() {
        assert_eq!(enumerate_syt(6, 2).len(), 9);
    }

    #[test]
    fn bijection_with_paths() {
        for n in 0..=14 {
            for k in 0..=n / 2 {
                let all = enumerate_syt(n, k);
                assert_eq!(BigInt::from(all.len()), ballot(n, k));
                for t in &all {
                    let p = t.to_path();
                    assert_eq!(&TwoRowSyt::from_path(&p).unwrap(), t);
                    let h = p.heights();
                    for i in 1..=n {
                        assert_eq!(t.row_diff(i), h[i]);
                    }
                    let peaks = peak_profile(&p).unwrap();
                    assert_eq!(t.descents(), peaks.iter().map(|pk| pk.x).collect::<Vec<_>>());
                    let odd: Vec<usize> = peaks.iter().filter(|pk| pk.odd).map(|pk| pk.x).collect();
                    assert_eq!(t.odd_descents(), odd);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = TwoRowSyt::new(vec![1, 2, 4], vec![3]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"row1":[1,2,4],"row2":[3]}"#);
        assert!(serde_json::from_str::<TwoRowSyt>(r#"{"row1":[2],"row2":[1]}"#).is_err());
    }
}
