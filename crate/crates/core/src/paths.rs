//! Lattice paths over `U = (1,1)`, `D = (1,-1)`, `H = (1,0)`.
//!
//! Classes: `NLP(n, h)` nonnegative UD paths of length `n` ending at height
//! `h`; `UHD(l, h)` unrestricted paths of length `l` ending at `h`;
//! `GRP(l, h)` nonnegative UHD paths with no `H` step at height 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alpha::binomial;
use crate::error::{ParseError, PathError};
use crate::poly::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H => 0,
        }
    }

    /// Reflection in the x axis.
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
            Step::H => Step::H,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
        }
    }
}

impl TryFrom<char> for Step {
    type Error = ParseError;
    fn try_from(c: char) -> Result<Self, ParseError> {
        match c.to_ascii_uppercase() {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            'H' => Ok(Step::H),
            _ => Err(ParseError::Step(c)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h_0 = 0, h_1, ..., h_len`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h.last().unwrap() + s.delta());
        }
        h
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.heights().iter().all(|&h| h >= 0)
    }

    pub fn is_ud(&self) -> bool {
        !self.steps.contains(&Step::H)
    }

    pub fn has_flat_at_zero(&self) -> bool {
        let h = self.heights();
        self.steps.iter().enumerate().any(|(t, &s)| s == Step::H && h[t] == 0)
    }

    pub fn is_riordan(&self) -> bool {
        self.is_nonnegative() && !self.has_flat_at_zero()
    }

    pub fn in_class(&self, class: PathClass) -> bool {
        match class {
            PathClass::Nlp => self.is_ud() && self.is_nonnegative(),
            PathClass::Uhd => true,
            PathClass::Grp => self.is_riordan(),
        }
    }

    fn flipped(steps: &[Step]) -> Vec<Step> {
        steps.iter().map(|s| s.flip()).collect()
    }

    fn domain_error(&self, reason: &str) -> PathError {
        PathError::Domain { path: self.to_string(), reason: reason.to_string() }
    }
}

impl FromStr for LatticePath {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.trim().chars().map(Step::try_from).collect::<Result<Vec<_>, _>>().map(LatticePath::new)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathClass {
    Nlp,
    Uhd,
    Grp,
}

impl FromStr for PathClass {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, PathError> {
        match s.to_ascii_lowercase().as_str() {
            "nlp" => Ok(PathClass::Nlp),
            "uhd" => Ok(PathClass::Uhd),
            "grp" => Ok(PathClass::Grp),
            _ => Err(PathError::Parameters(format!("unknown path class `{s}`"))),
        }
    }
}

/// Every path of the class with `length` steps ending at `end_height`, in
/// lexicographic order `U < D < H`.
pub fn enumerate_paths(class: PathClass, length: usize, end_height: i64) -> Result<Vec<LatticePath>, PathError> {
    let len = length as i64;
    if end_height.abs() > len {
        return Err(PathError::Parameters(format!("height {end_height} unreachable in {length} steps")));
    }
    if class == PathClass::Nlp && ((len - end_height) % 2 != 0 || end_height < 0) {
        return Err(PathError::Parameters(format!(
            "NLP needs 0 <= end height and length = end height (mod 2), got length {length}, height {end_height}"
        )));
    }
    let alphabet: &[Step] = if class == PathClass::Nlp { &[Step::U, Step::D] } else { &[Step::U, Step::D, Step::H] };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(length);
    extend_path(class, alphabet, length, end_height, 0, &mut cur, &mut out);
    Ok(out)
}

fn extend_path(
    class: PathClass,
    alphabet: &[Step],
    length: usize,
    end: i64,
    h: i64,
    cur: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    let remaining = (length - cur.len()) as i64;
    if remaining == 0 {
        if h == end {
            out.push(LatticePath::new(cur.clone()));
        }
        return;
    }
    for &s in alphabet {
        let next = h + s.delta();
        if (next - end).abs() > remaining - 1 {
            continue;
        }
        if class != PathClass::Uhd && next < 0 {
            continue;
        }
        if class == PathClass::Grp && s == Step::H && h == 0 {
            continue;
        }
        cur.push(s);
        extend_path(class, alphabet, length, end, next, cur, out);
        cur.pop();
    }
}

/// Callan's map from `UHD(l, h) \ GRP(l, h)` to `UHD(l, h + 1)`.
///
/// Splits `P = S X R` where `R` is the longest Riordan suffix starting on the
/// axis; `X` is `H` (then `S` ends at 0) or `U` (then `S` ends at -1).
/// `f(SHR) = S̄UR` and `f(SUR) = S̄HR`, where `S̄` swaps `U` and `D`.
pub fn callan_forward(path: &LatticePath) -> Result<LatticePath, PathError> {
    if path.is_riordan() {
        return Err(path.domain_error("already a generalized Riordan path"));
    }
    if path.end_height() < 0 {
        return Err(path.domain_error("end height must be nonnegative"));
    }
    let x = split_point(path, 0).expect("a non-Riordan path has a split point");
    Ok(reassemble(path, x))
}

/// Inverse of [`callan_forward`] on `UHD(l, h)` with `h >= 1`: the same split
/// taken one level up.
pub fn callan_inverse(path: &LatticePath) -> Result<LatticePath, PathError> {
    if path.end_height() < 1 {
        return Err(path.domain_error("end height must be at least 1"));
    }
    let x = split_point(path, 1).expect("a path from 0 ending at or above 1 crosses level 1");
    Ok(reassemble(path, x))
}

/// 1-based index of the step `X`: the later of the last `H` at height `level`
/// and the step after the last visit strictly below `level`.
fn split_point(path: &LatticePath, level: i64) -> Option<usize> {
    let h = path.heights();
    let flat = path
        .steps
        .iter()
        .enumerate()
        .filter(|&(t, &s)| s == Step::H && h[t] == level)
        .map(|(t, _)| t + 1)
        .max();
    let below = (0..h.len()).filter(|&t| h[t] < level).max().map(|t| t + 1).filter(|&x| x <= path.len());
    flat.max(below)
}

fn reassemble(path: &LatticePath, x: usize) -> LatticePath {
    let s = &path.steps[..x - 1];
    let mid = match path.steps[x - 1] {
        Step::H => Step::U,
        Step::U => Step::H,
        Step::D => unreachable!("the step before the suffix is never D"),
    };
    let mut steps = LatticePath::flipped(s);
    steps.push(mid);
    steps.extend_from_slice(&path.steps[x..]);
    LatticePath::new(steps)
}

/// `U -> UU`, `D -> DD`, `H -> DU`, from `GRP(l, l-k)` into `NLP(2l, 2l-2k)`.
pub fn riordan_double(path: &LatticePath) -> Result<LatticePath, PathError> {
    if !path.is_riordan() {
        return Err(path.domain_error("not a generalized Riordan path"));
    }
    let mut steps = Vec::with_capacity(2 * path.len());
    for s in &path.steps {
        steps.extend_from_slice(match s {
            Step::U => &[Step::U, Step::U],
            Step::D => &[Step::D, Step::D],
            Step::H => &[Step::D, Step::U],
        });
    }
    Ok(LatticePath::new(steps))
}

/// Inverse of [`riordan_double`]. A `UD` pair would be a peak at odd height.
pub fn riordan_halve(path: &LatticePath) -> Result<LatticePath, PathError> {
    if !path.is_ud() || path.len() % 2 != 0 || !path.is_nonnegative() {
        return Err(path.domain_error("expected a nonnegative UD path of even length"));
    }
    let steps = path
        .steps
        .chunks(2)
        .map(|pair| match pair {
            [Step::U, Step::U] => Ok(Step::U),
            [Step::D, Step::D] => Ok(Step::D),
            [Step::D, Step::U] => Ok(Step::H),
            _ => Err(path.domain_error("contains a peak at odd height")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticePath::new(steps))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Peak {
    pub x: usize,
    pub y: i64,
    pub odd: bool,
}

/// Points where a `U` step is followed by a `D` step.
pub fn peak_profile(path: &LatticePath) -> Result<Vec<Peak>, PathError> {
    if !path.is_ud() {
        return Err(path.domain_error("peaks are defined for UD paths"));
    }
    let h = path.heights();
    Ok(path
        .steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w == &[Step::U, Step::D])
        .map(|(t, _)| Peak { x: t + 1, y: h[t + 1], odd: h[t + 1] % 2 != 0 })
        .collect())
}

/// An odd peak at `x` sits in interval `s_{(x+1)/2}`; it is allowed when that
/// index is at most `n/2 - i`.
pub fn odd_peaks_allowed(peaks: &[Peak], n: usize, i: usize) -> bool {
    let limit = n / 2 - i;
    peaks.iter().all(|p| !p.odd || p.x.div_ceil(2) <= limit)
}

fn check_nki(n: usize, k: usize, i: usize) -> Result<(), PathError> {
    if 2 * k > n || 2 * i > n {
        return Err(PathError::Parameters(format!("need k, i <= n/2, got n = {n}, k = {k}, i = {i}")));
    }
    Ok(())
}

/// Nonnegative UD paths with `n` steps and `k` down steps whose odd-height
/// peaks all lie in the allowed intervals, by dynamic programming over
/// `(height, last step was U)`.
pub fn count_restricted(n: usize, k: usize, i: usize) -> Result<BigInt, PathError> {
    check_nki(n, k, i)?;
    let limit = n / 2 - i;
    let end = (n - 2 * k) as i64;
    let width = n + 2;
    // dp[h][last_up]
    let mut dp = vec![[BigInt::zero(), BigInt::zero()]; width];
    dp[0][0] = BigInt::one();
    for x in 0..n {
        let mut next = vec![[BigInt::zero(), BigInt::zero()]; width];
        for h in 0..width - 1 {
            for up in 0..2 {
                let c = &dp[h][up];
                if c.is_zero() {
                    continue;
                }
                next[h + 1][1] += c;
                if h > 0 {
                    let odd_peak = up == 1 && h % 2 == 1;
                    if !odd_peak || x.div_ceil(2) <= limit {
                        next[h - 1][0] += c;
                    }
                }
            }
        }
        dp = next;
    }
    let e = end as usize;
    Ok(&dp[e][0] + &dp[e][1])
}

/// Number of paths in `NLP(n, n-2k)`, `C(n,k) - C(n,k-1)`.
pub fn ballot(n: usize, k: usize) -> BigInt {
    binomial(n as i64, k as i64) - binomial(n as i64, k as i64 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityReport {
    pub n: usize,
    pub i: usize,
    /// `(k, restricted count / |NLP(n, n-2k)|)`
    pub probabilities: Vec<(usize, Rational)>,
    pub monotone: bool,
}

/// Probability that a uniform path in `NLP(n, n-2k)` satisfies the odd-peak
/// restriction, for `k = 0..=n/2`.
pub fn probability_monotonicity(n: usize, i: usize) -> Result<ProbabilityReport, PathError> {
    if n == 0 || 2 * i > n - 1 {
        return Err(PathError::Parameters(format!("need i <= (n-1)/2, got n = {n}, i = {i}")));
    }
    let mut counts = Vec::new();
    for k in 0..=n / 2 {
        counts.push((k, count_restricted(n, k, i)?, ballot(n, k)));
    }
    let monotone = counts.windows(2).all(|w| {
        let (_, a, b) = &w[1];
        let (_, c, d) = &w[0];
        a * d <= c * b
    });
    let probabilities = counts.into_iter().map(|(k, a, b)| (k, Rational::new(a, b))).collect();
    Ok(ProbabilityReport { n, i, probabilities, monotone })
}
