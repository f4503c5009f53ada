//! Checkers for the inequality chains. Each returns one [`InequalityVerdict`]
//! per parameter point, carrying enough to reproduce the check.
//!
//! Ratio inequalities `a/b <= c/d` are compared as `a·d <= c·b`. A verdict is
//! `degenerate` when a denominator vanishes or the point lies outside the
//! hypothesis of the statement; degenerate verdicts are reported but never
//! count as failures.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::alpha::{binomial, int_power_coeffs, AlphaTable, LastTable};
use crate::immanant::{hook_immanants, two_row_immanants};
use crate::poly::{rat, rational_to_string, RatPoly, Rational};
use crate::tree::Tree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    Poly(RatPoly),
    Integer(BigInt),
    Rational(Rational),
    Count { expected: BigInt, got: BigInt },
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::None => Value::Null,
            Witness::Poly(p) => json!({ "poly": p.to_coeff_strings() }),
            Witness::Integer(v) => json!({ "gap": v.to_string() }),
            Witness::Rational(r) => json!({ "value": rational_to_string(r) }),
            Witness::Count { expected, got } => {
                json!({ "expected": expected.to_string(), "got": got.to_string() })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub claim: String,
    pub params: Vec<(String, String)>,
    pub holds: bool,
    pub degenerate: bool,
    pub witness: Witness,
    pub detail: String,
}

impl InequalityVerdict {
    pub fn new(claim: &str, params: Vec<(&str, String)>) -> Self {
        InequalityVerdict {
            claim: claim.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            holds: true,
            degenerate: false,
            witness: Witness::None,
            detail: String::new(),
        }
    }

    pub fn with(mut self, holds: bool, witness: Witness) -> Self {
        self.holds = holds;
        self.witness = witness;
        self
    }

    pub fn degenerate(mut self, flag: bool, why: &str) -> Self {
        if flag {
            self.degenerate = true;
            self.push_detail(why);
        }
        self
    }

    pub fn detail(mut self, text: impl AsRef<str>) -> Self {
        self.push_detail(text.as_ref());
        self
    }

    fn push_detail(&mut self, text: &str) {
        if text.is_empty() {
            return;
        }
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(text);
    }

    /// Counts against the run: fails and is not degenerate.
    pub fn is_failure(&self) -> bool {
        !self.holds && !self.degenerate
    }

    /// `k=v;k=v` in insertion order.
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }

    pub fn to_json(&self) -> Value {
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), Value::String(v.clone()));
        }
        json!({
            "claim": self.claim,
            "params": params,
            "holds": self.holds,
            "degenerate": self.degenerate,
            "witness": self.witness.to_json(),
            "detail": self.detail,
        })
    }

    /// `claim,params,holds,degenerate,detail`, quoting fields as needed.
    pub fn csv_row(&self) -> String {
        [
            csv_field(&self.claim),
            csv_field(&self.params_string()),
            self.holds.to_string(),
            self.degenerate.to_string(),
            csv_field(&self.detail),
        ]
        .join(",")
    }
}

pub const CSV_HEADER: &str = "claim,params,holds,degenerate,detail";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `a/b <= c/d` with positive denominators, as `(holds, c·b - a·d, degenerate)`.
pub fn ratio_le(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> (bool, BigInt, bool) {
    let gap = c * b - a * d;
    let degenerate = !b.is_positive() || !d.is_positive();
    (!gap.is_negative(), gap, degenerate)
}

fn ratio_verdict(claim: &str, params: Vec<(&str, String)>, lhs: (&BigInt, &BigInt), rhs: (&BigInt, &BigInt)) -> InequalityVerdict {
    let (holds, gap, zero_den) = ratio_le(lhs.0, lhs.1, rhs.0, rhs.1);
    let text = format!("{}/{} <= {}/{}", lhs.0, lhs.1, rhs.0, rhs.1);
    InequalityVerdict::new(claim, params)
        .with(holds, Witness::Integer(gap))
        .detail(text)
        .degenerate(zero_den, "zero denominator")
}

/// Normalized two-row immanants decrease in `k`: the witness
/// `imm_{k-1} - imm_k` must be even in `q` with nonnegative coefficients.
pub fn check_two_row_chain(tree: &Tree) -> Vec<InequalityVerdict> {
    let n = tree.n();
    let imms = two_row_immanants(tree);
    (2..=n / 2)
        .map(|k| {
            let diff = &imms[k - 1] - &imms[k];
            let (even, nonneg) = diff.even_nonneg();
            InequalityVerdict::new("thm2", vec![("tree", tree.to_string()), ("k", k.to_string())])
                .with(even && nonneg, Witness::Poly(diff.clone()))
                .detail(if even && nonneg { String::new() } else { format!("difference {diff} is not certified nonnegative") })
                .degenerate(n < 5, "n < 5 is outside the hypothesis")
        })
        .collect()
}

/// `{-10, -19/2, ..., 10}`.
pub fn default_q_grid() -> Vec<Rational> {
    (-20..=20).map(|t| Rational::new(BigInt::from(t), BigInt::from(2))).collect()
}

/// Hook chain in both forms at every grid point. Weak: `hook_{k-1} <= hook_k`.
/// Strong: `hook_{k-1} + (q^2-1)/(k-1) <= (k-2)/(k-1) hook_k`.
pub fn check_hook_chain(tree: &Tree, grid: &[Rational]) -> Vec<InequalityVerdict> {
    let n = tree.n();
    let hooks = hook_immanants(tree);
    let q2_minus_1 = RatPoly::from_ints(&[-1, 0, 1]);
    let mut out = Vec::new();
    for k in 2..=n {
        let prev = &hooks[k - 2];
        let cur = &hooks[k - 1];
        let weak = cur - prev;
        let km1 = rat(k as i64 - 1);
        let strong = &(&cur.scale(&(rat(k as i64 - 2) / &km1)) - prev) - &q2_minus_1.scale(&(rat(1) / &km1));
        for (claim, diff) in [("thm1-weak", weak), ("thm1-strong", strong)] {
            let bad: Vec<&Rational> = grid.iter().filter(|q| diff.eval(q).is_negative()).collect();
            let (even, nonneg) = diff.even_nonneg();
            let mut v = InequalityVerdict::new(claim, vec![("tree", tree.to_string()), ("k", k.to_string())])
                .with(bad.is_empty(), Witness::Poly(diff.clone()))
                .detail(format!("grid points {}; coefficient certificate even={even} nonneg={nonneg}", grid.len()));
            if let Some(q) = bad.first() {
                v = v.detail(format!("negative at q = {} ({} points)", rational_to_string(q), bad.len()));
            }
            out.push(v.degenerate(n < 2, "n < 2"));
        }
    }
    out
}

/// `α_{n,k,i}/α_{n,k,0} >= α_{n,k+1,i}/α_{n,k+1,0}` for `i < n/2`.
pub fn check_alpha_ratio_chain(table: &AlphaTable) -> Vec<InequalityVerdict> {
    ratio_chain(table, "lem6", table.n() / 2)
}

/// The same ratio chain including the last row `i = n/2`, for `n >= 5`.
pub fn check_alpha_ratio_chain_full(table: &AlphaTable) -> Vec<InequalityVerdict> {
    let n = table.n();
    ratio_chain(table, "lem13", n / 2 + 1)
        .into_iter()
        .map(|v| v.degenerate(n < 5, "n < 5 is outside the hypothesis"))
        .collect()
}

fn ratio_chain(table: &AlphaTable, claim: &str, i_end: usize) -> Vec<InequalityVerdict> {
    let n = table.n();
    let mut out = Vec::new();
    for i in 0..i_end {
        for k in 0..n / 2 {
            let (k, i) = (k as i64, i as i64);
            out.push(ratio_verdict(
                claim,
                vec![("n", n.to_string()), ("k", k.to_string()), ("i", i.to_string())],
                (&table.get(k + 1, i), &table.get(k + 1, 0)),
                (&table.get(k, i), &table.get(k, 0)),
            ));
        }
    }
    out
}

/// `last_{l,k+1}/last_{l-1,k} <= last_{l,k}/last_{l-1,k-1}` for `1 <= k <= l-1`.
pub fn check_last_cross_ratio(last: &LastTable, l: usize) -> Vec<InequalityVerdict> {
    let li = l as i64;
    (1..li)
        .map(|k| {
            ratio_verdict(
                "lem9",
                vec![("l", l.to_string()), ("k", k.to_string())],
                (&last.get(li, k + 1), &last.get(li - 1, k)),
                (&last.get(li, k), &last.get(li - 1, k - 1)),
            )
            .degenerate(l < 3, "l < 3 is outside the hypothesis")
        })
        .collect()
}

/// `last_{l,k+1}/last_{l,k} <= last_{l-r,k+1-r}/last_{l-r,k-r}` for `1 <= r <= k <= l-1`.
///
/// The bound at `r` chains the single-step inequality through levels
/// `l, l-1, ..., l-r+1`, so `r = l-1` reaches level 2 where `last_{1,1} = 0`.
pub fn check_last_ratio_shift(last: &LastTable, l: usize) -> Vec<InequalityVerdict> {
    let li = l as i64;
    let mut out = Vec::new();
    for k in 1..li {
        for r in 1..=k {
            out.push(
                ratio_verdict(
                    "cor10",
                    vec![("l", l.to_string()), ("k", k.to_string()), ("r", r.to_string())],
                    (&last.get(li, k + 1), &last.get(li, k)),
                    (&last.get(li - r, k + 1 - r), &last.get(li - r, k - r)),
                )
                .degenerate(l < 3, "l < 3 is outside the hypothesis")
                .degenerate(l >= 3 && r == li - 1, "r = l-1 chains through l = 2"),
            );
        }
    }
    out
}

/// `last_{l,k+1}/(C(2l,k+1)-C(2l,k)) <= last_{l,k}/(C(2l,k)-C(2l,k-1))`.
pub fn check_last_dimension_ratio(last: &LastTable, l: usize) -> Vec<InequalityVerdict> {
    let li = l as i64;
    let dim = |k: i64| binomial(2 * li, k) - binomial(2 * li, k - 1);
    (1..li)
        .map(|k| {
            ratio_verdict(
                "lem11",
                vec![("l", l.to_string()), ("k", k.to_string())],
                (&last.get(li, k + 1), &dim(k + 1)),
                (&last.get(li, k), &dim(k)),
            )
            .degenerate(l < 3, "l < 3 is outside the hypothesis")
        })
        .collect()
}

/// With `a_{l,k,s}` the coefficient of `x^k` in `(1+sx+x^2)^l` and
/// `Δ_s(k) = a_{l,k,s} - a_{l,k-1,s}`, checks
/// `Δ_s(k+1)/Δ_{r+s}(k+1) <= Δ_s(k)/Δ_{r+s}(k)` for `0 <= k <= l-1`.
/// With `r = s = 1` this is the last-row inequality above.
pub fn check_general_sr(l: usize, s: usize, r: usize) -> Vec<InequalityVerdict> {
    let a = int_power_coeffs(&[1, s as i64, 1], l as u32);
    let b = int_power_coeffs(&[1, (r + s) as i64, 1], l as u32);
    let at = |v: &[BigInt], k: i64| if k < 0 { BigInt::zero() } else { v.get(k as usize).cloned().unwrap_or_default() };
    let delta = |v: &[BigInt], k: i64| at(v, k) - at(v, k - 1);
    (0..l as i64)
        .map(|k| {
            ratio_verdict(
                "rem12",
                vec![("l", l.to_string()), ("s", s.to_string()), ("r", r.to_string()), ("k", k.to_string())],
                (&delta(&a, k + 1), &delta(&b, k + 1)),
                (&delta(&a, k), &delta(&b, k)),
            )
            .degenerate(l < 3, "l < 3 is outside the range of the last-row argument")
        })
        .collect()
}

/// Every ratio inequality that applies at size `n`: both chains on the
/// `n` table and, for even `n = 2l`, the last-row family at `l`.
pub fn check_alpha_ratios(table: &AlphaTable, last: &LastTable) -> Vec<InequalityVerdict> {
    let n = table.n();
    let mut out = check_alpha_ratio_chain(table);
    out.extend(check_alpha_ratio_chain_full(table));
    if n % 2 == 0 && n / 2 <= last.l_max() {
        let l = n / 2;
        out.extend(check_last_cross_ratio(last, l));
        out.extend(check_last_ratio_shift(last, l));
        out.extend(check_last_dimension_ratio(last, l));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::{alpha_table, alpha_tables, last_table};
    use crate::tree::{generate_trees, TreeKind};

    fn failures(v: &[InequalityVerdict]) -> Vec<String> {
        v.iter().filter(|v| v.is_failure()).map(|v| format!("{} {}", v.claim, v.params_string())).collect()
    }

    #[test]
    fn p4_and_s4() {
        let p4 = check_two_row_chain(&Tree::path(4).unwrap());
        assert_eq!(p4.len(), 1);
        assert!(!p4[0].holds && p4[0].degenerate);
        // 1+3q²+4/3q⁴ - (1+2q²+2q⁴)
        let Witness::Poly(w) = &p4[0].witness else { panic!() };
        assert_eq!(w, &RatPoly::from_coeffs(vec![rat(0), rat(0), rat(1), rat(0), Rational::new((-2).into(), 3.into())]));
        let s4 = check_two_row_chain(&Tree::star(4).unwrap());
        assert!(s4.iter().all(|v| v.holds));
    }

    #[test]
    fn two_row_chain_small_sweep() {
        for n in 5..=6 {
            for t in generate_trees(TreeKind::All, n, None).unwrap() {
                assert!(failures(&check_two_row_chain(&t)).is_empty(), "{t}");
            }
        }
    }

    #[test]
    fn hook_chain_on_samples() {
        let grid = default_q_grid();
        assert_eq!(grid.len(), 41);
        for t in [Tree::path(5).unwrap(), Tree::star(6).unwrap()] {
            let v = check_hook_chain(&t, &grid);
            assert_eq!(v.len(), 2 * (t.n() - 1));
            assert!(failures(&v).is_empty(), "{:?}", failures(&v));
        }
    }

    #[test]
    fn hook_chain_p2_boundary() {
        let v = check_hook_chain(&Tree::path(2).unwrap(), &[rat(0)]);
        assert!(v.iter().all(|v| v.holds));
    }

    #[test]
    fn ratio_chains_hold_up_to_40() {
        let last = last_table(40);
        for table in alpha_tables(40).into_iter().skip(2) {
            let mut v = check_alpha_ratio_chain(&table);
            v.extend(check_alpha_ratio_chain_full(&table));
            assert!(failures(&v).is_empty(), "{:?}", failures(&v));
        }
        for l in 1..=40 {
            assert!(failures(&check_last_dimension_ratio(&last, l)).is_empty(), "l = {l}");
        }
    }

    #[test]
    fn lemma9_counterexamples() {
        let v = check_last_cross_ratio(&last_table(2), 2);
        assert_eq!(v.len(), 1);
        assert!(v[0].degenerate && !v[0].holds);
        // From Table 1: last_{3,2}/last_{2,1} = 3 > 2 = last_{3,1}/last_{2,0}.
        let three = check_last_cross_ratio(&last_table(3), 3);
        assert_eq!(three.iter().map(|v| v.holds).collect::<Vec<_>>(), vec![false, true]);
        assert!(!three[0].degenerate);
        assert_eq!(three[0].witness, Witness::Integer((-1).into()));
        let last = last_table(40);
        let bad: Vec<String> = (3..=40).flat_map(|l| failures(&check_last_cross_ratio(&last, l))).collect();
        assert_eq!(bad, vec!["lem9 l=3;k=1", "lem9 l=4;k=3", "lem9 l=6;k=5"]);
    }

    #[test]
    fn cor10_failures_follow_lemma9() {
        let last = last_table(40);
        let mut bad = 0;
        for l in 3..=40 {
            for v in check_last_ratio_shift(&last, l) {
                if v.is_failure() {
                    let k: usize = v.params[1].1.parse().unwrap();
                    assert!(k == l - 1 || (l, k) == (3, 1), "{}", v.params_string());
                    bad += 1;
                }
            }
        }
        assert_eq!(bad, 39);
    }

    #[test]
    fn remark12_grid() {
        for s in 1..=4 {
            for r in 1..=4 {
                for l in 1..=12 {
                    let v = check_general_sr(l, s, r);
                    assert!(failures(&v).is_empty(), "{:?}", failures(&v));
                }
            }
        }
        let one = check_general_sr(1, 3, 2);
        assert!(one.iter().all(|v| v.holds));
        let odd = check_general_sr(2, 1, 1);
        assert!(!odd[1].holds && odd[1].degenerate);
    }

    #[test]
    fn remark12_special_case_matches_lemma11() {
        let last = last_table(4);
        let lem: Vec<bool> = check_last_dimension_ratio(&last, 4).iter().map(|v| v.holds).collect();
        let rem: Vec<bool> = check_general_sr(4, 1, 1)[1..].iter().map(|v| v.holds).collect();
        assert_eq!(lem, rem);
        let lem: Vec<_> = check_last_dimension_ratio(&last, 4).into_iter().map(|v| v.witness).collect();
        let rem: Vec<_> = check_general_sr(4, 1, 1).into_iter().skip(1).map(|v| v.witness).collect();
        assert_eq!(lem, rem);
    }

    #[test]
    fn verdict_json_and_csv() {
        let v = ratio_verdict("x", vec![("n", "5".into())], (&1.into(), &2.into()), (&1.into(), &1.into()));
        let j = v.to_json();
        assert_eq!(j["claim"], "x");
        assert_eq!(j["witness"]["gap"], "1");
        assert_eq!(v.csv_row(), "x,n=5,true,false,1/2 <= 1/1");
        assert!(alpha_table(6).n() == 6);
    }
}
