//! Partitions, Young diagrams and the shared text format.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty sequence is the empty partition.
///
/// The derived ordering is lexicographic on the part lists, which refines the dominance order
/// on partitions of a fixed size and serves as the deterministic scan order throughout the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition from parts, dropping zeros; fails unless weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Self(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Dominance `self <= other`; both must have the same size.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::Domain(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size(),
                other.size()
            )));
        }
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No part value repeats `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> bool {
        let mut run = 0;
        for (i, &p) in self.0.iter().enumerate() {
            run = if i > 0 && self.0[i - 1] == p { run + 1 } else { 1 };
            if run >= e {
                return false;
            }
        }
        true
    }

    /// The cells `(row, col)` of the Young diagram, 1-based.
    pub fn cells(&self) -> BTreeSet<(u32, u32)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
            .collect()
    }

    /// Residue `j - i mod e` of the cell in row `i`, column `j` (1-based).
    pub fn residue(row: u32, col: u32, e: usize) -> usize {
        (col as i64 - row as i64).rem_euclid(e as i64) as usize
    }

    pub fn contains_diagram(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Exponent-compressed text, e.g. `16,8,1^13`; the empty partition renders as `0`.
    pub fn to_compact_string(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if j - i > 1 {
                out.push(format!("{}^{}", self.0[i], j - i));
            } else {
                out.push(self.0[i].to_string());
            }
            i = j;
        }
        out.join(",")
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p as u32);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,5,4,2`, `16,8,1^13`, optional brackets and spaces; `""` and `"0"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, x)) => (b.trim(), x.trim()),
                None => (tok, "1"),
            };
            let value: u32 = base.parse().map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))?;
            let count: usize = exp.parse().map_err(|_| Error::Parse(format!("bad exponent {tok:?} in {s:?}")))?;
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a partition, panicking on malformed input; intended for literals in tests and examples.
pub fn part(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

/// A rimhook of a partition: the cells removed together with the generating hand node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RimHook {
    pub cells: BTreeSet<(u32, u32)>,
    pub size: usize,
    pub hand: (u32, u32),
}

impl RimHook {
    /// The rimhook `H_(i,j)` of `lambda`, or `None` when `(i,j)` is not a node.
    pub fn generated_by(lambda: &Partition, i: u32, j: u32) -> Option<RimHook> {
        if i == 0 || j == 0 || lambda.part(i as usize - 1) < j {
            return None;
        }
        let inside = |r: u32, c: u32| r >= 1 && c >= 1 && lambda.part(r as usize - 1) >= c;
        let cells: BTreeSet<(u32, u32)> = lambda
            .cells()
            .into_iter()
            .filter(|&(r, c)| r >= i && c >= j && !inside(r + 1, c + 1))
            .collect();
        Some(RimHook { size: cells.len(), cells, hand: (i, j) })
    }

    /// The rimhook formed by the cells of `lambda` outside `mu`, when `mu` is obtained by unwrapping one.
    pub fn between(lambda: &Partition, mu: &Partition) -> Option<RimHook> {
        if !lambda.contains_diagram(mu) {
            return None;
        }
        let outer = lambda.cells();
        let inner = mu.cells();
        let cells: BTreeSet<(u32, u32)> = outer.difference(&inner).copied().collect();
        let i = cells.iter().map(|c| c.0).min()?;
        let j = cells.iter().map(|c| c.1).min()?;
        let h = RimHook::generated_by(lambda, i, j)?;
        (h.cells == cells).then_some(h)
    }

    /// The diagram left after unwrapping this rimhook from `lambda`.
    pub fn unwrap_from(&self, lambda: &Partition) -> Partition {
        let mut rows: Vec<u32> = lambda.parts().to_vec();
        for &(r, _) in &self.cells {
            rows[r as usize - 1] -= 1;
        }
        Partition::from_unsorted(rows)
    }
}

/// Every rimhook of `lambda`, by brute force over hand nodes.
pub fn all_rimhooks(lambda: &Partition) -> Vec<RimHook> {
    lambda
        .cells()
        .into_iter()
        .filter_map(|(i, j)| RimHook::generated_by(lambda, i, j))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(part("16,8,1^13").len(), 15);
        assert_eq!(part("16,8,1^13").to_compact_string(), "16,8,1^13");
        assert_eq!(part(""), Partition::empty());
        assert_eq!(part("0"), Partition::empty());
        assert_eq!(part("[3, 1]").parts(), &[3, 1]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part("3,1").to_string(), "(3,1)");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("5,5,4,2,2,2,1,1").conjugate(), part("8,6,3,3,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
    }

    #[test]
    fn dominance_examples() {
        assert!(part("2,2").dominated_by(&part("3,1")).unwrap());
        assert!(!part("3,3").dominated_by(&part("4,1,1")).unwrap());
        assert!(!part("4,1,1").dominated_by(&part("3,3")).unwrap());
        assert!(part("3,1").dominated_by(&part("3,1")).unwrap());
        assert!(part("3").dominated_by(&part("2")).is_err());
    }

    #[test]
    fn lexicographic_order_refines_dominance() {
        for n in 1..=10 {
            let all = Partition::all_of_size(n);
            for a in &all {
                for b in &all {
                    if a != b && a.dominated_by(b).unwrap() {
                        assert!(a < b, "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn regularity_examples() {
        assert!(!part("2,2,2").is_e_regular(3));
        assert!(part("5,5,4,2,2,2,1,1").is_e_regular(4));
        assert!(Partition::empty().is_e_regular(2));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn rimhooks_unwrap_to_partitions() {
        for n in 0..=12 {
            for lam in Partition::all_of_size(n) {
                for h in all_rimhooks(&lam) {
                    let mu = h.unwrap_from(&lam);
                    assert_eq!(mu.size(), n - h.size);
                    assert_eq!(RimHook::between(&lam, &mu).unwrap(), h);
                }
            }
        }
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..10, 0..max).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(lam in arb_partition(12)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn text_round_trip(lam in arb_partition(12)) {
            prop_assert_eq!(lam.to_compact_string().parse::<Partition>().unwrap(), lam);
        }
    }
}
