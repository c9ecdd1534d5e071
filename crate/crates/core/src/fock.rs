//! The level-one Fock space and the divided-power actions of `E_i` and `F_i`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::abacus::Abacus;
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// A finite `Z[q, q^-1]`-combination of partitions; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> FockVector {
        FockVector::default()
    }

    pub fn basis(lambda: &Partition) -> FockVector {
        FockVector::monomial(lambda.clone(), LaurentPoly::one())
    }

    pub fn monomial(lambda: Partition, coeff: LaurentPoly) -> FockVector {
        let mut v = FockVector::zero();
        v.add_term(lambda, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, LaurentPoly> {
        self.terms
    }

    /// `<v, lambda>` for the form in which partitions are orthonormal.
    pub fn pairing(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (lam, a) in &other.terms {
            self.add_term(lam.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn bar(&self) -> FockVector {
        FockVector { terms: self.terms.iter().map(|(l, c)| (l.clone(), c.bar())).collect() }
    }

    /// The largest partition in the support, in the lexicographic order.
    pub fn leading(&self) -> Option<(&Partition, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| json!({"partition": l, "coeff": c.to_json()}))
                .collect(),
        )
    }
}

impl std::ops::Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl std::ops::Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &-LaurentPoly::one());
        out
    }
}

impl std::fmt::Display for FockVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (l, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "({c}){l}")?;
            }
        }
        Ok(())
    }
}

fn prev_runner(i: usize, e: usize) -> usize {
    (i + e - 1) % e
}

fn count_below(sorted: &[i64], x: i64) -> i64 {
    sorted.partition_point(|&c| c < x) as i64
}

fn count_above(sorted: &[i64], x: i64) -> i64 {
    (sorted.len() - sorted.partition_point(|&c| c <= x)) as i64
}

/// `N_F(lambda, mu)` for the addable `i`-subset `c` (sorted) with `beta(mu) = beta(lambda) + c^+ - c`.
pub fn n_f(lam: &Abacus, mu: &Abacus, i: usize, c: &[i64]) -> i64 {
    let plus: Vec<i64> = c.iter().map(|x| x + 1).collect();
    let pos: i64 = mu.addable(prev_runner(i, lam.e())).iter().map(|&x| count_below(c, x)).sum();
    let neg: i64 = lam.removable(i).iter().map(|&y| count_below(&plus, y)).sum();
    pos - neg
}

/// `N_E(lambda, mu)` for the same data as [`n_f`].
pub fn n_e(lam: &Abacus, mu: &Abacus, i: usize, c: &[i64]) -> i64 {
    let plus: Vec<i64> = c.iter().map(|x| x + 1).collect();
    let pos: i64 = lam.removable(i).iter().map(|&y| count_above(&plus, y)).sum();
    let neg: i64 = mu.addable(prev_runner(i, lam.e())).iter().map(|&x| count_above(c, x)).sum();
    pos - neg
}

/// Every `k`-element subset of `items`, each in increasing order.
pub fn subsets(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    fn rec(items: &[i64], k: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..items.len() {
            if items.len() - j < k - cur.len() {
                break;
            }
            cur.push(items[j]);
            rec(items, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `(mu, N_F)` for every addable `i`-subset of size `k`.
pub fn f_terms(lambda: &Partition, i: usize, k: usize, e: usize) -> Vec<(Partition, i64)> {
    let lam = Abacus::of(lambda, e);
    let addable = lam.addable(prev_runner(i, e));
    subsets(&addable, k)
        .into_iter()
        .map(|c| {
            let plus: Vec<i64> = c.iter().map(|x| x + 1).collect();
            let mu = lam.replaced(&c, &plus);
            let n = n_f(&lam, &mu, i, &c);
            (mu.partition(), n)
        })
        .collect()
}

/// `(lambda, N_E)` for every removable `i`-subset of size `k`.
pub fn e_terms(mu: &Partition, i: usize, k: usize, e: usize) -> Vec<(Partition, i64)> {
    let mu_ab = Abacus::of(mu, e);
    let removable = mu_ab.removable(i);
    subsets(&removable, k)
        .into_iter()
        .map(|plus| {
            let c: Vec<i64> = plus.iter().map(|x| x - 1).collect();
            let lam = mu_ab.replaced(&plus, &c);
            let n = n_e(&lam, &mu_ab, i, &c);
            (lam.partition(), n)
        })
        .collect()
}

fn act(v: &FockVector, terms: impl Fn(&Partition) -> Vec<(Partition, i64)>) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, coeff) in v.terms() {
        for (mu, n) in terms(lam) {
            out.add_term(mu, coeff.shift(n as i32));
        }
    }
    out
}

/// `F_i^{(k)} v`.
pub fn apply_f(v: &FockVector, i: usize, k: usize, e: usize) -> FockVector {
    act(v, |lam| f_terms(lam, i, k, e))
}

/// `E_i^{(k)} v`.
pub fn apply_e(v: &FockVector, i: usize, k: usize, e: usize) -> FockVector {
    act(v, |mu| e_terms(mu, i, k, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::{core_removable, BlockId};
    use crate::laurent::quantum_factorial;
    use crate::partition::part;

    fn q(n: i32) -> LaurentPoly {
        LaurentPoly::q_pow(n)
    }

    #[test]
    fn small_actions() {
        let empty = FockVector::basis(&Partition::empty());
        assert_eq!(apply_f(&empty, 0, 1, 2), FockVector::basis(&part("1")));
        let v = apply_f(&FockVector::basis(&part("1")), 1, 1, 2);
        let mut expected = FockVector::basis(&part("2"));
        expected.add_term(part("1,1"), q(1));
        assert_eq!(v, expected);
        assert_eq!(v.pairing(&part("1,1")), q(1));
        assert!(v.pairing(&part("3")).is_zero());
        assert!(apply_f(&FockVector::basis(&part("1")), 1, 3, 2).is_zero());
        assert_eq!(apply_e(&FockVector::basis(&part("1")), 0, 1, 2), empty);
        assert_eq!(apply_e(&FockVector::basis(&part("2")), 1, 1, 2), FockVector::monomial(part("1"), q(-1)));
        for i in 0..3 {
            assert!(apply_e(&empty, i, 1, 3).is_zero());
        }
        assert_eq!(FockVector::basis(&part("3,1")).pairing(&part("3,1")), LaurentPoly::one());
    }

    fn iterate(v: &FockVector, k: usize, f: impl Fn(&FockVector) -> FockVector) -> FockVector {
        (0..k).fold(v.clone(), |acc, _| f(&acc))
    }

    #[test]
    fn divided_powers() {
        for e in 2..=4 {
            for n in 0..=12 {
                for lam in Partition::all_of_size(n) {
                    let v = FockVector::basis(&lam);
                    for i in 0..e {
                        for k in 1..=3 {
                            let fact = quantum_factorial(k as i64);
                            let f_pow = iterate(&v, k, |x| apply_f(x, i, 1, e));
                            assert_eq!(f_pow, apply_f(&v, i, k, e).scale(&fact), "{lam} F_{i}^{k} e={e}");
                            let e_pow = iterate(&v, k, |x| apply_e(x, i, 1, e));
                            assert_eq!(e_pow, apply_e(&v, i, k, e).scale(&fact), "{lam} E_{i}^{k} e={e}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn terms_stay_in_one_block() {
        for e in 2..=4 {
            for n in 0..=10 {
                for lam in Partition::all_of_size(n) {
                    for i in 0..e {
                        for k in 1..=2 {
                            let v = apply_f(&FockVector::basis(&lam), i, k, e);
                            let blocks: std::collections::BTreeSet<String> =
                                v.terms().map(|(mu, _)| BlockId::of(mu, e).to_string()).collect();
                            assert!(blocks.len() <= 1);
                            for (mu, _) in v.terms() {
                                assert_eq!(mu.size(), n + k);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e_and_f_enumerate_the_same_pairs() {
        for e in 2..=4 {
            for n in 0..=8 {
                for lam in Partition::all_of_size(n) {
                    for i in 0..e {
                        for k in 1..=2 {
                            for (mu, nf) in f_terms(&lam, i, k, e) {
                                let back: Vec<_> = e_terms(&mu, i, k, e).into_iter().filter(|(l, _)| *l == lam).collect();
                                assert_eq!(back.len(), 1);
                                let lam_ab = Abacus::of(&lam, e);
                                let mu_ab = Abacus::of(&mu, e);
                                let c: Vec<i64> = lam_ab
                                    .beads_from(lam_ab.base().min(mu_ab.base()) - 1)
                                    .into_iter()
                                    .filter(|&x| !mu_ab.contains(x))
                                    .collect();
                                assert_eq!(n_f(&lam_ab, &mu_ab, i, &c), nf);
                                assert_eq!(n_e(&lam_ab, &mu_ab, i, &c), back[0].1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nonexceptional_equivalences() {
        for e in 2..=4 {
            for w in 1..=3 {
                for n in 0..=6 {
                    for core in Partition::all_of_size(n) {
                        let Ok(b) = BlockId::new(e, core, w) else { continue };
                        let levels = b.levels();
                        for a in 0..e {
                            let k = core_removable(&levels, a);
                            if k <= 0 {
                                continue;
                            }
                            for lam in b.enumerate() {
                                let tilde = Abacus::of(&lam, e).weyl_s(a).unwrap().partition();
                                let x = FockVector::basis(&lam);
                                let y = FockVector::basis(&tilde);
                                let c1 = apply_f(&x, a, 1, e).is_zero();
                                let c2 = apply_e(&x, a, k as usize, e) == y;
                                let c3 = apply_f(&y, a, k as usize, e) == x;
                                let c4 = apply_e(&y, a, 1, e).is_zero();
                                assert!(c1 == c2 && c2 == c3 && c3 == c4, "{lam} a={a} e={e}");
                            }
                        }
                    }
                }
            }
        }
    }
}
