//! The acceptance suites AC-1 to AC-9, each run to a single pass/fail report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use focktiles::abacus::{core_removable, from_levels, is_core, Abacus, BlockId};
use focktiles::beadops::{lambda_of_hook, move_along, move_one, mullineux_crystal, mullineux_fast};
use focktiles::canonical::{closed_g, rouquier_d, rouquier_d_reduced, Inductive, Llt};
use focktiles::fock::{apply_e, apply_f, FockVector};
use focktiles::labels::{hooks_e, is_m_increasing, star, z_label, z_of, BlockLabels};
use focktiles::partition::part;
use focktiles::polytope::{build_tiling, closed_column, d_closed};
use focktiles::{LaurentPoly, Partition};

pub const SUITES: [&str; 9] = ["ac1", "ac2", "ac3", "ac4", "ac5", "ac6", "ac7", "ac8", "ac9"];

/// The outcome of one suite: how many checks ran and the first failures.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{} {status} {}: {} exact checks, {} failures ({:.2}s)", self.id, self.title, self.checks, self.failures.len(), self.elapsed.as_secs_f64())?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// Counts checks and keeps failure messages.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }
}

/// Runs one suite by name (`ac1` .. `ac9`, case-insensitive, with or without a dash).
pub fn run_suite(name: &str) -> Option<Report> {
    let key = name.to_ascii_lowercase().replace('-', "");
    let (title, body): (&'static str, fn() -> Tally) = match key.as_str() {
        "ac1" => ("worked examples", ac1),
        "ac2" => ("LLT columns equal closed-formula columns", ac2),
        "ac3" => ("inductive columns equal closed-formula columns", ac3),
        "ac4" => ("Rouquier formula against reduced, closed and LLT values", ac4),
        "ac5" => ("generic cell counts of the tiling figures", ac5),
        "ac6" => ("coverage, injectivity and common faces of tilings", ac6),
        "ac7" => ("block and m-increasing counts", ac7),
        "ac8" => ("Mullineux algorithms and column symmetry", ac8),
        "ac9" => ("label bijection and Weyl-orbit constancy", ac9),
        _ => return None,
    };
    let start = Instant::now();
    let tally = body();
    Some(Report {
        id: format!("AC-{}", &key[2..]),
        title,
        checks: tally.checks,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

/// Blocks of every weight in `ws` whose `e`-core has at most `max_core` boxes.
pub fn blocks(es: &[usize], ws: &[usize], max_core: usize) -> Vec<BlockId> {
    let mut out = Vec::new();
    for &e in es {
        for &w in ws {
            for n in 0..=max_core {
                for core in Partition::all_of_size(n).into_iter().filter(|c| is_core(c, e)) {
                    out.push(BlockId::new(e, core, w).expect("cores give blocks"));
                }
            }
        }
    }
    out
}

/// The block set shared by AC-2, AC-3, AC-6, AC-8 and AC-9.
pub fn core_block_set() -> Vec<BlockId> {
    blocks(&[4, 5, 6], &[2, 3], 6)
}

fn column_of(v: &FockVector) -> BTreeMap<Partition, LaurentPoly> {
    v.terms().map(|(l, c)| (l.clone(), c.clone())).collect()
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn llt_entry(lambda: &str, mu: &str, e: usize) -> Result<LaurentPoly, String> {
    let mut llt = Llt::new(e);
    llt.g(&part(mu)).map(|g| g.pairing(&part(lambda))).map_err(|err| err.to_string())
}

fn ac1() -> Tally {
    let mut t = Tally::default();
    let lam = part("5,5,4,2,2,2,1,1");
    t.eq(z_label(&lam, 4), vec![1, 1, 2, 2, 1], "z(5,5,4,2,2,2,1,1)");
    let b = BlockId::of(&lam, 4);
    t.eq((b.core.clone(), b.weight), (part("2"), 5), "4-core and weight of (5,5,4,2,2,2,1,1)");
    t.eq(
        Abacus::of(&part("7,3,3,2,2,1"), 4).quotient(),
        vec![part("1"), part(""), part("2,1"), part("")],
        "4-quotient of (7,3,3,2,2,1)",
    );
    let hooks = hooks_e(&lam, 4);
    match hooks.iter().find(|h| h.size == 12).map(|h| lambda_of_hook(&lam, h, 4)) {
        Some(Ok(lh)) => {
            t.eq(lh.clone(), part("6,5,5,2,2,2"), "λ_H for the 12-hook");
            t.eq(z_label(&lh, 4), vec![1, 1, 3, 2, 1], "z(λ_H3)");
            t.eq(llt_entry("5,5,4,2,2,2,1,1", "6,5,5,2,2,2", 4), Ok(q(1)), "d for λ_H3");
        }
        other => t.fail(format!("λ_H for the 12-hook: {other:?}")),
    }
    match hooks.get(4).map(|h| lambda_of_hook(&lam, h, 4)) {
        Some(Ok(lh)) => {
            t.eq(lh.clone(), part("6,5,3,2,2,2,1,1"), "λ_H5");
            t.eq(z_label(&lh, 4), vec![1, 1, 1, 2, 2], "z(λ_H5)");
        }
        other => t.fail(format!("λ_H5: {other:?}")),
    }
    let mu = part("6,5,4,2,2,2,1");
    t.eq(z_label(&mu, 4), vec![1, 1, 2, 2, 2], "z(6,5,4,2,2,2,1)");
    t.eq(llt_entry("5,5,4,2,2,2,1,1", "6,5,4,2,2,2,1", 4), Ok(q(2)), "d for (6,5,4,2,2,2,1)");
    t.eq(d_closed(&lam, &mu, 4).value, q(2), "closed d for (6,5,4,2,2,2,1)");

    let (l10, m10) = (part("16,8,1^13"), part("17,7,2^4,1^5"));
    t.eq(z_label(&l10, 10), vec![0, 7, 8], "z(16,8,1^13)");
    t.eq(d_closed(&l10, &m10, 10).value, q(2), "closed d for the e=10 pair");
    t.eq(llt_entry("16,8,1^13", "17,7,2^4,1^5", 10), Ok(q(2)), "LLT d for the e=10 pair");
    match Inductive::new(10).g(&m10) {
        Ok(g) => t.eq(g.pairing(&l10), q(2), "inductive d for the e=10 pair"),
        Err(err) => t.fail(format!("inductive G for the e=10 pair: {err}")),
    }

    t.eq(llt_entry("5,3,2,1,1", "6,3,2,1", 3), Ok(LaurentPoly::from_terms([(1, 1), (3, 1)])), "e=3 pair");

    let b2 = BlockId::of(&part("5"), 2);
    t.check(b2.is_rouquier(), || "the e=2 block of (5) is Rouquier".into());
    t.eq(rouquier_d(&part("3,1,1"), &part("5"), &b2).ok(), Some(q(1)), "Rouquier d((3,1,1),(5))");
    t.eq(rouquier_d(&part("3,2"), &part("5"), &b2).ok(), Some(LaurentPoly::zero()), "Rouquier d((3,2),(5))");
    t.eq(llt_entry("3,1,1", "5", 2), Ok(q(1)), "LLT d((3,1,1),(5))");
    t.eq(llt_entry("3,2", "5", 2), Ok(LaurentPoly::zero()), "LLT d((3,2),(5))");

    let seven = part("7,3,3,2,2,1");
    t.eq(z_label(&seven, 4), vec![1, 1, 2, 3], "z(7,3,3,2,2,1)");
    t.eq(move_one(&seven, 3, 4).ok(), Some(part("9,3,2,2,2")), "move along ε_3");
    t.eq(move_along(&seven, &[2, 3], 4).ok(), Some(part("10,4,2,1,1")), "move along ε_2 + ε_3");
    t.eq(move_one(&seven, 2, 4).ok(), Some(part("7,4,4,1,1,1")), "move along ε_2 alone");
    t.eq(llt_entry("7,3,3,2,2,1", "10,4,2,1,1", 4), Ok(q(2)), "d((7,3,3,2,2,1),(10,4,2,1,1))");
    t
}

fn ac2_blocks() -> Vec<BlockId> {
    let mut out = core_block_set();
    out.extend(blocks(&[9, 10], &[2, 3], 2));
    out
}

fn ac2() -> Tally {
    let tallies: Vec<Tally> = ac2_blocks()
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let e = b.e;
            let mut llt = Llt::new(e);
            for mu in b.enumerate() {
                if !mu.is_e_regular(e) || !is_m_increasing(&z_label(&mu, e), 4) {
                    continue;
                }
                match llt.g(&mu) {
                    Ok(g) => t.eq(column_of(&g), closed_column(&mu, e), &format!("{b} column {mu}")),
                    Err(err) => t.fail(format!("{b} LLT {mu}: {err}")),
                }
            }
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn ac3() -> Tally {
    let tallies: Vec<Tally> = ac2_blocks()
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let e = b.e;
            let mut ind = Inductive::new(e);
            for mu in b.enumerate() {
                if !is_m_increasing(&z_label(&mu, e), 4) {
                    continue;
                }
                let g = match ind.g(&mu) {
                    Ok(g) => g,
                    Err(err) => {
                        t.fail(format!("{b} inductive {mu}: {err}"));
                        continue;
                    }
                };
                t.eq(&g, &closed_g(&mu, e), &format!("{b} column {mu}"));
                for a in 0..e {
                    let k = core_removable(&b.levels(), a);
                    if k > 0 {
                        t.check(apply_e(&g, a, k as usize + 2, e).is_zero(), || format!("{b} E^(k+2) G({mu}) at {a}"));
                        t.check(apply_f(&g, a, 2, e).is_zero(), || format!("{b} F^(2) G({mu}) at {a}"));
                    }
                }
            }
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

/// Rouquier blocks with `e <= 8` and `w <= 3`: runner levels spaced by `w - 1` and by `w`.
pub fn rouquier_blocks() -> Vec<BlockId> {
    let mut out = Vec::new();
    for e in 2..=8usize {
        for w in 1..=3usize {
            for gap in [(w as i64 - 1).max(1), w as i64] {
                let levels: Vec<i64> = (0..e as i64).map(|i| i * gap).collect();
                let b = BlockId::new(e, from_levels(&levels).partition(), w).expect("levels give a core");
                if !out.contains(&b) {
                    out.push(b);
                }
            }
        }
    }
    out
}

fn ac4() -> Tally {
    let tallies: Vec<Tally> = rouquier_blocks()
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let e = b.e;
            t.check(b.is_rouquier(), || format!("{b} is Rouquier"));
            let members = b.enumerate();
            let mut llt = Llt::new(e);
            for mu in &members {
                let zero_inc = is_m_increasing(&z_label(mu, e), 0);
                let g = if mu.is_e_regular(e) { Some(llt.g(mu)) } else { None };
                if !zero_inc && g.is_none() {
                    continue;
                }
                for lam in &members {
                    let d = match rouquier_d(lam, mu, b) {
                        Ok(d) => d,
                        Err(err) => {
                            t.fail(format!("{b} LM d({lam},{mu}): {err}"));
                            continue;
                        }
                    };
                    if zero_inc {
                        t.eq(rouquier_d_reduced(lam, mu, b).ok(), Some(d.clone()), &format!("{b} reduced d({lam},{mu})"));
                        t.eq(d_closed(lam, mu, e).value, d.clone(), &format!("{b} closed d({lam},{mu})"));
                    }
                    match &g {
                        Some(Ok(g)) => t.eq(g.pairing(lam), d, &format!("{b} LLT d({lam},{mu})")),
                        Some(Err(err)) => t.fail(format!("{b} LLT {mu}: {err}")),
                        None => {}
                    }
                }
            }
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn ac5() -> Tally {
    let mut t = Tally::default();
    let first = build_tiling(&BlockId::new(17, part("5,3,1"), 2).expect("a 17-core"), 4);
    t.eq(first.generic_cells().len(), (17 - 10) * (17 - 11) / 2, "generic cells for e=17, core (5,3,1), w=2");
    let second = build_tiling(&BlockId::new(25, part("15,1^14"), 3).expect("a 25-core"), 4);
    t.eq(second.generic_cells().len(), 20, "generic cells for e=25, core (15,1^14), w=3");
    let generic_classes: std::collections::BTreeSet<Vec<Vec<i64>>> = second
        .generic_cells()
        .iter()
        .map(|c| {
            let mut gens = c.para.generators();
            gens.sort();
            gens
        })
        .collect();
    t.eq(generic_classes.len(), 7, "translation classes of generic cells for e=25");
    t
}

fn ac6() -> Tally {
    let mut set = core_block_set();
    set.extend(blocks(&[12], &[3], 3));
    let tallies: Vec<Tally> = set
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let tiling = build_tiling(b, 4);
            t.check(tiling.check_coverage(), || format!("{b} coverage"));
            t.check(tiling.check_injectivity(), || format!("{b} injectivity"));
            t.check(tiling.check_intersections(), || format!("{b} common faces"));
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ac7() -> Tally {
    let mut t = Tally::default();
    for b in blocks(&[4, 5, 6, 7, 8, 9], &[2, 3], 4) {
        let e = b.e as i64;
        let w = b.weight as i64;
        let members = b.enumerate();
        let expected = if w == 2 { e * (e + 3) / 2 } else { e * (e + 1) * (e + 8) / 6 };
        t.eq(members.len() as i64, expected, &format!("{b} cardinality"));
        let labels: Vec<Vec<i64>> = members.iter().map(|l| z_label(l, b.e)).collect();
        for m in 0..=4 {
            let count = labels.iter().filter(|z| is_m_increasing(z, m)).count() as i64;
            t.eq(count, binomial(e - (m - 1) * (w - 1), w), &format!("{b} {m}-increasing count"));
        }
    }
    t
}

fn ac8() -> Tally {
    let tallies: Vec<Tally> = core_block_set()
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let e = b.e;
            let w = b.weight as i32;
            let members = b.enumerate();
            let mut llt = Llt::new(e);
            for mu in members.iter().filter(|m| m.is_e_regular(e)) {
                let star_mu = match mullineux_crystal(mu, e) {
                    Ok(s) => s,
                    Err(err) => {
                        t.fail(format!("{b} crystal Mullineux {mu}: {err}"));
                        continue;
                    }
                };
                let z = z_label(mu, e);
                if is_m_increasing(&z, 4) {
                    t.eq(mullineux_fast(mu, e).ok(), Some(star_mu.clone()), &format!("{b} fast Mullineux {mu}"));
                }
                if is_m_increasing(&z, 0) {
                    t.eq(z_label(&star_mu, e), star(&z, e), &format!("{b} z({mu}*)"));
                }
                if mu.size() > 24 {
                    continue;
                }
                match (llt.g(mu), llt.g(&star_mu)) {
                    (Ok(g), Ok(g_star)) => {
                        for lam in &members {
                            let lhs = g_star.pairing(&lam.conjugate());
                            let rhs = g.pairing(lam).bar().shift(w);
                            t.eq(lhs, rhs, &format!("{b} d({lam}',{mu}*)"));
                        }
                    }
                    (g, g_star) => t.fail(format!("{b} LLT columns {mu}: {:?} {:?}", g.err(), g_star.err())),
                }
            }
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn ac9() -> Tally {
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for b in core_block_set() {
        let e = b.e;
        let w = b.weight;
        let labels = BlockLabels::new(&b);
        let zero: Vec<&Partition> = labels.members.iter().filter(|l| is_m_increasing(&labels.z[*l], 0)).collect();
        t.eq(zero.len() as i64, binomial((e + w - 1) as i64, w as i64), &format!("{b} 0-increasing count"));
        t.eq(labels.zero_increasing.len(), zero.len(), &format!("{b} z injective on 0-increasing partitions"));
        let in_range = labels.zero_increasing.keys().all(|z| z.iter().all(|&x| (0..e as i64).contains(&x)));
        t.check(in_range, || format!("{b} labels lie in [0, e)"));
        for lam in zero {
            let mut ab = Abacus::of(lam, e);
            let z = z_of(&ab);
            let len = rng.gen_range(1..=8);
            for _ in 0..len {
                let a = rng.gen_range(0..e);
                match ab.weyl_s(a) {
                    Ok(next) => ab = next,
                    Err(err) => {
                        t.fail(format!("{b} s_{a} on {}: {err}", ab.partition()));
                        break;
                    }
                }
                t.eq(z_of(&ab), z.clone(), &format!("{b} z along a Weyl word from {lam}"));
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert!(run_suite("nope").is_none());
        let r = run_suite("AC-7").unwrap();
        assert_eq!(r.id, "AC-7");
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn rouquier_block_list() {
        let bs = rouquier_blocks();
        assert!(bs.iter().all(BlockId::is_rouquier));
        assert!(bs.iter().any(|b| b.e == 8 && b.weight == 3));
    }
}
