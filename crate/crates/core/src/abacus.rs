//! James's abacus: beta-sets, cores, quotients, crystal operators, the affine Weyl group action
//! on partitions, runner addition, and Scopes chains between blocks.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The infinite beta-set of a partition with a fixed runner count `e`.
///
/// Every position below `base` is occupied, `base` itself is unoccupied, and `occ[k]` records
/// whether `base + k` is occupied; positions at or beyond `top()` are empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    e: usize,
    base: i64,
    occ: Vec<bool>,
}

impl Abacus {
    /// The beta-set `{lambda_i - i : i >= 1}` of `lambda`.
    pub fn of(lambda: &Partition, e: usize) -> Abacus {
        let n = lambda.len() as i64;
        let beads = (0..lambda.len()).map(|i| lambda.part(i) as i64 - i as i64 - 1);
        Abacus::from_beads(e, -n, beads)
    }

    /// The set consisting of every position below `floor` together with `beads`.
    pub fn from_beads(e: usize, floor: i64, beads: impl IntoIterator<Item = i64>) -> Abacus {
        let extra: BTreeSet<i64> = beads.into_iter().filter(|&b| b >= floor).collect();
        let mut base = floor;
        while extra.contains(&base) {
            base += 1;
        }
        let top = extra.iter().next_back().map_or(base, |&m| (m + 1).max(base));
        let occ = (base..top).map(|x| extra.contains(&x)).collect();
        Abacus { e, base, occ }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Smallest unoccupied position.
    pub fn base(&self) -> i64 {
        self.base
    }

    /// One past the largest occupied position (or `base` if none lies above it).
    pub fn top(&self) -> i64 {
        self.base + self.occ.len() as i64
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < self.base {
            true
        } else if x >= self.top() {
            false
        } else {
            self.occ[(x - self.base) as usize]
        }
    }

    pub fn runner(&self, x: i64) -> usize {
        x.rem_euclid(self.e as i64) as usize
    }

    /// Occupied positions at or above `base`, in decreasing order.
    pub fn window(&self) -> Vec<i64> {
        (self.base..self.top()).rev().filter(|&x| self.contains(x)).collect()
    }

    /// Largest occupied position.
    pub fn max_bead(&self) -> i64 {
        self.window().first().copied().unwrap_or(self.base - 1)
    }

    /// The occupied positions as a set, with the fully occupied region below `floor` left implicit.
    pub fn beads_from(&self, floor: i64) -> Vec<i64> {
        let lo = floor.min(self.base);
        (lo..self.top()).filter(|&x| self.contains(x)).collect()
    }

    /// A copy with position `x` set to `value`, renormalized.
    pub fn with(&self, x: i64, value: bool) -> Abacus {
        let floor = self.base.min(x) - 1;
        let mut beads: BTreeSet<i64> = self.beads_from(floor).into_iter().collect();
        if value {
            beads.insert(x);
        } else {
            beads.remove(&x);
        }
        Abacus::from_beads(self.e, floor, beads)
    }

    /// A copy with the bead at `from` moved to the empty position `to`.
    pub fn moved(&self, from: i64, to: i64) -> Abacus {
        debug_assert!(self.contains(from) && !self.contains(to));
        self.with(from, false).with(to, true)
    }

    /// A copy with all listed beads removed and all listed positions filled.
    pub fn replaced(&self, remove: &[i64], add: &[i64]) -> Abacus {
        let lo = remove.iter().chain(add).copied().min().unwrap_or(self.base).min(self.base) - 1;
        let mut beads: BTreeSet<i64> = self.beads_from(lo).into_iter().collect();
        for x in remove {
            beads.remove(x);
        }
        for &x in add {
            beads.insert(x);
        }
        Abacus::from_beads(self.e, lo, beads)
    }

    /// The translate `{x + s}` of the beta-set.
    pub fn shifted(&self, s: i64) -> Abacus {
        Abacus { e: self.e, base: self.base + s, occ: self.occ.clone() }
    }

    /// The same beta-set displayed on a different number of runners.
    pub fn with_runners(&self, e: usize) -> Abacus {
        Abacus { e, base: self.base, occ: self.occ.clone() }
    }

    /// Reads the partition off the beta-set: each bead contributes the number of gaps below it.
    pub fn partition(&self) -> Partition {
        let mut parts = Vec::new();
        let mut gaps_below = 0u32;
        for x in self.base..self.top() {
            if self.contains(x) {
                parts.push(gaps_below);
            } else {
                gaps_below += 1;
            }
        }
        parts.reverse();
        Partition::from_unsorted(parts)
    }

    /// `#{beads >= 0} - #{gaps < 0}`; zero for the beta-set of a partition.
    pub fn charge(&self) -> i64 {
        let mut c = 0;
        for x in self.base.min(0)..self.top().max(0) {
            if x >= 0 && self.contains(x) {
                c += 1;
            } else if x < 0 && !self.contains(x) {
                c -= 1;
            }
        }
        c
    }

    /// Number of unoccupied positions above `b` on its runner.
    pub fn wt(&self, b: i64) -> usize {
        let e = self.e as i64;
        let mut x = b - e;
        let mut n = 0;
        while x >= self.base {
            if !self.contains(x) {
                n += 1;
            }
            x -= e;
        }
        n
    }

    /// Unoccupied positions above `b` on its runner, nearest first.
    pub fn gaps_above(&self, b: i64) -> Vec<i64> {
        let e = self.e as i64;
        let mut out = Vec::new();
        let mut x = b - e;
        while x >= self.base {
            if !self.contains(x) {
                out.push(x);
            }
            x -= e;
        }
        out
    }

    /// The e-weight `sum_b wt(b)`.
    pub fn weight(&self) -> usize {
        self.window().iter().map(|&b| self.wt(b)).sum()
    }

    /// A multiple of `e` at or below `base`.
    fn aligned_floor(&self) -> i64 {
        let e = self.e as i64;
        self.base.div_euclid(e) * e
    }

    /// Runner levels: the number of beads on runner `r` at positions `>= r`, which may be negative.
    pub fn levels(&self) -> Vec<i64> {
        let e = self.e as i64;
        let floor = self.aligned_floor();
        let mut counts = vec![floor / e; self.e];
        for x in floor..self.top() {
            if self.contains(x) {
                counts[self.runner(x)] += 1;
            }
        }
        counts
    }

    /// The beta-set with every bead slid as far up its runner as possible.
    pub fn core(&self) -> Abacus {
        from_levels(&self.levels())
    }

    /// The partition read off runner `r`.
    pub fn runner_partition(&self, r: usize) -> Partition {
        let e = self.e as i64;
        let floor = self.aligned_floor();
        let beads: Vec<i64> = (floor..self.top())
            .filter(|&x| self.runner(x) == r && self.contains(x))
            .collect();
        let parts = beads
            .iter()
            .enumerate()
            .map(|(k, &p)| ((p - floor - r as i64) / e - k as i64) as u32)
            .collect();
        Partition::from_unsorted(parts)
    }

    pub fn quotient(&self) -> Vec<Partition> {
        (0..self.e).map(|r| self.runner_partition(r)).collect()
    }

    /// Removable beads on runner `a`: positions `x = a mod e` occupied with `x - 1` empty.
    pub fn removable(&self, a: usize) -> Vec<i64> {
        (self.base..=self.top())
            .filter(|&x| self.runner(x) == a && self.contains(x) && !self.contains(x - 1))
            .collect()
    }

    /// Addable beads on runner `a`: positions `x = a mod e` occupied with `x + 1` empty.
    pub fn addable(&self, a: usize) -> Vec<i64> {
        (self.base - 1..self.top())
            .filter(|&x| self.runner(x) == a && self.contains(x) && !self.contains(x + 1))
            .collect()
    }

    /// Normal removable beads on runner `i`, in increasing position order.
    pub fn normal_beads(&self, i: usize) -> Vec<i64> {
        let e = self.e as i64;
        let start = self.base - e;
        let start = start - (start - i as i64).rem_euclid(e);
        let end = self.top() + e;
        let mut positions = Vec::new();
        let mut x = start;
        while x <= end {
            positions.push(x);
            x += e;
        }
        let val = |t: i64| -> i64 {
            let here = self.contains(t);
            let prev = self.contains(t - 1);
            match (here, prev) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            }
        };
        let mut prefix = Vec::with_capacity(positions.len());
        let mut acc = 0;
        for &t in &positions {
            acc += val(t);
            prefix.push(acc);
        }
        let mut suffix_min = vec![i64::MAX; positions.len() + 1];
        for k in (0..positions.len()).rev() {
            suffix_min[k] = suffix_min[k + 1].min(prefix[k]);
        }
        positions
            .iter()
            .enumerate()
            .filter(|&(k, &t)| val(t) == 1 && suffix_min[k + 1] >= prefix[k])
            .map(|(_, &t)| t)
            .collect()
    }

    /// Kashiwara's operator: move the top normal bead on runner `i` one step back.
    pub fn crystal_e(&self, i: usize) -> Option<Abacus> {
        let x = *self.normal_beads(i).first()?;
        Some(self.moved(x, x - 1))
    }

    /// The partial inverse of [`Abacus::crystal_e`].
    pub fn crystal_f(&self, i: usize) -> Option<Abacus> {
        let prev = (i + self.e - 1) % self.e;
        self.addable(prev)
            .into_iter()
            .map(|c| self.moved(c, c + 1))
            .find(|mu| mu.crystal_e(i).as_ref() == Some(self))
    }

    /// `epsilon_i`: the number of normal beads on runner `i`.
    pub fn epsilon(&self, i: usize) -> usize {
        self.normal_beads(i).len()
    }

    /// The simple reflection `s_i` of the crystal Weyl group action.
    pub fn weyl_s(&self, i: usize) -> Result<Abacus> {
        let core = self.core();
        let prev = (i + self.e - 1) % self.e;
        let k_rem = core.removable(i).len();
        let k_add = core.addable(prev).len();
        let mut cur = self.clone();
        if k_rem > 0 {
            for _ in 0..k_rem {
                cur = cur
                    .crystal_e(i)
                    .ok_or_else(|| Error::Construction(format!("s_{i}: too few normal beads")))?;
            }
        } else {
            for _ in 0..k_add {
                cur = cur
                    .crystal_f(i)
                    .ok_or_else(|| Error::Construction(format!("s_{i}: no conormal bead")))?;
            }
        }
        Ok(cur)
    }
}

impl fmt::Display for Abacus {
    /// Rows of `e` positions from `floor(base)` to `top`, with occupied positions drawn as `●`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.e as i64;
        let mut x = self.aligned_floor() - e;
        while x < self.top() + e {
            let row: String = (x..x + e).map(|p| if self.contains(p) { '●' } else { '·' }).collect();
            writeln!(f, "{row}")?;
            x += e;
        }
        Ok(())
    }
}

/// The core beta-set with the given runner levels.
pub fn from_levels(levels: &[i64]) -> Abacus {
    let e = levels.len();
    let ei = e as i64;
    let lowest = levels.iter().copied().min().unwrap_or(0);
    let floor = (lowest - 1) * ei;
    let beads = levels.iter().enumerate().flat_map(|(r, &l)| {
        let start = lowest - 1;
        (start..l).map(move |k| k * ei + r as i64)
    });
    Abacus::from_beads(e, floor, beads)
}

/// The abacus of `lambda` and its core, quotient and weight.
pub fn core_quotient_weight(lambda: &Partition, e: usize) -> (Partition, Vec<Partition>, usize) {
    let ab = Abacus::of(lambda, e);
    (ab.core().partition(), ab.quotient(), ab.weight())
}

pub fn core_of(lambda: &Partition, e: usize) -> Partition {
    Abacus::of(lambda, e).core().partition()
}

pub fn weight_of(lambda: &Partition, e: usize) -> usize {
    Abacus::of(lambda, e).weight()
}

pub fn is_core(lambda: &Partition, e: usize) -> bool {
    weight_of(lambda, e) == 0
}

/// A block: the partitions with a given e-core and e-weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId {
    pub e: usize,
    pub core: Partition,
    pub weight: usize,
}

impl BlockId {
    pub fn new(e: usize, core: Partition, weight: usize) -> Result<BlockId> {
        if e < 2 {
            return Err(Error::Domain(format!("e must be at least 2, got {e}")));
        }
        if !is_core(&core, e) {
            return Err(Error::Domain(format!("{core} is not a {e}-core")));
        }
        Ok(BlockId { e, core, weight })
    }

    /// The block containing `lambda`.
    pub fn of(lambda: &Partition, e: usize) -> BlockId {
        let (core, _, weight) = core_quotient_weight(lambda, e);
        BlockId { e, core, weight }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.size() == self.core.size() + self.e * self.weight && BlockId::of(lambda, self.e) == *self
    }

    pub fn levels(&self) -> Vec<i64> {
        Abacus::of(&self.core, self.e).levels()
    }

    /// The partition in this block with the given quotient.
    pub fn from_quotient(&self, quotient: &[Partition]) -> Partition {
        let e = self.e as i64;
        let levels = self.levels();
        let deepest = quotient.iter().map(|p| p.len() as i64).max().unwrap_or(0);
        let lowest = levels.iter().copied().min().unwrap_or(0) - deepest - 1;
        let mut beads = Vec::new();
        for (r, &l) in levels.iter().enumerate() {
            let q = &quotient[r];
            for k in 0..(l - lowest) {
                let row = l - 1 - k + q.part(k as usize) as i64;
                beads.push(row * e + r as i64);
            }
        }
        Abacus::from_beads(self.e, lowest * e, beads).partition()
    }

    /// All partitions in the block, ordered lexicographically.
    pub fn enumerate(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = multipartitions(self.e, self.weight)
            .iter()
            .map(|q| self.from_quotient(q))
            .collect();
        out.sort();
        out
    }

    /// The block `s_a(B)`.
    pub fn weyl_s(&self, a: usize) -> BlockId {
        let levels = reflect_levels(&self.levels(), a);
        BlockId { e: self.e, core: from_levels(&levels).partition(), weight: self.weight }
    }

    /// The runner translation under which the block satisfies the Rouquier gap condition, if any.
    pub fn rouquier_shift(&self) -> Option<usize> {
        rouquier_shift(&self.levels(), self.weight)
    }

    pub fn is_rouquier(&self) -> bool {
        self.rouquier_shift().is_some()
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} core={} w={}", self.e, self.core, self.weight)
    }
}

/// All `e`-tuples of partitions of total size `w`.
pub fn multipartitions(e: usize, w: usize) -> Vec<Vec<Partition>> {
    fn rec(e: usize, rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur.len() + 1 == e {
            for p in Partition::all_of_size(rest) {
                cur.push(p);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for n in 0..=rest {
            for p in Partition::all_of_size(n) {
                cur.push(p);
                rec(e, rest - n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(e, w, &mut Vec::new(), &mut out);
    out
}

/// Removable beads on runner `a` of the core with the given levels.
pub fn core_removable(levels: &[i64], a: usize) -> i64 {
    let e = levels.len();
    let gap = if a == 0 { levels[0] - levels[e - 1] - 1 } else { levels[a] - levels[a - 1] };
    gap.max(0)
}

/// Addable beads on runner `a - 1` of the core with the given levels.
pub fn core_addable(levels: &[i64], a: usize) -> i64 {
    let e = levels.len();
    let gap = if a == 0 { levels[e - 1] + 1 - levels[0] } else { levels[a - 1] - levels[a] };
    gap.max(0)
}

/// Levels of `s_a` applied to a core.
pub fn reflect_levels(levels: &[i64], a: usize) -> Vec<i64> {
    let e = levels.len();
    let mut out = levels.to_vec();
    if a == 0 {
        out[0] = levels[e - 1] + 1;
        out[e - 1] = levels[0] - 1;
    } else {
        out.swap(a - 1, a);
    }
    out
}

/// Levels after translating the beta-set by `s` positions.
pub fn rotate_levels(levels: &[i64], s: usize) -> Vec<i64> {
    let mut cur = levels.to_vec();
    let e = levels.len();
    for _ in 0..s {
        let last = cur[e - 1];
        cur.rotate_right(1);
        cur[0] = last + 1;
    }
    cur
}

fn gap_deficit(levels: &[i64], w: usize) -> i64 {
    let need = (w as i64 - 1).max(0);
    levels.windows(2).map(|p| (need - (p[1] - p[0])).max(0)).sum()
}

/// The smallest translation `s` after which every runner gap is at least `w - 1`.
pub fn rouquier_shift(levels: &[i64], w: usize) -> Option<usize> {
    (0..levels.len()).find(|&s| gap_deficit(&rotate_levels(levels, s), w) == 0)
}

/// Window of the minimal-length affine permutation whose action carries the empty core to the
/// core with the given levels.
fn core_window(levels: &[i64]) -> Vec<i64> {
    let e = levels.len() as i64;
    let mut win: Vec<i64> = levels.iter().enumerate().map(|(a, &l)| e * l + a as i64).collect();
    win.sort_unstable();
    win
}

fn perm_apply(win: &[i64], x: i64) -> i64 {
    let e = win.len() as i64;
    let i = x.rem_euclid(e);
    win[i as usize] + (x - i)
}

fn perm_inverse(win: &[i64]) -> Vec<i64> {
    let e = win.len() as i64;
    let mut inv = vec![0; win.len()];
    for (i, &v) in win.iter().enumerate() {
        let r = v.rem_euclid(e);
        inv[r as usize] = i as i64 - (v - r);
    }
    inv
}

fn perm_compose(a: &[i64], b: &[i64]) -> Vec<i64> {
    (0..b.len() as i64).map(|i| perm_apply(a, perm_apply(b, i))).collect()
}

/// Coxeter length of an affine permutation given by its window.
fn perm_length(win: &[i64]) -> i64 {
    let e = win.len() as i64;
    let mut total = 0;
    for i in 0..win.len() {
        for j in i + 1..win.len() {
            total += (win[j] - win[i]).div_euclid(e).abs();
        }
    }
    total
}

/// The generator `s_a` acting on integers: it exchanges the residue classes `a - 1` and `a`.
fn simple_reflection(e: usize, a: usize) -> Vec<i64> {
    let mut win: Vec<i64> = (0..e as i64).collect();
    if a == 0 {
        win[0] = -1;
        win[e - 1] = e as i64;
    } else {
        win.swap(a - 1, a);
    }
    win
}

fn unrotate_levels(levels: &[i64], s: usize) -> Vec<i64> {
    let mut cur = levels.to_vec();
    for _ in 0..s {
        let first = cur[0];
        cur.rotate_left(1);
        let n = cur.len();
        cur[n - 1] = first - 1;
    }
    cur
}

/// Rouquier cores of charge zero whose runner gaps, in some translated labelling, all lie in `{g, g + 1}`.
fn rouquier_candidates(e: usize, g: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0..(1u64 << (e - 1)) {
        let mut pref = vec![0i64];
        for a in 0..e - 1 {
            let gap = g + ((mask >> a) & 1) as i64;
            pref.push(pref[a] + gap);
        }
        for s in 0..e {
            let total: i64 = pref.iter().sum::<i64>() - s as i64;
            if total.rem_euclid(e as i64) != 0 {
                continue;
            }
            let m0 = -total / e as i64;
            let rotated: Vec<i64> = pref.iter().map(|p| m0 + p).collect();
            out.push(unrotate_levels(&rotated, s));
        }
    }
    out
}

/// One step `B_{i+1} = s_a(B_i)` of a Scopes chain; the core of `B_i` has `k` removable beads on runner `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScopesStep {
    pub a: usize,
    pub k: usize,
}

/// A chain of Scopes pairs from a Rouquier block of the same weight to `b`, listed from the
/// Rouquier end; replaying it forward lands on `b`.
///
/// Cores are identified with minimal coset representatives of the affine symmetric group. A
/// Rouquier core `R` admits a descending chain to the core `T` of `b` exactly when `T` lies below
/// `R` in the left weak order, that is when `l(R T^{-1}) = l(R) - l(T)`; the chain is then read
/// off from a reduced word of `R T^{-1}`. Candidate Rouquier cores are scanned by increasing gap
/// size and the shortest admissible one is used.
pub fn scopes_chain(b: &BlockId) -> Vec<ScopesStep> {
    let e = b.e;
    let target = b.levels();
    if rouquier_shift(&target, b.weight).is_some() {
        return Vec::new();
    }
    let t_win = core_window(&target);
    let t_len = perm_length(&t_win);
    let t_inv = perm_inverse(&t_win);
    let mut g = (b.weight as i64 - 1).max(0);
    let (start, mut v) = loop {
        let best = rouquier_candidates(e, g)
            .into_iter()
            .filter_map(|r| {
                let r_win = core_window(&r);
                let r_len = perm_length(&r_win);
                let v = perm_compose(&r_win, &t_inv);
                (perm_length(&v) == r_len - t_len).then_some((r_len, r, v))
            })
            .min();
        if let Some((_, r, v)) = best {
            break (r, v);
        }
        g += 1;
    };
    let mut levels = start;
    let mut chain = Vec::new();
    let mut len = perm_length(&v);
    while len > 0 {
        let (a, shorter) = (0..e)
            .map(|a| (a, perm_compose(&simple_reflection(e, a), &v)))
            .find(|(_, w)| perm_length(w) < len)
            .expect("a nontrivial affine permutation has a left descent");
        chain.push(ScopesStep { a, k: core_removable(&levels, a) as usize });
        levels = reflect_levels(&levels, a);
        v = shorter;
        len -= 1;
    }
    debug_assert_eq!(levels, target);
    chain
}

/// The Rouquier block at the start of a chain ending at `b`.
pub fn chain_start(b: &BlockId, chain: &[ScopesStep]) -> BlockId {
    let mut levels = b.levels();
    for step in chain.iter().rev() {
        levels = reflect_levels(&levels, step.a);
    }
    BlockId { e: b.e, core: from_levels(&levels).partition(), weight: b.weight }
}

/// Replays a chain from its start, checking each multiplicity; returns the blocks visited.
pub fn replay_chain(start: &BlockId, chain: &[ScopesStep]) -> Result<Vec<BlockId>> {
    let mut blocks = vec![start.clone()];
    let mut levels = start.levels();
    for step in chain {
        let k = core_removable(&levels, step.a);
        if k != step.k as i64 || k == 0 {
            return Err(Error::Construction(format!("chain step {step:?} has {k} removable beads")));
        }
        levels = reflect_levels(&levels, step.a);
        blocks.push(BlockId { e: start.e, core: from_levels(&levels).partition(), weight: start.weight });
    }
    Ok(blocks)
}

/// The partition `lambda+` obtained by adding a full runner, displayed on `e + 1` runners.
pub fn add_full_runner(lambda: &Partition, e: usize) -> Partition {
    let ab = Abacus::of(lambda, e);
    let n = lambda.size() as i64;
    let ei = e as i64;
    let e1 = ei + 1;
    let lo_row = ab.base().div_euclid(ei) - n - 1;
    let hi_row = n * ei;
    let mut beads = Vec::new();
    for r in lo_row..hi_row {
        for s in 0..=ei {
            let occupied = if s == ei { r < n * ei } else { ab.contains((r + n) * ei + s) };
            if occupied {
                beads.push(r * e1 + s);
            }
        }
    }
    Abacus::from_beads(e + 1, lo_row * e1, beads).partition()
}
