//! Bead movements, armlength labels `z`, their lifts `ẑ`, and the modified basis vectors.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::abacus::{Abacus, BlockId};
use crate::error::{Error, Result};
use crate::partition::{Partition, RimHook};

/// A point of `Z^w`; for partitions this is the vector of armlengths.
pub type ZLabel = Vec<i64>;

/// One step `(b;q)` of sliding the bead first positioned at `b`, starting at `q` and ending at `q - e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BeadMovement {
    pub b: i64,
    pub q: i64,
    /// 1-based rank in the total order on movements.
    pub index: usize,
}

/// The movements `A(lambda)` ordered by start position, then by bead.
pub fn movements_of(ab: &Abacus) -> Vec<BeadMovement> {
    let e = ab.e() as i64;
    let mut out: Vec<(i64, i64)> = Vec::new();
    for b in ab.window() {
        for i in 0..ab.wt(b) as i64 {
            out.push((b - i * e, b));
        }
    }
    out.sort_unstable();
    out.into_iter()
        .enumerate()
        .map(|(n, (q, b))| BeadMovement { b, q, index: n + 1 })
        .collect()
}

pub fn movements(lambda: &Partition, e: usize) -> Vec<BeadMovement> {
    movements_of(&Abacus::of(lambda, e))
}

/// `z_S(x) = |(x - e, x] \ S|`.
pub fn z_at(ab: &Abacus, x: i64) -> i64 {
    let e = ab.e() as i64;
    ((x - e + 1)..=x).filter(|&y| !ab.contains(y)).count() as i64
}

pub fn z_of(ab: &Abacus) -> ZLabel {
    movements_of(ab).iter().map(|m| z_at(ab, m.q)).collect()
}

pub fn z_label(lambda: &Partition, e: usize) -> ZLabel {
    z_of(&Abacus::of(lambda, e))
}

/// The rimhooks of size divisible by `e`, indexed like the bead movements: the movement `(b;q)`
/// with `(b - q)/e = i` corresponds to sliding `b` into the `(i+1)`-th gap above it on its runner.
pub fn hooks_e(lambda: &Partition, e: usize) -> Vec<RimHook> {
    let ab = Abacus::of(lambda, e);
    let ei = e as i64;
    movements_of(&ab)
        .iter()
        .map(|m| {
            let gap = ab.gaps_above(m.b)[((m.b - m.q) / ei) as usize];
            let mu = ab.moved(m.b, gap).partition();
            RimHook::between(lambda, &mu).expect("bead slides remove rimhooks")
        })
        .collect()
}

/// `z_{i+1} - z_i >= m` for every consecutive pair.
pub fn is_m_increasing(z: &[i64], m: i64) -> bool {
    z.windows(2).all(|p| p[1] - p[0] >= m)
}

/// Every quotient component is a hook `(x, 1^y)`.
pub fn is_hook_quotient(lambda: &Partition, e: usize) -> bool {
    Abacus::of(lambda, e).quotient().iter().all(|p| p.part(1) <= 1)
}

/// Generic in the sense of the tiling figures: 10-increasing with last entry at most `e - 2`.
pub fn is_generic(z: &[i64], e: usize) -> bool {
    is_m_increasing(z, 10) && z.last().is_none_or(|&l| l <= e as i64 - 2)
}

/// A vector of the lattice `Z^w ⊕ ⊕_{i<j} Z e_ij`, with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HatLabel {
    pub diag: Vec<i64>,
    pub upper: BTreeMap<(usize, usize), i64>,
}

impl HatLabel {
    pub fn zero(w: usize) -> HatLabel {
        HatLabel { diag: vec![0; w], upper: BTreeMap::new() }
    }

    pub fn unit(w: usize, i: usize) -> HatLabel {
        let mut h = HatLabel::zero(w);
        h.diag[i] = 1;
        h
    }

    /// `sign * e_ij` with `i < j`.
    pub fn pair(w: usize, i: usize, j: usize, sign: i64) -> HatLabel {
        let mut h = HatLabel::zero(w);
        h.upper.insert((i, j), sign);
        h
    }

    fn add_upper(&mut self, key: (usize, usize), v: i64) {
        let entry = self.upper.entry(key).or_insert(0);
        *entry += v;
        if *entry == 0 {
            self.upper.remove(&key);
        }
    }

    pub fn add(&self, other: &HatLabel) -> HatLabel {
        let mut out = self.clone();
        for (a, b) in out.diag.iter_mut().zip(&other.diag) {
            *a += b;
        }
        for (&k, &v) in &other.upper {
            out.add_upper(k, v);
        }
        out
    }

    pub fn sub(&self, other: &HatLabel) -> HatLabel {
        let mut out = self.clone();
        for (a, b) in out.diag.iter_mut().zip(&other.diag) {
            *a -= b;
        }
        for (&k, &v) in &other.upper {
            out.add_upper(k, -v);
        }
        out
    }

    /// The box norm: sum of absolute coefficients.
    pub fn norm(&self) -> i64 {
        self.diag.iter().map(|c| c.abs()).sum::<i64>() + self.upper.values().map(|c| c.abs()).sum::<i64>()
    }

    /// The projection `p(e_i) = e_i`, `p(e_ij) = e_i - e_j`.
    pub fn project(&self) -> ZLabel {
        let mut z = self.diag.clone();
        for (&(i, j), &v) in &self.upper {
            z[i] += v;
            z[j] -= v;
        }
        z
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "diag": self.diag,
            "upper": self.upper.iter().map(|(&(i, j), &v)| serde_json::json!([i + 1, j + 1, v])).collect::<Vec<_>>(),
        })
    }
}

/// `ẑ(lambda) = z + sum_{i<j} kappa_ij (-e_i + e_j + e_ij)`.
pub fn hat_z_of(ab: &Abacus) -> HatLabel {
    let e = ab.e() as i64;
    let mv = movements_of(ab);
    let mut h = HatLabel { diag: z_of(ab), upper: BTreeMap::new() };
    for i in 0..mv.len() {
        for j in i + 1..mv.len() {
            let (a, b) = (mv[i], mv[j]);
            let kappa = a.q > b.q - e || (a.q == b.q - e && a.b == b.b);
            if kappa {
                h.diag[i] -= 1;
                h.diag[j] += 1;
                h.add_upper((i, j), 1);
            }
        }
    }
    h
}

pub fn hat_z(lambda: &Partition, e: usize) -> HatLabel {
    hat_z_of(&Abacus::of(lambda, e))
}

/// The modified basis vector `ε_i` is `e_i - e_partner` or, when `partner` is `None`, `e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModifiedVector {
    pub i: usize,
    pub partner: Option<usize>,
}

impl ModifiedVector {
    pub fn plain(&self, w: usize) -> ZLabel {
        let mut v = vec![0; w];
        v[self.i] += 1;
        if let Some(j) = self.partner {
            v[j] -= 1;
        }
        v
    }

    pub fn lifted(&self, w: usize) -> HatLabel {
        match self.partner {
            None => HatLabel::unit(w, self.i),
            Some(j) if self.i < j => HatLabel::pair(w, self.i, j, 1),
            Some(j) => HatLabel::pair(w, j, self.i, -1),
        }
    }
}

/// The `lambda`-modified basis `ε_1..ε_w` and its lift, with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedBasis {
    pub w: usize,
    pub vectors: Vec<ModifiedVector>,
    /// For each movement, the index of the final movement of the bottom bead on its runner.
    pub pivot: Vec<usize>,
}

impl ModifiedBasis {
    pub fn plain(&self) -> Vec<ZLabel> {
        self.vectors.iter().map(|v| v.plain(self.w)).collect()
    }

    pub fn lifted(&self) -> Vec<HatLabel> {
        self.vectors.iter().map(|v| v.lifted(self.w)).collect()
    }

    /// `ε_Γ = sum_{i in Γ} ε_i` for a 0-based index set.
    pub fn eps_sum(&self, gamma: &[usize]) -> ZLabel {
        let mut out = vec![0; self.w];
        for &g in gamma {
            for (o, x) in out.iter_mut().zip(self.vectors[g].plain(self.w)) {
                *o += x;
            }
        }
        out
    }

    pub fn hat_eps_sum(&self, gamma: &[usize]) -> HatLabel {
        gamma.iter().fold(HatLabel::zero(self.w), |acc, &g| acc.add(&self.vectors[g].lifted(self.w)))
    }

    /// The partial order `i ⪰ j` (0-based): same runner, on the same side of the pivot movement.
    pub fn succ_geq(&self, runner: &[usize], i: usize, j: usize) -> bool {
        if runner[i] != runner[j] {
            return false;
        }
        let m = self.pivot[i];
        (i >= j && j >= m) || (i <= j && j <= m)
    }
}

pub fn modified_basis_of(ab: &Abacus) -> Result<ModifiedBasis> {
    if !ab.quotient().iter().all(|p| p.part(1) <= 1) {
        return Err(Error::Domain(format!("{} is not a hook-quotient partition", ab.partition())));
    }
    let e = ab.e();
    let mv = movements_of(ab);
    let w = mv.len();
    let mut vectors = vec![ModifiedVector { i: 0, partner: None }; w];
    let mut pivot = vec![0; w];
    for j in 0..e {
        let idx: Vec<usize> = (0..w).filter(|&i| mv[i].q.rem_euclid(e as i64) as usize == j).collect();
        let Some(&last) = idx.last() else { continue };
        let l = idx.iter().position(|&i| mv[i].b == mv[last].b).unwrap();
        for (gamma, &i) in idx.iter().enumerate() {
            let partner = match gamma.cmp(&l) {
                std::cmp::Ordering::Less => Some(idx[gamma + 1]),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(idx[gamma - 1]),
            };
            vectors[i] = ModifiedVector { i, partner };
            pivot[i] = idx[l];
        }
    }
    Ok(ModifiedBasis { w, vectors, pivot })
}

pub fn modified_basis(lambda: &Partition, e: usize) -> Result<ModifiedBasis> {
    modified_basis_of(&Abacus::of(lambda, e))
}

/// Runner of each movement, in movement order.
pub fn movement_runners(lambda: &Partition, e: usize) -> Vec<usize> {
    movements(lambda, e).iter().map(|m| m.q.rem_euclid(e as i64) as usize).collect()
}

/// `i ⪰_lambda j` for 1-based movement indices.
pub fn succ_geq(lambda: &Partition, e: usize, i: usize, j: usize) -> Result<bool> {
    let basis = modified_basis(lambda, e)?;
    if i == 0 || j == 0 || i > basis.w || j > basis.w {
        return Err(Error::Domain(format!("movement index out of range 1..={}", basis.w)));
    }
    Ok(basis.succ_geq(&movement_runners(lambda, e), i - 1, j - 1))
}

/// All labels of one partition, computed once.
#[derive(Clone, Debug)]
pub struct Labelled {
    pub lambda: Partition,
    pub abacus: Abacus,
    pub movements: Vec<BeadMovement>,
    pub z: ZLabel,
    pub hook_quotient: bool,
}

impl Labelled {
    pub fn new(lambda: &Partition, e: usize) -> Labelled {
        let abacus = Abacus::of(lambda, e);
        let movements = movements_of(&abacus);
        let z = movements.iter().map(|m| z_at(&abacus, m.q)).collect();
        let hook_quotient = abacus.quotient().iter().all(|p| p.part(1) <= 1);
        Labelled { lambda: lambda.clone(), abacus, movements, z, hook_quotient }
    }

    pub fn basis(&self) -> Result<ModifiedBasis> {
        modified_basis_of(&self.abacus)
    }

    pub fn hat_z(&self) -> HatLabel {
        hat_z_of(&self.abacus)
    }

    pub fn runners(&self) -> Vec<usize> {
        let e = self.abacus.e() as i64;
        self.movements.iter().map(|m| m.q.rem_euclid(e) as usize).collect()
    }
}

/// A block together with the z-labels of its members.
#[derive(Clone, Debug)]
pub struct BlockLabels {
    pub block: BlockId,
    pub members: Vec<Partition>,
    pub z: HashMap<Partition, ZLabel>,
    pub zero_increasing: HashMap<ZLabel, Partition>,
}

impl BlockLabels {
    pub fn new(block: &BlockId) -> BlockLabels {
        let members = block.enumerate();
        let mut z = HashMap::new();
        let mut zero_increasing = HashMap::new();
        for lam in &members {
            let label = z_label(lam, block.e);
            if is_m_increasing(&label, 0) {
                zero_increasing.insert(label.clone(), lam.clone());
            }
            z.insert(lam.clone(), label);
        }
        BlockLabels { block: block.clone(), members, z, zero_increasing }
    }

    /// The 0-increasing partition of the block with the given label.
    pub fn z_inverse(&self, target: &[i64]) -> Result<Option<Partition>> {
        check_zero_increasing(target, self.block.e)?;
        Ok(self.zero_increasing.get(target).cloned())
    }
}

fn check_zero_increasing(target: &[i64], e: usize) -> Result<()> {
    if !is_m_increasing(target, 0) || target.iter().any(|&t| t < 0 || t > e as i64 - 1) {
        return Err(Error::Domain(format!("{target:?} is not a 0-increasing label with entries in [0, {})", e)));
    }
    Ok(())
}

/// The unique 0-increasing partition in `b` with label `target`.
pub fn z_inverse(b: &BlockId, target: &[i64]) -> Result<Option<Partition>> {
    check_zero_increasing(target, b.e)?;
    if target.len() != b.weight {
        return Ok(None);
    }
    Ok(b.enumerate().into_iter().find(|lam| z_label(lam, b.e) == target))
}

/// The involution `(z_1..z_w) -> (e - z_w, .., e - z_1)`.
pub fn star(z: &[i64], e: usize) -> ZLabel {
    z.iter().rev().map(|&x| e as i64 - x).collect()
}
