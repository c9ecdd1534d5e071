//! Parallelotopes `Π(λ)`, hypercubes `C(λ)`, the closed formula for q-decomposition numbers, and
//! the discrete tilings they form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::json;

use crate::abacus::BlockId;
use crate::error::{Error, Result};
use crate::labels::{hat_z, is_generic, is_m_increasing, modified_basis, z_label, HatLabel, ModifiedBasis, ZLabel};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// Coefficients `c` with `d = sum_i c_i ε_i`; exact because the modified basis is unimodular.
pub fn basis_coefficients(basis: &ModifiedBasis, d: &[i64]) -> Vec<i64> {
    let w = basis.w;
    let mut children = vec![Vec::new(); w];
    for v in &basis.vectors {
        if let Some(p) = v.partner {
            children[p].push(v.i);
        }
    }
    fn solve(t: usize, d: &[i64], children: &[Vec<usize>], c: &mut [Option<i64>]) -> i64 {
        if let Some(v) = c[t] {
            return v;
        }
        let v = d[t] + children[t].iter().map(|&i| solve(i, d, children, c)).sum::<i64>();
        c[t] = Some(v);
        v
    }
    let mut c = vec![None; w];
    (0..w).map(|t| solve(t, d, &children, &mut c)).collect()
}

/// The 0-based support `Γ` of `target - anchor` in the basis, when every coefficient is 0 or 1.
pub fn gamma_of(basis: &ModifiedBasis, anchor: &[i64], target: &[i64]) -> Option<Vec<usize>> {
    if anchor.len() != target.len() {
        return None;
    }
    let d: Vec<i64> = target.iter().zip(anchor).map(|(t, a)| t - a).collect();
    let c = basis_coefficients(basis, &d);
    c.iter().all(|&x| x == 0 || x == 1).then(|| (0..basis.w).filter(|&i| c[i] == 1).collect())
}

/// `Π(λ)`: the anchor `z(λ)` together with the λ-modified basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parallelotope {
    pub owner: Partition,
    pub anchor: ZLabel,
    pub basis: ModifiedBasis,
}

impl Parallelotope {
    pub fn of(lambda: &Partition, e: usize) -> Result<Parallelotope> {
        Ok(Parallelotope { owner: lambda.clone(), anchor: z_label(lambda, e), basis: modified_basis(lambda, e)? })
    }

    pub fn vertex(&self, gamma: &[usize]) -> ZLabel {
        self.anchor.iter().zip(self.basis.eps_sum(gamma)).map(|(a, b)| a + b).collect()
    }

    /// All `2^w` vertices, indexed by the bitmask of `Γ`.
    pub fn vertices(&self) -> Vec<ZLabel> {
        (0u64..1 << self.basis.w).map(|mask| self.vertex(&mask_to_set(mask, self.basis.w))).collect()
    }

    pub fn gamma(&self, target: &[i64]) -> Option<Vec<usize>> {
        gamma_of(&self.basis, &self.anchor, target)
    }

    pub fn generators(&self) -> Vec<ZLabel> {
        self.basis.plain()
    }
}

/// `C(λ)`: the anchor `ẑ(λ)` with the lifted basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypercube {
    pub owner: Partition,
    pub anchor: HatLabel,
    pub basis: ModifiedBasis,
}

impl Hypercube {
    pub fn of(lambda: &Partition, e: usize) -> Result<Hypercube> {
        Ok(Hypercube { owner: lambda.clone(), anchor: hat_z(lambda, e), basis: modified_basis(lambda, e)? })
    }

    pub fn vertex(&self, gamma: &[usize]) -> HatLabel {
        self.anchor.add(&self.basis.hat_eps_sum(gamma))
    }

    pub fn vertices(&self) -> Vec<HatLabel> {
        (0u64..1 << self.basis.w).map(|mask| self.vertex(&mask_to_set(mask, self.basis.w))).collect()
    }

    /// `Γ` with `target = ẑ(λ) + ε̂_Γ`; the lifted generators sit on distinct coordinates.
    pub fn gamma(&self, target: &HatLabel) -> Option<Vec<usize>> {
        let d = target.sub(&self.anchor);
        let w = self.basis.w;
        let mut gamma = Vec::new();
        let mut used_diag = vec![false; w];
        let mut used_upper = BTreeSet::new();
        for (g, v) in self.basis.lifted().iter().enumerate() {
            let (coord, sign) = match v.upper.iter().next() {
                Some((&k, &s)) => {
                    used_upper.insert(k);
                    (d.upper.get(&k).copied().unwrap_or(0), s)
                }
                None => {
                    let i = v.diag.iter().position(|&x| x != 0).expect("nonzero generator");
                    used_diag[i] = true;
                    (d.diag[i], v.diag[i])
                }
            };
            if coord == sign {
                gamma.push(g);
            } else if coord != 0 {
                return None;
            }
        }
        let stray_diag = d.diag.iter().zip(&used_diag).any(|(&x, &u)| x != 0 && !u);
        let stray_upper = d.upper.iter().any(|(k, &x)| x != 0 && !used_upper.contains(k));
        (!stray_diag && !stray_upper).then_some(gamma)
    }
}

fn mask_to_set(mask: u64, w: usize) -> Vec<usize> {
    (0..w).filter(|&i| mask >> i & 1 == 1).collect()
}

/// `Γ` (1-based) with `target = z(λ) + ε_Γ`, or `None` when `target ∉ Π(λ)`.
pub fn pi_membership(lambda: &Partition, target: &[i64], e: usize) -> Result<Option<Vec<usize>>> {
    let p = Parallelotope::of(lambda, e)?;
    Ok(p.gamma(target).map(|g| g.into_iter().map(|i| i + 1).collect()))
}

/// The closed-formula value together with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedValue {
    pub value: LaurentPoly,
    /// 1-based support `Γ` when `z(μ) ∈ Π(λ)`.
    pub gamma: Option<Vec<usize>>,
    /// Whether `μ` is 4-increasing, the hypothesis under which the formula is a theorem.
    pub hypothesis: bool,
}

/// `q^{𝔡_λ(μ)}` when `λ` is hook-quotient and `z(μ) ∈ Π(λ)`, and `0` otherwise.
pub fn d_closed(lambda: &Partition, mu: &Partition, e: usize) -> ClosedValue {
    let zmu = z_label(mu, e);
    let hypothesis = is_m_increasing(&zmu, 4);
    let zero = ClosedValue { value: LaurentPoly::zero(), gamma: None, hypothesis };
    if BlockId::of(lambda, e) != BlockId::of(mu, e) {
        return zero;
    }
    let Ok(p) = Parallelotope::of(lambda, e) else { return zero };
    match p.gamma(&zmu) {
        Some(g) => ClosedValue {
            value: LaurentPoly::q_pow(g.len() as i32),
            gamma: Some(g.into_iter().map(|i| i + 1).collect()),
            hypothesis,
        },
        None => zero,
    }
}

/// `q^{‖ẑ(μ) − ẑ(λ)‖}` when `ẑ(μ) ∈ C(λ)`, and `0` otherwise.
pub fn d_cube(lambda: &Partition, mu: &Partition, e: usize) -> LaurentPoly {
    if BlockId::of(lambda, e) != BlockId::of(mu, e) {
        return LaurentPoly::zero();
    }
    let Ok(c) = Hypercube::of(lambda, e) else { return LaurentPoly::zero() };
    let target = hat_z(mu, e);
    match c.gamma(&target) {
        Some(g) => {
            debug_assert_eq!(target.sub(&c.anchor).norm(), g.len() as i64);
            LaurentPoly::q_pow(g.len() as i32)
        }
        None => LaurentPoly::zero(),
    }
}

/// The column `{λ: d_closed(λ, μ)}` over the block of `μ`.
pub fn closed_column(mu: &Partition, e: usize) -> BTreeMap<Partition, LaurentPoly> {
    BlockId::of(mu, e)
        .enumerate()
        .into_iter()
        .filter_map(|lam| {
            let v = d_closed(&lam, mu, e).value;
            (!v.is_zero()).then_some((lam, v))
        })
        .collect()
}

/// One tile: the parallelotope and hypercube of a hook-quotient partition.
#[derive(Clone, Debug)]
pub struct Cell {
    pub para: Parallelotope,
    pub cube: Hypercube,
}

impl Cell {
    pub fn owner(&self) -> &Partition {
        &self.para.owner
    }

    pub fn is_generic(&self, e: usize) -> bool {
        is_generic(&self.para.anchor, e)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "owner": self.para.owner,
            "anchor": self.para.anchor,
            "generators": self.para.generators(),
            "hat_anchor": self.cube.anchor.to_json(),
        })
    }
}

/// The cells of all hook-quotient partitions of a block.
#[derive(Clone, Debug)]
pub struct Tiling {
    pub block: BlockId,
    pub m: i64,
    pub cells: Vec<Cell>,
}

pub fn build_tiling(b: &BlockId, m: i64) -> Tiling {
    let e = b.e;
    let cells = b
        .enumerate()
        .par_iter()
        .filter_map(|lam| {
            let para = Parallelotope::of(lam, e).ok()?;
            let cube = Hypercube::of(lam, e).ok()?;
            Some(Cell { para, cube })
        })
        .collect();
    Tiling { block: b.clone(), m, cells }
}

impl Tiling {
    pub fn generic_cells(&self) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.is_generic(self.block.e)).collect()
    }

    /// Generic cells grouped by their generator vectors, i.e. up to translation.
    pub fn translation_classes(&self) -> BTreeMap<Vec<ZLabel>, Vec<Partition>> {
        let mut out: BTreeMap<Vec<ZLabel>, Vec<Partition>> = BTreeMap::new();
        for c in self.generic_cells() {
            let mut gens = c.para.generators();
            gens.sort();
            out.entry(gens).or_default().push(c.owner().clone());
        }
        out
    }

    /// The `m`-increasing points of `[0, e]^w`.
    pub fn target_region(&self) -> BTreeSet<ZLabel> {
        increasing_box(self.block.e as i64, self.block.weight, self.m)
    }

    fn truncated_vertices(&self, cell: &Cell) -> Vec<(ZLabel, HatLabel)> {
        cell.para
            .vertices()
            .into_iter()
            .zip(cell.cube.vertices())
            .filter(|(z, _)| is_m_increasing(z, self.m))
            .collect()
    }

    /// The union of the truncated cells equals the `m`-increasing points of `[0, e]^w`.
    pub fn check_coverage(&self) -> bool {
        let covered: BTreeSet<ZLabel> =
            self.cells.iter().flat_map(|c| self.truncated_vertices(c).into_iter().map(|(z, _)| z)).collect();
        covered == self.target_region()
    }

    /// The projection from truncated hypercube vertices to labels is injective.
    pub fn check_injectivity(&self) -> bool {
        let mut seen: HashMap<ZLabel, HatLabel> = HashMap::new();
        for c in &self.cells {
            for (z, h) in self.truncated_vertices(c) {
                if let Some(prev) = seen.insert(z, h.clone()) {
                    if prev != h {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every pair of truncated cells meets in the truncation of a common face.
    pub fn check_intersections(&self) -> bool {
        let truncated: Vec<BTreeSet<ZLabel>> = self
            .cells
            .iter()
            .map(|c| self.truncated_vertices(c).into_iter().map(|(z, _)| z).collect())
            .collect();
        (0..self.cells.len()).into_par_iter().all(|i| {
            (i + 1..self.cells.len()).all(|j| {
                let common: BTreeSet<ZLabel> = truncated[i].intersection(&truncated[j]).cloned().collect();
                if common.is_empty() {
                    return true;
                }
                let a = faces_cutting_to(&self.cells[i].para, &common, self.m);
                let b = faces_cutting_to(&self.cells[j].para, &common, self.m);
                a.intersection(&b).next().is_some()
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "e": self.block.e,
            "core": self.block.core,
            "weight": self.block.weight,
            "cells": self.cells.iter().map(Cell::to_json).collect::<Vec<_>>(),
        })
    }

    /// One polygon per generic weight-2 cell.
    pub fn to_svg(&self) -> Result<String> {
        if self.block.weight != 2 {
            return Err(Error::Domain(format!("SVG export needs weight 2, got {}", self.block.weight)));
        }
        let e = self.block.e as f64;
        let scale = 24.0;
        let size = (e + 2.0) * scale;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        let point = |z: &ZLabel| ((z[0] as f64 + 1.0) * scale, size - (z[1] as f64 + 1.0) * scale);
        for c in self.generic_cells() {
            let order = [vec![], vec![0], vec![0, 1], vec![1]];
            let pts: Vec<String> = order
                .iter()
                .map(|g| {
                    let (x, y) = point(&c.para.vertex(g));
                    format!("{x},{y}")
                })
                .collect();
            let _ = writeln!(
                s,
                r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1"><title>{}</title></polygon>"#,
                pts.join(" "),
                c.owner()
            );
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}

/// The faces of `p` (as vertex sets) whose `m`-increasing part is exactly `common`.
fn faces_cutting_to(p: &Parallelotope, common: &BTreeSet<ZLabel>, m: i64) -> BTreeSet<BTreeSet<ZLabel>> {
    let w = p.basis.w;
    let gammas: Vec<Vec<usize>> = common.iter().map(|z| p.gamma(z).expect("common points lie in the cell")).collect();
    let ones: Vec<usize> = (0..w).filter(|i| gammas.iter().all(|g| g.contains(i))).collect();
    let zeros: Vec<usize> = (0..w).filter(|i| gammas.iter().all(|g| !g.contains(i))).collect();
    let mut out = BTreeSet::new();
    for m1 in 0u64..1 << ones.len() {
        let g1: Vec<usize> = mask_to_set(m1, ones.len()).into_iter().map(|k| ones[k]).collect();
        for m0 in 0u64..1 << zeros.len() {
            let g0: Vec<usize> = mask_to_set(m0, zeros.len()).into_iter().map(|k| zeros[k]).collect();
            let free: Vec<usize> = (0..w).filter(|i| !g0.contains(i) && !g1.contains(i)).collect();
            let face: BTreeSet<ZLabel> = (0u64..1 << free.len())
                .map(|mf| {
                    let mut g = g1.clone();
                    g.extend(mask_to_set(mf, free.len()).into_iter().map(|k| free[k]));
                    p.vertex(&g)
                })
                .collect();
            let cut: BTreeSet<ZLabel> = face.iter().filter(|z| is_m_increasing(z, m)).cloned().collect();
            if &cut == common {
                out.insert(face);
            }
        }
    }
    out
}

/// The `m`-increasing points of `[0, e]^w`.
pub fn increasing_box(e: i64, w: usize, m: i64) -> BTreeSet<ZLabel> {
    fn rec(e: i64, w: usize, m: i64, cur: &mut ZLabel, out: &mut BTreeSet<ZLabel>) {
        if cur.len() == w {
            out.insert(cur.clone());
            return;
        }
        let lo = cur.last().map_or(0, |&x| x + m).max(0);
        for x in lo..=e {
            cur.push(x);
            rec(e, w, m, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(e, w, m, &mut Vec::new(), &mut out);
    out
}

/// Unordered pairs of 4-increasing partitions of the block at box distance 1.
pub fn ext_adjacency(b: &BlockId) -> Vec<(Partition, Partition)> {
    let e = b.e;
    let good: Vec<(Partition, HatLabel)> = b
        .enumerate()
        .into_iter()
        .filter(|l| is_m_increasing(&z_label(l, e), 4))
        .map(|l| {
            let h = hat_z(&l, e);
            (l, h)
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..good.len() {
        for j in i + 1..good.len() {
            if good[i].1.sub(&good[j].1).norm() == 1 {
                out.push((good[i].0.clone(), good[j].0.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::is_core;
    use crate::partition::part;

    #[test]
    fn membership_examples() {
        let lam = part("16,8,1^13");
        assert_eq!(pi_membership(&lam, &[1, 5, 9], 10).unwrap(), Some(vec![1, 3]));
        assert_eq!(pi_membership(&lam, &z_label(&lam, 10), 10).unwrap(), Some(vec![]));
        assert_eq!(pi_membership(&part("3,2"), &[2, 0], 2).unwrap(), Some(vec![1]));
        let verts: BTreeSet<ZLabel> = Parallelotope::of(&part("3,2"), 2).unwrap().vertices().into_iter().collect();
        assert_eq!(verts, [vec![1, 1], vec![1, 2], vec![2, 0], vec![2, 1]].into_iter().collect());
        assert!(pi_membership(&part("7,4,4,1,1,1"), &[0, 0, 0, 0], 4).is_err());
    }

    #[test]
    fn closed_examples() {
        let q2 = LaurentPoly::q_pow(2);
        let v = d_closed(&part("16,8,1^13"), &part("17,7,2^4,1^5"), 10);
        assert_eq!(v.value, q2);
        assert!(v.hypothesis);
        assert_eq!(d_cube(&part("16,8,1^13"), &part("17,7,2^4,1^5"), 10), q2);
        let lam = part("16,8,1^13");
        assert_eq!(d_closed(&lam, &lam, 10).value, LaurentPoly::one());
        let v = d_closed(&part("3,2"), &part("5"), 2);
        assert!(!v.hypothesis);
        assert_eq!(v.value, q2);
        assert!(d_closed(&part("3"), &part("2,1"), 2).value.is_zero());
    }

    fn blocks(e: usize, w: usize, max_core: usize) -> Vec<BlockId> {
        (0..=max_core)
            .flat_map(Partition::all_of_size)
            .filter(|c| is_core(c, e))
            .map(|c| BlockId::new(e, c, w).unwrap())
            .collect()
    }

    #[test]
    fn parallelotopes_versus_cubes() {
        for e in 9..=12 {
            for w in 2..=3 {
                for b in blocks(e, w, 3) {
                    let members = b.enumerate();
                    let good: Vec<&Partition> = members.iter().filter(|m| is_m_increasing(&z_label(m, e), 4)).collect();
                    for lam in &members {
                        let Ok(p) = Parallelotope::of(lam, e) else { continue };
                        let c = Hypercube::of(lam, e).unwrap();
                        let verts: BTreeSet<ZLabel> = p.vertices().into_iter().collect();
                        assert_eq!(verts.len(), 1 << w);
                        for mu in &good {
                            let a = d_closed(lam, mu, e).value;
                            assert_eq!(a, d_cube(lam, mu, e), "{lam} {mu}");
                            if let Some(g) = p.gamma(&z_label(mu, e)) {
                                assert_eq!(hat_z(mu, e), c.vertex(&g));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_by_three() {
        for e in 5..=9 {
            for b in blocks(e, 3, 3) {
                let members = b.enumerate();
                for lam in &members {
                    let Ok(p) = Parallelotope::of(lam, e) else { continue };
                    for mu in &members {
                        let zm = z_label(mu, e);
                        if p.gamma(&zm).is_none() {
                            continue;
                        }
                        for m in 3..=6 {
                            if is_m_increasing(&p.anchor, m) {
                                assert!(is_m_increasing(&zm, m - 3));
                            }
                            if is_m_increasing(&zm, m) {
                                assert!(is_m_increasing(&p.anchor, m - 3));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_tilings() {
        for (e, w) in [(4, 2), (5, 2), (6, 2), (5, 3), (9, 2), (10, 3)] {
            for b in blocks(e, w, 4) {
                let t = build_tiling(&b, 4);
                assert!(t.check_coverage(), "{b}");
                assert!(t.check_injectivity(), "{b}");
                assert!(t.check_intersections(), "{b}");
            }
        }
    }

    #[test]
    fn generic_counts() {
        let t = build_tiling(&BlockId::new(17, part("5,3,1"), 2).unwrap(), 4);
        assert_eq!(t.generic_cells().len(), 21);
        assert!(t.to_svg().unwrap().matches("<polygon").count() == 21);
        let t = build_tiling(&BlockId::new(25, part("15,1^14"), 3).unwrap(), 4);
        assert_eq!(t.generic_cells().len(), 20);
        assert_eq!(t.translation_classes().len(), 7);
        assert!(t.to_svg().is_err());
    }

    #[test]
    fn empty_weight() {
        let t = build_tiling(&BlockId::new(3, part("2"), 0).unwrap(), 4);
        assert_eq!(t.cells.len(), 1);
        assert!(t.generic_cells().len() <= 1);
        assert!(t.cells[0].para.basis.w == 0);
        assert!(ext_adjacency(&BlockId::new(3, part("2"), 0).unwrap()).is_empty());
    }

    #[test]
    fn adjacency_is_one_step() {
        for e in 9..=11 {
            for b in blocks(e, 2, 3) {
                for (l, m) in ext_adjacency(&b) {
                    let zl = z_label(&l, e);
                    let zm = z_label(&m, e);
                    let forward = Parallelotope::of(&l, e).unwrap().gamma(&zm).is_some_and(|g| g.len() == 1);
                    let back = Parallelotope::of(&m, e).unwrap().gamma(&zl).is_some_and(|g| g.len() == 1);
                    assert!(forward ^ back, "{l} {m}");
                }
            }
        }
        let b = BlockId::of(&part("16,8,1^13"), 10);
        let pairs = ext_adjacency(&b);
        assert!(!pairs.iter().any(|(x, y)| {
            let s = [x, y];
            s.contains(&&part("16,8,1^13")) && s.contains(&&part("17,7,2^4,1^5"))
        }));
    }
}
