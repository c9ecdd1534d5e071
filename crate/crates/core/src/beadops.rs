//! Bead operations `B_x` and `B_x^{k,l}`, moves along modified basis vectors, the partitions
//! `λ_H`, and the Mullineux involution by the crystal recursion and by bead moves.

use serde::Serialize;
use serde_json::json;

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::labels::{
    hooks_e, is_hook_quotient, is_m_increasing, modified_basis, movement_runners, movements, star, z_label,
    ZLabel,
};
use crate::partition::{Partition, RimHook};

/// `b_S(x) = min{a > x : a ∉ S, a - e ∈ S}`.
pub fn bead_target(s: &Abacus, x: i64) -> Result<i64> {
    let e = s.e() as i64;
    if x - e >= s.max_bead() {
        return Err(Error::Domain(format!("b_S({x}) is undefined: {} >= max(S) = {}", x - e, s.max_bead())));
    }
    let mut a = x + 1;
    while s.contains(a) || !s.contains(a - e) {
        a += 1;
    }
    Ok(a)
}

/// `B_x(S) = S ∪ {b_S(x)} ∖ {b_S(x) - e}`, together with the landing position `b_S(x)`.
pub fn bead_op(s: &Abacus, x: i64) -> Result<(Abacus, i64)> {
    let a = bead_target(s, x)?;
    Ok((s.moved(a - s.e() as i64, a), a))
}

/// `B_x^{k,l}` and the landing positions `d_1, .., d_{k+l}` in the order the operations are applied.
pub fn bead_op_kl_traced(s: &Abacus, x: i64, k: usize, l: usize) -> Result<(Abacus, Vec<i64>)> {
    if k == 0 {
        return Err(Error::Domain("B_x^{k,l} needs k >= 1".into()));
    }
    let e = s.e() as i64;
    let points = (0..k as i64).map(|i| x - i * e).chain((1..=l as i64).map(|j| x + j * e));
    let mut cur = s.clone();
    let mut landings = Vec::with_capacity(k + l);
    for y in points {
        let (next, d) = bead_op(&cur, y)?;
        cur = next;
        landings.push(d);
    }
    Ok((cur, landings))
}

pub fn bead_op_kl(s: &Abacus, x: i64, k: usize, l: usize) -> Result<Abacus> {
    Ok(bead_op_kl_traced(s, x, k, l)?.0)
}

/// The intermediate data of a single move along `ε_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveOneTrace {
    pub r: usize,
    pub b: i64,
    pub q: i64,
    pub g: i64,
    pub sigma: Partition,
    pub k: usize,
    pub l: usize,
    pub landings: Vec<i64>,
    pub result: Partition,
}

/// The partition `μ` with `z(μ) = z(λ) + ε_r^λ`, for a 1-based movement index `r`.
pub fn move_one(lambda: &Partition, r: usize, e: usize) -> Result<Partition> {
    Ok(move_one_traced(lambda, r, e)?.result)
}

pub fn move_one_traced(lambda: &Partition, r: usize, e: usize) -> Result<MoveOneTrace> {
    bead_move(lambda, r, e, true)
}

fn bead_move(lambda: &Partition, r: usize, e: usize, zero_increasing: bool) -> Result<MoveOneTrace> {
    let basis = modified_basis(lambda, e)?;
    if r == 0 || r > basis.w {
        return Err(Error::Domain(format!("movement index {r} out of range 1..={}", basis.w)));
    }
    let z = z_label(lambda, e);
    let target: ZLabel = z.iter().zip(basis.vectors[r - 1].plain(basis.w)).map(|(a, b)| a + b).collect();
    if zero_increasing && !is_m_increasing(&target, 0) || target.first().is_some_and(|&t| t < 0) {
        return Err(Error::Domain(format!("z({lambda}) + ε_{r} = {target:?} is not a 0-increasing label")));
    }
    let ab = Abacus::of(lambda, e);
    let ei = e as i64;
    let m = movements(lambda, e)[r - 1];
    let mut g = m.q - ei;
    while ab.contains(g) {
        g -= ei;
    }
    let sigma = ab.moved(m.b, g);
    let k = ((m.q - g) / ei) as usize;
    let l = ((m.b - m.q) / ei) as usize;
    let (mu_ab, landings) = bead_op_kl_traced(&sigma, m.q, k, l)?;
    let mu = mu_ab.partition();
    let got = z_label(&mu, e);
    if got != target {
        return Err(Error::Construction(format!(
            "moving {lambda} along ε_{r} gave {mu} with z = {got:?}, expected {target:?}"
        )));
    }
    Ok(MoveOneTrace { r, b: m.b, q: m.q, g, sigma: sigma.partition(), k, l, landings, result: mu })
}

/// One step of [`move_along_traced`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub r: usize,
    pub partition: Partition,
    pub z: ZLabel,
}

impl TraceStep {
    pub fn to_json(&self) -> serde_json::Value {
        json!({"step": self.step, "r": self.r, "partition": self.partition.parts(), "z": self.z})
    }
}

pub fn trace_json(trace: &[TraceStep]) -> serde_json::Value {
    serde_json::Value::Array(trace.iter().map(TraceStep::to_json).collect())
}

/// Moves along `ε_r` for the 1-based indices of `order`, in that order.
pub fn move_along_ordered(lambda: &Partition, order: &[usize], e: usize) -> Result<(Partition, Vec<TraceStep>)> {
    let mut cur = lambda.clone();
    let mut trace = Vec::with_capacity(order.len());
    for (step, &r) in order.iter().enumerate() {
        cur = move_one(&cur, r, e).map_err(|err| {
            Error::Construction(format!("step {} (r = {r}) from {cur} failed: {err}; trace {}", step + 1, trace_json(&trace)))
        })?;
        trace.push(TraceStep { step: step + 1, r, z: z_label(&cur, e), partition: cur.clone() });
    }
    Ok((cur, trace))
}

/// The indices of `remaining` that are maximal for `⪰_λ`, largest index first.
fn maximal_indices(lambda: &Partition, remaining: &[usize], e: usize) -> Result<Vec<usize>> {
    let basis = modified_basis(lambda, e)?;
    let runners = movement_runners(lambda, e);
    let mut out: Vec<usize> = remaining
        .iter()
        .copied()
        .filter(|&r| !remaining.iter().any(|&s| s != r && basis.succ_geq(&runners, s - 1, r - 1)))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// The partition `μ` with `z(μ) = z(λ) + ε_Γ^λ` for a set `Γ` of 1-based movement indices.
pub fn move_along(lambda: &Partition, gamma: &[usize], e: usize) -> Result<Partition> {
    Ok(move_along_traced(lambda, gamma, e)?.0)
}

/// [`move_along`] with the partitions passed through.
///
/// Each step moves along the `⪰`-maximal remaining index, taking the largest index among
/// incomparable maximal ones; if that route fails, the other maximal choices are tried.
pub fn move_along_traced(lambda: &Partition, gamma: &[usize], e: usize) -> Result<(Partition, Vec<TraceStep>)> {
    let basis = modified_basis(lambda, e)?;
    let mut set: Vec<usize> = gamma.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&r| r == 0 || r > basis.w) {
        return Err(Error::Domain(format!("movement indices {gamma:?} out of range 1..={}", basis.w)));
    }
    let z = z_label(lambda, e);
    let shift = basis.eps_sum(&set.iter().map(|r| r - 1).collect::<Vec<_>>());
    let target: ZLabel = z.iter().zip(&shift).map(|(a, b)| a + b).collect();
    let mut trace = Vec::new();
    let mu = search_routes(lambda, &set, e, &mut trace)?;
    if z_label(&mu, e) != target {
        return Err(Error::Construction(format!("moving {lambda} along {set:?} missed the label {target:?}")));
    }
    Ok((mu, trace))
}

/// Depth-first search over the orderings allowed at each step; `trace` holds the successful route.
fn search_routes(lambda: &Partition, remaining: &[usize], e: usize, trace: &mut Vec<TraceStep>) -> Result<Partition> {
    if remaining.is_empty() {
        return Ok(lambda.clone());
    }
    let depth = trace.len();
    let mut first_err = None;
    for r in maximal_indices(lambda, remaining, e)? {
        let attempt = move_one(lambda, r, e).and_then(|nu| {
            trace.push(TraceStep { step: depth + 1, r, z: z_label(&nu, e), partition: nu.clone() });
            let rest: Vec<usize> = remaining.iter().copied().filter(|&s| s != r).collect();
            search_routes(&nu, &rest, e, trace)
        });
        match attempt {
            Ok(mu) => return Ok(mu),
            Err(err) => {
                trace.truncate(depth);
                first_err.get_or_insert(Error::Construction(format!("from {lambda} via r = {r}: {err}")));
            }
        }
    }
    Err(first_err.expect("a nonempty set has a maximal element"))
}

/// `λ_H`: the move along the modified basis vector of the bead movement attached to `H`.
pub fn lambda_of_hook(lambda: &Partition, hook: &RimHook, e: usize) -> Result<Partition> {
    let r = hooks_e(lambda, e)
        .iter()
        .position(|h| h.cells == hook.cells)
        .ok_or_else(|| Error::Domain(format!("the hook at {:?} is not an e-divisible rimhook of {lambda}", hook.hand)))?;
    Ok(bead_move(lambda, r + 1, e, false)?.result)
}

/// The Mullineux image by the Kleshchev crystal recursion `F̃_i ↦ F̃_{-i}`.
pub fn mullineux_crystal(lambda: &Partition, e: usize) -> Result<Partition> {
    if !lambda.is_e_regular(e) {
        return Err(Error::Domain(format!("{lambda} is not {e}-regular")));
    }
    let mut cur = Abacus::of(lambda, e);
    let mut path = Vec::with_capacity(lambda.size());
    while !cur.partition().is_empty() {
        let i = (0..e)
            .find(|&i| cur.epsilon(i) > 0)
            .ok_or_else(|| Error::Construction(format!("{} has no good node", cur.partition())))?;
        cur = cur.crystal_e(i).expect("a normal bead exists");
        path.push(i);
    }
    let mut image = Abacus::of(&Partition::empty(), e);
    for &i in path.iter().rev() {
        let j = (e - i) % e;
        image = image
            .crystal_f(j)
            .ok_or_else(|| Error::Construction(format!("no good {j}-node to add to {}", image.partition())))?;
    }
    Ok(image.partition())
}

/// The Mullineux image by conjugating and moving along `ε_{[1,w]}`.
pub fn mullineux_fast(lambda: &Partition, e: usize) -> Result<Partition> {
    Ok(mullineux_fast_traced(lambda, e)?.0)
}

pub fn mullineux_fast_traced(lambda: &Partition, e: usize) -> Result<(Partition, Vec<TraceStep>)> {
    if !lambda.is_e_regular(e) {
        return Err(Error::Domain(format!("{lambda} is not {e}-regular")));
    }
    if !is_hook_quotient(lambda, e) {
        return Err(Error::Domain(format!("{lambda} is not a hook-quotient partition")));
    }
    let z = z_label(lambda, e);
    if !is_m_increasing(&z, 0) {
        return Err(Error::Domain(format!("{lambda} is not 0-increasing: z = {z:?}")));
    }
    let all: Vec<usize> = (1..=z.len()).collect();
    let (mu, trace) = move_along_traced(&lambda.conjugate(), &all, e)?;
    if z_label(&mu, e) != star(&z, e) {
        return Err(Error::Construction(format!("the image {mu} of {lambda} does not have label z*")));
    }
    Ok((mu, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::{is_core, BlockId};
    use crate::canonical::llt_g;
    use crate::labels::BlockLabels;
    use crate::partition::part;
    use crate::polytope::pi_membership;
    use proptest::prelude::*;

    fn small_blocks(es: std::ops::RangeInclusive<usize>, ws: std::ops::RangeInclusive<usize>, max_core: usize) -> Vec<BlockId> {
        let mut out = Vec::new();
        for e in es {
            for w in ws.clone() {
                for n in 0..=max_core {
                    for core in Partition::all_of_size(n).into_iter().filter(|c| is_core(c, e)) {
                        out.push(BlockId::new(e, core, w).unwrap());
                    }
                }
            }
        }
        out
    }

    #[test]
    fn bead_target_examples() {
        assert_eq!(bead_target(&Abacus::of(&part("1"), 2), -1).unwrap(), 2);
        assert_eq!(bead_target(&Abacus::of(&Partition::empty(), 2), -2).unwrap(), 0);
        assert!(bead_target(&Abacus::of(&Partition::empty(), 2), 1).is_err());
        assert!(bead_target(&Abacus::of(&part("3,1"), 3), 5).is_err());
    }

    #[test]
    fn bead_target_matches_scan() {
        for n in 0..=8 {
            for lam in Partition::all_of_size(n) {
                for e in 2..=4usize {
                    let s = Abacus::of(&lam, e);
                    let ei = e as i64;
                    for x in s.base() - 2 * ei..s.top() + 2 {
                        let scan = (x + 1..s.top() + ei).find(|&a| !s.contains(a) && s.contains(a - ei));
                        match bead_target(&s, x) {
                            Ok(a) => assert_eq!(Some(a), scan),
                            Err(_) => assert!(x - ei >= s.max_bead()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_operation_and_bead_count() {
        let s = Abacus::of(&part("4,2,2,1"), 3);
        for x in -6..4 {
            let single = bead_op(&s, x).unwrap().0;
            assert_eq!(bead_op_kl(&s, x, 1, 0).unwrap(), single);
            let many = bead_op_kl(&s, x, 2, 1).unwrap();
            assert_eq!(many.charge(), s.charge());
        }
        assert!(bead_op_kl(&s, 0, 0, 1).is_err());
    }

    #[test]
    fn moving_examples() {
        let lam = part("7,3,3,2,2,1");
        assert_eq!(z_label(&lam, 4), vec![1, 1, 2, 3]);
        let nu = move_one(&lam, 3, 4).unwrap();
        assert_eq!(nu, part("9,3,2,2,2"));
        let mu = move_one(&nu, 2, 4).unwrap();
        assert_eq!(mu, part("10,4,2,1,1"));
        let (got, trace) = move_along_traced(&lam, &[2, 3], 4).unwrap();
        assert_eq!(got, mu);
        assert_eq!(trace.len(), 2);
        assert_eq!(trace[0].partition, nu);
        assert_eq!(trace[0].r, 3);
        assert_eq!(trace_json(&trace)[1]["z"], json!([1, 2, 3, 3]));
        assert_eq!(move_along(&lam, &[], 4).unwrap(), lam);
    }

    #[test]
    fn wrong_order_fails() {
        let lam = part("7,3,3,2,2,1");
        let rho = move_one(&lam, 2, 4).unwrap();
        assert_eq!(rho, part("7,4,4,1,1,1"));
        assert!(!is_hook_quotient(&rho, 4));
        assert!(move_along_ordered(&lam, &[2, 3], 4).is_err());
        assert_eq!(move_along_ordered(&lam, &[3, 2], 4).unwrap().0, part("10,4,2,1,1"));
    }

    #[test]
    fn hook_examples() {
        let lam = part("5,5,4,2,2,2,1,1");
        let hooks = hooks_e(&lam, 4);
        let big = hooks.iter().find(|h| h.size == 12).unwrap();
        assert_eq!(lambda_of_hook(&lam, big, 4).unwrap(), part("6,5,5,2,2,2"));
        assert_eq!(lambda_of_hook(&lam, &hooks[4], 4).unwrap(), part("6,5,3,2,2,2,1,1"));
        let basis = modified_basis(&lam, 4).unwrap();
        for (r, h) in hooks.iter().enumerate() {
            if let Ok(mu) = lambda_of_hook(&lam, h, 4) {
                let diff: ZLabel = z_label(&mu, 4).iter().zip(z_label(&lam, 4)).map(|(a, b)| a - b).collect();
                assert_eq!(diff, basis.vectors[r].plain(basis.w));
            }
        }
        let foreign = RimHook::generated_by(&part("3"), 1, 1).unwrap();
        assert!(lambda_of_hook(&lam, &foreign, 4).is_err());
    }

    /// Checks every single move on a block and returns how many moves were made.
    fn check_single_moves(b: &BlockId) -> usize {
        let e = b.e;
        let ei = e as i64;
        let labels = BlockLabels::new(b);
        let mut count = 0;
        for lam in b.enumerate().into_iter().filter(|l| is_hook_quotient(l, e)) {
            let basis = modified_basis(&lam, e).unwrap();
            let runners = movement_runners(&lam, e);
            let z = z_label(&lam, e);
            let before = movements(&lam, e);
            for r in 1..=basis.w {
                let target: ZLabel = z.iter().zip(basis.vectors[r - 1].plain(basis.w)).map(|(a, b)| a + b).collect();
                if !is_m_increasing(&target, 0) {
                    continue;
                }
                let Ok(Some(expect)) = labels.z_inverse(&target) else { continue };
                let tr = move_one_traced(&lam, r, e).unwrap();
                assert_eq!(tr.result, expect, "{lam} r={r}");
                count += 1;
                let d = &tr.landings;
                for i in 1..tr.k {
                    assert!(d[i] <= d[i - 1] - ei, "{lam} r={r} {d:?}");
                }
                if tr.l > 0 {
                    assert!(d[tr.k] <= d[0] + ei, "{lam} r={r} {d:?}");
                }
                let after = movements(&tr.result, e);
                for t in 1..=basis.w {
                    if !basis.succ_geq(&runners, t - 1, r - 1) {
                        assert_eq!(before[t - 1].q, after[t - 1].q, "{lam} r={r} t={t}");
                    }
                }
            }
        }
        count
    }

    #[test]
    fn single_moves_reach_the_label() {
        let blocks = small_blocks(5..=10, 1..=3, 3);
        let total: usize = blocks.iter().map(check_single_moves).sum();
        assert!(total > 1000, "{total}");
    }

    #[test]
    fn moves_reach_four_increasing_labels() {
        for b in small_blocks(9..=10, 2..=3, 3) {
            let e = b.e;
            let labels = BlockLabels::new(&b);
            let members = b.enumerate();
            let targets: Vec<&Partition> = members.iter().filter(|m| is_m_increasing(&z_label(m, e), 4)).collect();
            for lam in members.iter().filter(|l| is_hook_quotient(l, e)) {
                for mu in &targets {
                    if let Some(gamma) = pi_membership(lam, &z_label(mu, e), e).unwrap() {
                        assert_eq!(&move_along(lam, &gamma, e).unwrap(), *mu, "{lam} {gamma:?}");
                        assert_eq!(labels.z_inverse(&z_label(mu, e)).unwrap().as_ref(), Some(*mu));
                    }
                }
            }
        }
    }

    #[test]
    fn no_removable_bead_after_moves_on_two_runners() {
        let mut checked = 0;
        for b in small_blocks(5..=8, 2..=3, 3) {
            let e = b.e;
            for lam in b.enumerate().into_iter().filter(|l| is_m_increasing(&z_label(l, e), 1)) {
                let ab = Abacus::of(&lam, e);
                let runners = movement_runners(&lam, e);
                for a in 0..e {
                    if !ab.removable(a).is_empty() {
                        continue;
                    }
                    let prev = (a + e - 1) % e;
                    let gamma: Vec<usize> = (1..=runners.len()).filter(|&s| runners[s - 1] == a || runners[s - 1] == prev).collect();
                    let basis = modified_basis(&lam, e).unwrap();
                    let target: ZLabel = z_label(&lam, e)
                        .iter()
                        .zip(basis.eps_sum(&gamma.iter().map(|s| s - 1).collect::<Vec<_>>()))
                        .map(|(x, y)| x + y)
                        .collect();
                    if !is_m_increasing(&target, 4) {
                        continue;
                    }
                    if let Ok(mu) = move_along(&lam, &gamma, e) {
                        assert!(Abacus::of(&mu, e).removable(a).is_empty(), "{lam} a={a} -> {mu}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn conjugate_parallelotopes() {
        for b in small_blocks(5..=7, 1..=3, 4) {
            let e = b.e;
            for lam in b.enumerate().into_iter().filter(|l| is_hook_quotient(l, e)) {
                let conj = lam.conjugate();
                assert!(is_hook_quotient(&conj, e));
                let bl = modified_basis(&lam, e).unwrap();
                let bc = modified_basis(&conj, e).unwrap();
                let w = bl.w;
                let (zl, zc) = (z_label(&lam, e), z_label(&conj, e));
                for mask in 0u32..(1 << w) {
                    let gamma: Vec<usize> = (0..w).filter(|i| mask >> i & 1 == 1).collect();
                    let dual: Vec<usize> = (0..w).filter(|i| !gamma.contains(&(w - 1 - i))).collect();
                    let lhs: ZLabel = zc.iter().zip(bc.eps_sum(&dual)).map(|(a, b)| a + b).collect();
                    let rhs: ZLabel = zl.iter().zip(bl.eps_sum(&gamma)).map(|(a, b)| a + b).collect();
                    assert_eq!(lhs, star(&rhs, e), "{lam} {gamma:?}");
                }
            }
        }
    }

    #[test]
    fn mullineux_small_cases() {
        assert_eq!(mullineux_crystal(&Partition::empty(), 3).unwrap(), Partition::empty());
        assert!(mullineux_crystal(&part("1,1"), 2).is_err());
        for n in 0..=10 {
            for lam in Partition::all_of_size(n).into_iter().filter(|l| l.is_e_regular(2)) {
                assert_eq!(mullineux_crystal(&lam, 2).unwrap(), lam);
            }
        }
        for e in 3..=5 {
            for n in 0..=10 {
                for lam in Partition::all_of_size(n).into_iter().filter(|l| l.is_e_regular(e)) {
                    let star_lam = mullineux_crystal(&lam, e).unwrap();
                    assert!(star_lam.is_e_regular(e));
                    assert_eq!(star_lam.size(), lam.size());
                    assert_eq!(crate::abacus::core_of(&star_lam, e), crate::abacus::core_of(&lam, e).conjugate());
                    assert_eq!(mullineux_crystal(&star_lam, e).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn mullineux_in_rouquier_blocks() {
        let mut seen = 0;
        for e in 3..=5 {
            for w in 1..=3usize {
                let g = (w as i64 - 1).max(1);
                let levels: Vec<i64> = (0..e as i64).map(|i| i * g).collect();
                let core = crate::abacus::from_levels(&levels).partition();
                let b = BlockId::new(e, core.clone(), w).unwrap();
                let bc = BlockId::new(e, core.conjugate(), w).unwrap();
                let (s, sc) = (b.rouquier_shift().unwrap() as i64, bc.rouquier_shift().unwrap() as i64);
                for lam in b.enumerate() {
                    let q = Abacus::of(&lam, e).shifted(s).quotient();
                    let columns = q[0].is_empty() && q.iter().all(|p| p.part(0) <= 1);
                    if !columns || !lam.is_e_regular(e) {
                        continue;
                    }
                    let image = mullineux_crystal(&lam, e).unwrap();
                    let qi = Abacus::of(&image, e).shifted(sc).quotient();
                    let mut expect = vec![Partition::empty()];
                    expect.extend(q[1..].iter().rev().cloned());
                    assert_eq!(qi, expect, "{lam}");
                    seen += 1;
                }
            }
        }
        assert!(seen > 20);
    }

    /// Compares the two Mullineux algorithms on the 4-increasing e-regular members of a block.
    pub(crate) fn check_mullineux_block(b: &BlockId) -> usize {
        let e = b.e;
        let mut n = 0;
        for lam in b.enumerate() {
            if !lam.is_e_regular(e) || !is_m_increasing(&z_label(&lam, e), 4) {
                continue;
            }
            let fast = mullineux_fast(&lam, e).unwrap();
            assert_eq!(fast, mullineux_crystal(&lam, e).unwrap(), "{lam}");
            assert_eq!(z_label(&fast, e), star(&z_label(&lam, e), e));
            n += 1;
        }
        n
    }

    #[test]
    fn mullineux_algorithms_agree() {
        let blocks = small_blocks(4..=6, 2..=3, 6);
        let n: usize = blocks.iter().map(check_mullineux_block).sum();
        let wide: usize = small_blocks(9..=12, 1..=3, 2).iter().map(check_mullineux_block).sum();
        assert!(n > 0 && wide > 100, "{n} {wide}");
    }

    #[test]
    fn mullineux_fast_on_zero_increasing() {
        let mut ok = 0;
        for b in small_blocks(4..=6, 2..=3, 4) {
            let e = b.e;
            for lam in b.enumerate() {
                if !lam.is_e_regular(e) || !is_hook_quotient(&lam, e) || !is_m_increasing(&z_label(&lam, e), 0) {
                    continue;
                }
                if let Ok(fast) = mullineux_fast(&lam, e) {
                    assert_eq!(fast, mullineux_crystal(&lam, e).unwrap(), "{lam}");
                    ok += 1;
                }
            }
        }
        assert!(ok > 0);
        assert!(mullineux_fast(&part("2,2"), 2).is_err());
    }

    #[test]
    fn distances_to_conjugates_sum_to_weight() {
        for b in small_blocks(5..=6, 2..=3, 3) {
            let e = b.e;
            let w = b.weight;
            let members = b.enumerate();
            for mu in members.iter().filter(|m| m.is_e_regular(e) && is_m_increasing(&z_label(m, e), 0)) {
                let mu_star = mullineux_crystal(mu, e).unwrap();
                for lam in members.iter().filter(|l| is_hook_quotient(l, e)) {
                    let here = pi_membership(lam, &z_label(mu, e), e).unwrap();
                    let there = pi_membership(&lam.conjugate(), &z_label(&mu_star, e), e).unwrap();
                    assert_eq!(here.is_some(), there.is_some(), "{lam} {mu}");
                    if let (Some(g), Some(h)) = (here, there) {
                        assert_eq!(g.len() + h.len(), w);
                    }
                }
            }
        }
    }

    #[test]
    fn column_symmetry_under_conjugation() {
        let e = 3;
        let mut llt = crate::canonical::Llt::new(e);
        for n in 0..=9 {
            for mu in Partition::all_of_size(n).into_iter().filter(|m| m.is_e_regular(e)) {
                let w = crate::abacus::weight_of(&mu, e) as i32;
                let g = llt.g(&mu).unwrap();
                let g_star = llt.g(&mullineux_crystal(&mu, e).unwrap()).unwrap();
                for lam in Partition::all_of_size(n) {
                    let lhs = g_star.pairing(&lam.conjugate());
                    let rhs = g.pairing(&lam).bar().shift(w);
                    assert_eq!(lhs, rhs, "{lam} {mu}");
                }
            }
        }
        assert_eq!(llt_g(&part("2"), 2).unwrap().pairing(&part("1,1")), crate::LaurentPoly::monomial(1, 1));
    }

    proptest! {
        #[test]
        fn crystal_mullineux_is_an_involution(parts in proptest::collection::vec(1u32..7, 0..7), e in 3usize..7) {
            let lam = Partition::from_unsorted(parts);
            prop_assume!(lam.is_e_regular(e));
            let image = mullineux_crystal(&lam, e).unwrap();
            prop_assert_eq!(mullineux_crystal(&image, e).unwrap(), lam.clone());
            prop_assert_eq!(crate::abacus::weight_of(&image, e), crate::abacus::weight_of(&lam, e));
        }
    }
}
