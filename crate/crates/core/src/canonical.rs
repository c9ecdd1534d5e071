//! Canonical-basis columns of the Fock space computed three ways: the LLT algorithm, the
//! Leclerc–Miyachi formula in Rouquier blocks, and the inductive construction along Scopes chains
//! using exceptional families.

use std::collections::HashMap;

use serde_json::json;

use crate::abacus::{core_removable, from_levels, scopes_chain, Abacus, BlockId, ScopesStep};
use crate::error::{Error, Result};
use crate::fock::{apply_e, apply_f, FockVector};
use crate::labels::{is_hook_quotient, is_m_increasing, modified_basis, z_label, BlockLabels, ZLabel};
use crate::laurent::{quantum_int, LaurentPoly};
use crate::partition::Partition;

/// The ladder decomposition of `mu`: `(residue, size)` for each nonempty ladder, bottom first.
pub fn ladder_sequence(mu: &Partition, e: usize) -> Result<Vec<(usize, usize)>> {
    if !mu.is_e_regular(e) {
        return Err(Error::Domain(format!("{mu} is not {e}-regular")));
    }
    let mut counts: std::collections::BTreeMap<i64, usize> = std::collections::BTreeMap::new();
    for (i, j) in mu.cells() {
        *counts.entry(i as i64 + (e as i64 - 1) * (j as i64 - 1)).or_default() += 1;
    }
    Ok(counts.into_iter().map(|(k, m)| ((1 - k).rem_euclid(e as i64) as usize, m)).collect())
}

/// The LLT algorithm with a cache of the columns already computed.
///
/// [`Llt::g_ladder`] is the textbook procedure: the ladder monomial applied to the empty partition,
/// followed by Gaussian elimination. [`Llt::g`] seeds the same elimination with
/// `F_i^{(m)} G(ν)`, where `ν` is `mu` with its `m` normal `i`-nodes removed; this vector is
/// `G(mu)` plus bar-invariant multiples of other canonical basis vectors, so the elimination
/// reaches `G(mu)` as well while staying inside blocks of small weight.
#[derive(Clone, Debug)]
pub struct Llt {
    e: usize,
    cache: HashMap<Partition, FockVector>,
    active: std::collections::HashSet<Partition>,
}

impl Llt {
    pub fn new(e: usize) -> Llt {
        Llt { e, cache: HashMap::new(), active: Default::default() }
    }

    /// The ladder monomial `A(mu)` applied to the empty partition.
    pub fn ladder_vector(&self, mu: &Partition) -> Result<FockVector> {
        let mut v = FockVector::basis(&Partition::empty());
        for (r, m) in ladder_sequence(mu, self.e)? {
            v = apply_f(&v, r, m, self.e);
        }
        Ok(v)
    }

    /// `G(mu)` from the ladder monomial alone, without the cache.
    pub fn g_ladder(&mut self, mu: &Partition) -> Result<FockVector> {
        let a = self.ladder_vector(mu)?;
        self.eliminate(mu, a)
    }

    /// The residue `i`, multiplicity `m` and partition `ν` used to seed [`Llt::g`].
    fn crystal_seed(&self, mu: &Partition) -> Option<(usize, usize, Partition)> {
        let e = self.e;
        let ab = Abacus::of(mu, e);
        (0..e)
            .filter_map(|i| {
                let m = ab.epsilon(i);
                if m == 0 {
                    return None;
                }
                let mut nu = ab.clone();
                for _ in 0..m {
                    nu = nu.crystal_e(i)?;
                }
                Some((nu.weight(), std::cmp::Reverse(m), i, nu.partition()))
            })
            .min()
            .map(|(_, m, i, nu)| (i, m.0, nu))
    }

    pub fn g(&mut self, mu: &Partition) -> Result<FockVector> {
        if let Some(v) = self.cache.get(mu) {
            return Ok(v.clone());
        }
        if !mu.is_e_regular(self.e) {
            return Err(Error::Domain(format!("{mu} is not {}-regular", self.e)));
        }
        if !self.active.insert(mu.clone()) {
            return Err(Error::Construction(format!("cyclic dependency at {mu}")));
        }
        let seeded = match self.crystal_seed(mu) {
            None => Ok(FockVector::basis(mu)),
            Some((i, m, nu)) => self.g(&nu).and_then(|g| {
                let a = apply_f(&g, i, m, self.e);
                self.eliminate(mu, a)
            }),
        };
        let result = match seeded {
            Ok(g) => Ok(g),
            Err(_) => self.g_ladder(mu),
        };
        self.active.remove(mu);
        let g = result?;
        self.cache.insert(mu.clone(), g.clone());
        Ok(g)
    }

    /// Gaussian elimination of a bar-invariant vector containing `mu` down to `G(mu)`.
    fn eliminate(&mut self, mu: &Partition, mut a: FockVector) -> Result<FockVector> {
        loop {
            let target = a
                .terms()
                .rev()
                .find(|(lam, c)| *lam != mu && !c.in_q_zq())
                .map(|(lam, c)| (lam.clone(), c.clone()));
            let Some((lam, c)) = target else { break };
            let (alpha, _) = c.bar_symmetric_split();
            let g = self.g(&lam)?;
            a.add_scaled(&g, &-alpha);
        }
        if !a.pairing(mu).is_one() {
            return Err(Error::Construction(format!("elimination for {mu} left coefficient {}", a.pairing(mu))));
        }
        Ok(a)
    }
}

/// `G(mu)` by the LLT algorithm.
pub fn llt_g(mu: &Partition, e: usize) -> Result<FockVector> {
    Llt::new(e).g(mu)
}

/// The Littlewood–Richardson coefficient `c^rho_{sigma tau}`.
pub fn lr_coefficient(rho: &Partition, sigma: &Partition, tau: &Partition) -> Result<u64> {
    if rho.size() != sigma.size() + tau.size() {
        return Err(Error::Domain(format!("|{rho}| differs from |{sigma}| + |{tau}|")));
    }
    if !rho.contains_diagram(sigma) {
        return Ok(0);
    }
    // Cells of rho/sigma in reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (0..rho.len())
        .flat_map(|r| (sigma.part(r) as usize..rho.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let content: Vec<usize> = tau.parts().iter().map(|&p| p as usize).collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; content.len()];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        content: &[usize],
        counts: &mut Vec<usize>,
        filling: &mut HashMap<(usize, usize), usize>,
    ) -> u64 {
        if idx == cells.len() {
            return u64::from(counts.as_slice() == content);
        }
        let (r, c) = cells[idx];
        let max = filling.get(&(r, c + 1)).copied().unwrap_or(content.len().saturating_sub(1));
        let min = filling.get(&(r.wrapping_sub(1), c)).map_or(0, |&v| v + 1);
        let mut total = 0;
        for v in min..=max.min(content.len().saturating_sub(1)) {
            if content.is_empty() || counts[v] >= content[v] || (v > 0 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling.insert((r, c), v);
            total += rec(idx + 1, cells, content, counts, filling);
            filling.remove(&(r, c));
            counts[v] -= 1;
        }
        total
    }
    Ok(rec(0, &cells, &content, &mut counts, &mut filling))
}

fn rouquier_quotients(lambda: &Partition, mu: &Partition, b: &BlockId) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let shift = b
        .rouquier_shift()
        .ok_or_else(|| Error::Domain(format!("block {b} is not Rouquier")))? as i64;
    for p in [lambda, mu] {
        if !b.contains(p) {
            return Err(Error::Domain(format!("{p} does not lie in block {b}")));
        }
    }
    let quot = |p: &Partition| Abacus::of(p, b.e).shifted(shift).quotient();
    Ok((quot(lambda), quot(mu)))
}

/// `d_{lambda mu}(q)` in a Rouquier block by the Leclerc–Miyachi formula.
pub fn rouquier_d(lambda: &Partition, mu: &Partition, b: &BlockId) -> Result<LaurentPoly> {
    let (lq, mq) = rouquier_quotients(lambda, mu, b)?;
    let e = b.e;
    let diff: Vec<i64> = (0..e).map(|j| lq[j].size() as i64 - mq[j].size() as i64).collect();
    let a_size: Vec<i64> = (0..=e).map(|i| diff[..i].iter().sum()).collect();
    if a_size.iter().any(|&s| s < 0) {
        return Ok(LaurentPoly::zero());
    }
    let delta: i64 = (0..e.saturating_sub(1)).map(|j| (e - 1 - j) as i64 * diff[j]).sum();

    // Sum over alpha^1..alpha^{e-1} and beta^0..beta^{e-1}, one runner at a time.
    fn rec(j: usize, alpha: &Partition, lq: &[Partition], mq: &[Partition], a_size: &[i64]) -> Result<u64> {
        let e = lq.len();
        let b_size = mq[j].size() as i64 - a_size[j];
        if b_size < 0 {
            return Ok(0);
        }
        let mut total = 0;
        for beta in Partition::all_of_size(b_size as usize) {
            let c1 = lr_coefficient(&mq[j], alpha, &beta)?;
            if c1 == 0 {
                continue;
            }
            let next_size = a_size[j + 1] as usize;
            if lq[j].size() != beta.size() + next_size {
                continue;
            }
            let nexts = if j + 1 == e { vec![Partition::empty()] } else { Partition::all_of_size(next_size) };
            for next in nexts {
                let c2 = lr_coefficient(&lq[j], &beta, &next.conjugate())?;
                if c2 == 0 {
                    continue;
                }
                let rest = if j + 1 == e { 1 } else { rec(j + 1, &next, lq, mq, a_size)? };
                total += c1 * c2 * rest;
            }
        }
        Ok(total)
    }
    let count = rec(0, &Partition::empty(), &lq, &mq, &a_size)?;
    Ok(if count == 0 { LaurentPoly::zero() } else { LaurentPoly::monomial(delta as i32, count as i64) })
}

/// The specialization of [`rouquier_d`] to 0-increasing `mu`.
pub fn rouquier_d_reduced(lambda: &Partition, mu: &Partition, b: &BlockId) -> Result<LaurentPoly> {
    let (lq, mq) = rouquier_quotients(lambda, mu, b)?;
    if !is_m_increasing(&z_label(mu, b.e), 0) {
        return Err(Error::Domain(format!("{mu} is not 0-increasing")));
    }
    if lq.iter().any(|p| p.part(1) > 1) {
        return Ok(LaurentPoly::zero());
    }
    let e = b.e;
    let widths: Vec<i64> = mq.iter().map(|p| p.size() as i64).collect();
    let mut a_next = 0i64;
    let mut exponent = 0i64;
    for i in 0..e {
        a_next += lq[i].size() as i64 - widths[i];
        let x = lq[i].part(0) as i64;
        let c = x - a_next;
        if c < 0 || c > x.min(1) {
            return Ok(LaurentPoly::zero());
        }
        exponent += x - c;
    }
    Ok(LaurentPoly::q_pow(exponent as i32))
}

/// The column `G(mu)` of a Rouquier block by the Leclerc–Miyachi formula.
pub fn rouquier_column(mu: &Partition, b: &BlockId) -> Result<FockVector> {
    let mut v = FockVector::zero();
    for lam in b.enumerate() {
        let d = rouquier_d(&lam, mu, b)?;
        v.add_term(lam, d);
    }
    Ok(v)
}

/// The Scopes data of a block `B~ = s_a(B)`: `B` has `k` removable core beads on runner `a`, and
/// `B^` is the block of the generators of exceptional families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScopesPair {
    pub tilde: BlockId,
    pub plain: BlockId,
    pub check: Option<BlockId>,
    pub a: usize,
    pub k: usize,
}

impl ScopesPair {
    /// The pair with `tilde = s_a(plain)`; fails unless the core of `plain` has removable beads on runner `a`.
    pub fn new(plain: &BlockId, a: usize) -> Result<ScopesPair> {
        let e = plain.e;
        let k = core_removable(&plain.levels(), a);
        if k <= 0 {
            return Err(Error::Domain(format!("the core of {plain} has no removable bead on runner {a}")));
        }
        let k = k as usize;
        let tilde = plain.weyl_s(a);
        let mut levels = tilde.levels();
        levels[a] -= 1;
        levels[(a + e - 1) % e] += 1;
        let core = from_levels(&levels).partition();
        let total = tilde.core.size() as i64 + (e * tilde.weight) as i64 - 1 - core.size() as i64;
        let check = if tilde.weight > k {
            if total != (e * (tilde.weight - k - 1)) as i64 {
                return Err(Error::Construction(format!("generator block of {tilde} at runner {a} has wrong size")));
            }
            Some(BlockId::new(e, core, tilde.weight - k - 1)?)
        } else {
            None
        };
        Ok(ScopesPair { tilde, plain: plain.clone(), check, a, k })
    }

    /// Every hook-quotient exceptional family of the pair.
    pub fn families(&self) -> Result<Vec<ExceptionalFamily>> {
        let Some(check) = &self.check else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        for g in check.enumerate() {
            if Abacus::of(&g, check.e).removable(self.a).is_empty() {
                if let Some(f) = exceptional_family(&g, self)? {
                    out.push(f);
                }
            }
        }
        Ok(out)
    }
}

/// A hook-quotient exceptional family, with 0-based coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalFamily {
    pub generator: Partition,
    pub k: usize,
    pub a: usize,
    pub hat: Partition,
    pub lower: Vec<Partition>,
    pub upper: Vec<Partition>,
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
    pub eta: Vec<ZLabel>,
    /// `ε_x` for each external coordinate `x`, in the order of `external`.
    pub external_eps: Vec<ZLabel>,
    /// `z(λ^0) = z(λ~^0)`.
    pub z0: ZLabel,
}

/// The family generated by `generator`, or `None` when it is not hook-quotient.
pub fn exceptional_family(generator: &Partition, pair: &ScopesPair) -> Result<Option<ExceptionalFamily>> {
    let Some(check) = &pair.check else {
        return Err(Error::Domain(format!("the pair at runner {} has no generator block", pair.a)));
    };
    let (e, a, k) = (pair.tilde.e, pair.a, pair.k);
    if !check.contains(generator) {
        return Err(Error::Domain(format!("{generator} does not lie in the generator block {check}")));
    }
    let ab = Abacus::of(generator, e);
    if !ab.removable(a).is_empty() {
        return Err(Error::Domain(format!("{generator} has a removable bead on runner {a}")));
    }
    let c = ab.addable((a + e - 1) % e);
    if c.len() != k + 2 {
        return Err(Error::Construction(format!("{generator} has {} addable beads, expected {}", c.len(), k + 2)));
    }
    let plus: Vec<i64> = c.iter().map(|x| x + 1).collect();
    let hat = ab.replaced(&c, &plus);
    let lower: Vec<Partition> = c.iter().map(|&cj| hat.moved(cj + 1, cj).partition()).collect();
    let upper: Vec<Partition> = (0..=k + 1).map(|j| ab.moved(c[k + 1 - j], c[k + 1 - j] + 1).partition()).collect();
    if !lower.iter().chain(&upper).all(|p| is_hook_quotient(p, e)) {
        return Ok(None);
    }
    let kappa = Abacus::of(&pair.tilde.core, e);
    let mut y = kappa.base();
    while y.rem_euclid(e as i64) as usize != a || kappa.contains(y) {
        y += 1;
    }
    let moves = crate::labels::movements(&upper[0], e);
    let w = moves.len();
    let mut internal = Vec::with_capacity(k + 1);
    for g in 0..=k as i64 {
        let x = y + g * e as i64;
        let idx = moves
            .iter()
            .position(|m| m.q == x || m.q == x - 1)
            .ok_or_else(|| Error::Construction(format!("no movement of {} starts near {x}", upper[0])))?;
        internal.push(idx);
    }
    let external: Vec<usize> = (0..w).filter(|i| !internal.contains(i)).collect();
    let unit = |i: usize, s: i64| {
        let mut v = vec![0; w];
        v[i] = s;
        v
    };
    let mut eta = vec![unit(internal[0], -1)];
    for g in 1..=k {
        let mut v = unit(internal[g - 1], 1);
        v[internal[g]] -= 1;
        eta.push(v);
    }
    eta.push(unit(internal[k], 1));
    let basis = modified_basis(&lower[0], e)?;
    let external_eps = external.iter().map(|&x| basis.vectors[x].plain(w)).collect();
    Ok(Some(ExceptionalFamily {
        generator: generator.clone(),
        k,
        a,
        hat: hat.partition(),
        z0: z_label(&lower[0], e),
        lower,
        upper,
        internal,
        external,
        eta,
        external_eps,
    }))
}

impl ExceptionalFamily {
    /// Every member: the generator, `λ^0..λ^{k+1}`, `λ~^0..λ~^{k+1}` and `λ^`.
    pub fn members(&self) -> Vec<&Partition> {
        std::iter::once(&self.generator).chain(&self.lower).chain(&self.upper).chain(std::iter::once(&self.hat)).collect()
    }

    /// `z(λ^0) + η_J + ε_X` for 0-based `J ⊆ [0, k+1]` and `X` indexing `external`.
    pub fn point(&self, j: &[usize], x: &[usize]) -> ZLabel {
        let mut z = self.z0.clone();
        for v in j.iter().map(|&i| &self.eta[i]).chain(x.iter().map(|&i| &self.external_eps[i])) {
            for (a, b) in z.iter_mut().zip(v) {
                *a += b;
            }
        }
        z
    }

    /// `(n, s)` with `z = z(λ^0) + η_J + ε_X`, `J` a proper subset, `n = k + 2 - |J|` and `s = |X|`.
    pub fn separation(&self, z: &[i64]) -> Option<(usize, usize)> {
        let nj = self.k + 2;
        let nx = self.external.len();
        for jm in 0u64..(1 << nj) - 1 {
            let j: Vec<usize> = (0..nj).filter(|&i| jm >> i & 1 == 1).collect();
            for xm in 0u64..1 << nx {
                let x: Vec<usize> = (0..nx).filter(|&i| xm >> i & 1 == 1).collect();
                if self.point(&j, &x) == z {
                    return Some((nj - j.len(), x.len()));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "generator": self.generator,
            "k": self.k,
            "a": self.a,
            "hat": self.hat,
            "lower": self.lower,
            "upper": self.upper,
            "internal": self.internal.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "external": self.external.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "eta": self.eta,
        })
    }
}

/// The inductive construction of `G(mu)` for 4-increasing `mu`, with caches shared across calls.
#[derive(Debug)]
pub struct Inductive {
    e: usize,
    columns: HashMap<Partition, FockVector>,
    chains: HashMap<BlockId, Vec<ScopesStep>>,
    families: HashMap<(BlockId, usize), Vec<ExceptionalFamily>>,
    labels: HashMap<BlockId, BlockLabels>,
}

impl Inductive {
    pub fn new(e: usize) -> Inductive {
        Inductive { e, columns: HashMap::new(), chains: HashMap::new(), families: HashMap::new(), labels: HashMap::new() }
    }

    pub fn g(&mut self, mu: &Partition) -> Result<FockVector> {
        if !is_m_increasing(&z_label(mu, self.e), 4) {
            return Err(Error::Domain(format!("{mu} is not 4-increasing")));
        }
        let b = BlockId::of(mu, self.e);
        let chain = self.chains.entry(b.clone()).or_insert_with(|| scopes_chain(&b)).clone();
        self.g_along(mu, &b, &chain)
    }

    fn families_of(&mut self, plain: &BlockId, a: usize) -> Result<Vec<ExceptionalFamily>> {
        let key = (plain.clone(), a);
        if let Some(f) = self.families.get(&key) {
            return Ok(f.clone());
        }
        let f = ScopesPair::new(plain, a)?.families()?;
        self.families.insert(key, f.clone());
        Ok(f)
    }

    fn z_inverse(&mut self, b: &BlockId, z: &[i64]) -> Result<Partition> {
        let labels = self.labels.entry(b.clone()).or_insert_with(|| BlockLabels::new(b));
        labels
            .z_inverse(z)?
            .ok_or_else(|| Error::Construction(format!("no partition of {b} has label {z:?}")))
    }

    fn g_along(&mut self, mu: &Partition, b: &BlockId, chain: &[ScopesStep]) -> Result<FockVector> {
        if let Some(v) = self.columns.get(mu) {
            return Ok(v.clone());
        }
        let e = self.e;
        let v = match chain.split_last() {
            None => rouquier_column(mu, b)?,
            Some((step, rest)) => {
                let plain = b.weyl_s(step.a);
                let families = self.families_of(&plain, step.a)?;
                if let Some(f) = families.iter().find(|f| f.upper[0] == *mu) {
                    apply_f(&self.g(&f.generator)?, step.a, 1, e)
                } else {
                    let z = z_label(mu, e);
                    let mu_plain = self.z_inverse(&plain, &z)?;
                    let below = self.g_along(&mu_plain, &plain, rest)?;
                    let mut v = apply_e(&below, step.a, step.k, e);
                    for f in &families {
                        if let Some((n, 0)) = f.separation(&z) {
                            if n >= 2 {
                                let corr = apply_f(&self.g(&f.generator)?, step.a, 1, e);
                                v.add_scaled(&corr, &-quantum_int(n as i64 - 1)?);
                            }
                        }
                    }
                    v
                }
            }
        };
        if !v.pairing(mu).is_one() || v.terms().any(|(l, c)| l != mu && !c.in_q_zq()) {
            return Err(Error::Construction(format!("inductive column of {mu} is not unitriangular")));
        }
        self.columns.insert(mu.clone(), v.clone());
        Ok(v)
    }
}

/// `G(mu)` for 4-increasing `mu` by the inductive construction.
pub fn inductive_g(mu: &Partition, e: usize) -> Result<FockVector> {
    Inductive::new(e).g(mu)
}

/// The column `{λ: d_closed(λ, μ)}` as a Fock vector.
pub fn closed_g(mu: &Partition, e: usize) -> FockVector {
    let mut v = FockVector::zero();
    for (lam, d) in crate::polytope::closed_column(mu, e) {
        v.add_term(lam, d);
    }
    v
}
