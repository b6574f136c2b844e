//! Cohomology with coefficients in a skeletal Picard groupoid `(B, A, c)`.
//!
//! An n-cocycle is a pair `(P, g)` with `P: G^n -> B`, `g: G^{n+1} -> A`,
//! `δP = 0` and `δg = κ(P)`. The corrections `κ`, `ω`, `χ` are mod-2 cup-i
//! products paired through the diagonal form `c'(u, v) = Σ_k u_k v_k q(e_k)`,
//! which differs from `c` by an alternating form and so carries the same
//! symmetry invariant `q`:
//!
//! * `κ(P)    = c'(P ∪_{n-2} P)`            obstruction, `δκ(P) = 0`
//! * `ω(P,P') = c'(P ∪_{n-1} P')`           group-law correction
//! * `χ(Q)    = κ(Q) + c'(Q ∪_{n-2} δQ)`    `δχ(Q) = κ(δQ)`
//!
//! Pairs add by `(P, g) + (P', g') = (P + P', g + g' + ω(P, P'))` and the
//! relations are `(δQ, χ(Q))` and `(0, δh)`.

use std::collections::HashMap;

use crate::absgroup::{tabulate, TabulatedGroup};
use crate::cochain::{all_cochains, bar_delta, cocycle_witness, free_count, Cochain, CupPattern};
use crate::cohomology::{cohomology_group, enumerate_coords, CoboundarySolver, CohomologyGroup};
use crate::error::{pow_sat, Error, Limits, Result};
use crate::group::{FinAbGroup, InvariantFactors};
use crate::lattice::{Lattice, Presentation, Subquotient};
use crate::picard::PicardGroupoid;
use crate::snf::{smith_normal_form, Want};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardCochain {
    /// `B`-valued, degree n
    pub p: Cochain,
    /// `A`-valued, degree n + 1
    pub g: Cochain,
}

impl PicardCochain {
    pub fn zero(group: &FinAbGroup, base: &PicardGroupoid, n: usize, limits: &Limits) -> Result<PicardCochain> {
        Ok(PicardCochain {
            p: Cochain::zero(group, base.objects(), n, limits)?,
            g: Cochain::zero(group, base.automorphisms(), n + 1, limits)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    pub fn check_shape(&self, base: &PicardGroupoid) -> Result<()> {
        if self.p.coeff() != base.objects()
            || self.g.coeff() != base.automorphisms()
            || self.g.degree() != self.p.degree() + 1
            || self.p.group() != self.g.group()
        {
            return Err(Error::Mismatch("Picard cochain does not match its base".into()));
        }
        Ok(())
    }
}

/// Even factors of `B` whose generator has nonzero `q`, with `q(e_k)` as an index of `A`.
fn active_factors(base: &PicardGroupoid) -> Vec<(usize, usize)> {
    let a = base.automorphisms();
    base.q_generators()
        .into_iter()
        .enumerate()
        .filter(|(k, q)| base.objects().moduli()[*k] % 2 == 0 && !FinAbGroup::is_zero(q))
        .map(|(k, q)| (k, a.index_of(&q)))
        .collect()
}

/// Parity of the k-th residue of each value, indexed like the table.
fn parity_bits(f: &Cochain, k: usize) -> Vec<bool> {
    let b = f.coeff();
    f.table().raw().iter().map(|&v| b.element(v as usize)[k] % 2 != 0).collect()
}

/// `c'(u ∪_i v)`, an `A`-valued cochain of degree `deg u + deg v - i`.
pub fn paired_cup(u: &Cochain, v: &Cochain, i: isize, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    let (p, q) = (u.degree(), v.degree());
    let dim = p as isize + q as isize - i;
    let a = base.automorphisms();
    let group = u.group();
    if dim < 0 {
        return Err(Error::Domain("cup product of negative degree".into()));
    }
    let active = active_factors(base);
    if i < 0 || active.is_empty() {
        return Cochain::zero(group, a, dim as usize, limits);
    }
    let pattern = CupPattern::new(p, q, i);
    let bits: Vec<(Vec<bool>, Vec<bool>, usize)> = active.iter().map(|&(k, qk)| (parity_bits(u, k), parity_bits(v, k), qk)).collect();
    let ga = group.arith();
    let ar = a.arith();
    Cochain::from_fn(group, a, dim as usize, limits, |x| {
        let mut acc = 0;
        for (ub, vb, qk) in &bits {
            let hit = pattern.eval(&ga, x, |y| ub[u.table().flat(y)], |y| vb[v.table().flat(y)]);
            if hit {
                acc = ar.add(acc, *qk);
            }
        }
        acc
    })
}

/// `κ(P)` for a `B`-valued cocycle; zero below degree 2.
pub fn kappa(p: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    if p.coeff() != base.objects() {
        return Err(Error::Mismatch("κ expects a cochain valued in the objects group".into()));
    }
    if let Some(w) = cocycle_witness(p, limits)? {
        return Err(Error::Precondition(format!("κ needs δP = 0; δP is nonzero at {w:?}")));
    }
    kappa_raw(p, base, limits)
}

/// `κ` without the cocycle check.
pub fn kappa_raw(p: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    let n = p.degree();
    paired_cup(p, p, n as isize - 2, base, limits)
}

pub fn omega(p: &Cochain, p2: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    let n = p.degree();
    paired_cup(p, p2, n as isize - 1, base, limits)
}

/// `χ(Q)` for `Q` of degree `n - 1`, an `A`-valued cochain of degree `n + 1`.
pub fn chi(q: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    let m = q.degree();
    let dq = bar_delta(q, limits)?;
    kappa_raw(q, base, limits)?.add(&paired_cup(q, &dq, m as isize - 1, base, limits)?)
}

/// `(P, g) + (P', g')`.
pub fn picard_add(x: &PicardCochain, y: &PicardCochain, base: &PicardGroupoid, limits: &Limits) -> Result<PicardCochain> {
    let w = omega(&x.p, &y.p, base, limits)?;
    Ok(PicardCochain { p: x.p.add(&y.p)?, g: x.g.add(&y.g)?.add(&w)? })
}

/// The inverse under `picard_add`.
pub fn picard_neg(x: &PicardCochain, base: &PicardGroupoid, limits: &Limits) -> Result<PicardCochain> {
    let np = x.p.neg();
    let w = omega(&x.p, &np, base, limits)?;
    Ok(PicardCochain { p: np, g: x.g.neg().sub(&w)? })
}

/// `k·x` by double-and-add; negative `k` uses the inverse.
pub fn picard_scale(x: &PicardCochain, k: i128, base: &PicardGroupoid, limits: &Limits) -> Result<PicardCochain> {
    let mut acc = PicardCochain::zero(x.p.group(), base, x.degree(), limits)?;
    let mut pow = if k < 0 { picard_neg(x, base, limits)? } else { x.clone() };
    let mut k = k.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = picard_add(&acc, &pow, base, limits)?;
        }
        k >>= 1;
        if k > 0 {
            pow = picard_add(&pow, &pow, base, limits)?;
        }
    }
    Ok(acc)
}

/// The relation `(δQ, χ(Q))`.
pub fn coboundary_pair(q: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<PicardCochain> {
    Ok(PicardCochain { p: bar_delta(q, limits)?, g: chi(q, base, limits)? })
}

/// `δP = 0` and `δg = κ(P)`.
pub fn is_picard_cocycle(pc: &PicardCochain, base: &PicardGroupoid, limits: &Limits) -> Result<bool> {
    Ok(picard_cocycle_defect(pc, base, limits)?.is_none())
}

/// Which of the two conditions fails first, with the offending tuple.
pub fn picard_cocycle_defect(pc: &PicardCochain, base: &PicardGroupoid, limits: &Limits) -> Result<Option<(String, Vec<usize>)>> {
    pc.check_shape(base)?;
    if let Some(w) = cocycle_witness(&pc.p, limits)? {
        return Ok(Some(("dP".into(), w)));
    }
    let lhs = bar_delta(&pc.g, limits)?;
    let rhs = kappa_raw(&pc.p, base, limits)?;
    Ok(lhs.sub(&rhs)?.first_nonzero().map(|w| ("dg-kappa".to_string(), w)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// suspension or split fast path when applicable, otherwise structured
    Auto,
    /// literal enumeration of all candidate pairs and relations
    Enumerate,
    /// extension of the liftable part of `H^n(G,B)` by a quotient of `H^{n+1}(G,A)`
    Structured,
    /// `B` trivial: `H^{n+1}(G, A)`
    Suspension,
    /// `c = 0`: `H^n(G,B) ⊕ H^{n+1}(G,A)`
    Split,
}

#[derive(Clone, Debug)]
pub struct PicardCohomology {
    pub group: FinAbGroup,
    pub base: PicardGroupoid,
    pub degree: usize,
    pub invariants: InvariantFactors,
    pub representatives: Vec<PicardCochain>,
    pub backend: Backend,
    engine: Engine,
    limits: Limits,
}

#[derive(Clone, Debug)]
enum Engine {
    Shift(Box<CohomologyGroup>),
    Split { hb: Box<CohomologyGroup>, ha: Box<CohomologyGroup>, pres: Presentation },
    Structured(Box<Structured>),
    Enumerated(Box<Enumerated>),
}

#[derive(Clone, Debug)]
struct Structured {
    hb: CohomologyGroup,
    ha: CohomologyGroup,
    liftable: Subquotient,
    lifts: Vec<PicardCochain>,
    pres: Presentation,
    solver_b: Option<CoboundarySolver>,
}

/// Everything the literal backend enumerates; kept for exactness checks.
#[derive(Clone, Debug)]
pub struct Enumerated {
    pub cocycles: Vec<PicardCochain>,
    pub class_of: Vec<usize>,
    pub class_reps: Vec<usize>,
    pub relation_count: usize,
    pub table: TabulatedGroup,
    index: HashMap<Vec<u32>, usize>,
}

fn key(pc: &PicardCochain) -> Vec<u32> {
    let mut k = pc.p.table().raw().to_vec();
    k.extend_from_slice(pc.g.table().raw());
    k
}

impl Enumerated {
    pub fn position(&self, pc: &PicardCochain) -> Option<usize> {
        self.index.get(&key(pc)).copied()
    }
}

impl PicardCohomology {
    pub fn order(&self) -> u128 {
        self.invariants.order()
    }

    pub fn enumerated(&self) -> Option<&Enumerated> {
        match &self.engine {
            Engine::Enumerated(e) => Some(e),
            _ => None,
        }
    }

    /// Class coordinates of a Picard cocycle against `representatives`.
    pub fn coordinates(&self, pc: &PicardCochain) -> Result<Vec<i64>> {
        pc.check_shape(&self.base)?;
        if let Some((eq, w)) = picard_cocycle_defect(pc, &self.base, &self.limits)? {
            return Err(Error::Precondition(format!("not a Picard cocycle: {eq} fails at {w:?}")));
        }
        let lim = &self.limits;
        match &self.engine {
            Engine::Shift(ha) => ha.coordinates(&pc.g),
            Engine::Split { hb, ha, pres } => {
                let mut v: Vec<i128> = hb.coordinates(&pc.p)?.into_iter().map(i128::from).collect();
                v.extend(ha.coordinates(&pc.g)?.into_iter().map(i128::from));
                pres.coords(&v)
            }
            Engine::Structured(s) => {
                let hb_c: Vec<i128> = s.hb.coordinates(&pc.p)?.into_iter().map(i128::from).collect();
                let a = s.liftable.coords(&hb_c)?;
                let mut sum = PicardCochain::zero(&self.group, &self.base, self.degree, lim)?;
                for (lift, &ai) in s.lifts.iter().zip(&a) {
                    sum = picard_add(&sum, &picard_scale(lift, ai as i128, &self.base, lim)?, &self.base, lim)?;
                }
                let d = picard_add(pc, &picard_neg(&sum, &self.base, lim)?, &self.base, lim)?;
                let e = strip_coboundary(&d, s.solver_b.as_ref(), &self.base, lim)?;
                let mut v: Vec<i128> = s.ha.coordinates(&e)?.into_iter().map(i128::from).collect();
                v.extend(a.iter().map(|&x| x as i128));
                s.pres.coords(&v)
            }
            Engine::Enumerated(e) => {
                let pos = e.position(pc).ok_or_else(|| Error::Consistency("cocycle missing from enumeration".into()))?;
                Ok(e.table.coords[e.class_of[pos]].clone())
            }
        }
    }

    /// The cocycle `Σ c_i rep_i` under the twisted law.
    pub fn element(&self, coords: &[i64]) -> Result<PicardCochain> {
        let mut acc = PicardCochain::zero(&self.group, &self.base, self.degree, &self.limits)?;
        for (r, &c) in self.representatives.iter().zip(coords) {
            acc = picard_add(&acc, &picard_scale(r, c as i128, &self.base, &self.limits)?, &self.base, &self.limits)?;
        }
        Ok(acc)
    }

    pub fn all_coordinates(&self) -> Vec<Vec<i64>> {
        enumerate_coords(&self.invariants.0)
    }
}

/// Given `(δQ, g)`, subtract the relation `(δQ, χ(Q))` and return the resulting
/// `A`-cocycle `g - χ(Q)`.
fn strip_coboundary(d: &PicardCochain, solver: Option<&CoboundarySolver>, base: &PicardGroupoid, limits: &Limits) -> Result<Cochain> {
    if d.p.is_zero() {
        return Ok(d.g.clone());
    }
    let solver = solver.ok_or_else(|| Error::Consistency("degree-0 object part should vanish".into()))?;
    let q = solver.solve(&d.p)?.ok_or_else(|| Error::Consistency("object part is not a coboundary after subtracting lifts".into()))?;
    let rel = coboundary_pair(&q, base, limits)?;
    let e = picard_add(d, &picard_neg(&rel, base, limits)?, base, limits)?;
    if !e.p.is_zero() {
        return Err(Error::Consistency("relation did not cancel the object part".into()));
    }
    Ok(e.g)
}

/// `H^n(G, 𝒜)` for the Picard groupoid `base`.
pub fn picard_cohomology(
    group: &FinAbGroup,
    base: &PicardGroupoid,
    n: usize,
    backend: Backend,
    limits: &Limits,
) -> Result<PicardCohomology> {
    let chosen = match backend {
        Backend::Auto if base.objects().is_trivial() => Backend::Suspension,
        Backend::Auto if base.is_strict() => Backend::Split,
        Backend::Auto => Backend::Structured,
        Backend::Suspension if !base.objects().is_trivial() => {
            return Err(Error::Precondition("suspension path needs a trivial objects group".into()))
        }
        Backend::Split if !base.is_strict() => return Err(Error::Precondition("split path needs c = 0".into())),
        other => other,
    };
    let a = base.automorphisms();
    let b = base.objects();
    let wrap = |invariants: InvariantFactors, representatives: Vec<PicardCochain>, engine: Engine| PicardCohomology {
        group: group.clone(),
        base: base.clone(),
        degree: n,
        invariants,
        representatives,
        backend: chosen,
        engine,
        limits: *limits,
    };
    match chosen {
        Backend::Suspension => {
            let ha = cohomology_group(group, a, n + 1, limits)?;
            let zero_p = Cochain::zero(group, b, n, limits)?;
            let reps = ha.representatives.iter().map(|g| PicardCochain { p: zero_p.clone(), g: g.clone() }).collect();
            Ok(wrap(ha.invariants.clone(), reps, Engine::Shift(Box::new(ha))))
        }
        Backend::Split => {
            let hb = cohomology_group(group, b, n, limits)?;
            let ha = cohomology_group(group, a, n + 1, limits)?;
            let orders: Vec<i64> = hb.invariants.0.iter().chain(&ha.invariants.0).copied().collect();
            let pres = Presentation::from_orders(&orders)?;
            let s = hb.invariants.0.len();
            let reps = pres
                .lift
                .iter()
                .map(|w| {
                    let p = hb.element(&w[..s].iter().map(|&x| x as i64).collect::<Vec<_>>())?;
                    let g = ha.element(&w[s..].iter().map(|&x| x as i64).collect::<Vec<_>>())?;
                    Ok(PicardCochain { p, g })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(wrap(pres.invariants.clone(), reps, Engine::Split { hb: Box::new(hb), ha: Box::new(ha), pres }))
        }
        Backend::Structured => {
            let (s, reps) = structured(group, base, n, limits)?;
            Ok(wrap(s.pres.invariants.clone(), reps, Engine::Structured(Box::new(s))))
        }
        Backend::Enumerate => {
            let e = enumerate(group, base, n, limits)?;
            let reps = e.table.generators.iter().map(|&cls| e.cocycles[e.class_reps[cls]].clone()).collect();
            Ok(wrap(e.table.invariants.clone(), reps, Engine::Enumerated(Box::new(e))))
        }
        Backend::Auto => unreachable!("resolved above"),
    }
}

fn structured(group: &FinAbGroup, base: &PicardGroupoid, n: usize, limits: &Limits) -> Result<(Structured, Vec<PicardCochain>)> {
    let a = base.automorphisms();
    let b = base.objects();
    let hb = cohomology_group(group, b, n, limits)?;
    let ha = cohomology_group(group, a, n + 1, limits)?;
    let ha2 = cohomology_group(group, a, n + 2, limits)?;
    let s = hb.invariants.0.len();
    let t = ha2.invariants.0.len();

    // connecting map on generators, then its kernel inside H^n(G,B)
    let mut w = vec![vec![0i128; s + t]; t];
    for (i, r) in hb.representatives.iter().enumerate() {
        let col = ha2.coordinates(&kappa(r, base, limits)?)?;
        for (row, &v) in col.iter().enumerate() {
            w[row][i] = v as i128;
        }
    }
    for (row, &f) in ha2.invariants.0.iter().enumerate() {
        w[row][s + row] = f as i128;
    }
    let snf = smith_normal_form(&w, t, s + t, Want { v: true, ..Want::NONE })?;
    let kernel_cols: Vec<usize> = (snf.rank..s + t).collect();
    let kgens: Vec<Vec<i128>> = (0..s).map(|row| kernel_cols.iter().map(|&c| snf.v[row][c]).collect()).collect();
    let lattice = Lattice::span(&kgens, s, kernel_cols.len())?;
    let mut rel_b = vec![vec![0i128; s]; s];
    for (i, &e) in hb.invariants.0.iter().enumerate() {
        rel_b[i][i] = e as i128;
    }
    let liftable = Subquotient::new(lattice, &rel_b, s)?;

    let solver_a = CoboundarySolver::new(group, n + 2, limits)?;
    let solver_b = if n == 0 { None } else { Some(CoboundarySolver::new(group, n, limits)?) };
    let mut lifts = Vec::new();
    let mut ext_cols: Vec<(Vec<i128>, i64)> = Vec::new();
    for (gen, &order) in liftable.generators().iter().zip(&liftable.invariants.0) {
        let coords: Vec<i64> = gen.iter().zip(&hb.invariants.0).map(|(&x, &e)| x.rem_euclid(e as i128) as i64).collect();
        let p = hb.element(&coords)?;
        let k = kappa(&p, base, limits)?;
        let g = solver_a.solve(&k)?.ok_or_else(|| Error::Consistency("κ of a liftable class is not a coboundary".into()))?;
        let lift = PicardCochain { p, g };
        let multiple = picard_scale(&lift, order as i128, base, limits)?;
        let rest = strip_coboundary(&multiple, solver_b.as_ref(), base, limits)?;
        let kv: Vec<i128> = ha.coordinates(&rest)?.into_iter().map(i128::from).collect();
        ext_cols.push((kv, order));
        lifts.push(lift);
    }

    // image of H^{n-1}(G,B) under κ
    let mut image_cols: Vec<Vec<i128>> = Vec::new();
    if n >= 1 {
        let hb_prev = cohomology_group(group, b, n - 1, limits)?;
        for q in &hb_prev.representatives {
            image_cols.push(ha.coordinates(&kappa(q, base, limits)?)?.into_iter().map(i128::from).collect());
        }
    }

    let sa = ha.invariants.0.len();
    let r = lifts.len();
    let width = sa + r;
    let mut cols: Vec<Vec<i128>> = Vec::new();
    for (j, &e) in ha.invariants.0.iter().enumerate() {
        let mut c = vec![0i128; width];
        c[j] = e as i128;
        cols.push(c);
    }
    for ic in image_cols {
        let mut c = vec![0i128; width];
        c[..sa].copy_from_slice(&ic);
        cols.push(c);
    }
    for (i, (kv, order)) in ext_cols.iter().enumerate() {
        let mut c = vec![0i128; width];
        for (j, &v) in kv.iter().enumerate() {
            c[j] = -v;
        }
        c[sa + i] = *order as i128;
        cols.push(c);
    }
    let rel: Vec<Vec<i128>> = (0..width).map(|row| cols.iter().map(|c| c[row]).collect()).collect();
    let pres = Presentation::new(&rel, width, cols.len())?;

    let zero = PicardCochain::zero(group, base, n, limits)?;
    let mut reps = Vec::new();
    for wv in &pres.lift {
        let mut acc = zero.clone();
        for (j, rep) in ha.representatives.iter().enumerate() {
            let pc = PicardCochain { p: zero.p.clone(), g: rep.scale(wv[j] as i64) };
            acc = picard_add(&acc, &pc, base, limits)?;
        }
        for (i, lift) in lifts.iter().enumerate() {
            acc = picard_add(&acc, &picard_scale(lift, wv[sa + i], base, limits)?, base, limits)?;
        }
        reps.push(acc);
    }
    Ok((Structured { hb, ha, liftable, lifts, pres, solver_b }, reps))
}

fn enumerate(group: &FinAbGroup, base: &PicardGroupoid, n: usize, limits: &Limits) -> Result<Enumerated> {
    let a = base.automorphisms();
    let b = base.objects();
    let cand = pow_sat(b.order() as u128, free_count(group, n) as usize)
        .saturating_mul(pow_sat(a.order() as u128, free_count(group, n + 1) as usize));
    limits.check("candidate Picard cochains", cand)?;
    let ps = all_cochains(group, b, n, limits)?;
    let gs = all_cochains(group, a, n + 1, limits)?;
    let dgs: Vec<Cochain> = crate::par::map_slice(&gs, |g| bar_delta(g, limits)).into_iter().collect::<Result<_>>()?;
    let mut cocycles = Vec::new();
    for p in &ps {
        if cocycle_witness(p, limits)?.is_some() {
            continue;
        }
        let k = kappa_raw(p, base, limits)?;
        for (g, dg) in gs.iter().zip(&dgs) {
            if dg == &k {
                cocycles.push(PicardCochain { p: p.clone(), g: g.clone() });
            }
        }
    }
    let index: HashMap<Vec<u32>, usize> = cocycles.iter().enumerate().map(|(i, z)| (key(z), i)).collect();

    // relation generators
    let mut gens = Vec::new();
    if n >= 1 {
        for q in all_cochains(group, b, n - 1, limits)? {
            gens.push(coboundary_pair(&q, base, limits)?);
        }
    }
    let zero_p = Cochain::zero(group, b, n, limits)?;
    for h in all_cochains(group, a, n, limits)? {
        gens.push(PicardCochain { p: zero_p.clone(), g: bar_delta(&h, limits)? });
    }
    // closure of the relation subgroup
    let zero = PicardCochain::zero(group, base, n, limits)?;
    let mut rel: Vec<usize> = Vec::new();
    let mut in_rel = vec![false; cocycles.len()];
    let zpos = *index.get(&key(&zero)).ok_or_else(|| Error::Consistency("zero is not a cocycle".into()))?;
    in_rel[zpos] = true;
    rel.push(zpos);
    let mut head = 0;
    while head < rel.len() {
        let x = cocycles[rel[head]].clone();
        head += 1;
        for gnr in &gens {
            let y = picard_add(&x, gnr, base, limits)?;
            let pos = *index.get(&key(&y)).ok_or_else(|| Error::Consistency("a relation is not a Picard cocycle".into()))?;
            if !in_rel[pos] {
                in_rel[pos] = true;
                rel.push(pos);
            }
        }
    }
    // cosets
    let mut class_of = vec![usize::MAX; cocycles.len()];
    let mut class_reps = Vec::new();
    for z in 0..cocycles.len() {
        if class_of[z] != usize::MAX {
            continue;
        }
        let id = class_reps.len();
        class_reps.push(z);
        for &r in &rel {
            let y = picard_add(&cocycles[z], &cocycles[r], base, limits)?;
            let pos = *index.get(&key(&y)).ok_or_else(|| Error::Consistency("coset leaves the cocycles".into()))?;
            if class_of[pos] != usize::MAX && class_of[pos] != id {
                return Err(Error::Consistency("relation cosets overlap".into()));
            }
            class_of[pos] = id;
        }
    }
    let nclass = class_reps.len();
    let mut law = vec![vec![0usize; nclass]; nclass];
    for i in 0..nclass {
        for j in 0..nclass {
            let y = picard_add(&cocycles[class_reps[i]], &cocycles[class_reps[j]], base, limits)?;
            let pos = *index.get(&key(&y)).ok_or_else(|| Error::Consistency("sum is not a cocycle".into()))?;
            law[i][j] = class_of[pos];
        }
    }
    let table = tabulate(nclass, class_of[zpos], |i, j| law[i][j])?;
    Ok(Enumerated { cocycles, class_of, class_reps, relation_count: rel.len(), table, index })
}

/// `[κ(P)]` in `H^{n+2}(G, A)`, with the obstruction cochain itself.
pub fn les_connecting(p: &Cochain, base: &PicardGroupoid, limits: &Limits) -> Result<(Vec<i64>, Cochain)> {
    let k = kappa(p, base, limits)?;
    let h = cohomology_group(p.group(), base.automorphisms(), p.degree() + 2, limits)?;
    Ok((h.coordinates(&k)?, k))
}

/// Exactness of `H^{n+1}(G,A) -> H^n(G,𝒜) -> H^n(G,B) -> H^{n+2}(G,A)` at the
/// middle two nodes, by enumerating classes.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LesReport {
    pub exact_at_picard: bool,
    pub exact_at_objects: bool,
    /// classes of `H^n(G,𝒜)` coming from `H^{n+1}(G,A)`
    pub image_in_picard: usize,
    pub kernel_at_picard: usize,
    /// classes of `H^n(G,B)` that lift
    pub image_in_objects: usize,
    pub kernel_of_connecting: usize,
    pub picard_order: u128,
    pub objects_order: u128,
}

impl LesReport {
    pub fn exact(&self) -> bool {
        self.exact_at_picard && self.exact_at_objects
    }
}

pub fn les_check(group: &FinAbGroup, base: &PicardGroupoid, n: usize, limits: &Limits) -> Result<LesReport> {
    let hp = picard_cohomology(group, base, n, Backend::Enumerate, limits)?;
    let e = hp.enumerated().expect("enumeration backend");
    let hb = cohomology_group(group, base.objects(), n, limits)?;
    let solver_b = if n == 0 { None } else { Some(CoboundarySolver::new(group, n, limits)?) };
    let solver_a = CoboundarySolver::new(group, n + 2, limits)?;

    let mut image_alpha = vec![false; e.class_reps.len()];
    let mut kernel_beta = vec![false; e.class_reps.len()];
    let mut image_beta = std::collections::BTreeSet::new();
    for (z, pc) in e.cocycles.iter().enumerate() {
        let cls = e.class_of[z];
        if pc.p.is_zero() {
            image_alpha[cls] = true;
        }
        let trivial = match &solver_b {
            Some(s) => s.solve(&pc.p)?.is_some(),
            None => pc.p.is_zero(),
        };
        if trivial {
            kernel_beta[cls] = true;
        }
        image_beta.insert(hb.coordinates(&pc.p)?);
    }
    let mut kernel_connecting = std::collections::BTreeSet::new();
    for c in hb.all_coordinates() {
        let p = hb.element(&c)?;
        if solver_a.solve(&kappa(&p, base, limits)?)?.is_some() {
            kernel_connecting.insert(c);
        }
    }
    Ok(LesReport {
        exact_at_picard: image_alpha == kernel_beta,
        exact_at_objects: image_beta == kernel_connecting,
        image_in_picard: image_alpha.iter().filter(|&&x| x).count(),
        kernel_at_picard: kernel_beta.iter().filter(|&&x| x).count(),
        image_in_objects: image_beta.len(),
        kernel_of_connecting: kernel_connecting.len(),
        picard_order: hp.order(),
        objects_order: hb.order(),
    })
}
