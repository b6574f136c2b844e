//! Biextension cocycles `(A, B)` of `(G, H)` by a coefficient group, built from
//! skeletal monoidal data through the commutator composites, and the
//! anti-symmetric and alternating predicates.
//!
//! Conventions: `A(x,x';y)` is the cocycle of the first partial law and
//! `B(x;y,y')` of the second, so a section change `h` shifts them by
//! `δ₁h(x,x';y) = h(x,y) + h(x',y) - h(x+x',y)` and
//! `δ₂h(x;y,y') = h(x,y) + h(x,y') - h(x,y+y')`.

use crate::cochain::{cocycle_witness, delta_at, Cochain};
use crate::error::{Error, Limits, Result};
use crate::group::{Arith, FinAbGroup};
use crate::linsys::LinearSystem;
use crate::report::{Equation, Report, Witness};
use crate::table::{Normalization, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiextCocycle {
    pub g: FinAbGroup,
    pub h: FinAbGroup,
    pub a: FinAbGroup,
    /// `G x G x H -> A`
    pub afun: Table,
    /// `G x H x H -> A`
    pub bfun: Table,
}

fn shape_ok(t: &Table, slots: &[&FinAbGroup], coeff: &FinAbGroup) -> bool {
    t.arity() == slots.len()
        && t.slots().iter().zip(slots).all(|(s, g)| s == *g)
        && t.coeff() == coeff
        && t.normalization() == Normalization::AnySlotZero
}

impl BiextCocycle {
    pub fn new(g: FinAbGroup, h: FinAbGroup, a: FinAbGroup, afun: Table, bfun: Table) -> Result<BiextCocycle> {
        if !shape_ok(&afun, &[&g, &g, &h], &a) || !shape_ok(&bfun, &[&g, &h, &h], &a) {
            return Err(Error::Mismatch(format!(
                "biextension data must be G x G x H -> A and G x H x H -> A for G = {g}, H = {h}, A = {a}"
            )));
        }
        Ok(BiextCocycle { g, h, a, afun, bfun })
    }

    pub fn zero(g: &FinAbGroup, h: &FinAbGroup, a: &FinAbGroup, limits: &Limits) -> Result<BiextCocycle> {
        Self::from_fns(g, h, a, limits, |_| 0, |_| 0)
    }

    /// Both tables from index functions `(x, x', y)` and `(x, y, y')`.
    pub fn from_fns<FA, FB>(g: &FinAbGroup, h: &FinAbGroup, a: &FinAbGroup, limits: &Limits, fa: FA, fb: FB) -> Result<BiextCocycle>
    where
        FA: Fn(&[usize]) -> usize + Sync + Send,
        FB: Fn(&[usize]) -> usize + Sync + Send,
    {
        let afun = Table::from_fn(vec![g.clone(), g.clone(), h.clone()], a.clone(), Normalization::AnySlotZero, limits, fa)?;
        let bfun = Table::from_fn(vec![g.clone(), h.clone(), h.clone()], a.clone(), Normalization::AnySlotZero, limits, fb)?;
        Ok(BiextCocycle { g: g.clone(), h: h.clone(), a: a.clone(), afun, bfun })
    }

    /// `(δ₁h, δ₂h)` for `h: G x H -> A`.
    pub fn coboundary(section: &Table, limits: &Limits) -> Result<BiextCocycle> {
        let (g, h) = (&section.slots()[0], &section.slots()[1]);
        let a = section.coeff();
        let (ga, ha, ar) = (g.arith(), h.arith(), a.arith());
        Self::from_fns(
            g,
            h,
            a,
            limits,
            |t| ar.sub(ar.add(section.get(&[t[0], t[2]]), section.get(&[t[1], t[2]])), section.get(&[ga.add(t[0], t[1]), t[2]])),
            |t| ar.sub(ar.add(section.get(&[t[0], t[1]]), section.get(&[t[0], t[2]])), section.get(&[t[0], ha.add(t[1], t[2])])),
        )
    }

    pub fn is_square(&self) -> bool {
        self.g == self.h
    }

    pub fn same_signature(&self, other: &BiextCocycle) -> bool {
        self.g == other.g && self.h == other.h && self.a == other.a
    }

    pub fn is_zero(&self) -> bool {
        self.afun.is_zero() && self.bfun.is_zero()
    }
}

/// Section tables `G x H -> A`, zero on the axes.
pub fn section_table(
    g: &FinAbGroup,
    h: &FinAbGroup,
    a: &FinAbGroup,
    limits: &Limits,
    f: impl Fn(&[usize]) -> usize + Sync + Send,
) -> Result<Table> {
    Table::from_fn(vec![g.clone(), h.clone()], a.clone(), Normalization::AnySlotZero, limits, f)
}

/// A monoidal category with `π₀ = G` and `π₁ = A` in skeletal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletalMonoidalDatum {
    pub g: FinAbGroup,
    pub a: FinAbGroup,
    /// associator, degree 3
    pub assoc: Cochain,
    /// `β(x, y): x + y -> y + x`
    pub braiding: Option<Table>,
    /// section change `t(x, y)`
    pub shift: Option<Table>,
}

impl SkeletalMonoidalDatum {
    pub fn new(assoc: Cochain, braiding: Option<Table>, shift: Option<Table>) -> Result<SkeletalMonoidalDatum> {
        let g = assoc.group().clone();
        let a = assoc.coeff().clone();
        if assoc.degree() != 3 {
            return Err(Error::Mismatch("associator must have degree 3".into()));
        }
        for t in braiding.iter().chain(shift.iter()) {
            if !shape_ok(t, &[&g, &g], &a) {
                return Err(Error::Mismatch(format!("braiding and section shift must be normalized maps {g} x {g} -> {a}")));
            }
        }
        Ok(SkeletalMonoidalDatum { g, a, assoc, braiding, shift })
    }

    fn assoc_at(&self, x: usize, y: usize, z: usize) -> usize {
        self.assoc.get(&[x, y, z])
    }

    fn beta(&self, x: usize, y: usize) -> usize {
        self.braiding.as_ref().map_or(0, |b| b.get(&[x, y]))
    }

    fn shift_at(&self, x: usize, y: usize) -> usize {
        self.shift.as_ref().map_or(0, |t| t.get(&[x, y]))
    }

    /// The commutator section `s(x, y) = β(y, x) + t(x, y)`.
    pub fn section(&self, x: usize, y: usize) -> usize {
        self.a.arith().add(self.beta(y, x), self.shift_at(x, y))
    }

    pub fn with_shift(&self, shift: Option<Table>) -> SkeletalMonoidalDatum {
        SkeletalMonoidalDatum { shift, ..self.clone() }
    }
}

/// `u +₁ u'` for `u` over `(x, y)` and `u'` over `(x', y)`, landing over `(x + x', y)`.
pub fn partial_compose_1(d: &SkeletalMonoidalDatum, u: usize, u2: usize, x: usize, x2: usize, y: usize) -> usize {
    let ar = d.a.arith();
    let s = ar.add(u, u2);
    let s = ar.sub(s, d.assoc_at(y, x, x2));
    let s = ar.add(s, d.assoc_at(x, y, x2));
    ar.sub(s, d.assoc_at(x, x2, y))
}

/// `u +₂ v` for `u` over `(x, y)` and `v` over `(x, y')`, landing over `(x, y + y')`.
pub fn partial_compose_2(d: &SkeletalMonoidalDatum, u: usize, v: usize, x: usize, y: usize, y2: usize) -> usize {
    let ar = d.a.arith();
    let s = ar.add(u, v);
    let s = ar.add(s, d.assoc_at(y, y2, x));
    let s = ar.sub(s, d.assoc_at(y, x, y2));
    ar.add(s, d.assoc_at(x, y, y2))
}

/// `(u +₁ u') +₂ (v +₁ v')` minus `(u +₂ v) +₁ (u' +₂ v')`, for `u, u', v, v'`
/// over `(x,y), (x',y), (x,y'), (x',y')`.
#[allow(clippy::too_many_arguments)]
pub fn interchange_defect(
    d: &SkeletalMonoidalDatum,
    x: usize,
    x2: usize,
    y: usize,
    y2: usize,
    u: usize,
    u2: usize,
    v: usize,
    v2: usize,
) -> usize {
    let ga = d.g.arith();
    let ar = d.a.arith();
    let xs = ga.add(x, x2);
    let ys = ga.add(y, y2);
    let lhs = partial_compose_2(d, partial_compose_1(d, u, u2, x, x2, y), partial_compose_1(d, v, v2, x, x2, y2), xs, y, y2);
    let rhs = partial_compose_1(d, partial_compose_2(d, u, v, x, y, y2), partial_compose_2(d, u2, v2, x2, y, y2), x, x2, ys);
    ar.sub(lhs, rhs)
}

/// The two hexagon defects, which are the commutator cocycles of the bare braiding.
pub fn hexagon_report(d: &SkeletalMonoidalDatum) -> Result<Report> {
    if d.braiding.is_none() {
        return Err(Error::Precondition("no braiding to check".into()));
    }
    let bare = d.with_shift(None);
    let ga = d.g.arith();
    let ar = d.a.arith();
    let mut ws = Vec::new();
    ws.extend(Equation { id: "hexagon-1", slots: vec![&d.g; 3] }.check(|t| {
        let s = partial_compose_1(&bare, bare.section(t[0], t[2]), bare.section(t[1], t[2]), t[0], t[1], t[2]);
        ar.sub(s, bare.section(ga.add(t[0], t[1]), t[2]))
    }));
    ws.extend(Equation { id: "hexagon-2", slots: vec![&d.g; 3] }.check(|t| {
        let s = partial_compose_2(&bare, bare.section(t[0], t[1]), bare.section(t[0], t[2]), t[0], t[1], t[2]);
        ar.sub(s, bare.section(t[0], ga.add(t[1], t[2])))
    }));
    Ok(Report::from_witnesses(ws))
}

/// `β(x, y) + β(y, x) = 0`.
pub fn symmetry_report(d: &SkeletalMonoidalDatum) -> Report {
    let ar = d.a.arith();
    Report::from_witnesses(
        Equation { id: "braiding-symmetric", slots: vec![&d.g; 2] }.check(|t| ar.add(d.beta(t[0], t[1]), d.beta(t[1], t[0]))),
    )
}

/// Cocycles of the partial laws on the sections `s(x, y)` over `G x G`.
pub fn commutator_biextension(d: &SkeletalMonoidalDatum, limits: &Limits) -> Result<BiextCocycle> {
    if let Some(w) = cocycle_witness(&d.assoc, limits)? {
        return Err(Error::Precondition(format!("associator fails the pentagon at {w:?}")));
    }
    let ga = d.g.arith();
    let ar = d.a.arith();
    let n = d.g.order();
    let s: Vec<usize> = (0..n * n).map(|i| d.section(i / n, i % n)).collect();
    let sec = |x: usize, y: usize| s[x * n + y];
    BiextCocycle::from_fns(
        &d.g,
        &d.g,
        &d.a,
        limits,
        |t| ar.sub(partial_compose_1(d, sec(t[0], t[2]), sec(t[1], t[2]), t[0], t[1], t[2]), sec(ga.add(t[0], t[1]), t[2])),
        |t| ar.sub(partial_compose_2(d, sec(t[0], t[1]), sec(t[0], t[2]), t[0], t[1], t[2]), sec(t[0], ga.add(t[1], t[2]))),
    )
}

/// Associativity of each partial law and their compatibility.
pub fn check_biext(e: &BiextCocycle) -> Report {
    let (ga, ha, ar) = (e.g.arith(), e.h.arith(), e.a.arith());
    let (af, bf) = (&e.afun, &e.bfun);
    let mut ws: Vec<Witness> = Vec::new();
    ws.extend(Equation { id: "biext-A", slots: vec![&e.g, &e.g, &e.g, &e.h] }.check(|t| {
        let (x, x1, x2, y) = (t[0], t[1], t[2], t[3]);
        let l = ar.add(af.get(&[x, x1, y]), af.get(&[ga.add(x, x1), x2, y]));
        let r = ar.add(af.get(&[x1, x2, y]), af.get(&[x, ga.add(x1, x2), y]));
        ar.sub(l, r)
    }));
    ws.extend(Equation { id: "biext-B", slots: vec![&e.g, &e.h, &e.h, &e.h] }.check(|t| {
        let (x, y, y1, y2) = (t[0], t[1], t[2], t[3]);
        let l = ar.add(bf.get(&[x, y, y1]), bf.get(&[x, ha.add(y, y1), y2]));
        let r = ar.add(bf.get(&[x, y1, y2]), bf.get(&[x, y, ha.add(y1, y2)]));
        ar.sub(l, r)
    }));
    ws.extend(Equation { id: "biext-AB", slots: vec![&e.g, &e.g, &e.h, &e.h] }.check(|t| biext_compat(&ga, &ha, &ar, af, bf, t)));
    Report::from_witnesses(ws)
}

fn biext_compat(ga: &Arith, ha: &Arith, ar: &Arith, af: &Table, bf: &Table, t: &[usize]) -> usize {
    let (x, x1, y, y1) = (t[0], t[1], t[2], t[3]);
    let l = ar.sum([af.get(&[x, x1, y]), af.get(&[x, x1, y1]), bf.get(&[ga.add(x, x1), y, y1])]);
    let r = ar.sum([bf.get(&[x, y, y1]), bf.get(&[x1, y, y1]), af.get(&[x, x1, ha.add(y, y1)])]);
    ar.sub(l, r)
}

fn require_valid(e: &BiextCocycle) -> Result<()> {
    let r = check_biext(e);
    match r.witnesses.first() {
        None => Ok(()),
        Some(w) => Err(Error::Precondition(format!("not a biextension: {} fails at {:?}", w.equation, w.tuple))),
    }
}

fn require_square(e: &BiextCocycle) -> Result<()> {
    if e.is_square() {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("needs G = H, got {} and {}", e.g, e.h)))
    }
}

/// Unknown index of a section value, `None` on the axes.
fn section_var(x: usize, y: usize, hn: usize) -> Option<usize> {
    (x != 0 && y != 0).then(|| (x - 1) * (hn - 1) + (y - 1))
}

/// Equations `δ₁h = A`, `δ₂h = B` on the section unknowns.
fn trivialization_system(e: &BiextCocycle, extra: usize) -> LinearSystem {
    let (gn, hn) = (e.g.order(), e.h.order());
    let (ga, ha) = (e.g.arith(), e.h.arith());
    let mut sys = LinearSystem::new((gn - 1) * (hn - 1) + extra);
    for x in 1..gn {
        for x1 in 1..gn {
            for y in 1..hn {
                let terms = [(section_var(x, y, hn), 1), (section_var(x1, y, hn), 1), (section_var(ga.add(x, x1), y, hn), -1)];
                sys.push(&terms, e.afun.get(&[x, x1, y]));
            }
        }
    }
    for x in 1..gn {
        for y in 1..hn {
            for y1 in 1..hn {
                let terms = [(section_var(x, y, hn), 1), (section_var(x, y1, hn), 1), (section_var(x, ha.add(y, y1), hn), -1)];
                sys.push(&terms, e.bfun.get(&[x, y, y1]));
            }
        }
    }
    sys
}

fn section_from_solution(e: &BiextCocycle, sol: &[usize], limits: &Limits) -> Result<Table> {
    let hn = e.h.order();
    section_table(&e.g, &e.h, &e.a, limits, |t| section_var(t[0], t[1], hn).map_or(0, |v| sol[v]))
}

/// A section `h` with `(A, B) = (δ₁h, δ₂h)`, if there is one.
pub fn is_trivial(e: &BiextCocycle, limits: &Limits) -> Result<Option<Table>> {
    require_valid(e)?;
    let sys = trivialization_system(e, 0);
    match sys.solve(&e.a, limits)? {
        Some(sol) => Ok(Some(section_from_solution(e, &sol, limits)?)),
        None => Ok(None),
    }
}

/// `Aσ(x,x';y) = B(y;x,x')`, `Bσ(x;y,y') = A(y,y';x)`.
pub fn swap_dual(e: &BiextCocycle, limits: &Limits) -> Result<BiextCocycle> {
    require_square(e)?;
    BiextCocycle::from_fns(&e.g, &e.h, &e.a, limits, |t| e.bfun.get(&[t[2], t[0], t[1]]), |t| e.afun.get(&[t[1], t[2], t[0]]))
}

pub fn wedge(e1: &BiextCocycle, e2: &BiextCocycle) -> Result<BiextCocycle> {
    if !e1.same_signature(e2) {
        return Err(Error::Mismatch("biextensions with different signatures".into()));
    }
    Ok(BiextCocycle { afun: e1.afun.add(&e2.afun)?, bfun: e1.bfun.add(&e2.bfun)?, ..e1.clone() })
}

/// `E ∧ σ*E`.
pub fn symmetrization(e: &BiextCocycle, limits: &Limits) -> Result<BiextCocycle> {
    wedge(e, &swap_dual(e, limits)?)
}

/// The diagonal composite `A(x,x';x) + A(x,x';x') + B(x+x';x,x')`, before the
/// cross terms over `(x,x')` and `(x',x)` are cancelled.
pub fn diagonal_route(e: &BiextCocycle, x: usize, x1: usize) -> usize {
    let ga = e.g.arith();
    let ar = e.a.arith();
    ar.sum([e.afun.get(&[x, x1, x]), e.afun.get(&[x, x1, x1]), e.bfun.get(&[ga.add(x, x1), x, x1])])
}

/// Trivialization equations for `E ∧ σ*E` plus `h(x, y) = h(y, x)`.
fn symmetric_trivialization_system(e: &BiextCocycle, extra: usize, limits: &Limits) -> Result<LinearSystem> {
    let w = symmetrization(e, limits)?;
    let mut sys = trivialization_system(&w, extra);
    let n = e.g.order();
    for x in 1..n {
        for y in (x + 1)..n {
            sys.push(&[(section_var(x, y, n), 1), (section_var(y, x, n), -1)], 0);
        }
    }
    Ok(sys)
}

/// A symmetric trivialization of `E ∧ σ*E`.
pub fn antisymmetry_witness(e: &BiextCocycle, limits: &Limits) -> Result<Option<Table>> {
    require_square(e)?;
    require_valid(e)?;
    let sys = symmetric_trivialization_system(e, 0, limits)?;
    match sys.solve(&e.a, limits)? {
        Some(sol) => Ok(Some(section_from_solution(e, &sol, limits)?)),
        None => Ok(None),
    }
}

pub fn is_antisymmetric(e: &BiextCocycle, limits: &Limits) -> Result<bool> {
    Ok(antisymmetry_witness(e, limits)?.is_some())
}

/// A symmetric trivialization `h` of `E ∧ σ*E` together with `φ: G -> A` such
/// that the diagonal cocycle `route - h` equals `δφ`.
pub fn alternating_witness(e: &BiextCocycle, limits: &Limits) -> Result<Option<(Table, Vec<usize>)>> {
    require_square(e)?;
    require_valid(e)?;
    let n = e.g.order();
    let hvars = (n - 1) * (n - 1);
    let mut sys = symmetric_trivialization_system(e, n - 1, limits)?;
    let ga = e.g.arith();
    let phi = |x: usize| (x != 0).then(|| hvars + x - 1);
    for x in 1..n {
        for x1 in 1..n {
            let terms = [(section_var(x, x1, n), 1), (phi(x), 1), (phi(x1), 1), (phi(ga.add(x, x1)), -1)];
            sys.push(&terms, diagonal_route(e, x, x1));
        }
    }
    match sys.solve(&e.a, limits)? {
        Some(sol) => {
            let h = section_from_solution(e, &sol, limits)?;
            let mut p = vec![0; n];
            for (x, v) in p.iter_mut().enumerate().skip(1) {
                *v = sol[hvars + x - 1];
            }
            Ok(Some((h, p)))
        }
        None => Ok(None),
    }
}

pub fn is_alternating(e: &BiextCocycle, limits: &Limits) -> Result<bool> {
    Ok(alternating_witness(e, limits)?.is_some())
}

/// `e(x, x') = route(x, x') - h(x, x')` for a given symmetric trivialization
/// `h` of `E ∧ σ*E`, checked to be a 2-cocycle.
pub fn diagonal_extension_with(e: &BiextCocycle, h: &Table, limits: &Limits) -> Result<Cochain> {
    require_square(e)?;
    let ar = e.a.arith();
    let c = Cochain::from_fn(&e.g, &e.a, 2, limits, |t| ar.sub(diagonal_route(e, t[0], t[1]), h.get(&[t[0], t[1]])))?;
    let ga = e.g.arith();
    let n = e.g.order();
    let bad = crate::par::find_first(n * n * n, |i| {
        let x = [i / (n * n), (i / n) % n, i % n];
        (delta_at(&c, &ga, &ar, &x) != 0).then_some(x)
    });
    if let Some(x) = bad {
        return Err(Error::Consistency(format!(
            "diagonal extension is not a 2-cocycle at {:?}",
            x.iter().map(|&i| e.g.element(i)).collect::<Vec<_>>()
        )));
    }
    Ok(c)
}

/// The diagonal extension, cancelling cross terms with the witness of
/// `is_alternating` when there is one, else with a symmetric trivialization of
/// `E ∧ σ*E`, else not at all.
pub fn diagonal_extension(e: &BiextCocycle, limits: &Limits) -> Result<Cochain> {
    require_square(e)?;
    require_valid(e)?;
    let h = match alternating_witness(e, limits)? {
        Some((h, _)) => h,
        None => match antisymmetry_witness(e, limits)? {
            Some(h) => h,
            None => section_table(&e.g, &e.h, &e.a, limits, |_| 0)?,
        },
    };
    diagonal_extension_with(e, &h, limits)
}

/// All normalized maps `G x G -> A`, in odometer order over the nonzero pairs.
pub fn all_sections(g: &FinAbGroup, a: &FinAbGroup, limits: &Limits) -> Result<Vec<Table>> {
    let n = g.order();
    let free = (n - 1) * (n - 1);
    let total = crate::error::pow_sat(a.order() as u128, free);
    limits.check("section shifts", total)?;
    let an = a.order();
    crate::par::map_indices(total as usize, |code| {
        section_table(g, g, a, limits, |t| {
            let pos = (t[0] - 1) * (n - 1) + (t[1] - 1);
            (code / an.pow((free - 1 - pos) as u32)) % an
        })
    })
    .into_iter()
    .collect()
}

/// Every symmetric braided datum `(a, β)` on `G` with coefficients `A`: all
/// pentagon cocycles `a` and all braidings satisfying both hexagons and
/// `β(x, y) + β(y, x) = 0`.
pub fn symmetric_data(g: &FinAbGroup, a: &FinAbGroup, limits: &Limits) -> Result<Vec<SkeletalMonoidalDatum>> {
    let assocs: Vec<Cochain> = crate::cochain::all_cochains(g, a, 3, limits)?
        .into_iter()
        .map(|c| Ok((cocycle_witness(&c, limits)?.is_none()).then_some(c)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let braidings = all_sections(g, a, limits)?;
    let mut out = Vec::new();
    for assoc in assocs {
        let found: Vec<Option<SkeletalMonoidalDatum>> = crate::par::map_slice(&braidings, |b| {
            let d = SkeletalMonoidalDatum { g: g.clone(), a: a.clone(), assoc: assoc.clone(), braiding: Some(b.clone()), shift: None };
            let ok = symmetry_report(&d).passed() && hexagon_report(&d).map(|r| r.passed()).unwrap_or(false);
            ok.then_some(d)
        });
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

/// For a symmetric braided datum, every section shift gives an alternating
/// commutator biextension whose diagonal cocycle passes its guard.
pub fn final_theorem_check(d: &SkeletalMonoidalDatum, limits: &Limits) -> Result<Report> {
    if d.braiding.is_none() {
        return Err(Error::Precondition("a symmetric braiding is required".into()));
    }
    if let Some(w) = cocycle_witness(&d.assoc, limits)? {
        return Err(Error::Precondition(format!("associator fails the pentagon at {w:?}")));
    }
    for r in [hexagon_report(d)?, symmetry_report(d)] {
        if let Some(w) = r.witnesses.first() {
            return Err(Error::Precondition(format!("{} fails at {:?}", w.equation, w.tuple)));
        }
    }
    let shifts = all_sections(&d.g, &d.a, limits)?;
    let outcomes: Vec<Result<Vec<&'static str>>> = crate::par::map_slice(&shifts, |t| {
        let dt = d.with_shift(Some(t.clone()));
        let e = commutator_biextension(&dt, limits)?;
        let mut failed = Vec::new();
        if !check_biext(&e).passed() {
            failed.push("biext");
            return Ok(failed);
        }
        if !is_alternating(&e, limits)? {
            failed.push("alternating");
        }
        match diagonal_extension(&e, limits) {
            Ok(_) => {}
            Err(Error::Consistency(_)) => failed.push("diagonal-guard"),
            Err(other) => return Err(other),
        }
        Ok(failed)
    });
    let mut ws: Vec<Witness> = Vec::new();
    let n = d.g.order();
    for (t, out) in shifts.iter().zip(outcomes) {
        for eq in out? {
            if ws.iter().any(|w| w.equation == eq) {
                continue;
            }
            let tuple = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).map(|(x, y)| d.a.element(t.get(&[x, y]))).collect();
            ws.push(Witness { equation: eq.to_string(), tuple });
        }
    }
    Ok(Report::from_witnesses(ws).with_message(format!("{} section shifts checked", shifts.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinAbGroup {
        FinAbGroup::cyclic(2)
    }

    fn weil(lim: &Limits) -> BiextCocycle {
        BiextCocycle::from_fns(&z2(), &z2(), &z2(), lim, |t| t[0] * t[1] * t[2], |t| t[0] * t[1] * t[2]).unwrap()
    }

    #[test]
    fn commutator_of_xyz_is_the_weil_cocycle() {
        let lim = Limits::default();
        let a = Cochain::from_fn(&z2(), &z2(), 3, &lim, |x| x[0] * x[1] * x[2]).unwrap();
        let d = SkeletalMonoidalDatum::new(a, None, None).unwrap();
        let e = commutator_biextension(&d, &lim).unwrap();
        assert_eq!(e, weil(&lim));
        assert!(check_biext(&e).passed());
        assert!(is_trivial(&e, &lim).unwrap().is_none());
        assert_eq!(swap_dual(&e, &lim).unwrap(), e);
        assert!(is_alternating(&e, &lim).unwrap());
        assert!(diagonal_extension(&e, &lim).unwrap().is_zero());
    }

    #[test]
    fn coboundaries_are_trivial() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(3);
        let h = section_table(&g, &g, &g, &lim, |t| (t[0] * 2 + t[1]) % 3).unwrap();
        let e = BiextCocycle::coboundary(&h, &lim).unwrap();
        assert!(check_biext(&e).passed());
        let w = is_trivial(&e, &lim).unwrap().unwrap();
        assert_eq!(BiextCocycle::coboundary(&w, &lim).unwrap(), e);
    }

    #[test]
    fn half_weil_is_still_a_biextension() {
        let lim = Limits::default();
        let e = BiextCocycle::from_fns(&z2(), &z2(), &z2(), &lim, |t| t[0] * t[1] * t[2], |_| 0).unwrap();
        assert!(check_biext(&e).passed());
    }

    #[test]
    fn asymmetric_braiding_is_rejected() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(3);
        let a = Cochain::zero(&g, &g, 3, &lim).unwrap();
        let beta = section_table(&g, &g, &g, &lim, |t| (t[0] * t[1]) % 3).unwrap();
        let d = SkeletalMonoidalDatum::new(a, Some(beta), None).unwrap();
        assert!(hexagon_report(&d).unwrap().passed());
        assert!(matches!(final_theorem_check(&d, &lim), Err(Error::Precondition(_))));
    }

    #[test]
    fn bilinear_braiding_on_z2_passes_the_sweep() {
        let lim = Limits::default();
        let a = Cochain::zero(&z2(), &z2(), 3, &lim).unwrap();
        let beta = section_table(&z2(), &z2(), &z2(), &lim, |t| t[0] * t[1]).unwrap();
        let d = SkeletalMonoidalDatum::new(a, Some(beta), None).unwrap();
        assert!(final_theorem_check(&d, &lim).unwrap().passed());
    }
}
