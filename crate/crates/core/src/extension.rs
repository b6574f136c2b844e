//! Categorical extensions as skeletal cocycle data: a pentagon 3-cocycle for
//! monoidal categories, and a pair `(f, θ)` for monoidal bicategories over a
//! Picard groupoid of automorphisms of the unit.

use crate::cochain::{bar_delta, cocycle_witness, Cochain};
use crate::cohomology::cohomology_group;
use crate::error::{Error, Limits, Result};
use crate::group::FinAbGroup;
use crate::pcohom::{kappa_raw, picard_add, picard_cohomology, Backend, PicardCochain};
use crate::picard::PicardGroupoid;
use crate::report::{Classification, Report, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonCatExtension {
    /// objects up to isomorphism
    pub group: FinAbGroup,
    /// automorphisms of the unit
    pub coeff: FinAbGroup,
    /// associator
    pub f: Cochain,
}

impl MonCatExtension {
    pub fn new(group: FinAbGroup, coeff: FinAbGroup, f: Cochain) -> Result<MonCatExtension> {
        if f.group() != &group || f.coeff() != &coeff || f.degree() != 3 {
            return Err(Error::Mismatch(format!("associator must be a 3-cochain on {group} valued in {coeff}")));
        }
        Ok(MonCatExtension { group, coeff, f })
    }

    pub fn zero(group: FinAbGroup, coeff: FinAbGroup, limits: &Limits) -> Result<MonCatExtension> {
        let f = Cochain::zero(&group, &coeff, 3, limits)?;
        Ok(MonCatExtension { group, coeff, f })
    }
}

fn witness(equation: &str, group: &FinAbGroup, idx: &[usize]) -> Witness {
    Witness { equation: equation.into(), tuple: idx.iter().map(|&i| group.element(i)).collect() }
}

pub fn pentagon_report(e: &MonCatExtension, limits: &Limits) -> Result<Report> {
    let w = cocycle_witness(&e.f, limits)?;
    Ok(Report::from_witnesses(w.map(|idx| witness("pentagon", &e.group, &idx)).into_iter().collect()))
}

pub fn check_pentagon(e: &MonCatExtension, limits: &Limits) -> Result<bool> {
    Ok(pentagon_report(e, limits)?.passed())
}

/// Coordinates of `[f]` in `H^3(G, A)`.
pub fn classify_moncat(e: &MonCatExtension, limits: &Limits) -> Result<Classification> {
    if let Some(w) = cocycle_witness(&e.f, limits)? {
        return Err(Error::Precondition(format!("pentagon fails at {:?}", elements(&e.group, &w))));
    }
    let h = cohomology_group(&e.group, &e.coeff, 3, limits)?;
    Ok(Classification::new(&h.invariants, h.coordinates(&e.f)?))
}

pub fn baer_sum_moncat(e1: &MonCatExtension, e2: &MonCatExtension) -> Result<MonCatExtension> {
    if e1.group != e2.group || e1.coeff != e2.coeff {
        return Err(Error::Mismatch("extensions of different groups".into()));
    }
    Ok(MonCatExtension { group: e1.group.clone(), coeff: e1.coeff.clone(), f: e1.f.add(&e2.f)? })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonBicatExtension {
    pub base: PicardGroupoid,
    pub group: FinAbGroup,
    /// objects-valued associator, degree 3
    pub f: Cochain,
    /// pentagonator, degree 4
    pub theta: Cochain,
}

impl MonBicatExtension {
    pub fn new(base: PicardGroupoid, group: FinAbGroup, f: Cochain, theta: Cochain) -> Result<MonBicatExtension> {
        let ok = f.group() == &group
            && theta.group() == &group
            && f.coeff() == base.objects()
            && theta.coeff() == base.automorphisms()
            && f.degree() == 3
            && theta.degree() == 4;
        if !ok {
            return Err(Error::Mismatch(format!(
                "need f: G^3 -> {} and θ: G^4 -> {} over G = {group}",
                base.objects(),
                base.automorphisms()
            )));
        }
        Ok(MonBicatExtension { base, group, f, theta })
    }

    pub fn zero(base: PicardGroupoid, group: FinAbGroup, limits: &Limits) -> Result<MonBicatExtension> {
        let f = Cochain::zero(&group, base.objects(), 3, limits)?;
        let theta = Cochain::zero(&group, base.automorphisms(), 4, limits)?;
        Ok(MonBicatExtension { base, group, f, theta })
    }

    pub fn as_picard_cochain(&self) -> PicardCochain {
        PicardCochain { p: self.f.clone(), g: self.theta.clone() }
    }
}

/// `δf = 0` (equation `cocycle-f`) and `δθ = 0` (equation `k5`).
pub fn k5_report(e: &MonBicatExtension, limits: &Limits) -> Result<Report> {
    let mut ws = Vec::new();
    if let Some(w) = cocycle_witness(&e.f, limits)? {
        ws.push(witness("cocycle-f", &e.group, &w));
    }
    if let Some(w) = cocycle_witness(&e.theta, limits)? {
        ws.push(witness("k5", &e.group, &w));
    }
    Ok(Report::from_witnesses(ws))
}

pub fn check_k5(e: &MonBicatExtension, limits: &Limits) -> Result<bool> {
    Ok(k5_report(e, limits)?.passed())
}

/// `δf = 0` and `δθ = κ(f)`; the latter is the plain K5 equation when the
/// symmetry invariant vanishes.
pub fn twisted_k5_report(e: &MonBicatExtension, limits: &Limits) -> Result<Report> {
    if let Some(w) = cocycle_witness(&e.f, limits)? {
        return Ok(Report::from_witnesses(vec![witness("cocycle-f", &e.group, &w)]));
    }
    let defect = bar_delta(&e.theta, limits)?.sub(&kappa_raw(&e.f, &e.base, limits)?)?;
    Ok(Report::from_witnesses(defect.first_nonzero().map(|w| witness("k5", &e.group, &w)).into_iter().collect()))
}

/// Coordinates of `[(f, θ)]` in `H^3(G, 𝒜)`.
pub fn classify_bicat(e: &MonBicatExtension, limits: &Limits) -> Result<Classification> {
    let r = twisted_k5_report(e, limits)?;
    if let Some(w) = r.witnesses.first() {
        return Err(Error::Precondition(format!("{} fails at {:?}", w.equation, w.tuple)));
    }
    let h = picard_cohomology(&e.group, &e.base, 3, Backend::Auto, limits)?;
    Ok(Classification::new(&h.invariants, h.coordinates(&e.as_picard_cochain())?))
}

/// Sum of cocycle data. Over a base with nonzero symmetry invariant the
/// pentagonator picks up the correction `ω(f1, f2)`, without which the sum
/// would not be a cocycle; otherwise this is the pointwise sum.
pub fn baer_sum_bicat(e1: &MonBicatExtension, e2: &MonBicatExtension, limits: &Limits) -> Result<MonBicatExtension> {
    if e1.group != e2.group || e1.base != e2.base {
        return Err(Error::Mismatch("extensions over different data".into()));
    }
    let s = picard_add(&e1.as_picard_cochain(), &e2.as_picard_cochain(), &e1.base, limits)?;
    Ok(MonBicatExtension { base: e1.base.clone(), group: e1.group.clone(), f: s.p, theta: s.g })
}

fn elements(g: &FinAbGroup, idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter().map(|&i| g.element(i)).collect()
}
