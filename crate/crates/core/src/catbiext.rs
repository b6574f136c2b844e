//! Categorical biextensions over a Picard groupoid `(B, A, c)`, and their
//! symmetric refinement with the morphisms `μ` and the syllepsis `γ`.

use crate::error::{Error, Limits, Result};
use crate::group::{Arith, FinAbGroup};
use crate::picard::PicardGroupoid;
use crate::report::{Equation, Report, Witness};
use crate::table::{Normalization, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatBiextCocycle {
    pub g: FinAbGroup,
    pub h: FinAbGroup,
    pub base: PicardGroupoid,
    /// `G x G x H -> B`
    pub afun: Table,
    /// `G x H x H -> B`
    pub bfun: Table,
    /// `G x G x G x H -> A`
    pub theta1: Table,
    /// `G x H x H x H -> A`
    pub theta2: Table,
    /// `G x G x H x H -> A`
    pub chi: Table,
}

fn normalized(slots: &[&FinAbGroup], coeff: &FinAbGroup, limits: &Limits) -> Result<Table> {
    Table::zero(slots.iter().map(|g| (*g).clone()).collect(), coeff.clone(), Normalization::AnySlotZero, limits)
}

fn fits(t: &Table, slots: &[&FinAbGroup], coeff: &FinAbGroup) -> bool {
    t.arity() == slots.len()
        && t.slots().iter().zip(slots).all(|(s, g)| s == *g)
        && t.coeff() == coeff
        && t.normalization() == Normalization::AnySlotZero
}

impl CatBiextCocycle {
    pub fn zero(g: &FinAbGroup, h: &FinAbGroup, base: &PicardGroupoid, limits: &Limits) -> Result<CatBiextCocycle> {
        let (b, a) = (base.objects(), base.automorphisms());
        Ok(CatBiextCocycle {
            g: g.clone(),
            h: h.clone(),
            base: base.clone(),
            afun: normalized(&[g, g, h], b, limits)?,
            bfun: normalized(&[g, h, h], b, limits)?,
            theta1: normalized(&[g, g, g, h], a, limits)?,
            theta2: normalized(&[g, h, h, h], a, limits)?,
            chi: normalized(&[g, g, h, h], a, limits)?,
        })
    }

    pub fn validate_shape(&self) -> Result<()> {
        let (g, h) = (&self.g, &self.h);
        let (b, a) = (self.base.objects(), self.base.automorphisms());
        let ok = fits(&self.afun, &[g, g, h], b)
            && fits(&self.bfun, &[g, h, h], b)
            && fits(&self.theta1, &[g, g, g, h], a)
            && fits(&self.theta2, &[g, h, h, h], a)
            && fits(&self.chi, &[g, g, h, h], a);
        if ok {
            Ok(())
        } else {
            Err(Error::Mismatch("categorical biextension tables do not match G, H and the base".into()))
        }
    }
}

/// `χ(x,x'+x'';y,y') + χ(x',x'';y,y') - χ(x+x',x'';y,y') - χ(x,x';y,y')`.
#[allow(clippy::too_many_arguments)]
pub fn residual_32(chi: &Table, ga: &Arith, ar: &Arith, x: usize, x1: usize, x2: usize, y: usize, y1: usize) -> usize {
    let l = ar.add(chi.get(&[x, ga.add(x1, x2), y, y1]), chi.get(&[x1, x2, y, y1]));
    let r = ar.add(chi.get(&[ga.add(x, x1), x2, y, y1]), chi.get(&[x, x1, y, y1]));
    ar.sub(l, r)
}

/// `χ(x,x';y',y'') + χ(x,x';y,y'+y'') - χ(x,x';y,y') - χ(x,x';y+y',y'')`.
#[allow(clippy::too_many_arguments)]
pub fn residual_23(chi: &Table, ha: &Arith, ar: &Arith, x: usize, x1: usize, y: usize, y1: usize, y2: usize) -> usize {
    let l = ar.add(chi.get(&[x, x1, y1, y2]), chi.get(&[x, x1, y, ha.add(y1, y2)]));
    let r = ar.add(chi.get(&[x, x1, y, y1]), chi.get(&[x, x1, ha.add(y, y1), y2]));
    ar.sub(l, r)
}

/// Pentagon residual of a degree-3 cochain in four consecutive slots of a
/// table, the other slots held fixed: `f(b,c,d) - f(a+b,c,d) + f(a,b+c,d) - f(a,b,c+d) + f(a,b,c)`.
fn pentagon_in(ga: &Arith, ar: &Arith, f: impl Fn(usize, usize, usize) -> usize, a: usize, b: usize, c: usize, d: usize) -> usize {
    let s = ar.sub(f(b, c, d), f(ga.add(a, b), c, d));
    let s = ar.add(s, f(a, ga.add(b, c), d));
    let s = ar.sub(s, f(a, b, ga.add(c, d)));
    ar.add(s, f(a, b, c))
}

/// Object-level biextension conditions in `B`, the per-slot pentagons for
/// `θ1` and `θ2`, and the `(3,2)`/`(2,3)` coherences for `χ`.
pub fn check_cat_biext(e: &CatBiextCocycle) -> Result<Report> {
    e.validate_shape()?;
    let (ga, ha) = (e.g.arith(), e.h.arith());
    let br = e.base.objects().arith();
    let ar = e.base.automorphisms().arith();
    let (af, bf) = (&e.afun, &e.bfun);
    let (g, h) = (&e.g, &e.h);
    let mut ws: Vec<Witness> = Vec::new();
    ws.extend(Equation { id: "object-A", slots: vec![g, g, g, h] }.check(|t| {
        let (x, x1, x2, y) = (t[0], t[1], t[2], t[3]);
        let l = br.add(af.get(&[x, x1, y]), af.get(&[ga.add(x, x1), x2, y]));
        br.sub(l, br.add(af.get(&[x1, x2, y]), af.get(&[x, ga.add(x1, x2), y])))
    }));
    ws.extend(Equation { id: "object-B", slots: vec![g, h, h, h] }.check(|t| {
        let (x, y, y1, y2) = (t[0], t[1], t[2], t[3]);
        let l = br.add(bf.get(&[x, y, y1]), bf.get(&[x, ha.add(y, y1), y2]));
        br.sub(l, br.add(bf.get(&[x, y1, y2]), bf.get(&[x, y, ha.add(y1, y2)])))
    }));
    ws.extend(Equation { id: "object-AB", slots: vec![g, g, h, h] }.check(|t| {
        let (x, x1, y, y1) = (t[0], t[1], t[2], t[3]);
        let l = br.sum([af.get(&[x, x1, y]), af.get(&[x, x1, y1]), bf.get(&[ga.add(x, x1), y, y1])]);
        br.sub(l, br.sum([bf.get(&[x, y, y1]), bf.get(&[x1, y, y1]), af.get(&[x, x1, ha.add(y, y1)])]))
    }));
    ws.extend(
        Equation { id: "theta1", slots: vec![g, g, g, g, h] }
            .check(|t| pentagon_in(&ga, &ar, |p, q, r| e.theta1.get(&[p, q, r, t[4]]), t[0], t[1], t[2], t[3])),
    );
    ws.extend(
        Equation { id: "theta2", slots: vec![g, h, h, h, h] }
            .check(|t| pentagon_in(&ha, &ar, |p, q, r| e.theta2.get(&[t[0], p, q, r]), t[1], t[2], t[3], t[4])),
    );
    ws.extend(Equation { id: "(3,2)", slots: vec![g, g, g, h, h] }.check(|t| residual_32(&e.chi, &ga, &ar, t[0], t[1], t[2], t[3], t[4])));
    ws.extend(Equation { id: "(2,3)", slots: vec![g, g, h, h, h] }.check(|t| residual_23(&e.chi, &ha, &ar, t[0], t[1], t[2], t[3], t[4])));
    Ok(Report::from_witnesses(ws))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBiextDatum {
    pub bi: CatBiextCocycle,
    /// `G x G x H -> A`
    pub mu1: Table,
    /// `G x H x H -> A`
    pub mu2: Table,
    /// `G x G x H -> A`
    pub gamma1: Table,
    /// `G x H x H -> A`
    pub gamma2: Table,
}

impl SymBiextDatum {
    pub fn zero(g: &FinAbGroup, h: &FinAbGroup, base: &PicardGroupoid, limits: &Limits) -> Result<SymBiextDatum> {
        let a = base.automorphisms();
        Ok(SymBiextDatum {
            bi: CatBiextCocycle::zero(g, h, base, limits)?,
            mu1: normalized(&[g, g, h], a, limits)?,
            mu2: normalized(&[g, h, h], a, limits)?,
            gamma1: normalized(&[g, g, h], a, limits)?,
            gamma2: normalized(&[g, h, h], a, limits)?,
        })
    }

    pub fn validate_shape(&self) -> Result<()> {
        self.bi.validate_shape()?;
        let (g, h) = (&self.bi.g, &self.bi.h);
        let a = self.bi.base.automorphisms();
        let ok = fits(&self.mu1, &[g, g, h], a)
            && fits(&self.mu2, &[g, h, h], a)
            && fits(&self.gamma1, &[g, g, h], a)
            && fits(&self.gamma2, &[g, h, h], a);
        if ok {
            Ok(())
        } else {
            Err(Error::Mismatch("μ and γ tables do not match G, H and the base".into()))
        }
    }
}

/// The `(2,2)` residual:
/// `μ2(x+x';y,y') + μ1(x,x';y) + μ1(x,x';y') + χ(x,x';y,y')`
/// minus `χ(x',x;y',y) + μ1(x,x';y+y') + μ2(x;y,y') + μ2(x';y,y')`.
#[allow(clippy::too_many_arguments)]
pub fn residual_22(s: &SymBiextDatum, ga: &Arith, ha: &Arith, ar: &Arith, x: usize, x1: usize, y: usize, y1: usize) -> usize {
    let l = ar.sum([s.mu2.get(&[ga.add(x, x1), y, y1]), s.mu1.get(&[x, x1, y]), s.mu1.get(&[x, x1, y1]), s.bi.chi.get(&[x, x1, y, y1])]);
    let r = ar.sum([s.bi.chi.get(&[x1, x, y1, y]), s.mu1.get(&[x, x1, ha.add(y, y1)]), s.mu2.get(&[x, y, y1]), s.mu2.get(&[x1, y, y1])]);
    ar.sub(l, r)
}

/// Symmetry of the object-level cocycles, the `μ`/`γ` interaction, the
/// `(3,1)` coherence and the `(2,2)` coherence, each evaluated literally.
/// In additive coefficients the `μ`/`γ` equations reduce to symmetry of `γ`
/// and the `(3,1)` equations hold identically.
pub fn check_symmetric(s: &SymBiextDatum) -> Result<Report> {
    s.validate_shape()?;
    let e = &s.bi;
    let (g, h) = (&e.g, &e.h);
    let (ga, ha) = (g.arith(), h.arith());
    let br = e.base.objects().arith();
    let ar = e.base.automorphisms().arith();
    let mut ws: Vec<Witness> = Vec::new();
    ws.extend(
        Equation { id: "symmetric-A", slots: vec![g, g, h] }
            .check(|t| br.sub(e.afun.get(&[t[0], t[1], t[2]]), e.afun.get(&[t[1], t[0], t[2]]))),
    );
    ws.extend(
        Equation { id: "symmetric-B", slots: vec![g, h, h] }
            .check(|t| br.sub(e.bfun.get(&[t[0], t[1], t[2]]), e.bfun.get(&[t[0], t[2], t[1]]))),
    );
    ws.extend(Equation { id: "syllepsis-1", slots: vec![g, g, h] }.check(|t| {
        let (x, x1, y) = (t[0], t[1], t[2]);
        let l = ar.add(s.mu1.get(&[x, x1, y]), s.gamma1.get(&[x1, x, y]));
        ar.sub(l, ar.add(s.gamma1.get(&[x, x1, y]), s.mu1.get(&[x, x1, y])))
    }));
    ws.extend(Equation { id: "syllepsis-2", slots: vec![g, h, h] }.check(|t| {
        let (x, y, y1) = (t[0], t[1], t[2]);
        let l = ar.add(s.mu2.get(&[x, y, y1]), s.gamma2.get(&[x, y1, y]));
        ar.sub(l, ar.add(s.gamma2.get(&[x, y, y1]), s.mu2.get(&[x, y, y1])))
    }));
    ws.extend(Equation { id: "(3,1)-1", slots: vec![g, g, g, h] }.check(|t| {
        let (x, x1, x2, y) = (t[0], t[1], t[2], t[3]);
        let l = ar.add(s.mu1.get(&[ga.add(x, x1), x2, y]), s.mu1.get(&[x, x1, y]));
        ar.sub(l, ar.add(s.mu1.get(&[x, x1, y]), s.mu1.get(&[ga.add(x, x1), x2, y])))
    }));
    ws.extend(Equation { id: "(3,1)-2", slots: vec![g, h, h, h] }.check(|t| {
        let (x, y, y1, y2) = (t[0], t[1], t[2], t[3]);
        let l = ar.add(s.mu2.get(&[x, ha.add(y, y1), y2]), s.mu2.get(&[x, y, y1]));
        ar.sub(l, ar.add(s.mu2.get(&[x, y, y1]), s.mu2.get(&[x, ha.add(y, y1), y2])))
    }));
    ws.extend(Equation { id: "(2,2)", slots: vec![g, g, h, h] }.check(|t| residual_22(s, &ga, &ha, &ar, t[0], t[1], t[2], t[3])));
    Ok(Report::from_witnesses(ws))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinAbGroup {
        FinAbGroup::cyclic(2)
    }

    #[test]
    fn zero_data_pass() {
        let lim = Limits::default();
        let base = PicardGroupoid::suspension(&z2());
        assert!(check_cat_biext(&CatBiextCocycle::zero(&z2(), &z2(), &base, &lim).unwrap()).unwrap().passed());
        assert!(check_symmetric(&SymBiextDatum::zero(&z2(), &z2(), &base, &lim).unwrap()).unwrap().passed());
    }

    #[test]
    fn nonsymmetric_gamma_fails_the_syllepsis_equation() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(3);
        let base = PicardGroupoid::suspension(&z2());
        let mut s = SymBiextDatum::zero(&g, &g, &base, &lim).unwrap();
        s.gamma1.set(&[1, 2, 1], 1).unwrap();
        let r = check_symmetric(&s).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].equation, "syllepsis-1");
    }

    #[test]
    fn diagonal_chi_is_invisible_to_the_22_equation() {
        let lim = Limits::default();
        let base = PicardGroupoid::suspension(&z2());
        let mut s = SymBiextDatum::zero(&z2(), &z2(), &base, &lim).unwrap();
        s.bi.chi.set(&[1, 1, 1, 1], 1).unwrap();
        assert!(check_symmetric(&s).unwrap().passed());
    }
}
