//! Cubical data: θ indexed by 2x2 matrices, the `(4,4)` equation, the
//! `(4,2)`/`(2,4)` equations tying θ to χ, and their specializations.
//!
//! A matrix `(x y / z t)` is stored row-major in four slots.

use crate::catbiext::{residual_23, residual_32};
use crate::cochain::Cochain;
use crate::error::{Error, Limits, Result};
use crate::group::{Arith, FinAbGroup};
use crate::report::{Equation, Report, Witness};
use crate::table::{Normalization, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMatrix {
    pub g: FinAbGroup,
    pub a: FinAbGroup,
    /// zero on matrices with an all-zero row or column
    pub theta: Table,
}

impl ThetaMatrix {
    pub fn new(theta: Table) -> Result<ThetaMatrix> {
        let g = theta.slots().first().cloned().ok_or_else(|| Error::Mismatch("θ needs four slots".into()))?;
        if theta.arity() != 4 || theta.slots().iter().any(|s| s != &g) || theta.normalization() != Normalization::MatrixDegenerate {
            return Err(Error::Mismatch("θ must be indexed by 2x2 matrices over one group".into()));
        }
        Ok(ThetaMatrix { g, a: theta.coeff().clone(), theta })
    }

    pub fn from_fn(g: &FinAbGroup, a: &FinAbGroup, limits: &Limits, f: impl Fn(&[usize]) -> usize + Sync + Send) -> Result<ThetaMatrix> {
        let theta = Table::from_fn(vec![g.clone(); 4], a.clone(), Normalization::MatrixDegenerate, limits, f)?;
        Ok(ThetaMatrix { g: g.clone(), a: a.clone(), theta })
    }

    /// Reads a normalized 4-cochain `θ(x, y, z, t)` as `θ(x y / z t)`.
    pub fn from_cochain(c: &Cochain, limits: &Limits) -> Result<ThetaMatrix> {
        if c.degree() != 4 {
            return Err(Error::Mismatch("need a 4-cochain".into()));
        }
        Self::from_fn(c.group(), c.coeff(), limits, |t| c.get(t))
    }

    fn at(&self, x: usize, y: usize, z: usize, t: usize) -> usize {
        self.theta.get(&[x, y, z, t])
    }
}

/// The `(4,4)` residual at `(x, y, z, t, a, b, c, d)`, the two matrices being
/// `(x y / z t)` and `(a b / c d)`.
pub fn residual_44(th: &ThetaMatrix, ga: &Arith, ar: &Arith, v: &[usize]) -> usize {
    let (x, y, z, t, a, b, c, d) = (v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    let s = |p, q| ga.add(p, q);
    let l = ar.sum([
        th.at(s(x, y), s(z, t), s(a, b), s(c, d)),
        th.at(x, y, a, b),
        th.at(z, t, c, d),
        th.at(s(x, a), s(y, b), s(z, c), s(t, d)),
    ]);
    let r = ar.sum([th.at(x, y, z, t), th.at(a, b, c, d), th.at(s(x, z), s(y, t), s(a, c), s(b, d)), th.at(x, z, a, c), th.at(y, t, b, d)]);
    ar.sub(l, r)
}

pub fn check_theta_44(th: &ThetaMatrix) -> Report {
    let (ga, ar) = (th.g.arith(), th.a.arith());
    Report::from_witnesses(Equation { id: "(4,4)", slots: vec![&th.g; 8] }.check(|v| residual_44(th, &ga, &ar, v)))
}

/// Which matrix entries are set to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// lower-left entry: the associativity-shaped relation
    LowerLeft,
    /// both diagonal entries: the commutativity-shaped relation
    Diagonal,
}

impl Specialization {
    /// Positions within a row-major 2x2 matrix.
    pub fn zeroed(self) -> &'static [usize] {
        match self {
            Specialization::LowerLeft => &[2],
            Specialization::Diagonal => &[0, 3],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Specialization::LowerLeft => "z=0",
            Specialization::Diagonal => "x=t=0",
        }
    }
}

/// Objects-valued `c: G x G -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CDatum {
    pub g: FinAbGroup,
    pub b: FinAbGroup,
    pub c: Table,
}

impl CDatum {
    pub fn from_fn(g: &FinAbGroup, b: &FinAbGroup, limits: &Limits, f: impl Fn(&[usize]) -> usize + Sync + Send) -> Result<CDatum> {
        let c = Table::from_fn(vec![g.clone(), g.clone()], b.clone(), Normalization::AnySlotZero, limits, f)?;
        Ok(CDatum { g: g.clone(), b: b.clone(), c })
    }

    pub fn new(c: Table) -> Result<CDatum> {
        if c.arity() != 2 || c.slots()[0] != c.slots()[1] || c.normalization() != Normalization::AnySlotZero {
            return Err(Error::Mismatch("c must be a normalized map G x G -> B".into()));
        }
        Ok(CDatum { g: c.slots()[0].clone(), b: c.coeff().clone(), c })
    }
}

/// Source minus target of the cube's θ-face over `(x y / z t)`:
/// `c(x+y,z+t) + c(x,y) + c(z,t) - c(x+z,y+t) - c(x,z) - c(y,t)`.
pub fn q2_mismatch(c: &CDatum, ga: &Arith, br: &Arith, m: &[usize]) -> usize {
    let (x, y, z, t) = (m[0], m[1], m[2], m[3]);
    let src = br.sum([c.c.get(&[ga.add(x, y), ga.add(z, t)]), c.c.get(&[x, y]), c.c.get(&[z, t])]);
    let tgt = br.sum([c.c.get(&[ga.add(x, z), ga.add(y, t)]), c.c.get(&[x, z]), c.c.get(&[y, t])]);
    br.sub(src, tgt)
}

/// Restricts the `(4,4)` equation to matrices with the given entries zero in
/// both layers and, when `c` is given, the face-typing identity likewise.
pub fn theta_specialize(th: &ThetaMatrix, c: Option<&CDatum>, mask: Specialization) -> Result<Report> {
    let zeroed = mask.zeroed();
    let free4: Vec<usize> = (0..4).filter(|p| !zeroed.contains(p)).collect();
    let (ga, ar) = (th.g.arith(), th.a.arith());
    let expand = |k: usize, small: &[usize]| -> Vec<usize> {
        let mut full = vec![0; 4 * k];
        for layer in 0..k {
            for (j, &p) in free4.iter().enumerate() {
                full[4 * layer + p] = small[layer * free4.len() + j];
            }
        }
        full
    };
    let mut ws: Vec<Witness> = Vec::new();
    let id44 = format!("(4,4)|{}", mask.label());
    let eq = Equation { id: &id44, slots: vec![&th.g; 2 * free4.len()] };
    if let Some(idx) = eq.first_failure(|v| residual_44(th, &ga, &ar, &expand(2, v))) {
        let full = expand(2, &idx);
        ws.push(Witness { equation: id44.clone(), tuple: full.iter().map(|&i| th.g.element(i)).collect() });
    }
    if let Some(c) = c {
        if c.g != th.g {
            return Err(Error::Mismatch("c and θ live over different groups".into()));
        }
        let br = c.b.arith();
        let idc = format!("q2|{}", mask.label());
        let eq = Equation { id: &idc, slots: vec![&th.g; free4.len()] };
        if let Some(idx) = eq.first_failure(|v| q2_mismatch(c, &ga, &br, &expand(1, v))) {
            let full = expand(1, &idx);
            ws.push(Witness { equation: idc.clone(), tuple: full.iter().map(|&i| th.g.element(i)).collect() });
        }
    }
    Ok(Report::from_witnesses(ws))
}

/// The cube with faces labelled by `c` and centre by θ exists when every
/// θ-face has equal source and target in `B`; θ's own values are then
/// arbitrary automorphisms.
pub fn build_q2_from_extension(c: &CDatum, th: &ThetaMatrix) -> Result<Report> {
    if c.g != th.g {
        return Err(Error::Mismatch("c and θ live over different groups".into()));
    }
    let (ga, br) = (c.g.arith(), c.b.arith());
    Ok(Report::from_witnesses(Equation { id: "q2-face", slots: vec![&c.g; 4] }.check(|m| q2_mismatch(c, &ga, &br, m))))
}

/// θ and χ data for the `(4,2)` and `(2,4)` equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiQData {
    pub g: FinAbGroup,
    pub h: FinAbGroup,
    pub a: FinAbGroup,
    /// `G x G x H -> A`
    pub f: Table,
    /// `G x H x H -> A`
    pub gfun: Table,
    /// `θ((x x' / x'' x'''); y)`, zero when any slot is zero
    pub theta_row: Table,
    /// `θ(x; (y y' / y'' y'''))`, zero when any slot is zero
    pub theta_col: Table,
    /// `G x G x H x H -> A`
    pub chi: Table,
}

impl BiQData {
    pub fn zero(g: &FinAbGroup, h: &FinAbGroup, a: &FinAbGroup, limits: &Limits) -> Result<BiQData> {
        let t = |slots: Vec<&FinAbGroup>| Table::zero(slots.into_iter().cloned().collect(), a.clone(), Normalization::AnySlotZero, limits);
        Ok(BiQData {
            g: g.clone(),
            h: h.clone(),
            a: a.clone(),
            f: t(vec![g, g, h])?,
            gfun: t(vec![g, h, h])?,
            theta_row: t(vec![g, g, g, g, h])?,
            theta_col: t(vec![g, h, h, h, h])?,
            chi: t(vec![g, g, h, h])?,
        })
    }

    pub fn validate_shape(&self) -> Result<()> {
        let (g, h) = (&self.g, &self.h);
        let fits = |t: &Table, slots: &[&FinAbGroup]| {
            t.arity() == slots.len()
                && t.slots().iter().zip(slots).all(|(s, x)| s == *x)
                && t.coeff() == &self.a
                && t.normalization() == Normalization::AnySlotZero
        };
        let ok = fits(&self.f, &[g, g, h])
            && fits(&self.gfun, &[g, h, h])
            && fits(&self.theta_row, &[g, g, g, g, h])
            && fits(&self.theta_col, &[g, h, h, h, h])
            && fits(&self.chi, &[g, g, h, h]);
        if ok {
            Ok(())
        } else {
            Err(Error::Mismatch("cube data tables do not match G, H, A".into()))
        }
    }
}

/// The `(4,2)` residual at `(x, x', x'', x''', y, y')`.
pub fn residual_42(d: &BiQData, ga: &Arith, ha: &Arith, ar: &Arith, v: &[usize]) -> usize {
    let (x, x1, x2, x3, y, y1) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    let chi = |p, q| d.chi.get(&[p, q, y, y1]);
    let th = |w| d.theta_row.get(&[x, x1, x2, x3, w]);
    let l = ar.sum([chi(ga.add(x, x1), ga.add(x2, x3)), chi(x, x1), chi(x2, x3), th(ha.add(y, y1))]);
    let r = ar.sum([th(y), th(y1), chi(ga.add(x, x2), ga.add(x1, x3)), chi(x, x2), chi(x1, x3)]);
    ar.sub(l, r)
}

/// The `(2,4)` residual at `(x, x', y, y', y'', y''')`: the mirror of `(4,2)`.
pub fn residual_24(d: &BiQData, ga: &Arith, ha: &Arith, ar: &Arith, v: &[usize]) -> usize {
    let (x, x1, y, y1, y2, y3) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    let chi = |p, q| d.chi.get(&[x, x1, p, q]);
    let th = |w| d.theta_col.get(&[w, y, y1, y2, y3]);
    let l = ar.sum([chi(ha.add(y, y1), ha.add(y2, y3)), chi(y, y1), chi(y2, y3), th(ga.add(x, x1))]);
    let r = ar.sum([th(x), th(x1), chi(ha.add(y, y2), ha.add(y1, y3)), chi(y, y2), chi(y1, y3)]);
    ar.sub(l, r)
}

pub fn check_42(d: &BiQData) -> Result<Report> {
    d.validate_shape()?;
    let (ga, ha, ar) = (d.g.arith(), d.h.arith(), d.a.arith());
    let (g, h) = (&d.g, &d.h);
    Ok(Report::from_witnesses(Equation { id: "(4,2)", slots: vec![g, g, g, g, h, h] }.check(|v| residual_42(d, &ga, &ha, &ar, v))))
}

pub fn check_24(d: &BiQData) -> Result<Report> {
    d.validate_shape()?;
    let (ga, ha, ar) = (d.g.arith(), d.h.arith(), d.a.arith());
    let (g, h) = (&d.g, &d.h);
    Ok(Report::from_witnesses(Equation { id: "(2,4)", slots: vec![g, g, h, h, h, h] }.check(|v| residual_24(d, &ga, &ha, &ar, v))))
}

/// Compares the `(4,2)` residual with the upper-right entry `x'` set to zero
/// against the `(3,2)` residual at `(x, x'', x''')`, pointwise; a witness is
/// a tuple `(x, x'', x''', y, y')` where they differ.
pub fn specialize_42_to_32(d: &BiQData) -> Result<Report> {
    d.validate_shape()?;
    let (ga, ha, ar) = (d.g.arith(), d.h.arith(), d.a.arith());
    let (g, h) = (&d.g, &d.h);
    Ok(Report::from_witnesses(Equation { id: "(4,2)->(3,2)", slots: vec![g, g, g, h, h] }.check(|v| {
        let r42 = residual_42(d, &ga, &ha, &ar, &[v[0], 0, v[1], v[2], v[3], v[4]]);
        ar.sub(r42, residual_32(&d.chi, &ga, &ar, v[0], v[1], v[2], v[3], v[4]))
    })))
}

/// The mirror: `(2,4)` with `y'` zero against `(2,3)` at `(y, y'', y''')`.
pub fn specialize_24_to_23(d: &BiQData) -> Result<Report> {
    d.validate_shape()?;
    let (ga, ha, ar) = (d.g.arith(), d.h.arith(), d.a.arith());
    let (g, h) = (&d.g, &d.h);
    Ok(Report::from_witnesses(Equation { id: "(2,4)->(2,3)", slots: vec![g, g, h, h, h] }.check(|v| {
        let r24 = residual_24(d, &ga, &ha, &ar, &[v[0], v[1], v[2], 0, v[3], v[4]]);
        ar.sub(r24, residual_23(&d.chi, &ha, &ar, v[0], v[1], v[2], v[3], v[4]))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinAbGroup {
        FinAbGroup::cyclic(2)
    }

    #[test]
    fn bilinear_seeds_on_z2() {
        let lim = Limits::default();
        let off = ThetaMatrix::from_fn(&z2(), &z2(), &lim, |m| m[1] * m[2]).unwrap();
        assert!(check_theta_44(&off).passed());
        let diag = ThetaMatrix::from_fn(&z2(), &z2(), &lim, |m| m[0] * m[3]).unwrap();
        assert!(!check_theta_44(&diag).passed());
        for mask in [Specialization::LowerLeft, Specialization::Diagonal] {
            assert!(theta_specialize(&off, None, mask).unwrap().passed());
        }
    }

    #[test]
    fn specializations_agree_on_zero_data() {
        let lim = Limits::default();
        let d = BiQData::zero(&z2(), &z2(), &z2(), &lim).unwrap();
        assert!(check_42(&d).unwrap().passed());
        assert!(check_24(&d).unwrap().passed());
        assert!(specialize_42_to_32(&d).unwrap().passed());
        assert!(specialize_24_to_23(&d).unwrap().passed());
    }

    #[test]
    fn asymmetric_c_is_caught_by_the_diagonal_face() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(3);
        let c = CDatum::from_fn(&g, &g, &lim, |t| usize::from(t == [1, 2])).unwrap();
        let th = ThetaMatrix::from_fn(&g, &g, &lim, |_| 0).unwrap();
        let r = build_q2_from_extension(&c, &th).unwrap();
        assert!(!r.passed());
        let comm = theta_specialize(&th, Some(&c), Specialization::Diagonal).unwrap();
        assert_eq!(comm.witnesses[0].equation, "q2|x=t=0");
    }
}
