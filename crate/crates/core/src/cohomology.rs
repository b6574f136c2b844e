//! Cohomology of a finite abelian group with trivial coefficients in a finite
//! abelian group, from the normalized bar complex.
//!
//! For each cyclic coefficient factor `Z/m`, the Smith form `U D_n V = diag(d)`
//! of the integer coboundary matrix gives the cocycle lattice directly:
//! it is spanned by the columns of `V diag(k)` with `k_i = m / gcd(d_i, m)`.
//! Coboundaries (plus `m Z^N`) are then expressed in that basis and a second
//! Smith form of the coordinate matrix yields invariants, representatives and
//! a coordinate map.

use crate::cochain::{face_i, free_count, free_position, free_tuples, Cochain};
use crate::error::{Error, Limits, Result};
use crate::group::{gcd, FinAbGroup, InvariantFactors};
use crate::lattice::{Lattice, ModSolver, Subquotient};
use crate::snf::{smith_normal_form, Mat, Want};

/// Integer matrix of `δ: C^n -> C^{n+1}` on nondegenerate tuples.
pub fn coboundary_matrix(group: &FinAbGroup, n: usize, limits: &Limits) -> Result<Mat> {
    let rows = free_tuples(group, n + 1, limits)?;
    let cols = free_count(group, n) as usize;
    limits.check("coboundary matrix entries", (rows.len() as u128) * (cols as u128))?;
    let ar = group.arith();
    Ok(crate::par::map_slice(&rows, |x| {
        let mut row = vec![0i128; cols];
        for i in 0..=n + 1 {
            let y = face_i(&ar, x, i);
            if !y.contains(&0) {
                row[free_position(group, &y)] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        row
    }))
}

/// Stacks the coefficient components of a cochain into one integer vector,
/// factor-major.
pub fn to_vector(f: &Cochain, limits: &Limits) -> Result<Vec<i128>> {
    let tuples = free_tuples(f.group(), f.degree(), limits)?;
    let a = f.coeff();
    let mut out = Vec::with_capacity(tuples.len() * a.rank());
    for j in 0..a.rank() {
        for t in &tuples {
            out.push(a.element(f.get(t))[j] as i128);
        }
    }
    Ok(out)
}

pub fn from_vector(group: &FinAbGroup, coeff: &FinAbGroup, degree: usize, v: &[i128], limits: &Limits) -> Result<Cochain> {
    let n = free_count(group, degree) as usize;
    Cochain::from_fn(group, coeff, degree, limits, |t| {
        let pos = free_position(group, t);
        let e: Vec<i64> = (0..coeff.rank()).map(|j| v[j * n + pos] as i64).collect::<Vec<_>>();
        coeff.index_of(&coeff.reduce(&e))
    })
}

#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub group: FinAbGroup,
    pub coeff: FinAbGroup,
    pub degree: usize,
    pub invariants: InvariantFactors,
    pub representatives: Vec<Cochain>,
    quotient: Subquotient,
    limits: Limits,
}

impl CohomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariants.is_trivial()
    }

    pub fn order(&self) -> u128 {
        self.invariants.order()
    }

    /// Coordinates of the class of a cocycle against `representatives`.
    pub fn coordinates(&self, f: &Cochain) -> Result<Vec<i64>> {
        if f.group() != &self.group || f.coeff() != &self.coeff || f.degree() != self.degree {
            return Err(Error::Mismatch("cochain does not live in this cohomology group".into()));
        }
        self.quotient.coords(&to_vector(f, &self.limits)?).map_err(|_| Error::Precondition("cochain is not a cocycle".into()))
    }

    /// The cocycle `Σ c_i rep_i`.
    pub fn element(&self, coords: &[i64]) -> Result<Cochain> {
        let mut acc = Cochain::zero(&self.group, &self.coeff, self.degree, &self.limits)?;
        for (r, &c) in self.representatives.iter().zip(coords) {
            acc = acc.add(&r.scale(c))?;
        }
        Ok(acc)
    }

    /// Every class as a coordinate vector, in lexicographic order.
    pub fn all_coordinates(&self) -> Vec<Vec<i64>> {
        enumerate_coords(&self.invariants.0)
    }
}

/// All vectors `0 <= c_i < d_i`.
pub fn enumerate_coords(orders: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &d in orders {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..d).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `H^n(G, A)` with representatives and a coordinate map.
pub fn cohomology_group(group: &FinAbGroup, coeff: &FinAbGroup, n: usize, limits: &Limits) -> Result<CohomologyGroup> {
    let big_n = free_count(group, n) as usize;
    limits.check("cochains of the next degree", free_count(group, n + 1))?;
    let dn = coboundary_matrix(group, n, limits)?;
    let rows_n = free_count(group, n + 1) as usize;
    let s = smith_normal_form(&dn, rows_n, big_n, Want { v: true, v_inv: true, ..Want::NONE })?;
    let prev = if n == 0 { vec![Vec::new(); big_n] } else { coboundary_matrix(group, n - 1, limits)? };
    let prev_cols = if n == 0 { 0 } else { free_count(group, n - 1) as usize };

    let r = coeff.rank();
    let ambient = big_n * r;
    let mut basis = Vec::with_capacity(ambient);
    let mut proj = vec![vec![0i128; ambient]; ambient];
    let mut div = Vec::with_capacity(ambient);
    let image_count = (prev_cols + big_n) * r;
    let mut image = vec![vec![0i128; image_count]; ambient];
    for (j, &m) in coeff.moduli().iter().enumerate() {
        let off = j * big_n;
        for i in 0..big_n {
            let d = if i < s.rank { s.diag[i] } else { 0 };
            let k = if i < s.rank { m as i128 / gcd(d.rem_euclid(m as i128) as i64, m) as i128 } else { 1 };
            let mut b = vec![0i128; ambient];
            for row in 0..big_n {
                b[off + row] = s.v[row][i] * k;
                proj[off + i][off + row] = s.v_inv[i][row];
            }
            basis.push(b);
            div.push(k);
        }
        let img_off = j * (prev_cols + big_n);
        for row in 0..big_n {
            for c in 0..prev_cols {
                image[off + row][img_off + c] = prev[row][c];
            }
            image[off + row][img_off + prev_cols + row] = m as i128;
        }
    }
    let lattice = Lattice::from_parts(ambient, basis, proj, div);
    let quotient = Subquotient::new(lattice, &image, image_count)?;
    let representatives = quotient.generators().iter().map(|g| from_vector(group, coeff, n, g, limits)).collect::<Result<Vec<_>>>()?;
    Ok(CohomologyGroup {
        group: group.clone(),
        coeff: coeff.clone(),
        degree: n,
        invariants: quotient.invariants.clone(),
        representatives,
        quotient,
        limits: *limits,
    })
}

/// Solves `δh = f` for `f` of a fixed degree `n >= 1`.
#[derive(Clone, Debug)]
pub struct CoboundarySolver {
    group: FinAbGroup,
    degree: usize,
    solver: Option<ModSolver>,
    limits: Limits,
}

impl CoboundarySolver {
    pub fn new(group: &FinAbGroup, degree: usize, limits: &Limits) -> Result<CoboundarySolver> {
        let solver = if degree == 0 {
            None
        } else {
            let m = coboundary_matrix(group, degree - 1, limits)?;
            Some(ModSolver::new(&m, free_count(group, degree) as usize, free_count(group, degree - 1) as usize)?)
        };
        Ok(CoboundarySolver { group: group.clone(), degree, solver, limits: *limits })
    }

    /// A witness `h` with `δh = f`, if one exists. In degree 0 only `f = 0`
    /// qualifies and there is no witness cochain to return.
    pub fn solve(&self, f: &Cochain) -> Result<Option<Cochain>> {
        if f.group() != &self.group || f.degree() != self.degree {
            return Err(Error::Mismatch("cochain degree or group does not match the solver".into()));
        }
        let Some(solver) = &self.solver else {
            return Err(Error::Domain("degree-0 cochains are never coboundaries of a cochain".into()));
        };
        let a = f.coeff();
        let n = free_count(&self.group, self.degree) as usize;
        let v = to_vector(f, &self.limits)?;
        let unknowns = solver.unknowns();
        let mut h = vec![0i128; unknowns * a.rank()];
        for (j, &m) in a.moduli().iter().enumerate() {
            let rhs: Vec<i64> = v[j * n..(j + 1) * n].iter().map(|&x| x as i64).collect();
            match solver.solve(&rhs, m) {
                Some(sol) => {
                    for (k, x) in sol.into_iter().enumerate() {
                        h[j * unknowns + k] = x as i128;
                    }
                }
                None => return Ok(None),
            }
        }
        Ok(Some(from_vector(&self.group, a, self.degree - 1, &h, &self.limits)?))
    }
}

pub fn is_coboundary(f: &Cochain, limits: &Limits) -> Result<Option<Cochain>> {
    if f.degree() == 0 {
        return if f.is_zero() { Err(Error::Domain("no cochains below degree 0".into())) } else { Ok(None) };
    }
    CoboundarySolver::new(f.group(), f.degree(), limits)?.solve(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::bar_delta;

    fn inv(g: &str, a: &str, n: usize) -> Vec<i64> {
        cohomology_group(&g.parse().unwrap(), &a.parse().unwrap(), n, &Limits::default()).unwrap().invariants.0
    }

    #[test]
    fn cyclic_groups() {
        for n in 1..=4 {
            assert_eq!(inv("Z/2", "Z/2", n), vec![2]);
        }
        assert!(inv("Z/2", "Z/3", 1).is_empty());
        assert_eq!(inv("Z/4", "Z/2", 3), vec![2]);
        assert_eq!(inv("Z/3", "Z/3", 4), vec![3]);
        assert_eq!(inv("Z/6", "Z/6", 2), vec![6]);
        assert_eq!(inv("Z/2", "Z/4", 2), vec![2]);
        assert_eq!(inv("Z/2", "Z/4", 1), vec![2]);
        assert_eq!(inv("Z/2", "Z/2", 0), vec![2]);
        assert!(inv("Z/1", "Z/2", 2).is_empty());
    }

    #[test]
    fn klein_four() {
        // H^n(Z/2 x Z/2, Z/2) has rank n + 1
        for n in 1..=3 {
            assert_eq!(inv("Z/2xZ/2", "Z/2", n), vec![2; n + 1]);
        }
    }

    #[test]
    fn representatives_are_cocycles_with_unit_coordinates() {
        let lim = Limits::default();
        let g: FinAbGroup = "Z/2xZ/2".parse().unwrap();
        let a: FinAbGroup = "Z/2xZ/4".parse().unwrap();
        let h = cohomology_group(&g, &a, 2, &lim).unwrap();
        for (i, r) in h.representatives.iter().enumerate() {
            assert!(bar_delta(r, &lim).unwrap().is_zero());
            let mut e = vec![0; h.invariants.0.len()];
            e[i] = 1;
            assert_eq!(h.coordinates(r).unwrap(), e);
        }
    }

    #[test]
    fn xyz_is_not_a_coboundary() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(2);
        let f = Cochain::from_fn(&g, &g, 3, &lim, |x| x[0] * x[1] * x[2]).unwrap();
        assert!(is_coboundary(&f, &lim).unwrap().is_none());
        let z = Cochain::zero(&g, &g, 3, &lim).unwrap();
        assert!(is_coboundary(&z, &lim).unwrap().unwrap().is_zero());
    }

    #[test]
    fn coboundaries_get_witnesses() {
        let lim = Limits::default();
        let g = FinAbGroup::cyclic(3);
        let a = FinAbGroup::new(vec![2, 3]).unwrap();
        let h = Cochain::from_fn(&g, &a, 2, &lim, |x| (x[0] * 5 + x[1]) % 6).unwrap();
        let f = bar_delta(&h, &lim).unwrap();
        let w = is_coboundary(&f, &lim).unwrap().unwrap();
        assert_eq!(bar_delta(&w, &lim).unwrap(), f);
    }
}
