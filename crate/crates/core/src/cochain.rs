//! Normalized bar cochains `G^n -> A`, the bar differential, and the mod-2
//! cup-i products used to build the symmetry corrections.

use crate::error::{pow_sat, Error, Limits, Result};
use crate::group::{Arith, FinAbGroup};
use crate::table::{Normalization, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: FinAbGroup,
    degree: usize,
    table: Table,
}

impl Cochain {
    pub fn zero(group: &FinAbGroup, coeff: &FinAbGroup, degree: usize, limits: &Limits) -> Result<Cochain> {
        let table = Table::zero(vec![group.clone(); degree], coeff.clone(), Normalization::AnySlotZero, limits)?;
        Ok(Cochain { group: group.clone(), degree, table })
    }

    /// Values on index tuples; tuples containing zero are skipped.
    pub fn from_fn<F>(group: &FinAbGroup, coeff: &FinAbGroup, degree: usize, limits: &Limits, f: F) -> Result<Cochain>
    where
        F: Fn(&[usize]) -> usize + Sync + Send,
    {
        let table = Table::from_fn(vec![group.clone(); degree], coeff.clone(), Normalization::AnySlotZero, limits, f)?;
        Ok(Cochain { group: group.clone(), degree, table })
    }

    pub fn from_table(group: &FinAbGroup, table: Table) -> Result<Cochain> {
        if table.normalization() != Normalization::AnySlotZero || table.slots().iter().any(|s| s != group) {
            return Err(Error::Mismatch("table is not a normalized cochain on this group".into()));
        }
        Ok(Cochain { group: group.clone(), degree: table.arity(), table })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coeff(&self) -> &FinAbGroup {
        self.table.coeff()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    #[inline]
    pub fn get(&self, idx: &[usize]) -> usize {
        self.table.get(idx)
    }

    pub fn set(&mut self, idx: &[usize], value: usize) -> Result<()> {
        self.table.set(idx, value)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        Ok(Cochain { table: self.table.add(&other.table)?, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        Ok(Cochain { table: self.table.sub(&other.table)?, ..self.clone() })
    }

    pub fn neg(&self) -> Cochain {
        Cochain { table: self.table.neg(), ..self.clone() }
    }

    pub fn scale(&self, k: i64) -> Cochain {
        let a = self.coeff();
        let mut t = self.table.clone();
        for f in 0..t.len() {
            let idx = t.unflat(f);
            let v = a.index_of(&a.scale(k, &a.element(t.get(&idx))));
            t.set_unchecked(&idx, v);
        }
        Cochain { table: t, ..self.clone() }
    }

    /// Nondegenerate argument tuples in lexicographic order.
    pub fn free_tuples(&self) -> Vec<Vec<usize>> {
        self.table.free_tuples()
    }

    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.table.first_nonzero()
    }
}

/// Number of nondegenerate tuples, `(|G|-1)^n`.
pub fn free_count(group: &FinAbGroup, degree: usize) -> u128 {
    crate::error::pow_sat(group.order().saturating_sub(1) as u128, degree)
}

/// Nondegenerate index tuples of length `n` in lexicographic order.
pub fn free_tuples(group: &FinAbGroup, degree: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let base = group.order().saturating_sub(1);
    let count = free_count(group, degree);
    limits.check("nondegenerate tuples", count)?;
    Ok((0..count as usize)
        .map(|mut k| {
            let mut t = vec![0; degree];
            for slot in t.iter_mut().rev() {
                *slot = k % base + 1;
                k /= base;
            }
            t
        })
        .collect())
}

/// Position of a nondegenerate tuple inside `free_tuples`.
pub fn free_position(group: &FinAbGroup, idx: &[usize]) -> usize {
    let base = group.order() - 1;
    idx.iter().fold(0, |acc, &i| acc * base + (i - 1))
}

/// The face of the simplex `x` obtained by dropping the marked vertices.
///
/// Vertices are the partial sums `0, x1, x1+x2, ...`; the face's entries are
/// differences of consecutive surviving vertices.
pub fn face(ar: &Arith, x: &[usize], drop: &[bool]) -> Vec<usize> {
    let mut out = Vec::with_capacity(x.len());
    let mut vertex = 0usize;
    let mut last: Option<usize> = None;
    for k in 0..=x.len() {
        if k > 0 {
            vertex = ar.add(vertex, x[k - 1]);
        }
        if !drop[k] {
            if let Some(l) = last {
                out.push(ar.sub(vertex, l));
            }
            last = Some(vertex);
        }
    }
    out
}

/// The i-th face: drop vertex `i` only.
pub fn face_i(ar: &Arith, x: &[usize], i: usize) -> Vec<usize> {
    let n = x.len();
    if i == 0 {
        x[1..].to_vec()
    } else if i == n {
        x[..n - 1].to_vec()
    } else {
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&x[..i - 1]);
        out.push(ar.add(x[i - 1], x[i]));
        out.extend_from_slice(&x[i + 1..]);
        out
    }
}

/// The bar differential `δf(x0..xn) = Σ (-1)^i f(d_i x)`.
pub fn bar_delta(f: &Cochain, limits: &Limits) -> Result<Cochain> {
    let g = f.group();
    let ga = g.arith();
    let a = f.coeff().arith();
    let n = f.degree();
    Cochain::from_fn(g, f.coeff(), n + 1, limits, |x| {
        let mut acc = 0usize;
        for i in 0..=n + 1 {
            let v = f.get(&face_i(&ga, x, i));
            acc = if i % 2 == 0 { a.add(acc, v) } else { a.sub(acc, v) };
        }
        acc
    })
}

/// Evaluates `δf` at one tuple without building the whole cochain.
pub fn delta_at(f: &Cochain, ga: &Arith, a: &Arith, x: &[usize]) -> usize {
    if x.contains(&0) {
        return 0;
    }
    let n = f.degree();
    let mut acc = 0usize;
    for i in 0..=n + 1 {
        let v = f.get(&face_i(ga, x, i));
        acc = if i % 2 == 0 { a.add(acc, v) } else { a.sub(acc, v) };
    }
    acc
}

pub fn is_cocycle(f: &Cochain, limits: &Limits) -> Result<bool> {
    Ok(cocycle_witness(f, limits)?.is_none())
}

/// First tuple where `δf` is nonzero.
pub fn cocycle_witness(f: &Cochain, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let tuples = free_tuples(f.group(), f.degree() + 1, limits)?;
    let ga = f.group().arith();
    let a = f.coeff().arith();
    Ok(crate::par::find_first(tuples.len(), |k| (delta_at(f, &ga, &a, &tuples[k]) != 0).then(|| tuples[k].clone())))
}

/// All cochains of a degree, by odometer over the nondegenerate values.
pub fn all_cochains(group: &FinAbGroup, coeff: &FinAbGroup, n: usize, limits: &Limits) -> Result<Vec<Cochain>> {
    let slots = free_count(group, n) as usize;
    let total = pow_sat(coeff.order() as u128, slots);
    limits.check(&format!("{coeff}-valued {n}-cochains"), total)?;
    let tuples = free_tuples(group, n, limits)?;
    let base = coeff.order();
    crate::par::map_indices(total as usize, |mut code| {
        let mut c = Cochain::zero(group, coeff, n, limits)?;
        for t in tuples.iter().rev() {
            c.set(t, code % base)?;
            code /= base;
        }
        Ok(c)
    })
    .into_iter()
    .collect()
}

/// The vertex-dropping pairs contributing to a mod-2 cup-i product of
/// cochains of degrees `p` and `q`, evaluated on simplices of dimension
/// `p + q - i`.
#[derive(Clone, Debug)]
pub struct CupPattern {
    pub dim: usize,
    terms: Vec<(Vec<bool>, Vec<bool>)>,
}

impl CupPattern {
    /// Empty when `i < 0` (the product is zero then).
    pub fn new(p: usize, q: usize, i: isize) -> CupPattern {
        let dim = p as isize + q as isize - i;
        if i < 0 || dim < 0 {
            return CupPattern { dim: dim.max(0) as usize, terms: Vec::new() };
        }
        let (i, dim) = (i as usize, dim as usize);
        let mut terms = Vec::new();
        for chosen in combinations(dim + 1, dim - i) {
            let mut left = vec![false; dim + 1];
            let mut right = vec![false; dim + 1];
            for (j, &u) in chosen.iter().enumerate() {
                if u % 2 == (j + 1) % 2 {
                    left[u] = true;
                } else {
                    right[u] = true;
                }
            }
            let nl = left.iter().filter(|&&b| b).count();
            let nr = right.iter().filter(|&&b| b).count();
            if nl == dim - p && nr == dim - q {
                terms.push((left, right));
            }
        }
        CupPattern { dim, terms }
    }

    /// `(u ∪_i v)(x)` over F2 for bit-valued cochains.
    pub fn eval(&self, ar: &Arith, x: &[usize], u: impl Fn(&[usize]) -> bool, v: impl Fn(&[usize]) -> bool) -> bool {
        let mut acc = false;
        for (l, r) in &self.terms {
            if u(&face(ar, x, l)) && v(&face(ar, x, r)) {
                acc = !acc;
            }
        }
        acc
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            if n - s < k - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
