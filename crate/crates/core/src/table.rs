//! Dense finite functions `S1 x ... x Sk -> A` with a zero convention on
//! degenerate arguments.

use crate::error::{Error, Limits, Result};
use crate::group::{Arith, Elem, FinAbGroup};

/// Which argument tuples are forced to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// zero whenever some argument is zero
    AnySlotZero,
    /// four slots read as a 2x2 matrix (row-major); zero when a row or column is all zero
    MatrixDegenerate,
    /// no forced zeros
    Free,
}

impl Normalization {
    pub fn is_degenerate(self, idx: &[usize]) -> bool {
        match self {
            Normalization::AnySlotZero => idx.contains(&0),
            Normalization::MatrixDegenerate => {
                let z = |i: usize, j: usize| idx[i] == 0 && idx[j] == 0;
                z(0, 1) || z(2, 3) || z(0, 2) || z(1, 3)
            }
            Normalization::Free => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    slots: Vec<FinAbGroup>,
    coeff: FinAbGroup,
    norm: Normalization,
    dims: Vec<usize>,
    values: Vec<u32>,
}

impl Table {
    pub fn zero(slots: Vec<FinAbGroup>, coeff: FinAbGroup, norm: Normalization, limits: &Limits) -> Result<Table> {
        if norm == Normalization::MatrixDegenerate && slots.len() != 4 {
            return Err(Error::Mismatch("matrix normalization needs exactly four slots".into()));
        }
        let dims: Vec<usize> = slots.iter().map(|g| g.order()).collect();
        let size = dims.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
        limits.check("function table entries", size)?;
        Ok(Table { slots, coeff, norm, dims, values: vec![0; size as usize] })
    }

    /// Builds a table from a value function on index tuples; degenerate tuples are skipped.
    pub fn from_fn<F>(slots: Vec<FinAbGroup>, coeff: FinAbGroup, norm: Normalization, limits: &Limits, f: F) -> Result<Table>
    where
        F: Fn(&[usize]) -> usize + Sync + Send,
    {
        let mut t = Table::zero(slots, coeff, norm, limits)?;
        let dims = t.dims.clone();
        let vals = crate::par::map_indices(t.values.len(), |flat| {
            let idx = unflatten(&dims, flat);
            if norm.is_degenerate(&idx) {
                0
            } else {
                f(&idx) as u32
            }
        });
        t.values = vals;
        Ok(t)
    }

    /// Same, with values given as residue vectors.
    pub fn from_elem_fn<F>(slots: Vec<FinAbGroup>, coeff: FinAbGroup, norm: Normalization, limits: &Limits, f: F) -> Result<Table>
    where
        F: Fn(&[Elem]) -> Elem + Sync + Send,
    {
        let sl = slots.clone();
        let co = coeff.clone();
        Table::from_fn(slots, coeff, norm, limits, move |idx| {
            let args: Vec<Elem> = idx.iter().zip(&sl).map(|(&i, g)| g.element(i)).collect();
            co.index_of(&co.reduce(&f(&args)))
        })
    }

    pub fn slots(&self) -> &[FinAbGroup] {
        &self.slots
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn coeff(&self) -> &FinAbGroup {
        &self.coeff
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn raw(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn flat(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| acc * d + i)
    }

    pub fn unflat(&self, flat: usize) -> Vec<usize> {
        unflatten(&self.dims, flat)
    }

    #[inline]
    pub fn get(&self, idx: &[usize]) -> usize {
        self.values[self.flat(idx)] as usize
    }

    pub fn get_elem(&self, args: &[Elem]) -> Elem {
        let idx: Vec<usize> = args.iter().zip(&self.slots).map(|(a, g)| g.index_of(a)).collect();
        self.coeff.element(self.get(&idx))
    }

    pub fn set(&mut self, idx: &[usize], value: usize) -> Result<()> {
        if self.norm.is_degenerate(idx) && value != 0 {
            return Err(Error::Domain(format!("argument {idx:?} is degenerate and must map to zero")));
        }
        let f = self.flat(idx);
        self.values[f] = value as u32;
        Ok(())
    }

    pub fn is_degenerate(&self, idx: &[usize]) -> bool {
        self.norm.is_degenerate(idx)
    }

    /// Argument tuples that are not forced to zero, in lexicographic order.
    pub fn free_tuples(&self) -> Vec<Vec<usize>> {
        (0..self.values.len()).map(|f| self.unflat(f)).filter(|t| !self.norm.is_degenerate(t)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// First argument tuple with a nonzero value.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.values.iter().position(|&v| v != 0).map(|f| self.unflat(f))
    }

    pub fn same_shape(&self, other: &Table) -> bool {
        self.slots == other.slots && self.coeff == other.coeff && self.norm == other.norm
    }

    fn check_shape(&self, other: &Table) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::Mismatch("function tables have different signatures".into()))
        }
    }

    pub fn zip_with(&self, other: &Table, f: impl Fn(usize, usize) -> usize) -> Result<Table> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (o, &b) in out.values.iter_mut().zip(&other.values) {
            *o = f(*o as usize, b as usize) as u32;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Table) -> Result<Table> {
        let ar = self.coeff.arith();
        self.zip_with(other, |a, b| ar.add(a, b))
    }

    pub fn sub(&self, other: &Table) -> Result<Table> {
        let ar = self.coeff.arith();
        self.zip_with(other, |a, b| ar.sub(a, b))
    }

    pub fn neg(&self) -> Table {
        let ar = self.coeff.arith();
        let mut out = self.clone();
        for v in out.values.iter_mut() {
            *v = ar.neg(*v as usize) as u32;
        }
        out
    }

    /// Adds `delta` (a coefficient index) at one argument tuple.
    pub fn perturbed(&self, idx: &[usize], delta: usize) -> Result<Table> {
        let ar = self.coeff.arith();
        let mut out = self.clone();
        let v = ar.add(self.get(idx), delta);
        out.set(idx, v)?;
        Ok(out)
    }

    /// Replaces a value without checking the normalization; meant for raw input.
    pub(crate) fn set_unchecked(&mut self, idx: &[usize], value: usize) {
        let f = self.flat(idx);
        self.values[f] = value as u32;
    }

    pub fn coeff_arith(&self) -> Arith {
        self.coeff.arith()
    }
}

pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}
