//! Sparse integer linear systems with right-hand sides in a finite abelian group.

use crate::error::{Limits, Result};
use crate::group::FinAbGroup;
use crate::lattice::ModSolver;

/// `Σ coef · unknown = rhs`, unknowns ranging over the same group as the rhs.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Vec<(usize, i64)>>,
    rhs: Vec<usize>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> LinearSystem {
        LinearSystem { unknowns, rows: Vec::new(), rhs: Vec::new() }
    }

    /// Adds an equation; `rhs` is an element index. Repeated unknowns accumulate.
    pub fn push(&mut self, terms: &[(Option<usize>, i64)], rhs: usize) {
        let mut row: Vec<(usize, i64)> = Vec::new();
        for &(u, c) in terms {
            if let Some(u) = u {
                match row.iter_mut().find(|(v, _)| *v == u) {
                    Some(e) => e.1 += c,
                    None => row.push((u, c)),
                }
            }
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    /// A solution as element indices, one per unknown.
    pub fn solve(&self, a: &FinAbGroup, limits: &Limits) -> Result<Option<Vec<usize>>> {
        let (m, n) = (self.rows.len(), self.unknowns);
        limits.check("linear system entries", (m as u128) * (n as u128))?;
        if n == 0 {
            return Ok(self.rhs.iter().all(|&r| r == 0).then(Vec::new));
        }
        let mut mat = vec![vec![0i128; n]; m];
        for (r, row) in self.rows.iter().enumerate() {
            for &(u, c) in row {
                mat[r][u] += c as i128;
            }
        }
        let solver = ModSolver::new(&mat, m, n)?;
        let rhs: Vec<Vec<i64>> = self.rhs.iter().map(|&r| a.element(r)).collect();
        let mut sol = vec![vec![0i64; a.rank()]; n];
        for (k, &modulus) in a.moduli().iter().enumerate() {
            let b: Vec<i64> = rhs.iter().map(|e| e[k]).collect();
            match solver.solve(&b, modulus) {
                Some(x) => {
                    for (u, v) in x.into_iter().enumerate() {
                        sol[u][k] = v;
                    }
                }
                None => return Ok(None),
            }
        }
        Ok(Some(sol.iter().map(|e| a.index_of(&a.reduce(e))).collect()))
    }
}
