//! Smith normal form over Z with unimodular transforms.
//!
//! Entries are `i128` and every update is overflow-checked; an overflow is
//! reported as a consistency error rather than wrapping silently.

use crate::error::{Error, Result};

pub type Mat = Vec<Vec<i128>>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![0; cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat, inner: usize) -> Result<Mat> {
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = zeros(a.len(), cols);
    for (i, arow) in a.iter().enumerate() {
        for (k, &x) in arow.iter().enumerate().take(inner) {
            if x == 0 {
                continue;
            }
            for (j, &y) in b[k].iter().enumerate() {
                out[i][j] = checked_add(out[i][j], checked_mul(x, y)?)?;
            }
        }
    }
    Ok(out)
}

pub fn mat_vec(a: &Mat, x: &[i128]) -> Result<Vec<i128>> {
    a.iter().map(|row| row.iter().zip(x).try_fold(0i128, |acc, (&p, &q)| checked_add(acc, checked_mul(p, q)?))).collect()
}

fn overflow() -> Error {
    Error::Consistency("integer overflow during Smith normal form".into())
}

#[inline]
pub(crate) fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow)
}

#[inline]
pub(crate) fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(overflow)
}

/// Which transforms to track. Skipping unused ones saves most of the work.
#[derive(Clone, Copy, Debug, Default)]
pub struct Want {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Want {
    pub const ALL: Want = Want { u: true, u_inv: true, v: true, v_inv: true };
    pub const NONE: Want = Want { u: false, u_inv: false, v: false, v_inv: false };
}

/// `U * M * V = D`. Untracked transforms are left empty.
#[derive(Clone, Debug)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    pub diag: Vec<i128>,
    pub rank: usize,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub v_inv: Mat,
}

struct Work {
    a: Mat,
    u: Option<Mat>,
    u_inv: Option<Mat>,
    v: Option<Mat>,
    v_inv: Option<Mat>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            for r in ui.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(i, j);
        }
    }

    /// row_dst += k * row_src
    fn row_add(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        add_row(&mut self.a, dst, src, k)?;
        if let Some(u) = &mut self.u {
            add_row(u, dst, src, k)?;
        }
        if let Some(ui) = &mut self.u_inv {
            // inverse: col_src -= k * col_dst
            for r in ui.iter_mut() {
                r[src] = checked_add(r[src], checked_mul(-k, r[dst])?)?;
            }
        }
        Ok(())
    }

    /// col_dst += k * col_src
    fn col_add(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        for r in self.a.iter_mut() {
            r[dst] = checked_add(r[dst], checked_mul(k, r[src])?)?;
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                r[dst] = checked_add(r[dst], checked_mul(k, r[src])?)?;
            }
        }
        if let Some(vi) = &mut self.v_inv {
            // inverse: row_src -= k * row_dst
            add_row(vi, src, dst, -k)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -*x;
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = -*x;
            }
        }
        if let Some(ui) = &mut self.u_inv {
            for r in ui.iter_mut() {
                r[i] = -r[i];
            }
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.a[i][j].unsigned_abs();
                if x != 0 && best.is_none_or(|(b, _, _)| (x as i128) < b) {
                    best = Some((x as i128, i, j));
                    if x == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Smallest nonzero entry in row t / column t, excluding the pivot cell.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(u128, usize, usize)> = None;
        let mut consider = |x: i128, i: usize, j: usize| {
            let ax = x.unsigned_abs();
            if ax != 0 && best.is_none_or(|(b, _, _)| ax < b) {
                best = Some((ax, i, j));
            }
        };
        consider(self.a[t][t], t, t);
        for i in t + 1..self.rows {
            consider(self.a[i][t], i, t);
        }
        for j in t + 1..self.cols {
            consider(self.a[t][j], t, j);
        }
        best.map(|(_, i, j)| (i, j))
    }
}

fn add_row(m: &mut Mat, dst: usize, src: usize, k: i128) -> Result<()> {
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, &y) in d.iter_mut().zip(s.iter()) {
        if y != 0 {
            *x = checked_add(*x, checked_mul(k, y)?)?;
        }
    }
    Ok(())
}

/// Computes the Smith normal form of a `rows x cols` matrix.
pub fn smith_normal_form(m: &Mat, rows: usize, cols: usize, want: Want) -> Result<Snf> {
    let mut w = Work {
        a: m.clone(),
        u: want.u.then(|| identity(rows)),
        u_inv: want.u_inv.then(|| identity(rows)),
        v: want.v.then(|| identity(cols)),
        v_inv: want.v_inv.then(|| identity(cols)),
        rows,
        cols,
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_pivot(t) else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let p = w.a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let x = w.a[i][t];
                if x != 0 {
                    w.row_add(i, t, -x.div_euclid(p))?;
                    if w.a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                let x = w.a[t][j];
                if x != 0 {
                    w.col_add(j, t, -x.div_euclid(p))?;
                    if w.a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                let (i, j) = w.min_in_cross(t).expect("pivot cross is nonzero");
                w.row_swap(t, i);
                w.col_swap(t, j);
                continue;
            }
            // divisibility chain: fold in any entry not divisible by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[i][j] % p != 0));
            match bad {
                Some(i) => w.row_add(t, i, 1)?,
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_row(t);
        }
        t += 1;
    }
    let diag: Vec<i128> = (0..rows.min(cols)).map(|i| w.a[i][i]).collect();
    let rank = diag.iter().take_while(|&&d| d != 0).count();
    Ok(Snf {
        rows,
        cols,
        diag,
        rank,
        u: w.u.unwrap_or_default(),
        u_inv: w.u_inv.unwrap_or_default(),
        v: w.v.unwrap_or_default(),
        v_inv: w.v_inv.unwrap_or_default(),
    })
}
