//! Lattices in Z^t, subquotients of them, and linear systems modulo m.

use crate::error::{Error, Result};
use crate::group::{gcd, InvariantFactors};
use crate::snf::{mat_vec, smith_normal_form, Mat, Snf, Want};

/// A sublattice of Z^t with a basis and a way back to basis coordinates:
/// `coords(x)_i = (proj x)_i / div_i`, exact for lattice members.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub ambient: usize,
    pub basis: Vec<Vec<i128>>,
    proj: Mat,
    div: Vec<i128>,
    /// rows that must vanish on members
    null: Mat,
}

impl Lattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The lattice spanned by the columns of `gens` (`ambient x count`).
    pub fn span(gens: &Mat, ambient: usize, count: usize) -> Result<Lattice> {
        let s = smith_normal_form(gens, ambient, count, Want { u: true, u_inv: true, ..Want::NONE })?;
        let basis = (0..s.rank).map(|i| s.u_inv.iter().map(|row| row[i] * s.diag[i]).collect()).collect();
        Ok(Lattice { ambient, basis, proj: s.u[..s.rank].to_vec(), div: s.diag[..s.rank].to_vec(), null: s.u[s.rank..].to_vec() })
    }

    /// A lattice from a known basis and its coordinate map.
    pub fn from_parts(ambient: usize, basis: Vec<Vec<i128>>, proj: Mat, div: Vec<i128>) -> Lattice {
        Lattice { ambient, basis, proj, div, null: Vec::new() }
    }

    pub fn coords(&self, x: &[i128]) -> Result<Vec<i128>> {
        for row in &self.null {
            if mat_vec(&vec![row.clone()], x)?[0] != 0 {
                return Err(Error::Consistency("vector lies outside the lattice".into()));
            }
        }
        let raw = mat_vec(&self.proj, x)?;
        raw.iter()
            .zip(&self.div)
            .map(|(&r, &d)| if r % d == 0 { Ok(r / d) } else { Err(Error::Consistency("vector lies outside the lattice".into())) })
            .collect()
    }
}

/// `kernel / image` for lattices `image ⊆ kernel` of finite index.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub invariants: InvariantFactors,
    lattice: Lattice,
    select: Mat,
    generators: Vec<Vec<i128>>,
}

impl Subquotient {
    /// `image` holds the image generators as columns of a `ambient x count` matrix.
    pub fn new(lattice: Lattice, image: &Mat, count: usize) -> Result<Subquotient> {
        let rank = lattice.rank();
        let mut coeffs = vec![vec![0i128; count]; rank];
        for j in 0..count {
            let col: Vec<i128> = image.iter().map(|r| r[j]).collect();
            let c = lattice.coords(&col).map_err(|_| Error::Consistency(format!("image generator {j} is not contained in the kernel")))?;
            for (i, v) in c.into_iter().enumerate() {
                coeffs[i][j] = v;
            }
        }
        let s = smith_normal_form(&coeffs, rank, count, Want { u: true, u_inv: true, ..Want::NONE })?;
        if s.rank < rank {
            return Err(Error::Consistency("subquotient is infinite".into()));
        }
        Ok(Self::assemble(lattice, s))
    }

    fn assemble(lattice: Lattice, s: Snf) -> Subquotient {
        let keep: Vec<usize> = (0..s.rank).filter(|&i| s.diag[i] > 1).collect();
        let invariants = InvariantFactors(keep.iter().map(|&i| s.diag[i] as i64).collect());
        let select = keep.iter().map(|&i| s.u[i].clone()).collect();
        let generators = keep
            .iter()
            .map(|&i| {
                let mut g = vec![0i128; lattice.ambient];
                for (k, b) in lattice.basis.iter().enumerate() {
                    let c = s.u_inv[k][i];
                    if c != 0 {
                        for (gx, &bx) in g.iter_mut().zip(b) {
                            *gx += c * bx;
                        }
                    }
                }
                g
            })
            .collect();
        Subquotient { invariants, lattice, select, generators }
    }

    /// Generators in ambient coordinates, one per invariant factor.
    pub fn generators(&self) -> &[Vec<i128>] {
        &self.generators
    }

    /// Class coordinates of a kernel member, reduced mod the invariants.
    pub fn coords(&self, x: &[i128]) -> Result<Vec<i64>> {
        let c = self.lattice.coords(x)?;
        let raw = mat_vec(&self.select, &c)?;
        Ok(raw.iter().zip(&self.invariants.0).map(|(&r, &d)| r.rem_euclid(d as i128) as i64).collect())
    }
}

/// Invariant factors of `kernel / image`, both given by generator columns.
pub fn subquotient(kernel: &Mat, kernel_count: usize, image: &Mat, image_count: usize, ambient: usize) -> Result<InvariantFactors> {
    let lattice = Lattice::span(kernel, ambient, kernel_count)?;
    Ok(Subquotient::new(lattice, image, image_count)?.invariants)
}

/// A presented finite abelian group `Z^s / relations`, normalized to invariant form.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub invariants: InvariantFactors,
    select: Mat,
    /// column i: old-generator combination for new generator i
    pub lift: Vec<Vec<i128>>,
    pub width: usize,
}

impl Presentation {
    pub fn new(relations: &Mat, width: usize, count: usize) -> Result<Presentation> {
        let s = smith_normal_form(relations, width, count, Want { u: true, u_inv: true, ..Want::NONE })?;
        if s.rank < width {
            return Err(Error::Consistency("presented group is infinite".into()));
        }
        let keep: Vec<usize> = (0..s.rank).filter(|&i| s.diag[i] > 1).collect();
        Ok(Presentation {
            invariants: InvariantFactors(keep.iter().map(|&i| s.diag[i] as i64).collect()),
            select: keep.iter().map(|&i| s.u[i].clone()).collect(),
            lift: keep.iter().map(|&i| s.u_inv.iter().map(|r| r[i]).collect()).collect(),
            width,
        })
    }

    /// `Z/o1 x Z/o2 x ...` for arbitrary orders.
    pub fn from_orders(orders: &[i64]) -> Result<Presentation> {
        let n = orders.len();
        let mut rel = vec![vec![0i128; n]; n];
        for (i, &o) in orders.iter().enumerate() {
            rel[i][i] = o as i128;
        }
        Presentation::new(&rel, n, n)
    }

    pub fn coords(&self, old: &[i128]) -> Result<Vec<i64>> {
        let raw = mat_vec(&self.select, old)?;
        Ok(raw.iter().zip(&self.invariants.0).map(|(&r, &d)| r.rem_euclid(d as i128) as i64).collect())
    }
}

/// Solver for `M x ≡ b (mod m)` with a cached Smith form of the integer matrix `M`.
#[derive(Clone, Debug)]
pub struct ModSolver {
    snf: Snf,
}

impl ModSolver {
    pub fn new(m: &Mat, rows: usize, cols: usize) -> Result<ModSolver> {
        let snf = smith_normal_form(m, rows, cols, Want { u: true, v: true, ..Want::NONE })?;
        Ok(ModSolver { snf })
    }

    pub fn unknowns(&self) -> usize {
        self.snf.cols
    }

    /// Some solution with free variables set to zero, reduced mod `modulus`.
    pub fn solve(&self, rhs: &[i64], modulus: i64) -> Option<Vec<i64>> {
        let s = &self.snf;
        let m = modulus as i128;
        if s.cols == 0 {
            return rhs.iter().all(|&b| b.rem_euclid(modulus) == 0).then(Vec::new);
        }
        let b: Vec<i128> =
            s.u.iter()
                .map(|row| row.iter().zip(rhs).fold(0i128, |acc, (&u, &r)| (acc + u.rem_euclid(m) * (r as i128).rem_euclid(m)) % m))
                .collect();
        let mut y = vec![0i128; s.cols];
        for (i, &bi) in b.iter().enumerate() {
            let d = if i < s.rank { s.diag[i].rem_euclid(m) } else { 0 };
            let g = gcd(d as i64, modulus) as i128;
            if bi % g != 0 {
                return None;
            }
            if i < s.rank && i < s.cols {
                let mg = m / g;
                y[i] = if mg == 1 { 0 } else { (bi / g) * mod_inverse(d / g, mg) % mg };
            }
        }
        Some(s.v.iter().map(|row| row.iter().zip(&y).fold(0i128, |acc, (&v, &yi)| (acc + v.rem_euclid(m) * yi) % m) as i64).collect())
    }
}

pub(crate) fn mod_inverse(a: i128, m: i128) -> i128 {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(m)
}
