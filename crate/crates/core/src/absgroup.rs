//! Finite abelian groups given only by an addition law on `0..n`.

use crate::error::{Error, Result};
use crate::group::InvariantFactors;
use crate::lattice::Presentation;

/// An explicit isomorphism from a Cayley-table group to its invariant form.
#[derive(Clone, Debug)]
pub struct TabulatedGroup {
    pub invariants: InvariantFactors,
    /// coordinates of every element
    pub coords: Vec<Vec<i64>>,
    /// an element with unit coordinate vector, per invariant factor
    pub generators: Vec<usize>,
}

/// `add(a, b)` must be an abelian group law on `0..n` with identity `zero`.
pub fn tabulate(n: usize, zero: usize, add: impl Fn(usize, usize) -> usize) -> Result<TabulatedGroup> {
    if n == 0 || zero >= n {
        return Err(Error::Consistency("empty group table".into()));
    }
    // greedy generators, with path coordinates from a breadth-first closure
    let mut gens: Vec<usize> = Vec::new();
    let mut path: Vec<Option<Vec<i64>>> = vec![None; n];
    path[zero] = Some(Vec::new());
    let mut reached = 1;
    while reached < n {
        let g = (0..n).find(|&x| path[x].is_none()).expect("unreached element");
        gens.push(g);
        let k = gens.len();
        for p in path.iter_mut().flatten() {
            p.resize(k, 0);
        }
        let mut frontier: Vec<usize> = (0..n).filter(|&x| path[x].is_some()).collect();
        while let Some(x) = frontier.pop() {
            for (j, &gj) in gens.iter().enumerate() {
                let y = add(x, gj);
                if y >= n {
                    return Err(Error::Consistency("group law leaves the table".into()));
                }
                if path[y].is_none() {
                    let mut v = path[x].clone().expect("frontier is reached");
                    v[j] += 1;
                    path[y] = Some(v);
                    reached += 1;
                    frontier.push(y);
                }
            }
        }
    }
    let k = gens.len();
    let path: Vec<Vec<i64>> = path.into_iter().map(|p| p.expect("closure covers the group")).collect();
    // every Cayley edge x -> x + g_j gives a relation path(x) + e_j - path(x + g_j)
    let mut rels: Vec<Vec<i128>> = vec![Vec::new(); k];
    for x in 0..n {
        for (j, &gj) in gens.iter().enumerate() {
            let y = add(x, gj);
            let mut col = vec![0i128; k];
            for i in 0..k {
                col[i] = (path[x][i] - path[y][i]) as i128;
            }
            col[j] += 1;
            if col.iter().any(|&c| c != 0) {
                for (row, &c) in rels.iter_mut().zip(&col) {
                    row.push(c);
                }
            }
        }
    }
    let count = rels.first().map_or(0, |r| r.len());
    let pres = Presentation::new(&rels, k, count)?;
    let coords: Vec<Vec<i64>> =
        path.iter().map(|p| pres.coords(&p.iter().map(|&v| v as i128).collect::<Vec<_>>())).collect::<Result<_>>()?;
    let order: u128 = pres.invariants.order();
    if order != n as u128 {
        return Err(Error::Consistency(format!("law on {n} elements presents a group of order {order}")));
    }
    let generators = (0..pres.invariants.0.len())
        .map(|i| {
            coords
                .iter()
                .position(|c| c.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
                .expect("unit coordinate vector is realized")
        })
        .collect();
    Ok(TabulatedGroup { invariants: pres.invariants, coords, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinAbGroup;

    #[test]
    fn recovers_invariants_of_products() {
        for desc in ["Z/1", "Z/2", "Z/2xZ/2", "Z/2xZ/3", "Z/4xZ/2", "Z/2xZ/4xZ/3", "Z/3xZ/9"] {
            let g: FinAbGroup = desc.parse().unwrap();
            let ar = g.arith();
            let t = tabulate(g.order(), 0, |a, b| ar.add(a, b)).unwrap();
            assert_eq!(t.invariants, InvariantFactors::from_orders(g.moduli()), "{desc}");
            // coordinates are a homomorphism
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let s = &t.coords[ar.add(a, b)];
                    for (i, &d) in t.invariants.0.iter().enumerate() {
                        assert_eq!(s[i], (t.coords[a][i] + t.coords[b][i]) % d);
                    }
                }
            }
        }
    }
}
