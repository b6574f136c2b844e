//! Finite abelian groups `Z/n1 x ... x Z/nk`, their elements and homomorphisms.
//!
//! Elements are residue vectors. Every group also has a lexicographic
//! indexing of its elements (first factor most significant), and most of the
//! heavy routines work on those indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Limits, Result};

pub type Elem = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    moduli: Vec<i64>,
}

impl FinAbGroup {
    /// Builds a group from its cyclic factors; factors equal to 1 are dropped.
    pub fn new(moduli: Vec<i64>) -> Result<Self> {
        if let Some(bad) = moduli.iter().find(|&&n| n < 1) {
            return Err(Error::Domain(format!("cyclic factor Z/{bad} is not allowed")));
        }
        Ok(FinAbGroup { moduli: moduli.into_iter().filter(|&n| n != 1).collect() })
    }

    pub fn trivial() -> Self {
        FinAbGroup { moduli: Vec::new() }
    }

    /// `Z/n`. Panics for `n < 1`; meant for literals.
    pub fn cyclic(n: i64) -> Self {
        FinAbGroup::new(vec![n]).expect("cyclic order must be positive")
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&n| n as usize).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn exponent(&self) -> i64 {
        self.moduli.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        FinAbGroup { moduli }
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn reduce(&self, v: &[i64]) -> Elem {
        v.iter().zip(&self.moduli).map(|(&x, &n)| x.rem_euclid(n)).collect()
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        e.len() == self.rank() && e.iter().zip(&self.moduli).all(|(&x, &n)| (0..n).contains(&x))
    }

    pub fn check_elem(&self, e: &[i64]) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{e:?} is not a reduced element of {self}")))
        }
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter().zip(b).zip(&self.moduli).map(|((&x, &y), &n)| (x + y).rem_euclid(n)).collect()
    }

    pub fn neg(&self, a: &[i64]) -> Elem {
        a.iter().zip(&self.moduli).map(|(&x, &n)| (-x).rem_euclid(n)).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter().zip(b).zip(&self.moduli).map(|((&x, &y), &n)| (x - y).rem_euclid(n)).collect()
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Elem {
        a.iter().zip(&self.moduli).map(|(&x, &n)| (k.rem_euclid(n) * x).rem_euclid(n)).collect()
    }

    pub fn is_zero(a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Lexicographic index of a reduced element.
    pub fn index_of(&self, e: &[i64]) -> usize {
        e.iter().zip(&self.moduli).fold(0usize, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn element(&self, mut idx: usize) -> Elem {
        let mut out = vec![0; self.rank()];
        for (slot, &n) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % n as usize) as i64;
            idx /= n as usize;
        }
        out
    }

    /// All elements in lexicographic order, starting with zero.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<Elem>> {
        limits.check(&format!("elements of {self}"), self.order() as u128)?;
        Ok((0..self.order()).map(|i| self.element(i)).collect())
    }

    pub fn arith(&self) -> Arith {
        Arith::new(self)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z/1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group(s)
    }
}

/// Parses `Z/<n>` terms joined by `x`, no spaces.
pub fn parse_group(text: &str) -> Result<FinAbGroup> {
    if text.is_empty() {
        return Err(Error::Parse("empty group descriptor".into()));
    }
    let mut moduli = Vec::new();
    for term in text.split('x') {
        let digits = term.strip_prefix("Z/").ok_or_else(|| Error::Parse(format!("bad factor {term:?} in {text:?}, expected Z/<n>")))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad modulus {digits:?} in {text:?}")));
        }
        let n: i64 = digits.parse().map_err(|_| Error::Parse(format!("modulus {digits:?} out of range")))?;
        moduli.push(n);
    }
    FinAbGroup::new(moduli)
}

/// Index-level arithmetic with precomputed tables for small groups.
#[derive(Clone, Debug)]
pub struct Arith {
    moduli: Vec<i64>,
    order: usize,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

const TABLE_LIMIT: usize = 512;

impl Arith {
    pub fn new(g: &FinAbGroup) -> Self {
        let order = g.order();
        let moduli = g.moduli.clone();
        let neg = (0..order).map(|i| g.index_of(&g.neg(&g.element(i))) as u32).collect();
        let add = (order <= TABLE_LIMIT).then(|| {
            let elems: Vec<Elem> = (0..order).map(|i| g.element(i)).collect();
            let mut t = Vec::with_capacity(order * order);
            for a in &elems {
                for b in &elems {
                    t.push(g.index_of(&g.add(a, b)) as u32);
                }
            }
            t
        });
        Arith { moduli, order, add, neg }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.add {
            Some(t) => t[a * self.order + b] as usize,
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    fn add_digits(&self, mut a: usize, mut b: usize) -> usize {
        let mut out = 0usize;
        let mut place = 1usize;
        for &n in self.moduli.iter().rev() {
            let n = n as usize;
            let d = (a % n + b % n) % n;
            out += d * place;
            place *= n;
            a /= n;
            b /= n;
        }
        out
    }
}

/// A group homomorphism given by an integer matrix (codomain factors x domain factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub domain: FinAbGroup,
    pub codomain: FinAbGroup,
    pub matrix: Vec<Vec<i64>>,
}

impl Homomorphism {
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != codomain.rank() || matrix.iter().any(|r| r.len() != domain.rank()) {
            return Err(Error::Mismatch(format!("matrix shape does not match {} -> {}", domain, codomain)));
        }
        if !Self::well_defined(&domain, &codomain, &matrix) {
            return Err(Error::Validation(format!("matrix does not define a homomorphism {domain} -> {codomain}")));
        }
        Ok(Homomorphism { domain, codomain, matrix })
    }

    /// Column j must be killed by the j-th domain modulus.
    pub fn well_defined(domain: &FinAbGroup, codomain: &FinAbGroup, matrix: &[Vec<i64>]) -> bool {
        domain
            .moduli()
            .iter()
            .enumerate()
            .all(|(j, &nj)| matrix.iter().zip(codomain.moduli()).all(|(row, &m)| (nj * row[j]).rem_euclid(m) == 0))
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        let raw: Vec<i64> = self.matrix.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect();
        self.codomain.reduce(&raw)
    }
}

/// Invariant factors `d1 | d2 | ...`, each greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantFactors(pub Vec<i64>);

impl InvariantFactors {
    /// Normalizes any list of cyclic orders into invariant-factor form.
    pub fn from_orders(orders: &[i64]) -> Self {
        // prime-power decomposition, then recombine
        let mut by_prime: std::collections::BTreeMap<i64, Vec<i64>> = Default::default();
        for &n in orders {
            let mut n = n;
            let mut p = 2;
            while n > 1 {
                if p * p > n {
                    by_prime.entry(n).or_default().push(n);
                    break;
                }
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    by_prime.entry(p).or_default().push(q);
                }
                p += 1;
            }
        }
        let width = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut out = vec![1i64; width];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            let offset = width - powers.len();
            for (i, q) in powers.iter().enumerate() {
                out[offset + i] *= q;
            }
        }
        InvariantFactors(out)
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }

    pub fn direct_sum(&self, other: &InvariantFactors) -> InvariantFactors {
        let mut all = self.0.clone();
        all.extend_from_slice(&other.0);
        InvariantFactors::from_orders(&all)
    }

    pub fn as_group(&self) -> FinAbGroup {
        FinAbGroup { moduli: self.0.clone() }
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_group())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_descriptors() {
        assert!(parse_group("Z/1").unwrap().is_trivial());
        assert_eq!(parse_group("Z/2").unwrap().moduli(), &[2]);
        assert_eq!(parse_group("Z/2xZ/4").unwrap().moduli(), &[2, 4]);
        assert!(matches!(parse_group("Z/0"), Err(Error::Domain(_))));
        for bad in ["", "Z/", "Z2", "Z/2 x Z/4", "Z/2x", "Z/-3", "z/2"] {
            assert!(matches!(parse_group(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn display_round_trips_canonical_descriptors() {
        for s in ["Z/1", "Z/2", "Z/2xZ/4", "Z/3xZ/3xZ/5"] {
            assert_eq!(parse_group(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_group("Z/1xZ/6").unwrap().to_string(), "Z/6");
    }

    #[test]
    fn enumeration_order_and_cap() {
        let lim = Limits::default();
        assert_eq!(FinAbGroup::trivial().elements(&lim).unwrap(), vec![Vec::<i64>::new()]);
        assert_eq!(FinAbGroup::cyclic(2).elements(&lim).unwrap(), vec![vec![0], vec![1]]);
        let v4 = parse_group("Z/2xZ/2").unwrap().elements(&lim).unwrap();
        assert_eq!(v4, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(matches!(FinAbGroup::cyclic(10).elements(&Limits::new(9)), Err(Error::Resource { .. })));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for desc in ["Z/2xZ/4", "Z/3xZ/3", "Z/8", "Z/2xZ/2xZ/2", "Z/4xZ/4xZ/4"] {
            let g = parse_group(desc).unwrap();
            let ar = g.arith();
            let n = g.order();
            for a in 0..n {
                assert_eq!(ar.add(a, 0), a);
                assert_eq!(ar.add(a, ar.neg(a)), 0);
                for b in 0..n {
                    assert_eq!(ar.add(a, b), ar.add(b, a));
                    assert_eq!(ar.add(a, b), g.index_of(&g.add(&g.element(a), &g.element(b))));
                    for c in 0..n.min(16) {
                        assert_eq!(ar.add(ar.add(a, b), c), ar.add(a, ar.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_well_definedness_matches_annihilation() {
        for n in 1..=6i64 {
            for m in 1..=6i64 {
                let d = FinAbGroup::new(vec![n, m]).unwrap();
                let c = FinAbGroup::new(vec![m, n]).unwrap();
                if d.rank() != 2 || c.rank() != 2 {
                    continue;
                }
                for code in 0..(m * n * m * n).min(256) {
                    let e = [code % m, (code / m) % n, (code / (m * n)) % m, code / (m * m * n) % n];
                    let mat = vec![vec![e[0], e[1]], vec![e[2], e[3]]];
                    let expect = (n * e[0]) % m == 0 && (n * e[2]) % n == 0 && (m * e[1]) % m == 0 && (m * e[3]) % n == 0;
                    assert_eq!(Homomorphism::well_defined(&d, &c, &mat), expect);
                }
            }
        }
    }

    #[test]
    fn invariant_factor_normalization() {
        assert_eq!(InvariantFactors::from_orders(&[2, 3]).0, vec![6]);
        assert_eq!(InvariantFactors::from_orders(&[2, 2]).0, vec![2, 2]);
        assert_eq!(InvariantFactors::from_orders(&[4, 6, 1]).0, vec![2, 12]);
        assert!(InvariantFactors::from_orders(&[1, 1]).is_trivial());
    }
}
