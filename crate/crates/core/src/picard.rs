//! Skeletal Picard groupoids `(B, A, c)`, finite torsor presentations and
//! their contracted product.

use crate::error::{Error, Result};
use crate::group::{Elem, FinAbGroup};

/// Objects up to isomorphism form `B`, automorphisms of the unit form `A`,
/// and the symmetry is the bilinear antisymmetric form `c: B x B -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardGroupoid {
    b: FinAbGroup,
    a: FinAbGroup,
    /// `coef[i][j] = c(e_i, e_j)` for the factor generators of `B`
    coef: Vec<Vec<Elem>>,
}

const EXHAUSTIVE_LIMIT: usize = 64;

impl PicardGroupoid {
    /// Validates bilinearity (well-definedness of the coefficient tensor) and
    /// antisymmetry. Exhaustive over pairs when `|B| <= 64`; above that the
    /// same conditions are checked exactly on generators.
    pub fn new(b: FinAbGroup, a: FinAbGroup, coef: Vec<Vec<Elem>>) -> Result<PicardGroupoid> {
        if coef.len() != b.rank() || coef.iter().any(|r| r.len() != b.rank()) || coef.iter().flatten().any(|v| v.len() != a.rank()) {
            return Err(Error::Mismatch(format!("symmetry matrix shape does not match B = {b}, A = {a}")));
        }
        let coef: Vec<Vec<Elem>> = coef.iter().map(|r| r.iter().map(|v| a.reduce(v)).collect()).collect();
        let p = PicardGroupoid { b, a, coef };
        p.validate()?;
        Ok(p)
    }

    /// The symmetric-monoidal-on-the-nose groupoid with `c = 0`.
    pub fn strict(b: FinAbGroup, a: FinAbGroup) -> PicardGroupoid {
        let coef = vec![vec![a.zero(); b.rank()]; b.rank()];
        PicardGroupoid { b, a, coef }
    }

    /// `ΣA`: one object, automorphisms `A`.
    pub fn suspension(a: &FinAbGroup) -> PicardGroupoid {
        PicardGroupoid::strict(FinAbGroup::trivial(), a.clone())
    }

    pub fn objects(&self) -> &FinAbGroup {
        &self.b
    }

    pub fn automorphisms(&self) -> &FinAbGroup {
        &self.a
    }

    pub fn coefficients(&self) -> &[Vec<Elem>] {
        &self.coef
    }

    pub fn is_strict(&self) -> bool {
        self.coef.iter().flatten().all(|v| FinAbGroup::is_zero(v))
    }

    pub fn symmetry(&self, x: &[i64], y: &[i64]) -> Elem {
        let mut acc = self.a.zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = self.a.add(&acc, &self.a.scale(xi * yj, &self.coef[i][j]));
                }
            }
        }
        acc
    }

    pub fn symmetry_idx(&self, x: usize, y: usize) -> usize {
        self.a.index_of(&self.symmetry(&self.b.element(x), &self.b.element(y)))
    }

    /// `q(x) = c(x, x)`.
    pub fn q_invariant(&self, x: &[i64]) -> Elem {
        self.symmetry(x, x)
    }

    /// `q` on the factor generators of `B`; these drive the cup-product corrections.
    pub fn q_generators(&self) -> Vec<Elem> {
        (0..self.b.rank()).map(|k| self.coef[k][k].clone()).collect()
    }

    fn validate(&self) -> Result<()> {
        let (b, a) = (&self.b, &self.a);
        if b.order() <= EXHAUSTIVE_LIMIT {
            let elems: Vec<Elem> = (0..b.order()).map(|i| b.element(i)).collect();
            for x in &elems {
                for y in &elems {
                    let cxy = self.symmetry(x, y);
                    if !FinAbGroup::is_zero(&a.add(&cxy, &self.symmetry(y, x))) {
                        return Err(Error::Validation(format!("symmetry is not antisymmetric at ({x:?}, {y:?})")));
                    }
                    for x2 in &elems {
                        let lhs = self.symmetry(&b.add(x, x2), y);
                        let rhs = a.add(&cxy, &self.symmetry(x2, y));
                        if lhs != rhs {
                            return Err(Error::Validation(format!("symmetry is not bilinear at ({x:?} + {x2:?}, {y:?})")));
                        }
                    }
                }
            }
        } else {
            for (i, &ni) in b.moduli().iter().enumerate() {
                for (j, &nj) in b.moduli().iter().enumerate() {
                    let v = &self.coef[i][j];
                    if !FinAbGroup::is_zero(&a.scale(ni, v)) || !FinAbGroup::is_zero(&a.scale(nj, v)) {
                        return Err(Error::Validation(format!(
                            "symmetry is not bilinear: generator pair ({i}, {j}) is not killed by its orders"
                        )));
                    }
                    if !FinAbGroup::is_zero(&a.add(v, &self.coef[j][i])) {
                        return Err(Error::Validation(format!("symmetry is not antisymmetric at generators ({i}, {j})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A torsor with finitely many objects. Hom-sets between isomorphic objects
/// are identified with `A` through `twist`, and composition is
/// `m1 + m2 + twist(o,o') + twist(o',o'') - twist(o,o'')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsorPresentation {
    pub base: PicardGroupoid,
    pub class_of: Vec<usize>,
    /// `act[h][o]`, `h` an index into `B`
    pub act: Vec<Vec<usize>>,
    /// `twist[o][o']` as an index into `A`; only read for isomorphic objects
    pub twist: Vec<Vec<usize>>,
}

impl TorsorPresentation {
    /// `𝒜` acting on itself.
    pub fn trivial(base: &PicardGroupoid) -> TorsorPresentation {
        let b = base.objects();
        let n = b.order();
        let ar = b.arith();
        TorsorPresentation {
            base: base.clone(),
            class_of: (0..n).collect(),
            act: (0..n).map(|h| (0..n).map(|o| ar.add(o, h)).collect()).collect(),
            twist: vec![vec![0; n]; n],
        }
    }

    pub fn object_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn isomorphic(&self, o: usize, p: usize) -> bool {
        self.class_of[o] == self.class_of[p]
    }

    /// Composite of `m1: o -> p` and `m2: p -> r`.
    pub fn compose(&self, o: usize, p: usize, r: usize, m1: usize, m2: usize) -> usize {
        let a = self.base.automorphisms().arith();
        let t = a.sub(a.add(self.twist[o][p], self.twist[p][r]), self.twist[o][r]);
        a.add(a.add(m1, m2), t)
    }

    /// The element `h` of `B` carrying object 0's class to `o`'s class.
    pub fn class_coordinate(&self, o: usize) -> Option<usize> {
        (0..self.act.len()).find(|&h| self.class_of[self.act[h][0]] == self.class_of[o])
    }
}

/// Checks the action axioms, free transitivity on isomorphism classes,
/// the twist conventions, and bijectivity of `(α, m) ↦ (α + m, m)`.
pub fn is_torsor(l: &TorsorPresentation) -> bool {
    torsor_defect(l).is_none()
}

/// The first failed torsor condition, if any.
pub fn torsor_defect(l: &TorsorPresentation) -> Option<String> {
    let b = l.base.objects();
    let a = l.base.automorphisms();
    let nb = b.order();
    let na = a.order();
    let n = l.object_count();
    let bar = b.arith();
    if l.act.len() != nb || l.act.iter().any(|r| r.len() != n || r.iter().any(|&o| o >= n)) {
        return Some("action table has the wrong shape".into());
    }
    if l.twist.len() != n || l.twist.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= na)) {
        return Some("twist table has the wrong shape".into());
    }
    for o in 0..n {
        if l.act[0][o] != o {
            return Some(format!("zero does not act trivially on object {o}"));
        }
        for h in 0..nb {
            for k in 0..nb {
                if l.act[h][l.act[k][o]] != l.act[bar.add(h, k)][o] {
                    return Some(format!("action is not associative at ({h}, {k}, {o})"));
                }
            }
        }
    }
    for o in 0..n {
        for p in 0..n {
            if l.isomorphic(o, p) {
                for h in 0..nb {
                    if !l.isomorphic(l.act[h][o], l.act[h][p]) {
                        return Some(format!("action does not respect isomorphism at ({h}, {o}, {p})"));
                    }
                }
            }
        }
    }
    // free and transitive on classes
    let mut classes: Vec<usize> = l.class_of.clone();
    classes.sort_unstable();
    classes.dedup();
    if classes.len() != nb {
        return Some(format!("{} isomorphism classes for {} group elements", classes.len(), nb));
    }
    if n == 0 {
        return Some("no objects".into());
    }
    let mut hit: Vec<usize> = (0..nb).map(|h| l.class_of[l.act[h][0]]).collect();
    hit.sort_unstable();
    hit.dedup();
    if hit.len() != nb {
        return Some("action is not free and transitive on isomorphism classes".into());
    }
    let aar = a.arith();
    for o in 0..n {
        if l.twist[o][o] != 0 {
            return Some(format!("twist is nonzero on the identity of {o}"));
        }
        for p in (0..n).filter(|&p| l.isomorphic(o, p)) {
            for h in 0..nb {
                if l.twist[l.act[h][o]][l.act[h][p]] != l.twist[o][p] {
                    return Some(format!("twist is not invariant under the action at ({h}, {o}, {p})"));
                }
            }
            for r in (0..n).filter(|&r| l.isomorphic(p, r)) {
                if aar.add(l.twist[o][p], l.twist[p][r]) != l.twist[o][r] {
                    return Some(format!("twist is not additive at ({o}, {p}, {r})"));
                }
            }
        }
    }
    // unit and associativity of composition, on one object triple per class pattern
    for o in 0..n {
        for p in (0..n).filter(|&p| l.isomorphic(o, p)) {
            for m in 0..na {
                if l.compose(o, o, p, 0, m) != m || l.compose(o, p, p, m, 0) != m {
                    return Some(format!("identity is not a unit at ({o}, {p})"));
                }
            }
        }
    }
    // (α, m) ↦ (α·m, m) on Hom-sets: bijective on A x A
    let mut seen = vec![false; na * na];
    for alpha in 0..na {
        for m in 0..na {
            let img = aar.add(alpha, m) * na + m;
            if seen[img] {
                return Some("the map (α, m) ↦ (α + m, m) is not injective".into());
            }
            seen[img] = true;
        }
    }
    None
}

/// A morphism `(b, c) -> (b', c')` of a contracted product before quotienting:
/// `f: b -> b'·h`, `g: h·c -> c'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleMorphism {
    pub f: usize,
    pub h: usize,
    pub g: usize,
}

/// Normal form under `(f, h, g) ~ (f + γ, h, g - γ)`: transport all of `f` into `g`.
pub fn canonical_triple(t: TripleMorphism, a: &FinAbGroup) -> TripleMorphism {
    let ar = a.arith();
    TripleMorphism { f: 0, h: t.h, g: ar.add(t.f, t.g) }
}

/// The contracted product together with the data needed to talk about its morphisms.
#[derive(Clone, Debug)]
pub struct ContractedProduct {
    pub torsor: TorsorPresentation,
    left: TorsorPresentation,
    right: TorsorPresentation,
    left_coord: Vec<usize>,
}

impl ContractedProduct {
    pub fn pair_index(&self, b: usize, c: usize) -> usize {
        b * self.right.object_count() + c
    }

    pub fn pair(&self, o: usize) -> (usize, usize) {
        (o / self.right.object_count(), o % self.right.object_count())
    }

    /// The `h` forced by the endpoints, or `None` when the pairs are not isomorphic.
    pub fn forced_h(&self, from: usize, to: usize) -> Option<usize> {
        if !self.torsor.isomorphic(from, to) {
            return None;
        }
        let bar = self.left.base.objects().arith();
        let (b, _) = self.pair(from);
        let (b2, _) = self.pair(to);
        Some(bar.sub(self.left_coord[b], self.left_coord[b2]))
    }

    /// All raw triples `from -> to`.
    pub fn triples(&self, from: usize, to: usize) -> Vec<TripleMorphism> {
        let na = self.left.base.automorphisms().order();
        match self.forced_h(from, to) {
            None => Vec::new(),
            Some(h) => (0..na).flat_map(|f| (0..na).map(move |g| TripleMorphism { f, h, g })).collect(),
        }
    }

    /// Hom-set as equivalence classes of triples under the `γ`-relation,
    /// computed by orbit enumeration (not via `canonical_triple`).
    pub fn hom_classes(&self, from: usize, to: usize) -> Vec<Vec<TripleMorphism>> {
        let a = self.left.base.automorphisms();
        let ar = a.arith();
        let mut classes: Vec<Vec<TripleMorphism>> = Vec::new();
        for t in self.triples(from, to) {
            if classes.iter().any(|c| c.contains(&t)) {
                continue;
            }
            let mut orbit: Vec<TripleMorphism> =
                (0..a.order()).map(|gm| TripleMorphism { f: ar.add(t.f, gm), h: t.h, g: ar.sub(t.g, gm) }).collect();
            orbit.sort();
            orbit.dedup();
            classes.push(orbit);
        }
        classes
    }

    /// The value in `A` that the product presentation assigns to a triple class.
    pub fn value(&self, t: TripleMorphism) -> usize {
        canonical_triple(t, self.left.base.automorphisms()).g
    }

    /// Composite of raw triples: componentwise, the associator being trivial skeletally.
    pub fn compose(&self, t1: TripleMorphism, t2: TripleMorphism) -> TripleMorphism {
        let ar = self.left.base.automorphisms().arith();
        let bar = self.left.base.objects().arith();
        TripleMorphism { f: ar.add(t1.f, t2.f), h: bar.add(t1.h, t2.h), g: ar.add(t1.g, t2.g) }
    }

    /// The isomorphism `(b·h, c) -> (b, h·c)` given by the triple `(id, h, id)`.
    pub fn remark_iso(&self, b: usize, c: usize, h: usize) -> Option<(usize, usize, TripleMorphism)> {
        let from = self.pair_index(self.left.act[h][b], c);
        let to = self.pair_index(b, self.right.act[h][c]);
        (self.forced_h(from, to) == Some(h)).then_some((from, to, TripleMorphism { f: 0, h, g: 0 }))
    }
}

/// `L1 ∧ L2`: pairs `(b, c)` with `h·(b, c) = (b·h, c)`.
pub fn contracted_product(l1: &TorsorPresentation, l2: &TorsorPresentation) -> Result<ContractedProduct> {
    if l1.base != l2.base {
        return Err(Error::Mismatch("torsors over different Picard groupoids".into()));
    }
    for (name, l) in [("left", l1), ("right", l2)] {
        if let Some(why) = torsor_defect(l) {
            return Err(Error::Precondition(format!("{name} factor is not a torsor: {why}")));
        }
    }
    let b = l1.base.objects();
    let bar = b.arith();
    let a = l1.base.automorphisms().arith();
    let coord = |l: &TorsorPresentation| -> Vec<usize> {
        (0..l.object_count()).map(|o| l.class_coordinate(o).expect("torsor classes are reachable")).collect()
    };
    let (c1, c2) = (coord(l1), coord(l2));
    let (n1, n2) = (l1.object_count(), l2.object_count());
    let n = n1 * n2;
    let class_of: Vec<usize> = (0..n).map(|o| bar.add(c1[o / n2], c2[o % n2])).collect();
    let act: Vec<Vec<usize>> = (0..b.order()).map(|h| (0..n).map(|o| l1.act[h][o / n2] * n2 + o % n2).collect()).collect();
    // transport the factors' twists along f: b -> b'·h and g: h·c -> c'
    let twist: Vec<Vec<usize>> = (0..n)
        .map(|o| {
            (0..n)
                .map(|p| {
                    if class_of[o] != class_of[p] {
                        return 0;
                    }
                    let (bo, co) = (o / n2, o % n2);
                    let (bp, cp) = (p / n2, p % n2);
                    let h = bar.sub(c1[bo], c1[bp]);
                    a.add(l1.twist[bo][l1.act[h][bp]], l2.twist[l2.act[h][co]][cp])
                })
                .collect()
        })
        .collect();
    let torsor = TorsorPresentation { base: l1.base.clone(), class_of, act, twist };
    Ok(ContractedProduct { torsor, left: l1.clone(), right: l2.clone(), left_coord: c1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    #[test]
    fn make_picard_examples() {
        assert!(PicardGroupoid::new(z(2), z(2), vec![vec![vec![0]]]).unwrap().is_strict());
        let p = PicardGroupoid::new(z(2), z(2), vec![vec![vec![1]]]).unwrap();
        assert_eq!(p.q_invariant(&[1]), vec![1]);
        for v in 1..2 {
            assert!(matches!(PicardGroupoid::new(z(3), z(2), vec![vec![vec![v]]]), Err(Error::Validation(_))));
        }
        // antisymmetry failure on Z/4 with c = xy
        assert!(matches!(PicardGroupoid::new(z(4), z(4), vec![vec![vec![1]]]), Err(Error::Validation(_))));
        // c = 2xy on Z/4 is antisymmetric
        assert!(PicardGroupoid::new(z(4), z(4), vec![vec![vec![2]]]).is_ok());
    }

    #[test]
    fn q_is_additive_and_two_torsion() {
        let b: FinAbGroup = "Z/2xZ/4".parse().unwrap();
        let a: FinAbGroup = "Z/2xZ/4".parse().unwrap();
        let coef = vec![vec![vec![1, 0], vec![1, 2]], vec![vec![1, 2], vec![0, 2]]];
        let p = PicardGroupoid::new(b.clone(), a.clone(), coef).unwrap();
        for i in 0..b.order() {
            let x = b.element(i);
            assert!(FinAbGroup::is_zero(&a.scale(2, &p.q_invariant(&x))));
            for j in 0..b.order() {
                let y = b.element(j);
                let lhs = p.q_invariant(&b.add(&x, &y));
                assert_eq!(lhs, a.add(&p.q_invariant(&x), &p.q_invariant(&y)));
            }
        }
    }

    #[test]
    fn suspension_round_trip() {
        let s = PicardGroupoid::suspension(&z(2));
        assert!(s.objects().is_trivial());
        assert_eq!(s.automorphisms(), &z(2));
        assert!(PicardGroupoid::suspension(&FinAbGroup::trivial()).automorphisms().is_trivial());
    }

    #[test]
    fn non_transitive_action_is_rejected() {
        let base = PicardGroupoid::strict(z(2), z(2));
        let mut l = TorsorPresentation::trivial(&base);
        assert!(is_torsor(&l));
        l.act[1] = vec![0, 1];
        assert!(!is_torsor(&l));
    }

    #[test]
    fn canonical_triple_is_idempotent_and_class_constant() {
        let a = z(4);
        for f in 0..4 {
            for g in 0..4 {
                let t = TripleMorphism { f, h: 1, g };
                let c = canonical_triple(t, &a);
                assert_eq!(canonical_triple(c, &a), c);
                for gm in 0..4 {
                    let s = TripleMorphism { f: (f + gm) % 4, h: 1, g: (g + 4 - gm) % 4 };
                    assert_eq!(canonical_triple(s, &a), c);
                }
            }
        }
    }
}
