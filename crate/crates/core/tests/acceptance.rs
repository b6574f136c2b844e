//! The acceptance suite: one PASS/FAIL line per criterion, each under its
//! own time budget. Expected values come from brute-force enumeration written
//! here, independent of the library's linear algebra.
//!
//! Criteria that cannot hold as stated are listed in `KNOWN_UNATTAINABLE`;
//! they are still evaluated and printed, and the run fails only when some
//! other criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use catext_core::biext::{
    check_biext, commutator_biextension, final_theorem_check, interchange_defect, is_trivial, symmetric_data, BiextCocycle,
    SkeletalMonoidalDatum,
};
use catext_core::catbiext::{check_cat_biext, check_symmetric, residual_22, residual_23, residual_32, SymBiextDatum};
use catext_core::cochain::{all_cochains, bar_delta, is_cocycle, Cochain};
use catext_core::cohomology::cohomology_group;
use catext_core::extension::{check_k5, check_pentagon, classify_moncat, MonBicatExtension, MonCatExtension};
use catext_core::pcohom::{les_check, picard_cohomology, Backend};
use catext_core::picard::{contracted_product, is_torsor, PicardGroupoid, TorsorPresentation};
use catext_core::qcomplex::{
    check_42, check_theta_44, residual_42, residual_44, specialize_24_to_23, specialize_42_to_32, theta_specialize, BiQData, CDatum,
    Specialization, ThetaMatrix,
};
use catext_core::report::Report;
use catext_core::table::Table;
use catext_core::{Error, FinAbGroup, Limits};

const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[
    (
        5,
        "over Z/2 the only free point of a normalized 3- or 4-cochain is (1,...,1), so flipping xyz or xyzt there gives the zero cochain, which is a cocycle",
    ),
    (
        8,
        "the (2,2) residual is blind to χ(u,u;w,w) on every group, since a change there enters twice and cancels in 2-torsion; and over Z/2 the (3,2), (2,3), (4,2) residuals vanish identically on normalized data, so no perturbation there can be seen",
    ),
];

struct Verdict {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Verdict {
    Verdict { pass: true, detail: detail.into() }
}

fn bad(detail: impl Into<String>) -> Verdict {
    Verdict { pass: false, detail: detail.into() }
}

/// Collects sub-check failures; the first few are kept for the report line.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.failures.push(what());
        }
    }

    fn verdict(self, summary: &str) -> Verdict {
        if self.failures.is_empty() {
            ok(format!("{summary}; {} checks", self.checks))
        } else {
            // group messages of the form "<kind> at <point>" by kind
            let mut kinds: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
            for f in &self.failures {
                *kinds.entry(f.split(" at ").next().unwrap_or(f)).or_default() += 1;
            }
            let shown: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} x{n}")).collect();
            bad(format!("{} of {} checks failed: {}", self.failures.len(), self.checks, shown.join(", ")))
        }
    }
}

fn g(s: &str) -> FinAbGroup {
    s.parse().unwrap()
}

fn lim() -> Limits {
    Limits::new(20_000_000)
}

/// Order of `Z^n / B^n` by listing every cochain.
fn enumerated_order(group: &FinAbGroup, coeff: &FinAbGroup, n: usize, limits: &Limits) -> usize {
    let cocycles = all_cochains(group, coeff, n, limits).unwrap().into_iter().filter(|c| is_cocycle(c, limits).unwrap()).count();
    let boundaries: BTreeSet<Vec<usize>> = if n == 0 {
        BTreeSet::from([Vec::new()])
    } else {
        all_cochains(group, coeff, n - 1, limits)
            .unwrap()
            .iter()
            .map(|c| {
                let d = bar_delta(c, limits).unwrap();
                d.table().free_tuples().iter().map(|t| d.get(t)).collect()
            })
            .collect()
    };
    cocycles / boundaries.len()
}

fn criterion_1() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let mut t = Tally::default();
    for n in 1..=4 {
        let h = cohomology_group(&z2, &z2, n, &l).unwrap();
        t.expect(h.invariants.0 == vec![2], || format!("H^{n} = {}", h.invariants));
        if n <= 3 {
            let order = enumerated_order(&z2, &z2, n, &l);
            t.expect(order == 2, || format!("enumeration gives |H^{n}| = {order}"));
        }
    }
    t.verdict("H^n(Z/2,Z/2) = Z/2 for n = 1..4")
}

fn criterion_2() -> Verdict {
    let l = lim();
    let mut t = Tally::default();
    let mut enumerated = 0;
    for gs in ["Z/2", "Z/3"] {
        for a in ["Z/2", "Z/3"] {
            let (gg, aa) = (g(gs), g(a));
            let base = PicardGroupoid::suspension(&aa);
            for n in 0..=3 {
                let want = cohomology_group(&gg, &aa, n + 1, &l).unwrap().invariants;
                let got = picard_cohomology(&gg, &base, n, Backend::Structured, &l).unwrap().invariants;
                t.expect(got == want, || format!("G={gs} A={a} n={n}: {got} vs {want}"));
                match picard_cohomology(&gg, &base, n, Backend::Enumerate, &Limits::new(2_000_000)) {
                    Ok(e) => {
                        enumerated += 1;
                        t.expect(e.invariants == want, || format!("enumerated G={gs} A={a} n={n}: {}", e.invariants));
                    }
                    Err(Error::Resource { .. }) => {}
                    Err(e) => t.expect(false, || format!("{e}")),
                }
            }
        }
    }
    t.verdict(&format!("H^n(G,ΣA) = H^(n+1)(G,A), {enumerated} cases also by enumeration"))
}

fn criterion_3() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let base = PicardGroupoid::strict(z2.clone(), z2.clone());
    let mut t = Tally::default();
    for n in 0..=2 {
        let e = picard_cohomology(&z2, &base, n, Backend::Enumerate, &l).unwrap();
        let hb = cohomology_group(&z2, &z2, n, &l).unwrap().invariants;
        let ha = cohomology_group(&z2, &z2, n + 1, &l).unwrap().invariants;
        let want = hb.direct_sum(&ha);
        t.expect(e.invariants == want, || format!("n={n}: {} vs {want}", e.invariants));
        let order = (enumerated_order(&z2, &z2, n, &l) * enumerated_order(&z2, &z2, n + 1, &l)) as u128;
        t.expect(e.order() == order, || format!("n={n}: enumerated order {} vs product {order}", e.order()));
    }
    t.verdict("H^n(Z/2, Z/2 x ΣZ/2) = H^n(B) + H^(n+1)(A) by enumeration")
}

fn criterion_4() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let mut t = Tally::default();
    for (label, coef) in [("c=0", 0), ("c=xy", 1)] {
        let base = PicardGroupoid::new(z2.clone(), z2.clone(), vec![vec![vec![coef]]]).unwrap();
        for n in 1..=2 {
            let r = les_check(&z2, &base, n, &l).unwrap();
            t.expect(r.exact(), || format!("{label} n={n}: {r:?}"));
        }
    }
    t.verdict("exact at H^n(G,𝒜) and H^n(G,B)")
}

fn xyz(l: &Limits) -> Cochain {
    let z2 = g("Z/2");
    Cochain::from_fn(&z2, &z2, 3, l, |x| x.iter().product()).unwrap()
}

fn criterion_5() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let mut t = Tally::default();
    let f = xyz(&l);
    let e = MonCatExtension::new(z2.clone(), z2.clone(), f.clone()).unwrap();
    t.expect(check_pentagon(&e, &l).unwrap(), || "xyz fails the pentagon".into());
    let c = classify_moncat(&e, &l).unwrap();
    t.expect(c.invariants == vec![2] && c.coordinates == vec![1], || format!("xyz classifies as {c:?}"));
    let base = PicardGroupoid::suspension(&z2);
    let theta = Cochain::from_fn(&z2, &z2, 4, &l, |x| x.iter().product()).unwrap();
    let pointed = Cochain::zero(&z2, base.objects(), 3, &l).unwrap();
    let b = MonBicatExtension::new(base.clone(), z2.clone(), pointed.clone(), theta.clone()).unwrap();
    t.expect(check_k5(&b, &l).unwrap(), || "xyzt fails K5".into());
    for p in f.free_tuples() {
        let mut q = f.clone();
        q.set(&p, 1 - f.get(&p)).unwrap();
        let e = MonCatExtension::new(z2.clone(), z2.clone(), q).unwrap();
        t.expect(!check_pentagon(&e, &l).unwrap(), || format!("f flipped at {p:?} still passes"));
    }
    for p in theta.free_tuples() {
        let mut q = theta.clone();
        q.set(&p, 1 - theta.get(&p)).unwrap();
        let b = MonBicatExtension::new(base.clone(), z2.clone(), pointed.clone(), q).unwrap();
        t.expect(!check_k5(&b, &l).unwrap(), || format!("θ flipped at {p:?} still passes"));
    }
    t.verdict("xyz generates H^3, xyzt passes K5, perturbations rejected")
}

fn criterion_6() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let mut t = Tally::default();
    let d = SkeletalMonoidalDatum::new(xyz(&l), None, None).unwrap();
    let e = commutator_biextension(&d, &l).unwrap();
    // expand the two five-term associator sums by hand at every index triple
    let a = |x: usize, y: usize, z: usize| x * y * z;
    let afun = |x: usize, x1: usize, y: usize| (a(y, x, x1) + a(x, y, x1) + a(x, x1, y)) % 2;
    let bfun = |x: usize, y: usize, y1: usize| (a(y, y1, x) + a(y, x, y1) + a(x, y, y1)) % 2;
    for x in 0..2 {
        for x1 in 0..2 {
            for y in 0..2 {
                t.expect(e.afun.get(&[x, x1, y]) == afun(x, x1, y) && afun(x, x1, y) == x * x1 * y, || format!("Afun at {:?}", (x, x1, y)));
                t.expect(e.bfun.get(&[x, x1, y]) == bfun(x, x1, y) && bfun(x, x1, y) == x * x1 * y, || format!("Bfun at {:?}", (x, x1, y)));
            }
        }
    }
    t.expect(check_biext(&e).passed(), || "commutator fails check_biext".into());
    t.expect(is_trivial(&e, &l).unwrap().is_none(), || "found a trivialization".into());
    // no section h: Z/2 x Z/2 -> Z/2 trivializes it; there is one free value
    for h in 0..2 {
        let s = catext_core::biext::section_table(&z2, &z2, &z2, &l, |_| h).unwrap();
        t.expect(BiextCocycle::coboundary(&s, &l).unwrap() != e, || format!("section {h} trivializes"));
    }
    for idx in 0..256usize {
        let b: Vec<usize> = (0..8).map(|k| (idx >> k) & 1).collect();
        let defect = interchange_defect(&d, b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7]);
        t.expect(defect == 0, || format!("interchange fails at {b:?}"));
    }
    t.verdict("Afun = xx'y, Bfun = xyy', nontrivial, interchange holds")
}

fn criterion_7() -> Verdict {
    let l = lim();
    let mut t = Tally::default();
    let mut data = 0;
    let mut shifts = 0;
    for gs in ["Z/2", "Z/3"] {
        for a in ["Z/2", "Z/3"] {
            let all = symmetric_data(&g(gs), &g(a), &l).unwrap();
            t.expect(!all.is_empty(), || format!("no symmetric data on {gs}, {a}"));
            for d in &all {
                data += 1;
                match final_theorem_check(d, &l) {
                    Ok(r) => {
                        shifts += r.message.as_deref().and_then(|m| m.split(' ').next()).and_then(|k| k.parse::<usize>().ok()).unwrap_or(0);
                        t.expect(r.passed(), || format!("{gs},{a}: {:?}", r.witnesses));
                    }
                    Err(e) => t.expect(false, || format!("{gs},{a}: {e}")),
                }
            }
        }
    }
    t.verdict(&format!("{data} symmetric data, {shifts} section shifts, all alternating"))
}

fn dot(grp: &FinAbGroup, u: usize, v: usize) -> usize {
    let (a, b) = (grp.element(u), grp.element(v));
    (a.iter().zip(&b).map(|(p, q)| p * q).sum::<i64>().rem_euclid(2)) as usize
}

fn idx(grp: &FinAbGroup, tuple: &[Vec<i64>]) -> Vec<usize> {
    tuple.iter().map(|e| grp.index_of(e)).collect()
}

/// Runs one perturbation: the report must name `eq` and the residual must be
/// nonzero at the reported tuple.
fn detected(t: &mut Tally, r: &Report, eq: &str, what: &str, residual_at: impl Fn(&[Vec<i64>]) -> usize) {
    match r.witness(eq) {
        None => t.expect(false, || format!("{eq} misses {what}")),
        Some(w) => t.expect(residual_at(&w.tuple) != 0, || format!("{eq} witness {:?} for {what} has zero residual", w.tuple)),
    }
}

fn criterion_8() -> Verdict {
    let l = lim();
    let z2 = g("Z/2");
    let susp = PicardGroupoid::suspension(&z2);
    let mut t = Tally::default();
    for gs in ["Z/2", "Z/2xZ/2", "Z/4"] {
        let gg = g(gs);
        let (ga, ar) = (gg.arith(), z2.arith());
        // zero data
        let zero = SymBiextDatum::zero(&gg, &gg, &susp, &l).unwrap();
        t.expect(check_cat_biext(&zero.bi).unwrap().passed() && check_symmetric(&zero).unwrap().passed(), || {
            format!("{gs}: zero sym data")
        });
        let zq = BiQData::zero(&gg, &gg, &z2, &l).unwrap();
        t.expect(check_42(&zq).unwrap().passed(), || format!("{gs}: zero (4,2) data"));
        t.expect(check_theta_44(&ThetaMatrix::from_fn(&gg, &z2, &l, |_| 0).unwrap()).passed(), || format!("{gs}: zero θ"));

        // fixtures: χ(x,x';y,y') = <x,x'><y,y'> and θ(x y / z t) = <y,z>
        let mut s = zero.clone();
        s.bi.chi = Table::from_fn(s.bi.chi.slots().to_vec(), z2.clone(), s.bi.chi.normalization(), &l, |v| {
            dot(&gg, v[0], v[1]) * dot(&gg, v[2], v[3])
        })
        .unwrap();
        t.expect(check_cat_biext(&s.bi).unwrap().passed() && check_symmetric(&s).unwrap().passed(), || format!("{gs}: χ fixture"));
        let mut q = zq.clone();
        q.chi = s.bi.chi.clone();
        t.expect(check_42(&q).unwrap().passed(), || format!("{gs}: (4,2) fixture"));
        let th = ThetaMatrix::from_fn(&gg, &z2, &l, |m| dot(&gg, m[1], m[2])).unwrap();
        t.expect(check_theta_44(&th).passed(), || format!("{gs}: θ fixture"));

        // single-point perturbations
        for p in s.bi.chi.free_tuples() {
            let mut sp = s.clone();
            sp.bi.chi = sp.bi.chi.perturbed(&p, 1).unwrap();
            let what = format!("{gs} χ at {p:?}");
            let r = check_cat_biext(&sp.bi).unwrap();
            detected(&mut t, &r, "(3,2)", &what, |w| {
                let v = idx(&gg, w);
                residual_32(&sp.bi.chi, &ga, &ar, v[0], v[1], v[2], v[3], v[4])
            });
            detected(&mut t, &r, "(2,3)", &what, |w| {
                let v = idx(&gg, w);
                residual_23(&sp.bi.chi, &ga, &ar, v[0], v[1], v[2], v[3], v[4])
            });
            detected(&mut t, &check_symmetric(&sp).unwrap(), "(2,2)", &what, |w| {
                let v = idx(&gg, w);
                residual_22(&sp, &ga, &ga, &ar, v[0], v[1], v[2], v[3])
            });
            let mut qp = q.clone();
            qp.chi = sp.bi.chi.clone();
            detected(&mut t, &check_42(&qp).unwrap(), "(4,2)", &what, |w| residual_42(&qp, &ga, &ga, &ar, &idx(&gg, w)));
        }
        for which in ["mu1", "mu2"] {
            let table = if which == "mu1" { &s.mu1 } else { &s.mu2 };
            for p in table.free_tuples() {
                let mut sp = s.clone();
                let slot = if which == "mu1" { &mut sp.mu1 } else { &mut sp.mu2 };
                *slot = slot.perturbed(&p, 1).unwrap();
                detected(&mut t, &check_symmetric(&sp).unwrap(), "(2,2)", &format!("{gs} {which} at {p:?}"), |w| {
                    let v = idx(&gg, w);
                    residual_22(&sp, &ga, &ga, &ar, v[0], v[1], v[2], v[3])
                });
            }
        }
        for p in q.theta_row.free_tuples() {
            let mut qp = q.clone();
            qp.theta_row = qp.theta_row.perturbed(&p, 1).unwrap();
            detected(&mut t, &check_42(&qp).unwrap(), "(4,2)", &format!("{gs} θRow at {p:?}"), |w| {
                residual_42(&qp, &ga, &ga, &ar, &idx(&gg, w))
            });
        }
        for p in th.theta.free_tuples() {
            let tp = ThetaMatrix::new(th.theta.perturbed(&p, 1).unwrap()).unwrap();
            detected(&mut t, &check_theta_44(&tp), "(4,4)", &format!("{gs} θ at {p:?}"), |w| residual_44(&tp, &ga, &ar, &idx(&gg, w)));
        }
    }
    t.verdict("zero data and fixtures pass; every perturbation caught with a nonzero-residual witness")
}

/// Every table over the given slots with all free values drawn from `coeff`.
fn all_tables(template: &Table, limits: &Limits) -> Vec<Table> {
    let free = template.free_tuples();
    let n = template.coeff().order();
    let count = (n as u128).pow(free.len() as u32);
    limits.check("tables", count).unwrap();
    (0..count as usize)
        .map(|mut code| {
            let mut t = template.clone();
            for p in &free {
                t.set(p, code % n).unwrap();
                code /= n;
            }
            t
        })
        .collect()
}

fn criterion_9() -> Verdict {
    let l = lim();
    let mut t = Tally::default();
    let mut data = 0;
    // every datum over |G| = |H| = 2: the specializations are identities, not consequences
    for a in ["Z/2", "Z/3"] {
        let zero = BiQData::zero(&g("Z/2"), &g("Z/2"), &g(a), &l).unwrap();
        for f in all_tables(&zero.f, &l) {
            for gfun in all_tables(&zero.gfun, &l) {
                for theta_row in all_tables(&zero.theta_row, &l) {
                    for theta_col in all_tables(&zero.theta_col, &l) {
                        for chi in all_tables(&zero.chi, &l) {
                            let d = BiQData {
                                f: f.clone(),
                                gfun: gfun.clone(),
                                theta_row: theta_row.clone(),
                                theta_col: theta_col.clone(),
                                chi,
                                ..zero.clone()
                            };
                            data += 1;
                            t.expect(specialize_42_to_32(&d).unwrap().passed(), || format!("(4,2)->(3,2) on {d:?}"));
                            t.expect(specialize_24_to_23(&d).unwrap().passed(), || format!("(2,4)->(2,3) on {d:?}"));
                        }
                    }
                }
            }
        }
    }
    // the two face specializations of the cube: z = 0 is the 2-cocycle
    // condition on c, x = t = 0 is its symmetry
    let mut cs = 0;
    for (gs, bs) in [("Z/2", "Z/2"), ("Z/3", "Z/3"), ("Z/2xZ/2", "Z/2")] {
        let (gg, bb) = (g(gs), g(bs));
        let zero_c = CDatum::from_fn(&gg, &bb, &l, |_| 0).unwrap();
        let th0 = ThetaMatrix::from_fn(&gg, &bb, &l, |_| 0).unwrap();
        for c in all_tables(&zero_c.c, &l) {
            cs += 1;
            let cd = CDatum::new(c.clone()).unwrap();
            let cocycle = is_cocycle(&Cochain::from_table(&gg, c.clone()).unwrap(), &l).unwrap();
            let n = gg.order();
            let symmetric = (0..n).all(|x| (0..n).all(|y| c.get(&[x, y]) == c.get(&[y, x])));
            let z = theta_specialize(&th0, Some(&cd), Specialization::LowerLeft).unwrap();
            let xt = theta_specialize(&th0, Some(&cd), Specialization::Diagonal).unwrap();
            t.expect(z.passed() == cocycle, || format!("{gs}: z=0 verdict {} vs cocycle {cocycle}", z.passed()));
            t.expect(xt.passed() == symmetric, || format!("{gs}: x=t=0 verdict {} vs symmetric {symmetric}", xt.passed()));
        }
    }
    // θ side on Z/2: every θ passing (4,4) passes both restrictions, and a
    // restriction fails exactly when some masked tuple has a nonzero residual
    let z2 = g("Z/2");
    let (ga, ar) = (z2.arith(), z2.arith());
    let template = ThetaMatrix::from_fn(&z2, &z2, &l, |_| 0).unwrap();
    for table in all_tables(&template.theta, &l) {
        let th = ThetaMatrix::new(table).unwrap();
        let full = check_theta_44(&th).passed();
        for mask in [Specialization::LowerLeft, Specialization::Diagonal] {
            let r = theta_specialize(&th, None, mask).unwrap();
            let zeroed = mask.zeroed();
            let brute = (0..256usize).all(|code| {
                let v: Vec<usize> = (0..8).map(|k| (code >> k) & 1).collect();
                let masked = zeroed.iter().all(|&p| v[p] == 0 && v[4 + p] == 0);
                !masked || residual_44(&th, &ga, &ar, &v) == 0
            });
            t.expect(r.passed() == brute, || format!("{} restriction disagrees with brute force", mask.label()));
            t.expect(!full || r.passed(), || format!("{} restriction fails for a passing θ", mask.label()));
        }
    }
    t.verdict(&format!("{data} (4,2)/(2,4) data, {cs} c-data, all θ on Z/2"))
}

fn criterion_10() -> Verdict {
    let groups = ["Z/1", "Z/2", "Z/3", "Z/4", "Z/2xZ/2"];
    let mut t = Tally::default();
    let mut bases = 0;
    for bs in groups {
        for as_ in groups {
            let (b, a) = (g(bs), g(as_));
            // every coefficient tensor; the constructor keeps the valid ones
            let r = b.rank();
            let entries = r * r;
            let pool: Vec<Vec<i64>> = (0..a.order()).map(|i| a.element(i)).collect();
            let total = pool.len().pow(entries as u32);
            for code in 0..total {
                let mut k = code;
                let coef: Vec<Vec<Vec<i64>>> = (0..r)
                    .map(|_| {
                        (0..r)
                            .map(|_| {
                                let e = pool[k % pool.len()].clone();
                                k /= pool.len();
                                e
                            })
                            .collect()
                    })
                    .collect();
                let Ok(base) = PicardGroupoid::new(b.clone(), a.clone(), coef) else { continue };
                bases += 1;
                check_base(&mut t, &base, &format!("B={bs} A={as_} #{code}"));
            }
        }
    }
    t.verdict(&format!("{bases} Picard groupoids"))
}

fn check_base(t: &mut Tally, base: &PicardGroupoid, label: &str) {
    let unit = TorsorPresentation::trivial(base);
    let p = contracted_product(&unit, &unit).unwrap();
    let (nb, na) = (base.objects().order(), base.automorphisms().order());
    let bar = base.objects().arith();
    t.expect(is_torsor(&p.torsor), || format!("{label}: product is not a torsor"));
    // the functor (b, c) -> b + c is essentially surjective and reflects isomorphism
    let n = p.torsor.object_count();
    let mut classes = BTreeSet::new();
    for o in 0..n {
        let (b, c) = p.pair(o);
        classes.insert(p.torsor.class_of[o]);
        for q in 0..n {
            let (b2, c2) = p.pair(q);
            let iso = p.torsor.isomorphic(o, q);
            t.expect(iso == (bar.add(b, c) == bar.add(b2, c2)), || format!("{label}: isomorphism of {o},{q}"));
            let homs = p.hom_classes(o, q);
            if iso {
                t.expect(homs.len() == na, || format!("{label}: |Hom({o},{q})| = {}", homs.len()));
                let values: BTreeSet<usize> = homs.iter().map(|cls| p.value(cls[0])).collect();
                t.expect(values.len() == na, || format!("{label}: Hom({o},{q}) not faithful"));
                t.expect(homs.iter().all(|cls| cls.iter().all(|&m| p.value(m) == p.value(cls[0]))), || {
                    format!("{label}: value not constant on a class")
                });
            } else {
                t.expect(homs.is_empty(), || format!("{label}: morphisms between non-isomorphic {o},{q}"));
            }
        }
    }
    t.expect(classes.len() == nb, || format!("{label}: {} classes", classes.len()));
    for b in 0..nb {
        for c in 0..nb {
            for h in 0..nb {
                match p.remark_iso(b, c, h) {
                    Some((from, to, m)) => t
                        .expect(p.torsor.isomorphic(from, to) && p.hom_classes(from, to).iter().any(|cls| cls.contains(&m)), || {
                            format!("{label}: remark iso ({b},{c},{h}) not a morphism")
                        }),
                    None => t.expect(false, || format!("{label}: remark iso ({b},{c},{h}) missing")),
                }
            }
        }
    }
    // iterated products stay torsors
    for (l, r) in [(&p.torsor, &unit), (&unit, &p.torsor)] {
        match contracted_product(l, r) {
            Ok(q) => t.expect(is_torsor(&q.torsor), || format!("{label}: iterated product is not a torsor")),
            Err(e) => t.expect(false, || format!("{label}: {e}")),
        }
    }
}

fn main() {
    // (id, budget in seconds, check)
    type Criterion = (u32, u64, fn() -> Verdict);
    let criteria: Vec<Criterion> = vec![
        (1, 1, criterion_1),
        (2, 10, criterion_2),
        (3, 60, criterion_3),
        (4, 60, criterion_4),
        (5, 1, criterion_5),
        (6, 1, criterion_6),
        (7, 60, criterion_7),
        (8, 120, criterion_8),
        (9, 60, criterion_9),
        (10, 10, criterion_10),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut unexpected = Vec::new();
    for (id, budget, run) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(budget);
        let pass = v.pass && in_time;
        let timing = format!("{} ms, limit {budget} s", took.as_millis());
        let status = if pass { "PASS" } else { "FAIL" };
        let detail = if in_time { v.detail } else { format!("over time; {}", v.detail) };
        println!("criterion {id:>2}: {status} ({timing}) {detail}");
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id);
        match (pass, known) {
            (false, Some((_, why))) => println!("              known unattainable: {why}"),
            (false, None) => unexpected.push(id),
            (true, Some(_)) => println!("              listed as unattainable but passed"),
            (true, None) => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
