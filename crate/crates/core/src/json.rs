//! JSON documents for every input the CLI reads. Syntax and layout errors come
//! from serde_json and carry a line and column; value-level errors name the key.
//!
//! Function tables are sparse lists of `{"args": [...], "value": ...}` with
//! omitted tuples meaning 0. Degenerate tuples may not appear as keys.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::biext::{BiextCocycle, SkeletalMonoidalDatum};
use crate::catbiext::{CatBiextCocycle, SymBiextDatum};
use crate::cochain::Cochain;
use crate::error::{Error, Limits, Result};
use crate::extension::{MonBicatExtension, MonCatExtension};
use crate::group::{parse_group, Elem, FinAbGroup};
use crate::picard::PicardGroupoid;
use crate::qcomplex::{BiQData, CDatum, ThetaMatrix};
use crate::table::{Normalization, Table};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub args: Vec<Elem>,
    pub value: Elem,
}

/// Parses JSON text into `T`; the message keeps serde_json's position.
pub fn from_text<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// The `kind` field, if any, without committing to a layout.
pub fn peek_kind(text: &str) -> Result<Option<String>> {
    let v: serde_json::Value = from_text(text)?;
    Ok(v.get("kind").and_then(|k| k.as_str()).map(str::to_string))
}

fn expect_kind(found: &Option<String>, allowed: &[&str]) -> Result<()> {
    match found {
        Some(k) if !allowed.contains(&k.as_str()) => Err(Error::Parse(format!("kind {k:?} where one of {allowed:?} was expected"))),
        _ => Ok(()),
    }
}

fn group(text: &str, key: &str) -> Result<FinAbGroup> {
    parse_group(text).map_err(|e| Error::Parse(format!("{key}: {e}")))
}

pub fn table_from_entries(
    slots: Vec<FinAbGroup>,
    coeff: &FinAbGroup,
    norm: Normalization,
    entries: &[Entry],
    key: &str,
    limits: &Limits,
) -> Result<Table> {
    let mut t = Table::zero(slots, coeff.clone(), norm, limits)?;
    let mut seen = std::collections::BTreeSet::new();
    for (k, e) in entries.iter().enumerate() {
        let at = format!("{key}[{k}]");
        if e.args.len() != t.arity() {
            return Err(Error::Domain(format!("{at}: {} arguments, expected {}", e.args.len(), t.arity())));
        }
        let mut idx = Vec::with_capacity(e.args.len());
        for (a, g) in e.args.iter().zip(t.slots()) {
            if !g.contains(a) {
                return Err(Error::Domain(format!("{at}: argument {a:?} is not a reduced element of {g}")));
            }
            idx.push(g.index_of(a));
        }
        if !coeff.contains(&e.value) {
            return Err(Error::Domain(format!("{at}: value {:?} is not a reduced element of {coeff}", e.value)));
        }
        if t.is_degenerate(&idx) {
            return Err(Error::Domain(format!("{at}: tuple {:?} is degenerate and cannot be a key", e.args)));
        }
        if !seen.insert(idx.clone()) {
            return Err(Error::Domain(format!("{at}: tuple {:?} listed twice", e.args)));
        }
        t.set(&idx, coeff.index_of(&e.value))?;
    }
    Ok(t)
}

/// Nonzero entries in lexicographic order of argument indices.
pub fn table_to_entries(t: &Table) -> Vec<Entry> {
    (0..t.len())
        .filter_map(|flat| {
            let idx = t.unflat(flat);
            let v = t.get(&idx);
            (v != 0).then(|| Entry { args: idx.iter().zip(t.slots()).map(|(&i, g)| g.element(i)).collect(), value: t.coeff().element(v) })
        })
        .collect()
}

fn normalized(slots: &[&FinAbGroup], coeff: &FinAbGroup, entries: &Option<Vec<Entry>>, key: &str, limits: &Limits) -> Result<Table> {
    let slots = slots.iter().map(|g| (*g).clone()).collect();
    table_from_entries(slots, coeff, Normalization::AnySlotZero, entries.as_deref().unwrap_or(&[]), key, limits)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default)]
    pub values: Vec<Entry>,
}

impl CochainDoc {
    pub fn encode(c: &Cochain) -> CochainDoc {
        CochainDoc {
            group: Some(c.group().to_string()),
            coeff: Some(c.coeff().to_string()),
            degree: Some(c.degree()),
            values: table_to_entries(c.table()),
        }
    }

    /// Self-contained decoding; all three header fields are required.
    pub fn decode(&self, limits: &Limits) -> Result<Cochain> {
        let (Some(g), Some(a), Some(n)) = (&self.group, &self.coeff, self.degree) else {
            return Err(Error::Parse("cochain needs group, coeff and degree".into()));
        };
        self.decode_in(&group(g, "group")?, &group(a, "coeff")?, n, "values", limits)
    }

    /// Decoding inside an envelope that fixes the shape; header fields, when
    /// present, must agree with it.
    pub fn decode_in(&self, g: &FinAbGroup, a: &FinAbGroup, n: usize, key: &str, limits: &Limits) -> Result<Cochain> {
        if let Some(s) = &self.group {
            if &group(s, key)? != g {
                return Err(Error::Mismatch(format!("{key}: group {s} differs from {g}")));
            }
        }
        if let Some(s) = &self.coeff {
            if &group(s, key)? != a {
                return Err(Error::Mismatch(format!("{key}: coefficients {s} differ from {a}")));
            }
        }
        if let Some(d) = self.degree {
            if d != n {
                return Err(Error::Mismatch(format!("{key}: degree {d} where {n} was expected")));
            }
        }
        let t = table_from_entries(vec![g.clone(); n], a, Normalization::AnySlotZero, &self.values, key, limits)?;
        Cochain::from_table(g, t)
    }
}

/// A coefficient of the symmetry form: a bare integer is accepted when `A` is cyclic.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Scalar(i64),
    Elem(Elem),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PicardDoc {
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(default)]
    pub c: Vec<Vec<Coef>>,
}

impl PicardDoc {
    pub fn encode(p: &PicardGroupoid) -> PicardDoc {
        let scalar = p.automorphisms().rank() == 1;
        let c = p
            .coefficients()
            .iter()
            .map(|row| row.iter().map(|v| if scalar { Coef::Scalar(v[0]) } else { Coef::Elem(v.clone()) }).collect())
            .collect();
        PicardDoc { b: p.objects().to_string(), a: p.automorphisms().to_string(), c }
    }

    pub fn decode(&self) -> Result<PicardGroupoid> {
        let (b, a) = (group(&self.b, "B")?, group(&self.a, "A")?);
        if self.c.is_empty() {
            return Ok(PicardGroupoid::strict(b, a));
        }
        let mut coef = Vec::new();
        for row in &self.c {
            let mut r = Vec::new();
            for v in row {
                r.push(match v {
                    Coef::Elem(e) => e.clone(),
                    Coef::Scalar(s) if a.rank() == 1 => vec![*s],
                    Coef::Scalar(0) if a.rank() == 0 => vec![],
                    Coef::Scalar(_) => return Err(Error::Parse(format!("c: scalar entry needs cyclic A, got {a}"))),
                });
            }
            coef.push(r);
        }
        PicardGroupoid::new(b, a, coef)
    }
}

/// An inline object or a path to a file holding one.
pub fn picard_from_arg(arg: &str) -> Result<PicardGroupoid> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    from_text::<PicardDoc>(&text)?.decode()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub picard: Option<PicardDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<CochainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<CochainDoc>,
}

impl ExtensionDoc {
    pub fn decode_moncat(&self, limits: &Limits) -> Result<MonCatExtension> {
        expect_kind(&self.kind, &["moncat-ext"])?;
        let g = group(&self.g, "G")?;
        let a = group(self.a.as_deref().ok_or_else(|| Error::Parse("moncat-ext needs A".into()))?, "A")?;
        let f = match &self.f {
            Some(f) => f.decode_in(&g, &a, 3, "f", limits)?,
            None => Cochain::zero(&g, &a, 3, limits)?,
        };
        MonCatExtension::new(g, a, f)
    }

    /// `A` alone means the suspension `ΣA`.
    pub fn decode_bicat(&self, limits: &Limits) -> Result<MonBicatExtension> {
        expect_kind(&self.kind, &["bicat-ext"])?;
        let g = group(&self.g, "G")?;
        let base = match (&self.picard, &self.a) {
            (Some(p), _) => p.decode()?,
            (None, Some(a)) => PicardGroupoid::suspension(&group(a, "A")?),
            (None, None) => return Err(Error::Parse("bicat-ext needs picard or A".into())),
        };
        let f = match &self.f {
            Some(f) => f.decode_in(&g, base.objects(), 3, "f", limits)?,
            None => Cochain::zero(&g, base.objects(), 3, limits)?,
        };
        let theta = match &self.theta {
            Some(t) => t.decode_in(&g, base.automorphisms(), 4, "theta", limits)?,
            None => Cochain::zero(&g, base.automorphisms(), 4, limits)?,
        };
        MonBicatExtension::new(base, g, f, theta)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BiextDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub picard: Option<PicardDoc>,
    #[serde(rename = "Afun", default, skip_serializing_if = "Option::is_none")]
    pub afun: Option<Vec<Entry>>,
    #[serde(rename = "Bfun", default, skip_serializing_if = "Option::is_none")]
    pub bfun: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta1: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma1: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma2: Option<Vec<Entry>>,
}

const BIEXT_KINDS: &[&str] = &["biext", "cat-biext", "sym-biext"];

impl BiextDoc {
    pub fn encode(e: &BiextCocycle) -> BiextDoc {
        BiextDoc {
            kind: Some("biext".into()),
            g: e.g.to_string(),
            h: e.h.to_string(),
            a: Some(e.a.to_string()),
            afun: Some(table_to_entries(&e.afun)),
            bfun: Some(table_to_entries(&e.bfun)),
            ..BiextDoc::default()
        }
    }

    fn groups(&self) -> Result<(FinAbGroup, FinAbGroup)> {
        expect_kind(&self.kind, BIEXT_KINDS)?;
        Ok((group(&self.g, "G")?, group(&self.h, "H")?))
    }

    pub fn decode_biext(&self, limits: &Limits) -> Result<BiextCocycle> {
        let (g, h) = self.groups()?;
        let a = group(self.a.as_deref().ok_or_else(|| Error::Parse("biext needs A".into()))?, "A")?;
        let afun = normalized(&[&g, &g, &h], &a, &self.afun, "Afun", limits)?;
        let bfun = normalized(&[&g, &h, &h], &a, &self.bfun, "Bfun", limits)?;
        BiextCocycle::new(g, h, a, afun, bfun)
    }

    /// Without `picard`, the base is `ΣA`.
    pub fn decode_cat(&self, limits: &Limits) -> Result<CatBiextCocycle> {
        let (g, h) = self.groups()?;
        let base = match (&self.picard, &self.a) {
            (Some(p), _) => p.decode()?,
            (None, Some(a)) => PicardGroupoid::suspension(&group(a, "A")?),
            (None, None) => return Err(Error::Parse("categorical biext needs picard or A".into())),
        };
        let (b, a) = (base.objects().clone(), base.automorphisms().clone());
        let e = CatBiextCocycle {
            afun: normalized(&[&g, &g, &h], &b, &self.afun, "Afun", limits)?,
            bfun: normalized(&[&g, &h, &h], &b, &self.bfun, "Bfun", limits)?,
            theta1: normalized(&[&g, &g, &g, &h], &a, &self.theta1, "theta1", limits)?,
            theta2: normalized(&[&g, &h, &h, &h], &a, &self.theta2, "theta2", limits)?,
            chi: normalized(&[&g, &g, &h, &h], &a, &self.chi, "chi", limits)?,
            g,
            h,
            base,
        };
        e.validate_shape()?;
        Ok(e)
    }

    pub fn decode_symmetric(&self, limits: &Limits) -> Result<SymBiextDatum> {
        let bi = self.decode_cat(limits)?;
        let (g, h, a) = (bi.g.clone(), bi.h.clone(), bi.base.automorphisms().clone());
        let s = SymBiextDatum {
            mu1: normalized(&[&g, &g, &h], &a, &self.mu1, "mu1", limits)?,
            mu2: normalized(&[&g, &h, &h], &a, &self.mu2, "mu2", limits)?,
            gamma1: normalized(&[&g, &g, &h], &a, &self.gamma1, "gamma1", limits)?,
            gamma2: normalized(&[&g, &h, &h], &a, &self.gamma2, "gamma2", limits)?,
            bi,
        };
        s.validate_shape()?;
        Ok(s)
    }
}

/// Skeletal monoidal category: associator `a`, optional braiding and section shift.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidalDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "a", default)]
    pub assoc: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<Entry>>,
    #[serde(rename = "sectionShift", default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<Entry>>,
}

impl MonoidalDoc {
    pub fn decode(&self, limits: &Limits) -> Result<SkeletalMonoidalDatum> {
        expect_kind(&self.kind, &["monoidal"])?;
        let (g, a) = (group(&self.g, "G")?, group(&self.a, "A")?);
        let assoc = CochainDoc { group: None, coeff: None, degree: None, values: self.assoc.clone() }.decode_in(&g, &a, 3, "a", limits)?;
        let braiding = self.braiding.as_ref().map(|_| normalized(&[&g, &g], &a, &self.braiding, "braiding", limits)).transpose()?;
        let shift = self.shift.as_ref().map(|_| normalized(&[&g, &g], &a, &self.shift, "sectionShift", limits)).transpose()?;
        SkeletalMonoidalDatum::new(assoc, braiding, shift)
    }
}

/// θ on 2x2 matrices, optionally with an objects-valued `c` for the cube check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThetaDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(default)]
    pub theta: Vec<Entry>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<Entry>>,
}

impl ThetaDoc {
    pub fn decode(&self, limits: &Limits) -> Result<(ThetaMatrix, Option<CDatum>)> {
        expect_kind(&self.kind, &["theta"])?;
        let (g, a) = (group(&self.g, "G")?, group(&self.a, "A")?);
        let t = table_from_entries(vec![g.clone(); 4], &a, Normalization::MatrixDegenerate, &self.theta, "theta", limits)?;
        let c = match (&self.b, &self.c) {
            (Some(b), _) => Some(CDatum::new(normalized(&[&g, &g], &group(b, "B")?, &self.c, "c", limits)?)?),
            (None, Some(_)) => return Err(Error::Parse("c needs its value group B".into())),
            (None, None) => None,
        };
        Ok((ThetaMatrix::new(t)?, c))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BiQDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Entry>>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    pub g_fun: Option<Vec<Entry>>,
    #[serde(rename = "thetaRow", default, skip_serializing_if = "Option::is_none")]
    pub theta_row: Option<Vec<Entry>>,
    #[serde(rename = "thetaCol", default, skip_serializing_if = "Option::is_none")]
    pub theta_col: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<Entry>>,
}

impl BiQDoc {
    pub fn decode(&self, limits: &Limits) -> Result<BiQData> {
        expect_kind(&self.kind, &["biq"])?;
        let (g, h, a) = (group(&self.g, "G")?, group(&self.h, "H")?, group(&self.a, "A")?);
        let d = BiQData {
            f: normalized(&[&g, &g, &h], &a, &self.f, "f", limits)?,
            gfun: normalized(&[&g, &h, &h], &a, &self.g_fun, "g", limits)?,
            theta_row: normalized(&[&g, &g, &g, &g, &h], &a, &self.theta_row, "thetaRow", limits)?,
            theta_col: normalized(&[&g, &h, &h, &h, &h], &a, &self.theta_col, "thetaCol", limits)?,
            chi: normalized(&[&g, &g, &h, &h], &a, &self.chi, "chi", limits)?,
            g,
            h,
            a,
        };
        d.validate_shape()?;
        Ok(d)
    }
}
