//! Finite categories as explicit object/morphism/composition tables.
//!
//! Everything downstream (overcategories, limits searches, monadicity
//! verdicts) runs on these tables, so validation here is exhaustive:
//! identity laws per morphism, closure per composable pair, associativity
//! per composable triple.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Separator characters reserved for ids generated by derived
/// constructions (opposite, coslice, pullback, comma, ...). Canonical ids
/// make table equality meaningful across independently computed results.
pub const SEP_PAIR_OPEN: char = '(';
pub const SEP_PAIR_CLOSE: char = ')';
pub const SEP_PAIR: char = '|';
pub const SEP_AT: char = '@';
pub const SEP_TO: char = '>';

/// Build a canonical pair id `(a|b)`.
pub fn pair_id(a: &str, b: &str) -> String {
    format!("{SEP_PAIR_OPEN}{a}{SEP_PAIR}{b}{SEP_PAIR_CLOSE}")
}

/// Split a canonical pair id back into its components, respecting nested
/// parentheses so pair ids compose.
pub fn split_pair_id(id: &str) -> Option<(&str, &str)> {
    let inner = id
        .strip_prefix(SEP_PAIR_OPEN)?
        .strip_suffix(SEP_PAIR_CLOSE)?;
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            SEP_PAIR_OPEN => depth += 1,
            SEP_PAIR_CLOSE => depth = depth.checked_sub(1)?,
            SEP_PAIR if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Build a canonical triple id `(a|b|c)`.
pub fn triple_id(a: &str, b: &str, c: &str) -> String {
    format!("{SEP_PAIR_OPEN}{a}{SEP_PAIR}{b}{SEP_PAIR}{c}{SEP_PAIR_CLOSE}")
}

#[derive(Debug, Error)]
pub enum CatError {
    /// A table entry references an id that is not declared. Distinguished
    /// from law violations: a malformed table cannot even be interrogated.
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("unknown morphism: {0}")]
    UnknownMorphism(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorRec {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// A finite category: ordered object and morphism tables, an identity
/// assignment and a composition table defined exactly on composable pairs.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorRec>,
    identity: BTreeMap<String, String>,
    compose: BTreeMap<(String, String), String>,
    obj_idx: BTreeMap<String, usize>,
    mor_idx: BTreeMap<String, usize>,
    /// Dense composition cache indexed by `g * m + f`.
    table: Vec<Option<u32>>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}
impl Eq for FinCat {}

/// Serialization mirror of `FinCat`: the composition table is a list of
/// `[g, f, gf]` triples so the format is plain JSON.
#[derive(Serialize, Deserialize)]
struct RawFinCat {
    objects: Vec<String>,
    morphisms: Vec<MorRec>,
    identity: BTreeMap<String, String>,
    compose: Vec<(String, String, String)>,
}

impl Serialize for FinCat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawFinCat {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identity: self.identity.clone(),
            compose: self
                .compose
                .iter()
                .map(|((g, f), gf)| (g.clone(), f.clone(), gf.clone()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinCat {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<FinCat, D::Error> {
        let raw = RawFinCat::deserialize(deserializer)?;
        let compose = raw
            .compose
            .into_iter()
            .map(|(g, f, gf)| ((g, f), gf))
            .collect();
        FinCat::from_parts(raw.objects, raw.morphisms, raw.identity, compose)
            .map_err(serde::de::Error::custom)
    }
}

/// One violated category law, with the witnessing ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "law")]
pub enum Violation {
    /// identity(x) does not have src = dst = x.
    IdentityEndpoints { object: String, morphism: String },
    /// compose(g, f) missing for a composable pair.
    MissingComposite { g: String, f: String },
    /// compose(g, f) present for a non-composable pair.
    SpuriousComposite { g: String, f: String },
    /// compose(g, f) has wrong endpoints.
    Closure { g: String, f: String, composite: String },
    /// compose(f, id_src(f)) != f.
    RightIdentity { morphism: String },
    /// compose(id_dst(f), f) != f.
    LeftIdentity { morphism: String },
    /// h(gf) != (hg)f.
    Associativity { h: String, g: String, f: String },
    /// Functor morphism_map breaks src/dst.
    FunctorEndpoints { morphism: String },
    /// Functor does not preserve an identity.
    FunctorIdentity { object: String },
    /// Functor breaks a composite.
    FunctorComposite { g: String, f: String },
    /// Naturality square fails at a morphism of the domain.
    Naturality { morphism: String },
    /// A natural-transformation component has wrong endpoints.
    ComponentEndpoints { object: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Exhaustive law-check outcome: empty iff the structure is lawful.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merged(mut self, mut other: ValidationReport) -> ValidationReport {
        self.violations.append(&mut other.violations);
        self
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl FinCat {
    /// Assemble a category from raw tables, rejecting dangling ids and
    /// duplicates. Law checks are separate (`validate`).
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorRec>,
        identity: BTreeMap<String, String>,
        compose: BTreeMap<(String, String), String>,
    ) -> Result<FinCat, CatError> {
        let mut obj_idx = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_idx.insert(o.clone(), i).is_some() {
                return Err(CatError::MalformedTable(format!("duplicate object id {o:?}")));
            }
        }
        let mut mor_idx = BTreeMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if mor_idx.insert(m.id.clone(), i).is_some() {
                return Err(CatError::MalformedTable(format!(
                    "duplicate morphism id {:?}",
                    m.id
                )));
            }
            if !obj_idx.contains_key(&m.src) {
                return Err(CatError::MalformedTable(format!(
                    "morphism {:?} has dangling src {:?}",
                    m.id, m.src
                )));
            }
            if !obj_idx.contains_key(&m.dst) {
                return Err(CatError::MalformedTable(format!(
                    "morphism {:?} has dangling dst {:?}",
                    m.id, m.dst
                )));
            }
        }
        for o in &objects {
            match identity.get(o) {
                None => {
                    return Err(CatError::MalformedTable(format!(
                        "object {o:?} has no identity entry"
                    )))
                }
                Some(m) if !mor_idx.contains_key(m) => {
                    return Err(CatError::MalformedTable(format!(
                        "identity of {o:?} is a dangling morphism id {m:?}"
                    )))
                }
                _ => {}
            }
        }
        for k in identity.keys() {
            if !obj_idx.contains_key(k) {
                return Err(CatError::MalformedTable(format!(
                    "identity table keys dangling object id {k:?}"
                )));
            }
        }
        let m = morphisms.len();
        if m > u32::MAX as usize / 2 {
            return Err(CatError::MalformedTable("morphism table too large".into()));
        }
        let mut table = vec![None; m * m];
        for ((g, f), gf) in &compose {
            let (gi, fi) = match (mor_idx.get(g), mor_idx.get(f)) {
                (Some(&gi), Some(&fi)) => (gi, fi),
                _ => {
                    return Err(CatError::MalformedTable(format!(
                        "compose entry ({g:?}, {f:?}) references a dangling morphism id"
                    )))
                }
            };
            let gfi = *mor_idx.get(gf).ok_or_else(|| {
                CatError::MalformedTable(format!(
                    "compose({g:?}, {f:?}) = {gf:?} is a dangling morphism id"
                ))
            })?;
            table[gi * m + fi] = Some(gfi as u32);
        }
        Ok(FinCat {
            objects,
            morphisms,
            identity,
            compose,
            obj_idx,
            mor_idx,
            table,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorRec] {
        &self.morphisms
    }

    pub fn has_object(&self, id: &str) -> bool {
        self.obj_idx.contains_key(id)
    }

    pub fn has_morphism(&self, id: &str) -> bool {
        self.mor_idx.contains_key(id)
    }

    pub fn mor(&self, id: &str) -> Result<&MorRec, CatError> {
        self.mor_idx
            .get(id)
            .map(|&i| &self.morphisms[i])
            .ok_or_else(|| CatError::UnknownMorphism(id.to_string()))
    }

    pub fn src(&self, mor_id: &str) -> &str {
        &self.morphisms[self.mor_idx[mor_id]].src
    }

    pub fn dst(&self, mor_id: &str) -> &str {
        &self.morphisms[self.mor_idx[mor_id]].dst
    }

    pub fn identity_of(&self, obj: &str) -> &str {
        &self.identity[obj]
    }

    pub fn identity_table(&self) -> &BTreeMap<String, String> {
        &self.identity
    }

    pub fn compose_table(&self) -> &BTreeMap<(String, String), String> {
        &self.compose
    }

    pub fn is_identity(&self, mor_id: &str) -> bool {
        let m = &self.morphisms[self.mor_idx[mor_id]];
        m.src == m.dst && self.identity[&m.src] == m.id
    }

    /// Composite `g ∘ f`, or None if the pair is not composable or the
    /// table has no entry for it.
    pub fn compose(&self, g: &str, f: &str) -> Option<&str> {
        let m = self.morphisms.len();
        let gi = *self.mor_idx.get(g)?;
        let fi = *self.mor_idx.get(f)?;
        self.table[gi * m + fi]
            .map(|i| self.morphisms[i as usize].id.as_str())
    }

    /// Compose a chain right-to-left: `comp(&[h, g, f]) = h ∘ g ∘ f`.
    pub fn compose_chain(&self, chain: &[&str]) -> Option<String> {
        let mut acc = chain.last()?.to_string();
        for g in chain[..chain.len() - 1].iter().rev() {
            acc = self.compose(g, &acc)?.to_string();
        }
        Some(acc)
    }

    /// All morphism ids from `a` to `b`, in table order.
    pub fn hom(&self, a: &str, b: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|m| m.src == a && m.dst == b)
            .map(|m| m.id.as_str())
            .collect()
    }

    /// All morphism ids out of `a`, in table order.
    pub fn hom_from(&self, a: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|m| m.src == a)
            .map(|m| m.id.as_str())
            .collect()
    }

    /// All morphism ids into `b`, in table order.
    pub fn hom_into(&self, b: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|m| m.dst == b)
            .map(|m| m.id.as_str())
            .collect()
    }

    /// Parallel pairs (f, g) with common src and dst, f declared no later
    /// than g, in table order.
    pub fn parallel_pairs(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for (i, f) in self.morphisms.iter().enumerate() {
            for g in &self.morphisms[i..] {
                if f.src == g.src && f.dst == g.dst {
                    out.push((f.id.as_str(), g.id.as_str()));
                }
            }
        }
        out
    }

    /// Is `f` invertible in the table sense: some g with both composites
    /// equal to identities.
    pub fn is_iso(&self, f: &str) -> bool {
        self.inverse(f).is_some()
    }

    pub fn inverse(&self, f: &str) -> Option<&str> {
        let rec = &self.morphisms[*self.mor_idx.get(f)?];
        self.hom(&rec.dst, &rec.src).into_iter().find(|&g| {
            self.compose(g, f) == Some(self.identity_of(&rec.src))
                && self.compose(f, g) == Some(self.identity_of(&rec.dst))
        })
    }

    /// Exhaustive law check: identities, closure, unit laws, associativity
    /// over all composable triples.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (o, i) in &self.identity {
            let m = &self.morphisms[self.mor_idx[i]];
            if m.src != *o || m.dst != *o {
                violations.push(Violation::IdentityEndpoints {
                    object: o.clone(),
                    morphism: i.clone(),
                });
            }
        }
        let m = self.morphisms.len();
        for (gi, g) in self.morphisms.iter().enumerate() {
            for (fi, f) in self.morphisms.iter().enumerate() {
                let composable = f.dst == g.src;
                match self.table[gi * m + fi] {
                    None if composable => violations.push(Violation::MissingComposite {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    }),
                    Some(_) if !composable => violations.push(Violation::SpuriousComposite {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    }),
                    Some(c) if composable => {
                        let c = &self.morphisms[c as usize];
                        if c.src != f.src || c.dst != g.dst {
                            violations.push(Violation::Closure {
                                g: g.id.clone(),
                                f: f.id.clone(),
                                composite: c.id.clone(),
                            });
                        }
                    }
                    _ => {}
                }
            }
        }
        for f in &self.morphisms {
            if self.compose(&f.id, self.identity_of(&f.src)) != Some(f.id.as_str()) {
                violations.push(Violation::RightIdentity {
                    morphism: f.id.clone(),
                });
            }
            if self.compose(self.identity_of(&f.dst), &f.id) != Some(f.id.as_str()) {
                violations.push(Violation::LeftIdentity {
                    morphism: f.id.clone(),
                });
            }
        }
        // Associativity over all composable triples. The triple loop is the
        // hot path on the bigger fixtures, hence the parallel outer loop
        // with an order-preserving collect.
        let mut assoc: Vec<Violation> = (0..m)
            .into_par_iter()
            .flat_map_iter(|hi| {
                let h = &self.morphisms[hi];
                let mut local = Vec::new();
                for (gi, g) in self.morphisms.iter().enumerate() {
                    if g.dst != h.src {
                        continue;
                    }
                    let hg = match self.table[hi * m + gi] {
                        Some(c) => c as usize,
                        None => continue,
                    };
                    for (fi, f) in self.morphisms.iter().enumerate() {
                        if f.dst != g.src {
                            continue;
                        }
                        let gf = match self.table[gi * m + fi] {
                            Some(c) => c as usize,
                            None => continue,
                        };
                        if self.table[hi * m + gf] != self.table[hg * m + fi] {
                            local.push(Violation::Associativity {
                                h: h.id.clone(),
                                g: g.id.clone(),
                                f: f.id.clone(),
                            });
                        }
                    }
                }
                local
            })
            .collect();
        violations.append(&mut assoc);
        ValidationReport { violations }
    }

    /// Tables with objects and morphisms sorted by id; the comparison key
    /// for equality of independently derived categories.
    pub fn canonical_key(
        &self,
    ) -> (
        Vec<String>,
        Vec<MorRec>,
        BTreeMap<String, String>,
        BTreeMap<(String, String), String>,
    ) {
        let mut objects = self.objects.clone();
        objects.sort();
        let mut morphisms = self.morphisms.clone();
        morphisms.sort();
        (objects, morphisms, self.identity.clone(), self.compose.clone())
    }

    /// Same tables after canonical reordering.
    pub fn same_tables(&self, other: &FinCat) -> bool {
        self == other
    }

    /// The opposite category: src/dst swapped, composition transposed.
    /// Ids are kept, so functor tables transport across the duality.
    pub fn opposite(&self) -> FinCat {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorRec {
                id: m.id.clone(),
                src: m.dst.clone(),
                dst: m.src.clone(),
            })
            .collect();
        let compose = self
            .compose
            .iter()
            .map(|((g, f), gf)| ((f.clone(), g.clone()), gf.clone()))
            .collect();
        FinCat::from_parts(self.objects.clone(), morphisms, self.identity.clone(), compose)
            .expect("opposite of a well-formed table is well-formed")
    }

    /// Totally enumerate identity-arity-style data: all endomorphism ids of
    /// an object.
    pub fn endos(&self, obj: &str) -> Vec<&str> {
        self.hom(obj, obj)
    }
}

/// A convenience builder used by derived constructions and fixtures: add
/// objects and non-identity morphisms, then close the composition table
/// from a composition oracle.
pub struct CatBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorRec>,
    identity: BTreeMap<String, String>,
    compose: BTreeMap<(String, String), String>,
}

impl CatBuilder {
    pub fn new() -> CatBuilder {
        CatBuilder {
            objects: Vec::new(),
            morphisms: Vec::new(),
            identity: BTreeMap::new(),
            compose: BTreeMap::new(),
        }
    }

    pub fn object(&mut self, id: &str, identity_mor: &str) -> &mut Self {
        self.objects.push(id.to_string());
        self.morphisms.push(MorRec {
            id: identity_mor.to_string(),
            src: id.to_string(),
            dst: id.to_string(),
        });
        self.identity.insert(id.to_string(), identity_mor.to_string());
        self
    }

    pub fn morphism(&mut self, id: &str, src: &str, dst: &str) -> &mut Self {
        self.morphisms.push(MorRec {
            id: id.to_string(),
            src: src.to_string(),
            dst: dst.to_string(),
        });
        self
    }

    pub fn composite(&mut self, g: &str, f: &str, gf: &str) -> &mut Self {
        self.compose.insert((g.to_string(), f.to_string()), gf.to_string());
        self
    }

    /// Fill identity composites mechanically, then build.
    pub fn build(mut self) -> Result<FinCat, CatError> {
        let idents = self.identity.clone();
        for m in self.morphisms.clone() {
            if let Some(i) = idents.get(&m.src) {
                self.compose
                    .entry((m.id.clone(), i.clone()))
                    .or_insert_with(|| m.id.clone());
            }
            if let Some(i) = idents.get(&m.dst) {
                self.compose
                    .entry((i.clone(), m.id.clone()))
                    .or_insert_with(|| m.id.clone());
            }
        }
        FinCat::from_parts(self.objects, self.morphisms, self.identity, self.compose)
    }
}

impl Default for CatBuilder {
    fn default() -> Self {
        CatBuilder::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn one_object_category_is_valid() {
        let c = fixtures::terminal_cat();
        assert!(c.validate().is_valid());
    }

    #[test]
    fn chain_poset_is_valid() {
        let c = fixtures::chain_poset(3);
        assert!(c.validate().is_valid());
        assert_eq!(c.objects().len(), 3);
        assert_eq!(c.morphisms().len(), 6);
    }

    #[test]
    fn broken_closure_is_reported_with_witness() {
        // compose(g, f) deliberately set to a morphism with the wrong src.
        let mut b = CatBuilder::new();
        b.object("0", "id0").object("1", "id1").object("2", "id2");
        b.morphism("f", "0", "1").morphism("g", "1", "2");
        b.composite("g", "f", "g"); // wrong: src of g is 1, not 0
        let c = b.build().unwrap();
        let report = c.validate();
        assert!(report.violations.contains(&Violation::Closure {
            g: "g".into(),
            f: "f".into(),
            composite: "g".into(),
        }));
    }

    #[test]
    fn dangling_id_is_malformed_not_law_violation() {
        let err = FinCat::from_parts(
            vec!["x".into()],
            vec![MorRec {
                id: "idx".into(),
                src: "x".into(),
                dst: "y".into(),
            }],
            BTreeMap::from([("x".to_string(), "idx".to_string())]),
            BTreeMap::new(),
        )
        .unwrap_err();
        assert!(matches!(err, CatError::MalformedTable(_)));
    }

    #[test]
    fn opposite_swaps_arrows_and_is_involutive() {
        let c = fixtures::chain_poset(2);
        let op = c.opposite();
        assert!(op.validate().is_valid());
        assert_eq!(op.src("le_0_1"), "1");
        assert_eq!(op.dst("le_0_1"), "0");
        assert!(op.opposite().same_tables(&c));
    }

    #[test]
    fn opposite_transposes_monoid_table() {
        let c = fixtures::z2_monoid_cat();
        let op = c.opposite();
        assert!(op.validate().is_valid());
        assert_eq!(op.objects(), c.objects());
        assert_eq!(op.compose("s", "s"), Some("id"));
    }
}
