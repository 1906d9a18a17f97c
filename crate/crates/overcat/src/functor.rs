//! Functors and natural transformations between table categories, with
//! exhaustive preservation/naturality checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fincat::{CatError, FinCat, ValidationReport, Violation};

/// A functor as explicit object and morphism tables. Owns clones of its
/// endpoint categories; tables are small enough that sharing is not worth
/// the lifetime plumbing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData {
    pub dom: FinCat,
    pub cod: FinCat,
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

impl FunctorData {
    pub fn identity(cat: &FinCat) -> FunctorData {
        FunctorData {
            dom: cat.clone(),
            cod: cat.clone(),
            object_map: cat.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            morphism_map: cat
                .morphisms()
                .iter()
                .map(|m| (m.id.clone(), m.id.clone()))
                .collect(),
        }
    }

    /// The constant functor at an object of `cod`.
    pub fn constant(dom: &FinCat, cod: &FinCat, at: &str) -> Result<FunctorData, CatError> {
        if !cod.has_object(at) {
            return Err(CatError::UnknownObject(at.to_string()));
        }
        let id = cod.identity_of(at).to_string();
        Ok(FunctorData {
            dom: dom.clone(),
            cod: cod.clone(),
            object_map: dom.objects().iter().map(|o| (o.clone(), at.to_string())).collect(),
            morphism_map: dom
                .morphisms()
                .iter()
                .map(|m| (m.id.clone(), id.clone()))
                .collect(),
        })
    }

    pub fn on_obj(&self, obj: &str) -> &str {
        &self.object_map[obj]
    }

    pub fn on_mor(&self, mor: &str) -> &str {
        &self.morphism_map[mor]
    }

    pub fn try_on_obj(&self, obj: &str) -> Option<&str> {
        self.object_map.get(obj).map(|s| s.as_str())
    }

    pub fn try_on_mor(&self, mor: &str) -> Option<&str> {
        self.morphism_map.get(mor).map(|s| s.as_str())
    }

    /// Table check that the maps are total on the domain and land in the
    /// codomain. Failures here are malformed tables, not law violations.
    pub fn check_well_formed(&self) -> Result<(), CatError> {
        for o in self.dom.objects() {
            let img = self
                .object_map
                .get(o)
                .ok_or_else(|| CatError::MalformedTable(format!("object_map misses {o:?}")))?;
            if !self.cod.has_object(img) {
                return Err(CatError::MalformedTable(format!(
                    "object_map sends {o:?} to dangling id {img:?}"
                )));
            }
        }
        for m in self.dom.morphisms() {
            let img = self.morphism_map.get(&m.id).ok_or_else(|| {
                CatError::MalformedTable(format!("morphism_map misses {:?}", m.id))
            })?;
            if !self.cod.has_morphism(img) {
                return Err(CatError::MalformedTable(format!(
                    "morphism_map sends {:?} to dangling id {img:?}",
                    m.id
                )));
            }
        }
        Ok(())
    }

    /// Exhaustive preservation check: endpoints, identities, composites.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for m in self.dom.morphisms() {
            let img = self.cod.mor(self.on_mor(&m.id)).expect("well-formed");
            if img.src != *self.on_obj(&m.src) || img.dst != *self.on_obj(&m.dst) {
                violations.push(Violation::FunctorEndpoints {
                    morphism: m.id.clone(),
                });
            }
        }
        for o in self.dom.objects() {
            if self.on_mor(self.dom.identity_of(o)) != self.cod.identity_of(self.on_obj(o)) {
                violations.push(Violation::FunctorIdentity { object: o.clone() });
            }
        }
        for ((g, f), gf) in self.dom.compose_table() {
            let lhs = self.cod.compose(self.on_mor(g), self.on_mor(f));
            if lhs != Some(self.on_mor(gf)) {
                violations.push(Violation::FunctorComposite {
                    g: g.clone(),
                    f: f.clone(),
                });
            }
        }
        ValidationReport { violations }
    }

    /// `other ∘ self`, defined when the table endpoints agree.
    pub fn then(&self, other: &FunctorData) -> FunctorData {
        FunctorData {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            object_map: self
                .object_map
                .iter()
                .map(|(o, i)| (o.clone(), other.on_obj(i).to_string()))
                .collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|(m, i)| (m.clone(), other.on_mor(i).to_string()))
                .collect(),
        }
    }

    /// Table equality of object and morphism maps (endpoint categories are
    /// compared by canonical tables).
    pub fn same_maps(&self, other: &FunctorData) -> bool {
        self.object_map == other.object_map && self.morphism_map == other.morphism_map
    }

    /// Transport the same tables to the opposite categories.
    pub fn opposite(&self) -> FunctorData {
        FunctorData {
            dom: self.dom.opposite(),
            cod: self.cod.opposite(),
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
        }
    }

    /// Strict invertibility: bijective on objects and morphisms; the
    /// inverse tables then form the unique functor with both composites
    /// equal to identities.
    pub fn strict_inverse(&self) -> Option<FunctorData> {
        let mut object_map = BTreeMap::new();
        for (o, i) in &self.object_map {
            if object_map.insert(i.clone(), o.clone()).is_some() {
                return None;
            }
        }
        if object_map.len() != self.cod.objects().len() {
            return None;
        }
        let mut morphism_map = BTreeMap::new();
        for (m, i) in &self.morphism_map {
            if morphism_map.insert(i.clone(), m.clone()).is_some() {
                return None;
            }
        }
        if morphism_map.len() != self.cod.morphisms().len() {
            return None;
        }
        Some(FunctorData {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            object_map,
            morphism_map,
        })
    }
}

/// A natural transformation as a component table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatTransData {
    pub dom_functor: FunctorData,
    pub cod_functor: FunctorData,
    /// object of the shared domain -> morphism of the shared codomain.
    pub components: BTreeMap<String, String>,
}

impl NatTransData {
    pub fn identity(f: &FunctorData) -> NatTransData {
        NatTransData {
            dom_functor: f.clone(),
            cod_functor: f.clone(),
            components: f
                .dom
                .objects()
                .iter()
                .map(|o| (o.clone(), f.cod.identity_of(f.on_obj(o)).to_string()))
                .collect(),
        }
    }

    pub fn component(&self, obj: &str) -> &str {
        &self.components[obj]
    }

    pub fn check_well_formed(&self) -> Result<(), CatError> {
        for o in self.dom_functor.dom.objects() {
            let c = self
                .components
                .get(o)
                .ok_or_else(|| CatError::MalformedTable(format!("components miss {o:?}")))?;
            if !self.dom_functor.cod.has_morphism(c) {
                return Err(CatError::MalformedTable(format!(
                    "component at {o:?} is a dangling morphism id {c:?}"
                )));
            }
        }
        Ok(())
    }

    /// Exhaustive endpoint and naturality-square check.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let cat = &self.dom_functor.cod;
        for o in self.dom_functor.dom.objects() {
            let c = cat.mor(self.component(o)).expect("well-formed");
            if c.src != *self.dom_functor.on_obj(o) || c.dst != *self.cod_functor.on_obj(o) {
                violations.push(Violation::ComponentEndpoints { object: o.clone() });
            }
        }
        for m in self.dom_functor.dom.morphisms() {
            let left = cat.compose(self.component(&m.dst), self.dom_functor.on_mor(&m.id));
            let right = cat.compose(self.cod_functor.on_mor(&m.id), self.component(&m.src));
            if left.is_none() || left != right {
                violations.push(Violation::Naturality {
                    morphism: m.id.clone(),
                });
            }
        }
        ValidationReport { violations }
    }

    /// Vertical composite `other · self` (self first).
    pub fn vertical(&self, other: &NatTransData) -> NatTransData {
        let cat = &self.dom_functor.cod;
        NatTransData {
            dom_functor: self.dom_functor.clone(),
            cod_functor: other.cod_functor.clone(),
            components: self
                .components
                .iter()
                .map(|(o, c)| {
                    let oc = other.component(o);
                    (
                        o.clone(),
                        cat.compose(oc, c).expect("composable components").to_string(),
                    )
                })
                .collect(),
        }
    }

    /// Is every component invertible?
    pub fn is_iso(&self) -> bool {
        let cat = &self.dom_functor.cod;
        self.components.values().all(|c| cat.is_iso(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_functor_validates() {
        let c = fixtures::chain_poset(3);
        let f = FunctorData::identity(&c);
        f.check_well_formed().unwrap();
        assert!(f.validate().is_valid());
    }

    #[test]
    fn constant_functor_validates() {
        let c = fixtures::chain_poset(3);
        let d = fixtures::z2_monoid_cat();
        let f = FunctorData::constant(&c, &d, "m").unwrap();
        assert!(f.validate().is_valid());
    }

    #[test]
    fn broken_composite_reports_the_pair() {
        let c = fixtures::chain_poset(3);
        let mut f = FunctorData::identity(&c);
        // Correct object map, morphism map breaking one composite:
        // send the long arrow 0->2 to itself is fine; break it instead by
        // sending le_0_2 elsewhere with matching endpoints being absent.
        f.morphism_map.insert("le_0_2".into(), "id_0".into());
        let report = f.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FunctorComposite { .. })));
    }

    #[test]
    fn identity_nat_trans_is_natural() {
        let c = fixtures::chain_poset(2);
        let f = FunctorData::identity(&c);
        let t = NatTransData::identity(&f);
        assert!(t.validate().is_valid());
        assert!(t.is_iso());
    }
}
