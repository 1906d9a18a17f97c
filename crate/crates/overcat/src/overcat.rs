//! The overcategory data model: arity functors, fibers, the cotensor
//! E^(C), the diagonal overfunctor, and overcone enumeration.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::{CatError, FinCat, MorRec, SEP_AT, SEP_TO};
use crate::functor::FunctorData;

#[derive(Debug, Error)]
pub enum OverError {
    #[error("invalid arity functor: {0}")]
    InvalidArity(String),
    #[error("unknown target {0} in the base category")]
    UnknownTarget(String),
    #[error("enumeration budget exceeded (budget {budget})")]
    ShapeTooLarge { budget: u64 },
    #[error(transparent)]
    Cat(#[from] CatError),
}

/// Enumeration budgets for the search-based constructions. The candidate
/// count guards functor/cone enumeration; the size cap bounds carrier
/// sizes in effective instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub candidates: u64,
    pub size_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            candidates: 1_000_000,
            size_cap: 4,
        }
    }
}

impl Budget {
    /// Default budget overridable through the OVERCAT_BUDGET environment
    /// variable, either a bare candidate count or a
    /// `candidates=N;size_cap=M` string.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Ok(s) = std::env::var("OVERCAT_BUDGET") {
            let s = s.trim();
            if let Ok(n) = s.parse::<u64>() {
                b.candidates = n;
            } else {
                for part in s.split(';') {
                    if let Some(v) = part.strip_prefix("candidates=") {
                        if let Ok(n) = v.parse() {
                            b.candidates = n;
                        }
                    }
                    if let Some(v) = part.strip_prefix("size_cap=") {
                        if let Ok(n) = v.parse() {
                            b.size_cap = n;
                        }
                    }
                }
            }
        }
        b
    }
}

/// A category equipped with an arity functor into a base category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overcategory {
    pub total: FinCat,
    pub base: FinCat,
    pub arity: FunctorData,
}

impl Overcategory {
    /// Validated constructor: the arity functor must be a lawful functor
    /// total -> base.
    pub fn new(total: FinCat, base: FinCat, arity: FunctorData) -> Result<Overcategory, OverError> {
        if arity.dom != total || arity.cod != base {
            return Err(OverError::InvalidArity(
                "arity endpoints do not match total/base".into(),
            ));
        }
        arity
            .check_well_formed()
            .map_err(|e| OverError::InvalidArity(e.to_string()))?;
        let report = arity.validate();
        if !report.is_valid() {
            return Err(OverError::InvalidArity(report.to_string()));
        }
        Ok(Overcategory { total, base, arity })
    }

    /// Every category is an overcategory over itself via the identity.
    pub fn over_itself(cat: &FinCat) -> Overcategory {
        Overcategory {
            total: cat.clone(),
            base: cat.clone(),
            arity: FunctorData::identity(cat),
        }
    }

    pub fn arity_obj(&self, x: &str) -> &str {
        self.arity.on_obj(x)
    }

    pub fn arity_mor(&self, f: &str) -> &str {
        self.arity.on_mor(f)
    }

    /// Is the arity of `f` an identity of the base?
    pub fn is_vertical(&self, f: &str) -> bool {
        self.base.is_identity(self.arity_mor(f))
    }

    /// The same data with both categories reversed.
    pub fn opposite(&self) -> Overcategory {
        Overcategory {
            total: self.total.opposite(),
            base: self.base.opposite(),
            arity: self.arity.opposite(),
        }
    }

    /// Fiber over a base object: the subcategory of objects/morphisms with
    /// arity B / id_B, plus its inclusion into the total category.
    pub fn fiber_over_object(&self, b: &str) -> Result<(FinCat, FunctorData), OverError> {
        if !self.base.has_object(b) {
            return Err(OverError::UnknownTarget(b.to_string()));
        }
        let objects: Vec<String> = self
            .total
            .objects()
            .iter()
            .filter(|x| self.arity_obj(x) == b)
            .cloned()
            .collect();
        let id_b = self.base.identity_of(b);
        let morphisms: Vec<MorRec> = self
            .total
            .morphisms()
            .iter()
            .filter(|m| self.arity_mor(&m.id) == id_b)
            .cloned()
            .collect();
        let identity: BTreeMap<String, String> = objects
            .iter()
            .map(|o| (o.clone(), self.total.identity_of(o).to_string()))
            .collect();
        let mut compose = BTreeMap::new();
        for m1 in &morphisms {
            for m2 in &morphisms {
                if m1.dst == m2.src {
                    let c = self.total.compose(&m2.id, &m1.id).expect("composable");
                    compose.insert((m2.id.clone(), m1.id.clone()), c.to_string());
                }
            }
        }
        let fiber = FinCat::from_parts(objects, morphisms, identity, compose)?;
        let inclusion = FunctorData {
            dom: fiber.clone(),
            cod: self.total.clone(),
            object_map: fiber.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            morphism_map: fiber
                .morphisms()
                .iter()
                .map(|m| (m.id.clone(), m.id.clone()))
                .collect(),
        };
        Ok((fiber, inclusion))
    }

    /// Fiber over a base morphism b : B0 -> B1: objects are total
    /// morphisms with arity b; an arrow (u, v) : f -> f' is a pair of
    /// vertical morphisms with v ∘ f = f' ∘ u.
    pub fn fiber_over_morphism(&self, b: &str) -> Result<FinCat, OverError> {
        if !self.base.has_morphism(b) {
            return Err(OverError::UnknownTarget(b.to_string()));
        }
        let b0 = self.base.src(b);
        let b1 = self.base.dst(b);
        let id_b0 = self.base.identity_of(b0).to_string();
        let id_b1 = self.base.identity_of(b1).to_string();
        let objects: Vec<String> = self
            .total
            .morphisms()
            .iter()
            .filter(|m| self.arity_mor(&m.id) == b)
            .map(|m| m.id.clone())
            .collect();
        let arrow_id = |u: &str, v: &str, f: &str, f2: &str| {
            format!(
                "{}{SEP_AT}{f}{SEP_TO}{f2}",
                crate::fincat::pair_id(u, v)
            )
        };
        let mut morphisms = Vec::new();
        let mut identity = BTreeMap::new();
        let mut parts: BTreeMap<String, (String, String)> = BTreeMap::new();
        for f in &objects {
            for f2 in &objects {
                for u in self.total.hom(self.total.src(f), self.total.src(f2)) {
                    if self.arity_mor(u) != id_b0 {
                        continue;
                    }
                    for v in self.total.hom(self.total.dst(f), self.total.dst(f2)) {
                        if self.arity_mor(v) != id_b1 {
                            continue;
                        }
                        if self.total.compose(v, f) == self.total.compose(f2, u) {
                            let id = arrow_id(u, v, f, f2);
                            morphisms.push(MorRec {
                                id: id.clone(),
                                src: f.clone(),
                                dst: f2.clone(),
                            });
                            parts.insert(id.clone(), (u.to_string(), v.to_string()));
                            if f == f2
                                && self.total.is_identity(u)
                                && self.total.is_identity(v)
                            {
                                identity.insert(f.clone(), id);
                            }
                        }
                    }
                }
            }
        }
        let mut compose = BTreeMap::new();
        for m1 in &morphisms {
            for m2 in &morphisms {
                if m1.dst == m2.src {
                    let (u1, v1) = &parts[&m1.id];
                    let (u2, v2) = &parts[&m2.id];
                    let u = self.total.compose(u2, u1).expect("composable");
                    let v = self.total.compose(v2, v1).expect("composable");
                    compose.insert(
                        (m2.id.clone(), m1.id.clone()),
                        arrow_id(u, v, &m1.src, &m2.dst),
                    );
                }
            }
        }
        Ok(FinCat::from_parts(objects, morphisms, identity, compose)?)
    }
}

/// A morphism of overcategories, possibly across different bases. The
/// same-base case carries the identity base map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverfunctorData {
    pub dom: Overcategory,
    pub cod: Overcategory,
    pub total_map: FunctorData,
    pub base_map: FunctorData,
}

impl OverfunctorData {
    pub fn identity(ov: &Overcategory) -> OverfunctorData {
        OverfunctorData {
            dom: ov.clone(),
            cod: ov.clone(),
            total_map: FunctorData::identity(&ov.total),
            base_map: FunctorData::identity(&ov.base),
        }
    }

    /// Lawful functors plus the commuting square A' ∘ F = F0 ∘ A, as
    /// table equality.
    pub fn validate(&self) -> Result<(), OverError> {
        self.total_map
            .check_well_formed()
            .map_err(|e| OverError::InvalidArity(e.to_string()))?;
        self.base_map
            .check_well_formed()
            .map_err(|e| OverError::InvalidArity(e.to_string()))?;
        let rep = self.total_map.validate().merged(self.base_map.validate());
        if !rep.is_valid() {
            return Err(OverError::InvalidArity(rep.to_string()));
        }
        let left = self.total_map.then(&self.cod.arity);
        let right = self.dom.arity.then(&self.base_map);
        if !left.same_maps(&right) {
            return Err(OverError::InvalidArity(
                "arity square does not commute".into(),
            ));
        }
        Ok(())
    }

    pub fn same_base(&self) -> bool {
        self.dom.base == self.cod.base
            && self
                .base_map
                .same_maps(&FunctorData::identity(&self.dom.base))
    }
}

/// A fiberwise diagram: a functor from a shape category into the total
/// category whose arity image is constant at `base_object`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverDiagram {
    pub shape: FinCat,
    pub functor: FunctorData,
    pub base_object: String,
}

impl OverDiagram {
    pub fn new(
        ov: &Overcategory,
        shape: FinCat,
        functor: FunctorData,
        base_object: &str,
    ) -> Result<OverDiagram, OverError> {
        if !ov.base.has_object(base_object) {
            return Err(OverError::UnknownTarget(base_object.to_string()));
        }
        functor
            .check_well_formed()
            .map_err(|e| OverError::InvalidArity(e.to_string()))?;
        let rep = functor.validate();
        if !rep.is_valid() {
            return Err(OverError::InvalidArity(rep.to_string()));
        }
        let constant = FunctorData::constant(&shape, &ov.base, base_object)?;
        if !functor.then(&ov.arity).same_maps(&constant) {
            return Err(OverError::InvalidArity(
                "diagram arity is not constant at the base object".into(),
            ));
        }
        Ok(OverDiagram {
            shape,
            functor,
            base_object: base_object.to_string(),
        })
    }

    /// Canonical id encoding the whole diagram; used as a cotensor object
    /// id and as a certificate key.
    pub fn key(&self) -> String {
        encode_diagram(&self.shape, &self.functor, &self.base_object)
    }

    /// The same diagram in the opposite overcategory.
    pub fn dual(&self) -> OverDiagram {
        OverDiagram {
            shape: self.shape.opposite(),
            functor: self.functor.opposite(),
            base_object: self.base_object.clone(),
        }
    }
}

fn encode_diagram(shape: &FinCat, functor: &FunctorData, base_object: &str) -> String {
    let objs: Vec<String> = shape
        .objects()
        .iter()
        .map(|o| format!("{o}={}", functor.on_obj(o)))
        .collect();
    let mors: Vec<String> = shape
        .morphisms()
        .iter()
        .filter(|m| !shape.is_identity(&m.id))
        .map(|m| format!("{}={}", m.id, functor.on_mor(&m.id)))
        .collect();
    format!("[{};{}|{}]", objs.join(","), mors.join(","), base_object)
}

/// An overcone: an apex, a base morphism b : A(apex) -> B, and components
/// all lying over b.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Overcone {
    pub apex: String,
    pub base_mor: String,
    pub components: BTreeMap<String, String>,
}

impl Overcone {
    pub fn key(&self) -> String {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|(c, f)| format!("{c}={f}"))
            .collect();
        format!("({}|{}|{})", self.apex, self.base_mor, comps.join(","))
    }
}

/// Dual data: apex receives the components.
pub type Overcocone = Overcone;

/// All overcones of a diagram, over every base morphism b : A(x) -> B,
/// duplicate-free and canonically sorted.
pub fn enumerate_overcones(ov: &Overcategory, diag: &OverDiagram) -> Vec<Overcone> {
    let mut out = Vec::new();
    for x in ov.total.objects() {
        for b in ov.base.hom(ov.arity_obj(x), &diag.base_object) {
            enumerate_cone_components(ov, diag, x, b, &mut out);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn enumerate_cone_components(
    ov: &Overcategory,
    diag: &OverDiagram,
    apex: &str,
    b: &str,
    out: &mut Vec<Overcone>,
) {
    let shape_objs = diag.shape.objects();
    // candidate component lists per shape object
    let mut cands: Vec<Vec<&str>> = Vec::with_capacity(shape_objs.len());
    for c in shape_objs {
        let tgt = diag.functor.on_obj(c);
        let list: Vec<&str> = ov
            .total
            .hom(apex, tgt)
            .into_iter()
            .filter(|f| ov.arity_mor(f) == b)
            .collect();
        if list.is_empty() {
            return;
        }
        cands.push(list);
    }
    let mut chosen: Vec<&str> = Vec::with_capacity(shape_objs.len());
    backtrack_cones(ov, diag, apex, b, &cands, &mut chosen, out);
}

fn backtrack_cones<'a>(
    ov: &Overcategory,
    diag: &OverDiagram,
    apex: &str,
    b: &str,
    cands: &[Vec<&'a str>],
    chosen: &mut Vec<&'a str>,
    out: &mut Vec<Overcone>,
) {
    let shape_objs = diag.shape.objects();
    let k = chosen.len();
    if k == shape_objs.len() {
        out.push(Overcone {
            apex: apex.to_string(),
            base_mor: b.to_string(),
            components: shape_objs
                .iter()
                .cloned()
                .zip(chosen.iter().map(|s| s.to_string()))
                .collect(),
        });
        return;
    }
    'next: for &f in &cands[k] {
        // check every shape morphism whose endpoints are both already
        // assigned (treating index k as now assigned to f)
        for s in diag.shape.morphisms() {
            let si = shape_objs.iter().position(|o| *o == s.src).unwrap();
            let di = shape_objs.iter().position(|o| *o == s.dst).unwrap();
            if si > k || di > k || (si < k && di < k) {
                continue;
            }
            let fs = if si == k { f } else { chosen[si] };
            let fd = if di == k { f } else { chosen[di] };
            if ov.total.compose(diag.functor.on_mor(&s.id), fs) != Some(fd) {
                continue 'next;
            }
        }
        chosen.push(f);
        backtrack_cones(ov, diag, apex, b, cands, chosen, out);
        chosen.pop();
    }
}

/// All overcocones: components F(c) -> apex over b : B -> A(apex).
pub fn enumerate_overcocones(ov: &Overcategory, diag: &OverDiagram) -> Vec<Overcocone> {
    let op = ov.opposite();
    let dual = diag.dual();
    enumerate_overcones(&op, &dual)
}

/// The cotensor E^(C) with its projection arity, as a new overcategory.
/// Objects are fiberwise diagrams, morphisms are pairs (τ, b) with every
/// component lying over b.
pub fn cotensor(
    ov: &Overcategory,
    shape: &FinCat,
    budget: &Budget,
) -> Result<Overcategory, OverError> {
    let diagrams = enumerate_diagrams(ov, shape, budget)?;
    let mut objects = Vec::new();
    let mut arity_obj = BTreeMap::new();
    for d in &diagrams {
        let id = d.key();
        arity_obj.insert(id.clone(), d.base_object.clone());
        objects.push(id);
    }
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut arity_mor = BTreeMap::new();
    let mut comp_data: BTreeMap<String, (usize, usize, BTreeMap<String, String>, String)> =
        BTreeMap::new();
    let mut counter: u64 = 0;
    for (i, d) in diagrams.iter().enumerate() {
        for (j, d2) in diagrams.iter().enumerate() {
            for b in ov.base.hom(&d.base_object, &d2.base_object) {
                let mut taus = Vec::new();
                enumerate_transformations(ov, d, d2, b, budget, &mut counter, &mut taus)?;
                for tau in taus {
                    let id = trans_id(&objects[i], &objects[j], &tau, b);
                    morphisms.push(MorRec {
                        id: id.clone(),
                        src: objects[i].clone(),
                        dst: objects[j].clone(),
                    });
                    arity_mor.insert(id.clone(), b.to_string());
                    if i == j
                        && ov.base.is_identity(b)
                        && tau
                            .iter()
                            .all(|(c, f)| ov.total.is_identity(f) && d.functor.on_obj(c) == ov.total.src(f))
                    {
                        identity.insert(objects[i].clone(), id.clone());
                    }
                    comp_data.insert(id, (i, j, tau.into_iter().collect(), b.to_string()));
                }
            }
        }
    }
    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.dst == m2.src {
                let (i, _, t1, b1) = &comp_data[&m1.id];
                let (_, j, t2, b2) = &comp_data[&m2.id];
                let b = ov.base.compose(b2, b1).expect("composable").to_string();
                let tau: Vec<(String, String)> = t1
                    .iter()
                    .map(|(c, f)| {
                        (
                            c.clone(),
                            ov.total.compose(&t2[c], f).expect("composable").to_string(),
                        )
                    })
                    .collect();
                compose.insert(
                    (m2.id.clone(), m1.id.clone()),
                    trans_id(&objects[*i], &objects[*j], &tau, &b),
                );
            }
        }
    }
    let total = FinCat::from_parts(objects, morphisms, identity, compose)?;
    let arity = FunctorData {
        dom: total.clone(),
        cod: ov.base.clone(),
        object_map: arity_obj,
        morphism_map: arity_mor,
    };
    Overcategory::new(total, ov.base.clone(), arity)
}

fn trans_id(src: &str, dst: &str, tau: &[(String, String)], b: &str) -> String {
    let comps: Vec<String> = tau.iter().map(|(c, f)| format!("{c}={f}")).collect();
    format!("({src}{SEP_TO}{dst}|{}|{b})", comps.join(","))
}

/// All fiberwise diagrams of a given shape, across every base object.
pub fn enumerate_diagrams(
    ov: &Overcategory,
    shape: &FinCat,
    budget: &Budget,
) -> Result<Vec<OverDiagram>, OverError> {
    let mut out = Vec::new();
    let mut counter: u64 = 0;
    for b in ov.base.objects() {
        enumerate_diagrams_at(ov, shape, b, budget, &mut counter, &mut out)?;
    }
    Ok(out)
}

/// Fiberwise diagrams of a given shape at one base object.
pub fn enumerate_diagrams_at(
    ov: &Overcategory,
    shape: &FinCat,
    b: &str,
    budget: &Budget,
    counter: &mut u64,
    out: &mut Vec<OverDiagram>,
) -> Result<(), OverError> {
    let id_b = ov.base.identity_of(b).to_string();
    let fiber_objs: Vec<&String> = ov
        .total
        .objects()
        .iter()
        .filter(|x| ov.arity_obj(x) == b)
        .collect();
    let shape_objs = shape.objects().to_vec();
    let nonid_mors: Vec<MorRec> = shape
        .morphisms()
        .iter()
        .filter(|m| !shape.is_identity(&m.id))
        .cloned()
        .collect();
    // assignment = object images then non-identity morphism images
    let mut obj_assign: Vec<&str> = Vec::new();
    let mut mor_assign: Vec<&str> = Vec::new();
    assign_objects(
        ov,
        shape,
        &id_b,
        b,
        &fiber_objs,
        &shape_objs,
        &nonid_mors,
        &mut obj_assign,
        &mut mor_assign,
        budget,
        counter,
        out,
    )
}

#[allow(clippy::too_many_arguments)]
fn assign_objects<'a>(
    ov: &'a Overcategory,
    shape: &FinCat,
    id_b: &str,
    b: &str,
    fiber_objs: &[&'a String],
    shape_objs: &[String],
    nonid_mors: &[MorRec],
    obj_assign: &mut Vec<&'a str>,
    mor_assign: &mut Vec<&'a str>,
    budget: &Budget,
    counter: &mut u64,
    out: &mut Vec<OverDiagram>,
) -> Result<(), OverError> {
    if obj_assign.len() == shape_objs.len() {
        return assign_morphisms(
            ov, shape, id_b, b, shape_objs, nonid_mors, obj_assign, mor_assign, budget, counter,
            out,
        );
    }
    for x in fiber_objs {
        *counter += 1;
        if *counter > budget.candidates {
            return Err(OverError::ShapeTooLarge {
                budget: budget.candidates,
            });
        }
        obj_assign.push(x.as_str());
        assign_objects(
            ov, shape, id_b, b, fiber_objs, shape_objs, nonid_mors, obj_assign, mor_assign,
            budget, counter, out,
        )?;
        obj_assign.pop();
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assign_morphisms<'a>(
    ov: &'a Overcategory,
    shape: &FinCat,
    id_b: &str,
    b: &str,
    shape_objs: &[String],
    nonid_mors: &[MorRec],
    obj_assign: &[&'a str],
    mor_assign: &mut Vec<&'a str>,
    budget: &Budget,
    counter: &mut u64,
    out: &mut Vec<OverDiagram>,
) -> Result<(), OverError> {
    let k = mor_assign.len();
    if k == nonid_mors.len() {
        // functoriality of the composition table
        let lookup_mor = |mid: &str| -> &str {
            if shape.is_identity(mid) {
                let o = shape.src(mid);
                let i = shape_objs.iter().position(|x| x == o).unwrap();
                ov.total.identity_of(obj_assign[i])
            } else {
                let i = nonid_mors.iter().position(|m| m.id == mid).unwrap();
                mor_assign[i]
            }
        };
        for ((g, f), gf) in shape.compose_table() {
            if ov.total.compose(lookup_mor(g), lookup_mor(f)) != Some(lookup_mor(gf)) {
                return Ok(());
            }
        }
        let object_map: BTreeMap<String, String> = shape_objs
            .iter()
            .cloned()
            .zip(obj_assign.iter().map(|s| s.to_string()))
            .collect();
        let morphism_map: BTreeMap<String, String> = shape
            .morphisms()
            .iter()
            .map(|m| (m.id.clone(), lookup_mor(&m.id).to_string()))
            .collect();
        let functor = FunctorData {
            dom: shape.clone(),
            cod: ov.total.clone(),
            object_map,
            morphism_map,
        };
        out.push(OverDiagram {
            shape: shape.clone(),
            functor,
            base_object: b.to_string(),
        });
        return Ok(());
    }
    let m = &nonid_mors[k];
    let si = shape_objs.iter().position(|x| *x == m.src).unwrap();
    let di = shape_objs.iter().position(|x| *x == m.dst).unwrap();
    for f in ov.total.hom(obj_assign[si], obj_assign[di]) {
        if ov.arity_mor(f) != id_b {
            continue;
        }
        *counter += 1;
        if *counter > budget.candidates {
            return Err(OverError::ShapeTooLarge {
                budget: budget.candidates,
            });
        }
        mor_assign.push(f);
        assign_morphisms(
            ov, shape, id_b, b, shape_objs, nonid_mors, obj_assign, mor_assign, budget, counter,
            out,
        )?;
        mor_assign.pop();
    }
    Ok(())
}

/// Natural transformations τ : F => F' with every component over b.
fn enumerate_transformations(
    ov: &Overcategory,
    d: &OverDiagram,
    d2: &OverDiagram,
    b: &str,
    budget: &Budget,
    counter: &mut u64,
    out: &mut Vec<Vec<(String, String)>>,
) -> Result<(), OverError> {
    let shape_objs = d.shape.objects().to_vec();
    let mut chosen: Vec<&str> = Vec::new();
    trans_backtrack(ov, d, d2, b, &shape_objs, &mut chosen, budget, counter, out)
}

#[allow(clippy::too_many_arguments)]
fn trans_backtrack<'a>(
    ov: &'a Overcategory,
    d: &OverDiagram,
    d2: &OverDiagram,
    b: &str,
    shape_objs: &[String],
    chosen: &mut Vec<&'a str>,
    budget: &Budget,
    counter: &mut u64,
    out: &mut Vec<Vec<(String, String)>>,
) -> Result<(), OverError> {
    let k = chosen.len();
    if k == shape_objs.len() {
        out.push(
            shape_objs
                .iter()
                .cloned()
                .zip(chosen.iter().map(|s| s.to_string()))
                .collect(),
        );
        return Ok(());
    }
    let c = &shape_objs[k];
    'next: for f in ov.total.hom(d.functor.on_obj(c), d2.functor.on_obj(c)) {
        if ov.arity_mor(f) != b {
            continue;
        }
        *counter += 1;
        if *counter > budget.candidates {
            return Err(OverError::ShapeTooLarge {
                budget: budget.candidates,
            });
        }
        // naturality squares whose endpoints are assigned
        for s in d.shape.morphisms() {
            let si = shape_objs.iter().position(|o| *o == s.src).unwrap();
            let di = shape_objs.iter().position(|o| *o == s.dst).unwrap();
            if si > k || di > k || (si < k && di < k) {
                continue;
            }
            let ts = if si == k { f } else { chosen[si] };
            let td = if di == k { f } else { chosen[di] };
            let left = ov.total.compose(td, d.functor.on_mor(&s.id));
            let right = ov.total.compose(d2.functor.on_mor(&s.id), ts);
            if left != right || left.is_none() {
                continue 'next;
            }
        }
        chosen.push(f);
        trans_backtrack(ov, d, d2, b, shape_objs, chosen, budget, counter, out)?;
        chosen.pop();
    }
    Ok(())
}

/// The diagonal overfunctor into the cotensor: x -> (Δ(x), A(x)).
pub fn diagonal_overfunctor(
    ov: &Overcategory,
    shape: &FinCat,
    budget: &Budget,
) -> Result<OverfunctorData, OverError> {
    let cot = cotensor(ov, shape, budget)?;
    let mut object_map = BTreeMap::new();
    for x in ov.total.objects() {
        let f = FunctorData::constant(shape, &ov.total, x)?;
        object_map.insert(x.clone(), encode_diagram(shape, &f, ov.arity_obj(x)));
    }
    let mut morphism_map = BTreeMap::new();
    for m in ov.total.morphisms() {
        let tau: Vec<(String, String)> = shape
            .objects()
            .iter()
            .map(|c| (c.clone(), m.id.clone()))
            .collect();
        let src = &object_map[&m.src];
        let dst = &object_map[&m.dst];
        morphism_map.insert(m.id.clone(), trans_id(src, dst, &tau, ov.arity_mor(&m.id)));
    }
    let total_map = FunctorData {
        dom: ov.total.clone(),
        cod: cot.total.clone(),
        object_map,
        morphism_map,
    };
    Ok(OverfunctorData {
        dom: ov.clone(),
        cod: cot,
        total_map,
        base_map: FunctorData::identity(&ov.base),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::shapes;

    #[test]
    fn every_category_is_an_overcategory_over_itself() {
        let c = fixtures::chain_poset(2);
        let ov = Overcategory::over_itself(&c);
        assert!(Overcategory::new(ov.total.clone(), ov.base.clone(), ov.arity.clone()).is_ok());
    }

    #[test]
    fn projection_arity_is_valid() {
        let ov = fixtures::finset_times_g(2);
        assert!(ov.arity.validate().is_valid());
    }

    #[test]
    fn broken_arity_is_rejected() {
        let c = fixtures::chain_poset(3);
        let mut arity = FunctorData::identity(&c);
        arity.morphism_map.insert("le_0_2".into(), "id_0".into());
        let err = Overcategory::new(c.clone(), c, arity).unwrap_err();
        assert!(matches!(err, OverError::InvalidArity(_)));
    }

    #[test]
    fn fiber_of_product_projection_recovers_the_first_factor() {
        let ov = fixtures::finset_times_g(2);
        for b in ov.base.objects() {
            let (fiber, incl) = ov.fiber_over_object(b).unwrap();
            assert!(fiber.validate().is_valid());
            assert_eq!(fiber.objects().len(), fixtures::finset_cat(2).objects().len());
            assert!(incl.validate().is_valid());
        }
    }

    #[test]
    fn fiber_over_identity_is_morphisms_with_identity_arity() {
        let ov = fixtures::finset_times_g(2);
        let b = &ov.base.objects()[0].clone();
        let id_b = ov.base.identity_of(b).to_string();
        let fib = ov.fiber_over_morphism(&id_b).unwrap();
        assert!(fib.validate().is_valid());
        let expected = ov
            .total
            .morphisms()
            .iter()
            .filter(|m| ov.arity_mor(&m.id) == id_b)
            .count();
        assert_eq!(fib.objects().len(), expected);
    }

    #[test]
    fn fiber_over_nonidentity_counts_total_morphisms_over_it() {
        let ov = fixtures::finset_times_g(2);
        let b = ov
            .base
            .morphisms()
            .iter()
            .find(|m| !ov.base.is_identity(&m.id))
            .unwrap()
            .id
            .clone();
        let fib = ov.fiber_over_morphism(&b).unwrap();
        assert!(fib.validate().is_valid());
        let expected = ov
            .total
            .morphisms()
            .iter()
            .filter(|m| ov.arity_mor(&m.id) == b)
            .count();
        assert_eq!(fib.objects().len(), expected);
    }

    #[test]
    fn cotensor_with_empty_shape_is_the_base() {
        let ov = fixtures::finset_times_g(2);
        let cot = cotensor(&ov, &shapes::empty(), &Budget::default()).unwrap();
        assert!(cot.total.validate().is_valid());
        assert_eq!(cot.total.objects().len(), ov.base.objects().len());
        assert_eq!(cot.total.morphisms().len(), ov.base.morphisms().len());
    }

    #[test]
    fn cotensor_with_terminal_shape_is_the_total() {
        let ov = fixtures::finset_times_g(2);
        let cot = cotensor(&ov, &shapes::terminal(), &Budget::default()).unwrap();
        assert!(cot.total.validate().is_valid());
        assert_eq!(cot.total.objects().len(), ov.total.objects().len());
        assert_eq!(cot.total.morphisms().len(), ov.total.morphisms().len());
    }

    #[test]
    fn cotensor_parallel_pair_counts_same_fiber_parallel_pairs() {
        let ov = fixtures::finset_times_g(2);
        let cot = cotensor(&ov, &shapes::parallel_pair(), &Budget::default()).unwrap();
        // objects = ordered pairs (f, g) of parallel vertical morphisms
        let mut expected = 0usize;
        for f in ov.total.morphisms() {
            for g in ov.total.morphisms() {
                if f.src == g.src
                    && f.dst == g.dst
                    && ov.is_vertical(&f.id)
                    && ov.is_vertical(&g.id)
                {
                    expected += 1;
                }
            }
        }
        assert_eq!(cot.total.objects().len(), expected);
    }

    #[test]
    fn diagonal_followed_by_cotensor_arity_is_the_arity() {
        let ov = fixtures::finset_times_g(2);
        let delta = diagonal_overfunctor(&ov, &shapes::parallel_pair(), &Budget::default()).unwrap();
        delta.validate().unwrap();
        let comp = delta.total_map.then(&delta.cod.arity);
        assert!(comp.same_maps(&ov.arity));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let ov = fixtures::finset_times_g(2);
        let tight = Budget {
            candidates: 3,
            size_cap: 4,
        };
        let err = cotensor(&ov, &shapes::parallel_pair(), &tight).unwrap_err();
        assert!(matches!(err, OverError::ShapeTooLarge { budget: 3 }));
    }

    #[test]
    fn overcones_of_empty_diagram_are_coslice_style_pairs() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let empty = shapes::empty();
        let f = FunctorData {
            dom: empty.clone(),
            cod: ov.total.clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        };
        let diag = OverDiagram::new(&ov, empty, f, &b).unwrap();
        let cones = enumerate_overcones(&ov, &diag);
        let expected: usize = ov
            .total
            .objects()
            .iter()
            .map(|x| ov.base.hom(ov.arity_obj(x), &b).len())
            .sum();
        assert_eq!(cones.len(), expected);
    }

    #[test]
    fn connected_shape_overcones_are_classical_cones() {
        // over a connected shape every overcone's components share one b
        // and commute with the diagram, i.e. form a classical cone in the
        // total category; checked by brute-force recount.
        let ov = fixtures::finset_times_g(2);
        let diags = enumerate_diagrams(&ov, &shapes::parallel_pair(), &Budget::default()).unwrap();
        let diag = &diags[0];
        let cones = enumerate_overcones(&ov, diag);
        let mut brute = 0usize;
        for x in ov.total.objects() {
            for b in ov.base.hom(ov.arity_obj(x), &diag.base_object) {
                let tops: Vec<_> = ov
                    .total
                    .hom(x, diag.functor.on_obj("s"))
                    .into_iter()
                    .filter(|f| ov.arity_mor(f) == b)
                    .collect();
                let bots: Vec<_> = ov
                    .total
                    .hom(x, diag.functor.on_obj("t"))
                    .into_iter()
                    .filter(|f| ov.arity_mor(f) == b)
                    .collect();
                for cs in &tops {
                    for ct in &bots {
                        if ov.total.compose(diag.functor.on_mor("top"), cs) == Some(*ct)
                            && ov.total.compose(diag.functor.on_mor("bot"), cs) == Some(*ct)
                        {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(cones.len(), brute);
    }
}
