//! Comma overcategories, overinitial objects, the overinitial-object
//! lemma, solution sets, and Freyd-style left overadjoint synthesis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derived::coslice;
use crate::fincat::{pair_id, CatError, FinCat, MorRec, SEP_AT};
use crate::functor::{FunctorData, NatTransData};
use crate::limits::{cone_is_universal, is_k_equalizer_of, k_equalizer, overcompleteness_report,
    overlimit};
use crate::overcat::{enumerate_diagrams, Budget, Overcategory, OverDiagram, OverError,
    OverfunctorData};
use crate::shapes;

#[derive(Debug, Error)]
pub enum CommaError {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Over(#[from] OverError),
    #[error("solution set member {member} has non-identity arity {arity}")]
    ArityViolation { member: String, arity: String },
    #[error("lemma hypotheses unverified: {0}")]
    HypothesesUnverified(String),
    #[error("enumeration budget exceeded")]
    BudgetExceeded,
}

/// The comma overcategory (B ↓ F) with its arity into the coslice
/// A(B)/G and the two projections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommaOvercategory {
    pub underlying: Overcategory,
    /// first projection, (X, a) -> X into the domain total category.
    pub q: FunctorData,
    /// coslice projection onto the shared base G.
    pub q0: FunctorData,
}

/// Builds (B ↓ F) for a same-base overfunctor F and an object B of the
/// codomain total category. Objects are pairs (X, a : B -> F X); a
/// morphism f : (X, a) -> (X', a') is f : X -> X' with F(f) ∘ a = a'.
pub fn comma_overcategory(f: &OverfunctorData, b: &str) -> Result<CommaOvercategory, CommaError> {
    if !f.cod.total.has_object(b) {
        return Err(CatError::UnknownObject(b.to_string()).into());
    }
    let dom = &f.dom.total;
    let cod = &f.cod.total;
    let base = &f.cod.base;
    let ab = f.cod.arity_obj(b);
    let (cos, q0) = coslice(base, ab)?;
    let obj_id = |x: &str, a: &str| pair_id(x, a);
    let mut objects = Vec::new();
    let mut obj_parts: BTreeMap<String, (String, String)> = BTreeMap::new();
    for x in dom.objects() {
        for a in cod.hom(b, f.total_map.on_obj(x)) {
            let id = obj_id(x, a);
            obj_parts.insert(id.clone(), (x.clone(), a.to_string()));
            objects.push(id);
        }
    }
    let mor_id = |u: &str, src: &str| format!("{u}{SEP_AT}{src}");
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut mor_parts: BTreeMap<String, String> = BTreeMap::new();
    for src in &objects {
        let (x, a) = &obj_parts[src];
        for u in dom.hom_from(x) {
            let a2 = cod
                .compose(f.total_map.on_mor(u), a)
                .expect("composable by construction");
            let dst = obj_id(dom.dst(u), a2);
            let id = mor_id(u, src);
            morphisms.push(MorRec {
                id: id.clone(),
                src: src.clone(),
                dst,
            });
            mor_parts.insert(id.clone(), u.to_string());
            if dom.is_identity(u) {
                identity.insert(src.clone(), id);
            }
        }
    }
    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.dst == m2.src {
                let u = dom
                    .compose(&mor_parts[&m2.id], &mor_parts[&m1.id])
                    .expect("composable");
                compose.insert((m2.id.clone(), m1.id.clone()), mor_id(u, &m1.src));
            }
        }
    }
    let total = FinCat::from_parts(objects.clone(), morphisms, identity, compose)?;
    // arity into the coslice: (X, a) -> A(a); f -> the triangle A(f)@A(a)
    let mut arity_obj = BTreeMap::new();
    for o in &objects {
        let (_, a) = &obj_parts[o];
        arity_obj.insert(o.clone(), f.cod.arity_mor(a).to_string());
    }
    let mut arity_mor = BTreeMap::new();
    for m in total.morphisms() {
        let u = &mor_parts[&m.id];
        let (_, a) = &obj_parts[&m.src];
        let au = f.dom.arity_mor(u);
        arity_mor.insert(
            m.id.clone(),
            format!("{au}{SEP_AT}{}", f.cod.arity_mor(a)),
        );
    }
    let arity = FunctorData {
        dom: total.clone(),
        cod: cos.clone(),
        object_map: arity_obj,
        morphism_map: arity_mor,
    };
    let underlying = Overcategory::new(total.clone(), cos, arity)?;
    let q = FunctorData {
        dom: total,
        cod: dom.clone(),
        object_map: obj_parts
            .iter()
            .map(|(o, (x, _))| (o.clone(), x.clone()))
            .collect(),
        morphism_map: mor_parts.clone(),
    };
    Ok(CommaOvercategory { underlying, q, q0 })
}

/// Split a comma object id back into (X, a).
pub fn comma_parts(id: &str) -> Option<(&str, &str)> {
    crate::fincat::split_pair_id(id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverinitialWitness {
    pub candidate: String,
    pub target: String,
    pub base_mor: String,
    pub lifts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum OverinitialResult {
    Found { object: String },
    NotFound { witness: Option<OverinitialWitness> },
}

impl OverinitialResult {
    pub fn found(&self) -> Option<&str> {
        match self {
            OverinitialResult::Found { object } => Some(object),
            OverinitialResult::NotFound { .. } => None,
        }
    }
}

/// Is `z` overinitial: for every object d and every base morphism
/// b : A(z) -> A(d), exactly one morphism z -> d over b?
pub fn is_overinitial(ov: &Overcategory, z: &str) -> Result<(), OverinitialWitness> {
    let g0 = ov.arity_obj(z);
    for d in ov.total.objects() {
        for b in ov.base.hom(g0, ov.arity_obj(d)) {
            let lifts = ov
                .total
                .hom(z, d)
                .into_iter()
                .filter(|m| ov.arity_mor(m) == b)
                .count();
            if lifts != 1 {
                return Err(OverinitialWitness {
                    candidate: z.to_string(),
                    target: d.clone(),
                    base_mor: b.to_string(),
                    lifts,
                });
            }
        }
    }
    Ok(())
}

/// Exhaustive overinitial search in the fiber over `g0`, candidates in
/// canonical id order.
pub fn find_overinitial(ov: &Overcategory, g0: &str) -> OverinitialResult {
    let mut candidates: Vec<&String> = ov
        .total
        .objects()
        .iter()
        .filter(|x| ov.arity_obj(x) == g0)
        .collect();
    candidates.sort();
    let mut witness = None;
    for z in candidates {
        match is_overinitial(ov, z) {
            Ok(()) => return OverinitialResult::Found { object: z.clone() },
            Err(w) => {
                if witness.is_none() {
                    witness = Some(w);
                }
            }
        }
    }
    OverinitialResult::NotFound { witness }
}

/// Plain initiality in a category, for the Prop "miracle" cross-check.
pub fn is_initial_plain(cat: &FinCat, z: &str) -> bool {
    cat.objects().iter().all(|d| cat.hom(z, d).len() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverinitialLemmaReport {
    pub family_weakly_overinitial: bool,
    pub overinitial_found: Option<String>,
    /// the lemma's implication: weakly overinitial family => overinitial.
    pub forward_holds: bool,
    /// converse sanity: a found overinitial is itself weakly overinitial.
    pub converse_holds: bool,
}

/// Is the family weakly overinitial: for every d and b at least one lift
/// from some member?
pub fn family_weakly_overinitial(ov: &Overcategory, g0: &str, family: &[String]) -> bool {
    for d in ov.total.objects() {
        for b in ov.base.hom(g0, ov.arity_obj(d)) {
            let hit = family.iter().any(|z| {
                ov.total
                    .hom(z, d)
                    .into_iter()
                    .any(|m| ov.arity_mor(m) == b)
            });
            if !hit {
                return false;
            }
        }
    }
    true
}

/// The overinitial-object lemma on a finite instance: requires in-budget
/// overcompleteness and K-equalizers first, then checks that a weakly
/// overinitial family forces an overinitial object.
pub fn check_overinitial_lemma(
    ov: &Overcategory,
    g0: &str,
    family: &[String],
    budget: &Budget,
) -> Result<OverinitialLemmaReport, CommaError> {
    for z in family {
        if !ov.total.has_object(z) || ov.arity_obj(z) != g0 {
            return Err(CatError::UnknownObject(z.clone()).into());
        }
    }
    let report = overcompleteness_report(ov, budget);
    if !report.overcomplete {
        return Err(CommaError::HypothesesUnverified(
            "overcategory is not overcomplete within budget".into(),
        ));
    }
    if !has_k_equalizers(ov) {
        return Err(CommaError::HypothesesUnverified(
            "overcategory lacks a K-equalizer".into(),
        ));
    }
    let weakly = family_weakly_overinitial(ov, g0, family);
    let found = find_overinitial(ov, g0).found().map(|s| s.to_string());
    let forward_holds = !weakly || found.is_some();
    let converse_holds = match &found {
        Some(z) => family_weakly_overinitial(ov, g0, &[z.clone()]),
        None => true,
    };
    Ok(OverinitialLemmaReport {
        family_weakly_overinitial: weakly,
        overinitial_found: found,
        forward_holds,
        converse_holds,
    })
}

/// Does every equal-arity parallel pair have a K-equalizer?
pub fn has_k_equalizers(ov: &Overcategory) -> bool {
    for (f, g) in ov.total.parallel_pairs() {
        if ov.arity_mor(&f) != ov.arity_mor(&g) {
            continue;
        }
        match k_equalizer(ov, &f, &g) {
            Ok(res) => {
                if res.found().is_none() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSetCertificate {
    pub ok: bool,
    /// comma object id -> (member index, factoring morphism a_i).
    pub factorizations: BTreeMap<String, (usize, String)>,
    pub unfactored: Option<String>,
}

/// Solution set condition at B: every (X, a) factors through some
/// (A_i, b_i) with identity arity, meaning there is a_i : A_i -> X with
/// F(a_i) ∘ b_i = a.
pub fn solution_set_check(
    f: &OverfunctorData,
    b: &str,
    family: &[(String, String)],
) -> Result<SolutionSetCertificate, CommaError> {
    let cod = &f.cod.total;
    for (_, bi) in family {
        let arity = f.cod.arity_mor(bi);
        if !f.cod.base.is_identity(arity) {
            return Err(CommaError::ArityViolation {
                member: bi.clone(),
                arity: arity.to_string(),
            });
        }
    }
    let mut factorizations = BTreeMap::new();
    for x in f.dom.total.objects() {
        for a in cod.hom(b, f.total_map.on_obj(x)) {
            let key = pair_id(x, a);
            let mut hit = None;
            'family: for (i, (ai_obj, bi)) in family.iter().enumerate() {
                for u in f.dom.total.hom(ai_obj, x) {
                    if cod.compose(f.total_map.on_mor(u), bi) == Some(a) {
                        hit = Some((i, u.to_string()));
                        break 'family;
                    }
                }
            }
            match hit {
                Some(h) => {
                    factorizations.insert(key, h);
                }
                None => {
                    return Ok(SolutionSetCertificate {
                        ok: false,
                        factorizations,
                        unfactored: Some(key),
                    })
                }
            }
        }
    }
    Ok(SolutionSetCertificate {
        ok: true,
        factorizations,
        unfactored: None,
    })
}

/// An overadjunction L ⊣ R between same-base overcategories, with the
/// unit and counit on total categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjunction {
    pub left: OverfunctorData,
    pub right: OverfunctorData,
    pub unit: NatTransData,
    pub counit: NatTransData,
}

impl Adjunction {
    /// Functor laws, naturality, triangle identities, and the natural
    /// hom-bijection, all exhaustively.
    pub fn validate(&self) -> Result<(), CommaError> {
        self.left.validate()?;
        self.right.validate()?;
        let rep = self.unit.validate().merged(self.counit.validate());
        if !rep.is_valid() {
            return Err(CommaError::HypothesesUnverified(rep.to_string()));
        }
        if !self.check_triangles() {
            return Err(CommaError::HypothesesUnverified(
                "triangle identities fail".into(),
            ));
        }
        if !self.check_hom_bijection() {
            return Err(CommaError::HypothesesUnverified(
                "hom-bijection fails".into(),
            ));
        }
        Ok(())
    }

    /// ε_{L B} ∘ L(η_B) = 1 and F(ε_A) ∘ η_{F A} = 1.
    pub fn check_triangles(&self) -> bool {
        let dom = &self.left.cod.total; // domain of the right adjoint F
        let cod = &self.left.dom.total; // codomain of F
        let l = &self.left.total_map;
        let f = &self.right.total_map;
        for b in cod.objects() {
            let lhs = dom.compose(self.counit.component(l.on_obj(b)), l.on_mor(self.unit.component(b)));
            if lhs.map(|m| dom.is_identity(m)) != Some(true) {
                return false;
            }
        }
        for a in dom.objects() {
            let lhs = cod.compose(f.on_mor(self.counit.component(a)), self.unit.component(f.on_obj(a)));
            if lhs.map(|m| cod.is_identity(m)) != Some(true) {
                return false;
            }
        }
        true
    }

    /// Φ(h) = F(h) ∘ η_B is a bijection Hom(L B, A) -> Hom(B, F A)
    /// matching arities, natural in both variables.
    pub fn check_hom_bijection(&self) -> bool {
        let dom = &self.left.cod.total;
        let cod = &self.left.dom.total;
        let dom_ov = &self.left.cod;
        let cod_ov = &self.left.dom;
        let l = &self.left.total_map;
        let f = &self.right.total_map;
        let phi = |b: &str, h: &str| -> Option<String> {
            cod.compose(f.on_mor(h), self.unit.component(b))
                .map(|m| m.to_string())
        };
        for b in cod.objects() {
            for a in dom.objects() {
                let lhs = dom.hom(l.on_obj(b), a);
                let rhs = cod.hom(b, f.on_obj(a));
                if lhs.len() != rhs.len() {
                    return false;
                }
                let mut images: Vec<String> = Vec::new();
                for h in &lhs {
                    match phi(b, h) {
                        Some(img) => {
                            if dom_ov.arity_mor(h) != cod_ov.arity_mor(&img) {
                                return false;
                            }
                            images.push(img);
                        }
                        None => return false,
                    }
                }
                images.sort();
                images.dedup();
                let mut target: Vec<String> =
                    rhs.iter().map(|m| m.to_string()).collect();
                target.sort();
                if images != target {
                    return false;
                }
            }
        }
        // naturality: Φ(v ∘ h ∘ L u) = F(v) ∘ Φ(h) ∘ u
        for u in cod.morphisms() {
            for h in dom.morphisms() {
                if dom.src(&h.id) != l.on_obj(&u.dst) {
                    continue;
                }
                for v in dom.hom_from(&h.dst) {
                    let inner = dom
                        .compose(&h.id, l.on_mor(&u.id))
                        .and_then(|m| dom.compose(v, m));
                    let lhs = inner.and_then(|m| phi(&u.src, m));
                    let rhs = phi(&u.dst, &h.id)
                        .and_then(|m| cod.compose(f.on_mor(v), &m).map(|s| s.to_string()))
                        .and_then(|m| cod.compose(&m, &u.id).map(|s| s.to_string()));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum AdjunctionResult {
    Found(Box<Adjunction>),
    NotFound {
        witness_b: String,
        witness: Option<OverinitialWitness>,
    },
}

impl AdjunctionResult {
    pub fn found(&self) -> Option<&Adjunction> {
        match self {
            AdjunctionResult::Found(a) => Some(a),
            AdjunctionResult::NotFound { .. } => None,
        }
    }
}

/// Freyd-style synthesis: for every B of the codomain, find the
/// overinitial object of (B ↓ F) in the fiber over the coslice identity,
/// then assemble L, η, ε from initiality and validate everything.
pub fn synthesize_left_overadjoint(
    f: &OverfunctorData,
    budget: &Budget,
) -> Result<AdjunctionResult, CommaError> {
    let cod = &f.cod.total; // total category of the overcategory B lives in
    let dom = &f.dom.total;
    let mut r_obj: BTreeMap<String, String> = BTreeMap::new();
    let mut eta: BTreeMap<String, String> = BTreeMap::new();
    let mut ops: u64 = 0;
    for b in cod.objects() {
        let comma = comma_overcategory(f, b)?;
        ops += comma.underlying.total.morphisms().len() as u64;
        if ops > budget.candidates {
            return Err(CommaError::BudgetExceeded);
        }
        let ab = f.cod.arity_obj(b);
        let id_fiber = f.cod.base.identity_of(ab).to_string();
        match find_overinitial(&comma.underlying, &id_fiber) {
            OverinitialResult::Found { object } => {
                let (x, a) = comma_parts(&object).expect("comma id");
                r_obj.insert(b.clone(), x.to_string());
                eta.insert(b.clone(), a.to_string());
            }
            OverinitialResult::NotFound { witness } => {
                return Ok(AdjunctionResult::NotFound {
                    witness_b: b.clone(),
                    witness,
                })
            }
        }
    }
    // L on morphisms: the unique arrow under the unit square with
    // matching arity.
    let mut l_mor: BTreeMap<String, String> = BTreeMap::new();
    for u in cod.morphisms() {
        let rb = &r_obj[&u.src];
        let rb2 = &r_obj[&u.dst];
        let target = cod.compose(&eta[&u.dst], &u.id);
        let au = f.cod.arity_mor(&u.id);
        let cands: Vec<&str> = dom
            .hom(rb, rb2)
            .into_iter()
            .filter(|g| f.dom.arity_mor(g) == au)
            .filter(|g| cod.compose(f.total_map.on_mor(g), &eta[&u.src]) == target)
            .collect();
        if cands.len() != 1 {
            return Ok(AdjunctionResult::NotFound {
                witness_b: u.src.clone(),
                witness: Some(OverinitialWitness {
                    candidate: r_obj[&u.src].clone(),
                    target: r_obj[&u.dst].clone(),
                    base_mor: au.to_string(),
                    lifts: cands.len(),
                }),
            });
        }
        l_mor.insert(u.id.clone(), cands[0].to_string());
    }
    let left = OverfunctorData {
        dom: f.cod.clone(),
        cod: f.dom.clone(),
        total_map: FunctorData {
            dom: cod.clone(),
            cod: dom.clone(),
            object_map: r_obj.clone(),
            morphism_map: l_mor,
        },
        base_map: FunctorData::identity(&f.cod.base),
    };
    // counit: factorize identities through the unit at F(A).
    let mut counit_components: BTreeMap<String, String> = BTreeMap::new();
    for a in dom.objects() {
        let fa = f.total_map.on_obj(a);
        let rfa = &r_obj[fa];
        let cands: Vec<&str> = dom
            .hom(rfa, a)
            .into_iter()
            .filter(|g| f.dom.base.is_identity(f.dom.arity_mor(g)))
            .filter(|g| {
                cod.compose(f.total_map.on_mor(g), &eta[fa])
                    .map(|m| cod.is_identity(m))
                    == Some(true)
            })
            .collect();
        if cands.len() != 1 {
            return Ok(AdjunctionResult::NotFound {
                witness_b: fa.to_string(),
                witness: Some(OverinitialWitness {
                    candidate: rfa.clone(),
                    target: a.clone(),
                    base_mor: f.dom.base.identity_of(f.dom.arity_obj(a)).to_string(),
                    lifts: cands.len(),
                }),
            });
        }
        counit_components.insert(a.clone(), cands[0].to_string());
    }
    let unit = NatTransData {
        dom_functor: FunctorData::identity(cod),
        cod_functor: left.total_map.then(&f.total_map),
        components: eta,
    };
    let counit = NatTransData {
        dom_functor: f.total_map.then(&left.total_map),
        cod_functor: FunctorData::identity(dom),
        components: counit_components,
    };
    let adj = Adjunction {
        left,
        right: f.clone(),
        unit,
        counit,
    };
    adj.validate()?;
    Ok(AdjunctionResult::Found(Box::new(adj)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservationVerdict {
    pub shape: String,
    pub checked: usize,
    pub preserved: bool,
    pub failing: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreydReport {
    pub domain_overcomplete: bool,
    pub domain_k_equalizers: bool,
    pub limit_preservation: Vec<PreservationVerdict>,
    pub k_equalizer_preservation: PreservationVerdict,
    pub all_ok: bool,
}

/// Push a fiberwise diagram through a same-base overfunctor.
pub fn image_diagram(
    f: &OverfunctorData,
    diag: &OverDiagram,
) -> Result<OverDiagram, OverError> {
    OverDiagram::new(
        &f.cod,
        diag.shape.clone(),
        diag.functor.then(&f.total_map),
        f.base_map.on_obj(&diag.base_object),
    )
}

/// Freyd hypothesis report for F viewed as the right adjoint candidate:
/// its domain overcategory must be overcomplete with K-equalizers, and F
/// must preserve both, all within budget.
pub fn freyd_hypotheses_report(f: &OverfunctorData, budget: &Budget) -> FreydReport {
    let dom = &f.dom;
    let report = overcompleteness_report(dom, budget);
    let domain_overcomplete = report.overcomplete;
    let domain_k_equalizers = has_k_equalizers(dom);
    let mut limit_preservation = Vec::new();
    for (name, shape) in shapes::supported_shapes() {
        let mut checked = 0usize;
        let mut failing = None;
        if let Ok(diagrams) = enumerate_diagrams(dom, &shape, budget) {
            for d in diagrams {
                if let Some(uni) = overlimit(dom, &d).found() {
                    checked += 1;
                    let img = match image_diagram(f, &d) {
                        Ok(i) => i,
                        Err(_) => {
                            failing = Some(d.key());
                            break;
                        }
                    };
                    let mut cone = uni.cone.clone();
                    cone.apex = f.total_map.on_obj(&cone.apex).to_string();
                    cone.base_mor = f
                        .cod
                        .base
                        .identity_of(&img.base_object)
                        .to_string();
                    for v in cone.components.values_mut() {
                        *v = f.total_map.on_mor(v).to_string();
                    }
                    if !cone_is_universal(&f.cod, &img, &cone) {
                        failing = Some(d.key());
                        break;
                    }
                }
            }
        }
        limit_preservation.push(PreservationVerdict {
            shape: name.to_string(),
            checked,
            preserved: failing.is_none(),
            failing,
        });
    }
    let mut keq_checked = 0usize;
    let mut keq_failing = None;
    for (p, q) in dom.total.parallel_pairs() {
        if dom.arity_mor(&p) != dom.arity_mor(&q) {
            continue;
        }
        if let Ok(res) = k_equalizer(dom, &p, &q) {
            if let Some(eq) = res.found() {
                keq_checked += 1;
                let fp = f.total_map.on_mor(&p);
                let fq = f.total_map.on_mor(&q);
                let fe = f.total_map.on_mor(&eq.morphism);
                if !is_k_equalizer_of(&f.cod, fp, fq, fe) {
                    keq_failing = Some(format!("({p}|{q})"));
                    break;
                }
            }
        }
    }
    let k_equalizer_preservation = PreservationVerdict {
        shape: "k-equalizer".to_string(),
        checked: keq_checked,
        preserved: keq_failing.is_none(),
        failing: keq_failing,
    };
    let all_ok = domain_overcomplete
        && domain_k_equalizers
        && limit_preservation.iter().all(|v| v.preserved)
        && k_equalizer_preservation.preserved;
    FreydReport {
        domain_overcomplete,
        domain_k_equalizers,
        limit_preservation,
        k_equalizer_preservation,
        all_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn comma_under_identity_is_the_coslice() {
        let c = fixtures::chain_poset(3);
        let ov = Overcategory::over_itself(&c);
        let idf = OverfunctorData::identity(&ov);
        let comma = comma_overcategory(&idf, "0").unwrap();
        assert!(comma.underlying.total.validate().is_valid());
        assert_eq!(
            comma.underlying.total.objects().len(),
            c.hom_from("0").len()
        );
        assert!(comma.q.validate().is_valid());
    }

    #[test]
    fn comma_object_count_is_hom_sum() {
        let f = fixtures::poset_reflection_overfunctor();
        let b = "h"; // the new middle element 1/2
        let comma = comma_overcategory(&f, b).unwrap();
        let expected: usize = f
            .dom
            .total
            .objects()
            .iter()
            .map(|x| f.cod.total.hom(b, f.total_map.on_obj(x)).len())
            .sum();
        assert_eq!(comma.underlying.total.objects().len(), expected);
    }

    #[test]
    fn poset_reflection_comma_at_half_has_overinitial_one() {
        let f = fixtures::poset_reflection_overfunctor();
        let comma = comma_overcategory(&f, "h").unwrap();
        let ab = f.cod.arity_obj("h");
        let id_fiber = f.cod.base.identity_of(ab).to_string();
        let res = find_overinitial(&comma.underlying, &id_fiber);
        let obj = res.found().expect("overinitial comma object");
        let (x, _) = comma_parts(obj).unwrap();
        assert_eq!(x, "1");
    }

    #[test]
    fn empty_set_is_overinitial_in_finset_times_g() {
        let ov = fixtures::finset_times_g(2);
        for g0 in ov.base.objects() {
            let res = find_overinitial(&ov, g0);
            let obj = res.found().expect("overinitial");
            assert_eq!(obj, &fixtures::finset_obj_in_product(&ov, 0, g0));
        }
    }

    #[test]
    fn doubled_lift_fixture_has_no_overinitial() {
        let ov = fixtures::doubled_lift_overcat();
        let g0 = ov.base.objects()[0].clone();
        match find_overinitial(&ov, &g0) {
            OverinitialResult::NotFound { witness } => {
                let w = witness.expect("witness");
                assert!(w.lifts != 1);
            }
            OverinitialResult::Found { object } => panic!("unexpected overinitial {object}"),
        }
    }

    #[test]
    fn miracle_identity_arity_overinitial_iff_initial_in_comma() {
        let f = fixtures::poset_reflection_overfunctor();
        for b in f.cod.total.objects() {
            let comma = comma_overcategory(&f, b).unwrap();
            let ab = f.cod.arity_obj(b);
            let id_fiber = f.cod.base.identity_of(ab).to_string();
            for z in comma.underlying.total.objects() {
                if comma.underlying.arity_obj(z) != id_fiber {
                    continue;
                }
                let overinit = is_overinitial(&comma.underlying, z).is_ok();
                let plain = is_initial_plain(&comma.underlying.total, z);
                assert_eq!(overinit, plain, "object {z} at B={b}");
            }
        }
    }

    #[test]
    fn lemma_holds_on_finset_times_g_with_full_family() {
        let ov = fixtures::lattice_times_g();
        let g0 = ov.base.objects()[0].clone();
        let family: Vec<String> = ov
            .total
            .objects()
            .iter()
            .filter(|x| ov.arity_obj(x) == g0)
            .cloned()
            .collect();
        let rep = check_overinitial_lemma(&ov, &g0, &family, &Budget::default()).unwrap();
        assert!(rep.forward_holds);
        assert!(rep.converse_holds);
    }

    #[test]
    fn lemma_hypotheses_unverified_without_completeness() {
        let ov = fixtures::finset_times_g(2);
        let g0 = ov.base.objects()[0].clone();
        let err = check_overinitial_lemma(&ov, &g0, &[], &Budget::default()).unwrap_err();
        assert!(matches!(err, CommaError::HypothesesUnverified(_)));
    }

    #[test]
    fn identity_arity_comma_objects_are_a_solution_set() {
        let f = fixtures::poset_reflection_overfunctor();
        let b = "h";
        let family: Vec<(String, String)> = f
            .dom
            .total
            .objects()
            .iter()
            .flat_map(|x| {
                f.cod
                    .total
                    .hom(b, f.total_map.on_obj(x))
                    .into_iter()
                    .filter(|a| f.cod.base.is_identity(f.cod.arity_mor(a)))
                    .map(|a| (x.clone(), a.to_string()))
                    .collect::<Vec<_>>()
            })
            .collect();
        let cert = solution_set_check(&f, b, &family).unwrap();
        assert!(cert.ok, "unfactored: {:?}", cert.unfactored);
    }

    #[test]
    fn empty_solution_set_fails_with_witness() {
        let f = fixtures::poset_reflection_overfunctor();
        let cert = solution_set_check(&f, "h", &[]).unwrap();
        assert!(!cert.ok);
        assert!(cert.unfactored.is_some());
    }

    #[test]
    fn minimal_solution_set_for_the_reflection_is_one_at_half() {
        let f = fixtures::poset_reflection_overfunctor();
        let b = "h";
        let a = f
            .cod
            .total
            .hom(b, f.total_map.on_obj("1"))
            .first()
            .copied()
            .unwrap()
            .to_string();
        let cert = solution_set_check(&f, b, &[("1".to_string(), a)]).unwrap();
        assert!(cert.ok);
    }

    #[test]
    fn identity_adjoint_is_identity() {
        let c = fixtures::chain_poset(2);
        let ov = Overcategory::over_itself(&c);
        let idf = OverfunctorData::identity(&ov);
        let res = synthesize_left_overadjoint(&idf, &Budget::default()).unwrap();
        let adj = res.found().expect("identity adjoint");
        for o in c.objects() {
            assert_eq!(adj.left.total_map.on_obj(o), o);
        }
    }

    #[test]
    fn poset_reflection_left_adjoint_rounds_up() {
        let f = fixtures::poset_reflection_overfunctor();
        let res = synthesize_left_overadjoint(&f, &Budget::default()).unwrap();
        let adj = res.found().expect("reflection adjoint");
        assert_eq!(adj.left.total_map.on_obj("0"), "0");
        assert_eq!(adj.left.total_map.on_obj("h"), "1");
        assert_eq!(adj.left.total_map.on_obj("1"), "1");
        assert!(adj.check_hom_bijection());
    }

    #[test]
    fn discrete_two_to_terminal_has_no_left_adjoint() {
        let f = fixtures::discrete_two_to_terminal_overfunctor();
        let res = synthesize_left_overadjoint(&f, &Budget::default()).unwrap();
        match res {
            AdjunctionResult::NotFound { witness_b, .. } => {
                assert!(!witness_b.is_empty());
            }
            AdjunctionResult::Found(_) => panic!("no adjoint should exist"),
        }
    }

    #[test]
    fn identity_overfunctor_passes_the_freyd_report() {
        let ov = fixtures::lattice_times_g();
        let idf = OverfunctorData::identity(&ov);
        let rep = freyd_hypotheses_report(&idf, &Budget::default());
        assert!(rep.all_ok, "{rep:?}");
    }

    #[test]
    fn successful_synthesis_implies_preservation() {
        let f = fixtures::poset_reflection_overfunctor();
        let res = synthesize_left_overadjoint(&f, &Budget::default()).unwrap();
        assert!(res.found().is_some());
        let rep = freyd_hypotheses_report(&f, &Budget::default());
        assert!(
            rep.limit_preservation.iter().all(|v| v.preserved),
            "{rep:?}"
        );
        assert!(rep.k_equalizer_preservation.preserved);
    }
}
