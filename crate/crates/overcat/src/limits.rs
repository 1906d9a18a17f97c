//! Overlimits, overcolimits, K-(co)equalizers, split overforks, and the
//! completeness equivalence report.
//!
//! Universality is always certified against the complete overcone
//! enumeration, never inferred from a construction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::functor::FunctorData;
use crate::overcat::{
    enumerate_diagrams, enumerate_overcones, Budget, Overcategory, Overcone, OverDiagram,
    OverError, OverfunctorData,
};
use crate::shapes;

#[derive(Debug, Error)]
pub enum LimitError {
    #[error("morphisms {f} and {g} are not parallel")]
    NotParallel { f: String, g: String },
    #[error("morphisms {f} and {g} have different arities")]
    AritiesDiffer { f: String, g: String },
    #[error("fork data does not lie in a single fiber")]
    NotInOneFiber,
    #[error(transparent)]
    Over(#[from] OverError),
}

/// An overlimit: a cone with identity base morphism plus the full mediator
/// table over every overcone of the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalOvercone {
    pub cone: Overcone,
    /// overcone key -> the unique factorizing morphism.
    pub mediator_table: BTreeMap<String, String>,
    pub overcone_count: usize,
}

impl UniversalOvercone {
    pub fn mediator_for(&self, cone: &Overcone) -> Option<&str> {
        self.mediator_table.get(&cone.key()).map(|s| s.as_str())
    }
}

pub type UniversalOvercocone = UniversalOvercone;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFailure {
    pub candidate: String,
    pub overcone: String,
    pub mediators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum LimitWitness {
    /// No cone with identity base morphism exists at all.
    NoIdentityCone,
    /// Every identity-base candidate fails universality; one failing
    /// overcone per candidate.
    CandidateFailures { failures: Vec<CandidateFailure> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum LimitResult {
    Found(UniversalOvercone),
    NotFound { witness: LimitWitness },
}

impl LimitResult {
    pub fn found(&self) -> Option<&UniversalOvercone> {
        match self {
            LimitResult::Found(u) => Some(u),
            LimitResult::NotFound { .. } => None,
        }
    }

    pub fn unwrap_found(&self) -> &UniversalOvercone {
        self.found().expect("limit not found")
    }
}

/// Mediators of `cone` through `candidate`: morphisms f with arity b such
/// that candidate ∘ Δ(f) = cone.
fn mediators<'a>(
    ov: &'a Overcategory,
    candidate: &Overcone,
    cone: &Overcone,
) -> Vec<&'a str> {
    ov.total
        .hom(&cone.apex, &candidate.apex)
        .into_iter()
        .filter(|f| ov.arity_mor(f) == cone.base_mor)
        .filter(|f| {
            candidate.components.iter().all(|(c, tau)| {
                ov.total.compose(tau, f) == Some(cone.components[c].as_str())
            })
        })
        .collect()
}

/// The overlimit of a fiberwise diagram, certified by exhaustive mediator
/// checks against every overcone. Among universal candidates the
/// canonically smallest cone is returned.
pub fn overlimit(ov: &Overcategory, diag: &OverDiagram) -> LimitResult {
    let cones = enumerate_overcones(ov, diag);
    let id_b = ov.base.identity_of(&diag.base_object).to_string();
    let mut failures = Vec::new();
    let mut saw_candidate = false;
    for candidate in cones.iter().filter(|c| c.base_mor == id_b) {
        saw_candidate = true;
        let mut failing = None;
        for cone in &cones {
            let meds = mediators(ov, candidate, cone);
            if meds.len() != 1 {
                failing = Some(CandidateFailure {
                    candidate: candidate.key(),
                    overcone: cone.key(),
                    mediators: meds.len(),
                });
                break;
            }
        }
        match failing {
            Some(f) => failures.push(f),
            None => {
                let mediator_table = cones
                    .iter()
                    .map(|cone| {
                        (cone.key(), mediators(ov, candidate, cone)[0].to_string())
                    })
                    .collect();
                return LimitResult::Found(UniversalOvercone {
                    cone: candidate.clone(),
                    mediator_table,
                    overcone_count: cones.len(),
                });
            }
        }
    }
    let witness = if saw_candidate {
        LimitWitness::CandidateFailures { failures }
    } else {
        LimitWitness::NoIdentityCone
    };
    LimitResult::NotFound { witness }
}

/// Independent re-verification of a claimed overlimit by full re-derivation.
pub fn verify_universal_overcone(
    ov: &Overcategory,
    diag: &OverDiagram,
    claimed: &UniversalOvercone,
) -> bool {
    let cones = enumerate_overcones(ov, diag);
    if cones.len() != claimed.overcone_count {
        return false;
    }
    if !ov.base.is_identity(&claimed.cone.base_mor) {
        return false;
    }
    if !cones.contains(&claimed.cone) {
        return false;
    }
    for cone in &cones {
        let meds = mediators(ov, &claimed.cone, cone);
        if meds.len() != 1 {
            return false;
        }
        if claimed.mediator_for(cone) != Some(meds[0]) {
            return false;
        }
    }
    true
}

/// Is this particular identity-base cone universal? Lighter than
/// `verify_universal_overcone`: no claimed mediator table required.
pub fn cone_is_universal(ov: &Overcategory, diag: &OverDiagram, cone: &Overcone) -> bool {
    if !ov.base.is_identity(&cone.base_mor) {
        return false;
    }
    let cones = enumerate_overcones(ov, diag);
    if !cones.contains(cone) {
        return false;
    }
    cones.iter().all(|c| mediators(ov, cone, c).len() == 1)
}

/// Is `e` a K-equalizer of (f, g): vertical, equalizing, and universally
/// factorizing?
pub fn is_k_equalizer_of(ov: &Overcategory, f: &str, g: &str, e: &str) -> bool {
    let t = &ov.total;
    if !ov.is_vertical(e)
        || t.dst(e) != t.src(f)
        || t.compose(f, e) != t.compose(g, e)
        || t.compose(f, e).is_none()
    {
        return false;
    }
    for m in t.hom_into(t.src(f)) {
        if t.compose(f, m) != t.compose(g, m) {
            continue;
        }
        let us: Vec<&str> = t
            .hom(t.src(m), t.src(e))
            .into_iter()
            .filter(|u| t.compose(e, u) == Some(m))
            .collect();
        if us.len() != 1 {
            return false;
        }
    }
    true
}

/// Dual computation: the overlimit in the opposite overcategory. Morphism
/// ids are shared between a category and its opposite, so the result reads
/// directly as an overcocone.
pub fn overcolimit(ov: &Overcategory, diag: &OverDiagram) -> LimitResult {
    overlimit(&ov.opposite(), &diag.dual())
}

/// An equalizer with identity arity and its factorization table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KEqualizer {
    pub object: String,
    pub morphism: String,
    /// equalizing morphism m -> the unique u with e ∘ u = m.
    pub factorizations: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum KEqualizerResult {
    Found(KEqualizer),
    NotFound,
}

impl KEqualizerResult {
    pub fn found(&self) -> Option<&KEqualizer> {
        match self {
            KEqualizerResult::Found(e) => Some(e),
            KEqualizerResult::NotFound => None,
        }
    }
}

/// K-equalizer of a parallel pair with equal arities: an identity-arity
/// morphism e with f ∘ e = g ∘ e through which every equalizing morphism
/// (of any arity) factors uniquely.
pub fn k_equalizer(ov: &Overcategory, f: &str, g: &str) -> Result<KEqualizerResult, LimitError> {
    let (src, _dst) = check_parallel(ov, f, g)?;
    let equalizing: Vec<&str> = ov
        .total
        .morphisms()
        .iter()
        .filter(|m| m.dst == src && ov.total.compose(f, &m.id) == ov.total.compose(g, &m.id))
        .map(|m| m.id.as_str())
        .collect();
    let mut candidates: Vec<&str> = equalizing
        .iter()
        .copied()
        .filter(|e| ov.is_vertical(e))
        .collect();
    candidates.sort_by_key(|e| (ov.total.src(e).to_string(), e.to_string()));
    'cand: for e in candidates {
        let e_src = ov.total.src(e);
        let mut factorizations = BTreeMap::new();
        for m in &equalizing {
            let us: Vec<&str> = ov
                .total
                .hom(ov.total.src(m), e_src)
                .into_iter()
                .filter(|u| ov.total.compose(e, u) == Some(m))
                .collect();
            if us.len() != 1 {
                continue 'cand;
            }
            factorizations.insert(m.to_string(), us[0].to_string());
        }
        return Ok(KEqualizerResult::Found(KEqualizer {
            object: e_src.to_string(),
            morphism: e.to_string(),
            factorizations,
        }));
    }
    Ok(KEqualizerResult::NotFound)
}

/// Dual: K-coequalizer, as the K-equalizer in the opposite.
pub fn k_coequalizer(ov: &Overcategory, f: &str, g: &str) -> Result<KEqualizerResult, LimitError> {
    k_equalizer(&ov.opposite(), f, g)
}

fn check_parallel<'a>(
    ov: &'a Overcategory,
    f: &str,
    g: &str,
) -> Result<(&'a str, &'a str), LimitError> {
    let fs = ov.total.src(f);
    let fd = ov.total.dst(f);
    if fs != ov.total.src(g) || fd != ov.total.dst(g) {
        return Err(LimitError::NotParallel {
            f: f.to_string(),
            g: g.to_string(),
        });
    }
    if ov.arity_mor(f) != ov.arity_mor(g) {
        return Err(LimitError::AritiesDiffer {
            f: f.to_string(),
            g: g.to_string(),
        });
    }
    Ok((fs, fd))
}

/// A fork f, g : a ⇉ x, h : x -> y with splittings s : y -> x, t : x -> a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitOverfork {
    pub f: String,
    pub g: String,
    pub h: String,
    pub s: String,
    pub t: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitForkVerdict {
    pub is_split: bool,
    pub is_overcoequalizer: bool,
    /// library overfunctor name -> image fork is still an overcoequalizer.
    pub preserved_by: BTreeMap<String, bool>,
}

/// Checks the split-fork equations, the overcoequalizer property of h, and
/// preservation under a finite overfunctor library (the finite surrogate
/// for "absolute").
pub fn check_split_overfork(
    ov: &Overcategory,
    fork: &SplitOverfork,
    library: &[(String, OverfunctorData)],
) -> Result<SplitForkVerdict, LimitError> {
    let all = [&fork.f, &fork.g, &fork.h, &fork.s, &fork.t];
    for m in all {
        if !ov.total.has_morphism(m) {
            return Err(LimitError::Over(OverError::UnknownTarget(m.to_string())));
        }
    }
    let fiber = ov.arity_obj(ov.total.src(&fork.f));
    for m in all {
        if !ov.is_vertical(m) || ov.arity_obj(ov.total.src(m)) != fiber {
            return Err(LimitError::NotInOneFiber);
        }
    }
    let t = &ov.total;
    let parallel = t.src(&fork.f) == t.src(&fork.g) && t.dst(&fork.f) == t.dst(&fork.g);
    let is_split = parallel
        && t.compose(&fork.h, &fork.f).is_some()
        && t.compose(&fork.h, &fork.f) == t.compose(&fork.h, &fork.g)
        && t.compose(&fork.h, &fork.s).map(|m| t.is_identity(m)) == Some(true)
        && t.compose(&fork.f, &fork.t).map(|m| t.is_identity(m)) == Some(true)
        && t.compose(&fork.g, &fork.t) == t.compose(&fork.s, &fork.h);
    let is_overcoequalizer =
        is_split && is_overcoequalizer_of(ov, &fork.f, &fork.g, &fork.h);
    let mut preserved_by = BTreeMap::new();
    if is_split {
        for (name, func) in library {
            let image = SplitOverfork {
                f: func.total_map.on_mor(&fork.f).to_string(),
                g: func.total_map.on_mor(&fork.g).to_string(),
                h: func.total_map.on_mor(&fork.h).to_string(),
                s: func.total_map.on_mor(&fork.s).to_string(),
                t: func.total_map.on_mor(&fork.t).to_string(),
            };
            preserved_by.insert(
                name.clone(),
                is_overcoequalizer_of(&func.cod, &image.f, &image.g, &image.h),
            );
        }
    }
    Ok(SplitForkVerdict {
        is_split,
        is_overcoequalizer,
        preserved_by,
    })
}

/// Is h an overcoequalizer of (f, g): h ∘ f = h ∘ g and every coequalizing
/// morphism of any arity factors uniquely through h.
pub fn is_overcoequalizer_of(ov: &Overcategory, f: &str, g: &str, h: &str) -> bool {
    let t = &ov.total;
    if t.compose(h, f).is_none() || t.compose(h, f) != t.compose(h, g) {
        return false;
    }
    let x = t.dst(f);
    for m in t.hom_from(x) {
        if t.compose(m, f) != t.compose(m, g) {
            continue;
        }
        let us: Vec<&str> = t
            .hom(t.dst(h), t.dst(m))
            .into_iter()
            .filter(|u| t.compose(u, h) == Some(m))
            .collect();
        if us.len() != 1 {
            return false;
        }
    }
    true
}

/// Build a discrete fiberwise diagram on given total objects (all in the
/// same fiber).
pub fn discrete_diagram(ov: &Overcategory, targets: &[&str]) -> Result<OverDiagram, OverError> {
    let shape = shapes::discrete(targets.len());
    let mut object_map = BTreeMap::new();
    let mut morphism_map = BTreeMap::new();
    for (i, x) in targets.iter().enumerate() {
        object_map.insert(format!("d{i}"), x.to_string());
        morphism_map.insert(format!("id_d{i}"), ov.total.identity_of(x).to_string());
    }
    let functor = FunctorData {
        dom: shape.clone(),
        cod: ov.total.clone(),
        object_map,
        morphism_map,
    };
    let base = if targets.is_empty() {
        ov.base.objects()[0].clone()
    } else {
        ov.arity_obj(targets[0]).to_string()
    };
    OverDiagram::new(ov, shape, functor, &base)
}

/// Build a parallel-pair fiberwise diagram from two parallel vertical
/// morphisms.
pub fn parallel_pair_diagram(
    ov: &Overcategory,
    f: &str,
    g: &str,
) -> Result<OverDiagram, OverError> {
    let shape = shapes::parallel_pair();
    let src = ov.total.src(f);
    let dst = ov.total.dst(f);
    let mut object_map = BTreeMap::new();
    object_map.insert("s".to_string(), src.to_string());
    object_map.insert("t".to_string(), dst.to_string());
    let mut morphism_map = BTreeMap::new();
    morphism_map.insert("id_s".to_string(), ov.total.identity_of(src).to_string());
    morphism_map.insert("id_t".to_string(), ov.total.identity_of(dst).to_string());
    morphism_map.insert("top".to_string(), f.to_string());
    morphism_map.insert("bot".to_string(), g.to_string());
    let functor = FunctorData {
        dom: shape.clone(),
        cod: ov.total.clone(),
        object_map,
        morphism_map,
    };
    let base = ov.arity_obj(src).to_string();
    OverDiagram::new(ov, shape, functor, &base)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeVerdict {
    pub shape: String,
    pub diagrams: usize,
    pub all_exist: bool,
    /// key of the first diagram without a universal overcone, if any.
    pub failing: Option<String>,
    pub budget_exceeded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceCheck {
    pub diagram: String,
    pub direct_exists: bool,
    pub constructed_exists: bool,
    pub apexes_isomorphic: bool,
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub limits: Vec<ShapeVerdict>,
    pub colimits: Vec<ShapeVerdict>,
    pub overcomplete: bool,
    pub overcocomplete: bool,
    pub equivalence_checks: Vec<EquivalenceCheck>,
    pub equivalence_dual_checks: Vec<EquivalenceCheck>,
    pub equivalence_holds: bool,
    pub equivalence_dual_holds: bool,
}

/// Per-shape overlimit/overcolimit existence plus the Prop 1.3/1.4
/// equivalence as a double computation: the product-and-equalizer
/// construction must agree with direct search on every connected-shape
/// diagram where the construction is applicable.
pub fn overcompleteness_report(ov: &Overcategory, budget: &Budget) -> CompletenessReport {
    let limits = shape_verdicts(ov, budget);
    let op = ov.opposite();
    let colimits = shape_verdicts(&op, budget);
    let overcomplete = limits.iter().all(|v| v.all_exist && !v.budget_exceeded);
    let overcocomplete = colimits.iter().all(|v| v.all_exist && !v.budget_exceeded);
    let checks = equivalence_checks(ov, budget);
    let dual_checks = equivalence_checks(&op, budget);
    let ok = |cs: &[EquivalenceCheck]| {
        cs.iter().all(|c| {
            c.skipped
                || (c.direct_exists == c.constructed_exists
                    && (!c.direct_exists || c.apexes_isomorphic))
        })
    };
    let equivalence_holds = ok(&checks);
    let equivalence_dual_holds = ok(&dual_checks);
    CompletenessReport {
        limits,
        colimits,
        overcomplete,
        overcocomplete,
        equivalence_checks: checks,
        equivalence_dual_checks: dual_checks,
        equivalence_holds,
        equivalence_dual_holds,
    }
}

fn shape_verdicts(ov: &Overcategory, budget: &Budget) -> Vec<ShapeVerdict> {
    let mut out = Vec::new();
    for (name, shape) in shapes::supported_shapes() {
        match enumerate_diagrams(ov, &shape, budget) {
            Err(_) => out.push(ShapeVerdict {
                shape: name.to_string(),
                diagrams: 0,
                all_exist: false,
                failing: None,
                budget_exceeded: true,
            }),
            Ok(diagrams) => {
                let mut failing = None;
                for d in &diagrams {
                    if overlimit(ov, d).found().is_none() {
                        failing = Some(d.key());
                        break;
                    }
                }
                out.push(ShapeVerdict {
                    shape: name.to_string(),
                    diagrams: diagrams.len(),
                    all_exist: failing.is_none(),
                    failing,
                    budget_exceeded: false,
                });
            }
        }
    }
    out
}

fn equivalence_checks(ov: &Overcategory, budget: &Budget) -> Vec<EquivalenceCheck> {
    let mut out = Vec::new();
    for shape_name in ["span", "cospan", "parallel-pair"] {
        let shape = shapes::by_name(shape_name).expect("known shape");
        let diagrams = match enumerate_diagrams(ov, &shape, budget) {
            Ok(d) => d,
            Err(_) => continue,
        };
        for d in diagrams {
            out.push(equivalence_check_for(ov, &d));
        }
    }
    out
}

/// Compare the direct overlimit of a connected diagram with the classical
/// construction: equalize the two canonical maps between the overproduct
/// of the objects and the overproduct over the non-identity arrows.
fn equivalence_check_for(ov: &Overcategory, diag: &OverDiagram) -> EquivalenceCheck {
    let direct = overlimit(ov, diag);
    let direct_exists = direct.found().is_some();
    let skipped_check = EquivalenceCheck {
        diagram: diag.key(),
        direct_exists,
        constructed_exists: false,
        apexes_isomorphic: false,
        skipped: true,
    };
    let obj_targets: Vec<&str> = diag
        .shape
        .objects()
        .iter()
        .map(|c| diag.functor.on_obj(c))
        .collect();
    let nonid: Vec<_> = diag
        .shape
        .morphisms()
        .iter()
        .filter(|m| !diag.shape.is_identity(&m.id))
        .cloned()
        .collect();
    let mor_targets: Vec<&str> = nonid.iter().map(|m| diag.functor.on_obj(&m.dst)).collect();
    let d1 = match discrete_diagram(ov, &obj_targets) {
        Ok(d) => d,
        Err(_) => return skipped_check,
    };
    let d2 = match discrete_diagram(ov, &mor_targets) {
        Ok(d) => d,
        Err(_) => return skipped_check,
    };
    let (p1, p2) = match (overlimit(ov, &d1).found().cloned(), overlimit(ov, &d2).found().cloned())
    {
        (Some(a), Some(b)) => (a, b),
        // Prop 1.3 presupposes overproducts; without them the
        // construction does not apply to this diagram.
        _ => return skipped_check,
    };
    // two cones from the first product onto the second product's diagram
    let obj_index = |c: &str| {
        diag.shape
            .objects()
            .iter()
            .position(|o| o == c)
            .expect("shape object")
    };
    let id_b = ov
        .base
        .identity_of(&diag.base_object)
        .to_string();
    let mk_cone = |components: Vec<String>| Overcone {
        apex: p1.cone.apex.clone(),
        base_mor: id_b.clone(),
        components: (0..components.len())
            .map(|i| (format!("d{i}"), components[i].clone()))
            .collect(),
    };
    let phi_components: Vec<String> = nonid
        .iter()
        .map(|s| p1.cone.components[&format!("d{}", obj_index(&s.dst))].clone())
        .collect();
    let psi_components: Vec<String> = nonid
        .iter()
        .map(|s| {
            ov.total
                .compose(
                    diag.functor.on_mor(&s.id),
                    &p1.cone.components[&format!("d{}", obj_index(&s.src))],
                )
                .expect("composable")
                .to_string()
        })
        .collect();
    let phi = match p2.mediator_for(&mk_cone(phi_components)) {
        Some(m) => m.to_string(),
        None => return skipped_check,
    };
    let psi = match p2.mediator_for(&mk_cone(psi_components)) {
        Some(m) => m.to_string(),
        None => return skipped_check,
    };
    let eq_diag = match parallel_pair_diagram(ov, &phi, &psi) {
        Ok(d) => d,
        Err(_) => return skipped_check,
    };
    let constructed = overlimit(ov, &eq_diag);
    let constructed_exists = constructed.found().is_some();
    let apexes_isomorphic = match (direct.found(), constructed.found()) {
        (Some(a), Some(b)) => vertical_iso_exists(ov, &a.cone.apex, &b.cone.apex),
        _ => false,
    };
    EquivalenceCheck {
        diagram: diag.key(),
        direct_exists,
        constructed_exists,
        apexes_isomorphic,
        skipped: false,
    }
}

/// Is there an identity-arity isomorphism a -> b?
pub fn vertical_iso_exists(ov: &Overcategory, a: &str, b: &str) -> bool {
    ov.total
        .hom(a, b)
        .into_iter()
        .any(|u| ov.is_vertical(u) && ov.total.is_iso(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn empty_diagram_at(ov: &Overcategory, b: &str) -> OverDiagram {
        let shape = shapes::empty();
        let functor = FunctorData {
            dom: shape.clone(),
            cod: ov.total.clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        };
        OverDiagram::new(ov, shape, functor, b).unwrap()
    }

    #[test]
    fn empty_overlimit_is_the_fiberwise_terminal() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let res = overlimit(&ov, &empty_diagram_at(&ov, &b));
        let uni = res.unwrap_found();
        // the terminal of FinSet is the one-element set
        assert!(uni.cone.apex.contains('1'));
        assert!(verify_universal_overcone(&ov, &empty_diagram_at(&ov, &b), uni));
    }

    #[test]
    fn empty_overcolimit_is_the_fiberwise_initial() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let diag = empty_diagram_at(&ov, &b);
        let res = overcolimit(&ov, &diag);
        let uni = res.unwrap_found();
        assert!(uni.cone.apex.contains('0'));
    }

    #[test]
    fn discrete_two_diagram_has_the_product_apex() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let one = fixtures::finset_obj_in_product(&ov, 1, &b);
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        let diag = discrete_diagram(&ov, &[&one, &two]).unwrap();
        let res = overlimit(&ov, &diag);
        let uni = res.unwrap_found();
        // 1 x 2 = 2
        assert_eq!(uni.cone.apex, two);
        assert!(verify_universal_overcone(&ov, &diag, uni));
    }

    #[test]
    fn discrete_two_diagram_has_the_coproduct_apex() {
        let ov = fixtures::finset_times_g(3);
        let b = ov.base.objects()[0].clone();
        let one = fixtures::finset_obj_in_product(&ov, 1, &b);
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        let diag = discrete_diagram(&ov, &[&one, &two]).unwrap();
        let res = overcolimit(&ov, &diag);
        let uni = res.unwrap_found();
        // 1 + 2 = 3
        let three = fixtures::finset_obj_in_product(&ov, 3, &b);
        assert_eq!(uni.cone.apex, three);
    }

    #[test]
    fn missing_product_is_reported_with_witness() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        // 2 x 2 = 4 does not exist in FinSet truncated at 2
        let diag = discrete_diagram(&ov, &[&two, &two]).unwrap();
        match overlimit(&ov, &diag) {
            LimitResult::NotFound { .. } => {}
            LimitResult::Found(_) => panic!("no product should exist"),
        }
    }

    #[test]
    fn identity_parallel_pair_limit_is_the_source() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let one = fixtures::finset_obj_in_product(&ov, 1, &b);
        let id = ov.total.identity_of(&one).to_string();
        let diag = parallel_pair_diagram(&ov, &id, &id).unwrap();
        let uni = overlimit(&ov, &diag);
        assert_eq!(uni.unwrap_found().cone.apex, one);
    }

    #[test]
    fn k_equalizer_of_equal_pair_is_identity_iso() {
        let ov = fixtures::finset_times_g(2);
        let f = ov
            .total
            .morphisms()
            .iter()
            .find(|m| ov.is_vertical(&m.id) && !ov.total.is_identity(&m.id))
            .unwrap()
            .id
            .clone();
        let res = k_equalizer(&ov, &f, &f).unwrap();
        let eq = res.found().expect("equalizer of equal pair");
        assert!(ov.total.is_iso(&eq.morphism));
        assert!(ov.is_vertical(&eq.morphism));
        assert_eq!(ov.total.dst(&eq.morphism), ov.total.src(&f));
    }

    #[test]
    fn k_equalizer_of_id_and_swap_is_empty() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        let id = ov.total.identity_of(&two).to_string();
        let swap = fixtures::swap_in_product(&ov, &b);
        let res = k_equalizer(&ov, &id, &swap).unwrap();
        let eq = res.found().expect("equalizer");
        let zero = fixtures::finset_obj_in_product(&ov, 0, &b);
        assert_eq!(eq.object, zero);
    }

    #[test]
    fn k_coequalizer_of_id_and_swap_is_a_point() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        let id = ov.total.identity_of(&two).to_string();
        let swap = fixtures::swap_in_product(&ov, &b);
        let res = k_coequalizer(&ov, &id, &swap).unwrap();
        let coeq = res.found().expect("coequalizer");
        let one = fixtures::finset_obj_in_product(&ov, 1, &b);
        assert_eq!(coeq.object, one);
    }

    #[test]
    fn mismatched_arities_error() {
        let ov = fixtures::finset_times_g(2);
        let vertical = ov
            .total
            .morphisms()
            .iter()
            .find(|m| ov.is_vertical(&m.id) && !ov.total.is_identity(&m.id))
            .unwrap();
        let slanted = ov.total.morphisms().iter().find(|m| {
            m.src == vertical.src && m.dst == vertical.dst && !ov.is_vertical(&m.id)
        });
        if let Some(sl) = slanted {
            let err = k_equalizer(&ov, &vertical.id, &sl.id).unwrap_err();
            assert!(matches!(err, LimitError::AritiesDiffer { .. }));
        }
    }

    #[test]
    fn trivial_fork_is_split_and_overcoequalizer() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let one = fixtures::finset_obj_in_product(&ov, 1, &b);
        let id = ov.total.identity_of(&one).to_string();
        let fork = SplitOverfork {
            f: id.clone(),
            g: id.clone(),
            h: id.clone(),
            s: id.clone(),
            t: id.clone(),
        };
        let verdict = check_split_overfork(&ov, &fork, &[]).unwrap();
        assert!(verdict.is_split);
        assert!(verdict.is_overcoequalizer);
    }

    #[test]
    fn broken_fork_is_not_split() {
        let ov = fixtures::finset_times_g(2);
        let b = ov.base.objects()[0].clone();
        let two = fixtures::finset_obj_in_product(&ov, 2, &b);
        let id = ov.total.identity_of(&two).to_string();
        let swap = fixtures::swap_in_product(&ov, &b);
        // h = id does not coequalize (id, swap)
        let fork = SplitOverfork {
            f: id.clone(),
            g: swap.clone(),
            h: id.clone(),
            s: id.clone(),
            t: id.clone(),
        };
        let verdict = check_split_overfork(&ov, &fork, &[]).unwrap();
        assert!(!verdict.is_split);
    }

    #[test]
    fn idempotent_split_forks_are_overcoequalizers() {
        let ov = fixtures::finset_times_g(2);
        let forks = fixtures::split_forks_from_idempotents(&ov);
        assert!(!forks.is_empty());
        for fork in &forks {
            let verdict = check_split_overfork(&ov, fork, &[]).unwrap();
            assert!(verdict.is_split, "fork {fork:?} not split");
            assert!(verdict.is_overcoequalizer, "fork {fork:?} not overcoeq");
        }
    }

    #[test]
    fn lattice_fixture_is_overcomplete_and_the_equivalence_holds() {
        let ov = fixtures::lattice_times_g();
        let report = overcompleteness_report(&ov, &Budget::default());
        assert!(report.overcomplete, "limits: {:?}", report.limits);
        assert!(report.overcocomplete, "colimits: {:?}", report.colimits);
        assert!(report.equivalence_holds);
        assert!(report.equivalence_dual_holds);
    }

    #[test]
    fn missing_products_pinpoint_the_discrete_shape() {
        let ov = fixtures::finset_times_g(2);
        let report = overcompleteness_report(&ov, &Budget::default());
        assert!(!report.overcomplete);
        let discrete2 = report
            .limits
            .iter()
            .find(|v| v.shape == "discrete-2")
            .unwrap();
        assert!(!discrete2.all_exist);
        assert!(discrete2.failing.is_some());
    }

    #[test]
    fn duality_overcolimit_equals_opposite_overlimit() {
        let ov = fixtures::lattice_times_g();
        let b = ov.base.objects()[0].clone();
        let diag = empty_diagram_at(&ov, &b);
        let via_dual = overcolimit(&ov, &diag);
        let direct = overlimit(&ov.opposite(), &diag.dual());
        assert_eq!(via_dual, direct);
    }
}
