//! Overmonads, over-Eilenberg-Moore overcategories, the canonical
//! overadjunction, comparison overfunctor, and the Beck monadicity
//! verdict.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::comma::{has_k_equalizers, Adjunction};
use crate::fincat::{pair_id, FinCat, MorRec, SEP_AT, SEP_TO};
use crate::functor::{FunctorData, NatTransData};
use crate::limits::{
    check_split_overfork, is_overcoequalizer_of, overcompleteness_report, SplitOverfork,
};
use crate::overcat::{Budget, Overcategory, OverError, OverfunctorData};

#[derive(Debug, Error)]
pub enum MonadError {
    #[error("invalid overmonad: {0}")]
    Invalid(String),
    #[error("invalid adjunction: {0}")]
    InvalidAdjunction(String),
    #[error(transparent)]
    Over(#[from] OverError),
}

/// An overmonad: an endo overfunctor over the identity base with vertical
/// unit and multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overmonad {
    pub t: OverfunctorData,
    pub eta: NatTransData,
    pub mu: NatTransData,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MonadReport {
    pub issues: Vec<String>,
}

impl MonadReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl Overmonad {
    pub fn identity(ov: &Overcategory) -> Overmonad {
        let idf = FunctorData::identity(&ov.total);
        Overmonad {
            t: OverfunctorData::identity(ov),
            eta: NatTransData::identity(&idf),
            mu: NatTransData::identity(&idf),
        }
    }

    pub fn overcategory(&self) -> &Overcategory {
        &self.t.dom
    }

    /// All overmonad invariants: endo over the identity base, lawful
    /// functor, vertical natural unit/multiplication, monad laws.
    pub fn validate(&self) -> MonadReport {
        let mut issues = Vec::new();
        let ov = self.overcategory();
        if self.t.dom != self.t.cod {
            issues.push("T is not an endo overfunctor".to_string());
        }
        if !self.t.same_base() {
            issues.push("T does not live over the identity base".to_string());
        }
        if let Err(e) = self.t.validate() {
            issues.push(format!("T: {e}"));
        }
        let t = &self.t.total_map;
        for (name, nt) in [("eta", &self.eta), ("mu", &self.mu)] {
            if let Err(e) = nt.check_well_formed() {
                issues.push(format!("{name}: {e}"));
                continue;
            }
            let rep = nt.validate();
            if !rep.is_valid() {
                issues.push(format!("{name}: {rep}"));
            }
            for (o, c) in &nt.components {
                if !ov.is_vertical(c) {
                    issues.push(format!("{name} component at {o} is not vertical"));
                }
            }
        }
        if !self
            .eta
            .dom_functor
            .same_maps(&FunctorData::identity(&ov.total))
            || !self.eta.cod_functor.same_maps(t)
        {
            issues.push("eta is not Id => T".to_string());
        }
        if !self.mu.dom_functor.same_maps(&t.then(t)) || !self.mu.cod_functor.same_maps(t) {
            issues.push("mu is not T^2 => T".to_string());
        }
        if !issues.is_empty() {
            return MonadReport { issues };
        }
        let cat = &ov.total;
        for x in cat.objects() {
            let tx = t.on_obj(x);
            let mu_x = self.mu.component(x);
            // unit laws
            let left = cat.compose(mu_x, self.eta.component(tx));
            if left.map(|m| cat.is_identity(m)) != Some(true) {
                issues.push(format!("unit law mu.etaT fails at {x}"));
            }
            let right = cat.compose(mu_x, t.on_mor(self.eta.component(x)));
            if right.map(|m| cat.is_identity(m)) != Some(true) {
                issues.push(format!("unit law mu.Teta fails at {x}"));
            }
            // associativity
            let lhs = cat.compose(mu_x, self.mu.component(tx));
            let rhs = cat.compose(mu_x, t.on_mor(mu_x));
            if lhs.is_none() || lhs != rhs {
                issues.push(format!("associativity fails at {x}"));
            }
        }
        MonadReport { issues }
    }
}

/// An overalgebra (x, h) with h : T x -> x vertical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Overalgebra {
    pub carrier: String,
    pub structure: String,
}

impl Overalgebra {
    pub fn id(&self) -> String {
        pair_id(&self.carrier, &self.structure)
    }
}

/// All overalgebras of the monad, in canonical order.
pub fn overalgebras(m: &Overmonad) -> Vec<Overalgebra> {
    let ov = m.overcategory();
    let cat = &ov.total;
    let t = &m.t.total_map;
    let mut out = Vec::new();
    for x in cat.objects() {
        for h in cat.hom(t.on_obj(x), x) {
            if !ov.is_vertical(h) {
                continue;
            }
            if cat.compose(h, m.eta.component(x)).map(|m| cat.is_identity(m)) != Some(true) {
                continue;
            }
            if cat.compose(h, t.on_mor(h)) != cat.compose(h, m.mu.component(x)) {
                continue;
            }
            out.push(Overalgebra {
                carrier: x.clone(),
                structure: h.to_string(),
            });
        }
    }
    out.sort();
    out
}

/// The over-Eilenberg-Moore overcategory with its canonical adjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EilenbergMoore {
    pub overcategory: Overcategory,
    /// forgetful G^T : E^T -> E.
    pub forgetful: OverfunctorData,
    /// free F^T : E -> E^T.
    pub free: OverfunctorData,
    pub adjunction: Adjunction,
}

fn em_mor_id(f: &str, src: &str, dst: &str) -> String {
    format!("{f}{SEP_AT}{src}{SEP_TO}{dst}")
}

/// Builds E^T: objects are overalgebras, morphisms are carrier morphisms
/// commuting with the structures.
pub fn eilenberg_moore(m: &Overmonad) -> Result<EilenbergMoore, MonadError> {
    let ov = m.overcategory();
    let cat = &ov.total;
    let t = &m.t.total_map;
    let algebras = overalgebras(m);
    let mut objects = Vec::new();
    let mut arity_obj = BTreeMap::new();
    for a in &algebras {
        let id = a.id();
        arity_obj.insert(id.clone(), ov.arity_obj(&a.carrier).to_string());
        objects.push(id);
    }
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut arity_mor = BTreeMap::new();
    let mut carrier_of: BTreeMap<String, String> = BTreeMap::new();
    for a in &algebras {
        for b in &algebras {
            for f in cat.hom(&a.carrier, &b.carrier) {
                if cat.compose(f, &a.structure) != cat.compose(&b.structure, t.on_mor(f)) {
                    continue;
                }
                let id = em_mor_id(f, &a.id(), &b.id());
                morphisms.push(MorRec {
                    id: id.clone(),
                    src: a.id(),
                    dst: b.id(),
                });
                arity_mor.insert(id.clone(), ov.arity_mor(f).to_string());
                carrier_of.insert(id.clone(), f.to_string());
                if a == b && cat.is_identity(f) {
                    identity.insert(a.id(), id);
                }
            }
        }
    }
    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.dst == m2.src {
                let f = cat
                    .compose(&carrier_of[&m2.id], &carrier_of[&m1.id])
                    .expect("composable");
                compose.insert(
                    (m2.id.clone(), m1.id.clone()),
                    em_mor_id(f, &m1.src, &m2.dst),
                );
            }
        }
    }
    let total = FinCat::from_parts(objects, morphisms, identity, compose)
        .map_err(|e| MonadError::Invalid(e.to_string()))?;
    let arity = FunctorData {
        dom: total.clone(),
        cod: ov.base.clone(),
        object_map: arity_obj,
        morphism_map: arity_mor,
    };
    let em_ov = Overcategory::new(total.clone(), ov.base.clone(), arity)?;
    let forgetful = OverfunctorData {
        dom: em_ov.clone(),
        cod: ov.clone(),
        total_map: FunctorData {
            dom: total.clone(),
            cod: cat.clone(),
            object_map: algebras.iter().map(|a| (a.id(), a.carrier.clone())).collect(),
            morphism_map: carrier_of.clone(),
        },
        base_map: FunctorData::identity(&ov.base),
    };
    // free algebra on x is (T x, mu_x)
    let free_obj = |x: &str| pair_id(t.on_obj(x), m.mu.component(x));
    let mut free_mor = BTreeMap::new();
    for f in cat.morphisms() {
        free_mor.insert(
            f.id.clone(),
            em_mor_id(t.on_mor(&f.id), &free_obj(&f.src), &free_obj(&f.dst)),
        );
    }
    let free = OverfunctorData {
        dom: ov.clone(),
        cod: em_ov.clone(),
        total_map: FunctorData {
            dom: cat.clone(),
            cod: total.clone(),
            object_map: cat.objects().iter().map(|x| (x.clone(), free_obj(x))).collect(),
            morphism_map: free_mor,
        },
        base_map: FunctorData::identity(&ov.base),
    };
    let unit = NatTransData {
        dom_functor: FunctorData::identity(cat),
        cod_functor: free.total_map.then(&forgetful.total_map),
        components: m.eta.components.clone(),
    };
    let counit_components: BTreeMap<String, String> = algebras
        .iter()
        .map(|a| {
            (
                a.id(),
                em_mor_id(&a.structure, &free_obj(&a.carrier), &a.id()),
            )
        })
        .collect();
    let counit = NatTransData {
        dom_functor: forgetful.total_map.then(&free.total_map),
        cod_functor: FunctorData::identity(&total),
        components: counit_components,
    };
    let adjunction = Adjunction {
        left: free.clone(),
        right: forgetful.clone(),
        unit,
        counit,
    };
    adjunction
        .validate()
        .map_err(|e| MonadError::Invalid(format!("EM adjunction: {e}")))?;
    Ok(EilenbergMoore {
        overcategory: em_ov,
        forgetful,
        free,
        adjunction,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmReport {
    /// every overalgebra arises as the canonical overcoequalizer of free
    /// algebras (Prop 1.2).
    pub presentations_ok: bool,
    pub presentation_failing: Option<String>,
    pub base_overcomplete: bool,
    pub base_k_equalizers: bool,
    pub em_overcomplete: bool,
    pub em_k_equalizers: bool,
    pub em_overcocomplete: bool,
    pub em_has_overcoequalizers: bool,
    /// Prop 2.1/2.2 inheritance: base completeness carries to E^T.
    pub inheritance_ok: bool,
    /// Prop 2.3: overcoequalizers alone already give overcocompleteness.
    pub prop23_equivalence: bool,
}

/// Verifies Props 1.2, 2.1, 2.2, 2.3 on the finite instance, in budget.
pub fn em_property_suite(m: &Overmonad, budget: &Budget) -> Result<EmReport, MonadError> {
    let ov = m.overcategory();
    let em = eilenberg_moore(m)?;
    let em_ov = &em.overcategory;
    let t = &m.t.total_map;
    let free_obj = |x: &str| pair_id(t.on_obj(x), m.mu.component(x));
    let mut presentations_ok = true;
    let mut presentation_failing = None;
    for a in overalgebras(m) {
        // the canonical fork F^T(T x) => F^T(x) -> (x, h) with mu_x and T h
        let x = &a.carrier;
        let tx = t.on_obj(x);
        let f = em_mor_id(m.mu.component(x), &free_obj(tx), &free_obj(x));
        let g = em_mor_id(t.on_mor(&a.structure), &free_obj(tx), &free_obj(x));
        let h = em_mor_id(&a.structure, &free_obj(x), &a.id());
        if !is_overcoequalizer_of(em_ov, &f, &g, &h) {
            presentations_ok = false;
            presentation_failing = Some(a.id());
            break;
        }
    }
    let base_report = overcompleteness_report(ov, budget);
    let em_report = overcompleteness_report(em_ov, budget);
    let base_k = has_k_equalizers(ov);
    let em_k = has_k_equalizers(em_ov);
    let em_has_overcoequalizers = em_report
        .colimits
        .iter()
        .find(|v| v.shape == "parallel-pair")
        .map(|v| v.all_exist)
        .unwrap_or(false);
    let inheritance_ok = (!base_report.overcomplete || em_report.overcomplete)
        && (!base_k || em_k);
    let prop23_equivalence = em_has_overcoequalizers == em_report.overcocomplete;
    Ok(EmReport {
        presentations_ok,
        presentation_failing,
        base_overcomplete: base_report.overcomplete,
        base_k_equalizers: base_k,
        em_overcomplete: em_report.overcomplete,
        em_k_equalizers: em_k,
        em_overcocomplete: em_report.overcocomplete,
        em_has_overcoequalizers,
        inheritance_ok,
        prop23_equivalence,
    })
}

/// The overmonad generated by an overadjunction: T = G L, eta = unit,
/// mu = G eps L.
pub fn overmonad_from_overadjunction(adj: &Adjunction) -> Result<Overmonad, MonadError> {
    adj.validate()
        .map_err(|e| MonadError::InvalidAdjunction(e.to_string()))?;
    let l = &adj.left.total_map;
    let g = &adj.right.total_map;
    let t_total = l.then(g);
    let t = OverfunctorData {
        dom: adj.left.dom.clone(),
        cod: adj.left.dom.clone(),
        total_map: t_total.clone(),
        base_map: FunctorData::identity(&adj.left.dom.base),
    };
    let mu_components: BTreeMap<String, String> = adj
        .left
        .dom
        .total
        .objects()
        .iter()
        .map(|b| {
            (
                b.clone(),
                g.on_mor(adj.counit.component(l.on_obj(b))).to_string(),
            )
        })
        .collect();
    let monad = Overmonad {
        t,
        eta: adj.unit.clone(),
        mu: NatTransData {
            dom_functor: t_total.then(&t_total),
            cod_functor: t_total,
            components: mu_components,
        },
    };
    let report = monad.validate();
    if !report.is_valid() {
        return Err(MonadError::Invalid(report.issues.join("; ")));
    }
    Ok(monad)
}

/// The comparison K : A -> E^T with G^T K = G and K L = F^T, both
/// verified as table equalities.
pub fn comparison_overfunctor(
    adj: &Adjunction,
    em: &EilenbergMoore,
) -> Result<OverfunctorData, MonadError> {
    let g = &adj.right.total_map;
    let acat = &adj.right.dom.total;
    let mut object_map = BTreeMap::new();
    for a in acat.objects() {
        let carrier = g.on_obj(a).to_string();
        let structure = g.on_mor(adj.counit.component(a)).to_string();
        object_map.insert(a.clone(), pair_id(&carrier, &structure));
    }
    let mut morphism_map = BTreeMap::new();
    for f in acat.morphisms() {
        morphism_map.insert(
            f.id.clone(),
            em_mor_id(g.on_mor(&f.id), &object_map[&f.src], &object_map[&f.dst]),
        );
    }
    let k = OverfunctorData {
        dom: adj.right.dom.clone(),
        cod: em.overcategory.clone(),
        total_map: FunctorData {
            dom: acat.clone(),
            cod: em.overcategory.total.clone(),
            object_map,
            morphism_map,
        },
        base_map: FunctorData::identity(&adj.right.dom.base),
    };
    k.validate()?;
    if !k
        .total_map
        .then(&em.forgetful.total_map)
        .same_maps(g)
    {
        return Err(MonadError::Invalid("G^T K != G".into()));
    }
    if !adj
        .left
        .total_map
        .then(&k.total_map)
        .same_maps(&em.free.total_map)
    {
        return Err(MonadError::Invalid("K L != F^T".into()));
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeckVerdict {
    pub strictly_monadic: bool,
    /// condition (1): K a strict isomorphism.
    pub k_iso: bool,
    /// condition (3): G creates overcoequalizers of pairs whose image has
    /// a split overcoequalizer.
    pub creation_ok: bool,
    pub pairs_checked: usize,
    pub agreement: bool,
    pub witness: Option<String>,
    pub note: Option<String>,
}

/// Beck's theorem as a strict verdict: compute conditions (1) and (3)
/// independently and report both plus their agreement.
pub fn beck_verdict(adj: &Adjunction) -> Result<BeckVerdict, MonadError> {
    let monad = overmonad_from_overadjunction(adj)?;
    let em = eilenberg_moore(&monad)?;
    let k = comparison_overfunctor(adj, &em)?;
    let k_iso = k.total_map.strict_inverse().is_some();
    let g = &adj.right.total_map;
    let aov = &adj.right.dom;
    let bov = &adj.right.cod;
    let acat = &aov.total;
    let mut creation_ok = true;
    let mut pairs_checked = 0usize;
    let mut witness = None;
    'pairs: for (f, gm) in acat.parallel_pairs() {
        let gf = g.on_mor(&f).to_string();
        let gg = g.on_mor(&gm).to_string();
        if !bov.is_vertical(&gf) || !bov.is_vertical(&gg) {
            continue;
        }
        let split = find_split_overcoequalizer(bov, &gf, &gg);
        let Some(h) = split else { continue };
        pairs_checked += 1;
        // strict creation: exactly one coequalizing lift of h, itself an
        // overcoequalizer of (f, gm)
        let lifts: Vec<&str> = acat
            .hom_from(acat.dst(&f))
            .into_iter()
            .filter(|m| g.on_mor(m) == h)
            .filter(|m| acat.compose(m, &f) == acat.compose(m, &gm))
            .collect();
        if lifts.len() != 1 || !is_overcoequalizer_of(aov, &f, &gm, lifts[0]) {
            creation_ok = false;
            witness = Some(format!(
                "pair ({f}|{gm}): {} coequalizing lifts of {h}",
                lifts.len()
            ));
            break 'pairs;
        }
    }
    if !k_iso && witness.is_none() {
        witness = Some("comparison overfunctor is not strictly invertible".to_string());
    }
    let agreement = k_iso == creation_ok;
    let note = if !k_iso {
        Some("K fails strict invertibility; equivalence-but-not-iso also reports false".to_string())
    } else {
        None
    };
    Ok(BeckVerdict {
        strictly_monadic: k_iso,
        k_iso,
        creation_ok,
        pairs_checked,
        agreement,
        witness,
        note,
    })
}

/// Search for a split overcoequalizer of a vertical parallel pair:
/// some h with splittings s, t satisfying the split-fork equations.
pub fn find_split_overcoequalizer(ov: &Overcategory, f: &str, g: &str) -> Option<String> {
    let cat = &ov.total;
    let a = cat.src(f);
    let x = cat.dst(f);
    for h in cat.hom_from(x) {
        if !ov.is_vertical(h) {
            continue;
        }
        for s in cat.hom(cat.dst(h), x) {
            if !ov.is_vertical(s) {
                continue;
            }
            for t in cat.hom(x, a) {
                if !ov.is_vertical(t) {
                    continue;
                }
                let fork = SplitOverfork {
                    f: f.to_string(),
                    g: g.to_string(),
                    h: h.to_string(),
                    s: s.to_string(),
                    t: t.to_string(),
                };
                if let Ok(v) = check_split_overfork(ov, &fork, &[]) {
                    if v.is_split {
                        return Some(h.to_string());
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_monad_is_valid() {
        let ov = fixtures::poset_over_terminal(2);
        let m = Overmonad::identity(&ov);
        assert!(m.validate().is_valid());
    }

    #[test]
    fn top_closure_monad_is_valid() {
        let m = fixtures::top_closure_overmonad();
        let rep = m.validate();
        assert!(rep.is_valid(), "{:?}", rep.issues);
    }

    #[test]
    fn broken_mu_reports_a_law() {
        let mut m = fixtures::top_closure_overmonad();
        // break the unit law by redirecting the component at the top
        let bad = m
            .t
            .dom
            .total
            .hom("1", "1")
            .first()
            .copied()
            .unwrap()
            .to_string();
        m.mu.components.insert("0".to_string(), bad);
        assert!(!m.validate().is_valid());
    }

    #[test]
    fn identity_monad_em_recovers_the_total() {
        let ov = fixtures::poset_over_terminal(2);
        let m = Overmonad::identity(&ov);
        let em = eilenberg_moore(&m).unwrap();
        assert_eq!(
            em.overcategory.total.objects().len(),
            ov.total.objects().len()
        );
        assert_eq!(
            em.overcategory.total.morphisms().len(),
            ov.total.morphisms().len()
        );
    }

    #[test]
    fn top_closure_has_one_algebra_with_carrier_top() {
        let m = fixtures::top_closure_overmonad();
        let algs = overalgebras(&m);
        assert_eq!(algs.len(), 1);
        assert_eq!(algs[0].carrier, "1");
    }

    #[test]
    fn free_algebras_are_algebras() {
        let m = fixtures::top_closure_overmonad();
        let t = &m.t.total_map;
        let algs = overalgebras(&m);
        for x in m.overcategory().total.objects() {
            let free = Overalgebra {
                carrier: t.on_obj(x).to_string(),
                structure: m.mu.component(x).to_string(),
            };
            assert!(algs.contains(&free), "free algebra on {x} missing");
        }
    }

    #[test]
    fn em_suite_passes_for_top_closure() {
        let m = fixtures::top_closure_overmonad();
        let rep = em_property_suite(&m, &Budget::default()).unwrap();
        assert!(rep.presentations_ok, "{rep:?}");
        assert!(rep.inheritance_ok, "{rep:?}");
        assert!(rep.prop23_equivalence, "{rep:?}");
    }

    #[test]
    fn em_suite_passes_for_identity_on_lattice() {
        let ov = fixtures::lattice_times_g();
        let m = Overmonad::identity(&ov);
        let rep = em_property_suite(&m, &Budget::default()).unwrap();
        assert!(rep.presentations_ok);
        assert!(rep.base_overcomplete);
        assert!(rep.em_overcomplete, "{rep:?}");
        assert!(rep.inheritance_ok);
    }

    #[test]
    fn em_adjunction_regenerates_the_monad() {
        let m = fixtures::top_closure_overmonad();
        let em = eilenberg_moore(&m).unwrap();
        let regenerated = overmonad_from_overadjunction(&em.adjunction).unwrap();
        assert!(regenerated.t.total_map.same_maps(&m.t.total_map));
        assert_eq!(regenerated.eta.components, m.eta.components);
        assert_eq!(regenerated.mu.components, m.mu.components);
    }

    #[test]
    fn reflection_adjunction_gives_idempotent_round_up_monad() {
        let f = fixtures::poset_reflection_overfunctor();
        let res = crate::comma::synthesize_left_overadjoint(&f, &Budget::default()).unwrap();
        let adj = res.found().expect("adjoint").clone();
        let m = overmonad_from_overadjunction(&adj).unwrap();
        // T rounds h up to 1 and fixes 0 and 1
        assert_eq!(m.t.total_map.on_obj("0"), "0");
        assert_eq!(m.t.total_map.on_obj("h"), "1");
        assert_eq!(m.t.total_map.on_obj("1"), "1");
        // idempotent: T^2 = T
        let t = &m.t.total_map;
        assert!(t.then(t).same_maps(t));
    }

    #[test]
    fn identity_adjunction_is_strictly_monadic() {
        let ov = fixtures::poset_over_terminal(2);
        let m = Overmonad::identity(&ov);
        let em = eilenberg_moore(&m).unwrap();
        let verdict = beck_verdict(&em.adjunction).unwrap();
        assert!(verdict.strictly_monadic, "{verdict:?}");
        assert!(verdict.agreement);
    }

    #[test]
    fn em_adjunction_of_top_closure_is_strictly_monadic() {
        let m = fixtures::top_closure_overmonad();
        let em = eilenberg_moore(&m).unwrap();
        let verdict = beck_verdict(&em.adjunction).unwrap();
        assert!(verdict.strictly_monadic, "{verdict:?}");
        assert!(verdict.agreement);
    }

    #[test]
    fn kleisli_adjunction_is_not_strictly_monadic() {
        let adj = fixtures::kleisli_top_closure_adjunction();
        let verdict = beck_verdict(&adj).unwrap();
        assert!(!verdict.strictly_monadic, "{verdict:?}");
        assert!(verdict.agreement, "{verdict:?}");
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn comparison_commutes_with_both_legs() {
        let m = fixtures::top_closure_overmonad();
        let em = eilenberg_moore(&m).unwrap();
        // comparison for the EM adjunction itself is the identity on E^T
        let k = comparison_overfunctor(&em.adjunction, &em).unwrap();
        assert!(k
            .total_map
            .same_maps(&FunctorData::identity(&em.overcategory.total)));
    }
}
