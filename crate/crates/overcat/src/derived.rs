//! Derived categories: coslice, slice, pullback (kernel pair), product.
//!
//! All generated ids are canonical compositions of the source ids, so two
//! independently derived categories are comparable by table equality.

use std::collections::BTreeMap;

use crate::fincat::{pair_id, CatError, FinCat, MorRec, SEP_AT};
use crate::functor::FunctorData;

/// The coslice `g/C`: objects are morphisms out of `g`, arrows are
/// commuting triangles. Returns the category together with the projection
/// functor sending `(g -> x)` to `x`.
pub fn coslice(cat: &FinCat, g: &str) -> Result<(FinCat, FunctorData), CatError> {
    if !cat.has_object(g) {
        return Err(CatError::UnknownObject(g.to_string()));
    }
    let objects: Vec<String> = cat.hom_from(g).into_iter().map(|m| m.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut compose = BTreeMap::new();
    let mut proj_obj = BTreeMap::new();
    let mut proj_mor = BTreeMap::new();
    // a triangle u : f -> f' exists exactly when u ∘ f = f'; its id is
    // "u@f" (the codomain is determined by the composite).
    let tri_id = |u: &str, f: &str| format!("{u}{SEP_AT}{f}");
    for f in &objects {
        let x = cat.dst(f);
        proj_obj.insert(f.clone(), x.to_string());
        for u in cat.hom_from(x) {
            let f2 = cat.compose(u, f).expect("composable by construction");
            let id = tri_id(u, f);
            morphisms.push(MorRec {
                id: id.clone(),
                src: f.clone(),
                dst: f2.to_string(),
            });
            proj_mor.insert(id.clone(), u.to_string());
            if cat.is_identity(u) {
                identity.insert(f.clone(), id);
            }
        }
    }
    for f in &objects {
        let x = cat.dst(f);
        for u in cat.hom_from(x) {
            let f2 = cat.compose(u, f).unwrap().to_string();
            for v in cat.hom_from(cat.dst(&f2)) {
                let vu = cat.compose(v, u).expect("composable");
                compose.insert((tri_id(v, &f2), tri_id(u, f)), tri_id(vu, f));
            }
        }
    }
    let slice = FinCat::from_parts(objects, morphisms, identity, compose)?;
    let projection = FunctorData {
        dom: slice.clone(),
        cod: cat.clone(),
        object_map: proj_obj,
        morphism_map: proj_mor,
    };
    Ok((slice, projection))
}

/// The slice `C/c`: objects are morphisms into `c`. Computed directly (not
/// through the opposite) so the generated ids stay readable: a morphism
/// u : f -> f' exists when f' ∘ u = f and is named "u@f".
pub fn slice_at(cat: &FinCat, c: &str) -> Result<(FinCat, FunctorData), CatError> {
    if !cat.has_object(c) {
        return Err(CatError::UnknownObject(c.to_string()));
    }
    let objects: Vec<String> = cat.hom_into(c).into_iter().map(|m| m.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut compose = BTreeMap::new();
    let mut proj_obj = BTreeMap::new();
    let mut proj_mor = BTreeMap::new();
    let tri_id = |u: &str, f: &str| format!("{u}{SEP_AT}{f}");
    for f in &objects {
        let x = cat.src(f);
        proj_obj.insert(f.clone(), x.to_string());
        for f2 in &objects {
            let y = cat.src(f2);
            for u in cat.hom(x, y) {
                if cat.compose(f2, u) == Some(f.as_str()) {
                    let id = tri_id(u, f);
                    morphisms.push(MorRec {
                        id: id.clone(),
                        src: f.clone(),
                        dst: f2.clone(),
                    });
                    proj_mor.insert(id.clone(), u.to_string());
                    if cat.is_identity(u) && f == f2 {
                        identity.insert(f.clone(), id);
                    }
                }
            }
        }
    }
    for m1 in morphisms.clone() {
        for m2 in morphisms.clone() {
            if m1.dst == m2.src {
                let u1 = &proj_mor[&m1.id];
                let u2 = &proj_mor[&m2.id];
                let u = cat.compose(u2, u1).expect("composable");
                compose.insert((m2.id.clone(), m1.id.clone()), tri_id(u, &m1.src));
            }
        }
    }
    let slice = FinCat::from_parts(objects, morphisms, identity, compose)?;
    let projection = FunctorData {
        dom: slice.clone(),
        cod: cat.clone(),
        object_map: proj_obj,
        morphism_map: proj_mor,
    };
    Ok((slice, projection))
}

/// The pullback `dom(F) ×_cod dom(G)`: pairs of objects/morphisms agreeing
/// under F and G, with componentwise composition. With F = G this is the
/// kernel pair used by monoidal overcategory tensors.
pub fn pullback_category(
    f: &FunctorData,
    g: &FunctorData,
) -> Result<(FinCat, FunctorData, FunctorData), CatError> {
    if f.cod != g.cod {
        return Err(CatError::MalformedTable(
            "pullback requires functors with the same codomain".into(),
        ));
    }
    let mut objects = Vec::new();
    let mut p1_obj = BTreeMap::new();
    let mut p2_obj = BTreeMap::new();
    for x in f.dom.objects() {
        for y in g.dom.objects() {
            if f.on_obj(x) == g.on_obj(y) {
                let id = pair_id(x, y);
                p1_obj.insert(id.clone(), x.clone());
                p2_obj.insert(id.clone(), y.clone());
                objects.push(id);
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut p1_mor = BTreeMap::new();
    let mut p2_mor = BTreeMap::new();
    for u in f.dom.morphisms() {
        for v in g.dom.morphisms() {
            if f.on_mor(&u.id) == g.on_mor(&v.id) {
                let id = pair_id(&u.id, &v.id);
                morphisms.push(MorRec {
                    id: id.clone(),
                    src: pair_id(&u.src, &v.src),
                    dst: pair_id(&u.dst, &v.dst),
                });
                p1_mor.insert(id.clone(), u.id.clone());
                p2_mor.insert(id.clone(), v.id.clone());
            }
        }
    }
    for o in &objects {
        identity.insert(
            o.clone(),
            pair_id(
                f.dom.identity_of(&p1_obj[o]),
                g.dom.identity_of(&p2_obj[o]),
            ),
        );
    }
    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.dst == m2.src {
                let u = f
                    .dom
                    .compose(&p1_mor[&m2.id], &p1_mor[&m1.id])
                    .expect("composable");
                let v = g
                    .dom
                    .compose(&p2_mor[&m2.id], &p2_mor[&m1.id])
                    .expect("composable");
                compose.insert((m2.id.clone(), m1.id.clone()), pair_id(u, v));
            }
        }
    }
    let pb = FinCat::from_parts(objects, morphisms, identity, compose)?;
    let p1 = FunctorData {
        dom: pb.clone(),
        cod: f.dom.clone(),
        object_map: p1_obj,
        morphism_map: p1_mor,
    };
    let p2 = FunctorData {
        dom: pb.clone(),
        cod: g.dom.clone(),
        object_map: p2_obj,
        morphism_map: p2_mor,
    };
    Ok((pb, p1, p2))
}

/// Plain product category, as the pullback over the terminal category.
pub fn product_category(
    a: &FinCat,
    b: &FinCat,
) -> Result<(FinCat, FunctorData, FunctorData), CatError> {
    let term = crate::shapes::terminal();
    let fa = FunctorData::constant(a, &term, "*")?;
    let fb = FunctorData::constant(b, &term, "*")?;
    pullback_category(&fa, &fb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::FunctorData;

    #[test]
    fn coslice_of_chain_at_bottom_is_a_chain() {
        let c = fixtures::chain_poset(3);
        let (sl, proj) = coslice(&c, "0").unwrap();
        assert!(sl.validate().is_valid());
        // morphisms out of 0: id_0, le_0_1, le_0_2 -> three objects, chain shape
        assert_eq!(sl.objects().len(), 3);
        assert_eq!(sl.morphisms().len(), 6);
        assert!(proj.validate().is_valid());
    }

    #[test]
    fn coslice_at_terminal_object_has_one_object() {
        let c = fixtures::chain_poset(3);
        let (sl, _) = coslice(&c, "2").unwrap();
        assert_eq!(sl.objects().len(), 1);
    }

    #[test]
    fn coslice_of_one_object_category_lists_endomorphisms() {
        let c = fixtures::z2_monoid_cat();
        let (sl, proj) = coslice(&c, "m").unwrap();
        assert!(sl.validate().is_valid());
        assert_eq!(sl.objects().len(), c.endos("m").len());
        assert!(proj.validate().is_valid());
    }

    #[test]
    fn coslice_of_unknown_object_errors() {
        let c = fixtures::chain_poset(2);
        assert!(coslice(&c, "nope").is_err());
    }

    #[test]
    fn slice_projection_is_a_functor() {
        let c = fixtures::chain_poset(3);
        let (sl, proj) = slice_at(&c, "2").unwrap();
        assert!(sl.validate().is_valid());
        assert_eq!(sl.objects().len(), 3);
        assert!(proj.validate().is_valid());
    }

    #[test]
    fn kernel_pair_of_identity_is_the_diagonal() {
        let c = fixtures::chain_poset(2);
        let idf = FunctorData::identity(&c);
        let (pb, p1, p2) = pullback_category(&idf, &idf).unwrap();
        assert!(pb.validate().is_valid());
        // pairs (x, y) with x = y only
        assert_eq!(pb.objects().len(), c.objects().len());
        assert!(p1.validate().is_valid());
        assert!(p2.validate().is_valid());
    }

    #[test]
    fn kernel_pair_counts_agreeing_pairs() {
        // discrete total with fibers of sizes 2 and 3 over a discrete base
        let ov = fixtures::discrete_fibers_overcat(&[2, 3]);
        let (pb, _, _) = pullback_category(&ov.arity, &ov.arity).unwrap();
        assert_eq!(pb.objects().len(), 2 * 2 + 3 * 3);
    }

    #[test]
    fn pullback_over_terminal_is_the_product() {
        let a = fixtures::chain_poset(2);
        let b = fixtures::discrete(2);
        let (p, _, _) = product_category(&a, &b).unwrap();
        assert!(p.validate().is_valid());
        assert_eq!(p.objects().len(), 4);
        assert_eq!(p.morphisms().len(), a.morphisms().len() * b.morphisms().len());
    }
}
