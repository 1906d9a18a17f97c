//! JSON document loading for the CLI: categories, functors,
//! overcategories, diagrams, overfunctors, monad and monoidal bundles.
//!
//! Documents reference other documents by relative path, resolved
//! against the directory of the referencing file. Malformed documents
//! are rejected with a JSON-pointer location, e.g. a missing identity
//! table reports "/identity".

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use thiserror::Error;

use crate::fincat::{FinCat, MorRec};
use crate::functor::{FunctorData, NatTransData};
use crate::monad::Overmonad;
use crate::monoidal::MonoidalOvercategory;
use crate::overcat::{OverDiagram, Overcategory, OverfunctorData};
use crate::shapes;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("{path} is not JSON: {detail}")]
    Json { path: String, detail: String },
    #[error("{path}: invalid document at {pointer}: {detail}")]
    Invalid {
        path: String,
        pointer: String,
        detail: String,
    },
    #[error("{path}: {detail}")]
    Semantic { path: String, detail: String },
}

fn read_value(path: &Path) -> Result<Value, SchemaError> {
    let text = fs::read_to_string(path).map_err(|e| SchemaError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| SchemaError::Json {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

fn invalid(path: &Path, pointer: &str, detail: &str) -> SchemaError {
    SchemaError::Invalid {
        path: path.display().to_string(),
        pointer: pointer.to_string(),
        detail: detail.to_string(),
    }
}

fn semantic(path: &Path, detail: impl ToString) -> SchemaError {
    SchemaError::Semantic {
        path: path.display().to_string(),
        detail: detail.to_string(),
    }
}

fn get<'a>(doc: &'a Value, path: &Path, pointer: &str) -> Result<&'a Value, SchemaError> {
    doc.pointer(pointer)
        .ok_or_else(|| invalid(path, pointer, "missing field"))
}

fn as_str<'a>(v: &'a Value, path: &Path, pointer: &str) -> Result<&'a str, SchemaError> {
    v.as_str()
        .ok_or_else(|| invalid(path, pointer, "expected a string"))
}

fn get_str<'a>(doc: &'a Value, path: &Path, pointer: &str) -> Result<&'a str, SchemaError> {
    as_str(get(doc, path, pointer)?, path, pointer)
}

fn get_array<'a>(
    doc: &'a Value,
    path: &Path,
    pointer: &str,
) -> Result<&'a Vec<Value>, SchemaError> {
    get(doc, path, pointer)?
        .as_array()
        .ok_or_else(|| invalid(path, pointer, "expected an array"))
}

/// A JSON object of string-to-string entries, as a sorted map.
fn get_string_map(
    doc: &Value,
    path: &Path,
    pointer: &str,
) -> Result<BTreeMap<String, String>, SchemaError> {
    let obj = get(doc, path, pointer)?
        .as_object()
        .ok_or_else(|| invalid(path, pointer, "expected an object"))?;
    let mut out = BTreeMap::new();
    for (k, v) in obj {
        let p = format!("{pointer}/{k}");
        out.insert(k.clone(), as_str(v, path, &p)?.to_string());
    }
    Ok(out)
}

fn resolve(base_file: &Path, rel: &str) -> PathBuf {
    let rel_path = Path::new(rel);
    if rel_path.is_absolute() {
        rel_path.to_path_buf()
    } else {
        base_file
            .parent()
            .unwrap_or_else(|| Path::new("."))
            .join(rel_path)
    }
}

/// Parse a category document already read into a JSON value.
pub fn parse_fincat(doc: &Value, path: &Path) -> Result<FinCat, SchemaError> {
    let mut objects = Vec::new();
    for (i, v) in get_array(doc, path, "/objects")?.iter().enumerate() {
        let p = format!("/objects/{i}");
        objects.push(as_str(v, path, &p)?.to_string());
    }
    let mut morphisms = Vec::new();
    for (i, v) in get_array(doc, path, "/morphisms")?.iter().enumerate() {
        let p = format!("/morphisms/{i}");
        if !v.is_object() {
            return Err(invalid(path, &p, "expected an object with id, src, dst"));
        }
        morphisms.push(MorRec {
            id: get_str(v, path, "/id")
                .map_err(|_| invalid(path, &format!("{p}/id"), "missing or non-string"))?
                .to_string(),
            src: get_str(v, path, "/src")
                .map_err(|_| invalid(path, &format!("{p}/src"), "missing or non-string"))?
                .to_string(),
            dst: get_str(v, path, "/dst")
                .map_err(|_| invalid(path, &format!("{p}/dst"), "missing or non-string"))?
                .to_string(),
        });
    }
    let identity = get_string_map(doc, path, "/identity")?;
    let mut compose = BTreeMap::new();
    for (i, v) in get_array(doc, path, "/compose")?.iter().enumerate() {
        let p = format!("/compose/{i}");
        let triple = v
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| invalid(path, &p, "expected a [g, f, gf] triple"))?;
        let g = as_str(&triple[0], path, &format!("{p}/0"))?;
        let f = as_str(&triple[1], path, &format!("{p}/1"))?;
        let gf = as_str(&triple[2], path, &format!("{p}/2"))?;
        compose.insert((g.to_string(), f.to_string()), gf.to_string());
    }
    FinCat::from_parts(objects, morphisms, identity, compose).map_err(|e| semantic(path, e))
}

/// Load a category document. The argument may also be one of the
/// built-in shape names (`empty`, `terminal`, `discrete-2`, ...).
pub fn load_fincat(path: &Path) -> Result<FinCat, SchemaError> {
    if let Some(name) = path.to_str() {
        if !path.exists() {
            if let Some(shape) = shapes::by_name(name) {
                return Ok(shape);
            }
        }
    }
    let doc = read_value(path)?;
    parse_fincat(&doc, path)
}

/// Object and morphism maps shared by functor-like documents.
fn load_maps(path: &Path) -> Result<(BTreeMap<String, String>, BTreeMap<String, String>), SchemaError> {
    let doc = read_value(path)?;
    Ok((
        get_string_map(&doc, path, "/object_map")?,
        get_string_map(&doc, path, "/morphism_map")?,
    ))
}

/// Functor document: {"dom": <category path>, "cod": <category path>,
/// "object_map": {...}, "morphism_map": {...}}.
pub fn load_functor(path: &Path) -> Result<FunctorData, SchemaError> {
    let doc = read_value(path)?;
    let dom = load_fincat(&resolve(path, get_str(&doc, path, "/dom")?))?;
    let cod = load_fincat(&resolve(path, get_str(&doc, path, "/cod")?))?;
    let f = FunctorData {
        dom,
        cod,
        object_map: get_string_map(&doc, path, "/object_map")?,
        morphism_map: get_string_map(&doc, path, "/morphism_map")?,
    };
    f.check_well_formed().map_err(|e| semantic(path, e))?;
    Ok(f)
}

/// Overcategory document: {"total": <category path>, "base": <category
/// path>, "arity": <maps path>}. The arity maps document needs only
/// object_map and morphism_map; its endpoints are the total and base.
pub fn load_overcategory(path: &Path) -> Result<Overcategory, SchemaError> {
    let (total, base, arity) = load_overcategory_parts(path)?;
    Overcategory::new(total, base, arity).map_err(|e| semantic(path, e))
}

/// The raw pieces of an overcategory document, without the lawfulness
/// checks of `Overcategory::new`. Used by `validate`, which wants to
/// report violations as a verdict rather than refuse the document.
pub fn load_overcategory_parts(
    path: &Path,
) -> Result<(FinCat, FinCat, FunctorData), SchemaError> {
    let doc = read_value(path)?;
    let total = load_fincat(&resolve(path, get_str(&doc, path, "/total")?))?;
    let base = load_fincat(&resolve(path, get_str(&doc, path, "/base")?))?;
    let (object_map, morphism_map) = load_maps(&resolve(path, get_str(&doc, path, "/arity")?))?;
    let arity = FunctorData {
        dom: total.clone(),
        cod: base.clone(),
        object_map,
        morphism_map,
    };
    Ok((total, base, arity))
}

/// Diagram document: {"shape": <category path or shape name>,
/// "functor": <maps path>, "B": <base object id>}. The functor maps go
/// from the shape into the total category of the given overcategory.
pub fn load_diagram(path: &Path, ov: &Overcategory) -> Result<OverDiagram, SchemaError> {
    let doc = read_value(path)?;
    let shape = load_fincat(&resolve(path, get_str(&doc, path, "/shape")?))?;
    let (object_map, morphism_map) = load_maps(&resolve(path, get_str(&doc, path, "/functor")?))?;
    let b = get_str(&doc, path, "/B")?;
    let functor = FunctorData {
        dom: shape.clone(),
        cod: ov.total.clone(),
        object_map,
        morphism_map,
    };
    OverDiagram::new(ov, shape, functor, b).map_err(|e| semantic(path, e))
}

/// Overfunctor document: {"dom": <overcategory path>, "cod":
/// <overcategory path>, "total_map": <maps path>, "base_map": <maps
/// path>}.
pub fn load_overfunctor(path: &Path) -> Result<OverfunctorData, SchemaError> {
    let doc = read_value(path)?;
    let dom = load_overcategory(&resolve(path, get_str(&doc, path, "/dom")?))?;
    let cod = load_overcategory(&resolve(path, get_str(&doc, path, "/cod")?))?;
    let (t_obj, t_mor) = load_maps(&resolve(path, get_str(&doc, path, "/total_map")?))?;
    let (b_obj, b_mor) = load_maps(&resolve(path, get_str(&doc, path, "/base_map")?))?;
    let f = OverfunctorData {
        total_map: FunctorData {
            dom: dom.total.clone(),
            cod: cod.total.clone(),
            object_map: t_obj,
            morphism_map: t_mor,
        },
        base_map: FunctorData {
            dom: dom.base.clone(),
            cod: cod.base.clone(),
            object_map: b_obj,
            morphism_map: b_mor,
        },
        dom,
        cod,
    };
    f.validate().map_err(|e| semantic(path, e))?;
    Ok(f)
}

/// Adjunction bundle: {"left": <overfunctor path>, "right":
/// <overfunctor path>, "unit": {object: component}, "counit": {...}}.
/// The unit lives in the domain of the left adjoint, the counit in its
/// codomain.
pub fn load_adjunction(path: &Path) -> Result<crate::comma::Adjunction, SchemaError> {
    let doc = read_value(path)?;
    let left = load_overfunctor(&resolve(path, get_str(&doc, path, "/left")?))?;
    let right = load_overfunctor(&resolve(path, get_str(&doc, path, "/right")?))?;
    let adj = crate::comma::Adjunction {
        unit: NatTransData {
            dom_functor: FunctorData::identity(&left.dom.total),
            cod_functor: left.total_map.then(&right.total_map),
            components: get_string_map(&doc, path, "/unit")?,
        },
        counit: NatTransData {
            dom_functor: right.total_map.then(&left.total_map),
            cod_functor: FunctorData::identity(&left.cod.total),
            components: get_string_map(&doc, path, "/counit")?,
        },
        left,
        right,
    };
    adj.unit.check_well_formed().map_err(|e| semantic(path, e))?;
    adj.counit.check_well_formed().map_err(|e| semantic(path, e))?;
    Ok(adj)
}

/// Overmonad bundle: {"overcategory": <path>, "t_object_map": {...},
/// "t_morphism_map": {...}, "eta": {...}, "mu": {...}}.
pub fn load_overmonad(path: &Path) -> Result<Overmonad, SchemaError> {
    let doc = read_value(path)?;
    let ov = load_overcategory(&resolve(path, get_str(&doc, path, "/overcategory")?))?;
    let t_total = FunctorData {
        dom: ov.total.clone(),
        cod: ov.total.clone(),
        object_map: get_string_map(&doc, path, "/t_object_map")?,
        morphism_map: get_string_map(&doc, path, "/t_morphism_map")?,
    };
    t_total.check_well_formed().map_err(|e| semantic(path, e))?;
    let t = OverfunctorData {
        dom: ov.clone(),
        cod: ov.clone(),
        total_map: t_total.clone(),
        base_map: FunctorData::identity(&ov.base),
    };
    let tt = t_total.then(&t_total);
    let m = Overmonad {
        eta: NatTransData {
            dom_functor: FunctorData::identity(&ov.total),
            cod_functor: t_total.clone(),
            components: get_string_map(&doc, path, "/eta")?,
        },
        mu: NatTransData {
            dom_functor: tt,
            cod_functor: t_total,
            components: get_string_map(&doc, path, "/mu")?,
        },
        t,
    };
    m.eta.check_well_formed().map_err(|e| semantic(path, e))?;
    m.mu.check_well_formed().map_err(|e| semantic(path, e))?;
    Ok(m)
}

/// Monoidal bundle: {"overcategory": <path>, "tensor_obj": {...},
/// "tensor_mor": {...}, "unit_obj": {...}, "unit_mor": {...}} with
/// optional "u_l", "u_r", "ass" coherence tables. Without coherence
/// tables the structure is assembled strictly.
pub fn load_monoidal(path: &Path) -> Result<MonoidalOvercategory, SchemaError> {
    let doc = read_value(path)?;
    let ov = load_overcategory(&resolve(path, get_str(&doc, path, "/overcategory")?))?;
    let tensor_obj = get_string_map(&doc, path, "/tensor_obj")?;
    let tensor_mor = get_string_map(&doc, path, "/tensor_mor")?;
    let unit_obj = get_string_map(&doc, path, "/unit_obj")?;
    let unit_mor = get_string_map(&doc, path, "/unit_mor")?;
    let strict = doc.get("u_l").is_none() && doc.get("u_r").is_none() && doc.get("ass").is_none();
    let res = if strict {
        MonoidalOvercategory::strict(ov, tensor_obj, tensor_mor, unit_obj, unit_mor)
    } else {
        MonoidalOvercategory::from_maps(
            ov,
            tensor_obj,
            tensor_mor,
            unit_obj,
            unit_mor,
            get_string_map(&doc, path, "/u_l")?,
            get_string_map(&doc, path, "/u_r")?,
            get_string_map(&doc, path, "/ass")?,
        )
    };
    res.map_err(|e| semantic(path, e))
}

fn write_doc(path: &Path, v: &Value) -> Result<(), SchemaError> {
    let text = serde_json::to_string_pretty(v).expect("document encodes");
    fs::write(path, text + "\n").map_err(|e| SchemaError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

/// Write a category document `<name>.json` into `dir`.
pub fn write_fincat_doc(dir: &Path, name: &str, cat: &FinCat) -> Result<PathBuf, SchemaError> {
    let path = dir.join(format!("{name}.json"));
    write_doc(&path, &serde_json::to_value(cat).expect("category encodes"))?;
    Ok(path)
}

fn write_maps_doc(
    dir: &Path,
    name: &str,
    object_map: &BTreeMap<String, String>,
    morphism_map: &BTreeMap<String, String>,
) -> Result<PathBuf, SchemaError> {
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({"object_map": object_map, "morphism_map": morphism_map}),
    )?;
    Ok(path)
}

/// Write an overcategory as `<name>.json` plus its total, base, and
/// arity files, all referenced by filename.
pub fn write_overcategory_doc(
    dir: &Path,
    name: &str,
    ov: &Overcategory,
) -> Result<PathBuf, SchemaError> {
    write_fincat_doc(dir, &format!("{name}.total"), &ov.total)?;
    write_fincat_doc(dir, &format!("{name}.base"), &ov.base)?;
    write_maps_doc(
        dir,
        &format!("{name}.arity"),
        &ov.arity.object_map,
        &ov.arity.morphism_map,
    )?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "total": format!("{name}.total.json"),
            "base": format!("{name}.base.json"),
            "arity": format!("{name}.arity.json"),
        }),
    )?;
    Ok(path)
}

/// Write a fiberwise diagram as `<name>.json` plus its shape and
/// functor-maps files.
pub fn write_diagram_doc(
    dir: &Path,
    name: &str,
    diag: &OverDiagram,
) -> Result<PathBuf, SchemaError> {
    write_fincat_doc(dir, &format!("{name}.shape"), &diag.shape)?;
    write_maps_doc(
        dir,
        &format!("{name}.functor"),
        &diag.functor.object_map,
        &diag.functor.morphism_map,
    )?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "shape": format!("{name}.shape.json"),
            "functor": format!("{name}.functor.json"),
            "B": diag.base_object,
        }),
    )?;
    Ok(path)
}

/// Write an overfunctor as `<name>.json` plus its endpoint
/// overcategories and both map files.
pub fn write_overfunctor_doc(
    dir: &Path,
    name: &str,
    f: &OverfunctorData,
) -> Result<PathBuf, SchemaError> {
    write_overcategory_doc(dir, &format!("{name}.dom"), &f.dom)?;
    write_overcategory_doc(dir, &format!("{name}.cod"), &f.cod)?;
    write_maps_doc(
        dir,
        &format!("{name}.total_map"),
        &f.total_map.object_map,
        &f.total_map.morphism_map,
    )?;
    write_maps_doc(
        dir,
        &format!("{name}.base_map"),
        &f.base_map.object_map,
        &f.base_map.morphism_map,
    )?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "dom": format!("{name}.dom.json"),
            "cod": format!("{name}.cod.json"),
            "total_map": format!("{name}.total_map.json"),
            "base_map": format!("{name}.base_map.json"),
        }),
    )?;
    Ok(path)
}

/// Write an adjunction bundle as `<name>.json` plus both overfunctor
/// document trees.
pub fn write_adjunction_doc(
    dir: &Path,
    name: &str,
    adj: &crate::comma::Adjunction,
) -> Result<PathBuf, SchemaError> {
    write_overfunctor_doc(dir, &format!("{name}.left"), &adj.left)?;
    write_overfunctor_doc(dir, &format!("{name}.right"), &adj.right)?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "left": format!("{name}.left.json"),
            "right": format!("{name}.right.json"),
            "unit": adj.unit.components,
            "counit": adj.counit.components,
        }),
    )?;
    Ok(path)
}

/// Write an overmonad bundle as `<name>.json` plus the overcategory
/// tree.
pub fn write_overmonad_doc(
    dir: &Path,
    name: &str,
    m: &Overmonad,
) -> Result<PathBuf, SchemaError> {
    write_overcategory_doc(dir, &format!("{name}.overcategory"), &m.t.dom)?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "overcategory": format!("{name}.overcategory.json"),
            "t_object_map": m.t.total_map.object_map,
            "t_morphism_map": m.t.total_map.morphism_map,
            "eta": m.eta.components,
            "mu": m.mu.components,
        }),
    )?;
    Ok(path)
}

/// Write a monoidal bundle as `<name>.json` plus the overcategory tree.
pub fn write_monoidal_doc(
    dir: &Path,
    name: &str,
    mo: &MonoidalOvercategory,
) -> Result<PathBuf, SchemaError> {
    write_overcategory_doc(dir, &format!("{name}.overcategory"), &mo.ov)?;
    let path = dir.join(format!("{name}.json"));
    write_doc(
        &path,
        &serde_json::json!({
            "overcategory": format!("{name}.overcategory.json"),
            "tensor_obj": mo.tensor.object_map,
            "tensor_mor": mo.tensor.morphism_map,
            "unit_obj": mo.unit.object_map,
            "unit_mor": mo.unit.morphism_map,
            "u_l": mo.u_l.components,
            "u_r": mo.u_r.components,
            "ass": mo.ass.components,
        }),
    )?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn write_tmp(dir: &Path, name: &str, v: &Value) -> PathBuf {
        let p = dir.join(name);
        fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
        p
    }

    #[test]
    fn category_round_trips_through_its_document() {
        let cat = fixtures::finset_cat(2);
        let doc = serde_json::to_value(&cat).unwrap();
        let parsed = parse_fincat(&doc, Path::new("inline")).unwrap();
        assert_eq!(parsed, cat);
    }

    #[test]
    fn missing_identity_reports_the_pointer() {
        let cat = fixtures::terminal_cat();
        let mut doc = serde_json::to_value(&cat).unwrap();
        doc.as_object_mut().unwrap().remove("identity");
        let err = parse_fincat(&doc, Path::new("inline")).unwrap_err();
        match err {
            SchemaError::Invalid { pointer, .. } => assert_eq!(pointer, "/identity"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn bad_compose_entry_reports_the_indexed_pointer() {
        let cat = fixtures::chain_poset(2);
        let mut doc = serde_json::to_value(&cat).unwrap();
        doc["compose"][0] = serde_json::json!(["only", "two"]);
        let err = parse_fincat(&doc, Path::new("inline")).unwrap_err();
        match err {
            SchemaError::Invalid { pointer, .. } => assert_eq!(pointer, "/compose/0"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn overcategory_document_loads_through_paths() {
        let dir = tempfile::tempdir().unwrap();
        let ov = fixtures::finset_times_g(2);
        write_tmp(dir.path(), "total.json", &serde_json::to_value(&ov.total).unwrap());
        write_tmp(dir.path(), "base.json", &serde_json::to_value(&ov.base).unwrap());
        write_tmp(
            dir.path(),
            "arity.json",
            &serde_json::json!({
                "object_map": ov.arity.object_map,
                "morphism_map": ov.arity.morphism_map,
            }),
        );
        let p = write_tmp(
            dir.path(),
            "ov.json",
            &serde_json::json!({
                "total": "total.json",
                "base": "base.json",
                "arity": "arity.json",
            }),
        );
        let loaded = load_overcategory(&p).unwrap();
        assert_eq!(loaded, ov);
    }

    #[test]
    fn writers_round_trip_semantic_objects() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path();
        let ov = fixtures::poset_over_terminal(2);
        let p = write_overcategory_doc(d, "poset2", &ov).unwrap();
        assert_eq!(load_overcategory(&p).unwrap(), ov);
        let f = fixtures::poset_reflection_overfunctor();
        let p = write_overfunctor_doc(d, "reflection", &f).unwrap();
        assert_eq!(load_overfunctor(&p).unwrap(), f);
        let m = fixtures::top_closure_overmonad();
        let p = write_overmonad_doc(d, "topclosure", &m).unwrap();
        assert_eq!(load_overmonad(&p).unwrap(), m);
        let adj = fixtures::kleisli_top_closure_adjunction();
        let p = write_adjunction_doc(d, "kleisli", &adj).unwrap();
        assert_eq!(load_adjunction(&p).unwrap(), adj);
    }

    #[test]
    fn monoidal_bundle_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let mo = fixtures::lattice2_monoidal_xg();
        let p = write_monoidal_doc(dir.path(), "latticexg", &mo).unwrap();
        let loaded = load_monoidal(&p).unwrap();
        assert_eq!(loaded.ov, mo.ov);
        assert!(loaded.tensor.same_maps(&mo.tensor));
        assert!(loaded.unit.same_maps(&mo.unit));
    }

    #[test]
    fn diagram_document_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let ov = fixtures::lattice_times_g();
        let diag = crate::limits::discrete_diagram(
            &ov,
            &[&crate::fincat::pair_id("a", "g0"), &crate::fincat::pair_id("b", "g0")],
        )
        .unwrap();
        let p = write_diagram_doc(dir.path(), "pair", &diag).unwrap();
        assert_eq!(load_diagram(&p, &ov).unwrap(), diag);
    }

    #[test]
    fn shape_names_resolve_without_files() {
        let cat = load_fincat(Path::new("parallel-pair")).unwrap();
        assert_eq!(cat.objects().len(), 2);
    }
}
