//! Shared test and example fixtures: small categories, overcategories,
//! overfunctors, overmonads, and monoidal overcategories with known
//! behaviour. Everything here is an explicit finite table.

use std::collections::BTreeMap;

use crate::comma::Adjunction;
use crate::derived::product_category;
use crate::fincat::{pair_id, split_pair_id, CatBuilder, FinCat};
use crate::functor::{FunctorData, NatTransData};
use crate::limits::SplitOverfork;
use crate::monad::Overmonad;
use crate::monoidal::{LiberalityWitnesses, MonoidalOvercategory};
use crate::overcat::{Overcategory, OverfunctorData};
use crate::shapes;

/// One object, one identity.
pub fn terminal_cat() -> FinCat {
    shapes::terminal()
}

/// Discrete category on `n` objects `d0 .. d{n-1}`.
pub fn discrete(n: usize) -> FinCat {
    shapes::discrete(n)
}

/// The linear poset 0 < 1 < ... < n-1 with objects `"0" .. "n-1"`,
/// identities `id_i`, and strict comparisons `le_i_j`.
pub fn chain_poset(n: usize) -> FinCat {
    let mut b = CatBuilder::new();
    for i in 0..n {
        b.object(&i.to_string(), &format!("id_{i}"));
    }
    for i in 0..n {
        for j in i + 1..n {
            b.morphism(&format!("le_{i}_{j}"), &i.to_string(), &j.to_string());
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                b.composite(
                    &format!("le_{j}_{k}"),
                    &format!("le_{i}_{j}"),
                    &format!("le_{i}_{k}"),
                );
            }
        }
    }
    b.build().expect("chain poset")
}

/// The group Z/2 as a one-object category on `"m"` with involution `s`.
pub fn z2_monoid_cat() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("m", "id");
    b.morphism("s", "m", "m");
    b.composite("s", "s", "id");
    b.build().expect("z2 monoid")
}

/// A discrete total category with fibers of the given sizes over a
/// discrete base, arity the evident projection.
pub fn discrete_fibers_overcat(sizes: &[usize]) -> Overcategory {
    let base = shapes::discrete(sizes.len());
    let mut b = CatBuilder::new();
    let mut obj_map = BTreeMap::new();
    let mut mor_map = BTreeMap::new();
    for (i, &k) in sizes.iter().enumerate() {
        for j in 0..k {
            let o = format!("d{i}_{j}");
            let ido = format!("id_d{i}_{j}");
            b.object(&o, &ido);
            obj_map.insert(o, format!("d{i}"));
            mor_map.insert(ido, format!("id_d{i}"));
        }
    }
    let total = b.build().expect("discrete fibers");
    let arity = FunctorData {
        dom: total.clone(),
        cod: base.clone(),
        object_map: obj_map,
        morphism_map: mor_map,
    };
    Overcategory::new(total, base, arity).expect("discrete fibers overcat")
}

/// The group Z/2 as a one-object category on `"g0"` with identity `e`
/// and involution `s`; used as a base with non-identity morphisms.
fn g_cat() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("g0", "e");
    b.morphism("s", "g0", "g0");
    b.composite("s", "s", "e");
    b.build().expect("g cat")
}

/// Canonical name of the function `t : m -> n` in the finite-set
/// skeleton; elements are `0 .. k-1`, tables are written as digit runs.
fn fun_id(m: usize, n: usize, t: &[usize]) -> String {
    let digits: String = t.iter().map(|d| d.to_string()).collect();
    format!("f{m}to{n}_{digits}")
}

/// All functions `m -> n` as tables, in lexicographic order.
fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t = vec![0usize; m];
    loop {
        out.push(t.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// The skeleton of finite sets truncated at cardinality `n`: objects
/// `"0" .. "n"` named by size, morphisms all functions.
pub fn finset_cat(n: usize) -> FinCat {
    let mut b = CatBuilder::new();
    for k in 0..=n {
        let t: Vec<usize> = (0..k).collect();
        b.object(&k.to_string(), &fun_id(k, k, &t));
    }
    let mut tables: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for m in 0..=n {
        for k in 0..=n {
            for t in all_functions(m, k) {
                if !(m == k && t.iter().enumerate().all(|(i, &v)| i == v)) {
                    b.morphism(&fun_id(m, k, &t), &m.to_string(), &k.to_string());
                }
                tables.push((m, k, t));
            }
        }
    }
    for (m, k, f) in &tables {
        for (k2, l, g) in &tables {
            if k2 == k {
                let comp: Vec<usize> = f.iter().map(|&i| g[i]).collect();
                b.composite(
                    &fun_id(*k2, *l, g),
                    &fun_id(*m, *k, f),
                    &fun_id(*m, *l, &comp),
                );
            }
        }
    }
    b.build().expect("finset cat")
}

/// FinSet truncated at `n`, crossed with the one-object group Z/2;
/// arity is the projection onto the group factor.
pub fn finset_times_g(n: usize) -> Overcategory {
    let g = g_cat();
    let (total, _, p2) = product_category(&finset_cat(n), &g).expect("product");
    Overcategory::new(total, g, p2).expect("finset x g")
}

/// The product object `(size | b)` of `finset_times_g`.
pub fn finset_obj_in_product(ov: &Overcategory, size: usize, b: &str) -> String {
    let id = pair_id(&size.to_string(), b);
    assert!(ov.total.has_object(&id), "missing object {id}");
    id
}

/// The vertical swap on the two-element set in the fiber over `b`.
pub fn swap_in_product(ov: &Overcategory, b: &str) -> String {
    let id = pair_id(&fun_id(2, 2, &[1, 0]), ov.base.identity_of(b));
    assert!(ov.total.has_morphism(&id), "missing morphism {id}");
    id
}

/// Split overforks harvested from split vertical idempotents: for a
/// splitting `e = s h` with `h s = 1` the fork `(1, e; h, s, 1)` is split.
pub fn split_forks_from_idempotents(ov: &Overcategory) -> Vec<SplitOverfork> {
    let total = &ov.total;
    let mut out = Vec::new();
    for e in total.morphisms() {
        if e.src != e.dst
            || !ov.is_vertical(&e.id)
            || total.compose(&e.id, &e.id) != Some(e.id.as_str())
        {
            continue;
        }
        'split: for c in total.objects() {
            for h in total.hom(&e.src, c) {
                if !ov.is_vertical(h) {
                    continue;
                }
                for s in total.hom(c, &e.src) {
                    if !ov.is_vertical(s) {
                        continue;
                    }
                    if total.compose(h, s) == Some(total.identity_of(c))
                        && total.compose(s, h) == Some(e.id.as_str())
                    {
                        let idb = total.identity_of(&e.src).to_string();
                        out.push(SplitOverfork {
                            f: idb.clone(),
                            g: e.id.clone(),
                            h: h.to_string(),
                            s: s.to_string(),
                            t: idb,
                        });
                        break 'split;
                    }
                }
            }
        }
    }
    out
}

/// Union of two subsets of {a, b} written in the lattice naming
/// ("0", "a", "b", "ab").
fn lat_union(x: &str, y: &str) -> String {
    let mut out = String::new();
    for ch in ['a', 'b'] {
        if x.contains(ch) || y.contains(ch) {
            out.push(ch);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn lat_le(x: &str, y: &str) -> String {
    if x == y {
        format!("id_{x}")
    } else {
        format!("le_{x}_{y}")
    }
}

/// The powerset lattice of {a, b} as a poset category: objects
/// "0", "a", "b", "ab"; all meets and joins exist.
fn lattice_cat() -> FinCat {
    let objs = ["0", "a", "b", "ab"];
    let leq = |x: &str, y: &str| lat_union(x, y) == y;
    let mut b = CatBuilder::new();
    for o in objs {
        b.object(o, &format!("id_{o}"));
    }
    for x in objs {
        for y in objs {
            if x != y && leq(x, y) {
                b.morphism(&lat_le(x, y), x, y);
            }
        }
    }
    for x in objs {
        for y in objs {
            for z in objs {
                if x != y && y != z && leq(x, y) && leq(y, z) {
                    b.composite(&lat_le(y, z), &lat_le(x, y), &lat_le(x, z));
                }
            }
        }
    }
    b.build().expect("lattice")
}

/// The powerset lattice of {a, b} crossed with the one-object group
/// Z/2, arity the group projection. Overcomplete and overcocomplete.
pub fn lattice_times_g() -> Overcategory {
    let g = g_cat();
    let (total, _, p2) = product_category(&lattice_cat(), &g).expect("product");
    Overcategory::new(total, g, p2).expect("lattice x g")
}

fn over_terminal(total: FinCat) -> Overcategory {
    let base = shapes::terminal();
    let arity = FunctorData::constant(&total, &base, "*").expect("constant arity");
    Overcategory::new(total, base, arity).expect("over terminal")
}

/// The chain poset on `n` objects over the terminal base.
pub fn poset_over_terminal(n: usize) -> Overcategory {
    over_terminal(chain_poset(n))
}

/// The inclusion {0 < 1} into {0 < h < 1} over the terminal base; its
/// left overadjoint is the reflection rounding h up to 1.
pub fn poset_reflection_overfunctor() -> OverfunctorData {
    let dom = poset_over_terminal(2);
    let mut b = CatBuilder::new();
    b.object("0", "id_0").object("h", "id_h").object("1", "id_1");
    b.morphism("le_0_h", "0", "h")
        .morphism("le_h_1", "h", "1")
        .morphism("le_0_1", "0", "1");
    b.composite("le_h_1", "le_0_h", "le_0_1");
    let cod_total = b.build().expect("interval with midpoint");
    let cod = over_terminal(cod_total);
    let total_map = FunctorData {
        dom: dom.total.clone(),
        cod: cod.total.clone(),
        object_map: BTreeMap::from([("0".into(), "0".into()), ("1".into(), "1".into())]),
        morphism_map: BTreeMap::from([
            ("id_0".to_string(), "id_0".to_string()),
            ("id_1".to_string(), "id_1".to_string()),
            ("le_0_1".to_string(), "le_0_1".to_string()),
        ]),
    };
    let base_map = FunctorData::identity(&dom.base);
    OverfunctorData {
        dom,
        cod,
        total_map,
        base_map,
    }
}

/// The collapse of the discrete two-object overcategory onto the
/// terminal overcategory; it has no left overadjoint.
pub fn discrete_two_to_terminal_overfunctor() -> OverfunctorData {
    let dom = over_terminal(shapes::discrete(2));
    let cod = over_terminal(shapes::terminal());
    let total_map = FunctorData::constant(&dom.total, &cod.total, "*").expect("collapse");
    let base_map = FunctorData::identity(&dom.base);
    OverfunctorData {
        dom,
        cod,
        total_map,
        base_map,
    }
}

/// The parallel pair over the terminal base: no overinitial object
/// because lifts come in pairs (or not at all).
pub fn doubled_lift_overcat() -> Overcategory {
    over_terminal(shapes::parallel_pair())
}

/// Total category for the top-closure overmonad: objects "0" and "1",
/// hom(0, 1) = {a, b} with the Z/2 endomorphism s of "1" swapping them.
fn top_closure_total() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("0", "id_0").object("1", "id_1");
    b.morphism("a", "0", "1").morphism("b", "0", "1").morphism("s", "1", "1");
    b.composite("s", "s", "id_1");
    b.composite("s", "a", "b");
    b.composite("s", "b", "a");
    b.build().expect("top closure total")
}

/// An overmonad sending every object to the top object "1"; it has
/// exactly one overalgebra, carried by "1".
pub fn top_closure_overmonad() -> Overmonad {
    let ov = over_terminal(top_closure_total());
    let total_map = FunctorData {
        dom: ov.total.clone(),
        cod: ov.total.clone(),
        object_map: BTreeMap::from([("0".into(), "1".into()), ("1".into(), "1".into())]),
        morphism_map: BTreeMap::from([
            ("id_0".to_string(), "id_1".to_string()),
            ("id_1".to_string(), "id_1".to_string()),
            ("a".to_string(), "id_1".to_string()),
            ("b".to_string(), "s".to_string()),
            ("s".to_string(), "s".to_string()),
        ]),
    };
    let t = OverfunctorData {
        dom: ov.clone(),
        cod: ov.clone(),
        total_map: total_map.clone(),
        base_map: FunctorData::identity(&ov.base),
    };
    let eta = NatTransData {
        dom_functor: FunctorData::identity(&ov.total),
        cod_functor: total_map.clone(),
        components: BTreeMap::from([("0".to_string(), "b".to_string()), ("1".to_string(), "s".to_string())]),
    };
    let mu = NatTransData {
        dom_functor: total_map.then(&total_map),
        cod_functor: total_map,
        components: BTreeMap::from([("0".to_string(), "s".to_string()), ("1".to_string(), "s".to_string())]),
    };
    Overmonad { t, eta, mu }
}

/// The Kleisli adjunction of the top-closure overmonad, built as
/// explicit tables. Its comparison to E^T collapses two objects onto
/// one algebra, so it is not strictly monadic.
pub fn kleisli_top_closure_adjunction() -> Adjunction {
    let m = top_closure_overmonad();
    let e = m.t.dom.clone();
    let total = &e.total;
    let t = &m.t.total_map;
    let kl_mor = |f: &str, x: &str, y: &str| format!("k_{f}_{x}_{y}");
    // Kleisli morphisms x ~> y are morphisms x -> T y of E.
    let mut b = CatBuilder::new();
    let objs: Vec<String> = total.objects().to_vec();
    for x in &objs {
        b.object(x, &kl_mor(m.eta.component(x), x, x));
    }
    let mut raw: Vec<(String, String, String)> = Vec::new();
    for x in &objs {
        for y in &objs {
            for f in total.hom(x, t.on_obj(y)) {
                raw.push((f.to_string(), x.clone(), y.clone()));
                if !(x == y && f == m.eta.component(x)) {
                    b.morphism(&kl_mor(f, x, y), x, y);
                }
            }
        }
    }
    for (f, x, y) in &raw {
        for (g, x2, z) in &raw {
            if x2 == y {
                // g after f in Kleisli style: mu_z . T(g) . f
                let tg = t.on_mor(g);
                let gf = total.compose(tg, f).expect("composable");
                let comp = total
                    .compose(m.mu.component(z), gf)
                    .expect("composable");
                b.composite(&kl_mor(g, x2, z), &kl_mor(f, x, y), &kl_mor(comp, x, z));
            }
        }
    }
    let kl_total = b.build().expect("kleisli");
    let kl = over_terminal(kl_total);
    // L : E -> Kl, identity on objects, f |-> eta . f
    let mut l_mor = BTreeMap::new();
    for mr in total.morphisms() {
        let f = total
            .compose(m.eta.component(&mr.dst), &mr.id)
            .expect("composable");
        l_mor.insert(mr.id.clone(), kl_mor(f, &mr.src, &mr.dst));
    }
    let l_total = FunctorData {
        dom: total.clone(),
        cod: kl.total.clone(),
        object_map: objs.iter().map(|o| (o.clone(), o.clone())).collect(),
        morphism_map: l_mor,
    };
    // G : Kl -> E, x |-> T x, (f : x ~> y) |-> mu_y . T f
    let mut g_obj = BTreeMap::new();
    for o in &objs {
        g_obj.insert(o.clone(), t.on_obj(o).to_string());
    }
    let mut g_mor = BTreeMap::new();
    for (f, x, y) in &raw {
        let img = total
            .compose(m.mu.component(y), t.on_mor(f))
            .expect("composable");
        g_mor.insert(kl_mor(f, x, y), img.to_string());
    }
    let g_total = FunctorData {
        dom: kl.total.clone(),
        cod: total.clone(),
        object_map: g_obj,
        morphism_map: g_mor,
    };
    let left = OverfunctorData {
        dom: e.clone(),
        cod: kl.clone(),
        total_map: l_total.clone(),
        base_map: FunctorData::identity(&e.base),
    };
    let right = OverfunctorData {
        dom: kl.clone(),
        cod: e.clone(),
        total_map: g_total.clone(),
        base_map: FunctorData::identity(&e.base),
    };
    let unit = NatTransData {
        dom_functor: FunctorData::identity(total),
        cod_functor: l_total.clone(),
        components: m.eta.components.clone(),
    };
    let counit_components: BTreeMap<String, String> = objs
        .iter()
        .map(|x| {
            let idt = total.identity_of(t.on_obj(x)).to_string();
            (x.clone(), kl_mor(&idt, t.on_obj(x), x))
        })
        .collect();
    let counit = NatTransData {
        dom_functor: g_total.then(&l_total),
        cod_functor: FunctorData::identity(&kl.total),
        components: counit_components,
    };
    let unit = NatTransData {
        cod_functor: l_total.then(&g_total),
        ..unit
    };
    Adjunction {
        left,
        right,
        unit,
        counit,
    }
}

/// The lattice-times-group overcategory with fiberwise union as the
/// tensor and the bottom element as unit; strictly monoidal.
pub fn lattice2_monoidal_xg() -> MonoidalOvercategory {
    let ov = lattice_times_g();
    let total = &ov.total;
    let mut tensor_obj = BTreeMap::new();
    for o1 in total.objects() {
        for o2 in total.objects() {
            let (x1, _) = split_pair_id(o1).expect("pair");
            let (x2, _) = split_pair_id(o2).expect("pair");
            tensor_obj.insert(
                pair_id(o1, o2),
                pair_id(&lat_union(x1, x2), "g0"),
            );
        }
    }
    let mut tensor_mor = BTreeMap::new();
    for m1 in total.morphisms() {
        for m2 in total.morphisms() {
            if ov.arity_mor(&m1.id) != ov.arity_mor(&m2.id) {
                continue;
            }
            let gamma = ov.arity_mor(&m1.id).to_string();
            let (sx1, _) = split_pair_id(&m1.src).expect("pair");
            let (sx2, _) = split_pair_id(&m2.src).expect("pair");
            let (dx1, _) = split_pair_id(&m1.dst).expect("pair");
            let (dx2, _) = split_pair_id(&m2.dst).expect("pair");
            let le = lat_le(&lat_union(sx1, sx2), &lat_union(dx1, dx2));
            tensor_mor.insert(pair_id(&m1.id, &m2.id), pair_id(&le, &gamma));
        }
    }
    let unit_obj = BTreeMap::from([("g0".to_string(), pair_id("0", "g0"))]);
    let unit_mor = BTreeMap::from([
        ("e".to_string(), pair_id("id_0", "e")),
        ("s".to_string(), pair_id("id_0", "s")),
    ]);
    MonoidalOvercategory::strict(ov, tensor_obj, tensor_mor, unit_obj, unit_mor)
        .expect("lattice monoidal")
}

/// The group Z/2 as a one-object monoidal overcategory over the
/// terminal base, tensor the group multiplication.
pub fn z2_monoidal() -> MonoidalOvercategory {
    let ov = over_terminal(z2_monoid_cat());
    let mult = |u: &str, v: &str| if u == v { "id" } else { "s" };
    let tensor_obj = BTreeMap::from([(pair_id("m", "m"), "m".to_string())]);
    let mut tensor_mor = BTreeMap::new();
    for u in ["id", "s"] {
        for v in ["id", "s"] {
            tensor_mor.insert(pair_id(u, v), mult(u, v).to_string());
        }
    }
    let unit_obj = BTreeMap::from([("*".to_string(), "m".to_string())]);
    let unit_mor = BTreeMap::from([("id_*".to_string(), "id".to_string())]);
    MonoidalOvercategory::strict(ov, tensor_obj, tensor_mor, unit_obj, unit_mor)
        .expect("z2 monoidal")
}

/// Standard liberality witnesses for the lattice instance: trivial
/// coequalizer pairs in the vertical fiber and two composable chains.
pub fn lattice_liberality_witnesses(mo: &MonoidalOvercategory) -> LiberalityWitnesses {
    let v = |l: &str| pair_id(l, "e");
    LiberalityWitnesses {
        coequalizer_pairs: vec![
            (v("le_0_a"), v("le_0_a")),
            (v("id_ab"), v("id_ab")),
        ],
        chains: vec![
            vec![v("le_0_a"), v("le_a_ab")],
            vec![mo.ov.total.identity_of(&pair_id("0", "g0")).to_string()],
        ],
    }
}
