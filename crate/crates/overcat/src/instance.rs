//! Effective monoidal instances: computation-backed categories where
//! objects are finite labeled sets and coequalizers are union-find
//! quotients with canonical minimal representatives.
//!
//! The `MonoidalInstance` trait is the capability record shared by the
//! free-monoid chain, the overmonoid enumeration, and the pointed/slice
//! constructions; `Pointed` and `Slice` are generic wrappers, so the same
//! chain code runs over (FinSet, ⊔, ∅), Pt(FinSet, ×, 1), and slices.
//! Because wrapper data (points, slice structures) does not travel with
//! bare morphisms, every operation takes its objects explicitly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fincat::{pair_id, split_pair_id};

/// The effective-category capability record. Morphism equality is table
/// equality; `hom` must enumerate deterministically.
pub trait MonoidalInstance {
    type Obj: Clone + Ord + Eq + std::fmt::Debug;
    type Mor: Clone + Ord + Eq + std::fmt::Debug;

    fn obj_label(&self, x: &Self::Obj) -> String;
    fn mor_desc(&self, f: &Self::Mor) -> String;

    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;

    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// u_l(X) : I ⊗ X -> X.
    fn u_l(&self, x: &Self::Obj) -> Self::Mor;
    /// u_r(X) : X ⊗ I -> X.
    fn u_r(&self, x: &Self::Obj) -> Self::Mor;
    /// ass(X,Y,Z) : (X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z).
    fn ass(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;

    fn initial(&self) -> Self::Obj;
    /// The unique morphism from the initial object.
    fn bang(&self, x: &Self::Obj) -> Self::Mor;

    /// Coequalizer of f, g : src ⇉ cod: quotient object and canonical epi.
    fn coequalizer(
        &self,
        src: &Self::Obj,
        cod: &Self::Obj,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Obj, Self::Mor);

    fn inverse(&self, dom: &Self::Obj, cod: &Self::Obj, f: &Self::Mor) -> Option<Self::Mor> {
        self.hom(cod, dom).into_iter().find(|g| {
            self.compose(g, f) == self.identity(dom) && self.compose(f, g) == self.identity(cod)
        })
    }

    fn is_iso(&self, dom: &Self::Obj, cod: &Self::Obj, f: &Self::Mor) -> bool {
        self.inverse(dom, cod, f).is_some()
    }

    /// u_l(X)⁻¹ : X -> I ⊗ X.
    fn u_l_inv(&self, x: &Self::Obj) -> Self::Mor {
        let ix = self.tensor_obj(&self.unit(), x);
        self.inverse(&ix, x, &self.u_l(x)).expect("unitor invertible")
    }

    /// u_r(X)⁻¹ : X -> X ⊗ I.
    fn u_r_inv(&self, x: &Self::Obj) -> Self::Mor {
        let xi = self.tensor_obj(x, &self.unit());
        self.inverse(&xi, x, &self.u_r(x)).expect("unitor invertible")
    }

    /// The unique u with u ∘ q = m for an epi q : X -> Q and m : X -> T;
    /// `None` when zero or several exist.
    fn factor_through_epi(
        &self,
        q_cod: &Self::Obj,
        m_cod: &Self::Obj,
        q: &Self::Mor,
        m: &Self::Mor,
    ) -> Option<Self::Mor> {
        let cands: Vec<Self::Mor> = self
            .hom(q_cod, m_cod)
            .into_iter()
            .filter(|u| self.compose(u, q) == *m)
            .collect();
        if cands.len() == 1 {
            cands.into_iter().next()
        } else {
            None
        }
    }
}

/// Exhaustive universality check of a claimed coequalizer q : cod -> q_obj
/// of f, g : src ⇉ cod, quantified over a finite probe set of targets.
pub fn verify_coequalizer<I: MonoidalInstance>(
    inst: &I,
    src: &I::Obj,
    cod: &I::Obj,
    f: &I::Mor,
    g: &I::Mor,
    q_obj: &I::Obj,
    q: &I::Mor,
) -> bool {
    if inst.compose(q, f) != inst.compose(q, g) {
        return false;
    }
    let mut targets = vec![q_obj.clone(), inst.unit(), inst.initial(), cod.clone()];
    targets.sort();
    targets.dedup();
    let _ = src;
    for t in &targets {
        for m in inst.hom(cod, t) {
            if inst.compose(&m, f) != inst.compose(&m, g) {
                continue;
            }
            let us: Vec<I::Mor> = inst
                .hom(q_obj, t)
                .into_iter()
                .filter(|u| inst.compose(u, q) == m)
                .collect();
            if us.len() != 1 {
                return false;
            }
        }
    }
    true
}

/// A finite labeled set, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetObj {
    pub elems: Vec<String>,
}

impl SetObj {
    pub fn new(mut elems: Vec<String>) -> SetObj {
        elems.sort();
        elems.dedup();
        SetObj { elems }
    }

    pub fn from_labels(labels: &[&str]) -> SetObj {
        SetObj::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// A function between labeled sets, as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetMor {
    pub dom: SetObj,
    pub cod: SetObj,
    pub map: BTreeMap<String, String>,
}

impl SetMor {
    pub fn new(dom: SetObj, cod: SetObj, map: BTreeMap<String, String>) -> SetMor {
        debug_assert!(dom.elems.iter().all(|e| map.contains_key(e)));
        debug_assert!(map.values().all(|v| cod.elems.contains(v)));
        SetMor { dom, cod, map }
    }

    pub fn apply(&self, e: &str) -> &str {
        &self.map[e]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TensorOp {
    Coproduct,
    Cartesian,
}

/// FinSet with either disjoint union or cartesian product as tensor.
/// Coproduct element labels are prefixed "0." / "1."; cartesian labels are
/// canonical pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSetInstance {
    pub op: TensorOp,
}

impl FinSetInstance {
    pub fn coproduct() -> FinSetInstance {
        FinSetInstance {
            op: TensorOp::Coproduct,
        }
    }

    pub fn cartesian() -> FinSetInstance {
        FinSetInstance {
            op: TensorOp::Cartesian,
        }
    }

    fn left_label(&self, e: &str) -> String {
        format!("0.{e}")
    }

    fn right_label(&self, e: &str) -> String {
        format!("1.{e}")
    }
}

impl MonoidalInstance for FinSetInstance {
    type Obj = SetObj;
    type Mor = SetMor;

    fn obj_label(&self, x: &SetObj) -> String {
        format!("{{{}}}", x.elems.join(","))
    }

    fn mor_desc(&self, f: &SetMor) -> String {
        let parts: Vec<String> = f.map.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        format!("[{}]", parts.join(","))
    }

    fn identity(&self, x: &SetObj) -> SetMor {
        SetMor::new(
            x.clone(),
            x.clone(),
            x.elems.iter().map(|e| (e.clone(), e.clone())).collect(),
        )
    }

    fn compose(&self, g: &SetMor, f: &SetMor) -> SetMor {
        debug_assert_eq!(f.cod, g.dom);
        SetMor::new(
            f.dom.clone(),
            g.cod.clone(),
            f.map
                .iter()
                .map(|(e, v)| (e.clone(), g.map[v].clone()))
                .collect(),
        )
    }

    fn hom(&self, x: &SetObj, y: &SetObj) -> Vec<SetMor> {
        if x.is_empty() {
            return vec![SetMor::new(x.clone(), y.clone(), BTreeMap::new())];
        }
        if y.is_empty() {
            return Vec::new();
        }
        let n = x.len();
        let k = y.len();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let map: BTreeMap<String, String> = x
                .elems
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), y.elems[idx[i]].clone()))
                .collect();
            out.push(SetMor::new(x.clone(), y.clone(), map));
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                idx[i] += 1;
                if idx[i] < k {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    fn unit(&self) -> SetObj {
        match self.op {
            TensorOp::Coproduct => SetObj::new(Vec::new()),
            TensorOp::Cartesian => SetObj::from_labels(&["*"]),
        }
    }

    fn tensor_obj(&self, x: &SetObj, y: &SetObj) -> SetObj {
        match self.op {
            TensorOp::Coproduct => SetObj::new(
                x.elems
                    .iter()
                    .map(|e| self.left_label(e))
                    .chain(y.elems.iter().map(|e| self.right_label(e)))
                    .collect(),
            ),
            TensorOp::Cartesian => SetObj::new(
                x.elems
                    .iter()
                    .flat_map(|a| y.elems.iter().map(move |b| pair_id(a, b)))
                    .collect(),
            ),
        }
    }

    fn tensor_mor(&self, f: &SetMor, g: &SetMor) -> SetMor {
        let dom = self.tensor_obj(&f.dom, &g.dom);
        let cod = self.tensor_obj(&f.cod, &g.cod);
        let map = match self.op {
            TensorOp::Coproduct => f
                .map
                .iter()
                .map(|(e, v)| (self.left_label(e), self.left_label(v)))
                .chain(
                    g.map
                        .iter()
                        .map(|(e, v)| (self.right_label(e), self.right_label(v))),
                )
                .collect(),
            TensorOp::Cartesian => f
                .dom
                .elems
                .iter()
                .flat_map(|a| {
                    g.dom
                        .elems
                        .iter()
                        .map(move |b| (pair_id(a, b), pair_id(f.apply(a), g.apply(b))))
                })
                .collect(),
        };
        SetMor::new(dom, cod, map)
    }

    fn u_l(&self, x: &SetObj) -> SetMor {
        let dom = self.tensor_obj(&self.unit(), x);
        let map = match self.op {
            TensorOp::Coproduct => x
                .elems
                .iter()
                .map(|e| (self.right_label(e), e.clone()))
                .collect(),
            TensorOp::Cartesian => x
                .elems
                .iter()
                .map(|e| (pair_id("*", e), e.clone()))
                .collect(),
        };
        SetMor::new(dom, x.clone(), map)
    }

    fn u_r(&self, x: &SetObj) -> SetMor {
        let dom = self.tensor_obj(x, &self.unit());
        let map = match self.op {
            TensorOp::Coproduct => x
                .elems
                .iter()
                .map(|e| (self.left_label(e), e.clone()))
                .collect(),
            TensorOp::Cartesian => x
                .elems
                .iter()
                .map(|e| (pair_id(e, "*"), e.clone()))
                .collect(),
        };
        SetMor::new(dom, x.clone(), map)
    }

    fn ass(&self, x: &SetObj, y: &SetObj, z: &SetObj) -> SetMor {
        let dom = self.tensor_obj(&self.tensor_obj(x, y), z);
        let cod = self.tensor_obj(x, &self.tensor_obj(y, z));
        let map = match self.op {
            TensorOp::Coproduct => {
                let mut m = BTreeMap::new();
                for a in &x.elems {
                    m.insert(self.left_label(&self.left_label(a)), self.left_label(a));
                }
                for b in &y.elems {
                    m.insert(
                        self.left_label(&self.right_label(b)),
                        self.right_label(&self.left_label(b)),
                    );
                }
                for c in &z.elems {
                    m.insert(self.right_label(c), self.right_label(&self.right_label(c)));
                }
                m
            }
            TensorOp::Cartesian => {
                let mut m = BTreeMap::new();
                for a in &x.elems {
                    for b in &y.elems {
                        for c in &z.elems {
                            m.insert(pair_id(&pair_id(a, b), c), pair_id(a, &pair_id(b, c)));
                        }
                    }
                }
                m
            }
        };
        SetMor::new(dom, cod, map)
    }

    fn initial(&self) -> SetObj {
        SetObj::new(Vec::new())
    }

    fn bang(&self, x: &SetObj) -> SetMor {
        SetMor::new(self.initial(), x.clone(), BTreeMap::new())
    }

    /// Direct bijection inversion; avoids enumerating hom sets.
    fn inverse(&self, dom: &SetObj, cod: &SetObj, f: &SetMor) -> Option<SetMor> {
        if dom.len() != cod.len() {
            return None;
        }
        let mut inv = BTreeMap::new();
        for (e, v) in &f.map {
            if inv.insert(v.clone(), e.clone()).is_some() {
                return None;
            }
        }
        if inv.len() != cod.len() {
            return None;
        }
        Some(SetMor::new(cod.clone(), dom.clone(), inv))
    }

    /// Direct factorization through a surjection; avoids enumerating hom
    /// sets. Returns None when q is not epi or m is not constant on its
    /// fibers.
    fn factor_through_epi(
        &self,
        q_cod: &SetObj,
        m_cod: &SetObj,
        q: &SetMor,
        m: &SetMor,
    ) -> Option<SetMor> {
        let mut table: BTreeMap<String, String> = BTreeMap::new();
        for (e, qe) in &q.map {
            let me = m.map[e].clone();
            if let Some(prev) = table.insert(qe.clone(), me.clone()) {
                if prev != me {
                    return None;
                }
            }
        }
        if table.len() != q_cod.len() {
            return None;
        }
        Some(SetMor::new(q_cod.clone(), m_cod.clone(), table))
    }

    fn coequalizer(
        &self,
        _src: &SetObj,
        cod: &SetObj,
        f: &SetMor,
        g: &SetMor,
    ) -> (SetObj, SetMor) {
        debug_assert_eq!(f.dom, g.dom);
        debug_assert_eq!(&f.cod, cod);
        let mut dsu = Dsu::new(&cod.elems);
        for e in &f.dom.elems {
            dsu.union(f.apply(e), g.apply(e));
        }
        let repr_map: BTreeMap<String, String> = cod
            .elems
            .iter()
            .map(|e| (e.clone(), dsu.canonical(e)))
            .collect();
        let q_obj = SetObj::new(repr_map.values().cloned().collect());
        let q = SetMor::new(cod.clone(), q_obj.clone(), repr_map);
        (q_obj, q)
    }
}

/// Union-find over string labels; the canonical representative of a class
/// is its lexicographically smallest member.
struct Dsu {
    parent: BTreeMap<String, String>,
}

impl Dsu {
    fn new(elems: &[String]) -> Dsu {
        Dsu {
            parent: elems.iter().map(|e| (e.clone(), e.clone())).collect(),
        }
    }

    fn find(&mut self, e: &str) -> String {
        let p = self.parent[e].clone();
        if p == e {
            return p;
        }
        let root = self.find(&p);
        self.parent.insert(e.to_string(), root.clone());
        root
    }

    fn union(&mut self, a: &str, b: &str) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // keep the lexicographically smaller label as the root
            let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(drop, keep);
        }
    }

    fn canonical(&mut self, e: &str) -> String {
        self.find(e)
    }
}

/// A pointed object (X, x : I -> X).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointedObj<O, M> {
    pub obj: O,
    pub point: M,
}

/// The pointed construction Pt(E): objects with a chosen point of the
/// unit, point-preserving morphisms, tensor (X ⊗ Y, (x ⊗ y) ∘ u_l⁻¹).
/// The unit (I, 1) is always initial here, which is the whole point of
/// the construction.
#[derive(Debug, Clone)]
pub struct Pointed<I: MonoidalInstance> {
    pub base: I,
}

impl<I: MonoidalInstance> Pointed<I> {
    pub fn new(base: I) -> Pointed<I> {
        Pointed { base }
    }

    pub fn make_obj(&self, obj: I::Obj, point: I::Mor) -> PointedObj<I::Obj, I::Mor> {
        PointedObj { obj, point }
    }
}

impl<I: MonoidalInstance> MonoidalInstance for Pointed<I> {
    type Obj = PointedObj<I::Obj, I::Mor>;
    type Mor = I::Mor;

    fn obj_label(&self, x: &Self::Obj) -> String {
        format!(
            "({}|{})",
            self.base.obj_label(&x.obj),
            self.base.mor_desc(&x.point)
        )
    }

    fn mor_desc(&self, f: &Self::Mor) -> String {
        self.base.mor_desc(f)
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.base.identity(&x.obj)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        self.base.compose(g, f)
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.base
            .hom(&x.obj, &y.obj)
            .into_iter()
            .filter(|f| self.base.compose(f, &x.point) == y.point)
            .collect()
    }

    fn unit(&self) -> Self::Obj {
        let i = self.base.unit();
        PointedObj {
            point: self.base.identity(&i),
            obj: i,
        }
    }

    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj {
        let obj = self.base.tensor_obj(&x.obj, &y.obj);
        let point = self.base.compose(
            &self.base.tensor_mor(&x.point, &y.point),
            &self.base.u_l_inv(&self.base.unit()),
        );
        PointedObj { obj, point }
    }

    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        self.base.tensor_mor(f, g)
    }

    fn u_l(&self, x: &Self::Obj) -> Self::Mor {
        self.base.u_l(&x.obj)
    }

    fn u_r(&self, x: &Self::Obj) -> Self::Mor {
        self.base.u_r(&x.obj)
    }

    fn ass(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor {
        self.base.ass(&x.obj, &y.obj, &z.obj)
    }

    fn initial(&self) -> Self::Obj {
        self.unit()
    }

    fn bang(&self, x: &Self::Obj) -> Self::Mor {
        x.point.clone()
    }

    // an inverse of a point-preserving iso preserves points, and a
    // factorization through a point-preserving epi of a point-preserving
    // map preserves points: delegate both to the base for efficiency
    fn inverse(&self, dom: &Self::Obj, cod: &Self::Obj, f: &Self::Mor) -> Option<Self::Mor> {
        self.base.inverse(&dom.obj, &cod.obj, f)
    }

    fn factor_through_epi(
        &self,
        q_cod: &Self::Obj,
        m_cod: &Self::Obj,
        q: &Self::Mor,
        m: &Self::Mor,
    ) -> Option<Self::Mor> {
        self.base.factor_through_epi(&q_cod.obj, &m_cod.obj, q, m)
    }

    fn coequalizer(
        &self,
        src: &Self::Obj,
        cod: &Self::Obj,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Obj, Self::Mor) {
        let (q_obj, q) = self.base.coequalizer(&src.obj, &cod.obj, f, g);
        let point = self.base.compose(&q, &cod.point);
        (PointedObj { obj: q_obj, point }, q)
    }
}

/// An internal monoid (C, m, e) of an instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InternalMonoid<O, M> {
    pub carrier: O,
    pub mul: M,
    pub unit: M,
}

/// Monoid laws via the instance's unitors and associator.
pub fn check_monoid<I: MonoidalInstance>(inst: &I, m: &InternalMonoid<I::Obj, I::Mor>) -> bool {
    let c = &m.carrier;
    let id_c = inst.identity(c);
    // m ∘ (e ⊗ id) = u_l and m ∘ (id ⊗ e) = u_r
    if inst.compose(&m.mul, &inst.tensor_mor(&m.unit, &id_c)) != inst.u_l(c) {
        return false;
    }
    if inst.compose(&m.mul, &inst.tensor_mor(&id_c, &m.unit)) != inst.u_r(c) {
        return false;
    }
    // m ∘ (m ⊗ id) = m ∘ (id ⊗ m) ∘ ass
    let lhs = inst.compose(&m.mul, &inst.tensor_mor(&m.mul, &id_c));
    let rhs = inst.compose(
        &m.mul,
        &inst.compose(&inst.tensor_mor(&id_c, &m.mul), &inst.ass(c, c, c)),
    );
    lhs == rhs
}

/// All monoid structures on a carrier, canonically ordered.
pub fn enumerate_monoids<I: MonoidalInstance>(
    inst: &I,
    carrier: &I::Obj,
) -> Vec<InternalMonoid<I::Obj, I::Mor>> {
    let cc = inst.tensor_obj(carrier, carrier);
    let mut out = Vec::new();
    for e in inst.hom(&inst.unit(), carrier) {
        for mul in inst.hom(&cc, carrier) {
            let cand = InternalMonoid {
                carrier: carrier.clone(),
                mul,
                unit: e.clone(),
            };
            if check_monoid(inst, &cand) {
                out.push(cand);
            }
        }
    }
    out.sort();
    out
}

/// Monoid morphisms: f with f ∘ m = m' ∘ (f ⊗ f) and f ∘ e = e'.
pub fn enumerate_monoid_morphisms<I: MonoidalInstance>(
    inst: &I,
    a: &InternalMonoid<I::Obj, I::Mor>,
    b: &InternalMonoid<I::Obj, I::Mor>,
) -> Vec<I::Mor> {
    inst.hom(&a.carrier, &b.carrier)
        .into_iter()
        .filter(|f| inst.compose(f, &a.unit) == b.unit)
        .filter(|f| inst.compose(f, &a.mul) == inst.compose(&b.mul, &inst.tensor_mor(f, f)))
        .collect()
}

/// φ of Prop 2.10: a monoid (C, m, e) becomes a monoid on the pointed
/// object (C, e) with the same tables.
pub fn phi_monoid<I: MonoidalInstance>(
    inst: &Pointed<I>,
    m: &InternalMonoid<I::Obj, I::Mor>,
) -> InternalMonoid<PointedObj<I::Obj, I::Mor>, I::Mor> {
    InternalMonoid {
        carrier: inst.make_obj(m.carrier.clone(), m.unit.clone()),
        mul: m.mul.clone(),
        unit: m.unit.clone(),
    }
}

/// The inverse of φ: forget the point.
pub fn phi_inverse_monoid<I: MonoidalInstance>(
    m: &InternalMonoid<PointedObj<I::Obj, I::Mor>, I::Mor>,
) -> InternalMonoid<I::Obj, I::Mor> {
    InternalMonoid {
        carrier: m.carrier.obj.clone(),
        mul: m.mul.clone(),
        unit: m.unit.clone(),
    }
}

/// An object of the slice E/C: (X, s : X -> C).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SliceObj<O, M> {
    pub obj: O,
    pub structure: M,
}

/// The slice over an internal monoid: tensor (X ⊗ Y, m ∘ (s ⊗ t)),
/// unit (I, e).
#[derive(Debug, Clone)]
pub struct Slice<I: MonoidalInstance> {
    pub base: I,
    pub monoid: InternalMonoid<I::Obj, I::Mor>,
}

impl<I: MonoidalInstance> Slice<I> {
    pub fn new(base: I, monoid: InternalMonoid<I::Obj, I::Mor>) -> Slice<I> {
        debug_assert!(check_monoid(&base, &monoid));
        Slice { base, monoid }
    }

    pub fn make_obj(&self, obj: I::Obj, structure: I::Mor) -> SliceObj<I::Obj, I::Mor> {
        SliceObj { obj, structure }
    }
}

impl<I: MonoidalInstance> MonoidalInstance for Slice<I> {
    type Obj = SliceObj<I::Obj, I::Mor>;
    type Mor = I::Mor;

    fn obj_label(&self, x: &Self::Obj) -> String {
        format!(
            "({}|{})",
            self.base.obj_label(&x.obj),
            self.base.mor_desc(&x.structure)
        )
    }

    fn mor_desc(&self, f: &Self::Mor) -> String {
        self.base.mor_desc(f)
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.base.identity(&x.obj)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        self.base.compose(g, f)
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.base
            .hom(&x.obj, &y.obj)
            .into_iter()
            .filter(|f| self.base.compose(&y.structure, f) == x.structure)
            .collect()
    }

    fn unit(&self) -> Self::Obj {
        SliceObj {
            obj: self.base.unit(),
            structure: self.monoid.unit.clone(),
        }
    }

    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj {
        SliceObj {
            obj: self.base.tensor_obj(&x.obj, &y.obj),
            structure: self.base.compose(
                &self.monoid.mul,
                &self.base.tensor_mor(&x.structure, &y.structure),
            ),
        }
    }

    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        self.base.tensor_mor(f, g)
    }

    fn u_l(&self, x: &Self::Obj) -> Self::Mor {
        self.base.u_l(&x.obj)
    }

    fn u_r(&self, x: &Self::Obj) -> Self::Mor {
        self.base.u_r(&x.obj)
    }

    fn ass(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor {
        self.base.ass(&x.obj, &y.obj, &z.obj)
    }

    fn initial(&self) -> Self::Obj {
        SliceObj {
            obj: self.base.initial(),
            structure: self.base.bang(&self.monoid.carrier),
        }
    }

    fn bang(&self, x: &Self::Obj) -> Self::Mor {
        self.base.bang(&x.obj)
    }

    fn inverse(&self, dom: &Self::Obj, cod: &Self::Obj, f: &Self::Mor) -> Option<Self::Mor> {
        // the inverse of an iso over C is automatically over C
        self.base.inverse(&dom.obj, &cod.obj, f)
    }

    fn factor_through_epi(
        &self,
        q_cod: &Self::Obj,
        m_cod: &Self::Obj,
        q: &Self::Mor,
        m: &Self::Mor,
    ) -> Option<Self::Mor> {
        self.base.factor_through_epi(&q_cod.obj, &m_cod.obj, q, m)
    }

    fn coequalizer(
        &self,
        src: &Self::Obj,
        cod: &Self::Obj,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Obj, Self::Mor) {
        let (q_obj, q) = self.base.coequalizer(&src.obj, &cod.obj, f, g);
        let structure = self
            .base
            .factor_through_epi(&q_obj, &self.monoid.carrier, &q, &cod.structure)
            .expect("slice structure descends along the quotient");
        (
            SliceObj {
                obj: q_obj,
                structure,
            },
            q,
        )
    }
}

/// Split a cartesian pair element label.
pub fn split_pair_label(label: &str) -> Option<(&str, &str)> {
    split_pair_id(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt_obj(
        pt: &Pointed<FinSetInstance>,
        labels: &[&str],
        point: &str,
    ) -> PointedObj<SetObj, SetMor> {
        let obj = SetObj::from_labels(labels);
        let p = SetMor::new(
            pt.base.unit(),
            obj.clone(),
            [("*".to_string(), point.to_string())].into_iter().collect(),
        );
        pt.make_obj(obj, p)
    }

    #[test]
    fn coproduct_unitors_and_associator_are_isos() {
        let inst = FinSetInstance::coproduct();
        let x = SetObj::from_labels(&["a", "b"]);
        let y = SetObj::from_labels(&["c"]);
        let z = SetObj::from_labels(&["d"]);
        let i = inst.unit();
        assert!(inst.is_iso(&inst.tensor_obj(&i, &x), &x, &inst.u_l(&x)));
        assert!(inst.is_iso(&inst.tensor_obj(&x, &i), &x, &inst.u_r(&x)));
        let assoc = inst.ass(&x, &y, &z);
        let dom = inst.tensor_obj(&inst.tensor_obj(&x, &y), &z);
        let cod = inst.tensor_obj(&x, &inst.tensor_obj(&y, &z));
        assert!(inst.is_iso(&dom, &cod, &assoc));
    }

    #[test]
    fn cartesian_triangle_and_pentagon_on_samples() {
        let inst = FinSetInstance::cartesian();
        let x = SetObj::from_labels(&["a", "b"]);
        let y = SetObj::from_labels(&["c"]);
        let z = SetObj::from_labels(&["d", "e"]);
        let w = SetObj::from_labels(&["f"]);
        // triangle: (id ⊗ u_l) ∘ ass = u_r ⊗ id on (X ⊗ I) ⊗ Y
        let i = inst.unit();
        let lhs = inst.compose(
            &inst.tensor_mor(&inst.identity(&x), &inst.u_l(&y)),
            &inst.ass(&x, &i, &y),
        );
        let rhs = inst.tensor_mor(&inst.u_r(&x), &inst.identity(&y));
        assert_eq!(lhs, rhs);
        // pentagon on (w, x, y, z)
        let lhs = inst.compose(
            &inst.ass(&w, &x, &inst.tensor_obj(&y, &z)),
            &inst.ass(&inst.tensor_obj(&w, &x), &y, &z),
        );
        let rhs = inst.compose(
            &inst.tensor_mor(&inst.identity(&w), &inst.ass(&x, &y, &z)),
            &inst.compose(
                &inst.ass(&w, &inst.tensor_obj(&x, &y), &z),
                &inst.tensor_mor(&inst.ass(&w, &x, &y), &inst.identity(&z)),
            ),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coequalizer_of_id_and_swap_collapses() {
        let inst = FinSetInstance::coproduct();
        let two = SetObj::from_labels(&["x", "y"]);
        let id = inst.identity(&two);
        let swap = SetMor::new(
            two.clone(),
            two.clone(),
            [("x", "y"), ("y", "x")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        );
        let (q_obj, q) = inst.coequalizer(&two, &two, &id, &swap);
        assert_eq!(q_obj.len(), 1);
        assert_eq!(q_obj.elems[0], "x");
        assert!(verify_coequalizer(&inst, &two, &two, &id, &swap, &q_obj, &q));
    }

    #[test]
    fn coproduct_monoid_structures_are_unique() {
        let inst = FinSetInstance::coproduct();
        for labels in [&["a"][..], &["a", "b"][..], &["a", "b", "c"][..]] {
            let carrier = SetObj::from_labels(labels);
            let monoids = enumerate_monoids(&inst, &carrier);
            assert_eq!(monoids.len(), 1, "carrier {labels:?}");
        }
    }

    #[test]
    fn cartesian_two_element_carrier_has_two_monoids() {
        let inst = FinSetInstance::cartesian();
        let carrier = SetObj::from_labels(&["a", "e"]);
        let monoids = enumerate_monoids(&inst, &carrier);
        // per choice of unit: the group Z/2 or the absorbing element,
        // and either element can serve as the unit
        assert_eq!(monoids.len(), 4);
    }

    #[test]
    fn coproduct_monoid_morphisms_are_all_functions() {
        // /Mon(FinSet, ⊔) ≅ FinSet: with unique structures, every
        // function is a monoid morphism
        let inst = FinSetInstance::coproduct();
        let a = SetObj::from_labels(&["a", "b"]);
        let b = SetObj::from_labels(&["c", "d", "e"]);
        let ma = enumerate_monoids(&inst, &a).pop().unwrap();
        let mb = enumerate_monoids(&inst, &b).pop().unwrap();
        let morphs = enumerate_monoid_morphisms(&inst, &ma, &mb);
        assert_eq!(morphs.len(), inst.hom(&a, &b).len());
    }

    #[test]
    fn pointed_unit_is_initial() {
        let pt = Pointed::new(FinSetInstance::cartesian());
        let x = pt_obj(&pt, &["*", "a"], "*");
        let from_unit = pt.hom(&pt.unit(), &x);
        assert_eq!(from_unit.len(), 1);
        assert_eq!(from_unit[0], pt.bang(&x));
    }

    #[test]
    fn pointed_tensor_point_is_the_pair_of_points() {
        let pt = Pointed::new(FinSetInstance::cartesian());
        let x = pt_obj(&pt, &["*", "a"], "*");
        let xx = pt.tensor_obj(&x, &x);
        assert_eq!(xx.point.apply("*"), pair_id("*", "*"));
    }

    #[test]
    fn phi_round_trips_and_preserves_monoidhood() {
        let inst = FinSetInstance::cartesian();
        let pt = Pointed::new(inst);
        let carrier = SetObj::from_labels(&["a", "e"]);
        for m in enumerate_monoids(&inst, &carrier) {
            let image = phi_monoid(&pt, &m);
            assert!(check_monoid(&pt, &image), "phi image not a monoid");
            assert_eq!(phi_inverse_monoid::<FinSetInstance>(&image), m);
        }
    }

    #[test]
    fn slice_tensor_structure_is_m_after_pair() {
        let inst = FinSetInstance::coproduct();
        let c = SetObj::from_labels(&["u", "v"]);
        let monoid = enumerate_monoids(&inst, &c).pop().unwrap();
        let slice = Slice::new(inst, monoid.clone());
        let x_obj = SetObj::from_labels(&["p"]);
        let s = SetMor::new(
            x_obj.clone(),
            c.clone(),
            [("p".to_string(), "u".to_string())].into_iter().collect(),
        );
        let x = slice.make_obj(x_obj, s);
        let xx = slice.tensor_obj(&x, &x);
        let expected = inst.compose(&monoid.mul, &inst.tensor_mor(&x.structure, &x.structure));
        assert_eq!(xx.structure, expected);
    }

    #[test]
    fn slice_unit_is_initial_for_the_coproduct_instance() {
        let inst = FinSetInstance::coproduct();
        let c = SetObj::from_labels(&["u"]);
        let monoid = enumerate_monoids(&inst, &c).pop().unwrap();
        let slice = Slice::new(inst, monoid);
        assert_eq!(slice.unit(), slice.initial());
    }
}
