//! Acceptance gate: one pass/fail line per criterion, all asserted at
//! the end so a single run reports every verdict.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use overcat::comma::{self, AdjunctionResult};
use overcat::fincat::{pair_id, CatBuilder, FinCat, MorRec, Violation};
use overcat::fixtures;
use overcat::freemon::{self, ChainStatus};
use overcat::functor::{FunctorData, NatTransData};
use overcat::instance::{
    enumerate_monoids, FinSetInstance, MonoidalInstance, Pointed, PointedObj, SetMor, SetObj,
};
use overcat::limits::{self, LimitResult};
use overcat::monad::{self, Overmonad};
use overcat::monoidal;
use overcat::overcat::{enumerate_diagrams, Budget, Overcategory, OverfunctorData};
use overcat::schema;
use overcat::shapes;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn run(&mut self, n: usize, name: &str, f: impl FnOnce() -> bool) {
        let start = Instant::now();
        let ok = f();
        println!(
            "criterion {n:2} ({name}): {} [{:.2?}]",
            if ok { "pass" } else { "FAIL" },
            start.elapsed()
        );
        if !ok {
            self.failures.push(format!("criterion {n} ({name})"));
        }
    }
}

fn corpus_categories() -> Vec<(String, FinCat)> {
    let mut out: Vec<(String, FinCat)> = vec![
        ("terminal".into(), fixtures::terminal_cat()),
        ("discrete2".into(), fixtures::discrete(2)),
        ("discrete3".into(), fixtures::discrete(3)),
        ("chain2".into(), fixtures::chain_poset(2)),
        ("chain3".into(), fixtures::chain_poset(3)),
        ("chain4".into(), fixtures::chain_poset(4)),
        ("z2".into(), fixtures::z2_monoid_cat()),
        ("finset2".into(), fixtures::finset_cat(2)),
        ("finset3".into(), fixtures::finset_cat(3)),
    ];
    out.push(("finsetxg2".into(), fixtures::finset_times_g(2).total));
    out.push(("latticexg".into(), fixtures::lattice_times_g().total));
    out.push(("topclosure".into(), fixtures::top_closure_overmonad().t.dom.total));
    out.push((
        "kleisli".into(),
        fixtures::kleisli_top_closure_adjunction().left.cod.total,
    ));
    out
}

fn corpus_functors() -> Vec<(String, FunctorData)> {
    let mut out = Vec::new();
    for (name, ov) in [
        ("finsetxg2", fixtures::finset_times_g(2)),
        ("finsetxg3", fixtures::finset_times_g(3)),
        ("latticexg", fixtures::lattice_times_g()),
        ("poset2", fixtures::poset_over_terminal(2)),
        ("poset3", fixtures::poset_over_terminal(3)),
        ("doubled", fixtures::doubled_lift_overcat()),
        ("fibers212", fixtures::discrete_fibers_overcat(&[2, 1, 2])),
    ] {
        out.push((format!("{name}.arity"), ov.arity));
    }
    out.push((
        "reflection".into(),
        fixtures::poset_reflection_overfunctor().total_map,
    ));
    out.push((
        "discrete2toterminal".into(),
        fixtures::discrete_two_to_terminal_overfunctor().total_map,
    ));
    out.push((
        "topclosure.T".into(),
        fixtures::top_closure_overmonad().t.total_map,
    ));
    let adj = fixtures::kleisli_top_closure_adjunction();
    out.push(("kleisli.L".into(), adj.left.total_map));
    out.push(("kleisli.G".into(), adj.right.total_map));
    out
}

/// Criterion 1: corpus validates, mutation fixtures are rejected with
/// the exact violated law.
fn kernel_laws() -> bool {
    let cats = corpus_categories();
    let funs = corpus_functors();
    if cats.len() < 12 || funs.len() < 10 {
        return false;
    }
    for (name, c) in &cats {
        if !c.validate().is_valid() {
            eprintln!("category {name} does not validate");
            return false;
        }
    }
    for (name, f) in &funs {
        if f.check_well_formed().is_err() || !f.validate().is_valid() {
            eprintln!("functor {name} does not validate");
            return false;
        }
    }

    // mutation: compose(g, f) pointing at a morphism with wrong endpoints
    let mut b = CatBuilder::new();
    b.object("0", "id0").object("1", "id1").object("2", "id2");
    b.morphism("f", "0", "1").morphism("g", "1", "2");
    b.composite("g", "f", "g");
    let broken = b.build().unwrap().validate();
    if !broken.violations.iter().any(|v| matches!(v, Violation::Closure { .. })) {
        return false;
    }

    // mutation: missing composite for a composable nonidentity pair
    let missing = FinCat::from_parts(
        vec!["0".into(), "1".into(), "2".into()],
        vec![
            MorRec { id: "id0".into(), src: "0".into(), dst: "0".into() },
            MorRec { id: "id1".into(), src: "1".into(), dst: "1".into() },
            MorRec { id: "id2".into(), src: "2".into(), dst: "2".into() },
            MorRec { id: "f".into(), src: "0".into(), dst: "1".into() },
            MorRec { id: "g".into(), src: "1".into(), dst: "2".into() },
            MorRec { id: "gf".into(), src: "0".into(), dst: "2".into() },
        ],
        [("0", "id0"), ("1", "id1"), ("2", "id2")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        [
            ("id0", "id0", "id0"), ("id1", "id1", "id1"), ("id2", "id2", "id2"),
            ("f", "id0", "f"), ("id1", "f", "f"),
            ("g", "id1", "g"), ("id2", "g", "g"),
            ("gf", "id0", "gf"), ("id2", "gf", "gf"),
        ]
        .into_iter()
        .map(|(g, f, h)| ((g.to_string(), f.to_string()), h.to_string()))
        .collect(),
    )
    .unwrap()
    .validate();
    if !missing.violations.iter().any(|v| {
        matches!(v, Violation::MissingComposite { g, f } if g == "g" && f == "f")
    }) {
        return false;
    }

    // mutation: left identity broken (id ∘ s forced to id)
    let left = FinCat::from_parts(
        vec!["m".into()],
        vec![
            MorRec { id: "id".into(), src: "m".into(), dst: "m".into() },
            MorRec { id: "s".into(), src: "m".into(), dst: "m".into() },
        ],
        [("m".to_string(), "id".to_string())].into_iter().collect(),
        [
            (("id", "id"), "id"), (("id", "s"), "id"), (("s", "id"), "s"), (("s", "s"), "id"),
        ]
        .into_iter()
        .map(|((g, f), h)| ((g.to_string(), f.to_string()), h.to_string()))
        .collect(),
    )
    .unwrap()
    .validate();
    if !left.violations.iter().any(|v| {
        matches!(v, Violation::LeftIdentity { morphism } if morphism == "s")
    }) {
        return false;
    }

    // mutation: functor sending an identity to a non-identity
    let z2 = fixtures::z2_monoid_cat();
    let mut bad = FunctorData::identity(&z2);
    bad.morphism_map.insert("id".into(), "s".into());
    if !bad.validate().violations.iter().any(|v| {
        matches!(v, Violation::FunctorIdentity { object } if object == "m")
    }) {
        return false;
    }

    // mutation: a naturality square broken on the chain poset
    let chain = fixtures::chain_poset(2);
    let idf = FunctorData::identity(&chain);
    let mut nat = NatTransData::identity(&idf);
    nat.components.insert("0".into(), "le_0_1".into());
    if !nat.validate().violations.iter().any(|v| {
        matches!(
            v,
            Violation::Naturality { .. } | Violation::ComponentEndpoints { .. }
        )
    }) {
        return false;
    }
    true
}

/// Criterion 2: every found over(co)limit passes independent
/// re-verification; the products-plus-equalizers equivalence holds.
fn overlimit_soundness() -> bool {
    let budget = Budget::default();
    let fixtures_list = [
        fixtures::lattice_times_g(),
        fixtures::poset_over_terminal(3),
        fixtures::doubled_lift_overcat(),
    ];
    for ov in &fixtures_list {
        let report = limits::overcompleteness_report(ov, &budget);
        if !report.equivalence_holds || !report.equivalence_dual_holds {
            return false;
        }
        for shape_name in ["empty", "discrete-1", "discrete-2", "discrete-3", "parallel-pair"] {
            let shape = shapes::by_name(shape_name).unwrap();
            let diagrams = match enumerate_diagrams(ov, &shape, &budget) {
                Ok(d) => d,
                Err(_) => return false,
            };
            for diag in diagrams {
                if let LimitResult::Found(u) = limits::overlimit(ov, &diag) {
                    if !limits::verify_universal_overcone(ov, &diag, &u) {
                        return false;
                    }
                }
                if let LimitResult::Found(u) = limits::overcolimit(ov, &diag) {
                    if !limits::verify_universal_overcone(&ov.opposite(), &diag.dual(), &u) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Inclusion of the size-capped FinSet x G overcategory into a larger
/// cap, as a same-base overfunctor.
fn finsetxg_inclusion(small: &Overcategory, large: &Overcategory) -> OverfunctorData {
    let total_map = FunctorData {
        dom: small.total.clone(),
        cod: large.total.clone(),
        object_map: small
            .total
            .objects()
            .iter()
            .map(|o| (o.clone(), o.clone()))
            .collect(),
        morphism_map: small
            .total
            .morphisms()
            .iter()
            .map(|m| (m.id.clone(), m.id.clone()))
            .collect(),
    };
    let f = OverfunctorData {
        dom: small.clone(),
        cod: large.clone(),
        total_map,
        base_map: FunctorData::identity(&small.base),
    };
    f.validate().expect("inclusion is a lawful overfunctor");
    f
}

/// Criterion 3: generated split overforks are certified overcoequalizers
/// and preserved by the overfunctor library.
fn split_overforks() -> bool {
    let ov2 = fixtures::finset_times_g(2);
    let ov3 = fixtures::finset_times_g(3);
    let mut count = 0usize;
    for (ov, library) in [
        (
            &ov2,
            vec![
                ("identity".to_string(), OverfunctorData::identity(&ov2)),
                ("inclusion".to_string(), finsetxg_inclusion(&ov2, &ov3)),
            ],
        ),
        (
            &ov3,
            vec![("identity".to_string(), OverfunctorData::identity(&ov3))],
        ),
    ] {
        for fork in fixtures::split_forks_from_idempotents(ov) {
            let verdict = match limits::check_split_overfork(ov, &fork, &library) {
                Ok(v) => v,
                Err(_) => return false,
            };
            if !verdict.is_split
                || !verdict.is_overcoequalizer
                || !verdict.preserved_by.values().all(|b| *b)
            {
                return false;
            }
            count += 1;
        }
    }
    count >= 20
}

/// Criterion 4: Freyd synthesis on the reflection fixture, the negative
/// discrete-2 witness, and the forward hypothesis check.
fn freyd_synthesis() -> bool {
    let budget = Budget::default();
    let reflection = fixtures::poset_reflection_overfunctor();
    let adj = match comma::synthesize_left_overadjoint(&reflection, &budget) {
        Ok(AdjunctionResult::Found(adj)) => adj,
        _ => return false,
    };
    if adj.left.total_map.on_obj("h") != "1" || !adj.check_hom_bijection() {
        return false;
    }
    let report = comma::freyd_hypotheses_report(&reflection, &budget);
    if !report.all_ok {
        return false;
    }
    match comma::synthesize_left_overadjoint(
        &fixtures::discrete_two_to_terminal_overfunctor(),
        &budget,
    ) {
        Ok(AdjunctionResult::NotFound { .. }) => true,
        _ => false,
    }
}

/// Criterion 5: weakly-initial-family criterion and direct overinitial
/// search agree on overcomplete fixtures with K-equalizers.
fn overinitial_lemma() -> bool {
    let budget = Budget::default();
    let mut fixtures_list: Vec<(Overcategory, String)> = (2..=5)
        .map(|n| (fixtures::poset_over_terminal(n), "*".to_string()))
        .collect();
    fixtures_list.push((fixtures::lattice_times_g(), "g0".to_string()));
    for (ov, g0) in &fixtures_list {
        let family: Vec<String> = ov
            .total
            .objects()
            .iter()
            .filter(|o| ov.arity_obj(o) == g0)
            .cloned()
            .collect();
        let report = match comma::check_overinitial_lemma(ov, g0, &family, &budget) {
            Ok(r) => r,
            Err(_) => return false,
        };
        if !report.forward_holds || !report.converse_holds {
            return false;
        }
        // agreement between the two independently computed sides
        let direct = comma::find_overinitial(ov, g0).found().is_some();
        if report.family_weakly_overinitial && !direct {
            return false;
        }
    }
    true
}

/// Criterion 6: Beck conditions agree everywhere; identity and
/// reflection are strictly monadic, the Kleisli fixture is not.
fn beck_coherence() -> bool {
    let budget = Budget::default();
    let identity_adj = monad::eilenberg_moore(&Overmonad::identity(
        &fixtures::poset_over_terminal(2),
    ))
    .unwrap()
    .adjunction;
    let reflection_adj = match comma::synthesize_left_overadjoint(
        &fixtures::poset_reflection_overfunctor(),
        &budget,
    ) {
        Ok(AdjunctionResult::Found(adj)) => *adj,
        _ => return false,
    };
    let kleisli = fixtures::kleisli_top_closure_adjunction();
    for (adj, expect_monadic) in [
        (&identity_adj, true),
        (&reflection_adj, true),
        (&kleisli, false),
    ] {
        let v = match monad::beck_verdict(adj) {
            Ok(v) => v,
            Err(_) => return false,
        };
        if !v.agreement || v.strictly_monadic != expect_monadic {
            return false;
        }
        if !expect_monadic && v.witness.is_none() && v.note.is_none() {
            return false;
        }
    }
    true
}

/// Criterion 7: E^T property suite on the top-closure and identity
/// overmonads.
fn em_inheritance() -> bool {
    let budget = Budget::default();
    let top = fixtures::top_closure_overmonad();
    let r = match monad::em_property_suite(&top, &budget) {
        Ok(r) => r,
        Err(_) => return false,
    };
    if !r.presentations_ok || !r.inheritance_ok || !r.prop23_equivalence {
        return false;
    }
    let id_monad = Overmonad::identity(&fixtures::lattice_times_g());
    let r = match monad::em_property_suite(&id_monad, &budget) {
        Ok(r) => r,
        Err(_) => return false,
    };
    r.base_overcomplete
        && r.em_overcomplete
        && r.em_k_equalizers
        && r.presentations_ok
        && r.inheritance_ok
        && r.prop23_equivalence
}

/// Pentagon and triangle coherence of an effective instance over all
/// objects drawn from subsets of a three-letter universe.
fn effective_coherence(inst: &FinSetInstance) -> bool {
    let universe = ["a", "b", "c"];
    let mut objects = Vec::new();
    for mask in 0..8u8 {
        let labels: Vec<&str> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, l)| *l)
            .collect();
        objects.push(SetObj::from_labels(&labels));
    }
    let unit = inst.unit();
    for x in &objects {
        for y in &objects {
            // triangle: (id_x (x) u_l(y)) ass(x, I, y) = u_r(x) (x) id_y
            let lhs = inst.compose(
                &inst.tensor_mor(&inst.identity(x), &inst.u_l(y)),
                &inst.ass(x, &unit, y),
            );
            let rhs = inst.tensor_mor(&inst.u_r(x), &inst.identity(y));
            if lhs != rhs {
                return false;
            }
            for z in &objects {
                for w in &objects {
                    let yz = inst.tensor_obj(y, z);
                    let zw = inst.tensor_obj(z, w);
                    let xy = inst.tensor_obj(x, y);
                    let lhs = inst.compose(&inst.ass(x, y, &zw), &inst.ass(&xy, z, w));
                    let rhs = inst.compose(
                        &inst.tensor_mor(&inst.identity(x), &inst.ass(y, z, w)),
                        &inst.compose(
                            &inst.ass(x, &yz, w),
                            &inst.tensor_mor(&inst.ass(x, y, z), &inst.identity(w)),
                        ),
                    );
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Criterion 8: monoidal coherence on both effective instances and the
/// table instance; slice/pointed re-validate; phi round-trips.
fn monoidal_coherence() -> bool {
    if !effective_coherence(&FinSetInstance::coproduct())
        || !effective_coherence(&FinSetInstance::cartesian())
    {
        return false;
    }
    let budget = Budget::default();
    let mo = fixtures::lattice2_monoidal_xg();
    if !monoidal::validate_monoidal_overcategory(&mo).is_valid() {
        return false;
    }
    let monoids = match monoidal::enumerate_overmonoids(&mo, &budget) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let first = match monoids.first() {
        Some(c) => c.clone(),
        None => return false,
    };
    let slice = match monoidal::slice_monoidal(&mo, &first) {
        Ok(s) => s,
        Err(_) => return false,
    };
    if !slice.strict_ok || !monoidal::validate_monoidal_overcategory(&slice.mo).is_valid() {
        return false;
    }
    let pointed = match monoidal::pointed_monoidal(&mo) {
        Ok(p) => p,
        Err(_) => return false,
    };
    if !monoidal::validate_monoidal_overcategory(&pointed.mo).is_valid() {
        return false;
    }
    match monoidal::phi_isomorphism(&mo, &budget) {
        Ok(r) => r.round_trip_ok && r.triangle_ok && r.issues.is_empty(),
        Err(_) => false,
    }
}

fn pointed_letters(labels: &[&str]) -> (Pointed<FinSetInstance>, PointedObj<SetObj, SetMor>) {
    let pt = Pointed::new(FinSetInstance::cartesian());
    let mut elems: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    elems.push("*".to_string());
    let obj = SetObj::new(elems);
    let point = SetMor::new(
        pt.base.unit(),
        obj.clone(),
        [("*".to_string(), "*".to_string())].into_iter().collect(),
    );
    (pt, PointedObj { obj, point })
}

/// Criterion 9: free-monoid chains against the independent oracles.
fn free_monoid_oracles() -> bool {
    // (a) coproduct stabilization with Mo(X) of the same size
    let inst = FinSetInstance::coproduct();
    for labels in [&[][..], &["a"][..], &["a", "b"][..], &["a", "b", "c"][..]] {
        let x = SetObj::from_labels(labels);
        let fm = match freemon::free_monoid(&inst, &x, 3) {
            Ok(fm) => fm,
            Err(_) => return false,
        };
        let stabilized = matches!(fm.chain.status, ChainStatus::Stabilized { at } if at <= 1);
        if !stabilized || fm.mo.len() != x.len() || !fm.law_issues.is_empty() {
            return false;
        }
        // (c) the multiplication law on the whole computed grid
        let monoid = match &fm.monoid {
            Some(m) => m.clone(),
            None => return false,
        };
        for ((n, m), composite) in &fm.partial_mul {
            let direct = inst.compose(
                &monoid.mul,
                &inst.tensor_mor(&fm.l[*n], &fm.l[*m]),
            );
            if direct != *composite {
                return false;
            }
        }
        for ((n, m), k) in &fm.grid.k {
            if *n == 1 && k != &fm.chain.q[*m] {
                return false;
            }
        }
    }

    // (b) pointed cartesian chains against the word oracle
    for labels in [&["a"][..], &["a", "b"][..], &["a", "b", "c"][..]] {
        let (pt, x) = pointed_letters(labels);
        let levels = if labels.len() == 3 { 3 } else { 4 };
        let chain = match freemon::build_graded_chain(&pt, &x, levels) {
            Ok(c) => c,
            Err(_) => return false,
        };
        let grid = match freemon::build_k_maps(&pt, &chain) {
            Ok(g) => g,
            Err(_) => return false,
        };
        if !freemon::verify_graded_laws(&pt, &chain, &grid).is_empty() {
            return false;
        }
        let report = freemon::word_oracle::check_against_chain(&pt, &x, &chain, &grid);
        if !report.ok {
            eprintln!("word oracle: {:?}", report.details);
            return false;
        }
        for (level, (engine, expected)) in report.sizes.iter().enumerate() {
            if engine != expected
                || *expected != freemon::word_oracle::expected_size(labels.len(), level)
            {
                return false;
            }
        }
        if !matches!(freemon::verify_unit_equation(&pt, &x, 3), Ok(true)) {
            return false;
        }
    }

    // (d) Results 1 and 2
    let from_c = SetObj::from_labels(&["u", "v"]);
    let to_c = SetObj::from_labels(&["w"]);
    let from = enumerate_monoids(&inst, &from_c).pop().unwrap();
    let to = enumerate_monoids(&inst, &to_c).pop().unwrap();
    let h = inst.hom(&from_c, &to_c).pop().unwrap();
    let x = SetObj::from_labels(&["p"]);
    let s = SetMor::new(
        x.clone(),
        from_c.clone(),
        [("p".to_string(), "u".to_string())].into_iter().collect(),
    );
    if !matches!(freemon::verify_result_one(&inst, &h, &from, &to, &x, &s, 3), Ok(true)) {
        return false;
    }
    matches!(
        freemon::verify_result_two(&inst, &SetObj::from_labels(&["a", "b"]), 3),
        Ok(true)
    )
}

/// Criterion 10: certificates are byte-identical across different
/// `--jobs` settings, checked on the real binary.
fn determinism() -> bool {
    let dir = tempfile::tempdir().unwrap();
    let ov_path = schema::write_overcategory_doc(dir.path(), "latticexg", &fixtures::lattice_times_g())
        .unwrap();
    let diag = limits::discrete_diagram(
        &fixtures::lattice_times_g(),
        &[&pair_id("a", "g0"), &pair_id("b", "g0")],
    )
    .unwrap();
    let diag_path = schema::write_diagram_doc(dir.path(), "pair", &diag).unwrap();
    let bin = env!("CARGO_BIN_EXE_overcat");
    let mut outputs: BTreeMap<&str, Vec<Vec<u8>>> = BTreeMap::new();
    for jobs in ["1", "4"] {
        for (name, args) in [
            ("completeness", vec!["completeness", ov_path.to_str().unwrap()]),
            (
                "overlimit",
                vec!["overlimit", ov_path.to_str().unwrap(), diag_path.to_str().unwrap()],
            ),
        ] {
            let out = Command::new(bin)
                .arg("--jobs")
                .arg(jobs)
                .args(&args)
                .output()
                .expect("binary runs");
            outputs.entry(name).or_default().push(out.stdout);
        }
    }
    outputs.values().all(|runs| runs.windows(2).all(|w| w[0] == w[1]))
}

#[test]
fn acceptance() {
    let mut gate = Gate { failures: Vec::new() };
    gate.run(1, "kernel laws", kernel_laws);
    gate.run(2, "over(co)limit soundness", overlimit_soundness);
    gate.run(3, "split overforks", split_overforks);
    gate.run(4, "Freyd synthesis", freyd_synthesis);
    gate.run(5, "overinitial lemma", overinitial_lemma);
    gate.run(6, "Beck verdict coherence", beck_coherence);
    gate.run(7, "E^T inheritance", em_inheritance);
    gate.run(8, "monoidal coherence", monoidal_coherence);
    gate.run(9, "free-monoid oracles", free_monoid_oracles);
    gate.run(10, "determinism", determinism);
    assert!(gate.failures.is_empty(), "failed: {:?}", gate.failures);
}
