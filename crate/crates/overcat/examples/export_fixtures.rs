//! Export the bundled fixture corpus as JSON documents under
//! `fixtures/` at the repository root, ready for the `overcat` CLI.
//!
//! Run with `cargo run --example export_fixtures`.

use std::fs;
use std::path::Path;

use overcat::fixtures;
use overcat::limits;
use overcat::schema;

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");

    let cats = root.join("cats");
    fs::create_dir_all(&cats).expect("create fixtures/cats");
    schema::write_fincat_doc(&cats, "terminal", &fixtures::terminal_cat()).unwrap();
    schema::write_fincat_doc(&cats, "discrete2", &fixtures::discrete(2)).unwrap();
    schema::write_fincat_doc(&cats, "chain2", &fixtures::chain_poset(2)).unwrap();
    schema::write_fincat_doc(&cats, "chain3", &fixtures::chain_poset(3)).unwrap();
    schema::write_fincat_doc(&cats, "z2", &fixtures::z2_monoid_cat()).unwrap();
    schema::write_fincat_doc(&cats, "finset2", &fixtures::finset_cat(2)).unwrap();
    schema::write_fincat_doc(&cats, "finset3", &fixtures::finset_cat(3)).unwrap();

    let overcats = root.join("overcats");
    fs::create_dir_all(&overcats).expect("create fixtures/overcats");
    schema::write_overcategory_doc(&overcats, "finsetxg2", &fixtures::finset_times_g(2)).unwrap();
    schema::write_overcategory_doc(&overcats, "finsetxg3", &fixtures::finset_times_g(3)).unwrap();
    schema::write_overcategory_doc(&overcats, "latticexg", &fixtures::lattice_times_g()).unwrap();
    schema::write_overcategory_doc(&overcats, "poset2", &fixtures::poset_over_terminal(2)).unwrap();
    schema::write_overcategory_doc(&overcats, "poset3", &fixtures::poset_over_terminal(3)).unwrap();
    schema::write_overcategory_doc(&overcats, "doubled", &fixtures::doubled_lift_overcat()).unwrap();
    schema::write_overcategory_doc(
        &overcats,
        "fibers212",
        &fixtures::discrete_fibers_overcat(&[2, 1, 2]),
    )
    .unwrap();

    let diagrams = root.join("diagrams");
    fs::create_dir_all(&diagrams).expect("create fixtures/diagrams");
    let lat = fixtures::lattice_times_g();
    let pair = limits::discrete_diagram(
        &lat,
        &[
            &overcat::fincat::pair_id("a", "g0"),
            &overcat::fincat::pair_id("b", "g0"),
        ],
    )
    .unwrap();
    schema::write_diagram_doc(&diagrams, "lattice_pair", &pair).unwrap();
    let doubled = fixtures::doubled_lift_overcat();
    let (f, g) = doubled
        .total
        .parallel_pairs()
        .into_iter()
        .find(|(f, g)| !doubled.total.is_identity(f) && !doubled.total.is_identity(g))
        .expect("the doubled fixture has a non-identity parallel pair");
    let fork = limits::parallel_pair_diagram(&doubled, f, g).unwrap();
    schema::write_diagram_doc(&diagrams, "doubled_fork", &fork).unwrap();

    let functors = root.join("functors");
    fs::create_dir_all(&functors).expect("create fixtures/functors");
    schema::write_overfunctor_doc(
        &functors,
        "reflection",
        &fixtures::poset_reflection_overfunctor(),
    )
    .unwrap();
    schema::write_overfunctor_doc(
        &functors,
        "discrete2_to_terminal",
        &fixtures::discrete_two_to_terminal_overfunctor(),
    )
    .unwrap();

    let monads = root.join("monads");
    fs::create_dir_all(&monads).expect("create fixtures/monads");
    schema::write_overmonad_doc(&monads, "top_closure", &fixtures::top_closure_overmonad())
        .unwrap();

    let adjunctions = root.join("adjunctions");
    fs::create_dir_all(&adjunctions).expect("create fixtures/adjunctions");
    schema::write_adjunction_doc(
        &adjunctions,
        "kleisli_top_closure",
        &fixtures::kleisli_top_closure_adjunction(),
    )
    .unwrap();

    let monoidal = root.join("monoidal");
    fs::create_dir_all(&monoidal).expect("create fixtures/monoidal");
    let mo = fixtures::lattice2_monoidal_xg();
    schema::write_monoidal_doc(&monoidal, "latticexg", &mo).unwrap();
    let witnesses = fixtures::lattice_liberality_witnesses(&mo);
    fs::write(
        monoidal.join("lattice_witnesses.json"),
        serde_json::to_string_pretty(&witnesses).unwrap() + "\n",
    )
    .unwrap();

    println!("fixture corpus written to {}", root.display());
}
