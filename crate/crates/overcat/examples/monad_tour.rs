//! Overmonads end to end: validation, the over-Eilenberg-Moore
//! overcategory, the property suite, and Beck monadicity verdicts.
//!
//! Run with `cargo run --example monad_tour`.

use overcat::fixtures;
use overcat::monad::{self, Overmonad};
use overcat::overcat::Budget;

fn main() {
    let budget = Budget::default();

    println!("== the top-closure overmonad ==");
    let t = fixtures::top_closure_overmonad();
    let report = t.validate();
    println!("  monad laws: {}", if report.is_valid() { "ok" } else { "violated" });
    for issue in &report.issues {
        println!("    {issue}");
    }

    let em = monad::eilenberg_moore(&t).unwrap();
    println!(
        "  E^T has {} objects and {} morphisms",
        em.overcategory.total.objects().len(),
        em.overcategory.total.morphisms().len()
    );
    for alg in monad::overalgebras(&t) {
        println!("    overalgebra on {} via {}", alg.carrier, alg.structure);
    }

    let suite = monad::em_property_suite(&t, &budget).unwrap();
    println!(
        "  presentations={} inheritance={} prop-2.3 equivalence={}",
        suite.presentations_ok, suite.inheritance_ok, suite.prop23_equivalence
    );

    println!("\n== Beck verdicts ==");
    let cases = [
        (
            "E^T adjunction of the identity overmonad",
            monad::eilenberg_moore(&Overmonad::identity(&fixtures::poset_over_terminal(2)))
                .unwrap()
                .adjunction,
        ),
        (
            "Kleisli presentation of the top-closure overmonad",
            fixtures::kleisli_top_closure_adjunction(),
        ),
    ];
    for (name, adj) in cases {
        let v = monad::beck_verdict(&adj).unwrap();
        println!("  {name}:");
        println!(
            "    strictly monadic={} (K iso={} creation={}) over {} pairs; conditions agree={}",
            v.strictly_monadic, v.k_iso, v.creation_ok, v.pairs_checked, v.agreement
        );
        if let Some(w) = &v.witness {
            println!("    witness: {w}");
        }
        if let Some(n) = &v.note {
            println!("    note: {n}");
        }
    }
}
