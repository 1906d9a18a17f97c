//! Monoidal overcategories: validation, overmonoids, the slice and
//! pointed constructions, the phi isomorphism, and liberality on
//! explicit witnesses.
//!
//! Run with `cargo run --example monoidal_tour`.

use overcat::fixtures;
use overcat::monoidal;
use overcat::overcat::Budget;

fn main() {
    let budget = Budget::default();
    let mo = fixtures::lattice2_monoidal_xg();

    println!("== the lattice x G monoidal overcategory ==");
    let report = monoidal::validate_monoidal_overcategory(&mo);
    println!("  coherence: {}", if report.is_valid() { "ok" } else { "violated" });
    for (fiber, ok) in &report.fiber_monoidal {
        println!("  fiber over {fiber}: monoidal={ok}");
    }

    let monoids = monoidal::enumerate_overmonoids(&mo, &budget).unwrap();
    println!("\n== {} overmonoids found ==", monoids.len());
    for m in &monoids {
        println!("  carrier {} mul {} unit {}", m.c, m.m, m.e);
    }

    let first = monoids.first().expect("the fixture has an overmonoid");
    let slice = monoidal::slice_monoidal(&mo, first).unwrap();
    println!(
        "\n== slice over ({}, {}, {}) ==",
        first.c, first.m, first.e
    );
    println!(
        "  slice is monoidal: {}; forgetful is strict: {}",
        monoidal::validate_monoidal_overcategory(&slice.mo).is_valid(),
        slice.strict_ok
    );

    let pointed = monoidal::pointed_monoidal(&mo).unwrap();
    println!("\n== pointed overcategory Pt(E) ==");
    println!(
        "  Pt(E) is monoidal: {}; unit fiber initiality: {:?}",
        monoidal::validate_monoidal_overcategory(&pointed.mo).is_valid(),
        pointed.unit_fiber_initial
    );

    let phi = monoidal::phi_isomorphism(&mo, &budget).unwrap();
    println!("\n== phi: Mon(E) =~ Mon(Pt(E)) ==");
    println!(
        "  round trip ok={} forgetful triangle ok={}",
        phi.round_trip_ok, phi.triangle_ok
    );

    let witnesses = fixtures::lattice_liberality_witnesses(&mo);
    let lib = monoidal::liberality_report(&mo, &witnesses);
    println!("\n== liberality on explicit witnesses ==");
    for v in &lib.verdicts {
        println!("  {}: {}", v.witness, if v.ok { "preserved" } else { "NOT preserved" });
    }
    println!(
        "  liberal on the witness set: {} ({})",
        lib.liberal_on_witnesses(),
        lib.budget_note
    );
}
