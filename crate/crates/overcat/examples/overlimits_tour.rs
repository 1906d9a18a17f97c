//! Walk through overlimits, overcolimits, K-(co)equalizers, and the
//! overcompleteness report on the bundled fixtures.
//!
//! Run with `cargo run --example overlimits_tour`.

use overcat::fixtures;
use overcat::limits::{self, KEqualizerResult, LimitResult};
use overcat::overcat::{enumerate_diagrams, Budget};
use overcat::shapes;

fn main() {
    let budget = Budget::default();
    let ov = fixtures::lattice_times_g();

    println!("== overcompleteness of the lattice x G fixture ==");
    let report = limits::overcompleteness_report(&ov, &budget);
    for v in &report.limits {
        println!(
            "  overlimits over shape {:<14} diagrams={:<3} all_exist={}",
            v.shape, v.diagrams, v.all_exist
        );
    }
    println!(
        "  overcomplete={} overcocomplete={} equivalence={} dual={}",
        report.overcomplete,
        report.overcocomplete,
        report.equivalence_holds,
        report.equivalence_dual_holds
    );

    println!("\n== a binary overproduct, explicitly ==");
    let shape = shapes::by_name("discrete-2").unwrap();
    let diag = enumerate_diagrams(&ov, &shape, &budget)
        .unwrap()
        .into_iter()
        .next()
        .expect("the fixture admits discrete-2 diagrams");
    match limits::overlimit(&ov, &diag) {
        LimitResult::Found(u) => {
            println!(
                "  apex {} over base morphism {}; {} overcones factor uniquely",
                u.cone.apex, u.cone.base_mor, u.overcone_count
            );
            assert!(limits::verify_universal_overcone(&ov, &diag, &u));
            println!("  independent re-verification: ok");
        }
        LimitResult::NotFound { witness } => println!("  not found: {witness:?}"),
    }
    match limits::overcolimit(&ov, &diag) {
        LimitResult::Found(u) => println!(
            "  dual overcolimit apex {} ({} dual overcones)",
            u.cone.apex, u.overcone_count
        ),
        LimitResult::NotFound { .. } => println!("  overcolimit not found"),
    }

    println!("\n== K-equalizers in the doubled-lift fixture ==");
    let doubled = fixtures::doubled_lift_overcat();
    let (f, g) = doubled
        .total
        .parallel_pairs()
        .into_iter()
        .find(|(f, g)| !doubled.total.is_identity(f) && !doubled.total.is_identity(g))
        .unwrap();
    match limits::k_equalizer(&doubled, &f, &g).unwrap() {
        KEqualizerResult::Found(e) => println!(
            "  K-equalizer of ({f}, {g}): object {} via {}",
            e.object, e.morphism
        ),
        KEqualizerResult::NotFound => println!("  no K-equalizer for ({f}, {g})"),
    }
    match limits::k_coequalizer(&doubled, &f, &g).unwrap() {
        KEqualizerResult::Found(e) => println!(
            "  K-coequalizer of ({f}, {g}): object {} via {}",
            e.object, e.morphism
        ),
        KEqualizerResult::NotFound => {
            println!("  no K-coequalizer for ({f}, {g}): the doubled lift obstructs it")
        }
    }

    println!("\n== split overforks from idempotents ==");
    let ov3 = fixtures::finset_times_g(3);
    let library = vec![(
        "identity".to_string(),
        overcat::overcat::OverfunctorData::identity(&ov3),
    )];
    let forks = fixtures::split_forks_from_idempotents(&ov3);
    println!("  {} split forks generated from idempotents", forks.len());
    let verdict = limits::check_split_overfork(&ov3, &forks[0], &library).unwrap();
    println!(
        "  first fork: split={} overcoequalizer={} preserved_by={:?}",
        verdict.is_split, verdict.is_overcoequalizer, verdict.preserved_by
    );
}
