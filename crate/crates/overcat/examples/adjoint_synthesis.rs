//! Synthesize a left overadjoint by the comma-overcategory route:
//! build (B down F), find an overinitial object in every fiber, and
//! assemble the unit. Includes a genuinely negative case.
//!
//! Run with `cargo run --example adjoint_synthesis`.

use overcat::comma::{self, AdjunctionResult, OverinitialResult};
use overcat::fixtures;
use overcat::overcat::Budget;

fn main() {
    let budget = Budget::default();

    println!("== hypotheses for the reflection overfunctor ==");
    let reflection = fixtures::poset_reflection_overfunctor();
    let report = comma::freyd_hypotheses_report(&reflection, &budget);
    println!(
        "  domain overcomplete={} K-equalizers={}",
        report.domain_overcomplete, report.domain_k_equalizers
    );
    for p in &report.limit_preservation {
        println!("  preserves {:<14} {}", p.shape, p.preserved);
    }
    println!("  preserves K-equalizers: {}", report.k_equalizer_preservation.preserved);

    println!("\n== synthesis ==");
    match comma::synthesize_left_overadjoint(&reflection, &budget).unwrap() {
        AdjunctionResult::Found(adj) => {
            println!("  left overadjoint found:");
            for (b, lb) in &adj.left.total_map.object_map {
                println!("    L({b}) = {lb}");
            }
            println!("  triangle identities: {}", adj.check_triangles());
            println!("  hom bijection: {}", adj.check_hom_bijection());
        }
        AdjunctionResult::NotFound { witness_b, witness } => {
            println!("  no left overadjoint; stuck at {witness_b}: {witness:?}");
        }
    }

    println!("\n== a functor with no left overadjoint ==");
    let no_adjoint = fixtures::discrete_two_to_terminal_overfunctor();
    match comma::synthesize_left_overadjoint(&no_adjoint, &budget).unwrap() {
        AdjunctionResult::Found(_) => println!("  unexpectedly found one"),
        AdjunctionResult::NotFound { witness_b, witness } => {
            println!("  none exists; the comma fiber over {witness_b} has no overinitial object");
            println!("  witness: {witness:?}");
        }
    }

    println!("\n== overinitial objects directly ==");
    let ov = fixtures::lattice_times_g();
    match comma::find_overinitial(&ov, "g0") {
        OverinitialResult::Found { object } => {
            println!("  overinitial object over g0: {object}")
        }
        OverinitialResult::NotFound { witness } => println!("  none; witness {witness:?}"),
    }
    let family: Vec<String> = ov
        .total
        .objects()
        .iter()
        .filter(|o| ov.arity_obj(o) == "g0")
        .cloned()
        .collect();
    let lemma = comma::check_overinitial_lemma(&ov, "g0", &family, &budget).unwrap();
    println!(
        "  weakly-overinitial-family lemma: forward={} converse={}",
        lemma.forward_holds, lemma.converse_holds
    );
}
