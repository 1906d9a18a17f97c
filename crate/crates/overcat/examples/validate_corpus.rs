//! Validate every bundled category, overcategory, and overfunctor
//! fixture and print a one-line report per item.
//!
//! Run with `cargo run --example validate_corpus`.

use overcat::fincat::FinCat;
use overcat::fixtures;
use overcat::overcat::Overcategory;

fn report_cat(name: &str, c: &FinCat) {
    let r = c.validate();
    println!(
        "category    {name:<22} objects={:<3} morphisms={:<4} {}",
        c.objects().len(),
        c.morphisms().len(),
        if r.is_valid() { "ok" } else { "INVALID" }
    );
    for v in &r.violations {
        println!("    violation: {v}");
    }
}

fn report_over(name: &str, ov: &Overcategory) {
    let ok = ov.arity.validate().is_valid()
        && ov.total.validate().is_valid()
        && ov.base.validate().is_valid();
    println!(
        "overcategory {name:<21} total={:<4} base={:<3} {}",
        ov.total.morphisms().len(),
        ov.base.morphisms().len(),
        if ok { "ok" } else { "INVALID" }
    );
}

fn main() {
    report_cat("terminal", &fixtures::terminal_cat());
    report_cat("discrete2", &fixtures::discrete(2));
    report_cat("chain3", &fixtures::chain_poset(3));
    report_cat("z2", &fixtures::z2_monoid_cat());
    report_cat("finset2", &fixtures::finset_cat(2));
    report_cat("finset3", &fixtures::finset_cat(3));

    report_over("finsetxg2", &fixtures::finset_times_g(2));
    report_over("finsetxg3", &fixtures::finset_times_g(3));
    report_over("latticexg", &fixtures::lattice_times_g());
    report_over("poset3", &fixtures::poset_over_terminal(3));
    report_over("doubled", &fixtures::doubled_lift_overcat());
    report_over("fibers212", &fixtures::discrete_fibers_overcat(&[2, 1, 2]));

    for (name, f) in [
        ("reflection", fixtures::poset_reflection_overfunctor()),
        (
            "discrete2_to_terminal",
            fixtures::discrete_two_to_terminal_overfunctor(),
        ),
    ] {
        println!(
            "overfunctor {name:<22} {}",
            if f.validate().is_ok() { "ok" } else { "INVALID" }
        );
    }
}
