//! The coequalizer-chain free-monoid construction in both effective
//! instances, checked against the word oracle.
//!
//! Run with `cargo run --example free_monoid_words`.

use overcat::freemon::{self, ChainStatus};
use overcat::instance::{FinSetInstance, MonoidalInstance, Pointed, PointedObj, SetMor, SetObj};

fn main() {
    println!("== (FinSet, disjoint union): chain stabilizes immediately ==");
    let inst = FinSetInstance::coproduct();
    let x = SetObj::from_labels(&["a", "b"]);
    let fm = freemon::free_monoid(&inst, &x, 4).unwrap();
    match fm.chain.status {
        ChainStatus::Stabilized { at } => println!("  stabilized at level {at}"),
        ChainStatus::Truncated { level } => println!("  truncated at level {level}"),
    }
    println!("  Mo(X) = {:?}", fm.mo);
    println!("  law issues: {:?}", fm.law_issues);

    println!("\n== (FinSet_*, smash-like cartesian): words appear level by level ==");
    let pt = Pointed::new(FinSetInstance::cartesian());
    let obj = SetObj::new(vec!["a".into(), "b".into(), "*".into()]);
    let point = SetMor::new(
        pt.base.unit(),
        obj.clone(),
        [("*".to_string(), "*".to_string())].into_iter().collect(),
    );
    let x = PointedObj { obj, point };
    let chain = freemon::build_graded_chain(&pt, &x, 4).unwrap();
    let grid = freemon::build_k_maps(&pt, &chain).unwrap();
    for (level, xn) in chain.x.iter().enumerate() {
        println!(
            "  X_{level}: {} elements (oracle expects {})",
            xn.obj.len(),
            freemon::word_oracle::expected_size(2, level)
        );
    }
    let report = freemon::word_oracle::check_against_chain(&pt, &x, &chain, &grid);
    println!("  word oracle agrees: {}", report.ok);
    let graded = freemon::verify_graded_laws(&pt, &chain, &grid);
    println!("  graded-law issues: {graded:?}");
    let unit_eq = freemon::verify_unit_equation(&pt, &x, 3).unwrap();
    println!("  unit equation (Result 3 surrogate): {unit_eq}");
}
