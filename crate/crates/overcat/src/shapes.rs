//! The catalog of diagram shapes supported by the limit searches: empty,
//! discrete, terminal, parallel pair, span, cospan, short chains.

use std::collections::BTreeMap;

use crate::fincat::{CatBuilder, FinCat};

pub fn empty() -> FinCat {
    FinCat::from_parts(Vec::new(), Vec::new(), BTreeMap::new(), BTreeMap::new())
        .expect("empty tables are well-formed")
}

pub fn terminal() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("*", "id_*");
    b.build().expect("terminal")
}

/// Discrete category on objects `d0 .. d{n-1}`.
pub fn discrete(n: usize) -> FinCat {
    let mut b = CatBuilder::new();
    for i in 0..n {
        b.object(&format!("d{i}"), &format!("id_d{i}"));
    }
    b.build().expect("discrete")
}

/// Two parallel arrows `top, bot : s -> t`.
pub fn parallel_pair() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("s", "id_s").object("t", "id_t");
    b.morphism("top", "s", "t").morphism("bot", "s", "t");
    b.build().expect("parallel pair")
}

/// Span `l <- m -> r`.
pub fn span() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("m", "id_m").object("l", "id_l").object("r", "id_r");
    b.morphism("left", "m", "l").morphism("right", "m", "r");
    b.build().expect("span")
}

/// Cospan `l -> m <- r`.
pub fn cospan() -> FinCat {
    let mut b = CatBuilder::new();
    b.object("m", "id_m").object("l", "id_l").object("r", "id_r");
    b.morphism("left", "l", "m").morphism("right", "r", "m");
    b.build().expect("cospan")
}

/// Chain `c0 -> c1 -> ... -> c{n-1}` with all composites.
pub fn chain(n: usize) -> FinCat {
    let mut b = CatBuilder::new();
    for i in 0..n {
        b.object(&format!("c{i}"), &format!("id_c{i}"));
    }
    for i in 0..n {
        for j in i + 1..n {
            b.morphism(&format!("a_{i}_{j}"), &format!("c{i}"), &format!("c{j}"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                b.composite(
                    &format!("a_{j}_{k}"),
                    &format!("a_{i}_{j}"),
                    &format!("a_{i}_{k}"),
                );
            }
        }
    }
    b.build().expect("chain")
}

/// Named shapes used by completeness reports, in the report order.
pub fn supported_shapes() -> Vec<(&'static str, FinCat)> {
    vec![
        ("empty", empty()),
        ("discrete-1", discrete(1)),
        ("discrete-2", discrete(2)),
        ("discrete-3", discrete(3)),
        ("parallel-pair", parallel_pair()),
        ("span", span()),
        ("cospan", cospan()),
        ("chain-2", chain(2)),
        ("chain-3", chain(3)),
    ]
}

pub fn by_name(name: &str) -> Option<FinCat> {
    supported_shapes()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
}
