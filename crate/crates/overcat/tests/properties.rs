//! Randomized invariants: canonical serialization, dualization, and
//! coproduct free-monoid chains over arbitrary small alphabets.

use proptest::prelude::*;

use overcat::certificate::{canonical_bytes, sha256_hex};
use overcat::fixtures;
use overcat::freemon::{self, ChainStatus};
use overcat::instance::{FinSetInstance, MonoidalInstance, SetObj};
use serde_json::{json, Map, Value};

fn small_label() -> impl Strategy<Value = String> {
    "[a-e][0-9]?"
}

proptest! {
    /// Canonical bytes ignore object key insertion order.
    #[test]
    fn canonical_bytes_sort_keys(
        entries in proptest::collection::btree_map(small_label(), 0u32..100, 1..8),
        seed in any::<u64>(),
    ) {
        let pairs: Vec<(String, u32)> = entries.into_iter().collect();
        let forward: Map<String, Value> = pairs
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let mut shuffled: Vec<(String, u32)> = pairs.clone();
        shuffled.rotate_left((seed as usize) % pairs.len().max(1));
        shuffled.reverse();
        let backward: Map<String, Value> = shuffled
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let a = canonical_bytes(&Value::Object(forward));
        let b = canonical_bytes(&Value::Object(backward));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(sha256_hex(&a), sha256_hex(&b));
    }

    /// The opposite construction is an involution on chain posets.
    #[test]
    fn opposite_is_involutive(n in 1usize..5) {
        let c = fixtures::chain_poset(n);
        prop_assert_eq!(c.opposite().opposite(), c.clone());
        prop_assert!(c.opposite().validate().is_valid());
    }

    /// In (FinSet, disjoint union) the free-monoid chain stabilizes at
    /// level 1 with Mo(X) isomorphic to X, for any alphabet.
    #[test]
    fn coproduct_chain_stabilizes(
        labels in proptest::collection::btree_set(small_label(), 0..5),
    ) {
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let x = SetObj::from_labels(&refs);
        let inst = FinSetInstance::coproduct();
        let fm = freemon::free_monoid(&inst, &x, 3).unwrap();
        let stabilized = matches!(fm.chain.status, ChainStatus::Stabilized { at } if at <= 1);
        prop_assert!(stabilized);
        prop_assert_eq!(fm.mo.len(), x.len());
        prop_assert!(fm.law_issues.is_empty());
    }

    /// Tensoring with the unit is the identity on objects in both
    /// effective instances.
    #[test]
    fn unit_is_strict_enough(
        labels in proptest::collection::btree_set(small_label(), 0..5),
    ) {
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let x = SetObj::from_labels(&refs);
        for inst in [FinSetInstance::coproduct(), FinSetInstance::cartesian()] {
            let u = inst.unit();
            let left = inst.u_l(&x);
            let right = inst.u_r(&x);
            prop_assert_eq!(left.dom.clone(), inst.tensor_obj(&u, &x));
            prop_assert_eq!(left.cod.clone(), x.clone());
            prop_assert_eq!(right.dom.clone(), inst.tensor_obj(&x, &u));
            prop_assert_eq!(right.cod.clone(), x.clone());
            // unitors are bijections
            prop_assert_eq!(left.dom.len(), x.len());
            prop_assert_eq!(right.dom.len(), x.len());
        }
    }
}
