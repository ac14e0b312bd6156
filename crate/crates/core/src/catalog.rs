//! Built-in ring catalog: a fixed registry of named constructions plus
//! seeded random structure-constant rings for fuzzing the invariants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::construct;
use crate::ring::{make_ring, FiniteRing, RingSpec};

pub const DEFAULT_CATALOG_SEED: u64 = 0x5249_4e47_434f_5645;

/// The named catalog, in registry order. Every entry is a valid DSL string
/// for `construct` and builds a ring of order at most 256.
pub const NAMED: &[&str] = &[
    "F(2)",
    "F(3)",
    "F(4)",
    "F(5)",
    "F(7)",
    "F(8)",
    "F(9)",
    "F(16)",
    "F(25)",
    "F(27)",
    "Zmod(4)",
    "Zmod(6)",
    "Zmod(8)",
    "Zmod(9)",
    "Zmod(12)",
    "Zmod(16)",
    "Zmod(27)",
    "Prod(F(2),F(2))",
    "Prod(F(2),F(2),F(2))",
    "Prod(F(3),F(3))",
    "Prod(F(3),F(3),F(3))",
    "Prod(F(4),F(4))",
    "Prod(F(2),F(4))",
    "Prod(F(2),F(3))",
    "Prod(Zmod(4),F(2))",
    "Prod(Zmod(4),Zmod(4))",
    "Prod(T3(F(2)),F(2))",
    "T3(F(2))",
    "T3(F(3))",
    "T3(F(4))",
    "Tri(2,F(2))",
    "Tri(2,F(3))",
    "M(2,F(2))",
    "M(2,F(3))",
    "PolyQuot(F(2),[0,0,1])",
    "PolyQuot(F(2),[0,0,0,1])",
    "PolyQuot(F(2),[0,1,1])",
    "PolyQuot(F(3),[0,0,1])",
    "PolyQuot(F(5),[0,0,1])",
    "GroupAlg(F(2),C2)",
    "GroupAlg(F(2),C4)",
    "GroupAlg(F(3),C2)",
    "GroupAlg(F(3),C3)",
    "GroupAlg(F(2),D8)",
];

/// Builds every named catalog ring with order at most `max_order`.
pub fn named_rings(max_order: usize) -> Vec<FiniteRing> {
    NAMED
        .iter()
        .map(|dsl| construct(dsl).expect("catalog entries are valid"))
        .filter(|r| r.order() <= max_order)
        .collect()
}

/// Rejection-samples random structure-constant presentations and keeps the
/// ones that validate as rings. Deterministic for a fixed seed; the yield is
/// modest by design (most random tables violate associativity).
pub fn random_rings(seed: u64, want: usize, max_order: usize) -> Vec<FiniteRing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < want && attempts < 20_000 {
        attempts += 1;
        let k = rng.gen_range(1..=2usize);
        let orders: Vec<u64> = (0..k).map(|_| [2u64, 3, 4, 5, 8, 9][rng.gen_range(0..6)]).collect();
        if orders.iter().product::<u64>() as usize > max_order {
            continue;
        }
        let table: Vec<Vec<Vec<u64>>> = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| orders.iter().map(|&m| rng.gen_range(0..m)).collect())
                    .collect()
            })
            .collect();
        let unity: Vec<u64> = orders.iter().map(|&m| rng.gen_range(0..m)).collect();
        let spec = RingSpec {
            name: format!("Rand{}", out.len()),
            generator_orders: orders,
            table,
            unity,
        };
        if let Ok(r) = make_ring(spec) {
            out.push(r);
        }
    }
    out
}
