//! Ring isomorphism testing for small orders: invariant prefilter, then a
//! backtracking search over images of a greedy generating set, extending
//! each assignment by additive/multiplicative closure.

use std::collections::HashMap;

use crate::error::{Result, RingError};
use crate::lattice::generated_subring;
use crate::ring::{Elem, FiniteRing};

pub const ISO_SEARCH_BOUND: usize = 256;

/// Cheap invariants that any isomorphism preserves.
#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    order: usize,
    characteristic: u64,
    commutative: bool,
    additive_orders: Vec<u64>,
    unit_count: usize,
    idempotent_count: usize,
    nilpotent_count: usize,
}

fn invariants(ring: &FiniteRing) -> Invariants {
    let mut additive_orders: Vec<u64> = ring.elements().map(|x| ring.additive_order(x)).collect();
    additive_orders.sort_unstable();
    let idempotent_count = ring.elements().filter(|&x| ring.mul(x, x) == x).count();
    let nilpotent_count = ring
        .elements()
        .filter(|&x| {
            let mut y = x;
            for _ in 0..ring.order() {
                if y == ring.zero() {
                    return true;
                }
                y = ring.mul(y, x);
            }
            y == ring.zero()
        })
        .count();
    Invariants {
        order: ring.order(),
        characteristic: ring.characteristic(),
        commutative: ring.is_commutative(),
        additive_orders,
        unit_count: ring.unit_set().len(),
        idempotent_count,
        nilpotent_count,
    }
}

/// Per-element fingerprint preserved by isomorphisms, used to filter image
/// candidates.
fn fingerprint(ring: &FiniteRing, x: Elem) -> (u64, bool, bool, bool, u64) {
    let is_idem = ring.mul(x, x) == x;
    let central = ring.elements().all(|y| ring.mul(x, y) == ring.mul(y, x));
    // order of the generated subring is iso-invariant and cheap to get
    let span = generated_subring(ring, &[x]).card() as u64;
    (ring.additive_order(x), ring.is_unit(x), is_idem, central, span)
}

/// Greedy generating set: repeatedly adjoin the least element outside the
/// span of what is chosen so far.
fn generating_set(ring: &FiniteRing) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut span = generated_subring(ring, &[]).set;
    while span.card() < ring.order() {
        let next = ring
            .elements()
            .find(|&x| !span.contains(x))
            .expect("span is proper");
        gens.push(next);
        span = generated_subring(ring, &gens).set;
    }
    gens
}

/// Decides isomorphism; on success returns the element map R1 -> R2.
pub fn is_isomorphic(r1: &FiniteRing, r2: &FiniteRing) -> Result<Option<Vec<Elem>>> {
    if r1.order() > ISO_SEARCH_BOUND || r2.order() > ISO_SEARCH_BOUND {
        return Err(RingError::SearchBoundExceeded {
            order: r1.order().max(r2.order()),
            bound: ISO_SEARCH_BOUND,
        });
    }
    if invariants(r1) != invariants(r2) {
        return Ok(None);
    }
    let gens = generating_set(r1);
    let fps2: Vec<(u64, bool, bool, bool, u64)> =
        r2.elements().map(|x| fingerprint(r2, x)).collect();

    // partial map seeded with 0 -> 0 and 1 -> 1 (unital isomorphisms fix
    // both)
    let mut map: HashMap<Elem, Elem> = HashMap::new();
    map.insert(r1.zero(), r2.zero());
    map.insert(r1.one(), r2.one());
    if !close_partial(r1, r2, &mut map) {
        return Ok(None);
    }
    let mut used: Vec<bool> = vec![false; r2.order()];
    for &v in map.values() {
        if used[v as usize] {
            return Ok(None);
        }
        used[v as usize] = true;
    }
    Ok(assign(r1, r2, &gens, 0, &map, &used, &fps2))
}

fn assign(
    r1: &FiniteRing,
    r2: &FiniteRing,
    gens: &[Elem],
    depth: usize,
    map: &HashMap<Elem, Elem>,
    used: &[bool],
    fps2: &[(u64, bool, bool, bool, u64)],
) -> Option<Vec<Elem>> {
    // find the first unmapped generator
    let g = match gens[depth..].iter().find(|g| !map.contains_key(g)) {
        None => {
            // all generators mapped and closure succeeded: total by counting
            debug_assert_eq!(map.len(), r1.order());
            let mut out = vec![0; r1.order()];
            for (&k, &v) in map {
                out[k as usize] = v;
            }
            return Some(out);
        }
        Some(&g) => g,
    };
    let fp = fingerprint(r1, g);
    for img in r2.elements() {
        if used[img as usize] || fps2[img as usize] != fp {
            continue;
        }
        let mut next = map.clone();
        next.insert(g, img);
        if !close_partial(r1, r2, &mut next) {
            continue;
        }
        let mut next_used = vec![false; r2.order()];
        let mut injective = true;
        for &v in next.values() {
            if next_used[v as usize] {
                injective = false;
                break;
            }
            next_used[v as usize] = true;
        }
        if !injective {
            continue;
        }
        if let Some(found) = assign(r1, r2, gens, depth, &next, &next_used, fps2) {
            return Some(found);
        }
    }
    None
}

/// Extends a partial map to be closed under + and * on its domain; returns
/// false on any contradiction.
fn close_partial(r1: &FiniteRing, r2: &FiniteRing, map: &mut HashMap<Elem, Elem>) -> bool {
    let mut queue: Vec<Elem> = map.keys().copied().collect();
    queue.sort_unstable();
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi];
        qi += 1;
        let domain: Vec<Elem> = {
            let mut d: Vec<Elem> = map.keys().copied().collect();
            d.sort_unstable();
            d
        };
        for b in domain {
            let fa = map[&a];
            let fb = map[&b];
            for (c, fc) in [
                (r1.add(a, b), r2.add(fa, fb)),
                (r1.mul(a, b), r2.mul(fa, fb)),
                (r1.mul(b, a), r2.mul(fb, fa)),
            ] {
                match map.get(&c) {
                    Some(&known) if known != fc => return false,
                    Some(_) => {}
                    None => {
                        map.insert(c, fc);
                        queue.push(c);
                    }
                }
            }
        }
    }
    true
}
