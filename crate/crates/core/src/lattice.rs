//! Enumeration of generated subrings, the full subring lattice, maximal
//! subrings, two-sided ideals, and maximal subideals.
//!
//! Everything is bottom-up closure: adjoin one generator at a time, dedupe on
//! the element-index set, and canonicalize output order (size, then
//! lexicographic index-set order) so downstream reports are deterministic.

use std::collections::HashSet;

use crate::error::{Result, RingError};
use crate::ring::{Elem, FiniteRing};
use crate::subset::{ElemSet, SubsetAlgebra};

/// Default bound on |R| for full lattice enumeration.
pub const DEFAULT_LATTICE_BOUND: usize = 256;

/// Closure of `base` (already closed, or empty) plus `extra` under addition
/// and multiplication. Subrings here need not contain unity.
pub fn close_subring(ring: &FiniteRing, base: &ElemSet, extra: &[Elem]) -> ElemSet {
    let n = ring.order();
    let mut set = base.clone();
    set.insert(ring.zero());
    let mut members: Vec<Elem> = set.to_vec();
    let mut queue: Vec<Elem> = Vec::new();
    for &x in extra {
        if set.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    if base.is_empty() {
        // base not known closed: seed the queue with everything
        queue = members.clone();
    }
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        let snapshot = members.len();
        for mi in 0..snapshot {
            let m = members[mi];
            for y in [ring.add(x, m), ring.mul(x, m), ring.mul(m, x)] {
                if set.insert(y) {
                    members.push(y);
                    queue.push(y);
                }
            }
        }
    }
    debug_assert!(set.card() <= n);
    set
}

/// Closure under addition and two-sided multiplication by all of R.
pub fn close_ideal(ring: &FiniteRing, base: &ElemSet, extra: &[Elem]) -> ElemSet {
    let mut set = base.clone();
    set.insert(ring.zero());
    let mut members: Vec<Elem> = set.to_vec();
    let mut queue: Vec<Elem> = Vec::new();
    for &x in extra {
        if set.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    if base.is_empty() {
        queue = members.clone();
    }
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        let snapshot = members.len();
        for mi in 0..snapshot {
            let m = members[mi];
            if set.insert(ring.add(x, m)) {
                members.push(ring.add(x, m));
                queue.push(ring.add(x, m));
            }
        }
        for r in ring.elements() {
            for y in [ring.mul(r, x), ring.mul(x, r)] {
                if set.insert(y) {
                    members.push(y);
                    queue.push(y);
                }
            }
        }
    }
    set
}

/// Least subring (unity not required) containing the seed.
pub fn generated_subring(ring: &FiniteRing, seed: &[Elem]) -> SubsetAlgebra {
    let set = close_subring(ring, &ElemSet::new(ring.order()), seed);
    ring.classify_subset(&set)
}

/// Least two-sided ideal containing the seed.
pub fn ideal_generated_by(ring: &FiniteRing, seed: &[Elem]) -> SubsetAlgebra {
    let set = close_ideal(ring, &ElemSet::new(ring.order()), seed);
    ring.classify_subset(&set)
}

fn check_bound(ring: &FiniteRing, bound: usize) -> Result<()> {
    if ring.order() > bound {
        Err(RingError::LatticeBoundExceeded { order: ring.order(), bound })
    } else {
        Ok(())
    }
}

/// Every subring of R exactly once, canonically ordered.
pub fn all_subrings(ring: &FiniteRing, bound: usize) -> Result<Vec<SubsetAlgebra>> {
    check_bound(ring, bound)?;
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue: Vec<ElemSet> = Vec::new();
    let zero_ring = close_subring(ring, &ElemSet::new(ring.order()), &[]);
    seen.insert(zero_ring.clone());
    queue.push(zero_ring);
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi].clone();
        qi += 1;
        if a.card() == ring.order() {
            continue;
        }
        for x in ring.elements() {
            if a.contains(x) {
                continue;
            }
            let bigger = close_subring(ring, &a, &[x]);
            if seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<SubsetAlgebra> =
        queue.into_iter().map(|s| ring.classify_subset(&s)).collect();
    out.sort();
    debug_assert!(out.iter().all(|s| s.is_subring()));
    Ok(out)
}

/// Proper subrings maximal under inclusion among proper subrings.
pub fn maximal_subrings(ring: &FiniteRing, bound: usize) -> Result<Vec<SubsetAlgebra>> {
    let all = all_subrings(ring, bound)?;
    Ok(maximal_proper(&all, ring.order()))
}

fn maximal_proper(all: &[SubsetAlgebra], order: usize) -> Vec<SubsetAlgebra> {
    let proper: Vec<&SubsetAlgebra> = all.iter().filter(|s| s.card() < order).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.card() > s.card() && s.set.is_subset(&t.set))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// Every two-sided ideal of R exactly once, canonically ordered.
pub fn two_sided_ideals(ring: &FiniteRing, bound: usize) -> Result<Vec<SubsetAlgebra>> {
    check_bound(ring, bound)?;
    Ok(enumerate_ideals_within(ring, &ElemSet::full(ring.order())))
}

/// All ideals of R contained in the given ideal `top`.
fn enumerate_ideals_within(ring: &FiniteRing, top: &ElemSet) -> Vec<SubsetAlgebra> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue: Vec<ElemSet> = Vec::new();
    let zero = ElemSet::from_iter(ring.order(), [ring.zero()]);
    seen.insert(zero.clone());
    queue.push(zero);
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi].clone();
        qi += 1;
        for x in top.iter() {
            if a.contains(x) {
                continue;
            }
            let bigger = close_ideal(ring, &a, &[x]);
            if bigger.is_subset(top) && seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<SubsetAlgebra> =
        seen.into_iter().map(|s| ring.classify_subset(&s)).collect();
    out.sort();
    debug_assert!(out.iter().all(|s| s.is_two_sided_ideal()));
    out
}

/// Ideals of R properly contained in J, maximal with that property.
pub fn maximal_subideals(ring: &FiniteRing, j: &ElemSet) -> Result<Vec<SubsetAlgebra>> {
    if !ring.classify_subset(j).is_two_sided_ideal() {
        return Err(RingError::NotAnIdeal);
    }
    let inside = enumerate_ideals_within(ring, j);
    let proper: Vec<&SubsetAlgebra> =
        inside.iter().filter(|s| s.card() < j.card()).collect();
    Ok(proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.card() > s.card() && s.set.is_subset(&t.set))
        })
        .map(|s| (*s).clone())
        .collect())
}

/// All ideals of R contained in J (J itself included).
pub fn subideals_of(ring: &FiniteRing, j: &ElemSet) -> Result<Vec<SubsetAlgebra>> {
    if !ring.classify_subset(j).is_two_sided_ideal() {
        return Err(RingError::NotAnIdeal);
    }
    Ok(enumerate_ideals_within(ring, j))
}

/// Deterministically extends a proper subring to a maximal subring by greedy
/// adjunction: repeatedly adjoin the least element whose closure stays proper.
pub fn extend_to_maximal(ring: &FiniteRing, start: &ElemSet) -> SubsetAlgebra {
    let n = ring.order();
    let mut current = close_subring(ring, &ElemSet::new(n), &start.to_vec());
    assert!(current.card() < n, "cannot extend the full ring");
    loop {
        let mut grew = false;
        for x in ring.elements() {
            if current.contains(x) {
                continue;
            }
            let bigger = close_subring(ring, &current, &[x]);
            if bigger.card() < n {
                current = bigger;
                grew = true;
                break;
            }
        }
        if !grew {
            return ring.classify_subset(&current);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;

    #[test]
    fn generated_subring_examples() {
        let r = construct("Prod(F(2),F(2))").unwrap();
        let e1 = r.index_of(&[1, 0]);
        let s = generated_subring(&r, &[e1]);
        assert_eq!(s.card(), 2);
        assert!(s.set.contains(r.zero()) && s.set.contains(e1));

        let z4 = construct("Zmod(4)").unwrap();
        let s = generated_subring(&z4, &[z4.one()]);
        assert_eq!(s.card(), 4, "unity generates the prime ring");

        let dual = construct("PolyQuot(F(2),[0,0,1])").unwrap();
        let x = dual.index_of(&[0, 1]);
        let s = generated_subring(&dual, &[x]);
        assert_eq!(s.card(), 2);
    }

    #[test]
    fn all_subrings_of_f4() {
        let f4 = construct("F(4)").unwrap();
        let subs = all_subrings(&f4, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(subs.len(), 3); // {0}, F2, F4
        assert_eq!(
            subs.iter().map(|s| s.card()).collect::<Vec<_>>(),
            vec![1, 2, 4]
        );
    }

    #[test]
    fn all_subrings_of_z4() {
        let z4 = construct("Zmod(4)").unwrap();
        let subs = all_subrings(&z4, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(subs.len(), 3); // {0}, {0,2}, Z/4
        let maxes = maximal_subrings(&z4, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].card(), 2);
    }

    #[test]
    fn subrings_of_f2xf2() {
        let r = construct("Prod(F(2),F(2))").unwrap();
        let subs = all_subrings(&r, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(subs.len(), 5); // {0}, three of order 2, R
        let maxes = maximal_subrings(&r, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(maxes.len(), 3); // two coordinate ideals and the diagonal
        assert!(maxes.iter().all(|m| m.card() == 2));
    }

    #[test]
    fn ideals_of_f2xf2() {
        let r = construct("Prod(F(2),F(2))").unwrap();
        let ideals = two_sided_ideals(&r, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(ideals.len(), 4);
    }

    #[test]
    fn simple_matrix_ring_has_no_proper_nonzero_ideal() {
        let r = construct("M(2,F(2))").unwrap();
        // e12 = basis cell for (0,1)
        let e12 = r.index_of(&[0, 1, 0, 0]);
        let i = ideal_generated_by(&r, &[e12]);
        assert_eq!(i.card(), r.order(), "M_n(F) is simple");
    }

    #[test]
    fn t3_subideal_counts() {
        for (q, expect) in [(2u64, 3usize), (3, 4)] {
            let r = construct(&format!("T3(F({q}))")).unwrap();
            let rad = crate::radical::jacobson_radical(&r);
            let maxes = maximal_subideals(&r, &rad.j.set).unwrap();
            assert_eq!(maxes.len(), expect);
        }
    }

    #[test]
    fn dual_numbers_unique_maximal_subideal() {
        let r = construct("PolyQuot(F(2),[0,0,1])").unwrap();
        let rad = crate::radical::jacobson_radical(&r);
        assert_eq!(rad.j.card(), 2);
        let maxes = maximal_subideals(&r, &rad.j.set).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].card(), 1);
    }

    #[test]
    fn lattice_bound_enforced() {
        let r = construct("GroupAlg(F(2),D8)").unwrap();
        assert!(matches!(
            all_subrings(&r, 64),
            Err(RingError::LatticeBoundExceeded { .. })
        ));
    }

    #[test]
    fn downward_closure_of_lattice() {
        // generated subring of any subset of a member is again a member
        for dsl in ["Zmod(8)", "Prod(F(2),F(2))", "T3(F(2))", "F(9)"] {
            let r = construct(dsl).unwrap();
            let subs = all_subrings(&r, DEFAULT_LATTICE_BOUND).unwrap();
            let index: HashSet<ElemSet> = subs.iter().map(|s| s.set.clone()).collect();
            for s in &subs {
                let members = s.set.to_vec();
                for &x in &members {
                    let gen = generated_subring(&r, &[x]);
                    assert!(index.contains(&gen.set));
                }
            }
        }
    }
}
