//! Jacobson radicals, nilpotency data, radical complements, 1+J conjugation,
//! and semisimple profiles of commutative complements.

use crate::construct::prime_power;
use crate::error::{Result, RingError};
use crate::lattice::{extend_to_maximal, generated_subring};
use crate::ring::{quotient, ring_from_ops, DerivedRing, Elem, FiniteRing};
use crate::subset::{ElemSet, SubsetAlgebra};

/// The Jacobson radical of a finite ring with its nilpotency data and the
/// quotient map onto R/J.
pub struct RadicalData {
    pub j: SubsetAlgebra,
    pub nilpotency_index: u32,
    pub j_order: usize,
    pub quotient: DerivedRing,
}

impl RadicalData {
    pub fn is_zero(&self) -> bool {
        self.j_order == 1
    }

    /// True when J^2 = {0} (nilpotency index <= 2 covers J = 0 too).
    pub fn square_zero(&self) -> bool {
        self.nilpotency_index <= 2
    }
}

/// Set product A*B closed under addition: the additive span of pairwise
/// products.
pub fn set_product(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut seeds = Vec::new();
    for x in a.iter() {
        for y in b.iter() {
            seeds.push(ring.mul(x, y));
        }
    }
    additive_span(ring, &seeds)
}

/// Additive closure of a seed set (always contains 0).
pub fn additive_span(ring: &FiniteRing, seeds: &[Elem]) -> ElemSet {
    let mut set = ElemSet::new(ring.order());
    set.insert(ring.zero());
    let mut members = vec![ring.zero()];
    let mut queue = Vec::new();
    for &s in seeds {
        if set.insert(s) {
            members.push(s);
            queue.push(s);
        }
    }
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        let snapshot = members.len();
        for mi in 0..snapshot {
            let y = ring.add(x, members[mi]);
            if set.insert(y) {
                members.push(y);
                queue.push(y);
            }
        }
    }
    set
}

/// Computes J by the quasi-regularity characterization
/// J = { x : 1 + a*x is a unit for all a }, then asserts the structural
/// consequences: J is a two-sided nilpotent ideal and R/J has zero radical.
pub fn jacobson_radical(ring: &FiniteRing) -> RadicalData {
    let j_set = quasi_regular_set(ring);
    let j = ring.classify_subset(&j_set);
    assert!(j.is_two_sided_ideal(), "quasi-regular set must be a two-sided ideal");

    // the right-sided variant must agree
    debug_assert_eq!(j_set, {
        let mut s = ElemSet::new(ring.order());
        for x in ring.elements() {
            if ring.elements().all(|a| ring.is_unit(ring.add(ring.one(), ring.mul(x, a)))) {
                s.insert(x);
            }
        }
        s
    });

    // nilpotency index: least k with J^k = {0}
    let mut power = j_set.clone();
    let mut nilpotency_index = 1u32;
    while power.card() > 1 {
        power = set_product(ring, &power, &j_set);
        nilpotency_index += 1;
        assert!(nilpotency_index as usize <= ring.order() + 1, "radical not nilpotent");
    }

    let q = quotient(ring, &j_set).expect("radical is an ideal");
    // R/J must have zero radical
    let qj = quasi_regular_set(&q.ring);
    assert_eq!(qj.card(), 1, "radical of R/J must be zero");

    RadicalData { j_order: j_set.card(), j, nilpotency_index, quotient: q }
}

fn quasi_regular_set(ring: &FiniteRing) -> ElemSet {
    let mut s = ElemSet::new(ring.order());
    for x in ring.elements() {
        if ring
            .elements()
            .all(|a| ring.is_unit(ring.add(ring.one(), ring.mul(a, x))))
        {
            s.insert(x);
        }
    }
    s
}

/// The ideal pR = { p*x : x in R } for p dividing the characteristic.
pub fn p_multiples(ring: &FiniteRing, p: u64) -> ElemSet {
    let mut s = ElemSet::new(ring.order());
    for x in ring.elements() {
        s.insert(ring.smul(p, x));
    }
    s
}

/// The cover-preserving reduction: quotient by pR, then by the square of the
/// radical. The output has prime characteristic and square-zero radical; the
/// composite element map is returned alongside.
pub fn reduce(ring: &FiniteRing) -> Result<DerivedRing> {
    let (p, _) = prime_power(ring.characteristic())
        .map_err(|_| RingError::NotPrimePowerCharacteristic(ring.characteristic()))?;
    let pr = p_multiples(ring, p);
    let step1 = quotient(ring, &pr)?;
    let rad = jacobson_radical(&step1.ring);
    let j2 = set_product(&step1.ring, &rad.j.set, &rad.j.set);
    let step2 = quotient(&step1.ring, &j2)?;
    let map: Vec<Elem> = (0..ring.order())
        .map(|x| step2.map[step1.map[x] as usize])
        .collect();
    let out = step2.ring;
    debug_assert_eq!(out.characteristic(), p);
    debug_assert!(jacobson_radical(&out).square_zero());
    Ok(DerivedRing { ring: out, map })
}

/// Decomposes a ring of mixed characteristic into its prime-characteristic
/// components via the central idempotents cut out by integer multiples of 1.
/// Returns one ring per prime, with the projection maps.
pub fn split_by_prime(ring: &FiniteRing) -> Result<Vec<(u64, DerivedRing)>> {
    let ch = ring.characteristic();
    let mut rest = ch;
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut pk = 1;
            while rest % d == 0 {
                rest /= d;
                pk *= d;
            }
            primes.push((d, pk));
        }
        d += 1;
    }
    if rest > 1 {
        primes.push((rest, rest));
    }
    let mut out = Vec::new();
    for &(p, pk) in &primes {
        let other = ch / pk;
        // c = multiple of 1 that is 1 mod p^k and 0 mod the complement
        let c = (0..ch)
            .find(|&c| c % pk == 1 && c % other == 0)
            .expect("CRT idempotent exists");
        let e = ring.smul(c, ring.one());
        debug_assert_eq!(ring.mul(e, e), e);
        let subset: Vec<Elem> = {
            let mut v: Vec<Elem> = ring.elements().map(|x| ring.mul(e, x)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let add = |a: Elem, b: Elem| ring.add(a, b);
        let mul = |a: Elem, b: Elem| ring.mul(a, b);
        let name = format!("{}@p{}", ring.name(), p);
        let (component, label_map) = ring_from_ops(&name, &subset, add, mul, ring.zero(), e)?;
        let map: Vec<Elem> = ring
            .elements()
            .map(|x| label_map[&ring.mul(e, x)])
            .collect();
        out.push((p, DerivedRing { ring: component, map }));
    }
    Ok(out)
}

/// All radical complements: subrings S with S \cap J = {0} and S + J = R.
///
/// The search enumerates additive-generator lifts: fix additive generators of
/// R/J, one preimage each, and sweep all J-translates of those preimages.
/// Every complement maps additively onto R/J through its own lifts, so this
/// enumeration is exhaustive.
pub fn wedderburn_complements(ring: &FiniteRing, rad: &RadicalData) -> Result<Vec<SubsetAlgebra>> {
    prime_power(ring.characteristic())
        .map_err(|_| RingError::NotPrimePowerCharacteristic(ring.characteristic()))?;
    let qring = &rad.quotient.ring;
    let qmap = &rad.quotient.map;
    let s_order = qring.order();
    let j_elems = rad.j.set.to_vec();

    // additive generators of R/J: its own spec generators; pick the least
    // preimage of each
    let k = qring.spec().generator_orders.len();
    let mut lifts = Vec::with_capacity(k);
    for i in 0..k {
        let mut coords = vec![0u64; k];
        coords[i] = 1;
        let target = qring.index_of(&coords);
        let lift = ring
            .elements()
            .find(|&x| qmap[x as usize] == target)
            .expect("quotient map is onto");
        lifts.push(lift);
    }

    let mut found: Vec<ElemSet> = Vec::new();
    let mut translate = vec![0usize; k];
    loop {
        let gens: Vec<Elem> = lifts
            .iter()
            .zip(&translate)
            .map(|(&t, &xi)| ring.add(t, j_elems[xi]))
            .collect();
        let span = additive_span(ring, &gens);
        if span.card() == s_order && span.intersection(&rad.j.set).card() == 1 {
            // additive complement; accept if multiplicatively closed
            let members = span.to_vec();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| span.contains(ring.mul(a, b))));
            if closed && !found.contains(&span) {
                assert!(span.contains(ring.one()), "complement must contain unity");
                found.push(span);
            }
        }
        // increment the translate counter
        let mut i = 0;
        while i < k {
            translate[i] += 1;
            if translate[i] < j_elems.len() {
                break;
            }
            translate[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    found.sort();
    let complements: Vec<SubsetAlgebra> =
        found.iter().map(|s| ring.classify_subset(s)).collect();

    // single orbit under 1 + J when the radical squares to zero
    if !complements.is_empty() && rad.square_zero() {
        let orbit = one_plus_j_orbit(ring, &complements[0].set, &rad.j.set);
        assert_eq!(
            orbit,
            found,
            "complements must form a single orbit under 1+J conjugation"
        );
    }
    Ok(complements)
}

/// u^{-1} S u for a unit u.
pub fn conjugate(ring: &FiniteRing, s: &ElemSet, u: Elem) -> Result<ElemSet> {
    let uinv = ring.inverse(u).ok_or(RingError::NotAUnit(u))?;
    let mut out = ElemSet::new(ring.order());
    for x in s.iter() {
        out.insert(ring.mul(ring.mul(uinv, x), u));
    }
    Ok(out)
}

/// Deduplicated, canonically ordered orbit of S under conjugation by 1 + J.
pub fn one_plus_j_orbit(ring: &FiniteRing, s: &ElemSet, j: &ElemSet) -> Vec<ElemSet> {
    let mut orbit: Vec<ElemSet> = Vec::new();
    for x in j.iter() {
        let u = ring.add(ring.one(), x);
        let img = conjugate(ring, s, u).expect("1 + nilpotent is a unit");
        if !orbit.contains(&img) {
            orbit.push(img);
        }
    }
    orbit.sort();
    orbit
}

/// Primitive idempotents and field components of a commutative radical
/// complement, with the action data on J.
pub struct SemisimpleProfile {
    pub idempotents: Vec<Elem>,
    /// field component e_i S for each primitive idempotent
    pub fields: Vec<ElemSet>,
    pub field_orders: Vec<u64>,
    /// e_i J as element sets
    pub components_of_j: Vec<ElemSet>,
    /// dim over F_i of e_i J, for i in lambda; 0 when e_i J = {0}
    pub dims: Vec<u32>,
    pub lambda: Vec<usize>,
    pub lambda2: Vec<usize>,
    pub lambda0: Vec<usize>,
}

/// Computes the primitive idempotent decomposition of a commutative
/// complement S and the induced profile on J.
pub fn semisimple_profile(
    ring: &FiniteRing,
    s: &ElemSet,
    rad: &RadicalData,
) -> Result<SemisimpleProfile> {
    let members = s.to_vec();
    for &a in &members {
        for &b in &members {
            if ring.mul(a, b) != ring.mul(b, a) {
                return Err(RingError::NotCommutative);
            }
        }
    }
    if s.intersection(&rad.j.set).card() != 1 || s.card() * rad.j_order != ring.order() {
        return Err(RingError::NotAComplement);
    }

    // all idempotents of S, then the minimal nonzero ones
    let idems: Vec<Elem> = members
        .iter()
        .copied()
        .filter(|&e| e != ring.zero() && ring.mul(e, e) == e)
        .collect();
    let leq = |e: Elem, f: Elem| ring.mul(e, f) == e && ring.mul(f, e) == e;
    let primitive: Vec<Elem> = idems
        .iter()
        .copied()
        .filter(|&e| !idems.iter().any(|&f| f != e && leq(f, e)))
        .collect();

    // orthogonality and completeness
    let mut total = ring.zero();
    for (a, &e) in primitive.iter().enumerate() {
        for &f in &primitive[a + 1..] {
            assert_eq!(ring.mul(e, f), ring.zero(), "primitive idempotents orthogonal");
        }
        total = ring.add(total, e);
    }
    assert_eq!(total, ring.one(), "primitive idempotents must sum to 1");

    let mut fields = Vec::new();
    let mut field_orders = Vec::new();
    let mut components_of_j = Vec::new();
    let mut dims = Vec::new();
    let mut lambda = Vec::new();
    let mut lambda2 = Vec::new();
    let mut lambda0 = Vec::new();
    for (i, &e) in primitive.iter().enumerate() {
        let mut fi = ElemSet::new(ring.order());
        for &x in &members {
            fi.insert(ring.mul(e, x));
        }
        // a field: every nonzero element invertible against the local unity e
        for a in fi.iter() {
            if a == ring.zero() {
                continue;
            }
            assert!(
                fi.iter().any(|b| ring.mul(a, b) == e),
                "component of a semisimple commutative ring must be a field"
            );
        }
        let fq = fi.card() as u64;
        let mut ej = ElemSet::new(ring.order());
        for x in rad.j.set.iter() {
            ej.insert(ring.mul(e, x));
        }
        let d = if ej.card() == 1 {
            lambda0.push(i);
            0
        } else {
            // |e_i J| must be an exact power of |F_i|
            let mut d = 0u32;
            let mut m = ej.card() as u64;
            while m > 1 {
                assert_eq!(m % fq, 0, "|e_i J| must be a power of |F_i|");
                m /= fq;
                d += 1;
            }
            lambda.push(i);
            if d >= 2 {
                lambda2.push(i);
            }
            d
        };
        fields.push(fi);
        field_orders.push(fq);
        components_of_j.push(ej);
        dims.push(d);
    }
    Ok(SemisimpleProfile {
        idempotents: primitive,
        fields,
        field_orders,
        components_of_j,
        dims,
        lambda,
        lambda2,
        lambda0,
    })
}

/// Result of searching for one maximal subring that contains every radical
/// complement.
pub struct ComplementEnvelope {
    /// a maximal subring containing the union of all complements, if any
    pub maximal: Option<SubsetAlgebra>,
    /// A = the subring generated by all complements
    pub generated: SubsetAlgebra,
    /// K = the radical of A, as a subset of R
    pub radical_of_generated: ElemSet,
}

/// Finds a maximal subring containing the union of all radical complements,
/// when one exists, together with A = <union of complements> and J(A).
pub fn complements_in_one_maximal(ring: &FiniteRing, rad: &RadicalData) -> Result<ComplementEnvelope> {
    if !rad.square_zero() {
        return Err(RingError::HypothesisViolated("J^2 must be zero".into()));
    }
    if !rad.quotient.ring.is_commutative() {
        return Err(RingError::HypothesisViolated("R/J must be commutative".into()));
    }
    let complements = wedderburn_complements(ring, rad)?;
    let mut union: Vec<Elem> = Vec::new();
    for c in &complements {
        union.extend(c.set.iter());
    }
    let generated = generated_subring(ring, &union);
    // J(A) = A \cap J for a subring containing a full complement
    let radical_of_generated = generated.set.intersection(&rad.j.set);
    let maximal = if generated.card() < ring.order() {
        Some(extend_to_maximal(ring, &generated.set))
    } else {
        None
    };
    Ok(ComplementEnvelope { maximal, generated, radical_of_generated })
}

/// The subring S + I for an additive complement pair (used by cover logic).
pub fn direct_sum_set(ring: &FiniteRing, s: &ElemSet, i: &ElemSet) -> ElemSet {
    let mut out = ElemSet::new(ring.order());
    for a in s.iter() {
        for b in i.iter() {
            out.insert(ring.add(a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::lattice::{all_subrings, DEFAULT_LATTICE_BOUND};

    #[test]
    fn radical_of_matrix_ring_is_zero() {
        let r = construct("M(2,F(3))").unwrap();
        let rad = jacobson_radical(&r);
        assert!(rad.is_zero());
        assert_eq!(rad.nilpotency_index, 1);
    }

    #[test]
    fn radical_of_z4() {
        let r = construct("Zmod(4)").unwrap();
        let rad = jacobson_radical(&r);
        assert_eq!(rad.j_order, 2);
        assert_eq!(rad.nilpotency_index, 2);
        assert!(rad.j.set.contains(r.index_of(&[2])));
        assert_eq!(rad.quotient.ring.order(), 2);
    }

    #[test]
    fn radical_of_triangular_ring() {
        let r = construct("Tri(2,F(2))").unwrap();
        let rad = jacobson_radical(&r);
        assert_eq!(rad.j_order, 2);
        assert!(rad.square_zero());
    }

    #[test]
    fn radical_equals_largest_nilpotent_ideal() {
        for dsl in ["Zmod(8)", "T3(F(2))", "Tri(2,F(2))", "PolyQuot(F(3),[0,0,1])"] {
            let r = construct(dsl).unwrap();
            let rad = jacobson_radical(&r);
            let ideals = crate::lattice::two_sided_ideals(&r, DEFAULT_LATTICE_BOUND).unwrap();
            let largest_nilpotent = ideals
                .iter()
                .filter(|i| {
                    let mut power = i.set.clone();
                    for _ in 0..r.order() {
                        if power.card() == 1 {
                            return true;
                        }
                        power = set_product(&r, &power, &i.set);
                    }
                    power.card() == 1
                })
                .map(|i| i.card())
                .max()
                .unwrap();
            assert_eq!(rad.j_order, largest_nilpotent, "{dsl}");
        }
    }

    #[test]
    fn reduce_examples() {
        let r = construct("Prod(Zmod(4),Zmod(4))").unwrap();
        let red = reduce(&r).unwrap();
        assert_eq!(red.ring.order(), 4);
        assert_eq!(red.ring.characteristic(), 2);
        assert!(jacobson_radical(&red.ring).is_zero()); // F2 x F2

        let t3 = construct("T3(F(2))").unwrap();
        let red = reduce(&t3).unwrap();
        assert_eq!(red.ring.order(), 8, "already reduced");

        let fx3 = construct("PolyQuot(F(2),[0,0,0,1])").unwrap(); // F2[x]/(x^3)
        let red = reduce(&fx3).unwrap();
        assert_eq!(red.ring.order(), 4);
        let rad = jacobson_radical(&red.ring);
        assert_eq!(rad.j_order, 2);
        assert!(rad.square_zero());
    }

    #[test]
    fn reduce_rejects_mixed_characteristic() {
        let r = construct("Zmod(6)").unwrap();
        assert!(matches!(
            reduce(&r),
            Err(RingError::NotPrimePowerCharacteristic(6))
        ));
    }

    #[test]
    fn split_by_prime_z6() {
        let r = construct("Zmod(12)").unwrap();
        let parts = split_by_prime(&r).unwrap();
        assert_eq!(parts.len(), 2);
        let orders: Vec<usize> = parts.iter().map(|(_, d)| d.ring.order()).collect();
        assert_eq!(orders, vec![4, 3]);
    }

    #[test]
    fn complements_of_t3_unique() {
        let r = construct("T3(F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        assert_eq!(comps.len(), 1, "commutative ring has a unique complement");
        assert_eq!(comps[0].card(), 2);
        assert!(comps[0].contains_unity);
    }

    #[test]
    fn complements_of_tri2_f2() {
        let r = construct("Tri(2,F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        assert_eq!(comps.len(), 2, "diagonal and its 1+e12 conjugate");
        for c in &comps {
            assert_eq!(c.card(), r.order() / rad.j_order);
            assert!(c.contains_unity);
        }
    }

    #[test]
    fn complement_of_field_is_whole_ring() {
        let r = construct("F(4)").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].card(), 4);
    }

    #[test]
    fn complements_match_lattice_filter() {
        // dual route: the lift search must agree with filtering the lattice
        for dsl in ["T3(F(2))", "Tri(2,F(2))", "Zmod(4)", "PolyQuot(F(2),[0,0,1])"] {
            let r = construct(dsl).unwrap();
            let rad = jacobson_radical(&r);
            let fast: Vec<ElemSet> = wedderburn_complements(&r, &rad)
                .unwrap()
                .into_iter()
                .map(|s| s.set)
                .collect();
            let slow: Vec<ElemSet> = all_subrings(&r, DEFAULT_LATTICE_BOUND)
                .unwrap()
                .into_iter()
                .filter(|s| {
                    s.card() * rad.j_order == r.order()
                        && s.set.intersection(&rad.j.set).card() == 1
                })
                .map(|s| s.set)
                .collect();
            assert_eq!(fast, slow, "{dsl}");
        }
    }

    #[test]
    fn conjugation_formula_in_tri2() {
        // s^(1+x) = s + (sx - xs) when J^2 = 0
        let r = construct("Tri(2,F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        let s0 = &comps[0].set;
        for x in rad.j.set.iter() {
            let u = r.add(r.one(), x);
            for s in s0.iter() {
                let lhs = r.mul(r.mul(r.inverse(u).unwrap(), s), u);
                let rhs = r.add(s, r.sub(r.mul(s, x), r.mul(x, s)));
                assert_eq!(lhs, rhs);
            }
        }
        let orbit = one_plus_j_orbit(&r, s0, &rad.j.set);
        assert_eq!(orbit.len(), 2);
    }

    #[test]
    fn profile_of_t3() {
        let r = construct("T3(F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        let prof = semisimple_profile(&r, &comps[0].set, &rad).unwrap();
        assert_eq!(prof.idempotents.len(), 1);
        assert_eq!(prof.field_orders, vec![2]);
        assert_eq!(prof.lambda, vec![0]);
        assert_eq!(prof.lambda2, vec![0]);
        assert_eq!(prof.dims, vec![2]);
        assert!(prof.lambda0.is_empty());
    }

    #[test]
    fn profile_of_product_with_inert_factor() {
        let f2 = construct("F(2)").unwrap();
        let t3 = construct("T3(F(2))").unwrap();
        let r = crate::ring::product(&[&f2, &t3]).unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        assert_eq!(comps.len(), 1);
        let prof = semisimple_profile(&r, &comps[0].set, &rad).unwrap();
        assert_eq!(prof.idempotents.len(), 2);
        assert_eq!(prof.lambda.len(), 1);
        assert_eq!(prof.lambda0.len(), 1);
        let i = prof.lambda[0];
        assert_eq!(prof.dims[i], 2);
    }

    #[test]
    fn profile_with_zero_radical_has_empty_lambda() {
        let r = construct("Prod(F(2),F(4))").unwrap();
        let rad = jacobson_radical(&r);
        let comps = wedderburn_complements(&r, &rad).unwrap();
        let prof = semisimple_profile(&r, &comps[0].set, &rad).unwrap();
        assert!(prof.lambda.is_empty());
        assert_eq!(prof.idempotents.len(), 2);
    }

    #[test]
    fn envelope_examples() {
        // commutative: the unique complement always sits in a maximal subring
        let r = construct("T3(F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let env = complements_in_one_maximal(&r, &rad).unwrap();
        assert!(env.maximal.is_some());

        // Tri(2,F2): the two complements generate the whole ring
        let r = construct("Tri(2,F(2))").unwrap();
        let rad = jacobson_radical(&r);
        let env = complements_in_one_maximal(&r, &rad).unwrap();
        assert!(env.maximal.is_none());
        assert_eq!(env.generated.card(), r.order());
    }

    #[test]
    fn one_plus_j_group_laws() {
        for dsl in ["T3(F(3))", "Tri(2,F(2))", "PolyQuot(F(5),[0,0,1])"] {
            let r = construct(dsl).unwrap();
            let rad = jacobson_radical(&r);
            assert!(rad.square_zero());
            let p = r.characteristic();
            let j: Vec<Elem> = rad.j.set.to_vec();
            for &x in &j {
                let u = r.add(r.one(), x);
                assert!(r.is_unit(u));
                // (1+x)^p = 1
                let mut acc = r.one();
                for _ in 0..p {
                    acc = r.mul(acc, u);
                }
                assert_eq!(acc, r.one(), "order of 1+x divides p");
                for &y in &j {
                    let v = r.add(r.one(), y);
                    let lhs = r.mul(u, v);
                    let rhs = r.add(r.one(), r.add(x, y));
                    assert_eq!(lhs, rhs, "(1+x)(1+y) = 1+x+y");
                    assert_eq!(r.mul(u, v), r.mul(v, u), "1+J abelian");
                }
            }
        }
    }
}
