//! Finite unital rings presented by additive generator orders and
//! multiplication structure constants.

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError, RingLaw};
use crate::subset::{ElemSet, SubsetAlgebra};

/// Order bound below which full addition/multiplication tables are memoized.
pub const TABLE_MEMO_BOUND: usize = 4096;
/// Order bound below which ring axioms are checked on every element triple.
pub const EXHAUSTIVE_CHECK_BOUND: usize = 64;
/// Number of sampled triples checked above the exhaustive bound.
const SAMPLED_TRIPLES: usize = 2000;

pub type Elem = u32;

/// Presentation of a finite unital ring: additive generator orders plus the
/// coordinate vectors of all pairwise generator products.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingSpec {
    pub name: String,
    pub generator_orders: Vec<u64>,
    /// `table[i][j]` is the coordinate vector of `g_i * g_j`.
    pub table: Vec<Vec<Vec<u64>>>,
    pub unity: Vec<u64>,
}

/// A single ring element, carried as a dense index plus its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub index: Elem,
    pub coords: Vec<u64>,
}

struct UnitInfo {
    is_unit: Vec<bool>,
    inverse: Vec<Elem>,
    units: Vec<Elem>,
}

/// A validated finite unital ring with a dense element index.
///
/// Immutable after construction; all operations are pure and the value is
/// safe to share read-only across threads.
pub struct FiniteRing {
    spec: RingSpec,
    order: usize,
    strides: Vec<usize>,
    characteristic: u64,
    commutative: bool,
    zero: Elem,
    one: Elem,
    neg_table: Vec<Elem>,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
    units: OnceLock<UnitInfo>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteRing({}, order {}, char {})",
            self.spec.name, self.order, self.characteristic
        )
    }
}

impl FiniteRing {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn coords_of(&self, e: Elem) -> Vec<u64> {
        let mut e = e as usize;
        let k = self.spec.generator_orders.len();
        let mut coords = vec![0u64; k];
        for i in 0..k {
            coords[i] = (e / self.strides[i]) as u64 % self.spec.generator_orders[i];
            e %= self.strides[i];
        }
        coords
    }

    pub fn index_of(&self, coords: &[u64]) -> Elem {
        let mut idx = 0usize;
        for (i, &c) in coords.iter().enumerate() {
            let c = c % self.spec.generator_orders[i];
            idx += c as usize * self.strides[i];
        }
        idx as Elem
    }

    pub fn element(&self, e: Elem) -> RingElement {
        RingElement { index: e, coords: self.coords_of(e) }
    }

    fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.spec.generator_orders)
            .map(|((x, y), m)| (x + y) % m)
            .collect()
    }

    fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = a.len();
        let exponent = lcm_safe(&self.spec.generator_orders);
        let mut acc = vec![0u64; k];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                if b[j] == 0 {
                    continue;
                }
                let scale = (a[i] * b[j]) % exponent;
                for t in 0..k {
                    let m = self.spec.generator_orders[t];
                    acc[t] = (acc[t] + (scale % m) * (self.spec.table[i][j][t] % m)) % m;
                }
            }
        }
        acc
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.add_table {
            t[a as usize * self.order + b as usize]
        } else {
            self.index_of(&self.add_coords(&self.coords_of(a), &self.coords_of(b)))
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.mul_table {
            t[a as usize * self.order + b as usize]
        } else {
            self.index_of(&self.mul_coords(&self.coords_of(a), &self.coords_of(b)))
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg_table[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// n-fold additive multiple `n * a` with n reduced mod the element order.
    pub fn smul(&self, n: u64, a: Elem) -> Elem {
        let coords: Vec<u64> = self
            .coords_of(a)
            .iter()
            .zip(&self.spec.generator_orders)
            .map(|(c, m)| (c % m) * (n % m) % m)
            .collect();
        self.index_of(&coords)
    }

    /// Additive order of an element.
    pub fn additive_order(&self, a: Elem) -> u64 {
        let mut ord = 1u64;
        let mut x = a;
        while x != self.zero {
            x = self.add(x, a);
            ord += 1;
        }
        ord
    }

    fn unit_info(&self) -> &UnitInfo {
        self.units.get_or_init(|| {
            let n = self.order;
            let mut is_unit = vec![false; n];
            let mut inverse = vec![Elem::MAX; n];
            let mut units = Vec::new();
            for x in 0..n as Elem {
                for y in 0..n as Elem {
                    if self.mul(x, y) == self.one {
                        // a one-sided inverse in a finite ring is two-sided
                        assert_eq!(
                            self.mul(y, x),
                            self.one,
                            "one-sided inverse failed to be two-sided"
                        );
                        is_unit[x as usize] = true;
                        inverse[x as usize] = y;
                        units.push(x);
                        break;
                    }
                }
            }
            UnitInfo { is_unit, inverse, units }
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.unit_info().is_unit[x as usize]
    }

    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        let info = self.unit_info();
        info.is_unit[x as usize].then(|| info.inverse[x as usize])
    }

    /// All units, ascending by element index.
    pub fn unit_set(&self) -> Vec<Elem> {
        self.unit_info().units.clone()
    }

    /// Classifies an arbitrary element set by the closure properties it has.
    pub fn classify_subset(&self, set: &ElemSet) -> SubsetAlgebra {
        let members = set.to_vec();
        let mut additive = set.contains(self.zero);
        'add: for &a in &members {
            if !set.contains(self.neg(a)) {
                additive = false;
                break;
            }
            for &b in &members {
                if !set.contains(self.add(a, b)) {
                    additive = false;
                    break 'add;
                }
            }
        }
        let mut mult_closed = true;
        'mul: for &a in &members {
            for &b in &members {
                if !set.contains(self.mul(a, b)) {
                    mult_closed = false;
                    break 'mul;
                }
            }
        }
        let mut left_ideal = mult_closed;
        let mut right_ideal = mult_closed;
        for r in self.elements() {
            for &a in &members {
                if left_ideal && !set.contains(self.mul(r, a)) {
                    left_ideal = false;
                }
                if right_ideal && !set.contains(self.mul(a, r)) {
                    right_ideal = false;
                }
                if !left_ideal && !right_ideal {
                    break;
                }
            }
            if !left_ideal && !right_ideal {
                break;
            }
        }
        SubsetAlgebra {
            contains_unity: set.contains(self.one),
            set: set.clone(),
            additive_subgroup: additive,
            mult_closed,
            left_ideal: additive && left_ideal,
            right_ideal: additive && right_ideal,
        }
    }
}

fn lcm_safe(orders: &[u64]) -> u64 {
    orders.iter().fold(1u64, |acc, &m| {
        let g = gcd(acc, m);
        (acc / g).saturating_mul(m)
    })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Validates a spec and constructs the ring.
///
/// Well-definedness of the bilinear extension is checked coordinatewise.
/// Associativity and the unit law are checked on generator triples (which is
/// exact, by bilinearity), then rechecked on all element triples at small
/// orders and on seeded random triples above that.
pub fn make_ring(spec: RingSpec) -> Result<FiniteRing> {
    let k = spec.generator_orders.len();
    if k == 0 {
        return Err(RingError::MalformedSpec("no generators".into()));
    }
    for &m in &spec.generator_orders {
        if m < 2 {
            return Err(RingError::MalformedSpec(format!("generator order {m} < 2")));
        }
    }
    if spec.table.len() != k || spec.table.iter().any(|row| row.len() != k) {
        return Err(RingError::MalformedSpec("table is not k x k".into()));
    }
    if spec.unity.len() != k {
        return Err(RingError::MalformedSpec("unity vector has wrong length".into()));
    }
    let mut order = 1usize;
    for &m in &spec.generator_orders {
        order = order
            .checked_mul(m as usize)
            .ok_or_else(|| RingError::MalformedSpec("ring order overflows".into()))?;
    }

    let mut spec = spec;
    for i in 0..k {
        for j in 0..k {
            if spec.table[i][j].len() != k {
                return Err(RingError::MalformedSpec(format!(
                    "table entry ({i},{j}) has wrong length"
                )));
            }
            for t in 0..k {
                spec.table[i][j][t] %= spec.generator_orders[t];
            }
        }
    }
    for t in 0..k {
        spec.unity[t] %= spec.generator_orders[t];
    }

    // well-definedness: m_i * (g_i g_j) = 0 and m_j * (g_i g_j) = 0
    for i in 0..k {
        for j in 0..k {
            for t in 0..k {
                let mt = spec.generator_orders[t];
                let c = spec.table[i][j][t];
                if (spec.generator_orders[i] % mt) * c % mt != 0
                    || (spec.generator_orders[j] % mt) * c % mt != 0
                {
                    return Err(RingError::MalformedSpec(format!(
                        "bilinear extension ill-defined at table entry ({i},{j})"
                    )));
                }
            }
        }
    }

    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * spec.generator_orders[i + 1] as usize;
    }

    let mut ring = FiniteRing {
        order,
        strides,
        characteristic: 0,
        commutative: false,
        zero: 0,
        one: 0,
        neg_table: Vec::new(),
        add_table: None,
        mul_table: None,
        units: OnceLock::new(),
        spec,
    };
    ring.one = ring.index_of(&ring.spec.unity.clone());

    ring.neg_table = (0..order as Elem)
        .map(|e| {
            let coords: Vec<u64> = ring
                .coords_of(e)
                .iter()
                .zip(&ring.spec.generator_orders)
                .map(|(c, m)| (m - c) % m)
                .collect();
            ring.index_of(&coords)
        })
        .collect();

    if order <= TABLE_MEMO_BOUND {
        memoize_tables(&mut ring);
    }

    // generator index of g_i
    let gens: Vec<Elem> = (0..k)
        .map(|i| {
            let mut coords = vec![0u64; k];
            coords[i] = 1;
            ring.index_of(&coords)
        })
        .collect();
    let gen_elem = |i: usize| gens[i];

    // associativity on generator triples is exact by bilinearity
    for i in 0..k {
        for j in 0..k {
            for t in 0..k {
                let (gi, gj, gt) = (gen_elem(i), gen_elem(j), gen_elem(t));
                if ring.mul(ring.mul(gi, gj), gt) != ring.mul(gi, ring.mul(gj, gt)) {
                    return Err(RingError::AxiomViolation {
                        law: RingLaw::Associativity,
                        witness: (gi, gj, gt),
                    });
                }
            }
        }
    }
    for i in 0..k {
        let gi = gen_elem(i);
        if ring.mul(ring.one, gi) != gi || ring.mul(gi, ring.one) != gi {
            return Err(RingError::AxiomViolation {
                law: RingLaw::UnitLaw,
                witness: (gi, gi, gi),
            });
        }
    }

    check_axioms_on_triples(&ring)?;

    ring.characteristic = ring.additive_order(ring.one);
    debug_assert_eq!(order as u64 % ring.characteristic, 0);

    // commutativity reduces to generator pairs by bilinearity
    ring.commutative = (0..k).all(|i| {
        (0..k).all(|j| ring.mul(gen_elem(i), gen_elem(j)) == ring.mul(gen_elem(j), gen_elem(i)))
    });

    Ok(ring)
}

fn memoize_tables(ring: &mut FiniteRing) {
    let n = ring.order;
    let k = ring.spec.generator_orders.len();

    // rows for generators, computed from the structure constants
    let gen_rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            (0..n as Elem)
                .map(|z| {
                    let zc = ring.coords_of(z);
                    let mut gi = vec![0u64; k];
                    gi[i] = 1;
                    ring.index_of(&ring.mul_coords(&gi, &zc))
                })
                .collect()
        })
        .collect();
    let gen_cols: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            (0..n as Elem)
                .map(|z| {
                    let zc = ring.coords_of(z);
                    let mut gi = vec![0u64; k];
                    gi[i] = 1;
                    ring.index_of(&ring.mul_coords(&zc, &gi))
                })
                .collect()
        })
        .collect();

    // predecessor of x: lowest nonzero digit decremented; pred_gen is that digit
    let mut pred = vec![0u32; n];
    let mut pred_gen = vec![usize::MAX; n];
    for x in 1..n {
        let coords = ring.coords_of(x as Elem);
        let i = (0..k).rev().find(|&i| coords[i] != 0).unwrap();
        let mut c2 = coords.clone();
        c2[i] -= 1;
        pred[x] = ring.index_of(&c2);
        pred_gen[x] = i;
    }

    let mut add = vec![0 as Elem; n * n];
    // add(g_i, z) rows first
    let gen_add: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            (0..n as Elem)
                .map(|z| {
                    let mut gi = vec![0u64; k];
                    gi[i] = 1;
                    ring.index_of(&ring.add_coords(&gi, &ring.coords_of(z)))
                })
                .collect()
        })
        .collect();
    for z in 0..n {
        add[z] = z as Elem; // 0 + z
    }
    for x in 1..n {
        let (p, i) = (pred[x] as usize, pred_gen[x]);
        for z in 0..n {
            add[x * n + z] = gen_add[i][add[p * n + z] as usize];
        }
    }

    let mut mul = vec![0 as Elem; n * n];
    for x in 1..n {
        let (p, i) = (pred[x] as usize, pred_gen[x]);
        for z in 0..n {
            mul[x * n + z] = add[gen_rows[i][z] as usize * n + mul[p * n + z] as usize];
        }
    }
    // sanity on a generator column view
    debug_assert!((0..k.min(2)).all(|i| {
        (0..n).all(|z| {
            let mut gi = vec![0u64; k];
            gi[i] = 1;
            mul[z * n + ring.index_of(&gi) as usize] == gen_cols[i][z]
        })
    }));

    ring.add_table = Some(add);
    ring.mul_table = Some(mul);
}

fn check_axioms_on_triples(ring: &FiniteRing) -> Result<()> {
    let n = ring.order;
    let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            return Err(RingError::AxiomViolation {
                law: RingLaw::Associativity,
                witness: (a, b, c),
            });
        }
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            return Err(RingError::AxiomViolation {
                law: RingLaw::LeftDistributivity,
                witness: (a, b, c),
            });
        }
        if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
            return Err(RingError::AxiomViolation {
                law: RingLaw::RightDistributivity,
                witness: (a, b, c),
            });
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_CHECK_BOUND {
        for a in 0..n as Elem {
            if ring.mul(ring.one, a) != a || ring.mul(a, ring.one) != a {
                return Err(RingError::AxiomViolation {
                    law: RingLaw::UnitLaw,
                    witness: (a, a, a),
                });
            }
            for b in 0..n as Elem {
                for c in 0..n as Elem {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5247_434f_5645_5221);
        for _ in 0..SAMPLED_TRIPLES {
            let a = rng.gen_range(0..n) as Elem;
            let b = rng.gen_range(0..n) as Elem;
            let c = rng.gen_range(0..n) as Elem;
            check(a, b, c)?;
        }
    }
    Ok(())
}

/// A ring derived from another one, together with the element-index map from
/// the parent. For quotients the map is total; for extracted components it is
/// `Elem::MAX` off the relevant subset.
pub struct DerivedRing {
    pub ring: FiniteRing,
    pub map: Vec<Elem>,
}

/// Builds a `FiniteRing` from opaque element labels with given operations, by
/// searching for an additive generator basis and reading off structure
/// constants. Returns the ring and the label -> new-index map.
pub fn ring_from_ops<FA, FM>(
    name: &str,
    labels: &[Elem],
    add: FA,
    mul: FM,
    zero: Elem,
    one: Elem,
) -> Result<(FiniteRing, HashMap<Elem, Elem>)>
where
    FA: Fn(Elem, Elem) -> Elem,
    FM: Fn(Elem, Elem) -> Elem,
{
    let n = labels.len();
    assert!(n >= 1);
    if n == 1 {
        return Err(RingError::MalformedSpec("trivial ring {0} unsupported".into()));
    }
    let ord_of = |x: Elem| -> u64 {
        let mut o = 1u64;
        let mut y = x;
        while y != zero {
            y = add(y, x);
            o += 1;
        }
        o
    };
    let mut cands: Vec<(u64, Elem)> =
        labels.iter().filter(|&&x| x != zero).map(|&x| (ord_of(x), x)).collect();
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    // backtracking search for an internal direct-sum basis of the additive group
    fn rec(
        cands: &[(u64, Elem)],
        span: &mut std::collections::HashSet<Elem>,
        basis: &mut Vec<(Elem, u64)>,
        n: usize,
        zero: Elem,
        add: &dyn Fn(Elem, Elem) -> Elem,
    ) -> bool {
        if span.len() == n {
            return true;
        }
        for &(ord, g) in cands {
            if span.contains(&g) {
                continue;
            }
            let target = span.len() * ord as usize;
            if target > n || n % target != 0 {
                continue;
            }
            // <g> must meet the current span trivially
            let mut mult = g;
            let mut ok = true;
            for _ in 1..ord {
                if span.contains(&mult) {
                    ok = false;
                    break;
                }
                mult = add(mult, g);
            }
            if !ok {
                continue;
            }
            let old: Vec<Elem> = span.iter().copied().collect();
            let mut added = Vec::new();
            let mut shift = g;
            for _ in 1..ord {
                for &s in &old {
                    let e = add(s, shift);
                    if span.insert(e) {
                        added.push(e);
                    }
                }
                shift = add(shift, g);
            }
            basis.push((g, ord));
            if span.len() == target && rec(cands, span, basis, n, zero, add) {
                return true;
            }
            basis.pop();
            for e in added {
                span.remove(&e);
            }
        }
        false
    }

    let mut span = std::collections::HashSet::new();
    span.insert(zero);
    let mut basis: Vec<(Elem, u64)> = Vec::new();
    let add_ref: &dyn Fn(Elem, Elem) -> Elem = &add;
    if !rec(&cands, &mut span, &mut basis, n, zero, add_ref) {
        return Err(RingError::MalformedSpec(
            "no additive basis found (input not an abelian group?)".into(),
        ));
    }

    let k = basis.len();
    let orders: Vec<u64> = basis.iter().map(|&(_, o)| o).collect();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * orders[i + 1] as usize;
    }
    // label of the element with given coordinates
    let elem_at = |coords: &[u64]| -> Elem {
        let mut e = zero;
        for (i, &c) in coords.iter().enumerate() {
            let mut rep = 0;
            while rep < c {
                e = add(e, basis[i].0);
                rep += 1;
            }
        }
        e
    };
    let mut coord_of: HashMap<Elem, Vec<u64>> = HashMap::new();
    let mut label_to_index: HashMap<Elem, Elem> = HashMap::new();
    for idx in 0..n {
        let mut coords = vec![0u64; k];
        let mut e = idx;
        for i in 0..k {
            coords[i] = (e / strides[i]) as u64;
            e %= strides[i];
        }
        let label = elem_at(&coords);
        if coord_of.insert(label, coords).is_some() {
            return Err(RingError::MalformedSpec("basis enumeration not bijective".into()));
        }
        label_to_index.insert(label, idx as Elem);
    }
    if coord_of.len() != n {
        return Err(RingError::MalformedSpec("basis does not span".into()));
    }

    let table: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| coord_of[&mul(basis[i].0, basis[j].0)].clone())
                .collect()
        })
        .collect();
    let unity = coord_of[&one].clone();
    let ring = make_ring(RingSpec {
        name: name.to_string(),
        generator_orders: orders,
        table,
        unity,
    })?;
    Ok((ring, label_to_index))
}

/// Quotient by a verified two-sided ideal, with the full element map.
pub fn quotient(ring: &FiniteRing, ideal: &ElemSet) -> Result<DerivedRing> {
    let cls = ring.classify_subset(ideal);
    if !cls.is_two_sided_ideal() {
        return Err(RingError::NotAnIdeal);
    }
    let n = ring.order();
    let ideal_elems = ideal.to_vec();
    // coset representative: least element index in the coset
    let mut rep = vec![Elem::MAX; n];
    for x in 0..n as Elem {
        if rep[x as usize] != Elem::MAX {
            continue;
        }
        let mut members: Vec<Elem> = ideal_elems.iter().map(|&i| ring.add(x, i)).collect();
        members.sort_unstable();
        let r = members[0];
        for m in members {
            rep[m as usize] = r;
        }
    }
    let mut reps: Vec<Elem> = rep.iter().copied().collect();
    reps.sort_unstable();
    reps.dedup();
    assert_eq!(reps.len(), n / ideal.card());

    let add = |a: Elem, b: Elem| rep[ring.add(a, b) as usize];
    let mul = |a: Elem, b: Elem| rep[ring.mul(a, b) as usize];
    let name = format!("{}/I{}", ring.name(), ideal.card());
    let (qring, label_map) = ring_from_ops(
        &name,
        &reps,
        add,
        mul,
        rep[ring.zero() as usize],
        rep[ring.one() as usize],
    )?;
    let map: Vec<Elem> = (0..n).map(|x| label_map[&rep[x]]).collect();
    Ok(DerivedRing { ring: qring, map })
}

/// Componentwise product; generator lists concatenate in order.
pub fn product(rings: &[&FiniteRing]) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(RingError::MalformedSpec("empty product".into()));
    }
    let mut orders = Vec::new();
    let mut unity = Vec::new();
    let mut offsets = Vec::new();
    for r in rings {
        offsets.push(orders.len());
        orders.extend_from_slice(&r.spec().generator_orders);
        unity.extend_from_slice(&r.spec().unity);
    }
    let k = orders.len();
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for (ri, r) in rings.iter().enumerate() {
        let off = offsets[ri];
        let kk = r.spec().generator_orders.len();
        for i in 0..kk {
            for j in 0..kk {
                for t in 0..kk {
                    table[off + i][off + j][off + t] = r.spec().table[i][j][t];
                }
            }
        }
    }
    let name = format!(
        "Prod({})",
        rings.iter().map(|r| r.name()).collect::<Vec<_>>().join(",")
    );
    make_ring(RingSpec { name, generator_orders: orders, table, unity })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FiniteRing {
        make_ring(RingSpec {
            name: "Z/4".into(),
            generator_orders: vec![4],
            table: vec![vec![vec![1]]],
            unity: vec![1],
        })
        .unwrap()
    }

    fn f2xf2() -> FiniteRing {
        make_ring(RingSpec {
            name: "F2xF2".into(),
            generator_orders: vec![2, 2],
            table: vec![
                vec![vec![1, 0], vec![0, 0]],
                vec![vec![0, 0], vec![0, 1]],
            ],
            unity: vec![1, 1],
        })
        .unwrap()
    }

    fn dual_numbers() -> FiniteRing {
        // F2[x]/(x^2): generators 1, x
        make_ring(RingSpec {
            name: "F2[x]/(x^2)".into(),
            generator_orders: vec![2, 2],
            table: vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![0, 0]],
            ],
            unity: vec![1, 0],
        })
        .unwrap()
    }

    #[test]
    fn z4_basics() {
        let r = z4();
        assert_eq!(r.order(), 4);
        assert_eq!(r.characteristic(), 4);
        assert!(r.is_commutative());
        let two = r.index_of(&[2]);
        assert_eq!(r.mul(two, two), r.zero());
        assert_eq!(r.unit_set(), vec![r.index_of(&[1]), r.index_of(&[3])]);
    }

    #[test]
    fn f2xf2_basics() {
        let r = f2xf2();
        assert_eq!(r.order(), 4);
        assert_eq!(r.characteristic(), 2);
        let e1 = r.index_of(&[1, 0]);
        assert_eq!(r.mul(e1, e1), e1);
        // three nontrivial idempotents
        let idem: Vec<Elem> = r
            .elements()
            .filter(|&x| r.mul(x, x) == x && x != r.zero() && x != r.one())
            .collect();
        assert_eq!(idem.len(), 2); // e1, e2; unity and zero excluded
    }

    #[test]
    fn dual_numbers_units() {
        let r = dual_numbers();
        let x = r.index_of(&[0, 1]);
        assert_eq!(r.mul(x, x), r.zero());
        let units = r.unit_set();
        assert_eq!(units.len(), 2);
        assert!(units.contains(&r.one()));
        assert!(units.contains(&r.add(r.one(), x)));
    }

    #[test]
    fn malformed_specs_rejected() {
        let e = make_ring(RingSpec {
            name: "bad".into(),
            generator_orders: vec![1],
            table: vec![vec![vec![0]]],
            unity: vec![0],
        });
        assert!(matches!(e, Err(RingError::MalformedSpec(_))));
        let e = make_ring(RingSpec {
            name: "bad".into(),
            generator_orders: vec![2, 2],
            table: vec![vec![vec![0, 0]]],
            unity: vec![1, 1],
        });
        assert!(matches!(e, Err(RingError::MalformedSpec(_))));
    }

    #[test]
    fn axiom_violation_detected() {
        // orders [2,2], g1 = unity, g2*g2 = g1 but unity vector wrong:
        // claim unity = g2 which fails the unit law
        let e = make_ring(RingSpec {
            name: "bad-unit".into(),
            generator_orders: vec![2, 2],
            table: vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![0, 0]],
            ],
            unity: vec![0, 1],
        });
        assert!(matches!(e, Err(RingError::AxiomViolation { .. })));
    }

    #[test]
    fn quotient_z4_by_2z4() {
        let r = z4();
        let two = r.index_of(&[2]);
        let ideal = ElemSet::from_iter(4, [r.zero(), two]);
        let q = quotient(&r, &ideal).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(q.ring.characteristic(), 2);
        assert_eq!(q.map[r.one() as usize], q.ring.one());
    }

    #[test]
    fn quotient_by_zero_ideal_is_same_ring() {
        let r = f2xf2();
        let ideal = ElemSet::from_iter(4, [r.zero()]);
        let q = quotient(&r, &ideal).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.ring.characteristic(), 2);
        assert!(q.ring.is_commutative());
    }

    #[test]
    fn quotient_requires_ideal() {
        let r = f2xf2();
        let diag = ElemSet::from_iter(4, [r.zero(), r.one()]);
        assert!(matches!(quotient(&r, &diag), Err(RingError::NotAnIdeal)));
    }

    #[test]
    fn product_orders_and_characteristic() {
        let a = z4();
        let b = f2xf2();
        let p = product(&[&a, &b]).unwrap();
        assert_eq!(p.order(), 16);
        assert_eq!(p.characteristic(), 4); // lcm(4, 2)
        let single = product(&[&b]).unwrap();
        assert_eq!(single.order(), 4);
    }

    #[test]
    fn elementwise_laws_hold_on_all_triples() {
        for r in [z4(), f2xf2(), dual_numbers()] {
            for a in r.elements() {
                for b in r.elements() {
                    for c in r.elements() {
                        assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                        assert_eq!(
                            r.mul(a, r.add(b, c)),
                            r.add(r.mul(a, b), r.mul(a, c))
                        );
                    }
                }
            }
        }
    }
}
