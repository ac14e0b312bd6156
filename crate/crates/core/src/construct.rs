//! Named ring constructors and the text DSL that builds them.
//!
//! Accepted forms: `F(q)`, `Zmod(m)`, `M(n,F(q))`, `Tri(n,F(q))`, `T3(F(q))`,
//! `Prod(r1,r2,...)`, `GroupAlg(F(p),D8|A4|Cn)`, `PolyQuot(F(p),[c0,c1,...])`
//! where the list gives ascending coefficients of a monic modulus.

use crate::error::{Result, RingError};
use crate::ring::{make_ring, product, FiniteRing, RingSpec};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power q = p^n; errors otherwise.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(RingError::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut n = 0;
            while m % p == 0 {
                m /= p;
                n += 1;
            }
            return if m == 1 { Ok((p, n)) } else { Err(RingError::NotPrimePower(q)) };
        }
        p += 1;
    }
    Ok((q, 1))
}

// ---- polynomial arithmetic over F_p (ascending coefficient vectors) ----

pub fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of a modulo monic b.
pub fn poly_rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    assert!(b.last() == Some(&1), "modulus must be monic");
    while poly_trim(r.clone()).len() > db {
        let r2 = poly_trim(r.clone());
        let lead = *r2.last().unwrap();
        let shift = r2.len() - 1 - db;
        let mut rr = r2;
        for (i, &c) in b.iter().enumerate() {
            let idx = i + shift;
            rr[idx] = (rr[idx] + p * lead - (lead * c) % p) % p;
        }
        r = rr;
    }
    poly_trim(r)
}

pub fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let f = poly_trim(f.to_vec());
    let d = f.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // trial division by all monic polynomials of degree 1..=d/2
    for deg in 1..=d / 2 {
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut g = vec![0u64; deg + 1];
            let mut c = code;
            for gi in g.iter_mut().take(deg) {
                *gi = c % p;
                c /= p;
            }
            g[deg] = 1;
            if poly_rem(p, &f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The canonical degree-n irreducible monic over F_p: minimal code
/// sum(c_i p^i) over the non-leading coefficients.
pub fn least_irreducible(p: u64, n: u32) -> Vec<u64> {
    let count = p.pow(n);
    for code in 0..count {
        let mut f = vec![0u64; n as usize + 1];
        let mut c = code;
        for fi in f.iter_mut().take(n as usize) {
            *fi = c % p;
            c /= p;
        }
        f[n as usize] = 1;
        if poly_is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

// ---- basis-algebra builder: F_p-algebra given a basis multiplication table ----

fn algebra_ring(name: &str, p: u64, dim: usize, prod: &[Vec<Vec<u64>>], unity: Vec<u64>) -> Result<FiniteRing> {
    make_ring(RingSpec {
        name: name.to_string(),
        generator_orders: vec![p; dim],
        table: prod.to_vec(),
        unity,
    })
}

/// F_q as F_p[x]/(f) with the canonical least irreducible f; basis 1,x,..,x^{n-1}.
pub fn field(q: u64) -> Result<FiniteRing> {
    let (p, n) = prime_power(q)?;
    if n == 1 {
        return make_ring(RingSpec {
            name: format!("F({q})"),
            generator_orders: vec![p],
            table: vec![vec![vec![1]]],
            unity: vec![1],
        });
    }
    let f = least_irreducible(p, n);
    poly_quot_named(&format!("F({q})"), p, &f)
}

fn poly_quot_named(name: &str, p: u64, modulus: &[u64]) -> Result<FiniteRing> {
    let f = poly_trim(modulus.to_vec());
    if f.len() < 2 || *f.last().unwrap() != 1 {
        return Err(RingError::MalformedSpec(
            "modulus must be monic of degree >= 1".into(),
        ));
    }
    let d = f.len() - 1;
    let mut table = vec![vec![vec![0u64; d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut xi = vec![0u64; i + 1];
            xi[i] = 1;
            let mut xj = vec![0u64; j + 1];
            xj[j] = 1;
            let r = poly_rem(p, &poly_mul(p, &xi, &xj), &f);
            for (t, &c) in r.iter().enumerate() {
                table[i][j][t] = c;
            }
        }
    }
    let mut unity = vec![0u64; d];
    unity[0] = 1;
    algebra_ring(name, p, d, &table, unity)
}

pub fn zmod(m: u64) -> Result<FiniteRing> {
    make_ring(RingSpec {
        name: format!("Zmod({m})"),
        generator_orders: vec![m],
        table: vec![vec![vec![1]]],
        unity: vec![1],
    })
}

/// Builds an F_p-algebra from an F_q basis algebra: basis elements are
/// tensor products (field basis) x (module basis).
struct FqAlgebra {
    p: u64,
    fdim: usize,      // degree of F_q over F_p
    modulus: Vec<u64>, // irreducible for F_q
}

impl FqAlgebra {
    fn new(q: u64) -> Result<FqAlgebra> {
        let (p, n) = prime_power(q)?;
        let modulus = if n == 1 { vec![0, 1] } else { least_irreducible(p, n) };
        Ok(FqAlgebra { p, fdim: n as usize, modulus })
    }

    /// product of two F_q coefficients given as ascending F_p vectors
    fn fmul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = poly_rem(self.p, &poly_mul(self.p, a, b), &self.modulus);
        r.resize(self.fdim, 0);
        r
    }
}

/// Generic matrix-shaped algebra over F_q on a set of cells (i,j), with
/// matrix-unit multiplication e_ij e_kl = [j==k] e_il.
fn matrix_cells_ring(name: &str, q: u64, cells: &[(usize, usize)], nn: usize) -> Result<FiniteRing> {
    let alg = FqAlgebra::new(q)?;
    let fd = alg.fdim;
    let dim = cells.len() * fd;
    let cell_index: std::collections::HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    // basis b_{c,t} = e_c * x^t
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for (ci, &(i, j)) in cells.iter().enumerate() {
        for s in 0..fd {
            for (cj, &(k, l)) in cells.iter().enumerate() {
                for t in 0..fd {
                    let a = ci * fd + s;
                    let b = cj * fd + t;
                    if j != k {
                        continue;
                    }
                    let target = match cell_index.get(&(i, l)) {
                        Some(&ti) => ti,
                        None => {
                            // product escapes the chosen cell set
                            return Err(RingError::MalformedSpec(
                                "cell set not multiplicatively closed".into(),
                            ));
                        }
                    };
                    let mut xs = vec![0u64; s + 1];
                    xs[s] = 1;
                    let mut xt = vec![0u64; t + 1];
                    xt[t] = 1;
                    let coeff = alg.fmul(&xs, &xt);
                    for (u, &cu) in coeff.iter().enumerate() {
                        table[a][b][target * fd + u] = cu;
                    }
                }
            }
        }
    }
    let mut unity = vec![0u64; dim];
    for d in 0..nn {
        if let Some(&ci) = cell_index.get(&(d, d)) {
            unity[ci * fd] = 1;
        }
    }
    algebra_ring(name, alg.p, dim, &table, unity)
}

pub fn matrix_ring(n: usize, q: u64) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::MalformedSpec("matrix dimension 0".into()));
    }
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_cells_ring(&format!("M({n},F({q}))"), q, &cells, n)
}

pub fn triangular_ring(n: usize, q: u64) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::MalformedSpec("matrix dimension 0".into()));
    }
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_cells_ring(&format!("Tri({n},F({q}))"), q, &cells, n)
}

/// The local commutative ring F_q + J with dim_Fq J = 2 and J^2 = 0,
/// realized by matrices [[a,b,c],[0,a,0],[0,0,a]].
pub fn t3(q: u64) -> Result<FiniteRing> {
    let alg = FqAlgebra::new(q)?;
    let fd = alg.fdim;
    let dim = 3 * fd;
    // basis blocks: 0 -> unity part, 1 -> u, 2 -> v; u,v square to zero,
    // a-block acts on all three as F_q scalar
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for bi in 0..3 {
        for s in 0..fd {
            for bj in 0..3 {
                for t in 0..fd {
                    let a = bi * fd + s;
                    let b = bj * fd + t;
                    let target = match (bi, bj) {
                        (0, x) => Some(x),
                        (x, 0) => Some(x),
                        _ => None, // J^2 = 0
                    };
                    if let Some(tb) = target {
                        let mut xs = vec![0u64; s + 1];
                        xs[s] = 1;
                        let mut xt = vec![0u64; t + 1];
                        xt[t] = 1;
                        let coeff = alg.fmul(&xs, &xt);
                        for (u, &cu) in coeff.iter().enumerate() {
                            table[a][b][tb * fd + u] = cu;
                        }
                    }
                }
            }
        }
    }
    let mut unity = vec![0u64; dim];
    unity[0] = 1;
    algebra_ring(&format!("T3(F({q}))"), alg.p, dim, &table, unity)
}

// ---- group algebras ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupName {
    D8,
    A4,
    Cyclic(u64),
}

fn group_table(g: GroupName) -> Vec<Vec<usize>> {
    match g {
        GroupName::Cyclic(n) => {
            let n = n as usize;
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
        }
        GroupName::D8 => {
            // elements r^i s^j, i < 4, j < 2; index = i + 4j
            // (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l)
            let idx = |i: i64, j: i64| -> usize {
                (i.rem_euclid(4) + 4 * j.rem_euclid(2)) as usize
            };
            let mut t = vec![vec![0usize; 8]; 8];
            for i in 0..4i64 {
                for j in 0..2i64 {
                    for k in 0..4i64 {
                        for l in 0..2i64 {
                            let kk = if j == 1 { -k } else { k };
                            t[idx(i, j)][idx(k, l)] = idx(i + kk, j + l);
                        }
                    }
                }
            }
            t
        }
        GroupName::A4 => {
            // even permutations of 4 points; composition (a*b)(x) = a(b(x))
            let mut perms: Vec<[usize; 4]> = Vec::new();
            let mut items = [0usize, 1, 2, 3];
            permute_collect(&mut items, 0, &mut perms);
            perms.retain(|p| parity(p) == 0);
            perms.sort();
            assert_eq!(perms.len(), 12);
            let pos: std::collections::HashMap<[usize; 4], usize> =
                perms.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            perms
                .iter()
                .map(|a| {
                    perms
                        .iter()
                        .map(|b| {
                            let mut c = [0usize; 4];
                            for (x, ci) in c.iter_mut().enumerate() {
                                *ci = a[b[x]];
                            }
                            pos[&c]
                        })
                        .collect()
                })
                .collect()
        }
    }
}

fn permute_collect(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute_collect(items, k + 1, out);
        items.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

pub fn group_algebra(p: u64, g: GroupName) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if let GroupName::Cyclic(n) = g {
        if n == 0 {
            return Err(RingError::MalformedSpec("cyclic group of order 0".into()));
        }
    }
    let t = group_table(g);
    let dim = t.len();
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            table[i][j][t[i][j]] = 1;
        }
    }
    // identity element of each group is index 0 by construction
    debug_assert!((0..dim).all(|i| t[0][i] == i && t[i][0] == i));
    let mut unity = vec![0u64; dim];
    unity[0] = 1;
    let gname = match g {
        GroupName::D8 => "D8".to_string(),
        GroupName::A4 => "A4".to_string(),
        GroupName::Cyclic(n) => format!("C{n}"),
    };
    algebra_ring(&format!("GroupAlg(F({p}),{gname})"), p, dim, &table, unity)
}

pub fn poly_quot(p: u64, modulus: &[u64]) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    let name = format!(
        "PolyQuot(F({p}),[{}])",
        modulus.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    );
    poly_quot_named(&name, p, modulus)
}

// ---- DSL parser ----

#[derive(Debug, Clone)]
enum Node {
    Num(u64),
    Word(String),
    List(Vec<u64>),
    Call(String, Vec<Node>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(RingError::Parse(format!(
                "expected '{}' at position {}",
                c as char, self.pos
            )))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(RingError::Parse(format!("expected number at {}", start)));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| RingError::Parse("number overflow".into()))
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(RingError::Parse(format!("expected name at {}", start)));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }

    fn node(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'[') => {
                self.expect(b'[')?;
                let mut items = Vec::new();
                if self.peek() != Some(b']') {
                    loop {
                        items.push(self.number()?);
                        if self.peek() == Some(b',') {
                            self.expect(b',')?;
                        } else {
                            break;
                        }
                    }
                }
                self.expect(b']')?;
                Ok(Node::List(items))
            }
            Some(c) if c.is_ascii_digit() => Ok(Node::Num(self.number()?)),
            Some(_) => {
                let w = self.word()?;
                if self.peek() == Some(b'(') {
                    self.expect(b'(')?;
                    let mut args = Vec::new();
                    if self.peek() != Some(b')') {
                        loop {
                            args.push(self.node()?);
                            if self.peek() == Some(b',') {
                                self.expect(b',')?;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(b')')?;
                    Ok(Node::Call(w, args))
                } else {
                    Ok(Node::Word(w))
                }
            }
            None => Err(RingError::Parse("unexpected end of input".into())),
        }
    }
}

fn field_arg(node: &Node) -> Result<u64> {
    match node {
        Node::Call(name, args) if name == "F" && args.len() == 1 => match &args[0] {
            Node::Num(q) => Ok(*q),
            _ => Err(RingError::Parse("F() takes a number".into())),
        },
        _ => Err(RingError::Parse("expected F(q) argument".into())),
    }
}

fn eval(node: &Node) -> Result<FiniteRing> {
    match node {
        Node::Call(name, args) => match (name.as_str(), args.as_slice()) {
            ("F", [Node::Num(q)]) => field(*q),
            ("Zmod", [Node::Num(m)]) => zmod(*m),
            ("M", [Node::Num(n), f]) => matrix_ring(*n as usize, field_arg(f)?),
            ("Tri", [Node::Num(n), f]) => triangular_ring(*n as usize, field_arg(f)?),
            ("T3", [f]) => t3(field_arg(f)?),
            ("Prod", rs) if !rs.is_empty() => {
                let factors: Vec<FiniteRing> = rs.iter().map(eval).collect::<Result<_>>()?;
                let refs: Vec<&FiniteRing> = factors.iter().collect();
                product(&refs)
            }
            ("GroupAlg", [f, Node::Word(g)]) => {
                let p = field_arg(f)?;
                let gname = match g.as_str() {
                    "D8" => GroupName::D8,
                    "A4" => GroupName::A4,
                    other => {
                        let rest = other
                            .strip_prefix('C')
                            .and_then(|r| r.strip_prefix('_').or(Some(r)))
                            .and_then(|r| r.parse::<u64>().ok());
                        match rest {
                            Some(n) => GroupName::Cyclic(n),
                            None => {
                                return Err(RingError::UnknownConstructor(format!(
                                    "GroupAlg group {other}"
                                )))
                            }
                        }
                    }
                };
                group_algebra(p, gname)
            }
            ("PolyQuot", [f, Node::List(coeffs)]) => poly_quot(field_arg(f)?, coeffs),
            _ => Err(RingError::UnknownConstructor(name.clone())),
        },
        Node::Word(w) => Err(RingError::UnknownConstructor(w.clone())),
        _ => Err(RingError::Parse("expected a constructor call".into())),
    }
}

/// Builds a ring from a constructor DSL string.
pub fn construct(dsl: &str) -> Result<FiniteRing> {
    let mut p = Parser::new(dsl);
    let node = p.node()?;
    if p.peek().is_some() {
        return Err(RingError::Parse(format!("trailing input at {}", p.pos)));
    }
    eval(&node)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_4_structure() {
        let f4 = construct("F(4)").unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(f4.characteristic(), 2);
        assert!(f4.is_commutative());
        // x^2 = x + 1 for the canonical modulus x^2 + x + 1
        let x = f4.index_of(&[0, 1]);
        assert_eq!(f4.mul(x, x), f4.index_of(&[1, 1]));
        assert_eq!(f4.unit_set().len(), 3);
    }

    #[test]
    fn canonical_modulus_is_least() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]); // x^2 + x + 1
        assert_eq!(least_irreducible(2, 3), vec![1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]); // x^2 + 1
    }

    #[test]
    fn t3_f2_structure() {
        let r = construct("T3(F(2))").unwrap();
        assert_eq!(r.order(), 8);
        assert!(r.is_commutative());
        assert_eq!(r.characteristic(), 2);
        // u and v square to zero
        let u = r.index_of(&[0, 1, 0]);
        let v = r.index_of(&[0, 0, 1]);
        assert_eq!(r.mul(u, u), r.zero());
        assert_eq!(r.mul(u, v), r.zero());
        assert_eq!(r.mul(v, v), r.zero());
    }

    #[test]
    fn m2_f3_structure() {
        let r = construct("M(2,F(3))").unwrap();
        assert_eq!(r.order(), 81);
        assert!(!r.is_commutative());
        assert_eq!(r.characteristic(), 3);
    }

    #[test]
    fn tri2_f2_structure() {
        let r = construct("Tri(2,F(2))").unwrap();
        assert_eq!(r.order(), 8);
        assert!(!r.is_commutative());
    }

    #[test]
    fn group_algebras() {
        let d8 = construct("GroupAlg(F(2),D8)").unwrap();
        assert_eq!(d8.order(), 256);
        assert!(!d8.is_commutative());
        let c4 = construct("GroupAlg(F(2),C4)").unwrap();
        assert_eq!(c4.order(), 16);
        assert!(c4.is_commutative());
        let a4 = construct("GroupAlg(F(3),A4)").unwrap();
        assert_eq!(a4.order(), 3u64.pow(12) as usize);
    }

    #[test]
    fn poly_quot_dual_numbers() {
        let r = construct("PolyQuot(F(2),[0,0,1])").unwrap();
        assert_eq!(r.order(), 4);
        let x = r.index_of(&[0, 1]);
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.unit_set().len(), 2);
    }

    #[test]
    fn dsl_errors() {
        assert!(matches!(construct("F(6)"), Err(RingError::NotPrimePower(6))));
        assert!(matches!(construct("Wat(3)"), Err(RingError::UnknownConstructor(_))));
        assert!(matches!(construct("GroupAlg(F(4),D8)"), Err(RingError::NotPrime(4))));
        assert!(construct("F(4) junk").is_err());
    }

    #[test]
    fn products_parse_and_multiply_componentwise() {
        let r = construct("Prod(F(2),F(2))").unwrap();
        assert_eq!(r.order(), 4);
        let r = construct("Prod(F(4),F(4))").unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.characteristic(), 2);
        let r = construct("Prod(Zmod(4),F(3))").unwrap();
        assert_eq!(r.order(), 12);
        assert_eq!(r.characteristic(), 12);
    }
}
