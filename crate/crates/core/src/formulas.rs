//! Closed-form covering-number arithmetic: irreducible-polynomial counts,
//! the coverability threshold tau, product-of-fields formulas, subideal
//! counts, the commutative decision tree, and the achievable-sigma scan.

use crate::construct::{is_prime, prime_power};
use crate::error::{Result, RingError};
use crate::radical::{jacobson_radical, semisimple_profile, wedderburn_complements, SemisimpleProfile};
use crate::ring::FiniteRing;

/// Number of monic irreducible polynomials of degree n over F_p, by Mobius
/// inversion of p^n = sum over d|n of d*psi(p,d).
pub fn psi(p: u64, n: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    assert!(n >= 1);
    let mut sum: i64 = 0;
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        sum += mobius(d as u64) as i64 * (p as i64).pow(n / d);
    }
    assert!(sum > 0 && sum % n as i64 == 0);
    Ok(sum as u64 / n as u64)
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut k = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0; // square factor
            }
            k += 1;
        }
        d += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Independent route: count degree-n irreducibles by scanning all monic
/// polynomials. Practical for p^n up to a few thousand.
pub fn psi_exhaustive(p: u64, n: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    let total = (p as u128).pow(n);
    assert!(total <= 1 << 20, "scan bound");
    let mut count = 0;
    for code in 0..total as u64 {
        // coefficients of x^0..x^{n-1}, leading coefficient 1
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = code;
        for _ in 0..n {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        if crate::construct::poly_is_irreducible(p, &coeffs) {
            count += 1;
        }
    }
    Ok(count)
}

/// omega(1) = 1; otherwise the number of distinct prime divisors.
pub fn omega(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let mut n = n;
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            count += 1;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Coverability threshold for powers of F_q (q = p^n): p when n = 1, else
/// psi(p,n) + 1.
pub fn tau(q: u64) -> Result<u64> {
    let (p, n) = prime_power(q)?;
    if n == 1 {
        Ok(p)
    } else {
        Ok(psi(p, n)? + 1)
    }
}

/// Which closed form produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionSource {
    /// t < tau(q): a power of F_q below threshold, or a field itself
    BelowThreshold,
    /// sigma of a product of copies of one field
    FieldPower,
    /// minimum over the blocks of a product of distinct field powers
    FieldProduct,
    /// min over lambda_2 of |F_i| + 1 (the radical-cover branch)
    RadicalBranch,
    /// sigma passed through to the semisimple quotient R/J
    QuotientBranch,
    /// the underlying ring is generated by one element
    NotCoverable,
}

#[derive(Debug, Clone)]
pub struct SigmaPrediction {
    pub coverable: bool,
    pub sigma: Option<u64>,
    pub source: PredictionSource,
    /// (p, n) for the governing field q = p^n when one exists
    pub field: Option<(u64, u32)>,
}

impl SigmaPrediction {
    fn not_coverable(source: PredictionSource) -> Self {
        SigmaPrediction { coverable: false, sigma: None, source, field: None }
    }
}

/// sigma of a product of t copies of F_q: not coverable below the threshold
/// t < tau(q), and tau(q)*omega(n) + n*C(tau(q),2) at or above it (the value
/// does not grow with t).
pub fn sigma_field_power(q: u64, t: u64) -> Result<SigmaPrediction> {
    let (p, n) = prime_power(q)?;
    let tq = tau(q)?;
    if t < tq {
        return Ok(SigmaPrediction {
            coverable: false,
            sigma: None,
            source: PredictionSource::BelowThreshold,
            field: Some((p, n)),
        });
    }
    let sigma = tq * omega(n as u64) + n as u64 * (tq * (tq - 1) / 2);
    Ok(SigmaPrediction {
        coverable: true,
        sigma: Some(sigma),
        source: PredictionSource::FieldPower,
        field: Some((p, n)),
    })
}

/// A product of field powers: distinct prime powers q_i, multiplicities t_i.
#[derive(Debug, Clone)]
pub struct FieldProductShape {
    pub blocks: Vec<(u64, u64)>,
}

impl FieldProductShape {
    pub fn new(blocks: Vec<(u64, u64)>) -> Result<Self> {
        for (i, &(q, t)) in blocks.iter().enumerate() {
            prime_power(q)?;
            assert!(t >= 1);
            assert!(
                blocks[..i].iter().all(|&(q2, _)| q2 != q),
                "block field orders must be distinct"
            );
        }
        Ok(FieldProductShape { blocks })
    }

    /// Reads off the shape of a commutative semisimple ring from its
    /// primitive idempotent decomposition.
    pub fn of_semisimple(profile: &SemisimpleProfile) -> Result<Self> {
        let mut blocks: Vec<(u64, u64)> = Vec::new();
        for &q in &profile.field_orders {
            match blocks.iter_mut().find(|(q2, _)| *q2 == q) {
                Some((_, t)) => *t += 1,
                None => blocks.push((q, 1)),
            }
        }
        blocks.sort_unstable();
        FieldProductShape::new(blocks)
    }
}

/// sigma of a product of distinct field powers: the minimum over blocks.
pub fn sigma_field_product(shape: &FieldProductShape) -> Result<SigmaPrediction> {
    let mut best: Option<SigmaPrediction> = None;
    for &(q, t) in &shape.blocks {
        let pred = sigma_field_power(q, t)?;
        if let Some(s) = pred.sigma {
            if best.as_ref().map_or(true, |b| s < b.sigma.unwrap()) {
                best = Some(pred);
            }
        }
    }
    Ok(match best {
        Some(mut pred) => {
            pred.source = PredictionSource::FieldProduct;
            pred
        }
        None => SigmaPrediction::not_coverable(PredictionSource::BelowThreshold),
    })
}

/// Number of maximal subideals of J: sum over i in lambda of
/// (|F_i|^{d_i} - 1)/(|F_i| - 1).
pub fn count_maximal_subideals(profile: &SemisimpleProfile) -> u64 {
    let mut total = 0;
    for &i in &profile.lambda {
        let q = profile.field_orders[i];
        let d = profile.dims[i];
        let num = q.pow(d) - 1;
        debug_assert_eq!(num % (q - 1), 0);
        total += num / (q - 1);
    }
    total
}

/// sigma(J) closed form: coverable iff lambda_2 is nonempty, in which case
/// it is min over lambda_2 of |F_i| + 1.
pub fn sigma_j_formula(profile: &SemisimpleProfile) -> SigmaPrediction {
    let best = profile
        .lambda2
        .iter()
        .map(|&i| profile.field_orders[i])
        .min();
    match best {
        None => SigmaPrediction::not_coverable(PredictionSource::RadicalBranch),
        Some(q) => SigmaPrediction {
            coverable: true,
            sigma: Some(q + 1),
            source: PredictionSource::RadicalBranch,
            field: prime_power(q).ok(),
        },
    }
}

/// Full commutative decision tree. Reduces R (mod p-multiples, then mod the
/// radical square), computes the unique complement profile, and resolves the
/// case split by testing J's coverability: when J is not coverable the
/// covering number passes to R/J (a product of fields); otherwise the
/// radical branch min(|F_i|+1) competes with the quotient value and the
/// smaller one governs.
pub fn predict_sigma_commutative(ring: &FiniteRing) -> Result<SigmaPrediction> {
    if !ring.is_commutative() {
        return Err(RingError::NotCommutative);
    }
    let reduced = crate::radical::reduce(ring)?;
    let r = &reduced.ring;
    let rad = jacobson_radical(r);
    let comps = wedderburn_complements(r, &rad)?;
    assert_eq!(comps.len(), 1, "commutative rings have a unique complement");
    let profile = semisimple_profile(r, &comps[0].set, &rad)?;
    let shape = FieldProductShape::of_semisimple(&profile)?;
    let quotient_pred = sigma_field_product(&shape)?;

    let radical_pred = sigma_j_formula(&profile);
    if !radical_pred.coverable {
        // J not coverable: the covering number is that of R/J
        return Ok(match quotient_pred.sigma {
            None => SigmaPrediction::not_coverable(PredictionSource::NotCoverable),
            Some(s) => SigmaPrediction {
                coverable: true,
                sigma: Some(s),
                source: PredictionSource::QuotientBranch,
                field: quotient_pred.field,
            },
        });
    }
    let rs = radical_pred.sigma.unwrap();
    Ok(match quotient_pred.sigma {
        Some(qs) if qs <= rs => SigmaPrediction {
            coverable: true,
            sigma: Some(qs),
            source: PredictionSource::QuotientBranch,
            field: quotient_pred.field,
        },
        _ => radical_pred,
    })
}

/// One achievable covering-number value with the parameters that realize it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Achieved {
    /// sigma = p^d + 1 from the radical branch over F_{p^d}
    RadicalBranch { p: u64, d: u32 },
    /// sigma = tau(q)*omega(n) + n*C(tau(q),2) from a product of fields
    FieldPower { q: u64 },
}

pub struct ThirteenReport {
    pub bound: u64,
    /// sorted distinct achievable values with provenance
    pub achievable: Vec<(u64, Achieved)>,
    pub thirteen_absent: bool,
    /// achievable values adjacent to 13 (12 and 14) for audit
    pub near_misses: Vec<(u64, Achieved)>,
}

/// Scans both commutative closed forms for all prime powers q <= bound and
/// reports every achievable covering number, certifying that 13 never
/// occurs.
pub fn thirteen_search(bound: u64) -> Result<ThirteenReport> {
    let mut achievable: Vec<(u64, Achieved)> = Vec::new();
    let push = |v: u64, a: Achieved, list: &mut Vec<(u64, Achieved)>| {
        if !list.iter().any(|(v2, _)| *v2 == v) {
            list.push((v, a));
        }
    };
    for q in 2..=bound {
        let Ok((p, n)) = prime_power(q) else { continue };
        // radical branch: sigma = q + 1 where q = |F_i| = p^d
        push(q + 1, Achieved::RadicalBranch { p, d: n }, &mut achievable);
        // product-of-fields branch at the coverability threshold
        let pred = sigma_field_power(q, tau(q)?)?;
        push(
            pred.sigma.expect("threshold multiplicity covers"),
            Achieved::FieldPower { q },
            &mut achievable,
        );
    }
    achievable.sort_by_key(|(v, _)| *v);
    let thirteen_absent = !achievable.iter().any(|(v, _)| *v == 13);
    let near_misses = achievable
        .iter()
        .filter(|(v, _)| *v == 12 || *v == 14)
        .cloned()
        .collect();
    Ok(ThirteenReport { bound, achievable, thirteen_absent, near_misses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;

    #[test]
    fn psi_small_values() {
        assert_eq!(psi(2, 1).unwrap(), 2);
        assert_eq!(psi(2, 2).unwrap(), 1);
        assert_eq!(psi(2, 3).unwrap(), 2);
        assert_eq!(psi(3, 2).unwrap(), 3);
        assert_eq!(psi(5, 1).unwrap(), 5);
    }

    #[test]
    fn psi_routes_agree() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for n in 1..=12u32 {
                if (p as u128).pow(n) > 4096 {
                    continue;
                }
                assert_eq!(
                    psi(p, n).unwrap(),
                    psi_exhaustive(p, n).unwrap(),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn psi_rejects_composite() {
        assert!(matches!(psi(6, 2), Err(RingError::NotPrime(6))));
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(1), 1);
        assert_eq!(omega(2), 1);
        assert_eq!(omega(12), 2);
        assert_eq!(omega(30), 3);
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(2).unwrap(), 2);
        assert_eq!(tau(3).unwrap(), 3);
        assert_eq!(tau(4).unwrap(), 2);
        assert_eq!(tau(8).unwrap(), 3);
        assert_eq!(tau(9).unwrap(), 4);
        assert!(tau(6).is_err());
    }

    #[test]
    fn field_power_values() {
        assert_eq!(sigma_field_power(2, 2).unwrap().sigma, Some(3));
        assert_eq!(sigma_field_power(4, 2).unwrap().sigma, Some(4));
        assert_eq!(sigma_field_power(8, 3).unwrap().sigma, Some(12));
        assert!(!sigma_field_power(4, 1).unwrap().coverable);
        assert!(!sigma_field_power(3, 2).unwrap().coverable);
        // value is constant above the threshold
        assert_eq!(sigma_field_power(2, 7).unwrap().sigma, Some(3));
    }

    #[test]
    fn field_product_values() {
        let s = FieldProductShape::new(vec![(2, 2), (4, 1)]).unwrap();
        assert_eq!(sigma_field_product(&s).unwrap().sigma, Some(3));
        let s = FieldProductShape::new(vec![(4, 2), (8, 3)]).unwrap();
        assert_eq!(sigma_field_product(&s).unwrap().sigma, Some(4));
        let s = FieldProductShape::new(vec![(3, 1)]).unwrap();
        assert!(!sigma_field_product(&s).unwrap().coverable);
    }

    #[test]
    fn subideal_count_formula() {
        for (dsl, expected) in [("T3(F(2))", 3u64), ("T3(F(3))", 4), ("T3(F(4))", 5)] {
            let r = construct(dsl).unwrap();
            let rad = jacobson_radical(&r);
            let comps = wedderburn_complements(&r, &rad).unwrap();
            let prof = semisimple_profile(&r, &comps[0].set, &rad).unwrap();
            assert_eq!(count_maximal_subideals(&prof), expected, "{dsl}");
            // crosses the lattice route
            let maxes = crate::lattice::maximal_subideals(&r, &rad.j.set).unwrap();
            assert_eq!(maxes.len() as u64, expected, "{dsl}");
        }
    }

    #[test]
    fn sigma_j_formula_matches_solver() {
        for dsl in ["T3(F(2))", "T3(F(3))", "T3(F(4))"] {
            let r = construct(dsl).unwrap();
            let rad = jacobson_radical(&r);
            let comps = wedderburn_complements(&r, &rad).unwrap();
            let prof = semisimple_profile(&r, &comps[0].set, &rad).unwrap();
            let formula = sigma_j_formula(&prof);
            let solved = crate::cover::sigma_j(&r, &rad).unwrap();
            assert_eq!(formula.sigma.map(|s| s as u32), solved.sigma, "{dsl}");
        }
    }

    #[test]
    fn commutative_predictions() {
        let cases = [
            ("T3(F(3))", Some(4)),
            ("T3(F(2))", Some(3)),
            ("Prod(F(2),F(2),F(2))", Some(3)),
            ("Prod(F(4),F(4))", Some(4)),
            ("Zmod(9)", None),
            ("Zmod(4)", None),
            ("PolyQuot(F(2),[0,0,1])", None),
            ("Prod(Zmod(4),Zmod(4))", Some(3)),
        ];
        for (dsl, expected) in cases {
            let r = construct(dsl).unwrap();
            let pred = predict_sigma_commutative(&r).unwrap();
            assert_eq!(pred.sigma, expected, "{dsl}");
        }
    }

    #[test]
    fn prediction_matches_solver_on_commutative_rings() {
        for dsl in [
            "T3(F(2))",
            "T3(F(3))",
            "Prod(F(2),F(2))",
            "Prod(F(2),F(4))",
            "Prod(F(4),F(4))",
            "Prod(T3(F(2)),F(2))",
            "Zmod(8)",
            "PolyQuot(F(3),[0,0,0,1])",
        ] {
            let r = construct(dsl).unwrap();
            let pred = predict_sigma_commutative(&r).unwrap();
            let solved = crate::cover::sigma_exact(&r).unwrap();
            assert_eq!(pred.sigma.map(|s| s as u32), solved.sigma, "{dsl}");
        }
    }

    #[test]
    fn rejects_noncommutative() {
        let r = construct("M(2,F(2))").unwrap();
        assert!(matches!(
            predict_sigma_commutative(&r),
            Err(RingError::NotCommutative)
        ));
    }

    #[test]
    fn thirteen_unachievable() {
        let rep = thirteen_search(64).unwrap();
        assert!(rep.thirteen_absent);
        let values: Vec<u64> = rep.achievable.iter().map(|(v, _)| *v).collect();
        for v in [3, 4, 5, 6, 9, 10, 12] {
            assert!(values.contains(&v), "{v} should be achievable");
        }
        assert!(!values.contains(&13));
        // the nearest hit below 13 comes from q = 8 on the product branch
        assert!(rep
            .near_misses
            .iter()
            .any(|(v, a)| *v == 12 && matches!(a, Achieved::FieldPower { q: 8 })));
    }
}
