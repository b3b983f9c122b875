//! Brute-force ground truth for the neo balcobalancing definition.
//!
//! Nothing here uses square roots, closed forms or Binet formulas: the
//! defining sums are accumulated with additions and compared. The results are
//! then held against the closed forms from [`crate::neobalco`].

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::neobalco;

/// A pair `(n, r)` that satisfies the defining equation by summation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleHit<T> {
    pub n: T,
    pub r: T,
}

/// Evaluates `(1 + … + (n-1)) + (1 + … + n)` and
/// `2[(n-1) + n + (n+1) + … + (n+r)]` term by term and compares them.
pub fn check_definition<T: Scalar>(n: &T, r: &T) -> Result<bool> {
    if *n < T::from_small(2) || *r < T::one() {
        return Err(Error::domain(
            "definition check",
            format!("requires n >= 2 and r >= 1, got n = {n}, r = {r}"),
        ));
    }
    let mut lhs = T::zero();
    let mut k = T::one();
    while k < *n {
        lhs = lhs + k.clone() + k.clone();
        k = k + T::one();
    }
    lhs = lhs + n.clone();

    let mut inner = (n.clone() - T::one()) + n.clone();
    let mut k = T::one();
    while k <= *r {
        inner = inner + n.clone() + k.clone();
        k = k + T::one();
    }
    Ok(lhs == inner.clone() + inner)
}

/// All `(n, r)` with `n <= max_n` satisfying the definition, plus the
/// conventional `(0, 1)` at the front.
///
/// Both sides are carried incrementally across `n`, and `r` only moves by one
/// step at a time, so the scan is linear in `max_n`.
pub fn scan<T: Scalar>(max_n: &T) -> Result<Vec<OracleHit<T>>> {
    let two = T::from_small(2);
    if *max_n < two {
        return Err(Error::domain(
            "oracle scan",
            format!("requires max >= 2, got {max_n}"),
        ));
    }
    let mut hits = vec![OracleHit {
        n: T::zero(),
        r: T::one(),
    }];

    let mut n = two;
    let mut r = T::one();
    // (1) + (1 + 2) at n = 2
    let mut lhs = T::from_small(4);
    // 2[(n-1) + n + (n+1)] at n = 2, r = 1
    let mut rhs = T::from_small(12);
    loop {
        while rhs < lhs {
            r = r + T::one();
            let step = n.clone() + r.clone();
            rhs = rhs + step.clone() + step;
        }
        while r > T::one() {
            let step = n.clone() + r.clone();
            let smaller = rhs.clone() - step.clone() - step;
            if smaller < lhs {
                break;
            }
            rhs = smaller;
            r = r - T::one();
        }
        if rhs == lhs {
            hits.push(OracleHit {
                n: n.clone(),
                r: r.clone(),
            });
        }
        if n >= *max_n {
            break;
        }
        lhs = lhs + n.clone() + n.clone() + T::one();
        let shift = r.clone() + T::from_small(2);
        rhs = rhs + shift.clone() + shift;
        n = n + T::one();
    }
    Ok(hits)
}

/// Closed-form `(B, R)` pairs with `B <= max_n`, including index 0.
pub fn closed_form_pairs<T: Scalar>(max_n: &T) -> Result<Vec<OracleHit<T>>> {
    let mut out = Vec::new();
    for n in 0.. {
        let q = neobalco::neo_quad_closed::<T>(n)?;
        if q.b > *max_n {
            break;
        }
        out.push(OracleHit { n: q.b, r: q.r });
    }
    Ok(out)
}

/// The scan hits equal the closed-form enumeration below the same bound.
pub fn hits_match_closed_forms<T: Scalar>(hits: &[OracleHit<T>], max_n: &T) -> Result<bool> {
    Ok(hits == closed_form_pairs(max_n)?.as_slice())
}

/// Scans up to the `count`-th closed-form term and checks that terms
/// `1..=count` show up in order with their balcobalancers, and nothing else.
pub fn cross_check<T: Scalar>(count: usize) -> Result<bool> {
    if count < 1 {
        return Err(Error::domain("cross check", "count must be at least 1"));
    }
    let expected = neobalco::closed_quads::<T>(1, count)?;
    let bound = expected.last().expect("count >= 1").b.clone();
    let hits = scan(&bound)?;
    let found: Vec<(T, T)> = hits.into_iter().skip(1).map(|h| (h.n, h.r)).collect();
    let wanted: Vec<(T, T)> = expected.into_iter().map(|q| (q.b, q.r)).collect();
    Ok(found == wanted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ns(hits: &[OracleHit<i64>]) -> Vec<i64> {
        hits.iter().map(|h| h.n).collect()
    }

    #[test]
    fn definition_examples() {
        assert!(check_definition(&6i64, &1).unwrap());
        assert!(check_definition(&180i64, &73).unwrap());
        assert!(!check_definition(&7i64, &1).unwrap());
        assert!(check_definition(&BigInt::from(6090), &BigInt::from(2521)).unwrap());
        assert!(check_definition(&1i64, &1).is_err());
        assert!(check_definition(&6i64, &0).is_err());
    }

    #[test]
    fn scan_examples() {
        assert_eq!(ns(&scan(&1000i64).unwrap()), vec![0, 6, 180]);
        assert_eq!(ns(&scan(&7000i64).unwrap()), vec![0, 6, 180, 6090]);
        assert_eq!(ns(&scan(&5i64).unwrap()), vec![0]);
        assert_eq!(ns(&scan(&2i64).unwrap()), vec![0]);
        assert!(scan(&1i64).is_err());
    }

    #[test]
    fn scan_hits_at_the_bound() {
        assert_eq!(ns(&scan(&180i64).unwrap()), vec![0, 6, 180]);
        assert_eq!(ns(&scan(&179i64).unwrap()), vec![0, 6]);
    }

    #[test]
    fn scan_balancers() {
        let hits = scan(&7000i64).unwrap();
        let rs: Vec<i64> = hits.iter().map(|h| h.r).collect();
        assert_eq!(rs, vec![1, 1, 73, 2521]);
    }

    #[test]
    fn scan_agrees_with_naive_search() {
        // independent per-n search: smallest r whose sum reaches the left side
        let mut naive = vec![0i64];
        for n in 2..=2000i64 {
            let lhs: i64 = (1..n).sum::<i64>() + (1..=n).sum::<i64>();
            let mut r = 1;
            while 2 * ((n - 1) + n + (1..=r).map(|k| n + k).sum::<i64>()) < lhs {
                r += 1;
            }
            if check_definition(&n, &r).unwrap() {
                naive.push(n);
            }
        }
        assert_eq!(ns(&scan(&2000i64).unwrap()), naive);
    }

    #[test]
    fn generic_scalars_agree() {
        let small = scan(&10_000i64).unwrap();
        let big = scan(&BigInt::from(10_000)).unwrap();
        assert_eq!(small.len(), big.len());
        for (s, b) in small.iter().zip(&big) {
            assert_eq!(BigInt::from(s.n), b.n);
            assert_eq!(BigInt::from(s.r), b.r);
        }
    }

    #[test]
    fn cross_check_examples() {
        assert!(cross_check::<i64>(1).unwrap());
        assert!(cross_check::<i64>(3).unwrap());
        assert!(cross_check::<i64>(4).unwrap());
        assert!(cross_check::<i64>(0).is_err());
    }

    #[test]
    fn definition_holds_for_generated_quads() {
        for n in 1..=5 {
            let q = neobalco::neo_quad_closed::<i64>(n).unwrap();
            assert!(check_definition(&q.b, &q.r).unwrap(), "n = {n}");
        }
    }
}
