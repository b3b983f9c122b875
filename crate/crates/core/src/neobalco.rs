//! Neo balcobalancing numbers and their companions.
//!
//! A positive integer `n` is a neo balcobalancing number with balcobalancer
//! `r` when
//!
//! ```text
//! (1 + … + (n-1)) + (1 + … + n) = 2[(n-1) + n + (n+1) + … + (n+r)]
//! ```
//!
//! which happens exactly when `8n² − 12n + 9` is a perfect square. Writing
//! `B`, `C`, `R`, `CR` for the neo balcobalancing number, its Lucas companion
//! `√(8B² − 12B + 9)`, the balcobalancer, and `√(2R² + 5R + 2)`, each term can
//! be computed three ways:
//!
//! * closed forms in the balancing numbers `B_{2n-1}`, `B_{2n-2}`;
//! * Binet forms in powers of α = 1 + √2 and β = 1 − √2;
//! * the order-3 recurrence `X_n = 35X_{n-1} − 35X_{n-2} + X_{n-3}`, valid from
//!   `n = 3` for `B`, `C`, `R` but only from `n = 4` for `CR`.
//!
//! Index 0 carries the conventional values `(B, C, R, CR) = (0, 3, 1, 3)`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exactnum::{alpha_beta_diff, alpha_beta_sum, as_perfect_square, exact_div, Scalar};
use crate::sequences::{self, SeqFamily};

/// Selects one of the four numbers in a [`NeoQuad`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeoField {
    B,
    C,
    R,
    CR,
}

impl NeoField {
    pub const ALL: [NeoField; 4] = [NeoField::B, NeoField::C, NeoField::R, NeoField::CR];

    pub fn name(self) -> &'static str {
        match self {
            NeoField::B => "B",
            NeoField::C => "C",
            NeoField::R => "R",
            NeoField::CR => "CR",
        }
    }
}

/// The four neo numbers sharing one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeoQuad<T> {
    pub n: i64,
    /// Neo balcobalancing number.
    pub b: T,
    /// Neo Lucas-balcobalancing number.
    pub c: T,
    /// Neo balcobalancer.
    pub r: T,
    /// Neo Lucas-balcobalancer.
    pub cr: T,
}

impl<T: Scalar> NeoQuad<T> {
    pub fn field(&self, f: NeoField) -> &T {
        match f {
            NeoField::B => &self.b,
            NeoField::C => &self.c,
            NeoField::R => &self.r,
            NeoField::CR => &self.cr,
        }
    }

    /// Checks the four defining relations between `B`, `C`, `R` and `CR`.
    pub fn relations_hold(&self) -> bool {
        let k = T::from_small;
        let (b, c, r, cr) = (&self.b, &self.c, &self.r, &self.cr);
        let lucas =
            c.clone() * c.clone() == k(8) * b.clone() * b.clone() - k(12) * b.clone() + k(9);
        let lucas_r =
            cr.clone() * cr.clone() == k(2) * r.clone() * r.clone() + k(5) * r.clone() + k(2);
        let balancer = k(2) * r.clone() == -k(2) * b.clone() - T::one() + c.clone();
        let back = b.clone() == k(2) + r.clone() + cr.clone();
        lucas && lucas_r && balancer && back
    }

    fn conventional_zero() -> Self {
        NeoQuad {
            n: 0,
            b: T::zero(),
            c: T::from_small(3),
            r: T::one(),
            cr: T::from_small(3),
        }
    }
}

fn check_nonnegative(what: &'static str, n: i64, min: i64) -> Result<()> {
    if n < min {
        Err(Error::domain(what, format!("requires n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn quad_from_balancing<T: Scalar>(n: i64, odd: &T, even: &T) -> Result<NeoQuad<T>> {
    let k = T::from_small;
    let four = k(4);
    Ok(NeoQuad {
        n,
        b: exact_div(&(k(21) * odd.clone() - k(3) * even.clone() + k(3)), &four)?,
        c: k(15) * odd.clone() - k(3) * even.clone(),
        r: exact_div(&(k(9) * odd.clone() - k(3) * even.clone() - k(5)), &four)?,
        cr: k(3) * odd.clone(),
    })
}

/// Closed forms in terms of `B_{2n-1}` and `B_{2n-2}`; index 0 is conventional.
///
/// An inexact division here means the implementation is broken, not the input.
pub fn neo_quad_closed<T: Scalar>(n: i64) -> Result<NeoQuad<T>> {
    check_nonnegative("neo quad", n, 0)?;
    if n == 0 {
        return Ok(NeoQuad::conventional_zero());
    }
    let odd = sequences::balancing::<T>(2 * n - 1)?;
    let even = sequences::balancing::<T>(2 * n - 2)?;
    quad_from_balancing(n, &odd, &even)
}

/// Closed-form quads for `start .. start+count`, sharing one pass over the
/// balancing numbers.
pub fn closed_quads<T: Scalar>(start: i64, count: usize) -> Result<Vec<NeoQuad<T>>> {
    check_nonnegative("neo quad", start, 0)?;
    let end = start + count as i64;
    let bal = sequences::window::<T>(SeqFamily::Balancing, 0, (2 * end).max(0) as usize)?;
    (start..end)
        .map(|n| {
            if n == 0 {
                Ok(NeoQuad::conventional_zero())
            } else {
                let i = (2 * n - 1) as usize;
                quad_from_balancing(n, &bal.values[i], &bal.values[i - 1])
            }
        })
        .collect()
}

/// Binet forms evaluated exactly in Q(√2), for `n >= 1`.
pub fn neo_quad_binet<T: Scalar>(n: i64) -> Result<NeoQuad<T>> {
    check_nonnegative("neo quad (Binet)", n, 1)?;
    let frac = |num: i64, den: i64| Ratio::new(T::from_small(num), T::from_small(den));
    let constant = |v: i64| crate::exactnum::QuadSurd::from_int(T::from_small(v));
    let sum_odd = alpha_beta_sum::<T>(4 * n - 1)?;
    let diff_odd = alpha_beta_diff::<T>(4 * n - 1)?;
    let sum_even = alpha_beta_sum::<T>(4 * n - 2)?;
    let diff_even = alpha_beta_diff::<T>(4 * n - 2)?;

    let b = (sum_odd.scale_int(3) + constant(6)).scale(&frac(1, 8));
    let c = diff_odd.scale_int(3).div_sqrt2().scale(&frac(1, 2));
    let r = (sum_even.scale_int(3) - constant(10)).scale(&frac(1, 8));
    let cr = diff_even.scale_int(3).div_sqrt2().scale(&frac(1, 4));
    Ok(NeoQuad {
        n,
        b: b.to_integer()?,
        c: c.to_integer()?,
        r: r.to_integer()?,
        cr: cr.to_integer()?,
    })
}

/// One step of `X_n = 35X_{n-1} − 35X_{n-2} + X_{n-3}`.
pub fn order3_step<T: Scalar>(prev1: &T, prev2: &T, prev3: &T) -> T {
    let k35 = T::from_small(35);
    k35.clone() * prev1.clone() - k35 * prev2.clone() + prev3.clone()
}

fn run_order3<T: Scalar>(seeds: [T; 3], first_seed: i64, n: i64) -> T {
    let [mut x3, mut x2, mut x1] = seeds;
    if n < first_seed + 3 {
        return [x3, x2, x1][(n - first_seed) as usize].clone();
    }
    for _ in first_seed + 3..=n {
        let next = order3_step(&x1, &x2, &x3);
        x3 = std::mem::replace(&mut x2, std::mem::replace(&mut x1, next));
    }
    x1
}

/// The quad at `n` by the order-3 recurrence.
///
/// `B`, `C` and `R` are seeded at indices 0, 1, 2; `CR` is seeded at 1, 2, 3
/// since the recurrence does not hold for it at `n = 3` (it would give 3573
/// instead of 3567).
pub fn neo_quad_recurrence<T: Scalar>(n: i64) -> Result<NeoQuad<T>> {
    check_nonnegative("neo quad (recurrence)", n, 0)?;
    if n <= 2 {
        return neo_quad_closed(n);
    }
    let s: Vec<NeoQuad<T>> = (0..=3).map(neo_quad_closed).collect::<Result<_>>()?;
    let seeds = |f: NeoField, from: usize| {
        [
            s[from].field(f).clone(),
            s[from + 1].field(f).clone(),
            s[from + 2].field(f).clone(),
        ]
    };
    Ok(NeoQuad {
        n,
        b: run_order3(seeds(NeoField::B, 0), 0, n),
        c: run_order3(seeds(NeoField::C, 0), 0, n),
        r: run_order3(seeds(NeoField::R, 0), 0, n),
        cr: run_order3(seeds(NeoField::CR, 1), 1, n),
    })
}

/// The balcobalancer `r = (−2n − 1 + √(8n² − 12n + 9))/2` of `nval`, if it is
/// a positive integer.
pub fn balcobalancer_of<T: Scalar>(nval: &T) -> Option<T> {
    if nval.is_negative() {
        return None;
    }
    let k = T::from_small;
    let disc = k(8) * nval.clone() * nval.clone() - k(12) * nval.clone() + k(9);
    let root = as_perfect_square(&disc)?;
    let numer = root - k(2) * nval.clone() - T::one();
    let r = exact_div(&numer, &k(2)).ok()?;
    (r >= T::one()).then_some(r)
}

/// The neo balcobalancing number `n = 2 + r + √(2r² + 5r + 2)` of balcobalancer `r`.
pub fn n_from_balancer<T: Scalar>(r: &T) -> Option<T> {
    if r.is_negative() {
        return None;
    }
    let k = T::from_small;
    let root = as_perfect_square(&(k(2) * r.clone() * r.clone() + k(5) * r.clone() + k(2)))?;
    Some(k(2) + r.clone() + root)
}

/// `8n² − 12n + 9` is a perfect square.
pub fn is_neo_balcobalancing<T: Scalar>(nval: &T) -> bool {
    if nval.is_negative() {
        return false;
    }
    let k = T::from_small;
    as_perfect_square(&(k(8) * nval.clone() * nval.clone() - k(12) * nval.clone() + k(9))).is_some()
}

/// `2r² + 5r + 2` is a perfect square.
pub fn is_neo_balcobalancer<T: Scalar>(r: &T) -> bool {
    if r.is_negative() {
        return false;
    }
    let k = T::from_small;
    as_perfect_square(&(k(2) * r.clone() * r.clone() + k(5) * r.clone() + k(2))).is_some()
}

/// Both sides of the two square-completion identities behind the closed
/// forms, in exact rationals, with `B = B_{2n-1}` and `B' = B_{2n-2}`:
///
/// ```text
/// (441/2)B² − 63BB' + (9/2)B'² + 9/2 = (15B − 3B')²
/// (81/8)B² − (27/4)BB' + (9/8)B'² − 9/8 = 9B²
/// ```
pub fn square_completion_sides<T: Scalar>(n: i64) -> Result<[(Ratio<T>, Ratio<T>); 2]> {
    check_nonnegative("square completion identities", n, 1)?;
    let q = |num: i64, den: i64| Ratio::new(T::from_small(num), T::from_small(den));
    let b = Ratio::from_integer(sequences::balancing::<T>(2 * n - 1)?);
    let bp = Ratio::from_integer(sequences::balancing::<T>(2 * n - 2)?);

    let lhs1 = q(441, 2) * b.clone() * b.clone() - q(63, 1) * b.clone() * bp.clone()
        + q(9, 2) * bp.clone() * bp.clone()
        + q(9, 2);
    let root1 = q(15, 1) * b.clone() - q(3, 1) * bp.clone();
    let lhs2 = q(81, 8) * b.clone() * b.clone() - q(27, 4) * b.clone() * bp.clone()
        + q(9, 8) * bp.clone() * bp
        - q(9, 8);
    let rhs2 = q(9, 1) * b.clone() * b;
    Ok([(lhs1, root1.clone() * root1), (lhs2, rhs2)])
}

pub fn square_completion_identities_hold<T: Scalar>(n: i64) -> Result<bool> {
    Ok(square_completion_sides::<T>(n)?.iter().all(|(l, r)| l == r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn quad(n: i64, b: i64, c: i64, r: i64, cr: i64) -> NeoQuad<BigInt> {
        NeoQuad {
            n,
            b: b.into(),
            c: c.into(),
            r: r.into(),
            cr: cr.into(),
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(neo_quad_closed::<BigInt>(0).unwrap(), quad(0, 0, 3, 1, 3));
        assert_eq!(neo_quad_closed::<BigInt>(1).unwrap(), quad(1, 6, 15, 1, 3));
        assert_eq!(
            neo_quad_closed::<BigInt>(2).unwrap(),
            quad(2, 180, 507, 73, 105)
        );
        assert!(neo_quad_closed::<BigInt>(-1).is_err());
    }

    #[test]
    fn binet_examples() {
        let q1 = neo_quad_binet::<BigInt>(1).unwrap();
        assert_eq!(q1.b, BigInt::from(6));
        assert_eq!(q1.cr, BigInt::from(3));
        assert_eq!(neo_quad_binet::<BigInt>(3).unwrap().b, BigInt::from(6090));
        assert!(neo_quad_binet::<BigInt>(0).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let q3 = neo_quad_recurrence::<BigInt>(3).unwrap();
        assert_eq!(q3.b, BigInt::from(35 * 180 - 35 * 6));
        assert_eq!(q3.cr, BigInt::from(3567));
        let q4 = neo_quad_recurrence::<BigInt>(4).unwrap();
        assert_eq!(q4.cr, BigInt::from(121_173));
        assert_eq!(q4.cr, 3 * sequences::balancing::<BigInt>(7).unwrap());
    }

    #[test]
    fn cr_recurrence_fails_at_three() {
        // CR_0 = CR_1 = 3 do not lie on the recurrence through CR_2, CR_3
        let wrong = order3_step(&105i64, &3, &3);
        assert_eq!(wrong, 3573);
        assert_ne!(wrong, neo_quad_closed::<i64>(3).unwrap().cr);
    }

    #[test]
    fn three_paths_agree() {
        for n in 1..=60 {
            let closed = neo_quad_closed::<BigInt>(n).unwrap();
            assert_eq!(closed, neo_quad_binet(n).unwrap(), "n = {n}");
            assert_eq!(closed, neo_quad_recurrence(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn batch_matches_single() {
        let batch = closed_quads::<BigInt>(0, 25).unwrap();
        for q in batch {
            assert_eq!(q, neo_quad_closed(q.n).unwrap());
        }
    }

    #[test]
    fn conventional_zero_relations() {
        let q = neo_quad_closed::<i64>(0).unwrap();
        assert_eq!(q.c * q.c, 8 * q.b * q.b - 12 * q.b + 9);
        assert_eq!(q.cr * q.cr, 2 * q.r * q.r + 5 * q.r + 2);
        assert_eq!(2 * q.r, -2 * q.b - 1 + q.c);
        // R_0 = R_1 = 1, so the balancer cannot map back to 0
        assert!(!q.relations_hold());
        assert_eq!(balcobalancer_of(&q.b), Some(q.r));
        assert_eq!(n_from_balancer(&q.r), Some(6));
    }

    #[test]
    fn relations_and_round_trips() {
        for n in 1..=60 {
            let q = neo_quad_closed::<BigInt>(n).unwrap();
            assert!(q.relations_hold(), "n = {n}");
            assert_eq!(balcobalancer_of(&q.b), Some(q.r.clone()), "n = {n}");
            assert_eq!(n_from_balancer(&q.r), Some(q.b.clone()), "n = {n}");
            assert!(is_neo_balcobalancing(&q.b));
            assert!(is_neo_balcobalancer(&q.r));
        }
    }

    #[test]
    fn cr_links_to_balancing() {
        for n in 1..=60 {
            let q = neo_quad_closed::<BigInt>(n).unwrap();
            assert_eq!(q.cr, 3 * sequences::balancing::<BigInt>(2 * n - 1).unwrap());
        }
    }

    #[test]
    fn growth_ratio_near_alpha_fourth() {
        let quads = closed_quads::<BigInt>(3, 19).unwrap();
        for w in quads.windows(2) {
            let lo = &w[0].b;
            let hi = &w[1].b;
            assert!(hi > &(33 * lo) && hi < &(35 * lo), "n = {}", w[0].n);
        }
    }

    #[test]
    fn inverse_map_examples() {
        assert_eq!(balcobalancer_of(&6i64), Some(1));
        assert_eq!(balcobalancer_of(&180i64), Some(73));
        assert_eq!(balcobalancer_of(&7i64), None);
        assert_eq!(balcobalancer_of(&0i64), Some(1));
        assert_eq!(balcobalancer_of(&-6i64), None);
        assert_eq!(n_from_balancer(&1i64), Some(6));
        assert_eq!(n_from_balancer(&73i64), Some(180));
        assert_eq!(n_from_balancer(&2i64), None);
        assert_eq!(n_from_balancer(&-1i64), None);
    }

    #[test]
    fn membership_examples() {
        assert!(is_neo_balcobalancing(&0i64));
        assert!(is_neo_balcobalancing(&6090i64));
        assert!(!is_neo_balcobalancing(&7i64));
        assert!(!is_neo_balcobalancing(&1i64));
        assert!(!is_neo_balcobalancer(&2i64));
        assert!(is_neo_balcobalancer(&2521i64));
    }

    #[test]
    fn square_completion_identities() {
        for n in 1..=30 {
            assert!(
                square_completion_identities_hold::<BigInt>(n).unwrap(),
                "n = {n}"
            );
        }
        assert!(square_completion_identities_hold::<BigInt>(0).is_err());
    }

    #[test]
    fn fixed_width_scalar_matches_bigint_while_it_fits() {
        for n in 0..=10 {
            let small = neo_quad_closed::<i64>(n).unwrap();
            let big = neo_quad_closed::<BigInt>(n).unwrap();
            assert_eq!(BigInt::from(small.b), big.b);
            assert_eq!(BigInt::from(small.cr), big.cr);
        }
    }
}
