//! Pell, Pell-Lucas, balancing, cobalancing, Lucas-balancing, Lucas-cobalancing,
//! triangular and square-triangular numbers.
//!
//! Every family has two independent evaluation routes: an order-2 recurrence
//! iterated from its seeds (the default, `term`) and its Binet form evaluated
//! exactly in Q(√2) (`binet_term`). The Binet form is the reference; the
//! recurrences are checked against it in the tests.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exactnum::{alpha_beta_diff, alpha_beta_sum, QuadSurd, Scalar};
use crate::neobalco::{self, NeoField};

/// Every sequence the crate can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    Pell,
    PellLucas,
    Balancing,
    Cobalancing,
    LucasBalancing,
    LucasCobalancing,
    Triangular,
    SquareTriangular,
    SquareSide,
    TriangleSide,
    NeoBalcobalancing,
    NeoLucasBalcobalancing,
    NeoBalcobalancer,
    NeoLucasBalcobalancer,
}

impl SeqFamily {
    pub const ALL: [SeqFamily; 14] = [
        SeqFamily::Pell,
        SeqFamily::PellLucas,
        SeqFamily::Balancing,
        SeqFamily::Cobalancing,
        SeqFamily::LucasBalancing,
        SeqFamily::LucasCobalancing,
        SeqFamily::Triangular,
        SeqFamily::SquareTriangular,
        SeqFamily::SquareSide,
        SeqFamily::TriangleSide,
        SeqFamily::NeoBalcobalancing,
        SeqFamily::NeoLucasBalcobalancing,
        SeqFamily::NeoBalcobalancer,
        SeqFamily::NeoLucasBalcobalancer,
    ];

    /// Short tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            SeqFamily::Pell => "P",
            SeqFamily::PellLucas => "Q",
            SeqFamily::Balancing => "B",
            SeqFamily::Cobalancing => "b",
            SeqFamily::LucasBalancing => "C",
            SeqFamily::LucasCobalancing => "c",
            SeqFamily::Triangular => "T",
            SeqFamily::SquareTriangular => "S",
            SeqFamily::SquareSide => "s",
            SeqFamily::TriangleSide => "t",
            SeqFamily::NeoBalcobalancing => "Bneobc",
            SeqFamily::NeoLucasBalcobalancing => "Cneobc",
            SeqFamily::NeoBalcobalancer => "Rneobc",
            SeqFamily::NeoLucasBalcobalancer => "CRneobc",
        }
    }

    /// Smallest index at which the family is defined.
    ///
    /// Balancing numbers extend to `B_{-1} = -1`; `b_0 = 0` and the neo
    /// families at index 0 are conventional values.
    pub fn min_index(self) -> i64 {
        match self {
            SeqFamily::Balancing => -1,
            SeqFamily::LucasCobalancing
            | SeqFamily::SquareTriangular
            | SeqFamily::SquareSide
            | SeqFamily::TriangleSide => 1,
            _ => 0,
        }
    }

    fn neo_field(self) -> Option<NeoField> {
        match self {
            SeqFamily::NeoBalcobalancing => Some(NeoField::B),
            SeqFamily::NeoLucasBalcobalancing => Some(NeoField::C),
            SeqFamily::NeoBalcobalancer => Some(NeoField::R),
            SeqFamily::NeoLucasBalcobalancer => Some(NeoField::CR),
            _ => None,
        }
    }

    fn check_index(self, n: i64) -> Result<()> {
        if n < self.min_index() {
            return Err(Error::domain(
                "sequence index",
                format!("{} requires n >= {}, got {n}", self.tag(), self.min_index()),
            ));
        }
        Ok(())
    }

    pub fn valid_tags() -> String {
        SeqFamily::ALL.map(SeqFamily::tag).join(", ")
    }
}

impl fmt::Display for SeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SeqFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeqFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| {
                Error::domain(
                    "sequence family",
                    format!(
                        "unknown family '{s}'; valid tags: {}",
                        SeqFamily::valid_tags()
                    ),
                )
            })
    }
}

/// Terms `start, start+1, …` of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqWindow<T> {
    pub family: SeqFamily,
    pub start: i64,
    pub values: Vec<T>,
}

impl<T> SeqWindow<T> {
    pub fn indexed(&self) -> impl Iterator<Item = (i64, &T)> {
        (self.start..).zip(self.values.iter())
    }
}

/// `x_{k+1} = p·x_k + q·x_{k-1} + c`, starting at index `first`.
struct Recurrence<T> {
    index: i64,
    cur: T,
    next: T,
    p: T,
    q: T,
    c: T,
}

impl<T: Scalar> Recurrence<T> {
    fn new(first: i64, seeds: (i64, i64), p: i64, q: i64, c: i64) -> Self {
        Recurrence {
            index: first,
            cur: T::from_small(seeds.0),
            next: T::from_small(seeds.1),
            p: T::from_small(p),
            q: T::from_small(q),
            c: T::from_small(c),
        }
    }

    /// The recurrence for a classic family; `None` for triangular and neo.
    fn for_family(family: SeqFamily) -> Option<Self> {
        let r = match family {
            SeqFamily::Pell => Recurrence::new(0, (0, 1), 2, 1, 0),
            SeqFamily::PellLucas => Recurrence::new(0, (2, 2), 2, 1, 0),
            SeqFamily::Balancing => Recurrence::new(-1, (-1, 0), 6, -1, 0),
            SeqFamily::Cobalancing => Recurrence::new(0, (0, 0), 6, -1, 2),
            SeqFamily::LucasBalancing => Recurrence::new(0, (1, 3), 6, -1, 0),
            SeqFamily::LucasCobalancing => Recurrence::new(1, (1, 7), 6, -1, 0),
            SeqFamily::SquareTriangular => Recurrence::new(1, (1, 36), 34, -1, 2),
            SeqFamily::SquareSide => Recurrence::new(1, (1, 6), 6, -1, 0),
            SeqFamily::TriangleSide => Recurrence::new(1, (1, 8), 6, -1, 2),
            _ => return None,
        };
        Some(r)
    }
}

impl<T: Scalar> Iterator for Recurrence<T> {
    type Item = (i64, T);

    fn next(&mut self) -> Option<(i64, T)> {
        let following =
            self.p.clone() * self.next.clone() + self.q.clone() * self.cur.clone() + self.c.clone();
        let out = std::mem::replace(&mut self.cur, std::mem::replace(&mut self.next, following));
        let i = self.index;
        self.index += 1;
        Some((i, out))
    }
}

/// Term `n` of `family` by its recurrence (or direct formula for `T` and the
/// neo closed forms).
pub fn term<T: Scalar>(family: SeqFamily, n: i64) -> Result<T> {
    family.check_index(n)?;
    if let Some(field) = family.neo_field() {
        return Ok(neobalco::neo_quad_closed::<T>(n)?.field(field).clone());
    }
    if family == SeqFamily::Triangular {
        return Ok(triangular_formula(n));
    }
    let mut it = Recurrence::<T>::for_family(family).expect("classic family");
    let skip = (n - family.min_index()) as usize;
    Ok(it.nth(skip).expect("unbounded").1)
}

/// Term `n` of `family` by its Binet form, evaluated exactly in Q(√2).
///
/// Triangular numbers have no Binet form; they are summed `1 + 2 + … + n`.
pub fn binet_term<T: Scalar>(family: SeqFamily, n: i64) -> Result<T> {
    family.check_index(n)?;
    let frac = |num: i64, den: i64| Ratio::new(T::from_small(num), T::from_small(den));
    let surd = match family {
        SeqFamily::Pell => alpha_beta_diff::<T>(n)?.div_sqrt2().scale(&frac(1, 2)),
        SeqFamily::PellLucas => alpha_beta_sum::<T>(n)?,
        SeqFamily::Balancing | SeqFamily::SquareSide => {
            alpha_beta_diff::<T>(2 * n)?.div_sqrt2().scale(&frac(1, 4))
        }
        SeqFamily::Cobalancing => {
            alpha_beta_diff::<T>(2 * n - 1)?
                .div_sqrt2()
                .scale(&frac(1, 4))
                - QuadSurd::from_ratio(frac(1, 2))
        }
        SeqFamily::LucasBalancing => alpha_beta_sum::<T>(2 * n)?.scale(&frac(1, 2)),
        SeqFamily::LucasCobalancing => alpha_beta_sum::<T>(2 * n - 1)?.scale(&frac(1, 2)),
        SeqFamily::SquareTriangular => {
            (alpha_beta_sum::<T>(4 * n)? - QuadSurd::from_int(T::from_small(2))).scale(&frac(1, 32))
        }
        SeqFamily::TriangleSide => {
            (alpha_beta_sum::<T>(2 * n)? - QuadSurd::from_int(T::from_small(2))).scale(&frac(1, 4))
        }
        SeqFamily::Triangular => {
            let mut acc = T::zero();
            let mut k = T::zero();
            for _ in 0..n {
                k = k + T::one();
                acc = acc + k.clone();
            }
            return Ok(acc);
        }
        _ => {
            let field = family.neo_field().expect("neo family");
            if n == 0 {
                return Ok(neobalco::neo_quad_closed::<T>(0)?.field(field).clone());
            }
            return Ok(neobalco::neo_quad_binet::<T>(n)?.field(field).clone());
        }
    };
    surd.to_integer()
}

/// Terms `start .. start+count` of `family`, generated iteratively.
pub fn window<T: Scalar>(family: SeqFamily, start: i64, count: usize) -> Result<SeqWindow<T>> {
    family.check_index(start)?;
    let values = if family.neo_field().is_some() {
        let field = family.neo_field().expect("neo family");
        neobalco::closed_quads::<T>(start, count)?
            .into_iter()
            .map(|q| q.field(field).clone())
            .collect()
    } else if family == SeqFamily::Triangular {
        (start..).take(count).map(triangular_formula).collect()
    } else {
        let skip = (start - family.min_index()) as usize;
        Recurrence::<T>::for_family(family)
            .expect("classic family")
            .skip(skip)
            .take(count)
            .map(|(_, v)| v)
            .collect()
    };
    Ok(SeqWindow {
        family,
        start,
        values,
    })
}

fn triangular_formula<T: Scalar>(n: i64) -> T {
    let n = T::from_small(n);
    n.clone() * (n + T::one()) / T::from_small(2)
}

pub fn pell<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::Pell, n)
}

pub fn pell_lucas<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::PellLucas, n)
}

/// `B_n` for `n >= -1`.
pub fn balancing<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::Balancing, n)
}

/// `b_n` for `n >= 0`; `b_0 = 0` by convention.
pub fn cobalancing<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::Cobalancing, n)
}

pub fn lucas_balancing<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::LucasBalancing, n)
}

pub fn lucas_cobalancing<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::LucasCobalancing, n)
}

pub fn triangular<T: Scalar>(n: i64) -> Result<T> {
    term(SeqFamily::Triangular, n)
}

/// `T_m` for an arbitrary (possibly huge) nonnegative integer `m`.
pub fn triangular_of<T: Scalar>(m: &T) -> T {
    m.clone() * (m.clone() + T::one()) / T::from_small(2)
}

/// `(S_n, s_n, t_n)`: the square triangular number and the sides of its
/// square and triangle.
pub fn sq_triangular<T: Scalar>(n: i64) -> Result<(T, T, T)> {
    Ok((
        term(SeqFamily::SquareTriangular, n)?,
        term(SeqFamily::SquareSide, n)?,
        term(SeqFamily::TriangleSide, n)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::as_perfect_square;
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn pell_examples() {
        assert_eq!(pell::<i64>(0).unwrap(), 0);
        assert_eq!(pell::<i64>(4).unwrap(), 12);
        assert_eq!(pell::<i64>(8).unwrap(), 408);
        assert!(pell::<i64>(-1).is_err());
    }

    #[test]
    fn pell_lucas_examples() {
        assert_eq!(pell_lucas::<i64>(0).unwrap(), 2);
        assert_eq!(pell_lucas::<i64>(3).unwrap(), 14);
        assert_eq!(pell_lucas::<i64>(9).unwrap(), 2786);
        assert!(pell_lucas::<i64>(-3).is_err());
    }

    #[test]
    fn balancing_examples() {
        assert_eq!(balancing::<i64>(0).unwrap(), 0);
        assert_eq!(balancing::<i64>(1).unwrap(), 1);
        assert_eq!(balancing::<i64>(3).unwrap(), 35);
        assert_eq!(balancing::<i64>(-1).unwrap(), -1);
        assert_eq!(
            binet_term::<BigInt>(SeqFamily::Balancing, -1).unwrap(),
            big(-1)
        );
        assert!(balancing::<i64>(-2).is_err());
    }

    #[test]
    fn cobalancing_examples() {
        assert_eq!(cobalancing::<i64>(0).unwrap(), 0);
        assert_eq!(cobalancing::<i64>(1).unwrap(), 0);
        assert_eq!(cobalancing::<i64>(2).unwrap(), 2);
        assert_eq!(cobalancing::<i64>(3).unwrap(), 14);
        // the Binet route also lands on the conventional b_0 = 0
        assert_eq!(
            binet_term::<BigInt>(SeqFamily::Cobalancing, 0).unwrap(),
            big(0)
        );
        assert!(cobalancing::<i64>(-1).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_balancing::<i64>(1).unwrap(), 3);
        assert_eq!(lucas_cobalancing::<i64>(2).unwrap(), 7);
        assert_eq!(lucas_balancing::<i64>(3).unwrap(), 99);
        assert!(lucas_cobalancing::<i64>(0).is_err());
        assert!(lucas_balancing::<i64>(-1).is_err());
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular::<i64>(0).unwrap(), 0);
        assert_eq!(triangular::<i64>(7).unwrap(), 28);
        assert_eq!(triangular::<i64>(10).unwrap(), 55);
        assert!(triangular::<i64>(-1).is_err());
    }

    #[test]
    fn sq_triangular_examples() {
        assert_eq!(sq_triangular::<i64>(1).unwrap(), (1, 1, 1));
        assert_eq!(sq_triangular::<i64>(2).unwrap(), (36, 6, 8));
        assert_eq!(sq_triangular::<i64>(3).unwrap(), (1225, 35, 49));
        assert!(sq_triangular::<i64>(0).is_err());
    }

    #[test]
    fn recurrence_and_binet_agree_to_sixty() {
        for family in SeqFamily::ALL {
            for n in family.min_index()..=60 {
                let rec = term::<BigInt>(family, n).unwrap();
                let bin = binet_term::<BigInt>(family, n).unwrap();
                assert_eq!(rec, bin, "{family} at n = {n}");
            }
        }
    }

    #[test]
    fn lucas_characterisations() {
        for n in 0..=60 {
            let b = balancing::<BigInt>(n).unwrap();
            let c = lucas_balancing::<BigInt>(n).unwrap();
            assert_eq!(&c * &c - 8 * &b * &b, big(1));
        }
        for n in 1..=60 {
            let b = cobalancing::<BigInt>(n).unwrap();
            let c = lucas_cobalancing::<BigInt>(n).unwrap();
            assert_eq!(&c * &c - 8 * &b * &b - 8 * &b, big(1));
            assert_eq!(as_perfect_square(&(8 * &b * &b + 8 * &b + 1)), Some(c));
        }
    }

    #[test]
    fn cross_family_links() {
        for n in 1..=60 {
            let bal = balancing::<BigInt>(n).unwrap();
            let cob = cobalancing::<BigInt>(n).unwrap();
            let luc = lucas_balancing::<BigInt>(n).unwrap();
            assert_eq!(cob, (-2 * &bal - 1 + &luc) / 2);
            let (sq, side, tri) = sq_triangular::<BigInt>(n).unwrap();
            assert_eq!(side, bal);
            assert_eq!(sq, &side * &side);
            assert_eq!(sq, triangular_of(&tri));
            assert_eq!(triangular_of(&(&bal + &cob)), &bal * &bal);
        }
    }

    #[test]
    fn window_matches_term() {
        for family in SeqFamily::ALL {
            let start = family.min_index() + 2;
            let w = window::<BigInt>(family, start, 12).unwrap();
            assert_eq!(w.values.len(), 12);
            for (i, v) in w.indexed() {
                assert_eq!(*v, term::<BigInt>(family, i).unwrap(), "{family} at {i}");
            }
        }
    }

    #[test]
    fn family_tags_round_trip() {
        for family in SeqFamily::ALL {
            assert_eq!(family.tag().parse::<SeqFamily>().unwrap(), family);
        }
        let err = "X".parse::<SeqFamily>().unwrap_err().to_string();
        assert!(err.contains("CRneobc"));
    }
}
