//! Instance checks for the identities relating the neo families to balancing,
//! Pell, Pell-Lucas, triangular and square-triangular numbers.
//!
//! Each identity has a [`TheoremId`] and is checked one index at a time. The
//! classic families are taken from [`crate::sequences`] (recurrence route) and
//! the neo quads from their Binet forms, so neither side of an equation is
//! derived from the other. Sums are accumulated term by term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::exact_div;
use crate::neobalco::{self, NeoQuad};
use crate::pell;
use crate::sequences::{self, SeqFamily};

type Int = BigInt;
type Rational = BigRational;

/// One checkable identity (or group of closely related equations).
///
/// The tags are the command-line names; variants are named by content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    BalancingFromNeo,
    CobalancingFromNeo,
    LucasBalancingFromNeo,
    LucasCobalancingFromNeo,
    NeoFromPell,
    NeoFromPellLucas,
    PellFromNeo,
    PellLucasFromNeo,
    TriangularCharacterisation,
    NeoFromSquareTriangular,
    SquareTriangularFromNeo,
    PythagoreanEven,
    PythagoreanOdd,
    CassiniB,
    CassiniC,
    CassiniR,
    CassiniCR,
    SumB,
    SumC,
    SumR,
    SumCR,
    PellSumSquare,
    OddBalancingSumSquare,
    LucasCobalancingSumSquare,
    PellSumPlusOneSquare,
    OddPellLucasSumSquare,
    OddPellLucasHalfSumSquare,
    EvenPellSum,
    SquareCompletion,
    PellOrbit,
}

impl TheoremId {
    pub const ALL: [TheoremId; 30] = [
        TheoremId::SquareCompletion,
        TheoremId::PellOrbit,
        TheoremId::BalancingFromNeo,
        TheoremId::CobalancingFromNeo,
        TheoremId::LucasBalancingFromNeo,
        TheoremId::LucasCobalancingFromNeo,
        TheoremId::NeoFromPell,
        TheoremId::NeoFromPellLucas,
        TheoremId::PellFromNeo,
        TheoremId::PellLucasFromNeo,
        TheoremId::TriangularCharacterisation,
        TheoremId::NeoFromSquareTriangular,
        TheoremId::SquareTriangularFromNeo,
        TheoremId::PythagoreanEven,
        TheoremId::PythagoreanOdd,
        TheoremId::CassiniB,
        TheoremId::CassiniC,
        TheoremId::CassiniR,
        TheoremId::CassiniCR,
        TheoremId::SumB,
        TheoremId::SumC,
        TheoremId::SumR,
        TheoremId::SumCR,
        TheoremId::PellSumSquare,
        TheoremId::OddBalancingSumSquare,
        TheoremId::LucasCobalancingSumSquare,
        TheoremId::PellSumPlusOneSquare,
        TheoremId::OddPellLucasSumSquare,
        TheoremId::OddPellLucasHalfSumSquare,
        TheoremId::EvenPellSum,
    ];

    pub fn tag(self) -> &'static str {
        use TheoremId::*;
        match self {
            BalancingFromNeo => "T4.1-B",
            CobalancingFromNeo => "T4.1-b",
            LucasBalancingFromNeo => "T4.1-C",
            LucasCobalancingFromNeo => "T4.1-c",
            NeoFromPell => "T5.1",
            NeoFromPellLucas => "T5.2",
            PellFromNeo => "T5.3-P",
            PellLucasFromNeo => "T5.3-Q",
            TriangularCharacterisation => "T6.1",
            NeoFromSquareTriangular => "T6.2",
            SquareTriangularFromNeo => "T6.3",
            PythagoreanEven => "T7.1-even",
            PythagoreanOdd => "T7.1-odd",
            CassiniB => "T8.1-B",
            CassiniC => "T8.1-C",
            CassiniR => "T8.1-R",
            CassiniCR => "T8.1-CR",
            SumB => "T9.1-B",
            SumC => "T9.1-C",
            SumR => "T9.1-R",
            SumCR => "T9.1-CR",
            PellSumSquare => "T9.2",
            OddBalancingSumSquare => "T9.3-1",
            LucasCobalancingSumSquare => "T9.3-2",
            PellSumPlusOneSquare => "T9.3-3",
            OddPellLucasSumSquare => "T9.3-4",
            OddPellLucasHalfSumSquare => "T9.3-5",
            EvenPellSum => "T9.4",
            SquareCompletion => "L2.1",
            PellOrbit => "T2.1",
        }
    }

    /// Smallest index at which the identity is stated.
    pub fn min_index(self) -> i64 {
        match self {
            TheoremId::NeoFromPellLucas | TheoremId::CassiniCR => 2,
            TheoremId::TriangularCharacterisation => 0,
            _ => 1,
        }
    }

    pub fn valid_tags() -> String {
        TheoremId::ALL.map(TheoremId::tag).join(", ")
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| {
                Error::domain(
                    "theorem",
                    format!(
                        "unknown theorem '{s}'; valid tags: all, {}",
                        TheoremId::valid_tags()
                    ),
                )
            })
    }
}

/// A failed equation at one index, with both sides exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: i64,
    pub label: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of checking one identity over `from..=to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub from: i64,
    pub to: i64,
    pub passed: usize,
    pub failed: Vec<Failure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn range_len(&self) -> usize {
        (self.to - self.from + 1) as usize
    }
}

struct Equation {
    label: &'static str,
    lhs: Rational,
    rhs: Rational,
}

fn eq(label: &'static str, lhs: impl Into<Rational>, rhs: impl Into<Rational>) -> Equation {
    Equation {
        label,
        lhs: lhs.into(),
        rhs: rhs.into(),
    }
}

fn int(v: i64) -> Int {
    Int::from(v)
}

fn rat(v: &Int) -> Rational {
    Rational::from_integer(v.clone())
}

fn frac(num: Int, den: i64) -> Rational {
    Rational::new(num, int(den))
}

/// Binet-route neo quads for indices `0..=hi`, computed once and shared.
struct Quads(Vec<NeoQuad<Int>>);

impl Quads {
    fn up_to(hi: i64) -> Result<Self> {
        let v = (0..=hi.max(0))
            .into_par_iter()
            .map(|n| {
                if n == 0 {
                    neobalco::neo_quad_closed::<Int>(0)
                } else {
                    neobalco::neo_quad_binet::<Int>(n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quads(v))
    }

    fn at(&self, n: i64) -> &NeoQuad<Int> {
        &self.0[n as usize]
    }
    fn b(&self, n: i64) -> &Int {
        &self.at(n).b
    }
    fn c(&self, n: i64) -> &Int {
        &self.at(n).c
    }
    fn r(&self, n: i64) -> &Int {
        &self.at(n).r
    }
    fn cr(&self, n: i64) -> &Int {
        &self.at(n).cr
    }
}

/// Largest quad index any checker touches at index `n`.
fn quad_reach(n: i64) -> i64 {
    n + 2
}

fn term(f: SeqFamily, n: i64) -> Result<Int> {
    sequences::term::<Int>(f, n)
}

/// Sum of `f(first), f(first+step), …`, `count` terms, by accumulation.
fn accumulate(f: SeqFamily, first: i64, step: usize, count: usize) -> Result<Int> {
    let span = if count == 0 {
        0
    } else {
        (count - 1) * step + 1
    };
    let w = sequences::window::<Int>(f, first, span)?;
    Ok(w.values.iter().step_by(step).sum())
}

/// Parity-dispatched half indices: `k = (n+1)/2` for odd `n`, `(k, h) =
/// ((n+2)/2, n/2)` for even `n`.
enum Half {
    Odd(i64),
    Even(i64, i64),
}

fn half(n: i64) -> Half {
    if n.is_odd() {
        Half::Odd((n + 1) / 2)
    } else {
        Half::Even((n + 2) / 2, n / 2)
    }
}

fn equations(id: TheoremId, n: i64, q: &Quads) -> Result<Vec<Equation>> {
    use TheoremId::*;
    let out = match id {
        BalancingFromNeo => {
            let rhs = match half(n) {
                Half::Odd(k) => frac(4 * q.b(k) - q.c(k) - 3, 6),
                Half::Even(k, _) => frac(20 * q.b(k) - 7 * q.c(k) - 15, 6),
            };
            vec![eq("B_n", term(SeqFamily::Balancing, n)?, rhs)]
        }
        CobalancingFromNeo => {
            let rhs = match half(n) {
                Half::Odd(k) => frac(-16 * q.b(k) + 6 * q.c(k) + 6, 12),
                Half::Even(k, h) => frac(20 * q.b(k) - 4 * q.b(h) - 7 * q.c(k) + q.c(h) - 18, 12),
            };
            vec![eq("b_n", term(SeqFamily::Cobalancing, n)?, rhs)]
        }
        LucasBalancingFromNeo => {
            let rhs = match half(n) {
                Half::Odd(k) => frac(-8 * q.b(k) + 4 * q.c(k) + 6, 6),
                Half::Even(k, h) => frac(60 * q.b(k) - 4 * q.b(h) - 21 * q.c(k) + q.c(h) - 42, 6),
            };
            vec![eq("C_n", term(SeqFamily::LucasBalancing, n)?, rhs)]
        }
        LucasCobalancingFromNeo => {
            let rhs = match half(n) {
                Half::Odd(k) => frac(24 * q.b(k) - 8 * q.c(k) - 18, 6),
                Half::Even(k, h) => frac(20 * q.b(k) + 4 * q.b(h) - 7 * q.c(k) - q.c(h) - 18, 6),
            };
            vec![eq("c_n", term(SeqFamily::LucasCobalancing, n)?, rhs)]
        }
        NeoFromPell => {
            let p2 = term(SeqFamily::Pell, 4 * n - 2)?;
            let p4 = term(SeqFamily::Pell, 4 * n - 4)?;
            vec![
                eq("B", q.b(n).clone(), frac(21 * &p2 - 3 * &p4 + 6, 8)),
                eq("C", q.c(n).clone(), frac(15 * &p2 - 3 * &p4, 2)),
                eq("R", q.r(n).clone(), frac(9 * &p2 - 3 * &p4 - 10, 8)),
                eq("CR", q.cr(n).clone(), frac(3 * &p2, 2)),
            ]
        }
        NeoFromPellLucas => {
            let q4 = term(SeqFamily::PellLucas, 4 * n - 4)?;
            let q5 = term(SeqFamily::PellLucas, 4 * n - 5)?;
            vec![
                eq("B", q.b(n).clone(), frac(36 * &q4 + 15 * &q5 + 6, 8)),
                eq("C", q.c(n).clone(), frac(51 * &q4 + 21 * &q5, 4)),
                eq("R", q.r(n).clone(), frac(15 * &q4 + 6 * &q5 - 10, 8)),
                eq("CR", q.cr(n).clone(), frac(21 * &q4 + 9 * &q5, 8)),
            ]
        }
        PellFromNeo => {
            let (even, odd) = match half(n) {
                Half::Odd(k) => (
                    frac(4 * q.b(k) - q.c(k) - 3, 3),
                    frac(-16 * q.b(k) + 6 * q.c(k) + 12, 6),
                ),
                Half::Even(k, h) => (
                    frac(20 * q.b(k) - 7 * q.c(k) - 15, 3),
                    frac(20 * q.b(k) - 4 * q.b(h) - 7 * q.c(k) + q.c(h) - 12, 6),
                ),
            };
            vec![
                eq("P_2n", term(SeqFamily::Pell, 2 * n)?, even),
                eq("P_2n-1", term(SeqFamily::Pell, 2 * n - 1)?, odd),
            ]
        }
        PellLucasFromNeo => {
            let (even, odd) = match half(n) {
                Half::Odd(k) => (
                    frac(-8 * q.b(k) + 4 * q.c(k) + 6, 3),
                    frac(24 * q.b(k) - 8 * q.c(k) - 18, 3),
                ),
                Half::Even(k, h) => (
                    frac(60 * q.b(k) - 4 * q.b(h) - 21 * q.c(k) + q.c(h) - 42, 3),
                    frac(20 * q.b(k) + 4 * q.b(h) - 7 * q.c(k) - q.c(h) - 18, 3),
                ),
            };
            vec![
                eq("Q_2n", term(SeqFamily::PellLucas, 2 * n)?, even),
                eq("Q_2n-1", term(SeqFamily::PellLucas, 2 * n - 1)?, odd),
            ]
        }
        TriangularCharacterisation => {
            let b = q.b(n);
            let lhs = sequences::triangular_of(&(b + q.r(n)));
            let rhs = rat(&(b * b)) - frac(3 * b, 2) + Rational::one();
            vec![eq("T_{B+R}", lhs, rhs)]
        }
        NeoFromSquareTriangular => {
            let s = term(SeqFamily::SquareSide, 2 * n - 1)?;
            let t = term(SeqFamily::TriangleSide, 2 * n - 1)?;
            vec![
                eq("B", q.b(n).clone(), frac(6 * &s + 3 * &t + 3, 2)),
                eq("C", q.c(n).clone(), 6 * &s + 6 * &t + 3),
                eq("R", q.r(n).clone(), frac(3 * &t - 1, 2)),
                eq("CR", q.cr(n).clone(), 3 * &s),
            ]
        }
        SquareTriangularFromNeo => {
            let (side_num, tri) = match half(n) {
                Half::Odd(k) => (4 * q.b(k) - q.c(k) - 3, frac(-8 * q.b(k) + 4 * q.c(k), 12)),
                Half::Even(k, h) => (
                    20 * q.b(k) - 7 * q.c(k) - 15,
                    frac(60 * q.b(k) - 4 * q.b(h) - 21 * q.c(k) + q.c(h) - 48, 12),
                ),
            };
            vec![
                eq(
                    "S_n",
                    term(SeqFamily::SquareTriangular, n)?,
                    frac(&side_num * &side_num, 36),
                ),
                eq("s_n", term(SeqFamily::SquareSide, n)?, frac(side_num, 6)),
                eq("t_n", term(SeqFamily::TriangleSide, n)?, tri),
            ]
        }
        PythagoreanEven | PythagoreanOdd => {
            let m = if id == PythagoreanEven {
                2 * n
            } else {
                2 * n - 1
            };
            let (a, b, c) = triple_rational(m, q);
            vec![
                eq("a integral", a.clone(), a.trunc()),
                eq("b integral", b.clone(), b.trunc()),
                eq("c integral", c.clone(), c.trunc()),
                eq("a^2+b^2=c^2", &a * &a + &b * &b, &c * &c),
                eq("a=b+1", a, b + Rational::one()),
            ]
        }
        CassiniB => {
            let (p, x, f) = (q.b(n - 1), q.b(n), q.b(n + 1));
            vec![eq("B", p * f - x * x, frac(3 * f - 6 * x + 3 * p - 648, 4))]
        }
        CassiniC => {
            let (p, x, f) = (q.c(n - 1), q.c(n), q.c(n + 1));
            vec![eq("C", p * f - x * x, int(1296))]
        }
        CassiniR => {
            let (p, x, f) = (q.r(n - 1), q.r(n), q.r(n + 1));
            vec![eq(
                "R",
                p * f - x * x,
                frac(-5 * f + 10 * x - 5 * p + 648, 4),
            )]
        }
        CassiniCR => {
            let (p, x, f) = (q.cr(n - 1), q.cr(n), q.cr(n + 1));
            vec![eq("CR", p * f - x * x, int(-324))]
        }
        SumB | SumC | SumR | SumCR => {
            let bn = term(SeqFamily::Balancing, n)?;
            let bn1 = term(SeqFamily::Balancing, n + 1)?;
            let b2n = term(SeqFamily::Balancing, 2 * n)?;
            let sq = &bn * &bn;
            let cross = &bn * &bn1;
            let (label, field, rhs): (_, fn(&NeoQuad<Int>) -> &Int, _) = match id {
                SumB => (
                    "sum B",
                    |x| &x.b,
                    frac(21 * &sq - 3 * &cross + 3 * &b2n + 3 * n, 4),
                ),
                SumC => ("sum C", |x| &x.c, rat(&(15 * &sq - 3 * &cross + 3 * &b2n))),
                SumR => (
                    "sum R",
                    |x| &x.r,
                    frac(9 * &sq - 3 * &cross + 3 * &b2n - 5 * n, 4),
                ),
                _ => ("sum CR", |x| &x.cr, rat(&(3 * &sq))),
            };
            let lhs: Int = (1..=n).map(|i| field(q.at(i))).sum();
            vec![eq(label, lhs, rhs)]
        }
        PellSumSquare => {
            let lhs = accumulate(SeqFamily::Pell, 1, 1, (8 * n - 3) as usize)?;
            let root = frac(
                20 * q.b(n + 1) + 2 * q.b(n) - 7 * q.c(n + 1) - 2 * q.r(n) - 19,
                6,
            );
            vec![eq("sum P_1..P_8n-3", lhs, &root * &root)]
        }
        OddBalancingSumSquare => {
            let lhs = accumulate(SeqFamily::Balancing, 1, 2, (2 * n) as usize)?;
            let root = frac(20 * q.b(n + 1) - 7 * q.c(n + 1) - 15, 6);
            vec![eq("sum B_2i-1", lhs, &root * &root)]
        }
        LucasCobalancingSumSquare => {
            let lhs = 1 + accumulate(SeqFamily::LucasCobalancing, 1, 1, (4 * n + 2) as usize)?;
            let root = frac(4 * q.r(n + 1) + 5, 3);
            vec![eq("1 + sum c_i", lhs, &root * &root)]
        }
        PellSumPlusOneSquare => {
            let lhs = 1 + accumulate(SeqFamily::Pell, 1, 1, (8 * n - 5) as usize)?;
            let root = frac(-4 * q.b(n) + 2 * q.c(n) + 3, 3);
            vec![eq("1 + sum P_i", lhs, &root * &root)]
        }
        OddPellLucasSumSquare => {
            let lhs = accumulate(SeqFamily::PellLucas, 1, 2, (4 * n) as usize)?;
            let root = frac(40 * q.b(n + 1) - 14 * q.c(n + 1) - 30, 3);
            vec![eq("sum Q_2i-1", lhs, &root * &root)]
        }
        OddPellLucasHalfSumSquare => {
            let total = accumulate(SeqFamily::PellLucas, 1, 2, (4 * n + 1) as usize)?;
            let (half_sum, rem) = total.div_rem(&int(2));
            let root = frac(12 * q.b(n + 1) - 4 * q.c(n + 1) - 9, 3);
            vec![
                eq("sum parity", rem, Int::zero()),
                eq("sum Q_2i+1 / 2", half_sum, &root * &root),
            ]
        }
        EvenPellSum => {
            let lhs = accumulate(SeqFamily::Pell, 2, 2, (2 * n - 1) as usize)?
                + term(SeqFamily::Pell, 4 * n - 1)?;
            vec![eq("sum P_2i + P_4n-1", lhs, q.b(n) + q.r(n))]
        }
        SquareCompletion => {
            let [first, second] = neobalco::square_completion_sides::<Int>(n)?;
            vec![
                eq("first", first.0, first.1),
                eq("second", second.0, second.1),
            ]
        }
        PellOrbit => {
            let orbit = pell::solve_orbit::<Int>(n as usize)?;
            let p = orbit.last().expect("n >= 1");
            let closed = pell::orbit_closed_form::<Int>(n)?;
            vec![
                eq("x^2-2y^2", &p.x * &p.x - 2 * &p.y * &p.y, int(-9)),
                eq("x", p.x.clone(), closed.x),
                eq("y", p.y.clone(), closed.y),
            ]
        }
    };
    Ok(out)
}

fn triple_rational(m: i64, q: &Quads) -> (Rational, Rational, Rational) {
    if m.is_even() {
        let k = (m + 2) / 2;
        let base = 12 * q.b(k) - 4 * q.c(k);
        (
            frac(&base - 6, 6),
            frac(&base - 12, 6),
            frac(-16 * q.b(k) + 6 * q.c(k) + 12, 6),
        )
    } else {
        let (k, h) = ((m + 3) / 2, (m + 1) / 2);
        let base = 20 * q.b(k) + 4 * q.b(h) - 7 * q.c(k) - q.c(h);
        (
            frac(&base - 12, 12),
            frac(&base - 24, 12),
            frac(20 * q.b(k) - 4 * q.b(h) - 7 * q.c(k) + q.c(h) - 12, 6),
        )
    }
}

fn check_at(id: TheoremId, n: i64, q: &Quads) -> Result<Option<Failure>> {
    Ok(equations(id, n, q)?
        .into_iter()
        .find(|e| e.lhs != e.rhs)
        .map(|e| Failure {
            index: n,
            label: e.label.to_string(),
            lhs: e.lhs,
            rhs: e.rhs,
        }))
}

fn check_range(id: TheoremId, from: i64, to: i64) -> Result<()> {
    if from < id.min_index() {
        return Err(Error::domain(
            "theorem range",
            format!(
                "{} requires n >= {}, got from = {from}",
                id.tag(),
                id.min_index()
            ),
        ));
    }
    if from > to {
        return Err(Error::domain(
            "theorem range",
            format!("empty range {from}..{to}"),
        ));
    }
    Ok(())
}

fn suite_with(id: TheoremId, from: i64, to: i64, q: &Quads) -> Result<VerifyReport> {
    check_range(id, from, to)?;
    let outcomes = (from..=to)
        .into_par_iter()
        .map(|n| check_at(id, n, q))
        .collect::<Result<Vec<_>>>()?;
    let failed: Vec<Failure> = outcomes.into_iter().flatten().collect();
    Ok(VerifyReport {
        theorem: id,
        from,
        to,
        passed: (to - from + 1) as usize - failed.len(),
        failed,
    })
}

/// Checks `id` at every index of `from..=to`.
pub fn run_suite(id: TheoremId, from: i64, to: i64) -> Result<VerifyReport> {
    check_range(id, from, to)?;
    let q = Quads::up_to(quad_reach(to))?;
    suite_with(id, from, to, &q)
}

/// Every identity over `from..=to`, each clamped to its own lower bound.
/// Identities whose clamped range is empty are left out.
pub fn run_all(from: i64, to: i64) -> Result<Vec<VerifyReport>> {
    let q = Quads::up_to(quad_reach(to))?;
    TheoremId::ALL
        .into_iter()
        .filter_map(|id| {
            let lo = from.max(id.min_index());
            (lo <= to).then(|| suite_with(id, lo, to, &q))
        })
        .collect()
}

/// Whether `id` holds at `n`.
pub fn check(id: TheoremId, n: i64) -> Result<bool> {
    Ok(run_suite(id, n, n)?.ok())
}

fn all_hold(ids: &[TheoremId], n: i64) -> Result<bool> {
    for &id in ids {
        if !check(id, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Balancing, cobalancing and both Lucas families recovered from neo quads.
pub fn check_inverse_maps(n: i64) -> Result<bool> {
    use TheoremId::*;
    all_hold(
        &[
            BalancingFromNeo,
            CobalancingFromNeo,
            LucasBalancingFromNeo,
            LucasCobalancingFromNeo,
        ],
        n,
    )
}

/// Neo quads in Pell and Pell-Lucas numbers, and back. The Pell-Lucas forms
/// only start at `n = 2` and are skipped below that.
pub fn check_pell_maps(n: i64) -> Result<bool> {
    use TheoremId::*;
    let mut ids = vec![NeoFromPell, PellFromNeo, PellLucasFromNeo];
    if n >= NeoFromPellLucas.min_index() {
        ids.push(NeoFromPellLucas);
    }
    all_hold(&ids, n)
}

pub fn check_triangular(n: i64) -> Result<bool> {
    check(TheoremId::TriangularCharacterisation, n)
}

pub fn check_sqtri_maps(n: i64) -> Result<bool> {
    all_hold(
        &[
            TheoremId::NeoFromSquareTriangular,
            TheoremId::SquareTriangularFromNeo,
        ],
        n,
    )
}

/// The identities on sums of Pell, Pell-Lucas, balancing and
/// Lucas-cobalancing numbers.
pub fn check_sum_squares(n: i64) -> Result<bool> {
    use TheoremId::*;
    all_hold(
        &[
            PellSumSquare,
            OddBalancingSumSquare,
            LucasCobalancingSumSquare,
            PellSumPlusOneSquare,
            OddPellLucasSumSquare,
            OddPellLucasHalfSumSquare,
            EvenPellSum,
        ],
        n,
    )
}

/// The Pythagorean triple built from neo quads: the even-index form for even
/// `n`, the odd-index form for odd `n`.
pub fn pythagorean_triple(n: i64) -> Result<(Int, Int, Int)> {
    if n < 1 {
        return Err(Error::domain(
            "pythagorean triple",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let q = Quads::up_to(quad_reach(n))?;
    let (a, b, c) = triple_rational(n, &q);
    let collapse = |x: Rational| exact_div(x.numer(), x.denom());
    Ok((collapse(a)?, collapse(b)?, collapse(c)?))
}

/// `X_{n-1}X_{n+1} − X_n²` for each neo family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CassiniValues {
    pub b: Int,
    pub c: Int,
    pub r: Int,
    /// Only stated from `n = 2`.
    pub cr: Option<Int>,
}

pub fn cassini(n: i64) -> Result<CassiniValues> {
    if n < 1 {
        return Err(Error::domain(
            "cassini",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let q = Quads::up_to(n + 1)?;
    let det =
        |f: fn(&NeoQuad<Int>) -> &Int| f(q.at(n - 1)) * f(q.at(n + 1)) - f(q.at(n)) * f(q.at(n));
    Ok(CassiniValues {
        b: det(|x| &x.b),
        c: det(|x| &x.c),
        r: det(|x| &x.r),
        cr: (n >= 2).then(|| det(|x| &x.cr)),
    })
}

/// Running sums `Σ_{i=1}^{n}` of `B`, `C`, `R`, `CR`.
pub fn partial_sums(n: i64) -> Result<[Int; 4]> {
    if n < 1 {
        return Err(Error::domain(
            "partial sums",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let quads = neobalco::closed_quads::<Int>(1, n as usize)?;
    let mut acc = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
    for q in &quads {
        acc[0] += &q.b;
        acc[1] += &q.c;
        acc[2] += &q.r;
        acc[3] += &q.cr;
    }
    Ok(acc)
}
