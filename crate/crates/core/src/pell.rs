//! Positive solutions of `x² − 2y² = −9`.
//!
//! The orbit of the representative `[3 3]` under the automorphism
//! `M = [[3, 2], [4, 3]]` of the form `x² − 2y²` gives
//! `[x_n y_n] = [3 3]·M^{n-1}`, which in closed form is
//! `(21B_{n-1} − 3B_{n-2}, 15B_{n-1} − 3B_{n-2})` with `B_{-1} = -1`.
//! Sign variants such as `(−3, 3)` also solve the equation; they are accepted
//! by [`is_solution`] but never enumerated.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::sequences;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPair<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> SolutionPair<T> {
    pub fn new(x: T, y: T) -> Self {
        SolutionPair { x, y }
    }

    /// Row vector times matrix.
    pub fn apply(&self, m: &AutoMatrix<T>) -> Self {
        let [[a, b], [c, d]] = &m.0;
        SolutionPair {
            x: self.x.clone() * a.clone() + self.y.clone() * c.clone(),
            y: self.x.clone() * b.clone() + self.y.clone() * d.clone(),
        }
    }
}

/// A 2×2 integer matrix acting on row vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoMatrix<T>(pub [[T; 2]; 2]);

impl<T: Scalar> AutoMatrix<T> {
    /// `[[3, 2], [4, 3]]`.
    pub fn generator() -> Self {
        let k = T::from_small;
        AutoMatrix([[k(3), k(2)], [k(4), k(3)]])
    }

    pub fn identity() -> Self {
        AutoMatrix([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.0;
        let b = &rhs.0;
        let cell = |i: usize, j: usize| {
            a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone()
        };
        AutoMatrix([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    pub fn det(&self) -> T {
        let m = &self.0;
        m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
    }
}

/// `x² − 2y² = −9`.
pub fn is_solution<T: Scalar>(p: &SolutionPair<T>) -> bool {
    p.x.clone() * p.x.clone() - T::from_small(2) * p.y.clone() * p.y.clone() == T::from_small(-9)
}

/// `(x_n, y_n)` for `n = 1..=count`, by repeated multiplication by `M`.
pub fn solve_orbit<T: Scalar>(count: usize) -> Result<Vec<SolutionPair<T>>> {
    if count < 1 {
        return Err(Error::domain("pell orbit", "count must be at least 1"));
    }
    let m = AutoMatrix::generator();
    let mut out = Vec::with_capacity(count);
    let mut p = SolutionPair::new(T::from_small(3), T::from_small(3));
    for _ in 0..count {
        let next = p.apply(&m);
        out.push(p);
        p = next;
    }
    Ok(out)
}

/// `M^n` by iterated multiplication.
pub fn matrix_power<T: Scalar>(n: i64) -> Result<AutoMatrix<T>> {
    if n < 1 {
        return Err(Error::domain(
            "matrix power",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let m = AutoMatrix::generator();
    Ok((0..n).fold(AutoMatrix::identity(), |acc, _| acc.mul(&m)))
}

/// `[[3B_n − B_{n-1}, 2B_n], [4B_n, 3B_n − B_{n-1}]]`.
pub fn matrix_power_closed<T: Scalar>(n: i64) -> Result<AutoMatrix<T>> {
    if n < 1 {
        return Err(Error::domain(
            "matrix power",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let k = T::from_small;
    let b = sequences::balancing::<T>(n)?;
    let bp = sequences::balancing::<T>(n - 1)?;
    let diag = k(3) * b.clone() - bp;
    Ok(AutoMatrix([
        [diag.clone(), k(2) * b.clone()],
        [k(4) * b, diag],
    ]))
}

/// `(21B_{n-1} − 3B_{n-2}, 15B_{n-1} − 3B_{n-2})`.
pub fn orbit_closed_form<T: Scalar>(n: i64) -> Result<SolutionPair<T>> {
    if n < 1 {
        return Err(Error::domain(
            "pell orbit",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let k = T::from_small;
    let b1 = sequences::balancing::<T>(n - 1)?;
    let b2 = sequences::balancing::<T>(n - 2)?;
    Ok(SolutionPair::new(
        k(21) * b1.clone() - k(3) * b2.clone(),
        k(15) * b1 - k(3) * b2,
    ))
}

/// The `n`-th orbit pair equals its closed form.
pub fn orbit_matches_closed_form<T: Scalar>(n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::domain(
            "pell orbit",
            format!("requires n >= 1, got {n}"),
        ));
    }
    let orbit = solve_orbit::<T>(n as usize)?;
    Ok(orbit.last() == Some(&orbit_closed_form(n)?))
}
