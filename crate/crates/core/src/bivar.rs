//! Exact bivariate polynomials in `(x, y)` over [`Rational`].
//!
//! These house the composition kernels. The one nontrivial operation is
//! the partial integral `C(x,y) = integral of A(x,t) B(t,y) dt over
//! [0,1]`, which is the recursion step defining the kernel of a composed
//! operator and therefore the primitive behind the brute-force oracle.

use crate::exact::{rat_int, Rational};
use crate::poly::Poly;
use num_traits::{One, Zero};

/// Dense bivariate polynomial; `coeffs[i][j]` is the coefficient of
/// `x^i y^j`. The zero polynomial has an empty coefficient matrix, and
/// the trailing all-zero row and column are always trimmed so equality
/// is entry-wise comparison.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<Rational>>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![vec![c]])
    }

    /// `c * x^i y^j`.
    pub fn monomial(i: usize, j: usize, c: Rational) -> Self {
        let mut coeffs = vec![vec![Rational::zero(); j + 1]; i + 1];
        coeffs[i][j] = c;
        Self::from_coeffs(coeffs)
    }

    /// Build from a rectangular coefficient matrix. Panics on ragged rows.
    pub fn from_coeffs(coeffs: Vec<Vec<Rational>>) -> Self {
        let ncols = coeffs.first().map_or(0, Vec::len);
        assert!(
            coeffs.iter().all(|r| r.len() == ncols),
            "ragged coefficient matrix"
        );
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    /// Outer product `f(x) g(y)`.
    pub fn outer(f: &Poly, g: &Poly) -> Self {
        if f.is_zero() || g.is_zero() {
            return Self::zero();
        }
        let coeffs = f
            .coeffs()
            .iter()
            .map(|a| g.coeffs().iter().map(|b| a * b).collect())
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|r| r.iter().all(Zero::is_zero))
        {
            self.coeffs.pop();
        }
        while !self.coeffs.is_empty() && self.coeffs.iter().all(|r| r.last().unwrap().is_zero()) {
            for r in &mut self.coeffs {
                r.pop();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree in `y`, or `None` for the zero polynomial.
    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.first().map(|r| r.len() - 1)
    }

    /// Coefficient of `x^i y^j` (zero beyond the stored degrees).
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self
            .coeffs
            .first()
            .map_or(0, Vec::len)
            .max(other.coeffs.first().map_or(0, Vec::len));
        let coeffs = (0..rows)
            .map(|i| (0..cols).map(|j| self.coeff(i, j) + other.coeff(i, j)).collect())
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|c| c * s).collect())
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, row| {
            let row_val = row
                .iter()
                .rev()
                .fold(Rational::zero(), |racc, c| racc * y + c);
            acc * x + row_val
        })
    }

    /// Entry-wise symmetry test: `coeff(i, j) == coeff(j, i)` for all
    /// `i, j`, i.e. `K(x, y) = K(y, x)`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        if self.coeffs.first().map_or(0, Vec::len) != n && !self.coeffs.is_empty() {
            return false;
        }
        (0..n).all(|i| (0..i).all(|j| self.coeffs[i][j] == self.coeffs[j][i]))
    }

    /// The composition-recursion step: given `A(x, t)` and `B(t, y)`,
    /// returns `C(x, y) = integral over [0,1] of A(x,t) B(t,y) dt`,
    /// exactly. Uses only `integral of t^m dt = 1/(m+1)`.
    pub fn partial_integral(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let rows = a.coeffs.len();
        let cols = b.coeffs.first().map_or(0, Vec::len);
        let mut coeffs = vec![vec![Rational::zero(); cols]; rows];
        for (i, arow) in a.coeffs.iter().enumerate() {
            for (p, ac) in arow.iter().enumerate() {
                if ac.is_zero() {
                    continue;
                }
                for (q, brow) in b.coeffs.iter().enumerate() {
                    let weight = ac / rat_int((p + q) as i64 + 1);
                    for (l, bc) in brow.iter().enumerate() {
                        if bc.is_zero() {
                            continue;
                        }
                        coeffs[i][l] += &weight * bc;
                    }
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// `integral of K(x, y) dy over [0,1]` as a polynomial in `x`.
    pub fn integrate_y(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| c / rat_int(j as i64 + 1))
                        .sum()
                })
                .collect(),
        )
    }

    /// `integral of f(y) K(x, y) dy over [0,1]` as a polynomial in `x`.
    pub fn integrate_against_y(&self, f: &Poly) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| {
                    let mut acc = Rational::zero();
                    for (j, c) in row.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (m, fm) in f.coeffs().iter().enumerate() {
                            acc += c * fm / rat_int((j + m) as i64 + 1);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// Double integral over the unit square.
    pub fn integrate_xy(&self) -> Rational {
        self.integrate_y().integrate01()
    }
}
