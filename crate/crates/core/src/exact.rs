//! Exact rational scalars, combinatorial primitives and dense rational
//! linear algebra.
//!
//! Every quantity in the Bernstein-Durrmeyer machinery is a ratio of
//! integers, so all arithmetic here is arbitrary precision and all
//! results are stored in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always normalized (lowest terms,
/// positive denominator). Backed by `num_rational::BigRational`.
pub type Rational = num_rational::BigRational;

/// Errors from the exact linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Operand dimensions are incompatible.
    #[error("shape mismatch: {0}x{1} against {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    /// Back substitution hit a zero pivot.
    #[error("zero diagonal entry at index {0}")]
    ZeroDiagonal(usize),
}

/// Shorthand constructor for `numer/denom`.
///
/// Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `n!`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Falling factorial `z(z-1)...(z-r+1)`, with the empty product equal to 1.
pub fn falling_factorial(z: &Rational, r: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..r {
        acc *= z - rat_int(i64::from(i));
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact rational.
///
/// Returns 0 for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    let k = k as u64;
    // Symmetric form keeps the loop short.
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: the partial product is C(n, i+1) * (i+1)! / ...
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Dense matrix over [`Rational`], row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
    upper_triangular: bool,
}

impl RationalMatrix {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
            upper_triangular: false,
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m.upper_triangular = true;
        m
    }

    /// Build from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
            upper_triangular: false,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    /// Whether the constructor asserted upper-triangular structure.
    pub fn upper_triangular_flag(&self) -> bool {
        self.upper_triangular
    }

    /// Scan and set the upper-triangular flag. Panics if a strictly
    /// lower entry is nonzero, so a wrongly claimed flag cannot exist.
    pub fn mark_upper_triangular(mut self) -> Self {
        assert!(self.is_upper_triangular(), "matrix is not upper triangular");
        self.upper_triangular = true;
        self
    }

    /// Scan test: `entries[j][k] = 0` for all `j > k`.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|j| (0..j.min(self.cols)).all(|k| self.get(j, k).is_zero()))
    }

    /// Exact matrix product.
    pub fn mat_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Exact matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if self.cols != v.len() {
            return Err(ExactError::ShapeMismatch(self.rows, self.cols, v.len(), 1));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, self.cols, self.cols,
            ));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m.get(r, col).is_zero()) {
                Some(p) => p,
                None => return Ok(Rational::zero()),
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = -det;
            }
            let p = m.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = m.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Solve `A x = b` exactly by back substitution.
    ///
    /// `A` must be square and upper triangular with a nonzero diagonal.
    pub fn solve_upper_triangular(&self, b: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(ExactError::ShapeMismatch(
                self.rows,
                self.cols,
                b.len(),
                1,
            ));
        }
        debug_assert!(self.is_upper_triangular());
        let n = self.rows;
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let diag = self.get(i, i);
            if diag.is_zero() {
                return Err(ExactError::ZeroDiagonal(i));
            }
            let mut acc = b[i].clone();
            for j in i + 1..n {
                acc -= self.get(i, j) * &x[j];
            }
            x[i] = acc / diag;
        }
        Ok(x)
    }
}

impl std::fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Canonical check that a rational is stored in lowest terms with a
/// positive denominator. `BigRational` maintains this by construction;
/// the tests use it to pin the invariant down.
pub fn is_canonical(r: &Rational) -> bool {
    use num_bigint::Sign;
    if r.denom().sign() != Sign::Plus {
        return false;
    }
    num_integer_gcd(r.numer().abs(), r.denom().clone()).is_one() || r.numer().is_zero()
}

fn num_integer_gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}
