//! Exact univariate polynomials on `[0, 1]`, the Bernstein basis and the
//! unnormalized shifted Legendre polynomials.
//!
//! Polynomials are stored dense in the monomial basis with trailing zeros
//! trimmed, so equality is plain coefficient comparison and integration
//! over `[0, 1]` is a one-line sum.

use crate::exact::{binomial, rat_int, Rational};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over [`Rational`].
///
/// `coeffs[i]` is the coefficient of `x^i`; the zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^power`.
    pub fn monomial(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Build from monomial coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact integral over `[0, 1]`: sum of `coeffs[i] / (i + 1)`.
    pub fn integrate01(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / rat_int(i as i64 + 1))
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

/// `<f, g> = integral of f(t) g(t) over [0, 1]`, exactly.
pub fn inner_product(f: &Poly, g: &Poly) -> Rational {
    (f * g).integrate01()
}

/// Bernstein basis polynomial `C(n,k) x^k (1-x)^(n-k)` expanded to
/// monomial form.
///
/// Panics if `k > n`.
pub fn bernstein_basis(n: usize, k: usize) -> Poly {
    assert!(k <= n, "bernstein_basis index k={k} out of range for n={n}");
    power_basis(n, k).scale(&binomial(n as u64, k as i64))
}

/// `x^k (1-x)^(n-k)` without the binomial weight.
pub(crate) fn power_basis(n: usize, k: usize) -> Poly {
    debug_assert!(k <= n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (j, c) in coeffs.iter_mut().enumerate().skip(k) {
        let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
        *c = binomial((n - k) as u64, (j - k) as i64) * rat_int(sign);
    }
    Poly::from_coeffs(coeffs)
}

/// Shifted Legendre polynomial on `[0, 1]` without the orthonormalizing
/// factor `sqrt(2k+1)`, so that all coefficients stay rational.
///
/// Satisfies `<poly, poly> = 1/(2k+1)` and `degree(poly) = k` with
/// leading coefficient `(-1)^k C(2k, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreUnnormalized {
    pub k: usize,
    pub poly: Poly,
}

/// Alternating Bernstein combination `sum_j (-1)^j C(k,j) p_{k,j}`,
/// equal to the Rodrigues form `(1/k!) d^k/dx^k [x^k (1-x)^k]`.
pub fn legendre_unnormalized(k: usize) -> LegendreUnnormalized {
    let mut poly = Poly::zero();
    for j in 0..=k {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        poly = &poly + &bernstein_basis(k, j).scale(&rat_int(sign));
    }
    LegendreUnnormalized { k, poly }
}

/// True iff the degree-`n` Bernstein basis sums to the constant 1.
pub fn verify_partition_of_unity(n: usize) -> bool {
    let sum = (0..=n).fold(Poly::zero(), |acc, k| &acc + &bernstein_basis(n, k));
    sum == Poly::one()
}

/// True iff `p_{m,mu} p_{n,nu}` equals
/// `[C(m,mu) C(n,nu) / C(m+n,mu+nu)] p_{m+n,mu+nu}` as exact polynomials.
///
/// Panics if `mu > m` or `nu > n`.
pub fn verify_product_formula(m: usize, mu: usize, n: usize, nu: usize) -> bool {
    assert!(mu <= m && nu <= n, "basis index out of range");
    let lhs = &bernstein_basis(m, mu) * &bernstein_basis(n, nu);
    let ratio = binomial(m as u64, mu as i64) * binomial(n as u64, nu as i64)
        / binomial((m + n) as u64, (mu + nu) as i64);
    let rhs = bernstein_basis(m + n, mu + nu).scale(&ratio);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(coeffs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_poly_normal_form() {
        assert!(Poly::from_coeffs(vec![rat_int(0), rat_int(0)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn bernstein_low_orders() {
        assert_eq!(bernstein_basis(0, 0), Poly::one());
        assert_eq!(bernstein_basis(1, 1), Poly::x());
        // 2x(1-x) = 2x - 2x^2
        assert_eq!(bernstein_basis(2, 1), p(&[(0, 1), (2, 1), (-2, 1)]));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn bernstein_index_out_of_range_panics() {
        bernstein_basis(2, 3);
    }

    #[test]
    fn integrate01_constant() {
        assert_eq!(Poly::one().integrate01(), rat_int(1));
    }

    #[test]
    fn integrate01_bernstein() {
        assert_eq!(bernstein_basis(3, 1).integrate01(), rat(1, 4));
    }

    #[test]
    fn integrate01_bernstein_product() {
        // p_{5,2} p_{4,1} = [C(5,2)C(4,1)/C(9,3)] p_{9,3}; its integral is
        // 40/84 * 1/10 = 1/21. Frozen from direct monomial integration.
        let f = &bernstein_basis(5, 2) * &bernstein_basis(4, 1);
        assert_eq!(f.integrate01(), rat(1, 21));
        // Second route through the product formula for the same value.
        let ratio = binomial(5, 2) * binomial(4, 1) / binomial(9, 3);
        assert_eq!(
            ratio * bernstein_basis(9, 3).integrate01(),
            rat(1, 21)
        );
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&Poly::one(), &Poly::one()), rat_int(1));
        let l1 = legendre_unnormalized(1).poly;
        let l2 = legendre_unnormalized(2).poly;
        assert_eq!(inner_product(&l1, &l2), rat_int(0));
        assert_eq!(inner_product(&l2, &l2), rat(1, 5));
    }

    #[test]
    fn legendre_low_orders() {
        assert_eq!(legendre_unnormalized(0).poly, Poly::one());
        assert_eq!(legendre_unnormalized(1).poly, p(&[(1, 1), (-2, 1)]));
        assert_eq!(legendre_unnormalized(2).poly, p(&[(1, 1), (-6, 1), (6, 1)]));
    }

    #[test]
    fn legendre_matches_rodrigues_form() {
        // (1/k!) d^k/dx^k [x^k (1-x)^k], computed with repeated derivative.
        for k in 0..=10 {
            let mut rod = &Poly::monomial(k, rat_int(1)) * &power_basis(k, 0);
            for _ in 0..k {
                rod = rod.derivative();
            }
            let kfact = Rational::from_integer(crate::exact::factorial(k as u64));
            assert_eq!(rod.scale(&(Rational::one() / kfact)), legendre_unnormalized(k).poly);
        }
    }

    #[test]
    fn partition_of_unity_examples() {
        assert!(verify_partition_of_unity(0));
        assert!(verify_partition_of_unity(5));
        assert!(verify_partition_of_unity(12));
    }

    #[test]
    fn product_formula_examples() {
        assert!(verify_product_formula(1, 1, 1, 0));
        assert!(verify_product_formula(0, 0, 4, 2));
        assert!(verify_product_formula(3, 2, 4, 1));
    }

    #[test]
    fn product_formula_ratio_half() {
        // x(1-x) = (1/2) p_{2,1}
        let lhs = &bernstein_basis(1, 1) * &bernstein_basis(1, 0);
        assert_eq!(lhs, bernstein_basis(2, 1).scale(&rat(1, 2)));
    }

    #[test]
    fn eval_and_derivative() {
        let f = p(&[(1, 1), (-6, 1), (6, 1)]);
        assert_eq!(f.eval(&rat(1, 2)), rat(-1, 2));
        assert_eq!(f.derivative(), p(&[(-6, 1), (12, 1)]));
    }
}
