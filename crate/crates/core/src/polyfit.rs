//! Univariate polynomials with exact rational coefficients and Lagrange
//! interpolation through integer nodes.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in one variable with exact rational coefficients, stored in
/// ascending degree with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from ascending integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Builds `(1/den) * sum num[i] x^i`, the common-denominator form.
    pub fn from_common_denominator(den: &BigInt, nums: &[BigInt]) -> Self {
        Self::from_coeffs(
            nums.iter()
                .map(|c| BigRational::new(c.clone(), den.clone()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficients.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: i64) -> BigRational {
        self.eval_rational(&BigRational::from_integer(x.into()))
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &BigRational) -> RatPoly {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Least common denominator `D` and integer numerators `a_i` with
    /// `p = (1/D) * sum a_i x^i`. The zero polynomial gives `(1, [])`.
    pub fn common_denominator_form(&self) -> (BigInt, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, nums)
    }

    /// Renders the polynomial in variable `var` with rational coefficients,
    /// highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        let terms: Vec<(BigRational, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i))
            .collect();
        render_terms(&terms, var)
    }

    /// Renders `(1/D)*(...)` with integer coefficients inside.
    pub fn display_common_denominator(&self, var: &str) -> String {
        let (den, nums) = self.common_denominator_form();
        let terms: Vec<(BigRational, usize)> = nums
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (BigRational::from_integer(c.clone()), i))
            .collect();
        let inner = render_terms(&terms, var);
        if den.is_one() {
            inner
        } else {
            format!("(1/{den})*({inner})")
        }
    }
}

fn render_terms(terms: &[(BigRational, usize)], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, i)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let monomial = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{mag}*{monomial}"));
        }
    }
    out
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("d"))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs(
            (0..len)
                .map(|i| self.coefficient(i) + rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs(
            (0..len)
                .map(|i| self.coefficient(i) - rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

/// The unique polynomial of degree below `points.len()` through the given
/// `(x, y)` pairs, by Newton divided differences.
pub fn lagrange(points: &[(i64, BigRational)]) -> Result<RatPoly> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0]));
    }
    let xs: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(p.0.into()))
        .collect();
    let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
    let m = dd.len();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = vec![dd[m - 1].clone()];
    for i in (0..m - 1).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    Ok(RatPoly::from_coeffs(acc))
}

/// Interpolates integer data, a convenience wrapper over [`lagrange`].
pub fn lagrange_integers(points: &[(i64, BigInt)]) -> Result<RatPoly> {
    let pts: Vec<(i64, BigRational)> = points
        .iter()
        .map(|(x, y)| (*x, BigRational::from_integer(y.clone())))
        .collect();
    lagrange(&pts)
}
