//! Monomial ideals in `k[x_0..x_n]`: minimal generators, products, degree
//! slices and Hilbert functions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::charalg::{for_each_composition, LaurentMonomial};
use crate::error::{Error, Result};
use crate::polyfit::{lagrange, RatPoly};

/// A monomial ideal given by its minimal generators in graded order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<LaurentMonomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` over `P^n`, reduced to its minimal
    /// generating set.
    pub fn new(n: usize, gens: impl IntoIterator<Item = LaurentMonomial>) -> Result<Self> {
        let mut all = Vec::new();
        for g in gens {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: g.ambient(),
                });
            }
            if !g.is_monomial() {
                return Err(Error::NegativeExponent(g.to_string()));
            }
            all.push(g);
        }
        Ok(Self::minimalize(n, all))
    }

    /// The zero ideal over `P^n`.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// Parses a comma-separated generator list such as `x0^2, x0*x1`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let gens = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| LaurentMonomial::parse(n, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    fn minimalize(n: usize, mut all: Vec<LaurentMonomial>) -> Self {
        all.sort_by_key(|g| g.grlex_key());
        all.dedup();
        let mut gens: Vec<LaurentMonomial> = Vec::with_capacity(all.len());
        for g in all {
            if !gens.iter().any(|h| h.divides(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal { n, gens }
    }

    /// `n` of the ambient `P^n`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Minimal generators in graded order.
    pub fn generators(&self) -> &[LaurentMonomial] {
        &self.gens
    }

    /// Largest generator degree (zero for the zero ideal).
    pub fn max_generator_degree(&self) -> i64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Whether `m` lies in the ideal.
    pub fn contains(&self, m: &LaurentMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The ideal generated by both generator sets.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Self::minimalize(
            self.n,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    /// The ideal with one extra generator.
    pub fn with_generator(&self, g: LaurentMonomial) -> Result<MonomialIdeal> {
        self.sum(&MonomialIdeal::new(self.n, [g])?)
    }

    /// The product ideal.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::minimalize(self.n, all))
    }

    /// The square of the ideal.
    pub fn square(&self) -> MonomialIdeal {
        self.product(self).expect("an ideal shares its own ambient")
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> MonomialIdeal {
        Self::minimalize(self.n, self.gens.iter().map(|g| g.permute(perm)).collect())
    }

    fn packed_generators(&self) -> Vec<Vec<u32>> {
        self.gens
            .iter()
            .map(|g| g.exponents().iter().map(|&e| e as u32).collect())
            .collect()
    }

    /// All degree-`d` monomials in the ideal, in canonical order.
    pub fn degree_slice(&self, d: i64) -> Result<Vec<LaurentMonomial>> {
        if d < 0 {
            return Err(Error::NegativeDegree(d));
        }
        let gens = self.packed_generators();
        let mut out = Vec::new();
        for_each_composition(self.n, d as u32, |e| {
            if gens.iter().any(|g| divides_packed(g, e)) {
                out.push(LaurentMonomial::new(e.iter().map(|&a| a as i32).collect()));
            }
        });
        Ok(out)
    }

    /// Calls `f` on every degree-`d` monomial outside the ideal. Prefixes
    /// already divisible by a generator are skipped wholesale, so the work
    /// is proportional to the size of the complement rather than to
    /// `C(d+n, n)`.
    pub fn for_each_complement(&self, d: u32, mut f: impl FnMut(&[u32])) {
        let gens = self.packed_generators();
        let mut exps = vec![0u32; self.n + 1];
        complement_rec(&gens, &mut exps, 0, d, &mut f);
    }

    /// Weights of the degree-`d` monomials outside the ideal under `w`.
    pub fn complement_weights(&self, d: u32, w: &[i64]) -> Vec<i64> {
        let mut out = Vec::new();
        self.for_each_complement(d, |e| {
            out.push(e.iter().zip(w).map(|(&a, &wi)| a as i64 * wi).sum());
        });
        out
    }

    /// Hilbert function of the quotient: `C(d+n, n) - |degree_slice(d)|`.
    pub fn hilbert_count(&self, d: i64) -> Result<u64> {
        if d < 0 {
            return Err(Error::NegativeDegree(d));
        }
        let mut count = 0u64;
        self.for_each_complement(d as u32, |_| count += 1);
        Ok(count)
    }

    /// Hilbert polynomial, found by interpolating the Hilbert function on
    /// sliding windows of `n + 1` consecutive degrees until two successive
    /// windows give the same polynomial. The search starts at the largest
    /// generator degree and stops at `max(4 * that degree, that degree + n + 2)`.
    pub fn hilbert_polynomial(&self) -> Result<RatPoly> {
        let top = self.max_generator_degree();
        self.hilbert_polynomial_with_ceiling((4 * top).max(top + self.n as i64 + 2))
    }

    /// [`MonomialIdeal::hilbert_polynomial`] with an explicit degree ceiling.
    pub fn hilbert_polynomial_with_ceiling(&self, ceiling: i64) -> Result<RatPoly> {
        let width = self.n as i64 + 1;
        let start = self.max_generator_degree();
        let fit = |s: i64| -> Result<RatPoly> {
            let pts = (s..s + width)
                .map(|t| {
                    let h = self.hilbert_count(t)?;
                    Ok((t, BigRational::from_integer(BigInt::from(h))))
                })
                .collect::<Result<Vec<_>>>()?;
            lagrange(&pts)
        };
        let mut prev = fit(start)?;
        let mut s = start + 1;
        while s + width - 1 <= ceiling {
            let next = fit(s)?;
            if next == prev {
                return Ok(next);
            }
            prev = next;
            s += 1;
        }
        Err(Error::HilbertNotStabilized(ceiling))
    }
}

fn divides_packed(g: &[u32], e: &[u32]) -> bool {
    g.iter().zip(e).all(|(a, b)| a <= b)
}

fn complement_rec(
    gens: &[Vec<u32>],
    exps: &mut [u32],
    i: usize,
    rem: u32,
    f: &mut impl FnMut(&[u32]),
) {
    let last = exps.len() - 1;
    if i == last {
        exps[i] = rem;
        if !gens.iter().any(|g| divides_packed(g, exps)) {
            f(exps);
        }
        exps[i] = 0;
        return;
    }
    for e in 0..=rem {
        exps[i] = e;
        if gens.iter().any(|g| divides_packed(g, exps)) {
            break;
        }
        complement_rec(gens, exps, i + 1, rem - e, f);
    }
    exps[i] = 0;
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, s).unwrap()
    }

    #[test]
    fn square_of_twisted_cubic_net() {
        let sq = ideal(3, "x0*x1, x1*x2, x2*x3").square();
        let expected = ideal(
            3,
            "x2^2*x3^2, x1*x2^2*x3, x0*x1*x2*x3, x1^2*x2^2, x0*x1^2*x2, x0^2*x1^2",
        );
        assert_eq!(sq, expected);
        assert_eq!(sq.generators().len(), 6);
    }

    #[test]
    fn square_minimalizes() {
        assert_eq!(ideal(3, "x0, x1").square(), ideal(3, "x0^2, x0*x1, x1^2"));
        let sq = ideal(3, "x0^2, x0*x1, x1^3").square();
        assert_eq!(sq, ideal(3, "x0^4, x0^3*x1, x0^2*x1^2, x0*x1^4, x1^6"));
    }

    #[test]
    fn slices_and_counts() {
        let l = ideal(3, "x0, x1").square();
        assert_eq!(l.degree_slice(3).unwrap().len(), 10);
        assert_eq!(l.hilbert_count(3).unwrap(), 10);
        assert!(ideal(3, "x0^3").degree_slice(2).unwrap().is_empty());
        assert_eq!(MonomialIdeal::zero(3).hilbert_count(2).unwrap(), 10);
        let bad = ideal(3, "x0^2, x0*x1, x1^2").square();
        assert_eq!(bad.hilbert_count(4).unwrap(), 30);
        let row1 = ideal(3, "x0*x1, x1*x2, x2*x3").square();
        assert_eq!(row1.degree_slice(5).unwrap().len(), 18);
    }

    #[test]
    fn hilbert_polynomials() {
        let row1 = ideal(3, "x0*x1, x1*x2, x2*x3").square();
        assert_eq!(
            row1.hilbert_polynomial().unwrap(),
            RatPoly::from_integers(&[-7, 9])
        );
        let plane = ideal(3, "x0").hilbert_polynomial().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(plane, RatPoly::from_integers(&[2, 3, 1]).scale(&half));
    }

    #[test]
    fn complement_matches_slice() {
        let i = ideal(3, "x0^2, x0*x1, x1^3, x2^2*x3");
        for d in 0..9 {
            let total = crate::charalg::sym_power(3, d).unwrap().dimension() as u64;
            let slice = i.degree_slice(d).unwrap().len() as u64;
            assert_eq!(i.hilbert_count(d).unwrap(), total - slice, "d = {d}");
        }
    }

    #[test]
    fn rejects_laurent_generators() {
        let m = LaurentMonomial::parse(3, "x0/x1").unwrap();
        assert!(matches!(
            MonomialIdeal::new(3, [m]),
            Err(Error::NegativeExponent(_))
        ));
    }
}
