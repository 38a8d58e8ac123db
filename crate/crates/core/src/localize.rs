//! Bott residue localization: weights, elementary symmetric functions,
//! Grassmannian tangents, blow-ups, per-point contributions and the global
//! sum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::charalg::{LaurentMonomial, VirtualRep};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::monideal::MonomialIdeal;

/// Weights `w_0..w_n` of a one-parameter torus acting on `x_0..x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    w: Vec<i64>,
}

impl WeightVector {
    /// Wraps a weight list. Validity is checked separately by
    /// [`WeightVector::check_distinct`] and [`validate_weights`].
    pub fn new(w: Vec<i64>) -> Self {
        WeightVector { w }
    }

    /// The raw weights.
    pub fn as_slice(&self) -> &[i64] {
        &self.w
    }

    /// `n` such that these weights act on `P^n`.
    pub fn ambient(&self) -> usize {
        self.w.len().saturating_sub(1)
    }

    /// Fails unless the entries are pairwise distinct.
    pub fn check_distinct(&self) -> Result<()> {
        let set: BTreeSet<i64> = self.w.iter().copied().collect();
        if set.len() == self.w.len() {
            Ok(())
        } else {
            Err(Error::DegenerateWeights(format!(
                "entries of {self} are not pairwise distinct"
            )))
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weight of a character: the dot product of its exponents with `w`.
///
/// # Panics
///
/// Panics if the character and the weights live over different ambients.
pub fn weight_of(c: &LaurentMonomial, w: &WeightVector) -> i64 {
    assert_eq!(c.ambient(), w.ambient(), "weight vector ambient");
    c.exponents()
        .iter()
        .zip(&w.w)
        .map(|(&e, &wi)| e as i64 * wi)
        .sum()
}

/// The elementary symmetric function `e_k` of a multiset of integers,
/// computed exactly by truncating `prod (1 + w_i t)` at order `k`.
pub fn elem_symm(weights: &[i64], k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if k > weights.len() {
        return BigInt::zero();
    }
    let mut e: Vec<BigInt> = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for (seen, &w) in weights.iter().enumerate() {
        let top = k.min(seen + 1);
        for j in (1..=top).rev() {
            let step = &e[j - 1] * w;
            e[j] += step;
        }
    }
    e.swap_remove(k)
}

/// Tangent space to a Grassmannian of subrepresentations:
/// `(ambient - point) ⊗ dual(point)`.
pub fn tgrass(ambient: &VirtualRep, point: &VirtualRep) -> Result<VirtualRep> {
    let quotient = ambient.checked_sub(point)?;
    if !quotient.is_effective() {
        return Err(Error::NotEffective(format!(
            "{point} is not contained in {ambient}"
        )));
    }
    quotient.tensor(&point.dual())
}

/// One fixed point on the exceptional divisor of a blow-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpPoint {
    /// Normal representation `N = T_X - T_B` at the base point.
    pub normal: VirtualRep,
    /// The eigenline `χ` of `N` that this point corresponds to.
    pub character: LaurentMonomial,
    /// Tangent `T_B + χ + (N - χ) ⊗ χ^{-1}`.
    pub tangent: VirtualRep,
    /// `χ · D` with `D` the least common denominator of the characters of `N`.
    pub new_generator: LaurentMonomial,
}

/// Blows up a smooth `X` along a smooth center `B` at an isolated fixed
/// point, returning one point per eigenline of the normal space.
pub fn blow_up(t_ambient: &VirtualRep, t_center: &VirtualRep) -> Result<Vec<BlowUpPoint>> {
    let normal = t_ambient.checked_sub(t_center)?;
    if !normal.is_effective() {
        return Err(Error::CenterNotSubrep(normal.to_string()));
    }
    if let Some((m, _)) = normal.iter().find(|&(_, c)| c > 1) {
        return Err(Error::NonIsolated(m.to_string()));
    }
    let n = normal.ambient();
    let mut den = vec![0i32; n + 1];
    for chi in normal.characters() {
        for (d, &e) in den.iter_mut().zip(chi.exponents()) {
            *d = (*d).max(-e);
        }
    }
    let den = LaurentMonomial::new(den);
    let mut out = Vec::with_capacity(normal.len());
    for chi in normal.characters() {
        let line = VirtualRep::from_monomial(chi.clone());
        let rest = normal.checked_sub(&line)?;
        let tangent = t_center
            .checked_add(&line)?
            .checked_add(&rest.tensor(&line.dual())?)?;
        let new_generator = chi.checked_mul(&den)?;
        if !new_generator.is_monomial() {
            return Err(Error::Internal(format!(
                "new generator {new_generator} from {chi} has a negative exponent"
            )));
        }
        out.push(BlowUpPoint {
            normal: normal.clone(),
            character: chi.clone(),
            tangent,
            new_generator,
        });
    }
    Ok(out)
}

/// One summand of the Bott formula: a torus-fixed point of the parameter
/// space with its ideal and tangent representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    /// Family this point belongs to.
    pub family: Family,
    /// Isomorphism-type label within the family, such as `"4"` or `"5.2"`.
    pub kind: String,
    /// Ideal whose degree-`d` slice is the fiber of `E_d` at this point.
    pub ideal: MonomialIdeal,
    /// Tangent representation of the parameter space at this point.
    pub tangent: VirtualRep,
    /// Dimension of the parameter space.
    pub dim_w: usize,
    /// `n` of the ambient `P^n`.
    pub n: usize,
}

impl FixedPoint {
    /// Checks the structural invariants: effective tangent of dimension
    /// `dim_w` without the trivial character.
    pub fn check(&self) -> Result<()> {
        if !self.tangent.is_effective() {
            return Err(Error::NotEffective(self.tangent.to_string()));
        }
        if self.tangent.dimension() != self.dim_w as i64 {
            return Err(Error::Internal(format!(
                "tangent at {} has dimension {} instead of {}",
                self.ideal,
                self.tangent.dimension(),
                self.dim_w
            )));
        }
        if self.tangent.contains_trivial() {
            return Err(Error::Internal(format!(
                "tangent at {} contains the trivial character",
                self.ideal
            )));
        }
        Ok(())
    }

    /// Renames variables in both ideal and tangent.
    pub fn permute(&self, perm: &[usize]) -> FixedPoint {
        FixedPoint {
            family: self.family,
            kind: self.kind.clone(),
            ideal: self.ideal.permute(perm),
            tangent: self.tangent.permute(perm),
            dim_w: self.dim_w,
            n: self.n,
        }
    }

    /// Tangent weights with multiplicity.
    pub fn tangent_weights(&self, w: &WeightVector) -> Result<Vec<i64>> {
        Ok(self
            .tangent
            .expand()?
            .iter()
            .map(|c| weight_of(c, w))
            .collect())
    }
}

/// Contribution of one fixed point at degree `d`:
/// `e_{dim_w}(complement weights) / prod(tangent weights)`, where the
/// complement is the set of degree-`d` monomials outside the point's ideal.
pub fn contribution(f: &FixedPoint, d: i64, w: &WeightVector) -> Result<BigRational> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    if w.ambient() != f.n {
        return Err(Error::AmbientMismatch {
            left: f.n,
            right: w.ambient(),
        });
    }
    let mut den = BigInt::one();
    for (c, k) in f.tangent.iter() {
        let wt = weight_of(c, w);
        if wt == 0 {
            return Err(Error::DegenerateWeights(format!(
                "character {c} at {} has weight zero under {w}",
                f.ideal
            )));
        }
        for _ in 0..k {
            den *= wt;
        }
    }
    let weights = f.ideal.complement_weights(d as u32, w.as_slice());
    let num = elem_symm(&weights, f.dim_w);
    Ok(BigRational::new(num, den))
}

#[cfg(feature = "parallel")]
fn sum_contributions(points: &[FixedPoint], d: i64, w: &WeightVector) -> Result<BigRational> {
    use rayon::prelude::*;
    points
        .par_iter()
        .map(|f| contribution(f, d, w))
        .try_reduce(BigRational::zero, |a, b| Ok(a + b))
}

#[cfg(not(feature = "parallel"))]
fn sum_contributions(points: &[FixedPoint], d: i64, w: &WeightVector) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for f in points {
        total += contribution(f, d, w)?;
    }
    Ok(total)
}

/// The Bott sum over all fixed points at degree `d`, which must be a
/// nonnegative integer: the degree of the singular locus.
///
/// Every point must belong to the same family, and `d` must be at least the
/// family's threshold.
pub fn bott_sum(points: &[FixedPoint], d: i64, w: &WeightVector) -> Result<BigInt> {
    if let Some(first) = points.first() {
        let d_min = first.family.d_min();
        if d < d_min {
            return Err(Error::BelowThreshold { d, d_min });
        }
        if let Some(other) = points.iter().find(|p| p.family != first.family) {
            return Err(Error::InvalidParams(format!(
                "mixed families {} and {}",
                first.family, other.family
            )));
        }
    }
    w.check_distinct()?;
    let total = sum_contributions(points, d, w)?;
    if !total.is_integer() || total.is_negative() {
        return Err(Error::NonIntegerTotal(total.to_string()));
    }
    Ok(total.to_integer())
}

/// A problem found by [`validate_weights`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightIssue {
    /// Index of the offending point, if the issue is point-specific.
    pub point: Option<usize>,
    /// Offending character, if any.
    pub character: Option<String>,
    /// Human-readable explanation.
    pub message: String,
}

/// Outcome of [`validate_weights`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    /// The weights examined.
    pub weights: WeightVector,
    /// Everything that went wrong; empty on success.
    pub issues: Vec<WeightIssue>,
}

impl WeightReport {
    /// Whether the weights are usable for these points.
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "weights {} pass", self.weights);
        }
        writeln!(f, "weights {} fail:", self.weights)?;
        for issue in &self.issues {
            match issue.point {
                Some(i) => writeln!(f, "  point {i}: {}", issue.message)?,
                None => writeln!(f, "  {}", issue.message)?,
            }
        }
        Ok(())
    }
}

/// Checks that `w` has the right length and distinct entries, and that every
/// tangent character of every point has nonzero weight.
pub fn validate_weights(points: &[FixedPoint], w: &WeightVector) -> WeightReport {
    let mut issues = Vec::new();
    if let Some(first) = points.first() {
        if w.as_slice().len() != first.n + 1 {
            issues.push(WeightIssue {
                point: None,
                character: None,
                message: format!(
                    "expected {} weights, got {}",
                    first.n + 1,
                    w.as_slice().len()
                ),
            });
            return WeightReport {
                weights: w.clone(),
                issues,
            };
        }
    }
    if let Err(e) = w.check_distinct() {
        issues.push(WeightIssue {
            point: None,
            character: None,
            message: e.to_string(),
        });
    }
    for (i, f) in points.iter().enumerate() {
        for c in f.tangent.characters() {
            if weight_of(c, w) == 0 {
                issues.push(WeightIssue {
                    point: Some(i),
                    character: Some(c.to_string()),
                    message: format!("tangent character {c} at {} has weight zero", f.ideal),
                });
            }
        }
    }
    WeightReport {
        weights: w.clone(),
        issues,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(n: usize, s: &str) -> VirtualRep {
        VirtualRep::parse(n, s).unwrap()
    }

    #[test]
    fn weights_of_characters() {
        let w = WeightVector::new(vec![4, 11, 17, 32]);
        let c = LaurentMonomial::parse(3, "x0^2*x1/x2").unwrap();
        assert_eq!(weight_of(&c, &w), 2);
        assert_eq!(weight_of(&LaurentMonomial::one(3), &w), 0);
        assert_eq!(
            weight_of(&LaurentMonomial::parse(3, "x2/x0").unwrap(), &w),
            13
        );
    }

    #[test]
    fn elementary_symmetric_functions() {
        assert_eq!(elem_symm(&[1, 2, 3], 2), BigInt::from(11));
        assert_eq!(elem_symm(&[], 0), BigInt::one());
        assert_eq!(elem_symm(&[], 3), BigInt::zero());
        assert_eq!(elem_symm(&[13, 28, 6, 21], 4), BigInt::from(45864));
        assert_eq!(elem_symm(&[-2, 5], 2), BigInt::from(-10));
    }

    #[test]
    fn grassmannian_tangent_of_a_line() {
        let s1 = crate::charalg::sym_power(3, 1).unwrap();
        let t = tgrass(&s1, &rep(3, "x0 + x1")).unwrap();
        assert_eq!(t, rep(3, "x2/x0 + x3/x0 + x2/x1 + x3/x1"));
        let p = rep(3, "x0 + x1");
        assert!(tgrass(&p, &p).unwrap().is_zero());
        assert!(tgrass(&p, &rep(3, "x2")).is_err());
    }

    #[test]
    fn blow_up_with_single_normal_character() {
        let center = rep(3, "x1/x0");
        let ambient = rep(3, "x1/x0 + x2/x0");
        let pts = blow_up(&ambient, &center).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].tangent, ambient);
        assert_eq!(
            pts[0].new_generator,
            LaurentMonomial::parse(3, "x2").unwrap()
        );
    }

    #[test]
    fn blow_up_errors() {
        let ambient = rep(3, "x1/x0");
        assert!(matches!(
            blow_up(&ambient, &rep(3, "x2/x0")),
            Err(Error::CenterNotSubrep(_))
        ));
        assert!(matches!(
            blow_up(&rep(3, "2*x1/x0"), &VirtualRep::zero(3)),
            Err(Error::NonIsolated(_))
        ));
    }

    #[test]
    fn weight_vector_distinctness() {
        assert!(WeightVector::new(vec![0, 0, 0, 0])
            .check_distinct()
            .is_err());
        assert!(WeightVector::new(vec![4, 11, 17, 32])
            .check_distinct()
            .is_ok());
        assert_eq!(WeightVector::new(vec![4, 11]).to_string(), "(4,11)");
    }
}
