//! Fixed-point generators for the supported families: linear subspaces,
//! plane curves, determinantal nets (twisted cubics, ruled cubics, Segre
//! threefolds) and elliptic quartics.
//!
//! Each generator builds a handful of representatives, runs the blow-up
//! cascade on the ones that need it, then applies every permutation of the
//! variables and removes duplicates by ideal.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::charalg::{sym_power, LaurentMonomial, VirtualRep};
use crate::error::{Error, Result};
use crate::localize::{blow_up, tgrass, FixedPoint, WeightVector};
use crate::monideal::MonomialIdeal;
use crate::polyfit::RatPoly;

/// One of the six supported families `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `k`-planes in `P^n`.
    Linear { k: usize, n: usize },
    /// Plane curves of degree `m` in `P^3`.
    PlaneCurve { m: usize },
    /// Twisted cubics in `P^3`.
    TwistedCubic,
    /// Rational normal cubic scrolls in `P^4`.
    RuledCubic,
    /// Segre threefolds `P^1 x P^2` in `P^5`.
    Segre,
    /// Elliptic quartic curves in `P^3`.
    EllipticQuartic,
}

/// The numeric data attached to a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    /// The family itself.
    pub family: Family,
    /// Dimension of the parameter space `W`.
    pub dim_w: usize,
    /// `n` of the ambient `P^n`.
    pub ambient: usize,
    /// Smallest degree at which the fibers form a bundle of the expected rank.
    pub d_min: i64,
    /// Hilbert polynomial of every fixed-point ideal.
    pub hilb: RatPoly,
    /// Weights used when none are supplied.
    pub default_weights: WeightVector,
    /// `n * dim_w`, a proven bound on the degree of the result polynomial.
    pub degree_bound_safe: usize,
    /// `(dim_member + 1) * dim_w`, the observed degree of the result.
    pub degree_bound_conjectural: usize,
    /// `C(d_min + n, n) - 1`, the dimension of the space of hypersurfaces at
    /// the threshold degree.
    pub n_d_min: u64,
}

const GENERIC_WEIGHTS: [i64; 6] = [11, 17, 32, 55, 95, 160];

impl Family {
    /// All family tags accepted by [`Family::from_tag`].
    pub const TAGS: [&'static str; 6] = [
        "linear",
        "plane-curve",
        "twisted-cubic",
        "ruled-cubic",
        "segre",
        "elliptic-quartic",
    ];

    /// Builds a family from its tag and the parameters it needs.
    pub fn from_tag(
        tag: &str,
        k: Option<usize>,
        n: Option<usize>,
        m: Option<usize>,
    ) -> Result<Family> {
        let family = match tag {
            "linear" => Family::Linear {
                k: k.ok_or_else(|| Error::InvalidParams("linear needs --k".into()))?,
                n: n.ok_or_else(|| Error::InvalidParams("linear needs --n".into()))?,
            },
            "plane-curve" => Family::PlaneCurve {
                m: m.ok_or_else(|| Error::InvalidParams("plane-curve needs --m".into()))?,
            },
            "twisted-cubic" => Family::TwistedCubic,
            "ruled-cubic" => Family::RuledCubic,
            "segre" => Family::Segre,
            "elliptic-quartic" => Family::EllipticQuartic,
            other => return Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        };
        family.validate()?;
        Ok(family)
    }

    /// Short kebab-case tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Linear { .. } => "linear",
            Family::PlaneCurve { .. } => "plane-curve",
            Family::TwistedCubic => "twisted-cubic",
            Family::RuledCubic => "ruled-cubic",
            Family::Segre => "segre",
            Family::EllipticQuartic => "elliptic-quartic",
        }
    }

    /// Named parameters, empty for the fixed families.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            Family::Linear { k, n } => vec![("k", k), ("n", n)],
            Family::PlaneCurve { m } => vec![("m", m)],
            _ => Vec::new(),
        }
    }

    /// Checks that the parameters are in range.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Linear { k, n } if k + 1 >= n => Err(Error::InvalidParams(format!(
                "linear family needs 0 <= k < n - 1, got k = {k}, n = {n}"
            ))),
            Family::PlaneCurve { m } if m < 2 => Err(Error::InvalidParams(format!(
                "plane curves need m >= 2, got {m}"
            ))),
            _ => Ok(()),
        }
    }

    /// `n` of the ambient `P^n`.
    pub fn ambient(&self) -> usize {
        match *self {
            Family::Linear { n, .. } => n,
            Family::PlaneCurve { .. } | Family::TwistedCubic | Family::EllipticQuartic => 3,
            Family::RuledCubic => 4,
            Family::Segre => 5,
        }
    }

    /// Dimension of the parameter space.
    pub fn dim_w(&self) -> usize {
        match *self {
            Family::Linear { k, n } => (k + 1) * (n - k),
            Family::PlaneCurve { m } => 3 + (m + 2) * (m + 1) / 2 - 1,
            Family::TwistedCubic => 12,
            Family::RuledCubic => 18,
            Family::Segre => 24,
            Family::EllipticQuartic => 16,
        }
    }

    /// Dimension of a member of the family.
    pub fn dim_member(&self) -> usize {
        match *self {
            Family::Linear { k, .. } => k,
            Family::PlaneCurve { .. } | Family::TwistedCubic | Family::EllipticQuartic => 1,
            Family::RuledCubic => 2,
            Family::Segre => 3,
        }
    }

    /// Smallest supported degree.
    pub fn d_min(&self) -> i64 {
        match *self {
            Family::Linear { .. } => 2,
            Family::PlaneCurve { m } => 2 * m as i64,
            Family::TwistedCubic | Family::RuledCubic | Family::Segre => 4,
            Family::EllipticQuartic => 6,
        }
    }

    /// `n * dim_w`.
    pub fn degree_bound_safe(&self) -> usize {
        self.ambient() * self.dim_w()
    }

    /// `(dim_member + 1) * dim_w`.
    pub fn degree_bound_conjectural(&self) -> usize {
        (self.dim_member() + 1) * self.dim_w()
    }

    /// Default torus weights.
    pub fn default_weights(&self) -> WeightVector {
        match *self {
            Family::Linear { n: 3, .. } => WeightVector::new(vec![4, 11, 17, 32]),
            Family::EllipticQuartic => WeightVector::new(vec![55, 95, 160, 267]),
            _ => {
                let n = self.ambient();
                let mut w: Vec<i64> = GENERIC_WEIGHTS.iter().copied().take(n + 1).collect();
                while w.len() < n + 1 {
                    let k = w.len();
                    w.push(w[k - 1] + w[k - 2] + w[k - 4]);
                }
                WeightVector::new(w)
            }
        }
    }

    /// Hilbert polynomial shared by all fixed-point ideals. Known closed
    /// forms are returned directly; linear subspaces and plane curves are
    /// computed from a representative ideal.
    pub fn hilbert_polynomial(&self) -> Result<RatPoly> {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        match self {
            Family::TwistedCubic => Ok(RatPoly::from_integers(&[-7, 9])),
            Family::RuledCubic => Ok(RatPoly::from_coeffs(vec![q(2, 1), q(-5, 2), q(9, 2)])),
            Family::Segre => Ok(RatPoly::from_coeffs(vec![
                q(2, 1),
                q(3, 2),
                q(1, 1),
                q(3, 2),
            ])),
            Family::EllipticQuartic => Ok(RatPoly::from_integers(&[-16, 12])),
            Family::Linear { .. } | Family::PlaneCurve { .. } => {
                let pts = self.fixed_points()?;
                pts[0].ideal.hilbert_polynomial()
            }
        }
    }

    /// The full [`FamilySpec`].
    pub fn spec(&self) -> Result<FamilySpec> {
        self.validate()?;
        let n = self.ambient() as u64;
        let d = self.d_min() as u64;
        Ok(FamilySpec {
            family: *self,
            dim_w: self.dim_w(),
            ambient: self.ambient(),
            d_min: self.d_min(),
            hilb: self.hilbert_polynomial()?,
            default_weights: self.default_weights(),
            degree_bound_safe: self.degree_bound_safe(),
            degree_bound_conjectural: self.degree_bound_conjectural(),
            n_d_min: binomial(d + n, n) - 1,
        })
    }

    /// Every torus-fixed point of the family's parameter space.
    pub fn fixed_points(&self) -> Result<Vec<FixedPoint>> {
        self.validate()?;
        match *self {
            Family::Linear { k, n } => gen_linear(k, n),
            Family::PlaneCurve { m } => gen_plane_curves(m),
            Family::TwistedCubic => gen_detnet(3),
            Family::RuledCubic => gen_detnet(4),
            Family::Segre => gen_detnet(5),
            Family::EllipticQuartic => gen_elliptic_quartics(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())?;
        for (name, v) in self.params() {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn x(n: usize, i: usize) -> LaurentMonomial {
    LaurentMonomial::var(n, i)
}

fn mono(n: usize, factors: &[usize]) -> LaurentMonomial {
    let mut e = vec![0; n + 1];
    for &i in factors {
        e[i] += 1;
    }
    LaurentMonomial::new(e)
}

fn s1(n: usize) -> VirtualRep {
    sym_power(n, 1).expect("degree one")
}

fn point(family: Family, kind: &str, ideal: MonomialIdeal, tangent: VirtualRep) -> FixedPoint {
    FixedPoint {
        family,
        kind: kind.to_string(),
        ideal,
        tangent,
        dim_w: family.dim_w(),
        n: family.ambient(),
    }
}

/// All permutations of `0..len` in lexicographic order.
pub fn permutations(len: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..len).collect();
    let mut out = vec![perm.clone()];
    loop {
        let Some(i) = (1..len).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..len)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("pivot");
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
}

/// Applies every variable permutation to the representatives and keeps one
/// point per distinct ideal. Two points with the same ideal but different
/// tangents signal inconsistent input.
pub fn permute_and_dedup(reps: &[FixedPoint]) -> Result<Vec<FixedPoint>> {
    let Some(first) = reps.first() else {
        return Ok(Vec::new());
    };
    let perms = permutations(first.n + 1);
    let mut seen: BTreeMap<MonomialIdeal, FixedPoint> = BTreeMap::new();
    for r in reps {
        r.check()?;
        for p in &perms {
            let q = r.permute(p);
            match seen.get(&q.ideal) {
                Some(prev) if prev.tangent != q.tangent => {
                    return Err(Error::Internal(format!(
                        "ideal {} carries two different tangents",
                        q.ideal
                    )));
                }
                Some(_) => {}
                None => {
                    seen.insert(q.ideal.clone(), q);
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Fixed points of the Grassmannian of `k`-planes in `P^n`: one per set of
/// `n - k` coordinates cutting out the plane.
pub fn gen_linear(k: usize, n: usize) -> Result<Vec<FixedPoint>> {
    let family = Family::Linear { k, n };
    family.validate()?;
    let s1 = s1(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n + 1)) {
        if mask.count_ones() as usize != n - k {
            continue;
        }
        let vars: Vec<usize> = (0..=n).filter(|i| mask & (1 << i) != 0).collect();
        let gens: Vec<LaurentMonomial> = vars.iter().map(|&i| x(n, i)).collect();
        let ideal = MonomialIdeal::new(n, gens.clone())?.square();
        let tangent = tgrass(&s1, &VirtualRep::from_monomials(n, &gens))?;
        let p = point(family, "1", ideal, tangent);
        p.check()?;
        out.push(p);
    }
    out.sort_by(|a, b| a.ideal.cmp(&b.ideal));
    Ok(out)
}

/// All degree-`m` monomials in `x_0..x_n` avoiding the listed variables.
fn monomials_avoiding(n: usize, m: usize, avoid: &[usize]) -> Vec<LaurentMonomial> {
    let mut out = Vec::new();
    crate::charalg::for_each_composition(n, m as u32, |e| {
        if avoid.iter().all(|&i| e[i] == 0) {
            out.push(LaurentMonomial::new(e.iter().map(|&a| a as i32).collect()));
        }
    });
    out
}

/// Fixed points of the family of plane curves of degree `m` in `P^3`: a
/// coordinate plane `x_i = 0` and a monomial curve `c = 0` inside it.
pub fn gen_plane_curves(m: usize) -> Result<Vec<FixedPoint>> {
    let family = Family::PlaneCurve { m };
    family.validate()?;
    let n = 3;
    let s1 = s1(n);
    let mut out = Vec::new();
    for i in 0..=n {
        let plane = VirtualRep::var(n, i);
        let t_plane = tgrass(&s1, &plane)?;
        let curves = monomials_avoiding(n, m, &[i]);
        let all_curves = VirtualRep::from_monomials(n, &curves);
        for c in &curves {
            let ideal = MonomialIdeal::new(n, [x(n, i), c.clone()])?.square();
            let tangent = &t_plane + &tgrass(&all_curves, &VirtualRep::from_monomial(c.clone()))?;
            let p = point(family, "1", ideal, tangent);
            p.check()?;
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.ideal.cmp(&b.ideal));
    Ok(out)
}

/// The five isomorphism types of torus-fixed determinantal nets of quadrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetNetType {
    /// `<x_i x_j, x_j x_k, x_k x_l>`.
    Chain,
    /// `<x_i x_j, x_j x_k, x_i x_k>`.
    Triangle,
    /// `<x_i x_j, x_k^2, x_i x_k>`.
    Mixed,
    /// `<x_i^2, x_i x_j, x_j^2>`, the squared line.
    DoubleLine,
    /// `<x_i^2, x_i x_j, x_i x_k>`, the plane with an embedded point.
    Embedded,
}

impl DetNetType {
    /// All five types in order.
    pub const ALL: [DetNetType; 5] = [
        DetNetType::Chain,
        DetNetType::Triangle,
        DetNetType::Mixed,
        DetNetType::DoubleLine,
        DetNetType::Embedded,
    ];

    /// Type number 1 to 5.
    pub fn id(&self) -> usize {
        match self {
            DetNetType::Chain => 1,
            DetNetType::Triangle => 2,
            DetNetType::Mixed => 3,
            DetNetType::DoubleLine => 4,
            DetNetType::Embedded => 5,
        }
    }

    /// The generator representation `E` and the syzygy representation `F`
    /// with placeholders `i, j, k, l = 0, 1, 2, 3`.
    pub fn patterns(&self, n: usize) -> (Vec<LaurentMonomial>, VirtualRep) {
        let (i, j, k, l) = (0, 1, 2, 3);
        let m = |f: &[usize]| mono(n, f);
        let (e, f) = match self {
            DetNetType::Chain => (
                vec![m(&[i, j]), m(&[j, k]), m(&[k, l])],
                vec![(m(&[i, j, k]), 1), (m(&[j, k, l]), 1)],
            ),
            DetNetType::Triangle => (
                vec![m(&[i, j]), m(&[j, k]), m(&[i, k])],
                vec![(m(&[i, j, k]), 2)],
            ),
            DetNetType::Mixed => (
                vec![m(&[i, j]), m(&[k, k]), m(&[i, k])],
                vec![(m(&[i, j, k]), 1), (m(&[i, k, k]), 1)],
            ),
            DetNetType::DoubleLine => (
                vec![m(&[i, i]), m(&[i, j]), m(&[j, j])],
                vec![(m(&[i, j, j]), 1), (m(&[i, i, j]), 1)],
            ),
            DetNetType::Embedded => (
                vec![m(&[i, i]), m(&[i, j]), m(&[i, k])],
                vec![(m(&[i, i, j]), 1), (m(&[i, i, k]), 1)],
            ),
        };
        let f = VirtualRep::from_terms(n, f).expect("same ambient");
        (e, f)
    }

    /// Tangent to the space of determinantal nets at the representative:
    /// `F^∨ ⊗ E ⊗ S(1) - E^∨ ⊗ E - F^∨ ⊗ F + 1`.
    pub fn tangent(&self, n: usize) -> VirtualRep {
        let (e, f) = self.patterns(n);
        let e = VirtualRep::from_monomials(n, &e);
        let hom = &(&f.dual() * &e) * &s1(n);
        let end_e = &e.dual() * &e;
        let end_f = &f.dual() * &f;
        &(&(&hom - &end_e) - &end_f) + &VirtualRep::one(n)
    }
}

fn embedded_subtype(c: &LaurentMonomial) -> &'static str {
    let e = c.exponents();
    match (e[1], e[2], e.len() > 3 && e[3] > 0) {
        (1, 1, true) => "5.1",
        (2, 1, false) | (1, 2, false) => "5.2",
        (2, 0, true) | (0, 2, true) => "5.3",
        (3, 0, false) | (0, 3, false) => "5.4",
        _ => "5",
    }
}

/// Fixed points of the blown-up space of determinantal nets of quadrics in
/// `P^n` for `n` in 3 (twisted cubics), 4 (ruled cubics) and 5 (Segre
/// threefolds).
pub fn gen_detnet(n: usize) -> Result<Vec<FixedPoint>> {
    let family = match n {
        3 => Family::TwistedCubic,
        4 => Family::RuledCubic,
        5 => Family::Segre,
        _ => {
            return Err(Error::InvalidParams(format!(
                "determinantal nets are supported for n in 3..=5, got {n}"
            )))
        }
    };
    let s1 = s1(n);
    let mut reps = Vec::new();
    for ty in DetNetType::ALL {
        let (e, _) = ty.patterns(n);
        let net = MonomialIdeal::new(n, e.clone())?;
        let t_x = ty.tangent(n);
        match ty {
            DetNetType::Chain | DetNetType::Triangle | DetNetType::Mixed => {
                reps.push(point(family, &ty.id().to_string(), net.square(), t_x));
            }
            DetNetType::DoubleLine => {
                let line = VirtualRep::from_monomials(n, &[x(n, 0), x(n, 1)]);
                let t_b = tgrass(&s1, &line)?;
                let quartic = MonomialIdeal::new(n, [x(n, 0), x(n, 1)])?.square().square();
                for b in blow_up(&t_x, &t_b)? {
                    let ideal = quartic.with_generator(b.new_generator)?;
                    reps.push(point(family, "4", ideal, b.tangent));
                }
            }
            DetNetType::Embedded => {
                let plane = VirtualRep::var(n, 0);
                let rest = &s1 - &plane;
                let line = VirtualRep::from_monomials(n, &[x(n, 1), x(n, 2)]);
                let t_b = &tgrass(&s1, &plane)? + &tgrass(&rest, &line)?;
                for b in blow_up(&t_x, &t_b)? {
                    if b.new_generator.degree() != 3 {
                        return Err(Error::Internal(format!(
                            "embedded-point generator {} is not a cubic",
                            b.new_generator
                        )));
                    }
                    let kind = if n == 3 {
                        embedded_subtype(&b.new_generator)
                    } else {
                        "5"
                    };
                    let ideal = net.with_generator(b.new_generator)?.square();
                    reps.push(point(family, kind, ideal, b.tangent));
                }
            }
        }
    }
    permute_and_dedup(&reps)
}

/// Fixed points of the blown-up space of pencils of quadrics in `P^3` whose
/// general member cuts out an elliptic quartic.
pub fn gen_elliptic_quartics() -> Result<Vec<FixedPoint>> {
    let family = Family::EllipticQuartic;
    let n = 3;
    let s1 = s1(n);
    let s2 = sym_power(n, 2)?;
    let m = |f: &[usize]| mono(n, f);
    let (i, j) = (0usize, 1usize);
    let mut reps = Vec::new();

    let simple = [
        ("1", [m(&[0, 0]), m(&[1, 1])]),
        ("2", [m(&[0, 0]), m(&[1, 2])]),
        ("3", [m(&[0, 1]), m(&[2, 3])]),
    ];
    for (kind, pencil) in &simple {
        let ideal = MonomialIdeal::new(n, pencil.clone())?.square();
        let tangent = tgrass(&s2, &VirtualRep::from_monomials(n, pencil))?;
        reps.push(point(family, kind, ideal, tangent));
    }

    let x_i = VirtualRep::var(n, i);
    let x_j = VirtualRep::var(n, j);
    let rest_i = &s1 - &x_i;
    let t_flag = &tgrass(&s1, &x_i)? + &tgrass(&rest_i, &x_j)?;

    for (base_kind, pencil) in [
        ("4", [m(&[0, 0]), m(&[0, 1])]),
        ("5", [m(&[0, 1]), m(&[0, 2])]),
    ] {
        let t_x = tgrass(&s2, &VirtualRep::from_monomials(n, &pencil))?;
        let plane = pencil[0].gcd(&pencil[1]);
        let line: Vec<LaurentMonomial> = pencil
            .iter()
            .map(|q| q.checked_div(&plane))
            .collect::<Result<_>>()?;
        let t_b = &tgrass(&s1, &VirtualRep::from_monomial(plane.clone()))?
            + &tgrass(&s1, &VirtualRep::from_monomials(n, &line))?;
        for b in blow_up(&t_x, &t_b)? {
            let c = b.new_generator.clone();
            let net = MonomialIdeal::new(n, [pencil[0].clone(), pencil[1].clone(), c.clone()])?;
            if base_kind == "5" {
                reps.push(point(family, "5", net.square(), b.tangent));
                continue;
            }
            let e = c.exponents();
            if e[i] > 0 {
                let q = c.checked_div(&x(n, i))?;
                if q.exponent(i) != 0 || q.exponent(j) != 0 {
                    return Err(Error::Internal(format!("unexpected cubic {c} over {net}")));
                }
                let others = monomials_avoiding(n, 2, &[i, j]);
                let t_c = &t_flag
                    + &tgrass(
                        &VirtualRep::from_monomials(n, &others),
                        &VirtualRep::from_monomial(q),
                    )?;
                for b2 in blow_up(&b.tangent, &t_c)? {
                    reps.push(point(
                        family,
                        "6",
                        net.with_generator(b2.new_generator)?.square(),
                        b2.tangent,
                    ));
                }
            } else if e[j] >= 2 {
                let tail: Vec<LaurentMonomial> =
                    (0..=n).filter(|&v| v != i).map(|v| m(&[j, j, v])).collect();
                let t_c = &t_flag
                    + &tgrass(
                        &VirtualRep::from_monomials(n, &tail),
                        &VirtualRep::from_monomial(c.clone()),
                    )?;
                for b3 in blow_up(&b.tangent, &t_c)? {
                    let ideal = net.square().with_generator(b3.new_generator)?;
                    reps.push(point(family, "7", ideal, b3.tangent));
                }
            } else if e[j] == 1 {
                reps.push(point(family, "4", net.square(), b.tangent));
            } else {
                return Err(Error::Internal(format!(
                    "unclassified cubic {c} over {net}"
                )));
            }
        }
    }
    permute_and_dedup(&reps)
}

/// The fiber of `E_d` at a fixed point: the degree-`d` monomials of its ideal.
pub fn fiber(f: &FixedPoint, d: i64) -> Result<Vec<LaurentMonomial>> {
    let d_min = f.family.d_min();
    if d < d_min {
        return Err(Error::BelowThreshold { d, d_min });
    }
    f.ideal.degree_slice(d)
}

/// Number of fixed points of each kind, in kind order.
pub fn kind_counts(points: &[FixedPoint]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for p in points {
        *out.entry(p.kind.clone()).or_insert(0) += 1;
    }
    out
}
