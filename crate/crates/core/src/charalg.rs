//! Torus characters and virtual representations over the coordinates
//! `x_0..x_n` of `P^n`.
//!
//! A character is a Laurent monomial, stored as its exponent vector. A
//! virtual representation is a finite formal sum of characters with nonzero
//! integer multiplicities. Arithmetic is exact and canonical: two
//! representations are equal exactly when their sorted term maps agree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A torus character `x_0^{a_0} ... x_n^{a_n}` with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    exps: Vec<i32>,
}

impl LaurentMonomial {
    /// Builds a character from its exponent vector. The ambient is
    /// `P^{exps.len() - 1}`.
    ///
    /// # Panics
    ///
    /// Panics if `exps` is empty.
    pub fn new(exps: Vec<i32>) -> Self {
        assert!(!exps.is_empty(), "a character needs at least one variable");
        LaurentMonomial { exps }
    }

    /// The trivial character `1` over `P^n`.
    pub fn one(n: usize) -> Self {
        LaurentMonomial {
            exps: vec![0; n + 1],
        }
    }

    /// The coordinate character `x_i` over `P^n`.
    ///
    /// # Panics
    ///
    /// Panics if `i > n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i <= n, "variable x_{i} outside P^{n}");
        let mut exps = vec![0; n + 1];
        exps[i] = 1;
        LaurentMonomial { exps }
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    /// The exponent of `x_i`.
    pub fn exponent(&self, i: usize) -> i32 {
        self.exps[i]
    }

    /// `n` such that this character lives over `P^n`.
    pub fn ambient(&self) -> usize {
        self.exps.len() - 1
    }

    /// Sum of the exponents.
    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    /// Whether this is the trivial character.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Whether every exponent is nonnegative, i.e. this is an honest monomial.
    pub fn is_monomial(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    /// Whether `self` divides `other` as monomials (componentwise `<=`).
    pub fn divides(&self, other: &LaurentMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product of characters, or an error on ambient mismatch.
    pub fn checked_mul(&self, other: &LaurentMonomial) -> Result<LaurentMonomial> {
        same_ambient(self.ambient(), other.ambient())?;
        Ok(LaurentMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Quotient of characters, or an error on ambient mismatch.
    pub fn checked_div(&self, other: &LaurentMonomial) -> Result<LaurentMonomial> {
        same_ambient(self.ambient(), other.ambient())?;
        Ok(LaurentMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// The inverse character.
    pub fn inverse(&self) -> LaurentMonomial {
        LaurentMonomial {
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> LaurentMonomial {
        LaurentMonomial {
            exps: self.exps.iter().map(|e| e * k as i32).collect(),
        }
    }

    /// Componentwise gcd of two honest monomials (minimum of exponents).
    pub fn gcd(&self, other: &LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Componentwise lcm of two honest monomials (maximum of exponents).
    pub fn lcm(&self, other: &LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..=n`.
    pub fn permute(&self, perm: &[usize]) -> LaurentMonomial {
        assert_eq!(perm.len(), self.exps.len(), "permutation length");
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        LaurentMonomial { exps }
    }

    /// Graded order key: total degree first, then reverse lexicographic
    /// comparison of exponents so that `x_0^2 < x_0 x_1 < x_1^2` reads
    /// naturally.
    pub fn grlex_key(&self) -> (i64, Vec<i32>) {
        (self.degree(), self.exps.iter().map(|e| -e).collect())
    }

    /// Parses a single character such as `x0^2*x1/x2`, `x_3^2/(x_0*x_1)` or
    /// `1` over `P^n`.
    pub fn parse(n: usize, s: &str) -> Result<LaurentMonomial> {
        let rep = VirtualRep::parse(n, s)?;
        let mut it = rep.iter();
        match (it.next(), it.next()) {
            (Some((m, 1)), None) => Ok(m.clone()),
            _ => Err(Error::Parse(format!("{s:?} is not a single character"))),
        }
    }
}

fn same_ambient(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { left, right })
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[(usize, i32)]) -> fmt::Result {
    for (idx, (i, e)) in factors.iter().enumerate() {
        if idx > 0 {
            write!(f, "*")?;
        }
        if *e == 1 {
            write!(f, "x{i}")?;
        } else {
            write!(f, "x{i}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<(usize, i32)> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect();
        let den: Vec<(usize, i32)> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < 0)
            .map(|(i, &e)| (i, -e))
            .collect();
        if num.is_empty() {
            write!(f, "1")?;
        } else {
            write_factors(f, &num)?;
        }
        if !den.is_empty() {
            write!(f, "/")?;
            let wrap = den.len() > 1 || den[0].1 > 1;
            if wrap {
                write!(f, "(")?;
            }
            write_factors(f, &den)?;
            if wrap {
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

/// A virtual torus representation: characters with nonzero integer
/// multiplicities over a fixed ambient `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    n: usize,
    terms: BTreeMap<LaurentMonomial, i64>,
}

impl VirtualRep {
    /// The zero representation over `P^n`.
    pub fn zero(n: usize) -> Self {
        VirtualRep {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The trivial one-dimensional representation over `P^n`.
    pub fn one(n: usize) -> Self {
        Self::from_monomial(LaurentMonomial::one(n))
    }

    /// The coordinate line `x_i` over `P^n`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::from_monomial(LaurentMonomial::var(n, i))
    }

    /// A single character with multiplicity one.
    pub fn from_monomial(m: LaurentMonomial) -> Self {
        let n = m.ambient();
        let mut terms = BTreeMap::new();
        terms.insert(m, 1);
        VirtualRep { n, terms }
    }

    /// Sums a list of characters, each with multiplicity one.
    ///
    /// # Panics
    ///
    /// Panics if a character does not live over `P^n`.
    pub fn from_monomials<'a>(n: usize, ms: impl IntoIterator<Item = &'a LaurentMonomial>) -> Self {
        let mut rep = VirtualRep::zero(n);
        for m in ms {
            assert_eq!(m.ambient(), n, "character ambient");
            rep.add_term(m.clone(), 1);
        }
        rep
    }

    /// Builds a representation from `(character, multiplicity)` pairs,
    /// merging repeats and dropping zeros.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (LaurentMonomial, i64)>,
    ) -> Result<Self> {
        let mut rep = VirtualRep::zero(n);
        for (m, c) in terms {
            same_ambient(n, m.ambient())?;
            rep.add_term(m, c);
        }
        Ok(rep)
    }

    fn add_term(&mut self, m: LaurentMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// `n` of the ambient `P^n`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Sum of multiplicities, which may be negative.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Number of distinct characters.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no characters, the same as [`VirtualRep::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the zero representation.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplicity of a character (zero when absent).
    pub fn multiplicity(&self, m: &LaurentMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Iterates over `(character, multiplicity)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&LaurentMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// The distinct characters in canonical order.
    pub fn characters(&self) -> impl Iterator<Item = &LaurentMonomial> {
        self.terms.keys()
    }

    /// Whether every multiplicity is positive.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Whether the trivial character occurs.
    pub fn contains_trivial(&self) -> bool {
        self.terms.keys().any(|m| m.is_one())
    }

    /// Exact sum, or an error on ambient mismatch.
    pub fn checked_add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        same_ambient(self.n, other.n)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Exact difference, or an error on ambient mismatch.
    pub fn checked_sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        same_ambient(self.n, other.n)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Tensor product: multiplicities multiply, characters multiply.
    pub fn tensor(&self, other: &VirtualRep) -> Result<VirtualRep> {
        same_ambient(self.n, other.n)?;
        let mut out = VirtualRep::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.checked_mul(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Dual representation: every character inverted.
    pub fn dual(&self) -> VirtualRep {
        VirtualRep {
            n: self.n,
            terms: self.terms.iter().map(|(m, &c)| (m.inverse(), c)).collect(),
        }
    }

    /// Multiplies every multiplicity by `k`.
    pub fn scale(&self, k: i64) -> VirtualRep {
        if k == 0 {
            return VirtualRep::zero(self.n);
        }
        VirtualRep {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), c * k))
                .collect(),
        }
    }

    /// Restriction to the characters of total degree `d`.
    ///
    /// Fails if some character has a negative exponent.
    pub fn degree_part(&self, d: i64) -> Result<VirtualRep> {
        if let Some(bad) = self.terms.keys().find(|m| !m.is_monomial()) {
            return Err(Error::NegativeExponent(bad.to_string()));
        }
        Ok(VirtualRep {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        })
    }

    /// Flattens an effective representation into a list in which each
    /// character appears as many times as its multiplicity.
    pub fn expand(&self) -> Result<Vec<LaurentMonomial>> {
        if let Some((m, c)) = self.terms.iter().find(|(_, &c)| c < 0) {
            return Err(Error::NotEffective(format!("{c}*{m}")));
        }
        let mut out = Vec::with_capacity(self.dimension().max(0) as usize);
        for (m, &c) in &self.terms {
            for _ in 0..c {
                out.push(m.clone());
            }
        }
        Ok(out)
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> VirtualRep {
        VirtualRep {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.permute(perm), c))
                .collect(),
        }
    }

    /// Parses a sum such as `2*x0*x1 + x3^2/(x0*x1) - x2/x3` over `P^n`.
    ///
    /// Variables may be written `x3` or `x_3`. Each term is an optional
    /// integer coefficient followed by `*`-separated factors, optionally
    /// divided by a factor or a parenthesised product of factors. The empty
    /// string and `0` denote the zero representation.
    pub fn parse(n: usize, s: &str) -> Result<VirtualRep> {
        let mut rep = VirtualRep::zero(n);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(rep);
        }
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut current = String::new();
        let mut depth = 0usize;
        for ch in compact.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.is_empty() {
                        terms.push((sign, std::mem::take(&mut current)));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => current.push(ch),
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced parenthesis in {s:?}")));
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        terms.push((sign, current));
        for (sign, term) in terms {
            let (coeff, m) = parse_term(n, &term)?;
            rep.add_term(m, sign * coeff);
        }
        Ok(rep)
    }
}

fn parse_term(n: usize, term: &str) -> Result<(i64, LaurentMonomial)> {
    let (num, den) = match term.find('/') {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let mut coeff = 1i64;
    let mut exps = vec![0i32; n + 1];
    for factor in num.split('*') {
        if factor.chars().all(|c| c.is_ascii_digit()) {
            let c: i64 = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            coeff *= c;
        } else {
            let (i, e) = parse_factor(n, factor)?;
            exps[i] += e;
        }
    }
    if let Some(den) = den {
        let inner = den
            .strip_prefix('(')
            .and_then(|d| d.strip_suffix(')'))
            .unwrap_or(den);
        for factor in inner.split('*') {
            let (i, e) = parse_factor(n, factor)?;
            exps[i] -= e;
        }
    }
    Ok((coeff, LaurentMonomial::new(exps)))
}

fn parse_factor(n: usize, factor: &str) -> Result<(usize, i32)> {
    let bad = || Error::Parse(format!("bad factor {factor:?}"));
    let body = factor.strip_prefix('x').ok_or_else(bad)?;
    let body = body.strip_prefix('_').unwrap_or(body);
    let (idx, exp) = match body.find('^') {
        Some(pos) => (&body[..pos], &body[pos + 1..]),
        None => (body, "1"),
    };
    let i: usize = idx.parse().map_err(|_| bad())?;
    let e: i32 = exp.parse().map_err(|_| bad())?;
    if i > n {
        return Err(Error::Parse(format!("variable x{i} outside P^{n}")));
    }
    Ok((i, e))
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl Add for &VirtualRep {
    type Output = VirtualRep;

    /// # Panics
    ///
    /// Panics on ambient mismatch; use [`VirtualRep::checked_add`] otherwise.
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        self.checked_add(rhs).expect("VirtualRep addition")
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;

    /// # Panics
    ///
    /// Panics on ambient mismatch; use [`VirtualRep::checked_sub`] otherwise.
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self.checked_sub(rhs).expect("VirtualRep subtraction")
    }
}

impl Mul for &VirtualRep {
    type Output = VirtualRep;

    /// # Panics
    ///
    /// Panics on ambient mismatch; use [`VirtualRep::tensor`] otherwise.
    fn mul(self, rhs: &VirtualRep) -> VirtualRep {
        self.tensor(rhs).expect("VirtualRep tensor product")
    }
}

impl Neg for &VirtualRep {
    type Output = VirtualRep;

    fn neg(self) -> VirtualRep {
        self.scale(-1)
    }
}

/// Calls `f` on every exponent vector of total degree `d` in `n + 1`
/// variables, in lexicographically decreasing order of `x_0`.
pub fn for_each_composition(n: usize, d: u32, mut f: impl FnMut(&[u32])) {
    let mut exps = vec![0u32; n + 1];
    compositions_rec(&mut exps, 0, d, &mut f);
}

fn compositions_rec(exps: &mut [u32], i: usize, rem: u32, f: &mut impl FnMut(&[u32])) {
    if i + 1 == exps.len() {
        exps[i] = rem;
        f(exps);
        exps[i] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        exps[i] = e;
        compositions_rec(exps, i + 1, rem - e, f);
    }
    exps[i] = 0;
}

/// The `d`-th symmetric power of the standard representation: every degree-`d`
/// monomial in `x_0..x_n` with multiplicity one.
pub fn sym_power(n: usize, d: i64) -> Result<VirtualRep> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    let mut rep = VirtualRep::zero(n);
    for_each_composition(n, d as u32, |e| {
        rep.add_term(
            LaurentMonomial::new(e.iter().map(|&a| a as i32).collect()),
            1,
        );
    });
    Ok(rep)
}
