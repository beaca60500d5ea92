//! Exact scalars, monomials in α, β, γ and sparse polynomials over ℚ.
//!
//! Monomials are ordered by graded reverse lexicographic order with variable
//! precedence α > β > γ, graded by *standard* degree (each variable counts 1).
//! The cohomological weights 1, 2, 3 of α, β, γ are tracked separately as the
//! weighted degree and are used only for homogeneity and truncation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exponent triple for αᵃβᵇγᶜ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };
    pub const ALPHA: Monomial = Monomial { a: 1, b: 0, c: 0 };
    pub const BETA: Monomial = Monomial { a: 0, b: 1, c: 0 };
    pub const GAMMA: Monomial = Monomial { a: 0, b: 0, c: 1 };

    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    /// Standard degree a + b + c.
    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// Weighted degree a + 2b + 3c.
    pub fn weighted_degree(&self) -> u32 {
        self.a + 2 * self.b + 3 * self.c
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.a <= other.a && self.b <= other.b && self.c <= other.c
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            a: self.a - other.a,
            b: self.b - other.b,
            c: self.c - other.c,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            a: self.a.max(other.a),
            b: self.b.max(other.b),
            c: self.c.max(other.c),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.a.min(other.a) == 0 && self.b.min(other.b) == 0 && self.c.min(other.c) == 0
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            a: self.a * e,
            b: self.b * e,
            c: self.c * e,
        }
    }

    /// Every monomial of standard degree exactly `d`, descending in the monomial order.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for c in 0..=d {
            for b in 0..=(d - c) {
                out.push(Monomial::new(d - b - c, b, c));
            }
        }
        out.sort_by(|x, y| y.cmp(x));
        out
    }

    /// Every monomial of weighted degree exactly `w`.
    pub fn of_weighted_degree(w: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for c in 0..=(w / 3) {
            for b in 0..=((w - 3 * c) / 2) {
                out.push(Monomial::new(w - 3 * c - 2 * b, b, c));
            }
        }
        out.sort_by(|x, y| y.cmp(x));
        out
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }
}

/// Graded reverse lexicographic comparison (standard degree, then α > β > γ).
///
/// On equal degree the exponents are scanned from γ back to α; at the first
/// difference the monomial with the *smaller* exponent is the greater one.
pub fn mono_cmp(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.degree()
        .cmp(&m2.degree())
        .then_with(|| m2.c.cmp(&m1.c))
        .then_with(|| m2.b.cmp(&m1.b))
        .then_with(|| m2.a.cmp(&m1.a))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        mono_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, e) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Result of asking for the weighted degree of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u32),
    Mixed,
}

/// Sparse polynomial in ℚ[α, β, γ]. No stored coefficient is ever zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn alpha() -> Self {
        Polynomial::monomial(Monomial::ALPHA)
    }

    pub fn beta() -> Self {
        Polynomial::monomial(Monomial::BETA)
    }

    pub fn gamma() -> Self {
        Polynomial::monomial(Monomial::GAMMA)
    }

    /// Builds a polynomial from (coefficient, monomial) pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Rational, Monomial)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · m · other`.
    pub fn add_scaled_shifted(&mut self, c: &Rational, m: Monomial, other: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(*om * m, c * oc);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k * m, v.clone()))
                .collect(),
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Common weighted degree of all terms, or [`WeightedDegree::Mixed`].
    pub fn weighted_degree(&self) -> Result<WeightedDegree> {
        let mut degrees = self.terms.keys().map(Monomial::weighted_degree);
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::Mixed)
        }
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        matches!(self.weighted_degree(), Ok(WeightedDegree::Homogeneous(_)))
    }

    /// Sum of the terms of weighted degree exactly `w`.
    pub fn homogeneous_component(&self, w: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() == w)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Drops every term of weighted degree above `w`.
    pub fn truncate_weighted(&self, w: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() <= w)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Product with every term of weighted degree above `w` discarded.
    pub fn mul_truncated(&self, other: &Polynomial, w: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            let w1 = m1.weighted_degree();
            if w1 > w {
                continue;
            }
            for (m2, c2) in &other.terms {
                if w1 + m2.weighted_degree() <= w {
                    out.add_term(*m1 * *m2, c1 * c2);
                }
            }
        }
        out
    }

    /// Largest weighted degree among the terms; `None` for zero.
    pub fn max_weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weighted_degree).max()
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_scaled_shifted(c, *m, rhs);
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms descending, e.g. `a^2 + b`, `-1/2*a^3*c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
