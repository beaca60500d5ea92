//! Closed-form total Chern classes expanded into weighted-graded components.
//!
//! Everything here is truncated by weighted degree, not by series order. The
//! expansions are written directly as finite sums of binomial and exponential
//! terms, independently of the recurrences used for Φ in [`crate::series`].

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, GroebnerBasis};
use crate::relations::relations_by_recursion;
use crate::ring::{frac, rat, Monomial, Polynomial, Rational};
use crate::series::phi_series;

/// Coefficient `x` in the factor exp(x·γ/(1−β)) of the tangent class.
///
/// The top component c_{3g−3} is the Euler class and has to vanish
/// (χ = 0 for g ≥ 2). The expansion with −8 leaves c₃ ≡ −4γ in genus 2 and
/// breaks vanishing in every degree above 2g−2; −4 satisfies all of them.
pub const TANGENT_GAMMA_COEFFICIENT: i64 = -4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    QuotientBundle,
    TangentModuli,
}

/// Total class Σ_w c_w, kept as its weighted-homogeneous components 0..=D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    components: Vec<Polynomial>,
    pub label: ClassLabel,
}

impl GradedClass {
    fn from_total(total: &Polynomial, max_degree: u32, label: ClassLabel) -> Self {
        GradedClass {
            components: (0..=max_degree)
                .map(|w| total.homogeneous_component(w))
                .collect(),
            label,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.components.len() as u32 - 1
    }

    /// c_w, or zero above the truncation degree.
    pub fn component(&self, w: u32) -> Polynomial {
        self.components.get(w as usize).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn total(&self) -> Polynomial {
        self.components
            .iter()
            .fold(Polynomial::zero(), |acc, c| acc + c.clone())
    }
}

fn big_binomial(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Σ_{k≥0} x^k / k!, with x free of constant term, through weighted degree `d`.
fn exp_graded(x: &Polynomial, d: u32) -> Polynomial {
    debug_assert!(x.coeff(&Monomial::ONE).is_zero());
    let mut out = Polynomial::one();
    let mut power = Polynomial::one();
    let mut factorial = Rational::one();
    for k in 1..=d {
        power = power.mul_truncated(x, d);
        if power.is_zero() {
            break;
        }
        factorial *= rat(k as i64);
        out += &power.scale(&factorial.recip());
    }
    out
}

/// (1 − β)^e for rational e as Σ_k C(e, k)(−β)^k, through weighted degree `d`.
fn one_minus_beta_pow(e: &Rational, d: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut coeff = Rational::one();
    for k in 0..=(d / 2) {
        if k > 0 {
            // C(e,k) = C(e,k−1)·(e−k+1)/k, times −1 for (−β)
            coeff = -coeff * (e - rat(k as i64 - 1)) / rat(k as i64);
        }
        if coeff.is_zero() {
            break;
        }
        out.add_term(Monomial::new(0, k, 0), coeff.clone());
    }
    out
}

/// c(φ*Q) = (1−β)^{−1/2} exp[α + α·Σ_{m≥1} β^m/(2m+1) + 2γ·Σ_{m≥1} β^{m−1}/(2m+1)],
/// the 2γ/β factor already split so that β never appears in a denominator.
pub fn chern_total_q(d: u32) -> GradedClass {
    let mut arg = Polynomial::alpha();
    let mut m = 1;
    while 2 * m < d {
        let w = frac(1, 2 * m as i64 + 1);
        arg.add_term(Monomial::new(1, m, 0), w.clone());
        arg.add_term(Monomial::new(0, m - 1, 1), rat(2) * w);
        m += 1;
    }
    let total = one_minus_beta_pow(&frac(-1, 2), d)
        .mul_truncated(&exp_graded(&arg.truncate_weighted(d), d), d);
    GradedClass::from_total(&total, d, ClassLabel::QuotientBundle)
}

/// c(𝓝_g) = (1−β)^g · exp(x·γ/(1−β)) · c(φ*Q)², with x = [`TANGENT_GAMMA_COEFFICIENT`].
pub fn chern_total_ng(g: u32, d: u32) -> Result<GradedClass> {
    chern_total_ng_with(g, d, TANGENT_GAMMA_COEFFICIENT)
}

/// Tangent class with an explicit coefficient `x` in exp(x·γ/(1−β)).
///
/// The exponential is expanded as Σ_k (xγ)^k/k! · (1−β)^{−k}, and each
/// (1−β)^{−k} = Σ_j C(k+j−1, j) β^j; only k ≤ D/3 contribute.
pub fn chern_total_ng_with(g: u32, d: u32, x: i64) -> Result<GradedClass> {
    if g < 2 {
        return Err(Error::InvalidGenus { genus: g, min: 2 });
    }
    let mut genus_factor = Polynomial::zero();
    for j in 0..=(g.min(d / 2)) {
        let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
        genus_factor.add_term(
            Monomial::new(0, j, 0),
            sign * big_binomial(g as u64, j as u64),
        );
    }

    let mut gamma_factor = Polynomial::one();
    let mut k_factorial = Rational::one();
    for k in 1..=(d / 3) {
        k_factorial *= rat(k as i64);
        let lead = Rational::from_integer(BigInt::from(x).pow(k)) / &k_factorial;
        for j in 0..=((d - 3 * k) / 2) {
            let c = &lead * big_binomial((k + j - 1) as u64, j as u64);
            gamma_factor.add_term(Monomial::new(0, j, k), c);
        }
    }

    let q = chern_total_q(d).total();
    let total = genus_factor
        .mul_truncated(&gamma_factor, d)
        .mul_truncated(&q.mul_truncated(&q, d), d);
    Ok(GradedClass::from_total(
        &total,
        d,
        ClassLabel::TangentModuli,
    ))
}

/// c_r(φ*Q) equals the t^r coefficient of Φ for every r ≤ g+2.
pub fn chern_equals_phi(g: u32) -> CheckReport {
    let n = g + 2;
    let chern = chern_total_q(n);
    let phi = phi_series(n as usize);
    let mut report = CheckReport::pass();
    for r in 0..=n {
        let lhs = chern.component(r);
        let rhs = phi.coeff(r as usize).expect("within order");
        report.require(lhs == *rhs, || {
            format!("c_{r}(phi*Q) = {lhs} but phi_{r} = {rhs}")
        });
    }
    report
}

/// c_g, c_{g+1}, c_{g+2} of φ*Q lie in the relation ideal and generate it.
pub fn chern_relations_check(g: u32, gb: &GroebnerBasis) -> Result<CheckReport> {
    let tr = relations_by_recursion(g)?;
    let chern = chern_total_q(g + 2);
    let classes: Vec<Polynomial> = (g..=g + 2).map(|r| chern.component(r)).collect();
    let mut report = CheckReport::pass();
    for (r, c) in (g..).zip(&classes) {
        let nf = gb.normal_form(c);
        report.require(nf.is_zero(), || {
            format!("c_{r}(phi*Q) has normal form {nf}")
        });
    }
    report.require(ideal_equal(&classes, &tr.to_vec()), || {
        "(c_g, c_g+1, c_g+2) differs from (f1, f2, f3) as an ideal".to_string()
    });
    Ok(report)
}

/// Every component of c(𝓝_g) in weighted degrees 2g−1..=3g−3 reduces to zero.
pub fn chern_ng_vanishing(g: u32, gb: &GroebnerBasis) -> Result<CheckReport> {
    let top = 3 * g - 3;
    let class = chern_total_ng(g, top)?;
    let mut report = CheckReport::pass();
    for w in (2 * g - 1)..=top {
        let nf = gb.normal_form(&class.component(w));
        report.require(nf.is_zero(), || {
            format!("c_{w}(N_{g}) has normal form {nf}")
        });
    }
    Ok(report)
}
