//! Truncated power series in `t` with polynomial coefficients, and the
//! generating function Φ(t) of the relation ideals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{frac, rat, Monomial, Polynomial, Rational};

/// Σ_{k=0}^{N} p_k t^k, known exactly through t^N (the truncation order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Polynomial>,
}

impl PowerSeries {
    /// Series from explicit coefficients, padded with zeros or cut to `order`.
    pub fn new(mut coeffs: Vec<Polynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::new(vec![Polynomial::one()], order)
    }

    /// `p · t^k`, truncated at `order`.
    pub fn term(p: Polynomial, k: usize, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k. Asking beyond the truncation order is an error.
    pub fn coeff(&self, k: usize) -> Result<&Polynomial> {
        self.coeffs.get(k).ok_or(Error::InsufficientPrecision {
            requested: k,
            available: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    /// d/dt, known through t^{N−1}.
    pub fn derivative(&self) -> Result<PowerSeries> {
        if self.order() == 0 {
            return Err(Error::InsufficientPrecision {
                requested: 1,
                available: 0,
            });
        }
        let coeffs = (1..=self.order())
            .map(|k| self.coeffs[k].scale(&rat(k as i64)))
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &'a PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &'a PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &'a PowerSeries) -> PowerSeries {
        series_mul(self, rhs)
    }
}

/// Cauchy product truncated at the smaller of the two orders.
pub fn series_mul(s1: &PowerSeries, s2: &PowerSeries) -> PowerSeries {
    let n = s1.order().min(s2.order());
    let mut coeffs = vec![Polynomial::zero(); n + 1];
    for (i, p) in s1.coeffs.iter().enumerate().take(n + 1) {
        if p.is_zero() {
            continue;
        }
        for (j, q) in s2.coeffs.iter().enumerate().take(n + 1 - i) {
            if !q.is_zero() {
                coeffs[i + j] += &(p * q);
            }
        }
    }
    PowerSeries { coeffs }
}

/// exp(s) for a series with zero constant term.
///
/// Uses E' = s'·E, i.e. k·e_k = Σ_{j=1}^{k} j·s_j·e_{k−j}.
pub fn series_exp(s: &PowerSeries) -> Result<PowerSeries> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = s.order();
    let mut e = vec![Polynomial::one()];
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for j in 1..=k {
            if s.coeffs[j].is_zero() || e[k - j].is_zero() {
                continue;
            }
            acc += &(&s.coeffs[j] * &e[k - j]).scale(&rat(j as i64));
        }
        e.push(acc.scale(&frac(1, k as i64)));
    }
    Ok(PowerSeries { coeffs: e })
}

/// (1 + u)^e for a series `u` with zero constant term and rational exponent `e`.
///
/// Uses (1+u)·y' = e·u'·y, which gives
/// k·y_k = e·Σ_{j=1}^{k} j·u_j·y_{k−j} − Σ_{j=1}^{k−1} j·y_j·u_{k−j}.
pub fn series_binomial(u: &PowerSeries, e: &Rational) -> Result<PowerSeries> {
    if !u.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = u.order();
    let mut y = vec![Polynomial::one()];
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for j in 1..=k {
            if !u.coeffs[j].is_zero() && !y[k - j].is_zero() {
                acc += &(&u.coeffs[j] * &y[k - j]).scale(&(e * rat(j as i64)));
            }
        }
        for j in 1..k {
            if !u.coeffs[k - j].is_zero() && !y[j].is_zero() {
                acc -= &(&y[j] * &u.coeffs[k - j]).scale(&rat(j as i64));
            }
        }
        y.push(acc.scale(&frac(1, k as i64)));
    }
    Ok(PowerSeries { coeffs: y })
}

/// Φ(t) = (1 − βt²)^{−1/2} · exp[αt + α·S(t) + 2γ·S̃(t)] through t^N, where
/// S(t) = Σ_{m≥1} β^m t^{2m+1}/(2m+1) and S̃(t) = Σ_{m≥1} β^{m−1} t^{2m+1}/(2m+1).
///
/// Splitting (α + 2γ/β)·tΣβ^m t^{2m}/(2m+1) as α·S + 2γ·S̃ keeps every
/// coefficient a genuine polynomial.
pub fn phi_series(n: usize) -> PowerSeries {
    let mut exponent = PowerSeries::term(Polynomial::alpha(), 1, n);
    let two_gamma = Polynomial::gamma().scale(&rat(2));
    let mut m = 1u32;
    while 2 * (m as usize) < n {
        let k = 2 * m as usize + 1;
        let weight = frac(1, k as i64);
        let s = Polynomial::term(weight.clone(), Monomial::new(1, m, 0));
        let s_tilde = two_gamma
            .mul_monomial(Monomial::new(0, m - 1, 0))
            .scale(&weight);
        exponent = &exponent + &PowerSeries::term(&s + &s_tilde, k, n);
        m += 1;
    }
    let minus_beta_t2 = PowerSeries::term(-Polynomial::beta(), 2, n);
    let prefactor = series_binomial(&minus_beta_t2, &frac(-1, 2)).expect("zero constant term");
    let expo = series_exp(&exponent).expect("zero constant term");
    series_mul(&prefactor, &expo)
}

/// Φ^{(r)}: r! times the coefficient of t^r.
pub fn taylor_derivative(s: &PowerSeries, r: usize) -> Result<Polynomial> {
    let c = s.coeff(r)?;
    let factorial: Rational = (1..=r as i64)
        .map(rat)
        .fold(Rational::one(), |acc, x| acc * x);
    Ok(c.scale(&factorial))
}

/// (1 − βt²)·s′ − (α + βt + 2γt²)·s, through t^{N−1}.
///
/// Vanishes identically for s = Φ.
pub fn functional_equation_residual(s: &PowerSeries) -> Result<PowerSeries> {
    let d = s.derivative()?;
    let n = d.order();
    let one_minus_bt2 = &PowerSeries::one(n) - &PowerSeries::term(Polynomial::beta(), 2, n);
    let mut rhs_factor = PowerSeries::term(Polynomial::alpha(), 0, n);
    rhs_factor = &rhs_factor + &PowerSeries::term(Polynomial::beta(), 1, n);
    rhs_factor = &rhs_factor + &PowerSeries::term(Polynomial::gamma().scale(&rat(2)), 2, n);
    let lhs = series_mul(&one_minus_bt2, &d);
    let rhs = series_mul(&rhs_factor, &s.truncate(n));
    Ok(&lhs - &rhs)
}

/// Checks that coefficient k is weighted-homogeneous of weighted degree k (or zero).
pub fn is_t_homogeneous(s: &PowerSeries) -> bool {
    s.coeffs
        .iter()
        .enumerate()
        .all(|(k, p)| p.monomials().all(|m| m.weighted_degree() as usize == k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Rational;
    use proptest::prelude::*;

    fn poly(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }

    fn series(cs: &[&str], order: usize) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|c| poly(c)).collect(), order)
    }

    #[test]
    fn mul_examples() {
        let lhs = series(&["1", "a"], 4);
        let rhs = series(&["1", "-a"], 4);
        assert_eq!(lhs.mul(&rhs), series(&["1", "0", "-a^2"], 4));
        let s = series(&["1", "a", "b", "c"], 3);
        assert_eq!(&s * &PowerSeries::one(5), s);
        let prod = &series(&["1", "0", "1/2*b"], 2) * &series(&["1", "a", "1/2*a^2"], 2);
        assert_eq!(prod, series(&["1", "a", "1/2*a^2 + 1/2*b"], 2));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(
            series_exp(&PowerSeries::zero(6)).unwrap(),
            PowerSeries::one(6)
        );
        let e = series_exp(&series(&["0", "a"], 4)).unwrap();
        assert_eq!(e, series(&["1", "a", "1/2*a^2", "1/6*a^3", "1/24*a^4"], 4));
        let e = series_exp(&series(&["0", "a", "0", "1/3*a*b + 2/3*c"], 3)).unwrap();
        assert_eq!(e.coeff(3).unwrap(), &poly("1/6*a^3 + 1/3*a*b + 2/3*c"));
        assert_eq!(
            series_exp(&PowerSeries::one(3)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn binomial_examples() {
        let u = series(&["0", "0", "-b"], 4);
        let y = series_binomial(&u, &frac(-1, 2)).unwrap();
        assert_eq!(y, series(&["1", "0", "1/2*b", "0", "3/8*b^2"], 4));
        let u = series(&["0", "a", "c", "b"], 3);
        assert_eq!(series_binomial(&u, &rat(0)).unwrap(), PowerSeries::one(3));
        assert_eq!(
            series_binomial(&u, &rat(1)).unwrap(),
            &PowerSeries::one(3) + &u
        );
        assert_eq!(
            series_binomial(&PowerSeries::one(2), &rat(2)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn phi_low_coefficients() {
        let phi = phi_series(6);
        assert_eq!(phi.coeff(0).unwrap(), &Polynomial::one());
        assert_eq!(phi.coeff(1).unwrap(), &Polynomial::alpha());
        assert_eq!(phi.coeff(2).unwrap(), &poly("1/2*a^2 + 1/2*b"));
        assert_eq!(phi.coeff(3).unwrap(), &poly("1/6*a^3 + 5/6*a*b + 2/3*c"));
        assert!(is_t_homogeneous(&phi));
    }

    #[test]
    fn taylor_derivative_examples() {
        let phi = phi_series(5);
        assert_eq!(taylor_derivative(&phi, 0).unwrap(), Polynomial::one());
        assert_eq!(taylor_derivative(&phi, 1).unwrap(), Polynomial::alpha());
        assert_eq!(
            taylor_derivative(&phi, 3).unwrap(),
            poly("a^3 + 5*a*b + 4*c")
        );
        assert_eq!(
            taylor_derivative(&phi, 6),
            Err(Error::InsufficientPrecision {
                requested: 6,
                available: 5
            })
        );
    }

    #[test]
    fn residual_examples() {
        let r = functional_equation_residual(&phi_series(25)).unwrap();
        assert_eq!(r.order(), 24);
        assert!(r.is_zero());

        let r = functional_equation_residual(&PowerSeries::one(5)).unwrap();
        assert_eq!(r, series(&["-a", "-b", "-2*c"], 4));

        let perturbed = &phi_series(8) + &PowerSeries::term(Polynomial::one(), 2, 8);
        let r = functional_equation_residual(&perturbed).unwrap();
        assert_eq!(r.coeff(1).unwrap(), &Polynomial::constant(rat(2)));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = PowerSeries> {
        let monos = [
            Monomial::ALPHA,
            Monomial::BETA,
            Monomial::GAMMA,
            Monomial::new(1, 1, 0),
        ];
        prop::collection::vec(prop::collection::vec((-5i64..6, 0usize..4), 0..3), order).prop_map(
            move |cs| {
                let mut coeffs = vec![Polynomial::zero()];
                for ts in cs {
                    coeffs.push(Polynomial::from_terms(
                        ts.into_iter()
                            .map(|(n, i)| (Rational::from_integer(n.into()), monos[i])),
                    ));
                }
                PowerSeries::new(coeffs, order)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_is_a_homomorphism(s1 in arb_series(5), s2 in arb_series(5)) {
            let lhs = series_exp(&(&s1 + &s2)).unwrap();
            let rhs = &series_exp(&s1).unwrap() * &series_exp(&s2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_square_root_squares_back(u in arb_series(5)) {
            let y = series_binomial(&u, &frac(-1, 2)).unwrap();
            let one_plus_u = &PowerSeries::one(5) + &u;
            prop_assert_eq!(&(&y * &y) * &one_plus_u, PowerSeries::one(5));
        }
    }

    #[test]
    fn phi_is_t_homogeneous_to_order_20() {
        assert!(is_t_homogeneous(&phi_series(20)));
    }
}
