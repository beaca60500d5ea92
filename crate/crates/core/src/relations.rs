//! The relation triple (f₁ᵍ, f₂ᵍ, f₃ᵍ) generating the relation ideal in genus g.
//!
//! Two independent constructions are provided. The recursion is the default;
//! the Taylor-coefficient definition exists as a cross-check.

use crate::error::{Error, Result};
use crate::ring::{frac, rat, Monomial, Polynomial, WeightedDegree};
use crate::series::{phi_series, taylor_derivative, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    ByDefinition,
    ByRecursion,
}

#[derive(Clone, Debug)]
pub struct RelationTriple {
    pub genus: u32,
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub f3: Polynomial,
    pub construction: Construction,
}

impl RelationTriple {
    pub fn as_array(&self) -> [&Polynomial; 3] {
        [&self.f1, &self.f2, &self.f3]
    }

    pub fn to_vec(&self) -> Vec<Polynomial> {
        vec![self.f1.clone(), self.f2.clone(), self.f3.clone()]
    }

    /// Term-for-term equality of the polynomials, ignoring the construction tag.
    pub fn same_polynomials(&self, other: &RelationTriple) -> bool {
        self.genus == other.genus
            && self.f1 == other.f1
            && self.f2 == other.f2
            && self.f3 == other.f3
    }

    pub fn weighted_degrees(&self) -> [WeightedDegree; 3] {
        self.as_array()
            .map(|p| p.weighted_degree().expect("relations are nonzero"))
    }

    /// Expected initial terms αᵍ, αᵍ⁻¹β, αᵍ⁻¹γ.
    pub fn expected_initial_terms(genus: u32) -> [Monomial; 3] {
        [
            Monomial::new(genus, 0, 0),
            Monomial::new(genus - 1, 1, 0),
            Monomial::new(genus - 1, 0, 1),
        ]
    }
}

fn check_genus(g: u32) -> Result<()> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    Ok(())
}

/// f₁ᵍ = Φ^{(g)}, f₂ᵍ = (Φ^{(g+1)} − αΦ^{(g)})/g²,
/// f₃ᵍ = (Φ^{(g+2)} − αΦ^{(g+1)} − (g+1)²βΦ^{(g)}) / (2g(g+1)).
pub fn relations_by_definition(g: u32, phi: &PowerSeries) -> Result<RelationTriple> {
    check_genus(g)?;
    let r = g as usize;
    let d0 = taylor_derivative(phi, r)?;
    let d1 = taylor_derivative(phi, r + 1)?;
    let d2 = taylor_derivative(phi, r + 2)?;
    let gi = g as i64;

    let f1 = d0.clone();
    let f2 = (&d1 - &(&Polynomial::alpha() * &d0)).scale(&frac(1, gi * gi));
    let mut f3 = &d2 - &(&Polynomial::alpha() * &d1);
    f3 -= &(&Polynomial::beta() * &d0).scale(&rat((gi + 1) * (gi + 1)));
    let f3 = f3.scale(&frac(1, 2 * gi * (gi + 1)));

    Ok(RelationTriple {
        genus: g,
        f1,
        f2,
        f3,
        construction: Construction::ByDefinition,
    })
}

/// Convenience wrapper that expands Φ to the order genus `g` needs.
pub fn relations_by_definition_auto(g: u32) -> Result<RelationTriple> {
    check_genus(g)?;
    relations_by_definition(g, &phi_series(g as usize + 2))
}

/// Iterates f₁^{g+1} = αf₁ᵍ + g²f₂ᵍ, f₂^{g+1} = βf₁ᵍ + (2g/(g+1))f₃ᵍ,
/// f₃^{g+1} = γf₁ᵍ from (α, β, γ).
pub fn relations_by_recursion(g: u32) -> Result<RelationTriple> {
    check_genus(g)?;
    Ok(recursion_sequence(g).pop().expect("at least genus 1"))
}

/// Triples for genera 1..=g_max, in order.
pub fn recursion_sequence(g_max: u32) -> Vec<RelationTriple> {
    let mut out = Vec::with_capacity(g_max as usize);
    if g_max == 0 {
        return out;
    }
    let mut cur = RelationTriple {
        genus: 1,
        f1: Polynomial::alpha(),
        f2: Polynomial::beta(),
        f3: Polynomial::gamma(),
        construction: Construction::ByRecursion,
    };
    for g in 1..g_max {
        let gi = g as i64;
        let mut f1 = &Polynomial::alpha() * &cur.f1;
        f1 += &cur.f2.scale(&rat(gi * gi));
        let mut f2 = &Polynomial::beta() * &cur.f1;
        f2 += &cur.f3.scale(&frac(2 * gi, gi + 1));
        let f3 = &Polynomial::gamma() * &cur.f1;
        let next = RelationTriple {
            genus: g + 1,
            f1,
            f2,
            f3,
            construction: Construction::ByRecursion,
        };
        out.push(std::mem::replace(&mut cur, next));
    }
    out.push(cur);
    out
}

/// Leading monomials under the graded reverse lexicographic order.
pub fn initial_terms(tr: &RelationTriple) -> [Monomial; 3] {
    tr.as_array()
        .map(|p| p.leading_monomial().expect("relations are nonzero"))
}
