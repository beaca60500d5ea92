//! Even Betti numbers of the moduli space, by recursion and by counting the
//! spanning set αᵃβᵇγᵏψ_{i₁}…ψ_{i₂ₗ} directly.
//!
//! Degrees are indexed by s, meaning real cohomological degree 2s; α, β, γ and
//! each pair ψψ contribute 1, 2, 3 and 3 to s respectively.

use crate::check::CheckReport;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiSource {
    Recursion,
    Enumeration,
}

/// Betti numbers g_{2s} for s = 0..=s_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub genus: u32,
    pub values: Vec<u128>,
    pub source: BettiSource,
}

/// C(n, k), zero outside 0 ≤ k ≤ n.
pub fn binom(n: i64, k: i64) -> u128 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidGenus { genus: g, min: 2 });
    }
    Ok(())
}

/// Largest s for which the spanning set is linearly independent: ⌊(3g−1)/2⌋.
pub fn middle_range(g: u32) -> u32 {
    (3 * g - 1) / 2
}

/// Seeds g_0 = g_2 = 1 and steps by
///
/// g_{2s} = g_{2s−4} + Σ_{l=s−g+1}^{⌊s/3⌋} C(2g, 2l)   (s ≥ 2),
///
/// the sum counting the new generators αᵃψ_{i₁}…ψ_{i₂ₗ} with a + 3l = s.
pub fn newstead_betti(g: u32, s_max: u32) -> Result<BettiTable> {
    check_genus(g)?;
    let gi = g as i64;
    let mut values: Vec<u128> = Vec::with_capacity(s_max as usize + 1);
    for s in 0..=s_max as i64 {
        let v = if s < 2 {
            1
        } else {
            let new: u128 = ((s - gi + 1)..=(s / 3)).map(|l| binom(2 * gi, 2 * l)).sum();
            values[s as usize - 2] + new
        };
        values.push(v);
    }
    Ok(BettiTable {
        genus: g,
        values,
        source: BettiSource::Recursion,
    })
}

/// Number of spanning elements in degree 2s:
/// αᵃβᵇψ^{2l} with a+b+2l < g−1 and αᵃβᵇγᵏψ^{2l} with a+b+k+2l = g−1,
/// each weighted by the C(2g, 2l) choices of ψ indices.
pub fn enumerate_generator_counts(g: u32, s: u32) -> Result<u128> {
    check_genus(g)?;
    let g = g as i64;
    let s = s as i64;
    let mut count = 0u128;
    for l in 0..=g {
        for b in 0..=g {
            for a in 0..=g {
                if a + b + 2 * l < g - 1 && a + 2 * b + 3 * l == s {
                    count += binom(2 * g, 2 * l);
                }
                let k = g - 1 - a - b - 2 * l;
                if k >= 0 && a + 2 * b + 3 * k + 3 * l == s {
                    count += binom(2 * g, 2 * l);
                }
            }
        }
    }
    Ok(count)
}

pub fn enumerated_table(g: u32, s_max: u32) -> Result<BettiTable> {
    let values = (0..=s_max)
        .map(|s| enumerate_generator_counts(g, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable {
        genus: g,
        values,
        source: BettiSource::Enumeration,
    })
}

/// Recursion and enumeration agree for every s ≤ ⌊(3g−1)/2⌋.
pub fn betti_cross_check(g: u32) -> Result<CheckReport> {
    let s_max = middle_range(g);
    let rec = newstead_betti(g, s_max)?;
    let mut report = CheckReport::pass();
    for s in 0..=s_max {
        let e = enumerate_generator_counts(g, s)?;
        let r = rec.values[s as usize];
        report.require(e == r, || format!("s={s}: enumeration {e}, recursion {r}"));
    }
    Ok(report)
}

/// Degrees beyond the middle where recursion and enumeration differ, as
/// (s, enumeration, recursion). Informational only.
pub fn mismatches_beyond_middle(g: u32) -> Result<Vec<(u32, u128, u128)>> {
    let top = 3 * g - 3;
    let rec = newstead_betti(g, top)?;
    let mut out = Vec::new();
    for s in (middle_range(g) + 1)..=top {
        let e = enumerate_generator_counts(g, s)?;
        if e != rec.values[s as usize] {
            out.push((s, e, rec.values[s as usize]));
        }
    }
    Ok(out)
}

/// Soft structural check: values do not decrease up to the middle degree
/// ⌊(3g−3)/2⌋ of the (6g−6)-dimensional space.
pub fn weakly_increasing_to_middle(table: &BettiTable) -> bool {
    let end = ((3 * table.genus as usize - 3) / 2 + 1).min(table.values.len());
    table.values[..end].windows(2).all(|w| w[0] <= w[1])
}

/// Dimension of the invariant subring in each weighted degree, counted from
/// the monomials αᵃβᵇγᶜ with a+b+c < g.
pub fn invariant_dimensions(g: u32) -> Result<Vec<u64>> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let mut dims = vec![0u64; 3 * g as usize - 2];
    for a in 0..g {
        for b in 0..(g - a) {
            for c in 0..(g - a - b) {
                dims[(a + 2 * b + 3 * c) as usize] += 1;
            }
        }
    }
    Ok(dims)
}
