//! Buchberger's algorithm over ℚ[α, β, γ] with the graded reverse
//! lexicographic order, plus normal forms and quotient-ring queries.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::relations::relations_by_recursion;
use crate::ring::{Monomial, Polynomial, Rational};

/// Identifier of the monomial order every basis here is computed in.
pub const ORDER_TAG: &str = "grevlex-abc";

/// Reduced Gröbner basis: monic, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub genus: Option<u32>,
    pub elements: Vec<Polynomial>,
    pub order_tag: &'static str,
}

/// Monomials outside the initial ideal, sorted by (weighted degree, monomial order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    pub genus: Option<u32>,
    pub monomials: Vec<Monomial>,
}

impl StandardMonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Highest weighted degree present.
    pub fn top_weighted_degree(&self) -> Option<u32> {
        self.monomials.last().map(Monomial::weighted_degree)
    }

    /// All standard monomials in the top weighted degree.
    pub fn socle(&self) -> Vec<Monomial> {
        match self.top_weighted_degree() {
            Some(top) => self
                .monomials
                .iter()
                .filter(|m| m.weighted_degree() == top)
                .copied()
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials
            .binary_search_by(|x| sort_key(x).cmp(&sort_key(m)))
            .is_ok()
    }
}

fn sort_key(m: &Monomial) -> (u32, Monomial) {
    (m.weighted_degree(), *m)
}

/// Remainder of `p` on division by monic `divisors`, fully reduced.
///
/// Each step reduces the largest remaining monomial by the divisor with the
/// largest dividing leading monomial.
fn reduce_by(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let leads: Vec<Monomial> = divisors
        .iter()
        .map(|d| d.leading_monomial().expect("nonzero divisor"))
        .collect();
    let mut work = p.clone();
    let mut rem = Polynomial::zero();
    while let Some((m, c)) = work.pop_leading() {
        let best = leads
            .iter()
            .enumerate()
            .filter(|(_, l)| l.divides(&m))
            .max_by_key(|(_, l)| **l);
        match best {
            Some((i, lead)) => {
                let shift = m.checked_div(lead).expect("divides");
                for (dm, dc) in divisors[i].terms().skip(1) {
                    work.add_term(*dm * shift, -(&c * dc));
                }
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let l = lf.lcm(&lg);
    let mut s = f.mul_monomial(l.checked_div(&lf).expect("lcm"));
    s -= &g.mul_monomial(l.checked_div(&lg).expect("lcm"));
    s
}

/// Pair queue key: normal strategy (smallest lcm first, by standard degree
/// and then the monomial order), ties broken by indices.
type PairKey = (u32, Monomial, usize, usize);

fn pair_key(basis: &[Polynomial], i: usize, j: usize) -> PairKey {
    let l = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(&basis[j].leading_monomial().unwrap());
    (l.degree(), l, i, j)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = reduce_by(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert(pair_key(&basis, i, j));
            pending.insert((i, j));
        }
    }

    while let Some(key) = queue.pop_first() {
        let (_, lcm, i, j) = key;
        pending.remove(&(i, j));
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(&lj) {
            continue;
        }
        // chain criterion: some k with LM_k | lcm whose pairs with i and j are done
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let r = reduce_by(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(r.monic());
        for i in 0..k {
            queue.insert(pair_key(&basis, i, k));
            pending.insert((i, k));
        }
    }

    GroebnerBasis {
        genus: None,
        elements: reduce_basis(basis),
        order_tag: ORDER_TAG,
    }
}

/// Minimalizes, inter-reduces, normalizes and sorts a Gröbner basis.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let lf = f.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            let lg = g.leading_monomial().unwrap();
            j != i && lg.divides(&lf) && (lg != lf || j < i)
        });
        if !redundant {
            minimal.push(f.monic());
        }
    }
    let mut reduced: Vec<Polynomial> = minimal
        .iter()
        .map(|f| {
            let (lm, _) = f.leading_term().unwrap();
            let mut tail = f.clone();
            tail.pop_leading();
            let mut out = reduce_by(&tail, &minimal);
            out.add_term(lm, Rational::from_integer(1.into()));
            out
        })
        .collect();
    reduced.sort_by_key(|f| f.leading_monomial().unwrap());
    reduced
}

impl GroebnerBasis {
    /// Basis of the relation ideal in genus `g`, built from the recursion.
    pub fn for_genus(g: u32) -> Result<GroebnerBasis> {
        let tr = relations_by_recursion(g)?;
        let mut gb = buchberger(&tr.to_vec());
        gb.genus = Some(g);
        Ok(gb)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|f| f.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_by(p, &self.elements)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Every S-polynomial of two elements reduces to zero.
    pub fn is_groebner(&self) -> bool {
        if self.elements.iter().any(Polynomial::is_zero) {
            return false;
        }
        (0..self.elements.len()).all(|j| {
            (0..j).all(|i| {
                self.normal_form(&s_polynomial(&self.elements[i], &self.elements[j]))
                    .is_zero()
            })
        })
    }

    /// Monic, sorted, and no element has a term in the initial ideal of the others.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        let monic = self.elements.iter().all(|f| {
            f.leading_coefficient()
                .is_some_and(|c| *c == Rational::from_integer(1.into()))
        });
        let sorted = leads.windows(2).all(|w| w[0] < w[1]);
        let clean = self.elements.iter().enumerate().all(|(i, f)| {
            f.monomials().all(|m| {
                leads
                    .iter()
                    .enumerate()
                    .all(|(j, l)| j == i || !l.divides(m))
            })
        });
        monic && sorted && clean
    }

    /// Leading monomials of the reduced basis, which minimally generate the initial ideal.
    pub fn initial_ideal_minimal_generators(&self) -> Vec<Monomial> {
        self.leading_monomials()
    }

    /// Complement of the initial ideal. Errors if the quotient is infinite.
    pub fn standard_monomials(&self) -> Result<StandardMonomialBasis> {
        let leads = self.leading_monomials();
        let bound = |pick: fn(&Monomial) -> (u32, u32), name: &'static str| {
            leads
                .iter()
                .filter_map(|m| {
                    let (e, rest) = pick(m);
                    (rest == 0).then_some(e)
                })
                .min()
                .ok_or(Error::InfiniteQuotient(name))
        };
        let a_max = bound(|m| (m.a, m.b + m.c), "alpha")?;
        let b_max = bound(|m| (m.b, m.a + m.c), "beta")?;
        let c_max = bound(|m| (m.c, m.a + m.b), "gamma")?;
        let mut monomials = Vec::new();
        for a in 0..a_max {
            for b in 0..b_max {
                for c in 0..c_max {
                    let m = Monomial::new(a, b, c);
                    if !leads.iter().any(|l| l.divides(&m)) {
                        monomials.push(m);
                    }
                }
            }
        }
        monomials.sort_by_key(sort_key);
        Ok(StandardMonomialBasis {
            genus: self.genus,
            monomials,
        })
    }

    /// h_w = number of standard monomials of weighted degree w.
    pub fn hilbert_series(&self) -> Result<Vec<u64>> {
        let basis = self.standard_monomials()?;
        let top = basis.top_weighted_degree().unwrap_or(0) as usize;
        let mut h = vec![0u64; top + 1];
        for m in &basis.monomials {
            h[m.weighted_degree() as usize] += 1;
        }
        Ok(h)
    }

    /// Coefficient of the socle monomial in the normal form of `m`.
    ///
    /// `m` must have the top weighted degree of the quotient (3g−3 in genus g).
    pub fn pairing_ratio(&self, m: &Monomial) -> Result<Rational> {
        let basis = self.standard_monomials()?;
        let socle = basis.socle();
        let top = basis.top_weighted_degree().unwrap_or(0);
        if m.weighted_degree() != top || socle.len() != 1 {
            return Err(Error::WrongWeightedDegree {
                expected: top,
                found: m.weighted_degree().to_string(),
            });
        }
        let nf = self.normal_form(&Polynomial::monomial(*m));
        Ok(nf.coeff(&socle[0]))
    }
}

/// True iff each generating set lies in the ideal generated by the other.
pub fn ideal_equal(gens1: &[Polynomial], gens2: &[Polynomial]) -> bool {
    let gb1 = buchberger(gens1);
    let gb2 = buchberger(gens2);
    gens2.iter().all(|p| gb1.contains(p)) && gens1.iter().all(|p| gb2.contains(p))
}

/// Coefficients of Π(1 − t^{dᵢ}) / Π(1 − t^{wⱼ}), computed by integer series
/// division up to the numerator degree, with trailing zeros trimmed.
pub fn complete_intersection_hilbert(
    relation_degrees: &[u32],
    generator_weights: &[u32],
) -> Vec<i64> {
    let top: usize = relation_degrees.iter().map(|&d| d as usize).sum();
    let mut c = vec![0i64; top + 1];
    c[0] = 1;
    for &d in relation_degrees {
        let d = d as usize;
        for k in (d..=top).rev() {
            c[k] -= c[k - d];
        }
    }
    for &w in generator_weights {
        let w = w as usize;
        for k in w..=top {
            c[k] += c[k - w];
        }
    }
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Hilbert series of ℚ[α, β, γ] modulo three relations of weighted degrees g, g+1, g+2.
pub fn expected_hilbert_series(g: u32) -> Vec<i64> {
    complete_intersection_hilbert(&[g, g + 1, g + 2], &[1, 2, 3])
}

/// Remainder of `p` modulo `gb`; supported on standard monomials.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}
