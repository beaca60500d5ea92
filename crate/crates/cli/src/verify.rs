//! Runs every consistency check for a range of genera.
//!
//! Each genus is checked on its own thread; results come back in genus order.

use std::thread;

use invariant_ring::betti::betti_cross_check;
use invariant_ring::chern::{
    chern_equals_phi, chern_ng_vanishing, chern_relations_check, chern_total_ng,
};
use invariant_ring::groebner::{expected_hilbert_series, ideal_equal};
use invariant_ring::relations::{initial_terms, relations_by_definition, relations_by_recursion};
use invariant_ring::ring::rat;
use invariant_ring::series::{functional_equation_residual, phi_series, taylor_derivative};
use invariant_ring::{
    CheckReport, GroebnerBasis, Monomial, Polynomial, RelationTriple, WeightedDegree,
};
use num_integer::binomial;
use serde_json::{json, Value};

use crate::cache::{basis_for, BasisCache, CacheEntry};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub report: CheckReport,
}

#[derive(Debug, Clone)]
pub struct GenusVerification {
    pub genus: u32,
    pub checks: Vec<CheckOutcome>,
}

impl GenusVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.report.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(
                |c| json!({"name": c.name, "passed": c.report.passed, "details": c.report.details}),
            )
            .collect();
        json!({"genus": self.genus, "passed": self.passed(), "checks": checks})
    }
}

fn failed(detail: impl Into<String>) -> CheckReport {
    let mut r = CheckReport::pass();
    r.fail(detail);
    r
}

fn from_result(r: invariant_ring::Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| failed(e.to_string()))
}

fn check_relations(g: u32, tr: &RelationTriple) -> CheckReport {
    let phi = phi_series(g as usize + 2);
    match relations_by_definition(g, &phi) {
        Ok(def) => {
            let mut r = CheckReport::pass();
            r.require(def.same_polynomials(tr), || {
                format!("recursion and Taylor coefficients differ in genus {g}")
            });
            r
        }
        Err(e) => failed(e.to_string()),
    }
}

fn check_initial_terms(g: u32, tr: &RelationTriple) -> CheckReport {
    let mut r = CheckReport::pass();
    let leads = initial_terms(tr);
    let expected = RelationTriple::expected_initial_terms(g);
    r.require(leads == expected, || {
        format!("initial terms {leads:?}, expected {expected:?}")
    });
    let degrees = tr.weighted_degrees();
    let want = [g, g + 1, g + 2].map(WeightedDegree::Homogeneous);
    r.require(degrees == want, || format!("weighted degrees {degrees:?}"));
    r
}

fn check_basis(gb: &GroebnerBasis) -> CheckReport {
    let mut r = CheckReport::pass();
    r.require(gb.is_reduced(), || "basis is not reduced".into());
    r.require(gb.is_groebner(), || {
        "an S-polynomial does not reduce to zero".into()
    });
    r
}

fn check_initial_ideal(g: u32, gb: &GroebnerBasis) -> CheckReport {
    let mut r = CheckReport::pass();
    let mut gens = gb.initial_ideal_minimal_generators();
    gens.sort();
    let mut all = Monomial::of_degree(g);
    all.sort();
    r.require(gens == all, || {
        format!(
            "initial ideal has {} generators, expected the {} monomials of degree {g}",
            gens.len(),
            all.len()
        )
    });
    let want = binomial(g as u64 + 2, 3);
    match gb.standard_monomials() {
        Ok(basis) => r.require(basis.len() as u64 == want, || {
            format!("{} standard monomials, expected {want}", basis.len())
        }),
        Err(e) => r.fail(e.to_string()),
    }
    r
}

fn check_hilbert(g: u32, gb: &GroebnerBasis) -> CheckReport {
    let h = match gb.hilbert_series() {
        Ok(h) => h,
        Err(e) => return failed(e.to_string()),
    };
    let mut r = CheckReport::pass();
    let h: Vec<i64> = h.iter().map(|&x| x as i64).collect();
    let expected = expected_hilbert_series(g);
    r.require(h == expected, || {
        format!("hilbert series {h:?}, expected {expected:?}")
    });
    r.require(h.iter().eq(h.iter().rev()), || {
        "hilbert series is not palindromic".into()
    });
    r.require(
        h.len() == 3 * g as usize - 2 && h.last() == Some(&1),
        || format!("top degree {} with coefficient {:?}", h.len() - 1, h.last()),
    );
    r
}

fn check_phi_ideal(g: u32, tr: &RelationTriple) -> CheckReport {
    let phi = phi_series(g as usize + 2);
    let derivs: Result<Vec<Polynomial>, _> = (g..=g + 2)
        .map(|r| taylor_derivative(&phi, r as usize))
        .collect();
    match derivs {
        Ok(d) => {
            let mut r = CheckReport::pass();
            r.require(ideal_equal(&tr.to_vec(), &d), || {
                "relations and Taylor derivatives span different ideals".into()
            });
            r
        }
        Err(e) => failed(e.to_string()),
    }
}

fn check_functional_equation(g: u32) -> CheckReport {
    let n = 2 * g as usize + 4;
    match functional_equation_residual(&phi_series(n)) {
        Ok(res) => {
            let mut r = CheckReport::pass();
            r.require(res.is_zero(), || {
                format!("residual nonzero through t^{}", res.order())
            });
            r
        }
        Err(e) => failed(e.to_string()),
    }
}

fn check_tangent(g: u32, gb: &GroebnerBasis) -> CheckReport {
    let mut r = from_result(chern_ng_vanishing(g, gb));
    match chern_total_ng(g, 1) {
        Ok(c) => {
            let c1 = c.component(1);
            r.require(!gb.contains(&c1), || {
                format!("c_1 = {c1} vanishes in the quotient")
            });
        }
        Err(e) => r.fail(e.to_string()),
    }
    r
}

fn check_gamma_inclusion(tr: &RelationTriple, next: &GroebnerBasis) -> CheckReport {
    let mut r = CheckReport::pass();
    for (i, f) in tr.as_array().into_iter().enumerate() {
        let nf = next.normal_form(&(&Polynomial::gamma() * f));
        r.require(nf.is_zero(), || {
            format!(
                "gamma*f{} has normal form {nf} in genus {}",
                i + 1,
                tr.genus + 1
            )
        });
    }
    r
}

fn check_socle(g: u32, gb: &GroebnerBasis) -> CheckReport {
    let basis = match gb.standard_monomials() {
        Ok(b) => b,
        Err(e) => return failed(e.to_string()),
    };
    let mut r = CheckReport::pass();
    let socle = basis.socle();
    let gamma_top = Monomial::new(0, 0, g - 1);
    r.require(socle == [gamma_top], || {
        format!("socle {socle:?}, expected [{gamma_top}]")
    });
    r.require(basis.top_weighted_degree() == Some(3 * g - 3), || {
        "top weighted degree is not 3g-3".into()
    });
    for m in Monomial::of_weighted_degree(3 * g - 3) {
        let nf = gb.normal_form(&Polynomial::monomial(m));
        r.require(nf.monomials().all(|x| *x == gamma_top), || {
            format!("{m} reduces to {nf}")
        });
    }
    if g == 2 {
        for (m, want) in [(Monomial::new(1, 1, 0), -1), (Monomial::new(3, 0, 0), 1)] {
            match gb.pairing_ratio(&m) {
                Ok(v) => r.require(v == rat(want), || {
                    format!("pairing ratio of {m} is {v}, expected {want}")
                }),
                Err(e) => r.fail(e.to_string()),
            }
        }
    }
    r
}

fn check_cache(g: u32, gb: &GroebnerBasis, cache: &BasisCache) -> CheckReport {
    let mut r = CheckReport::pass();
    if let Err(e) = cache.save(g, gb) {
        r.fail(format!("save failed: {e}"));
        return r;
    }
    match cache.load(g) {
        Ok(Some(Ok(loaded))) => {
            r.require(loaded.elements == gb.elements, || {
                "reloaded basis differs".into()
            });
            let again = CacheEntry::from_basis(g, &loaded);
            r.require(again == CacheEntry::from_basis(g, gb), || {
                "re-serialized entry differs".into()
            });
        }
        Ok(Some(Err(reason))) => r.fail(format!("reload rejected: {reason}")),
        Ok(None) => r.fail("file missing after save"),
        Err(e) => r.fail(format!("reload failed: {e}")),
    }
    r
}

/// All checks for one genus, in a fixed order.
pub fn verify_genus(g: u32, cache: Option<&BasisCache>) -> GenusVerification {
    let mut checks = Vec::new();
    let mut push =
        |name: &'static str, report: CheckReport| checks.push(CheckOutcome { name, report });

    let tr = match relations_by_recursion(g) {
        Ok(tr) => tr,
        Err(e) => {
            push("relations", failed(e.to_string()));
            return GenusVerification { genus: g, checks };
        }
    };
    push("relations", check_relations(g, &tr));
    push("initial_terms", check_initial_terms(g, &tr));

    let gb = match basis_for(g, cache) {
        Ok((gb, _)) => gb,
        Err(e) => {
            push("groebner", failed(e.to_string()));
            return GenusVerification { genus: g, checks };
        }
    };
    push("groebner", check_basis(&gb));
    push("initial_ideal", check_initial_ideal(g, &gb));
    push("hilbert", check_hilbert(g, &gb));
    push("phi_ideal", check_phi_ideal(g, &tr));
    push(
        "chern_relations",
        from_result(chern_relations_check(g, &gb)),
    );
    push("chern_phi", chern_equals_phi(g));
    push("functional_equation", check_functional_equation(g));
    if g >= 2 {
        push("tangent_vanishing", check_tangent(g, &gb));
        push("betti", from_result(betti_cross_check(g)));
        push("socle", check_socle(g, &gb));
    }
    match basis_for(g + 1, cache) {
        Ok((next, _)) => push("gamma_inclusion", check_gamma_inclusion(&tr, &next)),
        Err(e) => push("gamma_inclusion", failed(e.to_string())),
    }
    if let Some(c) = cache {
        push("cache_roundtrip", check_cache(g, &gb, c));
    }
    GenusVerification { genus: g, checks }
}

/// Checks every genus in `genera` concurrently; the result is in input order.
pub fn verify_range(
    genera: impl IntoIterator<Item = u32>,
    cache: Option<&BasisCache>,
) -> Vec<GenusVerification> {
    let genera: Vec<u32> = genera.into_iter().collect();
    thread::scope(|s| {
        let handles: Vec<_> = genera
            .iter()
            .map(|&g| s.spawn(move || verify_genus(g, cache)))
            .collect();
        handles
            .into_iter()
            .zip(&genera)
            .map(|(h, &g)| {
                h.join().unwrap_or_else(|_| GenusVerification {
                    genus: g,
                    checks: vec![CheckOutcome {
                        name: "panic",
                        report: failed("worker panicked"),
                    }],
                })
            })
            .collect()
    })
}
