//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.
//!
//! All comparisons are exact. Runtime bounds are wall-clock limits on the
//! whole criterion.

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use invariant_ring::betti::{enumerate_generator_counts, newstead_betti};
use invariant_ring::chern::{
    chern_equals_phi, chern_ng_vanishing, chern_relations_check, chern_total_ng, chern_total_q,
};
use invariant_ring::groebner::ideal_equal;
use invariant_ring::parse::parse_poly;
use invariant_ring::relations::{initial_terms, relations_by_definition, relations_by_recursion};
use invariant_ring::ring::rat;
use invariant_ring::series::{functional_equation_residual, phi_series, taylor_derivative};
use invariant_ring::{GroebnerBasis, Monomial, Polynomial, Rational, WeightedDegree};
use iring::cache::{BasisCache, CacheEntry};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:.2?}, limit {limit:?}");
    Ok(t)
}

/// C(n, k) by Pascal's triangle.
fn choose(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// Π(1−t^d) / Π(1−t^w) as an integer polynomial, by long division.
fn hilbert_oracle(degrees: &[usize], weights: &[usize]) -> Vec<i64> {
    let len: usize = degrees.iter().sum::<usize>() + 1;
    let mut num = vec![0i64; len];
    num[0] = 1;
    for &d in degrees {
        for k in (d..len).rev() {
            num[k] -= num[k - d];
        }
    }
    for &w in weights {
        // divide by (1 − t^w): q_k = n_k + q_{k−w}
        for k in w..len {
            num[k] += num[k - w];
        }
    }
    while num.last() == Some(&0) {
        num.pop();
    }
    num
}

fn c1_relation_paths() -> Outcome {
    let start = Instant::now();
    let phi = phi_series(22);
    for g in 1..=20 {
        let rec = relations_by_recursion(g).map_err(|e| e.to_string())?;
        let def = relations_by_definition(g, &phi).map_err(|e| e.to_string())?;
        ensure!(
            rec.same_polynomials(&def),
            "genus {g}: recursion and definition differ"
        );
    }
    let t = within(start, Duration::from_secs(10), "g = 1..20")?;
    Ok(format!("g = 1..20 term-for-term equal in {t:.2?}"))
}

fn c2_initial_terms() -> Outcome {
    for g in 1..=20 {
        let tr = relations_by_recursion(g).map_err(|e| e.to_string())?;
        let want = [
            Monomial::new(g, 0, 0),
            Monomial::new(g - 1, 1, 0),
            Monomial::new(g - 1, 0, 1),
        ];
        ensure!(
            initial_terms(&tr) == want,
            "genus {g}: initial terms {:?}",
            initial_terms(&tr)
        );
        let degrees = [g, g + 1, g + 2].map(WeightedDegree::Homogeneous);
        ensure!(
            tr.weighted_degrees() == degrees,
            "genus {g}: degrees {:?}",
            tr.weighted_degrees()
        );
    }
    Ok("g = 1..20 leads a^g, a^(g-1)*b, a^(g-1)*c with degrees g, g+1, g+2".into())
}

fn c3_initial_ideal() -> Outcome {
    let start = Instant::now();
    for g in 1..=10u32 {
        let gb = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        ensure!(
            gb.is_reduced() && gb.is_groebner(),
            "genus {g}: not a reduced Groebner basis"
        );
        let gens = gb.initial_ideal_minimal_generators();
        let gu = g as usize;
        ensure!(
            gens.len() as u64 == choose(gu + 2, 2),
            "genus {g}: {} generators",
            gens.len()
        );
        ensure!(
            gens.iter().all(|m| m.degree() == g),
            "genus {g}: generator off degree {g}"
        );
        let mut distinct = gens.clone();
        distinct.sort();
        distinct.dedup();
        ensure!(
            distinct.len() == gens.len(),
            "genus {g}: repeated generator"
        );
        let sm = gb.standard_monomials().map_err(|e| e.to_string())?;
        ensure!(
            sm.len() as u64 == choose(gu + 2, 3),
            "genus {g}: {} standard monomials",
            sm.len()
        );
        ensure!(
            sm.monomials.iter().all(|m| m.degree() < g),
            "genus {g}: standard monomial of degree >= g"
        );
    }
    let t = within(start, Duration::from_secs(60), "g = 1..10")?;
    Ok(format!(
        "g = 1..10 initial ideal is all degree-g monomials, {t:.2?}"
    ))
}

fn c4_hilbert() -> Outcome {
    for g in 1..=10u32 {
        let gb = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        let h: Vec<i64> = gb
            .hilbert_series()
            .map_err(|e| e.to_string())?
            .iter()
            .map(|&x| x as i64)
            .collect();
        let gu = g as usize;
        let oracle = hilbert_oracle(&[gu, gu + 1, gu + 2], &[1, 2, 3]);
        ensure!(h == oracle, "genus {g}: {h:?} vs {oracle:?}");
        ensure!(h.iter().eq(h.iter().rev()), "genus {g}: not palindromic");
        ensure!(
            h.len() == 3 * gu - 2 && h[3 * gu - 3] == 1,
            "genus {g}: top degree {}",
            h.len() - 1
        );
    }
    Ok("g = 1..10 matches the complete-intersection product, palindromic, top 3g-3".into())
}

fn c5_ideal_identifications() -> Outcome {
    for g in 1..=10u32 {
        let tr = relations_by_recursion(g).map_err(|e| e.to_string())?;
        let phi = phi_series(g as usize + 2);
        let derivs = (g..=g + 2)
            .map(|r| taylor_derivative(&phi, r as usize))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        ensure!(
            ideal_equal(&tr.to_vec(), &derivs),
            "genus {g}: Taylor derivatives span another ideal"
        );
        let q = chern_total_q(g + 2);
        let classes: Vec<Polynomial> = (g..=g + 2).map(|r| q.component(r)).collect();
        ensure!(
            ideal_equal(&tr.to_vec(), &classes),
            "genus {g}: Chern classes span another ideal"
        );
        let gb = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        let report = chern_relations_check(g, &gb).map_err(|e| e.to_string())?;
        ensure!(report.passed, "genus {g}: {:?}", report.details);
    }
    Ok("g = 1..10 relations, Taylor derivatives and c_g..c_(g+2) generate one ideal".into())
}

fn c6_phi_chern() -> Outcome {
    for g in 1..=12u32 {
        let report = chern_equals_phi(g);
        ensure!(report.passed, "genus {g}: {:?}", report.details);
        let n = g + 2;
        let (q, phi) = (chern_total_q(n), phi_series(n as usize));
        for r in 0..=n {
            ensure!(
                q.component(r) == phi.coeffs()[r as usize],
                "genus {g}: r = {r}"
            );
        }
    }
    Ok("g = 1..12 c_r equals the t^r coefficient for r <= g+2".into())
}

fn c7_functional_equation() -> Outcome {
    let res = functional_equation_residual(&phi_series(25)).map_err(|e| e.to_string())?;
    ensure!(
        res.order() == 24,
        "residual known through t^{}",
        res.order()
    );
    ensure!(res.is_zero(), "residual is nonzero");
    Ok("residual vanishes through t^24".into())
}

fn c8_tangent_vanishing() -> Outcome {
    for g in 2..=8u32 {
        let gb = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        let report = chern_ng_vanishing(g, &gb).map_err(|e| e.to_string())?;
        ensure!(report.passed, "genus {g}: {:?}", report.details);
        let class = chern_total_ng(g, 3 * g - 3).map_err(|e| e.to_string())?;
        for w in (2 * g - 1)..=(3 * g - 3) {
            ensure!(
                gb.normal_form(&class.component(w)).is_zero(),
                "genus {g}: c_{w} survives"
            );
        }
        let c1 = class.component(1);
        ensure!(
            c1 == Polynomial::alpha().scale(&rat(2)),
            "genus {g}: c_1 = {c1}"
        );
        ensure!(!gb.normal_form(&c1).is_zero(), "genus {g}: c_1 vanishes");
    }
    Ok("g = 2..8 components in (2g-2, 3g-3] vanish, c_1 = 2a survives".into())
}

fn c9_betti() -> Outcome {
    for g in 2..=10u32 {
        let s_max = (3 * g - 1) / 2;
        let table = newstead_betti(g, s_max).map_err(|e| e.to_string())?;
        ensure!(
            table.values[0] == 1 && table.values[1] == 1,
            "genus {g}: seeds {:?}",
            &table.values[..2]
        );
        for s in 0..=s_max {
            let e = enumerate_generator_counts(g, s).map_err(|e| e.to_string())?;
            ensure!(
                e == table.values[s as usize],
                "genus {g}, s = {s}: enumeration {e}, recursion {}",
                table.values[s as usize]
            );
        }
    }
    let rec = newstead_betti(2, 2).map_err(|e| e.to_string())?.values[2];
    let en = enumerate_generator_counts(2, 2).map_err(|e| e.to_string())?;
    ensure!(
        rec == 2 && en == 2,
        "cross-check holds for g = 2..10, but the stated seed g_4 = 2 at g = 2 does not: recursion {rec}, enumeration {en}"
    );
    Ok("g = 2..10 recursion equals enumeration, seeds hold".into())
}

fn c10_gamma_inclusion() -> Outcome {
    for g in 1..=9u32 {
        let gb_next = GroebnerBasis::for_genus(g + 1).map_err(|e| e.to_string())?;
        let tr = relations_by_recursion(g).map_err(|e| e.to_string())?;
        for (i, f) in tr.as_array().into_iter().enumerate() {
            let nf = gb_next.normal_form(&(&Polynomial::gamma() * f));
            ensure!(nf.is_zero(), "genus {g}: gamma*f{} reduces to {nf}", i + 1);
        }
    }
    Ok("g = 1..9 gamma*f_i lies in the genus g+1 ideal".into())
}

fn c11_socle() -> Outcome {
    for g in 2..=8u32 {
        let gb = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        let sm = gb.standard_monomials().map_err(|e| e.to_string())?;
        let top: Vec<Monomial> = sm
            .monomials
            .iter()
            .copied()
            .filter(|m| m.weighted_degree() == 3 * g - 3)
            .collect();
        let socle = Monomial::new(0, 0, g - 1);
        ensure!(
            top == [socle],
            "genus {g}: top-degree standard monomials {top:?}"
        );
        ensure!(
            sm.monomials
                .iter()
                .all(|m| m.weighted_degree() <= 3 * g - 3),
            "genus {g}: standard monomial above 3g-3"
        );
        for m in Monomial::of_weighted_degree(3 * g - 3) {
            let nf = gb.normal_form(&Polynomial::monomial(m));
            ensure!(
                nf.monomials().all(|x| *x == socle),
                "genus {g}: {m} reduces to {nf}"
            );
            let ratio = gb.pairing_ratio(&m).map_err(|e| e.to_string())?;
            ensure!(
                nf == Polynomial::monomial(socle).scale(&ratio),
                "genus {g}: ratio of {m}"
            );
        }
    }
    let gb2 = GroebnerBasis::for_genus(2).map_err(|e| e.to_string())?;
    let ab: Rational = gb2
        .pairing_ratio(&Monomial::new(1, 1, 0))
        .map_err(|e| e.to_string())?;
    let a3: Rational = gb2
        .pairing_ratio(&Monomial::new(3, 0, 0))
        .map_err(|e| e.to_string())?;
    ensure!(ab == rat(-1) && a3 == rat(1), "genus 2: ratios {ab}, {a3}");
    Ok("g = 2..8 one-dimensional socle c^(g-1); <ab> = -1, <a^3> = 1 at g = 2".into())
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let term = (
        -1_000_000i64..=1_000_000,
        1i64..=1_000_000,
        0u32..=20,
        0u32..=20,
        0u32..=20,
    );
    prop::collection::vec(term, 0..8).prop_map(|ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|(n, d, a, b, c)| (Rational::new(n.into(), d.into()), Monomial::new(a, b, c))),
        )
    })
}

fn c12_tooling() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&arb_poly(), |p| {
            let printed = p.to_string();
            let back = parse_poly(&printed)
                .map_err(|e| TestCaseError::fail(format!("{printed:?}: {e}")))?;
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), printed);
            Ok(())
        })
        .map_err(|e| format!("round-trip: {e}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_iring"))
        .args(["verify", "-g", "1..8", "--cache-dir"])
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(120), "verify -g 1..8")?;
    ensure!(
        out.status.code() == Some(0),
        "verify exited {:?}:\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );

    let cache = BasisCache::open(dir.path()).map_err(|e| e.to_string())?;
    for g in 1..=8 {
        let fresh = GroebnerBasis::for_genus(g).map_err(|e| e.to_string())?;
        let bytes = fs::read(cache.path(g)).map_err(|e| e.to_string())?;
        ensure!(
            bytes == CacheEntry::from_basis(g, &fresh).to_json().into_bytes(),
            "genus {g}: file differs from fresh basis"
        );
        let loaded = match cache.load(g) {
            Ok(Some(Ok(gb))) => gb,
            other => return Err(format!("genus {g}: reload {other:?}")),
        };
        ensure!(loaded == fresh, "genus {g}: reloaded basis differs");
        cache.save(g, &loaded).map_err(|e| e.to_string())?;
        ensure!(
            fs::read(cache.path(g)).map_err(|e| e.to_string())? == bytes,
            "genus {g}: re-save not byte-identical"
        );
    }
    Ok(format!(
        "10^4 round-trips, verify -g 1..8 exit 0 in {t:.2?}, cache byte-identical for g = 1..8"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("dual-path relation equality", c1_relation_paths),
        ("initial terms and weighted degrees", c2_initial_terms),
        (
            "initial ideal and standard monomial count",
            c3_initial_ideal,
        ),
        ("Hilbert series", c4_hilbert),
        ("ideal identifications", c5_ideal_identifications),
        (
            "generating function equals quotient Chern class",
            c6_phi_chern,
        ),
        ("functional equation", c7_functional_equation),
        ("tangent class vanishing", c8_tangent_vanishing),
        ("Betti cross-check", c9_betti),
        ("gamma inclusion", c10_gamma_inclusion),
        ("socle pairing", c11_socle),
        ("tooling", c12_tooling),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
