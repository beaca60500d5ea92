//! Command-line front end for the invariant-ring kernel.
//!
//! Every verb renders to text, JSON or LaTeX. JSON documents have sorted
//! keys and carry rationals and polynomials as canonical strings.

pub mod args;
pub mod cache;
pub mod emit;
pub mod verify;

use std::io::{self, Write};

use invariant_ring::betti::{
    betti_cross_check, enumerated_table, middle_range, mismatches_beyond_middle, newstead_betti,
    weakly_increasing_to_middle,
};
use invariant_ring::chern::{chern_total_ng, chern_total_q, GradedClass};
use invariant_ring::groebner::expected_hilbert_series;
use invariant_ring::parse::{parse_monomial, parse_poly};
use invariant_ring::relations::{
    initial_terms, relations_by_definition_auto, relations_by_recursion,
};
use invariant_ring::{Error, GroebnerBasis, WeightedDegree};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

pub use args::{ChernTarget, Cli, Format, GenusRange, Verb};
use cache::{basis_for, BasisCache, CacheStatus};
use emit::{json_count, json_document, latex_monomial, latex_poly, rational_string};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    CheckFailed = 1,
    Usage = 2,
    Parse = 3,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Parse(Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Kernel(Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Parse(_) => ExitStatus::Parse,
            _ => ExitStatus::Usage,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Parse(e),
            Error::InvalidGenus { .. } => CliError::Usage(e.to_string()),
            other => CliError::Kernel(other),
        }
    }
}

/// One genus worth of output in all three renderings.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub latex: String,
    pub json: Value,
    pub ok: bool,
}

impl Rendered {
    fn new(text: String, latex: String, json: Value) -> Self {
        Rendered {
            text,
            latex,
            json,
            ok: true,
        }
    }

    fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

fn degree_number(d: &WeightedDegree) -> Value {
    match d {
        WeightedDegree::Homogeneous(w) => json!(w),
        WeightedDegree::Mixed => json!("mixed"),
    }
}

fn require_genus(range: GenusRange, min: u32, what: &str) -> Result<(), CliError> {
    if range.lo < min {
        return Err(CliError::Usage(format!(
            "{what} needs genus at least {min}, got {}",
            range.lo
        )));
    }
    Ok(())
}

fn relations(g: u32) -> Result<Rendered, CliError> {
    let rec = relations_by_recursion(g)?;
    let def = relations_by_definition_auto(g)?;
    let agree = rec.same_polynomials(&def);
    let degrees = rec.weighted_degrees();
    let leads = initial_terms(&rec);
    let fs = rec.as_array();

    let mut text = format!("genus {g}\n");
    for (i, f) in fs.iter().enumerate() {
        text.push_str(&format!("f{} = {f}\n", i + 1));
    }
    text.push_str(&format!(
        "weighted degrees: {}\n",
        degrees
            .iter()
            .map(|d| format!("{d:?}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str(&format!(
        "initial terms: {}\n",
        leads
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str(&format!("paths agree: {agree}\n"));

    let latex = fs
        .iter()
        .enumerate()
        .map(|(i, f)| format!("f_{{{}}}^{{({g})}} = {}\n", i + 1, latex_poly(f)))
        .collect();

    let json = json!({
        "genus": g,
        "f1": rec.f1.to_string(),
        "f2": rec.f2.to_string(),
        "f3": rec.f3.to_string(),
        "weighted_degrees": degrees.iter().map(degree_number).collect::<Vec<_>>(),
        "initial_terms": leads.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "paths_agree": agree,
    });
    Ok(Rendered::new(text, latex, json).with_ok(agree))
}

fn groebner(g: u32, gb: &GroebnerBasis) -> Rendered {
    let leads = gb.initial_ideal_minimal_generators();
    let mut text = format!(
        "genus {g}: {} elements ({})\n",
        gb.elements.len(),
        gb.order_tag
    );
    for p in &gb.elements {
        text.push_str(&format!("  {p}\n"));
    }
    text.push_str(&format!(
        "initial ideal: ({})\n",
        leads
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let latex = gb
        .elements
        .iter()
        .map(|p| format!("{} = 0\n", latex_poly(p)))
        .collect();
    let json = json!({
        "genus": g,
        "order_tag": gb.order_tag,
        "elements": gb.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "initial_ideal": leads.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    let ok = gb.is_reduced() && gb.is_groebner();
    Rendered::new(text, latex, json).with_ok(ok)
}

fn normal_form(g: u32, gb: &GroebnerBasis, input: &str) -> Result<Rendered, CliError> {
    let p = parse_poly(input)?;
    let nf = gb.normal_form(&p);
    let text = format!("{nf}\n");
    let latex = format!("{}\n", latex_poly(&nf));
    let json = json!({"genus": g, "input": p.to_string(), "normal_form": nf.to_string()});
    Ok(Rendered::new(text, latex, json))
}

fn basis(g: u32, gb: &GroebnerBasis) -> Result<Rendered, CliError> {
    let b = gb.standard_monomials()?;
    let names: Vec<String> = b.monomials.iter().map(ToString::to_string).collect();
    let text = format!(
        "genus {g}: {} standard monomials\n{}\n",
        b.len(),
        names.join(" ")
    );
    let latex = format!(
        "{}\n",
        b.monomials
            .iter()
            .map(latex_monomial)
            .collect::<Vec<_>>()
            .join(",\\ ")
    );
    let json = json!({"genus": g, "count": b.len(), "monomials": names});
    Ok(Rendered::new(text, latex, json))
}

fn hilbert(g: u32, gb: &GroebnerBasis) -> Result<Rendered, CliError> {
    let h = gb.hilbert_series()?;
    let hi: Vec<i64> = h.iter().map(|&x| x as i64).collect();
    let matches = hi == expected_hilbert_series(g);
    let palindromic = h.iter().eq(h.iter().rev());
    let series = h
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(w, c)| match w {
            0 => c.to_string(),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{w}"),
        })
        .collect::<Vec<_>>()
        .join(" + ");
    let text = format!(
        "genus {g}: {series}\ncomplete intersection: {matches}, palindromic: {palindromic}\n"
    );
    let latex_terms: Vec<String> = h
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(w, c)| match (w, c) {
            (0, _) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{c}t"),
            (_, 1) => format!("t^{{{w}}}"),
            _ => format!("{c}t^{{{w}}}"),
        })
        .collect();
    let latex = format!("H_{{{g}}}(t) = {}\n", latex_terms.join(" + "));
    let json = json!({
        "genus": g,
        "coefficients": h,
        "matches_complete_intersection": matches,
        "palindromic": palindromic,
    });
    Ok(Rendered::new(text, latex, json).with_ok(matches && palindromic))
}

fn pairing(g: u32, gb: &GroebnerBasis, input: &str) -> Result<Rendered, CliError> {
    let m = parse_monomial(input)?;
    let socle = gb.standard_monomials()?.socle();
    let ratio = gb
        .pairing_ratio(&m)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let text = format!("<{m}> / <{}> = {ratio}\n", socle[0]);
    let latex = format!(
        "\\langle {} \\rangle = {} \\langle {} \\rangle\n",
        latex_monomial(&m),
        latex_poly(&invariant_ring::Polynomial::constant(ratio.clone())),
        latex_monomial(&socle[0])
    );
    let json = json!({
        "genus": g,
        "monomial": m.to_string(),
        "socle": socle[0].to_string(),
        "ratio": rational_string(&ratio),
    });
    Ok(Rendered::new(text, latex, json))
}

fn chern(g: u32, target: ChernTarget, degree: Option<u32>) -> Result<Rendered, CliError> {
    let (class, name): (GradedClass, &str) = match target {
        ChernTarget::Q => (chern_total_q(degree.unwrap_or(g + 2)), "q"),
        ChernTarget::Ng => {
            require_genus(GenusRange::single(g), 2, "chern --target ng")?;
            (chern_total_ng(g, degree.unwrap_or(3 * g - 3))?, "ng")
        }
    };
    let comps = class.components();
    let mut text = format!("genus {g}, target {name}\n");
    let mut latex = String::new();
    for (w, c) in comps.iter().enumerate() {
        text.push_str(&format!("c_{w} = {c}\n"));
        latex.push_str(&format!("c_{{{w}}} = {}\n", latex_poly(c)));
    }
    let json = json!({
        "genus": g,
        "target": name,
        "degree": class.max_degree(),
        "components": comps.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(Rendered::new(text, latex, json))
}

fn betti(g: u32) -> Result<Rendered, CliError> {
    let top = 3 * g - 3;
    let rec = newstead_betti(g, top)?;
    let en = enumerated_table(g, top)?;
    let cross = betti_cross_check(g)?;
    let beyond = mismatches_beyond_middle(g)?;
    let monotone = weakly_increasing_to_middle(&rec);
    let mid = middle_range(g);

    let join = |v: &[u128]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut text = format!(
        "genus {g}\nrecursion:   {}\nenumeration: {}\nagree for s <= {mid}: {}\n",
        join(&rec.values),
        join(&en.values),
        cross.passed
    );
    for d in &cross.details {
        text.push_str(&format!("  {d}\n"));
    }
    if !monotone {
        text.push_str("note: recursion decreases before the middle degree\n");
    }
    let latex = rec
        .values
        .iter()
        .enumerate()
        .map(|(s, v)| format!("b_{{{}}} = {v}\n", 2 * s))
        .collect();
    let json = json!({
        "genus": g,
        "middle": mid,
        "recursion": rec.values.iter().map(|&v| json_count(v)).collect::<Vec<_>>(),
        "enumeration": en.values.iter().map(|&v| json_count(v)).collect::<Vec<_>>(),
        "cross_check": cross.passed,
        "weakly_increasing": monotone,
        "beyond_middle": beyond
            .iter()
            .map(|&(s, e, r)| json!({"s": s, "enumeration": json_count(e), "recursion": json_count(r)}))
            .collect::<Vec<_>>(),
    });
    Ok(Rendered::new(text, latex, json).with_ok(cross.passed))
}

fn report_cache(g: u32, status: &Option<CacheStatus>, log: &mut dyn Write) -> io::Result<()> {
    match status {
        Some(CacheStatus::Hit) => writeln!(log, "cache: genus {g} loaded"),
        Some(CacheStatus::Computed) => writeln!(log, "cache: genus {g} computed and stored"),
        Some(CacheStatus::Recomputed(why)) => writeln!(log, "cache: genus {g} recomputed ({why})"),
        None => Ok(()),
    }
}

fn render_verify(results: &[verify::GenusVerification], format: Format) -> String {
    let all = results.iter().all(|v| v.passed());
    match format {
        Format::Json => json_document(&json!({
            "passed": all,
            "genera": results.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        })),
        Format::Text | Format::Latex => {
            let mut out = String::new();
            let mut count = 0;
            for v in results {
                out.push_str(&format!("genus {}\n", v.genus));
                for c in &v.checks {
                    count += 1;
                    let mark = if c.report.passed { "ok" } else { "FAILED" };
                    out.push_str(&format!("  {:<20} {mark}\n", c.name));
                    for d in &c.report.details {
                        out.push_str(&format!("    {d}\n"));
                    }
                }
            }
            let failed = results
                .iter()
                .flat_map(|v| &v.checks)
                .filter(|c| !c.report.passed)
                .count();
            if all {
                out.push_str(&format!("all {count} checks passed\n"));
            } else {
                out.push_str(&format!("{failed} of {count} checks failed\n"));
            }
            out
        }
    }
}

type PerGenus<'a> = Box<dyn Fn(u32, &mut dyn Write) -> Result<Rendered, CliError> + 'a>;

/// Executes a parsed command, writing results to `out` and cache notices to `log`.
pub fn run(cli: &Cli, out: &mut dyn Write, log: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let format = cli.global.format;
    let cache = cli
        .global
        .cache_dir
        .as_ref()
        .map(BasisCache::open)
        .transpose()?;
    let cache = cache.as_ref();

    let (range, per_genus): (GenusRange, PerGenus) = match &cli.command {
        Verb::Verify(arg) => {
            let results = verify::verify_range(arg.genus.iter(), cache);
            out.write_all(render_verify(&results, format).as_bytes())?;
            let ok = results.iter().all(|v| v.passed());
            return Ok(if ok {
                ExitStatus::Success
            } else {
                ExitStatus::CheckFailed
            });
        }
        Verb::Relations(arg) => (arg.genus, Box::new(|g, _| relations(g))),
        Verb::Betti(arg) => {
            require_genus(arg.genus, 2, "betti")?;
            (arg.genus, Box::new(|g, _| betti(g)))
        }
        Verb::Chern {
            genus,
            target,
            degree,
        } => {
            let (target, degree) = (*target, *degree);
            if target == ChernTarget::Ng {
                require_genus(genus.genus, 2, "chern --target ng")?;
            }
            (genus.genus, Box::new(move |g, _| chern(g, target, degree)))
        }
        Verb::Groebner(arg) => (
            arg.genus,
            Box::new(move |g, log| {
                let (gb, status) = basis_for(g, cache)?;
                report_cache(g, &status, log)?;
                Ok(groebner(g, &gb))
            }),
        ),
        Verb::Basis(arg) => (
            arg.genus,
            Box::new(move |g, log| {
                let (gb, status) = basis_for(g, cache)?;
                report_cache(g, &status, log)?;
                basis(g, &gb)
            }),
        ),
        Verb::Hilbert(arg) => (
            arg.genus,
            Box::new(move |g, log| {
                let (gb, status) = basis_for(g, cache)?;
                report_cache(g, &status, log)?;
                hilbert(g, &gb)
            }),
        ),
        Verb::Nf { genus, poly } => {
            // fail on bad input before any basis is computed
            parse_poly(poly)?;
            (
                genus.genus,
                Box::new(move |g, log| {
                    let (gb, status) = basis_for(g, cache)?;
                    report_cache(g, &status, log)?;
                    normal_form(g, &gb, poly)
                }),
            )
        }
        Verb::Pairing { genus, mono } => {
            parse_monomial(mono)?;
            (
                genus.genus,
                Box::new(move |g, log| {
                    let (gb, status) = basis_for(g, cache)?;
                    report_cache(g, &status, log)?;
                    pairing(g, &gb, mono)
                }),
            )
        }
    };

    let mut parts = Vec::new();
    for g in range.iter() {
        parts.push(per_genus(g, log)?);
    }
    let ok = parts.iter().all(|r| r.ok);
    let body = match format {
        Format::Json if range.is_single() => json_document(&parts[0].json),
        Format::Json => json_document(&Value::Array(parts.into_iter().map(|r| r.json).collect())),
        Format::Text => parts
            .iter()
            .map(|r| r.text.as_str())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => parts
            .iter()
            .map(|r| r.latex.as_str())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    out.write_all(body.as_bytes())?;
    Ok(if ok {
        ExitStatus::Success
    } else {
        ExitStatus::CheckFailed
    })
}

/// Parses `argv`, runs it and returns the process exit code.
pub fn main_with_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                ExitStatus::Usage as i32
            } else {
                ExitStatus::Success as i32
            };
        }
    };
    match run(&cli, out, err) {
        Ok(status) => status as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_status() as i32
        }
    }
}

#[cfg(test)]
mod tests;
