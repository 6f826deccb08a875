use std::fmt::Write as _;
use std::time::Instant;

use log::info;
use relideal::bmoller::{buchberger_moeller, BmResult, PointSet};
use relideal::multipoly::text::parse_poly;
use relideal::padiclift::{self, BoundData};
use relideal::relideal::align::{align_action, AlignOptions};
use relideal::relideal::{
    express_root, reconstruct_basis_observed, verify_basis, ReconstructedBasis, RootExpression, VerifyOptions,
    VerifyReport,
};
use relideal::splitfield::SplitField;
use relideal::{Error, ExactInt, ModRing, MultiPoly, Perm, PermGroup, Rationals, Ring, TriangularBasis, UniPoly};
use serde_json::{json, Value};

use crate::job::{parse_value, GroupSpec, Int, JobSpec};
use crate::{CliError, Output};

/// A verified basis and how it was obtained.
#[derive(Clone, Debug)]
pub struct Computed {
    pub f: UniPoly<Rationals>,
    pub group: PermGroup,
    pub basis: ReconstructedBasis,
    /// Set when the labelling was found by searching rather than given.
    pub alignment: Option<Perm>,
    pub report: VerifyReport,
}

fn basis_lines(b: &TriangularBasis) -> Vec<String> {
    b.polys().iter().map(|p| p.to_string()).collect()
}

fn ints(v: &[ExactInt]) -> Vec<Int> {
    v.iter().map(Int::from_exact).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn report_json(r: &VerifyReport) -> Value {
    json!({
        "passed": r.passed(),
        "second_prime": r.second_prime.as_ref().map(Int::from_exact),
        "second_labeling": r.second_labeling.as_deref().map(ints),
        "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
    })
}

fn report_text(out: &mut String, r: &VerifyReport) {
    if let Some(q) = &r.second_prime {
        writeln!(out, "# second prime = {}", q).unwrap();
    }
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            writeln!(out, "# {}: {}", c.name, status).unwrap();
        } else {
            writeln!(out, "# {}: {} ({})", c.name, status, c.detail).unwrap();
        }
    }
}

fn checked_group(job: &JobSpec, f: &UniPoly<Rationals>) -> Result<PermGroup, CliError> {
    let group = job.group()?;
    let n = f.degree().unwrap_or(0);
    if group.degree() != n {
        return Err(Error::ArityMismatch { expected: n, found: group.degree() }.into());
    }
    Ok(group)
}

fn choose_prime(job: &JobSpec, f: &UniPoly<Rationals>) -> Result<ExactInt, CliError> {
    let t = Instant::now();
    let p = match job.prime()? {
        Some(p) => {
            padiclift::check_split_prime(f, &p)?;
            p
        }
        None => padiclift::find_split_prime(f, &ExactInt::from(3), padiclift::DEFAULT_PRIME_SEARCH_CAP)?,
    };
    info!("prime search: p = {} in {:?}", p, t.elapsed());
    Ok(p)
}

/// Runs the whole pipeline: prime, lift, (alignment,) reconstruction, verification.
pub fn compute(job: &JobSpec) -> Result<Computed, CliError> {
    let f = job.f()?;
    let group = checked_group(job, &f)?;
    let p = choose_prime(job, &f)?;
    let bounds = BoundData::new(&f, group.stab_chain().indices(), &p)?;
    let needed = bounds.exponent();
    let e = match job.precision {
        Some(e) if e < needed => return Err(Error::InsufficientPrecision { needed, have: e }.into()),
        Some(e) => e,
        None => needed,
    };
    let mut alignment = None;
    let labeling = match job.labeling()? {
        Some(l) => l,
        None => {
            let t = Instant::now();
            let rs = padiclift::hensel_lift(&f, &p, 1)?;
            let a = align_action(&f, &group, &rs, &AlignOptions::default())?;
            info!("alignment: {} labellings rejected in {:?}", a.rejected, t.elapsed());
            alignment = Some(a.labeling);
            a.basis.provenance.labeling
        }
    };
    let t = Instant::now();
    let roots = padiclift::lift_labelled(&f, &p, &labeling, e)?;
    info!("lift to {}^{} in {:?}", p, e, t.elapsed());
    let mut t = Instant::now();
    let mut basis = reconstruct_basis_observed(&f, &group, &roots, &mut |i| {
        info!("interpolation of f{} in {:?}", i, t.elapsed());
        t = Instant::now();
    })?;
    basis.provenance.relabeling = alignment.clone();
    let t = Instant::now();
    let report = verify_basis(&basis.basis, &f, &group, &p, &VerifyOptions::default())?;
    info!("verification in {:?}", t.elapsed());
    Ok(Computed { f, group, basis, alignment, report })
}

pub fn render_compute(job: &JobSpec, c: &Computed) -> Output {
    let b = &c.basis;
    let pv = &b.provenance;
    let lines = basis_lines(&b.basis);
    let mut text = String::new();
    for (i, l) in lines.iter().enumerate() {
        writeln!(text, "f{} = {}", i + 1, l).unwrap();
    }
    writeln!(text, "# p = {}", pv.p).unwrap();
    writeln!(text, "# e = {}", pv.e).unwrap();
    writeln!(text, "# degrees = {}", join(b.basis.degrees())).unwrap();
    writeln!(text, "# labeling = {}", join(&pv.labeling)).unwrap();
    if let Some(a) = &c.alignment {
        writeln!(text, "# alignment = {}", join(&a.to_one_based())).unwrap();
    }
    writeln!(text, "# required exponents = {}", join(&pv.bounds.exponents)).unwrap();
    writeln!(text, "# clearing constants = {}", join(&pv.bounds.deltas)).unwrap();
    writeln!(text, "# observed denominators = {}", join(&b.denominators)).unwrap();
    report_text(&mut text, &c.report);
    let json = json!({
        "format": 1,
        "command": "compute",
        "f": job.f.clone(),
        "group": GroupSpec::from_group(&c.group),
        "prime": Int::from_exact(&pv.p),
        "precision": pv.e,
        "labeling": ints(&pv.labeling),
        "degrees": b.basis.degrees(),
        "basis": lines,
        "provenance": {
            "p": Int::from_exact(&pv.p),
            "e": pv.e,
            "gamma": pv.bounds.gamma.to_string(),
            "discriminant": pv.bounds.discriminant.to_string(),
            "deltas": pv.bounds.deltas.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "lambdas": pv.bounds.lambdas.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "exponents": pv.bounds.exponents,
            "denominators": b.denominators.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "alignment": c.alignment.as_ref().map(|a| a.to_one_based()),
            "verification": report_json(&c.report),
        },
    });
    Output { text, json, ok: c.report.passed() }
}

/// The basis from `basis` lines if given, else from the job, else computed.
pub fn obtain_basis(job: &JobSpec) -> Result<TriangularBasis, CliError> {
    let n = job.f().ok().and_then(|f| f.degree());
    if let Some(b) = job.basis(n)? {
        return Ok(b);
    }
    let c = compute(job)?;
    if !c.report.passed() {
        return Err(CliError::input("the computed basis failed verification"));
    }
    Ok(c.basis.basis)
}

pub fn verify(job: &JobSpec) -> Result<Output, CliError> {
    let f = job.f()?;
    let group = checked_group(job, &f)?;
    let basis = job.basis(f.degree())?.ok_or_else(|| CliError::input("no basis to verify"))?;
    let p = choose_prime(job, &f)?;
    let t = Instant::now();
    let report = verify_basis(&basis, &f, &group, &p, &VerifyOptions::default())?;
    info!("verification in {:?}", t.elapsed());
    let mut text = String::new();
    writeln!(text, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
    writeln!(text, "# p = {}", p).unwrap();
    report_text(&mut text, &report);
    let json =
        json!({"format": 1, "command": "verify", "prime": Int::from_exact(&p), "verification": report_json(&report)});
    Ok(Output { text, json, ok: report.passed() })
}

fn bm_output<R: Ring>(res: &BmResult<R>, field: &str) -> Output {
    let g: Vec<String> = res.groebner.iter().map(|p| p.to_string()).collect();
    let o: Vec<String> = res.order_ideal.iter().map(|m| m.to_string()).collect();
    let h: Vec<String> = res.separators.iter().map(|p| p.to_string()).collect();
    let mut text = String::new();
    for l in &g {
        writeln!(text, "{}", l).unwrap();
    }
    writeln!(text, "# field = {}", field).unwrap();
    writeln!(text, "# order ideal = {}", o.join(", ")).unwrap();
    for (k, s) in h.iter().enumerate() {
        writeln!(text, "# h{} = {}", k + 1, s).unwrap();
    }
    let json = json!({"format": 1, "command": "bm", "field": field, "groebner": g, "order_ideal": o, "separators": h});
    Output { text, json, ok: true }
}

/// `{"prime": 5, "n": 2, "points": [[0, 0], [1, 1]]}`; without `prime` the field is ℚ.
pub fn bm(input: &Value) -> Result<Output, CliError> {
    let pts = input["points"].as_array().ok_or_else(|| CliError::input("`points` must be an array"))?;
    let rows: Vec<Vec<relideal::Rational>> = pts
        .iter()
        .map(|p| {
            p.as_array()
                .ok_or_else(|| CliError::input("each point must be an array"))?
                .iter()
                .map(parse_value)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = match input.get("n").and_then(Value::as_u64) {
        Some(n) => n as usize,
        None => rows.first().map_or(0, Vec::len),
    };
    let t = Instant::now();
    let out = match input.get("prime").filter(|v| !v.is_null()) {
        None => {
            let res = buchberger_moeller(&PointSet::new(Rationals, n, rows)?)?;
            bm_output(&res, "Q")
        }
        Some(v) => {
            let p: Int = serde_json::from_value(v.clone()).map_err(|e| CliError::input(e.to_string()))?;
            let p = p.to_exact()?;
            if !relideal::exactring::is_prime(&p) {
                return Err(Error::BadPrime { p: p.to_string(), reason: "not prime".into() }.into());
            }
            let ring = ModRing::new(&p, 1)?;
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|c| ring.from_rational(c)).collect())
                .collect::<relideal::Result<_>>()?;
            let res = buchberger_moeller(&PointSet::new(ring, n, rows)?)?;
            bm_output(&res, &format!("F_{}", p))
        }
    };
    info!("Buchberger-Moeller on {} points in {:?}", pts.len(), t.elapsed());
    Ok(out)
}

fn element(b: &TriangularBasis, s: &str) -> Result<MultiPoly<Rationals>, CliError> {
    Ok(parse_poly(s, Some(b.n()))?)
}

pub fn reduce(job: &JobSpec, poly: &str) -> Result<Output, CliError> {
    let b = obtain_basis(job)?;
    let nf = b.normal_form(&element(&b, poly)?)?.to_string();
    Ok(Output {
        text: format!("{}\n", nf),
        json: json!({"format": 1, "command": "reduce", "input": poly, "normal_form": nf}),
        ok: true,
    })
}

pub fn inv(job: &JobSpec, poly: &str) -> Result<Output, CliError> {
    let b = obtain_basis(job)?;
    let field = SplitField::new(b.clone());
    let a = field.elem(&element(&b, poly)?)?;
    let r = a.inv()?.to_string();
    Ok(Output {
        text: format!("{}\n", r),
        json: json!({"format": 1, "command": "inv", "input": poly, "inverse": r}),
        ok: true,
    })
}

/// One index, or every index when `index` is `None`.
pub fn express(job: &JobSpec, index: Option<usize>) -> Result<Output, CliError> {
    let b = obtain_basis(job)?;
    let idx: Vec<usize> = match index {
        Some(i) => vec![i],
        None => (1..=b.n()).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for i in idx {
        match express_root(&b, i)? {
            RootExpression::Polynomial(p) => {
                writeln!(text, "T{} = {}", i, p).unwrap();
                rows.push(json!({"index": i, "expressible": true, "polynomial": p.to_string()}));
            }
            RootExpression::NotExpressible { degree } => {
                writeln!(text, "# T{} is not a polynomial in the earlier roots (degree {})", i, degree).unwrap();
                rows.push(json!({"index": i, "expressible": false, "degree": degree}));
            }
        }
    }
    Ok(Output { text, json: json!({"format": 1, "command": "express", "roots": rows}), ok: true })
}
