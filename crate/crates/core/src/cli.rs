//! Command orchestration behind the `lll-census` binary.
//!
//! All numeric output is the natural log of the quantity (`*_ln` fields)
//! since the raw counts overflow doubles past n ≈ 30; a `log10_floor`
//! convenience field gives the base-10 exponent. Sweeps may run points in
//! parallel but the merged output is always in ascending n.

use std::f64::consts::LN_10;

use rayon::prelude::*;

use crate::analysis::{self, BoundsReport};
use crate::census::{self, ReductionParams};
use crate::error::{Error, Result};
use crate::report::{fmt_f64, to_csv, Value};
use crate::verify::{self, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Bounds,
    Approx,
    Verify,
    Sweep,
    Audit,
}

impl Command {
    fn as_str(&self) -> &'static str {
        match self {
            Command::Compute => "compute",
            Command::Bounds => "bounds",
            Command::Approx => "approx",
            Command::Verify => "verify",
            Command::Sweep => "sweep",
            Command::Audit => "audit",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub n: Option<u32>,
    pub n_min: Option<u32>,
    pub n_max: Option<u32>,
    pub eta: f64,
    pub delta: f64,
    pub c: f64,
    pub tol: f64,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    pub allow_relaxed_domain: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            n: None,
            n_min: None,
            n_max: None,
            eta: 0.51,
            delta: 0.99,
            c: analysis::DEFAULT_TIGHT_C,
            tol: 1e-6,
            format: OutputFormat::Plain,
            jobs: None,
            allow_relaxed_domain: false,
        }
    }
}

/// A finished run: the serialized report plus the process exit code
/// (0 success, 2 when verification items failed; invalid input surfaces as
/// an `Err` and exits 1).
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub rendered: String,
    pub exit_code: i32,
}

// Intermediate rows, assembled single-threaded into whichever format was
// requested.
struct Assembled {
    params: Vec<(&'static str, Value)>,
    results: Vec<Value>,
    warnings: Vec<String>,
    csv_header: Vec<&'static str>,
    csv_rows: Vec<Vec<String>>,
    plain: Vec<String>,
    exit_code: i32,
}

pub fn run(cfg: &RunConfig) -> Result<RunOutcome> {
    validate(cfg)?;
    let assembled = match cfg.command {
        Command::Compute | Command::Sweep => run_compute(cfg)?,
        Command::Bounds => run_bounds(cfg)?,
        Command::Approx => run_approx(cfg)?,
        Command::Verify => run_verify(cfg)?,
        Command::Audit => run_audit(),
    };
    let rendered = match cfg.format {
        OutputFormat::Json => render_json(cfg, &assembled),
        OutputFormat::Csv => to_csv(&assembled.csv_header, &assembled.csv_rows),
        OutputFormat::Plain => {
            let mut lines = assembled.plain.clone();
            for w in &assembled.warnings {
                lines.push(format!("warning: {w}"));
            }
            lines.join("\n") + "\n"
        }
    };
    Ok(RunOutcome {
        rendered,
        exit_code: assembled.exit_code,
    })
}

fn validate(cfg: &RunConfig) -> Result<()> {
    // NaN fails this gate too
    if !(cfg.tol.is_finite() && cfg.tol > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "tol must be positive, got {}",
            cfg.tol
        )));
    }
    match cfg.command {
        Command::Compute | Command::Bounds | Command::Approx => {
            if cfg.n.is_none() {
                return Err(Error::InvalidConfig("--n is required".into()));
            }
        }
        Command::Sweep => {
            let (lo, hi) = (cfg.n_min, cfg.n_max);
            match (lo, hi) {
                (Some(lo), Some(hi)) if lo <= hi => {}
                _ => {
                    return Err(Error::InvalidConfig(
                        "--n-min and --n-max must form a nonempty ascending range".into(),
                    ))
                }
            }
        }
        Command::Verify => {
            if cfg.n_max.is_none() {
                return Err(Error::InvalidConfig("--n-max is required".into()));
            }
        }
        Command::Audit => {}
    }
    Ok(())
}

// Builds parameters, enforcing the standard domain unless explicitly
// relaxed; returns the warning to attach when relaxed.
fn make_params(cfg: &RunConfig, n: u32) -> Result<(ReductionParams, Option<String>)> {
    let p = ReductionParams::new(n, cfg.eta, cfg.delta)?;
    if p.in_definition_domain() {
        Ok((p, None))
    } else if cfg.allow_relaxed_domain {
        Ok((
            p,
            Some(format!(
                "n = {n}: parameters are outside the standard domain \
                 (1/2 < delta < 1, 1/2 < eta < delta); values are formula-level"
            )),
        ))
    } else {
        Err(Error::InvalidConfig(format!(
            "eta = {}, delta = {} are outside the standard domain \
             (1/2 < delta < 1, 1/2 < eta < delta); pass --allow-relaxed-domain to evaluate anyway",
            cfg.eta, cfg.delta
        )))
    }
}

fn param_fields(cfg: &RunConfig) -> Vec<(&'static str, Value)> {
    let mut fields: Vec<(&'static str, Value)> = Vec::new();
    match cfg.command {
        Command::Compute | Command::Bounds | Command::Approx => {
            fields.push(("n", Value::Int(i64::from(cfg.n.unwrap_or(0)))));
        }
        Command::Sweep => {
            fields.push(("n_min", Value::Int(i64::from(cfg.n_min.unwrap_or(0)))));
            fields.push(("n_max", Value::Int(i64::from(cfg.n_max.unwrap_or(0)))));
        }
        Command::Verify => {
            fields.push(("n_max", Value::Int(i64::from(cfg.n_max.unwrap_or(0)))));
        }
        Command::Audit => return fields,
    }
    fields.push(("eta", Value::Num(cfg.eta)));
    fields.push(("delta", Value::Num(cfg.delta)));
    if cfg.command == Command::Approx {
        fields.push(("c", Value::Num(cfg.c)));
    }
    if cfg.command == Command::Verify {
        fields.push(("tol", Value::Num(cfg.tol)));
    }
    fields
}

fn render_json(cfg: &RunConfig, a: &Assembled) -> String {
    let v = Value::Obj(vec![
        ("command", Value::str(cfg.command.as_str())),
        ("params", Value::Obj(a.params.clone())),
        ("results", Value::Arr(a.results.clone())),
        (
            "warnings",
            Value::Arr(a.warnings.iter().map(Value::str).collect()),
        ),
    ]);
    v.to_json() + "\n"
}

struct ComputeRow {
    n: u32,
    direct_ln: f64,
    xi_ln: f64,
    normalized_ln: f64,
    regime: &'static str,
    warning: Option<String>,
}

fn compute_row(cfg: &RunConfig, n: u32) -> Result<ComputeRow> {
    let (p, warning) = make_params(cfg, n)?;
    Ok(ComputeRow {
        n,
        direct_ln: census::log_count_direct(&p)?,
        xi_ln: census::log_count_xi(&p)?,
        normalized_ln: census::normalized_log_count(&p)?,
        regime: p.regime().as_str(),
        warning,
    })
}

fn run_compute(cfg: &RunConfig) -> Result<Assembled> {
    let ns: Vec<u32> = match cfg.command {
        Command::Compute => vec![cfg.n.expect("validated")],
        _ => (cfg.n_min.expect("validated")..=cfg.n_max.expect("validated")).collect(),
    };
    // sweep points are independent; order is restored by sorting on n
    let mut rows: Vec<ComputeRow> = if ns.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs.unwrap_or(0))
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
        pool.install(|| {
            ns.par_iter()
                .map(|&n| compute_row(cfg, n))
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        ns.iter()
            .map(|&n| compute_row(cfg, n))
            .collect::<Result<Vec<_>>>()?
    };
    rows.sort_by_key(|r| r.n);

    let mut a = Assembled {
        params: param_fields(cfg),
        results: Vec::new(),
        warnings: Vec::new(),
        csv_header: vec![
            "n",
            "direct_ln",
            "xi_ln",
            "normalized_ln",
            "log10_floor",
            "regime",
        ],
        csv_rows: Vec::new(),
        plain: Vec::new(),
        exit_code: 0,
    };
    for r in rows {
        let log10_floor = (r.xi_ln / LN_10).floor() as i64;
        a.results.push(Value::Obj(vec![
            ("n", Value::Int(i64::from(r.n))),
            ("direct_ln", Value::Num(r.direct_ln)),
            ("xi_ln", Value::Num(r.xi_ln)),
            ("normalized_ln", Value::Num(r.normalized_ln)),
            ("log10_floor", Value::Int(log10_floor)),
            ("regime", Value::str(r.regime)),
        ]));
        a.csv_rows.push(vec![
            r.n.to_string(),
            fmt_f64(r.direct_ln),
            fmt_f64(r.xi_ln),
            fmt_f64(r.normalized_ln),
            log10_floor.to_string(),
            r.regime.to_owned(),
        ]);
        a.plain.push(format!(
            "n = {}: ln count = {} (direct {}), normalized_ln = {}, ~10^{}, regime {}",
            r.n,
            fmt_f64(r.xi_ln),
            fmt_f64(r.direct_ln),
            fmt_f64(r.normalized_ln),
            log10_floor,
            r.regime
        ));
        if let Some(w) = r.warning {
            a.warnings.push(w);
        }
    }
    Ok(a)
}

fn bounds_json(rep: &BoundsReport) -> Value {
    let mut fields = vec![
        ("kind", Value::str(rep.kind.as_str())),
        ("lower_ln", Value::Num(rep.lower.ln_abs())),
        (
            "exact_ln",
            rep.exact
                .map(|e| Value::Num(e.ln_abs()))
                .unwrap_or(Value::str("")),
        ),
        ("upper_ln", Value::Num(rep.upper.ln_abs())),
        ("sandwich_ok", Value::Bool(rep.sandwich_ok)),
        ("regime", Value::str(rep.regime.as_str())),
    ];
    if let Some(note) = &rep.failure_note {
        fields.push(("failure_note", Value::str(note.clone())));
    }
    Value::Obj(fields)
}

fn run_bounds(cfg: &RunConfig) -> Result<Assembled> {
    let n = cfg.n.expect("validated");
    let (p, warning) = make_params(cfg, n)?;

    let mut reports: Vec<BoundsReport> = Vec::new();
    let mut warnings: Vec<String> = warning.into_iter().collect();
    reports.push(analysis::xi_prefactor_bounds_log(n, cfg.eta)?);
    reports.push(analysis::int_product_bounds_log(&p)?);
    reports.push(analysis::int_product_bounds_simplified_log(&p)?);
    reports.push(analysis::combined_bounds_log(&p)?);
    match analysis::restricted_bounds_log(&p) {
        Ok(rep) => reports.push(rep),
        Err(Error::RegimeViolation { required, .. }) => warnings.push(format!(
            "restricted bounds skipped: parameters outside the restricted regime ({required})"
        )),
        Err(e) => return Err(e),
    }

    let mut a = Assembled {
        params: param_fields(cfg),
        results: Vec::new(),
        warnings,
        csv_header: vec![
            "n",
            "kind",
            "lower_ln",
            "exact_ln",
            "upper_ln",
            "sandwich_ok",
            "regime",
            "failure_note",
        ],
        csv_rows: Vec::new(),
        plain: Vec::new(),
        exit_code: 0,
    };
    let mut bound_values = Vec::new();
    for rep in &reports {
        bound_values.push(bounds_json(rep));
        let exact_str = rep.exact.map(|e| fmt_f64(e.ln_abs())).unwrap_or_default();
        a.csv_rows.push(vec![
            n.to_string(),
            rep.kind.as_str().to_owned(),
            fmt_f64(rep.lower.ln_abs()),
            exact_str.clone(),
            fmt_f64(rep.upper.ln_abs()),
            rep.sandwich_ok.to_string(),
            rep.regime.as_str().to_owned(),
            rep.failure_note.clone().unwrap_or_default(),
        ]);
        a.plain.push(format!(
            "n = {}: {} bounds_ln [{}, {}], exact_ln {}, sandwich {}{}",
            n,
            rep.kind.as_str(),
            fmt_f64(rep.lower.ln_abs()),
            fmt_f64(rep.upper.ln_abs()),
            exact_str,
            if rep.sandwich_ok { "ok" } else { "FAILED" },
            rep.failure_note
                .as_ref()
                .map(|s| format!(" ({s})"))
                .unwrap_or_default()
        ));
    }
    a.results.push(Value::Obj(vec![
        ("n", Value::Int(i64::from(n))),
        ("bounds", Value::Arr(bound_values)),
    ]));
    Ok(a)
}

fn run_approx(cfg: &RunConfig) -> Result<Assembled> {
    let n = cfg.n.expect("validated");
    let (p, warning) = make_params(cfg, n)?;
    let rough_ln = analysis::rough_approx_log(&p)?;
    let tight_ln = analysis::tight_approx_log(&p, cfg.c)?;
    let ratio = analysis::asymptotic_ratio(&p)?;

    let mut a = Assembled {
        params: param_fields(cfg),
        results: vec![Value::Obj(vec![
            ("n", Value::Int(i64::from(n))),
            ("rough_ln", Value::Num(rough_ln)),
            ("tight_ln", Value::Num(tight_ln)),
            ("c", Value::Num(cfg.c)),
            ("ratio", Value::Num(ratio)),
            ("regime", Value::str(p.regime().as_str())),
        ])],
        warnings: warning.into_iter().collect(),
        csv_header: vec!["n", "rough_ln", "tight_ln", "c", "ratio", "regime"],
        csv_rows: vec![vec![
            n.to_string(),
            fmt_f64(rough_ln),
            fmt_f64(tight_ln),
            fmt_f64(cfg.c),
            fmt_f64(ratio),
            p.regime().as_str().to_owned(),
        ]],
        plain: vec![format!(
            "n = {}: rough_ln = {}, tight_ln = {} (c = {}), ratio rough/exact = {}",
            n,
            fmt_f64(rough_ln),
            fmt_f64(tight_ln),
            fmt_f64(cfg.c),
            fmt_f64(ratio)
        )],
        exit_code: 0,
    };
    a.plain.push(format!("regime: {}", p.regime().as_str()));
    Ok(a)
}

fn run_verify(cfg: &RunConfig) -> Result<Assembled> {
    // verify exercises the general domain on purpose; the relaxed-domain
    // gate applies to evaluation commands only
    let vcfg = VerifyConfig {
        eta: cfg.eta,
        delta: cfg.delta,
        n_max: cfg.n_max.expect("validated"),
        tol: cfg.tol,
    };
    let outcomes = verify::run_suite(&vcfg)?;
    let any_failed = outcomes.iter().any(|o| !o.pass());

    let mut a = Assembled {
        params: param_fields(cfg),
        results: Vec::new(),
        warnings: Vec::new(),
        csv_header: vec!["check", "points", "failures", "pass"],
        csv_rows: Vec::new(),
        plain: Vec::new(),
        exit_code: if any_failed { 2 } else { 0 },
    };
    for o in &outcomes {
        a.results.push(Value::Obj(vec![
            ("check", Value::str(o.name)),
            ("points", Value::Int(o.points as i64)),
            ("failures", Value::Int(o.failures as i64)),
            ("pass", Value::Bool(o.pass())),
            (
                "details",
                Value::Arr(o.details.iter().map(Value::str).collect()),
            ),
        ]));
        a.csv_rows.push(vec![
            o.name.to_owned(),
            o.points.to_string(),
            o.failures.to_string(),
            o.pass().to_string(),
        ]);
        a.plain.push(format!(
            "{}: {} points, {} failures -> {}",
            o.name,
            o.points,
            o.failures,
            if o.pass() { "pass" } else { "FAIL" }
        ));
        for d in &o.details {
            a.plain.push(format!("    {d}"));
        }
    }
    a.plain.push(format!(
        "verification {}",
        if any_failed { "FAILED" } else { "passed" }
    ));
    Ok(a)
}

fn run_audit() -> Assembled {
    let report = analysis::constant_audit();
    let mut a = Assembled {
        params: Vec::new(),
        results: Vec::new(),
        warnings: Vec::new(),
        csv_header: vec!["name", "published", "recomputed", "deviation", "flagged"],
        csv_rows: Vec::new(),
        plain: Vec::new(),
        exit_code: 0,
    };
    for e in &report.entries {
        let mut fields = vec![
            ("name", Value::str(e.name)),
            ("published", Value::Num(e.published)),
            ("recomputed", Value::Num(e.recomputed)),
            ("deviation", Value::Num(e.deviation)),
            ("flagged", Value::Bool(e.flagged)),
        ];
        if let Some(note) = e.note {
            fields.push(("note", Value::str(note)));
        }
        a.results.push(Value::Obj(fields));
        a.csv_rows.push(vec![
            e.name.to_owned(),
            fmt_f64(e.published),
            fmt_f64(e.recomputed),
            fmt_f64(e.deviation),
            e.flagged.to_string(),
        ]);
        a.plain.push(format!(
            "{}: published {} recomputed {} deviation {}{}",
            e.name,
            fmt_f64(e.published),
            fmt_f64(e.recomputed),
            fmt_f64(e.deviation),
            if e.flagged { " FLAGGED" } else { "" }
        ));
    }
    if report.any_flagged() {
        a.warnings.push(format!(
            "one or more audited constants deviate by more than {} from their recomputed \
             closed forms; bound formulas keep using the published values",
            report.flag_threshold
        ));
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command) -> RunConfig {
        RunConfig::new(command)
    }

    #[test]
    fn compute_anchor_point() {
        let mut c = cfg(Command::Compute);
        c.n = Some(2);
        c.eta = 0.3;
        c.delta = 0.6;
        c.allow_relaxed_domain = true;
        c.format = OutputFormat::Json;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 0);
        // ln 4 = 1.3862943611198906...
        assert!(
            out.rendered.contains("1.38629436111989"),
            "{}",
            out.rendered
        );
        assert!(out.rendered.contains("\"warnings\":[\"n = 2"));
    }

    #[test]
    fn compute_requires_domain_or_flag() {
        let mut c = cfg(Command::Compute);
        c.n = Some(2);
        c.eta = 0.3;
        c.delta = 0.6;
        let err = run(&c);
        assert!(matches!(err, Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn json_output_is_byte_identical() {
        let mut c = cfg(Command::Sweep);
        c.n_min = Some(22);
        c.n_max = Some(26);
        c.format = OutputFormat::Json;
        let a = run(&c).unwrap().rendered;
        let b = run(&c).unwrap().rendered;
        assert_eq!(a, b);
    }

    #[test]
    fn sweep_is_ascending_regardless_of_jobs() {
        let mut c = cfg(Command::Sweep);
        c.n_min = Some(22);
        c.n_max = Some(30);
        c.format = OutputFormat::Csv;
        c.jobs = Some(4);
        let out = run(&c).unwrap().rendered;
        let ns: Vec<u32> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        let mut sorted = ns.clone();
        sorted.sort_unstable();
        assert_eq!(ns, sorted);

        c.jobs = Some(1);
        let serial = run(&c).unwrap().rendered;
        assert_eq!(out, serial);
    }

    #[test]
    fn csv_and_json_encode_identical_numbers() {
        let mut c = cfg(Command::Compute);
        c.n = Some(25);
        c.format = OutputFormat::Csv;
        let csv = run(&c).unwrap().rendered;
        c.format = OutputFormat::Json;
        let json = run(&c).unwrap().rendered;
        // every numeric field of the csv row appears verbatim in the json
        let row = csv.lines().nth(1).unwrap();
        for field in row.split(',').skip(1).take(3) {
            assert!(json.contains(field), "field {field} missing from json");
        }
    }

    #[test]
    fn bounds_skips_restricted_outside_regime() {
        let mut c = cfg(Command::Bounds);
        c.n = Some(22);
        c.eta = 0.54; // above 3/(4*sqrt(2))
        c.format = OutputFormat::Json;
        let out = run(&c).unwrap();
        assert!(out.rendered.contains("restricted bounds skipped"));
        assert!(out.rendered.contains("\"kind\":\"combined\""));
    }

    #[test]
    fn approx_requires_restricted_regime() {
        let mut c = cfg(Command::Approx);
        c.n = Some(22);
        c.eta = 0.54;
        let err = run(&c);
        assert!(matches!(err, Err(Error::RegimeViolation { .. })));
    }

    #[test]
    fn verify_exit_codes() {
        let mut c = cfg(Command::Verify);
        c.n_max = Some(25);
        c.tol = 1e-6;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 0);

        // absurd tolerance forces the consistency item to fail -> exit 2
        c.tol = 1e-30;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn audit_report_contents() {
        let mut c = cfg(Command::Audit);
        c.format = OutputFormat::Json;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.rendered.contains("\"name\":\"xi_prod_2_5\""));
        assert!(out.rendered.contains("\"published\":1.8591451053595101e0"));
        assert!(out.rendered.contains("\"flagged\":true"));
    }

    #[test]
    fn invalid_range_rejected() {
        let mut c = cfg(Command::Sweep);
        c.n_min = Some(30);
        c.n_max = Some(22);
        assert!(matches!(run(&c), Err(Error::InvalidConfig(_))));
        let mut c = cfg(Command::Compute);
        c.n = None;
        assert!(matches!(run(&c), Err(Error::InvalidConfig(_))));
    }
}
