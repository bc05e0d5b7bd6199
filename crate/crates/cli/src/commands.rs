//! Report builders behind each subcommand. Every builder returns the
//! finished report body (CSV or JSON, trailing newline included) together
//! with the exit code its checks earned; argument and range validation
//! happens here so the thin layer above stays format-free.

use rayon::prelude::*;
use serde::Serialize;
use susy_spheroidal::engine::{build_series, GroundState, PerturbationSeries};
use susy_spheroidal::identities;
use susy_spheroidal::oracle::{normalized_l2_distance, solve_ground, OracleOptions};

use crate::decimal::decimal17;
use crate::{CmdError, CommandOutput, Format};

/// Hard ceiling on exact-series order: beyond this the rational
/// arithmetic grows without a matching use case.
const MAX_ORDER: u32 = 64;
/// Ceiling for the superpotential maxima scan, which refines each order's
/// profile numerically.
const MAX_ORDER_MAXW: u32 = 16;
/// Ceiling on the azimuthal index in table-producing commands.
const MAX_M: u32 = 64;
/// Baseline convergence tolerance of the adaptive spectral solve.
const ORACLE_TOL: f64 = 1e-12;
/// Interval half-width for x in residual scans, and its sample count.
const RESIDUAL_SPAN: f64 = 0.9;
const RESIDUAL_SAMPLES: usize = 181;
/// Quadrature size for eigenfunction distances.
const DISTANCE_NODES: usize = 160;

// ---------------------------------------------------------------------------
// series

#[derive(Serialize)]
struct SeriesDoc {
    m: u32,
    order: u32,
    #[serde(rename = "twoE00")]
    two_e00: String,
    #[serde(rename = "twoE00_decimal")]
    two_e00_decimal: String,
    terms: Vec<TermDoc>,
}

#[derive(Serialize)]
struct TermDoc {
    n: u32,
    #[serde(rename = "P")]
    p: Vec<String>,
    #[serde(rename = "twoE0n")]
    two_e0n: String,
    #[serde(rename = "twoE0n_decimal")]
    two_e0n_decimal: String,
}

pub fn series(m: u32, order: u32, format: Format) -> Result<CommandOutput, CmdError> {
    check_order(order, MAX_ORDER)?;
    let series = build(m, order)?;
    let terms: Vec<TermDoc> = (1..=order)
        .map(|n| {
            let term = series.term(n);
            TermDoc {
                n,
                p: term.factor.coeffs().iter().map(|c| c.to_string()).collect(),
                two_e0n: term.energy_coeff.to_string(),
                two_e0n_decimal: decimal17(&term.energy_coeff),
            }
        })
        .collect();
    let seed = series.energy_coeff(0);
    let content = match format {
        Format::Json => {
            let doc = SeriesDoc {
                m,
                order,
                two_e00: seed.to_string(),
                two_e00_decimal: decimal17(&seed),
                terms,
            };
            json(&doc)
        }
        Format::Csv => {
            let mut rows = vec![format!("0,{},{},", seed, decimal17(&seed))];
            rows.extend(terms.iter().map(|t| {
                format!("{},{},{},{}", t.n, t.two_e0n, t.two_e0n_decimal, t.p.join(" "))
            }));
            csv("n,twoE0n,twoE0n_decimal,P", rows)
        }
    };
    Ok(CommandOutput { content, exit: 0 })
}

// ---------------------------------------------------------------------------
// eval

#[derive(Serialize)]
struct EvalDoc {
    m: u32,
    order: u32,
    alpha: f64,
    eigenvalue: f64,
    grid: Vec<GridPoint>,
}

#[derive(Serialize)]
struct GridPoint {
    x: f64,
    theta0: f64,
}

pub fn eval(m: u32, order: u32, alpha: f64, grid: usize, format: Format) -> Result<CommandOutput, CmdError> {
    check_order(order, MAX_ORDER)?;
    if grid < 1 {
        return Err(CmdError::Usage("grid must be at least 1".into()));
    }
    let series = build(m, order)?;
    let state = GroundState::new(&series, alpha, order);
    let points: Vec<GridPoint> = (0..=grid)
        .map(|i| {
            let x = (2 * i) as f64 / grid as f64 - 1.0;
            GridPoint { x, theta0: state.theta0(x) }
        })
        .collect();
    let content = match format {
        Format::Json => json(&EvalDoc {
            m,
            order,
            alpha,
            eigenvalue: state.eigenvalue(),
            grid: points,
        }),
        Format::Csv => csv(
            "x,theta0",
            points.iter().map(|p| format!("{},{}", num(p.x), num(p.theta0))),
        ),
    };
    Ok(CommandOutput { content, exit: 0 })
}

// ---------------------------------------------------------------------------
// validate

#[derive(Serialize)]
struct ValidateDoc {
    m: u32,
    order: u32,
    rows: Vec<ValidateRow>,
    /// Log-log slope of |E_series - E_oracle| vs |alpha|; present only
    /// with at least three usable nonzero-alpha rows.
    slope: Option<f64>,
    slope_window: [f64; 2],
    slope_pass: Option<bool>,
    pass: bool,
}

#[derive(Serialize)]
struct ValidateRow {
    alpha: f64,
    e_series: f64,
    e_oracle: Option<f64>,
    abs_error: Option<f64>,
    l2_distance: Option<f64>,
    ode_residual: f64,
    /// Largest |E_series - E_oracle| accepted for this row.
    bound: f64,
    status: String,
}

pub fn validate(
    m: u32,
    order: u32,
    alphas: &[f64],
    force: bool,
    k_cap: Option<usize>,
    format: Format,
    precision: f64,
) -> Result<CommandOutput, CmdError> {
    check_order(order, MAX_ORDER)?;
    check_alphas(alphas, force)?;
    let options = oracle_options(None, k_cap, precision)?;

    // One extra order: the first neglected coefficient calibrates how
    // much series-vs-spectral disagreement each alpha may show.
    let series = build(m, order + 1)?;
    let t_next = series.energy_coeff(order + 1).to_f64().abs();

    let rows: Vec<ValidateRow> = alphas
        .par_iter()
        .map(|&alpha| {
            let e_series = series.eigenvalue(alpha, order);
            let state = GroundState::new(&series, alpha, order);
            let ode_residual =
                state.ode_residual_sup(-RESIDUAL_SPAN, RESIDUAL_SPAN, RESIDUAL_SAMPLES);
            let bound = row_bound(alpha, order, t_next, e_series, precision);
            match solve_ground(m, alpha, &options) {
                Ok(result) => {
                    let e_oracle = result.eigenvalue;
                    let abs_error = (e_series - e_oracle).abs();
                    let function = result.eigenfunction(m);
                    let l2 = normalized_l2_distance(
                        |x| state.theta0(x),
                        |x| function.eval(x),
                        DISTANCE_NODES,
                    );
                    let status = if abs_error <= bound { "pass" } else { "fail" };
                    ValidateRow {
                        alpha,
                        e_series,
                        e_oracle: Some(e_oracle),
                        abs_error: Some(abs_error),
                        l2_distance: Some(l2),
                        ode_residual,
                        bound,
                        status: status.into(),
                    }
                }
                Err(_) => ValidateRow {
                    alpha,
                    e_series,
                    e_oracle: None,
                    abs_error: None,
                    l2_distance: None,
                    ode_residual,
                    bound,
                    status: "no-convergence".into(),
                },
            }
        })
        .collect();

    let window = [order as f64 + 0.7, order as f64 + 1.3];
    let fit_points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.alpha != 0.0)
        .filter_map(|r| r.abs_error.map(|e| (r.alpha.abs(), e)))
        .filter(|&(_, e)| e > 0.0)
        .map(|(a, e)| (a.ln(), e.ln()))
        .collect();
    let slope = if fit_points.len() >= 3 { Some(fitted_slope(&fit_points)) } else { None };
    let slope_pass = slope.map(|s| s >= window[0] && s <= window[1]);

    let any_unconverged = rows.iter().any(|r| r.status == "no-convergence");
    let rows_pass = rows.iter().all(|r| r.status == "pass") && slope_pass != Some(false);
    let exit = if any_unconverged {
        4
    } else if rows_pass {
        0
    } else {
        2
    };

    let content = match format {
        Format::Json => json(&ValidateDoc {
            m,
            order,
            rows,
            slope,
            slope_window: window,
            slope_pass,
            pass: rows_pass && !any_unconverged,
        }),
        Format::Csv => {
            let mut lines: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{},{},{}",
                        num(r.alpha),
                        num(r.e_series),
                        opt_num(r.e_oracle),
                        opt_sci(r.abs_error),
                        opt_sci(r.l2_distance),
                        sci(r.ode_residual),
                        sci(r.bound),
                        r.status
                    )
                })
                .collect();
            lines.push(format!("slope,{},,,,,,", slope.map(sci).unwrap_or_default()));
            csv(
                "alpha,e_series,e_oracle,abs_error,l2_distance,ode_residual,bound,status",
                lines,
            )
        }
    };
    Ok(CommandOutput { content, exit })
}

/// Acceptable |E_series - E_oracle| for one row: five times the first
/// neglected term, floored well above solver resolution. An exact-limit
/// row (alpha = 0) must agree to solver resolution outright.
fn row_bound(alpha: f64, order: u32, t_next: f64, e_series: f64, precision: f64) -> f64 {
    let scale = e_series.abs().max(1.0);
    if alpha == 0.0 {
        1e-13 * scale * precision
    } else {
        let leading = 5.0 * t_next * alpha.abs().powi(order as i32 + 1);
        leading.max(1e-12 * scale * precision)
    }
}

// ---------------------------------------------------------------------------
// identities

#[derive(Serialize)]
struct IdentitiesDoc {
    m_max: u32,
    all_pass: bool,
    rows: Vec<IdentityRow>,
}

#[derive(Serialize)]
struct IdentityRow {
    family: String,
    m: u32,
    l: i64,
    value: String,
    expected: String,
    pass: bool,
}

pub fn identities(m_max: u32, format: Format) -> Result<CommandOutput, CmdError> {
    if m_max > MAX_M {
        return Err(CmdError::Usage(format!("m-max must be at most {MAX_M}, got {m_max}")));
    }
    let rows: Vec<IdentityRow> = identities::report(m_max)
        .into_iter()
        .map(|r| IdentityRow {
            family: r.family,
            m: r.m,
            l: r.l,
            value: r.value.to_string(),
            expected: r.expected.to_string(),
            pass: r.pass,
        })
        .collect();
    let all_pass = rows.iter().all(|r| r.pass);
    let content = match format {
        Format::Json => json(&IdentitiesDoc { m_max, all_pass, rows }),
        Format::Csv => csv(
            "family,m,l,value,expected,pass",
            rows.iter().map(|r| {
                format!("{},{},{},{},{},{}", r.family, r.m, r.l, r.value, r.expected, r.pass)
            }),
        ),
    };
    Ok(CommandOutput { content, exit: if all_pass { 0 } else { 2 } })
}

// ---------------------------------------------------------------------------
// maxw

#[derive(Serialize)]
struct MaxwDoc {
    m: u32,
    order: u32,
    /// True when the maxima strictly decrease over the whole range.
    monotone: bool,
    rows: Vec<MaxwRow>,
}

#[derive(Serialize)]
struct MaxwRow {
    n: u32,
    max_abs_w: f64,
    /// True while every maximum so far strictly decreased.
    monotone_prefix: bool,
}

pub fn maxw(m: u32, order: u32, format: Format) -> Result<CommandOutput, CmdError> {
    check_order(order, MAX_ORDER_MAXW)?;
    let series = build(m, order)?;
    let mut rows = Vec::with_capacity(order as usize);
    let mut previous = f64::INFINITY;
    let mut monotone = true;
    for n in 1..=order {
        let value = series.max_abs_w(n);
        monotone = monotone && value < previous;
        rows.push(MaxwRow { n, max_abs_w: value, monotone_prefix: monotone });
        previous = value;
    }
    let content = match format {
        Format::Json => json(&MaxwDoc { m, order, monotone, rows }),
        Format::Csv => csv(
            "n,max_abs_w,monotone_prefix",
            rows.iter().map(|r| format!("{},{},{}", r.n, sci(r.max_abs_w), r.monotone_prefix)),
        ),
    };
    // Observational report: the trend is stated, never enforced.
    Ok(CommandOutput { content, exit: 0 })
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Serialize)]
struct SweepDoc {
    m_max: u32,
    order: u32,
    converged: bool,
    rows: Vec<SweepRow>,
}

#[derive(Serialize)]
struct SweepRow {
    m: u32,
    alpha: f64,
    e_series: f64,
    e_oracle: Option<f64>,
    abs_error: Option<f64>,
    status: String,
}

pub fn sweep(
    m_max: u32,
    order: u32,
    alphas: &[f64],
    force: bool,
    k_cap: Option<usize>,
    format: Format,
    precision: f64,
) -> Result<CommandOutput, CmdError> {
    check_order(order, MAX_ORDER)?;
    if m_max > MAX_M {
        return Err(CmdError::Usage(format!("m-max must be at most {MAX_M}, got {m_max}")));
    }
    check_alphas(alphas, force)?;
    let options = oracle_options(None, k_cap, precision)?;

    // The exact builds are shared across the alpha axis; the cells then
    // solve independently and are reassembled in deterministic order.
    let mut all_series = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        all_series.push(build(m, order)?);
    }
    let cells: Vec<(u32, f64)> = (0..=m_max)
        .flat_map(|m| alphas.iter().map(move |&a| (m, a)))
        .collect();
    let rows: Vec<SweepRow> = cells
        .par_iter()
        .map(|&(m, alpha)| {
            let e_series = all_series[m as usize].eigenvalue(alpha, order);
            match solve_ground(m, alpha, &options) {
                Ok(result) => SweepRow {
                    m,
                    alpha,
                    e_series,
                    e_oracle: Some(result.eigenvalue),
                    abs_error: Some((e_series - result.eigenvalue).abs()),
                    status: "ok".into(),
                },
                Err(_) => SweepRow {
                    m,
                    alpha,
                    e_series,
                    e_oracle: None,
                    abs_error: None,
                    status: "no-convergence".into(),
                },
            }
        })
        .collect();

    let converged = rows.iter().all(|r| r.status == "ok");
    let content = match format {
        Format::Json => json(&SweepDoc { m_max, order, converged, rows }),
        Format::Csv => csv(
            "m,alpha,e_series,e_oracle,abs_error,status",
            rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{},{}",
                    r.m,
                    num(r.alpha),
                    num(r.e_series),
                    opt_num(r.e_oracle),
                    opt_sci(r.abs_error),
                    r.status
                )
            }),
        ),
    };
    Ok(CommandOutput { content, exit: if converged { 0 } else { 4 } })
}

// ---------------------------------------------------------------------------
// oracle solve

#[derive(Serialize)]
struct OracleDoc {
    eigenvalue: f64,
    #[serde(rename = "K_used")]
    k_used: usize,
    /// Leading basis coefficients (at most eight).
    coefficients: Vec<f64>,
}

pub fn oracle_solve(
    m: u32,
    alpha: f64,
    k: Option<usize>,
    k_cap: Option<usize>,
    precision: f64,
) -> Result<CommandOutput, CmdError> {
    let options = oracle_options(k, k_cap, precision)?;
    let result = solve_ground(m, alpha, &options)
        .map_err(|err| CmdError::Oracle(format!("m={m} alpha={alpha}: {err}")))?;
    let mut coefficients = result.coefficients;
    coefficients.truncate(8);
    let doc = OracleDoc { eigenvalue: result.eigenvalue, k_used: result.k_used, coefficients };
    Ok(CommandOutput { content: json(&doc), exit: 0 })
}

// ---------------------------------------------------------------------------
// shared helpers

fn build(m: u32, order: u32) -> Result<PerturbationSeries, CmdError> {
    build_series(m, order).map_err(|err| CmdError::Internal(err.to_string()))
}

fn check_order(order: u32, cap: u32) -> Result<(), CmdError> {
    if order < 1 {
        return Err(CmdError::Usage("order must be at least 1".into()));
    }
    if order > cap {
        return Err(CmdError::Usage(format!("order must be at most {cap}, got {order}")));
    }
    Ok(())
}

/// Alphas must be finite; |alpha| > 1 needs --force. Zero is accepted and
/// simply means the exactly solvable limit.
fn check_alphas(alphas: &[f64], force: bool) -> Result<(), CmdError> {
    for &alpha in alphas {
        if !alpha.is_finite() {
            return Err(CmdError::Usage(format!("alpha must be finite, got {alpha}")));
        }
        if alpha.abs() > 1.0 && !force {
            return Err(CmdError::Usage(format!(
                "|alpha| > 1 is outside the validated range (got {alpha}); pass --force to proceed"
            )));
        }
    }
    Ok(())
}

fn oracle_options(
    k: Option<usize>,
    k_cap: Option<usize>,
    precision: f64,
) -> Result<OracleOptions, CmdError> {
    let defaults = OracleOptions::default();
    let k_start = k.unwrap_or(defaults.k_start);
    let k_cap = k_cap.unwrap_or(defaults.k_cap.max(k_start * 2));
    if k_start < 2 {
        return Err(CmdError::Usage(format!("k must be at least 2, got {k_start}")));
    }
    if k_cap < k_start * 2 {
        return Err(CmdError::Usage(format!(
            "k-cap must allow at least one doubling: need k-cap >= {}, got {k_cap}",
            k_start * 2
        )));
    }
    Ok(OracleOptions { k_start, k_cap, tol: ORACLE_TOL * precision })
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut body = serde_json::to_string_pretty(doc).expect("report serialization cannot fail");
    body.push('\n');
    body
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Shortest-round-trip rendering for values of order one: positional in
/// the readable range, scientific beyond it (a near-denormal would
/// otherwise expand to hundreds of positional digits).
fn num(v: f64) -> String {
    let magnitude = v.abs();
    if v == 0.0 || (1e-4..1e15).contains(&magnitude) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Scientific rendering for error magnitudes.
fn sci(v: f64) -> String {
    format!("{v:e}")
}

fn opt_sci(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

/// Least-squares slope of y against x.
fn fitted_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_json_carries_exact_and_decimal_values() {
        let out = series(0, 2, Format::Json).unwrap();
        assert_eq!(out.exit, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.content).unwrap();
        assert_eq!(doc["m"], 0);
        assert_eq!(doc["twoE00"], "0");
        assert_eq!(doc["terms"][0]["twoE0n"], "-1/3");
        assert_eq!(doc["terms"][0]["P"][0], "1/3");
        assert_eq!(doc["terms"][1]["twoE0n"], "-2/135");
        assert_eq!(doc["terms"][1]["twoE0n_decimal"], "-0.014814814814814815");
        assert_eq!(doc["terms"][1]["P"][0], "-1/135");
        assert_eq!(doc["terms"][1]["P"][1], "1/45");
    }

    #[test]
    fn series_rejects_out_of_range_orders() {
        assert!(matches!(series(0, 0, Format::Json), Err(CmdError::Usage(_))));
        assert!(matches!(series(0, 65, Format::Json), Err(CmdError::Usage(_))));
    }

    #[test]
    fn eval_grid_spans_the_interval() {
        let out = eval(0, 2, 0.1, 10, Format::Csv).unwrap();
        let lines: Vec<&str> = out.content.lines().collect();
        assert_eq!(lines[0], "x,theta0");
        assert_eq!(lines.len(), 12);
        assert!(lines[1].starts_with("-1,"));
        assert!(lines[11].starts_with("1,"));
    }

    #[test]
    fn validate_passes_on_small_alpha() {
        let out =
            validate(0, 2, &[0.1, 0.05, 0.025, 0.0125], false, None, Format::Csv, 1.0).unwrap();
        assert_eq!(out.exit, 0, "{}", out.content);
        let last = out.content.lines().last().unwrap();
        assert!(last.starts_with("slope,"), "{last}");
    }

    #[test]
    fn validate_accepts_the_exact_limit_row() {
        let out = validate(1, 2, &[0.0], false, None, Format::Csv, 1.0).unwrap();
        assert_eq!(out.exit, 0, "{}", out.content);
        assert!(out.content.contains(",pass"));
    }

    #[test]
    fn validate_guards_large_alpha_behind_force() {
        assert!(matches!(
            validate(0, 2, &[1.5], false, None, Format::Csv, 1.0),
            Err(CmdError::Usage(_))
        ));
        let forced = validate(0, 2, &[1.5], true, None, Format::Csv, 1.0).unwrap();
        assert!(forced.exit == 0 || forced.exit == 2);
    }

    #[test]
    fn identities_table_is_all_green() {
        let out = identities(3, Format::Csv).unwrap();
        assert_eq!(out.exit, 0);
        assert!(out.content.lines().skip(1).all(|l| l.ends_with(",true")));
    }

    #[test]
    fn maxw_never_fails_and_flags_the_trend() {
        let out = maxw(0, 4, Format::Csv).unwrap();
        assert_eq!(out.exit, 0);
        let lines: Vec<&str> = out.content.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("1,1.6666666666666666e-1,true"), "{}", lines[1]);
    }

    #[test]
    fn sweep_reports_every_cell_in_order() {
        let out = sweep(1, 1, &[0.1, 0.2], false, None, Format::Csv, 1.0).unwrap();
        assert_eq!(out.exit, 0);
        let lines: Vec<&str> = out.content.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("0,0.1,"));
        assert!(lines[2].starts_with("0,0.2,"));
        assert!(lines[3].starts_with("1,0.1,"));
        assert!(lines[4].starts_with("1,0.2,"));
    }

    #[test]
    fn oracle_doc_truncates_coefficients() {
        let out = oracle_solve(0, 0.3, None, None, 1.0).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out.content).unwrap();
        assert!(doc["eigenvalue"].as_f64().unwrap() < 0.0);
        assert!(doc["K_used"].as_u64().unwrap() >= 16);
        assert!(doc["coefficients"].as_array().unwrap().len() <= 8);
    }

    #[test]
    fn oracle_options_guard_the_doubling_room() {
        assert!(matches!(oracle_options(Some(64), Some(64), 1.0), Err(CmdError::Usage(_))));
        let opts = oracle_options(Some(64), None, 1.0).unwrap();
        assert_eq!(opts.k_start, 64);
        assert_eq!(opts.k_cap, 256);
    }
}
