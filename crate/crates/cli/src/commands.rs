use degenerate_eulerian::algebra::{AlgebraError, MPoly, RatFun, Rational, Series, Var};
use degenerate_eulerian::classical::{eulerian_poly_with, stirling1, stirling2};
use degenerate_eulerian::degenerate::{deg_eulerian_number_with, deg_ordered_bell_with, deg_unsigned_stirling1_row};
use degenerate_eulerian::identities::{IdentityId, IdentityReport, Mode, VerifyError, Verifier};
use degenerate_eulerian::render::{parse_rational, render_poly, render_ratfun};
use degenerate_eulerian::Tables;
use serde_json::{json, Map, Value};

use crate::args::{Command, Format, GfKind, TableKind};
use crate::doc::{csv_rows, envelope, poly_value_json, ratfun_value_json, report_json, row_json};
use crate::{CliError, EXIT_FAILED, EXIT_OK};

pub(crate) fn dispatch(cmd: &Command, argv: &[String]) -> Result<(u8, String), CliError> {
    match cmd {
        Command::Table { kind, n_max, format } => table(*kind, *n_max, *format, argv).map(|s| (EXIT_OK, s)),
        Command::Expand { gf, order, bindings, format } => {
            expand(*gf, *order, bindings, *format, argv).map(|s| (EXIT_OK, s))
        }
        Command::Verify { ids, identity, n_max, m_max, sample_seed, .. } => {
            verify(ids, identity, *n_max, *m_max, *sample_seed, argv)
        }
    }
}

fn non_negative(name: &str, v: i64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("--{name} must be non-negative, got {v}")))
}

enum TableBody {
    Rows(Vec<Vec<MPoly>>),
    Values(Vec<MPoly>),
}

fn table_body(kind: TableKind, n_max: usize) -> TableBody {
    let tables = Tables::covering(n_max);
    let int = |b| MPoly::from(b);
    match kind {
        TableKind::Eulerian => TableBody::Rows(
            (0..=n_max).map(|n| eulerian_poly_with(&tables, n).coefficients_in(Var::T)).collect(),
        ),
        TableKind::Stirling1 => TableBody::Rows(
            (0..=n_max as i64)
                .map(|n| (0..=n).map(|k| int(stirling1(n, k).expect("in triangle"))).collect())
                .collect(),
        ),
        TableKind::Stirling2 => TableBody::Rows(
            (0..=n_max as i64)
                .map(|n| (0..=n).map(|k| int(stirling2(n, k).expect("in triangle"))).collect())
                .collect(),
        ),
        // <n,n>_λ vanishes for n >= 1, so rows stop at l = n-1 like the classical triangle
        TableKind::DegEulerian => TableBody::Rows(
            (0..=n_max)
                .map(|n| (0..n.max(1)).map(|l| deg_eulerian_number_with(&tables, n, l)).collect())
                .collect(),
        ),
        TableKind::DegStirling1 => TableBody::Rows((0..=n_max).map(deg_unsigned_stirling1_row).collect()),
        TableKind::OrderedBell => {
            TableBody::Values((0..=n_max).map(|n| deg_ordered_bell_with(&tables, n)).collect())
        }
    }
}

fn table(kind: TableKind, n_max: i64, format: Format, argv: &[String]) -> Result<String, CliError> {
    let n_max = non_negative("n-max", n_max)?;
    let body = table_body(kind, n_max);
    Ok(match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = match &body {
                TableBody::Rows(rows) => rows.iter().map(|r| r.iter().map(render_poly).collect()).collect(),
                TableBody::Values(vals) => vals.iter().map(|v| vec![render_poly(v)]).collect(),
            };
            csv_rows(&rows)
        }
        Format::Json => {
            let results = match &body {
                TableBody::Rows(rows) => rows.iter().enumerate().map(|(n, r)| row_json(n, r)).collect(),
                TableBody::Values(vals) => vals.iter().enumerate().map(|(n, v)| poly_value_json(n, v)).collect(),
            };
            let mut params = Map::new();
            params.insert("kind".into(), json!(kind.name()));
            params.insert("n_max".into(), json!(n_max));
            params.insert("format".into(), json!("json"));
            envelope("table", argv, params, results)
        }
    })
}

/// Variables appearing in the coefficients of each generating function.
fn gf_variables(gf: GfKind) -> &'static [Var] {
    match gf {
        GfKind::Eulerian => &[Var::T],
        GfKind::DegEulerian => &[Var::T, Var::Lambda],
        GfKind::OrderedBell => &[Var::X, Var::Lambda],
        GfKind::FrobeniusEuler => &[Var::X, Var::U],
    }
}

fn parse_binding(s: &str, gf: GfKind) -> Result<(Var, Rational), CliError> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("binding `{s}` is not of the form var=p/q")))?;
    let var: Var = name.trim().parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    if !gf_variables(gf).contains(&var) {
        return Err(CliError::Usage(format!("the {} generating function does not use {var}", gf.name())));
    }
    let value = parse_rational(value.trim()).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((var, value))
}

/// Numerator and denominator series of a generating function, unbound.
fn gf_parts(gf: GfKind, order: usize) -> Result<(Series, Series), AlgebraError> {
    let t = MPoly::var(Var::T);
    let tm1 = &t - &MPoly::one();
    let one_minus_t = RatFun::from(-&tm1);
    Ok(match gf {
        GfKind::Eulerian => {
            let e = Series::variable(Var::X, order).scale(&tm1.clone().into()).exp()?;
            (Series::constant(Var::X, one_minus_t, order), e.sub(&Series::constant(Var::X, t.into(), order))?)
        }
        GfKind::DegEulerian => {
            let p = Series::deg_pow(&tm1, Var::X, order)?;
            (Series::constant(Var::X, one_minus_t, order), p.sub(&Series::constant(Var::X, t.into(), order))?)
        }
        GfKind::OrderedBell => {
            let num = Series::deg_pow(&MPoly::var(Var::X), Var::T, order)?;
            let base = Series::deg_pow(&MPoly::one(), Var::T, order)?;
            (num, Series::constant(Var::T, RatFun::int(2), order).sub(&base)?)
        }
        GfKind::FrobeniusEuler => {
            let one_minus_u = RatFun::from(&MPoly::one() - &MPoly::var(Var::U));
            let ext = Series::variable(Var::T, order).scale(&RatFun::var(Var::X)).exp()?;
            let et = Series::variable(Var::T, order).exp()?;
            (ext.scale(&one_minus_u), et.sub(&Series::constant(Var::T, RatFun::var(Var::U), order))?)
        }
    })
}

fn bind(s: &Series, bindings: &[(Var, Rational)]) -> Result<Series, AlgebraError> {
    s.try_map(|c| bindings.iter().try_fold(c.clone(), |acc, (v, x)| acc.eval(*v, x)))
}

fn expand_values(gf: GfKind, order: usize, bindings: &[(Var, Rational)]) -> Result<Vec<RatFun>, CliError> {
    let pole = |e: AlgebraError| CliError::Pole(format!("{} expansion: {e}", gf.name()));
    let (num, den) = gf_parts(gf, order).map_err(pole)?;
    let (num, den) = (bind(&num, bindings).map_err(pole)?, bind(&den, bindings).map_err(pole)?);
    if den.coeff(0).is_zero() {
        return Err(CliError::Pole(format!(
            "{} generating function: the bound denominator vanishes at the origin",
            gf.name()
        )));
    }
    let series = den.inv().and_then(|d| num.mul(&d)).map_err(pole)?;
    Ok(series.egf_values())
}

fn expand(gf: GfKind, order: i64, raw: &[String], format: Format, argv: &[String]) -> Result<String, CliError> {
    let order = non_negative("order", order)?;
    let bindings = raw.iter().map(|b| parse_binding(b, gf)).collect::<Result<Vec<_>, _>>()?;
    let values = expand_values(gf, order, &bindings)?;
    Ok(match format {
        Format::Csv => csv_rows(&values.iter().map(|v| vec![render_ratfun(v)]).collect::<Vec<_>>()),
        Format::Json => {
            let mut params = Map::new();
            params.insert("gf".into(), json!(gf.name()));
            params.insert("order".into(), json!(order));
            let b: Map<String, Value> = bindings
                .iter()
                .map(|(v, x)| (v.name().to_string(), json!(degenerate_eulerian::render::render_rational(x))))
                .collect();
            params.insert("bindings".into(), Value::Object(b));
            params.insert("format".into(), json!("json"));
            let results = values.iter().enumerate().map(|(n, v)| ratfun_value_json(n, v)).collect();
            envelope("expand", argv, params, results)
        }
    })
}

fn selected_ids(ids: &[String], identity: &[String]) -> Result<Option<Vec<IdentityId>>, CliError> {
    let all: Vec<&String> = ids.iter().chain(identity).collect();
    if all.is_empty() || all.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(None);
    }
    let mut out = Vec::new();
    for s in all {
        let id: IdentityId = s.parse().map_err(|e: VerifyError| CliError::Usage(e.to_string()))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(Some(out))
}

fn verify(
    ids: &[String],
    identity: &[String],
    n_max: i64,
    m_max: Option<i64>,
    seed: Option<u64>,
    argv: &[String],
) -> Result<(u8, String), CliError> {
    let n_max = non_negative("n-max", n_max)?;
    let m_max = m_max.map(|m| non_negative("m-max", m)).transpose()?;
    let selection = selected_ids(ids, identity)?;
    let mut verifier = Verifier::new();
    if let Some(seed) = seed {
        verifier = verifier.mode(Mode::Sampled { seed });
    }
    let usage = |e: VerifyError| CliError::Usage(e.to_string());
    let reports = match &selection {
        None => match m_max {
            None => verifier.verify_all(n_max).map_err(usage)?,
            Some(m) => IdentityId::ALL
                .iter()
                .map(|&id| verifier.verify(id, n_max, Some(m)))
                .collect::<Result<_, _>>()
                .map_err(usage)?,
        },
        Some(list) => list
            .iter()
            .map(|&id| verifier.verify(id, n_max, m_max))
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?,
    };
    let tags: Vec<&str> = match &selection {
        None => vec!["all"],
        Some(list) => list.iter().map(|id| id.tag()).collect(),
    };
    let mut params = Map::new();
    params.insert("ids".into(), json!(tags));
    params.insert("n_max".into(), json!(n_max));
    params.insert("m_max".into(), json!(m_max));
    params.insert("mode".into(), json!(if seed.is_some() { "sampled" } else { "symbolic" }));
    Ok(verify_document(&reports, n_max, params, argv))
}

/// Exit code and JSON document for a list of reports.
fn verify_document(reports: &[IdentityReport], n_max: usize, mut params: Map<String, Value>, argv: &[String]) -> (u8, String) {
    let all_pass = reports.iter().all(|r| r.passed());
    params.insert("status".into(), json!(if all_pass { "pass" } else { "fail" }));
    params.insert("format".into(), json!("json"));
    let results = reports.iter().map(|r| json!({ "n": n_max, "report": report_json(r) })).collect();
    let code = if all_pass { EXIT_OK } else { EXIT_FAILED };
    (code, envelope("verify", argv, params, results))
}
