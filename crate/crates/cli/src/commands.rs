//! Subcommand implementations. Each returns the text for stdout or an error
//! carrying the process exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use bott_core::families::{kind_counts, Family};
use bott_core::localize::{bott_sum, validate_weights, FixedPoint, WeightVector};
use bott_core::polyfit::{lagrange_integers, RatPoly};
use bott_core::Error;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::cache::{self, CacheWriter, DegreeRecord};
use crate::{
    Bound, ComputeArgs, FamilyArgs, FixedPointsArgs, Format, InterpolateArgs, ValidateArgs,
};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_DEGENERATE_WEIGHTS: u8 = 2;
pub const EXIT_INVALID_PARAMS: u8 = 3;
pub const EXIT_INSUFFICIENT_CACHE: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn io(message: String) -> Self {
        CliError::new(EXIT_FAILURE, message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateWeights(_) => EXIT_DEGENERATE_WEIGHTS,
            Error::InvalidParams(_) | Error::BelowThreshold { .. } | Error::Parse(_) => {
                EXIT_INVALID_PARAMS
            }
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn resolve(args: &FamilyArgs) -> CliResult<Family> {
    Ok(Family::from_tag(&args.family, args.k, args.n, args.m)?)
}

fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let bad = || {
        CliError::new(
            EXIT_INVALID_PARAMS,
            format!("--d-range must look like A..B, got {s:?}"),
        )
    };
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn check_weights(family: Family, points: &[FixedPoint], w: &WeightVector) -> CliResult<()> {
    let report = validate_weights(points, w);
    if report.passed() {
        return Ok(());
    }
    let defaults: Vec<String> = family
        .default_weights()
        .as_slice()
        .iter()
        .map(i64::to_string)
        .collect();
    Err(CliError::new(
        EXIT_DEGENERATE_WEIGHTS,
        format!(
            "{}\ntry the defaults: --weights {}",
            report.to_string().trim_end(),
            defaults.join(",")
        ),
    ))
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::new(
            EXIT_INVALID_PARAMS,
            "--jobs must be at least 1",
        )),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError::io(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Evaluates the degrees in `ds`, reusing and extending the cache.
fn degrees(
    family: Family,
    ds: &[i64],
    w: &WeightVector,
    jobs: Option<usize>,
    cache_path: Option<&Path>,
) -> CliResult<BTreeMap<i64, BigInt>> {
    for &d in ds {
        if d < family.d_min() {
            return Err(Error::BelowThreshold {
                d,
                d_min: family.d_min(),
            }
            .into());
        }
    }
    let points = family.fixed_points()?;
    check_weights(family, &points, w)?;
    let cached = match cache_path {
        Some(p) => cache::load(p, family).map_err(CliError::io)?,
        None => BTreeMap::new(),
    };
    let missing: Vec<i64> = ds
        .iter()
        .copied()
        .filter(|d| !cached.contains_key(d))
        .collect();
    let writer = match cache_path {
        Some(p) if !missing.is_empty() => Some(CacheWriter::open(p).map_err(CliError::io)?),
        _ => None,
    };
    let fresh = with_pool(jobs, || {
        missing
            .par_iter()
            .map(|&d| {
                let degree = bott_sum(&points, d, w)?;
                if let Some(writer) = &writer {
                    writer
                        .append(&DegreeRecord::new(family, d, &degree, w.as_slice()))
                        .map_err(CliError::io)?;
                }
                Ok((d, degree))
            })
            .collect::<CliResult<Vec<(i64, BigInt)>>>()
    })??;
    let mut out: BTreeMap<i64, BigInt> = ds
        .iter()
        .filter_map(|d| cached.get(d).map(|v| (*d, v.clone())))
        .collect();
    out.extend(fresh);
    Ok(out)
}

pub fn compute(args: ComputeArgs) -> CliResult<String> {
    let family = resolve(&args.family)?;
    let ds: Vec<i64> = match (args.d, &args.d_range) {
        (Some(d), _) => vec![d],
        (None, Some(r)) => {
            let (a, b) = parse_range(r)?;
            (a..=b).collect()
        }
        (None, None) => return Err(CliError::new(EXIT_INVALID_PARAMS, "give --d or --d-range")),
    };
    let w = args
        .weights
        .map(WeightVector::new)
        .unwrap_or_else(|| family.default_weights());
    let values = degrees(family, &ds, &w, args.jobs, args.cache.as_deref())?;
    let records: Vec<DegreeRecord> = values
        .iter()
        .map(|(d, v)| DegreeRecord::new(family, *d, v, w.as_slice()))
        .collect();
    Ok(render_records(family, &records, args.format))
}

fn render_records(family: Family, records: &[DegreeRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for r in records {
                let _ = writeln!(out, "{family} d={}: {}", r.d, r.degree);
            }
        }
        Format::Json => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(records).expect("serializable")
            );
        }
        Format::Csv => {
            out.push_str("family,params,d,degree\n");
            for r in records {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.family,
                    params.join(";"),
                    r.d,
                    r.degree
                );
            }
        }
    }
    out
}

pub fn interpolate(args: InterpolateArgs) -> CliResult<String> {
    let family = resolve(&args.family)?;
    let bound = match args.bound {
        Bound::Safe => family.degree_bound_safe(),
        Bound::Conjectural => family.degree_bound_conjectural(),
    };
    let start = args.d_min.unwrap_or_else(|| family.d_min());
    if start < family.d_min() {
        return Err(Error::BelowThreshold {
            d: start,
            d_min: family.d_min(),
        }
        .into());
    }
    let ds: Vec<i64> = (start..=start + bound as i64).collect();
    let end = *ds.last().expect("nonempty");
    let values = if args.fill {
        degrees(
            family,
            &ds,
            &family.default_weights(),
            args.jobs,
            Some(&args.cache),
        )?
    } else {
        let cached = cache::load(&args.cache, family).map_err(CliError::io)?;
        let missing: Vec<i64> = ds
            .iter()
            .copied()
            .filter(|d| !cached.contains_key(d))
            .collect();
        if !missing.is_empty() {
            let shown: Vec<String> = missing.iter().take(8).map(i64::to_string).collect();
            let more = if missing.len() > 8 { ", ..." } else { "" };
            return Err(CliError::new(
                EXIT_INSUFFICIENT_CACHE,
                format!(
                    "{family}: need {} degrees d = {start}..{end}, cache {} is missing {} (d = {}{more}); \
                     run compute --d-range {start}..{end} --cache or pass --fill",
                    ds.len(),
                    args.cache.display(),
                    missing.len(),
                    shown.join(", ")
                ),
            ));
        }
        ds.iter().map(|d| (*d, cached[d].clone())).collect()
    };
    let data: Vec<(i64, BigInt)> = values.into_iter().collect();
    let poly = lagrange_integers(&data)?;
    Ok(render_polynomial(family, &poly, start, end, args.format))
}

fn render_polynomial(
    family: Family,
    poly: &RatPoly,
    start: i64,
    end: i64,
    format: Format,
) -> String {
    let degree = poly.degree().unwrap_or(0);
    let safe = family.degree_bound_safe();
    let conjectural = family.degree_bound_conjectural();
    let mut out = String::new();
    match format {
        Format::Plain => {
            let _ = writeln!(out, "family: {family}");
            let _ = writeln!(
                out,
                "points: d = {start}..{end} ({} values)",
                end - start + 1
            );
            let _ = writeln!(out, "polynomial: {}", poly.display_with("d"));
            let _ = writeln!(
                out,
                "common denominator: {}",
                poly.display_common_denominator("d")
            );
            let _ = writeln!(
                out,
                "degree: {degree} (conjectural bound {conjectural}, safe bound {safe})"
            );
        }
        Format::Json => {
            let (den, nums) = poly.common_denominator_form();
            let value = json!({
                "family": family.tag(),
                "params": family.params().into_iter().collect::<BTreeMap<_, _>>(),
                "points": [start, end],
                "degree": degree,
                "bounds": {"safe": safe, "conjectural": conjectural},
                "coefficients": poly.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "denominator": den.to_string(),
                "numerators": nums.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            let _ = writeln!(out, "{value}");
        }
        Format::Csv => {
            out.push_str("power,coefficient\n");
            for (i, c) in poly.coefficients().iter().enumerate() {
                let _ = writeln!(out, "{i},{c}");
            }
        }
    }
    out
}

pub fn fixed_points(args: FixedPointsArgs) -> CliResult<String> {
    let family = resolve(&args.family)?;
    let points = family.fixed_points()?;
    let mut out = String::new();
    let _ = writeln!(out, "family: {family}");
    let _ = writeln!(out, "fixed points: {}", points.len());
    for (kind, count) in kind_counts(&points) {
        let _ = writeln!(out, "  kind {kind}: {count}");
    }
    if args.list {
        for (i, p) in points.iter().enumerate() {
            let _ = writeln!(out, "[{i}] kind {}: {}", p.kind, p.ideal);
            let _ = writeln!(out, "    tangent: {}", p.tangent);
        }
    }
    Ok(out)
}

pub fn validate(args: ValidateArgs) -> CliResult<String> {
    let family = resolve(&args.family)?;
    let points = family.fixed_points()?;
    let w = WeightVector::new(args.weights);
    check_weights(family, &points, &w)?;
    Ok(format!(
        "{family}: weights {w} pass for all {} fixed points\n",
        points.len()
    ))
}
