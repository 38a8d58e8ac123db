//! Browser bindings for a static demo page.
//!
//! Each operation has a plain Rust form returning `Result<String, String>`,
//! used by the native tests, and a thin `wasm_bindgen` export.

use bott_core::families::{kind_counts, Family};
use bott_core::localize::bott_sum;
use bott_core::polyfit::lagrange_integers;
use wasm_bindgen::prelude::*;

/// Largest degree the page will evaluate.
pub const MAX_D: i64 = 40;

/// Largest number of interpolation points the page will evaluate.
pub const MAX_POINTS: i64 = 40;

fn opt(v: u32) -> Option<usize> {
    (v > 0).then_some(v as usize)
}

/// Builds a family from the page's form fields. Zero means "not given".
pub fn family_from(tag: &str, k: u32, n: u32, m: u32) -> Result<Family, String> {
    Family::from_tag(tag, opt(k), opt(n), opt(m)).map_err(|e| e.to_string())
}

/// Fixed-point count with its breakdown by kind.
pub fn fixed_point_summary(tag: &str, k: u32, n: u32, m: u32) -> Result<String, String> {
    let family = family_from(tag, k, n, m)?;
    let points = family.fixed_points().map_err(|e| e.to_string())?;
    let mut out = format!("{family}: {} fixed points\n", points.len());
    for (kind, count) in kind_counts(&points) {
        out.push_str(&format!("  kind {kind}: {count}\n"));
    }
    Ok(out)
}

/// The degree at one value of `d`, with default weights.
pub fn degree(tag: &str, k: u32, n: u32, m: u32, d: i64) -> Result<String, String> {
    let family = family_from(tag, k, n, m)?;
    if d > MAX_D {
        return Err(format!(
            "the demo stops at d = {MAX_D}; use the command-line tool beyond that"
        ));
    }
    let points = family.fixed_points().map_err(|e| e.to_string())?;
    let value = bott_sum(&points, d, &family.default_weights()).map_err(|e| e.to_string())?;
    Ok(value.to_string())
}

/// Interpolates the degrees at `d = start..=end` and renders the polynomial.
pub fn interpolate(
    tag: &str,
    k: u32,
    n: u32,
    m: u32,
    start: i64,
    end: i64,
) -> Result<String, String> {
    let family = family_from(tag, k, n, m)?;
    if end < start {
        return Err("empty range".into());
    }
    if end - start + 1 > MAX_POINTS || end > MAX_D {
        return Err(format!(
            "the demo allows at most {MAX_POINTS} points and d <= {MAX_D}"
        ));
    }
    let points = family.fixed_points().map_err(|e| e.to_string())?;
    let w = family.default_weights();
    let data = (start..=end)
        .map(|d| bott_sum(&points, d, &w).map(|v| (d, v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let poly = lagrange_integers(&data).map_err(|e| e.to_string())?;
    let degree = poly.degree().unwrap_or(0);
    let safe = family.degree_bound_safe();
    let note = if (end - start) as usize >= safe {
        "enough points for the safe bound"
    } else {
        "fewer points than the safe bound; the fit may not be the true polynomial"
    };
    Ok(format!(
        "{}\n\ncommon denominator: {}\n\ndegree {degree} from {} points ({note}, safe bound {safe})",
        poly.display_with("d"),
        poly.display_common_denominator("d"),
        end - start + 1
    ))
}

#[wasm_bindgen(js_name = fixedPointSummary)]
pub fn fixed_point_summary_js(tag: &str, k: u32, n: u32, m: u32) -> Result<String, JsError> {
    fixed_point_summary(tag, k, n, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = degreeAt)]
pub fn degree_js(tag: &str, k: u32, n: u32, m: u32, d: i32) -> Result<String, JsError> {
    degree(tag, k, n, m, d as i64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = interpolateRange)]
pub fn interpolate_js(
    tag: &str,
    k: u32,
    n: u32,
    m: u32,
    start: i32,
    end: i32,
) -> Result<String, JsError> {
    interpolate(tag, k, n, m, start as i64, end as i64).map_err(|e| JsError::new(&e))
}
