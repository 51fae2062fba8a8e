//! CSV and SVG rendering of sampled real functions.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use wfa_core::{OmegaValue, Rational};

/// Digits after the decimal point in CSV output.
pub const FRACTION_DIGITS: u32 = 12;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;

/// `r` rounded half away from zero to `digits` places, without going through
/// floating point.
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let (q, rem) = (r.numer().abs() * &scale).div_rem(r.denom());
    let rounded = if rem * 2u32 >= *r.denom() { q + 1u32 } else { q };
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!(
        "{sign}{int}.{frac:0>width$}",
        frac = frac.to_string(),
        width = digits as usize
    )
}

pub fn csv(samples: &[(Rational, OmegaValue)], exact: bool) -> String {
    let mut out = String::from("x,value\n");
    for (x, v) in samples {
        let render = |r: &Rational| {
            if exact {
                r.to_string()
            } else {
                decimal_string(r, FRACTION_DIGITS)
            }
        };
        let value = v.as_defined().map(render).unwrap_or_default();
        let _ = writeln!(out, "{},{}", render(x), value);
    }
    out
}

/// Polyline through the defined points, `x ∈ [0, 1]` across the width and the
/// value range stretched over the height.
pub fn svg(samples: &[(Rational, OmegaValue)]) -> String {
    let points: Vec<(f64, f64)> = samples
        .iter()
        .filter_map(|(x, v)| Some((x.to_f64()?, v.as_defined()?.to_f64()?)))
        .collect();
    let (lo, hi) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, y)| {
            (lo.min(y), hi.max(y))
        });
    let span = if hi > lo { hi - lo } else { 1.0 };
    let mid = if hi > lo { None } else { Some(HEIGHT / 2.0) };
    let px = |x: f64| MARGIN + x * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| mid.unwrap_or_else(|| HEIGHT - MARGIN - (y - lo) / span * (HEIGHT - 2.0 * MARGIN));
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    if lo <= 0.0 && 0.0 <= hi && hi > lo {
        let y0 = py(0.0);
        let _ = writeln!(
            out,
            r##"<line x1="{:.3}" y1="{y0:.3}" x2="{:.3}" y2="{y0:.3}" stroke="#bbbbbb"/>"##,
            px(0.0),
            px(1.0)
        );
    }
    let _ = writeln!(
        out,
        r#"<polyline fill="none" stroke="black" stroke-width="1.5" points="{}"/>"#,
        coords.join(" ")
    );
    out.push_str("</svg>\n");
    out
}
