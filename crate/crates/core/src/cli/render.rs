//! Static SVG drawing of a representation with its bounds.

use std::fmt::Write;

use thiserror::Error;

use crate::model::{Bound, ExtCoord, Instance, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("instance has {0} vertices, representation has {1}")]
pub struct SizeMismatch(pub usize, pub usize);

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 60.0;
const ROW: f64 = 28.0;

struct Scale {
    lo: f64,
    hi: f64,
}

impl Scale {
    fn x(&self, v: f64) -> f64 {
        MARGIN + (v - self.lo) / (self.hi - self.lo) * (WIDTH - 2.0 * MARGIN)
    }

    fn ext(&self, e: &ExtCoord) -> f64 {
        match e {
            ExtCoord::NegInf => MARGIN / 2.0,
            ExtCoord::PosInf => WIDTH - MARGIN / 2.0,
            ExtCoord::Fin(c) => self.x(c.to_f64()),
        }
    }
}

fn whisker(out: &mut String, s: &Scale, b: &Bound, y: f64) {
    let (a, z) = (s.ext(&b.lo), s.ext(&b.hi));
    let _ = writeln!(out, r##"  <rect class="bound" x="{:.2}" y="{:.2}" width="{:.2}" height="12" fill="none" stroke="#888"/>"##, a, y - 6.0, z - a);
}

/// One horizontal segment per interval, bounds as boxes at each end.
pub fn render_svg(inst: &Instance, rep: &Representation) -> Result<String, SizeMismatch> {
    if inst.n() != rep.n() {
        return Err(SizeMismatch(inst.n(), rep.n()));
    }
    let mut vals: Vec<f64> = rep.intervals.iter().flat_map(|iv| [iv.lo.to_f64(), iv.hi.to_f64()]).collect();
    for bp in &inst.bounds {
        for b in [&bp.left, &bp.right] {
            vals.extend([&b.lo, &b.hi].iter().filter_map(|e| e.finite()).map(|c| c.to_f64()));
        }
    }
    let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if !lo.is_finite() { (0.0, 1.0) } else if lo == hi { (lo - 1.0, hi + 1.0) } else { (lo, hi) };
    let s = Scale { lo, hi };
    let height = ROW * inst.n() as f64 + 2.0 * ROW;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" font-family="monospace" font-size="12">"#);
    for (v, (iv, bp)) in rep.intervals.iter().zip(&inst.bounds).enumerate() {
        let y = ROW * (v as f64 + 1.0);
        let _ = writeln!(out, r#"  <text x="4" y="{:.2}">v{v}</text>"#, y + 4.0);
        whisker(&mut out, &s, &bp.left, y);
        whisker(&mut out, &s, &bp.right, y);
        let (a, b) = (s.x(iv.lo.to_f64()), s.x(iv.hi.to_f64()));
        let _ = writeln!(
            out,
            r#"  <line class="interval" x1="{a:.2}" y1="{y:.2}" x2="{b:.2}" y2="{y:.2}" stroke="black" stroke-width="3" stroke-linecap="round"><title>[{}, {}]</title></line>"#,
            iv.lo, iv.hi
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
