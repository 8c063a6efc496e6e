//! SVG side view of an orbit braid word.
//!
//! All `pn` points are laid out in one row, copy `q` of strand `j` in column
//! `q*n + j`, with the rotation axis drawn as a grey line on the left. Time
//! runs downwards, one block per letter. `b` moves the column-0 point of each
//! copy to the next copy, `b_k` crosses columns `k` and `k+1` in every copy.
//! Strands keep their hue; copies are told apart by dash pattern.

use std::fmt::Write as _;

use crate::braid::{BraidWord, Gen};
use crate::error::{Error, Result};
use crate::words::GroupParams;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];
const STROKE: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub width: u32,
    pub height: u32,
    /// `stroke-dasharray` per orbit copy, cycled; empty string means solid.
    pub dashes: Vec<String>,
    /// Clearance drawn around the over strand at a crossing.
    pub crossing_gap: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            width: 480,
            height: 640,
            dashes: vec![String::new(), "8 4".into(), "2 3".into(), "8 3 2 3".into()],
            crossing_gap: 3,
        }
    }
}

impl RenderStyle {
    pub fn new(width: u32, height: u32, dashes: Vec<String>, crossing_gap: u32) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidStyle(format!("dimensions {width}x{height}")));
        }
        if dashes.is_empty() {
            return Err(Error::InvalidStyle("no dash patterns".into()));
        }
        Ok(Self { width, height, dashes, crossing_gap })
    }
}

struct Layout {
    x0: f64,
    dx: f64,
    y0: f64,
    dy: f64,
}

impl Layout {
    fn x(&self, col: usize) -> f64 {
        self.x0 + self.dx * col as f64
    }

    fn y(&self, row: usize) -> f64 {
        self.y0 + self.dy * row as f64
    }
}

/// Renders `w`; letters outside `params` are drawn as identity blocks.
pub fn render(w: &BraidWord, params: &GroupParams, style: &RenderStyle) -> String {
    let (p, n) = (params.p(), params.n());
    let cols = p * n;
    let (width, height) = (style.width as f64, style.height as f64);
    let margin = 24.0;
    let layout = Layout {
        x0: margin * 2.0,
        dx: if cols > 1 { (width - margin * 3.0) / (cols - 1) as f64 } else { 0.0 },
        y0: margin,
        dy: (height - margin * 2.0) / w.len().max(1) as f64,
    };

    // column of each strand, strands numbered by starting column
    let mut at: Vec<usize> = (0..cols).collect();
    let mut paths: Vec<String> = (0..cols)
        .map(|s| format!("M{:.1} {:.1}", layout.x(s), layout.y(0)))
        .collect();
    let mut overs = String::new();

    for (row, l) in w.letters().iter().enumerate() {
        let target = |c: usize| -> usize {
            let (q, j) = (c / n, c % n);
            match l.gen {
                Gen::Rot if j == 0 => {
                    let q2 = if l.inverse { (q + p - 1) % p } else { (q + 1) % p };
                    q2 * n
                }
                Gen::Swap(k) if k + 1 < n && j == k => c + 1,
                Gen::Swap(k) if k + 1 < n && j == k + 1 => c - 1,
                _ => c,
            }
        };
        let (y1, y2) = (layout.y(row), layout.y(row + 1));
        let ym = (y1 + y2) / 2.0;
        for s in 0..cols {
            let (c1, c2) = (at[s], target(at[s]));
            let (x1, x2) = (layout.x(c1), layout.x(c2));
            let _ = write!(paths[s], " C{x1:.1} {ym:.1} {x2:.1} {ym:.1} {x2:.1} {y2:.1}");
            let over = match l.gen {
                // positive crossing: the strand moving right passes over
                Gen::Swap(_) if c1 != c2 => (c2 > c1) != l.inverse,
                _ => false,
            };
            if over {
                let (hx1, hy1) = (x1 + (x2 - x1) * 0.3, y1 + (y2 - y1) * 0.3);
                let (hx2, hy2) = (x1 + (x2 - x1) * 0.7, y1 + (y2 - y1) * 0.7);
                let gap = STROKE + 2.0 * style.crossing_gap as f64;
                let _ = writeln!(
                    overs,
                    "<line x1=\"{hx1:.1}\" y1=\"{hy1:.1}\" x2=\"{hx2:.1}\" y2=\"{hy2:.1}\" stroke=\"white\" stroke-width=\"{gap:.1}\"/>"
                );
                let _ = writeln!(
                    overs,
                    "<line x1=\"{hx1:.1}\" y1=\"{hy1:.1}\" x2=\"{hx2:.1}\" y2=\"{hy2:.1}\" {}/>",
                    stroke_attrs(s, n, style)
                );
            }
            at[s] = c2;
        }
    }

    if w.is_empty() {
        for (s, d) in paths.iter_mut().enumerate() {
            let _ = write!(d, " L{:.1} {:.1}", layout.x(s), layout.y(1));
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        style.width, style.height, style.width, style.height
    );
    let _ = writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let _ = writeln!(
        svg,
        "<line class=\"axis\" x1=\"{m:.1}\" y1=\"{:.1}\" x2=\"{m:.1}\" y2=\"{:.1}\" stroke=\"#999\" stroke-width=\"1\"/>",
        layout.y(0),
        layout.y(w.len().max(1)),
        m = margin
    );
    for (s, d) in paths.iter().enumerate() {
        let _ = writeln!(svg, "<path d=\"{d}\" fill=\"none\" {}/>", stroke_attrs(s, n, style));
    }
    svg.push_str(&overs);
    svg.push_str("</svg>\n");
    svg
}

fn stroke_attrs(strand: usize, n: usize, style: &RenderStyle) -> String {
    let colour = PALETTE[(strand % n) % PALETTE.len()];
    let dash = &style.dashes[(strand / n) % style.dashes.len()];
    let mut out = format!("stroke=\"{colour}\" stroke-width=\"{STROKE:.1}\"");
    if !dash.is_empty() {
        let _ = write!(out, " stroke-dasharray=\"{dash}\"");
    }
    out
}
