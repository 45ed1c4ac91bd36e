//! Static SVG drawings of plats, optionally with a vertical sphere's arc.

use std::fmt::Write as _;

use crate::plat::{Closure, PlatGrid};
use crate::spheres::VerticalSphereSpec;

const SPACING: i64 = 40;
const MARGIN: i64 = 50;
const CROSSING_HEIGHT: i64 = 30;
const ROW_PAD: i64 = 20;
const CAP_HEIGHT: i64 = 30;

fn position_x(p: usize) -> i64 {
    MARGIN + (p as i64 - 1) * SPACING
}

/// x coordinate of gap g, between positions g and g+1.
pub fn gap_x(g: usize) -> i64 {
    MARGIN + (2 * g as i64 - 1) * SPACING / 2
}

struct Layout {
    /// Top y of each row (index 0 unused), plus the bottom of the last row.
    row_top: Vec<i64>,
}

fn layout(grid: &PlatGrid) -> Layout {
    let mut row_top = vec![0, MARGIN + CAP_HEIGHT];
    for i in 1..=grid.row_count() {
        let tallest = grid.rows()[i - 1].iter().map(|a| a.unsigned_abs()).max().unwrap_or(0).max(1);
        let top = row_top[i];
        row_top.push(top + tallest as i64 * CROSSING_HEIGHT + ROW_PAD);
    }
    Layout { row_top }
}

fn line(out: &mut String, x1: i64, y1: i64, x2: i64, y2: i64) {
    writeln!(out, r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
}

pub fn render_svg(grid: &PlatGrid, overlay: Option<&VerticalSphereSpec>) -> String {
    let strands = grid.strands();
    let lay = layout(grid);
    let bottom = *lay.row_top.last().unwrap();
    let width = position_x(strands) + MARGIN;
    let height = bottom + CAP_HEIGHT * 2 + MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    out.push_str("<style>line, path { stroke: black; stroke-width: 2; fill: none; } rect.twist { fill: none; stroke: #888; stroke-dasharray: 4 2; } text { font: 11px sans-serif; } path.sphere { stroke: red; }</style>\n");
    out.push_str("<g class=\"strands\">\n");

    for i in 1..=grid.row_count() {
        let (top, next) = (lay.row_top[i], lay.row_top[i + 1]);
        let mut covered = vec![false; strands + 2];
        for j in 1..=grid.width_of_row(i) {
            let k = if i % 2 == 1 { 2 * j } else { 2 * j - 1 };
            covered[k] = true;
            covered[k + 1] = true;
            let a = grid.get(i, j);
            let (xl, xr) = (position_x(k), position_x(k + 1));
            let count = a.unsigned_abs() as usize;
            // crossings centred in the row; straight strands above and below
            let body = count as i64 * CROSSING_HEIGHT;
            let y0 = top + (next - top - body) / 2;
            line(&mut out, xl, top, xl, y0);
            line(&mut out, xr, top, xr, y0);
            for c in 0..count {
                let ya = y0 + c as i64 * CROSSING_HEIGHT;
                let yb = ya + CROSSING_HEIGHT;
                let (ym, xm) = ((ya + yb) / 2, (xl + xr) / 2);
                let gap = 5;
                if a > 0 {
                    // `/` on top
                    line(&mut out, xl, yb, xr, ya);
                    line(&mut out, xl, ya, xm - gap, ym - gap);
                    line(&mut out, xm + gap, ym + gap, xr, yb);
                } else {
                    line(&mut out, xl, ya, xr, yb);
                    line(&mut out, xr, ya, xm + gap, ym - gap);
                    line(&mut out, xm - gap, ym + gap, xl, yb);
                }
            }
            line(&mut out, xl, y0 + body, xl, next);
            line(&mut out, xr, y0 + body, xr, next);
        }
        for p in (1..=strands).filter(|&p| !covered[p]) {
            line(&mut out, position_x(p), top, position_x(p), next);
        }
    }

    let top_y = lay.row_top[1];
    for (p, q) in grid.top_caps() {
        let (x1, x2) = (position_x(p), position_x(q));
        let r = (x2 - x1) / 2;
        writeln!(out, r#"  <path class="bridge" d="M {x1} {top_y} A {r} {r} 0 0 1 {x2} {top_y}"/>"#).unwrap();
    }
    for (p, q) in grid.bottom_caps() {
        let (x1, x2) = (position_x(p), position_x(q));
        if grid.closure() == Closure::EvenPlat && p > q {
            let y = bottom + CAP_HEIGHT * 3 / 2;
            writeln!(out, r#"  <path class="bridge" d="M {x1} {bottom} L {x1} {y} L {x2} {y} L {x2} {bottom}"/>"#).unwrap();
        } else {
            let r = (x2 - x1).abs() / 2;
            writeln!(out, r#"  <path class="bridge" d="M {x1} {bottom} A {r} {r} 0 0 0 {x2} {bottom}"/>"#).unwrap();
        }
    }
    out.push_str("</g>\n<g class=\"boxes\">\n");

    for r in grid.regions() {
        let (top, next) = (lay.row_top[r.i], lay.row_top[r.i + 1]);
        let k = if r.i % 2 == 1 { 2 * r.j } else { 2 * r.j - 1 };
        let x = position_x(k) - 8;
        let w = SPACING + 16;
        let (y, h) = (top + 4, next - top - 8);
        let a = grid.get(r.i, r.j);
        writeln!(
            out,
            r#"  <rect class="twist" data-i="{}" data-j="{}" x="{x}" y="{y}" width="{w}" height="{h}"><title>a_{{{},{}}} = {a}</title></rect>"#,
            r.i, r.j, r.i, r.j
        )
        .unwrap();
        writeln!(out, r#"  <text x="{}" y="{}">{a}</text>"#, x + w + 2, y + 12).unwrap();
    }
    out.push_str("</g>\n");

    if let Some(spec) = overlay {
        let gaps = spec.gaps();
        let mut d = format!("M {} {}", gap_x(gaps[0]), MARGIN);
        for (idx, &p) in gaps.iter().enumerate() {
            let i = idx + 1;
            let y = (lay.row_top[i] + lay.row_top[i + 1]) / 2;
            write!(d, " L {} {y}", gap_x(p)).unwrap();
        }
        write!(d, " L {} {}", gap_x(*gaps.last().unwrap()), bottom + CAP_HEIGHT * 2).unwrap();
        writeln!(out, r#"<path class="sphere" d="{d}"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
