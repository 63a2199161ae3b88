//! Flat-diagram SVG output. One row per letter, read top to bottom; strands
//! are polylines, the over strand of a classical crossing is redrawn on top
//! of a white halo, virtual crossings get a small circle and dots are filled
//! circles.

use std::fmt::Write;

use crate::word::{BraidWord, Kind};

const STEP: i64 = 40;
const MARGIN: i64 = 30;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

fn x_of(position: usize) -> i64 {
    MARGIN + position as i64 * STEP
}

fn y_of(row: usize) -> i64 {
    MARGIN + row as i64 * STEP
}

pub fn render_svg(w: &BraidWord) -> String {
    let n = w.strands();
    let rows = w.len().max(1);
    let width = 2 * MARGIN + (n as i64 - 1).max(0) * STEP;
    let height = 2 * MARGIN + rows as i64 * STEP;

    // points[strand] = successive (x, y) of that strand
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut points: Vec<Vec<(i64, i64)>> = (0..n).map(|s| vec![(x_of(s), y_of(0))]).collect();
    let mut overlays = String::new();
    let mut marks = String::new();

    for (row, l) in w.letters().iter().enumerate() {
        let (y0, y1) = (y_of(row), y_of(row + 1));
        let ym = (y0 + y1) / 2;
        let i = l.index as usize - 1;
        if l.kind == Kind::Dot {
            let _ = writeln!(marks, r#"  <circle cx="{}" cy="{}" r="5" fill="black"/>"#, x_of(i), ym);
            for (p, &strand) in occupant.iter().enumerate() {
                points[strand].push((x_of(p), y1));
            }
            continue;
        }
        let (a, b) = (occupant[i], occupant[i + 1]);
        occupant.swap(i, i + 1);
        for (p, &strand) in occupant.iter().enumerate() {
            points[strand].push((x_of(p), y1));
        }
        let (xl, xr) = (x_of(i), x_of(i + 1));
        let xm = (xl + xr) / 2;
        match l.kind {
            Kind::Virtual => {
                let _ = writeln!(
                    marks,
                    r#"  <circle cx="{xm}" cy="{ym}" r="7" fill="none" stroke="black" stroke-width="1"/>"#
                );
            }
            _ => {
                // σ_i: the strand entering at position i+1 passes over
                let (over, x_from, x_to) = if l.inverse { (a, xl, xr) } else { (b, xr, xl) };
                let colour = PALETTE[over % PALETTE.len()];
                let _ = writeln!(
                    overlays,
                    r#"  <line x1="{x_from}" y1="{y0}" x2="{x_to}" y2="{y1}" stroke="white" stroke-width="9"/>"#
                );
                let _ = writeln!(
                    overlays,
                    r#"  <line x1="{x_from}" y1="{y0}" x2="{x_to}" y2="{y1}" stroke="{colour}" stroke-width="3"/>"#
                );
                if l.kind == Kind::Marked {
                    let label = match w.dialect().group() {
                        Some(g) => g.label(l.label as usize).to_string(),
                        None => l.label.to_string(),
                    };
                    let _ = writeln!(
                        marks,
                        r#"  <text x="{}" y="{}" font-family="monospace" font-size="12">{}</text>"#,
                        xr + 6,
                        ym + 4,
                        label
                    );
                }
            }
        }
    }
    if w.is_empty() {
        for (p, &strand) in occupant.iter().enumerate() {
            points[strand].push((x_of(p), y_of(1)));
        }
    }

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, "  <title>{}</title>", w);
    let _ = writeln!(svg, r#"  <rect width="{width}" height="{height}" fill="white"/>"#);
    for (s, pts) in points.iter().enumerate() {
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(
            svg,
            r#"  <polyline points="{}" fill="none" stroke="{}" stroke-width="3"/>"#,
            coords.join(" "),
            PALETTE[s % PALETTE.len()]
        );
    }
    svg.push_str(&overlays);
    svg.push_str(&marks);
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Dialect;

    #[test]
    fn deterministic_and_well_formed() {
        let w = BraidWord::parse("d1 s1 d2 S2", Dialect::Dotted, 3).unwrap();
        let a = render_svg(&w);
        assert_eq!(a, render_svg(&w));
        assert!(a.starts_with("<?xml"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<polyline").count(), 3);
        assert_eq!(a.matches(r#"fill="black""#).count(), 2);
    }

    #[test]
    fn marked_and_virtual_annotations() {
        let w = BraidWord::parse("s1[1] S2[0]", Dialect::Z2, 3).unwrap();
        assert_eq!(render_svg(&w).matches("<text").count(), 2);
        let v = BraidWord::parse("v1 s2", Dialect::Virtual, 3).unwrap();
        assert_eq!(render_svg(&v).matches(r#"fill="none" stroke="black""#).count(), 1);
    }

    #[test]
    fn empty_word_draws_straight_strands() {
        let w = BraidWord::empty(Dialect::Classical, 2);
        let s = render_svg(&w);
        assert_eq!(s.matches("<polyline").count(), 2);
    }
}
