//! Dependency-free SVG figures: the interval ROC square, the stacked
//! three-region area, and the bound-validation band.
//!
//! Figures are derived artifacts — every plot has a CSV twin holding the
//! exact points — so these renderers favor simplicity over configurability.

use crate::pairwise::SweepRow;
use crate::rates::{Pairing, RocCurve};
use crate::synth::BoundValidationRow;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_T: f64 = 36.0;
const MARGIN_B: f64 = 52.0;

const STRICT_COLOR: &str = "#1f77b4";
const PERMISSIVE_COLOR: &str = "#d62728";
const CORRECT_COLOR: &str = "#74c476";
const OVERLAP_COLOR: &str = "#bdbdbd";
const INCORRECT_COLOR: &str = "#fb6a4a";
const BAND_COLOR: &str = "#c6dbef";
const STAR_COLOR: &str = "#252525";

/// Maps data coordinates to pixel coordinates (y grows upward in data).
struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn sx(&self, x: f64) -> f64 {
        MARGIN_L + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - MARGIN_L - MARGIN_R)
    }

    fn sy(&self, y: f64) -> f64 {
        HEIGHT - MARGIN_B
            - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - MARGIN_T - MARGIN_B)
    }

    fn point(&self, x: f64, y: f64) -> String {
        format!("{:.2},{:.2}", self.sx(x), self.sy(y))
    }
}

fn open_svg(title: &str) -> String {
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"13\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<text x=\"{tx}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{title}</text>\n"
        ),
        w = WIDTH,
        h = HEIGHT,
        tx = WIDTH / 2.0,
        title = title
    )
}

fn axes(frame: &Frame, x_label: &str, y_label: &str, x_ticks: &[f64], y_ticks: &[f64]) -> String {
    let mut s = String::new();
    let x0 = frame.sx(frame.x_min);
    let x1 = frame.sx(frame.x_max);
    let y0 = frame.sy(frame.y_min);
    let y1 = frame.sy(frame.y_max);
    s.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n"
    ));
    s.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"black\"/>\n"
    ));
    for &t in x_ticks {
        let px = frame.sx(t);
        s.push_str(&format!(
            "<line x1=\"{px:.2}\" y1=\"{y0:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        s.push_str(&format!(
            "<text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{t}</text>\n",
            y0 + 20.0
        ));
    }
    for &t in y_ticks {
        let py = frame.sy(t);
        s.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{x0:.2}\" y2=\"{py:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{t}</text>\n",
            x0 - 9.0,
            py + 4.0
        ));
    }
    s.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{x_label}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 14.0
    ));
    s.push_str(&format!(
        "<text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">{y_label}</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    ));
    s
}

fn legend_entry(x: f64, y: f64, color: &str, label: &str) -> String {
    format!(
        concat!(
            "<rect x=\"{x:.2}\" y=\"{ry:.2}\" width=\"14\" height=\"10\" fill=\"{color}\"/>\n",
            "<text x=\"{tx:.2}\" y=\"{y:.2}\">{label}</text>\n"
        ),
        x = x,
        ry = y - 9.0,
        color = color,
        tx = x + 20.0,
        y = y,
        label = label
    )
}

/// Staircase vertices for a curve, inserting the step corner between
/// consecutive points: the lower corner `(x2, y1)` for the Strict pairing,
/// the upper corner `(x1, y2)` for the Permissive pairing — the same
/// geometry each pairing's exact step integral uses.
fn staircase(curve: &RocCurve) -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(curve.points.len() * 2);
    for (i, p) in curve.points.iter().enumerate() {
        if i > 0 {
            let prev = curve.points[i - 1];
            match curve.pairing {
                Pairing::Strict => pts.push((p.x, prev.y)),
                Pairing::Permissive => pts.push((prev.x, p.y)),
            }
        }
        pts.push((p.x, p.y));
    }
    pts
}

fn path_from(frame: &Frame, pts: &[(f64, f64)]) -> String {
    pts.iter()
        .enumerate()
        .map(|(i, &(x, y))| {
            format!("{}{}", if i == 0 { "M" } else { "L" }, frame.point(x, y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Interval ROC square: both staircases, the ambiguity band between them,
/// and the chance diagonal.
pub fn roc_figure(strict: &RocCurve, permissive: &RocCurve, auc_l: f64, auc_u: f64) -> String {
    let frame = Frame {
        x_min: 0.0,
        x_max: 1.0,
        y_min: 0.0,
        y_max: 1.0,
    };
    let mut s = open_svg("Interval ROC curves");
    let ticks = [0.0, 0.25, 0.5, 0.75, 1.0];
    s.push_str(&axes(
        &frame,
        "false positive rate",
        "true positive rate",
        &ticks,
        &ticks,
    ));

    // Ambiguity band: permissive staircase forward, strict staircase back.
    let upper = staircase(permissive);
    let mut lower = staircase(strict);
    lower.reverse();
    let mut band = path_from(&frame, &upper);
    band.push(' ');
    band.push_str(
        &lower
            .iter()
            .map(|&(x, y)| format!("L{}", frame.point(x, y)))
            .collect::<Vec<_>>()
            .join(" "),
    );
    s.push_str(&format!(
        "<path d=\"{band} Z\" fill=\"{BAND_COLOR}\" fill-opacity=\"0.6\" stroke=\"none\"/>\n"
    ));

    s.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n",
        frame.sx(0.0),
        frame.sy(0.0),
        frame.sx(1.0),
        frame.sy(1.0)
    ));
    s.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"{STRICT_COLOR}\" stroke-width=\"2\"/>\n",
        path_from(&frame, &staircase(strict))
    ));
    s.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"{PERMISSIVE_COLOR}\" stroke-width=\"2\"/>\n",
        path_from(&frame, &staircase(permissive))
    ));

    let lx = MARGIN_L + 16.0;
    s.push_str(&legend_entry(
        lx,
        MARGIN_T + 16.0,
        STRICT_COLOR,
        &format!("strict (lower AUC = {auc_l:.4})"),
    ));
    s.push_str(&legend_entry(
        lx,
        MARGIN_T + 34.0,
        PERMISSIVE_COLOR,
        &format!("permissive (upper AUC = {auc_u:.4})"),
    ));
    s.push_str(&legend_entry(lx, MARGIN_T + 52.0, BAND_COLOR, "ambiguity band"));
    s.push_str("</svg>\n");
    s
}

/// Stacked area of the three pair regions across confidence levels.
pub fn three_region_figure(rows: &[SweepRow]) -> String {
    let x_max = rows.iter().map(|r| r.level).fold(0.0f64, f64::max).max(1e-9);
    let frame = Frame {
        x_min: 0.0,
        x_max,
        y_min: 0.0,
        y_max: 1.0,
    };
    let mut s = open_svg("Pair regions vs confidence level");
    let x_ticks: Vec<f64> = rows.iter().map(|r| r.level).collect();
    s.push_str(&axes(
        &frame,
        "confidence level",
        "fraction of pairs",
        &x_ticks,
        &[0.0, 0.25, 0.5, 0.75, 1.0],
    ));

    // Three stacked bands: correct at the bottom, overlap, then incorrect.
    let lower_edge: Vec<(f64, f64)> = rows.iter().map(|r| (r.level, 0.0)).collect();
    let correct_edge: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.level, r.report.three_region.p_correct))
        .collect();
    let overlap_edge: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            (
                r.level,
                r.report.three_region.p_correct + r.report.three_region.p_overlap,
            )
        })
        .collect();
    let top_edge: Vec<(f64, f64)> = rows.iter().map(|r| (r.level, 1.0)).collect();

    for (bottom, top, color) in [
        (&lower_edge, &correct_edge, CORRECT_COLOR),
        (&correct_edge, &overlap_edge, OVERLAP_COLOR),
        (&overlap_edge, &top_edge, INCORRECT_COLOR),
    ] {
        let mut back: Vec<(f64, f64)> = bottom.clone();
        back.reverse();
        let mut d = path_from(&frame, top);
        for &(x, y) in &back {
            d.push_str(&format!(" L{}", frame.point(x, y)));
        }
        s.push_str(&format!(
            "<path d=\"{d} Z\" fill=\"{color}\" fill-opacity=\"0.85\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
        ));
    }

    let lx = WIDTH - MARGIN_R - 190.0;
    s.push_str(&legend_entry(lx, MARGIN_T + 16.0, CORRECT_COLOR, "correct ranking"));
    s.push_str(&legend_entry(lx, MARGIN_T + 34.0, OVERLAP_COLOR, "overlap (abstain)"));
    s.push_str(&legend_entry(lx, MARGIN_T + 52.0, INCORRECT_COLOR, "incorrect ranking"));
    s.push_str("</svg>\n");
    s
}

/// Bound-validation band: the theoretical range across alpha, with the
/// interval AUCs and the true optimal AUC overlaid.
pub fn bounds_figure(rows: &[BoundValidationRow]) -> String {
    let x_min = rows.iter().map(|r| r.alpha).fold(f64::INFINITY, f64::min);
    let x_max = rows.iter().map(|r| r.alpha).fold(0.0f64, f64::max);
    let frame = Frame {
        x_min,
        x_max: if x_max > x_min { x_max } else { x_min + 1e-9 },
        y_min: 0.0,
        y_max: 1.0,
    };
    let mut s = open_svg("Optimal-AUC bounds vs miscoverage");
    let x_ticks: Vec<f64> = rows.iter().map(|r| r.alpha).collect();
    s.push_str(&axes(
        &frame,
        "per-class miscoverage alpha",
        "AUC",
        &x_ticks,
        &[0.0, 0.25, 0.5, 0.75, 1.0],
    ));

    let upper: Vec<(f64, f64)> = rows.iter().map(|r| (r.alpha, r.upper_bound)).collect();
    let mut lower: Vec<(f64, f64)> = rows.iter().map(|r| (r.alpha, r.lower_bound)).collect();
    lower.reverse();
    let mut d = path_from(&frame, &upper);
    for &(x, y) in &lower {
        d.push_str(&format!(" L{}", frame.point(x, y)));
    }
    s.push_str(&format!(
        "<path d=\"{d} Z\" fill=\"{BAND_COLOR}\" fill-opacity=\"0.7\" stroke=\"none\"/>\n"
    ));

    for (values, color) in [
        (
            rows.iter().map(|r| (r.alpha, r.auc_l)).collect::<Vec<_>>(),
            STRICT_COLOR,
        ),
        (
            rows.iter().map(|r| (r.alpha, r.auc_u)).collect::<Vec<_>>(),
            PERMISSIVE_COLOR,
        ),
        (
            rows.iter().map(|r| (r.alpha, r.auc_star)).collect::<Vec<_>>(),
            STAR_COLOR,
        ),
    ] {
        s.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            path_from(&frame, &values)
        ));
    }
    for r in rows {
        s.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{STAR_COLOR}\"/>\n",
            frame.sx(r.alpha),
            frame.sy(r.auc_star)
        ));
    }

    let lx = MARGIN_L + 16.0;
    s.push_str(&legend_entry(lx, HEIGHT - MARGIN_B - 60.0, BAND_COLOR, "theoretical range"));
    s.push_str(&legend_entry(lx, HEIGHT - MARGIN_B - 42.0, STRICT_COLOR, "lower AUC"));
    s.push_str(&legend_entry(lx, HEIGHT - MARGIN_B - 24.0, PERMISSIVE_COLOR, "upper AUC"));
    s.push_str(&legend_entry(lx, HEIGHT - MARGIN_B - 6.0, STAR_COLOR, "optimal AUC (truth)"));
    s.push_str("</svg>\n");
    s
}
