//! Self-contained SVG figures: stacked eigenfunctions of a finite well and
//! the per-level energy bars comparing the two models.

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::eigenfunction::{normalized_modes, EigenFunction};
use crate::error::{Error, Result};
use crate::export::write_file;
use crate::report::{build_report, DarkLevel};
use crate::welldomain::WellSpec;

/// Curves drawn in the eigenfunction figure.
pub const MODE_COUNT: usize = 7;
/// Horizontal extent of the eigenfunction figure, in units of `L`.
pub const X_RANGE: (f64, f64) = (-3.0, 3.0);
pub const DEFAULT_SAMPLES_PER_UNIT: usize = 400;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 540.0;
const MARGIN: f64 = 50.0;
const BAR_AREA_HEIGHT: f64 = 400.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    Eigenfunctions,
    LevelBars,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotRequest {
    pub kind: PlotKind,
    pub spec: WellSpec,
    pub output_path: PathBuf,
    pub samples_per_unit: usize,
    /// Required for bars of an infinite well; caps the level count otherwise.
    pub max_levels: Option<usize>,
}

impl PlotRequest {
    pub fn new(kind: PlotKind, spec: WellSpec, output_path: impl Into<PathBuf>) -> Self {
        PlotRequest {
            kind,
            spec,
            output_path: output_path.into(),
            samples_per_unit: DEFAULT_SAMPLES_PER_UNIT,
            max_levels: None,
        }
    }
}

pub fn emit_plot(req: &PlotRequest) -> Result<()> {
    let svg = render_svg(req)?;
    write_file(&req.output_path, &svg)
}

pub fn render_svg(req: &PlotRequest) -> Result<String> {
    if req.samples_per_unit < 2 {
        return Err(Error::UnsupportedPlot(
            "samples per unit must be at least 2",
        ));
    }
    match req.kind {
        PlotKind::Eigenfunctions => {
            let strength = req
                .spec
                .strength()
                .ok_or(Error::UnsupportedPlot("eigenfunctions need a finite well"))?;
            let modes = normalized_modes(strength, req.max_levels.unwrap_or(MODE_COUNT))?;
            Ok(modes_svg(req.spec, &modes, req.samples_per_unit))
        }
        PlotKind::LevelBars => {
            if req.spec == WellSpec::Infinite && req.max_levels.is_none() {
                return Err(Error::UnsupportedPlot(
                    "level bars for an infinite well need a level count",
                ));
            }
            let report = build_report(req.spec, req.max_levels)?;
            Ok(bars_svg(req.spec, &report.dark_levels))
        }
    }
}

fn open_svg(out: &mut String, title: &str, extra: &str) {
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}"{extra}>
<title>{title}</title>
<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
}

fn modes_svg(spec: WellSpec, modes: &[EigenFunction], samples_per_unit: usize) -> String {
    let (x0, x1) = X_RANGE;
    let samples = ((x1 - x0) * samples_per_unit as f64).round() as usize + 1;
    let xs: Vec<f64> = (0..samples)
        .map(|i| x0 + (x1 - x0) * i as f64 / (samples - 1) as f64)
        .collect();

    // each curve gets one unit of vertical room; peaks fill 40% of it
    let peak = modes
        .iter()
        .flat_map(|m| xs.iter().map(move |&x| m.evaluate(x).abs()))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let amplitude = 0.4 / peak;
    let rows = modes.len().max(1) as f64;
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |level: f64| HEIGHT - MARGIN - (level + 0.5) / rows * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    open_svg(&mut out, &format!("Eigenfunctions, {spec}"), "");
    for wall in [-1.0, 1.0] {
        let _ = writeln!(
            out,
            r#"<line class="wall" x1="{x:.3}" y1="{top:.3}" x2="{x:.3}" y2="{bottom:.3}" stroke="black" stroke-width="2"/>"#,
            x = px(wall),
            top = MARGIN,
            bottom = HEIGHT - MARGIN
        );
    }
    for (i, mode) in modes.iter().enumerate() {
        let base = i as f64;
        let _ = writeln!(
            out,
            r##"<line class="baseline" x1="{:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}" stroke="#bbbbbb" stroke-dasharray="4 3"/>"##,
            px(x0),
            px(x1),
            y = py(base)
        );
        let points = xs
            .iter()
            .map(|&x| {
                format!(
                    "{:.3},{:.3}",
                    px(x),
                    py(base + amplitude * mode.evaluate(x))
                )
            })
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            out,
            r#"<polyline class="mode" data-level="{}" data-z="{:.6}" fill="none" stroke="black" stroke-width="1.2" points="{points}"/>"#,
            i + 1,
            mode.z
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">n = {}</text>"#,
            px(x1) + 4.0,
            py(base) + 4.0,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

fn bars_svg(spec: WellSpec, levels: &[DarkLevel]) -> String {
    let top = levels
        .iter()
        .map(|l| l.z_squared_flexural.max(l.z_squared_classical))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let px_per_unit = BAR_AREA_HEIGHT / top;
    let floor = MARGIN + BAR_AREA_HEIGHT;
    let slot = (WIDTH - 2.0 * MARGIN) / levels.len().max(1) as f64;
    let bar_width = 0.6 * slot;

    let mut out = String::new();
    open_svg(
        &mut out,
        &format!("Normalized energy levels z², {spec}"),
        &format!(r#" data-px-per-unit="{px_per_unit:.9}""#),
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{MARGIN}" y1="{floor}" x2="{}" y2="{floor}" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    for (i, level) in levels.iter().enumerate() {
        let x = MARGIN + slot * i as f64 + 0.5 * (slot - bar_width);
        let visible = level.z_squared_classical * px_per_unit;
        let dark = level.z_squared_dark.max(0.0) * px_per_unit;
        let _ = writeln!(out, r#"<g class="level" data-level="{}">"#, level.index);
        let _ = writeln!(
            out,
            r#"<rect class="visible" x="{x:.3}" y="{:.6}" width="{bar_width:.3}" height="{visible:.6}" fill="white" stroke="black" stroke-dasharray="2 2"/>"#,
            floor - visible
        );
        let _ = writeln!(
            out,
            r##"<rect class="dark" x="{x:.3}" y="{:.6}" width="{bar_width:.3}" height="{dark:.6}" fill="#333333" stroke="black"/>"##,
            floor - visible - dark
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            x + 0.5 * bar_width,
            floor + 16.0,
            level.index
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
