//! Shared chart scaffolding: canvas, title, axes, gridlines and legend.

use super::axis::{format_tick, AxisKind, AxisSpec};
use super::trace::{GeometryTrace, TraceRecord};
use super::{ChartError, ChartSpec};
use crate::canvas::{self, background, contrast_color, draw_text, Image, Rgba, TextStyle};
use crate::layout::Rect;

pub struct Frame {
    pub img: Image,
    pub plot: Rect,
    pub text_color: Rgba,
}

/// Canvas with background, title and a plot area leaving room for labels
/// and an optional legend strip on the right.
pub fn begin(spec: &ChartSpec, legend_entries: usize) -> Result<Frame, ChartError> {
    let img = background::render(spec.background_id, spec.canvas_w, spec.canvas_h);
    let bg_probe = img.get(spec.canvas_w / 2, spec.canvas_h / 2);
    let text_color = contrast_color(bg_probe);
    let mut frame = Frame {
        img,
        plot: Rect::new(0, 0, 1, 1),
        text_color,
    };

    // Title, shrunk to fit if needed; below 9pt the spec is rejected.
    let mut title_size = spec.title_size;
    while canvas::fonts::text_width(spec.font, title_size, &spec.title)
        > spec.canvas_w as f32 - 20.0
    {
        title_size -= 1.0;
        if title_size < 9.0 {
            return Err(ChartError::LabelOverflow(format!(
                "title `{}` cannot fit the canvas",
                spec.title
            )));
        }
    }
    let title_style = TextStyle {
        font_id: spec.font,
        size: title_size,
        color: text_color,
        line_spacing: 1.0,
        alignment: canvas::text::Alignment::Center,
        wrap_width: 0,
    };
    let title_h = canvas::fonts::line_height(spec.font, title_size).ceil() as u32 + 8;
    draw_text(
        &mut frame.img,
        &spec.title,
        &title_style,
        Rect::new(10, 6, spec.canvas_w - 20, title_h),
    );

    let legend_w = if legend_entries > 1 { 150 } else { 0 };
    let left = 64u32;
    let bottom = 46u32;
    let top = title_h + 12;
    let right = 20 + legend_w;
    if spec.canvas_w <= left + right + 40 || spec.canvas_h <= top + bottom + 40 {
        return Err(ChartError::LabelOverflow("canvas too small for plot".into()));
    }
    frame.plot = Rect::new(
        left,
        top,
        spec.canvas_w - left - right,
        spec.canvas_h - top - bottom,
    );
    Ok(frame)
}

/// Draw linear-axis ticks, labels and gridlines for a vertical value axis
/// (left edge) or horizontal value axis (bottom edge).
pub fn draw_value_axis(
    frame: &mut Frame,
    spec: &ChartSpec,
    axis: &AxisSpec,
    vertical: bool,
    trace: &mut GeometryTrace,
) {
    if axis.kind != AxisKind::Linear {
        return;
    }
    let plot = frame.plot;
    let grid = Rgba(
        frame.text_color.0 / 2 + 96,
        frame.text_color.1 / 2 + 96,
        frame.text_color.2 / 2 + 96,
        255,
    );
    let style = TextStyle {
        font_id: spec.font,
        size: spec.label_size,
        color: frame.text_color,
        line_spacing: 1.0,
        alignment: canvas::text::Alignment::Right,
        wrap_width: 0,
    };
    for t in axis.ticks() {
        let f = axis.fraction(t);
        if vertical {
            let y = plot.bottom() - 1 - (f * (plot.h - 1) as f64).round() as u32;
            for x in plot.x..plot.right() {
                if (x + y) % 2 == 0 {
                    frame.img.put(x, y, grid);
                }
            }
            trace.push(TraceRecord::GridLine {
                vertical: false,
                at: y,
                from: plot.x,
                to: plot.right(),
            });
            let lh = canvas::fonts::line_height(spec.font, spec.label_size) as u32;
            draw_text(
                &mut frame.img,
                &format_tick(t),
                &style,
                Rect::new(2, y.saturating_sub(lh / 2), plot.x - 6, lh + 2),
            );
        } else {
            let x = plot.x + (f * (plot.w - 1) as f64).round() as u32;
            for y in plot.y..plot.bottom() {
                if (x + y) % 2 == 0 {
                    frame.img.put(x, y, grid);
                }
            }
            trace.push(TraceRecord::GridLine {
                vertical: true,
                at: x,
                from: plot.y,
                to: plot.bottom(),
            });
            let mut centered = style.clone();
            centered.alignment = canvas::text::Alignment::Center;
            draw_text(
                &mut frame.img,
                &format_tick(t),
                &centered,
                Rect::new(
                    x.saturating_sub(30),
                    plot.bottom() + 4,
                    60,
                    spec.canvas_h - plot.bottom() - 4,
                ),
            );
        }
    }
    // Axis label along the bottom edge.
    if !axis.label.is_empty() {
        let mut lab = style.clone();
        lab.alignment = canvas::text::Alignment::Center;
        draw_text(
            &mut frame.img,
            &axis.label,
            &lab,
            Rect::new(
                plot.x,
                spec.canvas_h - 18,
                plot.w,
                16,
            ),
        );
    }
}

/// Right-hand legend with color swatches; drawn only for >1 entries.
pub fn draw_legend(frame: &mut Frame, spec: &ChartSpec, entries: &[(String, Rgba)]) {
    if entries.len() <= 1 {
        return;
    }
    let x0 = frame.plot.right() + 12;
    let mut y = frame.plot.y + 4;
    let lh = canvas::fonts::line_height(spec.font, spec.label_size).ceil() as u32 + 6;
    for (name, color) in entries {
        if y + lh > frame.plot.bottom() {
            break;
        }
        frame.img.fill_rect(Rect::new(x0, y + 2, 12, 12), *color);
        let style = TextStyle {
            font_id: spec.font,
            size: spec.label_size,
            color: frame.text_color,
            line_spacing: 1.0,
            alignment: canvas::text::Alignment::Left,
            wrap_width: 0,
        };
        let w = spec.canvas_w.saturating_sub(x0 + 18).max(10);
        draw_text(
            &mut frame.img,
            &ellipsize(spec, name, w as f32),
            &style,
            Rect::new(x0 + 16, y, w, lh),
        );
        y += lh;
    }
}

/// Shrink text to `limit` px by chopping and appending an ellipsis.
pub fn ellipsize(spec: &ChartSpec, text: &str, limit: f32) -> String {
    if canvas::fonts::text_width(spec.font, spec.label_size, text) <= limit {
        return text.to_string();
    }
    let mut out = String::new();
    for ch in text.chars() {
        out.push(ch);
        if canvas::fonts::text_width(spec.font, spec.label_size, &format!("{out}…")) > limit {
            out.pop();
            break;
        }
    }
    format!("{out}…")
}

/// Solid line segment of configurable thickness.
pub fn draw_segment(img: &mut Image, a: (i64, i64), b: (i64, i64), color: Rgba, width: u32) {
    let dx = (b.0 - a.0).abs();
    let dy = (b.1 - a.1).abs();
    let steps = dx.max(dy).max(1);
    let r = width as i64 / 2;
    for s in 0..=steps {
        let x = a.0 + (b.0 - a.0) * s / steps;
        let y = a.1 + (b.1 - a.1) * s / steps;
        for oy in -r..=r {
            for ox in -r..=r {
                let (px, py) = (x + ox, y + oy);
                if px >= 0 && py >= 0 {
                    img.put(px as u32, py as u32, color);
                }
            }
        }
    }
}
