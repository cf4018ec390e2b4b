//! Pie chart renderer with inside / outside / pointer labels.

use super::frame::{self, draw_segment};
use super::trace::{GeometryTrace, TraceRecord};
use super::{palette, ChartData, ChartError, ChartSpec, ChartVariant, PieLabelPlacement};
use crate::canvas::{self, contrast_color, draw_text, Image, TextStyle};
use crate::layout::Rect;

/// Slices narrower than this get pointer labels regardless of placement.
pub const POINTER_THRESHOLD_DEG: f64 = 20.0;

pub fn render(spec: &ChartSpec, data: &ChartData) -> Result<(Image, GeometryTrace), ChartError> {
    let ChartVariant::Pie { palette: pid, labels } = &spec.variant else {
        return Err(ChartError::WrongRecordKind);
    };
    let ChartData::Table {
        categories, series, ..
    } = data
    else {
        return Err(ChartError::WrongRecordKind);
    };
    let values = &series[0].1;
    if values.is_empty() {
        return Err(ChartError::EmptyData);
    }
    if values.iter().any(|&v| v <= 0.0) {
        return Err(ChartError::NonPositivePie);
    }

    let mut trace = GeometryTrace::default();
    let mut fr = frame::begin(spec, 1)?;
    let plot = fr.plot;
    trace.plot_area = Some(plot);

    let cx = (plot.x + plot.w / 2) as f64;
    let cy = (plot.y + plot.h / 2) as f64;
    let radius = (plot.w.min(plot.h) as f64 / 2.0 - 40.0).max(30.0);

    // Exact slice angles: the final slice closes the circle so sweeps sum
    // to 360 within float error.
    let total: f64 = values.iter().sum();
    let mut starts = Vec::with_capacity(values.len());
    let mut sweeps = Vec::with_capacity(values.len());
    let mut acc = 0.0f64;
    for (i, &v) in values.iter().enumerate() {
        let start = acc / total * 360.0;
        let sweep = if i + 1 == values.len() {
            360.0 - start
        } else {
            v / total * 360.0
        };
        starts.push(start);
        sweeps.push(sweep);
        acc += v;
        trace.push(TraceRecord::PieSlice {
            index: i,
            value: v,
            start_deg: start,
            sweep_deg: sweep,
        });
    }

    // Rasterize by per-pixel angle test, 12 o'clock, clockwise.
    let r2 = radius * radius;
    let y0 = (cy - radius).floor().max(0.0) as u32;
    let y1 = (cy + radius).ceil() as u32;
    let x0 = (cx - radius).floor().max(0.0) as u32;
    let x1 = (cx + radius).ceil() as u32;
    for py in y0..=y1.min(fr.img.height() - 1) {
        for px in x0..=x1.min(fr.img.width() - 1) {
            let dx = px as f64 + 0.5 - cx;
            let dy = py as f64 + 0.5 - cy;
            if dx * dx + dy * dy > r2 {
                continue;
            }
            let mut ang = dx.atan2(-dy).to_degrees();
            if ang < 0.0 {
                ang += 360.0;
            }
            let idx = starts
                .iter()
                .zip(sweeps.iter())
                .position(|(&s, &w)| ang >= s && ang < s + w)
                .unwrap_or(values.len() - 1);
            fr.img.put(px, py, palette::palette_color(*pid, idx));
        }
    }

    // Labels.
    for (i, cat) in categories.iter().enumerate() {
        let mid = (starts[i] + sweeps[i] / 2.0).to_radians();
        let (dirx, diry) = (mid.sin(), -mid.cos());
        let slice_color = palette::palette_color(*pid, i);
        let text = format!("{cat} ({:.1}%)", values[i] / total * 100.0);
        let narrow = sweeps[i] < POINTER_THRESHOLD_DEG;
        let placement = if narrow {
            PieLabelPlacement::Pointer
        } else {
            *labels
        };
        match placement {
            PieLabelPlacement::Inside => {
                let lx = cx + dirx * radius * 0.55;
                let ly = cy + diry * radius * 0.55;
                let style = TextStyle {
                    font_id: spec.font,
                    size: spec.label_size,
                    color: contrast_color(slice_color),
                    line_spacing: 1.0,
                    alignment: canvas::text::Alignment::Center,
                    wrap_width: 0,
                };
                draw_text(
                    &mut fr.img,
                    &text,
                    &style,
                    Rect::new((lx - 70.0).max(0.0) as u32, (ly - 9.0).max(0.0) as u32, 140, 18),
                );
            }
            PieLabelPlacement::Outside | PieLabelPlacement::Pointer => {
                let lx = cx + dirx * (radius + 26.0);
                let ly = cy + diry * (radius + 18.0);
                if placement == PieLabelPlacement::Pointer || narrow {
                    draw_segment(
                        &mut fr.img,
                        (
                            (cx + dirx * radius * 0.95) as i64,
                            (cy + diry * radius * 0.95) as i64,
                        ),
                        ((cx + dirx * (radius + 14.0)) as i64, (cy + diry * (radius + 10.0)) as i64),
                        fr.text_color,
                        1,
                    );
                }
                let style = TextStyle {
                    font_id: spec.font,
                    size: spec.label_size,
                    color: fr.text_color,
                    line_spacing: 1.0,
                    alignment: if dirx < 0.0 {
                        canvas::text::Alignment::Right
                    } else {
                        canvas::text::Alignment::Left
                    },
                    wrap_width: 0,
                };
                let bx = if dirx < 0.0 { (lx - 150.0).max(0.0) } else { lx };
                draw_text(
                    &mut fr.img,
                    &text,
                    &style,
                    Rect::new(bx as u32, (ly - 9.0).max(0.0) as u32, 150, 18),
                );
            }
        }
    }

    Ok((fr.img, trace))
}

#[cfg(test)]
mod tests {
    use super::super::axis::{AxisKind, AxisSpec};
    use super::*;
    use crate::canvas::fonts::FontId;

    fn pie_spec(labels: PieLabelPlacement) -> ChartSpec {
        ChartSpec {
            variant: ChartVariant::Pie { palette: 0, labels },
            title: "shares".into(),
            x_axis: AxisSpec {
                label: "".into(),
                range: (0.0, 1.0),
                tick_interval: 1.0,
                kind: AxisKind::Categorical,
            },
            y_axis: AxisSpec {
                label: "".into(),
                range: (0.0, 1.0),
                tick_interval: 1.0,
                kind: AxisKind::Categorical,
            },
            font: FontId::Sans,
            title_size: 14.0,
            label_size: 10.0,
            background_id: 0,
            canvas_w: 700,
            canvas_h: 620,
        }
    }

    fn data(vals: Vec<f64>) -> ChartData {
        ChartData::Table {
            category_label: "c".into(),
            categories: (0..vals.len()).map(|i| format!("part {i}")).collect(),
            series: vec![("v".into(), vals)],
        }
    }

    #[test]
    fn proportional_angles_for_1_1_2() {
        let (_, trace) = render(&pie_spec(PieLabelPlacement::Inside), &data(vec![1.0, 1.0, 2.0]))
            .unwrap();
        let slices: Vec<(usize, f64, f64, f64)> = trace.pie_slices().collect();
        assert_eq!(slices.len(), 3);
        assert!((slices[0].3 - 90.0).abs() < 1e-9);
        assert!((slices[1].3 - 90.0).abs() < 1e-9);
        assert!((slices[2].3 - 180.0).abs() < 1e-9);
    }

    #[test]
    fn sweeps_close_the_circle_exactly() {
        let (_, trace) = render(
            &pie_spec(PieLabelPlacement::Outside),
            &data(vec![3.3, 1.7, 9.4, 0.6, 2.2]),
        )
        .unwrap();
        let total_sweep: f64 = trace.pie_slices().map(|(_, _, _, s)| s).sum();
        assert!((total_sweep - 360.0).abs() < 0.01);
        for (_, v, _, sweep) in trace.pie_slices() {
            let ideal = v / 17.2 * 360.0;
            assert!((sweep - ideal).abs() < 0.01, "{sweep} vs {ideal}");
        }
    }

    #[test]
    fn zero_or_negative_values_are_rejected() {
        assert!(matches!(
            render(&pie_spec(PieLabelPlacement::Inside), &data(vec![1.0, 0.0])),
            Err(ChartError::NonPositivePie)
        ));
    }

    #[test]
    fn pie_pixels_use_slice_colors() {
        let spec = pie_spec(PieLabelPlacement::Pointer);
        let (img, trace) = render(&spec, &data(vec![5.0, 5.0])).unwrap();
        let plot = trace.plot_area.unwrap();
        let cx = plot.x + plot.w / 2;
        let cy = plot.y + plot.h / 2;
        // Slice 0 occupies the right half (clockwise from 12 o'clock).
        assert_eq!(img.get(cx + 30, cy), palette::palette_color(0, 0));
        assert_eq!(img.get(cx - 30, cy), palette::palette_color(0, 1));
    }
}
