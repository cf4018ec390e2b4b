//! Line chart renderer.

use super::frame::{self, draw_segment};
use super::trace::{GeometryTrace, TraceRecord};
use super::{palette, ChartData, ChartError, ChartSpec, ChartVariant, Marker};
use crate::canvas::{Image, Rgba};

pub fn render(spec: &ChartSpec, data: &ChartData) -> Result<(Image, GeometryTrace), ChartError> {
    let ChartVariant::Line { style } = &spec.variant else {
        return Err(ChartError::WrongRecordKind);
    };
    let ChartData::Series(series) = data else {
        return Err(ChartError::WrongRecordKind);
    };
    if series.is_empty() || series.iter().all(|(_, p)| p.is_empty()) {
        return Err(ChartError::EmptyData);
    }

    let mut trace = GeometryTrace::default();
    let mut fr = frame::begin(spec, series.len())?;
    frame::draw_value_axis(&mut fr, spec, &spec.y_axis, true, &mut trace);
    frame::draw_value_axis(&mut fr, spec, &spec.x_axis, false, &mut trace);
    trace.plot_area = Some(fr.plot);
    trace.value_range = Some(spec.y_axis.range);

    let plot = fr.plot;
    let to_px = |x: f64, y: f64| -> (i64, i64) {
        let fx = spec.x_axis.fraction(x);
        let fy = spec.y_axis.fraction(y);
        (
            plot.x as i64 + (fx * (plot.w - 1) as f64).round() as i64,
            plot.bottom() as i64 - 1 - (fy * (plot.h - 1) as f64).round() as i64,
        )
    };

    for (si, (_, points)) in series.iter().enumerate() {
        let color = palette::palette_color(style.palette, si);
        let mut sorted = points.clone();
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let px: Vec<(i64, i64)> = sorted.iter().map(|&(x, y)| to_px(x, y)).collect();
        for (pi, pair) in px.windows(2).enumerate() {
            if style.dashed && pi % 2 == 1 {
                continue;
            }
            draw_segment(&mut fr.img, pair[0], pair[1], color, style.width);
        }
        for (pi, (&(x, y), &(vx, vy))) in px.iter().zip(sorted.iter()).enumerate() {
            draw_marker(&mut fr.img, (x, y), style.marker, color);
            trace.push(TraceRecord::LineVertex {
                series: si,
                point: pi,
                value: (vx, vy),
                px: (x, y),
            });
        }
    }

    let entries: Vec<(String, Rgba)> = series
        .iter()
        .enumerate()
        .map(|(si, (name, _))| (name.clone(), palette::palette_color(style.palette, si)))
        .collect();
    frame::draw_legend(&mut fr, spec, &entries);

    Ok((fr.img, trace))
}

fn draw_marker(img: &mut Image, at: (i64, i64), marker: Marker, color: Rgba) {
    let r = 3i64;
    match marker {
        Marker::None => {}
        Marker::Circle => {
            for dy in -r..=r {
                for dx in -r..=r {
                    if dx * dx + dy * dy <= r * r {
                        put(img, at.0 + dx, at.1 + dy, color);
                    }
                }
            }
        }
        Marker::Square => {
            for dy in -r..=r {
                for dx in -r..=r {
                    put(img, at.0 + dx, at.1 + dy, color);
                }
            }
        }
        Marker::Diamond => {
            for dy in -r..=r {
                for dx in -r..=r {
                    if dx.abs() + dy.abs() <= r {
                        put(img, at.0 + dx, at.1 + dy, color);
                    }
                }
            }
        }
    }
}

fn put(img: &mut Image, x: i64, y: i64, color: Rgba) {
    if x >= 0 && y >= 0 {
        img.put(x as u32, y as u32, color);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::RawRecord;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vertices_land_on_the_value_grid() {
        let rec = RawRecord::TimeSeries {
            label: "load".into(),
            points: vec![(0.0, 0.0), (1.0, 10.0), (2.0, 5.0), (3.0, 7.5)],
        };
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let spec = super::super::gen_chart_spec(&rec, &mut rng).unwrap();
        let data = ChartData::from_record(&rec).unwrap();
        let (img, trace) = render(&spec, &data).unwrap();
        assert_eq!(img.width(), spec.canvas_w);
        let plot = trace.plot_area.unwrap();
        for rec in &trace.records {
            if let TraceRecord::LineVertex { value, px, .. } = rec {
                // Decode the pixel back to a value through the axis.
                let fy = (plot.bottom() as i64 - 1 - px.1) as f64 / (plot.h - 1) as f64;
                let v = spec.y_axis.range.0 + fy * (spec.y_axis.range.1 - spec.y_axis.range.0);
                let tol = (spec.y_axis.range.1 - spec.y_axis.range.0) / (plot.h - 1) as f64;
                assert!((v - value.1).abs() <= tol, "{v} vs {}", value.1);
            }
        }
    }

    #[test]
    fn multi_series_renders_with_legend_room() {
        let rec = RawRecord::TimeSeries {
            label: "a".into(),
            points: vec![(0.0, 1.0), (5.0, 2.0)],
        };
        let extra = RawRecord::TimeSeries {
            label: "b".into(),
            points: vec![(0.0, 2.0), (5.0, 0.5)],
        };
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = super::super::gen_chart_spec(&rec, &mut rng).unwrap();
        let mut data = ChartData::from_record(&rec).unwrap();
        data.push_series(&extra);
        assert_eq!(data.series_count(), 2);
        let (_, trace) = render(&spec, &data).unwrap();
        let vertices = trace
            .records
            .iter()
            .filter(|r| matches!(r, TraceRecord::LineVertex { .. }))
            .count();
        assert_eq!(vertices, 4);
    }
}
