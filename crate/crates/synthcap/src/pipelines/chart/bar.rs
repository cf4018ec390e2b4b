//! Bar chart renderer (single / grouped / stacked, both orientations).

use super::frame;
use super::trace::{GeometryTrace, TraceRecord};
use super::{palette, BarStyle, BarTexture, BarType, ChartData, ChartError, ChartSpec, ChartVariant, Orientation};
use crate::canvas::{self, draw_text, Image, Rgba, TextStyle};
use crate::layout::Rect;

pub fn render(spec: &ChartSpec, data: &ChartData) -> Result<(Image, GeometryTrace), ChartError> {
    let ChartVariant::Bar {
        bar_type,
        orientation,
        style,
    } = &spec.variant
    else {
        return Err(ChartError::WrongRecordKind);
    };
    let ChartData::Table {
        categories, series, ..
    } = data
    else {
        return Err(ChartError::WrongRecordKind);
    };
    if matches!(bar_type, BarType::Grouped | BarType::Stacked) && series.len() < 2 {
        return Err(ChartError::NotEnoughSeries);
    }
    if series.is_empty() || categories.is_empty() {
        return Err(ChartError::EmptyData);
    }

    let mut trace = GeometryTrace::default();
    let mut fr = frame::begin(spec, series.len())?;
    let value_axis = match orientation {
        Orientation::Vertical => &spec.y_axis,
        Orientation::Horizontal => &spec.x_axis,
    };
    frame::draw_value_axis(
        &mut fr,
        spec,
        value_axis,
        *orientation == Orientation::Vertical,
        &mut trace,
    );
    trace.plot_area = Some(fr.plot);
    trace.value_range = Some(value_axis.range);

    let n_cat = categories.len();
    let n_ser = series.len();
    let plot = fr.plot;
    // Length along the category axis and along the value axis.
    let cat_len = match orientation {
        Orientation::Vertical => plot.w,
        Orientation::Horizontal => plot.h,
    };
    let val_len = match orientation {
        Orientation::Vertical => plot.h,
        Orientation::Horizontal => plot.w,
    };

    let value_px = |v: f64| -> u32 {
        (value_axis.fraction(v) * val_len as f64).round() as u32
    };

    for (ci, cat) in categories.iter().enumerate() {
        let slot_a = (ci as f64 / n_cat as f64 * cat_len as f64).round() as u32;
        let slot_b = ((ci + 1) as f64 / n_cat as f64 * cat_len as f64).round() as u32;
        let slot_w = slot_b - slot_a;
        let band = (slot_w as f64 * style.width_frac).max(1.0) as u32;
        let band_off = slot_a + (slot_w - band) / 2;

        match bar_type {
            BarType::Stacked => {
                // Cumulative pixel bounds make segment extents tile the
                // stack exactly.
                let mut cum = 0.0;
                let mut prev_px = 0u32;
                for (si, (_, vals)) in series.iter().enumerate() {
                    let v = vals[ci].max(0.0);
                    cum += v;
                    let cum_px = value_px(cum);
                    let extent = cum_px - prev_px;
                    let rect = bar_rect(plot, *orientation, band_off, band, prev_px, extent);
                    paint_bar(&mut fr.img, rect, style, si);
                    trace.push(TraceRecord::BarRect {
                        series: si,
                        category: ci,
                        value: v,
                        rect,
                    });
                    prev_px = cum_px;
                }
            }
            _ => {
                let per = (band / n_ser as u32).max(1);
                for (si, (_, vals)) in series.iter().enumerate() {
                    let v = vals[ci].max(0.0);
                    let extent = value_px(v);
                    let off = band_off + per * si as u32;
                    let rect = bar_rect(plot, *orientation, off, per.saturating_sub(if n_ser > 1 { 1 } else { 0 }).max(1), 0, extent);
                    paint_bar(&mut fr.img, rect, style, si);
                    if style.value_labels && extent > 4 {
                        draw_value_label(&mut fr.img, spec, fr.text_color, *orientation, rect, v);
                    }
                    trace.push(TraceRecord::BarRect {
                        series: si,
                        category: ci,
                        value: v,
                        rect,
                    });
                }
            }
        }

        // Category tick label.
        let style_txt = TextStyle {
            font_id: spec.font,
            size: spec.label_size,
            color: fr.text_color,
            line_spacing: 1.0,
            alignment: canvas::text::Alignment::Center,
            wrap_width: 0,
        };
        let label = frame::ellipsize(spec, cat, slot_w.max(20) as f32);
        match orientation {
            Orientation::Vertical => {
                draw_text(
                    &mut fr.img,
                    &label,
                    &style_txt,
                    Rect::new(plot.x + slot_a, plot.bottom() + 4, slot_w.max(20), 18),
                );
            }
            Orientation::Horizontal => {
                let mut right = style_txt.clone();
                right.alignment = canvas::text::Alignment::Right;
                draw_text(
                    &mut fr.img,
                    &label,
                    &right,
                    Rect::new(2, plot.y + slot_a + slot_w / 3, plot.x - 6, 18),
                );
            }
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

/// Pixel rect of a bar segment: `along` is the offset across the category
/// axis, `from_px`/`extent` run along the value axis from the baseline.
fn bar_rect(
    plot: Rect,
    orientation: Orientation,
    along: u32,
    band: u32,
    from_px: u32,
    extent: u32,
) -> Rect {
    match orientation {
        Orientation::Vertical => Rect::new(
            plot.x + along,
            plot.bottom() - from_px - extent,
            band,
            extent.max(1),
        ),
        Orientation::Horizontal => {
            Rect::new(plot.x + from_px, plot.y + along, extent.max(1), band)
        }
    }
}

fn paint_bar(img: &mut Image, rect: Rect, style: &BarStyle, series: usize) {
    let color = palette::palette_color(style.palette, series);
    img.fill_rect(rect, color);
    let dark = Rgba(
        color.0.saturating_sub(70),
        color.1.saturating_sub(70),
        color.2.saturating_sub(70),
        255,
    );
    match style.texture {
        BarTexture::Solid => {}
        BarTexture::DiagonalStripes => {
            for y in rect.y..rect.bottom() {
                for x in rect.x..rect.right() {
                    if (x + y) % 7 < 2 {
                        img.put(x, y, dark);
                    }
                }
            }
        }
        BarTexture::Dots => {
            for y in rect.y..rect.bottom() {
                for x in rect.x..rect.right() {
                    if x % 6 == 2 && y % 6 == 2 {
                        img.put(x, y, dark);
                    }
                }
            }
        }
        BarTexture::Crosshatch => {
            for y in rect.y..rect.bottom() {
                for x in rect.x..rect.right() {
                    if (x + y) % 8 == 0 || (x + rect.bottom() - y) % 8 == 0 {
                        img.put(x, y, dark);
                    }
                }
            }
        }
    }
    if style.border && rect.w > 2 && rect.h > 2 {
        for x in rect.x..rect.right() {
            img.put(x, rect.y, dark);
            img.put(x, rect.bottom() - 1, dark);
        }
        for y in rect.y..rect.bottom() {
            img.put(rect.x, y, dark);
            img.put(rect.right() - 1, y, dark);
        }
    }
}

fn draw_value_label(
    img: &mut Image,
    spec: &ChartSpec,
    color: Rgba,
    orientation: Orientation,
    rect: Rect,
    v: f64,
) {
    let style = TextStyle {
        font_id: spec.font,
        size: (spec.label_size - 1.0).max(8.0),
        color,
        line_spacing: 1.0,
        alignment: canvas::text::Alignment::Center,
        wrap_width: 0,
    };
    let text = super::axis::format_tick(v);
    match orientation {
        Orientation::Vertical => {
            draw_text(
                img,
                &text,
                &style,
                Rect::new(
                    rect.x.saturating_sub(10),
                    rect.y.saturating_sub(16),
                    rect.w + 20,
                    14,
                ),
            );
        }
        Orientation::Horizontal => {
            draw_text(
                img,
                &text,
                &style,
                Rect::new(rect.right() + 2, rect.y, 60, rect.h.max(12)),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::axis::AxisSpec;
    use super::super::tests::tabular;
    use super::*;
    use crate::canvas::fonts::FontId;
    use crate::records::RawRecord;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single_bar_spec(hi: f64) -> ChartSpec {
        ChartSpec {
            variant: ChartVariant::Bar {
                bar_type: BarType::Single,
                orientation: Orientation::Vertical,
                style: BarStyle {
                    texture: BarTexture::Solid,
                    palette: 0,
                    border: false,
                    width_frac: 0.7,
                    value_labels: false,
                },
            },
            title: "t".into(),
            x_axis: AxisSpec {
                label: "c".into(),
                range: (0.0, 1.0),
                tick_interval: 1.0,
                kind: super::super::axis::AxisKind::Categorical,
            },
            y_axis: AxisSpec::linear("v", 0.0, hi).unwrap(),
            font: FontId::Sans,
            title_size: 14.0,
            label_size: 10.0,
            background_id: 0,
            canvas_w: 800,
            canvas_h: 600,
        }
    }

    #[test]
    fn full_scale_bar_spans_the_plot_height() {
        let spec = single_bar_spec(100.0);
        let data = ChartData::Table {
            category_label: "c".into(),
            categories: vec!["only".into()],
            series: vec![("v".into(), vec![100.0])],
        };
        let (_, trace) = render(&spec, &data).unwrap();
        let plot = trace.plot_area.unwrap();
        let (_, _, v, rect) = trace.bar_rects().next().unwrap();
        assert_eq!(v, 100.0);
        assert_eq!(rect.h, plot.h);
        assert_eq!(rect.bottom(), plot.bottom());
    }

    #[test]
    fn grouped_bars_are_proportional_within_two_percent() {
        // Decode trace rects against the data ratios.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for round in 0..20 {
            let rec = tabular(2, 3);
            let mut spec = super::super::gen_chart_spec(&rec, &mut rng).unwrap();
            // Force a grouped bar regardless of what was sampled.
            if let RawRecord::Tabular { .. } = rec {
                if let ChartVariant::Pie { .. } = spec.variant {
                    continue;
                }
            }
            if let ChartVariant::Bar { bar_type, .. } = &mut spec.variant {
                *bar_type = BarType::Grouped;
            }
            let data = ChartData::from_record(&rec).unwrap();
            let (_, trace) = render(&spec, &data).unwrap();
            let plot = trace.plot_area.unwrap();
            let (lo, hi) = trace.value_range.unwrap();
            let vertical = matches!(
                spec.variant,
                ChartVariant::Bar {
                    orientation: Orientation::Vertical,
                    ..
                }
            );
            let len = if vertical { plot.h } else { plot.w } as f64;
            for (_, _, v, rect) in trace.bar_rects() {
                let extent = if vertical { rect.h } else { rect.w } as f64;
                let ideal = (v - lo.max(0.0)) / (hi - lo) * len;
                assert!(
                    (extent - ideal).abs() <= 0.02 * len + 1.0,
                    "round {round}: extent {extent} vs ideal {ideal}"
                );
            }
        }
    }

    #[test]
    fn stacked_segments_tile_the_stack_exactly() {
        let mut spec = single_bar_spec(300.0);
        spec.variant = ChartVariant::Bar {
            bar_type: BarType::Stacked,
            orientation: Orientation::Vertical,
            style: BarStyle {
                texture: BarTexture::Solid,
                palette: 1,
                border: false,
                width_frac: 0.6,
                value_labels: false,
            },
        };
        let data = ChartData::Table {
            category_label: "c".into(),
            categories: vec!["a".into(), "b".into()],
            series: vec![
                ("s1".into(), vec![37.0, 81.0]),
                ("s2".into(), vec![55.0, 13.0]),
                ("s3".into(), vec![91.0, 44.0]),
            ],
        };
        let (_, trace) = render(&spec, &data).unwrap();
        let plot = trace.plot_area.unwrap();
        let (lo, hi) = trace.value_range.unwrap();
        for ci in 0..2usize {
            let segs: Vec<(f64, Rect)> = trace
                .bar_rects()
                .filter(|(_, c, _, _)| *c == ci)
                .map(|(_, _, v, r)| (v, *r))
                .collect();
            assert_eq!(segs.len(), 3);
            // Segments tile: each starts where the previous ended.
            let mut sorted = segs.clone();
            sorted.sort_by_key(|(_, r)| std::cmp::Reverse(r.y));
            for w in sorted.windows(2) {
                assert_eq!(w[1].1.bottom(), w[0].1.y, "segments must tile");
            }
            let total_v: f64 = segs.iter().map(|(v, _)| v).sum();
            let stack_px: u32 = segs.iter().map(|(_, r)| r.h).sum();
            let ideal = (total_v - lo) / (hi - lo) * plot.h as f64;
            assert!(
                (stack_px as f64 - ideal).abs() <= 1.0,
                "stack {stack_px} vs {ideal}"
            );
        }
    }

    #[test]
    fn grouped_with_one_series_is_rejected() {
        let mut spec = single_bar_spec(10.0);
        if let ChartVariant::Bar { bar_type, .. } = &mut spec.variant {
            *bar_type = BarType::Grouped;
        }
        let data = ChartData::Table {
            category_label: "c".into(),
            categories: vec!["a".into()],
            series: vec![("s".into(), vec![5.0])],
        };
        assert!(matches!(
            render(&spec, &data),
            Err(ChartError::NotEnoughSeries)
        ));
    }
}
