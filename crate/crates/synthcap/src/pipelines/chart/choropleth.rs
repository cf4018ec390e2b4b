//! Choropleth renderer: projected region fills, annotations, color bar or
//! discrete legend, and a per-region trace with verified interior pixels.

use super::frame;
use super::geo::{self, GeoRegionMeta};
use super::projection::project;
use super::trace::{GeometryTrace, TraceRecord};
use super::{palette, Annotate, ChartData, ChartError, ChartSpec, ChartVariant, ScaleKind};
use crate::canvas::{self, contrast_color, draw_text, Image, Rgba, TextStyle};
use crate::layout::Rect;
use crate::records::GeoValue;
use std::collections::BTreeMap;

/// Sentinel fill for regions without data.
pub const DROPOUT_COLOR: Rgba = Rgba(205, 205, 205, 255);

pub fn render(spec: &ChartSpec, data: &ChartData) -> Result<(Image, GeometryTrace), ChartError> {
    let ChartVariant::Choropleth {
        region_set,
        scale,
        projection,
        dropout,
        annotate,
        ramp,
    } = &spec.variant
    else {
        return Err(ChartError::WrongRecordKind);
    };
    let ChartData::Geo { values, .. } = data else {
        return Err(ChartError::WrongRecordKind);
    };

    let regions = geo::load_geo_regions(*region_set)?;
    let value_of: BTreeMap<&str, &GeoValue> =
        values.iter().map(|(id, v)| (id.as_str(), v)).collect();

    // Continuous scale bounds over live numeric values.
    let numeric: Vec<f64> = values
        .iter()
        .filter(|(id, _)| !dropout.contains(id))
        .filter_map(|(_, v)| match v {
            GeoValue::Number(n) => Some(*n),
            _ => None,
        })
        .collect();
    let (lo, hi) = numeric
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| {
            (l.min(v), h.max(v))
        });
    // Distinct category labels in sorted order.
    let labels: Vec<String> = {
        let mut set = std::collections::BTreeSet::new();
        for (_, v) in values {
            if let GeoValue::Label(l) = v {
                set.insert(l.clone());
            }
        }
        set.into_iter().collect()
    };

    let mut trace = GeometryTrace::default();
    let mut fr = frame::begin(spec, 2)?;
    let plot = fr.plot;
    trace.plot_area = Some(plot);

    // Project every ring and fit the whole set into the plot.
    let projected: Vec<Vec<Vec<(f64, f64)>>> = regions
        .iter()
        .map(|r| {
            r.rings
                .iter()
                .map(|ring| {
                    ring.iter()
                        .map(|&(lon, lat)| project(lon, lat, *projection))
                        .collect()
                })
                .collect()
        })
        .collect();
    let (mut minx, mut maxx, mut miny, mut maxy) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for rings in &projected {
        for ring in rings {
            for &(x, y) in ring {
                minx = minx.min(x);
                maxx = maxx.max(x);
                miny = miny.min(y);
                maxy = maxy.max(y);
            }
        }
    }
    let sx = (plot.w as f64 - 8.0) / (maxx - minx).max(1e-9);
    let sy = (plot.h as f64 - 8.0) / (maxy - miny).max(1e-9);
    let scale_px = sx.min(sy);
    let off_x = plot.x as f64 + 4.0 + ((plot.w as f64 - 8.0) - (maxx - minx) * scale_px) / 2.0;
    let off_y = plot.y as f64 + 4.0 + ((plot.h as f64 - 8.0) - (maxy - miny) * scale_px) / 2.0;
    let to_px = |x: f64, y: f64| -> (f64, f64) {
        (off_x + (x - minx) * scale_px, off_y + (maxy - y) * scale_px)
    };

    // Pixel rings (tiny regions inflated to a visible minimum), fill
    // colors and drop flags, in region order.
    let mut px_rings: Vec<Vec<Vec<(f64, f64)>>> = Vec::with_capacity(regions.len());
    let mut fills: Vec<Rgba> = Vec::with_capacity(regions.len());
    let mut drops: Vec<bool> = Vec::with_capacity(regions.len());
    for (region, rings) in regions.iter().zip(projected.iter()) {
        let dropped = dropout.contains(&region.id) || !value_of.contains_key(region.id.as_str());
        let fill = if dropped {
            DROPOUT_COLOR
        } else {
            match value_of[region.id.as_str()] {
                GeoValue::Number(n) => {
                    let t = if hi > lo { (n - lo) / (hi - lo) } else { 0.5 };
                    match scale {
                        ScaleKind::Continuous => palette::ramp_color(*ramp, t),
                        ScaleKind::Categorical => palette::palette_color(*ramp, 0),
                    }
                }
                GeoValue::Label(l) => {
                    let idx = labels.iter().position(|x| x == l).unwrap_or(0);
                    palette::palette_color(*ramp, idx)
                }
            }
        };
        px_rings.push(
            rings
                .iter()
                .map(|ring| {
                    let px: Vec<(f64, f64)> = ring.iter().map(|&(x, y)| to_px(x, y)).collect();
                    ensure_min_extent(&px, 5.0)
                })
                .collect(),
        );
        fills.push(fill);
        drops.push(dropped);
    }

    // Fill large regions first so inflated small neighbours stay visible.
    let mut order: Vec<usize> = (0..regions.len()).collect();
    order.sort_by(|&a, &b| {
        ring_extent(&px_rings[b])
            .partial_cmp(&ring_extent(&px_rings[a]))
            .unwrap()
    });
    let mut candidates: Vec<Vec<(u32, u32)>> = vec![Vec::new(); regions.len()];
    for &i in &order {
        for ring in &px_rings[i] {
            fill_polygon(&mut fr.img, ring, fills[i], &mut candidates[i]);
            stroke_polygon(&mut fr.img, ring, Rgba(90, 90, 90, 255));
        }
    }
    if *annotate != Annotate::None {
        for i in 0..regions.len() {
            annotate_region(&mut fr.img, spec, &regions[i], &px_rings[i], fills[i], *annotate);
        }
    }
    // Keep the first candidate still showing the fill after all drawing.
    for i in 0..regions.len() {
        let interior = candidates[i]
            .iter()
            .find(|&&(x, y)| fr.img.get(x, y) == fills[i])
            .copied();
        trace.push(TraceRecord::RegionFill {
            region_id: regions[i].id.clone(),
            color: fills[i],
            interior_px: interior,
            dropped: drops[i],
        });
    }

    match scale {
        ScaleKind::Continuous => {
            let (plot_area, text_color) = (fr.plot, fr.text_color);
            draw_color_bar(&mut fr.img, spec, plot_area, text_color, *ramp, lo, hi);
        }
        ScaleKind::Categorical => {
            let mut entries: Vec<(String, Rgba)> = labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), palette::palette_color(*ramp, i)))
                .collect();
            if !dropout.is_empty() {
                entries.push(("no data".to_string(), DROPOUT_COLOR));
            }
            frame::draw_legend(&mut fr, spec, &entries);
        }
    }
    if *scale == ScaleKind::Continuous && !dropout.is_empty() {
        // Note the dropout swatch under the color bar.
        let x0 = fr.plot.right() + 12;
        let y0 = fr.plot.bottom().saturating_sub(18);
        fr.img.fill_rect(Rect::new(x0, y0, 12, 12), DROPOUT_COLOR);
        let style = TextStyle {
            font_id: spec.font,
            size: spec.label_size,
            color: fr.text_color,
            line_spacing: 1.0,
            alignment: canvas::text::Alignment::Left,
            wrap_width: 0,
        };
        draw_text(
            &mut fr.img,
            "no data",
            &style,
            Rect::new(x0 + 16, y0.saturating_sub(2), 110, 16),
        );
    }

    Ok((fr.img, trace))
}

/// Scale a pixel ring up around its centroid until it spans `min_px`.
fn ensure_min_extent(ring: &[(f64, f64)], min_px: f64) -> Vec<(f64, f64)> {
    let n = ring.len().max(1) as f64;
    let (cx, cy) = ring
        .iter()
        .fold((0.0, 0.0), |(ax, ay), &(x, y)| (ax + x / n, ay + y / n));
    let (mut w, mut h) = (0.0f64, 0.0f64);
    for &(x, y) in ring {
        w = w.max((x - cx).abs() * 2.0);
        h = h.max((y - cy).abs() * 2.0);
    }
    let extent = w.max(h);
    if extent >= min_px || extent <= 0.0 {
        return ring.to_vec();
    }
    let k = min_px / extent;
    ring.iter()
        .map(|&(x, y)| (cx + (x - cx) * k, cy + (y - cy) * k))
        .collect()
}

/// Even-odd scanline fill; pushes span midpoints as interior candidates.
fn fill_polygon(
    img: &mut Image,
    ring: &[(f64, f64)],
    color: Rgba,
    candidates: &mut Vec<(u32, u32)>,
) {
    let ymin = ring.iter().map(|p| p.1).fold(f64::INFINITY, f64::min).floor() as i64;
    let ymax = ring.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
    for y in ymin.max(0)..=ymax.min(img.height() as i64 - 1) {
        let scan = y as f64 + 0.5;
        let mut xs: Vec<f64> = Vec::new();
        for w in ring.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            if (y0 <= scan && y1 > scan) || (y1 <= scan && y0 > scan) {
                xs.push(x0 + (scan - y0) / (y1 - y0) * (x1 - x0));
            }
        }
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for pair in xs.chunks(2) {
            if pair.len() < 2 {
                continue;
            }
            let a = pair[0].round().max(0.0) as i64;
            let b = pair[1].round() as i64;
            for x in a..b {
                if x >= 0 && (x as u32) < img.width() {
                    img.put(x as u32, y as u32, color);
                }
            }
            if b - a >= 3 && candidates.len() < 48 {
                candidates.push((((a + b) / 2) as u32, y as u32));
            }
        }
    }
}

fn stroke_polygon(img: &mut Image, ring: &[(f64, f64)], color: Rgba) {
    for w in ring.windows(2) {
        frame::draw_segment(
            img,
            (w[0].0.round() as i64, w[0].1.round() as i64),
            (w[1].0.round() as i64, w[1].1.round() as i64),
            color,
            1,
        );
    }
}

/// Largest pixel extent across the rings of one region.
fn ring_extent(rings: &[Vec<(f64, f64)>]) -> f64 {
    let mut ext = 0.0f64;
    for ring in rings {
        let (mut minx, mut maxx) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut miny, mut maxy) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in ring {
            minx = minx.min(x);
            maxx = maxx.max(x);
            miny = miny.min(y);
            maxy = maxy.max(y);
        }
        ext = ext.max((maxx - minx).max(maxy - miny));
    }
    ext
}

fn annotate_region(
    img: &mut Image,
    spec: &ChartSpec,
    region: &GeoRegionMeta,
    px_rings: &[Vec<(f64, f64)>],
    fill: Rgba,
    annotate: Annotate,
) {
    let text = match annotate {
        Annotate::Name => region.name.clone(),
        Annotate::Acronym => region.acronym.clone(),
        Annotate::None => return,
    };
    // Pixel centroid and width of the main ring.
    let ring = &px_rings[0];
    let n = (ring.len() - 1).max(1) as f64;
    let (mut px, mut py) = (0.0, 0.0);
    let (mut minx, mut maxx) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in ring.iter().take(ring.len() - 1) {
        px += x / n;
        py += y / n;
        minx = minx.min(x);
        maxx = maxx.max(x);
    }
    let region_w = (maxx - minx) as f32;
    let size = (spec.label_size - 2.0).max(7.0);
    // Only annotate when the text genuinely fits inside the region.
    if canvas::fonts::text_width(spec.font, size, &text) > region_w * 0.9 {
        return;
    }
    let style = TextStyle {
        font_id: spec.font,
        size,
        color: contrast_color(fill),
        line_spacing: 1.0,
        alignment: canvas::text::Alignment::Center,
        wrap_width: 0,
    };
    draw_text(
        img,
        &text,
        &style,
        Rect::new(
            (px - 60.0).max(0.0) as u32,
            (py - 7.0).max(0.0) as u32,
            120,
            14,
        ),
    );
}

fn draw_color_bar(
    img: &mut Image,
    spec: &ChartSpec,
    plot: crate::layout::Rect,
    text_color: Rgba,
    ramp: usize,
    lo: f64,
    hi: f64,
) {
    let x0 = plot.right() + 16;
    let w = 18u32;
    let y0 = plot.y + 10;
    let h = plot.h.saturating_sub(60).max(40);
    for y in 0..h {
        let t = 1.0 - y as f64 / (h - 1) as f64;
        let c = palette::ramp_color(ramp, t);
        for x in 0..w {
            img.put(x0 + x, y0 + y, c);
        }
    }
    let style = TextStyle {
        font_id: spec.font,
        size: spec.label_size,
        color: text_color,
        line_spacing: 1.0,
        alignment: canvas::text::Alignment::Left,
        wrap_width: 0,
    };
    if hi.is_finite() {
        draw_text(
            img,
            &super::axis::format_tick(hi),
            &style,
            Rect::new(x0 + w + 4, y0.saturating_sub(4), 90, 16),
        );
        draw_text(
            img,
            &super::axis::format_tick(lo),
            &style,
            Rect::new(x0 + w + 4, y0 + h - 10, 90, 16),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::super::axis::{AxisKind, AxisSpec};
    use super::super::geo::RegionSet;
    use super::super::projection::Projection;
    use super::*;
    use crate::canvas::fonts::FontId;

    fn geo_values(set: RegionSet) -> Vec<(String, GeoValue)> {
        geo::load_geo_regions(set)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), GeoValue::Number((i * 13 % 97) as f64)))
            .collect()
    }

    fn map_spec(set: RegionSet, dropout: Vec<String>) -> ChartSpec {
        ChartSpec {
            variant: ChartVariant::Choropleth {
                region_set: set,
                scale: ScaleKind::Continuous,
                projection: Projection::Equirectangular,
                dropout,
                annotate: Annotate::Acronym,
                ramp: 2,
            },
            title: "map".into(),
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
            title_size: 15.0,
            label_size: 10.0,
            background_id: 0,
            canvas_w: 1100,
            canvas_h: 760,
        }
    }

    #[test]
    fn interior_pixels_show_the_assigned_colors() {
        for set in [RegionSet::Europe, RegionSet::Us] {
            let spec = map_spec(set, vec![]);
            let data = ChartData::Geo {
                region_set: set,
                values: geo_values(set),
            };
            let (img, trace) = render(&spec, &data).unwrap();
            let mut checked = 0;
            for rec in &trace.records {
                if let TraceRecord::RegionFill {
                    region_id,
                    color,
                    interior_px,
                    dropped,
                } = rec
                {
                    assert!(!dropped, "{region_id} unexpectedly dropped");
                    let (x, y) = interior_px.unwrap_or_else(|| {
                        panic!("{set:?}/{region_id}: no surviving interior pixel")
                    });
                    assert_eq!(img.get(x, y), *color, "{set:?}/{region_id}");
                    checked += 1;
                }
            }
            assert!(checked >= 30);
        }
    }

    #[test]
    fn dropout_regions_get_the_sentinel_color() {
        let set = RegionSet::China;
        let dropout = vec!["hainan".to_string(), "tibet".to_string()];
        let spec = map_spec(set, dropout.clone());
        let data = ChartData::Geo {
            region_set: set,
            values: geo_values(set),
        };
        let (img, trace) = render(&spec, &data).unwrap();
        for rec in &trace.records {
            if let TraceRecord::RegionFill {
                region_id,
                color,
                interior_px,
                dropped,
            } = rec
            {
                if dropout.contains(region_id) {
                    assert!(dropped);
                    assert_eq!(*color, DROPOUT_COLOR);
                    let (x, y) = interior_px.expect("dropout region visible");
                    assert_eq!(img.get(x, y), DROPOUT_COLOR);
                }
            }
        }
    }

    #[test]
    fn categorical_scale_renders_with_legend() {
        let set = RegionSet::Europe;
        let labels = ["low", "medium", "high"];
        let values: Vec<(String, GeoValue)> = geo::load_geo_regions(set)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), GeoValue::Label(labels[i % 3].to_string())))
            .collect();
        let mut spec = map_spec(set, vec![]);
        if let ChartVariant::Choropleth { scale, .. } = &mut spec.variant {
            *scale = ScaleKind::Categorical;
        }
        let data = ChartData::Geo {
            region_set: set,
            values,
        };
        let (img, trace) = render(&spec, &data).unwrap();
        assert_eq!(img.width(), 1100);
        let fills = trace
            .records
            .iter()
            .filter(|r| matches!(r, TraceRecord::RegionFill { .. }))
            .count();
        assert_eq!(fills, geo::load_geo_regions(set).unwrap().len());
    }
}
