//! Chart pipeline: bar / line / pie charts and choropleth maps rendered
//! from tabular, time-series and geo metadata with randomized styling,
//! plus prose digests for caption prompts.

pub mod axis;
mod bar;
mod choropleth;
mod frame;
pub mod geo;
mod geo_data;
mod line;
pub mod palette;
mod pie;
pub mod projection;
pub mod trace;

use crate::canvas::{fonts::FontId, Image};
use crate::records::{GeoValue, RawRecord};
use axis::{AxisKind, AxisSpec};
use geo::RegionSet;
use projection::Projection;
use rand::Rng;
use serde::{Deserialize, Serialize};
use trace::GeometryTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BarType {
    Single,
    Grouped,
    Stacked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BarTexture {
    Solid,
    DiagonalStripes,
    Dots,
    Crosshatch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarStyle {
    pub texture: BarTexture,
    pub palette: usize,
    pub border: bool,
    /// Bar thickness as a fraction of its slot.
    pub width_frac: f64,
    pub value_labels: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Marker {
    None,
    Circle,
    Square,
    Diamond,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineStyle {
    pub palette: usize,
    pub dashed: bool,
    pub marker: Marker,
    pub width: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieLabelPlacement {
    Inside,
    Outside,
    Pointer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleKind {
    Continuous,
    Categorical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Annotate {
    None,
    Name,
    Acronym,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ChartVariant {
    Bar {
        bar_type: BarType,
        orientation: Orientation,
        style: BarStyle,
    },
    Line {
        style: LineStyle,
    },
    Pie {
        palette: usize,
        labels: PieLabelPlacement,
    },
    Choropleth {
        region_set: RegionSet,
        scale: ScaleKind,
        projection: Projection,
        /// Region ids rendered in the sentinel "no data" color.
        dropout: Vec<String>,
        annotate: Annotate,
        ramp: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartSpec {
    pub variant: ChartVariant,
    pub title: String,
    pub x_axis: AxisSpec,
    pub y_axis: AxisSpec,
    pub font: FontId,
    pub title_size: f32,
    pub label_size: f32,
    pub background_id: u8,
    pub canvas_w: u32,
    pub canvas_h: u32,
}

/// Data extracted from raw records, ready to render.
#[derive(Debug, Clone, PartialEq)]
pub enum ChartData {
    /// Categories with one or more numeric series.
    Table {
        category_label: String,
        categories: Vec<String>,
        series: Vec<(String, Vec<f64>)>,
    },
    /// One or more (label, points) series.
    Series(Vec<(String, Vec<(f64, f64)>)>),
    Geo {
        region_set: RegionSet,
        values: Vec<(String, GeoValue)>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum ChartError {
    #[error("record kind does not fit any chart family")]
    WrongRecordKind,
    #[error("tabular data is not numeric: {0}")]
    NonNumeric(String),
    #[error("pie values must all be positive")]
    NonPositivePie,
    #[error("stacked/grouped bars need at least 2 series")]
    NotEnoughSeries,
    #[error("no data values to draw")]
    EmptyData,
    #[error(transparent)]
    Axis(#[from] axis::AxisError),
    #[error(transparent)]
    Geo(#[from] geo::GeoError),
    #[error("label overflow: {0}")]
    LabelOverflow(String),
}

impl ChartData {
    /// Parse one raw record into chart-ready data.
    pub fn from_record(record: &RawRecord) -> Result<ChartData, ChartError> {
        match record {
            RawRecord::Tabular { headers, rows } => {
                if rows.is_empty() || headers.len() < 2 {
                    return Err(ChartError::EmptyData);
                }
                let categories: Vec<String> = rows.iter().map(|r| r[0].clone()).collect();
                let mut series = Vec::new();
                for (col, name) in headers.iter().enumerate().skip(1) {
                    let mut vals = Vec::with_capacity(rows.len());
                    for row in rows {
                        let v: f64 = row[col]
                            .trim()
                            .parse()
                            .map_err(|_| ChartError::NonNumeric(row[col].clone()))?;
                        vals.push(v);
                    }
                    series.push((name.clone(), vals));
                }
                Ok(ChartData::Table {
                    category_label: headers[0].clone(),
                    categories,
                    series,
                })
            }
            RawRecord::TimeSeries { label, points } => {
                Ok(ChartData::Series(vec![(label.clone(), points.clone())]))
            }
            RawRecord::GeoTable { region_set, values } => Ok(ChartData::Geo {
                region_set: region_set.parse()?,
                values: values.clone(),
            }),
            _ => Err(ChartError::WrongRecordKind),
        }
    }

    /// Merge an extra time-series record into a multi-line dataset.
    pub fn push_series(&mut self, record: &RawRecord) {
        if let (ChartData::Series(series), RawRecord::TimeSeries { label, points }) =
            (self, record)
        {
            series.push((label.clone(), points.clone()));
        }
    }

    pub fn series_count(&self) -> usize {
        match self {
            ChartData::Table { series, .. } => series.len(),
            ChartData::Series(s) => s.len(),
            ChartData::Geo { .. } => 1,
        }
    }
}

fn sample_title(rng: &mut impl Rng, subject: &str) -> String {
    let patterns = [
        format!("{subject} Overview"),
        format!("{subject} by Group"),
        format!("A Look at {subject}"),
        format!("{subject} Breakdown"),
        format!("{subject} Comparison"),
        subject.to_string(),
    ];
    patterns[rng.gen_range(0..patterns.len())].clone()
}

/// Randomized styling for a record, drawn from the documented ranges.
///
/// Tabular records become bar or pie charts, time series become line
/// charts and geo tables become choropleth maps.
pub fn gen_chart_spec(record: &RawRecord, rng: &mut impl Rng) -> Result<ChartSpec, ChartError> {
    let data = ChartData::from_record(record)?;
    let canvas_w = rng.gen_range(760..1400);
    let canvas_h = (canvas_w as f64 * rng.gen_range(0.62..0.85)) as u32;
    let font = [FontId::Sans, FontId::Serif, FontId::SansBold][rng.gen_range(0..3)];
    let title_size = rng.gen_range(14.0..22.0);
    let label_size = rng.gen_range(9.0..13.0);
    let background_id = [0u8, 1, 2, 3, 8][rng.gen_range(0..5)];

    match &data {
        ChartData::Table {
            category_label,
            series,
            ..
        } => {
            let pie_ok = series.len() == 1
                && series[0].1.iter().all(|&v| v > 0.0)
                && series[0].1.len() <= 9;
            if pie_ok && rng.gen_bool(0.35) {
                return Ok(ChartSpec {
                    variant: ChartVariant::Pie {
                        palette: rng.gen_range(0..palette::PALETTES.len()),
                        labels: [
                            PieLabelPlacement::Inside,
                            PieLabelPlacement::Outside,
                            PieLabelPlacement::Pointer,
                        ][rng.gen_range(0..3)],
                    },
                    title: sample_title(rng, &series[0].0),
                    x_axis: AxisSpec {
                        label: category_label.clone(),
                        range: (0.0, 1.0),
                        tick_interval: 1.0,
                        kind: AxisKind::Categorical,
                    },
                    y_axis: AxisSpec {
                        label: series[0].0.clone(),
                        range: (0.0, 1.0),
                        tick_interval: 1.0,
                        kind: AxisKind::Categorical,
                    },
                    font,
                    title_size,
                    label_size,
                    background_id,
                    canvas_w,
                    canvas_h: canvas_w.min(canvas_h + 120),
                });
            }

            let bar_type = if series.len() == 1 {
                BarType::Single
            } else if rng.gen_bool(0.5) {
                BarType::Grouped
            } else {
                BarType::Stacked
            };
            let orientation = if rng.gen_bool(0.25) {
                Orientation::Horizontal
            } else {
                Orientation::Vertical
            };
            let max_value = match bar_type {
                BarType::Stacked => {
                    let n = series[0].1.len();
                    (0..n)
                        .map(|i| series.iter().map(|(_, v)| v[i].max(0.0)).sum::<f64>())
                        .fold(0.0f64, f64::max)
                }
                _ => series
                    .iter()
                    .flat_map(|(_, v)| v.iter().copied())
                    .fold(0.0f64, f64::max),
            };
            let hi = nice_ceiling(max_value * rng.gen_range(1.02..1.35));
            let value_axis = AxisSpec::linear(series[0].0.clone(), 0.0, hi)?;
            let cat_axis = AxisSpec {
                label: category_label.clone(),
                range: (0.0, 1.0),
                tick_interval: 1.0,
                kind: AxisKind::Categorical,
            };
            let (x_axis, y_axis) = match orientation {
                Orientation::Vertical => (cat_axis, value_axis),
                Orientation::Horizontal => (value_axis, cat_axis),
            };
            Ok(ChartSpec {
                variant: ChartVariant::Bar {
                    bar_type,
                    orientation,
                    style: BarStyle {
                        texture: [
                            BarTexture::Solid,
                            BarTexture::Solid,
                            BarTexture::DiagonalStripes,
                            BarTexture::Dots,
                            BarTexture::Crosshatch,
                        ][rng.gen_range(0..5)],
                        palette: rng.gen_range(0..palette::PALETTES.len()),
                        border: rng.gen_bool(0.5),
                        width_frac: rng.gen_range(0.45..0.9),
                        value_labels: rng.gen_bool(0.4),
                    },
                },
                title: sample_title(rng, category_label),
                x_axis,
                y_axis,
                font,
                title_size,
                label_size,
                background_id,
                canvas_w,
                canvas_h,
            })
        }
        ChartData::Series(series) => {
            let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
            let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
            for (_, pts) in series {
                for &(x, y) in pts {
                    xmin = xmin.min(x);
                    xmax = xmax.max(x);
                    ymin = ymin.min(y);
                    ymax = ymax.max(y);
                }
            }
            if !xmin.is_finite() || xmax <= xmin {
                return Err(ChartError::EmptyData);
            }
            if ymax <= ymin {
                ymax = ymin + 1.0;
            }
            let pad = (ymax - ymin) * rng.gen_range(0.05..0.25);
            let y_axis = AxisSpec::linear(series[0].0.clone(), ymin - pad, ymax + pad)?;
            let x_axis = AxisSpec::linear("", xmin, xmax)?;
            Ok(ChartSpec {
                variant: ChartVariant::Line {
                    style: LineStyle {
                        palette: rng.gen_range(0..palette::PALETTES.len()),
                        dashed: rng.gen_bool(0.3),
                        marker: [Marker::None, Marker::Circle, Marker::Square, Marker::Diamond]
                            [rng.gen_range(0..4)],
                        width: rng.gen_range(1..4),
                    },
                },
                title: sample_title(rng, &series[0].0),
                x_axis,
                y_axis,
                font,
                title_size,
                label_size,
                background_id,
                canvas_w,
                canvas_h,
            })
        }
        ChartData::Geo { region_set, values } => {
            let scale = if values
                .iter()
                .all(|(_, v)| matches!(v, GeoValue::Number(_)))
            {
                ScaleKind::Continuous
            } else {
                ScaleKind::Categorical
            };
            let projection = match rng.gen_range(0..3) {
                0 => Projection::Equirectangular,
                1 => Projection::Mercator,
                _ => {
                    let regions = geo::load_geo_regions(*region_set)?;
                    let (mut clon, mut clat) = (0.0, 0.0);
                    for r in &regions {
                        let (x, y) = r.centroid();
                        clon += x;
                        clat += y;
                    }
                    let n = regions.len() as f64;
                    Projection::LambertAzimuthal {
                        center_lon: (clon / n * 10.0).round() / 10.0,
                        center_lat: (clat / n * 10.0).round() / 10.0,
                    }
                }
            };
            // Value dropout, at most 30% of regions.
            let all_ids: Vec<String> = values.iter().map(|(id, _)| id.clone()).collect();
            let drop_n = (all_ids.len() as f64 * rng.gen_range(0.0..0.30)).floor() as usize;
            let mut pool = all_ids.clone();
            use rand::seq::SliceRandom;
            pool.shuffle(rng);
            let mut dropout: Vec<String> = pool.into_iter().take(drop_n).collect();
            dropout.sort();
            Ok(ChartSpec {
                variant: ChartVariant::Choropleth {
                    region_set: *region_set,
                    scale,
                    projection,
                    dropout,
                    annotate: [Annotate::None, Annotate::Name, Annotate::Acronym]
                        [rng.gen_range(0..3)],
                    ramp: rng.gen_range(0..palette::RAMPS.len()),
                },
                title: sample_title(rng, &format!("{} map", region_set.name())),
                x_axis: AxisSpec {
                    label: String::new(),
                    range: (0.0, 1.0),
                    tick_interval: 1.0,
                    kind: AxisKind::Categorical,
                },
                y_axis: AxisSpec {
                    label: String::new(),
                    range: (0.0, 1.0),
                    tick_interval: 1.0,
                    kind: AxisKind::Categorical,
                },
                font,
                title_size,
                label_size,
                background_id: 0,
                canvas_w: rng.gen_range(900..1400),
                canvas_h: rng.gen_range(620..900),
            })
        }
    }
}

fn nice_ceiling(v: f64) -> f64 {
    if v <= 0.0 {
        return 1.0;
    }
    let mag = 10f64.powf(v.log10().floor());
    let norm = v / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 1.5 {
        1.5
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 2.5 {
        2.5
    } else if norm <= 4.0 {
        4.0
    } else if norm <= 5.0 {
        5.0
    } else if norm <= 8.0 {
        8.0
    } else {
        10.0
    };
    nice * mag
}

/// Render the chart and emit its geometry trace.
pub fn render_chart(
    spec: &ChartSpec,
    data: &ChartData,
) -> Result<(Image, GeometryTrace), ChartError> {
    match (&spec.variant, data) {
        (ChartVariant::Bar { .. }, ChartData::Table { .. }) => bar::render(spec, data),
        (ChartVariant::Pie { .. }, ChartData::Table { .. }) => pie::render(spec, data),
        (ChartVariant::Line { .. }, ChartData::Series(_)) => line::render(spec, data),
        (ChartVariant::Choropleth { .. }, ChartData::Geo { .. }) => choropleth::render(spec, data),
        _ => Err(ChartError::WrongRecordKind),
    }
}

/// Prose digest of the spec and data for the caption prompt.
pub fn chart_digest(spec: &ChartSpec, data: &ChartData) -> String {
    let mut out = String::new();
    match (&spec.variant, data) {
        (
            ChartVariant::Bar {
                bar_type,
                orientation,
                style,
            },
            ChartData::Table {
                category_label,
                categories,
                series,
            },
        ) => {
            out.push_str(&format!(
                "Chart type: {} bar chart, {} orientation.\nTitle: {}\n",
                match bar_type {
                    BarType::Single => "single",
                    BarType::Grouped => "grouped",
                    BarType::Stacked => "stacked",
                },
                match orientation {
                    Orientation::Horizontal => "horizontal",
                    Orientation::Vertical => "vertical",
                },
                spec.title
            ));
            let value_axis = match orientation {
                Orientation::Vertical => &spec.y_axis,
                Orientation::Horizontal => &spec.x_axis,
            };
            out.push_str(&format!(
                "Value axis: label \"{}\", linear, range {} to {}, tick interval {}.\n",
                value_axis.label,
                axis::format_tick(value_axis.range.0),
                axis::format_tick(value_axis.range.1),
                axis::format_tick(value_axis.tick_interval),
            ));
            out.push_str(&format!(
                "Category axis: label \"{category_label}\", categorical.\n"
            ));
            out.push_str(&format!(
                "Style: {} bars, palette \"{}\", borders {}, value labels {}.\n",
                match style.texture {
                    BarTexture::Solid => "solid",
                    BarTexture::DiagonalStripes => "diagonally striped",
                    BarTexture::Dots => "dotted",
                    BarTexture::Crosshatch => "crosshatched",
                },
                palette::PALETTES[style.palette % palette::PALETTES.len()].0,
                if style.border { "on" } else { "off" },
                if style.value_labels { "on" } else { "off" },
            ));
            out.push_str("Data:\n");
            for (si, (name, vals)) in series.iter().enumerate() {
                let color = palette::palette_color(style.palette, si);
                out.push_str(&format!(
                    "- series \"{name}\" ({}): ",
                    palette::color_name(color)
                ));
                let pairs: Vec<String> = categories
                    .iter()
                    .zip(vals)
                    .map(|(c, v)| format!("{c}={}", trim_float(*v)))
                    .collect();
                out.push_str(&pairs.join(", "));
                out.push('\n');
            }
        }
        (
            ChartVariant::Pie {
                palette: pid,
                labels,
            },
            ChartData::Table {
                categories, series, ..
            },
        ) => {
            let (name, vals) = &series[0];
            let total: f64 = vals.iter().sum();
            out.push_str(&format!(
                "Chart type: pie chart.\nTitle: {}\nValue field: \"{name}\". Labels drawn {}.\n",
                spec.title,
                match labels {
                    PieLabelPlacement::Inside => "inside the slices",
                    PieLabelPlacement::Outside => "outside the pie",
                    PieLabelPlacement::Pointer => "outside with pointer lines",
                }
            ));
            out.push_str("Slices:\n");
            for (i, (cat, v)) in categories.iter().zip(vals).enumerate() {
                let color = palette::palette_color(*pid, i);
                out.push_str(&format!(
                    "- {cat}: {} ({:.1}%, {})\n",
                    trim_float(*v),
                    v / total * 100.0,
                    palette::color_name(color)
                ));
            }
        }
        (ChartVariant::Line { style }, ChartData::Series(series)) => {
            out.push_str(&format!(
                "Chart type: line chart with {} series.\nTitle: {}\n",
                series.len(),
                spec.title
            ));
            out.push_str(&format!(
                "X axis: range {} to {}. Y axis: label \"{}\", range {} to {}, tick interval {}.\n",
                axis::format_tick(spec.x_axis.range.0),
                axis::format_tick(spec.x_axis.range.1),
                spec.y_axis.label,
                axis::format_tick(spec.y_axis.range.0),
                axis::format_tick(spec.y_axis.range.1),
                axis::format_tick(spec.y_axis.tick_interval),
            ));
            out.push_str(&format!(
                "Line style: {} px wide, {}, markers: {}.\n",
                style.width,
                if style.dashed { "dashed" } else { "solid" },
                match style.marker {
                    Marker::None => "none",
                    Marker::Circle => "circles",
                    Marker::Square => "squares",
                    Marker::Diamond => "diamonds",
                },
            ));
            out.push_str("Data:\n");
            for (si, (label, pts)) in series.iter().enumerate() {
                let color = palette::palette_color(style.palette, si);
                let pairs: Vec<String> = pts
                    .iter()
                    .map(|(x, y)| format!("({}, {})", trim_float(*x), trim_float(*y)))
                    .collect();
                out.push_str(&format!(
                    "- \"{label}\" ({}): {}\n",
                    palette::color_name(color),
                    pairs.join(", ")
                ));
            }
        }
        (
            ChartVariant::Choropleth {
                region_set,
                scale,
                dropout,
                annotate,
                ramp,
                ..
            },
            ChartData::Geo { values, .. },
        ) => {
            out.push_str(&format!(
                "Chart type: choropleth map of {}.\nTitle: {}\nScale: {}; region annotation: {}.\n",
                match region_set {
                    RegionSet::Europe => "European countries",
                    RegionSet::World => "world countries",
                    RegionSet::Us => "US states",
                    RegionSet::China => "Chinese provinces",
                },
                spec.title,
                match scale {
                    ScaleKind::Continuous => "continuous color bar",
                    ScaleKind::Categorical => "discrete color legend",
                },
                match annotate {
                    Annotate::None => "none",
                    Annotate::Name => "region names",
                    Annotate::Acronym => "region acronyms",
                },
            ));
            let regions = geo::load_geo_regions(*region_set).unwrap_or_default();
            let lookup: std::collections::BTreeMap<&str, &geo::GeoRegionMeta> =
                regions.iter().map(|r| (r.id.as_str(), r)).collect();
            let numeric: Vec<f64> = values
                .iter()
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
            out.push_str("Regions (value, color, location, type, area):\n");
            for (id, value) in values {
                let Some(meta) = lookup.get(id.as_str()) else {
                    continue;
                };
                let dropped = dropout.contains(id);
                let (value_txt, color_txt) = if dropped {
                    ("no data".to_string(), "light gray".to_string())
                } else {
                    match value {
                        GeoValue::Number(n) => {
                            let t = if hi > lo { (n - lo) / (hi - lo) } else { 0.5 };
                            (
                                trim_float(*n),
                                palette::color_name(palette::ramp_color(*ramp, t)).to_string(),
                            )
                        }
                        GeoValue::Label(l) => (l.clone(), "categorical".to_string()),
                    }
                };
                out.push_str(&format!(
                    "- {}: {value_txt}, {color_txt}, {}, {}, {} area\n",
                    meta.name,
                    meta.direction,
                    if meta.coastal { "coastal" } else { "inland" },
                    meta.area_class.name(),
                ));
            }
            if !dropout.is_empty() {
                let names: Vec<String> = dropout
                    .iter()
                    .filter_map(|id| lookup.get(id.as_str()).map(|m| m.name.clone()))
                    .collect();
                out.push_str(&format!(
                    "Regions without data (shown in the distinct no-data color): {}.\n",
                    names.join(", ")
                ));
            }
        }
        _ => {}
    }
    out
}

fn trim_float(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn tabular(series: usize, categories: usize) -> RawRecord {
        let mut headers = vec!["Quarter".to_string()];
        for s in 0..series {
            headers.push(format!("Series {s}"));
        }
        let rows = (0..categories)
            .map(|c| {
                let mut row = vec![format!("Q{c}")];
                for s in 0..series {
                    row.push(format!("{}", 10 + c * 7 + s * 3));
                }
                row
            })
            .collect();
        RawRecord::Tabular { headers, rows }
    }

    #[test]
    fn tabular_records_become_bar_or_pie() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let spec = gen_chart_spec(&tabular(1, 4), &mut rng).unwrap();
            assert!(matches!(
                spec.variant,
                ChartVariant::Bar { .. } | ChartVariant::Pie { .. }
            ));
        }
    }

    #[test]
    fn multi_series_tabular_never_becomes_single() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let spec = gen_chart_spec(&tabular(3, 4), &mut rng).unwrap();
            match spec.variant {
                ChartVariant::Bar { bar_type, .. } => {
                    assert!(matches!(bar_type, BarType::Grouped | BarType::Stacked));
                }
                ref other => panic!("unexpected variant {other:?}"),
            }
        }
    }

    #[test]
    fn time_series_becomes_line() {
        let rec = RawRecord::TimeSeries {
            label: "price".into(),
            points: vec![(0.0, 1.0), (1.0, 3.0), (2.0, 2.0)],
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = gen_chart_spec(&rec, &mut rng).unwrap();
        assert!(matches!(spec.variant, ChartVariant::Line { .. }));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let rec = RawRecord::TextPassage { text: "hi".into() };
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(matches!(
            gen_chart_spec(&rec, &mut rng),
            Err(ChartError::WrongRecordKind)
        ));
    }

    #[test]
    fn dropout_never_exceeds_thirty_percent() {
        let regions = geo::load_geo_regions(RegionSet::Us).unwrap();
        let values: Vec<(String, GeoValue)> = regions
            .iter()
            .map(|r| (r.id.clone(), GeoValue::Number(r.id.len() as f64)))
            .collect();
        let rec = RawRecord::GeoTable {
            region_set: "us".into(),
            values,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let spec = gen_chart_spec(&rec, &mut rng).unwrap();
            if let ChartVariant::Choropleth { dropout, .. } = &spec.variant {
                assert!(dropout.len() as f64 <= 50.0 * 0.30);
            } else {
                panic!("expected choropleth");
            }
        }
    }

    #[test]
    fn digest_names_every_region_and_dropouts() {
        let regions = geo::load_geo_regions(RegionSet::China).unwrap();
        let values: Vec<(String, GeoValue)> = regions
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), GeoValue::Number(i as f64)))
            .collect();
        let rec = RawRecord::GeoTable {
            region_set: "china".into(),
            values,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = gen_chart_spec(&rec, &mut rng).unwrap();
        let data = ChartData::from_record(&rec).unwrap();
        let digest = chart_digest(&spec, &data);
        for r in &regions {
            assert!(digest.contains(&r.name), "digest missing {}", r.name);
        }
        if let ChartVariant::Choropleth { dropout, .. } = &spec.variant {
            if !dropout.is_empty() {
                assert!(digest.contains("Regions without data"));
            }
        }
        assert!(digest.contains("coastal") || digest.contains("inland"));
    }

    #[test]
    fn non_numeric_tabular_is_rejected() {
        let rec = RawRecord::Tabular {
            headers: vec!["a".into(), "b".into()],
            rows: vec![vec!["x".into(), "not a number".into()]],
        };
        assert!(matches!(
            ChartData::from_record(&rec),
            Err(ChartError::NonNumeric(_))
        ));
    }
}

#[cfg(test)]
mod preview {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    #[ignore]
    fn dump_previews() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let rec = super::tests::tabular(3, 4);
        let spec = gen_chart_spec(&rec, &mut rng).unwrap();
        let data = ChartData::from_record(&rec).unwrap();
        let (img, _) = render_chart(&spec, &data).unwrap();
        std::fs::write("/tmp/preview_bar.png", img.encode_png().unwrap()).unwrap();

        let regions = geo::load_geo_regions(RegionSet::Europe).unwrap();
        let values: Vec<(String, GeoValue)> = regions
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), GeoValue::Number((i * 7 % 50) as f64)))
            .collect();
        let geo_rec = RawRecord::GeoTable { region_set: "europe".into(), values };
        let mut rng2 = ChaCha8Rng::seed_from_u64(77);
        let spec2 = gen_chart_spec(&geo_rec, &mut rng2).unwrap();
        let data2 = ChartData::from_record(&geo_rec).unwrap();
        let (img2, _) = render_chart(&spec2, &data2).unwrap();
        std::fs::write("/tmp/preview_map.png", img2.encode_png().unwrap()).unwrap();

        let pie_rec = super::tests::tabular(1, 5);
        let mut rng3 = ChaCha8Rng::seed_from_u64(3);
        let mut spec3 = gen_chart_spec(&pie_rec, &mut rng3).unwrap();
        spec3.variant = ChartVariant::Pie { palette: 2, labels: PieLabelPlacement::Outside };
        spec3.canvas_h = spec3.canvas_w;
        let data3 = ChartData::from_record(&pie_rec).unwrap();
        let (img3, _) = render_chart(&spec3, &data3).unwrap();
        std::fs::write("/tmp/preview_pie.png", img3.encode_png().unwrap()).unwrap();
    }
}
