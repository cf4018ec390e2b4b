//! Geometry side channel: one record per data element drawn, used to
//! verify data-to-pixel fidelity without decoding the raster.

use crate::canvas::Rgba;
use crate::layout::Rect;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TraceRecord {
    BarRect {
        series: usize,
        category: usize,
        value: f64,
        rect: Rect,
    },
    LineVertex {
        series: usize,
        point: usize,
        value: (f64, f64),
        px: (i64, i64),
    },
    PieSlice {
        index: usize,
        value: f64,
        start_deg: f64,
        sweep_deg: f64,
    },
    RegionFill {
        region_id: String,
        color: Rgba,
        /// A pixel inside the region still showing the fill color after
        /// the full render.
        interior_px: Option<(u32, u32)>,
        dropped: bool,
    },
    GridLine {
        vertical: bool,
        at: u32,
        from: u32,
        to: u32,
    },
}

/// Plot-frame context recorded alongside the primitives so extents can be
/// decoded back into data values.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct GeometryTrace {
    pub plot_area: Option<Rect>,
    pub value_range: Option<(f64, f64)>,
    pub records: Vec<TraceRecord>,
}

impl GeometryTrace {
    pub fn push(&mut self, rec: TraceRecord) {
        self.records.push(rec);
    }

    pub fn bar_rects(&self) -> impl Iterator<Item = (usize, usize, f64, &Rect)> {
        self.records.iter().filter_map(|r| match r {
            TraceRecord::BarRect {
                series,
                category,
                value,
                rect,
            } => Some((*series, *category, *value, rect)),
            _ => None,
        })
    }

    pub fn pie_slices(&self) -> impl Iterator<Item = (usize, f64, f64, f64)> + '_ {
        self.records.iter().filter_map(|r| match r {
            TraceRecord::PieSlice {
                index,
                value,
                start_deg,
                sweep_deg,
            } => Some((*index, *value, *start_deg, *sweep_deg)),
            _ => None,
        })
    }
}
