//! Collage geometry: grid layouts with cell merging and auto layouts with
//! one aligned dimension.

use rand::Rng;
use serde::{Deserialize, Serialize};

/// Axis-aligned placement rectangle in integer pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x: u32,
    pub y: u32,
    pub w: u32,
    pub h: u32,
}

impl Rect {
    pub fn new(x: u32, y: u32, w: u32, h: u32) -> Rect {
        Rect { x, y, w, h }
    }

    pub fn right(&self) -> u32 {
        self.x + self.w
    }

    pub fn bottom(&self) -> u32 {
        self.y + self.h
    }

    pub fn aspect(&self) -> f64 {
        self.w as f64 / self.h as f64
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.x < other.right()
            && other.x < self.right()
            && self.y < other.bottom()
            && other.y < self.bottom()
    }

    pub fn contains_point(&self, px: u32, py: u32) -> bool {
        px >= self.x && px < self.right() && py >= self.y && py < self.bottom()
    }
}

/// One merged cell: a row/column span inside the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSpan {
    pub row: u8,
    pub col: u8,
    pub row_span: u8,
    pub col_span: u8,
}

impl CellSpan {
    fn covers(&self, r: u8, c: u8) -> bool {
        r >= self.row && r < self.row + self.row_span && c >= self.col && c < self.col + self.col_span
    }

    fn overlaps(&self, other: &CellSpan) -> bool {
        self.row < other.row + other.row_span
            && other.row < self.row + self.row_span
            && self.col < other.col + other.col_span
            && other.col < self.col + self.col_span
    }
}

/// Grid layout plan: track weights plus merged spans. Every slot is either
/// a merged span or a single unmerged cell; together they tile the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_rows: u8,
    pub n_cols: u8,
    /// Relative column widths / row heights.
    pub col_weights: Vec<f64>,
    pub row_weights: Vec<f64>,
    pub merges: Vec<CellSpan>,
}

impl GridSpec {
    /// Slots in reading order (merged spans sorted by top-left corner,
    /// then remaining single cells row-major).
    pub fn slots(&self) -> Vec<CellSpan> {
        let mut slots: Vec<CellSpan> = Vec::new();
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if let Some(m) = self.merges.iter().find(|m| m.covers(r, c)) {
                    if m.row == r && m.col == c {
                        slots.push(*m);
                    }
                } else {
                    slots.push(CellSpan {
                        row: r,
                        col: c,
                        row_span: 1,
                        col_span: 1,
                    });
                }
            }
        }
        slots
    }

    /// True when merges are pairwise disjoint and merged plus unmerged
    /// cells cover the grid exactly.
    pub fn is_valid(&self) -> bool {
        if self.n_rows == 0 || self.n_cols == 0 || self.n_rows > 4 || self.n_cols > 4 {
            return false;
        }
        if self.col_weights.len() != self.n_cols as usize
            || self.row_weights.len() != self.n_rows as usize
        {
            return false;
        }
        for (i, a) in self.merges.iter().enumerate() {
            if a.row_span == 0 || a.col_span == 0 {
                return false;
            }
            if a.row + a.row_span > self.n_rows || a.col + a.col_span > self.n_cols {
                return false;
            }
            for b in &self.merges[i + 1..] {
                if a.overlaps(b) {
                    return false;
                }
            }
        }
        // Cover: every cell belongs to exactly one slot.
        let mut covered = [[0u8; 4]; 4];
        for s in self.slots() {
            for r in s.row..s.row + s.row_span {
                for c in s.col..s.col + s.col_span {
                    covered[r as usize][c as usize] += 1;
                }
            }
        }
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if covered[r as usize][c as usize] != 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlignmentMode {
    Grid,
    RowsAligned,
    ColsAligned,
}

/// The geometric contract every collage obeys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutResult {
    pub canvas_w: u32,
    pub canvas_h: u32,
    pub rects: Vec<Rect>,
    pub margin: u32,
    pub padding: u32,
    pub background_id: u8,
    pub alignment_mode: AlignmentMode,
    /// Rect indices per aligned row (or column), in reading order.
    pub groups: Vec<Vec<usize>>,
}

#[derive(Debug, thiserror::Error)]
pub enum LayoutError {
    #[error("slot {slot} wants aspect {want:.3} but image has {got:.3} (relative error {err:.3})")]
    AspectViolation {
        slot: usize,
        want: f64,
        got: f64,
        err: f64,
    },
    #[error("grid has {slots} slots but {images} images were supplied")]
    SlotCountMismatch { slots: usize, images: usize },
    #[error("auto layout needs 2..=9 images, got {0}")]
    BadImageCount(usize),
}

/// Relative aspect tolerance for grid slots.
pub const GRID_ASPECT_TOLERANCE: f64 = 0.15;

/// Sampling ranges for the randomized layout knobs.
pub const TARGET_WIDTH_RANGE: (u32, u32) = (768, 1536);
pub const MARGIN_RANGE: (u32, u32) = (0, 24);
pub const PADDING_RANGE: (u32, u32) = (0, 48);
pub const BACKGROUND_COUNT: u8 = 12;

/// Sample a random valid grid spec: n,m in {1,2,3,4}, optional merges.
pub fn gen_grid_spec(rng: &mut impl Rng) -> GridSpec {
    let n_rows = rng.gen_range(1..=4u8);
    let n_cols = rng.gen_range(1..=4u8);
    let weight_choices = [0.75, 1.0, 1.0, 1.25, 1.5];
    let col_weights: Vec<f64> = (0..n_cols)
        .map(|_| weight_choices[rng.gen_range(0..weight_choices.len())])
        .collect();
    let row_weights: Vec<f64> = (0..n_rows)
        .map(|_| weight_choices[rng.gen_range(0..weight_choices.len())])
        .collect();
    let mut merges: Vec<CellSpan> = Vec::new();
    let proposals = rng.gen_range(0..=3);
    for _ in 0..proposals {
        if n_rows == 1 && n_cols == 1 {
            break;
        }
        let row_span = if n_rows > 1 { rng.gen_range(1..=2u8) } else { 1 };
        let col_span = if n_cols > 1 { rng.gen_range(1..=2u8) } else { 1 };
        if row_span == 1 && col_span == 1 {
            continue;
        }
        let row = rng.gen_range(0..=n_rows - row_span);
        let col = rng.gen_range(0..=n_cols - col_span);
        let cand = CellSpan {
            row,
            col,
            row_span,
            col_span,
        };
        if merges.iter().all(|m| !m.overlaps(&cand)) {
            merges.push(cand);
        }
    }
    let spec = GridSpec {
        n_rows,
        n_cols,
        col_weights,
        row_weights,
        merges,
    };
    debug_assert!(spec.is_valid());
    spec
}

/// Split `total` pixels into integer parts proportional to `weights`,
/// summing exactly to `total` (largest-remainder).
fn split_exact(total: u32, weights: &[f64]) -> Vec<u32> {
    let wsum: f64 = weights.iter().sum();
    let mut parts: Vec<u32> = Vec::with_capacity(weights.len());
    let mut rema: Vec<(usize, f64)> = Vec::with_capacity(weights.len());
    let mut used = 0u32;
    for (i, &w) in weights.iter().enumerate() {
        let exact = total as f64 * w / wsum;
        let fl = exact.floor() as u32;
        parts.push(fl);
        used += fl;
        rema.push((i, exact - fl as f64));
    }
    rema.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    for (i, _) in rema.into_iter().take((total - used) as usize) {
        parts[i] += 1;
    }
    parts
}

/// Realize a grid spec at pixel scale.
///
/// `images` are the aspect ratios that will fill the slots, in `slots()`
/// order; each must match its slot aspect within [`GRID_ASPECT_TOLERANCE`]
/// (relative). Rows and columns align exactly by construction.
pub fn realize_grid(
    spec: &GridSpec,
    images: &[f64],
    margin: u32,
    padding: u32,
    target_w: u32,
    background_id: u8,
) -> Result<LayoutResult, LayoutError> {
    let slots = spec.slots();
    if images.len() != slots.len() {
        return Err(LayoutError::SlotCountMismatch {
            slots: slots.len(),
            images: images.len(),
        });
    }
    let inner_w = target_w
        .saturating_sub(2 * padding)
        .saturating_sub(margin * (spec.n_cols as u32 - 1))
        .max(spec.n_cols as u32);
    let col_px = split_exact(inner_w, &spec.col_weights);
    // Base scale: a weight-1 track is `unit` pixels tall, keeping cells
    // roughly square at weight parity.
    let unit = inner_w as f64 / spec.col_weights.iter().sum::<f64>();
    let row_px: Vec<u32> = spec
        .row_weights
        .iter()
        .map(|w| (w * unit).round().max(1.0) as u32)
        .collect();

    let aspects = grid_slot_aspects(&slots, &col_px, &row_px, margin);
    for (i, (&want, &got)) in aspects.iter().zip(images.iter()).enumerate() {
        let err = (got - want).abs() / want;
        if err > GRID_ASPECT_TOLERANCE {
            return Err(LayoutError::AspectViolation {
                slot: i,
                want,
                got,
                err,
            });
        }
    }

    let col_x: Vec<u32> = {
        let mut xs = Vec::with_capacity(spec.n_cols as usize);
        let mut x = padding;
        for c in 0..spec.n_cols as usize {
            xs.push(x);
            x += col_px[c] + margin;
        }
        xs
    };
    let row_y: Vec<u32> = {
        let mut ys = Vec::with_capacity(spec.n_rows as usize);
        let mut y = padding;
        for r in 0..spec.n_rows as usize {
            ys.push(y);
            y += row_px[r] + margin;
        }
        ys
    };

    let mut rects = Vec::with_capacity(slots.len());
    for s in &slots {
        let x = col_x[s.col as usize];
        let y = row_y[s.row as usize];
        let w: u32 = (s.col..s.col + s.col_span)
            .map(|c| col_px[c as usize])
            .sum::<u32>()
            + margin * (s.col_span as u32 - 1);
        let h: u32 = (s.row..s.row + s.row_span)
            .map(|r| row_px[r as usize])
            .sum::<u32>()
            + margin * (s.row_span as u32 - 1);
        rects.push(Rect::new(x, y, w, h));
    }

    let canvas_w = padding * 2
        + col_px.iter().sum::<u32>()
        + margin * (spec.n_cols as u32 - 1);
    let canvas_h = padding * 2
        + row_px.iter().sum::<u32>()
        + margin * (spec.n_rows as u32 - 1);

    // Per grid row, the slots covering that row form a contiguous run of
    // columns; consecutive members are margin-adjacent by construction.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for r in 0..spec.n_rows {
        let mut covering: Vec<usize> = (0..slots.len())
            .filter(|&i| {
                let s = &slots[i];
                s.row <= r && r < s.row + s.row_span
            })
            .collect();
        covering.sort_by_key(|&i| slots[i].col);
        groups.push(covering);
    }

    Ok(LayoutResult {
        canvas_w,
        canvas_h,
        rects,
        margin,
        padding,
        background_id,
        alignment_mode: AlignmentMode::Grid,
        groups,
    })
}

/// Pixel aspect each slot will be realized at.
fn grid_slot_aspects(slots: &[CellSpan], col_px: &[u32], row_px: &[u32], margin: u32) -> Vec<f64> {
    slots
        .iter()
        .map(|s| {
            let w: u32 = (s.col..s.col + s.col_span)
                .map(|c| col_px[c as usize])
                .sum::<u32>()
                + margin * (s.col_span as u32 - 1);
            let h: u32 = (s.row..s.row + s.row_span)
                .map(|r| row_px[r as usize])
                .sum::<u32>()
                + margin * (s.row_span as u32 - 1);
            w as f64 / h as f64
        })
        .collect()
}

/// Aspect ratios a caller should retrieve for, for a grid spec realized at
/// `target_w` with the given margin/padding.
pub fn grid_target_aspects(spec: &GridSpec, margin: u32, padding: u32, target_w: u32) -> Vec<f64> {
    let inner_w = target_w
        .saturating_sub(2 * padding)
        .saturating_sub(margin * (spec.n_cols as u32 - 1))
        .max(spec.n_cols as u32);
    let col_px = split_exact(inner_w, &spec.col_weights);
    let unit = inner_w as f64 / spec.col_weights.iter().sum::<f64>();
    let row_px: Vec<u32> = spec
        .row_weights
        .iter()
        .map(|w| (w * unit).round().max(1.0) as u32)
        .collect();
    grid_slot_aspects(&spec.slots(), &col_px, &row_px, margin)
}

/// Compose arbitrary aspect ratios with one aligned dimension.
///
/// In rows mode every rect in a row shares y and height, and each row's
/// rect widths plus margins fill the inner canvas width exactly. Cols mode
/// is the transpose. Aspect ratios are preserved to within 1 px.
pub fn gen_auto_layout(
    images: &[f64],
    rng: &mut impl Rng,
    margin: u32,
    padding: u32,
    target_w: u32,
    background_id: u8,
) -> Result<LayoutResult, LayoutError> {
    if images.len() < 2 || images.len() > 9 {
        return Err(LayoutError::BadImageCount(images.len()));
    }
    let rows_mode = rng.gen_bool(0.5);
    // Budget controls how many images share a line before wrapping.
    let budget = rng.gen_range(1.8..4.5);

    if rows_mode {
        Ok(auto_rows(images, budget, margin, padding, target_w, background_id))
    } else {
        // Columns: lay out transposed aspects as rows, then swap axes.
        let inv: Vec<f64> = images.iter().map(|a| 1.0 / a).collect();
        let mut r = auto_rows(&inv, budget, margin, padding, target_w, background_id);
        r.rects = r
            .rects
            .iter()
            .map(|rc| Rect::new(rc.y, rc.x, rc.h, rc.w))
            .collect();
        std::mem::swap(&mut r.canvas_w, &mut r.canvas_h);
        r.alignment_mode = AlignmentMode::ColsAligned;
        Ok(r)
    }
}

fn auto_rows(
    aspects: &[f64],
    budget: f64,
    margin: u32,
    padding: u32,
    target_w: u32,
    background_id: u8,
) -> LayoutResult {
    // Greedy partition into rows by cumulative aspect.
    let mut row_indices: Vec<Vec<usize>> = vec![Vec::new()];
    let mut acc = 0.0;
    for (i, &a) in aspects.iter().enumerate() {
        let last = row_indices.last_mut().unwrap();
        if !last.is_empty() && acc + a > budget {
            row_indices.push(vec![i]);
            acc = a;
        } else {
            last.push(i);
            acc += a;
        }
    }

    let inner_w = target_w.saturating_sub(2 * padding).max(64);
    let mut rects: Vec<(usize, Rect)> = Vec::with_capacity(aspects.len());
    let mut y = padding;
    for (ri, row) in row_indices.iter().enumerate() {
        let aspect_sum: f64 = row.iter().map(|&i| aspects[i]).sum();
        let avail = inner_w.saturating_sub(margin * (row.len() as u32 - 1)).max(row.len() as u32);
        let height = (avail as f64 / aspect_sum).round().max(1.0) as u32;
        // Widths split exactly so the row spans the full inner width.
        let weights: Vec<f64> = row.iter().map(|&i| aspects[i]).collect();
        let widths = split_exact(avail, &weights);
        let mut x = padding;
        for (k, &idx) in row.iter().enumerate() {
            rects.push((idx, Rect::new(x, y, widths[k].max(1), height)));
            x += widths[k] + margin;
        }
        y += height;
        if ri + 1 < row_indices.len() {
            y += margin;
        }
    }
    let canvas_h = y + padding;
    let canvas_w = padding * 2 + inner_w;

    rects.sort_by_key(|(idx, _)| *idx);
    let groups: Vec<Vec<usize>> = row_indices;
    LayoutResult {
        canvas_w,
        canvas_h,
        rects: rects.into_iter().map(|(_, r)| r).collect(),
        margin,
        padding,
        background_id,
        alignment_mode: AlignmentMode::RowsAligned,
        groups,
    }
}

/// A single invariant breach found by `validate_layout`.
#[derive(Debug, Clone, PartialEq)]
pub enum LayoutViolation {
    Overlap { a: usize, b: usize },
    OutOfBounds { rect: usize },
    MarginMismatch { a: usize, b: usize, gap: u32 },
    DegenerateRect { rect: usize },
}

/// Check every layout invariant; returns all breaches found.
pub fn validate_layout(layout: &LayoutResult) -> Vec<LayoutViolation> {
    let mut out = Vec::new();
    for (i, r) in layout.rects.iter().enumerate() {
        if r.w == 0 || r.h == 0 {
            out.push(LayoutViolation::DegenerateRect { rect: i });
        }
        if r.x < layout.padding
            || r.y < layout.padding
            || r.right() > layout.canvas_w - layout.padding
            || r.bottom() > layout.canvas_h - layout.padding
        {
            out.push(LayoutViolation::OutOfBounds { rect: i });
        }
    }
    for i in 0..layout.rects.len() {
        for j in i + 1..layout.rects.len() {
            if layout.rects[i].intersects(&layout.rects[j]) {
                out.push(LayoutViolation::Overlap { a: i, b: j });
            }
        }
    }
    // Margin exactness between consecutive members of each aligned group
    // (rects within a row in rows/grid mode, within a column otherwise).
    let horizontal = layout.alignment_mode != AlignmentMode::ColsAligned;
    for group in &layout.groups {
        for pair in group.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let (ra, rb) = (&layout.rects[a], &layout.rects[b]);
            let gap = if horizontal {
                rb.x.saturating_sub(ra.right())
            } else {
                rb.y.saturating_sub(ra.bottom())
            };
            if gap != layout.margin {
                out.push(LayoutViolation::MarginMismatch { a, b, gap });
            }
        }
    }
    out
}

/// Check aspect preservation of an auto layout against the input ratios.
///
/// With the canvas spanned exactly by integer widths and a shared integer
/// row height, the tightest achievable guarantee is
/// `|w/h - a| <= (1 + a/2) / h` (one largest-remainder pixel plus half a
/// pixel of row-height rounding scaled by the ratio). Returns the indices
/// that breach it.
pub fn check_aspect_preservation(layout: &LayoutResult, aspects: &[f64]) -> Vec<usize> {
    let mut bad = Vec::new();
    for (i, (rect, &a)) in layout.rects.iter().zip(aspects.iter()).enumerate() {
        let (long, short, ratio) = match layout.alignment_mode {
            AlignmentMode::ColsAligned => (rect.h as f64, rect.w as f64, 1.0 / a),
            _ => (rect.w as f64, rect.h as f64, a),
        };
        let bound = (1.0001 + 0.5 * ratio) / short;
        if (long / short - ratio).abs() > bound {
            bad.push(i);
        }
    }
    bad
}
