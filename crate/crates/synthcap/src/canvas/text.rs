//! Text drawing with word wrap, alignment and the contrast rule.

use super::fonts::{self, FontId};
use super::{Image, Rgba};
use crate::layout::Rect;
use ab_glyph::{Font, ScaleFont};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alignment {
    Left,
    Center,
    Right,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextStyle {
    pub font_id: FontId,
    /// Point size; rasterized at 96 dpi.
    pub size: f32,
    pub color: Rgba,
    /// Multiple of the natural line height; >= 0.8.
    pub line_spacing: f32,
    pub alignment: Alignment,
    /// Wrap limit in pixels. 0 means "use the box width".
    pub wrap_width: u32,
}

impl TextStyle {
    pub fn plain(font_id: FontId, size: f32, color: Rgba) -> TextStyle {
        TextStyle {
            font_id,
            size,
            color,
            line_spacing: 1.0,
            alignment: Alignment::Left,
            wrap_width: 0,
        }
    }
}

/// Stroke-style jitter for the handwriting styles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HandwritingParams {
    /// Vertical per-glyph wobble in px.
    pub jitter_y: f32,
    /// Extra random letter spacing in px.
    pub jitter_x: f32,
    /// Horizontal shear per vertical px (positive slants right).
    pub slant: f32,
    /// Per-glyph size variation, fraction of the point size.
    pub size_jitter: f32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawnText {
    /// Tight bound of painted pixels; zero-sized when nothing was drawn.
    pub used_bounds: Rect,
    pub dropped_lines: usize,
    pub drawn_lines: usize,
}

/// Greedy word wrap at `limit` pixels. Overlong single words are split.
fn wrap_lines(font_id: FontId, size: f32, text: &str, limit: f32) -> Vec<String> {
    let mut lines = Vec::new();
    for para in text.split('\n') {
        let mut line = String::new();
        let mut line_w = 0.0f32;
        let space_w = fonts::text_width(font_id, size, " ");
        for word in para.split_whitespace() {
            let word_w = fonts::text_width(font_id, size, word);
            if line.is_empty() {
                if word_w <= limit || limit <= 0.0 {
                    line.push_str(word);
                    line_w = word_w;
                } else {
                    // Hard-split a word that cannot fit on its own line.
                    let mut piece = String::new();
                    for ch in word.chars() {
                        let ch_w = fonts::text_width(font_id, size, &ch.to_string());
                        if !piece.is_empty()
                            && fonts::text_width(font_id, size, &piece) + ch_w > limit
                        {
                            lines.push(std::mem::take(&mut piece));
                        }
                        piece.push(ch);
                    }
                    line = piece;
                    line_w = fonts::text_width(font_id, size, &line);
                }
            } else if line_w + space_w + word_w <= limit {
                line.push(' ');
                line.push_str(word);
                line_w += space_w + word_w;
            } else {
                lines.push(std::mem::take(&mut line));
                line.push_str(word);
                line_w = word_w;
            }
        }
        lines.push(line);
    }
    lines
}

/// Draw wrapped text inside `bbox`. Lines that do not fit vertically are
/// dropped and counted; nothing is ever painted outside the box.
pub fn draw_text(img: &mut Image, text: &str, style: &TextStyle, bbox: Rect) -> DrawnText {
    draw_text_opt(img, text, style, bbox, None, 0)
}

/// `draw_text` with optional handwriting jitter (seeded).
pub fn draw_text_opt(
    img: &mut Image,
    text: &str,
    style: &TextStyle,
    bbox: Rect,
    hand: Option<&HandwritingParams>,
    seed: u64,
) -> DrawnText {
    let limit = if style.wrap_width > 0 {
        style.wrap_width.min(bbox.w) as f32
    } else {
        bbox.w as f32
    };
    let lines = wrap_lines(style.font_id, style.size, text, limit);
    let advance = fonts::line_height(style.font_id, style.size) * style.line_spacing.max(0.8);
    let fit = ((bbox.h as f32 / advance).floor() as usize).min(lines.len());
    let dropped = lines.len() - fit;

    let scaled = fonts::font(style.font_id).as_scaled(fonts::px_scale(style.size));
    let ascent = scaled.ascent();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7e57);

    let mut min_x = u32::MAX;
    let mut min_y = u32::MAX;
    let mut max_x = 0u32;
    let mut max_y = 0u32;

    for (li, line) in lines.iter().take(fit).enumerate() {
        let line_w = fonts::text_width(style.font_id, style.size, line);
        let x0 = match style.alignment {
            Alignment::Left => bbox.x as f32,
            Alignment::Center => bbox.x as f32 + (bbox.w as f32 - line_w).max(0.0) / 2.0,
            Alignment::Right => bbox.x as f32 + (bbox.w as f32 - line_w).max(0.0),
        };
        let baseline = bbox.y as f32 + li as f32 * advance + ascent;
        let mut pen_x = x0;
        for ch in line.chars() {
            let (size, dy, extra) = match hand {
                Some(h) => (
                    style.size * (1.0 + rng.gen_range(-h.size_jitter..=h.size_jitter)),
                    rng.gen_range(-h.jitter_y..=h.jitter_y),
                    rng.gen_range(0.0..=h.jitter_x),
                ),
                None => (style.size, 0.0, 0.0),
            };
            let sf = fonts::font(style.font_id).as_scaled(fonts::px_scale(size));
            let gid = sf.font.glyph_id(ch);
            let glyph = gid.with_scale_and_position(
                fonts::px_scale(size),
                ab_glyph::point(pen_x, baseline + dy),
            );
            let advance_w = sf.h_advance(gid);
            if let Some(outline) = sf.font.outline_glyph(glyph) {
                let gb = outline.px_bounds();
                let slant = hand.map(|h| h.slant).unwrap_or(0.0);
                outline.draw(|gx, gy, cov| {
                    if cov <= 0.02 {
                        return;
                    }
                    let py = gb.min.y + gy as f32;
                    let shear = slant * (baseline - py);
                    let px = gb.min.x + gx as f32 + shear;
                    if px < bbox.x as f32
                        || px >= bbox.right() as f32
                        || py < bbox.y as f32
                        || py >= bbox.bottom() as f32
                    {
                        return;
                    }
                    let (ux, uy) = (px as u32, py as u32);
                    img.blend(ux, uy, style.color, cov);
                    min_x = min_x.min(ux);
                    min_y = min_y.min(uy);
                    max_x = max_x.max(ux);
                    max_y = max_y.max(uy);
                });
            }
            pen_x += advance_w + extra;
        }
    }

    let used_bounds = if min_x == u32::MAX {
        Rect::new(bbox.x, bbox.y, 0, 0)
    } else {
        Rect::new(min_x, min_y, max_x - min_x + 1, max_y - min_y + 1)
    };
    DrawnText {
        used_bounds,
        dropped_lines: dropped,
        drawn_lines: fit,
    }
}

/// WCAG relative-luminance contrast ratio, in [1, 21].
pub fn contrast_ratio(fg: Rgba, bg: Rgba) -> f64 {
    let (l1, l2) = (fg.luminance(), bg.luminance());
    let (hi, lo) = if l1 >= l2 { (l1, l2) } else { (l2, l1) };
    (hi + 0.05) / (lo + 0.05)
}

/// Pass iff the contrast ratio is at least 4.5.
pub fn check_contrast(fg: Rgba, bg: Rgba) -> bool {
    contrast_ratio(fg, bg) >= 4.5
}

/// Black or white, whichever contrasts harder with `bg`. Always passes
/// `check_contrast` (one of the two is >= 4.5 for any background).
pub fn contrast_color(bg: Rgba) -> Rgba {
    if contrast_ratio(Rgba::BLACK, bg) >= contrast_ratio(Rgba::WHITE, bg) {
        Rgba::BLACK
    } else {
        Rgba::WHITE
    }
}
