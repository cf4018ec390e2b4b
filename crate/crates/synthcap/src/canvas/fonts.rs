//! Embedded typefaces. All text rendering goes through these faces so
//! metrics are identical on every machine.

use ab_glyph::{FontRef, PxScale};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FontId {
    Sans,
    SansBold,
    Serif,
    /// Italic serif, doubling as the cursive face.
    Cursive,
    Mono,
    MonoBold,
    MonoOblique,
}

impl FontId {
    pub const ALL: [FontId; 7] = [
        FontId::Sans,
        FontId::SansBold,
        FontId::Serif,
        FontId::Cursive,
        FontId::Mono,
        FontId::MonoBold,
        FontId::MonoOblique,
    ];

    pub fn is_mono(self) -> bool {
        matches!(self, FontId::Mono | FontId::MonoBold | FontId::MonoOblique)
    }
}

static SANS: &[u8] = include_bytes!("../../assets/fonts/DejaVuSans.ttf");
static SANS_BOLD: &[u8] = include_bytes!("../../assets/fonts/DejaVuSans-Bold.ttf");
static SERIF: &[u8] = include_bytes!("../../assets/fonts/DejaVuSerif.ttf");
static SERIF_ITALIC: &[u8] = include_bytes!("../../assets/fonts/DejaVuSerif-Italic.ttf");
static MONO: &[u8] = include_bytes!("../../assets/fonts/DejaVuSansMono.ttf");
static MONO_BOLD: &[u8] = include_bytes!("../../assets/fonts/DejaVuSansMono-Bold.ttf");
static MONO_OBLIQUE: &[u8] = include_bytes!("../../assets/fonts/DejaVuSansMono-Oblique.ttf");

fn cell(id: FontId) -> &'static OnceLock<FontRef<'static>> {
    static CELLS: [OnceLock<FontRef<'static>>; 7] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let idx = FontId::ALL.iter().position(|&f| f == id).unwrap();
    &CELLS[idx]
}

pub fn font(id: FontId) -> &'static FontRef<'static> {
    cell(id).get_or_init(|| {
        let bytes = match id {
            FontId::Sans => SANS,
            FontId::SansBold => SANS_BOLD,
            FontId::Serif => SERIF,
            FontId::Cursive => SERIF_ITALIC,
            FontId::Mono => MONO,
            FontId::MonoBold => MONO_BOLD,
            FontId::MonoOblique => MONO_OBLIQUE,
        };
        FontRef::try_from_slice(bytes).expect("embedded font parses")
    })
}

/// Pixel scale for a point size (96 dpi raster).
pub fn px_scale(points: f32) -> PxScale {
    PxScale::from(points * 4.0 / 3.0)
}

/// Width of `text` in pixels at `points`, without kerning.
pub fn text_width(id: FontId, points: f32, text: &str) -> f32 {
    use ab_glyph::{Font, ScaleFont};
    let f = font(id).as_scaled(px_scale(points));
    text.chars().map(|c| f.h_advance(f.font.glyph_id(c))).sum()
}

/// Line advance (ascent - descent + gap) in pixels.
pub fn line_height(id: FontId, points: f32) -> f32 {
    use ab_glyph::{Font, ScaleFont};
    let f = font(id).as_scaled(px_scale(points));
    f.ascent() - f.descent() + f.line_gap()
}

/// Fixed cell advance of the mono face at `points`.
pub fn mono_advance(id: FontId, points: f32) -> f32 {
    use ab_glyph::{Font, ScaleFont};
    let f = font(id).as_scaled(px_scale(points));
    f.h_advance(f.font.glyph_id('M'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_faces_parse() {
        for id in FontId::ALL {
            let _ = font(id);
        }
    }

    #[test]
    fn mono_is_fixed_pitch() {
        let a = text_width(FontId::Mono, 12.0, "i");
        let b = text_width(FontId::Mono, 12.0, "W");
        assert!((a - b).abs() < 0.01);
    }

    #[test]
    fn wider_text_measures_wider() {
        assert!(
            text_width(FontId::Sans, 12.0, "wide text here")
                > text_width(FontId::Sans, 12.0, "thin")
        );
    }
}
