//! Document-degradation effects.
//!
//! Twelve effects in three phases (ink, paper, combined). Chains apply in
//! canonical phase/row order. Each effect is a pure function of
//! `(image, intensity, seed)`; intensity 0 is the identity.

use super::{blur, Image, Rgba};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EffectKind {
    InkBleed,
    BleedThrough,
    PaperFactory,
    Tessellation,
    NoiseTexturize,
    BrightnessTexturize,
    DirtyDrum,
    DirtyRoller,
    SubtleNoise,
    BadPhotoCopy,
    ShadowCast,
    ReflectedLight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EffectPhase {
    Ink,
    Paper,
    Combined,
}

impl EffectKind {
    pub const ALL: [EffectKind; 12] = [
        EffectKind::InkBleed,
        EffectKind::BleedThrough,
        EffectKind::PaperFactory,
        EffectKind::Tessellation,
        EffectKind::NoiseTexturize,
        EffectKind::BrightnessTexturize,
        EffectKind::DirtyDrum,
        EffectKind::DirtyRoller,
        EffectKind::SubtleNoise,
        EffectKind::BadPhotoCopy,
        EffectKind::ShadowCast,
        EffectKind::ReflectedLight,
    ];

    pub fn phase(self) -> EffectPhase {
        match self {
            EffectKind::InkBleed | EffectKind::BleedThrough => EffectPhase::Ink,
            EffectKind::PaperFactory
            | EffectKind::Tessellation
            | EffectKind::NoiseTexturize
            | EffectKind::BrightnessTexturize => EffectPhase::Paper,
            _ => EffectPhase::Combined,
        }
    }

    /// Canonical application order (table row order).
    pub fn row(self) -> usize {
        EffectKind::ALL.iter().position(|&k| k == self).unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectSpec {
    pub kind: EffectKind,
    /// Strength in [0, 1]; 0 is a no-op.
    pub intensity: f32,
    pub seed: u64,
}

/// Apply one effect. Output dimensions always equal the input's.
pub fn apply_effect(img: &Image, spec: &EffectSpec) -> Image {
    let t = spec.intensity.clamp(0.0, 1.0);
    if t == 0.0 {
        return img.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (spec.kind.row() as u64) << 48);
    match spec.kind {
        EffectKind::InkBleed => ink_bleed(img, t, &mut rng),
        EffectKind::BleedThrough => bleed_through(img, t, &mut rng),
        EffectKind::PaperFactory => paper_factory(img, t, &mut rng),
        EffectKind::Tessellation => tessellation(img, t, &mut rng),
        EffectKind::NoiseTexturize => noise_texturize(img, t, &mut rng),
        EffectKind::BrightnessTexturize => brightness_texturize(img, t, &mut rng),
        EffectKind::DirtyDrum => dirty_drum(img, t, &mut rng),
        EffectKind::DirtyRoller => dirty_roller(img, t, &mut rng),
        EffectKind::SubtleNoise => subtle_noise(img, t, &mut rng),
        EffectKind::BadPhotoCopy => bad_photocopy(img, t, &mut rng),
        EffectKind::ShadowCast => shadow_cast(img, t, &mut rng),
        EffectKind::ReflectedLight => reflected_light(img, t, &mut rng),
    }
}

/// Apply a chain in canonical row order (ink -> paper -> combined),
/// regardless of the order specs are supplied in.
pub fn apply_chain(img: &Image, chain: &[EffectSpec]) -> Image {
    let mut sorted: Vec<&EffectSpec> = chain.iter().collect();
    sorted.sort_by_key(|s| s.kind.row());
    let mut out = img.clone();
    for spec in sorted {
        out = apply_effect(&out, spec);
    }
    out
}

fn is_inkish(img: &Image, x: u32, y: u32) -> bool {
    img.gray_at(x, y) < 120
}

/// Random dark noise sprinkled around ink edges, then lightly blurred.
fn ink_bleed(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let mut out = img.clone();
    let (w, h) = (img.width(), img.height());
    for y in 1..h.saturating_sub(1) {
        for x in 1..w.saturating_sub(1) {
            if !is_inkish(img, x, y) {
                continue;
            }
            let at_edge = !is_inkish(img, x + 1, y)
                || !is_inkish(img, x - 1, y)
                || !is_inkish(img, x, y + 1)
                || !is_inkish(img, x, y - 1);
            if at_edge && rng.gen::<f32>() < 0.6 * t {
                let dx = rng.gen_range(-2i64..=2);
                let dy = rng.gen_range(-2i64..=2);
                let px = (x as i64 + dx).clamp(0, w as i64 - 1) as u32;
                let py = (y as i64 + dy).clamp(0, h as i64 - 1) as u32;
                out.blend(px, py, img.get(x, y), 0.5 + 0.5 * rng.gen::<f32>());
            }
        }
    }
    blur(&out, 0.6 * t)
}

/// Ghost of the mirrored page: the image is flipped horizontally, blurred
/// and blended in faintly, as if ink seeped through the sheet.
fn bleed_through(img: &Image, t: f32, _rng: &mut ChaCha8Rng) -> Image {
    let (w, h) = (img.width(), img.height());
    let mut flipped = img.clone();
    for y in 0..h {
        for x in 0..w {
            flipped.put(x, y, img.get(w - 1 - x, y));
        }
    }
    let ghost = blur(&flipped, 2.0);
    let mut out = img.clone();
    let alpha = 0.25 * t;
    for y in 0..h {
        for x in 0..w {
            let g = ghost.get(x, y);
            if (g.0 as u32 + g.1 as u32 + g.2 as u32) < 500 {
                out.blend(x, y, g, alpha);
            }
        }
    }
    out
}

/// Swap near-white background pixels for a generated paper texture tile.
fn paper_factory(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let base = 225u8.saturating_add(rng.gen_range(0..20));
    let tint = (
        base.saturating_sub(rng.gen_range(0..18)),
        base.saturating_sub(rng.gen_range(0..14)),
        base.saturating_sub(rng.gen_range(0..28)),
    );
    let mut out = img.clone();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let c = img.get(x, y);
            if c.0 > 180 && c.1 > 180 && c.2 > 180 {
                let n = ((x.wrapping_mul(7) ^ y.wrapping_mul(13)) % 17) as i32 - 8;
                let adj = |v: u8| (v as i32 + n).clamp(0, 255) as u8;
                let paper = Rgba(adj(tint.0), adj(tint.1), adj(tint.2), 255);
                out.blend(x, y, paper, t);
            }
        }
    }
    out
}

/// Interlocking triangle mosaic overlaid on light regions.
fn tessellation(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let cell = rng.gen_range(18u32..40);
    let shade = rng.gen_range(4u8..14);
    let mut out = img.clone();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let c = img.get(x, y);
            if c.0 > 160 && c.1 > 160 && c.2 > 160 {
                let in_cell_x = x % cell;
                let in_cell_y = y % cell;
                let upper = in_cell_x + in_cell_y < cell;
                let parity = ((x / cell) + (y / cell)) % 2 == 0;
                if upper == parity {
                    let adj = |v: u8| v.saturating_sub((shade as f32 * t) as u8);
                    out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
                }
            }
        }
    }
    out
}

/// Multi-scale value noise over the whole sheet.
fn noise_texturize(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let offset: u32 = rng.gen();
    let mut out = img.clone();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let coarse = value_noise(x / 11, y / 11, offset) as i32 % 15;
            let fine = value_noise(x, y, offset ^ 0xabcd) as i32 % 7;
            let d = ((coarse - 7 + fine - 3) as f32 * t) as i32;
            let c = img.get(x, y);
            let adj = |v: u8| (v as i32 + d).clamp(0, 255) as u8;
            out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
        }
    }
    out
}

/// Smooth brightness waves across the sheet.
fn brightness_texturize(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let fx = rng.gen_range(0.005f32..0.02);
    let fy = rng.gen_range(0.005f32..0.02);
    let phase = rng.gen_range(0.0f32..6.28);
    let mut out = img.clone();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let wave = ((x as f32 * fx + phase).sin() + (y as f32 * fy).cos()) * 0.5;
            let d = (wave * 18.0 * t) as i32;
            let c = img.get(x, y);
            let adj = |v: u8| (v as i32 + d).clamp(0, 255) as u8;
            out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
        }
    }
    out
}

/// Dark vertical and horizontal noise lines, like a dirty printer drum.
fn dirty_drum(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let mut out = img.clone();
    let (w, h) = (img.width(), img.height());
    let n_lines = (1.0 + t * 14.0) as u32;
    for _ in 0..n_lines {
        let vertical = rng.gen_bool(0.5);
        let pos = if vertical { rng.gen_range(0..w.max(1)) } else { rng.gen_range(0..h.max(1)) };
        let darkness = rng.gen_range(20..70);
        let len = if vertical { h } else { w };
        for i in 0..len {
            if rng.gen::<f32>() < 0.75 {
                let (x, y) = if vertical { (pos, i) } else { (i, pos) };
                let c = out.get(x, y);
                let adj = |v: u8| v.saturating_sub(darkness);
                out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
            }
        }
    }
    out
}

/// Horizontal streak bands of varying brightness, like old scanner rollers.
fn dirty_roller(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let mut out = img.clone();
    let band = rng.gen_range(6u32..18);
    let mut y = 0;
    while y < img.height() {
        let d = (rng.gen_range(-20i32..8) as f32 * t) as i32;
        for yy in y..(y + band).min(img.height()) {
            for x in 0..img.width() {
                let c = out.get(x, yy);
                let adj = |v: u8| (v as i32 + d).clamp(0, 255) as u8;
                out.put(x, yy, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
            }
        }
        y += band;
    }
    out
}

/// Slight uneven per-pixel noise, as in scans of solid colors.
fn subtle_noise(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let amp = (10.0 * t) as i32;
    let mut out = img.clone();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let d = rng.gen_range(-amp..=amp.max(1));
            let c = img.get(x, y);
            let adj = |v: u8| (v as i32 + d).clamp(0, 255) as u8;
            out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
        }
    }
    out
}

/// Grainy photocopier wear: salt-and-pepper specks plus faint blotches.
fn bad_photocopy(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let mut out = img.clone();
    let (w, h) = (img.width(), img.height());
    let specks = ((w * h) as f32 * 0.03 * t) as u32;
    for _ in 0..specks {
        let x = rng.gen_range(0..w.max(1));
        let y = rng.gen_range(0..h.max(1));
        let dark = rng.gen_bool(0.7);
        let v = if dark { rng.gen_range(0..90) } else { rng.gen_range(200..=255) };
        out.put(x, y, Rgba::gray(v as u8));
    }
    let blotches = (6.0 * t) as u32;
    for _ in 0..blotches {
        let cx = rng.gen_range(0..w.max(1)) as i64;
        let cy = rng.gen_range(0..h.max(1)) as i64;
        let r = rng.gen_range(4i64..14);
        for dy in -r..=r {
            for dx in -r..=r {
                if dx * dx + dy * dy <= r * r {
                    let px = cx + dx;
                    let py = cy + dy;
                    if px >= 0 && py >= 0 && (px as u32) < w && (py as u32) < h {
                        let c = out.get(px as u32, py as u32);
                        let adj = |v: u8| v.saturating_sub(18);
                        out.put(px as u32, py as u32, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
                    }
                }
            }
        }
    }
    out
}

/// Darkening gradient wedge cast from one edge.
fn shadow_cast(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let side = rng.gen_range(0..4u8);
    let depth = rng.gen_range(0.25f32..0.55);
    let strength = 70.0 * t;
    let (w, h) = (img.width(), img.height());
    let mut out = img.clone();
    for y in 0..h {
        for x in 0..w {
            let frac = match side {
                0 => 1.0 - x as f32 / (w as f32 * depth),
                1 => 1.0 - (w - 1 - x) as f32 / (w as f32 * depth),
                2 => 1.0 - y as f32 / (h as f32 * depth),
                _ => 1.0 - (h - 1 - y) as f32 / (h as f32 * depth),
            };
            if frac > 0.0 {
                let d = (frac.min(1.0) * strength) as i32;
                let c = out.get(x, y);
                let adj = |v: u8| (v as i32 - d).clamp(0, 255) as u8;
                out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
            }
        }
    }
    out
}

/// Bright ellipse of light reflected off the sheet.
fn reflected_light(img: &Image, t: f32, rng: &mut ChaCha8Rng) -> Image {
    let (w, h) = (img.width(), img.height());
    let cx = rng.gen_range(0..w.max(1)) as f32;
    let cy = rng.gen_range(0..h.max(1)) as f32;
    let rx = (w as f32 * rng.gen_range(0.15..0.35)).max(4.0);
    let ry = (h as f32 * rng.gen_range(0.15..0.35)).max(4.0);
    let strength = 60.0 * t;
    let mut out = img.clone();
    for y in 0..h {
        for x in 0..w {
            let d = ((x as f32 - cx) / rx).powi(2) + ((y as f32 - cy) / ry).powi(2);
            if d < 1.0 {
                let boost = ((1.0 - d) * strength) as i32;
                let c = out.get(x, y);
                let adj = |v: u8| (v as i32 + boost).clamp(0, 255) as u8;
                out.put(x, y, Rgba(adj(c.0), adj(c.1), adj(c.2), 255));
            }
        }
    }
    out
}

fn value_noise(x: u32, y: u32, salt: u32) -> u64 {
    let mut v = ((x as u64) << 33) ^ ((y as u64) << 1) ^ ((salt as u64) << 17);
    v = (v ^ (v >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    v = (v ^ (v >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    v ^ (v >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canvas::Rgba;

    fn test_page() -> Image {
        let mut img = Image::new(120, 90, Rgba::WHITE);
        img.fill_rect(crate::layout::Rect::new(20, 20, 60, 8), Rgba::BLACK);
        img.fill_rect(crate::layout::Rect::new(20, 40, 80, 8), Rgba::BLACK);
        img
    }

    #[test]
    fn intensity_zero_is_identity() {
        let img = test_page();
        for kind in EffectKind::ALL {
            let out = apply_effect(&img, &EffectSpec { kind, intensity: 0.0, seed: 3 });
            assert_eq!(out, img, "{kind:?} at zero intensity changed pixels");
        }
    }

    #[test]
    fn effects_are_deterministic() {
        let img = test_page();
        for kind in EffectKind::ALL {
            let spec = EffectSpec { kind, intensity: 0.5, seed: 77 };
            assert_eq!(apply_effect(&img, &spec), apply_effect(&img, &spec), "{kind:?}");
        }
    }

    #[test]
    fn dimensions_always_preserved() {
        let img = test_page();
        for kind in EffectKind::ALL {
            let out = apply_effect(&img, &EffectSpec { kind, intensity: 0.9, seed: 5 });
            assert_eq!((out.width(), out.height()), (img.width(), img.height()));
        }
    }

    #[test]
    fn bad_photocopy_disturbs_a_flat_sheet() {
        // Pixel-diff count oracle: at 0.8 intensity well over 1% of the
        // pixels of a flat white page must change.
        let img = Image::new(100, 100, Rgba::WHITE);
        let out = apply_effect(
            &img,
            &EffectSpec { kind: EffectKind::BadPhotoCopy, intensity: 0.8, seed: 11 },
        );
        let mut differing = 0usize;
        for y in 0..100 {
            for x in 0..100 {
                if out.get(x, y) != img.get(x, y) {
                    differing += 1;
                }
            }
        }
        assert!(differing > 100, "only {differing} pixels changed");
    }

    #[test]
    fn every_effect_is_non_noop_at_high_intensity() {
        let img = test_page();
        for kind in EffectKind::ALL {
            let out = apply_effect(&img, &EffectSpec { kind, intensity: 0.9, seed: 23 });
            assert_ne!(out, img, "{kind:?} did nothing at 0.9");
        }
    }

    #[test]
    fn chains_apply_in_phase_order() {
        let img = test_page();
        // Supply out of order; result must equal the sorted application.
        let chain = vec![
            EffectSpec { kind: EffectKind::ShadowCast, intensity: 0.4, seed: 1 },
            EffectSpec { kind: EffectKind::InkBleed, intensity: 0.4, seed: 2 },
            EffectSpec { kind: EffectKind::PaperFactory, intensity: 0.4, seed: 3 },
        ];
        let chained = apply_chain(&img, &chain);
        let step1 = apply_effect(&img, &chain[1]);
        let step2 = apply_effect(&step1, &chain[2]);
        let step3 = apply_effect(&step2, &chain[0]);
        assert_eq!(chained, step3);
    }

    #[test]
    fn phases_follow_row_order() {
        let mut last = EffectPhase::Ink;
        for kind in EffectKind::ALL {
            let p = kind.phase();
            let rank = |p: EffectPhase| match p {
                EffectPhase::Ink => 0,
                EffectPhase::Paper => 1,
                EffectPhase::Combined => 2,
            };
            assert!(rank(p) >= rank(last));
            last = p;
        }
    }
}
