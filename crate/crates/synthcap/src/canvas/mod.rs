//! Raster substrate shared by all pipelines.

pub mod background;
pub mod effects;
pub mod fonts;
pub mod text;

pub use effects::{apply_chain, apply_effect, EffectKind, EffectSpec};
pub use fonts::FontId;
pub use text::{check_contrast, contrast_color, contrast_ratio, draw_text, draw_text_opt, Alignment, HandwritingParams, TextStyle};

use crate::layout::Rect;
use serde::{Deserialize, Serialize};

/// RGBA color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rgba(pub u8, pub u8, pub u8, pub u8);

impl Rgba {
    pub const BLACK: Rgba = Rgba(0, 0, 0, 255);
    pub const WHITE: Rgba = Rgba(255, 255, 255, 255);

    pub fn gray(v: u8) -> Rgba {
        Rgba(v, v, v, 255)
    }

    /// Source-over blend of `self` over `under` at `alpha` in [0,1]
    /// (multiplied into self's own alpha).
    pub fn over(self, under: Rgba, alpha: f32) -> Rgba {
        let a = (self.3 as f32 / 255.0 * alpha).clamp(0.0, 1.0);
        let blend = |s: u8, d: u8| ((s as f32 * a) + (d as f32 * (1.0 - a))).round() as u8;
        Rgba(
            blend(self.0, under.0),
            blend(self.1, under.1),
            blend(self.2, under.2),
            255,
        )
    }

    pub fn luminance(self) -> f64 {
        fn channel(v: u8) -> f64 {
            let c = v as f64 / 255.0;
            if c <= 0.03928 {
                c / 12.92
            } else {
                ((c + 0.055) / 1.055).powf(2.4)
            }
        }
        0.2126 * channel(self.0) + 0.7152 * channel(self.1) + 0.0722 * channel(self.2)
    }
}

/// Row-major RGBA image buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

#[derive(Debug, thiserror::Error)]
pub enum CanvasError {
    #[error("placement rect ({0:?}) exceeds the {1}x{2} canvas")]
    RectOutOfBounds(Rect, u32, u32),
    #[error("png encode failed: {0}")]
    PngEncode(String),
    #[error("png decode failed: {0}")]
    PngDecode(String),
    #[error("unknown image reference `{0}`")]
    BadImageRef(String),
}

impl Image {
    pub fn new(width: u32, height: u32, fill: Rgba) -> Image {
        let mut pixels = Vec::with_capacity((width * height * 4) as usize);
        for _ in 0..width * height {
            pixels.extend_from_slice(&[fill.0, fill.1, fill.2, fill.3]);
        }
        Image {
            width,
            height,
            pixels,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> Rgba {
        let i = ((y * self.width + x) * 4) as usize;
        Rgba(
            self.pixels[i],
            self.pixels[i + 1],
            self.pixels[i + 2],
            self.pixels[i + 3],
        )
    }

    #[inline]
    pub fn put(&mut self, x: u32, y: u32, c: Rgba) {
        if x >= self.width || y >= self.height {
            return;
        }
        let i = ((y * self.width + x) * 4) as usize;
        self.pixels[i] = c.0;
        self.pixels[i + 1] = c.1;
        self.pixels[i + 2] = c.2;
        self.pixels[i + 3] = c.3;
    }

    /// Blend `c` over the pixel at (x, y) with extra coverage `alpha`.
    #[inline]
    pub fn blend(&mut self, x: u32, y: u32, c: Rgba, alpha: f32) {
        if x >= self.width || y >= self.height || alpha <= 0.0 {
            return;
        }
        let under = self.get(x, y);
        self.put(x, y, c.over(under, alpha));
    }

    pub fn fill_rect(&mut self, rect: Rect, c: Rgba) {
        let x1 = rect.right().min(self.width);
        let y1 = rect.bottom().min(self.height);
        for y in rect.y.min(self.height)..y1 {
            for x in rect.x.min(self.width)..x1 {
                self.put(x, y, c);
            }
        }
    }

    /// Nearest-pixel luminance in [0,255].
    pub fn gray_at(&self, x: u32, y: u32) -> u8 {
        let c = self.get(x, y);
        ((c.0 as u32 * 299 + c.1 as u32 * 587 + c.2 as u32 * 114) / 1000) as u8
    }

    /// Bilinear resample into a new width x height buffer.
    pub fn resize(&self, width: u32, height: u32) -> Image {
        let mut out = Image::new(width, height, Rgba(0, 0, 0, 255));
        let sx = self.width as f64 / width as f64;
        let sy = self.height as f64 / height as f64;
        for y in 0..height {
            let fy = ((y as f64 + 0.5) * sy - 0.5).max(0.0);
            let y0 = fy.floor() as u32;
            let y1 = (y0 + 1).min(self.height - 1);
            let wy = fy - y0 as f64;
            for x in 0..width {
                let fx = ((x as f64 + 0.5) * sx - 0.5).max(0.0);
                let x0 = fx.floor() as u32;
                let x1 = (x0 + 1).min(self.width - 1);
                let wx = fx - x0 as f64;
                let mut ch = [0u8; 4];
                for (k, slot) in ch.iter_mut().enumerate() {
                    let p00 = self.channel(x0, y0, k) as f64;
                    let p10 = self.channel(x1, y0, k) as f64;
                    let p01 = self.channel(x0, y1, k) as f64;
                    let p11 = self.channel(x1, y1, k) as f64;
                    let top = p00 * (1.0 - wx) + p10 * wx;
                    let bot = p01 * (1.0 - wx) + p11 * wx;
                    *slot = (top * (1.0 - wy) + bot * wy).round().clamp(0.0, 255.0) as u8;
                }
                out.put(x, y, Rgba(ch[0], ch[1], ch[2], ch[3]));
            }
        }
        out
    }

    /// Crop to the largest centered window with the requested aspect.
    pub fn center_crop_to_aspect(&self, aspect: f64) -> Image {
        let cur = self.width as f64 / self.height as f64;
        let (w, h) = if cur > aspect {
            (((self.height as f64) * aspect).round().max(1.0) as u32, self.height)
        } else {
            (self.width, ((self.width as f64) / aspect).round().max(1.0) as u32)
        };
        let x0 = (self.width - w) / 2;
        let y0 = (self.height - h) / 2;
        let mut out = Image::new(w, h, Rgba(0, 0, 0, 255));
        for y in 0..h {
            for x in 0..w {
                out.put(x, y, self.get(x0 + x, y0 + y));
            }
        }
        out
    }

    #[inline]
    fn channel(&self, x: u32, y: u32, k: usize) -> u8 {
        self.pixels[((y * self.width + x) * 4) as usize + k]
    }

    pub fn encode_png(&self) -> Result<Vec<u8>, CanvasError> {
        use image::codecs::png::{CompressionType, FilterType, PngEncoder};
        use image::ImageEncoder;
        let mut out = Vec::new();
        let enc = PngEncoder::new_with_quality(&mut out, CompressionType::Fast, FilterType::Sub);
        enc.write_image(
            &self.pixels,
            self.width,
            self.height,
            image::ExtendedColorType::Rgba8,
        )
        .map_err(|e| CanvasError::PngEncode(e.to_string()))?;
        Ok(out)
    }

    pub fn decode_png(bytes: &[u8]) -> Result<Image, CanvasError> {
        let img = image::load_from_memory_with_format(bytes, image::ImageFormat::Png)
            .map_err(|e| CanvasError::PngDecode(e.to_string()))?
            .to_rgba8();
        Ok(Image {
            width: img.width(),
            height: img.height(),
            pixels: img.into_raw(),
        })
    }
}

/// Assemble placements over a background pattern.
///
/// Sources are bilinear-resampled into their rects; later placements
/// overdraw earlier ones; uncovered pixels keep the background.
pub fn compose(
    canvas_w: u32,
    canvas_h: u32,
    background_id: u8,
    placements: &[(Image, Rect)],
) -> Result<Image, CanvasError> {
    let mut canvas = background::render(background_id, canvas_w, canvas_h);
    for (src, rect) in placements {
        if rect.right() > canvas_w || rect.bottom() > canvas_h {
            return Err(CanvasError::RectOutOfBounds(*rect, canvas_w, canvas_h));
        }
        let scaled = if src.width() == rect.w && src.height() == rect.h {
            src.clone()
        } else {
            src.resize(rect.w, rect.h)
        };
        for y in 0..rect.h {
            for x in 0..rect.w {
                canvas.put(rect.x + x, rect.y + y, scaled.get(x, y));
            }
        }
    }
    Ok(canvas)
}

/// Separable Gaussian approximation; dimensions preserved.
pub fn blur(img: &Image, radius: f32) -> Image {
    if radius <= 0.0 {
        return img.clone();
    }
    let sigma = (radius / 2.0).max(0.5);
    let half = (sigma * 2.5).ceil() as i64;
    let mut kernel = Vec::with_capacity((2 * half + 1) as usize);
    let mut sum = 0.0f64;
    for i in -half..=half {
        let v = (-(i as f64 * i as f64) / (2.0 * sigma as f64 * sigma as f64)).exp();
        kernel.push(v);
        sum += v;
    }
    for v in &mut kernel {
        *v /= sum;
    }

    let (w, h) = (img.width as i64, img.height as i64);
    let mut tmp = img.clone();
    // Horizontal pass.
    for y in 0..h {
        for x in 0..w {
            let mut acc = [0.0f64; 4];
            for (ki, kv) in kernel.iter().enumerate() {
                let sx = (x + ki as i64 - half).clamp(0, w - 1);
                for (k, a) in acc.iter_mut().enumerate() {
                    *a += img.channel(sx as u32, y as u32, k) as f64 * kv;
                }
            }
            tmp.put(
                x as u32,
                y as u32,
                Rgba(
                    acc[0].round() as u8,
                    acc[1].round() as u8,
                    acc[2].round() as u8,
                    acc[3].round() as u8,
                ),
            );
        }
    }
    // Vertical pass.
    let mut out = tmp.clone();
    for y in 0..h {
        for x in 0..w {
            let mut acc = [0.0f64; 4];
            for (ki, kv) in kernel.iter().enumerate() {
                let sy = (y + ki as i64 - half).clamp(0, h - 1);
                for (k, a) in acc.iter_mut().enumerate() {
                    *a += tmp.channel(x as u32, sy as u32, k) as f64 * kv;
                }
            }
            out.put(
                x as u32,
                y as u32,
                Rgba(
                    acc[0].round() as u8,
                    acc[1].round() as u8,
                    acc[2].round() as u8,
                    acc[3].round() as u8,
                ),
            );
        }
    }
    out
}

/// 8x8 average hash with a flat-image tie rule.
///
/// Images are box-downsampled to 8x8 grayscale and thresholded at the
/// mean. Flat images (variance below epsilon) would all hash to zero, so
/// they instead hash to a thermometer code of their mean: one low bit per
/// 32 gray levels. Hamming distance <= 5 flags near-duplicates.
pub fn perceptual_hash(img: &Image) -> u64 {
    let mut cells = [0.0f64; 64];
    for by in 0..8u32 {
        for bx in 0..8u32 {
            let x0 = bx * img.width / 8;
            let x1 = ((bx + 1) * img.width / 8).max(x0 + 1).min(img.width.max(1));
            let y0 = by * img.height / 8;
            let y1 = ((by + 1) * img.height / 8).max(y0 + 1).min(img.height.max(1));
            let mut acc = 0.0;
            let mut n = 0.0;
            for y in y0..y1 {
                for x in x0..x1 {
                    acc += img.gray_at(x, y) as f64;
                    n += 1.0;
                }
            }
            cells[(by * 8 + bx) as usize] = if n > 0.0 { acc / n } else { 0.0 };
        }
    }
    let mean = cells.iter().sum::<f64>() / 64.0;
    let variance = cells.iter().map(|c| (c - mean) * (c - mean)).sum::<f64>() / 64.0;
    if variance < 0.5 {
        // Thermometer code of the mean bucket: monotone Hamming distance.
        let bucket = (mean / 32.0).floor().min(8.0) as u32;
        return if bucket == 0 { 0 } else { (1u64 << bucket) - 1 };
    }
    let mut bits = 0u64;
    for (i, &c) in cells.iter().enumerate() {
        if c > mean {
            bits |= 1u64 << i;
        }
    }
    bits
}

pub fn hash_distance(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}
