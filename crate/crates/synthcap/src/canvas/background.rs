//! The fixed library of 12 procedural background patterns.

use super::{Image, Rgba};

pub const PATTERN_COUNT: u8 = 12;

/// Render pattern `id` (taken modulo 12) at the given size. Pure function.
pub fn render(id: u8, w: u32, h: u32) -> Image {
    let id = id % PATTERN_COUNT;
    match id {
        0 => solid(w, h, Rgba::WHITE),
        1 => solid(w, h, Rgba(245, 241, 232, 255)),
        2 => linear_gradient(w, h, Rgba(235, 242, 250, 255), Rgba(204, 219, 239, 255), true),
        3 => linear_gradient(w, h, Rgba(250, 244, 234, 255), Rgba(233, 219, 198, 255), false),
        4 => checker(w, h, 24, Rgba(240, 240, 240, 255), Rgba(221, 221, 221, 255)),
        5 => dots(w, h, 18, Rgba(248, 248, 248, 255), Rgba(210, 214, 220, 255)),
        6 => grain(w, h, Rgba(246, 243, 235, 255), 9),
        7 => stripes(w, h, 16, Rgba(238, 244, 240, 255), Rgba(223, 233, 226, 255)),
        8 => radial(w, h, Rgba(252, 252, 252, 255), Rgba(222, 226, 233, 255)),
        9 => solid(w, h, Rgba(32, 34, 40, 255)),
        10 => crosshatch(w, h, 22, Rgba(244, 246, 248, 255), Rgba(226, 230, 235, 255)),
        _ => hlines(w, h, 12, Rgba(250, 250, 248, 255), Rgba(232, 232, 226, 255)),
    }
}

fn solid(w: u32, h: u32, c: Rgba) -> Image {
    Image::new(w, h, c)
}

fn linear_gradient(w: u32, h: u32, a: Rgba, b: Rgba, horizontal: bool) -> Image {
    let mut img = Image::new(w, h, a);
    for y in 0..h {
        for x in 0..w {
            let t = if horizontal {
                x as f32 / w.max(1) as f32
            } else {
                y as f32 / h.max(1) as f32
            };
            let lerp = |p: u8, q: u8| (p as f32 + (q as f32 - p as f32) * t).round() as u8;
            img.put(x, y, Rgba(lerp(a.0, b.0), lerp(a.1, b.1), lerp(a.2, b.2), 255));
        }
    }
    img
}

fn checker(w: u32, h: u32, cell: u32, a: Rgba, b: Rgba) -> Image {
    let mut img = Image::new(w, h, a);
    for y in 0..h {
        for x in 0..w {
            if ((x / cell) + (y / cell)) % 2 == 1 {
                img.put(x, y, b);
            }
        }
    }
    img
}

fn dots(w: u32, h: u32, pitch: u32, bg: Rgba, dot: Rgba) -> Image {
    let mut img = Image::new(w, h, bg);
    let r = (pitch / 6).max(1) as i64;
    for cy in (pitch / 2..h + pitch).step_by(pitch as usize) {
        for cx in (pitch / 2..w + pitch).step_by(pitch as usize) {
            for dy in -r..=r {
                for dx in -r..=r {
                    if dx * dx + dy * dy <= r * r {
                        let px = cx as i64 + dx;
                        let py = cy as i64 + dy;
                        if px >= 0 && py >= 0 && (px as u32) < w && (py as u32) < h {
                            img.put(px as u32, py as u32, dot);
                        }
                    }
                }
            }
        }
    }
    img
}

/// Paper grain: deterministic value noise from pixel coordinates.
fn grain(w: u32, h: u32, base: Rgba, amp: i32) -> Image {
    let mut img = Image::new(w, h, base);
    for y in 0..h {
        for x in 0..w {
            let n = hash2(x, y);
            let d = (n % (2 * amp as u64 + 1)) as i32 - amp;
            let adj = |v: u8| (v as i32 + d).clamp(0, 255) as u8;
            img.put(x, y, Rgba(adj(base.0), adj(base.1), adj(base.2), 255));
        }
    }
    img
}

fn stripes(w: u32, h: u32, pitch: u32, a: Rgba, b: Rgba) -> Image {
    let mut img = Image::new(w, h, a);
    for y in 0..h {
        for x in 0..w {
            if ((x + y) / pitch) % 2 == 1 {
                img.put(x, y, b);
            }
        }
    }
    img
}

fn radial(w: u32, h: u32, center: Rgba, edge: Rgba) -> Image {
    let mut img = Image::new(w, h, center);
    let (cx, cy) = (w as f32 / 2.0, h as f32 / 2.0);
    let maxd = (cx * cx + cy * cy).sqrt();
    for y in 0..h {
        for x in 0..w {
            let d = (((x as f32 - cx).powi(2) + (y as f32 - cy).powi(2)).sqrt() / maxd).min(1.0);
            let lerp = |p: u8, q: u8| (p as f32 + (q as f32 - p as f32) * d).round() as u8;
            img.put(
                x,
                y,
                Rgba(lerp(center.0, edge.0), lerp(center.1, edge.1), lerp(center.2, edge.2), 255),
            );
        }
    }
    img
}

fn crosshatch(w: u32, h: u32, pitch: u32, bg: Rgba, line: Rgba) -> Image {
    let mut img = Image::new(w, h, bg);
    for y in 0..h {
        for x in 0..w {
            if x % pitch == 0 || y % pitch == 0 {
                img.put(x, y, line);
            }
        }
    }
    img
}

fn hlines(w: u32, h: u32, pitch: u32, bg: Rgba, line: Rgba) -> Image {
    let mut img = Image::new(w, h, bg);
    for y in (0..h).step_by(pitch as usize) {
        for x in 0..w {
            img.put(x, y, line);
        }
    }
    img
}

fn hash2(x: u32, y: u32) -> u64 {
    let mut v = (x as u64) << 32 | y as u64;
    v = (v ^ (v >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    v = (v ^ (v >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    v ^ (v >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_are_pure_and_sized() {
        for id in 0..PATTERN_COUNT {
            let a = render(id, 40, 30);
            let b = render(id, 40, 30);
            assert_eq!(a, b);
            assert_eq!(a.width(), 40);
            assert_eq!(a.height(), 30);
        }
    }

    #[test]
    fn distinct_ids_render_distinct_patterns() {
        let imgs: Vec<Image> = (0..PATTERN_COUNT).map(|id| render(id, 64, 64)).collect();
        for i in 0..imgs.len() {
            for j in i + 1..imgs.len() {
                assert_ne!(imgs[i], imgs[j], "patterns {i} and {j} identical");
            }
        }
    }
}
