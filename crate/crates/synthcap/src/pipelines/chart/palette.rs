//! Color ramps, categorical palettes and human-readable color names.

use crate::canvas::Rgba;

/// Continuous ramps (low -> high anchor stops).
pub const RAMPS: [(&str, [(u8, u8, u8); 3]); 8] = [
    ("blues", [(239, 246, 255), (107, 160, 210), (8, 48, 107)]),
    ("greens", [(240, 249, 235), (116, 196, 118), (0, 68, 27)]),
    ("reds", [(255, 240, 235), (239, 120, 97), (103, 0, 13)]),
    ("viridis", [(68, 1, 84), (33, 145, 140), (253, 231, 37)]),
    ("magma", [(0, 0, 4), (183, 55, 121), (252, 253, 191)]),
    ("cividis", [(0, 32, 76), (124, 123, 120), (255, 234, 70)]),
    ("heat", [(255, 247, 188), (254, 154, 46), (177, 0, 38)]),
    ("teal_rose", [(0, 128, 128), (241, 234, 200), (191, 64, 80)]),
];

/// Categorical palettes.
pub const PALETTES: [(&str, [(u8, u8, u8); 6]); 6] = [
    ("classic", [(31, 119, 180), (255, 127, 14), (44, 160, 44), (214, 39, 40), (148, 103, 189), (140, 86, 75)]),
    ("pastel", [(174, 199, 232), (255, 187, 120), (152, 223, 138), (255, 152, 150), (197, 176, 213), (196, 156, 148)]),
    ("bold", [(230, 25, 75), (60, 180, 75), (0, 130, 200), (245, 130, 48), (145, 30, 180), (128, 128, 0)]),
    ("earth", [(141, 110, 99), (85, 139, 47), (255, 179, 0), (109, 76, 65), (38, 166, 154), (183, 28, 28)]),
    ("cool", [(26, 35, 126), (2, 119, 189), (0, 151, 167), (0, 105, 92), (69, 39, 160), (84, 110, 122)]),
    ("citrus", [(255, 111, 0), (174, 213, 129), (255, 202, 40), (124, 179, 66), (251, 140, 0), (205, 220, 57)]),
];

/// Named anchors used to describe colors in digests.
pub const NAMED_COLORS: [(&str, (u8, u8, u8)); 24] = [
    ("black", (0, 0, 0)),
    ("dark gray", (70, 70, 70)),
    ("gray", (128, 128, 128)),
    ("light gray", (200, 200, 200)),
    ("white", (255, 255, 255)),
    ("red", (220, 40, 40)),
    ("dark red", (120, 10, 20)),
    ("orange", (250, 140, 20)),
    ("gold", (230, 190, 40)),
    ("yellow", (250, 240, 80)),
    ("olive", (120, 120, 40)),
    ("lime", (160, 220, 60)),
    ("green", (50, 160, 60)),
    ("dark green", (10, 80, 30)),
    ("teal", (20, 140, 140)),
    ("cyan", (80, 220, 230)),
    ("sky blue", (120, 180, 240)),
    ("blue", (40, 90, 200)),
    ("navy", (15, 30, 100)),
    ("purple", (130, 60, 180)),
    ("magenta", (220, 60, 200)),
    ("pink", (250, 170, 200)),
    ("brown", (130, 80, 50)),
    ("tan", (210, 180, 140)),
];

/// Sample ramp `id` at `t` in [0, 1].
pub fn ramp_color(id: usize, t: f64) -> Rgba {
    let stops = RAMPS[id % RAMPS.len()].1;
    let t = t.clamp(0.0, 1.0);
    let (a, b, local) = if t < 0.5 {
        (stops[0], stops[1], t * 2.0)
    } else {
        (stops[1], stops[2], (t - 0.5) * 2.0)
    };
    let lerp = |p: u8, q: u8| (p as f64 + (q as f64 - p as f64) * local).round() as u8;
    Rgba(lerp(a.0, b.0), lerp(a.1, b.1), lerp(a.2, b.2), 255)
}

pub fn palette_color(id: usize, series: usize) -> Rgba {
    let (_, colors) = PALETTES[id % PALETTES.len()];
    let c = colors[series % colors.len()];
    Rgba(c.0, c.1, c.2, 255)
}

/// Nearest named anchor, by squared RGB distance.
pub fn color_name(c: Rgba) -> &'static str {
    NAMED_COLORS
        .iter()
        .min_by_key(|(_, (r, g, b))| {
            let dr = *r as i64 - c.0 as i64;
            let dg = *g as i64 - c.1 as i64;
            let db = *b as i64 - c.2 as i64;
            dr * dr + dg * dg + db * db
        })
        .map(|(name, _)| *name)
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bank_sizes() {
        assert_eq!(RAMPS.len(), 8);
        assert_eq!(PALETTES.len(), 6);
        assert_eq!(NAMED_COLORS.len(), 24);
    }

    #[test]
    fn ramp_hits_anchor_stops() {
        for id in 0..RAMPS.len() {
            let lo = ramp_color(id, 0.0);
            let hi = ramp_color(id, 1.0);
            let stops = RAMPS[id].1;
            assert_eq!((lo.0, lo.1, lo.2), stops[0]);
            assert_eq!((hi.0, hi.1, hi.2), stops[2]);
        }
    }

    #[test]
    fn exact_anchors_name_themselves() {
        for (name, (r, g, b)) in NAMED_COLORS {
            assert_eq!(color_name(Rgba(r, g, b, 255)), name);
        }
    }
}
