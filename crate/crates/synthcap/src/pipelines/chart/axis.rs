//! Axis specification, nice tick selection and tick label formatting.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisKind {
    Linear,
    Categorical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub label: String,
    pub range: (f64, f64),
    pub tick_interval: f64,
    pub kind: AxisKind,
}

pub const MAX_TICKS: usize = 25;

#[derive(Debug, thiserror::Error)]
pub enum AxisError {
    #[error("axis range [{0}, {1}] is not increasing")]
    BadRange(f64, f64),
    #[error("tick interval {interval} yields {ticks} ticks (max {MAX_TICKS})")]
    TooManyTicks { interval: f64, ticks: usize },
}

impl AxisSpec {
    pub fn linear(label: impl Into<String>, lo: f64, hi: f64) -> Result<AxisSpec, AxisError> {
        if !(hi > lo) {
            return Err(AxisError::BadRange(lo, hi));
        }
        let spec = AxisSpec {
            label: label.into(),
            range: (lo, hi),
            tick_interval: nice_interval(lo, hi, 8),
            kind: AxisKind::Linear,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), AxisError> {
        let (lo, hi) = self.range;
        if !(hi > lo) {
            return Err(AxisError::BadRange(lo, hi));
        }
        if self.kind == AxisKind::Linear {
            let ticks = self.ticks().len();
            if ticks > MAX_TICKS || self.tick_interval <= 0.0 {
                return Err(AxisError::TooManyTicks {
                    interval: self.tick_interval,
                    ticks,
                });
            }
        }
        Ok(())
    }

    /// Tick positions covering the range, starting at the first multiple
    /// of the interval at or below `lo`.
    pub fn ticks(&self) -> Vec<f64> {
        let (lo, hi) = self.range;
        if self.tick_interval <= 0.0 {
            return vec![lo, hi];
        }
        let first = (lo / self.tick_interval).floor() * self.tick_interval;
        let mut out = Vec::new();
        let mut t = first;
        let mut guard = 0;
        while t <= hi + self.tick_interval * 1e-9 && guard < 1000 {
            if t >= lo - self.tick_interval * 1e-9 {
                out.push(t);
            }
            t += self.tick_interval;
            guard += 1;
        }
        out.truncate(MAX_TICKS);
        out
    }

    /// Fraction of the range where `v` sits, clamped to [0, 1].
    pub fn fraction(&self, v: f64) -> f64 {
        let (lo, hi) = self.range;
        ((v - lo) / (hi - lo)).clamp(0.0, 1.0)
    }
}

/// 1/2/5-progression interval giving at most `target` steps.
pub fn nice_interval(lo: f64, hi: f64, target: usize) -> f64 {
    let span = (hi - lo).abs().max(f64::MIN_POSITIVE);
    let raw = span / target.max(1) as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

/// Tick label: at most 4 significant digits, SI suffix above 10^4.
pub fn format_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let abs = v.abs();
    let (scaled, suffix) = if abs >= 1e9 {
        (v / 1e9, "G")
    } else if abs >= 1e6 {
        (v / 1e6, "M")
    } else if abs >= 1e4 {
        (v / 1e3, "K")
    } else {
        (v, "")
    };
    let digits_before = if scaled.abs() >= 1.0 {
        (scaled.abs().log10().floor() as i32 + 1).max(1)
    } else {
        1
    };
    let decimals = (4 - digits_before).clamp(0, 3) as usize;
    let mut s = format!("{scaled:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    format!("{s}{suffix}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nice_interval_keeps_tick_count_reasonable() {
        for &(lo, hi) in &[(0.0, 1.0), (0.0, 97.0), (-40.0, 263.0), (12.3, 12.9), (0.0, 1e7)] {
            let spec = AxisSpec::linear("x", lo, hi).unwrap();
            let ticks = spec.ticks();
            assert!(ticks.len() >= 2, "{lo}..{hi}: {ticks:?}");
            assert!(ticks.len() <= MAX_TICKS);
        }
    }

    #[test]
    fn degenerate_range_is_rejected() {
        assert!(AxisSpec::linear("x", 3.0, 3.0).is_err());
        assert!(AxisSpec::linear("x", 5.0, 1.0).is_err());
    }

    #[test]
    fn tick_format_uses_si_suffixes() {
        assert_eq!(format_tick(0.0), "0");
        assert_eq!(format_tick(42.0), "42");
        assert_eq!(format_tick(1234.0), "1234");
        assert_eq!(format_tick(10_000.0), "10K");
        assert_eq!(format_tick(2_500_000.0), "2.5M");
        assert_eq!(format_tick(1.5e10), "15G");
        assert_eq!(format_tick(0.25), "0.25");
        assert_eq!(format_tick(-12_000.0), "-12K");
    }

    #[test]
    fn fraction_clamps() {
        let spec = AxisSpec::linear("y", 0.0, 100.0).unwrap();
        assert_eq!(spec.fraction(50.0), 0.5);
        assert_eq!(spec.fraction(-10.0), 0.0);
        assert_eq!(spec.fraction(110.0), 1.0);
    }
}
