//! Map projections for the choropleth renderer.
//!
//! All projections map (lon, lat) degrees to abstract plane coordinates
//! with x increasing east and y increasing north; the renderer fits the
//! projected bounding box into the plot area.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Projection {
    Equirectangular,
    /// Web-style Mercator, latitude clamped to +-85 degrees.
    Mercator,
    /// Lambert azimuthal equal-area about the given center.
    LambertAzimuthal { center_lon: f64, center_lat: f64 },
}

pub const MERCATOR_MAX_LAT: f64 = 85.0;

pub fn project(lon: f64, lat: f64, projection: Projection) -> (f64, f64) {
    match projection {
        Projection::Equirectangular => (lon, lat),
        Projection::Mercator => {
            let lat = lat.clamp(-MERCATOR_MAX_LAT, MERCATOR_MAX_LAT);
            let phi = lat.to_radians();
            (
                lon.to_radians(),
                (std::f64::consts::FRAC_PI_4 + phi / 2.0).tan().ln(),
            )
        }
        Projection::LambertAzimuthal {
            center_lon,
            center_lat,
        } => {
            let phi = lat.to_radians();
            let phi1 = center_lat.to_radians();
            let dl = (lon - center_lon).to_radians();
            let denom = 1.0 + phi1.sin() * phi.sin() + phi1.cos() * phi.cos() * dl.cos();
            // Antipode of the center projects to infinity; clamp the
            // denominator (regions never straddle the antipode here).
            let k = (2.0 / denom.max(1e-9)).sqrt();
            (
                k * phi.cos() * dl.sin(),
                k * (phi1.cos() * phi.sin() - phi1.sin() * phi.cos() * dl.cos()),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equirectangular_origin_is_plane_origin() {
        assert_eq!(project(0.0, 0.0, Projection::Equirectangular), (0.0, 0.0));
    }

    #[test]
    fn mercator_clamps_at_85_degrees() {
        let (_, y85) = project(0.0, 85.0, Projection::Mercator);
        let (_, y89) = project(0.0, 89.0, Projection::Mercator);
        let (_, y90) = project(0.0, 90.0, Projection::Mercator);
        assert!(y85.is_finite());
        assert_eq!(y85, y89);
        assert_eq!(y85, y90);
        let (_, ys) = project(0.0, -89.0, Projection::Mercator);
        assert!((ys + y85).abs() < 1e-12);
    }

    #[test]
    fn mercator_y_at_45_north_matches_hand_computed_constant() {
        // ln(tan(pi/4 + phi/2)) at phi = 45 degrees.
        let want = (std::f64::consts::FRAC_PI_4 + 45f64.to_radians() / 2.0)
            .tan()
            .ln();
        let (_, y) = project(10.0, 45.0, Projection::Mercator);
        assert!((y - want).abs() < 1e-12);
        assert!((want - 0.881_373_587_019_543).abs() < 1e-12);
    }

    #[test]
    fn lambert_center_maps_to_origin() {
        let p = Projection::LambertAzimuthal {
            center_lon: 15.0,
            center_lat: 50.0,
        };
        let (x, y) = project(15.0, 50.0, p);
        assert!(x.abs() < 1e-12 && y.abs() < 1e-12);
        // Equal-area property spot check: a point east of center lands at
        // positive x, north at positive y.
        let (xe, _) = project(20.0, 50.0, p);
        assert!(xe > 0.0);
        let (_, yn) = project(15.0, 55.0, p);
        assert!(yn > 0.0);
    }
}
