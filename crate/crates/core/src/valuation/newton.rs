//! Newton polygons from coefficient valuations.
//!
//! The input is valuations only, so the same routine serves rational,
//! function-field and truncated p-adic coefficients.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// One edge of the lower convex hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub slope: Ratio<i64>,
    pub length: u64,
}

/// Lower convex hull of the points `(i, v(a_i))`, slopes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub segments: Vec<Segment>,
    /// Vertices of the hull, left to right.
    pub vertices: Vec<(u64, i64)>,
}

impl NewtonPolygon {
    /// Root valuations with multiplicities: a segment of slope `m` and length
    /// `l` gives `l` roots of valuation `-m`. Roots equal to zero (missing low
    /// coefficients) are not represented.
    pub fn root_valuations(&self) -> Vec<(Ratio<i64>, u64)> {
        self.segments.iter().map(|s| (-s.slope, s.length)).collect()
    }

    /// Largest root valuation, or `None` for an empty polygon.
    pub fn max_root_valuation(&self) -> Option<Ratio<i64>> {
        self.segments.first().map(|s| -s.slope)
    }

    pub fn min_root_valuation(&self) -> Option<Ratio<i64>> {
        self.segments.last().map(|s| -s.slope)
    }

    /// Total horizontal length.
    pub fn width(&self) -> u64 {
        self.segments.iter().map(|s| s.length).sum()
    }
}

/// Build the Newton polygon of `sum a_i x^i` from `(i, v(a_i))`, where
/// `None` marks a zero coefficient.
pub fn newton_polygon(points: &[(u64, Option<i64>)]) -> Result<NewtonPolygon> {
    let mut pts: Vec<(u64, i64)> = points
        .iter()
        .filter_map(|&(i, v)| v.map(|v| (i, v)))
        .collect();
    pts.sort_unstable();
    pts.dedup_by_key(|p| p.0);
    let lead = points.iter().map(|p| p.0).max();
    if pts.len() < 2 || pts.last().map(|p| p.0) != lead {
        return Err(Error::DegenerateNewtonPolygon);
    }
    // Monotone chain, lower hull.
    let mut hull: Vec<(u64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            if cross(a, b, p) <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let dx = (w[1].0 - w[0].0) as i64;
            Segment {
                slope: Ratio::new(w[1].1 - w[0].1, dx),
                length: dx as u64,
            }
        })
        .collect();
    Ok(NewtonPolygon {
        segments,
        vertices: hull,
    })
}

fn cross(a: (u64, i64), b: (u64, i64), c: (u64, i64)) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    let (bx, by) = (b.0 as i128, b.1 as i128);
    let (cx, cy) = (c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}
