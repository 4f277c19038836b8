use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{certify, FaceComplex, Witness};
use crate::error::{domain, Result};

/// Orthographic projection `ℝⁿ → ℝ³`, one row per output axis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Projection {
    pub rows: [Vec<f64>; 3],
}

impl Projection {
    /// Coordinate axis `i` goes to the unit circle at angle `2πi/n`, lifted
    /// alternately above and below the plane.
    pub fn default_for(n: usize) -> Self {
        let step = std::f64::consts::TAU / n.max(1) as f64;
        let x = (0..n).map(|i| (step * i as f64).cos()).collect();
        let y = (0..n).map(|i| (step * i as f64).sin()).collect();
        let z = (0..n)
            .map(|i| if i % 2 == 0 { 0.5 } else { -0.5 })
            .collect();
        Projection { rows: [x, y, z] }
    }

    pub fn dim(&self) -> usize {
        self.rows[0].len()
    }

    fn apply(&self, coords: u32) -> [f64; 3] {
        let mut p = [0.0; 3];
        for (axis, row) in self.rows.iter().enumerate() {
            p[axis] = row
                .iter()
                .enumerate()
                .filter(|&(i, _)| coords >> i & 1 == 1)
                .map(|(_, w)| w)
                .sum();
        }
        p
    }
}

/// OFF text for `f`. Faces are written as vertex cycles, flipped where the
/// orientation witness says so; vertices without coordinates sit at the
/// origin.
pub fn write_off(f: &FaceComplex, projection: &Projection) -> Result<String> {
    if projection.rows.iter().any(|r| r.len() != projection.dim()) {
        return Err(domain("projection rows have different lengths"));
    }
    if f.ambient > projection.dim() {
        return Err(domain(format!(
            "projection has {} columns but the complex lives in {} coordinates",
            projection.dim(),
            f.ambient
        )));
    }
    let orientation = match certify(f).witness {
        Witness::Orientation(o) => o,
        Witness::Violations(_) => vec![true; f.face_count()],
    };

    let mut out = String::new();
    out.push_str("OFF\n");
    writeln!(
        out,
        "{} {} {}",
        f.vertex_count(),
        f.face_count(),
        f.edge_count()
    )
    .unwrap();
    for v in &f.vertices {
        let [x, y, z] = projection.apply(v.coords.unwrap_or(0));
        writeln!(out, "{} {} {}", fmt_coord(x), fmt_coord(y), fmt_coord(z)).unwrap();
    }
    for (walk, &keep) in f.faces.iter().zip(&orientation) {
        let mut corners: Vec<usize> = walk.iter().map(|&s| f.tail(s)).collect();
        if !keep {
            corners.reverse();
        }
        write!(out, "{}", corners.len()).unwrap();
        for c in corners {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn fmt_coord(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}
