//! Shared inputs for the criterion benches.

use zkgenus_core::{build_real_mac, CubicalComplex, SimplicialComplex};

/// Polygon sizes the benches sweep over.
pub const SIZES: [usize; 4] = [6, 8, 10, 12];

pub fn polygon_mac(n: usize) -> CubicalComplex {
    build_real_mac(&SimplicialComplex::polygon_boundary(n).expect("n >= 3")).expect("within caps")
}
