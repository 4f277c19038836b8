//! Real moment-angle complexes `Z_K(D¹,S⁰)` over polygon boundaries.
//!
//! The crate builds the cubical complex, certifies it as a closed orientable
//! surface, embeds the hypercube graph `Q_n` as its 1-skeleton, and
//! quotients everything by the cyclic rotation of coordinates. Every
//! closed-form genus, Euler characteristic and necklace count has a direct
//! computation to check it against.
//!
//! - [`complex`]: simplicial complexes and the cubical cells of `Z_K`.
//! - [`surface`]: closed-surface, connectivity and orientability checks,
//!   genus, triangulation and OFF export.
//! - [`embedding`]: `Q_n`, rotation systems, face tracing, girth bounds.
//! - [`necklace`]: Möbius/totient, primitive necklace counts, brute-force
//!   rotation classes.
//! - [`quotient`]: the `C_n` action, quotient complex, branch data and
//!   the Riemann–Hurwitz check.

pub mod complex;
pub mod embedding;
mod error;
pub mod necklace;
pub mod quotient;
pub mod surface;
mod union_find;

pub use complex::{
    build_real_mac, build_real_mac_capped, euler_characteristic, verify_inclusion, CubicalCell,
    CubicalComplex, SimplicialComplex, DEFAULT_AMBIENT_CAP,
};
pub use embedding::{
    genus_closed_form, girth_lower_bound, hypercube_graph, rotation_from_complex,
    surgery_recurrence_check, trace_faces, verify_two_cell, Graph, RotationSystem,
};
pub use error::{Error, Result};
pub use necklace::{
    enumerate_necklaces, mobius, moreau_aperiodic, necklace_total, period, totient, NecklaceTally,
    DEFAULT_BRUTE_CAP,
};
pub use quotient::{
    act_on_cell, branch_points, quotient_complex, quotient_genus_closed_form,
    quotient_genus_upper_bound, quotient_graph, riemann_hurwitz_check, CyclicAction,
    QuotientComplex,
};
pub use surface::{
    as_face_complex, certify, check_closed_surface, check_orientable, genus, triangulate,
    FaceComplex, SurfaceCertificate,
};
pub use union_find::UnionFind;
