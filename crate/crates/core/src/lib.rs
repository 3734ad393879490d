//! Exact Hurwitz-stability analysis and linear-matrix-inequality descriptions of the
//! region enclosed by a polynomial's frequency response.
//!
//! For a real polynomial `p`, the curve `ω ↦ p(jω)` splits the plane into components.
//! The component containing the origin is `{x + jy : F(x, y) ⪰ 0}` for a symmetric
//! pencil `F` built from Bézoutians of the real and imaginary parts of `p(jω)`,
//! and such a pencil exists with `F(0, 0) ≻ 0` exactly when `p` is stable.

pub mod bezout;
pub mod error;
pub mod json;
pub mod numeric;
pub mod pencil;
pub mod poly;
pub mod region;
pub mod stability;

pub use bezout::{bezout_matrix, resultant, BezoutSpec};
pub use error::{Error, Result};
pub use numeric::{parse_rat, rat, ratio, Definiteness, Rat, Signature, SymMat};
pub use pencil::{
    build_pencil, implicit_poly, lmi_pencil, membership, normalize_sign, MembershipResult,
    MembershipStatus, Pencil,
};
pub use poly::{freq_split, FreqSplit, Poly, Poly2, RealRootReport};
pub use region::{
    curve_samples, region_raster, rigid_convexity, segment_oracle, CurveSample, Raster,
    RigidConvexityReport, RigidVerdict, SegmentVerdict,
};
pub use stability::{classify, StabilityReport, Verdict};
