//! Executable theory of ample (lopsided) sets.
//!
//! A family `L` of full sign vectors in `{±1}^E` is *ample* when it has
//! exactly as many members as sets it shatters. This crate represents sign
//! vector families, computes the combinatorial invariants attached to them
//! (shattered families, the cube complex `|L|` and its barycentric
//! completion, cocircuits and circuits, grid metrics, orthant patterns of
//! point clouds) and implements every known characterization of ampleness as
//! an independent predicate, so that they can be cross-checked against each
//! other.
//!
//! Coordinates are bit positions: coordinate `e` of a vector is bit `e`, and a
//! set bit means `+1`. Partial vectors additionally carry a support mask.
//! The ground set holds at most [`MAX_DIMENSION`] coordinates so that every
//! vector and every subset `A ⊆ E` fits in one machine word.
//!
//! ```
//! use lopsided::prelude::*;
//!
//! let six_cycle = SignFamily::parse("++-\n+-+\n+--\n-++\n-+-\n--+\n").unwrap();
//! assert_eq!(dress_pajor(&six_cycle), (4, 6, 7));
//! assert!(!is_ample(&six_cycle));
//! ```

pub mod ample;
pub mod convexity;
pub mod cubihedron;
mod error;
pub mod oracle;
pub mod shatter;
pub mod signs;

pub(crate) mod bits;

pub use error::{Error, Result};
pub use signs::MAX_DIMENSION;

pub mod prelude {
    pub use crate::ample::{
        check, cross_check, enumerate_families, generate, is_ample, Characterization,
        CharacterizationReport, FamilyKind, Verdict, Witness,
    };
    pub use crate::convexity::{
        is_sign_convex, orthant_pattern, orthant_pattern_of_complex, region_pattern,
        satisfies_sca, sign_of_point, upward_closed_convexity_report, PointCloud,
    };
    pub use crate::cubihedron::{
        barycentric_completion, circuits, cocircuits, complex_dimension, euler_characteristic,
        face_counts, grid_distance, is_grid_isometric, projected_complex_contains,
        projection_dimensions, FaceComplex,
    };
    pub use crate::shatter::{
        dress_pajor, project, restrict, shattered, strongly_shattered, vc_dimension,
        SubsetFamily,
    };
    pub use crate::signs::{
        complement, l1_distance, l1_distance_partial, minima, precedes, upward_closure,
        GroundSet, PartialFamily, PartialSignVector, Sign, SignFamily, SignVector, Subset,
    };
    pub use crate::{Error, Result};
}
