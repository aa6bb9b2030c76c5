//! Filling permutations: the permutation encoding of a pair of simple
//! closed curves that fill a punctured surface with few intersections.
//!
//! * [`perm`]: permutation algebra and cycle notation.
//! * [`encoding`]: symbols `1..=4n` as oriented arcs, and the structural
//!   permutations `Q` and `τ`.
//! * [`verifier`]: every condition a filling permutation must meet, and
//!   the surface glued from its polygons.
//! * [`moves`]: the double-bigon move adding two punctures.
//! * [`search`]: exhaustive enumeration with a brute-force oracle.
//! * [`tables`]: closed-form minimal intersection numbers.
//! * [`svg`]: polygon diagrams.
//! * [`cli`]: the `fillperm` command line.

pub mod cli;
pub mod encoding;
pub mod moves;
pub mod perm;
pub mod search;
pub mod svg;
pub mod tables;
pub mod verifier;

pub use encoding::{make_q, make_tau, ArcLabel, Curve, LabelScheme};
pub use moves::{double_bigon, extend_to, CrossingDiagram, SurgerySite};
pub use perm::{CycleDecomposition, Permutation};
pub use search::{canonical_form, enumerate, naive_enumerate, SearchQuery, SearchResult};
pub use tables::{cross_validate, min_intersection};
pub use verifier::{
    check_equation, faces_as_words, glue, validate, FillingInstance, GluedSurface, ValidationReport,
};
