//! Sub-representability of partially ordered sets.
//!
//! A poset `P` is *sub-representable* when there is a map `g` on its subsets
//! such that `S ↪ T` exactly when `g(S) ⊆ g(T)`, and every `g(S)` is
//! embeddability-equivalent to `S`. Here `↪` means "isomorphic to a subset
//! carrying the induced order".
//!
//! The crate is `no_std` (it needs `alloc`) and contains:
//!
//! * [`poset`]: finite posets over at most 64 elements, cones, height and
//!   width, duals, components and canonical codes.
//! * [`embed`]: order-embedding search and the small named patterns.
//! * [`classify`]: the flower / co-flower / union-of-chains decision for
//!   finite posets, plus verdicts for symbolic descriptors of infinite ones.
//! * [`construct`]: the explicit map `g` for the positive finite cases and an
//!   exhaustive checker for any candidate map.
//! * [`oracle`]: a brute-force decision procedure straight from the
//!   definition, poset enumeration up to isomorphism, and the survey table
//!   that compares the two.
//! * [`ordinal`]: a small symbolic fragment of ordinal and cardinal arithmetic.
//! * [`pinboard`]: pinboards, simple pinboards, subset normalization, the
//!   column assignment `θ` and the column-embedding criterion.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod construct;
pub mod embed;
pub mod oracle;
pub mod ordinal;
pub mod pinboard;
pub mod poset;

mod classes;

pub use classify::{
    classify_chain, classify_descriptor, classify_finite, is_coflower, is_flower,
    is_union_of_chains, ChainDescriptor, ClassifyError, LinearTag, PosetDescriptor, Verdict,
    VerdictKind, Witness,
};
pub use construct::{build_g, verify_subrep, Condition, ConstructError, SubRepMap, Violation};
pub use embed::{contains_pattern, embeds, find_embedding, find_pattern, Embedding, PatternKind};
pub use oracle::{
    enumerate_posets, oracle_subrep, oracle_subrep_with_limit, oracle_table, survey, OracleError,
    SurveyRow,
};
pub use ordinal::{subrep_ordinal, Cardinal, OrdinalExpr, Segment, SegmentMode, Term};
pub use pinboard::{
    normalize_subset, pin_embeds, pinboard_poset, theta, theta_subset, CoDual, CoPinSubset,
    CoPinboard, PinSubset, Pinboard, PinboardError, SimplePinboard, ThetaSegments,
};
pub use poset::{CanonicalCode, Direction, Poset, PosetError, SubsetMask, MAX_ELEMENTS};
