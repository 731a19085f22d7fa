//! Deciding sub-representability.
//!
//! A finite poset is sub-representable exactly when it is a flower, a
//! co-flower, or a disjoint union of chains. Described infinite posets are
//! handled symbolically: flowers and co-flowers, pinboard posets and their
//! duals are sub-representable; a chain is exactly when it is well-ordered or
//! well-ordered*.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::embed::{find_pattern, Embedding, PatternKind};
use crate::ordinal::{Cardinal, OrdinalExpr};
use crate::pinboard::{CoPinboard, Pinboard};
use crate::poset::{bit_indices, Poset, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("poset is empty")]
    EmptyPoset,
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(&'static str),
}

/// Names for the usual chains that are neither well-ordered nor
/// well-ordered*.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LinearTag {
    Integers,
    Rationals,
    Reals,
    Irrationals,
    Custom(String),
}

impl fmt::Display for LinearTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearTag::Integers => f.write_str("Z"),
            LinearTag::Rationals => f.write_str("Q"),
            LinearTag::Reals => f.write_str("R"),
            LinearTag::Irrationals => f.write_str("R\\Q"),
            LinearTag::Custom(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ChainDescriptor {
    FiniteChain(u64),
    WellOrdered(OrdinalExpr),
    /// The reverse of the given ordinal.
    WellOrderedStar(OrdinalExpr),
    /// Contains copies of both `ℕ` and `−ℕ`.
    Neither(LinearTag),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetDescriptor {
    Finite(Poset),
    Chain(ChainDescriptor),
    PinboardPoset(Pinboard),
    CoPinboardPoset(CoPinboard),
    /// A center with the chain `down_chain*` below it and an antichain of
    /// `width` elements above it.
    FlowerDesc {
        down_chain: OrdinalExpr,
        width: Cardinal,
    },
    CoFlowerDesc {
        up_chain: OrdinalExpr,
        width: Cardinal,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Flower,
    CoFlower,
    UnionOfChains,
    PinboardPoset,
    CoPinboardPoset,
    NotSubRepresentable,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Flower => "Flower",
            VerdictKind::CoFlower => "CoFlower",
            VerdictKind::UnionOfChains => "UnionOfChains",
            VerdictKind::PinboardPoset => "PinboardPoset",
            VerdictKind::CoPinboardPoset => "CoPinboardPoset",
            VerdictKind::NotSubRepresentable => "NotSubRepresentable",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Index of a flower or co-flower center.
    Center(usize),
    /// The chains of a union of chains, tallest first.
    Chains(Vec<SubsetMask>),
    /// An embedded obstruction.
    Pattern {
        kind: PatternKind,
        embedding: Embedding,
    },
    VeeAndWedge {
        vee: Embedding,
        wedge: Embedding,
    },
    Reason(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub sub_representable: bool,
    pub kind: VerdictKind,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn positive(kind: VerdictKind, witness: Witness) -> Self {
        Verdict {
            sub_representable: true,
            kind,
            witness: Some(witness),
        }
    }

    fn negative(witness: Witness) -> Self {
        Verdict {
            sub_representable: false,
            kind: VerdictKind::NotSubRepresentable,
            witness: Some(witness),
        }
    }

    fn reason(sub_representable: bool, kind: VerdictKind, text: &str) -> Self {
        Verdict {
            sub_representable,
            kind,
            witness: Some(Witness::Reason(text.into())),
        }
    }

    /// Re-checks the witness of a verdict on a finite poset against `p`.
    pub fn recheck(&self, p: &Poset) -> bool {
        match (&self.kind, &self.witness) {
            (VerdictKind::Flower, Some(Witness::Center(x))) => {
                *x < p.len() && is_flower_center(p, *x)
            }
            (VerdictKind::CoFlower, Some(Witness::Center(x))) => {
                *x < p.len() && is_flower_center(&p.dual(), *x)
            }
            (VerdictKind::UnionOfChains, Some(Witness::Chains(chains))) => {
                chains_partition(p, chains)
            }
            (VerdictKind::NotSubRepresentable, Some(Witness::Pattern { kind, embedding })) => {
                embedding.is_valid(&kind.poset(), p)
            }
            (VerdictKind::NotSubRepresentable, Some(Witness::VeeAndWedge { vee, wedge })) => {
                vee.is_valid(&PatternKind::Vee.poset(), p)
                    && wedge.is_valid(&PatternKind::Wedge.poset(), p)
            }
            _ => false,
        }
    }
}

fn is_flower_center(p: &Poset, x: usize) -> bool {
    let down = p.down_bits(x);
    let up = p.up_bits(x);
    (down | up | 1 << x) == p.all().bits()
        && up.count_ones() >= 2
        && p.is_chain(down)
        && p.is_antichain(up)
}

fn chains_partition(p: &Poset, chains: &[SubsetMask]) -> bool {
    let mut covered = 0u64;
    for m in chains {
        if m.bits() & covered != 0 || m.is_empty() || !p.is_chain(m.bits()) {
            return false;
        }
        covered |= m.bits();
    }
    covered == p.all().bits()
        && chains.iter().all(|m| {
            bit_indices(m.bits()).all(|i| (p.up_bits(i) | p.down_bits(i)) & !m.bits() == 0)
        })
}

/// The least-index center `x` with `D(x)` a chain, `U(x)` an antichain of at
/// least two elements, and `D(x) ∪ {x} ∪ U(x)` everything.
pub fn is_flower(p: &Poset) -> Option<usize> {
    (0..p.len()).find(|&x| is_flower_center(p, x))
}

pub fn is_coflower(p: &Poset) -> Option<usize> {
    is_flower(&p.dual())
}

/// The components, tallest first (ties by least index), when every one of
/// them is a chain. A single chain and an antichain both qualify.
pub fn is_union_of_chains(p: &Poset) -> Option<Vec<SubsetMask>> {
    let mut comps = p.component_masks();
    if !comps.iter().all(|m| p.is_chain(m.bits())) {
        return None;
    }
    comps.sort_by_key(|m| (core::cmp::Reverse(m.count()), m.bits().trailing_zeros()));
    Some(comps)
}

pub fn classify_finite(p: &Poset) -> Result<Verdict, ClassifyError> {
    if p.is_empty() {
        return Err(ClassifyError::EmptyPoset);
    }
    if let Some(chains) = is_union_of_chains(p) {
        return Ok(Verdict::positive(
            VerdictKind::UnionOfChains,
            Witness::Chains(chains),
        ));
    }
    if let Some(x) = is_flower(p) {
        return Ok(Verdict::positive(VerdictKind::Flower, Witness::Center(x)));
    }
    if let Some(x) = is_coflower(p) {
        return Ok(Verdict::positive(VerdictKind::CoFlower, Witness::Center(x)));
    }
    Ok(Verdict::negative(obstruction(p)))
}

/// Witness priority: a diamond, then a vee together with a wedge, then the
/// first four-point obstruction by canonical code.
fn obstruction(p: &Poset) -> Witness {
    if let Some(embedding) = find_pattern(p, PatternKind::Diamond) {
        return Witness::Pattern {
            kind: PatternKind::Diamond,
            embedding,
        };
    }
    if let (Some(vee), Some(wedge)) = (
        find_pattern(p, PatternKind::Vee),
        find_pattern(p, PatternKind::Wedge),
    ) {
        return Witness::VeeAndWedge { vee, wedge };
    }
    for kind in PatternKind::four_point_obstructions_by_code() {
        if let Some(embedding) = find_pattern(p, kind) {
            return Witness::Pattern { kind, embedding };
        }
    }
    Witness::Reason("no obstruction found".into())
}

pub fn classify_chain(d: &ChainDescriptor) -> Result<Verdict, ClassifyError> {
    Ok(match d {
        ChainDescriptor::FiniteChain(0) => {
            return Err(ClassifyError::InvalidDescriptor(
                "finite chain must be nonempty",
            ))
        }
        ChainDescriptor::WellOrdered(a) | ChainDescriptor::WellOrderedStar(a) if a.is_zero() => {
            return Err(ClassifyError::InvalidDescriptor("chain must be nonempty"))
        }
        ChainDescriptor::FiniteChain(_) => Verdict::reason(
            true,
            VerdictKind::UnionOfChains,
            "a finite chain is a union of one chain",
        ),
        ChainDescriptor::WellOrdered(_) => Verdict::reason(
            true,
            VerdictKind::PinboardPoset,
            "every well-ordered set is sub-representable",
        ),
        ChainDescriptor::WellOrderedStar(_) => Verdict::reason(
            true,
            VerdictKind::CoPinboardPoset,
            "every well-ordered* set is sub-representable",
        ),
        ChainDescriptor::Neither(_) => Verdict::reason(
            false,
            VerdictKind::NotSubRepresentable,
            "the chain contains copies of both N and -N",
        ),
    })
}

pub fn classify_descriptor(d: &PosetDescriptor) -> Result<Verdict, ClassifyError> {
    match d {
        PosetDescriptor::Finite(p) => classify_finite(p),
        PosetDescriptor::Chain(c) => classify_chain(c),
        PosetDescriptor::PinboardPoset(pb) => {
            if pb.pairs().is_empty() {
                return Err(ClassifyError::InvalidDescriptor("pinboard has no columns"));
            }
            Ok(Verdict::reason(
                true,
                VerdictKind::PinboardPoset,
                "the poset of a pinboard is sub-representable",
            ))
        }
        PosetDescriptor::CoPinboardPoset(pb) => {
            if pb.base().pairs().is_empty() {
                return Err(ClassifyError::InvalidDescriptor(
                    "co-pinboard has no columns",
                ));
            }
            Ok(Verdict::reason(
                true,
                VerdictKind::CoPinboardPoset,
                "the poset of a co-pinboard is sub-representable",
            ))
        }
        PosetDescriptor::FlowerDesc { width, .. } => {
            if *width < Cardinal::Fin(2) {
                return Err(ClassifyError::InvalidDescriptor(
                    "flower needs at least two petals",
                ));
            }
            Ok(Verdict::reason(
                true,
                VerdictKind::Flower,
                "flowers are sub-representable",
            ))
        }
        PosetDescriptor::CoFlowerDesc { width, .. } => {
            if *width < Cardinal::Fin(2) {
                return Err(ClassifyError::InvalidDescriptor(
                    "co-flower needs at least two petals",
                ));
            }
            Ok(Verdict::reason(
                true,
                VerdictKind::CoFlower,
                "co-flowers are sub-representable",
            ))
        }
    }
}
