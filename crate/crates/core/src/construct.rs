//! The sub-representation map `g` for finite flowers, co-flowers and unions
//! of chains, and an exhaustive checker for any candidate map.
//!
//! `g` is defined on nonempty subsets only.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::classes::SubsetClasses;
use crate::classify::{classify_finite, ClassifyError, Verdict, VerdictKind, Witness};
use crate::poset::{bit_indices, Poset, SubsetMask};

/// Largest poset [`build_g`] tabulates.
pub const BUILD_LIMIT: usize = 20;

/// Largest poset [`verify_subrep`] checks.
pub const VERIFY_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("poset is not sub-representable")]
    NotSubRepresentable(Verdict),
    #[error("poset has {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("map is undefined or empty on subset {0:#x}")]
    PartialMap(u64),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// A map from the nonempty subsets of `parent` to subsets of `parent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRepMap {
    parent: Poset,
    table: BTreeMap<SubsetMask, SubsetMask>,
}

impl SubRepMap {
    pub fn new(parent: Poset, table: BTreeMap<SubsetMask, SubsetMask>) -> Self {
        SubRepMap { parent, table }
    }

    pub fn parent(&self) -> &Poset {
        &self.parent
    }

    pub fn table(&self) -> &BTreeMap<SubsetMask, SubsetMask> {
        &self.table
    }

    pub fn get(&self, s: SubsetMask) -> Option<SubsetMask> {
        self.table.get(&s).copied()
    }

    /// The distinct images, ordered by size and then mask.
    pub fn representatives(&self) -> Vec<SubsetMask> {
        let mut reps: Vec<_> = self.table.values().copied().collect();
        reps.sort_by_key(|m| (m.count(), m.bits()));
        reps.dedup();
        reps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `S ↪ T` exactly when `g(S) ⊆ g(T)`.
    Inclusion,
    /// `S ↪ g(S) ↪ S`.
    Equivalence,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Inclusion => f.write_str("(i) embeds iff image inclusion"),
            Condition::Equivalence => f.write_str("(ii) subset equivalent to its image"),
        }
    }
}

/// A failed condition. For [`Condition::Equivalence`], `second` is `g(first)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub first: SubsetMask,
    pub second: SubsetMask,
    pub condition: Condition,
}

/// The flower labelling: `x_1..x_k` the petals in index order, `x_{k+1}` the
/// center, then the stem from the top down.
struct FlowerLabels {
    petals: Vec<usize>,
    center: usize,
    stem: Vec<usize>,
}

impl FlowerLabels {
    fn new(p: &Poset, center: usize) -> Self {
        let petals = bit_indices(p.up_bits(center)).collect();
        let mut stem: Vec<usize> = bit_indices(p.down_bits(center)).collect();
        stem.sort_by_key(|&i| core::cmp::Reverse(p.down_bits(i).count_ones()));
        FlowerLabels {
            petals,
            center,
            stem,
        }
    }

    /// `x_{k+1}, …, x_{k+c}`: the top `c` points of the center's chain.
    fn upper_stem(&self, c: usize) -> u64 {
        core::iter::once(self.center)
            .chain(self.stem.iter().copied())
            .take(c)
            .fold(0, |acc, i| acc | 1 << i)
    }

    fn first_petals(&self, b: usize) -> u64 {
        self.petals.iter().take(b).fold(0, |acc, &i| acc | 1 << i)
    }

    fn image(&self, bits: u64) -> u64 {
        let chain_part = self.upper_stem(usize::MAX) & bits;
        let c = chain_part.count_ones() as usize;
        let b = (self.first_petals(usize::MAX) & bits).count_ones() as usize;
        match (c, b) {
            (1, 0) => self.first_petals(1),
            (c, 0) => self.first_petals(1) | self.upper_stem(c - 1),
            (0, b) => self.first_petals(b),
            (c, 1) => self.first_petals(1) | self.upper_stem(c),
            (c, b) => self.upper_stem(c) | self.first_petals(b),
        }
    }
}

/// Union-of-chains labelling: each chain's points from the bottom up.
fn chain_image(chains: &[Vec<usize>], bits: u64) -> u64 {
    let mut sizes: Vec<usize> = chains
        .iter()
        .map(|c| c.iter().filter(|&&i| bits >> i & 1 == 1).count())
        .filter(|&s| s > 0)
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes.iter().zip(chains).fold(0, |acc, (&s, chain)| {
        chain.iter().take(s).fold(acc, |acc, &i| acc | 1 << i)
    })
}

/// Builds `g` for a sub-representable finite poset.
pub fn build_g(p: &Poset) -> Result<SubRepMap, ConstructError> {
    if p.len() > BUILD_LIMIT {
        return Err(ConstructError::TooLarge {
            size: p.len(),
            limit: BUILD_LIMIT,
        });
    }
    let verdict = classify_finite(p)?;
    let n = p.len();
    let image: alloc::boxed::Box<dyn Fn(u64) -> u64> = match (&verdict.kind, &verdict.witness) {
        (VerdictKind::Flower, Some(Witness::Center(x))) => {
            let labels = FlowerLabels::new(p, *x);
            alloc::boxed::Box::new(move |bits| labels.image(bits))
        }
        (VerdictKind::CoFlower, Some(Witness::Center(x))) => {
            let labels = FlowerLabels::new(&p.dual(), *x);
            alloc::boxed::Box::new(move |bits| labels.image(bits))
        }
        (VerdictKind::UnionOfChains, Some(Witness::Chains(masks))) => {
            let chains: Vec<Vec<usize>> = masks
                .iter()
                .map(|m| {
                    let mut c: Vec<usize> = m.iter().collect();
                    c.sort_by_key(|&i| p.down_bits(i).count_ones());
                    c
                })
                .collect();
            alloc::boxed::Box::new(move |bits| chain_image(&chains, bits))
        }
        _ => return Err(ConstructError::NotSubRepresentable(verdict)),
    };
    let table = (1..1u64 << n)
        .map(|bits| {
            let s = p.mask(bits).expect("in range");
            let g = p.mask(image(bits)).expect("in range");
            (s, g)
        })
        .collect();
    Ok(SubRepMap::new(p.clone(), table))
}

/// Every violation of the two defining conditions, over all ordered pairs of
/// nonempty subsets, sorted by masks.
pub fn verify_subrep(p: &Poset, g: &SubRepMap) -> Result<Vec<Violation>, ConstructError> {
    let n = p.len();
    if n > VERIFY_LIMIT {
        return Err(ConstructError::TooLarge {
            size: n,
            limit: VERIFY_LIMIT,
        });
    }
    let total = 1u64 << n;
    let mut images = alloc::vec![0u64; total as usize];
    for bits in 1..total {
        let s = p.mask(bits).expect("in range");
        match g.get(s) {
            Some(t) if !t.is_empty() && t.parent_len() == n => images[bits as usize] = t.bits(),
            _ => return Err(ConstructError::PartialMap(bits)),
        }
    }
    let classes = SubsetClasses::new(p);
    let mask = |bits: u64| p.mask(bits).expect("in range");
    let mut out = Vec::new();
    for s in 1..total {
        let gs = images[s as usize];
        if classes.class(s) != classes.class(gs) {
            out.push(Violation {
                first: mask(s),
                second: mask(gs),
                condition: Condition::Equivalence,
            });
        }
        let cs = classes.class(s);
        for t in 1..total {
            if s == t {
                continue;
            }
            let gt = images[t as usize];
            let embeds = classes.embeds[cs][classes.class(t)];
            if embeds != (gs & !gt == 0) {
                out.push(Violation {
                    first: mask(s),
                    second: mask(t),
                    condition: Condition::Inclusion,
                });
            }
        }
    }
    Ok(out)
}
