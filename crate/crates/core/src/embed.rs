//! Order embeddings (`P₁ ↪ P₂`) and the small named patterns.

use alloc::vec::Vec;
use core::fmt;

use crate::poset::{bit_indices, low_bits, Poset, SubsetMask};

/// An injective map from the elements of a source poset into a target poset,
/// stored as `targets[source index] = target index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn new(targets: Vec<usize>) -> Self {
        Embedding(targets)
    }

    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, target_len: usize) -> SubsetMask {
        SubsetMask::from_indices(self.0.iter().copied(), target_len)
            .expect("embedding target out of range")
    }

    /// Re-checks that this is an order embedding of `small` into `big`:
    /// injective, and `x < y` exactly when `f(x) < f(y)`.
    pub fn is_valid(&self, small: &Poset, big: &Poset) -> bool {
        if self.0.len() != small.len() || self.0.iter().any(|&t| t >= big.len()) {
            return false;
        }
        let mut seen = 0u64;
        for &t in &self.0 {
            if seen >> t & 1 == 1 {
                return false;
            }
            seen |= 1 << t;
        }
        (0..small.len())
            .all(|x| (0..small.len()).all(|y| small.lt(x, y) == big.lt(self.0[x], self.0[y])))
    }
}

/// Whether `small` is isomorphic to a subset of `big` under the induced order.
pub fn embeds(small: &Poset, big: &Poset) -> bool {
    find_embedding(small, big).is_some()
}

/// The lexicographically least embedding (by target index, in source index
/// order), if any exists.
pub fn find_embedding(small: &Poset, big: &Poset) -> Option<Embedding> {
    let n = small.len();
    if n > big.len() {
        return None;
    }
    if n == 0 {
        return Some(Embedding(Vec::new()));
    }
    // Admissible filter: an embedding maps strict cones injectively into
    // strict cones and chains onto chains.
    let small_depth = small.depths();
    let small_rise = small.rises();
    let big_depth = big.depths();
    let big_rise = big.rises();
    let admissible: Vec<u64> = (0..n)
        .map(|x| {
            let down = small.down_bits(x).count_ones();
            let up = small.up_bits(x).count_ones();
            (0..big.len())
                .filter(|&t| {
                    big.down_bits(t).count_ones() >= down
                        && big.up_bits(t).count_ones() >= up
                        && big_depth[t] >= small_depth[x]
                        && big_rise[t] >= small_rise[x]
                })
                .fold(0u64, |acc, t| acc | 1 << t)
        })
        .collect();
    if admissible.contains(&0) {
        return None;
    }
    let incomparable: Vec<u64> = (0..big.len())
        .map(|t| low_bits(big.len()) & !(big.up_bits(t) | big.down_bits(t) | 1 << t))
        .collect();
    let mut search = Search {
        small,
        big,
        admissible,
        incomparable,
        map: Vec::with_capacity(n),
    };
    if search.assign(0, 0) {
        Some(Embedding(search.map))
    } else {
        None
    }
}

struct Search<'a> {
    small: &'a Poset,
    big: &'a Poset,
    admissible: Vec<u64>,
    incomparable: Vec<u64>,
    map: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, x: usize, used: u64) -> bool {
        if x == self.small.len() {
            return true;
        }
        let mut allowed = self.admissible[x] & !used;
        for (y, &t) in self.map.iter().enumerate() {
            allowed &= if self.small.lt(y, x) {
                self.big.up_bits(t)
            } else if self.small.lt(x, y) {
                self.big.down_bits(t)
            } else {
                self.incomparable[t]
            };
        }
        for t in bit_indices(allowed) {
            self.map.push(t);
            if self.assign(x + 1, used | 1 << t) {
                return true;
            }
            self.map.pop();
        }
        false
    }
}

/// The small shapes that drive the finite classification.
///
/// Besides the vee, wedge and two-chain-plus-point, this lists the seven
/// four-element posets that are not sub-representable (the diamond is one
/// of them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternKind {
    /// `a < b, a < c`.
    Vee,
    /// `b < a, c < a`.
    Wedge,
    /// `b < a < d, b < c < d`.
    Diamond,
    /// `a < b` plus an isolated `c`.
    TwoChainPlusPoint,
    /// A vee plus an isolated point.
    VeePlusPoint,
    /// A wedge plus an isolated point.
    WedgePlusPoint,
    /// Two minima both below two maxima.
    Crown,
    /// `a < c, b < c, b < d`.
    NShape,
    /// A vee with one arm extended upward: `a < b, a < c < d`.
    LongArmVee,
    /// A wedge with one arm extended downward: `a < b < c, d < c`.
    LongArmWedge,
}

impl PatternKind {
    pub const ALL: [PatternKind; 10] = [
        PatternKind::Vee,
        PatternKind::Wedge,
        PatternKind::Diamond,
        PatternKind::TwoChainPlusPoint,
        PatternKind::VeePlusPoint,
        PatternKind::WedgePlusPoint,
        PatternKind::Crown,
        PatternKind::NShape,
        PatternKind::LongArmVee,
        PatternKind::LongArmWedge,
    ];

    /// The seven four-point obstructions.
    pub const FOUR_POINT_OBSTRUCTIONS: [PatternKind; 7] = [
        PatternKind::WedgePlusPoint,
        PatternKind::VeePlusPoint,
        PatternKind::Crown,
        PatternKind::LongArmWedge,
        PatternKind::LongArmVee,
        PatternKind::Diamond,
        PatternKind::NShape,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Vee => "vee",
            PatternKind::Wedge => "wedge",
            PatternKind::Diamond => "diamond",
            PatternKind::TwoChainPlusPoint => "two-chain-plus-point",
            PatternKind::VeePlusPoint => "vee-plus-point",
            PatternKind::WedgePlusPoint => "wedge-plus-point",
            PatternKind::Crown => "crown",
            PatternKind::NShape => "n-shape",
            PatternKind::LongArmVee => "long-arm-vee",
            PatternKind::LongArmWedge => "long-arm-wedge",
        }
    }

    pub fn poset(self) -> Poset {
        let (names, covers): (&[&str], &[(&str, &str)]) = match self {
            PatternKind::Vee => (&["a", "b", "c"], &[("a", "b"), ("a", "c")]),
            PatternKind::Wedge => (&["a", "b", "c"], &[("b", "a"), ("c", "a")]),
            PatternKind::Diamond => (
                &["a", "b", "c", "d"],
                &[("b", "a"), ("b", "c"), ("a", "d"), ("c", "d")],
            ),
            PatternKind::TwoChainPlusPoint => (&["a", "b", "c"], &[("a", "b")]),
            PatternKind::VeePlusPoint => (&["a", "b", "c", "d"], &[("a", "b"), ("a", "c")]),
            PatternKind::WedgePlusPoint => (&["a", "b", "c", "d"], &[("a", "c"), ("b", "c")]),
            PatternKind::Crown => (
                &["a", "b", "c", "d"],
                &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
            ),
            PatternKind::NShape => (&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]),
            PatternKind::LongArmVee => {
                (&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("c", "d")])
            }
            PatternKind::LongArmWedge => {
                (&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("d", "c")])
            }
        };
        Poset::from_covers(names.iter().copied(), covers).expect("pattern is a valid poset")
    }

    /// The seven four-point obstructions, ordered by canonical code.
    pub fn four_point_obstructions_by_code() -> Vec<PatternKind> {
        let mut kinds: Vec<_> = Self::FOUR_POINT_OBSTRUCTIONS
            .iter()
            .map(|&k| (k.poset().canonical_code().expect("four points"), k))
            .collect();
        kinds.sort();
        kinds.into_iter().map(|(_, k)| k).collect()
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn contains_pattern(p: &Poset, kind: PatternKind) -> bool {
    embeds(&kind.poset(), p)
}

pub fn find_pattern(p: &Poset, kind: PatternKind) -> Option<Embedding> {
    find_embedding(&kind.poset(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fig3() -> Poset {
        Poset::from_covers(["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("4", "3")]).unwrap()
    }

    fn names(p: &Poset, e: &Embedding) -> Vec<alloc::string::String> {
        let mut v: Vec<_> = e.targets().iter().map(|&t| p.name(t).into()).collect();
        v.sort();
        v
    }

    /// Every injection, checked directly against the definition.
    fn brute_force_embeds(small: &Poset, big: &Poset) -> bool {
        fn go(small: &Poset, big: &Poset, map: &mut Vec<usize>) -> bool {
            if map.len() == small.len() {
                return Embedding(map.clone()).is_valid(small, big);
            }
            for t in 0..big.len() {
                if !map.contains(&t) {
                    map.push(t);
                    if go(small, big, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        go(small, big, &mut Vec::new())
    }

    #[test]
    fn wedge_into_fig3_has_two_witness_sets() {
        let p = fig3();
        let wedge = PatternKind::Wedge.poset();
        assert!(embeds(&wedge, &p));
        let mut images = vec![];
        for bits in 1u64..16 {
            let m = p.mask(bits).unwrap();
            if m.count() == 3 && p.induced(m).is_isomorphic(&wedge) {
                images.push(p.names_of(m));
            }
        }
        assert_eq!(images, vec![vec!["1", "3", "4"], vec!["2", "3", "4"]]);
        let e = find_embedding(&wedge, &p).unwrap();
        assert!(e.is_valid(&wedge, &p));
    }

    #[test]
    fn chain_does_not_embed_in_antichain() {
        assert!(!embeds(&Poset::chain(2), &Poset::antichain(2)));
        assert!(embeds(&Poset::antichain(0), &Poset::antichain(0)));
    }

    #[test]
    fn vee_into_diamond_uses_bottom_and_middles() {
        let d = PatternKind::Diamond.poset();
        let e = find_embedding(&PatternKind::Vee.poset(), &d).unwrap();
        assert_eq!(names(&d, &e), vec!["a", "b", "c"]);
        assert!(brute_force_embeds(&PatternKind::Vee.poset(), &d));
    }

    #[test]
    fn least_witnesses() {
        let vee = PatternKind::Vee.poset();
        assert_eq!(find_embedding(&vee, &vee).unwrap().targets(), &[0, 1, 2]);
        let p = fig3();
        let e = find_embedding(&Poset::chain(3), &p).unwrap();
        assert_eq!(names(&p, &e), vec!["1", "2", "3"]);
        assert!(find_embedding(&PatternKind::Diamond.poset(), &vee).is_none());
    }

    #[test]
    fn pattern_containment() {
        let d = PatternKind::Diamond.poset();
        assert!(contains_pattern(&d, PatternKind::Vee));
        assert!(contains_pattern(&d, PatternKind::Wedge));
        assert!(!contains_pattern(&fig3(), PatternKind::Diamond));
        assert!(!contains_pattern(&Poset::chain(5), PatternKind::Vee));
        assert!(contains_pattern(&fig3(), PatternKind::LongArmWedge));
    }

    #[test]
    fn wedge_is_dual_of_vee() {
        assert!(PatternKind::Wedge
            .poset()
            .is_isomorphic(&PatternKind::Vee.poset().dual()));
        assert!(PatternKind::LongArmWedge
            .poset()
            .is_isomorphic(&PatternKind::LongArmVee.poset().dual()));
    }

    #[test]
    fn obstructions_are_pairwise_distinct() {
        let mut codes: Vec<_> = PatternKind::FOUR_POINT_OBSTRUCTIONS
            .iter()
            .map(|k| k.poset().canonical_code().unwrap())
            .collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 7);
        assert_eq!(PatternKind::four_point_obstructions_by_code().len(), 7);
    }

    #[test]
    fn invalid_embeddings_are_rejected() {
        let vee = PatternKind::Vee.poset();
        let d = PatternKind::Diamond.poset();
        // a ↦ b (bottom), b ↦ a, c ↦ d: d is above a, not incomparable
        assert!(!Embedding::new(vec![1, 0, 3]).is_valid(&vee, &d));
        assert!(!Embedding::new(vec![1, 1, 2]).is_valid(&vee, &d));
        assert!(!Embedding::new(vec![1, 0]).is_valid(&vee, &d));
    }
}
