//! Isomorphism classes of the nonempty subsets of a small poset.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::embed::embeds;
use crate::poset::Poset;

pub(crate) const NO_CLASS: usize = usize::MAX;

pub(crate) struct SubsetClasses {
    /// Class of each mask, indexed by its bits; `NO_CLASS` for the empty set.
    pub class_of: Vec<usize>,
    /// Masks realizing each class, ascending.
    pub members: Vec<Vec<u64>>,
    pub sizes: Vec<usize>,
    /// `embeds[c][d]`: class `c` embeds into class `d`.
    pub embeds: Vec<Vec<bool>>,
}

/// Size plus the sorted (down, up, depth, rise) rows.
type Profile = (usize, Vec<(u32, u32, usize, usize)>);

/// Cheap isomorphism invariant used to bucket subsets before exact tests.
fn profile(p: &Poset) -> Profile {
    let depths = p.depths();
    let rises = p.rises();
    let mut rows: Vec<_> = (0..p.len())
        .map(|i| {
            (
                p.down_bits(i).count_ones(),
                p.up_bits(i).count_ones(),
                depths[i],
                rises[i],
            )
        })
        .collect();
    rows.sort_unstable();
    (p.len(), rows)
}

impl SubsetClasses {
    /// Callers bound `p.len()`; the table has `2^n` entries.
    pub fn new(p: &Poset) -> Self {
        let n = p.len();
        let total = 1usize << n;
        let mut class_of = alloc::vec![NO_CLASS; total];
        let mut members: Vec<Vec<u64>> = Vec::new();
        let mut sizes = Vec::new();
        let mut reps: Vec<Poset> = Vec::new();
        let mut buckets: BTreeMap<Profile, Vec<usize>> = BTreeMap::new();
        for bits in 1..total as u64 {
            let sub = p.induced(p.mask(bits).expect("in range"));
            let bucket = buckets.entry(profile(&sub)).or_default();
            let found = bucket
                .iter()
                .copied()
                .find(|&c| sub.is_isomorphic(&reps[c]));
            let class = match found {
                Some(c) => c,
                None => {
                    let c = reps.len();
                    bucket.push(c);
                    sizes.push(sub.len());
                    reps.push(sub);
                    members.push(Vec::new());
                    c
                }
            };
            class_of[bits as usize] = class;
            members[class].push(bits);
        }
        let k = reps.len();
        let mut table = alloc::vec![alloc::vec![false; k]; k];
        for c in 0..k {
            for d in 0..k {
                table[c][d] = c == d || (sizes[c] < sizes[d] && embeds(&reps[c], &reps[d]));
            }
        }
        SubsetClasses {
            class_of,
            members,
            sizes,
            embeds: table,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn class(&self, bits: u64) -> usize {
        self.class_of[bits as usize]
    }

    #[allow(dead_code)]
    pub fn subset_embeds(&self, a: u64, b: u64) -> bool {
        self.embeds[self.class(a)][self.class(b)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_has_six_classes() {
        let p = Poset::from_covers(["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("2", "4")])
            .unwrap();
        let classes = SubsetClasses::new(&p);
        assert_eq!(classes.len(), 6);
        // {3} and {4} are both singletons
        assert_eq!(classes.class(0b0100), classes.class(0b1000));
        assert!(classes.subset_embeds(0b0001, 0b1111));
        assert!(!classes.subset_embeds(0b1100, 0b0111));
    }
}
