//! Sub-representability decided straight from the definition, without the
//! flower / co-flower / union-of-chains characterization.
//!
//! For finite posets, condition (ii) forces `g(S) ≅ S`, and condition (i)
//! then forces `g` to be constant on isomorphism classes of subsets. The
//! search therefore picks one realizing subset per class, smallest classes
//! first, and requires `S ↪ T` exactly when the chosen sets are nested.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::classes::SubsetClasses;
use crate::classify::{classify_finite, Verdict};
use crate::construct::SubRepMap;
use crate::poset::{numbered_names, CanonicalCode, Poset};

/// Default largest poset [`oracle_subrep`] searches.
pub const ORACLE_LIMIT: usize = 6;

/// Largest size [`enumerate_posets`] and [`survey`] accept.
pub const ENUMERATE_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("poset has {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("size must be positive")]
    EmptyPoset,
}

/// A witness map if one exists; guarded at [`ORACLE_LIMIT`] elements.
pub fn oracle_subrep(p: &Poset) -> Result<Option<SubRepMap>, OracleError> {
    oracle_subrep_with_limit(p, ORACLE_LIMIT)
}

/// [`oracle_subrep`] with a caller-chosen size guard (at most 20).
pub fn oracle_subrep_with_limit(p: &Poset, limit: usize) -> Result<Option<SubRepMap>, OracleError> {
    let limit = limit.min(20);
    if p.len() > limit {
        return Err(OracleError::TooLarge {
            size: p.len(),
            limit,
        });
    }
    if p.is_empty() {
        return Err(OracleError::EmptyPoset);
    }
    let classes = SubsetClasses::new(p);
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| (classes.sizes[c], c));
    let domains: Vec<Vec<u64>> = order.iter().map(|&c| classes.members[c].clone()).collect();
    let mut search = ClassSearch {
        classes: &classes,
        order: &order,
        chosen: Vec::with_capacity(order.len()),
    };
    if !search.extend(domains) {
        return Ok(None);
    }
    let mut rep = alloc::vec![0u64; classes.len()];
    for (&c, &r) in order.iter().zip(&search.chosen) {
        rep[c] = r;
    }
    let table = (1..1u64 << p.len())
        .map(|bits| {
            let g = rep[classes.class(bits)];
            (
                p.mask(bits).expect("in range"),
                p.mask(g).expect("in range"),
            )
        })
        .collect();
    Ok(Some(SubRepMap::new(p.clone(), table)))
}

struct ClassSearch<'a> {
    classes: &'a SubsetClasses,
    order: &'a [usize],
    chosen: Vec<u64>,
}

impl ClassSearch<'_> {
    fn consistent(&self, c: usize, r: u64, d: usize, q: u64) -> bool {
        self.classes.embeds[c][d] == (r & !q == 0) && self.classes.embeds[d][c] == (q & !r == 0)
    }

    /// `domains[i]` lists the remaining candidates for `order[chosen.len() + i]`.
    fn extend(&mut self, domains: Vec<Vec<u64>>) -> bool {
        let Some((first, rest)) = domains.split_first() else {
            return true;
        };
        let depth = self.chosen.len();
        let c = self.order[depth];
        for &r in first {
            // forward check: prune later domains against this choice
            let mut pruned = Vec::with_capacity(rest.len());
            let mut dead = false;
            for (offset, dom) in rest.iter().enumerate() {
                let d = self.order[depth + 1 + offset];
                let kept: Vec<u64> = dom
                    .iter()
                    .copied()
                    .filter(|&q| self.consistent(c, r, d, q))
                    .collect();
                if kept.is_empty() {
                    dead = true;
                    break;
                }
                pruned.push(kept);
            }
            if dead {
                continue;
            }
            self.chosen.push(r);
            if self.extend(pruned) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// All posets on `n` elements up to isomorphism, in canonical-code order,
/// with elements named `1..=n`.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyPoset);
    }
    if n > ENUMERATE_LIMIT {
        return Err(OracleError::TooLarge {
            size: n,
            limit: ENUMERATE_LIMIT,
        });
    }
    // every poset has a natural labelling, so relations with i < j suffice
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut codes = BTreeSet::new();
    for choice in 0u64..1 << pairs.len() {
        let mut up = alloc::vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if choice >> k & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let transitive =
            (0..n).all(|i| crate::poset::bit_indices(up[i]).all(|j| up[j] & !up[i] == 0));
        if !transitive {
            continue;
        }
        let p = Poset::from_strict_order(numbered_names(n), up).expect("transitive and acyclic");
        codes.insert(p.canonical_code().expect("small"));
    }
    Ok(codes.iter().map(CanonicalCode::decode).collect())
}

/// One isomorphism class in a [`survey`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub code: CanonicalCode,
    pub poset: Poset,
    pub classifier: Verdict,
    pub oracle: bool,
}

impl SurveyRow {
    pub fn agrees(&self) -> bool {
        self.classifier.sub_representable == self.oracle
    }
}

/// Classifier and oracle verdicts for every poset on `n` elements.
pub fn survey(n: usize) -> Result<Vec<SurveyRow>, OracleError> {
    enumerate_posets(n)?
        .into_iter()
        .map(|poset| {
            let classifier = classify_finite(&poset).expect("nonempty");
            let oracle = oracle_subrep(&poset)?.is_some();
            Ok(SurveyRow {
                code: poset.canonical_code().expect("small"),
                poset,
                classifier,
                oracle,
            })
        })
        .collect()
}

/// Oracle verdict for every class up to `n` elements, keyed by canonical code.
pub fn oracle_table(n: usize) -> Result<BTreeMap<CanonicalCode, bool>, OracleError> {
    let mut out = BTreeMap::new();
    for k in 1..=n {
        for p in enumerate_posets(k)? {
            let verdict = oracle_subrep(&p)?.is_some();
            out.insert(p.canonical_code().expect("small"), verdict);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::verify_subrep;
    use crate::embed::{contains_pattern, embeds, PatternKind};

    /// Counts strict orders by checking every relation on `n` points.
    fn brute_count(n: usize) -> usize {
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut codes = BTreeSet::new();
        for choice in 0u64..1 << cells.len() {
            let mut up = alloc::vec![0u64; n];
            for (k, &(i, j)) in cells.iter().enumerate() {
                if choice >> k & 1 == 1 {
                    up[i] |= 1 << j;
                }
            }
            let order = (0..n).all(|i| {
                (0..n).all(|j| {
                    let ij = up[i] >> j & 1 == 1;
                    let ji = up[j] >> i & 1 == 1;
                    !(ij && ji) && (!ij || up[j] & !up[i] == 0)
                })
            });
            if order {
                let p = Poset::from_strict_order(numbered_names(n), up).unwrap();
                codes.insert(p.canonical_code().unwrap());
            }
        }
        codes.len()
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 16]);
        for n in 1..=4 {
            assert_eq!(enumerate_posets(n).unwrap().len(), brute_count(n));
        }
        assert!(matches!(
            enumerate_posets(6),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_subrep(&PatternKind::Diamond.poset())
            .unwrap()
            .is_none());
        assert!(oracle_subrep(&PatternKind::LongArmWedge.poset())
            .unwrap()
            .is_none());
        let vee = PatternKind::Vee.poset();
        let g = oracle_subrep(&vee).unwrap().unwrap();
        assert!(verify_subrep(&vee, &g).unwrap().is_empty());
        assert!(matches!(
            oracle_subrep(&Poset::antichain(7)),
            Err(OracleError::TooLarge { size: 7, limit: 6 })
        ));
        assert!(oracle_subrep_with_limit(&Poset::antichain(7), 7)
            .unwrap()
            .is_some());
    }

    #[test]
    fn two_point_posets_are_positive() {
        assert!(survey(2).unwrap().iter().all(|r| r.oracle && r.agrees()));
    }

    #[test]
    fn four_point_survey() {
        let rows = survey(4).unwrap();
        assert_eq!(rows.len(), 16);
        assert!(rows.iter().all(SurveyRow::agrees));
        assert_eq!(rows.iter().filter(|r| r.oracle).count(), 9);
        let negative: BTreeSet<_> = rows
            .iter()
            .filter(|r| !r.oracle)
            .map(|r| r.code.clone())
            .collect();
        let expected: BTreeSet<_> = PatternKind::FOUR_POINT_OBSTRUCTIONS
            .iter()
            .map(|k| k.poset().canonical_code().unwrap())
            .collect();
        assert_eq!(negative, expected);
    }

    /// Equal-size posets that embed into each other are isomorphic.
    #[test]
    fn mutual_embedding_forces_isomorphism() {
        for n in 1..=4 {
            let all = enumerate_posets(n).unwrap();
            for a in &all {
                for b in &all {
                    if embeds(a, b) && embeds(b, a) {
                        assert_eq!(a.canonical_code(), b.canonical_code());
                    }
                }
            }
        }
    }

    #[test]
    fn vee_and_wedge_block_small_posets() {
        for n in 1..=4 {
            for p in enumerate_posets(n).unwrap() {
                if contains_pattern(&p, PatternKind::Vee)
                    && contains_pattern(&p, PatternKind::Wedge)
                {
                    assert!(oracle_subrep(&p).unwrap().is_none());
                }
            }
        }
    }
}
