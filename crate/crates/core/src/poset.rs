//! Finite strict partial orders stored as bitset rows.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest poset the bitset representation can hold.
pub const MAX_ELEMENTS: usize = 64;

/// Largest poset accepted by [`Poset::canonical_code`].
pub const CANONICAL_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("poset is empty")]
    EmptyPoset,
    #[error("poset has {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("relation is not a strict partial order ({0})")]
    NotAnOrder(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

pub(crate) fn low_bits(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

pub(crate) fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// A subset of the elements of some parent poset, as a bitmask over its
/// element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    len: u8,
    bits: u64,
}

impl SubsetMask {
    /// Returns `None` when `bits` mentions an index `>= len`.
    pub fn new(bits: u64, len: usize) -> Option<Self> {
        if len > MAX_ELEMENTS || bits & !low_bits(len) != 0 {
            return None;
        }
        Some(SubsetMask {
            len: len as u8,
            bits,
        })
    }

    pub fn empty(len: usize) -> Self {
        Self::new(0, len).expect("parent too large")
    }

    pub fn full(len: usize) -> Self {
        Self::new(low_bits(len), len).expect("parent too large")
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, len: usize) -> Option<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i >= len {
                return None;
            }
            bits |= 1 << i;
        }
        Self::new(bits, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the parent poset.
    pub fn parent_len(&self) -> usize {
        self.len as usize
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.bits >> i & 1 == 1
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask {
            len: self.len.max(other.len),
            bits: self.bits | other.bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bit_indices(self.bits)
    }
}

/// Order-independent key for [`Poset::canonical_code`]; equal codes mean
/// isomorphic posets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of elements of the encoded poset.
    pub fn size(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds a poset (elements named `1..=n`) from a code.
    pub fn decode(&self) -> Poset {
        let n = self.size();
        let bits = unpack_bits(&self.0[1..], n * n.saturating_sub(1));
        let mut up = alloc::vec![0u64; n];
        let mut pos = 0;
        for k in 1..n {
            for j in 0..k {
                if bits[pos] == 1 {
                    up[j] |= 1 << k;
                }
                if bits[pos + 1] == 1 {
                    up[k] |= 1 << j;
                }
                pos += 2;
            }
        }
        Poset::from_strict_order(numbered_names(n), up).expect("canonical code encodes an order")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{:02x}", b)?;
        }
        Ok(())
    }
}

fn pack_bits(bits: &[u8]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (b << (7 - i)))
        })
        .collect()
}

fn unpack_bits(bytes: &[u8], count: usize) -> Vec<u8> {
    (0..count)
        .map(|i| (bytes[i / 8] >> (7 - i % 8)) & 1)
        .collect()
}

pub(crate) fn numbered_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A finite strict partial order on named elements.
///
/// `up[i]` holds the elements strictly above `i`, `down[i]` those strictly
/// below. Both are kept transitively closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Poset {
    /// Builds a poset from declared elements and cover pairs `(lower, upper)`,
    /// taking the transitive closure.
    pub fn from_covers<N, S>(names: N, covers: &[(S, S)]) -> Result<Self, PosetError>
    where
        N: IntoIterator,
        N::Item: Into<String>,
        S: AsRef<str>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = index_names(&names)?;
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            pairs.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
        }
        Self::from_index_covers(names, &pairs)
    }

    /// Like [`Poset::from_covers`] with covers given by element index.
    pub fn from_index_covers(
        names: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let n = names.len();
        index_names(&names)?;
        let mut up = alloc::vec![0u64; n];
        for &(lo, hi) in covers {
            if lo >= n {
                return Err(PosetError::UnknownElement(lo.to_string()));
            }
            if hi >= n {
                return Err(PosetError::UnknownElement(hi.to_string()));
            }
            up[lo] |= 1 << hi;
        }
        // Warshall over bitset rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| up[i] >> i & 1 == 1) {
            return Err(PosetError::CycleDetected(names[i].clone()));
        }
        Ok(Self::from_closed_rows(names, up))
    }

    /// Builds a poset from already-closed "strictly above" rows, validating
    /// irreflexivity, antisymmetry and transitivity.
    pub fn from_strict_order(names: Vec<String>, up: Vec<u64>) -> Result<Self, PosetError> {
        index_names(&names)?;
        if up.len() != names.len() {
            return Err(PosetError::NotAnOrder(
                "row count differs from element count",
            ));
        }
        let n = names.len();
        if up.iter().any(|&row| row & !low_bits(n) != 0) {
            return Err(PosetError::NotAnOrder("row mentions unknown index"));
        }
        let poset = Self::from_closed_rows(names, up);
        poset.validate()?;
        Ok(poset)
    }

    fn from_closed_rows(names: Vec<String>, up: Vec<u64>) -> Self {
        let n = names.len();
        let mut down = alloc::vec![0u64; n];
        for (i, &row) in up.iter().enumerate() {
            for j in bit_indices(row) {
                down[j] |= 1 << i;
            }
        }
        Poset { names, up, down }
    }

    /// The chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_index_covers(numbered_names(n), &covers).expect("chain is an order")
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        Self::from_index_covers(numbered_names(n), &[]).expect("antichain is an order")
    }

    /// Checks the order axioms and internal consistency.
    pub fn validate(&self) -> Result<(), PosetError> {
        let n = self.len();
        index_names(&self.names)?;
        for i in 0..n {
            if self.up[i] >> i & 1 == 1 {
                return Err(PosetError::NotAnOrder("not irreflexive"));
            }
            for j in bit_indices(self.up[i]) {
                if self.up[j] >> i & 1 == 1 {
                    return Err(PosetError::NotAnOrder("not antisymmetric"));
                }
                if self.up[j] & !self.up[i] != 0 {
                    return Err(PosetError::NotAnOrder("not transitive"));
                }
                if self.down[j] >> i & 1 == 0 {
                    return Err(PosetError::NotAnOrder("down rows inconsistent"));
                }
            }
            if self.down[i].count_ones() as usize
                != (0..n).filter(|&k| self.up[k] >> i & 1 == 1).count()
            {
                return Err(PosetError::NotAnOrder("down rows inconsistent"));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn element(&self, name: &str) -> Result<usize, PosetError> {
        self.index_of(name)
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    /// `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    pub fn up_bits(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub fn down_bits(&self, i: usize) -> u64 {
        self.down[i]
    }

    pub fn all(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn mask(&self, bits: u64) -> Option<SubsetMask> {
        SubsetMask::new(bits, self.len())
    }

    /// `U(x)` (strictly above) or `D(x)` (strictly below) by index.
    pub fn cone(&self, i: usize, direction: Direction) -> SubsetMask {
        let bits = match direction {
            Direction::Up => self.up[i],
            Direction::Down => self.down[i],
        };
        SubsetMask {
            len: self.len() as u8,
            bits,
        }
    }

    /// `U(x)` or `D(x)` by element name.
    pub fn strict_cone(&self, x: &str, direction: Direction) -> Result<SubsetMask, PosetError> {
        Ok(self.cone(self.element(x)?, direction))
    }

    pub fn names_of(&self, mask: SubsetMask) -> Vec<&str> {
        mask.iter().map(|i| self.name(i)).collect()
    }

    pub fn mask_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<SubsetMask, PosetError> {
        let mut bits = 0u64;
        for n in names {
            bits |= 1 << self.element(n.as_ref())?;
        }
        Ok(SubsetMask {
            len: self.len() as u8,
            bits,
        })
    }

    pub fn is_chain(&self, bits: u64) -> bool {
        bit_indices(bits).all(|i| bits & !(self.up[i] | self.down[i] | 1 << i) == 0)
    }

    pub fn is_antichain(&self, bits: u64) -> bool {
        bit_indices(bits).all(|i| self.up[i] & bits == 0)
    }

    /// The induced sub-order on `mask`, keeping names and relative index order.
    pub fn induced(&self, mask: SubsetMask) -> Poset {
        let members: Vec<usize> = mask.iter().collect();
        let names = members.iter().map(|&i| self.names[i].clone()).collect();
        let up = members
            .iter()
            .map(|&i| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.lt(i, j))
                    .fold(0u64, |acc, (pos, _)| acc | 1 << pos)
            })
            .collect();
        Self::from_closed_rows(names, up)
    }

    /// Reverses the order, keeping names and indices.
    pub fn dual(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in bit_indices(self.up[i]) {
                if self.up[i] & self.down[j] == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(), i));
        order
    }

    /// For each element, the size of the longest chain whose top it is.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = alloc::vec![0usize; self.len()];
        for i in self.linear_extension() {
            depth[i] = 1 + bit_indices(self.down[i])
                .map(|j| depth[j])
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// For each element, the size of the longest chain whose bottom it is.
    pub fn rises(&self) -> Vec<usize> {
        self.dual().depths()
    }

    pub fn height(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        let comparable: Vec<u64> = (0..self.len())
            .map(|i| self.up[i] | self.down[i] | 1 << i)
            .collect();
        let mut best = 0;
        max_antichain(&comparable, low_bits(self.len()), 0, &mut best);
        best
    }

    /// Largest chain and antichain sizes.
    pub fn height_width(&self) -> Result<(usize, usize), PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        Ok((self.height(), self.width()))
    }

    /// Connected components of the comparability graph, as masks, in order
    /// of least element index.
    pub fn component_masks(&self) -> Vec<SubsetMask> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for i in bit_indices(frontier) {
                    next |= self.up[i] | self.down[i];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(SubsetMask {
                len: self.len() as u8,
                bits: comp,
            });
        }
        out
    }

    /// Components with induced order: larger first, then by canonical code,
    /// then by least original index.
    pub fn components(&self) -> Vec<Poset> {
        let mut keyed: Vec<_> = self
            .component_masks()
            .into_iter()
            .map(|m| {
                let p = self.induced(m);
                let code = p.canonical_code().ok();
                (
                    core::cmp::Reverse(m.count()),
                    code,
                    m.bits().trailing_zeros(),
                    p,
                )
            })
            .collect();
        keyed.sort_by(|a, b| (&a.0, &a.1, a.2).cmp(&(&b.0, &b.1, b.2)));
        keyed.into_iter().map(|k| k.3).collect()
    }

    /// Minimal relation encoding over all orderings of the elements.
    pub fn canonical_code(&self) -> Result<CanonicalCode, PosetError> {
        if self.len() > CANONICAL_LIMIT {
            return Err(PosetError::TooLarge {
                size: self.len(),
                limit: CANONICAL_LIMIT,
            });
        }
        Ok(self.canonical_code_unbounded())
    }

    pub(crate) fn canonical_code_unbounded(&self) -> CanonicalCode {
        let n = self.len();
        let mut search = CanonSearch {
            poset: self,
            order: Vec::with_capacity(n),
            bits: Vec::with_capacity(n * n),
            best: None,
        };
        search.descend(0);
        let mut bytes = alloc::vec![n as u8];
        bytes.extend(pack_bits(&search.best.unwrap_or_default()));
        CanonicalCode(bytes)
    }

    /// Whether the two posets are order-isomorphic.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len() && crate::embed::embeds(self, other)
    }

    /// Copy of this poset with elements renamed.
    pub fn relabeled(&self, names: Vec<String>) -> Result<Poset, PosetError> {
        if names.len() != self.len() {
            return Err(PosetError::NotAnOrder(
                "name count differs from element count",
            ));
        }
        index_names(&names)?;
        Ok(Poset {
            names,
            up: self.up.clone(),
            down: self.down.clone(),
        })
    }

    /// Copy with elements reordered: new index `k` is old index `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let mut inverse = alloc::vec![0usize; perm.len()];
        for (k, &old) in perm.iter().enumerate() {
            inverse[old] = k;
        }
        let names = perm.iter().map(|&old| self.names[old].clone()).collect();
        let up = perm
            .iter()
            .map(|&old| bit_indices(self.up[old]).fold(0u64, |acc, j| acc | 1 << inverse[j]))
            .collect();
        Self::from_closed_rows(names, up)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, name) in self.names.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", name)?;
        }
        write!(f, " |")?;
        for (k, (lo, hi)) in self.covers().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {} < {}", self.names[lo], self.names[hi])?;
        }
        write!(f, "}}")
    }
}

fn index_names(names: &[String]) -> Result<BTreeMap<&str, usize>, PosetError> {
    if names.len() > MAX_ELEMENTS {
        return Err(PosetError::TooLarge {
            size: names.len(),
            limit: MAX_ELEMENTS,
        });
    }
    let mut index = BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(PosetError::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn max_antichain(comparable: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = size;
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    max_antichain(comparable, candidates & !comparable[v], size + 1, best);
    max_antichain(comparable, candidates & !(1 << v), size, best);
}

struct CanonSearch<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    bits: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl CanonSearch<'_> {
    fn block(&self, candidate: usize) -> Vec<u8> {
        let mut block = Vec::with_capacity(2 * self.order.len());
        for &prev in &self.order {
            block.push(self.poset.lt(prev, candidate) as u8);
            block.push(self.poset.lt(candidate, prev) as u8);
        }
        block
    }

    fn descend(&mut self, used: u64) {
        let n = self.poset.len();
        if self.order.len() == n {
            if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        // Twins (same strict up- and down-sets) are interchangeable by an
        // automorphism, so only the least unused one of each class is tried.
        let mut seen_profiles: BTreeSet<(u64, u64)> = BTreeSet::new();
        let mut candidates: Vec<(Vec<u8>, usize)> = Vec::new();
        for c in 0..n {
            if used >> c & 1 == 1 {
                continue;
            }
            if !seen_profiles.insert((self.poset.up[c], self.poset.down[c])) {
                continue;
            }
            candidates.push((self.block(c), c));
        }
        candidates.sort();
        for (block, c) in candidates {
            let start = self.bits.len();
            self.bits.extend_from_slice(&block);
            let prune = match &self.best {
                Some(best) => self.bits.as_slice() > &best[..self.bits.len()],
                None => false,
            };
            if !prune {
                self.order.push(c);
                self.descend(used | 1 << c);
                self.order.pop();
            }
            self.bits.truncate(start);
        }
    }
}
