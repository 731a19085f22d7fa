//! Pinboards: finite families of `(height, frequency)` columns whose poset is
//! a disjoint union of well-ordered chains.
//!
//! A [`SimplePinboard`] `{(β, n), (m, γ)}` is the host every pinboard poset
//! sits in. Subsets of the host are described by normalized column lists
//! ([`PinSubset`]); [`theta`] assigns their columns, tallest first, to the
//! host's columns in a fixed order, and [`theta_subset`] compares two such
//! assignments column by column. [`pin_embeds`] decides embeddability
//! directly from cumulative column counts.
//!
//! Column positions run over the ordinal `n ⊕ (⊕_m γ)`; only its initial
//! segment structure is used, so positions are tracked as ordinal prefix sums
//! of run lengths.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::ordinal::{Cardinal, OrdinalExpr};
use crate::poset::{Poset, MAX_ELEMENTS};

/// A column list entry: `(height, frequency)`.
pub type Column = (OrdinalExpr, Cardinal);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PinboardError {
    #[error("pair {index}: height and frequency are both infinite")]
    BothInfinite { index: usize },
    #[error("pair {index}: height must be positive")]
    ZeroHeight { index: usize },
    #[error("pair {index}: frequency must be positive")]
    ZeroFrequency { index: usize },
    #[error("pinboard has an infinite height or frequency and cannot be expanded")]
    InfinitePinboard,
    #[error("expanded poset has {size} elements, limit is {limit}")]
    TooLarge { size: u64, limit: usize },
    #[error("subset does not fit the host: {0}")]
    DoesNotFit(&'static str),
    #[error("operands belong to different hosts")]
    HostMismatch,
    #[error("invalid simple pinboard: {0}")]
    InvalidHost(&'static str),
}

/// Validates raw pairs, merges equal heights by cardinal sum, and sorts by
/// height, tallest first.
fn merge_columns<I>(raw: I, forbid_both_infinite: bool) -> Result<Vec<Column>, PinboardError>
where
    I: IntoIterator<Item = Column>,
{
    let mut out: Vec<Column> = Vec::new();
    for (index, (height, freq)) in raw.into_iter().enumerate() {
        if height.is_zero() {
            return Err(PinboardError::ZeroHeight { index });
        }
        if freq.is_zero() {
            return Err(PinboardError::ZeroFrequency { index });
        }
        if forbid_both_infinite && !height.is_finite() && !freq.is_finite() {
            return Err(PinboardError::BothInfinite { index });
        }
        match out.iter_mut().find(|(h, _)| *h == height) {
            Some((_, f)) => *f = f.sum(freq),
            None => out.push((height, freq)),
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// Whether the columns of `small` inject into columns of `big` of at least
/// the same height.
///
/// Every chain lands in a single column and distinct columns need distinct
/// targets, so this is a Hall condition over height thresholds: for each
/// height `h` of `small`, the number of its columns of height `≥ h` must not
/// exceed the number of such columns in `big`. Both lists are sorted tallest
/// first.
pub fn columns_embed(small: &[Column], big: &[Column]) -> bool {
    small.iter().all(|(h, _)| {
        let need: Cardinal = small.iter().filter(|(g, _)| g >= h).map(|c| c.1).sum();
        let have: Cardinal = big.iter().filter(|(g, _)| g >= h).map(|c| c.1).sum();
        need <= have
    })
}

fn expand(columns: &[Column]) -> Result<Poset, PinboardError> {
    let mut size: u64 = 0;
    let mut finite = Vec::with_capacity(columns.len());
    for (h, f) in columns {
        let (Some(h), Cardinal::Fin(f)) = (h.finite_value(), *f) else {
            return Err(PinboardError::InfinitePinboard);
        };
        size = size.saturating_add(h.saturating_mul(f));
        finite.push((h, f));
    }
    if size > MAX_ELEMENTS as u64 {
        return Err(PinboardError::TooLarge {
            size,
            limit: MAX_ELEMENTS,
        });
    }
    let mut names = Vec::new();
    let mut covers = Vec::new();
    for (i, &(h, f)) in finite.iter().enumerate() {
        for j in 0..f {
            for level in 0..h {
                if level > 0 {
                    covers.push((names.len() - 1, names.len()));
                }
                names.push(alloc::format!("c{}_{}_{}", i, j, level));
            }
        }
    }
    Ok(Poset::from_index_covers(names, &covers).expect("columns form an order"))
}

fn write_columns(f: &mut fmt::Formatter<'_>, keyword: &str, cols: &[Column]) -> fmt::Result {
    f.write_str(keyword)?;
    for (h, c) in cols {
        write!(f, " ({},{})", h, c)?;
    }
    Ok(())
}

/// A finite set of `(height, frequency)` pairs, never both infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pinboard {
    pairs: Vec<Column>,
}

impl Pinboard {
    pub fn new<I: IntoIterator<Item = Column>>(pairs: I) -> Result<Self, PinboardError> {
        Ok(Pinboard {
            pairs: merge_columns(pairs, true)?,
        })
    }

    /// Pairs with distinct heights, tallest first.
    pub fn pairs(&self) -> &[Column] {
        &self.pairs
    }

    pub fn is_finite(&self) -> bool {
        self.pairs
            .iter()
            .all(|(h, f)| h.is_finite() && f.is_finite())
    }

    /// Whether this pinboard's poset embeds into `other`'s.
    pub fn embeds_into(&self, other: &Pinboard) -> bool {
        columns_embed(&self.pairs, &other.pairs)
    }
}

impl fmt::Display for Pinboard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_columns(f, "pin", &self.pairs)
    }
}

/// The disjoint union of `f` copies of the chain `h` for each pair.
///
/// Elements are named `c{pair}_{copy}_{level}`, level 0 at the bottom.
pub fn pinboard_poset(pb: &Pinboard) -> Result<Poset, PinboardError> {
    expand(&pb.pairs)
}

/// `{(β, n), (m, γ)}`: `n` columns of height `β` and `γ` columns of height `m`.
///
/// [`SimplePinboard::new`] requires infinite `β` and `γ`;
/// [`SimplePinboard::bounded`] builds a finite truncation with the same
/// shape, for checking the column machinery against explicit posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimplePinboard {
    beta: Cardinal,
    n: u64,
    m: u64,
    gamma: Cardinal,
}

impl SimplePinboard {
    pub fn new(beta: Cardinal, n: u64, m: u64, gamma: Cardinal) -> Result<Self, PinboardError> {
        if beta.is_finite() || gamma.is_finite() {
            return Err(PinboardError::InvalidHost(
                "β and γ must be infinite cardinals",
            ));
        }
        Ok(SimplePinboard { beta, n, m, gamma })
    }

    pub fn bounded(beta: u64, n: u64, m: u64, gamma: u64) -> Result<Self, PinboardError> {
        if beta <= m {
            return Err(PinboardError::InvalidHost("tall columns must exceed m"));
        }
        Ok(SimplePinboard {
            beta: Cardinal::Fin(beta),
            n,
            m,
            gamma: Cardinal::Fin(gamma),
        })
    }

    /// Reads `{(ω_k, n), (m, ℵ_j)}` back out of a general pinboard.
    pub fn from_pinboard(pb: &Pinboard) -> Result<Self, PinboardError> {
        let [(tall, n), (short, gamma)] = pb.pairs() else {
            return Err(PinboardError::InvalidHost("expected exactly two pairs"));
        };
        let beta = tall.cardinality();
        if beta.is_finite() || beta.as_initial_ordinal() != *tall {
            return Err(PinboardError::InvalidHost(
                "tall height must be an infinite cardinal",
            ));
        }
        let (Cardinal::Fin(n), Some(m)) = (*n, short.finite_value()) else {
            return Err(PinboardError::InvalidHost("n and m must be finite"));
        };
        Self::new(beta, n, m, *gamma)
    }

    pub fn beta(&self) -> Cardinal {
        self.beta
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn gamma(&self) -> Cardinal {
        self.gamma
    }

    pub fn tall_height(&self) -> OrdinalExpr {
        self.beta.as_initial_ordinal()
    }

    pub fn pinboard(&self) -> Pinboard {
        let pairs = [
            (self.tall_height(), Cardinal::Fin(self.n)),
            (OrdinalExpr::finite(self.m), self.gamma),
        ];
        Pinboard::new(
            pairs
                .into_iter()
                .filter(|(h, f)| !h.is_zero() && !f.is_zero()),
        )
        .expect("host pairs are valid")
    }

    /// Whether columns sorted tallest first fit inside the host.
    pub fn check_fit(&self, columns: &[Column]) -> Result<(), PinboardError> {
        let short = OrdinalExpr::finite(self.m);
        let tall = self.tall_height();
        if columns.iter().any(|(h, _)| *h > tall) {
            return Err(PinboardError::DoesNotFit("a column is taller than β"));
        }
        let tall_count: Cardinal = columns
            .iter()
            .filter(|(h, _)| *h > short)
            .map(|c| c.1)
            .sum();
        if tall_count > Cardinal::Fin(self.n) {
            return Err(PinboardError::DoesNotFit("more than n columns exceed m"));
        }
        let total: Cardinal = columns.iter().map(|c| c.1).sum();
        if total > Cardinal::Fin(self.n) + self.gamma {
            return Err(PinboardError::DoesNotFit("more columns than the host has"));
        }
        Ok(())
    }
}

impl fmt::Display for SimplePinboard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pin ({},{}) ({},{})",
            self.tall_height(),
            self.n,
            self.m,
            self.gamma
        )
    }
}

/// A normalized subset of a simple pinboard's poset, described by its
/// columns (tallest first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PinSubset {
    host: SimplePinboard,
    pairs: Vec<Column>,
}

impl PinSubset {
    pub fn host(&self) -> &SimplePinboard {
        &self.host
    }

    pub fn pairs(&self) -> &[Column] {
        &self.pairs
    }

    pub fn as_pinboard(&self) -> Pinboard {
        Pinboard::new(self.pairs.iter().cloned()).expect("fitting subsets are pinboards")
    }

    /// The explicit poset, for all-finite subsets.
    pub fn poset(&self) -> Result<Poset, PinboardError> {
        expand(&self.pairs)
    }
}

impl fmt::Display for PinSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_columns(f, "pin", &self.pairs)
    }
}

/// Merges equal heights, drops columns that cannot change the embeddability
/// class, and checks the result fits `host`.
///
/// A column `(h′, f′)` is dropped when some taller column `(h, f)` has
/// infinite `f ≥ f′`: the `f` columns of height `h` can absorb `f′` more
/// columns of any smaller height. This covers infinite `f′ ≤ f` (including
/// `f′ = f`) and every finite `f′` below an infinite run, so an infinite run
/// is only ever followed by runs of strictly larger frequency.
pub fn normalize_subset(raw: &[Column], host: &SimplePinboard) -> Result<PinSubset, PinboardError> {
    let merged = merge_columns(raw.iter().cloned(), false)?;
    let mut pairs: Vec<Column> = Vec::with_capacity(merged.len());
    let mut absorbing: Option<Cardinal> = None;
    for (h, f) in merged {
        if absorbing.is_some_and(|a| a >= f) {
            continue;
        }
        if !f.is_finite() {
            absorbing = Some(absorbing.map_or(f, |a| a.max(f)));
        }
        pairs.push((h, f));
    }
    host.check_fit(&pairs)?;
    Ok(PinSubset { host: *host, pairs })
}

/// A run of consecutive host columns carrying initial segments of one height.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnBlock {
    /// Position of the first column, an ordinal.
    pub start: OrdinalExpr,
    pub count: Cardinal,
    pub height: OrdinalExpr,
}

/// The column assignment of a subset: `runs[i] = (count, height)`, heights
/// strictly decreasing, starting at column 0; every later column has height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaSegments {
    host: SimplePinboard,
    runs: Vec<(Cardinal, OrdinalExpr)>,
}

impl ThetaSegments {
    pub fn host(&self) -> &SimplePinboard {
        &self.host
    }

    pub fn runs(&self) -> &[(Cardinal, OrdinalExpr)] {
        &self.runs
    }

    pub fn blocks(&self) -> Vec<ColumnBlock> {
        let mut start = OrdinalExpr::zero();
        self.runs
            .iter()
            .map(|(count, height)| {
                let block = ColumnBlock {
                    start: start.clone(),
                    count: *count,
                    height: height.clone(),
                };
                start = start.sum(&count.as_initial_ordinal());
                block
            })
            .collect()
    }

    /// Height of the segment assigned to the column at `position`.
    pub fn height_at(&self, position: &OrdinalExpr) -> OrdinalExpr {
        self.blocks()
            .into_iter()
            .find(|b| {
                *position >= b.start && *position < b.start.sum(&b.count.as_initial_ordinal())
            })
            .map(|b| b.height)
            .unwrap_or_default()
    }
}

/// Assigns the subset's columns, tallest first, to consecutive host columns
/// from column 0. The first `n` host columns are the tall ones, so every
/// column taller than `m` lands on a column of height `β`.
pub fn theta(host: &SimplePinboard, y: &PinSubset) -> Result<ThetaSegments, PinboardError> {
    if y.host != *host {
        return Err(PinboardError::HostMismatch);
    }
    host.check_fit(&y.pairs)?;
    Ok(ThetaSegments {
        host: *host,
        runs: y.pairs.iter().map(|(h, f)| (*f, h.clone())).collect(),
    })
}

/// Column-wise containment: at every position the height in `a` is at most
/// the height in `b`.
///
/// Both height profiles are non-increasing, so it suffices that each run of
/// `a` with height `h` ends no later than the prefix of `b` whose heights
/// are all `≥ h`.
pub fn theta_subset(a: &ThetaSegments, b: &ThetaSegments) -> Result<bool, PinboardError> {
    if a.host != b.host {
        return Err(PinboardError::HostMismatch);
    }
    let mut end = OrdinalExpr::zero();
    for (count, height) in &a.runs {
        end = end.sum(&count.as_initial_ordinal());
        let covered = b
            .runs
            .iter()
            .take_while(|(_, h)| h >= height)
            .fold(OrdinalExpr::zero(), |acc, (c, _)| {
                acc.sum(&c.as_initial_ordinal())
            });
        if end > covered {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embeddability of one subset of a host in another.
pub fn pin_embeds(y: &PinSubset, y2: &PinSubset) -> Result<bool, PinboardError> {
    if y.host != y2.host {
        return Err(PinboardError::HostMismatch);
    }
    Ok(columns_embed(&y.pairs, &y2.pairs))
}

/// Passage between a pinboard-like value and its order dual.
pub trait CoDual {
    type Dual;
    fn co_dual(&self) -> Self::Dual;
}

/// A co-pinboard: the pairs `(h*, f)` whose unstarred form is the wrapped
/// pinboard. Its poset is the dual of the pinboard's.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoPinboard(Pinboard);

impl CoPinboard {
    pub fn base(&self) -> &Pinboard {
        &self.0
    }

    pub fn poset(&self) -> Result<Poset, PinboardError> {
        Ok(pinboard_poset(&self.0)?.dual())
    }

    /// `α* ↪ β*` exactly when `α ≤ β`, so the column criterion carries over.
    pub fn embeds_into(&self, other: &CoPinboard) -> bool {
        self.0.embeds_into(&other.0)
    }
}

impl CoDual for Pinboard {
    type Dual = CoPinboard;
    fn co_dual(&self) -> CoPinboard {
        CoPinboard(self.clone())
    }
}

impl CoDual for CoPinboard {
    type Dual = Pinboard;
    fn co_dual(&self) -> Pinboard {
        self.0.clone()
    }
}

impl fmt::Display for CoPinboard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_columns(f, "copin", &self.0.pairs)
    }
}

/// A subset of a co-pinboard host, stored through its unstarred form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoPinSubset(PinSubset);

impl CoPinSubset {
    pub fn base(&self) -> &PinSubset {
        &self.0
    }

    pub fn embeds_into(&self, other: &CoPinSubset) -> Result<bool, PinboardError> {
        pin_embeds(&self.0, &other.0)
    }

    /// Final segments of the starred columns, described by their lengths.
    pub fn theta(&self) -> Result<ThetaSegments, PinboardError> {
        theta(&self.0.host, &self.0)
    }
}

impl CoDual for PinSubset {
    type Dual = CoPinSubset;
    fn co_dual(&self) -> CoPinSubset {
        CoPinSubset(self.clone())
    }
}

impl CoDual for CoPinSubset {
    type Dual = PinSubset;
    fn co_dual(&self) -> PinSubset {
        self.0.clone()
    }
}

/// Human-readable column range for a block, e.g. `λ(2) and λ(3)` or
/// `λ(8+t) for all t<aleph0`.
pub fn describe_block(block: &ColumnBlock) -> String {
    use alloc::format;
    let at = |offset: u64| block.start.sum(&OrdinalExpr::finite(offset));
    match block.count {
        Cardinal::Fin(1) => format!("column λ({})", block.start),
        Cardinal::Fin(2) => format!("columns λ({}) and λ({})", at(0), at(1)),
        Cardinal::Fin(c) => format!("columns λ({}) to λ({})", at(0), at(c - 1)),
        Cardinal::Aleph(_) if block.start.is_zero() => {
            format!("columns λ(t) for all t<{}", block.count)
        }
        Cardinal::Aleph(_) => format!("columns λ({}+t) for all t<{}", block.start, block.count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::embeds;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn w(k: u32) -> OrdinalExpr {
        OrdinalExpr::omega(k)
    }
    fn fin(n: u64) -> OrdinalExpr {
        OrdinalExpr::finite(n)
    }
    fn c(n: u64) -> Cardinal {
        Cardinal::Fin(n)
    }
    fn aleph(k: u32) -> Cardinal {
        Cardinal::Aleph(k)
    }

    fn host() -> SimplePinboard {
        SimplePinboard::new(aleph(2), 12, 7, aleph(3)).unwrap()
    }

    fn y_raw() -> Vec<Column> {
        vec![
            (w(1) + fin(1), c(1)),
            (w(1), c(1)),
            (w(0) + fin(5), c(1)),
            (w(0) + fin(5), c(1)),
            (w(0), c(1)),
            (fin(30), c(1)),
            (fin(30), c(1)),
            (fin(20), c(1)),
            (fin(5), aleph(0)),
            (fin(3), aleph(0)),
        ]
    }

    fn y2_raw() -> Vec<Column> {
        vec![
            (w(2), c(1)),
            (w(2), c(1)),
            (w(1) + fin(10), c(1)),
            (w(1), c(1)),
            (w(0), c(1)),
            (fin(60), c(1)),
            (fin(40), c(1)),
            (fin(30), c(1)),
            (fin(20), c(1)),
            (fin(6), aleph(1)),
        ]
    }

    #[test]
    fn golden_theta_tables() {
        let h = host();
        let y = normalize_subset(&y_raw(), &h).unwrap();
        let y2 = normalize_subset(&y2_raw(), &h).unwrap();
        let ty = theta(&h, &y).unwrap();
        let ty2 = theta(&h, &y2).unwrap();
        assert_eq!(
            ty.runs(),
            &[
                (c(1), w(1) + fin(1)),
                (c(1), w(1)),
                (c(2), w(0) + fin(5)),
                (c(1), w(0)),
                (c(2), fin(30)),
                (c(1), fin(20)),
                (aleph(0), fin(5)),
            ]
        );
        assert_eq!(
            ty2.runs(),
            &[
                (c(2), w(2)),
                (c(1), w(1) + fin(10)),
                (c(1), w(1)),
                (c(1), w(0)),
                (c(1), fin(60)),
                (c(1), fin(40)),
                (c(1), fin(30)),
                (c(1), fin(20)),
                (aleph(1), fin(6)),
            ]
        );
        assert!(theta_subset(&ty, &ty2).unwrap());
        assert!(!theta_subset(&ty2, &ty).unwrap());
        assert!(theta_subset(&ty, &ty).unwrap());
        assert!(pin_embeds(&y, &y2).unwrap());
        assert!(!pin_embeds(&y2, &y).unwrap());
    }

    #[test]
    fn golden_block_descriptions() {
        let h = host();
        let ty = theta(&h, &normalize_subset(&y_raw(), &h).unwrap()).unwrap();
        let text: Vec<_> = ty.blocks().iter().map(describe_block).collect();
        assert_eq!(text[0], "column λ(0)");
        assert_eq!(text[2], "columns λ(2) and λ(3)");
        assert_eq!(text[6], "columns λ(8+t) for all t<aleph0");
        assert_eq!(ty.height_at(&fin(3)), w(0) + fin(5));
        assert_eq!(ty.height_at(&fin(1000)), fin(5));
        assert_eq!(ty.height_at(&w(0)), OrdinalExpr::zero());
    }

    #[test]
    fn normalization_examples() {
        let h = host();
        let y = normalize_subset(&y_raw(), &h).unwrap();
        assert!(!y.pairs().contains(&(fin(3), aleph(0))));
        assert_eq!(y.pairs().len(), 7);
        let merged = normalize_subset(&[(fin(7), c(2)), (fin(7), c(3))], &h).unwrap();
        assert_eq!(merged.pairs(), &[(fin(7), c(5))]);
        let alone = normalize_subset(&[(fin(5), aleph(0))], &h).unwrap();
        assert_eq!(alone.pairs(), &[(fin(5), aleph(0))]);
        // larger frequency further down survives
        let kept = normalize_subset(&[(fin(5), aleph(0)), (fin(3), aleph(1))], &h).unwrap();
        assert_eq!(kept.pairs().len(), 2);
        // a finite run below an infinite one is absorbed
        let absorbed = normalize_subset(&[(fin(5), aleph(0)), (fin(4), c(1))], &h).unwrap();
        assert_eq!(absorbed.pairs(), &[(fin(5), aleph(0))]);
    }

    #[test]
    fn fit_errors() {
        let h = host();
        assert!(matches!(
            normalize_subset(&[(w(3), c(1))], &h),
            Err(PinboardError::DoesNotFit(_))
        ));
        assert!(matches!(
            normalize_subset(&[(fin(8), c(13))], &h),
            Err(PinboardError::DoesNotFit(_))
        ));
        assert!(matches!(
            normalize_subset(&[(fin(8), aleph(0))], &h),
            Err(PinboardError::DoesNotFit(_))
        ));
        assert!(matches!(
            normalize_subset(&[(fin(2), aleph(4))], &h),
            Err(PinboardError::DoesNotFit(_))
        ));
        let small = SimplePinboard::bounded(4, 1, 2, 2).unwrap();
        // one tall column plus two short ones: three columns in total
        assert!(normalize_subset(&[(fin(2), c(3))], &small).is_ok());
        assert!(normalize_subset(&[(fin(2), c(4))], &small).is_err());
    }

    #[test]
    fn host_mismatch() {
        let a = host();
        let b = SimplePinboard::new(aleph(2), 11, 7, aleph(3)).unwrap();
        let ya = normalize_subset(&[(fin(3), c(1))], &a).unwrap();
        let yb = normalize_subset(&[(fin(3), c(1))], &b).unwrap();
        assert_eq!(pin_embeds(&ya, &yb), Err(PinboardError::HostMismatch));
        assert_eq!(theta(&b, &ya), Err(PinboardError::HostMismatch));
        let ta = theta(&a, &ya).unwrap();
        let tb = theta(&b, &yb).unwrap();
        assert_eq!(theta_subset(&ta, &tb), Err(PinboardError::HostMismatch));
    }

    #[test]
    fn cardinality_obstruction() {
        let h = host();
        let y = normalize_subset(&[(fin(5), aleph(1))], &h).unwrap();
        let y2 = normalize_subset(&[(fin(7), aleph(0))], &h).unwrap();
        assert!(!pin_embeds(&y, &y2).unwrap());
        assert!(pin_embeds(&y2, &y2).unwrap());
        assert!(!theta_subset(&theta(&h, &y).unwrap(), &theta(&h, &y2).unwrap()).unwrap());
    }

    #[test]
    fn empty_subset_has_no_runs() {
        let h = host();
        let y = normalize_subset(&[], &h).unwrap();
        assert!(theta(&h, &y).unwrap().runs().is_empty());
    }

    #[test]
    fn pinboard_invariants() {
        assert_eq!(
            Pinboard::new([(w(0), aleph(0))]),
            Err(PinboardError::BothInfinite { index: 0 })
        );
        assert_eq!(
            Pinboard::new([(fin(0), c(1))]),
            Err(PinboardError::ZeroHeight { index: 0 })
        );
        assert_eq!(
            Pinboard::new([(fin(1), c(0))]),
            Err(PinboardError::ZeroFrequency { index: 0 })
        );
        let pb = Pinboard::new([(fin(3), c(1)), (w(2), c(5)), (fin(3), c(2))]).unwrap();
        assert_eq!(pb.pairs(), &[(w(2), c(5)), (fin(3), c(3))]);
        assert_eq!(pb.to_string(), "pin (w2,5) (3,3)");
    }

    #[test]
    fn expansions() {
        let p = pinboard_poset(&Pinboard::new([(fin(3), c(1)), (fin(2), c(2))]).unwrap()).unwrap();
        assert_eq!(p.len(), 7);
        let heights: Vec<usize> = p.components().iter().map(|q| q.len()).collect();
        assert_eq!(heights, vec![3, 2, 2]);
        assert!(p.components().iter().all(|q| q.is_chain(q.all().bits())));
        assert_eq!(p.name(0), "c0_0_0");
        let anti = pinboard_poset(&Pinboard::new([(fin(1), c(4))]).unwrap()).unwrap();
        assert!(anti.is_isomorphic(&Poset::antichain(4)));
        let slice =
            pinboard_poset(&Pinboard::new([(fin(6), c(2)), (fin(3), c(1))]).unwrap()).unwrap();
        assert_eq!(slice.len(), 15);
        assert_eq!(slice.height_width().unwrap(), (6, 3));
        let inf = Pinboard::new([
            (w(2), c(5)),
            (w(1), c(2)),
            (fin(6), aleph(0)),
            (fin(3), c(1)),
        ])
        .unwrap();
        assert_eq!(pinboard_poset(&inf), Err(PinboardError::InfinitePinboard));
    }

    #[test]
    fn co_forms() {
        let pb = Pinboard::new([(w(0), c(3))]).unwrap();
        let co = pb.co_dual();
        assert_eq!(co.co_dual(), pb);
        assert_eq!(co.to_string(), "copin (w0,3)");
        let finite = Pinboard::new([(fin(3), c(1)), (fin(1), c(2))]).unwrap();
        let p = pinboard_poset(&finite).unwrap();
        let q = finite.co_dual().poset().unwrap();
        assert_eq!(q, p.dual());
        assert!(q.is_isomorphic(&p));
        let h = host();
        let y = normalize_subset(&[(fin(5), c(2))], &h).unwrap();
        let y2 = normalize_subset(&[(fin(6), c(2))], &h).unwrap();
        assert!(y.co_dual().embeds_into(&y2.co_dual()).unwrap());
        assert_eq!(y.co_dual().co_dual(), y);
    }

    #[test]
    fn simple_pinboard_shapes() {
        assert!(SimplePinboard::new(c(5), 1, 2, aleph(0)).is_err());
        let pb = Pinboard::new([(w(2), c(12)), (fin(7), aleph(3))]).unwrap();
        assert_eq!(SimplePinboard::from_pinboard(&pb).unwrap(), host());
        let bad = Pinboard::new([(w(2) + fin(1), c(12)), (fin(7), aleph(3))]).unwrap();
        assert!(SimplePinboard::from_pinboard(&bad).is_err());
        assert_eq!(host().pinboard(), pb);
    }

    /// The infinite case the absorption rule exists for: a finite run after
    /// an infinite one would otherwise start at position ω.
    #[test]
    fn finite_run_after_infinite_run() {
        let h = host();
        let y = normalize_subset(&[(fin(5), aleph(0)), (fin(4), c(1))], &h).unwrap();
        let y2 = normalize_subset(&[(fin(6), aleph(0))], &h).unwrap();
        assert!(pin_embeds(&y, &y2).unwrap());
        assert!(theta_subset(&theta(&h, &y).unwrap(), &theta(&h, &y2).unwrap()).unwrap());
    }

    fn bounded_instance() -> impl Strategy<Value = (SimplePinboard, Vec<Column>, Vec<Column>)> {
        (2u64..=6, 0u64..=3, 1u64..=4, 0u64..=4)
            .prop_filter("β > m", |(b, _, m, _)| b > m)
            .prop_flat_map(|(b, n, m, g)| {
                let host = SimplePinboard::bounded(b, n, m, g).unwrap();
                (Just(host), subset_of(b, n, m, g), subset_of(b, n, m, g))
            })
    }

    fn subset_of(b: u64, n: u64, m: u64, g: u64) -> impl Strategy<Value = Vec<Column>> {
        let tall = proptest::collection::vec(m + 1..=b, 0..=n as usize);
        tall.prop_flat_map(move |tall| {
            let room = (n - tall.len() as u64 + g) as usize;
            (Just(tall), proptest::collection::vec(1..=m, 0..=room))
        })
        .prop_map(|(tall, short)| {
            tall.into_iter()
                .chain(short)
                .map(|h| (OrdinalExpr::finite(h), Cardinal::Fin(1)))
                .collect()
        })
    }

    /// Height of every host column under an assignment, finite model only.
    fn explicit_columns(t: &ThetaSegments, total: u64) -> Vec<u64> {
        let mut cols = Vec::new();
        for (count, h) in t.runs() {
            let Cardinal::Fin(k) = count else {
                unreachable!()
            };
            for _ in 0..*k {
                cols.push(h.finite_value().unwrap());
            }
        }
        cols.resize(total as usize, 0);
        cols
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn three_way_equivalence_at_finite_scale((h, a, b) in bounded_instance()) {
            let ya = normalize_subset(&a, &h).unwrap();
            let yb = normalize_subset(&b, &h).unwrap();
            let by_columns = pin_embeds(&ya, &yb).unwrap();
            let by_theta = theta_subset(&theta(&h, &ya).unwrap(), &theta(&h, &yb).unwrap()).unwrap();
            let brute = embeds(&ya.poset().unwrap(), &yb.poset().unwrap());
            prop_assert_eq!(by_columns, brute);
            prop_assert_eq!(by_theta, brute);
        }

        #[test]
        fn theta_subset_matches_explicit_columns((h, a, b) in bounded_instance()) {
            let total = h.n() + match h.gamma() { Cardinal::Fin(g) => g, _ => unreachable!() };
            let ta = theta(&h, &normalize_subset(&a, &h).unwrap()).unwrap();
            let tb = theta(&h, &normalize_subset(&b, &h).unwrap()).unwrap();
            let ca = explicit_columns(&ta, total);
            let cb = explicit_columns(&tb, total);
            let pointwise = ca.iter().zip(&cb).all(|(x, y)| x <= y);
            prop_assert_eq!(theta_subset(&ta, &tb).unwrap(), pointwise);
        }

        #[test]
        fn theta_is_monotone((h, a, extra) in bounded_instance()) {
            // a ∪ (some of a's own columns made taller is not a subset); use a prefix instead
            let ya = normalize_subset(&a, &h).unwrap();
            let half: Vec<Column> = a.iter().take(a.len() / 2).cloned().collect();
            let yh = normalize_subset(&half, &h).unwrap();
            prop_assert!(theta_subset(&theta(&h, &yh).unwrap(), &theta(&h, &ya).unwrap()).unwrap());
            let _ = extra;
        }
    }

    fn symbolic_columns() -> impl Strategy<Value = Vec<Column>> {
        let height = prop_oneof![(1u64..8).prop_map(OrdinalExpr::finite),];
        let freq = prop_oneof![
            (1u64..4).prop_map(Cardinal::Fin),
            (0u32..3).prop_map(Cardinal::Aleph),
        ];
        proptest::collection::vec((height, freq), 0..5)
    }

    proptest! {
        #[test]
        fn symbolic_theta_agrees_with_columns(a in symbolic_columns(), b in symbolic_columns()) {
            let h = SimplePinboard::new(Cardinal::Aleph(0), 0, 7, Cardinal::Aleph(3)).unwrap();
            let ya = normalize_subset(&a, &h).unwrap();
            let yb = normalize_subset(&b, &h).unwrap();
            let by_theta = theta_subset(&theta(&h, &ya).unwrap(), &theta(&h, &yb).unwrap()).unwrap();
            prop_assert_eq!(by_theta, pin_embeds(&ya, &yb).unwrap());
        }

        #[test]
        fn absorption_keeps_the_class(a in symbolic_columns()) {
            let h = SimplePinboard::new(Cardinal::Aleph(0), 0, 7, Cardinal::Aleph(3)).unwrap();
            let merged = merge_columns(a.iter().cloned(), false).unwrap();
            let ya = normalize_subset(&a, &h).unwrap();
            prop_assert!(columns_embed(&merged, ya.pairs()));
            prop_assert!(columns_embed(ya.pairs(), &merged));
        }

        #[test]
        fn runs_strictly_decrease(a in symbolic_columns()) {
            let h = SimplePinboard::new(Cardinal::Aleph(0), 0, 7, Cardinal::Aleph(3)).unwrap();
            let t = theta(&h, &normalize_subset(&a, &h).unwrap()).unwrap();
            for pair in t.runs().windows(2) {
                prop_assert!(pair[0].1 > pair[1].1);
            }
            prop_assert!(t.runs().iter().all(|(c, _)| !c.is_zero()));
        }
    }
}
