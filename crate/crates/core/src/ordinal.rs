//! Symbolic ordinals of the form `ω_{k₁}·m₁ + ω_{k₂}·m₂ + … + n` with
//! strictly decreasing indices, and finite-or-aleph cardinals.
//!
//! This fragment is closed under ordinal addition and has a trivially
//! decidable order, which is all the pinboard machinery needs. Ordinals and
//! cardinals are separate types; [`Cardinal::as_initial_ordinal`] and
//! [`OrdinalExpr::cardinality`] convert between them.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use thiserror::Error;

/// One summand. Variant order matters: every finite term is below every
/// `Omega` term, and the derived `Ord` on normalized term lists is the
/// ordinal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Fin(u64),
    Omega { index: u32, mult: u64 },
}

/// A normalized ordinal; zero is the empty term list.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdinalExpr {
    terms: Vec<Term>,
}

impl OrdinalExpr {
    pub fn zero() -> Self {
        OrdinalExpr::default()
    }

    pub fn finite(n: u64) -> Self {
        let mut o = Self::zero();
        o.push(Term::Fin(n));
        o
    }

    /// The initial ordinal `ω_k`.
    pub fn omega(k: u32) -> Self {
        Self::omega_times(k, 1)
    }

    /// `ω_k · m`.
    pub fn omega_times(k: u32, mult: u64) -> Self {
        let mut o = Self::zero();
        o.push(Term::Omega { index: k, mult });
        o
    }

    /// Left-to-right ordinal sum of arbitrary terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        let mut o = Self::zero();
        for t in terms {
            o.push(t);
        }
        o
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.finite_value().is_some()
    }

    pub fn finite_value(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [Term::Fin(n)] => Some(*n),
            _ => None,
        }
    }

    /// The cardinal of the ordinal: `ℵ_k` for the leading `ω_k`, else finite.
    pub fn cardinality(&self) -> Cardinal {
        match self.terms.first() {
            None => Cardinal::Fin(0),
            Some(Term::Fin(n)) => Cardinal::Fin(*n),
            Some(Term::Omega { index, .. }) => Cardinal::Aleph(*index),
        }
    }

    /// Appends one term, absorbing smaller trailing terms.
    fn push(&mut self, term: Term) {
        match term {
            Term::Fin(0) | Term::Omega { mult: 0, .. } => {}
            Term::Fin(n) => match self.terms.last_mut() {
                Some(Term::Fin(m)) => *m = m.checked_add(n).expect("finite tail overflow"),
                _ => self.terms.push(term),
            },
            Term::Omega { index, mult } => {
                while let Some(&last) = self.terms.last() {
                    match last {
                        Term::Fin(_) => {}
                        Term::Omega { index: i, .. } if i < index => {}
                        _ => break,
                    }
                    self.terms.pop();
                }
                match self.terms.last_mut() {
                    Some(Term::Omega { index: i, mult: m }) if *i == index => {
                        *m = m.checked_add(mult).expect("multiplicity overflow")
                    }
                    _ => self.terms.push(term),
                }
            }
        }
    }

    /// Ordinal sum `self ⊕ other`.
    pub fn sum(&self, other: &OrdinalExpr) -> OrdinalExpr {
        let mut out = self.clone();
        for &t in &other.terms {
            out.push(t);
        }
        out
    }

    /// Re-runs normalization; a no-op on values built through this API.
    pub fn normalized(&self) -> OrdinalExpr {
        Self::from_terms(self.terms.iter().copied())
    }
}

impl Add for OrdinalExpr {
    type Output = OrdinalExpr;
    fn add(self, rhs: OrdinalExpr) -> OrdinalExpr {
        self.sum(&rhs)
    }
}

impl<'a> Add<&'a OrdinalExpr> for &'a OrdinalExpr {
    type Output = OrdinalExpr;
    fn add(self, rhs: &'a OrdinalExpr) -> OrdinalExpr {
        self.sum(rhs)
    }
}

impl From<u64> for OrdinalExpr {
    fn from(n: u64) -> Self {
        OrdinalExpr::finite(n)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Fin(n) => write!(f, "{}", n),
            Term::Omega { index, mult: 1 } => write!(f, "w{}", index),
            Term::Omega { index, mult } => write!(f, "w{}*{}", index, mult),
        }
    }
}

impl fmt::Display for OrdinalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

pub fn ord_sum(a: &OrdinalExpr, b: &OrdinalExpr) -> OrdinalExpr {
    a.sum(b)
}

pub fn ord_cmp(a: &OrdinalExpr, b: &OrdinalExpr) -> Ordering {
    a.cmp(b)
}

/// A finite cardinal or `ℵ_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Fin(u64),
    Aleph(u32),
}

impl Cardinal {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Fin(_))
    }

    pub fn is_zero(&self) -> bool {
        *self == Cardinal::Fin(0)
    }

    pub fn sum(self, other: Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Fin(a), Cardinal::Fin(b)) => {
                Cardinal::Fin(a.checked_add(b).expect("cardinal overflow"))
            }
            _ => self.max(other),
        }
    }

    /// The least ordinal of this cardinality.
    pub fn as_initial_ordinal(&self) -> OrdinalExpr {
        match *self {
            Cardinal::Fin(n) => OrdinalExpr::finite(n),
            Cardinal::Aleph(k) => OrdinalExpr::omega(k),
        }
    }
}

impl Add for Cardinal {
    type Output = Cardinal;
    fn add(self, rhs: Cardinal) -> Cardinal {
        self.sum(rhs)
    }
}

impl core::iter::Sum for Cardinal {
    fn sum<I: Iterator<Item = Cardinal>>(iter: I) -> Cardinal {
        iter.fold(Cardinal::Fin(0), Cardinal::sum)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Fin(n) => write!(f, "{}", n),
            Cardinal::Aleph(k) => write!(f, "aleph{}", k),
        }
    }
}

/// Cardinal sum and comparison in one call.
pub fn card_ops(a: Cardinal, b: Cardinal) -> (Cardinal, Ordering) {
    (a.sum(b), a.cmp(&b))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("order type {beta} exceeds {alpha}")]
    BetaExceedsAlpha {
        alpha: OrdinalExpr,
        beta: OrdinalExpr,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentMode {
    WellOrdered,
    WellOrderedStar,
}

/// Where a well-ordered (or reversed well-ordered) chain sends a subset of
/// order type `β` (resp. `β*`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Segment {
    /// The initial segment of `of` with order type `order_type`.
    Initial {
        of: OrdinalExpr,
        order_type: OrdinalExpr,
    },
    /// The final segment of `of*` with order type `order_type*`.
    Final {
        of: OrdinalExpr,
        order_type: OrdinalExpr,
    },
}

impl Segment {
    pub fn order_type(&self) -> &OrdinalExpr {
        match self {
            Segment::Initial { order_type, .. } | Segment::Final { order_type, .. } => order_type,
        }
    }

    pub fn is_whole(&self) -> bool {
        match self {
            Segment::Initial { of, order_type } | Segment::Final { of, order_type } => {
                of == order_type
            }
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Segment::Initial { of, order_type } => {
                write!(f, "initial segment {} of {}", order_type, of)
            }
            Segment::Final { of, order_type } => {
                write!(f, "final segment ({})* of ({})*", order_type, of)
            }
        }
    }
}

/// The representative of a subset of order type `beta` inside the chain `alpha`
/// (or `alpha*` in star mode).
pub fn subrep_ordinal(
    alpha: &OrdinalExpr,
    beta: &OrdinalExpr,
    mode: SegmentMode,
) -> Result<Segment, OrdinalError> {
    if beta > alpha {
        return Err(OrdinalError::BetaExceedsAlpha {
            alpha: alpha.clone(),
            beta: beta.clone(),
        });
    }
    let (of, order_type) = (alpha.clone(), beta.clone());
    Ok(match mode {
        SegmentMode::WellOrdered => Segment::Initial { of, order_type },
        SegmentMode::WellOrderedStar => Segment::Final { of, order_type },
    })
}
