//! Arithmetic in the universal inverse semigroup `S(G)` of a finite group.
//!
//! Every element of `S(G)` has a unique standard form `ε_{r1}⋯ε_{rn}[s]`. It is stored here as
//! the pair `(F, s)` with `F = {e, r1, …, rn, s}`, so the identity and the degree are always
//! members of the support. Under this encoding
//!
//! ```text
//! (F, s)·(H, u) = (F ∪ sH, su)        (F, s)* = (s⁻¹F, s⁻¹)
//! ```
//!
//! and `[t] = ({e, t}, t)`, `ε_r = [r][r⁻¹] = ({e, r}, e)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupElement};
use crate::subset::{subsets_over, GroupSet};

/// Default largest group order for which `S(G)` is enumerated (`|S(G)| = 2816` at `p = 10`).
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SgError {
    #[error("element {0:?} does not belong to S(G) for this group")]
    ForeignElement(SgElement),
    #[error("support {support:?} must contain the identity and the degree {degree}")]
    InvalidSupport { support: GroupSet, degree: GroupElement },
    #[error("group element {0} out of range")]
    ForeignGroupElement(GroupElement),
    #[error("cannot reduce the empty word")]
    EmptyWord,
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("the order formula needs p >= 2, got {0}")]
    OrderTooSmall(u64),
    #[error("2^(p-2)(p+1) overflows 64 bits for p = {0}")]
    Overflow(u64),
    #[error("set {0:?} does not contain the identity")]
    MissingIdentity(GroupSet),
}

/// An element of `S(G)` in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ElementRecord", from = "ElementRecord")]
pub struct SgElement {
    support: GroupSet,
    degree: GroupElement,
}

/// JSON form of an [`SgElement`]: `{ "support": [indices], "degree": index }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub support: Vec<usize>,
    pub degree: usize,
}

impl From<SgElement> for ElementRecord {
    fn from(a: SgElement) -> Self {
        ElementRecord { support: a.support.iter().map(|g| g.0).collect(), degree: a.degree.0 }
    }
}

impl From<ElementRecord> for SgElement {
    fn from(r: ElementRecord) -> Self {
        SgElement {
            support: r.support.into_iter().filter(|&i| i < 64).map(GroupElement).collect(),
            degree: GroupElement(r.degree),
        }
    }
}

impl SgElement {
    #[inline]
    pub fn support(&self) -> GroupSet {
        self.support
    }

    #[inline]
    pub fn degree(&self) -> GroupElement {
        self.degree
    }
}

impl Ord for SgElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, self.support).cmp(&(other.degree, other.support))
    }
}

impl PartialOrd for SgElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.support, self.degree)
    }
}

/// A finite subset of `G` containing the identity; the set on which `Λ` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ESet(GroupSet);

impl ESet {
    pub fn new(group: &FiniteGroup, set: GroupSet) -> Result<Self, SgError> {
        if !set.contains(group.identity()) {
            return Err(SgError::MissingIdentity(set));
        }
        Ok(ESet(set))
    }

    pub fn unit(group: &FiniteGroup) -> Self {
        ESet(GroupSet::singleton(group.identity()))
    }

    #[inline]
    pub fn set(self) -> GroupSet {
        self.0
    }
}

/// `2^(p-2)(p+1)`, the number of elements of `S(G)` for a group of order `p ≥ 2`.
pub fn order_formula(p: u64) -> Result<u64, SgError> {
    if p < 2 {
        return Err(SgError::OrderTooSmall(p));
    }
    if p - 2 >= 64 {
        return Err(SgError::Overflow(p));
    }
    (1u64 << (p - 2)).checked_mul(p + 1).ok_or(SgError::Overflow(p))
}

/// Operations of `S(G)` for a fixed group.
#[derive(Clone, Copy, Debug)]
pub struct Sg<'g> {
    group: &'g FiniteGroup,
}

impl<'g> Sg<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        Sg { group }
    }

    #[inline]
    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Checks the canonical-form invariants against this group.
    pub fn element(&self, support: GroupSet, degree: GroupElement) -> Result<SgElement, SgError> {
        if !self.group.contains(degree) {
            return Err(SgError::ForeignGroupElement(degree));
        }
        if !support.within(self.group)
            || !support.contains(self.group.identity())
            || !support.contains(degree)
        {
            return Err(SgError::InvalidSupport { support, degree });
        }
        Ok(SgElement { support, degree })
    }

    pub fn contains(&self, a: &SgElement) -> bool {
        self.element(a.support, a.degree).is_ok()
    }

    /// The unit `[e] = ({e}, e)`.
    pub fn unit(&self) -> SgElement {
        let e = self.group.identity();
        SgElement { support: GroupSet::singleton(e), degree: e }
    }

    /// `[t] = ({e, t}, t)`.
    pub fn generator(&self, t: GroupElement) -> SgElement {
        debug_assert!(self.group.contains(t));
        SgElement { support: GroupSet::singleton(self.group.identity()).with(t), degree: t }
    }

    /// `ε_r = [r][r⁻¹] = ({e, r}, e)`.
    pub fn epsilon(&self, r: GroupElement) -> SgElement {
        debug_assert!(self.group.contains(r));
        let e = self.group.identity();
        SgElement { support: GroupSet::singleton(e).with(r), degree: e }
    }

    /// The idempotent `(E, e)` for a set `E` containing the identity.
    pub fn idempotent(&self, set: ESet) -> SgElement {
        SgElement { support: set.set(), degree: self.group.identity() }
    }

    #[inline]
    pub fn multiply(&self, a: &SgElement, b: &SgElement) -> SgElement {
        SgElement {
            support: a.support.union(b.support.translate(self.group, a.degree)),
            degree: self.group.mul(a.degree, b.degree),
        }
    }

    /// [`Sg::multiply`] after checking both operands belong to this group's `S(G)`.
    pub fn checked_multiply(&self, a: &SgElement, b: &SgElement) -> Result<SgElement, SgError> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(SgError::ForeignElement(*x));
            }
        }
        Ok(self.multiply(a, b))
    }

    #[inline]
    pub fn star(&self, a: &SgElement) -> SgElement {
        let inv = self.group.inv(a.degree);
        SgElement { support: a.support.translate(self.group, inv), degree: inv }
    }

    #[inline]
    pub fn degree(&self, a: &SgElement) -> GroupElement {
        a.degree
    }

    pub fn is_idempotent(&self, a: &SgElement) -> bool {
        a.degree == self.group.identity()
    }

    /// Canonical form of `[t1][t2]⋯[tk]`, folding generators under [`Sg::multiply`].
    pub fn reduce_word(&self, word: &[GroupElement]) -> Result<SgElement, SgError> {
        let (first, rest) = word.split_first().ok_or(SgError::EmptyWord)?;
        for &t in word {
            if !self.group.contains(t) {
                return Err(SgError::ForeignGroupElement(t));
            }
        }
        Ok(rest
            .iter()
            .fold(self.generator(*first), |acc, &t| self.multiply(&acc, &self.generator(t))))
    }

    /// All of `S(G)`, sorted by degree and then by support bits.
    pub fn enumerate(&self) -> Result<Vec<SgElement>, SgError> {
        self.enumerate_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<Vec<SgElement>, SgError> {
        let p = self.group.order();
        if p > cap {
            return Err(SgError::CapExceeded { order: p, cap });
        }
        let e = self.group.identity();
        let everything = GroupSet::full(p);
        let mut out = Vec::new();
        for s in self.group.elements() {
            let base = GroupSet::singleton(e).with(s);
            let free = GroupSet::from_bits(everything.bits() & !base.bits());
            out.extend(subsets_over(base, free).map(|support| SgElement { support, degree: s }));
        }
        Ok(out)
    }

    /// Natural partial order: `a ≤ b` iff `a = εb` for an idempotent `ε`.
    pub fn natural_le(&self, a: &SgElement, b: &SgElement) -> bool {
        a.degree == b.degree && a.support.is_superset(b.support)
    }

    /// An idempotent `ε` with `ε·b = a`, when `a ≤ b`.
    pub fn order_witness(&self, a: &SgElement, b: &SgElement) -> Option<SgElement> {
        self.natural_le(a, b)
            .then(|| SgElement { support: a.support, degree: self.group.identity() })
    }

    /// `Λ(F, s)(E) = sE ∪ F`.
    pub fn lambda_apply(&self, a: &SgElement, set: ESet) -> ESet {
        ESet(set.0.translate(self.group, a.degree).union(a.support))
    }
}

/// Position of each element in an enumeration.
pub fn index_map(elements: &[SgElement]) -> HashMap<SgElement, usize> {
    elements.iter().enumerate().map(|(i, a)| (*a, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> GroupSet {
        xs.iter().map(|&x| GroupElement(x)).collect()
    }

    fn el(xs: &[usize], d: usize) -> SgElement {
        SgElement { support: set(xs), degree: GroupElement(d) }
    }

    #[test]
    fn generators() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let sg = Sg::new(&c2);
        assert_eq!(sg.generator(GroupElement(0)), sg.unit());
        assert_eq!(sg.unit(), el(&[0], 0));
        assert_eq!(sg.generator(GroupElement(1)), el(&[0, 1], 1));

        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(Sg::new(&c4).generator(GroupElement(1)), el(&[0, 1], 1));
    }

    #[test]
    fn products() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let sg = Sg::new(&c2);
        let t = sg.generator(GroupElement(1));
        assert_eq!(sg.multiply(&t, &t), el(&[0, 1], 0));
        assert_eq!(sg.multiply(&t, &t), sg.epsilon(GroupElement(1)));
        for a in sg.enumerate().unwrap() {
            assert_eq!(sg.multiply(&sg.unit(), &a), a);
            assert_eq!(sg.multiply(&a, &sg.unit()), a);
        }

        let c4 = FiniteGroup::cyclic(4).unwrap();
        let sg = Sg::new(&c4);
        let g1 = sg.generator(GroupElement(1));
        assert_eq!(sg.multiply(&g1, &g1), el(&[0, 1, 2], 2));
    }

    #[test]
    fn checked_multiply_rejects_foreign() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let sg = Sg::new(&c2);
        let bad = el(&[0, 3], 3);
        assert_eq!(
            sg.checked_multiply(&sg.unit(), &bad),
            Err(SgError::ForeignElement(bad))
        );
        let no_identity = el(&[1], 1);
        assert!(sg.checked_multiply(&no_identity, &sg.unit()).is_err());
    }

    #[test]
    fn star_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let sg = Sg::new(&c4);
        for t in c4.elements() {
            assert_eq!(sg.star(&sg.generator(t)), sg.generator(c4.inv(t)));
        }
        assert_eq!(sg.star(&sg.unit()), sg.unit());
        assert_eq!(sg.star(&el(&[0, 1, 2], 2)), el(&[0, 2, 3], 2));
    }

    #[test]
    fn epsilons() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let sg = Sg::new(&g);
        assert_eq!(sg.epsilon(g.identity()), sg.unit());
        for r in g.elements() {
            let er = sg.epsilon(r);
            assert_eq!(sg.multiply(&er, &er), er);
            assert_eq!(sg.star(&er), er);
            assert_eq!(sg.multiply(&sg.generator(r), &sg.generator(g.inv(r))), er);
            for s in g.elements() {
                let es = sg.epsilon(s);
                assert_eq!(sg.multiply(&er, &es), sg.multiply(&es, &er));
            }
        }
    }

    #[test]
    fn degrees() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let sg = Sg::new(&g);
        for t in g.elements() {
            assert_eq!(sg.degree(&sg.generator(t)), t);
            assert_eq!(sg.degree(&sg.epsilon(t)), g.identity());
        }
    }

    #[test]
    fn word_reduction() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let sg = Sg::new(&c4);
        let w = |xs: &[usize]| xs.iter().map(|&x| GroupElement(x)).collect::<Vec<_>>();
        assert_eq!(sg.reduce_word(&w(&[3])).unwrap(), sg.generator(GroupElement(3)));
        assert_eq!(sg.reduce_word(&w(&[1, 3, 1])).unwrap(), sg.generator(GroupElement(1)));
        let full = sg.reduce_word(&w(&[1, 1, 1, 1])).unwrap();
        assert_eq!(full, el(&[0, 1, 2, 3], 0));
        let eps = [1, 2, 3]
            .iter()
            .map(|&r| sg.epsilon(GroupElement(r)))
            .reduce(|a, b| sg.multiply(&a, &b))
            .unwrap();
        assert_eq!(full, eps);
        assert_eq!(sg.reduce_word(&[]), Err(SgError::EmptyWord));
        assert!(sg.reduce_word(&w(&[4])).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        let sizes = |g: &FiniteGroup| Sg::new(g).enumerate().unwrap().len();
        assert_eq!(sizes(&FiniteGroup::trivial()), 1);
        assert_eq!(sizes(&FiniteGroup::cyclic(2).unwrap()), 3);
        assert_eq!(sizes(&FiniteGroup::cyclic(4).unwrap()), 20);
        assert_eq!(sizes(&FiniteGroup::klein4()), 20);
        let c11 = FiniteGroup::cyclic(11).unwrap();
        assert_eq!(
            Sg::new(&c11).enumerate(),
            Err(SgError::CapExceeded { order: 11, cap: DEFAULT_ENUMERATION_CAP })
        );
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let sg = Sg::new(&g);
        let all = sg.enumerate().unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|a| sg.contains(a)));
    }

    #[test]
    fn formula() {
        assert_eq!(order_formula(28), Ok(1_946_157_056));
        assert_eq!(order_formula(10), Ok(2816));
        assert_eq!(order_formula(2), Ok(3));
        assert_eq!(order_formula(1), Err(SgError::OrderTooSmall(1)));
        assert!(order_formula(59).is_ok());
        assert_eq!(order_formula(70), Err(SgError::Overflow(70)));
        assert_eq!(order_formula(u64::MAX), Err(SgError::Overflow(u64::MAX)));
    }

    #[test]
    fn formula_overflow_boundary() {
        // 2^(p-2)(p+1) < 2^64 exactly when p - 2 + log2(p + 1) < 64.
        for p in 2..80u64 {
            let exact = (1u128 << (p - 2)) * u128::from(p + 1);
            let fits = exact <= u128::from(u64::MAX);
            assert_eq!(order_formula(p).is_ok(), fits, "p = {p}");
            if fits {
                assert_eq!(u128::from(order_formula(p).unwrap()), exact);
            }
        }
    }

    #[test]
    fn partial_order() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let sg = Sg::new(&c4);
        let a = el(&[0, 1, 2], 1);
        let b = el(&[0, 1], 1);
        assert!(sg.natural_le(&a, &a));
        assert!(sg.natural_le(&a, &b));
        assert!(!sg.natural_le(&b, &a));
        assert_eq!(sg.multiply(&el(&[0, 2], 0), &b), a);
        let w = sg.order_witness(&a, &b).unwrap();
        assert!(sg.is_idempotent(&w));
        assert_eq!(sg.multiply(&w, &b), a);
        assert!(!sg.natural_le(&sg.generator(GroupElement(1)), &sg.generator(GroupElement(2))));
        assert_eq!(sg.order_witness(&b, &a), None);
    }

    #[test]
    fn lambda() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let sg = Sg::new(&g);
        let unit = ESet::unit(&g);
        let e = g.identity();
        for t in g.elements() {
            assert_eq!(sg.lambda_apply(&sg.generator(t), unit).set(), set(&[e.0, t.0]));
        }
        let big = ESet::new(&g, set(&[0, 2, 4])).unwrap();
        for r in g.elements() {
            assert_eq!(sg.lambda_apply(&sg.epsilon(r), big).set(), big.set().with(r));
        }
        assert_eq!(sg.lambda_apply(&sg.unit(), big), big);
        assert_eq!(ESet::new(&g, set(&[1, 2])), Err(SgError::MissingIdentity(set(&[1, 2]))));
    }

    #[test]
    fn element_validation() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let sg = Sg::new(&c4);
        assert!(sg.element(set(&[0, 2]), GroupElement(2)).is_ok());
        assert!(sg.element(set(&[0, 1]), GroupElement(2)).is_err());
        assert!(sg.element(set(&[1, 2]), GroupElement(2)).is_err());
        assert!(sg.element(set(&[0, 5]), GroupElement(0)).is_err());
        assert!(sg.element(set(&[0]), GroupElement(7)).is_err());
    }

    #[test]
    fn json_encoding() {
        let a = el(&[0, 1, 2], 2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"support":[0,1,2],"degree":2}"#);
        let back: SgElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
