//! The universal property of `S(G)`: maps `f: G → T` satisfying
//!
//! ```text
//! f(s⁻¹) f(s) f(t) = f(s⁻¹) f(st)
//! f(s) f(t) f(t⁻¹) = f(st) f(t⁻¹)
//! f(s) f(e)        = f(s)
//! ```
//!
//! extend uniquely to homomorphisms `S(G) → T`, given on canonical forms by
//! `f̃(F, s) = ∏_{r ∈ F} f(r) f(r⁻¹) · f(s)`.

use thiserror::Error;

use crate::group::{FiniteGroup, GroupElement};
use crate::sg::{Sg, SgElement};

/// A semigroup with a computable product and equality.
pub trait SemigroupTarget {
    type Elem: Clone;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn same(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `f(s⁻¹) f(s) f(t) = f(s⁻¹) f(st)`
    LeftAbsorption,
    /// `f(s) f(t) f(t⁻¹) = f(st) f(t⁻¹)`
    RightAbsorption,
    /// `f(s) f(e) = f(s)`
    RightUnit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("condition {condition:?} fails at s = {s}, t = {t}")]
    ConditionsViolated { condition: Condition, s: GroupElement, t: GroupElement },
    #[error("expected {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
}

/// Checks the three defining conditions for every pair `(s, t)`.
pub fn check_universal_conditions<T: SemigroupTarget>(
    group: &FiniteGroup,
    target: &T,
    images: &[T::Elem],
) -> Result<(), UniversalError> {
    if images.len() != group.order() {
        return Err(UniversalError::WrongImageCount { expected: group.order(), got: images.len() });
    }
    let f = |x: GroupElement| &images[x.0];
    let e = group.identity();
    for s in group.elements() {
        if !target.same(&target.op(f(s), f(e)), f(s)) {
            return Err(UniversalError::ConditionsViolated { condition: Condition::RightUnit, s, t: e });
        }
        let si = group.inv(s);
        for t in group.elements() {
            let st = group.mul(s, t);
            let ti = group.inv(t);
            let lhs = target.op(&target.op(f(si), f(s)), f(t));
            let rhs = target.op(f(si), f(st));
            if !target.same(&lhs, &rhs) {
                return Err(UniversalError::ConditionsViolated {
                    condition: Condition::LeftAbsorption,
                    s,
                    t,
                });
            }
            let lhs = target.op(&target.op(f(s), f(t)), f(ti));
            let rhs = target.op(f(st), f(ti));
            if !target.same(&lhs, &rhs) {
                return Err(UniversalError::ConditionsViolated {
                    condition: Condition::RightAbsorption,
                    s,
                    t,
                });
            }
        }
    }
    Ok(())
}

/// The extension `f̃: S(G) → T` of a map satisfying the universal conditions.
pub struct UniversalHom<'a, T: SemigroupTarget> {
    group: &'a FiniteGroup,
    target: &'a T,
    images: Vec<T::Elem>,
}

impl<'a, T: SemigroupTarget> UniversalHom<'a, T> {
    pub fn new(group: &'a FiniteGroup, target: &'a T, images: Vec<T::Elem>) -> Result<Self, UniversalError> {
        check_universal_conditions(group, target, &images)?;
        Ok(UniversalHom { group, target, images })
    }

    pub fn from_fn<F: Fn(GroupElement) -> T::Elem>(
        group: &'a FiniteGroup,
        target: &'a T,
        f: F,
    ) -> Result<Self, UniversalError> {
        Self::new(group, target, group.elements().map(f).collect())
    }

    pub fn image_of_generator(&self, t: GroupElement) -> &T::Elem {
        &self.images[t.0]
    }

    /// `f̃(F, s)`, multiplying the idempotent factors in ascending index order.
    pub fn apply(&self, a: &SgElement) -> T::Elem {
        self.apply_ordered(a, a.support().iter())
    }

    /// `f̃(F, s)` with the factors `f(r) f(r⁻¹)` taken in the given order over `r ∈ F`.
    pub fn apply_ordered<I: IntoIterator<Item = GroupElement>>(&self, a: &SgElement, order: I) -> T::Elem {
        let mut acc: Option<T::Elem> = None;
        for r in order {
            let eps = self.target.op(&self.images[r.0], &self.images[self.group.inv(r).0]);
            acc = Some(match acc {
                None => eps,
                Some(x) => self.target.op(&x, &eps),
            });
        }
        let last = &self.images[a.degree().0];
        match acc {
            None => last.clone(),
            Some(x) => self.target.op(&x, last),
        }
    }

    /// First pair `(a, b)` of `elements` with `f̃(ab) ≠ f̃(a) f̃(b)`.
    pub fn find_non_multiplicative(&self, elements: &[SgElement]) -> Option<(SgElement, SgElement)> {
        let sg = Sg::new(self.group);
        let table: Vec<T::Elem> = elements.iter().map(|a| self.apply(a)).collect();
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let lhs = self.apply(&sg.multiply(a, b));
                if !self.target.same(&lhs, &self.target.op(&table[i], &table[j])) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }
}

/// `G` viewed as a semigroup.
pub struct GroupTarget<'a>(pub &'a FiniteGroup);

impl SemigroupTarget for GroupTarget<'_> {
    type Elem = GroupElement;

    fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.0.mul(*a, *b)
    }

    fn same(&self, a: &GroupElement, b: &GroupElement) -> bool {
        a == b
    }
}

/// The one-element semigroup.
pub struct TrivialTarget;

impl SemigroupTarget for TrivialTarget {
    type Elem = ();

    fn op(&self, _: &(), _: &()) {}

    fn same(&self, _: &(), _: &()) -> bool {
        true
    }
}

/// Self-maps of `0..n` as lookup vectors, composed right to left: `(f·g)(x) = f(g(x))`.
pub struct TransformationTarget;

impl SemigroupTarget for TransformationTarget {
    type Elem = Vec<usize>;

    fn op(&self, f: &Vec<usize>, g: &Vec<usize>) -> Vec<usize> {
        g.iter().map(|&x| f[x]).collect()
    }

    fn same(&self, a: &Vec<usize>, b: &Vec<usize>) -> bool {
        a == b
    }
}
