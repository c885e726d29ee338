//! The symmetric inverse monoid `I(X)` on `X = {0, …, n-1}`, partial actions of a group on `X`,
//! and their correspondence with actions of `S(G)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupElement};
use crate::sg::{index_map, Sg, SgElement, SgError, DEFAULT_ENUMERATION_CAP};
use crate::subset::{subsets_over, GroupSet};
use crate::universal::{SemigroupTarget, UniversalError, UniversalHom};

/// Materialize S(G)-actions as tables up to this many `(element, point)` pairs.
pub const TABLE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("ground sets differ: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("point {point} is not in a ground set of size {size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("{0} is mapped twice or is not injective")]
    NotInjective(usize),
    #[error("expected {expected} maps, one per group element, got {got}")]
    WrongMapCount { expected: usize, got: usize },
    #[error("invalid partial action: {0}")]
    Invalid(Violation),
    #[error("not multiplicative at {0:?} * {1:?}")]
    NotMultiplicative(SgElement, SgElement),
    #[error("the unit does not act as the identity")]
    UnitNotIdentity,
    #[error("the global action is not a group action at ({0}, {1})")]
    NotGroupAction(GroupElement, GroupElement),
    #[error(transparent)]
    Semigroup(#[from] SgError),
    #[error(transparent)]
    Universal(UniversalError),
}

/// A partially defined injective map on `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn from_images(images: Vec<Option<usize>>) -> Result<Self, ActionError> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &y in images.iter().flatten() {
            if y >= n {
                return Err(ActionError::PointOutOfRange { point: y, size: n });
            }
            if std::mem::replace(&mut hit[y], true) {
                return Err(ActionError::NotInjective(y));
            }
        }
        Ok(PartialBijection { images })
    }

    /// From `(x, f(x))` pairs on a ground set of size `n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, ActionError> {
        let mut images = vec![None; n];
        for &(x, y) in pairs {
            if x >= n {
                return Err(ActionError::PointOutOfRange { point: x, size: n });
            }
            if images[x].replace(y).is_some() {
                return Err(ActionError::NotInjective(x));
            }
        }
        Self::from_images(images)
    }

    pub fn identity(n: usize) -> Self {
        PartialBijection { images: (0..n).map(Some).collect() }
    }

    pub fn empty(n: usize) -> Self {
        PartialBijection { images: vec![None; n] }
    }

    /// Identity map restricted to `domain`.
    pub fn restricted_identity(n: usize, domain: &[bool]) -> Self {
        PartialBijection { images: (0..n).map(|x| domain[x].then_some(x)).collect() }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn domain(&self) -> Vec<bool> {
        self.images.iter().map(Option::is_some).collect()
    }

    pub fn range(&self) -> Vec<bool> {
        let mut r = vec![false; self.size()];
        for &y in self.images.iter().flatten() {
            r[y] = true;
        }
        r
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y))).collect()
    }

    /// `self ∘ other`: apply `other` first, on the largest domain where both are defined.
    pub fn compose(&self, other: &Self) -> Result<Self, ActionError> {
        if self.size() != other.size() {
            return Err(ActionError::GroundMismatch(self.size(), other.size()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        PartialBijection { images: other.images.iter().map(|y| y.and_then(|y| self.images[y])).collect() }
    }

    pub fn invert(&self) -> Self {
        let mut images = vec![None; self.size()];
        for (x, y) in self.pairs() {
            images[y] = Some(x);
        }
        PartialBijection { images }
    }

    /// Graph inclusion: `self` is a restriction of `other`.
    pub fn is_restriction_of(&self, other: &Self) -> bool {
        self.size() == other.size() && self.pairs().iter().all(|&(x, y)| other.apply(x) == Some(y))
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

/// `I(X)` as a target semigroup for the universal property.
pub struct SymmetricInverseMonoid;

impl SemigroupTarget for SymmetricInverseMonoid {
    type Elem = PartialBijection;

    fn op(&self, a: &PartialBijection, b: &PartialBijection) -> PartialBijection {
        a.compose_unchecked(b)
    }

    fn same(&self, a: &PartialBijection, b: &PartialBijection) -> bool {
        a == b
    }
}

/// Which defining condition a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `D_e = X` and `θ_e = id`.
    IdentityAtUnit,
    /// `θ_r(D_{r⁻¹} ∩ D_s) = D_r ∩ D_{rs}`.
    DomainCompatibility,
    /// `θ_r(θ_s(x)) = θ_{rs}(x)` on `D_{s⁻¹} ∩ D_{s⁻¹r⁻¹}`.
    Composition,
    /// `θ_s θ_t θ_{t⁻¹} = θ_{st} θ_{t⁻¹}`.
    RightAbsorption,
    /// `θ_{s⁻¹} θ_s θ_t = θ_{s⁻¹} θ_{st}`.
    LeftAbsorption,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub r: GroupElement,
    pub s: GroupElement,
    pub x: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at r = {}, s = {}", self.axiom, self.r, self.s)?;
        if let Some(x) = self.x {
            write!(f, ", x = {x}")?;
        }
        Ok(())
    }
}

/// Per-axiom outcome; `violations` holds the first witness for each failing axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: Vec<Axiom>,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// A family `θ_t: D_{t⁻¹} → D_t` of partial bijections, one per group element, with
/// `D_t = ran(θ_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    group: FiniteGroup,
    set_size: usize,
    theta: Vec<PartialBijection>,
}

impl PartialAction {
    /// Assembles the maps without checking the axioms; see [`PartialAction::validate_axioms`].
    pub fn new(group: FiniteGroup, theta: Vec<PartialBijection>) -> Result<Self, ActionError> {
        if theta.len() != group.order() {
            return Err(ActionError::WrongMapCount { expected: group.order(), got: theta.len() });
        }
        let set_size = theta.first().map_or(0, PartialBijection::size);
        if let Some(m) = theta.iter().find(|m| m.size() != set_size) {
            return Err(ActionError::GroundMismatch(set_size, m.size()));
        }
        Ok(PartialAction { group, set_size, theta })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn theta(&self, t: GroupElement) -> &PartialBijection {
        &self.theta[t.0]
    }

    pub fn maps(&self) -> &[PartialBijection] {
        &self.theta
    }

    /// `D_t`, the range of `θ_t`.
    pub fn domain_of(&self, t: GroupElement) -> Vec<bool> {
        self.theta[t.0].range()
    }

    /// Checks the three defining axioms pointwise.
    pub fn validate_axioms(&self) -> AxiomReport {
        let g = &self.group;
        let n = self.set_size;
        let e = g.identity();
        let d: Vec<Vec<bool>> = g.elements().map(|t| self.domain_of(t)).collect();
        let mut first: HashMap<Axiom, Violation> = HashMap::new();
        let mut note = |v: Violation| {
            first.entry(v.axiom).or_insert(v);
        };

        if let Some(x) = (0..n).find(|&x| self.theta[e.0].apply(x) != Some(x)) {
            note(Violation { axiom: Axiom::IdentityAtUnit, r: e, s: e, x: Some(x) });
        }

        for r in g.elements() {
            let ri = g.inv(r);
            let th = &self.theta[r.0];
            for s in g.elements() {
                let rs = g.mul(r, s);
                // θ_r(D_{r⁻¹} ∩ D_s) = D_r ∩ D_{rs}
                let mut image = vec![false; n];
                for x in (0..n).filter(|&x| d[ri.0][x] && d[s.0][x]) {
                    match th.apply(x) {
                        Some(y) => image[y] = true,
                        None => note(Violation { axiom: Axiom::DomainCompatibility, r, s, x: Some(x) }),
                    }
                }
                if let Some(y) = (0..n).find(|&y| image[y] != (d[r.0][y] && d[rs.0][y])) {
                    note(Violation { axiom: Axiom::DomainCompatibility, r, s, x: Some(y) });
                }

                // θ_r(θ_s(x)) = θ_{rs}(x) on D_{s⁻¹} ∩ D_{s⁻¹r⁻¹}
                let si = g.inv(s);
                let sr = g.inv(rs);
                for x in (0..n).filter(|&x| d[si.0][x] && d[sr.0][x]) {
                    let lhs = self.theta[s.0].apply(x).and_then(|y| th.apply(y));
                    if lhs.is_none() || lhs != self.theta[rs.0].apply(x) {
                        note(Violation { axiom: Axiom::Composition, r, s, x: Some(x) });
                    }
                }
            }
        }
        report(&[Axiom::IdentityAtUnit, Axiom::DomainCompatibility, Axiom::Composition], first)
    }

    /// Checks the reformulation inside `I(X)`:
    /// `θ_s θ_t θ_{t⁻¹} = θ_{st} θ_{t⁻¹}`, `θ_e = id`, and the derived
    /// `θ_{s⁻¹} θ_s θ_t = θ_{s⁻¹} θ_{st}`.
    pub fn validate_semigroup_form(&self) -> AxiomReport {
        let g = &self.group;
        let e = g.identity();
        let th = |t: GroupElement| &self.theta[t.0];
        let mut first: HashMap<Axiom, Violation> = HashMap::new();
        let mut note = |v: Violation| {
            first.entry(v.axiom).or_insert(v);
        };
        if *th(e) != PartialBijection::identity(self.set_size) {
            note(Violation { axiom: Axiom::IdentityAtUnit, r: e, s: e, x: None });
        }
        for s in g.elements() {
            for t in g.elements() {
                let st = g.mul(s, t);
                let (si, ti) = (g.inv(s), g.inv(t));
                let lhs = th(s).compose_unchecked(th(t)).compose_unchecked(th(ti));
                let rhs = th(st).compose_unchecked(th(ti));
                if lhs != rhs {
                    note(Violation { axiom: Axiom::RightAbsorption, r: s, s: t, x: None });
                }
                let lhs = th(si).compose_unchecked(th(s)).compose_unchecked(th(t));
                let rhs = th(si).compose_unchecked(th(st));
                if lhs != rhs {
                    note(Violation { axiom: Axiom::LeftAbsorption, r: s, s: t, x: None });
                }
            }
        }
        report(&[Axiom::RightAbsorption, Axiom::IdentityAtUnit, Axiom::LeftAbsorption], first)
    }

    /// `θ_r θ_s ⊆ θ_{rs}` for all `r, s`; returns the first failing pair.
    pub fn find_extension_failure(&self) -> Option<(GroupElement, GroupElement)> {
        let g = &self.group;
        for r in g.elements() {
            for s in g.elements() {
                let comp = self.theta[r.0].compose_unchecked(&self.theta[s.0]);
                if !comp.is_restriction_of(&self.theta[g.mul(r, s).0]) {
                    return Some((r, s));
                }
            }
        }
        None
    }

    /// The `S(G)`-action `π(F, s) = (∏_{r ∈ F} id_{D_r}) ∘ θ_s`.
    pub fn to_inverse_action(&self) -> Result<InverseAction, ActionError> {
        let report = self.validate_axioms();
        if let Some(v) = report.violations.first() {
            return Err(ActionError::Invalid(*v));
        }
        let sg = Sg::new(&self.group);
        let p = self.group.order();
        let table = if p <= DEFAULT_ENUMERATION_CAP {
            let elements = sg.enumerate()?;
            if elements.len().saturating_mul(self.set_size.max(1)) <= TABLE_LIMIT {
                let maps = elements.iter().map(|a| self.evaluate(a)).collect();
                Some(ActionTable { index: index_map(&elements), elements, maps })
            } else {
                None
            }
        } else {
            None
        };
        Ok(InverseAction {
            group: self.group.clone(),
            set_size: self.set_size,
            generators: self.theta.clone(),
            table,
        })
    }

    fn evaluate(&self, a: &SgElement) -> PartialBijection {
        let n = self.set_size;
        let mut keep = vec![true; n];
        for r in a.support().iter() {
            for (k, inside) in keep.iter_mut().zip(self.domain_of(r)) {
                *k &= inside;
            }
        }
        PartialBijection::restricted_identity(n, &keep).compose_unchecked(&self.theta[a.degree().0])
    }

    /// Restriction of a global action of `G` on `Y` to `X ⊆ Y`: `D_t = X ∩ tX`, `θ_t = t|`.
    ///
    /// `global[t][y]` is `t·y`; `subset` lists the members of `X` in the order that fixes
    /// their new labels `0..|X|`.
    pub fn restriction(group: &FiniteGroup, global: &[Vec<usize>], subset: &[usize]) -> Result<Self, ActionError> {
        let p = group.order();
        if global.len() != p {
            return Err(ActionError::WrongMapCount { expected: p, got: global.len() });
        }
        let ny = global.first().map_or(0, Vec::len);
        for t in group.elements() {
            let row = &global[t.0];
            if row.len() != ny {
                return Err(ActionError::GroundMismatch(ny, row.len()));
            }
            PartialBijection::from_images(row.iter().map(|&y| Some(y)).collect())?;
        }
        for s in group.elements() {
            for t in group.elements() {
                let st = group.mul(s, t);
                if (0..ny).any(|y| global[s.0][global[t.0][y]] != global[st.0][y]) {
                    return Err(ActionError::NotGroupAction(s, t));
                }
            }
        }
        if (0..ny).any(|y| global[group.identity().0][y] != y) {
            return Err(ActionError::NotGroupAction(group.identity(), group.identity()));
        }

        let mut label = vec![None; ny];
        for (i, &y) in subset.iter().enumerate() {
            if y >= ny {
                return Err(ActionError::PointOutOfRange { point: y, size: ny });
            }
            if label[y].replace(i).is_some() {
                return Err(ActionError::NotInjective(y));
            }
        }
        let theta = group
            .elements()
            .map(|t| {
                let images = subset.iter().map(|&y| label[global[t.0][y]]).collect();
                PartialBijection { images }
            })
            .collect();
        PartialAction::new(group.clone(), theta)
    }

    /// Translation on `{E ⊆ G : e ∈ E}`: `D_t = {E : t ∈ E}`, `θ_t(E) = tE`.
    ///
    /// Sets are indexed in binary-counter order over the non-identity elements.
    pub fn bernoulli(group: &FiniteGroup) -> Result<Self, ActionError> {
        let p = group.order();
        if p > DEFAULT_ENUMERATION_CAP {
            return Err(SgError::CapExceeded { order: p, cap: DEFAULT_ENUMERATION_CAP }.into());
        }
        let sets = bernoulli_sets(group);
        let position: HashMap<GroupSet, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let theta = group
            .elements()
            .map(|t| {
                let ti = group.inv(t);
                let images = sets
                    .iter()
                    .map(|&s| s.contains(ti).then(|| position[&s.translate(group, t)]))
                    .collect();
                PartialBijection { images }
            })
            .collect();
        PartialAction::new(group.clone(), theta)
    }
}

/// The ground set of the Bernoulli partial action, in index order.
pub fn bernoulli_sets(group: &FiniteGroup) -> Vec<GroupSet> {
    let e = GroupSet::singleton(group.identity());
    let rest = GroupSet::from_bits(GroupSet::full(group.order()).bits() & !e.bits());
    subsets_over(e, rest).collect()
}

fn report(checked: &[Axiom], first: HashMap<Axiom, Violation>) -> AxiomReport {
    let violations = checked.iter().filter_map(|a| first.get(a).copied()).collect();
    AxiomReport { checked: checked.to_vec(), violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ActionTable {
    elements: Vec<SgElement>,
    index: HashMap<SgElement, usize>,
    maps: Vec<PartialBijection>,
}

/// A homomorphism `π: S(G) → I(X)`, kept as generator images plus (when small enough) a
/// table over all of `S(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseAction {
    group: FiniteGroup,
    set_size: usize,
    generators: Vec<PartialBijection>,
    table: Option<ActionTable>,
}

impl InverseAction {
    /// An action given by its full table over `Sg::enumerate` order.
    ///
    /// Multiplicativity is checked lazily by [`InverseAction::find_non_multiplicative`] and
    /// by [`InverseAction::to_partial_action`].
    pub fn from_table(group: FiniteGroup, maps: Vec<PartialBijection>) -> Result<Self, ActionError> {
        let elements = Sg::new(&group).enumerate()?;
        if maps.len() != elements.len() {
            return Err(ActionError::WrongMapCount { expected: elements.len(), got: maps.len() });
        }
        let set_size = maps.first().map_or(0, PartialBijection::size);
        if let Some(m) = maps.iter().find(|m| m.size() != set_size) {
            return Err(ActionError::GroundMismatch(set_size, m.size()));
        }
        let index = index_map(&elements);
        let sg = Sg::new(&group);
        let generators = group.elements().map(|t| maps[index[&sg.generator(t)]].clone()).collect();
        Ok(InverseAction { group, set_size, generators, table: Some(ActionTable { elements, index, maps }) })
    }

    /// The extension of generator images through the universal property.
    pub fn from_universal(
        group: FiniteGroup,
        generators: Vec<PartialBijection>,
    ) -> Result<Self, ActionError> {
        let target = SymmetricInverseMonoid;
        let elements = Sg::new(&group).enumerate()?;
        let maps: Vec<PartialBijection> = {
            let hom = UniversalHom::new(&group, &target, generators).map_err(ActionError::Universal)?;
            elements.iter().map(|a| hom.apply(a)).collect()
        };
        Self::from_table(group, maps)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn is_tabulated(&self) -> bool {
        self.table.is_some()
    }

    /// `π(a)`.
    pub fn apply(&self, a: &SgElement) -> PartialBijection {
        if let Some(t) = &self.table {
            if let Some(&i) = t.index.get(a) {
                return t.maps[i].clone();
            }
        }
        let mut keep = vec![true; self.set_size];
        for r in a.support().iter() {
            for (k, inside) in keep.iter_mut().zip(self.generators[r.0].range()) {
                *k &= inside;
            }
        }
        PartialBijection::restricted_identity(self.set_size, &keep)
            .compose_unchecked(&self.generators[a.degree().0])
    }

    /// The full table in enumeration order, when materialized.
    pub fn table(&self) -> Option<(&[SgElement], &[PartialBijection])> {
        self.table.as_ref().map(|t| (t.elements.as_slice(), t.maps.as_slice()))
    }

    /// First pair `(a, b)` with `π(ab) ≠ π(a) ∘ π(b)`, over all of `S(G)`.
    pub fn find_non_multiplicative(&self) -> Result<Option<(SgElement, SgElement)>, ActionError> {
        let sg = Sg::new(&self.group);
        let elements = sg.enumerate()?;
        let images: Vec<PartialBijection> = elements.iter().map(|a| self.apply(a)).collect();
        let index = index_map(&elements);
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let ab = index[&sg.multiply(a, b)];
                if images[ab] != images[i].compose_unchecked(&images[j]) {
                    return Ok(Some((*a, *b)));
                }
            }
        }
        Ok(None)
    }

    /// Recovers the partial action `θ_t = π([t])`.
    pub fn to_partial_action(&self) -> Result<PartialAction, ActionError> {
        let sg = Sg::new(&self.group);
        if self.apply(&sg.unit()) != PartialBijection::identity(self.set_size) {
            return Err(ActionError::UnitNotIdentity);
        }
        if let Some((a, b)) = self.find_non_multiplicative()? {
            return Err(ActionError::NotMultiplicative(a, b));
        }
        let theta = self.group.elements().map(|t| self.apply(&sg.generator(t))).collect();
        let action = PartialAction::new(self.group.clone(), theta)?;
        if let Some(v) = action.validate_axioms().violations.first() {
            return Err(ActionError::Invalid(*v));
        }
        Ok(action)
    }
}
