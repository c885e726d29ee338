//! Grading subspaces `B_t` of an algebra with a multiplicative basis, and the semigroup they
//! generate under subspace products.
//!
//! Every subspace here is spanned by basis elements, so a subspace is just a sorted index set
//! and the closed span of a product is the set of index products.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::StructureAlgebra;
use crate::group::{FiniteGroup, GroupElement};
use crate::sg::{Sg, SgElement, SgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("subspaces belong to algebras of different dimension ({left} and {right})")]
    AlgebraMismatch { left: usize, right: usize },
    #[error("generated semigroup exceeds {cap} subspaces")]
    CapExceeded { cap: usize },
    #[error("element is not in the basis of this algebra")]
    NotInBasis,
    #[error(transparent)]
    Semigroup(#[from] SgError),
}

/// An algebra whose basis is closed under multiplication and involution, with each basis
/// element homogeneous of some group degree.
pub trait GradedBasis {
    fn group(&self) -> &FiniteGroup;
    fn dim(&self) -> usize;
    /// Index of `b_i b_j`.
    fn product(&self, i: usize, j: usize) -> usize;
    /// Index of `b_i*`.
    fn star_index(&self, i: usize) -> usize;
    fn degree(&self, i: usize) -> GroupElement;
}

impl GradedBasis for StructureAlgebra {
    fn group(&self) -> &FiniteGroup {
        StructureAlgebra::group(self)
    }

    fn dim(&self) -> usize {
        StructureAlgebra::dim(self)
    }

    fn product(&self, i: usize, j: usize) -> usize {
        StructureAlgebra::product(self, i, j)
    }

    fn star_index(&self, i: usize) -> usize {
        StructureAlgebra::star_index(self, i)
    }

    fn degree(&self, i: usize) -> GroupElement {
        self.basis()[i].degree()
    }
}

/// The group algebra `C[G]` with basis `G`, graded by `δ_g ↦ g`.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: FiniteGroup,
}

impl GroupAlgebra {
    pub fn new(group: &FiniteGroup) -> Self {
        GroupAlgebra { group: group.clone() }
    }
}

impl GradedBasis for GroupAlgebra {
    fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn dim(&self) -> usize {
        self.group.order()
    }

    fn product(&self, i: usize, j: usize) -> usize {
        self.group.mul(GroupElement(i), GroupElement(j)).0
    }

    fn star_index(&self, i: usize) -> usize {
        self.group.inv(GroupElement(i)).0
    }

    fn degree(&self, i: usize) -> GroupElement {
        GroupElement(i)
    }
}

/// The span of a set of basis elements of one common degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradedSubspace {
    degree: GroupElement,
    indices: Vec<usize>,
    #[serde(skip)]
    dim: usize,
}

impl GradedSubspace {
    pub fn degree(&self) -> GroupElement {
        self.degree
    }

    /// Basis indices, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.dim == other.dim && self.indices.iter().all(|i| other.indices.binary_search(i).is_ok())
    }

    fn from_set(degree: GroupElement, set: BTreeSet<usize>, dim: usize) -> Self {
        GradedSubspace { degree, indices: set.into_iter().collect(), dim }
    }
}

/// `t ↦ B_t`, indexed by group element.
pub fn grading<A: GradedBasis>(alg: &A) -> Vec<GradedSubspace> {
    let mut sets = vec![BTreeSet::new(); alg.group().order()];
    for i in 0..alg.dim() {
        sets[alg.degree(i).0].insert(i);
    }
    sets.into_iter()
        .enumerate()
        .map(|(t, set)| GradedSubspace::from_set(GroupElement(t), set, alg.dim()))
        .collect()
}

/// Span of all products `xy`, `x ∈ X`, `y ∈ Y`.
pub fn subspace_product<A: GradedBasis>(
    alg: &A,
    x: &GradedSubspace,
    y: &GradedSubspace,
) -> Result<GradedSubspace, GradedError> {
    for s in [x, y] {
        if s.dim != alg.dim() {
            return Err(GradedError::AlgebraMismatch { left: s.dim, right: alg.dim() });
        }
    }
    let set = x.indices.iter().flat_map(|&i| y.indices.iter().map(move |&j| alg.product(i, j))).collect();
    Ok(GradedSubspace::from_set(alg.group().mul(x.degree, y.degree), set, alg.dim()))
}

/// Elementwise involution.
pub fn subspace_star<A: GradedBasis>(alg: &A, x: &GradedSubspace) -> GradedSubspace {
    let set = x.indices.iter().map(|&i| alg.star_index(i)).collect();
    GradedSubspace::from_set(alg.group().inv(x.degree), set, x.dim)
}

/// All subspaces obtained as products of grading subspaces, sorted.
pub fn generated_semigroup<A: GradedBasis>(alg: &A, cap: usize) -> Result<Vec<GradedSubspace>, GradedError> {
    let gens = grading(alg);
    let mut seen: HashSet<GradedSubspace> = gens.iter().cloned().collect();
    let mut queue: VecDeque<GradedSubspace> = gens.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = subspace_product(alg, &x, g)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(GradedError::CapExceeded { cap });
                }
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<GradedSubspace> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `B^a = span{(E, deg a) : E ⊇ supp a}`.
pub fn b_of(alg: &StructureAlgebra, a: &SgElement) -> Result<GradedSubspace, GradedError> {
    if alg.index_of(a).is_none() {
        return Err(GradedError::NotInBasis);
    }
    let set = (0..alg.dim())
        .filter(|&i| {
            let b = &alg.basis()[i];
            b.degree() == a.degree() && b.support().is_superset(a.support())
        })
        .collect();
    Ok(GradedSubspace::from_set(a.degree(), set, alg.dim()))
}

/// `(a, B^a)` for every element of `S(G)`, in enumeration order.
pub fn b_map(alg: &StructureAlgebra) -> Result<Vec<(SgElement, GradedSubspace)>, GradedError> {
    let elements = Sg::new(alg.group()).enumerate_with_cap(alg.group().order())?;
    elements.into_iter().map(|a| b_of(alg, &a).map(|b| (a, b))).collect()
}
