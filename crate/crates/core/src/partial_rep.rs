//! Partial representations of a finite group on `C^n` (or on any [`Scalar`] module) and their
//! extension to `*`-representations of `S(G)`.

use std::collections::HashMap;
use std::marker::PhantomData;

use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupElement};
use crate::matrix::Matrix;
use crate::partial_action::PartialAction;
use crate::scalar::Scalar;
use crate::sg::{index_map, Sg, SgElement, SgError};
use crate::universal::{SemigroupTarget, UniversalHom};

/// Default tolerance for floating-point inputs. Exact scalars should use `0.0`.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("expected {expected} matrices, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("matrix for {element} has shape {shape:?}, expected {dim}x{dim}")]
    DimensionMismatch { element: usize, shape: (usize, usize), dim: usize },
    #[error("not a partial representation: {0:?}")]
    Invalid(RepReport),
    #[error("partial action is invalid")]
    InvalidAction,
    #[error("not multiplicative at {a:?} * {b:?} (deviation {deviation:e})")]
    NotMultiplicative { a: SgElement, b: SgElement, deviation: f64 },
    #[error("image of {a:?}* is not the adjoint (deviation {deviation:e})")]
    NotStarPreserving { a: SgElement, deviation: f64 },
    #[error("image of {a:?} is not a partial isometry (deviation {deviation:e})")]
    NotPartialIsometry { a: SgElement, deviation: f64 },
    #[error("the unit is not sent to the identity (deviation {0:e})")]
    UnitNotIdentity(f64),
    #[error(transparent)]
    Semigroup(#[from] SgError),
}

/// A map `t ↦ M_t` from a group to square matrices of one size.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialRep<T> {
    group: FiniteGroup,
    dim: usize,
    matrices: Vec<Matrix<T>>,
}

/// Largest entrywise deviation for each defining identity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RepReport {
    pub tolerance: f64,
    /// `M_s M_t M_{t⁻¹} = M_{st} M_{t⁻¹}`
    pub absorption: f64,
    /// `M_{t⁻¹} = M_t†`
    pub adjoint: f64,
    /// `M_e = I`
    pub unit: f64,
    /// `M_{s⁻¹} M_s M_t = M_{s⁻¹} M_{st}`, implied by the other three.
    pub derived: f64,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        self.absorption <= self.tolerance && self.adjoint <= self.tolerance && self.unit <= self.tolerance
    }
}

impl<T: Scalar> PartialRep<T> {
    pub fn new(group: FiniteGroup, matrices: Vec<Matrix<T>>) -> Result<Self, RepError> {
        if matrices.len() != group.order() {
            return Err(RepError::WrongCount { expected: group.order(), got: matrices.len() });
        }
        let dim = matrices[0].rows();
        for (i, m) in matrices.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(RepError::DimensionMismatch { element: i, shape: m.shape(), dim });
            }
        }
        Ok(PartialRep { group, dim, matrices })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, t: GroupElement) -> &Matrix<T> {
        &self.matrices[t.0]
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.matrices
    }

    pub fn validate(&self, tolerance: f64) -> RepReport {
        let g = &self.group;
        let m = |t: GroupElement| &self.matrices[t.0];
        let mut rep = RepReport { tolerance, absorption: 0.0, adjoint: 0.0, unit: 0.0, derived: 0.0 };
        rep.unit = m(g.identity()).max_abs_diff(&Matrix::identity(self.dim));
        for t in g.elements() {
            let ti = g.inv(t);
            rep.adjoint = rep.adjoint.max(m(ti).max_abs_diff(&m(t).adjoint()));
            for s in g.elements() {
                let st = g.mul(s, t);
                let si = g.inv(s);
                let lhs = m(s).mul(m(t)).mul(m(ti));
                let rhs = m(st).mul(m(ti));
                rep.absorption = rep.absorption.max(lhs.max_abs_diff(&rhs));
                let lhs = m(si).mul(m(s)).mul(m(t));
                let rhs = m(si).mul(m(st));
                rep.derived = rep.derived.max(lhs.max_abs_diff(&rhs));
            }
        }
        rep
    }

    /// `(M_t)_{y,x} = 1` iff `θ_t(x) = y`.
    pub fn from_partial_action(action: &PartialAction) -> Result<Self, RepError> {
        if !action.validate_axioms().passed() {
            return Err(RepError::InvalidAction);
        }
        let n = action.set_size();
        let matrices = action
            .maps()
            .iter()
            .map(|f| {
                let mut m = Matrix::zeros(n, n);
                for (x, y) in f.pairs() {
                    m[(y, x)] = T::one();
                }
                m
            })
            .collect();
        Self::new(action.group().clone(), matrices)
    }

    /// The representation `π̃(F, s) = ∏_{r ∈ F} M_r M_{r⁻¹} · M_s`, tabulated over `S(G)`.
    pub fn extend_to_sg(&self, tolerance: f64) -> Result<SgRepresentation<T>, RepError> {
        let report = self.validate(tolerance);
        if !report.passed() {
            return Err(RepError::Invalid(report));
        }
        let target = MatrixTarget::new(tolerance);
        let hom = UniversalHom::new(&self.group, &target, self.matrices.clone())
            .map_err(|_| RepError::Invalid(report))?;
        let elements = Sg::new(&self.group).enumerate()?;
        let images = elements.iter().map(|a| hom.apply(a)).collect();
        SgRepresentation::from_images(self.group.clone(), images)
    }
}

/// Square matrices under multiplication, compared up to a tolerance.
pub struct MatrixTarget<T> {
    pub tolerance: f64,
    scalar: PhantomData<T>,
}

impl<T> MatrixTarget<T> {
    pub fn new(tolerance: f64) -> Self {
        MatrixTarget { tolerance, scalar: PhantomData }
    }
}

impl<T: Scalar> SemigroupTarget for MatrixTarget<T> {
    type Elem = Matrix<T>;

    fn op(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a.mul(b)
    }

    fn same(&self, a: &Matrix<T>, b: &Matrix<T>) -> bool {
        a.approx_eq(b, self.tolerance)
    }
}

/// A map `S(G) → matrices`, tabulated in `Sg::enumerate` order.
#[derive(Clone, Debug)]
pub struct SgRepresentation<T> {
    group: FiniteGroup,
    dim: usize,
    elements: Vec<SgElement>,
    index: HashMap<SgElement, usize>,
    images: Vec<Matrix<T>>,
}

impl<T: Scalar> SgRepresentation<T> {
    pub fn from_images(group: FiniteGroup, images: Vec<Matrix<T>>) -> Result<Self, RepError> {
        let elements = Sg::new(&group).enumerate()?;
        if images.len() != elements.len() {
            return Err(RepError::WrongCount { expected: elements.len(), got: images.len() });
        }
        let dim = images[0].rows();
        for (i, m) in images.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(RepError::DimensionMismatch { element: i, shape: m.shape(), dim });
            }
        }
        Ok(SgRepresentation { index: index_map(&elements), group, dim, elements, images })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[SgElement] {
        &self.elements
    }

    pub fn images(&self) -> &[Matrix<T>] {
        &self.images
    }

    pub fn image(&self, a: &SgElement) -> Option<&Matrix<T>> {
        self.index.get(a).map(|&i| &self.images[i])
    }

    /// Largest deviation of `ρ(ab) = ρ(a)ρ(b)`; errors with the first pair beyond `tolerance`.
    pub fn check_multiplicative(&self, tolerance: f64) -> Result<f64, RepError> {
        let sg = Sg::new(&self.group);
        let mut worst = 0.0f64;
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                let ab = self.index[&sg.multiply(a, b)];
                let dev = self.images[ab].max_abs_diff(&self.images[i].mul(&self.images[j]));
                if dev > tolerance {
                    return Err(RepError::NotMultiplicative { a: *a, b: *b, deviation: dev });
                }
                worst = worst.max(dev);
            }
        }
        Ok(worst)
    }

    /// Largest deviation of `ρ(a*) = ρ(a)†`.
    pub fn check_star(&self, tolerance: f64) -> Result<f64, RepError> {
        let sg = Sg::new(&self.group);
        let mut worst = 0.0f64;
        for (i, a) in self.elements.iter().enumerate() {
            let dev = self.images[self.index[&sg.star(a)]].max_abs_diff(&self.images[i].adjoint());
            if dev > tolerance {
                return Err(RepError::NotStarPreserving { a: *a, deviation: dev });
            }
            worst = worst.max(dev);
        }
        Ok(worst)
    }

    /// Largest deviation of `ρ(a) ρ(a)† ρ(a) = ρ(a)`.
    pub fn check_partial_isometries(&self, tolerance: f64) -> Result<f64, RepError> {
        let mut worst = 0.0f64;
        for (a, m) in self.elements.iter().zip(&self.images) {
            let dev = m.mul(&m.adjoint()).mul(m).max_abs_diff(m);
            if dev > tolerance {
                return Err(RepError::NotPartialIsometry { a: *a, deviation: dev });
            }
            worst = worst.max(dev);
        }
        Ok(worst)
    }

    pub fn check_unit(&self, tolerance: f64) -> Result<f64, RepError> {
        let unit = Sg::new(&self.group).unit();
        let dev = self.images[self.index[&unit]].max_abs_diff(&Matrix::identity(self.dim));
        if dev > tolerance {
            return Err(RepError::UnitNotIdentity(dev));
        }
        Ok(dev)
    }

    /// The partial representation `t ↦ ρ([t])`, after checking `ρ` is a unital
    /// `*`-representation.
    pub fn restrict_to_group(&self, tolerance: f64) -> Result<PartialRep<T>, RepError> {
        self.check_unit(tolerance)?;
        self.check_multiplicative(tolerance)?;
        self.check_star(tolerance)?;
        let sg = Sg::new(&self.group);
        let matrices = self
            .group
            .elements()
            .map(|t| self.images[self.index[&sg.generator(t)]].clone())
            .collect();
        PartialRep::new(self.group.clone(), matrices)
    }
}
