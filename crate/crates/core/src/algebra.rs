//! The semigroup algebra `C[S(G)]` with its multiplicative basis, and its numerical
//! Wedderburn decomposition.
//!
//! The basis element `(E, s)` is the monomial `P_E δ_s` of the partial crossed product, and the
//! product rule `(P_E δ_r)(P_F δ_s) = P_{E ∪ rF} δ_{rs}` is exactly the multiplication of `S(G)`.
//! The algebra is therefore modelled as the semigroup algebra itself, with structure constants
//! that are all `0` or `1`.

use std::collections::HashMap;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::eigen::{hermitian_eigen, numerical_rank, symmetric_eigen, EigenError};
use crate::group::{FiniteGroup, GroupElement};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};
use crate::sg::{index_map, order_formula, Sg, SgElement, SgError};

/// Largest algebra dimension [`StructureAlgebra::build`] accepts by default.
pub const DEFAULT_ALGEBRA_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("algebra dimension {dim} exceeds the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("coefficient vector has length {got}, algebra has dimension {dim}")]
    DimensionMismatch { got: usize, dim: usize },
    #[error("ambiguous numerical rank: eigenvalue {value:e} of the commutator form is neither zero nor separated")]
    RankAmbiguous { value: f64 },
    #[error("trace form is not positive definite (smallest eigenvalue {0:e})")]
    DegenerateTraceForm(f64),
    #[error("eigenvalue clusters are ambiguous ({clusters} clusters for a {center_dim}-dimensional center, smallest gap {gap:e}); reseed")]
    EigenvalueClusterAmbiguous { clusters: usize, center_dim: usize, gap: f64 },
    #[error("block has non-square dimension {rank} (cluster size {multiplicity})")]
    NonIntegerBlockDim { rank: usize, multiplicity: usize },
    #[error("central idempotent residual {residual:e} exceeds {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Semigroup(#[from] SgError),
}

/// `C[S(G)]` through its basis-indexed multiplication table and basis involution.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    group: FiniteGroup,
    basis: Vec<SgElement>,
    index: HashMap<SgElement, usize>,
    mult: Vec<u32>,
    star: Vec<usize>,
    unit: usize,
}

impl StructureAlgebra {
    pub fn build(group: &FiniteGroup) -> Result<Self, AlgebraError> {
        Self::build_with_cap(group, DEFAULT_ALGEBRA_CAP)
    }

    pub fn build_with_cap(group: &FiniteGroup, cap: usize) -> Result<Self, AlgebraError> {
        let p = group.order();
        let dim = if p < 2 {
            1
        } else {
            order_formula(p as u64).map_or(usize::MAX, |n| usize::try_from(n).unwrap_or(usize::MAX))
        };
        if dim > cap {
            return Err(AlgebraError::CapExceeded { dim, cap });
        }
        let sg = Sg::new(group);
        let basis = sg.enumerate_with_cap(p)?;
        let index = index_map(&basis);
        let n = basis.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &basis {
            for b in &basis {
                mult.push(index[&sg.multiply(a, b)] as u32);
            }
        }
        let star = basis.iter().map(|a| index[&sg.star(a)]).collect();
        let unit = index[&sg.unit()];
        Ok(StructureAlgebra { group: group.clone(), basis, index, mult, star, unit })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SgElement] {
        &self.basis
    }

    pub fn index_of(&self, a: &SgElement) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Index of the product of basis elements `i` and `j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.dim() + j] as usize
    }

    #[inline]
    pub fn star_index(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit<T: Scalar>(&self) -> AlgebraElement<T> {
        AlgebraElement::basis(self.dim(), self.unit)
    }

    /// Index of `u_t = P_{{e,t}} δ_t`, the basis element of `[t]`.
    pub fn canonical_u_index(&self, t: GroupElement) -> usize {
        self.index[&Sg::new(&self.group).generator(t)]
    }

    pub fn canonical_u<T: Scalar>(&self, t: GroupElement) -> AlgebraElement<T> {
        AlgebraElement::basis(self.dim(), self.canonical_u_index(t))
    }

    fn check<T>(&self, x: &AlgebraElement<T>) -> Result<(), AlgebraError> {
        if x.coeffs.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { got: x.coeffs.len(), dim: self.dim() });
        }
        Ok(())
    }

    /// Bilinear extension of the basis product.
    pub fn multiply<T: Scalar>(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Result<AlgebraElement<T>, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply_unchecked(x, y))
    }

    fn multiply_unchecked<T: Scalar>(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let row = &self.mult[i * n..(i + 1) * n];
            for (j, yj) in y.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let k = row[j] as usize;
                out[k] = out[k].clone() + xi.clone() * yj.clone();
            }
        }
        AlgebraElement { coeffs: out }
    }

    /// Conjugate-linear extension of the basis involution.
    pub fn star<T: Scalar>(&self, x: &AlgebraElement<T>) -> Result<AlgebraElement<T>, AlgebraError> {
        self.check(x)?;
        let mut out = vec![T::zero(); self.dim()];
        for (i, c) in x.coeffs.iter().enumerate() {
            out[self.star[i]] = c.conj();
        }
        Ok(AlgebraElement { coeffs: out })
    }

    /// Matrix of `y ↦ x·y` in the basis.
    pub fn left_regular_matrix<T: Scalar>(&self, x: &AlgebraElement<T>) -> Result<Matrix<T>, AlgebraError> {
        self.check(x)?;
        let n = self.dim();
        let mut m = Matrix::<T>::zeros(n, n);
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let k = self.product(i, j);
                m[(k, j)] = m[(k, j)].clone() + xi.clone();
            }
        }
        Ok(m)
    }

    /// `tr L(b_i)`: the number of basis elements fixed by left multiplication with `b_i`.
    pub fn regular_traces(&self) -> Vec<u64> {
        let n = self.dim();
        (0..n).map(|i| (0..n).filter(|&j| self.product(i, j) == j).count() as u64).collect()
    }

    /// Gram matrix `W_ij = tr L(b_j* b_i)` of the regular trace form.
    pub fn trace_form(&self) -> Vec<Vec<u64>> {
        let tr = self.regular_traces();
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| tr[self.product(self.star[j], i)]).collect()).collect()
    }

    /// `Σ_i (L(b_i) − R(b_i))ᵀ (L(b_i) − R(b_i))`, whose kernel is the center.
    fn commutator_form(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut k = vec![vec![0i64; n]; n];
        for i in 0..n {
            for c in 0..n {
                let (ic, ci) = (self.product(i, c), self.product(c, i));
                if ic == ci {
                    continue;
                }
                for d in 0..n {
                    let (id, di) = (self.product(i, d), self.product(d, i));
                    if id == di {
                        continue;
                    }
                    let dot = (ic == id) as i64 - (ic == di) as i64 - (ci == id) as i64 + (ci == di) as i64;
                    k[c][d] += dot;
                }
            }
        }
        k
    }

    /// An orthonormal basis of the center, as the null space of the commutator system.
    pub fn center<F: Real>(&self) -> Result<Vec<AlgebraElement<F>>, AlgebraError> {
        let k = self.commutator_form();
        let n = self.dim();
        let m = Matrix::from_fn(n, n, |i, j| F::from(k[i][j]).unwrap());
        let (values, vectors) = symmetric_eigen(&m)?;
        let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.to_f64().unwrap().abs()));
        let mut basis = Vec::new();
        for (col, v) in values.iter().enumerate() {
            let v = v.to_f64().unwrap();
            if v.abs() <= CENTER_NULL_TOL * scale {
                basis.push(AlgebraElement { coeffs: (0..n).map(|r| vectors[(r, col)]).collect() });
            } else if v.abs() <= CENTER_GAP_TOL * scale {
                return Err(AlgebraError::RankAmbiguous { value: v });
            }
        }
        Ok(basis)
    }

    /// Splits the algebra into matrix blocks `M_{n_1} ⊕ ⋯ ⊕ M_{n_k}`.
    ///
    /// A random self-adjoint central element `z` acts on block `i` as a real scalar `λ_i`. Its
    /// coefficients are complex so that conjugate pairs of blocks get distinct scalars. The
    /// eigenvalues of `L(z)` are found after symmetrizing with the square root of the
    /// (positive definite) regular trace form, clustered, and turned into central idempotents
    /// `z_i = ∏_{j ≠ i} (z − λ_j)/(λ_i − λ_j)`. Each block size is `sqrt(dim z_i A)`.
    pub fn wedderburn<F: Real>(&self, seed: u64, opts: &WedderburnOptions) -> Result<BlockDecomposition<F>, AlgebraError> {
        let n = self.dim();
        let center = self.center::<F>()?;
        let k = center.len();
        let cplx = |x: F| Complex::new(x, F::zero());

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut z = AlgebraElement::<Complex<F>>::zero(n);
        for c in &center {
            let u = Complex::new(F::from(rng.gen::<f64>()).unwrap(), F::from(rng.gen::<f64>()).unwrap());
            z = z.add(&AlgebraElement::new(c.coeffs.iter().map(|&x| cplx(x) * u).collect()));
        }
        let half = cplx(F::from(0.5).unwrap());
        z = z.add(&self.star(&z)?).scale(half);

        let (sqrt_w, inv_sqrt_w) = self.trace_form_roots::<F>()?;
        let lz = self.left_regular_matrix(&z)?;
        let h = sqrt_w.map(|&x| cplx(x)).mul(&lz).mul(&inv_sqrt_w.map(|&x| cplx(x)));
        let sym = h.try_add(&h.adjoint()).expect("square").scale(&half);
        let eig = hermitian_eigen(&sym)?;
        let values: Vec<f64> = eig.values.iter().map(|v| v.to_f64().unwrap()).collect();

        let clusters = cluster(&values, opts.cluster_gap);
        let min_gap = clusters
            .windows(2)
            .map(|w| w[1].center - w[0].center)
            .fold(f64::INFINITY, f64::min);
        if clusters.len() != k || min_gap < 10.0 * opts.cluster_gap {
            return Err(AlgebraError::EigenvalueClusterAmbiguous { clusters: clusters.len(), center_dim: k, gap: min_gap });
        }

        let unit = self.unit::<Complex<F>>();
        let lambdas: Vec<F> = clusters.iter().map(|c| F::from(c.center).unwrap()).collect();
        let lagrange: Vec<_> = (0..k)
            .map(|i| {
                let mut zi = unit.clone();
                for j in (0..k).filter(|&j| j != i) {
                    let factor = z
                        .sub(&unit.scale(cplx(lambdas[j])))
                        .scale(cplx(F::one() / (lambdas[i] - lambdas[j])));
                    zi = self.multiply_unchecked(&zi, &factor);
                }
                self.polish(zi)
            })
            .collect();

        let (idempotents, residual, blocks) = match self.check_idempotents(lagrange, &clusters, opts) {
            Ok(found) => found,
            Err(_) => {
                // With many close eigenvalues the interpolation is ill-conditioned. Fall back to
                // z_i = P_i · 1, where P_i = W^{-1/2} V_i V_i† W^{1/2} is the spectral projector of L(z).
                let zero = Complex::new(F::zero(), F::zero());
                let unit_col: Vec<Complex<F>> = (0..n).map(|r| cplx(sqrt_w[(r, self.unit)])).collect();
                let projected = clusters
                    .iter()
                    .map(|cl| {
                        let mut v = vec![zero; n];
                        for c in cl.start..cl.start + cl.size {
                            let coef = (0..n).fold(zero, |acc, r| acc + eig.vectors[(r, c)].conj() * unit_col[r]);
                            for (r, x) in v.iter_mut().enumerate() {
                                *x = *x + eig.vectors[(r, c)] * coef;
                            }
                        }
                        let coeffs = (0..n)
                            .map(|r| (0..n).fold(zero, |acc, c| acc + v[c] * cplx(inv_sqrt_w[(r, c)])))
                            .collect();
                        self.polish(AlgebraElement::new(coeffs))
                    })
                    .collect();
                self.check_idempotents(projected, &clusters, opts)?
            }
        };

        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| blocks[i]);
        Ok(BlockDecomposition {
            dim: n,
            center_dim: k,
            blocks: order.iter().map(|&i| blocks[i]).collect(),
            eigenvalues: order.iter().map(|&i| lambdas[i]).collect(),
            idempotents: order.iter().map(|&i| idempotents[i].clone()).collect(),
            residual,
        })
    }

    /// Accepts candidate central idempotents if their residual is within tolerance and each
    /// `z_i A z_i` has dimension `n_i²` equal to its eigenvalue multiplicity.
    #[allow(clippy::type_complexity)]
    fn check_idempotents<F: Real>(
        &self,
        idempotents: Vec<AlgebraElement<Complex<F>>>,
        clusters: &[Cluster],
        opts: &WedderburnOptions,
    ) -> Result<(Vec<AlgebraElement<Complex<F>>>, f64, Vec<usize>), AlgebraError> {
        let n = self.dim();
        let residual = self.idempotent_residual(&idempotents);
        if !(residual <= opts.tolerance) {
            return Err(AlgebraError::ResidualTooLarge { residual, tolerance: opts.tolerance });
        }
        let mut blocks = Vec::with_capacity(clusters.len());
        for (zi, cl) in idempotents.iter().zip(clusters) {
            // Complex rank r of the rows equals half the real rank of {v, i·v} written over R.
            let mut rows: Vec<Vec<F>> = Vec::with_capacity(2 * n);
            for j in 0..n {
                let b = AlgebraElement::basis(n, j);
                let v = self.multiply_unchecked(&self.multiply_unchecked(zi, &b), zi).coeffs;
                rows.push(v.iter().map(|c| c.re).chain(v.iter().map(|c| c.im)).collect());
                rows.push(v.iter().map(|c| -c.im).chain(v.iter().map(|c| c.re)).collect());
            }
            let rank = numerical_rank(&rows, F::from(opts.pivot_tol).unwrap()) / 2;
            let root = (rank as f64).sqrt();
            let size = root.round() as usize;
            if (root - size as f64).abs() > opts.tolerance || rank != cl.size {
                return Err(AlgebraError::NonIntegerBlockDim { rank, multiplicity: cl.size });
            }
            blocks.push(size);
        }
        let total: usize = blocks.iter().map(|b| b * b).sum();
        if total != n {
            return Err(AlgebraError::NonIntegerBlockDim { rank: total, multiplicity: n });
        }
        Ok((idempotents, residual, blocks))
    }

    /// Newton steps `x ← 3x² − 2x³` towards the nearest idempotent in the algebra generated
    /// by `x`. Estimates that are not already close are returned unchanged, since the
    /// iteration could then settle on the wrong idempotent.
    fn polish<F: Real>(&self, mut x: AlgebraElement<Complex<F>>) -> AlgebraElement<Complex<F>> {
        let three = Complex::new(F::from(3.0).unwrap(), F::zero());
        let two = Complex::new(F::from(2.0).unwrap(), F::zero());
        for step in 0..POLISH_STEPS {
            let x2 = self.multiply_unchecked(&x, &x);
            let dev = x2.max_abs_diff(&x);
            if dev <= 4.0 * F::epsilon().to_f64().unwrap() || (step == 0 && !(dev <= POLISH_START)) {
                break;
            }
            let x3 = self.multiply_unchecked(&x2, &x);
            x = x2.scale(three).sub(&x3.scale(two));
        }
        x
    }

    /// `W^{1/2}` and `W^{-1/2}` for the regular trace form `W`.
    fn trace_form_roots<F: Real>(&self) -> Result<(Matrix<F>, Matrix<F>), AlgebraError> {
        let w = self.trace_form();
        let n = self.dim();
        let wm = Matrix::from_fn(n, n, |i, j| F::from(w[i][j]).unwrap());
        let (values, v) = symmetric_eigen(&wm)?;
        let smallest = values.first().map_or(1.0, |x| x.to_f64().unwrap());
        let largest = values.last().map_or(1.0, |x| x.to_f64().unwrap());
        if smallest <= 1e-9 * largest.max(1.0) {
            return Err(AlgebraError::DegenerateTraceForm(smallest));
        }
        let root = |pow: F| {
            let d: Vec<F> = values.iter().map(|x| x.powf(pow)).collect();
            Matrix::from_fn(n, n, |i, j| (0..n).fold(F::zero(), |acc, c| acc + v[(i, c)] * d[c] * v[(j, c)]))
        };
        let half = F::from(0.5).unwrap();
        Ok((root(half), root(-half)))
    }

    /// Largest violation of `z_i z_j = δ_ij z_i`, `Σ z_i = 1` and centrality.
    pub fn idempotent_residual<T: Scalar>(&self, idempotents: &[AlgebraElement<T>]) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        let mut sum = AlgebraElement::<T>::zero(n);
        for (i, zi) in idempotents.iter().enumerate() {
            sum = sum.add(zi);
            for (j, zj) in idempotents.iter().enumerate() {
                let prod = self.multiply_unchecked(zi, zj);
                let expect = if i == j { zi.clone() } else { AlgebraElement::zero(n) };
                worst = worst.max(prod.max_abs_diff(&expect));
            }
            for b in 0..n {
                let basis = AlgebraElement::basis(n, b);
                let left = self.multiply_unchecked(zi, &basis);
                let right = self.multiply_unchecked(&basis, zi);
                worst = worst.max(left.max_abs_diff(&right));
            }
        }
        worst.max(sum.max_abs_diff(&self.unit()))
    }
}

const CENTER_NULL_TOL: f64 = 1e-9;
const CENTER_GAP_TOL: f64 = 1e-5;
const POLISH_STEPS: usize = 6;
const POLISH_START: f64 = 1e-2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WedderburnOptions {
    /// Bound on idempotent residuals and on the distance of `sqrt(rank)` from an integer.
    pub tolerance: f64,
    /// Sorted eigenvalues further apart than this start a new cluster.
    pub cluster_gap: f64,
    /// Relative pivot threshold for the rank of `z_i A z_i`.
    pub pivot_tol: f64,
}

impl Default for WedderburnOptions {
    fn default() -> Self {
        WedderburnOptions { tolerance: 1e-6, cluster_gap: 1e-6, pivot_tol: 1e-8 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition<F> {
    pub dim: usize,
    pub center_dim: usize,
    /// Matrix block sizes `n_i`, ascending.
    pub blocks: Vec<usize>,
    /// The scalar by which the sampled central element acts on each block.
    pub eigenvalues: Vec<F>,
    #[serde(skip)]
    pub idempotents: Vec<AlgebraElement<Complex<F>>>,
    pub residual: f64,
}

struct Cluster {
    center: f64,
    start: usize,
    size: usize,
}

fn cluster(sorted: &[f64], gap: f64) -> Vec<Cluster> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((sum, size, last)) if v - *last <= gap => {
                *sum += v;
                *size += 1;
                *last = v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    let mut start = 0;
    out.into_iter()
        .map(|(sum, size, _)| {
            let c = Cluster { center: sum / size as f64, start, size };
            start += size;
            c
        })
        .collect()
}

/// A coefficient vector over the basis of a [`StructureAlgebra`].
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement { coeffs: vec![T::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coeffs[i] = T::one();
        x
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, k: T) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a.clone() * k.clone()).collect() }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a.clone() - b.clone()).magnitude()).fold(0.0, f64::max)
    }

    /// `‖x‖_∞`.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn z4() -> StructureAlgebra {
        StructureAlgebra::build(&FiniteGroup::cyclic(4).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(z4().dim(), 20);
        assert_eq!(StructureAlgebra::build(&FiniteGroup::cyclic(2).unwrap()).unwrap().dim(), 3);
        assert_eq!(StructureAlgebra::build(&FiniteGroup::trivial()).unwrap().dim(), 1);
        let err = StructureAlgebra::build(&FiniteGroup::cyclic(9).unwrap()).unwrap_err();
        assert_eq!(err, AlgebraError::CapExceeded { dim: 1280, cap: DEFAULT_ALGEBRA_CAP });
    }

    #[test]
    fn table_matches_semigroup() {
        let a = z4();
        let sg = Sg::new(a.group());
        for s in a.group().elements() {
            for t in a.group().elements() {
                let (us, ut) = (a.canonical_u_index(s), a.canonical_u_index(t));
                let expect = sg.multiply(&sg.epsilon(s), &sg.generator(a.group().mul(s, t)));
                assert_eq!(a.basis()[a.product(us, ut)], expect);
            }
        }
    }

    #[test]
    fn canonical_u_identities() {
        let a = z4();
        let g = a.group().clone();
        let u = |t: usize| a.canonical_u::<i64>(GroupElement(t));
        assert_eq!(u(0), a.unit());
        for t in g.elements() {
            let ti = g.inv(t);
            assert_eq!(a.star(&u(t.0)).unwrap(), u(ti.0));
            for s in g.elements() {
                let st = g.mul(s, t);
                let lhs = a.multiply(&a.multiply(&u(s.0), &u(t.0)).unwrap(), &u(ti.0)).unwrap();
                let rhs = a.multiply(&u(st.0), &u(ti.0)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let sq = a.multiply(&u(1), &u(1)).unwrap();
        let target = Sg::new(&g).element([0, 1, 2].into_iter().map(GroupElement).collect(), GroupElement(2)).unwrap();
        assert_eq!(sq, AlgebraElement::basis(20, a.index_of(&target).unwrap()));
    }

    #[test]
    fn element_arithmetic() {
        let a = z4();
        let x = AlgebraElement::new((0..20).map(|i| Complex64::new(i as f64, 1.0)).collect());
        assert_eq!(a.multiply(&a.unit(), &x).unwrap(), x);
        assert_eq!(a.multiply(&x, &a.unit()).unwrap(), x);
        let short = AlgebraElement::<i64>::zero(3);
        assert_eq!(
            a.multiply(&short, &a.unit()),
            Err(AlgebraError::DimensionMismatch { got: 3, dim: 20 })
        );
        for i in [0, 5, 19] {
            for j in [1, 7, 12] {
                let p = a.multiply(&AlgebraElement::<i64>::basis(20, i), &AlgebraElement::basis(20, j)).unwrap();
                assert_eq!(p, AlgebraElement::basis(20, a.product(i, j)));
            }
        }
    }

    #[test]
    fn regular_matrices() {
        let a = z4();
        assert_eq!(a.left_regular_matrix(&a.unit::<i64>()).unwrap(), Matrix::identity(20));
        let l = a.left_regular_matrix(&AlgebraElement::<i64>::basis(20, 7)).unwrap();
        for j in 0..20 {
            let col: Vec<i64> = (0..20).map(|r| l[(r, j)]).collect();
            assert_eq!(col.iter().sum::<i64>(), 1);
            assert_eq!(col[a.product(7, j)], 1);
        }
        let x = AlgebraElement::new((0..20).map(|i| (i * i % 7) as i64).collect());
        let lx = a.left_regular_matrix(&x).unwrap();
        let unit_col: Vec<i64> = (0..20).map(|r| lx[(r, a.unit_index())]).collect();
        assert_eq!(unit_col, x.coeffs());
    }

    #[test]
    fn commutative_case_center() {
        let a = StructureAlgebra::build(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        assert_eq!(a.center::<f64>().unwrap().len(), 3);
    }

    #[test]
    fn trace_form_is_symmetric() {
        let w = z4().trace_form();
        for i in 0..20 {
            for j in 0..20 {
                assert_eq!(w[i][j], w[j][i]);
            }
        }
    }

    #[test]
    fn decomposition_of_z2() {
        let a = StructureAlgebra::build(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        let d = a.wedderburn::<f64>(1, &WedderburnOptions::default()).unwrap();
        assert_eq!(d.blocks, vec![1, 1, 1]);
        assert_eq!(d.center_dim, 3);
    }

    #[test]
    fn decomposition_of_trivial_group() {
        let a = StructureAlgebra::build(&FiniteGroup::trivial()).unwrap();
        let d = a.wedderburn::<f64>(0, &WedderburnOptions::default()).unwrap();
        assert_eq!(d.blocks, vec![1]);
    }

    #[test]
    fn decomposition_of_z4_and_klein4() {
        for (g, blocks, center) in [
            (FiniteGroup::cyclic(4).unwrap(), vec![1, 1, 1, 1, 1, 1, 1, 2, 3], 9),
            (FiniteGroup::klein4(), vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3], 12),
        ] {
            let a = StructureAlgebra::build(&g).unwrap();
            for seed in [0, 1, 2] {
                let d = a.wedderburn::<f64>(seed, &WedderburnOptions::default()).unwrap();
                assert_eq!(d.blocks, blocks);
                assert_eq!(d.center_dim, center);
                assert!(d.residual <= 1e-6);
            }
        }
    }
}
