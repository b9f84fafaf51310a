//! Dense complex linear algebra.
//!
//! Everything downstream works with matrices of dimension at most 18, so the
//! storage is a plain row-major `Vec` and the Hermitian eigensolver is a cyclic
//! Jacobi iteration.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const JACOBI_THRESHOLD: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const PSD_TOL: f64 = 1e-10;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount { rows, cols, found: entries.len() });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { rows, cols, data: entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_diagonal(diag: &[Complex]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<Complex> = diag.iter().map(|&x| Complex::new(x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    /// Column vector from amplitudes.
    pub fn column_vector(v: &[Complex]) -> Self {
        Self { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// |u⟩⟨v|
    pub fn outer(u: &[Complex], v: &[Complex]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn trace(&self) -> Complex {
        self.diagonal().into_iter().sum()
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex::new(s, 0.0))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |i, j| {
            self[(i / other.rows, j / other.cols)] * other[(i % other.rows, j % other.cols)]
        })
    }

    /// AB − BA.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if !self.is_square() || self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op: "commutator",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(&self.matmul(other)? - &other.matmul(self)?)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-entry distance; infinite when shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.shape() != other.shape() {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermitian_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol
    }

    /// ‖A†A − I‖_max
    pub fn unitarity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&self.dagger() * self).max_abs_diff(&Self::identity(self.rows))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "add: shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "sub: shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Panics on a shape mismatch; use [`ComplexMatrix::matmul`] for a fallible product.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        match self.matmul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.matmul(b)
}

pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    a.dagger()
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Embed a two-site operator acting on sites `position` and `position + 1` of a
/// chain with the given local dimensions.
pub fn embed_pair(op: &ComplexMatrix, site_dims: &[usize], position: usize) -> Result<ComplexMatrix> {
    if position + 1 >= site_dims.len() {
        return Err(Error::Subsystems(format!(
            "pair position {position} needs at least {} sites, chain has {}",
            position + 2,
            site_dims.len()
        )));
    }
    let pair = site_dims[position] * site_dims[position + 1];
    if op.shape() != (pair, pair) {
        return Err(Error::DimensionMismatch {
            op: "embed_pair",
            left: op.shape(),
            right: (pair, pair),
        });
    }
    let left: usize = site_dims[..position].iter().product();
    let right: usize = site_dims[position + 2..].iter().product();
    Ok(ComplexMatrix::identity(left).kron(op).kron(&ComplexMatrix::identity(right)))
}

/// Real eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn vector(&self, k: usize) -> Vec<Complex> {
        self.vectors.column(k)
    }

    /// V·diag(λ)·V†
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::from_real_diagonal(&self.values);
        &(&self.vectors * &d) * &self.vectors.dagger()
    }

    /// Orthogonal projector onto the span of eigenvectors whose eigenvalue lies within `tol` of `value`.
    pub fn projector(&self, value: f64, tol: f64) -> ComplexMatrix {
        let n = self.vectors.rows();
        let mut p = ComplexMatrix::zeros(n, n);
        for (k, &lambda) in self.values.iter().enumerate() {
            if (lambda - value).abs() <= tol {
                let v = self.vector(k);
                p = &p + &ComplexMatrix::outer(&v, &v);
            }
        }
        p
    }
}

fn check_hermitian(a: &ComplexMatrix, op: &'static str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { op, rows: a.rows(), cols: a.cols() });
    }
    let residual = a.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    Ok(())
}

fn max_off_diagonal(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                worst = worst.max(a[(i, j)].norm());
            }
        }
    }
    worst
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Each step picks an off-diagonal pair (p, q), strips the phase of `a[p][q]`
/// with a diagonal unitary, and applies the real Jacobi rotation that zeroes
/// the now-real pair. Sweeps continue until the largest off-diagonal modulus
/// is at most [`JACOBI_THRESHOLD`].
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<EigenSystem> {
    check_hermitian(a, "hermitian_eig")?;
    let n = a.rows();
    // symmetrize so rounding in the input cannot leak into the rotation angles
    let mut m = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let off = max_off_diagonal(&m);
        if off <= JACOBI_THRESHOLD {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_diagonal: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep column order
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&k| m[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigenSystem { values, vectors })
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = m.rows();
    let phase = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J = diag(1, conj(phase)) · [[c, s], [-s, c]] restricted to (p, q)
    let jpp = Complex::new(c, 0.0);
    let jpq = Complex::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    // M ← M·J (columns p, q)
    for i in 0..n {
        let mip = m[(i, p)];
        let miq = m[(i, q)];
        m[(i, p)] = mip * jpp + miq * jqp;
        m[(i, q)] = mip * jpq + miq * jqq;
    }
    // M ← J†·M (rows p, q)
    for j in 0..n {
        let mpj = m[(p, j)];
        let mqj = m[(q, j)];
        m[(p, j)] = jpp.conj() * mpj + jqp.conj() * mqj;
        m[(q, j)] = jpq.conj() * mpj + jqq.conj() * mqj;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = Complex::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex::new(m[(q, q)].re, 0.0);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * jpp + viq * jqp;
        v[(i, q)] = vip * jpq + viq * jqq;
    }
}

/// Principal square root of a Hermitian positive semidefinite matrix.
pub fn sqrt_psd(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(a)?;
    if let Some(&lowest) = eig.values.first() {
        if lowest < -PSD_TOL {
            return Err(Error::NegativeEigenvalue(lowest));
        }
    }
    let roots: Vec<f64> = clamp_rank_noise(&eig.values).iter().map(|x| x.sqrt()).collect();
    let d = ComplexMatrix::from_real_diagonal(&roots);
    Ok(&(&eig.vectors * &d) * &eig.vectors.dagger())
}

/// Zeroes eigenvalues below the numerical-rank cutoff `n·ε·max|λ|`, so square
/// roots of rounding noise (≈1e-8 for a 1e-16 eigenvalue) do not leak out.
pub fn clamp_rank_noise(values: &[f64]) -> Vec<f64> {
    let scale = values.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let cutoff = 16.0 * values.len() as f64 * f64::EPSILON * scale;
    values.iter().map(|&x| if x <= cutoff { 0.0 } else { x }).collect()
}

/// Partial transpose on the second factor of a `dim_a × dim_b` bipartition.
pub fn partial_transpose(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<ComplexMatrix> {
    let n = dim_a * dim_b;
    if rho.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            op: "partial_transpose",
            left: rho.shape(),
            right: (n, n),
        });
    }
    Ok(ComplexMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r / dim_b, r % dim_b);
        let (k, l) = (c / dim_b, c % dim_b);
        rho[(i * dim_b + l, k * dim_b + j)]
    }))
}

/// Reduced density matrix on the sites listed in `keep`, in ascending site order.
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    let total: usize = dims.iter().product();
    if rho.shape() != (total, total) {
        return Err(Error::DimensionMismatch {
            op: "partial_trace",
            left: rho.shape(),
            right: (total, total),
        });
    }
    if keep.is_empty() {
        return Err(Error::Subsystems("partial_trace needs at least one kept site".into()));
    }
    if let Some(&bad) = keep.iter().find(|&&s| s >= dims.len()) {
        return Err(Error::Subsystems(format!("site {bad} out of range for {} sites", dims.len())));
    }
    let kept: Vec<usize> = (0..dims.len()).filter(|s| keep.contains(s)).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|s| !keep.contains(s)).collect();
    let kept_dims: Vec<usize> = kept.iter().map(|&s| dims[s]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&s| dims[s]).collect();
    let out_dim: usize = kept_dims.iter().product();
    let env_dim: usize = traced_dims.iter().product();

    // digits of a full index, most significant site first
    let compose = |kept_idx: usize, env_idx: usize| -> usize {
        let mut digits = vec![0usize; dims.len()];
        let mut rem = kept_idx;
        for (pos, &s) in kept.iter().enumerate().rev() {
            digits[s] = rem % kept_dims[pos];
            rem /= kept_dims[pos];
        }
        let mut rem = env_idx;
        for (pos, &s) in traced.iter().enumerate().rev() {
            digits[s] = rem % traced_dims[pos];
            rem /= traced_dims[pos];
        }
        digits.iter().zip(dims).fold(0, |acc, (&d, &n)| acc * n + d)
    };

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for r in 0..out_dim {
        for c in 0..out_dim {
            out[(r, c)] = (0..env_dim).map(|e| rho[(compose(r, e), compose(c, e))]).sum();
        }
    }
    Ok(out)
}

/// Trace norm Σ|λᵢ| of a Hermitian matrix.
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eig(a)?.values.iter().map(|x| x.abs()).sum())
}

pub fn norm_sqr(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// ⟨u|v⟩
pub fn inner(u: &[Complex], v: &[Complex]) -> Complex {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}
