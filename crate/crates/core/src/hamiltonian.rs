//! The eight-level Yang-Baxter Hamiltonian H = R̆(θ)† H₀ R̆(θ), H₀ = s³ ⊗ I ⊗ I.
//!
//! Basis states |1⟩…|8⟩ are the three-qubit product states |000⟩…|111⟩ with
//! the first site most significant and spin-up (0) first. R̆ only couples the
//! spin-flip pairs (1,8), (2,7), (3,6), (4,5), so H splits into four 2×2
//! blocks, each a unit field Bᵢ = (sinθ cosφᵢ, sinθ sinφᵢ, cosθ) coupled to a
//! pseudo-spin ½ on its pair.

use crate::entangle::PureState;
use crate::error::{Error, Result};
use crate::linalg::{Complex, ComplexMatrix};
use crate::xform::{build_m, build_r, family_8x8, RMatrix};

/// Spin-flip pairs (1-based), in block order.
pub const PAIR_MAP: [(usize, usize); 4] = [(1, 8), (2, 7), (3, 6), (4, 5)];

pub const EIGEN_TOL: f64 = 1e-10;

pub fn build_h0() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[0.5, 0.5, 0.5, 0.5, -0.5, -0.5, -0.5, -0.5])
}

/// H = R̆† H₀ R̆ for an 8×8 gate.
pub fn conjugate_h(r: &RMatrix) -> Result<ComplexMatrix> {
    let m = r.matrix();
    if m.shape() != (8, 8) {
        return Err(Error::DimensionMismatch { op: "conjugate_h", left: m.shape(), right: (8, 8) });
    }
    let h = &(&m.dagger() * &build_h0()) * m;
    // H is Hermitian by construction; remove the rounding-level asymmetry
    Ok((&h + &h.dagger()).scale_real(0.5))
}

/// Convenience: build the family gate and conjugate.
pub fn hamiltonian(theta: f64, phis: [f64; 4]) -> Result<ComplexMatrix> {
    conjugate_h(&family_r(theta, phis)?)
}

pub fn family_r(theta: f64, phis: [f64; 4]) -> Result<RMatrix> {
    let [p1, p2, p3, p4] = phis;
    Ok(build_r(&build_m(&family_8x8(p1, p2, p3, p4)?)?, theta))
}

/// Pseudo-spin operators (S⁺, S⁻, S³) on the i-th pair (i = 1…4).
pub fn pseudo_spin(i: usize) -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let (hi, lo) = PAIR_MAP[i - 1];
    let (hi, lo) = (hi - 1, lo - 1);
    let mut plus = ComplexMatrix::zeros(8, 8);
    plus[(hi, lo)] = Complex::new(1.0, 0.0);
    let minus = plus.dagger();
    let mut s3 = ComplexMatrix::zeros(8, 8);
    s3[(hi, hi)] = Complex::new(0.5, 0.0);
    s3[(lo, lo)] = Complex::new(-0.5, 0.0);
    (plus, minus, s3)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldDecomposition {
    pub b_vectors: [[f64; 3]; 4],
    pub pair_map: [(usize, usize); 4],
}

impl FieldDecomposition {
    /// Σᵢ Bᵢˣ Sᵢˣ + Bᵢʸ Sᵢʸ + Bᵢᶻ Sᵢ³ with Sˣ = (S⁺+S⁻)/2, Sʸ = (S⁺−S⁻)/2i.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut h = ComplexMatrix::zeros(8, 8);
        for (i, b) in self.b_vectors.iter().enumerate() {
            let (sp, sm, s3) = pseudo_spin(i + 1);
            let sx = (&sp + &sm).scale_real(0.5);
            let sy = (&sp - &sm).scale(Complex::new(0.0, -0.5));
            h = &h + &sx.scale_real(b[0]);
            h = &h + &sy.scale_real(b[1]);
            h = &h + &s3.scale_real(b[2]);
        }
        h
    }
}

pub fn field_decomposition(theta: f64, phis: [f64; 4]) -> Result<FieldDecomposition> {
    family_8x8(phis[0], phis[1], phis[2], phis[3])?;
    let (st, ct) = theta.sin_cos();
    let b_vectors = phis.map(|p| [st * p.cos(), st * p.sin(), ct]);
    Ok(FieldDecomposition { b_vectors, pair_map: PAIR_MAP })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    Plus,
    Minus,
}

impl Sector {
    pub fn sign(self) -> f64 {
        match self {
            Sector::Plus => 1.0,
            Sector::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sector::Plus => '+',
            Sector::Minus => '-',
        }
    }

    pub fn tag(self) -> char {
        match self {
            Sector::Plus => 'p',
            Sector::Minus => 'm',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub energy: f64,
    pub state: PureState,
}

/// The eight analytic eigenpairs |e_i^±⟩, E_i^± = ±½.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledEigenpairs {
    pub theta: f64,
    pub phis: [f64; 4],
    plus: [Eigenpair; 4],
    minus: [Eigenpair; 4],
}

impl LabeledEigenpairs {
    /// `i` is 1-based.
    pub fn get(&self, i: usize, sector: Sector) -> &Eigenpair {
        match sector {
            Sector::Plus => &self.plus[i - 1],
            Sector::Minus => &self.minus[i - 1],
        }
    }

    pub fn vector(&self, i: usize, sector: Sector) -> &[Complex] {
        self.get(i, sector).state.amplitudes()
    }

    /// (i, sector, pair) ordered by index, then + before −.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Sector, &Eigenpair)> {
        (1..=4).flat_map(move |i| {
            [Sector::Plus, Sector::Minus].into_iter().map(move |s| (i, s, self.get(i, s)))
        })
    }

    /// Σᵢ (|eᵢ⁺⟩⟨eᵢ⁺| − |eᵢ⁻⟩⟨eᵢ⁻|), the spectral sum without the ½ weights.
    pub fn recast(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(8, 8);
        for (_, sector, pair) in self.iter() {
            let a = pair.state.amplitudes();
            acc = &acc + &ComplexMatrix::outer(a, a).scale_real(sector.sign());
        }
        acc
    }

    /// Σ E |e⟩⟨e|
    pub fn spectral_sum(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(8, 8);
        for (_, _, pair) in self.iter() {
            let a = pair.state.amplitudes();
            acc = &acc + &ComplexMatrix::outer(a, a).scale_real(pair.energy);
        }
        acc
    }
}

/// Closed-form eigenvectors
/// |eᵢ⁺⟩ = cos(θ/2)|i⟩ + sin(θ/2)e^{iφᵢ}|9−i⟩,
/// |eᵢ⁻⟩ = −sin(θ/2)e^{−iφᵢ}|i⟩ + cos(θ/2)|9−i⟩,
/// each checked against H to 1e-10.
pub fn labeled_eigenpairs(theta: f64, phis: [f64; 4]) -> Result<LabeledEigenpairs> {
    let h = hamiltonian(theta, phis)?;
    let (s, c) = (theta / 2.0).sin_cos();
    let make = |i: usize, sector: Sector| -> Result<Eigenpair> {
        let (hi, lo) = PAIR_MAP[i - 1];
        let phi = phis[i - 1];
        let mut amps = vec![Complex::new(0.0, 0.0); 8];
        match sector {
            Sector::Plus => {
                amps[hi - 1] = Complex::new(c, 0.0);
                amps[lo - 1] = Complex::from_polar(s, phi);
            }
            Sector::Minus => {
                amps[hi - 1] = -Complex::from_polar(s, -phi);
                amps[lo - 1] = Complex::new(c, 0.0);
            }
        }
        let energy = 0.5 * sector.sign();
        let hv = h.apply(&amps)?;
        let residual = hv
            .iter()
            .zip(&amps)
            .map(|(x, a)| (x - a * energy).norm())
            .fold(0.0, f64::max);
        if residual > EIGEN_TOL {
            return Err(Error::EigenpairCheck { label: format!("e{i}{}", sector.symbol()), residual });
        }
        Ok(Eigenpair { energy, state: PureState::new(amps, vec![2, 2, 2])? })
    };
    Ok(LabeledEigenpairs {
        theta,
        phis,
        plus: [make(1, Sector::Plus)?, make(2, Sector::Plus)?, make(3, Sector::Plus)?, make(4, Sector::Plus)?],
        minus: [
            make(1, Sector::Minus)?,
            make(2, Sector::Minus)?,
            make(3, Sector::Minus)?,
            make(4, Sector::Minus)?,
        ],
    })
}

/// Distances of the unweighted recast sum from H and from 2H.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecastCheck {
    pub vs_h: f64,
    pub vs_2h: f64,
}

pub fn recast_check(theta: f64, phis: [f64; 4]) -> Result<RecastCheck> {
    let h = hamiltonian(theta, phis)?;
    let recast = labeled_eigenpairs(theta, phis)?.recast();
    Ok(RecastCheck { vs_h: recast.max_abs_diff(&h), vs_2h: recast.max_abs_diff(&h.scale_real(2.0)) })
}

/// Entries of H outside the four pair blocks.
pub fn off_block_weight(h: &ComplexMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            if i != j && i + j != 7 {
                worst = worst.max(h[(i, j)].norm());
            }
        }
    }
    worst
}

/// The 2×2 block of `h` on the i-th pair (i = 1…4).
pub fn pair_block(h: &ComplexMatrix, i: usize) -> ComplexMatrix {
    let (hi, lo) = PAIR_MAP[i - 1];
    let idx = [hi - 1, lo - 1];
    ComplexMatrix::from_fn(2, 2, |r, c| h[(idx[r], idx[c])])
}
