//! Entanglement measures for the states generated by the X-form gates.

use crate::error::{Error, Result};
use crate::linalg::{
    clamp_rank_noise, hermitian_eig, norm_sqr, partial_trace, partial_transpose, sqrt_psd, trace_norm_hermitian, Complex,
    ComplexMatrix, PSD_TOL,
};
use crate::xform::RMatrix;

pub const NORM_TOL: f64 = 1e-10;
pub const XFORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex>,
    dims: Vec<usize>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex>, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || dims.contains(&0) || total != amplitudes.len() {
            return Err(Error::Subsystems(format!(
                "{} amplitudes do not fit subsystem dimensions {dims:?}",
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let n2 = norm_sqr(&amplitudes);
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(Self { amplitudes, dims })
    }

    /// Rescales to unit norm before validating.
    pub fn normalized(amplitudes: Vec<Complex>, dims: Vec<usize>) -> Result<Self> {
        let n = norm_sqr(&amplitudes).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(n * n));
        }
        Self::new(amplitudes.into_iter().map(|z| z / n).collect(), dims)
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Same amplitudes viewed with a different subsystem split, e.g. a 4⊗2
    /// state as three qubits.
    pub fn with_dims(&self, dims: Vec<usize>) -> Result<Self> {
        Self::new(self.amplitudes.clone(), dims)
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            matrix: ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
            dims: self.dims.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity, each to 1e-10.
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || matrix.shape() != (total, total) {
            return Err(Error::Subsystems(format!(
                "{}x{} matrix does not fit subsystem dimensions {dims:?}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let herm = matrix.hermitian_residual();
        if herm > NORM_TOL {
            return Err(Error::NotDensityMatrix(format!("not Hermitian (residual {herm:.3e})")));
        }
        let tr = matrix.trace();
        if (tr - Complex::new(1.0, 0.0)).norm() > NORM_TOL {
            return Err(Error::NotDensityMatrix(format!("trace {tr} ≠ 1")));
        }
        let lowest = hermitian_eig(&matrix)?.values[0];
        if lowest < -PSD_TOL {
            return Err(Error::NotDensityMatrix(format!("eigenvalue {lowest:.3e} < 0")));
        }
        Ok(Self { matrix, dims })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

fn expect_dims(dims: &[usize], want: &[usize], what: &str) -> Result<()> {
    if dims != want {
        return Err(Error::Subsystems(format!("{what} needs subsystems {want:?}, got {dims:?}")));
    }
    Ok(())
}

/// The states |e_k⟩ = Σ_j R̆_{kj} |j⟩, i.e. the column of kets R̆·(|0⟩, …, |n−1⟩)ᵀ,
/// one per product basis state in basis order.
pub fn entangle_basis(r: &RMatrix) -> Vec<PureState> {
    let (d1, d2) = r.site_dims();
    let m = r.matrix();
    (0..m.rows())
        .map(|k| {
            let row = (0..m.cols()).map(|j| m[(k, j)]).collect();
            PureState::normalized(row, vec![d1, d2]).expect("R̆ is unitary")
        })
        .collect()
}

/// (‖ρ^{T_B}‖₁ − 1)/(d − 1) with d the smaller subsystem dimension.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let [da, db] = rho.dims() else {
        return Err(Error::Subsystems(format!(
            "negativity needs exactly two subsystems, got {}",
            rho.dims().len()
        )));
    };
    let d = (*da).min(*db);
    if d < 2 {
        return Err(Error::Subsystems("negativity needs both subsystems of dimension ≥ 2".into()));
    }
    let pt = partial_transpose(rho.matrix(), *da, *db)?;
    Ok((trace_norm_hermitian(&pt)? - 1.0) / (d as f64 - 1.0))
}

pub fn negativity_pure(psi: &PureState) -> Result<f64> {
    negativity(&psi.density())
}

/// |⟨ψ|σ_y⊗σ_y|ψ*⟩| = 2|ψ₀₀ψ₁₁ − ψ₀₁ψ₁₀|
pub fn concurrence_pure(psi: &PureState) -> Result<f64> {
    expect_dims(psi.dims(), &[2, 2], "concurrence_pure")?;
    let a = psi.amplitudes();
    Ok(2.0 * (a[0] * a[3] - a[1] * a[2]).norm())
}

fn sigma_yy() -> ComplexMatrix {
    // σ_y⊗σ_y: anti-diagonal (−1, 1, 1, −1)
    ComplexMatrix::from_fn(4, 4, |i, j| {
        if i + j == 3 {
            Complex::new(if i == 0 || i == 3 { -1.0 } else { 1.0 }, 0.0)
        } else {
            Complex::new(0.0, 0.0)
        }
    })
}

/// Wootters concurrence max{0, λ₁ − λ₂ − λ₃ − λ₄}, λᵢ the decreasing square
/// roots of the eigenvalues of √ρ ρ̃ √ρ with ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y).
pub fn concurrence_mixed(rho: &DensityMatrix) -> Result<f64> {
    expect_dims(rho.dims(), &[2, 2], "concurrence_mixed")?;
    let yy = sigma_yy();
    let tilde = &(&yy * &rho.matrix().conj()) * &yy;
    let root = sqrt_psd(rho.matrix())?;
    let mut r = &(&root * &tilde) * &root;
    // exact Hermitian symmetrization; the product drifts at rounding level
    r = (&r + &r.dagger()).scale_real(0.5);
    let eig = hermitian_eig(&r)?;
    let mut lambdas: Vec<f64> = clamp_rank_noise(&eig.values).iter().map(|x| x.sqrt()).collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Closed form for X-shaped two-qubit states:
/// 2·max{0, |ρ₁₄| − √(ρ₂₂ρ₃₃), |ρ₂₃| − √(ρ₁₁ρ₄₄)}.
pub fn concurrence_xstate(rho: &DensityMatrix) -> Result<f64> {
    expect_dims(rho.dims(), &[2, 2], "concurrence_xstate")?;
    let m = rho.matrix();
    let mut off: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                off = off.max(m[(i, j)].norm());
            }
        }
    }
    if off > XFORM_TOL {
        return Err(Error::NotXForm(off));
    }
    let p = |i: usize| m[(i, i)].re.max(0.0);
    let a = m[(0, 3)].norm() - (p(1) * p(2)).sqrt();
    let b = m[(1, 2)].norm() - (p(0) * p(3)).sqrt();
    Ok(2.0 * a.max(b).max(0.0))
}

/// Three-tangle τ₃ = 4|d₁ − 2d₂ + 4d₃| with amplitudes ψ₁…ψ₈ ↔ |000⟩…|111⟩
/// (first qubit most significant).
pub fn three_tangle(psi: &PureState) -> Result<f64> {
    expect_dims(psi.dims(), &[2, 2, 2], "three_tangle")?;
    let a = psi.amplitudes();
    let p = |k: usize| a[k - 1];
    let d1 = p(1) * p(1) * p(8) * p(8)
        + p(2) * p(2) * p(7) * p(7)
        + p(3) * p(3) * p(6) * p(6)
        + p(5) * p(5) * p(4) * p(4);
    let d2 = p(1) * p(8) * p(4) * p(5)
        + p(1) * p(8) * p(6) * p(3)
        + p(1) * p(8) * p(7) * p(2)
        + p(4) * p(5) * p(6) * p(3)
        + p(4) * p(5) * p(7) * p(2)
        + p(6) * p(3) * p(7) * p(2);
    let d3 = p(1) * p(7) * p(6) * p(4) + p(8) * p(2) * p(3) * p(5);
    Ok(4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm())
}

/// (C_AB, C_AC, C_BC) from the two-qubit reduced states.
pub fn pairwise_concurrences(psi: &PureState) -> Result<(f64, f64, f64)> {
    expect_dims(psi.dims(), &[2, 2, 2], "pairwise_concurrences")?;
    let rho = psi.density();
    let reduced = |keep: &[usize]| -> Result<f64> {
        let m = partial_trace(rho.matrix(), &[2, 2, 2], keep)?;
        concurrence_mixed(&DensityMatrix::new(m, vec![2, 2])?)
    };
    Ok((reduced(&[0, 1])?, reduced(&[0, 2])?, reduced(&[1, 2])?))
}

/// (|00⟩ + |11⟩)/√2
pub fn bell_state() -> PureState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = Complex::new(0.0, 0.0);
    PureState::new(vec![h.into(), z, z, h.into()], vec![2, 2]).unwrap()
}

/// (|000⟩ + |111⟩)/√2
pub fn ghz_state() -> PureState {
    let mut a = vec![Complex::new(0.0, 0.0); 8];
    a[0] = std::f64::consts::FRAC_1_SQRT_2.into();
    a[7] = std::f64::consts::FRAC_1_SQRT_2.into();
    PureState::new(a, vec![2, 2, 2]).unwrap()
}

/// (|001⟩ + |010⟩ + |100⟩)/√3
pub fn w_state() -> PureState {
    let mut a = vec![Complex::new(0.0, 0.0); 8];
    for k in [1, 2, 4] {
        a[k] = Complex::new(1.0, 0.0);
    }
    PureState::normalized(a, vec![2, 2, 2]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xform::{build_m, build_r, family_4x4, family_6x6, family_8x8};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn product_state(u: [Complex; 2], v: [Complex; 3]) -> PureState {
        let amps = u.iter().flat_map(|&x| v.iter().map(move |&y| x * y)).collect();
        PureState::normalized(amps, vec![2, 3]).unwrap()
    }

    /// Random X-shaped two-qubit density matrix: two PSD 2×2 blocks on
    /// {|00⟩,|11⟩} and {|01⟩,|10⟩}.
    fn random_xstate(rng: &mut impl Rng) -> DensityMatrix {
        let mut block = || {
            let p = rng.random_range(0.0..1.0f64);
            let q = rng.random_range(0.0..1.0f64);
            let mag = rng.random_range(0.0..1.0f64) * (p * q).sqrt();
            let phase = rng.random_range(-PI..PI);
            (p, q, Complex::from_polar(mag, phase))
        };
        let (p1, p4, x14) = block();
        let (p2, p3, x23) = block();
        let tr = p1 + p2 + p3 + p4;
        let mut m = ComplexMatrix::from_real_diagonal(&[p1 / tr, p2 / tr, p3 / tr, p4 / tr]);
        m[(0, 3)] = x14 / tr;
        m[(3, 0)] = x14.conj() / tr;
        m[(1, 2)] = x23 / tr;
        m[(2, 1)] = x23.conj() / tr;
        DensityMatrix::new(m, vec![2, 2]).unwrap()
    }

    #[test]
    fn state_validation() {
        assert!(matches!(PureState::new(vec![c(1., 0.), c(1., 0.)], vec![2]), Err(Error::NotNormalized(_))));
        assert!(PureState::new(vec![c(1., 0.)], vec![2]).is_err());
        assert!(PureState::normalized(vec![c(0., 0.); 2], vec![2]).is_err());
        let bad = ComplexMatrix::from_real_diagonal(&[0.5, 0.6]);
        assert!(DensityMatrix::new(bad, vec![2]).is_err());
        let neg = ComplexMatrix::from_real_diagonal(&[1.5, -0.5]);
        assert!(DensityMatrix::new(neg, vec![2]).is_err());
    }

    #[test]
    fn entangle_basis_4x4_matches_display() {
        let (theta, phi) = (0.8, 0.3);
        let states = entangle_basis(&build_r(&build_m(&family_4x4(phi)).unwrap(), theta));
        let (s, co) = (theta / 2.0).sin_cos();
        let e = |re: f64| c(re, 0.0);
        let want = [
            [e(co), e(0.), e(0.), -Complex::from_polar(s, -phi)],
            [e(0.), e(co), c(0., -s), e(0.)],
            [e(0.), c(0., -s), e(co), e(0.)],
            [Complex::from_polar(s, phi), e(0.), e(0.), e(co)],
        ];
        for (state, w) in states.iter().zip(want) {
            assert_eq!(state.dims(), &[2, 2]);
            let dist = state.amplitudes().iter().zip(w.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            assert!(dist < 1e-15, "{state:?}");
        }
    }

    #[test]
    fn entangle_basis_6x6_matches_display() {
        let (theta, p1, p2) = (1.3, 0.7, -0.5);
        let states = entangle_basis(&build_r(&build_m(&family_6x6(p1, p2)).unwrap(), theta));
        let (s, co) = (theta / 2.0).sin_cos();
        let mis = |phase: f64| Complex::new(0.0, -s) * Complex::from_polar(1.0, phase);
        let mid = (p1 - p2) / 2.0;
        // (index of cos term, partner index, partner amplitude)
        let want = [
            (0, 5, mis(-p1)),
            (1, 4, mis(-p2)),
            (2, 3, mis(-mid)),
            (3, 2, mis(mid)),
            (4, 1, mis(p2)),
            (5, 0, mis(p1)),
        ];
        for (state, (k, partner, amp)) in states.iter().zip(want) {
            let a = state.amplitudes();
            assert!((a[k] - c(co, 0.)).norm() < 1e-15);
            assert!((a[partner] - amp).norm() < 1e-15);
            assert!((norm_sqr(a) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn entangle_basis_at_zero_is_product_basis() {
        let states = entangle_basis(&build_r(&build_m(&family_6x6(0.4, 0.1)).unwrap(), 0.0));
        for (k, s) in states.iter().enumerate() {
            for (i, a) in s.amplitudes().iter().enumerate() {
                assert_eq!(a.norm(), if i == k { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn negativity_examples() {
        for (a, b) in [(0.6, 0.8), (1.0, 0.0), (0.2f64, (1.0f64 - 0.04).sqrt())] {
            let psi = PureState::new(vec![c(a, 0.), c(0., 0.), c(0., 0.), c(0., b)], vec![2, 2]).unwrap();
            assert!((negativity_pure(&psi).unwrap() - 2.0 * a * b).abs() < 1e-12);
            let phi = PureState::new(vec![c(0., 0.), c(a, 0.), c(b, 0.), c(0., 0.)], vec![2, 2]).unwrap();
            assert!((negativity_pure(&phi).unwrap() - 2.0 * a * b).abs() < 1e-12);
        }
        let prod = product_state([c(0.6, 0.), c(0., 0.8)], [c(1., 0.), c(1., 1.), c(0., -2.)]);
        assert!(negativity_pure(&prod).unwrap().abs() < 1e-12);

        let theta = PI / 3.0;
        let states = entangle_basis(&build_r(&build_m(&family_6x6(0.5, -0.2)).unwrap(), theta));
        assert!((negativity_pure(&states[0]).unwrap() - 0.866_025_403_784_438_6).abs() < 1e-9);

        assert!(negativity_pure(&ghz_state()).is_err());
    }

    #[test]
    fn six_by_six_negativity_by_state() {
        // e1, e2, e5, e6 pair |a,α⟩ with |−a,−α⟩ across both factors; e3, e4 stay
        // inside |0⟩ ⊗ C² and are product states
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let theta = rng.random_range(0.0..2.0 * PI);
            let t = family_6x6(rng.random_range(-PI..PI), rng.random_range(-PI..PI));
            let states = entangle_basis(&build_r(&build_m(&t).unwrap(), theta));
            for (k, s) in states.iter().enumerate() {
                let n = negativity_pure(s).unwrap();
                let want = if k == 2 || k == 3 { 0.0 } else { theta.sin().abs() };
                assert!((n - want).abs() <= 1e-9, "state {k}: {n} vs {want}");
            }
        }
    }

    #[test]
    fn concurrence_pure_examples() {
        assert!((concurrence_pure(&bell_state()).unwrap() - 1.0).abs() < 1e-15);
        let prod = PureState::normalized(vec![c(1., 0.), c(2., 0.), c(0., 1.), c(0., 2.)], vec![2, 2]).unwrap();
        assert!(concurrence_pure(&prod).unwrap() < 1e-15);
        let theta = 1.1;
        let states = entangle_basis(&build_r(&build_m(&family_4x4(0.2)).unwrap(), theta));
        let c2 = concurrence_pure(&states[1]).unwrap();
        assert!((c2 - theta.sin().abs()).abs() < 1e-12);
        assert!((c2 - negativity_pure(&states[1]).unwrap()).abs() < 1e-9);
        assert!(concurrence_pure(&ghz_state()).is_err());
    }

    #[test]
    fn concurrence_mixed_examples() {
        assert!((concurrence_mixed(&bell_state().density()).unwrap() - 1.0).abs() < 1e-8);
        let mixed = DensityMatrix::new(ComplexMatrix::identity(4).scale_real(0.25), vec![2, 2]).unwrap();
        assert!(concurrence_mixed(&mixed).unwrap() < 1e-12);
        assert!(concurrence_mixed(&ghz_state().density()).is_err());
    }

    #[test]
    fn concurrence_mixed_agrees_with_pure_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let amps: Vec<Complex> = (0..4).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
            let psi = PureState::normalized(amps, vec![2, 2]).unwrap();
            let a = concurrence_pure(&psi).unwrap();
            let b = concurrence_mixed(&psi.density()).unwrap();
            assert!((a - b).abs() <= 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn xstate_examples() {
        assert!((concurrence_xstate(&bell_state().density()).unwrap() - 1.0).abs() < 1e-15);
        let diag = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]), vec![2, 2]).unwrap();
        assert_eq!(concurrence_xstate(&diag).unwrap(), 0.0);
        let psi = PureState::normalized(vec![c(1., 0.), c(1., 0.), c(0., 0.), c(0., 0.)], vec![2, 2]).unwrap();
        assert!(matches!(concurrence_xstate(&psi.density()), Err(Error::NotXForm(_))));

        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..50 {
            let rho = random_xstate(&mut rng);
            let a = concurrence_xstate(&rho).unwrap();
            let b = concurrence_mixed(&rho).unwrap();
            assert!((a - b).abs() <= 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn tangle_oracles() {
        assert!((three_tangle(&ghz_state()).unwrap() - 1.0).abs() < 1e-15);
        assert!(three_tangle(&w_state()).unwrap() < 1e-15);
        let prod = PureState::normalized(vec![c(1., 0.); 8], vec![2, 2, 2]).unwrap();
        assert!(three_tangle(&prod).unwrap() < 1e-15);
        assert!(three_tangle(&bell_state()).is_err());
    }

    /// Reference: τ₃ = 4|Cayley hyperdeterminant| written over the binary labels.
    fn hyperdeterminant_tangle(a: &[Complex]) -> f64 {
        let p = |i: usize, j: usize, k: usize| a[4 * i + 2 * j + k];
        let d1 = p(0, 0, 0).powi(2) * p(1, 1, 1).powi(2)
            + p(0, 0, 1).powi(2) * p(1, 1, 0).powi(2)
            + p(0, 1, 0).powi(2) * p(1, 0, 1).powi(2)
            + p(1, 0, 0).powi(2) * p(0, 1, 1).powi(2);
        let d2 = p(0, 0, 0) * p(1, 1, 1) * p(0, 1, 1) * p(1, 0, 0)
            + p(0, 0, 0) * p(1, 1, 1) * p(1, 0, 1) * p(0, 1, 0)
            + p(0, 0, 0) * p(1, 1, 1) * p(1, 1, 0) * p(0, 0, 1)
            + p(0, 1, 1) * p(1, 0, 0) * p(1, 0, 1) * p(0, 1, 0)
            + p(0, 1, 1) * p(1, 0, 0) * p(1, 1, 0) * p(0, 0, 1)
            + p(1, 0, 1) * p(0, 1, 0) * p(1, 1, 0) * p(0, 0, 1);
        let d3 = p(0, 0, 0) * p(1, 1, 0) * p(1, 0, 1) * p(0, 1, 1)
            + p(1, 1, 1) * p(0, 0, 1) * p(0, 1, 0) * p(1, 0, 0);
        4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm()
    }

    #[test]
    fn pairwise_examples() {
        let (ab, ac, bc) = pairwise_concurrences(&ghz_state()).unwrap();
        assert!(ab.max(ac).max(bc) < 1e-8);
        let (ab, ac, bc) = pairwise_concurrences(&w_state()).unwrap();
        for x in [ab, ac, bc] {
            assert!((x - 2.0 / 3.0).abs() < 1e-8, "{x}");
        }
        assert!(pairwise_concurrences(&bell_state()).is_err());
    }

    #[test]
    fn eight_by_eight_gate_states_are_ghz_like() {
        let (p1, p2, p3) = (0.4, -0.3, 1.0);
        let t = family_8x8(p1, p2, p3, p2 + p3 - p1).unwrap();
        let theta = FRAC_PI_2;
        for s in entangle_basis(&build_r(&build_m(&t).unwrap(), theta)) {
            let q = s.with_dims(vec![2, 2, 2]).unwrap();
            assert!((three_tangle(&q).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn tangle_matches_hyperdeterminant(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let amps: Vec<Complex> = (0..8).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
            let psi = PureState::normalized(amps, vec![2, 2, 2]).unwrap();
            let t = three_tangle(&psi).unwrap();
            prop_assert!((t - hyperdeterminant_tangle(psi.amplitudes())).abs() < 1e-12);
            prop_assert!((-1e-9..=1.0 + 1e-9).contains(&t));
        }

        #[test]
        fn tangle_invariant_under_local_phase(seed in any::<u64>(), qubit in 0usize..3, delta in -PI..PI) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let amps: Vec<Complex> = (0..8).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
            let psi = PureState::normalized(amps, vec![2, 2, 2]).unwrap();
            let bit = 4 >> qubit;
            let rotated: Vec<Complex> = psi.amplitudes().iter().enumerate()
                .map(|(k, &a)| if k & bit != 0 { a * Complex::from_polar(1.0, delta) } else { a })
                .collect();
            let phi = PureState::new(rotated, vec![2, 2, 2]).unwrap();
            prop_assert!((three_tangle(&psi).unwrap() - three_tangle(&phi).unwrap()).abs() < 1e-12);
        }

        #[test]
        fn pure_concurrence_equals_negativity(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let amps: Vec<Complex> = (0..4).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
            let psi = PureState::normalized(amps, vec![2, 2]).unwrap();
            let cc = concurrence_pure(&psi).unwrap();
            let n = negativity_pure(&psi).unwrap();
            prop_assert!((cc - n).abs() < 1e-9);
            prop_assert!((-1e-9..=1.0 + 1e-9).contains(&n));
        }
    }
}
