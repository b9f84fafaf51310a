use std::f64::consts::TAU;
use std::fmt::Write as _;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use yangbax_core::hamiltonian::{
    field_decomposition, hamiltonian, labeled_eigenpairs, recast_check, EIGEN_TOL,
};
use yangbax_core::linalg::{hermitian_eig, HERMITIAN_TOL};
use yangbax_core::xform::{build_m_unchecked, build_r, PHASE_TOL};
use yangbax_core::yangian::{
    build_generators, serre_lower_flipped_residual, serre_parameter_sweep, verify_mixed, verify_serre, verify_sl2,
    verify_symmetry, YangianParams, RELATION_TOL,
};
use yangbax_core::ybe::{m_commutation_residuals, ybe_residual};

use crate::Setup;

pub const UNITARY_TOL: f64 = 1e-12;
pub const YBE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Info {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub info: Vec<Info>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        // NaN never passes
        let passed = residual <= tolerance;
        self.checks.push(Check { name: name.into(), residual, tolerance, passed });
    }

    fn info(&mut self, name: impl Into<String>, value: f64) {
        self.info.push(Info { name: name.into(), value });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn find(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{}: {status} (residual {:.3e}, tol {:.0e})", c.name, c.residual, c.tolerance).unwrap();
        }
        for i in &self.info {
            writeln!(out, "{}: INFO ({:.6e})", i.name, i.value).unwrap();
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "summary: {ok}/{} checks passed", self.checks.len()).unwrap();
        out
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(flatten)]
            report: &'a Report,
            all_passed: bool,
        }
        let mut s = serde_json::to_string_pretty(&Doc { report: self, all_passed: self.passed() })?;
        s.push('\n');
        Ok(s)
    }
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // f64::max would swallow NaN
    it.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

pub fn run(setup: &Setup, theta: f64, seed: u64, trials: usize, params: &YangianParams) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let angles: Vec<(f64, f64)> =
        (0..trials).map(|_| (rng.random_range(-TAU..TAU), rng.random_range(-TAU..TAU))).collect();
    let mut report = Report { seed, trials, checks: Vec::new(), info: Vec::new() };

    let table = &setup.table;
    report.check("phase table (antisymmetry, row, column)", table.residuals().max(), PHASE_TOL);
    let m = build_m_unchecked(table);
    report.check("M² = I", m.involution_residual(), UNITARY_TOL);
    report.check("M = M†", m.matrix().hermitian_residual(), UNITARY_TOL);
    let unitarity = max_of(angles.iter().map(|&(t, _)| build_r(&m, t).unitarity_residual()));
    report.check(format!("R̆†R̆ = I ({trials} angles)"), unitarity, UNITARY_TOL);

    let (d1, d2) = (table.j1().dim(), table.j2().dim());
    let (c121, c212) = m_commutation_residuals(table);
    report.check(format!("[M12, M23] = 0 on ({d1},{d2},{d1})"), c121, YBE_TOL);
    report.check(format!("[M12, M23] = 0 on ({d2},{d1},{d2})"), c212, YBE_TOL);
    let ybe: Vec<_> = angles.iter().map(|&(a, b)| ybe_residual(table, a, b)).collect();
    report.check(format!("YBE line 1 ({trials} trials)"), max_of(ybe.iter().map(|r| r.residual_line1)), YBE_TOL);
    report.check(format!("YBE line 2 ({trials} trials)"), max_of(ybe.iter().map(|r| r.residual_line2)), YBE_TOL);

    if let Some(phis) = setup.three_qubit {
        three_qubit_checks(&mut report, phis, theta, &angles, params)?;
    }
    Ok(report)
}

fn three_qubit_checks(
    report: &mut Report,
    phis: [f64; 4],
    theta: f64,
    angles: &[(f64, f64)],
    params: &YangianParams,
) -> Result<()> {
    let thetas: Vec<f64> = std::iter::once(theta).chain(angles.iter().map(|&(t, _)| t)).collect();
    let expected = [-0.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 0.5];
    let (mut spectrum, mut eigenpairs, mut field, mut recast, mut recast_h) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    let (mut sl2, mut mixed, mut serre, mut symmetry, mut flipped) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for &t in &thetas {
        let h = hamiltonian(t, phis)?;
        let eig = hermitian_eig(&h)?;
        spectrum = spectrum.max(max_of(eig.values.iter().zip(expected).map(|(v, e)| (v - e).abs())));
        let pairs = labeled_eigenpairs(t, phis)?;
        for (_, _, pair) in pairs.iter() {
            let v = pair.state.amplitudes();
            let he = h.apply(v)?;
            let r = max_of(he.iter().zip(v).map(|(x, v)| (x - v * pair.energy).norm()));
            eigenpairs = eigenpairs.max(r);
        }
        field = field.max(field_decomposition(t, phis)?.reconstruct().max_abs_diff(&h));
        let rc = recast_check(t, phis)?;
        recast = recast.max(rc.vs_2h);
        recast_h = recast_h.max(rc.vs_h);

        let g = build_generators(&pairs, params);
        sl2 = sl2.max(verify_sl2(&g).max());
        mixed = mixed.max(verify_mixed(&g).max());
        serre = serre.max(verify_serre(&g).max());
        symmetry = symmetry.max(verify_symmetry(&h, &g)?.max());
        flipped = flipped.max(serre_lower_flipped_residual(&g));
    }
    let n = thetas.len();
    report.check(format!("spectrum {{±1/2}} ×4 ({n} angles)"), spectrum, EIGEN_TOL);
    report.check("H e = E e (8 labeled eigenpairs)", eigenpairs, EIGEN_TOL);
    report.check("field decomposition Σ Bᵢ·Sᵢ = H", field, HERMITIAN_TOL);
    report.check("recast Σ(|e⁺⟩⟨e⁺| − |e⁻⟩⟨e⁻|) = 2H", recast, EIGEN_TOL);
    report.check("sl(2) relations (2)", sl2, RELATION_TOL);
    report.check("mixed relations (6)", mixed, RELATION_TOL);
    report.check("Serre-type relations (5)", serre, RELATION_TOL);
    report.check("[H,Y] = 0 (6 generators)", symmetry, RELATION_TOL);

    report.info("recast Σ(|e⁺⟩⟨e⁺| − |e⁻⟩⟨e⁻|) − H without the factor 2", recast_h);
    report.info("[F-,[F-,F+]] - 2[F3,[F3,F-]] (inner commutator flipped)", flipped);
    let sweep = serre_parameter_sweep(&labeled_eigenpairs(theta, phis)?);
    report.info(
        "Serre-type relations over α,β,γ,δ ∈ {1/2, 1, 2, e^{iπ/4}}",
        max_of(sweep.iter().map(|(_, r)| r.max())),
    );
    Ok(())
}
