//! Residuals of the three-site relations.
//!
//! Line 1 lives on V^{j₁} ⊗ V^{j₂} ⊗ V^{j₁} (M^{j₁j₂} on sites 12, M^{j₂j₁} on
//! sites 23); line 2 on V^{j₂} ⊗ V^{j₁} ⊗ V^{j₂} with the roles exchanged.
//! These are the only chains on which every product is well-formed.

use crate::error::Result;
use crate::linalg::{embed_pair, ComplexMatrix};
use crate::xform::{build_m_partner_unchecked, build_m_unchecked, exp_rotation, PhaseTable};

/// Max-entry residuals of both Yang-Baxter lines and of the M commutators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YbeReport {
    pub residual_line1: f64,
    pub residual_line2: f64,
    pub residual_m_comm_121: f64,
    pub residual_m_comm_212: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl YbeReport {
    pub fn max_ybe(&self) -> f64 {
        self.residual_line1.max(self.residual_line2)
    }

    pub fn max_residual(&self) -> f64 {
        self.max_ybe().max(self.residual_m_comm_121).max(self.residual_m_comm_212)
    }
}

/// ‖[M₁₂^{j₁j₂}, M₂₃^{j₂j₁}]‖ on (d₁, d₂, d₁) and ‖[M₁₂^{j₂j₁}, M₂₃^{j₁j₂}]‖ on (d₂, d₁, d₂).
pub fn pair_commutation_residuals(
    m: &ComplexMatrix,
    partner: &ComplexMatrix,
    d1: usize,
    d2: usize,
) -> Result<(f64, f64)> {
    let chain_121 = [d1, d2, d1];
    let c1 = embed_pair(m, &chain_121, 0)?.commutator(&embed_pair(partner, &chain_121, 1)?)?;
    let chain_212 = [d2, d1, d2];
    let c2 = embed_pair(partner, &chain_212, 0)?.commutator(&embed_pair(m, &chain_212, 1)?)?;
    Ok((c1.max_abs(), c2.max_abs()))
}

/// Commutator residuals for the X-form pair built from `table`. The table is
/// not validated, so broken tables show up as positive residuals.
pub fn m_commutation_residuals(table: &PhaseTable) -> (f64, f64) {
    let m = build_m_unchecked(table);
    let p = build_m_partner_unchecked(table);
    pair_commutation_residuals(m.matrix(), p.matrix(), table.j1().dim(), table.j2().dim())
        .expect("shapes follow from the table")
}

/// ‖R̆₁₂(θ₁) R̆₂₃(θ₁+θ₂) R̆₁₂(θ₂) − R̆₂₃(θ₂) R̆₁₂(θ₁+θ₂) R̆₂₃(θ₁)‖_max with the
/// site-12 factor built from `first` on `dims` and the site-23 factor from `second`.
fn braid_residual(
    first: &ComplexMatrix,
    second: &ComplexMatrix,
    dims: [usize; 3],
    theta1: f64,
    theta2: f64,
) -> Result<f64> {
    let r12 = |t: f64| embed_pair(&exp_rotation(first, t), &dims, 0);
    let r23 = |t: f64| embed_pair(&exp_rotation(second, t), &dims, 1);
    let sum = theta1 + theta2;
    let lhs = &(&r12(theta1)? * &r23(sum)?) * &r12(theta2)?;
    let rhs = &(&r23(theta2)? * &r12(sum)?) * &r23(theta1)?;
    Ok(lhs.max_abs_diff(&rhs))
}

pub fn ybe_residual(table: &PhaseTable, theta1: f64, theta2: f64) -> YbeReport {
    let m = build_m_unchecked(table);
    let p = build_m_partner_unchecked(table);
    let (d1, d2) = (table.j1().dim(), table.j2().dim());
    let line1 = braid_residual(m.matrix(), p.matrix(), [d1, d2, d1], theta1, theta2)
        .expect("shapes follow from the table");
    let line2 = braid_residual(p.matrix(), m.matrix(), [d2, d1, d2], theta1, theta2)
        .expect("shapes follow from the table");
    let (c121, c212) = m_commutation_residuals(table);
    YbeReport {
        residual_line1: line1,
        residual_line2: line2,
        residual_m_comm_121: c121,
        residual_m_comm_212: c212,
        theta1,
        theta2,
    }
}
