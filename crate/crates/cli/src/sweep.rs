use anyhow::{bail, Result};
use yangbax_core::entangle::{
    concurrence_pure, entangle_basis, negativity_pure, pairwise_concurrences, three_tangle,
};
use yangbax_core::hamiltonian::labeled_eigenpairs;

use crate::Setup;

pub const CSV_HEADER: [&str; 6] = ["theta", "state_label", "measure", "value", "analytic", "abs_error"];

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub theta: f64,
    pub state_label: String,
    pub measure: &'static str,
    pub value: f64,
    pub analytic: Option<f64>,
}

/// `count` evenly spaced points from `start` to `stop`, both included.
pub fn linspace(start: f64, stop: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        bail!("--count must be at least 2, got {count}");
    }
    if !start.is_finite() || !stop.is_finite() {
        bail!("sweep bounds must be finite");
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|k| if k == count - 1 { stop } else { start + step * k as f64 }).collect())
}

pub fn run(setup: &Setup, grid: &[f64]) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for &theta in grid {
        match setup.three_qubit {
            Some(phis) => three_qubit_rows(&mut rows, theta, phis)?,
            None => gate_rows(&mut rows, setup, theta)?,
        }
    }
    Ok(rows)
}

fn gate_rows(rows: &mut Vec<Row>, setup: &Setup, theta: f64) -> Result<()> {
    let sine = (setup.family.has_sine_law() && !setup.raw).then(|| theta.sin().abs());
    for (k, psi) in entangle_basis(&setup.r_matrix(theta)?).iter().enumerate() {
        let label = format!("e{}", k + 1);
        rows.push(Row { theta, state_label: label.clone(), measure: "negativity", value: negativity_pure(psi)?, analytic: sine });
        if psi.dims() == [2, 2] {
            rows.push(Row { theta, state_label: label, measure: "concurrence", value: concurrence_pure(psi)?, analytic: sine });
        }
    }
    Ok(())
}

fn three_qubit_rows(rows: &mut Vec<Row>, theta: f64, phis: [f64; 4]) -> Result<()> {
    let tangle = theta.sin().powi(2);
    for (i, sector, pair) in labeled_eigenpairs(theta, phis)?.iter() {
        let label = format!("e{i}{}", sector.symbol());
        let psi = pair.state.with_dims(vec![2, 2, 2])?;
        rows.push(Row { theta, state_label: label.clone(), measure: "three_tangle", value: three_tangle(&psi)?, analytic: Some(tangle) });
        let (ab, ac, bc) = pairwise_concurrences(&psi)?;
        for (measure, value) in [("concurrence_AB", ab), ("concurrence_AC", ac), ("concurrence_BC", bc)] {
            rows.push(Row { theta, state_label: label.clone(), measure, value, analytic: Some(0.0) });
        }
    }
    Ok(())
}

/// 12 significant digits, decimal point, no grouping.
pub fn number(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn to_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let (analytic, error) = match r.analytic {
            Some(a) => (number(a), number((r.value - a).abs())),
            None => (String::new(), String::new()),
        };
        w.write_record([number(r.theta), r.state_label.clone(), r.measure.to_string(), number(r.value), analytic, error])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
