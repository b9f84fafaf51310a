//! X-form solutions of the braided Yang-Baxter equation.
//!
//! An X-form matrix on V^{j₁} ⊗ V^{j₂} pairs every basis state |a, α⟩ with its
//! spin-flipped partner |−a, −α⟩:
//!
//! ```text
//! M |−a, −α⟩ = e^{−iφ(a, α)} |a, α⟩
//! ```
//!
//! M is an involution iff φ(a, α) = −φ(−a, −α), and the three-site commutation
//! relations that make e^{−iθM/2} a braided Yang-Baxter solution hold iff
//! φ(a, α) + φ(−a, α) does not depend on a and φ(a, α) + φ(a, −α) does not
//! depend on α. Tables of the additive form φ(a, α) = f(a) + g(α) with odd
//! f and g satisfy all three by construction.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{Complex, ComplexMatrix};

/// Tolerance (mod 2π) for accepting a phase table.
pub const PHASE_TOL: f64 = 1e-9;

/// A half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    /// A spin label; must be at least 1/2.
    pub fn spin(twice: i32) -> Result<Self> {
        if twice < 1 {
            return Err(Error::InvalidSpin(format!("2j = {twice}")));
        }
        Ok(Self { twice })
    }

    pub fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// Dimension 2j+1 of the spin-j representation.
    pub fn dim(self) -> usize {
        (self.twice + 1) as usize
    }

    /// j, j−1, …, −j
    pub fn magnetic_labels(self) -> Vec<HalfInt> {
        (0..=self.twice).map(|k| HalfInt::from_twice(self.twice - 2 * k)).collect()
    }

    pub fn positive_labels(self) -> Vec<HalfInt> {
        self.magnetic_labels().into_iter().filter(|m| m.twice > 0).collect()
    }

    pub fn contains(self, m: HalfInt) -> bool {
        m.twice.abs() <= self.twice && (m.twice - self.twice).rem_euclid(2) == 0
    }

    /// Position of `m` in the descending label list.
    fn offset(self, m: HalfInt) -> Result<usize> {
        if !self.contains(m) {
            return Err(Error::LabelOutOfRange { label: m.to_string(), spin: self.to_string() });
        }
        Ok(((self.twice - m.twice) / 2) as usize)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;

    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `3/2`, `-1/2`, `1`, `0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSpin(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "2" => Ok(HalfInt::from_twice(num)),
                "1" => Ok(HalfInt::from_twice(2 * num)),
                _ => Err(bad()),
            };
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * x;
        if !twice.is_finite() || (twice - twice.round()).abs() > 1e-12 {
            return Err(bad());
        }
        Ok(HalfInt::from_twice(twice.round() as i32))
    }
}

/// Row index of |a, α⟩ in V^{j₁} ⊗ V^{j₂}: a descending, then α descending.
pub fn basis_index(j1: HalfInt, j2: HalfInt, a: HalfInt, alpha: HalfInt) -> Result<usize> {
    Ok(j1.offset(a)? * j2.dim() + j2.offset(alpha)?)
}

fn wrap(x: f64) -> f64 {
    x - TAU * (x / TAU).round()
}

/// Distance between two phases on the circle.
pub fn phase_distance(x: f64, y: f64) -> f64 {
    wrap(x - y).abs()
}

/// The phases φ(a, α) of an X-form matrix, stored in [`basis_index`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTable {
    j1: HalfInt,
    j2: HalfInt,
    phi: Vec<f64>,
}

impl PhaseTable {
    /// Table from raw values in basis order; no constraint checking.
    pub fn from_raw(j1: HalfInt, j2: HalfInt, phi: Vec<f64>) -> Result<Self> {
        let j1 = HalfInt::spin(j1.twice)?;
        let j2 = HalfInt::spin(j2.twice)?;
        if phi.len() != j1.dim() * j2.dim() {
            return Err(Error::EntryCount { rows: j1.dim(), cols: j2.dim(), found: phi.len() });
        }
        if phi.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite("phase table"));
        }
        Ok(Self { j1, j2, phi })
    }

    pub fn j1(&self) -> HalfInt {
        self.j1
    }

    pub fn j2(&self) -> HalfInt {
        self.j2
    }

    pub fn dim(&self) -> usize {
        self.phi.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.phi
    }

    pub fn phase(&self, a: HalfInt, alpha: HalfInt) -> Result<f64> {
        Ok(self.phi[basis_index(self.j1, self.j2, a, alpha)?])
    }

    pub fn set_phase(&mut self, a: HalfInt, alpha: HalfInt, value: f64) -> Result<()> {
        let k = basis_index(self.j1, self.j2, a, alpha)?;
        self.phi[k] = value;
        Ok(())
    }

    fn at(&self, a: HalfInt, alpha: HalfInt) -> f64 {
        self.phi[self.j1.offset(a).unwrap() * self.j2.dim() + self.j2.offset(alpha).unwrap()]
    }

    /// All labels (a, α) in basis order.
    pub fn labels(&self) -> Vec<(HalfInt, HalfInt)> {
        let alphas = self.j2.magnetic_labels();
        self.j1
            .magnetic_labels()
            .into_iter()
            .flat_map(|a| alphas.iter().map(move |&al| (a, al)))
            .collect()
    }

    pub fn residuals(&self) -> PhaseResiduals {
        validate_phase_table(self)
    }
}

/// Largest violation (mod 2π) of each constraint family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseResiduals {
    /// φ(a, α) + φ(−a, −α) ≡ 0
    pub antisymmetry: f64,
    /// φ(a, α) + φ(−a, α) independent of a
    pub row: f64,
    /// φ(a, α) + φ(a, −α) independent of α
    pub column: f64,
}

impl PhaseResiduals {
    pub fn max(&self) -> f64 {
        self.antisymmetry.max(self.row).max(self.column)
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

impl fmt::Display for PhaseResiduals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "antisymmetry {:.3e}, row {:.3e}, column {:.3e}",
            self.antisymmetry, self.row, self.column
        )
    }
}

fn max_spread(values: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, &x) in values.iter().enumerate() {
        for &y in &values[i + 1..] {
            worst = worst.max(phase_distance(x, y));
        }
    }
    worst
}

pub fn validate_phase_table(t: &PhaseTable) -> PhaseResiduals {
    let a_labels = t.j1.magnetic_labels();
    let al_labels = t.j2.magnetic_labels();

    let mut antisymmetry: f64 = 0.0;
    for &a in &a_labels {
        for &al in &al_labels {
            antisymmetry = antisymmetry.max(phase_distance(t.at(a, al) + t.at(-a, -al), 0.0));
        }
    }
    let row = al_labels
        .iter()
        .map(|&al| {
            let sums: Vec<f64> = a_labels.iter().map(|&a| t.at(a, al) + t.at(-a, al)).collect();
            max_spread(&sums)
        })
        .fold(0.0, f64::max);
    let column = a_labels
        .iter()
        .map(|&a| {
            let sums: Vec<f64> = al_labels.iter().map(|&al| t.at(a, al) + t.at(a, -al)).collect();
            max_spread(&sums)
        })
        .fold(0.0, f64::max);
    PhaseResiduals { antisymmetry, row, column }
}

/// Additive table φ(a, α) = f(a) + g(α), with f and g given on positive labels
/// and extended as odd functions.
pub fn make_phase_table(
    j1: HalfInt,
    j2: HalfInt,
    f: &BTreeMap<HalfInt, f64>,
    g: &BTreeMap<HalfInt, f64>,
) -> Result<PhaseTable> {
    let j1 = HalfInt::spin(j1.twice)?;
    let j2 = HalfInt::spin(j2.twice)?;
    let odd = |map: &BTreeMap<HalfInt, f64>, m: HalfInt| -> Result<f64> {
        match m.twice.signum() {
            0 => Ok(0.0),
            1 => map.get(&m).copied().ok_or_else(|| Error::IncompletePhaseMap(m.to_string())),
            _ => map.get(&-m).map(|v| -v).ok_or_else(|| Error::IncompletePhaseMap((-m).to_string())),
        }
    };
    let mut phi = Vec::with_capacity(j1.dim() * j2.dim());
    for a in j1.magnetic_labels() {
        for al in j2.magnetic_labels() {
            phi.push(odd(f, a)? + odd(g, al)?);
        }
    }
    PhaseTable::from_raw(j1, j2, phi)
}

/// Which tensor ordering an X-form matrix acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisOrdering {
    /// V^{j₁} ⊗ V^{j₂}
    Direct,
    /// V^{j₂} ⊗ V^{j₁}
    Swapped,
}

#[derive(Debug, Clone)]
pub struct XFormM {
    matrix: ComplexMatrix,
    source: PhaseTable,
    ordering: BasisOrdering,
}

impl XFormM {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn source(&self) -> &PhaseTable {
        &self.source
    }

    pub fn ordering(&self) -> BasisOrdering {
        self.ordering
    }

    /// Local dimensions (left site, right site).
    pub fn site_dims(&self) -> (usize, usize) {
        let (d1, d2) = (self.source.j1.dim(), self.source.j2.dim());
        match self.ordering {
            BasisOrdering::Direct => (d1, d2),
            BasisOrdering::Swapped => (d2, d1),
        }
    }

    /// ‖M² − I‖_max
    pub fn involution_residual(&self) -> f64 {
        (&self.matrix * &self.matrix).max_abs_diff(&ComplexMatrix::identity(self.matrix.rows()))
    }

    /// Nonzero entries lying off the X pattern.
    pub fn x_shape_violation(&self) -> f64 {
        let n = self.matrix.rows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if j != n - 1 - i {
                    worst = worst.max(self.matrix[(i, j)].norm());
                }
            }
        }
        worst
    }
}

fn ensure_valid(t: &PhaseTable) -> Result<()> {
    let r = validate_phase_table(t);
    if r.is_valid(PHASE_TOL) {
        Ok(())
    } else {
        Err(Error::InvalidPhaseTable(r))
    }
}

/// M on V^{j₁} ⊗ V^{j₂}: entry (|a,α⟩, |−a,−α⟩) = e^{−iφ(a,α)}.
pub fn build_m(t: &PhaseTable) -> Result<XFormM> {
    ensure_valid(t)?;
    Ok(build_m_unchecked(t))
}

/// [`build_m`] without validating the table. Used to study broken tables.
pub fn build_m_unchecked(t: &PhaseTable) -> XFormM {
    let n = t.dim();
    let mut m = ComplexMatrix::zeros(n, n);
    for (a, al) in t.labels() {
        let row = basis_index(t.j1, t.j2, a, al).unwrap();
        let col = basis_index(t.j1, t.j2, -a, -al).unwrap();
        m[(row, col)] = Complex::from_polar(1.0, -t.at(a, al));
    }
    XFormM { matrix: m, source: t.clone(), ordering: BasisOrdering::Direct }
}

/// The partner M^{j₂j₁} on V^{j₂} ⊗ V^{j₁}, with
/// [M^{j₂j₁}](α a, β b) = [M^{j₁j₂}](a α, b β).
pub fn build_m_partner(t: &PhaseTable) -> Result<XFormM> {
    ensure_valid(t)?;
    Ok(build_m_partner_unchecked(t))
}

pub fn build_m_partner_unchecked(t: &PhaseTable) -> XFormM {
    let n = t.dim();
    let mut m = ComplexMatrix::zeros(n, n);
    for (a, al) in t.labels() {
        let row = basis_index(t.j2, t.j1, al, a).unwrap();
        let col = basis_index(t.j2, t.j1, -al, -a).unwrap();
        m[(row, col)] = Complex::from_polar(1.0, -t.at(a, al));
    }
    XFormM { matrix: m, source: t.clone(), ordering: BasisOrdering::Swapped }
}

/// R̆(θ) = e^{−iθM/2} = cos(θ/2) I − i sin(θ/2) M.
#[derive(Debug, Clone)]
pub struct RMatrix {
    matrix: ComplexMatrix,
    theta: f64,
    source: XFormM,
}

impl RMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn source(&self) -> &XFormM {
        &self.source
    }

    pub fn site_dims(&self) -> (usize, usize) {
        self.source.site_dims()
    }

    pub fn unitarity_residual(&self) -> f64 {
        self.matrix.unitarity_residual()
    }
}

pub fn exp_rotation(m: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    let (s, c) = (theta / 2.0).sin_cos();
    let n = m.rows();
    ComplexMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { c } else { 0.0 };
        Complex::new(id, 0.0) + m[(i, j)] * Complex::new(0.0, -s)
    })
}

pub fn build_r(m: &XFormM, theta: f64) -> RMatrix {
    RMatrix { matrix: exp_rotation(&m.matrix, theta), theta, source: m.clone() }
}

const HALF: HalfInt = HalfInt::from_twice(1);
const ONE: HalfInt = HalfInt::from_twice(2);
const THREE_HALVES: HalfInt = HalfInt::from_twice(3);

/// Two qubits: φ(½,½) = φ + π/2, φ(½,−½) = 0.
pub fn family_4x4(phi: f64) -> PhaseTable {
    let h = (phi + FRAC_PI_2) / 2.0;
    let f = BTreeMap::from([(HALF, h)]);
    let g = BTreeMap::from([(HALF, h)]);
    make_phase_table(HALF, HALF, &f, &g).expect("complete maps")
}

/// Qutrit ⊗ qubit: φ(1,½) = φ₁, φ(1,−½) = φ₂, φ(0,½) = (φ₁ − φ₂)/2.
pub fn family_6x6(phi1: f64, phi2: f64) -> PhaseTable {
    let f = BTreeMap::from([(ONE, (phi1 + phi2) / 2.0)]);
    let g = BTreeMap::from([(HALF, (phi1 - phi2) / 2.0)]);
    make_phase_table(ONE, HALF, &f, &g).expect("complete maps")
}

/// Three qubits (j₁ = 3/2, j₂ = 1/2). The displayed matrix carries a factor
/// i·e^{−iφₖ} = e^{−i(φₖ − π/2)} on the upper anti-diagonal, so every phase is
/// shifted by −π/2. Requires φ₁ + φ₄ = φ₂ + φ₃ (mod 2π).
pub fn family_8x8(phi1: f64, phi2: f64, phi3: f64, phi4: f64) -> Result<PhaseTable> {
    let mismatch = phase_distance(phi1 + phi4, phi2 + phi3);
    if mismatch > PHASE_TOL {
        return Err(Error::PhaseRelation { mismatch });
    }
    // g(½) = (φ₁ − φ₂)/2 ≡ (φ₃ − φ₄)/2; take the average so rounding splits evenly
    let g_half = ((phi1 - phi2) + (phi3 - phi4)) / 4.0;
    let f = BTreeMap::from([
        (THREE_HALVES, (phi1 + phi2) / 2.0 - FRAC_PI_2),
        (HALF, (phi3 + phi4) / 2.0 - FRAC_PI_2),
    ]);
    let g = BTreeMap::from([(HALF, g_half)]);
    let mut table = make_phase_table(THREE_HALVES, HALF, &f, &g)?;
    // pin the four defining entries exactly (and their antisymmetric partners)
    for (a, al, v) in [
        (THREE_HALVES, HALF, phi1),
        (THREE_HALVES, -HALF, phi2),
        (HALF, HALF, phi3),
        (HALF, -HALF, phi4),
    ] {
        table.set_phase(a, al, v - FRAC_PI_2)?;
        table.set_phase(-a, -al, -(v - FRAC_PI_2))?;
    }
    Ok(table)
}

/// Normalize an angle into (−π, π].
pub fn principal_angle(x: f64) -> f64 {
    let w = wrap(x);
    if w <= -PI {
        w + TAU
    } else {
        w
    }
}
