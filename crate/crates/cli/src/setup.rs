use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use yangbax_core::xform::{build_m_unchecked, build_r, family_4x4, family_6x6, family_8x8, make_phase_table};
use yangbax_core::yangian::YangianParams;
use yangbax_core::{Complex, HalfInt, PhaseTable, RMatrix};

use crate::FamilyArgs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "4x4")]
    TwoQubit,
    #[value(name = "6x6")]
    QutritQubit,
    #[value(name = "8x8")]
    ThreeQubit,
    General,
}

impl Family {
    fn spins(self) -> Option<(HalfInt, HalfInt)> {
        let s = HalfInt::from_twice;
        match self {
            Family::TwoQubit => Some((s(1), s(1))),
            Family::QutritQubit => Some((s(2), s(1))),
            Family::ThreeQubit => Some((s(3), s(1))),
            Family::General => None,
        }
    }

    /// Whether the |sinθ| negativity law is claimed for this family.
    pub fn has_sine_law(self) -> bool {
        matches!(self, Family::TwoQubit | Family::QutritQubit)
    }
}

/// A resolved phase table plus the eight-level phases when they are known.
#[derive(Debug, Clone)]
pub struct Setup {
    pub family: Family,
    pub table: PhaseTable,
    pub three_qubit: Option<[f64; 4]>,
    /// Set when the table came from `--phases-raw`.
    pub raw: bool,
}

fn phases_or_zero<const N: usize>(given: &[f64]) -> Result<[f64; N]> {
    if given.is_empty() {
        return Ok([0.0; N]);
    }
    given
        .try_into()
        .map_err(|_| anyhow!("expected {N} comma-separated phases, got {}", given.len()))
}

fn spin(flag: &str, value: Option<&String>) -> Result<Option<HalfInt>> {
    value
        .map(|v| {
            let j: HalfInt = v.parse().map_err(|e| anyhow!("--{flag}: {e}"))?;
            HalfInt::spin(j.twice()).map_err(|e| anyhow!("--{flag}: {e}"))
        })
        .transpose()
}

fn odd_map(flag: &str, j: HalfInt, values: &[f64]) -> Result<BTreeMap<HalfInt, f64>> {
    let labels = j.positive_labels();
    if labels.len() != values.len() {
        bail!("--{flag} needs {} values for spin {j}, got {}", labels.len(), values.len());
    }
    Ok(labels.into_iter().zip(values.iter().copied()).collect())
}

impl Setup {
    pub fn resolve(args: &FamilyArgs) -> Result<Self> {
        let j1 = spin("j1", args.j1.as_ref())?;
        let j2 = spin("j2", args.j2.as_ref())?;
        if !args.phases_raw.is_empty() {
            if !args.phases.is_empty() {
                bail!("--phases and --phases-raw are mutually exclusive");
            }
            let (d1, d2) = args.family.spins().unwrap_or((HalfInt::from_twice(0), HalfInt::from_twice(0)));
            let j1 = j1.or((d1.twice() > 0).then_some(d1)).context("--phases-raw needs --j1")?;
            let j2 = j2.or((d2.twice() > 0).then_some(d2)).context("--phases-raw needs --j2")?;
            let table = PhaseTable::from_raw(j1, j2, args.phases_raw.clone())?;
            return Ok(Self { family: args.family, table, three_qubit: None, raw: true });
        }
        let (table, three_qubit) = match args.family {
            Family::TwoQubit => {
                let [phi] = phases_or_zero::<1>(&args.phases)?;
                (family_4x4(phi), None)
            }
            Family::QutritQubit => {
                let [p1, p2] = phases_or_zero::<2>(&args.phases)?;
                (family_6x6(p1, p2), None)
            }
            Family::ThreeQubit => {
                let p = phases_or_zero::<4>(&args.phases)?;
                (family_8x8(p[0], p[1], p[2], p[3])?, Some(p))
            }
            Family::General => {
                if !args.phases.is_empty() {
                    bail!("the general family takes --j1/--j2/--f/--g, not --phases");
                }
                let j1 = j1.context("--family general needs --j1")?;
                let j2 = j2.context("--family general needs --j2")?;
                let f = odd_map("f", j1, &args.f)?;
                let g = odd_map("g", j2, &args.g)?;
                (make_phase_table(j1, j2, &f, &g)?, None)
            }
        };
        Ok(Self { family: args.family, table, three_qubit, raw: false })
    }

    /// R̆(θ); raw tables are used as given.
    pub fn r_matrix(&self, theta: f64) -> Result<RMatrix> {
        Ok(build_r(&build_m_unchecked(&self.table), theta))
    }

    pub fn three_qubit_phases(&self) -> Result<[f64; 4]> {
        self.three_qubit
            .context("this command needs --family 8x8 with --phases φ1,φ2,φ3,φ4")
    }
}

fn parse_complex(s: &str) -> Result<Complex> {
    let bad = || anyhow!("bad parameter {s:?}; expected `re` or `re:im`");
    let (re, im) = match s.split_once(':') {
        Some((re, im)) => (re.trim().parse().map_err(|_| bad())?, im.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 0.0),
    };
    Ok(Complex::new(re, im))
}

pub fn parse_params(values: &[String]) -> Result<YangianParams> {
    if values.is_empty() {
        return Ok(YangianParams::default());
    }
    let [a, b, c, d] = values else {
        bail!("--params takes exactly four values α,β,γ,δ");
    };
    Ok(YangianParams::new(parse_complex(a)?, parse_complex(b)?, parse_complex(c)?, parse_complex(d)?)?)
}
