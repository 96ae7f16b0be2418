//! Side-by-side spectra of both models and the per-level energy excess of
//! the fourth-order model over the second-order one.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::classical;
use crate::error::{Error, Result};
use crate::flexural;
use crate::welldomain::{EigenResult, ModelKind, WellSpec};

/// One paired level. Energies are the dimensionless `z²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DarkLevel {
    pub index: usize,
    pub z_squared_flexural: f64,
    pub z_squared_classical: f64,
    /// `z_squared_flexural − z_squared_classical`
    pub z_squared_dark: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub spec: WellSpec,
    pub flexural: Vec<EigenResult>,
    pub classical: Vec<EigenResult>,
    pub dark_levels: Vec<DarkLevel>,
}

impl SpectrumReport {
    /// Pairs the two spectra by index over their common prefix.
    pub fn from_spectra(
        spec: WellSpec,
        flexural: Vec<EigenResult>,
        classical: Vec<EigenResult>,
    ) -> Self {
        let dark_levels = flexural
            .iter()
            .zip(&classical)
            .map(|(f, c)| DarkLevel {
                index: f.index,
                z_squared_flexural: f.z_squared,
                z_squared_classical: c.z_squared,
                z_squared_dark: f.z_squared - c.z_squared,
            })
            .collect();
        SpectrumReport {
            spec,
            flexural,
            classical,
            dark_levels,
        }
    }

    pub fn empty(spec: WellSpec) -> Self {
        SpectrumReport::from_spectra(spec, Vec::new(), Vec::new())
    }

    pub fn levels(&self, model: ModelKind) -> &[EigenResult] {
        match model {
            ModelKind::FlexuralShear4th => &self.flexural,
            ModelKind::Schrodinger2nd => &self.classical,
        }
    }

    /// Keeps only one model's levels; the pairing becomes empty.
    pub fn restricted_to(&self, model: ModelKind) -> Self {
        let keep = |m: ModelKind| {
            if m == model {
                self.levels(m).to_vec()
            } else {
                Vec::new()
            }
        };
        SpectrumReport::from_spectra(
            self.spec,
            keep(ModelKind::FlexuralShear4th),
            keep(ModelKind::Schrodinger2nd),
        )
    }

    /// All eigenvalues, flexural first, in export order.
    pub fn rows(&self) -> impl Iterator<Item = &EigenResult> {
        self.flexural.iter().chain(&self.classical)
    }
}

/// Solves both models for `spec`. An infinite well has no natural cut-off,
/// so it needs `max_levels`; for a finite well it truncates both lists.
pub fn build_report(spec: WellSpec, max_levels: Option<usize>) -> Result<SpectrumReport> {
    let (mut flexural, mut classical) = match spec {
        WellSpec::Finite(strength) => (
            flexural::finite_well_spectrum(strength)?,
            classical::classical_finite_spectrum(strength)?,
        ),
        WellSpec::Infinite => {
            let count = max_levels.ok_or(Error::MissingLevelCount)?;
            (
                flexural::infinite_well_eigenvalues(count)?,
                classical::classical_infinite_eigenvalues(count)?,
            )
        }
    };
    if let Some(n) = max_levels {
        flexural.truncate(n);
        classical.truncate(n);
    }
    Ok(SpectrumReport::from_spectra(spec, flexural, classical))
}

/// Eigenvalues of both models for `bL = 10`, `30` and `∞`, laid out by
/// level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOne {
    pub columns: Vec<SpectrumReport>,
}

/// Rows shown for the deeper wells.
pub const TABLE_ROWS: usize = 9;

impl TableOne {
    pub fn build() -> Result<Self> {
        let columns = [
            WellSpec::finite(10.0)?,
            WellSpec::finite(30.0)?,
            WellSpec::Infinite,
        ]
        .into_iter()
        .map(|spec| build_report(spec, Some(TABLE_ROWS)))
        .collect::<Result<_>>()?;
        Ok(TableOne { columns })
    }

    /// `z` of level `n` (1-based) for `model` in the column for `spec`.
    pub fn cell(&self, n: usize, model: ModelKind, spec: WellSpec) -> Option<f64> {
        self.columns
            .iter()
            .find(|c| c.spec == spec)?
            .levels(model)
            .get(n.checked_sub(1)?)
            .map(|r| r.z)
    }

    fn row_count(&self) -> usize {
        self.columns
            .iter()
            .flat_map(|c| [c.flexural.len(), c.classical.len()])
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for TableOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let models = [ModelKind::FlexuralShear4th, ModelKind::Schrodinger2nd];
        let mut header = format!("{:<4}", "n");
        for model in models {
            for col in &self.columns {
                let label = format!("{} {}", model.short_name(), col.spec);
                write!(header, " {label:>16}")?;
            }
        }
        writeln!(f, "{}", header.trim_end())?;
        for n in 1..=self.row_count() {
            let mut line = format!("{n:<4}");
            for model in models {
                for col in &self.columns {
                    match col.levels(model).get(n - 1) {
                        Some(r) => write!(line, " {:>16.6}", r.z)?,
                        None => write!(line, " {:>16}", "---")?,
                    }
                }
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bl10_report_pairs_seven_levels() {
        let report = build_report(WellSpec::finite(10.0).unwrap(), None).unwrap();
        assert_eq!(report.flexural.len(), 7);
        assert_eq!(report.classical.len(), 7);
        assert_eq!(report.dark_levels.len(), 7);
        let first = report.dark_levels[0];
        assert!((first.z_squared_flexural - 3.8995).abs() < 1e-4);
        assert!((first.z_squared_classical - 2.0379).abs() < 1e-4);
        assert!((first.z_squared_dark - 1.8616).abs() < 1e-4);
        assert!(report.dark_levels.iter().all(|d| d.z_squared_dark > 0.0));
    }

    #[test]
    fn infinite_report_requires_level_count() {
        assert!(matches!(
            build_report(WellSpec::Infinite, None),
            Err(Error::MissingLevelCount)
        ));
        let report = build_report(WellSpec::Infinite, Some(7)).unwrap();
        for (f, c) in report.flexural.iter().zip(&report.classical) {
            assert!(f.z > c.z);
        }
    }

    #[test]
    fn dark_levels_cover_common_prefix() {
        // the classical well at bL = 30 holds one more state than the flexural one
        let report = build_report(WellSpec::finite(30.0).unwrap(), None).unwrap();
        assert_eq!(report.flexural.len(), 19);
        assert_eq!(report.classical.len(), 20);
        assert_eq!(report.dark_levels.len(), 19);
    }

    #[test]
    fn table_cells() {
        let t = TableOne::build().unwrap();
        let f30 = WellSpec::finite(30.0).unwrap();
        let cell = |n, m, s| t.cell(n, m, s).unwrap();
        assert!((cell(3, ModelKind::FlexuralShear4th, f30) - 5.157210).abs() < 1e-6);
        assert!((cell(8, ModelKind::Schrodinger2nd, f30) - 12.149413).abs() < 1e-6);
        assert!(
            (cell(7, ModelKind::FlexuralShear4th, WellSpec::Infinite) - 11.780972).abs() < 1e-6
        );
        assert!(t
            .cell(
                8,
                ModelKind::FlexuralShear4th,
                WellSpec::finite(10.0).unwrap()
            )
            .is_none());
    }

    #[test]
    fn table_renders_six_decimals() {
        let text = TableOne::build().unwrap().to_string();
        assert_eq!(text.lines().count(), 1 + TABLE_ROWS);
        assert!(text.contains("1.974707"));
        assert!(text.contains("14.922565"));
        assert!(text.contains("---"));
    }
}
