use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::euler_phi;
use crate::spectral::{
    algebraic_connectivity, closed_form_spectrum, format_rational, laplacian_energy_from_spectrum,
    spanning_tree_count_formula,
};
use crate::structure::{chi_formula, cyclic_line_graph_classification, kappa_formula};

use super::with_pool;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepColumn {
    N,
    Phi,
    Spectrum,
    A,
    Tau,
    Le,
    Kappa,
    Chi,
    LineGraph,
}

impl SweepColumn {
    pub const ALL: [SweepColumn; 9] = [
        SweepColumn::N,
        SweepColumn::Phi,
        SweepColumn::Spectrum,
        SweepColumn::A,
        SweepColumn::Tau,
        SweepColumn::Le,
        SweepColumn::Kappa,
        SweepColumn::Chi,
        SweepColumn::LineGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepColumn::N => "n",
            SweepColumn::Phi => "phi",
            SweepColumn::Spectrum => "spectrum",
            SweepColumn::A => "a",
            SweepColumn::Tau => "tau",
            SweepColumn::Le => "le",
            SweepColumn::Kappa => "kappa",
            SweepColumn::Chi => "chi",
            SweepColumn::LineGraph => "linegraph",
        }
    }

    /// Comma-separated names, returned in canonical column order.
    pub fn parse_list(text: &str) -> Result<Vec<SweepColumn>> {
        let mut out = text
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<SweepColumn>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for SweepColumn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepColumn::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown column {s:?}"),
            })
    }
}

/// Closed-form invariants of the strong power graph of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub phi: u64,
    pub spectrum: String,
    pub a: i64,
    pub tau: BigInt,
    /// Energy by definition over the closed-form spectrum.
    pub le: String,
    pub kappa: usize,
    pub chi: usize,
    pub linegraph: bool,
}

impl SweepRow {
    pub fn for_cyclic(n: usize) -> Result<Self> {
        let spectrum = closed_form_spectrum(n, true);
        let edges: usize = (spectrum.trace() / 2u32)
            .try_into()
            .map_err(|_| Error::TooLarge {
                operation: "sweep",
                size: n,
                limit: usize::MAX,
            })?;
        Ok(SweepRow {
            n,
            phi: euler_phi(n as u64),
            a: algebraic_connectivity(&spectrum)?,
            tau: spanning_tree_count_formula(n, true),
            le: format_rational(&laplacian_energy_from_spectrum(&spectrum, edges, n)?),
            kappa: kappa_formula(n, true),
            chi: chi_formula(n, true),
            linegraph: cyclic_line_graph_classification(n),
            spectrum: spectrum.to_string(),
        })
    }

    fn field(&self, c: SweepColumn) -> String {
        match c {
            SweepColumn::N => self.n.to_string(),
            SweepColumn::Phi => self.phi.to_string(),
            SweepColumn::Spectrum => self.spectrum.clone(),
            SweepColumn::A => self.a.to_string(),
            SweepColumn::Tau => self.tau.to_string(),
            SweepColumn::Le => self.le.clone(),
            SweepColumn::Kappa => self.kappa.to_string(),
            SweepColumn::Chi => self.chi.to_string(),
            SweepColumn::LineGraph => self.linegraph.to_string(),
        }
    }
}

/// One CSV row per `n` in `range`, columns in canonical order.
pub fn sweep(range: RangeInclusive<usize>, columns: &[SweepColumn]) -> Result<String> {
    let mut columns = columns.to_vec();
    columns.sort();
    columns.dedup();
    let ns: Vec<usize> = range.collect();
    let rows: Vec<SweepRow> = with_pool(|| {
        ns.par_iter()
            .map(|&n| SweepRow::for_cyclic(n))
            .collect::<Result<_>>()
    })?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::io("writing sweep", e);
    w.write_record(columns.iter().map(|c| c.name()))
        .map_err(csv_err)?;
    for row in &rows {
        w.write_record(columns.iter().map(|&c| row.field(c)))
            .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::io("writing sweep", e))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
