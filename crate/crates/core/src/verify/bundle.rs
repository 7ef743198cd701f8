use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{chromatic_number_exact, strong_power_graph, vertex_connectivity_bruteforce};
use crate::group::{euler_phi, FiniteGroup};
use crate::permanent::{adjacency_permanent_formula, laplacian_permanent_formula, permanent_ryser};
use crate::spectral::{
    adjacency, algebraic_connectivity, closed_form_spectrum, format_rational, integer_spectrum,
    laplacian, laplacian_energy_closed_form, laplacian_energy_from_spectrum,
    spanning_tree_count_formula, spanning_tree_count_kirchhoff,
};
use crate::structure::{cayley_classification, chi_formula, is_line_graph, kappa_formula};

/// Every invariant of one strong power graph. Oracle-backed fields are
/// `None` when the input exceeds that oracle's size guard.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub group: String,
    pub n: usize,
    pub cyclic: bool,
    pub phi: u64,
    pub edge_count: usize,
    pub connected: bool,
    pub degree_sequence: Vec<usize>,
    pub spectrum: String,
    pub algebraic_connectivity: i64,
    pub spanning_trees: String,
    pub spanning_trees_kirchhoff: Option<String>,
    pub laplacian_energy: String,
    pub laplacian_energy_closed_form: String,
    pub kappa: usize,
    pub kappa_oracle: Option<usize>,
    pub chi: usize,
    pub chi_oracle: Option<usize>,
    pub is_line_graph: Option<bool>,
    pub cayley: bool,
    pub per_adjacency: Option<String>,
    pub per_adjacency_formula: Option<String>,
    pub per_laplacian: Option<String>,
    pub per_laplacian_formula: Option<String>,
}

pub fn invariant_bundle(label: &str, g: &FiniteGroup) -> Result<InvariantBundle> {
    let n = g.order();
    let cyclic = g.is_cyclic();
    let graph = strong_power_graph(g);
    let lap = laplacian(&graph);
    let spectrum = closed_form_spectrum(n, cyclic);
    let m = graph.edge_count();
    // Energy by definition: from the graph's own spectrum when it is small
    // enough to compute exactly, otherwise from the closed-form spectrum.
    let own = integer_spectrum(&lap).ok().flatten();
    let energy = laplacian_energy_from_spectrum(own.as_ref().unwrap_or(&spectrum), m, n)?;
    let cyclic_formula = cyclic && n >= 2;
    Ok(InvariantBundle {
        group: label.to_string(),
        n,
        cyclic,
        phi: euler_phi(n as u64),
        edge_count: m,
        connected: graph.is_connected(),
        degree_sequence: graph.degree_sequence(),
        spectrum: spectrum.to_string(),
        algebraic_connectivity: algebraic_connectivity(&spectrum)?,
        spanning_trees: spanning_tree_count_formula(n, cyclic).to_string(),
        spanning_trees_kirchhoff: spanning_tree_count_kirchhoff(&graph)
            .ok()
            .map(|t| t.to_string()),
        laplacian_energy: format_rational(&energy),
        laplacian_energy_closed_form: format_rational(&laplacian_energy_closed_form(n, cyclic)),
        kappa: kappa_formula(n, cyclic),
        kappa_oracle: vertex_connectivity_bruteforce(&graph).ok(),
        chi: chi_formula(n, cyclic),
        chi_oracle: chromatic_number_exact(&graph).ok(),
        is_line_graph: is_line_graph(&graph).ok(),
        cayley: cayley_classification(g),
        per_adjacency: permanent_ryser(&adjacency(&graph))
            .ok()
            .map(|p| p.to_string()),
        per_adjacency_formula: cyclic_formula.then(|| adjacency_permanent_formula(n).to_string()),
        per_laplacian: permanent_ryser(&lap).ok().map(|p| p.to_string()),
        per_laplacian_formula: cyclic_formula.then(|| laplacian_permanent_formula(n).to_string()),
    })
}

impl InvariantBundle {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bundle serializes");
        s.push('\n');
        s
    }

    /// Two aligned columns; absent oracle values print as `skipped`.
    pub fn to_table(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref()
                .map_or_else(|| "skipped".to_string(), T::to_string)
        }
        let degrees = self
            .degree_sequence
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let rows: Vec<(&str, String)> = vec![
            ("group", self.group.clone()),
            ("n", self.n.to_string()),
            ("cyclic", self.cyclic.to_string()),
            ("phi", self.phi.to_string()),
            ("edges", self.edge_count.to_string()),
            ("connected", self.connected.to_string()),
            ("degree sequence", degrees),
            ("spectrum", self.spectrum.clone()),
            (
                "algebraic connectivity",
                self.algebraic_connectivity.to_string(),
            ),
            ("spanning trees", self.spanning_trees.clone()),
            (
                "spanning trees (Kirchhoff)",
                opt(&self.spanning_trees_kirchhoff),
            ),
            ("Laplacian energy", self.laplacian_energy.clone()),
            (
                "Laplacian energy (closed form)",
                self.laplacian_energy_closed_form.clone(),
            ),
            ("kappa", self.kappa.to_string()),
            ("kappa (brute force)", opt(&self.kappa_oracle)),
            ("chi", self.chi.to_string()),
            ("chi (exact)", opt(&self.chi_oracle)),
            ("line graph", opt(&self.is_line_graph)),
            ("cayley", self.cayley.to_string()),
            ("per(A)", opt(&self.per_adjacency)),
            ("per(A) closed form", opt(&self.per_adjacency_formula)),
            ("per(L)", opt(&self.per_laplacian)),
            ("per(L) closed form", opt(&self.per_laplacian_formula)),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}
