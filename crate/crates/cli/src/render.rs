use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;
use yangbax_core::hamiltonian::{hamiltonian, labeled_eigenpairs};
use yangbax_core::linalg::hermitian_eig;
use yangbax_core::yangian::{build_generators, emit_dot, transfer_graph as derive_graph, YangianParams, GRAPH_TOL};
use yangbax_core::{Complex, ComplexMatrix};

use crate::Format;

fn pair(z: &Complex) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

/// `{"rows": n, "cols": n, "entries": [[re, im], ...]}`, row-major.
pub fn matrix_json(m: &ComplexMatrix) -> Result<String> {
    let doc = MatrixJson { rows: m.rows(), cols: m.cols(), entries: m.entries().iter().map(pair).collect() };
    Ok(serde_json::to_string(&doc)? + "\n")
}

pub fn matrix_text(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols()).map(|j| format!("{:+.6}{:+.6}i", m[(i, j)].re, m[(i, j)].im)).collect();
        writeln!(out, "{}", cells.join("  ")).unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
struct EigenpairJson {
    label: String,
    energy: f64,
    vector: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize)]
struct SpectrumJson {
    theta: f64,
    phases: [f64; 4],
    eigenvalues: Vec<f64>,
    eigenpairs: Vec<EigenpairJson>,
}

pub fn spectrum(theta: f64, phis: [f64; 4], format: Format) -> Result<String> {
    let values = hermitian_eig(&hamiltonian(theta, phis)?)?.values;
    let pairs: Vec<EigenpairJson> = labeled_eigenpairs(theta, phis)?
        .iter()
        .map(|(i, s, p)| EigenpairJson {
            label: format!("e{i}{}", s.symbol()),
            energy: p.energy,
            vector: p.state.amplitudes().iter().map(pair).collect(),
        })
        .collect();
    if format == Format::Json {
        let doc = SpectrumJson { theta, phases: phis, eigenvalues: values, eigenpairs: pairs };
        return Ok(serde_json::to_string_pretty(&doc)? + "\n");
    }
    let mut out = String::new();
    writeln!(out, "theta = {theta}").unwrap();
    writeln!(out, "phases = {phis:?}").unwrap();
    let shown: Vec<String> = values.iter().map(|v| format!("{v:+.12}")).collect();
    writeln!(out, "eigenvalues: {}", shown.join(" ")).unwrap();
    for p in &pairs {
        let amps: Vec<String> = p.vector.iter().map(|[re, im]| format!("{re:+.6}{im:+.6}i")).collect();
        writeln!(out, "{} E={:+.1} [{}]", p.label, p.energy, amps.join(", ")).unwrap();
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct EdgeJson {
    generator: &'static str,
    from: String,
    to: String,
    coefficient: [f64; 2],
}

#[derive(Debug, Serialize)]
struct GraphJson {
    note: &'static str,
    nodes: Vec<String>,
    edges: Vec<EdgeJson>,
}

pub fn transfer_graph(theta: f64, phis: [f64; 4], params: &YangianParams, format: Format) -> Result<String> {
    let pairs = labeled_eigenpairs(theta, phis)?;
    let graph = derive_graph(&build_generators(&pairs, params), &pairs, GRAPH_TOL)?;
    if format != Format::Json {
        return Ok(emit_dot(&graph));
    }
    let mut edges: Vec<_> = graph.edges.iter().collect();
    edges.sort_by(|a, b| a.generator.name().cmp(b.generator.name()).then(a.from.cmp(&b.from)));
    let doc = GraphJson {
        note: "edges derived from the Yangian generator definitions",
        nodes: graph.nodes.iter().map(|n| n.display()).collect(),
        edges: edges
            .into_iter()
            .map(|e| EdgeJson {
                generator: e.generator.name(),
                from: e.from.display(),
                to: e.to.display(),
                coefficient: pair(&e.coefficient),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_json_schema() {
        let m = ComplexMatrix::new(1, 2, vec![Complex::new(1.0, 0.0), Complex::new(0.0, -0.5)]).unwrap();
        assert_eq!(matrix_json(&m).unwrap(), "{\"rows\":1,\"cols\":2,\"entries\":[[1.0,0.0],[0.0,-0.5]]}\n");
    }

    #[test]
    fn spectrum_text_lists_eight_pairs() {
        let text = spectrum(0.4, [0.0; 4], Format::Text).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with('e') && l.contains("E=")).count(), 8);
        let json: serde_json::Value = serde_json::from_str(&spectrum(0.4, [0.0; 4], Format::Json).unwrap()).unwrap();
        assert_eq!(json["eigenpairs"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn graph_formats_agree() {
        let p = YangianParams::default();
        let dot = transfer_graph(0.2, [0.0; 4], &p, Format::Dot).unwrap();
        let json: serde_json::Value =
            serde_json::from_str(&transfer_graph(0.2, [0.0; 4], &p, Format::Json).unwrap()).unwrap();
        let edges = json["edges"].as_array().unwrap();
        assert_eq!(edges.len(), dot.matches(" -> ").count());
        for e in edges {
            let tag = |s: &str| s.replace('+', "p").replace('-', "m");
            let from = tag(e["from"].as_str().unwrap());
            let to = tag(e["to"].as_str().unwrap());
            let g = e["generator"].as_str().unwrap();
            assert!(dot.contains(&format!("  {from} -> {to} [label=\"{g} ")), "{from} {to} {g}");
        }
    }
}
