//! Yangian Y(sl(2)) generators built from the labeled eigenpairs of the
//! eight-level Hamiltonian, their defining relations, and the shift-operator
//! transfer graph.
//!
//! Within each sector α = ± the generators act on the four eigenstates
//! e₁ … e₄ as
//!
//! ```text
//! I₊ = |e₁⟩⟨e₂| + |e₃⟩⟨e₄|                 I₃ = ½(|e₁⟩⟨e₁| + |e₃⟩⟨e₃| − |e₂⟩⟨e₂| − |e₄⟩⟨e₄|)
//! F₊ = 2a(|e₁⟩⟨e₄| + b|e₃⟩⟨e₂|)           F₋ = 2a(b|e₄⟩⟨e₁| + |e₂⟩⟨e₃|)
//! F₃ = a(|e₁⟩⟨e₃| − |e₂⟩⟨e₄| + b|e₃⟩⟨e₁| − b|e₄⟩⟨e₂|)
//! ```
//!
//! with (a, b) = (α, β) on the + sector and (γ, δ) on the − sector.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hamiltonian::{LabeledEigenpairs, Sector};
use crate::linalg::{inner, norm_sqr, Complex, ComplexMatrix};

pub const RELATION_TOL: f64 = 1e-10;
pub const GRAPH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YangianParams {
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
    pub delta: Complex,
}

impl Default for YangianParams {
    fn default() -> Self {
        let one = Complex::new(1.0, 0.0);
        Self { alpha: one, beta: one, gamma: one, delta: one }
    }
}

impl YangianParams {
    pub fn new(alpha: Complex, beta: Complex, gamma: Complex, delta: Complex) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)] {
            if !v.re.is_finite() || !v.im.is_finite() || v.norm() <= 1e-12 {
                return Err(Error::InvalidParameter { name });
            }
        }
        Ok(Self { alpha, beta, gamma, delta })
    }

    fn for_sector(&self, sector: Sector) -> (Complex, Complex) {
        match sector {
            Sector::Plus => (self.alpha, self.beta),
            Sector::Minus => (self.gamma, self.delta),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    IPlus,
    IMinus,
    I3,
    FPlus,
    FMinus,
    F3,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::IPlus, Generator::IMinus, Generator::I3, Generator::FPlus, Generator::FMinus, Generator::F3];

    pub fn name(self) -> &'static str {
        match self {
            Generator::IPlus => "I+",
            Generator::IMinus => "I-",
            Generator::I3 => "I3",
            Generator::FPlus => "F+",
            Generator::FMinus => "F-",
            Generator::F3 => "F3",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub i_3: ComplexMatrix,
    pub f_plus: ComplexMatrix,
    pub f_minus: ComplexMatrix,
    pub f_3: ComplexMatrix,
}

impl GeneratorSet {
    pub fn get(&self, g: Generator) -> &ComplexMatrix {
        match g {
            Generator::IPlus => &self.i_plus,
            Generator::IMinus => &self.i_minus,
            Generator::I3 => &self.i_3,
            Generator::FPlus => &self.f_plus,
            Generator::FMinus => &self.f_minus,
            Generator::F3 => &self.f_3,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Generator, &ComplexMatrix)> {
        Generator::ALL.into_iter().map(move |g| (g, self.get(g)))
    }
}

pub fn build_generators(pairs: &LabeledEigenpairs, params: &YangianParams) -> GeneratorSet {
    let zero = || ComplexMatrix::zeros(8, 8);
    let mut set = GeneratorSet {
        i_plus: zero(),
        i_minus: zero(),
        i_3: zero(),
        f_plus: zero(),
        f_minus: zero(),
        f_3: zero(),
    };
    let one = Complex::new(1.0, 0.0);
    for sector in [Sector::Plus, Sector::Minus] {
        let e = |i: usize| pairs.vector(i, sector);
        // c·|e_i⟩⟨e_j|
        let ket_bra = |c: Complex, i: usize, j: usize| ComplexMatrix::outer(e(i), e(j)).scale(c);
        let (a, b) = params.for_sector(sector);
        let add = |acc: &mut ComplexMatrix, terms: &[(Complex, usize, usize)]| {
            for &(c, i, j) in terms {
                *acc = &*acc + &ket_bra(c, i, j);
            }
        };
        add(&mut set.i_plus, &[(one, 1, 2), (one, 3, 4)]);
        add(&mut set.i_minus, &[(one, 2, 1), (one, 4, 3)]);
        let h = Complex::new(0.5, 0.0);
        add(&mut set.i_3, &[(h, 1, 1), (h, 3, 3), (-h, 2, 2), (-h, 4, 4)]);
        add(&mut set.f_plus, &[(a * 2.0, 1, 4), (a * b * 2.0, 3, 2)]);
        add(&mut set.f_minus, &[(a * b * 2.0, 4, 1), (a * 2.0, 2, 3)]);
        add(&mut set.f_3, &[(a, 1, 3), (-a, 2, 4), (a * b, 3, 1), (-a * b, 4, 2)]);
    }
    set
}

/// Named residuals of a family of relations.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RelationReport {
    pub entries: Vec<(String, f64)>,
}

impl RelationReport {
    fn push(&mut self, name: &str, residual: f64) {
        self.entries.push((name.to_string(), residual));
    }

    pub fn max(&self) -> f64 {
        self.entries.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }

    pub fn all_within(&self, tol: f64) -> bool {
        self.entries.iter().all(|(_, r)| *r <= tol)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn comm(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.commutator(b).expect("generators are 8x8")
}

fn dist(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.max_abs_diff(b)
}

/// [I₃, I±] = ±I±, [I₊, I₋] = 2I₃.
pub fn verify_sl2(g: &GeneratorSet) -> RelationReport {
    let mut r = RelationReport::default();
    r.push(
        "[I3,I±] = ±I±",
        dist(&comm(&g.i_3, &g.i_plus), &g.i_plus).max(dist(&comm(&g.i_3, &g.i_minus), &g.i_minus.scale_real(-1.0))),
    );
    r.push("[I+,I-] = 2I3", dist(&comm(&g.i_plus, &g.i_minus), &g.i_3.scale_real(2.0)));
    r
}

/// The six mixed I/F relations.
pub fn verify_mixed(g: &GeneratorSet) -> RelationReport {
    let mut r = RelationReport::default();
    let neg = |m: &ComplexMatrix| m.scale_real(-1.0);
    r.push(
        "[I3,F±] = ±F±",
        dist(&comm(&g.i_3, &g.f_plus), &g.f_plus).max(dist(&comm(&g.i_3, &g.f_minus), &neg(&g.f_minus))),
    );
    r.push(
        "[F3,I±] = ±F±",
        dist(&comm(&g.f_3, &g.i_plus), &g.f_plus).max(dist(&comm(&g.f_3, &g.i_minus), &neg(&g.f_minus))),
    );
    r.push("[I+,F-] = 2F3", dist(&comm(&g.i_plus, &g.f_minus), &g.f_3.scale_real(2.0)));
    r.push("[I-,F+] = -2F3", dist(&comm(&g.i_minus, &g.f_plus), &g.f_3.scale_real(-2.0)));
    r.push("[I3,F3] = 0", comm(&g.i_3, &g.f_3).max_abs());
    r.push(
        "[I±,F±] = 0",
        comm(&g.i_plus, &g.f_plus).max_abs().max(comm(&g.i_minus, &g.f_minus).max_abs()),
    );
    r
}

/// The five Serre-type relations. The last pair is read with a fixed inner
/// commutator, [F±,[F+,F-]] ± 2[F3,[F3,F±]] = 0.
pub fn verify_serre(g: &GeneratorSet) -> RelationReport {
    let mut r = RelationReport::default();
    let fpm = comm(&g.f_plus, &g.f_minus);
    r.push("[F3,[F+,F-]] = 0", comm(&g.f_3, &fpm).max_abs());
    r.push("[F+,[F3,F+]] = 0", comm(&g.f_plus, &comm(&g.f_3, &g.f_plus)).max_abs());
    r.push("[F-,[F3,F-]] = 0", comm(&g.f_minus, &comm(&g.f_3, &g.f_minus)).max_abs());
    let plus = &comm(&g.f_plus, &fpm) + &comm(&g.f_3, &comm(&g.f_3, &g.f_plus)).scale_real(2.0);
    r.push("[F+,[F+,F-]] + 2[F3,[F3,F+]] = 0", plus.max_abs());
    let minus = &comm(&g.f_minus, &fpm) - &comm(&g.f_3, &comm(&g.f_3, &g.f_minus)).scale_real(2.0);
    r.push("[F-,[F+,F-]] - 2[F3,[F3,F-]] = 0", minus.max_abs());
    r
}

/// ‖[F₋,[F₋,F₊]] − 2[F₃,[F₃,F₋]]‖, the lower-sign Serre relation with the inner
/// commutator's order flipped along with the sign. It does not vanish for these
/// generators; reported for reference only.
pub fn serre_lower_flipped_residual(g: &GeneratorSet) -> f64 {
    let m = &comm(&g.f_minus, &comm(&g.f_minus, &g.f_plus)) - &comm(&g.f_3, &comm(&g.f_3, &g.f_minus)).scale_real(2.0);
    m.max_abs()
}

/// ‖[H, Y]‖ for each generator.
pub fn verify_symmetry(h: &ComplexMatrix, g: &GeneratorSet) -> Result<RelationReport> {
    if h.shape() != (8, 8) {
        return Err(Error::DimensionMismatch { op: "verify_symmetry", left: h.shape(), right: (8, 8) });
    }
    let mut r = RelationReport::default();
    for (gen, m) in g.iter() {
        r.push(&format!("[H,{}] = 0", gen.name()), comm(h, m).max_abs());
    }
    Ok(r)
}

/// Serre residuals over α, β, γ, δ ∈ {½, 1, 2, e^{iπ/4}}.
pub fn serre_parameter_sweep(pairs: &LabeledEigenpairs) -> Vec<(YangianParams, RelationReport)> {
    let values = [
        Complex::new(0.5, 0.0),
        Complex::new(1.0, 0.0),
        Complex::new(2.0, 0.0),
        Complex::from_polar(1.0, std::f64::consts::FRAC_PI_4),
    ];
    let mut out = Vec::with_capacity(256);
    for &a in &values {
        for &b in &values {
            for &c in &values {
                for &d in &values {
                    let p = YangianParams::new(a, b, c, d).expect("nonzero sweep values");
                    out.push((p, verify_serre(&build_generators(pairs, &p))));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeLabel {
    pub index: usize,
    pub sector: Sector,
}

impl NodeLabel {
    /// e1p, e1m, …
    pub fn name(&self) -> String {
        format!("e{}{}", self.index, self.sector.tag())
    }

    pub fn display(&self) -> String {
        format!("e{}{}", self.index, self.sector.symbol())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub generator: Generator,
    pub from: NodeLabel,
    pub to: NodeLabel,
    pub coefficient: Complex,
}

/// Directed graph of Y|e⟩ = c|e′⟩ over the eight eigenstates.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferGraph {
    pub nodes: Vec<NodeLabel>,
    pub edges: Vec<Edge>,
}

impl TransferGraph {
    pub fn edges_for(&self, g: Generator) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.generator == g)
    }

    pub fn find(&self, g: Generator, from: NodeLabel) -> Option<&Edge> {
        self.edges.iter().find(|e| e.generator == g && e.from == from)
    }
}

pub fn nodes() -> Vec<NodeLabel> {
    (1..=4)
        .flat_map(|index| [Sector::Plus, Sector::Minus].map(|sector| NodeLabel { index, sector }))
        .collect()
}

pub fn transfer_graph(g: &GeneratorSet, pairs: &LabeledEigenpairs, tol: f64) -> Result<TransferGraph> {
    let nodes = nodes();
    let mut edges = Vec::new();
    for (gen, m) in g.iter() {
        for &from in &nodes {
            let image = m.apply(pairs.vector(from.index, from.sector))?;
            if norm_sqr(&image).sqrt() < tol {
                continue;
            }
            let hits: Vec<(NodeLabel, Complex)> = nodes
                .iter()
                .map(|&n| (n, inner(pairs.vector(n.index, n.sector), &image)))
                .filter(|(_, c)| c.norm() > tol)
                .collect();
            let ambiguous = || Error::AmbiguousImage {
                generator: gen.name().to_string(),
                source_label: from.display(),
                count: hits.len(),
            };
            let [(to, coefficient)] = hits[..] else {
                return Err(ambiguous());
            };
            let target = pairs.vector(to.index, to.sector);
            let residual = image
                .iter()
                .zip(target)
                .map(|(y, t)| (y - coefficient * t).norm())
                .fold(0.0, f64::max);
            if residual >= tol {
                return Err(ambiguous());
            }
            edges.push(Edge { generator: gen, from, to, coefficient });
        }
    }
    Ok(TransferGraph { nodes, edges })
}

fn fmt_coordinate(x: f64) -> String {
    // no "-0.000000"
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.6}")
}

pub fn format_coefficient(c: Complex) -> String {
    format!("({}, {})", fmt_coordinate(c.re), fmt_coordinate(c.im))
}

/// Graphviz rendering with stable ordering: nodes by index then sign, edges by
/// generator name then source node.
pub fn emit_dot(graph: &TransferGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph transfer_graph {\n");
    out.push_str("  // edges derived from the Yangian generator definitions\n");
    let mut nodes = graph.nodes.clone();
    nodes.sort();
    for n in &nodes {
        writeln!(out, "  {} [label=\"{}\"];", n.name(), n.display()).unwrap();
    }
    let mut edges: Vec<&Edge> = graph.edges.iter().collect();
    edges.sort_by(|a, b| a.generator.name().cmp(b.generator.name()).then(a.from.cmp(&b.from)));
    for e in edges {
        writeln!(
            out,
            "  {} -> {} [label=\"{} {}\"];",
            e.from.name(),
            e.to.name(),
            e.generator.name(),
            format_coefficient(e.coefficient)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{hamiltonian, labeled_eigenpairs};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn pairs(theta: f64) -> LabeledEigenpairs {
        labeled_eigenpairs(theta, [0.3, -0.2, 1.1, 0.6]).unwrap()
    }

    fn node(index: usize, sector: Sector) -> NodeLabel {
        NodeLabel { index, sector }
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn random_params(rng: &mut impl Rng) -> YangianParams {
        let mut z = || Complex::from_polar(rng.random_range(0.2..2.0), rng.random_range(-PI..PI));
        YangianParams::new(z(), z(), z(), z()).unwrap()
    }

    #[test]
    fn params_must_be_nonzero() {
        let one = c(1., 0.);
        assert!(YangianParams::new(one, c(0., 0.), one, one).is_err());
        assert!(YangianParams::new(one, one, one, c(f64::NAN, 0.)).is_err());
    }

    #[test]
    fn generator_actions() {
        let p = pairs(0.9);
        let params = YangianParams::new(c(1.5, 0.5), c(0.7, 0.), c(2., 0.), c(0., 1.)).unwrap();
        let g = build_generators(&p, &params);
        let e = |i, s| p.vector(i, s).to_vec();
        let close = |a: &[Complex], b: &[Complex]| a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12);

        assert!(close(&g.i_plus.apply(&e(2, Sector::Plus)).unwrap(), &e(1, Sector::Plus)));
        let twice = g.i_plus.apply(&g.i_plus.apply(&e(2, Sector::Plus)).unwrap()).unwrap();
        assert!(norm_sqr(&twice) < 1e-24);
        let f = g.f_plus.apply(&e(4, Sector::Plus)).unwrap();
        let want: Vec<Complex> = e(1, Sector::Plus).iter().map(|z| z * params.alpha * 2.0).collect();
        assert!(close(&f, &want));

        assert!(g.i_minus.max_abs_diff(&g.i_plus.dagger()) <= 1e-12);
        assert!(g.i_3.is_hermitian(1e-12));
    }

    #[test]
    fn relations_default_params() {
        for theta in [0.0, 0.5, 2.0] {
            let g = build_generators(&pairs(theta), &YangianParams::default());
            let sl2 = verify_sl2(&g);
            assert_eq!(sl2.len(), 2);
            assert!(sl2.all_within(1e-12), "{sl2:?}");
            let mixed = verify_mixed(&g);
            assert_eq!(mixed.len(), 6);
            assert!(mixed.all_within(1e-12), "{mixed:?}");
            let serre = verify_serre(&g);
            assert_eq!(serre.len(), 5);
            assert!(serre.all_within(1e-10), "{serre:?}");
        }
    }

    #[test]
    fn relations_random_params() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let g = build_generators(&pairs(rng.random_range(-PI..PI)), &random_params(&mut rng));
            assert!(verify_sl2(&g).all_within(1e-10));
            let mixed = verify_mixed(&g);
            assert!(mixed.all_within(1e-10), "{mixed:?}");
            assert!(verify_serre(&g).all_within(1e-10));
        }
    }

    #[test]
    fn flipped_lower_serre_does_not_vanish() {
        let g = build_generators(&pairs(0.4), &YangianParams::default());
        let r = serre_lower_flipped_residual(&g);
        assert!(r > 1.0, "{r}");
    }

    #[test]
    fn serre_sweep_covers_all_combinations() {
        let sweep = serre_parameter_sweep(&pairs(1.0));
        assert_eq!(sweep.len(), 256);
        assert!(sweep.iter().all(|(_, r)| r.all_within(1e-9)));
    }

    #[test]
    fn symmetry_holds_and_detects_mismatch() {
        let ph = [0.3, -0.2, 1.1, 0.6];
        let h0 = hamiltonian(0.0, ph).unwrap();
        let r = verify_symmetry(&h0, &build_generators(&pairs(0.0), &YangianParams::default())).unwrap();
        assert!(r.all_within(1e-12));

        let h = hamiltonian(1.3, ph).unwrap();
        let good = build_generators(&labeled_eigenpairs(1.3, ph).unwrap(), &YangianParams::default());
        let r = verify_symmetry(&h, &good).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.all_within(1e-10));

        let bad = build_generators(&labeled_eigenpairs(0.4, ph).unwrap(), &YangianParams::default());
        assert!(verify_symmetry(&h, &bad).unwrap().max() > 1e-3);
        assert!(verify_symmetry(&ComplexMatrix::identity(4), &good).is_err());
    }

    #[test]
    fn casimir_is_constant_on_each_doublet() {
        let g = build_generators(&pairs(0.8), &YangianParams::default());
        let cas = &(&(&g.i_plus * &g.i_minus) + &(&g.i_minus * &g.i_plus)) + &(&g.i_3 * &g.i_3).scale_real(2.0);
        // each doublet {e1,e2}, {e3,e4} is spin ½: I₊I₋ + I₋I₊ + 2I₃² = 3/2
        assert!(cas.max_abs_diff(&ComplexMatrix::identity(8).scale_real(1.5)) < 1e-12);
    }

    #[test]
    fn transfer_graph_edges() {
        let params = YangianParams::new(c(2., 0.), c(0.5, 0.), c(3., 0.), c(0., 1.)).unwrap();
        let p = pairs(0.6);
        let graph = transfer_graph(&build_generators(&p, &params), &p, GRAPH_TOL).unwrap();
        assert_eq!(graph.nodes.len(), 8);
        let near = |a: Complex, b: Complex| (a - b).norm() < 1e-9;
        for s in [Sector::Plus, Sector::Minus] {
            let e = graph.find(Generator::IPlus, node(2, s)).unwrap();
            assert_eq!(e.to, node(1, s));
            assert!(near(e.coefficient, c(1., 0.)));
            assert_eq!(graph.find(Generator::IPlus, node(4, s)).unwrap().to, node(3, s));
        }
        let fp = |from: NodeLabel| graph.find(Generator::FPlus, from).unwrap();
        assert_eq!(fp(node(4, Sector::Plus)).to, node(1, Sector::Plus));
        assert!(near(fp(node(4, Sector::Plus)).coefficient, params.alpha * 2.0));
        assert!(near(fp(node(2, Sector::Plus)).coefficient, params.alpha * params.beta * 2.0));
        assert!(near(fp(node(4, Sector::Minus)).coefficient, params.gamma * 2.0));
        assert!(near(fp(node(2, Sector::Minus)).coefficient, params.gamma * params.delta * 2.0));

        let f3 = |from: NodeLabel| graph.find(Generator::F3, from).unwrap();
        assert_eq!(f3(node(3, Sector::Plus)).to, node(1, Sector::Plus));
        assert!(near(f3(node(4, Sector::Plus)).coefficient, -params.alpha));
        assert!(near(f3(node(1, Sector::Minus)).coefficient, params.gamma * params.delta));

        let i3 = graph.find(Generator::I3, node(2, Sector::Minus)).unwrap();
        assert_eq!(i3.to, node(2, Sector::Minus));
        assert!(near(i3.coefficient, c(-0.5, 0.)));

        assert!(graph.edges.iter().all(|e| e.from.sector == e.to.sector));
        let count = |g| graph.edges_for(g).count();
        assert_eq!(
            Generator::ALL.map(count),
            [4, 4, 8, 4, 4, 8]
        );
    }

    #[test]
    fn graph_is_theta_independent() {
        let params = YangianParams::default();
        let graph = |t: f64| {
            let p = pairs(t);
            transfer_graph(&build_generators(&p, &params), &p, GRAPH_TOL).unwrap()
        };
        assert_eq!(emit_dot(&graph(0.0)), emit_dot(&graph(2.2)));
    }

    #[test]
    fn ambiguous_image_is_an_error() {
        let p = pairs(0.5);
        let mut g = build_generators(&p, &YangianParams::default());
        g.i_plus = ComplexMatrix::identity(8).scale_real(0.0);
        g.i_plus[(0, 0)] = c(1., 0.);
        g.i_plus[(0, 1)] = c(1., 0.);
        assert!(matches!(transfer_graph(&g, &p, GRAPH_TOL), Err(Error::AmbiguousImage { .. })));
    }

    #[test]
    fn dot_output() {
        let empty = TransferGraph { nodes: nodes(), edges: vec![] };
        let text = emit_dot(&empty);
        assert_eq!(text.lines().count(), 8 + 3);
        assert!(text.starts_with("digraph transfer_graph {\n"));
        assert!(text.contains("  e1p [label=\"e1+\"];\n"));

        let p = pairs(0.3);
        let graph = transfer_graph(&build_generators(&p, &YangianParams::default()), &p, GRAPH_TOL).unwrap();
        let a = emit_dot(&graph);
        assert_eq!(a, emit_dot(&graph.clone()));
        assert!(a.contains("  e4p -> e1p [label=\"F+ (2.000000, 0.000000)\"];\n"));
        assert!(a.contains("  e4m -> e2m [label=\"F3 (-1.000000, 0.000000)\"];\n"));
        assert_eq!(a.matches(" -> ").count(), 32);
        let first_edge = a.lines().find(|l| l.contains("->")).unwrap();
        assert!(first_edge.contains("F+"));
    }
}
