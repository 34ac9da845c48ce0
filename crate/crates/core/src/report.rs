//! End-to-end analyses and their serialised reports. The `lambda-cdp`
//! binary is a thin argument parser over this module.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::cdp::{
    check_equitable, compute_cdp, divisor_spectrum, reconstruct_cdp, remote_core_forbidden,
    DivisorEigenpair, Equitability,
};
use crate::entropy::{entropy_bounds, EntropyBounds, EntropyReport, LogBase};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Format, Graph, VertexSet};
use crate::singular::{coalescence_report, singular_report, CoalescenceReport, SingularReport};
use crate::spectral::{nullity, Spectrum, Tolerances, UniversalParams};
use crate::symmetry::{
    automorphism_orbits, verify_cdp_orbit_refinement, verify_core_orbit_consistency, OrbitPartition,
    DEFAULT_VERTEX_CAP,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Named universal matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Seidel,
}

impl Preset {
    pub const NAMES: [&'static str; 4] = ["adjacency", "laplacian", "signless-laplacian", "seidel"];

    pub fn params(self) -> UniversalParams {
        match self {
            Preset::Adjacency => UniversalParams::ADJACENCY,
            Preset::Laplacian => UniversalParams::LAPLACIAN,
            Preset::SignlessLaplacian => UniversalParams::SIGNLESS_LAPLACIAN,
            Preset::Seidel => UniversalParams::SEIDEL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Adjacency => "adjacency",
            Preset::Laplacian => "laplacian",
            Preset::SignlessLaplacian => "signless-laplacian",
            Preset::Seidel => "seidel",
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "adjacency" => Ok(Preset::Adjacency),
            "laplacian" => Ok(Preset::Laplacian),
            "signless-laplacian" => Ok(Preset::SignlessLaplacian),
            "seidel" => Ok(Preset::Seidel),
            other => Err(format!("unknown preset `{other}` (expected one of {})", Preset::NAMES.join(", "))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixInfo {
    pub label: String,
    /// `[γ_A, γ_D, γ_I, γ_J]`.
    pub gammas: [f64; 4],
}

#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub params: UniversalParams,
    pub label: String,
    pub base: LogBase,
    pub tolerances: Tolerances,
    /// Restrict the analysis to the cluster nearest this value.
    pub target: Option<f64>,
    pub vertex_cap: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig::preset(Preset::Adjacency)
    }
}

impl AnalysisConfig {
    pub fn preset(preset: Preset) -> Self {
        AnalysisConfig::custom(preset.params(), preset.name())
    }

    pub fn custom(params: UniversalParams, label: impl Into<String>) -> Self {
        AnalysisConfig {
            params,
            label: label.into(),
            base: LogBase::E,
            tolerances: Tolerances::default(),
            target: None,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }

    pub fn is_adjacency(&self) -> bool {
        self.params == UniversalParams::ADJACENCY
    }

    fn matrix_info(&self) -> MatrixInfo {
        MatrixInfo { label: self.label.clone(), gammas: self.params.as_array() }
    }
}

/// Reads a graph file, picking JSON or edge-list from its content.
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Ok(parse_graph(&text, Format::detect(&text))?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edge_count: usize,
    pub orbits: Vec<VertexSet>,
    /// Entropy of the orbit partition.
    pub orbital_entropy: f64,
    /// Nullity of the adjacency matrix.
    pub nullity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterReport {
    pub lambda: f64,
    pub multiplicity: usize,
    pub core: VertexSet,
    pub core_forbidden: VertexSet,
    pub remote_core_forbidden: VertexSet,
    pub cdp_blocks: Vec<VertexSet>,
    pub d_max: usize,
    pub entropy: f64,
    pub bounds: EntropyBounds,
    pub equitable: bool,
    pub divisor_matrix: Option<Vec<Vec<f64>>>,
    pub core_orbit_consistent: bool,
    pub cdp_orbit_refinement: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub matrix: MatrixInfo,
    pub log_base: LogBase,
    pub tolerances: Tolerances,
    pub graph: GraphSummary,
    pub singular: Option<SingularReport>,
    pub singular_note: Option<String>,
    pub eigenvalues: Vec<ClusterReport>,
}

/// Per-eigenvalue core sets, CDPs, entropies, equitability and orbit checks,
/// plus graph-level orbit, nullity and (for the adjacency matrix) singular
/// structure.
pub fn analyze(g: &Graph, config: &AnalysisConfig) -> Result<AnalysisReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tol = &config.tolerances;
    let base = config.base;
    let spectrum = Spectrum::new(g, &config.params, tol)?;
    let orbits = automorphism_orbits(g, config.vertex_cap)?;
    let clusters = match config.target {
        Some(value) => vec![spectrum.target(value)?.clone()],
        None => spectrum.clusters.clone(),
    };
    let eigenvalues = clusters
        .iter()
        .map(|cluster| {
            let cs = spectrum.core_set(cluster)?;
            let cdp = compute_cdp(g, &cs)?;
            let entropy = EntropyReport::for_cdp(&cdp, base)?;
            let divisor = check_equitable(&spectrum.matrix, &cdp.blocks, tol.equitable)?;
            Ok(ClusterReport {
                lambda: cluster.value,
                multiplicity: cluster.multiplicity,
                core: cs.core.clone(),
                core_forbidden: cs.core_forbidden.clone(),
                remote_core_forbidden: remote_core_forbidden(&cdp),
                d_max: cdp.d_max(),
                entropy: entropy.value,
                bounds: entropy.bounds.expect("CDP entropy carries bounds"),
                equitable: divisor.divisor().is_some(),
                divisor_matrix: divisor.divisor().map(|b| b.entries.clone()),
                core_orbit_consistent: verify_core_orbit_consistency(&cs, &orbits).holds,
                cdp_orbit_refinement: verify_cdp_orbit_refinement(&cdp, &orbits).holds,
                cdp_blocks: cdp.blocks,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (singular, singular_note) = if config.is_adjacency() {
        (Some(singular_report(g, base, tol)?), None)
    } else {
        (None, Some("singular-graph analysis applies to the adjacency matrix only".to_string()))
    };
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        matrix: config.matrix_info(),
        log_base: base,
        tolerances: *tol,
        graph: summary(g, &orbits, base, tol)?,
        singular,
        singular_note,
        eigenvalues,
    })
}

fn summary(g: &Graph, orbits: &OrbitPartition, base: LogBase, tol: &Tolerances) -> Result<GraphSummary> {
    Ok(GraphSummary {
        n: g.order(),
        edge_count: g.edge_count(),
        orbital_entropy: EntropyReport::for_partition(&orbits.orbits, g.order(), base)?.value,
        orbits: orbits.orbits.clone(),
        nullity: nullity(g, tol)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconstructReport {
    pub schema_version: u32,
    pub matrix: MatrixInfo,
    pub lambda: f64,
    pub mu: f64,
    pub lambda_cdp: Vec<VertexSet>,
    pub divisor_matrix: Vec<Vec<f64>>,
    pub divisor_spectrum: Vec<DivisorEigenpair>,
    /// `X_B^0, X_B^1, ...` as 1-based block indices.
    pub index_layers: Vec<Vec<usize>>,
    pub core_subset: VertexSet,
    pub multiplicity_u: usize,
    pub multiplicity_b: usize,
    pub mu_cdp: Option<Vec<VertexSet>>,
    pub stranded_indices: Vec<usize>,
}

/// Rebuilds the μ-CDP from the λ-CDP. Fails with [`Error::NotEquitable`]
/// when the λ-CDP is not equitable.
pub fn reconstruct(g: &Graph, config: &AnalysisConfig, lambda: f64, mu: f64) -> Result<ReconstructReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tol = &config.tolerances;
    let spectrum = Spectrum::new(g, &config.params, tol)?;
    let cluster = spectrum.target(lambda)?;
    let cdp = compute_cdp(g, &spectrum.core_set(cluster)?)?;
    let b = match check_equitable(&spectrum.matrix, &cdp.blocks, tol.equitable)? {
        Equitability::Equitable(b) => b,
        Equitability::NotEquitable(_) => return Err(Error::NotEquitable),
    };
    let result = reconstruct_cdp(&cdp, &b, mu, &spectrum.eigen, tol)?;
    Ok(ReconstructReport {
        schema_version: SCHEMA_VERSION,
        matrix: config.matrix_info(),
        lambda: cluster.value,
        mu: result.mu,
        lambda_cdp: cdp.blocks.clone(),
        divisor_spectrum: divisor_spectrum(&b, tol)?,
        divisor_matrix: b.entries,
        index_layers: result.index_layers,
        core_subset: result.core_subset,
        multiplicity_u: result.multiplicities.0,
        multiplicity_b: result.multiplicities.1,
        mu_cdp: result.full_cdp.map(|p| p.blocks),
        stranded_indices: result.stranded_indices,
    })
}

/// `(k, bounds)` for `k = 1..=n`.
pub fn bounds_table(n: usize, base: LogBase) -> Result<Vec<(usize, EntropyBounds)>> {
    if n == 0 {
        return Err(Error::CoreSizeOutOfRange { k: 1, n });
    }
    (1..=n).map(|k| Ok((k, entropy_bounds(n, k, base)?))).collect()
}

pub fn bounds_csv(n: usize, base: LogBase) -> Result<String> {
    let mut out = String::from("k,lower,upper\n");
    for (k, b) in bounds_table(n, base)? {
        writeln!(out, "{k},{},{}", b.lower, b.upper).expect("write to string");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoalesceOutput {
    pub schema_version: u32,
    pub log_base: LogBase,
    #[serde(flatten)]
    pub report: CoalescenceReport,
}

pub fn coalesce_graphs(
    h1: &Graph,
    v1: usize,
    h2: &Graph,
    v2: usize,
    config: &AnalysisConfig,
) -> Result<CoalesceOutput> {
    Ok(CoalesceOutput {
        schema_version: SCHEMA_VERSION,
        log_base: config.base,
        report: coalescence_report(h1, v1, h2, v2, config.base, &config.tolerances)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitsReport {
    pub schema_version: u32,
    pub n: usize,
    pub orbits: Vec<VertexSet>,
    pub generator_count: usize,
    pub orbital_entropy: f64,
}

pub fn orbits(g: &Graph, config: &AnalysisConfig) -> Result<OrbitsReport> {
    let op = automorphism_orbits(g, config.vertex_cap)?;
    Ok(OrbitsReport {
        schema_version: SCHEMA_VERSION,
        n: g.order(),
        orbital_entropy: EntropyReport::for_partition(&op.orbits, g.order(), config.base)?.value,
        generator_count: op.generator_count(),
        orbits: op.orbits,
    })
}

/// Human-readable or JSON rendering.
pub trait Render: Serialize {
    fn render_text(&self) -> String;

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
                s.push('\n');
                s
            }
        }
    }
}

fn blocks_text(blocks: &[VertexSet]) -> String {
    blocks.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
}

fn matrix_text(rows: &[Vec<f64>]) -> String {
    rows.iter()
        .map(|r| format!("[{}]", r.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Render for AnalysisReport {
    fn render_text(&self) -> String {
        let mut o = String::new();
        let g = &self.graph;
        let [a, d, i, j] = self.matrix.gammas;
        let _ = writeln!(o, "matrix: {} (gamma = {a}, {d}, {i}, {j})", self.matrix.label);
        let _ = writeln!(o, "graph: n = {}, edges = {}", g.n, g.edge_count);
        let _ = writeln!(o, "orbits: {}", blocks_text(&g.orbits));
        let _ = writeln!(o, "orbital entropy I_a = {:.4} (log base {})", g.orbital_entropy, self.log_base);
        let _ = writeln!(o, "nullity = {}", g.nullity);
        match (&self.singular, &self.singular_note) {
            (Some(s), _) if s.is_singular => {
                let _ = writeln!(
                    o,
                    "singular: eta = {}, |CV_0| = {}, periphery = {}, eta(F) = {}, slim = {}{}, minimal configuration = {}, bipartite MC = {}",
                    s.eta,
                    s.core_graph_order,
                    s.periphery,
                    s.eta_core_graph,
                    yes_no(s.slim),
                    if s.all_core { " (all vertices core)" } else { "" },
                    yes_no(s.minimal_configuration),
                    yes_no(s.bipartite_mc),
                );
            }
            (Some(_), _) => {
                let _ = writeln!(o, "singular: no");
            }
            (None, Some(note)) => {
                let _ = writeln!(o, "singular: skipped ({note})");
            }
            (None, None) => {}
        }
        for c in &self.eigenvalues {
            let _ = writeln!(o);
            let _ = writeln!(o, "lambda = {:.4} (multiplicity {})", c.lambda, c.multiplicity);
            let _ = writeln!(o, "  core: {}", c.core);
            let _ = writeln!(o, "  core-forbidden: {}", c.core_forbidden);
            let _ = writeln!(o, "  remote core-forbidden: {}", c.remote_core_forbidden);
            let _ = writeln!(o, "  CDP (D = {}): {}", c.d_max, blocks_text(&c.cdp_blocks));
            let _ = writeln!(
                o,
                "  I = {:.4} in [{:.4}, {:.4}]",
                c.entropy, c.bounds.lower, c.bounds.upper
            );
            match &c.divisor_matrix {
                Some(b) => {
                    let _ = writeln!(o, "  equitable: yes, B = {}", matrix_text(b));
                }
                None => {
                    let _ = writeln!(o, "  equitable: no");
                }
            }
            let _ = writeln!(
                o,
                "  orbits: core consistent = {}, CDP refined = {}",
                yes_no(c.core_orbit_consistent),
                yes_no(c.cdp_orbit_refinement)
            );
        }
        o
    }
}

impl Render for ReconstructReport {
    fn render_text(&self) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "lambda = {:.4}, mu = {:.4}", self.lambda, self.mu);
        let _ = writeln!(o, "lambda-CDP: {}", blocks_text(&self.lambda_cdp));
        let _ = writeln!(o, "B = {}", matrix_text(&self.divisor_matrix));
        let spec: Vec<String> = self.divisor_spectrum.iter().map(|p| format!("{:.4}", p.value)).collect();
        let _ = writeln!(o, "spec(B) = {{{}}}", spec.join(", "));
        for (d, layer) in self.index_layers.iter().enumerate() {
            let idx: Vec<String> = layer.iter().map(ToString::to_string).collect();
            let _ = writeln!(o, "X_B^{d} = {{{}}}", idx.join(", "));
        }
        let _ = writeln!(o, "core subset: {}", self.core_subset);
        let _ = writeln!(o, "multiplicity: U {}, B {}", self.multiplicity_u, self.multiplicity_b);
        match &self.mu_cdp {
            Some(blocks) => {
                let _ = writeln!(o, "mu-CDP: {}", blocks_text(blocks));
            }
            None => {
                let _ = writeln!(o, "mu-CDP: not determined by the lambda-CDP");
            }
        }
        if !self.stranded_indices.is_empty() {
            let _ = writeln!(o, "stranded block indices: {:?}", self.stranded_indices);
        }
        o
    }
}

impl Render for CoalesceOutput {
    fn render_text(&self) -> String {
        let r = &self.report;
        let mut o = String::new();
        let _ = writeln!(o, "coalesced graph: n = {}, edges = {}", r.graph.order(), r.graph.edge_count());
        for (name, s) in [("H1", &r.h1), ("H2", &r.h2), ("H1.H2", &r.result)] {
            let _ = writeln!(o, "{name}: n = {}, eta = {}, |CV_0| = {}, I_0 = {:.4}", s.n, s.eta, s.core_size, s.i0);
        }
        let _ = writeln!(o, "eta formula: {}", yes_no(r.eta_formula_holds));
        let _ = writeln!(o, "core-count formula: {}", yes_no(r.core_formula_holds));
        let _ = writeln!(o, "result slim: {}", yes_no(r.result_slim));
        let _ = writeln!(o, "min(I_0(H1), I_0(H2)) <= I_0(H1.H2): {}", yes_no(r.min_bound_holds));
        let _ = writeln!(o, "I_0(H1.H2) between I_0(H1) and I_0(H2): {}", yes_no(r.between));
        let _ = write!(o, "{}", r.graph.to_edge_list());
        o
    }
}

impl Render for OrbitsReport {
    fn render_text(&self) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "n = {}", self.n);
        let _ = writeln!(o, "orbits: {}", blocks_text(&self.orbits));
        let _ = writeln!(o, "generators found: {}", self.generator_count);
        let _ = writeln!(o, "I_a = {:.4}", self.orbital_entropy);
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cubic_12, make_path};

    #[test]
    fn cubic_adjacency_report() {
        let r = analyze(&cubic_12(), &AnalysisConfig::default()).unwrap();
        assert_eq!(r.eigenvalues.len(), 10);
        let one = r.eigenvalues.iter().find(|c| (c.lambda - 1.0).abs() < 1e-9).unwrap();
        assert!((one.entropy - 1.0397).abs() < 5e-4);
        assert_eq!(one.cdp_blocks.len(), 3);
        assert!(one.equitable);
        assert!(r.eigenvalues.iter().all(|c| c.core_orbit_consistent && c.cdp_orbit_refinement));
        assert_eq!(r.graph.orbits.len(), 6);
        let text = r.render_text();
        assert!(text.contains("I = 1.0397"));
    }

    #[test]
    fn targeted_report_has_one_cluster() {
        let mut config = AnalysisConfig { target: Some(2.0), ..AnalysisConfig::default() };
        let r = analyze(&cubic_12(), &config).unwrap();
        assert_eq!(r.eigenvalues.len(), 1);
        config.target = Some(0.5);
        assert!(matches!(analyze(&cubic_12(), &config), Err(Error::NoSuchEigenvalue { .. })));
    }

    #[test]
    fn laplacian_of_an_edge() {
        let r = analyze(&make_path(2).unwrap(), &AnalysisConfig::preset(Preset::Laplacian)).unwrap();
        let values: Vec<f64> = r.eigenvalues.iter().map(|c| c.lambda).collect();
        assert!((values[0]).abs() < 1e-12 && (values[1] - 2.0).abs() < 1e-12);
        assert!(r.singular.is_none() && r.singular_note.is_some());
    }

    #[test]
    fn bounds_rows() {
        let rows = bounds_table(12, LogBase::E).unwrap();
        let (k, b) = rows[5];
        assert_eq!(k, 6);
        assert!((b.lower - std::f64::consts::LN_2).abs() < 1e-3 && (b.upper - 1.5890).abs() < 1e-3);
        assert_eq!(rows[11].1, EntropyBounds { lower: 0.0, upper: 0.0 });
        assert!(bounds_table(0, LogBase::E).is_err());
        assert!(bounds_csv(3, LogBase::Two).unwrap().starts_with("k,lower,upper\n1,"));
    }

    #[test]
    fn reconstruct_errors() {
        let g = cubic_12();
        let config = AnalysisConfig::default();
        assert!(matches!(reconstruct(&g, &config, 1.0, 5.0), Err(Error::NotDivisorEigenvalue { .. })));
        let r = reconstruct(&g, &config, 1.0, 2.0).unwrap();
        assert_eq!(r.index_layers, vec![vec![1, 3], vec![2]]);
        assert_eq!(r.mu_cdp.as_ref().map(Vec::len), Some(2));
        // P3's 0-CDP has divisor spectrum {-sqrt 2, sqrt 2}
        let p3 = make_path(3).unwrap();
        assert!(matches!(reconstruct(&p3, &config, 0.0, 0.0), Err(Error::NotDivisorEigenvalue { .. })));
    }

    #[test]
    fn presets_parse() {
        assert_eq!("seidel".parse::<Preset>().unwrap(), Preset::Seidel);
        assert!("nope".parse::<Preset>().is_err());
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
    }
}
