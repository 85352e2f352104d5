//! Library half of the `c2fock` command-line tool: JSON and DOT formats and
//! the implementation of every subcommand as a pure function from options to
//! output text, so that the binary is a thin argument parser.

use std::fmt::Write as _;
use std::path::Path;

use c2fock::algebra::{Index, LaurentPoly, Weight};
use c2fock::crystal::{crystal_graph, is_maximal, maximal_vectors, CrystalGraph};
use c2fock::fock::{act_e_pow, act_f_pow, divided_power_e, divided_power_f};
use c2fock::globalbasis::{a_basis, BasisExpansion, BasisKind, GlobalBasis};
use c2fock::verify::{self, SuiteResult};
use c2fock::youngwall::{enumerate_weight_space, GroundState};
use c2fock::{FockVector, YoungWall};
use serde::{Deserialize, Serialize};

/// Failures of a subcommand, mapped onto the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: unparsable literals, invalid walls, inexact divisions.
    #[error("{0}")]
    Validation(String),
    /// A verification suite found a counterexample.
    #[error("{0}")]
    SuiteFailure(String),
}

impl CliError {
    /// `1` for validation errors, `2` for suite failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::SuiteFailure(_) => 2,
        }
    }
}

impl From<c2fock::Error> for CliError {
    fn from(e: c2fock::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

pub type CliResult = Result<String, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// One term of a serialised Fock vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub wall: String,
    pub coeff: String,
}

/// A Fock vector: `{"ground":"L1","terms":[{"wall":…,"coeff":…}]}`, terms in
/// descending total order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub ground: String,
    pub terms: Vec<TermJson>,
}

/// One correction `γ` recorded while computing `G(from)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaJson {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

/// A basis vector in the Fock-vector format, with its head and corrections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub ground: String,
    pub kind: String,
    pub head: String,
    pub terms: Vec<TermJson>,
    pub gamma: Vec<GammaJson>,
}

/// A crystal graph with walls as node labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub ground: String,
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    pub i: u8,
}

pub fn vector_to_json(v: &FockVector) -> VectorJson {
    VectorJson {
        ground: v.ground_state().to_string(),
        terms: v.terms().into_iter().map(|(y, c)| TermJson { wall: y.to_string(), coeff: c.to_string() }).collect(),
    }
}

pub fn vector_from_json(j: &VectorJson) -> Result<FockVector, CliError> {
    let g: GroundState = j.ground.parse()?;
    let mut v = FockVector::zero(g);
    for t in &j.terms {
        let y: YoungWall = t.wall.parse()?;
        if y.ground_state() != g {
            return Err(invalid(format!("term {} does not live over {g}", t.wall)));
        }
        let c: LaurentPoly = t.coeff.parse()?;
        v.add_term(y, c);
    }
    Ok(v)
}

pub fn basis_to_json(e: &BasisExpansion) -> BasisJson {
    let v = vector_to_json(&e.coeffs);
    BasisJson {
        ground: v.ground,
        kind: match e.kind {
            BasisKind::A => "A",
            BasisKind::G => "G",
        }
        .to_string(),
        head: e.head.to_string(),
        terms: v.terms,
        gamma: e
            .gamma
            .iter()
            .map(|(z, c)| GammaJson { from: e.head.to_string(), to: z.to_string(), coeff: c.to_string() })
            .collect(),
    }
}

pub fn graph_to_json(g: GroundState, graph: &CrystalGraph) -> GraphJson {
    let name = |u: usize| graph.nodes[u].to_string();
    GraphJson {
        ground: g.to_string(),
        nodes: graph.nodes.iter().map(ToString::to_string).collect(),
        edges: graph.edges.iter().map(|&(a, b, i)| EdgeJson { from: name(a), to: name(b), i: i.value() }).collect(),
    }
}

/// Graphviz rendering; edges carry `label="i=<color>"`.
pub fn graph_to_dot(g: GroundState, graph: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"B({g})\" {{");
    for y in &graph.nodes {
        let _ = writeln!(out, "  \"{y}\";");
    }
    for &(a, b, i) in &graph.edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"i={i}\"];", graph.nodes[a], graph.nodes[b]);
    }
    out.push_str("}\n");
    out
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

fn parse_wall(s: &str) -> Result<YoungWall, CliError> {
    s.parse::<YoungWall>().map_err(|e| invalid(format!("{s}: {e}")))
}

fn parse_index(i: u8) -> Result<Index, CliError> {
    Index::new(i).ok_or_else(|| invalid(format!("color {i} is not in {{0, 1, 2}}")))
}

/// `wall`: properness, reducedness, partition, weight, colour counts and the
/// reduced form of a wall literal.
pub fn cmd_wall(literal: &str) -> CliResult {
    let y = parse_wall(literal)?;
    let partition: Vec<String> = y.partition().iter().map(ToString::to_string).collect();
    let c = y.content();
    let mut out = String::new();
    let _ = writeln!(out, "wall: {y}");
    let _ = writeln!(out, "proper: {}", y.is_proper());
    let _ = writeln!(out, "reduced: {}", y.is_reduced());
    let _ = writeln!(out, "maximal: {}", is_maximal(&y));
    let _ = writeln!(out, "blocks: {}", y.size());
    let _ = writeln!(out, "partition: ({})", partition.join(","));
    let _ = writeln!(out, "counts: 0:{} 1:{} 2:{}", c[0], c[1], c[2]);
    let _ = writeln!(out, "weight: {}", y.weight());
    let _ = writeln!(out, "reduced_form: {}", y.reduced_form());
    Ok(out)
}

/// Output format of the `crystal` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// `crystal`: the crystal graph generated from the ground state.
pub fn cmd_crystal(ground: &str, depth: u32, format: GraphFormat, reduced_only: bool) -> CliResult {
    let g: GroundState = ground.parse()?;
    let graph = crystal_graph(g, depth, reduced_only);
    Ok(match format {
        GraphFormat::Dot => graph_to_dot(g, &graph),
        GraphFormat::Json => pretty(&graph_to_json(g, &graph)),
    })
}

/// Which generator the `fock` subcommand applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FockOp {
    E,
    F,
}

/// Reads a Fock vector from a wall literal or from a JSON file.
pub fn load_vector(input: &str) -> Result<FockVector, CliError> {
    let trimmed = input.trim();
    if trimmed.contains('[') && !Path::new(trimmed).is_file() {
        return Ok(FockVector::from_wall(&parse_wall(trimmed)?));
    }
    let text = std::fs::read_to_string(trimmed).map_err(|e| invalid(format!("cannot read {trimmed}: {e}")))?;
    let j: VectorJson = serde_json::from_str(&text).map_err(|e| invalid(format!("{trimmed}: malformed vector: {e}")))?;
    vector_from_json(&j)
}

/// `fock`: `X^pow v` or, with `divided`, `X^{(pow)} v` for `X = eᵢ, fᵢ`.
pub fn cmd_fock(op: FockOp, i: u8, pow: u32, divided: bool, input: &str) -> CliResult {
    let i = parse_index(i)?;
    let v = load_vector(input)?;
    let out = match (op, divided) {
        (FockOp::E, false) => act_e_pow(i, pow, &v),
        (FockOp::F, false) => act_f_pow(i, pow, &v),
        (FockOp::E, true) => divided_power_e(i, pow, &v)?,
        (FockOp::F, true) => divided_power_f(i, pow, &v)?,
    };
    Ok(pretty(&vector_to_json(&out)))
}

/// Parses `k0,k1,k2` into the weight `Λ − Σ kᵢ αᵢ`.
pub fn parse_weight(g: GroundState, s: &str) -> Result<Weight, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(invalid(format!("weight '{s}' must have the form k0,k1,k2")));
    };
    let num = |t: &str| t.parse::<u32>().map_err(|_| invalid(format!("weight '{s}': '{t}' is not a non-negative integer")));
    Ok(Weight { lambda: g.lambda(), k: [num(a)?, num(b)?, num(c)?] })
}

/// What the `gb` subcommand computes for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbTarget {
    Wall(String),
    Weight { ground: String, weight: String },
}

/// `gb`: `A(Y)` or `G(Y)` for one reduced wall (a JSON object), or for all
/// reduced walls of a weight space (a JSON array, descending order).
pub fn cmd_gb(kind: BasisKind, target: &GbTarget) -> CliResult {
    let mut solver = GlobalBasis::new();
    let mut compute = |y: &YoungWall| -> Result<BasisJson, CliError> {
        let e = match kind {
            BasisKind::A => a_basis(y)?,
            BasisKind::G => solver.g(y)?,
        };
        Ok(basis_to_json(&e))
    };
    match target {
        GbTarget::Wall(lit) => Ok(pretty(&compute(&parse_wall(lit)?)?)),
        GbTarget::Weight { ground, weight } => {
            let g: GroundState = ground.parse()?;
            let w = parse_weight(g, weight)?;
            let all = enumerate_weight_space(g, &w, true).iter().map(&mut compute).collect::<Result<Vec<_>, _>>()?;
            Ok(pretty(&all))
        }
    }
}

/// Number of partitions of `m`.
pub fn partition_count(m: u32) -> u64 {
    let m = m as usize;
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for n in part..=m {
            p[n] += p[n - part];
        }
    }
    p[m]
}

/// `decompose`: the maximal walls of weight `Λ − jδ` for `0 ≤ j ≤ m`, each
/// with the partition of `j` generating it (column heights in δ-columns).
pub fn cmd_decompose(ground: &str, max_delta: u32) -> CliResult {
    let g: GroundState = ground.parse()?;
    let mut out = String::new();
    for j in 0..=max_delta {
        let walls = maximal_vectors(g, j);
        let _ = writeln!(out, "m={j} weight={} count={} p(m)={}", Weight::minus_delta(g.lambda(), j), walls.len(), partition_count(j));
        for y in walls {
            let gen: Vec<String> = y.columns().iter().map(|c| if c.n % 4 == 0 { (c.n / 4).to_string() } else { format!("{}/4", c.n) }).collect();
            let _ = writeln!(out, "  {y} partition=({})", gen.join(","));
        }
    }
    Ok(out)
}

/// The verification suites exposed by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// The commutator relation `[eᵢ, fⱼ]`.
    Ef,
    /// Both forms of the quantum Serre relations.
    Serre,
    /// Crystal axioms and the compatibility of the action with the crystal.
    CrystalAxioms,
    /// Global-basis properties, peeling, reduced forms and closed forms.
    GbProps,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Ef => "ef",
            Suite::Serre => "serre",
            Suite::CrystalAxioms => "crystal-axioms",
            Suite::GbProps => "gb-props",
        }
    }

    fn parts(self, g: GroundState, n: u32) -> Vec<(&'static str, SuiteResult)> {
        match self {
            Suite::Ef => vec![("ef", verify::ef_suite(g, n))],
            Suite::Serre => vec![("serre", verify::serre_suite(g, n, 50))],
            Suite::CrystalAxioms => vec![
                ("crystal-axioms", verify::crystal_axioms_suite(g, n)),
                ("crystal-compatibility", verify::crystal_compatibility_suite(g, n)),
            ],
            Suite::GbProps => vec![
                ("global-basis", verify::gb_suite(g, n)),
                ("peel-unit", verify::peel_unit_suite(g, n)),
                ("reduced-form", verify::reduced_form_suite(g, n)),
                ("closed-form", verify::closed_form_suite(g, n, 3)),
            ],
        }
    }
}

/// `verify`: runs a suite over the given ground states; any counterexample
/// turns into [`CliError::SuiteFailure`] carrying the full report.
pub fn cmd_verify(suite: Suite, grounds: &[GroundState], max_blocks: u32) -> CliResult {
    let mut out = String::new();
    let mut failed = false;
    for &g in grounds {
        for (name, res) in suite.parts(g, max_blocks) {
            match res {
                Ok(n) => {
                    let _ = writeln!(out, "PASS {name} ground={g} max-blocks={max_blocks} checked={n}");
                }
                Err(c) => {
                    failed = true;
                    let _ = writeln!(out, "FAIL {name} ground={g} max-blocks={max_blocks} counterexample={c}");
                }
            }
        }
    }
    if failed {
        Err(CliError::SuiteFailure(out))
    } else {
        Ok(out)
    }
}

/// Parses `L0`, `L1`, `L2` or `all`.
pub fn parse_grounds(s: &str) -> Result<Vec<GroundState>, CliError> {
    if s.eq_ignore_ascii_case("all") {
        Ok(GroundState::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}
