use std::fmt::Write;

use serde::{Deserialize, Serialize};
use specht::combinatorics::{Node, OneBoxShift, Partition, SemistandardSet, Tableau};
use specht::exact_algebra::Scalar;
use specht::homomorphisms::{CoefficientTerm, EndoAnalysis, HomMatrixRecord};
use specht::jantzen::{JantzenContainment, JantzenFiltration};
use specht::specht_modules::VectorEntry;

/// Everything a command prints, in a form that round-trips through JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Tableaux(TableauxReport),
    Hom(HomReport),
    CpMap(CpMapReport),
    JmMap(JmMapReport),
    Endo(EndoReport),
    Jantzen(JantzenReport),
    Verify(VerifyReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetTableau {
    pub set: SemistandardSet,
    pub tableau: Tableau,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableauxReport {
    pub shift: OneBoxShift,
    pub hooks: Vec<i64>,
    pub removable_set: SemistandardSet,
    pub count_formula: u64,
    pub tableaux: Vec<SetTableau>,
}

/// `c · e_t` for a standard tableau `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub tableau: Tableau,
    pub coefficient: Scalar,
}

/// Images of the standard basis under one map, as standard-basis expansions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapImages {
    pub images: Vec<(Tableau, Vec<Term>)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<HomMatrixRecord>,
    pub images: Vec<MapImages>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageReport {
    pub tableau: Tableau,
    /// `e_t θ` in tabloid coordinates.
    pub tabloids: Vec<VectorEntry>,
    /// Standard-basis expansion of `e_t θ` mod p.
    pub expansion: Option<Vec<Term>>,
    /// Standard-basis expansion over ℤ of `e_t θ - h_a 𝓔_t`.
    pub corrected: Option<Vec<Term>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CpMapReport {
    pub shift: OneBoxShift,
    pub hooks: Vec<i64>,
    pub field: String,
    pub coefficients: Vec<CoefficientTerm>,
    pub image: Option<ImageReport>,
    pub matrix: Option<HomMatrixRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JmMapReport {
    pub lambda: Partition,
    pub source_layer: usize,
    pub target_layer: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub prime: u64,
    pub residues: Vec<i64>,
    /// `c` with JM map = `c` · explicit map, when both exist.
    pub scalar: Option<u64>,
    pub matrix: Option<HomMatrixRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerNode {
    pub node: Node,
    pub residue: u64,
    /// A standard tableau with `n+1` at the node.
    pub tableau: Tableau,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndoReport {
    pub analysis: EndoAnalysis,
    pub layers: Vec<LayerNode>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JantzenReport {
    pub filtration: JantzenFiltration,
    pub containment: Option<JantzenContainment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySection {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub primes: Vec<u64>,
    pub sections: Vec<VerifySection>,
}

impl Report {
    /// Whether every theorem-backed check in the report held.
    pub fn passed(&self) -> bool {
        match self {
            Report::Endo(r) => r.failure.is_none(),
            Report::Jantzen(r) => r.containment.as_ref().is_none_or(JantzenContainment::holds),
            Report::Verify(r) => r.sections.iter().all(|s| s.failures.is_empty()),
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Tableaux(r) => tableaux_text(&mut out, r),
            Report::Hom(r) => hom_text(&mut out, r),
            Report::CpMap(r) => cp_map_text(&mut out, r),
            Report::JmMap(r) => jm_map_text(&mut out, r),
            Report::Endo(r) => endo_text(&mut out, r),
            Report::Jantzen(r) => jantzen_text(&mut out, r),
            Report::Verify(r) => verify_text(&mut out, r),
        }
        out
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn sum_text(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let c = t.coefficient.to_string();
        let (sign, mag) = match c.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", c),
        };
        match (k, sign) {
            (0, "-") => s.push('-'),
            (0, _) => {}
            _ => write!(s, " {sign} ").unwrap(),
        }
        if mag != "1" {
            s.push_str(&mag);
        }
        write!(s, "e_{}", t.tableau).unwrap();
    }
    s
}

fn tableaux_text(out: &mut String, r: &TableauxReport) {
    writeln!(out, "{}", r.shift).unwrap();
    let hooks: Vec<String> = r.hooks.iter().map(i64::to_string).collect();
    writeln!(out, "h = ({})", hooks.join(",")).unwrap();
    writeln!(out, "removable set {}", r.removable_set).unwrap();
    writeln!(
        out,
        "{} semistandard tableaux (product formula {})",
        r.tableaux.len(),
        r.count_formula
    )
    .unwrap();
    for st in &r.tableaux {
        writeln!(out, "\n{}", st.set).unwrap();
        out.push_str(&indent(&st.tableau.pretty(None)));
    }
}

fn images_text(out: &mut String, images: &MapImages) {
    for (t, terms) in &images.images {
        writeln!(out, "  e_{t} -> {}", sum_text(terms)).unwrap();
    }
}

fn hom_text(out: &mut String, r: &HomReport) {
    writeln!(out, "Hom(S^({}), S^({})) over {}", r.alpha, r.beta, r.field).unwrap();
    writeln!(out, "dim Hom = {}", r.dim).unwrap();
    for (k, images) in r.images.iter().enumerate() {
        writeln!(out, "basis map {}:", k + 1).unwrap();
        images_text(out, images);
    }
}

fn cp_map_text(out: &mut String, r: &CpMapReport) {
    writeln!(out, "{} over {}", r.shift, r.field).unwrap();
    let hooks: Vec<String> = r.hooks.iter().map(i64::to_string).collect();
    writeln!(out, "h = ({})", hooks.join(",")).unwrap();
    writeln!(out, "coefficients:").unwrap();
    for c in &r.coefficients {
        writeln!(out, "  {:>4}  {}  {}", c.value, c.set, c.tableau).unwrap();
    }
    if let Some(img) = &r.image {
        writeln!(out, "image of e_{}:", img.tableau).unwrap();
        out.push_str(&indent(&img.tableau.pretty(None)));
        writeln!(out, "  {} tabloids in the support", img.tabloids.len()).unwrap();
        if let Some(terms) = &img.expansion {
            writeln!(out, "  = {}", sum_text(terms)).unwrap();
        }
        if let Some(terms) = &img.corrected {
            writeln!(
                out,
                "corrected image e_tθ - h_a E_t over Z:\n  = {}",
                sum_text(terms)
            )
            .unwrap();
        }
    }
    if let Some(m) = &r.matrix {
        writeln!(
            out,
            "matrix {} -> {}: {}x{}, {} nonzero entries",
            m.domain,
            m.codomain,
            m.rows,
            m.cols,
            m.entries.len()
        )
        .unwrap();
    }
}

fn jm_map_text(out: &mut String, r: &JmMapReport) {
    writeln!(
        out,
        "S^({}) layer {} -> layer {} over GF({})",
        r.lambda, r.source_layer, r.target_layer, r.prime
    )
    .unwrap();
    writeln!(out, "S^({}) -> S^({})", r.alpha, r.beta).unwrap();
    let res: Vec<String> = r.residues.iter().map(i64::to_string).collect();
    writeln!(out, "polynomial residues [{}]", res.join(", ")).unwrap();
    match r.scalar {
        Some(c) => writeln!(out, "JM map = {c} * explicit map").unwrap(),
        None => writeln!(out, "no explicit map to compare").unwrap(),
    }
    if let Some(m) = &r.matrix {
        writeln!(
            out,
            "matrix {}x{}, {} nonzero entries",
            m.rows,
            m.cols,
            m.entries.len()
        )
        .unwrap();
    }
}

fn endo_text(out: &mut String, r: &EndoReport) {
    let a = &r.analysis;
    writeln!(
        out,
        "End({}) over GF({}), module dim {}",
        a.module, a.prime, a.module_dim
    )
    .unwrap();
    for layer in &r.layers {
        writeln!(out, "node {} residue {}", layer.node, layer.residue).unwrap();
        let n = layer.tableau.size();
        out.push_str(&indent(&layer.tableau.pretty(Some(n))));
    }
    for b in &a.blocks {
        let nodes: Vec<String> = b.nodes.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "block res {}: dim {} (nodes {}; nilpotency {})",
            b.residue,
            b.multiplicity(),
            nodes.join(" "),
            b.nilpotency
        )
        .unwrap();
    }
    writeln!(
        out,
        "dim End = {}, generated subalgebra dim {}",
        a.end_dim, a.generated_dim
    )
    .unwrap();
    match &r.failure {
        None => writeln!(out, "check: PASS").unwrap(),
        Some(e) => writeln!(out, "check: FAIL ({e})").unwrap(),
    }
}

fn jantzen_text(out: &mut String, r: &JantzenReport) {
    let f = &r.filtration;
    writeln!(out, "Jantzen filtration of S^({}) mod {}", f.shape, f.prime).unwrap();
    let divisors: Vec<String> = f
        .elementary_divisors
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(out, "elementary divisors [{}]", divisors.join(", ")).unwrap();
    for level in &f.levels {
        writeln!(out, "dim J^{} = {}", level.level, level.dim).unwrap();
    }
    if let Some(c) = &r.containment {
        writeln!(out, "{} mod {}, h_a = {}", c.shift, c.prime, c.h_a).unwrap();
        if c.vacuous {
            writeln!(out, "p does not divide h_a: no map").unwrap();
        } else {
            let observed = c.observed.map_or("none".to_string(), |i| i.to_string());
            writeln!(out, "image in J^{observed} (guaranteed J^{})", c.guaranteed).unwrap();
            writeln!(
                out,
                "corrected image in S_Z: {}, in J^i: {}",
                c.corrected_in_specht, c.corrected_in_level
            )
            .unwrap();
            writeln!(out, "pairings divisible by h_a: {}", c.orthogonal_mod_h).unwrap();
        }
        writeln!(out, "check: {}", if c.holds() { "PASS" } else { "FAIL" }).unwrap();
    }
}

fn verify_text(out: &mut String, r: &VerifyReport) {
    let primes: Vec<String> = r.primes.iter().map(u64::to_string).collect();
    writeln!(
        out,
        "verify n <= {}, p in {{{}}}",
        r.max_n,
        primes.join(",")
    )
    .unwrap();
    for s in &r.sections {
        let verdict = if s.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        writeln!(out, "{verdict} {:<12} {} checks", s.name, s.checked).unwrap();
        for f in &s.failures {
            writeln!(out, "  {f}").unwrap();
        }
    }
}
