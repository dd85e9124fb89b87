//! Report structures shared by the table and JSON renderers. Field names
//! here are the JSON contract.

use std::fmt::Write as _;

use kodaira_core::{
    build, dsg_status, grothendieck_group, intersection_matrix, invariant_profile, is_k_minus_one_regular, negative_k,
    singularity_summary, CurveConfiguration, DsgStatus, FreeGroup, InvariantProfile, KodairaType, PartnerTable,
    PartnerVerdict, PicardDescriptor, SingularitySummary, Subclass, VerdictKind,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub family: String,
    pub subclass: Subclass,
    pub constraint: String,
    pub components: String,
    pub multiplicities: String,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListReport {
    pub families: Vec<Family>,
}

fn family(
    name: &str,
    subclass: Subclass,
    constraint: &str,
    components: &str,
    multiplicities: &str,
    summary: &str,
) -> Family {
    Family {
        family: name.to_string(),
        subclass,
        constraint: constraint.to_string(),
        components: components.to_string(),
        multiplicities: multiplicities.to_string(),
        summary: summary.to_string(),
    }
}

pub fn list_report() -> ListReport {
    use Subclass::*;
    let one = "1";
    ListReport {
        families: vec![
            family("I(0)", L1, "", one, "(1)", "smooth elliptic curve"),
            family("I(1)", L1, "", one, "(1)", "rational curve with one node"),
            family(
                "I(N)",
                L1,
                "N >= 2",
                "N",
                "(1,...,1)",
                "cycle of N rational (-2)-curves",
            ),
            family("II", L1, "", one, "(1)", "rational curve with one cusp"),
            family(
                "III",
                L1,
                "",
                "2",
                "(1,1)",
                "two rational (-2)-curves forming a tacnode",
            ),
            family("IV", L1, "", "3", "(1,1,1)", "three concurrent rational (-2)-curves"),
            family(
                "IStar(N)",
                L2,
                "N >= 0",
                "N+5",
                "(1,1,1,1,2,...,2)",
                "affine D(N+4) tree of (-2)-curves",
            ),
            family(
                "IIStar",
                L2,
                "",
                "9",
                "(1,2,3,4,5,6,4,3,2)",
                "affine E8 tree of (-2)-curves",
            ),
            family(
                "IIIStar",
                L2,
                "",
                "8",
                "(1,2,3,4,3,2,2,1)",
                "affine E7 tree of (-2)-curves",
            ),
            family(
                "IVStar",
                L2,
                "",
                "7",
                "(1,2,3,2,2,1,1)",
                "affine E6 tree of (-2)-curves",
            ),
            family("mI(m,0)", L3, "m >= 2", one, "(m)", "m times a smooth elliptic curve"),
            family(
                "mI(m,1)",
                L3,
                "m >= 2",
                one,
                "(m)",
                "m times a rational curve with one node",
            ),
            family(
                "mI(m,N)",
                L3,
                "m >= 2, N >= 2",
                "N",
                "(m,...,m)",
                "m times a cycle of N rational (-2)-curves",
            ),
        ],
    }
}

fn plural(count: &str) -> &'static str {
    if count == "1" {
        "component"
    } else {
        "components"
    }
}

pub fn render_list(report: &ListReport) -> String {
    let mut out = String::new();
    let headings = [
        (Subclass::L1, "reduced fibers"),
        (Subclass::L2, "non-multiple, non-reduced fibers"),
        (Subclass::L3, "multiple fibers"),
    ];
    for (class, heading) in headings {
        let _ = writeln!(out, "{class}: {heading}");
        for f in report.families.iter().filter(|f| f.subclass == class) {
            let mut line = if f.components == "1" {
                format!("{}: {}", f.family, f.summary)
            } else {
                format!(
                    "{}: {} {}, multiplicities {}; {}",
                    f.family,
                    f.components,
                    plural(&f.components),
                    f.multiplicities,
                    f.summary
                )
            };
            if f.components == "1" && f.multiplicities != "(1)" {
                let _ = write!(line, "; multiplicity {}", f.multiplicities);
            }
            if !f.constraint.is_empty() {
                let _ = write!(line, " [{}]", f.constraint);
            }
            let _ = writeln!(out, "  {line}");
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeK {
    pub k_minus_1: FreeGroup,
    pub below_minus_1: FreeGroup,
    pub k_minus_1_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShowReport {
    pub kodaira_type: KodairaType,
    pub profile: InvariantProfile,
    pub multiplicities: Vec<i64>,
    pub g0: FreeGroup,
    pub negative_k: NegativeK,
    pub picard_sequence: String,
    pub singularities: SingularitySummary,
    pub dsg: DsgStatus,
    pub dualising_sheaf: String,
    pub intersection_matrix: Vec<Vec<i64>>,
    pub notes: Vec<String>,
}

const ASSUMPTIONS: &str = "assumes K.Theta_i = 0 for every component and h^0(O_X) = 1";

pub fn show_report(t: KodairaType) -> Result<ShowReport, CliError> {
    let config = build(t)?;
    let profile = invariant_profile(&config)?;
    Ok(ShowReport {
        kodaira_type: t,
        multiplicities: config.multiplicities(),
        g0: grothendieck_group(&config)?,
        negative_k: NegativeK {
            k_minus_1: negative_k(&config, -1)?,
            below_minus_1: negative_k(&config, -2)?,
            k_minus_1_regular: is_k_minus_one_regular(&config),
        },
        picard_sequence: profile.picard.sequence(),
        singularities: singularity_summary(&config),
        dsg: dsg_status(&config),
        dualising_sheaf: "trivial".to_string(),
        intersection_matrix: intersection_matrix(&config).rows(),
        notes: vec![ASSUMPTIONS.to_string()],
        profile,
    })
}

fn identity_kind(p: &PicardDescriptor) -> String {
    match p.identity_type() {
        (1, 0, 0) => "additive (G_a)".to_string(),
        (0, 1, 0) => "torus (G_m)".to_string(),
        (0, 0, 1) => "elliptic (E)".to_string(),
        _ => p.identity_label(),
    }
}

fn join_ints(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_show(r: &ShowReport) -> String {
    let p = &r.profile;
    let mut out = String::new();
    let _ = writeln!(out, "type: {}", r.kodaira_type);
    let _ = writeln!(
        out,
        "subclass: {}",
        p.subclass.map_or("none".to_string(), |s| s.to_string())
    );
    let _ = writeln!(out, "components: {}", p.n_components);
    let _ = writeln!(out, "multiplicities: {}", join_ints(&r.multiplicities));
    let _ = writeln!(out, "reduced: {}", yes_no(p.reduced));
    let _ = writeln!(out, "smooth: {}", yes_no(p.smooth));
    let _ = writeln!(out, "euler characteristic: {}", p.euler_characteristic);
    let _ = writeln!(out, "arithmetic genus: {}", p.arithmetic_genus);
    let _ = writeln!(out, "G0: {}", r.g0);
    let _ = writeln!(out, "K^-1: {} (lambda = {})", r.negative_k.k_minus_1, p.lambda);
    let _ = writeln!(out, "K^i for i <= -2: {}", r.negative_k.below_minus_1);
    let _ = writeln!(out, "K^-1-regular: {}", yes_no(r.negative_k.k_minus_1_regular));
    let _ = writeln!(out, "Pic: {}", r.picard_sequence);
    let _ = writeln!(out, "Pic^0: {}", identity_kind(&p.picard));
    let sing = &r.singularities;
    match sing.count {
        Some(n) => {
            let _ = writeln!(out, "singular points: {n} (isolated)");
        }
        None => {
            let _ = writeln!(out, "singular points: non-isolated (X_red has {})", sing.reduced_count);
        }
    }
    let _ = writeln!(out, "D_sg: {}", r.dsg);
    let _ = writeln!(out, "dualising sheaf: {}", r.dualising_sheaf);
    let _ = writeln!(out, "intersection matrix:");
    let width = r
        .intersection_matrix
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    for row in &r.intersection_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub recognized: bool,
    pub kodaira_type: Option<KodairaType>,
    pub subclass: Option<Subclass>,
    pub reason: Option<String>,
}

pub fn render_classify(r: &ClassifyReport) -> String {
    match (&r.kodaira_type, &r.reason) {
        (Some(t), _) => format!("{t}\n"),
        (None, Some(reason)) => format!("not a Kodaira curve: {reason}\n"),
        (None, None) => "not a Kodaira curve\n".to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub left: String,
    pub right: String,
    #[serde(flatten)]
    pub verdict: PartnerVerdict,
    pub notes: Vec<String>,
}

pub const TYPE_LEVEL_NOTE: &str = "isomorphic at the level of Kodaira type; no j-invariant is modeled";

pub fn compare_report(
    left: String,
    right: String,
    x: &CurveConfiguration,
    y: &CurveConfiguration,
) -> Result<CompareReport, CliError> {
    let px = invariant_profile(x)?;
    let py = invariant_profile(y)?;
    let verdict = kodaira_core::compare_profiles(&px, &py);
    let mut notes = Vec::new();
    if verdict == PartnerVerdict::Isomorphic && px.kodaira_type == Some(KodairaType::I(0)) {
        notes.push(TYPE_LEVEL_NOTE.to_string());
    }
    if verdict == PartnerVerdict::PossiblyEquivalent {
        notes.push("every computed invariant agrees; no converse is known".to_string());
    }
    Ok(CompareReport {
        left,
        right,
        verdict,
        notes,
    })
}

pub fn render_compare(r: &CompareReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} vs {}", r.left, r.right);
    let _ = writeln!(out, "verdict: {}", r.verdict.kind());
    let witnesses = r.verdict.witnesses();
    if !witnesses.is_empty() {
        let _ = writeln!(out, "witnesses:");
        for w in witnesses {
            let _ = writeln!(out, "  {w}");
        }
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub max_n: u32,
    pub max_m: u32,
    #[serde(flatten)]
    pub table: PartnerTable,
}

fn symbol(kind: VerdictKind) -> char {
    match kind {
        VerdictKind::Isomorphic => '=',
        VerdictKind::PossiblyEquivalent => '~',
        VerdictKind::NotEquivalent => 'x',
    }
}

pub fn render_matrix(r: &MatrixReport) -> String {
    let types = &r.table.types;
    let name_width = types.iter().map(|t| t.to_string().len()).max().unwrap_or(4).max(4);
    let idx_width = types.len().saturating_sub(1).to_string().len().max(1);
    let mut out = String::new();
    let _ = writeln!(out, "legend: = isomorphic, ~ possibly equivalent, x not equivalent");
    let header: Vec<String> = (0..types.len()).map(|j| format!("{j:>idx_width$}")).collect();
    let _ = writeln!(
        out,
        "{:>idx_width$} {:<name_width$} | {}",
        "#",
        "type",
        header.join(" ")
    );
    for (i, t) in types.iter().enumerate() {
        let cells: Vec<String> = (0..types.len())
            .map(|j| format!("{:>idx_width$}", symbol(r.table.get(i, j).kind())))
            .collect();
        let _ = writeln!(
            out,
            "{i:>idx_width$} {:<name_width$} | {}",
            t.to_string(),
            cells.join(" ")
        );
    }
    out
}
