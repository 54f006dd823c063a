//! Machine- and human-readable reports over one curve, plus survey rows.
//!
//! Reports are plain serializable records so that rendering and parsing are
//! exact inverses of each other. Live solver objects are converted into
//! records here and never serialized directly.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scroll::{canonical_exponents, realizing_curve_exponents, PencilMatrix, ScrollType};
use crate::semigroup::NumericalSemigroup;
use crate::sheaf::MonomialSheaf;
use crate::solver::{
    classify_trigonal, clifford_of_curve, gonality, relations_report, TrigonalClass,
};

/// Version tag carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSummary {
    pub min_generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub frobenius: i64,
    pub genus: usize,
    pub gorenstein: bool,
    pub nearly_normal: bool,
}

impl SemigroupSummary {
    pub fn of(s: &NumericalSemigroup) -> Self {
        SemigroupSummary {
            min_generators: s.min_generators().to_vec(),
            gaps: s.gaps().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            gorenstein: s.is_gorenstein(),
            nearly_normal: s.is_nearly_normal(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SheafRecord {
    pub exponents: Vec<u64>,
    pub h0: usize,
    pub h1: usize,
    pub deg: u64,
    pub cliff: i64,
    pub scd: Option<u64>,
    pub invertible: bool,
    pub bpf: bool,
}

impl SheafRecord {
    pub fn of(f: &MonomialSheaf) -> Self {
        let inv = f.invariants();
        SheafRecord {
            exponents: f.exponents().to_vec(),
            h0: inv.h0,
            h1: inv.h1,
            deg: inv.degree,
            cliff: inv.clifford,
            scd: inv.scrollar_dim,
            invertible: inv.invertible,
            bpf: inv.base_point_free,
        }
    }
}

impl fmt::Display for SheafRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O<1")?;
        for &a in &self.exponents {
            if a == 1 {
                write!(f, ",t")?;
            } else {
                write!(f, ",t^{a}")?;
            }
        }
        write!(f, ">")
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RelationRecord {
    pub name: String,
    pub holds: bool,
}

/// The full per-curve analysis.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub schema_version: u32,
    pub semigroup: SemigroupSummary,
    pub gonality: u64,
    pub gonality_witnesses: Vec<u64>,
    pub clifford: i64,
    pub clifford_dimension: usize,
    pub computing_sheaves: Vec<SheafRecord>,
    pub trigonal_class: TrigonalClass,
    pub relation_checks: Vec<RelationRecord>,
    pub canonical_exponents: Vec<u64>,
    pub realizing_exponents: Vec<u64>,
}

impl CurveReport {
    /// Runs every solver against the curve. Fails on smooth input and on
    /// curves whose Clifford index is undefined (genus <= 3, gonality > 2).
    pub fn analyze(s: &Arc<NumericalSemigroup>) -> Result<CurveReport> {
        let gon = gonality(s)?;
        let outcome = clifford_of_curve(s)?;
        let trigonal_class = classify_trigonal(s)?;
        let relation_checks = relations_report(s, &gon, &outcome)
            .into_iter()
            .map(|c| RelationRecord {
                name: c.name.to_string(),
                holds: c.holds,
            })
            .collect();
        Ok(CurveReport {
            schema_version: SCHEMA_VERSION,
            semigroup: SemigroupSummary::of(s),
            gonality: gon.gonality,
            gonality_witnesses: gon.witnesses,
            clifford: outcome.clifford,
            clifford_dimension: outcome.clifford_dimension,
            computing_sheaves: outcome.witnesses.iter().map(SheafRecord::of).collect(),
            trigonal_class,
            relation_checks,
            canonical_exponents: canonical_exponents(s)?,
            realizing_exponents: realizing_curve_exponents(s)?,
        })
    }

    pub fn all_relations_hold(&self) -> bool {
        self.relation_checks.iter().all(|c| c.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sg = &self.semigroup;
        let gens = join(&sg.min_generators);
        out += &format!("semigroup <{gens}>\n");
        out += &format!("  gaps:         {}\n", join(&sg.gaps));
        out += &format!(
            "  genus {}, frobenius {}, conductor {}\n",
            sg.genus,
            sg.frobenius,
            sg.frobenius + 1
        );
        out += &format!(
            "  gorenstein: {}   nearly normal: {}\n",
            yesno(sg.gorenstein),
            yesno(sg.nearly_normal)
        );
        out += &format!("gonality: {}\n", self.gonality);
        let pencils = self
            .gonality_witnesses
            .iter()
            .map(|&a| pencil_name(a))
            .collect::<Vec<_>>()
            .join(", ");
        out += &format!("  pencils:      {pencils}\n");
        out += &format!("clifford index: {}\n", self.clifford);
        out += &format!("clifford dimension: {}\n", self.clifford_dimension);
        for sheaf in &self.computing_sheaves {
            out += &format!(
                "  computed by:  {sheaf} (deg {}, h0 {}, h1 {}{})\n",
                sheaf.deg,
                sheaf.h0,
                sheaf.h1,
                if sheaf.invertible { ", invertible" } else { "" }
            );
        }
        out += &format!("trigonal: {}\n", self.trigonal_class);
        let failed: Vec<&str> = self
            .relation_checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name.as_str())
            .collect();
        if failed.is_empty() {
            out += &format!("relation checks: {}/{} hold\n", self.relation_checks.len(), self.relation_checks.len());
        } else {
            out += &format!("relation checks FAILED: {}\n", failed.join(", "));
        }
        out += &format!("canonical model exponents: {}\n", join(&self.canonical_exponents));
        out += &format!("realizing exponents: {}\n", join(&self.realizing_exponents));
        out
    }
}

/// One rendered scroll computation, for the scroll subcommand.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScrollReport {
    pub schema_version: u32,
    pub semigroup: SemigroupSummary,
    pub sheaf: SheafRecord,
    pub pencil: PencilSummary,
    pub matrix_rows: [Vec<usize>; 2],
    pub matrix_text: String,
    pub scroll_invariants: Vec<u64>,
    pub scroll_dim: u64,
    pub scroll_degree: u64,
    pub ambient: u64,
    pub scroll_text: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PencilSummary {
    pub u: u64,
    pub v: u64,
    pub step: u64,
    /// False when the pencil has an irremovable base point at the cusp.
    pub standard: bool,
}

impl ScrollReport {
    pub fn new(
        s: &NumericalSemigroup,
        sheaf: &MonomialSheaf,
        u: u64,
        v: u64,
        standard: bool,
        matrix: &PencilMatrix,
        scroll: &ScrollType,
    ) -> Self {
        ScrollReport {
            schema_version: SCHEMA_VERSION,
            semigroup: SemigroupSummary::of(s),
            sheaf: SheafRecord::of(sheaf),
            pencil: PencilSummary {
                u,
                v,
                step: v - u,
                standard,
            },
            matrix_rows: matrix.rows.clone(),
            matrix_text: matrix.to_string(),
            scroll_invariants: scroll.invariants.clone(),
            scroll_dim: scroll.dim,
            scroll_degree: scroll.degree,
            ambient: scroll.ambient,
            scroll_text: scroll.to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out += &format!("semigroup <{}>\n", join(&self.semigroup.min_generators));
        out += &format!(
            "sheaf {} (deg {}, h0 {}, h1 {}, scd {})\n",
            self.sheaf,
            self.sheaf.deg,
            self.sheaf.h0,
            self.sheaf.h1,
            self.sheaf.scd.map_or("-".into(), |d| d.to_string()),
        );
        out += &format!(
            "pencil ({}, {}) step {}{}\n",
            self.pencil.u,
            self.pencil.v,
            self.pencil.step,
            if self.pencil.standard {
                ""
            } else {
                "  [nonstandard_pencil: irremovable base point]"
            }
        );
        out += &format!("matrix {}\n", self.matrix_text);
        out += &format!("scroll {}\n", self.scroll_text);
        out
    }
}

/// One survey line; solver errors are rendered as `smooth` or `undef` cells.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub genus: usize,
    pub gaps: String,
    pub gorenstein: bool,
    pub gon: String,
    pub cliff: String,
    pub cliffd: String,
    pub trigonal_class: String,
    pub cliff_eq_gon_minus_3: String,
}

pub const SURVEY_SCHEMA_COMMENT: &str = "# cliffsemi survey schema 1";
pub const SURVEY_COLUMNS: [&str; 8] = [
    "genus",
    "gaps",
    "gorenstein",
    "gon",
    "cliff",
    "cliffd",
    "trigonal_class",
    "cliff_eq_gon_minus_3",
];

pub fn survey_row(s: &Arc<NumericalSemigroup>) -> SurveyRow {
    let gaps = s
        .gaps()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    if s.is_smooth() {
        return SurveyRow {
            genus: 0,
            gaps,
            gorenstein: true,
            gon: "smooth".into(),
            cliff: "smooth".into(),
            cliffd: "smooth".into(),
            trigonal_class: "smooth".into(),
            cliff_eq_gon_minus_3: String::new(),
        };
    }
    let gon = gonality(s).expect("curve is singular");
    let trig = classify_trigonal(s).expect("curve is singular");
    let (cliff, cliffd, eq3) = match clifford_of_curve(s) {
        Ok(out) => (
            out.clifford.to_string(),
            out.clifford_dimension.to_string(),
            (out.clifford == gon.gonality as i64 - 3).to_string(),
        ),
        Err(Error::CliffordUndefined { .. }) => ("undef".into(), "undef".into(), String::new()),
        Err(e) => unreachable!("unexpected solver error on {s}: {e}"),
    };
    SurveyRow {
        genus: s.genus(),
        gaps,
        gorenstein: s.is_gorenstein(),
        gon: gon.gonality.to_string(),
        cliff,
        cliffd,
        trigonal_class: trig.to_string(),
        cliff_eq_gon_minus_3: eq3,
    }
}

impl SurveyRow {
    pub fn csv_line(&self) -> String {
        [
            self.genus.to_string(),
            self.gaps.clone(),
            self.gorenstein.to_string(),
            self.gon.clone(),
            self.cliff.clone(),
            self.cliffd.clone(),
            self.trigonal_class.clone(),
            self.cliff_eq_gon_minus_3.clone(),
        ]
        .iter()
        .map(|cell| csv_escape(cell))
        .collect::<Vec<_>>()
        .join(",")
    }
}

/// Minimal RFC-4180 quoting: fields containing commas, quotes or newlines
/// are wrapped in double quotes with inner quotes doubled.
pub fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pencil_name(a: u64) -> String {
    if a == 1 {
        "O<1,t>".to_string()
    } else {
        format!("O<1,t^{a}>")
    }
}
