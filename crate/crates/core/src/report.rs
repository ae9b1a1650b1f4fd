//! Machine-readable report document assembled from claim verifiers and
//! formula arbitrations. Serialization is deterministic: fixed field
//! order, no timestamps unless provenance is requested, and every
//! sigma-carrying number emitted as a decimal string.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{
    reproduce_table1, verify_bounds, verify_class_minima, verify_formula_grid,
    verify_greedy_min, verify_gutman_extremes, ClaimReport,
};
use crate::formulas::{Arbitration, EvalMode, FormulaId};

/// Report schema identifier; bump when the document shape changes.
pub const SCHEMA_VERSION: &str = "sigma-lab/1";

/// Claim selectors accepted by the verification driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimSelector {
    GreedyMin,
    ClassMinima,
    Gutman,
    Formulas,
    Bounds,
    Table1,
    All,
}

impl ClaimSelector {
    pub fn name(self) -> &'static str {
        match self {
            ClaimSelector::GreedyMin => "greedy_min",
            ClaimSelector::ClassMinima => "class_minima",
            ClaimSelector::Gutman => "gutman",
            ClaimSelector::Formulas => "formulas",
            ClaimSelector::Bounds => "bounds",
            ClaimSelector::Table1 => "table1",
            ClaimSelector::All => "all",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "greedy_min" => ClaimSelector::GreedyMin,
            "class_minima" => ClaimSelector::ClassMinima,
            "gutman" => ClaimSelector::Gutman,
            "formulas" => ClaimSelector::Formulas,
            "bounds" => ClaimSelector::Bounds,
            "table1" => ClaimSelector::Table1,
            "all" => ClaimSelector::All,
            other => return Err(Error::invalid(format!("unknown claim selector {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Scope {
    pub claims: String,
    pub nmax: usize,
    pub grid: String,
}

/// Optional run metadata, emitted only with `--provenance`.
#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub generated_at_unix: u64,
    pub host: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub generated_scope: Scope,
    pub claims: Vec<ClaimReport>,
    /// Mismatch arbitrations gathered from formula grids (capped per
    /// formula).
    pub arbitrations: Vec<Arbitration>,
    pub tool_mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn attach_provenance(&mut self) {
        let generated_at_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let host = std::env::var("HOSTNAME").unwrap_or_else(|_| "unknown".into());
        self.provenance = Some(Provenance {
            generated_at_unix,
            host,
        });
    }
}

/// The formula ids driven by the `formulas` selector; bound and
/// extremal ids run under their own selectors.
pub const GRID_FORMULAS: [FormulaId; 11] = [
    FormulaId::SigmaDoubleStar,
    FormulaId::SigmaCnm,
    FormulaId::AlbertsonCaterpillar,
    FormulaId::SigmaCaterpillarSpine,
    FormulaId::Sigma3Spine,
    FormulaId::Sigma4SpineMin,
    FormulaId::Sigma4SpineMax,
    FormulaId::Sigma3Level,
    FormulaId::SigmaSquaredLevel,
    FormulaId::SigmaPowerLevel,
    FormulaId::SigmaKLevel,
];

/// Runs the selected claim verifiers and assembles the document.
/// Claim order is fixed per selector, so identical inputs yield
/// byte-identical output.
pub fn run_verify(selector: ClaimSelector, nmax: usize, mode: EvalMode) -> Result<ReportDocument> {
    let mut claims = Vec::new();
    let mut arbitrations = Vec::new();
    let selected = |s: ClaimSelector| selector == s || selector == ClaimSelector::All;

    if selected(ClaimSelector::Gutman) {
        claims.extend(verify_gutman_extremes(nmax)?);
    }
    if selected(ClaimSelector::ClassMinima) {
        claims.extend(verify_class_minima(nmax)?);
    }
    if selected(ClaimSelector::GreedyMin) {
        claims.extend(verify_greedy_min(nmax)?);
    }
    if selected(ClaimSelector::Formulas) {
        for id in GRID_FORMULAS {
            let (claim, mismatches) = verify_formula_grid(id, mode)?;
            claims.push(claim);
            arbitrations.extend(mismatches);
        }
    }
    if selected(ClaimSelector::Bounds) {
        claims.extend(verify_bounds(nmax)?);
    }
    if selected(ClaimSelector::Table1) {
        claims.push(reproduce_table1(3, 12, mode)?);
    }

    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        generated_scope: Scope {
            claims: selector.name().to_string(),
            nmax,
            grid: "default".to_string(),
        },
        claims,
        arbitrations,
        tool_mode: mode.name().to_string(),
        provenance: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_gutman_document_is_deterministic() {
        let a = run_verify(ClaimSelector::Gutman, 6, EvalMode::Exact).unwrap();
        let b = run_verify(ClaimSelector::Gutman, 6, EvalMode::Exact).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.to_json().contains("\"schema_version\": \"sigma-lab/1\""));
    }

    #[test]
    fn sigma_values_are_strings_in_json() {
        let doc = run_verify(ClaimSelector::Table1, 5, EvalMode::Exact).unwrap();
        let json: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        let claims = json["claims"].as_array().unwrap();
        assert_eq!(claims[0]["claim_id"], "table1");
        for w in claims[0]["witnesses"].as_array().unwrap() {
            assert!(w["expected"].is_string());
        }
    }

    #[test]
    fn selector_round_trip() {
        for s in [
            ClaimSelector::GreedyMin,
            ClaimSelector::ClassMinima,
            ClaimSelector::Gutman,
            ClaimSelector::Formulas,
            ClaimSelector::Bounds,
            ClaimSelector::Table1,
            ClaimSelector::All,
        ] {
            assert_eq!(ClaimSelector::from_name(s.name()).unwrap(), s);
        }
        assert!(ClaimSelector::from_name("nope").is_err());
    }
}
