//! Machine-readable reports. Serialization is canonical: maps are ordered,
//! arrays sorted where the schema says so, so identical inputs produce
//! byte-identical documents.

use crate::group::Group;
use crate::spectrum::OrderSpectrum;
use crate::structure::{prime_graph, PrimeGraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub details: String,
}

impl CheckResult {
    pub fn new(id: &str, status: CheckStatus, details: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.into(),
            status,
            details: details.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDesc {
    pub name: String,
    pub kind: String,
    pub order: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDesc {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

impl From<&PrimeGraph> for GraphDesc {
    fn from(g: &PrimeGraph) -> GraphDesc {
        GraphDesc {
            vertices: g.vertices.clone(),
            edges: g.edges.iter().map(|&(p, q)| [p, q]).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub group: GroupDesc,
    pub spectrum: BTreeMap<u64, u64>,
    pub nse: Vec<u64>,
    pub pi: Vec<u64>,
    pub pi_e: Vec<u64>,
    pub prime_graph: GraphDesc,
    pub checks: Vec<CheckResult>,
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

impl Report {
    pub fn for_group(
        name: &str,
        kind: &str,
        _group: &Group,
        spec: &OrderSpectrum,
        checks: Vec<CheckResult>,
    ) -> Report {
        Report {
            tool_version: TOOL_VERSION.into(),
            group: GroupDesc {
                name: name.into(),
                kind: kind.into(),
                order: spec.group_order(),
            },
            spectrum: spec.counts().clone(),
            nse: spec.nse(),
            pi: spec.pi(),
            pi_e: spec.pi_e(),
            prime_graph: (&prime_graph(spec)).into(),
            checks,
        }
    }

    /// Stub for a catalog entry whose backing data could not be loaded:
    /// every requested check is reported as skipped.
    pub fn skipped_stub(name: &str, kind: &str, reason: &str, check_ids: &[&str]) -> Report {
        Report {
            tool_version: TOOL_VERSION.into(),
            group: GroupDesc {
                name: name.into(),
                kind: kind.into(),
                order: 0,
            },
            spectrum: BTreeMap::new(),
            nse: Vec::new(),
            pi: Vec::new(),
            pi_e: Vec::new(),
            prime_graph: GraphDesc {
                vertices: Vec::new(),
                edges: Vec::new(),
            },
            checks: check_ids
                .iter()
                .map(|id| CheckResult::new(id, CheckStatus::Skipped, reason))
                .collect(),
        }
    }

    /// Synthetic report carrying the catalog-level checks in a catalog run.
    pub fn catalog_summary(entry_count: usize, checks: Vec<CheckResult>) -> Report {
        Report {
            tool_version: TOOL_VERSION.into(),
            group: GroupDesc {
                name: "(catalog)".into(),
                kind: "catalog".into(),
                order: entry_count as u64,
            },
            spectrum: BTreeMap::new(),
            nse: Vec::new(),
            pi: Vec::new(),
            pi_e: Vec::new(),
            prime_graph: GraphDesc {
                vertices: Vec::new(),
                edges: Vec::new(),
            },
            checks,
        }
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn has_skip(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Skipped)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

pub fn reports_to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("report serialization")
}
