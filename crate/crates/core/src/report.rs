//! Versioned JSON and plain-text reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::checks::{CheckResult, Status};
use crate::finring::FiniteRing;
use crate::ideals::{max_regular_ideals, Ideal};
use crate::spectra::SpectrumJson;

pub const SCHEMA: &str = "qspec-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct RingInfo {
    pub expr: String,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealEntry {
    pub name: String,
    pub members: Vec<usize>,
    pub elements: Vec<String>,
    pub radical: String,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub quasi_prime: bool,
    pub regular: bool,
    pub max_regular: bool,
}

impl IdealEntry {
    /// Classifies every ideal of a lattice, sharing the max-regular computation.
    pub fn from_lattice(lattice: &[Ideal]) -> Vec<IdealEntry> {
        let Some(first) = lattice.first() else {
            return Vec::new();
        };
        let maxreg = max_regular_ideals(first.ring());
        lattice
            .iter()
            .map(|i| {
                let j = i.to_json();
                let regular = i.is_regular();
                IdealEntry {
                    name: j.name,
                    members: j.members,
                    elements: j.elements,
                    radical: i.radical().name(),
                    proper: i.is_proper(),
                    prime: i.is_prime(),
                    maximal: i.is_maximal_in(lattice),
                    primary: i.is_primary(),
                    quasi_prime: i.is_quasi_prime(),
                    regular,
                    max_regular: maxreg.contains(i),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub ring: RingInfo,
    pub results: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectra: Option<BTreeMap<String, SpectrumJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tfunctor: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_ms: Option<f64>,
}

impl Report {
    pub fn new(expr: &str, ring: &FiniteRing) -> Self {
        Report {
            schema: SCHEMA,
            ring: RingInfo {
                expr: expr.to_string(),
                size: ring.size(),
                elements: None,
            },
            results: Vec::new(),
            ideals: None,
            spectra: None,
            topology: None,
            tfunctor: None,
            total_ms: None,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.results.iter().any(|r| r.status.is_failure())
    }

    pub fn hit_cap(&self) -> bool {
        self.results.iter().any(CheckResult::hit_cap)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {} (size {})", self.ring.expr, self.ring.size);
        if let Some(el) = &self.ring.elements {
            let _ = writeln!(out, "elements: {}", el.join(" "));
        }
        if let Some(ideals) = &self.ideals {
            let _ = writeln!(out, "ideals ({}):", ideals.len());
            for i in ideals {
                let mut tags = Vec::new();
                for (on, tag) in [
                    (i.prime, "prime"),
                    (i.maximal, "maximal"),
                    (i.primary, "primary"),
                    (i.quasi_prime, "quasi-prime"),
                    (i.regular, "regular"),
                    (i.max_regular, "max-regular"),
                ] {
                    if on {
                        tags.push(tag);
                    }
                }
                let _ = writeln!(
                    out,
                    "  {:<12} |I|={:<4} rad={:<10} {}",
                    i.name,
                    i.members.len(),
                    i.radical,
                    tags.join(",")
                );
            }
        }
        if let Some(spectra) = &self.spectra {
            for (kind, sp) in spectra {
                let pts: Vec<&str> = sp.points.iter().map(|p| p.name.as_str()).collect();
                let _ = writeln!(out, "{kind}: {{{}}}", pts.join(", "));
                for (p, cl) in sp.points.iter().zip(&sp.closures) {
                    let names: Vec<&str> = cl.iter().map(|&i| sp.points[i].name.as_str()).collect();
                    let _ = writeln!(out, "  cl{{{}}} = {{{}}}", p.name, names.join(", "));
                }
            }
        }
        for (key, v) in [("topology", &self.topology), ("tfunctor", &self.tfunctor)] {
            if let Some(v) = v {
                let _ = writeln!(out, "{key}:");
                if let Value::Object(map) = v {
                    for (k, x) in map {
                        let _ = writeln!(out, "  {k}: {x}");
                    }
                }
            }
        }
        if !self.results.is_empty() {
            let width = self.results.iter().map(|r| r.name.len()).max().unwrap_or(0);
            let _ = writeln!(out, "checks:");
            for r in &self.results {
                let _ = writeln!(out, "  {:<width$}  {}", r.name, r.status);
                if r.status != Status::Pass {
                    let _ = writeln!(out, "  {:<width$}  {}", "", r.details);
                }
            }
            let failed = self.results.iter().filter(|r| r.status.is_failure()).count();
            let _ = writeln!(out, "{} checks, {} failed", self.results.len(), failed);
        }
        out
    }
}
