//! JSON forms of verdicts, maps and survey rows.
//!
//! Verdict objects use the fixed keys `kind`, `subRepresentable`, `witness`
//! and `g`. Elements are always reported by name.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use subrep_core::{Embedding, PatternKind, Poset, SubRepMap, SurveyRow, Verdict, Witness};

/// `pattern element -> poset element`, by name.
pub type NameMap = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum WitnessReport {
    Center { element: String },
    Chains { chains: Vec<Vec<String>> },
    Pattern { pattern: String, map: NameMap },
    VeeAndWedge { vee: NameMap, wedge: NameMap },
    Reason { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GEntry {
    pub subset: Vec<String>,
    pub image: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictReport {
    pub kind: String,
    pub sub_representable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<GEntry>>,
}

pub fn name_map(pattern: &Poset, target: &Poset, e: &Embedding) -> NameMap {
    e.targets()
        .iter()
        .enumerate()
        .map(|(i, &t)| (pattern.name(i).to_string(), target.name(t).to_string()))
        .collect()
}

fn names(p: &Poset, m: subrep_core::SubsetMask) -> Vec<String> {
    p.names_of(m).into_iter().map(str::to_string).collect()
}

impl WitnessReport {
    pub fn new(p: &Poset, w: &Witness) -> Self {
        match w {
            Witness::Center(x) => WitnessReport::Center {
                element: p.name(*x).to_string(),
            },
            Witness::Chains(chains) => WitnessReport::Chains {
                chains: chains.iter().map(|&m| names(p, m)).collect(),
            },
            Witness::Pattern { kind, embedding } => WitnessReport::Pattern {
                pattern: kind.name().to_string(),
                map: name_map(&kind.poset(), p, embedding),
            },
            Witness::VeeAndWedge { vee, wedge } => WitnessReport::VeeAndWedge {
                vee: name_map(&PatternKind::Vee.poset(), p, vee),
                wedge: name_map(&PatternKind::Wedge.poset(), p, wedge),
            },
            Witness::Reason(r) => WitnessReport::Reason { reason: r.clone() },
        }
    }
}

pub fn g_entries(g: &SubRepMap) -> Vec<GEntry> {
    let p = g.parent();
    g.table()
        .iter()
        .map(|(s, t)| GEntry {
            subset: names(p, *s),
            image: names(p, *t),
        })
        .collect()
}

impl VerdictReport {
    /// `p` names the elements of a finite verdict; symbolic verdicts only
    /// carry reasons.
    pub fn new(p: Option<&Poset>, v: &Verdict) -> Self {
        let witness = v.witness.as_ref().map(|w| match (p, w) {
            (_, Witness::Reason(r)) => WitnessReport::Reason { reason: r.clone() },
            (Some(p), w) => WitnessReport::new(p, w),
            (None, _) => WitnessReport::Reason {
                reason: "finite witness without a poset".into(),
            },
        });
        VerdictReport {
            kind: v.kind.name().to_string(),
            sub_representable: v.sub_representable,
            witness,
            g: None,
        }
    }

    pub fn with_g(mut self, g: &SubRepMap) -> Self {
        self.g = Some(g_entries(g));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EmbedReport {
    pub embeds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<NameMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveyReport {
    pub code: String,
    pub poset: String,
    pub kind: String,
    pub classifier: bool,
    pub oracle: bool,
    pub agree: bool,
}

impl SurveyReport {
    pub fn new(row: &SurveyRow) -> Self {
        SurveyReport {
            code: row.code.to_string(),
            poset: row.poset.to_string(),
            kind: row.classifier.kind.name().to_string(),
            classifier: row.classifier.sub_representable,
            oracle: row.oracle,
            agree: row.agrees(),
        }
    }
}
