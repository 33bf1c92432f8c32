//! JSON form of a census report.
//!
//! Key order: `q`, `source`, `options {include_e0, include_n2, max_len}`,
//! `count_new`, `count_known`, `union_new`, `union_known`, `new_only`,
//! `known_only`, `rules [{id, source, description, lengths}]`. Counts and
//! unions of a group that was not requested are `null`, as are the two
//! differences unless both groups ran.

use mds_selfdual::census::{CensusReport, LengthCap};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceSelection {
    New,
    Known,
    Both,
}

impl SourceSelection {
    pub fn includes_new(self) -> bool {
        self != SourceSelection::Known
    }

    pub fn includes_known(self) -> bool {
        self != SourceSelection::New
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsRecord {
    pub include_e0: bool,
    pub include_n2: bool,
    pub max_len: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleRecord {
    pub id: String,
    pub source: String,
    pub description: String,
    pub lengths: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusFile {
    pub q: u64,
    pub source: SourceSelection,
    pub options: OptionsRecord,
    pub count_new: Option<usize>,
    pub count_known: Option<usize>,
    pub union_new: Option<Vec<u64>>,
    pub union_known: Option<Vec<u64>>,
    pub new_only: Option<Vec<u64>>,
    pub known_only: Option<Vec<u64>>,
    pub rules: Vec<RuleRecord>,
}

impl CensusFile {
    pub fn new(report: &CensusReport, source: SourceSelection) -> Self {
        let both = source == SourceSelection::Both;
        let when = |flag: bool, v: &Vec<u64>| flag.then(|| v.clone());
        CensusFile {
            q: report.q,
            source,
            options: OptionsRecord {
                include_e0: report.options.include_e0,
                include_n2: report.options.include_n2,
                max_len: report.options.cap.as_str().to_string(),
            },
            count_new: source.includes_new().then(|| report.count_new()),
            count_known: source.includes_known().then(|| report.count_known()),
            union_new: when(source.includes_new(), &report.union_new),
            union_known: when(source.includes_known(), &report.union_known),
            new_only: when(both, &report.new_only),
            known_only: when(both, &report.known_only),
            rules: report
                .rules
                .iter()
                .map(|r| RuleRecord {
                    id: r.rule.id.to_string(),
                    source: r.rule.source.as_str().to_string(),
                    description: r.rule.description.to_string(),
                    lengths: r.lengths.clone(),
                })
                .collect(),
        }
    }

    pub fn cap(&self) -> Option<LengthCap> {
        LengthCap::parse(&self.options.max_len)
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
