//! Versioned JSON and CSV report documents.
//!
//! Everything that varies between identical runs lives in the single top-level `timing` field, so
//! two reports for the same query differ only there.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::enumerate::Shard;
use crate::error::{Error, Result};
use crate::extremal::{merge_shards, ExtremalQuery, ExtremalResult, Stratum};
use crate::graph::ExtendedNat;
use crate::graph6;
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_seconds: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_result_seconds: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument<R> {
    pub schema_version: String,
    pub kind: String,
    pub query: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
    pub results: Vec<R>,
    pub timing: Timing,
}

impl<R: Serialize> ReportDocument<R> {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }
}

/// Serialized form of an [`ExtremalResult`], witnesses as graph6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub ell: usize,
    pub d: usize,
    pub k: usize,
    pub value: ExtendedNat,
    pub witness_count: u64,
    pub witnesses: Vec<String>,
    pub witnesses_truncated: bool,
    pub witness_cap: Option<usize>,
    pub graphs_examined: u64,
    pub edge_counts_swept: Option<[usize; 2]>,
    pub strata: Vec<Stratum>,
    pub shard: Shard,
}

impl ExtremalRecord {
    pub fn from_result(r: &ExtremalResult) -> Result<ExtremalRecord> {
        let ExtremalQuery { n, ell, d, k } = r.query;
        Ok(ExtremalRecord {
            n,
            ell,
            d,
            k,
            value: r.value,
            witness_count: r.witness_count,
            witnesses: r.witnesses.iter().map(graph6::encode).collect::<Result<_>>()?,
            witnesses_truncated: r.witnesses_truncated(),
            witness_cap: r.witness_cap,
            graphs_examined: r.graphs_examined,
            edge_counts_swept: r.edge_counts_swept().map(|range| [*range.start(), *range.end()]),
            strata: r.strata.clone(),
            shard: r.shard,
        })
    }

    pub fn query(&self) -> ExtremalQuery {
        ExtremalQuery::new(self.n, self.ell, self.d).with_k(self.k)
    }

    pub fn to_result(&self, elapsed: Duration) -> Result<ExtremalResult> {
        Ok(ExtremalResult {
            query: self.query(),
            value: self.value,
            witnesses: self.witnesses.iter().map(|s| graph6::decode(s)).collect::<Result<_>>()?,
            witness_count: self.witness_count,
            witness_cap: self.witness_cap,
            graphs_examined: self.graphs_examined,
            strata: self.strata.clone(),
            shard: self.shard,
            elapsed,
        })
    }
}

pub fn extremal_document(kind: &str, query: Value, results: &[ExtremalResult]) -> Result<ReportDocument<ExtremalRecord>> {
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.into(),
        kind: kind.into(),
        query,
        summary: None,
        results: results.iter().map(ExtremalRecord::from_result).collect::<Result<_>>()?,
        timing: Timing {
            elapsed_seconds: results.iter().map(|r| r.elapsed.as_secs_f64()).sum(),
            per_result_seconds: results.iter().map(|r| r.elapsed.as_secs_f64()).collect(),
        },
    })
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Report(e.to_string()))
}

pub fn suite_document(query: Value, suite: &SuiteReport, elapsed: Duration) -> Result<ReportDocument<Value>> {
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.into(),
        kind: "verify".into(),
        query,
        summary: Some(to_value(&suite.summary)?),
        results: suite.claims.iter().map(to_value).collect::<Result<_>>()?,
        timing: Timing {
            elapsed_seconds: elapsed.as_secs_f64(),
            per_result_seconds: Vec::new(),
        },
    })
}

pub fn parse_extremal_document(text: &str) -> Result<ReportDocument<ExtremalRecord>> {
    let doc: ReportDocument<ExtremalRecord> =
        serde_json::from_str(text).map_err(|e| Error::Report(format!("not an extremal report: {e}")))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Report(format!(
            "schema version {:?} is not {SCHEMA_VERSION:?}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

/// Merges shard reports (any mix of single queries and sweeps) into one unsharded report.
/// Results keep the order in which their queries first appear.
pub fn merge_documents(docs: &[ReportDocument<ExtremalRecord>]) -> Result<ReportDocument<ExtremalRecord>> {
    let first = docs.first().ok_or_else(|| Error::Report("no reports to merge".into()))?;
    let mut order = Vec::new();
    let mut parts: BTreeMap<ExtremalQuery, Vec<ExtremalResult>> = BTreeMap::new();
    for doc in docs {
        if doc.kind != first.kind {
            return Err(Error::Report(format!("cannot merge {:?} with {:?} reports", doc.kind, first.kind)));
        }
        for (i, rec) in doc.results.iter().enumerate() {
            let secs = doc.timing.per_result_seconds.get(i).copied().unwrap_or(0.0);
            let entry = parts.entry(rec.query()).or_default();
            if entry.is_empty() {
                order.push(rec.query());
            }
            entry.push(rec.to_result(Duration::from_secs_f64(secs))?);
        }
    }
    let merged = order
        .iter()
        .map(|q| merge_shards(&parts[q]))
        .collect::<Result<Vec<_>>>()?;
    let mut query = first.query.clone();
    if let Value::Object(map) = &mut query {
        map.remove("shard");
        map.remove("shards");
    }
    extremal_document(&first.kind, query, &merged)
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Report(format!("csv: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

pub fn extremal_csv(records: &[ExtremalRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "ell",
        "d",
        "k",
        "value",
        "witness_count",
        "graphs_examined",
        "edges_from",
        "edges_to",
        "witnesses",
    ])
    .map_err(csv_error)?;
    for r in records {
        let (from, to) = match r.edge_counts_swept {
            Some([a, b]) => (a.to_string(), b.to_string()),
            None => (String::new(), String::new()),
        };
        w.write_record([
            r.n.to_string(),
            r.ell.to_string(),
            r.d.to_string(),
            r.k.to_string(),
            r.value.to_string(),
            r.witness_count.to_string(),
            r.graphs_examined.to_string(),
            from,
            to,
            r.witnesses.join(" "),
        ])
        .map_err(csv_error)?;
    }
    finish_csv(w)
}

pub fn suite_csv(suite: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim", "status", "params", "expected", "computed", "ok", "evidence"])
        .map_err(csv_error)?;
    for claim in &suite.claims {
        for case in &claim.cases {
            w.write_record([
                claim.claim.to_string(),
                claim.status.to_string(),
                case.params.to_string(),
                case.expected.to_string(),
                case.computed.to_string(),
                case.ok.to_string(),
                case.evidence.join(" "),
            ])
            .map_err(csv_error)?;
        }
    }
    finish_csv(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{compute_e, compute_e_with, SearchOptions};
    use serde_json::json;

    #[test]
    fn extremal_json_round_trip() {
        let r = compute_e(&ExtremalQuery::new(6, 3, 3)).unwrap();
        let doc = extremal_document("extremal", json!({"n": 6}), std::slice::from_ref(&r)).unwrap();
        let text = doc.to_json().unwrap();
        let back = parse_extremal_document(&text).unwrap();
        assert_eq!(back.results, doc.results);
        let restored = back.results[0].to_result(r.elapsed).unwrap();
        assert_eq!(restored, r);
        assert!(text.contains("\"schema_version\": \"1\""));
    }

    #[test]
    fn infinity_is_a_string() {
        let r = compute_e(&ExtremalQuery::new(5, 3, 2)).unwrap();
        let doc = extremal_document("extremal", Value::Null, &[r]).unwrap();
        let text = doc.to_json().unwrap();
        assert!(text.contains("\"value\": \"inf\""));
        let csv = extremal_csv(&doc.results).unwrap();
        assert!(csv.lines().nth(1).unwrap().contains(",inf,"));
    }

    #[test]
    fn merge_reproduces_unsharded_records() {
        let q = ExtremalQuery::new(7, 4, 3);
        let whole = extremal_document("extremal", json!({"n": 7}), &[compute_e(&q).unwrap()]).unwrap();
        let docs: Vec<_> = (0..2)
            .map(|i| {
                let opts = SearchOptions {
                    shard: Shard::new(i, 2).unwrap(),
                    ..SearchOptions::default()
                };
                let r = compute_e_with(&q, &opts).unwrap();
                extremal_document("extremal", json!({"n": 7, "shard": i, "shards": 2}), &[r]).unwrap()
            })
            .collect();
        let merged = merge_documents(&docs).unwrap();
        assert_eq!(merged.results, whole.results);
        assert_eq!(merged.query, whole.query);
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let text = r#"{"schema_version":"2","kind":"extremal","query":null,"results":[],"timing":{"elapsed_seconds":0}}"#;
        assert!(parse_extremal_document(text).is_err());
    }
}
