//! Reading graphs, matrices and number lists from arguments.
//!
//! A graph argument is a file (JSON edge list or graph6), a named graph, an
//! inline JSON object or an inline graph6 string, tried in that order.
//! Matrix arguments are files or inline JSON. Vertex labels are 1-based.

use std::path::Path;

use iepg::graph::named_graph;
use iepg::matrix::DEFAULT_ZERO_TOL;
use iepg::{Graph, IepgError, Oml, PatternedMatrix, PropertyKind, Result};
use serde_json::Value;

fn read_arg(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| IepgError::Parse(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn graph(arg: &str) -> Result<Graph> {
    if !Path::new(arg).is_file() {
        if let Ok(g) = named_graph(arg) {
            return Ok(g);
        }
    }
    let text = read_arg(arg)?;
    let t = text.trim();
    if t.starts_with('{') {
        Graph::from_json_str(t)
    } else {
        Graph::from_graph6(t)
    }
}

/// With `strict`, a `"graph"` field in the JSON must match the nonzero
/// pattern exactly.
pub fn matrix(arg: &str, strict: bool) -> Result<PatternedMatrix> {
    let text = read_arg(arg)?;
    let v: serde_json::Value = serde_json::from_str(text.trim())?;
    let m = PatternedMatrix::from_json_value(&v)?;
    if strict {
        if let Some(g) = v.get("graph") {
            let g = Graph::from_json_value(g)?;
            return PatternedMatrix::with_pattern(m.into_matrix(), &g, DEFAULT_ZERO_TOL);
        }
    }
    Ok(m)
}

pub fn numbers(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| IepgError::Parse(format!("{x:?} is not a number"))))
        .collect()
}

pub fn oml(s: &str) -> Result<Oml> {
    let m = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| IepgError::Parse(format!("{x:?} is not a multiplicity"))))
        .collect::<Result<Vec<_>>>()?;
    Oml::new(m)
}

/// 1-based labels to 0-based vertices; an empty string is the empty set.
pub fn vertices(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(IepgError::Parse(format!("{x:?} is not a 1-based vertex label"))),
        })
        .collect()
}

/// `key=value` pairs for family parameters.
pub fn param(s: &str) -> Result<(String, f64)> {
    let (k, v) = s.split_once('=').ok_or_else(|| IepgError::Parse(format!("expected key=value, got {s:?}")))?;
    let v = v.trim().parse::<f64>().map_err(|_| IepgError::Parse(format!("{v:?} is not a number")))?;
    Ok((k.trim().to_string(), v))
}

pub enum Target {
    /// Every eigenvalue, found by search.
    Spectrum(Vec<f64>),
    /// A list and one value per distinct eigenvalue.
    Oml(Oml, Vec<f64>),
}

/// A realization request document.
pub struct Request {
    pub graph: Graph,
    pub target: Target,
    /// `None` for `"require": "none"`.
    pub require: Option<PropertyKind>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
}

fn floats(v: &Value, what: &str) -> Result<Vec<f64>> {
    v.as_array()
        .and_then(|a| a.iter().map(Value::as_f64).collect::<Option<Vec<f64>>>())
        .ok_or_else(|| IepgError::Parse(format!("{what} must be an array of numbers")))
}

/// `{"graph", "target": {"spectrum"} | {"oml", "anchor"}, "require", "seed", "tol"}`.
pub fn request(arg: &str) -> Result<Request> {
    let v: Value = serde_json::from_str(read_arg(arg)?.trim())?;
    let graph = match v.get("graph") {
        Some(Value::String(s)) => graph(s)?,
        Some(g) => Graph::from_json_value(g)?,
        None => return Err(IepgError::Parse("request needs a graph".into())),
    };
    let t = v.get("target").ok_or_else(|| IepgError::Parse("request needs a target".into()))?;
    let target = if let Some(s) = t.get("spectrum") {
        Target::Spectrum(floats(s, "target.spectrum")?)
    } else {
        let m = t.get("oml").and_then(Value::as_array).ok_or_else(|| IepgError::Parse("target needs spectrum or oml".into()))?;
        let m = m
            .iter()
            .map(|x| x.as_u64().map(|k| k as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| IepgError::Parse("target.oml must hold positive integers".into()))?;
        let anchor = floats(t.get("anchor").unwrap_or(&Value::Null), "target.anchor")?;
        Target::Oml(Oml::new(m)?, anchor)
    };
    let require = match v.get("require").and_then(Value::as_str).unwrap_or("ssp") {
        "ssp" => Some(PropertyKind::Ssp),
        "smp" => Some(PropertyKind::Smp),
        "none" => None,
        other => return Err(IepgError::Parse(format!("require must be ssp, smp or none, not {other:?}"))),
    };
    Ok(Request { graph, target, require, seed: v.get("seed").and_then(Value::as_u64), tol: v.get("tol").and_then(Value::as_f64) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_forms() {
        assert_eq!(graph("C4").unwrap().size(), 4);
        assert_eq!(graph("Cx").unwrap().order(), 4);
        assert_eq!(graph(r#"{"n":3,"edges":[[1,2]]}"#).unwrap().size(), 1);
        assert!(graph("not a graph").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(oml("(2,2,1)").unwrap(), Oml(vec![2, 2, 1]));
        assert_eq!(vertices("1,3").unwrap(), vec![0, 2]);
        assert!(vertices("0").is_err());
        assert_eq!(numbers("-2, 1.5").unwrap(), vec![-2.0, 1.5]);
        assert_eq!(param("a=2").unwrap(), ("a".into(), 2.0));
    }
}
