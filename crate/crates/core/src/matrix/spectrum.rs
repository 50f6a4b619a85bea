use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{IepgError, Result};

/// `1e-8 * max(1, rho)` where `rho` is the spectral radius.
pub fn default_cluster_tol(eigenvalues: &[f64]) -> f64 {
    let rho = eigenvalues.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    1e-8 * rho.max(1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    /// Mean of the clustered eigenvalues.
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted eigenvalues grouped into clusters: consecutive values closer than
/// `tol` belong to the same cluster.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
    pub tol: f64,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, tol: Option<f64>) -> Spectrum {
        eigenvalues.sort_by(|a, b| a.total_cmp(b));
        let tol = tol.unwrap_or_else(|| default_cluster_tol(&eigenvalues));
        let mut clusters: Vec<Cluster> = Vec::new();
        let mut start = 0;
        for i in 0..=eigenvalues.len() {
            let split = i == eigenvalues.len() || (i > start && eigenvalues[i] - eigenvalues[i - 1] > tol);
            if split && i > start {
                let group = &eigenvalues[start..i];
                clusters.push(Cluster {
                    value: group.iter().sum::<f64>() / group.len() as f64,
                    multiplicity: group.len(),
                });
                start = i;
            }
        }
        Spectrum { eigenvalues, clusters, tol }
    }

    pub fn oml(&self) -> Oml {
        Oml(self.clusters.iter().map(|c| c.multiplicity).collect())
    }

    pub fn distinct(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| c.value).collect()
    }

    /// Number of eigenvalues within `tol` (default: the clustering tolerance) of `lambda`.
    pub fn multiplicity_of(&self, lambda: f64, tol: Option<f64>) -> usize {
        let tol = tol.unwrap_or(self.tol);
        self.eigenvalues.iter().filter(|x| (*x - lambda).abs() <= tol).count()
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Cluster values printed with 15 significant digits.
    pub fn to_json(&self) -> Value {
        json!({
            "eigenvalues": self.eigenvalues,
            "clusters": self.clusters.iter().map(|c| json!({"value": round_sig(c.value, 15), "multiplicity": c.multiplicity})).collect::<Vec<_>>(),
            "oml": self.oml().0,
            "tol": self.tol,
        })
    }
}

pub(crate) fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// Ordered multiplicity list: multiplicities of the distinct eigenvalues in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Oml(pub Vec<usize>);

impl Oml {
    pub fn new(m: Vec<usize>) -> Result<Oml> {
        if m.contains(&0) {
            return Err(IepgError::Parse("multiplicities must be positive".into()));
        }
        Ok(Oml(m))
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Oml {
        Oml(self.0.iter().rev().copied().collect())
    }

    pub fn distinct_count(&self) -> usize {
        self.0.len()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn multiple_count(&self) -> usize {
        self.0.iter().filter(|&&m| m >= 2).count()
    }

    pub fn has_consecutive_multiples(&self) -> bool {
        self.0.windows(2).any(|w| w[0] >= 2 && w[1] >= 2)
    }

    pub fn extremes_simple(&self) -> bool {
        self.0.first() == Some(&1) && self.0.last() == Some(&1)
    }

    /// All ones.
    pub fn is_simple(&self) -> bool {
        self.0.iter().all(|&m| m == 1)
    }
}

impl fmt::Display for Oml {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Oml {
    type Err = IepgError;

    /// Accepts `2,2,1`, `(2,2,1)`, `[2,2,1]`, `1^5` and `(1,1^3)`.
    fn from_str(s: &str) -> Result<Oml> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut out = Vec::new();
        for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (m, rep) = match part.split_once('^') {
                Some((m, r)) => (m, r.trim().parse::<usize>().map_err(|_| IepgError::Parse(s.into()))?),
                None => (part, 1),
            };
            let m: usize = m.trim().parse().map_err(|_| IepgError::Parse(format!("bad multiplicity list {s:?}")))?;
            out.extend(std::iter::repeat_n(m, rep));
        }
        if out.is_empty() {
            return Err(IepgError::Parse(format!("empty multiplicity list {s:?}")));
        }
        Oml::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_merges_close_values() {
        let s = Spectrum::from_eigenvalues(vec![2.0, -2.0, 1e-12, -1e-12, 2.0 + 1e-10], None);
        assert_eq!(s.oml(), Oml(vec![1, 2, 2]));
        assert!((s.distinct()[2] - 2.0).abs() < 1e-9);
        assert_eq!(s.multiplicity_of(0.0, None), 2);
    }

    #[test]
    fn oml_parsing() {
        assert_eq!("(2,2,1)".parse::<Oml>().unwrap(), Oml(vec![2, 2, 1]));
        assert_eq!("1^5".parse::<Oml>().unwrap(), Oml(vec![1; 5]));
        assert!("2,0".parse::<Oml>().is_err());
        assert!("".parse::<Oml>().is_err());
        assert_eq!(Oml(vec![1, 2, 2]).reversed().to_string(), "(2,2,1)");
        assert!(Oml(vec![1, 2, 2, 1]).has_consecutive_multiples());
        assert!(!Oml(vec![2, 1, 2]).has_consecutive_multiples());
    }
}
