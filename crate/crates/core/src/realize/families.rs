//! The explicit matrix families: five parametrized order-5 matrices, the
//! 12x12 matrix with the SMP but not the SSP, and the fixed witnesses for
//! `C4`, `K_{1,3}`, `K_{1,6}`, `S(2,1,1,1,1)` and `S(2,2,1,1)`.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::error::{IepgError, Result};
use crate::graph::{is_isomorphic, named_graph, Graph};
use crate::matrix::{Oml, PatternedMatrix};

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    M1 { t: f64 },
    M2 { a: f64 },
    M3 { a: f64 },
    M4 { a: f64, b: f64, c: f64 },
    M5 { a: f64 },
    B12,
    C4Table,
    K13Table { a: f64, b: f64 },
    K16Table,
    S21111Table,
    S2211Table,
}

pub const FAMILY_NAMES: [&str; 11] = [
    "M1",
    "M2",
    "M3",
    "M4",
    "M5",
    "B12",
    "C4_TABLE1",
    "K13_TABLE1",
    "K16_TABLE2",
    "S21111_TABLE2",
    "S2211_TABLE2",
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::M1 { .. } => "M1",
            Family::M2 { .. } => "M2",
            Family::M3 { .. } => "M3",
            Family::M4 { .. } => "M4",
            Family::M5 { .. } => "M5",
            Family::B12 => "B12",
            Family::C4Table => "C4_TABLE1",
            Family::K13Table { .. } => "K13_TABLE1",
            Family::K16Table => "K16_TABLE2",
            Family::S21111Table => "S21111_TABLE2",
            Family::S2211Table => "S2211_TABLE2",
        }
    }

    /// Builds a family from its name and named parameters. Missing
    /// parameters take the sample values `t = 0.5`, `a = b = 1`, `c = 0.5`.
    pub fn from_name(name: &str, params: &BTreeMap<String, f64>) -> Result<Family> {
        let p = |k: &str, d: f64| params.get(k).copied().unwrap_or(d);
        let allowed: &[&str] = match name.to_ascii_uppercase().as_str() {
            "M1" => &["t"],
            "M2" | "M3" | "M5" => &["a"],
            "M4" => &["a", "b", "c"],
            "K13_TABLE1" => &["a", "b"],
            _ => &[],
        };
        if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(IepgError::domain(format!("family {name} has no parameter {k}")));
        }
        let f = match name.to_ascii_uppercase().as_str() {
            "M1" => Family::M1 { t: p("t", 0.5) },
            "M2" => Family::M2 { a: p("a", 1.0) },
            "M3" => Family::M3 { a: p("a", 1.0) },
            "M4" => Family::M4 { a: p("a", 1.0), b: p("b", 1.0), c: p("c", 0.5) },
            "M5" => Family::M5 { a: p("a", 1.0) },
            "B12" => Family::B12,
            "C4_TABLE1" => Family::C4Table,
            "K13_TABLE1" => Family::K13Table { a: p("a", 1.0), b: p("b", 1.0) },
            "K16_TABLE2" => Family::K16Table,
            "S21111_TABLE2" => Family::S21111Table,
            "S2211_TABLE2" => Family::S2211Table,
            _ => return Err(IepgError::UnknownName(name.to_string())),
        };
        f.validate()?;
        Ok(f)
    }

    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Family::M1 { t } => vec![("t", t)],
            Family::M2 { a } | Family::M3 { a } | Family::M5 { a } => vec![("a", a)],
            Family::M4 { a, b, c } => vec![("a", a), ("b", b), ("c", c)],
            Family::K13Table { a, b } => vec![("a", a), ("b", b)],
            _ => vec![],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.params().iter().any(|(_, v)| !v.is_finite()) {
            return Err(IepgError::NonFinite);
        }
        let bad = |msg: &str| Err(IepgError::domain(format!("{}: {msg}", self.name())));
        match *self {
            Family::M1 { t } if !(t > 0.0 && t < 1.0) => bad("need 0 < t < 1"),
            Family::M2 { a: 0.0 } | Family::M3 { a: 0.0 } => bad("need a != 0"),
            Family::M4 { b: 0.0, .. } => bad("need b != 0"),
            Family::M4 { c, .. } if c == 0.0 || c.abs() == 1.0 => bad("need c not in {0, 1, -1}"),
            Family::M5 { a } if a < 1.0 => bad("need a >= 1"),
            Family::K13Table { b: 0.0, .. } => bad("need b != 0"),
            _ => Ok(()),
        }
    }

    /// Graph the matrix is supposed to have, up to isomorphism.
    pub fn expected_graph(&self) -> Graph {
        let name = match self {
            Family::M1 { .. } => "C5",
            Family::M2 { .. } => "Campstool",
            Family::M3 { .. } => "Bfly",
            Family::M4 { .. } => "K23",
            Family::M5 { .. } => "(K4)_e",
            Family::C4Table => "C4",
            Family::K13Table { .. } => "K13",
            Family::K16Table => "K16",
            Family::S21111Table => "S(2,1,1,1,1)",
            Family::S2211Table => "S(2,2,1,1)",
            Family::B12 => return b12_graph(),
        };
        named_graph(name).expect("built-in name")
    }

    /// Closed-form eigenvalues in ascending order.
    pub fn expected_eigenvalues(&self) -> Vec<f64> {
        let mut v = match *self {
            Family::M1 { t } => {
                let (l, m) = m1_pair(t);
                vec![l, l, m, m, 0.0]
            }
            Family::M2 { a } => vec![-2.0, -2.0, 0.0, 0.0, 2.0 * a * a],
            Family::M3 { a } => vec![-2.0 * a * a, -2.0 * a * a, 0.0, 2.0, 2.0],
            Family::M4 { a, b, c } => {
                // roots of x^2 + a(c^2 - 1) x - a^2 c^2 - 3 b^2 (1 + c^2)
                let p = a * (c * c - 1.0);
                let q = -a * a * c * c - 3.0 * b * b * (1.0 + c * c);
                let d = (p * p - 4.0 * q).sqrt();
                vec![(-p - d) / 2.0, 0.0, 0.0, 0.0, (-p + d) / 2.0]
            }
            Family::M5 { a } => vec![0.0, 0.0, 0.0, 5.0, 4.0 + a * a],
            Family::B12 => [vec![-4.0; 3], vec![0.0; 5], vec![3.0; 4]].concat(),
            Family::C4Table => vec![-SQRT2, -SQRT2, SQRT2, SQRT2],
            Family::K13Table { a, b } => {
                let r = (a * a + 12.0 * b * b).sqrt();
                vec![(a - r) / 2.0, 0.0, 0.0, (a + r) / 2.0]
            }
            Family::K16Table => {
                let s = 21f64.sqrt();
                vec![(-3.0 - s) / 2.0, 0.0, 0.0, (-3.0 + s) / 2.0, 1.0, 1.0, 4.0]
            }
            Family::S21111Table => {
                let s = 13f64.sqrt();
                // the printed list omits the top eigenvalue; the trace forces 5
                vec![(-3.0 - s) / 2.0, 0.0, 0.0, (s - 3.0) / 2.0, 2.0, 2.0, 5.0]
            }
            Family::S2211Table => vec![-3.0, 0.0, 0.0, 1.0, 2.0, 2.0, 4.0],
        };
        v.sort_by(|x, y| x.total_cmp(y));
        v
    }

    pub fn expected_oml(&self) -> Oml {
        let m = match *self {
            Family::M1 { .. } | Family::M2 { .. } => vec![2, 2, 1],
            Family::M3 { .. } => vec![2, 1, 2],
            Family::M4 { .. } => vec![1, 3, 1],
            Family::M5 { a: 1.0 } => vec![3, 2],
            Family::M5 { .. } => vec![3, 1, 1],
            Family::B12 => vec![3, 5, 4],
            Family::C4Table => vec![2, 2],
            Family::K13Table { .. } => vec![1, 2, 1],
            Family::K16Table | Family::S21111Table | Family::S2211Table => vec![1, 2, 1, 2, 1],
        };
        Oml(m)
    }

    pub fn raw_matrix(&self) -> DMatrix<f64> {
        match *self {
            Family::M1 { t } => {
                let d1 = -t.powi(4) + 2.0 * t.powi(3) - t * t - 1.0;
                let d3 = -t * t * (t * t - 2.0 * t + 2.0);
                let d5 = -2.0 * (t - 1.0).powi(2) * t * t;
                let e = -(t - 1.0) * t;
                let f = -(t - 1.0) * t * t;
                let g = (t - 1.0).powi(2) * t * t;
                rows(5, &[
                    d1, 0.0, e, g, 0.0, //
                    0.0, d1, 0.0, f, e, //
                    e, 0.0, d3, 0.0, f, //
                    g, f, 0.0, d3, 0.0, //
                    0.0, e, f, 0.0, d5,
                ])
            }
            Family::M2 { a } => rows(5, &[
                -1.0, 1.0, -a, 0.0, 0.0, //
                1.0, -1.0, -a, 0.0, 0.0, //
                -a, -a, 2.0 * a * a - 2.0, -a, -a, //
                0.0, 0.0, -a, 0.0, 0.0, //
                0.0, 0.0, -a, 0.0, 0.0,
            ]),
            Family::M3 { a } => {
                let a2 = a * a;
                rows(5, &[
                    1.0, -1.0, 0.0, 0.0, -a, //
                    -1.0, 1.0, 0.0, 0.0, -a, //
                    0.0, 0.0, -a2, a2, a, //
                    0.0, 0.0, a2, -a2, a, //
                    -a, -a, a, a, 2.0 - 2.0 * a2,
                ])
            }
            Family::M4 { a, b, c } => rows(5, &[
                a, 0.0, b, b, b, //
                0.0, -a * c * c, b * c, b * c, b * c, //
                b, b * c, 0.0, 0.0, 0.0, //
                b, b * c, 0.0, 0.0, 0.0, //
                b, b * c, 0.0, 0.0, 0.0,
            ]),
            Family::M5 { a } => rows(5, &[
                a * a, 0.0, SQRT2 * a, a, a, //
                0.0, 1.0, -SQRT2, 1.0, 1.0, //
                SQRT2 * a, -SQRT2, 4.0, 0.0, 0.0, //
                a, 1.0, 0.0, 2.0, 2.0, //
                a, 1.0, 0.0, 2.0, 2.0,
            ]),
            Family::B12 => b12_matrix(),
            Family::C4Table => rows(4, &[
                0.0, 1.0, 0.0, -1.0, //
                1.0, 0.0, 1.0, 0.0, //
                0.0, 1.0, 0.0, 1.0, //
                -1.0, 0.0, 1.0, 0.0,
            ]),
            Family::K13Table { a, b } => rows(4, &[
                a, b, b, b, //
                b, 0.0, 0.0, 0.0, //
                b, 0.0, 0.0, 0.0, //
                b, 0.0, 0.0, 0.0,
            ]),
            Family::K16Table => rows(7, &[
                0.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, //
                1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, //
                1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, //
                2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, //
                2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, //
                2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
            ]),
            Family::S21111Table => rows(7, &[
                0.0, 1.0, 0.0, 3.0, 2.0, 1.0, 1.0, //
                1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, //
                3.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, //
                2.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
            ]),
            Family::S2211Table => rows(7, &[
                0.0, 2.0, 0.0, 2.0, 0.0, 1.0, SQRT2, //
                2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, //
                2.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, //
                SQRT2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
            ]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        let p = self.params();
        if !p.is_empty() {
            let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        Ok(())
    }
}

fn rows(n: usize, data: &[f64]) -> DMatrix<f64> {
    DMatrix::from_row_slice(n, n, data)
}

/// The two double eigenvalues `λ < μ < 0` of `M1(t)`.
pub fn m1_pair(t: f64) -> (f64, f64) {
    let base = -3.0 * t.powi(4) + 6.0 * t.powi(3) - 4.0 * t * t - 1.0;
    let root = (t.powi(6) - 2.0 * t.powi(5) + 3.0 * t.powi(4) + 3.0 * t * t + 2.0 * t + 1.0).sqrt();
    ((base - (1.0 - t) * root) / 2.0, (base + (1.0 - t) * root) / 2.0)
}

const B12_EDGES: [(usize, usize); 18] = [
    (1, 2),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 8),
    (3, 4),
    (3, 9),
    (4, 5),
    (4, 7),
    (5, 6),
    (5, 8),
    (6, 9),
    (7, 10),
    (8, 11),
    (9, 12),
    (10, 11),
    (10, 12),
    (11, 12),
];

/// The 18-edge graph on 12 vertices carrying the (3,5,4) matrix.
pub fn b12_graph() -> Graph {
    let e: Vec<(usize, usize)> = B12_EDGES.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    Graph::from_edges(12, &e).expect("static edge list")
}

fn b12_matrix() -> DMatrix<f64> {
    let mut b = DMatrix::zeros(12, 12);
    for i in 0..6 {
        b[(i, i)] = 1.0;
    }
    for i in 6..9 {
        b[(i, i)] = -2.0;
    }
    let set = |b: &mut DMatrix<f64>, i: usize, j: usize, v: f64| {
        b[(i - 1, j - 1)] = v;
        b[(j - 1, i - 1)] = v;
    };
    // hexagon with weight -1
    for (i, j) in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)] {
        set(&mut b, i, j, -1.0);
    }
    for (i, j) in [(1, 7), (4, 7), (2, 8), (5, 8), (3, 9), (6, 9)] {
        set(&mut b, i, j, SQRT2);
    }
    for (i, j) in [(7, 10), (8, 11), (9, 12)] {
        set(&mut b, i, j, 2.0);
    }
    for (i, j) in [(10, 11), (10, 12), (11, 12)] {
        set(&mut b, i, j, 1.0);
    }
    b
}

/// A family member after the affine change `scale * raw + shift * I`.
#[derive(Clone, Debug)]
pub struct FamilyMatrix {
    pub family: Family,
    pub scale: f64,
    pub shift: f64,
    pub matrix: PatternedMatrix,
}

impl FamilyMatrix {
    pub fn expected_eigenvalues(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.family.expected_eigenvalues().iter().map(|x| self.scale * x + self.shift).collect();
        v.sort_by(|x, y| x.total_cmp(y));
        v
    }

    pub fn expected_oml(&self) -> Oml {
        let o = self.family.expected_oml();
        if self.scale < 0.0 {
            o.reversed()
        } else {
            o
        }
    }

    /// Applies a further `scale * M + shift * I`.
    pub fn affine(&self, scale: f64, shift: f64) -> Result<FamilyMatrix> {
        if scale == 0.0 || !scale.is_finite() || !shift.is_finite() {
            return Err(IepgError::domain("affine change needs a finite nonzero scale"));
        }
        let n = self.matrix.order();
        let m = self.matrix.matrix() * scale + DMatrix::identity(n, n) * shift;
        Ok(FamilyMatrix {
            family: self.family,
            scale: self.scale * scale,
            shift: self.shift * scale + shift,
            matrix: PatternedMatrix::with_pattern(m, self.matrix.graph(), crate::matrix::DEFAULT_ZERO_TOL)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> =
            self.family.params().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "family": self.family.name(),
            "params": params,
            "scale": self.scale,
            "shift": self.shift,
            "matrix": self.matrix.to_json(),
            "graph": self.matrix.graph().to_json(),
            "expected_eigenvalues": self.expected_eigenvalues(),
            "expected_oml": self.expected_oml().0,
        })
    }
}

/// Instantiates the printed matrix and checks its graph.
pub fn build_family(family: Family) -> Result<FamilyMatrix> {
    family.validate()?;
    let raw = family.raw_matrix();
    let pm = PatternedMatrix::new(raw)?;
    if !is_isomorphic(pm.graph(), &family.expected_graph()) {
        return Err(IepgError::PatternMismatch(format!("{family} does not have the expected graph")));
    }
    Ok(FamilyMatrix { family, scale: 1.0, shift: 0.0, matrix: pm })
}

#[derive(Clone, Debug)]
pub struct M1Solution {
    pub t: f64,
    /// `μ(t) / λ(t)` at the returned `t`.
    pub ratio: f64,
    pub matrix: FamilyMatrix,
}

/// Finds `t` with `μ(t)/λ(t) = alpha2/alpha1` by bisection and scales `M1(t)`
/// to eigenvalues `{alpha1, alpha1, alpha2, alpha2, 0}`.
pub fn solve_m1(alpha1: f64, alpha2: f64) -> Result<M1Solution> {
    if !(alpha1.is_finite() && alpha2.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    if !(alpha1 < alpha2 && alpha2 < 0.0) {
        return Err(IepgError::domain("solve_m1 needs alpha1 < alpha2 < 0"));
    }
    let target = alpha2 / alpha1;
    let ratio = |t: f64| {
        let (l, m) = m1_pair(t);
        m / l
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut t = 0.5;
    for _ in 0..200 {
        t = 0.5 * (lo + hi);
        let r = ratio(t);
        if (r - target).abs() < 1e-14 {
            break;
        }
        if r < target {
            lo = t;
        } else {
            hi = t;
        }
    }
    let r = ratio(t);
    if (r - target).abs() >= 1e-12 {
        return Err(IepgError::NoConvergence(format!("bisection ended at ratio {r} for target {target}")));
    }
    let base = build_family(Family::M1 { t })?;
    let (l, _) = m1_pair(t);
    let matrix = base.affine(alpha1 / l, 0.0)?;
    Ok(M1Solution { t, ratio: r, matrix })
}

/// `M4` with spectrum `{lambda, 0, 0, 0, mu}` for `lambda * mu < 0`. With
/// `c = None` the value starts at 0.5 and is halved until feasible.
pub fn solve_m4(lambda: f64, mu: f64, c: Option<f64>) -> Result<FamilyMatrix> {
    if !(lambda.is_finite() && mu.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    if lambda * mu >= 0.0 {
        return Err(IepgError::domain("solve_m4 needs eigenvalues of opposite sign"));
    }
    let feasible = |c: f64| {
        let c2 = c * c;
        let num = -c2 * c2 * lambda * mu - c2 * lambda * lambda - c2 * mu * mu - lambda * mu;
        let den = c2 * c2 * c2 - c2 * c2 - c2 + 1.0;
        (num > 0.0 && den > 0.0 && c != 0.0 && c.abs() != 1.0).then_some((num, den))
    };
    let (c, (num, den)) = match c {
        Some(c) => (c, feasible(c).ok_or_else(|| IepgError::domain(format!("c = {c} violates the sign conditions")))?),
        None => {
            let mut c = 0.5;
            loop {
                if let Some(nd) = feasible(c) {
                    break (c, nd);
                }
                c *= 0.5;
                if c < 1e-8 {
                    return Err(IepgError::NoConvergence("no feasible c found".into()));
                }
            }
        }
    };
    let a = (-lambda - mu) / (c * c - 1.0);
    let b = num.sqrt() / (3f64.sqrt() * den.sqrt());
    build_family(Family::M4 { a, b, c })
}

/// Realizes distinct `targets` (ascending) with the named family and its
/// stated list, by choosing parameters and an affine change.
pub fn family_for_targets(name: &str, targets: &[f64]) -> Result<FamilyMatrix> {
    if targets.iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    if targets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(IepgError::domain("targets must be strictly increasing"));
    }
    let need = |k: usize| {
        if targets.len() == k {
            Ok(())
        } else {
            Err(IepgError::domain(format!("{name} needs {k} target values, got {}", targets.len())))
        }
    };
    match name.to_ascii_uppercase().as_str() {
        "M1" => {
            need(3)?;
            let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
            solve_m1(t1 - t3, t2 - t3)?.matrix.affine(1.0, t3)
        }
        "M2" => {
            need(3)?;
            let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
            let a = ((t3 - t2) / (t2 - t1)).sqrt();
            build_family(Family::M2 { a })?.affine((t2 - t1) / 2.0, t2)
        }
        "M3" => {
            need(3)?;
            let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
            let a = ((t2 - t1) / (t3 - t2)).sqrt();
            build_family(Family::M3 { a })?.affine((t3 - t2) / 2.0, t2)
        }
        "M4" => {
            need(3)?;
            let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
            solve_m4(t1 - t2, t3 - t2, None)?.affine(1.0, t2)
        }
        "M5" if targets.len() == 2 => build_family(Family::M5 { a: 1.0 })?.affine((targets[1] - targets[0]) / 5.0, targets[0]),
        "M5" => {
            need(3)?;
            let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
            let a = (5.0 * (t3 - t1) / (t2 - t1) - 4.0).sqrt();
            build_family(Family::M5 { a })?.affine((t2 - t1) / 5.0, t1)
        }
        "C4_TABLE1" => {
            need(2)?;
            build_family(Family::C4Table)?.affine((targets[1] - targets[0]) / (2.0 * SQRT2), (targets[0] + targets[1]) / 2.0)
        }
        "K13_TABLE1" => {
            need(3)?;
            let (x1, x3) = (targets[0] - targets[1], targets[2] - targets[1]);
            let b = (-x1 * x3 / 3.0).sqrt();
            build_family(Family::K13Table { a: x1 + x3, b })?.affine(1.0, targets[1])
        }
        other if FAMILY_NAMES.contains(&other) => {
            Err(IepgError::Unsupported(format!("{other} has fixed entries and is not spectrally arbitrary")))
        }
        _ => Err(IepgError::UnknownName(name.to_string())),
    }
}
