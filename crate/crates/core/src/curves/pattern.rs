use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::artin_graph::{ArtinGraph, BitVertex};
use crate::error::{invalid, Error, Result};
use crate::linalg;

/// A finite set of labelled curves with a symmetric geometric-intersection
/// matrix.
///
/// Only multiplicities 0 and 1 are supported, and every curve must meet at
/// least one other curve. Use [`CurvePattern::validate`] to get the full list
/// of problems with a raw matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurvePattern {
    curves: Vec<String>,
    inter: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternIssue {
    pub kind: IssueKind,
    pub location: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IssueKind {
    UnsupportedMultiplicity,
    NonzeroDiagonal,
    Asymmetric,
    IsolatedCurve,
    DuplicateLabel,
    ShapeMismatch,
}

impl fmt::Display for PatternIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            IssueKind::UnsupportedMultiplicity => "unsupported multiplicity",
            IssueKind::NonzeroDiagonal => "nonzero diagonal",
            IssueKind::Asymmetric => "asymmetric entry",
            IssueKind::IsolatedCurve => "isolated curve",
            IssueKind::DuplicateLabel => "duplicate label",
            IssueKind::ShapeMismatch => "matrix shape mismatch",
        };
        write!(f, "{what} at {}", self.location)
    }
}

/// Wire format: the curve labels and the list of intersecting pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub curves: Vec<String>,
    pub intersections: Vec<[String; 2]>,
}

impl CurvePattern {
    /// Build without validation; see [`CurvePattern::validate`].
    pub fn from_matrix_unchecked(curves: Vec<String>, inter: Vec<Vec<u8>>) -> Self {
        CurvePattern { curves, inter }
    }

    /// Build and validate.
    pub fn new(curves: Vec<String>, inter: Vec<Vec<u8>>) -> Result<Self> {
        let p = CurvePattern { curves, inter };
        p.validate().map_err(issues_error)?;
        Ok(p)
    }

    /// Curves for graph vertices; two curves meet once exactly when their
    /// vertices are adjacent.
    pub fn from_vertices(g: &ArtinGraph, labels: &[(String, BitVertex)]) -> Result<Self> {
        let n = labels.len();
        for i in 0..n {
            for j in i + 1..n {
                if labels[i].1 == labels[j].1 {
                    return invalid(format!("vertex {} used twice", labels[i].1));
                }
            }
        }
        let mut inter = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                inter[i][j] = u8::from(g.is_edge(&labels[i].1, &labels[j].1)?);
            }
        }
        Ok(CurvePattern {
            curves: labels.iter().map(|(l, _)| l.clone()).collect(),
            inter,
        })
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<PatternIssue>> {
        let n = self.curves.len();
        let mut issues = Vec::new();
        let mut seen = BTreeMap::new();
        for (i, c) in self.curves.iter().enumerate() {
            if let Some(prev) = seen.insert(c.as_str(), i) {
                issues.push(PatternIssue {
                    kind: IssueKind::DuplicateLabel,
                    location: format!("{c} (positions {prev} and {i})"),
                });
            }
        }
        if self.inter.len() != n || self.inter.iter().any(|r| r.len() != n) {
            issues.push(PatternIssue {
                kind: IssueKind::ShapeMismatch,
                location: format!("{n} curves"),
            });
            return Err(issues);
        }
        for i in 0..n {
            if self.inter[i][i] != 0 {
                issues.push(PatternIssue {
                    kind: IssueKind::NonzeroDiagonal,
                    location: self.curves[i].clone(),
                });
            }
            for j in 0..n {
                let x = self.inter[i][j];
                if i != j && x > 1 && i < j {
                    issues.push(PatternIssue {
                        kind: IssueKind::UnsupportedMultiplicity,
                        location: format!("({}, {}) = {x}", self.curves[i], self.curves[j]),
                    });
                }
                if i < j && x != self.inter[j][i] {
                    issues.push(PatternIssue {
                        kind: IssueKind::Asymmetric,
                        location: format!("({}, {})", self.curves[i], self.curves[j]),
                    });
                }
            }
            if (0..n).all(|j| j == i || (self.inter[i][j] == 0 && self.inter[j][i] == 0)) {
                issues.push(PatternIssue {
                    kind: IssueKind::IsolatedCurve,
                    location: self.curves[i].clone(),
                });
            }
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(issues)
        }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curves(&self) -> &[String] {
        &self.curves
    }

    pub fn label(&self, i: usize) -> &str {
        &self.curves[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.curves.iter().position(|c| c == label)
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.inter[i][j] != 0
    }

    pub fn intersection(&self, i: usize, j: usize) -> u8 {
        self.inter[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.len()).filter(|&j| self.meets(i, j)).count()
    }

    pub fn partners(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.meets(i, j)).collect()
    }

    /// Intersecting pairs `(i, j)`, `i < j`, in lexicographic order; the
    /// position in this list is the crossing id.
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.meets(i, j))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().len()
    }

    /// Connected components of the intersection graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in self.partners(i) {
                    if comp[j] == usize::MAX {
                        comp[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The sub-pattern on the given curves, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> CurvePattern {
        CurvePattern {
            curves: indices.iter().map(|&i| self.curves[i].clone()).collect(),
            inter: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.inter[i][j]).collect())
                .collect(),
        }
    }

    pub fn restrict_labels(&self, labels: &[&str]) -> Result<CurvePattern> {
        let idx = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown curve {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.restrict(&idx))
    }

    pub fn rename(&self, labels: Vec<String>) -> Result<CurvePattern> {
        if labels.len() != self.len() {
            return invalid("wrong number of labels");
        }
        Ok(CurvePattern {
            curves: labels,
            inter: self.inter.clone(),
        })
    }

    /// Disjoint union; labels of `other` must not clash.
    pub fn disjoint_union(&self, other: &CurvePattern) -> Result<CurvePattern> {
        let n = self.len();
        let m = other.len();
        let mut curves = self.curves.clone();
        curves.extend(other.curves.iter().cloned());
        let mut inter = vec![vec![0u8; n + m]; n + m];
        for (row, src) in inter.iter_mut().zip(&self.inter) {
            row[..n].copy_from_slice(src);
        }
        for (row, src) in inter[n..].iter_mut().zip(&other.inter) {
            row[n..].copy_from_slice(src);
        }
        CurvePattern::new(curves, inter)
    }

    /// `ceil(r / 2)` where `r` is the rank of the intersection matrix over
    /// the two-element field.
    pub fn f2_genus_lower_bound(&self) -> usize {
        let rows: Vec<u64> = self
            .inter
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |m, (j, &x)| m | (u64::from(x & 1) << j))
            })
            .collect();
        linalg::f2_rank(&rows).div_ceil(2)
    }

    pub fn to_json(&self) -> PatternJson {
        PatternJson {
            curves: self.curves.clone(),
            intersections: self
                .crossings()
                .into_iter()
                .map(|(i, j)| [self.curves[i].clone(), self.curves[j].clone()])
                .collect(),
        }
    }

    /// Parse the wire format. A pair listed twice counts as multiplicity 2
    /// and is rejected by validation.
    pub fn from_json(json: &PatternJson) -> Result<Self> {
        let raw = CurvePattern::from_json_unchecked(json)?;
        raw.validate().map_err(issues_error)?;
        Ok(raw)
    }

    /// Parse the wire format without validating the result; only unknown
    /// labels are errors.
    pub fn from_json_unchecked(json: &PatternJson) -> Result<Self> {
        let n = json.curves.len();
        if n > 64 {
            return invalid("at most 64 curves are supported");
        }
        let mut inter = vec![vec![0u8; n]; n];
        let find = |l: &str| -> Result<usize> {
            json.curves.iter().position(|c| c == l).ok_or_else(|| {
                Error::InvalidInput(format!("intersection names unknown curve {l:?}"))
            })
        };
        for [a, b] in &json.intersections {
            let (i, j) = (find(a)?, find(b)?);
            inter[i][j] = inter[i][j].saturating_add(1);
            if i != j {
                inter[j][i] = inter[j][i].saturating_add(1);
            }
        }
        Ok(CurvePattern::from_matrix_unchecked(
            json.curves.clone(),
            inter,
        ))
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        CurvePattern::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("pattern serializes")
    }
}

fn issues_error(issues: Vec<PatternIssue>) -> Error {
    Error::InvalidInput(
        issues
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; "),
    )
}

impl fmt::Debug for CurvePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .crossings()
            .iter()
            .map(|&(i, j)| format!("{}-{}", self.curves[i], self.curves[j]))
            .collect();
        write!(f, "CurvePattern({:?}; {})", self.curves, pairs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn pair() -> CurvePattern {
        CurvePattern::new(vec!["x".into(), "y".into()], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn twelve_curve_degrees() {
        let p = standard::twelve_curve_pattern();
        let degrees: Vec<(String, usize)> = (0..p.len())
            .map(|i| (p.label(i).to_string(), p.degree(i)))
            .collect();
        let expected = [
            ("a", 4),
            ("b", 3),
            ("c", 5),
            ("d", 4),
            ("e", 5),
            ("f", 3),
            ("g", 4),
            ("h", 2),
            ("u", 3),
            ("v", 3),
            ("w+", 6),
            ("w-", 6),
        ];
        for ((l, d), (el, ed)) in degrees.iter().zip(expected) {
            assert_eq!((l.as_str(), *d), (el, ed));
        }
        assert_eq!(p.crossing_count(), 24);
        let (u, v) = (p.index_of("u").unwrap(), p.index_of("v").unwrap());
        assert!(!p.meets(u, v));
        assert!(p.validate().is_ok());
    }

    #[test]
    fn cycle_is_a_cycle() {
        let p = standard::cycle8_pattern();
        assert!((0..8).all(|i| p.degree(i) == 2));
        assert_eq!(p.crossing_count(), 8);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let g = ArtinGraph::build(4).unwrap();
        let v: BitVertex = "0001".parse().unwrap();
        assert!(CurvePattern::from_vertices(&g, &[("a".into(), v), ("b".into(), v)]).is_err());
    }

    #[test]
    fn validation_issues() {
        let isolated = CurvePattern::from_matrix_unchecked(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]],
        );
        let issues = isolated.validate().unwrap_err();
        assert_eq!(issues.len(), 1);
        assert_eq!(issues[0].kind, IssueKind::IsolatedCurve);
        assert_eq!(issues[0].to_string(), "isolated curve at z");

        let double = CurvePattern::from_matrix_unchecked(
            vec!["x".into(), "y".into()],
            vec![vec![0, 2], vec![2, 0]],
        );
        assert_eq!(
            double.validate().unwrap_err()[0].kind,
            IssueKind::UnsupportedMultiplicity
        );

        let diag = CurvePattern::from_matrix_unchecked(
            vec!["x".into(), "y".into()],
            vec![vec![1, 1], vec![1, 0]],
        );
        assert!(diag
            .validate()
            .unwrap_err()
            .iter()
            .any(|i| i.kind == IssueKind::NonzeroDiagonal));

        let asym = CurvePattern::from_matrix_unchecked(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![0, 1, 1], vec![1, 0, 0], vec![0, 0, 0]],
        );
        assert!(asym
            .validate()
            .unwrap_err()
            .iter()
            .any(|i| i.kind == IssueKind::Asymmetric));
    }

    #[test]
    fn f2_bounds() {
        assert_eq!(pair().f2_genus_lower_bound(), 1);
        assert_eq!(standard::chain7_pattern().f2_genus_lower_bound(), 3);
        assert_eq!(standard::ten_curve_pattern().f2_genus_lower_bound(), 3);
        assert_eq!(standard::twelve_curve_pattern().f2_genus_lower_bound(), 4);
    }

    #[test]
    fn json_wire_format() {
        let p = pair();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(s, r#"{"curves":["x","y"],"intersections":[["x","y"]]}"#);
        assert_eq!(CurvePattern::from_json_str(&s).unwrap(), p);
        let twice = r#"{"curves":["x","y"],"intersections":[["x","y"],["y","x"]]}"#;
        assert!(CurvePattern::from_json_str(twice).is_err());
        let unknown = r#"{"curves":["x","y"],"intersections":[["x","q"]]}"#;
        assert!(CurvePattern::from_json_str(unknown).is_err());
    }

    #[test]
    fn components_and_union() {
        let p = pair();
        let q = p.rename(vec!["s".into(), "t".into()]).unwrap();
        let u = p.disjoint_union(&q).unwrap();
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!u.is_connected());
        assert_eq!(u.f2_genus_lower_bound(), 2);
    }
}
