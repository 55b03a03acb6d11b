//! The Artin graph on bit-tuples.
//!
//! Vertices are the `2^k` tuples in `{0,1}^k`, listed lexicographically; two
//! distinct tuples are joined exactly when they are comparable in the
//! coordinatewise order (no pair of coordinates where one tuple reads `(0,1)`
//! and the other `(1,0)`).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub const MAX_K: u8 = 8;

/// Index set, 1-based into the braid chain, searched for a commuting partner.
pub const DEFAULT_WITNESS_INDICES: [usize; 6] = [1, 3, 4, 5, 6, 7];

/// A tuple in `{0,1}^k`, stored with the first coordinate as the most
/// significant bit so that integer order is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVertex {
    k: u8,
    code: u16,
}

impl BitVertex {
    pub fn new(k: u8, code: u16) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return invalid(format!("k must be in 1..={MAX_K}, got {k}"));
        }
        if u32::from(code) >= 1u32 << k {
            return invalid(format!("code {code} out of range for k={k}"));
        }
        Ok(BitVertex { k, code })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let k =
            u8::try_from(bits.len()).map_err(|_| Error::InvalidInput("too many bits".into()))?;
        let mut code = 0u16;
        for &b in bits {
            if b > 1 {
                return invalid(format!("bit value {b} is not 0 or 1"));
            }
            code = (code << 1) | u16::from(b);
        }
        BitVertex::new(k, code)
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    /// Position of this vertex in the lexicographic vertex list.
    pub fn index(&self) -> usize {
        usize::from(self.code)
    }

    pub fn bit(&self, coord: usize) -> u8 {
        ((self.code >> (usize::from(self.k) - 1 - coord)) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..usize::from(self.k)).map(|c| self.bit(c)).collect()
    }

    pub fn is_all_zeros(&self) -> bool {
        self.code == 0
    }

    pub fn is_all_ones(&self) -> bool {
        u32::from(self.code) == (1u32 << self.k) - 1
    }

    /// Coordinatewise `self <= other`.
    pub fn below(&self, other: &BitVertex) -> bool {
        self.code & other.code == self.code
    }

    pub fn comparable(&self, other: &BitVertex) -> bool {
        self.below(other) || other.below(self)
    }

    /// The literal sign rule: no two coordinates whose differences have
    /// opposite signs. Kept separate from [`BitVertex::comparable`] so the two
    /// can be checked against each other.
    pub fn no_opposite_pair(&self, other: &BitVertex) -> bool {
        let diffs: Vec<i32> = (0..usize::from(self.k))
            .map(|c| i32::from(self.bit(c)) - i32::from(other.bit(c)))
            .collect();
        diffs.iter().all(|a| diffs.iter().all(|b| a * b >= 0))
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 0..usize::from(self.k) {
            write!(f, "{}", self.bit(c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for BitVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bits = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => invalid(format!("unexpected character {other:?} in bit vertex")),
            })
            .collect::<Result<Vec<u8>>>()?;
        if bits.is_empty() {
            return invalid("empty bit vertex");
        }
        BitVertex::from_bits(&bits)
    }
}

impl Serialize for BitVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse a comma-separated list such as `0001,0101,0100`.
pub fn parse_vertex_list(s: &str) -> Result<Vec<BitVertex>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationReason {
    MissingEdge,
    Chord,
    Repeat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainViolation {
    pub i: usize,
    pub j: usize,
    pub reason: ViolationReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub sequence: Vec<BitVertex>,
    pub is_chain: bool,
    pub violations: Vec<ChainViolation>,
}

/// The graph on `{0,1}^k`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinGraph {
    k: u8,
    vertices: Vec<BitVertex>,
    adjacency: Vec<Vec<bool>>,
}

impl ArtinGraph {
    pub fn build(k: u8) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return invalid(format!("k must be in 1..={MAX_K}, got {k}"));
        }
        let n = 1usize << k;
        let vertices: Vec<BitVertex> = (0..n).map(|c| BitVertex { k, code: c as u16 }).collect();
        let adjacency = vertices
            .iter()
            .map(|u| vertices.iter().map(|v| u != v && u.comparable(v)).collect())
            .collect();
        Ok(ArtinGraph {
            k,
            vertices,
            adjacency,
        })
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn vertices(&self) -> &[BitVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, index: usize) -> BitVertex {
        self.vertices[index]
    }

    fn check(&self, v: &BitVertex) -> Result<()> {
        if v.k != self.k {
            return invalid(format!(
                "vertex {v} has dimension {}, graph has k={}",
                v.k, self.k
            ));
        }
        Ok(())
    }

    pub fn is_edge(&self, u: &BitVertex, v: &BitVertex) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacent(u.index(), v.index()))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&b| b).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
    }

    /// Unordered edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Triangles `(i, j, l)` with `i < j < l`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, j) in self.edges() {
            for l in j + 1..self.len() {
                if self.adjacent(i, l) && self.adjacent(j, l) {
                    out.push((i, j, l));
                }
            }
        }
        out
    }

    /// Vertices adjacent to every other vertex.
    pub fn extremal_vertices(&self) -> BTreeSet<BitVertex> {
        let n = self.len();
        (0..n)
            .filter(|&i| self.degree(i) == n - 1)
            .map(|i| self.vertices[i])
            .collect()
    }

    pub fn is_extremal(&self, v: &BitVertex) -> Result<bool> {
        self.check(v)?;
        Ok(self.degree(v.index()) == self.len() - 1)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn verify_chain(&self, seq: &[BitVertex]) -> Result<ChainReport> {
        for v in seq {
            self.check(v)?;
        }
        let mut violations = Vec::new();
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                let reason = if seq[i] == seq[j] {
                    Some(ViolationReason::Repeat)
                } else {
                    let edge = self.adjacent(seq[i].index(), seq[j].index());
                    match (j == i + 1, edge) {
                        (true, false) => Some(ViolationReason::MissingEdge),
                        (false, true) => Some(ViolationReason::Chord),
                        _ => None,
                    }
                };
                if let Some(reason) = reason {
                    violations.push(ChainViolation { i, j, reason });
                }
            }
        }
        Ok(ChainReport {
            sequence: seq.to_vec(),
            is_chain: violations.is_empty(),
            violations,
        })
    }

    /// Whether `seq`, read cyclically, is a cycle spanning no further edges.
    pub fn verify_induced_cycle(&self, seq: &[BitVertex]) -> Result<bool> {
        if seq.len() < 3 {
            return invalid("an induced cycle needs at least 3 vertices");
        }
        for v in seq {
            self.check(v)?;
        }
        let n = seq.len();
        for i in 0..n {
            for j in i + 1..n {
                if seq[i] == seq[j] {
                    return invalid(format!("vertex {} repeated in cycle", seq[i]));
                }
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if self.adjacent(seq[i].index(), seq[j].index()) != consecutive {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All induced paths with `length` vertices, each listed once with its
    /// first vertex lexicographically before its last, sorted.
    pub fn enumerate_induced_paths(
        &self,
        length: usize,
        avoid_extremal: bool,
    ) -> Vec<Vec<BitVertex>> {
        if length == 0 {
            return Vec::new();
        }
        let n = self.len();
        let allowed: Vec<bool> = (0..n)
            .map(|i| !(avoid_extremal && self.degree(i) == n - 1))
            .collect();
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(length);
        for start in (0..n).filter(|&i| allowed[i]) {
            path.push(start);
            self.extend_induced(&mut path, length, &allowed, &mut out);
            path.pop();
        }
        out.sort();
        out.into_iter()
            .map(|p| p.into_iter().map(|i| self.vertices[i]).collect())
            .collect()
    }

    fn extend_induced(
        &self,
        path: &mut Vec<usize>,
        length: usize,
        allowed: &[bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == length {
            if path[0] <= path[path.len() - 1] {
                out.push(path.clone());
            }
            return;
        }
        let last = *path.last().unwrap();
        for next in self.neighbors(last) {
            if !allowed[next] || path.contains(&next) {
                continue;
            }
            let chord = path[..path.len() - 1]
                .iter()
                .any(|&p| self.adjacent(p, next));
            if chord {
                continue;
            }
            path.push(next);
            self.extend_induced(path, length, allowed, out);
            path.pop();
        }
    }

    /// Smallest 1-based index `i` in `indices` such that `chain[i]` is a
    /// different vertex not adjacent to `v`.
    pub fn commuting_partner_witness_in(
        &self,
        chain: &[BitVertex],
        v: &BitVertex,
        indices: &[usize],
    ) -> Result<Option<usize>> {
        self.check(v)?;
        for w in chain {
            self.check(w)?;
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        Ok(sorted.into_iter().find(|&i| {
            (1..=chain.len()).contains(&i) && {
                let w = chain[i - 1];
                w != *v && !self.adjacent(w.index(), v.index())
            }
        }))
    }

    pub fn commuting_partner_witness(
        &self,
        chain: &[BitVertex],
        v: &BitVertex,
    ) -> Result<Option<usize>> {
        self.commuting_partner_witness_in(chain, v, &DEFAULT_WITNESS_INDICES)
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph gamma_k{} {{\n", self.k);
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
        }
        for (i, j) in self.edges() {
            s.push_str(&format!("  v{i} -- v{j};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            k: self.k,
            vertices: self.vertices.iter().map(ToString::to_string).collect(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    /// Rebuild from an export, checking that it is exactly the graph for its `k`.
    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let g = ArtinGraph::build(json.k)?;
        if g.to_json() != *json {
            return invalid("graph JSON does not match the comparability graph for its k");
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub k: u8,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{affine_cycle, braid_chain};

    fn v(s: &str) -> BitVertex {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(v("0101").to_string(), "0101");
        assert_eq!(v("(0,1,0,1)"), v("0101"));
        assert_eq!(v("0101").bits(), vec![0, 1, 0, 1]);
        assert!("012".parse::<BitVertex>().is_err());
        assert!(v("0011") < v("0100"));
    }

    #[test]
    fn small_graphs() {
        let g1 = ArtinGraph::build(1).unwrap();
        assert_eq!((g1.len(), g1.edge_count()), (2, 1));
        assert!(ArtinGraph::build(0).is_err());
        assert!(ArtinGraph::build(9).is_err());
    }

    #[test]
    fn edge_examples() {
        let g = ArtinGraph::build(4).unwrap();
        assert!(g.is_edge(&v("0000"), &v("0110")).unwrap());
        assert!(!g.is_edge(&v("0100"), &v("1010")).unwrap());
        assert!(g.is_edge(&v("0001"), &v("0101")).unwrap());
        assert!(g.is_edge(&v("0001"), &v("011")).is_err());
    }

    #[test]
    fn extremal() {
        let g = ArtinGraph::build(4).unwrap();
        let ext: Vec<String> = g
            .extremal_vertices()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(ext, vec!["0000", "1111"]);
        assert!(!g.is_extremal(&v("0001")).unwrap());
        let g3 = ArtinGraph::build(3).unwrap();
        assert_eq!(g3.extremal_vertices().len(), 2);
    }

    #[test]
    fn chains_and_cycles() {
        let g = ArtinGraph::build(4).unwrap();
        assert!(g.verify_chain(&braid_chain()).unwrap().is_chain);
        let bad = g.verify_chain(&[v("0000"), v("0001"), v("0011")]).unwrap();
        assert!(!bad.is_chain);
        assert_eq!(
            bad.violations,
            vec![ChainViolation {
                i: 0,
                j: 2,
                reason: ViolationReason::Chord
            }]
        );
        assert!(g.verify_chain(&[v("0001")]).unwrap().is_chain);
        let rep = g.verify_chain(&[v("0001"), v("0101"), v("0001")]).unwrap();
        assert!(rep
            .violations
            .iter()
            .any(|x| x.reason == ViolationReason::Repeat));
        let gap = g.verify_chain(&[v("0100"), v("1010")]).unwrap();
        assert_eq!(gap.violations[0].reason, ViolationReason::MissingEdge);

        assert!(g.verify_induced_cycle(&affine_cycle()).unwrap());
        assert!(g
            .verify_induced_cycle(&[v("0000"), v("0001"), v("0011")])
            .unwrap());
        assert!(!g
            .verify_induced_cycle(&[v("0000"), v("0001"), v("0101"), v("0100")])
            .unwrap());
        assert!(g.verify_induced_cycle(&[v("0000"), v("0001")]).is_err());
    }

    #[test]
    fn witness_examples() {
        let g = ArtinGraph::build(4).unwrap();
        let chain = braid_chain();
        assert_eq!(
            g.commuting_partner_witness(&chain, &v("0011")).unwrap(),
            Some(3)
        );
        assert_eq!(
            g.commuting_partner_witness(&chain, &v("0111")).unwrap(),
            Some(6)
        );
        assert_eq!(
            g.commuting_partner_witness(&chain, &v("0000")).unwrap(),
            None
        );
        assert_eq!(
            g.commuting_partner_witness(&chain, &v("1111")).unwrap(),
            None
        );
    }

    #[test]
    fn induced_path_examples() {
        let g1 = ArtinGraph::build(1).unwrap();
        assert_eq!(
            g1.enumerate_induced_paths(2, false),
            vec![vec![v("0"), v("1")]]
        );
        let g = ArtinGraph::build(4).unwrap();
        assert!(g.enumerate_induced_paths(7, true).contains(&braid_chain()));
        assert!(g.enumerate_induced_paths(16, false).is_empty());
    }

    #[test]
    fn json_roundtrip() {
        let g = ArtinGraph::build(3).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(ArtinGraph::from_json(&back).unwrap(), g);
        assert!(g.to_dot().contains("v0 -- v7;"));
    }
}
