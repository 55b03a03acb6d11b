//! Ribbon structures on a curve pattern and the surfaces they trace out.
//!
//! The union of the curves is a 4-valent graph whose vertices are the
//! crossings. A ribbon structure fixes, for every curve, the cyclic order in
//! which it visits its crossings, and for every crossing which of the two
//! alternating cyclic arrangements of its four half-edges is used. Boundary
//! components are traced as orbits of the face permutation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::pattern::CurvePattern;
use crate::error::{invalid, Result};

/// Half-edge slots at a crossing of curves `p < q`.
pub(crate) const P_OUT: usize = 0;
pub(crate) const P_IN: usize = 1;
pub(crate) const Q_OUT: usize = 2;
pub(crate) const Q_IN: usize = 3;

/// Cyclic arrangement of the four slots for each crossing bit:
/// bit 0 is `(p_out, q_out, p_in, q_in)`, bit 1 is `(p_out, q_in, p_in, q_out)`.
pub(crate) const ROTATION: [[usize; 4]; 2] =
    [[P_OUT, Q_OUT, P_IN, Q_IN], [P_OUT, Q_IN, P_IN, Q_OUT]];

/// Position of each slot inside [`ROTATION`].
pub(crate) const ROTATION_POS: [[usize; 4]; 2] = [[0, 2, 1, 3], [0, 2, 3, 1]];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RibbonStructure {
    /// For each curve, the partner curves in the order the curve visits them.
    pub visit_order: Vec<Vec<usize>>,
    /// One bit per crossing, indexed like [`CurvePattern::crossings`].
    pub crossing_bits: Vec<u8>,
}

impl RibbonStructure {
    /// Rotate every visit order to start at its lowest-indexed partner.
    pub fn canonical(&self) -> RibbonStructure {
        let visit_order = self
            .visit_order
            .iter()
            .map(|o| {
                let Some(start) = o.iter().enumerate().min_by_key(|(_, &p)| p).map(|(i, _)| i)
                else {
                    return Vec::new();
                };
                o[start..].iter().chain(&o[..start]).copied().collect()
            })
            .collect();
        RibbonStructure {
            visit_order,
            crossing_bits: self.crossing_bits.clone(),
        }
    }

    /// Mirror image: every visit order reversed, bits unchanged.
    pub fn reversed(&self) -> RibbonStructure {
        RibbonStructure {
            visit_order: self
                .visit_order
                .iter()
                .map(|o| o.iter().rev().copied().collect())
                .collect(),
            crossing_bits: self.crossing_bits.clone(),
        }
        .canonical()
    }

    pub fn check(&self, pattern: &CurvePattern) -> Result<()> {
        if self.visit_order.len() != pattern.len() {
            return invalid(format!(
                "structure has {} visit orders for {} curves",
                self.visit_order.len(),
                pattern.len()
            ));
        }
        if self.crossing_bits.len() != pattern.crossing_count() {
            return invalid(format!(
                "structure has {} crossing bits for {} crossings",
                self.crossing_bits.len(),
                pattern.crossing_count()
            ));
        }
        if self.crossing_bits.iter().any(|&b| b > 1) {
            return invalid("crossing bits must be 0 or 1");
        }
        for (x, order) in self.visit_order.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != pattern.partners(x) {
                return invalid(format!(
                    "visit order of {} is not a permutation of its crossings",
                    pattern.label(x)
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self, pattern: &CurvePattern) -> WitnessJson {
        let visit_orders = self
            .visit_order
            .iter()
            .enumerate()
            .map(|(x, o)| {
                (
                    pattern.label(x).to_string(),
                    o.iter().map(|&y| pattern.label(y).to_string()).collect(),
                )
            })
            .collect();
        let crossing_bits = pattern
            .crossings()
            .iter()
            .zip(&self.crossing_bits)
            .map(|(&(p, q), &bit)| CrossingBit {
                pair: [pattern.label(p).into(), pattern.label(q).into()],
                bit,
            })
            .collect();
        WitnessJson {
            curves: pattern.curves().to_vec(),
            visit_orders,
            crossing_bits,
        }
    }

    pub fn from_json(pattern: &CurvePattern, json: &WitnessJson) -> Result<Self> {
        let idx = |l: &str| {
            pattern
                .index_of(l)
                .ok_or_else(|| crate::Error::InvalidInput(format!("unknown curve {l}")))
        };
        let mut visit_order = vec![Vec::new(); pattern.len()];
        for (label, order) in &json.visit_orders {
            visit_order[idx(label)?] = order.iter().map(|l| idx(l)).collect::<Result<_>>()?;
        }
        let crossings = pattern.crossings();
        let mut crossing_bits = vec![0u8; crossings.len()];
        for cb in &json.crossing_bits {
            let (a, b) = (idx(&cb.pair[0])?, idx(&cb.pair[1])?);
            let key = (a.min(b), a.max(b));
            let Some(c) = crossings.iter().position(|&x| x == key) else {
                return invalid(format!("{} and {} do not cross", cb.pair[0], cb.pair[1]));
            };
            crossing_bits[c] = cb.bit;
        }
        let s = RibbonStructure {
            visit_order,
            crossing_bits,
        };
        s.check(pattern)?;
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingBit {
    pub pair: [String; 2],
    pub bit: u8,
}

/// Wire format for a ribbon structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub curves: Vec<String>,
    pub visit_orders: BTreeMap<String, Vec<String>>,
    pub crossing_bits: Vec<CrossingBit>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub euler_char: i64,
    pub boundary_count: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonSurface {
    pub components: Vec<SurfaceComponent>,
}

impl RibbonSurface {
    pub fn genus(&self) -> usize {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn boundary_count(&self) -> usize {
        self.components.iter().map(|c| c.boundary_count).sum()
    }

    pub fn euler_char(&self) -> i64 {
        self.components.iter().map(|c| c.euler_char).sum()
    }
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Trace the surface of a complete ribbon structure.
pub fn surface_of(pattern: &CurvePattern, structure: &RibbonStructure) -> Result<RibbonSurface> {
    structure.check(pattern)?;
    let crossings = pattern.crossings();
    let n = pattern.len();
    let mut cid = vec![vec![usize::MAX; n]; n];
    for (c, &(p, q)) in crossings.iter().enumerate() {
        cid[p][q] = c;
        cid[q][p] = c;
    }
    let slot = |x: usize, c: usize, out: bool| -> usize {
        let base = if crossings[c].0 == x { P_OUT } else { Q_OUT };
        4 * c + base + usize::from(!out)
    };
    let ndarts = 4 * crossings.len();
    let mut alpha = vec![usize::MAX; ndarts];
    let mut parent: Vec<usize> = (0..crossings.len()).collect();
    for (x, order) in structure.visit_order.iter().enumerate() {
        let d = order.len();
        for t in 0..d {
            let c = cid[x][order[t]];
            let c2 = cid[x][order[(t + 1) % d]];
            let (a, b) = (slot(x, c, true), slot(x, c2, false));
            alpha[a] = b;
            alpha[b] = a;
            let (ra, rb) = (find(&mut parent, c), find(&mut parent, c2));
            parent[ra] = rb;
        }
    }
    let sigma = |d: usize| -> usize {
        let c = d / 4;
        let bit = usize::from(structure.crossing_bits[c]);
        let pos = ROTATION_POS[bit][d % 4];
        4 * c + ROTATION[bit][(pos + 1) % 4]
    };
    let mut seen = vec![false; ndarts];
    // per component root: (vertices, edges, faces)
    let mut stats: BTreeMap<usize, (i64, i64, usize)> = BTreeMap::new();
    for c in 0..crossings.len() {
        let r = find(&mut parent, c);
        let e = stats.entry(r).or_default();
        e.0 += 1;
        e.1 += 2;
    }
    for start in 0..ndarts {
        if seen[start] {
            continue;
        }
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma(alpha[d]);
        }
        let r = find(&mut parent, start / 4);
        stats.get_mut(&r).expect("component").2 += 1;
    }
    let components = stats
        .values()
        .map(|&(v, e, f)| {
            let euler_char = v - e;
            let genus = (2 - euler_char - f as i64) / 2;
            SurfaceComponent {
                euler_char,
                boundary_count: f,
                genus: genus as usize,
            }
        })
        .collect();
    Ok(RibbonSurface { components })
}
