//! Named vertices and curve configurations used throughout the toolkit.

use crate::artin_graph::{ArtinGraph, BitVertex};
use crate::curves::{ArcConstraint, CurvePattern};
use crate::error::Result;

/// The induced 7-vertex chain carrying the `Br_8` generators.
pub const BRAID_CHAIN: [&str; 7] = ["0001", "0101", "0100", "0110", "0010", "1010", "1000"];

/// The vertex closing the chain into an induced 8-cycle.
pub const AFFINE_CLOSER: &str = "1001";

/// Curve labels and their vertices, in the default insertion order.
pub const CURVE_LABELS: [(&str, &str); 12] = [
    ("a", "0001"),
    ("b", "0101"),
    ("c", "0100"),
    ("d", "0110"),
    ("e", "0010"),
    ("f", "1010"),
    ("g", "1000"),
    ("h", "1001"),
    ("u", "0011"),
    ("v", "1100"),
    ("w+", "0111"),
    ("w-", "1110"),
];

pub fn braid_chain() -> Vec<BitVertex> {
    BRAID_CHAIN
        .iter()
        .map(|s| s.parse().expect("valid vertex"))
        .collect()
}

pub fn affine_cycle() -> Vec<BitVertex> {
    let mut c = braid_chain();
    c.push(AFFINE_CLOSER.parse().expect("valid vertex"));
    c
}

/// Labelled vertices for the given curve names.
pub fn labelled(names: &[&str]) -> Vec<(String, BitVertex)> {
    names
        .iter()
        .map(|n| {
            let (_, bits) = CURVE_LABELS
                .iter()
                .find(|(l, _)| l == n)
                .expect("known curve label");
            (n.to_string(), bits.parse().expect("valid vertex"))
        })
        .collect()
}

fn pattern(names: &[&str]) -> Result<CurvePattern> {
    let g = ArtinGraph::build(4)?;
    CurvePattern::from_vertices(&g, &labelled(names))
}

pub const CHAIN7: [&str; 7] = ["a", "b", "c", "d", "e", "f", "g"];
pub const CYCLE8: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
pub const TEN: [&str; 10] = ["a", "b", "c", "d", "e", "f", "g", "h", "u", "v"];
pub const ELEVEN: [&str; 11] = ["a", "b", "c", "d", "e", "f", "g", "h", "u", "v", "w+"];
pub const TWELVE: [&str; 12] = ["a", "b", "c", "d", "e", "f", "g", "h", "u", "v", "w+", "w-"];

pub fn chain7_pattern() -> CurvePattern {
    pattern(&CHAIN7).expect("chain pattern")
}

pub fn cycle8_pattern() -> CurvePattern {
    pattern(&CYCLE8).expect("cycle pattern")
}

pub fn ten_curve_pattern() -> CurvePattern {
    pattern(&TEN).expect("ten-curve pattern")
}

pub fn eleven_curve_pattern() -> CurvePattern {
    pattern(&ELEVEN).expect("eleven-curve pattern")
}

pub fn twelve_curve_pattern() -> CurvePattern {
    pattern(&TWELVE).expect("twelve-curve pattern")
}

/// The two ways `u` can cross `a`: on either arc of `a` cut at its
/// crossings with `b` and `h`.
pub fn u_placements() -> [ArcConstraint; 2] {
    [
        ArcConstraint::new("a", "b", "h", "u"),
        ArcConstraint::new("a", "h", "b", "u"),
    ]
}

/// Bundled pattern files, as shipped in `data/`.
pub const BUNDLED: [(&str, &str); 4] = [
    ("chain7", include_str!("../data/chain7.json")),
    ("cycle8", include_str!("../data/cycle8.json")),
    ("ten", include_str!("../data/ten.json")),
    ("twelve", include_str!("../data/twelve.json")),
];

pub fn bundled(name: &str) -> Option<Result<CurvePattern>> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| CurvePattern::from_json_str(s))
}
