//! Transvection representation of the Artin group on the rank-10 quotient.
//!
//! Each vertex `v` acts by `x -> x + s <x, a_v> a_v` where `a_v` is the class
//! of the vanishing cycle and `s = +1` (positive twists) or `s = -1`.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::artin_graph::{ArtinGraph, BitVertex};
use crate::error::{invalid, Error, Result};
use crate::linalg::{self, Matrix};
use crate::milnor_lattice::QuotientLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Positive, Sign::Negative];
}

/// Integer matrix preserving the quotient form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpMatrix {
    pub entries: Matrix,
    /// Word in vertex generators this matrix came from, if known.
    pub word: Option<Vec<BitVertex>>,
}

impl SpMatrix {
    /// Checks `M^T G M = G` before accepting the matrix.
    pub fn new(entries: Matrix, gram: &Matrix, word: Option<Vec<BitVertex>>) -> Result<Self> {
        if !preserves_form(&entries, gram)? {
            return invalid("matrix does not preserve the symplectic form");
        }
        Ok(SpMatrix { entries, word })
    }

    pub fn mul(&self, rhs: &SpMatrix) -> SpMatrix {
        let entries = self
            .entries
            .checked_mul(&rhs.entries)
            .expect("overflow in symplectic product");
        let word = match (&self.word, &rhs.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        SpMatrix { entries, word }
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    fn deviation(&self) -> Matrix {
        self.entries
            .checked_sub(&Matrix::identity(self.dim()))
            .expect("square matrix")
    }

    /// Rank of `M - I`.
    pub fn deviation_rank(&self) -> usize {
        self.deviation().rank()
    }

    pub fn fixed_space_dim(&self) -> usize {
        self.dim() - self.deviation_rank()
    }

    /// `(M - I)^2 = 0`.
    pub fn is_unipotent_of_order_two(&self) -> bool {
        let d = self.deviation();
        d.checked_mul(&d).map(|m| m.is_zero()).unwrap_or(false)
    }

    /// Primitive generator of the image of `M - I`, when that image has rank 1.
    pub fn direction(&self) -> Option<Vec<i64>> {
        if self.deviation_rank() != 1 {
            return None;
        }
        let d = self.deviation();
        // rank 1: every nonzero column is a multiple of the direction
        let col = (0..d.cols())
            .map(|j| d.column(j))
            .find(|c| c.iter().any(|&x| x != 0))?;
        let c = linalg::content(&col);
        let mut dir: Vec<i64> = col.iter().map(|x| x / c).collect();
        if dir.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            dir.iter_mut().for_each(|x| *x = -*x);
        }
        Some(dir)
    }
}

pub fn preserves_form(m: &Matrix, gram: &Matrix) -> Result<bool> {
    Ok(m.transpose().checked_mul(gram)?.checked_mul(m)? == *gram)
}

fn transvection_along(q: &QuotientLattice, a: &[i64], sign: Sign) -> Result<Matrix> {
    // x -> x + s <x, a> a, where <x, a> = x . (G a)
    let ga = q.induced_gram.mul_vec(a)?;
    let n = q.rank;
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let delta = sign
                .value()
                .checked_mul(a[i])
                .and_then(|x| x.checked_mul(ga[j]))
                .ok_or(Error::Overflow("transvection"))?;
            m[(i, j)] += delta;
        }
    }
    Ok(m)
}

pub fn transvection(q: &QuotientLattice, v: &BitVertex, sign: Sign) -> Result<SpMatrix> {
    let a = q.class_of(v)?.to_vec();
    let m = transvection_along(q, &a, sign)?;
    SpMatrix::new(m, &q.induced_gram, Some(vec![*v]))
}

/// Inverse transvection: the same map with the opposite sign.
fn inverse_transvection(q: &QuotientLattice, v: &BitVertex, sign: Sign) -> Result<SpMatrix> {
    let opposite = match sign {
        Sign::Positive => Sign::Negative,
        Sign::Negative => Sign::Positive,
    };
    let mut t = transvection(q, v, opposite)?;
    t.word = None;
    Ok(t)
}

/// `ABA = BAB` when `expect_braid`, else `AB = BA`.
pub fn verify_pair_relation(a: &SpMatrix, b: &SpMatrix, expect_braid: bool) -> bool {
    if expect_braid {
        a.mul(b).mul(a).entries == b.mul(a).mul(b).entries
    } else {
        a.mul(b).entries == b.mul(a).entries
    }
}

/// The 4-letter triangle identity `uvwu = vwuv`.
pub fn verify_triangle(u: &SpMatrix, v: &SpMatrix, w: &SpMatrix) -> bool {
    u.mul(v).mul(w).mul(u).entries == v.mul(w).mul(u).mul(v).entries
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub vertices: Vec<BitVertex>,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub sign: Sign,
    pub pairs_checked: usize,
    pub braid_pairs: usize,
    pub commuting_pairs: usize,
    pub triangles_checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn transvections(q: &QuotientLattice, g: &ArtinGraph, sign: Sign) -> Result<Vec<SpMatrix>> {
    g.vertices()
        .iter()
        .map(|v| transvection(q, v, sign))
        .collect()
}

/// Checks every vertex pair (braid on edges, commute on non-edges) and the
/// triangle identity on every triangle of the graph.
///
/// The triangle identity is orientation-sensitive: for a triangle `u < v < w`
/// in lexicographic order, positive twists satisfy it as `T_w T_v T_u T_w =
/// T_v T_u T_w T_v` and negative twists in the opposite orientation.
pub fn verify_all_relations(
    q: &QuotientLattice,
    g: &ArtinGraph,
    sign: Sign,
) -> Result<RelationReport> {
    let ts = transvections(q, g, sign)?;
    let n = g.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut failures: Vec<RelationFailure> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let edge = g.adjacent(i, j);
            (!verify_pair_relation(&ts[i], &ts[j], edge)).then(|| RelationFailure {
                vertices: vec![g.vertex(i), g.vertex(j)],
                relation: if edge {
                    "braid".into()
                } else {
                    "commute".into()
                },
            })
        })
        .collect();
    let triangles = g.triangles();
    failures.extend(
        triangles
            .par_iter()
            .filter_map(|&(i, j, l)| {
                let holds = match sign {
                    Sign::Positive => verify_triangle(&ts[l], &ts[j], &ts[i]),
                    Sign::Negative => verify_triangle(&ts[i], &ts[j], &ts[l]),
                };
                (!holds).then(|| RelationFailure {
                    vertices: vec![g.vertex(i), g.vertex(j), g.vertex(l)],
                    relation: "triangle".into(),
                })
            })
            .collect::<Vec<_>>(),
    );
    let braid_pairs = g.edge_count();
    Ok(RelationReport {
        sign,
        pairs_checked: pairs.len(),
        braid_pairs,
        commuting_pairs: pairs.len() - braid_pairs,
        triangles_checked: triangles.len(),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyWitness {
    pub vertex: BitVertex,
    /// Conjugating word `w` with `w T_root w^{-1} = T_vertex`.
    pub word: Vec<BitVertex>,
    pub verified: bool,
}

fn word_matrix(q: &QuotientLattice, word: &[BitVertex], sign: Sign) -> Result<(Matrix, Matrix)> {
    let n = q.rank;
    let mut m = Matrix::identity(n);
    let mut inv = Matrix::identity(n);
    for v in word {
        m = m.checked_mul(&transvection(q, v, sign)?.entries)?;
        inv = inverse_transvection(q, v, sign)?
            .entries
            .checked_mul(&inv)?;
    }
    Ok((m, inv))
}

/// Spanning-tree conjugacy certificates from the all-zeros vertex.
///
/// Along a tree edge `u -> v` the braid relation gives
/// `(T_u T_v) T_u (T_u T_v)^{-1} = T_v`, so the word for `v` is `[u, v]`
/// followed by the word for `u`.
pub fn conjugacy_witnesses(
    q: &QuotientLattice,
    g: &ArtinGraph,
    sign: Sign,
) -> Result<Vec<ConjugacyWitness>> {
    if !g.is_connected() {
        return invalid("graph is not connected");
    }
    let root = 0usize;
    let mut words: Vec<Option<Vec<BitVertex>>> = vec![None; g.len()];
    words[root] = Some(Vec::new());
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if words[v].is_none() {
                let mut w = vec![g.vertex(u), g.vertex(v)];
                w.extend(words[u].as_ref().unwrap());
                words[v] = Some(w);
                queue.push_back(v);
            }
        }
    }
    let t_root = transvection(q, &g.vertex(root), sign)?.entries;
    words
        .into_iter()
        .enumerate()
        .map(|(i, word)| {
            let word = word.expect("connected graph");
            let (m, inv) = word_matrix(q, &word, sign)?;
            let conj = m.checked_mul(&t_root)?.checked_mul(&inv)?;
            let target = transvection(q, &g.vertex(i), sign)?.entries;
            Ok(ConjugacyWitness {
                vertex: g.vertex(i),
                word,
                verified: conj == target,
            })
        })
        .collect()
}

/// A quadratic refinement of the mod-2 quotient form, as a truth table over
/// the `2^rank` vectors (bit `i` of the index is coordinate `i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticRefinement {
    pub rank: usize,
    pub values: Vec<u8>,
}

fn to_mask(v: &[i64]) -> u32 {
    v.iter()
        .enumerate()
        .fold(0, |m, (i, &x)| m | (((x.rem_euclid(2)) as u32) << i))
}

fn form_mod2(q: &QuotientLattice) -> Vec<u32> {
    // row i as a mask: bit j set when <e_i, e_j> is odd
    (0..q.rank)
        .map(|i| to_mask(q.induced_gram.row(i)))
        .collect()
}

fn pair_mod2(form: &[u32], x: u32, y: u32) -> u8 {
    let mut acc = 0u32;
    for (i, row) in form.iter().enumerate() {
        if x >> i & 1 == 1 {
            acc ^= (row & y).count_ones() & 1;
        }
    }
    acc as u8
}

impl QuadraticRefinement {
    pub fn value(&self, x: u32) -> u8 {
        self.values[x as usize]
    }

    pub fn value_of(&self, v: &[i64]) -> u8 {
        self.value(to_mask(v))
    }

    /// `q(x+y) = q(x) + q(y) + <x,y>` for all pairs.
    pub fn satisfies_identity(&self, q: &QuotientLattice) -> bool {
        let form = form_mod2(q);
        let size = 1u32 << self.rank;
        (0..size).into_par_iter().all(|x| {
            (0..size).all(|y| {
                self.value(x ^ y) == self.value(x) ^ self.value(y) ^ pair_mod2(&form, x, y)
            })
        })
    }

    /// `q(T x) = q(x)` for every mod-2 vector.
    pub fn invariant_under(&self, t: &SpMatrix) -> bool {
        let n = self.rank;
        let cols: Vec<u32> = (0..n).map(|j| to_mask(&t.entries.column(j))).collect();
        (0..1u32 << n).all(|x| {
            let image = (0..n)
                .filter(|&j| x >> j & 1 == 1)
                .fold(0, |acc, j| acc ^ cols[j]);
            self.value(image) == self.value(x)
        })
    }
}

/// Builds `q` with `q = 1` on a basis of vanishing-cycle classes and checks
/// that every vanishing cycle then gets value 1.
pub fn quadratic_refinement(q: &QuotientLattice) -> Result<QuadraticRefinement> {
    let n = q.rank;
    if n > 20 {
        return invalid("quotient too large for a truth table");
    }
    let form = form_mod2(q);
    // greedy F2 basis from the class list, in vertex order
    let mut basis: Vec<u32> = Vec::new();
    let mut reduced: Vec<u32> = Vec::new();
    for class in &q.class_map {
        let m = to_mask(class);
        let mut x = m;
        for &r in &reduced {
            x = x.min(x ^ r);
        }
        if x != 0 {
            basis.push(m);
            reduced.push(x);
            reduced.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    if basis.len() != n {
        return Err(Error::ConstructionFailed(format!(
            "vanishing classes span only {} of {n} dimensions mod 2",
            basis.len()
        )));
    }
    // Walk the span of the basis: value(sum of subset) by the quadratic rule.
    let size = 1usize << n;
    let mut values = vec![u8::MAX; size];
    for subset in 0..size {
        let mut x = 0u32;
        let mut val = 0u8;
        let members: Vec<u32> = (0..n)
            .filter(|&i| subset >> i & 1 == 1)
            .map(|i| basis[i])
            .collect();
        for (a, &bi) in members.iter().enumerate() {
            x ^= bi;
            val ^= 1;
            for &bj in &members[a + 1..] {
                val ^= pair_mod2(&form, bi, bj);
            }
        }
        values[x as usize] = val;
    }
    debug_assert!(values.iter().all(|&v| v <= 1));
    let qr = QuadraticRefinement { rank: n, values };
    for (i, class) in q.class_map.iter().enumerate() {
        if qr.value_of(class) != 1 {
            return Err(Error::ConstructionFailed(format!(
                "vanishing class {i} gets value 0 under the refinement"
            )));
        }
    }
    Ok(qr)
}

/// Dimension of the smallest rational subspace containing `seeds` and
/// invariant under every transvection of the graph.
pub fn invariant_span_closure(
    q: &QuotientLattice,
    g: &ArtinGraph,
    seeds: &[Vec<i64>],
    sign: Sign,
) -> Result<usize> {
    let ts = transvections(q, g, sign)?;
    let mut span: Vec<Vec<i64>> = seeds
        .iter()
        .filter(|s| s.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut dim = linalg::rank(&span);
    loop {
        let mut grown = span.clone();
        for t in &ts {
            for x in &span {
                grown.push(t.entries.mul_vec(x)?);
            }
        }
        // keep a Hermite basis so the working set stays small
        let basis = linalg::row_hnf(&grown)?;
        let new_dim = basis.len();
        if new_dim == dim {
            return Ok(dim);
        }
        dim = new_dim;
        span = basis;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCheck {
    pub nonzero: bool,
    pub parity: u8,
    /// `<a_(0111), a_(1010)>`, expected zero.
    pub support_pairing: i64,
}

/// `s = a_(0001) + a_(0100) + a_(0010) + a_(1000)` (odd-position chain
/// classes): whether `s` is nonzero and the parity of `<a_(0111), s>`.
pub fn chain_parity_check(q: &QuotientLattice) -> Result<ParityCheck> {
    if q.k != 4 {
        return invalid("the parity check is defined for k = 4");
    }
    let pick = |s: &str| -> Result<Vec<i64>> { Ok(q.class_of(&s.parse()?)?.to_vec()) };
    let mut s = vec![0i64; q.rank];
    for label in ["0001", "0100", "0010", "1000"] {
        for (acc, x) in s.iter_mut().zip(pick(label)?) {
            *acc += x;
        }
    }
    let hat = pick("0111")?;
    let pairing = q.pairing(&hat, &s)?;
    Ok(ParityCheck {
        nonzero: s.iter().any(|&x| x != 0),
        parity: pairing.rem_euclid(2) as u8,
        support_pairing: q.pairing(&hat, &pick("1010")?)?,
    })
}

/// Per-generator shape facts for a transvection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorShape {
    pub vertex: BitVertex,
    pub deviation_rank: usize,
    pub fixed_space_dim: usize,
    pub square_zero: bool,
    pub direction_content: i64,
    pub direction_is_class: bool,
}

pub fn generator_shapes(
    q: &QuotientLattice,
    g: &ArtinGraph,
    sign: Sign,
) -> Result<Vec<GeneratorShape>> {
    g.vertices()
        .iter()
        .map(|v| {
            let t = transvection(q, v, sign)?;
            let dir = t.direction();
            let class = q.class_of(v)?;
            let direction_is_class = dir.as_ref().is_some_and(|d| {
                d.as_slice() == class || d.iter().zip(class).all(|(a, b)| *a == -*b)
            });
            Ok(GeneratorShape {
                vertex: *v,
                deviation_rank: t.deviation_rank(),
                fixed_space_dim: t.fixed_space_dim(),
                square_zero: t.is_unipotent_of_order_two(),
                direction_content: dir.as_deref().map_or(0, linalg::content),
                direction_is_class,
            })
        })
        .collect()
}

/// JSON bundle for the representation stage.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepExport {
    pub sign: Sign,
    pub transvections: BTreeMap<String, Matrix>,
    pub witnesses: Vec<ConjugacyWitness>,
    pub relations: RelationReport,
    pub q_table: Vec<u8>,
}

impl RepExport {
    pub fn build(q: &QuotientLattice, g: &ArtinGraph, sign: Sign) -> Result<Self> {
        let transvections = g
            .vertices()
            .iter()
            .map(|v| Ok((v.to_string(), transvection(q, v, sign)?.entries)))
            .collect::<Result<_>>()?;
        Ok(RepExport {
            sign,
            transvections,
            witnesses: conjugacy_witnesses(q, g, sign)?,
            relations: verify_all_relations(q, g, sign)?,
            q_table: quadratic_refinement(q)?.values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor_lattice::{gram_matrix, quotient_lattice};

    fn setup() -> (QuotientLattice, ArtinGraph) {
        (
            quotient_lattice(&gram_matrix(4).unwrap()).unwrap(),
            ArtinGraph::build(4).unwrap(),
        )
    }

    fn v(s: &str) -> BitVertex {
        s.parse().unwrap()
    }

    #[test]
    fn transvection_fixes_its_class() {
        let (q, g) = setup();
        for sign in Sign::BOTH {
            for vert in g.vertices() {
                let t = transvection(&q, vert, sign).unwrap();
                let a = q.class_of(vert).unwrap();
                assert_eq!(t.entries.mul_vec(a).unwrap(), a);
                assert_eq!(t.deviation_rank(), 1);
                assert_eq!(t.fixed_space_dim(), 9);
            }
        }
    }

    #[test]
    fn pair_relation_examples() {
        let (q, _) = setup();
        let t = |s| transvection(&q, &v(s), Sign::Positive).unwrap();
        assert!(verify_pair_relation(&t("0001"), &t("0101"), true));
        assert!(verify_pair_relation(&t("0100"), &t("1010"), false));
        assert!(!verify_pair_relation(&t("0100"), &t("1010"), true));
        assert!(!verify_pair_relation(&t("0001"), &t("0101"), false));
    }

    #[test]
    fn triangle_example() {
        let (q, _) = setup();
        let t = |s| transvection(&q, &v(s), Sign::Positive).unwrap();
        let (a, b, c) = (t("0000"), t("0001"), t("0011"));
        assert!(verify_triangle(&c, &b, &a));
        assert!(!verify_triangle(&a, &b, &c));
    }

    #[test]
    fn all_relations_both_signs() {
        let (q, g) = setup();
        for sign in Sign::BOTH {
            let r = verify_all_relations(&q, &g, sign).unwrap();
            assert_eq!((r.pairs_checked, r.triangles_checked), (120, 110));
            assert!(
                r.ok(),
                "{sign:?}: {:?}",
                &r.failures[..r.failures.len().min(3)]
            );
        }
    }

    #[test]
    fn nonsymplectic_matrix_rejected() {
        let (q, _) = setup();
        let mut m = Matrix::identity(10);
        m[(0, 0)] = 2;
        assert!(SpMatrix::new(m, &q.induced_gram, None).is_err());
    }

    #[test]
    fn witness_words() {
        let (q, g) = setup();
        let w = conjugacy_witnesses(&q, &g, Sign::Positive).unwrap();
        assert!(w[0].word.is_empty());
        assert!(w.iter().all(|x| x.verified));
    }

    #[test]
    fn refinement_basics() {
        let (q, _) = setup();
        let qr = quadratic_refinement(&q).unwrap();
        assert_eq!(qr.value(0), 0);
        assert_eq!(qr.values.len(), 1024);
    }

    #[test]
    fn closure_examples() {
        let (q, g) = setup();
        let a = q.class_of(&v("0001")).unwrap().to_vec();
        assert_eq!(
            invariant_span_closure(&q, &g, &[a], Sign::Positive).unwrap(),
            10
        );
        assert_eq!(
            invariant_span_closure(&q, &g, &[vec![0; 10]], Sign::Positive).unwrap(),
            0
        );
    }

    #[test]
    fn parity() {
        let (q, _) = setup();
        let p = chain_parity_check(&q).unwrap();
        assert!(p.nonzero);
        assert_eq!(p.parity, 1);
        assert_eq!(p.support_pairing, 0);
    }
}
