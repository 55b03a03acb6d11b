//! The full verification run: every check in order, one scoreboard row each.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::artin_graph::{ArtinGraph, BitVertex};
use crate::curves::{min_genus, surface_of, CurvePattern, InsertionOrder, SearchConfig};
use crate::error::{Error, Result};
use crate::milnor_lattice::{
    gram_matrix, quotient_lattice, radical, sublattice_rank, QuotientLattice,
};
use crate::standard;
use crate::symplectic_rep::{
    chain_parity_check, conjugacy_witnesses, generator_shapes, invariant_span_closure,
    quadratic_refinement, transvections, verify_all_relations, Sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub suite: String,
    pub lemma: String,
    pub claim: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scoreboard {
    pub rows: Vec<Row>,
}

impl Scoreboard {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }

    /// 0 when every row passes, 1 when any row fails, 3 when the only
    /// shortfall is an inconclusive search.
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(|r| r.status == Status::Fail) {
            1
        } else if self.rows.iter().any(|r| r.status == Status::Inconclusive) {
            3
        } else {
            0
        }
    }

    pub fn row(&self, claim_prefix: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.claim.starts_with(claim_prefix))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut suite = "";
        for r in &self.rows {
            if r.suite != suite {
                suite = &r.suite;
                out.push_str(&format!("\n[{suite}]\n"));
            }
            let mark = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!(
                "  {mark:<12} {:<28} {}  ({})\n",
                r.lemma, r.claim, r.detail
            ));
        }
        let passed = self
            .rows
            .iter()
            .filter(|r| r.status == Status::Pass)
            .count();
        out.push_str(&format!("\n{passed}/{} checks passed\n", self.rows.len()));
        out
    }
}

struct Board {
    rows: Vec<Row>,
    suite: &'static str,
}

impl Board {
    fn check(&mut self, lemma: &str, claim: &str, ok: bool, detail: impl Into<String>) {
        self.rows.push(Row {
            suite: self.suite.into(),
            lemma: lemma.into(),
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn inconclusive(&mut self, lemma: &str, claim: &str, detail: impl Into<String>) {
        self.rows.push(Row {
            suite: self.suite.into(),
            lemma: lemma.into(),
            claim: claim.into(),
            status: Status::Inconclusive,
            detail: detail.into(),
        });
    }
}

fn graph_suite(b: &mut Board) -> Result<()> {
    b.suite = "graph";
    let g = ArtinGraph::build(4)?;
    b.check(
        "edge rule",
        "k=4: 16 vertices, 65 edges",
        g.len() == 16 && g.edge_count() == 65,
        format!("{} vertices, {} edges", g.len(), g.edge_count()),
    );
    let ext: Vec<String> = g
        .extremal_vertices()
        .iter()
        .map(ToString::to_string)
        .collect();
    let degrees_ok = g
        .extremal_vertices()
        .iter()
        .all(|v| g.degree(v.index()) == 15);
    b.check(
        "extremal vertices",
        "exactly 0000 and 1111, degree 15",
        ext == ["0000", "1111"] && degrees_ok,
        format!("extremal {}", ext.join(",")),
    );
    let mut disagreements = 0;
    for k in 1..=5u8 {
        let n = 1u16 << k;
        for i in 0..n {
            for j in 0..n {
                let (u, v) = (BitVertex::new(k, i)?, BitVertex::new(k, j)?);
                if u != v && u.comparable(&v) != u.no_opposite_pair(&v) {
                    disagreements += 1;
                }
            }
        }
    }
    b.check(
        "edge rule",
        "both edge formulations agree, k <= 5",
        disagreements == 0,
        format!("{disagreements} disagreements"),
    );
    let g3 = ArtinGraph::build(3)?;
    let mut degrees: Vec<usize> = (0..8).map(|i| g3.degree(i)).collect();
    degrees.sort_unstable();
    b.check(
        "cubic surface graph",
        "k=3: 8 vertices, 19 edges, degrees 4^6 7^2",
        g3.edge_count() == 19 && degrees == [4, 4, 4, 4, 4, 4, 7, 7],
        format!("{} edges", g3.edge_count()),
    );
    Ok(())
}

fn lattice_suite(b: &mut Board) -> Result<QuotientLattice> {
    b.suite = "lattice";
    let l = gram_matrix(4)?;
    let rad = radical(&l)?;
    b.check(
        "vanishing lattice",
        "gram rank 10, radical rank 6",
        l.rank() == 10 && rad.len() == 6,
        format!("rank {}, radical {}", l.rank(), rad.len()),
    );
    let q = quotient_lattice(&l)?;
    let non_extremal: Vec<usize> = (1..15).collect();
    let r = sublattice_rank(&q, &non_extremal)?;
    b.check(
        "14 non-extremal",
        "non-extremal classes span rank 10",
        r == 10,
        format!("span rank {r}"),
    );
    let mut mismatches = 0;
    for i in 0..16 {
        for j in 0..16 {
            if q.pairing(&q.class_map[i], &q.class_map[j])? != l.gram[(i, j)] {
                mismatches += 1;
            }
        }
    }
    b.check(
        "vanishing lattice",
        "quotient reproduces gram on all pairs",
        mismatches == 0,
        format!("{mismatches} mismatches"),
    );
    let det = q.determinant()?;
    b.check(
        "vanishing lattice",
        "induced form unimodular",
        det.abs() == 1,
        format!("det {det}"),
    );
    Ok(q)
}

fn rep_suite(b: &mut Board, q: &QuotientLattice) -> Result<()> {
    b.suite = "representation";
    let g = ArtinGraph::build(4)?;
    let qr = quadratic_refinement(q);
    for sign in Sign::BOTH {
        let tag = match sign {
            Sign::Positive => "+",
            Sign::Negative => "-",
        };
        let rel = verify_all_relations(q, &g, sign)?;
        let pair_failures = rel
            .failures
            .iter()
            .filter(|f| f.relation != "triangle")
            .count();
        let tri_failures = rel.failures.len() - pair_failures;
        b.check(
            "Artin relations",
            &format!("[{tag}] all {} pairs match edges", rel.pairs_checked),
            pair_failures == 0,
            format!(
                "{} braid, {} commuting, {pair_failures} failures",
                rel.braid_pairs, rel.commuting_pairs
            ),
        );
        b.check(
            "triangle relations",
            &format!("[{tag}] all {} triangles", rel.triangles_checked),
            tri_failures == 0,
            format!("{tri_failures} failures"),
        );
        let wit = conjugacy_witnesses(q, &g, sign)?;
        let verified = wit.iter().filter(|w| w.verified).count();
        b.check(
            "conjugate generators",
            &format!("[{tag}] 16 witnesses verify"),
            verified == 16,
            format!("{verified} verified"),
        );
        let shapes = generator_shapes(q, &g, sign)?;
        let good = shapes
            .iter()
            .filter(|s| {
                s.deviation_rank == 1
                    && s.fixed_space_dim == 9
                    && s.square_zero
                    && s.direction_content == 1
            })
            .count();
        b.check(
            "transvections",
            &format!("[{tag}] rank(T-I)=1, primitive direction, fixed dim 9"),
            good == 16,
            format!("{good}/16 generators"),
        );
        match &qr {
            Ok(qr) => {
                let ts = transvections(q, &g, sign)?;
                let invariant = ts.iter().filter(|t| qr.invariant_under(t)).count();
                let on_classes = q.class_map.iter().all(|c| qr.value_of(c) == 1);
                b.check(
                    "irreducibility",
                    &format!("[{tag}] quadratic refinement, q(a_v)=1, invariant"),
                    on_classes && qr.satisfies_identity(q) && invariant == 16,
                    format!(
                        "invariant under {invariant}/16 over {} vectors",
                        qr.values.len()
                    ),
                );
            }
            Err(e) => b.check(
                "irreducibility",
                &format!("[{tag}] quadratic refinement"),
                false,
                e.to_string(),
            ),
        }
        let mut closures = Vec::new();
        for c in &q.class_map {
            closures.push(invariant_span_closure(
                q,
                &g,
                std::slice::from_ref(c),
                sign,
            )?);
        }
        let min = closures.iter().copied().min().unwrap_or(0);
        b.check(
            "irreducibility",
            &format!("[{tag}] invariant span of every generator is 10"),
            closures.iter().all(|&d| d == 10),
            format!("smallest closure {min}"),
        );
    }
    let p = chain_parity_check(q)?;
    b.check(
        "homology parity",
        "a1+a3+a5+a7 nonzero, odd pairing with a_0111",
        p.nonzero && p.parity == 1 && p.support_pairing == 0,
        format!(
            "nonzero {}, parity {}, <a_0111,a_1010> = {}",
            p.nonzero, p.parity, p.support_pairing
        ),
    );
    Ok(())
}

fn chain_suite(b: &mut Board) -> Result<()> {
    b.suite = "chains";
    let g = ArtinGraph::build(4)?;
    let chain = standard::braid_chain();
    let rep = g.verify_chain(&chain)?;
    b.check(
        "Br8",
        "7-chain is an induced path",
        rep.is_chain,
        format!("{} violations", rep.violations.len()),
    );
    let cyc = g.verify_induced_cycle(&standard::affine_cycle())?;
    b.check(
        "affine braid",
        "8-cycle with 1001 spans no other edges",
        cyc,
        format!("induced {cyc}"),
    );
    let mut missing = Vec::new();
    let mut spurious = Vec::new();
    for v in g.vertices() {
        let w = g.commuting_partner_witness(&chain, v)?;
        match (g.is_extremal(v)?, w) {
            (false, None) => missing.push(v.to_string()),
            (true, Some(_)) => spurious.push(v.to_string()),
            _ => {}
        }
    }
    b.check(
        "commuting partners",
        "witness for all 14 non-extremal, none for extremal",
        missing.is_empty() && spurious.is_empty(),
        format!(
            "missing [{}], extremal with witness [{}]",
            missing.join(","),
            spurious.join(",")
        ),
    );
    Ok(())
}

fn genus_row(
    b: &mut Board,
    lemma: &str,
    claim: &str,
    r: Result<crate::curves::MinGenusResult>,
    want: Option<usize>,
) -> Result<()> {
    match r {
        Ok(r) => {
            let got = r.genus();
            let detail = match got {
                Some(g) => format!("genus {g}, {} nodes", r.nodes_explored),
                None => format!("exceeds budget, {} nodes", r.nodes_explored),
            };
            b.check(lemma, claim, got == want && r.exhausted, detail);
            Ok(())
        }
        Err(Error::Inconclusive { cap, explored }) => {
            b.inconclusive(
                lemma,
                claim,
                format!("node cap {cap} hit after {explored} nodes"),
            );
            Ok(())
        }
        Err(e) => Err(e),
    }
}

fn small_realize_suite(b: &mut Board, cfg: &SearchConfig) -> Result<()> {
    b.suite = "realizability (small)";
    let pair = CurvePattern::new(vec!["x".into(), "y".into()], vec![vec![0, 1], vec![1, 0]])?;
    genus_row(
        b,
        "neighbourhoods",
        "two curves meeting once: genus 1",
        min_genus(&pair, 3, cfg),
        Some(1),
    )?;
    let chain = standard::chain7_pattern();
    genus_row(
        b,
        "A7 chain",
        "A7 chain: genus 3",
        min_genus(&chain, 5, cfg),
        Some(3),
    )?;
    let twelve = standard::twelve_curve_pattern();
    let bounds = [
        pair.f2_genus_lower_bound(),
        chain.f2_genus_lower_bound(),
        twelve.f2_genus_lower_bound(),
    ];
    b.check(
        "F2 bound",
        "F2 bounds 1, 3, 5",
        bounds == [1, 3, 5],
        format!("computed {bounds:?}"),
    );
    let union = chain.disjoint_union(&pair)?;
    let u = min_genus(&union, 6, cfg)?;
    b.check(
        "additivity",
        "chain + pair: genus 3 + 1",
        u.genus() == Some(4),
        format!("genus {:?}", u.genus()),
    );
    let ten = standard::ten_curve_pattern();
    let base = min_genus(&ten, 5, cfg)?.genus();
    let relabelled = ten.rename(
        (0..ten.len())
            .map(|i| format!("c{}", ten.len() - i))
            .collect(),
    )?;
    let by_label = min_genus(&relabelled, 5, cfg)?.genus();
    let by_degree = min_genus(
        &ten,
        5,
        &SearchConfig {
            order: InsertionOrder::DegreeDescending,
            ..cfg.clone()
        },
    )?
    .genus();
    b.check(
        "invariance",
        "10-curve genus invariant under relabeling and order",
        base == by_label && base == by_degree,
        format!("{base:?} / {by_label:?} / {by_degree:?}"),
    );
    Ok(())
}

fn main_realize_suite(b: &mut Board, cfg: &SearchConfig) -> Result<()> {
    b.suite = "realizability (main)";
    let ten = standard::ten_curve_pattern();
    match min_genus(&ten, 5, cfg) {
        Ok(r) => {
            let traced = match r.witness() {
                Some(w) => Some(surface_of(&ten, w)?.genus()),
                None => None,
            };
            b.check(
                "affine generators",
                "{a..h,u,v} realizable on genus 5 with witness",
                traced.is_some_and(|g| g <= 5) && r.exhausted,
                format!("witness genus {traced:?}"),
            );
        }
        Err(Error::Inconclusive { cap, explored }) => b.inconclusive(
            "affine generators",
            "{a..h,u,v} realizable on genus 5",
            format!("cap {cap}, {explored} nodes"),
        ),
        Err(e) => return Err(e),
    }
    genus_row(
        b,
        "impossible configuration",
        "12-curve pattern exceeds genus 5",
        min_genus(&standard::twelve_curve_pattern(), 5, cfg),
        None,
    )?;
    let eleven = standard::eleven_curve_pattern();
    for (name, c) in ["u on arc b->h of a", "u on arc h->b of a"]
        .iter()
        .zip(standard::u_placements())
    {
        let r = min_genus(
            &eleven,
            5,
            &SearchConfig {
                constraints: vec![c],
                ..cfg.clone()
            },
        );
        match r {
            Ok(r) => b.check(
                "impossible configuration",
                &format!("11-curve fallback completes ({name})"),
                r.exhausted,
                match r.genus() {
                    Some(g) => format!("genus {g}, {} nodes", r.nodes_explored),
                    None => format!("exceeds 5, {} nodes", r.nodes_explored),
                },
            ),
            Err(Error::Inconclusive { cap, explored }) => b.inconclusive(
                "impossible configuration",
                &format!("11-curve fallback completes ({name})"),
                format!("cap {cap}, {explored} nodes"),
            ),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Run every suite in order.
pub fn verify_all(cfg: &SearchConfig) -> Result<Scoreboard> {
    let mut b = Board {
        rows: Vec::new(),
        suite: "",
    };
    graph_suite(&mut b)?;
    let q = lattice_suite(&mut b)?;
    rep_suite(&mut b, &q)?;
    chain_suite(&mut b)?;
    small_realize_suite(&mut b, cfg)?;
    main_realize_suite(&mut b, cfg)?;
    Ok(Scoreboard { rows: b.rows })
}

/// [`verify_all`] with its wall time in milliseconds.
pub fn verify_all_timed(cfg: &SearchConfig) -> Result<(Scoreboard, u128)> {
    let start = Instant::now();
    let s = verify_all(cfg)?;
    Ok((s, start.elapsed().as_millis()))
}
