//! Exact minimal genus by branch-and-bound over ribbon structures.
//!
//! Curves are inserted one at a time. Inserting a curve places its crossings
//! with the curves already present one by one, walking along the new curve:
//! each step picks the next partner, the position of the new crossing in the
//! partner's cyclic order, and the crossing bit. The traced genus of the
//! partial system (closed curves plus the open arc of the curve being drawn)
//! never exceeds the genus of any completion, because its neighbourhood is a
//! subsurface of the completed neighbourhood; branches whose partial genus
//! exceeds the target are cut.
//!
//! Reversing a curve flips every bit on it and reverses its visit order
//! without changing the surface, so the first crossing of every curve that
//! has an earlier partner is fixed to bit 0.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::{BranchRecord, SearchCache};
use super::pattern::CurvePattern;
use super::ribbon::{find, surface_of, RibbonStructure, P_OUT, Q_OUT, ROTATION, ROTATION_POS};
use crate::error::{invalid, Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum InsertionOrder {
    /// The order the curves are listed in the pattern.
    #[default]
    Pattern,
    /// Highest degree first, preferring curves that meet the ones already placed.
    DegreeDescending,
    Labels(Vec<String>),
}

/// Placement constraint: going along `curve` from its crossing with `from`,
/// the crossing with `member` comes before the crossing with `to`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcConstraint {
    pub curve: String,
    pub from: String,
    pub to: String,
    pub member: String,
}

impl ArcConstraint {
    pub fn new(curve: &str, from: &str, to: &str, member: &str) -> Self {
        ArcConstraint {
            curve: curve.into(),
            from: from.into(),
            to: to.into(),
            member: member.into(),
        }
    }

    fn resolve(&self, pattern: &CurvePattern) -> Result<[usize; 4]> {
        let idx = |l: &str| {
            pattern
                .index_of(l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown curve {l}")))
        };
        let r = [
            idx(&self.curve)?,
            idx(&self.from)?,
            idx(&self.to)?,
            idx(&self.member)?,
        ];
        for &y in &r[1..] {
            if !pattern.meets(r[0], y) {
                return invalid(format!(
                    "{} does not cross {}",
                    self.curve,
                    pattern.label(y)
                ));
            }
        }
        if r[1] == r[2] || r[1] == r[3] || r[2] == r[3] {
            return invalid("arc constraint needs three distinct partners");
        }
        Ok(r)
    }

    /// Whether a complete or partial cyclic order satisfies the constraint;
    /// orders missing one of the three partners satisfy it vacuously.
    pub fn holds(order: &[usize], from: usize, to: usize, member: usize) -> bool {
        let pos = |y: usize| order.iter().position(|&z| z == y);
        match (pos(from), pos(to), pos(member)) {
            (Some(f), Some(t), Some(m)) => {
                let n = order.len();
                (m + n - f) % n < (t + n - f) % n
            }
            _ => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub order: InsertionOrder,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Abort with [`Error::Inconclusive`] after this many search nodes.
    pub node_cap: Option<u64>,
    pub cache: Option<PathBuf>,
    /// Reuse completed branches found in `cache`.
    pub resume: bool,
    /// Approximate number of top-level branches handed to the workers.
    pub frontier_target: usize,
    pub constraints: Vec<ArcConstraint>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            order: InsertionOrder::Pattern,
            threads: None,
            node_cap: None,
            cache: None,
            resume: false,
            frontier_target: 4096,
            constraints: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Verdict {
    Exact {
        genus: usize,
        witness: RibbonStructure,
    },
    Exceeds {
        budget: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinGenusResult {
    pub verdict: Verdict,
    pub nodes_explored: u64,
    /// Every branch that could lower the answer was searched to the end.
    pub exhausted: bool,
}

impl MinGenusResult {
    pub fn genus(&self) -> Option<usize> {
        match &self.verdict {
            Verdict::Exact { genus, .. } => Some(*genus),
            Verdict::Exceeds { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&RibbonStructure> {
        match &self.verdict {
            Verdict::Exact { witness, .. } => Some(witness),
            Verdict::Exceeds { .. } => None,
        }
    }
}

/// One search step: the partner crossed, where the crossing goes in the
/// partner's cyclic order, and the crossing bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decision {
    pub partner: u8,
    pub slot: u8,
    pub bit: u8,
}

/// Resolve an insertion order into curve indices.
pub fn resolve_order(pattern: &CurvePattern, order: &InsertionOrder) -> Result<Vec<usize>> {
    let n = pattern.len();
    let out = match order {
        InsertionOrder::Pattern => (0..n).collect(),
        InsertionOrder::DegreeDescending => {
            let mut placed = vec![false; n];
            let mut out = Vec::with_capacity(n);
            for _ in 0..n {
                let touching = |i: usize| out.iter().any(|&p| pattern.meets(i, p));
                let next = (0..n)
                    .filter(|&i| !placed[i])
                    .max_by_key(|&i| (touching(i), pattern.degree(i), std::cmp::Reverse(i)))
                    .expect("curve left");
                placed[next] = true;
                out.push(next);
            }
            out
        }
        InsertionOrder::Labels(labels) => {
            let idx = labels
                .iter()
                .map(|l| {
                    pattern
                        .index_of(l)
                        .ok_or_else(|| Error::InvalidInput(format!("unknown curve {l}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return invalid("insertion order must list every curve exactly once");
            }
            idx
        }
    };
    Ok(out)
}

/// Static data for one connected pattern and insertion order.
struct Plan {
    n: usize,
    crossings: Vec<(usize, usize)>,
    cid: Vec<Vec<u32>>,
    /// (curve, index along the curve's placement, last step of this curve)
    steps: Vec<(usize, usize, bool)>,
    /// Partners placed before each curve, earliest first.
    earlier: Vec<Vec<usize>>,
    arcs: Vec<[usize; 4]>,
}

impl Plan {
    fn new(pattern: &CurvePattern, order: &[usize], arcs: Vec<[usize; 4]>) -> Self {
        let n = pattern.len();
        let crossings = pattern.crossings();
        let mut cid = vec![vec![NONE; n]; n];
        for (c, &(p, q)) in crossings.iter().enumerate() {
            cid[p][q] = c as u32;
            cid[q][p] = c as u32;
        }
        let mut rank = vec![0; n];
        for (r, &x) in order.iter().enumerate() {
            rank[x] = r;
        }
        let mut earlier = vec![Vec::new(); n];
        let mut steps = Vec::new();
        for &x in order {
            let mut ps: Vec<usize> = pattern
                .partners(x)
                .into_iter()
                .filter(|&y| rank[y] < rank[x])
                .collect();
            ps.sort_by_key(|&y| rank[y]);
            for j in 0..ps.len() {
                steps.push((x, j, j + 1 == ps.len()));
            }
            earlier[x] = ps;
        }
        Plan {
            n,
            crossings,
            cid,
            steps,
            earlier,
            arcs,
        }
    }

    fn dart(&self, x: usize, c: usize, out: bool) -> usize {
        let base = if self.crossings[c].0 == x {
            P_OUT
        } else {
            Q_OUT
        };
        4 * c + base + usize::from(!out)
    }
}

enum Outcome {
    Found(Vec<Decision>),
    Exhausted,
    /// Reached the frontier depth (frontier generation only).
    Frontier,
}

struct Walker<'a> {
    plan: &'a Plan,
    target: usize,
    seq: Vec<Vec<u8>>,
    bits: Vec<u8>,
    placed: Vec<bool>,
    remaining: Vec<u64>,
    trail: Vec<Decision>,
    nodes: u64,
    pending: u64,
    shared: &'a AtomicU64,
    cap: Option<u64>,
    abort: &'a AtomicBool,
    // scratch for face tracing
    alpha: Vec<u32>,
    present: Vec<bool>,
    seen: Vec<bool>,
    uf: Vec<usize>,
}

impl<'a> Walker<'a> {
    fn new(
        plan: &'a Plan,
        target: usize,
        shared: &'a AtomicU64,
        cap: Option<u64>,
        abort: &'a AtomicBool,
    ) -> Self {
        let nc = plan.crossings.len();
        Walker {
            plan,
            target,
            seq: vec![Vec::new(); plan.n],
            bits: vec![0; nc],
            placed: vec![false; nc],
            remaining: plan
                .earlier
                .iter()
                .map(|ps| ps.iter().fold(0u64, |m, &y| m | 1u64 << y))
                .collect(),
            trail: Vec::with_capacity(plan.steps.len()),
            nodes: 0,
            pending: 0,
            shared,
            cap,
            abort,
            alpha: vec![NONE; 4 * nc],
            present: vec![false; 4 * nc],
            seen: vec![false; 4 * nc],
            uf: (0..nc).collect(),
        }
    }

    fn apply(&mut self, x: usize, d: Decision) {
        let y = usize::from(d.partner);
        let c = self.plan.cid[x][y] as usize;
        self.seq[y].insert(usize::from(d.slot), x as u8);
        self.seq[x].push(y as u8);
        self.bits[c] = d.bit;
        self.placed[c] = true;
        self.remaining[x] &= !(1u64 << y);
        self.trail.push(d);
    }

    fn undo(&mut self, x: usize) {
        let d = self.trail.pop().expect("trail");
        let y = usize::from(d.partner);
        let c = self.plan.cid[x][y] as usize;
        self.seq[y].remove(usize::from(d.slot));
        self.seq[x].pop();
        self.bits[c] = 0;
        self.placed[c] = false;
        self.remaining[x] |= 1u64 << y;
    }

    /// Genus of the current partial system; `open` is the curve being drawn
    /// (not yet closed up), if any.
    fn partial_genus(&mut self, open: Option<usize>) -> usize {
        let plan = self.plan;
        self.alpha.fill(NONE);
        self.present.fill(false);
        let nc = plan.crossings.len();
        for (c, &placed) in self.placed.iter().enumerate() {
            self.uf[c] = c;
            if placed {
                self.present[4 * c..4 * c + 4].fill(true);
            }
        }
        let mut vertices = 0i64;
        let mut edges = 0i64;
        for c in 0..nc {
            vertices += i64::from(self.placed[c]);
        }
        for x in 0..plan.n {
            let s = &self.seq[x];
            let d = s.len();
            if d == 0 {
                continue;
            }
            let is_open = open == Some(x);
            let links = if is_open { d - 1 } else { d };
            for t in 0..links {
                let c = plan.cid[x][usize::from(s[t])] as usize;
                let c2 = plan.cid[x][usize::from(s[(t + 1) % d])] as usize;
                let (a, b) = (plan.dart(x, c, true), plan.dart(x, c2, false));
                self.alpha[a] = b as u32;
                self.alpha[b] = a as u32;
                let (ra, rb) = (find(&mut self.uf, c), find(&mut self.uf, c2));
                self.uf[ra] = rb;
                edges += 1;
            }
            if is_open {
                let first = plan.cid[x][usize::from(s[0])] as usize;
                let last = plan.cid[x][usize::from(s[d - 1])] as usize;
                self.present[plan.dart(x, first, false)] = false;
                self.present[plan.dart(x, last, true)] = false;
            }
        }
        let mut components = 0i64;
        for c in 0..nc {
            if self.placed[c] && find(&mut self.uf, c) == c {
                components += 1;
            }
        }
        self.seen.fill(false);
        let mut faces = 0i64;
        for start in 0..4 * nc {
            if !self.present[start] || self.seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !self.seen[d] {
                self.seen[d] = true;
                d = self.rotate(self.alpha[d] as usize);
            }
        }
        let twice = 2 * components - vertices + edges - faces;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as usize
    }

    /// Next present half-edge counterclockwise around the crossing.
    fn rotate(&self, d: usize) -> usize {
        let c = d / 4;
        let bit = usize::from(self.bits[c]);
        let mut pos = ROTATION_POS[bit][d % 4];
        loop {
            pos = (pos + 1) % 4;
            let e = 4 * c + ROTATION[bit][pos];
            if self.present[e] {
                return e;
            }
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= 1 << 12 {
            self.flush();
        }
        if let Some(cap) = self.cap {
            let total = self.shared.load(Ordering::Relaxed) + self.pending;
            if total > cap || self.abort.load(Ordering::Relaxed) {
                self.abort.store(true, Ordering::Relaxed);
                return Err(Error::Inconclusive {
                    cap,
                    explored: total,
                });
            }
        }
        Ok(())
    }

    fn flush(&mut self) {
        self.shared.fetch_add(self.pending, Ordering::Relaxed);
        self.pending = 0;
    }

    fn candidates(&self, step: usize) -> Vec<Decision> {
        let (x, j, _) = self.plan.steps[step];
        let partners: Vec<usize> = if j == 0 {
            vec![self.plan.earlier[x][0]]
        } else {
            self.plan.earlier[x]
                .iter()
                .copied()
                .filter(|&y| self.remaining[x] >> y & 1 == 1)
                .collect()
        };
        let mut out = Vec::new();
        for y in partners {
            let len = self.seq[y].len();
            let slots: Vec<usize> = if len == 0 {
                vec![0]
            } else {
                (1..=len).collect()
            };
            for slot in slots {
                for bit in 0..if j == 0 { 1 } else { 2 } {
                    out.push(Decision {
                        partner: y as u8,
                        slot: slot as u8,
                        bit,
                    });
                }
            }
        }
        out
    }

    fn replay(&mut self, prefix: &[Decision]) {
        for (s, &d) in prefix.iter().enumerate() {
            let x = self.plan.steps[s].0;
            self.apply(x, d);
        }
    }

    fn dfs(
        &mut self,
        step: usize,
        stop_at: Option<usize>,
        frontier: &mut Vec<Vec<Decision>>,
    ) -> Result<Outcome> {
        if stop_at == Some(step) {
            frontier.push(self.trail.clone());
            return Ok(Outcome::Frontier);
        }
        if step == self.plan.steps.len() {
            return Ok(Outcome::Found(self.trail.clone()));
        }
        let (x, j, last) = self.plan.steps[step];
        for d in self.candidates(step) {
            self.tick()?;
            self.apply(x, d);
            let ok = self.arcs_hold()
                && if j >= 1 || last {
                    let open = if last { None } else { Some(x) };
                    self.partial_genus(open) <= self.target
                } else {
                    true
                };
            if ok {
                match self.dfs(step + 1, stop_at, frontier)? {
                    Outcome::Found(t) if stop_at.is_none() => {
                        self.undo(x);
                        return Ok(Outcome::Found(t));
                    }
                    _ => {}
                }
            }
            self.undo(x);
        }
        Ok(Outcome::Exhausted)
    }

    fn arcs_hold(&self) -> bool {
        self.plan.arcs.iter().all(|&[x, f, t, m]| {
            let order: Vec<usize> = self.seq[x].iter().map(|&y| usize::from(y)).collect();
            ArcConstraint::holds(&order, f, t, m)
        })
    }

    fn structure(&self) -> RibbonStructure {
        RibbonStructure {
            visit_order: self
                .seq
                .iter()
                .map(|s| s.iter().map(|&y| usize::from(y)).collect())
                .collect(),
            crossing_bits: self.bits.clone(),
        }
        .canonical()
    }
}

/// Search outcome for one target genus on one connected pattern.
enum TargetOutcome {
    Found(RibbonStructure),
    Exhausted,
}

struct TargetRun<'a> {
    pattern: &'a CurvePattern,
    plan: &'a Plan,
    order_labels: Vec<String>,
    config: &'a SearchConfig,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
}

impl TargetRun<'_> {
    fn frontier(&self, target: usize) -> Result<(usize, Vec<Vec<Decision>>)> {
        let total = self.plan.steps.len();
        let mut depth = 0;
        loop {
            let mut frontier = Vec::new();
            let mut w = Walker::new(
                self.plan,
                target,
                self.nodes,
                self.config.node_cap,
                self.abort,
            );
            w.dfs(0, Some(depth), &mut frontier)?;
            w.flush();
            if depth == total
                || frontier.len() >= self.config.frontier_target
                || frontier.is_empty()
            {
                return Ok((depth, frontier));
            }
            depth += 1;
        }
    }

    fn run(&self, target: usize) -> Result<TargetOutcome> {
        let (depth, frontier) = self.frontier(target)?;
        if frontier.is_empty() {
            return Ok(TargetOutcome::Exhausted);
        }
        let key = SearchCache::key(
            self.pattern,
            &self.order_labels,
            &self.config.constraints,
            target,
            depth,
            frontier.len(),
        );
        let cache = match &self.config.cache {
            Some(path) => Some(Mutex::new(SearchCache::open(
                path,
                &key,
                self.config.resume,
            )?)),
            None => None,
        };
        let run_branch = |index: usize, prefix: &Vec<Decision>| -> Result<Option<Vec<Decision>>> {
            if let Some(cache) = &cache {
                if let Some(rec) = cache.lock().expect("cache lock").get(index) {
                    self.nodes.fetch_add(rec.nodes, Ordering::Relaxed);
                    return Ok(rec.found.clone());
                }
            }
            let mut w = Walker::new(
                self.plan,
                target,
                self.nodes,
                self.config.node_cap,
                self.abort,
            );
            w.replay(prefix);
            let mut scratch = Vec::new();
            let found = match w.dfs(depth, None, &mut scratch)? {
                Outcome::Found(t) => Some(t),
                _ => None,
            };
            w.flush();
            if let Some(cache) = &cache {
                cache.lock().expect("cache lock").record(
                    index,
                    BranchRecord {
                        nodes: w.nodes,
                        found: found.clone(),
                    },
                )?;
            }
            Ok(found)
        };
        let results: Vec<Result<Option<Vec<Decision>>>> = frontier
            .par_iter()
            .enumerate()
            .map(|(i, p)| run_branch(i, p))
            .collect();
        if let Some(cache) = &cache {
            cache.lock().expect("cache lock").flush()?;
        }
        let mut first_found = None;
        for r in results {
            if let Some(trail) = r? {
                if first_found.is_none() {
                    first_found = Some(trail);
                }
            }
        }
        match first_found {
            Some(trail) => {
                let mut w = Walker::new(self.plan, target, self.nodes, None, self.abort);
                w.replay(&trail);
                Ok(TargetOutcome::Found(w.structure()))
            }
            None => Ok(TargetOutcome::Exhausted),
        }
    }
}

/// Minimal genus of a connected pattern, searching targets from `from` up to
/// `budget`.
fn min_genus_connected(
    pattern: &CurvePattern,
    order: &[usize],
    from: usize,
    budget: usize,
    config: &SearchConfig,
    nodes: &AtomicU64,
) -> Result<Option<(usize, RibbonStructure)>> {
    let mut arcs = Vec::new();
    for a in &config.constraints {
        if pattern.index_of(&a.curve).is_some() {
            arcs.push(a.resolve(pattern)?);
        }
    }
    let plan = Plan::new(pattern, order, arcs);
    let abort = AtomicBool::new(false);
    let run = TargetRun {
        pattern,
        plan: &plan,
        order_labels: order
            .iter()
            .map(|&i| pattern.label(i).to_string())
            .collect(),
        config,
        nodes,
        abort: &abort,
    };
    for target in from..=budget {
        if let TargetOutcome::Found(witness) = run.run(target)? {
            let traced = surface_of(pattern, &witness)?.genus();
            if traced != target {
                return Err(Error::ConstructionFailed(format!(
                    "witness traces genus {traced}, search target was {target}"
                )));
            }
            return Ok(Some((target, witness)));
        }
    }
    Ok(None)
}

/// Exact minimal genus over all ribbon structures, or `Exceeds(budget)` once
/// every structure of genus at most `budget` has been ruled out.
///
/// Disconnected patterns are solved per component and summed.
pub fn min_genus(
    pattern: &CurvePattern,
    budget: usize,
    config: &SearchConfig,
) -> Result<MinGenusResult> {
    pattern.validate().map_err(|issues| {
        Error::InvalidInput(
            issues
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        )
    })?;
    if pattern.len() > 64 {
        return invalid("at most 64 curves are supported");
    }
    for a in &config.constraints {
        a.resolve(pattern)?;
    }
    let body = || -> Result<MinGenusResult> {
        let nodes = AtomicU64::new(0);
        let order = resolve_order(pattern, &config.order)?;
        let components = pattern.components();
        let lower_bounds: Vec<usize> = components
            .iter()
            .map(|c| pattern.restrict(c).f2_genus_lower_bound())
            .collect();
        let exceeds = |nodes: &AtomicU64| MinGenusResult {
            verdict: Verdict::Exceeds { budget },
            nodes_explored: nodes.load(Ordering::Relaxed),
            exhausted: true,
        };
        if lower_bounds.iter().sum::<usize>() > budget {
            return Ok(exceeds(&nodes));
        }
        let mut total = 0;
        let mut visit_order = vec![Vec::new(); pattern.len()];
        let mut crossing_bits = vec![0u8; pattern.crossing_count()];
        let all_crossings = pattern.crossings();
        for (ci, comp) in components.iter().enumerate() {
            // budget left for this component after the others' lower bounds
            let others: usize = lower_bounds
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ci)
                .map(|(_, b)| b)
                .sum();
            let local_budget =
                budget.saturating_sub(others + total - lower_bounds[..ci].iter().sum::<usize>());
            let sub = pattern.restrict(comp);
            let sub_order: Vec<usize> = order
                .iter()
                .filter_map(|x| comp.iter().position(|y| y == x))
                .collect();
            match min_genus_connected(
                &sub,
                &sub_order,
                lower_bounds[ci],
                local_budget,
                config,
                &nodes,
            )? {
                None => return Ok(exceeds(&nodes)),
                Some((g, w)) => {
                    total += g;
                    for (local, order) in w.visit_order.iter().enumerate() {
                        visit_order[comp[local]] = order.iter().map(|&y| comp[y]).collect();
                    }
                    for (c, &(p, q)) in sub.crossings().iter().enumerate() {
                        let global = (comp[p].min(comp[q]), comp[p].max(comp[q]));
                        let gc = all_crossings
                            .iter()
                            .position(|&x| x == global)
                            .expect("crossing");
                        crossing_bits[gc] = w.crossing_bits[c];
                    }
                }
            }
        }
        let witness = RibbonStructure {
            visit_order,
            crossing_bits,
        }
        .canonical();
        Ok(MinGenusResult {
            verdict: Verdict::Exact {
                genus: total,
                witness,
            },
            nodes_explored: nodes.load(Ordering::Relaxed),
            exhausted: true,
        })
    };
    match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(body),
        None => body(),
    }
}

/// Whether the pattern fits on a closed surface of genus `genus`, with a
/// witness structure when it does.
pub fn is_realizable(
    pattern: &CurvePattern,
    genus: usize,
    config: &SearchConfig,
) -> Result<(bool, Option<RibbonStructure>)> {
    let r = min_genus(pattern, genus, config)?;
    Ok(match r.verdict {
        Verdict::Exact { witness, .. } => (true, Some(witness)),
        Verdict::Exceeds { .. } => (false, None),
    })
}

/// Timed wrapper used by the front ends.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TimedResult {
    pub result: MinGenusResult,
    pub wall_time_ms: u128,
}

pub fn min_genus_timed(
    pattern: &CurvePattern,
    budget: usize,
    config: &SearchConfig,
) -> Result<TimedResult> {
    let start = Instant::now();
    let result = min_genus(pattern, budget, config)?;
    Ok(TimedResult {
        result,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn pair() -> CurvePattern {
        CurvePattern::new(vec!["x".into(), "y".into()], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn two_curves() {
        let r = min_genus(&pair(), 3, &SearchConfig::default()).unwrap();
        assert_eq!(r.genus(), Some(1));
        assert!(r.exhausted);
    }

    #[test]
    fn chain_is_genus_three() {
        let r = min_genus(&standard::chain7_pattern(), 5, &SearchConfig::default()).unwrap();
        assert_eq!(r.genus(), Some(3));
        let (ok, _) =
            is_realizable(&standard::chain7_pattern(), 2, &SearchConfig::default()).unwrap();
        assert!(!ok);
    }

    #[test]
    fn budget_below_bound_is_fast() {
        let r = min_genus(
            &standard::twelve_curve_pattern(),
            3,
            &SearchConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Exceeds { budget: 3 });
        assert_eq!(r.nodes_explored, 0);
    }

    #[test]
    fn orders() {
        let p = standard::ten_curve_pattern();
        let o = resolve_order(&p, &InsertionOrder::DegreeDescending).unwrap();
        assert_eq!(o.len(), 10);
        assert!(resolve_order(&p, &InsertionOrder::Labels(vec!["a".into()])).is_err());
    }

    #[test]
    fn arc_betweenness() {
        assert!(ArcConstraint::holds(&[0, 1, 2], 0, 2, 1));
        assert!(!ArcConstraint::holds(&[0, 2, 1], 0, 2, 1));
        assert!(ArcConstraint::holds(&[2, 1, 3, 0], 0, 3, 2));
        assert!(ArcConstraint::holds(&[0, 2], 0, 2, 1));
    }

    #[test]
    fn constrained_witness_respects_placement() {
        let p = standard::eleven_curve_pattern();
        for c in standard::u_placements() {
            let cfg = SearchConfig {
                constraints: vec![c.clone()],
                ..Default::default()
            };
            let r = min_genus(&p, 5, &cfg).unwrap();
            let w = r.witness().expect("realizable");
            let ix = |l: &str| p.index_of(l).unwrap();
            assert!(ArcConstraint::holds(
                &w.visit_order[ix(&c.curve)],
                ix(&c.from),
                ix(&c.to),
                ix(&c.member)
            ));
        }
        let bad = SearchConfig {
            constraints: vec![ArcConstraint::new("a", "b", "c", "u")],
            ..Default::default()
        };
        assert!(min_genus(&p, 5, &bad).is_err());
    }

    #[test]
    fn node_cap_is_inconclusive() {
        let cfg = SearchConfig {
            node_cap: Some(10),
            frontier_target: 1,
            ..Default::default()
        };
        let err = min_genus(&standard::ten_curve_pattern(), 5, &cfg).unwrap_err();
        assert!(matches!(err, Error::Inconclusive { .. }));
    }
}
