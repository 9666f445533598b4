//! Criticality, reduction to critical sets, extensions and searches for
//! small contextual sub-hypergraphs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::coloring::{decide, is_contextual, Decision};
use crate::coords::Coordinatization;
use crate::error::{Error, Result};
use crate::generate::completion;
use crate::hypergraph::{Mmph, Stats, Symbol, Vertex};
use crate::ring::Ray;

/// Contextual, and every single-hyperedge removal leaves a non-contextual set.
pub fn is_critical(h: &Mmph) -> bool {
    is_contextual(h) && (0..h.l()).into_par_iter().all(|i| !removal_contextual(h, i))
}

fn removal_contextual(h: &Mmph, i: usize) -> bool {
    match h.remove_hyperedge(i) {
        Ok(g) => is_contextual(&g),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionTrace {
    pub seed: u64,
    /// Removed hyperedges, as indices into the input, in removal order.
    pub removed: Vec<usize>,
    #[serde(skip)]
    pub mmph: Mmph,
    pub stats: Stats,
}

/// Removes hyperedges in seed-shuffled order whenever the rest stays
/// contextual. Non-contextuality is inherited by sub-hypergraphs, so one
/// pass leaves a critical set.
pub fn reduce_to_critical(h: &Mmph, seed: u64) -> Result<ReductionTrace> {
    if !is_contextual(h) {
        return Err(Error::NotContextual);
    }
    let mut order: Vec<usize> = (0..h.l()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut alive = vec![true; h.l()];
    let mut removed = Vec::new();
    for i in order {
        alive[i] = false;
        let keep: Vec<usize> = (0..h.l()).filter(|&j| alive[j]).collect();
        let still = !keep.is_empty() && is_contextual(&h.edge_subset(&keep)?);
        if still {
            removed.push(i);
        } else {
            alive[i] = true;
        }
    }
    let keep: Vec<usize> = (0..h.l()).filter(|&j| alive[j]).collect();
    let mmph = h.edge_subset(&keep)?;
    let stats = mmph.stats();
    Ok(ReductionTrace { seed, removed, mmph, stats })
}

/// One reduction per seed, run concurrently, returned in seed order.
pub fn reduce_trials(h: &Mmph, seeds: &[u64]) -> Result<Vec<ReductionTrace>> {
    if !is_contextual(h) {
        return Err(Error::NotContextual);
    }
    seeds.par_iter().map(|&s| reduce_to_critical(h, s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddedVertex {
    pub edge: usize,
    pub symbol: Symbol,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub mmph: Mmph,
    pub coords: Coordinatization,
    pub added: Vec<AddedVertex>,
    /// Hyperedges with fewer than n − 1 vertices, left as they were.
    pub skipped: Vec<usize>,
    /// `(kept, absorbed)` pairs of vertices carrying one ray.
    pub merged: Vec<(Symbol, Symbol)>,
    /// Hyperedges (indices after weak extension) that merging made
    /// identical to an earlier one.
    pub dropped_duplicates: Vec<usize>,
}

/// Adds one multiplicity-1 vertex, carrying the completion ray, to every
/// hyperedge of size n − 1, where n is the coordinatization dimension.
pub fn weak_extend(h: &Mmph, c: &Coordinatization) -> Result<Extension> {
    extend_selected(h, c, |_| true)
}

fn extend_selected(h: &Mmph, c: &Coordinatization, select: impl Fn(usize) -> bool) -> Result<Extension> {
    if let Some(s) = c.missing(h).first() {
        return Err(Error::MissingCoordinates(s.to_string()));
    }
    let n = c.dim();
    let rays = c.rays_for(h)?;
    let mut skipped = Vec::new();
    let mut completions: Vec<(usize, Ray)> = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.len() >= n {
            continue;
        }
        if e.len() + 1 < n {
            skipped.push(i);
            continue;
        }
        if !select(i) {
            continue;
        }
        let members: Vec<Ray> = e.iter().map(|&v| rays[v as usize].clone()).collect();
        let ray = completion(&members).map_err(|_| Error::InconsistentEdge(i))?;
        completions.push((i, ray));
    }
    let fresh = h.fresh_symbols(completions.len());
    let k = h.k() as Vertex;
    let mmph = h.with_added(fresh.clone(), |edges| {
        for (j, (i, _)) in completions.iter().enumerate() {
            edges[*i].push(k + j as Vertex);
        }
    })?;
    let mut coords = c.restrict(h);
    let mut added = Vec::with_capacity(completions.len());
    for ((i, ray), s) in completions.into_iter().zip(fresh) {
        coords.insert(s, ray.promote(c.ring())?);
        added.push(AddedVertex { edge: i, symbol: s });
    }
    Ok(Extension { mmph, coords, added, skipped, merged: Vec::new(), dropped_duplicates: Vec::new() })
}

/// Weak extension followed by merging every group of vertices with equal
/// rays into the earliest vertex of the group.
pub fn strong_extend(h: &Mmph, c: &Coordinatization) -> Result<Extension> {
    let weak = weak_extend(h, c)?;
    let g = &weak.mmph;
    let rays = weak.coords.rays_for(g)?;
    let mut first: HashMap<&Ray, Vertex> = HashMap::new();
    let mut target: Vec<Vertex> = Vec::with_capacity(g.k());
    let mut merged = Vec::new();
    for v in g.vertices() {
        let t = *first.entry(&rays[v as usize]).or_insert(v);
        if t != v {
            merged.push((g.symbol(t), g.symbol(v)));
        }
        target.push(t);
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(g.l());
    let mut dropped_duplicates = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let mapped: Vec<Vertex> = e.iter().map(|&v| target[v as usize]).collect();
        let distinct: BTreeSet<Vertex> = mapped.iter().copied().collect();
        if distinct.len() != mapped.len() {
            return Err(Error::InconsistentEdge(i));
        }
        if !seen.insert(distinct) {
            dropped_duplicates.push(i);
            continue;
        }
        edges.push(mapped);
    }
    let symbols: Vec<Symbol> = g.symbols().to_vec();
    let absorbed: HashSet<Vertex> = g.vertices().filter(|&v| target[v as usize] != v).collect();
    let mmph = Mmph::from_symbol_edges(
        &edges
            .iter()
            .map(|e| e.iter().map(|&v| symbols[v as usize]).collect())
            .collect::<Vec<_>>(),
    )?;
    debug_assert!(absorbed.iter().all(|&v| mmph.vertex_of(symbols[v as usize]).is_none()));
    let mmph = reorder_like(&mmph, g)?;
    let coords = weak.coords.restrict(&mmph);
    Ok(Extension {
        mmph,
        coords,
        added: weak.added,
        skipped: weak.skipped,
        merged,
        dropped_duplicates,
    })
}

/// Renumbers the vertices of `h` to follow their order in `reference`.
fn reorder_like(h: &Mmph, reference: &Mmph) -> Result<Mmph> {
    let order: Vec<Symbol> = reference.symbols().iter().copied().filter(|&s| h.vertex_of(s).is_some()).collect();
    let index: HashMap<Symbol, Vertex> = order.iter().enumerate().map(|(i, &s)| (s, i as Vertex)).collect();
    let edges = h.edges().iter().map(|e| e.iter().map(|&v| index[&h.symbol(v)]).collect()).collect();
    Mmph::new(order, edges)
}

/// Bounds for [`search_small_contextual`].
#[derive(Clone, Debug, Serialize)]
pub struct SubsetQuery {
    pub max_k: Option<usize>,
    pub max_l: Option<usize>,
    pub max_complete_bases: Option<usize>,
    pub min_complete_bases: Option<usize>,
    /// Report only contextual (true) or only non-contextual (false) hits.
    pub contextual: bool,
    /// Require hits to keep the dimension of the host, so that complete
    /// bases are counted against the same n.
    pub same_dimension: bool,
    /// Also try weak vertex deletions inside complete bases.
    pub vertex_deletions: bool,
    pub budget: u64,
    pub seed: u64,
    pub max_results: usize,
}

impl Default for SubsetQuery {
    fn default() -> Self {
        SubsetQuery {
            max_k: None,
            max_l: None,
            max_complete_bases: None,
            min_complete_bases: None,
            contextual: true,
            same_dimension: true,
            vertex_deletions: true,
            budget: 10_000_000,
            seed: 0,
            max_results: 1,
        }
    }
}

impl SubsetQuery {
    fn admits(&self, h: &Mmph, n: usize) -> bool {
        let bases = h.complete_bases();
        (!self.same_dimension || h.n() == n)
            && self.max_k.is_none_or(|m| h.k() <= m)
            && self.max_l.is_none_or(|m| h.l() <= m)
            && self.max_complete_bases.is_none_or(|m| bases <= m)
            && self.min_complete_bases.is_none_or(|m| bases >= m)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    #[serde(skip)]
    pub mmph: Mmph,
    pub stats: Stats,
    pub certificate: String,
    pub critical: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub nodes: u64,
    pub exhausted: bool,
}

struct Search<'a> {
    h: &'a Mmph,
    q: &'a SubsetQuery,
    nodes: u64,
    found: BTreeMap<String, Mmph>,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.q.budget && self.found.len() < self.q.max_results
    }

    fn done(&self) -> bool {
        self.nodes >= self.q.budget || self.found.len() >= self.q.max_results
    }

    fn consider(&mut self, g: &Mmph) {
        if self.q.admits(g, self.h.n()) && is_contextual(g) == self.q.contextual {
            if let Ok(c) = canonical_form(g) {
                self.found.entry(c.certificate).or_insert_with(|| g.clone());
            }
        }
    }

    /// Connected hyperedge subsets (enumerated once each) of at most
    /// `max_l` hyperedges and `max_k` vertices.
    fn edge_subsets(&mut self, rng: &mut ChaCha8Rng) {
        let h = self.h;
        let l = h.l();
        let cap = self.q.max_l.unwrap_or(l);
        let max_k = self.q.max_k.unwrap_or(usize::MAX);
        let top = h.n();
        let inc = h.incidence();
        let mut rank: Vec<usize> = (0..l).collect();
        rank.shuffle(rng);
        let mut order = vec![0; l];
        for (r, &e) in rank.iter().enumerate() {
            order[e] = r;
        }
        let neighbors: Vec<Vec<usize>> = (0..l)
            .map(|e| {
                let set: BTreeSet<usize> = h.edge(e).iter().flat_map(|&v| inc[v as usize].iter().copied()).filter(|&f| f != e).collect();
                let mut list: Vec<usize> = set.into_iter().collect();
                list.sort_by_key(|&f| order[f]);
                list
            })
            .collect();

        struct State {
            sub: Vec<usize>,
            in_sub: Vec<bool>,
            vcount: Vec<u32>,
            k: usize,
            full_edges: usize,
        }
        let mut st = State {
            sub: Vec::new(),
            in_sub: vec![false; l],
            vcount: vec![0; h.k()],
            k: 0,
            full_edges: 0,
        };
        fn push(st: &mut State, h: &Mmph, e: usize, top: usize) {
            st.sub.push(e);
            st.in_sub[e] = true;
            for &v in h.edge(e) {
                if st.vcount[v as usize] == 0 {
                    st.k += 1;
                }
                st.vcount[v as usize] += 1;
            }
            if h.kappa(e) == top {
                st.full_edges += 1;
            }
        }
        fn pop(st: &mut State, h: &Mmph, top: usize) {
            let e = st.sub.pop().unwrap();
            st.in_sub[e] = false;
            for &v in h.edge(e) {
                st.vcount[v as usize] -= 1;
                if st.vcount[v as usize] == 0 {
                    st.k -= 1;
                }
            }
            if h.kappa(e) == top {
                st.full_edges -= 1;
            }
        }

        #[allow(clippy::too_many_arguments)]
        fn extend(
            s: &mut Search<'_>,
            st: &mut State,
            ext: Vec<usize>,
            root: usize,
            order: &[usize],
            neighbors: &[Vec<usize>],
            cap: usize,
            max_k: usize,
            top: usize,
        ) {
            if !s.tick() {
                return;
            }
            // Once a complete basis of the host dimension is present, the
            // count can only grow.
            let bases_exceeded = st.full_edges > 0 && s.q.max_complete_bases.is_some_and(|m| st.full_edges > m);
            if st.k > max_k || bases_exceeded {
                return;
            }
            let g = s.h.edge_subset(&st.sub).expect("nonempty subset");
            s.consider(&g);
            if st.sub.len() == cap {
                return;
            }
            let mut ext = ext;
            while let Some(w) = ext.pop() {
                if s.done() {
                    return;
                }
                let mut next = ext.clone();
                for &u in &neighbors[w] {
                    if order[u] > order[root]
                        && !st.in_sub[u]
                        && !ext.contains(&u)
                        && !st.sub.iter().any(|&x| neighbors[x].contains(&u))
                        && !next.contains(&u)
                    {
                        next.push(u);
                    }
                }
                push(st, s.h, w, top);
                extend(s, st, next, root, order, neighbors, cap, max_k, top);
                pop(st, s.h, top);
            }
        }

        for &root in &rank {
            if self.done() {
                return;
            }
            let ext: Vec<usize> = neighbors[root].iter().copied().filter(|&u| order[u] > order[root]).rev().collect();
            push(&mut st, h, root, top);
            extend(self, &mut st, ext, root, &order, &neighbors, cap, max_k, top);
            pop(&mut st, h, top);
        }
    }

    /// Random greedy reductions, each optionally followed by weak deletions
    /// of vertices in complete bases while contextuality survives.
    fn random_reductions(&mut self, rng: &mut ChaCha8Rng) {
        if !self.q.contextual || !is_contextual(self.h) {
            return;
        }
        while !self.done() {
            let seed: u64 = rng.gen();
            // a reduction runs one contextuality decision per hyperedge
            self.nodes += self.h.l() as u64;
            let Ok(trace) = reduce_to_critical(self.h, seed) else { return };
            let mut g = trace.mmph;
            self.consider(&g);
            if !self.q.vertex_deletions {
                continue;
            }
            let mut trial = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let top = g.n();
                let mut candidates: Vec<Vertex> = g
                    .edges()
                    .iter()
                    .filter(|e| e.len() == top && top > 2)
                    .flatten()
                    .copied()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                candidates.shuffle(&mut trial);
                let mut progressed = false;
                for v in candidates {
                    if self.done() {
                        return;
                    }
                    self.nodes += 1;
                    let Ok(d) = g.delete_vertex(v) else { continue };
                    if d.l() == g.l() && matches!(decide(&d, u64::MAX).decision, Decision::Contextual) {
                        g = reduce_to_critical(&d, trial.gen()).map(|t| t.mmph).unwrap_or(d);
                        self.consider(&g);
                        progressed = true;
                        break;
                    }
                }
                if !progressed {
                    break;
                }
            }
        }
    }
}

/// Budgeted search for sub-hypergraphs meeting `q`: connected hyperedge
/// subsets first, then randomized reductions with vertex deletions.
/// Deterministic for a fixed query; may miss hits when the budget runs out.
pub fn search_small_contextual(h: &Mmph, q: &SubsetQuery) -> SearchOutcome {
    let mut s = Search { h, q, nodes: 0, found: BTreeMap::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(q.seed);
    if h.l() > 0 && q.max_results > 0 {
        if q.max_l.is_some() || q.max_k.is_some() {
            s.edge_subsets(&mut rng);
        }
        s.random_reductions(&mut rng);
    }
    let exhausted = s.nodes >= q.budget;
    let nodes = s.nodes.min(q.budget);
    let hits = s
        .found
        .into_iter()
        .map(|(certificate, mmph)| SearchHit {
            stats: mmph.stats(),
            critical: is_critical(&mmph),
            certificate,
            mmph,
        })
        .collect();
    SearchOutcome { hits, nodes, exhausted }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialChoice {
    /// Deficient hyperedges left unextended.
    pub kept: Vec<usize>,
    pub k: usize,
    pub l: usize,
    pub complete_bases: usize,
    pub contextual: bool,
    #[serde(skip)]
    pub mmph: Mmph,
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i + 1) as u128)
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (r - cur.len()) {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Leaves `keep_deficient` of the size-(n−1) hyperedges unextended and
/// extends the rest, for every choice (or `limit` seeded random choices
/// when there are more).
pub fn partial_extension_search(
    h: &Mmph,
    c: &Coordinatization,
    keep_deficient: usize,
    seed: u64,
    limit: usize,
) -> Result<Vec<PartialChoice>> {
    let n = c.dim();
    let deficient: Vec<usize> = (0..h.l()).filter(|&i| h.kappa(i) + 1 == n).collect();
    if keep_deficient > deficient.len() {
        return Err(Error::InvalidQuery(format!(
            "{keep_deficient} exceeds the {} hyperedges of size {}",
            deficient.len(),
            n - 1
        )));
    }
    let total = binomial(deficient.len(), keep_deficient);
    let picks: Vec<Vec<usize>> = if total <= limit as u128 {
        combinations(deficient.len(), keep_deficient)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        while seen.len() < limit {
            let mut idx: Vec<usize> = rand::seq::index::sample(&mut rng, deficient.len(), keep_deficient).into_vec();
            idx.sort_unstable();
            seen.insert(idx);
        }
        seen.into_iter().collect()
    };
    picks
        .into_par_iter()
        .map(|pick| {
            let kept: Vec<usize> = pick.iter().map(|&i| deficient[i]).collect();
            let ext = extend_selected(h, c, |i| !kept.contains(&i))?;
            let g = ext.mmph;
            Ok(PartialChoice {
                k: g.k(),
                l: g.l(),
                complete_bases: g.complete_bases(),
                contextual: is_contextual(&g),
                kept,
                mmph: g,
            })
        })
        .collect()
}
