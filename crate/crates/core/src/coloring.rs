//! Contextuality decision.
//!
//! A 0–1 assignment satisfies a hypergraph when every hyperedge holds
//! exactly one vertex valued 1. That is an exact cover problem with one
//! column per hyperedge and one row per vertex (covering the hyperedges
//! containing it). The hypergraph is contextual iff no cover exists.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Mmph, Vertex};

/// Vertices valued 1; every other vertex is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub ones: Vec<Vertex>,
}

impl Assignment {
    pub fn values(&self, k: usize) -> Vec<bool> {
        let mut values = vec![false; k];
        for &v in &self.ones {
            values[v as usize] = true;
        }
        values
    }

    /// Exactly one vertex valued 1 in each hyperedge.
    pub fn satisfies(&self, h: &Mmph) -> bool {
        let values = self.values(h.k());
        h.edges().iter().all(|e| e.iter().filter(|&&v| values[v as usize]).count() == 1)
    }
}

/// Outcome of a (possibly budgeted) search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Assignment(Assignment),
    Contextual,
    /// Node budget ran out before the search finished.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub decision: Decision,
    pub nodes: u64,
    pub millis: u128,
}

/// Array-backed dancing links. Node 0 is the root, nodes `1..=cols` are
/// column headers, the rest are body nodes.
struct Links {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row: Vec<Vertex>,
    size: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Links {
    fn new(columns: usize, rows: &[(Vertex, Vec<usize>)], budget: u64) -> Links {
        let cap = 1 + columns + rows.iter().map(|r| r.1.len()).sum::<usize>();
        let mut l = Links {
            left: Vec::with_capacity(cap),
            right: Vec::with_capacity(cap),
            up: Vec::with_capacity(cap),
            down: Vec::with_capacity(cap),
            column: Vec::with_capacity(cap),
            row: Vec::with_capacity(cap),
            size: vec![0; columns + 1],
            nodes: 0,
            budget,
        };
        for i in 0..=columns {
            l.left.push(if i == 0 { columns } else { i - 1 });
            l.right.push(if i == columns { 0 } else { i + 1 });
            l.up.push(i);
            l.down.push(i);
            l.column.push(i);
            l.row.push(Vertex::MAX);
        }
        for (vertex, cols) in rows {
            let first = l.left.len();
            for (j, &c) in cols.iter().enumerate() {
                let node = l.left.len();
                let header = c + 1;
                l.left.push(if j == 0 { first + cols.len() - 1 } else { node - 1 });
                l.right.push(if j + 1 == cols.len() { first } else { node + 1 });
                l.up.push(l.up[header]);
                l.down.push(header);
                let above = l.up[header];
                l.down[above] = node;
                l.up[header] = node;
                l.column.push(header);
                l.row.push(*vertex);
                l.size[header] += 1;
            }
        }
        l
    }

    fn cover(&mut self, c: usize) {
        let (lc, rc) = (self.left[c], self.right[c]);
        self.right[lc] = rc;
        self.left[rc] = lc;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.column[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (lc, rc) = (self.left[c], self.right[c]);
        self.right[lc] = c;
        self.left[rc] = c;
    }

    /// Depth-first search for one cover. `Err(())` when out of budget.
    fn search(&mut self, chosen: &mut Vec<Vertex>) -> std::result::Result<bool, ()> {
        if self.right[0] == 0 {
            return Ok(true);
        }
        // fewest remaining candidates; ties go to the lowest hyperedge index
        let mut c = self.right[0];
        let mut j = self.right[c];
        while j != 0 {
            if self.size[j] < self.size[c] {
                c = j;
            }
            j = self.right[j];
        }
        if self.size[c] == 0 {
            return Ok(false);
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            chosen.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search(chosen)? {
                return Ok(true);
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            chosen.pop();
            r = self.down[r];
        }
        self.uncover(c);
        Ok(false)
    }
}

/// Exact-cover search with a node budget. Rows are tried in alphabet order
/// of vertex symbols, so results and node counts are reproducible.
pub fn decide(h: &Mmph, budget: u64) -> SearchReport {
    let start = Instant::now();
    let inc = h.incidence();
    let rows: Vec<(Vertex, Vec<usize>)> = h
        .vertices_by_symbol()
        .into_iter()
        .map(|v| (v, inc[v as usize].clone()))
        .collect();
    let mut links = Links::new(h.l(), &rows, budget);
    let mut chosen = Vec::new();
    let decision = match links.search(&mut chosen) {
        Ok(true) => {
            chosen.sort_unstable();
            Decision::Assignment(Assignment { ones: chosen })
        }
        Ok(false) => Decision::Contextual,
        Err(()) => Decision::Undecided,
    };
    SearchReport { decision, nodes: links.nodes, millis: start.elapsed().as_millis() }
}

/// A valid 0–1 assignment if one exists (the set is non-contextual).
pub fn find_assignment(h: &Mmph) -> Option<Assignment> {
    match decide(h, u64::MAX).decision {
        Decision::Assignment(a) => Some(a),
        Decision::Contextual => None,
        Decision::Undecided => unreachable!("unbounded search"),
    }
}

pub fn is_contextual(h: &Mmph) -> bool {
    find_assignment(h).is_none()
}

/// Largest vertex count accepted by [`brute_force_assignment`].
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Exhaustive enumeration of all 2^k assignments in binary counting order.
pub fn brute_force_assignment(h: &Mmph) -> Result<Option<Assignment>> {
    let k = h.k();
    if k > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { k, limit: BRUTE_FORCE_LIMIT });
    }
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    for bits in 0u32..(1u32 << k) {
        if masks.iter().all(|&m| (m & bits).count_ones() == 1) {
            let ones = (0..k as Vertex).filter(|&v| bits >> v & 1 == 1).collect();
            return Ok(Some(Assignment { ones }));
        }
    }
    Ok(None)
}

/// Naming convention for contextual sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// KS = contextual with all hyperedges complete.
    #[default]
    Standard,
    /// Calls non-KS sets "KS" and KS sets "extended KS".
    Cabello,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    NonContextual,
    /// Contextual and every hyperedge has n vertices.
    #[serde(rename = "KS")]
    Ks,
    /// Contextual with some hyperedge smaller than n.
    #[serde(rename = "NonKS")]
    NonKs,
}

impl Classification {
    pub fn name(self, convention: Convention) -> &'static str {
        match (self, convention) {
            (Classification::NonContextual, _) => "NonContextual",
            (Classification::Ks, Convention::Standard) => "KS",
            (Classification::NonKs, Convention::Standard) => "NonKS",
            (Classification::Ks, Convention::Cabello) => "extended KS",
            (Classification::NonKs, Convention::Cabello) => "KS",
        }
    }

    /// The name under the other convention.
    pub fn alias(self, convention: Convention) -> &'static str {
        match (self, convention) {
            (Classification::NonContextual, _) => "non-contextual",
            (Classification::Ks, Convention::Standard) => "extended KS (Cabello notation)",
            (Classification::NonKs, Convention::Standard) => "KS (Cabello notation)",
            (Classification::Ks, Convention::Cabello) => "KS (standard notation)",
            (Classification::NonKs, Convention::Cabello) => "non-KS (standard notation)",
        }
    }
}

/// Classification given a known contextuality verdict.
pub fn classify_with(h: &Mmph, contextual: bool) -> Classification {
    if !contextual {
        Classification::NonContextual
    } else if h.complete_bases() == h.l() {
        Classification::Ks
    } else {
        Classification::NonKs
    }
}

pub fn classify(h: &Mmph) -> Classification {
    classify_with(h, is_contextual(h))
}
