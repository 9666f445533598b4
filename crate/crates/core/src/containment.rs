//! Embedding of one MMPH in another: an injective vertex map under which
//! every pattern hyperedge lands inside some target hyperedge.
//!
//! Multiplicities are not compared. Two pattern hyperedges may land in the
//! same target hyperedge, so a pattern vertex can have higher multiplicity
//! than its image. The filters used here (2-section degree, largest incident
//! hyperedge) survive that.

use serde::Serialize;

use crate::hypergraph::{Mmph, Vertex};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "contained", rename_all = "snake_case")]
pub enum Containment {
    /// `mapping[v]` is the target vertex of pattern vertex `v`.
    Embedded { mapping: Vec<Vertex> },
    NotContained,
    Indeterminate { nodes: u64 },
}

impl Containment {
    pub fn mapping(&self) -> Option<&[Vertex]> {
        match self {
            Containment::Embedded { mapping } => Some(mapping),
            _ => None,
        }
    }
}

/// Vertices sharing a hyperedge with each vertex, sorted.
fn two_section(h: &Mmph) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); h.k()];
    for e in h.edges() {
        for &a in e {
            for &b in e {
                if a != b {
                    adj[a as usize].push(b);
                }
            }
        }
    }
    for row in &mut adj {
        row.sort_unstable();
        row.dedup();
    }
    adj
}

fn largest_incident(h: &Mmph) -> Vec<usize> {
    let mut out = vec![0; h.k()];
    for e in h.edges() {
        for &v in e {
            out[v as usize] = out[v as usize].max(e.len());
        }
    }
    out
}

struct Matcher<'a> {
    p: &'a Mmph,
    t: &'a Mmph,
    p_inc: Vec<Vec<usize>>,
    t_inc: Vec<Vec<usize>>,
    t_adj: Vec<Vec<Vertex>>,
    allowed: Vec<Vec<Vertex>>,
    order: Vec<Vertex>,
    /// Mapped neighbor of each vertex in `order` at the time it is placed.
    anchor: Vec<Option<Vertex>>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Matcher<'_> {
    /// Mapped members of each hyperedge through `u` fit in a common target
    /// hyperedge.
    fn consistent(&self, u: Vertex) -> bool {
        self.p_inc[u as usize].iter().all(|&e| {
            let images: Vec<Vertex> = self.p.edge(e).iter().filter_map(|&v| self.map[v as usize]).collect();
            let first = images[0] as usize;
            self.t_inc[first].iter().any(|&f| {
                let edge = self.t.edge(f);
                edge.len() >= self.p.kappa(e) && images.iter().all(|x| edge.contains(x))
            })
        })
    }

    fn search(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let u = self.order[depth];
        let candidates: Vec<Vertex> = match self.anchor[depth] {
            Some(w) => {
                let fw = self.map[w as usize].expect("anchor mapped earlier");
                self.t_adj[fw as usize]
                    .iter()
                    .copied()
                    .filter(|x| self.allowed[u as usize].binary_search(x).is_ok())
                    .collect()
            }
            None => self.allowed[u as usize].clone(),
        };
        for x in candidates {
            if self.used[x as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.map[u as usize] = Some(x);
            self.used[x as usize] = true;
            if self.consistent(u) && self.search(depth + 1)? {
                return Some(true);
            }
            self.map[u as usize] = None;
            self.used[x as usize] = false;
        }
        Some(false)
    }
}

pub fn is_subhypergraph(pattern: &Mmph, target: &Mmph) -> Containment {
    is_subhypergraph_with_budget(pattern, target, DEFAULT_BUDGET)
}

pub fn is_subhypergraph_with_budget(pattern: &Mmph, target: &Mmph, budget: u64) -> Containment {
    if pattern.k() > target.k() || pattern.n() > target.n() {
        return Containment::NotContained;
    }
    let p_adj = two_section(pattern);
    let t_adj = two_section(target);
    let p_big = largest_incident(pattern);
    let t_big = largest_incident(target);
    let allowed: Vec<Vec<Vertex>> = pattern
        .vertices()
        .map(|u| {
            target
                .vertices()
                .filter(|&x| {
                    p_adj[u as usize].len() <= t_adj[x as usize].len() && p_big[u as usize] <= t_big[x as usize]
                })
                .collect()
        })
        .collect();
    if allowed.iter().any(Vec::is_empty) {
        return Containment::NotContained;
    }

    // Grow the order through placed neighbors; prefer high degree, then
    // few candidates.
    let k = pattern.k();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    let mut anchor = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k as Vertex)
            .filter(|&u| !placed[u as usize])
            .max_by_key(|&u| {
                let linked = p_adj[u as usize].iter().filter(|&&w| placed[w as usize]).count();
                (
                    linked > 0,
                    linked,
                    p_adj[u as usize].len(),
                    std::cmp::Reverse(allowed[u as usize].len()),
                    std::cmp::Reverse(u),
                )
            })
            .unwrap();
        let a = p_adj[next as usize].iter().copied().find(|&w| placed[w as usize]);
        placed[next as usize] = true;
        order.push(next);
        anchor.push(a);
    }

    let mut m = Matcher {
        p: pattern,
        t: target,
        p_inc: pattern.incidence(),
        t_inc: target.incidence(),
        t_adj,
        allowed,
        order,
        anchor,
        map: vec![None; k],
        used: vec![false; target.k()],
        nodes: 0,
        budget,
    };
    match m.search(0) {
        Some(true) => {
            let mapping: Vec<Vertex> = m.map.iter().map(|x| x.expect("complete map")).collect();
            debug_assert!(verify_embedding(pattern, target, &mapping));
            Containment::Embedded { mapping }
        }
        Some(false) => Containment::NotContained,
        None => Containment::Indeterminate { nodes: budget },
    }
}

/// Re-checks injectivity and that every pattern hyperedge maps inside a
/// target hyperedge.
pub fn verify_embedding(pattern: &Mmph, target: &Mmph, mapping: &[Vertex]) -> bool {
    if mapping.len() != pattern.k() {
        return false;
    }
    let mut used = vec![false; target.k()];
    for &x in mapping {
        if x as usize >= target.k() || std::mem::replace(&mut used[x as usize], true) {
            return false;
        }
    }
    pattern.edges().iter().all(|e| {
        target
            .edges()
            .iter()
            .any(|f| e.iter().all(|&v| f.contains(&mapping[v as usize])))
    })
}
