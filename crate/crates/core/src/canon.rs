//! Canonical labeling and isomorphism of MMP hypergraphs.
//!
//! Works on the vertex/hyperedge incidence graph: ordered partitions are
//! refined to equitable ones, non-singleton cells are individualized, and
//! the lexicographically smallest leaf certificate wins. Automorphisms
//! discovered at equal leaves prune sibling branches in the same orbit.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Mmph, Symbol, Vertex};

/// Default search-node budget for canonicalization.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Vertices renamed `Symbol(label)`, hyperedges sorted.
    pub mmph: Mmph,
    /// Sorted hyperedge list under canonical labels. Equal iff isomorphic.
    pub certificate: String,
    /// Canonical label of each vertex of the input.
    pub labeling: Vec<u32>,
}

type Cells = Vec<Vec<u32>>;
type Certificate = Vec<Vec<u32>>;

struct Canonizer<'a> {
    h: &'a Mmph,
    adj: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
    first: Option<(Certificate, Vec<u32>)>,
    best: Option<(Certificate, Vec<u32>)>,
    generators: Vec<Vec<u32>>,
    edge_index: HashMap<Vec<Vertex>, usize>,
}

impl<'a> Canonizer<'a> {
    fn new(h: &'a Mmph, budget: u64) -> Canonizer<'a> {
        let k = h.k();
        let mut adj = vec![Vec::new(); k + h.l()];
        for (i, e) in h.edges().iter().enumerate() {
            let node = (k + i) as u32;
            for &v in e {
                adj[v as usize].push(node);
                adj[node as usize].push(v);
            }
        }
        let edge_index = h
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut s = e.clone();
                s.sort_unstable();
                (s, i)
            })
            .collect();
        Canonizer {
            h,
            adj,
            nodes: 0,
            budget,
            first: None,
            best: None,
            generators: Vec::new(),
            edge_index,
        }
    }

    /// Splits cells by the multiset of neighbor cells until stable. Cell
    /// order depends only on invariants, never on node ids.
    fn refine(&self, mut cells: Cells) -> Cells {
        let total = self.adj.len();
        let mut cell_of = vec![0usize; total];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &x in cell {
                    cell_of[x as usize] = i;
                }
            }
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, u32)> = cell
                    .iter()
                    .map(|&x| {
                        let mut sig: Vec<usize> = self.adj[x as usize].iter().map(|&y| cell_of[y as usize]).collect();
                        sig.sort_unstable();
                        (sig, x)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|p| p.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let k = self.h.k();
        let mut label = vec![0u32; self.adj.len()];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0] as usize] = pos as u32;
        }
        let mut cert: Certificate = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<u32> = e.iter().map(|&v| label[v as usize]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        cert.sort_unstable();
        let vertex_label = label[..k].to_vec();
        match &self.best {
            None => {
                self.first = Some((cert.clone(), vertex_label.clone()));
                self.best = Some((cert, vertex_label));
            }
            Some((best, best_label)) => {
                if cert == *best {
                    let g = self.automorphism(best_label, &vertex_label);
                    self.generators.push(g);
                } else {
                    let (first, first_label) = self.first.as_ref().unwrap();
                    if cert == *first {
                        let g = self.automorphism(first_label, &vertex_label);
                        self.generators.push(g);
                    }
                    if cert < *best {
                        self.best = Some((cert, vertex_label));
                    }
                }
            }
        }
    }

    /// Node permutation sending each vertex to the vertex holding the same
    /// label under `reference`.
    fn automorphism(&self, reference: &[u32], labels: &[u32]) -> Vec<u32> {
        let k = self.h.k();
        let mut inverse = vec![0u32; k];
        for (v, &lab) in reference.iter().enumerate() {
            inverse[lab as usize] = v as u32;
        }
        let mut g: Vec<u32> = labels.iter().map(|&lab| inverse[lab as usize]).collect();
        for e in self.h.edges() {
            let mut image: Vec<Vertex> = e.iter().map(|&v| g[v as usize]).collect();
            image.sort_unstable();
            g.push((k + self.edge_index[&image]) as u32);
        }
        g
    }

    /// Orbit representative of every node under automorphisms that fix all
    /// of `prefix`.
    fn orbits(&self, prefix: &[u32]) -> Vec<u32> {
        let mut parent: Vec<u32> = (0..self.adj.len() as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p as usize] != p) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x as u32), find(&mut parent, y));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..parent.len() as u32).map(|x| find(&mut parent, x)).collect()
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<u32>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return Ok(());
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        let mut known_generators = usize::MAX;
        let mut orbit = Vec::new();
        for x in candidates {
            if !explored.is_empty() {
                if known_generators != self.generators.len() {
                    orbit = self.orbits(prefix);
                    known_generators = self.generators.len();
                }
                if explored.iter().any(|&y| orbit[y as usize] == orbit[x as usize]) {
                    continue;
                }
            }
            explored.push(x);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![x]);
            child.push(cells[target].iter().copied().filter(|&y| y != x).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(x);
            self.search(child, prefix)?;
            prefix.pop();
        }
        Ok(())
    }
}

pub fn canonical_form(h: &Mmph) -> Result<CanonicalForm> {
    canonical_form_with_budget(h, DEFAULT_BUDGET)
}

pub fn canonical_form_with_budget(h: &Mmph, budget: u64) -> Result<CanonicalForm> {
    let k = h.k();
    let mut c = Canonizer::new(h, budget);
    let initial: Cells = [(0..k as u32).collect::<Vec<_>>(), (k as u32..(k + h.l()) as u32).collect()]
        .into_iter()
        .filter(|cell: &Vec<u32>| !cell.is_empty())
        .collect();
    if initial.is_empty() {
        return Ok(CanonicalForm { mmph: Mmph::empty(), certificate: "0:0:".into(), labeling: Vec::new() });
    }
    c.search(initial, &mut Vec::new())?;
    let (cert, labeling) = c.best.expect("search reaches a leaf");
    let symbols = (0..k as u32).map(Symbol).collect();
    let mmph = Mmph::new(symbols, cert.clone()).expect("relabeling preserves validity");
    let body: Vec<String> = cert
        .iter()
        .map(|e| e.iter().map(u32::to_string).collect::<Vec<_>>().join("."))
        .collect();
    let certificate = format!("{}:{}:{}", k, h.l(), body.join(","));
    Ok(CanonicalForm { mmph, certificate, labeling })
}

/// A vertex bijection `a → b` (indexed by vertices of `a`) preserving
/// hyperedges both ways, or `None` when not isomorphic.
pub fn is_isomorphic(a: &Mmph, b: &Mmph) -> Result<Option<Vec<Vertex>>> {
    if a.k() != b.k() || a.l() != b.l() {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.certificate != cb.certificate {
        return Ok(None);
    }
    let mut inverse = vec![0 as Vertex; b.k()];
    for (v, &lab) in cb.labeling.iter().enumerate() {
        inverse[lab as usize] = v as Vertex;
    }
    let map: Vec<Vertex> = ca.labeling.iter().map(|&lab| inverse[lab as usize]).collect();
    debug_assert!(verify_isomorphism(a, b, &map));
    Ok(Some(map))
}

/// Checks that `map` is a bijection carrying the hyperedge set of `a`
/// exactly onto that of `b`.
pub fn verify_isomorphism(a: &Mmph, b: &Mmph, map: &[Vertex]) -> bool {
    if a.k() != b.k() || a.l() != b.l() || map.len() != a.k() {
        return false;
    }
    let mut hit = vec![false; b.k()];
    for &v in map {
        if v as usize >= b.k() || std::mem::replace(&mut hit[v as usize], true) {
            return false;
        }
    }
    let mut image: Vec<Vec<Vertex>> = a
        .edges()
        .iter()
        .map(|e| {
            let mut s: Vec<Vertex> = e.iter().map(|&v| map[v as usize]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    image.sort();
    let mut target: Vec<Vec<Vertex>> = b
        .edges()
        .iter()
        .map(|e| {
            let mut s = e.clone();
            s.sort_unstable();
            s
        })
        .collect();
    target.sort();
    image == target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_mmph;

    fn h(text: &str) -> Mmph {
        parse_mmph(text).unwrap()
    }

    #[test]
    fn triangle_vs_square() {
        assert_eq!(is_isomorphic(&h("12,23,31."), &h("12,23,34,41.")).unwrap(), None);
    }

    #[test]
    fn relabeled_copies_match() {
        let a = h("123,145,267,389,9YA,5ZA.");
        let b = h("ZYX,ZWV,YUT,XSR,RAB,WCB.");
        let map = is_isomorphic(&a, &b).unwrap().expect("isomorphic");
        assert!(verify_isomorphism(&a, &b, &map));
        assert_eq!(canonical_form(&a).unwrap().certificate, canonical_form(&b).unwrap().certificate);
    }

    #[test]
    fn same_degrees_different_structure() {
        // two triangles vs a hexagon: both 2-regular on 6 vertices
        let a = h("12,23,31,45,56,64.");
        let b = h("12,23,34,45,56,61.");
        assert_eq!(is_isomorphic(&a, &b).unwrap(), None);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let a = h("123,145,267,389,9YA,5ZA,4aB,6bB.");
        let c = canonical_form(&a).unwrap();
        let cc = canonical_form(&c.mmph).unwrap();
        assert_eq!(c.certificate, cc.certificate);
    }

    #[test]
    fn budget_is_enforced() {
        let a = h("12,23,34,45,56,61.");
        assert!(matches!(canonical_form_with_budget(&a, 1), Err(Error::BudgetExhausted(1))));
    }
}
