//! The MMP hypergraph value type and its structural edits.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

fn alphabet() -> &'static [char] {
    static ALPHABET: OnceLock<Vec<char>> = OnceLock::new();
    ALPHABET.get_or_init(|| {
        let mut symbols: Vec<char> = ('1'..='9').chain('A'..='Z').chain('a'..='z').collect();
        symbols.extend(
            (0x21u8..0x7f)
                .map(char::from)
                .filter(|c| c.is_ascii_punctuation() && !matches!(c, ',' | '.' | '=' | '{' | '}')),
        );
        symbols
    })
}

/// Number of single-character vertex symbols available to the MMP notation.
pub fn alphabet_len() -> usize {
    alphabet().len()
}

/// A vertex name: a position in the MMP alphabet. Positions beyond the
/// alphabet are valid in memory but cannot be written as MMP text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn from_char(c: char) -> Option<Symbol> {
        alphabet().iter().position(|&a| a == c).map(|i| Symbol(i as u32))
    }

    pub fn to_char(self) -> Option<char> {
        alphabet().get(self.0 as usize).copied()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "<{}>", self.0 + 1),
        }
    }
}

/// Dense vertex index into an [`Mmph`].
pub type Vertex = u32;

/// A k-l MMP hypergraph. Vertices are dense indices carrying alphabet
/// symbols; hyperedges keep document order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mmph {
    symbols: Vec<Symbol>,
    edges: Vec<Vec<Vertex>>,
}

impl Mmph {
    /// Builds a hypergraph from hyperedges given as symbol lists. Vertex
    /// indices follow first appearance.
    pub fn from_symbol_edges(edges: &[Vec<Symbol>]) -> Result<Mmph> {
        let mut index: HashMap<Symbol, Vertex> = HashMap::new();
        let mut symbols = Vec::new();
        let edges = edges
            .iter()
            .map(|edge| {
                edge.iter()
                    .map(|&s| {
                        *index.entry(s).or_insert_with(|| {
                            symbols.push(s);
                            (symbols.len() - 1) as Vertex
                        })
                    })
                    .collect()
            })
            .collect();
        Mmph::new(symbols, edges)
    }

    /// Validates the MMPH invariants: every hyperedge has at least two
    /// distinct vertices, no hyperedge repeats, every vertex is used.
    pub fn new(symbols: Vec<Symbol>, edges: Vec<Vec<Vertex>>) -> Result<Mmph> {
        let mut seen: HashMap<Vec<Vertex>, usize> = HashMap::new();
        let mut used = vec![false; symbols.len()];
        for (i, edge) in edges.iter().enumerate() {
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall { edge: i, size: edge.len() });
            }
            let mut sorted = edge.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex {
                    edge: i,
                    symbol: symbols[w[0] as usize].to_string(),
                });
            }
            for &v in edge {
                used[v as usize] = true;
            }
            if let Some(&first) = seen.get(&sorted) {
                return Err(Error::DuplicateEdge { edge: i, first });
            }
            seen.insert(sorted, i);
        }
        debug_assert!(used.iter().all(|&u| u), "vertex without hyperedge");
        let mut distinct = symbols.clone();
        distinct.sort_unstable();
        distinct.dedup();
        debug_assert_eq!(distinct.len(), symbols.len(), "duplicate vertex symbol");
        Ok(Mmph { symbols, edges })
    }

    /// Builds from edges over arbitrary vertex ids, dropping unused ids and
    /// keeping the given symbols for survivors.
    fn compacted(symbols: &[Symbol], edges: Vec<Vec<Vertex>>) -> Result<Mmph> {
        let mut remap = vec![Vertex::MAX; symbols.len()];
        let mut kept = Vec::new();
        // keep the original vertex order, not first appearance
        for edge in &edges {
            for &v in edge {
                remap[v as usize] = 0;
            }
        }
        for (v, slot) in remap.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = kept.len() as Vertex;
                kept.push(symbols[v]);
            }
        }
        let edges = edges
            .into_iter()
            .map(|e| e.into_iter().map(|v| remap[v as usize]).collect())
            .collect();
        Mmph::new(kept, edges)
    }

    pub fn empty() -> Mmph {
        Mmph { symbols: Vec::new(), edges: Vec::new() }
    }

    /// Vertex count.
    pub fn k(&self) -> usize {
        self.symbols.len()
    }

    /// Hyperedge count.
    pub fn l(&self) -> usize {
        self.edges.len()
    }

    /// Dimension: the largest hyperedge size.
    pub fn n(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i]
    }

    pub fn kappa(&self, i: usize) -> usize {
        self.edges[i].len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, v: Vertex) -> Symbol {
        self.symbols[v as usize]
    }

    pub fn vertex_of(&self, s: Symbol) -> Option<Vertex> {
        self.symbols.iter().position(|&x| x == s).map(|i| i as Vertex)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.k() as Vertex
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.k()];
        for edge in &self.edges {
            for &v in edge {
                m[v as usize] += 1;
            }
        }
        m
    }

    /// For each vertex, the indices of the hyperedges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.k()];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v as usize].push(i);
            }
        }
        inc
    }

    /// Hyperedges with exactly `n` vertices.
    pub fn complete_bases(&self) -> usize {
        let n = self.n();
        self.edges.iter().filter(|e| e.len() == n).count()
    }

    /// Vertex indices in alphabet order of their symbols.
    pub fn vertices_by_symbol(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = self.vertices().collect();
        order.sort_by_key(|&v| self.symbols[v as usize]);
        order
    }

    /// The `count` smallest symbols not used by any vertex.
    pub(crate) fn fresh_symbols(&self, count: usize) -> Vec<Symbol> {
        let mut taken: Vec<u32> = self.symbols.iter().map(|s| s.0).collect();
        taken.sort_unstable();
        let mut out = Vec::with_capacity(count);
        let mut candidate = 0u32;
        let mut t = 0;
        while out.len() < count {
            while t < taken.len() && taken[t] < candidate {
                t += 1;
            }
            if t < taken.len() && taken[t] == candidate {
                candidate += 1;
                continue;
            }
            out.push(Symbol(candidate));
            candidate += 1;
        }
        out
    }

    /// Appends hyperedges over fresh and existing vertices.
    pub(crate) fn with_added(
        &self,
        new_symbols: Vec<Symbol>,
        edit: impl FnOnce(&mut Vec<Vec<Vertex>>),
    ) -> Result<Mmph> {
        let mut symbols = self.symbols.clone();
        symbols.extend(new_symbols);
        let mut edges = self.edges.clone();
        edit(&mut edges);
        Mmph::new(symbols, edges)
    }

    /// The sub-hypergraph formed by the given hyperedges (in the given order);
    /// vertices left without hyperedges disappear.
    pub fn edge_subset(&self, keep: &[usize]) -> Result<Mmph> {
        let edges = keep.iter().map(|&i| self.edges[i].clone()).collect();
        Mmph::compacted(&self.symbols, edges)
    }

    /// Removes hyperedge `i`; vertices left with multiplicity 0 are dropped.
    pub fn remove_hyperedge(&self, i: usize) -> Result<Mmph> {
        if i >= self.l() {
            return Err(Error::EdgeIndex { index: i, len: self.l() });
        }
        let keep: Vec<usize> = (0..self.l()).filter(|&j| j != i).collect();
        self.edge_subset(&keep)
    }

    /// Weak deletion: removes `v` from every hyperedge containing it.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Mmph> {
        self.delete_vertices(&[v])
    }

    pub fn delete_vertices(&self, doomed: &[Vertex]) -> Result<Mmph> {
        for &v in doomed {
            if v as usize >= self.k() {
                return Err(Error::UnknownSymbol(format!("#{v}")));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().copied().filter(|v| !doomed.contains(v)).collect())
            .collect();
        Mmph::compacted(&self.symbols, edges)
    }

    pub fn delete_symbol(&self, s: Symbol) -> Result<Mmph> {
        let v = self.vertex_of(s).ok_or_else(|| Error::UnknownSymbol(s.to_string()))?;
        self.delete_vertex(v)
    }

    /// Removes every multiplicity-1 vertex from its hyperedge in one pass.
    ///
    /// Hyperedges shrinking below two vertices are dropped and reported, as
    /// are hyperedges that collapse onto an earlier one.
    pub fn strip_mult1(&self) -> Result<Strip> {
        let m = self.multiplicities();
        let removed: Vec<Symbol> = self
            .vertices()
            .filter(|&v| m[v as usize] == 1)
            .map(|v| self.symbol(v))
            .collect();
        let mut kept_edges: Vec<Vec<Vertex>> = Vec::new();
        let mut seen: HashMap<Vec<Vertex>, usize> = HashMap::new();
        let mut dropped = Vec::new();
        for (i, edge) in self.edges.iter().enumerate() {
            let survivors: Vec<Vertex> = edge.iter().copied().filter(|&v| m[v as usize] > 1).collect();
            if survivors.len() < 2 {
                dropped.push(DroppedEdge {
                    index: i,
                    remaining: survivors.len(),
                    reason: "fewer than 2 vertices remain",
                });
                continue;
            }
            let mut key = survivors.clone();
            key.sort_unstable();
            if seen.contains_key(&key) {
                dropped.push(DroppedEdge {
                    index: i,
                    remaining: survivors.len(),
                    reason: "duplicates an earlier hyperedge",
                });
                continue;
            }
            seen.insert(key, i);
            kept_edges.push(survivors);
        }
        if kept_edges.is_empty() {
            return Err(Error::EmptyResult);
        }
        let mmph = Mmph::compacted(&self.symbols, kept_edges)?;
        Ok(Strip { mmph, removed, dropped })
    }

    /// Vertices relabeled `1, 2, 3, …` in order of first appearance.
    /// Returns the new hypergraph and, per new vertex, its old symbol.
    pub fn relabel_contiguous(&self) -> (Mmph, Vec<Symbol>) {
        let mut order: Vec<Vertex> = Vec::with_capacity(self.k());
        let mut remap = vec![Vertex::MAX; self.k()];
        for edge in &self.edges {
            for &v in edge {
                if remap[v as usize] == Vertex::MAX {
                    remap[v as usize] = order.len() as Vertex;
                    order.push(v);
                }
            }
        }
        let symbols = (0..order.len() as u32).map(Symbol).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| remap[v as usize]).collect())
            .collect();
        let old = order.iter().map(|&v| self.symbol(v)).collect();
        (Mmph { symbols, edges }, old)
    }

    /// Same hypergraph under new vertex symbols (`symbols[v]` for vertex `v`).
    pub fn with_symbols(&self, symbols: Vec<Symbol>) -> Result<Mmph> {
        assert_eq!(symbols.len(), self.k());
        Mmph::new(symbols, self.edges.clone())
    }

    /// Hyperedges as sorted symbol lists, sorted. Equal for hypergraphs that
    /// differ only in document order.
    pub fn sorted_edge_set(&self) -> Vec<Vec<Symbol>> {
        let mut edges: Vec<Vec<Symbol>> = self
            .edges
            .iter()
            .map(|e| {
                let mut s: Vec<Symbol> = e.iter().map(|&v| self.symbol(v)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        edges.sort();
        edges
    }

    pub fn stats(&self) -> Stats {
        let mut kappa = BTreeMap::new();
        for e in &self.edges {
            *kappa.entry(e.len()).or_insert(0) += 1;
        }
        let mut mult = BTreeMap::new();
        for m in self.multiplicities() {
            *mult.entry(m).or_insert(0) += 1;
        }
        Stats {
            k: self.k(),
            l: self.l(),
            n: self.n(),
            kappa_histogram: kappa,
            multiplicity_histogram: mult,
            complete_bases: self.complete_bases(),
        }
    }

    /// Whether the hypergraph is connected (no hyperedges counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Hyperedge indices grouped by connected component, each group sorted,
    /// groups ordered by their smallest hyperedge index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.l()];
        let mut groups = Vec::new();
        for start in 0..self.l() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut group = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < group.len() {
                let e = group[i];
                for &v in &self.edges[e] {
                    for &f in &inc[v as usize] {
                        if comp[f] == usize::MAX {
                            comp[f] = id;
                            group.push(f);
                        }
                    }
                }
                i += 1;
            }
            group.sort_unstable();
            groups.push(group);
        }
        groups
    }
}

/// Structural statistics of an MMPH.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub kappa_histogram: BTreeMap<usize, usize>,
    pub multiplicity_histogram: BTreeMap<usize, usize>,
    pub complete_bases: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DroppedEdge {
    pub index: usize,
    pub remaining: usize,
    pub reason: &'static str,
}

/// Result of [`Mmph::strip_mult1`].
#[derive(Clone, Debug)]
pub struct Strip {
    pub mmph: Mmph,
    pub removed: Vec<Symbol>,
    pub dropped: Vec<DroppedEdge>,
}
