//! Master hypergraphs from vector components.
//!
//! Every nonzero tuple over a component set is reduced to its projective
//! ray; orthogonal rays are joined in an exact orthogonality graph whose
//! n-cliques (or maximal cliques) become hyperedges.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coords::Coordinatization;
use crate::error::{Error, Result};
use crate::hypergraph::{Mmph, Symbol, Vertex};
use crate::ring::{hermitian_inner, normalize_ray, Ray, RayVector, Ring, Scalar};

/// Largest `|s|^n` accepted by [`enumerate_rays`].
pub const TUPLE_LIMIT: u128 = 10_000_000;

/// Literal vector components; not closed under ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSet {
    values: Vec<Scalar>,
    ring: Ring,
}

impl ComponentSet {
    pub fn new(values: Vec<Scalar>) -> Result<ComponentSet> {
        let set: BTreeSet<Scalar> = values.into_iter().collect();
        let ring = Ring::join_all(set.iter().map(Scalar::ring))?;
        let values: BTreeSet<Scalar> = set.iter().map(|v| v.promote(ring)).collect::<Result<_>>()?;
        if !values.iter().any(Scalar::is_zero) || !values.iter().any(|v| !v.is_zero()) {
            return Err(Error::BadComponents);
        }
        Ok(ComponentSet { values: values.into_iter().collect(), ring })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Comma-separated scalars; `±x` expands to `x,-x`.
impl FromStr for ComponentSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<ComponentSet> {
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut values = Vec::new();
        for token in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if let Some(rest) = token.strip_prefix('±').or_else(|| token.strip_prefix("+-")) {
                let x: Scalar = rest.parse()?;
                values.push(-&x);
                values.push(x);
            } else {
                values.push(token.parse()?);
            }
        }
        ComponentSet::new(values)
    }
}

impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(Scalar::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum EdgeMode {
    /// Hyperedges are the orthogonal n-sets.
    #[default]
    BasesOnly,
    /// Hyperedges are all maximal orthogonal sets of size at least 2.
    AllMaximalCliques,
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    pub mode: EdgeMode,
    /// Keep every connected component instead of only the largest.
    pub keep_all_components: bool,
    pub tuple_limit: u128,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions { mode: EdgeMode::BasesOnly, keep_all_components: false, tuple_limit: TUPLE_LIMIT }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub k: usize,
    pub l: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub tuples: u128,
    pub rays: usize,
    pub orthogonal_pairs: usize,
    /// Orthogonal n-sets over all rays.
    pub bases: usize,
    /// Maximal orthogonal sets of size ≥ 2 over all rays.
    pub maximal_cliques: usize,
    /// Rays lying in at least one chosen hyperedge.
    pub rays_in_edges: usize,
    /// Every connected component, largest first.
    pub components: Vec<ComponentSummary>,
    pub k: usize,
    pub l: usize,
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct MasterResult {
    pub mmph: Mmph,
    pub coords: Coordinatization,
    pub report: GenerationReport,
}

/// All projective rays with components from `s`, sorted.
pub fn enumerate_rays(s: &ComponentSet, n: usize) -> Result<Vec<Ray>> {
    enumerate_rays_limited(s, n, TUPLE_LIMIT)
}

fn enumerate_rays_limited(s: &ComponentSet, n: usize, limit: u128) -> Result<Vec<Ray>> {
    let count = (s.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > limit {
        return Err(Error::EnumerationLimit { count, limit });
    }
    let values = s.values();
    let rays: BTreeSet<Ray> = (0..count as usize)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut tuple = Vec::with_capacity(n);
            for _ in 0..n {
                tuple.push(values[code % values.len()].clone());
                code /= values.len();
            }
            tuple.reverse();
            let u = RayVector::in_ring(s.ring(), tuple).ok()?;
            Some(normalize_ray(&u).promote(s.ring()).expect("ring of the set"))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    if rays.is_empty() {
        return Err(Error::BadComponents);
    }
    Ok(rays.into_iter().collect())
}

/// Adjacency lists (sorted) of the orthogonality graph.
pub fn orthogonality_graph(rays: &[Ray]) -> Vec<Vec<usize>> {
    let upper: Vec<Vec<usize>> = (0..rays.len())
        .into_par_iter()
        .map(|i| {
            (i + 1..rays.len())
                .filter(|&j| {
                    hermitian_inner(rays[i].vector(), rays[j].vector())
                        .expect("rays share dimension")
                        .is_zero()
                })
                .collect()
        })
        .collect();
    let mut adj = upper.clone();
    for (i, row) in upper.iter().enumerate() {
        for &j in row {
            adj[j].push(i);
        }
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All cliques of exactly `size` vertices, each ascending, in lexicographic
/// order.
pub fn cliques_of_size(adj: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    fn extend(adj: &[Vec<usize>], size: usize, clique: &mut Vec<usize>, cand: &[usize], out: &mut Vec<Vec<usize>>) {
        if clique.len() == size {
            out.push(clique.clone());
            return;
        }
        for (idx, &v) in cand.iter().enumerate() {
            if clique.len() + cand.len() - idx < size {
                break;
            }
            let next = intersect(&cand[idx + 1..], &adj[v]);
            clique.push(v);
            extend(adj, size, clique, &next, out);
            clique.pop();
        }
    }
    (0..adj.len())
        .into_par_iter()
        .filter(|&v| adj[v].len() + 1 >= size)
        .flat_map_iter(|v| {
            let higher: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
            let mut out = Vec::new();
            extend(adj, size, &mut vec![v], &higher, &mut out);
            out
        })
        .collect()
}

/// Maximal cliques with at least two vertices, each ascending, sorted.
pub fn maximal_cliques(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn bron_kerbosch(adj: &[Vec<usize>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() && r.len() >= 2 {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| (intersect(&p, &adj[u]).len(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let (mut p, mut x) = (p, x);
        let branch: Vec<usize> = p.iter().copied().filter(|v| adj[pivot].binary_search(v).is_err()).collect();
        for v in branch {
            r.push(v);
            bron_kerbosch(adj, r, intersect(&p, &adj[v]), intersect(&x, &adj[v]), out);
            r.pop();
            p.retain(|&u| u != v);
            let pos = x.partition_point(|&u| u < v);
            x.insert(pos, v);
        }
    }
    // Degeneracy-free split by lowest vertex keeps the work parallel.
    let mut out: Vec<Vec<usize>> = (0..adj.len())
        .into_par_iter()
        .flat_map_iter(|v| {
            let p: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
            let x: Vec<usize> = adj[v].iter().copied().filter(|&u| u < v).collect();
            let mut found = Vec::new();
            bron_kerbosch(adj, &mut vec![v], p, x, &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

pub fn master_from_components(s: &ComponentSet, n: usize, mode: EdgeMode) -> Result<MasterResult> {
    master_with(s, n, &GenerateOptions { mode, ..GenerateOptions::default() })
}

pub fn master_with(s: &ComponentSet, n: usize, opts: &GenerateOptions) -> Result<MasterResult> {
    let start = Instant::now();
    let tuples = (s.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let rays = enumerate_rays_limited(s, n, opts.tuple_limit)?;
    let adj = orthogonality_graph(&rays);
    let orthogonal_pairs = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let bases = cliques_of_size(&adj, n);
    let maximal = maximal_cliques(&adj);
    let (bases_count, maximal_count) = (bases.len(), maximal.len());
    let mut edges = match opts.mode {
        EdgeMode::BasesOnly => bases,
        EdgeMode::AllMaximalCliques => maximal,
    };
    let used: BTreeSet<usize> = edges.iter().flatten().copied().collect();
    if edges.is_empty() {
        return Err(Error::EmptyResult);
    }

    // Connected components over ray indices, largest first; ties keep the
    // component containing the smallest ray.
    let full = Mmph::from_symbol_edges(
        &edges.iter().map(|e| e.iter().map(|&v| Symbol(v as u32)).collect()).collect::<Vec<_>>(),
    )?;
    let mut groups = full.components();
    let size_of = |g: &Vec<usize>| g.iter().flat_map(|&e| edges[e].iter().copied()).collect::<BTreeSet<_>>().len();
    groups.sort_by_key(|g| std::cmp::Reverse(size_of(g)));
    let components: Vec<ComponentSummary> =
        groups.iter().map(|g| ComponentSummary { k: size_of(g), l: g.len() }).collect();
    if !opts.keep_all_components {
        let keep: BTreeSet<usize> = groups[0].iter().copied().collect();
        edges = edges
            .into_iter()
            .enumerate()
            .filter(|(i, _)| keep.contains(i))
            .map(|(_, e)| e)
            .collect();
    }

    // Relabel surviving rays in ray order.
    let kept: BTreeSet<usize> = edges.iter().flatten().copied().collect();
    let index: HashMap<usize, Vertex> = kept.iter().enumerate().map(|(i, &r)| (r, i as Vertex)).collect();
    let symbols: Vec<Symbol> = (0..kept.len() as u32).map(Symbol).collect();
    let mmph = Mmph::new(
        symbols.clone(),
        edges.iter().map(|e| e.iter().map(|r| index[r]).collect()).collect(),
    )?;
    let coords = Coordinatization::new(n, kept.iter().zip(&symbols).map(|(&r, &s)| (s, rays[r].clone())))?;
    let report = GenerationReport {
        tuples,
        rays: rays.len(),
        orthogonal_pairs,
        bases: bases_count,
        maximal_cliques: maximal_count,
        rays_in_edges: used.len(),
        components,
        k: mmph.k(),
        l: mmph.l(),
        millis: start.elapsed().as_millis(),
    };
    Ok(MasterResult { mmph, coords, report })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Missing { vertex: String },
    NotOrthogonal { edge: usize, a: String, b: String },
    DuplicateRay { a: String, b: String },
    NotSpanning { edge: usize, rank: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Missing { vertex } => write!(f, "vertex {vertex} has no ray"),
            Violation::NotOrthogonal { edge, a, b } => write!(f, "hyperedge {edge}: {a} and {b} are not orthogonal"),
            Violation::DuplicateRay { a, b } => write!(f, "vertices {a} and {b} share a ray"),
            Violation::NotSpanning { edge, rank } => write!(f, "hyperedge {edge} spans only rank {rank}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub edges: usize,
    pub orthogonal_edges: usize,
    pub vertices: usize,
    pub distinct_rays: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks orthogonality inside hyperedges, distinctness of rays, and that
/// every size-n hyperedge spans the space.
pub fn verify_coordinatization(h: &Mmph, c: &Coordinatization) -> VerificationReport {
    let mut violations = Vec::new();
    let rays: Vec<Option<&Ray>> = h.symbols().iter().map(|&s| c.get(s)).collect();
    for (v, r) in rays.iter().enumerate() {
        if r.is_none() {
            violations.push(Violation::Missing { vertex: h.symbol(v as Vertex).to_string() });
        }
    }
    let mut orthogonal_edges = 0;
    for (i, e) in h.edges().iter().enumerate() {
        let mut ok = true;
        for (x, &a) in e.iter().enumerate() {
            for &b in &e[x + 1..] {
                if let (Some(ra), Some(rb)) = (rays[a as usize], rays[b as usize]) {
                    let zero = hermitian_inner(ra.vector(), rb.vector()).map(|p| p.is_zero()).unwrap_or(false);
                    if !zero {
                        ok = false;
                        violations.push(Violation::NotOrthogonal {
                            edge: i,
                            a: h.symbol(a).to_string(),
                            b: h.symbol(b).to_string(),
                        });
                    }
                } else {
                    ok = false;
                }
            }
        }
        if ok {
            orthogonal_edges += 1;
        }
        if e.len() == c.dim() && e.iter().all(|&v| rays[v as usize].is_some()) {
            let rows: Vec<Vec<Scalar>> = e.iter().map(|&v| rays[v as usize].unwrap().components().to_vec()).collect();
            let rank = rank(rows);
            if rank < c.dim() {
                violations.push(Violation::NotSpanning { edge: i, rank });
            }
        }
    }
    let mut seen: HashMap<&Ray, Symbol> = HashMap::new();
    for (v, r) in rays.iter().enumerate() {
        if let Some(r) = r {
            let s = h.symbol(v as Vertex);
            if let Some(first) = seen.get(r) {
                violations.push(Violation::DuplicateRay { a: first.to_string(), b: s.to_string() });
            } else {
                seen.insert(r, s);
            }
        }
    }
    VerificationReport {
        edges: h.l(),
        orthogonal_edges,
        vertices: h.k(),
        distinct_rays: seen.len(),
        violations,
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn row_reduce(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    row_reduce(&mut rows).len()
}

/// The ray orthogonal to `n − 1` mutually orthogonal rays.
pub fn completion(rays: &[Ray]) -> Result<Ray> {
    let n = rays.first().ok_or(Error::NotOrthogonal)?.dim();
    if rays.len() + 1 != n || rays.iter().any(|r| r.dim() != n) {
        return Err(Error::DimensionMismatch(rays.len() + 1, n));
    }
    let ring = Ring::join_all(rays.iter().map(Ray::ring))?;
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            if !hermitian_inner(a.vector(), b.vector())?.is_zero() {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    // ⟨u, x⟩ = Σ conj(uᵢ) xᵢ, so x spans the null space of the conjugated rows.
    let mut m: Vec<Vec<Scalar>> = rays
        .iter()
        .map(|r| r.components().iter().map(|c| c.conjugate().promote(ring)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let pivots = row_reduce(&mut m);
    if pivots.len() != n - 1 {
        return Err(Error::NotOrthogonal);
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let mut x = vec![Scalar::zero(ring); n];
    x[free] = Scalar::one(ring);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = -&m[r][free];
    }
    Ok(normalize_ray(&RayVector::in_ring(ring, x)?))
}
