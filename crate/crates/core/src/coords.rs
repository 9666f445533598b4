//! Vertex → ray assignments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Mmph, Symbol};
use crate::ring::{Ray, Ring};

/// Rays for the vertices of a hypergraph, keyed by vertex symbol. All rays
/// share one dimension and one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinatization {
    dim: usize,
    ring: Ring,
    rays: BTreeMap<Symbol, Ray>,
}

impl Coordinatization {
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (Symbol, Ray)>) -> Result<Coordinatization> {
        let mut rays = BTreeMap::new();
        for (s, ray) in entries {
            if ray.dim() != dim {
                return Err(Error::ComponentCount {
                    symbol: s.to_string(),
                    expected: dim,
                    found: ray.dim(),
                });
            }
            if rays.insert(s, ray).is_some() {
                return Err(Error::DuplicateSymbol(s.to_string()));
            }
        }
        let ring = Ring::join_all(rays.values().map(Ray::ring))?;
        let rays = rays
            .into_iter()
            .map(|(s, r)| Ok((s, r.promote(ring)?)))
            .collect::<Result<_>>()?;
        Ok(Coordinatization { dim, ring, rays })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn get(&self, s: Symbol) -> Option<&Ray> {
        self.rays.get(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &Ray)> {
        self.rays.iter().map(|(&s, r)| (s, r))
    }

    /// Ray of every vertex of `h`, in vertex order.
    pub fn rays_for(&self, h: &Mmph) -> Result<Vec<Ray>> {
        h.symbols()
            .iter()
            .map(|&s| {
                self.get(s)
                    .cloned()
                    .ok_or_else(|| Error::MissingCoordinates(s.to_string()))
            })
            .collect()
    }

    /// Vertices of `h` without a ray.
    pub fn missing(&self, h: &Mmph) -> Vec<Symbol> {
        h.symbols().iter().copied().filter(|s| !self.rays.contains_key(s)).collect()
    }

    /// Only the entries for vertices of `h`.
    pub fn restrict(&self, h: &Mmph) -> Coordinatization {
        Coordinatization {
            dim: self.dim,
            ring: self.ring,
            rays: h
                .symbols()
                .iter()
                .filter_map(|&s| self.rays.get(&s).map(|r| (s, r.clone())))
                .collect(),
        }
    }

    /// Renames symbols: entry for `old[i]` becomes entry for `Symbol(i)`.
    pub fn renamed(&self, old: &[Symbol]) -> Coordinatization {
        Coordinatization {
            dim: self.dim,
            ring: self.ring,
            rays: old
                .iter()
                .enumerate()
                .filter_map(|(i, s)| self.rays.get(s).map(|r| (Symbol(i as u32), r.clone())))
                .collect(),
        }
    }

    pub(crate) fn insert(&mut self, s: Symbol, ray: Ray) {
        debug_assert_eq!(ray.dim(), self.dim);
        self.rays.insert(s, ray);
    }
}
