//! Static 3D layout of an MMPH for external viewers.
//!
//! Fruchterman–Reingold on the 2-section graph, seeded start, fixed
//! iteration count, so a seed always gives the same picture.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::hypergraph::Mmph;

#[derive(Clone, Debug, Serialize)]
pub struct Layout {
    pub positions: Vec<[f64; 3]>,
    pub labels: Vec<String>,
    pub edges: Vec<Vec<u32>>,
}

pub fn layout3d(h: &Mmph, seed: u64, iterations: usize) -> Layout {
    let k = h.k();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<[f64; 3]> = (0..k)
        .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
        .collect();
    let mut pairs = Vec::new();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                pairs.push((a as usize, b as usize));
            }
        }
    }
    let ideal = (8.0 / k.max(1) as f64).cbrt();
    let mut temperature = 0.2;
    for _ in 0..iterations {
        let mut shift = vec![[0.0f64; 3]; k];
        for i in 0..k {
            for j in i + 1..k {
                let d = sub(pos[i], pos[j]);
                let dist = norm(d).max(1e-6);
                let f = ideal * ideal / dist;
                for c in 0..3 {
                    shift[i][c] += d[c] / dist * f;
                    shift[j][c] -= d[c] / dist * f;
                }
            }
        }
        for &(a, b) in &pairs {
            let d = sub(pos[a], pos[b]);
            let dist = norm(d).max(1e-6);
            let f = dist * dist / ideal;
            for c in 0..3 {
                shift[a][c] -= d[c] / dist * f;
                shift[b][c] += d[c] / dist * f;
            }
        }
        for (p, s) in pos.iter_mut().zip(&shift) {
            let len = norm(*s).max(1e-12);
            let step = len.min(temperature);
            for c in 0..3 {
                p[c] += s[c] / len * step;
            }
        }
        temperature *= 0.98;
    }
    let centre = pos.iter().fold([0.0; 3], |acc, p| [acc[0] + p[0], acc[1] + p[1], acc[2] + p[2]]);
    for p in &mut pos {
        for c in 0..3 {
            p[c] -= centre[c] / k.max(1) as f64;
            p[c] = (p[c] * 1e6).round() / 1e6;
        }
    }
    Layout {
        positions: pos,
        labels: h.symbols().iter().map(|s| s.to_string()).collect(),
        edges: h.edges().to_vec(),
    }
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn norm(a: [f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

impl Layout {
    /// Wavefront OBJ: one point per vertex, one polyline per hyperedge.
    pub fn to_obj(&self) -> String {
        let mut out = String::from("# mmpkit layout\n");
        for (p, label) in self.positions.iter().zip(&self.labels) {
            out.push_str(&format!("v {:.6} {:.6} {:.6} # {}\n", p[0], p[1], p[2], label));
        }
        for e in &self.edges {
            let ids: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!("l {}\n", ids.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_mmph;

    #[test]
    fn seeded_layout_repeats() {
        let h = parse_mmph("123,145,267.").unwrap();
        let a = layout3d(&h, 3, 50);
        let b = layout3d(&h, 3, 50);
        assert_eq!(a.positions, b.positions);
        assert_eq!(a.to_obj().lines().filter(|l| l.starts_with("l ")).count(), 3);
    }
}
