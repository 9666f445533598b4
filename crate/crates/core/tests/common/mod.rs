#![allow(dead_code)]

use mmpkit::{Mmph, Symbol};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random MMPH over symbols `0..k` with up to `max_l` hyperedges of size
/// `2..=max_n`. Unused symbols simply do not appear.
pub fn random_mmph(seed: u64, k: usize, max_l: usize, max_n: usize) -> Mmph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = rng.gen_range(1..=max_l);
    let mut edges: Vec<Vec<Symbol>> = Vec::new();
    for _ in 0..l * 4 {
        if edges.len() == l {
            break;
        }
        let size = rng.gen_range(2..=max_n.min(k));
        let mut pool: Vec<u32> = (0..k as u32).collect();
        pool.shuffle(&mut rng);
        let mut e: Vec<u32> = pool[..size].to_vec();
        e.sort_unstable();
        let e: Vec<Symbol> = e.into_iter().map(Symbol).collect();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Mmph::from_symbol_edges(&edges).unwrap()
}

/// The same hypergraph with symbols permuted and both hyperedge order and
/// in-edge order shuffled.
pub fn scrambled(h: &Mmph, seed: u64) -> Mmph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut names: Vec<Symbol> = h.symbols().to_vec();
    names.shuffle(&mut rng);
    let mut edges: Vec<Vec<Symbol>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut e: Vec<Symbol> = e.iter().map(|&v| names[v as usize]).collect();
            e.shuffle(&mut rng);
            e
        })
        .collect();
    edges.shuffle(&mut rng);
    Mmph::from_symbol_edges(&edges).unwrap()
}
