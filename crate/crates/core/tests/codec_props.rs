mod common;

use common::random_mmph;
use mmpkit::codec::{parse_mmph_json, mmph_to_json};
use mmpkit::hypergraph::alphabet_len;
use mmpkit::{parse_mmph, serialize_mmph, Mmph, Symbol};
use proptest::prelude::*;

const ALPHABET: &str = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!\"#$%&'()*+-/:;<>?@[\\]^_`|~";

#[test]
fn alphabet_oracle() {
    assert_eq!(ALPHABET.chars().count(), 88);
    assert_eq!(alphabet_len(), 88);
    for (i, c) in ALPHABET.chars().enumerate() {
        assert_eq!(Symbol(i as u32).to_char(), Some(c));
    }
    assert_eq!(Symbol(69).to_char(), Some(')'));
}

#[test]
fn seventy_vertices_need_close_paren() {
    let edges: Vec<Vec<Symbol>> = (0..69u32).map(|i| vec![Symbol(i), Symbol(i + 1)]).collect();
    let h = Mmph::from_symbol_edges(&edges).unwrap();
    assert_eq!(h.k(), 70);
    let text = serialize_mmph(&h).unwrap();
    assert!(text.contains(')'));
    assert_eq!(parse_mmph(&text).unwrap(), h);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn round_trip(seed in any::<u64>(), k in 2usize..=69, n in 2usize..=6) {
        let h = random_mmph(seed, k, 60, n);
        prop_assert!(h.k() <= 69 && h.l() <= 60);
        let text = serialize_mmph(&h).unwrap();
        prop_assert!(text.ends_with('.'));
        let allowed: Vec<char> = ALPHABET.chars().take(69).collect();
        prop_assert!(text.trim_end_matches('.').chars().all(|c| c == ',' || allowed.contains(&c)));
        prop_assert_eq!(parse_mmph(&text).unwrap(), h.clone());
        let json = mmph_to_json(&h).to_string();
        prop_assert_eq!(parse_mmph_json(&json).unwrap().sorted_edge_set(), h.sorted_edge_set());
    }
}
