use std::collections::{BTreeSet, HashSet};

use mmpkit::catalog::get;
use mmpkit::codec::mmph_to_json;
use mmpkit::generate::{
    completion, cliques_of_size, enumerate_rays, master_from_components, maximal_cliques, orthogonality_graph,
    verify_coordinatization, ComponentSet, EdgeMode, Violation,
};
use mmpkit::ring::{normalize_ray, parse_vector};
use mmpkit::{Coordinatization, Ray, RayVector, Scalar, Symbol};
use proptest::prelude::*;

type C = (f64, f64);

fn cmul(x: C, y: C) -> C {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

fn cdiv(x: C, y: C) -> C {
    let d = y.0 * y.0 + y.1 * y.1;
    ((x.0 * y.0 + x.1 * y.1) / d, (x.1 * y.0 - x.0 * y.1) / d)
}

fn floats(r: &Ray) -> Vec<C> {
    r.components().iter().map(Scalar::to_complex).collect()
}

/// Projective key of a float vector: divide by the first nonzero entry and round.
fn key(v: &[C]) -> Vec<(i64, i64)> {
    let lead = *v.iter().find(|c| c.0.abs() > 1e-9 || c.1.abs() > 1e-9).unwrap();
    v.iter()
        .map(|&c| {
            let q = cdiv(c, lead);
            ((q.0 * 1e6).round() as i64, (q.1 * 1e6).round() as i64)
        })
        .collect()
}

fn float_orthogonal(u: &[C], v: &[C]) -> bool {
    let s = u.iter().zip(v).fold((0.0, 0.0), |acc, (&a, &b)| {
        let p = cmul((a.0, -a.1), b);
        (acc.0 + p.0, acc.1 + p.1)
    });
    s.0.abs() < 1e-9 && s.1.abs() < 1e-9
}

/// Every nonzero tuple over `values`, deduplicated in floating point.
fn float_rays(values: &[Scalar], n: usize) -> Vec<Vec<C>> {
    let vals: Vec<C> = values.iter().map(Scalar::to_complex).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let total = vals.len().pow(n as u32);
    for mut code in 0..total {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(vals[code % vals.len()]);
            code /= vals.len();
        }
        if v.iter().all(|c| c.0.abs() < 1e-12 && c.1.abs() < 1e-12) {
            continue;
        }
        if seen.insert(key(&v)) {
            out.push(v);
        }
    }
    out
}

fn set(s: &str) -> ComponentSet {
    s.parse().unwrap()
}

#[test]
fn thirteen_rays_match_float_enumeration() {
    let s = set("0,±1");
    let exact: BTreeSet<_> = enumerate_rays(&s, 3).unwrap().iter().map(|r| key(&floats(r))).collect();
    let float: BTreeSet<_> = float_rays(s.values(), 3).iter().map(|v| key(v)).collect();
    assert_eq!(exact.len(), 13);
    assert_eq!(exact, float);
}

#[test]
fn ray_counts_match_float_enumeration() {
    for (s, n) in [("0,±1,±2,5", 3), ("0,±w,2w,±w2,2w2", 3), ("0,±1", 4)] {
        let s = set(s);
        assert_eq!(enumerate_rays(&s, n).unwrap().len(), float_rays(s.values(), n).len());
    }
    assert!(enumerate_rays(&set("0,±1,±2,5"), 3).unwrap().len() >= 97);
}

#[test]
fn yu_oh_cliques_match_brute_force() {
    let rays = enumerate_rays(&set("0,±1"), 3).unwrap();
    let f: Vec<Vec<C>> = rays.iter().map(floats).collect();
    let orth = |a: usize, b: usize| float_orthogonal(&f[a], &f[b]);
    let cliques: Vec<u32> = (1u32..1 << f.len())
        .filter(|m| m.count_ones() >= 2)
        .filter(|&m| (0..f.len()).all(|a| (a + 1..f.len()).all(|b| m >> a & 1 == 0 || m >> b & 1 == 0 || orth(a, b))))
        .collect();
    let maximal: BTreeSet<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..f.len()).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    let adj = orthogonality_graph(&rays);
    let exact: BTreeSet<Vec<usize>> = maximal_cliques(&adj)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    assert_eq!(exact, maximal);
    assert_eq!(maximal.iter().filter(|c| c.len() == 3).count(), 4);
    assert_eq!(maximal.iter().filter(|c| c.len() == 2).count(), 12);

    let m = master_from_components(&set("0,±1"), 3, EdgeMode::AllMaximalCliques).unwrap();
    assert_eq!((m.mmph.k(), m.mmph.l()), (13, 16));
}

#[test]
fn four_dimensional_master_matches_brute_force() {
    let s = set("0,±1");
    let rays = enumerate_rays(&s, 4).unwrap();
    let f: Vec<Vec<C>> = rays.iter().map(floats).collect();
    let r = f.len();
    let mut bases = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                for d in c + 1..r {
                    let q = [a, b, c, d];
                    if q.iter().enumerate().all(|(i, &x)| q[i + 1..].iter().all(|&y| float_orthogonal(&f[x], &f[y]))) {
                        bases.push(q);
                    }
                }
            }
        }
    }
    // union-find over rays joined by shared bases
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    for q in &bases {
        for &x in &q[1..] {
            let (a, b) = (find(&mut parent, q[0]), find(&mut parent, x));
            parent[a] = b;
        }
    }
    let mut sizes = std::collections::HashMap::<usize, (BTreeSet<usize>, usize)>::new();
    for q in &bases {
        let root = find(&mut parent, q[0]);
        let e = sizes.entry(root).or_default();
        e.0.extend(q);
        e.1 += 1;
    }
    let largest = sizes.values().map(|(v, l)| (v.len(), *l)).max().unwrap();

    let adj = orthogonality_graph(&rays);
    assert_eq!(cliques_of_size(&adj, 4).len(), bases.len());
    let m = master_from_components(&s, 4, EdgeMode::BasesOnly).unwrap();
    assert_eq!((m.mmph.k(), m.mmph.l()), largest);
    assert_eq!(largest, (24, 24));
    assert!(verify_coordinatization(&m.mmph, &m.coords).passed());
}

fn conj_cross(u: &Ray, v: &Ray) -> Ray {
    let (u, v) = (u.components(), v.components());
    let c = |i: usize, j: usize| (&(&u[i] * &v[j]) - &(&u[j] * &v[i])).conjugate();
    normalize_ray(&RayVector::new(vec![c(1, 2), c(2, 0), c(0, 1)]).unwrap())
}

#[test]
fn completion_is_conjugated_cross_product() {
    let m = get("master-169-120").unwrap();
    let rays = m.coords.as_ref().unwrap().rays_for(&m.mmph).unwrap();
    for e in m.mmph.edges() {
        for (i, j, rest) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let (u, v) = (&rays[e[i] as usize], &rays[e[j] as usize]);
            let w = completion(&[u.clone(), v.clone()]).unwrap();
            assert_eq!(w, conj_cross(u, v));
            assert_eq!(w, rays[e[rest] as usize]);
        }
    }
}

#[test]
fn reference_completion_and_verification() {
    let e = get("69-50").unwrap();
    let (h, c) = (e.mmph, e.coords.unwrap());
    let ray = |ch: char| c.get(Symbol::from_char(ch).unwrap()).unwrap().clone();
    assert_eq!(completion(&[ray('4'), ray('5')]).unwrap(), normalize_ray(&RayVector::integers(&[0, 0, 1]).unwrap()));

    let report = verify_coordinatization(&h, &c);
    assert!(report.passed());
    assert_eq!((report.orthogonal_edges, report.distinct_rays), (50, 69));

    let five = Symbol::from_char('5').unwrap();
    let altered = Coordinatization::new(
        3,
        c.iter().map(|(s, r)| (s, if s == five { normalize_ray(&parse_vector("{1,w,0}").unwrap()) } else { r.clone() })),
    )
    .unwrap();
    let bad = verify_coordinatization(&h, &altered);
    let edge_145 = h
        .edges()
        .iter()
        .position(|e| e.iter().map(|&v| h.symbol(v).to_char().unwrap()).collect::<String>() == "145")
        .unwrap();
    assert!(bad.violations.iter().any(|v| matches!(v, Violation::NotOrthogonal { edge, .. } if *edge == edge_145)));
}

#[test]
fn masters_are_deterministic() {
    let s = set("0,±1,±2,5");
    let dump = || {
        let m = master_from_components(&s, 3, EdgeMode::BasesOnly).unwrap();
        let rays: Vec<String> = m.coords.iter().map(|(s, r)| format!("{}={r}", s.0)).collect();
        (mmph_to_json(&m.mmph).to_string(), rays)
    };
    assert_eq!(dump(), dump());
}

fn eisenstein_master() -> (Vec<Scalar>, HashSet<Ray>) {
    let s = set("0,±w,2w,±w2,2w2");
    let rays = enumerate_rays(&s, 3).unwrap().into_iter().collect();
    (s.values().to_vec(), rays)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn scaled_rays_are_already_enumerated(idx in prop::collection::vec(0usize..64, 3), a in -5i64..=5, b in -5i64..=5) {
        thread_local!(static DATA: (Vec<Scalar>, HashSet<Ray>) = eisenstein_master());
        let lambda = Scalar::eisenstein(a, b);
        prop_assume!(!lambda.is_zero());
        DATA.with(|(values, rays)| {
            let comps: Vec<Scalar> = idx.iter().map(|&i| values[i % values.len()].clone()).collect();
            let Ok(u) = RayVector::new(comps) else { return Ok(()) };
            prop_assert!(rays.contains(&normalize_ray(&u.scaled(&lambda).unwrap())));
            Ok(())
        })?;
    }
}
