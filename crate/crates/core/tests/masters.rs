//! Masters generated from the known component sets.

use mmpkit::coloring::is_contextual;
use mmpkit::generate::{master_from_components, verify_coordinatization, ComponentSet, EdgeMode};

fn master(components: &str) -> (usize, usize, bool) {
    let s: ComponentSet = components.parse().unwrap();
    let m = master_from_components(&s, 3, EdgeMode::BasesOnly).unwrap();
    assert!(verify_coordinatization(&m.mmph, &m.coords).passed());
    (m.mmph.k(), m.mmph.l(), is_contextual(&m.mmph))
}

#[test]
fn master_97_64() {
    assert_eq!(master("0,±1,±2,5"), (97, 64, true));
}

#[test]
fn master_81_52() {
    assert_eq!(master("0,±1,±r2,3"), (81, 52, true));
}

#[test]
fn master_169_120() {
    assert_eq!(master("0,±w,2w,±w2,2w2"), (169, 120, true));
}

#[test]
fn master_from_two_omega_set() {
    // largest component of the bases; six isolated triads sit beside it
    let s: ComponentSet = "0,±1,2w,±w2,2w2".parse().unwrap();
    let m = master_from_components(&s, 3, EdgeMode::BasesOnly).unwrap();
    assert_eq!((m.mmph.k(), m.mmph.l()), (145, 96));
    let sizes: Vec<(usize, usize)> = m.report.components.iter().map(|c| (c.k, c.l)).collect();
    assert_eq!(sizes[0], (145, 96));
    assert_eq!(&sizes[1..], &[(3, 1); 6]);
    assert!(is_contextual(&m.mmph));
}
