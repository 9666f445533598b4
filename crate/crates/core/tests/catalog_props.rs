use mmpkit::canon::canonical_form;
use mmpkit::catalog::{get, names, Provenance, SEED_18_9};
use mmpkit::coloring::is_contextual;
use mmpkit::generate::{master_from_components, verify_coordinatization, EdgeMode, Violation};
use mmpkit::structure::{reduce_to_critical, weak_extend};
use mmpkit::Mmph;

fn certificate(h: &Mmph) -> String {
    canonical_form(h).unwrap().certificate
}

#[test]
fn entries_verify() {
    for name in names() {
        let e = get(name).unwrap();
        assert!(Mmph::new(e.mmph.symbols().to_vec(), e.mmph.edges().to_vec()).is_ok(), "{name}");
        let report = verify_coordinatization(&e.mmph, e.coords.as_ref().unwrap());
        if name == "19-9" {
            // two deficient triads of the 17-9 complete to the same ray
            assert_eq!(report.violations.len(), 1);
            assert!(matches!(report.violations[0], Violation::DuplicateRay { .. }));
        } else {
            assert!(report.passed(), "{name}: {:?}", report.violations);
        }
    }
}

#[test]
fn provenance_and_contextuality() {
    for (name, contextual) in [("69-50", true), ("33-50", true), ("yu-oh-13-16", true), ("25-16", false), ("24-24", true), ("18-9", true), ("17-9", true), ("19-9", false)] {
        let e = get(name).unwrap();
        assert_eq!(is_contextual(&e.mmph), contextual, "{name}");
        assert_eq!(matches!(e.provenance, Provenance::Embedded { .. }), name == "69-50");
    }
}

#[test]
fn recipes_replay_identically() {
    let yu_oh = master_from_components(&"0,±1".parse().unwrap(), 3, EdgeMode::AllMaximalCliques).unwrap();
    assert_eq!(certificate(&yu_oh.mmph), certificate(&get("yu-oh-13-16").unwrap().mmph));
    let ext = weak_extend(&yu_oh.mmph, &yu_oh.coords).unwrap();
    assert_eq!(certificate(&ext.mmph), certificate(&get("25-16").unwrap().mmph));

    let four = master_from_components(&"0,±1".parse().unwrap(), 4, EdgeMode::BasesOnly).unwrap();
    assert_eq!(four.mmph, get("24-24").unwrap().mmph);
    let red = reduce_to_critical(&four.mmph, SEED_18_9).unwrap();
    assert_eq!(red.mmph, get("18-9").unwrap().mmph);

    let reference = get("69-50").unwrap().mmph;
    assert_eq!(reference.strip_mult1().unwrap().mmph, get("33-50").unwrap().mmph);
}
