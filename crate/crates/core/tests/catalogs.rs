use cdlat_core::catalog::{parse_unchecked, write_catalog};
use cdlat_testkit::{catalog_path, load_all, load_catalog};

#[test]
fn bundled_catalogs_are_complete() {
    let c = load_all();
    for n in (1..=32).chain([64, 81, 243]) {
        c.require_complete(n).unwrap();
    }
    assert_eq!(c.entries_of_order(32).count(), 51);
    assert_eq!(c.entries_of_order(64).count(), 267);
    assert_eq!(c.entries_of_order(81).count(), 15);
    assert_eq!(c.entries_of_order(243).count(), 67);
    assert_eq!(c.entries.len(), 144 + 267 + 15 + 67);
    assert!(c.require_complete(33).is_err());
}

#[test]
fn bundled_catalogs_round_trip() {
    for f in cdlat_testkit::CATALOG_FILES {
        let c = load_catalog(f);
        let text = write_catalog(&c);
        assert_eq!(parse_unchecked(text.as_bytes()).unwrap(), c, "{f}");
        let raw = std::fs::read_to_string(catalog_path(f)).unwrap();
        assert_eq!(parse_unchecked(raw.as_bytes()).unwrap(), c, "{f}");
    }
}
