//! Library enumeration against the brute-force closure oracle.

use cdlat_core::sweep::analyze;
use cdlat_core::{FamilySpec, Limits};
use cdlat_testkit::brute::Table;
use cdlat_testkit::{groups_up_to, load_catalog};

#[test]
fn catalog_groups_up_to_24_match_brute_force() {
    let catalog = load_catalog("small_1_32.txt");
    let groups = groups_up_to(&catalog, 24);
    assert_eq!(groups.len(), 74);
    for (order, id, g) in &groups {
        let brute = Table {
            n: g.order(),
            mul: g.table(),
        }
        .cd_summary();
        let a = analyze(g, &Limits::default()).unwrap();
        let r = &a.report;
        assert_eq!(
            (r.total_subgroups, r.m_star, r.cd_size(), r.delta),
            brute,
            "{order}#{id}"
        );
    }
}

#[test]
fn families_match_brute_force() {
    for spec in [
        "s 4",
        "d 24",
        "q 16",
        "m 3 3",
        "q 8 x c 3",
        "c 2 x c 2 x c 2 x c 2",
        "d 8 x c 3",
    ] {
        let g = spec
            .parse::<FamilySpec>()
            .unwrap()
            .build(&Limits::default())
            .unwrap();
        let brute = Table {
            n: g.order(),
            mul: g.table(),
        }
        .cd_summary();
        let r = analyze(&g, &Limits::default()).unwrap().report;
        assert_eq!(
            (r.total_subgroups, r.m_star, r.cd_size(), r.delta),
            brute,
            "{spec}"
        );
    }
}
