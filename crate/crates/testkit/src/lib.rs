//! Shared test support: a brute-force subgroup oracle that only reads the
//! multiplication table, the golden data exported from GAP, the bundled
//! catalogs, and the property checks run on every bundled group.

pub mod brute;
pub mod golden;
pub mod props;

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use cdlat_core::catalog::{parse_catalog, Catalog};
use cdlat_core::{Group, Limits};

pub const CATALOG_FILES: [&str; 4] = [
    "small_1_32.txt",
    "order_64.txt",
    "order_81.txt",
    "order_243.txt",
];

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn catalog_path(file: &str) -> PathBuf {
    workspace_root().join("catalogs").join(file)
}

pub fn load_catalog(file: &str) -> Catalog {
    let path = catalog_path(file);
    let f = File::open(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_catalog(BufReader::new(f), &Limits::default())
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Every bundled catalog merged into one.
pub fn load_all() -> Catalog {
    let mut c = Catalog::default();
    for f in CATALOG_FILES {
        c.merge(load_catalog(f));
    }
    c
}

/// Catalog groups with order at most `max`, built, in (order, id) order.
pub fn groups_up_to(catalog: &Catalog, max: usize) -> Vec<(usize, usize, Group)> {
    catalog
        .entries
        .iter()
        .filter(|e| e.order <= max)
        .map(|e| (e.order, e.id, e.build(&Limits::default()).unwrap()))
        .collect()
}

/// The same group with its elements renamed by `sigma`, which must fix 0.
pub fn relabel(g: &Group, sigma: &[usize]) -> Group {
    let n = g.order();
    assert_eq!(sigma[0], 0);
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[sigma[a] * n + sigma[b]] = sigma[g.mul(a, b)] as u32;
        }
    }
    Group::from_table(n, mul).unwrap()
}
