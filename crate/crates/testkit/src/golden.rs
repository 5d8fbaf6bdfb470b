//! Reference values computed once with GAP (`tools/gap/golden.g`).

use std::collections::BTreeMap;

use serde::Deserialize;

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenRow {
    pub order: usize,
    pub id: usize,
    pub name: String,
    pub total_subgroups: usize,
    pub m_star: u64,
    pub cd_size: usize,
    pub delta: usize,
    pub nilpotent: bool,
    pub abelian: bool,
    /// Counts involutions, so it is true for every odd p.
    pub cond1: Option<bool>,
    /// Counts subgroups of order p.
    pub cond1_lemma: Option<bool>,
    pub cond2: Option<bool>,
    /// False below order p^3.
    pub cond3: Option<bool>,
    /// True below order p^3.
    pub cond3_lemma: Option<bool>,
}

pub const GOLDEN_FILES: [&str; 4] = [
    "golden_1_32.json",
    "golden_64.json",
    "golden_81.json",
    "golden_243.json",
];

pub fn load(file: &str) -> Vec<GoldenRow> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(file);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}

pub fn load_all() -> Vec<GoldenRow> {
    GOLDEN_FILES.iter().flat_map(|f| load(f)).collect()
}

pub fn of_order(order: usize) -> Vec<GoldenRow> {
    load_all()
        .into_iter()
        .filter(|r| r.order == order)
        .collect()
}

/// Venn cell sizes keyed by `(cond1_lemma, cond2, cond3)`.
pub fn venn(rows: &[GoldenRow]) -> BTreeMap<(bool, bool, bool), usize> {
    let mut cells = BTreeMap::new();
    for r in rows {
        if let (Some(a), Some(b), Some(c)) = (r.cond1_lemma, r.cond2, r.cond3) {
            *cells.entry((a, b, c)).or_insert(0) += 1;
        }
    }
    cells
}
