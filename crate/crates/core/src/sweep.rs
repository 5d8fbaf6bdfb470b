//! Per-group analysis over a catalog, and the JSON report it produces.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Catalog, CatalogEntry};
use crate::cd::{cd_lattice, conditions_on, CdReport};
use crate::group::{is_isomorphic, FamilySpec, Group};
use crate::subgroup::SubgroupLattice;
use crate::{factorize, prime_power, Error, Limits, Result};

/// One report row. Field order is alphabetical so the JSON keys come out
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub cd_size: Option<usize>,
    pub cond1: Option<bool>,
    pub cond2: Option<bool>,
    pub cond3: Option<bool>,
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub id: usize,
    pub iso_name: Option<String>,
    pub m_star: Option<u64>,
    pub name: Option<String>,
    pub nilpotent: Option<bool>,
    pub order: usize,
    pub total_subgroups: Option<usize>,
}

impl SweepRecord {
    pub fn passes_all(&self) -> bool {
        self.cond1 == Some(true) && self.cond2 == Some(true) && self.cond3 == Some(true)
    }
}

/// Everything computed for one group.
pub struct Analysis<'g> {
    pub lattice: SubgroupLattice<'g>,
    pub report: CdReport,
    pub nilpotent: bool,
}

pub fn analyze<'g>(g: &'g Group, limits: &Limits) -> Result<Analysis<'g>> {
    let lattice = SubgroupLattice::enumerate(g, limits)?;
    let report = cd_lattice(&lattice)?;
    let nilpotent = lattice.is_nilpotent();
    Ok(Analysis {
        lattice,
        report,
        nilpotent,
    })
}

/// Builds and analyses one catalog entry. Failures are recorded in the
/// row rather than returned.
pub fn sweep_entry(entry: &CatalogEntry, limits: &Limits) -> SweepRecord {
    let mut rec = SweepRecord {
        cd_size: None,
        cond1: None,
        cond2: None,
        cond3: None,
        delta: None,
        error: None,
        id: entry.id,
        iso_name: None,
        m_star: None,
        name: entry.name.clone(),
        nilpotent: None,
        order: entry.order,
        total_subgroups: None,
    };
    if let Err(e) = fill(entry, limits, &mut rec) {
        rec.error = Some(e.to_string());
    }
    rec
}

fn fill(entry: &CatalogEntry, limits: &Limits, rec: &mut SweepRecord) -> Result<()> {
    let g = entry.build(limits)?;
    let a = analyze(&g, limits)?;
    rec.cd_size = Some(a.report.cd_size());
    rec.delta = Some(a.report.delta);
    rec.m_star = Some(a.report.m_star);
    rec.total_subgroups = Some(a.report.total_subgroups);
    rec.nilpotent = Some(a.nilpotent);
    if let Some((p, _)) = prime_power(g.order()) {
        let c = conditions_on(&a.lattice, &a.report, p)?;
        rec.cond1 = Some(c.cond1);
        rec.cond2 = Some(c.cond2);
        rec.cond3 = Some(c.cond3);
    }
    rec.iso_name = identify(&g, limits).map(|s| s.to_string());
    Ok(())
}

/// Sweeps every entry of `order` in parallel; rows come back in id order.
pub fn sweep_order(catalog: &Catalog, order: usize, limits: &Limits) -> Result<Vec<SweepRecord>> {
    let entries: Vec<&CatalogEntry> = catalog.entries_of_order(order).collect();
    if entries.is_empty() {
        return Err(Error::MissingCatalog(order));
    }
    Ok(sweep_entries(&entries, limits))
}

pub fn sweep_entries(entries: &[&CatalogEntry], limits: &Limits) -> Vec<SweepRecord> {
    let mut rows: Vec<SweepRecord> = entries.par_iter().map(|e| sweep_entry(e, limits)).collect();
    rows.sort_by_key(|r| (r.order, r.id));
    rows
}

/// Pretty JSON array with sorted keys and a trailing newline.
pub fn write_report(records: &[SweepRecord], mut sink: impl Write) -> Result<()> {
    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by_key(|r| (r.order, r.id));
    serde_json::to_writer_pretty(&mut sink, &sorted)?;
    sink.write_all(b"\n")?;
    Ok(())
}

/// Venn cell sizes keyed by `(cond1, cond2, cond3)`.
pub fn venn_cells(
    records: &[SweepRecord],
) -> std::collections::BTreeMap<(bool, bool, bool), usize> {
    let mut cells = std::collections::BTreeMap::new();
    for r in records {
        if let (Some(a), Some(b), Some(c)) = (r.cond1, r.cond2, r.cond3) {
            *cells.entry((a, b, c)).or_insert(0) += 1;
        }
    }
    cells
}

/// Named families that could have order `n`, in a fixed order.
pub fn candidate_families(n: usize) -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Cyclic(n)];
    for (p, e) in factorize(n) {
        if e >= 2 {
            out.push(FamilySpec::product(
                FamilySpec::Cyclic(n / p),
                FamilySpec::Cyclic(p),
            ));
        }
    }
    if let Some((p, k)) = prime_power(n) {
        if k >= 3 && (p > 2 || k >= 4) {
            out.push(FamilySpec::Modular { p, k });
        }
        if p == 2 && k >= 3 {
            out.push(FamilySpec::Quaternion { k });
        }
    }
    for m in 3..=7usize {
        if (1..=m).product::<usize>() == n {
            out.push(FamilySpec::Symmetric(m));
        }
    }
    if n >= 6 && n.is_multiple_of(2) {
        out.push(FamilySpec::Dihedral(n));
    }
    out
}

/// First family in [`candidate_families`] isomorphic to `g`.
pub fn identify(g: &Group, limits: &Limits) -> Option<FamilySpec> {
    candidate_families(g.order()).into_iter().find(|spec| {
        spec.build(limits)
            .map(|h| is_isomorphic(g, &h))
            .unwrap_or(false)
    })
}
