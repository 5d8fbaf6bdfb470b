//! Theorem-level checks over every group of a catalog within an order bound.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Catalog, CatalogEntry};
use crate::group::{is_isomorphic, FamilySpec, Group};
use crate::subgroup::SubgroupLattice;
use crate::sweep::analyze;
use crate::{factorize, is_prime, Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// δ < 5 forces nilpotence.
    Nil,
    /// A non-nilpotent group with δ = 5 is S3.
    S3,
    /// Classification of δ = 3 and δ = 4.
    Lt5,
    /// Groups of order p^(k+1) with few subgroups of order p and restricted
    /// maximal subgroups.
    UpCheck,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nil" => Ok(Theorem::Nil),
            "s3" => Ok(Theorem::S3),
            "lt5" => Ok(Theorem::Lt5),
            "up" | "up_check" => Ok(Theorem::UpCheck),
            _ => Err(Error::BadSpec {
                spec: s.into(),
                reason: "expected one of nil, s3, lt5, up".into(),
            }),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Nil => "nil",
            Theorem::S3 => "s3",
            Theorem::Lt5 => "lt5",
            Theorem::UpCheck => "up_check",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    /// Orders whose groups were all examined.
    pub scope: Vec<usize>,
    pub groups_examined: usize,
    pub holds: bool,
    pub counterexamples: Vec<(usize, usize)>,
    /// Groups relevant to the statement, e.g. every δ = 3 instance.
    pub instances: Vec<Instance>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub order: usize,
    pub id: usize,
    pub delta: Option<usize>,
    pub matched: Option<String>,
}

impl TheoremVerdict {
    fn new(theorem: Theorem, scope: Vec<usize>, groups_examined: usize) -> Self {
        TheoremVerdict {
            theorem,
            scope,
            groups_examined,
            holds: true,
            counterexamples: Vec::new(),
            instances: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort_unstable();
        self.counterexamples.dedup();
        self.instances.sort_by_key(|i| (i.order, i.id));
        self.holds = self.counterexamples.is_empty();
        self
    }
}

/// Parameters for [`Theorem::UpCheck`]: the groups examined have order
/// `p^(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpParams {
    pub p: usize,
    pub k: u32,
}

impl Default for UpParams {
    fn default() -> Self {
        UpParams { p: 2, k: 5 }
    }
}

pub fn verify(
    theorem: Theorem,
    catalog: &Catalog,
    max_order: usize,
    up: UpParams,
    limits: &Limits,
) -> Result<TheoremVerdict> {
    match theorem {
        Theorem::Nil => verify_nil(catalog, max_order, limits),
        Theorem::S3 => verify_s3(catalog, max_order, limits),
        Theorem::Lt5 => verify_lt5(catalog, max_order, limits),
        Theorem::UpCheck => verify_up(catalog, up, limits),
    }
}

struct Row {
    order: usize,
    id: usize,
    delta: usize,
    nilpotent: bool,
    matched: Option<String>,
}

/// Checks completeness of every order in `1..=max_order`, then analyses
/// each entry in parallel; `classify` may name the group it matched.
fn rows(
    catalog: &Catalog,
    max_order: usize,
    limits: &Limits,
    classify: impl Fn(&Group, usize, bool) -> Option<String> + Sync,
) -> Result<(Vec<usize>, Vec<Row>)> {
    let scope: Vec<usize> = (1..=max_order).collect();
    for &n in &scope {
        catalog.require_complete(n)?;
    }
    let entries: Vec<&CatalogEntry> = catalog
        .entries
        .iter()
        .filter(|e| e.order <= max_order)
        .collect();
    let mut rows = entries
        .par_iter()
        .map(|e| {
            let wrap = |source| Error::Entry {
                order: e.order,
                id: e.id,
                source: Box::new(source),
            };
            let g = e.build(limits).map_err(wrap)?;
            let a = analyze(&g, limits).map_err(wrap)?;
            let matched = classify(&g, a.report.delta, a.nilpotent);
            Ok(Row {
                order: e.order,
                id: e.id,
                delta: a.report.delta,
                nilpotent: a.nilpotent,
                matched,
            })
        })
        .collect::<Result<Vec<Row>>>()?;
    rows.sort_by_key(|r| (r.order, r.id));
    Ok((scope, rows))
}

fn build_all(specs: &[FamilySpec], limits: &Limits) -> Result<Vec<(String, Group)>> {
    specs
        .iter()
        .map(|s| Ok((s.to_string(), s.build(limits)?)))
        .collect()
}

fn first_match(g: &Group, targets: &[(String, Group)]) -> Option<String> {
    targets
        .iter()
        .find(|(_, t)| t.order() == g.order() && is_isomorphic(g, t))
        .map(|(name, _)| name.clone())
}

fn verify_nil(catalog: &Catalog, max_order: usize, limits: &Limits) -> Result<TheoremVerdict> {
    let (scope, rows) = rows(catalog, max_order, limits, |_, _, _| None)?;
    let mut v = TheoremVerdict::new(Theorem::Nil, scope, rows.len());
    for r in rows.iter().filter(|r| r.delta < 5) {
        v.instances.push(Instance {
            order: r.order,
            id: r.id,
            delta: Some(r.delta),
            matched: None,
        });
        if !r.nilpotent {
            v.counterexamples.push((r.order, r.id));
        }
    }
    v.notes.push(format!(
        "{} groups with delta < 5, all required nilpotent",
        v.instances.len()
    ));
    Ok(v.finish())
}

fn verify_s3(catalog: &Catalog, max_order: usize, limits: &Limits) -> Result<TheoremVerdict> {
    let target = build_all(&[FamilySpec::Symmetric(3)], limits)?;
    let (scope, rows) = rows(catalog, max_order, limits, |g, delta, nil| {
        (delta == 5 && !nil)
            .then(|| first_match(g, &target))
            .flatten()
    })?;
    let mut v = TheoremVerdict::new(Theorem::S3, scope, rows.len());
    for r in rows.iter().filter(|r| r.delta == 5 && !r.nilpotent) {
        v.instances.push(Instance {
            order: r.order,
            id: r.id,
            delta: Some(5),
            matched: r.matched.clone(),
        });
        if r.matched.is_none() {
            v.counterexamples.push((r.order, r.id));
        }
    }
    v.notes.push(format!(
        "{} non-nilpotent groups with delta = 5",
        v.instances.len()
    ));
    Ok(v.finish())
}

/// Cyclic groups of order `pq` or `p^3`.
pub fn lt5_targets_delta3(n: usize) -> Vec<FamilySpec> {
    let f = factorize(n);
    let shape = matches!(f.as_slice(), [(_, 1), (_, 1)] | [(_, 3)]);
    if shape {
        vec![FamilySpec::Cyclic(n)]
    } else {
        Vec::new()
    }
}

/// `C_{p^4}`, `C2 x C2` and `M27`.
pub fn lt5_targets_delta4(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if let [(_, 4)] = factorize(n).as_slice() {
        out.push(FamilySpec::Cyclic(n));
    }
    if n == 4 {
        out.push(FamilySpec::product(
            FamilySpec::Cyclic(2),
            FamilySpec::Cyclic(2),
        ));
    }
    if n == 27 {
        out.push(FamilySpec::Modular { p: 3, k: 3 });
    }
    out
}

fn verify_lt5(catalog: &Catalog, max_order: usize, limits: &Limits) -> Result<TheoremVerdict> {
    let mut targets3 = Vec::new();
    let mut targets4 = Vec::new();
    for n in 1..=max_order {
        targets3.extend(build_all(&lt5_targets_delta3(n), limits)?);
        targets4.extend(build_all(&lt5_targets_delta4(n), limits)?);
    }
    // A group is relevant when its δ is 3 or 4, or when it is a target.
    let (scope, rows) = rows(catalog, max_order, limits, |g, _, _| {
        first_match(g, &targets3)
            .map(|m| format!("3:{m}"))
            .or_else(|| first_match(g, &targets4).map(|m| format!("4:{m}")))
    })?;
    let mut v = TheoremVerdict::new(Theorem::Lt5, scope, rows.len());
    for r in &rows {
        let expected = r.matched.as_deref().map(|m| (&m[..1], &m[2..]));
        let expected_delta = expected.map(|(d, _)| if d == "3" { 3 } else { 4 });
        let actual = (r.delta == 3 || r.delta == 4).then_some(r.delta);
        if expected_delta.is_none() && actual.is_none() {
            continue;
        }
        v.instances.push(Instance {
            order: r.order,
            id: r.id,
            delta: Some(r.delta),
            matched: expected.map(|(_, name)| name.to_string()),
        });
        if expected_delta != actual {
            v.counterexamples.push((r.order, r.id));
        }
    }
    let count = |d| v.instances.iter().filter(|i| i.delta == Some(d)).count();
    let (n3, n4) = (count(3), count(4));
    v.notes
        .push(format!("{n3} groups with delta = 3, {n4} with delta = 4"));
    Ok(v.finish())
}

fn verify_up(catalog: &Catalog, params: UpParams, limits: &Limits) -> Result<TheoremVerdict> {
    let UpParams { p, k } = params;
    if !is_prime(p) || k < 2 {
        return Err(Error::InvalidFamilyParameters(format!(
            "up check needs a prime p and k >= 2, got p = {p}, k = {k}"
        )));
    }
    let n = p
        .checked_pow(k + 1)
        .filter(|&n| n <= limits.max_order)
        .ok_or(Error::GroupTooLarge {
            cap: limits.max_order,
        })?;
    catalog.require_complete(n)?;

    let modular_ok = |k: u32| k >= 3 && (p > 2 || k >= 4);
    let pk = p.pow(k);
    let mut max_specs = vec![
        FamilySpec::Cyclic(pk),
        FamilySpec::product(FamilySpec::Cyclic(pk / p), FamilySpec::Cyclic(p)),
    ];
    if modular_ok(k) {
        max_specs.push(FamilySpec::Modular { p, k });
    }
    let mut concl_specs = vec![
        FamilySpec::Cyclic(n),
        FamilySpec::product(FamilySpec::Cyclic(pk), FamilySpec::Cyclic(p)),
    ];
    if modular_ok(k + 1) {
        concl_specs.push(FamilySpec::Modular { p, k: k + 1 });
    }
    let maximal_targets = build_all(&max_specs, limits)?;
    let conclusion_targets = build_all(&concl_specs, limits)?;

    let entries: Vec<&CatalogEntry> = catalog.entries_of_order(n).collect();
    let mut rows = entries
        .par_iter()
        .map(|e| {
            let wrap = |source| Error::Entry {
                order: e.order,
                id: e.id,
                source: Box::new(source),
            };
            let g = e.build(limits).map_err(wrap)?;
            let lat = SubgroupLattice::enumerate(&g, limits).map_err(wrap)?;
            let few_order_p = lat.subgroups_of_order(p).len() <= p + 1;
            let hypothesis = few_order_p
                && lat.subgroups_of_order(pk).into_iter().all(|m| {
                    g.induced(m.members())
                        .map(|(h, _)| first_match(&h, &maximal_targets).is_some())
                        .unwrap_or(false)
                });
            let conclusion = first_match(&g, &conclusion_targets);
            Ok((e.id, hypothesis, conclusion))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.0);

    let mut v = TheoremVerdict::new(Theorem::UpCheck, vec![n], rows.len());
    for (id, hypothesis, conclusion) in rows {
        if !hypothesis && conclusion.is_none() {
            continue;
        }
        if hypothesis != conclusion.is_some() {
            v.counterexamples.push((n, id));
        }
        v.instances.push(Instance {
            order: n,
            id,
            delta: None,
            matched: conclusion,
        });
    }
    v.notes.push(if k > 4 {
        format!("k = {k} is inside the k > 4 hypothesis")
    } else {
        format!("k = {k} is outside the k > 4 hypothesis (order {n}); the result is a spot check")
    });
    v.notes.push(format!(
        "abelian maximal subgroup read as C{}xC{p}, abelian conclusion read as C{pk}xC{p}",
        pk / p
    ));
    if !modular_ok(k) {
        v.notes.push(format!(
            "no modular group of order {pk} exists, so it is not a maximal-subgroup target"
        ));
    }
    Ok(v.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_catalog;

    /// All groups of order at most 6.
    const SMALL: &str = "\
# count 1 1
# count 2 1
# count 3 1
# count 4 2
# count 5 1
# count 6 2
group 1 1 1

group 2 1 C2
gen 1 0

group 3 1 C3
gen 1 2 0

group 4 1 C4
gen 1 2 3 0

group 4 2 C2xC2
gen 1 0 3 2
gen 2 3 0 1

group 5 1 C5
gen 1 2 3 4 0

group 6 1 S3
gen 1 2 0
gen 1 0 2

group 6 2 C6
gen 1 2 0 4 3
";

    fn small() -> Catalog {
        parse_catalog(SMALL.as_bytes(), &Limits::default()).unwrap()
    }

    #[test]
    fn small_orders() {
        let l = Limits::default();
        let c = small();
        for t in [Theorem::Nil, Theorem::S3, Theorem::Lt5] {
            let v = verify(t, &c, 6, UpParams::default(), &l).unwrap();
            assert!(v.holds, "{t}: {:?}", v.counterexamples);
            assert_eq!(v.scope, vec![1, 2, 3, 4, 5, 6]);
            assert_eq!(v.groups_examined, 8);
        }
        let s3 = verify(Theorem::S3, &c, 6, UpParams::default(), &l).unwrap();
        assert_eq!(s3.instances.len(), 1);
        assert_eq!(s3.instances[0].matched.as_deref(), Some("s 3"));
        let lt5 = verify(Theorem::Lt5, &c, 6, UpParams::default(), &l).unwrap();
        let ids: Vec<_> = lt5
            .instances
            .iter()
            .map(|i| (i.order, i.id, i.delta))
            .collect();
        assert_eq!(ids, vec![(4, 2, Some(4)), (6, 2, Some(3))]);
    }

    #[test]
    fn incomplete_catalog_is_refused() {
        let c = small();
        let err = verify(Theorem::Nil, &c, 7, UpParams::default(), &Limits::default());
        assert!(matches!(
            err,
            Err(Error::IncompleteCatalog { order: 7, .. })
        ));
    }

    #[test]
    fn theorem_names() {
        for s in ["nil", "s3", "lt5"] {
            assert_eq!(s.parse::<Theorem>().unwrap().to_string(), s);
        }
        assert_eq!("up".parse::<Theorem>().unwrap(), Theorem::UpCheck);
        assert!("lt6".parse::<Theorem>().is_err());
    }

    #[test]
    fn targets() {
        assert_eq!(lt5_targets_delta3(15).len(), 1);
        assert_eq!(lt5_targets_delta3(27).len(), 1);
        assert!(lt5_targets_delta3(12).is_empty());
        assert!(lt5_targets_delta3(9).is_empty());
        assert_eq!(lt5_targets_delta4(27).len(), 1);
        assert_eq!(lt5_targets_delta4(16).len(), 1);
        assert_eq!(lt5_targets_delta4(4).len(), 1);
        assert_eq!(lt5_targets_delta4(81).len(), 1);
    }
}
