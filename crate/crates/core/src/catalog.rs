//! Line-oriented catalog of groups given by permutation generators.
//!
//! ```text
//! # comment
//! # count 6 2
//! group 6 1 S3
//! gen 1 2 0
//! gen 1 0 2
//!
//! ```
//!
//! `group <order> <id> [<name>]` opens an entry, each `gen` line lists the
//! 0-based images of one generator, and a blank line closes the entry. A
//! comment of the form `# count <order> <n>` declares that the catalog
//! holds all `n` groups of that order; the declaration is checked on load.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::group::{Group, Permutation};
use crate::{Error, Limits, Result};

pub const MAX_DEGREE: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub order: usize,
    pub id: usize,
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl CatalogEntry {
    pub fn build(&self, limits: &Limits) -> Result<Group> {
        let g = Group::from_generators(self.degree, &self.generators, Some(self.order), limits)?;
        Ok(match &self.name {
            Some(n) => g.with_name(n.clone()),
            None => g,
        })
    }
}

/// Parsed catalog: the entries, plus the per-order counts declared in the
/// header comments.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub declared_counts: BTreeMap<usize, usize>,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn merge(&mut self, other: Catalog) {
        self.declared_counts.extend(other.declared_counts);
        self.entries.extend(other.entries);
        self.entries.sort_by_key(|e| (e.order, e.id));
    }

    pub fn entries_of_order(&self, order: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == order)
    }

    pub fn find(&self, order: usize, id: usize) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.order == order && e.id == id)
    }

    /// Errors unless the catalog declares and lists every group of `order`.
    pub fn require_complete(&self, order: usize) -> Result<()> {
        let listed = self.entries_of_order(order).count();
        match self.declared_counts.get(&order) {
            None => Err(Error::IncompleteCatalog {
                order,
                reason: "no `# count` declaration".into(),
            }),
            Some(&declared) if declared != listed => Err(Error::IncompleteCatalog {
                order,
                reason: format!("{listed} of {declared} groups listed"),
            }),
            Some(_) => Ok(()),
        }
    }
}

/// Parses and validates a catalog. Every entry is built with its declared
/// order as the expected order, and declared counts are checked.
pub fn parse_catalog(input: impl BufRead, limits: &Limits) -> Result<Catalog> {
    let catalog = parse_unchecked(input)?;
    for e in &catalog.entries {
        e.build(limits).map_err(|source| Error::Entry {
            order: e.order,
            id: e.id,
            source: Box::new(source),
        })?;
    }
    for (&order, &declared) in &catalog.declared_counts {
        let listed = catalog.entries_of_order(order).count();
        if listed != declared {
            return Err(Error::CountMismatch {
                order,
                declared,
                listed,
            });
        }
    }
    Ok(catalog)
}

/// Syntax-only parse: no group is built.
pub fn parse_unchecked(input: impl BufRead) -> Result<Catalog> {
    let mut catalog = Catalog::default();
    let mut current: Option<(usize, CatalogEntry)> = None;

    fn finish(current: &mut Option<(usize, CatalogEntry)>, catalog: &mut Catalog) -> Result<()> {
        if let Some((line, e)) = current.take() {
            if e.generators.is_empty() && e.order != 1 {
                return Err(Error::Parse {
                    line,
                    reason: format!("group {} {} has no generators", e.order, e.id),
                });
            }
            catalog.entries.push(e);
        }
        Ok(())
    }

    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let err = |reason: String| Error::Parse {
            line: lineno,
            reason,
        };
        let text = line.trim();
        if let Some(comment) = text.strip_prefix('#') {
            let words: Vec<&str> = comment.split_whitespace().collect();
            if let ["count", order, n] = words.as_slice() {
                let order = order.parse().map_err(|_| err("bad count order".into()))?;
                let n = n.parse().map_err(|_| err("bad count value".into()))?;
                catalog.declared_counts.insert(order, n);
            }
            continue;
        }
        if text.is_empty() {
            finish(&mut current, &mut catalog)?;
            continue;
        }
        let mut words = text.split_whitespace();
        match words.next() {
            Some("group") => {
                finish(&mut current, &mut catalog)?;
                let order: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .filter(|&o| o > 0)
                    .ok_or_else(|| err("expected `group <order> <id> [<name>]`".into()))?;
                let id: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .filter(|&i| i > 0)
                    .ok_or_else(|| err("expected a positive group id".into()))?;
                let rest: Vec<&str> = words.collect();
                let name = (!rest.is_empty()).then(|| rest.join(" "));
                current = Some((
                    lineno,
                    CatalogEntry {
                        order,
                        id,
                        name,
                        degree: 0,
                        generators: Vec::new(),
                    },
                ));
            }
            Some("gen") => {
                let Some((_, entry)) = current.as_mut() else {
                    return Err(err("`gen` outside a group entry".into()));
                };
                let images = words
                    .map(|w| w.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err("generator images must be non-negative integers".into()))?;
                if images.is_empty() {
                    return Err(err("empty generator".into()));
                }
                if entry.generators.is_empty() {
                    entry.degree = images.len();
                    if entry.degree > MAX_DEGREE {
                        return Err(err(format!("degree {} exceeds {MAX_DEGREE}", entry.degree)));
                    }
                } else if images.len() != entry.degree {
                    return Err(err(format!(
                        "generator has {} images, expected degree {}",
                        images.len(),
                        entry.degree
                    )));
                }
                let p = Permutation::new(images).map_err(|e| err(e.to_string()))?;
                entry.generators.push(p);
            }
            Some(other) => return Err(err(format!("unexpected keyword `{other}`"))),
            None => unreachable!(),
        }
    }
    finish(&mut current, &mut catalog)?;
    Ok(catalog)
}

/// Writes a catalog back in the text format.
pub fn write_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    for (order, n) in &catalog.declared_counts {
        let _ = writeln!(out, "# count {order} {n}");
    }
    out.push('\n');
    for e in &catalog.entries {
        let _ = write!(out, "group {} {}", e.order, e.id);
        if let Some(name) = &e.name {
            let _ = write!(out, " {name}");
        }
        out.push('\n');
        for g in &e.generators {
            let images: Vec<String> = g.images().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "gen {}", images.join(" "));
        }
        out.push('\n');
    }
    out
}
