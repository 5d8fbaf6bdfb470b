//! Hasse diagrams of subgroup lattices, with Chermak-Delgado members marked.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cd::CdReport;
use crate::subgroup::SubgroupLattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseNode {
    pub id: usize,
    pub order: usize,
    pub measure: u64,
    pub cd: bool,
    /// Short structural tag: `cyclic`, `abelian` or `nonabelian`.
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub group: String,
    pub m_star: u64,
    pub nodes: Vec<HasseNode>,
    /// Cover relations `(lower, upper)` as node ids.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Node ids are lattice positions, so the layout is deterministic.
    pub fn new(lat: &SubgroupLattice, report: &CdReport) -> Self {
        let g = lat.group();
        let subs = lat.subgroups();
        let nodes = subs
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let abelian = h.elements().all(|x| h.elements().all(|y| g.commutes(x, y)));
                let cyclic = h.elements().any(|x| g.element_order(x) == h.order());
                HasseNode {
                    id: i,
                    order: h.order(),
                    measure: report.measures[i],
                    cd: report.measures[i] == report.m_star,
                    kind: if cyclic {
                        "cyclic"
                    } else if abelian {
                        "abelian"
                    } else {
                        "nonabelian"
                    },
                }
            })
            .collect();

        // Maximal subgroups of each K: scanning proper subgroups by
        // decreasing order, one is maximal iff no maximal found so far
        // contains it.
        let mut edges = Vec::new();
        for (k, upper) in subs.iter().enumerate() {
            let mut maximal: Vec<usize> = Vec::new();
            for j in (0..k).rev() {
                let h = &subs[j];
                if h.order() == upper.order() || !h.is_subgroup_of(upper) {
                    continue;
                }
                if maximal.iter().all(|&m| !h.is_subgroup_of(&subs[m])) {
                    maximal.push(j);
                }
            }
            maximal.sort_unstable();
            edges.extend(maximal.into_iter().map(|j| (j, k)));
        }
        edges.sort_unstable();

        HasseDiagram {
            group: g.name().unwrap_or("G").to_string(),
            m_star: report.m_star,
            nodes,
            edges,
        }
    }

    pub fn marked(&self) -> usize {
        self.nodes.iter().filter(|n| n.cd).count()
    }

    /// Graphviz DOT; members of the Chermak-Delgado lattice are drawn with a
    /// double border and shaded.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph subgroups {{");
        let _ = writeln!(
            out,
            "  label=\"{} (m* = {})\";",
            escape(&self.group),
            self.m_star
        );
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=ellipse];");
        for n in &self.nodes {
            let _ = write!(
                out,
                "  n{} [label=\"|H|={}\\nm={}\", order={}, kind={}",
                n.id, n.order, n.measure, n.order, n.kind
            );
            if n.cd {
                let _ = write!(
                    out,
                    ", cd=true, peripheries=2, style=filled, fillcolor=lightblue"
                );
            }
            let _ = writeln!(out, "];");
        }
        let mut orders: Vec<usize> = self.nodes.iter().map(|n| n.order).collect();
        orders.dedup();
        for o in orders {
            let ids: Vec<String> = self
                .nodes
                .iter()
                .filter(|n| n.order == o)
                .map(|n| format!("n{}", n.id))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join("; "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cd::cd_lattice;
    use crate::{FamilySpec, Limits};

    fn diagram(s: &str) -> HasseDiagram {
        let g = s
            .parse::<FamilySpec>()
            .unwrap()
            .build(&Limits::default())
            .unwrap();
        let lat = SubgroupLattice::enumerate(&g, &Limits::default()).unwrap();
        let r = cd_lattice(&lat).unwrap();
        HasseDiagram::new(&lat, &r)
    }

    #[test]
    fn s3_diagram() {
        let d = diagram("s 3");
        assert_eq!(d.nodes.len(), 6);
        assert_eq!(d.edges.len(), 8);
        assert_eq!(d.marked(), 1);
        let marked = d.nodes.iter().find(|n| n.cd).unwrap();
        assert_eq!((marked.order, marked.kind), (3, "cyclic"));
        let dot = d.to_dot();
        assert_eq!(dot.matches("peripheries=2").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 8);
    }

    #[test]
    fn m27_diagram() {
        let d = diagram("m 3 3");
        assert_eq!(d.nodes.len(), 10);
        assert_eq!(d.marked(), 6);
        // 4 covers of 1, then each C3 under its order-9 overgroups, then 4 under G
        let covers_of_trivial = d.edges.iter().filter(|e| e.0 == 0).count();
        assert_eq!(covers_of_trivial, 4);
        assert_eq!(d.edges.iter().filter(|e| e.1 == 9).count(), 4);
    }

    #[test]
    fn trivial_diagram() {
        let d = diagram("c 1");
        assert_eq!((d.nodes.len(), d.edges.len(), d.marked()), (1, 0, 1));
        assert_eq!(d.to_dot(), diagram("c 1").to_dot());
    }
}
