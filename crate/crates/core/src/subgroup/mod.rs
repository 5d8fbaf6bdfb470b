//! Subgroups as bitsets, and the structural operations on them.

mod lattice;

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bitset::Bitset;
use crate::group::Group;
use crate::{Error, Result};

pub use lattice::{SubgroupLattice, SylowData};

/// A subgroup of a parent group, as the set of its element indices.
///
/// Equality, hashing and ordering only look at the member set; ordering is
/// by order first, then by the member bitset read as an integer.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Bitset,
    order: usize,
    parent_order: usize,
    gens: Vec<u32>,
}

impl Subgroup {
    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.gens.iter().map(|&x| x as usize)
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Group {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: Bitset::from_indices(self.order(), [0]),
            order: 1,
            parent_order: self.order(),
            gens: Vec::new(),
        }
    }

    pub fn whole(&self) -> Subgroup {
        self.closure(&Bitset::full(self.order()))
    }

    /// `<h, x>`, built coset by coset: the result is a union of right cosets
    /// `h y`, and it is closed once every coset is closed under right
    /// multiplication by the generators.
    pub fn extend_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        if h.contains(x) {
            return h.clone();
        }
        let base: Vec<usize> = h.members.iter().collect();
        let mut gens = h.gens.clone();
        gens.push(x as u32);
        let mut members = h.members.clone();
        let mut order = h.order;
        let mut reps = vec![0usize];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(r, s as usize);
                if !members.contains(y) {
                    for &b in &base {
                        members.insert(self.mul(b, y));
                    }
                    order += base.len();
                    reps.push(y);
                }
            }
        }
        Subgroup {
            members,
            order,
            parent_order: self.order(),
            gens,
        }
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &Bitset) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for x in seed.iter() {
            if !h.contains(x) {
                h = self.extend_subgroup(&h, x);
            }
        }
        h
    }

    /// `<a, b>`
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let (big, small) = if a.order >= b.order { (a, b) } else { (b, a) };
        let mut h = big.clone();
        for x in small.generators() {
            if !h.contains(x) {
                h = self.extend_subgroup(&h, x);
            }
        }
        h
    }

    pub fn meet(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.closure(&a.members.intersection(&b.members))
    }

    /// Accepts `members` only if it is a subgroup.
    pub fn subgroup_from_members(&self, members: &Bitset) -> Result<Subgroup> {
        if !members.contains(0) {
            return Err(Error::NotASubgroup);
        }
        let h = self.closure(members);
        if h.members == *members {
            Ok(h)
        } else {
            Err(Error::NotASubgroup)
        }
    }

    /// Elements commuting with every element of `h`.
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let cents = self.element_centralizers();
        let mut members = Bitset::full(self.order());
        for x in h.generators() {
            members.intersect_with(&cents[x]);
        }
        self.closure_of_subgroup_set(members)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// `{x : x^-1 h x = h}`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = Bitset::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| h.generators().all(|y| h.contains(self.conjugate(y, x)))),
        );
        self.closure_of_subgroup_set(members)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normal_closure(h, &self.whole()) == *h
    }

    /// Smallest subgroup of `k` containing `h` and normalised by `k`.
    /// Requires `h <= k`.
    pub fn normal_closure(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut n = h.clone();
        loop {
            let mut grew = false;
            let gens: Vec<usize> = n.generators().collect();
            for y in gens {
                for x in k.generators() {
                    let c = self.conjugate(y, x);
                    if !n.contains(c) {
                        n = self.extend_subgroup(&n, c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return n;
            }
        }
    }

    /// Series `G = K_0 >= K_1 >= ...` with `K_{i+1}` the normal closure of
    /// `h` in `K_i`. It stops either at `h` (subnormal) or at a proper
    /// overgroup of `h` that is its own normal closure.
    pub fn subnormal_series(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.normal_closure(h, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// True iff `h` is reached by a chain of successive normal subgroups
    /// from the whole group.
    pub fn is_subnormal(&self, h: &Subgroup) -> bool {
        self.subnormal_series(h).last() == Some(h)
    }

    /// `x^-1 h x`
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        let members =
            Bitset::from_indices(self.order(), h.elements().map(|y| self.conjugate(y, x)));
        Subgroup {
            members,
            order: h.order,
            parent_order: self.order(),
            gens: h
                .gens
                .iter()
                .map(|&y| self.conjugate(y as usize, x) as u32)
                .collect(),
        }
    }

    /// Small generating set of the whole group.
    pub fn generators(&self) -> Vec<usize> {
        self.whole().generators().collect()
    }

    // `members` is known to be a subgroup; this only recovers generators.
    fn closure_of_subgroup_set(&self, members: Bitset) -> Subgroup {
        let h = self.closure(&members);
        debug_assert_eq!(h.members, members);
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FamilySpec, Limits};

    fn build(s: &str) -> Group {
        s.parse::<FamilySpec>()
            .unwrap()
            .build(&Limits::default())
            .unwrap()
    }

    fn elements_of_order(g: &Group, k: usize) -> Vec<usize> {
        (0..g.order())
            .filter(|&x| g.element_order(x) == k)
            .collect()
    }

    /// Brute-force product saturation, independent of the coset walk.
    fn saturate(g: &Group, seed: &[usize]) -> Vec<usize> {
        let mut set: std::collections::BTreeSet<usize> = seed.iter().copied().collect();
        set.insert(0);
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                set.insert(g.inv(a));
                for &b in &cur {
                    set.insert(g.mul(a, b));
                }
            }
            if set.len() == before {
                return cur;
            }
        }
    }

    #[test]
    fn closure_examples() {
        let g = build("s 3");
        assert_eq!(g.closure(&Bitset::from_indices(6, [0])).order(), 1);
        let three = elements_of_order(&g, 3)[0];
        assert_eq!(g.closure(&Bitset::from_indices(6, [three])).order(), 3);
        let inv = elements_of_order(&g, 2);
        let h = g.closure(&Bitset::from_indices(6, [inv[0], inv[1]]));
        assert_eq!(h.elements().collect::<Vec<_>>(), saturate(&g, &inv[..2]));
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn centralizer_and_center() {
        let s3 = build("s 3");
        assert_eq!(s3.centralizer(&s3.trivial_subgroup()).order(), 6);
        let c3 = s3.closure(&Bitset::from_indices(6, [elements_of_order(&s3, 3)[0]]));
        // oracle: brute-force commuting check
        let brute: Vec<usize> = (0..6)
            .filter(|&x| c3.elements().all(|y| s3.commutes(x, y)))
            .collect();
        assert_eq!(s3.centralizer(&c3).elements().collect::<Vec<_>>(), brute);
        assert_eq!(s3.centralizer(&c3), c3);
        assert_eq!(s3.center().order(), 1);
        assert_eq!(build("q 8").center().order(), 2);
        assert_eq!(build("c 12").center().order(), 12);
        let m27 = build("m 3 3");
        let z = m27.center();
        let brute: Vec<usize> = (0..27)
            .filter(|&x| (0..27).all(|y| m27.commutes(x, y)))
            .collect();
        assert_eq!(z.elements().collect::<Vec<_>>(), brute);
        assert_eq!(z.order(), 3);
    }

    #[test]
    fn normalizers() {
        let s3 = build("s 3");
        let t = s3.closure(&Bitset::from_indices(6, [elements_of_order(&s3, 2)[0]]));
        assert_eq!(s3.normalizer(&t), t);
        assert_eq!(s3.normalizer(&s3.trivial_subgroup()).order(), 6);
        let c3 = s3.closure(&Bitset::from_indices(6, [elements_of_order(&s3, 3)[0]]));
        assert_eq!(s3.normalizer(&c3).order(), 6);
        assert!(s3.is_normal(&c3));
        assert!(!s3.is_normal(&t));
    }

    #[test]
    fn subnormality() {
        let s3 = build("s 3");
        let t = s3.closure(&Bitset::from_indices(6, [elements_of_order(&s3, 2)[0]]));
        assert!(!s3.is_subnormal(&t));
        assert!(s3.is_subnormal(&s3.center()));
        // <(0 1)(2 3)> in S4 is subnormal via V4, although its normalizer chain
        // stalls at a self-normalising Sylow 2-subgroup.
        let s4 = build("s 4");
        let labels = s4.labels().unwrap();
        let x = labels.iter().position(|l| l == "(0,1)(2,3)").unwrap();
        let h = s4.closure(&Bitset::from_indices(24, [x]));
        assert!(s4.is_subnormal(&h));
        let n1 = s4.normalizer(&h);
        assert_eq!(n1.order(), 8);
        assert_eq!(s4.normalizer(&n1), n1);
        assert_eq!(s4.subnormal_series(&h).len(), 3);
    }

    #[test]
    fn subgroup_from_members_validates() {
        let g = build("c 6");
        assert!(g
            .subgroup_from_members(&Bitset::from_indices(6, [0, 3]))
            .is_ok());
        assert!(g
            .subgroup_from_members(&Bitset::from_indices(6, [0, 1]))
            .is_err());
        assert!(g
            .subgroup_from_members(&Bitset::from_indices(6, [3]))
            .is_err());
    }
}
