use std::collections::HashMap;

use super::Subgroup;
use crate::bitset::Bitset;
use crate::group::Group;
use crate::{factorize, Error, Limits, Result};

/// Every subgroup of a group, sorted by `(order, member bitset)`.
#[derive(Clone, Debug)]
pub struct SubgroupLattice<'g> {
    group: &'g Group,
    subgroups: Vec<Subgroup>,
    index: HashMap<Bitset, usize>,
}

/// Sylow `p`-subgroups: their common order, how many there are, and the
/// subgroups themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowData {
    pub sylow_order: usize,
    pub count: usize,
    pub representatives: Vec<Subgroup>,
}

impl<'g> SubgroupLattice<'g> {
    /// Enumerates all subgroups.
    ///
    /// Starts from the cyclic subgroups and joins every subgroup found so far
    /// with every cyclic subgroup until nothing new appears. Every subgroup
    /// is generated by finitely many elements, so adding one cyclic
    /// subgroup at a time reaches all of them.
    pub fn enumerate(group: &'g Group, limits: &Limits) -> Result<Self> {
        let n = group.order();
        if n > limits.max_order {
            return Err(Error::GroupTooLarge {
                cap: limits.max_order,
            });
        }
        let cap = limits.max_subgroups;
        let mut found: Vec<Subgroup> = Vec::new();
        let mut index: HashMap<Bitset, usize> = HashMap::new();
        let mut push = |h: Subgroup, found: &mut Vec<Subgroup>| -> Result<()> {
            if !index.contains_key(h.members()) {
                if found.len() >= cap {
                    return Err(Error::LatticeTooLarge { cap });
                }
                index.insert(h.members().clone(), found.len());
                found.push(h);
            }
            Ok(())
        };

        push(group.trivial_subgroup(), &mut found)?;
        let mut cyclic_gens = Vec::new();
        let mut covered = Bitset::new(n);
        // Larger orders first: a generator of <x> covers every element whose
        // cyclic subgroup is the same.
        let mut by_order: Vec<usize> = (1..n).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
        for x in by_order {
            if covered.contains(x) {
                continue;
            }
            let c = group.extend_subgroup(&group.trivial_subgroup(), x);
            for k in 1..group.element_order(x) {
                if gcd(k, group.element_order(x)) == 1 {
                    covered.insert(group.pow(x, k));
                }
            }
            cyclic_gens.push(x);
            push(c, &mut found)?;
        }

        let mut head = 0;
        while head < found.len() {
            let h = found[head].clone();
            head += 1;
            if h.order() == n {
                continue;
            }
            for &x in &cyclic_gens {
                if h.contains(x) {
                    continue;
                }
                let k = group.extend_subgroup(&h, x);
                push(k, &mut found)?;
            }
        }

        found.sort();
        let index = found
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().clone(), i))
            .collect();
        Ok(SubgroupLattice {
            group,
            subgroups: found,
            index,
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.members()).copied()
    }

    pub fn position_of_members(&self, members: &Bitset) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().unwrap()
    }

    pub fn subgroups_of_order(&self, m: usize) -> Vec<&Subgroup> {
        self.subgroups.iter().filter(|h| h.order() == m).collect()
    }

    /// All `J` with `lo <= J <= hi`.
    pub fn interval(&self, lo: &Subgroup, hi: &Subgroup) -> Result<Vec<&Subgroup>> {
        if !lo.is_subgroup_of(hi) {
            return Err(Error::NotNested);
        }
        Ok(self
            .subgroups
            .iter()
            .filter(|j| lo.is_subgroup_of(j) && j.is_subgroup_of(hi))
            .collect())
    }

    /// Orbits of the conjugation action, each a sorted list of lattice
    /// positions; classes are ordered by their first member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let g = self.group;
        let gens = g.generators();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut orbit = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < orbit.len() {
                let h = &self.subgroups[orbit[head]];
                head += 1;
                for &x in &gens {
                    let c = g.conjugate_subgroup(h, x);
                    let pos = self
                        .position(&c)
                        .expect("conjugate of a subgroup is a subgroup");
                    if class_of[pos] == usize::MAX {
                        class_of[pos] = id;
                        orbit.push(pos);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    /// Sylow `p`-subgroups read off the lattice. When `p` does not divide
    /// the group order the answer is the trivial subgroup, once.
    ///
    /// Panics if the count violates Sylow's theorems, which would mean the
    /// lattice is wrong.
    pub fn sylow_data(&self, p: usize) -> SylowData {
        let mut m = self.group.order();
        let mut sylow_order = 1;
        while p > 1 && m.is_multiple_of(p) {
            m /= p;
            sylow_order *= p;
        }
        let representatives: Vec<Subgroup> = self
            .subgroups_of_order(sylow_order)
            .into_iter()
            .cloned()
            .collect();
        let count = representatives.len();
        if sylow_order > 1 {
            assert_eq!(count % p, 1, "Sylow count {count} is not 1 mod {p}");
            assert_eq!(m % count, 0, "Sylow count {count} does not divide {m}");
        }
        SylowData {
            sylow_order,
            count,
            representatives,
        }
    }

    /// Nilpotent iff every Sylow subgroup is normal, i.e. unique.
    pub fn is_nilpotent(&self) -> bool {
        factorize(self.group.order())
            .into_iter()
            .all(|(p, _)| self.sylow_data(p).count == 1)
    }

    /// Subgroups of prime-power order greater than one.
    pub fn nontrivial_prime_power_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups
            .iter()
            .filter(|h| crate::prime_power(h.order()).is_some())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
