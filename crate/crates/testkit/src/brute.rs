//! Subgroups by exhaustive closure of small generating sets, working on a
//! raw multiplication table with nothing shared with the library's
//! enumeration code.

use std::collections::BTreeSet;

/// Row-major table over `0..n` with identity 0.
pub struct Table<'a> {
    pub n: usize,
    pub mul: &'a [u32],
}

impl Table<'_> {
    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// Smallest product-closed set containing `seed` and the identity. In a
    /// finite group that is the generated subgroup.
    pub fn close(&self, seed: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut list = vec![0];
        for &s in seed {
            if !inside[s] {
                inside[s] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            let mut j = 0;
            while j < list.len() {
                for c in [self.m(a, list[j]), self.m(list[j], a)] {
                    if !inside[c] {
                        inside[c] = true;
                        list.push(c);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Subgroups generated by at most `k` elements.
    pub fn generated_by_at_most(&self, k: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<usize> = Vec::new();
        self.choose(0, k, &mut stack, &mut out);
        out
    }

    fn choose(
        &self,
        from: usize,
        k: usize,
        stack: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        out.insert(self.close(stack));
        if stack.len() == k {
            return;
        }
        for x in from..self.n {
            stack.push(x);
            self.choose(x + 1, k, stack, out);
            stack.pop();
        }
    }

    /// Closes a family of subgroups under pairwise joins.
    pub fn join_closed(&self, family: BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = family.into_iter().collect();
        let mut seen: BTreeSet<Vec<usize>> = all.iter().cloned().collect();
        let mut i = 0;
        while i < all.len() {
            for j in 0..i {
                let mut seed = all[i].clone();
                seed.extend(&all[j]);
                let h = self.close(&seed);
                if seen.insert(h.clone()) {
                    all.push(h);
                }
            }
            i += 1;
        }
        seen
    }

    /// Every subgroup: 3-generated ones, then joins of those.
    pub fn all_subgroups(&self) -> BTreeSet<Vec<usize>> {
        self.join_closed(self.generated_by_at_most(3))
    }

    pub fn centralizer_order(&self, h: &[usize]) -> usize {
        (0..self.n)
            .filter(|&x| h.iter().all(|&y| self.m(x, y) == self.m(y, x)))
            .count()
    }

    /// `(total subgroups, m*, |CD|, delta)`.
    pub fn cd_summary(&self) -> (usize, u64, usize, usize) {
        let subs = self.all_subgroups();
        let measures: Vec<u64> = subs
            .iter()
            .map(|h| (h.len() * self.centralizer_order(h)) as u64)
            .collect();
        let m_star = *measures.iter().max().unwrap();
        let cd = measures.iter().filter(|&&m| m == m_star).count();
        (subs.len(), m_star, cd, subs.len() - cd)
    }
}
