//! Isomorphism testing by invariant filtering followed by a backtracking
//! search over images of a generating sequence.

use std::collections::BTreeMap;

use super::Group;
use crate::bitset::Bitset;

/// Cheap isomorphism invariants. Unequal invariants prove two groups
/// non-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    /// Histogram of per-element signatures, see [`element_signature`].
    pub signatures: BTreeMap<(usize, usize, usize), usize>,
}

impl Invariants {
    pub fn of(g: &Group) -> Self {
        let sigs = signatures(g);
        let mut signatures = BTreeMap::new();
        for s in sigs {
            *signatures.entry(s).or_insert(0) += 1;
        }
        let center_order = (0..g.order())
            .filter(|&x| g.element_centralizers()[x].count() == g.order())
            .count();
        Invariants {
            order: g.order(),
            abelian: center_order == g.order(),
            center_order,
            derived_order: derived_subgroup(g).count(),
            signatures,
        }
    }

    /// Element-order histogram, `hist[k]` = number of elements of order `k`.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (&(ord, _, _), &n) in &self.signatures {
            *out.entry(ord).or_insert(0) += n;
        }
        out
    }
}

/// `(order, centralizer size, number of square roots)` for each element;
/// all three are preserved by isomorphisms.
fn signatures(g: &Group) -> Vec<(usize, usize, usize)> {
    let n = g.order();
    let mut roots = vec![0usize; n];
    for y in 0..n {
        roots[g.mul(y, y)] += 1;
    }
    let cents = g.element_centralizers();
    (0..n)
        .map(|x| (g.element_order(x), cents[x].count(), roots[x]))
        .collect()
}

fn derived_subgroup(g: &Group) -> Bitset {
    let n = g.order();
    let mut seed = Bitset::new(n);
    seed.insert(0);
    for a in 0..n {
        for b in 0..n {
            let comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            seed.insert(comm);
        }
    }
    g.closure(&seed).members().clone()
}

/// True iff a multiplication-preserving bijection between `g` and `h` exists.
pub fn is_isomorphic(g: &Group, h: &Group) -> bool {
    if g.order() != h.order() {
        return false;
    }
    if g.order() <= 3 {
        return true;
    }
    if Invariants::of(g) != Invariants::of(h) {
        return false;
    }
    if g.is_abelian() {
        // finite abelian groups are determined by their element-order histogram
        return true;
    }
    let gens = generating_sequence(g);
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| sig_h[y] == sig_g[x]).collect())
        .collect();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        candidates: &candidates,
        images: Vec::with_capacity(gens.len()),
        forward: vec![usize::MAX; g.order()],
        backward: vec![usize::MAX; h.order()],
    };
    search.extend()
}

/// Greedy generating sequence: repeatedly add the element of largest order
/// outside the subgroup generated so far.
fn generating_sequence(g: &Group) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut current = g.trivial_subgroup();
    let mut gens = Vec::new();
    for x in by_order {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(x) {
            current = g.extend_subgroup(&current, x);
            gens.push(x);
        }
    }
    gens
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let level = self.images.len();
        if level == self.gens.len() {
            return true;
        }
        for &y in &self.candidates[level] {
            self.images.push(y);
            if self.consistent() && self.extend() {
                return true;
            }
            self.images.pop();
        }
        false
    }

    /// Builds the map on the subgroup generated by the assigned generators,
    /// checking `phi(u * x_j) = phi(u) * y_j` and injectivity along the way.
    fn consistent(&mut self) -> bool {
        self.forward.fill(usize::MAX);
        self.backward.fill(usize::MAX);
        self.forward[0] = 0;
        self.backward[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let fu = self.forward[u];
            for (j, &y) in self.images.iter().enumerate() {
                let v = self.g.mul(u, self.gens[j]);
                let fv = self.h.mul(fu, y);
                match self.forward[v] {
                    usize::MAX => {
                        if self.backward[fv] != usize::MAX {
                            return false;
                        }
                        self.forward[v] = fv;
                        self.backward[fv] = v;
                        queue.push(v);
                    }
                    known if known != fv => return false,
                    _ => {}
                }
            }
        }
        true
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

    #[test]
    fn crt_and_basic_distinctions() {
        assert!(is_isomorphic(&build("c 6"), &build("c 2 x c 3")));
        assert!(!is_isomorphic(&build("q 8"), &build("d 8")));
        assert!(!is_isomorphic(&build("c 4"), &build("c 2 x c 2")));
        assert!(is_isomorphic(&build("s 3"), &build("d 6")));
        assert!(is_isomorphic(&build("s 3 x c 1"), &build("s 3")));
    }

    #[test]
    fn extraspecial_is_modular_27() {
        assert!(is_isomorphic(&build("es 3"), &build("m 3 3")));
        assert!(is_isomorphic(&build("es 5"), &build("m 5 3")));
    }

    #[test]
    fn order_16_nonabelian_pairs() {
        let names = ["d 16", "q 16", "m 2 4", "q 8 x c 2", "d 8 x c 2"];
        let groups: Vec<Group> = names.iter().map(|s| build(s)).collect();
        for i in 0..groups.len() {
            assert!(is_isomorphic(&groups[i], &groups[i]));
            for j in i + 1..groups.len() {
                assert!(
                    !is_isomorphic(&groups[i], &groups[j]),
                    "{} vs {}",
                    names[i],
                    names[j]
                );
            }
        }
    }

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let g = build("m 2 5");
        // conjugate the table by a fixed permutation of the non-identity elements
        let n = g.order();
        let perm: Vec<usize> = std::iter::once(0).chain((1..n).rev()).collect();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u32;
            }
        }
        let h = Group::from_table(n, mul).unwrap();
        assert!(is_isomorphic(&g, &h));
        assert!(!is_isomorphic(&h, &build("d 32")));
    }
}
