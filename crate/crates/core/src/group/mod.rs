//! Finite groups as multiplication tables.

mod family;
mod iso;
mod perm;

use std::fmt;
use std::sync::OnceLock;

use crate::bitset::Bitset;
use crate::{Error, Limits, Result};

pub use family::FamilySpec;
pub use iso::{is_isomorphic, Invariants};
pub use perm::Permutation;

/// Tables are validated for associativity up to this order.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 512;

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. The value is immutable once built.
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_orders: Vec<u32>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    centralizers: OnceLock<Vec<Bitset>>,
}

impl Group {
    /// Builds a group from a row-major `n x n` table, checking the group
    /// axioms. Associativity is checked exhaustively up to
    /// [`ASSOCIATIVITY_CHECK_MAX`].
    pub fn from_table(order: usize, mul: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable(format!(
                    "element 0 is not a two-sided identity at {x}"
                )));
            }
        }
        let mut seen = Bitset::new(order);
        for r in 0..order {
            seen = Bitset::new(order);
            for c in 0..order {
                if !seen.insert(mul[r * order + c] as usize) {
                    return Err(Error::InvalidTable(format!("row {r} repeats an entry")));
                }
            }
        }
        for c in 0..order {
            seen = Bitset::new(order);
            for r in 0..order {
                if !seen.insert(mul[r * order + c] as usize) {
                    return Err(Error::InvalidTable(format!("column {c} repeats an entry")));
                }
            }
        }
        drop(seen);
        if order <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..order {
                let row_a = &mul[a * order..(a + 1) * order];
                for b in 0..order {
                    let ab = row_a[b] as usize;
                    let row_ab = &mul[ab * order..(ab + 1) * order];
                    let row_b = &mul[b * order..(b + 1) * order];
                    for c in 0..order {
                        if row_ab[c] != row_a[row_b[c] as usize] {
                            return Err(Error::InvalidTable(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).unwrap();
            inv[x] = y as u32;
        }
        let mut elem_orders = vec![0u32; order];
        for x in 0..order {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = mul[y * order + x] as usize;
                k += 1;
            }
            elem_orders[x] = k;
        }
        Ok(Group {
            order,
            mul,
            inv,
            elem_orders,
            labels: None,
            name: None,
            centralizers: OnceLock::new(),
        })
    }

    /// Closure of a set of permutations on `0..degree` under composition.
    ///
    /// Elements are ordered breadth-first by word length in the
    /// generators, identity first, ties broken by the lexicographic order of
    /// the image arrays. Products compose left to right: `(a*b)(i) = b(a(i))`.
    pub fn from_generators(
        degree: usize,
        gens: &[Permutation],
        expected_order: Option<usize>,
        limits: &Limits,
    ) -> Result<Self> {
        let elements = perm::closure(degree, gens, limits.max_order)?;
        if let Some(expected) = expected_order {
            if expected != elements.len() {
                return Err(Error::OrderMismatch {
                    expected,
                    actual: elements.len(),
                });
            }
        }
        let index: std::collections::HashMap<&Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&a.then(b)]);
            }
        }
        let mut g = Group::from_table(n, mul)?;
        g.labels = Some(elements.iter().map(|p| p.to_string()).collect());
        Ok(g)
    }

    /// Direct product with pair `(i, j)` stored at index `i * |h| + j`.
    pub fn direct_product(g: &Group, h: &Group, limits: &Limits) -> Result<Self> {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        if n > limits.max_order {
            return Err(Error::GroupTooLarge {
                cap: limits.max_order,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            let (a1, a2) = (a / k, a % k);
            for b in 0..n {
                let (b1, b2) = (b / k, b % k);
                mul.push((g.mul(a1, b1) * k + h.mul(a2, b2)) as u32);
            }
        }
        let mut out = Group::from_table(n, mul)?;
        if g.labels.is_some() || h.labels.is_some() {
            out.labels = Some(
                (0..n)
                    .map(|x| format!("({}, {})", g.label(x / k), h.label(x % k)))
                    .collect(),
            );
        }
        out.name = match (&g.name, &h.name) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        Ok(out)
    }

    /// The subgroup `members` as a group in its own right.
    ///
    /// Returns the group together with the map from its element indices to
    /// indices in `self`; members keep their relative order, so the
    /// identity stays at 0.
    pub fn induced(&self, members: &Bitset) -> Result<(Group, Vec<usize>)> {
        let elems: Vec<usize> = members.iter().collect();
        let mut pos = vec![u32::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i as u32;
        }
        let mut mul = Vec::with_capacity(elems.len() * elems.len());
        for &a in &elems {
            for &b in &elems {
                let p = pos[self.mul(a, b)];
                if p == u32::MAX {
                    return Err(Error::NotASubgroup);
                }
                mul.push(p);
            }
        }
        let mut sub = Group::from_table(elems.len(), mul)?;
        if let Some(labels) = &self.labels {
            sub.labels = Some(elems.iter().map(|&e| labels[e].clone()).collect());
        }
        Ok((sub, elems))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^-1 * y * x`
    #[inline]
    pub fn conjugate(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), y), x)
    }

    pub fn pow(&self, x: usize, mut e: usize) -> usize {
        let mut acc = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least `m >= 1` with `x^m = 1`.
    #[inline]
    pub fn element_order(&self, x: usize) -> usize {
        self.elem_orders[x] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.elem_orders.iter().map(|&o| o as usize)
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    /// Centralizer of each single element, computed once.
    pub fn element_centralizers(&self) -> &[Bitset] {
        self.centralizers.get_or_init(|| {
            let n = self.order;
            let mut out = vec![Bitset::new(n); n];
            for a in 0..n {
                out[a].insert(a);
                for b in a + 1..n {
                    if self.commutes(a, b) {
                        out[a].insert(b);
                        out[b].insert(a);
                    }
                }
                out[a].insert(0);
            }
            out
        })
    }
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elem_orders: self.elem_orders.clone(),
            labels: self.labels.clone(),
            name: self.name.clone(),
            centralizers: OnceLock::new(),
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order)
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(v: &[&[usize]]) -> Vec<Permutation> {
        v.iter()
            .map(|p| Permutation::new(p.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn s3_from_generators() {
        let g = Group::from_generators(
            3,
            &perms(&[&[1, 2, 0], &[1, 0, 2]]),
            None,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.label(0), "()");
        let mut hist = [0; 7];
        for o in g.element_orders() {
            hist[o] += 1;
        }
        assert_eq!(&hist[1..4], &[1, 3, 2]);
    }

    #[test]
    fn cyclic_from_four_cycle() {
        let g = Group::from_generators(4, &perms(&[&[1, 2, 3, 0]]), Some(4), &Limits::default())
            .unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1), 4);
    }

    #[test]
    fn bfs_ordering_is_layered_then_lexicographic() {
        let g = Group::from_generators(
            3,
            &perms(&[&[1, 0, 2], &[1, 2, 0]]),
            None,
            &Limits::default(),
        )
        .unwrap();
        let labels = g.labels().unwrap();
        // layer 1 holds the two generators, lexicographically sorted by image
        assert_eq!(labels[1], "(0,1)");
        assert_eq!(labels[2], "(0,1,2)");
    }

    #[test]
    fn q8_regular_representation_has_one_involution() {
        // Right-regular action of Q8 with elements 1,i,j,k,-1,-i,-j,-k at 0..8.
        let i = [1, 4, 7, 2, 5, 0, 3, 6];
        let j = [2, 3, 4, 5, 6, 7, 0, 1];
        let g = Group::from_generators(8, &perms(&[&i, &j]), Some(8), &Limits::default()).unwrap();
        // oracle: brute-force order count straight from the table
        let involutions = (0..8).filter(|&x| x != 0 && g.mul(x, x) == 0).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn order_mismatch_and_cap() {
        let gens = perms(&[&[1, 2, 0]]);
        assert!(matches!(
            Group::from_generators(3, &gens, Some(6), &Limits::default()),
            Err(Error::OrderMismatch {
                expected: 6,
                actual: 3
            })
        ));
        let small = Limits {
            max_order: 2,
            ..Limits::default()
        };
        assert!(matches!(
            Group::from_generators(3, &gens, None, &small),
            Err(Error::GroupTooLarge { cap: 2 })
        ));
    }

    #[test]
    fn rejects_bad_tables() {
        // not a latin square
        assert!(Group::from_table(2, vec![0, 1, 1, 1]).is_err());
        // identity misplaced
        assert!(Group::from_table(2, vec![1, 0, 0, 1]).is_err());
        // latin square with identity 0 but not associative (order 5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0, //
        ];
        assert!(matches!(
            Group::from_table(5, loop5),
            Err(Error::InvalidTable(m)) if m.contains("associative")
        ));
    }

    #[test]
    fn direct_product_encoding() {
        let c2 = FamilySpec::Cyclic(2).build(&Limits::default()).unwrap();
        let c3 = FamilySpec::Cyclic(3).build(&Limits::default()).unwrap();
        let g = Group::direct_product(&c2, &c3, &Limits::default()).unwrap();
        assert_eq!(g.order(), 6);
        // (1, 2) * (1, 2) = (0, 1)
        assert_eq!(g.mul(5, 5), 1);
        assert!(is_isomorphic(
            &g,
            &FamilySpec::Cyclic(6).build(&Limits::default()).unwrap()
        ));
    }

    #[test]
    fn induced_keeps_identity_first() {
        let g = FamilySpec::Cyclic(6).build(&Limits::default()).unwrap();
        let members = Bitset::from_indices(6, [0, 2, 4]);
        let (h, map) = g.induced(&members).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(map, vec![0, 2, 4]);
        assert!(g.induced(&Bitset::from_indices(6, [0, 1])).is_err());
    }
}
