use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// A permutation of `0..degree` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
        }
        Ok(Permutation(images.into_iter().map(|x| x as u32).collect()))
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x.to_string());
                x = self.0[x] as usize;
            }
            write!(f, "({})", cycle.join(","))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Breadth-first closure; layers are sorted so the element order depends
/// only on the generator set.
pub(super) fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(format!(
            "generator {bad} has degree {}, expected {degree}",
            bad.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut layer_start = 0;
    while layer_start < out.len() {
        let layer_end = out.len();
        let mut next = Vec::new();
        for p in &out[layer_start..layer_end] {
            for g in gens {
                let q = p.then(g);
                if !seen.contains(&q) {
                    seen.insert(q.clone());
                    next.push(q);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        next.sort();
        out.extend(next);
        layer_start = layer_end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_compose() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(a.to_string(), "(0,1,2)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        // 0 -a-> 1 -b-> 0
        assert_eq!(a.then(&b).images().collect::<Vec<_>>(), vec![0, 2, 1]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }
}
