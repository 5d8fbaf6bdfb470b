use std::fmt;
use std::str::FromStr;

use super::{Group, Permutation};
use crate::{is_prime, Error, Limits, Result};

/// A named group family, written in the mini-language used by the CLI:
///
/// | spec       | group                                               |
/// |------------|-----------------------------------------------------|
/// | `c n`      | cyclic of order `n`                                 |
/// | `d n`      | dihedral of order `n`                               |
/// | `q n`      | generalized quaternion of order `n = 2^k`, `k >= 3` |
/// | `m p k`    | `<a, b | a^(p^(k-1)), b^p, a^b = a^(1+p^(k-2))>`     |
/// | `es p`     | extraspecial of order `p^3` and exponent `p^2`      |
/// | `s n`      | symmetric group on `n` points                       |
/// | `A x B`    | direct product                                      |
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    /// Generalized quaternion of order `2^k`.
    Quaternion {
        k: u32,
    },
    /// Modular group of order `p^k`.
    Modular {
        p: usize,
        k: u32,
    },
    /// Extraspecial group of order `p^3` and exponent `p^2`, `p` odd.
    Extraspecial {
        p: usize,
    },
    Symmetric(usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn product(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Product(Box::new(a), Box::new(b))
    }

    pub fn order(&self) -> Option<usize> {
        Some(match self {
            FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n) => *n,
            FamilySpec::Quaternion { k } => 1usize.checked_shl(*k)?,
            FamilySpec::Modular { p, k } => p.checked_pow(*k)?,
            FamilySpec::Extraspecial { p } => p.checked_pow(3)?,
            FamilySpec::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, x| acc.checked_mul(x))?,
            FamilySpec::Product(a, b) => a.order()?.checked_mul(b.order()?)?,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFamilyParameters(m));
        match self {
            FamilySpec::Cyclic(0) => bad("cyclic group needs n >= 1".into()),
            FamilySpec::Dihedral(n) if *n < 4 || n % 2 == 1 => {
                bad(format!("dihedral order must be even and >= 4, got {n}"))
            }
            FamilySpec::Quaternion { k } if *k < 3 => bad(format!(
                "generalized quaternion needs order 2^k with k >= 3, got k = {k}"
            )),
            FamilySpec::Modular { p, k } if !is_prime(*p) || *k < 3 => bad(format!(
                "modular group needs a prime p and k >= 3, got p = {p}, k = {k}"
            )),
            FamilySpec::Extraspecial { p } if !is_prime(*p) || *p == 2 => {
                bad(format!("extraspecial family needs an odd prime, got {p}"))
            }
            FamilySpec::Symmetric(0) => bad("symmetric group needs n >= 1".into()),
            FamilySpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Group> {
        self.validate()?;
        match self.order() {
            Some(n) if n <= limits.max_order => {}
            _ => {
                return Err(Error::GroupTooLarge {
                    cap: limits.max_order,
                })
            }
        }
        let g = match self {
            FamilySpec::Cyclic(n) => metacyclic(*n, 1, 0, |i, _| i, &["a"])?,
            FamilySpec::Dihedral(n) => {
                let m = n / 2;
                metacyclic(
                    m,
                    2,
                    0,
                    move |k, j| if j % 2 == 0 { k } else { (m - k) % m },
                    &["a", "b"],
                )?
            }
            FamilySpec::Quaternion { k } => quaternion(*k)?,
            FamilySpec::Modular { p, k } => modular(*p, *k)?,
            FamilySpec::Extraspecial { p } => modular(*p, 3)?,
            FamilySpec::Symmetric(n) => symmetric(*n, limits)?,
            FamilySpec::Product(a, b) => {
                Group::direct_product(&a.build(limits)?, &b.build(limits)?, limits)?
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

/// Groups with normal form `a^i b^j`, `0 <= i < m`, `0 <= j < t`, where
/// `b^t = a^shift` and `b^j a^k b^-j = a^(act(k, j))`. Element `a^i b^j`
/// is stored at index `i + j * m`.
fn metacyclic(
    m: usize,
    t: usize,
    shift: usize,
    act: impl Fn(usize, usize) -> usize,
    names: &[&str],
) -> Result<Group> {
    let n = m * t;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (i, j) = (x % m, x / m);
        for y in 0..n {
            let (k, l) = (y % m, y / m);
            let mut a = (i + act(k, j)) % m;
            let mut b = j + l;
            if b >= t {
                b -= t;
                a = (a + shift) % m;
            }
            mul.push((a + b * m) as u32);
        }
    }
    let g = Group::from_table(n, mul)?;
    let labels = (0..n)
        .map(|x| normal_form_label(x % m, x / m, names))
        .collect();
    Ok(g.with_labels(labels))
}

fn normal_form_label(i: usize, j: usize, names: &[&str]) -> String {
    let part = |name: &str, e: usize| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    let s = [
        part(names[0], i),
        names.get(1).map(|b| part(b, j)).unwrap_or_default(),
    ]
    .into_iter()
    .filter(|s| !s.is_empty())
    .collect::<Vec<_>>()
    .join(" ");
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn quaternion(k: u32) -> Result<Group> {
    // a of order m = 2^(k-1), b^2 = a^(m/2), b^-1 a b = a^-1
    let m = 1usize << (k - 1);
    metacyclic(
        m,
        2,
        m / 2,
        move |x, j| if j % 2 == 0 { x } else { (m - x) % m },
        &["a", "b"],
    )
}

fn modular(p: usize, k: u32) -> Result<Group> {
    // a of order m = p^(k-1), b of order p, b^-1 a b = a^r with r = 1 + p^(k-2).
    // Conjugating the other way, b a b^-1 = a^s with s = r^-1 = 1 - p^(k-2) mod m.
    let m = p.pow(k - 1);
    let s = (m + 1 - p.pow(k - 2)) % m;
    let mut powers = vec![1usize; p];
    for j in 1..p {
        powers[j] = powers[j - 1] * s % m;
    }
    metacyclic(m, p, 0, move |x, j| x * powers[j] % m, &["a", "b"])
}

fn symmetric(n: usize, limits: &Limits) -> Result<Group> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::new((0..n).map(|i| (i + 1) % n).collect())?);
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(Permutation::new(t)?);
    }
    Group::from_generators(n, &gens, None, limits)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "c {n}"),
            FamilySpec::Dihedral(n) => write!(f, "d {n}"),
            FamilySpec::Quaternion { k } => write!(f, "q {}", 1u64 << k),
            FamilySpec::Modular { p, k } => write!(f, "m {p} {k}"),
            FamilySpec::Extraspecial { p } => write!(f, "es {p}"),
            FamilySpec::Symmetric(n) => write!(f, "s {n}"),
            FamilySpec::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Splits `s3` into `s`, `3` so specs can be written without spaces.
fn split_compact(token: &str) -> Vec<&str> {
    match token.find(|c: char| c.is_ascii_digit()) {
        Some(i) if i > 0 && token[..i].chars().all(|c| c.is_ascii_alphabetic()) => {
            vec![&token[..i], &token[i..]]
        }
        _ => vec![token],
    }
}

/// A non-negative integer, or `a^b`.
fn parse_param(word: &str) -> Option<usize> {
    match word.split_once('^') {
        Some((a, b)) => a.parse::<usize>().ok()?.checked_pow(b.parse().ok()?),
        None => word.parse().ok(),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::BadSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let tokens: Vec<&str> = s.split_whitespace().flat_map(split_compact).collect();
        if tokens.is_empty() {
            return Err(fail("empty spec"));
        }
        let mut factors = Vec::new();
        for part in tokens.split(|t| t.eq_ignore_ascii_case("x")) {
            let num = |i: usize| -> Result<usize> {
                let word = part.get(i).ok_or_else(|| fail("missing parameter"))?;
                parse_param(word)
                    .ok_or_else(|| fail("parameters must be non-negative integers or powers `a^b`"))
            };
            let arity = |n: usize| -> Result<()> {
                if part.len() == n + 1 {
                    Ok(())
                } else {
                    Err(fail(&format!("`{}` takes {n} parameter(s)", part[0])))
                }
            };
            let Some(kind) = part.first() else {
                return Err(fail("empty factor around `x`"));
            };
            let spec = match kind.to_ascii_lowercase().as_str() {
                "c" => {
                    arity(1)?;
                    FamilySpec::Cyclic(num(1)?)
                }
                "d" => {
                    arity(1)?;
                    FamilySpec::Dihedral(num(1)?)
                }
                "q" => {
                    arity(1)?;
                    let n = num(1)?;
                    if !n.is_power_of_two() {
                        return Err(fail("quaternion order must be a power of two"));
                    }
                    FamilySpec::Quaternion {
                        k: n.trailing_zeros(),
                    }
                }
                "m" => {
                    arity(2)?;
                    FamilySpec::Modular {
                        p: num(1)?,
                        k: num(2)? as u32,
                    }
                }
                "es" => {
                    arity(1)?;
                    FamilySpec::Extraspecial { p: num(1)? }
                }
                "s" => {
                    arity(1)?;
                    FamilySpec::Symmetric(num(1)?)
                }
                other => return Err(fail(&format!("unknown family `{other}`"))),
            };
            spec.validate().map_err(|e| fail(&e.to_string()))?;
            factors.push(spec);
        }
        let mut it = factors.into_iter();
        let first = it.next().ok_or_else(|| fail("empty spec"))?;
        Ok(it.fold(first, FamilySpec::product))
    }
}
