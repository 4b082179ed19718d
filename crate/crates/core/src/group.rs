//! Ordinary finite groups given by multiplication tables.
//!
//! These are inputs for generators and for [`crate::cgroup::from_group`];
//! the group operation is written additively throughout the crate, even
//! when it is not commutative.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    add: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
}

impl FiniteGroup {
    /// Checks the group axioms and derives zero and negation.
    pub fn new(names: Vec<String>, add: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if add.len() != n * n {
            return Err(Error::MalformedTable {
                table: "add",
                detail: format!("expected {} entries, found {}", n * n, add.len()),
            });
        }
        if let Some(&v) = add.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable {
                table: "add",
                detail: format!("entry {v} out of range"),
            });
        }
        let op = |a: usize, b: usize| add[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op(a, op(b, c)) != op(op(a, b), c) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let zero = (0..n)
            .find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| op(a, b) == zero && op(b, a) == zero)
                .ok_or_else(|| Error::NotAGroup(format!("`{}` has no inverse", names[a])))?;
            neg.push(inv);
        }
        Ok(FiniteGroup {
            names,
            add,
            zero,
            neg,
        })
    }

    /// Z/n with elements named by their residues (zero-padded above 10 so
    /// that name order is numeric order).
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let width = format!("{}", n - 1).len();
        let names = (0..n).map(|i| format!("{i:0width$}")).collect();
        let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        FiniteGroup::new(names, add).expect("cyclic group table")
    }

    /// The symmetric group on three letters: `e`, rotations `r`, `r2`, and
    /// reflections `s`, `sr`, `sr2` (with `sr` meaning s after r).
    pub fn symmetric3() -> Self {
        // element k <-> s^(k/3) r^(k%3); s r = r^2 s
        let names: Vec<String> = ["e", "r", "r2", "s", "sr", "sr2"]
            .iter()
            .map(|s| String::from(*s))
            .collect();
        let mut add = Vec::with_capacity(36);
        for a in 0..6usize {
            for b in 0..6usize {
                let (sa, ra) = (a / 3, a % 3);
                let (sb, rb) = (b / 3, b % 3);
                // s^sa r^ra s^sb r^rb = s^(sa+sb) r^(ra*(-1)^sb + rb)
                let r = if sb == 0 {
                    (ra + rb) % 3
                } else {
                    (3 - ra + rb) % 3
                };
                add.push(((sa + sb) % 2) * 3 + r);
            }
        }
        FiniteGroup::new(names, add).expect("S3 table")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Direct product with names `(a,b)`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let mut names = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                names.push(format!("({},{})", self.names[a], other.names[b]));
            }
        }
        let mut add = Vec::with_capacity(n * n * m * m);
        for x in 0..n * m {
            for y in 0..n * m {
                add.push(self.add(x / m, y / m) * m + other.add(x % m, y % m));
            }
        }
        FiniteGroup::new(names, add).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    /// First non-commuting pair, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.add(a, b) != self.add(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// Checks that `map` (from `self` into `target`) is a homomorphism.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        let n = self.order();
        map.len() == n
            && map.iter().all(|&v| v < target.order())
            && (0..n).all(|a| (0..n).all(|b| map[self.add(a, b)] == target.add(map[a], map[b])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.add(3, 2), 1);
        assert_eq!(z4.neg(1), 3);
        assert!(z4.is_abelian());
        let z12 = FiniteGroup::cyclic(12);
        assert_eq!(z12.name(3), "03");
    }

    #[test]
    fn s3_is_nonabelian_group() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let r = s3.index_of("r").unwrap();
        let s = s3.index_of("s").unwrap();
        assert_eq!(s3.name(s3.add(s, r)), "sr");
        assert_eq!(s3.name(s3.add(r, s)), "sr2");
        assert_eq!(s3.neg(r), s3.index_of("r2").unwrap());
    }

    #[test]
    fn rejects_non_groups() {
        let names = alloc::vec![String::from("a"), String::from("b")];
        assert!(matches!(
            FiniteGroup::new(names, alloc::vec![0, 0, 0, 0]),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn product_order() {
        let k = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        assert_eq!(k.order(), 4);
        assert!((0..4).all(|a| k.add(a, a) == k.zero()));
    }
}
