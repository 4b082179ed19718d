//! Equivalence relations as partitions, and dense pair sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Union-find with path halving. Roots are arbitrary; use
/// [`Partition::from_union_find`] for canonical least representatives.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A partition of `0..n`; every element maps to the least member of its
/// block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    rep: Vec<usize>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition {
            rep: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Partition { rep: vec![0; n] }
    }

    /// Builds a partition from explicit blocks; every element of `0..n`
    /// must appear exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut rep = vec![usize::MAX; n];
        for block in blocks {
            let Some(&least) = block.iter().min() else {
                return Err(Error::MalformedTable {
                    table: "rel",
                    detail: "empty block".into(),
                });
            };
            for &x in block {
                if x >= n {
                    return Err(Error::MalformedTable {
                        table: "rel",
                        detail: alloc::format!("index {x} outside carrier of size {n}"),
                    });
                }
                if rep[x] != usize::MAX {
                    return Err(Error::MalformedTable {
                        table: "rel",
                        detail: alloc::format!("element {x} appears in two blocks"),
                    });
                }
                rep[x] = least;
            }
        }
        if let Some(x) = rep.iter().position(|&r| r == usize::MAX) {
            return Err(Error::MalformedTable {
                table: "rel",
                detail: alloc::format!("element {x} is in no block"),
            });
        }
        Ok(Partition { rep })
    }

    /// Block labels: elements with equal labels are related.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut uf = UnionFind::new(labels.len());
        let mut first: Vec<(usize, usize)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match first.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, j)) => {
                    uf.union(i, j);
                }
                None => first.push((l, i)),
            }
        }
        Self::from_union_find(&mut uf)
    }

    pub fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let mut least = vec![usize::MAX; n];
        let mut rep = vec![0; n];
        for x in 0..n {
            let r = uf.find(x);
            if least[r] == usize::MAX {
                least[r] = x;
            }
            rep[x] = least[r];
        }
        Partition { rep }
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn rep(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn block_count(&self) -> usize {
        self.rep
            .iter()
            .enumerate()
            .filter(|(i, r)| *i == **r)
            .count()
    }

    pub fn is_total(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    pub fn is_discrete(&self) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| i == r)
    }

    /// Blocks in order of their least element, members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.rep.len()];
        for (x, &r) in self.rep.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }

    pub fn block_of(&self, x: usize) -> Vec<usize> {
        let r = self.rep[x];
        (0..self.rep.len()).filter(|&y| self.rep[y] == r).collect()
    }

    pub fn to_relation(&self) -> Relation {
        let n = self.rep.len();
        let mut rel = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if self.related(a, b) {
                    rel.insert(a, b);
                }
            }
        }
        rel
    }

    /// Re-indexes through `new_of_old`, a bijection.
    pub fn permute(&self, new_of_old: &[usize]) -> Self {
        let mut uf = UnionFind::new(self.rep.len());
        for (old, &r) in self.rep.iter().enumerate() {
            uf.union(new_of_old[old], new_of_old[r]);
        }
        Self::from_union_find(&mut uf)
    }
}

/// A set of ordered pairs over `0..n`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::MalformedTable {
                    table: "relation",
                    detail: alloc::format!("pair ({a}, {b}) outside carrier of size {n}"),
                });
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    /// True if the pair was new.
    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        let slot = &mut self.bits[a * self.n + b];
        let fresh = !*slot;
        *slot = true;
        fresh
    }

    pub fn pair_count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b)
    }

    pub fn is_subset_of_partition(&self, p: &Partition) -> Option<(usize, usize)> {
        self.pairs().find(|&(a, b)| !p.related(a, b))
    }

    /// First element without its reflexive pair.
    pub fn reflexivity_violation(&self) -> Option<usize> {
        (0..self.n).find(|&i| !self.contains(i, i))
    }

    pub fn symmetry_violation(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(a, b)| !self.contains(b, a))
    }

    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.pairs() {
            for c in 0..self.n {
                if self.contains(b, c) && !self.contains(a, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    pub fn is_equivalence(&self) -> bool {
        self.reflexivity_violation().is_none()
            && self.symmetry_violation().is_none()
            && self.transitivity_violation().is_none()
    }

    /// For each element, the least element related to it (itself when it
    /// has no partner). Meaningful as a class representative only for
    /// equivalences.
    pub fn least_partners(&self) -> Vec<usize> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .find(|&j| self.contains(i, j))
                    .map_or(i, |j| j.min(i))
            })
            .collect()
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_equivalence() {
            return None;
        }
        let mut uf = UnionFind::new(self.n);
        for (a, b) in self.pairs() {
            uf.union(a, b);
        }
        Some(Partition::from_union_find(&mut uf))
    }

    /// Restriction to the sub-carrier `members` (new index = position).
    pub fn restrict(&self, members: &[usize]) -> Relation {
        let mut r = Relation::empty(members.len());
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.contains(a, b) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn permute(&self, new_of_old: &[usize]) -> Relation {
        let mut r = Relation::empty(self.n);
        for (a, b) in self.pairs() {
            r.insert(new_of_old[a], new_of_old[b]);
        }
        r
    }
}
